// Pure HTML renderers. Everything rendered comes from the plan JSON; the
// client never invents activity names or numbers.

import type { CompareResponse, DestinationGuess, Genre, ItineraryMetrics, PlanRecord } from './types.js';
import { GENRES } from './types.js';

export function escapeHtml(text: string): string {
  return text
    .replaceAll('&', '&amp;')
    .replaceAll('<', '&lt;')
    .replaceAll('>', '&gt;')
    .replaceAll('"', '&quot;')
    .replaceAll("'", '&#39;');
}

/** Majority genre per day, counted from the record's own genre map. */
export function dayGenreCounts(record: PlanRecord): Record<Genre, number> {
  const counts: Record<Genre, number> = { historical: 0, amusement: 0, natural: 0, cultural: 0 };
  for (const day of record.itinerary.days) {
    const tally = new Map<Genre, number>();
    for (const activity of day.activities) {
      const genre = record.genres[activity.name];
      if (genre) tally.set(genre, (tally.get(genre) ?? 0) + 1);
    }
    let best: Genre | null = null;
    for (const genre of GENRES) {
      const n = tally.get(genre) ?? 0;
      if (n > 0 && (best === null || n > (tally.get(best) ?? 0))) best = genre;
    }
    if (best !== null) counts[best] += 1;
  }
  return counts;
}

export function renderDayCards(record: PlanRecord): string {
  const cards = record.itinerary.days.map((day) => {
    const items = day.activities.map((activity) => {
      const genre = record.genres[activity.name] ?? '';
      const badge = genre
        ? ` <span class="badge genre-${genre}">${escapeHtml(genre)}</span>`
        : '';
      return (
        `<li class="activity" data-name="${escapeHtml(activity.name)}">` +
        `<span class="time">${escapeHtml(activity.time)}</span> ` +
        `<span class="name">${escapeHtml(activity.name)}</span>${badge}` +
        `<div class="note">${escapeHtml(activity.note)}</div></li>`
      );
    });
    const notes = day.notes.map((note) => `<p class="day-note">${escapeHtml(note)}</p>`);
    return (
      `<section class="day-card" data-day="${day.day}">` +
      `<h3>Day ${day.day}</h3><ul>${items.join('')}</ul>${notes.join('')}</section>`
    );
  });
  const mode = record.itinerary.mode === 'with-preferences' ? 'preference-weighted' : 'generic';
  return (
    `<header class="plan-header"><h2>${escapeHtml(record.destination)}</h2>` +
    `<span class="mode">${mode}</span></header>` +
    cards.join('')
  );
}

function metricsBlock(label: string, metrics: ItineraryMetrics): string {
  const shares = GENRES.map(
    (genre) =>
      `<li>${genre}: ${(metrics.genre_shares[genre] * 100).toFixed(1)}%</li>`,
  ).join('');
  return (
    `<div class="compare-col"><h4>${escapeHtml(label)}</h4>` +
    `<p class="divergence">divergence ${metrics.divergence.toFixed(4)}</p>` +
    `<p>activities/day ${metrics.mean_activities_per_day.toFixed(2)}</p>` +
    `<ul class="shares">${shares}</ul></div>`
  );
}

export function renderComparison(payload: CompareResponse): string {
  const { report } = payload;
  const verdict =
    report.divergence_difference < 0
      ? 'The saved plan follows your ratings more closely.'
      : report.divergence_difference > 0
        ? 'The alternative follows the ratings more closely.'
        : 'Both plans follow the ratings equally.';
  return (
    `<div class="comparison">` +
    metricsBlock('saved plan', report.first) +
    metricsBlock('alternative', report.second) +
    `<p class="difference" data-difference="${report.divergence_difference}">` +
    `difference ${report.divergence_difference.toFixed(4)} &mdash; ${escapeHtml(verdict)}</p></div>`
  );
}

export function renderGuess(guess: DestinationGuess): string {
  const pct = Math.round(guess.confidence * 100);
  return (
    `<span class="guess">Looks like you are planning a trip to ` +
    `<strong>${escapeHtml(guess.destination)}</strong> (${pct}% of tab matches). ` +
    `Confirm or type another destination.</span>`
  );
}

export function renderBanner(message: string): string {
  return `<div class="banner error" role="alert">${escapeHtml(message)}</div>`;
}
