// UI contract against the mock-backed service, using responses captured
// from it verbatim (tests/fixtures/*.json).

import assert from 'node:assert/strict';
import { test } from 'node:test';

import { ApiClient } from '../src/api.js';
import { dayGenreCounts, renderDayCards } from '../src/render.js';
import {
  applyPlan,
  beginRequest,
  buildPlanRequest,
  canSubmit,
  initialState,
  setDays,
  setDestination,
  setSlider,
} from '../src/state.js';
import { captureTabs } from '../src/tabs.js';
import type { DestinationGuess, Genre, PlanRecord } from '../src/types.js';
import { GENRES } from '../src/types.js';
import { fakeFetch, jsonResponse, loadFixture } from './helpers.js';

const plan = loadFixture<PlanRecord>('plan_response.json');
const guess = loadFixture<DestinationGuess>('infer_response.json');

function renderedDayGenreCounts(html: string): Record<Genre, number> {
  const counts: Record<Genre, number> = { historical: 0, amusement: 0, natural: 0, cultural: 0 };
  const cards = html.split('<section class="day-card"').slice(1);
  for (const card of cards) {
    const tally = new Map<Genre, number>();
    for (const match of card.matchAll(/class="badge genre-(\w+)"/g)) {
      const genre = match[1] as Genre;
      tally.set(genre, (tally.get(genre) ?? 0) + 1);
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

test('sliders (5,1,1,1) over 4 days render day counts equal to the service response', async () => {
  let state = setDestination(initialState(), 'paris');
  state = setDays(state, 4);
  state = setSlider(state, 'historical', 5);
  state = setSlider(state, 'amusement', 1);
  state = setSlider(state, 'natural', 1);
  state = setSlider(state, 'cultural', 1);
  assert.equal(canSubmit(state), true);

  const { fetchFn, calls } = fakeFetch(() => jsonResponse(plan));
  const api = new ApiClient('http://svc.test', fetchFn);
  const body = buildPlanRequest(state);
  assert.deepEqual(body.preferences, { historical: 5, amusement: 1, natural: 1, cultural: 1 });
  assert.equal(body.days, 4);

  const { state: started, seq } = beginRequest(state);
  state = applyPlan(started, seq, await api.planTrip(body));
  assert.deepEqual(calls[0].body, body);
  assert.ok(state.plan);

  const html = renderDayCards(state.plan!);
  assert.equal(state.plan!.itinerary.days.length, 4);
  assert.deepEqual(renderedDayGenreCounts(html), dayGenreCounts(state.plan!));
});

test('tab capture surfaces the expected destination for the fixture tab set', async () => {
  const fixtureTabs = [
    { url: 'https://blog.example/things-to-do-in-bangalore', title: 'Weekend guide' },
    { url: 'https://mail.example/inbox', title: 'Inbox' },
  ];
  const fake = { tabs: { query: async () => fixtureTabs } };
  const captured = await captureTabs(fake);
  assert.ok(captured && captured.length === 2);

  const { fetchFn, calls } = fakeFetch(() => jsonResponse(guess));
  const api = new ApiClient('http://svc.test', fetchFn);
  const got = await api.inferDestination(captured!);
  assert.deepEqual(calls[0].body, { tabs: captured });
  // "bangalore" is the only gazetteer place in the fixture tabs, so the
  // frequency-count oracle can only answer bangalore with confidence 1.
  assert.equal(got.destination, 'bangalore');
  assert.equal(got.confidence, 1.0);
});

test('the client blocks days below one before any request is made', async () => {
  let state = setDestination(initialState(), 'paris');
  state = setDays(state, 0);
  assert.equal(canSubmit(state), false);

  const { fetchFn, calls } = fakeFetch(() => jsonResponse(plan));
  const api = new ApiClient('http://svc.test', fetchFn);
  if (canSubmit(state)) {
    await api.planTrip(buildPlanRequest(state)); // unreachable by design
  }
  assert.equal(calls.length, 0);
});
