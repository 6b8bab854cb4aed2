"""Preference-weighted itinerary planning.

Covers the tail of the pipeline: tagging attractions with one of the four
genres, apportioning trip days to genres by the user's 1-5 ratings,
rendering the generation prompt, parsing and validating the generator's
reply, and scoring two itineraries against each other.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DayCountMismatch,
    EmptyDictionary,
    EmptyPools,
    MissingSummary,
    UnparseableItinerary,
)
from .extraction import AttractionDictionary
from .summarizer import HttpGateway, LlmConfig

GENRES = ("historical", "amusement", "natural", "cultural")
DEFAULT_GENRE = "cultural"
DEFAULT_RATING = 3
ATTRACTIONS_PER_DAY = 3

PROMPT_HEADER = (
    "Generate a detailed itinerary for me for a {days} day trip to "
    "{destination} and here are the suggested places I would like to cover:"
)
PREFERENCE_CLAUSE = (
    "My preference ratings from 1 to 5 are: Historical={historical}, "
    "Amusement={amusement}, Natural={natural}, Cultural={cultural}. "
    "Allocate days in proportion to these ratings."
)
RETRY_SUFFIX = (
    "\n\nYour previous reply could not be used. Answer again with one heading "
    "per day from \"Day 1:\" to \"Day {days}:\" and activities as lines "
    "starting with a time, for example \"9:00 AM - Visit the first place\"."
)


# -- preference and trip types --------------------------------------------------


@dataclass(frozen=True)
class PreferenceVector:
    """The four genre ratings, each an integer from 1 to 5."""

    historical: int
    amusement: int
    natural: int
    cultural: int

    def __post_init__(self):
        for genre in GENRES:
            value = getattr(self, genre)
            if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= 5:
                raise ValueError(f"{genre} rating must be an integer in [1, 5], got {value!r}")

    def as_dict(self) -> dict[str, int]:
        return {genre: getattr(self, genre) for genre in GENRES}

    def normalized(self) -> dict[str, float]:
        total = sum(self.as_dict().values())
        return {genre: rating / total for genre, rating in self.as_dict().items()}

    @classmethod
    def from_mapping(cls, mapping: dict[str, int], default: int = DEFAULT_RATING) -> "PreferenceVector":
        unknown = set(mapping) - set(GENRES)
        if unknown:
            raise ValueError(f"unknown genres: {', '.join(sorted(unknown))}")
        return cls(**{genre: mapping.get(genre, default) for genre in GENRES})


@dataclass(frozen=True)
class TripSpec:
    destination: str
    days: int
    preferences: PreferenceVector | None = None

    def __post_init__(self):
        if not self.destination or not self.destination.strip():
            raise ValueError("destination must be non-empty")
        if not isinstance(self.days, int) or isinstance(self.days, bool) or self.days < 1:
            raise ValueError(f"days must be a positive integer, got {self.days!r}")


@dataclass(frozen=True)
class GenreTag:
    name: str
    genre: str
    matched_terms: tuple[str, ...]


# -- genre classification ---------------------------------------------------------


def _term_pattern(term: str) -> re.Pattern:
    return re.compile(rf"\b{re.escape(term)}\b")


def classify_genre(name: str, description: str, lexicon: dict[str, list[str]]) -> GenreTag:
    """Tag an attraction with the genre scoring the most lexicon hits.

    Ties break in canonical genre order; zero hits fall back to the default
    genre (cultural).
    """
    missing = [g for g in GENRES if g not in lexicon]
    if missing:
        raise ValueError(f"lexicon missing genres: {', '.join(missing)}")
    text = f"{name} {description}".lower()
    best_genre = DEFAULT_GENRE
    best_count = 0
    best_terms: tuple[str, ...] = ()
    for genre in GENRES:
        count = 0
        terms = []
        for term in lexicon[genre]:
            hits = len(_term_pattern(term).findall(text))
            if hits:
                count += hits
                terms.append(term)
        if count > best_count:
            best_genre, best_count, best_terms = genre, count, tuple(terms)
    return GenreTag(name=name, genre=best_genre, matched_terms=best_terms)


# -- day apportionment -------------------------------------------------------------


def allocate_days(
    prefs: PreferenceVector,
    days: int,
    pools: dict[str, int],
    per_day: int = ATTRACTIONS_PER_DAY,
) -> dict[str, int]:
    """Split trip days across genres in proportion to the ratings.

    Genres with empty pools are excluded from the weighting. Quotas come
    from largest-remainder apportionment (remainder ties in canonical genre
    order) and are capped at the days a genre's pool can fill at `per_day`
    attractions per day; capped-off days cascade to the next genres.
    """
    if days < 1:
        raise ValueError("days must be >= 1")
    active = [g for g in GENRES if pools.get(g, 0) > 0]
    if not active:
        raise EmptyPools("every genre pool is empty")
    total_rating = sum(getattr(prefs, g) for g in active)
    # exact arithmetic: remainder comparisons must not depend on float rounding
    raw = {g: Fraction(getattr(prefs, g) * days, total_rating) for g in active}
    caps = {g: math.ceil(pools[g] / per_day) for g in active}
    quotas = {g: 0 for g in GENRES}
    for g in active:
        quotas[g] = min(math.floor(raw[g]), caps[g])
    remaining = days - sum(quotas.values())
    order = sorted(active, key=lambda g: (-(raw[g] - math.floor(raw[g])), GENRES.index(g)))
    while remaining > 0:
        progressed = False
        for g in order:
            if remaining == 0:
                break
            if quotas[g] < caps[g]:
                quotas[g] += 1
                remaining -= 1
                progressed = True
        if not progressed:
            break  # pools cannot fill the trip
    return quotas


# -- prompt rendering ----------------------------------------------------------------


def build_prompt(
    spec: TripSpec, dictionary: AttractionDictionary, summaries: dict[str, str]
) -> str:
    """Render the generation prompt: header, numbered attraction block, and
    (when present) the preference clause. Byte-deterministic."""
    if not len(dictionary):
        raise EmptyDictionary("cannot plan with an empty attraction dictionary")
    folded = {name.casefold(): text for name, text in summaries.items()}
    lines = [PROMPT_HEADER.format(days=spec.days, destination=spec.destination), ""]
    for i, entry in enumerate(dictionary, 1):
        summary = folded.get(entry.name.casefold())
        if summary is None:
            raise MissingSummary(f"no summary for {entry.name!r}")
        lines.append(f"{i}. {entry.name}:")
        lines.append(f"Description: {summary}")
        lines.append("")
    if spec.preferences is not None:
        lines.append(PREFERENCE_CLAUSE.format(**spec.preferences.as_dict()))
    else:
        lines.pop()  # drop the trailing blank line
    return "\n".join(lines)


# -- itinerary structure ----------------------------------------------------------------


@dataclass
class Activity:
    time: str
    name: str
    note: str


@dataclass
class DayPlan:
    day: int
    activities: list[Activity] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


@dataclass
class Itinerary:
    destination: str
    days: list[DayPlan]
    with_preferences: bool = False
    raw: str = field(default="", compare=False)

    def to_json(self) -> dict:
        return {
            "destination": self.destination,
            "days": [
                {
                    "day": dp.day,
                    "activities": [
                        {"time": a.time, "name": a.name, "note": a.note}
                        for a in dp.activities
                    ],
                    "notes": list(dp.notes),
                }
                for dp in self.days
            ],
            "mode": "with-preferences" if self.with_preferences else "without-preferences",
            "raw": self.raw,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Itinerary":
        return cls(
            destination=data["destination"],
            days=[
                DayPlan(
                    day=item["day"],
                    activities=[
                        Activity(time=a["time"], name=a["name"], note=a["note"])
                        for a in item.get("activities", [])
                    ],
                    notes=list(item.get("notes", [])),
                )
                for item in data["days"]
            ],
            with_preferences=data.get("mode") == "with-preferences",
            raw=data.get("raw", ""),
        )


_DAY_HEADING = re.compile(r"^\s*(?:\*\*)?\s*day\s+(\d+)\s*(?:\*\*)?\s*[:.\-–—]?\s*(.*)$", re.IGNORECASE)
_TIME_LINE = re.compile(
    r"^\s*(?:[-*•]\s*)?"
    r"(\d{1,2}(?::\d{2})?\s*(?:[ap]\.?m\.?)?)"
    r"\s*[:\-–—]\s+(.*)$",
    re.IGNORECASE,
)


def _match_attraction(text: str, names: list[str]) -> str | None:
    folded = text.casefold()
    best = None
    for name in names:
        if name.casefold() in folded:
            if best is None or len(name) > len(best):
                best = name
    return best


def parse_itinerary(raw: str, spec: TripSpec, dictionary: AttractionDictionary) -> Itinerary:
    """Parse generator text into day plans and validate against the trip.

    Recognizes "Day N" headings (case-insensitive, markdown bold tolerated),
    turns lines with a leading time token into activities, and matches
    attraction names by longest case-insensitive substring. Unmatched lines
    stay as day notes. Raises UnparseableItinerary when no heading is found
    and DayCountMismatch when headings do not cover 1..days.
    """
    if not raw.strip():
        raise UnparseableItinerary("generator returned empty text", raw=raw)
    names = dictionary.names()
    plans: dict[int, DayPlan] = {}
    current: DayPlan | None = None

    def handle_content(line: str):
        if current is None:
            return  # preamble before the first heading
        match = _TIME_LINE.match(line)
        if match:
            time_token, rest = match.group(1).strip(), match.group(2).strip()
            name = _match_attraction(rest, names)
            if name is not None:
                current.activities.append(Activity(time=time_token, name=name, note=rest))
                return
        stripped = line.strip()
        if stripped:
            current.notes.append(stripped)

    for line in raw.splitlines():
        heading = _DAY_HEADING.match(line)
        if heading:
            day = int(heading.group(1))
            current = plans.setdefault(day, DayPlan(day=day))
            remainder = heading.group(2).strip()
            if remainder:
                handle_content(remainder)
        else:
            handle_content(line)

    if not plans:
        raise UnparseableItinerary("no day headings in generator output", raw=raw)
    found = sorted(plans)
    if found != list(range(1, spec.days + 1)):
        raise DayCountMismatch(
            f"expected days 1..{spec.days}, generator produced {found}", raw=raw
        )
    return Itinerary(
        destination=spec.destination,
        days=[plans[d] for d in found],
        with_preferences=spec.preferences is not None,
        raw=raw,
    )


def render_itinerary(itinerary: Itinerary) -> str:
    """Deterministic text form, parseable back by parse_itinerary."""
    lines = []
    for plan in itinerary.days:
        lines.append(f"Day {plan.day}:")
        for act in plan.activities:
            lines.append(f"{act.time} - {act.note}")
        lines.extend(plan.notes)
        lines.append("")
    return "\n".join(lines).rstrip("\n")


def generate_itinerary(
    spec: TripSpec,
    dictionary: AttractionDictionary,
    summaries: dict[str, str],
    config: LlmConfig | None = None,
    gateway=None,
) -> Itinerary:
    """Prompt the gateway and parse its reply into a validated itinerary.

    On a malformed reply the generator is re-prompted once with a
    corrective suffix; a second failure surfaces the error with the raw
    reply attached.
    """
    if gateway is None:
        if config is None:
            raise ValueError("need a gateway or an LlmConfig")
        gateway = HttpGateway(config)
    prompt = build_prompt(spec, dictionary, summaries)
    raw = gateway.complete(prompt)
    try:
        return parse_itinerary(raw, spec, dictionary)
    except UnparseableItinerary:
        retry_raw = gateway.complete(prompt + RETRY_SUFFIX.format(days=spec.days))
        return parse_itinerary(retry_raw, spec, dictionary)


# -- itinerary comparison -----------------------------------------------------------------


@dataclass
class ItineraryMetrics:
    genre_shares: dict[str, float]
    divergence: float
    mean_activities_per_day: float
    detail_score: float

    def to_json(self) -> dict:
        return {
            "genre_shares": self.genre_shares,
            "divergence": self.divergence,
            "mean_activities_per_day": self.mean_activities_per_day,
            "detail_score": self.detail_score,
        }


@dataclass
class ComparisonReport:
    first: ItineraryMetrics
    second: ItineraryMetrics
    preference_weights: dict[str, float]
    divergence_difference: float

    def to_json(self) -> dict:
        return {
            "first": self.first.to_json(),
            "second": self.second.to_json(),
            "preference_weights": self.preference_weights,
            "divergence_difference": self.divergence_difference,
        }


def _metrics(itinerary: Itinerary, genre_of: dict[str, str], weights: dict[str, float]) -> ItineraryMetrics:
    activities = [a for plan in itinerary.days for a in plan.activities]
    if not activities:
        raise ValueError("itinerary has no activities to compare")
    slot_counts: Counter[str] = Counter(
        genre_of.get(a.name.casefold(), DEFAULT_GENRE) for a in activities
    )
    total = sum(slot_counts.values())
    shares = {genre: slot_counts.get(genre, 0) / total for genre in GENRES}
    divergence = sum(abs(shares[g] - weights[g]) for g in GENRES)
    return ItineraryMetrics(
        genre_shares=shares,
        divergence=divergence,
        mean_activities_per_day=total / len(itinerary.days),
        detail_score=sum(len(a.note) for a in activities) / total,
    )


def compare_itineraries(
    a: Itinerary,
    b: Itinerary,
    prefs: PreferenceVector,
    tags: list[GenreTag],
) -> ComparisonReport:
    """Score two itineraries for the same trip against the preferences.

    Reports each itinerary's genre share of activity slots, its L1
    divergence from the normalized preference weights (lower means the
    genre emphasis follows the ratings more closely), activities per day,
    and a detail score (mean note characters per activity).
    """
    if a.destination.casefold() != b.destination.casefold() or len(a.days) != len(b.days):
        raise ValueError("itineraries must cover the same destination and day count")
    weights = prefs.normalized()
    genre_of = {tag.name.casefold(): tag.genre for tag in tags}
    first = _metrics(a, genre_of, weights)
    second = _metrics(b, genre_of, weights)
    return ComparisonReport(
        first=first,
        second=second,
        preference_weights=weights,
        divergence_difference=first.divergence - second.divergence,
    )
