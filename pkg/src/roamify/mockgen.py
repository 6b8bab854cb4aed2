"""Deterministic offline gateway.

Answers summarization prompts with the extractive fallback and planning
prompts with a schedule derived from the prompt itself (genre tagging plus
day apportionment), so every CLI and service path works without a model
endpoint and produces byte-identical output for identical input.
"""

from __future__ import annotations

import re

from .planner import (
    GENRES,
    ATTRACTIONS_PER_DAY,
    Activity,
    DayPlan,
    Itinerary,
    PreferenceVector,
    allocate_days,
    classify_genre,
    render_itinerary,
)
from .summarizer import SUMMARY_PROMPT, extractive_summarize
from .wordlists import load_genre_lexicon

_SUMMARY_PREFIX = SUMMARY_PROMPT.split("Attraction:")[0]
_SUMMARY_RE = re.compile(r"Attraction: (?P<name>.*)\nDescription: (?P<description>.*)", re.DOTALL)
_PLAN_HEADER_RE = re.compile(
    r"^Generate a detailed itinerary for me for a (?P<days>\d+) day trip to "
    r"(?P<destination>.+?) and here are the suggested places",
)
_ENTRY_RE = re.compile(r"^\d+\. (?P<name>.+):$")
_PREFS_RE = re.compile(
    r"Historical=(?P<historical>\d), Amusement=(?P<amusement>\d), "
    r"Natural=(?P<natural>\d), Cultural=(?P<cultural>\d)"
)

_SLOT_TIMES = ("9:00 AM", "12:00 PM", "3:00 PM")


class MockGateway:
    """Drop-in replacement for HttpGateway with canned, deterministic logic."""

    model_id = "mock"

    def __init__(self, lexicon: dict[str, list[str]] | None = None):
        self.lexicon = lexicon or load_genre_lexicon()

    def complete(self, prompt: str) -> str:
        if prompt.startswith(_SUMMARY_PREFIX):
            return self._summarize(prompt)
        if _PLAN_HEADER_RE.match(prompt):
            return self._plan(prompt)
        return prompt

    def _summarize(self, prompt: str) -> str:
        match = _SUMMARY_RE.search(prompt)
        if not match:
            return prompt
        summary = extractive_summarize(match.group("description"))
        return summary or match.group("description")

    def _plan(self, prompt: str) -> str:
        header = _PLAN_HEADER_RE.match(prompt)
        days = int(header.group("days"))
        destination = header.group("destination")

        entries: list[tuple[str, str]] = []
        pending_name = None
        for line in prompt.splitlines():
            entry = _ENTRY_RE.match(line)
            if entry:
                pending_name = entry.group("name")
            elif pending_name is not None and line.startswith("Description: "):
                entries.append((pending_name, line[len("Description: "):]))
                pending_name = None

        prefs_match = _PREFS_RE.search(prompt)
        if prefs_match:
            prefs = PreferenceVector(**{g: int(prefs_match.group(g)) for g in GENRES})
        else:
            prefs = PreferenceVector(3, 3, 3, 3)

        tags = [classify_genre(name, desc, self.lexicon) for name, desc in entries]
        pools = {g: sum(1 for t in tags if t.genre == g) for g in GENRES}
        quotas = allocate_days(prefs, days, pools)
        active = [g for g in GENRES if pools[g] > 0]

        schedule: list[str] = []
        for genre in GENRES:
            schedule.extend([genre] * quotas[genre])
        filler = 0
        while len(schedule) < days:
            schedule.append(active[filler % len(active)])
            filler += 1

        by_genre = {g: [t.name for t in tags if t.genre == g] for g in GENRES}
        used: set[str] = set()
        day_plans = []
        for day_index, genre in enumerate(schedule, 1):
            pool = by_genre[genre]
            picks = [name for name in pool if name not in used][:ATTRACTIONS_PER_DAY]
            if not picks and pool:
                picks = pool[:ATTRACTIONS_PER_DAY]
            used.update(picks)
            plan = DayPlan(day=day_index)
            for slot, name in zip(_SLOT_TIMES, picks):
                plan.activities.append(Activity(time=slot, name=name, note=f"Visit {name}."))
            if not plan.activities:
                plan.notes.append("Free exploration around the city centre.")
            day_plans.append(plan)

        itinerary = Itinerary(
            destination=destination,
            days=day_plans,
            with_preferences=prefs_match is not None,
        )
        return render_itinerary(itinerary)
