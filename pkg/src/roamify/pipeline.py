"""End-to-end plan assembly shared by the CLI and the HTTP service."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import EmptyAfterCleaning, RoamifyError
from .extraction import AttractionDictionary, extract_from_documents
from .planner import (
    GenreTag,
    Itinerary,
    PreferenceVector,
    TripSpec,
    classify_genre,
    generate_itinerary,
)
from .sources import (
    CleanText,
    DestinationGuess,
    SourceRegistry,
    TabRecord,
    fetch_sources,
    infer_destination,
    strip_boilerplate,
)
from .summarizer import LlmConfig, summarize_attraction
from .wordlists import load_genre_lexicon

STAGES = ("sources", "extraction", "summarizer", "planner")


class StageError(RoamifyError):
    """A pipeline stage failed; carries the stage name and the cause."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(str(cause))
        self.stage = stage
        self.cause = cause
        self.raw = getattr(cause, "raw", None)


@dataclass
class PlanResult:
    destination: str
    guess: DestinationGuess | None
    documents: list[CleanText]
    dictionary: AttractionDictionary
    summaries: dict[str, str]
    tags: list[GenreTag]
    itinerary: Itinerary


def run_plan(
    *,
    destination: str | None = None,
    tabs: list[TabRecord] | None = None,
    days: int,
    preferences: PreferenceVector | None = None,
    registry: SourceRegistry,
    gazetteer: list[str],
    budget: int = 3,
    parallelism: int = 3,
    gateway=None,
    llm_config: LlmConfig | None = None,
    summary_mode: str = "fallback",
    lexicon: dict[str, list[str]] | None = None,
    session=None,
) -> PlanResult:
    """Run sources -> extraction -> summarizer -> planner for one trip.

    Exactly one of `destination` or `tabs` must be given. Failures are
    re-raised as StageError naming the failing stage.
    """
    if (destination is None) == (tabs is None):
        raise ValueError("provide exactly one of destination or tabs")
    lexicon = lexicon or load_genre_lexicon()

    guess = None
    try:
        if tabs is not None:
            guess = infer_destination(tabs, gazetteer)
            destination = guess.destination
        raw_docs = fetch_sources(destination, registry, budget=budget, parallelism=parallelism, session=session)
        documents = []
        for doc in raw_docs:
            try:
                documents.append(strip_boilerplate(doc))
            except EmptyAfterCleaning:
                continue
        if not documents:
            raise EmptyAfterCleaning("every fetched page was empty after cleaning")
    except RoamifyError as exc:
        raise StageError("sources", exc) from exc

    try:
        dictionary = extract_from_documents(documents)
    except RoamifyError as exc:
        raise StageError("extraction", exc) from exc

    try:
        summaries = _summarize_all(dictionary, summary_mode, gateway, llm_config, parallelism)
    except RoamifyError as exc:
        raise StageError("summarizer", exc) from exc

    try:
        spec = TripSpec(destination=destination, days=days, preferences=preferences)
        tags = [classify_genre(e.name, e.description, lexicon) for e in dictionary]
        itinerary = generate_itinerary(
            spec, dictionary, summaries, config=llm_config, gateway=gateway
        )
    except RoamifyError as exc:
        raise StageError("planner", exc) from exc

    return PlanResult(
        destination=destination,
        guess=guess,
        documents=documents,
        dictionary=dictionary,
        summaries=summaries,
        tags=tags,
        itinerary=itinerary,
    )


def _summarize_all(
    dictionary: AttractionDictionary,
    mode: str,
    gateway,
    llm_config: LlmConfig | None,
    parallelism: int,
) -> dict[str, str]:
    entries = list(dictionary)

    def one(entry):
        return summarize_attraction(
            entry.name,
            entry.description,
            config=llm_config,
            mode=mode,
            gateway=gateway if mode == "gateway" else None,
        )

    if mode == "gateway" and parallelism > 1 and len(entries) > 1:
        with ThreadPoolExecutor(max_workers=min(parallelism, len(entries))) as pool:
            results = list(pool.map(one, entries))
    else:
        results = [one(entry) for entry in entries]
    return {res.name: res.summary for res in results}
