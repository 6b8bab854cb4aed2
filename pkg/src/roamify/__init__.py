"""Roamify: scrape travel blogs, extract attractions, and plan itineraries."""

__version__ = "0.1.0"

from .extraction import (  # noqa: F401
    AttractionDictionary,
    AttractionEntry,
    MarkerChain,
    extract_attractions,
    extract_from_documents,
    find_marker_chain,
    tokenize,
)
from .planner import (  # noqa: F401
    Itinerary,
    PreferenceVector,
    TripSpec,
    allocate_days,
    build_prompt,
    classify_genre,
    compare_itineraries,
    generate_itinerary,
    parse_itinerary,
)
from .sources import (  # noqa: F401
    CleanText,
    DestinationGuess,
    RawDocument,
    SourceRegistry,
    TabRecord,
    fetch_sources,
    infer_destination,
    strip_boilerplate,
)
from .summarizer import (  # noqa: F401
    FinetuneRecord,
    LlmConfig,
    SummaryResult,
    build_finetune_dataset,
    extractive_summarize,
    llm_complete,
    summarize_attraction,
)
