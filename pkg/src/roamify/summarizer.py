"""Condense attraction descriptions.

Two engines share one interface: a wire client speaking the
OpenAI-compatible chat-completion shape (hosted models and local model
servers both accept it), and a deterministic extractive fallback used for
offline mode and hermetic tests. The module also builds the (context,
summary) fine-tune dataset records.
"""

from __future__ import annotations

import json
import os
import time
import urllib.parse
from collections import Counter
from dataclasses import dataclass

import requests

from .errors import AuthError, GatewayTimeout, ProtocolError, UnknownName
from .extraction import AttractionDictionary, split_sentences, tokenize
from .wordlists import load_stopwords

DEFAULT_SENTENCE_BUDGET = 3
CONNECT_TIMEOUT_S = 10.0

# Phrases that mark leftover blog junk inside a description; sentences
# containing one are dropped before scoring.
DEFAULT_JUNK_PATTERNS = ("suggested read", "entry fee:", "timings:", "location:")

SUMMARY_PROMPT = (
    "Condense the following attraction description, keeping only the details "
    "a traveller needs. Drop advertisements and reading suggestions.\n\n"
    "Attraction: {name}\nDescription: {description}"
)


# -- domain types ------------------------------------------------------------


@dataclass(frozen=True)
class FinetuneRecord:
    """One (context, summary) training pair."""

    context: str
    summary: str

    def __post_init__(self):
        if not self.context or not self.summary:
            raise ValueError("context and summary must be non-empty")
        if len(self.summary) >= len(self.context):
            raise ValueError("summary must be shorter than its context")


@dataclass(frozen=True)
class LlmConfig:
    endpoint: str
    model: str = "llama3"
    temperature: float = 0.0
    max_tokens: int = 512
    timeout_s: float = 60.0
    api_key_var: str = "ROAMIFY_LLM_KEY"

    def __post_init__(self):
        parsed = urllib.parse.urlparse(self.endpoint)
        if not parsed.scheme or not parsed.netloc:
            raise ValueError(f"endpoint is not a URL: {self.endpoint!r}")
        if self.max_tokens < 1:
            raise ValueError("max_tokens must be >= 1")
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")


@dataclass(frozen=True)
class SummaryResult:
    name: str
    summary: str
    engine: str
    elapsed_ms: float


# -- wire client ----------------------------------------------------------------


def llm_complete(prompt: str, config: LlmConfig) -> str:
    """Send one chat-completion request and return the first message text.

    The API key is read from the environment variable named in the config
    and sent as a bearer token; it is never logged or echoed.
    """
    headers = {"Content-Type": "application/json"}
    key = os.environ.get(config.api_key_var, "") if config.api_key_var else ""
    if key:
        headers["Authorization"] = f"Bearer {key}"
    body = {
        "model": config.model,
        "messages": [{"role": "user", "content": prompt}],
        "temperature": config.temperature,
        "max_tokens": config.max_tokens,
    }
    try:
        resp = requests.post(
            config.endpoint,
            json=body,
            headers=headers,
            timeout=(CONNECT_TIMEOUT_S, config.timeout_s),
        )
    except requests.Timeout as exc:
        raise GatewayTimeout(f"no reply from {config.endpoint} within {config.timeout_s}s") from exc
    except requests.RequestException as exc:
        raise ProtocolError(f"request to {config.endpoint} failed: {exc}") from exc
    if resp.status_code in (401, 403):
        raise AuthError(f"endpoint rejected credentials (HTTP {resp.status_code})")
    if not resp.ok:
        raise ProtocolError(f"endpoint returned HTTP {resp.status_code}")
    try:
        data = resp.json()
    except ValueError as exc:
        raise ProtocolError("endpoint response is not JSON") from exc
    try:
        text = data["choices"][0]["message"]["content"]
    except (KeyError, IndexError, TypeError) as exc:
        raise ProtocolError("malformed completion payload") from exc
    if not isinstance(text, str):
        raise ProtocolError("completion content is not text")
    return text


class HttpGateway:
    """Completion gateway backed by the wire client. Safe for concurrent use."""

    def __init__(self, config: LlmConfig):
        self.config = config
        self.model_id = config.model

    def complete(self, prompt: str) -> str:
        return llm_complete(prompt, self.config)


# -- extractive fallback ----------------------------------------------------------


def _is_junk(sentence: str, patterns: tuple[str, ...]) -> bool:
    folded = sentence.casefold()
    return any(p in folded for p in patterns)


def extractive_summarize(
    description: str,
    sentence_budget: int = DEFAULT_SENTENCE_BUDGET,
    stopwords: frozenset[str] | None = None,
    junk_patterns: tuple[str, ...] = DEFAULT_JUNK_PATTERNS,
) -> str:
    """Keep the `sentence_budget` highest-scoring sentences, original order.

    Junk sentences (fee/timing/location lines, reading suggestions) are
    dropped first. Each remaining sentence scores the sum of its
    non-stopword token frequencies over the retained text; ties keep the
    earlier sentence. Fully deterministic.
    """
    if sentence_budget < 1:
        raise ValueError("sentence_budget must be >= 1")
    if stopwords is None:
        stopwords = load_stopwords()
    stream = tokenize(description, stopwords)
    kept = [
        (sentence, tokens)
        for sentence, tokens in zip(stream.sentences, stream.tokens)
        if not _is_junk(sentence, junk_patterns)
    ]
    if not kept:
        return ""
    frequencies: Counter[str] = Counter()
    for _, tokens in kept:
        frequencies.update(tokens)
    scored = [sum(frequencies[t] for t in tokens) for _, tokens in kept]
    ranked = sorted(range(len(kept)), key=lambda i: (-scored[i], i))[:sentence_budget]
    return " ".join(kept[i][0] for i in sorted(ranked))


# -- summarization entry point -------------------------------------------------------

FALLBACK_ENGINE = "extractive-fallback"


def summarize_attraction(
    name: str,
    description: str,
    config: LlmConfig | None = None,
    mode: str = "fallback",
    gateway=None,
    sentence_budget: int = DEFAULT_SENTENCE_BUDGET,
) -> SummaryResult:
    """Summarize one attraction via the gateway or the extractive fallback.

    Gateway mode wraps the description in the summarization instruction and
    needs either a `gateway` object or an LlmConfig; fallback mode never
    errors on non-empty input. The result records which engine ran.
    """
    if not description:
        raise ValueError("description must be non-empty")
    if mode not in ("gateway", "fallback"):
        raise ValueError(f"unknown mode {mode!r}")
    start = time.perf_counter()
    if mode == "gateway":
        if gateway is None:
            if config is None:
                raise ValueError("gateway mode needs a gateway or an LlmConfig")
            gateway = HttpGateway(config)
        summary = gateway.complete(SUMMARY_PROMPT.format(name=name, description=description))
        if not summary.strip():
            raise ProtocolError("gateway returned an empty summary")
        engine = getattr(gateway, "model_id", "gateway")
    else:
        summary = extractive_summarize(description, sentence_budget)
        if not summary:
            # Every sentence was junk; better a junk line than nothing.
            summary = split_sentences(description)[0]
        engine = FALLBACK_ENGINE
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return SummaryResult(name=name, summary=summary, engine=engine, elapsed_ms=elapsed_ms)


# -- fine-tune dataset ------------------------------------------------------------


def build_finetune_dataset(
    dictionary: AttractionDictionary, references: dict[str, str]
) -> list[FinetuneRecord]:
    """Pair dictionary descriptions with reference summaries.

    One record per referenced attraction, in dictionary order. Raises
    UnknownName when a reference has no dictionary entry.
    """
    folded_refs = {name.casefold(): (name, summary) for name, summary in references.items()}
    known = {entry.name.casefold() for entry in dictionary}
    for key, (name, _) in folded_refs.items():
        if key not in known:
            raise UnknownName(f"no dictionary entry for {name!r}")
    records = []
    for entry in dictionary:
        hit = folded_refs.get(entry.name.casefold())
        if hit is None:
            continue
        records.append(FinetuneRecord(context=entry.description, summary=hit[1]))
    return records


def records_to_jsonl(records: list[FinetuneRecord]) -> str:
    """One {"context": ..., "summary": ...} object per line."""
    return "\n".join(
        json.dumps({"context": r.context, "summary": r.summary}, ensure_ascii=False)
        for r in records
    )


def records_from_jsonl(text: str) -> list[FinetuneRecord]:
    records = []
    for line in text.splitlines():
        if not line.strip():
            continue
        data = json.loads(line)
        records.append(FinetuneRecord(context=data["context"], summary=data["summary"]))
    return records
