"""Destination resolution, travel-blog fetching, and boilerplate removal.

The scraper deliberately stays simple: registered URL templates only, a
politeness delay per source, and a heuristic cleaner that drops chrome
(nav/footer/aside), scripts, and advertising blocks before any text
analysis happens downstream.
"""

from __future__ import annotations

import re
import time
import urllib.parse
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from html.parser import HTMLParser
from pathlib import Path

import requests

from .errors import AllSourcesFailed, EmptyAfterCleaning, NoDestinationFound

CONNECT_TIMEOUT_S = 10.0
READ_TIMEOUT_S = 30.0
DEFAULT_BUDGET = 3
DEFAULT_PARALLELISM = 3
USER_AGENT = "roamify/0.1"

# A text block is considered advertising when more than half of its
# characters sit inside hyperlinks, or when it mentions sponsor phrasing.
AD_LINK_DENSITY = 0.5
AD_KEYWORDS = (
    "sponsored",
    "advertisement",
    "advertising",
    "promoted content",
    "buy now",
    "subscribe now",
)


# -- domain types ------------------------------------------------------------


@dataclass(frozen=True)
class TabRecord:
    """One open browser tab: absolute http(s) URL plus optional title."""

    url: str
    title: str = ""

    def __post_init__(self):
        parsed = urllib.parse.urlparse(self.url)
        if parsed.scheme not in ("http", "https") or not parsed.netloc:
            raise ValueError(f"tab url must be absolute http(s): {self.url!r}")


@dataclass(frozen=True)
class DestinationGuess:
    destination: str
    confidence: float
    evidence: tuple[tuple[str, str], ...]  # (tab url, matched place name)


@dataclass(frozen=True)
class SourceEntry:
    name: str
    url_template: str
    delay_ms: int

    def url_for(self, destination: str) -> str:
        slug = urllib.parse.quote(destination.strip().lower().replace(" ", "-"))
        return self.url_template.format(destination=slug)


@dataclass
class SourceRegistry:
    entries: list[SourceEntry] = field(default_factory=list)

    @classmethod
    def parse(cls, text: str) -> "SourceRegistry":
        entries = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split("|")]
            if len(parts) != 3:
                raise ValueError(f"registry line {lineno}: expected 'name | url-template | delay-ms'")
            name, template, delay = parts
            if template.count("{destination}") != 1:
                raise ValueError(f"registry line {lineno}: template needs exactly one {{destination}} slot")
            delay_ms = int(delay)
            if delay_ms < 0:
                raise ValueError(f"registry line {lineno}: delay must be >= 0")
            entries.append(SourceEntry(name, template, delay_ms))
        return cls(entries)

    @classmethod
    def load(cls, path: str | Path) -> "SourceRegistry":
        return cls.parse(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class RawDocument:
    source: str
    url: str
    fetched_at: datetime
    body: str


@dataclass(frozen=True)
class CleanText:
    text: str
    source: str = ""
    url: str = ""


# -- destination inference ---------------------------------------------------


def _tab_tokens(tab: TabRecord) -> list[str]:
    raw = f"{tab.url} {tab.title}".lower()
    return re.findall(r"[a-z0-9]+", raw)


def infer_destination(tabs: list[TabRecord], gazetteer: list[str]) -> DestinationGuess:
    """Guess the intended destination from open tabs.

    Counts occurrences of every gazetteer place name across tokenized tab
    URLs and titles (hyphens/underscores and all other punctuation act as
    separators). The most frequent name wins; ties break lexicographically.
    """
    if not gazetteer:
        raise ValueError("gazetteer must not be empty")
    places = [(name, tuple(name.split())) for name in sorted(set(gazetteer))]
    counts: Counter[str] = Counter()
    evidence: dict[str, list[tuple[str, str]]] = {}
    for tab in tabs:
        tokens = _tab_tokens(tab)
        for name, words in places:
            n = len(words)
            hits = sum(
                1
                for i in range(len(tokens) - n + 1)
                if tuple(tokens[i : i + n]) == words
            )
            if hits:
                counts[name] += hits
                evidence.setdefault(name, []).extend([(tab.url, name)] * hits)
    if not counts:
        raise NoDestinationFound("no gazetteer place matched any tab")
    best = min(counts, key=lambda name: (-counts[name], name))
    total = sum(counts.values())
    return DestinationGuess(
        destination=best,
        confidence=counts[best] / total,
        evidence=tuple(evidence[best]),
    )


# -- fetching ----------------------------------------------------------------


def _fetch_url(url: str, session: requests.Session | None) -> str:
    parsed = urllib.parse.urlparse(url)
    if parsed.scheme == "file":
        # Local fixtures and offline demos; no network involved.
        return Path(urllib.parse.unquote(parsed.path)).read_text(encoding="utf-8")
    client = session or requests
    resp = client.get(
        url,
        timeout=(CONNECT_TIMEOUT_S, READ_TIMEOUT_S),
        headers={"User-Agent": USER_AGENT},
    )
    resp.raise_for_status()
    return resp.text


def fetch_sources(
    destination: str,
    registry: SourceRegistry,
    budget: int = DEFAULT_BUDGET,
    parallelism: int = DEFAULT_PARALLELISM,
    session: requests.Session | None = None,
) -> list[RawDocument]:
    """Fetch up to `budget` sources for a destination.

    Only the first `budget` registry entries are attempted. Each fetch
    waits out the source's politeness delay first; a failed fetch gets one
    retry with the delay doubled. Individual failures are skipped; the call
    fails only when no source yields a document. Results keep registry
    order regardless of completion order.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    entries = registry.entries[:budget]
    if not entries:
        raise AllSourcesFailed("source registry is empty")

    def fetch_one(entry: SourceEntry) -> RawDocument | None:
        url = entry.url_for(destination)
        for attempt in range(2):
            delay = entry.delay_ms / 1000.0 * (attempt + 1)
            if delay:
                time.sleep(delay)
            try:
                body = _fetch_url(url, session)
            except (requests.RequestException, OSError):
                continue
            if body.strip():
                return RawDocument(entry.name, url, datetime.now(timezone.utc), body)
        return None

    workers = max(1, min(parallelism, len(entries)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        fetched = list(pool.map(fetch_one, entries))
    documents = [doc for doc in fetched if doc is not None]
    if not documents:
        raise AllSourcesFailed(f"all {len(entries)} sources failed for {destination!r}")
    return documents


# -- boilerplate removal -------------------------------------------------------

_DROP_TAGS = {"script", "style", "nav", "footer", "aside"}
_BLOCK_TAGS = {
    "p", "div", "section", "article", "main", "header",
    "h1", "h2", "h3", "h4", "h5", "h6",
    "ul", "ol", "li", "table", "tr", "blockquote", "figure", "figcaption", "br", "hr",
}
_BLANK_LINE = re.compile(r"\n[ \t]*\n")


class _Block:
    __slots__ = ("parts", "link_chars")

    def __init__(self):
        self.parts: list[str] = []
        self.link_chars = 0

    def add(self, data: str, in_link: bool):
        self.parts.append(data)
        if in_link:
            self.link_chars += len(data.replace(" ", ""))

    def text(self) -> str:
        return re.sub(r"\s+", " ", "".join(self.parts)).strip()


class _BlockParser(HTMLParser):
    """Split markup into text blocks, tracking link density per block."""

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.blocks: list[_Block] = []
        self._current = _Block()
        self._drop_depth = 0
        self._link_depth = 0

    def _flush(self):
        if self._current.parts:
            self.blocks.append(self._current)
            self._current = _Block()

    def handle_starttag(self, tag, attrs):
        if tag in _DROP_TAGS:
            self._flush()
            self._drop_depth += 1
        elif tag == "a":
            self._link_depth += 1
        elif tag in _BLOCK_TAGS:
            self._flush()

    def handle_endtag(self, tag):
        if tag in _DROP_TAGS:
            self._drop_depth = max(0, self._drop_depth - 1)
        elif tag == "a":
            self._link_depth = max(0, self._link_depth - 1)
        elif tag in _BLOCK_TAGS:
            self._flush()

    def handle_startendtag(self, tag, attrs):
        if tag in _BLOCK_TAGS:
            self._flush()

    def handle_data(self, data):
        if self._drop_depth:
            return
        pieces = _BLANK_LINE.split(data)
        for i, piece in enumerate(pieces):
            if i:
                self._flush()
            if piece:
                self._current.add(piece, self._link_depth > 0)

    def finish(self) -> list[_Block]:
        self.close()
        self._flush()
        return self.blocks


def _is_advertising(block: _Block, text: str) -> bool:
    solid = len(text.replace(" ", ""))
    if solid and block.link_chars / solid > AD_LINK_DENSITY:
        return True
    folded = text.casefold()
    return any(keyword in folded for keyword in AD_KEYWORDS)


def strip_boilerplate(doc: RawDocument) -> CleanText:
    """Reduce a fetched page to plain prose paragraphs.

    Drops script/style/nav/footer/aside regions and advertising blocks
    (link-dense or sponsor-worded), unescapes entities, and normalizes
    whitespace inside each block. Paragraph order is preserved; paragraphs
    are joined with blank lines, which makes the operation idempotent.
    """
    if not doc.body:
        raise ValueError("document body is empty")
    parser = _BlockParser()
    parser.feed(doc.body)
    kept = []
    for block in parser.finish():
        text = block.text()
        if text and not _is_advertising(block, text):
            kept.append(text)
    if not kept:
        raise EmptyAfterCleaning(f"nothing left of {doc.url or doc.source!r} after cleaning")
    return CleanText(text="\n\n".join(kept), source=doc.source, url=doc.url)
