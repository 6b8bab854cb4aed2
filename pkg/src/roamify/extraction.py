"""Attraction extraction from cleaned page text.

Travel blogs share one reliable signal: attractions are numbered in
ascending order. The extractor tokenizes the text, finds the longest run
of markers counting 1, 2, 3, ... and slices the text between consecutive
markers into (name, description) entries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import EmptyEntry, NoAttractionsFound, NoChainFound
from .sources import CleanText

# Accepted marker forms: "N.", "N)", "N:", "#N" — at a line start or right
# after sentence-terminal punctuation, followed by whitespace/end of text.
_MARKER = re.compile(r"#(\d+)|(\d+)([.):])")
_SENTENCE_SPLIT = re.compile(r"[.?!]+(?=\s+[A-Z])")
_WORD = re.compile(r"[a-z0-9']+")
_TOKEN = re.compile(r"\S+")

NAME_TOKEN_CAP = 8
_NAME_TERMINAL = ".,:;!?"


# -- sentences and tokens -----------------------------------------------------


@dataclass
class SentenceStream:
    """Sentences in source order plus their stopword-filtered token lists."""

    sentences: list[str]
    tokens: list[list[str]]


def split_sentences(text: str) -> list[str]:
    """Split on terminal punctuation followed by whitespace and an uppercase letter."""
    pieces = []
    start = 0
    for match in _SENTENCE_SPLIT.finditer(text):
        pieces.append(text[start : match.end()])
        start = match.end()
    pieces.append(text[start:])
    return [p.strip() for p in pieces if p.strip()]


def tokenize(text: str | CleanText, stopwords: frozenset[str] | set[str]) -> SentenceStream:
    """Sentence-split the text and drop stopwords from the token lists.

    Sentences are kept verbatim; tokens are lowercased.
    """
    if not stopwords:
        raise ValueError("stopword set must not be empty")
    if isinstance(text, CleanText):
        text = text.text
    sentences = split_sentences(text)
    tokens = [
        [tok for tok in _WORD.findall(sentence.lower()) if tok not in stopwords]
        for sentence in sentences
    ]
    return SentenceStream(sentences=sentences, tokens=tokens)


# -- marker chains -------------------------------------------------------------


@dataclass(frozen=True)
class Marker:
    ordinal: int
    offset: int
    raw: str

    @property
    def end(self) -> int:
        return self.offset + len(self.raw)


@dataclass
class MarkerChain:
    markers: list[Marker]

    def __post_init__(self):
        ordinals = [m.ordinal for m in self.markers]
        if ordinals != list(range(1, len(ordinals) + 1)) or len(ordinals) < 2:
            raise ValueError(f"not an ascending 1..N chain of length >= 2: {ordinals}")
        offsets = [m.offset for m in self.markers]
        if offsets != sorted(set(offsets)):
            raise ValueError("marker offsets must be strictly increasing")

    def __len__(self):
        return len(self.markers)


def _position_ok(text: str, start: int) -> bool:
    j = start - 1
    while j >= 0 and text[j] in " \t":
        j -= 1
    if j < 0 or text[j] == "\n":
        return True
    while j >= 0 and text[j].isspace():
        j -= 1
    if j < 0:
        return True
    return text[j] in ".!?"


def scan_markers(text: str | CleanText) -> list[Marker]:
    """All marker candidates in offset order, regardless of sequence."""
    if isinstance(text, CleanText):
        text = text.text
    found = []
    for match in _MARKER.finditer(text):
        if match.end() < len(text) and not text[match.end()].isspace():
            continue
        if not _position_ok(text, match.start()):
            continue
        ordinal = int(match.group(1) or match.group(2))
        if ordinal < 1:
            continue
        found.append(Marker(ordinal=ordinal, offset=match.start(), raw=match.group(0)))
    return found


def find_marker_chain(text: str | CleanText) -> MarkerChain:
    """Longest run of consecutive markers counting exactly 1..N.

    A chain must use consecutive candidates (any stray numbered token in
    between breaks it, keeping descriptions contiguous). Among equally long
    maximal chains the earliest-starting one wins. Raises NoChainFound when
    no chain of length >= 2 exists.
    """
    candidates = scan_markers(text)
    runs: list[list[Marker]] = []
    current: list[Marker] = []
    for marker in candidates:
        if marker.ordinal == len(current) + 1:
            current.append(marker)
        else:
            if current:
                runs.append(current)
            current = [marker] if marker.ordinal == 1 else []
    if current:
        runs.append(current)
    runs = [run for run in runs if len(run) >= 2]
    if not runs:
        raise NoChainFound("no ascending numbered sequence starting at 1")
    best = max(runs, key=lambda run: (len(run), -run[0].offset))
    return MarkerChain(markers=best)


# -- entry extraction -----------------------------------------------------------


@dataclass
class AttractionEntry:
    name: str
    description: str
    source: str = ""


@dataclass
class AttractionDictionary:
    """Ordered name -> description mapping recovered from a page."""

    entries: list[AttractionEntry] = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def get(self, name: str) -> AttractionEntry | None:
        folded = name.casefold()
        for entry in self.entries:
            if entry.name.casefold() == folded:
                return entry
        return None

    def to_json(self) -> list[dict]:
        return [
            {"name": e.name, "description": e.description, "source": e.source}
            for e in self.entries
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "AttractionDictionary":
        return cls(
            entries=[
                AttractionEntry(
                    name=item["name"],
                    description=item["description"],
                    source=item.get("source", ""),
                )
                for item in data
            ]
        )


_SUGGESTED_READ = re.compile(r"suggested\s+read", re.IGNORECASE)


def _is_heading_line(line: str) -> bool:
    stripped = line.strip()
    if not stripped or stripped[-1] in ".?!,;:":
        return False
    words = stripped.split()
    if len(words) > NAME_TOKEN_CAP:
        return False
    has_alpha = False
    for word in words:
        first_alpha = next((c for c in word if c.isalpha()), "")
        if first_alpha:
            has_alpha = True
            if first_alpha.islower():
                return False
    return has_alpha


def _list_end(text: str, start: int) -> int:
    """Where the last entry stops: next heading-like line, a "Suggested
    Read" tail, or the end of the text — whichever comes first."""
    end = len(text)
    match = _SUGGESTED_READ.search(text, start)
    if match:
        end = match.start()
    offset = start
    for line in text[start:].splitlines(keepends=True):
        if offset > start and _is_heading_line(line):
            end = min(end, offset)
            break
        offset += len(line)
    return end


def _split_name(segment: str) -> tuple[str, int]:
    """Split a marker segment into (name, description start offset).

    The name is the run of title-case/all-caps tokens right after the
    marker, capped at NAME_TOKEN_CAP. The run stops at trailing punctuation,
    a line break, or the first lowercase token; a three-plus token run
    broken by a lowercase word gives its last token back to the description
    (that token is the description's leading sentence word).
    """
    matches = list(_TOKEN.finditer(segment))
    if not matches:
        return "", len(segment)
    run_end = 0
    ended_by_lower = False
    for idx, match in enumerate(matches):
        token = match.group(0)
        if idx > 0 and "\n" in segment[matches[idx - 1].end() : match.start()]:
            break
        first_alpha = next((c for c in token if c.isalpha()), "")
        if idx > 0 and first_alpha and first_alpha.islower():
            ended_by_lower = True
            break
        run_end = idx + 1
        if token[-1] in _NAME_TERMINAL or run_end == NAME_TOKEN_CAP:
            break
    if ended_by_lower and run_end >= 3:
        run_end -= 1
    name = " ".join(m.group(0) for m in matches[:run_end]).rstrip(_NAME_TERMINAL)
    desc_start = matches[run_end].start() if run_end < len(matches) else len(segment)
    return name, desc_start


def extract_attractions(text: str | CleanText, chain: MarkerChain) -> AttractionDictionary:
    """Slice the text between consecutive chain markers into entries.

    Each segment yields a title run (the name) and the remaining span of
    the source text (the description). Duplicate names get the marker
    ordinal appended.
    """
    source = ""
    if isinstance(text, CleanText):
        source = text.source
        text = text.text
    entries = []
    seen: set[str] = set()
    for i, marker in enumerate(chain.markers):
        seg_start = marker.end
        if i + 1 < len(chain.markers):
            seg_end = chain.markers[i + 1].offset
        else:
            seg_end = _list_end(text, seg_start)
        segment = text[seg_start:seg_end]
        if not segment.strip():
            raise EmptyEntry(f"entry {marker.ordinal} has no text")
        name, desc_start = _split_name(segment)
        description = segment[desc_start:].strip()
        if not name:
            raise EmptyEntry(f"entry {marker.ordinal} has no name")
        if name.casefold() in seen:
            name = f"{name} ({marker.ordinal})"
        seen.add(name.casefold())
        entries.append(AttractionEntry(name=name, description=description, source=source))
    return AttractionDictionary(entries=entries)


def extract_from_documents(docs: list[CleanText | str]) -> AttractionDictionary:
    """Extract from each document and merge, first-seen order.

    Documents without a numbered list are skipped. Entries whose names
    match case-insensitively are merged by keeping the longer description.
    Raises NoAttractionsFound when no document yields a list.
    """
    if not docs:
        raise ValueError("need at least one document")
    merged: list[AttractionEntry] = []
    index: dict[str, int] = {}
    any_chain = False
    for doc in docs:
        try:
            chain = find_marker_chain(doc)
        except NoChainFound:
            continue
        any_chain = True
        for entry in extract_attractions(doc, chain):
            key = entry.name.casefold()
            if key in index:
                existing = merged[index[key]]
                if len(entry.description) > len(existing.description):
                    existing.description = entry.description
                    existing.source = entry.source
            else:
                index[key] = len(merged)
                merged.append(entry)
    if not any_chain:
        raise NoAttractionsFound("no document contained a numbered attraction list")
    return AttractionDictionary(entries=merged)
