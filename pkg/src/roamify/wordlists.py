"""Loaders for the bundled word lists (stopwords, gazetteer, genre lexicon)."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path

GENRES = ("historical", "amusement", "natural", "cultural")


def _bundled(name: str) -> str:
    return resources.files("roamify").joinpath("data", name).read_text(encoding="utf-8")


def _read(path: str | Path | None, bundled_name: str) -> str:
    if path is None:
        return _bundled(bundled_name)
    return Path(path).read_text(encoding="utf-8")


def _lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


@lru_cache(maxsize=8)
def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Stopword set, one lowercase word per line."""
    return frozenset(w.lower() for w in _lines(_read(path, "stopwords.txt")))


def load_gazetteer(path: str | Path | None = None) -> list[str]:
    """Known place names, one lowercase name per line (may contain spaces)."""
    return [p.lower() for p in _lines(_read(path, "gazetteer.txt"))]


def load_genre_lexicon(path: str | Path | None = None) -> dict[str, list[str]]:
    """Genre lexicon: one `genre: term, term, ...` line per genre.

    All four genres must be present; raises ValueError otherwise.
    """
    lexicon: dict[str, list[str]] = {}
    for line in _lines(_read(path, "genre_lexicon.txt")):
        genre, sep, rest = line.partition(":")
        genre = genre.strip().lower()
        if not sep or genre not in GENRES:
            raise ValueError(f"bad lexicon line: {line!r}")
        terms = [t.strip().lower() for t in rest.split(",") if t.strip()]
        if not terms:
            raise ValueError(f"genre {genre!r} has no terms")
        lexicon[genre] = terms
    missing = [g for g in GENRES if g not in lexicon]
    if missing:
        raise ValueError(f"lexicon missing genres: {', '.join(missing)}")
    return lexicon
