"""Synthetic travel-page fixtures with known ground truth.

The generator builds pages the way travel blogs write them — an intro,
a numbered list of attractions with varied marker and layout forms, junk
sentences inside descriptions, and a trailing recommendations block — and
records the exact dictionary a correct extractor must recover. Pages can
be rendered as plain text or wrapped in markup (nav, scripts, ad blocks)
to exercise the cleaner as well.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .extraction import AttractionDictionary, AttractionEntry

MARKER_FORMS = ("{n}. ", "{n}) ", "{n}: ", "#{n} ")

_FIRST = (
    "Cedar", "Maple", "Falcon", "Harbor", "Willow", "Granite", "Sunset",
    "Meadow", "Copper", "Ivory", "Drift", "Summit", "Lotus", "Amber",
    "Raven", "Pearl", "Juniper", "Crescent", "Obsidian", "Marble",
)
_SECOND = (
    "Fort", "Palace", "Gardens", "Museum", "Tower", "Bazaar", "Falls",
    "Sanctuary", "Amphitheatre", "Promenade", "Observatory", "Pavilion",
    "Arcade", "Basilica", "Boulevard", "Grotto", "Citadel", "Lighthouse",
    "Terrace", "Menagerie",
)

_BODY_SENTENCES = (
    "The grounds stay lively from early morning until well past dusk.",
    "Local guides praise the shaded walkways and quiet corners tucked behind the main path.",
    "Visitors linger over the carved facades and the painted ceilings inside the central hall.",
    "A short stroll from the entrance leads to a viewpoint that photographers favour at golden hour.",
    "Street vendors outside sell snacks that regulars swear by, especially on weekend evenings.",
    "The site spans nearly 120 acres and takes a full morning to cover at an easy pace.",
    "Restoration work finished recently, so the older wings are open to the public again.",
    "Families tend to arrive before noon, while couples favour the quieter late afternoons.",
    "An audio tour covers the notable stories in about forty minutes and is worth the small rental.",
    "The caretakers keep a small exhibit near the gate that explains how the place got its name.",
    "Seasonal blooms change the character of the place completely between winter and summer.",
    "Guided walks leave from the ticket counter every hour and fill up quickly in season.",
    "Most reviewers call it the single most memorable stop of their whole trip.",
    "The light through the western arches makes late visits particularly rewarding.",
    "Benches along the perimeter make it an easy stop for travellers pacing themselves.",
    "Weekday mornings are noticeably calmer than the packed weekend slots.",
    "A small cafe by the exit serves strong filter coffee and local sweets.",
    "The resident guides speak several languages and tailor the walk to your interests.",
)

_JUNK_SENTENCES = (
    "Timings: Open on all days.",
    "Entry Fee: No entry fee.",
    "Entry Fee: Nominal charge at the gate.",
    "Location: Off the main ring road, beside the old clock tower.",
    "Timings: Sunrise to sunset, all week.",
)

_INTRO_SENTENCES = (
    "Planning a quick escape and wondering where to start?",
    "Our editors walked the length of the city so you would not have to guess.",
    "Here is the shortlist locals keep recommending to anyone who asks.",
    "Skip the guesswork and build your days around these picks.",
)

_TRAILING_HEADINGS = ("Related Posts", "More Weekend Ideas", "Top Picks This Season")

_BYLINES = (
    "Asha Rao for Pexels.",
    "Sarangib for Pixabay.",
    "Martin Vale for Unsplash.",
)


@dataclass
class PageFixture:
    text: str
    truth: AttractionDictionary


def _make_names(rng: random.Random, count: int) -> list[str]:
    combos = [f"{a} {b}" for a in _FIRST for b in _SECOND]
    return rng.sample(combos, count)


def _make_body(rng: random.Random, allow_suggested_read: bool) -> str:
    sentences = rng.sample(_BODY_SENTENCES, rng.randint(2, 4))
    if rng.random() < 0.5:
        sentences.append(rng.choice(_JUNK_SENTENCES))
    if allow_suggested_read and rng.random() < 0.25:
        sentences.append(f"Suggested Read: Getaways Near {rng.choice(_FIRST)} Hills.")
    return " ".join(sentences)


def generate_page(rng: random.Random, count: int | None = None, html: bool = False) -> PageFixture:
    """One synthetic page plus the dictionary extraction must recover."""
    if count is None:
        count = rng.randint(2, 15)
    names = _make_names(rng, count)
    inline = rng.random() < 0.2
    entry_blocks = []
    truth_entries = []
    for i, name in enumerate(names, 1):
        marker = rng.choice(MARKER_FORMS).format(n=i)
        body = _make_body(rng, allow_suggested_read=i < count)
        layout = rng.choice(("period", "colon", "newline", "byline"))
        if inline and layout == "newline":
            layout = "period"
        if layout == "period":
            block = f"{marker}{name}. {body}"
            truth = body
        elif layout == "colon":
            block = f"{marker}{name}: {body}"
            truth = body
        elif layout == "newline":
            block = f"{marker}{name}\n{body}"
            truth = body
        else:
            byline = rng.choice(_BYLINES)
            block = f"{marker}{name}, {byline} {body}"
            truth = f"{byline} {body}"
        entry_blocks.append(block)
        truth_entries.append(AttractionEntry(name=name, description=truth))

    intro = " ".join(rng.sample(_INTRO_SENTENCES, rng.randint(1, 3)))
    tail_kind = rng.choice(("suggested", "heading", "none"))
    if tail_kind == "suggested":
        tail = f"Suggested Read: Resorts Near {rng.choice(_FIRST)} Valley."
    elif tail_kind == "heading" and not inline:
        tail = rng.choice(_TRAILING_HEADINGS) + "\nEven more inspiration from our archive."
    else:
        tail = ""

    joiner = " " if inline else "\n\n"
    parts = [intro, joiner.join(entry_blocks)]
    if tail:
        parts.append(tail)
    text = "\n\n".join(parts)
    if html:
        text = _wrap_html(rng, intro, entry_blocks, tail)
    return PageFixture(text=text, truth=AttractionDictionary(entries=truth_entries))


def render_page(entries: list[AttractionEntry], rng: random.Random, html: bool = False) -> str:
    """Render caller-provided entries as a page; the entries are the truth."""
    blocks = []
    for i, entry in enumerate(entries, 1):
        marker = rng.choice(MARKER_FORMS).format(n=i)
        sep = rng.choice((". ", ": ", "\n"))
        blocks.append(f"{marker}{entry.name}{sep}{entry.description}")
    intro = rng.choice(_INTRO_SENTENCES)
    if html:
        return _wrap_html(rng, intro, blocks, "")
    return intro + "\n\n" + "\n\n".join(blocks)


def _wrap_html(rng: random.Random, intro: str, entry_blocks: list[str], tail: str) -> str:
    nav = (
        "<nav><a href=\"/\">Home</a> <a href=\"/deals\">Deals</a> "
        "<a href=\"/hotels\">Hotels</a></nav>"
    )
    ad = (
        "<div><a href=\"https://ads.example.com/offer\">Book now and save big on "
        "partner hotels</a></div>"
    )
    paragraphs = "\n".join(
        f"<p>{block}</p>" for block in ("\n".join(entry_blocks)).split("\n")
    )
    tail_html = f"<p>{tail}</p>" if tail else ""
    return (
        "<html><head><title>Guide</title><style>body{font:serif}</style></head><body>"
        f"{nav}<script>trackVisit();</script>"
        f"<p>{intro}</p>\n{paragraphs}\n{ad}{tail_html}"
        "<footer>All rights reserved. <a href=\"/terms\">Terms</a></footer>"
        "</body></html>"
    )


def write_corpus(
    outdir: str | Path, pages: int, seed: int = 0, html: bool = False
) -> list[Path]:
    """Write page files plus a ground-truth JSON sidecar per page."""
    rng = random.Random(seed)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for i in range(pages):
        fixture = generate_page(rng, html=html)
        suffix = "html" if html else "txt"
        page_path = outdir / f"page_{i:03d}.{suffix}"
        page_path.write_text(fixture.text, encoding="utf-8")
        sidecar = outdir / f"page_{i:03d}.json"
        sidecar.write_text(
            json.dumps(fixture.truth.to_json(), indent=2, ensure_ascii=False),
            encoding="utf-8",
        )
        written.append(page_path)
    return written


def read_truth(page_path: str | Path) -> AttractionDictionary:
    sidecar = Path(page_path).with_suffix(".json")
    return AttractionDictionary.from_json(json.loads(sidecar.read_text(encoding="utf-8")))
