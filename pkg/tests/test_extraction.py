"""Tests for roamify.extraction: tokenizing, marker chains, entry slicing."""

from __future__ import annotations

import random

import pytest

from roamify.corpus import generate_page
from roamify.errors import EmptyEntry, NoAttractionsFound, NoChainFound
from roamify.extraction import (
    AttractionDictionary,
    AttractionEntry,
    extract_attractions,
    extract_from_documents,
    find_marker_chain,
    scan_markers,
    split_sentences,
    tokenize,
)
from roamify.sources import CleanText

# -- independent oracle: char-by-char marker scan + run enumeration ----------


def oracle_scan(text):
    """Marker candidates found by a hand-rolled scanner (no regex)."""
    out = []
    i = 0
    terminators = ".)" + ":"
    while i < len(text):
        ch = text[i]
        start = i
        ordinal = None
        raw = None
        if ch == "#" and i + 1 < len(text) and text[i + 1].isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            ordinal = int(text[i + 1 : j])
            raw = text[i:j]
            end = j
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] in terminators:
                ordinal = int(text[i:j])
                raw = text[i : j + 1]
                end = j + 1
            else:
                i = j
                continue
        else:
            i += 1
            continue
        i = end
        if end < len(text) and not text[end].isspace():
            continue
        if ordinal < 1:
            continue
        # position: line start or after sentence-terminal punctuation
        k = start - 1
        while k >= 0 and text[k] in " \t":
            k -= 1
        if k >= 0 and text[k] != "\n":
            while k >= 0 and text[k].isspace():
                k -= 1
            if k >= 0 and text[k] not in ".!?":
                continue
        out.append((ordinal, start, raw))
    return out


def oracle_chain(text):
    """Best chain by enumerating every contiguous candidate slice."""
    candidates = oracle_scan(text)
    best = None
    for i in range(len(candidates)):
        for j in range(i + 2, len(candidates) + 1):
            window = candidates[i:j]
            if [c[0] for c in window] != list(range(1, len(window) + 1)):
                continue
            key = (len(window), -window[0][1])
            if best is None or key > best[0]:
                best = (key, window)
    return None if best is None else best[1]


def random_marker_text(rng, max_len=2000):
    words = ["alpha", "beta", "Gamma", "delta", "walk", "Fort", "view", "trip"]
    markers = ["1.", "2.", "3.", "4.", "1)", "2)", "3)", "1:", "2:", "#1", "#2", "#3", "0.", "12.", "5."]
    joiners = [" ", " ", "  ", "\n", ". ", "! ", "? ", ".\n", ", "]
    parts = []
    length = 0
    while length < rng.randint(40, max_len):
        token = rng.choice(markers) if rng.random() < 0.4 else rng.choice(words)
        joiner = rng.choice(joiners)
        parts.append(token + joiner)
        length += len(token) + len(joiner)
    return "".join(parts)[:max_len]


# -- tokenize ----------------------------------------------------------------


def test_tokenize_empty_text():
    stream = tokenize("", {"the"})
    assert stream.sentences == []
    assert stream.tokens == []


def test_tokenize_splits_and_filters():
    stream = tokenize("The park is big. It is green.", {"the", "is", "it"})
    assert stream.sentences == ["The park is big.", "It is green."]
    assert stream.tokens == [["park", "big"], ["green"]]


def test_tokenize_noop_filter_keeps_lowercased_words():
    stream = tokenize("Granite cliffs rise sharply", {"zzz"})
    assert stream.tokens == [["granite", "cliffs", "rise", "sharply"]]


def test_tokenize_rejects_empty_stopwords():
    with pytest.raises(ValueError):
        tokenize("text", set())


def test_split_sentences_requires_uppercase_follow():
    assert split_sentences("He paid 3.50 for tea. Then left.") == [
        "He paid 3.50 for tea.",
        "Then left.",
    ]


# -- marker scan and chains -----------------------------------------------------


def test_scan_accepts_all_marker_forms():
    text = "1. first\n2) second\n3: third\n#4 fourth"
    assert [(m.ordinal, m.raw) for m in scan_markers(text)] == [
        (1, "1."),
        (2, "2)"),
        (3, "3:"),
        (4, "#4"),
    ]


def test_scan_rejects_mid_sentence_and_decimal_numbers():
    assert scan_markers("In 1990 we went. 5 stars!") == []
    assert scan_markers("walk 1.5 km") == []
    assert scan_markers("meet at 10:30 sharp") == []
    assert scan_markers("see item 3. next") == []  # "3." after a word


def test_scan_accepts_post_terminal_and_line_start():
    markers = scan_markers("Intro done. 1. First stop\n  2. Second stop")
    assert [(m.ordinal,) for m in markers] == [(1,), (2,)]


def test_chain_simple():
    chain = find_marker_chain("1. A cat. 2. A dog. 3. A bird.")
    assert [m.ordinal for m in chain.markers] == [1, 2, 3]


def test_chain_requires_sequence_from_one():
    with pytest.raises(NoChainFound):
        find_marker_chain("In 1990 we went. 5 stars!")
    with pytest.raises(NoChainFound):
        find_marker_chain("2. B. 3. C.")  # never starts at 1


def test_chain_restart_takes_longer_later_run():
    chain = find_marker_chain("1. A. 2. B. 1. X. 2. Y. 3. Z.")
    assert [m.ordinal for m in chain.markers] == [1, 2, 3]
    assert chain.markers[0].offset == 12  # the second "1."


def test_chain_tie_prefers_earliest():
    chain = find_marker_chain("1. A. 2. B. 1. C. 2. D.")
    assert chain.markers[0].offset == 0


def test_chain_single_marker_is_not_enough():
    with pytest.raises(NoChainFound):
        find_marker_chain("1. only one entry here")


def test_chain_matches_oracle_on_random_texts():
    rng = random.Random(99)
    for _ in range(150):
        text = random_marker_text(rng, max_len=600)
        expected = oracle_chain(text)
        if expected is None:
            with pytest.raises(NoChainFound):
                find_marker_chain(text)
        else:
            got = find_marker_chain(text)
            assert [(m.ordinal, m.offset, m.raw) for m in got.markers] == expected


# -- extract_attractions -----------------------------------------------------------


def test_extract_name_description_split():
    text = (
        "1. Eiffel Tower Iconic iron lattice tower. "
        "2. Louvre Museum World's largest art museum."
    )
    entries = extract_attractions(text, find_marker_chain(text)).entries
    assert [(e.name, e.description) for e in entries] == [
        ("Eiffel Tower", "Iconic iron lattice tower."),
        ("Louvre Museum", "World's largest art museum."),
    ]


def test_extract_comma_byline_layout():
    text = "1. Cubbon Park, Sarangib for Pixabay. Huge lawns. 2. Stone Gate: Very old."
    entries = extract_attractions(text, find_marker_chain(text)).entries
    assert entries[0].name == "Cubbon Park"
    assert entries[0].description == "Sarangib for Pixabay. Huge lawns."
    assert entries[1].name == "Stone Gate"


def test_extract_whitespace_segment_raises():
    text = "1.   \n2. Real Entry With text."
    with pytest.raises(EmptyEntry):
        extract_attractions(text, find_marker_chain(text))


def test_extract_name_cap_eight_tokens():
    name = "Alpha Beta Gamma Delta Epsilon Zeta Eta Theta Iota"
    text = f"1. {name} and more prose. 2. Other Spot. Fine."
    entries = extract_attractions(text, find_marker_chain(text)).entries
    assert entries[0].name == "Alpha Beta Gamma Delta Epsilon Zeta Eta Theta"


def test_extract_duplicate_names_deduplicated_with_ordinal():
    text = "1. Old Fort. First one. 2. Old Fort. Second one."
    entries = extract_attractions(text, find_marker_chain(text)).entries
    assert entries[0].name == "Old Fort"
    assert entries[1].name == "Old Fort (2)"
    names = [e.name.casefold() for e in entries]
    assert len(names) == len(set(names))


def test_extract_last_entry_stops_at_suggested_read():
    text = "1. Fort One. Old walls. 2. Gate Two. Iron doors. Suggested Read: Other Trips."
    entries = extract_attractions(text, find_marker_chain(text)).entries
    assert entries[1].description == "Iron doors."


def test_extract_last_entry_stops_at_heading_line():
    text = "1. Fort One. Old walls. 2. Gate Two. Iron doors.\nRelated Posts\nMore stuff here."
    entries = extract_attractions(text, find_marker_chain(text)).entries
    assert entries[1].description == "Iron doors."


def test_extract_descriptions_are_disjoint_source_spans():
    rng = random.Random(31)
    for _ in range(20):
        page = generate_page(rng)
        chain = find_marker_chain(page.text)
        entries = extract_attractions(page.text, chain).entries
        assert len(entries) <= len(chain)
        cursor = 0
        for entry in entries:
            pos = page.text.find(entry.description, cursor)
            assert pos >= cursor, f"{entry.description!r} overlaps or missing"
            cursor = pos + len(entry.description)


def test_extract_carries_source_provenance():
    doc = CleanText(text="1. A Fort. Old. 2. A Gate. New.", source="blog")
    entries = extract_attractions(doc, find_marker_chain(doc)).entries
    assert all(e.source == "blog" for e in entries)


# -- extract_from_documents -----------------------------------------------------------


def test_merge_disjoint_keeps_order():
    d1 = "1. Alpha Fort. One. 2. Beta Gate. Two."
    d2 = "1. Gamma Park. Three."  # single entry -> no chain, needs two
    d2 = "1. Gamma Park. Three. 2. Delta Lake. Four."
    merged = extract_from_documents([d1, d2])
    assert merged.names() == ["Alpha Fort", "Beta Gate", "Gamma Park", "Delta Lake"]


def test_merge_keeps_longer_description():
    short = "1. Cubbon Park. Green space. 2. Stone Gate. Old."
    long = "1. Cubbon Park. A very large green space with lawns and paths. 2. Iron Bridge. Rusty."
    merged = extract_from_documents([short, long])
    entry = merged.get("cubbon park")
    assert entry is not None
    assert entry.description == "A very large green space with lawns and paths."
    assert merged.names()[0] == "Cubbon Park"


def test_merge_no_lists_anywhere_raises():
    with pytest.raises(NoAttractionsFound):
        extract_from_documents(["no lists here", "also nothing numbered"])


def test_merge_skips_docs_without_chains():
    good = "1. Alpha Fort. One. 2. Beta Gate. Two."
    merged = extract_from_documents(["prose only", good])
    assert merged.names() == ["Alpha Fort", "Beta Gate"]


def test_merge_requires_documents():
    with pytest.raises(ValueError):
        extract_from_documents([])


def test_merge_order_associative_for_disjoint_sets():
    docs = [
        "1. Alpha Fort. A. 2. Beta Gate. B.",
        "1. Gamma Park. C. 2. Delta Lake. D.",
        "1. Epsilon Falls. E. 2. Zeta Bazaar. F.",
    ]
    merged_once = extract_from_documents(docs).names()
    pairwise = extract_from_documents(
        [docs[0], docs[1]]
    )
    stepped = extract_from_documents([docs[2]])
    combined = pairwise.names() + stepped.names()
    assert merged_once == combined


# -- round-trip against the corpus generator ------------------------------------------


def test_generator_roundtrip_exact():
    rng = random.Random(12345)
    for _ in range(30):
        page = generate_page(rng)
        got = extract_from_documents([CleanText(text=page.text)])
        assert [(e.name, e.description) for e in got] == [
            (e.name, e.description) for e in page.truth
        ]


def test_rendered_ten_entry_dictionary_comes_back_exactly():
    from roamify.corpus import render_page

    rng = random.Random(8)
    entries = [
        AttractionEntry(f"{first} Vista", f"A well loved stop number {i} on every local list.")
        for i, first in enumerate(
            ["Alder", "Birch", "Cinder", "Dune", "Ember", "Flint", "Gale", "Heath", "Iris", "Jade"],
            1,
        )
    ]
    text = render_page(entries, rng)
    got = extract_from_documents([text])
    assert [(e.name, e.description) for e in got] == [
        (e.name, e.description) for e in entries
    ]


def test_dictionary_json_roundtrip():
    d = AttractionDictionary(
        entries=[
            AttractionEntry("Alpha Fort", "Old fort.", "blog"),
            AttractionEntry("Beta Lake", "Quiet lake.", "mag"),
        ]
    )
    assert AttractionDictionary.from_json(d.to_json()) == d
