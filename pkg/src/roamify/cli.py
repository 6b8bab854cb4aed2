"""Command-line surface: run each pipeline stage or the whole thing.

Exit codes: 0 success, 1 usage error, 2 pipeline error (the failing stage
is named on stderr). `--json` prints machine-readable JSON on stdout;
`--llm mock` selects the built-in deterministic gateway so every command
works offline.
"""

from __future__ import annotations

import json
import sys
from datetime import datetime, timezone
from pathlib import Path

import click

from . import __version__
from .errors import EmptyAfterCleaning, RoamifyError
from .extraction import AttractionDictionary, extract_from_documents
from .mockgen import MockGateway
from .pipeline import StageError, run_plan
from .planner import (
    GENRES,
    PreferenceVector,
    TripSpec,
    compare_itineraries,
    generate_itinerary,
)
from .service import ServiceConfig, create_app
from .sources import RawDocument, SourceRegistry, TabRecord, fetch_sources, infer_destination, strip_boilerplate
from .summarizer import (
    HttpGateway,
    LlmConfig,
    build_finetune_dataset,
    records_to_jsonl,
    summarize_attraction,
)
from .wordlists import load_gazetteer, load_genre_lexicon


def _emit(data, as_json: bool, out: str | None, human: str | None = None) -> None:
    text = json.dumps(data, indent=2, ensure_ascii=False)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
        click.echo(f"wrote {out}")
        return
    if as_json or human is None:
        click.echo(text)
    else:
        click.echo(human)


def _load_registry(path: str | None) -> SourceRegistry:
    if path:
        return SourceRegistry.load(path)
    from importlib import resources

    return SourceRegistry.parse(
        resources.files("roamify").joinpath("data", "sources.sample.txt").read_text(encoding="utf-8")
    )


def _load_tabs(path: str) -> list[TabRecord]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    try:
        return [TabRecord(url=item["url"], title=item.get("title", "")) for item in data]
    except (TypeError, KeyError, ValueError) as exc:
        raise click.UsageError(f"bad tabs file {path}: {exc}") from exc


def _parse_prefs(text: str) -> PreferenceVector:
    mapping: dict[str, int] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        genre, sep, value = part.partition("=")
        genre = genre.strip().lower()
        if not sep or genre not in GENRES:
            raise click.UsageError(f"bad preference {part!r}; use genre=rating with genres {', '.join(GENRES)}")
        try:
            mapping[genre] = int(value)
        except ValueError:
            raise click.UsageError(f"rating for {genre} must be an integer") from None
    try:
        return PreferenceVector.from_mapping(mapping)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _make_gateway(llm: str, model: str, timeout: float):
    """Returns (gateway, llm_config); `llm` is "mock" or an endpoint URL."""
    if llm == "mock":
        return MockGateway(), None
    config = LlmConfig(endpoint=llm, model=model, timeout_s=timeout)
    return HttpGateway(config), config


def _resolve_destination(destination, tabs_file, gazetteer_path):
    if (destination is None) == (tabs_file is None):
        raise click.UsageError("provide exactly one of --destination or --tabs-file")
    if destination is not None:
        return destination, None
    tabs = _load_tabs(tabs_file)
    guess = infer_destination(tabs, load_gazetteer(gazetteer_path))
    return guess.destination, guess


def _validate_days(ctx, param, value):
    if value is not None and value < 1:
        raise click.UsageError("--days must be >= 1")
    return value


@click.group()
@click.version_option(version=__version__, prog_name="roamify")
def cli():
    """Scrape travel blogs, extract attractions, and plan itineraries."""


# -- scrape -----------------------------------------------------------------


@cli.command()
@click.option("--destination", help="Place to plan for.")
@click.option("--tabs-file", type=click.Path(exists=True), help="JSON list of open tabs [{url, title}].")
@click.option("--sources", "sources_path", type=click.Path(exists=True), help="Source registry file.")
@click.option("--gazetteer", "gazetteer_path", type=click.Path(exists=True), help="Place-name file.")
@click.option("--budget", default=3, show_default=True, help="Max sources to fetch.")
@click.option("--json", "as_json", is_flag=True, help="JSON output.")
@click.option("--out", help="Write output to a file.")
def scrape(destination, tabs_file, sources_path, gazetteer_path, budget, as_json, out):
    """Fetch registered sources for a destination and strip boilerplate."""
    if budget < 1:
        raise click.UsageError("--budget must be >= 1")
    destination, guess = _resolve_destination(destination, tabs_file, gazetteer_path)
    if guess:
        click.echo(f"inferred destination: {guess.destination} (confidence {guess.confidence:.2f})", err=True)
    registry = _load_registry(sources_path)
    docs = fetch_sources(destination, registry, budget=budget)
    cleaned = []
    for doc in docs:
        try:
            cleaned.append(strip_boilerplate(doc))
        except RoamifyError:
            continue
    if not cleaned:
        raise EmptyAfterCleaning("every fetched page was empty after cleaning")
    data = [{"source": c.source, "url": c.url, "text": c.text} for c in cleaned]
    human = "\n".join(f"{c.source}  {c.url}  ({len(c.text)} chars)" for c in cleaned)
    _emit(data, as_json, out, human)


# -- extract -----------------------------------------------------------------


@cli.command()
@click.option("--in", "inputs", multiple=True, required=True, type=click.Path(exists=True), help="Page file (HTML or text); repeatable.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", help="Write output to a file.")
def extract(inputs, as_json, out):
    """Extract the attraction dictionary from page files."""
    documents = []
    for path in inputs:
        body = Path(path).read_text(encoding="utf-8")
        doc = RawDocument(
            source=Path(path).name,
            url=f"file://{Path(path).resolve()}",
            fetched_at=datetime.now(timezone.utc),
            body=body,
        )
        documents.append(strip_boilerplate(doc))
    dictionary = extract_from_documents(documents)
    human = "\n".join(f"{e.name}: {e.description[:60]}" for e in dictionary)
    _emit(dictionary.to_json(), as_json, out, human)


# -- summarize -----------------------------------------------------------------


@cli.command()
@click.option("--in", "input_path", required=True, type=click.Path(exists=True), help="Attraction dictionary JSON.")
@click.option("--mode", type=click.Choice(["fallback", "gateway"]), default="fallback", show_default=True)
@click.option("--llm", default="mock", show_default=True, help="Endpoint URL or 'mock'.")
@click.option("--model", default="llama3", show_default=True)
@click.option("--timeout", default=60.0, show_default=True)
@click.option("--sentences", default=3, show_default=True, help="Fallback sentence budget.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", help="Write output to a file.")
def summarize(input_path, mode, llm, model, timeout, sentences, as_json, out):
    """Condense every dictionary description."""
    if sentences < 1:
        raise click.UsageError("--sentences must be >= 1")
    dictionary = AttractionDictionary.from_json(json.loads(Path(input_path).read_text(encoding="utf-8")))
    gateway, config = _make_gateway(llm, model, timeout)
    engine = None
    summaries = {}
    for entry in dictionary:
        result = summarize_attraction(
            entry.name,
            entry.description,
            config=config,
            mode=mode,
            gateway=gateway if mode == "gateway" else None,
            sentence_budget=sentences,
        )
        engine = result.engine
        summaries[entry.name] = result.summary
    human = "\n".join(f"{name}: {text}" for name, text in summaries.items())
    _emit({"engine": engine, "summaries": summaries}, as_json, out, human)


# -- plan -----------------------------------------------------------------------


def _pipeline_args(destination, tabs_file, sources_path, gazetteer_path, budget, llm, model, timeout, prefs):
    if budget < 1:
        raise click.UsageError("--budget must be >= 1")
    gateway, config = _make_gateway(llm, model, timeout)
    registry = _load_registry(sources_path)
    gazetteer = load_gazetteer(gazetteer_path)
    tabs = _load_tabs(tabs_file) if tabs_file else None
    if (destination is None) == (tabs is None):
        raise click.UsageError("provide exactly one of --destination or --tabs-file")
    return dict(
        destination=destination,
        tabs=tabs,
        preferences=prefs,
        registry=registry,
        gazetteer=gazetteer,
        budget=budget,
        gateway=gateway,
        llm_config=config,
    )


@cli.command()
@click.option("--destination", help="Place to plan for.")
@click.option("--tabs-file", type=click.Path(exists=True), help="JSON list of open tabs.")
@click.option("--days", required=True, type=int, callback=_validate_days)
@click.option("--prefs", help="Genre ratings, e.g. historical=5,natural=2 (others default to 3).")
@click.option("--no-prefs", is_flag=True, help="Plan without a preference clause.")
@click.option("--sources", "sources_path", type=click.Path(exists=True))
@click.option("--gazetteer", "gazetteer_path", type=click.Path(exists=True))
@click.option("--budget", default=3, show_default=True)
@click.option("--llm", default="mock", show_default=True, help="Endpoint URL or 'mock'.")
@click.option("--model", default="llama3", show_default=True)
@click.option("--timeout", default=60.0, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", help="Write output to a file.")
def plan(destination, tabs_file, days, prefs, no_prefs, sources_path, gazetteer_path,
         budget, llm, model, timeout, as_json, out):
    """Run the whole pipeline and print the itinerary."""
    if prefs and no_prefs:
        raise click.UsageError("--prefs and --no-prefs are mutually exclusive")
    preferences = _parse_prefs(prefs) if prefs else None
    args = _pipeline_args(destination, tabs_file, sources_path, gazetteer_path, budget, llm, model, timeout, preferences)
    result = run_plan(days=days, **args)
    itinerary = result.itinerary.to_json()
    human_lines = []
    for day in itinerary["days"]:
        human_lines.append(f"Day {day['day']}:")
        for act in day["activities"]:
            human_lines.append(f"  {act['time']}  {act['name']}")
        for note in day["notes"]:
            human_lines.append(f"  {note}")
    _emit(itinerary, as_json, out, "\n".join(human_lines))


# -- compare -----------------------------------------------------------------------


@cli.command()
@click.option("--destination", help="Place to plan for.")
@click.option("--tabs-file", type=click.Path(exists=True))
@click.option("--days", required=True, type=int, callback=_validate_days)
@click.option("--prefs", required=True, help="Genre ratings the weighted itinerary should follow.")
@click.option("--sources", "sources_path", type=click.Path(exists=True))
@click.option("--gazetteer", "gazetteer_path", type=click.Path(exists=True))
@click.option("--budget", default=3, show_default=True)
@click.option("--llm", default="mock", show_default=True)
@click.option("--model", default="llama3", show_default=True)
@click.option("--timeout", default=60.0, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", help="Write output to a file.")
def compare(destination, tabs_file, days, prefs, sources_path, gazetteer_path,
            budget, llm, model, timeout, as_json, out):
    """Generate preference-weighted and generic itineraries and score both."""
    preferences = _parse_prefs(prefs)
    args = _pipeline_args(destination, tabs_file, sources_path, gazetteer_path, budget, llm, model, timeout, preferences)
    result = run_plan(days=days, **args)
    generic_spec = TripSpec(destination=result.destination, days=days, preferences=None)
    try:
        generic = generate_itinerary(
            generic_spec, result.dictionary, result.summaries,
            config=args["llm_config"], gateway=args["gateway"],
        )
    except RoamifyError as exc:
        raise StageError("planner", exc) from exc
    report = compare_itineraries(result.itinerary, generic, preferences, result.tags)
    data = {
        "report": report.to_json(),
        "with_preferences": result.itinerary.to_json(),
        "without_preferences": generic.to_json(),
    }
    human = (
        f"weighted divergence:  {report.first.divergence:.4f}\n"
        f"generic divergence:   {report.second.divergence:.4f}\n"
        f"difference:           {report.divergence_difference:+.4f}"
    )
    _emit(data, as_json, out, human)


# -- dataset -----------------------------------------------------------------------


@cli.command()
@click.option("--dict", "dict_path", required=True, type=click.Path(exists=True), help="Attraction dictionary JSON.")
@click.option("--refs", "refs_path", required=True, type=click.Path(exists=True), help="JSON map of name to reference summary.")
@click.option("--out", required=True, help="JSONL output path.")
def dataset(dict_path, refs_path, out):
    """Build (context, summary) fine-tune records as JSONL.

    References that do not actually condense their context (summary not
    strictly shorter) are skipped with a warning; records must pair a
    context with something shorter to be worth training on.
    """
    dictionary = AttractionDictionary.from_json(json.loads(Path(dict_path).read_text(encoding="utf-8")))
    refs = json.loads(Path(refs_path).read_text(encoding="utf-8"))
    if isinstance(refs, dict) and "summaries" in refs:
        refs = refs["summaries"]
    usable = {}
    for name, summary in refs.items():
        entry = dictionary.get(name)
        if entry is not None and len(summary) >= len(entry.description):
            click.echo(f"skipping {name!r}: summary does not condense its context", err=True)
            continue
        usable[name] = summary
    records = build_finetune_dataset(dictionary, usable)
    Path(out).write_text(records_to_jsonl(records) + "\n", encoding="utf-8")
    click.echo(f"wrote {len(records)} records to {out}")


# -- serve -----------------------------------------------------------------------


@cli.command()
@click.option("--bind", default=None, help="host:port (default 127.0.0.1:8765).")
@click.option("--store", default=None, help="Plan store directory.")
@click.option("--sources", "sources_path", type=click.Path(exists=True))
@click.option("--gazetteer", "gazetteer_path", type=click.Path(exists=True))
@click.option("--llm", default=None, help="Endpoint URL or 'mock'.")
@click.option("--model", default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), help="key = value config file.")
def serve(bind, store, sources_path, gazetteer_path, llm, model, config_path):
    """Serve the HTTP API (and the UI's backend)."""
    import dataclasses

    import uvicorn

    config = ServiceConfig.from_file(config_path) if config_path else ServiceConfig()
    overrides = {}
    if bind:
        overrides["bind"] = bind
    if store:
        overrides["store_dir"] = store
    if sources_path:
        overrides["registry_path"] = sources_path
    if gazetteer_path:
        overrides["gazetteer_path"] = gazetteer_path
    if llm:
        overrides["llm_endpoint"] = llm
    if model:
        overrides["llm_model"] = model
    if overrides:
        config = dataclasses.replace(config, **overrides)
    config = config.with_env()
    host, port = config.host_port()
    uvicorn.run(create_app(config), host=host, port=port)


# -- entry point --------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except StageError as exc:
        click.echo(f"error in {exc.stage} stage: {exc}", err=True)
        return 2
    except RoamifyError as exc:
        click.echo(f"error in {exc.stage} stage: {exc}", err=True)
        return 2
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
