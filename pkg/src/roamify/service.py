"""HTTP surface over the pipeline, with file-backed plan persistence.

One JSON document per plan, filename = id, so the store survives restarts
and can be inspected with any text editor. GET answers serve the stored
bytes verbatim, which keeps reads byte-identical to the POST that created
them.
"""

from __future__ import annotations

import dataclasses
import json
import os
import re
import secrets
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.concurrency import run_in_threadpool
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from . import __version__
from .errors import GatewayTimeout, RoamifyError
from .extraction import AttractionDictionary
from .mockgen import MockGateway
from .pipeline import StageError, run_plan
from .planner import (
    PreferenceVector,
    TripSpec,
    classify_genre,
    compare_itineraries,
    generate_itinerary,
    Itinerary,
)
from .sources import (
    DEFAULT_BUDGET,
    DEFAULT_PARALLELISM,
    SourceRegistry,
    TabRecord,
    infer_destination,
)
from .summarizer import HttpGateway, LlmConfig
from .wordlists import load_gazetteer, load_genre_lexicon

_ID_CHARS = re.compile(r"^[A-Za-z0-9\-]+$")

ENV_BIND = "ROAMIFY_BIND"
ENV_STORE = "ROAMIFY_STORE"
ENV_LLM_ENDPOINT = "ROAMIFY_LLM_ENDPOINT"
ENV_LLM_KEY_VAR = "ROAMIFY_LLM_KEY_VAR"


# -- configuration -------------------------------------------------------------


@dataclass(frozen=True)
class ServiceConfig:
    bind: str = "127.0.0.1:8765"
    store_dir: str = "plans"
    registry_path: str | None = None
    gazetteer_path: str | None = None
    llm_endpoint: str = "mock"
    llm_model: str = "llama3"
    llm_key_var: str = "ROAMIFY_LLM_KEY"
    llm_timeout_s: float = 60.0
    fetch_budget: int = DEFAULT_BUDGET
    parallelism: int = DEFAULT_PARALLELISM
    summary_mode: str = "fallback"
    cors_origin: str = "*"

    _FIELDS = (
        "bind", "store_dir", "registry_path", "gazetteer_path", "llm_endpoint",
        "llm_model", "llm_key_var", "llm_timeout_s", "fetch_budget",
        "parallelism", "summary_mode", "cors_origin",
    )

    @classmethod
    def from_file(cls, path: str | Path) -> "ServiceConfig":
        """Key-value config file: one `key = value` per line, # comments."""
        values: dict[str, object] = {}
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or key not in cls._FIELDS:
                raise ValueError(f"config line {lineno}: unknown setting {key!r}")
            if key in ("fetch_budget", "parallelism"):
                values[key] = int(value)
            elif key == "llm_timeout_s":
                values[key] = float(value)
            else:
                values[key] = value
        return cls(**values)

    def with_env(self, environ=os.environ) -> "ServiceConfig":
        overrides = {}
        if environ.get(ENV_BIND):
            overrides["bind"] = environ[ENV_BIND]
        if environ.get(ENV_STORE):
            overrides["store_dir"] = environ[ENV_STORE]
        if environ.get(ENV_LLM_ENDPOINT):
            overrides["llm_endpoint"] = environ[ENV_LLM_ENDPOINT]
        if environ.get(ENV_LLM_KEY_VAR):
            overrides["llm_key_var"] = environ[ENV_LLM_KEY_VAR]
        return dataclasses.replace(self, **overrides) if overrides else self

    def host_port(self) -> tuple[str, int]:
        host, _, port = self.bind.rpartition(":")
        return host or "127.0.0.1", int(port)


# -- persistence ----------------------------------------------------------------


def new_plan_id() -> str:
    stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S%f")
    return f"{stamp}-{secrets.token_hex(4)}"


class PlanStore:
    """One JSON file per plan; atomic writes; ids sort newest-first."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, plan_id: str) -> Path:
        if not _ID_CHARS.match(plan_id):
            raise ValueError(f"bad plan id: {plan_id!r}")
        return self.root / f"{plan_id}.json"

    def save(self, plan_id: str, payload: bytes) -> None:
        target = self._path(plan_id)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as handle:
                handle.write(payload)
            os.replace(tmp, target)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise

    def load(self, plan_id: str) -> bytes | None:
        try:
            path = self._path(plan_id)
        except ValueError:
            return None
        if not path.exists():
            return None
        return path.read_bytes()

    def ids(self) -> list[str]:
        return sorted((p.stem for p in self.root.glob("*.json")), reverse=True)


# -- request parsing helpers -------------------------------------------------------


class _BadRequest(Exception):
    pass


def _parse_days(body: dict) -> int:
    days = body.get("days")
    if not isinstance(days, int) or isinstance(days, bool) or days < 1:
        raise _BadRequest("days must be an integer >= 1")
    return days


def _parse_preferences(body: dict) -> PreferenceVector | None:
    prefs = body.get("preferences")
    if prefs is None:
        return None
    if not isinstance(prefs, dict):
        raise _BadRequest("preferences must be an object of genre ratings")
    try:
        return PreferenceVector.from_mapping(prefs)
    except (ValueError, TypeError) as exc:
        raise _BadRequest(str(exc)) from exc


def _parse_tabs(body: dict) -> list[TabRecord] | None:
    tabs = body.get("tabs")
    if tabs is None:
        return None
    if not isinstance(tabs, list) or not tabs:
        raise _BadRequest("tabs must be a non-empty array")
    records = []
    for item in tabs:
        if not isinstance(item, dict) or "url" not in item:
            raise _BadRequest("each tab needs a url")
        try:
            records.append(TabRecord(url=item["url"], title=item.get("title", "")))
        except ValueError as exc:
            raise _BadRequest(str(exc)) from exc
    return records


def _error(status: int, message: str, stage: str | None = None, raw: str | None = None) -> JSONResponse:
    payload: dict = {"error": {"message": message}}
    if stage:
        payload["error"]["stage"] = stage
    if raw is not None:
        payload["error"]["raw"] = raw
    return JSONResponse(payload, status_code=status)


def _stage_response(exc: StageError) -> JSONResponse:
    if isinstance(exc.cause, GatewayTimeout):
        return _error(504, str(exc), stage=exc.stage)
    return _error(422, str(exc), stage=exc.stage, raw=exc.raw)


# -- application -----------------------------------------------------------------


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = (config or ServiceConfig()).with_env()
    for label, path in (("registry", config.registry_path), ("gazetteer", config.gazetteer_path)):
        if path is not None and not Path(path).is_file():
            raise FileNotFoundError(f"{label} file not readable: {path}")

    if config.registry_path:
        registry = SourceRegistry.load(config.registry_path)
    else:
        registry = SourceRegistry.parse(
            resources.files("roamify").joinpath("data", "sources.sample.txt").read_text(encoding="utf-8")
        )
    gazetteer = load_gazetteer(config.gazetteer_path)
    lexicon = load_genre_lexicon()
    store = PlanStore(config.store_dir)
    if config.llm_endpoint == "mock":
        gateway = MockGateway(lexicon)
        llm_config = None
    else:
        llm_config = LlmConfig(
            endpoint=config.llm_endpoint,
            model=config.llm_model,
            timeout_s=config.llm_timeout_s,
            api_key_var=config.llm_key_var,
        )
        gateway = HttpGateway(llm_config)

    app = FastAPI(title="roamify", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[config.cors_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.config = config
    app.state.store = store

    @app.get("/api/health")
    async def health():
        return {"status": "ok", "version": __version__}

    @app.post("/api/infer")
    async def infer(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "body must be JSON")
        try:
            tabs = _parse_tabs(body)
            if tabs is None:
                raise _BadRequest("tabs array is required")
        except _BadRequest as exc:
            return _error(400, str(exc))
        try:
            guess = infer_destination(tabs, gazetteer)
        except RoamifyError as exc:
            return _error(422, str(exc), stage="sources")
        return {
            "destination": guess.destination,
            "confidence": guess.confidence,
            "evidence": [list(pair) for pair in guess.evidence],
        }

    @app.post("/api/plan")
    async def create_plan(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "body must be JSON")
        if not isinstance(body, dict):
            return _error(400, "body must be a JSON object")
        destination = body.get("destination")
        try:
            tabs = _parse_tabs(body)
            if (destination is None) == (tabs is None):
                raise _BadRequest("provide exactly one of destination or tabs")
            if destination is not None and (not isinstance(destination, str) or not destination.strip()):
                raise _BadRequest("destination must be a non-empty string")
            days = _parse_days(body)
            preferences = _parse_preferences(body)
        except _BadRequest as exc:
            return _error(400, str(exc))

        try:
            result = await run_in_threadpool(
                run_plan,
                destination=destination,
                tabs=tabs,
                days=days,
                preferences=preferences,
                registry=registry,
                gazetteer=gazetteer,
                budget=config.fetch_budget,
                parallelism=config.parallelism,
                gateway=gateway,
                llm_config=llm_config,
                summary_mode=config.summary_mode,
                lexicon=lexicon,
            )
        except StageError as exc:
            return _stage_response(exc)

        plan_id = new_plan_id()
        record = {
            "id": plan_id,
            "created_at": datetime.now(timezone.utc).isoformat(),
            "destination": result.destination,
            "days": days,
            "preferences": preferences.as_dict() if preferences else None,
            "inferred": (
                {"destination": result.guess.destination, "confidence": result.guess.confidence}
                if result.guess
                else None
            ),
            "dictionary": result.dictionary.to_json(),
            "summaries": result.summaries,
            "genres": {tag.name: tag.genre for tag in result.tags},
            "itinerary": result.itinerary.to_json(),
        }
        payload = json.dumps(record, indent=2, ensure_ascii=False).encode("utf-8")
        store.save(plan_id, payload)
        return Response(content=payload, media_type="application/json")

    @app.get("/api/plans")
    async def list_plans():
        summaries = []
        for plan_id in store.ids():
            payload = store.load(plan_id)
            if payload is None:
                continue
            record = json.loads(payload)
            summaries.append(
                {
                    "id": record["id"],
                    "destination": record["destination"],
                    "days": record["days"],
                    "created_at": record["created_at"],
                }
            )
        return summaries

    @app.get("/api/plan/{plan_id}")
    async def get_plan(plan_id: str):
        payload = store.load(plan_id)
        if payload is None:
            return _error(404, f"unknown plan id {plan_id!r}")
        return Response(content=payload, media_type="application/json")

    @app.post("/api/plan/{plan_id}/compare")
    async def compare_plan(plan_id: str, request: Request):
        payload = store.load(plan_id)
        if payload is None:
            return _error(404, f"unknown plan id {plan_id!r}")
        try:
            body = await request.json()
        except Exception:
            body = {}
        if not isinstance(body, dict):
            return _error(400, "body must be a JSON object")
        try:
            alt_prefs = _parse_preferences(body)
        except _BadRequest as exc:
            return _error(400, str(exc))

        record = json.loads(payload)
        dictionary = AttractionDictionary.from_json(record["dictionary"])
        summaries = record["summaries"]
        original = Itinerary.from_json(record["itinerary"])
        stored_prefs = (
            PreferenceVector.from_mapping(record["preferences"])
            if record.get("preferences")
            else None
        )
        spec = TripSpec(destination=record["destination"], days=record["days"], preferences=alt_prefs)
        try:
            alternative = await run_in_threadpool(
                generate_itinerary, spec, dictionary, summaries, llm_config, gateway
            )
        except GatewayTimeout as exc:
            return _error(504, str(exc), stage="planner")
        except RoamifyError as exc:
            return _error(422, str(exc), stage="planner", raw=getattr(exc, "raw", None))

        reference = stored_prefs or alt_prefs or PreferenceVector(3, 3, 3, 3)
        tags = [classify_genre(e.name, e.description, lexicon) for e in dictionary]
        report = compare_itineraries(original, alternative, reference, tags)
        return {
            "report": report.to_json(),
            "original": original.to_json(),
            "alternative": alternative.to_json(),
        }

    return app
