"""Shared fixtures: golden texts, a scriptable local HTTP server, corpora."""

from __future__ import annotations

import json
import socket
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest

# Golden summarization fixture: a scraped park description with the junk
# tail travel blogs append, plus the reference summary it should condense to.
CUBBON_DESCRIPTION = (
    "Cubbon Park, Sarangib for Pixabay. Situated over a sprawling 300 acres of land, "
    "the park was constructed by Richard Sankey. This massive green park, along with "
    "lawns, deserves a special mention. Offering statues of famous personalities, the "
    "park is one among the popular places to visit in Bangalore with friends. "
    "Location: Kasturba Road, Behind High Court of Karnataka, Ambedkar Veedhi, "
    "Sampangi Rama Nagara, Bangalore. Timings: Open on all days. Entry Fee: No entry "
    "fee. Suggested Read: Resorts Near Bangalore."
)
CUBBON_REFERENCE_SUMMARY = (
    "Cubbon Park, spanning 300 acres and constructed by Richard Sankey, is a massive "
    "green space in Bangalore featuring lawns and statues of famous personalities. "
    "Located on Kasturba Road, it is a popular spot for outings with friends. The "
    "park is open daily with no entry fee."
)


def chat_payload(text: str) -> bytes:
    return json.dumps(
        {
            "id": "stub-1",
            "object": "chat.completion",
            "choices": [
                {
                    "index": 0,
                    "finish_reason": "stop",
                    "message": {"role": "assistant", "content": text},
                }
            ],
        }
    ).encode("utf-8")


class StubServer:
    """Local HTTP server with per-path handlers and request recording.

    Route values are callables (method, body_bytes) -> (status, bytes) or
    (status, bytes, content_type). Unrouted paths get a 404.
    """

    def __init__(self):
        self.routes = {}
        self.requests: list[tuple[str, str, bytes]] = []
        self.headers: list[dict[str, str]] = []
        self._httpd = ThreadingHTTPServer(("127.0.0.1", 0), _StubHandler)
        self._httpd.daemon_threads = True
        self._httpd.stub = self
        self._thread = threading.Thread(target=self._httpd.serve_forever, daemon=True)
        self._thread.start()

    @property
    def port(self) -> int:
        return self._httpd.server_address[1]

    def url(self, path: str = "/") -> str:
        return f"http://127.0.0.1:{self.port}{path}"

    def route_text(self, path: str, body: str, status: int = 200):
        data = body.encode("utf-8")
        self.routes[path] = lambda method, req: (status, data)

    def route_chat(self, path: str, text: str):
        self.routes[path] = lambda method, req: (200, chat_payload(text), "application/json")

    def route_chat_echo(self, path: str):
        def handler(method, req):
            prompt = json.loads(req)["messages"][0]["content"]
            return 200, chat_payload(prompt), "application/json"

        self.routes[path] = handler

    def stop(self):
        self._httpd.shutdown()
        self._httpd.server_close()


class _StubHandler(BaseHTTPRequestHandler):
    def log_message(self, *args):
        pass

    def _handle(self):
        stub = self.server.stub
        length = int(self.headers.get("Content-Length") or 0)
        body = self.rfile.read(length) if length else b""
        stub.requests.append((self.command, self.path, body))
        stub.headers.append({k.lower(): v for k, v in self.headers.items()})
        handler = stub.routes.get(self.path)
        if handler is None:
            result = (404, b"not found")
        else:
            result = handler(self.command, body)
        status, payload = result[0], result[1]
        content_type = result[2] if len(result) > 2 else "text/html; charset=utf-8"
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)

    do_GET = _handle
    do_POST = _handle


@pytest.fixture
def stub_server():
    server = StubServer()
    yield server
    server.stop()


@pytest.fixture
def closed_port() -> int:
    """A port nothing listens on (connection refused immediately)."""
    sock = socket.socket()
    sock.bind(("127.0.0.1", 0))
    port = sock.getsockname()[1]
    sock.close()
    return port


@pytest.fixture
def cubbon_description() -> str:
    return CUBBON_DESCRIPTION


@pytest.fixture
def cubbon_reference_summary() -> str:
    return CUBBON_REFERENCE_SUMMARY


def genre_entries():
    """A genre-diverse attraction set: 6 historical plus 2 each of
    amusement, natural, cultural (by the bundled lexicon)."""
    from roamify.extraction import AttractionEntry

    return [
        AttractionEntry("Stone Fort", "An ancient fort with ramparts and a colonial armoury."),
        AttractionEntry("River Palace", "A historic palace of the old dynasty beside the river."),
        AttractionEntry("Summit Citadel", "Medieval citadel ruins with heritage inscriptions."),
        AttractionEntry("Old Monument", "A towering monument from the ancient empire."),
        AttractionEntry("Kings Tomb", "The mausoleum and tomb of a medieval ruler."),
        AttractionEntry("War Memorial", "A memorial near a famous battlefield."),
        AttractionEntry("Wonder Wheel", "A giant wheel with rides and arcade games."),
        AttractionEntry("Splash Lagoon", "A water park with thrill rides for families."),
        AttractionEntry("Green Meadow", "A park with lawns, gardens and a small lake."),
        AttractionEntry("Mirror Lake", "A calm lake with a scenic waterfall and forest trails."),
        AttractionEntry("City Gallery", "An art gallery and museum of local culture."),
        AttractionEntry("Silk Bazaar", "A lively bazaar of craft stalls and street music."),
    ]


def write_fixture_site(root, destinations=("paris",), seed=3):
    """Write one fixture page per destination plus a file:// registry.

    Returns (registry_path, pages_dir). Pages carry the genre_entries list.
    """
    import random

    from roamify.corpus import render_page

    pages = root / "pages"
    pages.mkdir(parents=True, exist_ok=True)
    rng = random.Random(seed)
    for destination in destinations:
        slug = destination.lower().replace(" ", "-")
        (pages / f"{slug}.txt").write_text(
            render_page(genre_entries(), rng), encoding="utf-8"
        )
    registry = root / "sources.txt"
    registry.write_text(
        f"fixture | file://{pages}/{{destination}}.txt | 0\n", encoding="utf-8"
    )
    return registry, pages


@pytest.fixture
def fixture_site(tmp_path):
    return write_fixture_site(tmp_path, destinations=("paris", "bangalore"))
