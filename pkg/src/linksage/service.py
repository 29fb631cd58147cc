"""Read-only HTTP facade over trained models.

The server holds one immutable ModelSnapshot; every handler reads from it
and no request mutates state, so identical requests return byte-identical
JSON bodies. All responses carry Content-Type: application/json and a
permissive CORS header (the UI is served separately during development).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .classifier import MnbModel, load_classifier, predict_mnb
from .errors import LinksageError
from .history import HistoryRecord, parse_history
from .links import predict_links
from .recommend import (
    CategorizedLink,
    category_probabilities,
    category_totals,
    load_catalog,
    rank_categories,
    recommend,
    score_history,
)
from .regression import LinearModel, load_linear_model

DEFAULT_PORT = 8099
DEFAULT_PREDICT_K = 10
DEFAULT_RECOMMEND_K = 3


@dataclass
class ModelSnapshot:
    """Everything the endpoints read; immutable after load."""

    linear_model: LinearModel
    mnb_model: MnbModel
    scored_history: list[CategorizedLink]
    catalog: dict[str, list[str]]
    loaded_at: float


def build_snapshot(
    records: list[HistoryRecord],
    linear_model: LinearModel,
    mnb_model: MnbModel,
    catalog: dict[str, list[str]],
) -> ModelSnapshot:
    """Score and categorize every history record with the trained models."""
    scored = score_history(records, linear_model, mnb_model)
    return ModelSnapshot(linear_model, mnb_model, scored, catalog, time.time())


def load_snapshot(history_path, linear_model_path, classifier_path, catalog_path) -> ModelSnapshot:
    records = parse_history(Path(history_path).read_text())
    linear_model = load_linear_model(linear_model_path)
    mnb_model = load_classifier(classifier_path)
    catalog = load_catalog(catalog_path)
    return build_snapshot(records, linear_model, mnb_model, catalog)


class LinkService(ThreadingHTTPServer):
    """HTTP server bound to a snapshot; snapshot=None answers 503 everywhere."""

    def __init__(self, address: tuple[str, int], snapshot: ModelSnapshot | None = None):
        super().__init__(address, _Handler)
        self.snapshot = snapshot


class _Handler(BaseHTTPRequestHandler):
    server: LinkService

    def log_message(self, format: str, *args) -> None:  # noqa: A002 - stdlib signature
        pass  # request logging is noise for a local read-only service

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _snapshot_or_503(self) -> ModelSnapshot | None:
        snapshot = self.server.snapshot
        if snapshot is None:
            self._send_json(503, {"error": "model snapshot not loaded"})
        return snapshot

    def _int_param(self, params: dict, name: str, default: int) -> int | None:
        raw = params.get(name, [str(default)])[-1]
        try:
            return int(raw)
        except ValueError:
            self._send_json(400, {"error": f"{name} must be an integer, got {raw!r}"})
            return None

    def do_OPTIONS(self) -> None:
        # Browsers preflight cross-origin POSTs with a JSON content type.
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        url = urlparse(self.path)
        params = parse_qs(url.query, keep_blank_values=True)
        if url.path == "/api/predict":
            self._handle_predict(params)
        elif url.path == "/api/recommendations":
            self._handle_recommendations(params)
        else:
            self._send_json(404, {"error": f"unknown path {url.path}"})

    def do_POST(self) -> None:
        url = urlparse(self.path)
        if url.path == "/api/classify":
            self._handle_classify()
        else:
            self._send_json(404, {"error": f"unknown path {url.path}"})

    def _handle_predict(self, params: dict) -> None:
        snapshot = self._snapshot_or_503()
        if snapshot is None:
            return
        query = params.get("q", [""])[-1]
        k = self._int_param(params, "k", DEFAULT_PREDICT_K)
        if k is None:
            return
        if k < 1:
            self._send_json(400, {"error": f"k must be >= 1, got {k}"})
            return
        links = predict_links(query, snapshot.scored_history, k)
        self._send_json(
            200,
            {
                "query": query,
                "links": [
                    {"url": link.url, "visit_count": link.visit_count, "frecency": link.frecency}
                    for link in links
                ],
            },
        )

    def _handle_recommendations(self, params: dict) -> None:
        snapshot = self._snapshot_or_503()
        if snapshot is None:
            return
        k = self._int_param(params, "k", DEFAULT_RECOMMEND_K)
        if k is None:
            return
        if k < 0:
            self._send_json(400, {"error": f"k must be >= 0, got {k}"})
            return
        if not snapshot.scored_history:
            self._send_json(200, {"ranking": [], "recommendations": []})
            return
        try:
            ranked = rank_categories(category_probabilities(category_totals(snapshot.scored_history)))
        except LinksageError as exc:
            self._send_json(500, {"error": f"{type(exc).__name__}: {exc}"})
            return
        visited = {link.url for link in snapshot.scored_history}
        picks = recommend([score.category for score in ranked], snapshot.catalog, visited, k)
        self._send_json(
            200,
            {
                "ranking": [
                    {"category": score.category, "probability": score.probability}
                    for score in ranked
                ],
                "recommendations": [
                    {"category": category, "urls": urls} for category, urls in picks
                ],
            },
        )

    def _handle_classify(self) -> None:
        snapshot = self._snapshot_or_503()
        if snapshot is None:
            return
        try:
            length = int(self.headers.get("Content-Length", ""))
        except ValueError:
            self._send_json(400, {"error": "missing Content-Length"})
            return
        try:
            payload = json.loads(self.rfile.read(length).decode("utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError):
            self._send_json(400, {"error": "body is not valid JSON"})
            return
        if not isinstance(payload, dict) or not isinstance(payload.get("urls"), list):
            self._send_json(400, {"error": 'body must be {"urls": [...]}'})
            return
        urls = payload["urls"]
        if not all(isinstance(url, str) for url in urls):
            self._send_json(400, {"error": "urls must all be strings"})
            return
        if not urls:
            self._send_json(422, {"error": "urls list is empty"})
            return
        results = []
        for url in urls:
            category, scores = predict_mnb(snapshot.mnb_model, url)
            results.append({"url": url, "category": category, "scores": scores})
        self._send_json(200, {"results": results})


def run(snapshot: ModelSnapshot, port: int = DEFAULT_PORT, host: str = "127.0.0.1") -> None:
    """Serve until interrupted."""
    server = LinkService((host, port), snapshot)
    try:
        server.serve_forever()
    finally:
        server.server_close()
