"""Stateless JSON-over-HTTP facade.

Every handler deserializes its body, calls one library function, and
serializes the result; no state lives on the server. Failures split on
a single boundary: anything wrong with the request body itself (bad
JSON, missing or mistyped fields, payloads the deserializers reject) is
HTTP 400, while mathematically invalid requests that parsed fine come
back as HTTP 422 with the library's structured error payload. Domain
failures never surface as 500.
"""
from __future__ import annotations

import json
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .arquiver import cat_object, cluster_variable_of
from .errors import DomainError
from .exchange import enumerate_seeds
from .frieze import LightningBolt, from_triangulation, symbolic_from_bolt
from .polygon import Triangulation, flip
from .quiver import Quiver
from .seed import Seed, mutate_seed

DEFAULT_PORT = 8780


class _Malformed(Exception):
    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


def _field(body, name):
    if not isinstance(body, dict) or name not in body:
        raise _Malformed(f"body must be an object with a '{name}' field")
    return body[name]


def _parse(fn):
    """Run a deserializer; its domain errors mean the body is malformed."""
    try:
        return fn()
    except DomainError as exc:
        raise _Malformed(exc.detail) from exc


def _int_field(body, name):
    v = _field(body, name)
    if not isinstance(v, int) or isinstance(v, bool):
        raise _Malformed(f"'{name}' must be an integer")
    return v


def _pair_field(body, name):
    v = _field(body, name)
    if (
        not isinstance(v, list)
        or len(v) != 2
        or any(not isinstance(x, int) or isinstance(x, bool) for x in v)
    ):
        raise _Malformed(f"'{name}' must be a pair of integers")
    return (v[0], v[1])


def _handle_quiver_mutate(body, cfg):
    q = _parse(lambda: Quiver.from_json_obj(_field(body, "quiver")))
    k = _int_field(body, "k")
    return {"quiver": q.mutate(k).to_json_obj()}


def _handle_seed_mutate(body, cfg):
    s = _parse(lambda: Seed.from_json_obj(_field(body, "seed")))
    k = _int_field(body, "k")
    return {"seed": mutate_seed(s, k).to_json_obj()}


def _handle_exchange_enumerate(body, cfg):
    q = _parse(lambda: Quiver.from_json_obj(_field(body, "quiver")))
    budget = _int_field(body, "budget")
    cap = cfg.get("budget_max")
    if cap is not None:
        budget = min(budget, cap)
    return {"graph": enumerate_seeds(q, budget=budget).to_json_obj()}


def _handle_polygon_flip(body, cfg):
    t = _parse(lambda: Triangulation.from_json_obj(_field(body, "triangulation")))
    d = _pair_field(body, "diagonal")
    return {"triangulation": flip(t, d).to_json_obj()}


def _handle_frieze_from_triangulation(body, cfg):
    t = _parse(lambda: Triangulation.from_json_obj(_field(body, "triangulation")))
    return {"frieze": from_triangulation(t).to_json_obj()}


def _handle_frieze_symbolic(body, cfg):
    bolt = _parse(lambda: LightningBolt.from_json_obj(_field(body, "bolt")))
    cells = symbolic_from_bolt(bolt)
    return {
        "cells": [
            {"a": a, "b": b, "poly": p.to_json_obj()}
            for (a, b), p in sorted(cells.items())
        ]
    }


def _handle_category_phi(body, cfg):
    bolt = _parse(lambda: LightningBolt.from_json_obj(_field(body, "bolt")))
    d = _pair_field(body, "diagonal")
    obj = cat_object(bolt.n + 3, d)
    return {"poly": cluster_variable_of(obj, bolt).to_json_obj()}


_POST_ROUTES = {
    "/api/quiver/mutate": _handle_quiver_mutate,
    "/api/seed/mutate": _handle_seed_mutate,
    "/api/exchange/enumerate": _handle_exchange_enumerate,
    "/api/polygon/flip": _handle_polygon_flip,
    "/api/frieze/from-triangulation": _handle_frieze_from_triangulation,
    "/api/frieze/symbolic": _handle_frieze_symbolic,
    "/api/category/phi": _handle_category_phi,
}


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server_version = "clusterfrieze"

    def log_message(self, fmt, *args):
        pass

    def _send(self, status: int, payload: dict):
        data = (json.dumps(payload, sort_keys=True) + "\n").encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", self.server.cf_config["allow_origin"])
        self.end_headers()
        self.wfile.write(data)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", self.server.cf_config["allow_origin"])
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        if self.path == "/api/health":
            self._send(200, {"ok": True})
        elif self.path in _POST_ROUTES:
            self._send(405, {"ok": False, "error": {"error": "method_not_allowed", "detail": "use POST"}})
        else:
            self._send(404, {"ok": False, "error": {"error": "not_found", "detail": self.path}})

    def do_POST(self):
        handler = _POST_ROUTES.get(self.path)
        if handler is None:
            if self.path == "/api/health":
                self._send(405, {"ok": False, "error": {"error": "method_not_allowed", "detail": "use GET"}})
            else:
                self._send(404, {"ok": False, "error": {"error": "not_found", "detail": self.path}})
            return
        try:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length)
            try:
                body = json.loads(raw)
            except (ValueError, UnicodeDecodeError) as exc:
                raise _Malformed(f"body is not valid JSON: {exc}") from exc
            result = handler(body, self.server.cf_config)
        except _Malformed as exc:
            self._send(400, {"ok": False, "error": {"error": "malformed", "detail": exc.detail}})
        except DomainError as exc:
            self._send(422, {"ok": False, "error": exc.to_json_obj()})
        except Exception as exc:  # noqa: BLE001 - genuine bugs only
            self._send(500, {"ok": False, "error": {"error": "internal", "detail": str(exc)}})
        else:
            self._send(200, {"ok": True, "result": result})


def make_server(
    port: int = DEFAULT_PORT,
    allow_origin: str | None = None,
    budget_max: int | None = None,
) -> ThreadingHTTPServer:
    """Build (but do not start) the HTTP server; tests drive it on a
    thread, `serve` blocks on it."""
    if allow_origin is None:
        allow_origin = os.environ.get("CF_ALLOW_ORIGIN", "*")
    if budget_max is None:
        env_cap = os.environ.get("CF_BUDGET_MAX")
        budget_max = int(env_cap) if env_cap else None
    httpd = ThreadingHTTPServer(("", port), _Handler)
    httpd.cf_config = {"allow_origin": allow_origin, "budget_max": budget_max}
    return httpd


def serve(port: int = DEFAULT_PORT, allow_origin: str | None = None, budget_max: int | None = None):
    httpd = make_server(port, allow_origin, budget_max)
    host, actual_port = httpd.server_address[:2]
    print(f"listening on http://{host or '0.0.0.0'}:{actual_port}", flush=True)
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
