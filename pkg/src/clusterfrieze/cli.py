"""Command-line surface over the whole library.

Structured inputs (quivers, seeds, triangulations, bolts, friezes) are
passed as JSON: a file path, `-` for stdin, or an inline literal that
starts with `{`. Scalar inputs (quiddities, vertices, diagonals) are
inline comma-separated arguments. Output goes to stdout; `--format`
picks json (default almost everywhere), text, or dot (exchange graphs
only). Domain failures print {"error": code, "detail": ...} on stderr
and exit 1; usage problems exit 2.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import arquiver, exchange, frieze, polygon, quiver, seed
from .errors import DomainError, InvalidInput

_PARSER = None  # set by _build_parser; handlers use it for usage errors


def _read_json_arg(value: str):
    if value == "-":
        raw = sys.stdin.read()
    elif value.lstrip().startswith("{"):
        raw = value
    else:
        try:
            with open(value, encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise InvalidInput(f"cannot read {value!r}: {exc}") from exc
    try:
        return json.loads(raw)
    except ValueError as exc:
        raise InvalidInput(f"not valid JSON: {exc}") from exc


def _int_csv(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}") from exc


def _pair(text: str) -> tuple[int, int]:
    parts = _int_csv(text)
    if len(parts) != 2:
        raise InvalidInput(f"expected two comma-separated integers, got {text!r}")
    return (parts[0], parts[1])


def _print_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _quiver_text(q: quiver.Quiver) -> str:
    lines = [f"n={q.n}"]
    for i, j, mult in q.arrows():
        lines.append(f"{i} -> {j}" + (f" x{mult}" if mult > 1 else ""))
    return "\n".join(lines)


def _triangulation_text(t: polygon.Triangulation) -> str:
    return " ".join(f"({a},{b})" for a, b in t.diagonals) or "(none)"


# --- quiver ---------------------------------------------------------------


def _cmd_quiver_mutate(args, fmt):
    q = quiver.Quiver.from_json_obj(_read_json_arg(args.quiver)).mutate(args.k)
    if fmt == "text":
        print(_quiver_text(q))
    else:
        _print_json(q.to_json_obj())


def _cmd_quiver_canon(args, fmt):
    q = quiver.Quiver.from_json_obj(_read_json_arg(args.quiver))
    canon, perm = q.canonical_form()
    if fmt == "text":
        print("perm: " + " ".join(map(str, perm)))
        print(_quiver_text(canon))
    else:
        _print_json({"quiver": canon.to_json_obj(), "perm": list(perm)})


def _cmd_quiver_finite_type(args, fmt):
    q = quiver.Quiver.from_json_obj(_read_json_arg(args.quiver))
    res = quiver.is_finite_type(q)
    if fmt == "text":
        print(res.dynkin_type if res.finite else "infinite")
    else:
        _print_json(res.to_json_obj())


# --- seed -----------------------------------------------------------------


def _cmd_seed_mutate(args, fmt):
    s = seed.mutate_seed(seed.Seed.from_json_obj(_read_json_arg(args.seed)), args.k)
    if fmt == "text":
        print(_quiver_text(s.quiver))
        for idx, v in enumerate(s.vars, start=1):
            print(f"f{idx} = {v.pretty()}")
    else:
        _print_json(s.to_json_obj())


# --- exchange -------------------------------------------------------------


def _cmd_exchange_enumerate(args, fmt):
    q = quiver.Quiver.from_json_obj(_read_json_arg(args.quiver))
    g = exchange.enumerate_seeds(q, budget=args.budget)
    if fmt == "dot":
        print(g.to_dot().rstrip("\n"))
    elif fmt == "text":
        print(f"nodes: {len(g.nodes)}")
        print(f"edges: {len(g.edges)}")
        print(f"variables: {len(g.variables)}")
    else:
        _print_json(g.to_json_obj())


# --- polygon --------------------------------------------------------------


def _cmd_polygon_enumerate(args, fmt):
    ts = polygon.enumerate_triangulations(args.N)
    if fmt == "text":
        for t in ts:
            print(_triangulation_text(t))
    else:
        _print_json(
            {"N": args.N, "count": len(ts), "triangulations": [t.to_json_obj() for t in ts]}
        )


def _cmd_polygon_flip(args, fmt):
    t = polygon.Triangulation.from_json_obj(_read_json_arg(args.triangulation))
    t2 = polygon.flip(t, _pair(args.diagonal))
    if fmt == "text":
        print(_triangulation_text(t2))
    else:
        _print_json(t2.to_json_obj())


def _cmd_polygon_quiddity(args, fmt):
    t = polygon.Triangulation.from_json_obj(_read_json_arg(args.triangulation))
    entries = polygon.quiddity(t)
    if fmt == "text":
        print(",".join(map(str, entries)))
    else:
        _print_json({"entries": list(entries)})


# --- frieze ---------------------------------------------------------------


def _emit_frieze(f: frieze.Frieze, fmt):
    if fmt == "text":
        print(frieze.render(f))
    else:
        _print_json(f.to_json_obj())


def _cmd_frieze_from_quiddity(args, fmt):
    _emit_frieze(frieze.from_quiddity(_int_csv(args.quiddity)), fmt)


def _cmd_frieze_from_triangulation(args, fmt):
    t = polygon.Triangulation.from_json_obj(_read_json_arg(args.triangulation))
    _emit_frieze(frieze.from_triangulation(t), fmt)


def _cmd_frieze_from_bolt(args, fmt):
    bolt = frieze.LightningBolt.from_json_obj(_read_json_arg(args.bolt))
    _emit_frieze(frieze.from_bolt(bolt, _int_csv(args.values)), fmt)


def _cmd_frieze_symbolic(args, fmt):
    bolt = frieze.LightningBolt.from_json_obj(_read_json_arg(args.bolt))
    cells = frieze.symbolic_from_bolt(bolt)
    if fmt == "text":
        for (a, b), p in sorted(cells.items()):
            print(f"({a},{b}): {p.pretty()}")
    else:
        _print_json(
            {
                "cells": [
                    {"a": a, "b": b, "poly": p.to_json_obj()}
                    for (a, b), p in sorted(cells.items())
                ]
            }
        )


def _cmd_frieze_enumerate(args, fmt):
    fs = frieze.enumerate_friezes(args.n)
    if fmt == "text":
        print("\n\n".join(frieze.render(f) for f in fs))
    else:
        _print_json(
            {"n": args.n, "count": len(fs), "friezes": [f.to_json_obj() for f in fs]}
        )


def _cmd_frieze_check(args, fmt):
    frieze.Frieze.from_json_obj(_read_json_arg(args.frieze))
    if fmt == "text":
        print("ok")
    else:
        _print_json({"ok": True})


def _cmd_frieze_render(args, fmt):
    f = frieze.Frieze.from_json_obj(_read_json_arg(args.frieze))
    print(frieze.render(f))


# --- category -------------------------------------------------------------


def _vertex(text: str) -> arquiver.ZQVertex:
    return arquiver.ZQVertex(*_pair(text))


def _cmd_category_hom(args, fmt):
    X, Y = _vertex(args.source), _vertex(args.target)
    if args.window is not None:
        m0, m1 = _pair(args.window)
    else:
        m0, m1 = min(X.m, Y.m), max(X.m, Y.m)
    dim = arquiver.hom_dim_mesh(arquiver.MeshWindow(args.n, m0, m1), X, Y)
    if fmt == "text":
        print(dim)
    else:
        _print_json({"dim": dim})


def _cmd_category_compat(args, fmt):
    X = arquiver.cat_object(args.size, _pair(args.d1))
    Y = arquiver.cat_object(args.size, _pair(args.d2))
    ok = arquiver.compatible(X, Y)
    if fmt == "text":
        print("compatible" if ok else "crossing")
    else:
        _print_json({"compatible": ok})


def _ct_from_triangulation_arg(value):
    t = polygon.Triangulation.from_json_obj(_read_json_arg(value))
    return frozenset(arquiver.CatObject(t.N, a, b) for a, b in t.diagonals), t.N


def _ct_json(T, N) -> dict:
    return polygon.Triangulation(N, [(x.a, x.b) for x in T]).to_json_obj()


def _cmd_category_ct_enumerate(args, fmt):
    objs = arquiver.cluster_tilting_objects(args.n)
    N = args.n + 3
    if fmt == "text":
        for T in objs:
            print(" ".join(f"({x.a},{x.b})" for x in sorted(T)))
    else:
        _print_json(
            {"n": args.n, "count": len(objs), "objects": [_ct_json(T, N) for T in objs]}
        )


def _cmd_category_ct_flip(args, fmt):
    T, N = _ct_from_triangulation_arg(args.triangulation)
    X = arquiver.cat_object(N, _pair(args.diagonal))
    T2 = arquiver.mutate_ct(T, X)
    if fmt == "text":
        print(" ".join(f"({x.a},{x.b})" for x in sorted(T2)))
    else:
        _print_json(_ct_json(T2, N))


def _cmd_category_frieze_from_ct(args, fmt):
    T, _ = _ct_from_triangulation_arg(args.triangulation)
    _emit_frieze(arquiver.frieze_from_ct(T), fmt)


def _cmd_category_phi(args, fmt):
    bolt = frieze.LightningBolt.from_json_obj(_read_json_arg(args.bolt))
    X = arquiver.cat_object(bolt.n + 3, _pair(args.diagonal))
    p = arquiver.cluster_variable_of(X, bolt)
    if fmt == "text":
        print(p.pretty())
    else:
        _print_json({"poly": p.to_json_obj()})


# --- serve ----------------------------------------------------------------


def _cmd_serve(args, fmt):
    from . import server

    server.serve(port=args.port, allow_origin=args.allow_origin, budget_max=args.budget_max)


# --- wiring ---------------------------------------------------------------

_TEXT_DEFAULT = {("frieze", "render")}
_DOT_ALLOWED = {("exchange", "enumerate")}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterfrieze",
        description="Frieze patterns, quiver and seed mutation, exchange graphs, "
        "and the combinatorial cluster category of type A.",
    )
    groups = parser.add_subparsers(dest="group", required=True, metavar="GROUP")

    def sub(group_parser, name, fn, **flag_specs):
        p = group_parser.add_parser(name)
        for flag, spec in flag_specs.items():
            p.add_argument(flag, **spec)
        p.add_argument("--format", choices=("json", "text", "dot"), default=None)
        p.set_defaults(fn=fn)
        return p

    g = groups.add_parser("quiver").add_subparsers(dest="cmd", required=True, metavar="CMD")
    sub(g, "mutate", _cmd_quiver_mutate, **{
        "--quiver": dict(required=True, help="quiver JSON (path, -, or inline)"),
        "-k": dict(type=int, required=True, help="vertex to mutate at"),
    })
    sub(g, "canon", _cmd_quiver_canon, **{"--quiver": dict(required=True)})
    sub(g, "finite-type", _cmd_quiver_finite_type, **{"--quiver": dict(required=True)})

    g = groups.add_parser("seed").add_subparsers(dest="cmd", required=True, metavar="CMD")
    sub(g, "mutate", _cmd_seed_mutate, **{
        "--seed": dict(required=True, help="seed JSON (path, -, or inline)"),
        "-k": dict(type=int, required=True),
    })

    g = groups.add_parser("exchange").add_subparsers(dest="cmd", required=True, metavar="CMD")
    sub(g, "enumerate", _cmd_exchange_enumerate, **{
        "--quiver": dict(required=True),
        "--budget": dict(type=int, default=None, help="node budget for the search"),
    })

    g = groups.add_parser("polygon").add_subparsers(dest="cmd", required=True, metavar="CMD")
    sub(g, "enumerate", _cmd_polygon_enumerate, **{
        "N": dict(type=int, help="polygon size"),
    })
    sub(g, "flip", _cmd_polygon_flip, **{
        "--triangulation": dict(required=True),
        "--diagonal": dict(required=True, help="a,b"),
    })
    sub(g, "quiddity", _cmd_polygon_quiddity, **{"--triangulation": dict(required=True)})

    g = groups.add_parser("frieze").add_subparsers(dest="cmd", required=True, metavar="CMD")
    sub(g, "from-quiddity", _cmd_frieze_from_quiddity, **{
        "quiddity": dict(help="comma-separated positive integers"),
    })
    sub(g, "from-triangulation", _cmd_frieze_from_triangulation, **{
        "--triangulation": dict(required=True),
    })
    sub(g, "from-bolt", _cmd_frieze_from_bolt, **{
        "--bolt": dict(required=True),
        "--values": dict(required=True, help="comma-separated cell values"),
    })
    sub(g, "symbolic", _cmd_frieze_symbolic, **{"--bolt": dict(required=True)})
    sub(g, "enumerate", _cmd_frieze_enumerate, **{"n": dict(type=int, help="frieze height")})
    sub(g, "check", _cmd_frieze_check, **{"--frieze": dict(required=True)})
    sub(g, "render", _cmd_frieze_render, **{"--frieze": dict(required=True)})

    g = groups.add_parser("category").add_subparsers(dest="cmd", required=True, metavar="CMD")
    sub(g, "hom", _cmd_category_hom, **{
        "--n": dict(type=int, required=True, dest="n"),
        "--source": dict(required=True, help="i,m"),
        "--target": dict(required=True, help="i,m"),
        "--window": dict(default=None, help="m0,m1 (default: the slice span)"),
    })
    sub(g, "compat", _cmd_category_compat, **{
        "--size": dict(type=int, required=True, help="polygon size N"),
        "--d1": dict(required=True, help="a,b"),
        "--d2": dict(required=True, help="a,b"),
    })
    sub(g, "ct-enumerate", _cmd_category_ct_enumerate, **{"n": dict(type=int)})
    sub(g, "ct-flip", _cmd_category_ct_flip, **{
        "--triangulation": dict(required=True),
        "--diagonal": dict(required=True, help="a,b"),
    })
    sub(g, "frieze-from-ct", _cmd_category_frieze_from_ct, **{
        "--triangulation": dict(required=True),
    })
    sub(g, "phi", _cmd_category_phi, **{
        "--bolt": dict(required=True),
        "--diagonal": dict(required=True, help="a,b"),
    })

    p = groups.add_parser("serve")
    p.add_argument("--port", type=int, default=8780)
    p.add_argument("--allow-origin", default=None)
    p.add_argument("--budget-max", type=int, default=None)
    p.add_argument("--format", choices=("json", "text", "dot"), default=None)
    p.set_defaults(fn=_cmd_serve, cmd=None)

    return parser


def main(argv=None) -> int:
    global _PARSER
    _PARSER = _build_parser()
    args = _PARSER.parse_args(argv)
    key = (args.group, getattr(args, "cmd", None))
    fmt = args.format or ("text" if key in _TEXT_DEFAULT else "json")
    if fmt == "dot" and key not in _DOT_ALLOWED:
        _PARSER.error(f"--format dot is not supported for {args.group} {args.cmd}")
    try:
        args.fn(args, fmt)
    except DomainError as exc:
        print(json.dumps(exc.to_json_obj(), sort_keys=True), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
