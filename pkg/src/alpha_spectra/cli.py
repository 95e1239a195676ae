"""Command-line interface.

Exit codes: 0 success or verified, 1 mathematical mismatch, 2 usage or
hypothesis error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .alpha import AlphaParam, alpha_charpoly
from .closed_forms import thm31_charpoly, thm32_semiregular_charpoly, semiregular_corona
from .corona import generalized_corona, generalized_edge_corona
from .cospectral import are_cospectral, cor33_pair, cor34_pair, cor42_pair, cor43_pair
from .edge_forms import cor41_spectrum, thm41_edge_corona_charpoly
from .errors import Graph6Error, HypothesisError, IdentityViolation
from .graph6 import parse_graph6, read_graph6_file
from .graphs import Graph, from_shorthand
from .matrices import GRIDS, run_matrix
from .poly import Poly, fraction_str

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_alpha(text: str) -> AlphaParam:
    if any(c in text for c in ".eE"):
        raise UsageError(f"alpha must be an exact fraction like 1/3, got {text!r}")
    try:
        return AlphaParam(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def resolve_graph(text: str) -> Graph:
    """Inline JSON, then a file (JSON or graph6), then a family name, then graph6."""
    t = text.strip()
    if t.startswith("{"):
        return Graph.from_json(json.loads(t))
    p = Path(t)
    if p.is_file():
        body = p.read_text().strip()
        if body.startswith("{"):
            return Graph.from_json(json.loads(body))
        graphs = list(read_graph6_file(p))
        if len(graphs) != 1:
            raise UsageError(f"{p} holds {len(graphs)} graphs; expected one")
        return graphs[0]
    try:
        return from_shorthand(t)
    except ValueError:
        pass
    try:
        return parse_graph6(t)
    except Graph6Error as exc:
        raise UsageError(f"cannot read graph {text!r}: not JSON, a file, a family name or graph6 ({exc})") from None


def _graph_arg(args, name: str = "graph") -> Graph:
    g6 = getattr(args, "graph6", None)
    if g6 is not None:
        try:
            return parse_graph6(g6)
        except Graph6Error as exc:
            raise UsageError(str(exc)) from None
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name} is required")
    return resolve_graph(value)


def _components(args, count: int, what: str) -> list[Graph]:
    if args.all is not None:
        return [resolve_graph(args.all)] * count
    comps = [resolve_graph(c) for c in (args.components or [])]
    if len(comps) != count:
        raise UsageError(f"need {count} components (one per {what}), got {len(comps)}")
    return comps


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2, ensure_ascii=False) if args.format == "json" else text
    if args.output:
        Path(args.output).write_text(out + "\n", encoding="utf-8")
    else:
        print(out)


def _poly_payload(f: Poly, **extra) -> dict:
    return {**extra, "charpoly": f.to_json(), "text": str(f)}


# -- commands ----------------------------------------------------------------

def cmd_charpoly(args) -> int:
    g = _graph_arg(args)
    a = parse_alpha(args.alpha).value
    f = alpha_charpoly(g, a)
    _emit(args, _poly_payload(f, alpha=fraction_str(a)), str(f))
    return EXIT_OK


def _verify_or_print(args, closed, direct, a) -> int:
    if args.mode == "verify":
        c, d = closed(), direct()
        ok = c == d
        _emit(
            args,
            {"alpha": fraction_str(a), "verified": ok, "closed_form": c.to_json(), "direct": d.to_json()},
            "verified: closed form equals direct computation" if ok else "MISMATCH: closed form differs",
        )
        return EXIT_OK if ok else EXIT_MISMATCH
    f = closed() if args.mode == "closed-form" else direct()
    _emit(args, _poly_payload(f, alpha=fraction_str(a), method=args.mode), str(f))
    return EXIT_OK


def cmd_corona(args) -> int:
    g = resolve_graph(args.base)
    a = parse_alpha(args.alpha).value
    if args.semiregular:
        z1, z2 = (resolve_graph(z) for z in args.semiregular)
        return _verify_or_print(
            args,
            lambda: thm32_semiregular_charpoly(g, z1, z2, a),
            lambda: alpha_charpoly(semiregular_corona(g, z1, z2)[0], a),
            a,
        )
    comps = _components(args, g.n, "vertex")
    return _verify_or_print(
        args,
        lambda: thm31_charpoly(g, comps, a),
        lambda: alpha_charpoly(generalized_corona(g, comps)[0], a),
        a,
    )


def cmd_edge_corona(args) -> int:
    g = resolve_graph(args.base)
    a = parse_alpha(args.alpha).value
    comps = _components(args, g.m, "edge")
    if args.spectrum:
        rep = cor41_spectrum(g, comps, a, strict=args.strict)
        _emit(args, {"alpha": fraction_str(a), "spectrum": rep.to_json()}, str(rep.product()))
        return EXIT_OK
    return _verify_or_print(
        args,
        lambda: thm41_edge_corona_charpoly(g, comps, a),
        lambda: alpha_charpoly(generalized_edge_corona(g, comps)[0], a),
        a,
    )


def cmd_cospectral(args) -> int:
    a = parse_alpha(args.alpha).value
    if args.which == "check":
        g1, g2 = resolve_graph(args.g1), resolve_graph(args.g2)
        ok = are_cospectral(g1, g2, a)
        _emit(args, {"alpha": fraction_str(a), "cospectral": ok}, "true" if ok else "false")
        return EXIT_OK
    if args.which == "cor33":
        g1, g2 = resolve_graph(args.g1), resolve_graph(args.g2)
        cert = cor33_pair(g1, g2, _components(args, g1.n, "vertex"), a)
    elif args.which == "cor34":
        g = resolve_graph(args.base)
        cert = cor34_pair(g, _components(args, 2 * g.n, "vertex, twice"), a)
    elif args.which == "cor42":
        g1, g2 = resolve_graph(args.g1), resolve_graph(args.g2)
        cert = cor42_pair(g1, g2, _components(args, g1.m, "edge"), a)
    else:
        g = resolve_graph(args.base)
        hs = [resolve_graph(h) for h in args.h]
        fs = [resolve_graph(f) for f in args.f]
        cert = cor43_pair(g, hs, fs, a)
    payload = cert.to_json()
    _emit(
        args,
        payload,
        f"{cert.construction}: cospectral, nonisomorphism {cert.witness.kind} ({cert.witness.detail})",
    )
    return EXIT_OK


def cmd_matrix(args) -> int:
    names = args.suites or sorted(GRIDS)
    instances = [inst for name in names for inst in GRIDS[name]()]
    outcomes = run_matrix(instances, jobs=args.jobs)
    bad = [o for o in outcomes if not o.ok]
    lines = [f"{'ok  ' if o.ok else 'FAIL'} {o.instance.label}  ({o.seconds:.3f}s)" for o in outcomes]
    lines.append(f"{len(outcomes) - len(bad)}/{len(outcomes)} instances verified")
    payload = {
        "total": len(outcomes),
        "failed": [o.instance.label for o in bad],
        "results": [{"instance": o.instance.label, "ok": o.ok, "detail": o.detail} for o in outcomes],
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if not bad else EXIT_MISMATCH


# -- parser ------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, alpha: bool = True) -> None:
    if alpha:
        p.add_argument("--alpha", required=True, help="exact fraction p/q in [0, 1]")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")


def _component_args(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--components", nargs="+", metavar="H", help="one graph per vertex/edge")
    grp.add_argument("--all", metavar="H", help="use the same component everywhere")


def _mode_args(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--closed-form", dest="mode", action="store_const", const="closed-form")
    grp.add_argument("--direct", dest="mode", action="store_const", const="direct")
    grp.add_argument("--verify", dest="mode", action="store_const", const="verify")
    p.set_defaults(mode="closed-form")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="alpha-spectra",
        description="Exact A_α characteristic polynomials of graphs and corona products.",
        epilog="Graphs: inline JSON {\"n\":..,\"edges\":..}, a file, a name (K3, P4, C5, K2,3, E2, "
        "S4, Petersen, C4uK1) or a graph6 string.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="det(λI - A_α(G))")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="graph in any accepted form")
    src.add_argument("--graph6", help="graph6 string")
    _common(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("corona", help="generalized corona products")
    p.add_argument("--base", required=True)
    _component_args(p)
    p.add_argument("--semiregular", nargs=2, metavar=("Z1", "Z2"),
                   help="semiregular bipartite base: Z1 on the smaller part, Z2 on the other")
    _mode_args(p)
    _common(p)
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("edge-corona", help="generalized edge corona products")
    p.add_argument("--base", required=True)
    _component_args(p)
    _mode_args(p)
    p.add_argument("--spectrum", action="store_true", help="print the factored spectrum instead")
    p.add_argument("--strict", action="store_true", help="refuse when m < n")
    _common(p)
    p.set_defaults(func=cmd_edge_corona)

    p = sub.add_parser("cospectral", help="cospectrality checks and certified constructions")
    csub = p.add_subparsers(dest="which", required=True)
    q = csub.add_parser("check")
    q.add_argument("--g1", required=True)
    q.add_argument("--g2", required=True)
    _common(q)
    for name in ("cor33", "cor42"):
        q = csub.add_parser(name)
        q.add_argument("--g1", required=True)
        q.add_argument("--g2", required=True)
        _component_args(q)
        _common(q)
    q = csub.add_parser("cor34")
    q.add_argument("--base", required=True)
    _component_args(q)
    _common(q)
    q = csub.add_parser("cor43")
    q.add_argument("--base", required=True)
    q.add_argument("--h", nargs="+", required=True)
    q.add_argument("--f", nargs="+", required=True)
    _common(q)
    p.set_defaults(func=cmd_cospectral)

    p = sub.add_parser("matrix", help="run closed form versus oracle verification grids")
    p.add_argument("suites", nargs="*", choices=sorted(GRIDS) + [[]], help="default: all")
    p.add_argument("--jobs", "-j", type=int, default=1)
    _common(p, alpha=False)
    p.set_defaults(func=cmd_matrix)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except IdentityViolation as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (UsageError, HypothesisError, Graph6Error, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
