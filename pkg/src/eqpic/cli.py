"""
Command-line front end.

    eqpic fab --a 2 --b 3 --n 3 [--relations]
    eqpic gdmn --d 4 --m 1 --n 2 [--char 2] [--relations]
    eqpic picard fab --a 2 --b 3 --n 3 [--torsor]
    eqpic genus 5 [--char 2]
    eqpic sweep --family gdmn --max-d 4 --max-n 5 [--jobs 4]

Every command takes ``--format text|json``.  Exit status is 0 on success,
2 for invalid arguments and 1 when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .abgroup import FGAbelian, GroupPresentation, quotient_structure
from .gring import Poly
from .moduli import (
    AlphaDivisionError,
    FabSetup,
    GdmnSetup,
    NotRankOneError,
    SetupError,
    alpha_factor,
    f_closed_form,
    f_divisor_class,
    f_relations,
    g_closed_form,
    g_divisor_class,
    g_relations,
    genus_pipeline,
    picard_presentation,
)
from .moduli.picard import ERRATUM_FAB_CLOSED_FORM, Note
from .push import FreeVariableBoundError, RelationList

__all__ = ["main", "run", "build_parser"]


class InvariantFailure(RuntimeError):
    pass


def _s(x: int) -> str:
    return str(int(x))


def _coeffs(p: Poly) -> dict[str, str]:
    return {k: _s(v) for k, v in p.linear_coefficients().items()}


def _notes(notes) -> list[dict[str, str]]:
    return [{"id": n.id, "text": n.text} for n in notes]


def _group(pres: GroupPresentation, G: FGAbelian) -> dict:
    return {
        "generators": list(pres.generators),
        "relations": [[_s(x) for x in r] for r in pres.relations],
        "structure": str(G),
        "rank": _s(G.rank),
        "torsion": [_s(d) for d in G.invariant_factors],
    }


def _relations(rl: RelationList) -> list[dict[str, str]]:
    return [
        {"index": _s(q), "t_power": _s(q if rl.ascending else rl.n + 1 - q), "class": str(rl[q])}
        for q in rl.indices
    ]


def _fab_setup(args) -> FabSetup:
    return FabSetup(args.a, args.b, args.n)


def _gdmn_setup(args) -> GdmnSetup:
    return GdmnSetup(args.d, args.m, args.n, args.char)


def _envelope(request: dict, divisor: Poly, axioms=(), errata=()) -> dict:
    return {
        "version": __version__,
        "request": {k: (v if isinstance(v, (bool, str)) or v is None else _s(v)) for k, v in request.items()},
        "divisor_class": _coeffs(divisor),
        "axioms": _notes(axioms),
        "errata": _notes(errata),
    }


def _divisor_or_fail(fn, s):
    try:
        return fn(s)
    except AlphaDivisionError as exc:
        raise InvariantFailure(str(exc)) from exc


def cmd_fab(args) -> tuple[dict, list[str]]:
    s = _fab_setup(args)
    D = f_divisor_class(s)
    rep = _envelope({"command": "fab", "a": s.a, "b": s.b, "n": s.n}, D, errata=[ERRATUM_FAB_CLOSED_FORM])
    lines = [s.label(), f"[D] = {D}"]
    if args.relations:
        rl = f_relations(s)
        rep["relations"] = _relations(rl)
        lines += [f"xi_{q} (t^{s.n + 1 - q}): {rl[q]}" for q in rl.indices]
    return rep, lines


def cmd_gdmn(args) -> tuple[dict, list[str]]:
    s = _gdmn_setup(args)
    D = _divisor_or_fail(g_divisor_class, s)
    rep = _envelope({"command": "gdmn", "d": s.d, "m": s.m, "n": s.n, "char": s.char}, D)
    lines = [s.label(), f"alpha = {alpha_factor(s)}", f"[D] = {D}"]
    if args.relations:
        rl = g_relations(s)
        rep["relations"] = _relations(rl)
        lines += [f"zeta_{q} (t^{q}): {rl[q]}" for q in rl.indices]
    return rep, lines


def cmd_picard(args) -> tuple[dict, list[str]]:
    if args.family == "fab":
        s = _fab_setup(args)
        torsor = "Q" if args.torsor else None
        request = {"command": "picard", "family": "fab", "a": s.a, "b": s.b, "n": s.n, "torsor": torsor}
        errata = [ERRATUM_FAB_CLOSED_FORM]
    else:
        s = _gdmn_setup(args)
        torsor = "P" if args.torsor else None
        request = {"command": "picard", "family": "gdmn", "d": s.d, "m": s.m, "n": s.n, "char": s.char,
                   "torsor": torsor}
        errata = []
    try:
        pres = picard_presentation(s, torsor)
    except AlphaDivisionError as exc:
        raise InvariantFailure(str(exc)) from exc
    G = quotient_structure(pres)
    D = f_divisor_class(s) if args.family == "fab" else g_divisor_class(s)
    rep = _envelope(request, D, errata=errata)
    rep["picard"] = _group(pres, G)
    gens = ", ".join(pres.generators)
    rels = ", ".join("(" + ", ".join(map(str, r)) + ")" for r in pres.relations)
    lines = [s.label() + (f", torsor {torsor}" if torsor else ""), f"[D] = {D}",
             f"Z<{gens}> / <{rels}> = {G}"]
    return rep, lines


def cmd_genus(args) -> tuple[dict, list[str]]:
    try:
        r = genus_pipeline(args.g, args.char)
    except (AlphaDivisionError, NotRankOneError) as exc:
        raise InvariantFailure(str(exc)) from exc
    rep = _envelope({"command": "genus", "g": r.genus, "char": r.char}, r.family_class, r.axioms, r.errata)
    pic = _group(r.presentation, r.structure)
    pic["open"] = _group(r.open_presentation, r.open_structure)
    pic["generator"] = {"name": r.generator, "expression": {k: _s(v) for k, v in r.generator_expression.items()}}
    pic["divisor_multiples"] = {k: _s(v) for k, v in r.divisor_multiples.items()}
    pic["divisor_multiples_signed"] = {k: _s(v) for k, v in r.divisor_multiples_signed.items()}
    if r.extra_classes:
        pic["classes"] = {k: _coeffs(v) for k, v in r.extra_classes.items()}
    rep["picard"] = pic
    g = r.genus
    lines = [
        f"genus {g} (char {r.char}): family {r.setup.label()}",
        f"[D] = {r.family_class}",
        f"Pic(U{g}) = {r.open_structure}",
        f"Pic(M{g}) = {r.structure}, generator {r.generator} = c1",
    ]
    for k, v in r.extra_classes.items():
        lines.append(f"[{k}] = {v}")
    for name, k in r.divisor_multiples.items():
        lines.append(f"[{name}] = {k}*{r.generator}  (signed against c1: {r.divisor_multiples_signed[name]})")
    lines += [f"axiom {n.id}: {n.text}" for n in r.axioms]
    lines += [f"erratum {n.id}: {n.text}" for n in r.errata]
    return rep, lines


def _sweep_point(point: tuple) -> dict:
    family, params = point[0], point[1:]
    if family == "fab":
        s = FabSetup(*params)
        D, C = f_divisor_class(s), f_closed_form(s)
        request = {"command": "sweep", "family": "fab", "a": s.a, "b": s.b, "n": s.n}
        errata = [ERRATUM_FAB_CLOSED_FORM]
    else:
        s = GdmnSetup(*params)
        D, C = g_divisor_class(s), g_closed_form(s)
        request = {"command": "sweep", "family": "gdmn", "d": s.d, "m": s.m, "n": s.n, "char": s.char}
        errata = []
    rep = _envelope(request, D, errata=errata)
    rep["closed_form"] = _coeffs(C)
    rep["agree"] = D == C
    return rep


def _sweep_points(args) -> list[tuple]:
    if args.family == "fab":
        pts = [("fab", a, b, n)
               for n in range(max(args.min_n, 3), args.max_n + 1)
               for b in range(2, args.max_b + 1)
               for a in range(1, b)]
    else:
        chars = sorted(set(args.char or [0]))
        pts = [("gdmn", d, m, n, ch)
               for n in range(max(args.min_n, 2), args.max_n + 1)
               for m in range(1, n)
               for d in range(1, args.max_d + 1)
               for ch in chars]
    return sorted(pts, key=lambda p: p[1:])


def cmd_sweep(args) -> tuple[list[dict], list[str]]:
    points = _sweep_points(args)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_sweep_point, points))
    else:
        reports = [_sweep_point(p) for p in points]
    lines = []
    for rep in reports:
        req = rep["request"]
        keys = ("a", "b", "n") if req["family"] == "fab" else ("d", "m", "n", "char")
        params = " ".join(f"{k}={req[k]}" for k in keys)
        cls = " ".join(f"{k}:{v}" for k, v in rep["divisor_class"].items()) or "0"
        lines.append(f"{req['family']} {params}  [D] {cls}  {'ok' if rep['agree'] else 'MISMATCH'}")
    if not all(r["agree"] for r in reports):
        raise InvariantFailure("closed form disagrees with the pipeline: " +
                               "; ".join(l for l in lines if "MISMATCH" in l))
    return reports, lines


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    def fab_params(p):
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    def gdmn_params(p):
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--char", type=int, default=0, help="0 or a prime")

    parser = argparse.ArgumentParser(prog="eqpic", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fab", parents=[fmt], help="discriminant of bidegree (a,b) complete intersections")
    fab_params(p)
    p.add_argument("--relations", action="store_true")
    p.set_defaults(func=cmd_fab)

    p = sub.add_parser("gdmn", parents=[fmt], help="discriminant of m degree-d hypersurfaces")
    gdmn_params(p)
    p.add_argument("--relations", action="store_true")
    p.set_defaults(func=cmd_gdmn)

    p = sub.add_parser("picard", help="Picard group presentation of a family")
    fam = p.add_subparsers(dest="family", required=True)
    for name, adder in (("fab", fab_params), ("gdmn", gdmn_params)):
        q = fam.add_parser(name, parents=[fmt])
        adder(q)
        q.add_argument("--torsor", action="store_true", help="pass to the torsor (Q for fab, P for gdmn)")
        q.set_defaults(func=cmd_picard)

    p = sub.add_parser("genus", parents=[fmt], help="Picard group of M_g for g = 3, 4, 5")
    p.add_argument("g", type=int, choices=(3, 4, 5))
    p.add_argument("--char", type=int, default=0, help="0 or a prime")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("sweep", parents=[fmt], help="pipeline vs closed form over a parameter grid")
    p.add_argument("--family", choices=("fab", "gdmn"), required=True)
    p.add_argument("--max-b", type=int, default=4)
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("--min-n", type=int, default=0)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--char", type=int, action="append", help="repeatable; gdmn only")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, lines = args.func(args)
    except (SetupError, FreeVariableBoundError) as exc:
        print(f"eqpic: error: {exc}", file=err)
        return 2
    except InvariantFailure as exc:
        print(f"eqpic: internal invariant failed: {exc}", file=err)
        return 1
    if args.format == "json":
        if isinstance(result, list):
            for rep in result:
                out.write(json.dumps(rep, sort_keys=True) + "\n")
        else:
            out.write(_dump(result) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
