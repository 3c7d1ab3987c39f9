"""Command-line front end.

Exit codes: 0 success, 1 domain error (class name on stderr), 2 bad flags,
3 falsification of a guaranteed property.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import alexander, braid, fibration, orbilens, slope, surgery, sweep
from .errors import DomainError, FalsificationError

SCHEMA = 1


def _emit_json(kind: str, payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA, "kind": kind, **payload}, sort_keys=True))


def _params(args) -> braid.BraidParams:
    return braid.BraidParams(args.n, args.b, args.t)


def _cmd_fiber(args):
    params = _params(args)
    verdict = fibration.fibers_over_slope(params, slope.Slope.canonical(args.p, args.q))
    if args.json:
        _emit_json("fibration", verdict.to_dict())
        return
    b = verdict.brown
    print(f"braid (n={params.n}, b={params.b}, t={params.t}), slope p={args.p} q={args.q}")
    print(f"weights: x -> {verdict.weight.wx}, y -> {verdict.weight.wy}")
    print(f"prefix values: {' '.join(map(str, b.prefix_values))}")
    print(f"max {b.max_value} at {list(b.max_positions)}, min {b.min_value} at {list(b.min_positions)}")
    print(f"fibred: {str(verdict.fibred).lower()}, boundary components: {verdict.boundary_components}")


def _cmd_relator(args):
    print(braid.relator(_params(args)))


def _cmd_sweep(args):
    report = sweep.run_sweep(args.max_n, args.max_slope, threads=args.threads)
    if args.csv:
        if args.csv == "-":
            sweep.write_csv(report.rows, sys.stdout)
        else:
            with open(args.csv, "w", newline="") as fh:
                sweep.write_csv(report.rows, fh)
    bad = report.falsifications
    loc = report.localization_failures
    out = sys.stderr if args.csv == "-" else sys.stdout
    print(
        f"knots={report.knots} cases={len(report.rows)} "
        f"skipped_zero_weight={report.skipped_zero_weight} "
        f"mixed_sign={len(report.mixed_sign_rows)} "
        f"falsifications={len(bad)} localization_violations={len(loc)}",
        file=out,
    )
    for row in bad + loc:
        print(f"FALSIFIED: {','.join(row.csv_fields())} {list(row.localization)}", file=sys.stderr)
    if bad or loc:
        return 3


def _cmd_surgery(args):
    res = surgery.cosmetic_surgery_lens(surgery.BGSurgeryInput(args.p, args.q, args.w, args.m))
    if args.json:
        _emit_json("surgery", {"p_prime": res.p_prime, "meridian_image": list(res.meridian_image)})
    else:
        print(res.p_prime)


def _cmd_orbilens(args):
    data = orbilens.quotient_data(
        orbilens.CyclicActionParams(args.a1, args.a2, args.alpha1, args.alpha2)
    )
    if args.json:
        _emit_json("quotient", asdict(data))
    else:
        print(f"n={data.n} abar1={data.abar1} abar2={data.abar2} base_order={data.base_order}")


def _cmd_slope(args):
    if args.slope_cmd == "dist":
        r1 = slope.Slope.canonical(args.p1, args.q1)
        r2 = slope.Slope.canonical(args.p2, args.q2)
        print(slope.distance(r1, r2))
    elif args.slope_cmd == "parity":
        print(slope.involution_distance(slope.Slope.canonical(args.p, args.q)))
    elif args.slope_cmd == "image":
        r = slope.involution_image(slope.Slope.canonical(args.p, args.q), args.eps)
        print(f"{r.p} {r.q}")
    elif args.slope_cmd == "clique":
        size, witness = slope.max_close_clique(args.bound)
        print(f"{size} {' '.join(map(str, witness))}")


def _cmd_cone(args):
    seq = fibration.approximate_fibre_classes(fibration.H2Class(args.u, args.v), args.n, args.m_max)
    if args.json:
        _emit_json("cone", {"classes": [
            {"m": m, "c1": c.c1, "c2": c.c2, "error": str(err)}
            for m, (c, err) in enumerate(seq, start=1)
        ]})
        return
    for m, (c, err) in enumerate(seq, start=1):
        print(f"{m} {c.c1} {c.c2} {err}")


def _cmd_alexander(args):
    params = _params(args)
    hom = fibration.weight_for_slope(params, slope.Slope.canonical(args.p, args.q))
    poly = alexander.alexander_specialized(braid.relator(params), hom)
    monic = alexander.monic_check(poly)
    if args.json:
        _emit_json("alexander", {"polynomial": poly.serialize(), "monic": monic,
                                 "weight": {"wx": hom.wx, "wy": hom.wy}})
    else:
        print(poly.serialize())
        print(f"monic: {str(monic).lower()}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kfk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    def braid_flags(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("fiber", help="fibration verdict for a braid and boundary slope")
    braid_flags(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fiber)

    p = sub.add_parser("relator", help="relator of the braid exterior")
    braid_flags(p)
    p.set_defaults(func=_cmd_relator)

    p = sub.add_parser("sweep", help="exhaustive fibration check")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-slope", type=int, required=True)
    p.add_argument("--csv", metavar="PATH", help="write rows as CSV ('-' for stdout)")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("surgery", help="order p' of the surgered lens space")
    for flag in ("--p", "--q", "--w", "--m"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_surgery)

    p = sub.add_parser("orbilens", help="quotient data of a cyclic action on S^3")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--alpha1", type=int, default=1)
    p.add_argument("--alpha2", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_orbilens)

    p = sub.add_parser("slope", help="slope arithmetic")
    ssub = p.add_subparsers(dest="slope_cmd", required=True)
    s = ssub.add_parser("dist")
    for flag in ("--p1", "--q1", "--p2", "--q2"):
        s.add_argument(flag, type=int, required=True)
    s = ssub.add_parser("parity")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s = ssub.add_parser("image")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--eps", type=int, choices=(1, -1), required=True)
    s = ssub.add_parser("clique")
    s.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=_cmd_slope)

    p = sub.add_parser("cone", help="fibre classes approximating a projective class")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("alexander", help="specialized Alexander polynomial and monicity")
    braid_flags(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_alexander)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args) or 0
    except FalsificationError as exc:
        print(f"FalsificationError: {exc}", file=sys.stderr)
        cert = exc.certificate
        if hasattr(cert, "to_dict"):
            print(json.dumps(cert.to_dict(), sort_keys=True), file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
