"""Command-line front end.

Subcommands: dist, geodesic, act, cayley, const, verify.  Matrices travel
in the JSON envelopes of the serialization module.  Exit codes: 0 success,
1 verification failure, 2 parse error, 3 invariant violation.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .errors import GeometryError, ParseError
from .blocks import cayley_unitary, form_reflection, symplectic_unit
from .models import cayley_to_disk, cayley_to_half_space, moebius
from .geometry import (
    cone_distance,
    cone_geodesic,
    model_distance,
    model_geodesic_sample,
)
from . import serialization as ser
from . import verify as verify_mod

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return ser.loads(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_point(path: str, model: str) -> np.ndarray:
    return ser.point_from_obj(_load_json(path), expect_model=model)


def _load_positive(path: str) -> np.ndarray:
    from .geometry import check_positive

    return check_positive(ser.matrix_from_obj(_load_json(path)))


def _cmd_dist(args) -> int:
    if args.model == "pos":
        d = cone_distance(_load_positive(args.a), _load_positive(args.b))
    else:
        d = model_distance(args.model, _load_point(args.a, args.model),
                           _load_point(args.b, args.model))
    print(f"{d:.15f}")
    return EXIT_OK


def _cmd_geodesic(args) -> int:
    steps = args.steps
    if steps < 1:
        raise ParseError("--steps must be at least 1")
    ts = [j / steps for j in range(steps + 1)]
    if args.model == "pos":
        a, b = _load_positive(args.a), _load_positive(args.b)
        points = [cone_geodesic(a, b, t) for t in ts]
        objs = [ser.matrix_to_obj(p) for p in points]
    else:
        a = _load_point(args.a, args.model)
        b = _load_point(args.b, args.model)
        points = []
        for t in ts:
            p, drift = model_geodesic_sample(args.model, a, b, t)
            if drift > 1e-7:
                print(f"warning: reflection drift {drift:.3e} at t={t:.6g}",
                      file=sys.stderr)
            points.append(p)
        objs = [ser.point_to_obj(p, args.model) for p in points]
    if args.format == "csv":
        sys.stdout.write(ser.geodesic_csv(ts, points))
    else:
        print(ser.dumps(objs))
    return EXIT_OK


def _cmd_act(args) -> int:
    g = ser.block2_from_obj(_load_json(args.g))
    p = _load_point(args.p, args.tag)
    out = moebius(args.tag, g, p)
    print(ser.dumps(ser.point_to_obj(out, args.tag)))
    return EXIT_OK


def _cmd_cayley(args) -> int:
    if args.dir == "HtoD":
        p = _load_point(args.p, "H")
        out = cayley_to_disk(p)
        print(ser.dumps(ser.point_to_obj(out, "D")))
    else:
        p = _load_point(args.p, "D")
        out = cayley_to_half_space(p)
        print(ser.dumps(ser.point_to_obj(out, "H")))
    return EXIT_OK


def _cmd_const(args) -> int:
    n = args.n
    if n < 1:
        raise ParseError("--n must be at least 1")
    table = {
        "rhoH": lambda: form_reflection("H", n),
        "rhoD": lambda: form_reflection("D", n),
        "J": lambda: symplectic_unit(n),
        "U": lambda: cayley_unitary(n),
    }
    print(ser.dumps(ser.block2_to_obj(table[args.name]())))
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = verify_mod.run(args.suite, args.n, args.seed, args.trials,
                             threshold_override=args.tol)
    sys.stdout.write(verify_mod.format_report(results, args.format))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsgeom",
        description="Half-space and disk geometry over complex matrix algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="geodesic distance between two points")
    p.add_argument("model", choices=["H", "D", "pos"])
    p.add_argument("a", help="JSON file with the first point")
    p.add_argument("b", help="JSON file with the second point")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("geodesic", help="sample the geodesic between two points")
    p.add_argument("model", choices=["H", "D", "pos"])
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_geodesic)

    p = sub.add_parser("act", help="apply a group element to a model point")
    p.add_argument("tag", choices=["H", "D"])
    p.add_argument("g", help="JSON file with the block-matrix group element")
    p.add_argument("p", help="JSON file with the model point")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("cayley", help="Cayley transform between the models")
    p.add_argument("--dir", choices=["HtoD", "DtoH"], required=True)
    p.add_argument("p", help="JSON file with the model point")
    p.set_defaults(func=_cmd_cayley)

    p = sub.add_parser("const", help="print a structural constant")
    p.add_argument("--name", choices=["rhoH", "rhoD", "J", "U"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_const)

    p = sub.add_parser("verify", help="run the randomized verification suites")
    p.add_argument("--suite", default="all",
                   choices=list(verify_mod.SUITE_NAMES) + ["all"])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--tol", type=float, default=None,
                   help="override every pass threshold of the selected suites")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GeometryError as exc:
        print(f"invariant violation ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
