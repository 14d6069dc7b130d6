"""Command-line interface.

Verbs expose the library operations one at a time (poset, paths, ineq,
points, char, dim, ehrhart, transfer, n1) and `verify` runs exhaustive
sweeps with a machine-readable summary line.  Exit codes: 0 success or
all-pass, 1 verification failure, 2 usage error.  Output is deterministic
for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations_with_replacement, product

from . import marked_poset as mp
from . import straightening as st
from .characters import dim as dim_fn
from .characters import qchar_branching, qchar_polytope
from .polytope import (
    counts_to_csv,
    ehrhart_counts,
    inequalities,
    lattice_points,
    minkowski_verify,
    points_to_jsonlines,
    slice_verify,
)
from .rootsys import RootLabel, build_poset, dyck_paths

VERIFY_TARGETS = (
    "minkowski",
    "abs",
    "slice",
    "qchar",
    "straightening",
    "n1-formula",
)


def _weight_arg(text: str) -> tuple[int, ...]:
    try:
        weight = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"weight must be comma-separated integers, got {text!r}"
        )
    if any(x < 0 for x in weight):
        raise argparse.ArgumentTypeError("weight entries must be nonnegative")
    return weight


def _dump(data) -> None:
    print(json.dumps(data))


def _all_weights(n: int, max_coeff: int):
    return list(product(range(max_coeff + 1), repeat=n))


def _summary(target: str, instances: int, counterexample) -> int:
    _dump(
        {
            "target": target,
            "instances": instances,
            "failures": 0 if counterexample is None else 1,
            "status": "pass" if counterexample is None else "fail",
            "counterexample": counterexample,
        }
    )
    return 0 if counterexample is None else 1


def _cmd_poset(args) -> int:
    poset = build_poset(args.family, args.n)
    if args.format == "text":
        for root in poset.roots:
            print(root.label)
        for a, b in poset.covers:
            print(f"{poset.roots[a].label} -> {poset.roots[b].label}")
    else:
        _dump(poset.to_json())
    return 0


def _cmd_paths(args) -> int:
    paths = dyck_paths(build_poset(args.family, args.n))
    if args.count:
        print(len(paths))
    elif args.format == "text":
        for p in paths:
            print(" ".join(str(lab) for lab in p.labels))
    else:
        _dump([p.to_json() for p in paths])
    return 0


def _cmd_ineq(args) -> int:
    system = inequalities(args.family, args.n, args.weight)
    if args.format == "text":
        for row in system.rows:
            terms = " + ".join(
                f"s{lab}" for lab in sorted(row.support, key=system.poset.index)
            )
            print(f"{terms} <= {row.bound}")
    else:
        _dump(system.to_json())
    return 0


def _cmd_points(args) -> int:
    points = lattice_points(args.family, args.n, args.weight)
    if args.count:
        print(len(points))
    elif args.format == "csv":
        for p in points:
            print(",".join(str(x) for x in p))
    else:
        print(points_to_jsonlines(points))
    return 0


def _cmd_char(args) -> int:
    if args.method == "branching":
        if args.family != "odd":
            raise ValueError("the branching character is defined for the odd family")
        char = qchar_branching(args.n, args.weight)
    else:
        char = qchar_polytope(args.family, args.n, args.weight)
    _dump(char.to_json())
    return 0


def _cmd_dim(args) -> int:
    print(dim_fn(args.family, args.n, args.weight, args.method))
    return 0


def _cmd_ehrhart(args) -> int:
    counts = ehrhart_counts(args.family, args.n, args.weight, args.t_max)
    if args.format == "csv":
        print(counts_to_csv(counts))
    else:
        _dump(list(counts))
    return 0


def _cmd_transfer(args) -> int:
    poset = mp.fflv_marked_poset(args.family, args.n, args.weight)
    order = mp.order_points(poset)
    chain = mp.chain_points(poset)
    failure = mp.abs_verify(poset)
    _dump(
        {
            "family": args.family,
            "n": args.n,
            "weight": list(args.weight),
            "order_points": len(order),
            "chain_points": len(chain),
            "bijective": failure is None,
        }
    )
    return 0 if failure is None else 1


def _cmd_n1(args) -> int:
    report = mp.n1_report(args.max_k, args.max_coeff)
    if args.format == "text":
        for r in report["results"]:
            line = f"{r['attachment']}: {r['status']} ({r['checked']} checked)"
            if r["counterexample"]:
                line += f" first failure {r['counterexample']}"
            print(line)
        print("passing: " + (", ".join(report["passing"]) or "none"))
    else:
        _dump(report)
    return 0 if report["passing"] else 1


def _verify_minkowski(args) -> int:
    weights = _all_weights(args.n, args.max_coeff)
    instances = 0
    for lam, mu in combinations_with_replacement(weights, 2):
        instances += 1
        failure = minkowski_verify(args.family, args.n, lam, mu)
        if failure is not None:
            return _summary(
                "minkowski",
                instances,
                {
                    "family": args.family,
                    "lambda": list(lam),
                    "mu": list(mu),
                    "kind": failure.kind,
                    "point": list(failure.point),
                },
            )
    return _summary("minkowski", instances, None)


def _verify_abs(args) -> int:
    instances = 0
    for weight in _all_weights(args.n, args.max_coeff):
        instances += 1
        failure = mp.abs_verify(mp.fflv_marked_poset(args.family, args.n, weight))
        if failure is not None:
            return _summary(
                "abs",
                instances,
                {
                    "family": args.family,
                    "weight": list(weight),
                    "kind": failure.kind,
                    "point": list(failure.point),
                },
            )
    return _summary("abs", instances, None)


def _verify_slice(args) -> int:
    instances = 0
    for weight in _all_weights(args.n, args.max_coeff):
        instances += 1
        failure = slice_verify(args.n, weight)
        if failure is not None:
            return _summary(
                "slice",
                instances,
                {
                    "weight": list(weight),
                    "kind": failure.kind,
                    "point": list(failure.point),
                },
            )
    return _summary("slice", instances, None)


def _verify_qchar(args) -> int:
    instances = 0
    for weight in _all_weights(args.n, args.max_coeff):
        instances += 1
        a = qchar_polytope("odd", args.n, weight)
        b = qchar_branching(args.n, weight)
        if a != b:
            diff = sorted(
                w
                for w in set(a.terms) | set(b.terms)
                if a.terms.get(w) != b.terms.get(w)
            )[0]
            pa = a.terms.get(diff)
            pb = b.terms.get(diff)
            return _summary(
                "qchar",
                instances,
                {
                    "weight": list(weight),
                    "eps_weight": list(diff),
                    "polytope": pa.to_json() if pa else {},
                    "branching": pb.to_json() if pb else {},
                },
            )
    return _summary("qchar", instances, None)


def _violating_vectors(engine, path, sigma):
    """Exponent vectors supported on the path with entries summing to sigma."""
    idxs = [engine._index[lab] for lab in path.labels]
    for split in combinations_with_replacement(range(len(idxs)), sigma):
        vec = [0] * engine.nvars
        for pos in split:
            vec[idxs[pos]] += 1
        yield tuple(vec)


def _verify_straightening(args) -> int:
    engine = st.Straightener(args.n)
    paths = [
        p
        for p in dyck_paths(engine.poset)
        if p.start == RootLabel(1, 1, False) and p.end.barred
    ]
    instances = 0
    for bound in range(args.n * args.max_coeff + 1):
        weight = (bound,) + (0,) * (args.n - 1)
        for path in paths:
            for s in _violating_vectors(engine, path, bound + 1):
                instances += 1
                failure = engine.verify(weight, s, path)
                if failure is not None:
                    return _summary(
                        "straightening",
                        instances,
                        {
                            "path": [str(lab) for lab in path.labels],
                            "s": list(s),
                            "kind": failure.kind,
                            "term": list(failure.point),
                        },
                    )
    return _summary("straightening", instances, None)


def _verify_n1(args) -> int:
    report = mp.n1_report(args.max_k, args.max_coeff)
    instances = sum(r["checked"] for r in report["results"])
    if report["passing"]:
        return _summary("n1-formula", instances, None)
    first_fail = report["results"][0]["counterexample"]
    return _summary("n1-formula", instances, first_fail)


def _cmd_verify(args) -> int:
    handler = {
        "minkowski": _verify_minkowski,
        "abs": _verify_abs,
        "slice": _verify_slice,
        "qchar": _verify_qchar,
        "straightening": _verify_straightening,
        "n1-formula": _verify_n1,
    }[args.target]
    return handler(args)


def _add_family(parser, default="odd"):
    parser.add_argument(
        "--family",
        choices=("odd", "even"),
        default=default,
        help="root-system family (default %(default)s)",
    )


def _add_n(parser):
    parser.add_argument("--n", type=int, required=True, help="rank")


def _add_weight(parser):
    parser.add_argument(
        "--weight",
        type=_weight_arg,
        required=True,
        help="fundamental coordinates m_1,...,m_n (comma-separated)",
    )


def _add_format(parser, choices=("json", "text")):
    parser.add_argument(
        "--format",
        choices=choices,
        default="json",
        help="output format (default %(default)s)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fflv",
        description="Lattice polytopes and characters of the symplectic families",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("poset", help="print the root poset")
    _add_family(p)
    _add_n(p)
    _add_format(p)
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("paths", help="list the Dyck paths")
    _add_family(p)
    _add_n(p)
    _add_format(p)
    p.add_argument("--count", action="store_true", help="print only the number")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("ineq", help="print the inequality system")
    _add_family(p)
    _add_n(p)
    _add_weight(p)
    _add_format(p)
    p.set_defaults(func=_cmd_ineq)

    p = sub.add_parser("points", help="enumerate lattice points")
    _add_family(p)
    _add_n(p)
    _add_weight(p)
    _add_format(p, choices=("json", "csv"))
    p.add_argument("--count", action="store_true", help="print only the number")
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser("char", help="print the graded character")
    _add_family(p)
    _add_n(p)
    _add_weight(p)
    p.add_argument(
        "--method",
        choices=("polytope", "branching"),
        default="polytope",
        help="character construction (default %(default)s)",
    )
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("dim", help="print the dimension")
    _add_family(p)
    _add_n(p)
    _add_weight(p)
    p.add_argument(
        "--method",
        choices=("polytope", "branching", "weyl"),
        default="polytope",
        help="dimension method (default %(default)s)",
    )
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("ehrhart", help="count points of dilated weights")
    _add_family(p)
    _add_n(p)
    _add_weight(p)
    p.add_argument("--t-max", type=int, default=6, help="largest dilation factor")
    _add_format(p, choices=("json", "csv"))
    p.set_defaults(func=_cmd_ehrhart)

    p = sub.add_parser(
        "transfer", help="order/chain point counts and transfer status"
    )
    _add_family(p)
    _add_n(p)
    _add_weight(p)
    p.set_defaults(func=_cmd_transfer)

    p = sub.add_parser("n1", help="rank-one family attachment report")
    p.add_argument("--max-k", type=int, default=3, help="largest k")
    p.add_argument(
        "--max-coeff", type=int, default=2, help="largest coefficient entry"
    )
    _add_format(p)
    p.set_defaults(func=_cmd_n1)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("target", choices=VERIFY_TARGETS)
    _add_family(p)
    p.add_argument("--n", type=int, default=1, help="rank (default %(default)s)")
    p.add_argument(
        "--max-coeff", type=int, default=2, help="largest coefficient entry"
    )
    p.add_argument(
        "--max-k", type=int, default=3, help="largest k (n1-formula only)"
    )
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
