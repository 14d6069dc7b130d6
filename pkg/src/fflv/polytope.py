"""Inequality systems and exact lattice-point enumeration for FFLV polytopes.

One inequality per symplectic Dyck path: the coordinates along the path sum
to at most the path bound.  All arithmetic is exact integer arithmetic; the
enumerator is a depth-first search over coordinates in canonical root order
with per-row remaining-slack pruning, so points come out in lexicographic
order with no floating point involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .rootsys import (
    DyckPath,
    LatticePoint,
    RootLabel,
    RootPoset,
    _check_family,
    build_poset,
    dyck_paths,
    path_bound,
)


class IneqRow(NamedTuple):
    support: frozenset[RootLabel]
    bound: int


@dataclass(frozen=True)
class InequalitySystem:
    """FFLV defining inequalities for one dominant weight, one row per path."""

    family: str
    n: int
    weight: tuple[int, ...]
    rows: tuple[IneqRow, ...]
    paths: tuple[DyckPath, ...] = field(compare=False, repr=False)
    poset: RootPoset = field(compare=False, repr=False)
    _row_support_idx: tuple = field(init=False, repr=False, compare=False)
    _rows_by_coord: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        support_idx = tuple(
            tuple(sorted(self.poset.index(lab) for lab in row.support))
            for row in self.rows
        )
        by_coord = [[] for _ in self.poset.roots]
        for r, idxs in enumerate(support_idx):
            for k in idxs:
                by_coord[k].append(r)
        object.__setattr__(self, "_row_support_idx", support_idx)
        object.__setattr__(self, "_rows_by_coord", tuple(tuple(r) for r in by_coord))

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "weight": list(self.weight),
            "rows": [
                {
                    "support": [lab.to_json() for lab in sorted(
                        row.support, key=self.poset.index)],
                    "bound": row.bound,
                }
                for row in self.rows
            ],
        }


def inequalities(family: str, n: int, weight: tuple[int, ...]) -> InequalitySystem:
    """Build the inequality system for lambda = sum m_i omega_i."""
    _check_family(family)
    if len(weight) != n:
        raise ValueError("weight length must equal the rank")
    if any(m < 0 for m in weight):
        raise ValueError("fundamental coordinates must be nonnegative")
    poset = build_poset(family, n)
    paths = dyck_paths(poset)
    rows = tuple(
        IneqRow(frozenset(p.labels), path_bound(p, weight)) for p in paths
    )
    return InequalitySystem(family, n, tuple(weight), rows, paths, poset)


def contains(system: InequalitySystem, s: LatticePoint) -> bool:
    """Exact membership test for a nonnegative integer point."""
    if len(s) != len(system.poset.roots):
        raise ValueError("point length must match the number of roots")
    if any(x < 0 for x in s):
        return False
    for idxs, row in zip(system._row_support_idx, system.rows):
        if sum(s[k] for k in idxs) > row.bound:
            return False
    return True


def violated_paths(system: InequalitySystem, s: LatticePoint) -> tuple[DyckPath, ...]:
    """Paths whose inequality s violates, in canonical path order."""
    if len(s) != len(system.poset.roots):
        raise ValueError("point length must match the number of roots")
    out = []
    for path, idxs, row in zip(system.paths, system._row_support_idx, system.rows):
        if sum(s[k] for k in idxs) > row.bound:
            out.append(path)
    return tuple(out)


def enumerate_points(system: InequalitySystem) -> tuple[LatticePoint, ...]:
    """All lattice points, in lexicographic order of the canonical coordinates."""
    ncoord = len(system.poset.roots)
    slack = [row.bound for row in system.rows]
    by_coord = system._rows_by_coord
    value = [0] * ncoord
    out: list[LatticePoint] = []

    def walk(k: int) -> None:
        if k == ncoord:
            out.append(tuple(value))
            return
        rows = by_coord[k]
        vmax = min(slack[r] for r in rows)
        for v in range(vmax + 1):
            value[k] = v
            if v:
                for r in rows:
                    slack[r] -= 1
            walk(k + 1)
        for r in rows:
            slack[r] += vmax
        value[k] = 0

    walk(0)
    return tuple(out)


@lru_cache(maxsize=128)
def lattice_points(family: str, n: int, weight: tuple[int, ...]) -> tuple[LatticePoint, ...]:
    """Cached convenience wrapper: points of the polytope for (family, n, weight)."""
    return enumerate_points(inequalities(family, n, weight))


class Counterexample(NamedTuple):
    kind: str
    point: LatticePoint

    def to_json(self) -> dict:
        return {"kind": self.kind, "point": list(self.point)}


def minkowski_verify(
    family: str, n: int, lam: tuple[int, ...], mu: tuple[int, ...]
) -> Counterexample | None:
    """Check FFLV(lam) + FFLV(mu) = FFLV(lam + mu) on lattice points.

    Returns None on success, otherwise the first missing or extra point in
    lexicographic order.
    """
    a = lattice_points(family, n, tuple(lam))
    b = lattice_points(family, n, tuple(mu))
    total = set(lattice_points(family, n, tuple(x + y for x, y in zip(lam, mu))))
    sumset = {tuple(x + y for x, y in zip(p, q)) for p in a for q in b}
    missing = total - sumset
    if missing:
        return Counterexample("missing", min(missing))
    extra = sumset - total
    if extra:
        return Counterexample("extra", min(extra))
    return None


def slice_verify(n: int, lam: tuple[int, ...]) -> Counterexample | None:
    """Check that the odd rank-n polytope is the even rank-(n+1) polytope
    for (lam, 0) sliced at the barred column n+1.

    Labels away from column n+1 agree verbatim between the two posets, so
    the identification is the identity on (row, col) pairs.
    """
    if len(lam) != n:
        raise ValueError("weight length must equal the rank")
    odd_pts = set(lattice_points("odd", n, tuple(lam)))
    even_sys = inequalities("even", n + 1, tuple(lam) + (0,))
    keep = [
        k
        for k, root in enumerate(even_sys.poset.roots)
        if not (root.label.barred and root.label.col == n + 1)
    ]
    sliced = set()
    for p in enumerate_points(even_sys):
        if all(p[k] == 0 for k in range(len(p)) if k not in keep):
            sliced.add(tuple(p[k] for k in keep))
    missing = odd_pts - sliced
    if missing:
        return Counterexample("missing", min(missing))
    extra = sliced - odd_pts
    if extra:
        return Counterexample("extra", min(extra))
    return None


def ehrhart_counts(
    family: str, n: int, lam: tuple[int, ...], t_max: int
) -> tuple[int, ...]:
    """Point counts of the polytopes for t * lam, t = 0, ..., t_max."""
    if t_max < 0:
        raise ValueError("t_max must be nonnegative")
    return tuple(
        len(lattice_points(family, n, tuple(t * m for m in lam)))
        for t in range(t_max + 1)
    )


def points_to_jsonlines(points) -> str:
    return "\n".join("[" + ", ".join(str(x) for x in p) + "]" for p in points)


def counts_to_csv(counts) -> str:
    lines = ["t,count"] + [f"{t},{c}" for t, c in enumerate(counts)]
    return "\n".join(lines)
