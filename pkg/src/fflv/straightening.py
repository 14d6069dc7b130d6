"""Derivation operators and leading-term verification of the straightening law.

Monomials in the generators f_alpha of the odd family are exponent tuples in
the canonical root order.  A violating exponent vector supported on a single
path from alpha_{1,1} to a barred end is straightened by applying two words
of derivations to a pure power of f_{1,1bar}: each derivation either lowers
one generator to another one (root subtraction, unit coefficient) or acts by
the special bottom-row derivation whose coefficients come from the matrix
realization.  The result is a polynomial whose greatest monomial under the
order defined here is the violating vector itself; `verify` checks exactly
that and nothing stronger, since the leading coefficient has no closed form.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import NamedTuple

from .polytope import Counterexample
from .rootsys import RootLabel, build_poset


class DerivationId(NamedTuple):
    """Either subtraction of an even-family positive root or the special
    derivation (bracket with the matrix unit at the bottom middle)."""

    kind: str  # "root" | "special"
    root: RootLabel | None = None

    def __str__(self) -> str:
        if self.kind == "special":
            return "d_special"
        return f"d{self.root}"


def _matrix(label: RootLabel, n: int) -> dict[tuple[int, int], int]:
    """Lowering generator as a (2n+1)x(2n+1) matrix, stored sparsely.

    Rows/columns 1..n carry eps_1..eps_n, rows n+1..2n carry -eps_1..-eps_n,
    row 2n+1 is the isotropic direction.
    """
    i, j = label.row, label.col
    if not label.barred:
        if j == n:
            return {(2 * n + 1, i): 1}
        return {(j + 1, i): 1, (n + i, n + j + 1): -1}
    if i == j:
        return {(n + i, i): 1}
    return {(n + i, j): 1, (n + j, i): 1}


def _bracket(x: dict, y: dict) -> dict:
    out: dict[tuple[int, int], int] = {}
    for (a, b), u in x.items():
        for (c, d), v in y.items():
            if b == c:
                out[a, d] = out.get((a, d), 0) + u * v
            if d == a:
                out[c, b] = out.get((c, b), 0) - u * v
    return {pos: c for pos, c in out.items() if c}


def _anchor(label: RootLabel, n: int) -> tuple[int, int]:
    """Matrix position occupied by this generator and nothing else."""
    i, j = label.row, label.col
    if not label.barred:
        return (2 * n + 1, i) if j == n else (j + 1, i)
    return (n + i, j) if i != j else (n + i, i)


class Straightener:
    """Symbolic engine for one odd-family rank.

    Monomials are exponent tuples over the odd roots in canonical order;
    polynomials are dicts from monomials to integer coefficients.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be positive")
        self.n = n
        self.poset = build_poset("odd", n)
        self.labels = self.poset.labels()
        self.nvars = len(self.labels)
        self._index = {lab: k for k, lab in enumerate(self.labels)}
        self._eps = {r.label: r.eps for r in self.poset.roots}
        even = build_poset("even", n)
        self._even_labels = frozenset(even.labels())
        self._even_eps = {r.label: r.eps for r in even.roots}
        self._eps_to_var = {r.eps: k for k, r in enumerate(self.poset.roots)}
        # Variable order: all of row n beats row n-1 and so on; within a row
        # the rightmost column of the alphabet is largest.
        self._rank = sorted(
            range(self.nvars),
            key=lambda k: (self.labels[k].row, self.labels[k].col_pos(n)),
            reverse=True,
        )
        self._row_vars = {
            i: [k for k, lab in enumerate(self.labels) if lab.row == i]
            for i in range(1, n + 1)
        }
        self._rules: dict[DerivationId, dict[int, tuple[int, int]]] = {}

    # -- monomial order ----------------------------------------------------

    def row_sums(self, s: tuple[int, ...]) -> tuple[int, ...]:
        """(s_{1,.}, ..., s_{n,.})"""
        return tuple(
            sum(s[k] for k in self._row_vars[i]) for i in range(1, self.n + 1)
        )

    def column_sum(self, s: tuple[int, ...], col: int, barred: bool) -> int:
        """s_{.,col} or s_{.,colbar}: the sum over rows of one column."""
        total = 0
        for r in range(1, col + 1):
            k = self._index.get(RootLabel(r, col, barred))
            if k is not None:
                total += s[k]
        return total

    def succ_compare(self, s: tuple[int, ...], t: tuple[int, ...]) -> int:
        """1 if s comes strictly before t in the straightening order, -1 if
        strictly after, 0 if equal.

        Larger total degree wins; on equal degree the smaller reversed row-sum
        vector (row n first) wins; ties break by exponents along the variable
        order.
        """
        if s == t:
            return 0
        ds, dt = sum(s), sum(t)
        if ds != dt:
            return 1 if ds > dt else -1
        rs = self.row_sums(s)[::-1]
        rt = self.row_sums(t)[::-1]
        if rs != rt:
            return 1 if rs < rt else -1
        for k in self._rank:
            if s[k] != t[k]:
                return 1 if s[k] > t[k] else -1
        return 0

    # -- derivations -------------------------------------------------------

    def root_derivation(self, label: RootLabel) -> DerivationId:
        if label not in self._even_labels:
            raise ValueError(f"{label} is not an even-family positive root")
        return DerivationId("root", label)

    def special_derivation(self) -> DerivationId:
        return DerivationId("special")

    def derivation_rules(self, op: DerivationId) -> dict[int, tuple[int, int]]:
        """Action on generators: variable index -> (target index, coefficient)."""
        cached = self._rules.get(op)
        if cached is not None:
            return cached
        rules: dict[int, tuple[int, int]] = {}
        if op.kind == "root":
            alpha = self._even_eps[op.root]
            for k, lab in enumerate(self.labels):
                diff = tuple(a - b for a, b in zip(self._eps[lab], alpha))
                tgt = self._eps_to_var.get(diff)
                if tgt is not None:
                    rules[k] = (tgt, 1)
        elif op.kind == "special":
            x = {(2 * self.n + 1, self.n + 1): 1}
            for k, lab in enumerate(self.labels):
                br = _bracket(x, _matrix(lab, self.n))
                for tgt, tlab in enumerate(self.labels):
                    c = br.get(_anchor(tlab, self.n), 0)
                    if c:
                        rules[k] = (tgt, c)
                        break
        else:
            raise ValueError(f"unknown derivation kind {op.kind!r}")
        self._rules[op] = rules
        return rules

    def apply_derivation(self, op: DerivationId, poly: dict) -> dict:
        """One application, extended to products by the Leibniz rule."""
        rules = self.derivation_rules(op)
        out: dict[tuple[int, ...], int] = {}
        for mono, coeff in poly.items():
            for k, (tgt, c) in rules.items():
                e = mono[k]
                if not e:
                    continue
                new = list(mono)
                new[k] -= 1
                new[tgt] += 1
                key = tuple(new)
                val = out.get(key, 0) + coeff * c * e
                if val:
                    out[key] = val
                else:
                    del out[key]
        return out

    def apply_word(self, word, poly: dict) -> dict:
        """Apply a displayed operator word, rightmost factor first."""
        for op, exp in reversed(tuple(word)):
            for _ in range(exp):
                poly = self.apply_derivation(op, poly)
        return poly

    # -- straightening -----------------------------------------------------

    def _check_path_point(self, s: tuple[int, ...], path) -> None:
        if path.family != "odd" or path.n != self.n:
            raise ValueError("path belongs to a different poset")
        if len(s) != self.nvars or any(x < 0 for x in s):
            raise ValueError("exponent vector has the wrong shape")
        if path.start != RootLabel(1, 1, False):
            raise ValueError("path must start at the top-left diagonal root")
        if not path.end.barred:
            raise ValueError("path must end at a barred root")
        support = set(path.labels)
        for k, lab in enumerate(self.labels):
            if s[k] and lab not in support:
                raise ValueError(f"exponent vector is not supported on the path")

    def build_delta_ops(self, s: tuple[int, ...], path):
        """The two operator words for a violating vector on a barred path.

        Words are returned in display order (apply right to left); factors
        with zero exponent are omitted.  With i the row of the path's end:
        the first word is the prefix d(1,i-1)^{s_{.,ibar}+s_{i,.}} (absent
        for i = 1), then d(j,jbar)^{s_{.,j-1}} for j = i+1..n, then the
        special derivation to the power s_{.,n} followed by
        d(1,j)^{s_{.,j}+s_{.,(j+1)bar}} for j = n-1..i, then
        d(1,kbar)^{s_{.,k-1}} for k = i..2.  The second word is
        d(1,j)^{s_{j+1,.}} for j = 1..i-2.
        """
        self._check_path_point(s, path)
        n = self.n
        i = path.end.row
        rows = self.row_sums(s)
        col = self.column_sum

        delta1: list[tuple[DerivationId, int]] = []
        if i >= 2:
            exp = col(s, i, True) + rows[i - 1]
            if exp:
                delta1.append(
                    (self.root_derivation(RootLabel(1, i - 1, False)), exp)
                )
        for j in range(i + 1, n + 1):
            exp = col(s, j - 1, False)
            if exp:
                delta1.append(
                    (self.root_derivation(RootLabel(j, j, True)), exp)
                )
        exp = col(s, n, False)
        if exp:
            delta1.append((self.special_derivation(), exp))
        for j in range(n - 1, i - 1, -1):
            exp = col(s, j, False) + col(s, j + 1, True)
            if exp:
                delta1.append(
                    (self.root_derivation(RootLabel(1, j, False)), exp)
                )
        for k in range(i, 1, -1):
            exp = col(s, k - 1, False)
            if exp:
                delta1.append(
                    (self.root_derivation(RootLabel(1, k, True)), exp)
                )

        delta2: list[tuple[DerivationId, int]] = []
        for j in range(1, i - 1):
            exp = rows[j]
            if exp:
                delta2.append(
                    (self.root_derivation(RootLabel(1, j, False)), exp)
                )
        return tuple(delta1), tuple(delta2)

    def straighten(self, weight: tuple[int, ...], s: tuple[int, ...], path) -> dict:
        """Apply both operator words to the pure power of f_{1,1bar}."""
        delta1, delta2 = self.build_delta_ops(s, path)
        sigma = sum(s)
        if sigma < sum(weight) + 1:
            raise ValueError("exponent vector does not violate the path bound")
        start_var = self._index[RootLabel(1, 1, True)]
        mono = [0] * self.nvars
        mono[start_var] = sigma
        poly = {tuple(mono): 1}
        poly = self.apply_word(delta1, poly)
        return self.apply_word(delta2, poly)

    def verify(self, weight: tuple[int, ...], s: tuple[int, ...], path) -> Counterexample | None:
        """Check f^s leads the straightened polynomial.

        Passes when s has a nonzero coefficient and every other monomial is
        strictly smaller in the straightening order.
        """
        poly = self.straighten(weight, s, path)
        if not poly.get(s):
            return Counterexample("leading_term_missing", s)
        for t in poly:
            if t != s and self.succ_compare(s, t) != 1:
                return Counterexample("term_not_smaller", t)
        return None

    # -- serialization -----------------------------------------------------

    def poly_to_json(self, poly: dict) -> list[dict]:
        """Term list sorted by the straightening order, greatest first."""
        monos = sorted(poly, key=cmp_to_key(self.succ_compare), reverse=True)
        return [{"exponents": list(t), "coeff": poly[t]} for t in monos]

    def word_to_json(self, word) -> list[dict]:
        return [{"op": str(op), "power": exp} for op, exp in word]
