"""Derivation operators and the straightening of violating monomials."""

import random
from itertools import combinations_with_replacement

import pytest

from fflv.rootsys import RootLabel, dyck_paths, wt_deg
from fflv.straightening import DerivationId, Straightener


def L(row, col, barred=False):
    return RootLabel(row, col, barred)


def single(eng, label, power=1):
    vec = [0] * eng.nvars
    vec[eng.labels.index(label)] = power
    return tuple(vec)


def poly_add(p, q):
    out = dict(p)
    for mono, c in q.items():
        c2 = out.get(mono, 0) + c
        if c2:
            out[mono] = c2
        else:
            out.pop(mono, None)
    return out


def poly_mul(p, q):
    out = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            mono = tuple(a + b for a, b in zip(ma, mb))
            out[mono] = out.get(mono, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def paths_by_labels(eng):
    return {p.labels: p for p in dyck_paths(eng.poset)}


def test_succ_compare_degree_rule():
    eng = Straightener(2)
    deg2 = single(eng, L(1, 1), 2)
    deg1 = single(eng, L(1, 1, True))
    assert eng.succ_compare(deg2, deg1) == 1
    assert eng.succ_compare(deg1, deg2) == -1
    assert eng.succ_compare(deg1, deg1) == 0


def test_succ_compare_row_rule():
    eng = Straightener(2)
    f11 = single(eng, L(1, 1))
    f22 = single(eng, L(2, 2))
    # equal degree: the monomial concentrated in earlier rows wins
    assert eng.succ_compare(f11, f22) == 1
    assert eng.succ_compare(f22, f11) == -1


def test_succ_compare_variable_rule():
    eng = Straightener(2)
    f11 = single(eng, L(1, 1))
    f12 = single(eng, L(1, 2))
    # same degree and same row distribution: compare variable positions
    assert eng.succ_compare(f12, f11) == 1
    assert eng.succ_compare(f11, f12) == -1


def test_succ_compare_is_translation_invariant():
    eng = Straightener(2)
    rng = random.Random(11)
    for _ in range(60):
        s = tuple(rng.randint(0, 2) for _ in range(eng.nvars))
        t = tuple(rng.randint(0, 2) for _ in range(eng.nvars))
        u = tuple(rng.randint(0, 2) for _ in range(eng.nvars))
        base = eng.succ_compare(s, t)
        shifted = eng.succ_compare(
            tuple(a + b for a, b in zip(s, u)),
            tuple(a + b for a, b in zip(t, u)),
        )
        assert base == shifted
        assert eng.succ_compare(t, s) == -base


def test_row_and_column_sums():
    eng = Straightener(2)
    s = (1, 1, 2, 0, 0, 3)    # coords (1,1),(1,2),(1,2bar),(1,1bar),(2,2),(2,2bar)
    assert eng.row_sums(s) == (4, 3)
    assert eng.column_sum(s, 1, False) == 1
    assert eng.column_sum(s, 2, False) == 1
    assert eng.column_sum(s, 2, True) == 5
    assert eng.column_sum(s, 1, True) == 0


def test_root_derivation_rules_rank2():
    eng = Straightener(2)
    rules = eng.derivation_rules(eng.root_derivation(L(1, 1)))
    idx = {lab: k for k, lab in enumerate(eng.labels)}
    assert rules == {
        idx[L(1, 2)]: (idx[L(2, 2)], 1),
        idx[L(1, 2, True)]: (idx[L(2, 2, True)], 1),
        idx[L(1, 1, True)]: (idx[L(1, 2, True)], 1),
    }


def test_root_derivation_requires_subalgebra_root():
    eng = Straightener(2)
    with pytest.raises(ValueError):
        eng.root_derivation(L(1, 2))     # this one is odd-family only
    with pytest.raises(ValueError):
        eng.root_derivation(L(2, 2))


def test_special_derivation_closed_form():
    # Matrix commutators reduce to: the barred first-row generators map to
    # the last-column generators of the matching row, everything else to 0.
    for n in (1, 2, 3):
        eng = Straightener(n)
        rules = eng.derivation_rules(eng.special_derivation())
        expected = {
            eng.labels.index(L(1, j, True)): (eng.labels.index(L(j, n)), 1)
            for j in range(1, n + 1)
        }
        assert rules == expected


def test_apply_derivation_is_a_derivation():
    eng = Straightener(2)
    rng = random.Random(5)
    ops = [
        eng.root_derivation(L(1, 1)),
        eng.root_derivation(L(1, 2, True)),
        eng.root_derivation(L(2, 2, True)),
        eng.special_derivation(),
    ]

    def random_poly():
        poly = {}
        for _ in range(2):
            mono = tuple(rng.randint(0, 2) for _ in range(eng.nvars))
            poly[mono] = poly.get(mono, 0) + rng.choice((-2, -1, 1, 3))
        return {m: c for m, c in poly.items() if c}

    for _ in range(25):
        p, q = random_poly(), random_poly()
        for op in ops:
            lhs = eng.apply_derivation(op, poly_mul(p, q))
            rhs = poly_add(
                poly_mul(eng.apply_derivation(op, p), q),
                poly_mul(p, eng.apply_derivation(op, q)),
            )
            assert lhs == rhs


def test_derivations_shift_weight_homogeneously():
    eng = Straightener(2)
    start = (0, 1, 1, 1, 0, 0)
    cases = [
        (eng.root_derivation(L(1, 1)), (1, -1, 0)),
        (eng.root_derivation(L(2, 2, True)), (0, 2, 0)),
        (eng.special_derivation(), (1, 0, 1)),
    ]
    for op, shift in cases:
        wt_in, deg_in = wt_deg(eng.poset, start)
        for mono in eng.apply_derivation(op, {start: 1}):
            wt_out, deg_out = wt_deg(eng.poset, mono)
            assert deg_out == deg_in
            assert tuple(a - b for a, b in zip(wt_in, wt_out)) == shift


def test_apply_word_is_right_to_left():
    eng = Straightener(2)
    d11 = eng.root_derivation(L(1, 1))
    d22bar = eng.root_derivation(L(2, 2, True))
    p = {single(eng, L(1, 1, True)): 1}
    # rightmost factor acts first: d11 turns f(1,1bar) into f(1,2bar),
    # then d(2,2bar) turns that into f(1,1); the other order kills p.
    assert eng.apply_word(((d22bar, 1), (d11, 1)), p) == {
        single(eng, L(1, 1)): 1
    }
    assert eng.apply_word(((d11, 1), (d22bar, 1)), p) == {}


def test_apply_word_powers():
    eng = Straightener(2)
    d11 = eng.root_derivation(L(1, 1))
    p = {single(eng, L(1, 1, True), 2): 1}
    got = eng.apply_word(((d11, 2),), p)
    f12b_sq = single(eng, L(1, 2, True), 2)
    mixed = tuple(
        a + b
        for a, b in zip(
            single(eng, L(2, 2, True)), single(eng, L(1, 1, True))
        )
    )
    assert got == {f12b_sq: 2, mixed: 2}


def test_build_delta_ops_rank1():
    eng = Straightener(1)
    path = paths_by_labels(eng)[(L(1, 1), L(1, 1, True))]
    delta1, delta2 = eng.build_delta_ops((1, 2), path)
    assert delta1 == ((DerivationId("special"), 1),)
    assert delta2 == ()


def test_build_delta_ops_rank2():
    eng = Straightener(2)
    path = paths_by_labels(eng)[
        (L(1, 1), L(1, 2), L(1, 2, True), L(2, 2, True))
    ]
    delta1, delta2 = eng.build_delta_ops((1, 0, 0, 0, 0, 1), path)
    assert delta1 == (
        (DerivationId("root", L(1, 1)), 2),
        (DerivationId("root", L(1, 2, True)), 1),
    )
    assert delta2 == ()


def test_straighten_frozen_rank1():
    eng = Straightener(1)
    path = paths_by_labels(eng)[(L(1, 1), L(1, 1, True))]
    assert eng.straighten((1,), (1, 1), path) == {(1, 1): 2}
    assert eng.straighten((1,), (0, 2), path) == {(0, 2): 1}


def test_straighten_frozen_rank2():
    eng = Straightener(2)
    paths = paths_by_labels(eng)
    pa = paths[(L(1, 1), L(1, 2), L(1, 2, True), L(1, 1, True))]
    pb = paths[(L(1, 1), L(1, 2), L(1, 2, True), L(2, 2, True))]
    pc = paths[(L(1, 1), L(1, 2), L(2, 2), L(2, 2, True))]
    assert eng.straighten((1, 0), (1, 0, 0, 1, 0, 0), pa) == {
        (1, 0, 0, 1, 0, 0): 2
    }
    assert eng.straighten((1, 0), (1, 0, 0, 0, 0, 1), pb) == {
        (1, 0, 0, 0, 0, 1): 2
    }
    assert eng.straighten((1, 0), (0, 1, 1, 0, 0, 0), pb) == {
        (0, 1, 1, 0, 0, 0): 2,
        (0, 0, 0, 1, 1, 0): 2,
    }
    assert eng.straighten((1, 0), (0, 0, 1, 0, 0, 1), pb) == {
        (0, 0, 1, 0, 0, 1): 6
    }
    assert eng.straighten((1, 0), (0, 1, 0, 0, 1, 0), pc) == {
        (0, 1, 0, 0, 1, 0): 4
    }
    assert eng.straighten((1, 0), (0, 0, 0, 0, 2, 0), pc) == {
        (0, 0, 0, 0, 2, 0): 4
    }


def test_verify_passes_on_frozen_cases():
    eng = Straightener(2)
    paths = paths_by_labels(eng)
    pb = paths[(L(1, 1), L(1, 2), L(1, 2, True), L(2, 2, True))]
    assert eng.verify((1, 0), (0, 1, 1, 0, 0, 0), pb) is None
    assert eng.verify((0, 1), (0, 1, 1, 0, 0, 0), pb) is None


def test_verify_lower_order_terms_are_smaller():
    eng = Straightener(2)
    pb = paths_by_labels(eng)[
        (L(1, 1), L(1, 2), L(1, 2, True), L(2, 2, True))
    ]
    poly = eng.straighten((1, 0), (0, 1, 1, 0, 0, 0), pb)
    lead = (0, 1, 1, 0, 0, 0)
    for mono in poly:
        if mono != lead:
            assert eng.succ_compare(lead, mono) == 1


def test_straighten_rejects_bad_input():
    eng = Straightener(2)
    paths = paths_by_labels(eng)
    pb = paths[(L(1, 1), L(1, 2), L(1, 2, True), L(2, 2, True))]
    diag = paths[(L(1, 1), L(1, 2), L(2, 2))]
    with pytest.raises(ValueError):
        eng.straighten((2, 0), (0, 1, 1, 0, 0, 0), pb)   # sum not above bound
    with pytest.raises(ValueError):
        eng.straighten((1, 0), (0, 1, 1, 0, 0, 0), diag) # path must end barred
    with pytest.raises(ValueError):
        eng.straighten((1, 0), (0, 1, 0, 0, 1, 0), pb)   # s leaves the path
    with pytest.raises(ValueError):
        eng.straighten((1, 0), (0, 1, 1, 0, 0), pb)


def test_exhaustive_sweep_small_ranks():
    for n in (1, 2):
        eng = Straightener(n)
        paths = [
            p
            for p in dyck_paths(eng.poset)
            if p.start == L(1, 1) and p.end.barred
        ]
        for total in range(2 * n + 1):
            weight = (total,) + (0,) * (n - 1)
            sigma = total + 1
            for path in paths:
                idxs = [eng.labels.index(lab) for lab in path.labels]
                for split in combinations_with_replacement(
                    range(len(idxs)), sigma
                ):
                    vec = [0] * eng.nvars
                    for pos in split:
                        vec[idxs[pos]] += 1
                    assert eng.verify(weight, tuple(vec), path) is None


def test_serialization():
    eng = Straightener(2)
    pb = paths_by_labels(eng)[
        (L(1, 1), L(1, 2), L(1, 2, True), L(2, 2, True))
    ]
    poly = eng.straighten((1, 0), (0, 1, 1, 0, 0, 0), pb)
    assert eng.poly_to_json(poly) == [
        {"exponents": [0, 1, 1, 0, 0, 0], "coeff": 2},
        {"exponents": [0, 0, 0, 1, 1, 0], "coeff": 2},
    ]
    word, _ = eng.build_delta_ops((1, 0, 0, 0, 0, 1), pb)
    assert eng.word_to_json(word) == [
        {"op": "d(1,1)", "power": 2},
        {"op": "d(1,2bar)", "power": 1},
    ]
    assert str(DerivationId("special")) == "d_special"
