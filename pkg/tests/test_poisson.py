import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coiso.embed import EmbeddingSpec
from coiso.liealg import chevalley, realize, random_rational
from coiso.poisson import (
    LiftDependence,
    NonInvariantInput,
    binary_quadratic_set,
    calibrate,
    casimir,
    coiso_bracket_at,
    commuting_sublists,
    generic_rank,
    invariant_form,
    lie_poisson,
    lie_poisson_at,
    lie_poisson_value,
    linear_function,
    perturbed,
    poisson_matrix_at,
    printed_sign_relation,
    sp4_short_levi_set,
    symmetric_trace_set,
    trace_invariant_on_m,
    verify_relation,
)
from coiso.poly import PolyFn
from coiso.repth import ReductiveSpec
from coiso.rootsys import build_root_system, long_root_string_pairs


def pair(big, small, rows, label="t"):
    return EmbeddingSpec(ReductiveSpec.parse(big), ReductiveSpec.parse(small), rows, label)


def so3_sub():
    return realize(pair("A2", "A1", [[2, 2]], "so3"), [{"e(1,0)": 1, "e(0,1)": 1}, {"f(1,0)": 2, "f(0,1)": 2}, {"h1": 2, "h2": 2}])


def sp4_short_sub():
    return realize(pair("C2", "A1xT1", [[1, 0], [1, 2]], "7s"), [{"e(1,0)": 1}, {"f(1,0)": 1}, {"h1": 1}, {"h2": 1}])


def random_poly(rng, n, degree, terms=4):
    out = PolyFn(n)
    for _ in range(terms):
        mono = [0] * n
        for _ in range(rng.randint(1, degree)):
            mono[rng.randrange(n)] += 1
        out = out + PolyFn(n, {tuple(mono): rng.randint(-3, 3)})
    return out


def test_linear_brackets_are_structure_constants():
    alg = chevalley("A1")
    xe, xf, xh = (linear_function(alg, alg.vector({k: 1})) for k in ("e(1)", "f(1)", "h1"))
    assert lie_poisson(alg, xe, xf) == xh
    assert lie_poisson(alg, xh, xe) == 2 * xe


def test_sl2_casimir_closed_form():
    # Psi = tr(XY) on sl2: x = Psi^{-1} xi = xi_f e + xi_e f + xi_h h / 2
    alg = chevalley("A1")
    xe, xf, xh = (PolyFn.variable(3, alg.index(k)) for k in ("e(1)", "f(1)", "h1"))
    assert casimir(alg, 2) == (4 * xe * xf + xh ** 2) * Fraction(1, 2)
    assert casimir(alg, 3).is_zero()


@pytest.mark.parametrize("t, k", [("A1", 2), ("A2", 2), ("A2", 3), ("B2", 4), ("G2", 2)])
def test_casimirs_are_central(t, k):
    alg = chevalley(t)
    c = casimir(alg, k)
    assert not c.is_zero()
    for i in range(alg.dimension):
        assert lie_poisson(alg, c, PolyFn.variable(alg.dimension, i)).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["A1", "A2", "B2"]))
def test_jacobi_random_triples(seed, t):
    alg = chevalley(t)
    rng = random.Random(seed)
    n = alg.dimension
    f, g, h = (random_poly(rng, n, 2) for _ in range(3))
    total = (
        lie_poisson(alg, f, lie_poisson(alg, g, h))
        + lie_poisson(alg, g, lie_poisson(alg, h, f))
        + lie_poisson(alg, h, lie_poisson(alg, f, g))
    )
    assert total.is_zero()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_symbolic_matches_pointwise(seed):
    alg = chevalley("A2")
    rng = random.Random(seed)
    n = alg.dimension
    f, g = random_poly(rng, n, 3), random_poly(rng, n, 6)
    pt = [random_rational(rng, 20) for _ in range(n)]
    assert lie_poisson(alg, f, g).evaluate(pt) == lie_poisson_at(alg, f, g, pt) == lie_poisson_value(alg, f, g, pt)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_symmetric_bracket_vanishes_and_lift_is_independent(seed):
    sub = so3_sub()
    p2, p3 = trace_invariant_on_m(sub, 2), trace_invariant_on_m(sub, 3)
    rng = random.Random(seed)
    y = [random_rational(rng) for _ in range(sub.dim_m)]
    # coiso_bracket_at also re-evaluates with a shifted lift and raises LiftDependence on disagreement
    assert coiso_bracket_at(sub, p2, p3, y, rng) == 0


def test_non_invariant_input_is_rejected():
    sub = so3_sub()
    x0 = PolyFn.variable(sub.dim_m, 0)
    y = [Fraction(k + 1) for k in range(sub.dim_m)]
    with pytest.raises(NonInvariantInput):
        coiso_bracket_at(sub, x0, trace_invariant_on_m(sub, 2), y)


def test_lift_dependence_detected_for_non_invariants():
    sub = sp4_short_sub()
    n = sub.dim_m
    rng = random.Random(5)
    y = [random_rational(rng) for _ in range(n)]
    vals = set()
    for seed in range(6):
        try:
            vals.add(coiso_bracket_at(sub, PolyFn.variable(n, 0), PolyFn.variable(n, 1), y, random.Random(seed), check_invariance=False))
        except LiftDependence:
            return
    assert len(vals) == 1


def test_symmetric_trace_set_is_invariant():
    inv = symmetric_trace_set(so3_sub())
    rng = random.Random(1)
    for _ in range(10):
        assert inv.invariance_defects(inv.random_point(rng)) == []


def test_calibration():
    assert calibrate(Fraction(4)) == (1, 2)
    assert calibrate(Fraction(1)) == (1, 1)
    lam, s = calibrate(Fraction(2))
    assert lam ** 3 * 2 == s ** 2


def test_binary_quadratics_relations():
    inv = binary_quadratic_set()
    assert verify_relation(inv, 50) and all(v.passed for v in verify_relation(inv, 50))
    bad = verify_relation(inv, 50, relations=[printed_sign_relation(inv), perturbed(inv.relations[0])])
    assert not any(v.passed for v in bad)
    assert bad[0].counterexample is not None
    rng = random.Random(2)
    assert inv.invariance_defects(inv.random_point(rng)) == []


def test_sp4_pairing_and_copies():
    inv = sp4_short_levi_set(sp4_short_sub())
    assert inv.notes["pairing"] == [[0, 0, 1], [0, -1, 0], [1, 0, 0]]
    assert (inv.notes["lambda"], inv.notes["s"]) == (1, 1)
    assert all(v.passed for v in verify_relation(inv, 30))


def test_sp4_invariance_and_rank():
    inv = sp4_short_levi_set(sp4_short_sub())
    rng = random.Random(11)
    pts = [inv.random_point(rng) for _ in range(8)]
    for p in pts:
        assert inv.invariance_defects(p) == []
    best, ranks = generic_rank(inv, rng)
    assert best == 2 and max(ranks) <= 2


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_poisson_matrix_antisymmetric_even_rank(seed):
    from coiso import linalg

    inv = sp4_short_levi_set(sp4_short_sub())
    p = inv.random_point(random.Random(seed))
    m = poisson_matrix_at(inv, p)
    assert all(m[i][j] == -m[j][i] for i in range(len(m)) for j in range(len(m)))
    assert linalg.rank(m) % 2 == 0


def test_commuting_sublists_bounded_by_ctilde_plus_rtilde():
    inv = sp4_short_levi_set(sp4_short_sub())
    rng = random.Random(4)
    pts = [inv.random_point(rng) for _ in range(3)]
    best = max(r for _, r in commuting_sublists(inv, pts))
    # ctilde + rtilde = 1 + 4 for Sp4 > SL2.T1
    assert 1 <= best <= 5


def test_invariant_form_on_sl2_string():
    alg = chevalley("A1")
    basis = [alg.vector({k: 1}) for k in ("e(1)", "h1", "f(1)")]
    actors = basis
    Q = invariant_form(alg, basis, actors)
    # e f and h^2 pair with opposite relative sign 4 : 1
    assert Q[0][2] != 0 and Q[1][1] != 0 and Q[0][0] == 0


@pytest.mark.parametrize("t", ["A3", "B3", "C3", "G2"])
def test_root_strings_through_long_simple_root(t):
    from coiso.rootsys import dual_coxeter_number

    rs = build_root_system(t)
    i = max(range(rs.rank), key=lambda k: rs.root_lengths[k])
    assert long_root_string_pairs(rs, i) == dual_coxeter_number(rs) - 2
