from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coiso.rootsys import (
    RootSystemError,
    SimpleType,
    all_simple_types,
    build_root_system,
    classical_positive_root_count,
    dual_coxeter_number,
    dual_weight,
    long_root_string_pairs,
    weyl_dim,
)

# textbook dimensions and dual Coxeter numbers
KNOWN = {
    "A1": (3, 2), "A2": (8, 3), "A4": (24, 5), "B2": (10, 3), "B3": (21, 5), "B4": (36, 7),
    "C3": (21, 4), "C4": (36, 5), "D4": (28, 6), "D5": (45, 8), "E6": (78, 12),
    "E7": (133, 18), "E8": (248, 30), "F4": (52, 9), "G2": (14, 4),
}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_dimension_and_dual_coxeter(name):
    rs = build_root_system(name)
    dim, hvee = KNOWN[name]
    assert rs.dim == dim
    assert dual_coxeter_number(rs) == hvee


@pytest.mark.parametrize("t", list(all_simple_types(8)), ids=str)
def test_positive_root_count_matches_closed_form(t):
    assert build_root_system(t).num_positive_roots == classical_positive_root_count(t)


@pytest.mark.parametrize("t", list(all_simple_types(8)), ids=str)
def test_adjoint_weyl_dim_is_dim(t):
    rs = build_root_system(t)
    assert weyl_dim(rs, rs.adjoint_weight) == rs.dim


def test_bourbaki_short_roots():
    assert build_root_system("B3").root_lengths == (2, 2, 1)
    assert build_root_system("C3").root_lengths == (1, 1, 2)
    assert build_root_system("G2").root_lengths == (Fraction(2, 3), 2)
    assert build_root_system("F4").root_lengths == (2, 2, 1, 1)


def test_cartan_convention():
    # row i: fundamental coordinates of alpha_i
    assert build_root_system("B2").cartan == ((2, -2), (-1, 2))
    assert build_root_system("G2").cartan == ((2, -1), (-3, 2))


def test_small_module_dimensions():
    assert weyl_dim(build_root_system("G2"), (1, 0)) == 7
    assert weyl_dim(build_root_system("B3"), (0, 0, 1)) == 8
    assert weyl_dim(build_root_system("E6"), (1, 0, 0, 0, 0, 0)) == 27
    assert weyl_dim(build_root_system("E7"), (0, 0, 0, 0, 0, 0, 1)) == 56
    assert weyl_dim(build_root_system("F4"), (0, 0, 0, 1)) == 26
    assert weyl_dim(build_root_system("A1"), (6,)) == 7


@pytest.mark.parametrize("bad", ["B1", "C1", "D2", "E5", "F3", "G3", "A0", "X2", "A"])
def test_inadmissible_types(bad):
    with pytest.raises(RootSystemError):
        SimpleType.parse(bad)


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(RootSystemError):
        weyl_dim(build_root_system("A2"), (-1, 0))


def test_dual_weights():
    assert dual_weight(build_root_system("A3"), (1, 0, 0)).coords == (0, 0, 1)
    assert dual_weight(build_root_system("E6"), (1, 0, 0, 0, 0, 0)).coords == (0, 0, 0, 0, 0, 1)
    assert dual_weight(build_root_system("D5"), (0, 0, 0, 1, 0)).coords == (0, 0, 0, 0, 1)
    assert dual_weight(build_root_system("D4"), (0, 0, 1, 0)).coords == (0, 0, 1, 0)


@pytest.mark.parametrize("t", list(all_simple_types(8)), ids=str)
def test_long_root_strings_count_hvee_minus_two(t):
    rs = build_root_system(t)
    top = max(rs.root_lengths)
    i = next(k for k, L in enumerate(rs.root_lengths) if L == top)
    assert long_root_string_pairs(rs, i) == dual_coxeter_number(rs) - 2


@pytest.mark.parametrize("t", list(all_simple_types(4)), ids=str)
def test_orbit_of_highest_root_is_long_roots(t):
    rs = build_root_system(t)
    orbit = rs.orbit(rs.adjoint_weight.coords)
    long_roots = [r for r in rs.roots if rs.root_norm(r) == 2]
    assert len(orbit) == len(long_roots)


types_small = st.sampled_from([str(t) for t in all_simple_types(4)])


@settings(max_examples=60, deadline=None)
@given(types_small, st.data())
def test_weyl_dim_of_dual_matches(name, data):
    rs = build_root_system(name)
    lam = tuple(data.draw(st.integers(0, 3)) for _ in range(rs.rank))
    assert weyl_dim(rs, dual_weight(rs, lam)) == weyl_dim(rs, lam)


@settings(max_examples=60, deadline=None)
@given(types_small, st.data())
def test_dominant_representative_is_dominant_and_in_orbit(name, data):
    rs = build_root_system(name)
    lam = tuple(data.draw(st.integers(-3, 3)) for _ in range(rs.rank))
    dom = rs.dominant_representative(lam)
    assert all(c >= 0 for c in dom)
    assert lam in rs.orbit(dom)
    assert rs.inner(lam, lam) == rs.inner(dom, dom)


@settings(max_examples=40, deadline=None)
@given(types_small, st.data())
def test_reflection_is_involution(name, data):
    rs = build_root_system(name)
    lam = tuple(data.draw(st.integers(-3, 3)) for _ in range(rs.rank))
    i = data.draw(st.integers(0, rs.rank - 1))
    assert rs.reflect(rs.reflect(lam, i), i) == lam
