import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coiso.catalog import load_default
from coiso.embed import (
    EmbeddingSpec,
    diamond_conditions,
    embed_validate,
    fixed_space_dim,
    fixed_space_dim_from_summands,
)
from coiso.homog import (
    FAILS,
    HOLDS,
    STRICT,
    CatalogDataError,
    InadmissiblePair,
    compare_le,
    complexity_rank,
    one_sided_report,
    verify_theorems,
)
from coiso.repth import ReductiveSpec

PAIRS = [e.embedding for e in load_default()]


def pair(big, small, rows, label="t"):
    return EmbeddingSpec(ReductiveSpec.parse(big), ReductiveSpec.parse(small), rows, label)


def test_restriction_shape_checked():
    with pytest.raises(ValueError):
        pair("A2", "A1", [[1, 0, 0]])
    with pytest.raises(ValueError):
        pair("A2", "A1", [[1, 0], [0, 1]])


def test_validate_rejects_non_subgroup():
    # sends the vector of SL3 to a 4-dim module: not a restriction of a subgroup
    report = embed_validate(pair("A2", "A1", [[3, 0]]))
    assert not report.passed


def test_identity_pair_is_inadmissible():
    g = ReductiveSpec.parse("B2")
    with pytest.raises(InadmissiblePair):
        complexity_rank(EmbeddingSpec.identity(g))


def test_complexity_by_hand():
    # SL3 > SL2: dim U = 3, dim B_H = 2
    assert complexity_rank(pair("A2", "A1", [[1, 0]])) == (1, 3)
    # SL3 > GL2: dim B_H = 3
    assert complexity_rank(pair("A2", "A1xT1", [[1, 0], [1, 2]])) == (0, 4)


def test_compare_le():
    assert compare_le(1, 2) == STRICT
    assert compare_le(2, 2) == HOLDS
    assert compare_le(3, 2) == FAILS


def test_g2_in_spin7_numbers():
    rep = verify_theorems(pair("B3", "G2", [[1, 0, 1], [0, 1, 0]], "g2"))
    assert (rep.c_tilde, rep.r_tilde, rep.defect, rep.s_regular) == (1, 5, 1, True)
    assert rep.fixed_dim == 3
    assert rep.ok
    d = rep.to_dict()
    assert d["ctilde"] == 1 and "c_tilde" not in d


def test_torus_pair_numbers():
    rep = verify_theorems(pair("A2", "T2", [[2 / 3, 1 / 3], [1 / 3, 2 / 3]]))
    # all of h_G is fixed by a maximal torus
    assert rep.fixed_dim == 2 and rep.s_regular


@pytest.mark.parametrize("e", PAIRS, ids=lambda e: e.label)
def test_fixed_dim_two_ways(e):
    assert fixed_space_dim(e) == fixed_space_dim_from_summands(e)


@pytest.mark.parametrize("e", PAIRS, ids=lambda e: e.label)
def test_catalog_embeddings_validate(e):
    assert embed_validate(e).passed


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(PAIRS))
def test_theorem_checks_never_fail(e):
    try:
        rep = verify_theorems(e)
    except InadmissiblePair:
        return
    assert rep.failures == []
    assert 2 * rep.c_tilde + rep.r_tilde == e.big.dim - e.small.dim
    assert 0 <= rep.defect <= rep.c_tilde
    assert (e.big.dim - rep.fixed_dim) % 2 == 0


def test_diamonds_of_g2():
    d1, d2, _ = diamond_conditions(pair("B3", "G2", [[1, 0, 1], [0, 1, 0]]))
    assert (d1, d2) == (True, False)


def test_one_sided_rejects_inconsistent_data():
    e = pair("A2", "A1", [[2, 2]])
    with pytest.raises(CatalogDataError):
        one_sided_report(e, 3, 0)
    rep = one_sided_report(e, 0, 2)
    assert rep.nullcone_window == (3, 3)
    assert all(v != FAILS for v in rep.checks.values())


# pairs whose first repeated summand needs coordinate sum above 3, with a witness
LATE_WITNESS = {
    "sl3>so3-symmetric": (2, 2),
    "table1-5": (2, 2),
    "item14": (3, 1),
    "sl5>sl4": (1, 1, 1, 1),
    "sl6>sl5": (1, 1, 1, 1, 1),
}


@pytest.mark.parametrize("e", [e for e in PAIRS if e.big.dim_U - e.small.dim_B >= 1], ids=lambda e: e.label)
def test_positive_complexity_has_multiplicity_witness(e):
    from coiso.catalog import multiplicity_witness
    from coiso.repth import Weight, branch

    found = multiplicity_witness(e, 3)
    if e.label in LATE_WITNESS:
        assert found is None
        lam = Weight(LATE_WITNESS[e.label])
        assert max(branch(e, lam).summands.values()) >= 2
    else:
        assert found is not None


def test_sextic_window():
    rep = one_sided_report(pair("C2", "A1", [[3, 4]]), 1, 2)
    assert rep.dim_m == 7 and rep.quotient_dim == 4 and rep.nullcone_window == (3, 4)
