from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coiso.embed import EmbeddingSpec
from coiso.repth import (
    Decomposition,
    ReductiveSpec,
    Weight,
    adjoint_decomposition,
    branch,
    decompose_character,
    dominant_multiplicities,
    isotropy_module,
    multiplicity,
    restricted_character,
    simple_weight_system,
    weight_system,
)
from coiso.rootsys import RootSystemError, SimpleType, build_root_system, weyl_dim


def pair(big, small, rows, label="t"):
    return EmbeddingSpec(ReductiveSpec.parse(big), ReductiveSpec.parse(small), rows, label)


G2_IN_B3 = pair("B3", "G2", [[1, 0, 1], [0, 1, 0]])
SL2_IN_SL3 = pair("A2", "A1", [[1, 0]])
SO3_IN_SL3 = pair("A2", "A1", [[2, 2]])


def test_parse_reductive():
    g = ReductiveSpec.parse("C2xA1xT1")
    assert [str(f) for f in g.simple_factors] == ["C2", "A1"]
    assert g.torus_rank == 1 and g.rank == 4 and g.dim == 14
    assert str(ReductiveSpec.parse("T2")) == "T2"
    assert ReductiveSpec.parse("1").dim == 0


def test_parse_weight():
    g = ReductiveSpec.parse("A1xT1")
    assert g.parse_weight("2;1/2") == Weight((2,), (Fraction(1, 2),))
    assert g.parse_weight("1") == Weight((1,), (Fraction(0),))
    assert ReductiveSpec.parse("G2").parse_weight("adjoint") == Weight((0, 1))
    with pytest.raises(RootSystemError):
        ReductiveSpec.parse("A2").parse_weight("1,0,0")


def test_freudenthal_g2_small():
    # the 7-dim module has zero weight of multiplicity one; the adjoint has two
    assert dominant_multiplicities(SimpleType("G", 2), (1, 0))[(0, 0)] == 1
    assert dominant_multiplicities(SimpleType("G", 2), (0, 1))[(0, 0)] == 2


def test_spin_module_over_g2():
    # 8 = 7 + 1
    d = branch(G2_IN_B3, Weight((0, 0, 1)))
    assert d.summands == {Weight((1, 0)): 1, Weight((0, 0)): 1}


def test_vector_of_sl3_over_sl2():
    d = branch(SL2_IN_SL3, Weight((1, 0)))
    assert d.summands == {Weight((1,)): 1, Weight((0,)): 1}


def test_principal_sl2_in_sl3():
    assert branch(SO3_IN_SL3, Weight((1, 0))).summands == {Weight((2,)): 1}
    assert adjoint_decomposition(SO3_IN_SL3).summands == {Weight((4,)): 1, Weight((2,)): 1}
    assert isotropy_module(SO3_IN_SL3).summands == {Weight((4,)): 1}


def test_decomposition_format():
    assert adjoint_decomposition(pair("G2", "A2", [[0, 1], [1, 1]])).format() == "ϖ₁ϖ₂ + ϖ₁ + ϖ₂"
    d = Decomposition(ReductiveSpec.parse("A1"), {Weight((0,)): 2, Weight((6,)): 1})
    assert d.format() == "ϖ⁶ + 2·𝟙"


def test_multiplicity_uses_dual():
    e = pair("A2", "A1", [[1, 0]])
    assert multiplicity(e, Weight((1, 0)), Weight((1,))) == 1
    assert multiplicity(e, Weight((1, 1)), Weight((0,))) == 1


def test_inconsistent_character_raises():
    from coiso.repth import InconsistentEmbedding

    h = ReductiveSpec.parse("A1")
    from collections import Counter

    with pytest.raises(InconsistentEmbedding):
        decompose_character(h, Counter({((1,), ()): 1}))


small_types = st.sampled_from(["A1", "A2", "A3", "B2", "C3", "G2", "B3", "D4"])


@settings(max_examples=50, deadline=None)
@given(small_types, st.data())
def test_weight_system_total_is_weyl_dim(name, data):
    t = SimpleType.parse(name)
    rs = build_root_system(t)
    lam = tuple(data.draw(st.integers(0, 2)) for _ in range(rs.rank))
    ws = simple_weight_system(t, lam)
    assert sum(ws.values()) == weyl_dim(rs, lam)
    # W-invariance of the character
    for mu, m in ws.items():
        assert ws[rs.dominant_representative(mu)] == m


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_branching_preserves_dimension(data):
    e = data.draw(st.sampled_from([G2_IN_B3, SL2_IN_SL3, SO3_IN_SL3, pair("C2", "A1xT1", [[1, 0], [1, 2]])]))
    lam = Weight(tuple(data.draw(st.integers(0, 2)) for _ in range(e.big.semisimple_rank)))
    d = branch(e, lam)
    assert d.dim == e.big.weyl_dim(lam)
    assert sum(restricted_character(e, lam).values()) == d.dim


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_branching_commutes_with_duality(data):
    e = data.draw(st.sampled_from([SL2_IN_SL3, pair("A3", "A2xT1", [[1, 0, 0], [0, 1, 0], [1, 2, 3]])]))
    lam = Weight(tuple(data.draw(st.integers(0, 2)) for _ in range(e.big.semisimple_rank)))
    assert branch(e, e.big.dual(lam)) == branch(e, lam).dual()


def test_weight_system_with_torus():
    g = ReductiveSpec.parse("A1xT1")
    ws = weight_system(g, Weight((1,), (Fraction(1, 2),)))
    assert ws.total == 2
    assert set(ws) == {Weight((1,), (Fraction(1, 2),)), Weight((-1,), (Fraction(1, 2),))}
