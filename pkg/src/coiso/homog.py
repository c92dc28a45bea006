"""Complexity, rank, nullcone dimension and defect for reductive pairs.

For a pair H ⊂ G the homogeneous space (G x H)/diag(H) has

* complexity ``dim U - dim B_H`` and rank ``rk G + rk H``;
* nullcone of the H-module g of dimension
  ``dim U_H + (dim g - dim g^{T_H}) / 2``;
* ``dim B_H <= (dim g - dim g^{T_H}) / 2 <= dim U`` with equality on the
  left iff the quotient g -> g//H is equidimensional and on the right iff
  H is s-regular.

Generic stabilisers are never constructed; only the numbers they force are
reported.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .embed import EmbeddingSpec, diamond_conditions, fixed_space_dim
from .repth import isotropy_module, weight_system

HOLDS, STRICT, FAILS = "holds", "strict", "fails"


class InadmissiblePair(ValueError):
    pass


class CatalogDataError(ValueError):
    pass


def compare_le(a, b) -> str:
    """Three-valued verdict for ``a <= b``."""
    if a < b:
        return STRICT
    return HOLDS if a == b else FAILS


def truth(flag: bool) -> str:
    return HOLDS if flag else FAILS


def complexity_rank(e: EmbeddingSpec) -> tuple[int, int]:
    c = e.big.dim_U - e.small.dim_B
    if c < 0:
        raise InadmissiblePair(
            f"{e.label}: dim U - dim B_H = {c} < 0 (H contains an infinite normal subgroup of G?)"
        )
    return c, e.big.rank + e.small.rank


def _half_nonfixed(e: EmbeddingSpec) -> int:
    diff = e.big.dim - fixed_space_dim(e)
    if diff % 2:
        raise ArithmeticError(f"{e.label}: dim g - dim g^T_H = {diff} is odd; broken embedding data")
    return diff // 2


def nullcone_dim(e: EmbeddingSpec) -> int:
    return e.small.dim_U + _half_nonfixed(e)


def defect(e: EmbeddingSpec) -> int:
    return nullcone_dim(e) - e.small.dim


def s_regular(e: EmbeddingSpec) -> bool:
    return fixed_space_dim(e) == e.big.rank


@dataclass
class PairReport:
    label: str
    c_tilde: int
    r_tilde: int
    quotient_dim: int
    fixed_dim: int
    nullcone_dim: int
    defect: int
    s_regular: bool
    generic_stab_rank: int
    inequality_verdicts: dict[str, str] = field(default_factory=dict)
    diamond_verdicts: tuple[bool, bool] = (False, False)
    dim_g: int = 0
    dim_h: int = 0
    rank_g: int = 0
    rank_h: int = 0
    trdeg_bound: int = 0

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.inequality_verdicts.items() if v == FAILS]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        """Serializable form; complexity and rank appear as ``ctilde`` and ``rtilde``."""
        d = asdict(self)
        d["ctilde"] = d.pop("c_tilde")
        d["rtilde"] = d.pop("r_tilde")
        d["diamond_verdicts"] = list(self.diamond_verdicts)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)


def verify_theorems(e: EmbeddingSpec) -> PairReport:
    """Recompute every numeric for the pair and record each check's verdict."""
    g, h = e.big, e.small
    c, r = complexity_rank(e)
    fixed = fixed_space_dim(e)
    half = _half_nonfixed(e)
    null = h.dim_U + half
    dfct = null - h.dim
    sreg = fixed == g.rank
    d1, d2, _ = diamond_conditions(e)
    v: dict[str, str] = {}

    v["quotient_dim"] = truth(2 * c + r == g.dim - h.dim)
    v["parity"] = truth((g.dim - fixed) % 2 == 0)
    v["fixed_contains_cartan"] = compare_le(g.rank, fixed)
    v["defect_range"] = truth(0 <= dfct <= c)
    # both inequalities dim B_H <= (dim g - dim g^T)/2 <= dim U
    v["borel_le_half"] = compare_le(h.dim_B, half)
    v["half_le_unipotent"] = compare_le(half, g.dim_U)
    v["equidimensional_iff_left_equality"] = truth((dfct == 0) == (h.dim_B == half))
    v["s_regular_iff_right_equality"] = truth(sreg == (half == g.dim_U))
    if c > 0 and h.dim > 0 and g.is_simple:
        v["not_equidimensional"] = truth(h.dim_B < half)
    if c == 1:
        v["c1_s_regular"] = truth(sreg)
        v["c1_defect_one"] = truth(dfct == 1)
        v["c1_exactly_one"] = truth((h.dim_B == half) != (half == g.dim_U))
    if c == 0:
        v["c0_defect_zero"] = truth(dfct == 0)
        v["c0_s_regular"] = truth(sreg)
    v["nullcone_le_h_plus_c"] = compare_le(null, h.dim + c)
    v["proper_intersection_dim"] = truth(h.dim + 2 * c == g.dim - g.rank - h.rank)
    if dfct == c:
        v["max_defect_s_regular"] = truth(sreg)
    # if dim g^T = rk g + 2c held, a diamond condition would have to fail
    if fixed == g.rank + 2 * c and c > 0 and h.dim > 0:
        v["diamond_obstruction"] = truth(not (d1 and d2))
    v["generic_stabiliser_finite"] = truth(g.rank + h.rank - r == 0)
    return PairReport(
        label=e.label,
        c_tilde=c,
        r_tilde=r,
        quotient_dim=2 * c + r,
        fixed_dim=fixed,
        nullcone_dim=null,
        defect=dfct,
        s_regular=sreg,
        generic_stab_rank=g.rank + h.rank - r,
        inequality_verdicts=v,
        diamond_verdicts=(d1, d2),
        dim_g=g.dim,
        dim_h=h.dim,
        rank_g=g.rank,
        rank_h=h.rank,
        trdeg_bound=c + r,
    )


@dataclass
class OneSidedReport:
    label: str
    c: int
    r: int
    dim_m: int
    quotient_dim: int
    nullcone_window: tuple[int, int]
    generic_fibre_dim: int
    nilpotent_intersection_dim: int
    m_nullcone_dim: Fraction
    half_nonfixed_g: Fraction
    generic_stab_rank: int
    checks: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["nullcone_window"] = list(self.nullcone_window)
        d["m_nullcone_dim"] = str(self.m_nullcone_dim)
        d["half_nonfixed_g"] = str(self.half_nonfixed_g)
        return d


def one_sided_report(e: EmbeddingSpec, c: int, r: int) -> OneSidedReport:
    """Dimension bookkeeping for G/H itself, with literature values of c and r."""
    g, h = e.big, e.small
    m = isotropy_module(e)
    dim_m = m.dim
    quotient = 2 * c + r
    lower, upper = dim_m - 2 * c - r, dim_m - c - r
    if c < 0 or r < 0 or lower < 0 or r > g.rank:
        raise CatalogDataError(f"{e.label}: c = {c}, r = {r} inconsistent with dim m = {dim_m}")
    zero = h.zero_weight()
    fixed_m = 0
    for w, k in m.summands.items():
        if not any(w.torus):
            fixed_m += k * weight_system(h, w).get(zero, 0)
    m_null = h.dim_U + Fraction(dim_m - fixed_m, 2)
    half_g = Fraction(g.dim - fixed_space_dim(e), 2)
    checks = {
        "window_nonempty": compare_le(lower, upper),
        "nullcone_forms_agree": truth(m_null == half_g),
        "nullcone_above_lower": compare_le(lower, m_null),
        "nullcone_inside_nilpotent": compare_le(upper, dim_m - r),
        "rank_bound": compare_le(r, g.rank),
        "dim_m_bookkeeping": truth(dim_m == g.dim - h.dim),
    }
    return OneSidedReport(
        label=e.label,
        c=c,
        r=r,
        dim_m=dim_m,
        quotient_dim=quotient,
        nullcone_window=(lower, upper),
        generic_fibre_dim=dim_m - quotient,
        nilpotent_intersection_dim=dim_m - r,
        m_nullcone_dim=m_null,
        half_nonfixed_g=half_g,
        generic_stab_rank=g.rank - r,
        checks=checks,
    )
