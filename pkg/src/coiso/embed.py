"""Reductive pairs H ⊂ G given by weight-restriction matrices.

The restriction matrix has one row per H-coordinate (fundamental
coordinates of each simple factor of H, then torus charges) and one
column per G-coordinate.  Column j is the restriction of the j-th
fundamental weight (or torus character) of G to the maximal torus of H.
Branching only depends on the restricted multiset of weights, so the
matrix is fixed up to the Weyl group of H and is locked by the
branching expectations shipped in the catalog.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .repth import (
    Decomposition,
    InconsistentEmbedding,
    ReductiveSpec,
    adjoint_decomposition,
    isotropy_module,
    restricted_module_character,
)


@dataclass(frozen=True)
class EmbeddingSpec:
    big: ReductiveSpec
    small: ReductiveSpec
    restriction: tuple[tuple[Fraction, ...], ...]
    label: str = ""

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.restriction)
        object.__setattr__(self, "restriction", rows)
        if len(rows) != self.small.rank:
            raise ValueError(
                f"{self.label}: restriction has {len(rows)} rows, H = {self.small} needs {self.small.rank}"
            )
        for row in rows:
            if len(row) != self.big.rank:
                raise ValueError(
                    f"{self.label}: restriction row has {len(row)} entries, G = {self.big} needs {self.big.rank}"
                )

    @classmethod
    def identity(cls, g: ReductiveSpec, label: str = "") -> "EmbeddingSpec":
        n = g.rank
        rows = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
        return cls(g, g, rows, label or f"{g}-identity")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    label: str
    checks: list[CheckResult] = field(default_factory=list)
    isotropy_dim: int | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _adjoint_character(e: EmbeddingSpec) -> Counter:
    return restricted_module_character(e, e.big.adjoint_summands())


def embed_validate(e: EmbeddingSpec) -> ValidationReport:
    report = ValidationReport(e.label)
    try:
        iso = isotropy_module(e)
    except InconsistentEmbedding as exc:
        report.checks.append(CheckResult("isotropy_module", False, str(exc)))
        return report
    report.isotropy_dim = iso.dim
    report.checks.append(CheckResult("isotropy_module", True))

    ch = _adjoint_character(e)
    bad = next(
        (
            (coords, torus)
            for (coords, torus), m in ch.items()
            if ch.get((tuple(-c for c in coords), tuple(-t for t in torus)), 0) != m
        ),
        None,
    )
    report.checks.append(
        CheckResult(
            "self_dual_adjoint",
            bad is None,
            "" if bad is None else f"weight {bad} and its negative have different multiplicities",
        )
    )
    expected = e.big.dim - e.small.dim
    report.checks.append(
        CheckResult(
            "dimension_bookkeeping",
            iso.dim == expected,
            f"dim m = {iso.dim}, dim G - dim H = {expected}",
        )
    )
    return report


def _torus_weight(coords, torus):
    return tuple(Fraction(c) for c in coords) + tuple(torus)


def fixed_space_dim(e: EmbeddingSpec) -> int:
    """dim g^{T_H}: multiplicity of the zero T_H-weight in g."""
    ch = _adjoint_character(e)
    zero = (0,) * e.small.semisimple_rank, (Fraction(0),) * e.small.torus_rank
    return ch.get(zero, 0)


def fixed_space_dim_from_summands(e: EmbeddingSpec, decomposition: Decomposition | None = None) -> int:
    """Same number, summed over the zero weights of the H-summands of g."""
    from .repth import weight_system

    dec = decomposition or adjoint_decomposition(e)
    total = 0
    for w, m in dec.summands.items():
        if any(w.torus):
            continue
        ws = weight_system(e.small, w)
        total += m * ws.get(e.small.zero_weight(), 0)
    return total


def th_weight_multiplicities(e: EmbeddingSpec) -> dict[tuple, int]:
    """Multiplicities of the non-zero T_H-weights of g."""
    out = {}
    for (coords, torus), m in _adjoint_character(e).items():
        if any(coords) or any(torus):
            out[_torus_weight(coords, torus)] = m
    return out


def diamond_conditions(e: EmbeddingSpec) -> tuple[bool, bool, dict]:
    """(max non-zero T_H-multiplicity <= 2, #weights of multiplicity 2 <= 2 rk h)."""
    table = th_weight_multiplicities(e)
    max_mult = max(table.values(), default=0)
    doubles = sum(1 for m in table.values() if m == 2)
    info = {"max_multiplicity": max_mult, "multiplicity_two_count": doubles, "bound": 2 * e.small.rank}
    return max_mult <= 2, doubles <= 2 * e.small.rank, info
