"""Weight systems, branching and multiplicities for reductive groups.

A reductive group is a product of simple factors times a central torus.
Its weights are ``Weight`` objects whose ``coords`` concatenate the
fundamental-weight coordinates of the factors (in order) and whose
``torus`` holds one exact rational charge per torus factor.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Mapping

from .rootsys import (
    RootSystem,
    RootSystemError,
    SimpleType,
    Weight,
    build_root_system,
    dual_weight,
    weyl_dim,
)


class InconsistentEmbedding(ValueError):
    """Restricted characters that do not decompose into H-irreducibles."""


@dataclass(frozen=True)
class ReductiveSpec:
    simple_factors: tuple[SimpleType, ...] = ()
    torus_rank: int = 0

    def __post_init__(self):
        factors = tuple(
            SimpleType.parse(f) if isinstance(f, str) else f for f in self.simple_factors
        )
        object.__setattr__(self, "simple_factors", factors)
        if self.torus_rank < 0:
            raise ValueError("torus rank must be non-negative")

    @classmethod
    def parse(cls, text: str) -> "ReductiveSpec":
        """Parse e.g. ``"C2xA1"``, ``"A1xT1"``, ``"T2"`` or ``"1"`` (trivial)."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        factors, torus = [], 0
        for part in re.split(r"[x*+·]", text):
            part = part.strip()
            m = re.fullmatch(r"T(\d+)", part)
            if m:
                torus += int(m.group(1))
            else:
                factors.append(SimpleType.parse(part))
        return cls(tuple(factors), torus)

    def __str__(self):
        parts = [str(f) for f in self.simple_factors]
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return "x".join(parts) if parts else "1"

    @cached_property
    def root_systems(self) -> tuple[RootSystem, ...]:
        return tuple(build_root_system(f) for f in self.simple_factors)

    @cached_property
    def slices(self) -> tuple[slice, ...]:
        out, start = [], 0
        for rs in self.root_systems:
            out.append(slice(start, start + rs.rank))
            start += rs.rank
        return tuple(out)

    @property
    def semisimple_rank(self) -> int:
        return sum(rs.rank for rs in self.root_systems)

    @property
    def rank(self) -> int:
        return self.semisimple_rank + self.torus_rank

    @property
    def dim_U(self) -> int:
        return sum(rs.num_positive_roots for rs in self.root_systems)

    @property
    def dim_B(self) -> int:
        return self.dim_U + self.rank

    @property
    def dim(self) -> int:
        return 2 * self.dim_U + self.rank

    @property
    def is_simple(self) -> bool:
        return len(self.simple_factors) == 1 and self.torus_rank == 0

    def zero_weight(self) -> Weight:
        return Weight((0,) * self.semisimple_rank, (Fraction(0),) * self.torus_rank)

    def adjoint_summands(self) -> list[Weight]:
        """Highest weights of the summands of the adjoint module."""
        out = []
        for k, rs in enumerate(self.root_systems):
            coords = [0] * self.semisimple_rank
            coords[self.slices[k]] = rs.adjoint_weight.coords
            out.append(Weight(tuple(coords), (Fraction(0),) * self.torus_rank))
        out.extend([self.zero_weight()] * self.torus_rank)
        return out

    def check_weight(self, lam: Weight, dominant: bool = True) -> None:
        if len(lam.coords) != self.semisimple_rank or len(lam.torus) != self.torus_rank:
            raise RootSystemError(f"weight {lam} does not match group {self}")
        if dominant and not lam.is_dominant:
            raise RootSystemError(f"weight {lam} is not dominant for {self}")

    def factor_coords(self, lam: Weight) -> list[tuple[int, ...]]:
        return [tuple(lam.coords[s]) for s in self.slices]

    def weyl_dim(self, lam: Weight) -> int:
        self.check_weight(lam)
        d = 1
        for rs, c in zip(self.root_systems, self.factor_coords(lam)):
            d *= weyl_dim(rs, c)
        return d

    def dual(self, lam: Weight) -> Weight:
        self.check_weight(lam)
        coords = []
        for rs, c in zip(self.root_systems, self.factor_coords(lam)):
            coords.extend(dual_weight(rs, c).coords)
        return Weight(tuple(coords), tuple(-t for t in lam.torus))

    def height(self, coords) -> Fraction:
        return sum(
            (rs.height(coords[s]) for rs, s in zip(self.root_systems, self.slices)), Fraction(0)
        )

    def parse_weight(self, text: str) -> Weight:
        """``"1,0,2"`` or ``"1,0;1/2"`` (torus charges after the semicolon)."""
        text = text.strip()
        if text == "adjoint":
            if not self.is_simple:
                raise RootSystemError("'adjoint' needs a simple group")
            return self.adjoint_summands()[0]
        head, _, tail = text.partition(";")
        coords = tuple(int(x) for x in head.split(",") if x.strip()) if head.strip() else ()
        torus = tuple(Fraction(x.strip()) for x in tail.split(",") if x.strip())
        if not torus and self.torus_rank:
            torus = (Fraction(0),) * self.torus_rank
        lam = Weight(coords, torus)
        self.check_weight(lam, dominant=False)
        return lam


# Freudenthal's recursion, one simple factor at a time


def _quadratic_form(rs: RootSystem):
    inv = rs._cartan_inverse
    n = rs.rank
    return [[inv[i][j] * rs.root_lengths[j] / 2 for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def _form(t: SimpleType):
    return _quadratic_form(build_root_system(t))


def _ip(q, a, b) -> Fraction:
    return sum((q[i][j] * a[i] * b[j] for i in range(len(a)) for j in range(len(b)) if a[i] and b[j]), Fraction(0))


@lru_cache(maxsize=None)
def dominant_multiplicities(t: SimpleType, lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Multiplicities of the dominant weights of V_lam (Freudenthal)."""
    rs = build_root_system(t)
    if len(lam) != rs.rank or any(c < 0 for c in lam):
        raise RootSystemError(f"weight {lam} is not dominant for {t}")
    q = _form(t)
    pos = rs.positive_root_weights
    # dominant weights below lam: subtract positive roots, stay dominant
    dominant = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in pos:
                nu = tuple(x - y for x, y in zip(mu, a))
                if min(nu) >= 0 and nu not in dominant:
                    dominant.add(nu)
                    nxt.append(nu)
        frontier = nxt
    order = sorted(dominant, key=lambda mu: (-rs.height(mu), tuple(-c for c in mu)))
    rho = (1,) * rs.rank
    lr = tuple(x + 1 for x in lam)
    top = _ip(q, lr, lr)
    pair_cache = [tuple(a) for a in pos]
    mult: dict[tuple[int, ...], int] = {lam: 1}
    for mu in order[1:]:
        total = Fraction(0)
        for a in pair_cache:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = mult.get(rs.dominant_representative(nu), 0)
                if not m:
                    break
                total += m * _ip(q, nu, a)
                k += 1
        mr = tuple(x + r for x, r in zip(mu, rho))
        value = 2 * total / (top - _ip(q, mr, mr))
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral Freudenthal multiplicity at {mu}")
        if value:
            mult[mu] = int(value)
    return mult


@lru_cache(maxsize=None)
def simple_weight_system(t: SimpleType, lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """All weights of V_lam with multiplicities (W-orbits of the dominant ones)."""
    rs = build_root_system(t)
    out = {}
    for mu, m in dominant_multiplicities(t, lam).items():
        for nu in rs.orbit(mu):
            out[nu] = m
    return out


class WeightSystem(dict):
    """Mapping Weight -> multiplicity."""

    @property
    def total(self) -> int:
        return sum(self.values())


def _raw_weight_system(g: ReductiveSpec, lam: Weight) -> dict[tuple[int, ...], int]:
    """Weights (semisimple coordinates only) of V_lam for a product group."""
    parts = [simple_weight_system(t, c) for t, c in zip(g.simple_factors, g.factor_coords(lam))]
    if not parts:
        return {(): 1}
    out = {}
    for combo in product(*(p.items() for p in parts)):
        key = tuple(x for w, _ in combo for x in w)
        m = 1
        for _, k in combo:
            m *= k
        out[key] = m
    return out


def weight_system(g: ReductiveSpec, lam: Weight) -> WeightSystem:
    g.check_weight(lam)
    ws = WeightSystem()
    for coords, m in _raw_weight_system(g, lam).items():
        ws[Weight(coords, lam.torus)] = m
    return ws


@dataclass
class Decomposition:
    """Multiplicities of simple H-modules, keyed by dominant highest weight."""

    group: ReductiveSpec
    summands: dict[Weight, int] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return sum(m * self.group.weyl_dim(w) for w, m in self.summands.items())

    def multiplicity(self, mu: Weight) -> int:
        return self.summands.get(mu, 0)

    def sorted_items(self):
        g = self.group
        return sorted(
            self.summands.items(),
            key=lambda kv: (-g.height(kv[0].coords), tuple(-c for c in kv[0].coords), tuple(-t for t in kv[0].torus)),
        )

    def __eq__(self, other):
        if isinstance(other, Decomposition):
            return self.group == other.group and self.summands == other.summands
        if isinstance(other, Mapping):
            return self.summands == dict(other)
        return NotImplemented

    def dual(self) -> "Decomposition":
        return Decomposition(self.group, {self.group.dual(w): m for w, m in self.summands.items()})

    def format(self) -> str:
        if not self.summands:
            return "0"
        terms = []
        for w, m in self.sorted_items():
            name = format_weight(self.group, w)
            terms.append(name if m == 1 else f"{m}{name}" if name != "𝟙" else f"{m}·𝟙")
        return " + ".join(terms)

    def to_list(self) -> list[dict]:
        return [{"weight": str(w), "mult": m} for w, m in self.sorted_items()]


_SUB = str.maketrans("0123456789-", "₀₁₂₃₄₅₆₇₈₉₋")
_SUP = str.maketrans("0123456789-/", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻ᐟ")
_PRIMES = ["", "′", "″", "‴"]
_TORUS_NAMES = ["ε", "μ", "ν", "κ"]


def format_weight(g: ReductiveSpec, w: Weight) -> str:
    """Multiplicative notation: ``ϖ₁ϖ₂``, ``ϖ²ε⁻²``, ``𝟙`` for the trivial module."""
    parts = []
    for k, (rs, c) in enumerate(zip(g.root_systems, g.factor_coords(w))):
        prime = _PRIMES[k] if len(g.root_systems) > 1 else ""
        for i, a in enumerate(c):
            if a == 0:
                continue
            base = "ϖ" + ("" if rs.rank == 1 else str(i + 1).translate(_SUB)) + prime
            parts.append(base + ("" if a == 1 else str(a).translate(_SUP)))
    for k, t in enumerate(w.torus):
        if t == 0:
            continue
        name = _TORUS_NAMES[k] if k < len(_TORUS_NAMES) else f"ε{k + 1}"
        parts.append(name + ("" if t == 1 else str(t).translate(_SUP)))
    return "".join(parts) if parts else "𝟙"


# restriction and branching


def _restrict_raw(e, coords: tuple[int, ...], torus: tuple[Fraction, ...]):
    full = tuple(coords) + tuple(torus)
    small = e.small
    out = []
    for row in e.restriction:
        out.append(sum((a * x for a, x in zip(row, full) if a and x), Fraction(0)))
    ss = out[: small.semisimple_rank]
    if any(x.denominator != 1 for x in ss):
        raise InconsistentEmbedding(f"{e.label}: non-integral restriction of weight {full}")
    return tuple(int(x) for x in ss), tuple(out[small.semisimple_rank:])


def restricted_character(e, lam: Weight) -> Counter:
    """Multiset of H-weights (coords, torus) of V_lam restricted to H."""
    e.big.check_weight(lam)
    ch = Counter()
    for coords, m in _raw_weight_system(e.big, lam).items():
        ch[_restrict_raw(e, coords, lam.torus)] += m
    return ch


def restricted_module_character(e, summands: Iterable[Weight]) -> Counter:
    ch = Counter()
    for lam in summands:
        ch.update(restricted_character(e, lam))
    return ch


def decompose_character(h: ReductiveSpec, ch: Counter, label: str = "") -> Decomposition:
    """Peel highest weights off an H-character until nothing is left."""
    remaining = Counter({k: v for k, v in ch.items() if v})
    result: dict[Weight, int] = {}
    by_torus: dict[tuple, Counter] = {}
    for (coords, torus), m in remaining.items():
        by_torus.setdefault(torus, Counter())[coords] = m
    for torus in sorted(by_torus):
        part = by_torus[torus]
        heights = {c: h.height(c) for c in part}
        while part:
            top = max(part, key=lambda c: (heights[c], c))
            m = part[top]
            if m < 0 or any(x < 0 for x in top):
                raise InconsistentEmbedding(
                    f"{label}: inconsistent embedding (highest remaining weight {top};{torus} "
                    f"has multiplicity {m})"
                )
            w = Weight(top, torus)
            result[w] = result.get(w, 0) + m
            for coords, k in _raw_weight_system(h, w).items():
                left = part.get(coords, 0) - m * k
                if left < 0:
                    raise InconsistentEmbedding(
                        f"{label}: inconsistent embedding (negative multiplicity at {coords};{torus})"
                    )
                if left:
                    part[coords] = left
                else:
                    part.pop(coords, None)
                heights.setdefault(coords, h.height(coords))
    return Decomposition(h, result)


def branch(e, lam: Weight) -> Decomposition:
    """Decomposition of V_lam restricted along the embedding ``e``."""
    return decompose_character(e.small, restricted_character(e, lam), e.label)


def branch_module(e, summands: Iterable[Weight]) -> Decomposition:
    return decompose_character(e.small, restricted_module_character(e, summands), e.label)


def multiplicity(e, lam: Weight, mu: Weight) -> int:
    """Multiplicity of W_mu in V_lam^* restricted to H."""
    e.small.check_weight(mu)
    return branch(e, e.big.dual(lam)).multiplicity(mu)


def adjoint_decomposition(e) -> Decomposition:
    return branch_module(e, e.big.adjoint_summands())


def isotropy_module(e) -> Decomposition:
    """The H-module m with g = h + m."""
    adj = adjoint_decomposition(e)
    summands = dict(adj.summands)
    for w in e.small.adjoint_summands():
        left = summands.get(w, 0) - 1
        if left < 0:
            raise InconsistentEmbedding(f"{e.label}: embedding does not contain its adjoint ({w} missing)")
        if left:
            summands[w] = left
        else:
            del summands[w]
    return Decomposition(e.small, summands)
