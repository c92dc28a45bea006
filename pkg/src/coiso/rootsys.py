"""Root systems of the simple Lie algebras.

Conventions (used by every other module and by the bundled catalog):

* Simple roots are numbered as in Bourbaki.  For B_n the last root is
  short, for C_n the last root is long, for G_2 the first root is short,
  for F_4 roots 3 and 4 are short.  E_n has the branch node 2 attached
  to node 4.
* ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` lists the
  fundamental-weight coordinates of the simple root ``alpha_i``.
* Roots are stored in simple-root coordinates, weights in
  fundamental-weight coordinates.
* The invariant form is normalised so that long roots have squared
  length 2.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import linalg

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        rule = _RANK_RULES.get(self.family)
        if rule is None or not isinstance(self.rank, int) or not rule(self.rank):
            raise RootSystemError(f"inadmissible simple type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse simple type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """A weight: fundamental-weight coordinates plus central torus charges."""

    coords: tuple[int, ...]
    torus: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        object.__setattr__(self, "torus", tuple(Fraction(t) for t in self.torus))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __neg__(self):
        return Weight(tuple(-c for c in self.coords), tuple(-t for t in self.torus))

    def __str__(self):
        s = ",".join(str(c) for c in self.coords)
        if self.torus:
            s += ";" + ",".join(str(t) for t in self.torus)
        return s


def _gram_simple(t: SimpleType) -> list[list[Fraction]]:
    """Symmetric matrix of inner products of simple roots (long roots: 2)."""
    n = t.rank
    g = [[Fraction(0)] * n for _ in range(n)]

    def link(i, j, v):
        g[i][j] = g[j][i] = Fraction(v)

    f = t.family
    if f == "A":
        for i in range(n):
            g[i][i] = Fraction(2)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif f == "B":
        for i in range(n - 1):
            g[i][i] = Fraction(2)
        g[n - 1][n - 1] = Fraction(1)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif f == "C":
        for i in range(n - 1):
            g[i][i] = Fraction(1)
        g[n - 1][n - 1] = Fraction(2)
        for i in range(n - 2):
            link(i, i + 1, Fraction(-1, 2))
        link(n - 2, n - 1, -1)
    elif f == "D":
        for i in range(n):
            g[i][i] = Fraction(2)
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif f == "E":
        for i in range(n):
            g[i][i] = Fraction(2)
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif f == "F":
        g[0][0] = g[1][1] = Fraction(2)
        g[2][2] = g[3][3] = Fraction(1)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, Fraction(-1, 2))
    elif f == "G":
        g[0][0] = Fraction(2, 3)
        g[1][1] = Fraction(2)
        link(0, 1, -1)
    return g


class RootSystem:
    """Root datum of a simple Lie algebra.  Immutable after construction."""

    def __init__(self, simple_type: SimpleType):
        self.simple_type = simple_type
        self.rank = simple_type.rank
        self.gram = _gram_simple(simple_type)
        n = self.rank
        self.cartan = tuple(
            tuple(int(2 * self.gram[i][j] / self.gram[j][j]) for j in range(n)) for i in range(n)
        )
        self.root_lengths = tuple(self.gram[i][i] for i in range(n))
        self.positive_roots = self._generate_positive_roots()
        self.rho = Weight((1,) * n)

    def _generate_positive_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(n):
                pairing = sum(beta[j] * self.cartan[j][i] for j in range(n))
                if pairing == 0:
                    continue
                image = tuple(beta[j] - (pairing if j == i else 0) for j in range(n))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        positive = [r for r in seen if all(c >= 0 for c in r)]
        if len(positive) * 2 != len(seen):
            raise RootSystemError("root closure is not symmetric")
        return tuple(sorted(positive, key=self.root_order_key))

    @staticmethod
    def root_order_key(root):
        """Graded lexicographic: height first, then alpha_1 before alpha_2."""
        return (sum(root), tuple(-c for c in root))

    # basic numerics

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def dim(self) -> int:
        return self.rank + 2 * self.num_positive_roots

    @property
    def roots(self):
        return self.positive_roots + tuple(tuple(-c for c in r) for r in self.positive_roots)

    def root_to_weight(self, root: Sequence[int]) -> tuple[int, ...]:
        n = self.rank
        return tuple(sum(root[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def root_norm(self, root: Sequence[int]) -> Fraction:
        n = self.rank
        return sum(
            (root[i] * root[j] * self.gram[i][j] for i in range(n) for j in range(n)), Fraction(0)
        )

    def coroot_pairing(self, weight: Sequence, root: Sequence[int]) -> Fraction:
        """<weight, root^vee> for a weight in fundamental coordinates."""
        norm = self.root_norm(root)
        return sum(
            (Fraction(weight[i]) * root[i] * self.root_lengths[i] for i in range(self.rank)),
            Fraction(0),
        ) / norm

    @cached_property
    def _cartan_inverse(self):
        return linalg.inverse(self.cartan)

    def weight_to_root_coords(self, weight: Sequence) -> list[Fraction]:
        inv = self._cartan_inverse
        n = self.rank
        return [sum((Fraction(weight[i]) * inv[i][j] for i in range(n)), Fraction(0)) for j in range(n)]

    def inner(self, lam: Sequence, mu: Sequence) -> Fraction:
        """Invariant inner product of two weights in fundamental coordinates."""
        r = self.weight_to_root_coords(lam)
        return sum(
            (r[k] * Fraction(mu[k]) * self.root_lengths[k] / 2 for k in range(self.rank)), Fraction(0)
        )

    def height(self, weight: Sequence) -> Fraction:
        return sum(self.weight_to_root_coords(weight), Fraction(0))

    @cached_property
    def highest_root(self) -> tuple[int, ...]:
        return self.positive_roots[-1]

    @cached_property
    def adjoint_weight(self) -> Weight:
        return Weight(self.root_to_weight(self.highest_root))

    @cached_property
    def positive_root_weights(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.root_to_weight(r) for r in self.positive_roots)

    @cached_property
    def _coroot_coeffs(self):
        # <lambda, beta^vee> = sum_i lambda_i * coeff_i
        out = []
        for r in self.positive_roots:
            norm = self.root_norm(r)
            out.append(tuple(r[i] * self.root_lengths[i] / norm for i in range(self.rank)))
        return tuple(out)

    # Weyl group

    def reflect(self, weight: Sequence[int], i: int) -> tuple[int, ...]:
        c = weight[i]
        row = self.cartan[i]
        return tuple(w - c * a for w, a in zip(weight, row))

    def dominant_representative(self, weight: Sequence[int]) -> tuple[int, ...]:
        w = tuple(weight)
        while True:
            for i, c in enumerate(w):
                if c < 0:
                    w = self.reflect(w, i)
                    break
            else:
                return w

    def orbit(self, weight: Sequence[int]) -> list[tuple[int, ...]]:
        start = tuple(weight)
        seen = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for i in range(self.rank):
                if w[i] != 0:
                    v = self.reflect(w, i)
                    if v not in seen:
                        seen.add(v)
                        queue.append(v)
        return list(seen)

    def __repr__(self):
        return f"RootSystem({self.simple_type})"


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType | str) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return RootSystem(t)


def classical_positive_root_count(t: SimpleType) -> int:
    n = t.rank
    return {
        "A": lambda: n * (n + 1) // 2,
        "B": lambda: n * n,
        "C": lambda: n * n,
        "D": lambda: n * (n - 1),
        "E": lambda: {6: 36, 7: 63, 8: 120}[n],
        "F": lambda: 24,
        "G": lambda: 6,
    }[t.family]()


def _coords(lam) -> tuple:
    return tuple(lam.coords) if isinstance(lam, Weight) else tuple(lam)


def weyl_dim(rs: RootSystem, lam) -> int:
    """Dimension of the simple module with highest weight ``lam``."""
    coords = _coords(lam)
    if len(coords) != rs.rank:
        raise RootSystemError(f"weight {coords} has wrong length for {rs.simple_type}")
    if any(c < 0 for c in coords):
        raise RootSystemError(f"weight {coords} is not dominant")
    num = Fraction(1)
    for coeffs in rs._coroot_coeffs:
        top = sum(((c + 1) * k for c, k in zip(coords, coeffs)), Fraction(0))
        bottom = sum(coeffs, Fraction(0))
        num *= top / bottom
    assert num.denominator == 1
    return int(num)


def dual_coxeter_number(rs: RootSystem) -> int:
    h = 1 + rs.coroot_pairing(rs.rho.coords, rs.highest_root)
    assert h.denominator == 1
    return int(h)


def dual_weight(rs: RootSystem, lam) -> Weight:
    """Highest weight of the dual module, i.e. -w0(lam)."""
    coords = _coords(lam)
    if any(c < 0 for c in coords):
        raise RootSystemError(f"weight {coords} is not dominant")
    dual = rs.dominant_representative(tuple(-c for c in coords))
    torus = tuple(-t for t in lam.torus) if isinstance(lam, Weight) else ()
    return Weight(dual, torus)


def long_root_string_pairs(rs: RootSystem, i: int) -> int:
    """Number of pairs {mu, mu + alpha_i} of positive roots."""
    pos = set(rs.positive_roots)
    count = 0
    for mu in rs.positive_roots:
        shifted = tuple(c + (1 if j == i else 0) for j, c in enumerate(mu))
        if shifted in pos:
            count += 1
    return count


def all_simple_types(max_rank: int = 8) -> Iterable[SimpleType]:
    for fam in "ABCDEFG":
        for n in range(1, max_rank + 1):
            try:
                yield SimpleType(fam, n)
            except RootSystemError:
                continue
