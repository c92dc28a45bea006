"""Lie-Poisson and coisotropy brackets, invariant sets and their relations.

Two Poisson structures occur.

* On S(g) = k[g*] the Lie-Poisson bracket {f, g}(xi) = <xi, [d f, d g]>.
  Variables are the basis vectors of g viewed as linear functions, so
  {x_i, x_j} is the structure-constant combination of the x_k.
* On k[m]^H, m = h^perp, the bracket of two invariants at alpha is
  <alpha, [z_1, z_2]> where z_i in g represent the differentials
  d_alpha f_i in (g/h)^*.  The value does not depend on the
  representatives; coiso_bracket_at checks this with a second lift.

For a double pair (G x H)/diag(H) the coisotropy module is g itself and the
bracket on k[g*]^H is the restriction of Lie-Poisson, so both are covered.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from . import linalg
from .liealg import EmbeddedSubalgebra, LieAlgebraData, combine, random_rational
from .poly import PolyFn, det3, matrix_trace_power

SYMBOLIC_MAX_DEGREE = 4


class NonInvariantInput(ValueError):
    pass


class LiftDependence(ArithmeticError):
    pass


# Lie-Poisson on S(g)


def lie_poisson(alg: LieAlgebraData, f: PolyFn, g: PolyFn) -> PolyFn:
    """Exact symbolic bracket via structure constants."""
    n = alg.dimension
    df = [f.partial(i) for i in range(n)]
    dg = [g.partial(j) for j in range(n)]
    out = PolyFn(n)
    for (i, j), terms in alg.structure.items():
        if df[i].is_zero() or dg[j].is_zero():
            continue
        lin = PolyFn.linear([terms.get(k, 0) for k in range(n)])
        out = out + df[i] * dg[j] * lin
    return out


def lie_poisson_at(alg: LieAlgebraData, f: PolyFn, g: PolyFn, point: Sequence) -> Fraction:
    """Pointwise bracket <xi, [d_xi f, d_xi g]>."""
    br = alg.bracket(f.gradient_at(point), g.gradient_at(point))
    return sum((Fraction(p) * b for p, b in zip(point, br) if b), Fraction(0))


def lie_poisson_value(alg: LieAlgebraData, f: PolyFn, g: PolyFn, point: Sequence) -> Fraction:
    """Symbolic when both degrees are small, pointwise otherwise."""
    if max(f.degree, g.degree) <= SYMBOLIC_MAX_DEGREE:
        return lie_poisson(alg, f, g).evaluate(point)
    return lie_poisson_at(alg, f, g, point)


def linear_function(alg: LieAlgebraData, x: Sequence) -> PolyFn:
    if len(x) != alg.dimension:
        raise ValueError("vector has the wrong length")
    return PolyFn.linear(list(x))


def casimir(alg: LieAlgebraData, k: int) -> PolyFn:
    """xi -> tr(rho(x)^k) where x in g corresponds to xi under the invariant form."""
    n = alg.dimension
    inv = alg.form_inverse
    xs = [PolyFn.linear(inv[i]) for i in range(n)]  # coefficient of b_i in x
    size = len(alg.matrices[0])
    mat = [[PolyFn(n) for _ in range(size)] for _ in range(size)]
    for i, m in enumerate(alg.matrices):
        for a in range(size):
            for b in range(size):
                if m[a][b]:
                    mat[a][b] = mat[a][b] + xs[i] * m[a][b]
    return matrix_trace_power(mat, k)


def ad_vector_fields(alg: LieAlgebraData, h_basis) -> list[list[list[Fraction]]]:
    """For each h: matrix A with (A p)_j the derivative of x_j along h at p, i.e. {x_h, x_j}."""
    out = []
    for h in h_basis:
        out.append([alg.bracket(h, alg.basis_vector(j)) for j in range(alg.dimension)])
    return out


# the coisotropy bracket on k[m]^H


def m_coordinates(sub: EmbeddedSubalgebra, x) -> list[Fraction]:
    c = linalg.coordinates(sub.m_basis, list(x))
    if c is None:
        raise ValueError("vector is not in m")
    return c


def m_vector_fields(sub: EmbeddedSubalgebra) -> list[list[list[Fraction]]]:
    """For each h: matrix A with A y = m-coordinates of [h, x(y)]."""
    alg = sub.ambient
    out = []
    for h in sub.h_basis:
        cols = [m_coordinates(sub, alg.bracket(h, mk)) for mk in sub.m_basis]
        out.append([list(r) for r in zip(*cols)])
    return out


def derivative_along(f: PolyFn, field_matrix, point: Sequence) -> Fraction:
    grad = f.gradient_at(point)
    v = linalg.matvec(field_matrix, list(point))
    return sum((a * b for a, b in zip(grad, v) if a and b), Fraction(0))


def _m_gram(sub: EmbeddedSubalgebra):
    alg = sub.ambient
    return [[alg.pair(a, b) for b in sub.m_basis] for a in sub.m_basis]


def lift_differential(sub: EmbeddedSubalgebra, grad: Sequence[Fraction]) -> list[Fraction]:
    """z in m with Psi(m_k, z) = grad_k, a representative of d f in (g/h)^* = g/h."""
    coeffs = linalg.solve(_m_gram(sub), list(grad))
    if coeffs is None:
        raise ArithmeticError("invariant form is degenerate on m")
    return combine(sub.m_basis, coeffs)


def coiso_bracket_at(
    sub: EmbeddedSubalgebra,
    f: PolyFn,
    g: PolyFn,
    y: Sequence,
    rng: random.Random | None = None,
    check_invariance: bool = True,
) -> Fraction:
    """{f, g}(alpha) for f, g in k[m]^H given in m-coordinates; alpha has m-coordinates y."""
    if f.nvars != sub.dim_m or g.nvars != sub.dim_m:
        raise ValueError("functions must be polynomials in the m-coordinates")
    y = [Fraction(c) for c in y]
    if check_invariance:
        for A in m_vector_fields(sub):
            for fn in (f, g):
                if derivative_along(fn, A, y):
                    raise NonInvariantInput(f"{sub.label}: input is not H-invariant at the given point")
    alg = sub.ambient
    x = combine(sub.m_basis, y)
    z1 = lift_differential(sub, f.gradient_at(y))
    z2 = lift_differential(sub, g.gradient_at(y))
    value = alg.pair(x, alg.bracket(z1, z2))
    if sub.h_basis:
        rng = rng or random.Random(0)
        w1 = [a + b for a, b in zip(z1, combine(sub.h_basis, [random_rational(rng) for _ in sub.h_basis]))]
        w2 = [a + b for a, b in zip(z2, combine(sub.h_basis, [random_rational(rng) for _ in sub.h_basis]))]
        other = alg.pair(x, alg.bracket(w1, w2))
        if other != value:
            raise LiftDependence(f"{sub.label}: bracket depends on the lift ({value} vs {other})")
    return value


def trace_invariant_on_m(sub: EmbeddedSubalgebra, k: int) -> PolyFn:
    """y -> tr(rho(x(y))^k), an H-invariant of m (as is any G-invariant restricted to m)."""
    alg = sub.ambient
    n = sub.dim_m
    size = len(alg.matrices[0])
    mats = [alg.matrix_of(mk) for mk in sub.m_basis]
    mat = [[PolyFn(n) for _ in range(size)] for _ in range(size)]
    for idx, m in enumerate(mats):
        var = PolyFn.variable(n, idx)
        for a in range(size):
            for b in range(size):
                if m[a][b]:
                    mat[a][b] = mat[a][b] + var * m[a][b]
    return matrix_trace_power(mat, k)


# invariant sets


@dataclass
class Relation:
    name: str
    poly: PolyFn  # polynomial in the generator values, zero on the variety


@dataclass
class RelationVerdict:
    name: str
    passed: bool
    points: int
    counterexample: list | None = None
    residual: Fraction | None = None


@dataclass
class InvariantSet:
    """Named polynomial functions with a bracket, invariance vector fields and relations.

    kind: "lie_poisson" (variables are coordinates on g*), "coisotropy"
    (m-coordinates) or "model" (no bracket, e.g. binary forms).
    """

    label: str
    kind: str
    nvars: int
    names: list[str]
    generators: list[PolyFn]
    relations: list[Relation] = field(default_factory=list)
    basic: list[str] = field(default_factory=list)
    vector_fields: list = field(default_factory=list)
    algebra: LieAlgebraData | None = None
    sub: EmbeddedSubalgebra | None = None
    expected_rank: int | None = None
    bound: int = 100
    notes: dict = field(default_factory=dict)
    auxiliary: list[str] = field(default_factory=list)  # named helpers, not H-invariant

    def __post_init__(self):
        if not self.basic:
            self.basic = list(self.names)

    def get(self, name: str) -> PolyFn:
        return self.generators[self.names.index(name)]

    def random_point(self, rng: random.Random) -> list[Fraction]:
        return [random_rational(rng, self.bound) for _ in range(self.nvars)]

    def values(self, point) -> list[Fraction]:
        return [g.evaluate(point) for g in self.generators]

    def bracket_at(self, f: PolyFn, g: PolyFn, point, rng: random.Random | None = None) -> Fraction:
        if self.kind == "lie_poisson":
            return lie_poisson_value(self.algebra, f, g, point)
        if self.kind == "coisotropy":
            return coiso_bracket_at(self.sub, f, g, point, rng, check_invariance=False)
        raise ValueError(f"{self.label}: no Poisson bracket on a '{self.kind}' set")

    def invariance_defects(self, point) -> list[tuple[str, int]]:
        """(generator, field index) pairs with a non-zero derivative at the point."""
        bad = []
        for name, g in zip(self.names, self.generators):
            if name in self.auxiliary:
                continue
            for idx, A in enumerate(self.vector_fields):
                if derivative_along(g, A, point):
                    bad.append((name, idx))
        return bad


def poisson_matrix_at(inv: InvariantSet, point, rng: random.Random | None = None, names=None) -> list[list[Fraction]]:
    names = list(names or inv.basic)
    gens = [inv.get(n) for n in names]
    k = len(gens)
    mat = [[Fraction(0)] * k for _ in range(k)]
    if inv.kind == "lie_poisson":
        grads = [g.gradient_at(point) for g in gens]
        pt = [Fraction(p) for p in point]
        alg = inv.algebra
        for i in range(k):
            for j in range(i + 1, k):
                br = alg.bracket(grads[i], grads[j])
                v = sum((p * b for p, b in zip(pt, br) if b), Fraction(0))
                mat[i][j], mat[j][i] = v, -v
        return mat
    for i in range(k):
        for j in range(i + 1, k):
            v = inv.bracket_at(gens[i], gens[j], point, rng)
            mat[i][j], mat[j][i] = v, -v
    return mat


def poisson_matrix_rank(inv: InvariantSet, point, rng: random.Random | None = None) -> int:
    if len(inv.basic) < 2:
        return 0
    return linalg.rank(poisson_matrix_at(inv, point, rng))


def generic_rank(inv: InvariantSet, rng: random.Random, stable: int = 5, max_samples: int = 50) -> tuple[int, list[int]]:
    """Sample until the maximal rank has been seen ``stable`` times in a row; return (max, all ranks)."""
    ranks: list[int] = []
    best, streak = -1, 0
    while len(ranks) < max_samples:
        r = poisson_matrix_rank(inv, inv.random_point(rng), rng)
        ranks.append(r)
        if r > best:
            best, streak = r, 1
        elif r == best:
            streak += 1
        if streak >= stable:
            break
    return best, ranks


def verify_relation(inv: InvariantSet, n_points: int, seed: int = 0, relations=None) -> list[RelationVerdict]:
    rng = random.Random(seed)
    rels = list(relations if relations is not None else inv.relations)
    verdicts = {r.name: RelationVerdict(r.name, True, 0) for r in rels}
    for _ in range(n_points):
        p = inv.random_point(rng)
        vals = inv.values(p)
        for r in rels:
            v = verdicts[r.name]
            if not v.passed:
                continue
            res = r.poly.evaluate(vals)
            v.points += 1
            if res:
                v.passed = False
                v.counterexample = [str(c) for c in p]
                v.residual = res
    return [verdicts[r.name] for r in rels]


def commuting_sublists(inv: InvariantSet, points, rng: random.Random | None = None) -> list[tuple[tuple[str, ...], int]]:
    """Pairwise-commuting sub-lists (at every sample) with their differential rank at points[0]."""
    names = inv.basic
    mats = [poisson_matrix_at(inv, p, rng) for p in points]
    commute = {
        (i, j): all(m[i][j] == 0 for m in mats) for i in range(len(names)) for j in range(len(names)) if i < j
    }
    grads = [inv.get(n).gradient_at(points[0]) for n in names]
    out = []
    for size in range(1, len(names) + 1):
        for combo in combinations(range(len(names)), size):
            if all(commute[i, j] for i, j in combinations(combo, 2)):
                rows = [grads[i] for i in combo if any(grads[i])]
                out.append((tuple(names[i] for i in combo), linalg.rank(rows) if rows else 0))
    return out


# builders


def relation_from(names: Sequence[str], fn: Callable[..., PolyFn], name: str) -> Relation:
    """Relation from a Python expression in the generator symbols."""
    k = len(names)
    syms = {n: PolyFn.variable(k, i) for i, n in enumerate(names)}
    return Relation(name, fn(**syms))


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    from math import isqrt

    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _scalar_candidates(limit: int = 12):
    seen = set()
    for h in range(1, limit + 1):
        for p in range(1, h + 1):
            for q in range(1, h + 1):
                if max(p, q) != h:
                    continue
                for sgn in (1, -1):
                    c = Fraction(sgn * p, q)
                    if c not in seen:
                        seen.add(c)
                        yield c


def calibrate(det_q: Fraction, limit: int = 12) -> tuple[Fraction, Fraction]:
    """Smallest-height lambda with lambda^3 det(Q) a rational square s^2 (s > 0).

    Then det(lambda Q(v_i, v_j)) = (s det[v_1, v_2, v_3])^2 identically.
    """
    for lam in _scalar_candidates(limit):
        s = _rational_sqrt(lam ** 3 * det_q)
        if s:
            return lam, s
    raise ArithmeticError(f"no calibration with height <= {limit}")


def _three_copy_set(label, kind, nvars, copies, Q, lam, s, **kw) -> InvariantSet:
    """F_ij = lam Q(v_i, v_j), F~ = s det[v_1, v_2, v_3] and the T1-invariant monomials."""
    F = {}
    for i in range(3):
        for j in range(i, 3):
            acc = PolyFn(nvars)
            for a in range(3):
                for b in range(3):
                    if Q[a][b]:
                        acc = acc + copies[i][a] * copies[j][b] * Q[a][b]
            F[i + 1, j + 1] = acc * lam
    Ft = det3(copies) * s
    gens = {
        "F11": F[1, 1], "F12": F[1, 2], "F13": F[1, 3], "F22": F[2, 2], "F23": F[2, 3], "F33": F[3, 3],
        "Ftilde": Ft,
        "x1": F[1, 1] * F[3, 3],
        "y1": F[1, 2] * F[2, 3],
        "z1": F[1, 1] * F[2, 3] ** 2,
        "z2": F[3, 3] * F[1, 2] ** 2,
    }
    names = list(gens)
    rels = [
        relation_from(
            names,
            lambda F11, F12, F13, F22, F23, F33, Ftilde, **_: F11 * F22 * F33
            + 2 * F12 * F13 * F23
            - F11 * F23 ** 2
            - F22 * F13 ** 2
            - F33 * F12 ** 2
            - Ftilde ** 2,
            "det_F_equals_Ftilde_squared",
        ),
        relation_from(names, lambda x1, y1, z1, z2, **_: x1 * y1 ** 2 - z1 * z2, "x1_y1^2_equals_z1_z2"),
        relation_from(
            names,
            lambda x1, y1, z1, z2, F13, F22, Ftilde, **_: x1 * F22 + 2 * y1 * F13 - F13 ** 2 * F22 - z1 - z2 - Ftilde ** 2,
            "det_F_in_torus_invariants",
        ),
    ]
    return InvariantSet(label, kind, nvars, names, [gens[n] for n in names], rels, notes={"lambda": lam, "s": s}, **kw)


def printed_sign_relation(inv: InvariantSet) -> Relation:
    """The all-plus sign pattern x1 F22 + 2 y1 F13 + F13^2 F22 + z1 + z2 = F~^2 (not an identity)."""
    return relation_from(
        inv.names,
        lambda x1, y1, z1, z2, F13, F22, Ftilde, **_: x1 * F22 + 2 * y1 * F13 + F13 ** 2 * F22 + z1 + z2 - Ftilde ** 2,
        "all_plus_signs",
    )


def perturbed(rel: Relation, factor=2) -> Relation:
    """Negative control: scale the coefficient of one monomial."""
    terms = dict(rel.poly.terms)
    mono = max(terms)
    terms[mono] = terms[mono] * factor
    return Relation(rel.name + "_perturbed", PolyFn(rel.poly.nvars, terms))


BINARY_QUADRATIC_PAIRING = [[0, 0, 2], [0, -1, 0], [2, 0, 0]]


def binary_quadratic_fields():
    """sl2 acting on three binary quadratics (a, b, c) <-> a x^2 + b x y + c y^2."""
    e = [[0, 1, 0], [0, 0, 2], [0, 0, 0]]
    f = [[0, 0, 0], [2, 0, 0], [0, 1, 0]]
    h = [[2, 0, 0], [0, 0, 0], [0, 0, -2]]
    out = []
    for m in (e, f, h):
        big = [[Fraction(0)] * 9 for _ in range(9)]
        for c in range(3):
            for i in range(3):
                for j in range(3):
                    big[3 * c + i][3 * c + j] = Fraction(m[i][j])
        out.append(big)
    return out


def binary_quadratic_set(lam: Fraction | None = None, s: Fraction | None = None) -> InvariantSet:
    """SL2 on three binary quadratics with pairing lam (2(a1 c2 + a2 c1) - b1 b2)."""
    Q = [[Fraction(x) for x in row] for row in BINARY_QUADRATIC_PAIRING]
    if lam is None or s is None:
        lam, s = calibrate(linalg.det(Q))
    copies = [[PolyFn.variable(9, 3 * c + a) for a in range(3)] for c in range(3)]
    return _three_copy_set("binary-quadratics", "model", 9, copies, Q, lam, s, vector_fields=binary_quadratic_fields())


def _module_matrix(alg, basis, x):
    """M with [x, u_a] = sum_b M[a][b] u_b."""
    return [linalg.coordinates(basis, alg.bracket(x, u)) for u in basis]


def invariant_form(alg: LieAlgebraData, basis, actors) -> list[list[Fraction]]:
    """The symmetric Q (unique up to scale) with sum Q_ab u_a u_b invariant in S(g).

    With [x, u_a] = sum_b M_ab u_b invariance reads M^T Q + Q M = 0.
    """
    k = len(basis)
    pairs = [(a, b) for a in range(k) for b in range(a, k)]
    slot = {}
    for idx, (a, b) in enumerate(pairs):
        slot[a, b] = slot[b, a] = idx
    rows = []
    for x in actors:
        M = _module_matrix(alg, basis, x)
        if any(r is None for r in M):
            raise ValueError("basis does not span a submodule")
        for c in range(k):
            for d in range(c, k):
                row = [Fraction(0)] * len(pairs)
                for a in range(k):
                    row[slot[a, d]] += M[a][c]
                    row[slot[c, a]] += M[a][d]
                rows.append(row)
    sol = linalg.nullspace(rows, len(pairs))
    if len(sol) != 1:
        raise ArithmeticError(f"invariant form space has dimension {len(sol)}, expected 1")
    Q = [[sol[0][slot[a, b]] for b in range(k)] for a in range(k)]
    scale = next(x for row in Q for x in row if x)
    return [[x / scale for x in row] for row in Q]


def sl2_string(alg: LieAlgebraData, top, f):
    """(u2, u0, u-2) with u0 = [f, u2], u-2 = [f, u0]."""
    u0 = alg.bracket(f, top)
    return [list(top), u0, alg.bracket(f, u0)]


SP4_SHORT_LEVI_TOPS = ("f(0,1)", "e(1,0)", "e(2,1)")


def sp4_short_levi_set(sub: EmbeddedSubalgebra, lam=None, s=None) -> InvariantSet:
    """Invariants of SL2.T1 (short-root Levi) on sp4^* = 3 varpi^2 + 1.

    The copies v_1, v_2, v_3 have torus charge -2, 0, +2 and top vectors
    f(0,1), e(1,0), e(2,1).
    """
    alg = sub.ambient
    e1, f1, hh = alg.vector({"e(1,0)": 1}), alg.vector({"f(1,0)": 1}), alg.vector({"h1": 1})
    strings = [sl2_string(alg, alg.vector({t: 1}), f1) for t in SP4_SHORT_LEVI_TOPS]
    Q = invariant_form(alg, strings[0], (e1, f1, hh))
    for st in strings[1:]:
        if invariant_form(alg, st, (e1, f1, hh)) != Q:
            raise ArithmeticError("the three copies are not normalized compatibly")
    if lam is None or s is None:
        lam, s = calibrate(linalg.det(Q))
    n = alg.dimension
    copies = [[PolyFn.linear(u) for u in st] for st in strings]
    inv = _three_copy_set(
        "table1-7s",
        "lie_poisson",
        n,
        copies,
        Q,
        lam,
        s,
        basic=["F13", "F22", "Ftilde", "x1", "y1", "z1"],
        vector_fields=ad_vector_fields(alg, sub.h_basis),
        algebra=alg,
        sub=sub,
        expected_rank=2,
        auxiliary=["F11", "F12", "F23", "F33"],
    )
    inv.notes["pairing"] = Q
    return inv


def symmetric_trace_set(sub: EmbeddedSubalgebra, degrees=(2, 3), label=None) -> InvariantSet:
    gens = [trace_invariant_on_m(sub, k) for k in degrees]
    return InvariantSet(
        label or sub.label,
        "coisotropy",
        sub.dim_m,
        [f"p{k}" for k in degrees],
        gens,
        vector_fields=m_vector_fields(sub),
        sub=sub,
        algebra=sub.ambient,
        expected_rank=0,
    )


def torus_monomial_set(sub: EmbeddedSubalgebra, label=None) -> InvariantSet:
    """Zero-weight monomials x_a x_-a and the two cubic cycles for a Cartan subalgebra of sl3."""
    alg = sub.ambient
    n = sub.dim_m
    coord = {}
    for k, mk in enumerate(sub.m_basis):
        idx = next(i for i, c in enumerate(mk) if c)
        coord[alg.labels[idx]] = PolyFn.variable(n, k)
    pos = [l[1:] for l in alg.labels if l.startswith("e(")]
    gens, names = [], []
    for r in pos:
        names.append(f"q{r}")
        gens.append(coord["e" + r] * coord["f" + r])
    names += ["cyc+", "cyc-"]
    gens.append(coord["e(1,0)"] * coord["e(0,1)"] * coord["f(1,1)"])
    gens.append(coord["f(1,0)"] * coord["f(0,1)"] * coord["e(1,1)"])
    return InvariantSet(
        label or sub.label,
        "coisotropy",
        n,
        names,
        gens,
        vector_fields=m_vector_fields(sub),
        sub=sub,
        algebra=alg,
        expected_rank=2,
    )
