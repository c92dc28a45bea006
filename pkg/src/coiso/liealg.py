"""Chevalley bases, invariant forms and embedded subalgebras.

Each algebra is built from matrices of its Chevalley generators in a
defining representation (A-D classical matrices, G2 inside so7).  Root
vectors of higher roots are produced by

    e_delta = [e_i, e_gamma] / (p + 1),   f_delta = [f_gamma, f_i] / (p + 1)

where ``delta = alpha_i + gamma`` with ``i`` minimal and ``p`` the length of
the alpha_i-string below gamma.  With this choice f_delta = -omega(e_delta)
for the Chevalley involution omega, so the result is a Chevalley basis
with positive signs on the pairs (alpha_i, gamma) and all structure
constants integral.

Basis order: h_1..h_n, then e_alpha, then f_alpha (positive roots in
graded lexicographic order).  The invariant form is the Killing form
divided by twice the dual Coxeter number, so long roots have squared
length 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from . import linalg
from .rootsys import RootSystem, SimpleType, build_root_system, dual_coxeter_number

MAX_RANK = 4


class LieAlgebraError(ValueError):
    pass


def _zero(n):
    return [[Fraction(0)] * n for _ in range(n)]


def _unit(n, i, j, c=1):
    m = _zero(n)
    m[i][j] = Fraction(c)
    return m


def _add(*ms):
    n = len(ms[0])
    return [[sum((m[i][j] for m in ms), Fraction(0)) for j in range(n)] for i in range(n)]


def _scale(m, c):
    return [[x * c for x in row] for row in m]


def _mul(a, b):
    n = len(a)
    out = _zero(n)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(n):
                    if bk[j]:
                        oi[j] += x * bk[j]
    return out


def _comm(a, b):
    ab, ba = _mul(a, b), _mul(b, a)
    return [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]


def _transpose(m):
    return [list(r) for r in zip(*m)]


def _flat(m):
    return [x for row in m for x in row]


def _generators(t: SimpleType):
    """Matrices (e_i, f_i) of the Chevalley generators in a defining representation."""
    n = t.rank
    fam = t.family
    if fam == "A":
        size = n + 1
        es = [_unit(size, i, i + 1) for i in range(n)]
        return es, [_transpose(e) for e in es]
    if fam == "C":
        size = 2 * n
        es = [_add(_unit(size, i, i + 1), _unit(size, n + i + 1, n + i, -1)) for i in range(n - 1)]
        es.append(_unit(size, n - 1, 2 * n - 1))
        return es, [_transpose(e) for e in es]
    if fam == "B":
        size = 2 * n + 1

        def mir(j):
            return 2 * n - j

        es = [_add(_unit(size, i, i + 1), _unit(size, mir(i + 1), mir(i), -1)) for i in range(n - 1)]
        es.append(_add(_unit(size, n - 1, n), _unit(size, n, n + 1, -1)))
        fs = [_transpose(e) for e in es]
        fs[-1] = _scale(fs[-1], 2)
        return es, fs
    if fam == "D":
        size = 2 * n

        def mir(j):
            return 2 * n - 1 - j

        es = [_add(_unit(size, i, i + 1), _unit(size, mir(i + 1), mir(i), -1)) for i in range(n - 1)]
        es.append(_add(_unit(size, n - 2, mir(n - 1)), _unit(size, n - 1, mir(n - 2), -1)))
        return es, [_transpose(e) for e in es]
    if fam == "G":
        # G2 inside so7: e_short = e_1 + e_3 and e_long = e_2 of B3
        (b1, b2, b3), (c1, c2, c3) = _generators(SimpleType("B", 3))
        return [_add(b1, b3), b2], [_add(c1, c3), c2]
    raise LieAlgebraError(f"no matrix realization for type {t}")


@dataclass
class LieAlgebraData:
    root_system: RootSystem
    labels: list[str]
    weights: list[tuple[int, ...]]  # root of each basis vector (zero for Cartan)
    structure: dict[tuple[int, int], dict[int, Fraction]]
    form: list[list[Fraction]]
    matrices: list = field(repr=False, default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def bracket(self, x, y) -> list[Fraction]:
        out = [Fraction(0)] * self.dimension
        for (i, j), terms in self.structure.items():
            a, b = x[i], y[j]
            if a and b:
                ab = a * b
                for k, c in terms.items():
                    out[k] += ab * c
        return out

    def basis_vector(self, i: int) -> list[Fraction]:
        v = [Fraction(0)] * self.dimension
        v[i] = Fraction(1)
        return v

    def ad(self, x) -> list[list[Fraction]]:
        """Matrix of ad x (columns are images of basis vectors)."""
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dimension)]
        return _transpose(cols)

    def pair(self, x, y) -> Fraction:
        f = self.form
        return sum((x[i] * f[i][j] * y[j] for i in range(len(x)) if x[i] for j in range(len(y)) if y[j]), Fraction(0))

    def matrix_of(self, x):
        """Image of x in the defining representation."""
        n = len(self.matrices[0])
        out = _zero(n)
        for c, m in zip(x, self.matrices):
            if c:
                for i in range(n):
                    for j in range(n):
                        if m[i][j]:
                            out[i][j] += c * m[i][j]
        return out

    def vector(self, terms: dict[str, Fraction]) -> list[Fraction]:
        v = [Fraction(0)] * self.dimension
        for label, c in terms.items():
            v[self.index(label)] += Fraction(c)
        return v

    # exhaustive self-checks

    def jacobi_failures(self) -> list[tuple[int, int, int]]:
        n = self.dimension
        basis = [self.basis_vector(i) for i in range(n)]
        brackets = {(i, j): self.bracket(basis[i], basis[j]) for i in range(n) for j in range(n)}
        bad = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    t1 = self.bracket(basis[i], brackets[j, k])
                    t2 = self.bracket(basis[j], brackets[k, i])
                    t3 = self.bracket(basis[k], brackets[i, j])
                    if any(a + b + c for a, b, c in zip(t1, t2, t3)):
                        bad.append((i, j, k))
        return bad

    def antisymmetry_failures(self) -> list[tuple[int, int]]:
        bad = []
        for i in range(self.dimension):
            for j in range(self.dimension):
                a = self.structure.get((i, j), {})
                b = self.structure.get((j, i), {})
                keys = set(a) | set(b)
                if any(a.get(k, 0) + b.get(k, 0) for k in keys):
                    bad.append((i, j))
        return bad

    def invariance_failures(self) -> list[tuple[int, int, int]]:
        n = self.dimension
        basis = [self.basis_vector(i) for i in range(n)]
        bad = []
        for i in range(n):
            for j in range(n):
                xy = self.bracket(basis[i], basis[j])
                for k in range(n):
                    xz = self.bracket(basis[i], basis[k])
                    if self.pair(xy, basis[k]) + self.pair(basis[j], xz) != 0:
                        bad.append((i, j, k))
        return bad

    def is_nondegenerate(self) -> bool:
        return linalg.rank(self.form) == self.dimension

    @cached_property
    def form_inverse(self):
        return linalg.inverse(self.form)


def _root_label(prefix, root):
    return f"{prefix}(" + ",".join(str(c) for c in root) + ")"


@lru_cache(maxsize=None)
def chevalley(t: SimpleType | str, max_rank: int = MAX_RANK) -> LieAlgebraData:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    if t.rank > max_rank:
        raise LieAlgebraError(f"{t}: rank above the configured maximum {max_rank}")
    rs = build_root_system(t)
    es, fs = _generators(t)
    n = rs.rank
    hs = [_comm(e, f) for e, f in zip(es, fs)]
    _check_serre(rs, es, fs, hs)

    pos = rs.positive_roots
    roots = set(pos) | {tuple(-c for c in r) for r in pos}
    e_of, f_of = {}, {}
    for i in range(n):
        e_of[pos_simple(n, i)] = es[i]
        f_of[pos_simple(n, i)] = fs[i]
    for delta in pos:
        if sum(delta) == 1:
            continue
        i = next(k for k in range(n) if delta[k] > 0 and _sub(delta, k) in e_of)
        gamma = _sub(delta, i)
        p = 0
        while True:
            lower = tuple(c - (p + 1) * (j == i) for j, c in enumerate(gamma))
            if lower in roots:
                p += 1
            else:
                break
        e_of[delta] = _scale(_comm(es[i], e_of[gamma]), Fraction(1, p + 1))
        f_of[delta] = _scale(_comm(f_of[gamma], fs[i]), Fraction(1, p + 1))

    labels = [f"h{i + 1}" for i in range(n)]
    weights = [(0,) * n] * n
    mats = list(hs)
    for r in pos:
        labels.append(_root_label("e", r))
        weights.append(r)
        mats.append(e_of[r])
    for r in pos:
        labels.append(_root_label("f", r))
        weights.append(tuple(-c for c in r))
        mats.append(f_of[r])

    dim = len(mats)
    if dim != rs.dim:
        raise LieAlgebraError(f"{t}: built {dim} basis vectors, expected {rs.dim}")
    flat = [_flat(m) for m in mats]
    _, pivots = linalg.row_echelon(flat)
    if len(pivots) != dim:
        raise LieAlgebraError(f"{t}: basis matrices are linearly dependent")
    sub = [[row[p] for p in pivots] for row in flat]
    sub_inv = linalg.inverse(sub)

    def coords(m):
        fm = _flat(m)
        v = [fm[p] for p in pivots]
        return [sum((v[k] * sub_inv[k][j] for k in range(dim) if v[k]), Fraction(0)) for j in range(dim)]

    structure = {}
    for a in range(dim):
        for b in range(dim):
            c = coords(_comm(mats[a], mats[b]))
            terms = {k: x for k, x in enumerate(c) if x}
            for k, x in terms.items():
                if x.denominator != 1:
                    raise LieAlgebraError(f"{t}: non-integral structure constant [{labels[a]},{labels[b]}]")
            if terms:
                structure[a, b] = terms

    alg = LieAlgebraData(rs, labels, weights, structure, [], mats)
    alg.form = _normalized_killing(alg, dual_coxeter_number(rs))
    _verify_chevalley(alg)
    return alg


def pos_simple(n, i):
    return tuple(int(j == i) for j in range(n))


def _sub(root, i):
    return tuple(c - (j == i) for j, c in enumerate(root))


def _check_serre(rs, es, fs, hs):
    n = rs.rank
    for i in range(n):
        for j in range(n):
            ef = _comm(es[i], fs[j])
            if i != j and any(_flat(ef)):
                raise LieAlgebraError(f"[e_{i+1}, f_{j+1}] != 0")
            he = _comm(hs[i], es[j])
            if he != _scale(es[j], rs.cartan[j][i]):
                raise LieAlgebraError(f"[h_{i+1}, e_{j+1}] != <alpha_{j+1}, alpha_{i+1}^vee> e_{j+1}")
            hf = _comm(hs[i], fs[j])
            if hf != _scale(fs[j], -rs.cartan[j][i]):
                raise LieAlgebraError(f"[h_{i+1}, f_{j+1}] has the wrong eigenvalue")


def _normalized_killing(alg: LieAlgebraData, hvee: int):
    n = alg.dimension
    ads = [alg.ad(alg.basis_vector(i)) for i in range(n)]
    form = _zero(n)
    for i in range(n):
        for j in range(i, n):
            tr = sum((ads[i][a][b] * ads[j][b][a] for a in range(n) for b in range(n) if ads[i][a][b]), Fraction(0))
            form[i][j] = form[j][i] = tr / (2 * hvee)
    return form


def _verify_chevalley(alg: LieAlgebraData):
    rs = alg.root_system
    n = rs.rank
    npos = rs.num_positive_roots
    for k, r in enumerate(rs.positive_roots):
        e, f = n + k, n + npos + k
        hb = alg.bracket(alg.basis_vector(e), alg.basis_vector(f))
        norm = rs.root_norm(r)
        coroot = [r[i] * rs.root_lengths[i] / norm for i in range(n)] + [Fraction(0)] * (2 * npos)
        if hb != coroot:
            raise LieAlgebraError(f"[e_a, f_a] != h_a for a = {r}")
    if alg.antisymmetry_failures():
        raise LieAlgebraError("structure constants are not antisymmetric")


def random_rational(rng: random.Random, bound: int = 100) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


@dataclass
class EmbeddedSubalgebra:
    ambient: LieAlgebraData
    h_basis: list[list[Fraction]]
    m_basis: list[list[Fraction]]
    label: str = ""

    @property
    def dim_h(self) -> int:
        return len(self.h_basis)

    @property
    def dim_m(self) -> int:
        return len(self.m_basis)

    def in_m(self, x) -> bool:
        return linalg.rank(self.m_basis + [list(x)]) == self.dim_m if any(x) else True

    def random_point(self, rng: random.Random, bound: int = 100) -> list[Fraction]:
        coeffs = [random_rational(rng, bound) for _ in self.m_basis]
        return combine(self.m_basis, coeffs)

    def dual_point(self, x) -> list[Fraction]:
        """The functional Psi(x, .) in dual-basis coordinates."""
        f = self.ambient.form
        return [sum((f[i][j] * x[j] for j in range(len(x)) if x[j]), Fraction(0)) for i in range(len(x))]

    @cached_property
    def m_dual_basis(self) -> list[list[Fraction]]:
        """Basis of h^perp in g^*, the images of m_basis under Psi."""
        return [self.dual_point(x) for x in self.m_basis]


def combine(basis, coeffs):
    n = len(basis[0])
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, basis):
        if c:
            for i in range(n):
                if v[i]:
                    out[i] += c * v[i]
    return out


def realize_in(
    alg: LieAlgebraData,
    h_vectors,
    label: str = "",
    expected_dim_m: int | None = None,
    form_scale: Fraction | int = 1,
) -> EmbeddedSubalgebra:
    """Check that ``h_vectors`` span a reductive subalgebra and split off m = h^perp.

    ``form_scale`` rescales the invariant form; m and every orbit dimension
    are independent of it.
    """
    if form_scale == 0:
        raise LieAlgebraError("the invariant form must be non-degenerate")
    form = [[x * Fraction(form_scale) for x in row] for row in alg.form]
    h_basis = linalg.span_basis([list(map(Fraction, v)) for v in h_vectors]) if h_vectors else []
    for a in h_basis:
        for b in h_basis:
            if linalg.rank(h_basis + [alg.bracket(a, b)]) != len(h_basis):
                raise LieAlgebraError(f"{label}: not a subalgebra")
    if h_basis:
        n = alg.dimension
        pairing = [[sum((form[i][j] * v[j] for j in range(n) if v[j]), Fraction(0)) for i in range(n)] for v in h_basis]
        m_basis = linalg.nullspace(pairing)
    else:
        m_basis = [alg.basis_vector(i) for i in range(alg.dimension)]
    if h_basis and linalg.rank(h_basis + m_basis) != alg.dimension:
        raise LieAlgebraError(f"{label}: the form is degenerate on h")
    for a in h_basis:
        for x in m_basis:
            if linalg.rank(m_basis + [alg.bracket(a, x)]) != len(m_basis):
                raise LieAlgebraError(f"{label}: [h, m] is not contained in m")
    if expected_dim_m is not None and len(m_basis) != expected_dim_m:
        raise LieAlgebraError(
            f"{label}: embedding/realization mismatch (dim m = {len(m_basis)}, branching says {expected_dim_m})"
        )
    return EmbeddedSubalgebra(alg, h_basis, m_basis, label)


def lie_closure(alg: LieAlgebraData, gens, limit: int | None = None) -> list[list[Fraction]]:
    """Basis of the subalgebra generated by ``gens``."""
    basis = linalg.span_basis([list(map(Fraction, v)) for v in gens])
    frontier = list(basis)
    limit = limit or alg.dimension
    while frontier:
        new = []
        for a in frontier:
            for b in list(basis):
                c = alg.bracket(a, b)
                if any(c) and linalg.rank(basis + [c]) > len(basis):
                    basis.append(c)
                    new.append(c)
        if len(basis) > limit:
            raise LieAlgebraError("closure exceeds the size limit")
        frontier = new
    return basis


def realize(e, h_generators, form_scale: Fraction | int = 1, closure: bool = False) -> EmbeddedSubalgebra:
    """Realize the pair ``e`` (an EmbeddingSpec with simple G) inside a Chevalley basis.

    ``h_generators`` are rational vectors, or label maps such as
    ``{"e(1,0)": 1, "e(0,1)": 1}``, over the ambient basis.  With ``closure``
    they only need to generate h.  dim m is checked against the isotropy
    module computed by branching.
    """
    from .repth import isotropy_module

    if not e.big.is_simple:
        raise LieAlgebraError(f"{e.label}: realizations need a simple ambient group")
    alg = chevalley(e.big.simple_factors[0])
    vecs = [alg.vector(v) if isinstance(v, dict) else v for v in h_generators]
    if closure:
        vecs = lie_closure(alg, vecs)
    return realize_in(alg, vecs, e.label, isotropy_module(e).dim, form_scale)


@dataclass(frozen=True)
class OrbitDims:
    dim_Gx: int
    dim_Hx: int
    dim_Gx_cap_m: int
    dim_Hx_in_m: int

    def __iter__(self):
        return iter((self.dim_Gx, self.dim_Hx, self.dim_Gx_cap_m, self.dim_Hx_in_m))


def orbit_dims_at(sub: EmbeddedSubalgebra, x) -> OrbitDims:
    x = [Fraction(c) for c in x]
    if not sub.in_m(x):
        raise LieAlgebraError("point is not in m")
    alg = sub.ambient
    g_x = [alg.bracket(alg.basis_vector(i), x) for i in range(alg.dimension)]
    h_x = [alg.bracket(h, x) for h in sub.h_basis]
    g_x = [v for v in g_x if any(v)]
    h_x = [v for v in h_x if any(v)]
    dim_gx = linalg.rank(g_x) if g_x else 0
    dim_hx = linalg.rank(h_x) if h_x else 0
    cap = linalg.intersection_dim(g_x, sub.m_basis) if g_x else 0
    h_cap = linalg.intersection_dim(h_x, sub.m_basis) if h_x else 0
    return OrbitDims(dim_gx, dim_hx, cap, h_cap)


def chevalley_involution_fixed(alg: LieAlgebraData) -> list[list[Fraction]]:
    """Basis e_a - f_a of the fixed points of the Chevalley involution."""
    rs = alg.root_system
    n, npos = rs.rank, rs.num_positive_roots
    out = []
    for k in range(npos):
        v = [Fraction(0)] * alg.dimension
        v[n + k] = Fraction(1)
        v[n + npos + k] = Fraction(-1)
        out.append(v)
    return out
