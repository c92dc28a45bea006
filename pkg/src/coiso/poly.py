"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class PolyFn:
    """Polynomial in ``nvars`` variables, stored as {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong length for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[tuple(mono)] = c
        self.terms = clean

    # construction

    @classmethod
    def constant(cls, nvars: int, c) -> "PolyFn":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "PolyFn":
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "PolyFn":
        n = len(coeffs)
        out = {}
        for i, c in enumerate(coeffs):
            if c:
                mono = [0] * n
                mono[i] = 1
                out[tuple(mono)] = Fraction(c)
        return cls(n, out)

    @classmethod
    def from_list(cls, nvars: int, items: Iterable) -> "PolyFn":
        """From [(exponents, coefficient), ...]; coefficients may be strings like "3/2"."""
        out: dict = {}
        for mono, c in items:
            mono = tuple(int(e) for e in mono)
            out[mono] = out.get(mono, Fraction(0)) + Fraction(c)
        return cls(nvars, out)

    def to_list(self) -> list:
        return [[list(m), str(c)] for m, c in sorted(self.terms.items(), reverse=True)]

    # arithmetic

    def _coerce(self, other) -> "PolyFn":
        if isinstance(other, PolyFn):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        return PolyFn.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return PolyFn(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return PolyFn(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PolyFn):
            c = Fraction(other)
            return PolyFn(self.nvars, {m: c * x for m, x in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return PolyFn(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = PolyFn.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, PolyFn):
            return self.nvars == other.nvars and self.terms == other.terms
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"PolyFn({self.nvars}, {len(self.terms)} terms, degree {self.degree})"

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def __call__(self, point: Sequence) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        powers: dict = {}
        total = Fraction(0)
        for mono, c in self.terms.items():
            val = c
            for i, e in enumerate(mono):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = Fraction(point[i]) ** e
                    val *= powers[key]
            total += val
        return total

    def partial(self, i: int) -> "PolyFn":
        out = {}
        for mono, c in self.terms.items():
            e = mono[i]
            if e:
                m = list(mono)
                m[i] = e - 1
                out[tuple(m)] = c * e
        return PolyFn(self.nvars, out)

    def gradient(self) -> list["PolyFn"]:
        return [self.partial(i) for i in range(self.nvars)]

    def gradient_at(self, point: Sequence) -> list[Fraction]:
        grad = [Fraction(0)] * self.nvars
        for mono, c in self.terms.items():
            for i, e in enumerate(mono):
                if not e:
                    continue
                val = c * e
                for j, f in enumerate(mono):
                    k = f - (j == i)
                    if k:
                        val *= Fraction(point[j]) ** k
                grad[i] += val
        return grad

    def substitute(self, images: Sequence["PolyFn"]) -> "PolyFn":
        """Compose: replace variable i by ``images[i]`` (all over a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars
        out = PolyFn(nv)
        cache: dict = {}
        for mono, c in self.terms.items():
            term = PolyFn.constant(nv, c)
            for i, e in enumerate(mono):
                if e:
                    if (i, e) not in cache:
                        cache[i, e] = images[i] ** e
                    term = term * cache[i, e]
            out = out + term
        return out


def matrix_trace_power(mat: list[list[PolyFn]], k: int) -> PolyFn:
    """tr(M^k) for a square matrix of polynomials."""
    n = len(mat)
    nv = mat[0][0].nvars
    cur = mat
    for _ in range(k - 1):
        cur = [
            [sum((cur[i][l] * mat[l][j] for l in range(n)), PolyFn(nv)) for j in range(n)]
            for i in range(n)
        ]
    return sum((cur[i][i] for i in range(n)), PolyFn(nv))


def det3(cols: Sequence[Sequence]) -> object:
    """Determinant of the 3x3 matrix with the given columns (any ring elements)."""
    (a, b, c), (d, e, f), (g, h, i) = cols
    return a * (e * i - f * h) - d * (b * i - c * h) + g * (b * f - c * e)


def parse_polynomial(text: str, names: Sequence[str]) -> PolyFn:
    """Parse e.g. ``"x1*y1**2 - z1*z2"`` over the given variable names.

    Accepts + - * ** (non-negative integer exponents), / by a constant,
    integer literals and parentheses.
    """
    import ast

    k = len(names)
    index = {n: i for i, n in enumerate(names)}

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return PolyFn.constant(k, node.value)
        if isinstance(node, ast.Name):
            if node.id not in index:
                raise ValueError(f"unknown symbol {node.id!r}")
            return PolyFn.variable(k, index[node.id])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a = walk(node.left)
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponents must be integer literals")
                return a ** node.right.value
            b = walk(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if b.degree > 0 or b.is_zero():
                    raise ValueError("can only divide by a non-zero constant")
                return a * (1 / b.terms[(0,) * k])
        raise ValueError(f"unsupported syntax in polynomial: {ast.dump(node)}")

    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}: {exc.msg}") from None
    return walk(tree)
