"""Exact linear algebra over the Gaussian rationals Q(i).

Everything here is exact so that subspace equality is decidable. The inner
product is conjugate-linear in its first argument.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "ComplexRational",
    "Vector",
    "Matrix",
    "inner_product",
    "rref",
    "rank",
    "kernel_basis",
    "orth_complement_basis",
    "row_space_basis",
    "column_space_basis",
    "parse_scalar",
    "parse_vector",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot make an exact rational from {x!r}")


class ComplexRational:
    """An element re + im*i of Q(i); both parts are reduced Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "ComplexRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @staticmethod
    def coerce(x) -> "ComplexRational":
        if isinstance(x, ComplexRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return ComplexRational(x)

    def __add__(self, other):
        if not isinstance(other, ComplexRational):
            if isinstance(other, (int, Fraction)):
                return ComplexRational._raw(self.re + other, self.im)
            return NotImplemented
        return ComplexRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ComplexRational):
            if isinstance(other, (int, Fraction)):
                return ComplexRational._raw(self.re - other, self.im)
            return NotImplemented
        return ComplexRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return ComplexRational.coerce(other) - self

    def __neg__(self):
        return ComplexRational._raw(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, ComplexRational):
            if isinstance(other, (int, Fraction)):
                return ComplexRational._raw(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return ComplexRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ComplexRational.coerce(other)
        c, d = other.re, other.im
        n = c * c + d * d
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return ComplexRational._raw((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        return ComplexRational.coerce(other) / self

    def conjugate(self) -> "ComplexRational":
        return ComplexRational._raw(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexRational({self})"

    def __str__(self):
        re_s = str(self.re)
        if not self.im:
            return re_s
        im_abs = abs(self.im)
        im_s = "" if im_abs == 1 else str(im_abs)
        if not self.re:
            return ("-" if self.im < 0 else "") + im_s + "i"
        return re_s + ("-" if self.im < 0 else "+") + im_s + "i"


ZERO = ComplexRational(0)
ONE = ComplexRational(1)
I = ComplexRational(0, 1)


class Vector:
    """An immutable vector in Q(i)^d."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable):
        comps = tuple(ComplexRational.coerce(c) for c in components)
        if not comps:
            raise ValueError("a vector needs dim >= 1")
        self.components = comps

    @property
    def dim(self) -> int:
        return len(self.components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, k):
        return self.components[k]

    def __eq__(self, other):
        if isinstance(other, Vector):
            return self.components == other.components
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    def __add__(self, other: "Vector") -> "Vector":
        _check_dims(self, other)
        return Vector(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other: "Vector") -> "Vector":
        _check_dims(self, other)
        return Vector(a - b for a, b in zip(self.components, other.components))

    def scale(self, c) -> "Vector":
        c = ComplexRational.coerce(c)
        return Vector(c * x for x in self.components)

    def conjugate(self) -> "Vector":
        return Vector(x.conjugate() for x in self.components)

    def is_zero(self) -> bool:
        return not any(self.components)

    def __repr__(self):
        return f"Vector({self})"

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    @classmethod
    def basis(cls, d: int, k: int) -> "Vector":
        """Standard basis vector e_{k+1} of Q(i)^d (k is zero-based)."""
        return cls(1 if j == k else 0 for j in range(d))


def _check_dims(x, y):
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} != {len(y)}")


class Matrix:
    """Immutable row-major matrix over Q(i)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        grid = tuple(tuple(ComplexRational.coerce(x) for x in row) for row in entries)
        if cols is None:
            if not grid:
                raise ValueError("empty matrix needs an explicit column count")
            cols = len(grid[0])
        for row in grid:
            if len(row) != cols:
                raise ValueError("ragged matrix")
        self.rows = len(grid)
        self.cols = cols
        self.entries = grid

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_rows(cls, vectors: Sequence[Vector], cols: int) -> "Matrix":
        return cls([v.components for v in vectors], cols=cols)

    def row(self, i: int) -> Vector:
        return Vector(self.entries[i])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.cols == other.cols and self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def scale(self, c) -> "Matrix":
        c = ComplexRational.coerce(c)
        return Matrix([[c * x for x in r] for r in self.entries], cols=self.cols)

    def __matmul__(self, other):
        if isinstance(other, Vector):
            if self.cols != other.dim:
                raise ValueError("shape mismatch")
            return Vector(_dot(r, other.components) for r in self.entries)
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        tcols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return Matrix(
            [[_dot(r, c) for c in tcols] for r in self.entries], cols=other.cols
        )

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self.entries)], cols=self.rows) \
            if self.rows else Matrix([[]] * self.cols, cols=0)

    def conjugate(self) -> "Matrix":
        return Matrix([[x.conjugate() for x in r] for r in self.entries], cols=self.cols)

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.entries) + "])"


def _dot(a, b):
    s = ZERO
    for x, y in zip(a, b):
        if x and y:
            s = s + x * y
    return s


def inner_product(x: Vector, y: Vector) -> ComplexRational:
    """<x, y> = sum conj(x_k) y_k."""
    _check_dims(x, y)
    s = ZERO
    for a, b in zip(x.components, y.components):
        if a and b:
            s = s + a.conjugate() * b
    return s


def _rref_rows(rows: list[list[ComplexRational]], ncols: int):
    """In-place Gauss-Jordan; returns the pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((k for k in range(r, nrows) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r]
        inv = ONE / piv[c]
        if piv[c] != ONE:
            piv = [x * inv if x else x for x in piv]
            rows[r] = piv
        for k in range(nrows):
            if k != r:
                f = rows[k][c]
                if f:
                    rows[k] = [a - f * b if b else a for a, b in zip(rows[k], piv)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form, zero rows kept at the bottom."""
    rows = [list(r) for r in m.entries]
    _rref_rows(rows, m.cols)
    return Matrix(rows, cols=m.cols)


def rank(m: Matrix) -> int:
    rows = [list(r) for r in m.entries]
    return len(_rref_rows(rows, m.cols))


def row_space_basis(vectors: Iterable[Vector], dim: int) -> tuple[tuple[ComplexRational, ...], ...]:
    """Canonical (rref, nonzero rows only) basis of the span of ``vectors``."""
    rows = []
    for v in vectors:
        if v.dim != dim:
            raise ValueError(f"dimension mismatch: {v.dim} != {dim}")
        rows.append(list(v.components))
    piv = _rref_rows(rows, dim)
    return tuple(tuple(rows[k]) for k in range(len(piv)))


def _kernel_from_rref(rows, pivots, ncols) -> list[Vector]:
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for r, pc in enumerate(pivots):
            v = rows[r][f]
            if v:
                x[pc] = -v
        out.append(Vector(x))
    return out


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of {x : m x = 0}, one vector per free column in column order."""
    rows = [list(r) for r in m.entries]
    piv = _rref_rows(rows, m.cols)
    return _kernel_from_rref(rows, piv, m.cols)


def orth_complement_basis(vs: Sequence[Vector], dim: int) -> list[Vector]:
    """Basis of {x : <v, x> = 0 for every v in vs}."""
    rows = []
    for v in vs:
        if v.dim != dim:
            raise ValueError(f"dimension mismatch: {v.dim} != {dim}")
        rows.append([c.conjugate() for c in v.components])
    piv = _rref_rows(rows, dim)
    return _kernel_from_rref(rows, piv, dim)


def column_space_basis(m: Matrix) -> list[Vector]:
    """Pivot columns of ``m``, taken from the original matrix."""
    rows = [list(r) for r in m.entries]
    piv = _rref_rows(rows, m.cols)
    return [Vector(m.entries[i][c] for i in range(m.rows)) for c in piv]


# -- text format -----------------------------------------------------------

_NUM = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<re>[+-]?{_NUM})?(?:(?P<isign>[+-])?(?P<im>{_NUM})?(?P<i>i))?$"
)


def parse_scalar(text: str) -> ComplexRational:
    """Parse ``3/4``, ``-2i``, ``1/1+0/1i``, ``i`` and similar literals."""
    s = re.sub(r"\s+", "", text)
    m = _SCALAR_RE.match(s)
    if not s or m is None:
        raise ValueError(f"bad scalar literal {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    if m.group("i"):
        if m.group("re") and not m.group("isign"):
            # "2i" is matched as re="2" with no sign; treat it as pure imaginary
            if m.group("im"):
                raise ValueError(f"bad scalar literal {text!r}")
            im_part, re_part = re_part, Fraction(0)
        else:
            im_part = Fraction(m.group("im")) if m.group("im") else Fraction(1)
            if m.group("isign") == "-":
                im_part = -im_part
    return ComplexRational(re_part, im_part)


def parse_vector(text: str) -> Vector:
    """Parse ``(a, b, ...)`` with each entry a scalar literal."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"vector literal must be parenthesised: {text!r}")
    parts = s[1:-1].split(",")
    return Vector(parse_scalar(p) for p in parts)
