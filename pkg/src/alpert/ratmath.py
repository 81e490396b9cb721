"""Exact arithmetic: rationals, surds ``q*sqrt(m)`` and dense matrices over them.

Rationals are :class:`fractions.Fraction`.  A :class:`Surd` is a rational
times the square root of a squarefree positive integer.  :class:`Matrix` is a
small immutable dense matrix whose entries may be any mix of ``int``,
``Fraction`` and ``Surd``; sums of surds with incompatible radicands raise
:class:`~alpert.errors.IncompatibleRadicands`, at which point callers switch
to :func:`to_mp` and binary floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Callable, Iterable, Sequence, Union

import mpmath

from .errors import IncompatibleRadicands, NotPositiveDefinite, SingularMatrix

DEFAULT_PRECISION = 128
TRIAL_DIVISION_BOUND = 1 << 16

Scalar = Union[int, Fraction, "Surd"]


def squarefree_decompose(m: int, bound: int = TRIAL_DIVISION_BOUND) -> tuple[int, int, bool]:
    """Write ``m = k**2 * r``.

    Returns ``(k, r, reduced)``.  ``reduced`` is False when trial division up
    to ``bound`` could not certify that ``r`` is squarefree.
    """
    if m <= 0:
        raise ValueError(f"radicand must be positive, got {m}")
    k, r, rest = 1, 1, m
    p = 2
    while p <= bound and p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            k *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1 if p == 2 else 2
    reduced = True
    if rest > 1:
        s = isqrt(rest)
        if s * s == rest:
            k *= s
            rest = 1
        elif p > bound and rest >= (bound + 1) ** 3:
            # rest could still hide q**2 with q > bound
            reduced = False
    return k, r * rest, reduced


class Surd:
    """Exact value ``coeff * sqrt(radicand)``.

    Equality compares values, so two surds built from differently reduced
    radicands still compare equal.
    """

    __slots__ = ("coeff", "radicand", "reduced")

    def __init__(self, coeff: int | Fraction = 0, radicand: int = 1):
        coeff = Fraction(coeff)
        radicand = int(radicand)
        if radicand <= 0:
            raise ValueError(f"radicand must be positive, got {radicand}")
        if coeff == 0:
            k, r, reduced = 1, 1, True
        else:
            k, r, reduced = squarefree_decompose(radicand)
        object.__setattr__(self, "coeff", coeff * k)
        object.__setattr__(self, "radicand", r)
        object.__setattr__(self, "reduced", reduced)

    @classmethod
    def _raw(cls, coeff: Fraction, radicand: int, reduced: bool = True) -> "Surd":
        s = object.__new__(cls)
        if coeff == 0:
            radicand, reduced = 1, True
        object.__setattr__(s, "coeff", coeff)
        object.__setattr__(s, "radicand", radicand)
        object.__setattr__(s, "reduced", reduced)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("Surd is immutable")

    @classmethod
    def sqrt(cls, q: int | Fraction) -> "Surd":
        """Exact square root of a nonnegative rational."""
        q = Fraction(q)
        if q < 0:
            raise ValueError(f"square root of negative rational {q}")
        return cls(Fraction(1, q.denominator), q.numerator * q.denominator)

    def normalized(self) -> "Surd":
        return Surd(self.coeff, self.radicand)

    # -- predicates -------------------------------------------------------
    @property
    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def __bool__(self) -> bool:
        return self.coeff != 0

    def _key(self):
        return self.sign, self.square()

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self.radicand == 1:
            return hash(self.coeff)
        return hash(self._key())

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # x -> sign(x) * x**2 is strictly increasing
        return _signed_square(self) < _signed_square(other)

    def __le__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _signed_square(self) <= _signed_square(other)

    def __gt__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _signed_square(self) > _signed_square(other)

    # -- arithmetic -------------------------------------------------------
    def __neg__(self) -> "Surd":
        return Surd._raw(-self.coeff, self.radicand, self.reduced)

    def __pos__(self) -> "Surd":
        return self

    def __abs__(self) -> "Surd":
        return Surd._raw(abs(self.coeff), self.radicand, self.reduced)

    def __mul__(self, other) -> "Surd":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeff or not other.coeff:
            return ZERO
        a, b = self.radicand, other.radicand
        g = gcd(a, b)
        return Surd._raw(self.coeff * other.coeff * g, (a // g) * (b // g),
                         self.reduced and other.reduced)

    __rmul__ = __mul__

    def inverse(self) -> "Surd":
        if not self.coeff:
            raise ZeroDivisionError("inverse of zero surd")
        return Surd._raw(1 / (self.coeff * self.radicand), self.radicand, self.reduced)

    def __truediv__(self, other) -> "Surd":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Surd":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __add__(self, other) -> "Surd":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return surd_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "Surd":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return surd_add(self, -other)

    def __rsub__(self, other) -> "Surd":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return surd_add(other, -self)

    # -- conversion -------------------------------------------------------
    def __float__(self) -> float:
        return float(self.coeff) * float(mpmath.sqrt(self.radicand))

    def to_mpf(self) -> mpmath.mpf:
        """Value at the current mpmath working precision."""
        c = mpmath.mpf(self.coeff.numerator) / self.coeff.denominator
        if self.radicand == 1:
            return c
        return c * mpmath.sqrt(self.radicand)

    def __repr__(self) -> str:
        return f"Surd({self.coeff!s}, {self.radicand})"

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coeff)
        if self.coeff == 1:
            return f"sqrt({self.radicand})"
        if self.coeff == -1:
            return f"-sqrt({self.radicand})"
        return f"{self.coeff}*sqrt({self.radicand})"


def _signed_square(s: Surd) -> Fraction:
    return s.sign * s.square()


def _coerce(x) -> Surd | None:
    if isinstance(x, Surd):
        return x
    if isinstance(x, (int, Fraction)):
        return Surd._raw(Fraction(x), 1)
    return None


ZERO = Surd._raw(Fraction(0), 1)
ONE = Surd._raw(Fraction(1), 1)


def as_surd(x: Scalar) -> Surd:
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot interpret {x!r} as a surd")
    return s


def surd_mul(a: Scalar, b: Scalar) -> Surd:
    return as_surd(a) * as_surd(b)


def surd_add(a: Scalar, b: Scalar) -> Surd:
    """Exact sum; raises IncompatibleRadicands if it is not a single surd."""
    a, b = as_surd(a), as_surd(b)
    if not a.coeff:
        return b
    if not b.coeff:
        return a
    if a.radicand == b.radicand:
        return Surd._raw(a.coeff + b.coeff, a.radicand, a.reduced and b.reduced)
    prod = a.radicand * b.radicand
    s = isqrt(prod)
    if s * s == prod:
        # sqrt(ra) = s/rb * sqrt(rb)
        return Surd._raw(a.coeff * Fraction(s, b.radicand) + b.coeff, b.radicand, b.reduced)
    raise IncompatibleRadicands(f"{a} + {b} is not a single surd")


def is_exact_zero(x: Scalar) -> bool:
    return not x


def to_mp(x) -> mpmath.mpf:
    """Convert an exact scalar to mpmath at the current working precision."""
    if isinstance(x, Surd):
        return x.to_mpf()
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def _dot(xs: Iterable, ys: Iterable):
    acc = Fraction(0)
    for a, b in zip(xs, ys):
        if a and b:
            acc = acc + a * b
    return acc


class Matrix:
    """Immutable dense row-major matrix over exact scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Iterable[Iterable[Scalar]]):
        rows = [tuple(_normalize_scalar(x) for x in r) for r in data]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", nrows)
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", tuple(x for r in rows for x in r))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence[Scalar]) -> "Matrix":
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", tuple(_normalize_scalar(x) for x in entries))
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_flat(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls.from_flat(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> "Matrix":
        n = len(values)
        return cls.from_flat(n, n, [values[i] if i == j else Fraction(0)
                                    for i in range(n) for j in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix.from_flat(self.cols, self.rows,
                                [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def map(self, f: Callable) -> "Matrix":
        return Matrix.from_flat(self.rows, self.cols, [f(x) for x in self.entries])

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix([self.row(i)[c0:c1] for i in range(r0, r1)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.col(j) for j in range(other.cols)]
        return Matrix.from_flat(self.rows, other.cols,
                                [_dot(self.row(i), c) for i in range(self.rows) for c in cols])

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix.from_flat(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix.from_flat(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            return NotImplemented
        return self.map(lambda x: x * scalar)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_lower_triangular(self) -> bool:
        return all(not self[i, j] for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_upper_triangular(self) -> bool:
        return all(not self[i, j] for i in range(self.rows) for j in range(min(i, self.cols)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_mp(self) -> mpmath.matrix:
        """Convert to an mpmath matrix at the current working precision."""
        m = mpmath.matrix(self.rows, self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                m[i, j] = to_mp(self[i, j])
        return m

    def to_float(self) -> list[list[float]]:
        return [[float(x) for x in self.row(i)] for i in range(self.rows)]

    def __repr__(self) -> str:
        return f"Matrix({[[str(x) for x in self.row(i)] for i in range(self.rows)]})"


RationalMatrix = Matrix
SurdMatrix = Matrix


def _normalize_scalar(x):
    if isinstance(x, Surd):
        return x.coeff if x.radicand == 1 else x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    raise TypeError(f"unsupported matrix entry {x!r}")


def ldlt(m: Matrix) -> tuple[Matrix, Matrix]:
    """Exact ``m = L D L^T`` with L unit lower triangular and D diagonal."""
    n = m.rows
    if m.cols != n:
        raise ValueError("ldlt needs a square matrix")
    for i in range(n):
        for j in range(i):
            if m[i, j] != m[j, i]:
                raise ValueError("ldlt needs a symmetric matrix")
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d: list = [Fraction(0)] * n
    for j in range(n):
        pivot = m[j, j] - _dot((L[j][k] * L[j][k] for k in range(j)), d[:j])
        if pivot <= 0:
            raise NotPositiveDefinite(f"pivot {pivot} at index {j}")
        d[j] = pivot
        for i in range(j + 1, n):
            s = m[i, j] - _dot((L[i][k] * L[j][k] for k in range(j)), d[:j])
            L[i][j] = s / pivot
    return Matrix(L), Matrix.diag(d)


def cholesky(m: Matrix) -> Matrix:
    """Lower Cholesky factor ``L D^{1/2}`` as a surd matrix."""
    L, D = ldlt(m)
    roots = [Surd.sqrt(D[j, j]) for j in range(m.rows)]
    return Matrix.from_flat(m.rows, m.cols,
                            [L[i, j] * roots[j] for i in range(m.rows) for j in range(m.cols)])


def reverse(m: Matrix) -> Matrix:
    """Reverse the order of both rows and columns."""
    return Matrix([list(reversed(m.row(i))) for i in reversed(range(m.rows))])


def ul_ldlt(m: Matrix) -> tuple[Matrix, Matrix]:
    """``m = U D U^T`` with U unit upper triangular, via index reversal."""
    L, D = ldlt(reverse(m))
    return reverse(L), reverse(D)


def solve_linear(m: Matrix, rhs: Matrix | Sequence) -> Matrix | list:
    """Exact solution of ``m x = rhs`` by Gaussian elimination.

    Entries may be surds as long as every elimination step keeps single
    radicands (true for diagonally scaled rational matrices such as the
    Jacobi matrix).
    """
    n = m.rows
    if m.cols != n:
        raise ValueError("solve_linear needs a square matrix")
    vector = not isinstance(rhs, Matrix)
    b = Matrix([[x] for x in rhs]) if vector else rhs
    if b.rows != n:
        raise ValueError("right-hand side has wrong length")
    a = [list(m.row(i)) + list(b.row(i)) for i in range(n)]
    width = n + b.cols
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            raise SingularMatrix(f"no pivot in column {c}")
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c] if isinstance(a[c][c], Fraction) else a[c][c].inverse()
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [a[r][k] - f * a[c][k] for k in range(width)]
    x = Matrix([row[n:] for row in a])
    return list(x.col(0)) if vector else x


def determinant(m: Matrix) -> Fraction:
    """Exact determinant of a rational matrix by fraction-free (Bareiss) elimination."""
    n = m.rows
    if m.cols != n:
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for i in range(n):
        row = [Fraction(x) for x in m.row(i)]
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        scale /= den
        a.append([int(x * den) for x in row])
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((r for r in range(k + 1, n) if a[r][k]), None)
            if p is None:
                return Fraction(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * scale * a[n - 1][n - 1]


def mp_inf_norm(m: mpmath.matrix) -> mpmath.mpf:
    """Induced infinity norm (max absolute row sum)."""
    return max((mpmath.fsum(abs(m[i, j]) for j in range(m.cols)) for i in range(m.rows)),
               default=mpmath.mpf(0))
