"""Exact arithmetic over the Gaussian rationals and dense exact linear algebra.

Everything in the engine bottoms out here.  Rationals are arbitrary
precision and always stored in lowest terms with a positive denominator
(gmpy2 keeps them canonical), complex scalars are pairs of rationals, and
all matrix routines are exact: no floating point appears anywhere.
"""

from __future__ import annotations

from gmpy2 import mpq

Rational = mpq


def rational(numerator=0, denominator=None):
    """Exact rational from ints, strings like ``"3/4"``, or rationals.

    Floats are rejected: the engine is exact by contract.
    """
    if isinstance(numerator, float) or isinstance(denominator, float):
        raise TypeError("floating point is not allowed in the exact engine")
    if denominator is None:
        return mpq(numerator)
    return mpq(numerator, denominator)


def _raw(re, im):
    # internal fast constructor; both arguments must already be mpq
    s = GaussianRational.__new__(GaussianRational)
    s.re = re
    s.im = im
    return s


class GaussianRational:
    """A number re + im*sqrt(-1) with exact rational real and imaginary parts.

    Instances are immutable and hashable; all arithmetic is exact field
    arithmetic, normalized eagerly (lowest terms, positive denominators).
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = rational(re)
        self.im = rational(im)

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, mpq)):
            return _raw(mpq(other), _MPQ_ZERO)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _raw(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return _raw(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        return _raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b, c, d = self.re, self.im, o.re, o.im
        return _raw((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return _raw(self.re, -self.im)

    def norm(self):
        """re^2 + im^2, an exact non-negative rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self):
        return ONE / self

    @property
    def is_real(self):
        return not self.im

    def to_json(self):
        """Two-element array [re, im] of "p/q" strings (q omitted when 1)."""
        return [str(self.re), str(self.im)]

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{_imag_str(abs(self.im)).lstrip('+')})"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _imag_str(im):
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    if im.denominator == 1:
        return f"{im}i"
    return f"({im})i"


_MPQ_ZERO = mpq(0)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def scalar(value=0, imag=0):
    """Coerce ints/rationals/GaussianRationals to a GaussianRational."""
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value, imag)


def normalize_vector(vec):
    """Scale an exact vector so its first nonzero coordinate is 1."""
    for x in vec:
        if x:
            if x == ONE:
                return tuple(vec)
            inv = x.inverse()
            return tuple(y * inv for y in vec)
    return tuple(vec)


def conjugate_vector(vec):
    return tuple(x.conjugate() for x in vec)


def _rref(rows, ncols):
    """In-place reduced row echelon form; returns the pivot column list.

    Pivot rule is fixed (first row with a nonzero entry, columns scanned
    left to right) so every result downstream is deterministic.
    """
    pivots = []
    nrows = len(rows)
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        if piv != ONE:
            inv = piv.inverse()
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


class Matrix:
    """Immutable dense matrix of GaussianRational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(scalar(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("ragged rows")
        else:
            width = 0
        self.rows = len(rows)
        self.cols = width
        self.entries = rows

    @classmethod
    def _unsafe(cls, rows, cols, entries):
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m.entries = entries
        return m

    @classmethod
    def identity(cls, n):
        ents = tuple(
            tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
        )
        return cls._unsafe(n, n, ents)

    @classmethod
    def zeros(cls, rows, cols):
        row = tuple(ZERO for _ in range(cols))
        return cls._unsafe(rows, cols, tuple(row for _ in range(rows)))

    @classmethod
    def from_columns(cls, columns, rows=None):
        if not columns:
            return cls.zeros(rows or 0, 0)
        n = len(columns[0])
        ents = tuple(
            tuple(scalar(col[i]) for col in columns) for i in range(n)
        )
        return cls._unsafe(n, len(columns), ents)

    @classmethod
    def vstack(cls, *mats):
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise ValueError("column mismatch in vstack")
        ents = tuple(row for m in mats for row in m.entries)
        return cls._unsafe(len(ents), cols, ents)

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        ents = tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )
        return Matrix._unsafe(self.rows, self.cols, ents)

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        ents = tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )
        return Matrix._unsafe(self.rows, self.cols, ents)

    def scale(self, s):
        s = scalar(s)
        ents = tuple(tuple(s * x for x in row) for row in self.entries)
        return Matrix._unsafe(self.rows, self.cols, ents)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        bents = other.entries
        out = []
        for arow in self.entries:
            acc = [ZERO] * other.cols
            for k, aik in enumerate(arow):
                if not aik:
                    continue
                brow = bents[k]
                acc = [x + aik * y if y else x for x, y in zip(acc, brow)]
            out.append(tuple(acc))
        return Matrix._unsafe(self.rows, other.cols, tuple(out))

    def apply(self, vec):
        """Matrix-vector product, returned as a tuple."""
        if len(vec) != self.cols:
            raise ValueError("shape mismatch in matrix-vector product")
        out = []
        for row in self.entries:
            s = ZERO
            for a, x in zip(row, vec):
                if a and x:
                    s = s + a * x
            out.append(s)
        return tuple(out)

    def power(self, n):
        """Exact n-th power; n = 0 yields the identity."""
        if self.rows != self.cols:
            raise ValueError("matrix power requires a square matrix")
        if n < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def transpose(self):
        ents = tuple(
            tuple(self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)
        )
        return Matrix._unsafe(self.cols, self.rows, ents)

    def conjugate(self):
        ents = tuple(tuple(x.conjugate() for x in row) for row in self.entries)
        return Matrix._unsafe(self.rows, self.cols, ents)

    def is_zero(self):
        return all(not x for row in self.entries for x in row)

    def rank(self):
        rows = [list(r) for r in self.entries]
        return len(_rref(rows, self.cols))

    def kernel(self):
        """Exact basis of the right null space.

        Basis vectors are canonical: they come from the reduced row echelon
        form, ordered by free column, scaled so the first nonzero
        coordinate is 1.
        """
        rows = [list(r) for r in self.entries]
        pivots = _rref(rows, self.cols)
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [ZERO] * self.cols
            v[free] = ONE
            for r_idx, pc in enumerate(pivots):
                coeff = rows[r_idx][free]
                if coeff:
                    v[pc] = -coeff
            basis.append(normalize_vector(v))
        return basis

    def solve(self, b):
        """One exact solution of self * x = b, or None when inconsistent.

        Free variables are set to zero, so the solution is deterministic.
        """
        xs = self.solve_matrix(Matrix.from_columns([tuple(scalar(x) for x in b)]))
        if xs is None:
            return None
        return xs.column(0)

    def solve_matrix(self, b):
        """Solve self * X = b for a matrix of right-hand sides."""
        if b.rows != self.rows:
            raise ValueError("shape mismatch in solve")
        rows = [
            list(r) + list(br) for r, br in zip(self.entries, b.entries)
        ]
        pivots = _rref(rows, self.cols + b.cols)
        if any(p >= self.cols for p in pivots):
            return None
        cols = []
        for j in range(b.cols):
            x = [ZERO] * self.cols
            for r_idx, pc in enumerate(pivots):
                x[pc] = rows[r_idx][self.cols + j]
            cols.append(tuple(x))
        return Matrix.from_columns(cols, rows=self.cols)

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(x) for x in row) for row in self.entries
        )
        return f"Matrix[{self.rows}x{self.cols}: {body}]"
