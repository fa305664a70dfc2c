"""Dense square matrices over the rationals.

Matrices are immutable.  Vectors are plain tuples of ``Fraction``.
"""

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimensionError, SingularError
from .rational import as_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Matrix:
    __slots__ = ("_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_rational(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise DimensionError("matrix dimension must be at least 1")
        for row in rows:
            if len(row) != n:
                raise DimensionError(f"matrix is not square: {n} rows, a row of length {len(row)}")
        self._rows = rows
        self._hash = None

    @classmethod
    def _trusted(cls, rows):
        # rows already a tuple of tuples of Fraction
        m = cls.__new__(cls)
        m._rows = rows
        m._hash = None
        return m

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls._trusted(tuple((_ZERO,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([_ONE] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        values = [as_rational(v) for v in values]
        n = len(values)
        return cls._trusted(tuple(
            tuple(values[i] if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, i: int, j: int, n: int) -> "Matrix":
        """The standard unit matrix E_ij of size n, with 1-based i, j."""
        if not (1 <= i <= n and 1 <= j <= n):
            raise DimensionError(f"E_{{{i},{j}}} out of range for dimension {n}")
        return cls._trusted(tuple(
            tuple(_ONE if (r == i - 1 and c == j - 1) else _ZERO for c in range(n))
            for r in range(n)))

    @classmethod
    def from_entries(cls, n: int, entries: dict) -> "Matrix":
        """Build from a ``{(row, col): value}`` map with 0-based keys."""
        rows = [[_ZERO] * n for _ in range(n)]
        for (i, j), v in entries.items():
            rows[i][j] = as_rational(v)
        return cls._trusted(tuple(tuple(r) for r in rows))

    # -- access -------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def flatten(self) -> tuple:
        return tuple(x for r in self._rows for x in r)

    def submatrix(self, n: int) -> "Matrix":
        """Leading n x n block."""
        return Matrix._trusted(tuple(r[:n] for r in self._rows[:n]))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Matrix._trusted(tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self._rows, other._rows)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Matrix._trusted(tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self._rows, other._rows)))

    def __neg__(self):
        return Matrix._trusted(tuple(tuple(-a for a in r) for r in self._rows))

    def scale(self, c) -> "Matrix":
        c = as_rational(c)
        return Matrix._trusted(tuple(tuple(c * a for a in r) for r in self._rows))

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        if isinstance(other, (tuple, list)):
            return self.apply(other)
        return NotImplemented

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.dim:
            raise DimensionError(f"vector of length {len(vec)} for a {self.dim}-dim matrix")
        nz = [(k, v) for k, v in enumerate(vec) if v]
        return tuple(sum((r[k] * v for k, v in nz), _ZERO) for r in self._rows)

    def __pow__(self, k: int) -> "Matrix":
        if not isinstance(k, int) or k < 0:
            raise ValueError("matrix power needs a non-negative integer")
        result = Matrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def transpose(self) -> "Matrix":
        return Matrix._trusted(tuple(zip(*self._rows)))

    T = property(transpose)

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(self.dim)), _ZERO)

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse over the rationals."""
        n = self.dim
        a = [list(r) for r in self._rows]
        inv = [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise SingularError("matrix is singular")
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                inv[col], inv[piv] = inv[piv], inv[col]
            p = a[col][col]
            if p != 1:
                a[col] = [x / p for x in a[col]]
                inv[col] = [x / p for x in inv[col]]
            for r in range(n):
                f = a[r][col]
                if r != col and f != 0:
                    ar, ac = a[r], a[col]
                    a[r] = [x - f * y for x, y in zip(ar, ac)]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return Matrix._trusted(tuple(tuple(r) for r in inv))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(x for r in self._rows for x in r)

    def is_upper_triangular(self) -> bool:
        return all(self._rows[i][j] == 0 for i in range(self.dim) for j in range(i))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self):
        from .rational import format_rational
        cells = [[format_rational(x) for x in r] for r in self._rows]
        width = max(len(c) for r in cells for c in r)
        body = "\n ".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)
        return f"Matrix(\n {body})"

    def tolist(self):
        return [list(r) for r in self._rows]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product; skips zero entries since most operators here are sparse."""
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    n = a.dim
    brows = [[(j, x) for j, x in enumerate(r) if x] for r in b.rows]
    out = []
    for ra in a.rows:
        acc = [_ZERO] * n
        for k, x in enumerate(ra):
            if x:
                for j, y in brows[k]:
                    acc[j] += x * y
        out.append(tuple(acc))
    return Matrix._trusted(tuple(out))


def kron(a: Matrix, b: Matrix, *more: Matrix) -> Matrix:
    """Kronecker product; block (i, j) is a[i, j] * b.  Extra factors associate to the left."""
    m, n = a.dim, b.dim
    rows = []
    for i in range(m):
        for k in range(n):
            rows.append(tuple(a[i, j] * b[k, l] for j in range(m) for l in range(n)))
    out = Matrix._trusted(tuple(rows))
    for c in more:
        out = kron(out, c)
    return out


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def basis_vector(k: int, dim: int) -> tuple:
    if not 0 <= k < dim:
        raise DimensionError(f"e_{k} out of range for dimension {dim}")
    return tuple(_ONE if i == k else _ZERO for i in range(dim))


def vec_add(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v) -> tuple:
    c = as_rational(c)
    return tuple(c * a for a in v)
