"""Structural kernels: triangular eigenvectors, exact rank, polynomial helpers."""

from fractions import Fraction
from typing import Sequence

from ..errors import DegenerateSpectrumError, DimensionError
from .matrix import Matrix

_ZERO = Fraction(0)
_ONE = Fraction(1)


def triangular_eigenvectors(m: Matrix) -> list:
    """Eigenpairs of an upper triangular matrix with distinct diagonal.

    Returns ``[(lambda_k, v_k)]`` in diagonal order.  ``v_k`` comes from back
    substitution with ``v_k[k] = 1`` and zeros below index k, so the
    coefficient vectors read as monic polynomials of degree k.
    """
    if not m.is_upper_triangular():
        raise DimensionError("triangular_eigenvectors needs an upper triangular matrix")
    n = m.dim
    diag = [m[i, i] for i in range(n)]
    collisions = [(i, j) for i in range(n) for j in range(i + 1, n) if diag[i] == diag[j]]
    if collisions:
        i, j = collisions[0]
        raise DegenerateSpectrumError(
            f"repeated diagonal entry {diag[i]} at indices {i} and {j}", collisions)
    pairs = []
    for k in range(n):
        lam = diag[k]
        v = [_ZERO] * n
        v[k] = _ONE
        for j in range(k - 1, -1, -1):
            s = sum((m[j, l] * v[l] for l in range(j + 1, k + 1)), _ZERO)
            v[j] = -s / (diag[j] - lam)
        pairs.append((lam, tuple(v)))
    return pairs


class EchelonBasis:
    """Incrementally maintained row-echelon basis of a subspace of Q^n.

    Vectors are stored sparsely (``{index: value}``) and fully reduced
    against earlier pivots, so ``add`` is a single elimination pass.
    """

    def __init__(self):
        self._rows = {}  # pivot index -> sparse row with row[pivot] == 1

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec) -> dict:
        v = {i: Fraction(x) for i, x in enumerate(vec) if x} if not isinstance(vec, dict) else dict(vec)
        for piv in sorted(self._rows):
            c = v.get(piv)
            if c:
                for i, x in self._rows[piv].items():
                    y = v.get(i, _ZERO) - c * x
                    if y:
                        v[i] = y
                    else:
                        v.pop(i, None)
        return v

    def add(self, vec) -> bool:
        """Insert ``vec``; return False when it already lies in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v)
        c = v[piv]
        v = {i: x / c for i, x in v.items()}
        for p, row in self._rows.items():
            k = row.get(piv)
            if k:
                for i, x in v.items():
                    y = row.get(i, _ZERO) - k * x
                    if y:
                        row[i] = y
                    else:
                        row.pop(i, None)
        self._rows[piv] = v
        return True

    def contains(self, vec) -> bool:
        return not self.reduce(vec)


def rank(vectors) -> int:
    """Exact rank of a list of rational vectors."""
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return len(basis)


def poly_eval(coeffs: Sequence, x) -> Fraction:
    """Horner evaluation; ``coeffs[k]`` multiplies x^k."""
    acc = _ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_degree(coeffs: Sequence) -> int:
    """Degree of a coefficient vector, -1 for the zero polynomial."""
    for k in range(len(coeffs) - 1, -1, -1):
        if coeffs[k]:
            return k
    return -1


def poly_mul(a: Sequence, b: Sequence) -> tuple:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def pad(coeffs: Sequence, length: int) -> tuple:
    """Zero-pad a coefficient vector; refuses to drop nonzero entries."""
    coeffs = tuple(Fraction(c) for c in coeffs)
    if len(coeffs) > length:
        if any(coeffs[length:]):
            raise DimensionError(f"degree {poly_degree(coeffs)} does not fit in length {length}")
        return coeffs[:length]
    return coeffs + (_ZERO,) * (length - len(coeffs))
