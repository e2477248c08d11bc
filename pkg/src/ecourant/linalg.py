"""Dense exact linear algebra over Q and Q(i).

Vectors are tuples of scalars, matrices are tuples of row tuples and act on
column vectors: ``(A x)[r] = sum_c A[r][c] x[c]``.  Nothing here uses
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import kernels
from .errors import InputError
from .scalars import complexify, conjugate  # noqa: F401  (re-exported)

ZERO = Fraction(0)
ONE = Fraction(1)

Vector = tuple
Matrix = tuple


def vec(xs) -> Vector:
    return tuple(xs)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((ZERO,) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(x) if isinstance(x, int) else x for x in row) for row in rows)


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise InputError(f"cannot multiply {shape(a)} by {shape(b)}")
    return tuple(tuple(r) for r in kernels.matmul(a, b))


def matvec(a: Matrix, x: Sequence) -> Vector:
    if a and len(a[0]) != len(x):
        raise InputError(f"cannot apply {shape(a)} matrix to a vector of length {len(x)}")
    return tuple(kernels.matvec(a, x))


def add(x, y):
    """Entrywise sum of two vectors or two matrices of the same shape."""
    if x and isinstance(x[0], tuple):
        return tuple(add(r, s) for r, s in zip(x, y))
    return tuple(a + b for a, b in zip(x, y))


def sub(x, y):
    if x and isinstance(x[0], tuple):
        return tuple(sub(r, s) for r, s in zip(x, y))
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x):
    if x and isinstance(x[0], tuple):
        return tuple(scale(c, r) for r in x)
    return tuple(c * a for a in x)


def neg(x):
    return scale(-ONE, x)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return sub(matmul(a, b), matmul(b, a))


def flatten(t) -> Vector:
    if isinstance(t, (tuple, list)):
        out = []
        for x in t:
            out.extend(flatten(x))
        return tuple(out)
    return (t,)


def is_zero(t) -> bool:
    if isinstance(t, (tuple, list)):
        return all(is_zero(x) for x in t)
    return not t


def dot(x: Sequence, y: Sequence):
    s = ZERO
    for a, b in zip(x, y):
        if a and b:
            s = s + a * b
    return s


def _exact(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise InputError("floating point entries are not allowed")
    return x


def _exact_rows(a) -> list:
    return [[_exact(x) for x in r] for r in a]


def rref(a: Sequence[Sequence], ncols: Optional[int] = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of ``a`` and its pivot columns."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    rows = _exact_rows(a)
    pivots = kernels.row_reduce(rows, ncols)
    return rows, pivots


def rank(a: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    return len(rref(a, ncols)[1])


def solve_linear(a: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """One exact solution of ``a x = b``, or ``None`` when the system is inconsistent.

    Free variables are set to zero.
    """
    if len(a) != len(b):
        raise InputError(f"matrix has {len(a)} rows but right-hand side has {len(b)} entries")
    ncols = len(a[0]) if a else 0
    aug = [[_exact(x) for x in row] + [_exact(rhs)] for row, rhs in zip(a, b)]
    if any(len(r) != ncols + 1 for r in aug):
        raise InputError("ragged matrix")
    pivots = kernels.row_reduce(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for r, col in enumerate(pivots):
        x[col] = aug[r][ncols]
    return tuple(x)


def obstruction(a: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """A vector ``y`` with ``y a = 0`` and ``y . b != 0`` (certificate of inconsistency).

    Returns ``None`` when ``a x = b`` is solvable.
    """
    left = kernel_basis(transpose(tuple(tuple(r) for r in a)), ncols=len(a))
    for y in left.basis:
        if dot(y, b):
            return y
    return None


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``ambient``-dimensional coordinate space given by a basis.

    The basis is checked for linear independence on construction.
    """

    ambient: int
    basis: tuple

    def __post_init__(self):
        basis = tuple(tuple(v) for v in self.basis)
        object.__setattr__(self, "basis", basis)
        for v in basis:
            if len(v) != self.ambient:
                raise InputError(f"basis vector of length {len(v)} in ambient dimension {self.ambient}")
        if basis and rank(basis, self.ambient) != len(basis):
            raise InputError("subspace basis is linearly dependent")

    @classmethod
    def span(cls, ambient: int, vectors) -> "Subspace":
        """Subspace spanned by arbitrary (possibly dependent) vectors."""
        vectors = [tuple(v) for v in vectors]
        if not vectors:
            return cls(ambient, ())
        rows, pivots = rref(vectors, ambient)
        return cls(ambient, tuple(tuple(rows[r]) for r in range(len(pivots))))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        if is_zero(v):
            return True
        if not self.basis:
            return False
        return rank(list(self.basis) + [tuple(v)], self.ambient) == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def same_span(self, other: "Subspace") -> bool:
        return self.ambient == other.ambient and self.dim == other.dim and self <= other

    def conjugate(self) -> "Subspace":
        return Subspace(self.ambient, tuple(tuple(conjugate(x) for x in v) for v in self.basis))

    def sum_dim(self, other: "Subspace") -> int:
        vs = list(self.basis) + list(other.basis)
        return rank(vs, self.ambient) if vs else 0


def kernel_basis(a: Sequence[Sequence], ncols: Optional[int] = None) -> Subspace:
    """Basis of ``{x : a x = 0}``; one vector per free column of the RREF."""
    if ncols is None:
        if not a:
            raise InputError("ncols is required for a matrix with no rows")
        ncols = len(a[0])
    rows, pivots = rref(a, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [ZERO] * ncols
        x[free] = ONE
        for r, col in enumerate(pivots):
            v = rows[r][free]
            if v:
                x[col] = -v
        basis.append(tuple(x))
    return Subspace(ncols, tuple(basis))


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [[_exact(x) for x in row] + list(e) for row, e in zip(a, identity(n))]
    pivots = kernels.row_reduce(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise InputError("matrix is singular")
    return tuple(tuple(r[n:]) for r in aug)
