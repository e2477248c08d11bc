"""Leibniz and Lie algebras by structure constants, representations, Nijenhuis tensors.

Index conventions:

* bracket ``c[i][j][k]``: ``[e_i, e_j] = sum_k c[i][j][k] e_k``
* action ``a[i][p][q]``: ``rho(e_i) v_p = sum_q a[i][p][q] v_q``

Endomorphisms are matrices acting on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import kernels
from .errors import InputError
from .linalg import (
    ZERO, add, commutator, identity, matmul, matvec, sub, transpose, unit_vector,
)
from .report import CheckReport, first_failure


def as_tensor(t, dims: tuple, name: str = "tensor"):
    """Convert nested sequences to nested tuples of exact scalars, checking extents."""
    if not dims:
        if isinstance(t, (tuple, list)):
            raise InputError(f"{name}: too many nesting levels")
        if isinstance(t, int):
            return Fraction(t)
        if isinstance(t, float):
            raise InputError(f"{name}: floating point entries are not allowed")
        return t
    if not isinstance(t, (tuple, list)) or len(t) != dims[0]:
        got = len(t) if isinstance(t, (tuple, list)) else "a scalar"
        raise InputError(f"{name}: expected extent {dims[0]}, got {got}")
    return tuple(as_tensor(x, dims[1:], f"{name}[{i}]") for i, x in enumerate(t))


def zero_tensor(*dims):
    if len(dims) == 1:
        return (ZERO,) * dims[0]
    return tuple(zero_tensor(*dims[1:]) for _ in range(dims[0]))


@dataclass(frozen=True)
class LeibnizAlgebra:
    dim: int
    bracket: tuple

    def __post_init__(self):
        n = self.dim
        object.__setattr__(self, "bracket", as_tensor(self.bracket, (n, n, n), "bracket"))

    def br(self, x, y) -> tuple:
        return tuple(kernels.contract2(self.bracket, x, y, self.dim))

    def basis(self, i):
        return unit_vector(self.dim, i)

    def ad(self, x) -> tuple:
        """Matrix of ``y -> [x, y]``."""
        cols = [self.br(x, self.basis(j)) for j in range(self.dim)]
        return transpose(tuple(cols))


class LieAlgebra(LeibnizAlgebra):
    """Same data as a Leibniz algebra; antisymmetry and Jacobi are checked, not assumed."""


@dataclass(frozen=True)
class Representation:
    algebra: LeibnizAlgebra
    dim: int
    action: tuple

    def __post_init__(self):
        g = self.algebra.dim
        object.__setattr__(self, "action", as_tensor(self.action, (g, self.dim, self.dim), "action"))

    def matrix(self, i: int) -> tuple:
        """Matrix of ``rho(e_i)`` acting on column vectors."""
        return transpose(self.action[i])

    def operator(self, x) -> tuple:
        out = tuple((ZERO,) * self.dim for _ in range(self.dim))
        for i, xi in enumerate(x):
            if xi:
                out = add(out, tuple(tuple(xi * v for v in row) for row in self.matrix(i)))
        return out

    def act(self, x, v) -> tuple:
        return tuple(kernels.contract2(self.action, x, v, self.dim))


def check_leibniz(L: LeibnizAlgebra) -> CheckReport:
    """Left Leibniz identity ``[x,[y,z]] = [[x,y],z] + [y,[x,z]]`` on basis triples."""
    n = L.dim
    e = [L.basis(i) for i in range(n)]

    def defect(i, j, k):
        lhs = L.br(e[i], L.bracket[j][k])
        r1 = L.br(L.bracket[i][j], e[k])
        r2 = L.br(e[j], L.bracket[i][k])
        return sub(lhs, add(r1, r2))

    return CheckReport("leibniz").add("leibniz", first_failure(product(range(n), repeat=3), defect))


def check_lie(L: LeibnizAlgebra) -> CheckReport:
    n = L.dim
    e = [L.basis(i) for i in range(n)]
    rep = CheckReport("lie")
    rep.add("antisymmetry", first_failure(
        ((i, j) for i in range(n) for j in range(i, n)),
        lambda i, j: add(L.bracket[i][j], L.bracket[j][i])))

    def jacobi(i, j, k):
        t1 = L.br(e[i], L.bracket[j][k])
        t2 = L.br(e[j], L.bracket[k][i])
        t3 = L.br(e[k], L.bracket[i][j])
        return add(add(t1, t2), t3)

    rep.add("jacobi", first_failure(product(range(n), repeat=3), jacobi))
    return rep


def _square(m, name="endomorphism"):
    m = as_tensor(m, (len(m), len(m)), name)
    return m


def nijenhuis_tensor(N, L: LeibnizAlgebra) -> tuple:
    """``T(N)[i][j] = [Ne_i,Ne_j] - N([Ne_i,e_j] + [e_i,Ne_j] - N[e_i,e_j])``."""
    N = _square(N)
    if len(N) != L.dim:
        raise InputError(f"operator of size {len(N)} on an algebra of dimension {L.dim}")
    n = L.dim
    e = [L.basis(i) for i in range(n)]
    Ne = [matvec(N, v) for v in e]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            inner = sub(add(L.br(Ne[i], e[j]), L.br(e[i], Ne[j])), matvec(N, L.bracket[i][j]))
            row.append(sub(L.br(Ne[i], Ne[j]), matvec(N, inner)))
        out.append(tuple(row))
    return tuple(out)


def check_complex_structure(D, L: LeibnizAlgebra) -> CheckReport:
    """``D^2 = -id`` and ``D[u,v] = [u,Dv]`` on basis pairs."""
    D = _square(D)
    if len(D) != L.dim:
        raise InputError(f"operator of size {len(D)} on an algebra of dimension {L.dim}")
    n = L.dim
    rep = CheckReport("complex-structure")
    sq = add(matmul(D, D), identity(n))
    rep.add("square", first_failure(((j,) for j in range(n)), lambda j: tuple(r[j] for r in sq)))
    e = [L.basis(i) for i in range(n)]
    De = [matvec(D, v) for v in e]
    rep.add("bracket", first_failure(
        product(range(n), repeat=2),
        lambda i, j: sub(matvec(D, L.bracket[i][j]), L.br(e[i], De[j]))))
    return rep


def check_representation(R: Representation) -> CheckReport:
    """``rho([e_i,e_j]) = [rho(e_i), rho(e_j)]`` on basis pairs."""
    g = R.algebra
    mats = [R.matrix(i) for i in range(g.dim)]
    rep = CheckReport("representation")
    rep.add("homomorphism", first_failure(
        product(range(g.dim), repeat=2),
        lambda i, j: sub(R.operator(g.bracket[i][j]), commutator(mats[i], mats[j]))))
    return rep


# ---------------------------------------------------------------- standard algebras

def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, zero_tensor(n, n, n))


def from_brackets(n: int, table: dict, cls=LieAlgebra, antisymmetrize: bool = True):
    """Build an algebra from ``{(i, j): {k: coeff}}``; optionally fill ``[e_j,e_i] = -[e_i,e_j]``."""
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for (i, j), out in table.items():
        for k, v in out.items():
            c[i][j][k] += Fraction(v)
            if antisymmetrize:
                c[j][i][k] -= Fraction(v)
    return cls(n, c)


def aff1() -> LieAlgebra:
    """The 2-dimensional non-abelian Lie algebra: ``[e_0, e_1] = e_1``."""
    return from_brackets(2, {(0, 1): {1: 1}})


def gl(n: int) -> LieAlgebra:
    """gl(n) with basis ``E_pq`` at index ``p*n + q`` and the commutator bracket."""
    d = n * n
    c = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for p, q, r, s in product(range(n), repeat=4):
        # E_pq E_rs = delta_qr E_ps
        if q == r:
            c[p * n + q][r * n + s][p * n + s] += 1
        if s == p:
            c[p * n + q][r * n + s][r * n + q] -= 1
    return LieAlgebra(d, c)


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra) -> LieAlgebra:
    n = a.dim + b.dim
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i, j, k in product(range(a.dim), repeat=3):
        c[i][j][k] = a.bracket[i][j][k]
    for i, j, k in product(range(b.dim), repeat=3):
        c[a.dim + i][a.dim + j][a.dim + k] = b.bracket[i][j][k]
    return LieAlgebra(n, c)


def adjoint_representation(g: LeibnizAlgebra) -> Representation:
    return Representation(g, g.dim, g.bracket)


def trivial_representation(g: LeibnizAlgebra, m: int) -> Representation:
    return Representation(g, m, zero_tensor(g.dim, m, m))


def heisenberg_like4() -> LieAlgebra:
    """``[e_0, e_1] = e_2`` inside a 4-dimensional algebra (h_3 plus a line)."""
    return from_brackets(4, {(0, 1): {2: 1}})


def rotation(n: int = 2) -> tuple:
    """Block-diagonal rotation ``[[0,-1],[1,0]]`` on an even-dimensional space."""
    if n % 2:
        raise InputError("rotation needs an even dimension")
    m = [[ZERO] * n for _ in range(n)]
    for b in range(0, n, 2):
        m[b][b + 1] = Fraction(-1)
        m[b + 1][b] = Fraction(1)
    return tuple(tuple(r) for r in m)


__all__ = [
    "LeibnizAlgebra", "LieAlgebra", "Representation", "abelian", "adjoint_representation",
    "aff1", "as_tensor", "check_complex_structure", "check_leibniz", "check_lie",
    "check_representation", "direct_sum", "from_brackets", "gl", "heisenberg_like4",
    "nijenhuis_tensor", "rotation", "trivial_representation", "zero_tensor",
]
