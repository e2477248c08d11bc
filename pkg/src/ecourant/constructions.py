"""Builders for the omni-Lie algebra, crossed-module and Lie 2-algebra E-Courant structures.

All three live on ``Hom(A, B) + A`` for suitable spaces; the basis of that
space is the matrix units ``E_(p,x)`` (sending the x-th basis vector of A to
the p-th basis vector of B) at index ``p * dim A + x``, followed by the basis
of A.  The pairing is always ``<D + u, D' + v> = (D v + D' u) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from . import kernels
from .algebra import (
    LeibnizAlgebra, LieAlgebra, Representation, abelian, as_tensor, check_lie,
    check_representation, zero_tensor,
)
from .courant import ECourantStructure
from .errors import InputError, guard_dim
from .linalg import (
    ZERO, add, identity, matmul, matvec, scale, sub, transpose, unit_vector, zeros,
)
from .report import CheckReport, first_failure

HALF = Fraction(1, 2)


# ---------------------------------------------------------------- Hom(A, B) + A plumbing

def split(x, dim_a: int, dim_b: int):
    """Split a K-vector into (matrix dim_b x dim_a, A-vector)."""
    n = dim_a * dim_b
    mat = tuple(tuple(x[p * dim_a: (p + 1) * dim_a]) for p in range(dim_b))
    return mat, tuple(x[n:])


def join(mat, u) -> tuple:
    return tuple(v for row in mat for v in row) + tuple(u)


def _basis_elements(dim_a: int, dim_b: int):
    k = dim_a * dim_b + dim_a
    return [split(unit_vector(k, i), dim_a, dim_b) for i in range(k)]


def _assemble(dim_a: int, dim_b: int, bracket_fn, anchor_fn, max_dim=None, what="K") -> ECourantStructure:
    k = dim_a * dim_b + dim_a
    guard_dim(k, max_dim, f"dim {what}")
    elems = _basis_elements(dim_a, dim_b)
    bracket = tuple(
        tuple(join(*bracket_fn(elems[i], elems[j])) for j in range(k)) for i in range(k)
    )
    pairing = tuple(
        tuple(
            scale(HALF, add(matvec(elems[i][0], elems[j][1]), matvec(elems[j][0], elems[i][1])))
            for j in range(k)
        )
        for i in range(k)
    )
    # anchor r[i][a][b] is the transpose of the matrix of rho(e_i)
    anchor = tuple(transpose(anchor_fn(elems[i])) for i in range(k))
    return ECourantStructure(k, dim_b, bracket, pairing, anchor)


# ---------------------------------------------------------------- omni-Lie algebra

def build_omni(n: int, max_dim=None) -> ECourantStructure:
    """gl(V) + V with ``[A+u, B+v] = [A,B] + Av``, ``<A+u,B+v> = (Av+Bu)/2``, ``rho = pr_gl``."""
    if n < 1:
        raise InputError("omni-Lie algebra needs dim V >= 1")

    def bracket(x, y):
        (A, _u), (B, v) = x, y
        return sub(matmul(A, B), matmul(B, A)), matvec(A, v)

    return _assemble(n, n, bracket, lambda x: x[0], max_dim)


# ---------------------------------------------------------------- crossed modules

@dataclass(frozen=True)
class CrossedModule:
    """``(m, g, phi, act)`` with ``phi: m -> g`` (a ``dim g x dim m`` matrix) and
    ``act[x][a][b]``: ``g_x |> m_a = sum_b act[x][a][b] m_b``."""

    m: LeibnizAlgebra
    g: LeibnizAlgebra
    phi: tuple
    act: tuple

    def __post_init__(self):
        object.__setattr__(self, "phi", as_tensor(self.phi, (self.g.dim, self.m.dim), "phi"))
        object.__setattr__(self, "act", as_tensor(self.act, (self.g.dim, self.m.dim, self.m.dim), "act"))

    def action(self, x, xi) -> tuple:
        return tuple(kernels.contract2(self.act, x, xi, self.m.dim))

    def representation(self) -> Representation:
        return Representation(self.g, self.m.dim, self.act)


def check_crossed_module(cm: CrossedModule) -> CheckReport:
    m, g = cm.m, cm.g
    rep = CheckReport("crossed-module")
    rep.extend(check_lie(m), "m.")
    rep.extend(check_lie(g), "g.")
    rep.extend(check_representation(cm.representation()), "action.")
    em = [m.basis(a) for a in range(m.dim)]
    eg = [g.basis(x) for x in range(g.dim)]
    rep.add("derivation", first_failure(
        product(range(g.dim), range(m.dim), range(m.dim)),
        lambda x, a, b: sub(cm.action(eg[x], m.bracket[a][b]),
                            add(m.br(cm.action(eg[x], em[a]), em[b]), m.br(em[a], cm.action(eg[x], em[b]))))))
    phi_cols = [matvec(cm.phi, v) for v in em]
    rep.add("peiffer", first_failure(
        product(range(m.dim), repeat=2),
        lambda a, b: sub(cm.action(phi_cols[a], em[b]), m.bracket[a][b])))
    rep.add("equivariance", first_failure(
        product(range(g.dim), range(m.dim)),
        lambda x, a: sub(matvec(cm.phi, cm.action(eg[x], em[a])), g.br(eg[x], phi_cols[a]))))
    return rep


def _act_matrix(cm_act, v, dim_m):
    """Matrix of ``xi -> v |> xi``."""
    cols = [tuple(kernels.contract2(cm_act, v, unit_vector(dim_m, a), dim_m)) for a in range(dim_m)]
    return transpose(tuple(cols))


def build_crossed_courant(cm: CrossedModule, max_dim=None, validate: bool = True) -> ECourantStructure:
    """The m-Courant structure on Hom(g, m) + g.

    The anchor is ``rho(A + u) = A o phi + u |> .`` (see module notes in the README).
    """
    if validate:
        rep = check_crossed_module(cm)
        if not rep.passed:
            bad = rep.failures()[0]
            raise InputError(f"invalid crossed module: {bad.check} fails at {bad.witness.indices}")
    dg, dm = cm.g.dim, cm.m.dim
    g = cm.g

    def ad0(v):
        return g.ad(v)

    def ad1(v):
        return _act_matrix(cm.act, v, dm)

    def dot_act(w):
        # the map u -> u |> w, as a dm x dg matrix
        return transpose(tuple(cm.action(g.basis(x), w) for x in range(dg)))

    def bracket(X, Y):
        (A, u), (B, v) = X, Y
        hom = sub(matmul(matmul(A, cm.phi), B), matmul(matmul(B, cm.phi), A))
        Av, Bu = matvec(A, v), matvec(B, u)
        # [A, v]
        hom = add(hom, add(sub(matmul(A, ad0(v)), matmul(ad1(v), A)), dot_act(Av)))
        # [u, B]
        hom = add(hom, sub(matmul(ad1(u), B), matmul(B, ad0(u))))
        gpart = add(g.br(u, v), matvec(cm.phi, Av))
        return hom, gpart

    def anchor(X):
        A, u = X
        return add(matmul(A, cm.phi), ad1(u))

    return _assemble(dg, dm, bracket, anchor, max_dim)


# ---------------------------------------------------------------- Lie 2-algebras

@dataclass(frozen=True)
class LieTwoAlgebra:
    """Two-term homotopy Lie algebra ``A_0 + A_{-1}`` (``dim0``, ``dim1``).

    * ``l1``: ``A_{-1} -> A_0`` as a ``dim0 x dim1`` matrix
    * ``l2_0[x][y][z]``: ``l2(x_x, x_y) = sum_z l2_0[x][y][z] x_z``
    * ``l2_1[x][a][b]``: ``l2(x_x, a_a) = sum_b l2_1[x][a][b] a_b``
    * ``l3[x][y][z][b]``: ``l3(x_x, x_y, x_z) = sum_b l3[x][y][z][b] a_b``

    Identities checked by :func:`check_lie_two` (``x |> a := l2(x, a)``)::

        l1(x |> a) = l2(x, l1 a)
        l1(a) |> b = -l1(b) |> a
        l2(x,l2(y,z)) + l2(y,l2(z,x)) + l2(z,l2(x,y)) = l1 l3(x,y,z)
        x |> (y |> a) - y |> (x |> a) - l2(x,y) |> a = l3(x, y, l1 a)
        sum_i (-1)^i x_i |> l3(..^i..) + sum_{i<j} (-1)^(i+j) l3(l2(x_i,x_j), ..) = 0

    These are the signs forced by the E-Courant axioms on the structure built
    by :func:`build_lie2_courant` with ``[u, v] = l2(u, v) + l3(u, v, .)``.
    """

    dim0: int
    dim1: int
    l1: tuple
    l2_0: tuple
    l2_1: tuple
    l3: tuple

    def __post_init__(self):
        d0, d1 = self.dim0, self.dim1
        object.__setattr__(self, "l1", as_tensor(self.l1, (d0, d1), "l1"))
        object.__setattr__(self, "l2_0", as_tensor(self.l2_0, (d0, d0, d0), "l2_0"))
        object.__setattr__(self, "l2_1", as_tensor(self.l2_1, (d0, d1, d1), "l2_1"))
        object.__setattr__(self, "l3", as_tensor(self.l3, (d0, d0, d0, d1), "l3"))

    def br0(self, x, y):
        return tuple(kernels.contract2(self.l2_0, x, y, self.dim0))

    def act(self, x, a):
        return tuple(kernels.contract2(self.l2_1, x, a, self.dim1))

    def l3v(self, x, y, z):
        out = (ZERO,) * self.dim1
        for i, xi in enumerate(x):
            if not xi:
                continue
            part = tuple(kernels.contract2(self.l3[i], y, z, self.dim1))
            out = add(out, scale(xi, part))
        return out


def check_lie_two(t: LieTwoAlgebra) -> CheckReport:
    d0, d1 = t.dim0, t.dim1
    E0 = [unit_vector(d0, i) for i in range(d0)]
    E1 = [unit_vector(d1, a) for a in range(d1)]
    l1c = [matvec(t.l1, a) for a in E1]
    rep = CheckReport("lie2")

    rep.add("l2_0-antisymmetry", first_failure(
        ((i, j) for i in range(d0) for j in range(i, d0)),
        lambda i, j: add(t.l2_0[i][j], t.l2_0[j][i])))

    def l3_antisym(i, j, k):
        base = t.l3[i][j][k]
        for perm, sign in (((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1)):
            p = t.l3[perm[0]][perm[1]][perm[2]]
            d = add(base, p) if sign == -1 else sub(base, p)
            if any(d):
                return d
        return (ZERO,) * d1

    rep.add("l3-antisymmetry", first_failure(product(range(d0), repeat=3), l3_antisym))
    rep.add("equivariance", first_failure(
        product(range(d0), range(d1)),
        lambda x, a: sub(matvec(t.l1, t.act(E0[x], E1[a])), t.br0(E0[x], l1c[a]))))
    rep.add("peiffer", first_failure(
        product(range(d1), repeat=2),
        lambda a, b: add(t.act(l1c[a], E1[b]), t.act(l1c[b], E1[a]))))

    def jacobi(i, j, k):
        x, y, z = E0[i], E0[j], E0[k]
        s = add(add(t.br0(x, t.br0(y, z)), t.br0(y, t.br0(z, x))), t.br0(z, t.br0(x, y)))
        return sub(s, matvec(t.l1, t.l3[i][j][k]))

    rep.add("jacobi", first_failure(product(range(d0), repeat=3), jacobi))

    def representation(i, j, a):
        x, y, v = E0[i], E0[j], E1[a]
        s = sub(sub(t.act(x, t.act(y, v)), t.act(y, t.act(x, v))), t.act(t.l2_0[i][j], v))
        return sub(s, t.l3v(x, y, l1c[a]))

    rep.add("representation", first_failure(product(range(d0), range(d0), range(d1)), representation))

    def coherence(*idx):
        xs = [E0[i] for i in idx]
        total = (ZERO,) * d1
        for i in range(4):
            rest = [xs[r] for r in range(4) if r != i]
            term = t.act(xs[i], t.l3v(*rest))
            total = add(total, term) if i % 2 == 0 else sub(total, term)
        for i, j in combinations(range(4), 2):
            rest = [xs[r] for r in range(4) if r not in (i, j)]
            term = t.l3v(t.br0(xs[i], xs[j]), *rest)
            total = sub(total, term) if (i + j) % 2 else add(total, term)
        return total

    rep.add("coherence", first_failure(product(range(d0), repeat=4), coherence))
    return rep


def crossed_to_lie2(cm: CrossedModule) -> LieTwoAlgebra:
    """Strict Lie 2-algebra of a crossed module: ``l1 = phi``, ``l2 = ([,]_g, |>)``, ``l3 = 0``."""
    d0, d1 = cm.g.dim, cm.m.dim
    return LieTwoAlgebra(d0, d1, cm.phi, cm.g.bracket, cm.act, zero_tensor(d0, d0, d0, d1))


def module_to_lie2(R: Representation) -> LieTwoAlgebra:
    """Abelian 2-term data of a g-module V: ``l1 = 0``, ``l2 = ([,]_g, rho)``, ``l3 = 0``."""
    d0, d1 = R.algebra.dim, R.dim
    return LieTwoAlgebra(d0, d1, zeros(d0, d1), R.algebra.bracket, R.action, zero_tensor(d0, d0, d0, d1))


def build_lie2_courant(t: LieTwoAlgebra, max_dim=None, validate: bool = True) -> ECourantStructure:
    """The A_{-1}-Courant structure on Hom(A_0, A_{-1}) + A_0.

    ``rho(D + u) = D o l1 + l2(u, .)`` and::

        [u, v]   = l2(u, v) + l3(u, v, .)
        [D, D']  = D l1 D' - D' l1 D
        [D, v]   = -l2(v, D .) + D l2(v, .) + l2(., D v) + l1 D v
        [v, D]   = l2(v, D .) - D l2(v, .)
    """
    if validate:
        rep = check_lie_two(t)
        if not rep.passed:
            bad = rep.failures()[0]
            raise InputError(f"invalid Lie 2-algebra: {bad.check} fails at {bad.witness.indices}")
    d0, d1 = t.dim0, t.dim1
    E0 = [unit_vector(d0, i) for i in range(d0)]

    def act_mat(v):  # a -> v |> a
        return transpose(tuple(t.act(v, unit_vector(d1, a)) for a in range(d1)))

    def ad0(v):  # w -> l2(v, w)
        return transpose(tuple(t.br0(v, w) for w in E0))

    def dot_act(a):  # w -> w |> a
        return transpose(tuple(t.act(w, a) for w in E0))

    def l3_partial(u, v):  # w -> l3(u, v, w)
        return transpose(tuple(t.l3v(u, v, w) for w in E0))

    def bracket(X, Y):
        (D, u), (Dp, v) = X, Y
        hom = add(l3_partial(u, v), sub(matmul(matmul(D, t.l1), Dp), matmul(matmul(Dp, t.l1), D)))
        Dv = matvec(D, v)
        hom = add(hom, add(sub(matmul(D, ad0(v)), matmul(act_mat(v), D)), dot_act(Dv)))
        hom = add(hom, sub(matmul(act_mat(u), Dp), matmul(Dp, ad0(u))))
        a0 = add(t.br0(u, v), matvec(t.l1, Dv))
        return hom, a0

    def anchor(X):
        D, u = X
        return add(matmul(D, t.l1), act_mat(u))

    return _assemble(d0, d1, bracket, anchor, max_dim)


def build_module_courant(R: Representation, max_dim=None) -> ECourantStructure:
    """Hom(g, V) + g from a g-module V, straight from the Lie-derivative formula::

        [u + Phi, v + Psi] = [u, v] + L_u Psi - L_v Phi + rho_star(Phi(v))

    with ``L_u Psi = rho(u) Psi - Psi ad_u`` and ``rho_star(w) = (x -> rho(x) w)``.
    Independent of the Lie 2-algebra route; used to cross-check it.
    """
    g, dv = R.algebra, R.dim

    def rho(u):
        return R.operator(u)

    def lie_derivative(u, Psi):
        return sub(matmul(rho(u), Psi), matmul(Psi, g.ad(u)))

    def rho_star_of(w):
        return transpose(tuple(matvec(R.matrix(x), w) for x in range(g.dim)))

    def bracket(X, Y):
        (Phi, u), (Psi, v) = X, Y
        hom = sub(lie_derivative(u, Psi), lie_derivative(v, Phi))
        hom = add(hom, rho_star_of(matvec(Phi, v)))
        return hom, g.br(u, v)

    return _assemble(g.dim, dv, bracket, lambda X: rho(X[1]), max_dim)


# ---------------------------------------------------------------- corpus helpers

def gauge_lie2(t: LieTwoAlgebra, B) -> LieTwoAlgebra:
    """Transform by an antisymmetric ``B: wedge^2 A_0 -> A_{-1}`` (``B[x][y][b]``).

    The result is the Lie 2-algebra whose Courant structure is the pull-back
    of ``build_lie2_courant(t)`` along ``D + u -> (D + B(u, .)) + u``; it has
    nonzero ``l3`` and modified ``l2`` in general, which makes it useful test
    data for the homotopy identities.
    """
    d0, d1 = t.dim0, t.dim1
    B = as_tensor(B, (d0, d0, d1), "B")
    E0 = [unit_vector(d0, i) for i in range(d0)]

    def Bv(x, y):
        return tuple(kernels.contract2(B, x, y, d1))

    l2_0 = tuple(
        tuple(add(t.l2_0[i][j], matvec(t.l1, B[i][j])) for j in range(d0)) for i in range(d0)
    )
    l2_1 = tuple(
        tuple(add(t.l2_1[i][a], Bv(E0[i], matvec(t.l1, unit_vector(d1, a)))) for a in range(d1))
        for i in range(d0)
    )

    def l3_new(i, j, k):
        u, v, w = E0[i], E0[j], E0[k]
        uv = add(t.br0(u, v), matvec(t.l1, B[i][j]))
        s = t.l3[i][j][k]
        s = add(s, t.act(u, B[j][k]))
        s = sub(s, Bv(v, t.br0(u, w)))
        s = sub(s, t.act(v, B[i][k]))
        s = add(s, Bv(u, t.br0(v, w)))
        s = add(s, t.act(w, B[i][j]))
        s = add(s, Bv(u, matvec(t.l1, B[j][k])))
        s = sub(s, Bv(v, matvec(t.l1, B[i][k])))
        s = sub(s, Bv(uv, w))
        return s

    l3 = tuple(
        tuple(tuple(l3_new(i, j, k) for k in range(d0)) for j in range(d0)) for i in range(d0)
    )
    return LieTwoAlgebra(d0, d1, t.l1, l2_0, l2_1, l3)


def determinant_lie2() -> LieTwoAlgebra:
    """Skeletal: A_0 = Q^3 abelian, A_{-1} = Q, l1 = l2 = 0, l3 = det."""
    l3 = [[[[ZERO] for _ in range(3)] for _ in range(3)] for _ in range(3)]
    for p in permutations(range(3)):
        inversions = sum(1 for a in range(3) for b in range(a + 1, 3) if p[a] > p[b])
        l3[p[0]][p[1]][p[2]] = [Fraction(-1 if inversions % 2 else 1)]
    return LieTwoAlgebra(3, 1, zeros(3, 1), zero_tensor(3, 3, 3), zero_tensor(3, 1, 1), l3)


def identity_crossed_module(g: LieAlgebra) -> CrossedModule:
    """``(g, g, id, ad)``."""
    return CrossedModule(g, g, identity(g.dim), g.bracket)


def abelian_crossed_module(m_dim: int, g: LieAlgebra, act=None) -> CrossedModule:
    """``(abelian m, g, 0, act)``; ``act`` defaults to the trivial action."""
    if act is None:
        act = zero_tensor(g.dim, m_dim, m_dim)
    return CrossedModule(abelian(m_dim), g, zeros(g.dim, m_dim), act)


__all__ = [
    "CrossedModule", "LieTwoAlgebra", "abelian_crossed_module", "build_crossed_courant",
    "build_lie2_courant", "build_module_courant", "build_omni", "check_crossed_module",
    "check_lie_two", "crossed_to_lie2", "determinant_lie2", "gauge_lie2",
    "identity_crossed_module", "join", "module_to_lie2", "split",
]
