"""E-Courant structures over a point and their axiom checks.

At a point the covariant differential operators of ``E`` are ``gl(E)``, the
jet space is ``E`` itself and the jet operator is the identity, so
``rho_star(d u)`` is just ``rho_star(u)`` for ``u`` in ``E``.  A jet ``mu``
pairs with an operator ``A`` as ``A mu``.

Tensor conventions (basis ``e_i`` of K, ``f_a`` of E):

* bracket ``c[i][j][k]``: ``[e_i, e_j] = sum_k c[i][j][k] e_k``
* pairing ``p[i][j][a]``: ``<e_i, e_j> = sum_a p[i][j][a] f_a`` (symmetric in i, j)
* anchor ``r[i][a][b]``: ``rho(e_i) f_a = sum_b r[i][a][b] f_b``
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Optional

from . import kernels
from .algebra import LeibnizAlgebra, as_tensor, check_leibniz
from .errors import AxiomViolation, InputError
from .linalg import (
    ZERO, Subspace, add, commutator, kernel_basis, matvec, obstruction, scale,
    solve_linear, sub, transpose, unit_vector, zeros,
)
from .report import FAIL, CheckReport, Witness, first_failure
from .scalars import GaussianRational

TWO = Fraction(2)


def _field_of(*tensors) -> str:
    def walk(t):
        if isinstance(t, tuple):
            return any(walk(x) for x in t)
        return isinstance(t, GaussianRational)
    return "gaussian" if any(walk(t) for t in tensors) else "rational"


@dataclass(frozen=True)
class ECourantStructure:
    dim_k: int
    dim_e: int
    bracket: tuple
    pairing: tuple
    anchor: tuple
    field: str = ""

    def __post_init__(self):
        k, e = self.dim_k, self.dim_e
        if k < 0 or e < 1:
            raise InputError(f"bad dimensions dim K = {k}, dim E = {e}")
        object.__setattr__(self, "bracket", as_tensor(self.bracket, (k, k, k), "bracket"))
        object.__setattr__(self, "pairing", as_tensor(self.pairing, (k, k, e), "pairing"))
        object.__setattr__(self, "anchor", as_tensor(self.anchor, (k, e, e), "anchor"))
        for i in range(k):
            for j in range(i + 1, k):
                if self.pairing[i][j] != self.pairing[j][i]:
                    raise InputError(f"pairing is not symmetric at ({i}, {j})")
        detected = _field_of(self.bracket, self.pairing, self.anchor)
        if not self.field:
            object.__setattr__(self, "field", detected)
        elif self.field not in ("rational", "gaussian"):
            raise InputError(f"unknown field {self.field!r}")
        elif self.field == "rational" and detected == "gaussian":
            raise InputError("Gaussian entries in a structure declared rational")

    # -- evaluation -----------------------------------------------------------

    def basis(self, i: int) -> tuple:
        return unit_vector(self.dim_k, i)

    def br(self, x, y) -> tuple:
        return tuple(kernels.contract2(self.bracket, x, y, self.dim_k))

    def pair(self, x, y) -> tuple:
        return tuple(kernels.contract2(self.pairing, x, y, self.dim_e))

    @cached_property
    def _anchor_mats(self):
        return tuple(transpose(self.anchor[i]) for i in range(self.dim_k))

    def anchor_matrix(self, x) -> tuple:
        """Matrix of ``rho(x)`` in gl(E), acting on column vectors."""
        out = zeros(self.dim_e, self.dim_e)
        for i, xi in enumerate(x):
            if xi:
                out = add(out, scale(xi, self._anchor_mats[i]))
        return out

    def leibniz_algebra(self) -> LeibnizAlgebra:
        return LeibnizAlgebra(self.dim_k, self.bracket)

    # -- rho_star -------------------------------------------------------------

    @cached_property
    def flat(self) -> tuple:
        """Rows ``(i, a)``, columns ``j``: entry ``2 <e_i, e_j>_a``."""
        k, e = self.dim_k, self.dim_e
        return tuple(
            tuple(TWO * self.pairing[i][j][a] for j in range(k))
            for i in range(k) for a in range(e)
        )

    def _rho_star_rhs(self, mu) -> tuple:
        return tuple(x for i in range(self.dim_k) for x in matvec(self._anchor_mats[i], mu))

    @cached_property
    def _rho_star_basis(self):
        sols = []
        for a in range(self.dim_e):
            f = unit_vector(self.dim_e, a)
            sols.append(solve_linear(self.flat, self._rho_star_rhs(f)) if self.dim_k else ())
        return tuple(sols)

    def rho_star(self, mu) -> tuple:
        """The ``Y`` in K with ``2<Y, X> = rho(X) mu`` for all X.

        Raises :class:`AxiomViolation` (EC-4) when no such ``Y`` exists.
        """
        if len(mu) != self.dim_e:
            raise InputError(f"E-vector of length {len(mu)}, expected {self.dim_e}")
        out = (ZERO,) * self.dim_k
        for a, m in enumerate(mu):
            if not m:
                continue
            y = self._rho_star_basis[a]
            if y is None:
                raise AxiomViolation(f"EC-4 violation: rho_star(f_{a}) is not in K")
            out = add(out, scale(m, y))
        return out


def pairing_flat(C: ECourantStructure) -> tuple:
    return C.flat


def is_nondegenerate(C: ECourantStructure) -> bool:
    return kernel_basis(C.flat, C.dim_k).dim == 0 if C.dim_k else True


def rho_star(C: ECourantStructure, mu) -> tuple:
    return C.rho_star(tuple(mu))


def _ec4_witness(C: ECourantStructure) -> Optional[Witness]:
    for a in range(C.dim_e):
        if C._rho_star_basis[a] is None:
            rhs = C._rho_star_rhs(unit_vector(C.dim_e, a))
            return Witness((a,), obstruction(C.flat, rhs))
    return None


def check_ec_axioms(C: ECourantStructure) -> CheckReport:
    """Nondegeneracy, Leibniz identity and EC-1..EC-5 on basis tuples."""
    k, e = C.dim_k, C.dim_e
    E = [C.basis(i) for i in range(k)]
    rep = CheckReport("ecourant")

    ker = kernel_basis(C.flat, k) if k else Subspace(0, ())
    rep.add("nondegenerate", Witness((), ker.basis[0]) if ker.dim else None)
    rep.extend(check_leibniz(C.leibniz_algebra()))

    rho = C._anchor_mats
    rep.add("EC-1", first_failure(
        product(range(k), repeat=2),
        lambda i, j: sub(C.anchor_matrix(C.bracket[i][j]), commutator(rho[i], rho[j]))))

    ec4 = _ec4_witness(C)
    if ec4 is not None:
        note = "rho_star unavailable (EC-4 fails)"
        rep.add("EC-2", ec4, note=note, status=FAIL)
    else:
        def ec2(*idx):
            x = E[idx[0]] if len(idx) == 1 else add(E[idx[0]], E[idx[1]])
            return sub(C.br(x, x), C.rho_star(C.pair(x, x)))
        tests = [(i,) for i in range(k)] + [(i, j) for i in range(k) for j in range(i + 1, k)]
        rep.add("EC-2", first_failure(tests, ec2))

    def ec3(i, j, l):
        lhs = matvec(rho[i], C.pairing[j][l])
        return sub(lhs, add(C.pair(C.bracket[i][j], E[l]), C.pair(E[j], C.bracket[i][l])))

    rep.add("EC-3", first_failure(product(range(k), repeat=3), ec3))
    rep.add("EC-4", ec4)

    if ec4 is not None:
        rep.add("EC-5", ec4, note="rho_star unavailable (EC-4 fails)", status=FAIL)
    else:
        rep.add("EC-5", first_failure(
            ((a,) for a in range(e)),
            lambda a: C.anchor_matrix(C.rho_star(unit_vector(e, a)))))
    return rep


def check_anchor_lemma(C: ECourantStructure) -> CheckReport:
    """``[X, rho* u] = 2 rho* <X, rho* u>`` and ``[rho* u, X] = 0`` on basis X, u."""
    k, e = C.dim_k, C.dim_e
    rep = CheckReport("anchor-lemma")
    ec4 = _ec4_witness(C)
    if ec4 is not None:
        rep.add("lemma-left", ec4, note="rho_star unavailable (EC-4 fails)", status=FAIL)
        rep.add("lemma-right", ec4, note="rho_star unavailable (EC-4 fails)", status=FAIL)
        return rep
    rs = [C.rho_star(unit_vector(e, a)) for a in range(e)]
    E = [C.basis(i) for i in range(k)]

    def left(i, a):
        return sub(C.br(E[i], rs[a]), scale(TWO, C.rho_star(C.pair(E[i], rs[a]))))

    rep.add("lemma-left", first_failure(product(range(k), range(e)), left))
    rep.add("lemma-right", first_failure(product(range(k), range(e)), lambda i, a: C.br(rs[a], E[i])))
    return rep


def orthogonal_complement(C: ECourantStructure, S: Subspace) -> Subspace:
    """``{X : <X, s> = 0 for all s in S}`` (E-valued, so one equation per E-coordinate)."""
    if S.ambient != C.dim_k:
        raise InputError(f"subspace of ambient dimension {S.ambient} in K of dimension {C.dim_k}")
    rows = []
    for s in S.basis:
        # <e_j, s>_a as a row over j
        cols = [C.pair(C.basis(j), s) for j in range(C.dim_k)]
        for a in range(C.dim_e):
            rows.append(tuple(c[a] for c in cols))
    return kernel_basis(rows, C.dim_k)


def dirac_check(C: ECourantStructure, S: Subspace) -> CheckReport:
    """``S = S^perp`` and ``[s1, s2] in S`` for all basis pairs of S."""
    rep = CheckReport("dirac")
    perp = orthogonal_complement(C, S)
    w = None
    for idx, v in enumerate(S.basis):
        if not perp.contains(v):
            w = Witness(("S", idx), v)
            break
    if w is None:
        for idx, v in enumerate(perp.basis):
            if not S.contains(v):
                w = Witness(("perp", idx), v)
                break
    rep.add("self-orthogonal", w)
    w = None
    for p, q in product(range(S.dim), repeat=2):
        b = C.br(S.basis[p], S.basis[q])
        if not S.contains(b):
            w = Witness((p, q), b)
            break
    rep.add("closed", w)
    return rep


def rho_star_isotropy_defects(C: ECourantStructure):
    """First ``(a, b)`` with ``<rho* f_a, rho* f_b> != 0``, as a witness, else None."""
    rs = [C.rho_star(unit_vector(C.dim_e, a)) for a in range(C.dim_e)]
    return first_failure(product(range(C.dim_e), repeat=2), lambda a, b: C.pair(rs[a], rs[b]))


def structures_equal(a: ECourantStructure, b: ECourantStructure) -> bool:
    return (a.dim_k, a.dim_e, a.bracket, a.pairing, a.anchor) == (
        b.dim_k, b.dim_e, b.bracket, b.pairing, b.anchor)


__all__ = [
    "ECourantStructure", "check_anchor_lemma", "check_ec_axioms", "dirac_check",
    "is_nondegenerate", "orthogonal_complement", "pairing_flat", "rho_star",
    "rho_star_isotropy_defects", "structures_equal",
]
