"""Deterministic test corpus: small Lie algebras, crossed modules, Lie 2-algebras,
modules with complex structures, and omni-Lie GCS data."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .algebra import (
    LieAlgebra, Representation, abelian, adjoint_representation, aff1, from_brackets,
    heisenberg_like4, rotation, trivial_representation, zero_tensor,
)
from .constructions import (
    CrossedModule, abelian_crossed_module, check_crossed_module, crossed_to_lie2,
    determinant_lie2, gauge_lie2, identity_crossed_module, module_to_lie2,
)
from .linalg import ZERO, inverse, matmul, rank, transpose


# ---------------------------------------------------------------- Lie algebras

def heisenberg3() -> LieAlgebra:
    return from_brackets(3, {(0, 1): {2: 1}})


def sl2() -> LieAlgebra:
    """Basis (h, e, f)."""
    return from_brackets(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})


def so3() -> LieAlgebra:
    return from_brackets(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})


def r3(lam=1) -> LieAlgebra:
    """``[e0, e1] = e1``, ``[e0, e2] = lam e2``."""
    return from_brackets(3, {(0, 1): {1: 1}, (0, 2): {2: lam}})


def aff1_plus_line() -> LieAlgebra:
    return from_brackets(3, {(0, 1): {1: 1}})


def lie_algebras() -> dict:
    return {
        "ab1": abelian(1), "ab2": abelian(2), "ab3": abelian(3), "aff1": aff1(),
        "h3": heisenberg3(), "sl2": sl2(), "so3": so3(), "r3": r3(1), "r3_2": r3(2),
        "r3_-1": r3(-1), "aff1+1": aff1_plus_line(),
    }


def _action_from_matrices(mats) -> tuple:
    """Action tensor ``a[x][p][q]`` from matrices acting on column vectors."""
    return tuple(transpose(m) for m in mats)


def _rep(g, mats) -> Representation:
    return Representation(g, len(mats[0]), _action_from_matrices(mats))


def _mat(rows):
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


# ---------------------------------------------------------------- crossed modules

def crossed_modules() -> dict:
    """At least 20 valid crossed modules with dim m, dim g <= 3."""
    L = lie_algebras()
    out = {}
    for name in ("ab1", "ab2", "ab3", "aff1", "h3", "sl2", "so3", "r3", "r3_2", "aff1+1"):
        out[f"id({name})"] = identity_crossed_module(L[name])
    # phi = 0, m abelian, various actions
    for name in ("ab1", "aff1", "h3", "sl2", "r3"):
        g = L[name]
        for k in (1, 2):
            out[f"triv(Q{k},{name})"] = abelian_crossed_module(k, g)
    for name in ("aff1", "h3", "sl2", "so3", "r3", "r3_-1"):
        g = L[name]
        out[f"ad-abelian({name})"] = abelian_crossed_module(g.dim, g, g.bracket)
    out["std(sl2)"] = abelian_crossed_module(2, L["sl2"], _action_from_matrices([
        _mat([[1, 0], [0, -1]]), _mat([[0, 1], [0, 0]]), _mat([[0, 0], [1, 0]])]))
    out["char(aff1)"] = abelian_crossed_module(1, L["aff1"], _action_from_matrices([_mat([[2]]), _mat([[0]])]))
    out["two(aff1)"] = abelian_crossed_module(2, L["aff1"], _action_from_matrices([
        _mat([[1, 0], [0, 0]]), _mat([[0, 1], [0, 0]])]))
    out["jordan(ab1)"] = abelian_crossed_module(3, L["ab1"], _action_from_matrices([
        _mat([[1, 1, 0], [0, 1, 1], [0, 0, 1]])]))
    # ideals with the inclusion and the restricted adjoint action
    aff = L["aff1"]
    out["ideal(aff1)"] = CrossedModule(abelian(1), aff, _mat([[0], [1]]), _action_from_matrices([_mat([[1]]), _mat([[0]])]))
    h3 = L["h3"]
    out["center(h3)"] = CrossedModule(abelian(1), h3, _mat([[0], [0], [1]]),
                                      _action_from_matrices([_mat([[0]])] * 3))
    r = L["r3"]
    out["derived(r3)"] = CrossedModule(abelian(2), r, _mat([[0, 0], [1, 0], [0, 1]]),
                                       _action_from_matrices([_mat([[1, 0], [0, 1]]), _mat([[0, 0], [0, 0]]), _mat([[0, 0], [0, 0]])]))
    # central extension h3 -> Q^2 with the lifted adjoint action
    out["ext(h3->Q2)"] = CrossedModule(h3, abelian(2), _mat([[1, 0, 0], [0, 1, 0]]),
                                       _action_from_matrices([_mat([[0, 0, 0], [0, 0, 0], [0, 1, 0]]),
                                                              _mat([[0, 0, 0], [0, 0, 0], [-1, 0, 0]])]))
    return out


def invalid_crossed_modules() -> dict:
    a = aff1()
    return {
        # Peiffer fails: phi = 0 but m is not abelian
        "aff1-phi0-ad": CrossedModule(a, a, ((ZERO, ZERO), (ZERO, ZERO)), a.bracket),
        # action is not a representation
        "aff1-bad-char": abelian_crossed_module(1, a, _action_from_matrices([_mat([[1]]), _mat([[1]])])),
    }


# ---------------------------------------------------------------- Lie 2-algebras

def _antisym2(d0, d1, entries):
    """``B[x][y][b]`` from ``{(x, y): (b-vector)}`` with x < y."""
    B = [[[ZERO] * d1 for _ in range(d0)] for _ in range(d0)]
    for (x, y), v in entries.items():
        for b, c in enumerate(v):
            B[x][y][b] += Fraction(c)
            B[y][x][b] -= Fraction(c)
    return B


def lie_two_algebras() -> dict:
    """At least 10 Lie 2-algebras, including the determinant example and gauge
    transforms with nonzero l1 and l3."""
    cms = crossed_modules()
    out = {"det3": determinant_lie2()}
    for name in ("id(aff1)", "id(h3)", "std(sl2)", "ext(h3->Q2)", "derived(r3)"):
        out[f"strict({name})"] = crossed_to_lie2(cms[name])
    out["module(ad aff1)"] = module_to_lie2(adjoint_representation(aff1()))
    out["gauge(id(ab3))"] = gauge_lie2(crossed_to_lie2(cms["id(ab3)"]),
                                       _antisym2(3, 3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (0, 1, 1)}))
    out["gauge(id(ab2))"] = gauge_lie2(crossed_to_lie2(cms["id(ab2)"]), _antisym2(2, 2, {(0, 1): (1, 2)}))
    out["gauge(id(aff1))"] = gauge_lie2(crossed_to_lie2(cms["id(aff1)"]), _antisym2(2, 2, {(0, 1): (1, 2)}))
    out["gauge(id(h3))"] = gauge_lie2(crossed_to_lie2(cms["id(h3)"]),
                                      _antisym2(3, 3, {(0, 1): (1, 0, 0), (0, 2): (0, 0, 2)}))
    out["gauge(ext(h3->Q2))"] = gauge_lie2(crossed_to_lie2(cms["ext(h3->Q2)"]),
                                           _antisym2(2, 3, {(0, 1): (1, 1, 0)}))
    return out


# ---------------------------------------------------------------- complex structures

def integer_complex_structures(n: int = 2, bound: int = 2) -> list:
    """All n x n integer matrices with entries in [-bound, bound] and D^2 = -id (n = 2 only)."""
    if n != 2:
        raise ValueError("only n = 2 is enumerated exhaustively")
    out = []
    for a, b, c, d in product(range(-bound, bound + 1), repeat=4):
        if (a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d) == (-1, 0, 0, -1):
            out.append(_mat([[a, b], [c, d]]))
    return out


def random_invertible(n: int, rng: random.Random, lo: int = -2, hi: int = 2) -> tuple:
    while True:
        P = _mat([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
        if rank(P) == n:
            return P


def conjugated_rotations(n: int, count: int, seed: int = 0) -> list:
    rng = random.Random(seed)
    R = rotation(n)
    out = []
    for _ in range(count):
        P = random_invertible(n, rng, -1, 1)
        out.append(matmul(matmul(P, R), inverse(P)))
    return out


def modules_dim2() -> list:
    """(name, g, Representation) for the two 2-dimensional Lie algebras."""
    ab, af = abelian(2), aff1()
    return [
        ("triv1(ab2)", ab, trivial_representation(ab, 1)),
        ("triv2(ab2)", ab, trivial_representation(ab, 2)),
        ("diag(ab2)", ab, _rep(ab, [_mat([[1, 0], [0, 2]]), _mat([[0, 0], [0, 1]])])),
        ("shift3(ab2)", ab, _rep(ab, [_mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]]), _mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])])),
        ("triv1(aff1)", af, trivial_representation(af, 1)),
        ("triv3(aff1)", af, trivial_representation(af, 3)),
        ("ad(aff1)", af, adjoint_representation(af)),
        ("char(aff1)", af, _rep(af, [_mat([[2]]), _mat([[0]])])),
        ("two(aff1)", af, _rep(af, [_mat([[1, 0], [0, 0]]), _mat([[0, 1], [0, 0]])])),
    ]


def nijenhuis_triples() -> list:
    """(name, g, module, D) with D^2 = -id: exhaustive integer D on the dim-2 algebras
    plus conjugated rotations on a 4-dimensional algebra (where T(D) can be nonzero)."""
    out = []
    Ds = integer_complex_structures(2, 2)
    for name, g, R in modules_dim2():
        for i, D in enumerate(Ds):
            out.append((f"{name}/D{i}", g, R, D))
    h = heisenberg_like4()
    for i, D in enumerate([rotation(4)] + conjugated_rotations(4, 7, seed=11)):
        out.append((f"triv1(h4)/D{i}", h, trivial_representation(h, 1), D))
    return out


def omni_suite() -> list:
    """(name, pi, D) for n = 2: pi in {abelian, aff1}, every integer D with D^2 = -id."""
    out = []
    pis = {"zero": zero_tensor(2, 2, 2), "aff1": aff1().bracket}
    for pname, pi in pis.items():
        for i, D in enumerate(integer_complex_structures(2, 2)):
            out.append((f"{pname}/D{i}", pi, D))
    return out


def complex_aff1_realified():
    """(pi, D) on V = Q^4: aff1 over C viewed as a real Lie algebra, D = multiplication by i.

    Basis (e0, i e0, e1, i e1); ``[z e0, w e1] = z w e1``.
    """
    table = {(0, 2): {2: 1}, (0, 3): {3: 1}, (1, 2): {3: 1}, (1, 3): {2: -1}}
    pi = from_brackets(4, table).bracket
    D = _mat([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    return pi, D


def aff1_sum_swap():
    """(pi, D) on V = Q^4: aff1 + aff1 with D exchanging the summands' bases."""
    pi = from_brackets(4, {(0, 1): {1: 1}, (2, 3): {3: 1}}).bracket
    D = _mat([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]])
    return pi, D


def corpus_documents() -> dict:
    """Every corpus object as a structure document, keyed by a file-safe name."""
    from .constructions import build_omni
    from .gcs import OmniGCSData
    from .io import to_document

    out = {}
    for name, L in lie_algebras().items():
        out[f"lie-{name}"] = to_document(L)
    for name, cm in crossed_modules().items():
        out[f"cm-{name}"] = to_document(cm)
    for name, t in lie_two_algebras().items():
        out[f"lie2-{name}"] = to_document(t)
    for name, _g, R in modules_dim2():
        out[f"rep-{name}"] = to_document(R)
    for name, pi, D in omni_suite():
        out[f"omni_gcs-{name}"] = to_document(OmniGCSData(pi, D))
    for n in (1, 2, 3):
        out[f"omni-{n}"] = to_document(build_omni(n))
    return {_safe(k): v for k, v in out.items()}


def _safe(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_" else "_" for c in name)


def validate_corpus() -> list:
    """Names of corpus crossed modules that fail validation (expected empty)."""
    return [name for name, cm in crossed_modules().items() if not check_crossed_module(cm).passed]


__all__ = [
    "aff1_plus_line", "aff1_sum_swap", "complex_aff1_realified", "conjugated_rotations", "corpus_documents", "crossed_modules", "heisenberg3",
    "integer_complex_structures", "invalid_crossed_modules", "lie_algebras", "lie_two_algebras",
    "modules_dim2", "nijenhuis_triples", "omni_suite", "r3", "random_invertible", "sl2", "so3",
    "validate_corpus",
]
