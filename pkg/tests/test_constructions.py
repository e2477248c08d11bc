from fractions import Fraction as F

import pytest

from ecourant.algebra import abelian, adjoint_representation, aff1, trivial_representation
from ecourant.constructions import (
    CrossedModule, LieTwoAlgebra, build_crossed_courant, build_lie2_courant, build_module_courant,
    build_omni, check_crossed_module, check_lie_two, crossed_to_lie2, determinant_lie2, gauge_lie2,
    identity_crossed_module, join, module_to_lie2, split,
)
from ecourant.corpus import crossed_modules, invalid_crossed_modules, lie_two_algebras, modules_dim2
from ecourant.courant import check_ec_axioms, structures_equal
from ecourant.errors import DimensionGuardError, InputError
from ecourant.linalg import is_zero, unit_vector


def test_omni1_bracket_and_pairing():
    C = build_omni(1)
    X, Y = (F(2), F(3)), (F(5), F(7))
    assert C.br(X, Y) == (0, 14)
    assert C.pair(X, Y) == (F(29, 2),)


def test_omni_self_bracket():
    C = build_omni(2)
    X = join(((1, 2), (-1, 3)), (4, 5))
    A, u = split(X, 2, 2)
    assert C.br(X, X) == join(((0, 0), (0, 0)), (1 * 4 + 2 * 5, -4 + 15))
    assert C.br(X, X) == C.rho_star(C.pair(X, X))


def test_omni_guards():
    with pytest.raises(InputError):
        build_omni(0)
    with pytest.raises(DimensionGuardError):
        build_omni(8)
    assert build_omni(8, max_dim=100).dim_k == 72


def test_crossed_module_checks():
    assert check_crossed_module(identity_crossed_module(aff1())).passed
    bad = invalid_crossed_modules()["aff1-phi0-ad"]
    e = check_crossed_module(bad)["peiffer"]
    assert e.witness.indices == (0, 1)
    with pytest.raises(InputError, match="invalid crossed module"):
        build_crossed_courant(bad)


def test_abelian_phi0_hom_bracket_vanishes():
    C = build_crossed_courant(CrossedModule(abelian(2), aff1(), ((0, 0), (0, 0)), adjoint_representation(aff1()).action))
    for i in range(4):
        for j in range(4):
            assert is_zero(C.bracket[i][j][:4])


def test_crossed_ec2_symmetrization():
    # [v, A] + [A, v] = . |> Av + phi(Av) = rho*(Av)
    C = build_crossed_courant(identity_crossed_module(aff1()))
    for a in range(4):
        for v in range(4, 6):
            s = tuple(x + y for x, y in zip(C.bracket[a][v], C.bracket[v][a]))
            Av = split(unit_vector(6, a), 2, 2)[0]
            w = tuple(Av[p][v - 4] for p in range(2))
            assert s == C.rho_star(w)


@pytest.mark.parametrize("name", sorted(crossed_modules()))
def test_crossed_corpus(name):
    cm = crossed_modules()[name]
    C = build_crossed_courant(cm)
    assert check_ec_axioms(C).passed
    assert structures_equal(C, build_lie2_courant(crossed_to_lie2(cm)))


def test_crossed_to_lie2_identity():
    t = crossed_to_lie2(identity_crossed_module(aff1()))
    assert t.l1 == ((1, 0), (0, 1))
    assert t.l2_0 == aff1().bracket == t.l2_1
    assert is_zero(t.l3)


def test_lie_two_vacuous():
    t = LieTwoAlgebra(2, 1, ((0,), (0,)), [[[0, 0]] * 2] * 2, [[[0]]] * 2,
                      [[[[1], [0]], [[0], [0]]], [[[0], [0]], [[0], [0]]]])
    rep = check_lie_two(t)
    # l3 here is not antisymmetric; every other identity is vacuous
    assert [e.check for e in rep.failures()] == ["l3-antisymmetry"]


def test_lie_two_aff1_on_zero_action():
    t = LieTwoAlgebra(2, 1, ((0,), (0,)), aff1().bracket, [[[0]]] * 2, [[[[0]] * 2] * 2] * 2)
    assert check_lie_two(t).passed


def test_det3():
    t = determinant_lie2()
    assert check_lie_two(t).passed
    C = build_lie2_courant(t)
    assert C.dim_k == 6 and check_ec_axioms(C).passed
    # [e0, e1] = l3(e0, e1, .) = det(e0, e1, .) = e2^*, i.e. Hom-entry (0, 2)
    assert C.br(unit_vector(6, 3), unit_vector(6, 4)) == join(((0, 0, 1),), (0, 0, 0))


def test_invalid_lie2_rejected():
    t = determinant_lie2()
    l2 = [[[F(0)] * 3 for _ in range(3)] for _ in range(3)]
    l2[0][1][2] = F(1)  # not antisymmetric
    bad = LieTwoAlgebra(3, 1, t.l1, l2, t.l2_1, t.l3)
    with pytest.raises(InputError, match="l2_0-antisymmetry"):
        build_lie2_courant(bad)


@pytest.mark.parametrize("name", sorted(lie_two_algebras()))
def test_lie2_corpus(name):
    t = lie_two_algebras()[name]
    assert check_lie_two(t).passed
    assert check_ec_axioms(build_lie2_courant(t)).passed


def test_gauge_nontrivial():
    ts = lie_two_algebras()
    assert any(not is_zero(t.l3) and not is_zero(t.l1) for t in ts.values())


def test_gauge_is_pullback():
    t = crossed_to_lie2(identity_crossed_module(aff1()))
    B = [[[0, 0], [1, 2]], [[-1, -2], [0, 0]]]
    C, C2 = build_lie2_courant(t), build_lie2_courant(gauge_lie2(t, B))

    def T(x):
        D, u = split(x, 2, 2)
        Bu = tuple(tuple(sum(u[i] * B[i][j][b] for i in range(2)) for j in range(2)) for b in range(2))
        return join(tuple(tuple(D[b][j] + Bu[b][j] for j in range(2)) for b in range(2)), u)

    for i in range(6):
        for j in range(6):
            x, y = unit_vector(6, i), unit_vector(6, j)
            assert C.br(T(x), T(y)) == T(C2.br(x, y))
            assert C.pair(T(x), T(y)) == C2.pair(x, y)


@pytest.mark.parametrize("name,g,R", modules_dim2(), ids=[m[0] for m in modules_dim2()])
def test_module_agreement(name, g, R):
    assert structures_equal(build_module_courant(R), build_lie2_courant(module_to_lie2(R)))


def test_module_trivial_dim3():
    R = trivial_representation(aff1(), 3)
    assert check_ec_axioms(build_module_courant(R)).passed
