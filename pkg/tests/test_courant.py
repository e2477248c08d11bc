from fractions import Fraction as F

import pytest

from ecourant.constructions import build_crossed_courant, build_omni, identity_crossed_module, join
from ecourant.algebra import aff1
from ecourant.courant import (
    ECourantStructure, check_anchor_lemma, check_ec_axioms, dirac_check, is_nondegenerate,
    orthogonal_complement, pairing_flat, rho_star, rho_star_isotropy_defects,
)
from ecourant.errors import AxiomViolation, InputError
from ecourant.linalg import Subspace, rank, unit_vector

HALF = F(1, 2)


def test_omni1_flat():
    C = build_omni(1)
    assert pairing_flat(C) == ((0, 1), (1, 0))
    assert is_nondegenerate(C)


def test_omni2_flat_rank():
    assert rank(pairing_flat(build_omni(2))) == 6


def test_zero_pairing_degenerate():
    C = ECourantStructure(2, 1, [[[0, 0]] * 2] * 2, [[[0]] * 2] * 2, [[[0]]] * 2)
    assert not is_nondegenerate(C)
    assert not check_ec_axioms(C)["nondegenerate"].passed


def test_rho_star_omni():
    C = build_omni(2)
    assert rho_star(C, (F(3), F(-1))) == join(((0, 0), (0, 0)), (3, -1))


def test_rho_star_crossed():
    # rho*(w) = (. |> w, phi(w)); for (aff1, aff1, id, ad) and w = f1: x -> [x, e1]
    C = build_crossed_courant(identity_crossed_module(aff1()))
    assert rho_star(C, (0, 1)) == join(((0, 0), (1, 0)), (0, 1))
    # w = f0: e1 -> [e1, e0] = -e1
    assert rho_star(C, (1, 0)) == join(((0, 0), (0, -1)), (1, 0))


def test_rho_star_zero_anchor():
    C = build_omni(1)
    C0 = ECourantStructure(2, 1, C.bracket, C.pairing, [[[0]]] * 2)
    assert rho_star(C0, (F(5),)) == (0, 0)


def test_rho_star_ec4_violation():
    # degenerate pairing, nonzero anchor: no Y with 2<Y, X> = rho(X) mu
    C = ECourantStructure(1, 1, [[[0]]], [[[0]]], [[[1]]])
    with pytest.raises(AxiomViolation, match="EC-4"):
        rho_star(C, (1,))
    rep = check_ec_axioms(C)
    assert not rep["EC-4"].passed and not rep["EC-2"].passed and not rep["EC-5"].passed


@pytest.mark.parametrize("n", [1, 2, 3])
def test_omni_axioms(n):
    C = build_omni(n)
    assert check_ec_axioms(C).passed
    assert check_anchor_lemma(C).passed
    assert rho_star_isotropy_defects(C) is None


def test_omni_missing_av_term_fails_ec2():
    C = build_omni(1)
    br = [[[C.bracket[i][j][0], F(0)] for j in range(2)] for i in range(2)]
    bad = ECourantStructure(2, 1, br, C.pairing, C.anchor)
    e = check_ec_axioms(bad)["EC-2"]
    # X = E + v: [X, X] = 0 but rho*<X, X> = rho*(1) = v
    assert e.witness.indices == (0, 1)
    assert e.witness.defect == (0, -1)


def test_perturbed_pairing_reported():
    C = build_omni(1)
    p = [[list(C.pairing[i][j]) for j in range(2)] for i in range(2)]
    p[0][0] = [F(1)]
    bad = ECourantStructure(2, 1, C.bracket, p, C.anchor)
    assert not check_ec_axioms(bad)["EC-3"].passed
    rep = check_anchor_lemma(bad)
    assert [e.check for e in rep.entries] == ["lemma-left", "lemma-right"]


def test_asymmetric_pairing_rejected():
    with pytest.raises(InputError, match="symmetric"):
        ECourantStructure(2, 1, [[[0, 0]] * 2] * 2, [[[0], [1]], [[0], [0]]], [[[0]]] * 2)


def test_orthogonal_complement_and_dirac():
    C = build_omni(1)
    S = Subspace(2, ((1, 0),))
    assert orthogonal_complement(C, S).same_span(S)
    assert dirac_check(C, S).passed
    K = Subspace(2, (unit_vector(2, 0), unit_vector(2, 1)))
    assert orthogonal_complement(C, K).dim == 0
    assert not dirac_check(C, K)["self-orthogonal"].passed
    assert orthogonal_complement(C, Subspace(2, ())).dim == 2


def test_dirac_closure_failure():
    # V-line is Lagrangian in omni(1) and closed; gl + V mix is not isotropic
    C = build_omni(1)
    assert dirac_check(C, Subspace(2, ((0, 1),))).passed
    assert not dirac_check(C, Subspace(2, ((1, 1),)))["self-orthogonal"].passed
