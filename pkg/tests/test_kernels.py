import os
import subprocess
import sys
from fractions import Fraction as F

from ecourant import kernels
from ecourant.scalars import GaussianRational


def test_contract2(backend):
    c = (((F(0), F(0)), (F(0), F(1))), ((F(0), F(-1)), (F(0), F(0))))
    assert list(backend.contract2(c, (F(2), F(3)), (F(5), F(7)), 2)) == [0, 2 * 7 - 3 * 5]


def test_matmul_matvec(backend):
    a = ((F(1), F(2)), (F(3), F(4)))
    assert [list(r) for r in backend.matmul(a, a)] == [[7, 10], [15, 22]]
    assert list(backend.matvec(a, (F(1), F(-1)))) == [-1, -1]


def test_row_reduce(backend):
    rows = [[F(2), F(4), F(6)], [F(1), F(2), F(4)]]
    piv = backend.row_reduce(rows, 3)
    assert piv == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]


def test_row_reduce_gaussian(backend):
    i = GaussianRational(0, 1)
    rows = [[i, F(1)], [F(1), -i]]
    assert backend.row_reduce(rows, 2) == [0]
    assert rows[0] == [1, -i]


def test_fallback_selected_by_env():
    env = dict(os.environ, ECOURANT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import ecourant.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")


def test_backends_agree_on_report():
    code = ("from ecourant.constructions import build_omni;from ecourant.courant import check_ec_axioms;"
            "from ecourant.io import canonical_json;print(canonical_json(check_ec_axioms(build_omni(2)).to_json()))")
    outs = []
    for flag in ("1", "0"):
        env = dict(os.environ, ECOURANT_PURE_PYTHON=flag)
        outs.append(subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                                   text=True, check=True).stdout)
    assert outs[0] == outs[1]
