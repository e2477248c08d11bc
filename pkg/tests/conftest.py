import importlib

import pytest

from ecourant import _kernels_py


def _backends():
    out = [pytest.param(_kernels_py, id="python")]
    try:
        mod = importlib.import_module("ecourant._kernels")
        out.append(pytest.param(mod, id="cython"))
    except ImportError:
        out.append(pytest.param(None, id="cython", marks=pytest.mark.skip(reason="extension not built")))
    return out


@pytest.fixture(params=_backends())
def backend(request):
    return request.param
