"""Named built-in tensors for the command line: zero, aff1, rot2, ad, det3."""

from __future__ import annotations

from .algebra import aff1, rotation, zero_tensor
from .constructions import determinant_lie2, identity_crossed_module
from .errors import InputError

PRESETS = ("zero", "aff1", "rot2", "ad", "det3")


def pi_preset(name: str, n: int):
    """A bracket tensor on V (dim n): ``zero`` or ``aff1`` (n = 2)."""
    if name == "zero":
        return zero_tensor(n, n, n)
    if name == "aff1":
        if n != 2:
            raise InputError("preset 'aff1' needs dim V = 2")
        return aff1().bracket
    raise InputError(f"unknown bracket preset {name!r}")


def endomorphism_preset(name: str, n: int):
    if name == "rot2":
        if n != 2:
            raise InputError("preset 'rot2' needs dim V = 2")
        return rotation(2)
    raise InputError(f"unknown endomorphism preset {name!r}")


def crossed_module_preset(name: str):
    """``ad``: the crossed module (aff1, aff1, id, ad)."""
    if name == "ad":
        return identity_crossed_module(aff1())
    raise InputError(f"unknown crossed-module preset {name!r}")


def lie2_preset(name: str):
    """``det3``: the skeletal Lie 2-algebra on Q^3 + Q with l3 = det."""
    if name == "det3":
        return determinant_lie2()
    raise InputError(f"unknown Lie 2-algebra preset {name!r}")
