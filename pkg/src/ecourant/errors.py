class CourantError(Exception):
    """Base class for errors raised by ecourant."""


class InputError(CourantError, ValueError):
    """Malformed or inconsistent input (dimensions, shapes, symmetry)."""


class DimensionGuardError(InputError):
    """An ambient dimension exceeds the configured guard."""


class AxiomViolation(CourantError):
    """A construction step needed an axiom that does not hold (e.g. EC-4)."""


class NotAlmostComplexError(CourantError):
    pass


class NotIntegrableError(CourantError):
    pass


class InadmissibleError(CourantError):
    """An operator on gl(V) whose dual does not preserve V."""


class NonzeroSigmaError(CourantError):
    """A nonzero element of Hom(wedge^2 gl(V), V)_V, which is the zero space."""


class NotAutomorphismError(CourantError):
    pass


DEFAULT_MAX_DIM = 64


def guard_dim(dim: int, max_dim: int | None = None, what: str = "ambient dimension") -> None:
    limit = DEFAULT_MAX_DIM if max_dim is None else max_dim
    if dim > limit:
        raise DimensionGuardError(f"{what} {dim} exceeds the guard {limit} (see --max-dim)")
