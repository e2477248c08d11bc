"""Exact verification of E-Courant structures over a point, their standard
constructions, and generalized complex structures on them."""

__version__ = "0.1.0"

from .kernels import BACKEND  # noqa: E402
from .scalars import GaussianRational, format_scalar, parse_scalar  # noqa: E402
from .algebra import (  # noqa: E402
    LeibnizAlgebra, LieAlgebra, Representation, check_complex_structure, check_leibniz,
    check_lie, check_representation, nijenhuis_tensor,
)
from .courant import (  # noqa: E402
    ECourantStructure, check_anchor_lemma, check_ec_axioms, dirac_check, orthogonal_complement,
    pairing_flat, rho_star,
)
from .constructions import (  # noqa: E402
    CrossedModule, LieTwoAlgebra, build_crossed_courant, build_lie2_courant, build_omni,
    check_crossed_module, check_lie_two, crossed_to_lie2,
)
from .gcs import (  # noqa: E402
    GeneralizedComplexStructure, OmniGCSData, build_nijenhuis_gcs, build_omni_gcs,
    check_gcs_algebraic, check_gcs_integrable, eigenbundle, induced_bracket,
)
