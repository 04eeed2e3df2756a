"""Braid monodromy of real plane curves from skeletons carried through
Lefschetz diffeomorphisms, with an independent root-tracking oracle."""

from .braid import BraidWord, full_twist
from .curve import CurvePoly
from .engine import Factorization, braid_monodromy, verify_factorization
from .errors import BraidMonError, GenericityError, NumericError, UnsupportedSingularity

__all__ = [
    "BraidWord", "CurvePoly", "Factorization", "braid_monodromy", "full_twist",
    "verify_factorization", "BraidMonError", "GenericityError", "NumericError",
    "UnsupportedSingularity",
]
__version__ = "0.1.0"
