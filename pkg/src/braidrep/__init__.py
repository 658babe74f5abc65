"""Exact computation with a braid representation built from collinearity
events of point motions, strong enough to separate elements that the
Burau representation cannot."""

from .braids import (
    BraidWord,
    COMMUTATOR_ABA_B,
    COMMUTATOR_A_B_AB,
    DEFAULT_COMMUTATOR_CONVENTION,
    bigelow_beta,
    commutator,
)
from .gn3 import GnWord, NotPureError, SemidirectElement, phi_generator, phi_pure, phi_word
from .laurent import LaurentPoly, LaurentRing, ParseError, rational_str
from .matrixrep import (
    NumericMatrix,
    PolyMatrix,
    RepMatrix,
    burau_reduced,
    burau_unreduced,
    check_braid_relations,
    check_relations,
    corner_entry,
    numeric_rep_of_pure_braid,
    numeric_rep_of_word,
    rep_of_pure_braid,
    rep_of_word,
    rho_generator,
    specialize,
    strand_assignment,
)
from .permutations import Permutation

__all__ = [
    "BraidWord",
    "COMMUTATOR_ABA_B",
    "COMMUTATOR_A_B_AB",
    "DEFAULT_COMMUTATOR_CONVENTION",
    "GnWord",
    "LaurentPoly",
    "LaurentRing",
    "NotPureError",
    "NumericMatrix",
    "ParseError",
    "Permutation",
    "PolyMatrix",
    "RepMatrix",
    "SemidirectElement",
    "bigelow_beta",
    "burau_reduced",
    "burau_unreduced",
    "check_braid_relations",
    "check_relations",
    "commutator",
    "corner_entry",
    "numeric_rep_of_pure_braid",
    "numeric_rep_of_word",
    "phi_generator",
    "phi_pure",
    "phi_word",
    "rational_str",
    "rep_of_pure_braid",
    "rep_of_word",
    "rho_generator",
    "specialize",
    "strand_assignment",
]

__version__ = "0.1.0"
