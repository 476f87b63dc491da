"""Exact Chevalley-Eilenberg cohomology of nilpotent and solvable Lie algebras.

Cup-length, cohomological symplecticness and the category / closed-orbit
bounds that follow from them for the associated nilmanifolds.
"""

from .bounds import (
    BoundsReport,
    DerivationStep,
    asphericity_report,
    cat_of_nilmanifold,
    check_steps,
    full_report,
    orbit_bounds,
    swgt_chain,
)
from .cohomology import CohClass, CohomologyRing, cohomology, cohomology_ring
from .complex import CEComplex, apply_d, build_complex, differential_on_generator
from .errors import ComplexError, InputError, InvalidAlgebraError, NilcohError, UnsupportedQueryError
from .exterior import ExteriorElement, format_element, wedge
from .invariants import (
    CupLengthResult,
    SymplecticnessResult,
    cup_length,
    cup_length_oracle,
    is_cohomologically_symplectic,
    verify_class,
)
from .lie import (
    LieAlgebra,
    catalog,
    classify,
    derived_series,
    direct_sum,
    heisenberg,
    is_nilpotent,
    is_solvable,
    kodaira_thurston,
    lookup,
    lower_central_series,
    torus,
    validate,
)

__version__ = "0.1.0"
