"""Algebraic immunity of Boolean functions over F_2 and over GF(2^n)."""

from .annihilator import (
    AiReport,
    Mode,
    MonomialBasis,
    Side,
    algebraic_immunity,
    algebraic_immunity_ext,
    annihilator_space,
    component_check,
    is_pai,
    monomial_basis,
    verify_equivalence,
    verify_pai_equivalence,
)
from .boolfun import AnfPoly, TruthTable, anf_from_tt, complement, degree, is_balanced, multiply, tt_from_anf, weight
from .constructions import carlet_feng, majority
from .gf2n import (
    Basis,
    FieldElement,
    FieldMismatchError,
    FieldSpec,
    dual_basis,
    element_to_index,
    field_new,
    find_primitive,
    index_to_element,
    self_dual_basis,
    trace,
)
from .univariate import (
    ExtMultivariatePoly,
    UnivariatePoly,
    decompose,
    evaluate,
    ext_degree,
    interpolate,
    is_boolean,
    recompose,
    to_multivariate,
    wt_degree,
)

__version__ = "0.1.0"
