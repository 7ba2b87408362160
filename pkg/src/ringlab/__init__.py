"""ringlab: exact complementedness classification of finite commutative rings.

Finite rings are materialized operation tables; every element- and ring-level
predicate is decided by exhaustive witness search.  Infinite constructions
(idealizations over the integers, polynomial rings) are classified by a
structure-rule engine with three-valued verdicts, cross-validated against the
exhaustive engine on finite instances.
"""

from ringlab.classify import (
    PREDICATES,
    PropertyReport,
    TheoremReport,
    Verdict,
    aregular_quotient,
    classical_quotient,
    classify_ring,
    verify_hierarchy,
    verify_theorems,
)
from ringlab.core import (
    CapExceededError,
    ConstructionError,
    FiniteRing,
    InternalConsistencyError,
    ModuleSpec,
    RingLabError,
    Violation,
    construct_poly_trunc,
    construct_product,
    construct_quotient,
    construct_trivial_extension,
    construct_zn,
    module_over_zn,
    validate_ring_axioms,
)
from ringlab.elements import (
    ElementProfile,
    Witness,
    WitnessKind,
    find_almost_complement,
    find_complement,
    find_pi_complement,
    find_rough_complement,
    profile_element,
)
from ringlab.spectrum import (
    Ideal,
    SpectrumReport,
    annihilator,
    enumerate_ideals,
    eta_ideal,
    has_annihilator_condition,
    has_property_A,
    ideal_generated,
    is_dense,
    jacobson_radical,
    nilradical,
    prime_spectrum,
)
from ringlab.structural import (
    CrossValidationError,
    IntegerRing,
    ModuleExpr,
    Poly,
    PolyTrunc,
    Product,
    Quotient,
    SchemaError,
    StructuralReport,
    TrivExt,
    Zn,
    classify_expr,
    cross_validate,
    parse_ring_expr,
    poly_content_regularity,
    polynomial_cofactor,
    profile_symbolic_element,
    realize_finite,
)

__version__ = "0.1.0"
