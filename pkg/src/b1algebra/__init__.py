"""Finite modules and algebras over the two-element Boolean semifield.

Finite modules are lattices, free ones are powersets, algebras carry a
bilinear product, polynomials in named variables form the free algebra,
and one-generator algebras can be enumerated outright. A functor pair
connects algebras with plain commutative monoids.
"""

from .algebra import (
    AlgebraMorphism,
    Congruence,
    FinAlgebra,
    algebra_automorphisms,
    algebra_morphism,
    algebra_morphisms,
    all_congruences,
    b1_algebra,
    canonical_key,
    congruence_closure,
    is_maximal,
    isomorphic,
    marked_isomorphic,
    quotient,
    validate_algebra,
    validate_congruence,
)
from .core_lattice import (
    FinModule,
    FinPoset,
    ModuleMorphism,
    b1_module,
    birkhoff,
    downset_lattice,
    embeds_in_powerset,
    enumerate_lattices,
    enumerate_posets,
    intersection_retraction,
    is_bijective,
    is_distributive,
    is_modular,
    is_projective,
    join_irreducibles,
    meet,
    module_of_order,
    module_morphism,
    module_morphisms,
    order_of,
    powerset_module,
    validate_module,
    validate_poset,
)
from .errors import (
    B1Error,
    CollapsesZeroOne,
    LawViolation,
    NoBottom,
    NotAGroup,
    NotSubmonoid,
    NoUnit,
    PolyParseError,
    SizeTooLarge,
    StructureParseError,
    TooLarge,
    UnknownVariable,
    VariableMismatch,
    ZeroEqualsOne,
)
from .free_boolean import (
    FreeModule,
    Permutation,
    automorphisms,
    brute_force_automorphisms,
    free_extend,
    free_module,
    perm_to_aut,
)
from .monogenic import (
    MonogenicAlgebra,
    Presentation,
    brute_force_count,
    close_presentation,
    enumerate_monogenic,
    parse_presentation,
    render_presentation,
    unmarked_count,
    zhu_formula,
)
from .monoid_functor import (
    FinMonoid,
    FullFaithfulness,
    MonoidMorphism,
    all_monoids,
    cyclic_group,
    direct_product,
    extend_by_joins,
    full_faithfulness_check,
    is_group,
    is_integral_over,
    monoid_morphism,
    monoid_morphisms,
    multiplicative_monoid,
    powerset_algebra,
    powerset_algebra_map,
    restrict_to_singletons,
    submonoid,
    submonoids,
    units,
    validate_monoid,
)
from .polynomial import (
    Poly,
    battery_polys,
    default_seed,
    distinguishing_witness,
    equal_mod_zero_set,
    evaluate,
    make_poly,
    maxspec,
    one_poly,
    parse_poly,
    poly_add,
    poly_mul,
    render_poly,
    sampled_battery,
    set_vars_to_zero,
    variable_poly,
    zero_poly,
)
from .structure_io import load_structure, parse_structure, render_structure

__version__ = "0.1.0"
