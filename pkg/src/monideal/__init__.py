"""Monomial ideals: decompositions, growth of powers, tight closure, regularity."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    MonomialIdeal,
    Ring,
    colon,
    colon_ideal,
    contains_ideal,
    contains_monomial,
    frobenius_power,
    ideal_sum,
    intersect,
    max_exponent,
    minimalize,
    power,
    product,
    radical,
    radical_variables,
    saturate,
)
from .decomposition import (  # noqa: E402
    check_localization,
    exponent_index,
    irreducible_decompose,
    generator_component_exponents,
    minimal_primes,
    primary_decompose,
    tight_closure,
    verify_growth_frobenius,
    verify_growth_ordinary,
)
from .regularity import (  # noqa: E402
    betti_table,
    bs_primary_bound,
    is_strongly_stable,
    regularity,
    linear_regularity_bound,
    verify_regularity_bound,
)

__all__ = [
    "MonomialIdeal",
    "Ring",
    "betti_table",
    "bs_primary_bound",
    "check_localization",
    "colon",
    "colon_ideal",
    "contains_ideal",
    "contains_monomial",
    "exponent_index",
    "frobenius_power",
    "generator_component_exponents",
    "ideal_sum",
    "intersect",
    "irreducible_decompose",
    "is_strongly_stable",
    "linear_regularity_bound",
    "max_exponent",
    "minimal_primes",
    "minimalize",
    "power",
    "primary_decompose",
    "product",
    "radical",
    "radical_variables",
    "regularity",
    "saturate",
    "tight_closure",
    "verify_growth_frobenius",
    "verify_growth_ordinary",
    "verify_regularity_bound",
]
