from .characters import (
    CharacterVector,
    ConjugacyClass,
    character,
    character_table,
    mn_character,
    partitions_of,
    partitions_up_to,
    triple_inner,
)
from .coefficients import (
    kronecker,
    kronecker_at,
    littlewood_richardson,
    reduced_kronecker,
    stabilization_sequence,
    tensor_decomposition,
    top_degree_product,
)
from .deligne import (
    categorical_dimension,
    class_chain,
    dimension_polynomial,
    equivalent,
    hom_dim,
    hom_dim_via_lift,
    is_semisimple_parameter,
    is_trivial_class,
    lift,
    locate_in_class,
    multiplicity_at_integer,
    object_status,
    partial_sums,
    specialize,
)
from .partitions import bar, dagger, dim_irrep, mu_sequence, parse_partition, tilde

__all__ = [
    # Partition core
    "parse_partition",
    "tilde",
    "bar",
    "dagger",
    "mu_sequence",
    "dim_irrep",
    # Characters
    "ConjugacyClass",
    "CharacterVector",
    "partitions_of",
    "partitions_up_to",
    "mn_character",
    "character",
    "character_table",
    "triple_inner",
    # Coefficients
    "kronecker",
    "kronecker_at",
    "littlewood_richardson",
    "reduced_kronecker",
    "stabilization_sequence",
    "tensor_decomposition",
    "top_degree_product",
    # Deligne structure
    "equivalent",
    "class_chain",
    "locate_in_class",
    "is_trivial_class",
    "lift",
    "hom_dim",
    "hom_dim_via_lift",
    "object_status",
    "specialize",
    "is_semisimple_parameter",
    "multiplicity_at_integer",
    "partial_sums",
    "dimension_polynomial",
    "categorical_dimension",
]
