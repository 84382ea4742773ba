"""Enumerate the numerical semigroup tree and study semigroups by genus and type."""
from .semigroup import (
    NATURALS,
    EmptyGeneratorSet,
    MaxTypeCheck,
    NonCoprimeGenerators,
    NotASemigroup,
    NumericalSemigroup,
    PseudoFrobeniusSet,
    RootHasNoParent,
    SemigroupError,
    from_gap_set,
    from_generators,
    max_type_check,
    minimal_generators,
    parent,
    pseudo_frobenius,
    type_of,
)
from .tree import (
    CountTable,
    ExplorationConfig,
    TreeStatistics,
    children,
    count_table,
    descendant_type_profile,
    explore,
    family_profile,
    is_leaf,
    iter_semigroups,
    leaf_table,
    semigroups_of_genus,
    tabulate,
    to_dot,
)

__version__ = "0.1.0"
