"""Numerical semigroups with a prescribed set of pseudo-Frobenius numbers."""

from .enumeration import ending_condition, explore, semigroups_with_pseudo_frobenius
from .errors import (
    BoundExceeded,
    EmptyInput,
    GcdNotOne,
    InvalidPF,
    NoPositiveElement,
    NotAGapSet,
    PFSemiError,
    TimeBudgetExceeded,
)
from .forced import (
    Fail,
    ForcedState,
    PFTarget,
    check_naive_condition,
    close_elements,
    forced_integers,
    forced_integers_quick,
    further_forced_elements,
    further_forced_gaps,
    non_admissible,
    simple_forced_integers,
    starting_forced_gaps,
)
from .irreducible import (
    an_irreducible_with_frobenius,
    enumerate_via_irreducibles,
    irreducibles_containing,
    irreducibles_with_frobenius,
)
from .oracle import OracleIndex, all_semigroups_with_frobenius, build_index, oracle_spf
from .randomized import (
    AttemptsExhausted,
    DefinitelyEmpty,
    RandomConfig,
    RandomSearch,
    random_search,
    random_semigroup,
)
from .result import EnumerationResult, SearchStats
from .semigroup import (
    NATURALS,
    NumSemigroup,
    closure,
    from_gaps,
    from_generators,
    frobenius_number,
    is_irreducible,
    minimal_generators,
    multiplicity,
    pseudo_frobenius,
    represents_gaps,
    type_of,
)

__version__ = "0.1.0"
