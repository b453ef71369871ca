"""Exact factorization invariants of affine semigroups."""

__version__ = "0.1.0"

from .errors import (
    ArithmeticOverflow,
    BudgetExceeded,
    CatenaError,
    DuplicateGenerator,
    FiberCapExceeded,
    InvalidSemigroup,
    NotMinimalGenerating,
    NotReduced,
    ZeroGenerator,
)
from .diophantine import (
    graver_basis,
    kernel_lattice_basis,
    minimal_nonneg_solutions,
    positivity_witness,
    rational_solve_all_ones,
)
from .semigroup import (
    AffineSemigroup,
    atoms,
    lift_eq,
    lift_hom,
    member,
    minimize,
    new_semigroup,
    parse_element,
    parse_generators,
)
from .fibers import FiberGraph, distance, factorizations, lengths, nabla_graph
from .catenary import (
    BoundedScan,
    CatenaryResult,
    catenary_element,
    catenary_monoid,
    equal_catenary_element,
    equal_catenary_monoid,
    homogeneous_catenary_element,
    homogeneous_catenary_monoid,
    monotone_catenary_element,
    monotone_catenary_monoid_bounded,
)
from .toric import (
    Binomial,
    BettiElement,
    Presentation,
    betti_elements,
    betti_oracle,
    minimal_generators,
    toric_generators,
)
from .invariants import (
    MinimalFiberCover,
    minimal_fiber_cover,
    omega_element,
    omega_monoid,
    tame_element,
    tame_lift_bound_check,
    tame_monoid,
)
