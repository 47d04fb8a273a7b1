"""Exact Laurent-polynomial syzygy calculus on weight lattices and the
degree-3 invariant groups Q, Dec, Sdec of semisimple group quotients."""

from .laurent import (
    DivisionPreconditionError,
    Grading,
    LaurentPoly,
    RankMismatchError,
    RingMismatchError,
    ZeroPolynomialError,
    augmentation,
    bounded_divide,
    degrees,
    from_text,
    graded_components,
    homogeneous_component,
    is_divisor,
    lift_coefficients,
    reduce_coefficients,
    ring_arithmetic,
    to_text,
)
from .rootdata import (
    GroupSpec,
    KillingForm,
    LatticeModel,
    SimpleFactor,
    compile_spec,
    killing_forms,
    orbit_poly,
    orbit_size,
    weyl_orbit,
)
from .syzygy import (
    FlatnessError,
    NotASyzygyError,
    SyzygyCertificate,
    TransformMatrix,
    check_flatness,
    lift_syzygy,
    newton_transform,
    normalize_coefficients,
    trivialize_generalized,
    trivialize_syzygy,
)
from .generators import (
    GcdChain,
    GeneratorSet,
    build_generators,
    expand_combination,
    gcd_chain,
    reduce_to_generators,
)
from .invariants import (
    FactorGroup,
    InvariantLattice,
    QuotientRing,
    TruncatedForm,
    c2,
    c2_orbit,
    compute_Dec,
    compute_Q,
    compute_Sdec,
    factor_group,
    invariants_of,
    pgo8_parity_check,
    quotient_reduction,
)
from .cli import parse_spec, spec_to_text

__all__ = [name for name in dir() if not name.startswith("_")]
