"""Exact classification of lattice simple-current extension algebras and
the structure of their categories of local modules."""

from .cartan import (
    CartanDatum,
    ExponentModL,
    Weight,
    alpha_coordinates,
    build_cartan_datum,
    exponent,
    in_root_lattice,
    in_simple_current_lattice,
    is_integer,
    is_multiple,
    pairing,
    weight,
)
from .lattice import (
    AdjoinResult,
    Census,
    DualGroup,
    RationalLattice,
    adjoin,
    canonical_basis,
    contains,
    coset_reduce,
    quotient_census,
    scaled_dual,
)
from .algebra import (
    AlgebraSpec,
    CocycleTable,
    CocycleVerdict,
    CommutativityVerdict,
    GaugeResult,
    SuperVerdict,
    Witness,
    apply_coboundary,
    check_commutative,
    check_supercommutative,
    cocycle_check,
    exponent_from_coefficients,
    gauge_normalize,
    spec_verdict,
    structure_constant_exponent,
    structure_constant_table,
)
from .localmod import (
    LocalReport,
    MugerReport,
    RibbonVerdict,
    check_ribbon,
    is_local,
    local_report,
    monodromy_exponent,
    muger_center,
    simple_census,
    twist_exponent,
)
from .extensions import (
    BqSpec,
    ExtWeight,
    TripletReport,
    bq_check_commutative,
    bq_equivalent,
    bq_is_local,
    bq_monodromy_exponent,
    bq_ribbon_verdict,
    bq_transparent,
    bq_twist_exponent,
    triplet_report,
    weight_lattice_scaled,
)
from .oracle import Box, brute_census_order, brute_cocycle, brute_commutativity
from . import errors

__all__ = [name for name in dir() if not name.startswith("_")]
