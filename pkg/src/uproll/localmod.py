"""The category of local modules, in numbers.

For a valid (super)commutative spec the simple local modules are indexed
by the quotient of the scaled dual of the extended lattice by the
lattice itself.  This module computes that census together with the
twist and monodromy exponents, a ribbon verdict, and a scan for
transparent simples.

The ribbon condition implemented here is sufficient only, so its
negative answer is reported as "inconclusive" rather than as a
non-ribbon claim.  The transparency scan is exact on simples; promoting
"only the unit is transparent" to "trivial Mueger center" additionally
needs r to divide no 2*d_i, and that hypothesis is surfaced as a flag
instead of being assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraSpec, spec_verdict
from .cartan import CartanDatum, ExponentModL, Weight, is_multiple, pairing
from .errors import AlgebraInvalid, InfiniteCensus
from .lattice import Census, quotient_census, scaled_dual


def _require_valid(spec: AlgebraSpec):
    verdict = spec_verdict(spec)
    if not verdict:
        kind = "supercommutative" if spec.mu is not None else "commutative"
        raise AlgebraInvalid(
            f"spec is not {kind}; witnesses: {verdict.witnesses}"
        )
    return verdict


def is_local(spec: AlgebraSpec, lam: Weight) -> bool:
    """Locality of the module induced from highest weight lam.

    Holds exactly when 2<lam, g> lies in ell*Z for every generator of
    the extended lattice.
    """
    _require_valid(spec)
    ell = spec.datum.ell
    return all(
        is_multiple(2 * pairing(spec.datum, lam, g), ell)
        for g in spec.extended_generators
    )


def simple_census(spec: AlgebraSpec) -> Census:
    """Census of simple local modules: scaled dual modulo the lattice."""
    _require_valid(spec)
    dual = scaled_dual(spec.datum, spec.extended_lattice)
    return quotient_census(spec.datum, dual, spec.extended_lattice)


def twist_exponent(datum: CartanDatum, lam: Weight) -> ExponentModL:
    """Exponent of the twist scalar on the simple of highest weight lam:
    <lam, lam + 2(1-r) rho> mod ell."""
    shifted = lam + (2 * (1 - datum.r)) * datum.rho
    return ExponentModL(pairing(datum, lam, shifted), datum.ell)


def monodromy_exponent(datum: CartanDatum, lam: Weight, mu: Weight) -> ExponentModL:
    """Exponent of the double braiding between two simples: 2<lam, mu> mod ell."""
    return ExponentModL(2 * pairing(datum, lam, mu), datum.ell)


@dataclass(frozen=True)
class RibbonVerdict:
    status: str  # "ribbon" or "inconclusive"
    witnesses: tuple

    def __bool__(self) -> bool:
        return self.status == "ribbon"


def check_ribbon(spec: AlgebraSpec) -> RibbonVerdict:
    """Sufficient ribbon test on generators.

    Reports "ribbon" when 2(1-r)<g, rho> lies in ell*Z for every even
    generator and, for a superalgebra, 2(1-r)<mu, rho> lies in (ell/2)*Z.
    Anything else is "inconclusive": the test cannot certify a negative.
    """
    _require_valid(spec)
    datum = spec.datum
    factor = 2 * (1 - datum.r)
    bad = []
    for i, g in enumerate(spec.generators):
        val = factor * pairing(datum, g, datum.rho)
        if not is_multiple(val, datum.ell):
            bad.append(("generator", i, val))
    if spec.mu is not None:
        val = factor * pairing(datum, spec.mu, datum.rho)
        if not is_multiple(val, Fraction(datum.ell, 2)):
            bad.append(("odd", len(spec.generators), val))
    return RibbonVerdict("inconclusive" if bad else "ribbon", tuple(bad))


@dataclass(frozen=True)
class MugerReport:
    """Transparency scan over the census representatives."""

    transparent_reps: tuple[Weight, ...]
    trivial: bool
    hypothesis_ok: bool


def muger_center(spec: AlgebraSpec) -> MugerReport:
    """Transparent simples, and whether only the unit coset is transparent.

    A representative lam is transparent when <lam, gamma> lies in
    (ell/2)*Z for every representative gamma; testing representatives
    suffices because the pairing descends to cosets for weights in the
    dual group.  hypothesis_ok records whether r divides no 2*d_i, the
    assumption under which "trivial" rules out transparent extensions as
    well.
    """
    census = simple_census(spec)
    if not census.finite:
        raise InfiniteCensus("transparency scan needs a finite census")
    datum = spec.datum
    half = Fraction(datum.ell, 2)
    reps = census.reps
    transparent = tuple(
        lam
        for lam in reps
        if all(is_multiple(pairing(datum, lam, gamma), half) for gamma in reps)
    )
    trivial = len(transparent) == 1
    hypothesis_ok = all((2 * d) % datum.r != 0 for d in datum.symmetrizers)
    return MugerReport(transparent, trivial, hypothesis_ok)


@dataclass(frozen=True)
class LocalReport:
    """Census, per-representative twists, ribbon verdict, transparency scan."""

    census: Census
    twists: dict
    ribbon: RibbonVerdict
    muger: MugerReport


def local_report(spec: AlgebraSpec) -> LocalReport:
    """Full structure report for a finite-census spec."""
    census = simple_census(spec)
    if not census.finite:
        raise InfiniteCensus("full report needs a finite census")
    twists = {rep: twist_exponent(spec.datum, rep) for rep in census.reps}
    return LocalReport(census, twists, check_ribbon(spec), muger_center(spec))
