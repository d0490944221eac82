"""Exact lattice algebra over the weight space.

A finitely generated subgroup of the rational weight space is stored as
its generator list together with a canonical basis: an integer matrix in
row-style Hermite normal form over a single common denominator.  The
canonical form depends only on the span, so lattice equality is literal
equality of (ambient rank, denominator, HNF rows).

Scaled dual groups and quotient censuses are computed from these bases
with exact integer normal forms; nothing here ever touches floating
point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from . import _linalg
from .cartan import CartanDatum, Weight, is_multiple, pairing
from .errors import DimensionMismatch, NotSubgroup


@dataclass(frozen=True, eq=False)
class RationalLattice:
    """Finitely generated subgroup of the weight space."""

    rank_ambient: int
    generators: tuple[Weight, ...]
    hnf: tuple[tuple[int, ...], ...]
    denominator: int

    @property
    def rank(self) -> int:
        return len(self.hnf)

    @property
    def canonical_rows(self) -> tuple[Weight, ...]:
        d = self.denominator
        return tuple(
            Weight(tuple(Fraction(v, d) for v in row)) for row in self.hnf
        )

    def contains(self, lam: Weight) -> bool:
        return contains(self, lam)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalLattice):
            return NotImplemented
        return (
            self.rank_ambient == other.rank_ambient
            and self.denominator == other.denominator
            and self.hnf == other.hnf
        )

    def __hash__(self) -> int:
        return hash((self.rank_ambient, self.denominator, self.hnf))

    def __repr__(self) -> str:
        rows = ", ".join(repr(w) for w in self.canonical_rows)
        return f"RationalLattice(rank {self.rank} in ambient {self.rank_ambient}: {rows})"


def canonical_basis(datum: CartanDatum, generators) -> RationalLattice:
    """Canonical form of the subgroup generated by the given weights.

    The generators are cleared to an integer matrix by their least common
    denominator, which is then reduced to row Hermite normal form.
    """
    gens = tuple(generators)
    n = datum.rank
    for g in gens:
        if len(g) != n:
            raise DimensionMismatch(f"generator {g!r} must have length {n}")
    den = lcm(1, *(c.denominator for g in gens for c in g.coords)) if gens else 1
    rows = [[int(c * den) for c in g.coords] for g in gens]
    hnf = _linalg.row_hermite_form(rows)
    return RationalLattice(
        rank_ambient=n,
        generators=gens,
        hnf=tuple(tuple(r) for r in hnf),
        denominator=den,
    )


def contains(lattice: RationalLattice, lam: Weight) -> bool:
    """Exact membership test by back-substitution against the HNF basis."""
    if len(lam) != lattice.rank_ambient:
        raise DimensionMismatch(
            f"weight must have length {lattice.rank_ambient}"
        )
    v = [c * lattice.denominator for c in lam.coords]
    for row in lattice.hnf:
        p = next(j for j, x in enumerate(row) if x)
        if any(v[:p]):
            return False
        coeff = v[p] / row[p]
        if coeff.denominator != 1:
            return False
        if coeff:
            v = [a - coeff * b for a, b in zip(v, row)]
    return not any(v)


def coset_reduce(lattice: RationalLattice, lam: Weight) -> Weight:
    """Canonical representative of lam modulo the lattice.

    Subtracts integer multiples of the HNF rows, left to right, until the
    scaled coordinate at each pivot lies in [0, pivot).  Two weights are
    congruent modulo the lattice exactly when they reduce to the same
    representative.
    """
    if len(lam) != lattice.rank_ambient:
        raise DimensionMismatch(
            f"weight must have length {lattice.rank_ambient}"
        )
    v = [c * lattice.denominator for c in lam.coords]
    for row in lattice.hnf:
        p = next(j for j, x in enumerate(row) if x)
        q = v[p] // row[p]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    den = lattice.denominator
    return Weight(tuple(Fraction(a, den) if a else Fraction(0) for a in v))


@dataclass(frozen=True)
class AdjoinResult:
    """Outcome of adjoining one weight to a lattice."""

    lattice: RationalLattice
    mu_in_lattice: bool
    two_mu_in_lattice: bool


def adjoin(lattice: RationalLattice, mu: Weight) -> AdjoinResult:
    """Canonical form of L + Z*mu, with the flags (mu in L, 2*mu in L)."""
    mu_in = contains(lattice, mu)
    two_in = contains(lattice, 2 * mu)
    den = lcm(lattice.denominator, *(c.denominator for c in mu.coords), 1)
    scale = den // lattice.denominator
    rows = [[v * scale for v in row] for row in lattice.hnf]
    rows.append([int(c * den) for c in mu.coords])
    hnf = _linalg.row_hermite_form(rows)
    new = RationalLattice(
        rank_ambient=lattice.rank_ambient,
        generators=lattice.generators + (mu,),
        hnf=tuple(tuple(r) for r in hnf),
        denominator=den,
    )
    return AdjoinResult(new, mu_in, two_in)


@dataclass(frozen=True)
class DualGroup:
    """The group of weights pairing into (ell/2) Z with every element of L.

    When L has full rank this is itself a full lattice and lattice_part
    describes it completely.  Otherwise the group contains a continuum:
    lattice_part is the dual restricted to the rational span of L, and
    complement_dimension counts the orthogonal directions.
    """

    datum: CartanDatum
    source: RationalLattice
    complement_dimension: int
    lattice_part: RationalLattice

    def contains_weight(self, lam: Weight) -> bool:
        """Direct test of the defining condition 2<lam, g> in ell*Z."""
        return all(
            is_multiple(2 * pairing(self.datum, lam, g), self.datum.ell)
            for g in self.source.canonical_rows
        )


def scaled_dual(datum: CartanDatum, lattice: RationalLattice) -> DualGroup:
    """The scaled dual group {x : 2<x, g> in ell*Z for all g in L}."""
    n = datum.rank
    k = lattice.rank
    if k == 0:
        empty = canonical_basis(datum, ())
        return DualGroup(datum, lattice, n, empty)
    basis = lattice.canonical_rows
    gram = [
        [2 * pairing(datum, a, b) / datum.ell for b in basis] for a in basis
    ]
    coeffs = _linalg.mat_inverse(gram)
    rows = [
        Weight(
            tuple(
                sum(coeffs[i][j] * basis[j].coords[c] for j in range(k))
                for c in range(n)
            )
        )
        for i in range(k)
    ]
    part = canonical_basis(datum, rows)
    return DualGroup(datum, lattice, n - k, part)


@dataclass(frozen=True)
class Census:
    """Structure of the quotient of a dual group by the lattice inside it."""

    finite: bool
    free_rank: int
    invariant_factors: tuple[int, ...]
    reps: tuple[Weight, ...] | None
    order: int | None
    complement_dimension: int


def _change_of_basis(dual_rows, lattice_rows) -> list[list[int]]:
    mat = []
    for row in lattice_rows:
        coeffs = _linalg.combination_in_rows(
            [list(w.coords) for w in dual_rows], list(row.coords)
        )
        assert coeffs is not None, "lattice row left the dual span"
        assert all(c.denominator == 1 for c in coeffs), (
            "lattice row is not an integer combination of the dual basis"
        )
        mat.append([int(c) for c in coeffs])
    return mat


def quotient_census(
    datum: CartanDatum, dual: DualGroup, lattice: RationalLattice
) -> Census:
    """Invariant factors and coset representatives of dual / lattice.

    Every generator of the lattice must satisfy the dual condition; a
    failure raises NotSubgroup, which signals a non-local summand
    upstream.  Representatives are enumerated only for finite quotients,
    as the lexicographically smallest non-negative coefficient vectors in
    the Smith-adapted dual basis.
    """
    for g in lattice.canonical_rows:
        if not dual.contains_weight(g):
            raise NotSubgroup(f"lattice generator {g!r} fails the dual condition")
    dual_rows = dual.lattice_part.canonical_rows
    if lattice.rank == 0:
        finite = dual.complement_dimension == 0 and len(dual_rows) == 0
        return Census(
            finite=finite,
            free_rank=0,
            invariant_factors=(),
            reps=(Weight.zero(datum.rank),) if finite else None,
            order=1 if finite else None,
            complement_dimension=dual.complement_dimension,
        )
    change = _change_of_basis(dual_rows, lattice.canonical_rows)
    diag, vinv = _linalg.smith_normal_form(change)
    assert len(diag) == lattice.rank, "quotient by an equal-rank sublattice is finite"
    factors = tuple(s for s in diag if s > 1)
    if dual.complement_dimension > 0:
        return Census(
            finite=False,
            free_rank=0,
            invariant_factors=factors,
            reps=None,
            order=None,
            complement_dimension=dual.complement_dimension,
        )
    adapted = [
        Weight(
            tuple(
                sum(
                    Fraction(vinv[i][j]) * dual_rows[j].coords[c]
                    for j in range(len(dual_rows))
                )
                for c in range(datum.rank)
            )
        )
        for i in range(len(dual_rows))
    ]
    order = 1
    for s in diag:
        order *= s
    reps = tuple(
        sum(
            (adapted[i] * c for i, c in enumerate(combo)),
            Weight.zero(datum.rank),
        )
        for combo in product(*(range(s) for s in diag))
    )
    return Census(
        finite=True,
        free_rank=0,
        invariant_factors=factors,
        reps=reps,
        order=order,
        complement_dimension=0,
    )
