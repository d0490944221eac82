"""Shared draw helpers for the randomized spec tests."""

from __future__ import annotations

import random
from fractions import Fraction

from uproll import AlgebraSpec, build_cartan_datum, weight
from uproll.errors import HypothesisViolated

TYPE_POOL = [("A", 1), ("A", 2), ("B", 1), ("B", 2), ("C", 1), ("C", 2)]


def draw_commutativity_specs(seed: int, count: int) -> list[AlgebraSpec]:
    """Random low-rank specs with generators in the simple-current lattice.

    Series A/B/C at rank <= 2, ell in 3..12 (resampling combinations that
    violate the datum hypothesis), one or two generators with coefficient
    multiples of ell/2 drawn from [-2, 2].
    """
    rng = random.Random(seed)
    specs = []
    while len(specs) < count:
        series, rank = rng.choice(TYPE_POOL)
        ell = rng.randint(3, 12)
        try:
            datum = build_cartan_datum(series, rank, ell)
        except HypothesisViolated:
            continue
        half = Fraction(ell, 2)
        gens = [
            weight([half * rng.randint(-2, 2) for _ in range(rank)])
            for _ in range(rng.randint(1, 2))
        ]
        specs.append(AlgebraSpec(datum, gens))
    return specs


def random_weight(rng: random.Random, rank: int, span: int = 6, den: int = 4):
    """A random rational weight with bounded numerators and denominators."""
    return weight(
        [Fraction(rng.randint(-span, span), rng.randint(1, den)) for _ in range(rank)]
    )
