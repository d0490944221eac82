"""Exact root-system data for the finite simple Lie types.

Weights are stored as exact rational coordinate vectors in the
fundamental-weight basis.  The bilinear form is normalized so that short
roots have squared length 2; its Gram matrix in that basis is
G = D (D A)^-1 D for the Cartan matrix A and symmetrizer D = diag(d_i).
Simple root j then has omega-coordinates equal to column j of A, and the
contract <omega_i, alpha_j> = d_j delta_ij holds exactly.

Scalars are powers of a fixed primitive root of unity q = exp(2 pi i / ell)
and are never materialized as complex numbers: only their exponents are
kept, as rationals compared modulo ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import _linalg
from .errors import DimensionMismatch, HypothesisViolated, InvalidSeriesRank


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


def is_integer(x) -> bool:
    """True when the rational x is an integer."""
    return _frac(x).denominator == 1


def is_multiple(x, step) -> bool:
    """True when x lies in step * Z, for a nonzero rational step."""
    return is_integer(_frac(x) / _frac(step))


@dataclass(frozen=True)
class Weight:
    """Weight-space element: exact rational omega-basis coordinates."""

    coords: tuple[Fraction, ...]

    @staticmethod
    def zero(n: int) -> "Weight":
        return Weight((Fraction(0),) * n)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        if len(self) != len(other):
            raise DimensionMismatch("weights have different lengths")
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k) -> "Weight":
        k = _frac(k)
        return Weight(tuple(a * k for a in self.coords))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self) -> str:
        return "Weight(%s)" % ", ".join(str(c) for c in self.coords)


def weight(coords) -> Weight:
    """Build a Weight from a sequence of ints, Fractions, or 'p/q' strings."""
    return Weight(tuple(_frac(c) for c in coords))


@dataclass(frozen=True)
class ExponentModL:
    """Exact rational exponent e standing for the scalar q ** e.

    Equality is congruence of exponents modulo the order of q, so two
    instances compare equal exactly when they name the same scalar.
    """

    value: Fraction
    modulus: int

    @property
    def canonical(self) -> Fraction:
        """The reduced representative in [0, modulus)."""
        return self.value % self.modulus

    @property
    def is_zero(self) -> bool:
        return self.canonical == 0

    def _check(self, other: "ExponentModL") -> None:
        if self.modulus != other.modulus:
            raise ValueError("exponents live at different orders of q")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExponentModL):
            return NotImplemented
        return self.modulus == other.modulus and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash((self.canonical, self.modulus))

    def __add__(self, other: "ExponentModL") -> "ExponentModL":
        self._check(other)
        return ExponentModL(self.value + other.value, self.modulus)

    def __sub__(self, other: "ExponentModL") -> "ExponentModL":
        self._check(other)
        return ExponentModL(self.value - other.value, self.modulus)

    def __neg__(self) -> "ExponentModL":
        return ExponentModL(-self.value, self.modulus)

    def scaled(self, k: int) -> "ExponentModL":
        """The exponent of the k-th power of the scalar (integer k only)."""
        return ExponentModL(self.value * k, self.modulus)

    def scalar_str(self) -> str:
        return "q^{%s}" % self.canonical

    def __repr__(self) -> str:
        return f"ExponentModL({self.value} mod {self.modulus})"


def exponent(value, ell: int) -> ExponentModL:
    """Build an ExponentModL from a rational value at order ell."""
    return ExponentModL(_frac(value), ell)


# Cartan matrices follow the convention a_ij = <alpha_i, alpha_j> / d_i,
# which keeps D*A symmetric for the symmetrizers below.

def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i in range(n - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    return a


def _series_data(series: str, rank: int) -> tuple[list[list[int]], tuple[int, ...]]:
    n = rank
    if n < 1:
        raise InvalidSeriesRank(f"rank must be positive, got {n}")
    if series == "A":
        return _chain(n), (1,) * n
    if series == "B":
        if n == 1:
            return _chain(1), (1,)
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a, (2,) * (n - 1) + (1,)
    if series == "C":
        if n == 1:
            return _chain(1), (1,)
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a, (1,) * (n - 1) + (2,)
    if series == "D":
        if n < 3:
            raise InvalidSeriesRank(f"series D needs rank >= 3, got {n}")
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a, (1,) * n
    if series == "E":
        if n not in (6, 7, 8):
            raise InvalidSeriesRank(f"series E needs rank 6, 7 or 8, got {n}")
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if n >= 7:
            edges.append((5, 6))
        if n == 8:
            edges.append((6, 7))
        for i, j in edges:
            a[i][j] = a[j][i] = -1
        return a, (1,) * n
    if series == "F":
        if n != 4:
            raise InvalidSeriesRank(f"series F needs rank 4, got {n}")
        a = _chain(4)
        a[2][1] = -2
        return a, (2, 2, 1, 1)
    if series == "G":
        if n != 2:
            raise InvalidSeriesRank(f"series G needs rank 2, got {n}")
        return [[2, -3], [-1, 2]], (1, 3)
    raise InvalidSeriesRank(f"unknown series {series!r}")


@dataclass(frozen=True)
class CartanDatum:
    """Root-system constants for one simple type at one root of unity."""

    series: str
    rank: int
    ell: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    r: int
    r_i: tuple[int, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    rho: Weight

    @property
    def half_ell(self) -> Fraction:
        return Fraction(self.ell, 2)

    def fundamental_weight(self, i: int) -> Weight:
        coords = [Fraction(0)] * self.rank
        coords[i] = Fraction(1)
        return Weight(tuple(coords))

    def simple_root(self, i: int) -> Weight:
        """Simple root i as a weight (column i of the Cartan matrix)."""
        return Weight(tuple(Fraction(self.cartan[k][i]) for k in range(self.rank)))

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(self.simple_root(i) for i in range(self.rank))


def build_cartan_datum(series: str, rank: int, ell: int) -> CartanDatum:
    """Assemble the exact constants for (series, rank) at order ell.

    Raises InvalidSeriesRank for an unknown Dynkin type and
    HypothesisViolated when ell < 3 or when r = 2*ell / (3 + (-1)**ell)
    fails to exceed every gcd(d_i, r).
    """
    series = str(series).upper()
    cartan, d = _series_data(series, int(rank))
    ell = int(ell)
    if ell < 3:
        raise HypothesisViolated(f"need ell >= 3, got {ell}")
    r = ell if ell % 2 else ell // 2
    g = [gcd(di, r) for di in d]
    if r <= max(g):
        raise HypothesisViolated(
            f"need r > max gcd(d_i, r): r={r}, gcds={tuple(g)}"
        )
    n = len(d)
    b = [[d[i] * cartan[i][j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            assert b[i][j] == b[j][i], "symmetrized Cartan matrix must be symmetric"
    for k in range(1, n + 1):
        minor = [row[:k] for row in b[:k]]
        assert _linalg.det_int(minor) > 0, "symmetrized Cartan matrix must be positive definite"
    binv = _linalg.mat_inverse(b)
    gram = tuple(
        tuple(d[i] * binv[i][j] * d[j] for j in range(n)) for i in range(n)
    )
    return CartanDatum(
        series=series,
        rank=n,
        ell=ell,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizers=tuple(d),
        r=r,
        r_i=tuple(r // gi for gi in g),
        gram=gram,
        rho=Weight((Fraction(1),) * n),
    )


def pairing(datum: CartanDatum, lam: Weight, mu: Weight) -> Fraction:
    """The normalized bilinear form <lam, mu>, exact."""
    if len(lam) != datum.rank or len(mu) != datum.rank:
        raise DimensionMismatch(
            f"weights must have length {datum.rank}"
        )
    total = Fraction(0)
    for i, a in enumerate(lam.coords):
        if not a:
            continue
        row = datum.gram[i]
        total += a * sum(row[j] * c for j, c in enumerate(mu.coords) if c)
    return total


def in_simple_current_lattice(datum: CartanDatum, lam: Weight) -> bool:
    """Membership in the simple-current lattice: every coordinate in (ell/2) Z."""
    if len(lam) != datum.rank:
        raise DimensionMismatch(f"weight must have length {datum.rank}")
    return all(is_integer(2 * c / datum.ell) for c in lam.coords)


def alpha_coordinates(datum: CartanDatum, lam: Weight) -> tuple[Fraction, ...]:
    """Coordinates of a weight over the simple roots."""
    inv = _cartan_inverse(datum)
    return tuple(
        sum(inv[i][j] * c for j, c in enumerate(lam.coords))
        for i in range(datum.rank)
    )


def in_root_lattice(datum: CartanDatum, lam: Weight) -> bool:
    """True when the weight is an integer combination of simple roots."""
    return all(is_integer(c) for c in alpha_coordinates(datum, lam))


_INVERSE_CACHE: dict[tuple, list[list[Fraction]]] = {}


def _cartan_inverse(datum: CartanDatum) -> list[list[Fraction]]:
    key = datum.cartan
    inv = _INVERSE_CACHE.get(key)
    if inv is None:
        inv = _linalg.mat_inverse([list(row) for row in datum.cartan])
        _INVERSE_CACHE[key] = inv
    return inv
