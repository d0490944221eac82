import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from uproll._linalg import (
    combination_in_rows,
    det_int,
    mat_inverse,
    row_hermite_form,
    smith_normal_form,
    xgcd,
)

small_int = st.integers(-9, 9)


def matrix_st(rows, cols):
    return st.lists(
        st.lists(small_int, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    )


@settings(max_examples=100, deadline=None)
@given(a=st.integers(-200, 200), b=st.integers(-200, 200))
def test_xgcd_identity(a, b):
    g, x, y = xgcd(a, b)
    assert g >= 0
    assert x * a + y * b == g
    if a or b:
        assert a % g == 0 and b % g == 0


class TestHermiteForm:
    def test_convention(self):
        h = row_hermite_form([[4, -2], [-2, 4]])
        assert h == [[2, 2], [0, 6]]
        for i, row in enumerate(h):
            p = next(j for j, v in enumerate(row) if v)
            assert row[p] > 0
            for k in range(i):
                assert 0 <= h[k][p] < row[p]

    @settings(max_examples=80, deadline=None)
    @given(mat=matrix_st(3, 3), qs=st.lists(st.integers(-3, 3), min_size=3, max_size=3))
    def test_span_invariant_under_elementary_row_ops(self, mat, qs):
        base = row_hermite_form(mat)
        mixed = [row[:] for row in mat]
        mixed[0] = [a + qs[0] * b for a, b in zip(mixed[0], mixed[1])]
        mixed[1], mixed[2] = mixed[2], mixed[1]
        mixed[2] = [-c for c in mixed[2]]
        mixed[1] = [b + qs[1] * a for b, a in zip(mixed[1], mixed[0])]
        mixed[0] = [a + qs[2] * c for a, c in zip(mixed[0], mixed[2])]
        assert row_hermite_form(mixed) == base

    def test_zero_rows_dropped(self):
        assert row_hermite_form([[0, 0], [0, 0]]) == []
        assert row_hermite_form([]) == []


class TestSmithForm:
    def test_known_diagonal(self):
        diag, _ = smith_normal_form([[4, -2], [-2, 4]])
        assert diag == [2, 6]

    @settings(max_examples=80, deadline=None)
    @given(mat=matrix_st(3, 3))
    def test_divisibility_and_determinant(self, mat):
        diag, vinv = smith_normal_form(mat)
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0
        assert all(d > 0 for d in diag)
        det = det_int(mat)
        if det:
            prod = 1
            for d in diag:
                prod *= d
            assert prod == abs(det)
        # vinv must be unimodular
        assert abs(det_int(vinv)) == 1

    @settings(max_examples=60, deadline=None)
    @given(mat=matrix_st(3, 3))
    def test_adapted_basis_spans_the_row_lattice(self, mat):
        det = det_int(mat)
        if not det:
            return
        diag, vinv = smith_normal_form(mat)
        # rows of diag(diag) * vinv generate the same lattice as mat
        scaled = [[diag[i] * vinv[i][j] for j in range(3)] for i in range(3)]
        assert row_hermite_form(scaled) == row_hermite_form(mat)


class TestRationalKernels:
    @settings(max_examples=60, deadline=None)
    @given(mat=matrix_st(3, 3))
    def test_inverse(self, mat):
        if det_int(mat) == 0:
            return
        inv = mat_inverse(mat)
        for i in range(3):
            for j in range(3):
                entry = sum(Fraction(mat[i][k]) * inv[k][j] for k in range(3))
                assert entry == (1 if i == j else 0)

    def test_combination_solves_and_detects(self):
        rows = [[Fraction(2), Fraction(0)], [Fraction(1), Fraction(3)]]
        combo = combination_in_rows(rows, [Fraction(4), Fraction(6)])
        assert combo == [Fraction(1), Fraction(2)]
        assert combination_in_rows([[Fraction(1), Fraction(0)]], [Fraction(0), Fraction(1)]) is None

    def test_random_combinations_round_trip(self):
        rng = random.Random(9)
        for _ in range(40):
            rows = [
                [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)]
                for _ in range(2)
            ]
            if combination_is_degenerate(rows):
                continue
            coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(2)]
            target = [
                sum(c * row[j] for c, row in zip(coeffs, rows)) for j in range(3)
            ]
            assert combination_in_rows(rows, target) == coeffs


def combination_is_degenerate(rows):
    a, b = rows
    return all(
        a[i] * b[j] == a[j] * b[i] for i in range(3) for j in range(3)
    )
