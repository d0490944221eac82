"""Small exact linear-algebra kernels.

Integer Hermite and Smith normal forms with plain bignum arithmetic (no
modular shortcuts), an integer determinant, and rational Gaussian
elimination.  Everything here works on lists of lists and is sized for
rank <= 8 problems.
"""

from __future__ import annotations

from fractions import Fraction


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def row_hermite_form(rows) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix.

    Pivots are positive, pivot columns strictly increase, entries above a
    pivot are reduced into [0, pivot), and zero rows are dropped.  The
    result depends only on the row span of the input.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    width = len(work[0])
    result: list[list[int]] = []
    for col in range(width):
        acc = None
        rest = []
        for row in work:
            if row[col] == 0:
                rest.append(row)
                continue
            if acc is None:
                acc = row
                continue
            g, x, y = xgcd(acc[col], row[col])
            fa, fr = acc[col] // g, row[col] // g
            merged = [x * a + y * b for a, b in zip(acc, row)]
            cleared = [fa * b - fr * a for a, b in zip(acc, row)]
            acc = merged
            if any(cleared):
                rest.append(cleared)
        work = rest
        if acc is not None:
            if acc[col] < 0:
                acc = [-a for a in acc]
            result.append(acc)
        if not work:
            break
    for i, row in enumerate(result):
        p = next(j for j, v in enumerate(row) if v)
        for k in range(i):
            q = result[k][p] // row[p]
            if q:
                result[k] = [a - q * b for a, b in zip(result[k], row)]
    return result


def smith_normal_form(mat) -> tuple[list[int], list[list[int]]]:
    """Smith normal form of an integer matrix.

    Returns (diag, vinv) where diag lists the positive diagonal entries,
    each dividing the next, and vinv is the inverse of the accumulated
    unimodular column transform: U * mat * V = diag(diag) for unimodular
    U, V with vinv = V ** -1.  Row operations are not tracked.
    """
    a = [list(row) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    vinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_add(dst: int, src: int, q: int) -> None:
        # C <- C * (I + q e_{src,dst}); the inverse acts on rows of vinv.
        for row in a:
            row[dst] += q * row[src]
        vinv[src] = [u - q * v for u, v in zip(vinv[src], vinv[dst])]

    def col_swap(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
        if bj != t:
            col_swap(t, bj)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        while True:
            done = True
            for i in range(t + 1, m):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    done = False
            for j in range(t + 1, n):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                col_add(j, t, -q)
                if a[t][j] != 0:
                    col_swap(t, j)
                    done = False
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
            if done:
                break
        divisible = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    col_add(t, j, 1)
                    divisible = False
                    break
            if not divisible:
                break
        if not divisible:
            continue
        t += 1
    diag = [a[i][i] for i in range(t)]
    return diag, vinv


def det_int(mat) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(r) for r in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def mat_inverse(rows) -> list[list[Fraction]]:
    """Inverse of a square matrix, computed over Fraction."""
    n = len(rows)
    a = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                g = a[i][col]
                a[i] = [x - g * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def mat_mul(a, b) -> list[list[Fraction]]:
    """Product of two Fraction matrices given as row lists."""
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def combination_in_rows(rows, target):
    """Coefficients expressing target as a rational combination of rows.

    Returns the coefficient list, or None when target lies outside the
    rational row span.  Raises ValueError when the rows are linearly
    dependent, since coefficients would not be unique.
    """
    k = len(rows)
    if k == 0:
        return [] if not any(target) else None
    n = len(target)
    aug = [
        [Fraction(rows[j][i]) for j in range(k)] + [Fraction(target[i])]
        for i in range(n)
    ]
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            raise ValueError("rows are linearly dependent")
        aug[r], aug[piv] = aug[piv], aug[r]
        f = aug[r][c]
        aug[r] = [x / f for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                g = aug[i][c]
                aug[i] = [x - g * y for x, y in zip(aug[i], aug[r])]
        r += 1
    for i in range(r, n):
        if aug[i][k]:
            return None
    return [aug[i][k] for i in range(k)]
