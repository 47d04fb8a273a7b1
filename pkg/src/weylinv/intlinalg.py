"""Exact integer linear algebra: xgcd, Hermite/Smith normal forms, congruence kernels.

Everything works on lists of lists of Python ints (arbitrary precision).
Matrices are row-major; lattices are given by their rows.
"""

from __future__ import annotations

from fractions import Fraction


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b == g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _row_op(rows, i, j, col):
    """Combine rows i, j so that rows[i][col] becomes gcd and rows[j][col] zero."""
    a, b = rows[i][col], rows[j][col]
    if b == 0:
        return
    if a == 0:
        rows[i], rows[j] = rows[j], rows[i]
        return
    if b % a == 0:
        q = -(b // a)
        rows[j] = [x + q * y for x, y in zip(rows[j], rows[i])]
        return
    g, x, y = xgcd(a, b)
    ag, bg = a // g, b // g
    ri, rj = rows[i], rows[j]
    rows[i] = [x * u + y * v for u, v in zip(ri, rj)]
    rows[j] = [-bg * u + ag * v for u, v in zip(ri, rj)]


def hnf(rows: list[list[int]]) -> list[list[int]]:
    """Canonical row Hermite normal form (zero rows dropped).

    Pivots are positive, entries above each pivot reduced into [0, pivot).
    Two generating sets span the same lattice iff their HNFs are equal.
    """
    if not rows:
        return []
    m = [list(r) for r in rows]
    ncols = len(m[0])
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        if pivot_row == len(m):
            break
        for i in range(pivot_row + 1, len(m)):
            _row_op(m, pivot_row, i, col)
        if m[pivot_row][col] != 0:
            if m[pivot_row][col] < 0:
                m[pivot_row] = [-x for x in m[pivot_row]]
            pivots.append((pivot_row, col))
            pivot_row += 1
    for r, c in pivots:
        p = m[r][c]
        for i in range(r):
            q = m[i][c] // p
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
    return m[: len(pivots)]


def hnf_with_transform(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row HNF H (zero rows kept at the bottom) and unimodular U with U*rows == H."""
    n = len(rows)
    if n == 0:
        return [], []
    ncols = len(rows[0])
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        if pivot_row == n:
            break
        for i in range(pivot_row + 1, n):
            _row_op(aug, pivot_row, i, col)
        if aug[pivot_row][col] != 0:
            if aug[pivot_row][col] < 0:
                aug[pivot_row] = [-x for x in aug[pivot_row]]
            pivots.append((pivot_row, col))
            pivot_row += 1
    for r, c in pivots:
        p = aug[r][c]
        for i in range(r):
            q = aug[i][c] // p
            if q:
                aug[i] = [x - q * y for x, y in zip(aug[i], aug[r])]
    h = [row[:ncols] for row in aug]
    u = [row[ncols:] for row in aug]
    return h, u


def kernel(matrix: list[list[int]]) -> list[list[int]]:
    """HNF basis of {x in Z^n : matrix @ x == 0} for a k x n integer matrix."""
    if not matrix:
        return []
    k = len(matrix)
    n = len(matrix[0])
    t = [[matrix[i][j] for i in range(k)] for j in range(n)]
    h, u = hnf_with_transform(t)
    ker = [u[i] for i in range(n) if all(x == 0 for x in h[i])]
    return hnf(ker)


def congruence_kernel(congruences: list[tuple[list[int], int]], n: int) -> list[list[int]]:
    """HNF basis of {a in Z^n : vec . a == 0 mod m for each (vec, m)}.

    Moduli must be >= 1; modulus-1 rows are vacuous.
    """
    rows = [(v, m) for v, m in congruences if m != 1]
    if not rows:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    k = len(rows)
    # a is in the lattice iff C a + M y = 0 is solvable, M = diag(moduli)
    big = []
    for i, (v, m) in enumerate(rows):
        big.append(list(v) + [m * int(i == j) for j in range(k)])
    ker = kernel(big)
    return hnf([row[:n] for row in ker])


def snf_with_left(matrix: list[list[int]]) -> tuple[list[int], list[list[int]]]:
    """Smith normal form diagonal plus left transform U.

    Returns (diag, U) with U unimodular and U A V = diag(d_1..d_r) for some
    unimodular V; d_1 | d_2 | ... | d_r > 0.  The rows of U realize the
    quotient map Z^n / colspan(A) = (+)_i Z/d_i via x -> (U x)_i mod d_i
    (rows past r correspond to free summands).
    """
    if not matrix or not matrix[0]:
        n = len(matrix)
        return [], [[int(i == j) for j in range(n)] for i in range(n)]
    m = [list(r) for r in matrix]
    nrows, ncols = len(m), len(m[0])
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]

    def row_combine(i, j, col):
        a, b = m[i][col], m[j][col]
        if b == 0:
            return
        if a == 0:
            m[i], m[j] = m[j], m[i]
            u[i], u[j] = u[j], u[i]
            return
        if b % a == 0:
            q = -(b // a)
            m[j] = [x + q * y for x, y in zip(m[j], m[i])]
            u[j] = [x + q * y for x, y in zip(u[j], u[i])]
            return
        g, x, y = xgcd(a, b)
        ag, bg = a // g, b // g
        mi, mj = m[i], m[j]
        ui, uj = u[i], u[j]
        m[i] = [x * p + y * q for p, q in zip(mi, mj)]
        m[j] = [-bg * p + ag * q for p, q in zip(mi, mj)]
        u[i] = [x * p + y * q for p, q in zip(ui, uj)]
        u[j] = [-bg * p + ag * q for p, q in zip(ui, uj)]

    def col_combine(i, j, row):
        a, b = m[row][i], m[row][j]
        if b == 0:
            return
        if a == 0:
            for r in m:
                r[i], r[j] = r[j], r[i]
            return
        if b % a == 0:
            q = -(b // a)
            for r in m:
                r[j] += q * r[i]
            return
        g, x, y = xgcd(a, b)
        ag, bg = a // g, b // g
        for r in m:
            p, q = r[i], r[j]
            r[i] = x * p + y * q
            r[j] = -bg * p + ag * q

    def clear_position(t):
        """Make (t,t) the only nonzero of row t / col t within the submatrix."""
        while True:
            piv = None
            for i in range(t, nrows):
                for j in range(t, ncols):
                    if m[i][j] != 0:
                        piv = (i, j)
                        break
                if piv:
                    break
            if piv is None:
                return False
            pi, pj = piv
            if pi != t:
                m[t], m[pi] = m[pi], m[t]
                u[t], u[pi] = u[pi], u[t]
            if pj != t:
                for r in m:
                    r[t], r[pj] = r[pj], r[t]
            for i in range(t + 1, nrows):
                row_combine(t, i, t)
            for j in range(t + 1, ncols):
                col_combine(t, j, t)
            if all(m[i][t] == 0 for i in range(t + 1, nrows)) and all(
                m[t][j] == 0 for j in range(t + 1, ncols)
            ):
                return True

    rank = 0
    for t in range(min(nrows, ncols)):
        if not clear_position(t):
            break
        rank += 1

    changed = True
    while changed:
        changed = False
        for t in range(rank - 1):
            a, b = m[t][t], m[t + 1][t + 1]
            if b % a != 0:
                for r in m:
                    r[t] += r[t + 1]
                clear_position(t)
                changed = True

    diag = []
    for t in range(rank):
        if m[t][t] < 0:
            m[t][t] = -m[t][t]
            u[t] = [-x for x in u[t]]
        diag.append(m[t][t])
    return diag, u


def snf_diagonal(matrix: list[list[int]]) -> list[int]:
    """Invariant factors d_1 | d_2 | ... (nonzero SNF diagonal) of a matrix."""
    d, _ = snf_with_left(matrix)
    return d


def lattice_contains(hnf_rows: list[list[int]], vec: list[int]) -> bool:
    """Membership test for a lattice given by canonical HNF rows."""
    v = list(vec)
    n = len(v)
    pivots = {}
    for r in hnf_rows:
        c = next((j for j, x in enumerate(r) if x != 0), None)
        if c is not None:
            pivots[c] = r
    for j in range(n):
        if v[j] == 0:
            continue
        if j not in pivots:
            return False
        p = pivots[j][j]
        if v[j] % p != 0:
            return False
        q = v[j] // p
        v = [x - q * y for x, y in zip(v, pivots[j])]
    return all(x == 0 for x in v)


def inverse_fraction(matrix: list[list[int]]) -> list[list[Fraction]]:
    """Exact inverse of a nonsingular integer matrix, as Fractions."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def det_int(matrix: list[list[int]]) -> int:
    """Determinant of an integer matrix via fraction-free-ish elimination."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, n):
            if a[i][col] != 0:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    assert det.denominator == 1
    return int(det)
