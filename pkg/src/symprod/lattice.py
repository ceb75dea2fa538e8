"""Exact integer matrix algebra: Hermite and Smith normal forms, lattices.

Matrices are plain lists of rows of Python ints, so all arithmetic is
arbitrary precision.  Everything here uses naive exact pivoting, which is
fine at the scale of a few thousand rows and a few hundred columns.
"""

from __future__ import annotations

Matrix = list[list[int]]


class DimensionError(ValueError):
    pass


def _check_rectangular(m: Matrix) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for r in m:
        if len(r) != cols:
            raise DimensionError("ragged matrix")
    return rows, cols


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
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


def hermite(m: Matrix) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form.

    Returns (H, U) with U * m = H and U unimodular.  Convention: pivots
    positive, entries above each pivot reduced into [0, pivot), zero rows
    at the bottom.
    """
    rows, cols = _check_rectangular(m)
    h = [row.copy() for row in m]
    u = identity(rows)
    pivot_row = 0
    for col in range(cols):
        if pivot_row >= rows:
            break
        # Clear everything below pivot_row in this column with gcd steps.
        src = None
        for i in range(pivot_row, rows):
            if h[i][col]:
                src = i
                break
        if src is None:
            continue
        if src != pivot_row:
            h[pivot_row], h[src] = h[src], h[pivot_row]
            u[pivot_row], u[src] = u[src], u[pivot_row]
        for i in range(pivot_row + 1, rows):
            if not h[i][col]:
                continue
            a, b = h[pivot_row][col], h[i][col]
            if b % a == 0:
                q = b // a
                _row_sub(h, u, i, pivot_row, q)
            else:
                g, x, y = xgcd(a, b)
                _row_combine(h, u, pivot_row, i, x, y, a // g, b // g)
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-v for v in h[pivot_row]]
            u[pivot_row] = [-v for v in u[pivot_row]]
        p = h[pivot_row][col]
        for j in range(pivot_row):
            q = h[j][col] // p
            if q:
                _row_sub(h, u, j, pivot_row, q)
        pivot_row += 1
    return h, u


def _row_sub(h: Matrix, u: Matrix, i: int, j: int, q: int) -> None:
    # row_i -= q * row_j, in both h and the transform u
    hi, hj = h[i], h[j]
    for k in range(len(hi)):
        hi[k] -= q * hj[k]
    ui, uj = u[i], u[j]
    for k in range(len(ui)):
        ui[k] -= q * uj[k]


def _row_combine(h: Matrix, u: Matrix, i: int, j: int, x: int, y: int,
                 ag: int, bg: int) -> None:
    # (row_i, row_j) <- (x*row_i + y*row_j, -bg*row_i + ag*row_j)
    # determinant of this 2x2 operation is x*ag + y*bg = 1
    for mat in (h, u):
        ri, rj = mat[i], mat[j]
        for k in range(len(ri)):
            a, b = ri[k], rj[k]
            ri[k] = x * a + y * b
            rj[k] = -bg * a + ag * b


def hermite_nonzero(m: Matrix) -> Matrix:
    """Nonzero rows of the Hermite form, the canonical basis of the row lattice."""
    if not m:
        return []
    h, _ = hermite(m)
    return [row for row in h if any(row)]


def rank(m: Matrix) -> int:
    return len(hermite_nonzero(m))


def smith(m: Matrix) -> list[int]:
    """Smith invariants d_1 | d_2 | ... | d_k, k = min(rows, cols), all >= 0.

    The cokernel of m (rows as relations in Z^cols) has torsion
    (+) Z/d_i over the nonzero d_i > 1.
    """
    rows, cols = _check_rectangular(m)
    if rows == 0 or cols == 0:
        return []
    # Row-reduce first: unimodular row ops preserve the invariants and
    # shrink tall relation matrices to at most `cols` rows.
    work = hermite_nonzero(m)
    n_out = min(rows, cols)
    if not work:
        return [0] * n_out
    a = [row.copy() for row in work]
    nr, nc = len(a), cols
    invariants = []
    top = 0
    while top < nr and top < nc:
        piv = _find_pivot(a, top)
        if piv is None:
            break
        pi, pj = piv
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        while True:
            # clear column `top` by Euclidean steps
            for i in range(top + 1, nr):
                while a[i][top]:
                    q = a[i][top] // a[top][top]
                    if q:
                        for k in range(nc):
                            a[i][k] -= q * a[top][k]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
            # clear row `top` likewise
            for j in range(top + 1, nc):
                while a[top][j]:
                    q = a[top][j] // a[top][top]
                    if q:
                        for row in a:
                            row[j] -= q * row[top]
                    if a[top][j]:
                        for row in a:
                            row[top], row[j] = row[j], row[top]
            if all(a[i][top] == 0 for i in range(top + 1, nr)):
                if all(a[top][j] == 0 for j in range(top + 1, nc)):
                    break
        # enforce divisibility: fold any entry the pivot does not divide
        d = abs(a[top][top])
        offender = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if a[i][j] % d:
                    offender = (i, j)
                    break
            if offender:
                break
        if offender is not None:
            i, _ = offender
            for k in range(nc):
                a[top][k] += a[i][k]
            continue  # re-run elimination at the same corner
        invariants.append(d)
        top += 1
    invariants.extend([0] * (n_out - len(invariants)))
    return invariants


def _find_pivot(a: Matrix, top: int) -> tuple[int, int] | None:
    best = None
    for i in range(top, len(a)):
        for j in range(top, len(a[i])):
            v = abs(a[i][j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
    if best is None:
        return None
    return best[1], best[2]


def determinant(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    rows, cols = _check_rectangular(m)
    if rows != cols:
        raise DimensionError("determinant of a non-square matrix")
    if rows == 0:
        return 1
    a = [row.copy() for row in m]
    sign = 1
    prev = 1
    for k in range(rows - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, rows) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, rows):
            for j in range(k + 1, rows):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def is_unimodular(m: Matrix) -> bool:
    rows, cols = _check_rectangular(m)
    return rows == cols and abs(determinant(m)) == 1


def lattice_membership(v: list[int], generators: Matrix) -> bool:
    """Is v in the Z-span of the generator rows?"""
    if generators and len(v) != len(generators[0]):
        raise DimensionError("vector length does not match generator width")
    basis = hermite_nonzero(generators)
    w = list(v)
    for row in basis:
        col = next(j for j, e in enumerate(row) if e)
        if w[col] % row[col]:
            return False
        q = w[col] // row[col]
        if q:
            for k in range(col, len(w)):
                w[k] -= q * row[k]
    return not any(w)


def lattice_equal(a: Matrix, b: Matrix) -> bool:
    """Do two generator lists span the same lattice in Z^cols?"""
    if a and b and len(a[0]) != len(b[0]):
        raise DimensionError("ambient dimensions differ")
    return hermite_nonzero(a) == hermite_nonzero(b)


def is_full_unit_lattice(generators: Matrix, dim: int) -> bool:
    """Do the generator rows span all of Z^dim?"""
    if dim == 0:
        return True
    basis = hermite_nonzero(generators)
    return basis == identity(dim)
