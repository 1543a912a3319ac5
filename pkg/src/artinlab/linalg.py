"""Exact linear algebra over Q and Z.

Everything here works on plain lists of ints / Fractions; sizes are tiny
(class counts x monomial counts), so clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction


def rational_rank(rows: list[list]) -> int:
    """Rank over Q by Gaussian elimination on Fraction copies."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    col = 0
    while col < ncols and rank < len(m):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(map(int, r)) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    col = 0
    while col < ncols and rank < nrows:
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        row_p = m[rank]
        for r in range(rank + 1, nrows):
            mr = m[r]
            f = mr[col]
            for c in range(col, ncols):
                mr[c] = (pv * mr[c] - f * row_p[c]) // prev
        prev = pv
        rank += 1
        col += 1
    return rank


def solve_columns(columns: list[list], target: list,
                  order: list[int] | None = None):
    """Solve sum_j x_j * columns[j] = target over Q.

    `order` lists the preferred pivot order of the unknowns; unknowns not
    pivoted are set to 0, which is what makes greedy sparse solutions
    reproducible.  Returns the coefficient list or None if inconsistent.
    """
    ncols = len(columns)
    nrows = len(target)
    if order is None:
        order = list(range(ncols))
    aug = [[Fraction(columns[j][i]) for j in order] + [Fraction(target[i])]
           for i in range(nrows)]
    piv_rows: list[tuple[int, int]] = []  # (row, column-in-order) pairs
    row = 0
    for cpos in range(len(order)):
        piv = next((r for r in range(row, nrows) if aug[r][cpos] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        pv = aug[row][cpos]
        aug[row] = [a / pv for a in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][cpos] != 0:
                f = aug[r][cpos]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        piv_rows.append((row, cpos))
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if aug[r][-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, cpos in piv_rows:
        x[order[cpos]] = aug[r][-1]
    return x


def invert_integer_matrix(A: list[list[int]]) -> list[list[Fraction]]:
    """Exact inverse of a square integer matrix; raises on singularity."""
    n = len(A)
    aug = [[Fraction(A[i][j]) for j in range(n)] +
           [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [a / pv for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def lattice_row_basis(rows: list[list[int]]) -> list[list[int]]:
    """Echelon basis (over Z) of the lattice spanned by integer rows."""
    return _echelonize(rows)


def _echelonize(rows: list[list[int]]) -> list[list[int]]:
    rows = [list(r) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    out: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        sel = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not sel:
            col += 1
            continue
        while len(sel) > 1:
            sel.sort(key=lambda r: abs(r[col]))
            a = sel[0]
            reduced = []
            for r in sel[1:]:
                q = r[col] // a[col]
                rr = [x - q * y for x, y in zip(r, a)]
                if rr[col] != 0:
                    reduced.append(rr)
                elif any(rr):
                    rest.append(rr)
            sel = [a] + reduced
        out.append(sel[0])
        rows = rest
        col += 1
    return out


def smith_normal_form(M: list[list[int]]):
    """Smith normal form with transforms: returns (D, U, V), U @ M @ V = D.

    D is diagonal with d1 | d2 | ...; U and V are unimodular.  Sizes here
    are small, so the classical pivot-and-reduce algorithm is fine.
    """
    A = [list(map(int, row)) for row in M]
    nr = len(A)
    nc = len(A[0]) if nr else 0
    U = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    V = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_op(i, j, q):  # row_i -= q * row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(nr):
            A[r][i] -= q * A[r][j]
        for r in range(nc):
            V[r][i] -= q * V[r][j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(nr):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(nc):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(nr, nc):
        # find the nonzero entry of least magnitude in the trailing block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        if A[t][t] < 0:
            negate_row(t)
        clean = True
        for i in range(t + 1, nr):
            if A[i][t] != 0:
                q = A[i][t] // A[t][t]
                row_op(i, t, q)
                if A[i][t] != 0:
                    clean = False
        for j in range(t + 1, nc):
            if A[t][j] != 0:
                q = A[t][j] // A[t][t]
                col_op(j, t, q)
                if A[t][j] != 0:
                    clean = False
        if not clean:
            continue
        # divisibility fixup: A[t][t] must divide the rest of the block
        offender = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if A[i][j] % A[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)  # adds the offending row; redo the pivot
            continue
        t += 1
    return A, U, V


def solve_integer(columns: list[list[int]], target: list[int]):
    """Integer solution x of sum_j x_j * columns[j] = target, or None.

    Smith-form based, so "None" is a proof that no integral solution exists.
    """
    nc = len(columns)
    nr = len(target)
    if nc == 0:
        return [] if not any(target) else None
    A = [[columns[j][i] for j in range(nc)] for i in range(nr)]
    D, U, V = smith_normal_form(A)
    t = [sum(U[i][k] * target[k] for k in range(nr)) for i in range(nr)]
    y = [0] * nc
    for i in range(nr):
        d = D[i][i] if i < min(nr, nc) else 0
        if d == 0:
            if t[i] != 0:
                return None
        else:
            if t[i] % d != 0:
                return None
            if i < nc:
                y[i] = t[i] // d
    return [sum(V[i][k] * y[k] for k in range(nc)) for i in range(nc)]
