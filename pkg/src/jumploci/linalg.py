"""Exact linear algebra over a coefficient field.

Matrices here are plain lists of lists of field elements; every routine
takes the field object first.  Everything is Gaussian elimination -- exact
over our fields, no pivoting subtleties.
"""


def mat_rank(F, rows):
    """Rank by row reduction.  `rows` is a list of lists (not mutated)."""
    if not rows or not rows[0]:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if m[r][col] != F.zero:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = F.inv(m[row][col])
        prow = m[row]
        for r in range(row + 1, nrows):
            c = m[r][col]
            if c != F.zero:
                factor = F.mul(c, inv)
                mr = m[r]
                for j in range(col, ncols):
                    mr[j] = F.sub(mr[j], F.mul(factor, prow[j]))
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def mat_rank_stacked(F, blocks):
    """Rank of the column-wise concatenation [A | B | ...] of blocks with a
    common row count.  Empty blocks are skipped."""
    rows = None
    ncols = 0
    for b in blocks:
        if not b or not b[0]:
            continue
        if rows is None:
            rows = [list(r) for r in b]
        else:
            for r, br in zip(rows, b):
                r.extend(br)
        ncols += len(b[0])
    if rows is None:
        return 0
    return mat_rank(F, rows)


def rref(F, rows):
    """Reduced row echelon form; returns (matrix, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if m[r][col] != F.zero:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = F.inv(m[row][col])
        m[row] = [F.mul(inv, x) for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != F.zero:
                c = m[r][col]
                m[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return m, pivots


def nullspace(F, rows, ncols=None):
    """Basis of the right kernel {v : M v = 0} as a list of vectors."""
    if not rows:
        n = ncols if ncols is not None else 0
        basis = []
        for j in range(n):
            v = [F.zero] * n
            v[j] = F.one
            basis.append(v)
        return basis
    n = len(rows[0])
    red, pivots = rref(F, rows)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [F.zero] * n
        v[j] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(red[i][j])
        basis.append(v)
    return basis


def mat_inverse(F, rows):
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [list(r) + [F.one if i == j else F.zero for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]


def mat_mul(F, a, b):
    if not a or not b:
        return []
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[F.zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c != F.zero:
                bt = b[t]
                for j in range(m):
                    if bt[j] != F.zero:
                        oi[j] = F.add(oi[j], F.mul(c, bt[j]))
    return out
