"""Small exact linear algebra over a coefficient field (Gaussian elimination).

Matrices are lists of row lists holding field elements.  Used for simplicial
cohomology ranks and for degreewise exactness checks.
"""


def matrix_rank(field, rows):
    if not rows:
        return 0
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if m[r][col] != field.zero:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = field.inv(m[row][col])
        m[row] = [field.mul(v, inv) for v in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != field.zero:
                factor = m[r][col]
                m[r] = [field.sub(a, field.mul(factor, b)) for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank
