"""Smith normal form over Z with transformation matrices.

``smith_normal_form(A)`` returns ``(S, U, V)`` with ``U A V = S``, where U and
V are unimodular and S is diagonal with nonnegative invariant factors
d_1 | d_2 | ... .  All arithmetic is on Python ints, so intermediate pivot
growth is harmless.
"""

from .linalg import identity, mat_inverse_int, mat_mul


def smith_normal_form(a):
    a = [list(row) for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [list(row) for row in identity(m)]
    v = [list(row) for row in identity(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # find a pivot in the remaining block
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            done = True
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        done = False
            if done:
                break
        if a[t][t] < 0:
            negate_row(t)
        # enforce divisibility d_t | entries of the remaining block
        fixed = False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    add_row(i, t, 1)
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        t += 1

    s = tuple(tuple(row) for row in a)
    return s, tuple(tuple(r) for r in u), tuple(tuple(r) for r in v)


def invariant_factors(a):
    """Nonzero diagonal entries of the Smith normal form of ``a``."""
    s, _, _ = smith_normal_form(a)
    out = []
    for i in range(min(len(s), len(s[0]) if s else 0)):
        if s[i][i] != 0:
            out.append(s[i][i])
    return tuple(out)


def verify_decomposition(a, s, u, v):
    """Check U A V = S and reconstruct A = U^-1 S V^-1 exactly."""
    if mat_mul(mat_mul(u, a), v) != s:
        return False
    uinv = mat_inverse_int(u)
    vinv = mat_inverse_int(v)
    return mat_mul(mat_mul(uinv, s), vinv) == tuple(tuple(r) for r in a)
