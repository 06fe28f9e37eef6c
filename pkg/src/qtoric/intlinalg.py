"""Exact integer linear algebra: determinants, unimodular inverses, Smith
normal form with transformation matrices, saturated integer kernels and
primitive vectors.

Matrices are lists (or tuples) of rows of Python ints; nothing here touches
floating point, so there is no precision to lose and no overflow to wrap.
"""

from fractions import Fraction
from math import gcd

from .errors import NotUnimodular, RankNotOne


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(cols):
                    oi[j] += aik * bk[j]
    return out


def mat_vec(a, x):
    return [sum(ai[k] * x[k] for k in range(len(x))) for ai in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def vector_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_primitive(v):
    """True when the entries of v are coprime (and v is nonzero)."""
    return vector_gcd(v) == 1


def sign_normalize(v):
    """Flip v so its first nonzero entry is positive; zero vectors pass through."""
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(-y for y in v)
    return tuple(v)


def det(matrix):
    """Exact determinant of a square integer matrix.

    Uses fraction-free Bareiss elimination, so all intermediate values stay
    integral.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("det requires a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def unimodular_inverse(matrix):
    """Exact inverse of an integer matrix with determinant +-1.

    Raises NotUnimodular when |det| != 1, which upstream callers treat as a
    violated non-singularity condition.
    """
    n = len(matrix)
    d = det(matrix)
    if d not in (1, -1):
        raise NotUnimodular(f"matrix has determinant {d}, expected +-1")
    # Gauss-Jordan over exact rationals; the result is integral because the
    # determinant is a unit.
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = next(r for r in range(col, n) if work[r][col] != 0)
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [x / pivot for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    inv = [[int(work[i][n + j]) for j in range(n)] for i in range(n)]
    return inv


def smith_normal_form(matrix):
    """Smith normal form with transformations: returns (U, D, V) with U*M*V = D.

    D is diagonal with d_i | d_{i+1}; U and V are unimodular, which makes the
    kernel read off from V a saturated sublattice.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    d = [list(row) for row in matrix]
    u = identity(rows)
    v = identity(cols)

    def row_op(i, j, q):
        # row_i -= q * row_j  (applied to D and U)
        d[i] = [a - q * b for a, b in zip(d[i], d[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def col_op(i, j, q):
        # col_i -= q * col_j  (applied to D and V)
        for r in range(rows):
            d[r][i] -= q * d[r][j]
        for r in range(cols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    k = 0
    while k < rows and k < cols:
        # Move a nonzero pivot into position (k, k).
        pivot = None
        for i in range(k, rows):
            for j in range(k, cols):
                if d[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        swap_cols(k, pivot[1])
        while True:
            # Clear column k below the pivot.
            for i in range(k + 1, rows):
                if d[i][k] != 0:
                    if d[i][k] % d[k][k] == 0:
                        row_op(i, k, d[i][k] // d[k][k])
                    else:
                        # Replace pivot by gcd via a Euclidean step.
                        q = d[i][k] // d[k][k]
                        row_op(i, k, q)
                        swap_rows(i, k)
            if any(d[i][k] for i in range(k + 1, rows)):
                continue
            # Clear row k right of the pivot.
            for j in range(k + 1, cols):
                if d[k][j] != 0:
                    if d[k][j] % d[k][k] == 0:
                        col_op(j, k, d[k][j] // d[k][k])
                    else:
                        q = d[k][j] // d[k][k]
                        col_op(j, k, q)
                        swap_cols(j, k)
            if any(d[k][j] for j in range(k + 1, cols)):
                continue
            if any(d[i][k] for i in range(k + 1, rows)):
                continue
            break
        k += 1

    # Enforce the divisibility chain d_i | d_{i+1}.
    r = min(rows, cols)
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            a, b = d[i][i], d[i + 1][i + 1]
            if b % a if a else b:
                if a == 0 or (b != 0 and b % a != 0):
                    # Fold entry (i+1, i+1) into column i and redo the corner.
                    col_op(i, i + 1, -1)
                    for step in _two_by_two_steps():
                        pass
                    changed = True
                    # Re-clear the 2x2 corner with Euclidean steps.
                    while d[i + 1][i] != 0 or d[i][i + 1] != 0:
                        if d[i + 1][i] != 0:
                            if d[i][i] == 0 or abs(d[i + 1][i]) < abs(d[i][i]):
                                swap_rows(i, i + 1)
                            if d[i + 1][i] != 0 and d[i][i] != 0:
                                row_op(i + 1, i, d[i + 1][i] // d[i][i])
                        if d[i][i + 1] != 0:
                            if d[i][i] == 0 or abs(d[i][i + 1]) < abs(d[i][i]):
                                swap_cols(i, i + 1)
                            if d[i][i + 1] != 0 and d[i][i] != 0:
                                col_op(i + 1, i, d[i][i + 1] // d[i][i])
    for i in range(r):
        if d[i][i] < 0:
            for c in range(cols):
                d[i][c] = -d[i][c]
            for c in range(rows):
                u[i][c] = -u[i][c]
    return u, d, v


def _two_by_two_steps():
    return ()


def integer_kernel(covectors, ambient_rank=None):
    """Basis of the saturated sublattice annihilated by all given covectors.

    Returns a list of sign-normalized integer vectors spanning
    {v in Z^r : <w, v> = 0 for every input covector w}. An empty covector list
    yields the standard basis of the full lattice (ambient_rank required).
    """
    covectors = [tuple(w) for w in covectors]
    if covectors:
        r = len(covectors[0])
        if any(len(w) != r for w in covectors):
            raise ValueError("covectors must all have the same length")
        if ambient_rank is not None and ambient_rank != r:
            raise ValueError("ambient_rank disagrees with covector length")
    else:
        if ambient_rank is None:
            raise ValueError("ambient_rank is required for an empty covector list")
        r = ambient_rank
        return [tuple(int(i == j) for j in range(r)) for i in range(r)]

    _, d, v = smith_normal_form([list(w) for w in covectors])
    rank = sum(1 for i in range(min(len(covectors), r)) if d[i][i] != 0)
    basis = []
    for j in range(rank, r):
        basis.append(sign_normalize([v[i][j] for i in range(r)]))
    return basis


def primitive_generator(basis):
    """The primitive, sign-normalized generator of a rank-one sublattice.

    The input is a kernel basis; anything other than exactly one vector
    signals an effectiveness violation upstream.
    """
    basis = list(basis)
    if len(basis) != 1:
        raise RankNotOne(f"expected a rank-1 basis, got rank {len(basis)}")
    v = list(basis[0])
    g = vector_gcd(v)
    if g == 0:
        raise RankNotOne("rank-1 basis vector is zero")
    if g > 1:
        v = [x // g for x in v]
    return sign_normalize(v)
