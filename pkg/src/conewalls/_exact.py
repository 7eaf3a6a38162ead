"""Exact integer and rational linear algebra on small dense matrices.

Matrices are lists of rows; entries are ``int`` or ``Fraction``.  Nothing in
here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt
from typing import Iterable, Sequence

Vector = tuple
Matrix = Sequence[Sequence]


def frac(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to ``Fraction``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def normalize_number(x):
    """Return an ``int`` when the rational is integral, else the ``Fraction``."""
    x = frac(x)
    return x.numerator if x.denominator == 1 else x


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def mat_vec(M: Matrix, v: Sequence) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def mat_mul(A: Matrix, B: Matrix) -> tuple:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def transpose(M: Matrix) -> tuple:
    return tuple(tuple(col) for col in zip(*M))


def identity(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def content(v: Iterable[int]) -> int:
    g = 0
    for a in v:
        g = gcd(g, a)
    return g


def primitive_int(v: Sequence) -> tuple:
    """Positive rational multiple of ``v`` that is a primitive integer vector.

    The zero vector is returned unchanged (as ints).
    """
    v = [frac(a) for a in v]
    den = 1
    for a in v:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in v]
    g = content(ints)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


def _rref(rows: Matrix, ncols: int):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    M = [[frac(a) for a in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [a * inv for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(rows: Matrix) -> int:
    """Rank over Q, by fraction-free (Bareiss-style) elimination on integers."""
    M = []
    for row in rows:
        row = list(row)
        if any(isinstance(a, Fraction) and a.denominator != 1 for a in row):
            row = list(primitive_int(row))
        M.append([int(a) for a in row])
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        for i in range(r + 1, len(M)):
            f = M[i][c]
            if f:
                M[i] = [piv * a - f * b for a, b in zip(M[i], M[r])]
                g = content(M[i])
                if g > 1:
                    M[i] = [a // g for a in M[i]]
        r += 1
        if r == len(M):
            break
    return r


def nullspace(rows: Matrix, ncols: int) -> list[tuple]:
    """Basis of ``{x : rows @ x = 0}`` as primitive integer vectors."""
    R, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            x[pc] = -row[f]
        basis.append(primitive_int(x))
    return basis


def solve(A: Matrix, b: Sequence):
    """Some rational solution of ``A x = b`` or ``None`` when inconsistent."""
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = _rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def det(A: Matrix) -> Fraction:
    n = len(A)
    M = [[frac(a) for a in row] for row in A]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


def inverse(A: Matrix) -> tuple:
    n = len(A)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(A)]
    R, pivots = _rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row[n:]) for row in R)


def independent_subset(vectors: Sequence[Sequence]) -> list[int]:
    """Indices of a greedily chosen maximal linearly independent subset."""
    chosen: list[int] = []
    current = 0
    for i, v in enumerate(vectors):
        r = rank([vectors[j] for j in chosen] + [v])
        if r > current:
            chosen.append(i)
            current = r
    return chosen


# --- integer column echelon form -------------------------------------------

def _xgcd(a: int, b: int):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def column_echelon(A: Matrix):
    """Unimodular ``U`` with ``A @ U`` in lower column echelon form.

    Returns ``(W, U, pivots)`` where ``W = A @ U``, ``pivots`` lists
    ``(row, col)`` pairs, and the columns of ``U`` from ``len(pivots)`` on
    span the integer kernel of ``A`` (a saturated sublattice of Z^n).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    W = [[int(a) for a in row] for row in A]
    U = [list(row) for row in identity(n)]

    def colop(i, j, a, b, c, d):
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
        for M in (W, U):
            for row in M:
                x, y = row[i], row[j]
                row[i], row[j] = a * x + b * y, c * x + d * y

    pivots = []
    r = 0
    for i in range(m):
        if r == n:
            break
        for j in range(r + 1, n):
            if W[i][j] == 0:
                continue
            x, y = W[i][r], W[i][j]
            g, s, t = _xgcd(x, y)
            # determinant s*(x/g) + t*(y/g) = 1
            colop(r, j, s, t, -y // g, x // g)
        if W[i][r] == 0:
            continue
        if W[i][r] < 0:
            for M in (W, U):
                for row in M:
                    row[r] = -row[r]
        pivots.append((i, r))
        r += 1
    return W, U, pivots


def integer_kernel(A: Matrix, n: int | None = None) -> list[tuple]:
    """Basis of the saturated integer kernel ``{x in Z^n : A x = 0}``."""
    if not A:
        return [tuple(row) for row in identity(n or 0)]
    W, U, pivots = column_echelon(A)
    r = len(pivots)
    ncols = len(U)
    return [tuple(U[k][c] for k in range(ncols)) for c in range(r, ncols)]


class IntegerSystem:
    """Repeated integer solves ``A x = b`` for a fixed integer matrix ``A``."""

    def __init__(self, A: Matrix):
        self.A = [list(map(int, row)) for row in A]
        self.W, self.U, self.pivots = column_echelon(self.A)
        self.n = len(self.U)
        r = len(self.pivots)
        self.kernel = [tuple(self.U[k][c] for k in range(self.n)) for c in range(r, self.n)]

    def solve(self, b: Sequence[int]):
        """An integer solution or ``None``."""
        r = len(self.pivots)
        y = [0] * self.n
        pivot_rows = {row: col for row, col in self.pivots}
        for i, row in enumerate(self.W):
            acc = sum(row[c] * y[c] for c in range(r))
            if i in pivot_rows:
                c = pivot_rows[i]
                rest = b[i] - acc
                if rest % row[c]:
                    return None
                y[c] = rest // row[c]
            elif acc != b[i]:
                return None
        return tuple(sum(self.U[k][c] * y[c] for c in range(r)) for k in range(self.n))


# --- quadratic forms --------------------------------------------------------

def inertia(gram: Matrix):
    """(positive, negative, zero) counts of a symmetric rational matrix.

    Congruence diagonalisation (Sylvester's law): symmetric row and column
    operations, pairing a zero pivot with an off-diagonal entry when needed.
    """
    M = [[frac(a) for a in row] for row in gram]
    n = len(M)
    pos = neg = zero = 0
    k = 0
    while k < n:
        if M[k][k] == 0:
            j = next((j for j in range(k + 1, n) if M[j][j] != 0), None)
            if j is not None:
                M[k], M[j] = M[j], M[k]
                for row in M:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if M[k][j] != 0), None)
                if j is None:
                    zero += 1
                    k += 1
                    continue
                # e_k <- e_k + e_j gives diagonal entry 2 M[k][j]
                M[k] = [a + b for a, b in zip(M[k], M[j])]
                for row in M:
                    row[k] = row[k] + row[j]
        p = M[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = M[i][k] / p
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[k])]
        for i in range(k + 1, n):
            M[i][k] = Fraction(0)
        for j in range(k + 1, n):
            M[k][j] = Fraction(0)
        k += 1
    return pos, neg, zero


def fincke_pohst_form(Q: Matrix):
    """Coefficients ``q`` with ``x^T Q x = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2``.

    Returns ``None`` if ``Q`` is not positive definite.
    """
    n = len(Q)
    q = [[frac(a) for a in row] for row in Q]
    for i in range(n):
        if q[i][i] <= 0:
            return None
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def floor_plus_sqrt(alpha: Fraction, beta: Fraction) -> int:
    """``floor(alpha + sqrt(beta))`` exactly, for ``beta >= 0``."""
    k = (alpha.numerator // alpha.denominator) + isqrt(beta.numerator // beta.denominator) + 1

    def ok(k):
        d = k - alpha
        return d <= 0 or d * d <= beta

    while not ok(k):
        k -= 1
    while ok(k + 1):
        k += 1
    return k


def ceil_minus_sqrt(alpha: Fraction, beta: Fraction) -> int:
    """``ceil(alpha - sqrt(beta))`` exactly, for ``beta >= 0``."""
    return -floor_plus_sqrt(-alpha, beta)


def ceil_sqrt(beta: Fraction) -> int:
    return floor_plus_sqrt(Fraction(0), beta) + (0 if _is_square_int(beta) else 1)


def _is_square_int(beta: Fraction) -> bool:
    if beta.denominator != 1:
        return False
    r = isqrt(beta.numerator)
    return r * r == beta.numerator


def ellipsoid_points(Q: Matrix, center: Sequence, bound) -> list[tuple]:
    """All integer ``k`` with ``(k - center)^T Q (k - center) <= bound``.

    ``Q`` must be positive definite (checked by the caller).  Recursive
    coordinate bounding from the last coordinate inwards.
    """
    n = len(Q)
    bound = frac(bound)
    if bound < 0:
        return []
    if n == 0:
        return [()]
    q = fincke_pohst_form(Q)
    if q is None:
        raise ValueError("form is not positive definite")
    c = [frac(a) for a in center]
    out: list[tuple] = []
    k = [0] * n
    u = [Fraction(0)] * n  # u = k - c

    def rec(i: int, remaining: Fraction):
        s = sum((q[i][j] * u[j] for j in range(i + 1, n)), Fraction(0))
        # d_i (u_i + s)^2 <= remaining  <=>  k_i in c_i - s +- sqrt(remaining / d_i)
        mid = c[i] - s
        rad2 = remaining / q[i][i]
        lo = ceil_minus_sqrt(mid, rad2)
        hi = floor_plus_sqrt(mid, rad2)
        for ki in range(lo, hi + 1):
            k[i] = ki
            u[i] = ki - c[i]
            t = q[i][i] * (u[i] + s) ** 2
            rest = remaining - t
            if rest < 0:
                continue
            if i == 0:
                out.append(tuple(k))
            else:
                rec(i - 1, rest)

    rec(n - 1, bound)
    return out


def subsets_of_rank(vectors: Sequence[Sequence], size: int):
    """Index tuples of ``size``-subsets whose vectors are independent."""
    for idx in combinations(range(len(vectors)), size):
        if rank([vectors[i] for i in idx]) == size:
            yield idx
