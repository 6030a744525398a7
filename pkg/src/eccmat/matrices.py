"""Dense symmetric matrices with exact entries, plus the structured builders.

Two matrix types live here: integer-entry and rational-entry symmetric
matrices. Both are immutable (entries stored as tuples) and validated for
symmetry at construction. Everything downstream (characteristic polynomials,
Schur complements, minor sums) assumes exact arithmetic, so there is no
floating-point fallback anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


class IntSymMatrix:
    """Symmetric matrix with arbitrary-precision integer entries."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        for i in range(n):
            ri = rows[i]
            for j in range(i):
                if ri[j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        self.n = n
        self.rows = rows

    def submatrix(self, indices) -> "IntSymMatrix":
        """Principal submatrix on the given index subset (kept in order)."""
        idx = tuple(indices)
        return IntSymMatrix(tuple(tuple(self.rows[i][j] for j in idx) for i in idx))

    def max_abs(self) -> int:
        return max((abs(x) for row in self.rows for x in row), default=0)

    def to_text(self) -> str:
        """Plain-text dump: first line the order, then one line per row."""
        lines = [str(self.n)]
        lines.extend(" ".join(str(x) for x in row) for row in self.rows)
        return "\n".join(lines)

    def __eq__(self, other):
        return isinstance(other, IntSymMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntSymMatrix(n={self.n})"


class RatSymMatrix:
    """Symmetric matrix with exact rational entries."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        for i in range(n):
            ri = rows[i]
            for j in range(i):
                if ri[j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        self.n = n
        self.rows = rows

    @classmethod
    def from_int(cls, m: IntSymMatrix) -> "RatSymMatrix":
        return cls(m.rows)

    def submatrix(self, indices) -> "RatSymMatrix":
        idx = tuple(indices)
        return RatSymMatrix(tuple(tuple(self.rows[i][j] for j in idx) for i in idx))

    def to_text(self) -> str:
        """Plain-text dump; entries rendered as p or p/q."""
        lines = [str(self.n)]
        lines.extend(" ".join(str(x) for x in row) for row in self.rows)
        return "\n".join(lines)

    def __eq__(self, other):
        return isinstance(other, RatSymMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"RatSymMatrix(n={self.n})"


def eccentricity_matrix(dist: IntSymMatrix, ecc) -> IntSymMatrix:
    """Keep distance entries attaining min(ecc[u], ecc[v]), zero the rest.

    ecc must match the row maxima of dist; anything else is rejected.
    """
    n = dist.n
    ecc = tuple(int(e) for e in ecc)
    if len(ecc) != n:
        raise ValueError("eccentricity vector length must match matrix order")
    for u in range(n):
        if ecc[u] != max(dist.rows[u]):
            raise ValueError(f"ecc[{u}] does not equal the row maximum")
    out = []
    for u in range(n):
        du = dist.rows[u]
        eu = ecc[u]
        row = [0] * n
        for v in range(n):
            m = eu if eu < ecc[v] else ecc[v]
            if du[v] == m and u != v:
                row[v] = du[v]
        out.append(row)
    return IntSymMatrix(out)


def is_irreducible(m: IntSymMatrix) -> bool:
    """True iff the support graph of the matrix is connected."""
    n = m.n
    if n <= 1:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        row = m.rows[u]
        for v in range(n):
            if row[v] != 0 and not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def _hollow_ones(scale: int, size: int):
    """scale * (J - I) as a list of rows."""
    return [[0 if i == j else scale for j in range(size)] for i in range(size)]


def deep_mid_block(d: int, n: int) -> IntSymMatrix:
    """2n x 2n block matrix [[2d(J-I), (2d-1)(J-I)], [(2d-1)(J-I), 0]].

    Models the principal submatrix of an even-diameter tree eccentricity
    matrix on one deepest vertex and one adjacent mid vertex per branch.
    """
    if d < 1 or n < 1:
        raise ValueError("d and n must be positive")
    top = _hollow_ones(2 * d, n)
    cross = _hollow_ones(2 * d - 1, n)
    rows = []
    for i in range(n):
        rows.append(top[i] + cross[i])
    for i in range(n):
        rows.append(cross[i] + [0] * n)
    return IntSymMatrix(rows)


def odd_diameter_core(d: int) -> IntSymMatrix:
    """4x4 principal submatrix of an odd-diameter (2d+1) tree eccentricity
    matrix on one vertex from each partition class."""
    if d < 1:
        raise ValueError("d must be positive")
    return IntSymMatrix([
        [0, 2 * d + 1, 0, 2 * d],
        [2 * d + 1, 0, 2 * d, 0],
        [0, 2 * d, 0, 0],
        [2 * d, 0, 0, 0],
    ])


def even_diameter_core(d: int, l: int) -> IntSymMatrix:
    """(2l+1) x (2l+1) core on l deepest vertices, the l distinguished
    center-neighbors, and the center of an even-diameter (2d) tree.

    Row order: deep vertices, then distinguished vertices, then center.
    Deep-deep entries are 2d, deep-distinguished entries d+1 except the
    matched pair (zero), deep-center entries d; all other entries zero.
    """
    if d < 2 or l < 2:
        raise ValueError("requires d >= 2 and l >= 2")
    size = 2 * l + 1
    rows = [[0] * size for _ in range(size)]
    for i in range(l):
        for j in range(l):
            if i != j:
                rows[i][j] = 2 * d
                rows[i][l + j] = d + 1
                rows[l + j][i] = d + 1
        rows[i][2 * l] = d
        rows[2 * l][i] = d
    return IntSymMatrix(rows)


def bareiss_det(rows) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = -1
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != k:
            a[piv], a[k] = a[k], a[piv]
            sign = -sign
        pk = a[k][k]
        ak = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * pk - aik * ak[j]) // prev
        prev = pk
    return sign * a[n - 1][n - 1]


# Beyond this order, direct subset enumeration is replaced by the
# characteristic-polynomial route (the two must agree; tests compare them).
_MINOR_ENUM_LIMIT = 24


def principal_minor_sum(m: IntSymMatrix, k: int) -> int:
    """Exact sum of all k x k principal minors."""
    n = m.n
    if k < 0 or k > n:
        raise ValueError("k must lie in 0..n")
    if k == 0:
        return 1
    if n > _MINOR_ENUM_LIMIT:
        from .exact import char_poly

        c = char_poly(m).coeffs[k]
        return c if k % 2 == 0 else -c
    total = 0
    rows = m.rows
    for sub in combinations(range(n), k):
        total += bareiss_det([[rows[i][j] for j in sub] for i in sub])
    return total


def schur_complement(m, pivot_set) -> RatSymMatrix:
    """A22 - A21 A11^{-1} A12 over exact rationals, pivoting on pivot_set.

    Raises ValueError naming the set if the pivot block is singular.
    """
    pivot = sorted(set(pivot_set))
    n = m.n
    if any(i < 0 or i >= n for i in pivot):
        raise ValueError("pivot indices out of range")
    rest = [i for i in range(n) if i not in set(pivot)]
    k = len(pivot)
    rows = m.rows

    # Solve A11 X = A12 by Gaussian elimination with exact fractions.
    aug = [
        [Fraction(rows[pivot[i]][pivot[j]]) for j in range(k)]
        + [Fraction(rows[pivot[i]][c]) for c in rest]
        for i in range(k)
    ]
    for col in range(k):
        piv = -1
        for r in range(col, k):
            if aug[r][col] != 0:
                piv = r
                break
        if piv < 0:
            raise ValueError(f"singular pivot block {pivot}")
        if piv != col:
            aug[piv], aug[col] = aug[col], aug[piv]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    # X sits in the augmented columns; S = A22 - A21 X.
    out = []
    for i in rest:
        row = []
        for b, j in enumerate(rest):
            s = Fraction(rows[i][j])
            for t in range(k):
                s -= Fraction(rows[i][pivot[t]]) * aug[t][k + b]
            row.append(s)
        out.append(row)
    return RatSymMatrix(out)
