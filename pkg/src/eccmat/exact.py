"""Exact algebra: characteristic polynomials, inertia, ranks, symmetry tests.

Characteristic polynomials are computed by a division-free Berkowitz-style
recurrence over Python big integers. A Faddeev-LeVerrier implementation with
exact integer division is kept alongside as an independent second route; the
two must agree and the tests enforce that.

Inertia comes from Descartes' rule of signs, which counts positive roots
exactly for polynomials whose roots are all real. That precondition holds for
characteristic polynomials of symmetric matrices, the only inputs this module
sees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from math import lcm as _int_lcm
from typing import NamedTuple, Optional

from .matrices import IntSymMatrix, RatSymMatrix, schur_complement


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial with big-integer coefficients, highest degree first."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_json(self):
        """Coefficients as decimal strings, highest degree first."""
        return [str(c) for c in self.coeffs]

    def stripped(self):
        """(coefficients with trailing zeros removed, number of zeros removed)."""
        coeffs = self.coeffs
        nz = 0
        while nz < len(coeffs) - 1 and coeffs[-1 - nz] == 0:
            nz += 1
        return coeffs[: len(coeffs) - nz], nz


class Inertia(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int


def char_poly(m: IntSymMatrix) -> CharPoly:
    """Exact characteristic polynomial, division-free (Berkowitz)."""
    a = m.rows
    n = m.n
    poly = [1]
    for r in range(1, n + 1):
        rm1 = r - 1
        q = [1, -a[rm1][rm1]]
        if rm1:
            rrow = a[rm1][:rm1]
            v = [a[i][rm1] for i in range(rm1)]
            sub = [a[i][:rm1] for i in range(rm1)]
            q.append(-sum(x * y for x, y in zip(rrow, v)))
            for _ in range(rm1 - 1):
                v = [sum(x * y for x, y in zip(row, v)) for row in sub]
                q.append(-sum(x * y for x, y in zip(rrow, v)))
        new = [0] * (r + 1)
        for j, pj in enumerate(poly):
            if pj:
                for i in range(min(len(q), r + 1 - j)):
                    new[i + j] += q[i] * pj
        poly = new
    return CharPoly(tuple(poly))


def char_poly_leverrier(m: IntSymMatrix) -> CharPoly:
    """Characteristic polynomial by Faddeev-LeVerrier with exact division.

    Second, independent route kept for cross-checking char_poly.
    """
    n = m.n
    a = m.rows
    coeffs = [1]
    work = [list(row) for row in a]
    for k in range(1, n + 1):
        if k > 1:
            prev_c = coeffs[-1]
            for i in range(n):
                work[i][i] += prev_c
            work = [
                [sum(a[i][t] * work[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)
            ]
        tr = sum(work[i][i] for i in range(n))
        if tr % k != 0:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible, input not integral")
        coeffs.append(-(tr // k))
    return CharPoly(tuple(coeffs))


def inertia_exact(p: CharPoly) -> Inertia:
    """Inertia by Descartes' rule; exact when all roots of p are real."""
    stripped, n_zero = p.stripped()
    signs = [c for c in stripped if c != 0]
    n_plus = sum(1 for x, y in zip(signs, signs[1:]) if (x > 0) != (y > 0))
    n_minus = (len(stripped) - 1) - n_plus
    return Inertia(n_plus, n_minus, n_zero)


def rank_exact(m) -> int:
    """Rank over the rationals via fraction-free elimination."""
    if isinstance(m, RatSymMatrix):
        rows = []
        for row in m.rows:
            mult = _int_lcm(*(f.denominator for f in row)) if row else 1
            rows.append([int(f * mult) for f in row])
    else:
        rows = [list(r) for r in m.rows]
    n = m.n
    a = rows
    rank = 0
    prev = 1
    for col in range(n):
        piv = -1
        for i in range(rank, n):
            if a[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            a[piv], a[rank] = a[rank], a[piv]
        pv = a[rank][col]
        ar = a[rank]
        for i in range(rank + 1, n):
            ai = a[i]
            aic = ai[col]
            for j in range(col + 1, n):
                ai[j] = (ai[j] * pv - aic * ar[j]) // prev
            ai[col] = 0
        prev = pv
        rank += 1
        if rank == n:
            break
    return rank


def _poly_derivative(coeffs):
    n = len(coeffs) - 1
    return [c * (n - i) for i, c in enumerate(coeffs[:-1])]


def _poly_content(coeffs) -> int:
    g = 0
    for c in coeffs:
        g = _int_gcd(g, abs(c))
    return g or 1


def _poly_primitive(coeffs):
    """Strip leading zeros, divide by the content, make the lead positive."""
    i = 0
    while i < len(coeffs) and coeffs[i] == 0:
        i += 1
    coeffs = list(coeffs[i:])
    if not coeffs:
        return []
    g = _poly_content(coeffs)
    if coeffs[0] < 0:
        g = -g
    return [c // g for c in coeffs]


def _poly_pseudo_rem(f, g):
    """Pseudo-remainder of f by g (both descending, g nonzero)."""
    f = list(f)
    dg = len(g) - 1
    lg = g[0]
    while f and len(f) - 1 >= dg:
        if f[0] == 0:
            f.pop(0)
            continue
        lf = f[0]
        f = [c * lg for c in f]
        for i in range(dg + 1):
            f[i] -= lf * g[i]
        f.pop(0)
    return f


def poly_gcd(f, g):
    """Gcd of integer polynomials by primitive pseudo-remainder sequences."""
    f = _poly_primitive(f)
    g = _poly_primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _poly_primitive(_poly_pseudo_rem(f, g))
        f, g = g, r
    return f


def distinct_count_exact(p: CharPoly) -> int:
    """Number of distinct roots: deg p minus deg gcd(p, p')."""
    g = poly_gcd(list(p.coeffs), _poly_derivative(p.coeffs))
    return p.degree - (len(g) - 1)


def spectrum_symmetric_exact(p: CharPoly) -> bool:
    """True iff p(x) = (-1)^deg p(-x), i.e. all odd-index coefficients vanish."""
    return all(c == 0 for c in p.coeffs[1::2])


def consecutive_nonzero_witness(p: CharPoly) -> Optional[int]:
    """Least index i with both c_i and c_{i+1} nonzero in the zero-root-stripped
    polynomial, or None when no such pair exists."""
    stripped, _ = p.stripped()
    for i in range(len(stripped) - 1):
        if stripped[i] != 0 and stripped[i + 1] != 0:
            return i
    return None


def _int_congruent(m: RatSymMatrix) -> IntSymMatrix:
    """Integer matrix congruent to m: scale row/column i by a positive
    denominator-clearing multiplier. Congruence preserves inertia."""
    mults = []
    for row in m.rows:
        mult = _int_lcm(*(f.denominator for f in row)) if row else 1
        mults.append(mult)
    rows = [
        [int(v * mults[i] * mults[j]) for j, v in enumerate(row)]
        for i, row in enumerate(m.rows)
    ]
    return IntSymMatrix(rows)


def inertia_of_matrix(m) -> Inertia:
    """Exact inertia of an integer or rational symmetric matrix."""
    if isinstance(m, RatSymMatrix):
        m = _int_congruent(m)
    return inertia_exact(char_poly(m))


def haynsworth_check(m, pivot_set) -> bool:
    """Verify inertia additivity: In(m) = In(pivot block) + In(Schur complement)."""
    if isinstance(m, IntSymMatrix):
        m = RatSymMatrix.from_int(m)
    pivot = sorted(set(pivot_set))
    block = m.submatrix(pivot)
    comp = schur_complement(m, pivot)
    whole = inertia_of_matrix(m)
    part = inertia_of_matrix(block)
    rest = inertia_of_matrix(comp)
    return whole == Inertia(part.n_plus + rest.n_plus,
                            part.n_minus + rest.n_minus,
                            part.n_zero + rest.n_zero)
