"""Floating-point symmetric eigensolver and spectrum utilities.

The eigensolver is a cyclic-by-row Jacobi iteration with a fixed sweep
budget. It is deterministic for a fixed input, needs no external library,
and at the matrix orders used here (well under a few hundred) it reaches
off-diagonal norms near machine precision in a handful of sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact import Inertia
from .matrices import IntSymMatrix

DEFAULT_EIGEN_TOL = 1e-12
DEFAULT_SWEEPS = 30


class JacobiConvergenceError(RuntimeError):
    """Raised when the sweep budget is exhausted; carries the off-diagonal norm."""

    def __init__(self, off_norm: float, sweeps: int):
        super().__init__(
            f"Jacobi iteration did not converge in {sweeps} sweeps; "
            f"off-diagonal norm {off_norm:.3e}"
        )
        self.off_norm = off_norm


def _as_float_rows(m):
    if isinstance(m, IntSymMatrix):
        return [[float(x) for x in row] for row in m.rows]
    return [[float(x) for x in row] for row in m]


def eigenvalues_sym(m, tol: float = DEFAULT_EIGEN_TOL, max_sweeps: int = DEFAULT_SWEEPS):
    """All eigenvalues of a symmetric matrix, descending, by cyclic Jacobi."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = _as_float_rows(m)
    n = len(a)
    if n == 1:
        return [a[0][0]]
    norm = math.sqrt(sum(x * x for row in a for x in row))
    if norm == 0.0:
        return [0.0] * n
    target = tol * norm
    # Rotations on entries this small only churn roundoff.
    skip = 1e-18 * norm
    rng = range(n)
    off = norm
    for _ in range(max_sweeps):
        off2 = 0.0
        for i in rng:
            ai = a[i]
            for j in range(i + 1, n):
                off2 += ai[j] * ai[j]
        off = math.sqrt(2.0 * off2)
        if off <= target:
            return sorted((a[i][i] for i in rng), reverse=True)
        for p in range(n - 1):
            ap = a[p]
            for q in range(p + 1, n):
                apq = ap[q]
                if abs(apq) <= skip:
                    continue
                aq = a[q]
                theta = (aq[q] - ap[p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0)
                    )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in rng:
                    ak = a[k]
                    akp = ak[p]
                    akq = ak[q]
                    ak[p] = c * akp - s * akq
                    ak[q] = s * akp + c * akq
                for k in rng:
                    akp = ap[k]
                    akq = aq[k]
                    ap[k] = c * akp - s * akq
                    aq[k] = s * akp + c * akq
    off2 = 0.0
    for i in rng:
        ai = a[i]
        for j in range(i + 1, n):
            off2 += ai[j] * ai[j]
    off = math.sqrt(2.0 * off2)
    if off <= target:
        return sorted((a[i][i] for i in rng), reverse=True)
    raise JacobiConvergenceError(off, max_sweeps)


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues (descending) with multiplicities."""

    values: tuple
    multiplicities: tuple
    group_tol: float

    def __post_init__(self):
        if len(self.values) != len(self.multiplicities):
            raise ValueError("values and multiplicities must align")
        for a, b in zip(self.values, self.values[1:]):
            if a - b <= self.group_tol:
                raise ValueError("distinct spectrum values must differ by more than group_tol")

    @property
    def order(self) -> int:
        return sum(self.multiplicities)


def group_spectrum(values, group_tol: float) -> Spectrum:
    """Cluster a descending eigenvalue list; cluster representative is the mean."""
    if group_tol <= 0:
        raise ValueError("group_tol must be positive")
    vals = list(values)
    if any(a < b for a, b in zip(vals, vals[1:])):
        raise ValueError("values must be sorted descending")
    reps = []
    mults = []
    i = 0
    while i < len(vals):
        j = i + 1
        while j < len(vals) and vals[j - 1] - vals[j] <= group_tol:
            j += 1
        reps.append(sum(vals[i:j]) / (j - i))
        mults.append(j - i)
        i = j
    return Spectrum(tuple(reps), tuple(mults), group_tol)


def spectral_radius(m: IntSymMatrix, tol: float = DEFAULT_EIGEN_TOL) -> float:
    """Largest eigenvalue; for entrywise nonnegative input this is the
    spectral radius (Perron-Frobenius)."""
    if any(x < 0 for row in m.rows for x in row):
        raise ValueError("spectral_radius expects an entrywise nonnegative matrix")
    return eigenvalues_sym(m, tol)[0]


def least_eigenvalue(m: IntSymMatrix, tol: float = DEFAULT_EIGEN_TOL) -> float:
    return eigenvalues_sym(m, tol)[-1]


def inertia_float(values, zero_tol: float) -> Inertia:
    """Sign counts of a float eigenvalue list with a zero band of width zero_tol."""
    if zero_tol < 0:
        raise ValueError("zero_tol must be nonnegative")
    n_plus = sum(1 for v in values if v > zero_tol)
    n_minus = sum(1 for v in values if v < -zero_tol)
    return Inertia(n_plus, n_minus, len(values) - n_plus - n_minus)


def default_group_tol(m: IntSymMatrix) -> float:
    return 1e-8 * max(1.0, float(m.max_abs()))


def default_zero_tol(m: IntSymMatrix) -> float:
    return 1e-8 * float(m.max_abs())
