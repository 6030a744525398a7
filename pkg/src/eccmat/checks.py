"""Verification predicates comparing computed spectra against closed forms.

Each check returns a Verdict pairing the predicted value with the computed
one. Integer claims use exact equality; float claims use FLOAT_TOL.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import cached_property

from .exact import (
    Inertia,
    char_poly,
    consecutive_nonzero_witness,
    distinct_count_exact,
    haynsworth_check,
    inertia_exact,
    inertia_of_matrix,
    rank_exact,
    spectrum_symmetric_exact,
)
from .families import canonical_key, center_pendant_tree, star
from .graphs import (
    Graph,
    Tree,
    diametrical_pairing,
    distance_matrix,
    partition_vertices,
    tree_meta,
)
from .matrices import (
    IntSymMatrix,
    bareiss_det,
    deep_mid_block,
    eccentricity_matrix,
    even_diameter_core,
    odd_diameter_core,
    principal_minor_sum,
    schur_complement,
)
from .spectra import default_zero_tol, eigenvalues_sym, inertia_float

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class Verdict:
    """Outcome of one predicate on one instance.

    The serialized field name for `passed` is "pass"; the dataclass field
    avoids the keyword.
    """

    theorem_id: str
    instance: str
    expected: object
    computed: object
    passed: bool
    detail: str = ""

    def to_json(self) -> str:
        return json.dumps(
            {
                "theorem_id": self.theorem_id,
                "instance": self.instance,
                "expected": self.expected,
                "computed": self.computed,
                "pass": self.passed,
                "detail": self.detail,
            }
        )


def _verdict(theorem_id, instance, expected, computed, passed, detail=""):
    if not passed and not detail:
        detail = f"expected {expected}, computed {computed}"
    return Verdict(theorem_id, instance, expected, computed, passed, detail)


class TreeFacts:
    """Lazily computed quantities for one tree, shared across checks.

    corrupt=True bumps one off-diagonal entry pair of the eccentricity
    matrix by 1; it exists solely as a negative-control hook.
    """

    def __init__(self, tree: Tree, label: str | None = None, corrupt: bool = False):
        self.tree = tree
        self.label = label if label is not None else f"tree:n={tree.n}"
        self.corrupt = corrupt

    @cached_property
    def dist(self) -> IntSymMatrix:
        return distance_matrix(self.tree)

    @cached_property
    def meta(self):
        return tree_meta(self.tree, self.dist)

    @cached_property
    def matrix(self) -> IntSymMatrix:
        m = eccentricity_matrix(self.dist, self.meta.ecc)
        if self.corrupt and m.n >= 2:
            rows = [list(r) for r in m.rows]
            rows[0][m.n - 1] += 1
            rows[m.n - 1][0] += 1
            m = IntSymMatrix(rows)
        return m

    @cached_property
    def poly(self):
        return char_poly(self.matrix)

    @cached_property
    def inertia(self) -> Inertia:
        return inertia_exact(self.poly)

    @cached_property
    def eigenvalues(self):
        return eigenvalues_sym(self.matrix)


def _facts(t: Tree, facts: TreeFacts | None) -> TreeFacts:
    if facts is None:
        return TreeFacts(t)
    if facts.tree is not t:
        raise ValueError("facts were built for a different tree")
    return facts


def check_inertia(t: Tree, facts: TreeFacts | None = None) -> Verdict:
    """Inertia is (1,n-1,0) for stars, (2,2,n-4) for odd diameter >= 3,
    (l,l,n-2l) for even diameter >= 4."""
    f = _facts(t, facts)
    n = t.n
    if n < 2:
        raise ValueError("check_inertia requires n >= 2")
    diam = f.meta.diameter
    if diam <= 2:
        expected = Inertia(1, n - 1, 0)
    elif diam % 2 == 1:
        expected = Inertia(2, 2, n - 4)
    else:
        l = f.meta.distinguished_count
        expected = Inertia(l, l, n - 2 * l)
    computed = f.inertia
    return _verdict("tree-inertia", f.label, expected, computed, expected == computed)


def check_rank(t: Tree, facts: TreeFacts | None = None) -> Verdict:
    """Rank is n for stars, 4 for odd diameter >= 3, 2l for even diameter >= 4."""
    f = _facts(t, facts)
    diam = f.meta.diameter
    if diam <= 2:
        expected = t.n
    elif diam % 2 == 1:
        expected = 4
    else:
        expected = 2 * f.meta.distinguished_count
    computed = rank_exact(f.matrix)
    return _verdict("tree-rank", f.label, expected, computed, expected == computed)


def check_symmetry(t: Tree, facts: TreeFacts | None = None) -> Verdict:
    """The spectrum is symmetric about 0 exactly for odd diameter; even
    diameter must instead show a consecutive nonzero coefficient pair."""
    f = _facts(t, facts)
    if t.n < 2:
        raise ValueError("check_symmetry requires n >= 2")
    odd = f.meta.diameter % 2 == 1
    symmetric = spectrum_symmetric_exact(f.poly)
    if odd:
        expected = {"symmetric": True}
        computed = {"symmetric": symmetric}
    else:
        witness = consecutive_nonzero_witness(f.poly)
        expected = {"symmetric": False, "witness": "present"}
        computed = {
            "symmetric": symmetric,
            "witness": witness if witness is not None else "absent",
        }
    passed = symmetric == odd and (odd or computed["witness"] != "absent")
    return _verdict("spectrum-symmetry", f.label, expected, computed, passed)


def check_distinct_counts(t: Tree, facts: TreeFacts | None = None) -> Verdict:
    """Distinct eigenvalue count: 3 for stars, 4 for the odd-diameter tree
    on 4 vertices, 5 for odd diameter with n >= 5, >= 4 otherwise."""
    f = _facts(t, facts)
    n = t.n
    if n < 4:
        raise ValueError("check_distinct_counts requires n >= 4")
    diam = f.meta.diameter
    computed = distinct_count_exact(f.poly)
    if diam <= 2:
        expected = 3
        passed = computed == 3
    elif diam % 2 == 1:
        expected = 4 if n == 4 else 5
        passed = computed == expected
    else:
        expected = ">=4"
        passed = computed >= 4
    return _verdict("distinct-count", f.label, expected, computed, passed)


def check_star_spectrum(n: int) -> Verdict:
    """Star spectrum is n-2+s, n-2-s (s = sqrt(n^2-3n+3)), and -2 with
    multiplicity n-2, within FLOAT_TOL per eigenvalue."""
    if n < 3:
        raise ValueError("check_star_spectrum requires n >= 3")
    s = math.sqrt(n * n - 3 * n + 3)
    expected = [n - 2 + s, n - 2 - s] + [-2.0] * (n - 2)
    facts = TreeFacts(star(n), f"star:{n}")
    computed = facts.eigenvalues
    err = max(abs(a - b) for a, b in zip(expected, computed))
    passed = err <= FLOAT_TOL
    return _verdict(
        "star-spectrum",
        f"star:{n}",
        expected,
        computed,
        passed,
        detail=f"max abs error {err:.3e}",
    )


def min_radius_bound(n: int) -> float:
    """Lower bound for the largest eccentricity eigenvalue over trees of
    order n, with the three-way case split on n."""
    if n < 4:
        raise ValueError("min_radius_bound requires n >= 4")
    if n <= 15:
        q = 13 * n - 35
        return math.sqrt((q + math.sqrt(q * q - 64 * (n - 3))) / 2)
    if n % 2 == 1:
        return math.sqrt((16 * n - 21 + math.sqrt(800 * n - 1419)) / 2)
    return math.sqrt((16 * n - 21 + 5 * math.sqrt(32 * n - 67)) / 2)


def min_radius_tree(n: int) -> Tree:
    """The tree attaining min_radius_bound(n)."""
    if n < 4:
        raise ValueError("min_radius_tree requires n >= 4")
    if n <= 15:
        return center_pendant_tree(n, 3, 0, n - 4)
    a = (n - 6) // 2
    return center_pendant_tree(n, 5, a, n - 6 - a)


_extremal_keys: dict = {}


def _extremal_key(n: int) -> str:
    key = _extremal_keys.get(n)
    if key is None:
        key = _extremal_keys[n] = canonical_key(min_radius_tree(n))
    return key


def check_radius_bound(t: Tree, facts: TreeFacts | None = None) -> Verdict:
    """Largest eigenvalue is >= min_radius_bound(n), with equality required
    when the tree is isomorphic to the extremal family member."""
    f = _facts(t, facts)
    n = t.n
    if n < 4:
        raise ValueError("check_radius_bound requires n >= 4")
    bound = min_radius_bound(n)
    rho = f.eigenvalues[0]
    extremal = canonical_key(t) == _extremal_key(n)
    if extremal:
        passed = abs(rho - bound) <= FLOAT_TOL
        expected = bound
        detail = "extremal family member: equality required"
    else:
        passed = rho >= bound - FLOAT_TOL
        expected = f">= {bound!r}"
        detail = ""
    if not passed:
        detail = f"bound {bound!r} violated by {rho!r}"
    return _verdict("radius-lower-bound", f.label, expected, rho, passed, detail)


def check_least_eigenvalue_bound(t: Tree, facts: TreeFacts | None = None) -> Verdict:
    """Least eigenvalue is <= -min_radius_bound(n) for odd diameter, with
    equality on the extremal family; even diameter is outside the hypothesis."""
    f = _facts(t, facts)
    n = t.n
    if n < 4:
        raise ValueError("check_least_eigenvalue_bound requires n >= 4")
    if f.meta.diameter % 2 == 0:
        raise ValueError("check_least_eigenvalue_bound requires odd diameter")
    bound = min_radius_bound(n)
    xi = f.eigenvalues[-1]
    extremal = canonical_key(t) == _extremal_key(n)
    if extremal:
        passed = abs(xi + bound) <= FLOAT_TOL
        expected = -bound
        detail = "extremal family member: equality required"
    else:
        passed = xi <= -bound + FLOAT_TOL
        expected = f"<= {-bound!r}"
        detail = ""
    if not passed:
        detail = f"bound {-bound!r} violated by {xi!r}"
    return _verdict("least-eigenvalue-bound", f.label, expected, xi, passed, detail)


def check_pair_block_inertia(d: int, n: int) -> Verdict:
    """deep_mid_block(d,n) has inertia (n,n,0), splitting over the leading
    block as (1,n-1,0) plus (n-1,1,0) for its Schur complement."""
    if d < 1 or n < 2:
        raise ValueError("check_pair_block_inertia requires d >= 1 and n >= 2")
    m = deep_mid_block(d, n)
    instance = f"pair-block:d={d},n={n}"
    total = inertia_exact(char_poly(m))
    pivot = list(range(n))
    additive = haynsworth_check(m, pivot)
    top = inertia_of_matrix(m.submatrix(pivot))
    comp = inertia_of_matrix(schur_complement(m, pivot))
    expected = {
        "inertia": Inertia(n, n, 0),
        "pivot_inertia": Inertia(1, n - 1, 0),
        "complement_inertia": Inertia(n - 1, 1, 0),
        "additive": True,
    }
    computed = {
        "inertia": total,
        "pivot_inertia": top,
        "complement_inertia": comp,
        "additive": additive,
    }
    return _verdict(
        "pair-block-inertia", instance, expected, computed, expected == computed
    )


def check_core_minor_sums(d: int, l: int) -> Verdict:
    """Size-(2l-1) principal minors of even_diameter_core(d,l): deletions
    touching a deep row vanish, the others match two closed forms, all
    nonzero minors share one sign, and their sum is nonzero."""
    if d < 2 or l < 2:
        raise ValueError("check_core_minor_sums requires d >= 2 and l >= 2")
    m = even_diameter_core(d, l)
    instance = f"core:d={d},l={l}"
    size = 2 * l + 1
    sign = (-1) ** (l - 2)
    mid_center_form = sign * 2 * d * (l - 1) * (l - 2) * (d + 1) ** (2 * (l - 1))
    mid_pair_form = sign * 4 * d**3 * (d + 1) ** (2 * (l - 2))

    rows = m.rows
    minors_ok = True
    bad = ""
    signs = set()
    total = 0
    for i, j in itertools.combinations(range(size), 2):
        keep = [r for r in range(size) if r != i and r != j]
        minor = bareiss_det([[rows[a][b] for b in keep] for a in keep])
        total += minor
        if minor:
            signs.add(1 if minor > 0 else -1)
        if i < l or j < l:
            form = 0
        elif j == size - 1:
            form = mid_center_form
        else:
            form = mid_pair_form
        if minor != form:
            minors_ok = False
            if not bad:
                bad = f"deletion pair ({i},{j}): minor {minor} != {form}"

    reported = principal_minor_sum(m, size - 2)
    expected = {
        "minor_sum": l * mid_center_form + (l * (l - 1) // 2) * mid_pair_form,
        "nonzero": True,
        "single_sign": True,
        "closed_forms": True,
    }
    computed = {
        "minor_sum": reported,
        "nonzero": reported != 0,
        "single_sign": len(signs) == 1,
        "closed_forms": minors_ok,
    }
    passed = expected == computed and total == reported
    return _verdict(
        "core-minor-sums", instance, expected, computed, passed, detail=bad
    )


def check_block_structure(t: Tree, facts: TreeFacts | None = None) -> Verdict:
    """Every entry of the eccentricity matrix matches the value its
    partition-class pair predicts; odd diameter additionally yields the
    two-sided antidiagonal block form."""
    f = _facts(t, facts)
    diam = f.meta.diameter
    if diam < 3:
        raise ValueError("check_block_structure requires diameter >= 3")
    part = partition_vertices(t, f.meta, dist=f.dist)
    cls = [0] * t.n
    for idx, p in enumerate(part.parts):
        for v in p:
            cls[v] = idx
    ecc = f.meta.ecc
    rows = f.matrix.rows
    mismatches = 0
    first = ""
    if part.kind == "odd":
        d = (diam - 1) // 2
        for u in range(t.n):
            for v in range(u + 1, t.n):
                ci, cj = cls[u], cls[v]
                # b is the vertex in the later class; rules cite its eccentricity.
                if ci > cj:
                    ci, cj, b = cj, ci, u
                else:
                    b = v
                if ci == cj:
                    want = 0
                elif (ci, cj) == (0, 1):
                    want = 2 * d + 1
                elif (ci, cj) == (0, 3):
                    want = ecc[b]
                elif (ci, cj) == (1, 2):
                    want = ecc[b]
                else:
                    want = 0
                if rows[u][v] != want:
                    mismatches += 1
                    if not first:
                        first = f"entry ({u},{v}) = {rows[u][v]}, predicted {want}"
        # Same-side entries must vanish: classes 0,2 against each other and 1,3.
        for u in range(t.n):
            for v in range(u + 1, t.n):
                if cls[u] % 2 == cls[v] % 2 and rows[u][v] != 0:
                    mismatches += 1
                    if not first:
                        first = f"same-side entry ({u},{v}) = {rows[u][v]} nonzero"
    else:
        d = diam // 2
        l = f.meta.distinguished_count
        rest = 2 * l
        for u in range(t.n):
            for v in range(u + 1, t.n):
                ci, cj = cls[u], cls[v]
                if ci > cj:
                    ci, cj, b = cj, ci, u
                else:
                    b = v
                deep_i = ci if ci < l else None
                if cj == rest:
                    want = ecc[b] if deep_i is not None else 0
                elif deep_i is not None and cj < l:
                    want = 2 * d if ci != cj else 0
                elif deep_i is not None:
                    want = ecc[b] if cj - l != ci else 0
                else:
                    want = 0
                if rows[u][v] != want:
                    mismatches += 1
                    if not first:
                        first = f"entry ({u},{v}) = {rows[u][v]}, predicted {want}"
    expected = {"mismatches": 0}
    computed = {"mismatches": mismatches}
    return _verdict(
        "block-structure", f.label, expected, computed, mismatches == 0, detail=first
    )


def check_diametrical(g: Graph, label: str | None = None) -> Verdict:
    """A diametrical graph's eccentricity matrix is a scaled symmetric
    permutation with spectrum +diam and -diam, each of multiplicity n/2."""
    dist = distance_matrix(g)
    pairing = diametrical_pairing(g, dist)
    if pairing is None:
        raise ValueError("graph is not diametrical")
    instance = label if label is not None else f"diametrical:n={g.n}"
    diam = max(max(row) for row in dist.rows)
    ecc = tuple(max(row) for row in dist.rows)
    m = eccentricity_matrix(dist, ecc)
    structure_ok = all(pairing[pairing[v]] == v for v in pairing)
    for u in range(g.n):
        for v in range(g.n):
            want = diam if pairing[u] == v else 0
            if m.rows[u][v] != want:
                structure_ok = False
    k = g.n // 2
    values = eigenvalues_sym(m)
    expected_vals = [float(diam)] * k + [float(-diam)] * k
    err = max(abs(a - b) for a, b in zip(expected_vals, values))
    expected = {"paired_form": True, "spectrum": expected_vals}
    computed = {"paired_form": structure_ok, "spectrum": values}
    passed = structure_ok and err <= FLOAT_TOL
    return _verdict(
        "diametrical-spectrum",
        instance,
        expected,
        computed,
        passed,
        detail=f"max abs error {err:.3e}",
    )


def check_inertia_float_agreement(t: Tree, facts: TreeFacts | None = None) -> Verdict:
    """Float inertia under the default zero band equals the exact inertia."""
    f = _facts(t, facts)
    exact = f.inertia
    approx = inertia_float(f.eigenvalues, default_zero_tol(f.matrix))
    return _verdict(
        "inertia-float-agreement", f.label, exact, approx, exact == approx
    )


def check_odd_core_eigenvalues(d: int) -> Verdict:
    """odd_diameter_core(d) has the four closed-form eigenvalues
    +-(sqrt((2d+1)^2 + 16 d^2) +- (2d+1)) / 2."""
    if d < 1:
        raise ValueError("check_odd_core_eigenvalues requires d >= 1")
    m = odd_diameter_core(d)
    root = math.sqrt((2 * d + 1) ** 2 + 16 * d * d)
    expected = sorted(
        [
            (root + (2 * d + 1)) / 2,
            (root - (2 * d + 1)) / 2,
            -(root - (2 * d + 1)) / 2,
            -(root + (2 * d + 1)) / 2,
        ],
        reverse=True,
    )
    computed = eigenvalues_sym(m)
    err = max(abs(a - b) for a, b in zip(expected, computed))
    return _verdict(
        "odd-core-eigenvalues",
        f"odd-core:d={d}",
        expected,
        computed,
        err <= FLOAT_TOL,
        detail=f"max abs error {err:.3e}",
    )


def tree_checks(facts: TreeFacts) -> list:
    """All predicates applicable to one tree, in a fixed order."""
    t = facts.tree
    n = t.n
    verdicts = [
        check_inertia(t, facts),
        check_rank(t, facts),
        check_symmetry(t, facts),
    ]
    if n >= 4:
        verdicts.append(check_distinct_counts(t, facts))
    if facts.meta.diameter >= 3:
        verdicts.append(check_block_structure(t, facts))
    if n >= 4:
        verdicts.append(check_radius_bound(t, facts))
        if facts.meta.diameter % 2 == 1:
            verdicts.append(check_least_eigenvalue_bound(t, facts))
    verdicts.append(check_inertia_float_agreement(t, facts))
    return verdicts
