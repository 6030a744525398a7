import json
import math
import random

import pytest

from eccmat import (
    FLOAT_TOL,
    TreeFacts,
    Verdict,
    check_block_structure,
    check_core_minor_sums,
    check_diametrical,
    check_distinct_counts,
    check_inertia,
    check_inertia_float_agreement,
    check_least_eigenvalue_bound,
    check_odd_core_eigenvalues,
    check_pair_block_inertia,
    check_radius_bound,
    check_rank,
    check_star_spectrum,
    check_symmetry,
    min_radius_bound,
    min_radius_tree,
    tree_checks,
)
from eccmat.families import (
    center_pendant_tree,
    cycle,
    diametrical_examples,
    path,
    pruefer_random,
    spider,
    star,
)
from eccmat.graphs import Tree


class TestVerdictType:
    def test_json_shape(self):
        v = Verdict("tree-rank", "path:4", 4, 4, True)
        data = json.loads(v.to_json())
        assert list(data) == [
            "theorem_id",
            "instance",
            "expected",
            "computed",
            "pass",
            "detail",
        ]
        assert data["pass"] is True

    def test_failure_gets_default_detail(self):
        t = path(4)
        v = check_inertia(t, TreeFacts(t, corrupt=True))
        if not v.passed:
            assert v.detail


class TestInertiaCheck:
    @pytest.mark.parametrize(
        "tree,label",
        [
            (path(2), "p2"),
            (path(4), "p4"),
            (path(5), "p5"),
            (star(6), "star6"),
            (spider(3, 2), "spider"),
        ],
    )
    def test_passes(self, tree, label):
        v = check_inertia(tree)
        assert v.passed, v.detail

    def test_expected_triples(self):
        assert tuple(check_inertia(star(6)).expected) == (1, 5, 0)
        assert tuple(check_inertia(path(4)).expected) == (2, 2, 0)
        assert tuple(check_inertia(spider(3, 2)).expected) == (3, 3, 1)
        assert tuple(check_inertia(path(7)).expected) == (2, 2, 3)

    def test_theorem_id(self):
        assert check_inertia(path(4)).theorem_id == "tree-inertia"


class TestRankCheck:
    def test_known_ranks(self):
        assert check_rank(path(6)).expected == 4
        assert check_rank(path(5)).expected == 4
        assert check_rank(star(7)).expected == 7
        assert check_rank(spider(3, 2)).expected == 6
        for t in (path(6), path(5), star(7), spider(3, 2)):
            assert check_rank(t).passed

    def test_random_trees(self):
        for i in range(15):
            t = pruefer_random(9, f"rank:{i}")
            v = check_rank(t)
            assert v.passed, v.detail


class TestSymmetryCheck:
    def test_odd_diameter_symmetric(self):
        for t in (path(4), path(6), center_pendant_tree(8, 3, 1, 3)):
            v = check_symmetry(t)
            assert v.passed and v.computed["symmetric"]

    def test_even_diameter_not_symmetric(self):
        for t in (star(5), spider(3, 2), path(5)):
            v = check_symmetry(t)
            assert v.passed, v.detail
            assert not v.computed["symmetric"]

    def test_theorem_id(self):
        assert check_symmetry(path(4)).theorem_id == "spectrum-symmetry"


class TestDistinctCountCheck:
    def test_star_has_three(self):
        v = check_distinct_counts(star(9))
        assert v.passed and v.computed == 3

    def test_p4_has_four(self):
        v = check_distinct_counts(path(4))
        assert v.passed and v.computed == 4

    def test_longer_odd_diameter_has_five(self):
        for t in (path(6), path(10), center_pendant_tree(9, 5, 1, 2)):
            v = check_distinct_counts(t)
            assert v.passed, v.detail
            assert v.computed == 5

    def test_even_diameter_at_least_four(self):
        v = check_distinct_counts(spider(3, 2))
        assert v.passed and v.computed >= 4

    def test_small_orders_rejected(self):
        with pytest.raises(ValueError):
            check_distinct_counts(path(3))


class TestStarSpectrumCheck:
    @pytest.mark.parametrize("n", [3, 4, 5, 11, 30])
    def test_passes(self, n):
        v = check_star_spectrum(n)
        assert v.passed, v.detail
        assert "max abs error" in v.detail

    def test_small_orders_rejected(self):
        with pytest.raises(ValueError):
            check_star_spectrum(2)


class TestRadiusBound:
    def test_small_case_closed_value(self):
        assert abs(min_radius_bound(4) - 4.0) < 1e-12

    def test_monotone_in_n(self):
        vals = [min_radius_bound(n) for n in range(4, 40)]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_extremal_tree_order(self):
        for n in range(4, 30):
            assert min_radius_tree(n).n == n

    def test_bounds_reject_small_n(self):
        with pytest.raises(ValueError):
            min_radius_bound(3)
        with pytest.raises(ValueError):
            min_radius_tree(3)

    @pytest.mark.parametrize("n", [4, 7, 10, 15, 16, 17, 20])
    def test_extremal_equality(self, n):
        t = min_radius_tree(n)
        v = check_radius_bound(t)
        assert v.passed, v.detail
        assert "equality required" in v.detail

    def test_equality_detected_up_to_isomorphism(self):
        t = min_radius_tree(10)
        perm = list(range(10))
        random.Random(3).shuffle(perm)
        relabeled = Tree(10, [(perm[u], perm[v]) for u, v in t.edges()])
        v = check_radius_bound(relabeled)
        assert v.passed and "equality required" in v.detail

    def test_generic_tree_strictly_above(self):
        for i in range(10):
            t = pruefer_random(12, f"rb:{i}")
            v = check_radius_bound(t)
            assert v.passed, v.detail

    def test_small_orders_rejected(self):
        with pytest.raises(ValueError):
            check_radius_bound(path(3))


class TestLeastEigenvalueBound:
    def test_extremal_equality(self):
        for n in (9, 18):
            v = check_least_eigenvalue_bound(min_radius_tree(n))
            assert v.passed, v.detail
            assert "equality required" in v.detail

    def test_generic_odd_tree(self):
        v = check_least_eigenvalue_bound(path(8))
        assert v.passed, v.detail

    def test_even_diameter_rejected(self):
        with pytest.raises(ValueError, match="odd diameter"):
            check_least_eigenvalue_bound(spider(3, 2))
        with pytest.raises(ValueError, match="odd diameter"):
            check_least_eigenvalue_bound(star(5))


class TestPairBlockInertia:
    @pytest.mark.parametrize("d,n", [(1, 2), (1, 4), (2, 3), (3, 5)])
    def test_passes(self, d, n):
        v = check_pair_block_inertia(d, n)
        assert v.passed, v.detail
        assert tuple(v.computed["inertia"]) == (n, n, 0)
        assert v.computed["additive"]

    def test_arguments_validated(self):
        with pytest.raises(ValueError):
            check_pair_block_inertia(0, 2)
        with pytest.raises(ValueError):
            check_pair_block_inertia(1, 1)


class TestCoreMinorSums:
    def test_frozen_reference_values(self):
        v = check_core_minor_sums(2, 3)
        assert v.passed, v.detail
        # 3 deletions at -648 each plus 3 at -288 each
        assert v.expected["minor_sum"] == -2808
        assert v.computed["minor_sum"] == -2808

    def test_two_distinguished_case(self):
        v = check_core_minor_sums(2, 2)
        assert v.passed, v.detail
        assert v.computed["minor_sum"] == 32
        v = check_core_minor_sums(3, 2)
        assert v.passed and v.computed["minor_sum"] == 108

    @pytest.mark.parametrize("d,l", [(2, 4), (3, 3), (4, 2), (5, 5)])
    def test_passes(self, d, l):
        v = check_core_minor_sums(d, l)
        assert v.passed, v.detail
        assert v.computed["single_sign"] and v.computed["nonzero"]

    def test_arguments_validated(self):
        with pytest.raises(ValueError):
            check_core_minor_sums(1, 2)
        with pytest.raises(ValueError):
            check_core_minor_sums(2, 1)


class TestBlockStructure:
    @pytest.mark.parametrize(
        "tree", [path(4), path(6), path(5), spider(3, 2), center_pendant_tree(9, 3, 2, 3)]
    )
    def test_passes(self, tree):
        v = check_block_structure(tree)
        assert v.passed, v.detail

    def test_random_trees_both_parities(self):
        seen = set()
        for i in range(25):
            t = pruefer_random(9, f"bs:{i}")
            facts = TreeFacts(t)
            if facts.meta.diameter < 3:
                continue
            seen.add(facts.meta.diameter % 2)
            v = check_block_structure(t, facts)
            assert v.passed, v.detail
        assert seen == {0, 1}

    def test_small_diameter_rejected(self):
        with pytest.raises(ValueError):
            check_block_structure(star(5))

    def test_corruption_caught(self):
        t = path(4)
        facts = TreeFacts(t, corrupt=True)
        v = check_block_structure(t, facts)
        assert not v.passed
        assert v.detail


class TestDiametrical:
    def test_examples_pass(self):
        for g in diametrical_examples():
            v = check_diametrical(g)
            assert v.passed, v.detail

    def test_ids_and_labels(self):
        v = check_diametrical(cycle(4), "box")
        assert v.theorem_id == "diametrical-spectrum"
        assert v.instance == "box"

    def test_non_diametrical_rejected(self):
        with pytest.raises(ValueError):
            check_diametrical(cycle(5))


class TestFloatAgreement:
    def test_examples(self):
        for t in (path(2), path(6), star(6), spider(3, 2)):
            v = check_inertia_float_agreement(t)
            assert v.passed, v.detail

    def test_random_trees(self):
        for i in range(10):
            t = pruefer_random(10, f"fa:{i}")
            assert check_inertia_float_agreement(t).passed


class TestOddCoreEigenvalues:
    @pytest.mark.parametrize("d", range(1, 7))
    def test_passes(self, d):
        v = check_odd_core_eigenvalues(d)
        assert v.passed, v.detail

    def test_closed_form_values(self):
        v = check_odd_core_eigenvalues(1)
        # (sqrt(9 + 16) +- 3) / 2 = 4, 1
        want = [4.0, 1.0, -1.0, -4.0]
        assert max(abs(a - b) for a, b in zip(v.expected, want)) < 1e-12

    def test_arguments_validated(self):
        with pytest.raises(ValueError):
            check_odd_core_eigenvalues(0)


class TestTreeChecks:
    def test_battery_order_odd_diameter(self):
        facts = TreeFacts(path(6))
        ids = [v.theorem_id for v in tree_checks(facts)]
        assert ids == [
            "tree-inertia",
            "tree-rank",
            "spectrum-symmetry",
            "distinct-count",
            "block-structure",
            "radius-lower-bound",
            "least-eigenvalue-bound",
            "inertia-float-agreement",
        ]

    def test_battery_even_diameter_drops_least_bound(self):
        ids = [v.theorem_id for v in tree_checks(TreeFacts(spider(3, 2)))]
        assert "least-eigenvalue-bound" not in ids
        assert "block-structure" in ids

    def test_battery_small_tree(self):
        ids = [v.theorem_id for v in tree_checks(TreeFacts(path(3)))]
        assert ids == ["tree-inertia", "tree-rank", "spectrum-symmetry",
                       "inertia-float-agreement"]

    def test_all_pass_on_clean_samples(self):
        for n, i in [(5, 0), (8, 1), (11, 2)]:
            facts = TreeFacts(pruefer_random(n, f"tc:{i}"))
            for v in tree_checks(facts):
                assert v.passed, f"{v.theorem_id}: {v.detail}"

    def test_corruption_fails_somewhere(self):
        facts = TreeFacts(path(4), corrupt=True)
        outcomes = [v.passed for v in tree_checks(facts)]
        assert not all(outcomes)

    def test_facts_must_match_tree(self):
        with pytest.raises(ValueError, match="different tree"):
            check_inertia(path(4), TreeFacts(path(5)))


class TestExtremalBoundConsistency:
    def test_bound_equals_extremal_radius(self):
        for n in range(4, 25):
            facts = TreeFacts(min_radius_tree(n))
            assert abs(facts.eigenvalues[0] - min_radius_bound(n)) <= FLOAT_TOL

    def test_negated_bound_equals_extremal_least(self):
        for n in range(4, 25):
            facts = TreeFacts(min_radius_tree(n))
            assert abs(facts.eigenvalues[-1] + min_radius_bound(n)) <= FLOAT_TOL
