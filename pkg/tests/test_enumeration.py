import random

import pytest

from bruteforce import class_count_by_formula, prufer_class_count
from conftest import make_path, make_star
from treecount.enumeration import (MAX_ORDER, TooLargeError, TreeConstraint,
                                   all_level_sequences, all_trees,
                                   all_trees_sharded, random_labeled_tree,
                                   tree_from_prufer, trees_matching)
from treecount.families import FamilySpec, construct
from treecount.invariants import matching_number
from treecount.tree import canonical_form, is_isomorphic


class TestGenerator:
    def test_smallest_orders(self):
        assert [t.n for t in all_trees(1)] == [1]
        got = list(all_trees(4))
        assert len(got) == 2
        assert any(is_isomorphic(t, make_path(4)) for t in got)
        assert any(is_isomorphic(t, make_star(4)) for t in got)

    def test_counts_match_prufer_dedup(self):
        for n in range(1, 9):
            assert sum(1 for _ in all_trees(n)) == prufer_class_count(n)

    def test_counts_match_formula(self):
        # third route: Euler-transform count (itself validated against the
        # Pruefer dedup above)
        for n in range(1, 9):
            assert class_count_by_formula(n) == prufer_class_count(n)
        for n in range(1, 15):
            assert sum(1 for _ in all_trees(n)) == class_count_by_formula(n)

    def test_no_duplicate_classes(self):
        for n in range(1, 13):
            forms = [canonical_form(t) for t in all_trees(n)]
            assert len(set(forms)) == len(forms)

    def test_deterministic_order(self):
        assert list(all_level_sequences(9)) == list(all_level_sequences(9))

    def test_every_emission_is_a_tree(self):
        for n in range(2, 13):
            for t in all_trees(n):
                assert t.n == n and len(t.edges) == n - 1

    def test_order_bounds(self):
        with pytest.raises(TooLargeError):
            list(all_trees(MAX_ORDER + 1))
        with pytest.raises(TooLargeError):
            list(all_trees(0))
        assert sum(1 for _ in all_trees(18, max_order=18)) > 0


class TestSharding:
    def test_partition_is_exact(self):
        for n in range(2, 15):
            whole = [canonical_form(t) for t in all_trees(n)]
            for jobs in (1, 2, 4, 8):
                merged = []
                for shard in range(jobs):
                    merged.extend(canonical_form(t)
                                  for t in all_trees_sharded(n, shard, jobs))
                assert sorted(merged) == sorted(whole)

    def test_bad_shard(self):
        with pytest.raises(ValueError):
            list(all_trees_sharded(5, 3, 2))


class TestConstraints:
    def test_matching_class(self):
        members = list(trees_matching(6, TreeConstraint(matching=2)))
        assert all(matching_number(t) == 2 for t in members)
        target = canonical_form(construct(FamilySpec("a_nq", n=6, q=2)))
        assert target in {canonical_form(t) for t in members}

    def test_domination_class_is_coronas(self):
        members = {canonical_form(t)
                   for t in trees_matching(8, TreeConstraint(domination=4))}
        coronas = set()
        for h in all_trees(4):
            edges = list(h.edges) + [(v, 4 + v) for v in range(4)]
            from treecount.tree import Tree
            coronas.add(canonical_form(Tree(8, edges)))
        assert members == coronas

    def test_diameter_class_contains_hat(self):
        members = {canonical_form(t)
                   for t in trees_matching(10, TreeConstraint(diameter=4))}
        assert canonical_form(construct(FamilySpec("hat", n=10, d=4, k=3))) in members

    def test_perfect_matching_filter(self):
        members = list(trees_matching(8, TreeConstraint(perfect_matching=True,
                                                        min_max_degree=3)))
        assert members
        assert all(matching_number(t) == 4 for t in members)
        assert all(max(t.degree(v) for v in range(8)) >= 3 for t in members)


class TestPrufer:
    def test_decode_examples(self):
        assert is_isomorphic(tree_from_prufer([1, 1]), make_star(4))
        assert is_isomorphic(tree_from_prufer([1, 2]), make_path(4))
        with pytest.raises(ValueError):
            tree_from_prufer([5, 0])

    def test_decode_covers_all_classes(self):
        import itertools
        seen = set()
        for seq in itertools.product(range(6), repeat=4):
            seen.add(canonical_form(tree_from_prufer(seq)))
        assert len(seen) == 6

    def test_random_tree_reproducible(self):
        a = random_labeled_tree(12, random.Random(3))
        b = random_labeled_tree(12, random.Random(3))
        assert a == b
        assert random_labeled_tree(1, random.Random(0)).n == 1
        assert random_labeled_tree(2, random.Random(0)).edges == ((0, 1),)
