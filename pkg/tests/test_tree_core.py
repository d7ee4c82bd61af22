import math
import random

import pytest

from conftest import make_path, make_star, relabeled
from treecount.enumeration import all_trees, random_labeled_tree
from treecount.families import FamilySpec, construct
from treecount.tree import (DegenerateTreeError, LabelOutOfRangeError,
                            MalformedInputError, NotALeafError, NotATreeError,
                            TooCloseError, Tree, canonical_form, centers,
                            is_isomorphic, parse_tree, path_between,
                            path_decomposition, serialize_tree, strip_leaves)


class TestParse:
    def test_edgelist_p3(self):
        t = parse_tree("3\n0 1\n1 2")
        assert t.n == 3 and t.edges == ((0, 1), (1, 2))
        assert centers(t) == (1,)

    def test_levelseq_star(self):
        t = parse_tree("0 1 1 1", fmt="levelseq")
        assert is_isomorphic(t, make_star(4))

    def test_cycle_rejected(self):
        with pytest.raises(NotATreeError):
            parse_tree("4\n0 1\n1 2\n2 0")

    def test_disconnected_rejected(self):
        with pytest.raises(NotATreeError):
            parse_tree("4\n0 1\n0 1\n2 3")

    def test_wrong_edge_count(self):
        with pytest.raises(NotATreeError):
            parse_tree("4\n0 1\n1 2")

    def test_bad_tokens(self):
        with pytest.raises(MalformedInputError):
            parse_tree("3\n0 x\n1 2")
        with pytest.raises(MalformedInputError):
            parse_tree("three\n0 1\n1 2")
        with pytest.raises(MalformedInputError):
            parse_tree("0 2 1", fmt="levelseq")

    def test_label_out_of_range(self):
        with pytest.raises(LabelOutOfRangeError):
            parse_tree("3\n0 1\n1 5")


class TestSerialize:
    def test_edgelist_bytes(self):
        assert serialize_tree(make_path(3)) == "3\n0 1\n1 2\n"
        assert serialize_tree(Tree(1, [])) == "1\n"

    def test_levelseq_bytes(self):
        assert serialize_tree(make_star(4), "levelseq") == "0 1 1 1\n"

    def test_roundtrip_all_small(self):
        for n in range(1, 11):
            for t in all_trees(n):
                assert parse_tree(serialize_tree(t)) == t
                back = parse_tree(serialize_tree(t, "levelseq"), fmt="levelseq")
                assert is_isomorphic(back, t)


class TestCanonicalForm:
    def test_pinned_sequences(self):
        assert canonical_form(make_path(4)).level_seq == (0, 1, 1, 2)
        assert canonical_form(make_star(4)).level_seq == (0, 1, 1, 1)

    def test_relabeling_invariance(self):
        rng = random.Random(5)
        for _ in range(200):
            t = random_labeled_tree(rng.randint(2, 30), rng)
            want = canonical_form(t)
            for _ in range(100):
                assert canonical_form(relabeled(t, rng)) == want

    def test_isomorphism_examples(self):
        rng = random.Random(1)
        assert is_isomorphic(make_path(4), relabeled(make_path(4), rng))
        assert not is_isomorphic(make_path(4), make_star(4))
        pendant_pair = construct(FamilySpec("pk_ab", k=4, a=1, b=1))
        assert is_isomorphic(pendant_pair, make_path(6))


class TestCenters:
    def test_examples(self):
        assert centers(make_path(5)) == (2,)
        assert centers(make_path(6)) == (2, 3)
        assert centers(make_star(5)) == (0,)

    def test_center_eccentricity(self):
        # every center vertex has eccentricity ceil(diam / 2)
        for n in range(1, 10):
            for t in all_trees(n):
                ecc = []
                for src in range(t.n):
                    dist = {src: 0}
                    frontier = [src]
                    while frontier:
                        nxt = []
                        for v in frontier:
                            for w in t.adj[v]:
                                if w not in dist:
                                    dist[w] = dist[v] + 1
                                    nxt.append(w)
                        frontier = nxt
                    ecc.append(max(dist.values()))
                diam = max(ecc)
                cs = centers(t)
                assert set(cs) == {v for v in range(t.n) if ecc[v] == min(ecc)}
                assert len(cs) in (1, 2)
                if len(cs) == 2:
                    assert tuple(sorted(cs)) in t.edges or cs in t.edges
                for c in cs:
                    assert ecc[c] == math.ceil(diam / 2)


class TestStripLeaves:
    def test_examples(self):
        stem, _ = strip_leaves(make_path(5))
        assert is_isomorphic(stem, make_path(3))
        stem, _ = strip_leaves(make_star(5))
        assert stem.n == 1

    def test_broom_stem(self):
        big, _ = strip_leaves(construct(FamilySpec("tprime_ndelta", n=12, delta=4)))
        assert is_isomorphic(big, construct(FamilySpec("t_ndelta", n=8, delta=3)))

    def test_degenerate(self):
        with pytest.raises(DegenerateTreeError):
            strip_leaves(Tree(2, [(0, 1)]))

    def test_stems_are_trees_exhaustive(self):
        for n in range(3, 13):
            for t in all_trees(n):
                stem, old_to_new = strip_leaves(t)  # Tree() validates shape
                assert stem.n == t.n - len(t.leaves())
                for old, new in old_to_new.items():
                    assert t.degree(old) > 1 and 0 <= new < stem.n


class TestPaths:
    def test_path_between(self):
        assert path_between(make_path(4), 0, 3) == (0, 1, 2, 3)
        assert path_between(make_path(4), 2, 2) == (2,)
        assert path_between(make_star(4), 1, 3) == (1, 0, 3)

    def test_decomposition_p5(self):
        dec = path_decomposition(make_path(5), 0, 4)
        assert dec.path == (0, 1, 2, 3, 4)
        assert [c.original_vertices for c in dec.x_components] == [(1,)]
        assert [c.original_vertices for c in dec.y_components] == [(3,)]
        assert dec.z_component.original_vertices == (2,)

    def test_decomposition_p4_odd(self):
        dec = path_decomposition(make_path(4), 0, 3)
        assert dec.z_component is None
        assert [c.original_vertices for c in dec.x_components] == [(1,)]
        assert [c.original_vertices for c in dec.y_components] == [(2,)]

    def test_decomposition_hat(self):
        # pendants in the middle of a 5-path end up inside the Z component
        t = construct(FamilySpec("hat", n=7, d=4, k=3))
        dec = path_decomposition(t, 0, 4)
        assert set(dec.z_component.original_vertices) == {2, 5, 6}
        assert dec.z_component.tree.n == 3

    def test_decomposition_partitions(self, rng):
        for _ in range(60):
            t = random_labeled_tree(rng.randint(4, 18), rng)
            leaves = t.leaves()
            x = rng.choice(leaves)
            far = [y for y in leaves if len(path_between(t, x, y)) >= 3]
            if not far:
                continue
            y = rng.choice(far)
            dec = path_decomposition(t, x, y)
            pieces = list(dec.x_components) + list(dec.y_components)
            if dec.z_component is not None:
                pieces.append(dec.z_component)
            covered = [x, y]
            for c in pieces:
                covered.extend(c.original_vertices)
            assert sorted(covered) == list(range(t.n))

    def test_decomposition_errors(self):
        with pytest.raises(NotALeafError):
            path_decomposition(make_path(5), 1, 4)
        with pytest.raises(TooCloseError):
            path_decomposition(Tree(2, [(0, 1)]), 0, 1)


def test_tree_validation():
    with pytest.raises(NotATreeError):
        Tree(2, [(0, 0)])
    with pytest.raises(NotATreeError):
        Tree(3, [(0, 1), (0, 1)])
    with pytest.raises(LabelOutOfRangeError):
        Tree(3, [(0, 1), (1, 3)])
    with pytest.raises(NotATreeError):
        Tree(0, [])
