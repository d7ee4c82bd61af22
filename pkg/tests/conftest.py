import random

import pytest

from treecount.tree import Tree


def make_path(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def make_star(n: int) -> Tree:
    return Tree(n, [(0, i) for i in range(1, n)])


def relabeled(t: Tree, rng: random.Random) -> Tree:
    perm = list(range(t.n))
    rng.shuffle(perm)
    return Tree(t.n, [(perm[u], perm[v]) for u, v in t.edges])


@pytest.fixture
def rng():
    return random.Random(20240331)
