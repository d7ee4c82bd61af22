"""Exact subtree counters.

A subtree is a nonempty connected induced subgraph.  All counts are exact
Python integers; star-like trees push them past 64 bits quickly, so nothing
here may silently wrap.

Conventions at the smallest orders: the vertex of a one-vertex tree counts as
a leaf, and the stem of a tree on <= 2 vertices is empty with subtree count 0.
Under these, every subtree of a 1- or 2-vertex tree contains a leaf.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tree import Tree, induced_subtree, path_between, preorder, strip_leaves


@dataclass(frozen=True)
class CountReport:
    """All per-tree counts: totals, per-vertex anchored counts, Wiener index."""

    n: int
    F: int
    Fstar: int
    wiener: int
    f_vertex: dict[int, int]
    fstar_vertex: dict[int, int]

    def to_json_dict(self) -> dict:
        """JSON form with counts as decimal strings (arbitrary precision)."""
        return {
            "n": self.n,
            "F": str(self.F),
            "Fstar": str(self.Fstar),
            "W": str(self.wiener),
            "f": {str(v): str(c) for v, c in sorted(self.f_vertex.items())},
            "fstar": {str(v): str(c) for v, c in sorted(self.fstar_vertex.items())},
        }


def _rooted_products(t: Tree, root: int) -> list[int]:
    """g[v] = number of subtrees whose vertex closest to root is v."""
    order, parent = preorder(t, root)
    g = [1] * t.n
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            g[p] *= g[v] + 1
    return g


def count_subtrees(t: Tree) -> int:
    """Total number of subtrees F(t)."""
    return sum(_rooted_products(t, 0))


def count_subtrees_at(t: Tree, v: int) -> int:
    """Number of subtrees containing v."""
    return _rooted_products(t, v)[v]


def count_subtrees_at_pair(t: Tree, u: int, v: int) -> int:
    """Number of subtrees containing both u and v (u != v).

    Such a subtree must contain the whole u-v path, so contracting that path
    to a single vertex turns the question into a one-vertex anchored count.
    """
    if u == v:
        raise ValueError("anchors must be distinct")
    on_path = set(path_between(t, u, v))
    outside = [w for w in range(t.n) if w not in on_path]
    relabel = {w: i + 1 for i, w in enumerate(outside)}
    edges = []
    for a, b in t.edges:
        ia, ib = a in on_path, b in on_path
        if ia and ib:
            continue
        edges.append((0 if ia else relabel[a], 0 if ib else relabel[b]))
    contracted = Tree(len(outside) + 1, edges)
    return count_subtrees_at(contracted, 0)


def count_leaf_subtrees(t: Tree) -> int:
    """Number of subtrees containing at least one leaf of t.

    Equals F(t) minus the subtree count of the stem (0 when the stem is
    empty, i.e. n <= 2).
    """
    total = count_subtrees(t)
    if t.n <= 2:
        return total
    stem, _ = strip_leaves(t)
    return total - count_subtrees(stem)


def count_leaf_subtrees_at(t: Tree, v: int) -> int:
    """Number of subtrees containing v and at least one leaf other than v.

    Undefined on a one-vertex tree.  Computed as the anchored count at v
    minus the anchored count within t restricted to the non-leaf vertices
    plus v itself (the subtrees through v avoiding every other leaf).
    """
    if t.n < 2:
        raise ValueError("needs at least two vertices")
    if not (0 <= v < t.n):
        raise ValueError(f"vertex {v} out of range")
    keep = [w for w in range(t.n) if w == v or not t.is_leaf(w)]
    sub, old_to_new = induced_subtree(t, keep)
    return count_subtrees_at(t, v) - count_subtrees_at(sub, old_to_new[v])


def wiener_index(t: Tree) -> int:
    """Sum of distances over all unordered vertex pairs.

    Each edge contributes (size of one side) * (size of the other side).
    """
    order, parent = preorder(t, 0)
    size = [1] * t.n
    total = 0
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            size[p] += size[v]
            total += size[v] * (t.n - size[v])
    return total


def count_report(t: Tree) -> CountReport:
    """Full report: F, F*, Wiener index, and both per-vertex count maps.

    The per-vertex leaf-anchored map is empty for n = 1, where the quantity
    is undefined.
    """
    f = {v: count_subtrees_at(t, v) for v in range(t.n)}
    if t.n >= 2:
        fstar = {v: count_leaf_subtrees_at(t, v) for v in range(t.n)}
    else:
        fstar = {}
    return CountReport(
        n=t.n,
        F=count_subtrees(t),
        Fstar=count_leaf_subtrees(t),
        wiener=wiener_index(t),
        f_vertex=f,
        fstar_vertex=fstar,
    )
