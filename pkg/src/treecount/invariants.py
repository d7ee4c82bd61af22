"""Matching number, domination number, perfect matchings, and a one-call
profile of the structural invariants used to carve out tree classes."""

from __future__ import annotations

from dataclasses import dataclass

from .tree import Tree, centers, preorder

_INF = float("inf")


@dataclass(frozen=True)
class InvariantProfile:
    matching: int
    domination: int
    diameter: int
    leaf_count: int
    max_degree: int
    centers: tuple[int, ...]
    has_perfect_matching: bool

    def to_json_dict(self) -> dict:
        return {
            "matching": self.matching,
            "domination": self.domination,
            "diameter": self.diameter,
            "leafCount": self.leaf_count,
            "maxDegree": self.max_degree,
            "centers": list(self.centers),
            "hasPerfectMatching": self.has_perfect_matching,
        }


def _children(t: Tree, root: int) -> tuple[list[int], list[list[int]]]:
    order, parent = preorder(t, root)
    kids: list[list[int]] = [[] for _ in range(t.n)]
    for v in order[1:]:
        kids[parent[v]].append(v)
    return order, kids


def _matching_forest(adj, alive: list[bool]) -> int:
    """Maximum matching size over the forest induced on the alive vertices."""
    n = len(adj)
    visited = [not a for a in alive]
    best = 0
    for r in range(n):
        if visited[r]:
            continue
        # iterative post-order over this component
        parent = {r: -1}
        order = [r]
        stack = [r]
        visited[r] = True
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not visited[w]:
                    visited[w] = True
                    parent[w] = v
                    order.append(w)
                    stack.append(w)
        free = {v: 0 for v in order}    # v unmatched within its subtree
        used = {v: -_INF for v in order}  # v matched to one of its children
        kids: dict[int, list[int]] = {v: [] for v in order}
        for v in order[1:]:
            kids[parent[v]].append(v)
        for v in reversed(order):
            base = sum(max(free[c], used[c]) for c in kids[v])
            free[v] = base
            gain = max(
                (1 + free[c] - max(free[c], used[c]) for c in kids[v]),
                default=-_INF,
            )
            used[v] = base + gain
        best += int(max(free[r], used[r]))
    return best


def matching_number(t: Tree) -> int:
    """Maximum number of pairwise nonincident edges."""
    return _matching_forest(t.adj, [True] * t.n)


def maximum_matching(t: Tree) -> tuple[tuple[int, int], ...]:
    """One maximum matching, the lexicographically smallest as an edge list.

    Greedy over sorted edges, keeping an edge whenever some maximum matching
    extends the current choice through it.
    """
    q = matching_number(t)
    chosen: list[tuple[int, int]] = []
    alive = [True] * t.n
    for u, v in t.edges:
        if len(chosen) == q:
            break
        if not (alive[u] and alive[v]):
            continue
        alive[u] = alive[v] = False
        if len(chosen) + 1 + _matching_forest(t.adj, alive) == q:
            chosen.append((u, v))
        else:
            alive[u] = alive[v] = True
    return tuple(chosen)


def perfect_matching_edges(t: Tree) -> tuple[tuple[int, int], ...] | None:
    """The unique perfect matching of t, or None.

    Peels leaves: a leaf must be matched to its support, so the matching is
    forced edge by edge.
    """
    if t.n % 2:
        return None
    if t.n == 2:
        return ((0, 1),)
    deg = [len(a) for a in t.adj]
    alive = [True] * t.n
    leaf_stack = [v for v in range(t.n) if deg[v] == 1]
    matched: list[tuple[int, int]] = []
    while leaf_stack:
        u = leaf_stack.pop()
        if not alive[u]:
            continue
        support = next((w for w in t.adj[u] if alive[w]), None)
        if support is None:
            return None
        alive[u] = alive[support] = False
        matched.append((u, support) if u < support else (support, u))
        for w in t.adj[support]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaf_stack.append(w)
        for w in t.adj[u]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaf_stack.append(w)
    if any(alive):
        return None
    return tuple(sorted(matched))


def has_perfect_matching(t: Tree) -> bool:
    return perfect_matching_edges(t) is not None


def _domination(t: Tree, forced: frozenset[int] = frozenset()) -> int:
    """Minimum dominating set size, with the forced vertices required in-set."""
    if t.n == 1:
        return 1
    order, kids = _children(t, 0)
    in_set = [0] * t.n    # v in the set
    covered = [0] * t.n   # v out, dominated by some child
    deferred = [0] * t.n  # v out, to be dominated by its parent
    for v in reversed(order):
        base_in = 1
        for c in kids[v]:
            base_in += min(in_set[c], covered[c], deferred[c])
        in_set[v] = base_in
        base_out = 0
        penalty = _INF
        for c in kids[v]:
            lo = min(in_set[c], covered[c])
            base_out += lo
            penalty = min(penalty, in_set[c] - lo)
        covered[v] = base_out + penalty if kids[v] else _INF
        deferred[v] = base_out
        if v in forced:
            covered[v] = deferred[v] = _INF
    return int(min(in_set[0], covered[0]))


def domination_number(t: Tree) -> int:
    """Minimum size of a set whose closed neighborhood covers every vertex."""
    return _domination(t)


def minimum_dominating_set(t: Tree) -> tuple[int, ...]:
    """One minimum dominating set, lexicographically smallest by sorted labels."""
    gamma = _domination(t)
    chosen: list[int] = []
    for v in range(t.n):
        if len(chosen) == gamma:
            break
        if _domination(t, frozenset(chosen + [v])) == gamma:
            chosen.append(v)
    return tuple(chosen)


def diameter(t: Tree) -> int:
    """Maximum eccentricity, via two sweeps."""

    def far(src: int) -> tuple[int, int]:
        order, parent = preorder(t, src)
        depth = [0] * t.n
        for v in order[1:]:
            depth[v] = depth[parent[v]] + 1
        best = max(range(t.n), key=lambda v: (depth[v], -v))
        return best, depth[best]

    a, _ = far(0)
    _, d = far(a)
    return d


def invariant_profile(t: Tree) -> InvariantProfile:
    q = matching_number(t)
    return InvariantProfile(
        matching=q,
        domination=domination_number(t),
        diameter=diameter(t),
        leaf_count=len(t.leaves()),
        max_degree=max(len(a) for a in t.adj),
        centers=centers(t),
        has_perfect_matching=(t.n % 2 == 0 and q == t.n // 2),
    )
