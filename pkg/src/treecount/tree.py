"""Immutable labeled trees: construction, text formats, canonical forms,
centers, and the leaf-to-leaf path decomposition.

Vertices are always the integers ``0..n-1``.  Two text formats are supported:

* ``edgelist`` -- first line is the vertex count ``n``, followed by ``n-1``
  lines ``"u v"``, LF-terminated.  Labels are preserved exactly.
* ``levelseq`` -- a single line of preorder depths starting with ``0``.
  Writing always emits the canonical level sequence, so the output is an
  isomorphism invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class MalformedInputError(ValueError):
    """Text that cannot be tokenized into the expected tree format."""


class LabelOutOfRangeError(ValueError):
    """An edge endpoint lies outside 0..n-1."""


class NotATreeError(ValueError):
    """Edge set with a cycle, a disconnection, or the wrong edge count."""


class DegenerateTreeError(ValueError):
    """The tree is too small for the requested operation."""


class NotALeafError(ValueError):
    """A vertex that was required to be a leaf is not one."""


class TooCloseError(ValueError):
    """Path endpoints are closer together than the operation allows."""


class Tree:
    """Undirected tree on vertices 0..n-1, immutable after construction.

    Construction validates the edge count, label range, connectivity and
    absence of self-loops/duplicate edges (acyclicity follows from the edge
    count once connectivity holds).
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise NotATreeError("a tree has at least one vertex")
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise LabelOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise NotATreeError(f"self-loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        if len(norm) != n - 1:
            raise NotATreeError(f"{len(norm)} edges for {n} vertices, expected {n - 1}")
        if len(set(norm)) != len(norm):
            raise NotATreeError("duplicate edge")
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        # connected + n-1 edges => acyclic
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        reached = 1
        while stack:
            for w in adj[stack.pop()]:
                if not seen[w]:
                    seen[w] = 1
                    reached += 1
                    stack.append(w)
        if reached != n:
            raise NotATreeError("graph is not connected")
        self.n = n
        self.edges = tuple(sorted(norm))
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_leaf(self, v: int) -> bool:
        # The single vertex of a one-vertex tree counts as a pendant vertex;
        # this keeps the leaf-subtree bookkeeping consistent at order 1.
        return len(self.adj[v]) <= 1

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.is_leaf(v))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges)})"


class CanonicalForm(NamedTuple):
    """Order-invariant encoding of a tree: equal iff the trees are isomorphic."""

    level_seq: tuple[int, ...]


@dataclass(frozen=True)
class RootedComponent:
    """A connected piece of a larger tree, relabeled to 0..k-1.

    ``original_vertices[i]`` is the label the new vertex ``i`` had in the host
    tree; ``root`` is the new label of the component's attachment vertex.
    """

    tree: Tree
    root: int
    original_vertices: tuple[int, ...]


@dataclass(frozen=True)
class PathDecomposition:
    """Components left after deleting the edges of a leaf-to-leaf path.

    ``path`` runs from x to y in host labels.  ``x_components[i-1]`` hangs at
    the i-th interior path vertex counted from x, ``y_components[i-1]`` at the
    i-th from y, and ``z_component`` (present iff the path length is even) at
    the middle vertex.
    """

    path: tuple[int, ...]
    x_components: tuple[RootedComponent, ...]
    y_components: tuple[RootedComponent, ...]
    z_component: RootedComponent | None


def preorder(t: Tree, root: int) -> tuple[list[int], list[int]]:
    """DFS preorder and parent array (parent[root] = -1) of t rooted at root."""
    parent = [-2] * t.n
    parent[root] = -1
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in t.adj[v]:
            if parent[w] == -2:
                parent[w] = v
                stack.append(w)
    return order, parent


def centers(t: Tree) -> tuple[int, ...]:
    """The one or two vertices of minimum eccentricity, sorted."""
    if t.n <= 2:
        return tuple(range(t.n))
    deg = [len(a) for a in t.adj]
    layer = [v for v in range(t.n) if deg[v] == 1]
    removed = bytearray(t.n)
    remaining = t.n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed[v] = 1
        remaining -= len(layer)
        for v in layer:
            for w in t.adj[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_level_seq(adj, root: int) -> tuple[int, ...]:
    # Lexicographically smallest preorder depth sequence over all plane
    # embeddings: child blocks are sorted ascending, which minimizes the
    # concatenation because a block has exactly one depth-1 entry.
    def rec(v: int, parent: int) -> tuple[int, ...]:
        blocks = sorted(rec(w, v) for w in adj[v] if w != parent)
        seq = [0]
        for b in blocks:
            seq.extend(d + 1 for d in b)
        return tuple(seq)

    return rec(root, -1)


def canonical_form(t: Tree) -> CanonicalForm:
    """Canonical level sequence, rooted at the center.

    For bicentral trees the rooting giving the lexicographically smaller
    sequence wins, so the result does not depend on the center choice.
    """
    return CanonicalForm(min(_rooted_level_seq(t.adj, c) for c in centers(t)))


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def tree_from_level_sequence(seq: Iterable[int]) -> Tree:
    """Build a tree from a preorder depth sequence (first entry 0)."""
    depths = list(seq)
    if not depths:
        raise MalformedInputError("empty level sequence")
    if depths[0] != 0:
        raise MalformedInputError("level sequence must start at depth 0")
    last_at_depth = [0] * len(depths)
    edges = []
    for i, d in enumerate(depths[1:], start=1):
        if d < 1 or d > depths[i - 1] + 1:
            raise MalformedInputError(f"invalid depth {d} at position {i}")
        edges.append((last_at_depth[d - 1], i))
        last_at_depth[d] = i
    return Tree(len(depths), edges)


def parse_tree(text: str, fmt: str = "edgelist") -> Tree:
    """Parse a tree from text in the given format ("edgelist" or "levelseq")."""
    if fmt == "edgelist":
        lines = text.split("\n")
        while lines and lines[-1] == "":
            lines.pop()
        if not lines:
            raise MalformedInputError("empty input")
        head = lines[0].strip()
        try:
            n = int(head)
        except ValueError:
            raise MalformedInputError(f"bad vertex count line: {head!r}") from None
        if n < 1:
            raise NotATreeError("vertex count must be positive")
        if len(lines) - 1 != n - 1:
            raise NotATreeError(f"{len(lines) - 1} edge lines for n={n}, expected {n - 1}")
        edges = []
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise MalformedInputError(f"bad edge line: {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise MalformedInputError(f"bad edge line: {line!r}") from None
            edges.append((u, v))
        return Tree(n, edges)
    if fmt == "levelseq":
        tokens = text.split()
        if not tokens:
            raise MalformedInputError("empty input")
        try:
            depths = [int(tok) for tok in tokens]
        except ValueError:
            raise MalformedInputError("level sequence entries must be integers") from None
        return tree_from_level_sequence(depths)
    raise ValueError(f"unknown format {fmt!r}")


def serialize_tree(t: Tree, fmt: str = "edgelist") -> str:
    """Serialize a tree; byte-stable for a fixed Tree.

    The edgelist form preserves labels; the levelseq form is canonical, so
    isomorphic trees serialize identically.
    """
    if fmt == "edgelist":
        return f"{t.n}\n" + "".join(f"{u} {v}\n" for u, v in t.edges)
    if fmt == "levelseq":
        return " ".join(str(d) for d in canonical_form(t).level_seq) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def induced_subtree(t: Tree, keep: Iterable[int]) -> tuple[Tree, dict[int, int]]:
    """Induced subgraph on ``keep`` (must be connected), with an old->new map.

    New labels follow the sorted order of the kept old labels.
    """
    kept = sorted(set(keep))
    old_to_new = {v: i for i, v in enumerate(kept)}
    edges = [
        (old_to_new[u], old_to_new[v])
        for u, v in t.edges
        if u in old_to_new and v in old_to_new
    ]
    return Tree(len(kept), edges), old_to_new


def strip_leaves(t: Tree) -> tuple[Tree, dict[int, int]]:
    """Delete every pendant vertex, returning the stem and an old->new map."""
    if t.n <= 2:
        raise DegenerateTreeError("every vertex of a tree on <= 2 vertices is a leaf")
    return induced_subtree(t, (v for v in range(t.n) if t.degree(v) > 1))


def path_between(t: Tree, u: int, v: int) -> tuple[int, ...]:
    """The unique u-v path as a vertex sequence (length = distance)."""
    if not (0 <= u < t.n and 0 <= v < t.n):
        raise LabelOutOfRangeError(f"vertex out of range: {u}, {v}")
    _, parent = preorder(t, v)
    path = [u]
    while path[-1] != v:
        path.append(parent[path[-1]])
    return tuple(path)


def _component_without(t: Tree, banned: int, start: int) -> list[int]:
    """Vertices of the component of t - banned that contains start."""
    seen = {start}
    stack = [start]
    while stack:
        for w in t.adj[stack.pop()]:
            if w != banned and w not in seen:
                seen.add(w)
                stack.append(w)
    return sorted(seen)


def path_decomposition(t: Tree, x: int, y: int) -> PathDecomposition:
    """Split t along the x-y path (x, y leaves at distance >= 2).

    Deleting the path edges leaves one component per interior path vertex
    (plus the isolated endpoints x and y); components are reported indexed
    from both ends inward, with the middle one separated out when the
    distance is even.
    """
    if not t.is_leaf(x) or not t.is_leaf(y):
        raise NotALeafError("both endpoints must be leaves")
    path = path_between(t, x, y)
    d = len(path) - 1
    if d < 2:
        raise TooCloseError(f"endpoint distance {d} < 2")
    on_path = set(path)

    def component_at(p: int) -> RootedComponent:
        prev = path[path.index(p) - 1]
        nxt = path[path.index(p) + 1]
        seen = {p}
        stack = [p]
        while stack:
            v = stack.pop()
            for w in t.adj[v]:
                if w in seen or (v == p and w in (prev, nxt)):
                    continue
                if w in on_path:
                    continue
                seen.add(w)
                stack.append(w)
        sub, old_to_new = induced_subtree(t, seen)
        new_to_old = tuple(sorted(seen))
        return RootedComponent(sub, old_to_new[p], new_to_old)

    interior = path[1:-1]
    if d % 2 == 0:
        side = d // 2 - 1
        z = component_at(path[d // 2])
    else:
        side = (d - 1) // 2
        z = None
    xs = tuple(component_at(path[i]) for i in range(1, side + 1))
    ys = tuple(component_at(path[d - i]) for i in range(1, side + 1))
    return PathDecomposition(path, xs, ys, z)
