"""Unrooted trees, BFS metrics, rooting, and canonical-form isomorphism.

Vertices are dense integers ``0..n-1``. Every "pick any" choice resolves to
the smallest id so that all derived arrays are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "TreeError",
    "VertexRangeError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "EdgeCountError",
    "DisconnectedError",
    "Tree",
    "MetricSummary",
    "RootedTree",
    "build_tree",
    "bfs_distances",
    "metric_summary",
    "root_at",
    "canonical_form",
    "is_isomorphic",
]


class TreeError(ValueError):
    """Base class for rejected tree input."""


class VertexRangeError(TreeError):
    pass


class SelfLoopError(TreeError):
    pass


class DuplicateEdgeError(TreeError):
    pass


class EdgeCountError(TreeError):
    pass


class DisconnectedError(TreeError):
    pass


@dataclass(frozen=True)
class Tree:
    """A validated unrooted tree.

    ``edges`` holds each edge once as ``(a, b)`` with ``a < b``, sorted;
    ``adjacency[v]`` is the ascending tuple of neighbours of ``v``.
    Use :func:`build_tree` rather than the constructor.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MetricSummary:
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    center: tuple[int, ...]


@dataclass(frozen=True)
class RootedTree:
    base: Tree
    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]
    height: tuple[int, ...]
    preorder: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.base.n

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]


def build_tree(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate ``edges`` as a tree on ``n`` vertices.

    Raises a distinct :class:`TreeError` subclass for each failure kind.
    Checks run in the order: range, self-loop, duplicate, edge count,
    connectivity.
    """
    if not isinstance(n, int) or n < 1:
        raise VertexRangeError(f"vertex count must be a positive integer, got {n!r}")
    seen: set[tuple[int, int]] = set()
    for edge in edges:
        a, b = edge
        if not (0 <= a < n and 0 <= b < n):
            raise VertexRangeError(f"edge ({a}, {b}) has an endpoint outside [0, {n})")
        if a == b:
            raise SelfLoopError(f"self-loop at vertex {a}")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({a}, {b})")
        seen.add(key)
    if len(seen) != n - 1:
        raise EdgeCountError(f"expected {n - 1} edges, found {len(seen)}")

    neighbours: list[list[int]] = [[] for _ in range(n)]
    for a, b in seen:
        neighbours[a].append(b)
        neighbours[b].append(a)
    adjacency = tuple(tuple(sorted(nb)) for nb in neighbours)

    reached = _bfs(adjacency, 0)
    if min(reached) < 0:
        missing = reached.index(-1)
        raise DisconnectedError(f"vertex {missing} is not reachable from vertex 0")
    return Tree(n=n, edges=tuple(sorted(seen)), adjacency=adjacency)


def _bfs(adjacency: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def bfs_distances(tree: Tree, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex."""
    if not 0 <= source < tree.n:
        raise VertexRangeError(f"vertex {source} outside [0, {tree.n})")
    return _bfs(tree.adjacency, source)


def metric_summary(tree: Tree) -> MetricSummary:
    ecc = tuple(max(_bfs(tree.adjacency, v)) for v in range(tree.n))
    radius = min(ecc)
    center = tuple(v for v in range(tree.n) if ecc[v] == radius)
    return MetricSummary(ecc=ecc, radius=radius, diameter=max(ecc), center=center)


def root_at(tree: Tree, r: int) -> RootedTree:
    """Root ``tree`` at ``r`` and derive parent/children/depth/height/preorder.

    Preorder is depth-first with children visited in ascending order.
    """
    n = tree.n
    if not 0 <= r < n:
        raise VertexRangeError(f"root {r} outside [0, {n})")
    adjacency = tree.adjacency
    parent: list[int | None] = [None] * n
    depth = [0] * n
    children: list[tuple[int, ...]] = [()] * n
    preorder: list[int] = []
    stack = [r]
    while stack:
        x = stack.pop()
        preorder.append(x)
        p = parent[x]
        kids = tuple(y for y in adjacency[x] if y != p)
        children[x] = kids
        for y in kids:
            parent[y] = x
            depth[y] = depth[x] + 1
        stack.extend(reversed(kids))
    height = [0] * n
    for x in reversed(preorder):
        kids = children[x]
        if kids:
            height[x] = 1 + max(height[y] for y in kids)
    return RootedTree(
        base=tree,
        root=r,
        parent=tuple(parent),
        children=tuple(children),
        depth=tuple(depth),
        height=tuple(height),
        preorder=tuple(preorder),
    )


def canonical_form(rooted: RootedTree) -> str:
    """AHU encoding of a rooted tree: ``(`` + sorted child codes + ``)``."""
    codes: list[str] = [""] * rooted.n
    for x in reversed(rooted.preorder):
        codes[x] = "(" + "".join(sorted(codes[y] for y in rooted.children[x])) + ")"
    return codes[rooted.root]


def _center_code(tree: Tree) -> str:
    center = metric_summary(tree).center
    return min(canonical_form(root_at(tree, c)) for c in center)


def is_isomorphic(a: Tree, b: Tree) -> bool:
    if a.n != b.n:
        return False
    if sorted(map(len, a.adjacency)) != sorted(map(len, b.adjacency)):
        return False
    return _center_code(a) == _center_code(b)
