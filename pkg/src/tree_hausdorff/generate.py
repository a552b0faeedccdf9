"""Uniform random labeled trees via Prüfer sequences."""

from __future__ import annotations

import heapq
import random
from typing import Sequence

from .tree import Tree, build_tree

__all__ = ["prufer_decode", "gen_random_tree", "relabel"]


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``n`` vertices with Prüfer code ``seq``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if len(seq) != max(n - 2, 0):
        raise ValueError(f"Prüfer sequence for n={n} must have length {max(n - 2, 0)}")
    if n == 1:
        return []
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"label {x} outside [0, {n})")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def gen_random_tree(n: int, seed: int) -> Tree:
    """A labeled tree drawn uniformly at random; deterministic in ``(n, seed)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return build_tree(n, prufer_decode(seq, n))


def relabel(tree: Tree, perm: Sequence[int]) -> Tree:
    """Isomorphic copy of ``tree`` where vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(tree.n)):
        raise ValueError("perm must be a permutation of the vertex ids")
    return build_tree(tree.n, [(perm[a], perm[b]) for a, b in tree.edges])
