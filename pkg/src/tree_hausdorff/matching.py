"""Hopcroft-Karp maximum matching and the bottleneck perfect matching solver.

The bottleneck solver binary-searches the sorted distinct edge weights; at
each pivot it asks Hopcroft-Karp whether the subgraph of edges no heavier
than the pivot still has a perfect matching.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "MatchingDefect",
    "WeightedBipartiteInstance",
    "Matching",
    "hopcroft_karp",
    "threshold_graph",
    "solve_optimal_perfect_matching",
    "brute_force_bottleneck",
    "BRUTE_FORCE_MAX_P",
]

BRUTE_FORCE_MAX_P = 8
_UNSEEN = -1


class MatchingDefect(RuntimeError):
    """An internal invariant failed; this indicates a bug, not bad input."""


@dataclass(frozen=True)
class WeightedBipartiteInstance:
    """Complete ``p x p`` bipartite graph with integer weights.

    Slots ``0..left_real-1`` on the left (and ``0..right_real-1`` on the
    right) are real; the remaining slots are dummies whose id is ``None``.
    """

    p: int
    left_real: int
    right_real: int
    weight: tuple[tuple[int, ...], ...]
    left_ids: tuple[int | None, ...]
    right_ids: tuple[int | None, ...]

    def __post_init__(self) -> None:
        if len(self.weight) != self.p or any(len(row) != self.p for row in self.weight):
            raise ValueError("weight matrix must be p x p")
        if max(self.left_real, self.right_real) != self.p:
            raise ValueError("the larger side must have no dummy slots")

    @classmethod
    def from_matrix(cls, weight: Sequence[Sequence[int]]) -> WeightedBipartiteInstance:
        """Dummy-free instance whose slot ids are the slot indices."""
        p = len(weight)
        ids = tuple(range(p))
        return cls(p, p, p, tuple(tuple(row) for row in weight), ids, ids)

    def is_dummy_pair(self, i: int, j: int) -> bool:
        return i >= self.left_real or j >= self.right_real


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    bottleneck: int | None = None

    def __len__(self) -> int:
        return len(self.pairs)

    def is_perfect(self, p: int) -> bool:
        return len(self.pairs) == p


def hopcroft_karp(p: int, allowed: Sequence[Sequence[int]]) -> Matching:
    """Maximum-cardinality matching between ``p`` left and ``p`` right slots.

    ``allowed[i]`` lists the right slots adjacent to left slot ``i``. Slots
    and adjacency are scanned in the given (ascending) order, so the result
    is deterministic.
    """
    match_l = [-1] * p
    match_r = [-1] * p
    dist = [0] * p

    def bfs() -> bool:
        queue: deque[int] = deque()
        for i in range(p):
            if match_l[i] < 0:
                dist[i] = 0
                queue.append(i)
            else:
                dist[i] = _UNSEEN
        found = False
        while queue:
            i = queue.popleft()
            for j in allowed[i]:
                k = match_r[j]
                if k < 0:
                    found = True
                elif dist[k] == _UNSEEN:
                    dist[k] = dist[i] + 1
                    queue.append(k)
        return found

    def augment(start: int, ptr: list[int]) -> bool:
        # Iterative layered DFS; ptr[i] is the edge currently being tried at i.
        stack = [start]
        while stack:
            i = stack[-1]
            adj = allowed[i]
            descended = False
            while ptr[i] < len(adj):
                j = adj[ptr[i]]
                k = match_r[j]
                if k < 0:
                    for x in stack:
                        y = allowed[x][ptr[x]]
                        match_l[x] = y
                        match_r[y] = x
                    return True
                if dist[k] == dist[i] + 1:
                    stack.append(k)
                    descended = True
                    break
                ptr[i] += 1
            if not descended:
                dist[i] = _UNSEEN
                stack.pop()
                if stack:
                    ptr[stack[-1]] += 1
        return False

    while bfs():
        ptr = [0] * p
        for i in range(p):
            if match_l[i] < 0:
                augment(i, ptr)

    pairs = tuple((i, match_l[i]) for i in range(p) if match_l[i] >= 0)
    return Matching(pairs)


def threshold_graph(inst: WeightedBipartiteInstance, w: int) -> list[list[int]]:
    """Adjacency of the spanning subgraph keeping edges of weight ``<= w``."""
    return [[j for j, x in enumerate(row) if x <= w] for row in inst.weight]


def solve_optimal_perfect_matching(inst: WeightedBipartiteInstance) -> Matching:
    """Perfect matching minimising the largest matched weight.

    Among optimal matchings, returns the one Hopcroft-Karp finds on the
    threshold graph at the smallest feasible distinct weight.
    """
    p = inst.p
    if p == 0:
        return Matching((), 0)
    if p == 1:
        return Matching(((0, 0),), inst.weight[0][0])
    weights = sorted({w for row in inst.weight for w in row})
    lo, hi = 0, len(weights) - 1
    best: Matching | None = None
    while lo <= hi:
        mid = (lo + hi) // 2
        m = hopcroft_karp(p, threshold_graph(inst, weights[mid]))
        if len(m.pairs) == p:
            best = m
            hi = mid - 1
        else:
            lo = mid + 1
    if best is None:
        raise MatchingDefect("complete bipartite instance has no perfect matching")
    bottleneck = max(inst.weight[i][j] for i, j in best.pairs)
    return Matching(best.pairs, bottleneck)


def brute_force_bottleneck(inst: WeightedBipartiteInstance) -> int:
    """Minimum over all ``p!`` perfect matchings of the largest weight."""
    p = inst.p
    if p > BRUTE_FORCE_MAX_P:
        raise ValueError(f"brute force is limited to p <= {BRUTE_FORCE_MAX_P}, got {p}")
    if p == 0:
        return 0
    w = inst.weight
    return min(max(w[i][perm[i]] for i in range(p)) for perm in itertools.permutations(range(p)))
