"""Hausdorff distance between two unrooted trees.

The tree with the larger diameter is rooted at a central vertex, which lies
in the intersection of every optimal amalgam. The other tree is rooted at
each of its vertices in turn. For one pair of roots, the optimal top-down
common subtree is found by recursing on every pair of children and combining
the children's costs with a bottleneck perfect matching. A child left
unmatched (paired with a dummy slot) costs the height of its subtree plus
one. The winning root's matchings are then filtered, parent first, into a
rooted isomorphism that witnesses the distance.
"""

from __future__ import annotations

import os
from collections import defaultdict, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .matching import WeightedBipartiteInstance, solve_optimal_perfect_matching
from .tree import RootedTree, Tree, metric_summary, root_at

__all__ = [
    "ReconstructionDefect",
    "HausdorffResult",
    "CoverDistanceReport",
    "build_child_instance",
    "optimal_top_down_common_subtree",
    "reconstruction_of_mapping",
    "hausdorff_distance",
    "cover_distance",
    "verify_mapping",
]

Pair = tuple[int, int]


class ReconstructionDefect(RuntimeError):
    """Two partners for one vertex survived the parent filter."""


@dataclass(frozen=True)
class HausdorffResult:
    """Outcome of :func:`hausdorff_distance`, in the caller's orientation.

    ``root1`` is a vertex of the first argument and ``root2`` of the second.
    ``mapping`` holds ``(t1 vertex, t2 vertex)`` pairs. When ``swapped`` is
    true the first argument had the smaller diameter, so ``root2`` is the
    central root and ``root1`` the minimising one. ``candidate_distances[u]``
    is the rooted distance obtained with the non-central tree rooted at ``u``.
    """

    distance: int
    root1: int
    root2: int
    mapping: frozenset[Pair]
    swapped: bool = False
    candidate_distances: tuple[int, ...] = field(default=(), compare=False)

    def sorted_mapping(self) -> list[Pair]:
        return sorted(self.mapping)


@dataclass(frozen=True)
class CoverDistanceReport:
    valid: bool
    cover_distance: int | None
    consistent: bool
    problems: tuple[str, ...] = ()


def build_child_instance(
    rt1: RootedTree,
    v: int,
    rt2: RootedTree,
    u: int,
    child_weight: Callable[[int, int], int],
) -> WeightedBipartiteInstance:
    """Complete bipartite graph between the children of ``v`` and of ``u``.

    The side with fewer children is padded with dummy slots. An edge to a
    dummy costs the height of the real child plus one. Real-real edges cost
    ``child_weight(child of v, child of u)``.
    """
    c1 = rt1.children[v]
    c2 = rt2.children[u]
    if not c1 or not c2:
        raise ValueError(f"({v}, {u}) is a leaf pair; no child instance exists")
    p1, p2 = len(c1), len(c2)
    p = max(p1, p2)
    h1, h2 = rt1.height, rt2.height
    rows = []
    for i in range(p):
        if i < p1:
            x = c1[i]
            row = [child_weight(x, y) for y in c2]
            row.extend([h1[x] + 1] * (p - p2))
        else:
            row = [h2[y] + 1 for y in c2]
        rows.append(tuple(row))
    return WeightedBipartiteInstance(
        p=p,
        left_real=p1,
        right_real=p2,
        weight=tuple(rows),
        left_ids=c1 + (None,) * (p - p1),
        right_ids=c2 + (None,) * (p - p2),
    )


def optimal_top_down_common_subtree(
    rt1: RootedTree, v: int, rt2: RootedTree, u: int, acc: set[Pair]
) -> int:
    """Cover distance of an optimal top-down amalgam of the subtrees at v, u.

    Every optimal matching solved along the way, minus its dummy edges, is
    added to ``acc``.

    Subproblems are visited parent-pair first and solved in reverse visiting
    order, which is the recursion unrolled; each pair of vertices is reached
    from exactly one parent pair, so no subproblem is solved twice.
    """
    ch1, ch2 = rt1.children, rt2.children
    h1, h2 = rt1.height, rt2.height
    if not ch1[v] or not ch2[u]:
        return max(h1[v], h2[u])

    order: list[Pair] = [(v, u)]
    i = 0
    while i < len(order):
        x, y = order[i]
        i += 1
        cy = [b for b in ch2[y] if ch2[b]]
        if cy:
            order.extend((a, b) for a in ch1[x] if ch1[a] for b in cy)

    solved: dict[Pair, int] = {}

    def child_weight(a: int, b: int) -> int:
        if ch1[a] and ch2[b]:
            return solved[(a, b)]
        return max(h1[a], h2[b])

    for x, y in reversed(order):
        inst = build_child_instance(rt1, x, rt2, y, child_weight)
        m = solve_optimal_perfect_matching(inst)
        solved[(x, y)] = m.bottleneck
        left, right = inst.left_ids, inst.right_ids
        for a, b in m.pairs:
            if a < inst.left_real and b < inst.right_real:
                acc.add((left[a], right[b]))
    return solved[(v, u)]


def reconstruction_of_mapping(
    rt1: RootedTree, rt2: RootedTree, m_prime: Iterable[Pair]
) -> set[Pair]:
    """Extract the rooted isomorphism contained in ``m_prime``.

    Starting from the root pair, T1 is scanned in preorder and ``(v, w)`` is
    kept when the pair of parents is already mapped.
    """
    candidates: dict[int, list[int]] = defaultdict(list)
    for v, w in m_prime:
        candidates[v].append(w)
    r1, r2 = rt1.root, rt2.root
    partner = {r1: r2}
    mapping = {(r1, r2)}
    p1, p2 = rt1.parent, rt2.parent
    for v in rt1.preorder:
        pv = p1[v]
        if pv is None or pv not in partner:
            continue
        target = partner[pv]
        hits = [w for w in candidates.get(v, ()) if p2[w] == target]
        if len(hits) > 1:
            raise ReconstructionDefect(
                f"vertex {v} has partners {sorted(hits)} under mapped parent pair ({pv}, {target})"
            )
        if hits:
            partner[v] = hits[0]
            mapping.add((v, hits[0]))
    return mapping


def _scan_roots(
    big: Tree, r1: int, small: Tree, roots: Iterable[int]
) -> tuple[list[tuple[int, int]], int | None, int, set[Pair]]:
    rt1 = root_at(big, r1)
    best_d: int | None = None
    best_u = -1
    best_acc: set[Pair] = set()
    seen: list[tuple[int, int]] = []
    for u in roots:
        acc: set[Pair] = set()
        d = optimal_top_down_common_subtree(rt1, r1, root_at(small, u), u, acc)
        seen.append((u, d))
        if best_d is None or d < best_d:
            best_d, best_u, best_acc = d, u, acc
    return seen, best_d, best_u, best_acc


def _resolve_workers(workers: int | None, n_roots: int) -> int:
    if workers is None:
        workers = os.cpu_count() or 1
    return max(1, min(workers, n_roots))


def hausdorff_distance(t1: Tree, t2: Tree, workers: int | None = 1) -> HausdorffResult:
    """Exact Hausdorff distance between two trees, with a witness mapping.

    ``workers > 1`` spreads the candidate roots over worker processes;
    ``None`` uses every CPU. The result does not depend on ``workers``.
    """
    swapped = metric_summary(t1).diameter < metric_summary(t2).diameter
    big, small = (t2, t1) if swapped else (t1, t2)
    r1 = metric_summary(big).center[0]

    n_workers = _resolve_workers(workers, small.n)
    if n_workers == 1:
        chunks = [_scan_roots(big, r1, small, range(small.n))]
    else:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            futures = [
                pool.submit(_scan_roots, big, r1, small, range(k, small.n, n_workers))
                for k in range(n_workers)
            ]
            chunks = [f.result() for f in futures]

    distances = [0] * small.n
    best: tuple[int, int] | None = None
    best_acc: set[Pair] = set()
    for seen, d, u, acc in chunks:
        for root, dist in seen:
            distances[root] = dist
        if d is not None and (best is None or (d, u) < best):
            best, best_acc = (d, u), acc
    assert best is not None
    hd, r2 = best

    mapping = reconstruction_of_mapping(root_at(big, r1), root_at(small, r2), best_acc)
    if swapped:
        return HausdorffResult(
            distance=hd,
            root1=r2,
            root2=r1,
            mapping=frozenset((w, v) for v, w in mapping),
            swapped=True,
            candidate_distances=tuple(distances),
        )
    return HausdorffResult(
        distance=hd,
        root1=r1,
        root2=r2,
        mapping=frozenset(mapping),
        swapped=False,
        candidate_distances=tuple(distances),
    )


def cover_distance(tree: Tree, covered: Iterable[int]) -> int:
    """Largest hop distance from any vertex to the nearest covered vertex."""
    dist = [-1] * tree.n
    queue = deque()
    for v in covered:
        if dist[v] < 0:
            dist[v] = 0
            queue.append(v)
    if not queue:
        raise ValueError("covered set is empty")
    while queue:
        x = queue.popleft()
        for y in tree.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return max(dist)


def verify_mapping(t1: Tree, t2: Tree, result: HausdorffResult) -> CoverDistanceReport:
    """Independently check a result's mapping and recompute its cover distance.

    The mapping must be a rooted isomorphism between top-down subtrees of
    ``t1`` rooted at ``root1`` and ``t2`` rooted at ``root2``. The cover
    distance is taken per tree by multi-source BFS from the mapped vertices.
    """
    problems: list[str] = []
    pairs = list(result.mapping)
    r1, r2 = result.root1, result.root2

    in_range = all(0 <= v < t1.n and 0 <= w < t2.n for v, w in pairs)
    if not in_range:
        problems.append("mapping has a vertex id out of range")
    if not (0 <= r1 < t1.n and 0 <= r2 < t2.n):
        problems.append("root out of range")
        in_range = False
    if not in_range:
        return CoverDistanceReport(False, None, False, tuple(problems))

    forward: dict[int, int] = {}
    backward: dict[int, int] = {}
    for v, w in pairs:
        if v in forward or w in backward:
            problems.append(f"pair ({v}, {w}) breaks injectivity")
        forward[v] = w
        backward[w] = v
    if (r1, r2) not in result.mapping:
        problems.append(f"root pair ({r1}, {r2}) missing")

    rt1, rt2 = root_at(t1, r1), root_at(t2, r2)
    for v, w in pairs:
        if (v, w) == (r1, r2):
            continue
        pv, pw = rt1.parent[v], rt2.parent[w]
        if pv is None or pw is None:
            problems.append(f"pair ({v}, {w}) maps a root to a non-root")
            continue
        if pv not in forward:
            problems.append(f"parent {pv} of mapped vertex {v} is unmapped")
        if pw not in backward:
            problems.append(f"parent {pw} of mapped vertex {w} is unmapped")
        if forward.get(pv) != pw:
            problems.append(f"pair ({v}, {w}) does not preserve parents ({pv}, {pw})")

    cover = None
    if forward:
        cover = max(cover_distance(t1, forward), cover_distance(t2, backward))
    valid = not problems
    return CoverDistanceReport(
        valid=valid,
        cover_distance=cover,
        consistent=valid and cover == result.distance,
        problems=tuple(problems),
    )
