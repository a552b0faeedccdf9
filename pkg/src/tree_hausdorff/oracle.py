"""Exhaustive Hausdorff distance for small trees.

Every pair of roots is tried and, for each, every rooted top-down common
subtree isomorphism is enumerated child by child: a child is either paired
with an unused child on the other side or dropped, in which case its whole
subtree hangs off the mapped parent and costs its height plus one. This
module deliberately avoids the matching-based engine so the two can be
compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .tree import Tree, is_isomorphic, root_at

__all__ = [
    "OracleLimitError",
    "OracleSizeError",
    "OracleBudgetExceeded",
    "OracleConfig",
    "oracle_rooted",
    "oracle_hausdorff",
]

HARD_MAX_VERTICES = 12


class OracleLimitError(RuntimeError):
    pass


class OracleSizeError(OracleLimitError):
    pass


class OracleBudgetExceeded(OracleLimitError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    max_vertices: int = 9
    node_budget: int = 20_000_000

    def __post_init__(self) -> None:
        if not 1 <= self.max_vertices <= HARD_MAX_VERTICES:
            raise ValueError(f"max_vertices must lie in [1, {HARD_MAX_VERTICES}]")


class _Budget:
    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise OracleBudgetExceeded(f"oracle exceeded {self.limit} search states")


def _check_size(tree: Tree, config: OracleConfig) -> None:
    if tree.n > config.max_vertices:
        raise OracleSizeError(f"tree has {tree.n} vertices; oracle cap is {config.max_vertices}")


def _rooted(t1: Tree, a: int, t2: Tree, b: int, budget: _Budget) -> int:
    rt1, rt2 = root_at(t1, a), root_at(t2, b)
    ch1, ch2 = rt1.children, rt2.children
    h1, h2 = rt1.height, rt2.height
    memo: dict[tuple[int, int], int] = {}

    def best(x: int, y: int) -> int:
        key = (x, y)
        if key in memo:
            return memo[key]
        cx, cy = ch1[x], ch2[y]
        used = [False] * len(cy)
        result = math.inf

        def assign(i: int, running: int) -> None:
            nonlocal result
            budget.tick()
            if running >= result:
                return
            if i == len(cx):
                rest = [h2[cy[j]] + 1 for j in range(len(cy)) if not used[j]]
                result = min(result, max([running, *rest]))
                return
            for j in range(len(cy)):
                if not used[j]:
                    used[j] = True
                    assign(i + 1, max(running, best(cx[i], cy[j])))
                    used[j] = False
            assign(i + 1, max(running, h1[cx[i]] + 1))

        assign(0, 0)
        memo[key] = int(result)
        return memo[key]

    return best(a, b)


def oracle_rooted(
    t1: Tree, a: int, t2: Tree, b: int, config: OracleConfig = OracleConfig()
) -> int:
    """Minimum cover distance over rooted isomorphisms that map ``a`` to ``b``."""
    _check_size(t1, config)
    _check_size(t2, config)
    return _rooted(t1, a, t2, b, _Budget(config.node_budget))


def oracle_hausdorff(t1: Tree, t2: Tree, config: OracleConfig = OracleConfig()) -> int:
    _check_size(t1, config)
    _check_size(t2, config)
    if is_isomorphic(t1, t2):
        return 0
    budget = _Budget(config.node_budget)
    return min(_rooted(t1, a, t2, b, budget) for a in range(t1.n) for b in range(t2.n))
