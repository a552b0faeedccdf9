"""Shared fixtures and brute-force helpers.

Reference trees live in ``fixtures/`` with labels v_i (and u_i) renamed to i-1.
The helpers here are deliberately naive so they can serve as oracles.
"""

from __future__ import annotations

import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from tree_hausdorff.generate import prufer_decode
from tree_hausdorff.io import read_tree
from tree_hausdorff.tree import Tree, build_tree

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def v(i: int) -> int:
    """Label v_i / u_i to vertex id."""
    return i - 1


def load(name: str) -> Tree:
    return read_tree(FIXTURES / name)


@pytest.fixture(scope="session")
def fig5():
    return load("fig5_t1.txt"), load("fig5_t2.txt")


@pytest.fixture(scope="session")
def fig1():
    return load("fig1_g.txt"), load("fig1_g1.txt"), load("fig1_g2.txt")


def path_tree(n: int) -> Tree:
    return build_tree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(leaves: int) -> Tree:
    return build_tree(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 8) -> Tree:
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    return build_tree(n, prufer_decode(seq, n))


def floyd_warshall(tree: Tree) -> list[list[int]]:
    n = tree.n
    inf = n + 1
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for a, b in tree.edges:
        d[a][b] = d[b][a] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def edge_set(tree: Tree) -> set[frozenset[int]]:
    return {frozenset(e) for e in tree.edges}


def brute_isomorphic(a: Tree, b: Tree) -> bool:
    if a.n != b.n:
        return False
    eb = edge_set(b)
    return any(
        all(frozenset((perm[x], perm[y])) in eb for x, y in a.edges)
        for perm in itertools.permutations(range(a.n))
    )


def brute_max_matching(p: int, allowed) -> int:
    best = 0

    def go(i: int, used: frozenset, size: int) -> None:
        nonlocal best
        if size + (p - i) <= best:
            return
        if i == p:
            best = max(best, size)
            return
        for j in allowed[i]:
            if j not in used:
                go(i + 1, used | {j}, size + 1)
        go(i + 1, used, size)

    go(0, frozenset(), 0)
    return best


def _connected_subsets(tree: Tree) -> list[frozenset[int]]:
    out = []
    for mask in range(1, 1 << tree.n):
        verts = [x for x in range(tree.n) if mask >> x & 1]
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            x = stack.pop()
            for y in tree.adjacency[x]:
                if mask >> y & 1 and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) == len(verts):
            out.append(frozenset(verts))
    return out


def definitional_hausdorff(a: Tree, b: Tree) -> int:
    """Hausdorff distance straight from the amalgam definition.

    Enumerates every pair of isomorphic subtrees (all convex in a tree) and
    every isomorphism between them; the cover distance of the amalgam is the
    largest distance from a vertex to the glued part, measured in its own
    tree. Exponential; meant for n <= 6.
    """
    if brute_isomorphic(a, b):
        return 0
    da, db = floyd_warshall(a), floyd_warshall(b)
    ea, eb = edge_set(a), edge_set(b)
    subs_b = _connected_subsets(b)
    best = a.n + b.n
    for s1 in _connected_subsets(a):
        cover1 = max(min(da[x][y] for y in s1) for x in range(a.n))
        if cover1 >= best:
            continue
        s1l = sorted(s1)
        for s2 in subs_b:
            if len(s2) != len(s1):
                continue
            cover = max(cover1, max(min(db[x][y] for y in s2) for x in range(b.n)))
            if cover >= best:
                continue
            for image in itertools.permutations(sorted(s2)):
                f = dict(zip(s1l, image))
                ok = all(
                    (frozenset((x, y)) in ea) == (frozenset((f[x], f[y])) in eb)
                    for x, y in itertools.combinations(s1l, 2)
                )
                if ok:
                    best = cover
                    break
    return best


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
