"""Cover construction by repeated clique extraction.

Two clique finders are provided: an exact branch-and-bound maximum-clique
search with greedy-coloring bounds (worst-case exponential, guarded by a
node budget) and a polynomial recursive pivot construction that returns a
maximal clique.  Extracting a clique, removing it, and repeating yields an
approximate minimum clique cover; even with the exact finder the result
can exceed the true minimum.
"""

from __future__ import annotations

import sys

from .cover import CliqueCover, Heuristic
from .graph import TermGraph, iter_bits

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "BudgetExceededError",
    "clique_removal_cover",
    "max_clique_bkt",
    "ramsey_clique",
]

DEFAULT_NODE_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """Exact search expanded more nodes than allowed.

    The instance is too hard for exact search under the configured budget;
    callers should fall back to the polynomial finder.
    """


def max_clique_bkt(g: TermGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> frozenset[int]:
    """Exact maximum clique via pivoting branch and bound.

    Candidates are greedily colored at every node; a vertex whose color
    bound cannot beat the incumbent prunes the whole remaining branch.
    Fully deterministic, so ties between maximum cliques always resolve
    the same way.

    Raises:
        ValueError: the graph has no vertices.
        BudgetExceededError: more than ``node_budget`` search nodes.
    """
    if g.n == 0:
        raise ValueError("maximum clique of an empty graph is undefined")
    rows = g.rows
    best_mask = 0
    best_size = 0
    expanded = 0

    def color_order(candidates: int) -> list[tuple[int, int]]:
        # Greedy coloring of the candidate set; vertices come out grouped
        # by color class, so position bounds are non-decreasing.
        order: list[tuple[int, int]] = []
        uncolored = candidates
        color = 0
        while uncolored:
            color += 1
            available = uncolored
            while available:
                v = available.bit_length() - 1
                bit = 1 << v
                order.append((v, color))
                uncolored ^= bit
                available &= ~(bit | rows[v])
        return order

    def expand(run_mask: int, run_size: int, candidates: int) -> None:
        nonlocal best_mask, best_size, expanded
        expanded += 1
        if expanded > node_budget:
            raise BudgetExceededError(
                f"maximum-clique search exceeded {node_budget} nodes"
            )
        remaining = candidates
        for v, bound in reversed(color_order(candidates)):
            if run_size + bound <= best_size:
                return
            bit = 1 << v
            extended = remaining & rows[v]
            if extended:
                expand(run_mask | bit, run_size + 1, extended)
            elif run_size + 1 > best_size:
                best_mask = run_mask | bit
                best_size = run_size + 1
            remaining ^= bit

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, g.n + 1000))
    try:
        expand(0, 0, (1 << g.n) - 1)
    finally:
        sys.setrecursionlimit(old_limit)
    return frozenset(iter_bits(best_mask))


def _ramsey_clique_mask(rows: tuple[int, ...], root: int) -> int:
    """Recursive pivot construction, evaluated with an explicit stack.

    Pivot on the lowest-index candidate v; the result is the larger of
    {v} + clique(neighborhood of v) and clique(non-neighborhood of v),
    preferring the pivot branch on ties.
    """
    CALL, AFTER_FIRST, AFTER_SECOND = 0, 1, 2
    stack: list[list[int]] = [[root, CALL, 0, 0]]
    result = 0
    while stack:
        frame = stack[-1]
        mask, state = frame[0], frame[1]
        if state == CALL:
            if not mask:
                result = 0
                stack.pop()
                continue
            pivot_bit = mask & -mask
            v = pivot_bit.bit_length() - 1
            frame[1] = AFTER_FIRST
            frame[2] = pivot_bit
            stack.append([mask & rows[v], CALL, 0, 0])
        elif state == AFTER_FIRST:
            pivot_bit = frame[2]
            v = pivot_bit.bit_length() - 1
            frame[1] = AFTER_SECOND
            frame[3] = result | pivot_bit
            stack.append([frame[0] & ~rows[v] & ~pivot_bit, CALL, 0, 0])
        else:
            with_pivot = frame[3]
            without_pivot = result
            result = (
                with_pivot
                if with_pivot.bit_count() >= without_pivot.bit_count()
                else without_pivot
            )
            stack.pop()
    return result


def ramsey_clique(g: TermGraph) -> frozenset[int]:
    """Maximal clique in polynomial time.

    The recursive pivot construction can return a clique that is not
    maximal, so the result is greedily extended (ascending index) until no
    vertex is adjacent to all members.
    """
    if g.n == 0:
        return frozenset()
    rows = g.rows
    clique = _ramsey_clique_mask(rows, (1 << g.n) - 1)
    for v in range(g.n):
        if clique >> v & 1:
            continue
        if not clique & ~rows[v]:
            clique |= 1 << v
    return frozenset(iter_bits(clique))


def clique_removal_cover(
    g: TermGraph,
    finder: Heuristic = Heuristic.BKT,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> CliqueCover:
    """Cover by repeated clique extraction.

    Finds a clique with the selected finder, records it, removes its
    vertices, and repeats until the graph is empty.  Groups are reported
    in extraction order.

    Raises:
        BudgetExceededError: propagated from the exact finder.
    """
    if finder not in (Heuristic.BKT, Heuristic.RAMSEY):
        raise ValueError(f"not a clique-removal method: {finder}")
    groups: list[frozenset[int]] = []
    current = g
    labels = tuple(range(g.n))
    while current.n:
        if finder is Heuristic.BKT:
            local = max_clique_bkt(current, node_budget)
        else:
            local = ramsey_clique(current)
        groups.append(frozenset(labels[v] for v in local))
        current, kept = current.subgraph_without(local)
        labels = tuple(labels[old] for old in kept)
    return CliqueCover(tuple(groups), finder)
