"""Exact maximum-influence 2-packing solvers.

``brute_force_F`` is a depth-first backtracking oracle over any small
graph (lattice or pendant-augmented).  ``dp_F_rect`` sweeps a bounded
rectangular grid column by column with a two-column bitmask profile:

* inside one column, picked rows must be >= 3 apart;
* between adjacent columns, picked rows must differ by >= 2;
* between columns two apart, picked rows must differ (disjoint masks).

Columns three or more apart are already at distance >= 3, so the
two-column profile captures the 2-packing condition exactly.  The
objective adds 1 + deg for every picked vertex with true boundary
degrees, which for a 2-packing equals the number of dominated vertices.
Witnesses are rebuilt from back-pointers and audited before returning.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any

from .constructions import conjectured_F, predicted_voids
from .lattice import rect
from .packing import Vertex, audit, normalize_set

BRUTE_FORCE_LIMIT = 49
DP_WIDTH_LIMIT = 16


@dataclass(frozen=True)
class SolveResult:
    f_value: int
    witness: tuple[Vertex, ...]
    explored: int
    elapsed: float


# -- backtracking oracle ------------------------------------------------------


def brute_force_F(graph: Any, limit: int = BRUTE_FORCE_LIMIT) -> SolveResult:
    """Exact F by depth-first search over vertices in row-major order.

    Prunes any branch whose optimistic completion cannot beat the best
    influence found so far; the witness is the first optimum reached,
    which the include-before-skip order makes deterministic.
    """
    order = list(graph.vertices())
    count = len(order)
    if count > limit:
        raise ValueError(
            f"{count} vertices exceeds the brute-force limit {limit}; "
            "use dp_F_rect for rectangular grids or raise the limit"
        )
    index = {v: t for t, v in enumerate(order)}
    weights = [1 + graph.degree(v) for v in order]
    closed = [[index[v]] + [index[u] for u in graph.neighbors(v)] for v in order]
    suffix = [0] * (count + 1)
    for t in range(count - 1, -1, -1):
        suffix[t] = suffix[t + 1] + weights[t]

    coverage = [0] * count
    chosen: list[int] = []
    best_value = -1
    best_set: list[int] = []
    explored = 0

    t0 = time.perf_counter()

    def dfs(t: int, value: int) -> None:
        nonlocal best_value, best_set, explored
        explored += 1
        if value > best_value:
            best_value = value
            best_set = list(chosen)
        if t == count or value + suffix[t] <= best_value:
            return
        if all(coverage[x] == 0 for x in closed[t]):
            for x in closed[t]:
                coverage[x] += 1
            chosen.append(t)
            dfs(t + 1, value + weights[t])
            chosen.pop()
            for x in closed[t]:
                coverage[x] -= 1
        dfs(t + 1, value)

    dfs(0, 0)
    witness = normalize_set(order[t] for t in best_set)
    elapsed = time.perf_counter() - t0
    report = audit(graph, witness)
    if not report.is_two_packing or report.influence != best_value:
        raise AssertionError("brute-force witness failed its audit")
    return SolveResult(f_value=best_value, witness=witness, explored=explored, elapsed=elapsed)


# -- column-profile dynamic program -------------------------------------------


def _spaced_masks(m: int) -> list[int]:
    """Row subsets of a height-m column with pairwise gaps >= 3."""
    return [
        mask
        for mask in range(1 << m)
        if not (mask & (mask << 1)) and not (mask & (mask << 2))
    ]


def _bits(mask: int) -> list[int]:
    out = []
    r = 0
    while mask:
        if mask & 1:
            out.append(r)
        mask >>= 1
        r += 1
    return out


def dp_F_rect(rows: int, cols: int, width_limit: int = DP_WIDTH_LIMIT) -> SolveResult:
    """Exact F of the bounded rows x cols grid via the column-profile DP."""
    if rows < 1 or cols < 1:
        raise ValueError(f"grid dimensions must be positive, got {rows}x{cols}")
    if rows > width_limit:
        raise ValueError(
            f"{rows} rows exceeds the DP width limit {width_limit}; "
            "swap the dimensions (F is transpose-invariant) or raise the limit"
        )
    m, n = rows, cols
    t0 = time.perf_counter()

    masks = _spaced_masks(m)
    full = (1 << m) - 1
    # Masks allowed in the next column: picked rows differ by >= 2.
    near = {B: (B | (B << 1) | (B >> 1)) & full for B in masks}
    compat = {B: [C for C in masks if C & near[B] == 0] for B in masks}

    def column_weights(c: int) -> dict[int, int]:
        per_row = [
            1 + (r > 0) + (r < m - 1) + (c > 1) + (c < n)
            for r in range(m)
        ]
        return {C: sum(per_row[r] for r in _bits(C)) for C in masks}

    weight_cache: dict[tuple[bool, bool], dict[int, int]] = {}

    def weights_for(c: int) -> dict[int, int]:
        key = (c > 1, c < n)
        if key not in weight_cache:
            weight_cache[key] = column_weights(c)
        return weight_cache[key]

    explored = 0
    states: dict[tuple[int, int], int] = {(0, 0): 0}
    back_pointers: list[dict[tuple[int, int], int]] = []
    for c in range(1, n + 1):
        cw = weights_for(c)
        nxt: dict[tuple[int, int], int] = {}
        back: dict[tuple[int, int], int] = {}
        for (A, B) in sorted(states):
            base = states[(A, B)]
            for C in compat[B]:
                if A & C:
                    continue
                explored += 1
                value = base + cw[C]
                key = (B, C)
                if value > nxt.get(key, -1):
                    nxt[key] = value
                    back[key] = A
        back_pointers.append(back)
        states = nxt

    best_value = max(states.values())
    final = min(key for key, value in states.items() if value == best_value)

    # Walk the back-pointers right to left to recover one mask per column.
    column_masks = [0] * (n + 1)
    key = final
    for c in range(n, 0, -1):
        column_masks[c] = key[1]
        key = (back_pointers[c - 1][key], key[0])
    witness = normalize_set(
        (r + 1, c) for c in range(1, n + 1) for r in _bits(column_masks[c])
    )
    elapsed = time.perf_counter() - t0

    report = audit(rect(m, n), witness)
    if not report.is_two_packing or report.influence != best_value:
        raise AssertionError("DP witness failed its audit")
    return SolveResult(f_value=best_value, witness=witness, explored=explored, elapsed=elapsed)


# -- conjecture and void tables ------------------------------------------------


@dataclass(frozen=True)
class ConjectureRow:
    n: int
    conjectured: int
    dp_value: int | None
    matches: bool | None


@dataclass(frozen=True)
class VoidRow:
    n: int
    predicted: int
    dp_voids: int | None
    matches: bool | None


def check_conjecture(
    lo: int, hi: int, width_limit: int = DP_WIDTH_LIMIT
) -> list[ConjectureRow]:
    """Compare the DP value of each n x n grid against the conjectured F.

    Squares wider than the DP limit are reported with ``dp_value=None``
    (unverified), never guessed.
    """
    rows = []
    for n in range(lo, hi + 1):
        target = conjectured_F(n)
        if n <= width_limit:
            value = dp_F_rect(n, n, width_limit=width_limit).f_value
            rows.append(ConjectureRow(n, target, value, value == target))
        else:
            rows.append(ConjectureRow(n, target, None, None))
    return rows


def table_voids(lo: int, hi: int, width_limit: int = DP_WIDTH_LIMIT) -> list[VoidRow]:
    """Number of voids n^2 - F(n x n), exact where the DP reaches."""
    rows = []
    for n in range(lo, hi + 1):
        predicted = predicted_voids(n)
        if n <= width_limit:
            value = dp_F_rect(n, n, width_limit=width_limit).f_value
            voids = n * n - value
            rows.append(VoidRow(n, predicted, voids, voids == predicted))
        else:
            rows.append(VoidRow(n, predicted, None, None))
    return rows
