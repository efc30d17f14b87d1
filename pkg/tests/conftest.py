"""Shared test helpers: independent oracles kept separate from the package."""

from __future__ import annotations

import itertools
import random
from collections import deque


def bfs_distance(graph, u, v):
    """Plain BFS shortest path, independent of any closed-form distance."""
    if u == v:
        return 0
    seen = {u}
    queue = deque([(u, 0)])
    while queue:
        w, d = queue.popleft()
        for x in graph.neighbors(w):
            if x == v:
                return d + 1
            if x not in seen:
                seen.add(x)
                queue.append((x, d + 1))
    return None


def pairwise_distances_ok(graph, members, minimum=3):
    """Pairwise distance >= minimum; unreachable pairs count as satisfied."""
    ms = list(members)
    for u, v in itertools.combinations(ms, 2):
        d = bfs_distance(graph, u, v)
        if d is not None and d < minimum:
            return False
    return True


def greedy_random_packing(graph, rng: random.Random):
    """A random maximal 2-packing: shuffled greedy insertion."""
    order = list(graph.vertices())
    rng.shuffle(order)
    coverage = dict.fromkeys(graph.vertices(), 0)
    chosen = []
    for v in order:
        closed = [v, *graph.neighbors(v)]
        if all(coverage[x] == 0 for x in closed):
            chosen.append(v)
            for x in closed:
                coverage[x] += 1
    return chosen


def exhaustive_max_influence(graph):
    """Exact F by enumerating every subset; only for tiny graphs."""
    verts = list(graph.vertices())
    best = 0
    for r in range(len(verts) + 1):
        for combo in itertools.combinations(verts, r):
            coverage = dict.fromkeys(verts, 0)
            ok = True
            for v in combo:
                for x in (v, *graph.neighbors(v)):
                    coverage[x] += 1
                    if coverage[x] > 1:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                value = sum(1 + graph.degree(v) for v in combo)
                best = max(best, value)
    return best
