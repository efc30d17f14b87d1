"""Candidate vertex sets and their domination audit.

A *2-packing* is a vertex set whose members have pairwise disjoint closed
neighbourhoods, equivalently pairwise distance >= 3.  The audit counts how
many members dominate each vertex of the graph: *voids* are dominated by
nobody, *conflicts* by two or more.  A set is an *efficient dominating
set* (a perfect 1-code) when every vertex is dominated exactly once.

For a 2-packing the *influence* is sum(1 + deg v) over the members, which
equals the number of dominated vertices.  For a set that is not a
2-packing the influence reported here is the dominated-vertex count; the
raw weight sum is kept alongside so the discrepancy is visible.

The audit works on any graph object exposing ``vertices()``,
``neighbors(v)`` and ``degree(v)``: lattices as well as the
pendant-augmented graphs built by :mod:`effdom.constructions`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Iterable

from .lattice import Coord, Lattice

Vertex = Hashable


def _sort_key(v: Vertex):
    # Coords first, row-major; other vertex types (pendants) after, by their
    # numeric sort_hint when they define one, else by repr.
    if isinstance(v, tuple) and len(v) == 2 and all(isinstance(x, int) for x in v):
        return (0, v[0], v[1])
    hint = getattr(v, "sort_hint", None)
    return (1, type(v).__name__, repr(v) if hint is None else hint)


def normalize_set(members: Iterable[Vertex]) -> tuple[Vertex, ...]:
    """Canonical form of a vertex set: duplicate-free, row-major order."""
    return tuple(sorted(set(members), key=_sort_key))


@dataclass(frozen=True)
class DominationReport:
    """Outcome of auditing a candidate set against a graph."""

    coverage: dict[Vertex, int]
    voids: tuple[Vertex, ...]
    conflicts: tuple[Vertex, ...]
    is_two_packing: bool
    is_eds: bool
    influence: int
    dominated_count: int
    weight_sum: int


def audit(graph: Any, members: Iterable[Vertex]) -> DominationReport:
    """Count dominators per vertex and classify the candidate set."""
    order = list(graph.vertices())
    allowed = set(order)
    canon = normalize_set(members)
    for v in canon:
        if v not in allowed:
            if isinstance(graph, Lattice) and isinstance(v, tuple):
                graph.require(v)  # raises InvalidCoordError naming the coord
            raise ValueError(f"{v!r} is not a vertex of the given graph")

    coverage = dict.fromkeys(order, 0)
    weight_sum = 0
    for v in canon:
        coverage[v] += 1
        weight_sum += 1 + graph.degree(v)
        for u in graph.neighbors(v):
            coverage[u] += 1

    voids = tuple(v for v in order if coverage[v] == 0)
    conflicts = tuple(v for v in order if coverage[v] >= 2)
    dominated = len(order) - len(voids)
    packing = not conflicts
    if packing and weight_sum != dominated:
        raise AssertionError("influence identity violated for a 2-packing")
    return DominationReport(
        coverage=coverage,
        voids=voids,
        conflicts=conflicts,
        is_two_packing=packing,
        is_eds=packing and not voids,
        influence=weight_sum if packing else dominated,
        dominated_count=dominated,
        weight_sum=weight_sum,
    )


def is_two_packing(graph: Any, members: Iterable[Vertex]) -> bool:
    return audit(graph, members).is_two_packing


def influence(graph: Any, members: Iterable[Vertex]) -> int:
    """Influence of a 2-packing; refuses sets with overlapping neighbourhoods."""
    report = audit(graph, members)
    if not report.is_two_packing:
        raise ValueError(f"influence is defined for 2-packings only; conflicts at {report.conflicts}")
    return report.influence


def transpose_set(members: Iterable[Coord]) -> tuple[Coord, ...]:
    """Mirror a coordinate set across the main diagonal: (i, j) -> (j, i)."""
    return normalize_set((j, i) for i, j in members)


# -- JSON forms --------------------------------------------------------------


def vertex_to_json(v: Vertex) -> Any:
    if isinstance(v, tuple):
        return [v[0], v[1]]
    to_json = getattr(v, "to_json", None)
    if to_json is not None:
        return to_json()
    raise TypeError(f"cannot serialize vertex {v!r}")


def set_to_json(lattice: Lattice, members: Iterable[Coord]) -> dict:
    return {
        "lattice": lattice.descriptor(),
        "set": [vertex_to_json(v) for v in normalize_set(members)],
    }


def set_from_json(obj: dict) -> tuple[Lattice, tuple[Coord, ...]]:
    if not isinstance(obj, dict) or "lattice" not in obj or "set" not in obj:
        raise ValueError('expected an object with "lattice" and "set" fields')
    lattice = Lattice.from_descriptor(obj["lattice"])
    members = []
    for entry in obj["set"]:
        if not (isinstance(entry, list) and len(entry) == 2 and all(isinstance(x, int) for x in entry)):
            raise ValueError(f"set entries must be [i, j] pairs, got {entry!r}")
        members.append((entry[0], entry[1]))
    return lattice, normalize_set(members)


def report_to_json(report: DominationReport) -> dict:
    return {
        "is_two_packing": report.is_two_packing,
        "is_eds": report.is_eds,
        "influence": report.influence,
        "dominated_count": report.dominated_count,
        "weight_sum": report.weight_sum,
        "voids": [vertex_to_json(v) for v in report.voids],
        "conflicts": [vertex_to_json(v) for v in report.conflicts],
        "coverage": [[vertex_to_json(v), c] for v, c in report.coverage.items()],
    }
