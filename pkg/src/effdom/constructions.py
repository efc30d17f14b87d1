"""Explicit maximum-influence 2-packings for bounded rectangular grids.

Grids are oriented with the short side as rows: the 2 x n strip has
``rows=2, cols=n`` and the 3 x n strip ``rows=3, cols=n``.

The strip constructions follow a forced-chain / column-block scheme:

* 2 x n: the chain (1,1), (2,3), (1,5), (2,7), ... closes perfectly for
  odd n (an efficient dominating set of influence 2n) and leaves exactly
  one void in the last column for even n (influence 2n - 1).
* 3 x n: the columns split into floor(n/3) blocks of width 3 (the last
  block widened to 4 or 5).  Interior blocks contribute two picks each and
  exactly one void; the final one or two blocks use adjusted picks.  For
  n >= 4 the influence is 3n - floor(n/3); the lone exception n = 3 tops
  out at 7 with two voids.

For the n x n square (n >= 7) the ``knight_construction`` selects anchor
pairs down columns 1-2 and along the bottom row, then extends every
anchor by repeated knight steps (one up, two right).  All of its voids
land on the outer boundary; their count is ``predicted_voids(n)``, giving
the lower bound ``lower_bound_F(n)`` on the square's efficient domination
number, conjectured to be exact.

``near_grid_augment`` turns any 2-packing into an efficient dominating
set of a slightly larger "near-grid" graph by hanging one pendant vertex
off each void.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Coord, Lattice, LatticeKind, rect
from .packing import Vertex, audit, normalize_set


class ConstructionError(ValueError):
    """A construction reached a configuration its case analysis does not cover."""


# -- 2 x n strips -------------------------------------------------------------


def _p2_chain(n: int) -> tuple[Coord, ...]:
    # (1,1), (2,3), (1,5), (2,7), ... while the column fits.
    picks = []
    t = 0
    while 2 * t + 1 <= n:
        picks.append((1 if t % 2 == 0 else 2, 2 * t + 1))
        t += 1
    return normalize_set(picks)


def eds_pn_p2(n: int) -> tuple[Coord, ...]:
    """Efficient dominating set of the 2 x n grid; exists only for odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"the 2 x {n} grid has no perfect code; use fset_pn_p2_even for even n")
    return _p2_chain(n)


def fset_pn_p2_even(n: int) -> tuple[Coord, ...]:
    """Maximum-influence 2-packing of the 2 x n grid for even n.

    Influence is 2n - 1; the single void sits at (2, n) when n/2 is odd
    and at (1, n) when n/2 is even.
    """
    if n < 2 or n % 2 == 1:
        raise ValueError(f"fset_pn_p2_even needs even n >= 2, got {n}; use eds_pn_p2 for odd n")
    return _p2_chain(n)


# -- 3 x n strips -------------------------------------------------------------


def fset_pn_p3(n: int) -> tuple[Coord, ...]:
    """Maximum-influence 2-packing of the 3 x n grid (n >= 3).

    Influence 3n - floor(n/3) with floor(n/3) voids for n >= 4;
    the 3 x 3 square itself only reaches 7, with two voids.
    """
    if n < 3:
        raise ValueError(f"fset_pn_p3 needs n >= 3, got {n}")
    if n == 3:
        return normalize_set([(1, 1), (3, 2)])
    k, r = divmod(n, 3)
    picks: list[Coord] = []

    def block(index: int, local: list[Coord]) -> None:
        base = 3 * (index - 1)
        picks.extend((row, base + col) for row, col in local)

    standard = [(1, 1), (3, 2)]
    if r == 0:
        for i in range(1, k - 1):
            block(i, standard)
        block(k - 1, [(2, 1), (1, 3)])
        block(k, [(3, 1), (2, 3)])
    elif r == 1:
        for i in range(1, k):
            block(i, standard)
        block(k, [(1, 1), (3, 2), (2, 4)])
    else:
        for i in range(1, k):
            block(i, standard)
        block(k, [(1, 1), (3, 2), (1, 4), (3, 5)])
    return normalize_set(picks)


# -- small squares ------------------------------------------------------------


def eds_p4_p4() -> tuple[Coord, ...]:
    """The 4-element perfect code of the 4 x 4 grid."""
    return normalize_set([(1, 2), (2, 4), (3, 1), (4, 3)])


# Optimal witnesses extracted once from the exact solver (influence 23 / 33).
_SQUARE_WITNESSES: dict[int, tuple[Coord, ...]] = {
    5: ((1, 1), (1, 4), (3, 2), (3, 5), (5, 1), (5, 4)),
    6: ((1, 1), (1, 4), (2, 6), (3, 2), (4, 4), (5, 1), (5, 6), (6, 3)),
}


def fset_square_small(n: int) -> tuple[Coord, ...]:
    """Frozen maximum-influence 2-packings of the 5 x 5 and 6 x 6 grids."""
    try:
        return _SQUARE_WITNESSES[n]
    except KeyError:
        raise ValueError(f"fset_square_small covers n in {{5, 6}}, got {n}") from None


# -- void counts and bounds for n x n, n >= 7 --------------------------------


def predicted_voids(n: int) -> int:
    """Boundary voids left by the knight construction on the n x n grid."""
    if n < 7:
        raise ValueError(f"predicted_voids is defined for n >= 7, got {n}")
    k = n // 5
    if n % 5 in (0, 1, 4):
        return 4 * k
    return n - k - 1


def lower_bound_F(n: int) -> int:
    """Proven lower bound on F of the n x n grid: n^2 minus the void count."""
    if n < 7:
        raise ValueError(f"lower_bound_F is defined for n >= 7, got {n}")
    return n * n - predicted_voids(n)


def conjectured_F(n: int) -> int:
    """Conjectured exact F of the n x n grid; numerically the lower bound."""
    if n < 7:
        raise ValueError(f"conjectured_F is defined for n >= 7, got {n}")
    return lower_bound_F(n)


# -- knight construction ------------------------------------------------------


@dataclass(frozen=True)
class KnightPattern:
    """Anchor picks plus their knight-ray extensions on the n x n grid."""

    n: int
    seeds: tuple[Coord, ...]
    rays: dict[Coord, tuple[Coord, ...]]
    full_set: tuple[Coord, ...]

    def lattice(self) -> Lattice:
        return rect(self.n, self.n)


def knight_construction(n: int) -> KnightPattern:
    """Near-optimal 2-packing of the n x n grid, n >= 7.

    Anchors: pairs (i, 1), (i+2, 2) down the first two columns every five
    rows (starting at row 2 when n = 5k + 4, else row 1), one bottom-row
    vertex y chosen by where the column walk ends, and further bottom-row
    vertices every five columns right of y.  Every anchor then emits the
    ray (i - k, j + 2k) until it leaves the grid.
    """
    if n < 7:
        raise ValueError(f"knight_construction needs n >= 7, got {n}")
    seeds: list[Coord] = []
    i = 2 if n % 5 == 4 else 1
    last: Coord = (i, 1)
    while i <= n:
        seeds.append((i, 1))
        last = (i, 1)
        if i + 2 <= n:
            seeds.append((i + 2, 2))
            last = (i + 2, 2)
        i += 5

    if last == (n - 2, 2):
        y: Coord = (n, 3)
    elif last == (n - 1, 2):
        y = (n, 5)
    elif last == (n - 1, 1):
        y = (n, 4)
    elif last in ((n, 1), (n, 2)):
        y = last
    else:
        raise ConstructionError(f"column walk for n={n} ended at {last}, outside the case table")
    if y != last:
        seeds.append(y)
    j = y[1] + 5
    while j <= n:
        seeds.append((n, j))
        j += 5

    rays: dict[Coord, tuple[Coord, ...]] = {}
    full: list[Coord] = list(seeds)
    for si, sj in seeds:
        ray = []
        k = 1
        while si - k >= 1 and sj + 2 * k <= n:
            ray.append((si - k, sj + 2 * k))
            k += 1
        rays[(si, sj)] = tuple(ray)
        full.extend(ray)
    return KnightPattern(n=n, seeds=normalize_set(seeds), rays=rays, full_set=normalize_set(full))


# -- pendant augmentation -----------------------------------------------------


@dataclass(frozen=True)
class Pendant:
    """A degree-1 vertex hung off one void of the base grid."""

    index: int
    anchor: Coord

    @property
    def sort_hint(self) -> int:
        return self.index

    def to_json(self) -> dict:
        return {"pendant": self.index, "attached_to": [self.anchor[0], self.anchor[1]]}


@dataclass(frozen=True)
class AugmentedLattice:
    """A bounded grid plus pendant vertices; exposes the graph protocol."""

    base: Lattice
    pendants: tuple[Pendant, ...]

    def __post_init__(self) -> None:
        anchors = [p.anchor for p in self.pendants]
        if len(set(anchors)) != len(anchors):
            raise ValueError("pendants must be attached to distinct vertices")
        for a in anchors:
            self.base.require(a)

    @property
    def vertex_count(self) -> int:
        return self.base.vertex_count + len(self.pendants)

    def vertices(self) -> list[Vertex]:
        return list(self.base.vertices()) + list(self.pendants)

    def contains(self, v: Vertex) -> bool:
        if isinstance(v, Pendant):
            return v in self.pendants
        return self.base.contains(v)

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        if isinstance(v, Pendant):
            if v not in self.pendants:
                raise ValueError(f"{v!r} is not a vertex of this graph")
            return (v.anchor,)
        base = self.base.neighbors(v)
        extra = tuple(p for p in self.pendants if p.anchor == v)
        return base + extra

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def descriptor(self) -> str:
        return f"{self.base.descriptor()}+{len(self.pendants)}p"


def near_grid_augment(
    lattice: Lattice, members: tuple[Coord, ...]
) -> tuple[AugmentedLattice, tuple[Vertex, ...]]:
    """Hang one pendant off each void of a 2-packing.

    Returns the augmented graph and the set members plus all pendants,
    which is an efficient dominating set of that graph: the pendant
    dominates itself and its void, and every other vertex keeps its
    unique dominator.
    """
    if lattice.kind is not LatticeKind.RECTANGULAR or lattice.torus:
        raise ValueError("near_grid_augment expects a bounded rectangular lattice")
    report = audit(lattice, members)
    if not report.is_two_packing:
        raise ValueError(f"near_grid_augment needs a 2-packing; conflicts at {report.conflicts}")
    pendants = tuple(Pendant(index=t, anchor=void) for t, void in enumerate(report.voids))
    augmented = AugmentedLattice(base=lattice, pendants=pendants)
    eds = normalize_set(members) + pendants
    return augmented, eds
