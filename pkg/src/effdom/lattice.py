"""Rectangular, triangular and hexagonal lattice graphs.

Vertices are 1-based ``(row, column)`` pairs throughout.

Rectangular
    Bounded: ``m`` rows x ``n`` cols with the usual 4-neighbour adjacency.
    Torus: both dimensions wrap (requires sizes >= 3 so closed
    neighbourhoods stay simple).

Triangular
    Axial coordinates with the six neighbour offsets
    (+-1, 0), (0, +-1), (+1, -1), (-1, +1).  The bounded variant is the
    triangular patch of side ``s``: row ``i`` holds ``s - i + 1`` vertices,
    so the patch is exactly the axial region ``i + j <= s + 1``.  The torus
    variant wraps an ``m x n`` axial rectangle and is 6-regular.

Hexagonal
    "Brick wall" coordinates: ``(i, j)`` is adjacent to ``(i, j+-1)`` and
    to exactly one vertical neighbour, ``(i+1, j)`` when ``i + j`` is even,
    ``(i-1, j)`` otherwise.  Torus periods must both be even so the parity
    rule survives the wrap; the quotient is 3-regular.

Lattices are immutable values and every operation is a pure function, so
instances can be shared freely across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

Coord = tuple[int, int]

AXIAL_OFFSETS: tuple[Coord, ...] = ((-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0))


class LatticeKind(Enum):
    RECTANGULAR = "rect"
    TRIANGULAR = "tri"
    HEXAGONAL = "hex"


class InvalidCoordError(ValueError):
    """A coordinate that is not a vertex of the lattice it was used with."""

    def __init__(self, lattice: "Lattice", coord: Coord):
        self.coord = coord
        super().__init__(f"coordinate {coord} is not a vertex of {lattice.descriptor()}")


def _wrap(x: int, size: int) -> int:
    return (x - 1) % size + 1


@dataclass(frozen=True)
class Lattice:
    """A finite lattice graph, bounded or wrapped into a torus."""

    kind: LatticeKind
    rows: int
    cols: int
    torus: bool = False

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"lattice dimensions must be positive, got {self.rows}x{self.cols}")
        if self.kind is LatticeKind.TRIANGULAR and not self.torus and self.rows != self.cols:
            raise ValueError("a bounded triangular patch has a single side length")
        if self.torus:
            if self.kind is LatticeKind.HEXAGONAL:
                if self.rows % 2 or self.cols % 2 or self.rows < 4 or self.cols < 4:
                    raise ValueError("hexagonal torus periods must be even and >= 4")
            elif self.rows < 3 or self.cols < 3:
                raise ValueError("torus dimensions must be >= 3 to avoid multi-edges")

    # -- vertex set ---------------------------------------------------------

    def _row_width(self, i: int) -> int:
        if self.kind is LatticeKind.TRIANGULAR and not self.torus:
            return self.cols - i + 1
        return self.cols

    def contains(self, v: Coord) -> bool:
        i, j = v
        return 1 <= i <= self.rows and 1 <= j <= self._row_width(i)

    def require(self, v: Coord) -> None:
        if not self.contains(v):
            raise InvalidCoordError(self, v)

    @property
    def vertex_count(self) -> int:
        if self.kind is LatticeKind.TRIANGULAR and not self.torus:
            return self.rows * (self.rows + 1) // 2
        return self.rows * self.cols

    def vertices(self) -> list[Coord]:
        """All vertices in row-major order."""
        return [(i, j) for i in range(1, self.rows + 1) for j in range(1, self._row_width(i) + 1)]

    # -- adjacency ----------------------------------------------------------

    def _neighbor_candidates(self, v: Coord) -> list[Coord]:
        i, j = v
        if self.kind is LatticeKind.RECTANGULAR:
            return [(i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)]
        if self.kind is LatticeKind.TRIANGULAR:
            return [(i + di, j + dj) for di, dj in AXIAL_OFFSETS]
        # Hexagonal: horizontal always, one vertical chosen by parity.
        vert = (i + 1, j) if (i + j) % 2 == 0 else (i - 1, j)
        return [(i, j - 1), (i, j + 1), vert]

    def neighbors(self, v: Coord) -> tuple[Coord, ...]:
        """Adjacent vertices, sorted row-major; symmetric by construction."""
        self.require(v)
        out = []
        for u in self._neighbor_candidates(v):
            if self.torus:
                out.append((_wrap(u[0], self.rows), _wrap(u[1], self.cols)))
            elif self.contains(u):
                out.append(u)
        return tuple(sorted(set(out)))

    def degree(self, v: Coord) -> int:
        return len(self.neighbors(v))

    def closed_neighborhood(self, v: Coord) -> tuple[Coord, ...]:
        return tuple(sorted(set(self.neighbors(v)) | {v}))

    # -- distance -----------------------------------------------------------

    def distance(self, u: Coord, v: Coord) -> int:
        """Shortest-path length between two vertices."""
        self.require(u)
        self.require(v)
        if u == v:
            return 0
        if self.kind is LatticeKind.RECTANGULAR:
            di = abs(u[0] - v[0])
            dj = abs(u[1] - v[1])
            if self.torus:
                di = min(di, self.rows - di)
                dj = min(dj, self.cols - dj)
            return di + dj
        return self._bfs_distance(u, v)

    def _bfs_distance(self, u: Coord, v: Coord) -> int:
        seen = {u: 0}
        queue = deque([u])
        while queue:
            w = queue.popleft()
            d = seen[w]
            for x in self.neighbors(w):
                if x not in seen:
                    if x == v:
                        return d + 1
                    seen[x] = d + 1
                    queue.append(x)
        raise ValueError(f"{u} and {v} are not connected in {self.descriptor()}")

    # -- descriptors --------------------------------------------------------

    def descriptor(self) -> str:
        base = self.kind.value + ("-torus" if self.torus else "")
        if self.kind is LatticeKind.TRIANGULAR and not self.torus:
            return f"{base}:{self.rows}"
        return f"{base}:{self.rows}x{self.cols}"

    @classmethod
    def from_descriptor(cls, text: str) -> "Lattice":
        """Parse ``rect:MxN``, ``rect-torus:MxN``, ``tri:S``, ``tri-torus:MxN``,
        ``hex:MxN`` or ``hex-torus:MxN``."""
        try:
            head, _, size = text.strip().partition(":")
            torus = head.endswith("-torus")
            kind = LatticeKind(head[: -len("-torus")] if torus else head)
            if "x" in size:
                rows_s, _, cols_s = size.partition("x")
                rows, cols = int(rows_s), int(cols_s)
            else:
                rows = cols = int(size)
        except (ValueError, KeyError) as exc:
            raise ValueError(f"unrecognized lattice descriptor {text!r}") from exc
        if kind is LatticeKind.TRIANGULAR and not torus and rows != cols:
            raise ValueError(f"bounded triangular lattices take a single side: tri:S, got {text!r}")
        return cls(kind=kind, rows=rows, cols=cols, torus=torus)


def rect(rows: int, cols: int, torus: bool = False) -> Lattice:
    return Lattice(LatticeKind.RECTANGULAR, rows, cols, torus)


def tri(side_or_rows: int, cols: int | None = None, torus: bool = False) -> Lattice:
    if cols is None:
        cols = side_or_rows
    return Lattice(LatticeKind.TRIANGULAR, side_or_rows, cols, torus)


def hexa(rows: int, cols: int, torus: bool = False) -> Lattice:
    return Lattice(LatticeKind.HEXAGONAL, rows, cols, torus)
