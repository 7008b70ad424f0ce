"""Incidence model for magic polygons and their degenerated variant.

A structure is a finite set of integer point ids together with the list of
constrained segments a labeling must satisfy.  Point id 0 is always the
central point (concentric family ``P``) or the shared root vertex
(degenerate family ``D``).  Ring points are numbered in per-ring blocks,
outermost ring first:

* family ``P``: ring ``t`` (``1 <= t <= k/2``) holds perimeter positions
  ``q = 1..n*k`` (cyclic, vertex of edge ``i`` at ``q = (i-1)*k + 1``), and
  position ``(t, q)`` gets id ``(t-1)*n*k + q``;
* family ``D``: ring ``t`` (``1 <= t <= k``) holds the non-root path
  positions ``q = 1..k*(n-2)+1`` (open path, both endpoints adjacent to the
  root), and position ``(t, q)`` gets id ``(t-1)*(k*(n-2)+1) + q``.

Every segment holds exactly ``k + 1`` points.  Edge segments run along one
polygon edge; central segments pass through the center/root.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidSpec

#: Point id of the central point / root vertex.
CENTER = 0


class Family(Enum):
    """Structure family: concentric polygons (P) or root-sharing polygons (D)."""

    MAGIC = "P"
    DEGENERATE = "D"


@dataclass(frozen=True)
class StructureSpec:
    """Family selector plus the two size parameters.

    ``n`` is the number of polygon sides.  ``k`` controls the segment
    order: every constrained segment holds ``k + 1`` points.  The
    concentric family nests ``k/2`` polygons (``k`` must be even), the
    degenerate family nests ``k`` polygons sharing one root vertex.
    """

    family: Family
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise InvalidSpec(f"need at least 3 sides, got n={self.n}")
        if self.family is Family.MAGIC:
            if self.k < 2 or self.k % 2 != 0:
                raise InvalidSpec(f"family P needs even k >= 2, got k={self.k}")
        elif self.k < 1:
            raise InvalidSpec(f"family D needs k >= 1, got k={self.k}")

    @property
    def rings(self) -> int:
        """Number of nested polygons."""
        return self.k // 2 if self.family is Family.MAGIC else self.k

    @property
    def ring_length(self) -> int:
        """Ring points per polygon: full perimeter (P) or non-root path (D)."""
        if self.family is Family.MAGIC:
            return self.n * self.k
        return self.k * (self.n - 2) + 1

    @property
    def point_count(self) -> int:
        return self.rings * self.ring_length + 1

    @property
    def segment_order(self) -> int:
        """Points per constrained segment."""
        return self.k + 1

    def point_id(self, t: int, q: int) -> int:
        """Id of ring point ``(t, q)``; ring 1 is the outermost polygon."""
        if not 1 <= t <= self.rings:
            raise ValueError(f"ring index {t} out of range 1..{self.rings}")
        if not 1 <= q <= self.ring_length:
            raise ValueError(f"ring position {q} out of range 1..{self.ring_length}")
        return (t - 1) * self.ring_length + q

    def ring_position(self, point_id: int) -> tuple[int, int]:
        """Inverse of :meth:`point_id`; the center/root has no ring position."""
        if not 1 <= point_id < self.point_count:
            raise ValueError(f"no ring position for point id {point_id}")
        t, q = divmod(point_id - 1, self.ring_length)
        return t + 1, q + 1

    def layer(self, point_id: int) -> int:
        """Within-edge index (1..k) of a ring point; polygon vertices are layer 1."""
        _, q = self.ring_position(point_id)
        return (q - 1) % self.k + 1


class SegmentKind(Enum):
    EDGE = "edge"
    CENTRAL = "central"


@dataclass(frozen=True)
class Segment:
    """One constrained point set; a magic labeling sums each to the magic sum.

    ``layer_tags`` is set on edge segments only and gives the within-edge
    index (1..k) of each of the first k points; the final point is the
    first point of the next edge (P) or the closing vertex (D).
    """

    kind: SegmentKind
    points: tuple[int, ...]
    layer_tags: tuple[int, ...] | None = None


@dataclass(frozen=True)
class IncidenceStructure:
    """A spec together with its fully expanded segment list."""

    spec: StructureSpec
    point_count: int
    segments: tuple[Segment, ...]

    def point_ids(self) -> range:
        return range(self.point_count)


def build(spec: StructureSpec) -> IncidenceStructure:
    """Expand a spec into its incidence structure.

    Segment order is deterministic: edge segments by ring then edge index,
    followed by central segments by ring position.
    """
    segments: list[Segment] = []
    n, k = spec.n, spec.k
    tags = tuple(range(1, k + 1))
    if spec.family is Family.MAGIC:
        perimeter = n * k
        for t in range(1, spec.rings + 1):
            for i in range(1, n + 1):
                points = [spec.point_id(t, (i - 1) * k + j) for j in range(1, k + 1)]
                points.append(spec.point_id(t, (i * k) % perimeter + 1))
                segments.append(Segment(SegmentKind.EDGE, tuple(points), tags))
        half = perimeter // 2
        for q in range(1, half + 1):
            points = [spec.point_id(t, q) for t in range(1, spec.rings + 1)]
            points.append(CENTER)
            points.extend(spec.point_id(t, q + half) for t in range(1, spec.rings + 1))
            segments.append(Segment(SegmentKind.CENTRAL, tuple(points)))
    else:
        for t in range(1, k + 1):
            for i in range(1, n - 1):
                points = [spec.point_id(t, (i - 1) * k + j) for j in range(1, k + 2)]
                segments.append(Segment(SegmentKind.EDGE, tuple(points), tags))
        for q in range(1, spec.ring_length + 1):
            points = [spec.point_id(t, q) for t in range(1, k + 1)]
            points.append(CENTER)
            segments.append(Segment(SegmentKind.CENTRAL, tuple(points)))
    return IncidenceStructure(spec, spec.point_count, tuple(segments))


def antipode(spec: StructureSpec, q: int) -> int:
    """Perimeter position paired with ``q`` by the central segments (family P).

    Involutive: the pairing walks half the perimeter, so applying it twice
    returns to ``q``.
    """
    if spec.family is not Family.MAGIC:
        raise InvalidSpec("antipode is defined for family P only")
    perimeter = spec.ring_length
    if not 1 <= q <= perimeter:
        raise ValueError(f"ring position {q} out of range 1..{perimeter}")
    return (q + perimeter // 2 - 1) % perimeter + 1
