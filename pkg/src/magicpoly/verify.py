"""Checking labelings against a structure's segment constraints.

The checker is total: it always fills in every report field, so a failing
labeling can be inspected rather than just rejected.  The expected segment
sum is recomputed from the structure's parameters, never inferred from the
labeling; a labeling whose segments agree with each other but not with the
forced sum is still rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatch
from .properties import constants
from .structure import CENTER, IncidenceStructure


@dataclass(frozen=True)
class Labeling:
    """Assignment of a positive integer to every point id of a structure."""

    values: dict[int, int]

    def value_tuple(self, point_count: int) -> tuple[int, ...]:
        """Values in point-id order; the canonical form used for comparisons."""
        return tuple(self.values[p] for p in range(point_count))


@dataclass(frozen=True)
class VerifyReport:
    """Full outcome of checking one labeling.

    ``violations`` holds one entry per segment whose sum misses the forced
    value: (segment index, actual sum, expected sum).  ``is_magic`` holds
    exactly when the labeling is bijective and no segment is violated.
    """

    is_magic: bool
    bijective: bool
    duplicates: tuple[int, ...]
    out_of_range: tuple[int, ...]
    violations: tuple[tuple[int, int, Fraction], ...]
    center_value: int
    layer_sums: tuple[int, ...]


def _check_domain(structure: IncidenceStructure, labeling: Labeling) -> None:
    ids = set(labeling.values)
    expected = set(structure.point_ids())
    if ids != expected:
        missing = sorted(expected - ids)
        extra = sorted(ids - expected)
        raise DomainMismatch(f"labeling domain mismatch: missing={missing} extra={extra}")


def layer_sums(structure: IncidenceStructure, labeling: Labeling) -> tuple[int, ...]:
    """Total of the labels at each within-edge index, across every ring.

    Index 1 collects the polygon vertices (for the root-sharing family this
    includes both endpoints of each ring path); indices 2..k collect the
    intermediate edge points.
    """
    _check_domain(structure, labeling)
    spec = structure.spec
    sums = [0] * spec.k
    for pid in range(1, structure.point_count):
        sums[spec.layer(pid) - 1] += labeling.values[pid]
    return tuple(sums)


def verify(structure: IncidenceStructure, labeling: Labeling) -> VerifyReport:
    """Check bijectivity and every segment sum; never short-circuits."""
    _check_domain(structure, labeling)
    n_points = structure.point_count
    values = labeling.values

    seen: dict[int, int] = {}
    for v in values.values():
        seen[v] = seen.get(v, 0) + 1
    duplicates = tuple(sorted(v for v, cnt in seen.items() if cnt > 1))
    out_of_range = tuple(sorted(v for v in seen if not 1 <= v <= n_points))
    bijective = not duplicates and not out_of_range

    expected = constants(structure.spec).magic_sum
    violations = []
    for idx, seg in enumerate(structure.segments):
        actual = sum(values[p] for p in seg.points)
        if actual != expected:
            violations.append((idx, actual, expected))

    return VerifyReport(
        is_magic=bijective and not violations,
        bijective=bijective,
        duplicates=duplicates,
        out_of_range=out_of_range,
        violations=tuple(violations),
        center_value=values[CENTER],
        layer_sums=layer_sums(structure, labeling),
    )
