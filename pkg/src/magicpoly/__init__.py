"""Toolkit for magic polygons: incidence models, forced constants,
existence results, explicit constructors, exhaustive search, verification
and SVG rendering for the concentric (P) and root-sharing (D) families.
"""

from .construct import d2, p2, p4
from .errors import (
    DomainMismatch,
    InvalidSpec,
    OddSideCount,
    SideCountTooSmall,
    TooLarge,
)
from .properties import Existence, MagicConstants, Reason, Verdict, constants, exists
from .render import LayoutPoint, layout, to_svg
from .search import Mode, SearchOptions, SearchResult, Status, brute_force_count, solve
from .structure import (
    CENTER,
    Family,
    IncidenceStructure,
    Segment,
    SegmentKind,
    StructureSpec,
    antipode,
    build,
)
from .verify import Labeling, VerifyReport, layer_sums, verify

__all__ = [
    "CENTER",
    "DomainMismatch",
    "Existence",
    "Family",
    "IncidenceStructure",
    "InvalidSpec",
    "Labeling",
    "LayoutPoint",
    "MagicConstants",
    "Mode",
    "OddSideCount",
    "Reason",
    "SearchOptions",
    "SearchResult",
    "Segment",
    "SegmentKind",
    "SideCountTooSmall",
    "Status",
    "StructureSpec",
    "TooLarge",
    "Verdict",
    "VerifyReport",
    "antipode",
    "brute_force_count",
    "build",
    "constants",
    "d2",
    "exists",
    "layer_sums",
    "layout",
    "p2",
    "p4",
    "solve",
    "to_svg",
    "verify",
]
