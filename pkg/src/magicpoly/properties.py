"""Closed-form constants and existence results for both structure families.

All derived quantities are exact rationals.  A structure can only carry a
magic labeling when its center value is a positive integer, and the
existence helpers lean on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .structure import Family, StructureSpec


@dataclass(frozen=True)
class MagicConstants:
    """The sums any magic labeling of the structure is forced to realize.

    ``magic_sum`` is the common segment sum, ``center_value`` the label of
    the central point / root, and ``layer_sums[j-1]`` the total of all
    labels whose within-edge index is ``j``, taken across every ring.
    """

    magic_sum: Fraction
    center_value: Fraction
    layer_sums: tuple[Fraction, ...]


def constants(spec: StructureSpec) -> MagicConstants:
    """Forced sums for a magic labeling of ``spec``.

    Derivation sketch: adding all central segments counts every point once
    except the center, which appears once per central segment; adding all
    edge segments of one layer class isolates the layer sums.  Solving the
    resulting linear system pins every quantity below.
    """
    n, k = spec.n, spec.k
    if spec.family is Family.MAGIC:
        c = Fraction(k * k * n + 4, 4)
        u = (k + 1) * c
        s = Fraction(k * n * (k * k * n + 4), 8)
        layers = tuple(s for _ in range(k))
    else:
        c = Fraction(k * k * (n - 2) + k + 2, 2)
        u = (k + 1) * c
        first = (n - 1) * k * c
        rest = (n - 2) * k * c
        layers = (first,) + tuple(rest for _ in range(k - 1))
    return MagicConstants(u, c, layers)


class Verdict(Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    UNKNOWN = "Unknown"


class Reason(Enum):
    EXPLICIT_CONSTRUCTION = "ExplicitConstruction"
    ODD_SIDE_P2 = "OddSideP2"
    PARITY_D = "ParityD"
    NON_INTEGER_CENTER = "NonIntegerCenter"
    NO_KNOWN_RESULT = "NoKnownResult"


@dataclass(frozen=True)
class Existence:
    verdict: Verdict
    reason: Reason


def exists(spec: StructureSpec) -> Existence:
    """Decide existence of a magic labeling where a general result applies.

    Known ground: concentric structures with k=2 exist exactly for even n;
    degenerate structures never exist for odd k with even n (the center
    value comes out half-integral) and always exist for k=2.  The order-4
    concentric construction is conditional on a search succeeding, so k=4
    stays Unknown here.  A non-integral center rules out any remaining
    case; everything else is open.
    """
    n, k = spec.n, spec.k
    if spec.family is Family.MAGIC:
        if k == 2:
            if n % 2 == 1:
                return Existence(Verdict.NOT_EXISTS, Reason.ODD_SIDE_P2)
            return Existence(Verdict.EXISTS, Reason.EXPLICIT_CONSTRUCTION)
    else:
        if k % 2 == 1 and n % 2 == 0:
            return Existence(Verdict.NOT_EXISTS, Reason.PARITY_D)
        if k == 2:
            return Existence(Verdict.EXISTS, Reason.EXPLICIT_CONSTRUCTION)
    if constants(spec).center_value.denominator != 1:
        return Existence(Verdict.NOT_EXISTS, Reason.NON_INTEGER_CENTER)
    return Existence(Verdict.UNKNOWN, Reason.NO_KNOWN_RESULT)
