"""Exception types shared across the toolkit."""


class InvalidSpec(ValueError):
    """Structure parameters violate the family's admissibility rules."""


class DomainMismatch(ValueError):
    """A labeling's point ids do not match the structure's point set."""


class TooLarge(ValueError):
    """The structure exceeds the size guard of an exhaustive operation."""


class SideCountTooSmall(ValueError):
    """A constructor was asked for fewer sides than it supports."""


class OddSideCount(ValueError):
    """A constructor was asked for an odd side count it cannot realize."""
