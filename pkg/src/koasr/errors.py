"""Exception types shared across the toolkit."""


class KoasrError(Exception):
    """Base class for all toolkit errors."""


class NotAHangulSyllable(KoasrError, ValueError):
    """Character is outside the precomposed syllable range U+AC00..U+D7A3."""


class IndexOutOfRange(KoasrError, ValueError):
    """Jamo index outside its positional range."""


class EmptyCorpus(KoasrError, ValueError):
    """An operation that needs corpus statistics received no lines."""


class InvalidConfig(KoasrError, ValueError):
    """Scheme or builder configuration violates an invariant."""


class UnencodableCharacter(KoasrError, ValueError):
    """Character has no representation under the selected scheme."""


class UnknownTokenId(KoasrError, ValueError):
    """Token id outside the owning vocabulary or model inventory."""


class TargetTooSmall(KoasrError, ValueError):
    """Requested sub-word inventory not larger than the base inventory."""


class LatticeFormatError(KoasrError, ValueError):
    """Lattice file is malformed or rows do not normalize."""


class ScorerFormatError(KoasrError, ValueError):
    """Attention-scorer parameter file is malformed."""


class LineCountMismatch(KoasrError, ValueError):
    """Reference and hypothesis files differ in line count."""
