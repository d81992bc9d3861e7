"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Parameters or data fail a documented precondition."""


class InvariantViolation(AssertionError):
    """An internal consistency property that must hold was violated.

    Raised instead of silently producing output; carries diagnostics.
    """


class DisconnectedCurve(InvalidInput):
    """Parameter tuple whose induced closed curve has several components."""


class NotAKnot(InvalidInput):
    """Braid closure has more than one component."""


class NotS3(InvalidInput):
    """Operation requires an S^3 diagram but got a lens space one."""


class NotReduced(InvalidInput):
    """Operation requires a reduced diagram."""


class Incoherent(InvalidInput):
    """Operation requires a coherent diagram."""


class PositivePathNotFound(Exception):
    """No positive path from w to z exists (legal only when incoherent)."""


class SearchExhausted(Exception):
    """Bounded parameter search failed; flags a defect, never ignored."""


class GenerationFailed(Exception):
    """Certificate generation failed under every supported convention."""


class MalformedCertificate(ValueError):
    """Certificate file or judgment structure is not well-formed."""
