"""Exception hierarchy.

Everything raised on purpose by this package derives from :class:`QuError`.
Violated operation preconditions derive from :class:`PreconditionError`, and
notation errors are :class:`ParseError`; the CLI maps these to distinct exit
codes.
"""


class QuError(Exception):
    pass


class ParseError(QuError, ValueError):
    """Malformed notation text.

    ``position`` is the character offset of the offending input; ``message``
    is the human readable reason.
    """

    def __init__(self, position: int, message: str):
        self.position = position
        self.message = message
        super().__init__(f"{message} (at offset {position})")


class PreconditionError(QuError, ValueError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class OriginConflict(PreconditionError):
    pass


class OriginNotAtFront(PreconditionError):
    pass


class SuffixMismatch(PreconditionError):
    pass


class PrefixMismatch(PreconditionError):
    pass


class NotASingleRun(PreconditionError):
    pass


class IndivisibleLength(PreconditionError):
    pass


class InvalidPattern(PreconditionError):
    pass


class InvalidSample(PreconditionError):
    pass


class MalformedGraphString(PreconditionError):
    pass


class DimensionUnsupported(PreconditionError):
    pass
