"""Exception hierarchy shared by every layer of the workbench."""


class FamError(Exception):
    """Base class for all workbench errors."""


class Span:
    """Half-open source region, 1-based lines and columns."""

    __slots__ = ("line", "column", "end_line", "end_column")

    def __init__(self, line, column, end_line=None, end_column=None):
        self.line = line
        self.column = column
        self.end_line = line if end_line is None else end_line
        self.end_column = column if end_column is None else end_column

    def __repr__(self):
        return f"Span({self.line}:{self.column}-{self.end_line}:{self.end_column})"

    def __str__(self):
        return f"{self.line}:{self.column}"

    def __eq__(self, other):
        if not isinstance(other, Span):
            return NotImplemented
        return (self.line, self.column, self.end_line, self.end_column) == (
            other.line, other.column, other.end_line, other.end_column)

    def merge(self, other):
        return Span(self.line, self.column, other.end_line, other.end_column)


class SpannedError(FamError):
    """Error anchored to a position in some source text."""

    def __init__(self, message, span=None):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self):
        if self.span is not None:
            return f"{self.span}: {self.message}"
        return self.message


class LexError(SpannedError):
    """Illegal character, unterminated string or FM literal."""

    def __init__(self, message, span=None, unterminated=False):
        super().__init__(message, span)
        self.unterminated = unterminated


class ParseError(SpannedError):
    """Syntax error with 1-based position and the expected-token set."""

    def __init__(self, message, span=None, expected=(), found=None, errors=None):
        super().__init__(message, span)
        self.expected = tuple(expected)
        self.found = found
        # batch mode: all errors collected before the parser gave up
        self.errors = list(errors) if errors else [self]

    @property
    def line(self):
        return self.span.line if self.span else None

    @property
    def column(self):
        return self.span.column if self.span else None


class SemanticError(FamError):
    """Structurally valid text denoting an ill-formed model."""


class SchemaError(FamError):
    """Malformed interchange document."""


class UnknownFeature(FamError):
    def __init__(self, name, message=None):
        super().__init__(message or f"unknown feature {name!r}")
        self.name = name


class NameClash(FamError):
    def __init__(self, name, message=None):
        super().__init__(message or f"feature {name!r} already exists")
        self.name = name


class AlphabetTooLarge(FamError):
    """Brute-force enumeration refused beyond the oracle guard."""

    def __init__(self, size, bound):
        super().__init__(f"alphabet has {size} features, enumeration capped at {bound}")
        self.size = size
        self.bound = bound


class LimitExceeded(FamError):
    """Enumeration would return more configurations than the caller allowed."""

    def __init__(self, count, limit):
        super().__init__(f"{count} configurations exceed the limit of {limit}")
        self.count = count
        self.limit = limit


class CapacityExceeded(FamError):
    """BDD arena outgrew its node budget."""

    def __init__(self, budget):
        super().__init__(f"BDD arena exceeded the {budget}-node budget")
        self.budget = budget


class InvalidModel(FamError):
    """Operation requires a satisfiable space."""


class ArityError(FamError):
    """Wrong operand count for a merge mode."""


class UnboundVariable(SpannedError):
    def __init__(self, name, span=None):
        super().__init__(f"unbound variable {name!r}", span)
        self.name = name


class EvalTypeError(SpannedError):
    """Runtime type mismatch in a script, with the offending span."""

    def __init__(self, expected, found, span=None):
        super().__init__(f"expected {expected}, found {found}", span)
        self.expected = expected
        self.found = found


class EvalError(SpannedError):
    """Any other evaluation failure surfaced with its source span."""


class IoError(FamError):
    """Script file could not be read."""


class WrongMode(FamError):
    """Fluent context used in the wrong mode."""


class MixedContext(FamError):
    """Fluent handles from different contexts combined."""


class MissingTemplate(FamError):
    def __init__(self, kind, dialect):
        super().__init__(f"dialect {dialect!r} has no template for {kind}")
        self.kind = kind
        self.dialect = dialect


class UnsupportedNode(FamError):
    def __init__(self, kind, dialect):
        super().__init__(f"dialect {dialect!r} does not support {kind}")
        self.kind = kind
        self.dialect = dialect
