"""Exception types shared across the package.

Structure errors carry the name of the violated clause and a witness
tuple of vertex ids so that callers (and the CLI) can report exactly
which adjacency fact failed and where.
"""


class CliquewidthError(Exception):
    """Base class for all package errors."""


class MalformedGraph(CliquewidthError):
    """Bad graph input: self-loop, unknown vertex, malformed file."""


class MalformedExpression(CliquewidthError):
    """Expression text that does not parse.

    Carries the 1-based line and column of the offending token.
    """

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class InvalidExpression(CliquewidthError):
    """Structurally valid parse tree violating an expression invariant."""


class DuplicateVertex(InvalidExpression):
    """The same vertex id is created more than once in one expression."""


class MissingWeight(CliquewidthError):
    """A weight lookup failed for a vertex created by the expression."""


class NotBipartition(CliquewidthError):
    """The given (X, Y) pair is not an independent bipartition."""


class NotThreeChain(CliquewidthError):
    """The given (A, B, C) triple cannot be a 3-chain partition."""


class TooLarge(CliquewidthError):
    """Input exceeds a brute-force size cap."""


class GenerationFailed(CliquewidthError):
    """Rejection sampling exhausted its attempt budget."""


class NotInClass(CliquewidthError):
    """Input graph contains a triangle or an induced S(1,2,2)."""

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class StructureViolation(CliquewidthError):
    """A named structural clause failed on the given witness vertices."""

    def __init__(self, clause, witness=(), message=None):
        self.clause = clause
        self.witness = tuple(witness)
        text = message or f"{clause} violated"
        if self.witness:
            text += " by " + " ".join(str(v) for v in self.witness)
        super().__init__(text)


class NotTriangleFreeWitness(StructureViolation):
    """Classification found vertices that force a triangle."""


class NotS122FreeWitness(StructureViolation):
    """Classification found vertices that force an induced S(1,2,2)."""


class DisconnectedOrNotPrime(StructureViolation):
    """A 0-vertex exists, so the graph is disconnected or not prime."""


class NotPrime(StructureViolation):
    """A forced homogeneous set exists, so the graph is not prime."""
