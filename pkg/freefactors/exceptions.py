"""Custom exceptions for the freefactors toolkit."""


class FreeFactorsError(Exception):
    """Base class for toolkit exceptions with a CLI exit code.

    All custom exceptions should inherit from this class and define
    their specific exit_code for consistent command-line handling.
    """

    exit_code: int = 2

    def __init__(self, message: str = "freefactors error"):
        self.message = message
        super().__init__(message)


class WordError(FreeFactorsError):
    """Raised for malformed words or letters outside the alphabet."""


class WordParseError(WordError):
    """Raised when word text cannot be parsed.

    Carries the offending text and the 1-based column of the first bad character.
    """

    def __init__(self, text: str, column: int, detail: str = "unknown letter"):
        self.text = text
        self.column = column
        super().__init__(f"cannot parse word {text!r} at column {column}: {detail}")


class LetterOutOfRangeError(WordError):
    """Raised when a letter index exceeds the rank of the alphabet."""

    def __init__(self, index: int, rank: int):
        self.index = index
        self.rank = rank
        super().__init__(f"letter index {index} out of range for rank {rank}")


class MapError(FreeFactorsError):
    """Raised for ill-formed basis maps."""


class InverseMismatchError(MapError):
    """Raised when a supplied inverse does not compose to the identity."""


class GraphError(FreeFactorsError):
    """Raised for labeled-graph precondition failures."""


class MissingBasepointError(GraphError):
    """Raised when an operation needs a basepoint and the graph has none."""

    def __init__(self, operation: str = "operation"):
        super().__init__(f"{operation} requires a basepointed graph")


class EmptyCoreError(GraphError):
    """Raised when the unpointed core of an acyclic graph is requested."""

    def __init__(self) -> None:
        super().__init__("unpointed core of an acyclic graph is empty")


class AcyclicGraphError(GraphError):
    """Raised when a cycle-based measure is requested on a tree."""

    def __init__(self) -> None:
        super().__init__("graph has no cycle")


class VertexNotFoundError(GraphError):
    """Raised when a vertex id is not part of the graph."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} not in graph")


class NotFoldedError(GraphError):
    """Raised when an operation requires a folded graph."""

    def __init__(self, operation: str = "operation"):
        super().__init__(f"{operation} requires folded graphs")


class GraphParseError(GraphError):
    """Raised when graph text cannot be parsed; carries the 1-based line."""

    def __init__(self, line: int, detail: str):
        self.line = line
        super().__init__(f"graph parse error at line {line}: {detail}")


class SubgroupError(FreeFactorsError):
    """Raised for subgroup-calculus precondition failures."""


class TrivialSubgroupError(SubgroupError):
    """Raised when a rank-0 subgroup is given where a nontrivial one is needed."""

    def __init__(self, detail: str = "subgroup is trivial"):
        super().__init__(detail)


class UnpointedSubgroupError(SubgroupError):
    """Raised when a pointed subgroup is required."""

    def __init__(self, operation: str = "operation"):
        super().__init__(f"{operation} requires a pointed subgroup")


class RankPreconditionError(SubgroupError):
    """Raised when a subgroup's rank violates an operation's precondition."""

    def __init__(self, expected: str, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"rank precondition violated: expected {expected}, got {actual}")


class FactorRankMismatchError(SubgroupError):
    """Raised when rank(subgroup) + |complement| differs from n."""

    def __init__(self, rank: int, complement: int, n: int):
        super().__init__(f"witness rank mismatch: {rank} + {complement} != {n}")


class NotAFactorError(SubgroupError):
    """Raised when a subgroup is required to be a free factor and is not."""

    def __init__(self, detail: str = "subgroup is not a free factor"):
        super().__init__(detail)


class NotABasisError(SubgroupError):
    """Raised when a word list is required to be a basis and is not."""

    def __init__(self, detail: str = "words do not form a basis"):
        super().__init__(detail)


class ComplexError(FreeFactorsError):
    """Raised for apartment and complex precondition failures."""


class ModeError(ComplexError):
    """Raised when an operation is called in the wrong AF/OF mode."""

    def __init__(self, expected: str, actual: str):
        super().__init__(f"operation requires mode {expected}, got {actual}")


class NonStandardApartmentError(ComplexError):
    """Raised when an operation needs an apartment built from a basis."""

    def __init__(self) -> None:
        super().__init__("apartment has no basis (not constructed as standard)")


class FaceError(ComplexError):
    """Raised for invalid face indices."""


class ApartmentPreconditionError(ComplexError):
    """Raised when an apartment violates an operation's precondition."""


class VerificationError(FreeFactorsError):
    """Raised when an internal verification that must hold fails.

    Maps to exit code 1: a failed check, never a usage problem.
    """

    exit_code = 1


class RankMismatchError(FreeFactorsError):
    """Raised when inputs of one invocation disagree on the rank."""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"rank mismatch: expected n={expected}, got {actual}")
