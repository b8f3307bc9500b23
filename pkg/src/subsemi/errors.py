"""Exception types shared across the package."""


class SubsemiError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTableError(SubsemiError):
    """Table entries out of range, rows ragged, or order outside 1..64."""


class NotAssociativeError(SubsemiError):
    """An operation required an associative table and got a violating triple."""

    def __init__(self, triple, message=None):
        self.triple = triple
        super().__init__(message or f"associativity fails at triple {triple}")


class NoRecurrenceError(SubsemiError):
    """No power of the element returns to it; x^r = x cannot hold."""


class PreconditionError(SubsemiError):
    """An operation's stated precondition on its arguments was violated."""


class ExponentNotPowerOfTwoPlusOne(SubsemiError):
    """local_exponent - 1 is not a power of two, so the power-subsemigroup
    construction does not apply."""


class EmptySeedError(SubsemiError):
    """Closure of the empty set is not defined here (subsemigroups are nonempty)."""


class OutOfRangeError(SubsemiError):
    """Requested cardinality or element index outside the valid range."""


class OrderTooLargeForExhaustive(SubsemiError):
    """Table order exceeds the exhaustive subset-scan cap and no pruned
    strategy was requested."""


class TooLargeError(SubsemiError):
    """Construction would exceed the order-64 table cap."""


class NoSolutionError(SubsemiError):
    """No (p, q) pair satisfies the blocking inequality for this n."""


class NoCounterexampleExistsError(SubsemiError):
    """Every large-enough semigroup of the class has a subsemigroup of this
    order, so no counterexample can be constructed."""


class NoOddPrimeFactorError(SubsemiError):
    """r - 1 is a power of two, so no odd-prime-power group construction applies."""


class AlphabetError(SubsemiError):
    """Word contains letters outside the configured free-band alphabet."""


class OrderTooLargeError(SubsemiError):
    """Enumeration order exceeds the configured census cap."""


class ParseError(SubsemiError):
    """Malformed .sgt table file; carries 1-based line and column positions."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
