"""
Errors - Exception hierarchy shared by every qbalance module

Parameter and usage problems derive from ParameterError, data problems found
while decoding derive from DecodeError. The CLI maps the two families to exit
codes 2 and 3.
"""

from typing import Optional


class QBalanceError(Exception):
    """Root of all qbalance errors"""


class ParameterError(QBalanceError, ValueError):
    """Invalid code parameters, malformed words or bad usage"""


class LengthMismatch(ParameterError):
    """Two sequences that must have equal length do not"""

    def __init__(self, expected: int, actual: int, what: str = "sequence"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"{what} length mismatch: expected {expected}, got {actual}")


class AlphabetMismatch(ParameterError):
    """Two sequences over different alphabets were combined"""

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"alphabet mismatch: expected q={expected}, got q={actual}")


class IndexOutOfRange(QBalanceError, IndexError):
    """Balancing index or Gray rank outside its admissible range"""

    def __init__(self, name: str, value: int, low: int, high: int):
        self.name = name
        self.value = value
        self.low = low
        self.high = high
        super().__init__(f"{name}={value} outside [{low}, {high}]")


class SizeGuardExceeded(QBalanceError):
    """Refused to enumerate more words than the configured guard allows"""

    def __init__(self, size: int, guard: int):
        self.size = size
        self.guard = guard
        super().__init__(f"enumeration of {size} words exceeds guard {guard}")


class SubsetNotFound(QBalanceError):
    """No window of Gray ranks has a mean weight close enough to the target"""


class EncodingFailure(QBalanceError):
    """No balancing index produced a balanced codeword"""


class DecodeError(QBalanceError):
    """Received word cannot be decoded under the given parameters"""


class PrefixOutOfSubset(DecodeError):
    """Gray prefix rank lies outside the chosen subset [z1, z2]"""

    def __init__(self, z_prime: int, z1: int, z2: int):
        self.z_prime = z_prime
        self.z1 = z1
        self.z2 = z2
        super().__init__(f"Gray prefix rank {z_prime} outside subset [{z1}, {z2}]")


class NotBalanced(DecodeError):
    """Strict decoding received a word whose weight is not the balancing value"""

    def __init__(self, weight: int, beta: int):
        self.weight = weight
        self.beta = beta
        super().__init__(f"received weight {weight} != balancing value {beta}")


class UnknownScheme(ParameterError):
    """Redundancy scheme identifier not recognised"""

    def __init__(self, scheme: str, known: Optional[list] = None):
        self.scheme = scheme
        hint = f"; known: {', '.join(known)}" if known else ""
        super().__init__(f"unknown scheme '{scheme}'{hint}")


class UnsupportedRange(ParameterError):
    """Redundancy outside the range where a bound is meaningful"""
