"""
Numeric helpers: compensated summation, exact rationals and stable formatting.
"""
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

# Exact arbitrary-precision fraction, always in lowest terms with a positive denominator.
BigRational = Fraction

Number = Union[Fraction, float, int]


class CompensatedSum:
    """Incremental Neumaier summation.

    Keeps a running sum plus a carry of the low-order bits lost by each
    addition. Unlike plain Kahan summation it stays correct when an added
    term is larger in magnitude than the running sum.
    """

    __slots__ = ("sum", "carry")

    def __init__(self, start: float = 0.0):
        self.sum = float(start)
        self.carry = 0.0

    def add(self, value: float) -> None:
        total = self.sum + value
        if abs(self.sum) >= abs(value):
            self.carry += (self.sum - total) + value
        else:
            self.carry += (value - total) + self.sum
        self.sum = total

    def __iadd__(self, value: float) -> "CompensatedSum":
        self.add(value)
        return self

    @property
    def value(self) -> float:
        return self.sum + self.carry

    def __float__(self) -> float:
        return self.value


def compensated_sum(values: Iterable[float]) -> float:
    """Neumaier-compensated sum of an iterable of floats."""
    acc = CompensatedSum()
    for v in values:
        acc.add(v)
    return acc.value


def pairwise_sum(values: Sequence[Number]) -> Number:
    """Pairwise (cascade) summation; exact inputs stay exact."""
    n = len(values)
    if n == 0:
        return 0.0
    if n <= 8:
        total = values[0]
        for v in values[1:]:
            total = total + v
        return total
    mid = n // 2
    return pairwise_sum(values[:mid]) + pairwise_sum(values[mid:])


class PairwiseVectorSum:
    """Streaming pairwise summation of equal-length numpy vectors.

    Partial sums are kept per level like a binary counter: two partials
    covering the same number of terms are merged as soon as both exist, so
    the additions form a balanced tree over the stream and at most
    log2(count) + 1 vectors are held at a time.
    """

    def __init__(self, size: int):
        self.size = size
        self.count = 0
        self._levels: List[Tuple[int, np.ndarray]] = []

    def add(self, start: int, terms: np.ndarray) -> None:
        """Add `terms` at offsets start..start + len(terms) - 1; the rest of the vector is zero."""
        vec = np.zeros(self.size)
        vec[start : start + terms.size] = terms
        self.count += 1
        weight = 1
        while self._levels and self._levels[-1][0] == weight:
            _, other = self._levels.pop()
            vec = other + vec
            weight *= 2
        self._levels.append((weight, vec))

    @property
    def value(self) -> np.ndarray:
        if not self._levels:
            return np.zeros(self.size)
        # smallest partials first
        return pairwise_sum([vec for _, vec in reversed(self._levels)])


def format_float(x: float) -> str:
    """Shortest decimal string that round-trips the binary value."""
    return repr(float(x))


def format_exact(q: Fraction) -> str:
    """Render a rational as `num/den`, or as a bare integer when den == 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_exact(text: str) -> Fraction:
    """Parse the `num/den` or integer form written by format_exact."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    return Fraction(text)


def format_value(value: Number, precision: int | None = None) -> str:
    """Format a series value for CSV output."""
    if isinstance(value, Fraction):
        return format_exact(value)
    if isinstance(value, int):
        return str(value)
    if precision is not None:
        return f"{float(value):.{precision}g}"
    return format_float(value)
