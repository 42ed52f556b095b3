"""
Additive and multiplicative partition statistics.
"""
import math
from enum import Enum

from supernorm.core.errors import InvalidArgumentError, OutOfRangeError
from supernorm.partitions.model import Ensemble, Partition, Weight
from supernorm.primes.sieve import PrimeTable, nth_prime, nth_prime_upper_estimate


class AdditiveStat(str, Enum):
    SIZE = "size"
    LENGTH = "length"
    LARGEST_PART = "largest_part"


def additive_stat(partition: Partition, which: AdditiveStat) -> int:
    """size = sum j m_j, length = sum m_j, largest_part = max part (0 for the empty partition)."""
    which = AdditiveStat(which)
    if which is AdditiveStat.SIZE:
        return sum(j * m for j, m in partition.multiplicities)
    if which is AdditiveStat.LENGTH:
        return sum(m for _, m in partition.multiplicities)
    return partition.multiplicities[0][0] if partition.multiplicities else 0


def size(partition: Partition) -> int:
    return additive_stat(partition, AdditiveStat.SIZE)


def length(partition: Partition) -> int:
    return additive_stat(partition, AdditiveStat.LENGTH)


def largest_part(partition: Partition) -> int:
    return additive_stat(partition, AdditiveStat.LARGEST_PART)


def perimeter(partition: Partition) -> int:
    """lambda_1 + r - 1, the largest hook length; per(empty) = 1."""
    if partition.is_empty():
        return 1
    return largest_part(partition) + length(partition) - 1


def ensemble_index(partition: Partition, ensemble: Ensemble) -> int:
    """The n for which the partition belongs to ensemble(n)."""
    if ensemble is Ensemble.SIZE:
        return size(partition)
    if ensemble is Ensemble.PERIMETER:
        return perimeter(partition)
    return largest_part(partition)


def norm(partition: Partition) -> int:
    """Product of the parts; N(empty) = 1."""
    return math.prod(j**m for j, m in partition.multiplicities)


def supernorm(table: PrimeTable, partition: Partition) -> int:
    """Product of p_part over the parts; N^(empty) = 1."""
    top = largest_part(partition)
    if top > table.count:
        raise OutOfRangeError(
            f"part {top} needs p_{top}, beyond the sieve's {table.count} primes",
            required_limit=nth_prime_upper_estimate(top),
        )
    primes = table.primes
    return math.prod(int(primes[j - 1]) ** m for j, m in partition.multiplicities)


def weight_value(table: PrimeTable | None, partition: Partition, weight: Weight) -> int:
    """N or N^, as an arbitrary-precision integer."""
    if weight is Weight.NORM:
        return norm(partition)
    if table is None:
        raise InvalidArgumentError("the supernorm needs a prime table")
    return supernorm(table, partition)


def prime_indexing(table: PrimeTable, n: int) -> int:
    """pdx(n) = p_n with pdx(0) = 1."""
    return nth_prime(table, n)


def pad_to_perimeter(partition: Partition) -> Partition:
    """Append |lambda| - per(lambda) ones, sending size-n partitions into perimeter n.

    The map keeps the norm and is injective on partitions of a fixed size.
    """
    if partition.is_empty():
        raise InvalidArgumentError("the empty partition has no perimeter-padded image")
    return partition.add_ones(size(partition) - perimeter(partition))
