"""
Partition data model and ensemble specifications.
"""
import math
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from supernorm.core.errors import InvalidArgumentError

Multiplicities = Tuple[Tuple[int, int], ...]


class Restriction(str, Enum):
    """Which partitions an ensemble admits."""
    ALL = "all"
    NO_ONES = "no_ones"
    DISTINCT = "distinct"

    @property
    def min_part(self) -> int:
        return 2 if self is Restriction.NO_ONES else 1

    @property
    def max_multiplicity(self) -> float:
        return 1 if self is Restriction.DISTINCT else math.inf

    def admits(self, partition: "Partition") -> bool:
        if self is Restriction.NO_ONES:
            return partition.multiplicity(1) == 0
        if self is Restriction.DISTINCT:
            return all(m == 1 for _, m in partition.multiplicities)
        return True


class Ensemble(str, Enum):
    """Partition ensembles indexed by n."""
    SIZE = "size"
    PERIMETER = "perimeter"
    MAX_PART = "max_part"

    @property
    def empty_slot(self) -> int | None:
        """Index of the individual ensemble holding the empty partition, if any."""
        return None if self is Ensemble.PERIMETER else 0


class Mode(str, Enum):
    INDIVIDUAL = "individual"
    CUMULATIVE = "cumulative"


class Weight(str, Enum):
    """Multiplicative statistic weighting each partition."""
    NORM = "norm"
    SUPERNORM = "supernorm"


@dataclass(frozen=True)
class Partition:
    """A finite multiset of positive parts in canonical multiplicity form.

    `multiplicities` holds (part, multiplicity) pairs with strictly decreasing
    parts and positive multiplicities; the empty tuple is the empty partition.
    """

    multiplicities: Multiplicities = ()

    def __post_init__(self) -> None:
        previous = math.inf
        for part, mult in self.multiplicities:
            if part < 1:
                raise InvalidArgumentError(f"parts must be positive, got {part}")
            if mult < 1:
                raise InvalidArgumentError(f"multiplicity of {part} must be >= 1, got {mult}")
            if part >= previous:
                raise InvalidArgumentError("multiplicity pairs must have strictly decreasing parts")
            previous = part

    @classmethod
    def _trusted(cls, multiplicities: Multiplicities) -> "Partition":
        """Build without validation; enumerators guarantee the canonical form."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "multiplicities", multiplicities)
        return obj

    @classmethod
    def empty(cls) -> "Partition":
        return _EMPTY

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts in any order."""
        counts = Counter(parts)
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @classmethod
    def from_multiplicities(cls, mapping: Mapping[int, int]) -> "Partition":
        """Build from a part -> multiplicity map; zero multiplicities are dropped."""
        return cls(tuple(sorted(((j, m) for j, m in mapping.items() if m != 0), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the bracket format "[3,2,1,1]"; "[]" is the empty partition."""
        stripped = text.strip()
        if not re.fullmatch(r"\[\s*(\d+\s*(,\s*\d+\s*)*)?\]", stripped):
            raise InvalidArgumentError(f"malformed partition literal {text!r}")
        body = stripped[1:-1].strip()
        if not body:
            return _EMPTY
        parts = [int(tok) for tok in body.split(",")]
        if any(p == 0 for p in parts):
            raise InvalidArgumentError(f"zero part in {text!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidArgumentError(f"parts must be nonincreasing in {text!r}")
        return cls.from_parts(parts)

    @property
    def parts(self) -> Tuple[int, ...]:
        """Part-notation view, nonincreasing."""
        return tuple(j for j, m in self.multiplicities for _ in range(m))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.multiplicities)

    def multiplicity(self, part: int) -> int:
        for j, m in self.multiplicities:
            if j == part:
                return m
        return 0

    def is_empty(self) -> bool:
        return not self.multiplicities

    def union(self, other: "Partition") -> "Partition":
        """Multiset union: multiplicities add."""
        merged = Counter(self.as_dict())
        merged.update(other.as_dict())
        return Partition.from_multiplicities(merged)

    def add_ones(self, k: int) -> "Partition":
        if k < 0:
            raise InvalidArgumentError(f"cannot add {k} ones")
        if k == 0:
            return self
        return self.union(Partition(((1, k),)))

    def without_ones(self) -> "Partition":
        return Partition._trusted(tuple((j, m) for j, m in self.multiplicities if j != 1))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return sum(m for _, m in self.multiplicities)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


_EMPTY = Partition()


class EnsembleSpec(BaseModel):
    """Which statistic to evaluate: ensemble, weight, mode, restriction and exponent.

    A partition contributes weight(lambda) ** (-beta).
    """

    model_config = ConfigDict(frozen=True)

    ensemble: Ensemble = Field(..., description="Ensemble indexed by n")
    weight: Weight = Field(..., description="Norm or supernorm")
    mode: Mode = Field(default=Mode.INDIVIDUAL, description="Individual or cumulative")
    restriction: Restriction = Field(default=Restriction.ALL, description="Admitted partitions")
    beta: float = Field(default=1.0, description="Exponent of the reciprocal weight")

    @field_validator("beta")
    @classmethod
    def validate_beta(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("beta must be finite")
        return float(v)

    @property
    def is_divergent(self) -> bool:
        """Max-part sums that do not converge.

        With the norm and no restriction every 1^k has weight 1 whatever beta is;
        any infinite max-part ensemble diverges once beta <= 0.
        """
        if self.ensemble is not Ensemble.MAX_PART:
            return False
        if self.restriction is Restriction.DISTINCT:
            return False
        if self.weight is Weight.NORM and self.restriction is Restriction.ALL:
            return True
        return self.beta <= 0

    @property
    def beta_is_integer(self) -> bool:
        return float(self.beta).is_integer()

    def with_mode(self, mode: Mode) -> "EnsembleSpec":
        return self.model_copy(update={"mode": mode})

    @property
    def label(self) -> str:
        beta = int(self.beta) if self.beta_is_integer else self.beta
        return (
            f"{self.ensemble.value}/{self.weight.value}/{self.mode.value}/"
            f"{self.restriction.value}/beta={beta}"
        )
