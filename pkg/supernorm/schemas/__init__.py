"""
Pydantic models for validated command-line runs.
"""
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from supernorm.core.config import limits
from supernorm.core.errors import ResourceLimitError, UnsupportedError
from supernorm.partitions.model import Ensemble, EnsembleSpec, Mode, Restriction, Weight


# Enums
class Command(str, Enum):
    STAT = "stat"
    FIGURE = "figure"
    VERIFY = "verify"
    BOUNDS = "bounds"
    PRIMES = "primes"


class RunBackend(str, Enum):
    EXACT = "exact"
    FLOAT = "float"
    EXACT_ORACLE = "exact-oracle"


DEFAULT_STAT_NMAX = 20
DEFAULT_PRIMES_NMAX = 100


class RunConfig(BaseModel):
    """One CLI invocation. Incompatible combinations are rejected here, before any work."""

    model_config = ConfigDict(frozen=True)

    command: Command = Field(..., description="Subcommand")
    ensemble: Ensemble = Field(default=Ensemble.SIZE, description="Ensemble indexed by n")
    weight: Weight = Field(default=Weight.SUPERNORM, description="Norm or supernorm")
    mode: Mode = Field(default=Mode.INDIVIDUAL, description="Individual or cumulative")
    restriction: Restriction = Field(default=Restriction.ALL, description="Admitted partitions")
    beta: float = Field(default=1.0, description="Exponent of the reciprocal weight")
    nmax: Optional[int] = Field(None, description="Largest n; defaults per command")
    backend: RunBackend = Field(default=RunBackend.EXACT, description="Evaluator")
    sieve_limit: Optional[int] = Field(None, description="Sieve limit; defaults per command")
    precision: int = Field(default=12, description="Significant digits in text summaries")
    figure: Optional[str] = Field(None, description="Figure id for `figure`")
    out: Optional[Path] = Field(None, description="Output path; standard output when unset")
    allow_large: bool = Field(default=False, description="Lift the exact and oracle caps")
    write_cache: bool = Field(default=False, description="Store the sieve in SIEVE_CACHE_DIR")

    @field_validator("nmax")
    @classmethod
    def validate_nmax(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 1:
            raise ValueError("nmax must be >= 1")
        return v

    @field_validator("sieve_limit")
    @classmethod
    def validate_sieve_limit(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 2:
            raise ValueError("sieve limit must be >= 2")
        return v

    @field_validator("precision")
    @classmethod
    def validate_precision(cls, v: int) -> int:
        if not 1 <= v <= 17:
            raise ValueError("precision must be between 1 and 17")
        return v

    @model_validator(mode="after")
    def validate_combination(self) -> "RunConfig":
        if self.command is Command.STAT:
            self._check_stat()
        return self

    def _check_stat(self) -> None:
        spec = self.spec
        if spec.is_divergent:
            raise UnsupportedError(
                f"{spec.label} diverges; every partition 1^k has the same weight"
            )
        exact = self.backend in (RunBackend.EXACT, RunBackend.EXACT_ORACLE)
        if exact and not spec.beta_is_integer:
            raise UnsupportedError(
                f"beta={self.beta} needs the float backend; exact values require an integer beta"
            )
        if self.backend is RunBackend.EXACT_ORACLE and spec.ensemble is Ensemble.MAX_PART:
            raise UnsupportedError("the oracle cannot enumerate the infinite max-part ensembles")

        cap = self.stat_cap
        if cap is not None and self.resolved_nmax > cap and not self.allow_large:
            raise ResourceLimitError(
                f"{self.backend.value} {spec.ensemble.value} is capped at nmax <= {cap}, "
                f"got {self.resolved_nmax}"
            )

    @property
    def spec(self) -> EnsembleSpec:
        return EnsembleSpec(
            ensemble=self.ensemble,
            weight=self.weight,
            mode=self.mode,
            restriction=self.restriction,
            beta=self.beta,
        )

    @property
    def stat_cap(self) -> Optional[int]:
        caps = {
            (RunBackend.EXACT, Ensemble.SIZE): limits.exact_size_nmax,
            (RunBackend.EXACT, Ensemble.PERIMETER): limits.exact_perimeter_nmax,
            (RunBackend.FLOAT, Ensemble.SIZE): limits.float_size_nmax,
            (RunBackend.FLOAT, Ensemble.PERIMETER): limits.float_perimeter_nmax,
            (RunBackend.EXACT_ORACLE, Ensemble.SIZE): limits.oracle_size_nmax,
            (RunBackend.EXACT_ORACLE, Ensemble.PERIMETER): limits.oracle_perimeter_nmax,
        }
        return caps.get((self.backend, self.ensemble))

    @property
    def resolved_nmax(self) -> int:
        if self.nmax is not None:
            return self.nmax
        if self.command is Command.PRIMES:
            return DEFAULT_PRIMES_NMAX
        return DEFAULT_STAT_NMAX

    @property
    def resolved_sieve_limit(self) -> int:
        if self.sieve_limit is not None:
            return self.sieve_limit
        if self.command is Command.BOUNDS:
            return limits.bounds_sieve_limit
        return limits.default_sieve_limit
