"""
Coefficient series and the transforms between individual and cumulative modes.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from supernorm.core.errors import InvalidArgumentError
from supernorm.core.numeric import CompensatedSum, format_exact, parse_exact
from supernorm.partitions.model import Ensemble, EnsembleSpec, Mode

Value = Union[Fraction, float]


class Backend(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


@dataclass(frozen=True)
class CoeffSeries:
    """values[n] for n = 0..nmax of one statistic.

    Exact series hold canonical Fractions, float series hold Python floats.
    `name` labels derived sequences (products) that have no EnsembleSpec.
    """

    spec: Optional[EnsembleSpec]
    nmax: int
    values: Tuple[Value, ...]
    backend: Backend
    name: Optional[str] = None

    def __post_init__(self) -> None:
        if len(self.values) != self.nmax + 1:
            raise InvalidArgumentError(
                f"series of nmax={self.nmax} needs {self.nmax + 1} values, got {len(self.values)}"
            )

    @property
    def label(self) -> str:
        if self.name is not None:
            return self.name
        return self.spec.label if self.spec is not None else "series"

    def __getitem__(self, n: int) -> Value:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Value]:
        return iter(self.values)

    def as_floats(self) -> List[float]:
        return [float(v) for v in self.values]


def _require_spec(series: CoeffSeries) -> EnsembleSpec:
    if series.spec is None:
        raise InvalidArgumentError(f"series {series.label!r} has no ensemble spec")
    return series.spec


def _empty_base(ensemble: Ensemble) -> int:
    return 1 if ensemble.empty_slot == 0 else 0


def cumulative(series: CoeffSeries) -> CoeffSeries:
    """C[n] = 1 + sum_{m=1}^{n} W[m]; the empty partition is counted exactly once."""
    spec = _require_spec(series)
    if spec.mode is Mode.CUMULATIVE:
        raise InvalidArgumentError(f"{spec.label} is already cumulative")

    out: List[Value]
    if series.backend is Backend.EXACT:
        running = Fraction(1)
        out = [running]
        for w in series.values[1:]:
            running += w
            out.append(running)
    else:
        acc = CompensatedSum(1.0)
        out = [1.0]
        for w in series.values[1:]:
            acc.add(float(w))
            out.append(acc.value)

    return CoeffSeries(
        spec=spec.with_mode(Mode.CUMULATIVE),
        nmax=series.nmax,
        values=tuple(out),
        backend=series.backend,
    )


def difference(series: CoeffSeries) -> CoeffSeries:
    """Forward differences of a cumulative series, restoring the individual base case at 0."""
    spec = _require_spec(series)
    if spec.mode is Mode.INDIVIDUAL:
        raise InvalidArgumentError(f"{spec.label} is not cumulative")

    base: Value = _empty_base(spec.ensemble)
    if series.backend is Backend.EXACT:
        base = Fraction(base)
    else:
        base = float(base)
    vals = series.values
    out = [base] + [vals[n] - vals[n - 1] for n in range(1, series.nmax + 1)]

    return CoeffSeries(
        spec=spec.with_mode(Mode.INDIVIDUAL),
        nmax=series.nmax,
        values=tuple(out),
        backend=series.backend,
    )


def series_product(a: CoeffSeries, b: CoeffSeries, name: Optional[str] = None) -> CoeffSeries:
    """Termwise product, e.g. W_size * W^_size."""
    if a.backend is not b.backend:
        raise InvalidArgumentError("cannot multiply series from different backends")
    nmax = min(a.nmax, b.nmax)
    return CoeffSeries(
        spec=None,
        nmax=nmax,
        values=tuple(a.values[n] * b.values[n] for n in range(nmax + 1)),
        backend=a.backend,
        name=name or f"({a.label})*({b.label})",
    )


def series_to_exact_text(series: CoeffSeries) -> str:
    """One `n;num/den` record per line."""
    if series.backend is not Backend.EXACT:
        raise InvalidArgumentError("only exact series have an exact text form")
    return "".join(f"{n};{format_exact(v)}\n" for n, v in enumerate(series.values))  # type: ignore[arg-type]


def series_from_exact_text(
    text: str, spec: Optional[EnsembleSpec] = None, name: Optional[str] = None
) -> CoeffSeries:
    """Parse the `n;num/den` records written by series_to_exact_text."""
    values: List[Fraction] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            n_text, value_text = line.split(";", 1)
            n = int(n_text)
            value = parse_exact(value_text)
        except ValueError as e:
            raise InvalidArgumentError(f"line {lineno}: malformed record {line!r}") from e
        if n != len(values):
            raise InvalidArgumentError(f"line {lineno}: expected n={len(values)}, got n={n}")
        values.append(value)
    if not values:
        raise InvalidArgumentError("no series records found")
    return CoeffSeries(
        spec=spec,
        nmax=len(values) - 1,
        values=tuple(values),
        backend=Backend.EXACT,
        name=name,
    )


def values_equal(a: Sequence[Value], b: Sequence[Value]) -> Optional[int]:
    """First index where two value sequences differ, or None."""
    for n, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return n
    if len(a) != len(b):
        return min(len(a), len(b))
    return None
