# Partitions module
from supernorm.partitions.counting import INFINITE, Cardinality, ensemble_count, partition_count
from supernorm.partitions.enumerate import (
    enumerate_by_largest_part,
    enumerate_by_perimeter,
    enumerate_by_size,
    enumerate_by_supernorm_bound,
)
from supernorm.partitions.model import (
    Ensemble,
    EnsembleSpec,
    Mode,
    Partition,
    Restriction,
    Weight,
)
from supernorm.partitions.statistics import (
    AdditiveStat,
    additive_stat,
    norm,
    pad_to_perimeter,
    perimeter,
    supernorm,
)

__all__ = [
    "INFINITE",
    "AdditiveStat",
    "Cardinality",
    "Ensemble",
    "EnsembleSpec",
    "Mode",
    "Partition",
    "Restriction",
    "Weight",
    "additive_stat",
    "ensemble_count",
    "enumerate_by_largest_part",
    "enumerate_by_perimeter",
    "enumerate_by_size",
    "enumerate_by_supernorm_bound",
    "norm",
    "pad_to_perimeter",
    "partition_count",
    "perimeter",
    "supernorm",
]
