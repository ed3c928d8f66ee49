"""Partitions, symmetric functions and their finite-variable oracle."""

from .oracle import Poly, oracle_expand
from .partitions import (
    Composition,
    Partition,
    compositions,
    enumerate_partitions,
    partitions_in_box,
)
from .symfunc import (
    BASES,
    DEFAULT_DEGREE_CAP,
    DegreeCapError,
    SymFunc,
    convert,
    current_degree_cap,
    degree_cap,
    multiply,
    multiply_p,
    pieri_targets,
)

__all__ = [
    "BASES",
    "Composition",
    "DEFAULT_DEGREE_CAP",
    "DegreeCapError",
    "Partition",
    "Poly",
    "SymFunc",
    "compositions",
    "convert",
    "current_degree_cap",
    "degree_cap",
    "enumerate_partitions",
    "multiply",
    "multiply_p",
    "oracle_expand",
    "partitions_in_box",
    "pieri_targets",
]
