"""Rises, levels and drops in compositions with restricted parts."""

from ._compstat import (
    DomainError,
    ParseError,
    Series,
    catalog_ids,
    class_gf,
    cli,
    counts,
    enumerate,
    expand_rational,
    joint_gf,
    materialize,
    moments,
    oracle_joint,
    parse_set,
    run_check,
    totals,
    verify_entry,
    via_system,
)

CLASSES = ("compositions", "palindromes", "carlitz", "carlitz-palindromes", "partitions")
STATISTICS = ("rises", "levels", "drops", "parts")

__all__ = [
    "CLASSES",
    "STATISTICS",
    "DomainError",
    "ParseError",
    "Series",
    "catalog_ids",
    "class_gf",
    "cli",
    "counts",
    "enumerate",
    "expand_rational",
    "joint_gf",
    "materialize",
    "moments",
    "oracle_joint",
    "parse_set",
    "run_check",
    "totals",
    "verify_entry",
    "via_system",
]
