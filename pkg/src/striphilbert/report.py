"""Machine-readable check results: one row per verified identity or bound."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable, Union

Number = Union[int, float]

CSV_HEADER = "check_name,computed,reference,residual,tolerance,passed"


def format_number(value: Number) -> str:
    """Integers verbatim; floats with 17 significant digits and '.' decimal."""
    if isinstance(value, bool):
        raise TypeError("booleans are not report numbers")
    if isinstance(value, int):
        return str(value)
    return format(float(value), ".17g")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one named check.

    ``passed`` always equals ``residual <= tolerance``; construct through
    :meth:`from_values` to get that for free.
    """

    check_name: str
    computed: Number
    reference: Number
    residual: float
    tolerance: float
    passed: bool

    def __post_init__(self) -> None:
        if "," in self.check_name or "\n" in self.check_name:
            raise ValueError(f"check name must be CSV-clean: {self.check_name!r}")
        if not self.residual >= 0.0:
            raise ValueError(f"residual must be >= 0 (got {self.residual!r})")
        if self.passed != (self.residual <= self.tolerance):
            raise ValueError(
                f"inconsistent report: passed={self.passed} but residual="
                f"{self.residual!r}, tolerance={self.tolerance!r}"
            )

    @classmethod
    def from_values(
        cls,
        check_name: str,
        computed: Number,
        reference: Number,
        tolerance: float,
        residual: float | None = None,
    ) -> "VerificationReport":
        if residual is None:
            residual = abs(float(computed) - float(reference))
        return cls(
            check_name=check_name,
            computed=computed,
            reference=reference,
            residual=float(residual),
            tolerance=float(tolerance),
            passed=residual <= tolerance,
        )

    def csv_row(self) -> str:
        return ",".join(
            (
                self.check_name,
                format_number(self.computed),
                format_number(self.reference),
                format_number(self.residual),
                format_number(self.tolerance),
                "true" if self.passed else "false",
            )
        )

    def json_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "computed": self.computed,
            "reference": self.reference,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def write_csv(reports: Iterable[VerificationReport], stream: IO[str]) -> None:
    stream.write(CSV_HEADER + "\n")
    for report in reports:
        stream.write(report.csv_row() + "\n")


def write_json(reports: Iterable[VerificationReport], stream: IO[str]) -> None:
    json.dump([r.json_dict() for r in reports], stream, indent=2)
    stream.write("\n")
