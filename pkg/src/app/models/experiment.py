"""Models for experiment specifications, verification reports and bench rows."""
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field

from src.app.models.graph import GraphFamilyParams

BENCH_COLUMNS = (
    "family",
    "n",
    "seed",
    "c",
    "max_degree",
    "bp_rounds",
    "mm_rounds",
    "approx_rounds",
    "bp_mm_size",
    "approx_size",
    "mcm_size",
    "ratio",
    "residual",
)


class ExitCode(int, Enum):
    """Process exit codes of the command-line harness."""

    OK = 0
    BOUND_VIOLATED = 1
    USAGE_ERROR = 2
    ORACLE_SKIPPED = 3


class CheckStatus(str, Enum):
    PASSED = "pass"
    FAILED = "fail"
    SKIPPED = "skipped"


class CheckResult(BaseModel):
    """One bound checked by ``verify``."""

    name: str
    status: CheckStatus
    measured: float | None = None
    bound: float | None = None
    detail: str | None = None


class VerifyReport(BaseModel):
    """Bundle of bound checks on one graph."""

    graph: dict[str, Any] = Field(default_factory=dict, description="Graph summary (n, edges, source)")
    c: int | None = None
    c_lower_bound: int | None = Field(
        default=None, description="Sampled lower bound on the independence when the exact oracle is skipped"
    )
    checks: list[CheckResult] = Field(default_factory=list)

    def add(self, name: str, holds: bool, measured=None, bound=None, detail=None) -> CheckResult:
        result = CheckResult(
            name=name,
            status=CheckStatus.PASSED if holds else CheckStatus.FAILED,
            measured=measured,
            bound=bound,
            detail=detail,
        )
        self.checks.append(result)
        return result

    def skip(self, name: str, detail: str) -> CheckResult:
        result = CheckResult(name=name, status=CheckStatus.SKIPPED, detail=detail)
        self.checks.append(result)
        return result

    @property
    def failed(self) -> list[str]:
        return [check.name for check in self.checks if check.status == CheckStatus.FAILED]

    @property
    def exit_code(self) -> ExitCode:
        if self.failed:
            return ExitCode.BOUND_VIOLATED
        if any(check.status == CheckStatus.SKIPPED for check in self.checks):
            return ExitCode.ORACLE_SKIPPED
        return ExitCode.OK


class ExperimentSpec(BaseModel):
    """Everything needed to reproduce one experiment instance."""

    command: str = Field(description="One of gen, bp, match, approx, selfstab, verify, bench")
    graph: GraphFamilyParams
    epsilon: float | None = Field(default=None, gt=0)
    c: int | None = Field(default=None, ge=1, description="Independence bound override")
    k: int | None = Field(default=None, ge=1, description="Iteration count override")
    oracle: bool = Field(default=True, description="Compute exact MCM when the instance is small enough")


class BenchRow(BaseModel):
    """One instance of a benchmark sweep; ``None`` cells were not computed."""

    family: str
    n: int
    seed: int
    c: int
    max_degree: int
    bp_rounds: int
    mm_rounds: int
    approx_rounds: int
    bp_mm_size: int
    approx_size: int
    mcm_size: int | None = None
    ratio: float | None = None
    residual: list[float] = Field(default_factory=list)

    @property
    def sort_key(self) -> tuple[str, int, int]:
        return (self.family, self.n, self.seed)

    def to_csv_cells(self) -> list[str]:
        cells = []
        for column in BENCH_COLUMNS:
            value = getattr(self, column)
            if value is None:
                cells.append("")
            elif column == "residual":
                cells.append(";".join(f"{x:.6f}" for x in value))
            elif isinstance(value, float):
                cells.append(f"{value:.6f}")
            else:
                cells.append(str(value))
        return cells
