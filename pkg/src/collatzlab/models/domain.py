"""
Domain enums and export records for collatzlab.

The enums are shared by the core modules. The pydantic records are the
schema-stable rows the CLI writes in json and csv formats; big integers are
always carried as decimal strings.
"""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class MapKind(str, Enum):
    """Which map generated a trajectory."""

    F = "f"
    T = "t"


class Branch(str, Enum):
    """Even/odd representation branch."""

    E = "E"
    O = "O"  # noqa: E741

    @property
    def upsilon0(self) -> int:
        return 1 if self is Branch.E else 2


class StatKind(str, Enum):
    """Statistic tracked by a record scan."""

    GAMMA = "gamma"
    COMPLETENESS = "completeness"
    RES = "res"


class CornerFamily(str, Enum):
    """The two corner-case families."""

    EVEN = "even"
    ODD = "odd"


class OutputFormat(str, Enum):
    """CLI output formats."""

    HUMAN = "human"
    JSON = "json"
    CSV = "csv"


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    return str(value)


class ExportRow(BaseModel):
    """Base for rows written in json and csv formats."""

    model_config = ConfigDict(frozen=True)

    @classmethod
    def csv_columns(cls) -> Tuple[str, ...]:
        return tuple(cls.model_fields)

    def csv_row(self) -> List[str]:
        data = self.model_dump(mode="json")
        return [_csv_cell(data[column]) for column in self.csv_columns()]


class SeedRecord(ExportRow):
    """One primitive seed as exported by `seeds`."""

    level: int
    branch: Branch
    c: int
    upsilon: List[int]
    value: str = Field(description="Seed value as a decimal string")
    e: int
    o: int
    expansion_duplicate: bool


class RecordRow(ExportRow):
    """One record of a scan as exported by `scan`."""

    m: str
    stat: StatKind
    value: str = Field(description="Statistic formatted to six decimals")
    o: int
    e: int
    g1: int


class TrajectoryRow(ExportRow):
    """Statistics of one trajectory as exported by `traj`."""

    m: str
    map: MapKind
    steps: Optional[int] = Field(default=None, description="Steps of the chosen map")
    e: int
    o: int
    g1: int
    sigma_inf: int
    completeness: str = Field(description="Exact ratio o/e")
    gamma: Optional[float] = None
    res: Optional[float] = None
    gaps: List[int] = Field(default_factory=list)
    terms: List[str] = Field(
        default_factory=list, description="Trajectory terms, elided to head and tail"
    )


class RepRow(ExportRow):
    """Least-terms representation and the special split of 2^a - 3^k m."""

    m: str
    exponents: List[int]
    k: int
    a: Optional[int] = None
    n: Optional[str] = None
    special: List[int] = Field(default_factory=list)


class CornerRow(ExportRow):
    """One corner-family seed with its statistics."""

    family: CornerFamily
    k: int
    m: str
    e: int
    o: int
    completeness: str
    gamma: float


class ZkRow(ExportRow):
    """Top exponent and member of the all-ones O family."""

    k: int
    z: int
    value: str
    e: int
    o: int


class MixingRow(ExportRow):
    """One family member iterated into the previous level."""

    notation: List[int]
    b0: int
    member: str
    iterate: str
    predicted: Branch
    observed: Branch
    confirmed: bool
    expansion_duplicate: bool


class WirschingRow(ExportRow):
    """Admissible sequence of an orbit and its affine map at 1."""

    m: Optional[str] = None
    alphas: List[int]
    length: int
    absolute: int
    norm: int
    small: bool
    zeta_at_1: str


class C2Row(ExportRow):
    """Gap-parity against residue-family classification."""

    limit: int
    checked: int
    e_count: int
    o_count: int
    agreements: int
    disagreements: List[str] = Field(default_factory=list)


class CycleRow(ExportRow):
    """Summary of an exhaustive cycle-profile search."""

    k_max: int
    cap: int
    profiles: int
    degenerate: int
    trivial: List[str] = Field(default_factory=list)
    nontrivial: List[str] = Field(default_factory=list)


class CandidateRow(ExportRow):
    """One cycle profile and the rational solution it forces."""

    exponents: List[int]
    k: int
    q_star: str = Field(description="Exact solution as a reduced fraction")
    integral: bool
    trivial: bool


class PartialRow(ExportRow):
    """What was reached before a step budget ran out."""

    m: str
    status: str = "step_budget_exceeded"
    max_steps: int
    last_term: str


class SuiteResult(BaseModel):
    """Outcome of one verification suite."""

    name: str
    passed: bool
    checked: int = 0
    failures: List[str] = Field(default_factory=list)
    notes: Dict[str, Any] = Field(default_factory=dict)
    duration_seconds: Optional[float] = None

    @property
    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}, {self.checked - len(self.failures)}/{self.checked}"

    def to_row(self) -> "SuiteRow":
        return SuiteRow(
            suite=self.name,
            passed=self.passed,
            checked=self.checked,
            failed=len(self.failures),
            seconds=self.duration_seconds,
            failures=self.failures,
        )


class SuiteRow(ExportRow):
    """Suite outcome as exported by `verify`; csv leaves out the failure messages."""

    suite: str
    passed: bool
    checked: int
    failed: int
    seconds: Optional[float] = None
    failures: List[str] = Field(default_factory=list)

    @classmethod
    def csv_columns(cls) -> Tuple[str, ...]:
        return ("suite", "passed", "checked", "failed", "seconds")
