"""
Exact Collatz dynamics under f and its accelerated form t.

Trajectories run from a start value to the first occurrence of 1 using
Python ints, so there is no upper bound on the start. A run that does not
reach 1 within its step budget raises StepBudgetExceeded rather than
looping forever.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from ..models.domain import MapKind
from ..utils.numtheory import LN2, LN3, ln_big
from .exceptions import EvenStart, InputValidationError, StepBudgetExceeded

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 10_000_000

# ln2/ln3, the completeness upper bound
COMPLETENESS_LIMIT = LN2 / LN3


def step_f(x: int) -> int:
    """One step of the Collatz function."""
    if x < 1:
        raise InputValidationError(f"step_f needs x >= 1, got {x}")
    return 3 * x + 1 if x & 1 else x >> 1


def step_t(x: int) -> int:
    """One step of the accelerated Collatz function."""
    if x < 1:
        raise InputValidationError(f"step_t needs x >= 1, got {x}")
    return (3 * x + 1) >> 1 if x & 1 else x >> 1


_STEPS: Dict[MapKind, Callable[[int], int]] = {MapKind.F: step_f, MapKind.T: step_t}


@dataclass(frozen=True)
class Trajectory:
    """A finite orbit from start to the first 1."""

    start: int
    terms: Tuple[int, ...]
    map_kind: MapKind

    @property
    def steps(self) -> int:
        return len(self.terms) - 1

    def head_tail(self, size: int = 5) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """First and last `size` terms, for elided printing."""
        if len(self.terms) <= 2 * size:
            return self.terms, ()
        return self.terms[:size], self.terms[-size:]


@dataclass(frozen=True)
class GapSequence:
    """Even-run lengths between consecutive odd terms, read from m toward 1."""

    gaps: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.gaps) - 1

    @property
    def total(self) -> int:
        return sum(self.gaps)


@dataclass(frozen=True)
class ParityCounts:
    """Even and odd term counts of an f-trajectory plus the final gap."""

    m: int
    e: int
    o: int
    g1: int


@dataclass(frozen=True)
class SequenceStats:
    """Statistics of one trajectory.

    e, o and g1 are counted under f (m counted, the final 1 not counted);
    sigma_inf is the number of t-steps to the first 1.
    """

    m: int
    e: int
    o: int
    g1: int
    sigma_inf: int

    @property
    def completeness(self) -> Fraction:
        return Fraction(self.o, self.e)

    @property
    def rho(self) -> Fraction:
        return Fraction(self.o, self.sigma_inf)

    @property
    def gamma(self) -> float:
        return self.e / ln_big(self.m)

    @property
    def res(self) -> float:
        return 2**self.e / (self.m * 3**self.o)

    @property
    def res_exact(self) -> Fraction:
        return Fraction(2**self.e, self.m * 3**self.o)


def run_trajectory(
    m: int, map_kind: MapKind = MapKind.F, max_steps: int = DEFAULT_MAX_STEPS
) -> Trajectory:
    """Iterate the chosen map from m until the first 1 after the start."""
    if m < 1:
        raise InputValidationError(f"trajectory start must be >= 1, got {m}")
    step = _STEPS[map_kind]
    terms = [m]
    x = m
    while True:
        if len(terms) > max_steps:
            raise StepBudgetExceeded(m, max_steps, x)
        x = step(x)
        terms.append(x)
        if x == 1:
            break
    return Trajectory(start=m, terms=tuple(terms), map_kind=map_kind)


def parity_counts(m: int, max_steps: int = DEFAULT_MAX_STEPS) -> ParityCounts:
    """Count even and odd f-terms of m without storing the orbit.

    g1 is the number of even terms after the last odd term, or all of them
    when there is no odd term.
    """
    if m < 1:
        raise InputValidationError(f"trajectory start must be >= 1, got {m}")
    x = m
    e = o = run = steps = 0
    while True:
        if steps >= max_steps:
            raise StepBudgetExceeded(m, max_steps, x)
        if x & 1:
            o += 1
            run = 0
            x = 3 * x + 1
        else:
            e += 1
            run += 1
            x >>= 1
        steps += 1
        if x == 1:
            break
    return ParityCounts(m=m, e=e, o=o, g1=run)


def total_stopping_time_t(m: int, max_steps: int = DEFAULT_MAX_STEPS) -> int:
    """Number of t-steps from m to the first 1."""
    if m < 1:
        raise InputValidationError(f"trajectory start must be >= 1, got {m}")
    x = m
    steps = 0
    while True:
        if steps >= max_steps:
            raise StepBudgetExceeded(m, max_steps, x)
        x = (3 * x + 1) >> 1 if x & 1 else x >> 1
        steps += 1
        if x == 1:
            return steps


def gap_sequence(traj: Trajectory) -> GapSequence:
    """Gaps between consecutive odd terms of an f-trajectory with odd start."""
    if traj.map_kind is not MapKind.F:
        raise InputValidationError("gap sequences are defined for f-trajectories")
    if not traj.start & 1:
        raise EvenStart(f"gap sequence needs an odd start, got {traj.start}")
    gaps: List[int] = []
    for x in traj.terms[:-1]:
        if x & 1:
            gaps.append(0)
        else:
            gaps[-1] += 1
    return GapSequence(gaps=tuple(gaps))


def stats(m: int, max_steps: int = DEFAULT_MAX_STEPS) -> SequenceStats:
    """Full statistics of m >= 2."""
    if m < 2:
        raise InputValidationError(f"statistics need m >= 2, got {m}")
    counts = parity_counts(m, max_steps)
    sigma = total_stopping_time_t(m, max_steps)
    return SequenceStats(m=m, e=counts.e, o=counts.o, g1=counts.g1, sigma_inf=sigma)


def gamma_bound_holds(s: SequenceStats, rel_tol: float = 1e-12) -> bool:
    """Check gamma >= 1/(ln2 - rho*ln3) whenever rho < ln2/ln3."""
    if s.rho >= COMPLETENESS_LIMIT:
        return True
    bound = 1 / (LN2 - float(s.rho) * LN3)
    return s.gamma >= bound * (1 - rel_tol)
