"""
Representation algebra of inverse iterates of 1.

An exponent vector a_0 < a_1 < ... < a_{k+1} represents

    m = (2^{a_{k+1}} - sum_{i=0..k} 2^{a_i} 3^{k-i}) / 3^{k+1}

and every odd m that reaches 1 has exactly one least-terms vector, read off
its trajectory. This module also covers 3-smooth special representations,
cycle profiles, 4m+1 seed chains and admissible sequences with their affine
maps. All rationals are exact.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from ..models.domain import MapKind
from ..utils.numtheory import v2
from .exceptions import (
    DegenerateDenominator,
    EvenStart,
    InputValidationError,
    NotDivisible,
    NotMonotone,
    NotPositive,
    RepresentationError,
)
from .trajectory import DEFAULT_MAX_STEPS, gap_sequence, parity_counts, run_trajectory

logger = logging.getLogger(__name__)


def _check_increasing(exponents: Sequence[int]) -> None:
    if any(a < 0 for a in exponents):
        raise NotMonotone("exponents must be non-negative", details={"exponents": exponents})
    if any(b <= a for a, b in zip(exponents, exponents[1:])):
        raise NotMonotone(
            "exponents must be strictly increasing", details={"exponents": tuple(exponents)}
        )


@dataclass(frozen=True)
class CrandallRep:
    """Exponent vector (a_0, ..., a_{k+1}) of level k."""

    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.exponents) < 2:
            raise NotMonotone("a representation needs at least two exponents")
        _check_increasing(self.exponents)

    @property
    def k(self) -> int:
        return len(self.exponents) - 2

    @property
    def top(self) -> int:
        return self.exponents[-1]

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.exponents[:-1]


@dataclass(frozen=True)
class SmoothRep:
    """3-smooth special representation sum 3^{k-i} 2^{a_i} with a_0 = 0."""

    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.exponents or self.exponents[0] != 0:
            raise NotMonotone("special representations start at a_0 = 0")
        _check_increasing(self.exponents)

    @property
    def k(self) -> int:
        return len(self.exponents) - 1

    @property
    def value(self) -> int:
        k = self.k
        return sum(3 ** (k - i) << a for i, a in enumerate(self.exponents))


@dataclass(frozen=True)
class CycleCandidate:
    """A cycle profile and the rational solution it forces."""

    exponents: Tuple[int, ...]
    q_star: Fraction

    @property
    def is_integral(self) -> bool:
        return self.q_star.denominator == 1

    @property
    def is_trivial(self) -> bool:
        return self.q_star == 1

    @property
    def is_nontrivial_cycle(self) -> bool:
        return self.is_integral and self.q_star > 1


class Prop1Witness(NamedTuple):
    """2^a = 3^k x + n with n special of level k-1."""

    a: int
    k: int
    rep: SmoothRep

    @property
    def n(self) -> int:
        return self.rep.value


@dataclass
class CycleSearchReport:
    """Counts from an exhaustive profile search."""

    k_values: Tuple[int, ...]
    cap: int
    profiles: int = 0
    degenerate: int = 0
    trivial: List[Tuple[int, ...]] = field(default_factory=list)
    nontrivial: List[CycleCandidate] = field(default_factory=list)

    @property
    def only_trivial(self) -> bool:
        return not self.nontrivial


@dataclass
class CycleBoundReport:
    """Result of the lower-bound check for cycles with k odd terms."""

    k: int
    search_cap: int
    profiles: int
    degenerate: int
    trivial: int
    nontrivial: List[CycleCandidate]

    @property
    def lower_bound(self) -> int:
        return 3 ** (self.k - 1)

    @property
    def holds(self) -> bool:
        return all(c.q_star > self.lower_bound for c in self.nontrivial)


def rep_numerator(rep: CrandallRep) -> int:
    k = rep.k
    return (1 << rep.top) - sum(3 ** (k - i) << a for i, a in enumerate(rep.interior))


def rep_evaluate(rep: CrandallRep) -> int:
    """The natural number an exponent vector represents."""
    numerator = rep_numerator(rep)
    if numerator <= 0:
        raise NotPositive(
            "representation numerator is not positive", details={"exponents": rep.exponents}
        )
    m, remainder = divmod(numerator, 3 ** (rep.k + 1))
    if remainder:
        raise NotDivisible(
            f"numerator is not divisible by 3^{rep.k + 1}",
            details={"exponents": rep.exponents, "remainder": remainder},
        )
    return m


def rep_from_trajectory(m: int, max_steps: int = DEFAULT_MAX_STEPS) -> CrandallRep:
    """Least-terms representation of an odd m, from its gap sequence."""
    if not m & 1:
        raise EvenStart(f"least-terms representations need an odd m, got {m}")
    gaps = gap_sequence(run_trajectory(m, MapKind.F, max_steps)).gaps
    return CrandallRep((0, *itertools.accumulate(gaps)))


def rep_expand(rep: CrandallRep) -> CrandallRep:
    """Same value one level up: append a_{k+1} + 2."""
    return CrandallRep(rep.exponents + (rep.top + 2,))


def rep_contract(rep: CrandallRep) -> Optional[CrandallRep]:
    """Undo one expansion, or None when the vector does not end in (a, a + 2)."""
    if rep.k >= 1 and rep.exponents[-1] - rep.exponents[-2] == 2:
        return CrandallRep(rep.exponents[:-1])
    return None


def canonical_rep(rep: CrandallRep) -> CrandallRep:
    """Contract until no trailing (a, a + 2) remains."""
    while True:
        contracted = rep_contract(rep)
        if contracted is None:
            return rep
        rep = contracted


def smooth_special_rep(n: int, k: int) -> Optional[SmoothRep]:
    """The level-k special representation of n, if any.

    Peel 3^k, then each remaining lowest term is fixed by the 2-adic
    valuation of what is left.
    """
    if n < 1 or k < 0:
        raise InputValidationError(f"smooth representation needs n >= 1, k >= 0 (n={n}, k={k})")
    remainder = n - 3**k
    exponents = [0]
    for i in range(1, k + 1):
        if remainder <= 0:
            return None
        a = v2(remainder)
        if a <= exponents[-1]:
            return None
        exponents.append(a)
        remainder -= 3 ** (k - i) << a
    if remainder != 0:
        return None
    return SmoothRep(tuple(exponents))


def enumerate_smooth_special(limit: int, k: int) -> Iterator[SmoothRep]:
    """Every level-k special representation with value <= limit, by exponent search."""

    def extend(i: int, partial: int, exps: List[int]) -> Iterator[SmoothRep]:
        if i > k:
            yield SmoothRep(tuple(exps))
            return
        a = exps[-1] + 1
        while partial + (3 ** (k - i) << a) <= limit:
            exps.append(a)
            yield from extend(i + 1, partial + (3 ** (k - i) << a), exps)
            exps.pop()
            a += 1

    if 3**k <= limit:
        yield from extend(1, 3**k, [0])


def prop1_witness(x: int, max_steps: int = DEFAULT_MAX_STEPS) -> Prop1Witness:
    """Split 2^{e(x)} - 3^{o(x)} x into its special representation."""
    rep = rep_from_trajectory(x, max_steps)
    a, k = rep.top, rep.k + 1
    n = (1 << a) - 3**k * x
    special = smooth_special_rep(n, k - 1)
    if special is None or special.exponents != rep.interior:
        raise RepresentationError(
            f"special representation of {n} disagrees with the trajectory of {x}",
            details={"interior": rep.interior, "special": special},
        )
    return Prop1Witness(a=a, k=k, rep=special)


def cycle_solve(exponents: Sequence[int]) -> CycleCandidate:
    """Solve q = (sum 2^{a_i} 3^{k-i}) / (2^{a_{k+1}} - 3^{k+1}) exactly."""
    exps = tuple(exponents)
    if len(exps) < 2 or exps[0] != 0:
        raise NotMonotone("cycle profiles start at a_0 = 0 and have two or more exponents")
    _check_increasing(exps)
    k = len(exps) - 2
    numerator = sum(3 ** (k - i) << a for i, a in enumerate(exps[:-1]))
    denominator = (1 << exps[-1]) - 3 ** (k + 1)
    if denominator <= 0:
        q_star = Fraction(numerator, denominator) if denominator else None
        raise DegenerateDenominator(
            f"2^{exps[-1]} <= 3^{k + 1}",
            q_star=q_star,
            details={"exponents": exps, "q_star": q_star},
        )
    return CycleCandidate(exponents=exps, q_star=Fraction(numerator, denominator))


def _profiles(k: int, cap: int) -> Iterator[Tuple[int, ...]]:
    for tail in itertools.combinations(range(1, cap + 1), k + 1):
        yield (0, *tail)


def _search(k: int, cap: int, report: CycleSearchReport) -> None:
    for exps in _profiles(k, cap):
        report.profiles += 1
        numerator = sum(3 ** (k - i) << a for i, a in enumerate(exps[:-1]))
        denominator = (1 << exps[-1]) - 3 ** (k + 1)
        if denominator <= 0:
            report.degenerate += 1
            continue
        if numerator % denominator:
            continue
        candidate = CycleCandidate(exps, Fraction(numerator, denominator))
        if candidate.is_trivial:
            report.trivial.append(exps)
        else:
            logger.warning(f"Integral cycle solution {candidate.q_star} at {exps}")
            report.nontrivial.append(candidate)


def cycle_search(k_max: int, cap: int) -> CycleSearchReport:
    """Every profile with level k <= k_max and top exponent <= cap."""
    report = CycleSearchReport(k_values=tuple(range(k_max + 1)), cap=cap)
    for k in report.k_values:
        _search(k, cap, report)
    logger.debug(
        f"Searched {report.profiles} cycle profiles, {len(report.trivial)} trivial solutions"
    )
    return report


def cycle_lower_bound_check(k: int, search_cap: int) -> CycleBoundReport:
    """Cycles with k odd terms: any integral q* > 1 must exceed 3^(k-1)."""
    if k < 1:
        raise InputValidationError(f"cycle bound check needs k >= 1, got {k}")
    report = CycleSearchReport(k_values=(k - 1,), cap=search_cap)
    _search(k - 1, search_cap, report)
    return CycleBoundReport(
        k=k,
        search_cap=search_cap,
        profiles=report.profiles,
        degenerate=report.degenerate,
        trivial=len(report.trivial),
        nontrivial=report.nontrivial,
    )


def trivial_cycle_profile(k: int) -> Tuple[int, ...]:
    """(0, 2, 4, ..., 2(k+1)), the expansions of the trivial cycle."""
    return tuple(range(0, 2 * (k + 2), 2))


def seed_chain(m: int, count: int) -> List[int]:
    """m, 4m+1, 4(4m+1)+1, ... of the given length."""
    chain = []
    x = m
    for _ in range(count):
        chain.append(x)
        x = 4 * x + 1
    return chain


def seed_chain_steps(m: int, count: int, max_steps: int = DEFAULT_MAX_STEPS) -> List[int]:
    """Total f-steps to 1 along a seed chain; consecutive entries differ by 2."""
    steps = []
    for x in seed_chain(m, count):
        counts = parity_counts(x, max_steps)
        steps.append(counts.e + counts.o)
    return steps


@dataclass(frozen=True)
class WirschingSeq:
    """Admissible sequence (alpha_0, ..., alpha_mu)."""

    alphas: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.alphas or any(a < 0 for a in self.alphas):
            raise InputValidationError(f"invalid admissible sequence {self.alphas}")

    @property
    def length(self) -> int:
        return len(self.alphas) - 1

    @property
    def absolute(self) -> int:
        return sum(self.alphas)

    @property
    def norm(self) -> int:
        return self.absolute + self.length

    @property
    def is_small(self) -> bool:
        # alpha_i < 2 * 3^(i-1), scaled by 3 to stay in integers
        return all(3 * a < 2 * 3**i for i, a in enumerate(self.alphas))


def wirsching_encode(m: int, max_steps: int = DEFAULT_MAX_STEPS) -> WirschingSeq:
    """Halving runs of the t-orbit of m: before the first odd step, then after each."""
    if not m & 1:
        raise EvenStart(f"admissible sequences are defined for odd m, got {m}")
    traj = run_trajectory(m, MapKind.T, max_steps)
    alphas = [0]
    for x in traj.terms[:-1]:
        if x & 1:
            alphas.append(0)
        else:
            alphas[-1] += 1
    return WirschingSeq(tuple(alphas))


def wirsching_eval(s: WirschingSeq, q: Fraction) -> Fraction:
    """zeta_s(q) = h(s) q - l(s)."""
    mu = s.length
    h = Fraction(1 << s.norm, 3**mu)
    partial = 0
    tail = Fraction(0)
    for k in range(mu):
        partial += s.alphas[k]
        tail += Fraction(1 << (k + partial), 3 ** (k + 1))
    return h * Fraction(q) - tail


def wirsching_unwind(s: WirschingSeq, q: Fraction) -> Fraction:
    """zeta_s(q) by composing q -> 2q and q -> (2q - 1)/3 backward from q."""
    value = Fraction(q)
    for i in range(s.length, -1, -1):
        value *= 1 << s.alphas[i]
        if i:
            value = (2 * value - 1) / 3
    return value


def wirsching_concat(s: WirschingSeq, w: WirschingSeq) -> WirschingSeq:
    """s.w, whose map is zeta_s composed with zeta_w."""
    joined = s.alphas[:-1] + (s.alphas[-1] + w.alphas[0],) + w.alphas[1:]
    return WirschingSeq(joined)
