"""
Even/odd representation families and their primitive seeds.

A family is fixed by its branch (E or O), the vector (u_1, ..., u_k) with
u_i in 1..2*3^i, and the solved constant c. Its members are indexed by
free parameters b_0, ..., b_{k+1} and have k + 2 odd terms (level n = k + 2),
except for the c = 2 families, whose seeds are expansions of lower-level
values. Setting every b to zero gives the primitive seed.
"""

import itertools
import logging
from dataclasses import dataclass, field, replace
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from ..models.domain import Branch, MapKind
from ..utils.numtheory import dlog2_mod_power_of_three, v2
from .exceptions import (
    DomainViolation,
    InputValidationError,
    NotDivisible,
    NotOdd,
    ResourceCap,
)
from .repcore import CrandallRep, canonical_rep, rep_evaluate, rep_expand, rep_from_trajectory
from .trajectory import DEFAULT_MAX_STEPS, gap_sequence, run_trajectory, step_f

logger = logging.getLogger(__name__)

DEFAULT_LEVEL_CAP = 5


def upsilon_domain(i: int) -> range:
    """Allowed values of u_i."""
    return range(1, 2 * 3**i + 1)


def _check_upsilon(upsilon: Sequence[int]) -> None:
    if not upsilon:
        raise InputValidationError("the upsilon vector needs k >= 1 entries")
    for i, u in enumerate(upsilon, start=1):
        if u not in upsilon_domain(i):
            raise InputValidationError(
                f"u_{i} = {u} is outside 1..{2 * 3**i}", details={"upsilon": tuple(upsilon)}
            )


@dataclass(frozen=True)
class EOParams:
    """Branch, upsilon vector, solved c and free parameters b_0..b_{k+1}."""

    branch: Branch
    upsilon: Tuple[int, ...]
    c: int
    b: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_upsilon(self.upsilon)
        if not self.b:
            object.__setattr__(self, "b", (0,) * (self.k + 2))
        if len(self.b) != self.k + 2 or any(x < 0 for x in self.b):
            raise InputValidationError(
                f"b needs {self.k + 2} non-negative entries", details={"b": self.b}
            )

    @property
    def k(self) -> int:
        return len(self.upsilon)

    @property
    def level(self) -> int:
        return self.k + 2

    @property
    def upsilon0(self) -> int:
        return self.branch.upsilon0

    def with_b(self, b: Sequence[int]) -> "EOParams":
        return replace(self, b=tuple(b))


@dataclass(frozen=True)
class PrimitiveSeed:
    """The b = 0 member of an even/odd family."""

    params: EOParams
    value: int

    @property
    def level(self) -> int:
        return self.params.level

    @property
    def branch(self) -> Branch:
        return self.params.branch

    @property
    def c(self) -> int:
        return self.params.c

    @property
    def notation(self) -> Tuple[int, ...]:
        """(c, u_k, ..., u_1, u_0)."""
        return (self.params.c, *reversed(self.params.upsilon), self.params.upsilon0)

    @property
    def expansion_duplicate(self) -> bool:
        return self.params.c == 2

    @property
    def rep(self) -> CrandallRep:
        return eo_rep(self.params)

    @classmethod
    def from_notation(cls, notation: Sequence[int]) -> "PrimitiveSeed":
        """Rebuild a seed from (c, u_k, ..., u_1, u_0)."""
        c, *rest = notation
        *upsilon_rev, u0 = rest
        branch = Branch.E if u0 == 1 else Branch.O
        upsilon = tuple(reversed(upsilon_rev))
        expected = solve_c(branch, upsilon)
        if expected != c:
            raise InputValidationError(
                f"c = {c} does not solve the family, expected {expected}",
                details={"notation": tuple(notation)},
            )
        params = EOParams(branch=branch, upsilon=upsilon, c=c)
        return cls(params=params, value=eo_evaluate(params))


class Level12Values(NamedTuple):
    """Members of the closed-form Level 1 and Level 2 families."""

    level1: int
    x: int
    y: int


class MixingPrediction(NamedTuple):
    """Previous-level branch a family maps into and its base iteration count."""

    target: Branch
    base_iterations: int

    def iterations(self, b0: int) -> int:
        return self.base_iterations + 2 * b0


@dataclass(frozen=True)
class MixingResult:
    """Outcome of iterating one family member into the previous level."""

    seed: PrimitiveSeed
    b0: int
    member: int
    iterate: int
    predicted: Branch
    observed: Branch

    @property
    def confirmed(self) -> bool:
        return self.predicted is self.observed

    @property
    def expansion_duplicate(self) -> bool:
        return self.seed.expansion_duplicate


@dataclass
class C2Report:
    """Agreement between the gap-parity and residue-family classifications."""

    limit: int
    checked: int = 0
    agreements: int = 0
    e_count: int = 0
    o_count: int = 0
    disagreements: List[int] = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return not self.disagreements


class LemmaL1Report(NamedTuple):
    count: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.count >= self.bound


def smooth_part(branch: Branch, upsilon: Sequence[int]) -> int:
    """3^{k+1} + 3^k 2^{u_0} + sum_j 3^{k-j} 2^{u_0 + u_1 + ... + u_j}."""
    _check_upsilon(upsilon)
    k = len(upsilon)
    exponent = branch.upsilon0
    total = 3 ** (k + 1) + (3**k << exponent)
    for j, u in enumerate(upsilon, start=1):
        exponent += u
        total += 3 ** (k - j) << exponent
    return total


def solve_c(branch: Branch, upsilon: Sequence[int]) -> int:
    """The unique c in [2, 2*3^{k+1}) with 2^{c + sum u + u_0} = smooth_part (mod 3^{k+2})."""
    k = len(upsilon)
    order = 2 * 3 ** (k + 1)
    x = dlog2_mod_power_of_three(smooth_part(branch, upsilon), k + 2)
    c = (x - sum(upsilon) - branch.upsilon0) % order
    if c % 6 not in (2, 4):
        raise DomainViolation(
            f"solved c = {c} is not 2 or 4 mod 6",
            details={"branch": branch.value, "upsilon": tuple(upsilon)},
        )
    return c


def eo_rep(params: EOParams) -> CrandallRep:
    """Exponent vector of the member selected by params.b (level k + 1)."""
    b = params.b
    exponent = 2 * b[0] + params.upsilon0
    exponents = [0, exponent]
    for i, u in enumerate(params.upsilon, start=1):
        exponent += u + 2 * b[i] * 3**i
        exponents.append(exponent)
    k = params.k
    exponents.append(exponent + params.c + 2 * b[k + 1] * 3 ** (k + 1))
    return CrandallRep(tuple(exponents))


def eo_evaluate(params: EOParams) -> int:
    """Value of the family member selected by params.b."""
    try:
        value = rep_evaluate(eo_rep(params))
    except NotDivisible as e:
        raise NotDivisible(
            "family numerator is not divisible, c does not solve the family",
            details={"branch": params.branch.value, "upsilon": params.upsilon, "c": params.c},
            cause=e,
        ) from e
    if not value & 1:
        raise NotOdd(f"family member {value} is even", details={"c": params.c})
    return value


def check_level(n: int, level_cap: int) -> int:
    """k = n - 2 for a seed level within the cap."""
    if n < 3:
        raise InputValidationError(f"seed levels start at 3, got {n}")
    if n > level_cap:
        raise ResourceCap(f"level {n} exceeds the level cap {level_cap}")
    return n - 2


def upsilon_prefixes(n: int) -> List[Tuple[Branch, int]]:
    """(branch, u_1) work units of a level in canonical order."""
    return [(branch, u1) for branch in (Branch.E, Branch.O) for u1 in upsilon_domain(1)]


def iter_seeds_with_prefix(n: int, branch: Branch, u1: int) -> Iterator[PrimitiveSeed]:
    """Seeds of level n with the given branch and u_1, in lexicographic order."""
    k = n - 2
    tails = itertools.product(*(upsilon_domain(i) for i in range(2, k + 1)))
    for tail in tails:
        upsilon = (u1, *tail)
        params = EOParams(branch=branch, upsilon=upsilon, c=solve_c(branch, upsilon))
        yield PrimitiveSeed(params=params, value=eo_evaluate(params))


def primitive_seeds(n: int, level_cap: int = DEFAULT_LEVEL_CAP) -> List[PrimitiveSeed]:
    """Every primitive seed of level n: branch E first, then upsilon ascending."""
    check_level(n, level_cap)
    seeds = [
        seed
        for branch, u1 in upsilon_prefixes(n)
        for seed in iter_seeds_with_prefix(n, branch, u1)
    ]
    logger.debug(f"Enumerated {len(seeds)} primitive seeds at level {n}")
    return seeds


def level1_value(b0: int) -> int:
    return ((1 << (2 * b0 + 2)) - 1) // 3


def level2_x(b0: int, b1: int) -> int:
    return (1 << 2 * b0) * (((1 << (6 * b1 + 5)) - 5) // 9) + ((1 << 2 * b0) - 1) // 3


def level2_y(b0: int, b1: int) -> int:
    return (1 << 2 * b0) * (((1 << (6 * b1 + 4)) - 7) // 9) + ((1 << 2 * b0) - 1) // 3


def level12_sets(b0: int, b1: int) -> Level12Values:
    """Level 1 member at b0 and the Level 2 X and Y members at (b0, b1)."""
    if b0 < 0 or b1 < 0:
        raise InputValidationError("b parameters must be non-negative")
    return Level12Values(level1=level1_value(b0), x=level2_x(b0, b1), y=level2_y(b0, b1))


def level2_membership(
    m: int, max_steps: int = DEFAULT_MAX_STEPS
) -> Optional[Tuple[str, int, int]]:
    """("X" or "Y", b0, b1) when odd m lies in a Level 2 family, else None."""
    rep = canonical_rep(rep_from_trajectory(m, max_steps))
    if rep.k == 0:
        rep = rep_expand(rep)
    if rep.k != 1:
        return None
    _, a1, a2 = rep.exponents
    if a1 & 1:
        family, b0, rest = "X", (a1 - 1) // 2, a2 - a1 - 4
    else:
        family, b0, rest = "Y", (a1 - 2) // 2, a2 - a1 - 2
    if rest < 0 or rest % 6:
        return None
    return family, b0, rest // 6


def level_count(n: int) -> int:
    """Number of families at level n."""
    if n < 1:
        raise InputValidationError(f"levels start at 1, got {n}")
    return 2 ** (n - 1) * 3 ** ((n * (n - 3) + 2) // 2)


def new_set_count(n: int) -> int:
    """Families at level n + 1 with no duplicate elements from level n."""
    if n < 2:
        raise InputValidationError(f"new-set count needs n >= 2, got {n}")
    return (2 * 3 ** (n - 1) - 1) * level_count(n)


def c_multiplicity(n: int) -> int:
    """How often each value of c occurs among the level-n seeds."""
    if n < 2:
        raise InputValidationError(f"c multiplicity needs n >= 2, got {n}")
    return 2 ** (n - 2) * 3 ** ((n * (n - 5) + 6) // 2)


def _b_offsets(k: int, b: Sequence[int]) -> List[int]:
    """B(j) = sum_{i<=j} 2 b_i 3^i for j = 0..k+1."""
    if len(b) != k + 2 or any(x < 0 for x in b):
        raise InputValidationError(f"b needs {k + 2} non-negative entries", details={"b": b})
    return list(itertools.accumulate(2 * x * 3**i for i, x in enumerate(b)))


def _family_value(k: int, top: int, inner: Sequence[int], b: Optional[Sequence[int]]) -> int:
    """(2^{top + B(k+1)} - sum_j 3^{k-j} 2^{inner_j + B(j)} - 3^{k+1}) / 3^{k+2}."""
    if k < 0:
        raise InputValidationError(f"k must be non-negative, got {k}")
    offsets = _b_offsets(k, b if b is not None else (0,) * (k + 2))
    numerator = (1 << (top + offsets[k + 1])) - 3 ** (k + 1)
    numerator -= sum(3 ** (k - j) << (inner[j] + offsets[j]) for j in range(k + 1))
    value, remainder = divmod(numerator, 3 ** (k + 2))
    if remainder or value <= 0:
        raise NotDivisible(f"family numerator is not a positive multiple of 3^{k + 2}")
    return value


def corner_even(k: int, b: Optional[Sequence[int]] = None) -> int:
    """Member of the even corner family; b = 0 gives the seed m*_k."""
    return _family_value(k, 3 ** (k + 1) + k + 2, [j + 1 for j in range(k + 1)], b)


def corner_odd(k: int, b: Optional[Sequence[int]] = None) -> int:
    """Member of the odd corner family."""
    return _family_value(k, 2 * 3 ** (k + 1) - 2, [3 ** (j + 1) - 1 for j in range(k + 1)], b)


def zk(k: int) -> int:
    """Top exponent of the O family with every u_i = 1."""
    if k < 0:
        raise InputValidationError(f"k must be non-negative, got {k}")
    if k & 1:
        return 15 * 3 ** (k - 1) + k + 3
    return 3**k + k + 3


def zk_evaluate(k: int, b: Optional[Sequence[int]] = None) -> int:
    """Member of the O family with every u_i = 1."""
    return _family_value(k, zk(k), [j + 2 for j in range(k + 1)], b)


def prop6_check(k: int, b: int) -> bool:
    """2^{3^{k+1}+k+2+2b 3^{k+1}} = 3^{k+2} - 2^{k+2} (mod 3^{k+2}) and its 3-smooth split."""
    if k < 0 or b < 0:
        raise InputValidationError("k and b must be non-negative")
    modulus = 3 ** (k + 2)
    target = modulus - 2 ** (k + 2)
    congruence = pow(2, 3 ** (k + 1) + k + 2 + 2 * b * 3 ** (k + 1), modulus) == target
    split = sum(3 ** (k - j) * 2 ** (j + 1) for j in range(k + 1)) + 3 ** (k + 1)
    return congruence and split == target


def mixing_classify(seed: PrimitiveSeed) -> MixingPrediction:
    """u_1 odd maps into E, even into O; E members take 2b_0+2 steps, O members 2b_0+3."""
    if seed.level < 3:
        raise InputValidationError("mixing is defined from level 3 up")
    target = Branch.E if seed.params.upsilon[0] & 1 else Branch.O
    base = 2 if seed.branch is Branch.E else 3
    return MixingPrediction(target=target, base_iterations=base)


def first_gap_branch(m: int, max_steps: int = DEFAULT_MAX_STEPS) -> Branch:
    """Odd first gap means E, even means O."""
    gaps = gap_sequence(run_trajectory(m, MapKind.F, max_steps)).gaps
    return Branch.E if gaps[0] & 1 else Branch.O


def mixing_verify(
    seed: PrimitiveSeed, b0: int = 0, max_steps: int = DEFAULT_MAX_STEPS
) -> MixingResult:
    """Iterate f the predicted number of times and classify the odd number reached.

    Iteration continues through the trivial cycle when the member reaches 1
    early, which is exactly how expansion duplicates realize their exponents.
    """
    prediction = mixing_classify(seed)
    params = seed.params.with_b((b0,) + (0,) * (seed.params.k + 1))
    member = eo_evaluate(params)
    x = member
    for _ in range(prediction.iterations(b0)):
        x = step_f(x)
    if not x & 1:
        raise InputValidationError(f"iterate {x} of {member} is not odd")
    return MixingResult(
        seed=seed,
        b0=b0,
        member=member,
        iterate=x,
        predicted=prediction.target,
        observed=first_gap_branch(x, max_steps),
    )


def mixing_table(
    level: int,
    b0: int = 0,
    level_cap: int = DEFAULT_LEVEL_CAP,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> List[MixingResult]:
    return [mixing_verify(seed, b0, max_steps) for seed in primitive_seeds(level, level_cap)]


def residue_family_branch(m: int) -> Branch:
    """Classify odd m by stripping m -> (m-1)/4 while m = 5 (mod 8)."""
    while m % 8 == 5:
        m = (m - 1) // 4
    return Branch.E if m % 4 == 3 else Branch.O


def conjecture_c2_test(limit: int) -> C2Report:
    """Compare first-gap parity with the residue-family split for odd 3 <= m <= limit.

    The first gap of odd m is v2(3m + 1).
    """
    if limit < 3:
        raise InputValidationError(f"limit must be >= 3, got {limit}")
    report = C2Report(limit=limit)
    for m in range(3, limit + 1, 2):
        by_gap = Branch.E if v2(3 * m + 1) & 1 else Branch.O
        by_family = residue_family_branch(m)
        report.checked += 1
        if by_gap is Branch.E:
            report.e_count += 1
        else:
            report.o_count += 1
        if by_gap is by_family:
            report.agreements += 1
        else:
            report.disagreements.append(m)
    if report.disagreements:
        logger.warning(f"Residue-family split disagrees at {report.disagreements[:10]}")
    return report


def lemma_l1_count(k: int, r: int, max_steps: int = DEFAULT_MAX_STEPS) -> LemmaL1Report:
    """Distinct gap sequences with k+1 gaps summing to at most r, against the lower bound."""
    if k < 1 or r <= 2:
        raise InputValidationError(f"need k >= 1 and r > 2 (k={k}, r={r})")
    limit = 1 << r
    scale = 3 ** (k + 1)
    seen = set()
    m = 1
    while m * scale < limit:
        gaps = gap_sequence(run_trajectory(m, MapKind.F, max_steps)).gaps
        if len(gaps) == k + 1 and sum(gaps) <= r:
            seen.add(gaps)
        m += 2
    bound = (2 * ((r - 2) // (6 * k))) ** k
    return LemmaL1Report(count=len(seen), bound=bound)
