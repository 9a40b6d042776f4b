"""
Named property suites.

Each suite recomputes a family of facts from scratch and compares it with an
independent oracle: a brute-force enumerator, a closed form, or a direct
trajectory run. Scales come from VerifySettings, so tests can run every
suite at a small size.
"""

import logging
import random
import time
from collections import Counter
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from ..config.settings import ComputeSettings, VerifySettings
from ..core.asymptotics import (
    big_completeness_check,
    completeness_floor_holds,
    eq18_check,
    gamma_limit_table,
    res_limit_table,
    scan_records,
    theorem_t3_trend,
)
from ..core.eolevels import (
    PrimitiveSeed,
    c_multiplicity,
    conjecture_c2_test,
    corner_even,
    corner_odd,
    eo_evaluate,
    lemma_l1_count,
    level1_value,
    level2_membership,
    level2_x,
    level2_y,
    level_count,
    mixing_verify,
    prop6_check,
    primitive_seeds,
    solve_c,
    zk,
    zk_evaluate,
)
from ..core.exceptions import (
    DomainViolation,
    InputValidationError,
    NoSolution,
    RepresentationError,
    VerificationFailure,
)
from ..core.interfaces import IVerificationService
from ..core.repcore import (
    WirschingSeq,
    canonical_rep,
    cycle_lower_bound_check,
    cycle_search,
    enumerate_smooth_special,
    prop1_witness,
    rep_evaluate,
    rep_expand,
    rep_from_trajectory,
    seed_chain,
    seed_chain_steps,
    smooth_special_rep,
    trivial_cycle_profile,
    wirsching_concat,
    wirsching_encode,
    wirsching_eval,
    wirsching_unwind,
)
from ..core.trajectory import COMPLETENESS_LIMIT, gamma_bound_holds, parity_counts, stats
from ..models.domain import Branch, CornerFamily, StatKind, SuiteResult
from ..utils.numtheory import LN3, assert_two_is_primitive_root

logger = logging.getLogger(__name__)

# (c, u_k..u_1, u_0) and value of every level-3 primitive seed
TABLE_ONE: Tuple[Tuple[Tuple[int, ...], int], ...] = (
    ((10, 1, 1), 151),
    ((8, 2, 1), 75),
    ((16, 3, 1), ((1 << 20) - 31) // 27),
    ((2, 4, 1), 3),
    ((4, 5, 1), 35),
    ((14, 6, 1), ((1 << 21) - 143) // 27),
    ((16, 1, 2), 19417),
    ((2, 2, 2), 1),
    ((4, 3, 2), 17),
    ((14, 4, 2), ((1 << 20) - 85) // 27),
    ((10, 5, 2), ((1 << 17) - 149) // 27),
    ((8, 6, 2), 2417),
)

ZK_ANCHORS = (4, 19, 14, 141, 88, 1223, 738, 10945)

LEMMA_L1_CASES = ((1, 8), (1, 12), (2, 20))

SUITE_NAMES = (
    "roundtrip",
    "table1",
    "mixing",
    "prop6",
    "c2",
    "lemma-l1",
    "cycles",
    "corner",
    "zk",
    "wirsching",
    "smooth",
    "counts",
    "stats",
    "chains",
    "records",
)

_RECOVERABLE = (VerificationFailure, RepresentationError, DomainViolation, NoSolution)


class _Tally:
    """Collects check outcomes for one suite."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: List[str] = []
        self.notes: Dict[str, object] = {}

    def check(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(message)

    def result(self, duration: float) -> SuiteResult:
        return SuiteResult(
            name=self.name,
            passed=not self.failures,
            checked=self.checked,
            failures=self.failures,
            notes=self.notes,
            duration_seconds=round(duration, 3),
        )


class VerificationService(IVerificationService):
    """Runs the property suites at the scales given in VerifySettings."""

    def __init__(self, verify: VerifySettings, compute: ComputeSettings):
        self.verify = verify
        self.compute = compute
        self._suites: Dict[str, Callable[[_Tally], None]] = {
            name: getattr(self, "_" + name.replace("-", "_")) for name in SUITE_NAMES
        }

    def suite_names(self) -> List[str]:
        return list(self._suites)

    def run(self, name: str) -> SuiteResult:
        """Run one suite; library failures inside it count as failed checks."""
        if name not in self._suites:
            raise InputValidationError(
                f"Unknown suite '{name}'", details={"known": ", ".join(self._suites)}
            )
        tally = _Tally(name)
        logger.debug(f"Running suite {name}")
        started = time.perf_counter()
        try:
            self._suites[name](tally)
        except _RECOVERABLE as e:
            tally.failures.append(f"{type(e).__name__}: {e}")
            failures = getattr(e, "failures", [])
            tally.failures.extend(failures)
        result = tally.result(time.perf_counter() - started)
        logger.info(f"Suite {name}: {result.summary} in {result.duration_seconds}s")
        return result

    def run_many(self, names: Sequence[str]) -> Dict[str, SuiteResult]:
        return {name: self.run(name) for name in names}

    @property
    def _budget(self) -> int:
        return self.compute.step_budget

    def _roundtrip(self, t: _Tally) -> None:
        for m in range(3, self.verify.roundtrip_limit + 1, 2):
            rep = rep_from_trajectory(m, self._budget)
            counts = parity_counts(m, self._budget)
            t.check(rep_evaluate(rep) == m, f"rep of {m} evaluates to {rep_evaluate(rep)}")
            t.check(
                rep.top == counts.e and rep.k + 1 == counts.o,
                f"rep {rep.exponents} disagrees with e={counts.e}, o={counts.o} of {m}",
            )
            t.check(
                Fraction(counts.o, counts.e) < COMPLETENESS_LIMIT,
                f"completeness of {m} is not below ln2/ln3",
            )

        rng = random.Random(self.verify.random_seed)
        for _ in range(self.verify.random_reps):
            m = rng.randrange(3, self.verify.roundtrip_limit + 1) | 1
            rep = rep_from_trajectory(m, self._budget)
            expanded = rep
            for _ in range(rng.randint(1, 4)):
                expanded = rep_expand(expanded)
            t.check(
                rep_evaluate(expanded) == m and canonical_rep(expanded) == rep,
                f"expansion of {rep.exponents} changed its value",
            )

    def _table1(self, t: _Tally) -> None:
        seeds = primitive_seeds(3, self.compute.level_cap)
        t.notes["seeds"] = len(seeds)
        if len(seeds) != len(TABLE_ONE):
            t.failures.append(f"level 3 has {len(seeds)} seeds")
        for seed, (notation, value) in zip(seeds, TABLE_ONE):
            t.check(
                seed.notation == notation and seed.value == value,
                f"seed {seed.notation} = {seed.value}, expected {notation} = {value}",
            )

    def _mixing(self, t: _Tally) -> None:
        cases = [
            (seed, b0)
            for seed in primitive_seeds(3, self.compute.level_cap)
            for b0 in range(self.verify.mixing_b0_max + 1)
        ]
        cases += [(seed, 0) for seed in primitive_seeds(4, max(4, self.compute.level_cap))]
        for seed, b0 in cases:
            result = mixing_verify(seed, b0, self._budget)
            t.check(
                result.confirmed,
                f"{seed.notation} b0={b0}: predicted {result.predicted.value}, "
                f"observed {result.observed.value} at {result.iterate}",
            )

        worked = mixing_verify(PrimitiveSeed.from_notation((10, 1, 1)), 0, self._budget)
        t.check(
            worked.member == 151 and worked.iterate == 227,
            f"f^(2)(151) gave {worked.iterate}",
        )
        t.check(
            level2_membership(227, self._budget) == ("X", 0, 1),
            "227 is not X(b0=0, b1=1)",
        )

    def _prop6(self, t: _Tally) -> None:
        for k in range(self.verify.prop6_k_max + 1):
            for b in range(self.verify.prop6_b_max + 1):
                t.check(prop6_check(k, b), f"congruence fails at k={k}, b={b}")

    def _c2(self, t: _Tally) -> None:
        report = conjecture_c2_test(self.verify.c2_limit)
        t.notes.update(e_count=report.e_count, o_count=report.o_count)
        t.checked += report.checked
        t.failures.extend(f"m={m}" for m in report.disagreements)

    def _lemma_l1(self, t: _Tally) -> None:
        for k, r in LEMMA_L1_CASES:
            report = lemma_l1_count(k, r, self._budget)
            t.notes[f"k={k},r={r}"] = f"{report.count} >= {report.bound}"
            t.check(report.holds, f"k={k}, r={r}: {report.count} < {report.bound}")

    def _cycles(self, t: _Tally) -> None:
        k_max, cap = self.verify.cycle_k_max, self.verify.cycle_cap
        report = cycle_search(k_max, cap)
        t.notes.update(profiles=report.profiles, degenerate=report.degenerate)
        t.check(
            report.only_trivial,
            f"integral solutions q* > 1: {[str(c.q_star) for c in report.nontrivial]}",
        )
        expected = [
            trivial_cycle_profile(k) for k in range(k_max + 1) if 2 * (k + 1) <= cap
        ]
        t.check(
            sorted(report.trivial) == sorted(expected),
            f"trivial solutions {report.trivial}, expected {expected}",
        )
        for k in range(1, min(k_max + 1, 3) + 1):
            bound = cycle_lower_bound_check(k, cap)
            t.check(bound.holds, f"cycle bound 3^{k - 1} fails for k={k}")

    def _corner(self, t: _Tally) -> None:
        k_max = self.verify.corner_k_max
        for k in range(k_max + 1):
            counts = parity_counts(corner_even(k), self._budget)
            t.check(
                counts.o == k + 2 and counts.e == 3 ** (k + 1) + k + 2,
                f"even corner k={k}: o={counts.o}, e={counts.e}",
            )
        for k in range(k_max):
            m = corner_odd(k)
            counts = parity_counts(m, self._budget)
            if k == 0:
                t.check(m == 1 and counts.o == 1, f"odd corner k=0 is {m}")
            else:
                t.check(
                    counts.o == k + 2 and counts.e == 2 * 3 ** (k + 1) - 2,
                    f"odd corner k={k}: o={counts.o}, e={counts.e}",
                )

        cap = self.compute.trend_cap
        gammas = gamma_limit_table(self.verify.gamma_k_max, cap, self._budget)
        t.check(abs(gammas[0][1] - 5 / LN3) < 1e-9, f"Gamma(3) = {gammas[0][1]}")
        t.notes["gamma"] = [round(g, 6) for _, g in gammas]
        even = theorem_t3_trend(CornerFamily.EVEN, k_max, cap, self._budget)
        odd = theorem_t3_trend(CornerFamily.ODD, k_max - 1, cap, self._budget)
        t.notes["completeness_even"] = [str(c) for _, c in even]
        t.notes["completeness_odd"] = [str(c) for _, c in odd]
        res = res_limit_table(k_max, cap, self._budget)
        t.notes["res"] = [round(float(r), 6) for _, r in res]
        t.checked += 3

    def _zk(self, t: _Tally) -> None:
        for k, expected in enumerate(ZK_ANCHORS):
            t.check(zk(k) == expected, f"z_{k} = {zk(k)}, expected {expected}")
        t.check(zk_evaluate(0) == 1, f"z-family member k=0 is {zk_evaluate(0)}")
        for k in range(1, 6):
            counts = parity_counts(zk_evaluate(k), self._budget)
            t.check(counts.o == k + 2, f"z-family member k={k} has o={counts.o}")
        for k in range(1, 5):
            top = solve_c(Branch.O, (1,) * k) + k + 2
            t.check(top == zk(k), f"all-ones O family at k={k} has top exponent {top}")

    def _wirsching(self, t: _Tally) -> None:
        s = wirsching_encode(3, self._budget)
        t.check(
            s.alphas == (0, 0, 3) and (s.length, s.absolute, s.norm) == (2, 3, 5),
            f"s(3) = {s.alphas}",
        )
        t.check(wirsching_eval(WirschingSeq((0, 0, 3, 1)), Fraction(1)) == 3, "(0,0,3,1) at 1")
        left, right = WirschingSeq((0, 2)), WirschingSeq((0, 1))
        joined = wirsching_concat(left, right)
        t.check(
            joined.alphas == (0, 2, 1)
            and wirsching_eval(joined, Fraction(1))
            == wirsching_eval(left, wirsching_eval(right, Fraction(1)))
            == Fraction(7, 3),
            f"(0,2).(0,1) = {joined.alphas}",
        )

        for m in range(1, self.verify.wirsching_limit + 1, 2):
            s = wirsching_encode(m, self._budget)
            e = parity_counts(m, self._budget).e
            t.check(
                wirsching_eval(s, Fraction(1)) == m == wirsching_unwind(s, Fraction(1)),
                f"zeta_s({m}) does not return {m}",
            )
            t.check(s.norm == e, f"norm of s({m}) is {s.norm}, e = {e}")

        for level in (3, 4):
            for seed in primitive_seeds(level, max(level, self.compute.level_cap)):
                norm = wirsching_encode(seed.value, self._budget).norm
                t.check(norm < 3**level - 1, f"seed {seed.notation} has norm {norm}")

    def _smooth(self, t: _Tally) -> None:
        limit = self.verify.smooth_limit
        levels_of_19 = []
        for k in range(self.verify.smooth_max_k + 1):
            found: Dict[int, List[Tuple[int, ...]]] = {}
            for rep in enumerate_smooth_special(limit, k):
                found.setdefault(rep.value, []).append(rep.exponents)
            t.check(
                all(len(v) == 1 for v in found.values()),
                f"a value has several level-{k} special representations",
            )
            for n in range(1, limit + 1):
                fast = smooth_special_rep(n, k)
                expected = found.get(n, [None])[0]
                got = fast.exponents if fast is not None else None
                t.check(got == expected, f"n={n}, k={k}: {got} vs {expected}")
            if 19 in found:
                levels_of_19.append(k)
        if limit >= 19:
            t.check(levels_of_19 == [1, 2], f"19 is special at levels {levels_of_19}")

        for x in range(3, min(limit, 999) + 1, 2):
            witness = prop1_witness(x, self._budget)
            t.check(
                (1 << witness.a) == 3**witness.k * x + witness.n,
                f"2^{witness.a} != 3^{witness.k} {x} + {witness.n}",
            )

    def _counts(self, t: _Tally) -> None:
        cap = self.compute.level_cap
        assert_two_is_primitive_root(cap + 1)
        for n in range(3, cap + 1):
            seeds = primitive_seeds(n, cap)
            t.check(len(seeds) == level_count(n), f"level {n} has {len(seeds)} seeds")
            multiplicities = set(Counter(seed.c for seed in seeds).values())
            t.check(
                multiplicities == {c_multiplicity(n)},
                f"level {n} c multiplicities {sorted(multiplicities)}",
            )
            evens = sum(1 for seed in seeds if seed.branch is Branch.E)
            t.check(2 * evens == len(seeds), f"level {n} has {evens} E seeds")
            for seed in seeds:
                self._check_seed(t, seed)
            t.notes[f"level {n}"] = len(seeds)

        for b0 in range(6):
            t.check(level2_y(b0, 0) == level1_value(b0), f"Y({b0}, 0) is not Level 1")
        y_family = PrimitiveSeed.from_notation((2, 2, 2)).params
        x_family = PrimitiveSeed.from_notation((2, 4, 1)).params
        for b0 in range(3):
            for b1 in range(3):
                b = (b0, b1, 0)
                t.check(
                    eo_evaluate(y_family.with_b(b)) == level2_y(b0, b1),
                    f"O(2,2,2) at b={b} is not Y({b0}, {b1})",
                )
                t.check(
                    eo_evaluate(x_family.with_b(b)) == level2_x(b0, b1),
                    f"E(2,4,1) at b={b} is not X({b0}, {b1})",
                )

    def _check_seed(self, t: _Tally, seed: PrimitiveSeed) -> None:
        counts = parity_counts(seed.value, self._budget)
        t.check(
            canonical_rep(seed.rep) == rep_from_trajectory(seed.value, self._budget),
            f"seed {seed.notation} does not reduce to the trajectory of {seed.value}",
        )
        if seed.expansion_duplicate:
            t.check(counts.o < seed.level, f"duplicate seed {seed.notation} has o={counts.o}")
        else:
            t.check(counts.o == seed.level, f"seed {seed.notation} has o={counts.o}")

    def _stats(self, t: _Tally) -> None:
        three = stats(3, self._budget)
        t.check(
            three.completeness == Fraction(2, 5) == three.rho and three.sigma_inf == 5,
            f"stats(3) = {three}",
        )
        t.check(abs(three.gamma - 5 / LN3) < 1e-12, f"Gamma(3) = {three.gamma}")
        res = stats(993, self._budget).res
        t.check(abs(res - 1.253142) < 5e-7, f"Res(993) = {res}")
        big = big_completeness_check(max_steps=self._budget)
        t.check(abs(big - 0.606061) < 5e-7, f"big completeness = {big}")
        for k in (1, 10, 100):
            t.check(eq18_check(k), f"log identity fails at k={k}")

        for j in range(1, 11):
            s = stats(1 << j, self._budget)
            t.check(s.o == 0 and s.e == j, f"2^{j} has o={s.o}, e={s.e}")
        for m in range(2, self.verify.stats_limit + 1):
            s = stats(m, self._budget)
            t.check(s.e == s.sigma_inf, f"e({m}) = {s.e}, sigma = {s.sigma_inf}")
            t.check(s.completeness < COMPLETENESS_LIMIT, f"C({m}) = {s.completeness}")
            t.check(gamma_bound_holds(s), f"Gamma bound fails at {m}")
            if m & 1 and m >= 3:
                t.check(completeness_floor_holds(m, self._budget), f"floor fails at {m}")

    def _chains(self, t: _Tally) -> None:
        t.check(seed_chain(3, 3) == [3, 13, 53], f"chain of 3 is {seed_chain(3, 3)}")
        for m in range(1, 200, 2):
            steps = seed_chain_steps(m, 4, self._budget)
            t.check(
                all(b - a == 2 for a, b in zip(steps, steps[1:])),
                f"steps along the chain of {m}: {steps}",
            )

    def _records(self, t: _Tally) -> None:
        found = scan_records(self.verify.records_limit, StatKind.COMPLETENESS, self._budget)
        t.check(
            found[0].m == 3 and found[0].value_text == "0.400000",
            f"first completeness record is {found[0].m} with {found[0].value_text}",
        )
        for record in found:
            t.check(record.value < COMPLETENESS_LIMIT, f"C({record.m}) = {record.value_text}")
        values = [record.value for record in found]
        t.check(
            all(b > a for a, b in zip(values, values[1:])), "completeness records not increasing"
        )

        res = scan_records(self.verify.res_records_limit, StatKind.RES, self._budget)
        t.check(res[-1].m == 993, f"largest Res record is at {res[-1].m}, expected 993")
