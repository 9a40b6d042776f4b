"""
CLI commands for collatzlab.

Every command resolves the effective settings from the loaded ones and its
own flags, runs inside `reporting()` so library errors become exit codes,
and writes its rows through `emit()` in the requested format.
"""

import csv
import io
import sys
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple, Type

import click
from dependency_injector.wiring import Provide, inject
from rich.console import Console
from rich.table import Table

from ..config.container import Container
from ..config.settings import Settings
from ..core.asymptotics import (
    check_trend_cap,
    gamma_limit_table,
    records_in_smallest_list,
    theorem_t3_trend,
)
from ..core.eolevels import (
    conjecture_c2_test,
    corner_even,
    corner_odd,
    mixing_table,
    zk as zk_top,
    zk_evaluate,
)
from ..core.exceptions import (
    CollatzLabException,
    InputValidationError,
    StepBudgetExceeded,
    VerificationFailure,
)
from ..core.interfaces import IRecordCache, IScanService, ISeedService, IVerificationService
from ..core.repcore import (
    CrandallRep,
    WirschingSeq,
    cycle_search,
    cycle_solve,
    prop1_witness,
    rep_evaluate,
    rep_from_trajectory,
    wirsching_concat,
    wirsching_encode,
    wirsching_eval,
)
from ..core.trajectory import (
    Trajectory,
    gap_sequence,
    parity_counts,
    run_trajectory,
    total_stopping_time_t,
)
from ..models.domain import (
    C2Row,
    CandidateRow,
    CornerFamily,
    CornerRow,
    CycleRow,
    ExportRow,
    MapKind,
    MixingRow,
    OutputFormat,
    PartialRow,
    RecordRow,
    RepRow,
    SeedRecord,
    StatKind,
    SuiteRow,
    TrajectoryRow,
    WirschingRow,
    ZkRow,
)
from ..services.verification_service import SUITE_NAMES
from ..utils.numtheory import ln_big

EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3

HEAD_TAIL = 5

console = Console()
err_console = Console(stderr=True)


class IntListType(click.ParamType):
    """Comma-separated integers such as 0,1,5."""

    name = "ints"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> Tuple[int, ...]:
        if isinstance(value, tuple):
            return value
        try:
            return tuple(int(part) for part in str(value).split(",") if part.strip())
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)


INT_LIST = IntListType()

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.HUMAN.value,
    show_default=True,
    help="Output format",
)
budget_option = click.option(
    "--budget", type=click.IntRange(min=1), help="Maximum steps per trajectory"
)
level_cap_option = click.option(
    "--level-cap", type=click.IntRange(min=3), help="Highest level enumerated"
)
threads_option = click.option("--threads", type=click.IntRange(min=1), help="Worker threads")
cache_option = click.option(
    "--cache",
    type=click.Path(file_okay=False, path_type=Path),
    help="Directory for cached scan shards",
)


def effective_settings(
    ctx: click.Context,
    budget: Optional[int] = None,
    level_cap: Optional[int] = None,
    threads: Optional[int] = None,
    cache: Optional[Path] = None,
) -> Settings:
    """Loaded settings with the command's flags applied."""
    settings: Settings = ctx.obj["settings"]
    overrides = {
        "step_budget": budget,
        "level_cap": level_cap,
        "threads": threads,
    }
    compute = settings.compute.model_copy(
        update={k: v for k, v in overrides.items() if v is not None}
    )
    cache_settings = settings.cache.model_copy(update={"dir": cache}) if cache else settings.cache
    return settings.model_copy(update={"compute": compute, "cache": cache_settings})


@contextmanager
def reporting(ctx: click.Context, action: str) -> Iterator[None]:
    """Turn library errors into messages on stderr and exit codes."""
    try:
        yield
    except StepBudgetExceeded as e:
        err_console.print(f"❌ [red]{action} stopped: {e}[/red]")
        sys.exit(EXIT_BUDGET)
    except VerificationFailure as e:
        err_console.print(f"❌ [red]{action} failed verification: {e.message}[/red]")
        for failure in e.failures[:20]:
            err_console.print(f"   {failure}")
        sys.exit(EXIT_VERIFY)
    except CollatzLabException as e:
        err_console.print(f"❌ [red]{action} failed: {e}[/red]")
        if ctx.obj.get("verbose"):
            err_console.print_exception()
        sys.exit(EXIT_USAGE)


def emit(
    row_type: Type[ExportRow],
    rows: Sequence[ExportRow],
    fmt: OutputFormat,
    human: Callable[[], None],
) -> None:
    """Write rows as json lines, csv with a header, or call the human renderer."""
    if fmt is OutputFormat.JSON:
        for row in rows:
            click.echo(row.model_dump_json())
    elif fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(row_type.csv_columns())
        for row in rows:
            writer.writerow(row.csv_row())
        click.echo(buffer.getvalue(), nl=False)
    else:
        human()


def elide(trajectory: Trajectory, full: bool = False) -> List[str]:
    """Decimal terms, cut to the first and last five with "..." between."""
    head, tail = trajectory.head_tail(HEAD_TAIL)
    if full or not tail:
        return [str(t) for t in trajectory.terms]
    return [str(t) for t in head] + ["..."] + [str(t) for t in tail]


def short_number(text: str, width: int = 40) -> str:
    if len(text) <= width:
        return text
    return f"{text[:15]}...{text[-15:]} ({len(text)} digits)"


def _table(title: str, *columns: str) -> Table:
    table = Table(title=title, show_header=True, header_style="bold magenta")
    for column in columns:
        table.add_column(column, overflow="fold")
    return table


@click.command()
@click.argument("m", type=click.IntRange(min=1))
@click.option(
    "--map",
    "map_kind",
    type=click.Choice([k.value for k in MapKind]),
    default=MapKind.F.value,
    show_default=True,
    help="f is the Collatz map, t the accelerated map",
)
@format_option
@click.option("--full", is_flag=True, help="Print every term of a long trajectory")
@click.option("--quiet", "-q", is_flag=True, help="Statistics only, without storing the terms")
@budget_option
@click.pass_context
def traj(
    ctx: click.Context,
    m: int,
    map_kind: str,
    fmt: str,
    full: bool,
    quiet: bool,
    budget: Optional[int],
) -> None:
    """Trajectory of M with its gap sequence and statistics."""
    settings = effective_settings(ctx, budget=budget)
    max_steps = settings.compute.step_budget
    kind, output = MapKind(map_kind), OutputFormat(fmt)

    with reporting(ctx, f"Trajectory of {m}"):
        trajectory: Optional[Trajectory] = None
        try:
            if not quiet:
                trajectory = run_trajectory(m, kind, max_steps)
            counts = parity_counts(m, max_steps)
            sigma = total_stopping_time_t(m, max_steps)
        except StepBudgetExceeded as e:
            partial = PartialRow(m=str(m), max_steps=e.max_steps, last_term=str(e.last_term))
            emit(
                PartialRow,
                [partial],
                output,
                lambda: console.print(
                    f"Stopped after {e.max_steps} steps at {short_number(partial.last_term)}"
                ),
            )
            raise

        gaps: Tuple[int, ...] = ()
        if trajectory is not None and kind is MapKind.F and m & 1:
            gaps = gap_sequence(trajectory).gaps
        completeness = Fraction(counts.o, counts.e)
        row = TrajectoryRow(
            m=str(m),
            map=kind,
            steps=trajectory.steps if trajectory is not None else None,
            e=counts.e,
            o=counts.o,
            g1=counts.g1,
            sigma_inf=sigma,
            completeness=str(completeness),
            gamma=counts.e / ln_big(m) if m > 1 else None,
            res=float(Fraction(2**counts.e, m * 3**counts.o)),
            gaps=list(gaps),
            terms=elide(trajectory, full) if trajectory is not None else [],
        )

    def human() -> None:
        if row.terms:
            console.print(f"[bold]Trajectory of {m} under {kind.value}[/bold] ({row.steps} steps)")
            console.print(" → ".join(row.terms), overflow="fold")
        if gaps:
            console.print(f"Gaps: ({', '.join(str(g) for g in gaps)})")
        table = _table("Statistics", "Statistic", "Value")
        table.add_row("e", str(row.e))
        table.add_row("o", str(row.o))
        table.add_row("g1", str(row.g1))
        table.add_row("σ∞", str(row.sigma_inf))
        table.add_row("C", f"{row.completeness} ≈ {float(completeness):.6f}")
        table.add_row("ρ", str(Fraction(row.o, row.sigma_inf)))
        table.add_row("Γ", f"{row.gamma:.6f}" if row.gamma is not None else "-")
        table.add_row("Res", f"{row.res:.6f}")
        console.print(table)

    emit(TrajectoryRow, [row], output, human)


@click.command()
@click.argument("m", type=click.IntRange(min=1), required=False)
@click.option("--eval", "eval_exponents", type=INT_LIST, help="Evaluate an exponent vector")
@format_option
@budget_option
@click.pass_context
def rep(
    ctx: click.Context,
    m: Optional[int],
    eval_exponents: Optional[Tuple[int, ...]],
    fmt: str,
    budget: Optional[int],
) -> None:
    """Least-terms representation of odd M, or the value of --eval a_0,...,a_{k+1}."""
    if m is None and eval_exponents is None:
        raise click.UsageError("give M or --eval")
    settings = effective_settings(ctx, budget=budget)
    max_steps = settings.compute.step_budget

    with reporting(ctx, "Representation"):
        if eval_exponents is not None:
            vector = CrandallRep(eval_exponents)
            row = RepRow(m=str(rep_evaluate(vector)), exponents=list(vector.exponents), k=vector.k)
        else:
            assert m is not None
            vector = rep_from_trajectory(m, max_steps)
            witness = prop1_witness(m, max_steps)
            row = RepRow(
                m=str(m),
                exponents=list(vector.exponents),
                k=vector.k,
                a=witness.a,
                n=str(witness.n),
                special=list(witness.rep.exponents),
            )

    def human() -> None:
        console.print(f"[bold]{row.m}[/bold] = rep({', '.join(str(a) for a in row.exponents)})")
        console.print(f"level k = {row.k}")
        if row.a is not None:
            console.print(
                f"2^{row.a} = 3^{row.k + 1}·{row.m} + {row.n}, "
                f"special exponents ({', '.join(str(a) for a in row.special)})"
            )

    emit(RepRow, [row], OutputFormat(fmt), human)


@click.command()
@click.argument("level", type=click.IntRange(min=3))
@format_option
@click.option("--verify", is_flag=True, help="Check the odd-count law on every seed")
@click.option("--count-only", is_flag=True, help="Only print the number of seeds")
@level_cap_option
@threads_option
@budget_option
@click.pass_context
@inject
def seeds(
    ctx: click.Context,
    level: int,
    fmt: str,
    verify: bool,
    count_only: bool,
    level_cap: Optional[int],
    threads: Optional[int],
    budget: Optional[int],
    seed_service: Callable[..., ISeedService] = Provide[Container.seed_service.provider],
) -> None:
    """Primitive seeds of LEVEL in canonical order."""
    settings = effective_settings(ctx, budget=budget, level_cap=level_cap, threads=threads)
    service = seed_service(settings=settings.compute)

    with reporting(ctx, f"Seeds of level {level}"):
        found = service.enumerate(level)
        if count_only:
            click.echo(len(found))
            return
        records = service.to_records(found, verify=verify)

    def human() -> None:
        table = _table(
            f"Primitive seeds of level {level}", "Branch", "(c, υ)", "Value", "e", "o", "Dup"
        )
        for seed, record in zip(found, records):
            table.add_row(
                record.branch.value,
                str(seed.notation),
                short_number(record.value),
                str(record.e),
                str(record.o),
                "yes" if record.expansion_duplicate else "",
            )
        console.print(table)
        if verify:
            console.print(f"✅ [green]{len(records)} seeds checked[/green]")

    emit(SeedRecord, records, OutputFormat(fmt), human)


@click.command()
@click.argument("k_max", type=click.IntRange(min=0))
@click.option(
    "--family",
    type=click.Choice([f.value for f in CornerFamily]),
    default=CornerFamily.EVEN.value,
    show_default=True,
)
@format_option
@budget_option
@click.pass_context
def corner(
    ctx: click.Context, k_max: int, family: str, fmt: str, budget: Optional[int]
) -> None:
    """Corner-family seeds up to K_MAX and their completeness trend."""
    settings = effective_settings(ctx, budget=budget)
    max_steps, cap = settings.compute.step_budget, settings.compute.trend_cap
    kind = CornerFamily(family)
    seed_of = corner_even if kind is CornerFamily.EVEN else corner_odd

    with reporting(ctx, f"Corner family {kind.value}"):
        check_trend_cap(k_max, cap)
        rows = []
        for k in range(k_max + 1):
            m = seed_of(k)
            counts = parity_counts(m, max_steps)
            rows.append(
                CornerRow(
                    family=kind,
                    k=k,
                    m=str(m),
                    e=counts.e,
                    o=counts.o,
                    completeness=str(Fraction(counts.o, counts.e)),
                    gamma=counts.e / ln_big(m) if m > 1 else 0.0,
                )
            )

        def human() -> None:
            table = _table(f"{kind.value.title()} corner seeds", "k", "m", "e", "o", "C", "Γ")
            for r in rows:
                table.add_row(
                    str(r.k),
                    short_number(r.m),
                    str(r.e),
                    str(r.o),
                    r.completeness,
                    f"{r.gamma:.6f}",
                )
            console.print(table)

        emit(CornerRow, rows, OutputFormat(fmt), human)
        theorem_t3_trend(kind, k_max, cap, max_steps)
        if kind is CornerFamily.EVEN:
            gamma_limit_table(k_max, cap, max_steps)


@click.command()
@click.argument("k_max", type=click.IntRange(min=0))
@format_option
@budget_option
@click.pass_context
def zk(ctx: click.Context, k_max: int, fmt: str, budget: Optional[int]) -> None:
    """Top exponents z_0..z_K_MAX of the all-ones O family and their members."""
    settings = effective_settings(ctx, budget=budget)
    max_steps = settings.compute.step_budget

    with reporting(ctx, "z_k table"):
        check_trend_cap(k_max, settings.compute.trend_cap)
        rows = []
        for k in range(k_max + 1):
            value = zk_evaluate(k)
            counts = parity_counts(value, max_steps)
            rows.append(ZkRow(k=k, z=zk_top(k), value=str(value), e=counts.e, o=counts.o))

    def human() -> None:
        table = _table("All-ones O family", "k", "z_k", "Member", "e", "o")
        for r in rows:
            table.add_row(str(r.k), str(r.z), short_number(r.value), str(r.e), str(r.o))
        console.print(table)

    emit(ZkRow, rows, OutputFormat(fmt), human)


@click.command()
@click.argument("limit", type=click.IntRange(min=3))
@click.option(
    "--stat",
    type=click.Choice([s.value for s in StatKind]),
    default=StatKind.COMPLETENESS.value,
    show_default=True,
)
@click.option(
    "--check-smallest", is_flag=True, help="Mark records that are the least m with their o"
)
@format_option
@budget_option
@threads_option
@cache_option
@click.pass_context
@inject
def scan(
    ctx: click.Context,
    limit: int,
    stat: str,
    check_smallest: bool,
    fmt: str,
    budget: Optional[int],
    threads: Optional[int],
    cache: Optional[Path],
    scan_service: Callable[..., IScanService] = Provide[Container.scan_service.provider],
    record_cache: Callable[..., Optional[IRecordCache]] = Provide[Container.record_cache.provider],
) -> None:
    """Records of a statistic for 2 <= m <= LIMIT."""
    settings = effective_settings(ctx, budget=budget, threads=threads, cache=cache)
    service = scan_service(settings=settings.compute, cache=record_cache(cache=settings.cache))
    kind = StatKind(stat)

    with reporting(ctx, f"{kind.value} scan"):
        records = service.scan(limit, kind)
        smallest = (
            records_in_smallest_list(records, settings.compute.step_budget)
            if check_smallest
            else {}
        )
    rows = [
        RecordRow(m=str(r.m), stat=r.stat_kind, value=r.value_text, o=r.o, e=r.e, g1=r.g1)
        for r in records
    ]

    def human() -> None:
        columns = ["m", kind.value, "o", "e", "g1"] + (["least"] if check_smallest else [])
        table = _table(f"{kind.value} records up to {limit}", *columns)
        for r in records:
            cells = [str(r.m), r.value_text, str(r.o), str(r.e), str(r.g1)]
            if check_smallest:
                cells.append({True: "yes", False: "no"}.get(smallest.get(r.m), "-"))
            table.add_row(*cells)
        console.print(table)

    emit(RecordRow, rows, OutputFormat(fmt), human)


@click.command()
@click.argument("level", type=click.IntRange(min=3))
@click.option("--b0", type=click.IntRange(min=0), default=0, show_default=True)
@format_option
@level_cap_option
@budget_option
@click.pass_context
def mixing(
    ctx: click.Context,
    level: int,
    b0: int,
    fmt: str,
    level_cap: Optional[int],
    budget: Optional[int],
) -> None:
    """Iterate every family of LEVEL into the previous level and check the predicted branch."""
    settings = effective_settings(ctx, budget=budget, level_cap=level_cap)

    with reporting(ctx, f"Mixing at level {level}"):
        results = mixing_table(
            level, b0, settings.compute.level_cap, settings.compute.step_budget
        )
        rows = [
            MixingRow(
                notation=list(r.seed.notation),
                b0=r.b0,
                member=str(r.member),
                iterate=str(r.iterate),
                predicted=r.predicted,
                observed=r.observed,
                confirmed=r.confirmed,
                expansion_duplicate=r.expansion_duplicate,
            )
            for r in results
        ]

        def human() -> None:
            table = _table(
                f"Mixing from level {level}, b0 = {b0}",
                "(c, υ)",
                "Member",
                "Iterate",
                "Predicted",
                "Observed",
                "",
            )
            for r in rows:
                table.add_row(
                    str(tuple(r.notation)),
                    short_number(r.member),
                    short_number(r.iterate),
                    r.predicted.value,
                    r.observed.value,
                    "✅" if r.confirmed else "❌",
                )
            console.print(table)

        emit(MixingRow, rows, OutputFormat(fmt), human)
        failed = [f"{tuple(r.notation)}" for r in rows if not r.confirmed]
        if failed:
            raise VerificationFailure(f"{len(failed)} families mix unexpectedly", failures=failed)


@click.command()
@click.argument("limit", type=click.IntRange(min=3))
@format_option
@click.pass_context
def c2(ctx: click.Context, limit: int, fmt: str) -> None:
    """Compare first-gap parity with the residue-family split for odd m <= LIMIT."""
    with reporting(ctx, "Residue-family test"):
        report = conjecture_c2_test(limit)
        row = C2Row(
            limit=limit,
            checked=report.checked,
            e_count=report.e_count,
            o_count=report.o_count,
            agreements=report.agreements,
            disagreements=[str(m) for m in report.disagreements],
        )

        def human() -> None:
            table = _table(f"Residue families up to {limit}", "Checked", "E", "O", "Agree")
            table.add_row(str(row.checked), str(row.e_count), str(row.o_count), str(row.agreements))
            console.print(table)

        emit(C2Row, [row], OutputFormat(fmt), human)
        if row.disagreements:
            raise VerificationFailure(
                f"{len(row.disagreements)} disagreements", failures=row.disagreements
            )


@click.command()
@click.argument("suite", type=click.Choice(list(SUITE_NAMES) + ["all"]))
@format_option
@level_cap_option
@budget_option
@click.pass_context
@inject
def verify(
    ctx: click.Context,
    suite: str,
    fmt: str,
    level_cap: Optional[int],
    budget: Optional[int],
    verification_service: Callable[..., IVerificationService] = Provide[
        Container.verification_service.provider
    ],
) -> None:
    """Run a named property suite, or all of them."""
    settings = effective_settings(ctx, budget=budget, level_cap=level_cap)
    service = verification_service(verify=settings.verify, compute=settings.compute)
    names = service.suite_names() if suite == "all" else [suite]

    with reporting(ctx, f"Suite {suite}"):
        results = list(service.run_many(names).values())

    rows = [result.to_row() for result in results]

    def human() -> None:
        for result in results:
            mark = "✅" if result.passed else "❌"
            click.echo(f"{mark} {result.name}: {result.summary} ({result.duration_seconds}s)")
            for failure in result.failures[:10]:
                click.echo(f"   {failure}")

    emit(SuiteRow, rows, OutputFormat(fmt), human)

    if not all(result.passed for result in results):
        failed = [r.name for r in results if not r.passed]
        err_console.print(f"❌ [red]Failed suites: {', '.join(failed)}[/red]")
        sys.exit(EXIT_VERIFY)


@click.command()
@click.argument("m", type=click.IntRange(min=1), required=False)
@click.option("--alphas", type=INT_LIST, help="Use this admissible sequence instead of M")
@click.option("--concat", type=INT_LIST, help="Concatenate with this sequence")
@format_option
@budget_option
@click.pass_context
def wirsching(
    ctx: click.Context,
    m: Optional[int],
    alphas: Optional[Tuple[int, ...]],
    concat: Optional[Tuple[int, ...]],
    fmt: str,
    budget: Optional[int],
) -> None:
    """Admissible sequence of M (or --alphas) and its affine map at 1."""
    if (m is None) == (alphas is None):
        raise click.UsageError("give exactly one of M or --alphas")
    settings = effective_settings(ctx, budget=budget)

    with reporting(ctx, "Admissible sequence"):
        s = wirsching_encode(m, settings.compute.step_budget) if m else WirschingSeq(alphas or ())
        if concat is not None:
            s = wirsching_concat(s, WirschingSeq(concat))
        row = WirschingRow(
            m=str(m) if m is not None and concat is None else None,
            alphas=list(s.alphas),
            length=s.length,
            absolute=s.absolute,
            norm=s.norm,
            small=s.is_small,
            zeta_at_1=str(wirsching_eval(s, Fraction(1))),
        )

    def human() -> None:
        console.print(f"s = ({', '.join(str(a) for a in row.alphas)})")
        console.print(
            f"length {row.length}, |s| = {row.absolute}, ‖s‖ = {row.norm}, small: {row.small}"
        )
        console.print(f"ζ_s(1) = {row.zeta_at_1}")

    emit(WirschingRow, [row], OutputFormat(fmt), human)


@click.command()
@click.argument("k_max", type=click.IntRange(min=0), required=False, default=5)
@click.option("--cap", type=click.IntRange(min=1), default=30, show_default=True)
@click.option("--profile", type=INT_LIST, help="Solve one profile a_0,...,a_{k+1}")
@format_option
@click.pass_context
def cycle(
    ctx: click.Context, k_max: int, cap: int, profile: Optional[Tuple[int, ...]], fmt: str
) -> None:
    """Search every cycle profile with level <= K_MAX and top exponent <= --cap."""
    with reporting(ctx, "Cycle search"):
        if profile is not None:
            candidate = cycle_solve(profile)
            solved = CandidateRow(
                exponents=list(candidate.exponents),
                k=len(candidate.exponents) - 2,
                q_star=str(candidate.q_star),
                integral=candidate.is_integral,
                trivial=candidate.is_trivial,
            )

            def human_profile() -> None:
                console.print(f"q* = {solved.q_star}")
                if solved.trivial:
                    console.print("trivial cycle")
                elif solved.integral:
                    console.print("[bold red]integral solution above 1[/bold red]")

            emit(CandidateRow, [solved], OutputFormat(fmt), human_profile)
            return

        if k_max > 8:
            raise InputValidationError(f"exhaustive search is limited to k <= 8, got {k_max}")
        report = cycle_search(k_max, cap)
        row = CycleRow(
            k_max=k_max,
            cap=cap,
            profiles=report.profiles,
            degenerate=report.degenerate,
            trivial=[",".join(str(a) for a in t) for t in report.trivial],
            nontrivial=[str(c.q_star) for c in report.nontrivial],
        )

        def human() -> None:
            table = _table(f"Cycle profiles, k <= {k_max}, a <= {cap}", "Metric", "Value")
            table.add_row("Profiles", str(row.profiles))
            table.add_row("Degenerate", str(row.degenerate))
            table.add_row("Trivial", "; ".join(row.trivial))
            table.add_row("Nontrivial", "; ".join(row.nontrivial) or "none")
            console.print(table)

        emit(CycleRow, [row], OutputFormat(fmt), human)
        if not report.only_trivial:
            raise VerificationFailure("integral cycle solutions above 1", failures=row.nontrivial)
