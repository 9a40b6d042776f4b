"""
Main CLI interface for collatzlab.

Machine formats go to stdout; logs and error messages go to stderr so json
and csv output can be piped untouched.
"""

import logging
import sys
from pathlib import Path
from typing import List, Optional

import click
import structlog
from dependency_injector.wiring import Provide, inject
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from .. import __version__
from ..config.container import Container, unwire_container, wire_container
from ..config.settings import Settings, load_settings
from ..core.exceptions import ConfigurationError
from .commands import (
    EXIT_USAGE,
    c2,
    corner,
    cycle,
    mixing,
    rep,
    scan,
    seeds,
    traj,
    verify,
    wirsching,
    zk,
)

console = Console()
err_console = Console(stderr=True)


def setup_logging(verbose: bool = False, structured: bool = False, level: str = "INFO") -> None:
    """Set up logging configuration."""
    log_level = logging.DEBUG if verbose else getattr(logging, level)

    if structured:
        shared = [
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
        ]
        structlog.configure(
            processors=[
                structlog.stdlib.filter_by_level,
                *shared,
                structlog.processors.StackInfoRenderer(),
                structlog.processors.format_exc_info,
                structlog.processors.UnicodeDecoder(),
                structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
            ],
            context_class=dict,
            logger_factory=structlog.stdlib.LoggerFactory(),
            wrapper_class=structlog.stdlib.BoundLogger,
            cache_logger_on_first_use=True,
        )
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(
            structlog.stdlib.ProcessorFormatter(
                processor=structlog.processors.JSONRenderer(),
                foreign_pre_chain=shared,
            )
        )
        logging.basicConfig(level=log_level, format="%(message)s", handlers=[handler])
    else:
        logging.basicConfig(
            level=log_level,
            format="%(message)s",
            datefmt="[%X]",
            handlers=[RichHandler(console=err_console, rich_tracebacks=True)],
        )


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
@click.option("--structured-logs", is_flag=True, help="Enable structured JSON logging")
@click.option(
    "--env-file",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Read settings from this .env file",
)
@click.pass_context
def cli(
    ctx: click.Context, verbose: bool, structured_logs: bool, env_file: Optional[Path]
) -> None:
    """
    collatzlab - exact computations on 3x+1 trajectories.

    Trajectories and their statistics, exponent-vector representations,
    even/odd seed families, record scans and property suites.
    """
    ctx.ensure_object(dict)
    # decimal output of big terms
    sys.set_int_max_str_digits(0)

    try:
        settings = load_settings(env_file)
    except ConfigurationError as e:
        err_console.print(f"❌ [red]{e}[/red]")
        sys.exit(EXIT_USAGE)

    setup_logging(verbose, structured_logs or settings.logging.structured, settings.logging.level)
    wire_container(settings)
    ctx.call_on_close(unwire_container)

    ctx.obj["verbose"] = verbose
    ctx.obj["structured_logs"] = structured_logs
    ctx.obj["settings"] = settings


@cli.command()
@click.pass_context
def version(ctx: click.Context) -> None:
    """Show version information."""
    console.print(f"[bold blue]collatzlab[/bold blue] version [green]{__version__}[/green]")


@cli.command()
@click.pass_context
@inject
def config(ctx: click.Context, settings: Settings = Provide[Container.settings]) -> None:
    """Show current configuration."""
    table = Table(title="Configuration", show_header=True, header_style="bold magenta")
    table.add_column("Setting", style="cyan", no_wrap=True)
    table.add_column("Value", style="green")

    table.add_row("Step Budget", str(settings.compute.step_budget))
    table.add_row("Level Cap", str(settings.compute.level_cap))
    table.add_row("Trend Cap", str(settings.compute.trend_cap))
    table.add_row("Threads", str(settings.compute.threads))
    table.add_row("Shard Size", str(settings.compute.shard_size))

    cache_status = str(settings.cache.dir) if settings.cache.dir else "❌ Not configured"
    table.add_row("Cache Directory", cache_status)

    for name, value in settings.verify.model_dump().items():
        table.add_row(f"Verify {name.replace('_', ' ').title()}", str(value))

    table.add_row("Log Level", settings.logging.level)
    table.add_row("Structured Logs", str(settings.logging.structured))

    console.print(table)


for command in (traj, rep, seeds, corner, zk, scan, mixing, c2, verify, wirsching, cycle):
    cli.add_command(command)


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point for the CLI."""
    try:
        cli.main(args=argv, prog_name="collatzlab", standalone_mode=False)
    except click.exceptions.Abort:
        err_console.print("\n[yellow]Operation cancelled by user[/yellow]")
        sys.exit(EXIT_USAGE)
    except click.ClickException as e:
        e.show()
        sys.exit(EXIT_USAGE)


if __name__ == "__main__":
    main()
