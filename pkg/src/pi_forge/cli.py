"""
Command-line interface for pi-forge.

Commands:
- pi: Certified value of one 1/π series
- combine: Certified value of a normalized combination
- identity: Exact sweep of IV1, IV2 or IV3
- gamma-quotient: Optimal-truncation diagnostics of the formal expansion
- wronskian: Wronskian cross-check of the truncated Bessel series
- leibniz: Exact check of the alternating-series hypotheses
- schema: JSON schema of an output record

Exit codes: 0 success, 1 usage or domain error, 2 precision exhausted,
3 identity falsified.

Example:
    $ pi-forge pi --m 0 --k 2 --target-rel-err 1e-12
    $ pi-forge identity --id iv2 --m-max 50 --k-max 100 --format csv
    $ pi-forge gamma-quotient --nu 1/4 --k-range 5:40
    $ pi-forge --config config/local.toml identity --id iv1
"""

from __future__ import annotations

import sys
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any, TypeVar, cast

import click
from pydantic import ValidationError
from rich.console import Console

from pi_forge import __version__
from pi_forge.arith import NuParam, PrecisionContext, parse_rational
from pi_forge.config import Settings, get_settings, load_settings
from pi_forge.errors import PiForgeError, PrecisionExhausted
from pi_forge.export import EXPORT_FORMATS, ExportFormat, emit_records, write_records
from pi_forge.family import (
    CombinationSpec,
    FamilyParams,
    eval_combination,
    eval_family,
    leibniz_check,
)
from pi_forge.identities import sweep
from pi_forge.models import IdentityId, OutputRecord
from pi_forge.series import gamma_quotient_expansion, wronskian_check
from pi_forge.utils.logging import bind_context, configure_from_settings, get_logger

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECISION = 2
EXIT_FALSIFIED = 3

F = TypeVar("F", bound=Callable[..., Any])

console = Console(stderr=True)


class CommandError(click.ClickException):
    """A library error surfaced with its exit code."""

    def __init__(self, message: str, exit_code: int = EXIT_USAGE) -> None:
        super().__init__(message)
        self.exit_code = exit_code


class PiForgeGroup(click.Group):
    """Click group that reports usage errors with exit code 1."""

    def main(self, *args: Any, **kwargs: Any) -> Any:
        standalone = kwargs.pop("standalone_mode", True)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as e:
            if not standalone:
                raise
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            if not standalone:
                raise
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            if not standalone:
                raise
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        if not standalone:
            return rv
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


def _error_message(error: Exception) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(
            str(detail["msg"]).removeprefix("Value error, ") for detail in error.errors()
        )
    return str(error)


@contextmanager
def _library_errors() -> Iterator[None]:
    """Translate library exceptions into CLI exit codes."""
    try:
        yield
    except PrecisionExhausted as e:
        raise CommandError(str(e), EXIT_PRECISION) from e
    except (PiForgeError, ValueError) as e:
        raise CommandError(_error_message(e), EXIT_USAGE) from e


def _output_options(func: F) -> F:
    """--format and --out, shared by every record-emitting command."""
    func = click.option(
        "--out",
        "out",
        type=click.Path(dir_okay=False, path_type=Path),
        help="Write records to this file instead of stdout",
    )(func)
    func = click.option(
        "--format",
        "output_format",
        type=click.Choice(EXPORT_FORMATS, case_sensitive=False),
        default=None,
        help="Output format (default from settings: json)",
    )(func)
    return func


def _precision_options(func: F) -> F:
    """--target-rel-err and --prec-bits."""
    func = click.option(
        "--prec-bits",
        type=click.IntRange(min=16),
        default=None,
        help="Target precision in bits (default 256, env PI_FORGE_PREC_BITS)",
    )(func)
    func = click.option(
        "--target-rel-err",
        type=str,
        default=None,
        help="Relative error target, e.g. 1e-30 or 1/1000",
    )(func)
    return func


def _settings(ctx: click.Context) -> Settings:
    settings: Settings = ctx.obj["settings"]
    return settings


def _context(ctx: click.Context, prec_bits: int | None) -> PrecisionContext:
    return _settings(ctx).precision_context(prec_bits)


def _emit(
    ctx: click.Context,
    records: Sequence[OutputRecord],
    output_format: str | None,
    out: Path | None,
    title: str,
) -> None:
    fmt = (output_format or _settings(ctx).output.format).lower()
    if fmt not in EXPORT_FORMATS:
        raise CommandError(f"Unsupported format: {fmt}")
    export_format = cast(ExportFormat, fmt)
    if out is not None:
        path = write_records(records, out, export_format)
        console.print(
            f"Wrote [green]{len(records):,}[/green] {title} record(s) to [cyan]{path}[/cyan]"
        )
        return
    emit_records(records, export_format, click.get_text_stream("stdout"), title=title)


def _target_text(ctx: click.Context, target_rel_err: str | None) -> str:
    return target_rel_err or repr(_settings(ctx).evaluation.target_rel_err)


def _max_terms(ctx: click.Context, max_terms: int | None) -> int:
    return _settings(ctx).evaluation.max_terms if max_terms is None else max_terms


@click.group(cls=PiForgeGroup)
@click.version_option(version=__version__, prog_name="pi-forge")
@click.option(
    "--config",
    "-c",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Path to a TOML configuration file",
)
@click.option(
    "--verbose",
    "-v",
    is_flag=True,
    help="Enable verbose logging on stderr",
)
@click.pass_context
def main(ctx: click.Context, config: Path | None, verbose: bool) -> None:
    """pi-forge: 1/π series, gamma-quotient expansions and binomial identities.

    Records go to stdout (JSON Lines by default), logs to stderr.
    """
    ctx.ensure_object(dict)

    settings = load_settings(config_path=config) if config else get_settings()
    ctx.obj["settings"] = settings
    ctx.obj["verbose"] = verbose

    configure_from_settings(settings.logging, level="DEBUG" if verbose else None)


@main.command("pi")
@click.option("--m", "m", type=int, default=0, show_default=True, help="Series index m >= 0")
@click.option("--k", "k", type=int, default=2, show_default=True, help="Series index k >= 2")
@click.option("--max-terms", type=click.IntRange(min=4), default=None, help="Cap on exact terms")
@_precision_options
@_output_options
@click.pass_context
def pi_command(
    ctx: click.Context,
    m: int,
    k: int,
    max_terms: int | None,
    target_rel_err: str | None,
    prec_bits: int | None,
    output_format: str | None,
    out: Path | None,
) -> None:
    """Evaluate one series of the 1/π family with a remainder bound."""
    bind_context(command="pi")
    target = _target_text(ctx, target_rel_err)
    with _library_errors():
        pctx = _context(ctx, prec_bits)
        report = eval_family(
            FamilyParams(m=m, k=k), target, pctx, max_terms=_max_terms(ctx, max_terms)
        )

    record = OutputRecord(
        command="pi",
        parameters={
            "m": str(m),
            "k": str(k),
            "target_rel_err": target,
            "prec_bits": str(pctx.precision_bits),
        },
        results=report.to_record(),
    )
    _emit(ctx, [record], output_format, out, "pi")


@main.command("combine")
@click.option(
    "--weights",
    required=True,
    help="Comma-separated k:re[±imi] entries, e.g. 2:1+5i,4:-3",
)
@click.option("--max-terms", type=click.IntRange(min=4), default=None, help="Cap on exact terms")
@_precision_options
@_output_options
@click.pass_context
def combine_command(
    ctx: click.Context,
    weights: str,
    max_terms: int | None,
    target_rel_err: str | None,
    prec_bits: int | None,
    output_format: str | None,
    out: Path | None,
) -> None:
    """Evaluate a normalized combination Σ α_k f_k / Σ α_k of the m = 0 series."""
    bind_context(command="combine")
    target = _target_text(ctx, target_rel_err)
    with _library_errors():
        spec = CombinationSpec.parse(weights)
        pctx = _context(ctx, prec_bits)
        report = eval_combination(spec, target, pctx, max_terms=_max_terms(ctx, max_terms))

    record = OutputRecord(
        command="combine",
        parameters={
            "weights": str(spec),
            "target_rel_err": target,
            "prec_bits": str(pctx.precision_bits),
        },
        results=report.to_record(),
    )
    _emit(ctx, [record], output_format, out, "combine")


@main.command("identity")
@click.option(
    "--id",
    "identity_id",
    type=click.Choice([i.value.lower() for i in IdentityId], case_sensitive=False),
    required=True,
    help="Identity to certify",
)
@click.option("--m-max", type=click.IntRange(min=0), default=None, help="Upper bound on m")
@click.option("--k-max", type=click.IntRange(min=0), default=None, help="Upper bound on k")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker processes")
@click.option(
    "--exploratory",
    is_flag=True,
    help="IV3 only: also evaluate k < m (marked non-normative)",
)
@_output_options
@click.pass_context
def identity_command(
    ctx: click.Context,
    identity_id: str,
    m_max: int | None,
    k_max: int | None,
    workers: int | None,
    exploratory: bool,
    output_format: str | None,
    out: Path | None,
) -> None:
    """Certify an identity exactly over 0 ≤ m ≤ m-max, 0 ≤ k ≤ k-max.

    IV3 is swept over k ≥ m only. Exits with 3 if any certificate fails.
    """
    bind_context(command="identity", identity_id=identity_id.upper())
    defaults = _settings(ctx).sweep
    with _library_errors():
        run = sweep(
            identity_id,
            defaults.m_max if m_max is None else m_max,
            defaults.k_max if k_max is None else k_max,
            workers=defaults.workers if workers is None else workers,
            exploratory=exploratory,
        )

    parameters = {
        "id": run.identity_id.value,
        "m_max": str(run.m_max),
        "k_max": str(run.k_max),
    }
    records = [
        OutputRecord(command="identity", parameters=parameters, results=report.to_record())
        for report in run.reports
    ]
    _emit(ctx, records, output_format, out, "identity")

    if not run.all_hold:
        logger = get_logger(__name__)
        for failure in run.failures:
            counterexample = OutputRecord(
                command="identity", parameters=parameters, results=failure.to_record()
            )
            click.echo(f"Falsified: {counterexample.model_dump_json()}", err=True)
        logger.error("identity_falsified", **run.summary_dict())
        ctx.exit(EXIT_FALSIFIED)


def _parse_k_range(text: str) -> range:
    head, sep, tail = text.partition(":")
    try:
        if not sep:
            raise ValueError
        start, stop = int(head), int(tail)
    except ValueError as e:
        raise click.BadParameter(f"expected A:B with integers A <= B, got {text!r}") from e
    if start < 0 or stop < start:
        raise click.BadParameter(f"expected 0 <= A <= B, got {text!r}")
    return range(start, stop + 1)


@main.command("gamma-quotient")
@click.option("--nu", required=True, help="Order ν as p/q, e.g. 1/4 or -3/2")
@click.option("--k", "k", type=click.IntRange(min=0), default=None, help="Single k")
@click.option("--k-range", default=None, help="Inclusive range A:B of k")
@click.option("--max-terms", type=click.IntRange(min=1), default=None, help="Terms to generate")
@click.option("--prec-bits", type=click.IntRange(min=16), default=None, help="Precision in bits")
@_output_options
@click.pass_context
def gamma_quotient_command(
    ctx: click.Context,
    nu: str,
    k: int | None,
    k_range: str | None,
    max_terms: int | None,
    prec_bits: int | None,
    output_format: str | None,
    out: Path | None,
) -> None:
    """Diagnose the formal expansion of Γ(ν+1)/Γ(ν+k+1/2) at optimal truncation."""
    bind_context(command="gamma-quotient")
    if (k is None) == (k_range is None):
        raise click.UsageError("Give exactly one of --k and --k-range")
    ks = range(k, k + 1) if k is not None else _parse_k_range(k_range or "")
    if max_terms is None:
        max_terms = _settings(ctx).evaluation.expansion_terms

    with _library_errors():
        param = NuParam.of(nu).require_admissible()
        pctx = _context(ctx, prec_bits)
        diagnostics = [gamma_quotient_expansion(param, kk, max_terms, pctx) for kk in ks]

    records = [
        OutputRecord(
            command="gamma-quotient",
            parameters={
                "nu": str(param),
                "k": str(diag.k),
                "max_terms": str(max_terms),
                "prec_bits": str(pctx.precision_bits),
            },
            results=diag.to_record(),
        )
        for diag in diagnostics
    ]
    _emit(ctx, records, output_format, out, "gamma-quotient")


@main.command("wronskian")
@click.option("--nu", required=True, help="Order ν as p/q")
@click.option("--z", "z", required=True, help="Argument z > 0 as p/q or decimal")
@click.option("--trunc-k", type=click.IntRange(min=0), default=None, help="Last K index kept")
@click.option("--trunc-i", type=click.IntRange(min=0), default=None, help="Last I index kept")
@click.option("--prec-bits", type=click.IntRange(min=16), default=None, help="Precision in bits")
@_output_options
@click.pass_context
def wronskian_command(
    ctx: click.Context,
    nu: str,
    z: str,
    trunc_k: int | None,
    trunc_i: int | None,
    prec_bits: int | None,
    output_format: str | None,
    out: Path | None,
) -> None:
    """Deviation of z·W{K_ν, I_ν} from 1 on the truncated e^z-scaled series."""
    bind_context(command="wronskian")
    with _library_errors():
        param = NuParam.of(nu).require_admissible()
        zq = parse_rational(z)
        pctx = _context(ctx, prec_bits)
        report = wronskian_check(param, zq, trunc_k, trunc_i, pctx)

    record = OutputRecord(
        command="wronskian",
        parameters={"nu": str(param), "z": str(zq), "prec_bits": str(pctx.precision_bits)},
        results=report.to_record(),
    )
    _emit(ctx, [record], output_format, out, "wronskian")


@main.command("leibniz")
@click.option("--m", "m", type=int, default=0, show_default=True, help="Series index m >= 0")
@click.option("--k", "k", type=int, default=2, show_default=True, help="Series index k >= 2")
@click.option("--n-max", type=click.IntRange(min=0), default=None, help="Last n (default m+200)")
@_output_options
@click.pass_context
def leibniz_command(
    ctx: click.Context,
    m: int,
    k: int,
    n_max: int | None,
    output_format: str | None,
    out: Path | None,
) -> None:
    """Check exactly that terms alternate and decrease for m < n ≤ n-max.

    Exits with 3 if any index violates the hypotheses.
    """
    bind_context(command="leibniz")
    with _library_errors():
        params = FamilyParams(m=m, k=k)
    last = params.m + 200 if n_max is None else n_max
    violations = leibniz_check(params, last)

    record = OutputRecord(
        command="leibniz",
        parameters={"m": str(m), "k": str(k), "n_max": str(last)},
        results={
            "indices_checked": max(0, last - params.m),
            "violations": len(violations),
            "first_violation": violations[0] if violations else None,
            "holds": not violations,
        },
    )
    _emit(ctx, [record], output_format, out, "leibniz")
    if violations:
        ctx.exit(EXIT_FALSIFIED)


@main.command("schema")
def schema_command() -> None:
    """Print the JSON schema of an output record."""
    click.echo(OutputRecord.json_schema_text())


if __name__ == "__main__":
    main()
