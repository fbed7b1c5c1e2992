"""Command-line interface: verify, simulate, eval and report.

Exit codes: 0 all checks passed, 1 at least one relation failed,
2 usage, parse or IO error. Malformed input files never produce a
traceback, only a diagnostic on stderr and exit code 2. Output for
identical inputs is byte-identical.

The default corpus and constants are embedded in the package, so
``fluctuverse verify`` works with zero files; ``--corpus`` and
``--constants`` override them, and the FLUCTUVERSE_CONSTANTS environment
variable is a fallback for the constants path.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field

import click

from .errors import FluctuverseError
from .evolution import CosmoParams, Variant, evolve, states_to_csv, states_to_records
from .quantity import Quantity, TIME
from .registry import ConstantsRegistry, load_constants
from .relations import Relation, eval_expr, load_default_corpus, parse, parse_relation_file
from .report import (
    build_report,
    render_report_text,
    render_verify_csv,
    render_verify_text,
    verify_relations,
    verify_row_dicts,
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    """One resolved CLI invocation."""

    command: str
    corpus_path: str | None = None
    constants_path: str | None = None
    output_format: str = "text"
    tol_scale: float = 1.0
    t_end: float | None = None
    steps: int = 100
    variant: Variant = Variant.EXACT
    expression: str = ""


def _load_inputs(cfg: RunConfig) -> tuple[ConstantsRegistry, list[Relation]]:
    reg = load_constants(cfg.constants_path)
    if cfg.corpus_path is None:
        relations = load_default_corpus()
    else:
        with open(cfg.corpus_path, encoding="utf-8") as fh:
            relations = parse_relation_file(fh.read())
    return reg, relations


def run_verify(cfg: RunConfig) -> tuple[int, str]:
    reg, relations = _load_inputs(cfg)
    checked = verify_relations(relations, reg, cfg.tol_scale)
    if cfg.output_format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "relations": verify_row_dicts(checked),
            "all_passed": all(res.passed for _, res in checked),
        }
        out = json.dumps(payload, indent=2) + "\n"
    elif cfg.output_format == "csv":
        out = render_verify_csv(checked)
    else:
        out = render_verify_text(checked)
    code = 0 if all(res.passed for _, res in checked) else 1
    return code, out


def run_simulate(cfg: RunConfig) -> tuple[int, str]:
    reg = load_constants(cfg.constants_path)
    params = CosmoParams.defaults(reg, variant=cfg.variant)
    states = evolve(params, Quantity(cfg.t_end, TIME), cfg.steps)
    if cfg.output_format == "json":
        return 0, json.dumps(states_to_records(states), indent=2) + "\n"
    return 0, states_to_csv(states)


def run_eval(cfg: RunConfig) -> tuple[int, str]:
    reg = load_constants(cfg.constants_path)
    result = eval_expr(parse(cfg.expression), reg)
    unit = result.dim.unit_string()
    if cfg.output_format == "json":
        payload = {"schema_version": SCHEMA_VERSION, "value": result.value, "unit": unit}
        return 0, json.dumps(payload, indent=2) + "\n"
    return 0, f"{result.value:.6e} {unit}\n"


def run_report(cfg: RunConfig) -> tuple[int, str]:
    reg, relations = _load_inputs(cfg)
    doc = build_report(reg, relations, cfg.tol_scale, cfg.variant)
    if cfg.output_format == "json":
        return 0, json.dumps(doc, indent=2) + "\n"
    return 0, render_report_text(doc)


def _execute(runner, cfg: RunConfig) -> None:
    try:
        code, out = runner(cfg)
    except (FluctuverseError, OSError, UnicodeDecodeError) as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)
    click.echo(out, nl=False)
    sys.exit(code)


_constants_option = click.option(
    "--constants",
    "constants_path",
    type=click.Path(),
    default=None,
    envvar="FLUCTUVERSE_CONSTANTS",
    help="Constants file overriding the embedded defaults "
    "(or set FLUCTUVERSE_CONSTANTS).",
)
_corpus_option = click.option(
    "--corpus",
    "corpus_path",
    type=click.Path(),
    default=None,
    help="Relation corpus file replacing the embedded default corpus.",
)
_tol_scale_option = click.option(
    "--tol-scale",
    type=float,
    default=1.0,
    show_default=True,
    help="Multiply every relation tolerance, for sensitivity sweeps.",
)


@click.group()
@click.version_option(package_name="fluctuverse")
def main():
    """Units-aware verification engine for a fluctuational-cosmology model."""


@main.command()
@_corpus_option
@_constants_option
@click.option("--format", "output_format", type=click.Choice(["text", "json", "csv"]),
              default="text", show_default=True)
@_tol_scale_option
def verify(corpus_path, constants_path, output_format, tol_scale):
    """Check every relation in the corpus; exit 0 only if all pass."""
    cfg = RunConfig(
        command="verify",
        corpus_path=corpus_path,
        constants_path=constants_path,
        output_format=output_format,
        tol_scale=tol_scale,
    )
    _execute(run_verify, cfg)


@main.command()
@_constants_option
@click.option("--t-end", type=float, required=True, help="End time of the run, seconds.")
@click.option("--steps", type=click.IntRange(min=2), default=100, show_default=True,
              help="Number of equal integration steps (at least 2).")
@click.option("--variant", type=click.Choice([v.value for v in Variant]),
              default=Variant.EXACT.value, show_default=True,
              help="Closed form of the creation law to integrate against.")
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
def simulate(constants_path, t_end, steps, variant, output_format):
    """Integrate the particle-creation law and stream the epoch table."""
    cfg = RunConfig(
        command="simulate",
        constants_path=constants_path,
        output_format=output_format,
        t_end=t_end,
        steps=steps,
        variant=Variant(variant),
    )
    _execute(run_simulate, cfg)


@main.command("eval")
@click.argument("expression")
@_constants_option
@click.option("--format", "output_format", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
def eval_command(expression, constants_path, output_format):
    """Evaluate an expression against the registry, e.g. "sqrt(hbar*c/G)"."""
    cfg = RunConfig(
        command="eval",
        constants_path=constants_path,
        output_format=output_format,
        expression=expression,
    )
    _execute(run_eval, cfg)


@main.command()
@_corpus_option
@_constants_option
@click.option("--format", "output_format", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
@_tol_scale_option
@click.option("--variant", type=click.Choice([v.value for v in Variant]),
              default=Variant.EXACT.value, show_default=True,
              help="Creation-law variant for the present-epoch summary.")
def report(corpus_path, constants_path, output_format, tol_scale, variant):
    """Emit the full document: constants, relation verdicts, scales, epoch."""
    cfg = RunConfig(
        command="report",
        corpus_path=corpus_path,
        constants_path=constants_path,
        output_format=output_format,
        tol_scale=tol_scale,
        variant=Variant(variant),
    )
    _execute(run_report, cfg)


if __name__ == "__main__":
    main()
