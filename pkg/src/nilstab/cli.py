"""Command line interface.

Exit codes: 0 when every requested check passes, 1 when a mathematical
check or certificate fails, 2 for unparseable input or bad usage.  Every
command is deterministic given its inputs and seed; rerunning writes
byte-identical output.
"""

from __future__ import annotations

import json
import sys

import click

from . import catalog
from .cohomology import cocycle_check, skinny_check
from .errors import NilstabError, NotCoprime, ParseError
from .obstruction import certify_nonperturbability
from .representation import defect
from .validation import DEFAULT_SEED, make_rng, sample_coords


def _usage_guard(fn, *args, **kwargs):
    """Run a resolver, translating bad input into usage errors (exit 2)."""
    try:
        return fn(*args, **kwargs)
    except (ParseError, FileNotFoundError, IsADirectoryError) as exc:
        raise click.UsageError(str(exc)) from exc


def _parse_n_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.UsageError(f"bad matrix size list {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise click.UsageError("matrix sizes must be positive integers")
    return values


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@click.group()
@click.version_option(package_name="nilstab")
def main():
    """Asymptotic representations of nilpotent groups and their certificates."""


@main.command()
@click.option("--group", "group_src", required=True,
              help="Builtin name (lattice:m, heisenberg3) or JSON document path.")
@click.option("--cocycle", "cocycle_src", default=None,
              help="Optional cocycle to check: builtin name or JSON path.")
@click.option("--samples", default=None, type=int,
              help="Sample count (default 200 for groups, 500 for cocycles).")
@click.option("--bound", default=3, type=int, show_default=True,
              help="Coordinate bound for sampled elements.")
@click.option("--seed", default=DEFAULT_SEED, type=int, show_default=True)
@click.option("--grid/--no-grid", default=False,
              help="Check the cocycle identity on the full [-2,2] grid.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
@click.option("--out", "out_path", default=None, type=click.Path(dir_okay=False),
              help="Write the report here instead of stdout.")
def validate(group_src, cocycle_src, samples, bound, seed, grid, fmt, out_path):
    """Validate a group law and, optionally, a cocycle on it."""
    group = _usage_guard(catalog.resolve_group, group_src)
    try:
        reports = [group.validate(samples=samples or 200, bound=bound, seed=seed)]
        if cocycle_src:
            sigma = _usage_guard(catalog.resolve_cocycle, cocycle_src, group)
            reports.append(
                cocycle_check(
                    sigma, samples=samples or 500, bound=bound, seed=seed, grid=grid
                )
            )
            reports.append(
                skinny_check(sigma, samples=samples or 500, bound=bound, seed=seed)
            )
    except click.UsageError:
        raise
    except NilstabError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    if fmt == "json":
        text = json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True)
        text += "\n"
    else:
        text = "\n".join(r.summary() for r in reports) + "\n"
    _emit(text, out_path)
    sys.exit(0 if all(r.ok for r in reports) else 1)


@main.command()
@click.option("--group", "group_src", required=True)
@click.option("--cocycle", "cocycle_src", required=True)
@click.option("--cycle", "cycle_src", required=True,
              help="Builtin name (voiculescu, heisenberg_c1) or JSON path.")
@click.option("--n", "n_text", default="16,32,64,128", show_default=True,
              help="Comma-separated matrix sizes.")
@click.option("--seed", default=DEFAULT_SEED, type=int, show_default=True)
@click.option("--out", "out_path", default=None, type=click.Path(dir_okay=False))
def certify(group_src, cocycle_src, cycle_src, n_text, seed, out_path):
    """Emit a JSON non-perturbability certificate for a cocycle and cycle."""
    group = _usage_guard(catalog.resolve_group, group_src)
    sigma = _usage_guard(catalog.resolve_cocycle, cocycle_src, group)
    chain = _usage_guard(catalog.resolve_cycle, cycle_src, group)
    n_list = _parse_n_list(n_text)
    try:
        report = certify_nonperturbability(group, sigma, chain, n_list, seed=seed)
    except NilstabError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    text = json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"
    _emit(text, out_path)
    sys.exit(0)


@main.command()
@click.option("--group", "group_src", required=True)
@click.option("--cocycle", "cocycle_src", required=True)
@click.option("--n", "n_text", default="16,32,64,128,256", show_default=True)
@click.option("--samples", default=20, type=int, show_default=True,
              help="Number of sampled (x, y) pairs.")
@click.option("--bound", default=3, type=int, show_default=True)
@click.option("--seed", default=DEFAULT_SEED, type=int, show_default=True)
@click.option("--out", "out_path", default=None, type=click.Path(dir_okay=False))
def sweep(group_src, cocycle_src, n_text, samples, bound, seed, out_path):
    """Tabulate multiplicativity defects and their bounds as CSV."""
    group = _usage_guard(catalog.resolve_group, group_src)
    sigma = _usage_guard(catalog.resolve_cocycle, cocycle_src, group)
    n_list = _parse_n_list(n_text)
    rng = make_rng(seed)
    pairs = [
        (sample_coords(rng, group.hirsch, bound), sample_coords(rng, group.hirsch, bound))
        for _ in range(samples)
    ]
    lines = ["n,x,y,sigma_xy,frob_defect,frob_bound,op_defect,op_bound,status"]
    failed = False
    for n in n_list:
        for x, y in pairs:
            x_text = ";".join(str(c) for c in x)
            y_text = ";".join(str(c) for c in y)
            try:
                row = defect(sigma, n, x, y)
            except NotCoprime:
                lines.append(
                    f"{n},{x_text},{y_text},{sigma(x, y)},,,,,skipped:not_coprime"
                )
                continue
            except NilstabError as exc:
                click.echo(f"error: {exc}", err=True)
                failed = True
                continue
            lines.append(
                f"{n},{x_text},{y_text},{row.sigma_xy},"
                f"{row.frobenius!r},{row.frobenius_bound!r},"
                f"{row.operator!r},{row.operator_bound!r},ok"
            )
    _emit("\n".join(lines) + "\n", out_path)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
