"""Command-line front end: sequence/triangle emission, verification, OEIS checks."""

import os
import urllib.error
import urllib.request
from importlib import resources
from pathlib import Path

import click

from .bfile import BFile, load_bfile, match_sequence, parse_bfile, render_bfile
from .families import CUSTOM, FamilySpec, load_custom_values
from .report import CheckReport
from .suites import SUITE_NAMES, TRIANGLE_N_CAP, run_suite
from .transforms import family_sequence, family_triangle, triangle_to_csv, triangle_to_tsv

DEFAULT_OEIS_BASE_URL = "https://oeis.org"

_FAMILY_CHOICES = ("row", "diagonal", "central", "central-adjacent", "custom")


def _build_spec(family: str, a: int | None, custom_file: str | None) -> FamilySpec:
    try:
        if family == "custom":
            if custom_file is None:
                raise click.UsageError("--family custom requires --custom-file")
            return load_custom_values(custom_file)
        if family in ("row", "diagonal"):
            if a is None:
                raise click.UsageError(f"--family {family} requires --a")
            return FamilySpec(family, a=a)
        if a is not None:
            raise click.UsageError(f"--family {family} does not take --a")
        return FamilySpec(family)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _check_n_max(n_max: int, minimum: int = 1) -> None:
    if n_max < minimum or n_max > TRIANGLE_N_CAP:
        raise click.UsageError(f"--n-max must be in {minimum}..{TRIANGLE_N_CAP}")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)


def family_options(command):
    decorators = [
        click.option("--family", type=click.Choice(_FAMILY_CHOICES), required=True),
        click.option("--a", type=int, default=None, help="Parameter for row/diagonal families."),
        click.option(
            "--custom-file",
            type=click.Path(exists=True, dir_okay=False),
            default=None,
            help="Custom sequence file: one integer per line, 1-indexed.",
        ),
    ]
    for option in reversed(decorators):
        command = option(command)
    return command


@click.group()
def main():
    """Exact sequence transforms for binomial families, with verification suites."""


@main.command("seq")
@family_options
@click.option("--m", type=int, default=0, show_default=True, help="Invert transform applications.")
@click.option("--n-max", type=int, default=10, show_default=True)
@click.option("--format", "fmt", type=click.Choice(("plain", "csv", "bfile")), default="plain", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_seq(family, a, custom_file, m, n_max, fmt, out):
    """Print the family's sequence after m invert transforms."""
    spec = _build_spec(family, a, custom_file)
    _check_n_max(n_max)
    if m < 0:
        raise click.UsageError("--m must be >= 0")
    try:
        seq = family_sequence(spec, m, n_max)
    except IndexError as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "plain":
        text = "\n".join(str(v) for v in seq.values) + "\n"
    elif fmt == "csv":
        lines = ["n,value"]
        lines += [f"{n},{v}" for n, v in enumerate(seq.values, start=1)]
        text = "\n".join(lines) + "\n"
    else:
        text = render_bfile(BFile(tuple(enumerate(seq.values, start=1))))
    _emit(text, out)


@main.command("table")
@family_options
@click.option("--m", type=int, default=1, show_default=True, help="Triangle level (>= 1).")
@click.option("--n-max", type=int, default=10, show_default=True)
@click.option("--format", "fmt", type=click.Choice(("plain", "csv", "tsv")), default="plain", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_table(family, a, custom_file, m, n_max, fmt, out):
    """Print the level-m convolution triangle."""
    spec = _build_spec(family, a, custom_file)
    _check_n_max(n_max)
    if m < 1:
        raise click.UsageError("--m must be >= 1")
    try:
        triangle = family_triangle(spec, m, n_max)
    except IndexError as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "csv":
        text = triangle_to_csv(triangle)
    elif fmt == "tsv":
        text = triangle_to_tsv(triangle)
    else:
        width = max(
            len(str(v)) for n in range(1, n_max + 1) for v in triangle.row(n)
        )
        text = (
            "\n".join(
                " ".join(str(v).rjust(width) for v in triangle.row(n))
                for n in range(1, n_max + 1)
            )
            + "\n"
        )
    _emit(text, out)


@main.command("verify")
@click.option("--suite", type=click.Choice(SUITE_NAMES), default="all", show_default=True)
@click.option("--n-max", type=int, default=None, help="Override the suite's primary bound.")
@click.option("--format", "fmt", type=click.Choice(("json", "plain")), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def cmd_verify(ctx, suite, n_max, fmt, out):
    """Run a verification suite; exit status 1 if any case fails."""
    if n_max is not None:
        _check_n_max(n_max)
    try:
        report = run_suite(suite, n_max)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(report.to_json() if fmt == "json" else report.to_lines(), out)
    ctx.exit(report.exit_code)


def normalize_anum(anum: str) -> str:
    """Normalize 'A002478' / '002478' / '2478' to canonical 'A002478'."""
    digits = anum.upper().lstrip("A")
    if not digits.isdigit():
        raise click.UsageError(f"bad OEIS number {anum!r}")
    return f"A{int(digits):06d}"


def fetch_bfile_text(anum: str, base_url: str, timeout: float = 30.0) -> str:
    """Download b-file text for the given A-number from an OEIS-style server."""
    url = f"{base_url.rstrip('/')}/{anum}/b{anum[1:]}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as response:
        return response.read().decode("utf-8")


def _locate_bfile(anum, bfile_path, fixtures_dir, fetch, base_url):
    """Return (BFile or None, source description).

    Source precedence: an explicit --bfile path, then the fixtures store
    (--fixtures replaces the vendored one entirely), then a network fetch
    when --fetch allows it.
    """
    if bfile_path is not None:
        return load_bfile(bfile_path), f"file {bfile_path}"
    if anum is None:
        return None, "no --anum or --bfile given"
    name = f"b{anum[1:]}.txt"
    if fixtures_dir is not None:
        candidate = Path(fixtures_dir) / name
        if candidate.exists():
            return load_bfile(candidate), f"fixture {candidate}"
    else:
        packaged = resources.files("pascalwords").joinpath("fixtures", name)
        if packaged.is_file():
            return parse_bfile(packaged.read_text()), f"vendored fixture {name}"
    if fetch:
        try:
            return parse_bfile(fetch_bfile_text(anum, base_url)), f"fetched {anum}"
        except (urllib.error.URLError, OSError) as exc:
            return None, f"fetch of {anum} failed: {exc}"
    store = fixtures_dir if fixtures_dir is not None else "vendored fixtures"
    return None, f"no {name} in {store} and --fetch not given"


@main.command("oeis")
@family_options
@click.option("--m", type=int, default=1, show_default=True)
@click.option("--n-max", type=int, default=20, show_default=True)
@click.option("--anum", type=str, default=None, help="OEIS A-number, e.g. A002478.")
@click.option("--bfile", "bfile_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--fixtures", "fixtures_dir", type=click.Path(file_okay=False), default=None)
@click.option("--fetch", is_flag=True, default=False, help="Allow a network fetch of the b-file.")
@click.option("--format", "fmt", type=click.Choice(("json", "plain")), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def cmd_oeis(ctx, family, a, custom_file, m, n_max, anum, bfile_path, fixtures_dir, fetch, fmt, out):
    """Compare a computed sequence prefix against an OEIS b-file."""
    spec = _build_spec(family, a, custom_file)
    if n_max < 0 or n_max > TRIANGLE_N_CAP:
        raise click.UsageError(f"--n-max must be in 0..{TRIANGLE_N_CAP}")
    if m < 0:
        raise click.UsageError("--m must be >= 0")
    if anum is not None:
        anum = normalize_anum(anum)
    report = CheckReport("oeis")
    target = {"family": spec.label(), "m": m, "anum": anum}
    bf, source = _locate_bfile(
        anum, bfile_path, fixtures_dir, fetch,
        os.environ.get("OEIS_BASE_URL", DEFAULT_OEIS_BASE_URL),
    )
    if n_max == 0:
        report.add_skip("compare_sequence", target, "empty comparison (no terms requested)")
    elif bf is None:
        report.add_skip("compare_sequence", target, f"b-file unavailable: {source}")
    else:
        report.note(f"b-file source: {source}")
        seq = family_sequence(spec, m, n_max)
        match = match_sequence(seq.values, bf)
        if match.empty:
            report.add_skip("compare_sequence", target, "no overlapping indices at any shift")
        else:
            report.note(f"alignment shift {match.shift} (computed index n vs file index n{match.shift:+d})")
            for n, computed, filed in match.compared:
                report.add(
                    "compare_term",
                    {"n": n, "file_index": n + match.shift},
                    filed,
                    computed,
                )
    _emit(report.to_json() if fmt == "json" else report.to_lines(), out)
    ctx.exit(report.exit_code)


if __name__ == "__main__":
    main()
