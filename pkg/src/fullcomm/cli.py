"""
Command-line interface.

Usage:
    fullcomm enumerate --n 4                 # all 48 FC canonical words of D_4
    fullcomm packets --n 7                   # packet sizes and collection sizes
    fullcomm packets --n 4 --k 4 --format json
    fullcomm verify --n 5 --check bijections,identity
    fullcomm catalan --rows 8

Exit codes: 0 when every check passes, 1 on a verification failure,
2 on usage or resource-limit errors.
"""

from __future__ import annotations

import json
import sys

import click

from .catalan import catalan_closed, catalan_triangle
from .errors import InvalidArgumentError, ResourceLimitError
from .packets import packets, packets_to_csv, packets_to_json
from .suites import CHECKS, run_check
from .weight_graph import DEFAULT_HEIGHT_CAP
from .words import format_word

__all__ = ["cli", "main"]

FORMATS = ("table", "json", "csv")


class VerificationFailed(click.ClickException):
    exit_code = 1


def _check_n(n: int) -> None:
    if n < 4:
        raise click.UsageError("n must be ≥ 4")


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _plural(count: int, noun: str) -> str:
    return f"{count} {noun}" + ("" if count == 1 else "s")


n_option = click.option("--n", "n", type=int, required=True, help="Rank of D_n (at least 4).")
format_option = click.option("--format", "fmt", type=click.Choice(FORMATS), default="table",
                             show_default=True)
out_option = click.option("--out", type=click.Path(dir_okay=False), default=None,
                          help="Write to this file instead of standard output.")


@click.group()
def cli():
    """Fully commutative elements of type D, packets and homogeneous KLR modules."""


@cli.command("enumerate")
@n_option
@format_option
@out_option
def cmd_enumerate(n: int, fmt: str, out: str | None):
    """List the homogeneous canonical words of D_n with their packet labels."""
    _check_n(n)
    if fmt == "json":
        _emit(packets_to_json(n), out)
        return
    if fmt == "csv":
        _emit(packets_to_csv(n), out)
        return
    lines = ["k\tsuffix\tword"]
    total = 0
    for p in packets(n):
        for c in p.collections:
            for w in c.words:
                lines.append(f"{p.k}\t{format_word(c.suffix.word)}\t{format_word(w)}")
                total += 1
    lines.append(f"total {total}")
    _emit("\n".join(lines), out)


@cli.command("packets")
@n_option
@click.option("--k", "k", type=int, default=None, help="List the words of this packet.")
@format_option
@out_option
def cmd_packets(n: int, k: int | None, fmt: str, out: str | None):
    """Packet sizes |P(n,k)| and collection sizes; with --k, the full packet."""
    _check_n(n)
    if k is not None and not 0 <= k <= n:
        raise click.UsageError(f"k must lie in 0..{n}")
    if fmt == "json":
        _emit(packets_to_json(n, k), out)
        return
    if fmt == "csv":
        _emit(packets_to_csv(n, k), out)
        return
    lines = []
    all_packets = packets(n)
    if k is None:
        for p in all_packets:
            sizes = sorted(set(p.collection_sizes))
            each = _plural(sizes[0], "word") if len(sizes) == 1 else f"{sizes} words"
            lines.append(f"k={p.k}: {_plural(p.size, 'collection')} × {each}")
        lines.append("packet sizes: " + ",".join(str(p.size) for p in all_packets))
    else:
        p = all_packets[k]
        lines.append(f"P({n},{k}): {_plural(p.size, 'collection')}")
        for c in p.collections:
            lines.append(f"c[{format_word(c.suffix.word)}] ({_plural(len(c), 'word')})")
            lines.extend("  " + format_word(w) for w in c.words)
    _emit("\n".join(lines), out)


def _parse_checks(value: str) -> list[str]:
    names = [v.strip() for v in value.split(",") if v.strip()]
    if "all" in names:
        return list(CHECKS)
    bad = [v for v in names if v not in CHECKS]
    if bad or not names:
        raise click.UsageError(f"unknown check(s) {bad}; choose from {', '.join(CHECKS)}")
    # keep the canonical order so output does not depend on how flags were typed
    return [c for c in CHECKS if c in names]


@cli.command("verify")
@n_option
@click.option("--check", "checks", default="counts,packets,bijections,identity",
              show_default=True, help=f"Comma-separated subset of: {', '.join(CHECKS)}, or 'all'.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table",
              show_default=True)
@out_option
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True,
              help="Worker processes for the KLR suite.")
@click.option("--height-cap", type=click.IntRange(min=1), default=DEFAULT_HEIGHT_CAP,
              show_default=True, help="Largest weight-graph height to enumerate.")
def cmd_verify(n: int, checks: str, fmt: str, out: str | None, jobs: int, height_cap: int):
    """Run verification suites; exit 1 if any fails."""
    _check_n(n)
    selected = _parse_checks(checks)
    try:
        results = [run_check(name, n, jobs=jobs, height_cap=height_cap) for name in selected]
    except (ResourceLimitError, InvalidArgumentError) as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "json":
        payload = {"n": n, "ok": all(r.ok for r in results),
                   "checks": {r.name: r.to_json() for r in results}}
        _emit(json.dumps(payload, indent=2), out)
    else:
        lines = []
        for r in results:
            lines.append(f"{r.name}: {'PASS' if r.ok else 'FAIL'}")
            lines.extend("  " + line for line in r.lines)
        _emit("\n".join(lines), out)
    failed = [r.name for r in results if not r.ok]
    if failed:
        raise VerificationFailed(f"failed checks: {', '.join(failed)}")


@cli.command("catalan")
@click.option("--rows", type=int, required=True, help="Number of rows (n = 0 .. rows-1).")
@out_option
def cmd_catalan(rows: int, out: str | None):
    """Print Catalan's triangle, cross-checking the additive rule against the closed form."""
    if rows < 1:
        raise click.UsageError("rows must be ≥ 1")
    table = catalan_triangle(rows)
    mismatches = [
        (n, k) for n, row in enumerate(table) for k, v in enumerate(row)
        if v != catalan_closed(n, k)
    ]
    _emit("\n".join(" ".join(str(v) for v in row) for row in table), out)
    if mismatches:
        raise VerificationFailed(f"methods disagree at {mismatches[:5]}")


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, prog_name="fullcomm", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
