"""Command line interface.

Subcommands: ``chi`` (one chromatic number plus a witness coloring),
``spectrum`` (full spectra over switching classes), ``classes`` (switching
class representatives), ``critical`` (criticality certificate, optional
subgraph extraction), ``verify`` (recompute and check a whole corpus).

Exit codes: 0 on success, 1 for unreadable or malformed input and usage
errors, 2 when a verified claim fails (a non-interval spectrum or an
out-of-range deletion certificate), which indicates a bug rather than an
unusual input.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .coloring import MODELS, Palette, chromatic_number, find_coloring
from .core import TheoremViolationError
from .critical import extract_critical_subgraph, is_critical
from .formats import (
    FormatError,
    _csv_escape,
    emit_report,
    load_corpus,
    sign_string,
)
from .spectrum import chromatic_spectrum, signature_class_representatives
from .verify import verify_corpus


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _source_name(source: str) -> str:
    return "stdin" if source == "-" else Path(source).stem


def _write_output(text: str, output: str) -> None:
    if output == "-":
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _models(choice: str) -> tuple[str, ...]:
    return MODELS if choice == "both" else (choice,)


def _model_option(f):
    return click.option(
        "--model", "model", type=click.Choice(["cyclic", "symmetric", "both"]),
        default="both", show_default=True, help="Coloring model(s) to run.",
    )(f)


def _format_option(f):
    return click.option(
        "--format", "fmt", type=click.Choice(["json", "csv"]),
        default="json", show_default=True, help="Record format.",
    )(f)


def _output_option(f):
    return click.option(
        "--output", "output", default="-", show_default=True,
        help="Write records to this path instead of stdout.",
    )(f)


def _jobs_option(f):
    return click.option(
        "--jobs", "jobs", type=click.IntRange(min=1), default=1,
        envvar="SGSPEC_JOBS", show_default=True, show_envvar=True,
        help="Worker processes for class evaluation.",
    )(f)


def _max_cotree_option(f):
    return click.option(
        "--max-cotree", "max_cotree", type=click.IntRange(min=0), default=20,
        show_default=True,
        help="Refuse graphs whose co-tree exceeds this many edges.",
    )(f)


@click.group(name="sgspec")
def cli() -> None:
    """Chromatic numbers and spectra of signed graphs under switching."""


@cli.command(name="chi")
@click.argument("source")
@_model_option
@_format_option
@_output_option
def chi_command(source: str, model: str, fmt: str, output: str) -> None:
    """Chromatic number of each input signed graph, with a witness coloring.

    SOURCE is a signed edge list or a graph6 corpus ('-' for stdin);
    graph6 entries are taken all-positive.
    """
    entries = load_corpus(_read_source(source), name=_source_name(source))
    lines: list[str] = []
    if fmt == "csv":
        lines.append("id,model,chi,coloring\n")
    for entry in entries:
        sg = entry.signed()
        for m in _models(model):
            k = chromatic_number(sg, m)
            if k == 0:
                witness: tuple[int, ...] = ()
            else:
                witness = find_coloring(sg, Palette(m, k))
            if fmt == "json":
                record = {
                    "id": entry.id,
                    "model": m,
                    "chi": k,
                    "coloring": list(witness),
                }
                lines.append(json.dumps(record, separators=(",", ":")) + "\n")
            else:
                cell = ";".join(str(c) for c in witness)
                lines.append(f"{entry.id},{m},{k},{cell}\n")
    _write_output("".join(lines), output)


@cli.command(name="spectrum")
@click.argument("source")
@_model_option
@_format_option
@_jobs_option
@_max_cotree_option
@_output_option
def spectrum_command(
    source: str, model: str, fmt: str, jobs: int, max_cotree: int, output: str
) -> None:
    """Chromatic spectrum over all switching classes of each input graph."""
    entries = load_corpus(_read_source(source), name=_source_name(source))
    lines: list[str] = []
    gaps: list[str] = []
    first = True
    for entry in entries:
        for m in _models(model):
            report = chromatic_spectrum(
                entry.graph, m, jobs=jobs, max_cotree=max_cotree
            )
            lines.append(
                emit_report(report, fmt, entry_id=entry.id, header=first)
            )
            first = False
            if not report.interval_ok:
                gaps.append(f"{entry.id}/{m}")
    _write_output("".join(lines), output)
    if gaps:
        raise TheoremViolationError(
            f"spectrum with gaps for: {', '.join(gaps)}"
        )


@cli.command(name="classes")
@click.argument("source")
@_format_option
@_max_cotree_option
@_output_option
def classes_command(source: str, fmt: str, max_cotree: int, output: str) -> None:
    """Enumerate one canonical signature per switching class."""
    entries = load_corpus(_read_source(source), name=_source_name(source))
    lines: list[str] = []
    if fmt == "csv":
        lines.append("id,count,signatures\n")
    for entry in entries:
        reps = signature_class_representatives(entry.graph, max_cotree=max_cotree)
        strings = [sign_string(s) for s in reps]
        if fmt == "json":
            record = {"id": entry.id, "count": len(strings), "signatures": strings}
            lines.append(json.dumps(record, separators=(",", ":")) + "\n")
        else:
            lines.append(f"{entry.id},{len(strings)},{';'.join(strings)}\n")
    _write_output("".join(lines), output)


@cli.command(name="critical")
@click.argument("source")
@_model_option
@_format_option
@click.option(
    "--extract", "extract", type=click.IntRange(min=1), default=None,
    help="Also extract an induced I-critical subgraph.", metavar="I",
)
@_output_option
def critical_command(
    source: str, model: str, fmt: str, extract: int | None, output: str
) -> None:
    """Criticality certificate for each input signed graph.

    With --extract I, also reports the vertices of an induced i-critical
    subgraph (original indices). graph6 entries are taken all-positive.
    """
    entries = load_corpus(_read_source(source), name=_source_name(source))
    lines: list[str] = []
    extraction_lines: list[str] = []
    first = True
    for entry in entries:
        sg = entry.signed()
        for m in _models(model):
            _, certificate = is_critical(sg, m)
            lines.append(
                emit_report(certificate, fmt, entry_id=entry.id, header=first)
            )
            first = False
            if extract is not None:
                vertices = extract_critical_subgraph(sg, extract, m)
                if fmt == "json":
                    record = {
                        "id": entry.id,
                        "model": m,
                        "i": extract,
                        "vertices": list(vertices),
                    }
                    extraction_lines.append(
                        json.dumps(record, separators=(",", ":")) + "\n"
                    )
                else:
                    cell = ";".join(str(v) for v in vertices)
                    extraction_lines.append(f"{entry.id},{m},{extract},{cell}\n")
    if extraction_lines and fmt == "csv":
        extraction_lines.insert(0, "id,model,i,vertices\n")
    _write_output("".join(lines + extraction_lines), output)


@cli.command(name="verify")
@click.argument("source")
@_model_option
@_format_option
@_jobs_option
@_max_cotree_option
@_output_option
def verify_command(
    source: str, model: str, fmt: str, jobs: int, max_cotree: int, output: str
) -> None:
    """Recompute spectra for a corpus and machine-check every claim.

    Checks per graph: spectra are gap-free intervals, the closed-form
    minimum matches enumeration, attained values above the construction
    threshold have their predecessor attained, the two models differ by at
    most 1 on every class, and all single-vertex deletion certificates stay
    in {k, k-1}. Any violation makes the command exit with status 2.
    """
    entries = load_corpus(_read_source(source), name=_source_name(source))
    results = verify_corpus(
        entries,
        _models(model),
        certificates=True,
        max_cotree=max_cotree,
        jobs=jobs,
    )
    lines: list[str] = []
    if fmt == "csv":
        lines.append("id,vertices,edges,classes,violations\n")
    bad = 0
    for result in results:
        classes = result.summaries[0].class_count if result.summaries else 0
        if not result.ok:
            bad += 1
        if fmt == "json":
            record = {
                "id": result.entry_id,
                "vertices": result.vertex_count,
                "edges": result.edge_count,
                "classes": classes,
                "models": [
                    {
                        "model": s.model,
                        "m": s.m,
                        "M": s.M,
                        "spectrum": list(s.spectrum),
                        "interval_ok": s.interval_ok,
                    }
                    for s in result.summaries
                ],
                "violations": list(result.violations),
            }
            lines.append(json.dumps(record, separators=(",", ":")) + "\n")
        else:
            cell = ";".join(result.violations)
            lines.append(
                f"{result.entry_id},{result.vertex_count},"
                f"{result.edge_count},{classes},{_csv_escape(cell)}\n"
            )
    _write_output("".join(lines), output)
    click.echo(
        f"verified {len(results)} entries, {bad} with violations", err=True
    )
    if bad:
        raise TheoremViolationError(f"{bad} entries have violations")


def main(argv: list[str] | None = None) -> int:
    """Entry point mapping exceptions onto the documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except TheoremViolationError as exc:
        click.echo(f"theorem violation: {exc}", err=True)
        return 2
    except (FormatError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
