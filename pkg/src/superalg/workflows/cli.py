"""Command line interface for superalg."""

import json
from collections.abc import Callable
from enum import Enum
from pathlib import Path
from typing import Any, Optional

import sympy
import typer
from loguru import logger
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from superalg.definitions import (
    CACHE_ENV_VAR,
    CACHE_FORMAT_VERSION,
    DEFAULT_CACHE_PATH,
    DEFAULT_MAX_ITERATIONS,
)
from superalg.diagrams import SvgStyle, cup_diagram, render_svg, render_text, weight_diagram
from superalg.errors import SuperalgError
from superalg.grothendieck import SupportCache, cache_load, cache_store, decompose
from superalg.invariants import atypicality_matrix, block_coordinates
from superalg.kacfactors import kac_composition_factors, kac_irr_mult
from superalg.kl import gen_kl, mult_kac_in_irrd, s_set
from superalg.tasks.inputs import dump_module, load_module, parse_weight_argument, parse_window
from superalg.weights import Weight

app = typer.Typer(
    help="Weight combinatorics, Kazhdan-Lusztig polynomials and characters of gl(m|n)",
    no_args_is_help=True,
)
console = Console(soft_wrap=True, highlight=False)
err_console = Console(stderr=True, soft_wrap=True, highlight=False)


class OutputFormat(str, Enum):
    json = "json"
    pretty = "pretty"
    svg = "svg"
    latex = "latex"


OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="Write the result to this file")
FORMAT_HELP = "Output format: {}"


def _choose_format(
    requested: OutputFormat | None, allowed: tuple[OutputFormat, ...]
) -> OutputFormat:
    """First entry of `allowed` is the command default."""
    if requested is None:
        return allowed[0]
    if requested not in allowed:
        choices = ", ".join(f.value for f in allowed)
        raise typer.BadParameter(
            f"'{requested.value}' is not available here, choose from {choices}",
            param_hint="'--format'",
        )
    return requested


def _dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)


def _emit(text: str, output: Path | None):
    if output is None:
        typer.echo(text)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text + "\n", encoding="utf-8")
    logger.info(f"Wrote {output}")


def _run(action: Callable[[], None]):
    """Run a command body, mapping library errors onto exit codes."""
    try:
        action()
    except SuperalgError as e:
        err_console.print(f"[red]Error:[/red] {escape(str(e))}")
        raise typer.Exit(code=e.exit_code)


@app.callback()
def configure(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
):
    """Set up logging for every command; diagnostics go to stderr."""
    logger.remove()
    logger.add(
        lambda msg: err_console.print(msg, end="", markup=False),
        format="<level>{level: <8}</level> | {message}",
        level="DEBUG" if verbose else "WARNING",
    )


def _invariants_payload(weight: Weight) -> dict:
    coords = block_coordinates(weight)
    return {
        "weight": weight.to_dict(),
        "shape": list(weight.shape),
        "rho_translate": weight.rho().to_dict(),
        "atypical_roots": [list(pair) for pair in weight.atypical_roots],
        "adeg": coords.r,
        "atypicality_matrix": [list(row) for row in atypicality_matrix(weight)],
        "typ": [list(coords.typ0), list(coords.typ1)],
        "atyp": list(coords.atyp),
        "height": list(weight.height),
        "cr": {str(s): list(ts) for s, ts in weight.cr.items()},
        "scr": {str(s): list(ts) for s, ts in weight.scr.items()},
    }


@app.command()
def invariants(
    weight: str = typer.Argument(..., help="Weight as 'a,b|c,d', WeightJson, @file or '-'"),
    format: Optional[OutputFormat] = typer.Option(
        None, "--format", "-f", help=FORMAT_HELP.format("json (default), pretty, latex")
    ),
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Show atypical roots, block coordinates and the height vector of a dominant weight.

    Examples:

        superalg invariants "7,6,5,5,3,3,2,2,0|1,2,3,4,4,5,7,7"
    """
    fmt = _choose_format(format, (OutputFormat.json, OutputFormat.pretty, OutputFormat.latex))

    def action():
        w = parse_weight_argument(weight)
        payload = _invariants_payload(w)
        if fmt is OutputFormat.json:
            _emit(_dumps(payload), output)
        elif fmt is OutputFormat.latex:
            _emit(w.to_latex(), output)
        elif output is not None:
            _emit("\n".join(f"{k}: {v}" for k, v in payload.items()), output)
        else:
            table = Table(title=str(w), show_header=False)
            table.add_column("invariant", style="bold")
            table.add_column("value")
            table.add_row("ρ-translate", w.rho().format_padded())
            table.add_row("atypical roots", ", ".join(map(str, w.atypical_roots)) or "none")
            table.add_row("degree", str(payload["adeg"]))
            table.add_row("typ", str(tuple(map(tuple, payload["typ"]))))
            table.add_row("atyp", str(tuple(payload["atyp"])))
            table.add_row("height", str(tuple(payload["height"])))
            console.print(table)
            console.print("Atypicality matrix:")
            for row in payload["atypicality_matrix"]:
                console.print(" ".join(f"{x:>4}" for x in row))

    _run(action)


@app.command()
def diagram(
    weight: str = typer.Argument(..., help="Weight as 'a,b|c,d', WeightJson, @file or '-'"),
    format: Optional[OutputFormat] = typer.Option(
        None, "--format", "-f", help=FORMAT_HELP.format("pretty (default), svg, json")
    ),
    window: Optional[str] = typer.Option(None, "--window", help="Positions to draw, as A:B"),
    cups: bool = typer.Option(True, "--cups/--no-cups", help="Draw the cup diagram arcs"),
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Draw the weight diagram or cup diagram of a dominant weight."""
    fmt = _choose_format(format, (OutputFormat.pretty, OutputFormat.svg, OutputFormat.json))

    def action():
        w = parse_weight_argument(weight)
        d = cup_diagram(w) if cups else weight_diagram(w)
        bounds = parse_window(window) if window else None
        if fmt is OutputFormat.svg:
            _emit(render_svg(d, style=SvgStyle(), window=bounds), output)
        elif fmt is OutputFormat.json:
            _emit(_dumps(d.to_dict()), output)
        else:
            _emit(render_text(d, window=bounds), output)

    _run(action)


@app.command()
def kl(
    lam: str = typer.Argument(..., help="Upper weight λ"),
    mu: str = typer.Argument(..., help="Lower weight μ"),
    format: Optional[OutputFormat] = typer.Option(
        None, "--format", "-f", help=FORMAT_HELP.format("pretty (default), json, latex")
    ),
    permutations: bool = typer.Option(
        False, "--permutations", "-p", help="Also list the contributing permutations"
    ),
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Compute the generalized Kazhdan-Lusztig polynomial K_{λ,μ}(q)."""
    fmt = _choose_format(format, (OutputFormat.pretty, OutputFormat.json, OutputFormat.latex))

    def action():
        upper, lower = parse_weight_argument(lam), parse_weight_argument(mu)
        poly = gen_kl(upper, lower)
        value = poly(-1)
        if fmt is OutputFormat.latex:
            _emit(sympy.latex(poly.to_sympy()), output)
            return
        perms = s_set(upper, lower) if (permutations or fmt is OutputFormat.json) else ()
        if fmt is OutputFormat.json:
            payload = {
                "lambda": upper.to_dict(),
                "mu": lower.to_dict(),
                "polynomial": poly.to_json().model_dump(),
                "value_at_minus_one": value,
                "s_set": [list(sigma.images) for sigma in perms],
            }
            _emit(_dumps(payload), output)
            return
        lines = [f"K(q) = {poly}", f"K(-1) = {value}"]
        if permutations:
            lines += [f"  {sigma}  length {sigma.length}" for sigma in perms]
        _emit("\n".join(lines), output)

    _run(action)


@app.command()
def mult(
    lam: str = typer.Argument(..., help="Upper weight λ"),
    mu: str = typer.Argument(..., help="Lower weight μ"),
    format: Optional[OutputFormat] = typer.Option(
        None, "--format", "-f", help=FORMAT_HELP.format("pretty (default), json")
    ),
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Report b = K_{λ,μ}(-1) and a = [K(λ) : L(μ)]."""
    fmt = _choose_format(format, (OutputFormat.pretty, OutputFormat.json))

    def action():
        upper, lower = parse_weight_argument(lam), parse_weight_argument(mu)
        b = mult_kac_in_irrd(upper, lower)
        a = kac_irr_mult(upper, lower)
        if fmt is OutputFormat.json:
            _emit(_dumps({"b": b, "a": a}), output)
        else:
            _emit(f"b = K(-1) = {b}\na = [K(λ) : L(μ)] = {a}", output)

    _run(action)


@app.command()
def factors(
    weight: str = typer.Argument(..., help="Highest weight λ of the Kac module"),
    format: Optional[OutputFormat] = typer.Option(
        None, "--format", "-f", help=FORMAT_HELP.format("json (default), pretty, latex")
    ),
    slack: Optional[int] = typer.Option(
        None, "--slack", min=0, help="Initial room below atyp₁ - r (default r)"
    ),
    rho_display: bool = typer.Option(False, "--rho", help="Show ρ-translates of the factors"),
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    List the composition factors of the Kac module K(λ).

    Examples:

        superalg factors "2,1,1,0,0|0,0,1,3,3,4" -f pretty

        superalg factors "8,5,5,3,3,2,2|2,3,4,4,5,9" --rho -f pretty
    """
    fmt = _choose_format(format, (OutputFormat.json, OutputFormat.pretty, OutputFormat.latex))

    def action():
        w = parse_weight_argument(weight)
        found = kac_composition_factors(w, slack=slack)
        shown = [f.rho() for f in found] if rho_display else list(found)
        if fmt is OutputFormat.json:
            _emit(_dumps([f.to_dict() for f in shown]), output)
        elif fmt is OutputFormat.latex:
            _emit(" \\\\\n".join(f.to_latex() for f in shown), output)
        else:
            width = max(len(str(x)) for f in shown for x in (*f.L, *f.R))
            lines = [f"{i:2}: {f.format_padded(width)}" for i, f in enumerate(shown, start=1)]
            _emit("\n".join(lines), output)

    _run(action)


@app.command(name="decompose")
def decompose_command(
    module: str = typer.Argument(..., help="Module character as JSON, @file, a path or '-'"),
    format: Optional[OutputFormat] = typer.Option(
        None, "--format", "-f", help=FORMAT_HELP.format("json (default), pretty")
    ),
    cache_path: Optional[Path] = typer.Option(
        None, "--cache", envvar=CACHE_ENV_VAR, help="Support cache file, created if missing"
    ),
    max_iterations: int = typer.Option(
        DEFAULT_MAX_ITERATIONS, "--max-iterations", min=1, help="Cap on peeling steps"
    ),
    threads: int = typer.Option(1, "--threads", min=1, help="Worker threads per character"),
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Decompose a g₀-character into irreducible gl(m|n)-characters."""
    fmt = _choose_format(format, (OutputFormat.json, OutputFormat.pretty))

    def action():
        character = load_module(module)
        cache = None
        if cache_path is not None:
            cache = cache_load(cache_path) if cache_path.exists() else SupportCache()
        try:
            result = decompose(
                character, cache=cache, max_iterations=max_iterations, threads=threads
            )
        finally:
            if cache is not None and cache.dirty:
                cache_store(cache, cache_path)
        if fmt is OutputFormat.json:
            _emit(dump_module(result), output)
        else:
            lines = [f"{c:+d} L{w.format_padded()}" for w, c in result.sorted_items()]
            _emit("\n".join(lines) or "0", output)

    _run(action)


@app.command(name="cache-info")
def cache_info(
    cache_path: Optional[Path] = typer.Option(
        None, "--cache", envvar=CACHE_ENV_VAR, help="Support cache file"
    ),
    format: Optional[OutputFormat] = typer.Option(
        None, "--format", "-f", help=FORMAT_HELP.format("pretty (default), json")
    ),
):
    """Summarize a support cache file."""
    fmt = _choose_format(format, (OutputFormat.pretty, OutputFormat.json))

    def action():
        path = cache_path if cache_path is not None else DEFAULT_CACHE_PATH
        cache = cache_load(path)
        bounded = cache.bounded_count
        summary = {
            "path": str(path),
            "version": CACHE_FORMAT_VERSION,
            "entries": len(cache),
            "bounded": bounded,
            "unbounded": len(cache) - bounded,
        }
        if fmt is OutputFormat.json:
            typer.echo(_dumps(summary))
            return
        console.print(f"[green]✓[/green] Support cache at {path}")
        console.print(f"  Version:    {summary['version']}")
        console.print(f"  Entries:    {summary['entries']:,}")
        console.print(f"  Bounded:    {bounded:,}")
        console.print(f"  Unbounded:  {summary['unbounded']:,}")

    _run(action)


def main():
    """Main entry point for the superalg command."""
    app()


if __name__ == "__main__":
    main()
