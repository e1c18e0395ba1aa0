"""CLI entry point for the English to Yorùbá verb-phrase translator."""

import logging
import sys
from pathlib import Path

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from .config import (
    CLI_DEFAULT_CASING,
    DEFAULT_EXCLUSIONS_PATH,
    DEFAULT_GOLD_PATH,
    DEFAULT_LEXICON_PATH,
    DEFAULT_OPTIONS,
    CasingPolicy,
    GrammarSide,
    OutputFormat,
    log_data_paths,
)

console = Console()
err_console = Console(stderr=True)

# Exit statuses
EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_TRANSLATION_FAILED = 2


def _fail(message: str) -> None:
    err_console.print(f"[red]Error:[/red] {escape(message)}")
    sys.exit(EXIT_DATA_ERROR)


def lexicon_option(f):
    return click.option(
        "-l", "--lexicon",
        default=str(DEFAULT_LEXICON_PATH),
        type=click.Path(dir_okay=False),
        help="Lexicon TSV (source, pos, target)",
        show_default=True,
    )(f)


def grammar_options(f):
    f = click.option(
        "--target-grammar",
        type=click.Path(dir_okay=False),
        default=None,
        help="Target grammar file (default: built-in Yorùbá VP grammar)",
    )(f)
    f = click.option(
        "--source-grammar",
        type=click.Path(dir_okay=False),
        default=None,
        help="Source grammar file (default: built-in English VP grammar)",
    )(f)
    return f


def casing_option(f):
    return click.option(
        "--casing",
        type=click.Choice([c.value for c in CasingPolicy]),
        default=CLI_DEFAULT_CASING.value,
        help="How to case the first output word",
        show_default=True,
    )(f)


def side_option(f):
    f = click.option("--target", "side", flag_value=GrammarSide.TARGET.value, help="Yorùbá side")(f)
    f = click.option(
        "--source", "side", flag_value=GrammarSide.SOURCE.value, default=True, help="English side (default)"
    )(f)
    return f


def _load_translator(lexicon, source_grammar, target_grammar, casing):
    from .errors import EYVPError
    from .translator import Translator

    try:
        return Translator.from_paths(
            lexicon_path=lexicon,
            source_grammar_path=source_grammar,
            target_grammar_path=target_grammar,
            casing=CasingPolicy(casing),
        )
    except OSError as e:
        _fail(f"cannot read {e.filename}: {e.strerror}")
    except EYVPError as e:
        _fail(str(e))


def _load_grammar(side: str, grammar_file: str | None):
    from .errors import EYVPError
    from .grammar import load_grammar, source_grammar, target_grammar
    from .text import read_utf8

    if grammar_file is None:
        return source_grammar() if side == GrammarSide.SOURCE.value else target_grammar()
    try:
        return load_grammar(read_utf8(grammar_file))
    except OSError as e:
        _fail(f"cannot read {grammar_file}: {e.strerror}")
    except EYVPError as e:
        _fail(str(e))


@click.group()
@click.version_option(version="0.1.0", prog_name="ey-vp")
@click.option(
    "-v", "--verbose",
    is_flag=True,
    help="Enable verbose logging",
)
def cli(verbose):
    """English to Yorùbá verb-phrase translation."""
    if verbose:
        logging.getLogger("ey-vp").setLevel(logging.DEBUG)
        log_data_paths()


@cli.command()
@click.argument("text", required=False)
@lexicon_option
@grammar_options
@click.option(
    "-b", "--batch",
    type=click.Path(dir_okay=False),
    default=None,
    help="Translate every line of this file",
)
@click.option(
    "--format", "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=DEFAULT_OPTIONS["output_format"].value,
    help="Output format",
)
@click.option("--show-tree", is_flag=True, help="Print the source parse tree")
@click.option("--strip-diacritics", is_flag=True, help="Drop tone marks and under-dots")
@click.option("--w4w-only", is_flag=True, help="Only print the word-for-word channel")
@casing_option
@click.option(
    "-j", "--jobs",
    default=DEFAULT_OPTIONS["jobs"],
    type=click.IntRange(min=1),
    help="Worker threads for batch translation",
    show_default=True,
)
def translate(
    text, lexicon, source_grammar, target_grammar, batch, output_format,
    show_tree, strip_diacritics, w4w_only, casing, jobs,
):
    """Translate a verb phrase (or a file of them, one per line).

    With --w4w-only a failed parse is not a failure: only the word-for-word
    channel is reported.
    """
    from .errors import EYVPError, EmptyInputError
    from .text import read_utf8, render, tokenize
    from .translator import to_record

    if batch is None and text is None:
        _fail("give a phrase or --batch FILE")

    if batch is not None:
        try:
            lines = read_utf8(batch).splitlines()
        except OSError as e:
            _fail(f"cannot read {batch}: {e.strerror}")
        except EYVPError as e:
            _fail(str(e))
    else:
        lines = [text]

    translator = _load_translator(lexicon, source_grammar, target_grammar, casing)

    if batch is None and not tokenize(text):
        _fail(str(EmptyInputError()))

    results = translator.translate_batch(lines, jobs=jobs)
    failures = 0
    rule_fields = {"rule", "tags", "tree"}

    for result in results:
        if not result.success and not w4w_only:
            failures += 1

        if output_format == OutputFormat.JSON.value:
            record = to_record(result, strip=strip_diacritics, show_tree=show_tree)
            click.echo(record.model_dump_json(exclude=rule_fields if w4w_only else None))
            continue

        if batch is not None:
            click.echo(f"src: {result.source}")
        click.echo(f"w4w: {render(result.w4w, strip_diacritics)}")
        if w4w_only:
            continue
        if result.success:
            click.echo(f"rule: {render(result.translation.rule, strip_diacritics)}")
            if show_tree:
                from .grammar import render_tree
                click.echo(f"tree: {render_tree(result.translation.tree)}")
            if result.translation.unknowns:
                shown = ", ".join(u.surface for u in result.translation.unknowns)
                click.echo(f"unknown: {shown}")
        else:
            click.echo(f"error: {result.error}")

    if failures:
        err_console.print(f"[yellow]{failures}/{len(results)} phrase(s) failed to translate[/yellow]")
        sys.exit(EXIT_TRANSLATION_FAILED)


@cli.command("eval")
@lexicon_option
@grammar_options
@click.option(
    "-g", "--gold",
    default=str(DEFAULT_GOLD_PATH),
    type=click.Path(dir_okay=False),
    help="Gold TSV (source, expected)",
    show_default=True,
)
@click.option(
    "--exclusions",
    default=str(DEFAULT_EXCLUSIONS_PATH),
    type=click.Path(dir_okay=False),
    help="TSV of gold sources to leave unscored (source, reason)",
    show_default=True,
)
@click.option("--strict-diacritics", is_flag=True, help="Compare tone marks and under-dots too")
@click.option(
    "--format", "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=DEFAULT_OPTIONS["output_format"].value,
    help="Report format",
)
@casing_option
def evaluate_gold(lexicon, source_grammar, target_grammar, gold, exclusions, strict_diacritics, output_format, casing):
    """Score the rule channel against a gold corpus by exact match."""
    from .errors import EYVPError
    from .evaluation import evaluate, load_exclusions_file, load_gold_file

    try:
        pairs = load_gold_file(gold)
        excluded = load_exclusions_file(exclusions)
    except OSError as e:
        _fail(f"cannot read {e.filename}: {e.strerror}")
    except EYVPError as e:
        _fail(str(e))

    translator = _load_translator(lexicon, source_grammar, target_grammar, casing)
    report = evaluate(translator, pairs, excluded, strict_diacritics=strict_diacritics)

    if output_format == OutputFormat.JSON.value:
        click.echo(report.model_dump_json(indent=2))
    else:
        table = Table(title=f"Gold evaluation: {Path(gold).name}")
        table.add_column("Result", justify="center")
        table.add_column("Source", style="cyan")
        table.add_column("Expected")
        table.add_column("Got")

        for record in report.records:
            result_str = "[green]PASS[/green]" if record.match else "[red]FAIL[/red]"
            got = record.got if record.got is not None else f"error: {record.error}"
            table.add_row(result_str, escape(record.source), escape(record.expected), escape(got))
        for pair in report.excluded:
            table.add_row("[yellow]SKIP[/yellow]", escape(pair.source), escape(pair.expected), escape(pair.reason))

        console.print(table)
        console.print(report.format_summary())

    if not report.passed:
        sys.exit(EXIT_TRANSLATION_FAILED)


@cli.command("fsa")
@side_option
@click.option(
    "-o", "--output",
    type=click.Path(dir_okay=False),
    default=None,
    help="Write the transition table here (default: stdout)",
)
@click.option(
    "--grammar-file",
    type=click.Path(dir_okay=False),
    default=None,
    help="Compile this grammar file instead of the built-in one",
)
def fsa_command(side, output, grammar_file):
    """Compile a grammar into its minimal automaton and export the table."""
    from .automata import compile, dump_table, state_count

    fsa = compile(_load_grammar(side, grammar_file))
    table = dump_table(fsa)
    summary = f"{side} automaton: {state_count(fsa)} states, {len(fsa.transitions)} transitions"

    if output is None:
        click.echo(table, nl=False)
        err_console.print(summary)
        return

    try:
        Path(output).write_text(table, encoding="utf-8")
    except OSError as e:
        _fail(f"cannot write {output}: {e.strerror}")
    console.print(summary)
    console.print(f"[green]Wrote {escape(output)}[/green]")


@cli.command("grammar-dump")
@side_option
@click.option(
    "--grammar-file",
    type=click.Path(dir_okay=False),
    default=None,
    help="Dump this grammar file instead of the built-in one",
)
@click.option("--language", "show_language", is_flag=True, help="Also list every derivable tag sequence")
def grammar_dump(side, grammar_file, show_language):
    """Print a grammar's productions (and optionally its language)."""
    from .grammar import derive_all, dump_grammar

    grammar = _load_grammar(side, grammar_file)
    click.echo(dump_grammar(grammar), nl=False)

    if show_language:
        language = sorted(derive_all(grammar), key=lambda seq: (len(seq), [s.value for s in seq]))
        click.echo()
        for sequence in language:
            click.echo(" ".join(symbol.abbrev for symbol in sequence))
        console.print(f"[bold]{len(language)}[/bold] sequences, longest {max(map(len, language), default=0)}")


if __name__ == "__main__":
    cli()
