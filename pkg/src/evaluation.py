"""Exact-match evaluation against a gold corpus."""

import logging
import time
from pathlib import Path

from .errors import EYVPError, GoldFileError
from .models import EvalRecord, EvalReport, ExcludedPair, GoldPair
from .text import comparison_key, normalize, read_utf8, render
from .translator import Translator

logger = logging.getLogger("ey-vp.evaluation")


def _rows(document: str, width: int):
    for line_no, raw in enumerate(document.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        fields = [normalize(field.strip()) for field in raw.split("\t")]
        if len(fields) != width:
            raise GoldFileError(f"expected {width} tab-separated fields, got {len(fields)}", line_no)
        if not all(fields):
            raise GoldFileError("empty field", line_no)
        yield line_no, fields


def load_gold(document: str) -> list[GoldPair]:
    """Read ``source<TAB>expected`` pairs in file order."""
    return [GoldPair(source=src, expected=exp) for _, (src, exp) in _rows(document, 2)]


def load_exclusions(document: str) -> dict[str, str]:
    """Read ``source<TAB>reason`` lines naming gold rows to leave unscored."""
    return {comparison_key(src): reason for _, (src, reason) in _rows(document, 2)}


def load_gold_file(path: str | Path) -> list[GoldPair]:
    return load_gold(read_utf8(path))


def load_exclusions_file(path: str | Path | None) -> dict[str, str]:
    if path is None or not Path(path).exists():
        return {}
    return load_exclusions(read_utf8(path))


def evaluate(
    translator: Translator,
    pairs: list[GoldPair],
    exclusions: dict[str, str] | None = None,
    strict_diacritics: bool = False,
) -> EvalReport:
    """Translate every gold source and compare the rule channel to the reference."""
    exclusions = exclusions or {}
    report = EvalReport(strict_diacritics=strict_diacritics)
    start_time = time.perf_counter()

    for pair in pairs:
        reason = exclusions.get(comparison_key(pair.source))
        if reason is not None:
            logger.warning(f"Excluded gold row {pair.source!r}: {reason}")
            report.excluded.append(ExcludedPair(source=pair.source, expected=pair.expected, reason=reason))
            continue

        record = EvalRecord(source=pair.source, expected=pair.expected)
        try:
            translation = translator.translate(pair.source)
        except EYVPError as e:
            record.error = str(e)
        else:
            record.got = render(translation.rule)
            record.unknowns = [u.surface for u in translation.unknowns]
            record.match = (
                comparison_key(record.got, strict_diacritics)
                == comparison_key(pair.expected, strict_diacritics)
            )

        report.records.append(record)
        report.total += 1
        report.matches += int(record.match)

    report.total_seconds = time.perf_counter() - start_time
    logger.info(f"Evaluation: {report.format_summary()}")
    return report
