"""Translation service: shared lexicon and grammars, single and batch calls."""

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .automata import Fsa, compile
from .config import DEFAULT_LEXICON_PATH, DEFAULT_OPTIONS, CasingPolicy
from .errors import EYVPError
from .grammar import Grammar, load_grammar, render_tree, source_grammar, target_grammar
from .lexicon import Lexicon, load_lexicon_file
from .models import Translation, TranslationRecord, TranslationResult
from .text import read_utf8, render
from .transfer import Shape, TransferRule, translate

logger = logging.getLogger("ey-vp.translator")


class Translator:
    """Holds everything a translation needs; safe to share between threads."""

    def __init__(
        self,
        lexicon: Lexicon,
        grammar: Grammar | None = None,
        target: Grammar | None = None,
        rules: dict[Shape, TransferRule] | None = None,
        casing: CasingPolicy = DEFAULT_OPTIONS["casing"],
    ):
        self.lexicon = lexicon
        self.grammar = grammar or source_grammar()
        self.target = target or target_grammar()
        self.target_fsa: Fsa = compile(self.target)
        self.rules = rules
        self.casing = casing

    @classmethod
    def from_paths(
        cls,
        lexicon_path: str | Path | None = None,
        source_grammar_path: str | Path | None = None,
        target_grammar_path: str | Path | None = None,
        casing: CasingPolicy = DEFAULT_OPTIONS["casing"],
    ) -> "Translator":
        """Load the lexicon and optional grammar files from disk."""
        lexicon = load_lexicon_file(lexicon_path or DEFAULT_LEXICON_PATH)
        grammar = target = None
        if source_grammar_path:
            grammar = load_grammar(read_utf8(source_grammar_path))
            logger.info(f"Source grammar: {source_grammar_path}")
        if target_grammar_path:
            target = load_grammar(read_utf8(target_grammar_path))
            logger.info(f"Target grammar: {target_grammar_path}")
        return cls(lexicon, grammar=grammar, target=target, casing=casing)

    def translate(self, text: str) -> Translation:
        """Translate one phrase; raises on failure."""
        return translate(
            text,
            self.lexicon,
            self.grammar,
            self.target_fsa,
            rules=self.rules,
            casing=self.casing,
        )

    def translate_safe(self, text: str) -> TranslationResult:
        """Translate one phrase, reporting failure in the result."""
        try:
            translation = self.translate(text)
        except EYVPError as e:
            logger.debug(f"Failed to translate {text!r}: {e}")
            return TranslationResult(success=False, source=text, error=str(e), w4w=list(e.w4w))
        return TranslationResult(
            success=True,
            source=text,
            translation=translation,
            w4w=list(translation.w4w),
        )

    def translate_batch(self, lines: list[str], jobs: int = 1) -> list[TranslationResult]:
        """Translate many phrases; results come back in input order."""
        logger.info(f"Translating {len(lines)} phrases with {jobs} worker(s)")
        if jobs <= 1:
            return [self.translate_safe(line) for line in lines]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(self.translate_safe, lines))


def to_record(
    result: TranslationResult,
    strip: bool = False,
    show_tree: bool = False,
) -> TranslationRecord:
    """JSON projection of a batch result."""
    record = TranslationRecord(
        source=result.source,
        w4w=[render([w], strip) for w in result.w4w],
        error=result.error,
    )
    translation = result.translation
    if translation is not None:
        record.rule = [render([w], strip) for w in translation.rule]
        record.unknowns = list(translation.unknowns)
        record.tags = [tag.value for tag in translation.tags]
        if show_tree and translation.tree is not None:
            record.tree = render_tree(translation.tree)
    return record
