"""Exception hierarchy for the translator."""

from typing import Any


class EYVPError(Exception):
    """Base class for every error raised by this package."""

    # word-for-word output attached by the translator when one was produced
    w4w: tuple[str, ...] = ()


# Lexicon


class LexiconError(EYVPError):
    """A lexicon document could not be loaded."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class MalformedLineError(LexiconError):
    """A lexicon line does not have the expected fields."""


class UnknownPosError(LexiconError):
    """A lexicon line names a part of speech outside the tag set."""

    def __init__(self, token: str, line_no: int):
        self.token = token
        super().__init__(f"unknown part of speech {token!r}", line_no)


class DuplicateEntryError(LexiconError):
    """The same (source, pos) pair is listed twice."""

    def __init__(self, source: str, pos: Any, first_line: int, second_line: int):
        self.source = source
        self.pos = pos
        self.first_line = first_line
        self.second_line = second_line
        super().__init__(
            f"duplicate entry ({source!r}, {getattr(pos, 'value', pos)}) "
            f"first defined on line {first_line}",
            second_line,
        )


# Grammar


class GrammarError(EYVPError):
    """A grammar violates one of its structural invariants."""


class RecursiveGrammarError(GrammarError):
    """A nonterminal can derive itself, so the language is not finite."""

    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__("recursive grammar: " + " -> ".join(cycle))


class GrammarFileError(GrammarError):
    """A grammar file line could not be read."""

    def __init__(self, message: str, line_no: int):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


# Parsing


class ParseError(EYVPError):
    """The input could not be parsed as a verb phrase."""


class UnknownWordError(ParseError):
    """A token has no entry in the lexicon."""

    def __init__(self, surface: str, index: int):
        self.surface = surface
        self.index = index
        super().__init__(f"unknown word {surface!r} at position {index}")


class NoParseError(ParseError):
    """No tag assignment yields a derivation of the whole input."""

    def __init__(self, candidates: list[list[Any]]):
        self.candidates = candidates
        shown = " ".join(
            "{" + ",".join(getattr(tag, "value", str(tag)) for tag in tags) + "}"
            for tags in candidates
        )
        super().__init__(f"no parse for tag candidates {shown}")


# Transfer


class TransferError(EYVPError):
    """A source tree could not be mapped to the target side."""


class UnmappedProductionError(TransferError):
    """The tree uses a production with no transfer rule."""

    def __init__(self, production: Any):
        self.production = production
        super().__init__(f"no transfer rule for {production}")


class TargetShapeError(TransferError):
    """The transferred tag sequence is rejected by the target automaton."""

    def __init__(self, tags: list[Any]):
        self.tags = tags
        shown = " ".join(getattr(tag, "value", str(tag)) for tag in tags)
        super().__init__(f"target automaton rejects {shown}")


# Translation


class TranslationError(EYVPError):
    """Translation failed; the word-for-word channel is still available."""

    def __init__(self, message: str, w4w: tuple[str, ...] = ()):
        self.w4w = tuple(w4w)
        super().__init__(message)


class EmptyInputError(TranslationError):
    """The input contains no tokens."""

    def __init__(self):
        super().__init__("empty input")


# Data files


class EncodingError(EYVPError):
    """A data file is not valid UTF-8."""

    def __init__(self, file_name: str, line_no: int):
        self.file_name = file_name
        self.line_no = line_no
        super().__init__(f"{file_name}: line {line_no} is not valid UTF-8")


class GoldFileError(EYVPError):
    """A gold corpus line could not be read."""

    def __init__(self, message: str, line_no: int):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class AutomatonError(EYVPError):
    """An automaton is malformed or outside the supported class."""


class FsaTableError(AutomatonError):
    """An automaton transition table could not be read."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
