"""Tokenization, Unicode normalization and output rendering."""

import unicodedata
from pathlib import Path

from .config import STRIP_PUNCTUATION, CasingPolicy
from .errors import EncodingError
from .models import Token

_DROP_PUNCTUATION = str.maketrans("", "", STRIP_PUNCTUATION)


def normalize(text: str) -> str:
    """Return the NFC-composed form of ``text``."""
    return unicodedata.normalize("NFC", text)


def fold(text: str) -> str:
    """Case-folded NFC form of ``text``."""
    return normalize(normalize(text).casefold())


def lookup_key(text: str) -> str:
    """Dictionary key for a surface form: folded, with no punctuation left."""
    return fold(text).translate(_DROP_PUNCTUATION)


def strip_diacritics(text: str) -> str:
    """Remove tone marks and under-dots, keeping the base letters."""
    decomposed = unicodedata.normalize("NFD", text)
    return normalize("".join(c for c in decomposed if not unicodedata.combining(c)))


def tokenize(text: str) -> list[Token]:
    """Split a phrase into tokens.

    Pieces are separated by Unicode whitespace; leading and trailing
    punctuation is stripped from the surface and pieces left empty are
    dropped. Indices count the surviving tokens.
    """
    tokens: list[Token] = []
    for piece in normalize(text).split():
        surface = piece.strip(STRIP_PUNCTUATION)
        if not surface:
            continue
        tokens.append(Token(surface=surface, folded=lookup_key(surface), index=len(tokens)))
    return tokens


def read_utf8(path: str | Path) -> str:
    """Read a data file, naming the line of the first byte that is not UTF-8."""
    path = Path(path)
    raw = path.read_bytes()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise EncodingError(path.name, raw[: e.start].count(b"\n") + 1) from None


def apply_casing(words: list[str], policy: CasingPolicy, source_capitalized: bool) -> list[str]:
    """Case the first output word according to ``policy``."""
    if not words:
        return []
    first = words[0]
    if policy == CasingPolicy.SENTENCE or (policy == CasingPolicy.MIRROR and source_capitalized):
        first = first[:1].upper() + first[1:]
    elif policy == CasingPolicy.LOWER:
        first = first.lower()
    return [first, *words[1:]]


def render(words: list[str] | tuple[str, ...], strip: bool = False) -> str:
    """Join output words with single spaces."""
    joined = " ".join(words)
    return strip_diacritics(joined) if strip else joined


def comparison_key(text: str, strict_diacritics: bool = False) -> str:
    """Form used for exact-match evaluation."""
    key = " ".join(fold(text).split())
    return key if strict_diacritics else strip_diacritics(key)
