"""Shared fixtures: the shipped lexicon, built-in grammars and their automata."""

import pytest

from src.automata import compile
from src.config import DEFAULT_LEXICON_PATH, PosTag
from src.grammar import source_grammar, target_grammar
from src.lexicon import Lexicon, load_lexicon_file
from src.models import LexEntry
from src.translator import Translator

# One word per tag, each with a single one-word target
SYNTHETIC_WORDS = {
    PosTag.VERB: "vb",
    PosTag.NOUN: "nn",
    PosTag.DET: "dt",
    PosTag.ADJ: "jj",
    PosTag.PREP: "pp",
    PosTag.PRON: "pr",
}


def realize(sequence) -> str:
    """A phrase whose only tag reading is ``sequence``."""
    return " ".join(SYNTHETIC_WORDS[tag] for tag in sequence)


@pytest.fixture(scope="session")
def lexicon() -> Lexicon:
    return load_lexicon_file(DEFAULT_LEXICON_PATH)


@pytest.fixture(scope="session")
def synthetic_lexicon() -> Lexicon:
    return Lexicon.from_entries(
        LexEntry(source=word, pos=tag, target=word.upper()) for tag, word in SYNTHETIC_WORDS.items()
    )


@pytest.fixture(scope="session")
def source_fsa():
    return compile(source_grammar())


@pytest.fixture(scope="session")
def target_fsa():
    return compile(target_grammar())


@pytest.fixture(scope="session")
def translator(lexicon) -> Translator:
    return Translator(lexicon)
