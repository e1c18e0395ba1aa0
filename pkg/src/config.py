"""Configuration and constants for the English to Yorùbá verb-phrase translator."""

import logging
import os
from enum import Enum
from pathlib import Path

# Setup logging
logging.basicConfig(
    level=logging.INFO,
    format="[%(levelname)s] %(name)s: %(message)s"
)
logger = logging.getLogger("ey-vp")

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent.resolve()

# Shipped data (lexicon, gold corpus, extra grammars)
DATA_DIR = PROJECT_ROOT / "data"
GRAMMARS_DIR = DATA_DIR / "grammars"

DEFAULT_LEXICON_PATH = Path(
    os.environ.get("EY_VP_LEXICON", str(DATA_DIR / "lexicon.tsv"))
)
DEFAULT_GOLD_PATH = Path(
    os.environ.get("EY_VP_GOLD", str(DATA_DIR / "gold.tsv"))
)
DEFAULT_EXCLUSIONS_PATH = Path(
    os.environ.get("EY_VP_EXCLUSIONS", str(DATA_DIR / "gold_exclusions.tsv"))
)


def log_data_paths() -> None:
    """Log where the data files are read from."""
    logger.debug(f"Lexicon: {DEFAULT_LEXICON_PATH}")
    logger.debug(f"Gold corpus: {DEFAULT_GOLD_PATH}")
    logger.debug(f"Exclusions: {DEFAULT_EXCLUSIONS_PATH}")


# Domain label used when a lexicon file carries no "# domain:" header
DEFAULT_DOMAIN = "home"


class PosTag(str, Enum):
    """Parts of speech a lexicon entry can carry."""
    VERB = "verb"
    NOUN = "noun"
    DET = "det"
    ADJ = "adj"
    PREP = "prep"
    PRON = "pron"

    @property
    def abbrev(self) -> str:
        return POS_ABBREVIATIONS[self]


class Slot(str, Enum):
    """Target-side positions that no part of speech covers."""
    PRT = "prt"

    @property
    def abbrev(self) -> str:
        return "PRT"


class OutputFormat(str, Enum):
    """Output format options."""
    TEXT = "text"
    JSON = "json"


class CasingPolicy(str, Enum):
    """How the first output word is cased."""
    MIRROR = "mirror"
    SENTENCE = "sentence"
    LOWER = "lower"


class GrammarSide(str, Enum):
    """Which side of the translation a grammar describes."""
    SOURCE = "source"
    TARGET = "target"


# Candidate order when a word is listed under several parts of speech
TAG_PRIORITY = [
    PosTag.VERB,
    PosTag.DET,
    PosTag.PREP,
    PosTag.ADJ,
    PosTag.NOUN,
    PosTag.PRON,
]

# Grammar-file terminal names
POS_ABBREVIATIONS = {
    PosTag.VERB: "V",
    PosTag.NOUN: "N",
    PosTag.DET: "DET",
    PosTag.ADJ: "ADJ",
    PosTag.PREP: "P",
    PosTag.PRON: "PRON",
}
TERMINAL_NAMES = {
    **{abbrev: tag for tag, abbrev in POS_ABBREVIATIONS.items()},
    "PRT": Slot.PRT,
}

# Tag names accepted in the lexicon TSV (matched case-insensitively)
POS_ALIASES = {
    "verb": PosTag.VERB,
    "v": PosTag.VERB,
    "noun": PosTag.NOUN,
    "n": PosTag.NOUN,
    "det": PosTag.DET,
    "determiner": PosTag.DET,
    "adj": PosTag.ADJ,
    "adjective": PosTag.ADJ,
    "prep": PosTag.PREP,
    "preposition": PosTag.PREP,
    "p": PosTag.PREP,
    "pron": PosTag.PRON,
    "pronoun": PosTag.PRON,
}

# Stripped from both ends of every whitespace-separated piece
STRIP_PUNCTUATION = ".,;:!?\"'()"

# Literal particles transfer rules may insert
PARTICLES = frozenset({"ni"})
DITRANSITIVE_PARTICLE = "ni"

DEFAULT_START_SYMBOL = "VP"

# Default translation options
DEFAULT_OPTIONS = {
    "casing": CasingPolicy.MIRROR,
    "output_format": OutputFormat.TEXT,
    "jobs": 1,
}

# The command line capitalizes the first output word
CLI_DEFAULT_CASING = CasingPolicy.SENTENCE
