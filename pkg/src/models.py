"""Pydantic models for the English to Yorùbá verb-phrase translator."""

import unicodedata
from typing import Literal, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .config import STRIP_PUNCTUATION, PosTag, Slot

# A terminal position in a grammar: a part of speech or the particle slot
TagSymbol = Union[PosTag, Slot]


class Frozen(BaseModel):
    """Immutable, hashable record."""

    model_config = ConfigDict(frozen=True)


class Token(Frozen):
    """One whitespace-separated piece of an input phrase."""

    surface: str = Field(description="Text as written, punctuation stripped")
    folded: str = Field(description="Lowercase NFC lookup form, no punctuation")
    index: int = Field(ge=0, description="0-based position in the phrase")


class LexEntry(Frozen):
    """A single bilingual dictionary entry."""

    source: str = Field(min_length=1, description="English surface form")
    pos: PosTag = Field(description="Part of speech")
    target: str = Field(min_length=1, description="Yorùbá text, may be multiword")

    @field_validator("source")
    @classmethod
    def _check_source(cls, value: str) -> str:
        if any(c.isspace() for c in value):
            raise ValueError(f"source {value!r} must be a single word")
        if any(c in STRIP_PUNCTUATION for c in value):
            raise ValueError(f"source {value!r} contains punctuation")
        if value != unicodedata.normalize("NFC", value.casefold()):
            raise ValueError(f"source {value!r} is not case-folded NFC")
        return value

    @field_validator("target")
    @classmethod
    def _check_target(cls, value: str) -> str:
        if value != value.strip():
            raise ValueError(f"target {value!r} has surrounding whitespace")
        if not unicodedata.is_normalized("NFC", value):
            raise ValueError(f"target {value!r} is not NFC")
        return value


class TaggedToken(Frozen):
    """A token with the part of speech chosen for it."""

    token: Token
    tag: PosTag


# Grammar symbols


class Terminal(Frozen):
    kind: Literal["terminal"] = "terminal"
    tag: TagSymbol

    @property
    def name(self) -> str:
        return self.tag.abbrev

    def __str__(self) -> str:
        return self.name


class Nonterminal(Frozen):
    kind: Literal["nonterminal"] = "nonterminal"
    name: str = Field(min_length=1)

    def __str__(self) -> str:
        return self.name


Symbol = Union[Terminal, Nonterminal]


class Production(Frozen):
    """A rewrite rule ``lhs -> rhs`` with its rank in the grammar."""

    lhs: Nonterminal
    rhs: tuple[Symbol, ...] = Field(min_length=1)
    ordinal: int = Field(ge=0, description="Rank used for tie-breaking")

    @property
    def shape(self) -> tuple[str, tuple[str, ...]]:
        """Ordinal-free identity of the rule."""
        return self.lhs.name, tuple(str(sym) for sym in self.rhs)

    def __str__(self) -> str:
        return f"{self.lhs} -> " + " ".join(str(sym) for sym in self.rhs)


# Parse trees


class Leaf(Frozen):
    kind: Literal["leaf"] = "leaf"
    tagged: TaggedToken

    @property
    def symbol(self) -> Terminal:
        return Terminal(tag=self.tagged.tag)


class ParticleLeaf(Frozen):
    """A target-side literal with no source token behind it."""

    kind: Literal["particle"] = "particle"
    literal: str = Field(min_length=1)

    @property
    def symbol(self) -> Terminal:
        return Terminal(tag=Slot.PRT)


class Node(Frozen):
    kind: Literal["node"] = "node"
    label: Nonterminal
    children: tuple["ParseTree", ...] = Field(min_length=1)
    production: Production

    @property
    def symbol(self) -> Nonterminal:
        return self.label


ParseTree = Union[Leaf, ParticleLeaf, Node]

Node.model_rebuild()


# Translation


class UnknownWord(Frozen):
    surface: str
    index: int


class Translation(Frozen):
    """Both output channels for one phrase."""

    source: str = Field(description="Input text")
    tree: Node | None = Field(default=None, description="Source parse tree")
    target_tree: Node | None = Field(default=None, description="Transferred tree")
    w4w: tuple[str, ...] = Field(default=(), description="Word-for-word channel")
    rule: tuple[str, ...] = Field(default=(), description="Rule-based channel")
    unknowns: tuple[UnknownWord, ...] = Field(default=())
    tags: tuple[TagSymbol, ...] = Field(default=(), description="Target tag sequence")

    @property
    def partial(self) -> bool:
        return bool(self.unknowns)


class TranslationRecord(BaseModel):
    """JSON projection of a translation, one object per phrase."""

    source: str
    w4w: list[str] = Field(default_factory=list)
    rule: list[str] = Field(default_factory=list)
    unknowns: list[UnknownWord] = Field(default_factory=list)
    tags: list[str] = Field(default_factory=list)
    tree: str | None = Field(default=None, description="Nested-bracket tree")
    error: str | None = Field(default=None)


class TranslationResult(BaseModel):
    """Outcome of translating one line of a batch."""

    success: bool = Field(description="Whether the rule channel was produced")
    source: str
    error: str | None = Field(default=None, description="Error message if failed")
    translation: Translation | None = None
    w4w: list[str] = Field(default_factory=list, description="Baseline, even on failure")


# Evaluation


class GoldPair(Frozen):
    source: str = Field(min_length=1, description="English phrase")
    expected: str = Field(min_length=1, description="Reference Yorùbá phrase")


class EvalRecord(BaseModel):
    source: str
    expected: str
    got: str | None = None
    match: bool = False
    unknowns: list[str] = Field(default_factory=list)
    error: str | None = None


class ExcludedPair(BaseModel):
    source: str
    expected: str
    reason: str


class EvalReport(BaseModel):
    """Exact-match evaluation against a gold corpus."""

    total: int = Field(default=0, ge=0)
    matches: int = Field(default=0, ge=0)
    records: list[EvalRecord] = Field(default_factory=list)
    excluded: list[ExcludedPair] = Field(default_factory=list)
    strict_diacritics: bool = False
    total_seconds: float = Field(default=0.0, description="Wall-clock evaluation time")

    @property
    def accuracy(self) -> float | None:
        """Share of exact matches, or None when nothing was scored."""
        if self.total == 0:
            return None
        return self.matches / self.total

    @property
    def passed(self) -> bool:
        return self.total == 0 or self.matches == self.total

    def format_summary(self) -> str:
        accuracy = self.accuracy
        shown = "n/a" if accuracy is None else f"{accuracy:.3f}"
        return (
            f"{self.matches}/{self.total} exact matches, accuracy {shown}, "
            f"{len(self.excluded)} excluded, {self.total_seconds:.3f}s"
        )
