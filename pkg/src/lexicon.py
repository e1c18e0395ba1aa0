"""Bilingual English to Yorùbá dictionary grouped by part of speech."""

import logging
from pathlib import Path

from pydantic import PrivateAttr, ValidationError

from .config import DEFAULT_DOMAIN, POS_ALIASES, TAG_PRIORITY, PosTag
from .errors import DuplicateEntryError, MalformedLineError, UnknownPosError
from .models import Frozen, LexEntry
from .text import lookup_key, normalize, read_utf8

logger = logging.getLogger("ey-vp.lexicon")

DOMAIN_HEADER = "domain:"


def _sort_key(entry: LexEntry) -> tuple[str, int]:
    return entry.source, TAG_PRIORITY.index(entry.pos)


class Lexicon(Frozen):
    """Immutable dictionary keyed by (source, pos).

    The same source may appear under several parts of speech, and distinct
    sources may share a target, so there is no reverse lookup.
    """

    entries: tuple[LexEntry, ...] = ()
    domain: str = DEFAULT_DOMAIN

    _index: dict[tuple[str, PosTag], str] = PrivateAttr(default_factory=dict)
    _tags: dict[str, list[PosTag]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        index: dict[tuple[str, PosTag], str] = {}
        positions: dict[tuple[str, PosTag], int] = {}
        tags: dict[str, set[PosTag]] = {}
        for position, entry in enumerate(self.entries, start=1):
            key = (entry.source, entry.pos)
            if key in index:
                raise DuplicateEntryError(entry.source, entry.pos, positions[key], position)
            index[key] = entry.target
            positions[key] = position
            tags.setdefault(entry.source, set()).add(entry.pos)
        self._index = index
        self._tags = {
            source: [tag for tag in TAG_PRIORITY if tag in found]
            for source, found in tags.items()
        }

    @classmethod
    def from_entries(cls, entries, domain: str = DEFAULT_DOMAIN) -> "Lexicon":
        """Build a lexicon in canonical entry order."""
        return cls(entries=tuple(sorted(entries, key=_sort_key)), domain=domain)

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, surface: str, pos: PosTag) -> str | None:
        """Target text for ``surface`` read as ``pos``, or None."""
        return self._index.get((lookup_key(surface), pos))

    def tag_candidates(self, surface: str) -> list[PosTag]:
        """Every tag ``surface`` is listed under, in priority order."""
        return list(self._tags.get(lookup_key(surface), []))

    def entries_for(self, pos: PosTag) -> list[LexEntry]:
        return [entry for entry in self.entries if entry.pos == pos]

    def dump(self) -> str:
        """Serialize as TSV that ``load_lexicon`` reads back."""
        lines = [f"# {DOMAIN_HEADER} {self.domain}"]
        lines.extend(f"{e.source}\t{e.pos.value}\t{e.target}" for e in self.entries)
        return "\n".join(lines) + "\n"


def _parse_pos(token: str, line_no: int) -> PosTag:
    pos = POS_ALIASES.get(token.strip().lower())
    if pos is None:
        raise UnknownPosError(token, line_no)
    return pos


def load_lexicon(document: str) -> Lexicon:
    """Load a lexicon from TSV text.

    Each non-empty line that does not start with ``#`` holds
    ``source<TAB>pos<TAB>target``. Sources are case-folded with punctuation
    removed; sources and targets are stored NFC. A ``# domain: <label>``
    comment sets the domain.
    """
    domain = DEFAULT_DOMAIN
    entries: list[LexEntry] = []
    seen: dict[tuple[str, PosTag], int] = {}

    for line_no, raw in enumerate(document.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        if line.lstrip().startswith("#"):
            comment = line.lstrip()[1:].strip()
            if comment.lower().startswith(DOMAIN_HEADER):
                domain = comment[len(DOMAIN_HEADER):].strip() or DEFAULT_DOMAIN
            continue

        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedLineError(f"expected 3 tab-separated fields, got {len(fields)}", line_no)

        source = lookup_key(fields[0].strip())
        pos = _parse_pos(fields[1], line_no)
        target = normalize(fields[2].strip())
        if not source or any(c.isspace() for c in source):
            raise MalformedLineError(f"source {fields[0]!r} must be a single word", line_no)
        if not target:
            raise MalformedLineError("empty target", line_no)

        key = (source, pos)
        if key in seen:
            raise DuplicateEntryError(source, pos, seen[key], line_no)
        seen[key] = line_no
        try:
            entries.append(LexEntry(source=source, pos=pos, target=target))
        except ValidationError as e:
            raise MalformedLineError(e.errors()[0]["msg"], line_no) from None

    lexicon = Lexicon.from_entries(entries, domain=domain)
    logger.debug(f"Loaded {len(lexicon)} lexicon entries (domain: {domain})")
    return lexicon


def load_lexicon_file(path: str | Path) -> Lexicon:
    """Read and load a UTF-8 lexicon file."""
    path = Path(path)
    lexicon = load_lexicon(read_utf8(path))
    logger.info(f"Lexicon {path.name}: {len(lexicon)} entries")
    return lexicon
