import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from src.config import PosTag
from src.errors import DuplicateEntryError, MalformedLineError, UnknownPosError
from src.lexicon import Lexicon, load_lexicon
from src.models import LexEntry


def test_shipped_lexicon(lexicon):
    assert lexicon.domain == "home"
    assert lexicon.lookup("father", PosTag.NOUN) == "bàbá"
    assert lexicon.lookup("Father", PosTag.NOUN) == "bàbá"
    assert lexicon.lookup("the", PosTag.DET) == "nàà"
    assert lexicon.lookup("father", PosTag.VERB) is None
    assert lexicon.lookup("spaceship", PosTag.NOUN) is None


def test_multiword_target(lexicon):
    assert lexicon.lookup("bedroom", PosTag.NOUN) == "Yara Ibusun"


def test_tag_candidates_follow_priority(lexicon):
    assert lexicon.tag_candidates("water") == [PosTag.VERB, PosTag.NOUN]
    assert lexicon.tag_candidates("clean") == [PosTag.VERB, PosTag.ADJ]
    assert lexicon.tag_candidates("the") == [PosTag.DET]
    assert lexicon.tag_candidates("spaceship") == []


def test_shared_targets_are_allowed(lexicon):
    assert lexicon.lookup("cold", PosTag.ADJ) == lexicon.lookup("fresh", PosTag.ADJ)


def test_entries_for(lexicon):
    determiners = {e.source for e in lexicon.entries_for(PosTag.DET)}
    assert determiners == {"the", "a"}


def test_load_folds_source_and_composes_target():
    lexicon = load_lexicon("Father\tnoun\tba\u0300ba\u0301\n")
    assert lexicon.entries == (LexEntry(source="father", pos=PosTag.NOUN, target="bàbá"),)


def test_load_skips_comments_and_blank_lines():
    lexicon = load_lexicon("# domain: kitchen\n\n# a comment\neat\tV\tjẹ\n")
    assert lexicon.domain == "kitchen"
    assert len(lexicon) == 1
    assert lexicon.lookup("eat", PosTag.VERB) == "jẹ"


@pytest.mark.parametrize(
    "line",
    [
        "eat\tverb",
        "eat\tverb\tjẹ\textra",
        "eat verb jẹ",
        "\tverb\tjẹ",
        "eat\tverb\t ",
        "eat up\tverb\tjẹ",
    ],
)
def test_malformed_lines(line):
    with pytest.raises(MalformedLineError) as exc_info:
        load_lexicon("# header\n" + line + "\n")
    assert exc_info.value.line_no == 2


def test_unknown_pos():
    with pytest.raises(UnknownPosError) as exc_info:
        load_lexicon("eat\tverb\tjẹ\nquickly\tadverb\tkíákíá\n")
    assert exc_info.value.line_no == 2
    assert "adverb" in str(exc_info.value)


def test_duplicate_entry_names_both_lines():
    with pytest.raises(DuplicateEntryError) as exc_info:
        load_lexicon("eat\tverb\tjẹ\nfood\tnoun\toúnjẹ\nEat\tV\tje\n")
    err = exc_info.value
    assert (err.first_line, err.second_line) == (1, 3)
    assert err.line_no == 3


def test_same_source_different_pos_is_not_duplicate():
    lexicon = load_lexicon("water\tnoun\tomi\nwater\tverb\tbomirin\n")
    assert len(lexicon) == 2


words = st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=1, max_size=8)
targets = st.lists(
    st.text(alphabet="abdeẹfgijklmnoọprsṣtuwyàáèéìíòóùú", min_size=1, max_size=6),
    min_size=1,
    max_size=3,
).map(" ".join)


@given(st.dictionaries(st.tuples(words, st.sampled_from(list(PosTag))), targets, max_size=20))
def test_dump_then_load_preserves_entries(mapping):
    lexicon = Lexicon.from_entries(
        LexEntry(source=source, pos=pos, target=target) for (source, pos), target in mapping.items()
    )
    reloaded = load_lexicon(lexicon.dump())
    assert reloaded == lexicon
    for (source, pos), target in mapping.items():
        assert reloaded.lookup(source, pos) == target


@pytest.mark.parametrize(
    "source, target",
    [
        ("Eat", "jẹ"),
        ("eat up", "jẹ"),
        ("don't", "má"),
        ("eat", " jẹ "),
        ("eat", "je\u0323"),
    ],
)
def test_entries_must_be_stored_as_looked_up(source, target):
    with pytest.raises(ValidationError):
        LexEntry(source=source, pos=PosTag.VERB, target=target)


def test_every_entry_is_found_by_its_own_source(lexicon):
    for entry in lexicon.entries:
        assert lexicon.lookup(entry.source, entry.pos) == entry.target
        assert entry.pos in lexicon.tag_candidates(entry.source)


def test_duplicate_entries_rejected_outside_the_loader():
    entry = LexEntry(source="eat", pos=PosTag.VERB, target="jẹ")
    with pytest.raises(DuplicateEntryError) as exc_info:
        Lexicon.from_entries([entry, entry.model_copy(update={"target": "je"})])
    assert (exc_info.value.first_line, exc_info.value.second_line) == (1, 2)


def test_load_drops_punctuation_from_sources():
    lexicon = load_lexicon("o'clock\tnoun\twákàtí\n")
    assert lexicon.entries[0].source == "oclock"
    assert lexicon.lookup("O'Clock", PosTag.NOUN) == "wákàtí"
