import itertools

import pytest

from src.automata import (
    accepts,
    compile,
    compile_language,
    dump_table,
    equivalent,
    is_acyclic,
    language,
    load_table,
    make_fsa,
    minimize,
    state_count,
)
from src.config import PosTag, Slot
from src.errors import AutomatonError, FsaTableError
from src.grammar import derive_all, load_grammar, max_length, source_grammar, target_grammar

V, N, ADJ = PosTag.VERB, PosTag.NOUN, PosTag.ADJ


def residual_count(sequences) -> int:
    """Distinct non-empty residual languages, the size of the minimal trim automaton."""
    prefixes = {seq[:i] for seq in sequences for i in range(len(seq) + 1)}
    residuals = {
        frozenset(seq[len(p):] for seq in sequences if seq[: len(p)] == p)
        for p in prefixes
    }
    return len(residuals)


@pytest.mark.parametrize("grammar_factory", [source_grammar, target_grammar])
def test_compiled_automaton_matches_language_exhaustively(grammar_factory):
    grammar = grammar_factory()
    fsa = compile(grammar)
    derived = derive_all(grammar)
    alphabet = sorted(grammar.terminals, key=lambda s: s.value)
    for length in range(max_length(grammar) + 1):
        for sequence in itertools.product(alphabet, repeat=length):
            assert accepts(fsa, sequence) == (sequence in derived), sequence


def test_equivalent(source_fsa, target_fsa):
    assert equivalent(source_fsa, source_grammar())
    assert equivalent(target_fsa, target_grammar())
    assert not equivalent(source_fsa, target_grammar())
    assert not equivalent(target_fsa, source_grammar())


def test_compiled_automata_are_minimal(source_fsa, target_fsa):
    assert state_count(source_fsa) == residual_count(derive_all(source_grammar()))
    assert state_count(target_fsa) == residual_count(derive_all(target_grammar()))
    assert state_count(minimize(source_fsa)) == state_count(source_fsa)


def test_compiled_automata_are_acyclic_and_recover_language(source_fsa, target_fsa):
    assert is_acyclic(source_fsa)
    assert language(source_fsa) == derive_all(source_grammar())
    assert language(target_fsa) == derive_all(target_grammar())


def test_bare_verb_grammar_has_two_states():
    grammar = load_grammar("VP -> V")
    fsa = compile(grammar)
    assert state_count(fsa) == 2
    assert accepts(fsa, [V])
    assert not accepts(fsa, [])
    assert not accepts(fsa, [V, V])
    assert equivalent(fsa, grammar)


def test_accepting_start_is_not_equivalent(source_fsa):
    broken = make_fsa(
        states=source_fsa.states,
        alphabet=source_fsa.alphabet,
        transitions=source_fsa.transitions,
        start=source_fsa.start,
        accepting=source_fsa.accepting | {source_fsa.start},
    )
    assert accepts(broken, [])
    assert not equivalent(broken, source_grammar())


def test_extra_edge_is_not_equivalent():
    grammar = load_grammar("VP -> V N")
    fsa = compile(grammar)
    start_successors = fsa.successors(fsa.start)
    widened = make_fsa(
        states=fsa.states,
        alphabet=fsa.alphabet | {ADJ},
        transitions=[*fsa.transitions, (fsa.start, ADJ, start_successors[V])],
        start=fsa.start,
        accepting=fsa.accepting,
    )
    assert accepts(widened, [ADJ, N])
    assert not equivalent(widened, grammar)


def test_target_automaton_has_particle_edge(target_fsa):
    assert any(symbol == Slot.PRT for _, symbol, _ in target_fsa.transitions)
    assert accepts(target_fsa, [V, N, Slot.PRT, N])
    assert not accepts(target_fsa, [V, N, N])


def test_minimize_drops_unreachable_and_dead_states():
    fsa = make_fsa(
        states=range(6),
        alphabet=[V, N],
        transitions=[
            (0, V, 1),
            (1, N, 2),
            (0, N, 3),  # dead: 3 never accepts
            (4, V, 5),  # unreachable
        ],
        start=0,
        accepting=[2, 5],
    )
    small = minimize(fsa)
    assert state_count(small) == 3
    assert language(small) == {(V, N)}


def test_minimize_merges_equivalent_suffixes():
    # "V N" and "V ADJ N" share the tail N
    fsa = compile_language({(V, N), (V, ADJ, N), (N,)}, [V, N, ADJ])
    assert state_count(fsa) == 4
    assert language(fsa) == {(V, N), (V, ADJ, N), (N,)}


def test_empty_language_compiles_to_single_state():
    fsa = compile_language(set(), [V])
    assert state_count(fsa) == 1
    assert not accepts(fsa, [])
    assert language(fsa) == frozenset()


def test_nondeterminism_is_rejected():
    with pytest.raises(AutomatonError):
        make_fsa(states=[0, 1, 2], alphabet=[V], transitions=[(0, V, 1), (0, V, 2)], start=0, accepting=[1])


def test_cyclic_language_is_refused():
    fsa = make_fsa(states=[0], alphabet=[V], transitions=[(0, V, 0)], start=0, accepting=[0])
    assert not is_acyclic(fsa)
    with pytest.raises(AutomatonError):
        language(fsa)


def test_table_round_trip(source_fsa, target_fsa):
    for fsa in (source_fsa, target_fsa):
        assert load_table(dump_table(fsa)) == fsa


def test_table_format(target_fsa):
    table = dump_table(target_fsa)
    lines = table.splitlines()
    assert lines[1] == f"start\t{target_fsa.start}"
    assert "symbol\tprt" in lines
    assert any(line.split("\t")[1:2] == ["prt"] and len(line.split("\t")) == 3 for line in lines)


@pytest.mark.parametrize(
    "document, message",
    [
        ("accept\t1\n0\tverb\t1\n", "missing start"),
        ("start\t0\n0\tadverb\t1\n", "unknown symbol"),
        ("start\tzero\n", "invalid state"),
        ("start\t0\nfinal\t1\n", "unknown declaration"),
        ("start\t0\n0\tverb\t1\textra\n", "expected 2 or 3"),
    ],
)
def test_malformed_tables(document, message):
    with pytest.raises(FsaTableError) as exc_info:
        load_table(document)
    assert message in str(exc_info.value)


def test_acceptance_examples(source_fsa, target_fsa):
    DET, P = PosTag.DET, PosTag.PREP
    assert accepts(source_fsa, [V, DET, N])
    assert accepts(source_fsa, [V])
    assert not accepts(source_fsa, [])
    assert not accepts(source_fsa, [DET, V])
    assert accepts(source_fsa, [V, DET, ADJ, N, P, DET, N])
    assert accepts(target_fsa, [V, N, ADJ, DET])


def test_unreachable_state_is_removed_again(source_fsa):
    extra = max(source_fsa.states) + 1
    padded = make_fsa(
        states=source_fsa.states | {extra},
        alphabet=source_fsa.alphabet,
        transitions=[*source_fsa.transitions, (extra, V, source_fsa.start)],
        start=source_fsa.start,
        accepting=source_fsa.accepting,
    )
    assert state_count(padded) == state_count(source_fsa) + 1
    assert minimize(padded) == source_fsa


def test_longer_accepted_sequence_is_not_equivalent():
    grammar = load_grammar("VP -> V N")
    extended = compile_language({(V, N), (V, N, N)}, [V, N])
    assert not equivalent(extended, grammar)

    fsa = compile(grammar)
    final = next(iter(fsa.accepting))
    looping = make_fsa(
        states=fsa.states,
        alphabet=fsa.alphabet,
        transitions=[*fsa.transitions, (final, N, final)],
        start=fsa.start,
        accepting=fsa.accepting,
    )
    assert not is_acyclic(looping)
    assert not equivalent(looping, grammar)
