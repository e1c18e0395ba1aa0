"""Deterministic finite automata compiled from the verb-phrase grammars.

The grammars are non-recursive, so their languages are finite and the
automata here are exact: the language is enumerated into a trie and
equivalent suffix states are merged.
"""

import logging
from collections import deque
from collections.abc import Iterable

from pydantic import PrivateAttr, model_validator

from .config import TERMINAL_NAMES, PosTag, Slot
from .errors import AutomatonError, FsaTableError
from .grammar import Grammar, derive_all, max_length
from .models import Frozen, TagSymbol

logger = logging.getLogger("ey-vp.automata")

Transition = tuple[int, TagSymbol, int]

_SYMBOLS_BY_VALUE: dict[str, TagSymbol] = {
    **{tag.value: tag for tag in PosTag},
    **{slot.value: slot for slot in Slot},
}


def _symbol_key(symbol: TagSymbol) -> str:
    return symbol.value


class Fsa(Frozen):
    """A deterministic automaton over part-of-speech tags.

    Transitions are a partial function; a missing transition rejects.
    """

    states: frozenset[int]
    alphabet: frozenset[TagSymbol]
    transitions: tuple[Transition, ...]
    start: int
    accepting: frozenset[int]

    _delta: dict[int, dict[TagSymbol, int]] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_structure(self) -> "Fsa":
        if self.start not in self.states:
            raise AutomatonError(f"start state {self.start} is not a state")
        if not self.accepting <= self.states:
            raise AutomatonError("accepting states must be states")
        seen: set[tuple[int, TagSymbol]] = set()
        for src, symbol, dst in self.transitions:
            if src not in self.states or dst not in self.states:
                raise AutomatonError(f"transition {src} -{symbol.value}-> {dst} leaves the state set")
            if symbol not in self.alphabet:
                raise AutomatonError(f"symbol {symbol.value} is not in the alphabet")
            if (src, symbol) in seen:
                raise AutomatonError(f"state {src} has two transitions on {symbol.value}")
            seen.add((src, symbol))
        return self

    def model_post_init(self, __context) -> None:
        delta: dict[int, dict[TagSymbol, int]] = {state: {} for state in self.states}
        for src, symbol, dst in self.transitions:
            delta[src][symbol] = dst
        self._delta = delta

    def step(self, state: int, symbol: TagSymbol) -> int | None:
        return self._delta.get(state, {}).get(symbol)

    def successors(self, state: int) -> dict[TagSymbol, int]:
        return dict(self._delta.get(state, {}))


def make_fsa(
    states: Iterable[int],
    alphabet: Iterable[TagSymbol],
    transitions: Iterable[Transition],
    start: int,
    accepting: Iterable[int],
) -> Fsa:
    """Build an Fsa with its transitions in canonical order."""
    return Fsa(
        states=frozenset(states),
        alphabet=frozenset(alphabet),
        transitions=tuple(sorted(transitions, key=lambda t: (t[0], _symbol_key(t[1]), t[2]))),
        start=start,
        accepting=frozenset(accepting),
    )


def accepts(fsa: Fsa, sequence: Iterable[TagSymbol]) -> bool:
    """True iff ``sequence`` drives the automaton into an accepting state."""
    state: int | None = fsa.start
    for symbol in sequence:
        state = fsa.step(state, symbol)
        if state is None:
            return False
    return state in fsa.accepting


def state_count(fsa: Fsa) -> int:
    return len(fsa.states)


def _reachable(fsa: Fsa) -> set[int]:
    seen = {fsa.start}
    queue = deque([fsa.start])
    while queue:
        for nxt in fsa.successors(queue.popleft()).values():
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def _coreachable(fsa: Fsa) -> set[int]:
    preds: dict[int, set[int]] = {}
    for src, _, dst in fsa.transitions:
        preds.setdefault(dst, set()).add(src)
    seen = set(fsa.accepting)
    stack = list(seen)
    while stack:
        for prev in preds.get(stack.pop(), ()):
            if prev not in seen:
                seen.add(prev)
                stack.append(prev)
    return seen


def _topological_order(states: set[int], edges: dict[int, list[int]]) -> list[int]:
    indegree = {state: 0 for state in states}
    for src in states:
        for dst in edges[src]:
            indegree[dst] += 1
    queue = deque(sorted(s for s, d in indegree.items() if d == 0))
    order = []
    while queue:
        state = queue.popleft()
        order.append(state)
        for dst in edges[state]:
            indegree[dst] -= 1
            if indegree[dst] == 0:
                queue.append(dst)
    if len(order) != len(states):
        raise AutomatonError("automaton has a cycle; only finite languages are supported")
    return order


def is_acyclic(fsa: Fsa) -> bool:
    edges = {state: list(fsa.successors(state).values()) for state in fsa.states}
    try:
        _topological_order(set(fsa.states), edges)
    except AutomatonError:
        return False
    return True


def _renumber(
    start: int,
    delta: dict[int, dict[TagSymbol, int]],
    accepting: set[int],
    alphabet: Iterable[TagSymbol],
) -> Fsa:
    """Rename states 0, 1, ... in breadth-first order from ``start``."""
    names = {start: 0}
    queue = deque([start])
    transitions: list[Transition] = []
    while queue:
        state = queue.popleft()
        for symbol, nxt in sorted(delta.get(state, {}).items(), key=lambda kv: _symbol_key(kv[0])):
            if nxt not in names:
                names[nxt] = len(names)
                queue.append(nxt)
            transitions.append((names[state], symbol, names[nxt]))
    return make_fsa(
        states=names.values(),
        alphabet=alphabet,
        transitions=transitions,
        start=0,
        accepting={names[s] for s in accepting if s in names},
    )


def minimize(fsa: Fsa) -> Fsa:
    """Equivalent automaton with the fewest states.

    Unreachable and dead states are dropped, then states with the same
    finality and the same outgoing edges are merged from the leaves up.
    """
    live = _reachable(fsa) & _coreachable(fsa)
    live.add(fsa.start)

    edges = {
        state: [dst for dst in fsa.successors(state).values() if dst in live]
        for state in live
    }
    order = _topological_order(live, edges)

    canon: dict[int, int] = {}
    register: dict[tuple, int] = {}
    for state in reversed(order):
        out = sorted(
            (_symbol_key(symbol), canon[dst])
            for symbol, dst in fsa.successors(state).items()
            if dst in live
        )
        signature = (state in fsa.accepting, tuple(out))
        canon[state] = register.setdefault(signature, state)

    delta: dict[int, dict[TagSymbol, int]] = {}
    for state in set(canon.values()):
        delta[state] = {
            symbol: canon[dst]
            for symbol, dst in fsa.successors(state).items()
            if dst in live
        }
    accepting = {canon[s] for s in fsa.accepting if s in live}
    return _renumber(canon[fsa.start], delta, accepting, fsa.alphabet)


def compile_language(language: Iterable[tuple[TagSymbol, ...]], alphabet: Iterable[TagSymbol]) -> Fsa:
    """Minimal automaton for a finite set of sequences."""
    delta: dict[int, dict[TagSymbol, int]] = {0: {}}
    accepting: set[int] = set()
    for sequence in sorted(language, key=lambda s: [_symbol_key(x) for x in s]):
        state = 0
        for symbol in sequence:
            nxt = delta[state].get(symbol)
            if nxt is None:
                nxt = len(delta)
                delta[state][symbol] = nxt
                delta[nxt] = {}
            state = nxt
        accepting.add(state)

    trie = make_fsa(
        states=delta.keys(),
        alphabet=alphabet,
        transitions=[(s, sym, d) for s, out in delta.items() for sym, d in out.items()],
        start=0,
        accepting=accepting,
    )
    return minimize(trie)


def compile(grammar: Grammar) -> Fsa:
    """Compile a non-recursive grammar into its minimal automaton."""
    language = derive_all(grammar)
    fsa = compile_language(language, grammar.terminals)
    logger.debug(
        f"Compiled {len(language)} sequences into {state_count(fsa)} states, "
        f"{len(fsa.transitions)} transitions"
    )
    return fsa


def language(fsa: Fsa) -> frozenset[tuple[TagSymbol, ...]]:
    """Every sequence the (acyclic) automaton accepts."""
    if not is_acyclic(fsa):
        raise AutomatonError("automaton has a cycle; its language is not finite")
    found: set[tuple[TagSymbol, ...]] = set()
    stack: list[tuple[int, tuple[TagSymbol, ...]]] = [(fsa.start, ())]
    while stack:
        state, prefix = stack.pop()
        if state in fsa.accepting:
            found.add(prefix)
        for symbol, nxt in fsa.successors(state).items():
            stack.append((nxt, prefix + (symbol,)))
    return frozenset(found)


def equivalent(fsa: Fsa, grammar: Grammar) -> bool:
    """Check the automaton against the grammar sequence by sequence.

    Every sequence over both alphabets up to the grammar's longest
    derivation is visited, except extensions of a prefix that the
    automaton has already rejected and that no derivation starts with.
    A state reached at that length must not lead to acceptance.
    """
    derived = derive_all(grammar)
    prefixes = {seq[:i] for seq in derived for i in range(len(seq) + 1)}
    limit = max_length(grammar)
    live = _coreachable(fsa)
    alphabet = sorted(set(fsa.alphabet) | set(grammar.terminals), key=_symbol_key)

    stack: list[tuple[tuple[TagSymbol, ...], int | None]] = [((), fsa.start)]
    while stack:
        sequence, state = stack.pop()
        if (state is not None and state in fsa.accepting) != (sequence in derived):
            logger.debug(f"Disagreement on {[s.value for s in sequence]}")
            return False
        if len(sequence) == limit:
            if state is not None and any(nxt in live for nxt in fsa.successors(state).values()):
                logger.debug(f"Accepts beyond {[s.value for s in sequence]}")
                return False
            continue
        for symbol in alphabet:
            nxt = fsa.step(state, symbol) if state is not None else None
            extended = sequence + (symbol,)
            if nxt is None and extended not in prefixes:
                continue
            stack.append((extended, nxt))
    return True


def dump_table(fsa: Fsa) -> str:
    """Plain-text transition table: declarations, then one edge per line."""
    lines = ["# state<TAB>symbol<TAB>state"]
    lines.append(f"start\t{fsa.start}")
    lines.extend(f"accept\t{state}" for state in sorted(fsa.accepting))
    lines.extend(f"symbol\t{symbol.value}" for symbol in sorted(fsa.alphabet, key=_symbol_key))
    lines.extend(f"state\t{state}" for state in sorted(fsa.states))
    lines.extend(f"{src}\t{symbol.value}\t{dst}" for src, symbol, dst in fsa.transitions)
    return "\n".join(lines) + "\n"


def _symbol(value: str, line_no: int) -> TagSymbol:
    symbol = _SYMBOLS_BY_VALUE.get(value) or TERMINAL_NAMES.get(value)
    if symbol is None:
        raise FsaTableError(f"unknown symbol {value!r}", line_no)
    return symbol


def _state(value: str, line_no: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise FsaTableError(f"invalid state {value!r}", line_no) from None


def load_table(document: str) -> Fsa:
    """Read a table written by ``dump_table``."""
    start: int | None = None
    accepting: set[int] = set()
    alphabet: set[TagSymbol] = set()
    states: set[int] = set()
    transitions: list[Transition] = []

    for line_no, raw in enumerate(document.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) == 2:
            key, value = fields
            if key == "start":
                start = _state(value, line_no)
                states.add(start)
            elif key == "accept":
                accepting.add(_state(value, line_no))
            elif key == "symbol":
                alphabet.add(_symbol(value, line_no))
            elif key == "state":
                states.add(_state(value, line_no))
            else:
                raise FsaTableError(f"unknown declaration {key!r}", line_no)
        elif len(fields) == 3:
            src, dst = _state(fields[0], line_no), _state(fields[2], line_no)
            symbol = _symbol(fields[1], line_no)
            alphabet.add(symbol)
            states.update((src, dst))
            transitions.append((src, symbol, dst))
        else:
            raise FsaTableError("expected 2 or 3 tab-separated fields", line_no)

    if start is None:
        raise FsaTableError("missing start declaration")
    states.update(accepting)
    return make_fsa(states, alphabet, transitions, start, accepting)
