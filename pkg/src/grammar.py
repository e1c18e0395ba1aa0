"""Context-free verb-phrase grammars, language enumeration and parsing."""

import itertools
import logging
from collections.abc import Iterator
from functools import lru_cache

from pydantic import PrivateAttr, model_validator

from .config import DEFAULT_START_SYMBOL, TERMINAL_NAMES, PosTag
from .errors import (
    GrammarError,
    GrammarFileError,
    NoParseError,
    RecursiveGrammarError,
    UnknownWordError,
)
from .lexicon import Lexicon
from .models import (
    Frozen,
    Leaf,
    Node,
    Nonterminal,
    ParseTree,
    ParticleLeaf,
    Production,
    Symbol,
    TaggedToken,
    TagSymbol,
    Terminal,
    Token,
)

logger = logging.getLogger("ey-vp.grammar")

# English verb phrases. Rules are ordered most-consuming first because the
# parser keeps the first complete derivation it finds.
SOURCE_GRAMMAR = """\
VP -> V NP PP | V NP NP | V NP | V PP | V
NP -> DET ADJ N | DET N | ADJ N | N
PP -> P NP
"""

# Yorùbá verb phrases: head-initial noun phrases and the particle slot
# between the two objects of a ditransitive verb.
TARGET_GRAMMAR = """\
VP -> V NP PP | V NP PRT NP | V NP | V PP | V
NP -> N ADJ DET | N DET | N ADJ | N
PP -> P NP
"""

Sequence = tuple[TagSymbol, ...]


class Grammar(Frozen):
    """The 4-tuple (nonterminals, terminals, productions, start).

    Construction rejects grammars in which a nonterminal can derive
    itself, so every grammar generates a finite language.
    """

    nonterminals: frozenset[str]
    terminals: frozenset[TagSymbol]
    productions: tuple[Production, ...]
    start: Nonterminal

    _by_lhs: dict[str, list[Production]] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_invariants(self) -> "Grammar":
        if self.start.name not in self.nonterminals:
            raise GrammarError(f"start symbol {self.start} is not a nonterminal")

        ordinals = [p.ordinal for p in self.productions]
        if len(set(ordinals)) != len(ordinals):
            raise GrammarError("production ordinals must be unique")

        for production in self.productions:
            if production.lhs.name not in self.nonterminals:
                raise GrammarError(f"{production}: {production.lhs} is not a nonterminal")
            for symbol in production.rhs:
                if isinstance(symbol, Terminal) and symbol.tag not in self.terminals:
                    raise GrammarError(f"{production}: {symbol} is not a terminal")
                if isinstance(symbol, Nonterminal) and symbol.name not in self.nonterminals:
                    raise GrammarError(f"{production}: {symbol} is not a nonterminal")

        graph = _dependency_graph(self.productions)
        for name in _reachable(graph, self.start.name):
            if name not in graph:
                raise GrammarError(f"nonterminal {name} has no production")

        cycle = _find_cycle(graph)
        if cycle:
            raise RecursiveGrammarError(cycle)
        return self

    def model_post_init(self, __context) -> None:
        by_lhs: dict[str, list[Production]] = {}
        for production in sorted(self.productions, key=lambda p: p.ordinal):
            by_lhs.setdefault(production.lhs.name, []).append(production)
        self._by_lhs = by_lhs

    def productions_for(self, name: str) -> list[Production]:
        """Productions for ``name`` in ordinal order."""
        return self._by_lhs.get(name, [])

    def find(self, lhs: str, rhs: tuple[str, ...]) -> Production | None:
        """Look a production up by its shape."""
        for production in self.productions_for(lhs):
            if production.shape == (lhs, rhs):
                return production
        return None


def _dependency_graph(productions) -> dict[str, set[str]]:
    graph: dict[str, set[str]] = {}
    for production in productions:
        edges = graph.setdefault(production.lhs.name, set())
        edges.update(s.name for s in production.rhs if isinstance(s, Nonterminal))
    return graph


def _reachable(graph: dict[str, set[str]], start: str) -> set[str]:
    seen = {start}
    stack = [start]
    while stack:
        for nxt in graph.get(stack.pop(), ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def _find_cycle(graph: dict[str, set[str]]) -> list[str] | None:
    """Return a cycle in the nonterminal graph as a path, or None."""
    done: set[str] = set()

    def visit(name: str, path: list[str]) -> list[str] | None:
        if name in path:
            return path[path.index(name):] + [name]
        if name in done:
            return None
        path.append(name)
        for nxt in sorted(graph.get(name, ())):
            cycle = visit(nxt, path)
            if cycle:
                return cycle
        path.pop()
        done.add(name)
        return None

    for name in sorted(graph):
        cycle = visit(name, [])
        if cycle:
            return cycle
    return None


def build_grammar(productions: list[Production], start: str = DEFAULT_START_SYMBOL) -> Grammar:
    """Assemble a grammar, inferring its symbol sets from the productions."""
    nonterminals = {p.lhs.name for p in productions}
    terminals = {s.tag for p in productions for s in p.rhs if isinstance(s, Terminal)}
    return Grammar(
        nonterminals=frozenset(nonterminals | {start}),
        terminals=frozenset(terminals),
        productions=tuple(productions),
        start=Nonterminal(name=start),
    )


def _symbol(name: str) -> Symbol:
    if name in TERMINAL_NAMES:
        return Terminal(tag=TERMINAL_NAMES[name])
    return Nonterminal(name=name)


def load_grammar(document: str, start: str = DEFAULT_START_SYMBOL) -> Grammar:
    """Read a grammar written one rule per line, e.g. ``VP -> V NP | V``.

    Terminals are V, N, DET, ADJ, P, PRON and PRT; any other name is a
    nonterminal. ``#`` starts a comment. Rule order sets the ordinals.
    """
    productions: list[Production] = []
    for line_no, raw in enumerate(document.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise GrammarFileError("expected 'LHS -> RHS'", line_no)
        lhs, rhs = (part.strip() for part in line.split("->", 1))
        if not lhs or " " in lhs or lhs in TERMINAL_NAMES:
            raise GrammarFileError(f"invalid left-hand side {lhs!r}", line_no)
        for alternative in rhs.split("|"):
            names = alternative.split()
            if not names:
                raise GrammarFileError("empty right-hand side", line_no)
            productions.append(
                Production(
                    lhs=Nonterminal(name=lhs),
                    rhs=tuple(_symbol(name) for name in names),
                    ordinal=len(productions),
                )
            )
    grammar = build_grammar(productions, start=start)
    logger.debug(f"Loaded grammar with {len(productions)} productions, start {start}")
    return grammar


def dump_grammar(grammar: Grammar) -> str:
    """Write a grammar in the format ``load_grammar`` reads."""
    ordered = sorted(grammar.productions, key=lambda p: p.ordinal)
    return "".join(f"{production}\n" for production in ordered)


@lru_cache(maxsize=None)
def source_grammar() -> Grammar:
    """The built-in English verb-phrase grammar."""
    return load_grammar(SOURCE_GRAMMAR)


@lru_cache(maxsize=None)
def target_grammar() -> Grammar:
    """The built-in Yorùbá verb-phrase grammar."""
    return load_grammar(TARGET_GRAMMAR)


def derive_all(grammar: Grammar) -> frozenset[Sequence]:
    """Every terminal sequence derivable from the start symbol."""
    memo: dict[str, set[Sequence]] = {}

    def language(symbol: Symbol) -> set[Sequence]:
        if isinstance(symbol, Terminal):
            return {(symbol.tag,)}
        if symbol.name not in memo:
            found: set[Sequence] = set()
            for production in grammar.productions_for(symbol.name):
                parts = [language(s) for s in production.rhs]
                for combo in itertools.product(*parts):
                    found.add(tuple(itertools.chain.from_iterable(combo)))
            memo[symbol.name] = found
        return memo[symbol.name]

    return frozenset(language(grammar.start))


def max_length(grammar: Grammar) -> int:
    """Length of the longest sequence in the grammar's language."""
    return max((len(s) for s in derive_all(grammar)), default=0)


class _Parser:
    """Recursive descent with backtracking over rules and tag choices."""

    def __init__(self, tokens: list[Token], candidates: list[list[PosTag]], grammar: Grammar):
        self.tokens = tokens
        self.candidates = candidates
        self.grammar = grammar

    def expand(self, symbol: Symbol, pos: int) -> Iterator[tuple[ParseTree, int]]:
        if isinstance(symbol, Terminal):
            if pos < len(self.tokens) and symbol.tag in self.candidates[pos]:
                tagged = TaggedToken(token=self.tokens[pos], tag=symbol.tag)
                yield Leaf(tagged=tagged), pos + 1
            return

        for production in self.grammar.productions_for(symbol.name):
            for children, end in self.expand_seq(production.rhs, 0, pos):
                yield Node(label=symbol, children=children, production=production), end

    def expand_seq(
        self, rhs: tuple[Symbol, ...], i: int, pos: int
    ) -> Iterator[tuple[tuple[ParseTree, ...], int]]:
        if i == len(rhs):
            yield (), pos
            return
        # each remaining symbol consumes at least one token
        if len(self.tokens) - pos < len(rhs) - i:
            return
        for child, mid in self.expand(rhs[i], pos):
            for rest, end in self.expand_seq(rhs, i + 1, mid):
                yield (child, *rest), end


def tag_lattice(tokens: list[Token], lexicon: Lexicon) -> list[list[PosTag]]:
    """Candidate tags per token; raises on the first unknown word."""
    lattice = []
    for token in tokens:
        tags = lexicon.tag_candidates(token.folded)
        if not tags:
            raise UnknownWordError(token.surface, token.index)
        lattice.append(tags)
    return lattice


def parse(tokens: list[Token], lexicon: Lexicon, grammar: Grammar) -> Node:
    """Return the first complete parse of ``tokens``.

    Productions are tried in ordinal order and tags in priority order, so
    the result is deterministic.
    """
    candidates = tag_lattice(tokens, lexicon)
    if not tokens:
        raise NoParseError([])

    parser = _Parser(tokens, candidates, grammar)
    for tree, end in parser.expand(grammar.start, 0):
        if end == len(tokens) and isinstance(tree, Node):
            logger.debug(f"Parsed: {render_tree(tree)}")
            return tree
    raise NoParseError(candidates)


def leaves(tree: ParseTree) -> list[Leaf | ParticleLeaf]:
    """Leaves in left-to-right order."""
    if isinstance(tree, Node):
        return [leaf for child in tree.children for leaf in leaves(child)]
    return [tree]


def tree_tags(tree: ParseTree) -> list[TagSymbol]:
    """Terminal symbols along the leaves."""
    return [leaf.symbol.tag for leaf in leaves(tree)]


def tree_violations(tree: ParseTree, tokens: list[Token] | None = None) -> list[str]:
    """Structural problems in ``tree``; empty when it is well formed.

    Every node's children must spell its production's right-hand side,
    and the token leaves must be the input tokens in index order.
    """
    problems: list[str] = []

    def check(node: ParseTree) -> None:
        if not isinstance(node, Node):
            return
        if node.production.lhs != node.label:
            problems.append(f"{node.label}: production {node.production} has another lhs")
        got = tuple(child.symbol for child in node.children)
        if got != node.production.rhs:
            shown = " ".join(str(s) for s in got)
            problems.append(f"{node.label}: children {shown} do not match {node.production}")
        for child in node.children:
            check(child)

    check(tree)
    token_leaves = [leaf.tagged.token for leaf in leaves(tree) if isinstance(leaf, Leaf)]
    if [t.index for t in token_leaves] != list(range(len(token_leaves))):
        problems.append("leaves are not in index order")
    if tokens is not None and token_leaves != list(tokens):
        problems.append("leaves do not cover the input tokens")
    return problems


def render_tree(tree: ParseTree) -> str:
    """Nested-bracket form, e.g. ``(VP (V eat))``."""
    if isinstance(tree, Leaf):
        return f"({tree.tagged.tag.abbrev} {tree.tagged.token.surface})"
    if isinstance(tree, ParticleLeaf):
        return f"(PRT {tree.literal})"
    inner = " ".join(render_tree(child) for child in tree.children)
    return f"({tree.label} {inner})"
