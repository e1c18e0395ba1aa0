"""Structural transfer from English parse trees to Yorùbá word sequences."""

import logging
from functools import lru_cache

from pydantic import Field, model_validator

from .automata import Fsa, accepts
from .config import DITRANSITIVE_PARTICLE, PARTICLES, CasingPolicy, Slot
from .errors import (
    EmptyInputError,
    ParseError,
    TargetShapeError,
    TransferError,
    UnmappedProductionError,
)
from .grammar import Grammar, parse, source_grammar, tree_tags
from .lexicon import Lexicon
from .models import (
    Frozen,
    Leaf,
    Node,
    ParseTree,
    ParticleLeaf,
    Production,
    Terminal,
    Token,
    Translation,
    UnknownWord,
)
from .text import apply_casing, tokenize

logger = logging.getLogger("ey-vp.transfer")

Shape = tuple[str, tuple[str, ...]]


class TransferRule(Frozen):
    """Reorders one production's children and may insert particles.

    ``order`` lists source right-hand-side positions in target order;
    string items are particles inserted at that point.
    """

    source: Production
    order: tuple[int | str, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_order(self) -> "TransferRule":
        positions = [item for item in self.order if isinstance(item, int)]
        if sorted(positions) != list(range(len(self.source.rhs))):
            raise TransferError(f"{self.source}: order {self.order} is not a permutation")
        for item in self.order:
            if isinstance(item, str) and item not in PARTICLES:
                raise TransferError(f"{self.source}: unknown particle {item!r}")
        return self

    def target_rhs(self) -> tuple:
        return tuple(
            Terminal(tag=Slot.PRT) if isinstance(item, str) else self.source.rhs[item]
            for item in self.order
        )


# Target order per source shape. Noun phrases become head-initial; the
# ditransitive frame puts the particle between its two objects.
_BUILTIN_ORDERS: dict[Shape, tuple[int | str, ...]] = {
    ("VP", ("V", "NP", "PP")): (0, 1, 2),
    ("VP", ("V", "NP", "NP")): (0, 1, DITRANSITIVE_PARTICLE, 2),
    ("VP", ("V", "NP")): (0, 1),
    ("VP", ("V", "PP")): (0, 1),
    ("VP", ("V",)): (0,),
    ("NP", ("DET", "ADJ", "N")): (2, 1, 0),
    ("NP", ("DET", "N")): (1, 0),
    ("NP", ("ADJ", "N")): (1, 0),
    ("NP", ("N",)): (0,),
    ("PP", ("P", "NP")): (0, 1),
}


@lru_cache(maxsize=None)
def default_rules() -> dict[Shape, TransferRule]:
    """Transfer rules for every production of the built-in source grammar."""
    grammar = source_grammar()
    rules = {}
    for (lhs, rhs), order in _BUILTIN_ORDERS.items():
        production = grammar.find(lhs, rhs)
        if production is not None:
            rules[(lhs, rhs)] = TransferRule(source=production, order=order)
    return rules


def _rule_for(production: Production, rules: dict[Shape, TransferRule]) -> TransferRule:
    rule = rules.get(production.shape)
    if rule is not None:
        return rule
    # verb phrases the rule table does not know keep their order
    if production.lhs.name == "VP":
        return TransferRule(source=production, order=tuple(range(len(production.rhs))))
    raise UnmappedProductionError(production)


def transfer_tree(tree: ParseTree, rules: dict[Shape, TransferRule] | None = None) -> ParseTree:
    """Apply the transfer rules bottom-up. Leaves keep their source tokens."""
    if not isinstance(tree, Node):
        return tree
    rules = default_rules() if rules is None else rules
    rule = _rule_for(tree.production, rules)
    children = [transfer_tree(child, rules) for child in tree.children]

    reordered: list[ParseTree] = []
    for item in rule.order:
        if isinstance(item, str):
            reordered.append(ParticleLeaf(literal=item))
        else:
            reordered.append(children[item])

    production = Production(lhs=tree.label, rhs=rule.target_rhs(), ordinal=tree.production.ordinal)
    return Node(label=tree.label, children=tuple(reordered), production=production)


def lexicalize(tree: ParseTree, lexicon: Lexicon) -> tuple[list[str], list[UnknownWord]]:
    """Read target words off the leaves.

    Multiword targets become several words. A leaf with no entry for its
    tag passes its source surface through and is reported as unknown.
    """
    words: list[str] = []
    unknowns: list[UnknownWord] = []
    stack: list[ParseTree] = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, Node):
            stack.extend(reversed(node.children))
        elif isinstance(node, ParticleLeaf):
            words.append(node.literal)
        else:
            token = node.tagged.token
            target = lexicon.lookup(token.folded, node.tagged.tag)
            if target is None:
                words.append(token.surface)
                unknowns.append(UnknownWord(surface=token.surface, index=token.index))
            else:
                words.extend(target.split())
    return words, unknowns


def w4w_translate(tokens: list[Token], lexicon: Lexicon) -> list[str]:
    """Word-for-word baseline: each token's first-tag target, in source order."""
    words: list[str] = []
    for token in tokens:
        tags = lexicon.tag_candidates(token.folded)
        target = lexicon.lookup(token.folded, tags[0]) if tags else None
        if target is None:
            words.append(token.surface)
        else:
            words.extend(target.split())
    return words


def target_tags(tree: ParseTree) -> list:
    return tree_tags(tree)


def translate(
    text: str,
    lexicon: Lexicon,
    grammar: Grammar,
    target_fsa: Fsa,
    rules: dict[Shape, TransferRule] | None = None,
    casing: CasingPolicy = CasingPolicy.MIRROR,
) -> Translation:
    """Translate one verb phrase through both channels.

    Parse and transfer failures propagate with the word-for-word output
    attached as ``w4w`` on the exception.
    """
    tokens = tokenize(text)
    if not tokens:
        raise EmptyInputError()

    capitalized = tokens[0].surface[:1].isupper()
    w4w = apply_casing(w4w_translate(tokens, lexicon), casing, capitalized)

    try:
        tree = parse(tokens, lexicon, grammar)
        target = transfer_tree(tree, rules)
        tags = target_tags(target)
        if not accepts(target_fsa, tags):
            raise TargetShapeError(tags)
    except (ParseError, TransferError) as exc:
        exc.w4w = tuple(w4w)
        raise

    words, unknowns = lexicalize(target, lexicon)
    if unknowns:
        logger.warning(f"Partial translation of {text!r}: {[u.surface for u in unknowns]}")

    return Translation(
        source=text,
        tree=tree,
        target_tree=target,
        w4w=tuple(w4w),
        rule=tuple(apply_casing(words, casing, capitalized)),
        unknowns=tuple(unknowns),
        tags=tuple(tags),
    )
