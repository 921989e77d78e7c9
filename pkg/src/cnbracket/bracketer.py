"""Binary bracketing of ambiguous noun compounds.

Trees are plain nested pairs: a leaf is the noun string itself and an
internal node is a (left, right) tuple.  The head of a constituent is the
noun reached by always following right children, so the left-branching
reading of "fruit tree farmer" is (("fruit", "tree"), "farmer").

For a three-noun compound the first noun attaches to whichever of the
other two it associates with most strongly.  Longer compounds are scored
over all bracketings: each internal node contributes the greatest
association between its constituent heads, and the tree with the largest
product wins.  For triples the two procedures agree whenever the shared
(w2, w3) factor is nonzero.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import SequenceTooLong, WordNotInThesaurus

DEFAULT_MAX_COMPOUND = 8


class BestPair(NamedTuple):
    value: Fraction
    s: int  # category containing the modifier
    t: int  # category containing the head


def head(tree):
    while isinstance(tree, tuple):
        tree = tree[1]
    return tree


def leaves(tree):
    if isinstance(tree, tuple):
        yield from leaves(tree[0])
        yield from leaves(tree[1])
    else:
        yield tree


def format_tree(tree):
    """Nested-bracket text form, e.g. ``[[fruit tree] farmer]``."""
    if isinstance(tree, tuple):
        return "[%s %s]" % (format_tree(tree[0]), format_tree(tree[1]))
    return tree


def nodes(tree):
    """Internal nodes in in-order (left subtree, node, right subtree)."""
    if isinstance(tree, tuple):
        yield from nodes(tree[0])
        yield tree
        yield from nodes(tree[1])


def _left_depth(tree):
    depth = 0
    while isinstance(tree, tuple):
        tree = tree[0]
        depth += 1
    return depth


def _fully_left(node):
    # True when every internal node below has a leaf as its right child.
    left, right = node
    if isinstance(right, tuple):
        return False
    return not isinstance(left, tuple) or _fully_left(left)


def best_pair_ca(model, th, u, v):
    """Strongest association over category choices S holding u, T holding v.

    Ties resolve to the numerically smallest (S, T).  Raises
    WordNotInThesaurus for words outside the thesaurus, mirroring their
    exclusion from training.
    """
    cats_u = th.categories_of(u)
    cats_v = th.categories_of(v)
    if not cats_u:
        raise WordNotInThesaurus(u)
    if not cats_v:
        raise WordNotInThesaurus(v)
    best = None
    for s in sorted(cats_u):
        for t in sorted(cats_v):
            value = model.ca(s, t)
            if best is None or value > best.value:
                best = BestPair(value, s, t)
    return best


@dataclass
class DecisionTrace:
    """Evidence behind one triple decision.

    attachments maps i in {2, 3} to the BestPair chosen for (w1, wi); the
    recorded category pair is the sense selection implied by the decision.
    """

    attachments: dict
    winner: int  # 2 -> left bracketing, 3 -> right
    tie: bool
    left_bias: float = 1.0

    @property
    def bracketing(self):
        return "L" if self.winner == 2 else "R"


def analyse_triple(model, th, w1, w2, w3, left_bias=1.0):
    """Bracket w1 as sibling of whichever wi it associates with most.

    Returns ("L" or "R", DecisionTrace).  Exact ties go left; left_bias
    multiplies the left-attachment score and defaults to neutral.
    """
    pair2 = best_pair_ca(model, th, w1, w2)
    pair3 = best_pair_ca(model, th, w1, w3)
    # Fraction keeps the comparison exact; association values are rationals
    c_left = pair2.value * Fraction(left_bias)
    c_right = pair3.value
    winner = 2 if c_left >= c_right else 3
    trace = DecisionTrace({2: pair2, 3: pair3}, winner, c_left == c_right, left_bias)
    return trace.bracketing, trace


def enumerate_bracketings(nouns, max_len=DEFAULT_MAX_COMPOUND):
    """All binary trees over the nouns, in recursive split-point order."""
    nouns = tuple(nouns)
    if len(nouns) < 2:
        raise ValueError("need at least two nouns")
    if len(nouns) > max_len:
        raise SequenceTooLong(len(nouns), max_len)
    return _trees(nouns)


def _trees(nouns):
    if len(nouns) == 1:
        return [nouns[0]]
    out = []
    for split in range(1, len(nouns)):
        for left in _trees(nouns[:split]):
            for right in _trees(nouns[split:]):
                out.append((left, right))
    return out


def score_bracketing(model, th, tree, left_bias=1.0):
    """Product over internal nodes of the strongest head-pair association.

    With a non-neutral left_bias, nodes whose subtree is fully
    left-branching have their factor multiplied by it; for triples this
    reduces to biasing the left-attachment comparison.
    """
    bias = Fraction(left_bias)
    score = Fraction(1)
    for node in nodes(tree):
        left, right = node
        factor = best_pair_ca(model, th, head(left), head(right)).value
        if bias != 1 and _fully_left(node):
            factor *= bias
        score *= factor
    return score


def analyse_compound(model, th, nouns, max_len=DEFAULT_MAX_COMPOUND, left_bias=1.0):
    """Pick the bracketing with the largest association product.

    Ties prefer the tree with deeper left branching, then enumeration
    order.  Returns (tree, score, ranking) where ranking holds every
    candidate as (tree, score), best first.
    """
    scored = []
    for order, tree in enumerate(enumerate_bracketings(nouns, max_len)):
        score = score_bracketing(model, th, tree, left_bias)
        scored.append((tree, score, order))
    scored.sort(key=lambda item: (-item[1], -_left_depth(item[0]), item[2]))
    ranking = [(tree, score) for tree, score, _ in scored]
    best_tree, best_score = ranking[0]
    return best_tree, best_score, ranking


def explain_nodes(model, th, tree):
    """Per-node evidence for a chosen tree.

    Yields (left head, right head, BestPair) for each internal node, in
    the same in-order used for scoring.
    """
    for node in nodes(tree):
        left, right = node
        lh, rh = head(left), head(right)
        yield lh, rh, best_pair_ca(model, th, lh, rh)
