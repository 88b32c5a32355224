"""The sylvester congruence on words and its classes.

Two words are congruent when they have the same binary-search-tree
P-symbol.  The congruence is generated by the adjacent swaps
``zx...y <-> xz...y`` with ``x <= y < z``, ``y`` occurring anywhere to the
right of the swapped pair.
"""

from __future__ import annotations

from collections import defaultdict, deque
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Literal, Sequence, Union

from .qpoly import QPoly, from_exponents
from .trees import (
    Node,
    Tree,
    canonical_perm,
    count_decreasing_labelings,
    is_bst,
    is_decreasing_tree,
    iter_nodes,
    node_stats,
    p_shape,
    p_symbol,
    postfix_reading,
    q_symbol,
    shape,
    size,
)
from .words import (
    Permutation,
    Word,
    all_permutations,
    count_rearrangements,
    maj,
    rearrangements,
)

ORACLE_BOUND = factorial(10)


def _swappable(w: Sequence[int]) -> list[int]:
    """Positions i such that w[i], w[i+1] may be swapped by one relation."""
    n = len(w)
    out = []
    for i in range(n - 2):
        a, b = w[i], w[i + 1]
        if a == b:
            continue
        x, z = (a, b) if a < b else (b, a)
        if any(x <= w[j] < z for j in range(i + 2, n)):
            out.append(i)
    return out


def _swap(w: Sequence[int], i: int) -> Word:
    v = list(w)
    v[i], v[i + 1] = v[i + 1], v[i]
    return tuple(v)


def elementary_moves(w: Sequence[int]) -> set[Word]:
    """Words reachable from w by one application of a relation, either way."""
    return {_swap(w, i) for i in _swappable(w)}


def oriented_moves(w: Sequence[int]) -> set[Word]:
    """Successors under the oriented rules xz...y -> zx...y (x < z)."""
    return {_swap(w, i) for i in _swappable(w) if w[i] < w[i + 1]}


def move_closure(w: Sequence[int], oriented: bool = False) -> set[Word]:
    """Breadth-first closure of w under the (oriented) moves.  The frontier
    is expanded in lexicographic order so traces are reproducible."""
    step = oriented_moves if oriented else elementary_moves
    start = tuple(w)
    seen = {start}
    frontier = deque([start])
    while frontier:
        u = frontier.popleft()
        for v in sorted(step(u)):
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    return seen


def sylvester_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    return p_symbol(u) == p_symbol(v)


def canonical_word(w: Sequence[int]) -> Word:
    """The tree-word of the class of w: postfix reading of its P-symbol."""
    return postfix_reading(p_symbol(w))


def _seed_word(seed: Union[Tree, Sequence[int]]) -> Word:
    if seed is None or isinstance(seed, Node):
        if seed is not None and seed.label is not None:
            if not is_bst(seed):
                raise ValueError("labeled seed must be a binary search tree")
            return postfix_reading(seed)
        return canonical_perm(seed)
    return canonical_word(seed)


def sylvester_class(
    seed: Union[Tree, Sequence[int]],
    method: Literal["rewriting", "oracle"] = "rewriting",
    bound: int = ORACLE_BOUND,
) -> set[Word]:
    """All words congruent to the seed.

    A shape seed stands for the permutation class of its tree-word.  The
    rewriting method closes the tree-word under the oriented moves; the oracle
    filters every rearrangement by P-symbol.
    """
    w = _seed_word(seed)
    if method == "rewriting":
        return move_closure(w, oriented=True)
    if method == "oracle":
        if count_rearrangements(w) > bound:
            raise ValueError(
                f"oracle would enumerate {count_rearrangements(w)} rearrangements (bound {bound})"
            )
        target = p_symbol(w)
        return {v for v in rearrangements(w) if p_symbol(v) == target}
    raise ValueError(f"unknown method {method!r}")


def is_tree_word(p: Sequence[int]) -> bool:
    return tuple(p) == canonical_perm(p_shape(p))


@lru_cache(maxsize=None)
def permutation_classes(n: int) -> dict[Tree, tuple[Permutation, ...]]:
    """Partition of S_n by P-symbol shape, each class in lexicographic order.

    lru_cache serialises concurrent fills well enough for this use: a race only
    recomputes the same value.
    """
    classes: dict[Tree, list[Permutation]] = defaultdict(list)
    for p in all_permutations(n):
        classes[p_shape(p)].append(p)
    return {t: tuple(v) for t, v in classes.items()}


def permutation_class(t: Tree) -> tuple[Permutation, ...]:
    return permutation_classes(size(t))[shape(t)]


# The correspondence


def correspondence(w: Sequence[int]) -> tuple[Tree, Tree]:
    return p_symbol(w), q_symbol(w)


def inverse_correspondence(p: Tree, q: Tree) -> Word:
    """Recover w from (P(w), Q(w)): w_i is the P-label sitting where Q has i."""
    if shape(p) != shape(q):
        raise ValueError("P and Q symbols have different shapes")
    if not is_bst(p) and p is not None:
        raise ValueError("P symbol is not a binary search tree")
    if not is_decreasing_tree(q):
        raise ValueError("Q symbol is not a decreasing tree")
    n = size(q)
    w = [0] * n
    for pn, qn in zip(iter_nodes(p), iter_nodes(q)):
        w[qn.label - 1] = pn.label
    w = tuple(w)
    if p_symbol(w) != p or q_symbol(w) != q:
        raise ValueError("labelings are not the symbols of any word")
    return w


# Hook-length enumeration


def class_maj_gf(t: Tree) -> QPoly:
    """Sum of q^maj(sigma) over the permutations sigma with P-shape t."""
    return from_exponents([maj(p) for p in permutation_class(t)])


def q_hook_formula(t: Tree) -> QPoly:
    """q^(sum of right-subtree sizes) * [n]_q! / prod over nodes of [h]_q."""
    stats = node_stats(t)
    n = size(t)
    denominator = QPoly([1])
    for h in stats.h:
        denominator = denominator * QPoly.q_integer(h)
    quotient = QPoly.q_factorial(n).exact_div(denominator)
    return QPoly.monomial(sum(stats.delta)) * quotient


def class_size(t: Tree) -> int:
    return factorial(size(t)) // prod(node_stats(t).h)


def decreasing_labelings(t: Tree) -> int:
    return count_decreasing_labelings(t)


def classes_partition(words: Iterable[Sequence[int]], key) -> set[frozenset[Word]]:
    blocks: dict = defaultdict(set)
    for w in words:
        blocks[key(tuple(w))].add(tuple(w))
    return {frozenset(b) for b in blocks.values()}


def move_partition(words: Iterable[Sequence[int]]) -> set[frozenset[Word]]:
    """Connected components of the elementary-move graph on a set of words
    closed under rearrangement."""
    remaining = {tuple(w) for w in words}
    blocks = set()
    while remaining:
        w = min(remaining)
        block = move_closure(w)
        remaining -= block
        blocks.add(frozenset(block))
    return blocks
