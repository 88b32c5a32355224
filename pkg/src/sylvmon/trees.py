"""Planar binary trees: binary search trees, decreasing trees, shapes.

A tree is either ``None`` (the empty tree) or a :class:`Node`.  Labeled trees
carry integer labels; shapes carry ``label=None`` everywhere.  Trees are
incomplete: a node has zero, one or two children and only internal nodes are
stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Any, Iterator, Optional, Sequence

from .words import Permutation, Word, inverse, standardize


@dataclass(frozen=True)
class Node:
    left: Optional[Node]
    label: Optional[int]
    right: Optional[Node]
    _hash: Optional[int] = field(default=None, init=False, repr=False, compare=False)

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.left, self.label, self.right))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Node<{serialize_tree(self)}>"


Tree = Optional[Node]

LEAF_SHAPE = Node(None, None, None)


class TreeParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def size(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + size(t.left) + size(t.right)


def height(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + max(height(t.left), height(t.right))


def labels_preorder(t: Tree) -> list:
    if t is None:
        return []
    return [t.label] + labels_preorder(t.left) + labels_preorder(t.right)


def infix_reading(t: Tree) -> Word:
    if t is None:
        return ()
    return infix_reading(t.left) + (t.label,) + infix_reading(t.right)


def postfix_reading(t: Tree) -> Word:
    """Left subtree, right subtree, then the node itself."""
    if t is None:
        return ()
    return postfix_reading(t.left) + postfix_reading(t.right) + (t.label,)


def shape(t: Tree) -> Tree:
    if t is None:
        return None
    return Node(shape(t.left), None, shape(t.right))


def is_shape(t: Tree) -> bool:
    return all(label is None for label in labels_preorder(t))


# Binary search trees


def is_bst(t: Tree) -> bool:
    """Left labels <= node < right labels, at every node."""

    def check(t: Tree, lo: Optional[int], hi: Optional[int]) -> bool:
        # labels in t must satisfy lo < label <= hi
        if t is None:
            return True
        if t.label is None:
            return False
        if lo is not None and not t.label > lo:
            return False
        if hi is not None and not t.label <= hi:
            return False
        return check(t.left, lo, t.label) and check(t.right, t.label, hi)

    return check(t, None, None)


def bst_insert(t: Tree, x: int) -> Node:
    """Leaf insertion: go left when x <= label, right otherwise."""
    if t is None:
        return Node(None, x, None)
    if x <= t.label:
        return Node(bst_insert(t.left, x), t.label, t.right)
    return Node(t.left, t.label, bst_insert(t.right, x))


def _insertion_arrays(w: Sequence[int]) -> tuple[int, list[int], list[int]]:
    # Insert w right to left; node i holds w[i].  Returns root index and
    # child index arrays (-1 for missing).
    n = len(w)
    left = [-1] * n
    right = [-1] * n
    root = n - 1
    for i in range(n - 2, -1, -1):
        x = w[i]
        j = root
        while True:
            if x <= w[j]:
                if left[j] < 0:
                    left[j] = i
                    break
                j = left[j]
            else:
                if right[j] < 0:
                    right[j] = i
                    break
                j = right[j]
    return root, left, right


def _build(j: int, left: list[int], right: list[int], labels: Optional[Sequence]) -> Tree:
    if j < 0:
        return None
    return Node(
        _build(left[j], left, right, labels),
        None if labels is None else labels[j],
        _build(right[j], left, right, labels),
    )


def p_symbol(w: Sequence[int]) -> Tree:
    """Binary search tree obtained by inserting w from right to left."""
    if not w:
        return None
    root, left, right = _insertion_arrays(w)
    return _build(root, left, right, w)


def p_shape(w: Sequence[int]) -> Tree:
    """shape(p_symbol(w)), without building labels."""
    if not w:
        return None
    root, left, right = _insertion_arrays(w)
    return _build(root, left, right, None)


def p_postfix(w: Sequence[int]) -> Word:
    """postfix_reading(p_symbol(w)) computed on the insertion arrays.

    The postfix reading determines the binary search tree, so this is a
    cheap hashable stand-in for the P-symbol.
    """
    if not w:
        return ()
    root, left, right = _insertion_arrays(w)
    out = []
    stack = [(root, False)]
    while stack:
        j, done = stack.pop()
        if done:
            out.append(w[j])
            continue
        stack.append((j, True))
        if right[j] >= 0:
            stack.append((right[j], False))
        if left[j] >= 0:
            stack.append((left[j], False))
    return tuple(out)


def insertion_order_tree(w: Sequence[int]) -> Tree:
    """Same insertion as p_symbol, each node labeled by the position (1-based)
    of the letter that created it."""
    if not w:
        return None
    root, left, right = _insertion_arrays(w)
    return _build(root, left, right, range(1, len(w) + 1))


# Decreasing trees


def decreasing_tree(p: Sequence[int]) -> Tree:
    """Maximum at the root; the letters to its left and right recursively
    form the left and right subtrees."""
    if not p:
        return None
    k = max(range(len(p)), key=p.__getitem__)
    return Node(decreasing_tree(p[:k]), p[k], decreasing_tree(p[k + 1 :]))


def is_decreasing_tree(t: Tree) -> bool:
    labels = labels_preorder(t)
    if sorted(labels, key=lambda x: (x is None, x)) != list(range(1, len(labels) + 1)):
        return False

    def check(t: Tree) -> bool:
        if t is None:
            return True
        for child in (t.left, t.right):
            if child is not None and not child.label < t.label:
                return False
        return check(t.left) and check(t.right)

    return check(t)


def q_symbol(w: Sequence[int]) -> Tree:
    return decreasing_tree(inverse(standardize(w)))


def relabel(q: Tree, w: Sequence[int]) -> Tree:
    """Replace each label i of q by the i-th letter of w."""
    if size(q) != len(w):
        raise ValueError(f"tree has {size(q)} nodes but word has length {len(w)}")

    def rec(t: Tree) -> Tree:
        if t is None:
            return None
        if t.label is None or not 1 <= t.label <= len(w):
            raise ValueError(f"label {t.label!r} out of range 1..{len(w)}")
        return Node(rec(t.left), w[t.label - 1], rec(t.right))

    return rec(q)


# Shapes


def label_infix(t: Tree, start: int = 1) -> Tree:
    """Label the nodes of t by start, start+1, ... in infix order."""
    counter = iter(range(start, start + size(t)))

    def rec(t: Tree) -> Tree:
        if t is None:
            return None
        left = rec(t.left)
        label = next(counter)
        return Node(left, label, rec(t.right))

    return rec(t)


def canonical_perm(t: Tree) -> Permutation:
    """The tree-word of a shape: infix labeling read in postfix order."""
    return postfix_reading(label_infix(t))


@lru_cache(maxsize=None)
def enumerate_shapes(n: int) -> tuple[Tree, ...]:
    """All shapes with n nodes, ordered by left subtree size (smaller first),
    then recursively by left and right shape."""
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in enumerate_shapes(k):
            for right in enumerate_shapes(n - 1 - k):
                out.append(Node(left, None, right))
    return tuple(out)


def left_comb(n: int) -> Tree:
    t = None
    for _ in range(n):
        t = Node(t, None, None)
    return t


def right_comb(n: int) -> Tree:
    t = None
    for _ in range(n):
        t = Node(None, None, t)
    return t


@dataclass(frozen=True)
class NodeStats:
    """Per-node subtree sizes h and right-subtree sizes delta, in preorder."""

    h: tuple[int, ...]
    delta: tuple[int, ...]


def node_stats(t: Tree) -> NodeStats:
    h: list[int] = []
    delta: list[int] = []

    def rec(t: Tree) -> int:
        if t is None:
            return 0
        k = len(h)
        h.append(0)
        delta.append(0)
        hl = rec(t.left)
        hr = rec(t.right)
        h[k] = 1 + hl + hr
        delta[k] = hr
        return h[k]

    rec(t)
    return NodeStats(tuple(h), tuple(delta))


def count_decreasing_labelings(t: Tree) -> int:
    """Direct recursive count: the root takes the maximum, the rest is split
    between the two subtrees."""
    if t is None:
        return 1
    a, b = size(t.left), size(t.right)
    return comb(a + b, a) * count_decreasing_labelings(t.left) * count_decreasing_labelings(t.right)


# Text and JSON forms

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _format_label(label: Optional[int], letters: bool) -> str:
    if label is None:
        return "*"
    if letters and 0 <= label < 26:
        return _LETTERS[label]
    return str(label)


def serialize_tree(t: Tree, letters: bool = False) -> str:
    """Canonical text form, e.g. ``((. a .) b .)``.

    Integer labels are written in decimal unless ``letters`` is set, in which
    case ranks below 26 are written a..z.  Shape nodes are written ``*``.
    """
    if t is None:
        return "."
    return (
        f"({serialize_tree(t.left, letters)} {_format_label(t.label, letters)} "
        f"{serialize_tree(t.right, letters)})"
    )


def parse_tree(text: str) -> Tree:
    """Inverse of :func:`serialize_tree`.  Extra whitespace is tolerated."""
    pos = 0
    n = len(text)
    kinds: set[str] = set()

    def skip() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def label() -> Optional[int]:
        nonlocal pos
        skip()
        if pos >= n:
            raise TreeParseError("expected label, got end of input", pos)
        c = text[pos]
        if c == "*":
            pos += 1
            kinds.add("shape")
            return None
        if "a" <= c <= "z":
            pos += 1
            kinds.add("labeled")
            return ord(c) - ord("a")
        if c.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            kinds.add("labeled")
            return int(text[start:pos])
        raise TreeParseError(f"unexpected {c!r} where a label was expected", pos)

    def tree() -> Tree:
        nonlocal pos
        skip()
        if pos >= n:
            raise TreeParseError("expected tree, got end of input", pos)
        c = text[pos]
        if c == ".":
            pos += 1
            return None
        if c != "(":
            raise TreeParseError(f"unexpected {c!r} where a tree was expected", pos)
        pos += 1
        left = tree()
        lab = label()
        right = tree()
        skip()
        if pos >= n or text[pos] != ")":
            raise TreeParseError("expected ')'", pos)
        pos += 1
        return Node(left, lab, right)

    result = tree()
    skip()
    if pos != n:
        raise TreeParseError("trailing characters", pos)
    if len(kinds) > 1:
        raise TreeParseError("mixes '*' with labels", 0)
    return result


def tree_to_json(t: Tree) -> Any:
    if t is None:
        return None
    return {"label": t.label, "left": tree_to_json(t.left), "right": tree_to_json(t.right)}


def tree_from_json(obj: Any) -> Tree:
    if obj is None:
        return None
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or set(obj) != {"label", "left", "right"}:
        raise ValueError(f"bad tree JSON: {obj!r}")
    label = obj["label"]
    if label is not None and (not isinstance(label, int) or label < 0):
        raise ValueError(f"bad label {label!r}")
    return Node(tree_from_json(obj["left"]), label, tree_from_json(obj["right"]))


def iter_nodes(t: Tree) -> Iterator[Node]:
    if t is not None:
        yield t
        yield from iter_nodes(t.left)
        yield from iter_nodes(t.right)
