"""The Loday-Ronco algebra of planar binary trees inside FQSym.

``P_T`` is the sum of ``F_sigma`` over the permutations whose P-symbol has
shape T.  Its dual basis ``Q_T`` is realized in the sylvester monoid algebra
as the projection of ``G_{w_T}``, where ``w_T`` is the tree-word of T.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .fqsym import (
    FQSymElement,
    TensorElement,
    expand_polynomial,
    f_coproduct,
    f_product,
    g_product,
    pairing,
    to_basis,
    words_with_std,
)
from .linear import Combination
from .sylvester import is_tree_word, permutation_class
from .trees import (
    Node,
    Tree,
    canonical_perm,
    enumerate_shapes,
    is_bst,
    p_postfix,
    p_shape,
    p_symbol,
    serialize_tree,
    shape,
    size,
)
from .words import (
    Permutation,
    all_permutations,
    format_permutation,
    shifted_shuffle,
)


class NotPExpressible(ArithmeticError):
    """An FQSym element that should lie in PBT does not."""


class IntervalError(AssertionError):
    """A set expected to be an interval of the weak or tree order is not."""


class IdentificationError(ArithmeticError):
    """A projected G_sigma does not coincide with the expected Q_T."""


def _shape_key(t: Tree):
    return (size(t), serialize_tree(t))


class PBTElement(Combination):
    """Linear combination of P_T (tag ``"P"``) or Q_T (tag ``"Q"``)."""

    __slots__ = ()

    def __init__(self, basis: str, terms=()):
        if basis not in ("P", "Q"):
            raise ValueError(f"unknown PBT basis {basis!r}")
        super().__init__(basis, terms)

    @property
    def basis(self) -> str:
        return self.tag

    def __str__(self) -> str:
        return self.format(lambda t: f"{self.basis}[{serialize_tree(t)}]", _shape_key)

    def __repr__(self) -> str:
        return f"PBTElement({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"basis": self.basis, "tree": serialize_tree(t), "coefficient": c}
            for t, c in self.sorted_items(_shape_key)
        ]


class MonoidAlgebraElement(Combination):
    """Element of the sylvester monoid algebra over the letters 0..m-1,
    indexed by binary search trees."""

    __slots__ = ()

    def __init__(self, alphabet_size: int, terms=(), check: bool = True):
        super().__init__(alphabet_size, terms)
        if not check:
            return
        for t in self:
            if t is not None and not is_bst(t):
                raise ValueError(f"{serialize_tree(t, True)} is not a binary search tree")
            if t is not None and max(_labels(t)) >= alphabet_size:
                raise ValueError(f"{serialize_tree(t, True)} uses letters beyond {alphabet_size}")

    @property
    def alphabet_size(self) -> int:
        return self.tag

    def __str__(self) -> str:
        return self.format(lambda t: f"[{serialize_tree(t, True)}]", lambda t: (size(t), serialize_tree(t, True)))


def _labels(t: Node) -> list[int]:
    out = []
    stack = [t]
    while stack:
        u = stack.pop()
        if u is not None:
            out.append(u.label)
            stack.extend((u.left, u.right))
    return out


def P(t: Tree) -> PBTElement:
    return PBTElement("P", {shape(t): 1})


def Q(t: Tree) -> PBTElement:
    return PBTElement("Q", {shape(t): 1})


# P basis


def p_to_f(t: Tree) -> FQSymElement:
    return FQSymElement("F", ((p, 1) for p in permutation_class(t)))


def f_to_p(x: FQSymElement) -> PBTElement:
    """Re-express an F-basis element in the P basis, or raise NotPExpressible."""
    x = to_basis(x, "F")
    coeffs = {p_shape(p): x.coefficient(p) for p in x if is_tree_word(p)}
    result = PBTElement("P", coeffs)
    if p_element_to_f(result) != x:
        raise NotPExpressible(f"{x} is not a combination of P_T")
    return result


def p_element_to_f(x: PBTElement) -> FQSymElement:
    out: dict = defaultdict(int)
    for t, c in x.items():
        for p in permutation_class(t):
            out[p] += c
    return FQSymElement("F", out)


def sh_set(t1: Tree, t2: Tree) -> set[Tree]:
    """Shapes whose tree-word occurs in the shifted shuffle of the tree-words
    of t1 and t2."""
    return {p_shape(nu) for nu in shifted_shuffle(canonical_perm(t1), canonical_perm(t2)) if is_tree_word(nu)}


def p_product(t1: Tree, t2: Tree) -> PBTElement:
    return PBTElement("P", ((t, 1) for t in sh_set(t1, t2)))


def p_product_via_fqsym(t1: Tree, t2: Tree) -> PBTElement:
    """The same product, computed as F-expansions and converted back."""
    a, b = p_to_f(t1), p_to_f(t2)
    return f_to_p(a * b)


def p_coproduct(t: Tree) -> TensorElement:
    """Coproduct of P_T computed in FQSym and rewritten in P (x) P."""
    delta: dict = defaultdict(int)
    for p in permutation_class(t):
        for key, c in f_coproduct(p).items():
            delta[key] += c
    delta = TensorElement(("F", "F"), delta)
    coeffs = {
        (p_shape(a), p_shape(b)): c for (a, b), c in delta.items() if is_tree_word(a) and is_tree_word(b)
    }
    result = TensorElement(("P", "P"), coeffs)
    rebuilt: dict = defaultdict(int)
    for (s1, s2), c in result.items():
        if c < 0:
            raise NotPExpressible(f"negative coefficient in coproduct of {serialize_tree(t)}")
        for a in permutation_class(s1):
            for b in permutation_class(s2):
                rebuilt[(a, b)] += c
    if TensorElement(("F", "F"), rebuilt) != delta:
        raise NotPExpressible(f"coproduct of P[{serialize_tree(t)}] is not in P (x) P")
    return result


# Projection onto the sylvester monoid algebra


def pi_project(x: Union[Sequence[int], FQSymElement], m: int) -> MonoidAlgebraElement:
    """Send each word to its P-symbol; FQSym elements are expanded first."""
    if m < 1:
        raise ValueError("alphabet size must be at least 1")
    if isinstance(x, FQSymElement):
        poly = expand_polynomial(x, m)
        # P-symbols are binary search trees over the alphabet by construction
        return MonoidAlgebraElement(m, ((p_symbol(w), c) for w, c in poly.items()), check=False)
    return MonoidAlgebraElement(m, {p_symbol(tuple(x)): 1})


def q_realization(t: Tree, m: int) -> MonoidAlgebraElement:
    """Q_T as pi(G_{w_T}) over m letters."""
    return pi_project(FQSymElement("G", {canonical_perm(t): 1}), m)


def _projected_g(sigma: Permutation, m: int) -> Counter:
    # pi(G_sigma) with each binary search tree keyed by its postfix reading
    return Counter(p_postfix(w) for w in words_with_std(tuple(sigma), m))


@lru_cache(maxsize=None)
def _projected_q(t: Tree, m: int) -> Counter:
    return _projected_g(canonical_perm(t), m)


def identify_q(sigma: Permutation, m: int) -> Tree:
    """The shape T with pi(G_sigma) = Q_T at alphabet size m."""
    t = p_shape(sigma)
    if _projected_g(sigma, m) != _projected_q(t, m):
        raise IdentificationError(
            f"pi(G[{format_permutation(sigma)}]) differs from Q[{serialize_tree(t)}] at m={m}"
        )
    return t


def q_dual_product(t1: Tree, t2: Tree, m: Optional[int] = None) -> PBTElement:
    """Q_{t1} Q_{t2} via G_{w_t1} G_{w_t2} and the projection."""
    n = size(t1) + size(t2)
    if m is None:
        m = n
    if m < n:
        raise ValueError(f"alphabet size {m} below total degree {n}")
    g = g_product(canonical_perm(t1), canonical_perm(t2))
    out: dict = defaultdict(int)
    for nu, c in g.items():
        out[identify_q(nu, m)] += c
    return PBTElement("Q", out)


def q_product_by_transpose(t1: Tree, t2: Tree) -> PBTElement:
    """Coefficient of Q_S is the coefficient of P_t1 (x) P_t2 in Delta P_S."""
    n = size(t1) + size(t2)
    key = (shape(t1), shape(t2))
    return PBTElement("Q", ((s, p_coproduct(s).coefficient(key)) for s in enumerate_shapes(n)))


def q_coproduct(t: Tree) -> TensorElement:
    """Delta Q_T, transposed from the P product structure constants."""
    n = size(t)
    out = []
    for k in range(n + 1):
        for a in enumerate_shapes(k):
            for b in enumerate_shapes(n - k):
                c = p_product(a, b).coefficient(shape(t))
                if c:
                    out.append(((a, b), c))
    return TensorElement(("Q", "Q"), out)


def pbt_pairing(x: PBTElement, y: PBTElement) -> int:
    """<P_S, Q_T> = [S == T]."""
    if x.basis != "P" or y.basis != "Q":
        raise ValueError("pairing takes a P element and a Q element")
    return sum(c * y.coefficient(t) for t, c in x.items())


def duality_check(n: int, m: Optional[int] = None) -> bool:
    """<P_S, G_{w_T}> = [S == T] for all shapes of size n, and every G_sigma
    projects onto the Q of its class at alphabet size m."""
    if m is None:
        m = n
    if m < n:
        raise ValueError("need m >= n")
    shapes = enumerate_shapes(n)
    for s in shapes:
        ps = p_to_f(s)
        for t in shapes:
            if pairing(ps, FQSymElement("G", {canonical_perm(t): 1})) != (1 if s == t else 0):
                return False
    try:
        for sigma in all_permutations(n):
            identify_q(sigma, m)
    except IdentificationError:
        return False
    return True


def exact_rank(vectors: Iterable[Combination]) -> int:
    """Rank over Q of a family of combinations, by Gaussian elimination."""
    rows = [{k: Fraction(c) for k, c in v.items()} for v in vectors]
    rank = 0
    while rows:
        row = rows.pop()
        if not row:
            continue
        pivot = min(row, key=repr)
        rank += 1
        pv = row[pivot]
        reduced = []
        for other in rows:
            if pivot in other:
                f = other[pivot] / pv
                new = dict(other)
                for k, c in row.items():
                    new[k] = new.get(k, 0) - f * c
                    if new[k] == 0:
                        del new[k]
                other = new
            reduced.append(other)
        rows = reduced
    return rank


# Weak order and tree order


@lru_cache(maxsize=None)
def _inversions(p: Permutation) -> frozenset[tuple[int, int]]:
    pos = {v: i for i, v in enumerate(p)}
    n = len(p)
    return frozenset((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if pos[b] < pos[a])


def value_inversions(p: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Pairs (a, b) with a < b and b written before a."""
    return _inversions(tuple(p))


def weak_order_leq(s: Sequence[int], t: Sequence[int]) -> bool:
    if len(s) != len(t):
        raise ValueError(f"permutations of different sizes {len(s)} and {len(t)}")
    return value_inversions(s) <= value_inversions(t)


def weak_interval(lo: Sequence[int], hi: Sequence[int]) -> set[Permutation]:
    n = len(lo)
    a, b = value_inversions(lo), value_inversions(hi)
    return {p for p in all_permutations(n) if a <= value_inversions(p) <= b}


def _min_max(items: Sequence, leq) -> tuple:
    lows = [x for x in items if all(leq(x, y) for y in items)]
    highs = [x for x in items if all(leq(y, x) for y in items)]
    if len(lows) != 1 or len(highs) != 1:
        raise IntervalError("set has no unique minimum and maximum")
    return lows[0], highs[0]


def class_interval(t: Tree) -> tuple[Permutation, Permutation]:
    """(min, max) of the class of t in the weak order; the class must equal
    the whole interval between them."""
    cls = permutation_class(t)
    lo, hi = _min_max(cls, weak_order_leq)
    if weak_interval(lo, hi) != set(cls):
        raise IntervalError(f"class of {serialize_tree(t)} is not the interval [{lo}, {hi}]")
    return lo, hi


def tree_leq(t1: Tree, t2: Tree) -> bool:
    return weak_order_leq(canonical_perm(t1), canonical_perm(t2))


def tree_interval(lo: Tree, hi: Tree) -> set[Tree]:
    return {t for t in enumerate_shapes(size(lo)) if tree_leq(lo, t) and tree_leq(t, hi)}


def sh_interval(t1: Tree, t2: Tree) -> tuple[Tree, Tree]:
    sh = sh_set(t1, t2)
    lo, hi = _min_max(sorted(sh, key=_shape_key), tree_leq)
    if tree_interval(lo, hi) != sh:
        raise IntervalError(
            f"Sh({serialize_tree(t1)}, {serialize_tree(t2)}) is not a tree-order interval"
        )
    return lo, hi


def tree_order_covers(n: int) -> list[tuple[Tree, Tree]]:
    """Cover relations (Hasse diagram edges) of the tree order on size n."""
    shapes = enumerate_shapes(n)
    less = {(a, b) for a in shapes for b in shapes if a != b and tree_leq(a, b)}
    covers = []
    for a, b in sorted(less, key=lambda ab: (_shape_key(ab[0]), _shape_key(ab[1]))):
        if not any((a, c) in less and (c, b) in less for c in shapes):
            covers.append((a, b))
    return covers
