"""Free quasi-symmetric functions, truncated to the degrees actually used.

``F_sigma`` is realized as the sum of the words whose standardization is
``sigma^-1``; ``G_sigma = F_{sigma^-1}``.  Products follow the shifted
shuffle rule, coproducts deconcatenate and standardize.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .linear import Combination
from .qpoly import QPoly
from .words import (
    Permutation,
    Word,
    all_permutations,
    all_words,
    format_permutation,
    format_word,
    inverse,
    shifted_shuffle,
    standardize,
)

BASES = ("F", "G")


def _perm_key(p: Permutation):
    return (len(p), p)


class FQSymElement(Combination):
    """Linear combination of F_sigma (tag ``"F"``) or G_sigma (tag ``"G"``)."""

    __slots__ = ()

    def __init__(self, basis: str, terms=()):
        if basis not in BASES:
            raise ValueError(f"unknown FQSym basis {basis!r}")
        super().__init__(basis, terms)

    @property
    def basis(self) -> str:
        return self.tag

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return product(self, other)

    def degrees(self) -> set[int]:
        return {len(p) for p in self}

    def homogeneous_component(self, n: int) -> FQSymElement:
        return FQSymElement(self.basis, {p: c for p, c in self.items() if len(p) == n})

    def __str__(self) -> str:
        return self.format(lambda p: f"{self.basis}[{format_permutation(p)}]", _perm_key)

    def __repr__(self) -> str:
        return f"FQSymElement({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"basis": self.basis, "permutation": list(p), "coefficient": c}
            for p, c in self.sorted_items(_perm_key)
        ]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> FQSymElement:
        data = list(data)
        bases = {d["basis"] for d in data}
        if len(bases) > 1:
            raise ValueError("mixed bases in FQSym JSON")
        basis = bases.pop() if bases else "F"
        return cls(basis, [(tuple(d["permutation"]), d["coefficient"]) for d in data])


class TensorElement(Combination):
    """Linear combination of pairs, each side tagged by a basis name."""

    __slots__ = ()

    def __init__(self, bases: tuple[str, str], terms=()):
        super().__init__(tuple(bases), terms)

    @property
    def bases(self) -> tuple[str, str]:
        return self.tag

    def __mul__(self, other: TensorElement) -> TensorElement:
        """Componentwise product (a x b)(c x d) = ac x bd."""
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.bases != self.bases or set(self.bases) - set(BASES):
            raise TypeError("componentwise product needs matching FQSym bases")
        left, right = self.bases
        out: dict = defaultdict(int)
        for (a, b), c in self.items():
            for (x, y), d in other.items():
                for u, e in basis_product(left, a, x).items():
                    for v, f in basis_product(right, b, y).items():
                        out[(u, v)] += c * d * e * f
        return TensorElement(self.bases, out)

    def __str__(self) -> str:
        left, right = self.bases

        def render(key) -> str:
            a, b = key
            return f"{left}[{_fmt(a)}] (x) {right}[{_fmt(b)}]"

        return self.format(render, lambda k: (_size(k[0]), _size(k[1]), _sk(k[0]), _sk(k[1])))

    def to_json(self) -> list[dict]:
        left, right = self.bases
        return [
            {"left": {"basis": left, "index": _jsonable(a)}, "right": {"basis": right, "index": _jsonable(b)}, "coefficient": c}
            for (a, b), c in self.sorted_items(lambda k: (_size(k[0]), _size(k[1]), _sk(k[0]), _sk(k[1])))
        ]


def _fmt(key) -> str:
    if isinstance(key, tuple):
        return format_permutation(key)
    from .trees import serialize_tree

    return serialize_tree(key)


def _jsonable(key):
    if isinstance(key, tuple):
        return list(key)
    from .trees import serialize_tree

    return serialize_tree(key)


def _size(key) -> int:
    if isinstance(key, tuple):
        return len(key)
    from .trees import size

    return size(key)


def _sk(key):
    return key if isinstance(key, tuple) else _fmt(key)


class NCPolynomial(Combination):
    """Noncommutative polynomial: words over {0..m-1} with integer coefficients."""

    __slots__ = ()

    def __init__(self, alphabet_size: int, terms=()):
        super().__init__(alphabet_size, terms)
        for w in self:
            if any(x >= alphabet_size or x < 0 for x in w):
                raise ValueError(f"word {w!r} uses letters outside 0..{alphabet_size - 1}")

    @property
    def alphabet_size(self) -> int:
        return self.tag

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        self._check(other)
        out: dict = defaultdict(int)
        for u, c in self.items():
            for v, d in other.items():
                out[u + v] += c * d
        return NCPolynomial(self.alphabet_size, out)

    def __str__(self) -> str:
        return self.format(format_word, lambda w: (len(w), w))


def F(*entries) -> FQSymElement:
    p = _perm_arg(entries)
    return FQSymElement("F", {p: 1})


def G(*entries) -> FQSymElement:
    p = _perm_arg(entries)
    return FQSymElement("G", {p: 1})


def _perm_arg(entries) -> Permutation:
    if len(entries) == 1 and isinstance(entries[0], (tuple, list)):
        entries = entries[0]
    p = tuple(entries)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation: {p!r}")
    return p


def to_basis(x: FQSymElement, basis: str) -> FQSymElement:
    if x.basis == basis:
        return x
    return FQSymElement(basis, ((inverse(p), c) for p, c in x.items()))


# Products


def f_product(s: Sequence[int], t: Sequence[int]) -> FQSymElement:
    """F_s F_t = sum of F_nu over the shifted shuffle of s and t."""
    return FQSymElement("F", shifted_shuffle(tuple(s), tuple(t)))


def g_product(s: Sequence[int], t: Sequence[int]) -> FQSymElement:
    """G_s G_t, transported from the F basis through sigma -> sigma^-1."""
    return to_basis(f_product(inverse(s), inverse(t)), "G")


def g_product_convolution(s: Sequence[int], t: Sequence[int]) -> FQSymElement:
    """G_s G_t as the sum of G_{u.v} with std(u) = s, std(v) = t."""
    k, n = len(s), len(s) + len(t)
    out = []
    for values in combinations(range(1, n + 1), k):
        rest = [v for v in range(1, n + 1) if v not in values]
        u = tuple(values[x - 1] for x in s)
        v = tuple(rest[x - 1] for x in t)
        out.append((u + v, 1))
    return FQSymElement("G", out)


def basis_product(basis: str, s: Permutation, t: Permutation) -> FQSymElement:
    return f_product(s, t) if basis == "F" else g_product(s, t)


def product(x: FQSymElement, y: FQSymElement) -> FQSymElement:
    if x.basis != y.basis:
        y = to_basis(y, x.basis)
    out: dict = defaultdict(int)
    for s, c in x.items():
        for t, d in y.items():
            for nu, e in basis_product(x.basis, s, t).items():
                out[nu] += c * d * e
    return FQSymElement(x.basis, out)


# Coproducts


def f_coproduct(s: Sequence[int]) -> TensorElement:
    """Sum over factorizations s = u.v of F_std(u) (x) F_std(v)."""
    s = tuple(s)
    return TensorElement(
        ("F", "F"), [((standardize(s[:i]), standardize(s[i:])), 1) for i in range(len(s) + 1)]
    )


def g_coproduct(s: Sequence[int]) -> TensorElement:
    """Transport of f_coproduct: Delta G_s = Delta F_{s^-1}, re-indexed."""
    return TensorElement(
        ("G", "G"), (((inverse(a), inverse(b)), c) for (a, b), c in f_coproduct(inverse(s)).items())
    )


def coproduct(x: FQSymElement) -> TensorElement:
    f = f_coproduct if x.basis == "F" else g_coproduct
    out: dict = defaultdict(int)
    for s, c in x.items():
        for key, d in f(s).items():
            out[key] += c * d
    return TensorElement((x.basis, x.basis), out)


def counit(x: FQSymElement) -> int:
    return x.coefficient(())


def tensor_map(x: TensorElement, f_left, f_right, bases: tuple[str, str]) -> TensorElement:
    """Apply linear maps (basis key -> Combination) on each side."""
    out: dict = defaultdict(int)
    for (a, b), c in x.items():
        for u, d in f_left(a).items():
            for v, e in f_right(b).items():
                out[(u, v)] += c * d * e
    return TensorElement(bases, out)


# Pairing


def pairing(x: FQSymElement, y: FQSymElement) -> int:
    """<F_s, G_t> = [s == t], extended bilinearly.  x is read in F, y in G."""
    x = to_basis(x, "F")
    y = to_basis(y, "G")
    return sum(c * y.coefficient(p) for p, c in x.items())


# Polynomial realization


@lru_cache(maxsize=None)
def _words_by_std(n: int, m: int) -> dict[Permutation, tuple[Word, ...]]:
    groups: dict = defaultdict(list)
    for w in all_words(n, m):
        groups[standardize(w)].append(w)
    return {p: tuple(ws) for p, ws in groups.items()}


def words_with_std_by_filtering(p: Permutation, m: int) -> tuple[Word, ...]:
    """Words over m letters with standardization p, by scanning all m^n words."""
    return _words_by_std(len(p), m).get(tuple(p), ())


@lru_cache(maxsize=4096)
def words_with_std(p: Permutation, m: int) -> tuple[Word, ...]:
    """Words over m letters with standardization p, in lexicographic order.

    The letter at the position of value k is the k-th smallest, and it must
    be strictly below the next one exactly when value k+1 sits to the left of
    value k.
    """
    n = len(p)
    pos = inverse(p)
    strict = [pos[k + 1] < pos[k] for k in range(n - 1)]
    out = []

    def rec(k: int, lowest: int, content: list[int]) -> None:
        if k == n:
            w = [0] * n
            for v, c in enumerate(content):
                w[pos[v] - 1] = c
            out.append(tuple(w))
            return
        for c in range(lowest, m):
            content.append(c)
            rec(k + 1, c + 1 if k < n - 1 and strict[k] else c, content)
            content.pop()

    rec(0, 0, [])
    return tuple(sorted(out))


def expand_polynomial(x: FQSymElement, m: int) -> NCPolynomial:
    """Realize x over the alphabet {0..m-1}: F_sigma = sum of w with std(w) = sigma^-1."""
    if m < 1:
        raise ValueError("alphabet size must be at least 1")
    x = to_basis(x, "F")
    out: dict = defaultdict(int)
    for p, c in x.items():
        for w in words_with_std(inverse(p), m):
            out[w] += c
    return NCPolynomial(m, out)


# Principal specialization


def _bounded_words(n: int, cutoff: int):
    # words of length n over nonnegative integers with letter sum <= cutoff
    def rec(prefix: tuple, budget: int):
        if len(prefix) == n:
            yield prefix
            return
        for x in range(budget + 1):
            yield from rec(prefix + (x,), budget - x)

    return rec((), cutoff)


@lru_cache(maxsize=None)
def _std_series(n: int, cutoff: int) -> dict[Permutation, QPoly]:
    # sum over words w with std(w) = key of q^(letter sum), truncated at cutoff
    acc: dict = defaultdict(lambda: [0] * (cutoff + 1))
    for w in _bounded_words(n, cutoff):
        acc[standardize(w)][sum(w)] += 1
    return {p: QPoly(c) for p, c in acc.items()}


class NotStabilized(RuntimeError):
    pass


def _specialize_at(x: FQSymElement, n: int, cutoff: int) -> QPoly:
    series = _std_series(n, cutoff)
    total = QPoly()
    for p, c in to_basis(x, "F").items():
        total = total + c * series.get(inverse(p), QPoly())
    return (QPoly.q_pochhammer(n) * total).truncate(cutoff)


def principal_specialization(x: FQSymElement, cutoff: int | None = None) -> QPoly:
    """(q)_n x(1, q, q^2, ...) for x homogeneous of degree n.

    Letters 0..cutoff are substituted by q^0..q^cutoff and everything is
    truncated at degree cutoff.  The truncation must have settled: no terms
    above degree n(n-1)/2, and the same answer at cutoff + n.
    """
    degrees = to_basis(x, "F").degrees()
    if len(degrees) > 1:
        raise ValueError(f"element is not homogeneous (degrees {sorted(degrees)})")
    n = degrees.pop() if degrees else 0
    top = n * (n - 1) // 2
    if cutoff is None:
        cutoff = top + n
    if cutoff < top:
        raise ValueError(f"cutoff {cutoff} is below n(n-1)/2 = {top}")
    first = _specialize_at(x, n, cutoff)
    second = _specialize_at(x, n, cutoff + max(n, 1))
    if first.degree > top or second.degree > top or first != second:
        raise NotStabilized(f"specialization not stable at cutoff {cutoff}: {first} vs {second}")
    return first


# Free Cauchy identity


def cauchy_check(n: int, m: int, bases: tuple[str, str] = ("F", "G")) -> bool:
    """Compare sum_{std u = std(v)^-1} u (x) v with sum_sigma U_sigma (x) V_sigma.

    Both sides are expanded over two copies of the m-letter alphabet at degree n.
    ``bases`` picks the adjoint pair (F, G) or (G, F).
    """
    if m < 1:
        raise ValueError("alphabet size must be at least 1")
    words = list(all_words(n, m))
    std = {w: standardize(w) for w in words}
    left: dict = {}
    for u in words:
        for v in words:
            if std[u] == inverse(std[v]):
                left[(u, v)] = 1
    right: dict = defaultdict(int)
    for p in all_permutations(n):
        ex = expand_polynomial(FQSymElement(bases[0], {p: 1}), m)
        ey = expand_polynomial(FQSymElement(bases[1], {p: 1}), m)
        for u, c in ex.items():
            for v, d in ey.items():
                right[(u, v)] += c * d
    right = {k: c for k, c in right.items() if c}
    return left == right
