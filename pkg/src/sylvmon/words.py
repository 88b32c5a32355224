"""Words over a totally ordered alphabet, and permutations.

Letters are nonnegative integer ranks; ``a`` is rank 0, ``b`` rank 1 and so
on.  A word is a plain tuple of ranks.  A permutation of size n is a tuple
holding each of 1..n exactly once.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]
Permutation = tuple[int, ...]


def as_word(letters: Iterable[int]) -> Word:
    w = tuple(letters)
    for x in w:
        if not isinstance(x, int) or x < 0:
            raise ValueError(f"letters must be nonnegative integers, got {x!r}")
    return w


def as_permutation(entries: Iterable[int]) -> Permutation:
    p = tuple(entries)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def all_permutations(n: int) -> Iterator[Permutation]:
    """Permutations of size n in lexicographic order."""
    return permutations(range(1, n + 1))


def all_words(length: int, alphabet_size: int) -> Iterator[Word]:
    """Words of the given length over {0..alphabet_size-1}, lexicographically."""
    if length == 0:
        yield ()
        return
    for head in range(alphabet_size):
        for tail in all_words(length - 1, alphabet_size):
            yield (head,) + tail


def standardize(w: Sequence[int]) -> Permutation:
    """Replace letters by 1..n, equal letters ranked left to right.

    >>> standardize(parse_word("bacaabca"))
    (5, 1, 7, 2, 3, 6, 8, 4)
    """
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    result = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        result[i] = rank
    return tuple(result)


def inverse(p: Sequence[int]) -> Permutation:
    result = [0] * len(p)
    for i, v in enumerate(p, start=1):
        result[v - 1] = i
    return tuple(result)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[v - 1] for v in q)


def descents(p: Sequence[int]) -> frozenset[int]:
    """1-based positions i with p_i > p_{i+1}."""
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def maj(p: Sequence[int]) -> int:
    return sum(descents(p))


def shuffle(u: Sequence[int], v: Sequence[int]) -> Counter[Word]:
    """All interleavings of u and v, as a multiset.

    Each choice of the positions occupied by u contributes once, so the total
    multiplicity is binomial(|u|+|v|, |u|).
    """
    n = len(u) + len(v)
    result: Counter[Word] = Counter()
    for slots in combinations(range(n), len(u)):
        taken = set(slots)
        ui = iter(u)
        vi = iter(v)
        result[tuple(next(ui) if k in taken else next(vi) for k in range(n))] += 1
    return result


def shift(w: Sequence[int], k: int) -> Word:
    return tuple(x + k for x in w)


def shifted_shuffle(u: Sequence[int], v: Sequence[int]) -> Counter[Word]:
    return shuffle(u, shift(v, len(u)))


def restrict_interval(w: Sequence[int], lo: int, hi: int) -> Word:
    """Subword of letters x with lo <= x <= hi (empty when lo > hi)."""
    return tuple(x for x in w if lo <= x <= hi)


def sorted_rearrangement(w: Sequence[int]) -> Word:
    return tuple(sorted(w))


def rearrangements(w: Sequence[int]) -> Iterator[Word]:
    """Distinct rearrangements of w, in lexicographic order."""
    counts = Counter(w)
    letters = sorted(counts)
    n = len(w)

    def rec(prefix: list[int]) -> Iterator[Word]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for x in letters:
            if counts[x]:
                counts[x] -= 1
                prefix.append(x)
                yield from rec(prefix)
                prefix.pop()
                counts[x] += 1

    return rec([])


def count_rearrangements(w: Sequence[int]) -> int:
    total = factorial(len(w))
    for c in Counter(w).values():
        total //= factorial(c)
    return total


# text forms


def parse_word(text: str) -> Word:
    """Parse ``"bacaabca"``, ``"51723684"`` (one digit per letter) or ``"3,12,0"``."""
    text = text.strip()
    if text in ("", "ε"):
        return ()
    if "," in text:
        try:
            return as_word(int(part) for part in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad word {text!r}: {exc}") from None
    if text.isdigit():
        return tuple(int(c) for c in text)
    if all("a" <= c <= "z" for c in text):
        return tuple(ord(c) - ord("a") for c in text)
    raise ValueError(f"bad word {text!r}: expected lowercase letters, digits or comma-separated integers")


def parse_permutation(text: str) -> Permutation:
    return as_permutation(parse_word(text))


def format_word(w: Sequence[int]) -> str:
    if not w:
        return "ε"
    if all(x < 26 for x in w):
        return "".join(chr(ord("a") + x) for x in w)
    return ",".join(map(str, w))


def format_permutation(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(map(str, p)) if p else "ε"
    return ",".join(map(str, p))


def is_letter_text(text: str) -> bool:
    text = text.strip()
    return bool(text) and all("a" <= c <= "z" for c in text)
