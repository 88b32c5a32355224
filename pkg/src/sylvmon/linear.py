"""Finite formal linear combinations with exact integer coefficients."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator, Mapping, Tuple, Union

Terms = Union[Mapping[Hashable, int], Iterable[Tuple[Hashable, int]]]


class Combination:
    """Immutable element of a free Z-module on some basis.

    ``tag`` identifies the basis (e.g. ``"F"``); combinations with different
    tags never compare equal and cannot be added.  Zero coefficients are
    never stored.
    """

    __slots__ = ("tag", "_terms")

    def __init__(self, tag: Hashable, terms: Terms = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            acc[key] = acc.get(key, 0) + c
        self.tag = tag
        self._terms = {k: c for k, c in acc.items() if c}

    def _new(self, terms: Terms):
        # subclasses keep their extra state on the tag
        return type(self)._from_tag(self.tag, terms)

    @classmethod
    def _from_tag(cls, tag, terms):
        obj = cls.__new__(cls)
        Combination.__init__(obj, tag, terms)
        return obj

    @property
    def terms(self) -> Mapping:
        return dict(self._terms)

    def items(self) -> Iterator[tuple]:
        return iter(self._terms.items())

    def keys(self):
        return self._terms.keys()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key) -> int:
        return self._terms.get(key, 0)

    def coefficient(self, key) -> int:
        return self._terms.get(key, 0)

    def _check(self, other: Combination) -> None:
        if type(other) is not type(self) or other.tag != self.tag:
            raise TypeError(f"cannot combine {self.tag!r} with {getattr(other, 'tag', other)!r}")

    def __add__(self, other: Combination):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        terms = dict(self._terms)
        for k, c in other.items():
            terms[k] = terms.get(k, 0) + c
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Combination):
        return self + (-other)

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return self._new({k: scalar * c for k, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        return type(other) is type(self) and other.tag == self.tag and other._terms == self._terms

    def __hash__(self) -> int:
        return hash((self.tag, frozenset(self._terms.items())))

    def map_keys(self, f: Callable, tag=None):
        """Linear extension of a basis map (colliding images are summed)."""
        return type(self)._from_tag(self.tag if tag is None else tag, ((f(k), c) for k, c in self.items()))

    def sorted_items(self, key=None) -> list[tuple]:
        return sorted(self._terms.items(), key=(lambda kc: key(kc[0])) if key else None)

    def format(self, render: Callable[[Hashable], str], sort_key=None) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.sorted_items(sort_key):
            body = render(k)
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)
