"""Polynomials in q with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence


class InexactDivision(ArithmeticError):
    pass


class QPoly:
    """Dense coefficient list, index = degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def q_integer(cls, n: int) -> QPoly:
        """[n]_q = 1 + q + ... + q^(n-1)."""
        return cls([1] * n)

    @classmethod
    def q_factorial(cls, n: int) -> QPoly:
        result = cls([1])
        for k in range(1, n + 1):
            result = result * cls.q_integer(k)
        return result

    @classmethod
    def q_pochhammer(cls, n: int) -> QPoly:
        """(q)_n = (1-q)(1-q^2)...(1-q^n)."""
        result = cls([1])
        for k in range(1, n + 1):
            result = result * cls([1] + [0] * (k - 1) + [-1])
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, q):
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> QPoly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-x for x in self.coeffs)

    def __sub__(self, other) -> QPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> QPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> QPoly:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        result = QPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other) -> tuple[QPoly, QPoly]:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(other.coeffs) - 1]
            if c % lead:
                # not divisible over the integers; leave the rest as remainder
                break
            factor = c // lead
            quot[k] = factor
            for j, y in enumerate(other.coeffs):
                rem[k + j] -= factor * y
        return QPoly(quot), QPoly(rem)

    def exact_div(self, other) -> QPoly:
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise InexactDivision(f"({self}) / ({other}) leaves remainder {rem}")
        return quot

    __floordiv__ = exact_div

    def truncate(self, degree: int) -> QPoly:
        """Drop terms of degree > ``degree``."""
        return QPoly(self.coeffs[: degree + 1])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def _coerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly([x])
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def from_exponents(exponents: Sequence[int]) -> QPoly:
    """Sum of q^e over the given exponents (with repetition)."""
    if not exponents:
        return QPoly()
    out = [0] * (max(exponents) + 1)
    for e in exponents:
        out[e] += 1
    return QPoly(out)
