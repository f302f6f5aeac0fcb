"""Exact polynomials in one variable q with integer coefficients.

Coefficients are arbitrary-precision ints stored densely from the constant
term up, with trailing zeros trimmed, so structural equality is polynomial
equality.  These carry every generating function in the package: q-analogs,
Poincare polynomials of intervals, f- and h-polynomials.
"""

from __future__ import annotations

from typing import Iterable


class IntPolynomial:
    """A polynomial over the integers.

    >>> IntPolynomial([1, 2, 0, 0]).coeffs
    (1, 2)
    >>> (q_analog(2) * q_analog(3)).coeffs
    (1, 2, 2, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        t = tuple(int(c) for c in coeffs)
        end = len(t)
        while end and t[end - 1] == 0:
            end -= 1
        self.coeffs = t[:end]

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def text(self) -> str:
        """Render like "1 + 3*q + 5*q^2 + 4*q^3 + q^4"."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "q" if mag == 1 else f"{mag}*q"
            else:
                term = f"q^{i}" if mag == 1 else f"{mag}*q^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.text()!r})"


ZERO = IntPolynomial()
ONE = IntPolynomial([1])


def q_analog(n: int) -> IntPolynomial:
    """The q-analog of n, the sum 1 + q + ... + q^(n-1).

    Defined for n >= 1 only.

    >>> q_analog(4).coeffs
    (1, 1, 1, 1)
    """
    if n < 1:
        raise ValueError(f"q-analog is defined for n >= 1, got {n}")
    return IntPolynomial([1] * n)


def q_analog_product(ns: Iterable[int]) -> IntPolynomial:
    p = ONE
    for n in ns:
        p = p * q_analog(n)
    return p


def is_palindromic(p: IntPolynomial, top_degree: int) -> bool:
    """Whether coeff(i) == coeff(top_degree - i) for 0 <= i <= top_degree."""
    if p.is_zero():
        raise ValueError("palindromicity is undefined for the zero polynomial")
    if top_degree < p.degree:
        raise ValueError(f"top_degree {top_degree} below degree {p.degree}")
    return all(p.coeff(i) == p.coeff(top_degree - i) for i in range(top_degree + 1))
