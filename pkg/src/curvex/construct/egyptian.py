"""Unit-fraction decompositions of positive rationals."""

from __future__ import annotations

from fractions import Fraction

from curvex.errors import InvalidParameter, NonPositive


def _split_integer(r: Fraction) -> tuple[list[int], Fraction]:
    if r <= 0:
        raise NonPositive(f"Egyptian fractions need r > 0, got {r}")
    whole = r.numerator // r.denominator
    return [1] * whole, r - whole


def greedy(r: Fraction) -> list[int]:
    """Fibonacci-Sylvester expansion.

    The integer part contributes that many 1s; the fractional remainder then
    takes the largest unit fraction that fits at each step, so those terms are
    strictly increasing.
    """
    terms, rest = _split_integer(Fraction(r))
    while rest:
        n = -(-rest.denominator // rest.numerator)
        terms.append(n)
        rest -= Fraction(1, n)
    return terms


def binary(r: Fraction) -> list[int]:
    """Expansion with denominators below ``2 q^2`` for a fractional part ``p/q``.

    With ``2^k >= q`` write ``p 2^k = a q + b`` (``0 <= b < q``); the bits of
    ``a`` give terms ``1/2^(k-j)`` and the bits of ``b`` give ``1/(q 2^(k-i))``.
    """
    terms, rest = _split_integer(Fraction(r))
    if not rest:
        return terms
    p, q = rest.numerator, rest.denominator
    k = (q - 1).bit_length()
    a, b = divmod(p << k, q)
    terms += [1 << (k - j) for j in reversed(range(k)) if a >> j & 1]
    terms += [q << (k - i) for i in reversed(range(k)) if b >> i & 1]
    return terms


def egyptian_fraction(r: Fraction | int, method: str = "greedy") -> list[int]:
    """Positive integers ``n_i`` with ``sum(1/n_i) == r``.

    ``method`` is ``"greedy"``, ``"binary"`` or ``"auto"``; ``"auto"`` keeps the
    greedy expansion unless its largest term exceeds the largest binary term,
    which bounds the blocks a construction has to build.
    """
    r = Fraction(r)
    if method == "greedy":
        return greedy(r)
    if method == "binary":
        return binary(r)
    if method == "auto":
        g, b = greedy(r), binary(r)
        return g if max(g) <= max(b) else b
    raise InvalidParameter(f"unknown Egyptian fraction method {method!r}")
