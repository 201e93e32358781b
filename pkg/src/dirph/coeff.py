"""Exact coefficient arithmetic.

Two coefficient domains are used throughout the package:

* the natural numbers, represented by non-negative Python ``int``: a
  cancellative zerosumfree semiring, the home of directed cycles;
* exact rationals, represented by ``fractions.Fraction``: the ring (in
  fact field) completion of the naturals, the home of signed linear algebra.

Elements of the completion are stored canonically as signed rationals rather
than as pairs (positive part, negative part): the pair ``(u, v)`` and the
difference ``u - v`` carry the same information once the semiring is
cancellative, and canonical forms make equality checks trivial.  ``complete``
and ``completion_mul`` realise the pair calculus on canonical representatives.
No floating point is used anywhere in the numeric core.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

Natural = int
Coefficient = int | Fraction


def check_natural(value: int) -> int:
    """Validate a semiring scalar: a non-negative integer."""
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"not a natural number: {value!r}")
    return value


def as_rational(value: Rational | int | str) -> Fraction:
    """Coerce exactly to ``Fraction``; floats are rejected to keep the
    pipeline exact (decimal *strings* such as ``"0.25"`` are fine)."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int or string")
    return Fraction(value)


def complete(u: Natural, v: Natural) -> Fraction:
    """Canonical signed representative of the formal difference class [u, v].

    >>> complete(5, 2)
    Fraction(3, 1)
    >>> complete(0, 7)
    Fraction(-7, 1)
    >>> complete(4, 4)
    Fraction(0, 1)
    """
    return Fraction(check_natural(u) - check_natural(v))


def completion_mul(a: Fraction, b: Fraction) -> Fraction:
    """Product in the completion.

    On pairs the product is ``[x1, x2] * [y1, y2] =
    [x1*y1 + x2*y2, x2*y1 + x1*y2]``; on canonical signed representatives
    this is ordinary multiplication, which is what we do.
    """
    return as_rational(a) * as_rational(b)


def pair_mul(x: tuple[Natural, Natural], y: tuple[Natural, Natural]) -> tuple[Natural, Natural]:
    """The pair form of the completion product, kept as an independent
    cross-check for ``completion_mul``."""
    x1, x2 = x
    y1, y2 = y
    for value in (x1, x2, y1, y2):
        check_natural(value)
    return (x1 * y1 + x2 * y2, x2 * y1 + x1 * y2)
