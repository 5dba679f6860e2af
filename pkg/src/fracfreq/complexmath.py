"""Strict complex arithmetic on explicit real/imaginary pairs.

The built-in ``complex`` type happily carries infinities and NaNs and
returns -pi for arguments on the lower edge of the branch cut.  This
module pins down the semantics the rest of the library depends on:
every value is finite by construction, and the principal argument lies
in the half-open interval (-pi, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Complex:
    """A complex value as an explicit (re, im) pair; both parts finite."""

    re: float
    im: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "im", float(self.im))
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(
                f"complex parts must be finite, got re={self.re!r}, im={self.im!r}"
            )

    def is_zero(self) -> bool:
        return self.re == 0.0 and self.im == 0.0


ZERO = Complex(0.0, 0.0)
ONE = Complex(1.0, 0.0)
J = Complex(0.0, 1.0)


def add(a: Complex, b: Complex) -> Complex:
    """Componentwise sum; overflow to non-finite parts is rejected."""
    return Complex(a.re + b.re, a.im + b.im)


def mul(a: Complex, b: Complex) -> Complex:
    """Product (re1*re2 - im1*im2) + j(re1*im2 + re2*im1)."""
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + b.re * a.im)


def div(a: Complex, b: Complex) -> Complex:
    """Quotient a/b by the conjugate method.

    Raises ValueError when b is exactly zero; callers that need a
    tolerance-based guard (the transfer-function evaluator does) must
    check magnitude(b) themselves first.
    """
    if b.is_zero():
        raise ValueError("complex division by zero")
    denom = b.re * b.re + b.im * b.im
    return Complex(
        (a.re * b.re + a.im * b.im) / denom,
        (a.im * b.re - a.re * b.im) / denom,
    )


def magnitude(s: Complex) -> float:
    """Length sqrt(re**2 + im**2); zero exactly when s is zero."""
    return math.hypot(s.re, s.im)


def argument(s: Complex) -> float:
    """Principal angle of s in (-pi, pi]; the positive real axis maps to 0.

    The negative real axis maps to +pi.  atan2 can return the double
    -pi both for a negative-zero imaginary part and for angles that
    round onto the cut; both are folded to +pi so the returned float
    always satisfies -pi < angle <= pi.
    """
    if s.is_zero():
        raise ValueError("argument of zero is undefined")
    phi = math.atan2(s.im, s.re)
    if phi == -math.pi:
        phi = math.pi
    return phi
