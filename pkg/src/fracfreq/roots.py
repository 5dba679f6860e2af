"""Multi-branch roots and fractional powers of complex values.

An n-th root has exactly n distinct values, at angles (phi + 2*k*pi)/n
for k = 0..n-1.  ``nth_roots`` enumerates them all, ``pow_branch``
generalizes the branch index to exponents alpha in (0, 1], and
``principal_pow`` fixes k = 0 and extends the exponent to any
nonnegative real.  ``principal_pow`` doubles as the reference
evaluator that the closed-form module is tested against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexmath import Complex, argument, magnitude

# Forgives the binary rounding of alpha = 1/n when counting branches,
# so e.g. alpha = 1/49 still yields exactly 49 of them.
_BRANCH_COUNT_FUZZ = 1e-9


@dataclass(frozen=True)
class PolarForm:
    """Modulus/angle pair with the angle already in (-pi, pi]."""

    r: float
    phi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r) and self.r >= 0.0):
            raise ValueError(f"modulus must be finite and >= 0, got {self.r!r}")
        if not (-math.pi < self.phi <= math.pi):
            raise ValueError(f"angle must lie in (-pi, pi], got {self.phi!r}")


def to_polar(s: Complex) -> PolarForm:
    """Polar decomposition of a nonzero value."""
    return PolarForm(magnitude(s), argument(s))


def branch_count(alpha: float) -> int:
    """Number of distinct branches of s**alpha for alpha in (0, 1].

    ceil(1/alpha), so alpha = 1/n recovers exactly n branches.
    """
    if not (0.0 < alpha <= 1.0):
        raise ValueError(f"exponent must lie in (0, 1], got {alpha!r}")
    return math.ceil(1.0 / alpha - _BRANCH_COUNT_FUZZ)


def nth_roots(s: Complex, n: int) -> list[Complex]:
    """All n distinct n-th roots of a nonzero s, principal branch first.

    Index k holds r**(1/n) * [cos((phi + 2*k*pi)/n) + j*sin(...)].
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"root order must be a positive integer, got {n!r}")
    if s.is_zero():
        raise ValueError("roots of zero are undefined (argument of zero)")
    p = to_polar(s)
    root_r = p.r ** (1.0 / n)
    out = []
    for k in range(n):
        angle = (p.phi + 2.0 * math.pi * k) / n
        out.append(Complex(root_r * math.cos(angle), root_r * math.sin(angle)))
    return out


def pow_branch(s: Complex, alpha: float, k: int) -> Complex:
    """Branch k of s**alpha for alpha in (0, 1].

    Returns |s|**alpha * [cos(alpha*(phi + 2*k*pi)) + j*sin(...)] with
    phi the principal argument of s.  Valid branch indices run from 0
    to branch_count(alpha) - 1; pow_branch(s, 1/n, k) equals
    nth_roots(s, n)[k].
    """
    count = branch_count(alpha)
    if not isinstance(k, int) or not (0 <= k < count):
        raise ValueError(
            f"branch index must be an integer in [0, {count - 1}], got {k!r}"
        )
    if s.is_zero():
        raise ValueError("fractional power of zero is undefined")
    p = to_polar(s)
    r_alpha = p.r**alpha
    angle = alpha * (p.phi + 2.0 * math.pi * k)
    return Complex(r_alpha * math.cos(angle), r_alpha * math.sin(angle))


def principal_pow(s: Complex, alpha: float) -> Complex:
    """Principal-branch power |s|**alpha * [cos(alpha*phi) + j*sin(alpha*phi)].

    Accepts any finite alpha >= 0 (alpha = 0 gives 1 for every nonzero
    s), which is what the transfer-function evaluator needs for terms
    like s**1.2.  Agrees with pow_branch(s, alpha, 0) on (0, 1].
    """
    if not (math.isfinite(alpha) and alpha >= 0.0):
        raise ValueError(f"exponent must be finite and >= 0, got {alpha!r}")
    if s.is_zero():
        raise ValueError("fractional power of zero is undefined")
    p = to_polar(s)
    r_alpha = p.r**alpha
    angle = alpha * p.phi
    return Complex(r_alpha * math.cos(angle), r_alpha * math.sin(angle))
