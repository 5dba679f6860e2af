"""Closed-form frequency-domain values of (j*w)**a and a*(j*w)**a + b.

Two parameter regimes, both on the positive imaginary axis with a
strictly fractional exponent:

* single power   (j*w)**a           -> w**a * [cos(a*pi/2) + j*sin(a*pi/2)]
* affine power   a*(j*w)**a + b     -> (b + a*w**a*cos(a*pi/2)) + j*a*w**a*sin(a*pi/2)

Every function here is a direct trigonometric formula.  The test suite
keeps them honest against roots.principal_pow, which computes the same
quantities from the polar decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexmath import Complex


@dataclass(frozen=True)
class CaseIParams:
    """Single fractional power of j*omega: omega > 0, 0 < alpha < 1."""

    omega: float
    alpha: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise ValueError(f"omega must be finite and > 0, got {self.omega!r}")
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha < 1.0):
            raise ValueError(f"alpha must lie strictly in (0, 1), got {self.alpha!r}")


@dataclass(frozen=True)
class CaseIIParams:
    """Affine fractional power a*(j*omega)**alpha + b with a, b > 0."""

    a: float
    b: float
    omega: float
    alpha: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise ValueError(f"gain a must be finite and > 0, got {self.a!r}")
        if not (math.isfinite(self.b) and self.b > 0.0):
            raise ValueError(f"offset b must be finite and > 0, got {self.b!r}")
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise ValueError(f"omega must be finite and > 0, got {self.omega!r}")
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha < 1.0):
            raise ValueError(f"alpha must lie strictly in (0, 1), got {self.alpha!r}")


def jomega_pow(p: CaseIParams) -> Complex:
    """(j*omega)**alpha as w**a * [cos(a*pi/2) + j*sin(a*pi/2)]."""
    r = p.omega**p.alpha
    half = p.alpha * math.pi / 2.0
    return Complex(r * math.cos(half), r * math.sin(half))


def jomega_pow_mag(p: CaseIParams) -> float:
    """|(j*omega)**alpha| = omega**alpha."""
    return p.omega**p.alpha


def jomega_pow_arg(p: CaseIParams) -> float:
    """arg (j*omega)**alpha = alpha*pi/2, independent of omega."""
    return p.alpha * math.pi / 2.0


def affine_jomega(p: CaseIIParams) -> Complex:
    """a*(j*omega)**alpha + b with real and imaginary parts clustered."""
    t = p.a * p.omega**p.alpha
    half = p.alpha * math.pi / 2.0
    return Complex(p.b + t * math.cos(half), t * math.sin(half))


def affine_mag(p: CaseIIParams) -> float:
    """|a*(j*omega)**alpha + b| = sqrt(b**2 + a**2*w**(2a) + 2*a*b*w**a*cos(a*pi/2)).

    The cross term carries omega**alpha: it is the 2*Re*Im-free expansion
    of affine_jomega's components, and only that exponent agrees with
    direct complex evaluation for omega != 1 (see
    affine_mag_omega2_cross_term for the wrong-exponent variant).
    """
    t = p.a * p.omega**p.alpha
    return math.sqrt(p.b * p.b + t * t + 2.0 * p.b * t * math.cos(p.alpha * math.pi / 2.0))


def affine_arg(p: CaseIIParams) -> float:
    """arg (a*(j*omega)**alpha + b), always in (0, pi/2) since a, b > 0."""
    t = p.a * p.omega**p.alpha
    half = p.alpha * math.pi / 2.0
    return math.atan(t * math.sin(half) / (p.b + t * math.cos(half)))


def affine_mag_omega2_cross_term(p: CaseIIParams) -> float:
    """Known-inconsistent magnitude variant; regression witness only.

    Uses omega**2 in the cross term where the expansion of
    affine_jomega yields omega**alpha.  The two coincide at omega = 1;
    everywhere else this variant disagrees with direct complex
    evaluation, and the tests demonstrate that.  Do not use it for
    anything but that demonstration.
    """
    w_alpha = p.omega**p.alpha
    return math.sqrt(
        p.b * p.b
        + p.a * p.a * w_alpha * w_alpha
        + 2.0 * p.a * p.b * p.omega * p.omega * math.cos(p.alpha * math.pi / 2.0)
    )
