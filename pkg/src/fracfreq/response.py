"""Logarithmic frequency sweeps and Bode-data emission (CSV / JSON).

The grid is exactly log-spaced with both endpoints pinned to the
configured values.  Output is deterministic: identical inputs produce
byte-identical CSV and JSON.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .complexmath import argument, magnitude
from .tf import FracTF, eval_tf

CSV_HEADER = "omega,mag_linear,mag_db,phase_rad,phase_deg"

FORMATS = ("csv", "json")


@dataclass(frozen=True)
class FrequencyGrid:
    """Log-spaced angular-frequency samples over [omega_min, omega_max]."""

    omega_min: float = 0.01
    omega_max: float = 100.0
    points_per_decade: int = 20

    def __post_init__(self) -> None:
        if not (math.isfinite(self.omega_min) and self.omega_min > 0.0):
            raise ValueError(f"omega_min must be finite and > 0, got {self.omega_min!r}")
        if not (math.isfinite(self.omega_max) and self.omega_max > self.omega_min):
            raise ValueError(
                f"omega_max must be finite and > omega_min, got {self.omega_max!r}"
            )
        if not (isinstance(self.points_per_decade, int) and self.points_per_decade >= 1):
            raise ValueError(
                f"points_per_decade must be a positive integer, got {self.points_per_decade!r}"
            )

    def points(self) -> list[float]:
        """Ascending samples, endpoints exact; d decades at p points per
        decade yield d*p + 1 samples (interval count rounds to nearest
        when d*p is not integral)."""
        lg0 = math.log10(self.omega_min)
        lg1 = math.log10(self.omega_max)
        intervals = max(1, round((lg1 - lg0) * self.points_per_decade))
        out = [self.omega_min]
        for i in range(1, intervals):
            out.append(10.0 ** (lg0 + (lg1 - lg0) * i / intervals))
        out.append(self.omega_max)
        return out


@dataclass(frozen=True)
class ResponsePoint:
    """One frequency sample of H(j*omega) in every customary unit.

    mag_db is 20*log10(mag_linear) (amplitude convention) and phase_deg
    is phase_rad in degrees, phase_rad principal in (-pi, pi].  A
    response of exactly zero is reported as mag_db = -inf, phase 0.
    """

    omega: float
    mag_linear: float
    mag_db: float
    phase_rad: float
    phase_deg: float


def response_at(tf: FracTF, omega: float) -> ResponsePoint:
    value = eval_tf(tf, omega)
    mag = magnitude(value)
    if mag == 0.0:
        mag_db, phase = -math.inf, 0.0
    else:
        mag_db, phase = 20.0 * math.log10(mag), argument(value)
    return ResponsePoint(omega, mag, mag_db, phase, math.degrees(phase))


def sweep(tf: FracTF, grid: FrequencyGrid) -> list[ResponsePoint]:
    """One ResponsePoint per grid frequency, ascending omega.

    A vanishing denominator raises tf.EvaluationError with the
    offending frequency; no point is silently skipped.
    """
    return [response_at(tf, omega) for omega in grid.points()]


def _fields(p: ResponsePoint) -> tuple[float, float, float, float, float]:
    return (p.omega, p.mag_linear, p.mag_db, p.phase_rad, p.phase_deg)


def emit(points: list[ResponsePoint], format: str = "csv") -> bytes:
    """Serialize sweep points; format is "csv" or "json".

    CSV carries the header line and one row per point, every value with
    17 significant digits, each line feed terminated.  JSON is an array
    of objects keyed like the CSV columns, numbers unquoted.
    """
    if format == "csv":
        lines = [CSV_HEADER]
        for p in points:
            lines.append(",".join(format_value(v) for v in _fields(p)))
        return ("\n".join(lines) + "\n").encode("ascii")
    if format == "json":
        names = CSV_HEADER.split(",")
        objs = [dict(zip(names, _fields(p))) for p in points]
        return (json.dumps(objs, indent=2) + "\n").encode("ascii")
    raise ValueError(f"unknown output format {format!r}, expected one of {FORMATS}")


def format_value(v: float) -> str:
    return format(v, ".16e")
