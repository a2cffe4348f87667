"""Gaussian-beam focusing by the microsphere acting as a thick ball lens.

The sphere refocuses the incoming waist w0 into a secondary waist w0' inside
the cavity; the spot radius w_s at the grain plane (a distance R past the
sphere center) sets the effective drive mode area A_s = pi w_s^2 / 2.

Convention notes. The equivalent focal length F = n R / (2 (n - 1)) is
measured from the sphere center. The Rayleigh ranges here carry the cavity
index explicitly, z_R = pi w0^2 n / lambda; this in-medium convention is used
consistently for both the input and the refocused beam, matching the imaging
relations below (they form an exact conjugate pair with the complex beam
parameter through a thin lens of focal length F).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .params import ParameterError, SystemParams


@dataclass(frozen=True)
class FocusedBeam:
    """Result of the ball-lens transform, all lengths in meters.

    F          equivalent focal length, from the sphere center
    z_R        Rayleigh range of the input beam (in-medium convention)
    w0_prime   refocused waist radius
    s_prime    refocused waist location, measured from the sphere center
               along the propagation direction
    z_R_prime  Rayleigh range of the refocused beam
    w_s        spot radius at the grain plane (distance R from center)
    A_s        effective mode area pi w_s^2 / 2
    """

    F: float
    z_R: float
    w0_prime: float
    s_prime: float
    z_R_prime: float
    w_s: float
    A_s: float


def focal_length(n: float, R: float) -> float:
    """Ball-lens focal length F = n R / (2 (n - 1)), from the sphere center.

    Diverges as n -> 1+ (no refraction) and equals R at n = 2.
    """
    if n <= 1:
        raise ParameterError(f"n must exceed 1 for a converging ball lens, got {n}")
    if R <= 0:
        raise ParameterError(f"R must be positive, got {R}")
    return n * R / (2.0 * (n - 1.0))


def lens_transform(n: float, R: float, wavelength: float, w0: float, s: float) -> FocusedBeam:
    """Refocus a Gaussian beam of waist w0 at distance s from the sphere center.

    Imaging relations (s measured toward the source, s_prime past the lens):

        w0' = F w0 / sqrt((s - F)^2 + z_R^2)
        s'  = (s (s - F) + z_R^2) F / ((s - F)^2 + z_R^2)

    with z_R = pi w0^2 n / lambda. The spot radius then grows hyperbolically
    away from the new waist, evaluated at the grain plane z = R:

        w_s = w0' sqrt(1 + ((s' - R)/z_R')^2)
    """
    if wavelength <= 0:
        raise ParameterError(f"wavelength must be positive, got {wavelength}")
    if w0 <= 0:
        raise ParameterError(f"w0 must be positive, got {w0}")
    F = focal_length(n, R)
    z_R = math.pi * w0**2 * n / wavelength
    denom = (s - F) ** 2 + z_R**2
    w0_prime = F * w0 / math.sqrt(denom)
    s_prime = (s * (s - F) + z_R**2) * F / denom
    z_R_prime = math.pi * w0_prime**2 * n / wavelength
    w_s = w0_prime * math.sqrt(1.0 + ((s_prime - R) / z_R_prime) ** 2)
    return FocusedBeam(
        F=F,
        z_R=z_R,
        w0_prime=w0_prime,
        s_prime=s_prime,
        z_R_prime=z_R_prime,
        w_s=w_s,
        A_s=mode_area(w_s),
    )


def mode_area(w_s: float) -> float:
    """Effective drive mode area A_s = pi w_s^2 / 2 for spot radius w_s."""
    if w_s <= 0:
        raise ParameterError(f"w_s must be positive, got {w_s}")
    return math.pi * w_s**2 / 2.0


def focus_params(params: SystemParams) -> FocusedBeam:
    """Lens transform for a full parameter set (drive beam through its sphere)."""
    return lens_transform(
        params.sphere.n,
        params.sphere.R,
        params.beam.wavelength,
        params.beam.w0,
        params.beam.s,
    )
