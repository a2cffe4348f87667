"""System parameters and the scalar quantities derived directly from them.

All lengths are in meters, frequencies in rad/s, permittivities relative.
A subwavelength dielectric grain of radius ``r_s`` sits on the equator of a
microsphere of radius ``R`` and refractive index ``n``; a Gaussian beam of
waist ``w0`` drives it at wavelength ``lambda1`` and a second cavity mode at
``lambda2`` collects. The field-overlap factors ``f0`` give the normalized
mode amplitude at the grain position.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import cached_property

# exact SI value
C_VACUUM = 299792458.0  # m/s

# prefactor of the fundamental-mode volume fit: V = 3.4 pi^1.5 (lambda/2 pi n)^(7/6) R^(11/6)
_MODE_VOLUME_COEFF = 3.4 * math.pi**1.5


class ParameterError(ValueError):
    """One or more system parameters violate their documented ranges."""


@dataclass(frozen=True)
class MicrosphereSpec:
    """Cavity geometry and intrinsic quality.

    Attributes
    ----------
    R : float
        Sphere radius in meters, > 0.
    n : float
        Refractive index of the sphere material, > 1 (vacuum outside).
    Q0 : float
        Intrinsic quality factor of the whispering-gallery mode, > 0.
    """

    R: float
    n: float
    Q0: float = 1e8


@dataclass(frozen=True)
class ScattererSpec:
    """Rayleigh grain: radius r_s (m, > 0) and relative permittivity eps_s (> 1)."""

    r_s: float
    eps_s: float


@dataclass(frozen=True)
class BeamSpec:
    """Free-space Gaussian drive beam.

    ``wavelength`` is the vacuum wavelength (m), ``w0`` the waist radius (m).
    ``s`` locates the waist on the optical axis, measured from the sphere
    center toward the source; it may take either sign.
    """

    wavelength: float
    w0: float
    s: float = 0.0


@dataclass(frozen=True)
class ModeSpec:
    """One whispering-gallery mode: vacuum wavelength and overlap factor f0 at the grain."""

    wavelength: float
    f0: float


@dataclass(frozen=True)
class SystemParams:
    """Complete parameter set for one physical configuration.

    Instances are immutable; derived scalars (frequencies, permittivity,
    polarizability, mode volumes) are computed lazily and cached, so a
    validated instance is cheap to share across sweep workers.
    """

    sphere: MicrosphereSpec
    scatterer: ScattererSpec
    beam: BeamSpec
    excitation: ModeSpec
    lasing: ModeSpec

    @cached_property
    def eps_c(self) -> float:
        """Relative permittivity of the cavity material, n^2."""
        return self.sphere.n**2

    @cached_property
    def omega1(self) -> float:
        return omega_from_lambda(self.excitation.wavelength)

    @cached_property
    def omega2(self) -> float:
        return omega_from_lambda(self.lasing.wavelength)

    @cached_property
    def alpha(self) -> float:
        return polarizability(self.scatterer)

    @cached_property
    def V1(self) -> float:
        return mode_volume(self.sphere, self.excitation)

    @cached_property
    def V2(self) -> float:
        return mode_volume(self.sphere, self.lasing)


def omega_from_lambda(wavelength: float) -> float:
    """Angular frequency (rad/s) of light with the given vacuum wavelength (m)."""
    if wavelength <= 0:
        raise ParameterError(f"wavelength must be positive, got {wavelength}")
    return 2.0 * math.pi * C_VACUUM / wavelength


def polarizability(scatterer: ScattererSpec) -> float:
    """Rayleigh polarizability volume alpha = 4 pi r_s^3 (eps_s - 1)/(eps_s + 2), in m^3.

    This is the convention where the induced dipole is p = eps0 * alpha * E.
    Strictly increasing in both r_s and eps_s; vanishes as eps_s -> 1.
    """
    r_s, eps_s = scatterer.r_s, scatterer.eps_s
    if r_s <= 0:
        raise ParameterError(f"r_s must be positive, got {r_s}")
    if eps_s <= 1:
        raise ParameterError(f"eps_s must exceed 1, got {eps_s}")
    return 4.0 * math.pi * r_s**3 * (eps_s - 1.0) / (eps_s + 2.0)


def mode_volume(sphere: MicrosphereSpec, mode: ModeSpec) -> float:
    """Fundamental whispering-gallery mode volume (m^3).

    Empirical power-law fit V = 3.4 pi^1.5 (lambda/(2 pi n))^(7/6) R^(11/6),
    valid for the fundamental equatorial mode. Exact power laws in R and
    lambda are part of the contract (tested via log-ratios).
    """
    if sphere.R <= 0:
        raise ParameterError(f"R must be positive, got {sphere.R}")
    if sphere.n <= 1:
        raise ParameterError(f"n must exceed 1, got {sphere.n}")
    if mode.wavelength <= 0:
        raise ParameterError(f"wavelength must be positive, got {mode.wavelength}")
    reduced = mode.wavelength / (2.0 * math.pi * sphere.n)
    return _MODE_VOLUME_COEFF * reduced ** (7.0 / 6.0) * sphere.R ** (11.0 / 6.0)


def validate(params: SystemParams) -> SystemParams:
    """Check every range invariant; return the same instance if all hold.

    Raises ParameterError listing each violated field by name. Emits a
    UserWarning when the grain is not comfortably subwavelength
    (r_s > lambda1 / 5). Idempotent; also forces the cached derived values.
    """
    problems: list[str] = []
    sp, sc, bm = params.sphere, params.scatterer, params.beam
    if not sp.R > 0:
        problems.append(f"sphere.R must be > 0 (got {sp.R})")
    if not sp.n > 1:
        problems.append(f"sphere.n must be > 1 (got {sp.n})")
    if not sp.Q0 > 0:
        problems.append(f"sphere.Q0 must be > 0 (got {sp.Q0})")
    if not sc.r_s > 0:
        problems.append(f"scatterer.r_s must be > 0 (got {sc.r_s})")
    if not sc.eps_s > 1:
        problems.append(f"scatterer.eps_s must be > 1 (got {sc.eps_s})")
    if not bm.wavelength > 0:
        problems.append(f"beam.wavelength must be > 0 (got {bm.wavelength})")
    if not bm.w0 > 0:
        problems.append(f"beam.w0 must be > 0 (got {bm.w0})")
    if not math.isfinite(bm.s):
        problems.append(f"beam.s must be finite (got {bm.s})")
    for label, mode in (("excitation", params.excitation), ("lasing", params.lasing)):
        if not mode.wavelength > 0:
            problems.append(f"{label}.wavelength must be > 0 (got {mode.wavelength})")
        if not 0 < mode.f0 <= 1:
            problems.append(f"{label}.f0 must be in (0, 1] (got {mode.f0})")
    if params.excitation.wavelength != bm.wavelength:
        problems.append(
            "excitation.wavelength must equal beam.wavelength "
            f"(got {params.excitation.wavelength} vs {bm.wavelength})"
        )
    if problems:
        raise ParameterError("; ".join(problems))
    if sc.r_s > params.excitation.wavelength / 5.0:
        warnings.warn(
            f"scatterer.r_s = {sc.r_s:g} m is not well below the excitation "
            f"wavelength {params.excitation.wavelength:g} m; the point-dipole "
            "treatment degrades",
            UserWarning,
            stacklevel=2,
        )
    # force and cache the derived scalars so later accesses cannot raise
    _ = params.eps_c, params.omega1, params.omega2, params.alpha, params.V1, params.V2
    return params
