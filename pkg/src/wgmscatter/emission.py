"""Angular emission of the grain dipole and its collimation by the sphere.

Geometry and conventions. The grain sits at the origin on the sphere surface;
the polar angle theta is measured from the axis through the sphere center and
runs over [0, 360) degrees so that theta in [0, 180) is the cavity side and
[180, 360) the vacuum side; the azimuth phi in [0, 180) completes the
parameterization (the solid-angle element is |sin theta| dtheta dphi). The
dipole radiates with density

    u(theta, phi) = 3 n^5 (1 - sin^2 theta cos^2 phi) / (4 pi (n^5 + 1))   cavity side
    u(theta, phi) = 3     (1 - sin^2 theta cos^2 phi) / (4 pi (n^5 + 1))   vacuum side

which integrates to 1 over the full sphere, with the fraction n^5/(n^5 + 1)
emitted into the cavity.

A cavity-side ray launched at theta strikes the far surface at internal
incidence theta (chord geometry) and, if theta is below the critical angle,
exits at the external angle Theta = |2 theta - arcsin(n sin theta)| from the
axis. The sphere thus acts as a collimator; the per-azimuth distribution of
exit angles is the 1D pushforward of T * u under that map, tabulated on a
uniform theta grid with dtheta weights (no solid-angle factor; a
solid-angle-weighted variant is available for sensitivity checks but is not
the default convention).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import ParameterError

NORMALIZATION_MODES = ("transmitted", "front_hemisphere", "full_sphere")
_MODE_ALIASES = {"transmitted": "transmitted", "front": "front_hemisphere", "full": "full_sphere"}


class HalfEnergyUndefined(ValueError):
    """The cumulative never reaches 1/2 under the requested normalization."""


@dataclass(frozen=True)
class AngularPoint:
    """Validated direction: theta in [0, 360) deg, phi in [0, 180) deg."""

    theta: float
    phi: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta < 360.0:
            raise ParameterError(f"theta must lie in [0, 360) deg, got {self.theta}")
        if not 0.0 <= self.phi < 180.0:
            raise ParameterError(f"phi must lie in [0, 180) deg, got {self.phi}")


@dataclass(frozen=True)
class EmissionProfile:
    """Pushforward of the cavity-side emission through the exit surface.

    theta_grid / Theta_values / weights are the raw pushforward samples
    (uniform grid on [0, theta_c), mapped exit angles, T*u*dtheta weights).
    Theta_edges bounds nbins histogram bins; p_hist is the normalized density
    per degree on those bins and P_cum the cumulative at the bin edges
    (P_cum[0] = 0). theta_half is the half-energy exit angle in degrees, or
    None when the cumulative saturates at or below 1/2. saturation records
    the final cumulative value under the chosen normalization.
    """

    n: float
    phi: float
    normalization_mode: str
    theta_grid: np.ndarray
    Theta_values: np.ndarray
    weights: np.ndarray
    Theta_edges: np.ndarray
    p_hist: np.ndarray
    P_cum: np.ndarray
    theta_half: float | None
    saturation: float


def critical_angle(n: float) -> float:
    """Internal critical angle arcsin(1/n) in degrees."""
    if n <= 1:
        raise ParameterError(f"n must exceed 1, got {n}")
    return math.degrees(math.asin(1.0 / n))


def angular_density(theta_deg, phi_deg, n: float):
    """Emission density u per steradian at (theta, phi); vectorized.

    theta is taken mod 360 so callers may pass any real angle; phi enters
    through cos^2 phi and needs no reduction.
    """
    if n <= 1:
        raise ParameterError(f"n must exceed 1, got {n}")
    theta = np.mod(np.asarray(theta_deg, dtype=float), 360.0)
    th = np.radians(theta)
    ph = np.radians(np.asarray(phi_deg, dtype=float))
    n5 = float(n) ** 5
    pattern = 1.0 - np.sin(th) ** 2 * np.cos(ph) ** 2
    side = np.where(theta < 180.0, n5, 1.0)
    u = 3.0 * side * pattern / (4.0 * math.pi * (n5 + 1.0))
    if np.ndim(theta_deg) == 0 and np.ndim(phi_deg) == 0:
        return float(u)
    return u


def output_angle(theta_deg, n: float):
    """Exit angle Theta = |2 theta - arcsin(n sin theta)| in degrees; vectorized.

    Defined for cavity-side launch angles below the critical angle; any
    sample at or beyond it is totally internally reflected and raises.
    """
    theta_c = critical_angle(n)
    theta = np.asarray(theta_deg, dtype=float)
    if np.any(theta < 0.0) or np.any(theta >= theta_c):
        raise ParameterError(
            f"launch angle must lie in [0, {theta_c:.6f}) deg for n={n}; "
            "beyond is total internal reflection"
        )
    th = np.radians(theta)
    Theta = np.degrees(np.abs(2.0 * th - np.arcsin(n * np.sin(th))))
    if np.ndim(theta_deg) == 0:
        return float(Theta)
    return Theta


def first_stationary_angle(n: float) -> float:
    """First stationary point of the exit map, sin^2 theta_m = (4 - n^2)/(3 n^2), in degrees.

    Below theta_m the map Theta(theta) is strictly increasing (the useful
    single-valued branch); it exists for 1 < n < 2 only.
    """
    if not 1.0 < n < 2.0:
        raise ParameterError(f"the exit map has no interior stationary point for n={n}")
    return math.degrees(math.asin(math.sqrt((4.0 - n**2) / (3.0 * n**2))))


def fresnel_components(theta_deg, n: float):
    """Power transmissions (T_p, T_s) for internal incidence theta; 0 beyond critical.

    Medium n inside, vacuum outside: with theta_t the refraction angle,
    r_s = (n cos theta - cos theta_t)/(n cos theta + cos theta_t) and
    r_p = (cos theta - n cos theta_t)/(cos theta + n cos theta_t); T = 1 - r^2.
    """
    if n <= 1:
        raise ParameterError(f"n must exceed 1, got {n}")
    theta = np.asarray(theta_deg, dtype=float)
    if np.any(theta < 0.0) or np.any(theta >= 180.0):
        raise ParameterError("incidence angle must lie in [0, 180) deg (cavity side)")
    th = np.radians(theta)
    sin_t = n * np.sin(th)
    below = sin_t < 1.0
    cos_t = np.sqrt(np.clip(1.0 - sin_t**2, 0.0, None))
    cos_i = np.cos(th)
    with np.errstate(divide="ignore", invalid="ignore"):
        r_s = (n * cos_i - cos_t) / (n * cos_i + cos_t)
        r_p = (cos_i - n * cos_t) / (cos_i + n * cos_t)
    T_p = np.where(below, 1.0 - r_p**2, 0.0)
    T_s = np.where(below, 1.0 - r_s**2, 0.0)
    if np.ndim(theta_deg) == 0:
        return float(T_p), float(T_s)
    return T_p, T_s


def fresnel_transmission(theta_deg, phi_deg, n: float):
    """Azimuth-resolved transmission T = T_p cos^2 phi + T_s sin^2 phi.

    Returns 0 at and beyond the critical angle (totally reflected).
    """
    T_p, T_s = fresnel_components(theta_deg, n)
    ph = np.radians(np.asarray(phi_deg, dtype=float))
    T = T_p * np.cos(ph) ** 2 + T_s * np.sin(ph) ** 2
    if np.ndim(theta_deg) == 0 and np.ndim(phi_deg) == 0:
        return float(T)
    return T


def slice_weight(n: float, phi_deg: float, lo_deg: float, hi_deg: float) -> float:
    """Integral of u over theta in [lo, hi] at fixed phi, in per-degree measure.

    Closed form: int (1 - sin^2 t cos^2 phi) dt = t - cos^2(phi) (t/2 - sin(2t)/4),
    applied piecewise across the cavity/vacuum boundary at 180 deg.
    """
    if not 0.0 <= lo_deg <= hi_deg <= 360.0:
        raise ParameterError(f"need 0 <= lo <= hi <= 360, got [{lo_deg}, {hi_deg}]")
    n5 = float(n) ** 5
    c2 = math.cos(math.radians(phi_deg)) ** 2

    def antideriv(t_deg: float) -> float:
        t = math.radians(t_deg)
        return t - c2 * (t / 2.0 - math.sin(2.0 * t) / 4.0)

    def piece(a: float, b: float, side_factor: float) -> float:
        if b <= a:
            return 0.0
        return side_factor * 3.0 / (4.0 * math.pi * (n5 + 1.0)) * (antideriv(b) - antideriv(a)) * 180.0 / math.pi

    cavity = piece(lo_deg, min(hi_deg, 180.0), n5)
    vacuum = piece(max(lo_deg, 180.0), hi_deg, 1.0)
    return cavity + vacuum


def pushforward_histogram(
    n: float,
    phi_deg: float,
    theta_lo: float,
    theta_hi: float,
    grid_size: int,
    nbins: int,
    solid_angle: bool = False,
):
    """Histogram the exit-angle pushforward of T*u over theta in [lo, hi).

    Samples the midpoints of grid_size uniform cells, maps them through the
    exit-angle function, and bins the weights T * u * dtheta (optionally with
    an extra |sin theta| for the solid-angle-weighted variant). Returns
    (theta, Theta, weights, edges, masses) with edges spanning [0, max Theta].
    """
    if grid_size < 1000:
        raise ParameterError(f"grid_size must be at least 1000, got {grid_size}")
    if nbins < 1:
        raise ParameterError(f"nbins must be positive, got {nbins}")
    theta_c = critical_angle(n)
    if not 0.0 <= theta_lo < theta_hi <= theta_c:
        raise ParameterError(
            f"theta range must satisfy 0 <= lo < hi <= theta_c ({theta_c:.6f}), "
            f"got [{theta_lo}, {theta_hi}]"
        )
    dtheta = (theta_hi - theta_lo) / grid_size
    theta = theta_lo + (np.arange(grid_size) + 0.5) * dtheta
    Theta = output_angle(theta, n)
    w = fresnel_transmission(theta, phi_deg, n) * angular_density(theta, phi_deg, n) * dtheta
    if solid_angle:
        w = w * np.abs(np.sin(np.radians(theta)))
    top = max(float(Theta.max()), 1e-12)
    edges = np.linspace(0.0, top, nbins + 1)
    masses, _ = np.histogram(Theta, bins=edges, weights=w)
    return theta, Theta, w, edges, masses


def emission_profile(
    n: float,
    phi_deg: float,
    normalization_mode: str = "transmitted",
    grid_size: int = 200_001,
    nbins: int = 2000,
    solid_angle: bool = False,
) -> EmissionProfile:
    """Exit-angle density and cumulative for one azimuth slice.

    normalization_mode selects the denominator of p and P:
      transmitted       total weight that actually exits (P saturates at 1)
      front_hemisphere  slice weight of theta in [0, 90)
      full_sphere       slice weight of theta in [0, 360)
    Short aliases "front" and "full" are accepted.
    """
    mode = _MODE_ALIASES.get(normalization_mode, normalization_mode)
    if mode not in NORMALIZATION_MODES:
        raise ParameterError(
            f"unknown normalization mode {normalization_mode!r}; "
            f"expected one of {NORMALIZATION_MODES} (or front/full aliases)"
        )
    theta_c = critical_angle(n)
    theta, Theta, w, edges, masses = pushforward_histogram(
        n, phi_deg, 0.0, theta_c, grid_size, nbins, solid_angle=solid_angle
    )
    total = float(w.sum())
    if mode == "transmitted":
        Z = total
    elif mode == "front_hemisphere":
        Z = _reference_weight(n, phi_deg, 0.0, 90.0, solid_angle)
    else:
        Z = _reference_weight(n, phi_deg, 0.0, 360.0, solid_angle)
    p_hist = masses / np.diff(edges) / Z
    P_cum = np.concatenate(([0.0], np.cumsum(masses))) / Z
    saturation = float(P_cum[-1])
    theta_half = _solve_half_energy(edges, P_cum) if saturation > 0.5 else None
    return EmissionProfile(
        n=n,
        phi=phi_deg,
        normalization_mode=mode,
        theta_grid=theta,
        Theta_values=Theta,
        weights=w,
        Theta_edges=edges,
        p_hist=p_hist,
        P_cum=P_cum,
        theta_half=theta_half,
        saturation=saturation,
    )


def _reference_weight(n: float, phi_deg: float, lo: float, hi: float, solid_angle: bool) -> float:
    if not solid_angle:
        return slice_weight(n, phi_deg, lo, hi)
    # sensitivity variant: same slice weight with the |sin theta| factor, by quadrature
    m = 400_000
    d = (hi - lo) / m
    t = lo + (np.arange(m) + 0.5) * d
    u = angular_density(t, phi_deg, n) * np.abs(np.sin(np.radians(t)))
    return float(u.sum() * d)


def _solve_half_energy(edges: np.ndarray, P_cum: np.ndarray) -> float:
    # bisection on the piecewise-linear cumulative, to 1e-4 degree
    lo, hi = float(edges[0]), float(edges[-1])
    while hi - lo > 1e-4:
        mid = 0.5 * (lo + hi)
        if np.interp(mid, edges, P_cum) < 0.5:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def half_energy_angle(profile: EmissionProfile) -> float:
    """Exit angle containing half the (normalized) energy, in degrees.

    Raises HalfEnergyUndefined when the cumulative saturates at or below 1/2,
    which happens under the hemisphere/sphere normalizations when too little
    light exits the surface.
    """
    if profile.theta_half is None:
        raise HalfEnergyUndefined(
            "half-energy angle undefined under this normalization "
            f"(cumulative saturates at {profile.saturation:.6f} <= 0.5)"
        )
    return profile.theta_half


def cumulative_at(profile: EmissionProfile, Theta_deg: float) -> float:
    """Cumulative collected fraction P(Theta) by linear interpolation."""
    return float(np.interp(Theta_deg, profile.Theta_edges, profile.P_cum))


def slice_energy_budget(n: float, phi_deg: float) -> dict[str, float]:
    """Energy bookkeeping for one azimuth slice, all in per-degree slice weight.

    transmitted + fresnel_reflected + tir_reflected + vacuum_side = total
    (transmission and its complement integrated by adaptive quadrature below
    the critical angle; the TIR and vacuum parts are closed-form slice weights).
    """
    from scipy.integrate import quad

    theta_c = critical_angle(n)

    def transmitted_integrand(t: float) -> float:
        return fresnel_transmission(t, phi_deg, n) * angular_density(t, phi_deg, n)

    def reflected_integrand(t: float) -> float:
        return (1.0 - fresnel_transmission(t, phi_deg, n)) * angular_density(t, phi_deg, n)

    transmitted, _ = quad(transmitted_integrand, 0.0, theta_c, epsabs=1e-13, epsrel=1e-12, limit=200)
    reflected, _ = quad(reflected_integrand, 0.0, theta_c, epsabs=1e-13, epsrel=1e-12, limit=200)
    return {
        "transmitted": transmitted,
        "fresnel_reflected": reflected,
        "tir_reflected": slice_weight(n, phi_deg, theta_c, 180.0),
        "vacuum_side": slice_weight(n, phi_deg, 180.0, 360.0),
        "total": slice_weight(n, phi_deg, 0.0, 360.0),
    }
