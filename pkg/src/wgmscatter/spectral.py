"""Steady-state response of the driven bright mode: transmission and efficiency.

Mean-field input-output model. With a_plus the bright-mode amplitude in a
frame rotating at the drive frequency omega and delta = omega - omega_eff,

    d a/dt = (i delta - kappa_total) a - sqrt(2 kappa_in) b_in
    b_out  = b_in + sqrt(2 kappa_in) a

so the amplitude transmission is

    t(omega) = 1 + 2 kappa_in / (i delta - kappa_total),

with kappa_total = kappa_0/2 + kappa_in + kappa_R. Power conservation holds
exactly: |b_in|^2 - |b_out|^2 = (kappa_0 + 2 kappa_R) |a|^2.

``langevin_time_domain`` integrates the same equation of motion with a
fixed-step RK4 scheme and serves as the independent oracle for the closed
forms; it shares no algebra with ``transmission_amplitude``.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .coupling import CouplingRates
from .params import ParameterError


class ConvergenceError(RuntimeError):
    """Time-domain run did not settle to steady state within the horizon."""


@dataclass(frozen=True)
class DriveSpec:
    """Monochromatic drive: angular frequency (rad/s) and field amplitude.

    The amplitude is in sqrt(photons/s); only ratios enter the observables,
    so 1.0 is the natural choice.
    """

    omega_drive: float
    amplitude: float = 1.0

    def __post_init__(self) -> None:
        if self.omega_drive <= 0:
            raise ParameterError(f"omega_drive must be positive, got {self.omega_drive}")
        if self.amplitude < 0:
            raise ParameterError(f"amplitude must be nonnegative, got {self.amplitude}")


@dataclass(frozen=True)
class SteadyState:
    """Settled response: rotating-frame mode amplitude, power transmission
    |b_out/b_in|^2, and the flux (photons/s) lost from the beam into
    absorption + reservoir scattering, (kappa_0 + 2 kappa_R) |a_plus|^2.
    """

    a_plus: complex
    transmission: float
    intracavity_flux_loss: float


def transmission_amplitude(rates: CouplingRates, omega):
    """Amplitude transmission t(omega); accepts a scalar or an array of omega."""
    delta = np.asarray(omega, dtype=float) - rates.omega_eff
    t = 1.0 + 2.0 * rates.kappa_in / (1j * delta - rates.kappa_total)
    if np.ndim(omega) == 0:
        return complex(t)
    return t


def t_min(rates: CouplingRates) -> float:
    """On-resonance power transmission, the dip floor of the spectrum.

    T_min = ((2 kappa_in - kappa_0 - 2 kappa_R) / (2 kappa_in + kappa_0 + 2 kappa_R))^2.
    Zero exactly at critical coupling 2 kappa_in = kappa_0 + 2 kappa_R.
    """
    num = 2.0 * rates.kappa_in - rates.kappa_0 - 2.0 * rates.kappa_R
    den = 2.0 * rates.kappa_in + rates.kappa_0 + 2.0 * rates.kappa_R
    return (num / den) ** 2


def excitation_efficiency(rates: CouplingRates) -> float:
    """Fraction of drive power removed from the beam on resonance.

    Computed from the amplitude response, eta = 1 - |t(omega_eff)|^2. See
    ``efficiency_variants`` for the closed forms this is equivalent to (and
    the near-miss variants it is not).
    """
    t = transmission_amplitude(rates, rates.omega_eff)
    return 1.0 - (t.real**2 + t.imag**2)


def efficiency_variants(rates: CouplingRates) -> dict[str, float]:
    """Closed-form efficiency expressions kept side by side for comparison.

    amplitude      1 - |t(omega_eff)|^2, the definition used everywhere here
    exact          8 kappa_in (kappa_0 + 2 kappa_R) / (kappa_0 + 2 kappa_in + 2 kappa_R)^2,
                   algebraically identical to `amplitude`
    variant_half   4 kappa_in (kappa_0 + 2 kappa_R) / (kappa_0 + 2 kappa_in + 2 kappa_R)^2,
                   a commonly quoted form that is low by a factor of two
                   (it peaks at 1/2 at critical coupling)
    variant_conv   4 kappa_in (kappa_0 + kappa_R) / (kappa_0 + kappa_in + kappa_R)^2,
                   the textbook form under the convention where kappa_0
                   denotes the amplitude (half-width) decay; it equals `exact`
                   only after substituting kappa_0 -> kappa_0 / 2
    """
    k0, ki, kr = rates.kappa_0, rates.kappa_in, rates.kappa_R
    den = (k0 + 2.0 * ki + 2.0 * kr) ** 2
    return {
        "amplitude": excitation_efficiency(rates),
        "exact": 8.0 * ki * (k0 + 2.0 * kr) / den,
        "variant_half": 4.0 * ki * (k0 + 2.0 * kr) / den,
        "variant_conv": 4.0 * ki * (k0 + kr) / (k0 + ki + kr) ** 2,
    }


def steady_state(rates: CouplingRates, drive: DriveSpec) -> SteadyState:
    """Closed-form settled response under a monochromatic drive."""
    delta = drive.omega_drive - rates.omega_eff
    denom = 1j * delta - rates.kappa_total
    a = cmath.sqrt(2.0 * rates.kappa_in) * drive.amplitude / denom
    return _pack_state(rates, drive, a)


def _pack_state(rates: CouplingRates, drive: DriveSpec, a: complex) -> SteadyState:
    loss = (rates.kappa_0 + 2.0 * rates.kappa_R) * abs(a) ** 2
    if drive.amplitude == 0.0:
        return SteadyState(a_plus=a, transmission=1.0, intracavity_flux_loss=loss)
    b_out = drive.amplitude + (2.0 * rates.kappa_in) ** 0.5 * a
    return SteadyState(
        a_plus=a,
        transmission=abs(b_out) ** 2 / drive.amplitude**2,
        intracavity_flux_loss=loss,
    )


def transmission_spectrum(rates: CouplingRates, omega_grid: Sequence[float]) -> list[tuple[float, float]]:
    """Power transmission sampled on an ascending frequency grid.

    Returns (omega, T) pairs. The grid must be nonempty and sorted.
    """
    grid = np.asarray(omega_grid, dtype=float)
    if grid.size == 0:
        raise ParameterError("omega grid is empty")
    if np.any(np.diff(grid) < 0):
        raise ParameterError("omega grid must be sorted ascending")
    t = transmission_amplitude(rates, grid)
    T = np.abs(np.atleast_1d(t)) ** 2
    return list(zip(grid.tolist(), T.tolist()))


def langevin_time_domain(
    rates: CouplingRates,
    drive: DriveSpec,
    horizon: float,
    step: float,
    a0: complex = 0.0,
) -> SteadyState:
    """Integrate the mean-field equation of motion to steady state (RK4, fixed step).

    Works in the frame rotating at the drive frequency, where the equation is
    autonomous: da/dt = (i delta - kappa_total) a - sqrt(2 kappa_in) b, with
    constant b. Noise input is zero in the mean-field limit, so the settled
    amplitude is deterministic.

    Preconditions: step < 0.1 / max(|delta|, kappa_total) so the fastest scale
    is resolved, and horizon > 10 / kappa_total so the transient can die.
    Raises ConvergenceError if the amplitude still changed by more than 1e-9
    (relative) across the last tenth of the run.
    """
    delta = drive.omega_drive - rates.omega_eff
    ktot = rates.kappa_total
    if ktot <= 0:
        raise ParameterError("kappa_total must be positive for a settling mode")
    fastest = max(abs(delta), ktot)
    if not 0.0 < step < 0.1 / fastest:
        raise ParameterError(
            f"step must lie in (0, {0.1 / fastest:.3e}) s to resolve the dynamics, got {step}"
        )
    if horizon <= 10.0 / ktot:
        raise ParameterError(
            f"horizon must exceed {10.0 / ktot:.3e} s for the transient to decay, got {horizon}"
        )

    coef = complex(-ktot, delta)
    src = -((2.0 * rates.kappa_in) ** 0.5) * drive.amplitude
    n_steps = int(horizon / step) + 1
    mark = int(0.9 * n_steps)  # start of the final tenth, for the settling check
    a = complex(a0)
    a_mark = a
    h = step
    for i in range(n_steps):
        k1 = coef * a + src
        k2 = coef * (a + 0.5 * h * k1) + src
        k3 = coef * (a + 0.5 * h * k2) + src
        k4 = coef * (a + h * k3) + src
        a = a + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if i == mark:
            a_mark = a

    scale = max(abs(a), abs(a_mark))
    # an undriven mode decays to numerical zero; below this floor the relative
    # criterion is meaningless and the run counts as settled
    vacuum_floor = 1e-12 * (abs(a0) + drive.amplitude)
    if scale > vacuum_floor and abs(a - a_mark) / scale > 1e-9:
        raise ConvergenceError(
            f"amplitude still drifting (relative change {abs(a - a_mark) / scale:.2e} "
            "over the last tenth of the horizon); extend the horizon"
        )
    return _pack_state(rates, drive, a)


def settled_transmission(rates: CouplingRates, omega_drive: float) -> SteadyState:
    """Time-domain steady state with safe default step and horizon.

    Convenience wrapper around ``langevin_time_domain`` used by the
    verification command and the oracle tests: step resolves the fastest
    scale with margin and the horizon leaves the transient below 1e-12.
    """
    delta = omega_drive - rates.omega_eff
    fastest = max(abs(delta), rates.kappa_total)
    step = 0.05 / fastest
    horizon = 30.0 / rates.kappa_total
    return langevin_time_domain(rates, DriveSpec(omega_drive), horizon, step)
