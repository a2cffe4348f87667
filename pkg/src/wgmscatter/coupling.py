"""Scattering-induced coupling and decay rates of the driven mode pair.

The grain splits each whispering-gallery resonance into standing-wave normal
modes; the symmetric one couples to free space. Three rates govern it:

    g        grain-induced mode shift (the effective resonance is omega - 2 g)
    kappa_in in-coupling rate feeding the mode from the focused drive beam
    kappa_R  reservoir decay: dipole re-radiation into all non-cavity modes

All rates are angular (rad/s) and exactly quadratic in the polarizability
alpha, except g which is linear.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .beam_optics import FocusedBeam, focus_params
from .params import C_VACUUM, ParameterError, SystemParams


@dataclass(frozen=True)
class CouplingRates:
    """Rate bundle for one mode. kappa_R houses the reservoir decay for the
    excitation mode or the free-space out-coupling rate for the lasing mode
    (same physical channel, evaluated at that mode's frequency).
    """

    g_self: float
    kappa_in: float
    kappa_R: float
    kappa_0: float
    omega: float

    def __post_init__(self) -> None:
        bad = []
        if self.g_self < 0:
            bad.append(f"g_self < 0 ({self.g_self})")
        if self.kappa_in < 0:
            bad.append(f"kappa_in < 0 ({self.kappa_in})")
        if self.kappa_R < 0:
            bad.append(f"kappa_R < 0 ({self.kappa_R})")
        if self.kappa_0 < 0:
            bad.append(f"kappa_0 < 0 ({self.kappa_0})")
        if self.omega - 2.0 * self.g_self <= 0:
            bad.append(f"omega - 2 g_self must stay positive ({self.omega - 2 * self.g_self})")
        if bad:
            raise ParameterError("; ".join(bad))

    @property
    def omega_eff(self) -> float:
        """Shifted resonance of the bright standing-wave mode."""
        return self.omega - 2.0 * self.g_self

    @property
    def kappa_total(self) -> float:
        """Amplitude decay rate kappa_0/2 + kappa_in + kappa_R."""
        return 0.5 * self.kappa_0 + self.kappa_in + self.kappa_R


def mode_shift(alpha: float, omega: float, f0: float, eps_c: float, V: float) -> float:
    """Grain-induced shift g = alpha omega f0^2 / (2 eps_c V). Linear in alpha."""
    return alpha * omega * f0**2 / (2.0 * eps_c * V)


def kappa_in(
    alpha: float,
    f0: float,
    omega: float,
    omega_eff: float,
    eps_c: float,
    V: float,
    A_s: float,
) -> float:
    """Drive-beam in-coupling rate via the grain dipole.

    kappa_in = alpha^2 f0^2 omega omega_eff / (4 eps_c c V A_s).
    Inversely proportional to the focused mode area A_s: tighter focusing at
    the grain plane couples faster.
    """
    return alpha**2 * f0**2 * omega * omega_eff / (4.0 * eps_c * C_VACUUM * V * A_s)


def kappa_reservoir(
    alpha: float,
    f0: float,
    omega: float,
    omega_eff: float,
    eps_c: float,
    V: float,
    n: float,
) -> float:
    """Reservoir decay of the bright mode by dipole re-radiation.

    kappa_R = (n^5 + 1) alpha^2 omega omega_eff^3 f0^2 / (12 pi c^3 eps_c V).
    The (n^5 + 1) factor splits n^5 : 1 between radiation into the dense
    cavity-side photon states and into vacuum.
    """
    return (
        (n**5 + 1.0)
        * alpha**2
        * omega
        * omega_eff**3
        * f0**2
        / (12.0 * math.pi * C_VACUUM**3 * eps_c * V)
    )


def g_in(
    alpha: float,
    f0: float,
    omega_mode: float,
    omega: float,
    eps_c: float,
    V: float,
    A_s: float,
) -> float:
    """Per-frequency drive coupling amplitude, kept for reference.

    g_in(omega) = -(alpha f0 / 2) sqrt(omega_mode omega / (2 pi eps_c c V A_s)).
    The sign follows the source convention and never matters on its own;
    the physical content is kappa_in = 2 pi g_in(omega_eff)^2.
    """
    return -0.5 * alpha * f0 * math.sqrt(
        omega_mode * omega / (2.0 * math.pi * eps_c * C_VACUUM * V * A_s)
    )


def excitation_rates(params: SystemParams, beam: FocusedBeam | None = None) -> CouplingRates:
    """Rate bundle for the driven excitation mode (lambda1).

    The focused beam is recomputed from params unless one is supplied.
    kappa_0 = omega1 / Q0.
    """
    if beam is None:
        beam = focus_params(params)
    g1 = mode_shift(params.alpha, params.omega1, params.excitation.f0, params.eps_c, params.V1)
    omega_eff = params.omega1 - 2.0 * g1
    return CouplingRates(
        g_self=g1,
        kappa_in=kappa_in(
            params.alpha,
            params.excitation.f0,
            params.omega1,
            omega_eff,
            params.eps_c,
            params.V1,
            beam.A_s,
        ),
        kappa_R=kappa_reservoir(
            params.alpha,
            params.excitation.f0,
            params.omega1,
            omega_eff,
            params.eps_c,
            params.V1,
            params.sphere.n,
        ),
        kappa_0=params.omega1 / params.sphere.Q0,
        omega=params.omega1,
    )


def lasing_rates(params: SystemParams) -> CouplingRates:
    """Rate bundle for the lasing mode (lambda2).

    No free-space drive channel is modeled for this mode, so kappa_in = 0;
    kappa_R here is the out-coupling rate into free space (the figure of
    merit for collecting the emission). kappa_0 = omega2 / Q0.
    """
    g2 = mode_shift(params.alpha, params.omega2, params.lasing.f0, params.eps_c, params.V2)
    omega_eff = params.omega2 - 2.0 * g2
    return CouplingRates(
        g_self=g2,
        kappa_in=0.0,
        kappa_R=kappa_reservoir(
            params.alpha,
            params.lasing.f0,
            params.omega2,
            omega_eff,
            params.eps_c,
            params.V2,
            params.sphere.n,
        ),
        kappa_0=params.omega2 / params.sphere.Q0,
        omega=params.omega2,
    )
