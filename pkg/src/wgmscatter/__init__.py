"""Free-space excitation and collection for a Rayleigh grain on a microsphere.

The package computes, from first-principles closed forms, how efficiently a
focused Gaussian beam drives a high-Q whispering-gallery mode through the
dipole of a surface grain (coupling rates, transmission spectrum, excitation
efficiency) and how directionally the sphere collimates the grain's emission
(angular density, exit-angle pushforward, half-energy angle).
"""

__version__ = "0.1.0"

from .params import (
    C_VACUUM,
    BeamSpec,
    MicrosphereSpec,
    ModeSpec,
    ParameterError,
    ScattererSpec,
    SystemParams,
    mode_volume,
    omega_from_lambda,
    polarizability,
    validate,
)
from .beam_optics import FocusedBeam, focal_length, focus_params, lens_transform, mode_area
from .coupling import (
    CouplingRates,
    excitation_rates,
    g_in,
    kappa_in,
    kappa_reservoir,
    lasing_rates,
    mode_shift,
)
from .spectral import (
    ConvergenceError,
    DriveSpec,
    SteadyState,
    efficiency_variants,
    excitation_efficiency,
    langevin_time_domain,
    settled_transmission,
    steady_state,
    t_min,
    transmission_amplitude,
    transmission_spectrum,
)
from .emission import (
    AngularPoint,
    EmissionProfile,
    HalfEnergyUndefined,
    angular_density,
    critical_angle,
    cumulative_at,
    emission_profile,
    first_stationary_angle,
    fresnel_components,
    fresnel_transmission,
    half_energy_angle,
    output_angle,
    pushforward_histogram,
    slice_energy_budget,
    slice_weight,
)
from .config import ConfigError, SweepGrid, parse_config
from .sweep import Dataset, SweepError, parse_csv, run_sweep

__all__ = [
    "__version__",
    "C_VACUUM",
    "AngularPoint",
    "BeamSpec",
    "ConfigError",
    "ConvergenceError",
    "CouplingRates",
    "Dataset",
    "DriveSpec",
    "EmissionProfile",
    "FocusedBeam",
    "HalfEnergyUndefined",
    "MicrosphereSpec",
    "ModeSpec",
    "ParameterError",
    "ScattererSpec",
    "SteadyState",
    "SweepError",
    "SweepGrid",
    "SystemParams",
    "angular_density",
    "critical_angle",
    "cumulative_at",
    "efficiency_variants",
    "emission_profile",
    "excitation_efficiency",
    "excitation_rates",
    "first_stationary_angle",
    "focal_length",
    "focus_params",
    "fresnel_components",
    "fresnel_transmission",
    "g_in",
    "half_energy_angle",
    "kappa_in",
    "kappa_reservoir",
    "langevin_time_domain",
    "lasing_rates",
    "lens_transform",
    "mode_area",
    "mode_shift",
    "mode_volume",
    "omega_from_lambda",
    "output_angle",
    "parse_config",
    "parse_csv",
    "polarizability",
    "run_sweep",
    "settled_transmission",
    "pushforward_histogram",
    "slice_energy_budget",
    "slice_weight",
    "steady_state",
    "t_min",
    "transmission_amplitude",
    "transmission_spectrum",
    "validate",
]
