"""Shared fixtures: the baseline system used across the suite.

Numerical reference values in the tests were frozen from a 60-digit
mpmath evaluation of the same closed-form expressions (two independent
exponentiation routes agreed to 1e-50 before freezing).
"""
import pytest

from wgmscatter import (
    BeamSpec,
    MicrosphereSpec,
    ModeSpec,
    ScattererSpec,
    SystemParams,
    excitation_rates,
    validate,
)

BASELINE_CFG = """\
R = 10 um
n = 1.7
Q0 = 1e8
r_s = 50 nm
eps_s = 12
lambda1 = 977 nm
lambda2 = 1550 nm
f1_0 = 0.4
w0 = 5 um
s = 0
"""


def make_baseline(**overrides) -> SystemParams:
    sphere = MicrosphereSpec(
        R=overrides.pop("R", 10e-6),
        n=overrides.pop("n", 1.7),
        Q0=overrides.pop("Q0", 1e8),
    )
    scatterer = ScattererSpec(
        r_s=overrides.pop("r_s", 50e-9),
        eps_s=overrides.pop("eps_s", 12.0),
    )
    lam1 = overrides.pop("lambda1", 977e-9)
    beam = BeamSpec(wavelength=lam1, w0=overrides.pop("w0", 5e-6), s=overrides.pop("s", 0.0))
    f0 = overrides.pop("f1_0", 0.4)
    excitation = ModeSpec(wavelength=lam1, f0=f0)
    lasing = ModeSpec(
        wavelength=overrides.pop("lambda2", 1550e-9),
        f0=overrides.pop("f2_0", f0),
    )
    if overrides:
        raise TypeError(f"unknown overrides: {sorted(overrides)}")
    return validate(
        SystemParams(
            sphere=sphere,
            scatterer=scatterer,
            beam=beam,
            excitation=excitation,
            lasing=lasing,
        )
    )


@pytest.fixture(scope="session")
def baseline() -> SystemParams:
    return make_baseline()


@pytest.fixture(scope="session")
def baseline_rates(baseline):
    return excitation_rates(baseline)
