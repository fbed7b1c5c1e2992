"""Mean mode energy of a discrete oscillator spectrum and the Wien-scaling test.

For a level ladder E_n = n g(nu) with Boltzmann weights, the average energy
per mode has the closed form g / (e^(g/kT) - 1). Wien's functional
constraint f = nu F(nu/kT) holds exactly when the quantum g is linear in
nu; any other power law violates the scaling, which is how the linear form
is singled out. Only the mode energy is computed here, not the spectral
energy density (no 8 pi nu^2/c^3 prefactor).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InsufficientSamplesError

#: Boltzmann constant, erg/K (exact); callers may pass a registry value instead.
K_BOLTZMANN = 1.380649e-16

#: (nu, T) samples used by default when classifying a spectral form.
DEFAULT_SAMPLE_GRID = ((1e12, 300.0), (1e14, 5000.0), (6e14, 12000.0))

#: Scale factors applied to (nu, T) in the Wien-compatibility sweep.
DEFAULT_LAMBDAS = (0.5, 2.0, 10.0)


@dataclass(frozen=True)
class SpectrumForm:
    """Oscillator quantum g(nu) = a * nu^p, in erg for nu in Hz.

    p = 1 is the linear (Planck) form; p >= 0 covers the power laws the
    Wien test is meant to reject.
    """

    a: float
    p: float = 1.0

    def __post_init__(self):
        if self.a <= 0.0:
            raise DomainError(f"spectrum coefficient must be positive, got {self.a!r}")
        if self.p < 0.0:
            raise DomainError(f"spectrum power must be non-negative, got {self.p!r}")

    @classmethod
    def linear(cls, a: float) -> "SpectrumForm":
        return cls(a, 1.0)

    @classmethod
    def power_law(cls, a: float, p: float) -> "SpectrumForm":
        return cls(a, p)

    def quantum(self, nu: float) -> float:
        return self.a * nu**self.p


@dataclass(frozen=True)
class WienVerdict:
    wien_compatible: bool
    max_residual: float


def mean_mode_energy(form: SpectrumForm, nu: float, T: float, k_boltzmann: float = K_BOLTZMANN) -> float:
    """Average energy g/(e^(g/kT) - 1) of one mode at frequency nu and temperature T.

    Numerically safe across the whole ratio range: for g/kT >= 700 the
    exponential tail g e^(-g/kT) is returned directly (the general form
    would overflow), and for g/kT < 1e-8 the series kT (1 - x/2 + x^2/12)
    avoids the e^x - 1 cancellation.
    """
    if nu <= 0.0:
        raise DomainError(f"frequency must be positive, got {nu!r}")
    if T <= 0.0:
        raise DomainError(f"temperature must be positive, got {T!r}")
    g = form.quantum(nu)
    x = g / (k_boltzmann * T)
    if x >= 700.0:
        return g * math.exp(-x)
    if x < 1e-8:
        return k_boltzmann * T * (1.0 - x / 2.0 + x * x / 12.0)
    return g / math.expm1(x)


def wien_scaling_residual(
    form: SpectrumForm,
    nu: float,
    T: float,
    lam: float,
    k_boltzmann: float = K_BOLTZMANN,
) -> float:
    """Relative breakage of f(lam*nu, lam*T) = lam * f(nu, T) under joint scaling.

    Zero (below 1e-12) exactly when the form satisfies Wien's constraint,
    i.e. when g is proportional to nu.
    """
    if lam <= 0.0:
        raise DomainError(f"scale factor must be positive, got {lam!r}")
    reference = lam * mean_mode_energy(form, nu, T, k_boltzmann)
    scaled = mean_mode_energy(form, lam * nu, lam * T, k_boltzmann)
    return abs(scaled - reference) / reference


def classify_law(
    form: SpectrumForm,
    samples=DEFAULT_SAMPLE_GRID,
    lambdas=DEFAULT_LAMBDAS,
    residual_cap: float = 1e-9,
    k_boltzmann: float = K_BOLTZMANN,
) -> WienVerdict:
    """Wien-compatible iff the scaling residual stays under residual_cap everywhere."""
    if len(samples) < 3:
        raise InsufficientSamplesError(f"need at least 3 samples, got {len(samples)}")
    worst = 0.0
    for nu, T in samples:
        for lam in lambdas:
            worst = max(worst, wien_scaling_residual(form, nu, T, lam, k_boltzmann))
    return WienVerdict(wien_compatible=worst <= residual_cap, max_residual=worst)
