"""Fluctuational particle creation over cosmic time.

The creation law dN/dt = sqrt(N)/tau is integrated in the scaled variable
u = sqrt(N), where it is linear (du/dt = 1/(2 tau)): that avoids loss of
significance near N ~ 1e80 and makes classical RK4 exact up to rounding.

Two closed forms are implemented side by side, never silently merged:

* ``exact``: sqrt(N) = t / (2 tau), the direct integral from N(0) = 0;
* ``paper``: sqrt(N) = 2 t / tau, the stated result, 4x larger in sqrt(N)
  and exactly 16x larger in N at equal time.

Both reach N = 1e80 within [1e16, 1e17] s for the default constants.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    DimensionMismatchError,
    DomainError,
    EmptySeriesError,
    InvalidStepsError,
    NegativeTimeError,
)
from .quantity import Quantity, TIME, MASS
from .registry import ConstantsRegistry

CSV_COLUMNS = (
    "t_s",
    "N",
    "M_g",
    "R_cm",
    "H_per_s",
    "l_cm",
    "hbar_check_erg_s",
    "lambda_bound_per_s2",
)


class Variant(str, enum.Enum):
    EXACT = "exact"
    PAPER_STATED = "paper"


@dataclass(frozen=True)
class CosmoParams:
    """Particle mass, creation-law variant and target count for one run."""

    registry: ConstantsRegistry
    m: Quantity
    N_target: float = 1e80
    variant: Variant = Variant.EXACT

    def __post_init__(self):
        if self.m.dim != MASS:
            raise DimensionMismatchError(self.m.dim, MASS, context="CosmoParams.m")
        if self.m.value <= 0.0:
            raise DomainError(f"particle mass must be positive, got {self.m.value!r}")
        if self.N_target <= 0.0:
            raise DomainError(f"N_target must be positive, got {self.N_target!r}")

    @classmethod
    def defaults(
        cls,
        registry: ConstantsRegistry,
        m: Quantity | None = None,
        N_target: float = 1e80,
        variant: Variant = Variant.EXACT,
    ) -> "CosmoParams":
        return cls(registry, m if m is not None else registry.get("m_pi"), N_target, variant)

    @property
    def tau(self) -> Quantity:
        """Compton time hbar/(m c^2); recomputed, never stored stale."""
        c = self.registry.get("c")
        return self.registry.get("hbar") / (self.m * c * c)

    def _sqrtN_rate(self) -> float:
        # d(sqrt N)/dt; the paper variant is bit-exactly 4x the exact one
        tau = self.tau.value
        return 0.5 / tau if self.variant is Variant.EXACT else 2.0 / tau


@dataclass(frozen=True)
class EpochState:
    """Snapshot of the universe at time t, fully derived from N and the registry."""

    t: Quantity
    N: float
    M: Quantity
    R: Quantity
    H_epoch: Quantity
    l_uncertainty: Quantity
    hbar_check: Quantity
    lambda_bound: Quantity


def _state_at(params: CosmoParams, t_seconds: float, sqrtN: float) -> EpochState:
    reg = params.registry
    G, c = reg.get("G"), reg.get("c")
    M = params.m * (sqrtN * sqrtN)
    R = G * M / (c * c)
    H = c / R
    return EpochState(
        t=Quantity(t_seconds, TIME),
        N=sqrtN * sqrtN,
        M=M,
        R=R,
        H_epoch=H,
        l_uncertainty=R / sqrtN,
        hbar_check=G * sqrtN * params.m * params.m / c,
        lambda_bound=H * H,
    )


def sqrtN_closed(t: Quantity, params: CosmoParams) -> float:
    """Closed-form sqrt(N) at time t for the active variant; monotone in t."""
    if t.dim != TIME:
        raise DimensionMismatchError(t.dim, TIME, context="sqrtN_closed")
    if t.value < 0.0:
        raise NegativeTimeError(f"time must be non-negative, got {t.value!r}")
    tau = params.tau.value
    if params.variant is Variant.EXACT:
        return t.value / (2.0 * tau)
    return 2.0 * t.value / tau


def evolve(params: CosmoParams, t_end: Quantity, steps: int) -> list[EpochState]:
    """Integrate the creation law with classical RK4 on a uniform grid.

    Emits one state after each of the `steps` equal steps (t = h, 2h, ...,
    t_end); t = 0 itself is not emitted since R and H are undefined at N = 0.
    The ODE is linear in sqrt(N), so RK4 reproduces the closed form to
    rounding (relative error in N below 1e-9 at every grid point).
    """
    if t_end.dim != TIME:
        raise DimensionMismatchError(t_end.dim, TIME, context="evolve")
    if t_end.value <= 0.0:
        raise NegativeTimeError(f"t_end must be positive, got {t_end.value!r}")
    if steps < 2:
        raise InvalidStepsError(f"steps must be >= 2, got {steps}")

    rate = params._sqrtN_rate()
    h = t_end.value / steps
    u = 0.0
    states = []
    for k in range(1, steps + 1):
        k1 = rate
        k2 = rate
        k3 = rate
        k4 = rate
        u = u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        states.append(_state_at(params, k * h, u))
    return states


def present_epoch(params: CosmoParams) -> EpochState:
    """Invert the active closed form to the time where N reaches N_target."""
    sqrtN = params.N_target ** 0.5
    tau = params.tau.value
    if params.variant is Variant.EXACT:
        t = 2.0 * tau * sqrtN
    else:
        t = tau * sqrtN / 2.0
    return _state_at(params, t, sqrtN)


def check_expansion(series: list[EpochState]) -> bool:
    """True iff R strictly increases and H strictly decreases along the series."""
    if not series:
        raise EmptySeriesError("empty epoch series")
    return all(
        b.R.value > a.R.value and b.H_epoch.value < a.H_epoch.value
        for a, b in zip(series, series[1:])
    )


def _row_values(state: EpochState) -> tuple[float, ...]:
    return (
        state.t.value,
        state.N,
        state.M.value,
        state.R.value,
        state.H_epoch.value,
        state.l_uncertainty.value,
        state.hbar_check.value,
        state.lambda_bound.value,
    )


def states_to_csv(states: list[EpochState]) -> str:
    """Render states as CSV: fixed column order, 9 significant digits."""
    lines = [",".join(CSV_COLUMNS)]
    for state in states:
        lines.append(",".join(f"{v:.8e}" for v in _row_values(state)))
    return "\n".join(lines) + "\n"


def states_to_records(states: list[EpochState]) -> list[dict]:
    """JSON-ready records with the CSV column names as keys."""
    return [dict(zip(CSV_COLUMNS, _row_values(state))) for state in states]
