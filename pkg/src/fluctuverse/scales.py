"""Compton-scale and Planck-scale consequences of the model.

Characteristic lengths and masses, fractional charges, the confining
two-term potential, self-gravitating energies and the Planck-particle
bookkeeping. Everything is a pure function over a sealed registry, except
the potential and coupling helpers, which work in natural units
(hbar = c = 1, masses and inverse lengths sharing one energy unit) and
take plain floats; conversion between the two worlds is always explicit
at the call site.

Convention: the gravitational radius here is G m / c^2, without the
textbook factor 2 — a 0.3-decade effect, invisible at these tolerances,
and the form under which the Planck-scale identity G m_P/c^2 = hbar/(m_P c)
is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, DomainError, UnsupportedDimensionError
from .quantity import MASS, LENGTH, Quantity, decades_deviation
from .registry import ConstantsRegistry


def _require_mass(m: Quantity, context: str) -> None:
    if m.dim != MASS:
        raise DimensionMismatchError(m.dim, MASS, context=context)
    if m.value <= 0.0:
        raise DomainError(f"{context}: mass must be positive, got {m.value!r}")


def compton_length(reg: ConstantsRegistry, m: Quantity) -> Quantity:
    """hbar / (m c)."""
    _require_mass(m, "compton_length")
    return reg.get("hbar") / (m * reg.get("c"))


def compton_time(reg: ConstantsRegistry, m: Quantity) -> Quantity:
    """hbar / (m c^2), the chronon for a particle of mass m."""
    _require_mass(m, "compton_time")
    c = reg.get("c")
    return reg.get("hbar") / (m * c * c)


def schwarzschild_radius(reg: ConstantsRegistry, m: Quantity) -> Quantity:
    """G m / c^2 (no factor 2; see module docstring)."""
    _require_mass(m, "schwarzschild_radius")
    c = reg.get("c")
    return reg.get("G") * m / (c * c)


def fractional_charge(d: int) -> float:
    """Charge in units of e for a particle confined to d spatial dimensions.

    Each diagonal stress component carries one third of the energy density,
    so d of three dimensions contribute d/3 of the full charge.
    """
    if d not in (1, 2, 3):
        raise UnsupportedDimensionError(f"spatial dimension count must be 1, 2 or 3, got {d}")
    return d / 3.0


@dataclass(frozen=True)
class PotentialTerms:
    """The two terms of the confining potential -alpha/r + beta*r at one radius."""

    coulombic: float
    linear: float
    alpha: float
    beta: float
    units: str = "natural"

    @property
    def total(self) -> float:
        return self.coulombic + self.linear


def qcd_potential(r: float, m: float, alpha: float = 1.0, beta: float | None = None) -> PotentialTerms:
    """Evaluate -alpha/r + beta*r in natural units; beta defaults to m^2.

    alpha ~ O(1) and beta ~ O(m^2) are the only orders the model pins down.
    The total vanishes at r = sqrt(alpha/beta); at the Compton point
    r = 1/m both terms are O(m).
    """
    if r <= 0.0:
        raise DomainError(f"radius must be positive, got {r!r}")
    if m <= 0.0:
        raise DomainError(f"mass must be positive, got {m!r}")
    if beta is None:
        beta = m * m
    if alpha <= 0.0 or beta < 0.0:
        raise DomainError(f"need alpha > 0 and beta >= 0, got alpha={alpha!r}, beta={beta!r}")
    return PotentialTerms(coulombic=-alpha / r, linear=beta * r, alpha=alpha, beta=beta)


def characteristic_energy_scale(m: float, alpha: float = 1.0, beta: float | None = None) -> float:
    """max(alpha*m, beta/m): the potential's magnitude at the Compton point r = 1/m."""
    if m <= 0.0:
        raise DomainError(f"mass must be positive, got {m!r}")
    if beta is None:
        beta = m * m
    return max(alpha * m, beta / m)


def quark_coupling() -> float:
    """The reduced coupling (1/137.036)/10 ~ 1e-3 that replaces e^2 at quark scale."""
    return (1.0 / 137.036) / 10.0


def quark_mass_estimate(reg: ConstantsRegistry) -> Quantity:
    """2e3 times the electron mass: the constituent-quark mass scale (~1 GeV)."""
    return reg.get("m_e") * 2e3


def self_gravity_length(reg: ConstantsRegistry, m: Quantity) -> Quantity:
    """hbar^2 / (2 m^3 G), the bound-state size of a self-gravitating particle."""
    _require_mass(m, "self_gravity_length")
    hbar = reg.get("hbar")
    return hbar * hbar / (m.pow(3) * reg.get("G") * 2.0)


def self_gravity_energy(reg: ConstantsRegistry, m: Quantity) -> Quantity:
    """2 m^5 G^2 / hbar^2; equals G m^2 / self_gravity_length(m) identically."""
    _require_mass(m, "self_gravity_energy")
    hbar = reg.get("hbar")
    G = reg.get("G")
    return m.pow(5) * G * G * 2.0 / (hbar * hbar)


@dataclass(frozen=True)
class PlanckScales:
    """The four Planck quantities, mutually consistent by construction."""

    m_P: Quantity
    l_P: Quantity
    tau_P: Quantity
    rho_P: Quantity


def planck_scales(reg: ConstantsRegistry) -> PlanckScales:
    """m_P = (hbar c/G)^(1/2) and the length, time and density that follow."""
    hbar, c, G = reg.get("hbar"), reg.get("c"), reg.get("G")
    m_P = (hbar * c / G).pow(Fraction(1, 2))
    l_P = hbar / (m_P * c)
    tau_P = l_P / c
    rho_P = m_P / l_P.pow(3)
    return PlanckScales(m_P=m_P, l_P=l_P, tau_P=tau_P, rho_P=rho_P)


@dataclass(frozen=True)
class ClosureVerdict:
    """Both sides of an energy-balance comparison plus their decade distance."""

    lhs: Quantity
    rhs: Quantity
    deviation_decades: float


def pion_gravitational_closure(
    reg: ConstantsRegistry, radius: Quantity | None = None
) -> ClosureVerdict:
    """Compare N G m_pi^2 / R against m_pi c^2.

    With the model radius R = G N m_pi / c^2 (the default) this is an exact
    algebraic identity; passing the Hubble radius c/H0 instead exposes the
    same 0.85-decade slack as the radius relation itself.
    """
    G, c, m_pi = reg.get("G"), reg.get("c"), reg.get("m_pi")
    N = reg.get("N")
    if radius is None:
        radius = G * N * m_pi / (c * c)
    if radius.dim != LENGTH:
        raise DimensionMismatchError(radius.dim, LENGTH, context="pion_gravitational_closure")
    lhs = N * G * m_pi * m_pi / radius
    rhs = m_pi * c * c
    return ClosureVerdict(lhs=lhs, rhs=rhs, deviation_decades=decades_deviation(lhs, rhs))


@dataclass(frozen=True)
class PlanckBookkeeping:
    """Planck-density accounting inside one pion Compton cell."""

    mass_in_compton_volume: Quantity
    N_prime: float
    chronon_ratio: float
    N_recovered: float


def planck_bookkeeping(reg: ConstantsRegistry) -> PlanckBookkeeping:
    """rho_P x l^3 and the counts that recover M and N from one (l, tau) cell."""
    scales = planck_scales(reg)
    m_pi = reg.get("m_pi")
    l = compton_length(reg, m_pi)
    mass_in_volume = scales.rho_P * l.pow(3)
    n_prime = (mass_in_volume / scales.m_P).value
    chronon_ratio = (compton_time(reg, m_pi) / scales.tau_P).value
    return PlanckBookkeeping(
        mass_in_compton_volume=mass_in_volume,
        N_prime=n_prime,
        chronon_ratio=chronon_ratio,
        N_recovered=n_prime * chronon_ratio,
    )


@dataclass(frozen=True)
class ScaleRow:
    """One labeled report row: name, value, unit string, context note."""

    label: str
    value: float
    unit: str
    note: str


def report_rows(reg: ConstantsRegistry) -> list[ScaleRow]:
    """Every scale-bridge quantity as a labeled row for the report generator."""
    m_pi = reg.get("m_pi")
    c = reg.get("c")
    scales = planck_scales(reg)
    closure = pion_gravitational_closure(reg)
    books = planck_bookkeeping(reg)
    qm = quark_mass_estimate(reg)

    def row(label, q: Quantity, note):
        return ScaleRow(label, q.value, q.dim.unit_string(), note)

    return [
        row("compton_length(m_pi)", compton_length(reg, m_pi), "minimum length for the pion"),
        row("compton_time(m_pi)", compton_time(reg, m_pi), "the chronon"),
        row("schwarzschild_radius(m_P)", schwarzschild_radius(reg, scales.m_P),
            "equals compton_length(m_P): the Planck-scale identity"),
        row("m_P", scales.m_P, "Planck mass (hbar c/G)^(1/2)"),
        row("l_P", scales.l_P, "Planck length"),
        row("tau_P", scales.tau_P, "Planck time"),
        row("rho_P", scales.rho_P, "Planck density"),
        ScaleRow("fractional_charge(d=1)", fractional_charge(1), "e",
                 "one-dimensional confinement"),
        ScaleRow("fractional_charge(d=2)", fractional_charge(2), "e",
                 "two-dimensional confinement"),
        ScaleRow("fractional_charge(d=3)", fractional_charge(3), "e",
                 "full charge in three dimensions"),
        ScaleRow("quark_coupling", quark_coupling(), "1",
                 "e^2 reduced tenfold at quark scale, ~1e-3"),
        row("quark_mass_estimate", qm, "2e3 electron masses, ~1 GeV"),
        row("self_gravity_length(m_P)", self_gravity_length(reg, scales.m_P),
            "within half a decade of l_P"),
        row("self_gravity_length(m_pi)", self_gravity_length(reg, m_pi),
            "within a decade of the radius of the universe"),
        row("self_gravity_energy(m_P)", self_gravity_energy(reg, scales.m_P),
            "within half a decade of m_P c^2"),
        row("self_gravity_energy(m_pi)", self_gravity_energy(reg, m_pi),
            "far below m_pi c^2: a pion is not a mini-universe"),
        row("pion_closure_lhs", closure.lhs, "N G m_pi^2 / R"),
        row("pion_closure_rhs", closure.rhs, "m_pi c^2"),
        ScaleRow("pion_closure_deviation", closure.deviation_decades, "decades",
                 "exact identity under R = G M / c^2"),
        row("mass_in_compton_volume", books.mass_in_compton_volume,
            "rho_P x l^3, within half a decade of M"),
        ScaleRow("N_prime", books.N_prime, "1", "Planck masses in one Compton volume, ~1e60"),
        ScaleRow("chronon_ratio", books.chronon_ratio, "1", "Planck lifetimes per chronon, ~1e20"),
        ScaleRow("N_recovered", books.N_recovered, "1",
                 "N_prime x chronon_ratio, recovers ~1e80"),
    ]
