"""Compton- and Planck-scale operations and their identities."""

import math

import pytest
from hypothesis import given, strategies as st

from fluctuverse import (
    DimensionMismatchError,
    DomainError,
    LENGTH,
    MASS,
    Quantity,
    UnsupportedDimensionError,
    characteristic_energy_scale,
    compton_length,
    compton_time,
    decades_deviation,
    fractional_charge,
    load_constants,
    pion_gravitational_closure,
    planck_bookkeeping,
    planck_scales,
    qcd_potential,
    quark_coupling,
    quark_mass_estimate,
    schwarzschild_radius,
    self_gravity_energy,
    self_gravity_length,
)

_REG = load_constants()  # module-level registry for hypothesis-driven tests


# --- Compton and gravitational radii -------------------------------------

def test_compton_length_of_pion(reg):
    l = compton_length(reg, reg.get("m_pi"))
    assert l.dim == LENGTH
    assert l.value == pytest.approx(1.4138215877393478e-13, rel=1e-12)


def test_compton_time_of_pion(reg):
    tau = compton_time(reg, reg.get("m_pi"))
    assert tau.value == pytest.approx(4.716001186858903e-24, rel=1e-12)


def test_compton_length_of_planck_mass_is_planck_length(reg):
    scales = planck_scales(reg)
    assert compton_length(reg, scales.m_P) == scales.l_P


def test_schwarzschild_radius_of_planck_mass(reg):
    scales = planck_scales(reg)
    rs = schwarzschild_radius(reg, scales.m_P)
    lc = compton_length(reg, scales.m_P)
    assert abs(rs.value - lc.value) / lc.value <= 1e-12
    assert rs.value == pytest.approx(1.61625502392855e-33, rel=1e-12)


def test_schwarzschild_radius_of_universe_mass(reg):
    M = reg.get("m_pi") * 1e80
    assert schwarzschild_radius(reg, M).value == pytest.approx(1.8476732319183388e27, rel=1e-12)


def test_schwarzschild_radius_of_pion_is_negligible(reg):
    rs = schwarzschild_radius(reg, reg.get("m_pi"))
    assert rs.value == pytest.approx(1.8476732319183385e-53, rel=1e-12)
    # forty decades below the Compton length: the strength-ratio gap
    gap = math.log10(compton_length(reg, reg.get("m_pi")).value / rs.value)
    assert 39.0 <= gap <= 41.0


def test_mass_guards(reg):
    with pytest.raises(DomainError):
        compton_length(reg, Quantity(0.0, MASS))
    with pytest.raises(DimensionMismatchError):
        schwarzschild_radius(reg, Quantity(1.0, LENGTH))


# --- Planck scales ---------------------------------------------------------

def test_planck_scales_values(reg):
    s = planck_scales(reg)
    assert s.m_P.value == pytest.approx(2.1764343420511264e-05, rel=1e-12)
    assert s.l_P.value == pytest.approx(1.61625502392855e-33, rel=1e-12)
    assert s.tau_P.value == pytest.approx(5.391246446661944e-44, rel=1e-12)
    assert s.rho_P.value == pytest.approx(5.1548485064034075e+93, rel=1e-12)


def test_planck_scales_mutually_consistent(reg):
    s = planck_scales(reg)
    c = reg.get("c").value
    assert s.tau_P.value == pytest.approx(s.l_P.value / c, rel=1e-12)
    assert s.rho_P.value == pytest.approx(s.m_P.value / s.l_P.value**3, rel=1e-12)
    hbar = reg.get("hbar").value
    assert s.l_P.value == pytest.approx(hbar / (s.m_P.value * c), rel=1e-12)


# --- Quark sector ------------------------------------------------------------

def test_fractional_charges():
    assert fractional_charge(1) == 1.0 / 3.0
    assert fractional_charge(2) == 2.0 / 3.0
    assert fractional_charge(3) == 1.0


def test_fractional_charge_monotone():
    charges = [fractional_charge(d) for d in (1, 2, 3)]
    assert charges == sorted(charges)


def test_fractional_charge_rejects_other_dimensions():
    for d in (0, 4, -1):
        with pytest.raises(UnsupportedDimensionError):
            fractional_charge(d)


def test_quark_coupling_value():
    assert quark_coupling() == pytest.approx(7.2974e-4, abs=1e-8)
    assert abs(math.log10(quark_coupling() / 1e-3)) <= 0.2


def test_quark_coupling_times_ten_is_fine_structure():
    assert 10.0 * quark_coupling() == pytest.approx(1.0 / 137.036, rel=1e-12)


def test_quark_mass_estimate(reg):
    qm = quark_mass_estimate(reg)
    assert qm.dim == MASS
    assert qm.value == pytest.approx(1.8218767403e-24, rel=1e-12)
    assert abs(math.log10(qm.value / (1e3 * reg.get("m_e").value))) <= 0.5


def test_quark_mass_in_energy_units(reg):
    c = reg.get("c")
    energy = quark_mass_estimate(reg) * c * c
    erg_per_gev = 1.602176634e-3
    assert energy.value / erg_per_gev == pytest.approx(1.022, rel=1e-3)


def test_qcd_potential_compton_point():
    terms = qcd_potential(r=1.0, m=1.0, alpha=1.0, beta=1.0)
    assert terms.coulombic == -1.0
    assert terms.linear == 1.0
    assert terms.total == 0.0
    assert characteristic_energy_scale(1.0, 1.0, 1.0) == 1.0


def test_qcd_potential_default_beta_is_m_squared():
    terms = qcd_potential(r=2.0, m=0.5)
    assert terms.beta == 0.25
    assert terms.coulombic == -0.5
    assert terms.linear == 0.5


def test_qcd_potential_pure_coulomb():
    terms = qcd_potential(r=3.0, m=1.0, beta=0.0)
    assert terms.linear == 0.0
    assert terms.coulombic == pytest.approx(-1.0 / 3.0)


def test_qcd_potential_guards():
    with pytest.raises(DomainError):
        qcd_potential(r=0.0, m=1.0)
    with pytest.raises(DomainError):
        qcd_potential(r=1.0, m=-1.0)


@given(
    st.floats(min_value=1e-3, max_value=1e3),
    st.floats(min_value=1e-3, max_value=1e3),
    st.floats(min_value=1e-3, max_value=1e3),
)
def test_qcd_potential_sign_structure_and_zero(r, alpha, beta):
    terms = qcd_potential(r=r, m=1.0, alpha=alpha, beta=beta)
    assert terms.coulombic < 0.0 < terms.linear
    r0 = math.sqrt(alpha / beta)
    balanced = qcd_potential(r=r0, m=1.0, alpha=alpha, beta=beta)
    assert abs(balanced.total) <= 1e-12 * balanced.linear


# --- Self-gravitating particles ---------------------------------------------

def test_self_gravity_length_planck(reg):
    s = planck_scales(reg)
    L = self_gravity_length(reg, s.m_P)
    assert L.value == pytest.approx(8.081275119642752e-34, rel=1e-12)
    assert abs(math.log10(L.value / s.l_P.value)) <= 0.5


def test_self_gravity_length_pion_is_cosmic(reg):
    L = self_gravity_length(reg, reg.get("m_pi"))
    R = schwarzschild_radius(reg, reg.get("m_pi") * 1e80)
    assert L.value == pytest.approx(5.409212644928752e+26, rel=1e-12)
    assert abs(math.log10(L.value / R.value)) <= 1.0


def test_self_gravity_length_cubic_law(reg):
    m = reg.get("m_pi")
    assert self_gravity_length(reg, m * 2.0).value == pytest.approx(
        self_gravity_length(reg, m).value / 8.0, rel=1e-12
    )


def test_self_gravity_energy_planck(reg):
    s = planck_scales(reg)
    E = self_gravity_energy(reg, s.m_P)
    c = reg.get("c")
    rest = s.m_P * c * c
    assert E.value == pytest.approx(3.912163272198214e+16, rel=1e-12)
    assert abs(math.log10(E.value / rest.value)) <= 0.5


def test_self_gravity_energy_pion_is_tiny(reg):
    E = self_gravity_energy(reg, reg.get("m_pi"))
    c = reg.get("c")
    rest = (reg.get("m_pi") * c * c).value
    assert E.value == pytest.approx(7.638241184873902e-84, rel=1e-12)
    assert E.value < 1e-70 * rest  # a pion is nowhere near a mini-universe


_masses = st.floats(min_value=1e-28, max_value=1e-2, allow_nan=False, allow_infinity=False)


@given(_masses)
def test_energy_length_product_is_gravitational(m_value):
    reg = _REG
    m = Quantity(m_value, MASS)
    product = self_gravity_energy(reg, m) * self_gravity_length(reg, m)
    expected = reg.get("G") * m * m
    assert product.dim == expected.dim
    assert product.value == pytest.approx(expected.value, rel=1e-12)


# --- Closure and bookkeeping --------------------------------------------------

def test_pion_closure_is_exact_identity(reg):
    verdict = pion_gravitational_closure(reg)
    assert verdict.lhs.value == pytest.approx(2.2361568100079266e-4, rel=1e-12)
    assert verdict.rhs.value == pytest.approx(2.2361568100079266e-4, rel=1e-12)
    assert verdict.deviation_decades <= 1e-12


def test_pion_closure_with_hubble_radius(reg):
    radius = reg.get("c") / reg.get("H0")
    verdict = pion_gravitational_closure(reg, radius)
    assert verdict.deviation_decades == pytest.approx(0.8541696787008073, abs=1e-9)


def test_pion_closure_halved_count_shifts_by_log2(reg):
    base = pion_gravitational_closure(reg)
    half = base.lhs * 0.5
    assert decades_deviation(half, base.rhs) == pytest.approx(math.log10(2.0), abs=1e-12)


def test_planck_bookkeeping(reg):
    books = planck_bookkeeping(reg)
    assert books.mass_in_compton_volume.value == pytest.approx(1.456799e55, rel=1e-4)
    assert 1e59 <= books.N_prime <= 1e61
    assert books.N_prime == pytest.approx(6.6935e59, rel=1e-4)
    assert 1e19 <= books.chronon_ratio <= 1e21
    assert books.chronon_ratio == pytest.approx(8.74752e19, rel=1e-4)
    assert 1e79 <= books.N_recovered <= 1e81
    assert books.N_recovered == pytest.approx(5.85516e79, rel=1e-4)


def test_bookkeeping_mass_lands_near_universe_mass(reg):
    books = planck_bookkeeping(reg)
    M = (reg.get("m_pi") * 1e80).value
    assert abs(math.log10(books.mass_in_compton_volume.value / M)) <= 0.5
