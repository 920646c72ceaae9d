//! Hyperbolic mixing of energy and electrical charge.
//!
//! The exact boost acts on an (E, Q) pair as a hyperbolic rotation,
//!
//! ```text
//! E' = cosh(theta) E + (hbar c / (ell q)) sinh(theta) Q
//! Q' = cosh(theta) Q + (ell q / (hbar c)) sinh(theta) E
//! ```
//!
//! and preserves I = E^2 - (hbar c / (ell q))^2 Q^2. The invariant is
//! evaluated in the factored form (E - bQ)(E + bQ), which avoids the
//! cancellation between the two squares when the components are comparable.
//!
//! A boosted pair stored as two doubles can only carry the invariant to a
//! relative accuracy of about e^(2|theta|) * 1e-16: the boost amplifies the
//! components by e^|theta| while the invariant stays put, so the last bits of
//! the stored pair dominate beyond |theta| of roughly 4. The property tests
//! here stay inside that envelope; the acceptance suite measures it.
//!
//! The nonrelativistic regime replaces (E, Q) by (m c^2, e) and drops
//! theta^2 terms, giving the linear mixing
//! m' = m + kappa^(-1/2) theta e, e' = e + kappa^(1/2) theta m.

use crate::constants::{DerivedConstants, PhysicalConstants};
use crate::error::{Error, Result};
use crate::units::{Dimension, Quantity};

/// Energy (erg) and electrical charge (statC) of one particle state.
/// Either sign is allowed for both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChargeEnergyPair {
    pub energy: Quantity,
    pub charge: Quantity,
}

impl ChargeEnergyPair {
    pub fn new(energy: Quantity, charge: Quantity) -> Result<Self> {
        expect_dim(&energy, Dimension::ENERGY, "energy")?;
        expect_dim(&charge, Dimension::CHARGE, "charge")?;
        Ok(ChargeEnergyPair { energy, charge })
    }
}

/// Mass (g) and charge (statC) in the nonrelativistic regime. The physical
/// constructor requires m >= 0; algebra tests may bypass it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChargeMassPair {
    pub mass: Quantity,
    pub charge: Quantity,
}

impl ChargeMassPair {
    pub fn new(mass: Quantity, charge: Quantity) -> Result<Self> {
        expect_dim(&mass, Dimension::MASS, "mass")?;
        expect_dim(&charge, Dimension::CHARGE, "charge")?;
        if mass.value() < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "physical mass must be non-negative, got {} g",
                mass.value()
            )));
        }
        Ok(ChargeMassPair { mass, charge })
    }

    /// Construction without the m >= 0 restriction, for algebraic checks.
    pub fn new_unchecked_sign(mass: Quantity, charge: Quantity) -> Result<Self> {
        expect_dim(&mass, Dimension::MASS, "mass")?;
        expect_dim(&charge, Dimension::CHARGE, "charge")?;
        Ok(ChargeMassPair { mass, charge })
    }
}

/// The first-order contributions: delta_m = kappa^(-1/2) theta e and
/// delta_e = kappa^(1/2) theta m, satisfying delta_m delta_e = theta^2 m e.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearDeltas {
    pub delta_m: Quantity,
    pub delta_e: Quantity,
}

fn expect_dim(q: &Quantity, dim: Dimension, what: &str) -> Result<()> {
    if q.dim() != dim {
        return Err(Error::DimensionMismatch {
            left: format!("{what}: {}", q.dim()),
            right: dim.to_string(),
        });
    }
    Ok(())
}

/// hbar c / (ell q), the erg-per-statC scale relating the two components.
pub fn energy_per_charge_scale(dc: &DerivedConstants, pc: &PhysicalConstants) -> Result<Quantity> {
    let b = pc.hbar.mul(&pc.c)?.div(&dc.ell.mul(&pc.q)?)?;
    debug_assert_eq!(b.dim(), Dimension::ENERGY_PER_CHARGE);
    Ok(b)
}

/// The exact boost of Eqs. above. theta = 0 returns the input unchanged;
/// |theta| > 700 would overflow the exponentials and is rejected.
pub fn boost_exact(
    state: &ChargeEnergyPair,
    theta: f64,
    dc: &DerivedConstants,
    pc: &PhysicalConstants,
) -> Result<ChargeEnergyPair> {
    if theta == 0.0 {
        return Ok(*state);
    }
    let within_range = theta.abs() <= 700.0;
    if !within_range {
        return Err(Error::ThetaOverflow(theta));
    }
    let cosh = theta.cosh();
    let sinh = theta.sinh();
    let b = energy_per_charge_scale(dc, pc)?;
    let energy = state
        .energy
        .scale(cosh)?
        .add(&b.mul(&state.charge)?.scale(sinh)?)?;
    let charge = state
        .charge
        .scale(cosh)?
        .add(&state.energy.scale(sinh)?.div(&b)?)?;
    ChargeEnergyPair::new(energy, charge)
}

/// The conserved quadratic form I = E^2 - (hbar c/(ell q))^2 Q^2 (erg^2),
/// computed in the factored form (E - bQ)(E + bQ) to avoid cancellation
/// between the two squares.
pub fn boost_invariant(
    state: &ChargeEnergyPair,
    dc: &DerivedConstants,
    pc: &PhysicalConstants,
) -> Result<Quantity> {
    let b = energy_per_charge_scale(dc, pc)?;
    let bq = b.mul(&state.charge)?;
    let invariant = state.energy.sub(&bq)?.mul(&state.energy.add(&bq)?)?;
    debug_assert_eq!(invariant.dim(), Dimension::ENERGY_SQUARED);
    Ok(invariant)
}

/// First-order mixing of (m, e): m' = m + kappa^(-1/2) theta e and
/// e' = e + kappa^(1/2) theta m. Intended for |theta| << 1; no hard limit
/// is enforced, the theta^2 defect is simply carried by the result.
pub fn boost_linear(
    state: &ChargeMassPair,
    theta: f64,
    dc: &DerivedConstants,
) -> Result<(ChargeMassPair, LinearDeltas)> {
    let delta_m = state.charge.scale(theta)?.div(&dc.sqrt_kappa)?;
    let delta_e = state.mass.scale(theta)?.mul(&dc.sqrt_kappa)?;
    let mixed =
        ChargeMassPair::new_unchecked_sign(state.mass.add(&delta_m)?, state.charge.add(&delta_e)?)?;
    Ok((mixed, LinearDeltas { delta_m, delta_e }))
}

/// Embed (m, e) as (E = m c^2, Q = e), apply the exact boost, convert back
/// via m = E/c^2, and return the largest relative deviation of the exact
/// result from the linear mixing. Scales as theta^2 until it hits the
/// double-precision floor.
pub fn linear_vs_exact_residual(
    state: &ChargeMassPair,
    theta: f64,
    dc: &DerivedConstants,
    pc: &PhysicalConstants,
) -> Result<f64> {
    if state.mass.value() <= 0.0 {
        return Err(Error::InvalidConfig(
            "residual embedding requires m > 0".to_string(),
        ));
    }
    let c_squared = pc.c.mul(&pc.c)?;
    let embedded = ChargeEnergyPair::new(state.mass.mul(&c_squared)?, state.charge)?;
    let boosted = boost_exact(&embedded, theta, dc, pc)?;
    let mass_exact = boosted.energy.div(&c_squared)?;
    let charge_exact = boosted.charge;

    let (linear, _) = boost_linear(state, theta, dc)?;

    let component = |exact: f64, lin: f64| -> f64 {
        if exact == lin {
            0.0
        } else {
            (exact - lin).abs() / lin.abs()
        }
    };
    Ok(component(mass_exact.value(), linear.mass.value())
        .max(component(charge_exact.value(), linear.charge.value())))
}
