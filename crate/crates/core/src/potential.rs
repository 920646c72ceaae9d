//! The corrected two-body Newton-Coulomb pair law.
//!
//! In unprimed (intrinsic) variables the potential between (m1, e1) and
//! (m2, e2) at separation r is V(r) = A/r with
//!
//! ```text
//! A = e1 e2 - k m1 m2 + sigma (e1 m2 + m1 e2)
//! ```
//!
//! The primed form applies the linear mixing to both species first and uses
//! A' = e' Q' - k m' M'. The two agree through first order in theta; the
//! exact remainder is A' - A = theta^2 (kappa m1 m2 - k e1 e2 / kappa).
//!
//! Sign convention, used everywhere in the crate: V > 0 is repulsive and the
//! radial force F = A/r^2 is positive outward.

use crate::constants::{DerivedConstants, PhysicalConstants};
use crate::error::{Error, Result};
use crate::mixing::{boost_linear, ChargeMassPair};
use crate::units::{Dimension, Quantity};

/// A particle kind with intrinsic (unprimed) mass and charge. Observable
/// values are always computed from these, never stored, so theta sweeps do
/// not mutate particles.
#[derive(Debug, Clone, PartialEq)]
pub struct ParticleSpecies {
    pub label: String,
    pub mass: Quantity,
    pub charge: Quantity,
}

impl ParticleSpecies {
    pub fn new(label: impl Into<String>, mass: Quantity, charge: Quantity) -> Result<Self> {
        if mass.dim() != Dimension::MASS {
            return Err(Error::DimensionMismatch {
                left: mass.dim().to_string(),
                right: Dimension::MASS.to_string(),
            });
        }
        if charge.dim() != Dimension::CHARGE {
            return Err(Error::DimensionMismatch {
                left: charge.dim().to_string(),
                right: Dimension::CHARGE.to_string(),
            });
        }
        if mass.value() < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "species mass must be non-negative, got {} g",
                mass.value()
            )));
        }
        Ok(ParticleSpecies {
            label: label.into(),
            mass,
            charge,
        })
    }

    fn as_pair(&self) -> Result<ChargeMassPair> {
        ChargeMassPair::new(self.mass, self.charge)
    }
}

/// The numerator A of V(r) = A/r, in erg cm. Attractive iff A < 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairCoupling(Quantity);

impl PairCoupling {
    pub fn new(a: Quantity) -> Result<Self> {
        if a.dim() != Dimension::ENERGY_LENGTH {
            return Err(Error::DimensionMismatch {
                left: a.dim().to_string(),
                right: Dimension::ENERGY_LENGTH.to_string(),
            });
        }
        Ok(PairCoupling(a))
    }

    pub fn strength(&self) -> Quantity {
        self.0
    }

    pub fn is_attractive(&self) -> bool {
        self.0.value() < 0.0
    }
}

/// A = e1 e2 - k m1 m2 + sigma (e1 m2 + m1 e2). With sigma = 0 the cross
/// term contributes an exact +0.0, so the standard Coulomb + Newton coupling
/// is reproduced bit-for-bit through this same path.
pub fn coupling_unprimed(
    p1: &ParticleSpecies,
    p2: &ParticleSpecies,
    sigma: &Quantity,
    pc: &PhysicalConstants,
) -> Result<PairCoupling> {
    let coulomb = p1.charge.mul(&p2.charge)?;
    let newton = pc.k_newton.mul(&p1.mass)?.mul(&p2.mass)?;
    let cross = p1.charge.mul(&p2.mass)?.add(&p1.mass.mul(&p2.charge)?)?;
    let a = coulomb.sub(&newton)?.add(&sigma.mul(&cross)?)?;
    PairCoupling::new(a)
}

/// A' = e' Q' - k m' M', with both species run through the linear mixing.
pub fn coupling_primed(
    p1: &ParticleSpecies,
    p2: &ParticleSpecies,
    theta: f64,
    dc: &DerivedConstants,
    pc: &PhysicalConstants,
) -> Result<PairCoupling> {
    let (m1, _) = boost_linear(&p1.as_pair()?, theta, dc)?;
    let (m2, _) = boost_linear(&p2.as_pair()?, theta, dc)?;
    let coulomb = m1.charge.mul(&m2.charge)?;
    let newton = pc.k_newton.mul(&m1.mass)?.mul(&m2.mass)?;
    PairCoupling::new(coulomb.sub(&newton)?)
}

/// V = A/r (erg). Errors on non-positive separation.
pub fn potential_energy(coupling: &PairCoupling, r: &Quantity) -> Result<Quantity> {
    check_separation(r)?;
    coupling.strength().div(r)
}

/// F = A/r^2 along the outward separation direction (positive = repulsive).
pub fn radial_force(coupling: &PairCoupling, r: &Quantity) -> Result<Quantity> {
    check_separation(r)?;
    coupling.strength().div(&r.mul(r)?)
}

fn check_separation(r: &Quantity) -> Result<()> {
    if r.dim() != Dimension::LENGTH {
        return Err(Error::DimensionMismatch {
            left: r.dim().to_string(),
            right: Dimension::LENGTH.to_string(),
        });
    }
    if r.value() <= 0.0 {
        return Err(Error::NonPositiveSeparation);
    }
    Ok(())
}
