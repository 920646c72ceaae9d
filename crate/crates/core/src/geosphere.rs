//! Earth-scale estimators for the charge-per-mass coupling.
//!
//! A body of mass M acquires the effective charge Q = e_intrinsic + sigma M.
//! From that follow the surface radial field Q/R^2 (point-monopole model,
//! no atmospheric screening or induced charges), the exact linear inversion
//! fitting theta to a measured surface field, the magnetic moment of the
//! rotating charged body, and the sign/energy estimator for charged cosmic
//! particles.
//!
//! The fairweather field (about 100 V/m pointing downward in clear weather)
//! is the one quantitative observable: fitting the Earth to -100 V/m radial
//! field gives sigma < 0, i.e. the Earth's mass contributes negative charge,
//! which attracts positive particles and repels negative ones.

use crate::constants::{DerivedConstants, PhysicalConstants};
use crate::error::{Error, Result};
use crate::potential::ParticleSpecies;
use crate::units::{Dimension, Quantity};
use serde::Deserialize;

/// Observed Earth dipole moment, G cm^3, for comparison printouts only.
/// The rotating-charged-sphere estimate is reported as a ratio against this
/// value; agreement is never asserted.
pub const EARTH_OBSERVED_DIPOLE_G_CM3: f64 = 8.0e25;

/// A rotating massive body. Defaults for Earth are pinned below with source
/// notes; the intrinsic (non-sigma) charge defaults to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CelestialBody {
    pub label: String,
    /// Mass (g).
    pub mass: Quantity,
    /// Mean radius (cm).
    pub radius: Quantity,
    /// Rotation angular speed (1/s).
    pub angular_speed: Quantity,
    /// Intrinsic charge (statC), independent of the sigma mechanism.
    pub intrinsic_charge: Quantity,
}

/// Body JSON file: {"label", "mass_g", "radius_cm", "omega_per_s", "e_statC"}.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BodyFile {
    label: String,
    mass_g: f64,
    radius_cm: f64,
    omega_per_s: f64,
    #[serde(default, rename = "e_statC")]
    e_statc: f64,
}

impl CelestialBody {
    pub fn new(
        label: impl Into<String>,
        mass: Quantity,
        radius: Quantity,
        angular_speed: Quantity,
        intrinsic_charge: Quantity,
    ) -> Result<Self> {
        for (q, dim, what) in [
            (&mass, Dimension::MASS, "mass"),
            (&radius, Dimension::LENGTH, "radius"),
            (&angular_speed, Dimension::ANGULAR_SPEED, "angular speed"),
            (&intrinsic_charge, Dimension::CHARGE, "intrinsic charge"),
        ] {
            if q.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: format!("{what}: {}", q.dim()),
                    right: dim.to_string(),
                });
            }
        }
        if mass.value() <= 0.0 || radius.value() <= 0.0 {
            return Err(Error::InvalidConfig(
                "body mass and radius must be strictly positive".to_string(),
            ));
        }
        if angular_speed.value() < 0.0 {
            return Err(Error::InvalidConfig(
                "body angular speed must be non-negative".to_string(),
            ));
        }
        Ok(CelestialBody {
            label: label.into(),
            mass,
            radius,
            angular_speed,
            intrinsic_charge,
        })
    }

    /// Pinned Earth: M = 5.9722e27 g (IAU 2015 nominal), R = 6.371e8 cm
    /// (mean radius), omega = 7.2921e-5 1/s (sidereal), zero intrinsic charge.
    pub fn earth() -> Self {
        CelestialBody::new(
            "Earth",
            Quantity::grams(5.9722e27).unwrap(),
            Quantity::centimeters(6.371e8).unwrap(),
            Quantity::per_second(7.2921e-5).unwrap(),
            Quantity::statcoulombs(0.0).unwrap(),
        )
        .expect("pinned Earth values are valid")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let f: BodyFile = serde_json::from_str(json)?;
        CelestialBody::new(
            f.label,
            Quantity::grams(f.mass_g)?,
            Quantity::centimeters(f.radius_cm)?,
            Quantity::per_second(f.omega_per_s)?,
            Quantity::statcoulombs(f.e_statc)?,
        )
    }
}

/// Result of fitting theta to a target surface field. The fit is an exact
/// linear inversion; `field_check` re-runs [`surface_field`] with the fitted
/// sigma and reproduces the target to relative 1e-12.
#[derive(Debug, Clone, Copy)]
pub struct EarthFitResult {
    /// Fitted charge-per-mass coupling (statC/g).
    pub sigma: Quantity,
    /// Fitted mixing parameter.
    pub theta: f64,
    /// Effective charge of the body under the fitted sigma (statC).
    pub q_eff: Quantity,
    /// Round-trip surface field (statV/cm).
    pub field_check: Quantity,
}

/// Q = e_intrinsic + sigma M.
pub fn effective_charge(body: &CelestialBody, sigma: &Quantity) -> Result<Quantity> {
    body.intrinsic_charge.add(&sigma.mul(&body.mass)?)
}

/// Radial field at the surface, E_s = Q_eff / R^2 (statV/cm), positive
/// pointing outward. Point-monopole model.
pub fn surface_field(body: &CelestialBody, sigma: &Quantity) -> Result<Quantity> {
    let q_eff = effective_charge(body, sigma)?;
    let field = q_eff.div(&body.radius.mul(&body.radius)?)?;
    debug_assert_eq!(field.dim(), Dimension::ELECTRIC_FIELD);
    Ok(field)
}

/// Solve target = (e_intrinsic + sigma M)/R^2 for sigma, then
/// theta = sigma / sigma_per_theta. Exact linear inversion.
pub fn fit_theta_from_field(
    body: &CelestialBody,
    target_field: &Quantity,
    dc: &DerivedConstants,
    _pc: &PhysicalConstants,
) -> Result<EarthFitResult> {
    if target_field.dim() != Dimension::ELECTRIC_FIELD {
        return Err(Error::DimensionMismatch {
            left: target_field.dim().to_string(),
            right: Dimension::ELECTRIC_FIELD.to_string(),
        });
    }
    if dc.sigma_per_theta.value() == 0.0 {
        return Err(Error::InvalidConstants(
            "sigma_per_theta is zero; theta cannot be inferred".to_string(),
        ));
    }
    let r_squared = body.radius.mul(&body.radius)?;
    let sigma = target_field
        .mul(&r_squared)?
        .sub(&body.intrinsic_charge)?
        .div(&body.mass)?;
    let theta = sigma.div(&dc.sigma_per_theta)?.value();
    let q_eff = effective_charge(body, &sigma)?;
    let field_check = surface_field(body, &sigma)?;
    Ok(EarthFitResult {
        sigma,
        theta,
        q_eff,
        field_check,
    })
}

/// Magnetic moment of a rigidly rotating, uniformly charged sphere:
/// mu = Q_eff omega R^2 / (5 c), in G cm^3.
///
/// Uniform volume charge proportional to the mass density is a modeling
/// closure chosen here; it is not prescribed by the mixing theory.
pub fn magnetic_dipole(
    body: &CelestialBody,
    sigma: &Quantity,
    pc: &PhysicalConstants,
) -> Result<Quantity> {
    let q_eff = effective_charge(body, sigma)?;
    let mu = q_eff
        .mul(&body.angular_speed)?
        .mul(&body.radius.mul(&body.radius)?)?
        .div(&pc.c.scale(5.0)?)?;
    debug_assert_eq!(mu.dim(), Dimension::MAGNETIC_MOMENT);
    Ok(mu)
}

/// The sigma-induced part of the interaction energy between a charged
/// particle and the body: U = e_p (sigma M)/r. U < 0 means attraction;
/// with sigma < 0 positive particles are pulled inward.
pub fn charge_sign_energy(
    particle: &ParticleSpecies,
    body: &CelestialBody,
    sigma: &Quantity,
    r: &Quantity,
    _pc: &PhysicalConstants,
) -> Result<Quantity> {
    if r.dim() != Dimension::LENGTH {
        return Err(Error::DimensionMismatch {
            left: r.dim().to_string(),
            right: Dimension::LENGTH.to_string(),
        });
    }
    if r.value() <= 0.0 {
        return Err(Error::NonPositiveSeparation);
    }
    let induced = sigma.mul(&body.mass)?;
    let energy = particle.charge.mul(&induced)?.div(r)?;
    debug_assert_eq!(energy.dim(), Dimension::ENERGY);
    Ok(energy)
}
