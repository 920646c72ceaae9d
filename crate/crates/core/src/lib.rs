//! Charge-mass mixing physics in Gaussian CGS units.
//!
//! The library models a universal dimensionless parameter theta that mixes a
//! particle's energy and electrical charge under a hyperbolic rotation. Its
//! observable consequence is a cross term sigma (e M + m Q)/r in the two-body
//! Newton-Coulomb potential, with sigma = theta (sqrt(kappa) - k/sqrt(kappa))
//! a derived charge-per-mass scale.
//!
//! Modules, bottom up:
//!
//! - [`units`]: dimension-checked quantity arithmetic over (g, cm, s) with
//!   rational exponents; SI conversion at the I/O boundary.
//! - [`constants`]: pinned CODATA 2018 inputs and the derived ell, kappa,
//!   sigma-per-theta scales.
//! - [`mixing`]: the exact (E, Q) boost, its invariant, and the linearized
//!   (m, e) mixing.
//! - [`potential`]: the corrected pair coupling in primed and unprimed form,
//!   potential energy and radial force.
//! - [`geosphere`]: Earth-scale estimators (effective charge, surface field,
//!   the fairweather-field fit for theta, rotation-induced magnetic moment,
//!   cosmic-ray sign/energy).
//! - [`nbody`]: deterministic leapfrog N-body integration under the corrected
//!   force with a closed-form circular-orbit oracle.

pub mod constants;
pub mod error;
pub mod geosphere;
pub mod mixing;
pub mod nbody;
pub mod potential;
pub mod units;
pub mod vec3;

pub use error::{Error, Result};

#[cfg(test)]
mod thread_safety {
    // every domain type is an immutable value type, shareable across threads
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn value_types_are_send_and_sync() {
        assert_send_sync::<crate::units::Quantity>();
        assert_send_sync::<crate::units::Dimension>();
        assert_send_sync::<crate::constants::PhysicalConstants>();
        assert_send_sync::<crate::constants::DerivedConstants>();
        assert_send_sync::<crate::mixing::ChargeEnergyPair>();
        assert_send_sync::<crate::mixing::ChargeMassPair>();
        assert_send_sync::<crate::potential::ParticleSpecies>();
        assert_send_sync::<crate::potential::PairCoupling>();
        assert_send_sync::<crate::geosphere::CelestialBody>();
        assert_send_sync::<crate::nbody::SystemState>();
        assert_send_sync::<crate::nbody::IntegratorConfig>();
    }
}
