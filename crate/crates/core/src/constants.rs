//! Pinned fundamental constants and the derived coupling scales.
//!
//! The fundamental set is CODATA 2018 plus the low-energy weak mixing angle,
//! pinned (never fetched) so every run is reproducible. Each value carries a
//! source note; any subset can be overridden from a JSON file.
//!
//! Derived from these are the mixing length `ell`, the squared charge-to-mass
//! conversion scale `kappa` = q^2 ell^2 c^2 / hbar^2, and the per-theta
//! charge-per-mass coupling sqrt(kappa) - k/sqrt(kappa) whose product with
//! theta is `sigma`.

use crate::error::{Error, Result};
use crate::units::{Dimension, Quantity};
use serde::Deserialize;

/// One pinned value with its provenance.
#[derive(Debug, Clone, Copy)]
pub struct ConstantEntry {
    pub name: &'static str,
    pub symbol: &'static str,
    pub value: f64,
    pub gaussian_unit: &'static str,
    pub source: &'static str,
}

/// The single source-of-truth table behind [`PhysicalConstants::pinned`].
pub const PINNED_CONSTANTS: &[ConstantEntry] = &[
    ConstantEntry {
        name: "reduced Planck constant",
        symbol: "hbar",
        value: 1.054571817e-27,
        gaussian_unit: "erg s",
        source: "CODATA 2018, exact (derived from defined h)",
    },
    ConstantEntry {
        name: "speed of light",
        symbol: "c",
        value: 2.99792458e10,
        gaussian_unit: "cm/s",
        source: "SI definition, exact",
    },
    ConstantEntry {
        name: "elementary charge magnitude",
        symbol: "q",
        value: 4.80320471e-10,
        gaussian_unit: "statC",
        source: "CODATA 2018 e = 1.602176634e-19 C, converted",
    },
    ConstantEntry {
        name: "Newton gravitational constant",
        symbol: "k",
        value: 6.67430e-8,
        gaussian_unit: "cm^3/(g s^2)",
        source: "CODATA 2018",
    },
    ConstantEntry {
        name: "Planck length",
        symbol: "L_p",
        value: 1.616255e-33,
        gaussian_unit: "cm",
        source: "CODATA 2018",
    },
    ConstantEntry {
        name: "fine structure constant",
        symbol: "alpha",
        value: 7.2973525693e-3,
        gaussian_unit: "1",
        source: "CODATA 2018",
    },
    ConstantEntry {
        name: "weak mixing angle, squared sine",
        symbol: "sin2_theta_w",
        value: 0.23121,
        gaussian_unit: "1",
        source: "PDG low-energy effective value; scheme choice documented, overridable",
    },
];

/// The seven fundamental inputs, validated strictly positive
/// (and `sin2_theta_w` within [0, 1]).
#[derive(Debug, Clone)]
pub struct PhysicalConstants {
    pub hbar: Quantity,
    pub c: Quantity,
    pub q: Quantity,
    pub k_newton: Quantity,
    pub planck_length: Quantity,
    pub alpha: f64,
    pub sin2_theta_w: f64,
}

/// JSON override file: any subset of the seven fundamental fields.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantOverrides {
    pub hbar_erg_s: Option<f64>,
    pub c_cm_per_s: Option<f64>,
    pub q_statc: Option<f64>,
    pub k_newton_cgs: Option<f64>,
    pub planck_length_cm: Option<f64>,
    pub alpha: Option<f64>,
    pub sin2_theta_w: Option<f64>,
}

impl PhysicalConstants {
    /// The pinned default set.
    pub fn pinned() -> Self {
        let v = |symbol: &str| {
            PINNED_CONSTANTS
                .iter()
                .find(|e| e.symbol == symbol)
                .expect("pinned table covers all symbols")
                .value
        };
        PhysicalConstants::from_values(
            v("hbar"),
            v("c"),
            v("q"),
            v("k"),
            v("L_p"),
            v("alpha"),
            v("sin2_theta_w"),
        )
        .expect("pinned constants are valid")
    }

    pub fn from_values(
        hbar_erg_s: f64,
        c_cm_per_s: f64,
        q_statc: f64,
        k_newton_cgs: f64,
        planck_length_cm: f64,
        alpha: f64,
        sin2_theta_w: f64,
    ) -> Result<Self> {
        for (name, value) in [
            ("hbar", hbar_erg_s),
            ("c", c_cm_per_s),
            ("q", q_statc),
            ("k_newton", k_newton_cgs),
            ("planck_length", planck_length_cm),
            ("alpha", alpha),
        ] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidConstants(format!(
                    "{name} must be strictly positive, got {value}"
                )));
            }
        }
        if !(0.0..=1.0).contains(&sin2_theta_w) {
            return Err(Error::InvalidConstants(format!(
                "sin2_theta_w must lie in [0, 1], got {sin2_theta_w}"
            )));
        }
        Ok(PhysicalConstants {
            hbar: Quantity::new(hbar_erg_s, Dimension::ACTION)?,
            c: Quantity::new(c_cm_per_s, Dimension::SPEED)?,
            q: Quantity::new(q_statc, Dimension::CHARGE)?,
            k_newton: Quantity::new(k_newton_cgs, Dimension::GRAVITATIONAL)?,
            planck_length: Quantity::new(planck_length_cm, Dimension::LENGTH)?,
            alpha,
            sin2_theta_w,
        })
    }

    /// Pinned defaults with a JSON override applied on top.
    pub fn with_overrides(json: &str) -> Result<Self> {
        let ov: ConstantOverrides = serde_json::from_str(json)?;
        let base = PhysicalConstants::pinned();
        PhysicalConstants::from_values(
            ov.hbar_erg_s.unwrap_or(base.hbar.value()),
            ov.c_cm_per_s.unwrap_or(base.c.value()),
            ov.q_statc.unwrap_or(base.q.value()),
            ov.k_newton_cgs.unwrap_or(base.k_newton.value()),
            ov.planck_length_cm.unwrap_or(base.planck_length.value()),
            ov.alpha.unwrap_or(base.alpha),
            ov.sin2_theta_w.unwrap_or(base.sin2_theta_w),
        )
    }

    /// FNV-1a 64 hash of the constants table, for run manifests.
    pub fn fingerprint(&self) -> String {
        let canonical = format!(
            "hbar={:.17e};c={:.17e};q={:.17e};k={:.17e};L_p={:.17e};alpha={:.17e};sin2w={:.17e}",
            self.hbar.value(),
            self.c.value(),
            self.q.value(),
            self.k_newton.value(),
            self.planck_length.value(),
            self.alpha,
            self.sin2_theta_w,
        );
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in canonical.bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
        format!("{hash:016x}")
    }
}

/// Mixing length: ell = L_p sqrt((10 / (3 alpha)) (1 + 2 sin^2 theta_W)).
pub fn derive_ell(pc: &PhysicalConstants) -> Result<Quantity> {
    if pc.alpha <= 0.0 {
        return Err(Error::InvalidConstants(format!(
            "alpha must be strictly positive, got {}",
            pc.alpha
        )));
    }
    let bracket = (10.0 / (3.0 * pc.alpha)) * (1.0 + 2.0 * pc.sin2_theta_w);
    pc.planck_length.scale(bracket.sqrt())
}

/// kappa = q^2 ell^2 c^2 / hbar^2 and its square root q ell c / hbar.
/// The units layer confirms sqrt(kappa) comes out as statC/g.
pub fn derive_kappa(pc: &PhysicalConstants, ell: &Quantity) -> Result<(Quantity, Quantity)> {
    if ell.dim() != Dimension::LENGTH || ell.value() <= 0.0 {
        return Err(Error::InvalidConstants(format!(
            "ell must be a positive length, got {ell}"
        )));
    }
    let sqrt_kappa = pc.q.mul(ell)?.mul(&pc.c)?.div(&pc.hbar)?;
    debug_assert_eq!(sqrt_kappa.dim(), Dimension::CHARGE_PER_MASS);
    let kappa = sqrt_kappa.mul(&sqrt_kappa)?;
    Ok((kappa, sqrt_kappa))
}

/// The constants derived from a [`PhysicalConstants`] set.
#[derive(Debug, Clone)]
pub struct DerivedConstants {
    /// Mixing length (cm).
    pub ell: Quantity,
    /// (statC/g)^2
    pub kappa: Quantity,
    /// statC/g
    pub sqrt_kappa: Quantity,
    /// sqrt(kappa) - k/sqrt(kappa), the charge-per-mass coupling per unit
    /// theta (statC/g). Positive under the pinned constants.
    pub sigma_per_theta: Quantity,
}

impl DerivedConstants {
    pub fn derive(pc: &PhysicalConstants) -> Result<Self> {
        let ell = derive_ell(pc)?;
        let (kappa, sqrt_kappa) = derive_kappa(pc, &ell)?;
        let sigma_per_theta = sqrt_kappa.sub(&pc.k_newton.div(&sqrt_kappa)?)?;
        debug_assert_eq!(sigma_per_theta.dim(), Dimension::CHARGE_PER_MASS);
        Ok(DerivedConstants {
            ell,
            kappa,
            sqrt_kappa,
            sigma_per_theta,
        })
    }

    /// sigma = theta (sqrt(kappa) - k/sqrt(kappa)), in statC/g. Exactly
    /// linear in theta; theta may carry either sign.
    pub fn sigma(&self, theta: f64) -> Result<Quantity> {
        self.sigma_per_theta.scale(theta)
    }
}
