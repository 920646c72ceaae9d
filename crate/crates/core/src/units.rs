//! Dimensional arithmetic over the Gaussian-CGS base (gram, centimeter,
//! second).
//!
//! Every physical value in this crate flows through [`Quantity`], so formula
//! errors surface as dimension mismatches at runtime instead of silently
//! wrong numbers. Exponents are rationals because charge is the derived
//! dimension g^(1/2) cm^(3/2) s^(-1) (the statcoulomb) and several derived
//! constants carry half-integer exponents.
//!
//! SI appears only at the I/O boundary, through [`to_si`]/[`from_si`] and the
//! fixed conversion table in [`CONVERSIONS`].

use crate::error::{Error, Result};
use num_rational::Ratio;
use std::fmt;

/// Rational exponent of a base dimension.
pub type Exponent = Ratio<i32>;

/// Rational exponents of gram, centimeter and second, stored in lowest terms
/// with positive denominators (guaranteed by `Ratio`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dimension {
    gram: Exponent,
    centimeter: Exponent,
    second: Exponent,
}

const fn ratio(numer: i32, denom: i32) -> Exponent {
    Ratio::new_raw(numer, denom)
}

impl Dimension {
    pub const DIMENSIONLESS: Dimension = Dimension::of(ratio(0, 1), ratio(0, 1), ratio(0, 1));
    pub const MASS: Dimension = Dimension::of(ratio(1, 1), ratio(0, 1), ratio(0, 1));
    pub const LENGTH: Dimension = Dimension::of(ratio(0, 1), ratio(1, 1), ratio(0, 1));
    pub const TIME: Dimension = Dimension::of(ratio(0, 1), ratio(0, 1), ratio(1, 1));
    pub const SPEED: Dimension = Dimension::of(ratio(0, 1), ratio(1, 1), ratio(-1, 1));
    pub const ANGULAR_SPEED: Dimension = Dimension::of(ratio(0, 1), ratio(0, 1), ratio(-1, 1));
    /// erg = g cm^2 s^-2
    pub const ENERGY: Dimension = Dimension::of(ratio(1, 1), ratio(2, 1), ratio(-2, 1));
    /// erg s
    pub const ACTION: Dimension = Dimension::of(ratio(1, 1), ratio(2, 1), ratio(-1, 1));
    /// statC = g^(1/2) cm^(3/2) s^-1
    pub const CHARGE: Dimension = Dimension::of(ratio(1, 2), ratio(3, 2), ratio(-1, 1));
    /// statC/g
    pub const CHARGE_PER_MASS: Dimension = Dimension::of(ratio(-1, 2), ratio(3, 2), ratio(-1, 1));
    /// (statC/g)^2
    pub const CHARGE_PER_MASS_SQUARED: Dimension =
        Dimension::of(ratio(-1, 1), ratio(3, 1), ratio(-2, 1));
    /// statV/cm = g^(1/2) cm^(-1/2) s^-1
    pub const ELECTRIC_FIELD: Dimension = Dimension::of(ratio(1, 2), ratio(-1, 2), ratio(-1, 1));
    /// Newton constant: cm^3 g^-1 s^-2
    pub const GRAVITATIONAL: Dimension = Dimension::of(ratio(-1, 1), ratio(3, 1), ratio(-2, 1));
    /// G cm^3 = erg/G = g^(1/2) cm^(5/2) s^-1
    pub const MAGNETIC_MOMENT: Dimension = Dimension::of(ratio(1, 2), ratio(5, 2), ratio(-1, 1));
    /// Pair-coupling numerator: erg cm
    pub const ENERGY_LENGTH: Dimension = Dimension::of(ratio(1, 1), ratio(3, 1), ratio(-2, 1));
    /// dyn = g cm s^-2
    pub const FORCE: Dimension = Dimension::of(ratio(1, 1), ratio(1, 1), ratio(-2, 1));
    /// erg^2
    pub const ENERGY_SQUARED: Dimension = Dimension::of(ratio(2, 1), ratio(4, 1), ratio(-4, 1));
    /// erg/statC = g^(1/2) cm^(1/2) s^-1
    pub const ENERGY_PER_CHARGE: Dimension = Dimension::of(ratio(1, 2), ratio(1, 2), ratio(-1, 1));

    const fn of(gram: Exponent, centimeter: Exponent, second: Exponent) -> Self {
        Dimension {
            gram,
            centimeter,
            second,
        }
    }

    /// Build a dimension from arbitrary rational exponents (reduced on entry).
    pub fn new(gram: Exponent, centimeter: Exponent, second: Exponent) -> Self {
        Dimension {
            gram: gram.reduced(),
            centimeter: centimeter.reduced(),
            second: second.reduced(),
        }
    }

    pub fn gram(&self) -> Exponent {
        self.gram
    }

    pub fn centimeter(&self) -> Exponent {
        self.centimeter
    }

    pub fn second(&self) -> Exponent {
        self.second
    }

    pub fn is_dimensionless(&self) -> bool {
        *self == Dimension::DIMENSIONLESS
    }

    /// Componentwise negation; `d * d.inverse()` is dimensionless.
    pub fn inverse(&self) -> Dimension {
        Dimension {
            gram: -self.gram,
            centimeter: -self.centimeter,
            second: -self.second,
        }
    }

    /// Scale all exponents by a rational power.
    pub fn pow(&self, p: Exponent) -> Dimension {
        Dimension {
            gram: self.gram * p,
            centimeter: self.centimeter * p,
            second: self.second * p,
        }
    }
}

impl std::ops::Mul for Dimension {
    type Output = Dimension;
    fn mul(self, rhs: Dimension) -> Dimension {
        Dimension {
            gram: self.gram + rhs.gram,
            centimeter: self.centimeter + rhs.centimeter,
            second: self.second + rhs.second,
        }
    }
}

impl std::ops::Div for Dimension {
    type Output = Dimension;
    fn div(self, rhs: Dimension) -> Dimension {
        Dimension {
            gram: self.gram - rhs.gram,
            centimeter: self.centimeter - rhs.centimeter,
            second: self.second - rhs.second,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dimensionless() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (symbol, e) in [
            ("g", self.gram),
            ("cm", self.centimeter),
            ("s", self.second),
        ] {
            if e == ratio(0, 1) {
                continue;
            }
            if e == ratio(1, 1) {
                parts.push(symbol.to_string());
            } else if *e.denom() == 1 {
                parts.push(format!("{}^{}", symbol, e.numer()));
            } else {
                parts.push(format!("{}^{}/{}", symbol, e.numer(), e.denom()));
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// A finite real value with a Gaussian-CGS dimension.
///
/// All arithmetic is fallible: a dimension mismatch or a non-finite result is
/// reported as an error instead of propagating NaN/Inf through the physics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    value: f64,
    dim: Dimension,
}

impl Quantity {
    pub fn new(value: f64, dim: Dimension) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Quantity { value, dim })
    }

    pub fn dimensionless(value: f64) -> Result<Self> {
        Quantity::new(value, Dimension::DIMENSIONLESS)
    }

    pub fn grams(value: f64) -> Result<Self> {
        Quantity::new(value, Dimension::MASS)
    }

    pub fn centimeters(value: f64) -> Result<Self> {
        Quantity::new(value, Dimension::LENGTH)
    }

    pub fn seconds(value: f64) -> Result<Self> {
        Quantity::new(value, Dimension::TIME)
    }

    pub fn ergs(value: f64) -> Result<Self> {
        Quantity::new(value, Dimension::ENERGY)
    }

    pub fn statcoulombs(value: f64) -> Result<Self> {
        Quantity::new(value, Dimension::CHARGE)
    }

    pub fn per_second(value: f64) -> Result<Self> {
        Quantity::new(value, Dimension::ANGULAR_SPEED)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    fn check(value: f64, dim: Dimension) -> Result<Quantity> {
        if value.is_finite() {
            Ok(Quantity { value, dim })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn mul(&self, rhs: &Quantity) -> Result<Quantity> {
        Quantity::check(self.value * rhs.value, self.dim * rhs.dim)
    }

    pub fn div(&self, rhs: &Quantity) -> Result<Quantity> {
        Quantity::check(self.value / rhs.value, self.dim / rhs.dim)
    }

    pub fn add(&self, rhs: &Quantity) -> Result<Quantity> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim.to_string(),
                right: rhs.dim.to_string(),
            });
        }
        Quantity::check(self.value + rhs.value, self.dim)
    }

    pub fn sub(&self, rhs: &Quantity) -> Result<Quantity> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim.to_string(),
                right: rhs.dim.to_string(),
            });
        }
        Quantity::check(self.value - rhs.value, self.dim)
    }

    /// Raise to a rational power, scaling the exponents accordingly.
    ///
    /// An even-denominator power of a negative value has no real result; an
    /// odd-denominator power of a negative value keeps the real root, with the
    /// sign set by the numerator's parity.
    pub fn powr(&self, p: Exponent) -> Result<Quantity> {
        let p = p.reduced();
        if *p.numer() == 0 {
            return Quantity::check(1.0, Dimension::DIMENSIONLESS);
        }
        let exp = *p.numer() as f64 / *p.denom() as f64;
        let value = if self.value < 0.0 {
            if p.denom() % 2 == 0 {
                return Err(Error::FractionalPowerOfNegative {
                    value: self.value,
                    power: p.to_string(),
                });
            }
            let magnitude = (-self.value).powf(exp);
            if p.numer() % 2 == 0 {
                magnitude
            } else {
                -magnitude
            }
        } else {
            self.value.powf(exp)
        };
        Quantity::check(value, self.dim.pow(p))
    }

    pub fn powi(&self, n: i32) -> Result<Quantity> {
        self.powr(ratio(n, 1))
    }

    pub fn sqrt(&self) -> Result<Quantity> {
        self.powr(ratio(1, 2))
    }

    pub fn recip(&self) -> Result<Quantity> {
        Quantity::check(1.0 / self.value, self.dim.inverse())
    }

    /// Multiply by a dimensionless factor.
    pub fn scale(&self, factor: f64) -> Result<Quantity> {
        Quantity::check(self.value * factor, self.dim)
    }

    pub fn neg(&self) -> Quantity {
        Quantity {
            value: -self.value,
            dim: self.dim,
        }
    }

    pub fn abs(&self) -> Quantity {
        Quantity {
            value: self.value.abs(),
            dim: self.dim,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim.is_dimensionless() {
            write!(f, "{:e}", self.value)
        } else {
            write!(f, "{:e} {}", self.value, self.dim)
        }
    }
}

/// One row of the SI conversion table: `si_value = gaussian_value * factor`.
#[derive(Debug, Clone, Copy)]
pub struct Conversion {
    pub kind: &'static str,
    pub dim: Dimension,
    pub gaussian_unit: &'static str,
    pub si_unit: &'static str,
    /// SI units per one Gaussian unit.
    pub factor: f64,
}

/// Statcoulombs per coulomb, exact by the SI definition of the ampere in
/// Gaussian terms (numerically c in cm/s divided by 10).
pub const STATC_PER_COULOMB: f64 = 2_997_924_580.0;

/// (V/m) per (statV/cm): 1 statV = 299.792458 V, 1 cm = 0.01 m.
pub const V_PER_M_PER_STATV_PER_CM: f64 = 29979.2458;

/// Every supported SI <-> Gaussian pair. The same table backs [`to_si`],
/// [`from_si`] and the generated documentation in `docs/conversion_table.md`.
pub const CONVERSIONS: &[Conversion] = &[
    Conversion {
        kind: "mass",
        dim: Dimension::MASS,
        gaussian_unit: "g",
        si_unit: "kg",
        factor: 1e-3,
    },
    Conversion {
        kind: "length",
        dim: Dimension::LENGTH,
        gaussian_unit: "cm",
        si_unit: "m",
        factor: 1e-2,
    },
    Conversion {
        kind: "time",
        dim: Dimension::TIME,
        gaussian_unit: "s",
        si_unit: "s",
        factor: 1.0,
    },
    Conversion {
        kind: "speed",
        dim: Dimension::SPEED,
        gaussian_unit: "cm/s",
        si_unit: "m/s",
        factor: 1e-2,
    },
    Conversion {
        kind: "angular speed",
        dim: Dimension::ANGULAR_SPEED,
        gaussian_unit: "1/s",
        si_unit: "1/s",
        factor: 1.0,
    },
    Conversion {
        kind: "energy",
        dim: Dimension::ENERGY,
        gaussian_unit: "erg",
        si_unit: "J",
        factor: 1e-7,
    },
    Conversion {
        kind: "action",
        dim: Dimension::ACTION,
        gaussian_unit: "erg s",
        si_unit: "J s",
        factor: 1e-7,
    },
    Conversion {
        kind: "charge",
        dim: Dimension::CHARGE,
        gaussian_unit: "statC",
        si_unit: "C",
        factor: 1.0 / STATC_PER_COULOMB,
    },
    Conversion {
        kind: "charge per mass",
        dim: Dimension::CHARGE_PER_MASS,
        gaussian_unit: "statC/g",
        si_unit: "C/kg",
        factor: 1e3 / STATC_PER_COULOMB,
    },
    Conversion {
        kind: "electric field",
        dim: Dimension::ELECTRIC_FIELD,
        gaussian_unit: "statV/cm",
        si_unit: "V/m",
        factor: V_PER_M_PER_STATV_PER_CM,
    },
    Conversion {
        kind: "gravitational constant",
        dim: Dimension::GRAVITATIONAL,
        gaussian_unit: "cm^3/(g s^2)",
        si_unit: "m^3/(kg s^2)",
        factor: 1e-3,
    },
    Conversion {
        kind: "charge per mass, squared",
        dim: Dimension::CHARGE_PER_MASS_SQUARED,
        gaussian_unit: "(statC/g)^2",
        si_unit: "(C/kg)^2",
        factor: (1e3 / STATC_PER_COULOMB) * (1e3 / STATC_PER_COULOMB),
    },
    Conversion {
        kind: "magnetic moment",
        dim: Dimension::MAGNETIC_MOMENT,
        gaussian_unit: "G cm^3",
        si_unit: "A m^2",
        factor: 1e-3,
    },
    Conversion {
        kind: "energy x length",
        dim: Dimension::ENERGY_LENGTH,
        gaussian_unit: "erg cm",
        si_unit: "J m",
        factor: 1e-9,
    },
    Conversion {
        kind: "force",
        dim: Dimension::FORCE,
        gaussian_unit: "dyn",
        si_unit: "N",
        factor: 1e-5,
    },
    Conversion {
        kind: "dimensionless",
        dim: Dimension::DIMENSIONLESS,
        gaussian_unit: "1",
        si_unit: "1",
        factor: 1.0,
    },
];

/// Look up the conversion row for a dimension, if supported.
///
/// Gaussian units collapse (statC/g)^2 onto the dimension of the Newton
/// constant (both are g^-1 cm^3 s^-2, which is why k/kappa is dimensionless);
/// dimension-based lookup resolves that degenerate case to the mechanical
/// "gravitational constant" row. Use [`to_si_as`] to pick the kind expressly.
pub fn conversion_for(dim: Dimension) -> Option<&'static Conversion> {
    CONVERSIONS.iter().find(|c| c.dim == dim)
}

/// Convert a Gaussian quantity to `(si_value, si_unit)`.
pub fn to_si(q: &Quantity) -> Result<(f64, &'static str)> {
    let conv =
        conversion_for(q.dim()).ok_or_else(|| Error::UnsupportedDimension(q.dim().to_string()))?;
    Ok((q.value() * conv.factor, conv.si_unit))
}

/// Convert to SI under an explicitly named kind, verifying the dimension.
pub fn to_si_as(kind: &str, q: &Quantity) -> Result<(f64, &'static str)> {
    let conv = CONVERSIONS
        .iter()
        .find(|c| c.kind == kind)
        .ok_or_else(|| Error::UnsupportedDimension(kind.to_string()))?;
    if conv.dim != q.dim() {
        return Err(Error::DimensionMismatch {
            left: q.dim().to_string(),
            right: conv.dim.to_string(),
        });
    }
    Ok((q.value() * conv.factor, conv.si_unit))
}

/// Convert an SI value of the named kind back to a Gaussian quantity.
pub fn from_si(kind: &str, si_value: f64) -> Result<Quantity> {
    let conv = CONVERSIONS
        .iter()
        .find(|c| c.kind == kind)
        .ok_or_else(|| Error::UnsupportedDimension(kind.to_string()))?;
    Quantity::new(si_value / conv.factor, conv.dim)
}

/// Render the conversion table as markdown; `docs/conversion_table.md` is
/// kept equal to this output by a test.
pub fn conversion_table_markdown() -> String {
    let mut out = String::from(
        "# SI conversion table\n\n\
         Gaussian CGS (gram, centimeter, second; charge in statcoulombs) is the\n\
         native unit system of this library. SI values appear only at the I/O\n\
         boundary. For every supported kind, `si_value = gaussian_value x factor`.\n\n\
         Charge-bearing conversions use the exact identity 1 C = 2 997 924 580 statC;\n\
         all other factors are exact powers of ten.\n\n\
         Gaussian dimensions do not always determine the SI kind: (statC/g)^2\n\
         and the Newton constant share g^-1 cm^3 s^-2. Dimension-based lookup\n\
         resolves that pair to the gravitational-constant row; kind-explicit\n\
         conversion handles the other reading.\n\n\
         | kind | dimension (g, cm, s) | Gaussian unit | SI unit | factor (SI per Gaussian) |\n\
         |------|----------------------|---------------|---------|--------------------------|\n",
    );
    for c in CONVERSIONS {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {:e} |\n",
            c.kind, c.dim, c.gaussian_unit, c.si_unit, c.factor
        ));
    }
    out
}
