//! Atom-centered Cartesian Gaussian primitives and contracted functions.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::math::odd_double_factorial;
use crate::{Error, Result};

/// Highest supported angular momentum (f).
pub const MAX_L: u32 = 3;

/// Normalization constant of `x^a y^b z^c exp(-α r²)`.
pub fn primitive_norm(powers: [u8; 3], exponent: f64) -> f64 {
    let l: u32 = powers.iter().map(|&p| p as u32).sum();
    let dfs: f64 = powers
        .iter()
        .map(|&p| odd_double_factorial(p as u32))
        .product();
    libm::pow(2.0 * exponent / PI, 0.75) * libm::pow(4.0 * exponent, 0.5 * l as f64)
        / libm::sqrt(dfs)
}

/// Normalized Cartesian Gaussian on atom `center`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Primitive {
    pub center: usize,
    pub powers: [u8; 3],
    pub exponent: f64,
    pub norm: f64,
}

impl Primitive {
    pub fn new(center: usize, powers: [u8; 3], exponent: f64) -> Result<Self> {
        let l: u32 = powers.iter().map(|&p| p as u32).sum();
        if l > MAX_L {
            return Err(Error::UnsupportedAngularMomentum { l });
        }
        if !(exponent > 0.0) || !exponent.is_finite() {
            return Err(Error::InvalidArgument {
                what: "primitive exponent",
                value: exponent,
            });
        }
        Ok(Self {
            center,
            powers,
            exponent,
            norm: primitive_norm(powers, exponent),
        })
    }

    pub fn angular_momentum(&self) -> u32 {
        self.powers.iter().map(|&p| p as u32).sum()
    }

    /// Value at `r` given the position of the primitive's center.
    #[inline]
    pub fn eval(&self, center: &[f64; 3], r: &[f64; 3]) -> f64 {
        let d = [r[0] - center[0], r[1] - center[1], r[2] - center[2]];
        let r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
        let radial = libm::exp(-self.exponent * r2);
        if radial == 0.0 {
            return 0.0;
        }
        let mut ang = 1.0;
        for (x, &p) in d.iter().zip(&self.powers) {
            for _ in 0..p {
                ang *= x;
            }
        }
        self.norm * ang * radial
    }
}

/// Evaluates a normalized primitive centered at `center`.
pub fn eval_primitive(p: &Primitive, center: &[f64; 3], r: &[f64; 3]) -> f64 {
    p.eval(center, r)
}

/// Contracted Cartesian Gaussian. Coefficients multiply normalized
/// primitives and are rescaled so the contraction itself is normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct ContractedGaussian {
    pub powers: [u8; 3],
    pub exponents: Vec<f64>,
    pub coefficients: Vec<f64>,
}

// Overlap of two normalized primitives with equal powers on the same center.
fn same_center_overlap(powers: [u8; 3], a: f64, b: f64) -> f64 {
    let ratio = 2.0 * libm::sqrt(a * b) / (a + b);
    powers
        .iter()
        .map(|&p| libm::pow(ratio, p as f64 + 0.5))
        .product()
}

impl ContractedGaussian {
    pub fn new(powers: [u8; 3], exponents: Vec<f64>, coefficients: Vec<f64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Empty("contraction"));
        }
        if exponents.len() != coefficients.len() {
            return Err(Error::InvalidArgument {
                what: "contraction coefficient count",
                value: coefficients.len() as f64,
            });
        }
        for &e in &exponents {
            Primitive::new(0, powers, e)?;
        }
        let mut g = Self {
            powers,
            exponents,
            coefficients,
        };
        let s = g.self_overlap();
        if !(s > 0.0) {
            return Err(Error::InvalidArgument {
                what: "contraction self-overlap",
                value: s,
            });
        }
        let scale = 1.0 / libm::sqrt(s);
        g.coefficients.iter_mut().for_each(|c| *c *= scale);
        Ok(g)
    }

    /// Contracted s function.
    pub fn s(exponents: Vec<f64>, coefficients: Vec<f64>) -> Result<Self> {
        Self::new([0, 0, 0], exponents, coefficients)
    }

    pub fn is_s(&self) -> bool {
        self.powers == [0, 0, 0]
    }

    pub fn self_overlap(&self) -> f64 {
        let mut s = 0.0;
        for (ci, ai) in self.coefficients.iter().zip(&self.exponents) {
            for (cj, aj) in self.coefficients.iter().zip(&self.exponents) {
                s += ci * cj * same_center_overlap(self.powers, *ai, *aj);
            }
        }
        s
    }

    /// Primitives placed on atom `center`, paired with their contraction coefficients.
    pub fn primitives(&self, center: usize) -> Vec<(Primitive, f64)> {
        self.exponents
            .iter()
            .zip(&self.coefficients)
            .map(|(&e, &c)| {
                (
                    Primitive {
                        center,
                        powers: self.powers,
                        exponent: e,
                        norm: primitive_norm(self.powers, e),
                    },
                    c,
                )
            })
            .collect()
    }

    pub fn eval(&self, center: &[f64; 3], r: &[f64; 3]) -> f64 {
        self.primitives(0)
            .iter()
            .map(|(p, c)| c * p.eval(center, r))
            .sum()
    }
}
