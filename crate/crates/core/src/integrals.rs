//! One- and two-electron integrals over contracted s-type Gaussians.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::basis::{primitive_norm, ContractedGaussian};
use crate::math::dist2;
use crate::{Error, Result};

/// Boys function of order zero.
pub fn boys_f0(t: f64) -> f64 {
    if t < 1e-8 {
        1.0 - t / 3.0 + t * t / 10.0
    } else {
        let s = libm::sqrt(t);
        0.5 * libm::sqrt(PI / t) * libm::erf(s)
    }
}

// Normalized primitives of an s contraction: (exponent, coefficient × norm).
fn scaled_primitives(f: &ContractedGaussian) -> Result<Vec<(f64, f64)>> {
    if !f.is_s() {
        return Err(Error::NotSType);
    }
    Ok(f
        .exponents
        .iter()
        .zip(&f.coefficients)
        .map(|(&a, &c)| (a, c * primitive_norm([0, 0, 0], a)))
        .collect())
}

fn gaussian_center(a: f64, pa: &[f64; 3], b: f64, pb: &[f64; 3]) -> [f64; 3] {
    let p = a + b;
    [
        (a * pa[0] + b * pb[0]) / p,
        (a * pa[1] + b * pb[1]) / p,
        (a * pa[2] + b * pb[2]) / p,
    ]
}

/// Overlap of two normalized contracted s functions separated by `distance`.
pub fn contracted_overlap(fa: &ContractedGaussian, fb: &ContractedGaussian, distance: f64) -> Result<f64> {
    if !(distance >= 0.0) || !distance.is_finite() {
        return Err(Error::InvalidArgument {
            what: "distance",
            value: distance,
        });
    }
    let pa = scaled_primitives(fa)?;
    let pb = scaled_primitives(fb)?;
    let r2 = distance * distance;
    let mut s = 0.0;
    for &(a, ca) in &pa {
        for &(b, cb) in &pb {
            let p = a + b;
            s += ca * cb * libm::pow(PI / p, 1.5) * libm::exp(-a * b / p * r2);
        }
    }
    Ok(s)
}

/// Integrals over a set of s functions. Matrices are row-major `n × n`;
/// `eri` is `n⁴` in chemists' notation `(ij|kl)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralSet {
    pub n: usize,
    pub overlap: Vec<f64>,
    pub kinetic: Vec<f64>,
    /// Attraction to all nuclei combined.
    pub nuclear: Vec<f64>,
    pub eri: Vec<f64>,
}

impl IntegralSet {
    /// `functions` are (contraction, center); `nuclei` are (position, charge).
    pub fn compute(functions: &[(&ContractedGaussian, [f64; 3])], nuclei: &[([f64; 3], f64)]) -> Result<Self> {
        let n = functions.len();
        let prims = functions
            .iter()
            .map(|(f, _)| scaled_primitives(f))
            .collect::<Result<Vec<_>>>()?;
        let centers: Vec<[f64; 3]> = functions.iter().map(|(_, c)| *c).collect();

        let mut overlap = vec![0.0; n * n];
        let mut kinetic = vec![0.0; n * n];
        let mut nuclear = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let r2 = dist2(&centers[i], &centers[j]);
                let (mut s, mut t, mut v) = (0.0, 0.0, 0.0);
                for &(a, ca) in &prims[i] {
                    for &(b, cb) in &prims[j] {
                        let p = a + b;
                        let mu = a * b / p;
                        let k = libm::exp(-mu * r2);
                        let sab = ca * cb * libm::pow(PI / p, 1.5) * k;
                        s += sab;
                        t += mu * (3.0 - 2.0 * mu * r2) * sab;
                        let pc = gaussian_center(a, &centers[i], b, &centers[j]);
                        for (pos, z) in nuclei {
                            v -= z * ca * cb * 2.0 * PI / p * k * boys_f0(p * dist2(&pc, pos));
                        }
                    }
                }
                overlap[i * n + j] = s;
                kinetic[i * n + j] = t;
                nuclear[i * n + j] = v;
            }
        }

        let mut eri = vec![0.0; n * n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        eri[((i * n + j) * n + k) * n + l] = primitive_eri(
                            (&prims[i], &centers[i]),
                            (&prims[j], &centers[j]),
                            (&prims[k], &centers[k]),
                            (&prims[l], &centers[l]),
                        );
                    }
                }
            }
        }
        let set = Self {
            n,
            overlap,
            kinetic,
            nuclear,
            eri,
        };
        if set
            .overlap
            .iter()
            .chain(&set.kinetic)
            .chain(&set.nuclear)
            .chain(&set.eri)
            .any(|x| !x.is_finite())
        {
            return Err(Error::NonFinite("integral"));
        }
        Ok(set)
    }

    /// Integrals for two functions on nuclei of charge `charge` at distance `distance` along z.
    pub fn diatomic(basis: &ContractedGaussian, charge: f64, distance: f64) -> Result<Self> {
        let a = [0.0, 0.0, -0.5 * distance];
        let b = [0.0, 0.0, 0.5 * distance];
        Self::compute(&[(basis, a), (basis, b)], &[(a, charge), (b, charge)])
    }

    pub fn s(&self, i: usize, j: usize) -> f64 {
        self.overlap[i * self.n + j]
    }

    /// Core Hamiltonian element `T + V`.
    pub fn h(&self, i: usize, j: usize) -> f64 {
        self.kinetic[i * self.n + j] + self.nuclear[i * self.n + j]
    }

    pub fn g(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        let n = self.n;
        self.eri[((i * n + j) * n + k) * n + l]
    }
}

type PrimSet<'a> = (&'a Vec<(f64, f64)>, &'a [f64; 3]);

fn primitive_eri(i: PrimSet, j: PrimSet, k: PrimSet, l: PrimSet) -> f64 {
    let rab = dist2(i.1, j.1);
    let rcd = dist2(k.1, l.1);
    let mut total = 0.0;
    for &(a, ca) in i.0 {
        for &(b, cb) in j.0 {
            let p = a + b;
            let kab = libm::exp(-a * b / p * rab);
            let pc = gaussian_center(a, i.1, b, j.1);
            for &(c, cc) in k.0 {
                for &(d, cd) in l.0 {
                    let q = c + d;
                    let kcd = libm::exp(-c * d / q * rcd);
                    let qc = gaussian_center(c, k.1, d, l.1);
                    let pre = 2.0 * libm::pow(PI, 2.5) / (p * q * libm::sqrt(p + q));
                    let t = p * q / (p + q) * dist2(&pc, &qc);
                    total += ca * cb * cc * cd * pre * kab * kcd * boys_f0(t);
                }
            }
        }
    }
    total
}
