//! Rényi entropies `S^α = ln(∫ρ^α) / (1-α)` of the density and shape
//! function, the four-index partition at α = 2 and the per-atom net and
//! nonadditive-intra terms for general α.

use alloc::vec;
use alloc::vec::Vec;

use crate::density::{pair_index, PairDensityField, PairSamples, CLAMP_THRESHOLD};
use crate::math::{log_abs, xlogx};
use crate::quadrature::{integrate_dyn, MolecularGrid};
use crate::shannon::{check_normalization, integrated_density};
use crate::{Error, Result};

/// Orders closer than this to one are rejected.
pub const ALPHA_ONE_GAP: f64 = 1e-9;

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidArgument {
            what: "Rényi order",
            value: alpha,
        });
    }
    if (alpha - 1.0).abs() <= ALPHA_ONE_GAP {
        return Err(Error::AlphaNearOne { alpha });
    }
    Ok(())
}

fn integer_order(alpha: f64) -> Option<i32> {
    (alpha == libm::round(alpha) && alpha <= 64.0).then_some(alpha as i32)
}

// x^α for a nonnegative density value.
#[inline]
fn power(x: f64, alpha: f64, int: Option<i32>) -> f64 {
    match int {
        Some(k) => libm::pow(x, k as f64),
        None if x == 0.0 => 0.0,
        None => libm::exp(alpha * libm::log(x)),
    }
}

fn entropy_from_integral(integral: f64, alpha: f64) -> Result<f64> {
    if !(integral > 0.0) || !integral.is_finite() {
        return Err(Error::NonFinite("Rényi integral"));
    }
    Ok(libm::log(integral) / (1.0 - alpha))
}

/// Total Rényi entropies of density and shape function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenyiTotals {
    pub alpha: f64,
    pub rho: f64,
    pub sigma: f64,
    /// Grid integral of ρ used for `σ = ρ/N`.
    pub integrated_density: f64,
}

/// Four-index fractions `p^{AB}_{CD} = ∫ρ^{AB}ρ^{CD} / ∫ρ²` over ordered pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct P4Table {
    n_atoms: usize,
    integrals: Vec<f64>,
    fractions: Vec<f64>,
}

impl P4Table {
    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    fn offset(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        let n = self.n_atoms;
        ((a * n + b) * n + c) * n + d
    }

    pub fn fraction(&self, a: usize, b: usize, c: usize, d: usize) -> f64 {
        self.fractions[self.offset(a, b, c, d)]
    }

    pub fn integral(&self, a: usize, b: usize, c: usize, d: usize) -> f64 {
        self.integrals[self.offset(a, b, c, d)]
    }

    /// All entries as `([A, B, C, D], p)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = ([usize; 4], f64)> + '_ {
        let n = self.n_atoms;
        self.fractions.iter().enumerate().map(move |(k, &p)| {
            ([k / (n * n * n), (k / (n * n)) % n, (k / n) % n, k % n], p)
        })
    }

    pub fn sum(&self) -> f64 {
        self.fractions.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenyiDecomposition {
    pub alpha: f64,
    pub total_rho: f64,
    pub total_sigma: f64,
    pub integrated_density: f64,
    pub p_atom: Vec<f64>,
    pub net: f64,
    pub net_sigma: f64,
    pub nadd_intra: f64,
    /// Present only at α = 2.
    pub p4: Option<P4Table>,
    pub add2: Option<f64>,
    pub nadd2: Option<f64>,
}

impl RenyiDecomposition {
    /// `|S_σ - S_ρ - α/(α-1) ln N|`.
    pub fn shape_relation_error(&self) -> f64 {
        let a = self.alpha;
        (self.total_sigma - self.total_rho - a / (a - 1.0) * libm::log(self.integrated_density)).abs()
    }
}

pub fn renyi_total(field: &PairDensityField, grid: &MolecularGrid, alpha: f64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    let t = renyi_total_samples(&field.sample(grid), grid, alpha)?;
    Ok((t.rho, t.sigma))
}

pub fn renyi_total_samples(samples: &PairSamples, grid: &MolecularGrid, alpha: f64) -> Result<RenyiTotals> {
    check_alpha(alpha)?;
    let int = integer_order(alpha);
    let n = integrated_density(samples, grid)?;
    let inv_n = 1.0 / n;
    let v = integrate_dyn(grid, 2, |i, _, out| {
        let rho = samples.total_at(i);
        out[0] = power(rho, alpha, int);
        out[1] = power(rho * inv_n, alpha, int);
    })?;
    Ok(RenyiTotals {
        alpha,
        rho: entropy_from_integral(v[0], alpha)?,
        sigma: entropy_from_integral(v[1], alpha)?,
        integrated_density: n,
    })
}

/// Per-atom fractions `p^A_α`, net entropy and nonadditive-intra entropy.
pub fn renyi_net_nadd_intra(field: &PairDensityField, grid: &MolecularGrid, alpha: f64) -> Result<(Vec<f64>, f64, f64)> {
    let d = renyi_decompose_samples(&field.sample(grid), grid, field.n_electrons(), alpha)?;
    Ok((d.p_atom, d.net, d.nadd_intra))
}

pub fn renyi2_partition(field: &PairDensityField, grid: &MolecularGrid) -> Result<RenyiDecomposition> {
    renyi_decompose(field, grid, 2.0)
}

pub fn renyi_decompose(field: &PairDensityField, grid: &MolecularGrid, alpha: f64) -> Result<RenyiDecomposition> {
    renyi_decompose_samples(&field.sample(grid), grid, field.n_electrons(), alpha)
}

/// Full decomposition from pre-sampled pair densities.
pub fn renyi_decompose_samples(
    samples: &PairSamples,
    grid: &MolecularGrid,
    n_electrons: f64,
    alpha: f64,
) -> Result<RenyiDecomposition> {
    check_alpha(alpha)?;
    let n_atoms = samples.n_atoms();
    let int = integer_order(alpha);
    let totals = renyi_total_samples(samples, grid, alpha)?;
    check_normalization(totals.integrated_density, n_electrons)?;
    let inv_n = 1.0 / totals.integrated_density;

    if int.is_none() {
        for i in 0..samples.len() {
            let tri = samples.pairs_at(i);
            for a in 0..n_atoms {
                let v = tri[pair_index(n_atoms, a, a)];
                if v < -CLAMP_THRESHOLD {
                    return Err(Error::NegativePairDensity { atom: a, value: v });
                }
            }
        }
    }
    // ∫ρ^α, ∫(ρ^{AA})^α, ∫(σ^{AA})^α
    let sums = integrate_dyn(grid, 1 + 2 * n_atoms, |i, _, out| {
        let tri = samples.pairs_at(i);
        out[0] = power(samples.total_at(i), alpha, int);
        for a in 0..n_atoms {
            let v = tri[pair_index(n_atoms, a, a)];
            let (x, s) = match int {
                Some(k) => (libm::pow(v, k as f64), libm::pow(v * inv_n, k as f64)),
                None => {
                    let v = v.max(0.0);
                    (power(v, alpha, None), power(v * inv_n, alpha, None))
                }
            };
            out[1 + a] = x;
            out[1 + n_atoms + a] = s;
        }
    })?;
    let total_int = sums[0];
    let scale = 1.0 / (1.0 - alpha);
    let mut p_atom = Vec::with_capacity(n_atoms);
    let (mut net, mut net_sigma, mut nadd_intra) = (0.0, 0.0, 0.0);
    for a in 0..n_atoms {
        let ia = sums[1 + a];
        let p = ia / total_int;
        p_atom.push(p);
        if p != 0.0 {
            net += scale * p * log_abs(ia);
            net_sigma += scale * p * log_abs(sums[1 + n_atoms + a]);
        }
        nadd_intra += scale * xlogx(p);
    }

    let (p4, add2, nadd2) = if alpha == 2.0 {
        let (table, add, nadd) = four_index(samples, grid)?;
        (Some(table), Some(add), Some(nadd))
    } else {
        (None, None, None)
    };

    Ok(RenyiDecomposition {
        alpha,
        total_rho: totals.rho,
        total_sigma: totals.sigma,
        integrated_density: totals.integrated_density,
        p_atom,
        net,
        net_sigma,
        nadd_intra,
        p4,
        add2,
        nadd2,
    })
}

// Integrals over unordered pair × unordered pair, expanded to ordered 4-tuples.
fn four_index(samples: &PairSamples, grid: &MolecularGrid) -> Result<(P4Table, f64, f64)> {
    let n = samples.n_atoms();
    let m = samples.n_pairs();
    let n_prod = m * (m + 1) / 2;
    let sums = integrate_dyn(grid, 1 + n_prod, |i, _, out| {
        let rho = samples.total_at(i);
        out[0] = rho * rho;
        let tri = samples.pairs_at(i);
        let mut k = 1;
        for x in 0..m {
            for y in x..m {
                out[k] = tri[x] * tri[y];
                k += 1;
            }
        }
    })?;
    let denom = sums[0];
    if !(denom > 0.0) {
        return Err(Error::NonFinite("∫ρ²"));
    }
    let product = |x: usize, y: usize| -> f64 {
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        sums[1 + x * m - x * (x + 1) / 2 + y]
    };
    let n4 = n * n * n * n;
    let mut integrals = vec![0.0; n4];
    let mut fractions = vec![0.0; n4];
    let (mut add, mut nadd) = (0.0, 0.0);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let k = ((a * n + b) * n + c) * n + d;
                    let v = product(pair_index(n, a, b), pair_index(n, c, d));
                    let p = v / denom;
                    integrals[k] = v;
                    fractions[k] = p;
                    if p != 0.0 {
                        add -= p * log_abs(v);
                    }
                    nadd -= xlogx(p);
                }
            }
        }
    }
    Ok((
        P4Table {
            n_atoms: n,
            integrals,
            fractions,
        },
        add,
        nadd,
    ))
}

/// Infinite-separation limits `(S^α_ρ,∞, S^α_σ,∞)` from fragment density
/// entropies `S^{α,A}`, fractions `p^A_α` and fragment electron counts.
pub fn asymptotic_renyi_reference(
    atom_entropies: &[f64],
    fractions: &[f64],
    electron_counts: &[f64],
    n_electrons: f64,
    alpha: f64,
) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    if atom_entropies.is_empty() {
        return Err(Error::Empty("fragment list"));
    }
    if fractions.len() != atom_entropies.len() || electron_counts.len() != atom_entropies.len() {
        return Err(Error::InvalidArgument {
            what: "fragment list length",
            value: fractions.len() as f64,
        });
    }
    let sum: f64 = fractions.iter().sum();
    if (sum - 1.0).abs() > 1e-6 || fractions.iter().any(|&p| !(0.0..=1.0 + 1e-10).contains(&p)) {
        return Err(Error::InconsistentFractions { sum });
    }
    if let Some(&bad) = electron_counts.iter().find(|&&n| !(n > 0.0)) {
        return Err(Error::InvalidArgument {
            what: "fragment electron count",
            value: bad,
        });
    }
    if !(n_electrons > 0.0) {
        return Err(Error::InvalidArgument {
            what: "electron count",
            value: n_electrons,
        });
    }
    let scale = 1.0 / (1.0 - alpha);
    let shift = alpha / (alpha - 1.0);
    let (mut rho, mut sigma) = (0.0, 0.0);
    for ((&s, &p), &na) in atom_entropies.iter().zip(fractions).zip(electron_counts) {
        let s_sigma = s + shift * libm::log(na);
        rho += p * s - scale * xlogx(p);
        sigma += p * s_sigma - scale * xlogx(p);
        if p != 0.0 {
            sigma += alpha * scale * p * libm::log(na / n_electrons);
        }
    }
    Ok((rho, sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::LN_2;

    #[test]
    fn alpha_validation() {
        assert!(check_alpha(2.0).is_ok());
        assert!(check_alpha(0.5).is_ok());
        assert!(matches!(check_alpha(1.0 + 1e-10), Err(Error::AlphaNearOne { .. })));
        assert!(check_alpha(0.0).is_err());
        assert!(check_alpha(-2.0).is_err());
        assert!(check_alpha(f64::NAN).is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(power(0.0, 0.5, None), 0.0);
        assert_eq!(power(3.0, 2.0, integer_order(2.0)), 9.0);
        assert!((power(2.0, 0.5, None) - core::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn homonuclear_limit_reference() {
        let s = 1.7;
        for alpha in [0.5, 2.0, 3.0] {
            let (rho, sigma) = asymptotic_renyi_reference(&[s, s], &[0.5, 0.5], &[1.0, 1.0], 2.0, alpha).unwrap();
            assert!((rho - (s + LN_2 / (1.0 - alpha))).abs() < 1e-14);
            // σ limit equals the ρ limit shifted by α/(α-1) ln N
            assert!((sigma - (rho + alpha / (alpha - 1.0) * LN_2)).abs() < 1e-14);
        }
        let (rho, _) = asymptotic_renyi_reference(&[s, s], &[0.5, 0.5], &[1.0, 1.0], 2.0, 2.0).unwrap();
        assert!((rho - (s - LN_2)).abs() < 1e-15);
        let (rho, sigma) = asymptotic_renyi_reference(&[s], &[1.0], &[1.0], 1.0, 2.0).unwrap();
        assert_eq!((rho, sigma), (s, s));
        assert!(matches!(
            asymptotic_renyi_reference(&[s, s], &[0.5, 0.6], &[1.0, 1.0], 2.0, 2.0),
            Err(Error::InconsistentFractions { .. })
        ));
    }
}
