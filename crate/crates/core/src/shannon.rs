//! Shannon entropy of the density and shape function, split into atomic
//! net, interatomic overlap and nonadditive parts.
//!
//! With the pair terms grouped as `ρ_A = ρ^{AA}` and `ρ_{AB} = 2ρ^{AB}`
//! (A < B), the entropy density is
//! `-ρ ln ρ = -Σ_g ρ_g ln|ρ_g| + Σ_g ρ_g ln|ρ_g/ρ| = add - nadd`.

use alloc::vec;
use alloc::vec::Vec;

use crate::density::{clamp_density, ClampStatus, Diagnostics, PairDensityField, PairSamples, PairValues};
use crate::math::{log_abs, xlogx};
use crate::quadrature::{integrate_dyn, MolecularGrid};
use crate::{Error, Result};

/// Largest accepted gap between the grid integral of ρ and N.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-4;

/// Entropy density and its partition at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct ShannonPointTerms {
    pub total: f64,
    pub add: f64,
    pub nadd: f64,
    pub net: Vec<f64>,
    /// Unordered pairs A < B in row order, factor 2 included.
    pub overlap: Vec<f64>,
}

// Layout of one point's terms: total, add, nadd, net..., overlap...
fn n_terms(n_atoms: usize) -> usize {
    3 + n_atoms * (n_atoms + 1) / 2
}

// `scale` divides every pair value (1 for ρ, 1/N for σ).
fn point_terms_into(n: usize, tri: &[f64], scale: f64, out: &mut [f64]) {
    let mut raw = 0.0;
    let mut k = 0;
    let (head, rest) = out.split_at_mut(3);
    let (net, overlap) = rest.split_at_mut(n);
    let mut o = 0;
    for a in 0..n {
        for b in a..n {
            let v = tri[k] * scale;
            if a == b {
                net[a] = v;
                raw += v;
            } else {
                overlap[o] = 2.0 * v;
                raw += 2.0 * v;
                o += 1;
            }
            k += 1;
        }
    }
    let (rho, status) = clamp_density(raw);
    let total = -xlogx(rho);
    let mut add = 0.0;
    let mut nadd = 0.0;
    let exact = status == ClampStatus::Unchanged && rho > 0.0;
    let log_rho = if exact { libm::log(rho) } else { 0.0 };
    for g in net.iter_mut().chain(overlap.iter_mut()) {
        let v = *g;
        *g = -xlogx(v);
        add += *g;
        if exact && v != 0.0 {
            nadd -= v * (log_abs(v) - log_rho);
        }
    }
    if !exact {
        // ρ was clamped or replaced by |ρ|: keep the closure by construction
        nadd = add - total;
    }
    head[0] = total;
    head[1] = add;
    head[2] = nadd;
}

/// Pointwise Shannon terms from the pair densities at one point.
pub fn shannon_point_terms(pairs: &PairValues) -> ShannonPointTerms {
    let n = pairs.n_atoms();
    let mut buf = vec![0.0; n_terms(n)];
    point_terms_into(n, pairs.triangle(), 1.0, &mut buf);
    ShannonPointTerms {
        total: buf[0],
        add: buf[1],
        nadd: buf[2],
        net: buf[3..3 + n].to_vec(),
        overlap: buf[3 + n..].to_vec(),
    }
}

/// Integrated entropy terms in nats.
#[derive(Debug, Clone, PartialEq)]
pub struct ShannonTerms {
    pub total: f64,
    pub add: f64,
    pub nadd: f64,
    pub net: Vec<f64>,
    /// Unordered pairs A < B in row order.
    pub overlap: Vec<f64>,
}

impl ShannonTerms {
    fn from_slice(n: usize, v: &[f64]) -> Self {
        Self {
            total: v[0],
            add: v[1],
            nadd: v[2],
            net: v[3..3 + n].to_vec(),
            overlap: v[3 + n..].to_vec(),
        }
    }

    /// `|add - nadd - total|`.
    pub fn closure_error(&self) -> f64 {
        (self.add - self.nadd - self.total).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShannonDecomposition {
    /// Declared electron count.
    pub n_electrons: f64,
    /// Grid integral of ρ; the shape function is `ρ / integrated_density`.
    pub integrated_density: f64,
    pub density: ShannonTerms,
    pub shape: ShannonTerms,
    pub diagnostics: Diagnostics,
}

impl ShannonDecomposition {
    /// `|S_ρ - (N S_σ - N ln N)|` with N the integrated density.
    pub fn shape_relation_error(&self) -> f64 {
        let n = self.integrated_density;
        (self.density.total - (n * self.shape.total - n * libm::log(n))).abs()
    }
}

/// Fails when the grid misses more than [`NORMALIZATION_TOLERANCE`] electrons.
pub fn check_normalization(integral: f64, expected: f64) -> Result<()> {
    if (integral - expected).abs() > NORMALIZATION_TOLERANCE || !integral.is_finite() {
        Err(Error::Normalization { integral, expected })
    } else {
        Ok(())
    }
}

/// Grid integral of the clamped density.
pub fn integrated_density(samples: &PairSamples, grid: &MolecularGrid) -> Result<f64> {
    let v = integrate_dyn(grid, 1, |i, _, out| out[0] = samples.total_at(i))?;
    Ok(v[0])
}

pub fn shannon_decompose(field: &PairDensityField, grid: &MolecularGrid) -> Result<ShannonDecomposition> {
    let samples = field.sample(grid);
    shannon_decompose_samples(&samples, grid, field.n_electrons())
}

/// Decomposition from pair densities already sampled on `grid`.
pub fn shannon_decompose_samples(
    samples: &PairSamples,
    grid: &MolecularGrid,
    n_electrons: f64,
) -> Result<ShannonDecomposition> {
    let n = samples.n_atoms();
    let nt = n_terms(n);
    let integral = integrated_density(samples, grid)?;
    check_normalization(integral, n_electrons)?;
    let inv_n = 1.0 / integral;
    let sums = integrate_dyn(grid, 2 * nt, |i, _, out| {
        let tri = samples.pairs_at(i);
        let (rho_out, sigma_out) = out.split_at_mut(nt);
        point_terms_into(n, tri, 1.0, rho_out);
        point_terms_into(n, tri, inv_n, sigma_out);
    })?;
    Ok(ShannonDecomposition {
        n_electrons,
        integrated_density: integral,
        density: ShannonTerms::from_slice(n, &sums[..nt]),
        shape: ShannonTerms::from_slice(n, &sums[nt..]),
        diagnostics: samples.diagnostics,
    })
}

/// Infinite-separation limits `(S_ρ,∞, S_σ,∞)` from isolated-fragment
/// density entropies and electron counts.
pub fn asymptotic_shannon_reference(atom_entropies: &[f64], electron_counts: &[f64]) -> Result<(f64, f64)> {
    if atom_entropies.is_empty() {
        return Err(Error::Empty("fragment list"));
    }
    if atom_entropies.len() != electron_counts.len() {
        return Err(Error::InvalidArgument {
            what: "electron count list length",
            value: electron_counts.len() as f64,
        });
    }
    if let Some(&bad) = electron_counts.iter().find(|&&n| !(n > 0.0) || !n.is_finite()) {
        return Err(Error::InvalidArgument {
            what: "fragment electron count",
            value: bad,
        });
    }
    let n: f64 = electron_counts.iter().sum();
    let mut s_rho = 0.0;
    let mut s_sigma = 0.0;
    for (&s, &na) in atom_entropies.iter().zip(electron_counts) {
        let w = na / n;
        let shape_a = (s + na * libm::log(na)) / na;
        s_rho += s;
        s_sigma += w * shape_a - w * libm::log(w);
    }
    Ok((s_rho, s_sigma))
}
