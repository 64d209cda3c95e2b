//! Becke multicenter integration on atom-centered radial × Lebedev grids.

mod becke;
mod lebedev;
mod lebedev_tables;
mod radial;

use alloc::vec;
use alloc::vec::Vec;

pub use becke::{becke_weights, BeckeParams, BeckePartition};
pub use lebedev::{lebedev_grid, LebedevRule, SUPPORTED_LEBEDEV};
pub use radial::{radial_grid, RadialGrid};

use crate::math::pairwise_sum;
use crate::molecule::{bragg_radius, Molecule};
use crate::{Error, Result};

/// Points whose combined weight falls below this are dropped.
pub const WEIGHT_CUTOFF: f64 = 1e-16;

/// Points per summation chunk; fixes the reduction tree.
pub const CHUNK: usize = 256;

/// Per-atom product grid parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomicGridSpec {
    pub n_radial: usize,
    /// Number of Lebedev nodes.
    pub lebedev_order: usize,
    /// Scale of the radial map, bohr.
    pub bragg_radius: f64,
}

impl AtomicGridSpec {
    fn validate(&self) -> Result<()> {
        if self.n_radial == 0 {
            return Err(Error::InvalidArgument {
                what: "radial point count",
                value: 0.0,
            });
        }
        if !SUPPORTED_LEBEDEV.contains(&self.lebedev_order) {
            return Err(Error::UnsupportedLebedev {
                requested: self.lebedev_order,
                supported: SUPPORTED_LEBEDEV,
            });
        }
        if !(self.bragg_radius > 0.0) || !self.bragg_radius.is_finite() {
            return Err(Error::InvalidArgument {
                what: "Bragg radius",
                value: self.bragg_radius,
            });
        }
        Ok(())
    }
}

/// Uniform grid settings applied to every atom of a molecule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridParams {
    pub n_radial: usize,
    pub lebedev_order: usize,
    pub stiffness: u32,
    pub size_adjust: bool,
}

impl Default for GridParams {
    fn default() -> Self {
        Self {
            n_radial: 400,
            lebedev_order: 302,
            stiffness: 3,
            size_adjust: true,
        }
    }
}

impl GridParams {
    /// 1000 radial × 434 angular points per atom.
    pub fn fine() -> Self {
        Self {
            n_radial: 1000,
            lebedev_order: 434,
            ..Self::default()
        }
    }

    pub fn becke(&self) -> BeckeParams {
        BeckeParams {
            stiffness: self.stiffness,
            size_adjust: self.size_adjust,
        }
    }

    pub fn atomic_specs(&self, molecule: &Molecule) -> Result<Vec<AtomicGridSpec>> {
        molecule
            .atoms()
            .iter()
            .map(|a| {
                Ok(AtomicGridSpec {
                    n_radial: self.n_radial,
                    lebedev_order: self.lebedev_order,
                    bragg_radius: bragg_radius(a.atomic_number)?,
                })
            })
            .collect()
    }

    pub fn build(&self, molecule: &Molecule) -> Result<MolecularGrid> {
        build_molecular_grid(molecule, &self.atomic_specs(molecule)?, self.becke())
    }
}

/// Becke-weighted union of atomic product grids.
#[derive(Debug, Clone, Default)]
pub struct MolecularGrid {
    points: Vec<[f64; 3]>,
    weights: Vec<f64>,
    owners: Vec<usize>,
}

impl MolecularGrid {
    pub fn points(&self) -> &[[f64; 3]] {
        &self.points
    }

    /// Full weights in bohr³ (Becke × radial × angular × 4π).
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Index of the atom whose product grid produced each point.
    pub fn owners(&self) -> &[usize] {
        &self.owners
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Grid from explicit points, weights (bohr³) and owning atoms.
    pub fn from_parts(points: Vec<[f64; 3]>, weights: Vec<f64>, owners: Vec<usize>) -> Result<Self> {
        if points.len() != weights.len() || points.len() != owners.len() {
            return Err(Error::InvalidArgument {
                what: "grid part lengths",
                value: weights.len() as f64,
            });
        }
        if weights.iter().any(|w| !w.is_finite()) || points.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("grid point or weight"));
        }
        Ok(Self {
            points,
            weights,
            owners,
        })
    }

    /// Single-center grid without Becke partitioning.
    pub fn atomic(center: [f64; 3], spec: &AtomicGridSpec) -> Result<Self> {
        let mut grid = Self::default();
        let part = BeckePartition::new(&[(center, spec.bragg_radius)], BeckeParams::default())?;
        grid.push_atom(0, center, spec, &part)?;
        Ok(grid)
    }

    fn push_atom(
        &mut self,
        owner: usize,
        center: [f64; 3],
        spec: &AtomicGridSpec,
        part: &BeckePartition,
    ) -> Result<()> {
        spec.validate()?;
        let radial = radial_grid(spec.n_radial, spec.bragg_radius)?;
        let angular = lebedev_grid(spec.lebedev_order)?;
        let mut cell = vec![0.0; part.len()];
        let mut scratch = vec![0.0; part.len()];
        let four_pi = 4.0 * core::f64::consts::PI;
        for (r, wr) in radial.radii.iter().zip(&radial.weights) {
            for (u, wa) in angular.nodes.iter().zip(&angular.weights) {
                let p = [
                    center[0] + r * u[0],
                    center[1] + r * u[1],
                    center[2] + r * u[2],
                ];
                part.weights_into(&p, &mut cell, &mut scratch);
                let w = four_pi * wa * wr * cell[owner];
                if !w.is_finite() {
                    return Err(Error::NonFinite("grid weight"));
                }
                if w < WEIGHT_CUTOFF {
                    continue;
                }
                self.points.push(p);
                self.weights.push(w);
                self.owners.push(owner);
            }
        }
        Ok(())
    }
}

/// Union over atoms of radial × angular grids, each point weighted by its
/// Becke cell function.
pub fn build_molecular_grid(
    molecule: &Molecule,
    specs: &[AtomicGridSpec],
    becke: BeckeParams,
) -> Result<MolecularGrid> {
    if specs.len() != molecule.len() {
        return Err(Error::InvalidArgument {
            what: "number of atomic grid specs",
            value: specs.len() as f64,
        });
    }
    let centers: Vec<([f64; 3], f64)> = molecule
        .positions()
        .zip(specs)
        .map(|(p, s)| (p, s.bragg_radius))
        .collect();
    let part = BeckePartition::new(&centers, becke)?;
    let mut grid = MolecularGrid::default();
    for (owner, (center, spec)) in molecule.positions().zip(specs).enumerate() {
        grid.push_atom(owner, center, spec, &part)?;
    }
    Ok(grid)
}

/// `Σ_i w_i f(p_i)` with a fixed chunked pairwise reduction.
pub fn integrate(field: impl Fn(&[f64; 3]) -> f64, grid: &MolecularGrid) -> Result<f64> {
    let [v] = integrate_terms::<1>(grid, |_, p, out| out[0] = field(p))?;
    Ok(v)
}

/// Integrates `N` fields at once. `eval(index, point, out)` writes the
/// integrand values at grid point `index`.
pub fn integrate_terms<const N: usize>(
    grid: &MolecularGrid,
    mut eval: impl FnMut(usize, &[f64; 3], &mut [f64; N]),
) -> Result<[f64; N]> {
    let mut sums = [0.0; N];
    let out = integrate_dyn(grid, N, |i, p, out| {
        let mut buf = [0.0; N];
        eval(i, p, &mut buf);
        out.copy_from_slice(&buf);
    })?;
    sums.copy_from_slice(&out);
    Ok(sums)
}

/// Runtime-sized variant of [`integrate_terms`].
pub fn integrate_dyn(
    grid: &MolecularGrid,
    n_terms: usize,
    mut eval: impl FnMut(usize, &[f64; 3], &mut [f64]),
) -> Result<Vec<f64>> {
    let n_chunks = grid.len().div_ceil(CHUNK);
    let mut partials = vec![Vec::with_capacity(n_chunks); n_terms];
    let mut values = vec![0.0; n_terms];
    let mut chunk_sum = vec![0.0; n_terms];
    for (c, chunk) in grid.points.chunks(CHUNK).enumerate() {
        chunk_sum.iter_mut().for_each(|s| *s = 0.0);
        for (k, p) in chunk.iter().enumerate() {
            let i = c * CHUNK + k;
            eval(i, p, &mut values);
            let w = grid.weights[i];
            for (s, v) in chunk_sum.iter_mut().zip(&values) {
                if !v.is_finite() {
                    return Err(Error::NonFiniteField { index: i, point: *p });
                }
                *s += w * v;
            }
        }
        for (part, s) in partials.iter_mut().zip(&chunk_sum) {
            part.push(*s);
        }
    }
    Ok(partials.iter().map(|p| pairwise_sum(p)).collect())
}
