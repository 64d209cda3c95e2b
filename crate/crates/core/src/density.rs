//! Molecular density over a primitive basis and its atom-pair partition.
//!
//! `ρ(r) = Σ_ij c_ij φ_i(r) φ_j(r)` and, for atoms A and B,
//! `ρ^{AB}(r) = Σ_{i∈A} Σ_{j∈B} c_ij φ_i(r) φ_j(r)`. The pair term is the
//! one-sided contribution: for A ≠ B both (A,B) and (B,A) enter the total.

use alloc::vec;
use alloc::vec::Vec;

use crate::basis::Primitive;
use crate::molecule::Molecule;
use crate::quadrature::MolecularGrid;
use crate::{Error, Result};

/// Densities in `(-CLAMP_THRESHOLD, 0)` are treated as roundoff and set to zero.
pub const CLAMP_THRESHOLD: f64 = 1e-12;

/// Symmetric coefficient matrix over primitives.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    coefficients: Vec<f64>,
    n_electrons: f64,
}

impl DensityMatrix {
    /// Row-major `dim × dim` coefficients. Symmetry is checked to 1e-12
    /// (relative to the largest entry) and then enforced exactly.
    pub fn new(dim: usize, mut coefficients: Vec<f64>, n_electrons: f64) -> Result<Self> {
        if coefficients.len() != dim * dim {
            return Err(Error::InvalidMatrix("length is not dim²"));
        }
        if !(n_electrons > 0.0) || !n_electrons.is_finite() {
            return Err(Error::InvalidArgument {
                what: "electron count",
                value: n_electrons,
            });
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidMatrix("non-finite coefficient"));
        }
        let scale = coefficients.iter().fold(1.0f64, |m, c| m.max(c.abs()));
        for i in 0..dim {
            for j in 0..i {
                let (a, b) = (coefficients[i * dim + j], coefficients[j * dim + i]);
                if (a - b).abs() > 1e-12 * scale {
                    return Err(Error::InvalidMatrix("not symmetric"));
                }
                let m = 0.5 * (a + b);
                coefficients[i * dim + j] = m;
                coefficients[j * dim + i] = m;
            }
        }
        Ok(Self {
            dim,
            coefficients,
            n_electrons,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_electrons(&self) -> f64 {
        self.n_electrons
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.coefficients[i * self.dim + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coefficients
    }
}

/// Density matrix bound to its molecule and primitive basis.
#[derive(Debug, Clone)]
pub struct PairDensityField {
    molecule: Molecule,
    primitives: Vec<Primitive>,
    density: DensityMatrix,
    by_atom: Vec<Vec<usize>>,
}

impl PairDensityField {
    pub fn new(molecule: Molecule, primitives: Vec<Primitive>, density: DensityMatrix) -> Result<Self> {
        if primitives.len() != density.dim() {
            return Err(Error::InvalidMatrix("dimension differs from primitive count"));
        }
        let mut by_atom = vec![Vec::new(); molecule.len()];
        for (i, p) in primitives.iter().enumerate() {
            by_atom
                .get_mut(p.center)
                .ok_or(Error::AtomIndex {
                    index: p.center,
                    n_atoms: molecule.len(),
                })?
                .push(i);
        }
        Ok(Self {
            molecule,
            primitives,
            density,
            by_atom,
        })
    }

    pub fn molecule(&self) -> &Molecule {
        &self.molecule
    }

    pub fn primitives(&self) -> &[Primitive] {
        &self.primitives
    }

    pub fn density_matrix(&self) -> &DensityMatrix {
        &self.density
    }

    pub fn n_atoms(&self) -> usize {
        self.molecule.len()
    }

    pub fn n_electrons(&self) -> f64 {
        self.density.n_electrons()
    }

    pub fn primitive_values(&self, r: &[f64; 3], out: &mut [f64]) {
        let atoms = self.molecule.atoms();
        for (v, p) in out.iter_mut().zip(&self.primitives) {
            *v = p.eval(&atoms[p.center].position, r);
        }
    }

    /// `Σ_ij c_ij φ_i φ_j` without clamping.
    pub fn eval_density(&self, r: &[f64; 3]) -> f64 {
        let mut phi = vec![0.0; self.primitives.len()];
        self.primitive_values(r, &mut phi);
        let mut rho = 0.0;
        for (i, &fi) in phi.iter().enumerate() {
            if fi == 0.0 {
                continue;
            }
            let mut t = 0.0;
            for (j, &fj) in phi.iter().enumerate() {
                t += self.density.get(i, j) * fj;
            }
            rho += fi * t;
        }
        rho
    }

    fn block(&self, a: usize, b: usize, phi: &[f64]) -> f64 {
        // canonical ordering keeps ρ^{AB} and ρ^{BA} bitwise equal
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let mut s = 0.0;
        for &i in &self.by_atom[a] {
            let fi = phi[i];
            if fi == 0.0 {
                continue;
            }
            let mut t = 0.0;
            for &j in &self.by_atom[b] {
                t += self.density.get(i, j) * phi[j];
            }
            s += fi * t;
        }
        s
    }

    /// One-sided pair density `ρ^{AB}(r)`.
    pub fn eval_pair_density(&self, a: usize, b: usize, r: &[f64; 3]) -> Result<f64> {
        let n = self.n_atoms();
        for idx in [a, b] {
            if idx >= n {
                return Err(Error::AtomIndex { index: idx, n_atoms: n });
            }
        }
        let mut phi = vec![0.0; self.primitives.len()];
        self.primitive_values(r, &mut phi);
        Ok(self.block(a, b, &phi))
    }

    /// All pair densities at `r`, written into `out`.
    pub fn pair_densities(&self, r: &[f64; 3], phi: &mut [f64], out: &mut PairValues) {
        self.primitive_values(r, phi);
        let n = self.n_atoms();
        let mut k = 0;
        for a in 0..n {
            for b in a..n {
                out.values[k] = self.block(a, b, phi);
                k += 1;
            }
        }
    }

    /// Samples every pair density on a grid, clamping the total density.
    pub fn sample(&self, grid: &MolecularGrid) -> PairSamples {
        let n = self.n_atoms();
        let n_pairs = n * (n + 1) / 2;
        let mut values = Vec::with_capacity(grid.len() * n_pairs);
        let mut totals = Vec::with_capacity(grid.len());
        let mut diagnostics = Diagnostics::default();
        let mut phi = vec![0.0; self.primitives.len()];
        let mut pv = PairValues::new(n);
        for p in grid.points() {
            self.pair_densities(p, &mut phi, &mut pv);
            values.extend_from_slice(&pv.values);
            let (rho, status) = clamp_density(pv.total());
            diagnostics.record(status);
            totals.push(rho);
        }
        PairSamples {
            n_atoms: n,
            values,
            totals,
            diagnostics,
        }
    }
}

/// Upper-triangle (A ≤ B) one-sided pair densities at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct PairValues {
    n_atoms: usize,
    values: Vec<f64>,
}

#[inline]
pub(crate) fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * n - a * (a + 1) / 2 + b
}

impl PairValues {
    pub fn new(n_atoms: usize) -> Self {
        Self {
            n_atoms,
            values: vec![0.0; n_atoms * (n_atoms + 1) / 2],
        }
    }

    /// Builds from a full symmetric `n × n` table of one-sided pair densities.
    pub fn from_full(n_atoms: usize, full: &[f64]) -> Self {
        let mut v = Self::new(n_atoms);
        for a in 0..n_atoms {
            for b in a..n_atoms {
                v.values[pair_index(n_atoms, a, b)] = full[a * n_atoms + b];
            }
        }
        v
    }

    pub fn from_triangle(n_atoms: usize, values: &[f64]) -> Self {
        Self {
            n_atoms,
            values: values.to_vec(),
        }
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.values[pair_index(self.n_atoms, a, b)]
    }

    pub fn triangle(&self) -> &[f64] {
        &self.values
    }

    /// `Σ_{A,B} ρ^{AB}` over ordered pairs.
    pub fn total(&self) -> f64 {
        let n = self.n_atoms;
        let mut s = 0.0;
        for a in 0..n {
            for b in a..n {
                let v = self.values[pair_index(n, a, b)];
                s += if a == b { v } else { 2.0 * v };
            }
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClampStatus {
    Unchanged,
    /// Tiny negative roundoff set to zero.
    Clamped,
    /// Genuinely negative value replaced by its magnitude.
    Negative,
}

/// Applies the clamp convention to a raw total density.
pub fn clamp_density(rho: f64) -> (f64, ClampStatus) {
    if rho >= 0.0 {
        (rho, ClampStatus::Unchanged)
    } else if rho > -CLAMP_THRESHOLD {
        (0.0, ClampStatus::Clamped)
    } else {
        (-rho, ClampStatus::Negative)
    }
}

/// Counts of grid points where the density needed fixing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub clamped: usize,
    pub negative: usize,
}

impl Diagnostics {
    pub fn record(&mut self, status: ClampStatus) {
        match status {
            ClampStatus::Unchanged => {}
            ClampStatus::Clamped => self.clamped += 1,
            ClampStatus::Negative => self.negative += 1,
        }
    }
}

/// Pair densities sampled on every point of a grid.
#[derive(Debug, Clone)]
pub struct PairSamples {
    n_atoms: usize,
    values: Vec<f64>,
    totals: Vec<f64>,
    pub diagnostics: Diagnostics,
}

impl PairSamples {
    /// Builds samples from upper-triangle pair values, one block per point.
    /// Totals are summed from the pairs and clamped.
    pub fn from_pair_values(n_atoms: usize, values: Vec<f64>) -> Result<Self> {
        let m = n_atoms * (n_atoms + 1) / 2;
        if m == 0 || !values.len().is_multiple_of(m) {
            return Err(Error::InvalidArgument {
                what: "pair sample length",
                value: values.len() as f64,
            });
        }
        let mut diagnostics = Diagnostics::default();
        let totals = values
            .chunks(m)
            .map(|tri| {
                let (rho, status) = clamp_density(PairValues::from_triangle(n_atoms, tri).total());
                diagnostics.record(status);
                rho
            })
            .collect();
        Ok(Self {
            n_atoms,
            values,
            totals,
            diagnostics,
        })
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn n_pairs(&self) -> usize {
        self.n_atoms * (self.n_atoms + 1) / 2
    }

    /// Upper-triangle pair densities at grid point `i`.
    pub fn pairs_at(&self, i: usize) -> &[f64] {
        let m = self.n_pairs();
        &self.values[i * m..(i + 1) * m]
    }

    /// Clamped total density at grid point `i`.
    pub fn total_at(&self, i: usize) -> f64 {
        self.totals[i]
    }

    pub fn len(&self) -> usize {
        self.totals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.totals.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::molecule::Atom;

    fn two_center_field() -> PairDensityField {
        let mol = Molecule::diatomic("H", 1.4).unwrap();
        let prims = vec![
            Primitive::new(0, [0, 0, 0], 1.2).unwrap(),
            Primitive::new(0, [0, 0, 1], 0.5).unwrap(),
            Primitive::new(1, [0, 0, 0], 0.9).unwrap(),
            Primitive::new(1, [1, 1, 0], 0.4).unwrap(),
        ];
        let c = vec![
            0.6, 0.1, 0.3, -0.05, //
            0.1, 0.2, 0.02, 0.01, //
            0.3, 0.02, 0.7, 0.08, //
            -0.05, 0.01, 0.08, 0.15,
        ];
        PairDensityField::new(mol, prims, DensityMatrix::new(4, c, 2.0).unwrap()).unwrap()
    }

    #[test]
    fn zero_matrix_gives_zero_density() {
        let mol = Molecule::new(vec![Atom::new("H", [0.0; 3]).unwrap()]).unwrap();
        let f = PairDensityField::new(
            mol,
            vec![Primitive::new(0, [0, 0, 0], 1.0).unwrap()],
            DensityMatrix::new(1, vec![0.0], 1.0).unwrap(),
        )
        .unwrap();
        assert_eq!(f.eval_density(&[0.3, 0.0, 0.0]), 0.0);
    }

    #[test]
    fn single_atom_pair_equals_total() {
        let mol = Molecule::new(vec![Atom::new("H", [0.0; 3]).unwrap()]).unwrap();
        let p = Primitive::new(0, [0, 0, 0], 1.0).unwrap();
        let f = PairDensityField::new(mol, vec![p], DensityMatrix::new(1, vec![1.0], 1.0).unwrap())
            .unwrap();
        let r = [0.2, 0.1, -0.4];
        let phi = p.eval(&[0.0; 3], &r);
        assert_eq!(f.eval_density(&r), phi * phi);
        assert_eq!(f.eval_pair_density(0, 0, &r).unwrap(), f.eval_density(&r));
    }

    #[test]
    fn pair_sum_closure_and_hermiticity() {
        let f = two_center_field();
        let mut phi = vec![0.0; 4];
        let mut pv = PairValues::new(2);
        for r in [[0.1, 0.2, 0.3], [0.0, 0.0, 0.0], [-1.0, 0.5, 2.0], [0.0, 0.0, 0.7]] {
            f.pair_densities(&r, &mut phi, &mut pv);
            let rho = f.eval_density(&r);
            assert!((pv.total() - rho).abs() <= 1e-12 * rho.abs().max(1e-300));
            assert_eq!(
                f.eval_pair_density(0, 1, &r).unwrap().to_bits(),
                f.eval_pair_density(1, 0, &r).unwrap().to_bits()
            );
        }
    }

    #[test]
    fn rejects_asymmetric_or_mismatched_matrix() {
        assert!(DensityMatrix::new(2, vec![1.0, 0.5, 0.4, 1.0], 2.0).is_err());
        assert!(DensityMatrix::new(2, vec![1.0, 0.5, 0.5], 2.0).is_err());
        assert!(DensityMatrix::new(1, vec![1.0], 0.0).is_err());
        let mol = Molecule::diatomic("H", 1.0).unwrap();
        let prims = vec![Primitive::new(2, [0, 0, 0], 1.0).unwrap()];
        assert!(matches!(
            PairDensityField::new(mol, prims, DensityMatrix::new(1, vec![1.0], 1.0).unwrap()),
            Err(Error::AtomIndex { .. })
        ));
    }

    #[test]
    fn bad_atom_index() {
        let f = two_center_field();
        assert!(f.eval_pair_density(0, 2, &[0.0; 3]).is_err());
    }

    #[test]
    fn clamp_rules() {
        assert_eq!(clamp_density(0.5), (0.5, ClampStatus::Unchanged));
        assert_eq!(clamp_density(-1e-14), (0.0, ClampStatus::Clamped));
        assert_eq!(clamp_density(-1e-6), (1e-6, ClampStatus::Negative));
    }

    #[test]
    fn pair_index_layout() {
        let n = 3;
        let mut seen = vec![];
        for a in 0..n {
            for b in a..n {
                seen.push(pair_index(n, a, b));
            }
        }
        assert_eq!(seen, (0..6).collect::<Vec<_>>());
        assert_eq!(pair_index(3, 2, 1), pair_index(3, 1, 2));
    }
}
