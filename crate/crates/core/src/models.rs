//! Minimal-basis two-electron homonuclear diatomic models: closed-shell
//! Hartree–Fock, Heitler–London and full CI in the {σg², σu²} space.
//!
//! Each model yields a density `ρ = C_AA (φA² + φB²) + 2 C_AB φA φB`,
//! expanded over the primitives of the two s functions.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;

use crate::basis::{ContractedGaussian, Primitive};
use crate::density::{DensityMatrix, PairDensityField};
use crate::integrals::{contracted_overlap, IntegralSet};
use crate::molecule::{Atom, Molecule};
use crate::{Error, Result};

// STO-6G hydrogen, Basis Set Exchange.
const STO6G_H_EXPONENTS: [f64; 6] = [
    35.52322122,
    6.513143725,
    1.822142904,
    0.6259552659,
    0.2430767471,
    0.1001124280,
];
const STO6G_H_COEFFICIENTS: [f64; 6] = [
    0.009163596281,
    0.04936149294,
    0.1685383049,
    0.3705627997,
    0.4164915298,
    0.1303340841,
];

/// STO-6G 1s function of hydrogen.
pub fn sto6g_hydrogen() -> ContractedGaussian {
    ContractedGaussian::s(STO6G_H_EXPONENTS.to_vec(), STO6G_H_COEFFICIENTS.to_vec())
        .expect("embedded basis is valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Hf,
    Hl,
    Fci,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Hf, Method::Hl, Method::Fci];

    pub fn name(self) -> &'static str {
        match self {
            Method::Hf => "hf",
            Method::Hl => "hl",
            Method::Fci => "fci",
        }
    }
}

impl core::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hf" => Ok(Method::Hf),
            "hl" => Ok(Method::Hl),
            "fci" | "cas" => Ok(Method::Fci),
            _ => Err(Error::UnknownSymbol(s.into())),
        }
    }
}

/// A model H₂-like molecule at one internuclear distance.
#[derive(Debug, Clone)]
pub struct H2Model {
    pub method: Method,
    pub distance: f64,
    pub basis: ContractedGaussian,
    pub symbol: &'static str,
    pub nuclear_charge: f64,
    pub overlap: f64,
    /// Weights of σg² and σu²; `(1, 0)` outside full CI.
    pub ci: (f64, f64),
    pub integrals: IntegralSet,
}

fn check_distance(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument {
            what: "internuclear distance",
            value: r,
        })
    }
}

/// Lowest eigenvector of `[[a, b], [b, d]]` with a nonnegative first component.
fn ground_vector(a: f64, b: f64, d: f64) -> (f64, f64) {
    let half = 0.5 * (a - d);
    let root = libm::hypot(half, b);
    if root == 0.0 {
        return (FRAC_1_SQRT_2, FRAC_1_SQRT_2);
    }
    let e = 0.5 * (a + d) - root;
    // two equivalent forms of the null vector of (H - e); use the larger one
    let (u1, u2) = (b, e - a);
    let (w1, w2) = (e - d, b);
    let (mut x, mut y) = if u1 * u1 + u2 * u2 >= w1 * w1 + w2 * w2 {
        (u1, u2)
    } else {
        (w1, w2)
    };
    let norm = libm::hypot(x, y);
    x /= norm;
    y /= norm;
    if x < 0.0 || (x == 0.0 && y < 0.0) {
        x = -x;
        y = -y;
    }
    (x, y)
}

impl H2Model {
    pub fn new(method: Method, distance: f64, basis: &ContractedGaussian) -> Result<Self> {
        Self::homonuclear("H", method, distance, basis)
    }

    /// Two-electron homonuclear diatomic with nuclei of element `symbol`.
    pub fn homonuclear(
        symbol: &'static str,
        method: Method,
        distance: f64,
        basis: &ContractedGaussian,
    ) -> Result<Self> {
        check_distance(distance)?;
        if !basis.is_s() {
            return Err(Error::NotSType);
        }
        let atom = Atom::new(symbol, [0.0; 3])?;
        let integrals = IntegralSet::diatomic(basis, atom.charge, distance)?;
        let overlap = contracted_overlap(basis, basis, distance)?;
        let mut model = Self {
            method,
            distance,
            basis: basis.clone(),
            symbol,
            nuclear_charge: atom.charge,
            overlap,
            ci: (1.0, 0.0),
            integrals,
        };
        if method == Method::Fci {
            let [[a, b], [_, d]] = model.ci_matrix()?;
            model.ci = ground_vector(a, b, d);
        }
        Ok(model)
    }

    /// Full CI model with the CI vector replaced by `ci` (normalized internally).
    pub fn with_ci(distance: f64, basis: &ContractedGaussian, ci: (f64, f64)) -> Result<Self> {
        let mut m = Self::new(Method::Hf, distance, basis)?;
        let norm = libm::hypot(ci.0, ci.1);
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::InvalidArgument {
                what: "CI vector norm",
                value: norm,
            });
        }
        m.method = Method::Fci;
        m.ci = (ci.0 / norm, ci.1 / norm);
        Ok(m)
    }

    // σg and σu coefficients over (φA, φB).
    fn mo_coefficients(&self) -> [[f64; 2]; 2] {
        let s = self.overlap;
        let g = 1.0 / libm::sqrt(2.0 * (1.0 + s));
        let u = 1.0 / libm::sqrt(2.0 * (1.0 - s));
        [[g, g], [u, -u]]
    }

    /// CI matrix (electronic part) in the {σg², σu²} basis.
    pub fn ci_matrix(&self) -> Result<[[f64; 2]; 2]> {
        let c = self.mo_coefficients();
        let ints = &self.integrals;
        let h_mo = |p: usize| -> f64 {
            let mut v = 0.0;
            for i in 0..2 {
                for j in 0..2 {
                    v += c[p][i] * c[p][j] * ints.h(i, j);
                }
            }
            v
        };
        let g_mo = |p: usize, q: usize, r: usize, s: usize| -> f64 {
            let mut v = 0.0;
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        for l in 0..2 {
                            v += c[p][i] * c[q][j] * c[r][k] * c[s][l] * ints.g(i, j, k, l);
                        }
                    }
                }
            }
            v
        };
        let h11 = 2.0 * h_mo(0) + g_mo(0, 0, 0, 0);
        let h22 = 2.0 * h_mo(1) + g_mo(1, 1, 1, 1);
        let h12 = g_mo(0, 1, 0, 1);
        let m = [[h11, h12], [h12, h22]];
        if m.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("CI matrix"));
        }
        Ok(m)
    }

    fn nuclear_repulsion(&self) -> f64 {
        let z = self.nuclear_charge;
        z * z / self.distance
    }

    /// Total energy in hartree, including nuclear repulsion.
    pub fn energy(&self) -> Result<f64> {
        let ints = &self.integrals;
        let electronic = match self.method {
            Method::Hf | Method::Fci => {
                let m = self.ci_matrix()?;
                let (c1, c2) = self.ci;
                c1 * c1 * m[0][0] + 2.0 * c1 * c2 * m[0][1] + c2 * c2 * m[1][1]
            }
            Method::Hl => {
                let s = self.overlap;
                (ints.h(0, 0) + ints.h(1, 1) + ints.g(0, 0, 1, 1) + 2.0 * s * ints.h(0, 1) + ints.g(0, 1, 0, 1))
                    / (1.0 + s * s)
            }
        };
        Ok(electronic + self.nuclear_repulsion())
    }

    /// `(C_AA, C_AB)` with `ρ^{AA} = C_AA φA²` and one-sided `ρ^{AB} = C_AB φA φB`.
    pub fn pair_coefficients(&self) -> (f64, f64) {
        let s = self.overlap;
        match self.method {
            Method::Hf => (1.0 / (1.0 + s), 1.0 / (1.0 + s)),
            Method::Hl => (1.0 / (1.0 + s * s), s / (1.0 + s * s)),
            Method::Fci => {
                let (c1, c2) = self.ci;
                let (g, u) = (c1 * c1 / (1.0 + s), c2 * c2 / (1.0 - s));
                (g + u, g - u)
            }
        }
    }

    /// Natural orbitals `(occupation, [coefficient on φA, on φB])`, σg first.
    pub fn natural_orbitals(&self) -> [(f64, [f64; 2]); 2] {
        let s = self.overlap;
        let (caa, cab) = self.pair_coefficients();
        let c = self.mo_coefficients();
        [
            ((1.0 + s) * (caa + cab), c[0]),
            ((1.0 - s) * (caa - cab), c[1]),
        ]
    }

    pub fn molecule(&self) -> Result<Molecule> {
        Molecule::diatomic(self.symbol, self.distance)
    }

    pub fn primitives(&self) -> Vec<Primitive> {
        (0..2)
            .flat_map(|a| self.basis.primitives(a).into_iter().map(|(p, _)| p))
            .collect()
    }

    pub fn density_matrix(&self) -> Result<DensityMatrix> {
        let (caa, cab) = self.pair_coefficients();
        let d = &self.basis.coefficients;
        let k = d.len();
        let n = 2 * k;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let same = (i < k) == (j < k);
                let c = if same { caa } else { cab };
                m[i * n + j] = c * d[i % k] * d[j % k];
            }
        }
        DensityMatrix::new(n, m, 2.0)
    }

    pub fn field(&self) -> Result<PairDensityField> {
        PairDensityField::new(self.molecule()?, self.primitives(), self.density_matrix()?)
    }
}

pub fn hf_pair_coefficients(distance: f64, basis: &ContractedGaussian) -> Result<DensityMatrix> {
    H2Model::new(Method::Hf, distance, basis)?.density_matrix()
}

pub fn hl_pair_coefficients(distance: f64, basis: &ContractedGaussian) -> Result<DensityMatrix> {
    H2Model::new(Method::Hl, distance, basis)?.density_matrix()
}

pub fn fci_coefficients(distance: f64, basis: &ContractedGaussian) -> Result<H2Model> {
    H2Model::new(Method::Fci, distance, basis)
}

pub fn fci_pair_coefficients(distance: f64, basis: &ContractedGaussian) -> Result<DensityMatrix> {
    fci_coefficients(distance, basis)?.density_matrix()
}

/// Density field of a model at one distance.
pub fn model_density(method: Method, distance: f64, basis: &ContractedGaussian) -> Result<PairDensityField> {
    H2Model::new(method, distance, basis)?.field()
}

pub fn hf_density(distance: f64, basis: &ContractedGaussian) -> Result<PairDensityField> {
    model_density(Method::Hf, distance, basis)
}

pub fn hl_density(distance: f64, basis: &ContractedGaussian) -> Result<PairDensityField> {
    model_density(Method::Hl, distance, basis)
}

pub fn fci_density(distance: f64, basis: &ContractedGaussian) -> Result<PairDensityField> {
    model_density(Method::Fci, distance, basis)
}

/// One electron in `basis` on an isolated atom: `c = d dᵀ`, N = 1.
pub fn atom_reference(basis: &ContractedGaussian) -> Result<DensityMatrix> {
    let d = &basis.coefficients;
    let n = d.len();
    let m = (0..n * n).map(|k| d[k / n] * d[k % n]).collect();
    DensityMatrix::new(n, m, 1.0)
}

/// Density field of the isolated hydrogen-like atom at the origin.
pub fn atom_density(symbol: &str, basis: &ContractedGaussian) -> Result<PairDensityField> {
    let mol = Molecule::new(vec![Atom::new(symbol, [0.0; 3])?])?;
    let prims = basis.primitives(0).into_iter().map(|(p, _)| p).collect();
    PairDensityField::new(mol, prims, atom_reference(basis)?)
}

/// One-electron energy `⟨φ|h|φ⟩` of a hydrogen-like atom.
pub fn atom_energy(basis: &ContractedGaussian, charge: f64) -> Result<f64> {
    let ints = IntegralSet::compute(&[(basis, [0.0; 3])], &[([0.0; 3], charge)])?;
    Ok(ints.h(0, 0))
}
