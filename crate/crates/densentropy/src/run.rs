//! Sweeps, single-point analysis and atomic references.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use densentropy_core::basis::ContractedGaussian;
use densentropy_core::density::PairDensityField;
use densentropy_core::models::{self, H2Model, Method};
use densentropy_core::molecule::Molecule;
use densentropy_core::quadrature::{GridParams, MolecularGrid};
use densentropy_core::renyi::{self, asymptotic_renyi_reference};
use densentropy_core::shannon::{self, asymptotic_shannon_reference};

use crate::error::{AppError, Result};
use crate::report::{Checks, Reference, RenyiBlock, RenyiReference, Report, Row, ShannonBlock, Units};
use crate::wfn::{parse_wfn_with, PrimitiveConvention, WfnDocument};

/// Bond lengths used when a sweep gives none.
pub const DEFAULT_DISTANCES: [f64; 8] = [1.4, 2.0, 3.0, 4.0, 6.0, 10.0, 20.0, 50.0];

/// Tolerance of the entropy limits checked by `--strict-limits`.
pub const LIMIT_ENTROPY_TOLERANCE: f64 = 1e-4;
/// Tolerance on vanishing overlap and nonadditive terms at the limit.
pub const LIMIT_TERM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub method: Method,
    pub distances: Vec<f64>,
    pub alphas: Vec<f64>,
    pub grid: GridParams,
    pub units: Units,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            method: Method::Fci,
            distances: DEFAULT_DISTANCES.to_vec(),
            alphas: vec![2.0],
            grid: GridParams::default(),
            units: Units::Nats,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.distances.is_empty() {
            return Err(AppError::Config("no distances given".into()));
        }
        if let Some(d) = self.distances.iter().find(|d| !(**d > 0.0) || !d.is_finite()) {
            return Err(AppError::Config(format!("distance {d} is not positive")));
        }
        if self.distances.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AppError::Config("distances must be strictly increasing".into()));
        }
        validate_alphas(&self.alphas)
    }
}

pub fn validate_alphas(alphas: &[f64]) -> Result<()> {
    if let Some(a) = alphas.iter().find(|a| !(**a > 0.0) || !a.is_finite()) {
        return Err(AppError::Config(format!("Rényi order {a} is not positive")));
    }
    Ok(())
}

/// Full Shannon and Rényi analysis of one density on one grid, in nats.
pub fn analyze_field(
    label: &str,
    distance: Option<f64>,
    energy: Option<f64>,
    field: &PairDensityField,
    grid: &MolecularGrid,
    alphas: &[f64],
) -> Result<Row> {
    let samples = field.sample(grid);
    let n = field.n_electrons();
    let sh = shannon::shannon_decompose_samples(&samples, grid, n)?;
    let ren = alphas
        .iter()
        .map(|&a| renyi::renyi_decompose_samples(&samples, grid, n, a))
        .collect::<densentropy_core::Result<Vec<_>>>()?;
    Ok(Row {
        label: label.to_string(),
        distance,
        n_electrons: n,
        integrated_density: sh.integrated_density,
        energy,
        density: ShannonBlock::from(&sh.density),
        shape: ShannonBlock::from(&sh.shape),
        renyi: ren.iter().map(RenyiBlock::from).collect(),
        clamped: sh.diagnostics.clamped,
        negative: sh.diagnostics.negative,
        checks: Checks::evaluate(&sh, &ren),
    })
}

fn model_row(method: Method, distance: f64, basis: &ContractedGaussian, alphas: &[f64], grid: &GridParams) -> Result<Row> {
    let model = H2Model::new(method, distance, basis)?;
    let field = model.field()?;
    let g = grid.build(field.molecule())?;
    analyze_field(method.name(), Some(distance), Some(model.energy()?), &field, &g, alphas)
}

/// Isolated-atom entropies in `basis` and the dissociation limits of a
/// homonuclear diatomic built from two such atoms.
pub fn atom_reference(symbol: &str, basis: &ContractedGaussian, alphas: &[f64], grid: &GridParams) -> Result<Reference> {
    let field = models::atom_density(symbol, basis)?;
    let row = analyze_field(symbol, None, None, &field, &grid.build(field.molecule())?, alphas)?;
    reference_from_atom(&row)
}

/// Limits for two copies of the atom analysed in `atom`.
pub fn reference_from_atom(atom: &Row) -> Result<Reference> {
    let n = atom.n_electrons;
    let (limit_rho, limit_sigma) = asymptotic_shannon_reference(&[atom.density.total; 2], &[n; 2])?;
    let renyi = atom
        .renyi
        .iter()
        .map(|r| {
            let (lr, ls) = asymptotic_renyi_reference(&[r.total_rho; 2], &[0.5; 2], &[n; 2], 2.0 * n, r.alpha)?;
            Ok(RenyiReference {
                alpha: r.alpha,
                atom_rho: r.total_rho,
                atom_sigma: r.total_sigma,
                limit_rho: lr,
                limit_sigma: ls,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Reference {
        atom_entropy: atom.density.total,
        atom_shape_entropy: atom.shape.total,
        limit_rho,
        limit_sigma,
        renyi,
    })
}

/// One row per distance, ordered by distance, plus the atomic reference.
pub fn run_sweep(config: &SweepConfig) -> Result<Report> {
    config.validate()?;
    let basis = models::sto6g_hydrogen();
    let rows = config
        .distances
        .par_iter()
        .map(|&r| {
            model_row(config.method, r, &basis, &config.alphas, &config.grid).map_err(|e| AppError::AtDistance {
                distance: r,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let reference = atom_reference("H", &basis, &config.alphas, &config.grid)?;
    Ok(Report {
        units: Units::Nats,
        rows,
        reference: Some(reference),
    }
    .into_units(config.units))
}

/// Violations of the infinite-separation identities at the largest distance.
pub fn limit_violations(report: &Report) -> Vec<String> {
    let mut out = Vec::new();
    let (Some(row), Some(r)) = (report.rows.last(), &report.reference) else {
        out.push("no rows or no reference to check limits against".into());
        return out;
    };
    let f = report.units.factor();
    let mut check = |what: &str, value: f64, target: f64, tol: f64| {
        if !((value - target).abs() <= tol) {
            out.push(format!("{what}: {value} vs {target} (tolerance {tol})"));
        }
    };
    check("S_total", row.density.total, r.limit_rho, LIMIT_ENTROPY_TOLERANCE * f);
    check("Sigma_total", row.shape.total, r.limit_sigma, LIMIT_ENTROPY_TOLERANCE * f);
    check("S_nadd", row.density.nadd, 0.0, LIMIT_TERM_TOLERANCE * f);
    for (k, v) in row.density.overlap.iter().enumerate() {
        check(&format!("S_overlap[{k}]"), *v, 0.0, LIMIT_TERM_TOLERANCE * f);
    }
    for (b, rr) in row.renyi.iter().zip(&r.renyi) {
        check(&format!("renyi α={} total", b.alpha), b.total_rho, rr.limit_rho, LIMIT_ENTROPY_TOLERANCE * f);
        for (a, p) in b.p_atom.iter().enumerate() {
            check(&format!("renyi α={} p_{}", b.alpha, a + 1), *p, 1.0 / b.p_atom.len() as f64, LIMIT_TERM_TOLERANCE);
        }
    }
    out
}

pub fn read_wfn(path: &Path, convention: PrimitiveConvention) -> Result<WfnDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
    parse_wfn_with(&text, convention).map_err(|source| AppError::Wfn {
        path: path.to_path_buf(),
        source,
    })
}

/// Single-point analysis of a `.wfn` file.
pub fn run_analyze(path: &Path, alphas: &[f64], grid: &GridParams, convention: PrimitiveConvention) -> Result<Report> {
    validate_alphas(alphas)?;
    let doc = read_wfn(path, convention)?;
    let field = doc.field()?;
    let g = grid.build(field.molecule())?;
    let energy = doc.trailer.as_ref().map(|t| t.energy);
    let distance = match field.molecule().atoms() {
        [a, b] => Some(densentropy_core::math::dist(&a.position, &b.position)),
        _ => None,
    };
    let label = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let row = analyze_field(&label, distance, energy, &field, &g, alphas)?;
    Ok(Report {
        units: Units::Nats,
        rows: vec![row],
        reference: None,
    })
}

pub enum AtomSource<'a> {
    /// Built-in STO-6G hydrogen.
    Builtin,
    Wfn(&'a Path, PrimitiveConvention),
}

/// Atomic reference constants: the atom row and the two-atom limits.
pub fn run_atom(source: AtomSource<'_>, alphas: &[f64], grid: &GridParams) -> Result<Report> {
    validate_alphas(alphas)?;
    let (label, field) = match source {
        AtomSource::Builtin => ("H".to_string(), models::atom_density("H", &models::sto6g_hydrogen())?),
        AtomSource::Wfn(path, convention) => {
            let doc = read_wfn(path, convention)?;
            if doc.nuclei.len() != 1 {
                return Err(AppError::Config(format!(
                    "{}: expected one nucleus, found {}",
                    path.display(),
                    doc.nuclei.len()
                )));
            }
            (doc.nuclei[0].symbol.clone(), doc.field()?)
        }
    };
    let g = grid.build(field.molecule())?;
    let row = analyze_field(&label, None, None, &field, &g, alphas)?;
    let reference = reference_from_atom(&row)?;
    Ok(Report {
        units: Units::Nats,
        rows: vec![row],
        reference: Some(reference),
    })
}

/// Writes `x,y,z,weight,owner_atom` for every grid point.
pub fn write_grid(grid: &MolecularGrid, w: impl Write) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["x", "y", "z", "weight", "owner_atom"])?;
    for ((p, wt), o) in grid.points().iter().zip(grid.weights()).zip(grid.owners()) {
        out.write_record([p[0].to_string(), p[1].to_string(), p[2].to_string(), wt.to_string(), o.to_string()])?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn diatomic_grid(distance: f64, grid: &GridParams) -> Result<MolecularGrid> {
    Ok(grid.build(&Molecule::diatomic("H", distance)?)?)
}
