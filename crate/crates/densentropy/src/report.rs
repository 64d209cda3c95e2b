//! Result rows and their CSV / JSON forms.

use std::collections::BTreeMap;
use std::f64::consts::LN_2;
use std::io::Write;

use serde::{Deserialize, Serialize};

use densentropy_core::renyi::RenyiDecomposition;
use densentropy_core::shannon::{ShannonDecomposition, ShannonTerms};

use crate::error::Result;

/// Largest accepted `|add - nadd - total|` after integration.
pub const CLOSURE_TOLERANCE: f64 = 1e-8;
/// Largest accepted error in the density/shape relations.
pub const SHAPE_TOLERANCE: f64 = 1e-10;
/// Largest accepted `|Σ p4 - 1|`.
pub const P4_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    #[default]
    Nats,
    Bits,
}

impl Units {
    pub fn factor(self) -> f64 {
        match self {
            Units::Nats => 1.0,
            Units::Bits => 1.0 / LN_2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShannonBlock {
    pub total: f64,
    pub add: f64,
    pub nadd: f64,
    pub net: Vec<f64>,
    /// Unordered pairs A < B in row order.
    pub overlap: Vec<f64>,
}

impl From<&ShannonTerms> for ShannonBlock {
    fn from(t: &ShannonTerms) -> Self {
        Self {
            total: t.total,
            add: t.add,
            nadd: t.nadd,
            net: t.net.clone(),
            overlap: t.overlap.clone(),
        }
    }
}

impl ShannonBlock {
    fn scale(&mut self, f: f64) {
        self.total *= f;
        self.add *= f;
        self.nadd *= f;
        self.net.iter_mut().for_each(|x| *x *= f);
        self.overlap.iter_mut().for_each(|x| *x *= f);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenyiBlock {
    pub alpha: f64,
    pub total_rho: f64,
    pub total_sigma: f64,
    pub p_atom: Vec<f64>,
    pub net: f64,
    pub net_sigma: f64,
    pub nadd_intra: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub add2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nadd2: Option<f64>,
    /// Keys `"A,B,C,D"` with 1-based atom labels.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p4: Option<BTreeMap<String, f64>>,
}

pub fn p4_key(t: [usize; 4]) -> String {
    format!("{},{},{},{}", t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1)
}

impl From<&RenyiDecomposition> for RenyiBlock {
    fn from(d: &RenyiDecomposition) -> Self {
        Self {
            alpha: d.alpha,
            total_rho: d.total_rho,
            total_sigma: d.total_sigma,
            p_atom: d.p_atom.clone(),
            net: d.net,
            net_sigma: d.net_sigma,
            nadd_intra: d.nadd_intra,
            add2: d.add2,
            nadd2: d.nadd2,
            p4: d
                .p4
                .as_ref()
                .map(|t| t.entries().map(|(k, p)| (p4_key(k), p)).collect()),
        }
    }
}

impl RenyiBlock {
    fn scale(&mut self, f: f64) {
        for x in [
            &mut self.total_rho,
            &mut self.total_sigma,
            &mut self.net,
            &mut self.net_sigma,
            &mut self.nadd_intra,
        ] {
            *x *= f;
        }
        for x in [&mut self.add2, &mut self.nadd2].into_iter().flatten() {
            *x *= f;
        }
    }
}

/// Internal identities of one row, always in nats.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checks {
    pub closure_density: f64,
    pub closure_shape: f64,
    pub shape_relation: f64,
    pub renyi_shape_relation: f64,
    pub renyi2_closure: f64,
    pub p4_sum: f64,
    pub ok: bool,
}

impl Checks {
    pub fn evaluate(s: &ShannonDecomposition, renyi: &[RenyiDecomposition]) -> Self {
        let mut c = Checks {
            closure_density: s.density.closure_error(),
            closure_shape: s.shape.closure_error(),
            shape_relation: s.shape_relation_error(),
            renyi_shape_relation: 0.0,
            renyi2_closure: 0.0,
            p4_sum: 0.0,
            ok: true,
        };
        for r in renyi {
            c.renyi_shape_relation = c.renyi_shape_relation.max(r.shape_relation_error());
            if let (Some(add), Some(nadd), Some(p4)) = (r.add2, r.nadd2, &r.p4) {
                c.renyi2_closure = c.renyi2_closure.max((add - nadd - r.total_rho).abs());
                c.p4_sum = c.p4_sum.max((p4.sum() - 1.0).abs());
            }
        }
        c.ok = c.closure_density <= CLOSURE_TOLERANCE
            && c.closure_shape <= CLOSURE_TOLERANCE
            && c.shape_relation <= SHAPE_TOLERANCE
            && c.renyi_shape_relation <= SHAPE_TOLERANCE
            && c.renyi2_closure <= CLOSURE_TOLERANCE
            && c.p4_sum <= P4_TOLERANCE;
        c
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub label: String,
    /// Internuclear distance in bohr, for diatomics.
    pub distance: Option<f64>,
    pub n_electrons: f64,
    pub integrated_density: f64,
    pub energy: Option<f64>,
    pub density: ShannonBlock,
    pub shape: ShannonBlock,
    pub renyi: Vec<RenyiBlock>,
    pub clamped: usize,
    pub negative: usize,
    pub checks: Checks,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenyiReference {
    pub alpha: f64,
    pub atom_rho: f64,
    pub atom_sigma: f64,
    pub limit_rho: f64,
    pub limit_sigma: f64,
}

/// Isolated-atom values and the infinite-separation limits built from them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reference {
    pub atom_entropy: f64,
    pub atom_shape_entropy: f64,
    pub limit_rho: f64,
    pub limit_sigma: f64,
    pub renyi: Vec<RenyiReference>,
}

impl Reference {
    fn scale(&mut self, f: f64) {
        self.atom_entropy *= f;
        self.atom_shape_entropy *= f;
        self.limit_rho *= f;
        self.limit_sigma *= f;
        for r in &mut self.renyi {
            r.atom_rho *= f;
            r.atom_sigma *= f;
            r.limit_rho *= f;
            r.limit_sigma *= f;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub units: Units,
    pub rows: Vec<Row>,
    pub reference: Option<Reference>,
}

impl Report {
    /// Converts every entropy value from nats; checks stay in nats.
    pub fn into_units(mut self, units: Units) -> Self {
        let f = units.factor() / self.units.factor();
        for row in &mut self.rows {
            row.density.scale(f);
            row.shape.scale(f);
            row.renyi.iter_mut().for_each(|r| r.scale(f));
        }
        if let Some(r) = &mut self.reference {
            r.scale(f);
        }
        self.units = units;
        self
    }

    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.checks.ok)
    }

    pub fn write_json(&self, w: impl Write) -> Result<()> {
        serde_json::to_writer_pretty(w, self)?;
        Ok(())
    }

    pub fn csv_header(&self) -> Vec<String> {
        self.rows.first().map(row_columns).unwrap_or_default().into_iter().map(|(k, _)| k).collect()
    }

    pub fn write_csv(&self, w: impl Write) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(self.csv_header())?;
        for row in &self.rows {
            out.write_record(row_columns(row).into_iter().map(|(_, v)| v))?;
        }
        out.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    /// Reference block as `quantity,value` lines.
    pub fn write_reference_csv(&self, w: impl Write) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["quantity", "value"])?;
        if let Some(r) = &self.reference {
            for (k, v) in reference_columns(r) {
                out.write_record([k, v.to_string()])?;
            }
        }
        out.flush().map_err(csv::Error::from)?;
        Ok(())
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn shannon_columns(prefix: &str, b: &ShannonBlock, cols: &mut Vec<(String, String)>) {
    cols.push((format!("{prefix}_total"), b.total.to_string()));
    cols.push((format!("{prefix}_add"), b.add.to_string()));
    cols.push((format!("{prefix}_nadd"), b.nadd.to_string()));
    for (a, v) in b.net.iter().enumerate() {
        cols.push((format!("{prefix}_net_{}", a + 1), v.to_string()));
    }
    let n = b.net.len();
    let mut k = 0;
    for a in 0..n {
        for c in a + 1..n {
            cols.push((format!("{prefix}_overlap_{}_{}", a + 1, c + 1), b.overlap[k].to_string()));
            k += 1;
        }
    }
}

/// Flattened `(column, value)` pairs of a row.
pub fn row_columns(row: &Row) -> Vec<(String, String)> {
    let mut cols = vec![
        ("label".to_string(), row.label.clone()),
        ("R".to_string(), opt(row.distance)),
        ("N".to_string(), row.n_electrons.to_string()),
        ("N_grid".to_string(), row.integrated_density.to_string()),
        ("energy".to_string(), opt(row.energy)),
    ];
    shannon_columns("S", &row.density, &mut cols);
    shannon_columns("Sigma", &row.shape, &mut cols);
    for r in &row.renyi {
        let p = format!("renyi_a{}", r.alpha);
        cols.push((format!("{p}_total_rho"), r.total_rho.to_string()));
        cols.push((format!("{p}_total_sigma"), r.total_sigma.to_string()));
        cols.push((format!("{p}_net"), r.net.to_string()));
        cols.push((format!("{p}_net_sigma"), r.net_sigma.to_string()));
        cols.push((format!("{p}_nadd_intra"), r.nadd_intra.to_string()));
        for (a, v) in r.p_atom.iter().enumerate() {
            cols.push((format!("{p}_p_{}", a + 1), v.to_string()));
        }
        if let (Some(add), Some(nadd)) = (r.add2, r.nadd2) {
            cols.push((format!("{p}_add2"), add.to_string()));
            cols.push((format!("{p}_nadd2"), nadd.to_string()));
        }
        if let Some(p4) = &r.p4 {
            for (k, v) in p4 {
                cols.push((format!("{p}_p4[{k}]"), v.to_string()));
            }
        }
    }
    cols.push(("clamped".to_string(), row.clamped.to_string()));
    cols.push(("negative".to_string(), row.negative.to_string()));
    cols.push(("identities_ok".to_string(), row.checks.ok.to_string()));
    cols
}

pub fn reference_columns(r: &Reference) -> Vec<(String, f64)> {
    let mut v = vec![
        ("atom_entropy".to_string(), r.atom_entropy),
        ("atom_shape_entropy".to_string(), r.atom_shape_entropy),
        ("limit_rho".to_string(), r.limit_rho),
        ("limit_sigma".to_string(), r.limit_sigma),
    ];
    for x in &r.renyi {
        let p = format!("renyi_a{}", x.alpha);
        v.push((format!("{p}_atom_rho"), x.atom_rho));
        v.push((format!("{p}_atom_sigma"), x.atom_sigma));
        v.push((format!("{p}_limit_rho"), x.limit_rho));
        v.push((format!("{p}_limit_sigma"), x.limit_sigma));
    }
    v
}
