//! Acceptance suite: one PASS/FAIL line per criterion.

use std::f64::consts::{LN_2, PI};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use rand::{rngs::StdRng, Rng, SeedableRng};

use densentropy::report::{Report, Row};
use densentropy::run::{analyze_field, run_sweep, SweepConfig, DEFAULT_DISTANCES};
use densentropy::wfn::{parse_wfn, write_wfn, WfnDocument, WriteOptions};
use densentropy_core::density::PairValues;
use densentropy_core::models::{self, H2Model, Method};
use densentropy_core::molecule::bragg_radius;
use densentropy_core::quadrature::{integrate, AtomicGridSpec, GridParams, MolecularGrid};
use densentropy_core::renyi::renyi_decompose;
use densentropy_core::shannon::{shannon_decompose, shannon_point_terms};

const ALPHAS: [f64; 3] = [0.5, 2.0, 3.0];

struct Suite {
    failed: usize,
}

impl Suite {
    fn report(&mut self, n: u32, ok: bool, detail: String) {
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {n}: {detail}");
        if !ok {
            self.failed += 1;
        }
    }
}

struct Sweeps {
    reports: Vec<(Method, Report)>,
}

impl Sweeps {
    fn compute() -> Self {
        let reports = Method::ALL
            .iter()
            .map(|&method| {
                let cfg = SweepConfig {
                    method,
                    distances: DEFAULT_DISTANCES.to_vec(),
                    alphas: ALPHAS.to_vec(),
                    ..SweepConfig::default()
                };
                (method, run_sweep(&cfg).expect("sweep"))
            })
            .collect();
        Self { reports }
    }

    fn rows(&self) -> impl Iterator<Item = (Method, &Row)> {
        self.reports.iter().flat_map(|(m, r)| r.rows.iter().map(move |row| (*m, row)))
    }

    fn at(&self, method: Method, r: f64) -> &Row {
        self.rows()
            .find(|(m, row)| *m == method && row.distance == Some(r))
            .map(|x| x.1)
            .unwrap()
    }

    fn atom_entropy(&self) -> f64 {
        self.reports[0].1.reference.as_ref().unwrap().atom_entropy
    }
}

fn fixture(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect()
}

fn read_fixture(name: &str) -> (String, WfnDocument) {
    let text = std::fs::read_to_string(fixture(name)).unwrap();
    let doc = parse_wfn(&text).unwrap();
    (text, doc)
}

fn criterion_1(s: &mut Suite) {
    let start = Instant::now();
    let spec = AtomicGridSpec {
        n_radial: 1000,
        lebedev_order: 434,
        bragg_radius: bragg_radius(1).unwrap(),
    };
    let grid = MolecularGrid::atomic([0.0; 3], &spec).unwrap();
    let s_num = integrate(
        |p| {
            let r = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            let ln_rho = -PI.ln() - 2.0 * r;
            -ln_rho.exp() * ln_rho
        },
        &grid,
    )
    .unwrap();
    let secs = start.elapsed().as_secs_f64();
    let exact = 3.0 + PI.ln();
    let err = (s_num - exact).abs();
    s.report(
        1,
        err <= 1e-6 && secs < 5.0,
        format!("hydrogenic entropy {s_num:.10} vs 3 + ln π = {exact:.10}, |Δ| = {err:.2e} (≤ 1e-6), {secs:.2} s (< 5 s)"),
    );
}

fn criterion_2(s: &mut Suite, sw: &Sweeps, fixture_rows: &[(String, Row)]) {
    let mut worst: f64 = 0.0;
    for (_, row) in sw.rows() {
        worst = worst.max((row.integrated_density - row.n_electrons).abs());
    }
    let mut worst_fixture: f64 = 0.0;
    for (_, row) in fixture_rows {
        worst_fixture = worst_fixture.max((row.integrated_density - row.n_electrons).abs());
    }
    s.report(
        2,
        worst <= 1e-6 && worst_fixture <= 1e-6 && sw.rows().count() == 24 && fixture_rows.len() == 3,
        format!("max |∫ρ − N| = {worst:.2e} over 3 models × 8 distances, {worst_fixture:.2e} over 3 fixtures (≤ 1e-6)"),
    );
}

fn criterion_3(s: &mut Suite, sw: &Sweeps) {
    let target = 2.0 * sw.atom_entropy();
    let mut ok = true;
    let mut parts = Vec::new();
    for m in Method::ALL {
        let row = sw.at(m, 50.0);
        let d = (row.density.total - target).abs();
        let o = row.density.overlap[0].abs();
        let n = row.density.nadd.abs();
        ok &= d <= 1e-4 && o <= 1e-6 && n <= 1e-6;
        parts.push(format!("{} |ΔS| = {d:.1e}, |S_overlap| = {o:.1e}, |S_nadd| = {n:.1e}", m.name()));
    }
    s.report(3, ok, format!("R = 50, 2·S_H = {target:.8}: {}", parts.join("; ")));
}

fn criterion_4(s: &mut Suite, sw: &Sweeps) {
    let atom = sw.reports[0].1.reference.as_ref().unwrap().atom_shape_entropy;
    let target = atom + LN_2;
    let mut worst: f64 = 0.0;
    for m in Method::ALL {
        worst = worst.max((sw.at(m, 50.0).shape.total - target).abs());
    }
    s.report(
        4,
        worst <= 1e-4,
        format!("R = 50, S_σ^H + ln 2 = {target:.8}, max |ΔS_σ| = {worst:.2e} (≤ 1e-4)"),
    );
}

fn criterion_5(s: &mut Suite, sw: &Sweeps) {
    let two = 2.0 * sw.atom_entropy();
    let hf = sw.at(Method::Hf, 4.0).density.total;
    let fci = sw.at(Method::Fci, 4.0).density.total;
    s.report(
        5,
        hf > two && fci < two,
        format!("R = 4: S_HF = {hf:.6} > {two:.6} and S_FCI = {fci:.6} < {two:.6}"),
    );
}

fn criterion_6(s: &mut Suite, sw: &Sweeps) {
    let reference = sw.reports[0].1.reference.as_ref().unwrap();
    let atom2 = reference.renyi.iter().find(|r| r.alpha == 2.0).unwrap().atom_rho;
    let target = atom2 - LN_2;
    let (mut worst, mut worst_p): (f64, f64) = (0.0, 0.0);
    for m in Method::ALL {
        let r = sw.at(m, 50.0).renyi.iter().find(|r| r.alpha == 2.0).unwrap();
        worst = worst.max((r.total_rho - target).abs());
        for p in &r.p_atom {
            worst_p = worst_p.max((p - 0.5).abs());
        }
    }
    s.report(
        6,
        worst <= 1e-4 && worst_p <= 1e-6,
        format!("R = 50, S^2_H − ln 2 = {target:.8}, max |ΔS^2| = {worst:.2e} (≤ 1e-4), max |p_A − 0.5| = {worst_p:.2e} (≤ 1e-6)"),
    );
}

fn criterion_7(s: &mut Suite, sw: &Sweeps) {
    let basis = models::sto6g_hydrogen();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut worst: f64 = 0.0;
    let mut geometries = 0;
    for m in Method::ALL {
        for &r in &DEFAULT_DISTANCES {
            let field = H2Model::new(m, r, &basis).unwrap().field().unwrap();
            let mut phi = vec![0.0; field.primitives().len()];
            let mut pv = PairValues::new(field.n_atoms());
            let half = 0.5 * r + 4.0;
            for _ in 0..10_000 {
                let p = [rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0), rng.gen_range(-half..half)];
                field.pair_densities(&p, &mut phi, &mut pv);
                let t = shannon_point_terms(&pv);
                let scale = t.add.abs().max(t.nadd.abs()).max(t.total.abs());
                if scale > 0.0 {
                    worst = worst.max((t.add - t.nadd - t.total).abs() / scale);
                }
            }
            geometries += 1;
        }
    }
    let p4 = sw.rows().map(|(_, row)| row.checks.p4_sum).fold(0.0, f64::max);
    s.report(
        7,
        worst <= 1e-10 && p4 <= 1e-10,
        format!("{geometries} geometries × 10⁴ points, max relative closure error {worst:.2e} (≤ 1e-10); max |Σp4 − 1| = {p4:.2e} (≤ 1e-10)"),
    );
}

fn criterion_8(s: &mut Suite, sw: &Sweeps, fixture_rows: &[(String, Row)]) {
    let all: Vec<&Row> = sw.rows().map(|x| x.1).chain(fixture_rows.iter().map(|x| &x.1)).collect();
    let shannon = all.iter().map(|r| r.checks.shape_relation).fold(0.0, f64::max);
    let renyi = all.iter().map(|r| r.checks.renyi_shape_relation).fold(0.0, f64::max);
    s.report(
        8,
        shannon <= 1e-10 && renyi <= 1e-10,
        format!(
            "{} rows, α ∈ {ALPHAS:?}: max Shannon shape-relation error {shannon:.2e}, max Rényi shape-relation error {renyi:.2e} (≤ 1e-10)",
            all.len()
        ),
    );
}

fn criterion_9(s: &mut Suite) {
    let basis = models::sto6g_hydrogen();
    let field = models::hf_density(1.4, &basis).unwrap();
    let grid = GridParams::default().build(field.molecule()).unwrap();
    let sh = shannon_decompose(&field, &grid).unwrap();
    let re = renyi_decompose(&field, &grid, 1.0001).unwrap();
    let d = (re.total_sigma - sh.shape.total).abs();
    s.report(
        9,
        d <= 1e-3,
        format!(
            "H₂ HF R = 1.4, shape function: S^1.0001 = {:.6}, Shannon = {:.6}, |Δ| = {d:.2e} (≤ 1e-3)",
            re.total_sigma, sh.shape.total
        ),
    );
}

fn fixture_rows() -> Vec<(String, Row)> {
    let grid = GridParams::default();
    ["single_h.wfn", "h2_hf_r1.4.wfn", "h2_fci_r1.4.wfn"]
        .iter()
        .map(|name| {
            let (_, doc) = read_fixture(name);
            let field = doc.field().unwrap();
            let g = grid.build(field.molecule()).unwrap();
            (name.to_string(), analyze_field(name, None, None, &field, &g, &ALPHAS).unwrap())
        })
        .collect()
}

fn max_row_difference(a: &Row, b: &Row) -> f64 {
    let mut v: Vec<(f64, f64)> = vec![
        (a.density.total, b.density.total),
        (a.density.add, b.density.add),
        (a.density.nadd, b.density.nadd),
        (a.shape.total, b.shape.total),
        (a.shape.nadd, b.shape.nadd),
    ];
    v.extend(a.density.net.iter().copied().zip(b.density.net.iter().copied()));
    v.extend(a.density.overlap.iter().copied().zip(b.density.overlap.iter().copied()));
    for (x, y) in a.renyi.iter().zip(&b.renyi) {
        v.extend([
            (x.total_rho, y.total_rho),
            (x.total_sigma, y.total_sigma),
            (x.net, y.net),
            (x.nadd_intra, y.nadd_intra),
        ]);
        if let (Some(p), Some(q)) = (x.add2, y.add2) {
            v.push((p, q));
        }
    }
    v.iter().map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn criterion_10(s: &mut Suite, sw: &Sweeps, fixture_rows: &[(String, Row)]) {
    let mut round_trips = 0;
    for (name, _) in fixture_rows {
        let (_, doc) = read_fixture(name);
        let text = write_wfn(&doc, WriteOptions::default()).unwrap();
        let again = parse_wfn(&text).unwrap();
        let same_text = write_wfn(&again, WriteOptions::default()).unwrap() == text;
        let same_doc = again.nuclei == doc.nuclei
            && again.prim_exponent == doc.prim_exponent
            && again.prim_center == doc.prim_center
            && again.prim_type == doc.prim_type
            && again.mos.iter().zip(&doc.mos).all(|(x, y)| {
                x.occupation == y.occupation
                    && x.coefficients
                        .iter()
                        .zip(&y.coefficients)
                        .all(|(c, d)| (c - d).abs() <= 1e-15 * c.abs())
            });
        if same_text && same_doc {
            round_trips += 1;
        }
    }
    let mut worst: f64 = 0.0;
    for (name, method) in [("h2_hf_r1.4.wfn", Method::Hf), ("h2_fci_r1.4.wfn", Method::Fci)] {
        let parsed = &fixture_rows.iter().find(|r| r.0 == name).unwrap().1;
        worst = worst.max(max_row_difference(parsed, sw.at(method, 1.4)));
    }
    let single = &fixture_rows[0].1;
    let exact = 1.5 * (1.0 + (PI / 2.0).ln());
    let single_err = (single.density.total - exact).abs();
    s.report(
        10,
        round_trips == 3 && worst <= 1e-8 && single_err <= 1e-8,
        format!(
            "{round_trips}/3 fixtures round trip; parsed H₂ entropies vs models max |Δ| = {worst:.2e}, single Gaussian vs closed form |Δ| = {single_err:.2e} (≤ 1e-8)"
        ),
    );
}

fn criterion_11(s: &mut Suite) {
    let basis = models::sto6g_hydrogen();
    let two_h = 2.0 * models::atom_energy(&basis, 1.0).unwrap();
    let fci = H2Model::new(Method::Fci, 50.0, &basis).unwrap().energy().unwrap();
    let hf = H2Model::new(Method::Hf, 50.0, &basis).unwrap().energy().unwrap();
    s.report(
        11,
        (fci - two_h).abs() <= 0.01 && hf - two_h > 0.05,
        format!("R = 50: 2E_H = {two_h:.6}, E_FCI − 2E_H = {:.2e} (≤ 0.01), E_HF − 2E_H = {:.4} (> 0.05)", fci - two_h, hf - two_h),
    );
}

fn main() -> ExitCode {
    let mut s = Suite { failed: 0 };
    let sw = Sweeps::compute();
    let fixtures = fixture_rows();
    criterion_1(&mut s);
    criterion_2(&mut s, &sw, &fixtures);
    criterion_3(&mut s, &sw);
    criterion_4(&mut s, &sw);
    criterion_5(&mut s, &sw);
    criterion_6(&mut s, &sw);
    criterion_7(&mut s, &sw);
    criterion_8(&mut s, &sw, &fixtures);
    criterion_9(&mut s);
    criterion_10(&mut s, &sw, &fixtures);
    criterion_11(&mut s);
    if s.failed == 0 {
        println!("acceptance: all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", s.failed);
        ExitCode::FAILURE
    }
}
