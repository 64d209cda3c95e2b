//! Reference values computed by independent routes: direct quadrature in
//! test code, closed forms substituted by hand, and analytic densities.

use core::f64::consts::{LN_2, PI};

use densentropy_core::basis::ContractedGaussian;
use densentropy_core::density::PairValues;
use densentropy_core::integrals::{boys_f0, contracted_overlap, IntegralSet};
use densentropy_core::models::{self, H2Model, Method};
use densentropy_core::quadrature::{integrate, AtomicGridSpec, GridParams, MolecularGrid};
use densentropy_core::renyi::{self, renyi_decompose, renyi_total};
use densentropy_core::shannon::{self, shannon_decompose, shannon_point_terms};

fn sto6g() -> ContractedGaussian {
    models::sto6g_hydrogen()
}

fn phi(r: f64) -> f64 {
    sto6g().eval(&[0.0; 3], &[r, 0.0, 0.0])
}

// Composite Simpson rule on [a, b] with n (even) panels.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + k as f64 * h);
    }
    s * h / 3.0
}

// Overlap of two STO-6G functions a distance `r` apart, by cylindrical
// quadrature over (ρ, z) with a substitution that clusters nodes near the axis.
fn overlap_by_quadrature(r: f64) -> f64 {
    let half = 0.5 * r;
    simpson(
        |t| {
            let rho = t * t;
            let inner = simpson(
                |z| phi((rho * rho + (z - half) * (z - half)).sqrt()) * phi((rho * rho + (z + half) * (z + half)).sqrt()),
                -14.0,
                14.0,
                4000,
            );
            2.0 * PI * rho * inner * 2.0 * t
        },
        0.0,
        4.0,
        2000,
    )
}

#[test]
fn sto6g_overlap_at_equilibrium_matches_quadrature() {
    let oracle = overlap_by_quadrature(1.4);
    let s = contracted_overlap(&sto6g(), &sto6g(), 1.4).unwrap();
    assert!((s - oracle).abs() < 1e-9, "{s} vs {oracle}");
    // frozen from the quadrature oracle
    assert!((s - 0.659_176_168_475_214).abs() < 1e-12);
}

// (AA|AA) of a spherical density via the shell theorem:
// J = ∫ 4π r² ρ(r) [Q(r)/r + ∫_r^∞ 4π s ρ(s) ds] dr.
#[test]
fn coulomb_self_repulsion_matches_shell_theorem() {
    let n = 40000;
    let rmax = 20.0;
    let h = rmax / n as f64;
    let rho: Vec<f64> = (0..=n).map(|k| phi(k as f64 * h).powi(2)).collect();
    let mut enclosed = vec![0.0; n + 1];
    let mut outside = vec![0.0; n + 1];
    for k in 1..=n {
        let (r0, r1) = ((k - 1) as f64 * h, k as f64 * h);
        enclosed[k] = enclosed[k - 1] + 0.5 * h * 4.0 * PI * (r0 * r0 * rho[k - 1] + r1 * r1 * rho[k]);
    }
    for k in (0..n).rev() {
        let (r0, r1) = (k as f64 * h, (k + 1) as f64 * h);
        outside[k] = outside[k + 1] + 0.5 * h * 4.0 * PI * (r0 * rho[k] + r1 * rho[k + 1]);
    }
    let mut j = 0.0;
    for k in 1..=n {
        let r = k as f64 * h;
        let w = if k == n { 0.5 } else { 1.0 };
        j += w * h * 4.0 * PI * r * r * rho[k] * (enclosed[k] / r + outside[k]);
    }
    let ints = IntegralSet::compute(&[(&sto6g(), [0.0; 3])], &[]).unwrap();
    let g = ints.g(0, 0, 0, 0);
    assert!((g - j).abs() < 1e-6, "{g} vs {j}");
    // frozen closed-form value, cross-checked against an adaptive quadrature to 1e-11
    assert!((g - 0.774_998_521_333).abs() < 1e-10);
}

#[test]
fn one_electron_atom_energy_matches_radial_quadrature() {
    // T = ½ ∫ |φ'|² d³r, V = -∫ φ²/r d³r
    let dphi = |r: f64| -> f64 {
        let b = sto6g();
        b.exponents
            .iter()
            .zip(&b.coefficients)
            .map(|(a, c)| c * (2.0 * a / PI).powf(0.75) * (-2.0 * a * r) * (-a * r * r).exp())
            .sum()
    };
    let t = simpson(|r| 0.5 * 4.0 * PI * r * r * dphi(r).powi(2), 0.0, 20.0, 200_000);
    let v = -simpson(|r| 4.0 * PI * r * phi(r).powi(2), 0.0, 20.0, 200_000);
    let e = models::atom_energy(&sto6g(), 1.0).unwrap();
    assert!((e - (t + v)).abs() < 1e-9, "{e} vs {}", t + v);
    assert!((e + 0.471_039_054_178).abs() < 1e-10);
}

#[test]
fn boys_function_zero() {
    assert_eq!(boys_f0(0.0), 1.0);
}

#[test]
fn hf_midpoint_density_and_pair_terms() {
    let r = 1.4;
    let m = H2Model::new(Method::Hf, r, &sto6g()).unwrap();
    let f = m.field().unwrap();
    let s = contracted_overlap(&sto6g(), &sto6g(), r).unwrap();
    let pm = phi(0.5 * r);
    let mid = [0.0, 0.0, 0.0];
    assert!((f.eval_density(&mid) - 4.0 * pm * pm / (1.0 + s)).abs() < 1e-14);
    let p = [0.3, -0.2, 0.5];
    let (pa, pb) = (
        sto6g().eval(&[0.0, 0.0, -0.7], &p),
        sto6g().eval(&[0.0, 0.0, 0.7], &p),
    );
    assert!((f.eval_pair_density(0, 0, &p).unwrap() - pa * pa / (1.0 + s)).abs() < 1e-14);
    assert!((f.eval_pair_density(1, 1, &p).unwrap() - pb * pb / (1.0 + s)).abs() < 1e-14);
    assert!((f.eval_pair_density(0, 1, &p).unwrap() - pa * pb / (1.0 + s)).abs() < 1e-14);
}

#[test]
fn hf_midpoint_shannon_terms_from_closed_forms() {
    let r = 1.4;
    let s = contracted_overlap(&sto6g(), &sto6g(), r).unwrap();
    let x = phi(0.5 * r).powi(2) / (1.0 + s);
    let f = models::hf_density(r, &sto6g()).unwrap();
    let pv = PairValues::from_full(
        2,
        &[
            f.eval_pair_density(0, 0, &[0.0; 3]).unwrap(),
            f.eval_pair_density(0, 1, &[0.0; 3]).unwrap(),
            f.eval_pair_density(1, 0, &[0.0; 3]).unwrap(),
            f.eval_pair_density(1, 1, &[0.0; 3]).unwrap(),
        ],
    );
    let t = shannon_point_terms(&pv);
    let tol = 1e-13;
    assert!((t.net[0] + x * x.ln()).abs() < tol);
    assert!((t.net[1] + x * x.ln()).abs() < tol);
    assert!((t.overlap[0] + 2.0 * x * (2.0 * x).ln()).abs() < tol);
    assert!((t.total + 4.0 * x * (4.0 * x).ln()).abs() < tol);
    assert!((t.nadd - 6.0 * x * LN_2).abs() < tol);
}

#[test]
fn hl_midpoint_density_below_hf() {
    let mid = [0.0; 3];
    let hf = models::hf_density(1.4, &sto6g()).unwrap().eval_density(&mid);
    let hl = models::hl_density(1.4, &sto6g()).unwrap().eval_density(&mid);
    assert!(hl < hf);
}

#[test]
fn dissociated_models_agree_pointwise() {
    let b = sto6g();
    let fields: Vec<_> = Method::ALL
        .iter()
        .map(|&m| models::model_density(m, 50.0, &b).unwrap())
        .collect();
    for p in [[0.0, 0.0, 25.0], [0.1, 0.2, -24.8], [0.0, 0.0, 0.0], [1.0, -1.0, 26.0]] {
        let (pa, pb) = (b.eval(&[0.0, 0.0, -25.0], &p), b.eval(&[0.0, 0.0, 25.0], &p));
        let atoms = pa * pa + pb * pb;
        assert!((fields[0].eval_density(&p) - atoms).abs() < 1e-10);
        for f in &fields[1..] {
            assert!((f.eval_density(&p) - fields[0].eval_density(&p)).abs() < 1e-8);
        }
    }
}

fn hydrogenic_entropy(n_radial: usize) -> f64 {
    let spec = AtomicGridSpec {
        n_radial,
        lebedev_order: 6,
        bragg_radius: 1.0,
    };
    let g = MolecularGrid::atomic([0.0; 3], &spec).unwrap();
    integrate(
        |p| {
            let r = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            let rho = (-2.0 * r).exp() / PI;
            if rho == 0.0 {
                0.0
            } else {
                -rho * rho.ln()
            }
        },
        &g,
    )
    .unwrap()
}

#[test]
fn hydrogenic_entropy_converges_under_radial_doubling() {
    let exact = 3.0 + PI.ln();
    for n in [500, 700] {
        let (a, b) = (hydrogenic_entropy(n), hydrogenic_entropy(2 * n));
        assert!((a - b).abs() < 1e-8);
        assert!((b - exact).abs() < 1e-8);
    }
}

fn atom_reference() -> (f64, f64, f64) {
    let f = models::atom_density("H", &sto6g()).unwrap();
    let g = GridParams::default().build(f.molecule()).unwrap();
    let d = shannon_decompose(&f, &g).unwrap();
    let (r2, _) = renyi_total(&f, &g, 2.0).unwrap();
    (d.density.total, d.shape.total, r2)
}

#[test]
fn sto6g_atom_reference_is_grid_stable() {
    let f = models::atom_density("H", &sto6g()).unwrap();
    let coarse = GridParams {
        n_radial: 300,
        lebedev_order: 110,
        ..GridParams::default()
    };
    let a = shannon_decompose(&f, &coarse.build(f.molecule()).unwrap()).unwrap();
    let b = shannon_decompose(&f, &GridParams::fine().build(f.molecule()).unwrap()).unwrap();
    assert!((a.density.total - b.density.total).abs() < 1e-9);
    assert_eq!(a.density.nadd, 0.0);
    assert_eq!(a.density.total, a.density.net[0]);
    // one electron: shape and density coincide up to the grid's N ≈ 1
    assert!((a.shape.total - a.density.total).abs() < 1e-9);
    // a contracted Gaussian is less sharply peaked than the exact 1s density
    assert!(b.density.total > 3.0 + PI.ln() - 1.0 && b.density.total < 3.0 + PI.ln());
}

#[test]
fn dissociation_limits_for_all_models() {
    let (s_atom, sigma_atom, r2_atom) = atom_reference();
    for m in Method::ALL {
        let f = models::model_density(m, 50.0, &sto6g()).unwrap();
        let g = GridParams::default().build(f.molecule()).unwrap();
        let d = shannon_decompose(&f, &g).unwrap();
        assert!((d.density.total - 2.0 * s_atom).abs() < 1e-4);
        assert!(d.density.overlap[0].abs() < 1e-6);
        assert!(d.density.nadd.abs() < 1e-6);
        assert!((d.shape.total - (sigma_atom + LN_2)).abs() < 1e-4);

        let (ref_rho, ref_sigma) = shannon::asymptotic_shannon_reference(&[s_atom, s_atom], &[1.0, 1.0]).unwrap();
        assert!((d.density.total - ref_rho).abs() < 1e-4);
        assert!((d.shape.total - ref_sigma).abs() < 1e-4);

        let r = renyi_decompose(&f, &g, 2.0).unwrap();
        assert!((r.total_rho - (r2_atom - LN_2)).abs() < 1e-4);
        for p in &r.p_atom {
            assert!((p - 0.5).abs() < 1e-6);
        }
        assert!((r.nadd_intra - LN_2).abs() < 1e-6);
        assert!((r.total_rho - (r.net - r.nadd_intra)).abs() < 1e-8);
        // weighted net entropy equals the single-atom value
        assert!((r.net - r2_atom).abs() < 1e-4);
        let p4 = r.p4.as_ref().unwrap();
        for ([a, b, c, d], p) in p4.entries() {
            let want = if a == b && b == c && c == d { 0.5 } else { 0.0 };
            assert!((p - want).abs() < 1e-8, "{a}{b}{c}{d} {p}");
        }
        let (lim, _) = renyi::asymptotic_renyi_reference(&[r2_atom; 2], &r.p_atom, &[1.0, 1.0], 2.0, 2.0).unwrap();
        assert!((r.total_rho - lim).abs() < 1e-4);
    }
}

#[test]
fn hf_entropy_overshoots_atoms_at_four_bohr() {
    let (s_atom, _, _) = atom_reference();
    let entropy = |m| {
        let f = models::model_density(m, 4.0, &sto6g()).unwrap();
        let g = GridParams::default().build(f.molecule()).unwrap();
        shannon_decompose(&f, &g).unwrap().density.total
    };
    assert!(entropy(Method::Hf) > 2.0 * s_atom);
    assert!(entropy(Method::Fci) < 2.0 * s_atom);
}

#[test]
fn fci_entropy_rises_monotonically_to_atomic_limit() {
    let (s_atom, _, _) = atom_reference();
    let mut prev = f64::NEG_INFINITY;
    for r in [1.4, 2.0, 3.0, 4.0, 6.0, 10.0, 20.0, 50.0] {
        let f = models::fci_density(r, &sto6g()).unwrap();
        let g = GridParams::default().build(f.molecule()).unwrap();
        let s = shannon_decompose(&f, &g).unwrap().density.total;
        // beyond 20 bohr the curve is flat to within grid noise
        let noise = if r > 20.0 { 1e-6 } else { 0.0 };
        assert!(s > prev - noise, "R = {r}");
        assert!(s < 2.0 * s_atom + 1e-6);
        prev = s;
    }
}

#[test]
fn renyi_two_saturates_faster_than_shannon() {
    let (s_atom, _, r2_atom) = atom_reference();
    let f = models::fci_density(6.0, &sto6g()).unwrap();
    let g = GridParams::default().build(f.molecule()).unwrap();
    let shannon = shannon_decompose(&f, &g).unwrap().density.total;
    let (r2, _) = renyi_total(&f, &g, 2.0).unwrap();
    assert!((r2 - (r2_atom - LN_2)).abs() < (shannon - 2.0 * s_atom).abs());
}

// The α → 1 limit recovers Shannon only for a unit-normalized distribution,
// so the comparison is made on the shape function.
#[test]
fn renyi_approaches_shannon_near_order_one() {
    let f = models::hf_density(1.4, &sto6g()).unwrap();
    let g = GridParams::default().build(f.molecule()).unwrap();
    let s = shannon_decompose(&f, &g).unwrap().shape.total;
    for eps in [1e-3, 1e-4] {
        for alpha in [1.0 - eps, 1.0 + eps] {
            let (_, r) = renyi_total(&f, &g, alpha).unwrap();
            assert!((r - s).abs() <= 20.0 * eps, "α = {alpha}: {r} vs {s}");
        }
    }
    let (_, r) = renyi_total(&f, &g, 1.0001).unwrap();
    assert!((r - s).abs() <= 1e-3);
}

#[test]
fn renyi_of_uniform_box_is_log_volume() {
    use densentropy_core::density::PairSamples;
    // 10×10×10 midpoint grid on a 2 × 3 × 0.5 box holding 2 electrons
    let (lx, ly, lz) = (2.0, 3.0, 0.5);
    let v = lx * ly * lz;
    let m = 10;
    let mut points = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                points.push([
                    (i as f64 + 0.5) * lx / m as f64,
                    (j as f64 + 0.5) * ly / m as f64,
                    (k as f64 + 0.5) * lz / m as f64,
                ]);
            }
        }
    }
    let count = points.len();
    let grid = MolecularGrid::from_parts(points, vec![v / count as f64; count], vec![0; count]).unwrap();
    let samples = PairSamples::from_pair_values(1, vec![2.0 / v; count]).unwrap();
    for alpha in [0.5, 2.0, 3.0, 7.5] {
        let t = renyi::renyi_total_samples(&samples, &grid, alpha).unwrap();
        assert!((t.sigma - v.ln()).abs() < 1e-12);
    }
}

#[test]
fn renyi_shape_relation_for_several_orders() {
    let f = models::fci_density(2.0, &sto6g()).unwrap();
    let g = GridParams::default().build(f.molecule()).unwrap();
    for alpha in [0.5, 2.0, 3.0] {
        let d = renyi_decompose(&f, &g, alpha).unwrap();
        assert!(d.shape_relation_error() < 1e-10);
        let shift = alpha / (alpha - 1.0) * d.integrated_density.ln();
        assert!((d.net_sigma - (d.net + shift * d.p_atom.iter().sum::<f64>())).abs() < 1e-10);
    }
}

#[test]
fn alpha_two_four_index_identities() {
    let f = models::hl_density(1.4, &sto6g()).unwrap();
    let g = GridParams::default().build(f.molecule()).unwrap();
    let d = renyi::renyi2_partition(&f, &g).unwrap();
    let p4 = d.p4.as_ref().unwrap();
    assert!((p4.sum() - 1.0).abs() < 1e-10);
    assert!((d.add2.unwrap() - d.nadd2.unwrap() - d.total_rho).abs() < 1e-8);
    assert_eq!(p4.fraction(0, 1, 1, 0), p4.fraction(1, 0, 0, 1));
    assert_eq!(p4.fraction(0, 1, 0, 0), p4.fraction(0, 0, 1, 0));
}

#[test]
fn single_atom_renyi_partition_is_trivial() {
    let f = models::atom_density("H", &sto6g()).unwrap();
    let g = GridParams::default().build(f.molecule()).unwrap();
    let d = renyi::renyi2_partition(&f, &g).unwrap();
    let p4 = d.p4.unwrap();
    assert_eq!(p4.fraction(0, 0, 0, 0), 1.0);
    assert_eq!(d.nadd2.unwrap(), 0.0);
    assert_eq!(d.p_atom, vec![1.0]);
    assert_eq!(d.nadd_intra, 0.0);
    assert!((d.net - d.total_rho).abs() < 1e-12);
}

#[test]
fn fractional_order_rejects_negative_same_center_density() {
    // a same-center density matrix with a negative eigenvalue
    use densentropy_core::basis::Primitive;
    use densentropy_core::density::{DensityMatrix, PairDensityField};
    use densentropy_core::molecule::{Atom, Molecule};
    let mol = Molecule::new(vec![Atom::new("H", [0.0; 3]).unwrap()]).unwrap();
    let prims = vec![
        Primitive::new(0, [0, 0, 0], 1.0).unwrap(),
        Primitive::new(0, [0, 0, 0], 0.2).unwrap(),
    ];
    let c = DensityMatrix::new(2, vec![1.2, -0.1, -0.1, -0.15], 1.0).unwrap();
    let f = PairDensityField::new(mol, prims, c).unwrap();
    let grid = GridParams {
        n_radial: 200,
        lebedev_order: 6,
        ..GridParams::default()
    }
    .build(f.molecule())
    .unwrap();
    let samples = f.sample(&grid);
    let n = shannon::integrated_density(&samples, &grid).unwrap();
    let err = renyi::renyi_decompose_samples(&samples, &grid, n, 0.5).unwrap_err();
    assert!(matches!(err, densentropy_core::Error::NegativePairDensity { .. }));
    assert!(renyi::renyi_decompose_samples(&samples, &grid, n, 2.0).is_ok());
    assert!(samples.diagnostics.negative > 0);
}

#[test]
fn normalization_failure_is_reported() {
    let f = models::hf_density(1.4, &sto6g()).unwrap();
    let g = GridParams {
        n_radial: 8,
        lebedev_order: 6,
        ..GridParams::default()
    }
    .build(f.molecule())
    .unwrap();
    assert!(matches!(
        shannon_decompose(&f, &g),
        Err(densentropy_core::Error::Normalization { .. })
    ));
}
