use alloc::vec::Vec;

use super::lebedev_tables::LEBEDEV_TABLES;
use crate::{Error, Result};

/// Octahedral orbit families of the Lebedev–Laikov construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Orbit {
    /// (±1, 0, 0): 6 points.
    A1,
    /// (0, ±a, ±a), a = 1/√2: 12 points.
    A2,
    /// (±a, ±a, ±a), a = 1/√3: 8 points.
    A3,
    /// (±a, ±a, ±b), b = √(1 − 2a²): 24 points.
    Bk,
    /// (±a, ±b, 0), b = √(1 − a²): 24 points.
    Ck,
    /// (±a, ±b, ±c), c = √(1 − a² − b²): 48 points.
    Dk,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Generator {
    pub orbit: Orbit,
    pub a: f64,
    pub b: f64,
    pub v: f64,
}

/// Node counts with an embedded rule, ascending.
pub const SUPPORTED_LEBEDEV: &[usize] = &[6, 14, 26, 38, 50, 86, 110, 146, 170, 194, 302, 350, 434, 590];

/// Angular quadrature on the unit sphere; weights sum to one.
#[derive(Debug, Clone)]
pub struct LebedevRule {
    pub nodes: Vec<[f64; 3]>,
    pub weights: Vec<f64>,
    /// Highest spherical-harmonic degree integrated exactly.
    pub algebraic_order: u32,
}

impl LebedevRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn push_signed(out: &mut Vec<[f64; 3]>, p: [f64; 3]) {
    // every sign combination of the nonzero components
    for mask in 0..8u32 {
        let mut q = p;
        let mut skip = false;
        for (k, c) in q.iter_mut().enumerate() {
            if mask & (1 << k) != 0 {
                if *c == 0.0 {
                    skip = true;
                    break;
                }
                *c = -*c;
            }
        }
        if !skip {
            out.push(q);
        }
    }
}

fn expand(g: &Generator, out: &mut Vec<[f64; 3]>) {
    match g.orbit {
        Orbit::A1 => {
            for k in 0..3 {
                let mut p = [0.0; 3];
                p[k] = 1.0;
                push_signed(out, p);
            }
        }
        Orbit::A2 => {
            let a = libm::sqrt(0.5);
            for k in 0..3 {
                let mut p = [a; 3];
                p[k] = 0.0;
                push_signed(out, p);
            }
        }
        Orbit::A3 => push_signed(out, [libm::sqrt(1.0 / 3.0); 3]),
        Orbit::Bk => {
            let b = libm::sqrt(1.0 - 2.0 * g.a * g.a);
            for k in 0..3 {
                let mut p = [g.a; 3];
                p[k] = b;
                push_signed(out, p);
            }
        }
        Orbit::Ck => {
            let b = libm::sqrt(1.0 - g.a * g.a);
            let base = [g.a, b, 0.0];
            for perm in PERMUTATIONS {
                push_signed(out, [base[perm[0]], base[perm[1]], base[perm[2]]]);
            }
        }
        Orbit::Dk => {
            let c = libm::sqrt(1.0 - g.a * g.a - g.b * g.b);
            let base = [g.a, g.b, c];
            for perm in PERMUTATIONS {
                push_signed(out, [base[perm[0]], base[perm[1]], base[perm[2]]]);
            }
        }
    }
}

/// Lebedev–Laikov rule with `n_nodes` points.
pub fn lebedev_grid(n_nodes: usize) -> Result<LebedevRule> {
    let &(_, order, generators) = LEBEDEV_TABLES
        .iter()
        .find(|(n, _, _)| *n == n_nodes)
        .ok_or(Error::UnsupportedLebedev {
            requested: n_nodes,
            supported: SUPPORTED_LEBEDEV,
        })?;
    let mut nodes = Vec::with_capacity(n_nodes);
    let mut weights = Vec::with_capacity(n_nodes);
    for g in generators {
        let before = nodes.len();
        expand(g, &mut nodes);
        weights.resize(nodes.len(), g.v);
        debug_assert!(nodes.len() > before);
    }
    debug_assert_eq!(nodes.len(), n_nodes);
    Ok(LebedevRule {
        nodes,
        weights,
        algebraic_order: order,
    })
}
