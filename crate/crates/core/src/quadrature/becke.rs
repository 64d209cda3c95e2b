use alloc::vec;
use alloc::vec::Vec;

use crate::math::dist;
use crate::molecule::MIN_SEPARATION;
use crate::{Error, Result};

/// Smoothing parameters of the fuzzy-cell partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BeckeParams {
    /// Number of iterations of `p(μ) = ½μ(3 − μ²)`.
    pub stiffness: u32,
    /// Shift cell boundaries according to the atomic radii.
    pub size_adjust: bool,
}

impl Default for BeckeParams {
    fn default() -> Self {
        Self {
            stiffness: 3,
            size_adjust: true,
        }
    }
}

/// Precomputed pair data for evaluating Becke cell weights.
#[derive(Debug, Clone)]
pub struct BeckePartition {
    centers: Vec<[f64; 3]>,
    inv_dist: Vec<f64>,
    adjust: Vec<f64>,
    stiffness: u32,
}

impl BeckePartition {
    /// `centers` holds (position, radius) pairs; radii only matter with size adjustment.
    pub fn new(centers: &[([f64; 3], f64)], params: BeckeParams) -> Result<Self> {
        if centers.is_empty() {
            return Err(Error::Empty("Becke center list"));
        }
        if params.stiffness == 0 {
            return Err(Error::InvalidArgument {
                what: "Becke stiffness",
                value: 0.0,
            });
        }
        let n = centers.len();
        let mut inv_dist = vec![0.0; n * n];
        let mut adjust = vec![0.0; n * n];
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let d = dist(&centers[a].0, &centers[b].0);
                if !(d >= MIN_SEPARATION) {
                    return Err(Error::CoincidentCenters {
                        first: a.min(b),
                        second: a.max(b),
                    });
                }
                inv_dist[a * n + b] = 1.0 / d;
                if params.size_adjust {
                    let (ra, rb) = (centers[a].1, centers[b].1);
                    if !(ra > 0.0 && rb > 0.0) {
                        return Err(Error::InvalidArgument {
                            what: "Becke atomic radius",
                            value: if ra > 0.0 { rb } else { ra },
                        });
                    }
                    let chi = ra / rb;
                    let u = (chi - 1.0) / (chi + 1.0);
                    let mut aab = u / (u * u - 1.0);
                    aab = aab.clamp(-0.5, 0.5);
                    adjust[a * n + b] = aab;
                }
            }
        }
        Ok(Self {
            centers: centers.iter().map(|c| c.0).collect(),
            inv_dist,
            adjust,
            stiffness: params.stiffness,
        })
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    #[inline]
    fn cell(&self, nu: f64) -> f64 {
        let mut f = nu;
        for _ in 0..self.stiffness {
            f = 0.5 * f * (3.0 - f * f);
        }
        0.5 * (1.0 - f)
    }

    /// Fills `out` (length = number of centers) with ω_A(point); `scratch`
    /// must have the same length.
    pub fn weights_into(&self, point: &[f64; 3], out: &mut [f64], scratch: &mut [f64]) {
        let n = self.centers.len();
        if n == 1 {
            out[0] = 1.0;
            return;
        }
        for (d, c) in scratch.iter_mut().zip(&self.centers) {
            *d = dist(point, c);
        }
        let mut total = 0.0;
        for a in 0..n {
            let mut p = 1.0;
            for b in 0..n {
                if a == b {
                    continue;
                }
                let mu = (scratch[a] - scratch[b]) * self.inv_dist[a * n + b];
                let aab = self.adjust[a * n + b];
                let nu = mu + aab * (1.0 - mu * mu);
                p *= self.cell(nu);
                if p == 0.0 {
                    break;
                }
            }
            out[a] = p;
            total += p;
        }
        for w in out.iter_mut() {
            *w /= total;
        }
    }

    /// Weight of a single cell at `point`.
    pub fn weight(&self, atom: usize, point: &[f64; 3]) -> f64 {
        let n = self.centers.len();
        let mut out = vec![0.0; n];
        let mut scratch = vec![0.0; n];
        self.weights_into(point, &mut out, &mut scratch);
        out[atom]
    }
}

/// Becke fuzzy-cell weights ω_A(point), one per center.
pub fn becke_weights(
    point: [f64; 3],
    centers: &[([f64; 3], f64)],
    params: BeckeParams,
) -> Result<Vec<f64>> {
    if point.iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFinite("Becke evaluation point"));
    }
    let part = BeckePartition::new(centers, params)?;
    let mut out = vec![0.0; centers.len()];
    let mut scratch = vec![0.0; centers.len()];
    part.weights_into(&point, &mut out, &mut scratch);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLAIN: BeckeParams = BeckeParams {
        stiffness: 3,
        size_adjust: false,
    };

    #[test]
    fn single_center_is_one() {
        let w = becke_weights([3.0, -2.0, 7.0], &[([0.0; 3], 1.0)], PLAIN).unwrap();
        assert_eq!(w, vec![1.0]);
    }

    #[test]
    fn bisector_plane_splits_evenly() {
        let c = [([0.0, 0.0, -0.7], 0.66), ([0.0, 0.0, 0.7], 0.66)];
        for params in [PLAIN, BeckeParams::default()] {
            let w = becke_weights([1.3, -0.4, 0.0], &c, params).unwrap();
            assert_eq!(w, vec![0.5, 0.5]);
        }
    }

    #[test]
    fn nucleus_belongs_to_its_cell() {
        let c = [([0.0, 0.0, -0.7], 0.66), ([0.0, 0.0, 0.7], 1.3)];
        for params in [PLAIN, BeckeParams::default()] {
            let w = becke_weights([0.0, 0.0, -0.7], &c, params).unwrap();
            assert_eq!(w, vec![1.0, 0.0]);
        }
    }

    #[test]
    fn coincident_centers_rejected() {
        let c = [([1.0, 0.0, 0.0], 1.0), ([1.0, 0.0, 0.0], 1.0)];
        assert!(matches!(
            becke_weights([0.0; 3], &c, PLAIN),
            Err(Error::CoincidentCenters { .. })
        ));
    }

    #[test]
    fn size_adjust_moves_boundary_toward_small_atom() {
        let c = [([0.0, 0.0, 0.0], 0.5), ([0.0, 0.0, 2.0], 1.5)];
        let w = becke_weights([0.0, 0.0, 1.0], &c, BeckeParams::default()).unwrap();
        assert!(w[1] > 0.5);
        let a = BeckePartition::new(&c, BeckeParams::default()).unwrap();
        assert_eq!(a.adjust[1], -a.adjust[2]);
        assert!(a.adjust[1].abs() <= 0.5);
    }
}
