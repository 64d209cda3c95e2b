use alloc::vec::Vec;

use crate::{Error, Result};

/// Radial nodes (bohr) and weights including the `r²` volume factor.
#[derive(Debug, Clone)]
pub struct RadialGrid {
    pub radii: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Gauss–Chebyshev (second kind) radial rule mapped to `[0, ∞)` through
/// `r = R (1 + q) / (1 − q)` with `q_i = cos(iπ/(n+1))`.
///
/// Each weight is the Chebyshev weight `π/(n+1) sin²θ_i` divided by the
/// implicit weight function `√(1 − q²)`, times `dr/dq = 2R/(1 − q)²` and `r²`.
pub fn radial_grid(n: usize, bragg_radius: f64) -> Result<RadialGrid> {
    if n == 0 {
        return Err(Error::InvalidArgument {
            what: "radial point count",
            value: 0.0,
        });
    }
    if !(bragg_radius > 0.0) || !bragg_radius.is_finite() {
        return Err(Error::InvalidArgument {
            what: "Bragg radius",
            value: bragg_radius,
        });
    }
    let step = core::f64::consts::PI / (n as f64 + 1.0);
    let mut radii = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 1..=n {
        let theta = i as f64 * step;
        let q = libm::cos(theta);
        let sin = libm::sin(theta);
        let r = bragg_radius * (1.0 + q) / (1.0 - q);
        let jacobian = 2.0 * bragg_radius / ((1.0 - q) * (1.0 - q));
        // sin²θ / √(1 − q²) = sin θ for θ in (0, π)
        let w = step * sin * jacobian * r * r;
        radii.push(r);
        weights.push(w);
    }
    Ok(RadialGrid { radii, weights })
}
