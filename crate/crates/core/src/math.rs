//! Small numeric helpers shared by the integration and entropy code.

/// `ln |x|`, the logarithm used on partition terms that may carry a sign.
#[inline]
pub fn log_abs(x: f64) -> f64 {
    libm::log(libm::fabs(x))
}

/// `x ln|x|` with the convention `0 ln 0 = 0`.
#[inline]
pub fn xlogx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * log_abs(x)
    }
}

#[inline]
pub fn dist2(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    dx * dx + dy * dy + dz * dz
}

#[inline]
pub fn dist(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    libm::sqrt(dist2(a, b))
}

/// Pairwise (cascade) summation. The split points depend only on the
/// length, so the result is reproducible bit for bit.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const BLOCK: usize = 32;
    if values.len() <= BLOCK {
        let mut s = 0.0;
        for v in values {
            s += v;
        }
        return s;
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Double factorial `(2n-1)!!` for small `n`, with `(-1)!! = 1`.
pub(crate) fn odd_double_factorial(n: u32) -> f64 {
    let mut acc = 1.0;
    let mut k = 2 * n as i64 - 1;
    while k > 1 {
        acc *= k as f64;
        k -= 2;
    }
    acc
}
