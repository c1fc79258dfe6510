//! Scalar root finding: bisection on a bracket, with a helper that scans for
//! sign changes. Bisection is deliberately the only polish step used for
//! bifurcation wavenumbers and shooting parameters so results are
//! reproducible bit-for-bit across platforms.

use crate::{Error, Result};

/// Bisect `f` on `[lo, hi]` (must bracket a sign change) until the interval
/// is below `tol`. Returns the midpoint.
pub fn bisect(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo * fhi > 0.0 {
        return Err(Error::NoBracket { lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 || hi - lo < tol {
            return Ok(mid);
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Scan `[lo, hi]` with `n` subintervals and return every bracket `(a, b)`
/// where `f` changes sign.
pub fn scan_brackets(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let h = (hi - lo) / n as f64;
    let mut xa = lo;
    let mut fa = f(xa);
    for i in 1..=n {
        let xb = lo + i as f64 * h;
        let fb = f(xb);
        if fa == 0.0 {
            out.push((xa, xa));
        } else if fa * fb < 0.0 {
            out.push((xa, xb));
        }
        xa = xb;
        fa = fb;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_tanh_root() {
        // kappa = 2 tanh(kappa), positive root
        let f = |k: f64| k - 2.0 * k.tanh();
        let r = bisect(f, 0.5, 3.0, 1e-14).unwrap();
        assert!((r - 2.0 * r.tanh()).abs() < 1e-12);
        assert!((r - 1.9150080).abs() < 1e-6);
    }

    #[test]
    fn scan_finds_multiple_roots() {
        let f = |x: f64| (x).sin();
        let brs = scan_brackets(f, 0.5, 10.0, 200);
        assert_eq!(brs.len(), 3); // pi, 2pi, 3pi
    }
}
