//! 1-D cubic interpolation utilities.
//!
//! Two flavours are used: plain cubic Hermite with fourth-order slope
//! estimates (for smooth resampling between grids) and Fritsch–Carlson
//! monotone cubic Hermite (for inverting monotone data, where preserving
//! monotonicity keeps `h_p > 0` in the hodograph transform).

/// Cubic Hermite interpolant on a uniform grid with O(h^4) slope estimates.
///
/// `xs` must be uniform ascending; evaluation clamps to the data range.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    slopes: Vec<f64>,
}

fn hermite(t: f64, h: f64, y0: f64, y1: f64, m0: f64, m1: f64) -> f64 {
    let t2 = t * t;
    let t3 = t2 * t;
    y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
        + m0 * h * (t3 - 2.0 * t2 + t)
        + y1 * (-2.0 * t3 + 3.0 * t2)
        + m1 * h * (t3 - t2)
}

fn uniform_slopes(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    assert!(n >= 5, "need at least 5 points for 4th-order slopes");
    let h = xs[1] - xs[0];
    let mut m = vec![0.0; n];
    for i in 0..n {
        m[i] = if i >= 2 && i + 2 < n {
            (ys[i - 2] - 8.0 * ys[i - 1] + 8.0 * ys[i + 1] - ys[i + 2]) / (12.0 * h)
        } else if i == 0 {
            (-25.0 * ys[0] + 48.0 * ys[1] - 36.0 * ys[2] + 16.0 * ys[3] - 3.0 * ys[4])
                / (12.0 * h)
        } else if i == 1 {
            (-3.0 * ys[0] - 10.0 * ys[1] + 18.0 * ys[2] - 6.0 * ys[3] + ys[4]) / (12.0 * h)
        } else if i + 2 == n {
            (3.0 * ys[n - 1] + 10.0 * ys[n - 2] - 18.0 * ys[n - 3] + 6.0 * ys[n - 4]
                - ys[n - 5])
                / (12.0 * h)
        } else {
            (25.0 * ys[n - 1] - 48.0 * ys[n - 2] + 36.0 * ys[n - 3] - 16.0 * ys[n - 4]
                + 3.0 * ys[n - 5])
                / (12.0 * h)
        };
    }
    m
}

impl CubicSpline {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Self {
        assert_eq!(xs.len(), ys.len());
        let slopes = uniform_slopes(&xs, &ys);
        CubicSpline { xs, ys, slopes }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        let h = self.xs[1] - self.xs[0];
        let mut i = ((x - self.xs[0]) / h).floor() as isize;
        i = i.clamp(0, n as isize - 2);
        let i = i as usize;
        let t = ((x - self.xs[i]) / h).clamp(0.0, 1.0);
        hermite(t, h, self.ys[i], self.ys[i + 1], self.slopes[i], self.slopes[i + 1])
    }

    pub fn eval_deriv(&self, x: f64) -> f64 {
        let n = self.xs.len();
        let h = self.xs[1] - self.xs[0];
        let mut i = ((x - self.xs[0]) / h).floor() as isize;
        i = i.clamp(0, n as isize - 2);
        let i = i as usize;
        let t = ((x - self.xs[i]) / h).clamp(0.0, 1.0);
        let (y0, y1) = (self.ys[i], self.ys[i + 1]);
        let (m0, m1) = (self.slopes[i], self.slopes[i + 1]);
        let t2 = t * t;
        (y0 * (6.0 * t2 - 6.0 * t) + m0 * h * (3.0 * t2 - 4.0 * t + 1.0)
            + y1 * (6.0 * t - 6.0 * t2)
            + m1 * h * (3.0 * t2 - 2.0 * t))
            / h
    }
}

/// Fritsch–Carlson monotone cubic Hermite on possibly non-uniform ascending
/// abscissae. Strictly monotone data yields a strictly monotone interpolant.
#[derive(Debug, Clone)]
pub struct MonotoneCubic {
    xs: Vec<f64>,
    ys: Vec<f64>,
    slopes: Vec<f64>,
}

impl MonotoneCubic {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Self {
        let n = xs.len();
        assert!(n >= 2 && xs.windows(2).all(|w| w[1] > w[0]), "abscissae must ascend");
        let mut d = vec![0.0; n - 1];
        for i in 0..n - 1 {
            d[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        }
        let mut m = vec![0.0; n];
        m[0] = d[0];
        m[n - 1] = d[n - 2];
        for i in 1..n - 1 {
            m[i] = if d[i - 1] * d[i] <= 0.0 { 0.0 } else { 0.5 * (d[i - 1] + d[i]) };
        }
        // Fritsch-Carlson limiter
        for i in 0..n - 1 {
            if d[i] == 0.0 {
                m[i] = 0.0;
                m[i + 1] = 0.0;
            } else {
                let a = m[i] / d[i];
                let b = m[i + 1] / d[i];
                let s = a * a + b * b;
                if s > 9.0 {
                    let tau = 3.0 / s.sqrt();
                    m[i] = tau * a * d[i];
                    m[i + 1] = tau * b * d[i];
                }
            }
        }
        MonotoneCubic { xs, ys, slopes: m }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        let i = match self.xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => i.min(n - 2),
            Err(0) => 0,
            Err(i) => (i - 1).min(n - 2),
        };
        let h = self.xs[i + 1] - self.xs[i];
        let t = ((x - self.xs[i]) / h).clamp(0.0, 1.0);
        hermite(t, h, self.ys[i], self.ys[i + 1], self.slopes[i], self.slopes[i + 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_spline_accuracy() {
        let mut errs = Vec::new();
        for n in [32usize, 64] {
            let xs: Vec<f64> = (0..=n).map(|i| i as f64 / n as f64).collect();
            let ys: Vec<f64> = xs.iter().map(|&x| (3.0 * x).sin()).collect();
            let sp = CubicSpline::new(xs, ys);
            let mut e = 0.0_f64;
            for k in 0..200 {
                let x = k as f64 / 199.0;
                e = e.max((sp.eval(x) - (3.0 * x).sin()).abs());
            }
            errs.push(e);
        }
        let order = (errs[0] / errs[1]).log2();
        assert!(order > 3.5, "cubic order {order}");
    }

    #[test]
    fn monotone_stays_monotone() {
        let xs: Vec<f64> = (0..=20).map(|i| i as f64 * 0.05).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| x + 0.3 * (5.0 * x).sin().abs()).collect();
        let sp = MonotoneCubic::new(xs, ys);
        let mut prev = sp.eval(0.0);
        for k in 1..=400 {
            let v = sp.eval(k as f64 / 400.0);
            assert!(v >= prev - 1e-14);
            prev = v;
        }
    }

    #[test]
    fn exact_on_linear_data() {
        let xs: Vec<f64> = (0..=10).map(|i| i as f64 * 0.1).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| 2.0 - 3.0 * x).collect();
        let sp = MonotoneCubic::new(xs.clone(), ys);
        for k in 0..=50 {
            let x = k as f64 * 0.02;
            assert!((sp.eval(x) - (2.0 - 3.0 * x)).abs() < 1e-14);
        }
    }
}
