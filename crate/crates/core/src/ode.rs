//! Adaptive Dormand–Prince 5(4) integration for the small ODE systems used
//! by the laminar solver and the transverse eigenmode shooting.
//!
//! Steps are clipped so that every node of a requested uniform output grid
//! is hit exactly; the recorded profile can then be resampled with
//! [`crate::interp::CubicSpline`] without dense-output machinery.

/// Integrate `y' = f(t, y)` for a 2-component system from `a` to `b`,
/// recording the solution on a uniform grid with `n` intervals.
/// Returns the grid values (length `n + 1`).
pub fn integrate_to_grid(
    f: &dyn Fn(f64, [f64; 2]) -> [f64; 2],
    a: f64,
    b: f64,
    y0: [f64; 2],
    n: usize,
    rtol: f64,
) -> Vec<[f64; 2]> {
    let h_out = (b - a) / n as f64;
    let mut out = Vec::with_capacity(n + 1);
    out.push(y0);
    let mut y = y0;
    for i in 0..n {
        let t0 = a + i as f64 * h_out;
        let t1 = a + (i + 1) as f64 * h_out;
        y = integrate_span(f, t0, t1, y, rtol);
        out.push(y);
    }
    out
}

/// Integrate across `[t0, t1]` with adaptive steps, returning y(t1).
pub fn integrate_span(
    f: &dyn Fn(f64, [f64; 2]) -> [f64; 2],
    t0: f64,
    t1: f64,
    y0: [f64; 2],
    rtol: f64,
) -> [f64; 2] {
    let mut t = t0;
    let mut y = y0;
    let mut h = (t1 - t0) * 0.1;
    let atol = rtol;
    let hmin = (t1 - t0).abs() * 1e-14;
    while t < t1 {
        if t + h > t1 {
            h = t1 - t;
        }
        let (y5, err) = dp_step(f, t, y, h);
        let scale = atol + rtol * norm2(y).max(norm2(y5));
        let e = err / scale;
        if e <= 1.0 || h.abs() <= hmin {
            t += h;
            y = y5;
        }
        let factor = if e > 0.0 { 0.9 * e.powf(-0.2) } else { 5.0 };
        h *= factor.clamp(0.2, 5.0);
        if h.abs() < hmin {
            h = hmin.copysign(t1 - t0);
        }
    }
    y
}

fn norm2(y: [f64; 2]) -> f64 {
    (y[0] * y[0] + y[1] * y[1]).sqrt()
}

#[allow(clippy::needless_range_loop)]
fn dp_step(
    f: &dyn Fn(f64, [f64; 2]) -> [f64; 2],
    t: f64,
    y: [f64; 2],
    h: f64,
) -> ([f64; 2], f64) {
    const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
    const A: [[f64; 6]; 7] = [
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
        [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
        [
            19372.0 / 6561.0,
            -25360.0 / 2187.0,
            64448.0 / 6561.0,
            -212.0 / 729.0,
            0.0,
            0.0,
        ],
        [
            9017.0 / 3168.0,
            -355.0 / 33.0,
            46732.0 / 5247.0,
            49.0 / 176.0,
            -5103.0 / 18656.0,
            0.0,
        ],
        [
            35.0 / 384.0,
            0.0,
            500.0 / 1113.0,
            125.0 / 192.0,
            -2187.0 / 6784.0,
            11.0 / 84.0,
        ],
    ];
    const B5: [f64; 7] = [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
        0.0,
    ];
    const B4: [f64; 7] = [
        5179.0 / 57600.0,
        0.0,
        7571.0 / 16695.0,
        393.0 / 640.0,
        -92097.0 / 339200.0,
        187.0 / 2100.0,
        1.0 / 40.0,
    ];

    let mut k = [[0.0_f64; 2]; 7];
    k[0] = f(t, y);
    for s in 1..7 {
        let mut ys = y;
        for j in 0..s {
            ys[0] += h * A[s][j] * k[j][0];
            ys[1] += h * A[s][j] * k[j][1];
        }
        k[s] = f(t + C[s] * h, ys);
    }
    let mut y5 = y;
    let mut y4 = y;
    for s in 0..7 {
        y5[0] += h * B5[s] * k[s][0];
        y5[1] += h * B5[s] * k[s][1];
        y4[0] += h * B4[s] * k[s][0];
        y4[1] += h * B4[s] * k[s][1];
    }
    let err = ((y5[0] - y4[0]).powi(2) + (y5[1] - y4[1]).powi(2)).sqrt();
    (y5, err)
}
