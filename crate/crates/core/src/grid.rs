//! Tensor grids on the flattened rectangle and second-order finite
//! differences.
//!
//! All fields in this crate live on uniform tensor grids in flattened
//! coordinates `(x, yhat)` with `x` spanning `[-L/2, L/2]` (the end column is
//! stored explicitly and duplicates the first one for periodic data) and
//! `yhat` spanning `[0, d]` with `yhat = 0` the channel bottom and
//! `yhat = d` the free surface.
//!
//! x-derivatives are periodic centered differences; y-derivatives are
//! centered in the interior and one-sided three-point at the two boundary
//! rows, so every stencil is O(h^2).

use num_complex::Complex64;

/// Uniform tensor grid: `nx` cells in x over `[-length/2, length/2]`,
/// `ny` cells in y over `[0, d]`. Nodes are stored inclusively, so there are
/// `(nx + 1) * (ny + 1)` of them and column `nx` coincides with column `0`
/// for periodic data.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GridSpec {
    pub nx: usize,
    pub ny: usize,
    pub length: f64,
    pub depth: f64,
}

impl GridSpec {
    pub fn new(nx: usize, ny: usize, length: f64, depth: f64) -> Self {
        assert!(nx >= 2 && ny >= 2, "grid needs at least 2 cells per direction");
        GridSpec { nx, ny, length, depth }
    }

    pub fn hx(&self) -> f64 {
        self.length / self.nx as f64
    }

    pub fn hy(&self) -> f64 {
        self.depth / self.ny as f64
    }

    pub fn x(&self, ix: usize) -> f64 {
        -0.5 * self.length + ix as f64 * self.hx()
    }

    pub fn yhat(&self, iy: usize) -> f64 {
        iy as f64 * self.hy()
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..=self.nx).map(|i| self.x(i)).collect()
    }

    /// Index of the column at x = 0. Requires `nx` even.
    pub fn mid(&self) -> usize {
        debug_assert!(self.nx % 2 == 0);
        self.nx / 2
    }

    /// Mirror column for the reflection x -> -x under periodic
    /// identification: 0 <-> 0 (the seam), i <-> nx - i.
    pub fn mirror(&self, ix: usize) -> usize {
        if ix == 0 {
            0
        } else {
            self.nx - ix
        }
    }
}

/// Scalar field sampled on a [`GridSpec`]; column-contiguous storage.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Field2 {
    pub spec: GridSpec,
    data: Vec<f64>,
}

impl Field2 {
    pub fn zeros(spec: GridSpec) -> Self {
        let n = (spec.nx + 1) * (spec.ny + 1);
        Field2 { spec, data: vec![0.0; n] }
    }

    pub fn from_fn(spec: GridSpec, mut f: impl FnMut(f64, f64) -> f64) -> Self {
        let mut out = Field2::zeros(spec);
        for ix in 0..=out.spec.nx {
            let x = out.spec.x(ix);
            for iy in 0..=out.spec.ny {
                let y = out.spec.yhat(iy);
                *out.at_mut(ix, iy) = f(x, y);
            }
        }
        out
    }

    #[inline]
    pub fn at(&self, ix: usize, iy: usize) -> f64 {
        self.data[ix * (self.spec.ny + 1) + iy]
    }

    #[inline]
    pub fn at_mut(&mut self, ix: usize, iy: usize) -> &mut f64 {
        &mut self.data[ix * (self.spec.ny + 1) + iy]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Values along row `iy` (one per column, including the duplicate end).
    pub fn row(&self, iy: usize) -> Vec<f64> {
        (0..=self.spec.nx).map(|ix| self.at(ix, iy)).collect()
    }

    /// Values along column `ix` from bottom to top.
    pub fn col(&self, ix: usize) -> Vec<f64> {
        (0..=self.spec.ny).map(|iy| self.at(ix, iy)).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Maximum deviation from evenness in x, `max |f(-x,y) - f(x,y)|`.
    pub fn even_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for ix in 0..=self.spec.nx {
            let jx = self.spec.mirror(ix);
            for iy in 0..=self.spec.ny {
                worst = worst.max((self.at(ix, iy) - self.at(jx, iy)).abs());
            }
        }
        worst
    }

    /// Periodic centered x-derivative. The duplicate end column is kept in
    /// sync with column 0.
    pub fn dx(&self) -> Field2 {
        let nx = self.spec.nx;
        let h2 = 2.0 * self.spec.hx();
        let mut out = Field2::zeros(self.spec.clone());
        for ix in 0..nx {
            let ip = (ix + 1) % nx;
            let im = (ix + nx - 1) % nx;
            for iy in 0..=self.spec.ny {
                *out.at_mut(ix, iy) = (self.at(ip, iy) - self.at(im, iy)) / h2;
            }
        }
        for iy in 0..=self.spec.ny {
            *out.at_mut(nx, iy) = out.at(0, iy);
        }
        out
    }

    /// y-derivative: centered interior, one-sided 3-point at the rows
    /// `iy = 0` and `iy = ny`.
    pub fn dy(&self) -> Field2 {
        let ny = self.spec.ny;
        let h = self.spec.hy();
        let mut out = Field2::zeros(self.spec.clone());
        for ix in 0..=self.spec.nx {
            *out.at_mut(ix, 0) =
                (-3.0 * self.at(ix, 0) + 4.0 * self.at(ix, 1) - self.at(ix, 2)) / (2.0 * h);
            for iy in 1..ny {
                *out.at_mut(ix, iy) = (self.at(ix, iy + 1) - self.at(ix, iy - 1)) / (2.0 * h);
            }
            *out.at_mut(ix, ny) =
                (3.0 * self.at(ix, ny) - 4.0 * self.at(ix, ny - 1) + self.at(ix, ny - 2))
                    / (2.0 * h);
        }
        out
    }

    /// One-sided O(h^2) y-derivative of the surface row only.
    pub fn dy_at_surface(&self, ix: usize) -> f64 {
        let ny = self.spec.ny;
        let h = self.spec.hy();
        (3.0 * self.at(ix, ny) - 4.0 * self.at(ix, ny - 1) + self.at(ix, ny - 2)) / (2.0 * h)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Field2 {
        Field2 { spec: self.spec.clone(), data: self.data.iter().map(|&v| f(v)).collect() }
    }

    pub fn zip(&self, other: &Field2, f: impl Fn(f64, f64) -> f64) -> Field2 {
        assert_eq!(self.spec, other.spec);
        Field2 {
            spec: self.spec.clone(),
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    /// Reflect in x about 0 (periodic identification of the seam column).
    pub fn reflect_x(&self) -> Field2 {
        let mut out = Field2::zeros(self.spec.clone());
        for ix in 0..=self.spec.nx {
            let jx = self.spec.mirror(ix);
            for iy in 0..=self.spec.ny {
                *out.at_mut(ix, iy) = self.at(jx, iy);
            }
        }
        out
    }
}

/// Complex-valued counterpart of [`Field2`], used by the Bloch transform.
#[derive(Debug, Clone, PartialEq)]
pub struct CField2 {
    pub spec: GridSpec,
    data: Vec<Complex64>,
}

impl CField2 {
    pub fn zeros(spec: GridSpec) -> Self {
        let n = (spec.nx + 1) * (spec.ny + 1);
        CField2 { spec, data: vec![Complex64::new(0.0, 0.0); n] }
    }

    pub fn from_real(f: &Field2) -> Self {
        CField2 {
            spec: f.spec.clone(),
            data: f.data().iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }

    pub fn from_fn(spec: GridSpec, mut f: impl FnMut(f64, f64) -> Complex64) -> Self {
        let mut out = CField2::zeros(spec);
        for ix in 0..=out.spec.nx {
            let x = out.spec.x(ix);
            for iy in 0..=out.spec.ny {
                let y = out.spec.yhat(iy);
                *out.at_mut(ix, iy) = f(x, y);
            }
        }
        out
    }

    #[inline]
    pub fn at(&self, ix: usize, iy: usize) -> Complex64 {
        self.data[ix * (self.spec.ny + 1) + iy]
    }

    #[inline]
    pub fn at_mut(&mut self, ix: usize, iy: usize) -> &mut Complex64 {
        &mut self.data[ix * (self.spec.ny + 1) + iy]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, v| m.max(v.norm()))
    }

    pub fn axpy(&mut self, alpha: Complex64, other: &CField2) {
        assert_eq!(self.spec, other.spec);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += alpha * b;
        }
    }
}
