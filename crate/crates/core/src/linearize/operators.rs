//! Physical-coordinate differential operators evaluated on the flattened
//! grid through the chain rule
//!
//! ```text
//! d/dx = d/dx^ - (yhat xi' / (xi + d)) d/dyhat,
//! d/dy = (d / (xi + d)) d/dyhat.
//! ```
//!
//! Second derivatives are compositions of these first-order operators, so
//! every stencil stays O(h^2) (periodic centered in x, one-sided three-point
//! at the y boundary rows).

use crate::flow::WaveField;
use crate::grid::Field2;

/// Chain-rule operators for one field's flattening map.
pub struct FlatOps {
    pub d: f64,
    pub xi: Vec<f64>,
    pub xi_x: Vec<f64>,
}

impl FlatOps {
    pub fn new(field: &WaveField) -> Self {
        FlatOps { d: field.params.d, xi: field.xi.clone(), xi_x: field.xi_x() }
    }

    /// Physical x-derivative of a flattened-grid function.
    pub fn dx_phys(&self, u: &Field2) -> Field2 {
        let ux = u.dx();
        let uy = u.dy();
        let mut out = ux;
        for ix in 0..=u.spec.nx {
            let fac = self.xi_x[ix] / (self.xi[ix] + self.d);
            for iy in 0..=u.spec.ny {
                let yhat = u.spec.yhat(iy);
                *out.at_mut(ix, iy) -= yhat * fac * uy.at(ix, iy);
            }
        }
        out
    }

    /// Physical y-derivative of a flattened-grid function.
    pub fn dy_phys(&self, u: &Field2) -> Field2 {
        let uy = u.dy();
        let mut out = uy;
        for ix in 0..=u.spec.nx {
            let fac = self.d / (self.xi[ix] + self.d);
            for iy in 0..=u.spec.ny {
                *out.at_mut(ix, iy) *= fac;
            }
        }
        out
    }

    /// Physical Laplacian by operator composition.
    pub fn laplacian(&self, u: &Field2) -> Field2 {
        let ux = self.dx_phys(u);
        let uy = self.dy_phys(u);
        let uxx = self.dx_phys(&ux);
        let uyy = self.dy_phys(&uy);
        uxx.zip(&uyy, |a, b| a + b)
    }
}
