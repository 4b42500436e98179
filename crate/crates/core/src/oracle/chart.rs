//! Upper half-space chart centered at an ideal point.
//!
//! With `n` the ideal center (`n0 = 1`), `m = (1, -n1, ..., -n4) / 2` the
//! antipodal null vector (`<n,m> = -1`) and `e1, e2, e3` a spatial frame
//! orthogonal to both, a proper point is
//!
//! ```text
//! X(w, z) = (|w|^2 + z^2) / (2z) n + (1/z) m + sum_i (w_i / z) e_i
//! ```
//!
//! which is the usual isometry onto `{(w, z) : z > 0}` with metric
//! `(|dw|^2 + dz^2) / z^2`, sending `n` to infinity. Horospheres centered at
//! `n` become the horizontal planes `z = const`.

use crate::error::{Error, Result};
use crate::horoball::Horoball;
use crate::lorentz::{ideal_point_frame, lorentz_dot, ProjectivePoint, Vec5};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfspacePoint {
    pub w: [f64; 3],
    /// Height; zero for ideal points other than the chart center.
    pub z: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfspaceChart {
    center: ProjectivePoint,
    n: Vec5,
    m: Vec5,
    frame: [Vec5; 3],
}

pub fn build_chart(center: &ProjectivePoint) -> Result<HalfspaceChart> {
    if !center.is_ideal() {
        return Err(Error::CenterNotIdeal(center.norm_sq()));
    }
    let n = *center.coords();
    let m = Vec5::new(1.0, -n[1], -n[2], -n[3], -n[4]) / 2.0;
    Ok(HalfspaceChart { center: *center, n, m, frame: ideal_point_frame(center) })
}

impl HalfspaceChart {
    pub fn center(&self) -> &ProjectivePoint {
        &self.center
    }

    pub fn forward(&self, p: &ProjectivePoint) -> Result<HalfspacePoint> {
        if p.projectively_eq(&self.center, 1e-12) {
            return Err(Error::NotProperPoint(0.0));
        }
        let x = p.coords();
        let xn = lorentz_dot(x, &self.n);
        let mut w = [0.0; 3];
        for (wi, e) in w.iter_mut().zip(&self.frame) {
            *wi = -lorentz_dot(x, e) / xn;
        }
        let z = if p.is_ideal() { 0.0 } else { (-p.norm_sq()).sqrt() / (-xn).abs() };
        Ok(HalfspacePoint { w, z })
    }

    pub fn backward(&self, q: &HalfspacePoint) -> Result<ProjectivePoint> {
        // X(w, z) scaled by z.
        let w2: f64 = q.w.iter().map(|a| a * a).sum();
        let mut x = self.n * (0.5 * (w2 + q.z * q.z)) + self.m;
        for (wi, e) in q.w.iter().zip(&self.frame) {
            x += e * *wi;
        }
        ProjectivePoint::from_vector(x)
    }

    /// Height of the horosphere of a horoball centered at the chart center.
    pub fn horosphere_height(&self, b: &Horoball) -> Result<f64> {
        if !b.center().projectively_eq(&self.center, 1e-12) {
            return Err(Error::CenterMismatch);
        }
        Ok(1.0 / b.level())
    }
}

/// Hyperbolic distance in upper half-space coordinates.
pub fn halfspace_distance(a: &HalfspacePoint, b: &HalfspacePoint) -> f64 {
    let dw: f64 = a.w.iter().zip(&b.w).map(|(x, y)| (x - y) * (x - y)).sum();
    let dz = a.z - b.z;
    (1.0 + (dw + dz * dz) / (2.0 * a.z * b.z)).acosh()
}
