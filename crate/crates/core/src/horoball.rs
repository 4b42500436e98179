//! Horospheres and horoballs in the projective model.
//!
//! A horoball with ideal center `c` (normalized to `c0 = 1`) is the set of
//! proper points `x` with `-<x^, c> <= level`, where `x^` is the hyperboloid
//! representative of `x`. The Busemann function `ln(-<x^, c> / level)` is the
//! signed distance of `x` from the horosphere (negative inside), so moving the
//! horosphere outward by `t` multiplies the level by `e^t`.

use crate::error::{Error, Result};
use crate::lorentz::{ideal_point_frame, lorentz_dot, LorentzTransform, ProjectivePoint, Vec5};

/// Incidence threshold for horosphere membership and tangency.
pub const INCIDENCE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Containment {
    Inside,
    On,
    Outside,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Horoball {
    center: ProjectivePoint,
    level: f64,
}

impl Horoball {
    pub fn new(center: ProjectivePoint, level: f64) -> Result<Self> {
        if !center.is_ideal() {
            return Err(Error::CenterNotIdeal(center.norm_sq()));
        }
        if !(level.is_finite() && level > 0.0) {
            return Err(Error::DegenerateHoroball(level));
        }
        Ok(Self { center, level })
    }

    /// Horoball in the gauge of the horosphere equation with parameter `s`,
    /// i.e. the one whose horosphere meets the axis through the model center
    /// at `(1, 0, 0, 0, s)` once `center` is rotated to `(1, 0, 0, 0, 1)`.
    pub fn from_s_parameter(center: ProjectivePoint, s: f64) -> Result<Self> {
        if !(s > -1.0 && s < 1.0) {
            return Err(Error::DegenerateHoroball(s));
        }
        Self::new(center, ((1.0 - s) / (1.0 + s)).sqrt())
    }

    pub fn center(&self) -> &ProjectivePoint {
        &self.center
    }

    pub fn level(&self) -> f64 {
        self.level
    }

    /// Horoball with the same center whose horosphere is pushed outward by `t`
    /// (inward for negative `t`).
    pub fn blown_up(&self, t: f64) -> Self {
        Self { center: self.center, level: self.level * t.exp() }
    }

    /// Signed amount by which `self` is blown up relative to `other`.
    pub fn offset_from(&self, other: &Horoball) -> Result<f64> {
        if !self.center.projectively_eq(&other.center, 1e-12) {
            return Err(Error::CenterMismatch);
        }
        Ok((self.level / other.level).ln())
    }

    /// Signed hyperbolic distance from the horosphere; negative inside.
    /// Ideal points report `-inf` at the center and `+inf` elsewhere.
    pub fn busemann(&self, q: &ProjectivePoint) -> f64 {
        match q.hyperboloid() {
            Ok(h) => (-lorentz_dot(&h, self.center.coords()) / self.level).ln(),
            Err(_) if q.projectively_eq(&self.center, 1e-9) => f64::NEG_INFINITY,
            Err(_) => f64::INFINITY,
        }
    }

    pub fn contains(&self, q: &ProjectivePoint) -> Containment {
        let b = self.busemann(q);
        if b.abs() <= INCIDENCE_TOL {
            Containment::On
        } else if b < 0.0 {
            Containment::Inside
        } else {
            Containment::Outside
        }
    }

    /// Rotation of the model fixing its center and taking this horoball's
    /// center to `(1, 0, 0, 0, 1)`.
    pub fn canonical_gauge(&self) -> LorentzTransform {
        let c = self.center.coords();
        let [f1, f2, f3] = ideal_point_frame(&self.center);
        let axis = Vec5::new(0.0, c[1], c[2], c[3], c[4]);
        let frame = [Vec5::new(1.0, 0.0, 0.0, 0.0, 0.0), f1, f2, f3, axis];
        LorentzTransform::from_frame(&frame)
            .expect("rotation frame is orthonormal")
            .inverse()
    }

    /// The parameter `s` of the horosphere equation, computed by moving the
    /// horoball into the canonical gauge and reading off where it crosses the
    /// axis through the model center.
    pub fn s_parameter(&self) -> f64 {
        let origin = ProjectivePoint::new([1.0, 0.0, 0.0, 0.0, 0.0]).expect("nonzero");
        let on_axis = geodesic_crossing(self, &origin);
        let gauged = self.canonical_gauge().apply(&on_axis);
        gauged.coords()[4]
    }

    /// Value of the projective horosphere equation
    /// `(s - 1) <y,y> - (1 + s) (y0 - y4)^2` at the gauged point `y`.
    /// Positive on the center side, zero on the horosphere.
    pub fn equation_residual(&self, q: &ProjectivePoint) -> f64 {
        let s = self.s_parameter();
        let y = self.canonical_gauge().apply(q);
        let y = y.coords();
        let d = y[0] - y[4];
        (s - 1.0) * lorentz_dot(y, y) - (1.0 + s) * d * d
    }

    pub fn transformed(&self, g: &LorentzTransform) -> Self {
        let raw = g.apply_vec(self.center.coords());
        let center = ProjectivePoint::from_vector(raw).expect("isometries are invertible");
        // The level is tied to the c0 = 1 representative; rescale accordingly.
        Self { center, level: self.level / raw[0].abs() }
    }
}

/// Unique horoball centered at `center` whose boundary passes through `p`.
pub fn horosphere_through(center: &ProjectivePoint, p: &ProjectivePoint) -> Result<Horoball> {
    if !center.is_ideal() {
        return Err(Error::CenterNotIdeal(center.norm_sq()));
    }
    let h = p.hyperboloid().map_err(|_| Error::NotProperPoint(p.norm_sq()))?;
    Horoball::new(*center, -lorentz_dot(&h, center.coords()))
}

pub fn horosphere_contains(b: &Horoball, q: &ProjectivePoint) -> Containment {
    b.contains(q)
}

// Point at signed distance `busemann(p)` from `p` toward the center.
fn geodesic_crossing(b: &Horoball, p: &ProjectivePoint) -> ProjectivePoint {
    let ph = p.hyperboloid().expect("proper point");
    let c = b.center.coords();
    let a = -lorentz_dot(c, &ph);
    let u = c / a - ph;
    let t = b.busemann(p);
    ProjectivePoint::from_vector(ph * t.cosh() + u * t.sinh()).expect("nonzero")
}

/// Where the geodesic from the horoball center to `endpoint` crosses the
/// horosphere.
pub fn geodesic_intersection(b: &Horoball, endpoint: &ProjectivePoint) -> Result<ProjectivePoint> {
    if !endpoint.is_interior() {
        return Err(Error::NotProperPoint(endpoint.norm_sq()));
    }
    if b.busemann(endpoint) < -INCIDENCE_TOL {
        return Err(Error::EndpointInsideHoroball);
    }
    Ok(geodesic_crossing(b, endpoint))
}

/// Signed gap between two horoballs along the geodesic joining their
/// centers: positive when disjoint, zero when tangent, negative when they
/// overlap.
pub fn tangency_offset(b1: &Horoball, b2: &Horoball) -> Result<f64> {
    if b1.center.projectively_eq(&b2.center, 1e-12) {
        return Err(Error::CommonCenter);
    }
    // Any point of the common axis: the gap is the sum of its two Busemann values.
    let axis_point = ProjectivePoint::from_vector(b1.center.coords() + b2.center.coords())?;
    Ok(b1.busemann(&axis_point) + b2.busemann(&axis_point))
}

/// Length of the horocyclic arc subtending a chord of length `x`.
pub fn horocyclic_arc_length(x: f64) -> Result<f64> {
    if x < 0.0 || x.is_nan() {
        return Err(Error::NegativeChord(x));
    }
    Ok(2.0 * (x / 2.0).sinh())
}

/// Volume of the horoball piece spanned by a horospherical region of
/// intrinsic `(n-1)`-volume `area`.
pub fn horoball_piece_volume(area: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    if area < 0.0 || area.is_nan() {
        return Err(Error::NonpositiveVolume(area));
    }
    Ok(area / (n - 1) as f64)
}

/// Angle of parallelism `arcsin(1 / cosh s)` for perpendicular distance `s`.
pub fn parallel_angle_from_distance(s: f64) -> Result<f64> {
    if s.is_nan() || s <= 0.0 {
        return Err(Error::NonpositiveDistance(s));
    }
    Ok((1.0 / s.cosh()).asin())
}

/// Offset whose horocyclic arc ratio is `1 / sin(phi)`.
pub fn horocycle_offset_from_angle(phi: f64) -> Result<f64> {
    if !(phi > 0.0 && phi <= std::f64::consts::FRAC_PI_2) {
        return Err(Error::AngleOutOfRange(phi));
    }
    Ok((1.0 / phi.sin()).ln())
}

/// Total horoball volume in two congruent sectors sharing the edge between
/// two tangent horoballs, after moving the tangency point by `x` from the
/// balanced position. `v_balanced` is the total at `x = 0`.
pub fn sector_pair_volume(v_balanced: f64, x: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    if v_balanced.is_nan() || v_balanced <= 0.0 {
        return Err(Error::NonpositiveVolume(v_balanced));
    }
    let k = (n - 1) as f64;
    Ok(0.5 * v_balanced * ((k * x).exp() + (-k * x).exp()))
}

/// A horoball together with the cone (apex at its center) spanned by a set of
/// generating points. The cone is the union of the geodesic rays from the
/// center through the convex hull of the generators, continued to the
/// boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct HoroballSector {
    pub horoball: Horoball,
    pub generators: Vec<ProjectivePoint>,
}

impl HoroballSector {
    pub fn new(horoball: Horoball, generators: Vec<ProjectivePoint>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::ConeDegenerate);
        }
        Ok(Self { horoball, generators })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::distance;

    const R: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn pt(c: [f64; 5]) -> ProjectivePoint {
        ProjectivePoint::new(c).unwrap()
    }

    fn a1() -> ProjectivePoint {
        pt([1.0, R, R, 0.0, 0.0])
    }
    fn t1() -> ProjectivePoint {
        pt([1.0, R, R / 2.0, R / 2.0, 0.0])
    }
    fn t3() -> ProjectivePoint {
        pt([1.0, R / 2.0, R / 2.0, R / 2.0, R / 2.0])
    }
    fn t4() -> ProjectivePoint {
        pt([1.0, 0.0, 0.0, 0.0, 0.0])
    }

    #[test]
    fn symmetric_gauge_horosphere() {
        let c = pt([1.0, 0.0, 0.0, 0.0, 1.0]);
        let b = horosphere_through(&c, &t4()).unwrap();
        assert!(b.s_parameter().abs() < 1e-12);
        assert!(b.equation_residual(&t4()).abs() < 1e-12);
        // cartesian form: 2|h|^2/(1-s) + 4(h4 - (s+1)/2)^2/(1-s)^2 = 1 at s = 0
        let p = pt([1.0, R, 0.0, 0.0, 0.5]);
        let cart = 2.0 * R * R + 4.0 * (0.5f64 - 0.5).powi(2);
        assert!((cart - 1.0).abs() < 1e-15);
        assert_eq!(b.contains(&p), Containment::On);
    }

    #[test]
    fn s_parameter_round_trip() {
        for &s in &[-0.7, -0.2, 0.0, 0.35, 0.9] {
            let b = Horoball::from_s_parameter(a1(), s).unwrap();
            assert!((b.s_parameter() - s).abs() < 1e-12, "s = {s}");
        }
        assert!(Horoball::from_s_parameter(a1(), 1.0).is_err());
        assert!(Horoball::from_s_parameter(a1(), -1.0).is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(horosphere_through(&t4(), &t1()), Err(Error::CenterNotIdeal(_))));
        assert!(matches!(horosphere_through(&a1(), &a1()), Err(Error::NotProperPoint(_))));
        assert!(matches!(Horoball::new(a1(), 0.0), Err(Error::DegenerateHoroball(_))));
    }

    #[test]
    fn membership_examples() {
        let b0 = horosphere_through(&a1(), &t1()).unwrap();
        assert_eq!(b0.contains(&t1()), Containment::On);
        assert_eq!(b0.contains(&t4()), Containment::Outside);
        assert!(b0.equation_residual(&t1()).abs() < 1e-10);
        let b1 = horosphere_through(&a1(), &t3()).unwrap();
        assert_eq!(b1.contains(&t1()), Containment::Inside);
        assert!(b1.equation_residual(&t1()) > 0.0);
        assert_eq!(b1.contains(&a1()), Containment::Inside);
    }

    #[test]
    fn intersection_on_ray() {
        let b0 = horosphere_through(&a1(), &t1()).unwrap();
        // T1 is on the horosphere already
        let i = geodesic_intersection(&b0, &t1()).unwrap();
        assert!(i.projectively_eq(&t1(), 1e-12));
        // from T4 the crossing is at distance busemann(T4) = ln 2
        let i = geodesic_intersection(&b0, &t4()).unwrap();
        assert!((distance(&i, &t4()).unwrap() - 2f64.ln()).abs() < 1e-12);
        assert_eq!(b0.contains(&i), Containment::On);
        let b1 = horosphere_through(&a1(), &t3()).unwrap();
        assert_eq!(geodesic_intersection(&b1, &t1()), Err(Error::EndpointInsideHoroball));
    }

    #[test]
    fn tangency_examples() {
        let a3 = pt([1.0, R, 0.0, R, 0.0]);
        let b1 = horosphere_through(&a1(), &t1()).unwrap();
        let b3 = horosphere_through(&a3, &t1()).unwrap();
        assert!(tangency_offset(&b1, &b3).unwrap().abs() < 1e-12);
        assert!((tangency_offset(&b1, &b3.blown_up(0.3)).unwrap() + 0.3).abs() < 1e-12);
        assert_eq!(tangency_offset(&b1, &b1.blown_up(1.0)), Err(Error::CommonCenter));
    }

    #[test]
    fn offsets_compose() {
        let b = horosphere_through(&a1(), &t1()).unwrap();
        let c = b.blown_up(0.2).blown_up(-0.5);
        assert!((c.offset_from(&b).unwrap() + 0.3).abs() < 1e-12);
    }

    #[test]
    fn scalar_formulas() {
        assert_eq!(horocyclic_arc_length(0.0).unwrap(), 0.0);
        assert!((horocyclic_arc_length(2.0 * 1f64.asinh()).unwrap() - 2.0).abs() < 1e-14);
        let l = horocyclic_arc_length((11.0f64 / 8.0).acosh()).unwrap();
        assert!((l - 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert!(horocyclic_arc_length(-1.0).is_err());

        assert_eq!(horoball_piece_volume(0.0, 4).unwrap(), 0.0);
        assert_eq!(horoball_piece_volume(3.0, 4).unwrap(), 1.0);
        assert_eq!(horoball_piece_volume(1.0, 1), Err(Error::BadDimension(1)));

        let phi = parallel_angle_from_distance(2f64.sqrt().acosh()).unwrap();
        assert!((phi - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
        let phi = parallel_angle_from_distance(2f64.acosh()).unwrap();
        assert!((phi - std::f64::consts::FRAC_PI_6).abs() < 1e-12);
        assert!((parallel_angle_from_distance(1e-9).unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-6);
        assert!(parallel_angle_from_distance(0.0).is_err());

        let rho = horocycle_offset_from_angle(std::f64::consts::FRAC_PI_4).unwrap();
        assert!((rho - 2f64.sqrt().ln()).abs() < 1e-15);
        assert_eq!(horocycle_offset_from_angle(std::f64::consts::FRAC_PI_2).unwrap(), 0.0);
        assert!((horocycle_offset_from_angle(std::f64::consts::FRAC_PI_6).unwrap() - 2f64.ln()).abs() < 1e-15);
        assert!(horocycle_offset_from_angle(2.0).is_err());
    }

    #[test]
    fn sector_pair_volume_values() {
        assert_eq!(sector_pair_volume(0.7, 0.0, 4).unwrap(), 0.7);
        let x = 0.31;
        assert_eq!(sector_pair_volume(1.0, x, 4).unwrap(), sector_pair_volume(1.0, -x, 4).unwrap());
        let v = sector_pair_volume(1.0, 2f64.sqrt().ln(), 4).unwrap();
        let expected = (2.0 * 2f64.sqrt() + 1.0 / (2.0 * 2f64.sqrt())) / 2.0;
        assert!((v - expected).abs() < 1e-14);
        assert!((v - 1.59099).abs() < 1e-5);
        assert!(sector_pair_volume(1.0, 0.1, 1).is_err());
    }
}
