//! Projective (Lorentzian) model of hyperbolic 4-space.
//!
//! Points are nonzero vectors of `R^5` up to scale, with the bilinear form
//! `<x,y> = -x0 y0 + x1 y1 + x2 y2 + x3 y3 + x4 y4`. Proper points satisfy
//! `<x,x> < 0`, ideal points `<x,x> = 0` and outer points `<x,x> > 0`.
//! Hyperplanes are stored through their poles, so the linear form of a
//! hyperplane with pole `b` is `x -> <b,x>`.

use nalgebra::{Matrix2, Matrix5, Vector2, Vector5};

use crate::error::{Error, Result};

pub type Vec5 = Vector5<f64>;

/// `|<x,x>|` threshold (after `x0 = 1` normalization) below which a point is ideal.
pub const IDEAL_TOL: f64 = 1e-10;

/// Relative threshold used to detect the branch boundaries `g = 0` and `|g| = 1`.
pub const RELATION_TOL: f64 = 1e-10;

/// Lorentzian bilinear form of signature (1,4) on raw coordinate vectors.
#[inline]
pub fn lorentz_dot(x: &Vec5, y: &Vec5) -> f64 {
    -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3] + x[4] * y[4]
}

/// Position of a projective point relative to the absolute quadric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum PointKind {
    Interior,
    Ideal,
    Outer,
}

/// A point of real projective 4-space in homogeneous coordinates.
///
/// Coordinates are normalized to `x0 = 1` whenever `x0` is not (numerically)
/// zero, which covers every proper and ideal point. Points on the hyperplane
/// at infinity of the affine chart keep unit Euclidean length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectivePoint {
    coords: Vec5,
}

impl ProjectivePoint {
    pub fn new(coords: [f64; 5]) -> Result<Self> {
        Self::from_vector(Vec5::from(coords))
    }

    pub fn from_vector(v: Vec5) -> Result<Self> {
        let norm = v.norm();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        let coords = if v[0].abs() > 1e-12 * norm {
            v / v[0]
        } else {
            v / norm
        };
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &Vec5 {
        &self.coords
    }

    /// Self-product `<x,x>` of the normalized representative.
    pub fn norm_sq(&self) -> f64 {
        lorentz_dot(&self.coords, &self.coords)
    }

    pub fn classify(&self, tol: f64) -> PointKind {
        let q = self.norm_sq();
        if q < -tol {
            PointKind::Interior
        } else if q.abs() <= tol {
            PointKind::Ideal
        } else {
            PointKind::Outer
        }
    }

    pub fn kind(&self) -> PointKind {
        self.classify(IDEAL_TOL)
    }

    pub fn is_interior(&self) -> bool {
        self.kind() == PointKind::Interior
    }

    pub fn is_ideal(&self) -> bool {
        self.kind() == PointKind::Ideal
    }

    /// Representative on the upper sheet `<x,x> = -1, x0 > 0`.
    pub fn hyperboloid(&self) -> Result<Vec5> {
        let q = self.norm_sq();
        if q >= -IDEAL_TOL {
            return Err(Error::NotProperPoint(q));
        }
        let v = self.coords / (-q).sqrt();
        Ok(if v[0] < 0.0 { -v } else { v })
    }

    /// True when the two coordinate vectors are parallel (up to `tol`,
    /// measured on unit-length representatives).
    pub fn projectively_eq(&self, other: &Self, tol: f64) -> bool {
        let a = self.coords.normalize();
        let b = other.coords.normalize();
        (a - b).norm() <= tol || (a + b).norm() <= tol
    }

    /// Euclidean combination `(1 - t) a + t b` of the `x0 = 1` representatives.
    /// For `t` in `[0,1]` this walks the projective segment from `a` to `b`.
    pub fn lerp(a: &Self, b: &Self, t: f64) -> Result<Self> {
        Self::from_vector(a.coords * (1.0 - t) + b.coords * t)
    }
}

/// `<x,y>` on the `x0 = 1` representatives.
pub fn bilinear_form(x: &ProjectivePoint, y: &ProjectivePoint) -> f64 {
    lorentz_dot(&x.coords, &y.coords)
}

pub fn classify_point(x: &ProjectivePoint, tol: f64) -> PointKind {
    x.classify(tol)
}

/// Hyperbolic distance between two proper points.
pub fn distance(x: &ProjectivePoint, y: &ProjectivePoint) -> Result<f64> {
    let xx = x.norm_sq();
    let yy = y.norm_sq();
    if xx >= -IDEAL_TOL {
        return Err(Error::NotProperPoint(xx));
    }
    if yy >= -IDEAL_TOL {
        return Err(Error::NotProperPoint(yy));
    }
    let c = -bilinear_form(x, y) / (xx * yy).sqrt();
    Ok(c.max(1.0).acosh())
}

/// A hyperplane given by its pole; its linear form is `x -> <pole, x>`.
///
/// Spacelike poles are kept at unit self-product, which is the unit-normal
/// convention of a hyperplane that meets the model. Timelike poles (whose
/// polar misses the model) are kept at self-product `-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperplaneForm {
    pole: Vec5,
}

impl HyperplaneForm {
    pub fn from_pole(pole: Vec5) -> Result<Self> {
        let norm = pole.norm();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        let q = lorentz_dot(&pole, &pole);
        if q.abs() <= IDEAL_TOL * norm * norm {
            return Err(Error::DegeneratePole);
        }
        Ok(Self { pole: pole / q.abs().sqrt() })
    }

    /// Hyperplane through the given points (at least four in general position).
    pub fn through_points(points: &[ProjectivePoint]) -> Result<Self> {
        if points.len() < 4 {
            return Err(Error::DegeneratePole);
        }
        // Null vector of the incidence rows, via the normal equations.
        let mut gram = Matrix5::zeros();
        for p in points {
            let c = p.coords.normalize();
            gram += c * c.transpose();
        }
        let eig = gram.symmetric_eigen();
        let (imin, _) = eig
            .eigenvalues
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .expect("five eigenvalues");
        let mut sorted: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        sorted.sort_by(f64::total_cmp);
        if sorted[1] <= 1e-10 * sorted[4] {
            return Err(Error::DegeneratePole);
        }
        let covector: Vec5 = eig.eigenvectors.column(imin).into_owned();
        let mut pole = covector;
        pole[0] = -pole[0];
        Self::from_pole(pole)
    }

    pub fn pole(&self) -> &Vec5 {
        &self.pole
    }

    /// Coefficients `a` with `a . x = <pole, x>`.
    pub fn covector(&self) -> Vec5 {
        let mut a = self.pole;
        a[0] = -a[0];
        a
    }

    pub fn evaluate(&self, x: &ProjectivePoint) -> f64 {
        lorentz_dot(&self.pole, x.coords())
    }

    pub fn self_product(&self) -> f64 {
        lorentz_dot(&self.pole, &self.pole)
    }

    pub fn meets_model(&self) -> bool {
        self.self_product() > 0.0
    }

    /// Same hyperplane with the normal flipped so that `inside` evaluates positive.
    pub fn oriented_toward(self, inside: &ProjectivePoint) -> Self {
        if self.evaluate(inside) < 0.0 {
            Self { pole: -self.pole }
        } else {
            self
        }
    }

    pub fn contains(&self, x: &ProjectivePoint, tol: f64) -> bool {
        self.evaluate(x).abs() <= tol
    }
}

/// Polar hyperplane of a non-ideal point.
pub fn polar_hyperplane(x: &ProjectivePoint) -> Result<HyperplaneForm> {
    if x.is_ideal() {
        return Err(Error::IdealPole);
    }
    HyperplaneForm::from_pole(*x.coords())
}

/// Foot of the perpendicular from `x` onto the hyperplane `u`.
///
/// Also accepts ideal `x`; the foot from an ideal point is where the
/// geodesic through `x` orthogonal to `u` meets it.
pub fn foot_on_hyperplane(x: &ProjectivePoint, u: &HyperplaneForm) -> Result<ProjectivePoint> {
    let uu = u.self_product();
    if uu.abs() <= IDEAL_TOL {
        return Err(Error::DegeneratePole);
    }
    let xv = x.coords();
    let y = xv - u.pole() * (lorentz_dot(xv, u.pole()) / uu);
    ProjectivePoint::from_vector(y)
}

/// Point of the line `ab` nearest to `x`: Lorentz-orthogonal projection
/// of `x` onto `span{a, b}`.
pub fn foot_on_line(
    x: &ProjectivePoint,
    a: &ProjectivePoint,
    b: &ProjectivePoint,
) -> Result<ProjectivePoint> {
    if !x.is_interior() {
        return Err(Error::NotProperPoint(x.norm_sq()));
    }
    let (av, bv, xv) = (a.coords(), b.coords(), x.coords());
    let gram = Matrix2::new(
        lorentz_dot(av, av),
        lorentz_dot(av, bv),
        lorentz_dot(av, bv),
        lorentz_dot(bv, bv),
    );
    let scale = gram.abs().max().max(1.0);
    let det = gram.determinant();
    if det.abs() <= 1e-12 * scale * scale || a.projectively_eq(b, 1e-12) {
        return Err(Error::DegenerateLine);
    }
    // A line meets the model iff the restricted form is Lorentzian.
    if det > 0.0 {
        return Err(Error::LineOutsideModel);
    }
    let rhs = Vector2::new(lorentz_dot(xv, av), lorentz_dot(xv, bv));
    let coef = gram.try_inverse().ok_or(Error::DegenerateLine)? * rhs;
    let y = ProjectivePoint::from_vector(av * coef[0] + bv * coef[1])?;
    if !y.is_interior() {
        return Err(Error::LineOutsideModel);
    }
    Ok(y)
}

/// Relative position of two hyperplanes, read off their Gram entry.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum PairRelation {
    /// Same hyperplane with the same orientation (`g = 1`).
    Coincident,
    Perpendicular,
    /// Dihedral angle `arccos(-g)` between the two inward normals.
    IntersectAtAngle(f64),
    Parallel,
    /// Length of the common perpendicular.
    Ultraparallel(f64),
}

impl PairRelation {
    pub fn angle(&self) -> Option<f64> {
        match *self {
            PairRelation::Coincident => Some(0.0),
            PairRelation::Perpendicular => Some(std::f64::consts::FRAC_PI_2),
            PairRelation::IntersectAtAngle(a) => Some(a),
            _ => None,
        }
    }
}

pub fn pair_relation(u: &HyperplaneForm, v: &HyperplaneForm) -> PairRelation {
    let g = lorentz_dot(u.pole(), v.pole()) / (u.self_product() * v.self_product()).abs().sqrt();
    if (g - 1.0).abs() <= RELATION_TOL {
        PairRelation::Coincident
    } else if g.abs() <= RELATION_TOL {
        PairRelation::Perpendicular
    } else if (g + 1.0).abs() <= RELATION_TOL {
        PairRelation::Parallel
    } else if g.abs() < 1.0 {
        PairRelation::IntersectAtAngle((-g).acos())
    } else {
        PairRelation::Ultraparallel(g.abs().acosh())
    }
}

/// Linear map of `R^5` preserving the Lorentzian form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzTransform {
    matrix: Matrix5<f64>,
}

fn metric() -> Matrix5<f64> {
    Matrix5::from_diagonal(&Vec5::new(-1.0, 1.0, 1.0, 1.0, 1.0))
}

impl LorentzTransform {
    pub fn identity() -> Self {
        Self { matrix: Matrix5::identity() }
    }

    /// Wraps `matrix` after checking `M^T J M = J` to `1e-9`.
    pub fn from_matrix(matrix: Matrix5<f64>) -> Result<Self> {
        let j = metric();
        let residual = (matrix.transpose() * j * matrix - j).abs().max();
        if residual > 1e-9 {
            return Err(Error::NotIsometry(residual));
        }
        Ok(Self { matrix })
    }

    /// Map sending the standard basis to a Lorentz-orthonormal frame
    /// (`frame[0]` timelike unit, the rest spacelike unit).
    pub fn from_frame(frame: &[Vec5; 5]) -> Result<Self> {
        Self::from_matrix(Matrix5::from_columns(frame))
    }

    pub fn matrix(&self) -> &Matrix5<f64> {
        &self.matrix
    }

    pub fn inverse(&self) -> Self {
        // M^-1 = J M^T J for Lorentz matrices.
        let j = metric();
        Self { matrix: j * self.matrix.transpose() * j }
    }

    pub fn apply_vec(&self, v: &Vec5) -> Vec5 {
        self.matrix * v
    }

    pub fn apply(&self, p: &ProjectivePoint) -> ProjectivePoint {
        ProjectivePoint::from_vector(self.matrix * p.coords()).expect("isometries are invertible")
    }

    pub fn apply_hyperplane(&self, h: &HyperplaneForm) -> HyperplaneForm {
        HyperplaneForm { pole: self.matrix * h.pole() }
    }
}

/// Three unit spatial vectors (`x0 = 0`) orthogonal to each other and to the
/// spatial part of the ideal point `center`. The standard basis vectors are
/// fed to Gram–Schmidt in order of increasing overlap with the center
/// direction (ties broken by index), so the frame is reproducible.
pub fn ideal_point_frame(center: &ProjectivePoint) -> [Vec5; 3] {
    let c = center.coords();
    let dir = nalgebra::Vector4::new(c[1], c[2], c[3], c[4]).normalize();
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| dir[i].abs().total_cmp(&dir[j].abs()).then(i.cmp(&j)));
    let mut basis: Vec<nalgebra::Vector4<f64>> = vec![dir];
    for &k in &order {
        if basis.len() == 4 {
            break;
        }
        let mut w = nalgebra::Vector4::zeros();
        w[k] = 1.0;
        for b in &basis {
            w -= b * w.dot(b);
        }
        if w.norm() > 1e-8 {
            basis.push(w.normalize());
        }
    }
    let lift = |v: &nalgebra::Vector4<f64>| Vec5::new(0.0, v[0], v[1], v[2], v[3]);
    [lift(&basis[1]), lift(&basis[2]), lift(&basis[3])]
}

/// Gram–Schmidt in the Lorentzian metric. The first vector must be
/// timelike; the result is a Lorentz-orthonormal frame.
pub fn lorentz_gram_schmidt(vectors: &[Vec5; 5]) -> Result<[Vec5; 5]> {
    let mut frame = [Vec5::zeros(); 5];
    for (k, v) in vectors.iter().enumerate() {
        let mut w = *v;
        for f in frame.iter().take(k) {
            let ff = lorentz_dot(f, f);
            w -= f * (lorentz_dot(&w, f) / ff);
        }
        let q = lorentz_dot(&w, &w);
        let ok = if k == 0 { q < -1e-12 } else { q > 1e-12 };
        if !ok {
            return Err(Error::NotIsometry(q));
        }
        frame[k] = w / q.abs().sqrt();
    }
    if frame[0][0] < 0.0 {
        frame[0] = -frame[0];
    }
    Ok(frame)
}

#[cfg(test)]
mod tests {
    use super::*;

    const R: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn pt(c: [f64; 5]) -> ProjectivePoint {
        ProjectivePoint::new(c).unwrap()
    }

    #[test]
    fn bilinear_form_examples() {
        let o = pt([1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(bilinear_form(&o, &o), -1.0);
        let a1 = pt([1.0, R, R, 0.0, 0.0]);
        let a3 = pt([1.0, R, 0.0, R, 0.0]);
        assert!(bilinear_form(&a1, &a1).abs() < 1e-15);
        assert!((bilinear_form(&a1, &a3) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn classification() {
        assert_eq!(pt([1.0, 0.0, 0.0, 0.0, 0.0]).kind(), PointKind::Interior);
        assert_eq!(pt([1.0, 0.0, R, R, 0.0]).kind(), PointKind::Ideal);
        assert_eq!(pt([1.0, 2.0, 0.0, 0.0, 0.0]).kind(), PointKind::Outer);
        // scale does not matter
        assert_eq!(pt([-3.0, 0.0, -3.0 * R, -3.0 * R, 0.0]).kind(), PointKind::Ideal);
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(ProjectivePoint::new([0.0; 5]), Err(Error::ZeroVector));
    }

    #[test]
    fn distance_examples() {
        let t1 = pt([1.0, R, R / 2.0, R / 2.0, 0.0]);
        let t3 = pt([1.0, R / 2.0, R / 2.0, R / 2.0, R / 2.0]);
        let t4 = pt([1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!((distance(&t1, &t3).unwrap() - 2f64.sqrt().acosh()).abs() < 1e-12);
        assert_eq!(distance(&t4, &t4).unwrap(), 0.0);
        let a1 = pt([1.0, R, R, 0.0, 0.0]);
        assert!(matches!(distance(&a1, &t4), Err(Error::NotProperPoint(_))));
        let outer = pt([1.0, 2.0, 0.0, 0.0, 0.0]);
        assert!(matches!(distance(&t4, &outer), Err(Error::NotProperPoint(_))));
    }

    #[test]
    fn polar_examples() {
        let h = polar_hyperplane(&pt([0.0, 1.0, 0.0, 0.0, 0.0])).unwrap();
        assert!(h.contains(&pt([1.0, 0.0, 0.3, -0.2, 0.1]), 1e-15));
        assert!(!h.contains(&pt([1.0, 0.1, 0.0, 0.0, 0.0]), 1e-15));
        assert_eq!(h.self_product(), 1.0);

        let at_infinity = polar_hyperplane(&pt([1.0, 0.0, 0.0, 0.0, 0.0])).unwrap();
        assert_eq!(at_infinity.covector(), Vec5::new(-1.0, 0.0, 0.0, 0.0, 0.0));
        assert!(at_infinity.contains(&pt([0.0, 1.0, 2.0, 0.0, 0.0]), 1e-15));

        assert_eq!(polar_hyperplane(&pt([1.0, R, R, 0.0, 0.0])), Err(Error::IdealPole));
    }

    #[test]
    fn pole_polar_round_trip() {
        let p = pt([1.0, 1.5, -0.3, 0.2, 0.9]);
        let h = polar_hyperplane(&p).unwrap();
        let back = ProjectivePoint::from_vector(*h.pole()).unwrap();
        assert!(back.projectively_eq(&p, 1e-14));
    }

    #[test]
    fn hyperplane_through_points() {
        // octahedron A3 A4 A7 A8 A11 A24
        let verts = [
            pt([1.0, R, 0.0, R, 0.0]),
            pt([1.0, -R, 0.0, R, 0.0]),
            pt([1.0, 0.0, R, R, 0.0]),
            pt([1.0, 0.0, -R, R, 0.0]),
            pt([1.0, 0.0, 0.0, R, R]),
            pt([1.0, 0.0, 0.0, R, -R]),
        ];
        // A3 A4 A7 A8 is a square, so take a vertex off its plane.
        let h = HyperplaneForm::through_points(&[verts[0], verts[1], verts[2], verts[4]]).unwrap();
        for v in &verts {
            assert!(h.contains(v, 1e-12));
        }
        assert!((h.self_product() - 1.0).abs() < 1e-12);
        assert_eq!(HyperplaneForm::through_points(&verts[..4]), Err(Error::DegeneratePole));
        assert_eq!(
            HyperplaneForm::through_points(&verts[..3]),
            Err(Error::DegeneratePole)
        );
    }

    #[test]
    fn foot_on_hyperplane_examples() {
        let x4 = HyperplaneForm::from_pole(Vec5::new(0.0, 0.0, 0.0, 0.0, 1.0)).unwrap();
        let t4 = pt([1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(foot_on_hyperplane(&t4, &x4).unwrap().projectively_eq(&t4, 1e-15));
        let on = pt([1.0, 0.2, -0.1, 0.3, 0.0]);
        assert!(foot_on_hyperplane(&on, &x4).unwrap().projectively_eq(&on, 1e-15));
    }

    #[test]
    fn foot_on_line_rejects_bad_lines() {
        let t4 = pt([1.0, 0.0, 0.0, 0.0, 0.0]);
        let a = pt([1.0, R, R, 0.0, 0.0]);
        assert_eq!(foot_on_line(&t4, &a, &a), Err(Error::DegenerateLine));
        // both points outside, spanning a line that misses the ball
        let p = pt([1.0, 2.0, 0.0, 0.0, 0.0]);
        let q = pt([1.0, 2.0, 1.0, 0.0, 0.0]);
        assert_eq!(foot_on_line(&t4, &p, &q), Err(Error::LineOutsideModel));
    }

    #[test]
    fn pair_relation_branches() {
        let u = HyperplaneForm::from_pole(Vec5::new(0.0, 1.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(pair_relation(&u, &u), PairRelation::Coincident);
        assert_eq!(pair_relation(&u, &u).angle(), Some(0.0));

        let v = HyperplaneForm::from_pole(Vec5::new(0.0, 0.0, 1.0, 0.0, 0.0)).unwrap();
        assert_eq!(pair_relation(&u, &v), PairRelation::Perpendicular);

        // unit spacelike w with <u,w> = -cosh(1)
        let c = 1f64.cosh();
        let w = HyperplaneForm::from_pole(Vec5::new((c * c - 1.0).sqrt(), -c, 0.0, 0.0, 0.0))
            .unwrap();
        match pair_relation(&u, &w) {
            PairRelation::Ultraparallel(l) => assert!((l - 1.0).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }

        // <u,w> = -1 exactly: asymptotically parallel, not a NaN
        let w = HyperplaneForm::from_pole(Vec5::new(1.0, -1.0, 1.0, 0.0, 0.0)).unwrap();
        assert_eq!(pair_relation(&u, &w), PairRelation::Parallel);

        let half = HyperplaneForm::from_pole(Vec5::new(0.0, -0.5, 0.75f64.sqrt(), 0.0, 0.0)).unwrap();
        match pair_relation(&u, &half) {
            PairRelation::IntersectAtAngle(a) => {
                assert!((a - std::f64::consts::FRAC_PI_3).abs() < 1e-12)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn gram_schmidt_builds_isometry() {
        let vs = [
            Vec5::new(2.0, 0.3, -0.1, 0.4, 0.2),
            Vec5::new(0.1, 1.0, 0.2, 0.0, 0.3),
            Vec5::new(0.0, 0.5, 1.0, 0.1, 0.0),
            Vec5::new(0.3, 0.0, 0.1, 1.0, 0.2),
            Vec5::new(0.0, 0.2, 0.0, 0.4, 1.0),
        ];
        let frame = lorentz_gram_schmidt(&vs).unwrap();
        let g = LorentzTransform::from_frame(&frame).unwrap();
        let id = g.matrix() * g.inverse().matrix();
        assert!((id - Matrix5::identity()).abs().max() < 1e-12);
    }
}
