//! Convex cross-sections of cones on a horosphere.

/// Convex Euclidean 3-polytope given by its vertices, in intrinsic
/// horospherical coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeSection {
    pub vertices: Vec<[f64; 3]>,
}

type P3 = [f64; 3];

fn sub(a: &P3, b: &P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: &P3, b: &P3) -> P3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: &P3, b: &P3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn tetra_volume(a: &P3, b: &P3, c: &P3, d: &P3) -> f64 {
    dot(&sub(b, a), &cross(&sub(c, a), &sub(d, a))).abs() / 6.0
}

impl ConeSection {
    pub fn new(vertices: Vec<[f64; 3]>) -> Self {
        Self { vertices }
    }

    /// Euclidean volume by fan triangulation from the first vertex: every
    /// hull face not containing it is fanned into triangles, each forming a
    /// tetrahedron with that vertex.
    pub fn volume(&self) -> f64 {
        let pts = &self.vertices;
        if pts.len() < 4 {
            return 0.0;
        }
        let scale = pts
            .iter()
            .flat_map(|p| p.iter())
            .fold(0.0f64, |m, v| m.max(v.abs()))
            .max(1e-300);
        let eps = 1e-10 * scale;
        let apex = pts[0];
        let mut seen_planes: Vec<(P3, f64)> = Vec::new();
        let mut total = 0.0;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                for k in j + 1..pts.len() {
                    let normal = cross(&sub(&pts[j], &pts[i]), &sub(&pts[k], &pts[i]));
                    let len = dot(&normal, &normal).sqrt();
                    if len <= eps * scale {
                        continue;
                    }
                    let nrm = [normal[0] / len, normal[1] / len, normal[2] / len];
                    let off = dot(&nrm, &pts[i]);
                    let side: Vec<f64> = pts.iter().map(|p| dot(&nrm, p) - off).collect();
                    let (nrm, off) = if side.iter().all(|&s| s <= eps) {
                        (nrm, off)
                    } else if side.iter().all(|&s| s >= -eps) {
                        ([-nrm[0], -nrm[1], -nrm[2]], -off)
                    } else {
                        continue;
                    };
                    if seen_planes
                        .iter()
                        .any(|(n, o)| dot(n, &nrm) > 1.0 - 1e-9 && (o - off).abs() <= eps)
                    {
                        continue;
                    }
                    seen_planes.push((nrm, off));
                    if (dot(&nrm, &apex) - off).abs() <= eps {
                        continue;
                    }
                    let face: Vec<P3> =
                        pts.iter().filter(|p| (dot(&nrm, p) - off).abs() <= eps).copied().collect();
                    total += fan_face(&apex, &face, &nrm);
                }
            }
        }
        total
    }
}

// Orders the coplanar face vertices by angle and fans them from the first.
fn fan_face(apex: &P3, face: &[P3], normal: &P3) -> f64 {
    let n = face.len() as f64;
    let c = [
        face.iter().map(|p| p[0]).sum::<f64>() / n,
        face.iter().map(|p| p[1]).sum::<f64>() / n,
        face.iter().map(|p| p[2]).sum::<f64>() / n,
    ];
    let u = {
        let d = sub(&face[0], &c);
        let l = dot(&d, &d).sqrt();
        [d[0] / l, d[1] / l, d[2] / l]
    };
    let v = cross(normal, &u);
    let mut ordered: Vec<(f64, P3)> = face
        .iter()
        .map(|p| {
            let d = sub(p, &c);
            (dot(&d, &v).atan2(dot(&d, &u)), *p)
        })
        .collect();
    ordered.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut vol = 0.0;
    for w in 1..ordered.len().saturating_sub(1) {
        vol += tetra_volume(apex, &ordered[0].1, &ordered[w].1, &ordered[w + 1].1);
    }
    vol
}
