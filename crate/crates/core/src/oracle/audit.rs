//! Pairwise overlap and facet-piercing audit of a 24-ball arrangement.

use serde::Serialize;

use crate::cell24::{self, VERTEX_COUNT};
use crate::horoball::{tangency_offset, Horoball};
use crate::lorentz::foot_on_hyperplane;

const AUDIT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OverlapAudit {
    /// Smallest signed gap over all 276 pairs.
    pub min_pair_offset: f64,
    /// Number of pairs with gap within the audit tolerance of zero.
    pub tangent_pairs: usize,
    /// Per vertex, the smallest signed distance from its horoball to the 18
    /// facet hyperplanes not incident to the vertex.
    pub min_facet_clearance: Vec<f64>,
    pub valid: bool,
}

impl OverlapAudit {
    pub fn min_clearance(&self) -> f64 {
        self.min_facet_clearance.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// `balls[i]` must be centered at vertex `i + 1`.
pub fn overlap_audit(balls: &[Horoball]) -> OverlapAudit {
    let cell = cell24::shared();
    let n = balls.len().min(VERTEX_COUNT);
    let mut min_pair = f64::INFINITY;
    let mut tangent = 0;
    for i in 0..n {
        for j in i + 1..n {
            let g = tangency_offset(&balls[i], &balls[j]).unwrap_or(f64::NEG_INFINITY);
            min_pair = min_pair.min(g);
            if g.abs() <= AUDIT_TOL {
                tangent += 1;
            }
        }
    }

    let planes: Vec<_> = (0..cell.facets().len())
        .map(|f| cell.facet_hyperplane(f).expect("facet hyperplane"))
        .collect();
    let mut clearances = Vec::with_capacity(n);
    for (i, ball) in balls.iter().enumerate().take(n) {
        let incident = cell.facets_at(i + 1);
        let mut worst = f64::INFINITY;
        for (f, plane) in planes.iter().enumerate() {
            if incident.contains(&f) {
                continue;
            }
            let c = match foot_on_hyperplane(ball.center(), plane) {
                Ok(foot) => ball.busemann(&foot),
                Err(_) => f64::NEG_INFINITY,
            };
            worst = worst.min(c);
        }
        clearances.push(worst);
    }
    let valid = n == VERTEX_COUNT
        && min_pair >= -AUDIT_TOL
        && clearances.iter().all(|&c| c >= -AUDIT_TOL);
    OverlapAudit { min_pair_offset: min_pair, tangent_pairs: tangent, min_facet_clearance: clearances, valid }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{arrangement_geometry, Family};

    #[test]
    fn base_arrangement() {
        let balls = arrangement_geometry(Family::B01, 0.0).unwrap();
        let a = overlap_audit(&balls);
        assert!(a.valid);
        assert!(a.min_pair_offset.abs() < 1e-12);
        assert_eq!(a.tangent_pairs, 96);
        let c0 = a.min_facet_clearance[0];
        assert!((c0 - 2f64.ln()).abs() < 1e-12);
        let spread = a.min_facet_clearance.iter().fold(0.0f64, |m, c| m.max((c - c0).abs()));
        assert!(spread < 1e-10);
    }

    #[test]
    fn facet_touching_and_piercing() {
        let x = 2f64.sqrt().ln();
        let mut balls = arrangement_geometry(Family::B12, x).unwrap();
        let a = overlap_audit(&balls);
        assert!(a.valid);
        assert!(a.min_facet_clearance[0].abs() < 1e-12);
        balls[0] = balls[0].blown_up(0.01);
        let a = overlap_audit(&balls);
        assert!(!a.valid);
        assert!(a.min_facet_clearance[0] < -0.005);
    }
}
