//! Independent numeric verification path: half-space charts, exact
//! horospherical cross-sections, Monte Carlo volumes and geometric
//! re-derivation of the packing constants. Nothing here evaluates a closed-form
//! density.

mod audit;
mod chart;
mod mc;
mod section;

pub use audit::{overlap_audit, OverlapAudit};
pub use chart::{build_chart, halfspace_distance, HalfspaceChart, HalfspacePoint};
pub use mc::{sector_volume_mc, McEstimate, MIN_MC_SAMPLES};
pub use section::ConeSection;

use rayon::prelude::*;
use serde::Serialize;

use crate::cell24::{self, cell_volume_constants};
use crate::error::{Error, Result};
use crate::families::{arrangement_geometry, Family};
use crate::horoball::{horosphere_through, Horoball};
use crate::lorentz::{distance, ProjectivePoint};

/// Cross-section of the cone at `vertex` spanned by `generators` with the
/// horosphere of `b`, in intrinsic coordinates of the horosphere.
pub fn cone_section(
    vertex: usize,
    generators: &[ProjectivePoint],
    b: &Horoball,
) -> Result<ConeSection> {
    let apex = cell24::shared().vertex(vertex)?;
    let chart = build_chart(apex)?;
    let t = chart.horosphere_height(b)?;
    let mut vertices = Vec::with_capacity(generators.len());
    for g in generators {
        let p = chart.forward(g)?;
        vertices.push([p.w[0] / t, p.w[1] / t, p.w[2] / t]);
    }
    Ok(ConeSection::new(vertices))
}

/// Volume of the part of `b` inside the cone at `vertex` spanned by
/// `generators`: intrinsic volume of the horospherical cross-section over 3.
pub fn sector_volume_exact(
    vertex: usize,
    generators: &[ProjectivePoint],
    b: &Horoball,
) -> Result<f64> {
    let section = cone_section(vertex, generators, b)?;
    let area = section.volume();
    let scale: f64 = section
        .vertices
        .iter()
        .flat_map(|p| p.iter())
        .fold(0.0, |m, v| m.max(v.abs()));
    if area.is_nan() || area <= 1e-12 * scale.powi(3) {
        return Err(Error::ConeDegenerate);
    }
    Ok(area / 3.0)
}

/// Horoball at `A1` of the base arrangement: its horosphere passes through
/// the midpoints of the edges at `A1`.
pub fn base_horoball() -> Horoball {
    let pts = cell24::shared().special_points();
    horosphere_through(&pts.t0, &pts.t1).expect("edge midpoint is proper")
}

/// Generators of the first characteristic cone at `vertex`.
pub fn first_sector(vertex: usize) -> Result<[ProjectivePoint; 4]> {
    let cell = cell24::shared();
    let flag = cell.flags_at(vertex)?[0];
    cell.flag_simplex(&flag)
}

/// Horoball volume per characteristic simplex in the base arrangement.
pub fn v0_oracle() -> f64 {
    let gens = first_sector(1).expect("vertex 1 exists");
    sector_volume_exact(1, &gens, &base_horoball()).expect("characteristic cone is proper")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RhoTarget {
    Rho1,
    Rho2,
    Rho3,
    Rho4,
}

/// Re-derives an offset constant from horosphere crossings.
///
/// * `Rho1`: from the crossing of the base horosphere on `A1A3` (the edge
///   midpoint) to the crossing of the horosphere through the facet center.
/// * `Rho2`: from the crossing of the horosphere through the facet center on
///   the geodesic `A1T` to `T`.
/// * `Rho3`: from `Q` (foot of `T` on `A1A10`) to `K`, the crossing of the
///   horosphere through `T` with `A1A10`.
/// * `Rho4`: from `Q` to the midpoint `H` of `A1A10`.
pub fn derive_rho_numeric(target: RhoTarget) -> f64 {
    let pts = cell24::shared().special_points();
    let d = |a: &ProjectivePoint, b: &ProjectivePoint| distance(a, b).expect("proper points");
    match target {
        RhoTarget::Rho1 => d(&pts.i0, &pts.i1),
        RhoTarget::Rho2 => d(&pts.i2, &pts.t),
        RhoTarget::Rho3 => d(&pts.q, &pts.i5),
        RhoTarget::Rho4 => d(&pts.q, &pts.h),
    }
}

/// Polyhedral density of a family member computed by summing exact sector
/// volumes over all 1152 characteristic cones.
pub fn density_from_scratch(family: Family, x: f64) -> Result<f64> {
    let balls = arrangement_geometry(family, x)?;
    let cell = cell24::shared();
    let per_vertex: Vec<Result<f64>> = (1..=cell24::VERTEX_COUNT)
        .into_par_iter()
        .map(|i| {
            let mut sum = 0.0;
            for flag in cell.flags_at(i)? {
                let gens = cell.flag_simplex(&flag)?;
                sum += sector_volume_exact(i, &gens, &balls[i - 1])?;
            }
            Ok(sum)
        })
        .collect();
    let mut total = 0.0;
    for v in per_vertex {
        total += v?;
    }
    Ok(total / cell_volume_constants().vol_p24)
}
