//! The four one-parameter horoball families, their densities, constants and
//! optimization.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::cell24::{self, cell_volume_constants, SECTORS_PER_VERTEX, VERTEX_COUNT};
use crate::error::{Error, Result};
use crate::horoball::{horosphere_through, Horoball};
use crate::oracle::{density_from_scratch, derive_rho_numeric, v0_oracle, RhoTarget};

/// Slack allowed past a domain endpoint, to absorb rounding in `x_max`.
const DOMAIN_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    B01,
    B12,
    B13,
    B04,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::B01, Family::B12, Family::B13, Family::B04];

    pub fn name(self) -> &'static str {
        match self {
            Family::B01 => "B01",
            Family::B12 => "B12",
            Family::B13 => "B13",
            Family::B04 => "B04",
        }
    }

    /// Right end of the parameter interval.
    pub fn x_max(self) -> f64 {
        let r = rho_constants();
        match self {
            Family::B01 => r.rho1,
            Family::B12 | Family::B13 => r.rho2,
            Family::B04 => 2.0 * r.rho1 + r.rho4 - r.rho3,
        }
    }

    pub fn check_domain(self, x: f64) -> Result<()> {
        let max = self.x_max();
        if x.is_finite() && x >= -DOMAIN_TOL && x <= max + DOMAIN_TOL {
            Ok(())
        } else {
            Err(Error::DomainExceeded { family: self.name().to_string(), x, max })
        }
    }

    pub fn schedule(self) -> VertexClassSchedule {
        VertexClassSchedule::for_family(self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "b01" => Ok(Family::B01),
            "b12" => Ok(Family::B12),
            "b13" => Ok(Family::B13),
            "b04" => Ok(Family::B04),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RhoConstants {
    pub rho1: f64,
    pub rho2: f64,
    pub rho3: f64,
    pub rho4: f64,
}

/// `rho1 = rho2 = ln sqrt 2`, `rho4 = arcosh(7 sqrt 2 / (4 sqrt 5))`, and
/// `rho3` measured geometrically.
pub fn rho_constants() -> RhoConstants {
    static RHO: OnceLock<RhoConstants> = OnceLock::new();
    *RHO.get_or_init(|| {
        let half_ln2 = 2f64.sqrt().ln();
        RhoConstants {
            rho1: half_ln2,
            rho2: half_ln2,
            rho3: derive_rho_numeric(RhoTarget::Rho3),
            rho4: (7.0 * 2f64.sqrt() / (4.0 * 5f64.sqrt())).acosh(),
        }
    })
}

/// Horoball volume per characteristic simplex in the base arrangement.
pub fn v0() -> f64 {
    static V0: OnceLock<f64> = OnceLock::new();
    *V0.get_or_init(v0_oracle)
}

/// Vertices sharing the offset `base + slope * x`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexClass {
    pub members: Vec<usize>,
    pub base: f64,
    pub slope: f64,
}

impl VertexClass {
    pub fn offset(&self, x: f64) -> f64 {
        self.base + self.slope * x
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexClassSchedule {
    pub classes: Vec<VertexClass>,
}

impl VertexClassSchedule {
    pub fn for_family(family: Family) -> Self {
        let cell = cell24::shared();
        let nb = |k: u8| cell.neighbors(1, k).expect("vertex 1");
        let r1 = rho_constants().rho1;
        let class = |members: Vec<usize>, base: f64, slope: f64| VertexClass { members, base, slope };
        let rest = |taken: &[usize]| -> Vec<usize> {
            (1..=VERTEX_COUNT).filter(|v| !taken.contains(v)).collect()
        };
        let classes = match family {
            Family::B01 => {
                let mut large = vec![1];
                large.extend(nb(2));
                large.extend(nb(4));
                large.sort_unstable();
                let small = rest(&large);
                vec![class(large, 0.0, 1.0), class(small, 0.0, -1.0)]
            }
            Family::B12 => {
                let top = vec![1, nb(4)[0]];
                let second = nb(2);
                let taken: Vec<usize> = top.iter().chain(&second).copied().collect();
                vec![
                    class(top, r1, 1.0),
                    class(second, r1, -1.0),
                    class(rest(&taken), -r1, -1.0),
                ]
            }
            Family::B13 => {
                let mut second = nb(2);
                second.extend(nb(4));
                second.sort_unstable();
                vec![
                    class(vec![1], r1, 1.0),
                    class(second, r1, -1.0),
                    class(nb(1), -r1, -1.0),
                    class(nb(3), -r1, 1.0),
                ]
            }
            Family::B04 => {
                let triple = vec![1, 10, 17];
                let other = rest(&triple);
                vec![class(triple, 0.0, 1.0), class(other, 0.0, -1.0)]
            }
        };
        Self { classes }
    }

    /// Offset of vertex `v` (1-based) at parameter `x`.
    pub fn offset_of(&self, v: usize, x: f64) -> Option<f64> {
        self.classes.iter().find(|c| c.members.contains(&v)).map(|c| c.offset(x))
    }

    pub fn total_members(&self) -> usize {
        self.classes.iter().map(|c| c.members.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PackingFamily {
    pub family: Family,
    pub x_max: f64,
    pub schedule: VertexClassSchedule,
    pub sectors_per_vertex: usize,
}

impl PackingFamily {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            x_max: family.x_max(),
            schedule: family.schedule(),
            sectors_per_vertex: SECTORS_PER_VERTEX,
        }
    }
}

/// Horoball at every vertex: the base ball (horosphere through the nearest
/// edge midpoints) blown up by the family's offset.
pub fn arrangement_geometry(family: Family, x: f64) -> Result<Vec<Horoball>> {
    family.check_domain(x)?;
    let cell = cell24::shared();
    let schedule = family.schedule();
    (1..=VERTEX_COUNT)
        .map(|v| {
            let nb = cell.neighbors(v, 1)?[0];
            let base = horosphere_through(cell.vertex(v)?, &cell.edge_midpoint(v, nb)?)?;
            let t = schedule.offset_of(v, x).expect("schedule covers every vertex");
            Ok(base.blown_up(t))
        })
        .collect()
}

/// Closed-form densities for a given per-simplex volume `v0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityModel {
    pub v0: f64,
}

impl Default for DensityModel {
    fn default() -> Self {
        Self { v0: v0() }
    }
}

fn e3(t: f64) -> f64 {
    (3.0 * t).exp()
}

impl DensityModel {
    pub fn with_v0(v0: f64) -> Self {
        Self { v0 }
    }

    pub fn density(&self, family: Family, x: f64) -> Result<f64> {
        family.check_domain(x)?;
        let r = rho_constants().rho1;
        let v = self.v0;
        let volume = match family {
            Family::B01 => 384.0 * v * (e3(x) + 2.0 * e3(-x)),
            Family::B12 => 48.0 * v * (2.0 * e3(r + x) + 6.0 * e3(-(-r + x)) + 16.0 * e3(-(r + x))),
            Family::B13 => {
                48.0 * v
                    * (e3(r + x) + 7.0 * e3(-(-r + x)) + 8.0 * e3(-(r + x)) + 8.0 * e3(-(r - x)))
            }
            Family::B04 => 48.0 * v * (3.0 * e3(x) + 21.0 * e3(-x)),
        };
        Ok(volume / vol_p24())
    }

    /// Density assembled class by class from the schedule.
    pub fn schedule_density(&self, family: Family, x: f64) -> Result<f64> {
        family.check_domain(x)?;
        let sum: f64 = family
            .schedule()
            .classes
            .iter()
            .map(|c| c.members.len() as f64 * e3(c.offset(x)))
            .sum();
        Ok(SECTORS_PER_VERTEX as f64 * self.v0 * sum / vol_p24())
    }

    /// Grid scan followed by golden-section refinement around the best grid
    /// point.
    pub fn optimize(&self, family: Family, grid: usize) -> Result<DensityReport> {
        if grid < 2 {
            return Err(Error::InvalidGrid(grid));
        }
        let x_max = family.x_max();
        let xs = grid_points(x_max, grid);
        let values: Vec<f64> = xs
            .par_iter()
            .map(|&x| self.density(family, x))
            .collect::<Result<_>>()?;
        let best = (0..grid).fold(0, |b, i| if values[i] > values[b] { i } else { b });
        let lo = xs[best.saturating_sub(1)];
        let hi = xs[(best + 1).min(grid - 1)];
        let f = |x: f64| self.density(family, x).unwrap_or(f64::NEG_INFINITY);
        let refined = golden_section_max(f, lo, hi, 1e-12);

        let mut candidates = [(xs[best], values[best]), (refined, f(refined)), (lo, f(lo)), (hi, f(hi))];
        candidates.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.total_cmp(&b.0)));
        let (argmax_x, max_density) = candidates[0];

        let oracle_residual = (max_density - density_from_scratch(family, argmax_x)?).abs();
        Ok(DensityReport {
            family,
            x_max,
            samples: xs.iter().zip(&values).map(|(&x, &density)| DensitySample { x, density }).collect(),
            argmax_x,
            max_density,
            oracle_residual,
        })
    }
}

fn vol_p24() -> f64 {
    cell_volume_constants().vol_p24
}

/// `grid` equally spaced points from 0 to `x_max`, both ends included exactly.
pub fn grid_points(x_max: f64, grid: usize) -> Vec<f64> {
    (0..grid)
        .map(|i| if i + 1 == grid { x_max } else { x_max * i as f64 / (grid - 1) as f64 })
        .collect()
}

pub fn golden_section_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensitySample {
    pub x: f64,
    pub density: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityReport {
    pub family: Family,
    pub x_max: f64,
    pub samples: Vec<DensitySample>,
    pub argmax_x: f64,
    pub max_density: f64,
    pub oracle_residual: f64,
}

pub fn density_b01(x: f64) -> Result<f64> {
    DensityModel::default().density(Family::B01, x)
}

pub fn density_b12(x: f64) -> Result<f64> {
    DensityModel::default().density(Family::B12, x)
}

pub fn density_b13(x: f64) -> Result<f64> {
    DensityModel::default().density(Family::B13, x)
}

pub fn density_b04(x: f64) -> Result<f64> {
    DensityModel::default().density(Family::B04, x)
}

pub fn optimize_family(family: Family, grid: usize) -> Result<DensityReport> {
    DensityModel::default().optimize(family, grid)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Regime {
    pub regime: u8,
    pub optimal_density: f64,
}

/// Best density achievable when the largest horoball has `v` per sector.
pub fn classify_by_max_horoball(v: f64) -> Result<Regime> {
    let v0 = v0();
    let r1 = rho_constants().rho1;
    let ceiling = v0 * e3(2.0 * r1);
    if v.is_nan() || v <= 0.0 {
        return Err(Error::NonpositiveVolume(v));
    }
    if v > ceiling {
        return Err(Error::MaxVolumeExceeded(v));
    }
    let (regime, optimal_density) = if v <= v0 {
        (1, density_b01(0.0)?)
    } else if v <= v0 * e3(r1) {
        (2, density_b01(r1)?)
    } else {
        (3, density_b12(rho_constants().rho2)?)
    };
    Ok(Regime { regime, optimal_density })
}

/// `6 / pi^2`, the base-arrangement density, in closed form.
pub fn base_density_exact() -> f64 {
    6.0 / (PI * PI)
}
