//! Monte Carlo estimate of a horoball sector volume.

use nalgebra::Matrix5;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::chart::{build_chart, HalfspacePoint};
use crate::cell24;
use crate::error::{Error, Result};
use crate::horoball::Horoball;
use crate::lorentz::ProjectivePoint;

pub const MIN_MC_SAMPLES: usize = 10_000;

const CHUNKS: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: usize,
    pub seed: u64,
}

/// Integrates `dw dz / z^4` over the part of the cone at `vertex` spanned by
/// four `generators` that lies inside `b`.
///
/// Points are drawn in the half-space chart of the vertex: `w` uniformly over
/// the bounding box of the projected generators and `z = z_lo / s` with `s`
/// uniform on `(0, 1)`, where `z_lo` is half the horosphere height. Membership
/// is decided in the projective model: cone coordinates by a linear solve and
/// horoball membership by the Busemann function.
///
/// Sample chunks use independent ChaCha streams of `seed` and are reduced in
/// chunk order, so the result depends only on the arguments.
pub fn sector_volume_mc(
    vertex: usize,
    generators: &[ProjectivePoint; 4],
    b: &Horoball,
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    if samples < MIN_MC_SAMPLES {
        return Err(Error::InvalidSampleCount(samples));
    }
    let apex = cell24::shared().vertex(vertex)?;
    let chart = build_chart(apex)?;
    let z_lo = 0.5 * chart.horosphere_height(b)?;

    let cols = [
        *apex.coords(),
        *generators[0].coords(),
        *generators[1].coords(),
        *generators[2].coords(),
        *generators[3].coords(),
    ];
    let basis = Matrix5::from_columns(&cols);
    let column_scale: f64 = cols.iter().map(|c| c.norm()).product();
    let inv = match basis.try_inverse() {
        Some(inv) if basis.determinant().abs() > 1e-12 * column_scale => inv,
        _ => return Ok(McEstimate { estimate: 0.0, std_error: 0.0, samples, seed }),
    };

    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for g in generators {
        let p = chart.forward(g)?;
        for k in 0..3 {
            lo[k] = lo[k].min(p.w[k]);
            hi[k] = hi[k].max(p.w[k]);
        }
    }
    let box_volume: f64 = (0..3).map(|k| hi[k] - lo[k]).product();
    if box_volume.is_nan() || box_volume <= 0.0 {
        return Ok(McEstimate { estimate: 0.0, std_error: 0.0, samples, seed });
    }
    let weight = box_volume / z_lo.powi(3);

    let sums: Vec<(f64, f64)> = (0..CHUNKS)
        .into_par_iter()
        .map(|chunk| {
            let n = samples / CHUNKS as usize + usize::from((chunk as usize) < samples % CHUNKS as usize);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let mut s1 = 0.0;
            let mut s2 = 0.0;
            for _ in 0..n {
                let w = [
                    rng.gen_range(lo[0]..hi[0]),
                    rng.gen_range(lo[1]..hi[1]),
                    rng.gen_range(lo[2]..hi[2]),
                ];
                let s: f64 = 1.0 - rng.gen::<f64>();
                let q = HalfspacePoint { w, z: z_lo / s };
                let Ok(x) = chart.backward(&q) else { continue };
                let coef = inv * x.coords();
                // The apex coefficient is free: the cone contains whole rays
                // from the apex.
                let in_cone = (1..5).all(|k| coef[k] >= 0.0);
                if in_cone && b.busemann(&x) <= 0.0 {
                    let f = weight * s * s;
                    s1 += f;
                    s2 += f * f;
                }
            }
            (s1, s2)
        })
        .collect();

    let (mut s1, mut s2) = (0.0, 0.0);
    for (a, b) in sums {
        s1 += a;
        s2 += b;
    }
    let n = samples as f64;
    let mean = s1 / n;
    let var = (s2 / n - mean * mean).max(0.0) * n / (n - 1.0);
    Ok(McEstimate { estimate: mean, std_error: (var / n).sqrt(), samples, seed })
}
