//! Horoball packings of the ideal regular 24-cell in hyperbolic 4-space.
//!
//! * [`lorentz`]: projective model of H^4 with the Lorentzian form.
//! * [`horoball`]: horoballs, Busemann functions and tangency.
//! * [`cell24`]: the ideal 24-cell, its combinatorics and orthoschemes.
//! * [`families`]: the four interpolating arrangements and their densities.
//! * [`oracle`]: independent numeric checks (exact sections, Monte Carlo).
//! * [`cli`]: the command-line front end.

pub mod cell24;
pub mod cli;
pub mod error;
pub mod families;
pub mod horoball;
pub mod lorentz;
pub mod oracle;

pub use cell24::{build_cell24, Cell24};
pub use error::{Error, Result};
pub use families::{
    arrangement_geometry, classify_by_max_horoball, density_b01, density_b04, density_b12,
    density_b13, optimize_family, rho_constants, v0, DensityModel, DensityReport, Family,
};
pub use horoball::Horoball;
pub use lorentz::ProjectivePoint;
pub use oracle::{density_from_scratch, overlap_audit, sector_volume_exact, sector_volume_mc};
