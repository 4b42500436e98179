//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line.

use std::time::Instant;

use horoball24::cell24::{self, build_cell24};
use horoball24::families::{
    arrangement_geometry, classify_by_max_horoball, density_b01, density_b04, density_b12,
    density_b13, grid_points, optimize_family, rho_constants, v0, DensityModel, Family,
};
use horoball24::lorentz::distance;
use horoball24::oracle::{
    base_horoball, density_from_scratch, derive_rho_numeric, first_sector, overlap_audit,
    sector_volume_exact, sector_volume_mc, RhoTarget,
};

fn report(id: usize, name: &str, ok: bool, detail: String, start: Instant) -> bool {
    println!(
        "criterion {id:>2} {name:<28} {} ({detail}; {:.2}s)",
        if ok { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    ok
}

fn base_density() -> bool {
    let t = Instant::now();
    let closed = density_b01(0.0).unwrap();
    let oracle = density_from_scratch(Family::B01, 0.0).unwrap();
    let ok = (closed - 0.60793).abs() < 5e-5 && (oracle - 0.60793).abs() < 5e-5;
    report(1, "base density", ok, format!("closed {closed:.8}, oracle {oracle:.8}"), t)
}

fn headline_optimum() -> bool {
    let t = Instant::now();
    let r = optimize_family(Family::B01, 101).unwrap();
    let ok = (r.argmax_x - 2f64.sqrt().ln()).abs() < 1e-9 && (r.max_density - 0.71645).abs() < 5e-5;
    report(2, "headline optimum", ok, format!("argmax {:.12}, max {:.8}", r.argmax_x, r.max_density), t)
}

fn constants() -> bool {
    let t = Instant::now();
    let half_ln2 = 2f64.sqrt().ln();
    let pts = cell24::shared().special_points();
    let r1 = derive_rho_numeric(RhoTarget::Rho1);
    let r2 = derive_rho_numeric(RhoTarget::Rho2);
    let s1 = distance(&pts.t1, &pts.t3).unwrap().cosh();
    let s2 = distance(&pts.t, &pts.t3).unwrap().cosh();
    let r4_closed = (7.0 * 2f64.sqrt() / (4.0 * 5f64.sqrt())).acosh();
    let r4 = distance(&pts.q, &pts.h).unwrap();
    let r3 = derive_rho_numeric(RhoTarget::Rho3);
    let ok = (r1 - half_ln2).abs() < 1e-9
        && (r2 - half_ln2).abs() < 1e-9
        && (s1 - 2f64.sqrt()).abs() < 1e-12
        && (s2 - 2f64.sqrt()).abs() < 1e-12
        && (r4 - r4_closed).abs() < 1e-12
        && (rho_constants().rho4 - r4).abs() < 1e-12
        && (r3 - 0.60199).abs() < 1e-4;
    let detail = format!(
        "rho1 {r1:.12}, rho2 {r2:.12}, cosh s1 {s1:.14}, cosh s2 {s2:.14}, rho4 {r4:.12}, \
         rho3 {r3:.8} (log(10/3) would be {:.5})",
        (10f64 / 3.0).ln()
    );
    report(3, "constants", ok, detail, t)
}

fn family_identities() -> bool {
    let t = Instant::now();
    let r = rho_constants();
    let mut worst: f64 = 0.0;
    for x in grid_points(r.rho2, 101) {
        worst = worst.max((density_b13(x).unwrap() - density_b12(x).unwrap()).abs());
    }
    let d0 = density_b01(0.0).unwrap();
    let e1 = (density_b12(r.rho2).unwrap() - d0).abs();
    let e2 = (density_b04(0.0).unwrap() - d0).abs();
    let e3 = (density_b12(0.0).unwrap() - density_b01(r.rho1).unwrap()).abs();
    let ok = worst < 1e-12 && e1 < 1e-12 && e2 < 1e-12 && e3 < 1e-12;
    report(4, "family identities", ok, format!("b13-b12 {worst:.1e}, ends {e1:.1e} {e2:.1e} {e3:.1e}"), t)
}

fn oracle_equivalence() -> bool {
    let t = Instant::now();
    let mut checks = 0;
    let mut worst: f64 = 0.0;
    for f in Family::ALL {
        for x in grid_points(f.x_max(), 11) {
            let closed = DensityModel::default().density(f, x).unwrap();
            let oracle = density_from_scratch(f, x).unwrap();
            worst = worst.max((closed - oracle).abs());
            checks += 1;
        }
    }
    let ok = checks == 44 && worst < 1e-5;
    report(5, "oracle equivalence", ok, format!("{checks} checks, max residual {worst:.1e}"), t)
}

fn combinatorics() -> bool {
    let t = Instant::now();
    let c = build_cell24();
    let profiles_ok = (1..=24).all(|i| {
        (1..=4u8).map(|k| c.neighbors(i, k).unwrap().len()).collect::<Vec<_>>() == [8, 6, 8, 1]
    });
    let ok = c.edges().len() == 96
        && c.faces().len() == 96
        && c.facets().len() == 24
        && profiles_ok
        && c.vertices().iter().all(|v| v.is_ideal());
    let detail = format!("{} edges, {} faces, {} facets", c.edges().len(), c.faces().len(), c.facets().len());
    report(6, "combinatorics", ok, detail, t)
}

fn packing_validity() -> bool {
    let t = Instant::now();
    let (mut pair, mut clear) = (f64::INFINITY, f64::INFINITY);
    let mut all_valid = true;
    for f in Family::ALL {
        for x in grid_points(f.x_max(), 21) {
            let a = overlap_audit(&arrangement_geometry(f, x).unwrap());
            all_valid &= a.valid;
            pair = pair.min(a.min_pair_offset);
            clear = clear.min(a.min_clearance());
        }
    }
    let ok = all_valid && pair >= -1e-9 && clear >= -1e-9;
    report(7, "packing validity", ok, format!("min pair {pair:.1e}, min clearance {clear:.1e}"), t)
}

fn scaling_law() -> bool {
    let t = Instant::now();
    let gens = first_sector(1).unwrap();
    let b = base_horoball();
    let v = sector_volume_exact(1, &gens, &b).unwrap();
    let mut worst: f64 = 0.0;
    for x in [0.1, 0.25, 2f64.sqrt().ln()] {
        let vx = sector_volume_exact(1, &gens, &b.blown_up(x)).unwrap();
        worst = worst.max((vx / (v * (3.0 * x).exp()) - 1.0).abs());
    }
    report(8, "sector scaling law", worst < 1e-9, format!("max relative error {worst:.1e}"), t)
}

fn regimes() -> bool {
    let t = Instant::now();
    let v = v0();
    let r1 = rho_constants().rho1;
    let b1 = v * (3.0 * r1).exp();
    let ceiling = v * (6.0 * r1).exp();
    let regime = |x: f64| classify_by_max_horoball(x).map(|g| g.regime);
    let breakpoints_ok = (b1 - 2.0 * 2f64.sqrt() * v).abs() < 1e-15
        && (ceiling - 8.0 * v).abs() < 1e-15
        && regime(v) == Ok(1)
        && regime(v * (1.0 + 1e-12)) == Ok(2)
        && regime(b1) == Ok(2)
        && regime(b1 * (1.0 + 1e-12)) == Ok(3)
        && regime(ceiling) == Ok(3)
        && classify_by_max_horoball(ceiling * 1.001).is_err();
    let mut best: f64 = 0.0;
    let mut constant_ok = true;
    for k in 1..=400 {
        let x = ceiling * k as f64 / 400.0;
        let g = classify_by_max_horoball(x).unwrap();
        let expected = match g.regime {
            1 => density_b01(0.0).unwrap(),
            2 => density_b01(r1).unwrap(),
            _ => density_b12(r1).unwrap(),
        };
        constant_ok &= g.optimal_density == expected;
        best = best.max(g.optimal_density);
    }
    let global = (best - density_b01(r1).unwrap()).abs();
    let ok = breakpoints_ok && constant_ok && global < 1e-15;
    report(9, "regime classification", ok, format!("global max {best:.8}"), t)
}

fn monte_carlo() -> bool {
    let t = Instant::now();
    let cell = cell24::shared();
    let configs: [(usize, usize, f64); 5] =
        [(1, 0, 0.0), (1, 17, 0.3465735902799727), (10, 5, -0.25), (17, 31, 0.1), (24, 47, -0.3465735902799727)];
    let mut worst: f64 = 0.0;
    for (k, (vertex, flag, offset)) in configs.into_iter().enumerate() {
        let gens = cell.flag_simplex(&cell.flags_at(vertex).unwrap()[flag]).unwrap();
        let ball = arrangement_geometry(Family::B01, 0.0).unwrap()[vertex - 1].blown_up(offset);
        let exact = sector_volume_exact(vertex, &gens, &ball).unwrap();
        let mc = sector_volume_mc(vertex, &gens, &ball, 1_000_000, 24 + k as u64).unwrap();
        worst = worst.max((mc.estimate - exact).abs() / mc.std_error);
    }
    report(10, "monte carlo redundancy", worst <= 3.0, format!("max deviation {worst:.2} sigma"), t)
}

#[test]
fn acceptance_criteria() {
    let results = [
        base_density(),
        headline_optimum(),
        constants(),
        family_identities(),
        oracle_equivalence(),
        combinatorics(),
        packing_validity(),
        scaling_law(),
        regimes(),
        monte_carlo(),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("{passed}/10 criteria passed");
    assert_eq!(passed, 10);
}
