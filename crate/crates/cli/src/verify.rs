//! Built-in self checks: algebraic invariants, independent oracles and the
//! reference numbers for the n = 141 shell.

use std::f64::consts::{FRAC_PI_2, PI};
use std::time::Instant;

use clap::Args;
use kepler_so4::amath::{clebsch_gordan, HalfInt};
use kepler_so4::coherent::{
    build_product_state, eccentricity_of_eta, l_variance_closed_form, observables, planar_a1, planar_l2, planar_l3,
    to_coupled, to_product, CoherentParams, LEffConvention,
};
use kepler_so4::dynamics::{evolve, trace_precession, EvolutionSpec, TimeSpec, TraceOptions};
use kepler_so4::hydrogenic::{energy1, t_classical, t_precession, PhysicalConstants, ShellSpec};
use kepler_so4::render::{density_grid, principal_axis, DEFAULT_EXTENT_AU};
use kepler_so4_oracle::{DenseShell, ExactCgTable};

use crate::error::{CliError, CliResult};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Skip the n = 141 density-grid checks.
    #[arg(long)]
    pub quick: bool,
    /// Multiply the fine-structure constant (sensitivity check).
    #[arg(long, hide = true, default_value_t = 1.0)]
    pub alpha_scale: f64,
}

type Check = Result<String, String>;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn within(label: &str, got: f64, want: f64, tol: f64) -> Check {
    let e = rel(got, want);
    let msg = format!("{label} = {got:.6e} vs {want:e} (rel. {e:.2e}, tol {tol:e})");
    if e <= tol {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn all(parts: Vec<Check>) -> Check {
    let mut ok = true;
    let text: Vec<String> = parts
        .into_iter()
        .map(|p| match p {
            Ok(s) => s,
            Err(s) => {
                ok = false;
                format!("FAILED {s}")
            }
        })
        .collect();
    let joined = text.join("; ");
    if ok {
        Ok(joined)
    } else {
        Err(joined)
    }
}

fn h(t: i32) -> HalfInt {
    HalfInt::from_twice(t)
}

fn cg_oracle() -> Check {
    let mut worst = 0.0f64;
    for tj1 in 0..=6 {
        for tj2 in 0..=6 {
            let table = ExactCgTable::new(tj1, tj2);
            for tm1 in (-tj1..=tj1).step_by(2) {
                for tm2 in (-tj2..=tj2).step_by(2) {
                    let tm = tm1 + tm2;
                    for tjj in ((tj1 - tj2).abs()..=tj1 + tj2).step_by(2).filter(|t| *t >= tm.abs()) {
                        let d = clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tjj), h(tm)) - table.get(tm1, tm2, tjj, tm);
                        worst = worst.max(d.abs());
                    }
                }
            }
        }
    }
    let msg = format!("j1, j2 <= 3 against exact rationals: max difference {worst:.1e}");
    if worst < 1e-13 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn invariants(ns: &[u32]) -> Check {
    let mut failures = Vec::new();
    let mut worst_trip = 0.0f64;
    for &n in ns {
        let shell = ShellSpec::hydrogen(n).map_err(|e| e.to_string())?;
        let j = shell.j();
        let nn = f64::from(n * n);
        for eta in [0.0, 0.2, 0.4, 1.5] {
            let product = build_product_state(&CoherentParams::planar(shell, eta).unwrap(), 1e-12).unwrap();
            let r = observables(&product).map_err(|e| e.to_string())?;
            let close = |got: f64, want: f64, scale: f64| (got - want).abs() <= 1e-8 * want.abs().max(scale);
            let ok = (r.norm - 1.0).abs() <= 1e-10
                && rel(r.c1, nn - 1.0) <= 1e-8
                && r.c2.abs() <= 1e-8 * nn
                && close(r.l_vec[2], planar_l3(j, eta), f64::from(n))
                && close(r.a_vec[0], planar_a1(j, eta), f64::from(n))
                && close(r.l2, planar_l2(j, eta), nn)
                && close(r.l_var, l_variance_closed_form(j, eta).unwrap(), 1.0);
            if !ok {
                failures.push(format!("n={n} eta={eta}"));
            }
            let back = to_product(&to_coupled(&product));
            for (a, b) in product.amplitudes().iter().zip(back.amplitudes()) {
                worst_trip = worst_trip.max((a - b).norm());
            }
        }
    }
    if worst_trip > 1e-10 {
        failures.push(format!("round trip {worst_trip:.1e}"));
    }
    if failures.is_empty() {
        Ok(format!("n in {ns:?}: norm, Casimirs, closed forms; round trip {worst_trip:.1e}"))
    } else {
        Err(format!("failed for {}", failures.join(", ")))
    }
}

fn dense_oracle(consts: &PhysicalConstants) -> Check {
    let shell = ShellSpec::hydrogen(21).unwrap();
    let dense = DenseShell::new(21);
    let energies: Vec<f64> = (0..21).map(|l| energy1(shell, l, consts).unwrap()).collect();
    let mut worst = 0.0f64;
    for eta in [0.2, 0.4] {
        let params = CoherentParams::planar(shell, eta).unwrap();
        let full = build_product_state(&params, 0.0).unwrap();
        let truncated = build_product_state(&params, 1e-12).unwrap();
        let l_eff = observables(&truncated).unwrap().l_eff(LEffConvention::default());
        let t_p = t_precession(shell, l_eff, consts).map_err(|e| e.to_string())?;
        let psi0 = to_coupled(&truncated);
        for frac in [0.0, 1.0 / 7.0, 1.0 / 3.0] {
            let t = frac * t_p;
            let mut spec = EvolutionSpec::new(shell, TimeSpec::seconds(t).unwrap());
            spec.consts = *consts;
            let a = observables(&to_product(&evolve(&psi0, &spec).map_err(|e| e.to_string())?)).unwrap();
            let b = dense.observables(&dense.evolve(full.amplitudes(), &energies, consts.seconds_to_au(t)));
            for d in [
                a.l_vec[2] - b.l[2],
                a.a_vec[0] - b.a[0],
                a.a_vec[1] - b.a[1],
                a.l2 - b.l2,
                a.l_var - b.l3_var,
            ] {
                worst = worst.max(d.abs());
            }
        }
    }
    let msg = format!("n=21 dense evolution: max observable difference {worst:.1e}");
    if worst <= 1e-8 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn reference_t_p(eta: f64, consts: &PhysicalConstants) -> Result<f64, String> {
    let params = CoherentParams::planar(ShellSpec::hydrogen(141).unwrap(), eta).unwrap();
    let r = observables(&build_product_state(&params, 1e-12).unwrap()).unwrap();
    t_precession(params.shell, r.l_eff(LEffConvention::default()), consts).map_err(|e| e.to_string())
}

fn reference_numbers(consts: &PhysicalConstants) -> Check {
    let shell = ShellSpec::hydrogen(141).unwrap();
    let t_cl = t_classical(shell, consts);
    let t2 = reference_t_p(0.2, consts)?;
    let t4 = reference_t_p(0.4, consts)?;
    let mut parts = vec![
        within("T_cl", t_cl, 4.25e-10, 0.005),
        within("T_p(eta=0.2)", t2, 0.266, 0.01),
        within("T_p/T_cl", t2 / t_cl, 6.26e8, 0.01),
        within("T_p(eta=0.4)", t4, 0.164, 0.01),
    ];
    for (eta, want) in [(0.2, 0.385), (0.3, 0.550), (0.4, 0.690)] {
        let e = eccentricity_of_eta(eta).unwrap();
        let msg = format!("eps({eta}) = {e:.4}");
        parts.push(if (e - want).abs() <= 1e-3 { Ok(msg) } else { Err(msg) });
    }
    all(parts)
}

fn precession(consts: &PhysicalConstants) -> Check {
    let opts = TraceOptions { consts: *consts, ..TraceOptions::default() };
    let t = TimeSpec::precession_periods(0.25).unwrap();
    let params = |eta| CoherentParams::planar(ShellSpec::hydrogen(141).unwrap(), eta).unwrap();
    let tr = trace_precession(&params(0.2), t, 26, &opts).map_err(|e| e.to_string())?;
    let wide = trace_precession(&params(0.4), t, 6, &opts).map_err(|e| e.to_string())?;
    let err = tr.relative_error.unwrap_or(f64::INFINITY);
    let last = tr.samples.last().unwrap();
    let f4 = wide.samples.last().unwrap().fidelity;
    let rate = format!("rate rel. error {err:.2e}");
    let angle = within("|theta(T_p/4)|", last.theta.abs(), FRAC_PI_2, 0.02);
    let order = format!("fidelity(T_p/4) eta=0.4 {f4:.4} < eta=0.2 {:.4}", last.fidelity);
    all(vec![
        if err < 0.01 { Ok(rate) } else { Err(rate) },
        angle,
        if f4 < last.fidelity { Ok(order) } else { Err(order) },
    ])
}

fn grid_orientation(consts: &PhysicalConstants) -> Check {
    let shell = ShellSpec::hydrogen(141).unwrap();
    let psi0 = to_coupled(&build_product_state(&CoherentParams::planar(shell, 0.2).unwrap(), 1e-12).unwrap());
    let mut axes = Vec::new();
    for frac in [0.0, 0.25] {
        let mut spec = EvolutionSpec::new(shell, TimeSpec::precession_periods(frac).unwrap());
        spec.consts = *consts;
        let psi = evolve(&psi0, &spec).map_err(|e| e.to_string())?;
        let grid = density_grid(&psi, DEFAULT_EXTENT_AU, 128, 0.0).map_err(|e| e.to_string())?;
        axes.push(principal_axis(&grid).map_err(|e| e.to_string())?);
    }
    let horizontal = axes[0].abs().min(PI - axes[0].abs());
    let vertical = (axes[1].abs() - FRAC_PI_2).abs();
    let fov = consts.au_to_meters(DEFAULT_EXTENT_AU) * 1e6;
    let msg = format!("t=0 axis off horizontal by {horizontal:.4} rad, T_p/4 axis off vertical by {vertical:.4} rad");
    all(vec![
        if horizontal < 0.02 && vertical < 0.02 { Ok(msg) } else { Err(msg) },
        within("field of view (um)", fov, 4.23, 0.005),
    ])
}

pub fn run(args: &VerifyArgs) -> CliResult<()> {
    if !(args.alpha_scale > 0.0 && args.alpha_scale.is_finite()) {
        return Err(CliError::Config("--alpha-scale must be positive".into()));
    }
    let consts = PhysicalConstants::default().with_alpha_scaled(args.alpha_scale);
    let mut checks: Vec<(&str, Box<dyn Fn() -> Check>)> = vec![
        ("clebsch-gordan oracle", Box::new(cg_oracle)),
        ("small-shell invariants", Box::new(|| invariants(&[5, 21]))),
        ("dense evolution oracle", Box::new(move || dense_oracle(&consts))),
        ("reference numbers", Box::new(move || reference_numbers(&consts))),
        ("precession trace", Box::new(move || precession(&consts))),
    ];
    if !args.quick {
        checks.push(("n=141 invariants", Box::new(|| invariants(&[141]))));
        checks.push(("density orientation", Box::new(move || grid_orientation(&consts))));
    }
    let mut failed = 0;
    for (name, check) in &checks {
        let start = Instant::now();
        let (tag, text) = match check() {
            Ok(t) => ("PASS", t),
            Err(t) => {
                failed += 1;
                ("FAIL", t)
            }
        };
        println!("[{tag}] {name}: {text} ({:.1?})", start.elapsed());
    }
    println!("verify: {} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        Err(CliError::Verify(failed))
    } else {
        Ok(())
    }
}
