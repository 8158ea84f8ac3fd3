use kepler_so4::coherent::CoherentParams;
use kepler_so4::dynamics::{trace_precession, TimeSpec, TraceOptions};
use kepler_so4::hydrogenic::ShellSpec;

fn reference(eta: f64) -> CoherentParams {
    CoherentParams::planar(ShellSpec::hydrogen(141).unwrap(), eta).unwrap()
}

#[test]
fn quarter_period_rate_matches_prediction() {
    let tr = trace_precession(&reference(0.2), TimeSpec::precession_periods(0.25).unwrap(), 26, &TraceOptions::default())
        .unwrap();
    let rate = tr.fitted_rate.unwrap();
    eprintln!("rate {rate} predicted {} err {:?} rms {:?} final {:?}", tr.predicted_rate, tr.relative_error, tr.fit_rms, tr.samples.last());
    assert!(tr.relative_error.unwrap() < 0.01);
    assert!(tr.fit_rms.unwrap() < 0.01);
    assert!((tr.samples[0].fidelity - 1.0).abs() < 1e-10);
}

#[test]
fn quarter_period_points_vertically() {
    let tr = trace_precession(&reference(0.2), TimeSpec::precession_periods(0.25).unwrap(), 6, &TraceOptions::default())
        .unwrap();
    let last = tr.samples.last().unwrap().theta.abs();
    let target = std::f64::consts::FRAC_PI_2;
    assert!((last - target).abs() < 0.02 * target, "{last}");
}

#[test]
fn wider_orbit_decays_faster() {
    let t = TimeSpec::precession_periods(0.25).unwrap();
    let narrow = trace_precession(&reference(0.2), t, 6, &TraceOptions::default()).unwrap();
    let wide = trace_precession(&reference(0.4), t, 6, &TraceOptions::default()).unwrap();
    let f = |tr: &kepler_so4::dynamics::PrecessionTrace| tr.samples.last().unwrap().fidelity;
    eprintln!("fidelity 0.2: {} 0.4: {}", f(&narrow), f(&wide));
    assert!(f(&wide) < f(&narrow));
}

#[test]
fn precession_is_prograde() {
    use kepler_so4::coherent::{build_product_state, observables};
    for eta in [0.2, 0.4] {
        let p = reference(eta);
        let l3 = observables(&build_product_state(&p, 1e-12).unwrap()).unwrap().l_vec[2];
        let tr = trace_precession(&p, TimeSpec::precession_periods(0.1).unwrap(), 5, &TraceOptions::default()).unwrap();
        assert_eq!(tr.fitted_rate.unwrap().signum(), l3.signum());
    }
}
