//! Property tests for the model invariants.

use crlh_core::crossing::find_crossings;
use crlh_core::{
    beta, bogoliubov_params, classical_epsilon, classical_mu, current_fluctuation_thermal, derive_cell_quantities,
    thermal_factor, CothConvention, Handedness, PhysicalConstants, ResponseModel, ScanConfig, ThermalFockState,
    UnitCellParams,
};
use proptest::prelude::*;

const K: PhysicalConstants = PhysicalConstants::CODATA;

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.ln()..hi.ln()).prop_map(f64::exp)
}

fn params() -> impl Strategy<Value = UnitCellParams> {
    (
        log_uniform(1e-12, 1e-1),
        log_uniform(1e-12, 1e-1),
        log_uniform(1e-12, 1e-1),
        log_uniform(1e-12, 1e-1),
        log_uniform(1e-9, 1e-3),
    )
        .prop_map(|(c_l, l_l, c_r, l_r, z0)| UnitCellParams::new(c_l, l_l, c_r, l_r, z0).unwrap())
}

fn convention() -> impl Strategy<Value = CothConvention> {
    prop_oneof![Just(CothConvention::Direct), Just(CothConvention::Tfd)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn coupling_identity(p in params()) {
        let d = derive_cell_quantities(&p).unwrap();
        let lhs = d.k_coupling * d.omega_l * d.omega_l;
        let rhs = p.l_r / p.l_l + p.c_r / p.c_l;
        prop_assert!(((lhs - rhs) / rhs).abs() < 1e-12);
        prop_assert!(d.c_total > p.c_r.max(p.c_l));
        prop_assert!(d.omega_r > 0.0 && d.omega_l > 0.0 && d.k_coupling > 0.0);
    }

    #[test]
    fn derived_quantities_are_pure(p in params()) {
        let a = derive_cell_quantities(&p).unwrap();
        let b = derive_cell_quantities(&p).unwrap();
        prop_assert_eq!(a.omega_r.to_bits(), b.omega_r.to_bits());
        prop_assert_eq!(a.omega_l.to_bits(), b.omega_l.to_bits());
        prop_assert_eq!(a.k_coupling.to_bits(), b.k_coupling.to_bits());
        prop_assert_eq!(a.c_total.to_bits(), b.c_total.to_bits());
    }

    #[test]
    fn bogoliubov_hyperbolic_identities(w in log_uniform(1e3, 1e13), t in log_uniform(1e-2, 1e4)) {
        let b = bogoliubov_params(w, t, &K).unwrap();
        let (c, s) = (b.theta.cosh(), b.theta.sinh());
        let one = c * c - s * s;
        prop_assert!((one - 1.0).abs() < 1e-12 * (c * c).max(1.0));
        prop_assert!(((2.0 * b.theta).cosh() - b.cosh2theta).abs() < 1e-12 * b.cosh2theta);
        prop_assert!(b.cosh2theta >= 1.0 && b.theta >= 0.0 && b.n0 >= 0.0);
    }

    #[test]
    fn inversion_reproduces_classical_response(
        p in params(),
        n in 0u32..20,
        t in log_uniform(1e-2, 1e4),
        w in log_uniform(1e3, 1e12),
        conv in convention(),
    ) {
        let model = ResponseModel::with_convention(conv);
        let d = derive_cell_quantities(&p).unwrap();
        let fl = current_fluctuation_thermal(n, w, t, d.c_total, p.z0, conv, &K).unwrap();
        let state = ThermalFockState::new(n, t, fl).unwrap();

        let e = model.epsilon_eff(&p, &state, w).unwrap();
        let ec = classical_epsilon(&p, w).unwrap();
        let scale = p.c_r.max(1.0 / (w * w * p.l_l));
        prop_assert!((e - ec).abs() <= 1e-9 * scale, "eps {} vs {}", e, ec);

        let m = model.mu_eff(&p, &state, w).unwrap();
        let mc = classical_mu(&p, w).unwrap();
        let scale = p.l_r.max(1.0 / (w * w * p.c_l));
        prop_assert!((m - mc).abs() <= 1e-9 * scale, "mu {} vs {}", m, mc);
    }

    #[test]
    fn subtrahends_differ_by_element_ratio(
        p in params(),
        n in 0u32..20,
        t in log_uniform(1e-1, 1e3),
        w in log_uniform(1e6, 1e11),
        fl in log_uniform(1e-3, 1e3),
    ) {
        let model = ResponseModel::default();
        let s = ThermalFockState::new(n, t, fl).unwrap();
        let se = p.c_r - model.epsilon_eff(&p, &s, w).unwrap();
        let sm = p.l_r - model.mu_eff(&p, &s, w).unwrap();
        // only meaningful when neither subtraction cancels catastrophically
        prop_assume!(se > 1e-3 * p.c_r && sm > 1e-3 * p.l_r);
        prop_assert!(((sm / se) / (p.l_l / p.c_l) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn handedness_is_exhaustive_and_exclusive(e in -1.0f64..1.0, m in -1.0f64..1.0, te in 0.0f64..0.1, tm in 0.0f64..0.1) {
        let h = Handedness::classify(e, m, te, tm);
        let expected = [
            e.abs() <= te || m.abs() <= tm,
            e < -te && m < -tm,
            e > te && m > tm,
            e < -te && m > tm,
            e > te && m < -tm,
        ];
        prop_assert_eq!(expected.iter().filter(|&&b| b).count(), 1);
        let idx = expected.iter().position(|&b| b).unwrap();
        let variants = [
            Handedness::OnBoundary,
            Handedness::LeftHanded,
            Handedness::RightHanded,
            Handedness::EpsilonNegativeOnly,
            Handedness::MuNegativeOnly,
        ];
        prop_assert_eq!(h, variants[idx]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classical_response_increases_with_frequency(p in params()) {
        let mut prev_e = f64::NEG_INFINITY;
        let mut prev_m = f64::NEG_INFINITY;
        for i in 0..200 {
            let w = 10f64.powf(2.0 + 10.0 * i as f64 / 199.0);
            let e = classical_epsilon(&p, w).unwrap();
            let m = classical_mu(&p, w).unwrap();
            prop_assert!(e >= prev_e && m >= prev_m);
            prev_e = e;
            prev_m = m;
        }
    }

    #[test]
    fn beta_squared_diverges_at_both_ends(p in params()) {
        let d = derive_cell_quantities(&p).unwrap();
        let spread = (d.k_coupling * d.omega_l * d.omega_l + 1.0).sqrt();
        let low = d.omega_l / (10.0 * spread);
        let high = d.omega_r * 10.0 * spread;
        let bl = beta(&p, low, 0.0).unwrap().beta_squared;
        let bh = beta(&p, high, 0.0).unwrap().beta_squared;
        let bl2 = beta(&p, low / 10.0, 0.0).unwrap().beta_squared;
        let bh2 = beta(&p, high * 10.0, 0.0).unwrap().beta_squared;
        prop_assert!(bl > 0.0 && bh > 0.0);
        prop_assert!(bl2 > bl && bh2 > bh);
    }

    #[test]
    fn thermal_factor_monotone(n in 0u32..20, x in log_uniform(1e-9, 15.0), t in log_uniform(1e-1, 1e3), conv in convention()) {
        // beyond x ≈ 18 coth(x) rounds to 1 and the ordering is invisible
        let w = x * K.k_b * t / K.hbar;
        let f = |w, t| thermal_factor(n, w, t, conv, &K).unwrap();
        prop_assert!(f(w, t * 1.01) > f(w, t));
        prop_assert!(f(w * 1.01, t) < f(w, t));
    }

    #[test]
    fn fluctuation_scales_as_fifth_power(n in 0u32..20, w in log_uniform(1e3, 1e11), t in log_uniform(1e-2, 1e4), conv in convention()) {
        let a = current_fluctuation_thermal(n, w, t, 1e-3, 1e-6, conv, &K).unwrap();
        let b = current_fluctuation_thermal(n, 2.0 * w, 2.0 * t, 1e-3, 1e-6, conv, &K).unwrap();
        prop_assert!((b / a / 32.0 - 1.0).abs() < 1e-10);
    }

    #[test]
    fn response_monotone_in_state(
        p in params(),
        n in 0u32..20,
        t in log_uniform(1e-1, 1e3),
        w in log_uniform(1e6, 1e11),
        fl in log_uniform(1e-3, 1e3),
    ) {
        let model = ResponseModel::default();
        let base = ThermalFockState::new(n, t, fl).unwrap();
        let hotter = ThermalFockState { temperature: t * 1.1, ..base };
        let noisier = ThermalFockState { current_fluctuation: fl * 1.1, ..base };
        let brighter = ThermalFockState { n: n + 1, ..base };
        let e = |s: &ThermalFockState| model.epsilon_eff(&p, s, w).unwrap();
        let m = |s: &ThermalFockState| model.mu_eff(&p, s, w).unwrap();
        // strict ordering is only observable when the subtrahend is not
        // swamped by the element value
        prop_assume!(p.c_r - e(&base) > 1e-6 * p.c_r && p.l_r - m(&base) > 1e-6 * p.l_r);
        prop_assert!(e(&hotter) < e(&base) && m(&hotter) < m(&base));
        prop_assert!(e(&noisier) > e(&base) && m(&noisier) > m(&base));
        prop_assert!(e(&brighter) < e(&base) && m(&brighter) < m(&base));
    }

    #[test]
    fn halving_tolerance_moves_crossing_less_than_old_tolerance(
        a in 1.5f64..8.0,
        shift in -0.5f64..0.5,
        tol in log_uniform(1e-12, 1e-4),
    ) {
        let f = |x: f64| Ok((x - a).sin() + shift * (x - a).powi(3) * 0.01);
        let c1 = find_crossings(1.0, 10.0, &ScanConfig::absolute(tol), f).unwrap();
        let c2 = find_crossings(1.0, 10.0, &ScanConfig::absolute(tol / 2.0), f).unwrap();
        prop_assert_eq!(c1.len(), c2.len());
        for (x, y) in c1.iter().zip(&c2) {
            prop_assert!((x.location - y.location).abs() <= tol);
            prop_assert!(x.bracket_lo < x.location && x.location < x.bracket_hi);
            prop_assert!(x.achieved_tolerance <= tol / 2.0);
        }
    }
}
