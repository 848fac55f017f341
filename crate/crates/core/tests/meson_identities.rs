//! Neutral meson formulas against independent constructions.

use bayes_realism::config::ParameterFile;
use bayes_realism::mesons::{
    basis_vector, bell_state, f_function, flavour_evolution, g_functions, pair_probability_matrix,
    static_probability, table_ratio_matrix, transition_probability, MesonEvent, MesonParams,
    MesonState, MixingCoefficients, Transition, F_INDICES, TABLE_ROWS,
};
use bayes_realism::qlinalg::{apply, tensor, ComplexOperator, StateVector};
use num_complex::Complex64;
use proptest::prelude::*;

use MesonState::{MBar, M, M1, M2, MH, ML};

const STATIC_EVENTS: [(MesonState, MesonState); 12] = [
    (M1, MBar),
    (M1, M),
    (M2, MBar),
    (M2, M),
    (M1, MH),
    (M2, MH),
    (M1, ML),
    (M2, ML),
    (MH, MBar),
    (MH, M),
    (MBar, ML),
    (M, ML),
];

/// Rates in units of Γ = 1, so `t` is measured in lifetimes. The overlap
/// `δ = (1 − r²)/(1 + r²) = ⟨M_L|M_H⟩` respects
/// `|δ| |Γ + iΔM| < √(Γ_L Γ_H)`, without which the evolution is not a
/// contraction.
fn params_strategy() -> impl Strategy<Value = MesonParams> {
    (
        -1.9f64..1.9,
        -30.0f64..30.0,
        -0.95f64..0.95,
        -std::f64::consts::PI..std::f64::consts::PI,
    )
        .prop_map(|(dg, dm, u, zeta)| {
            let delta = u * ((1.0 - dg * dg / 4.0) / (1.0 + dm * dm)).sqrt();
            let r = ((1.0 - delta) / (1.0 + delta)).sqrt();
            MesonParams::new("random", dg, dm, 1.0, r, zeta).unwrap()
        })
}

/// `U = V diag(e^{−iE_L t}, e^{−iE_H t}) V⁻¹` with `V = [M_L  M_H]`.
fn evolution_by_eigenvectors(t: f64, p: &MesonParams, mix: &MixingCoefficients) -> ComplexOperator {
    let l = basis_vector(ML, mix, 0.0);
    let h = basis_vector(MH, mix, 0.0);
    let (l, h) = (l.amplitudes(), h.amplitudes());
    let det = l[0] * h[1] - h[0] * l[1];
    let inv = [[h[1] / det, -h[0] / det], [-l[1] / det, l[0] / det]];
    let el = Complex64::new(-p.gamma_light() * t / 2.0, p.delta_m * t / 2.0).exp();
    let eh = Complex64::new(-p.gamma_heavy() * t / 2.0, -p.delta_m * t / 2.0).exp();
    let v = [[l[0], h[0]], [l[1], h[1]]];
    let d = [el, eh];
    let entry = |i: usize, j: usize| {
        (0..2)
            .map(|k| v[i][k] * d[k] * inv[k][j])
            .sum::<Complex64>()
    };
    ComplexOperator::from_rows(vec![
        vec![entry(0, 0), entry(0, 1)],
        vec![entry(1, 0), entry(1, 1)],
    ])
    .unwrap()
}

fn matrix_transition(kind: Transition, t: f64, p: &MesonParams) -> f64 {
    let mix = p.mixing().unwrap();
    let u = evolution_by_eigenvectors(t, p, &mix);
    let v = |s| basis_vector(s, &mix, 0.0);
    match kind {
        // |⟨to(t)|from⟩|² = |⟨from|U|to⟩|²
        Transition::Single { from, to } => v(from)
            .inner(&apply(&u, &v(to)).unwrap())
            .unwrap()
            .norm_sqr(),
        Transition::Pair(e) => {
            let evolved = apply(&u.kron(&u).unwrap(), &bell_state()).unwrap();
            tensor(&v(e.particle2), &v(e.particle1))
                .unwrap()
                .inner(&evolved)
                .unwrap()
                .norm_sqr()
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn g_modulus_and_cross_identities(p in params_strategy(), tau in 0.0f64..20.0) {
        let (gp, gm) = g_functions(tau, &p).unwrap();
        let decay = (-p.gamma_mean * tau).exp() / 2.0;
        let y = p.delta_gamma * tau / 2.0;
        let c = (p.delta_m * tau).cos();
        prop_assert!((gp.norm_sqr() - decay * (y.cosh() + c)).abs() < 1e-12);
        prop_assert!((gm.norm_sqr() - decay * (y.cosh() - c)).abs() < 1e-12);
        let cross = gp.conj() * gm;
        let want = -decay * Complex64::new(y.sinh(), (p.delta_m * tau).sin());
        prop_assert!((cross - want).norm() < 1e-12);
    }

    #[test]
    fn static_closed_forms_match_pipeline(r in 0.05f64..20.0, zeta in -7.0f64..7.0, alpha in -7.0f64..7.0) {
        let mix = MixingCoefficients::from_ratio(r, zeta).unwrap();
        for (a, b) in STATIC_EVENTS {
            let e = MesonEvent::new(a, b);
            let closed = static_probability(e, &mix).unwrap();
            prop_assert!((closed - pair_probability_matrix(e, &mix, 0.0).unwrap()).abs() < 1e-12);
            prop_assert!((closed - pair_probability_matrix(e, &mix, alpha).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn four_cp_flavour_quarters_sum_to_one(r in 0.05f64..20.0, zeta in -7.0f64..7.0) {
        let mix = MixingCoefficients::from_ratio(r, zeta).unwrap();
        let total: f64 = [(M1, MBar), (M1, M), (M2, MBar), (M2, M)]
            .iter()
            .map(|&(a, b)| pair_probability_matrix(MesonEvent::new(a, b), &mix, 0.0).unwrap())
            .sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
        prop_assert!((mix.p.norm_sqr() + mix.q.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn transitions_match_eigen_decomposition(p in params_strategy(), t in 0.0f64..8.0) {
        for kind in Transition::ALL {
            let closed = transition_probability(kind, t, &p).unwrap();
            let oracle = matrix_transition(kind, t, &p);
            prop_assert!((closed - oracle).abs() < 1e-10 * oracle.max(1.0), "{kind}: {closed} vs {oracle}");
        }
    }

    #[test]
    fn evolution_matrix_matches_eigen_decomposition(p in params_strategy(), t in 0.0f64..8.0) {
        let mix = p.mixing().unwrap();
        let u = flavour_evolution(t, &p, &mix, 0.0).unwrap();
        prop_assert!(u.max_abs_diff(&evolution_by_eigenvectors(t, &p, &mix)).unwrap() < 1e-10);
    }

    #[test]
    fn f_functions_match_bayes_ratio(p in params_strategy(), z in 0.0f64..6.0) {
        let mix = p.mixing().unwrap();
        prop_assume!((mix.p - mix.q).norm_sqr() > 1e-6 && (mix.p + mix.q).norm_sqr() > 1e-6);
        for row in TABLE_ROWS {
            let ratio = table_ratio_matrix(row.event, z, &p).unwrap();
            let f = f_function(row.f_index, z, &p).unwrap();
            prop_assert!((ratio - f).abs() < 1e-8 * f.max(1.0), "{}: {ratio} vs {f}", row.event);
        }
    }

    #[test]
    fn every_f_starts_at_one(p in params_strategy()) {
        for n in F_INDICES {
            prop_assert!((f_function(n, 0.0, &p).unwrap() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn cp_conserving_reduction_of_f1() {
    let file = ParameterFile::builtin();
    for name in file.names() {
        let base = file.get(name).unwrap();
        for (zeta, sign) in [(0.0, 1.0), (std::f64::consts::PI, -1.0)] {
            let p = MesonParams {
                r: 1.0,
                zeta,
                ..base.clone()
            };
            for k in 0..400 {
                let t = p.time_from_z(k as f64 * 0.05);
                let y = sign * p.delta_gamma * t / 2.0;
                let reduced =
                    0.25 * ((2.0 * y).exp() + 1.0 + 2.0 * y.exp() * (p.delta_m * t).cos());
                let f1 = f_function(1, t, &p).unwrap();
                assert!(
                    (f1 - reduced).abs() < 1e-12 * reduced.max(1.0),
                    "{name} ζ={zeta} k={k}: {f1} vs {reduced}"
                );
                // F₁ ≤ 1  ⇔  e^{y} + 2cos(ΔMt) ≤ 3e^{−y}
                let simple = y.exp() + 2.0 * (p.delta_m * t).cos() <= 3.0 * (-y).exp();
                if (f1 - 1.0).abs() > 1e-12 {
                    assert_eq!(f1 <= 1.0, simple);
                }
            }
        }
    }
}

#[test]
fn evolved_singlet_only_decays() {
    let p = ParameterFile::builtin().get("K").unwrap();
    let mix = p.mixing().unwrap();
    for z in [0.3, 1.0, 2.5] {
        let t = p.time_from_z(z);
        let u = flavour_evolution(t, &p, &mix, 0.0).unwrap();
        let psi = bell_state();
        let evolved = apply(&u.kron(&u).unwrap(), &psi).unwrap();
        let det = u.get(0, 0) * u.get(1, 1) - u.get(0, 1) * u.get(1, 0);
        let diff: StateVector = evolved.sub(&psi.scale(det)).unwrap();
        assert!(diff.norm_sqr().sqrt() < 1e-14);
        assert!((det.norm_sqr() - (-2.0 * z).exp()).abs() < 1e-14);
    }
}
