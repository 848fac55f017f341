//! Von Neumann (Lüders) conditional probabilities and the two realism tests
//! built from them.
//!
//! For a density matrix `ρ₀` and events with projectors `P_A`, `P_B`:
//!
//! ```text
//! w(B|A) = Tr(P_B P_A ρ₀ P_A P_B) / Tr(P_A ρ₀ P_A)
//! ```
//!
//! The denominator is written as `Tr(P_A ρ₀ P_A)`, which equals `Tr(P_A ρ₀)`
//! for a genuine projector and makes the ratio invariant under rescaling of
//! `P_A`. Intersection events `S∩S₃` are represented by such rescaled
//! projectors.
//!
//! The conditional probability `w(S₁(t₀)|S₂(t)∩S₃(t₀))` that appears when
//! deriving the dynamic inequality is never computed; only its bounds
//! `0 ≤ w ≤ 1` enter, as in the derivation.

use serde::Serialize;

use crate::qlinalg::{apply, projector_normalized, trace_product, ComplexOperator, StateVector};
use crate::{Error, Result};

/// Conditioning events with `Tr(P_A ρ₀ P_A)` at or below this are rejected.
pub const CONDITION_THRESHOLD: f64 = 1e-12;

/// Rounding slack tolerated at the ends of `[0, 1]` before clipping.
pub const PROBABILITY_SLACK: f64 = 1e-12;

/// A probability in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct ConditionalProbability(f64);

impl ConditionalProbability {
    /// Accepts `value` within [`PROBABILITY_SLACK`] of `[0, 1]` and clips it.
    /// Anything further out is an [`Error::OutOfRange`].
    pub fn new(value: f64) -> Result<Self> {
        if !(-PROBABILITY_SLACK..=1.0 + PROBABILITY_SLACK).contains(&value) {
            return Err(Error::OutOfRange {
                what: "probability",
                value,
            });
        }
        Ok(Self(value.clamp(0.0, 1.0)))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Both sides of the static equality; realism predicts `residual == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BayesResidual {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

/// Both sides of the dynamic inequality `lhs <= rhs`; `margin = rhs - lhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InequalityMargin {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

impl InequalityMargin {
    pub fn new(lhs: f64, rhs: f64) -> Self {
        Self {
            lhs,
            rhs,
            margin: rhs - lhs,
        }
    }

    pub fn is_violated(&self) -> bool {
        self.margin < 0.0
    }
}

fn require_density(rho0: &ComplexOperator) -> Result<()> {
    if rho0.is_density() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(
            "initial state must be self-adjoint with unit trace".into(),
        ))
    }
}

/// `w(B|A)` for events `A`, `B` measured on the same state `ρ₀`.
pub fn von_neumann_conditional(
    rho0: &ComplexOperator,
    p_a: &ComplexOperator,
    p_b: &ComplexOperator,
) -> Result<ConditionalProbability> {
    let id = ComplexOperator::identity(rho0.dim())?;
    conditional_after_evolution(rho0, p_a, &id, p_b)
}

/// `w(B(t)|A(t₀))`: `A` is selected at `t₀`, the state then evolves with
/// `evolution` (which may be non-unitary for decaying systems), and `B` is
/// measured.
///
/// ```text
/// Tr(P_B U P_A ρ₀ P_A U† P_B) / Tr(P_A ρ₀ P_A)
/// ```
pub fn conditional_after_evolution(
    rho0: &ComplexOperator,
    p_a: &ComplexOperator,
    evolution: &ComplexOperator,
    p_b: &ComplexOperator,
) -> Result<ConditionalProbability> {
    require_density(rho0)?;
    if !p_a.is_self_adjoint() || !p_b.is_self_adjoint() {
        return Err(Error::InvalidParameter(
            "event operators must be self-adjoint".into(),
        ));
    }
    let denom = trace_product(&[p_a, rho0, p_a])?.re;
    if !(denom > CONDITION_THRESHOLD) {
        return Err(Error::ZeroCondition(denom));
    }
    let u_dag = evolution.adjoint();
    let num = trace_product(&[p_b, evolution, p_a, rho0, p_a, &u_dag, p_b])?.re;
    ConditionalProbability::new(num / denom)
}

/// The event `S∩S₃` for a pure initial state `|Ψ⟩` (event `S₃`) and a
/// rank-one event `S`.
///
/// `P_S|Ψ⟩` is the unnormalized state of the intersection; its projector is
/// `weight · P̂`, with `P̂` the normalized projector and `weight = ‖P_S|Ψ⟩‖²`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionProjector {
    pub projector: ComplexOperator,
    pub weight: f64,
}

impl IntersectionProjector {
    /// `weight · projector`.
    pub fn scaled(&self) -> ComplexOperator {
        self.projector.scale(self.weight)
    }
}

pub fn intersection_projector(
    state: &StateVector,
    event: &ComplexOperator,
) -> Result<IntersectionProjector> {
    let component = apply(event, state)?;
    let weight = component.norm_sqr();
    if !(weight > CONDITION_THRESHOLD) {
        return Err(Error::ZeroCondition(weight));
    }
    Ok(IntersectionProjector {
        projector: projector_normalized(&component)?,
        weight,
    })
}

pub fn static_bayes_residual(
    w_s1_s3: ConditionalProbability,
    w_s2_given_s1s3: ConditionalProbability,
    w_s2_s3: ConditionalProbability,
    w_s1_given_s2s3: ConditionalProbability,
) -> BayesResidual {
    let lhs = w_s1_s3.value() * w_s2_given_s1s3.value();
    let rhs = w_s2_s3.value() * w_s1_given_s2s3.value();
    BayesResidual {
        lhs,
        rhs,
        residual: lhs - rhs,
    }
}

pub fn dynamic_bayes_margin(
    w_s1_s3: ConditionalProbability,
    w_s2_given_s1s3: ConditionalProbability,
    w_s2_s3: ConditionalProbability,
) -> InequalityMargin {
    InequalityMargin::new(w_s1_s3.value() * w_s2_given_s1s3.value(), w_s2_s3.value())
}

/// The four conditional probabilities entering the static equality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StaticBayesTerms {
    pub w_s1_given_s3: ConditionalProbability,
    pub w_s2_given_s3: ConditionalProbability,
    pub w_s2_given_s1s3: ConditionalProbability,
    pub w_s1_given_s2s3: ConditionalProbability,
}

impl StaticBayesTerms {
    pub fn residual(&self) -> BayesResidual {
        static_bayes_residual(
            self.w_s1_given_s3,
            self.w_s2_given_s1s3,
            self.w_s2_given_s3,
            self.w_s1_given_s2s3,
        )
    }
}

/// Evaluates the static equality with explicitly supplied intersection
/// operators `p13 ~ S₁∩S₃` and `p23 ~ S₂∩S₃`.
pub fn static_bayes_terms(
    rho0: &ComplexOperator,
    p3: &ComplexOperator,
    p1: &ComplexOperator,
    p2: &ComplexOperator,
    p13: &ComplexOperator,
    p23: &ComplexOperator,
) -> Result<StaticBayesTerms> {
    Ok(StaticBayesTerms {
        w_s1_given_s3: von_neumann_conditional(rho0, p3, p1)?,
        w_s2_given_s3: von_neumann_conditional(rho0, p3, p2)?,
        w_s2_given_s1s3: von_neumann_conditional(rho0, p13, p2)?,
        w_s1_given_s2s3: von_neumann_conditional(rho0, p23, p1)?,
    })
}

/// Static equality for a pure initial state `|Ψ⟩`, with `S₃ = |Ψ⟩⟨Ψ|` and
/// intersections built by [`intersection_projector`].
///
/// A vanishing `w(S₁|S₃)` or `w(S₂|S₃)` yields [`Error::ZeroCondition`];
/// no value is assigned to the equality in that case.
pub fn pure_state_static_bayes(
    state: &StateVector,
    p1: &ComplexOperator,
    p2: &ComplexOperator,
) -> Result<StaticBayesTerms> {
    let rho0 = crate::qlinalg::projector(state)?;
    let p13 = intersection_projector(state, p1)?.projector;
    let p23 = intersection_projector(state, p2)?.projector;
    static_bayes_terms(&rho0, &rho0, p1, p2, &p13, &p23)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::projector;
    use crate::spin::{singlet_state, spin_state, Direction, Sign};
    use proptest::prelude::*;

    fn p(x: f64) -> ConditionalProbability {
        ConditionalProbability::new(x).unwrap()
    }

    fn deg(x: f64) -> f64 {
        x.to_radians()
    }

    fn event(theta2: f64, theta1: f64) -> ComplexOperator {
        let a = spin_state(Direction::in_xz_plane(theta2).unwrap(), Sign::Plus);
        let b = spin_state(Direction::in_xz_plane(theta1).unwrap(), Sign::Plus);
        projector(&crate::qlinalg::tensor(&a, &b).unwrap()).unwrap()
    }

    #[test]
    fn probability_range_handling() {
        assert_eq!(
            ConditionalProbability::new(1.0 + 5e-13).unwrap().value(),
            1.0
        );
        assert_eq!(ConditionalProbability::new(-5e-13).unwrap().value(), 0.0);
        assert!(matches!(
            ConditionalProbability::new(1.0 + 1e-9),
            Err(Error::OutOfRange { .. })
        ));
        assert!(ConditionalProbability::new(f64::NAN).is_err());
    }

    #[test]
    fn singlet_conditioned_on_itself() {
        let psi = singlet_state(Direction::z_axis());
        let rho = projector(&psi).unwrap();
        let w = von_neumann_conditional(&rho, &rho, &event(deg(90.0), 0.0)).unwrap();
        assert!((w.value() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn orthogonal_events_give_zero() {
        let rho = ComplexOperator::diagonal(&[0.5, 0.5]).unwrap();
        let pa = ComplexOperator::diagonal(&[1.0, 0.0]).unwrap();
        let pb = ComplexOperator::diagonal(&[0.0, 1.0]).unwrap();
        assert_eq!(
            von_neumann_conditional(&rho, &pa, &pb).unwrap().value(),
            0.0
        );
    }

    #[test]
    fn commuting_diagonal_matches_classical_ratio() {
        let probs = [0.1, 0.2, 0.3, 0.4];
        let rho = ComplexOperator::diagonal(&probs).unwrap();
        let a = [1.0, 1.0, 0.0, 1.0];
        let b = [0.0, 1.0, 1.0, 1.0];
        let w = von_neumann_conditional(
            &rho,
            &ComplexOperator::diagonal(&a).unwrap(),
            &ComplexOperator::diagonal(&b).unwrap(),
        )
        .unwrap();
        // w(A) = 0.7, w(A∩B) = 0.6
        assert!((w.value() - 0.6 / 0.7).abs() < 1e-15);
    }

    #[test]
    fn vanishing_condition_is_an_error() {
        let rho = ComplexOperator::diagonal(&[1.0, 0.0]).unwrap();
        let pa = ComplexOperator::diagonal(&[0.0, 1.0]).unwrap();
        assert!(matches!(
            von_neumann_conditional(&rho, &pa, &pa),
            Err(Error::ZeroCondition(_))
        ));
    }

    #[test]
    fn non_density_is_rejected() {
        let rho = ComplexOperator::diagonal(&[1.0, 1.0]).unwrap();
        let pa = ComplexOperator::identity(2).unwrap();
        assert!(matches!(
            von_neumann_conditional(&rho, &pa, &pa),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn intersection_weight_for_singlet() {
        let psi = singlet_state(Direction::z_axis());
        for (theta_ab, want) in [
            (90.0, 0.25),
            (180.0, 0.5),
            (30.0, 0.5 * (deg(15.0)).sin().powi(2)),
        ] {
            let ip = intersection_projector(&psi, &event(deg(theta_ab), 0.0)).unwrap();
            assert!((ip.weight - want).abs() < 1e-14, "θ_ab = {theta_ab}");
            assert!(ip.projector.is_projector());
        }
        // P_{S1∩S3} = weight · P_{S1}
        let p1 = event(deg(70.0), deg(10.0));
        let ip = intersection_projector(&psi, &p1).unwrap();
        assert!(ip.scaled().max_abs_diff(&p1.scale(ip.weight)).unwrap() < 1e-14);
    }

    #[test]
    fn intersection_with_orthogonal_event_fails() {
        let psi = singlet_state(Direction::z_axis());
        // equal signs on the same axis never occur in the singlet
        assert!(matches!(
            intersection_projector(&psi, &event(0.5, 0.5)),
            Err(Error::ZeroCondition(_))
        ));
    }

    #[test]
    fn residual_and_margin_arithmetic() {
        let r = static_bayes_residual(p(0.3), p(0.3), p(0.3), p(0.3));
        assert_eq!(r.residual, 0.0);

        let m = dynamic_bayes_margin(p(0.0), p(0.7), p(0.2));
        assert_eq!(m.margin, 0.2);
        assert!(!m.is_violated());

        let m = dynamic_bayes_margin(p(0.25), p(deg(22.5).cos().powi(4)), p(0.0));
        assert!((m.margin + 0.25 * deg(22.5).cos().powi(4)).abs() < 1e-16);
        assert!(m.is_violated());
    }

    #[test]
    fn spin_static_residual_through_matrices() {
        let psi = singlet_state(Direction::z_axis());
        let terms =
            pure_state_static_bayes(&psi, &event(deg(90.0), 0.0), &event(deg(45.0), 0.0)).unwrap();
        let cross = deg(22.5).cos().powi(2);
        assert!((terms.w_s2_given_s1s3.value() - cross).abs() < 1e-12);
        assert!((terms.w_s1_given_s2s3.value() - cross).abs() < 1e-12);
        let want = cross * 0.5 * (deg(45.0).sin().powi(2) - deg(22.5).sin().powi(2));
        assert!((terms.residual().residual - want).abs() < 1e-12);
        assert!((terms.residual().residual - 0.150888).abs() < 1e-6);
    }

    // Classical oracle: probabilities of events that are unions of basis
    // outcomes, read off a probability table.
    fn table_prob(weights: &[f64], events: &[&[f64]]) -> f64 {
        (0..weights.len())
            .filter(|&i| events.iter().all(|e| e[i] == 1.0))
            .map(|i| weights[i])
            .sum()
    }

    proptest! {
        #[test]
        fn self_conditioning_is_certain(re in prop::collection::vec(-1.0f64..1.0, 4), im in prop::collection::vec(-1.0f64..1.0, 4), pre in prop::collection::vec(-1.0f64..1.0, 4)) {
            let v = StateVector::new(re.iter().zip(&im).map(|(&a, &b)| num_complex::Complex64::new(a, b)).collect()).unwrap();
            prop_assume!(v.norm_sqr() > 1e-3);
            let rho = projector(&v.normalized().unwrap()).unwrap();
            let w = StateVector::from_real(&pre).unwrap();
            prop_assume!(w.norm_sqr() > 1e-3);
            let pa = crate::qlinalg::projector_normalized(&w).unwrap();
            prop_assume!(trace_product(&[&pa, &rho]).unwrap().re > 1e-6);
            let c = von_neumann_conditional(&rho, &pa, &pa).unwrap();
            prop_assert!((c.value() - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn scaling_the_condition_cancels(raw in prop::collection::vec(-1.0f64..1.0, 8), scale in 1e-3f64..1e3, theta in 0.0f64..std::f64::consts::PI) {
            let v = StateVector::new(raw.chunks(2).map(|c| num_complex::Complex64::new(c[0], c[1])).collect()).unwrap();
            prop_assume!(v.norm_sqr() > 1e-3);
            let rho = projector(&v.normalized().unwrap()).unwrap();
            let pa = event(theta, 0.3);
            let pb = event(0.7, theta / 2.0);
            prop_assume!(trace_product(&[&pa, &rho]).unwrap().re > 1e-6);
            let w1 = von_neumann_conditional(&rho, &pa, &pb).unwrap().value();
            let w2 = von_neumann_conditional(&rho, &pa.scale(scale), &pb).unwrap().value();
            prop_assert!((w1 - w2).abs() <= 1e-12);
        }

        #[test]
        fn classical_limit_has_zero_residual(
            raw in prop::collection::vec(0.01f64..1.0, 4),
            s1 in prop::collection::vec(prop::bool::ANY, 4),
            s2 in prop::collection::vec(prop::bool::ANY, 4),
            s3 in prop::collection::vec(prop::bool::ANY, 4),
        ) {
            let total: f64 = raw.iter().sum();
            let weights: Vec<f64> = raw.iter().map(|x| x / total).collect();
            let ind = |s: &[bool]| s.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect::<Vec<f64>>();
            let (e1, e2, e3) = (ind(&s1), ind(&s2), ind(&s3));
            prop_assume!(table_prob(&weights, &[&e1, &e3]) > 1e-9 && table_prob(&weights, &[&e2, &e3]) > 1e-9);

            let d = |e: &[f64]| ComplexOperator::diagonal(e).unwrap();
            let rho = d(&weights);
            let (p1, p2, p3) = (d(&e1), d(&e2), d(&e3));
            let terms = static_bayes_terms(&rho, &p3, &p1, &p2, &(&p1 * &p3), &(&p2 * &p3)).unwrap();

            let s3p = table_prob(&weights, &[&e3]);
            let oracle_s1_s3 = table_prob(&weights, &[&e1, &e3]) / s3p;
            let oracle_s2_s13 = table_prob(&weights, &[&e1, &e2, &e3]) / table_prob(&weights, &[&e1, &e3]);
            prop_assert!((terms.w_s1_given_s3.value() - oracle_s1_s3).abs() < 1e-12);
            prop_assert!((terms.w_s2_given_s1s3.value() - oracle_s2_s13).abs() < 1e-12);
            prop_assert!(terms.residual().residual.abs() < 1e-9);
        }
    }
}
