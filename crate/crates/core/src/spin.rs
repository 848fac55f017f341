//! Spin-½ singlet pair: the electron is particle (2), the positron particle
//! (1). At `t₀ = 0` the pair is in `|Ψ⁻⟩`; afterwards both spins precess
//! around `y` in a constant field, in opposite senses, with phase `ωt`.
//!
//! Events used throughout:
//!
//! ```text
//! S₁(t₀) = {a⁽²⁾₊, b⁽¹⁾₊, t₀}     S₂(t) = {a⁽²⁾_α', b⁽¹⁾_β', t}     S₃ = singlet at t₀
//! ```
//!
//! Closed forms live next to a full 4×4 matrix route
//! ([`static_pipeline`], [`case_probabilities_matrix`]) so the two can be
//! checked against each other. Only directions in the `(x, z)` plane
//! (`φ = 0`) have been cross-checked; other `φ` values are accepted and use
//! the precession formulas verbatim.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::conditional::{
    conditional_after_evolution, dynamic_bayes_margin, intersection_projector,
    pure_state_static_bayes, von_neumann_conditional, ConditionalProbability, InequalityMargin,
    StaticBayesTerms,
};
use crate::qlinalg::{projector, tensor, trace_product, ComplexOperator, StateVector};
use crate::{Error, Result};

/// CODATA 2018 electron mass, kg.
pub const ELECTRON_MASS_KG: f64 = 9.109_383_701_5e-31;
/// Elementary charge, C (exact in SI).
pub const ELEMENTARY_CHARGE_C: f64 = 1.602_176_634e-19;

/// Quantization axis `n = (sin θ cos φ, sin θ sin φ, cos θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::InvalidParameter(format!(
                "polar angle {theta} rad outside [0, π]"
            )));
        }
        if !(-PI..=PI).contains(&phi) {
            return Err(Error::InvalidParameter(format!(
                "azimuth {phi} rad outside [-π, π]"
            )));
        }
        Ok(Self { theta, phi })
    }

    pub fn in_xz_plane(theta: f64) -> Result<Self> {
        Self::new(theta, 0.0)
    }

    pub fn z_axis() -> Self {
        Self {
            theta: 0.0,
            phi: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Particle {
    /// Particle (2).
    Electron,
    /// Particle (1).
    Positron,
}

/// Dimensionless precession phase `ω·t`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct PrecessionPhase(f64);

impl PrecessionPhase {
    pub fn new(omega_t: f64) -> Result<Self> {
        if omega_t.is_finite() {
            Ok(Self(omega_t))
        } else {
            Err(Error::InvalidParameter(format!(
                "precession phase {omega_t} is not finite"
            )))
        }
    }

    /// Phase accumulated after `time_s` seconds in a field of `field_tesla`.
    pub fn from_lab(field_tesla: f64, time_s: f64) -> Result<Self> {
        let omega = larmor_frequency(field_tesla, ELECTRON_MASS_KG, ELEMENTARY_CHARGE_C)?;
        Self::new(omega * time_s)
    }

    pub fn zero() -> Self {
        Self(0.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Outcome signs `(α', β')` of `S₂(t) = {a⁽²⁾_α', b⁽¹⁾_β', t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpinCase {
    pub alpha: Sign,
    pub beta: Sign,
}

impl SpinCase {
    pub const ALL: [SpinCase; 4] = [
        SpinCase {
            alpha: Sign::Plus,
            beta: Sign::Plus,
        },
        SpinCase {
            alpha: Sign::Minus,
            beta: Sign::Minus,
        },
        SpinCase {
            alpha: Sign::Plus,
            beta: Sign::Minus,
        },
        SpinCase {
            alpha: Sign::Minus,
            beta: Sign::Plus,
        },
    ];

    pub fn new(alpha: Sign, beta: Sign) -> Self {
        Self { alpha, beta }
    }
}

impl fmt::Display for SpinCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.alpha.symbol(), self.beta.symbol())
    }
}

impl FromStr for SpinCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sign = |c| match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            _ => Err(Error::InvalidParameter(format!(
                "bad spin case {s:?}, expected ++, --, +- or -+"
            ))),
        };
        let chars: Vec<char> = s.chars().collect();
        match chars.as_slice() {
            [a, b] => Ok(Self::new(sign(*a)?, sign(*b)?)),
            _ => Err(Error::InvalidParameter(format!(
                "bad spin case {s:?}, expected ++, --, +- or -+"
            ))),
        }
    }
}

fn cis(angle: f64) -> Complex64 {
    Complex64::from_polar(1.0, angle)
}

fn ket(a: Complex64, b: Complex64) -> StateVector {
    StateVector::new(vec![a, b]).expect("two finite amplitudes")
}

/// Spin projection `±½` onto `n` at `t₀`.
pub fn spin_state(n: Direction, sign: Sign) -> StateVector {
    let (s, c) = (n.theta / 2.0).sin_cos();
    let (em, ep) = (cis(-n.phi / 2.0), cis(n.phi / 2.0));
    match sign {
        Sign::Plus => ket(em * c, ep * s),
        Sign::Minus => ket(-em * s, ep * c),
    }
}

/// `(1/√2)(|n₊⁽²⁾⟩|n₋⁽¹⁾⟩ − |n₋⁽²⁾⟩|n₊⁽¹⁾⟩)`; the same ray for every `n`.
pub fn singlet_state(n: Direction) -> StateVector {
    let plus = spin_state(n, Sign::Plus);
    let minus = spin_state(n, Sign::Minus);
    antisymmetric_pair(&plus, &minus, &minus, &plus)
}

fn antisymmetric_pair(
    e_first: &StateVector,
    p_first: &StateVector,
    e_second: &StateVector,
    p_second: &StateVector,
) -> StateVector {
    let first = tensor(e_first, p_first).expect("dimension 2");
    let second = tensor(e_second, p_second).expect("dimension 2");
    first
        .sub(&second)
        .expect("dimension 4")
        .scale(Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0))
}

/// The state that started as `spin_state(n, sign)` after precessing for a
/// phase `ωt`. Electron and positron rotate in opposite senses.
pub fn evolved_spin_state(
    particle: Particle,
    n: Direction,
    sign: Sign,
    phase: PrecessionPhase,
) -> StateVector {
    let (s, c) = (n.theta / 2.0).sin_cos();
    let (sw, cw) = phase.0.sin_cos();
    let (em, ep) = (cis(-n.phi / 2.0), cis(n.phi / 2.0));
    match (particle, sign) {
        (Particle::Electron, Sign::Plus) => {
            ket(c * cw * em - s * sw * ep, c * sw * em + s * cw * ep)
        }
        (Particle::Electron, Sign::Minus) => {
            ket(-s * cw * em - c * sw * ep, -s * sw * em + c * cw * ep)
        }
        (Particle::Positron, Sign::Plus) => {
            ket(c * cw * em + s * sw * ep, -c * sw * em + s * cw * ep)
        }
        (Particle::Positron, Sign::Minus) => {
            ket(-s * cw * em + c * sw * ep, s * sw * em + c * cw * ep)
        }
    }
}

/// One-particle evolution `U = Σ_± |n_±(t)⟩⟨n_±|`, built from the evolved
/// states of the `z` axis.
pub fn precession_operator(particle: Particle, phase: PrecessionPhase) -> ComplexOperator {
    let z = Direction::z_axis();
    let terms = [Sign::Plus, Sign::Minus].map(|s| {
        ComplexOperator::outer(
            &evolved_spin_state(particle, z, s, phase),
            &spin_state(z, s),
        )
        .expect("dimension 2")
    });
    &terms[0] + &terms[1]
}

/// `U_e ⊗ U_p` acting on the pair.
pub fn pair_evolution(phase: PrecessionPhase) -> ComplexOperator {
    precession_operator(Particle::Electron, phase)
        .kron(&precession_operator(Particle::Positron, phase))
        .expect("dimension 2")
}

/// `|Ψ⁻(t)⟩` assembled from the precessed one-particle states along `n`.
pub fn evolved_singlet(n: Direction, phase: PrecessionPhase) -> StateVector {
    let e = |s| evolved_spin_state(Particle::Electron, n, s, phase);
    let p = |s| evolved_spin_state(Particle::Positron, n, s, phase);
    antisymmetric_pair(
        &e(Sign::Plus),
        &p(Sign::Minus),
        &e(Sign::Minus),
        &p(Sign::Plus),
    )
}

/// Larmor frequency `ω = |e|B / (2m)` in rad/s (SI units: tesla, kg, C).
pub fn larmor_frequency(field_tesla: f64, mass_kg: f64, charge_c: f64) -> Result<f64> {
    if !(field_tesla >= 0.0) || !field_tesla.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "field strength {field_tesla} T must be ≥ 0"
        )));
    }
    if !(mass_kg > 0.0) || !(charge_c > 0.0) || !mass_kg.is_finite() || !charge_c.is_finite() {
        return Err(Error::InvalidParameter(
            "mass and charge magnitude must be positive".into(),
        ));
    }
    Ok(charge_c * field_tesla / (2.0 * mass_kg))
}

/// `w(S₁|S₃) = ½ sin²(θ_ab/2)`.
pub fn static_conditional(theta_ab: f64) -> ConditionalProbability {
    ConditionalProbability::new(0.5 * (theta_ab / 2.0).sin().powi(2))
        .expect("½ sin² lies in [0, ½]")
}

/// `sin²(θ_ab/2) − sin²(θ_bc/2)`; realism requires zero.
pub fn static_equality_gap(theta_ab: f64, theta_bc: f64) -> f64 {
    (theta_ab / 2.0).sin().powi(2) - (theta_bc / 2.0).sin().powi(2)
}

/// `w(S₂(t)|S₃)` and `w(S₂(t)|S₁∩S₃)` for one outcome case.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CaseProbabilities {
    pub w_s2_given_s3: ConditionalProbability,
    pub w_s2_given_s1s3: ConditionalProbability,
}

pub fn case_probabilities(
    case: SpinCase,
    theta_ba: f64,
    phase: PrecessionPhase,
) -> CaseProbabilities {
    let wt = phase.0;
    let shifted = theta_ba / 2.0 + 2.0 * wt;
    let (s, c) = wt.sin_cos();
    let (w_s3, w_s13) = match (case.alpha, case.beta) {
        (Sign::Plus, Sign::Plus) => (0.5 * shifted.sin().powi(2), c.powi(4)),
        (Sign::Minus, Sign::Minus) => (0.5 * shifted.sin().powi(2), s.powi(4)),
        _ => (0.5 * shifted.cos().powi(2), (s * c).powi(2)),
    };
    CaseProbabilities {
        w_s2_given_s3: ConditionalProbability::new(w_s3).expect("in [0, ½]"),
        w_s2_given_s1s3: ConditionalProbability::new(w_s13).expect("in [0, 1]"),
    }
}

/// Dynamic inequality for `S₁(t₀) = {a₊, b₊}` and the given `S₂(t)` case.
pub fn spin_inequality_margin(
    case: SpinCase,
    theta_ba: f64,
    phase: PrecessionPhase,
) -> InequalityMargin {
    let probs = case_probabilities(case, theta_ba, phase);
    dynamic_bayes_margin(
        static_conditional(theta_ba),
        probs.w_s2_given_s1s3,
        probs.w_s2_given_s3,
    )
}

/// Two-particle event `{n2⁽²⁾_s2, n1⁽¹⁾_s1}`.
pub fn pair_event(n2: Direction, s2: Sign, n1: Direction, s1: Sign) -> ComplexOperator {
    projector(&tensor(&spin_state(n2, s2), &spin_state(n1, s1)).expect("dimension 2"))
        .expect("normalized")
}

/// Matrix-route evaluation of the static equality for three axes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinStaticReport {
    pub terms: StaticBayesTerms,
    /// `Tr(P_{S₁} P_{S₂})`.
    pub cross_term: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    /// `sin²(θ_ab/2) − sin²(θ_bc/2)`.
    pub equality_gap: f64,
}

/// Static equality with `S₁ = {a⁽²⁾₊, b⁽¹⁾₊}`, `S₂ = {c⁽²⁾₊, b⁽¹⁾₊}`, evaluated
/// through explicit projectors and the von Neumann rule.
pub fn static_pipeline(a: Direction, b: Direction, c: Direction) -> Result<SpinStaticReport> {
    let psi = singlet_state(Direction::z_axis());
    let p1 = pair_event(a, Sign::Plus, b, Sign::Plus);
    let p2 = pair_event(c, Sign::Plus, b, Sign::Plus);
    let terms = pure_state_static_bayes(&psi, &p1, &p2)?;
    let residual = terms.residual();
    Ok(SpinStaticReport {
        terms,
        cross_term: trace_product(&[&p1, &p2])?.re,
        lhs: residual.lhs,
        rhs: residual.rhs,
        residual: residual.residual,
        equality_gap: static_equality_gap(a.theta - b.theta, b.theta - c.theta),
    })
}

/// [`case_probabilities`] computed from 4×4 matrices: `w(S₂(t)|S₃)` from the
/// evolved singlet, `w(S₂(t)|S₁∩S₃)` by evolving the intersection projector
/// with `U_e ⊗ U_p`.
pub fn case_probabilities_matrix(
    case: SpinCase,
    a: Direction,
    b: Direction,
    phase: PrecessionPhase,
) -> Result<CaseProbabilities> {
    let z = Direction::z_axis();
    let psi0 = singlet_state(z);
    let rho0 = projector(&psi0)?;
    let p1 = pair_event(a, Sign::Plus, b, Sign::Plus);
    let p2 = pair_event(a, case.alpha, b, case.beta);

    let rho_t = projector(&evolved_singlet(z, phase))?;
    let w_s2_given_s3 = von_neumann_conditional(&rho_t, &rho_t, &p2)?;

    let p13 = intersection_projector(&psi0, &p1)?.projector;
    let w_s2_given_s1s3 = conditional_after_evolution(&rho0, &p13, &pair_evolution(phase), &p2)?;
    Ok(CaseProbabilities {
        w_s2_given_s3,
        w_s2_given_s1s3,
    })
}
