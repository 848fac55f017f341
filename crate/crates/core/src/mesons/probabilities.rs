use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::basis::{basis_vector, bell_state, MesonEvent, MesonState};
use super::functions::g_functions;
use super::params::{MesonParams, MixingCoefficients};
use crate::qlinalg::tensor;
use crate::{Error, Result};

use MesonState::{MBar, M, M1, M2, MH, ML};

/// Joint probability `|⟨e₂|⟨e₁|Ψ⁻⟩|²` at `t₀` from its closed form.
pub fn static_probability(event: MesonEvent, mix: &MixingCoefficients) -> Result<f64> {
    let (p, q) = (mix.p, mix.q);
    let w = match (event.particle2, event.particle1) {
        (M1, MBar) | (M1, M) | (M2, MBar) | (M2, M) => 0.25,
        (M1, MH) | (M2, ML) => 0.25 * (p + q).norm_sqr(),
        (M2, MH) | (M1, ML) => 0.25 * (p - q).norm_sqr(),
        (MH, MBar) | (MBar, ML) => 0.5 * p.norm_sqr(),
        (MH, M) | (M, ML) => 0.5 * q.norm_sqr(),
        _ => {
            return Err(Error::UnsupportedEvent(format!(
                "no static closed form for {event}"
            )))
        }
    };
    Ok(w)
}

/// The same joint probability through explicit two-particle vectors, with
/// CP phase `alpha` in every basis vector. Defined for any pair of states.
pub fn pair_probability_matrix(
    event: MesonEvent,
    mix: &MixingCoefficients,
    alpha: f64,
) -> Result<f64> {
    let e2 = basis_vector(event.particle2, mix, alpha);
    let e1 = basis_vector(event.particle1, mix, alpha);
    let joint = tensor(&e2, &e1)?;
    Ok(joint.inner(&bell_state())?.norm_sqr())
}

/// Time-dependent probabilities. `Single { from, to }` is written
/// `from(0) → to(t)` and evaluates `|⟨to(t)|from⟩|²`; `Pair` is the joint
/// probability of an event on the evolved pair state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Transition {
    Single { from: MesonState, to: MesonState },
    Pair(MesonEvent),
}

impl Transition {
    pub const ALL: [Transition; 12] = [
        Transition::Single { from: M1, to: M1 },
        Transition::Single { from: M2, to: M1 },
        Transition::Single { from: M2, to: M2 },
        Transition::Single { from: M1, to: M2 },
        Transition::Single {
            from: MBar,
            to: MBar,
        },
        Transition::Single { from: M, to: MBar },
        Transition::Single { from: M, to: M },
        Transition::Single { from: MBar, to: M },
        Transition::Pair(MesonEvent {
            particle2: M1,
            particle1: MBar,
        }),
        Transition::Pair(MesonEvent {
            particle2: M1,
            particle1: M,
        }),
        Transition::Pair(MesonEvent {
            particle2: M2,
            particle1: MBar,
        }),
        Transition::Pair(MesonEvent {
            particle2: M2,
            particle1: M,
        }),
    ];
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transition::Single { from, to } => write!(f, "{}->{}", from.ascii(), to.ascii()),
            Transition::Pair(e) => write!(f, "({},{})", e.particle2.ascii(), e.particle1.ascii()),
        }
    }
}

impl FromStr for Transition {
    type Err = Error;

    /// `"M1->M2"` or `"(M1,Mbar)"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((from, to)) = s.split_once("->") {
            return Ok(Transition::Single {
                from: from.parse()?,
                to: to.parse()?,
            });
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| Error::UnsupportedEvent(format!("cannot parse transition `{s}`")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::UnsupportedEvent(format!("cannot parse transition `{s}`")))?;
        Ok(Transition::Pair(MesonEvent::new(a.parse()?, b.parse()?)))
    }
}

/// Closed-form transition probability at proper time `t` (seconds).
pub fn transition_probability(kind: Transition, t: f64, params: &MesonParams) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "time must be non-negative, got {t}"
        )));
    }
    let mix = params.mixing()?;
    let (gp, gm) = g_functions(t, params)?;
    let (qp, pq) = (mix.q_over_p(), mix.p_over_q());
    let k = 0.5 * (qp + pq);
    let w = match kind {
        Transition::Single { from: M1, to: M1 } => (gp - k * gm).norm_sqr(),
        Transition::Single { from: M2, to: M2 } => (gp + k * gm).norm_sqr(),
        Transition::Single { from: M2, to: M1 } | Transition::Single { from: M1, to: M2 } => {
            (0.5 * (qp - pq) * gm).norm_sqr()
        }
        Transition::Single {
            from: MBar,
            to: MBar,
        }
        | Transition::Single { from: M, to: M } => gp.norm_sqr(),
        Transition::Single { from: M, to: MBar } => (pq * gm).norm_sqr(),
        Transition::Single { from: MBar, to: M } => (qp * gm).norm_sqr(),
        Transition::Pair(MesonEvent {
            particle2: M1 | M2,
            particle1: M | MBar,
        }) => 0.25 * (-2.0 * params.gamma_mean * t).exp(),
        other => {
            return Err(Error::UnsupportedEvent(format!(
                "no closed form for transition {other}"
            )))
        }
    };
    Ok(w)
}
