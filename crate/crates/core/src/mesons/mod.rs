//! Flavour-entangled neutral pseudoscalar meson pairs (K⁰, D⁰, B_s⁰).
//!
//! Three dichotomic "directions" are available: flavour (`M`, `M̄`), CP
//! parity (`M₁`, `M₂`) and mass/lifetime (`M_L`, `M_H`). The mass
//! eigenstates are not orthogonal when `|p| ≠ |q|`. A pair produced from a
//! `1⁻⁻` vector meson starts in the flavour singlet
//! `(|M⟩|M̄⟩ − |M̄⟩|M⟩)/√2` and, being antisymmetric, only decays in time:
//! `(U ⊗ U)|Ψ⁻⟩ = det(U)|Ψ⁻⟩`.
//!
//! Sign convention: `ΔΓ = Γ_H − Γ_L`, the opposite of the PDG convention, so
//! the measured values of all three species are negative. `ΔM = M_H − M_L`.
//! Rates are stored in s⁻¹ (ħ = 1); [`crate::config`] converts from MeV.
//!
//! Parameters breaking the Bell–Steinberger bound
//! `|⟨M_L|M_H⟩| |Γ + iΔM| ≤ √(Γ_L Γ_H)` make the evolution non-contractive:
//! the closed forms still evaluate, but conditional probabilities built from
//! explicit operators can exceed 1 and are rejected.
//!
//! The arbitrary CP phase `α` is fixed to zero except where a function
//! takes it explicitly to demonstrate that nothing observable depends on it.

mod basis;
mod functions;
mod params;
mod probabilities;
mod table;

pub use basis::{basis_vector, bell_state, flavour_evolution, MesonEvent, MesonState};
pub use functions::{
    f_function, f_function_at_z, g_functions, guaranteed_violation_time, static_equality_residual,
    violation_scan, EqualityVariant, F_INDICES,
};
pub use params::{
    mixing_from_params, MesonParams, MixingCoefficients, HBAR_MEV_S, SPEED_OF_LIGHT_MM_PER_S,
};
pub use probabilities::{
    pair_probability_matrix, static_probability, transition_probability, Transition,
};
pub use table::{table_ratio_matrix, TableRow, TABLE_ROWS};
