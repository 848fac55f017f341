use serde::Serialize;

use super::basis::{basis_vector, bell_state, flavour_evolution, MesonEvent, MesonState};
use super::params::MesonParams;
use crate::conditional::{conditional_after_evolution, intersection_projector};
use crate::qlinalg::{projector, tensor, ComplexOperator};
use crate::Result;

use MesonState::{MBar, M, M1, M2, MH, ML};

/// One event set with its inequality function. `S₁(t₀)` and `S₂(t)` share
/// the same directions; `S₃` is the singlet preparation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub event: MesonEvent,
    pub f_index: u8,
    /// Species for which the inequality is broken at some time.
    pub violates_for: &'static [&'static str],
}

const fn row(
    p2: MesonState,
    p1: MesonState,
    f_index: u8,
    violates_for: &'static [&'static str],
) -> TableRow {
    TableRow {
        event: MesonEvent {
            particle2: p2,
            particle1: p1,
        },
        f_index,
        violates_for,
    }
}

pub const TABLE_ROWS: [TableRow; 12] = [
    row(M1, M, 1, &["Bs"]),
    row(M1, MBar, 1, &["Bs"]),
    row(M1, MH, 2, &["Bs"]),
    row(M2, M, 3, &["K", "D"]),
    row(M2, MBar, 3, &["K", "D"]),
    row(M2, MH, 4, &["K", "D"]),
    row(M, MH, 5, &["K", "D", "Bs"]),
    row(MBar, MH, 5, &["K", "D", "Bs"]),
    row(M, ML, 6, &[]),
    row(MBar, ML, 6, &[]),
    row(M1, ML, 7, &[]),
    row(M2, ML, 8, &[]),
];

/// `w(S₁|S₃) w(S₂(t)|S₁∩S₃) / w(S₂(t)|S₃)` evaluated with explicit 4×4
/// operators. Equals the row's `F_N` at time `t`.
pub fn table_ratio_matrix(event: MesonEvent, t: f64, params: &MesonParams) -> Result<f64> {
    let mix = params.mixing()?;
    let psi = bell_state();
    let rho = projector(&psi)?;
    let e = tensor(
        &basis_vector(event.particle2, &mix, 0.0),
        &basis_vector(event.particle1, &mix, 0.0),
    )?;
    let p_event = projector(&e)?;
    let u = flavour_evolution(t, params, &mix, 0.0)?;
    let uu = u.kron(&u)?;
    let identity = ComplexOperator::identity(4)?;

    let w_s1_s3 = conditional_after_evolution(&rho, &rho, &identity, &p_event)?.value();
    let p13 = intersection_projector(&psi, &p_event)?;
    let w_s2_s13 = conditional_after_evolution(&rho, &p13.projector, &uu, &p_event)?.value();
    let w_s2_s3 = conditional_after_evolution(&rho, &rho, &uu, &p_event)?.value();
    Ok(w_s1_s3 * w_s2_s13 / w_s2_s3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesons::f_function;

    #[test]
    fn ratio_matches_f_for_every_row() {
        let p = MesonParams::from_mev("K", -7.3e-12, 3.5e-12, 3.68195e-12, 0.997, -0.18).unwrap();
        for z in [0.0, 0.4, 1.7] {
            let t = p.time_from_z(z);
            for r in TABLE_ROWS {
                let ratio = table_ratio_matrix(r.event, t, &p).unwrap();
                let f = f_function(r.f_index, t, &p).unwrap();
                assert!(
                    (ratio - f).abs() < 1e-9 * f.max(1.0),
                    "{} z={z}: {ratio} vs {f}",
                    r.event
                );
            }
        }
    }
}
