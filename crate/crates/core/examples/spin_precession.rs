//! Time-dependent inequality for a singlet pair in a magnetic field.
//!
//! Scans ωt for every outcome case at θ_ba = 90° and prints where the
//! inequality fails, then converts one phase to laboratory units.

use bayes_realism::scan::{scan_curve, uniform_grid, Violation};
use bayes_realism::spin::{larmor_frequency, spin_inequality_margin, PrecessionPhase, SpinCase};
use bayes_realism::spin::{ELECTRON_MASS_KG, ELEMENTARY_CHARGE_C};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let theta_ba = 90f64.to_radians();
    let axis = uniform_grid(-90.0, 90.0, 721)?;

    for case in SpinCase::ALL {
        let margin = |deg: f64| {
            let phase = PrecessionPhase::new(deg.to_radians()).expect("finite");
            spin_inequality_margin(case, theta_ba, phase).margin
        };
        let scan = scan_curve(axis.clone(), margin, Violation::Below(0.0))?;
        let intervals: Vec<String> = scan
            .violation_intervals
            .iter()
            .map(|(a, b)| format!("[{a:.2}°, {b:.2}°]"))
            .collect();
        println!("case {case}: violated for ωt in {}", intervals.join(" "));
    }

    let field = 1.0; // tesla
    let omega = larmor_frequency(field, ELECTRON_MASS_KG, ELEMENTARY_CHARGE_C)?;
    let t = 22.5f64.to_radians() / omega;
    println!("ωt = 22.5° in a {field} T field takes {:.3} ps", t * 1e12);
    Ok(())
}
