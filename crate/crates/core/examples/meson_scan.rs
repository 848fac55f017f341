//! F₁ and F₅ for B_s over 30 lifetimes, with the guaranteed-violation bound.
//!
//! Pass `--csv` to print the sampled curve instead of the summary.

use bayes_realism::config::builtin_scenario;
use bayes_realism::mesons::{guaranteed_violation_time, violation_scan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bs = builtin_scenario("Bs")?;
    let csv = std::env::args().any(|a| a == "--csv");
    let f1 = violation_scan(1, &bs, 30.0, 6001)?;
    let f5 = violation_scan(5, &bs, 30.0, 6001)?;

    if csv {
        println!("z,ct_mm,F1,F5");
        for ((z, a), b) in f1.axis.iter().zip(&f1.values).zip(&f5.values) {
            println!("{z:.6},{:.6},{a:.9},{b:.9}", bs.ct_mm(*z));
        }
        return Ok(());
    }

    let bound = bs.z_from_time(guaranteed_violation_time(&bs)?);
    println!(
        "mean lifetime {:.4} ps, 1 lifetime = {:.4} mm",
        bs.mean_lifetime() * 1e12,
        bs.ct_mm(1.0)
    );
    println!("guaranteed violation (CP-conserving form) from z = {bound:.3}");
    for (label, scan) in [("F1", &f1), ("F5", &f5)] {
        println!(
            "{label}: {} violation intervals, first at z = {:.3}, permanent from z = {}",
            scan.violation_intervals.len(),
            scan.first_violation().unwrap_or(f64::NAN),
            scan.sustained_onset()
                .map_or("-".into(), |z| format!("{z:.3}")),
        );
    }
    Ok(())
}
