//! Every event set with its F_N at a chosen time, for each shipped scenario.
//!
//! Run: `cargo run --example meson_table -- 2.0` (time in lifetimes).

use bayes_realism::config::ParameterFile;
use bayes_realism::mesons::{f_function_at_z, TABLE_ROWS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z: f64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(2.0);
    let file = ParameterFile::builtin();
    let names = file.names();

    print!("{:<16} {:>3}", "set", "F");
    for name in &names {
        print!(" {name:>10}");
    }
    println!("   violates for");
    for row in TABLE_ROWS {
        print!("{:<16} {:>3}", row.event.to_string(), row.f_index);
        for name in &names {
            let f = f_function_at_z(row.f_index, z, &file.get(name)?)?;
            let mark = if f > 1.0 { '*' } else { ' ' };
            let cell = if f < 1e4 {
                format!("{f:.4}")
            } else {
                format!("{f:.3e}")
            };
            print!(" {cell:>9}{mark}");
        }
        println!(
            "   {}",
            if row.violates_for.is_empty() {
                "never".into()
            } else {
                row.violates_for.join(", ")
            }
        );
    }
    println!("(* marks F > 1 at z = {z})");
    Ok(())
}
