//! Static Bayes equality for the e⁺e⁻ singlet, three axes in the xz-plane.
//!
//! Run: `cargo run --example spin_static -- 90 0 45` (degrees).

use bayes_realism::spin::{static_pipeline, Direction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let [a, b, c] = match args.as_slice() {
        [a, b, c] => [*a, *b, *c],
        [] => [90.0, 0.0, 45.0],
        _ => return Err("expected three angles in degrees".into()),
    };
    let axis = |deg: f64| Direction::in_xz_plane(deg.to_radians());
    let report = static_pipeline(axis(a)?, axis(b)?, axis(c)?)?;

    println!("axes a = {a}°, b = {b}°, c = {c}°");
    println!("w(S1|S3)     = {:.6}", report.terms.w_s1_given_s3.value());
    println!("w(S2|S3)     = {:.6}", report.terms.w_s2_given_s3.value());
    println!("w(S2|S1∩S3)  = {:.6}", report.terms.w_s2_given_s1s3.value());
    println!("w(S1|S2∩S3)  = {:.6}", report.terms.w_s1_given_s2s3.value());
    println!("Tr(P1 P2)    = {:.6}", report.cross_term);
    println!("lhs − rhs    = {:+.6}", report.residual);
    println!("sin² gap     = {:+.6}", report.equality_gap);
    Ok(())
}
