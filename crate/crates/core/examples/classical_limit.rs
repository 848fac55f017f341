//! With commuting projectors the von Neumann rule reduces to ordinary
//! conditioning and the static equality holds exactly.

use bayes_realism::conditional::static_bayes_terms;
use bayes_realism::qlinalg::ComplexOperator;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rho = ComplexOperator::diagonal(&[0.1, 0.2, 0.3, 0.4])?;
    let p3 = ComplexOperator::diagonal(&[1.0, 1.0, 1.0, 0.0])?;
    let p1 = ComplexOperator::diagonal(&[1.0, 1.0, 0.0, 0.0])?;
    let p2 = ComplexOperator::diagonal(&[0.0, 1.0, 1.0, 1.0])?;
    let p13 = p1.matmul(&p3)?;
    let p23 = p2.matmul(&p3)?;

    let terms = static_bayes_terms(&rho, &p3, &p1, &p2, &p13, &p23)?;
    let r = terms.residual();
    println!("w(S1|S3) w(S2|S1∩S3) = {:.6}", r.lhs);
    println!("w(S2|S3) w(S1|S2∩S3) = {:.6}", r.rhs);
    println!("residual             = {:.2e}", r.residual);
    Ok(())
}
