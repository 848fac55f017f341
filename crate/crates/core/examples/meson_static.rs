//! Static equalities 2 = |1 ± p/q|² and the joint probabilities behind them.

use bayes_realism::config::ParameterFile;
use bayes_realism::mesons::{
    static_equality_residual, static_probability, EqualityVariant, MesonEvent, MesonState,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = ParameterFile::builtin();
    for name in file.names() {
        let params = file.get(name)?;
        let mix = params.mixing()?;
        let plus = static_equality_residual(EqualityVariant::Plus, &mix) + 2.0;
        let minus = static_equality_residual(EqualityVariant::Minus, &mix) + 2.0;
        println!("{name:>9}: |1+p/q|² = {plus:.5}   |1−p/q|² = {minus:.5}   (realism: 2)");
    }

    let mix = file.get("Bs")?.mixing()?;
    println!("\nBs joint probabilities at t₀:");
    for (a, b) in [
        (MesonState::M1, MesonState::M),
        (MesonState::M2, MesonState::ML),
        (MesonState::M, MesonState::ML),
        (MesonState::MH, MesonState::MBar),
    ] {
        let event = MesonEvent::new(a, b);
        println!("  w{event} = {:.6}", static_probability(event, &mix)?);
    }
    Ok(())
}
