//! Re-checks base facts: hooks at 7×7 by generating function, everything else
//! by the character oracle. Pass an axiom family to audit (HOOK7, NEARHOOK7,
//! RHOCASE, COLS6, SQUARE); N = 49 runs take about a second each in release.
//!
//! cargo run --release --example axiom_audit -- RHOCASE

use kronforge::coefficients::Budget;
use kronforge::positivity::{audit, Axiom};

fn main() -> kronforge::Result<()> {
    let family = std::env::args().nth(1).unwrap_or_else(|| "COLS6".into());
    let mut instances: Vec<Axiom> = (1..=5).map(|k| Axiom::Square { k }).collect();
    instances.extend(Axiom::finite_instances());
    instances.retain(|a| a.id() == family);
    for ax in &instances {
        println!("{ax}: {:?}", audit(ax, &Budget::unbounded())?);
    }
    Ok(())
}
