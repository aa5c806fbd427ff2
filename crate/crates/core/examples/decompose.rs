//! Splitting ν into rectangles, double columns, distinct single columns and a
//! small leftover shape.
//!
//! cargo run --example decompose -- 9,7,7,4,4,1

use kronforge::positivity::decompose;
use kronforge::Partition;

fn main() -> kronforge::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "9,7,7,4,4,1".into());
    let nu = Partition::parse(&text)?;
    let d = decompose(&nu)?;
    d.check(&nu)?;
    println!("ν = {nu}");
    println!("  leftover ρ = {} (case {})", d.rho, d.rho_case);
    println!("  single columns ξ = {}", d.xi);
    for (k, c) in &d.x {
        println!("  {c} × rectangle ({})×{k}", k - 1);
    }
    for (k, c) in &d.y {
        println!("  {c} × double column of height {}", k - 1);
    }
    if let (Some(eta), Some(col)) = (&d.eta, d.column) {
        println!("  exceptional η = {eta}, repaired with {col}");
    }
    assert_eq!(d.reconstruct(), nu);
    Ok(())
}
