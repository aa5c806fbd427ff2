//! λ = (13,13,2,2,2,2,2): the plethysm coefficient a_λ(12[3]) is positive
//! while g(λ, 3×12, 3×12) vanishes.

use std::time::Instant;

use kronforge::coefficients::{kronecker, plethysm_a, Budget};
use kronforge::gct::exceptional_vanishing_check;
use kronforge::Partition;

fn main() -> kronforge::Result<()> {
    let lam = Partition::parse("13,13,2,2,2,2,2")?;
    let rect = Partition::rectangle(3, 12);
    let t = Instant::now();
    let a = plethysm_a(&lam, 12, 3, &Budget::unbounded())?;
    let g = kronecker(&lam, &rect, &rect, &Budget::unbounded())?;
    println!("a_λ(12[3]) = {}  g(λ, 3×12, 3×12) = {}  ({:.1?})", a.value, g.value, t.elapsed());

    for (d, n) in [(2, 5), (3, 4), (4, 4)] {
        let report = exceptional_vanishing_check(d, n, &Budget::default())?;
        for (lam, v) in &report.instances {
            println!("a_{lam}({d}[{n}]) = {v}");
        }
    }
    Ok(())
}
