//! Stretched hooks i·(m²−k, 1^k), even-row shapes, and the saturation
//! witness writing any λ with d | |λ| through certified rectangular triples.

use kronforge::coefficients::{kronecker, Budget};
use kronforge::positivity::{even_rows_cert, saturation_witness, stretched_hook_cert};
use kronforge::Partition;

fn main() -> kronforge::Result<()> {
    let budget = Budget::default();

    // stretching factor 3: (1^6) doubled vanishes, tripled does not
    for i in [2, 3] {
        let r = Partition::rectangle(6, i);
        println!("g(6×{i}, 6×{i}, 6×{i}) = {}", kronecker(&r, &r, &r, &budget)?.value);
    }

    for (i, m, k) in [(2, 7, 1), (3, 7, 44), (5, 8, 20)] {
        let c = stretched_hook_cert(i, m, k)?;
        c.verify(&budget)?;
        println!("stretched i={i} m={m} k={k}: {} nodes", c.node_count());
    }

    let rho = Partition::parse("4,4,2")?;
    let c = even_rows_cert(&rho, 7)?;
    println!("even rows {rho}: root {}", c.verify(&budget)?);

    let lam = Partition::parse("9,5,3,3,1")?;
    let w = saturation_witness(&lam, 7)?;
    w.verify(&budget)?;
    for (cert, coeff) in &w.terms {
        println!("{coeff:+} · {}", cert.triple.lam);
    }
    Ok(())
}
