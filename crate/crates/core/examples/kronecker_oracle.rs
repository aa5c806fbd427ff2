//! Kronecker and Littlewood–Richardson coefficients from the character oracle.
//!
//! cargo run --release --example kronecker_oracle -- 4,2 3,3 3,2,1

use kronforge::coefficients::{kronecker, littlewood_richardson, Budget};
use kronforge::symfun::{character, partitions_of};
use kronforge::Partition;

fn main() -> kronforge::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let [lam, mu, nu] = match args.as_slice() {
        [a, b, c] => [a, b, c].map(|s| Partition::parse_shape(s)),
        _ => ["6x3", "6x3", "6x3"].map(Partition::parse_shape),
    };
    let (lam, mu, nu) = (lam?, mu?, nu?);

    let g = kronecker(&lam, &mu, &nu, &Budget::default())?;
    println!("g({lam}, {mu}, {nu}) = {}  [{} classes]", g.value, g.cost);

    // character table of S_5, classes in reverse lexicographic order
    let shapes: Vec<Partition> = partitions_of(5, None, None).collect();
    for l in &shapes {
        let row: Vec<String> = shapes.iter().map(|rho| character(l, rho).map(|c| format!("{c:>3}"))).collect::<Result<_, _>>()?;
        println!("{:<12}{}", l.to_string(), row.join(""));
    }

    let c = littlewood_richardson(&Partition::parse("3,2,1")?, &Partition::parse("2,1")?, &Partition::parse("2,1")?)?;
    println!("c^(3,2,1)_(2,1),(2,1) = {}", c.value);
    Ok(())
}
