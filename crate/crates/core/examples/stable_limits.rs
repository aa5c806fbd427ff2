//! Tables of g(ρ(nd), n×d, n×d), their stable limits, and stable-range
//! membership.
//!
//! cargo run --release --example stable_limits -- 3,1,1,1,1 7

use kronforge::coefficients::{limit_a_rho, rectangular_kronecker, Budget};
use kronforge::gct::stable_range_member;
use kronforge::{Error, Partition};

fn main() -> kronforge::Result<()> {
    let mut args = std::env::args().skip(1);
    let rho = Partition::parse(&args.next().unwrap_or_else(|| "6".into()))?;
    let max: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let budget = Budget::unbounded();

    println!("g({rho}(nd), n×d, n×d), rows n, columns d");
    for n in 1..=max {
        let row: Vec<String> = (1..=max)
            .map(|d| rectangular_kronecker(&rho, n, d, &budget).map(|r| r.value.to_string()))
            .collect::<Result<_, Error>>()?;
        println!("{}", row.join(" "));
    }

    let a = limit_a_rho(&rho, &budget)?;
    println!("a_{rho} = {}", a.value);
    for (n, d) in [(2, 2), (max, max)] {
        println!("({n},{d}) in stable range: {:?}", stable_range_member(&rho, n, d, false, &budget)?);
    }
    Ok(())
}
