//! Hook coefficients g((nd−k, 1^k), d×n, d×n) through the generating
//! function Π_{i=2}^{d} (1 + q^{2i−1}), and where they vanish.

use kronforge::hooks::{hook_genfun, strict_growth_failures, unimodality_check, vanishing_set};

fn main() -> kronforge::Result<()> {
    for d in 2..=9 {
        let zeros: Vec<String> = vanishing_set(d)?.iter().map(u64::to_string).collect();
        println!("d = {d:>2}  zeros {{{}}}", zeros.join(","));
    }

    let g13 = hook_genfun(13)?;
    let spots: Vec<String> = [5, 12, 16, 22, 26].iter().map(|&e| format!("q^{e}:{}", g13.coeff(e))).collect();
    println!("d = 13: {}", spots.join(" "));

    println!("d = 7 growth failures: {:?}", strict_growth_failures(7)?);
    for d in 27..=30 {
        println!("d = {d}: window unimodal = {}", unimodality_check(d)?);
    }
    Ok(())
}
