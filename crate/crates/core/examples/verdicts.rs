//! Why an occurrence obstruction for λ against n×d cannot exist once
//! n > 3m⁴: the rule that settles each λ, with its trace.

use kronforge::gct::main_verdict;
use kronforge::Partition;

fn main() -> kronforge::Result<()> {
    // (λ̄, n, d, m); λ gets the first row that makes |λ| = nd
    let cases = [
        ("1", 3, 5, 1),
        ("1,1", 5, 4, 1),
        ("4", 49, 10, 2),
        ("2,1", 49, 25, 2),
        ("3,3", 49, 25, 2),
        ("", 49, 25, 2),
        ("5,3", 244, 82, 3),
    ];
    for (bar, n, d, m) in cases {
        let lam = Partition::parse(bar)?.pad(n * d)?;
        let v = main_verdict(&lam, n, d, m)?;
        let cert = v.certificate.as_ref().map(|c| format!(", certificate of {} nodes", c.node_count())).unwrap_or_default();
        println!("λ̄ = {}, n = {n}, d = {d}, m = {m}: {}{cert}", Partition::parse(bar)?, v.outcome);
        for step in &v.trace {
            println!("    {}  {}", step.rule, step.params);
        }
    }
    Ok(())
}
