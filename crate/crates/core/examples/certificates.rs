//! Building, verifying, serializing and tampering with positivity certificates.

use kronforge::coefficients::Budget;
use kronforge::positivity::{from_json, hook_cert, near_hook_cert, to_json, Certificate, TransposePair};
use kronforge::Partition;

fn describe(name: &str, c: &Certificate) {
    let (oracle, closed, axiom) = c.leaf_tiers();
    println!("{name}: {}  nodes {} depth {}  leaves oracle/closed-form/axiom {oracle}/{closed}/{axiom}", c.triple, c.node_count(), c.depth());
}

fn main() -> kronforge::Result<()> {
    let budget = Budget::default();

    let hook = hook_cert(8, 10, 30)?;
    hook.verify(&budget)?;
    describe("hook", &hook);

    let near = near_hook_cert(7, 9, 12, &Partition::parse("2,1")?)?;
    near.verify(&budget)?;
    describe("near-hook", &near);

    // small hand-made tree with an oracle leaf
    let r = Partition::rectangle(3, 3);
    let leaf = Certificate::oracle(kronforge::KroneckerTriple::new(Partition::parse("5,2,2")?, r.clone(), r)?)?;
    let tree = Certificate::transpose(Certificate::add(leaf, Certificate::row(3, 2)?), TransposePair::MuNu);
    tree.verify(&budget)?;
    describe("hand-made", &tree);

    let text = to_json(&hook);
    println!("JSON {} bytes", text.len());
    let back = from_json(&text)?;
    assert_eq!(back, hook);

    let forged = text.replacen("[50,", "[49,1,", 1);
    match from_json(&forged)?.verify(&budget) {
        Err(e) => println!("tampered copy rejected: {e}"),
        Ok(_) => println!("tampered copy accepted"),
    }
    Ok(())
}
