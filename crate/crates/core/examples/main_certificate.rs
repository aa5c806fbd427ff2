//! (ν(ab), a×b, a×b) > 0 for ν outside the exceptional set, assembled from
//! rectangles, hooks, near-hooks and a leftover leaf.
//!
//! cargo run --release --example main_certificate -- 5,4,4,2,1 82 243

use std::time::Instant;

use kronforge::coefficients::Budget;
use kronforge::positivity::main_cert_with_bound;
use kronforge::Partition;

fn main() -> kronforge::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let nu = Partition::parse(args.first().map_or("5,4,4,2,1", String::as_str))?;
    let a: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(82);
    let b: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(243);

    let t = Instant::now();
    let (cert, bound) = main_cert_with_bound(&nu, a, b)?;
    let root = cert.verify(&Budget::default())?;
    println!("ν = {nu}, a = {a}, b = {b}");
    println!("  decomposition case {} with ρ = {}", bound.decomposition.rho_case, bound.decomposition.rho);
    println!("  w = {}, width used {} <= M = {} <= b = {b}", bound.w, bound.m_used, bound.m_bound);
    println!("  root first row {} of {} parts", root.lam.first(), root.lam.len());
    println!("  {} nodes, depth {}, {:.1?}", cert.node_count(), cert.depth(), t.elapsed());
    Ok(())
}
