#![allow(dead_code)]

use std::sync::Arc;

use kronforge::coefficients::{kronecker, Budget};
use kronforge::positivity::{x_membership, Axiom, Certificate, ClosedForm, Node, Swap, TransposePair};
use kronforge::symfun::partitions_of;
use kronforge::{KroneckerTriple, Partition};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn p(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Random partition with at most `max_len` parts, each at most `max_part`.
pub fn random_partition(rng: &mut impl Rng, max_len: usize, max_part: u64) -> Partition {
    let len = rng.gen_range(1..=max_len);
    Partition::from_unsorted((0..len).map(|_| rng.gen_range(1..=max_part)).collect())
}

pub fn random_non_exceptional(rng: &mut impl Rng, max_len: usize, max_part: u64, max_size: u64) -> Partition {
    loop {
        let nu = random_partition(rng, max_len, max_part);
        if nu.size() <= max_size && !x_membership(&nu) {
            return nu;
        }
    }
}

fn leaf(rng: &mut impl Rng, max_size: u64) -> Option<Certificate> {
    match rng.gen_range(0..6) {
        0 => {
            let d = rng.gen_range(1..=max_size.min(6));
            let n = rng.gen_range(1..=max_size / d);
            Certificate::row(d, n).ok()
        }
        1 => {
            let d = rng.gen_range(1..=max_size.min(5));
            let n = rng.gen_range(1..=max_size / d);
            let k = rng.gen_range(0..d * n);
            Certificate::closed_form(ClosedForm::Hook { d, n, k }).ok()
        }
        2 => {
            let n = rng.gen_range(1..=max_size.min(6));
            let d = rng.gen_range(1..=max_size / n);
            let k = rng.gen_range(0..=n * d / 2);
            Certificate::closed_form(ClosedForm::TwoColumn { n, d, k }).ok()
        }
        3 => {
            let k = rng.gen_range(1..=3);
            (k * k <= max_size).then(|| Certificate::axiom(Axiom::Square { k }).unwrap())
        }
        4 => {
            let k = rng.gen_range(1..=3);
            let s = rng.gen_range(1..=2);
            let a = k * s + rng.gen_range(0..=2);
            (a * k <= max_size).then(|| kronforge::positivity::rect_block_cert(k, s, a).ok()).flatten()
        }
        _ => {
            let n = rng.gen_range(1..=max_size.min(7));
            let shapes: Vec<Partition> = partitions_of(n, None, None).collect();
            let t = KroneckerTriple::new(
                shapes.choose(rng)?.clone(),
                shapes.choose(rng)?.clone(),
                shapes.choose(rng)?.clone(),
            )
            .ok()?;
            let g = kronecker(&t.lam, &t.mu, &t.nu, &Budget::default()).ok()?;
            g.is_positive().then(|| Certificate::oracle(t).unwrap())
        }
    }
}

/// Random certificate tree with root size at most `max_size`.
pub fn random_cert(rng: &mut impl Rng, max_size: u64, depth: u32) -> Arc<Certificate> {
    loop {
        let choice = if depth == 0 || max_size < 2 { 0 } else { rng.gen_range(0..5) };
        let c = match choice {
            0 | 1 => leaf(rng, max_size).map(Arc::new),
            2 => {
                let left = random_cert(rng, max_size - 1, depth - 1);
                let room = max_size - left.triple.size();
                if room == 0 {
                    None
                } else {
                    Some(Arc::new(Certificate::add(left, random_cert(rng, room, depth - 1))))
                }
            }
            3 => {
                let pair = *[TransposePair::MuNu, TransposePair::LamMu, TransposePair::LamNu].choose(rng).unwrap();
                Some(Arc::new(Certificate::transpose(random_cert(rng, max_size, depth - 1), pair)))
            }
            _ => {
                let swap = *[Swap::S12, Swap::S13, Swap::S23].choose(rng).unwrap();
                Some(Arc::new(Certificate::permute(random_cert(rng, max_size, depth - 1), swap)))
            }
        };
        if let Some(c) = c {
            return c;
        }
    }
}

fn perturb(t: &KroneckerTriple) -> KroneckerTriple {
    let others: Vec<Partition> = partitions_of(t.lam.size(), None, None).filter(|q| *q != t.lam).collect();
    let lam = others.into_iter().next().unwrap_or_else(|| t.lam.add(&Partition::row(1)));
    KroneckerTriple { lam, mu: t.mu.clone(), nu: t.nu.clone() }
}

fn rebuild(c: &Certificate, node: Node) -> Certificate {
    Certificate { triple: c.triple.clone(), node }
}

/// One copy of `c` per node, each with that node's stored triple altered.
pub fn single_node_mutations(c: &Certificate) -> Vec<Certificate> {
    let mut out = vec![Certificate { triple: perturb(&c.triple), node: c.node.clone() }];
    match &c.node {
        Node::Add(a, b) => {
            out.extend(single_node_mutations(a).into_iter().map(|m| rebuild(c, Node::Add(Arc::new(m), b.clone()))));
            out.extend(single_node_mutations(b).into_iter().map(|m| rebuild(c, Node::Add(a.clone(), Arc::new(m)))));
        }
        Node::Transpose(x, pair) => {
            out.extend(single_node_mutations(x).into_iter().map(|m| rebuild(c, Node::Transpose(Arc::new(m), *pair))));
        }
        Node::Permute(x, swap) => {
            out.extend(single_node_mutations(x).into_iter().map(|m| rebuild(c, Node::Permute(Arc::new(m), *swap))));
        }
        _ => {}
    }
    out
}
