mod common;

use std::sync::Arc;

use common::{random_cert, random_non_exceptional, single_node_mutations};
use kronforge::coefficients::Budget;
use kronforge::hooks::hook_genfun;
use kronforge::positivity::{
    decompose, from_json, hook_cert, near_hook_cert, saturation_witness, stretched_hook_cert, to_json, Certificate, Node,
};
use kronforge::Partition;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn partition(max_len: usize, max_part: u64) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 1..=max_len).prop_map(Partition::from_unsorted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn decomposition_invariants(nu in partition(20, 30)) {
        prop_assume!(!kronforge::positivity::x_membership(&nu));
        let d = decompose(&nu).unwrap();
        d.check(&nu).unwrap();
        prop_assert_eq!(d.reconstruct(), nu);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn saturation_sums_exactly(mut parts in prop::collection::vec(1u64..40, 1..12), d in 7u64..=10) {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size: u64 = parts.iter().sum();
        parts[0] += (d - size % d) % d;
        let lam = Partition::new(parts).unwrap();
        let w = saturation_witness(&lam, d).unwrap();
        w.check_sum().unwrap();
        let total: Vec<i128> = w.evaluate();
        prop_assert_eq!(total.iter().sum::<i128>(), lam.size() as i128);
    }
}

#[test]
fn json_roundtrip_of_random_certificates() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let cert = random_cert(&mut rng, 22, 4);
        let text = to_json(&cert);
        let back = from_json(&text).unwrap();
        assert_eq!(&back, cert.as_ref());
        assert_eq!(to_json(&back), text);
        for m in single_node_mutations(&cert) {
            assert!(from_json(&to_json(&m)).unwrap().verify(&Budget::default()).is_err());
        }
    }
}

#[test]
fn dropping_an_add_child_fails() {
    let cert = hook_cert(8, 9, 20).unwrap();
    fn drop_first(c: &Certificate) -> Option<Certificate> {
        match &c.node {
            Node::Add(a, _) => Some(Certificate { triple: c.triple.clone(), node: a.node.clone() }),
            Node::Transpose(x, p) => drop_first(x).map(|m| Certificate { triple: c.triple.clone(), node: Node::Transpose(Arc::new(m), *p) }),
            Node::Permute(x, s) => drop_first(x).map(|m| Certificate { triple: c.triple.clone(), node: Node::Permute(Arc::new(m), *s) }),
            _ => None,
        }
    }
    let broken = drop_first(&cert).expect("hook certificate has an add node");
    assert!(broken.verify(&Budget::default()).is_err());
}

#[test]
fn hook_certificates_cover_the_positive_exponents() {
    for h in 7..=9u64 {
        let gf = hook_genfun(h).unwrap();
        for j in 0..h * h {
            let built = hook_cert(h, h + 1, j);
            assert_eq!(built.is_ok(), gf.coeff(j as usize) > 0u32.into(), "h={h} j={j}");
            if let Ok(c) = built {
                let root = c.verify(&Budget::default()).unwrap();
                assert_eq!(root.lam, Partition::hook(h * (h + 1) - j, j).unwrap());
            }
        }
    }
}

#[test]
fn near_hooks_and_stretched_hooks_verify() {
    let b = Budget::default();
    for rho in ["1", "2", "1,1", "3", "2,1", "2,2", "3,1,1,1"] {
        let rho = Partition::parse(rho).unwrap();
        for j in [3, 9, 20, 40] {
            if let Ok(c) = near_hook_cert(8, 10, j, &rho) {
                c.verify(&b).unwrap();
            }
        }
    }
    for (i, m, k) in [(2, 7, 5), (3, 8, 57), (4, 7, 42), (5, 7, 3), (7, 9, 74)] {
        let c = stretched_hook_cert(i, m, k).unwrap();
        let root = c.verify(&b).unwrap();
        assert_eq!(root.lam, Partition::hook(m * m - k, k).unwrap().scale(i));
    }
}

#[test]
fn main_certificates_at_larger_sides() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let nu = random_non_exceptional(&mut rng, 6, 40, 80);
        let c = kronforge::positivity::main_cert(&nu, 90, 300).unwrap();
        assert_eq!(c.verify(&Budget::default()).unwrap().lam, nu.pad(90 * 300).unwrap());
    }
}
