use kronforge::symfun::{centralizer_size, character, character_uncached, partitions_of, sign};
use kronforge::Partition;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn column_orthogonality() {
    for n in 1..=8 {
        let shapes: Vec<Partition> = partitions_of(n, None, None).collect();
        for rho in &shapes {
            for sigma in &shapes {
                let s: i128 = shapes.iter().map(|l| character(l, rho).unwrap() * character(l, sigma).unwrap()).sum();
                let want = if rho == sigma { BigInt::from(centralizer_size(rho)) } else { BigInt::from(0) };
                assert_eq!(BigInt::from(s), want, "{rho} {sigma}");
            }
        }
    }
}

#[test]
fn row_orthogonality() {
    for n in 1..=8 {
        let shapes: Vec<Partition> = partitions_of(n, None, None).collect();
        let n_fact: BigInt = (1..=n).map(BigInt::from).product();
        for lam in &shapes {
            for mu in &shapes {
                let s: BigInt = shapes
                    .iter()
                    .map(|rho| {
                        let class = &n_fact / BigInt::from(centralizer_size(rho));
                        class * character(lam, rho).unwrap() * character(mu, rho).unwrap()
                    })
                    .sum();
                let want = if lam == mu { n_fact.clone() } else { BigInt::from(0) };
                assert_eq!(s, want, "{lam} {mu}");
            }
        }
    }
}

#[test]
fn transposition_twist() {
    for n in 1..=10 {
        let shapes: Vec<Partition> = partitions_of(n, None, None).collect();
        for lam in &shapes {
            for rho in &shapes {
                assert_eq!(character(&lam.transpose(), rho).unwrap(), sign(rho) * character(lam, rho).unwrap());
            }
        }
    }
}

#[test]
fn cache_agrees_with_direct_recursion() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let tables: Vec<Vec<Partition>> = (0..=18).map(|n| partitions_of(n, None, None).collect()).collect();
    for _ in 0..1000 {
        let n = rng.gen_range(1..=18);
        let lam = tables[n].choose(&mut rng).unwrap();
        let rho = tables[n].choose(&mut rng).unwrap();
        assert_eq!(character(lam, rho).unwrap(), character_uncached(lam, rho).unwrap(), "{lam} {rho}");
    }
}
