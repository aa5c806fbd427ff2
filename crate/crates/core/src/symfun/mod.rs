//! Symmetric-group characters and power-sum symmetric functions.

pub mod character;
pub mod enumerate;
pub mod kernel;
pub mod powersum;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub use character::{character_uncached, dimension, CharacterCache};
pub use enumerate::{partition_count, partitions_of};
pub use kernel::{class_fold, ClassView};
pub use powersum::PowerSumElement;

use crate::error::Result;
use crate::partition::Partition;

/// Centralizer order `z_ρ = Π_i i^{m_i} m_i!`.
pub fn centralizer_size(rho: &Partition) -> BigUint {
    centralizer_from_multiplicities(rho.multiplicities().into_iter())
}

pub(crate) fn centralizer_from_multiplicities(mults: impl Iterator<Item = (u64, u64)>) -> BigUint {
    let mut z = BigUint::one();
    for (part, m) in mults {
        for k in 1..=m {
            z *= part;
            z *= k;
        }
    }
    z
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(−1)^{N − ℓ(ρ)}`.
pub fn sign(rho: &Partition) -> i128 {
    if (rho.size() - rho.len() as u64).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Process-wide character cache shared by [`character`].
pub fn global_cache() -> &'static CharacterCache {
    static CACHE: OnceLock<CharacterCache> = OnceLock::new();
    CACHE.get_or_init(CharacterCache::new)
}

/// χ_λ(ρ) through the process-wide cache.
pub fn character(lam: &Partition, rho: &Partition) -> Result<i128> {
    global_cache().character(lam, rho)
}

/// `Σ_ρ c_ρ χ_λ(ρ)` and the number of classes evaluated. Sparse inputs are
/// evaluated term by term; dense ones go through the class-sum kernel.
pub(crate) fn schur_coefficient_of_terms(
    terms: &BTreeMap<Partition, BigRational>,
    lam: &Partition,
) -> Result<(BigRational, u64)> {
    if terms.is_empty() {
        return Ok((BigRational::zero(), 0));
    }
    let dense = (terms.len() as u128) * 8 > partition_count(lam.size());
    if !dense {
        let cache = CharacterCache::new();
        let parts: Vec<Result<BigRational>> = terms
            .par_iter()
            .map(|(rho, c)| Ok(c * BigRational::from_integer(BigInt::from(cache.character(lam, rho)?))))
            .collect();
        let mut total = BigRational::zero();
        for p in parts {
            total += p?;
        }
        return Ok((total, terms.len() as u64));
    }
    class_fold(
        std::slice::from_ref(lam),
        BigRational::zero,
        |acc, class, chi| {
            if let Some(c) = terms.get(&class.to_partition()) {
                *acc += c * BigRational::from_integer(BigInt::from(chi[0]));
            }
            Ok(())
        },
        |a, b| a + b,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_size(&p(&[1, 1, 1])), BigUint::from(6u32));
        assert_eq!(centralizer_size(&p(&[3])), BigUint::from(3u32));
        assert_eq!(centralizer_size(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(centralizer_size(&p(&[])), BigUint::from(1u32));
    }

    #[test]
    fn orthogonality_small() {
        for n in 1..=6 {
            let parts: Vec<_> = partitions_of(n, None, None).collect();
            for rho in &parts {
                for sigma in &parts {
                    let s: i128 = parts
                        .iter()
                        .map(|l| character(l, rho).unwrap() * character(l, sigma).unwrap())
                        .sum();
                    let expect = if rho == sigma {
                        i128::try_from(centralizer_size(rho)).unwrap()
                    } else {
                        0
                    };
                    assert_eq!(s, expect);
                }
            }
        }
    }
}
