//! Sparse symmetric functions in the power-sum basis with exact rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::enumerate::partitions_of;
use super::{centralizer_size, schur_coefficient_of_terms};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `Σ c_ρ p_ρ`, homogeneous, zero coefficients never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumElement {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSumElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant 1 (`p_∅`).
    pub fn one() -> Self {
        Self::power_sum(Partition::empty())
    }

    pub fn power_sum(rho: Partition) -> Self {
        Self::from_terms([(rho, BigRational::one())]).expect("single term is homogeneous")
    }

    /// Builds from `(index, coefficient)` pairs, summing repeats and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Result<Self> {
        let mut out = PowerSumElement::zero();
        for (rho, c) in terms {
            out.add_term(rho, c);
        }
        let mut sizes = out.terms.keys().map(|k| k.size());
        if let Some(first) = sizes.next() {
            if sizes.any(|s| s != first) {
                return Err(Error::SizeMismatch("power-sum terms of different degrees".into()));
            }
        }
        Ok(out)
    }

    fn add_term(&mut self, rho: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(rho) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms; `None` for the zero element.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next().map(|k| k.size())
    }

    pub fn coefficient(&self, rho: &Partition) -> BigRational {
        self.terms.get(rho).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PowerSumElement { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(Error::SizeMismatch(format!("sum of degrees {a} and {b}")));
            }
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    /// Bilinear product, `p_α p_β = p_{α ∪ β}`.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = PowerSumElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(parts), ca * cb);
            }
        }
        out
    }

    /// `p_r[f]`: every `p_j` becomes `p_{jr}`.
    pub fn plethystic_substitute(&self, r: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::precondition("plethystic substitution needs r >= 1"));
        }
        Ok(PowerSumElement { terms: self.terms.iter().map(|(k, v)| (k.scale(r), v.clone())).collect() })
    }

    /// `h_n = Σ_{σ ⊢ n} z_σ⁻¹ p_σ`.
    pub fn complete_homogeneous(n: u64) -> Self {
        let terms = partitions_of(n, None, None).map(|s| {
            let z = BigInt::from(centralizer_size(&s));
            (s, BigRational::new(BigInt::one(), z))
        });
        Self::from_terms(terms).expect("homogeneous")
    }

    /// `s_λ = Σ_ρ z_ρ⁻¹ χ_λ(ρ) p_ρ`.
    pub fn schur(lam: &Partition) -> Result<Self> {
        let cache = super::CharacterCache::new();
        let mut terms = Vec::new();
        for rho in partitions_of(lam.size(), None, None) {
            let chi = cache.character(lam, &rho)?;
            let z = BigInt::from(centralizer_size(&rho));
            terms.push((rho, BigRational::new(BigInt::from(chi), z)));
        }
        Self::from_terms(terms)
    }

    /// `⟨f, s_λ⟩ = Σ_ρ c_ρ χ_λ(ρ)`.
    pub fn schur_coefficient(&self, lam: &Partition) -> Result<BigRational> {
        if let Some(deg) = self.degree() {
            if deg != lam.size() {
                return Err(Error::SizeMismatch(format!(
                    "degree-{deg} function paired with s_{lam} of degree {}",
                    lam.size()
                )));
            }
        }
        Ok(schur_coefficient_of_terms(&self.terms, lam)?.0)
    }
}

impl fmt::Display for PowerSumElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{v}·p{k}")?;
        }
        Ok(())
    }
}
