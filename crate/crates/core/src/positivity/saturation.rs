//! Writing any `λ` with `d | |λ|` as an integer combination of elements of the
//! rectangular Kronecker semigroup `S_d`, each element backed by a certificate.

use std::sync::Arc;

use crate::coefficients::Budget;
use crate::error::{Error, Result};
use crate::partition::Partition;

use super::builders::stretched_hook_cert;
use super::certificate::Certificate;

/// `λ = Σ cᵢ·μᵢ` where each `μᵢ` is the first partition of a certificate root on
/// a rectangle with `d` rows.
#[derive(Clone, Debug)]
pub struct SaturationWitness {
    pub lam: Partition,
    pub d: u64,
    pub terms: Vec<(Arc<Certificate>, i64)>,
}

pub fn saturation_witness(lam: &Partition, d: u64) -> Result<SaturationWitness> {
    if d < 7 {
        return Err(Error::precondition(format!("saturation witness needs d >= 7, got {d}")));
    }
    if !lam.size().is_multiple_of(d) {
        return Err(Error::precondition(format!("d = {d} does not divide |λ| = {}", lam.size())));
    }
    if lam.len() as u64 > d * d {
        return Err(Error::precondition(format!("ℓ(λ) = {} exceeds d² = {}", lam.len(), d * d)));
    }
    let m = d;
    // H_t = A_t − B_t = (m² − t, 1^t) with A_t, B_t the triple and double stretched hooks;
    // λ = Σ_t (λ_{t+1} − λ_{t+2}) H_t  (t ≥ 1)  − λ₂ H₀  + (|λ|/d)·(d)
    let mut terms = Vec::new();
    let top = lam.len().max(2) as u64;
    for t in 0..top {
        let coeff = if t == 0 {
            -(lam.part(1) as i64)
        } else {
            lam.part(t as usize) as i64 - lam.part(t as usize + 1) as i64
        };
        if coeff == 0 {
            continue;
        }
        terms.push((Arc::new(stretched_hook_cert(3, m, t)?), coeff));
        terms.push((Arc::new(stretched_hook_cert(2, m, t)?), -coeff));
    }
    let j = (lam.size() / d) as i64;
    if j > 0 {
        terms.push((Arc::new(Certificate::row(d, 1)?), j));
    }
    let w = SaturationWitness { lam: lam.clone(), d, terms };
    w.check_sum()?;
    Ok(w)
}

impl SaturationWitness {
    /// `Σ cᵢ·μᵢ` as an integer vector of length `d²`.
    pub fn evaluate(&self) -> Vec<i128> {
        let mut out = vec![0i128; (self.d * self.d) as usize];
        for (cert, c) in &self.terms {
            for (slot, &p) in out.iter_mut().zip(cert.triple.lam.parts()) {
                *slot += *c as i128 * p as i128;
            }
        }
        out
    }

    /// Re-sums the combination and compares with `λ`; checks every element lies on a `d`-row rectangle.
    pub fn check_sum(&self) -> Result<()> {
        for (cert, _) in &self.terms {
            let t = &cert.triple;
            let rows = t.mu.len() as u64;
            if rows != self.d || t.mu != t.nu || t.mu.parts().iter().any(|&p| p != t.mu.first()) {
                return Err(Error::Verification(format!("element {t} is not on a {}-row rectangle", self.d)));
            }
        }
        let got = self.evaluate();
        let want: Vec<i128> = (0..got.len()).map(|i| self.lam.part(i) as i128).collect();
        if got != want {
            return Err(Error::Verification(format!("combination sums to {got:?}, not {}", self.lam)));
        }
        Ok(())
    }

    /// [`SaturationWitness::check_sum`] plus verification of every certificate.
    pub fn verify(&self, budget: &Budget) -> Result<()> {
        self.check_sum()?;
        for (cert, _) in &self.terms {
            cert.verify(budget)?;
        }
        Ok(())
    }
}
