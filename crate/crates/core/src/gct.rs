//! Occurrence-obstruction bookkeeping: shape filters, the degree lower bound,
//! stable ranges, and the verdict explaining why `q^m_λ(d[n])` must vanish
//! whenever `g(λ, n×d, n×d)` does.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coefficients::{kronecker, limit_a_rho, limit_a_rho_d, plethysm_a, rectangular_kronecker, Budget};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::positivity::{main_cert, x_membership, Certificate, TransposePair, EXCEPTIONAL};

/// `|λ̄| ≤ m·d` and `ℓ(λ) ≤ m²`. When false, `q^m_λ(d[n]) = 0`.
pub fn shape_filter(lam: &Partition, m: u64, d: u64) -> bool {
    let bar = lam.size() - lam.first();
    bar <= m * d && (lam.len() as u64) <= m * m
}

/// Whether `d ≤ n/m`, in which case `a_λ(d[n]) ≤ g(λ, n×d, n×d)`.
pub fn degree_bound_check(lam: &Partition, m: u64, n: u64, d: u64) -> Result<bool> {
    if m == 0 || n == 0 || d == 0 {
        return Err(Error::precondition("m, n, d must be positive"));
    }
    if lam.size() != n * d {
        return Err(Error::SizeMismatch(format!("|λ| = {} but nd = {}", lam.size(), n * d)));
    }
    let bar = lam.size() - lam.first();
    if bar > m * d {
        return Err(Error::precondition(format!("|λ̄| = {bar} exceeds md = {}", m * d)));
    }
    Ok(d * m <= n)
}

/// `(a_λ(d[n]), g(λ, n×d, n×d))` when the degree bound applies and the oracles fit the budget.
pub fn degree_bound_crosscheck(
    lam: &Partition,
    m: u64,
    n: u64,
    d: u64,
    budget: &Budget,
) -> Result<Option<(BigUint, BigUint)>> {
    if !degree_bound_check(lam, m, n, d)? {
        return Ok(None);
    }
    let a = plethysm_a(lam, d, n, budget)?.value;
    let rect = Partition::rectangle(n, d);
    let g = kronecker(lam, &rect, &rect, budget)?.value;
    Ok(Some((a, g)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    ZeroByShape,
    ZeroByDegreeBound,
    ZeroByExceptional,
    HypothesisNotMet,
    KroneckerPositive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Outcome::ZeroByShape => "zero-by-shape",
            Outcome::ZeroByDegreeBound => "zero-by-degree-bound",
            Outcome::ZeroByExceptional => "zero-by-exceptional",
            Outcome::HypothesisNotMet => "hypothesis-not-met",
            Outcome::KroneckerPositive => "kronecker-positive",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceStep {
    pub rule: &'static str,
    pub params: Value,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub outcome: Outcome,
    pub trace: Vec<TraceStep>,
    /// For a positive outcome, a certificate for `(λ, n×d, n×d)` when one could be built.
    pub certificate: Option<Certificate>,
}

impl Verdict {
    /// `{"outcome": …, "trace": [{"rule": …, "params": …}], "certificate": …}`.
    pub fn to_json(&self) -> Value {
        let cert = self.certificate.as_ref().map(|c| {
            let (o, cf, ax) = c.leaf_tiers();
            json!({ "nodes": c.node_count(), "depth": c.depth(), "leaves": { "oracle": o, "closed-form": cf, "axiom": ax } })
        });
        json!({ "schema": "verdict-v1", "outcome": self.outcome, "trace": self.trace, "certificate": cert })
    }
}

fn step(rule: &'static str, params: Value) -> TraceStep {
    TraceStep { rule, params }
}

/// Replays the argument that an occurrence obstruction `q^m_λ(d[n]) > 0 = g(λ, n×d, n×d)`
/// cannot exist once `n > 3m⁴`, reporting which rule settles `λ`.
pub fn main_verdict(lam: &Partition, n: u64, d: u64, m: u64) -> Result<Verdict> {
    if m == 0 || n == 0 || d == 0 {
        return Err(Error::precondition("m, n, d must be positive"));
    }
    if lam.size() != n * d {
        return Err(Error::SizeMismatch(format!("|λ| = {} but nd = {}", lam.size(), n * d)));
    }
    let m4 = 3 * m.pow(4);
    let mut trace = vec![step("hypothesis n > 3m^4", json!({ "n": n, "m": m, "3m^4": m4, "holds": n > m4 }))];
    let done = |outcome, trace| Ok(Verdict { outcome, trace, certificate: None });
    if n <= m4 {
        return done(Outcome::HypothesisNotMet, trace);
    }
    let bar = lam.strip_first_row()?;
    let shape_ok = shape_filter(lam, m, d);
    trace.push(step(
        "shape filter |λ̄| <= md and ℓ(λ) <= m^2",
        json!({ "|λ̄|": bar.size(), "md": m * d, "ℓ(λ)": lam.len(), "m^2": m * m, "holds": shape_ok }),
    ));
    if !shape_ok {
        return done(Outcome::ZeroByShape, trace);
    }
    let low = d * m <= n;
    trace.push(step(
        "degree lower bound: d <= n/m forces a_λ(d[n]) <= g",
        json!({ "d": d, "n/m": format!("{n}/{m}"), "holds": low }),
    ));
    if low {
        return done(Outcome::ZeroByDegreeBound, trace);
    }
    let exceptional = x_membership(&bar);
    trace.push(step("exceptional set: λ̄ in X gives a_λ(d[n]) = 0", json!({ "λ̄": bar.parts(), "member": exceptional })));
    if exceptional {
        return done(Outcome::ZeroByExceptional, trace);
    }
    let me = m.max(3);
    let positive_hyp = d > 3 * me.pow(3) && n > 3 * me.pow(4) && shape_filter(lam, me, d);
    trace.push(step(
        "kronecker positivity for λ̄ outside X",
        json!({ "m": me, "d > 3m^3": d > 3 * me.pow(3), "n > 3m^4": n > 3 * me.pow(4), "holds": positive_hyp || bar.is_empty() }),
    ));
    if bar.is_empty() {
        let cert = Certificate::row(n, d)?;
        return Ok(Verdict { outcome: Outcome::KroneckerPositive, trace, certificate: Some(cert) });
    }
    if !positive_hyp {
        return done(Outcome::HypothesisNotMet, trace);
    }
    let certificate = main_cert(&bar, d, n).ok().map(|c| Certificate::transpose(c, TransposePair::MuNu));
    trace.push(step("certificate", json!({ "built": certificate.is_some() })));
    Ok(Verdict { outcome: Outcome::KroneckerPositive, trace, certificate })
}

/// Three-valued answer for stable-range queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Member,
    NotMember,
    Unknown,
}

fn budget_unknown<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Whether `g(ρ(nd), n×d, n×d)` equals the limit `a_ρ` (or `a_ρ(d)` for the 1-stable range).
pub fn stable_range_member(rho: &Partition, n: u64, d: u64, one_stable: bool, budget: &Budget) -> Result<Membership> {
    if n == 0 || d == 0 {
        return Err(Error::precondition("n, d must be positive"));
    }
    let g = match budget_unknown(rectangular_kronecker(rho, n, d, budget))? {
        Some(g) => g.value,
        None => return Ok(Membership::Unknown),
    };
    let limit = if one_stable { limit_a_rho_d(rho, d, budget) } else { limit_a_rho(rho, budget) };
    Ok(match budget_unknown(limit)? {
        Some(a) if a.value == g => Membership::Member,
        Some(_) => Membership::NotMember,
        None => Membership::Unknown,
    })
}

/// `a_{ρ(nd)}(d[n])` for every exceptional `ρ` that pads to size `nd`; all must vanish.
#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalReport {
    pub d: u64,
    pub n: u64,
    pub instances: Vec<(Partition, u64)>,
}

impl ExceptionalReport {
    pub fn all_zero(&self) -> bool {
        self.instances.iter().all(|(_, v)| *v == 0)
    }
}

pub fn exceptional_vanishing_check(d: u64, n: u64, budget: &Budget) -> Result<ExceptionalReport> {
    if d == 0 || n == 0 {
        return Err(Error::precondition("d, n must be positive"));
    }
    let mut instances = Vec::new();
    for parts in EXCEPTIONAL {
        let rho = Partition::new(parts.to_vec())?;
        let Ok(lam) = rho.pad(n * d) else { continue };
        let v = plethysm_a(&lam, d, n, budget)?;
        instances.push((lam, v.as_u64()));
    }
    Ok(ExceptionalReport { d, n, instances })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shape_filter_examples() {
        assert!(shape_filter(&p(&[10, 1]), 2, 3));
        assert!(!shape_filter(&p(&[3, 1, 1, 1, 1, 1]), 2, 1));
        assert!(!shape_filter(&p(&[5, 5]), 1, 4));
    }

    #[test]
    fn degree_bound_examples() {
        let lam = p(&[10, 2]);
        assert!(degree_bound_check(&lam, 2, 6, 2).unwrap());
        assert!(!degree_bound_check(&p(&[20, 4]), 2, 6, 4).unwrap());
        assert!(degree_bound_check(&p(&[6, 6]), 2, 6, 2).is_err());
        let (a, g) = degree_bound_crosscheck(&lam, 2, 6, 2, &Budget::default()).unwrap().unwrap();
        assert!(a <= g);
    }

    #[test]
    fn verdict_examples() {
        // boundary n = 3m^4
        let v = main_verdict(&Partition::row(3), 3, 1, 1).unwrap();
        assert_eq!(v.outcome, Outcome::HypothesisNotMet);
        let lam = p(&[1, 1, 1, 1, 1, 1]);
        let v = main_verdict(&lam, 6, 1, 1).unwrap();
        assert_eq!(v.outcome, Outcome::ZeroByShape);
        // λ̄ = (2,1), n > 3m^4, d > n/m with m = 2
        let (n, d) = (49, 25);
        let lam = p(&[2, 1]).pad(n * d).unwrap();
        let v = main_verdict(&lam, n, d, 2).unwrap();
        assert_eq!(v.outcome, Outcome::ZeroByExceptional);
        assert!(!v.trace.is_empty());
    }

    #[test]
    fn verdict_positive_with_certificate() {
        let (n, d) = (244, 82);
        let lam = p(&[3, 3]).pad(n * d).unwrap();
        let v = main_verdict(&lam, n, d, 3).unwrap();
        assert_eq!(v.outcome, Outcome::KroneckerPositive);
        let cert = v.certificate.unwrap();
        let t = cert.verify(&Budget::default()).unwrap();
        assert_eq!(t.lam, lam);
        assert_eq!(t.mu, Partition::rectangle(n, d));
    }

    #[test]
    fn stable_range() {
        let b = Budget::default();
        assert_eq!(stable_range_member(&Partition::empty(), 3, 2, false, &b).unwrap(), Membership::Member);
        assert_eq!(stable_range_member(&p(&[6]), 6, 6, false, &b).unwrap(), Membership::Unknown);
        let wide = Budget::uniform(36);
        assert_eq!(stable_range_member(&p(&[6]), 2, 2, false, &wide).unwrap(), Membership::NotMember);
        assert_eq!(stable_range_member(&p(&[6]), 6, 6, false, &wide).unwrap(), Membership::Member);
    }

    #[test]
    fn exceptional_small() {
        let r = exceptional_vanishing_check(2, 4, &Budget::default()).unwrap();
        assert!(r.instances.iter().any(|(l, v)| *l == p(&[7, 1]) && *v == 0));
        assert!(r.all_zero());
        assert!(exceptional_vanishing_check(1, 1, &Budget::default()).unwrap().instances.is_empty());
    }
}
