//! Registry of base facts taken on trust (or on a long oracle run) rather than
//! re-derived at verification time.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::coefficients::{kronecker, Budget};

use crate::error::{Error, Result};
use crate::hooks::hook_genfun;
use crate::partition::{KroneckerTriple, Partition};
use crate::symfun::partitions_of;

use super::x_membership;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `g(k×k, k×k, k×k) > 0`.
    Square { k: u64 },
    /// `g((49−j, 1^j), 7×7, 7×7) > 0`.
    Hook7 { j: u64 },
    /// `g((49−j−|ρ|, 1^j + ρ), 7×7, 7×7) > 0`.
    NearHook7 { j: u64, rho: Partition },
    /// `g(i·(49−k, 1^k), 7×(7i), 7×(7i)) > 0`.
    Stretch7 { i: u64, k: u64 },
    /// `g(ρ(49), 7×7, 7×7) > 0` for the finitely many leftover shapes of the decomposition.
    RhoCase { rho: Partition },
    /// `g((36−3i, 3^i), 6×6, 6×6) > 0`: three columns of length `i` on the 6×6 square.
    Cols6 { i: u64 },
}

/// Identifiers as they appear in serialized certificates.
pub const AXIOM_IDS: [&str; 6] = ["SQUARE", "HOOK7", "NEARHOOK7", "STRETCH7", "RHOCASE", "COLS6"];

/// Entry for the exceptional set; listed for completeness, never a certificate leaf.
pub const XTABLE: &str = "XTABLE";

/// Hook exponents excluded at 7×7.
pub const HOOK7_EXCLUDED: [u64; 8] = [1, 2, 4, 6, 42, 44, 46, 47];

/// `R_ρ = |ρ| + ρ₁ + 1`.
pub fn r_rho(rho: &Partition) -> u64 {
    rho.size() + rho.first() + 1
}

/// Near-hook exponents `j` that are zero at side `h` for the listed `ρ`.
pub fn near_hook_exceptions(rho: &Partition, h: u64) -> Vec<u64> {
    let sq = h * h;
    match rho.parts() {
        [1] => vec![2, sq - 4],
        [2] => vec![2],
        [1, 1] => vec![1, sq - 5],
        [2, 1] => vec![1],
        _ => vec![],
    }
}

fn columns_shape(lengths: &[u64]) -> Partition {
    let top = lengths.iter().copied().max().unwrap_or(0);
    let parts = (1..=top).map(|r| lengths.iter().filter(|&&l| l >= r).count() as u64).collect();
    Partition::from_unsorted(parts)
}

/// The leftover shapes `ρ` whose 7×7 positivity is assumed by the main builder.
pub fn rho_case_shapes() -> BTreeSet<Partition> {
    let mut out = BTreeSet::new();
    let lens = [1u64, 2, 4, 6];
    for mask in 1u32..16 {
        let chosen: Vec<u64> = (0..4).filter(|b| mask >> b & 1 == 1).map(|b| lens[b]).collect();
        out.insert(columns_shape(&chosen));
    }
    let etas: Vec<Partition> = [&[1][..], &[1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1, 1, 1], &[2, 1]]
        .iter()
        .map(|p| Partition::from_unsorted(p.to_vec()))
        .collect();
    for eta in &etas {
        for i in [2, 4, 6] {
            out.insert(eta.add(&Partition::rectangle(i, 2)));
        }
        out.insert(eta.add(&Partition::row(4)));
        out.insert(eta.add(&Partition::row(2)));
    }
    out.retain(|r| !x_membership(r));
    out
}

fn triple(lam: Partition, rect: Partition) -> KroneckerTriple {
    KroneckerTriple { lam, mu: rect.clone(), nu: rect }
}

impl Axiom {
    pub fn id(&self) -> &'static str {
        match self {
            Axiom::Square { .. } => "SQUARE",
            Axiom::Hook7 { .. } => "HOOK7",
            Axiom::NearHook7 { .. } => "NEARHOOK7",
            Axiom::Stretch7 { .. } => "STRETCH7",
            Axiom::RhoCase { .. } => "RHOCASE",
            Axiom::Cols6 { .. } => "COLS6",
        }
    }

    /// Checks the parameters against the axiom's domain.
    pub fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Verification(format!("{}: {msg}", self.id())));
        match self {
            Axiom::Square { k } => {
                if *k == 0 {
                    return bad("k must be positive".into());
                }
            }
            Axiom::Hook7 { j } => {
                if *j > 48 || HOOK7_EXCLUDED.contains(j) {
                    return bad(format!("j = {j} outside the admissible set"));
                }
                // exact: the 7×7 hook coefficient is a generating-function coefficient
                if hook_genfun(7)?.coeff(*j as usize).is_zero() {
                    return bad(format!("hook coefficient at j = {j} vanishes"));
                }
            }
            Axiom::NearHook7 { j, rho } => {
                if rho.is_empty() || rho.size() > 6 {
                    return bad(format!("ρ = {rho} must be nonempty of size at most 6"));
                }
                if *j == 0 || *j + r_rho(rho) > 49 {
                    return bad(format!("j = {j} outside [1, {}]", 49 - r_rho(rho)));
                }
                if near_hook_exceptions(rho, 7).contains(j) {
                    return bad(format!("(j, ρ) = ({j}, {rho}) is an exception"));
                }
            }
            Axiom::Stretch7 { i, k } => {
                if !(*i == 2 || *i == 3) || !HOOK7_EXCLUDED.contains(k) {
                    return bad(format!("(i, k) = ({i}, {k}) not a base case"));
                }
            }
            Axiom::RhoCase { rho } => {
                if !rho_case_shapes().contains(rho) {
                    return bad(format!("ρ = {rho} not a listed leftover shape"));
                }
            }
            Axiom::Cols6 { i } => {
                if ![1, 2, 4, 6].contains(i) {
                    return bad(format!("i = {i} not in {{1,2,4,6}}"));
                }
            }
        }
        Ok(())
    }

    /// The triple asserted positive, after checking the parameters.
    pub fn triple(&self) -> Result<KroneckerTriple> {
        self.check()?;
        let sq7 = Partition::rectangle(7, 7);
        Ok(match self {
            Axiom::Square { k } => triple(Partition::rectangle(*k, *k), Partition::rectangle(*k, *k)),
            Axiom::Hook7 { j } => triple(Partition::hook(49 - j, *j)?, sq7),
            Axiom::NearHook7 { j, rho } => {
                let lam = Partition::column_plus(*j, rho).with_first_row(49 - j - rho.size())?;
                triple(lam, sq7)
            }
            Axiom::Stretch7 { i, k } => triple(Partition::hook(49 - k, *k)?.scale(*i), Partition::rectangle(7, 7 * i)),
            Axiom::RhoCase { rho } => triple(rho.pad(49)?, sq7),
            Axiom::Cols6 { i } => triple(Partition::rectangle(*i, 3).pad(36)?, Partition::rectangle(6, 6)),
        })
    }

    /// Every instance of the finite axioms (all but `SQUARE`), for audits.
    pub fn finite_instances() -> Vec<Axiom> {
        let mut out: Vec<Axiom> = (0..49).map(|j| Axiom::Hook7 { j }).filter(|a| a.check().is_ok()).collect();
        for size in 1..=6 {
            for rho in partitions_of(size, None, None) {
                for j in 1..=49 - r_rho(&rho) {
                    let a = Axiom::NearHook7 { j, rho: rho.clone() };
                    if a.check().is_ok() {
                        out.push(a);
                    }
                }
            }
        }
        for i in [2, 3] {
            out.extend(HOOK7_EXCLUDED.iter().map(|&k| Axiom::Stretch7 { i, k }));
        }
        out.extend(rho_case_shapes().into_iter().map(|rho| Axiom::RhoCase { rho }));
        out.extend([1, 2, 4, 6].map(|i| Axiom::Cols6 { i }));
        out
    }
}

/// Result of re-checking one axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuditOutcome {
    /// Positive by the named method, with the coefficient when computed.
    Confirmed { method: &'static str, value: Option<BigUint> },
    Refuted,
    Skipped(String),
}

/// Re-checks `axiom`: hooks through the 7×7 generating function, everything
/// else through the character oracle within `budget`.
pub fn audit(axiom: &Axiom, budget: &Budget) -> Result<AuditOutcome> {
    let t = axiom.triple()?;
    if let Axiom::Hook7 { j } = axiom {
        let v = hook_genfun(7)?.coeff(*j as usize);
        return Ok(if v.is_zero() {
            AuditOutcome::Refuted
        } else {
            AuditOutcome::Confirmed { method: "hook-genfun", value: Some(v) }
        });
    }
    if t.as_array().iter().any(|p| p.first() + p.len() as u64 > 128) {
        return Ok(AuditOutcome::Skipped(format!("{t} is too long for the character oracle")));
    }
    match kronecker(&t.lam, &t.mu, &t.nu, budget) {
        Ok(r) if r.is_positive() => Ok(AuditOutcome::Confirmed { method: "character-sum", value: Some(r.value) }),
        Ok(_) => Ok(AuditOutcome::Refuted),
        Err(Error::BudgetExceeded { requested, limit, .. }) => {
            Ok(AuditOutcome::Skipped(format!("size {requested} over budget {limit}")))
        }
        Err(Error::Overflow) => Ok(AuditOutcome::Skipped(format!("{t}: characters exceed 128 bits"))),
        Err(e) => Err(e),
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Square { k } => write!(f, "SQUARE({k})"),
            Axiom::Hook7 { j } => write!(f, "HOOK7({j})"),
            Axiom::NearHook7 { j, rho } => write!(f, "NEARHOOK7({j}, {rho})"),
            Axiom::Stretch7 { i, k } => write!(f, "STRETCH7({i}, {k})"),
            Axiom::RhoCase { rho } => write!(f, "RHOCASE({rho})"),
            Axiom::Cols6 { i } => write!(f, "COLS6({i})"),
        }
    }
}
