//! Splitting a partition into rectangles, double columns, distinct single
//! columns and a small leftover shape.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

use super::axioms::rho_case_shapes;
use super::x_membership;

const SPECIAL: [u64; 4] = [1, 2, 4, 6];

/// `ν = ρ + ξ + Σ_k x_k·((k−1)×k) + Σ_k y_k·((k−1)×2)`.
///
/// `x` and `y` only hold nonzero entries. For cases 2–4 `eta` is the
/// exceptional shape inside `ρ`; for case 2 `column` is the added column length,
/// for case 3 it is the height of the added double column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub rho: Partition,
    pub rho_case: u8,
    pub xi: Partition,
    pub x: BTreeMap<u64, u64>,
    pub y: BTreeMap<u64, u64>,
    pub eta: Option<Partition>,
    pub column: Option<u64>,
}

fn columns(lengths: impl IntoIterator<Item = u64>) -> Partition {
    let lengths: Vec<u64> = lengths.into_iter().collect();
    let top = lengths.iter().copied().max().unwrap_or(0);
    Partition::from_unsorted((1..=top).map(|r| lengths.iter().filter(|&&l| l >= r).count() as u64).collect())
}

fn dec(map: &mut BTreeMap<u64, u64>, k: u64, by: u64) {
    let v = map.get_mut(&k).expect("entry present");
    *v -= by;
    if *v == 0 {
        map.remove(&k);
    }
}

pub fn decompose(nu: &Partition) -> Result<Decomposition> {
    if nu.is_empty() {
        return Err(Error::precondition("decompose needs a nonempty partition"));
    }
    if x_membership(nu) {
        return Err(Error::Exceptional(nu.to_string()));
    }
    let cols = nu.column_multiplicities();
    let mut x = BTreeMap::new();
    let mut y = BTreeMap::new();
    let mut rho_cols = Vec::new();
    let mut xi_cols = Vec::new();
    for (&len, &c) in &cols {
        let k = len + 1;
        let (xp, rp) = (c / k, c % k);
        let (xk, rk) = if xp >= 1 { (xp - 1, rp + k) } else { (0, rp) };
        if xk > 0 {
            x.insert(k, xk);
        }
        if rk / 2 > 0 {
            y.insert(k, rk / 2);
        }
        if rk % 2 == 1 {
            if SPECIAL.contains(&len) {
                rho_cols.push(len);
            } else {
                xi_cols.push(len);
            }
        }
    }
    let rho = columns(rho_cols.iter().copied());
    let mut d = Decomposition { rho, rho_case: 1, xi: columns(xi_cols.iter().copied()), x, y, eta: None, column: None };
    if !x_membership(&d.rho) {
        return Ok(d);
    }
    let eta = d.rho.clone();

    // a column whose length is not special, largest first
    if let Some(&i) = cols.keys().rev().find(|l| !SPECIAL.contains(l)) {
        if let Some(pos) = xi_cols.iter().position(|&l| l == i) {
            xi_cols.remove(pos);
        } else {
            dec(&mut d.y, i + 1, 1);
            xi_cols.push(i);
        }
        d.xi = columns(xi_cols.iter().copied());
        d.rho = eta.add(&Partition::column(i));
        d.rho_case = 2;
        d.eta = Some(eta);
        d.column = Some(i);
        return Ok(d);
    }
    if let Some(i) = [6u64, 4, 2].into_iter().find(|i| d.y.contains_key(&(i + 1))) {
        dec(&mut d.y, i + 1, 1);
        d.rho = eta.add(&Partition::rectangle(i, 2));
        d.rho_case = 3;
        d.eta = Some(eta);
        d.column = Some(i);
        return Ok(d);
    }
    // for k = 2 the rectangles (1×2) and double columns coincide
    if d.y.get(&2) == Some(&1) && d.x.contains_key(&2) {
        dec(&mut d.x, 2, 1);
        *d.y.get_mut(&2).expect("present") += 1;
    }
    match d.y.get(&2).copied().unwrap_or(0) {
        0 => Err(Error::Verification(format!("decomposition of {nu} left an exceptional remainder"))),
        1 => {
            d.y.remove(&2);
            d.rho = nu.clone();
            d.rho_case = 5;
            Ok(d)
        }
        _ => {
            dec(&mut d.y, 2, 2);
            d.rho = eta.add(&Partition::row(4));
            d.rho_case = 4;
            d.eta = Some(eta);
            Ok(d)
        }
    }
}

impl Decomposition {
    /// `ρ + ξ + Σ x_k((k−1)×k) + Σ y_k((k−1)×2)`.
    pub fn reconstruct(&self) -> Partition {
        let mut out = self.rho.add(&self.xi);
        for (&k, &c) in &self.x {
            out = out.add(&Partition::rectangle(k - 1, k * c));
        }
        for (&k, &c) in &self.y {
            out = out.add(&Partition::rectangle(k - 1, 2 * c));
        }
        out
    }

    /// Checks every structural property against `ν`.
    pub fn check(&self, nu: &Partition) -> Result<()> {
        let fail = |m: String| Err(Error::Verification(format!("decomposition of {nu}: {m}")));
        if self.reconstruct() != *nu {
            return fail(format!("reconstructs to {}", self.reconstruct()));
        }
        if let Some((k, c)) = self.y.iter().find(|(&k, &c)| c >= k) {
            return fail(format!("y_{k} = {c} is not below {k}"));
        }
        if self.x.keys().chain(self.y.keys()).any(|&k| k < 2 || k > nu.len() as u64 + 1) {
            return fail("index k outside [2, ℓ(ν)+1]".into());
        }
        let xi_cols = self.xi.column_multiplicities();
        if xi_cols.values().any(|&m| m > 1) || xi_cols.keys().any(|l| SPECIAL.contains(l)) {
            return fail(format!("ξ = {} has repeated or special column lengths", self.xi));
        }
        let not_31 = |e: &Option<Partition>| matches!(e, Some(e) if x_membership(e) && e.parts() != [3, 1]);
        let ok = match self.rho_case {
            1 => {
                let c = self.rho.column_multiplicities();
                !x_membership(&self.rho) && c.values().all(|&m| m == 1) && c.keys().all(|l| SPECIAL.contains(l))
            }
            2 => match (self.column, &self.eta) {
                (Some(i), Some(e)) => {
                    !SPECIAL.contains(&i)
                        && i <= nu.len() as u64
                        && not_31(&self.eta)
                        && self.rho == e.add(&Partition::column(i))
                }
                _ => false,
            },
            3 => match (self.column, &self.eta) {
                (Some(i), Some(e)) => {
                    [2, 4, 6].contains(&i) && not_31(&self.eta) && self.rho == e.add(&Partition::rectangle(i, 2))
                }
                _ => false,
            },
            4 => matches!(&self.eta, Some(e) if not_31(&self.eta) && self.rho == e.add(&Partition::row(4))),
            5 => ["3,1,1,1,1,1", "3,1,1,1", "3", "4,1"].iter().any(|s| Partition::parse(s).ok().as_ref() == Some(&self.rho)),
            _ => false,
        };
        if !ok {
            return fail(format!("ρ = {} does not match case {}", self.rho, self.rho_case));
        }
        if matches!(self.rho_case, 1 | 3 | 4 | 5) && !self.rho.is_empty() && !rho_case_shapes().contains(&self.rho) {
            return fail(format!("ρ = {} is not a listed leftover shape", self.rho));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_row_three() {
        let d = decompose(&p(&[3])).unwrap();
        assert_eq!(d.rho_case, 5);
        assert_eq!(d.rho, p(&[3]));
        assert!(d.xi.is_empty() && d.x.is_empty() && d.y.is_empty());
    }

    #[test]
    fn small_cases_check() {
        for nu in [&[2, 2][..], &[5], &[3, 3, 3], &[4, 4, 1, 1], &[7, 1, 1, 1, 1, 1, 1], &[2, 2, 2, 1], &[1, 1, 1]] {
            let nu = p(nu);
            decompose(&nu).unwrap().check(&nu).unwrap();
        }
    }

    #[test]
    fn exceptional_rejected() {
        assert!(matches!(decompose(&p(&[2, 1])), Err(Error::Exceptional(_))));
        assert!(decompose(&Partition::empty()).is_err());
    }

    #[test]
    fn exhaustive_small() {
        for n in 1..=14 {
            for nu in crate::symfun::partitions_of(n, None, None) {
                if x_membership(&nu) {
                    continue;
                }
                decompose(&nu).unwrap().check(&nu).unwrap();
            }
        }
    }
}
