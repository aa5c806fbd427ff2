//! Closed forms for rectangular Kronecker coefficients indexed by hooks,
//! two-row and two-column partitions.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::symfun::partitions_of;

/// Dense polynomial with nonnegative integer coefficients, `coeffs[k]` at `q^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientPolynomial {
    pub coeffs: Vec<BigUint>,
}

impl CoefficientPolynomial {
    pub fn one() -> Self {
        CoefficientPolynomial { coeffs: vec![BigUint::one()] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Multiplies in place by `1 + q^e`.
    pub fn times_binomial(&mut self, e: usize) {
        let old = self.coeffs.len();
        self.coeffs.resize(old + e, BigUint::zero());
        for k in (e..old + e).rev() {
            let add = self.coeffs[k - e].clone();
            self.coeffs[k] += add;
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// Exponents in `[0, degree]` with coefficient zero.
    pub fn zeros(&self) -> BTreeSet<u64> {
        (0..self.coeffs.len()).filter(|&k| self.coeffs[k].is_zero()).map(|k| k as u64).collect()
    }
}

impl fmt::Display for CoefficientPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "q^{k}")?,
                _ => write!(f, "{c}*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `Π_{i=from}^{d} (1 + q^{2i−1})`.
fn odd_product(from: u64, d: u64) -> CoefficientPolynomial {
    let mut p = CoefficientPolynomial::one();
    for i in from..=d {
        p.times_binomial((2 * i - 1) as usize);
    }
    p
}

/// `Π_{i=2}^{d} (1 + q^{2i−1})`, the generating function of the hook
/// coefficients `g((nd−k, 1^k), d×n, d×n)` for `d ≤ n`.
pub fn hook_genfun(d: u64) -> Result<CoefficientPolynomial> {
    if d == 0 {
        return Err(Error::precondition("hook generating function needs d >= 1"));
    }
    Ok(odd_product(2, d))
}

/// `g((nd−k, 1^k), d×n, d×n)` read off the generating function of `min(d, n)`.
pub fn hook_kron(d: u64, n: u64, k: u64) -> Result<BigUint> {
    if d == 0 || n == 0 {
        return Err(Error::precondition("hook coefficient needs d, n >= 1"));
    }
    if k >= n * d {
        return Err(Error::precondition(format!("k = {k} is not in [0, {}]", n * d - 1)));
    }
    Ok(hook_genfun(d.min(n))?.coeff(k as usize))
}

/// Exponents `k ≤ d²−1` where the hook coefficient vanishes.
pub fn vanishing_set(d: u64) -> Result<BTreeSet<u64>> {
    let table: &[u64] = match d {
        0 | 1 => return Err(Error::precondition(format!("vanishing set needs d >= 2, got {d}"))),
        2 => &[1, 2],
        3 => &[1, 2, 4, 6, 7],
        4 => &[1, 2, 4, 6, 9, 11, 13, 14],
        5 => &[1, 2, 4, 6, 11, 13, 18, 20, 22, 23],
        6 => &[1, 2, 4, 6, 13, 22, 29, 31, 33, 34],
        _ => {
            let s = d * d;
            return Ok([1, 2, 4, 6, s - 7, s - 5, s - 3, s - 2].into_iter().collect());
        }
    };
    Ok(table.iter().copied().collect())
}

/// Zero coefficients of [`hook_genfun`] on `[0, d²−1]`.
pub fn genfun_zero_set(d: u64) -> Result<BTreeSet<u64>> {
    let g = hook_genfun(d)?;
    Ok((0..d * d).filter(|&k| g.coeff(k as usize).is_zero()).collect())
}

/// Number of self-conjugate partitions of `k` inside the `d×n` rectangle.
pub fn self_conjugate_count(k: u64, d: u64, n: u64) -> u64 {
    partitions_of(k, Some(n), Some(d as usize)).filter(|t| t.is_self_conjugate()).count() as u64
}

/// `Π_{i=1}^{d} (1 + q^{2i−1}) = Σ b_j q^j`.
pub fn b_sequence(d: u64) -> CoefficientPolynomial {
    odd_product(1, d)
}

/// Whether the window `b_26, …, b_{d²−26}` is symmetric and strictly
/// unimodal. Only neighbours inside the window are compared: `b_i > b_{i−1}`
/// for `26 < i ≤ d²/2` and `b_i > b_{i+1}` for `d²/2 < i < d²−26`.
pub fn unimodality_check(d: u64) -> Result<bool> {
    if d < 27 {
        return Err(Error::precondition(format!("unimodality is only claimed for d >= 27, got {d}")));
    }
    let b = b_sequence(d).coeffs;
    let top = (d * d) as usize;
    let lo = 26usize;
    let hi = top - 26;
    let symmetric = (lo..=hi).all(|i| b[i] == b[top - i]);
    let rising = (lo + 1..=top / 2).all(|i| b[i] > b[i - 1]);
    let falling = (top / 2 + 1..hi).filter(|&i| 2 * i > top).all(|i| b[i] > b[i + 1]);
    Ok(symmetric && rising && falling)
}

/// Exponents `2 ≤ k ≤ d²/2` where `g_k(d, n) > g_{k−2}(d, n)` fails (`d ≤ n`).
pub fn strict_growth_failures(d: u64) -> Result<Vec<u64>> {
    let g = hook_genfun(d)?;
    Ok((2..=d * d / 2).filter(|&k| g.coeff(k as usize) <= g.coeff(k as usize - 2)).collect())
}

/// `g((a^b), (c^d), (N−k, k))` for two distinct rectangles of the same size `N`.
pub fn two_rect_two_row(a: u64, b: u64, c: u64, d: u64, k: u64) -> Result<u64> {
    if a == 0 || b == 0 || c == 0 || d == 0 {
        return Err(Error::precondition("rectangle sides must be positive"));
    }
    if a * b != c * d {
        return Err(Error::SizeMismatch(format!("{a}·{b} != {c}·{d}")));
    }
    if a == c {
        return Err(Error::precondition("the two rectangles must differ (a != c)"));
    }
    let n = a * b;
    if 2 * k > n {
        return Err(Error::precondition(format!("k = {k} exceeds N/2 = {}", n / 2)));
    }
    // orient so that b < d
    let (b, d) = if b < d { (b, d) } else { (d, b) };
    Ok((2 * k == n && d % (d - b) == 0) as u64)
}

/// `g((2^k, 1^{nd−2k}), n×d, n×d)` for `n != d`.
pub fn two_column(n: u64, d: u64, k: u64) -> Result<u64> {
    if n == 0 || d == 0 {
        return Err(Error::precondition("rectangle sides must be positive"));
    }
    if n == d {
        return Err(Error::precondition("two-column closed form needs n != d"));
    }
    if 2 * k > n * d {
        return Err(Error::precondition(format!("2k = {} exceeds nd = {}", 2 * k, n * d)));
    }
    Ok((2 * k == n * d && d.is_multiple_of(n.abs_diff(d))) as u64)
}
