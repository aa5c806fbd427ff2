//! Multiplicity oracles: Kronecker, Littlewood–Richardson and plethysm
//! coefficients, and the stable limits of rectangular Kronecker coefficients.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, RectangleShape};
use crate::symfun::{self, centralizer_from_multiplicities, class_fold, factorial, partitions_of, PowerSumElement};

/// Oracle size limits. Requests above a limit are refused with
/// [`Error::BudgetExceeded`] instead of running for hours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest `N` for a Kronecker character sum.
    pub kronecker: u64,
    /// Largest `d·n` for a plethysm coefficient.
    pub plethysm: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { kronecker: 28, plethysm: 40 }
    }
}

impl Budget {
    pub fn unbounded() -> Self {
        Budget { kronecker: u64::MAX, plethysm: u64::MAX }
    }

    /// Same limit for both oracles.
    pub fn uniform(limit: u64) -> Self {
        Budget { kronecker: limit, plethysm: limit }
    }

    fn check_kronecker(&self, n: u64) -> Result<()> {
        if n > self.kronecker {
            return Err(Error::BudgetExceeded { what: "kronecker", requested: n, limit: self.kronecker });
        }
        Ok(())
    }

    fn check_plethysm(&self, n: u64) -> Result<()> {
        if n > self.plethysm {
            return Err(Error::BudgetExceeded { what: "plethysm", requested: n, limit: self.plethysm });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    CharacterSum,
    LrTableaux,
    RectComplement,
    PlethysmPBasis,
    StabilizedKronecker,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::CharacterSum => "character-sum",
            Method::LrTableaux => "lr-tableaux",
            Method::RectComplement => "rect-complement",
            Method::PlethysmPBasis => "plethysm-p-basis",
            Method::StabilizedKronecker => "stabilized-kronecker",
        };
        f.write_str(s)
    }
}

/// A nonnegative multiplicity, the code path that produced it, and the
/// number of conjugacy classes (or tableaux) visited.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityResult {
    #[serde(serialize_with = "ser_biguint")]
    pub value: BigUint,
    pub method: Method,
    pub cost: u64,
}

fn ser_biguint<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

impl MultiplicityResult {
    fn new(value: BigUint, method: Method, cost: u64) -> Self {
        MultiplicityResult { value, method, cost }
    }

    pub fn is_positive(&self) -> bool {
        !self.value.is_zero()
    }

    /// The value as `u64`; multiplicities at desk scale always fit.
    pub fn as_u64(&self) -> u64 {
        self.value.to_u64().expect("multiplicity fits in u64")
    }
}

fn same_size(what: &str, sizes: &[u64]) -> Result<()> {
    if sizes.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::SizeMismatch(format!("{what}: sizes {sizes:?}")));
    }
    Ok(())
}

/// `g(λ, μ, ν) = Σ_ρ z_ρ⁻¹ χ_λ(ρ) χ_μ(ρ) χ_ν(ρ)`.
pub fn kronecker(lam: &Partition, mu: &Partition, nu: &Partition, budget: &Budget) -> Result<MultiplicityResult> {
    same_size("kronecker", &[lam.size(), mu.size(), nu.size()])?;
    let n = lam.size();
    budget.check_kronecker(n)?;

    // evaluate each distinct shape once
    let mut shapes: Vec<Partition> = Vec::new();
    let mut index = [0usize; 3];
    for (slot, s) in [lam, mu, nu].into_iter().enumerate() {
        index[slot] = match shapes.iter().position(|t| t == s) {
            Some(i) => i,
            None => {
                shapes.push(s.clone());
                shapes.len() - 1
            }
        };
    }
    let n_fact = factorial(n);
    let (sum, cost) = class_fold(
        &shapes,
        BigInt::zero,
        |acc, class, chi| {
            let z = centralizer_from_multiplicities(class.multiplicities().into_iter());
            let class_size = BigInt::from(&n_fact / z);
            let prod = BigInt::from(chi[index[0]]) * chi[index[1]] * chi[index[2]];
            *acc += class_size * prod;
            Ok(())
        },
        |a, b| a + b,
    )?;
    let (q, r) = sum.div_rem(&BigInt::from(n_fact));
    debug_assert!(r.is_zero() && !q.is_negative());
    let value = q.to_biguint().expect("Kronecker coefficients are nonnegative");
    Ok(MultiplicityResult::new(value, Method::CharacterSum, cost))
}

/// `g(ρ(nd), n×d, n×d)`, taken to be 0 when `ρ(nd)` is not a partition.
pub fn rectangular_kronecker(rho: &Partition, n: u64, d: u64, budget: &Budget) -> Result<MultiplicityResult> {
    let rect = RectangleShape::new(n, d)?;
    match rho.pad(rect.size()) {
        Ok(lam) => {
            let r = rect.to_partition();
            kronecker(&lam, &r, &r, budget)
        }
        Err(_) => Ok(MultiplicityResult::new(BigUint::zero(), Method::CharacterSum, 0)),
    }
}

/// `c^λ_{θτ}` by counting Littlewood–Richardson tableaux of shape `λ/θ` and content `τ`.
pub fn littlewood_richardson(lam: &Partition, theta: &Partition, tau: &Partition) -> Result<MultiplicityResult> {
    if theta.size() + tau.size() != lam.size() {
        return Err(Error::SizeMismatch(format!(
            "|{theta}| + |{tau}| != |{lam}| in a Littlewood-Richardson coefficient"
        )));
    }
    let (value, cost) = lr_count(lam, theta, tau);
    Ok(MultiplicityResult::new(BigUint::from(value), Method::LrTableaux, cost))
}

pub(crate) fn lr_count(lam: &Partition, theta: &Partition, tau: &Partition) -> (u64, u64) {
    if !lam.contains(theta) || !lam.contains(tau) {
        return (0, 0);
    }
    // cells in reading order: rows top to bottom, each row right to left
    let mut cells = Vec::new();
    for r in 0..lam.len() {
        for c in (theta.part(r)..lam.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = lam.first() as usize;
    let mut grid = vec![vec![0usize; width]; lam.len()];
    let mut counts = vec![0u64; tau.len() + 1];
    let mut visited = 0u64;
    let total = lr_fill(0, &cells, theta, tau, &mut grid, &mut counts, &mut visited);
    (total, visited)
}

fn lr_fill(
    i: usize,
    cells: &[(usize, usize)],
    theta: &Partition,
    tau: &Partition,
    grid: &mut [Vec<usize>],
    counts: &mut [u64],
    visited: &mut u64,
) -> u64 {
    let Some(&(r, c)) = cells.get(i) else {
        *visited += 1;
        return 1;
    };
    // right neighbour (already filled if inside the skew shape): value ≤ it
    let mut hi = tau.len();
    if c + 1 < grid[r].len() && grid[r][c + 1] > 0 {
        hi = hi.min(grid[r][c + 1]);
    }
    // cell above inside the skew shape: value > it
    let mut lo = 1;
    if r > 0 && (c as u64) >= theta.part(r - 1) {
        lo = grid[r - 1][c] + 1;
    }
    let mut total = 0;
    for v in lo..=hi {
        if counts[v] >= tau.part(v - 1) || (v > 1 && counts[v] >= counts[v - 1]) {
            continue;
        }
        counts[v] += 1;
        grid[r][c] = v;
        total += lr_fill(i + 1, cells, theta, tau, grid, counts, visited);
        grid[r][c] = 0;
        counts[v] -= 1;
    }
    total
}

/// `c^{d×n}_{θτ}`: 1 exactly when `τ` is the complement of `θ` in the
/// rectangle rotated by 180°, i.e. `θ_i + τ_{d+1−i} = n`.
pub fn rect_complement_lr(rect: RectangleShape, theta: &Partition, tau: &Partition) -> Result<MultiplicityResult> {
    if theta.size() + tau.size() != rect.size() {
        return Err(Error::SizeMismatch(format!(
            "|{theta}| + |{tau}| != |{rect}| in a rectangle Littlewood-Richardson coefficient"
        )));
    }
    let d = rect.rows as usize;
    let n = rect.cols;
    let fits = theta.len() <= d && tau.len() <= d && theta.first() <= n && tau.first() <= n;
    let complement = fits && (0..d).all(|i| theta.part(i) + tau.part(d - 1 - i) == n);
    Ok(MultiplicityResult::new(BigUint::from(complement as u8), Method::RectComplement, 1))
}

/// `Σ_{θ ⊢ k, τ ⊢ N−k} c^λ_{θτ} c^μ_{θᵗτ}`, which equals
/// `g(λ, μ, (N−k, 1^k)) + g(λ, μ, (N−k+1, 1^{k−1}))` (second term 0 at `k = 0`).
pub fn littlewood_hook_rhs(lam: &Partition, mu: &Partition, k: u64) -> Result<MultiplicityResult> {
    same_size("littlewood_hook_rhs", &[lam.size(), mu.size()])?;
    let n = lam.size();
    if k > n {
        return Err(Error::precondition(format!("k = {k} exceeds N = {n}")));
    }
    let mut total = 0u64;
    let mut cost = 0u64;
    for theta in partitions_of(k, None, None) {
        let theta_t = theta.transpose();
        if !lam.contains(&theta) || !mu.contains(&theta_t) {
            continue;
        }
        for tau in partitions_of(n - k, Some(lam.first()), Some(lam.len())) {
            let (a, ca) = lr_count(lam, &theta, &tau);
            cost += ca;
            if a == 0 {
                continue;
            }
            let (b, cb) = lr_count(mu, &theta_t, &tau);
            cost += cb;
            total += a * b;
        }
    }
    Ok(MultiplicityResult::new(BigUint::from(total), Method::LrTableaux, cost))
}

type PlethysmMemo = Mutex<HashMap<(u64, u64), Arc<PowerSumElement>>>;

/// `h_d[h_n]` in the power-sum basis, memoized per `(d, n)`.
pub fn plethysm_element(d: u64, n: u64) -> Arc<PowerSumElement> {
    static MEMO: OnceLock<PlethysmMemo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(e) = memo.lock().expect("plethysm memo").get(&(d, n)) {
        return e.clone();
    }
    let h_n = PowerSumElement::complete_homogeneous(n);
    let mut total = PowerSumElement::zero();
    for (sigma, coeff) in PowerSumElement::complete_homogeneous(d).terms() {
        let mut term = PowerSumElement::one();
        for (&r, &m) in sigma.multiplicities().iter().rev() {
            let base = h_n.plethystic_substitute(r).expect("r >= 1");
            for _ in 0..m {
                term = term.product(&base);
            }
        }
        total = total.sum(&term.scale(coeff)).expect("homogeneous");
    }
    let e = Arc::new(total);
    memo.lock().expect("plethysm memo").insert((d, n), e.clone());
    e
}

/// `a_λ(d[n])`, the multiplicity of `{λ}` in `Sym^d(Sym^n V)`.
pub fn plethysm_a(lam: &Partition, d: u64, n: u64, budget: &Budget) -> Result<MultiplicityResult> {
    if d == 0 || n == 0 {
        return Err(Error::precondition("plethysm needs d, n >= 1"));
    }
    if lam.size() != d * n {
        return Err(Error::SizeMismatch(format!("|{lam}| = {} but d·n = {}", lam.size(), d * n)));
    }
    budget.check_plethysm(d * n)?;
    let f = plethysm_element(d, n);
    let (value, cost) = symfun::schur_coefficient_of_terms(f.terms(), lam)?;
    Ok(MultiplicityResult::new(rational_to_count(value)?, Method::PlethysmPBasis, cost))
}

fn rational_to_count(q: BigRational) -> Result<BigUint> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::Verification(format!("multiplicity evaluated to {q}")));
    }
    Ok(q.to_integer().to_biguint().expect("nonnegative"))
}

/// `a_ρ(d) = g(ρ(nd), n×d, n×d)` with `n = max(|ρ|, 1)`.
pub fn limit_a_rho_d(rho: &Partition, d: u64, budget: &Budget) -> Result<MultiplicityResult> {
    if d == 0 {
        return Err(Error::precondition("a_rho(d) needs d >= 1"));
    }
    let n = rho.size().max(1);
    let r = rectangular_kronecker(rho, n, d, budget)?;
    Ok(MultiplicityResult::new(r.value, Method::StabilizedKronecker, r.cost))
}

/// `a_ρ = g(ρ(n²), n×n, n×n)` with `n = max(|ρ|, 2)`.
pub fn limit_a_rho(rho: &Partition, budget: &Budget) -> Result<MultiplicityResult> {
    let n = rho.size().max(2);
    let r = rectangular_kronecker(rho, n, n, budget)?;
    Ok(MultiplicityResult::new(r.value, Method::StabilizedKronecker, r.cost))
}
