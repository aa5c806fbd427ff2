//! Certificate builders for the positive families: rectangle blocks, hooks and
//! near-hooks on large rectangles, stretched hooks, and arbitrary `ν(ab)`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::hooks::vanishing_set;
use crate::partition::{KroneckerTriple, Partition};

use super::axioms::{near_hook_exceptions, r_rho, Axiom};
use super::certificate::{Certificate, ClosedForm, Swap, TransposePair};
use super::decompose::{decompose, Decomposition};
use super::x_membership;

type Cert = Arc<Certificate>;

fn bug(msg: String) -> Error {
    Error::Verification(format!("builder produced an inconsistent certificate: {msg}"))
}

/// `(rows, cols)` when the second and third partitions are the same rectangle.
fn rect_of(t: &KroneckerTriple) -> Option<(u64, u64)> {
    let p = t.mu.parts();
    if t.mu != t.nu || p.is_empty() || p.iter().any(|&x| x != p[0]) {
        return None;
    }
    Some((p.len() as u64, p[0]))
}

/// Enlarges the rectangle pair of `cert` to `rows × cols` by adding row
/// triples, conjugating the rectangles when rows have to be added.
pub fn grow(cert: Cert, rows: u64, cols: u64) -> Result<Cert> {
    let (p, q) = rect_of(&cert.triple).ok_or_else(|| bug(format!("{} is not on a rectangle pair", cert.triple)))?;
    if rows < p || cols < q {
        return Err(bug(format!("cannot shrink {p}x{q} to {rows}x{cols}")));
    }
    let mut c = cert;
    if cols > q {
        c = Arc::new(Certificate::add(c, Certificate::row(p, cols - q)?));
    }
    if rows > p {
        c = Arc::new(Certificate::transpose(c, TransposePair::MuNu));
        c = Arc::new(Certificate::add(c, Certificate::row(cols, rows - p)?));
        c = Arc::new(Certificate::transpose(c, TransposePair::MuNu));
    }
    Ok(c)
}

/// `((k×(ks)) + (k(a−ks)), a×k, a×k)`: `s` squares side by side, a row, and a
/// conjugation of the rectangles.
pub fn rect_block_cert(k: u64, s: u64, a: u64) -> Result<Certificate> {
    if k == 0 || s == 0 {
        return Err(Error::precondition(format!("rectangle block needs k, s >= 1 (k = {k}, s = {s})")));
    }
    if a < k * s {
        return Err(Error::precondition(format!("rectangle block needs a >= ks ({a} < {})", k * s)));
    }
    let mut c = Certificate::repeat(Arc::new(Certificate::axiom(Axiom::Square { k })?), s);
    if a > k * s {
        c = Arc::new(Certificate::add(c, Certificate::row(k, a - k * s)?));
    }
    Ok(Certificate::transpose(c, TransposePair::MuNu))
}

/// The sets `H¹_ρ`, `H²_ρ` excluded near the ends of the hook range.
pub fn h_sets(rho: &Partition) -> (Vec<u64>, Vec<u64>) {
    match rho.parts() {
        [] => (vec![1, 2, 4, 6], vec![2, 3, 5, 7]),
        [1] => (vec![2], vec![4]),
        [2] => (vec![2], vec![]),
        [1, 1] => (vec![], vec![5]),
        _ => (vec![], vec![]),
    }
}

/// `[ℓ, c²−R_ρ] \ (H¹ ∪ (c² − H²))`.
fn in_range(k: u64, c: u64, rho: &Partition, h1: &[u64], h2: &[u64]) -> bool {
    let sq = c * c;
    k >= rho.len() as u64 && k + r_rho(rho) <= sq && !h1.contains(&k) && !h2.iter().any(|&h| h <= sq && sq - h == k)
}

/// One induction step from side `c` to `c+1`: `(P ∪ (P + 2c+1)) ∩ [ℓ, (c+1)²−R_ρ]`.
pub fn extension_step(p: &BTreeSet<u64>, c: u64, rho: &Partition, h1: &[u64], h2: &[u64]) -> Result<BTreeSet<u64>> {
    let l = rho.len() as u64;
    let r = r_rho(rho);
    // c > max(√(R+ℓ)+3, ℓ/2 − 1, 6), all in exact integer arithmetic
    let root_ok = c > 3 && (c - 3) * (c - 3) > r + l;
    if !(root_ok && 2 * c + 2 > l && c > 6) {
        return Err(Error::precondition(format!(
            "extension needs c > max(√(R+ℓ)+3, ℓ/2−1, 6); got c = {c}, R = {r}, ℓ = {l}"
        )));
    }
    let lo = l.max(1);
    if let Some(h) = h1.iter().chain(h2).find(|&&h| h < lo || h > 2 * c + 1) {
        return Err(Error::precondition(format!("H-set element {h} outside [{lo}, {}]", 2 * c + 1)));
    }
    if let Some(k) = p.iter().find(|&&k| k < l || k + r > c * c) {
        return Err(Error::precondition(format!("{k} outside [{l}, {}]", (c * c).saturating_sub(r))));
    }
    let top = (c + 1) * (c + 1);
    Ok(p.iter()
        .flat_map(|&k| [k, k + 2 * c + 1])
        .filter(|&k| k >= l && k + r <= top)
        .collect())
}

/// The set `S_c` for the given `ρ` and H-sets.
pub fn admissible_set(c: u64, rho: &Partition, h1: &[u64], h2: &[u64]) -> BTreeSet<u64> {
    (0..c * c).filter(|&k| in_range(k, c, rho, h1, h2)).collect()
}

/// Stay step: `(ν(c²), c×c, c×c) → (ν((c+1)²), (c+1)×(c+1), (c+1)×(c+1))`.
fn stay(c: u64, t: Cert) -> Result<Cert> {
    let t = Arc::new(Certificate::add(t, Certificate::row(c, 1)?));
    let t = Arc::new(Certificate::transpose(t, TransposePair::MuNu));
    Ok(Arc::new(Certificate::add(t, Certificate::row(c + 1, 1)?)))
}

/// Shift step: the first column grows by `2c+1` instead of the first row.
fn shift(c: u64, t: Cert) -> Result<Cert> {
    let t = Arc::new(Certificate::transpose(t, TransposePair::LamMu));
    let t = stay(c, t)?;
    Ok(Arc::new(Certificate::transpose(t, TransposePair::LamMu)))
}

/// Certificate for `((h² − k − |ρ|, 1^k + ρ), h×h, h×h)` by the induction from side 7.
fn extension_cert(h: u64, k: u64, rho: &Partition) -> Result<Cert> {
    let (h1, h2) = h_sets(rho);
    if !in_range(k, h, rho, &h1, &h2) {
        return Err(Error::precondition(format!("exponent {k} is not covered at side {h} for ρ = {rho}")));
    }
    // trace back to side 7, recording which step was used
    let mut steps = Vec::new();
    let mut k = k;
    for c in (7..h).rev() {
        if in_range(k, c, rho, &h1, &h2) {
            steps.push(false);
        } else if k > 2 * c && in_range(k - 2 * c - 1, c, rho, &h1, &h2) {
            steps.push(true);
            k -= 2 * c + 1;
        } else {
            return Err(bug(format!("no predecessor for exponent {k} at side {c}")));
        }
    }
    let base = if rho.is_empty() {
        Axiom::Hook7 { j: k }
    } else {
        Axiom::NearHook7 { j: k, rho: rho.clone() }
    };
    let mut cert = Arc::new(Certificate::axiom(base)?);
    for (c, &is_shift) in (7..h).zip(steps.iter().rev()) {
        cert = if is_shift { shift(c, cert)? } else { stay(c, cert)? };
    }
    Ok(cert)
}

/// `((hw − j, 1^j), h×w, h×w)` for `w ≥ h ≥ 7` and `j` outside the vanishing set.
pub fn hook_cert(h: u64, w: u64, j: u64) -> Result<Certificate> {
    if h < 7 || w < h {
        return Err(Error::precondition(format!("hook certificate needs w >= h >= 7 (h = {h}, w = {w})")));
    }
    if j >= h * h {
        return Err(Error::precondition(format!("j = {j} outside [0, {}]", h * h - 1)));
    }
    if vanishing_set(h)?.contains(&j) {
        return Err(Error::precondition(format!(
            "j = {j} is in the vanishing set {{1,2,4,6,h²−7,h²−5,h²−3,h²−2}} for h = {h}"
        )));
    }
    if j == 0 {
        return Certificate::row(h, w);
    }
    let c = grow(extension_cert(h, j, &Partition::empty())?, h, w)?;
    Ok(Arc::unwrap_or_clone(c))
}

/// `((hw − j − |ρ|, 1^j + ρ), h×w, h×w)` for nonempty `ρ` with `|ρ| ≤ 6`.
pub fn near_hook_cert(h: u64, w: u64, j: u64, rho: &Partition) -> Result<Certificate> {
    if h < 7 || w < h {
        return Err(Error::precondition(format!("near-hook certificate needs w >= h >= 7 (h = {h}, w = {w})")));
    }
    if rho.is_empty() || rho.size() > 6 {
        return Err(Error::precondition(format!("near-hook certificate needs 1 <= |ρ| <= 6, got {rho}")));
    }
    if j == 0 || j + r_rho(rho) > h * h {
        return Err(Error::precondition(format!("j = {j} outside [1, {}]", h * h - r_rho(rho))));
    }
    if near_hook_exceptions(rho, h).contains(&j) {
        return Err(Error::precondition(format!("(ρ, j) = ({rho}, {j}) is an exceptional near-hook")));
    }
    let square = if j <= 6 {
        grow(Arc::new(Certificate::axiom(Axiom::NearHook7 { j, rho: rho.clone() })?), h, h)?
    } else {
        extension_cert(h, j, rho)?
    };
    Ok(Arc::unwrap_or_clone(grow(square, h, w)?))
}

/// Bound bookkeeping of [`main_cert_with_bound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainBound {
    /// `Σ k h_k + Σ_{k=2}^{ℓ} k + w(ℓ−1) + 2w`.
    pub m_bound: u64,
    /// Width actually consumed before the final padding row.
    pub m_used: u64,
    pub w: u64,
    pub decomposition: Decomposition,
}

fn ceil_sqrt(n: u64) -> u64 {
    let r = n.sqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// `(ν(ab), a×b, a×b)` under `ℓ = max(ℓ(ν)+1, 9)`, `a > 3ℓ^{3/2}`, `b ≥ 3ℓ²`, `|ν| ≤ ab/6`.
pub fn main_cert(nu: &Partition, a: u64, b: u64) -> Result<Certificate> {
    main_cert_with_bound(nu, a, b).map(|(c, _)| c)
}

pub fn main_cert_with_bound(nu: &Partition, a: u64, b: u64) -> Result<(Certificate, MainBound)> {
    if x_membership(nu) {
        return Err(Error::Exceptional(nu.to_string()));
    }
    let len = nu.len() as u64;
    let l = (len + 1).max(9);
    if a * a <= 9 * l * l * l {
        return Err(Error::precondition(format!("a = {a} must exceed 3ℓ^(3/2) with ℓ = {l}")));
    }
    if b < 3 * l * l {
        return Err(Error::precondition(format!("b = {b} must be at least 3ℓ² = {}", 3 * l * l)));
    }
    if 6 * nu.size() > a * b {
        return Err(Error::precondition(format!("|ν| = {} exceeds ab/6 = {}", nu.size(), a * b / 6)));
    }
    let expected = KroneckerTriple::rectangular(nu, crate::partition::RectangleShape::new(a, b)?)?;
    let w = ceil_sqrt(len + 8).max(7);
    if nu.is_empty() {
        let c = Certificate::row(a, b)?;
        let bound = MainBound { m_bound: 0, m_used: 0, w, decomposition: empty_decomposition() };
        return Ok((c, bound));
    }
    let d = decompose(nu)?;
    let mut summands: Vec<Cert> = Vec::new();
    let mut sum_kh = 0;

    // rectangles (k−1)×k, grouped in blocks of ⌊a/k⌋
    for (&k, &xk) in &d.x {
        let s = a / k;
        let (hk, tk) = (xk / s, xk % s);
        sum_kh += k * hk;
        if hk > 0 {
            summands.push(Certificate::repeat(Arc::new(rect_block_cert(k, s, a)?), hk));
        }
        if tk > 0 {
            summands.push(Arc::new(rect_block_cert(k, tk, a)?));
        }
    }

    // double columns of length k−1
    for (&k, &yk) in &d.y {
        let kb = k - 1;
        let pair = if [1, 2, 4, 6].contains(&kb) {
            Arc::new(near_hook_cert(w, 2 * w, kb, &Partition::column(kb))?)
        } else {
            let single = Arc::new(hook_cert(w, w, kb)?);
            Arc::new(Certificate::add(single.clone(), single))
        };
        let block = Arc::new(Certificate::transpose(Certificate::repeat(pair, yk), TransposePair::MuNu));
        summands.push(grow(block, a, w)?);
    }

    // distinct single columns of ξ
    let xi_cols: Vec<u64> = d.xi.column_multiplicities().into_keys().collect();
    if !xi_cols.is_empty() {
        let hooks = xi_cols.iter().map(|&c| hook_cert(w, w, c).map(Arc::new)).collect::<Result<Vec<_>>>()?;
        let block = Arc::new(Certificate::transpose(Certificate::sum(hooks), TransposePair::MuNu));
        summands.push(grow(block, a, w)?);
    }

    // the leftover shape
    if !d.rho.is_empty() {
        let block = if d.rho_case == 2 {
            let (i, eta) = (d.column.expect("case 2 column"), d.eta.clone().expect("case 2 η"));
            Arc::new(Certificate::transpose(near_hook_cert(w, a, i, &eta)?, TransposePair::MuNu))
        } else {
            grow(Arc::new(Certificate::axiom(Axiom::RhoCase { rho: d.rho.clone() })?), a, w)?
        };
        summands.push(block);
    }

    let m_bound = sum_kh + (2..=l).sum::<u64>() + w * (l - 1) + 2 * w;
    let body = Certificate::sum(summands);
    let (_, m_used) = rect_of(&body.triple).ok_or_else(|| bug("summands off the a-row rectangles".into()))?;
    if m_used > m_bound || m_bound > b {
        return Err(bug(format!("width bound violated: used {m_used}, bound M = {m_bound}, b = {b}")));
    }
    let root = if b > m_used { Arc::new(Certificate::add(body, Certificate::row(a, b - m_used)?)) } else { body };
    if root.triple != expected {
        return Err(bug(format!("root {} differs from {}", root.triple, expected)));
    }
    Ok((Arc::unwrap_or_clone(root), MainBound { m_bound, m_used, w, decomposition: d }))
}

fn empty_decomposition() -> Decomposition {
    Decomposition {
        rho: Partition::empty(),
        rho_case: 1,
        xi: Partition::empty(),
        x: Default::default(),
        y: Default::default(),
        eta: None,
        column: None,
    }
}

/// `(i·(m² − k, 1^k), m×(im), m×(im))` for `i ≥ 2`, `m ≥ 7`, `k < m²`.
pub fn stretched_hook_cert(i: u64, m: u64, k: u64) -> Result<Certificate> {
    if i < 2 {
        return Err(Error::precondition("stretched hooks need i >= 2; use the hook certificate for i = 1"));
    }
    if m < 7 || k >= m * m {
        return Err(Error::precondition(format!("stretched hook needs m >= 7 and k < m² (m = {m}, k = {k})")));
    }
    if i >= 4 {
        let (i1, i2) = if i.is_multiple_of(2) { (i / 2, 0) } else { ((i - 3) / 2, 1) };
        let mut parts = Vec::new();
        if i1 > 0 {
            parts.push(Certificate::repeat(Arc::new(stretched_hook_cert(2, m, k)?), i1));
        }
        if i2 > 0 {
            parts.push(Arc::new(stretched_hook_cert(3, m, k)?));
        }
        return Ok(Arc::unwrap_or_clone(Certificate::sum(parts)));
    }
    let sq = m * m;
    if k == 0 {
        return Certificate::row(m, i * m);
    }
    if [1, 2, 4, 6].contains(&k) {
        let base = Arc::new(Certificate::axiom(Axiom::Stretch7 { i, k })?);
        return Ok(Arc::unwrap_or_clone(grow(base, m, i * m)?));
    }
    if ![sq - 7, sq - 5, sq - 3, sq - 2].contains(&k) {
        let hook = Arc::new(hook_cert(m, m, k)?);
        return Ok(Arc::unwrap_or_clone(Certificate::repeat(hook, i)));
    }
    // r = m² − k − 1 stays fixed while the sides grow from (7, 7)
    let r = sq - k - 1;
    let base = Certificate::axiom(Axiom::Stretch7 { i, k: 48 - r })?;
    let mut cert = Arc::new(Certificate::transpose(base, TransposePair::LamMu));
    let (mut a, mut b) = (7u64, 7u64);
    while a < m || b < m {
        if b < m {
            let row = Certificate::closed_form(ClosedForm::Hook { d: i, n: a, k: 0 })?;
            let step = Certificate::permute(Certificate::transpose(row, TransposePair::LamNu), Swap::S12);
            cert = Arc::new(Certificate::add(cert, step));
            b += 1;
        } else {
            let t = Certificate::transpose(cert, TransposePair::MuNu);
            cert = Arc::new(Certificate::permute(t, Swap::S23));
            std::mem::swap(&mut a, &mut b);
        }
    }
    Ok(Certificate::transpose(cert, TransposePair::LamMu))
}

/// `(ρ(m·w), m×w, m×w)` with `w = 2m·(number of column pairs)`, for `ρ` with even rows.
pub fn even_rows_cert(rho: &Partition, m: u64) -> Result<Certificate> {
    if m < 7 {
        return Err(Error::precondition(format!("even-rows certificate needs m >= 7, got {m}")));
    }
    if let Some(p) = rho.parts().iter().find(|&&p| p % 2 == 1) {
        return Err(Error::precondition(format!("row of odd length {p} in {rho}")));
    }
    if rho.len() as u64 >= m * m {
        return Err(Error::precondition(format!("ℓ(ρ) = {} must be below m² = {}", rho.len(), m * m)));
    }
    if rho.is_empty() {
        return Certificate::row(m, m);
    }
    let mut blocks = Vec::new();
    for (k, mult) in rho.column_multiplicities() {
        blocks.push(Certificate::repeat(Arc::new(stretched_hook_cert(2, m, k)?), mult / 2));
    }
    Ok(Arc::unwrap_or_clone(Certificate::sum(blocks)))
}

/// `(ρ(nd), d×n, d×n)` for `d > 6` when no special column length occurs exactly
/// once and no column has a length in `{d²−7, d²−5, d²−3, d²−2}`.
pub fn columns_rule_cert(d: u64, n: u64, rho: &Partition) -> Result<Certificate> {
    if d <= 6 || n < d {
        return Err(Error::precondition(format!("columns rule needs d > 6 and n >= d (d = {d}, n = {n})")));
    }
    let expected = KroneckerTriple::rectangular(rho, crate::partition::RectangleShape::new(d, n)?)?;
    let sq = d * d;
    let mut blocks: Vec<Cert> = Vec::new();
    for (i, mult) in rho.column_multiplicities() {
        if [1, 2, 4, 6].contains(&i) {
            if mult == 1 {
                return Err(Error::precondition(format!("exactly one column of length {i}")));
            }
            let mut pairs = mult / 2;
            if mult % 2 == 1 {
                blocks.push(grow(Arc::new(Certificate::axiom(Axiom::Cols6 { i })?), d, d)?);
                pairs -= 1;
            }
            if pairs > 0 {
                let pair = Arc::new(near_hook_cert(d, d, i, &Partition::column(i))?);
                blocks.push(Certificate::repeat(pair, pairs));
            }
        } else {
            if i >= sq || [sq - 7, sq - 5, sq - 3, sq - 2].contains(&i) {
                return Err(Error::precondition(format!("column of length {i} is not allowed for d = {d}")));
            }
            blocks.push(Certificate::repeat(Arc::new(hook_cert(d, d, i)?), mult));
        }
    }
    if blocks.is_empty() {
        return Certificate::row(d, n);
    }
    let body = Certificate::sum(blocks);
    let (_, used) = rect_of(&body.triple).ok_or_else(|| bug("column blocks off the d-row rectangles".into()))?;
    if used > n {
        return Err(Error::precondition(format!("n = {n} is too small: the column blocks need width {used}")));
    }
    let root = grow(body, d, n)?;
    if root.triple != expected {
        return Err(bug(format!("root {} differs from {}", root.triple, expected)));
    }
    Ok(Arc::unwrap_or_clone(root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{kronecker, Budget};
    use crate::hooks::hook_genfun;
    use num_traits::Zero;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ok(c: &Certificate) -> KroneckerTriple {
        c.verify(&Budget::default()).unwrap()
    }

    #[test]
    fn rect_blocks() {
        let c = rect_block_cert(2, 1, 2).unwrap();
        assert_eq!(ok(&c), KroneckerTriple::new(p(&[2, 2]), p(&[2, 2]), p(&[2, 2])).unwrap());
        let c = rect_block_cert(2, 1, 3).unwrap();
        let t = ok(&c);
        assert_eq!(t.lam, p(&[4, 2]));
        assert!(kronecker(&t.lam, &t.mu, &t.nu, &Budget::default()).unwrap().is_positive());
        let c = rect_block_cert(3, 2, 7).unwrap();
        let t = ok(&c);
        assert_eq!(t.lam, p(&[9, 6, 6]));
        assert_eq!(t.mu, Partition::rectangle(7, 3));
        assert!(kronecker(&t.lam, &t.mu, &t.nu, &Budget::default()).unwrap().is_positive());
        assert!(rect_block_cert(3, 3, 8).is_err());
    }

    #[test]
    fn extension_reproduces_hooks() {
        let (h1, h2) = h_sets(&Partition::empty());
        let e = Partition::empty();
        let mut set = admissible_set(7, &e, &h1, &h2);
        for c in 7..12 {
            set = extension_step(&set, c, &e, &h1, &h2).unwrap();
            let g = hook_genfun(c + 1).unwrap();
            let positive: BTreeSet<u64> = (0..(c + 1) * (c + 1)).filter(|&k| !g.coeff(k as usize).is_zero()).collect();
            assert_eq!(set, positive, "side {}", c + 1);
        }
        assert!(extension_step(&BTreeSet::new(), 7, &e, &h1, &h2).unwrap().is_empty());
    }

    #[test]
    fn extension_near_hook_one() {
        let rho = p(&[1]);
        let (h1, h2) = h_sets(&rho);
        let mut set = admissible_set(7, &rho, &h1, &h2);
        for c in 7..10 {
            set = extension_step(&set, c, &rho, &h1, &h2).unwrap();
        }
        let full: BTreeSet<u64> = (1..=100 - 3).collect();
        let missing: Vec<u64> = full.difference(&set).copied().collect();
        assert_eq!(missing, vec![2, 96]);
    }

    #[test]
    fn hooks() {
        let c = hook_cert(7, 7, 0).unwrap();
        assert_eq!(c.kind_name(), "closed-form");
        let c = hook_cert(7, 8, 3).unwrap();
        assert_eq!(ok(&c).lam, Partition::hook(53, 3).unwrap());
        assert!(hook_cert(7, 7, 1).is_err());
        for j in [3, 5, 20, 47 + 14, 80, 90, 99] {
            let c = hook_cert(10, 12, j).unwrap();
            assert_eq!(ok(&c).lam, Partition::hook(120 - j, j).unwrap());
        }
    }

    #[test]
    fn near_hooks() {
        assert!(near_hook_cert(7, 7, 2, &p(&[1])).is_err());
        assert!(near_hook_cert(7, 7, 1, &p(&[2, 1])).is_err());
        let c = near_hook_cert(7, 7, 3, &p(&[1])).unwrap();
        assert_eq!(ok(&c).lam, p(&[45, 2, 1, 1]));
        let c = near_hook_cert(9, 11, 40, &p(&[2, 2])).unwrap();
        let t = ok(&c);
        assert_eq!(t.lam.len(), 41);
        assert_eq!(t.mu, Partition::rectangle(9, 11));
    }

    #[test]
    fn main_small() {
        for nu in [&[3][..], &[2, 2], &[5, 3, 3, 1], &[1, 1, 1, 1, 1, 1, 1, 1]] {
            let nu = p(nu);
            let (c, bound) = main_cert_with_bound(&nu, 82, 243).unwrap();
            let t = ok(&c);
            assert_eq!(t.lam, nu.pad(82 * 243).unwrap());
            assert!(bound.m_used <= bound.m_bound && bound.m_bound <= 243);
        }
        assert!(matches!(main_cert(&p(&[2, 1]), 82, 243), Err(Error::Exceptional(_))));
        assert!(main_cert(&p(&[3]), 81, 243).is_err());
    }

    #[test]
    fn stretched() {
        assert_eq!(stretched_hook_cert(2, 7, 0).unwrap().kind_name(), "closed-form");
        let c = stretched_hook_cert(2, 7, 1).unwrap();
        assert_eq!(ok(&c).lam, p(&[96, 2]));
        let c = stretched_hook_cert(5, 7, 3).unwrap();
        assert_eq!(ok(&c).lam, Partition::hook(46, 3).unwrap().scale(5));
        for k in [1, 4, 57, 59, 61, 62, 30] {
            for i in [2, 3] {
                let c = stretched_hook_cert(i, 8, k).unwrap();
                let t = ok(&c);
                assert_eq!(t.lam, Partition::hook(64 - k, k).unwrap().scale(i));
                assert_eq!(t.mu, Partition::rectangle(8, 8 * i));
            }
        }
        assert!(stretched_hook_cert(1, 7, 3).is_err());
    }

    #[test]
    fn even_rows() {
        let c = even_rows_cert(&p(&[2]), 7).unwrap();
        assert_eq!(ok(&c).lam, p(&[96, 2]));
        let c = even_rows_cert(&p(&[4, 2]), 7).unwrap();
        let t = ok(&c);
        assert_eq!(t.lam, p(&[4, 2]).pad(7 * 28).unwrap());
        assert!(even_rows_cert(&p(&[3, 2]), 7).is_err());
    }

    #[test]
    fn columns_rule() {
        let c = columns_rule_cert(7, 7, &p(&[2])).unwrap();
        assert_eq!(ok(&c).lam, p(&[47, 2]));
        assert!(columns_rule_cert(7, 20, &p(&[1, 1, 1, 1])).is_err());
        assert_eq!(columns_rule_cert(7, 9, &Partition::empty()).unwrap().kind_name(), "closed-form");
        let c = columns_rule_cert(7, 30, &p(&[3, 3, 3, 1, 1])).unwrap();
        assert_eq!(ok(&c).lam, p(&[3, 3, 3, 1, 1]).pad(210).unwrap());
    }
}
