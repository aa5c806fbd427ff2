//! Integer partitions and the handful of shape operations everything else is
//! built from: conjugation, rowwise sums, scaling, and adding or removing a
//! long first row.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so the empty partition has a single
/// representation and `==` is equality of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates weak decrease and positivity. Trailing zeros are stripped;
    /// a zero followed by a positive part is rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts the caller knows are weakly decreasing.
    /// Zeros at the end are dropped.
    pub(crate) fn from_sorted(mut parts: Vec<u64>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition(parts)
    }

    /// Sorts arbitrary positive parts into a partition (zeros dropped).
    pub fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `rows × cols`: `rows` parts all equal to `cols`.
    pub fn rectangle(rows: u64, cols: u64) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows as usize])
    }

    /// The single row `(n)`.
    pub fn row(n: u64) -> Self {
        Partition::from_sorted(vec![n])
    }

    /// The single column `(1^n)`.
    pub fn column(n: u64) -> Self {
        Partition::rectangle(n, 1)
    }

    /// The hook `(i, 1^j)`; `i = 0` is only allowed together with `j = 0`.
    pub fn hook(i: u64, j: u64) -> Result<Self> {
        if i == 0 && j > 0 {
            return Err(Error::precondition(format!("hook ({i},1^{j}) needs a nonempty first row")));
        }
        let mut parts = vec![i];
        parts.extend(std::iter::repeat_n(1, j as usize));
        Ok(Partition::from_sorted(parts))
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u64 {
        self.part(0)
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let cols = self.first() as usize;
        let mut out = vec![0u64; cols];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(out)
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.transpose() == *self
    }

    /// Rowwise sum; missing rows count as zero.
    pub fn add(&self, other: &Partition) -> Self {
        let n = self.len().max(other.len());
        Partition((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    pub fn scale(&self, a: u64) -> Self {
        if a == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|p| p * a).collect())
    }

    /// `ρ(N) = (N − |ρ|, ρ₁, ρ₂, …)`.
    pub fn pad(&self, total: u64) -> Result<Self> {
        let size = self.size();
        if total < size || total - size < self.first() {
            return Err(Error::precondition(format!(
                "cannot pad {self} to {total}: first row {} would be shorter than {}",
                total as i128 - size as i128,
                self.first()
            )));
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(total - size);
        parts.extend_from_slice(&self.0);
        Ok(Partition::from_sorted(parts))
    }

    /// `λ̄`: the partition with its first row removed.
    pub fn strip_first_row(&self) -> Result<Self> {
        if self.is_empty() {
            return Err(Error::precondition("cannot strip the first row of the empty partition"));
        }
        Ok(Partition(self.0[1..].to_vec()))
    }

    /// Number of columns of each length (`m_i` for column length `i`).
    pub fn column_multiplicities(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for w in 0..self.len() {
            let here = self.0[w];
            let below = self.part(w + 1);
            if here > below {
                out.insert(w as u64 + 1, here - below);
            }
        }
        out
    }

    /// Part multiplicities: part value → number of occurrences.
    pub fn multiplicities(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for &p in &self.0 {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// `(i, 1^j + ρ)`: add a column of `j` boxes to `ρ`, then a first row of `i` boxes.
    pub fn near_hook(i: u64, j: u64, rho: &Partition) -> Result<Self> {
        if (j as usize) < rho.len() {
            return Err(Error::precondition(format!(
                "near hook needs j = {j} >= length of {rho} = {}",
                rho.len()
            )));
        }
        Self::column_plus(j, rho).with_first_row(i)
    }

    /// `1^j + ρ` as a rowwise sum (no restriction on `j` versus the length of `ρ`).
    pub fn column_plus(j: u64, rho: &Partition) -> Partition {
        Partition::column(j).add(rho)
    }

    /// Prepends a first row of length `i`.
    pub fn with_first_row(&self, i: u64) -> Result<Self> {
        if i < self.first() || (i == 0 && !self.is_empty()) {
            return Err(Error::precondition(format!(
                "first row {i} is shorter than the next row {}",
                self.first()
            )));
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(i);
        parts.extend_from_slice(&self.0);
        Ok(Partition::from_sorted(parts))
    }

    /// Young-diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Parses a comma-separated list, `""` being the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let value: i64 = tok
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("non-numeric part {tok:?}")))?;
            if value <= 0 {
                return Err(Error::InvalidPartition(format!("part {value} is not positive")));
            }
            parts.push(value as u64);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{text:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Like [`Partition::parse`] but also accepts the rectangle shorthand
    /// `"n x d"` (n rows of length d).
    pub fn parse_shape(text: &str) -> Result<Self> {
        let t = text.trim();
        if let Some((rows, cols)) = t.split_once(['x', 'X', '×']) {
            let rows: u64 = rows
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad rectangle {t:?}")))?;
            let cols: u64 = cols
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad rectangle {t:?}")))?;
            if rows == 0 || cols == 0 {
                return Err(Error::InvalidPartition(format!("rectangle {t:?} has a zero side")));
            }
            return Ok(Partition::rectangle(rows, cols));
        }
        Partition::parse(t)
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse_shape(s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Rectangle with `rows` rows of length `cols`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RectangleShape {
    pub rows: u64,
    pub cols: u64,
}

impl RectangleShape {
    pub fn new(rows: u64, cols: u64) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::precondition(format!("rectangle {rows}x{cols} has a zero side")));
        }
        Ok(RectangleShape { rows, cols })
    }

    pub fn size(&self) -> u64 {
        self.rows * self.cols
    }

    pub fn to_partition(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols)
    }

    pub fn transpose(&self) -> Self {
        RectangleShape { rows: self.cols, cols: self.rows }
    }
}

impl fmt::Display for RectangleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// Arguments of a Kronecker coefficient `g(λ, μ, ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KroneckerTriple {
    pub lam: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl KroneckerTriple {
    pub fn new(lam: Partition, mu: Partition, nu: Partition) -> Result<Self> {
        let t = KroneckerTriple { lam, mu, nu };
        t.check_sizes()?;
        Ok(t)
    }

    /// `(ρ(N), rect, rect)` where `N` is the rectangle size.
    pub fn rectangular(rho: &Partition, rect: RectangleShape) -> Result<Self> {
        let r = rect.to_partition();
        Ok(KroneckerTriple { lam: rho.pad(rect.size())?, mu: r.clone(), nu: r })
    }

    pub fn check_sizes(&self) -> Result<()> {
        let (a, b, c) = (self.lam.size(), self.mu.size(), self.nu.size());
        if a != b || b != c {
            return Err(Error::SizeMismatch(format!(
                "triple {self} has sizes {a}, {b}, {c}"
            )));
        }
        Ok(())
    }

    pub fn size(&self) -> u64 {
        self.lam.size()
    }

    pub fn add(&self, other: &KroneckerTriple) -> Self {
        KroneckerTriple {
            lam: self.lam.add(&other.lam),
            mu: self.mu.add(&other.mu),
            nu: self.nu.add(&other.nu),
        }
    }

    pub fn as_array(&self) -> [&Partition; 3] {
        [&self.lam, &self.mu, &self.nu]
    }
}

impl fmt::Display for KroneckerTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.lam, self.mu, self.nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(Partition::parse("6,6,3,2,1,1").unwrap(), p(&[6, 6, 3, 2, 1, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("3,a").is_err());
        assert!(Partition::parse("3,0").is_err());
        assert!(Partition::parse("3,-1").is_err());
    }

    #[test]
    fn rectangle_shorthand() {
        assert_eq!(Partition::parse_shape("6x3").unwrap(), Partition::rectangle(6, 3));
        assert_eq!(Partition::parse_shape("2 x 4").unwrap(), p(&[4, 4]));
        assert!(Partition::parse_shape("0x4").is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[6, 6, 3, 2, 1, 1]).transpose(), p(&[6, 4, 3, 2, 2, 2]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[3]).transpose(), p(&[1, 1, 1]));
    }

    #[test]
    fn add_and_scale() {
        assert_eq!(p(&[2, 1]).add(&p(&[2, 1])), p(&[4, 2]));
        assert_eq!(p(&[3, 1]).add(&Partition::empty()), p(&[3, 1]));
        assert_eq!(p(&[2, 2]).add(&p(&[3])), p(&[5, 2]));
        assert_eq!(Partition::rectangle(6, 6).scale(3), Partition::rectangle(6, 18));
        assert_eq!(p(&[2, 1]).scale(0), Partition::empty());
        assert_eq!(p(&[3, 1]).scale(2), p(&[6, 2]));
    }

    #[test]
    fn pad_and_strip() {
        assert_eq!(p(&[1]).pad(4).unwrap(), p(&[3, 1]));
        assert_eq!(Partition::empty().pad(5).unwrap(), p(&[5]));
        assert!(p(&[2, 2, 1, 1, 1, 1, 1]).pad(9).is_err());
        assert_eq!(p(&[3, 1]).strip_first_row().unwrap(), p(&[1]));
        assert_eq!(p(&[5]).strip_first_row().unwrap(), Partition::empty());
        assert_eq!(p(&[6, 6, 3, 2, 1, 1]).strip_first_row().unwrap(), p(&[6, 3, 2, 1, 1]));
        assert!(Partition::empty().strip_first_row().is_err());
    }

    #[test]
    fn column_multiplicities_examples() {
        let m = p(&[3, 1]).column_multiplicities();
        assert_eq!(m, BTreeMap::from([(1, 2), (2, 1)]));
        assert!(Partition::empty().column_multiplicities().is_empty());
        // the columns of (6,4,3,2,2,2) are the rows of (6,6,3,2,1,1)
        let m = p(&[6, 4, 3, 2, 2, 2]).column_multiplicities();
        assert_eq!(m, BTreeMap::from([(6, 2), (3, 1), (2, 1), (1, 2)]));
        assert_eq!(m.iter().map(|(i, c)| i * c).sum::<u64>(), 19);
        assert_eq!(m, p(&[6, 6, 3, 2, 1, 1]).multiplicities());
    }

    #[test]
    fn near_hook_examples() {
        assert_eq!(Partition::near_hook(5, 3, &Partition::empty()).unwrap(), p(&[5, 1, 1, 1]));
        assert_eq!(Partition::near_hook(4, 2, &p(&[1])).unwrap(), p(&[4, 2, 1]));
        assert!(Partition::near_hook(3, 1, &p(&[2, 1])).is_err());
        assert!(Partition::near_hook(1, 2, &p(&[1])).is_err());
    }

    #[test]
    fn self_conjugate_examples() {
        assert!(p(&[2, 1]).is_self_conjugate());
        assert!(!p(&[3]).is_self_conjugate());
        assert!(p(&[4, 2, 1, 1]).is_self_conjugate());
        assert!(Partition::empty().is_self_conjugate());
    }

    #[test]
    fn triple_sizes() {
        assert!(KroneckerTriple::new(p(&[2, 1]), p(&[3]), p(&[2])).is_err());
        let t = KroneckerTriple::rectangular(&p(&[1]), RectangleShape::new(2, 2).unwrap()).unwrap();
        assert_eq!(t.lam, p(&[3, 1]));
    }

    #[test]
    fn serde_validates() {
        let ok: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(ok, p(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
