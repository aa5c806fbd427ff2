//! Irreducible characters of the symmetric group by border-strip removal.
//!
//! Diagrams are encoded as bead positions (first-column hook lengths) packed
//! into a `u128`: removing a border strip of size `r` moves one bead from
//! position `p` to the empty position `p − r`, with sign `(−1)^h` where `h`
//! is the number of beads strictly between the two positions.

use std::collections::HashMap;
use std::io::{Read, Write};
use std::path::Path;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest bead position the 128-bit encoding can hold.
pub const MAX_BEAD: u64 = 127;

/// Bead encoding of a diagram with a fixed number of beads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaSet {
    pub mask: u128,
    pub beads: u32,
}

impl BetaSet {
    pub fn from_partition(lam: &Partition) -> Result<Self> {
        let len = lam.len() as u64;
        if lam.first() + len > MAX_BEAD + 1 {
            return Err(Error::precondition(format!(
                "{lam} is too large for the 128-bit character kernel"
            )));
        }
        let mut mask = 0u128;
        for (i, &p) in lam.parts().iter().enumerate() {
            mask |= 1u128 << (p + len - 1 - i as u64);
        }
        Ok(BetaSet { mask, beads: len as u32 })
    }

    pub fn to_partition(self) -> Partition {
        let mut parts = Vec::with_capacity(self.beads as usize);
        let mut below = 0u64;
        for pos in 0..128u64 {
            if self.mask >> pos & 1 == 1 {
                parts.push(pos - below);
                below += 1;
            }
        }
        parts.reverse();
        Partition::from_sorted(parts)
    }

    /// Number of boxes.
    pub fn size(self) -> u64 {
        let mut total = 0u64;
        let mut below = 0u64;
        let mut m = self.mask;
        while m != 0 {
            let pos = m.trailing_zeros() as u64;
            total += pos - below;
            below += 1;
            m &= m - 1;
        }
        total
    }

    /// The empty diagram with this many beads.
    pub fn is_empty_diagram(self) -> bool {
        self.mask == empty_mask(self.beads)
    }

    /// Calls `f(next, sign)` for every border strip of size `r`.
    #[inline]
    pub fn for_each_strip(self, r: u32, mut f: impl FnMut(BetaSet, i32)) {
        if r == 0 || r >= 128 {
            return;
        }
        let mut m = self.mask >> r;
        // candidate bead positions p >= r
        while m != 0 {
            let low = m.trailing_zeros();
            m &= m - 1;
            let p = low + r;
            let q = low;
            if self.mask >> q & 1 == 1 {
                continue;
            }
            let between = if p - q > 1 {
                (self.mask >> (q + 1)) & ((1u128 << (p - q - 1)) - 1)
            } else {
                0
            };
            let sign = if between.count_ones() % 2 == 0 { 1 } else { -1 };
            let next = self.mask ^ (1u128 << p) ^ (1u128 << q);
            f(BetaSet { mask: next, beads: self.beads }, sign);
        }
    }
}

fn empty_mask(beads: u32) -> u128 {
    if beads == 0 {
        0
    } else if beads >= 128 {
        u128::MAX
    } else {
        (1u128 << beads) - 1
    }
}

/// Number of standard Young tableaux, memoized over bead masks.
#[derive(Default)]
pub struct TableauxCounter {
    memo: HashMap<u128, i128>,
}

impl TableauxCounter {
    pub fn count(&mut self, b: BetaSet) -> Result<i128> {
        if b.is_empty_diagram() {
            return Ok(1);
        }
        if let Some(&v) = self.memo.get(&b.mask) {
            return Ok(v);
        }
        let mut children = Vec::new();
        b.for_each_strip(1, |next, _| children.push(next));
        let mut total: i128 = 0;
        for c in children {
            total = total.checked_add(self.count(c)?).ok_or(Error::Overflow)?;
        }
        self.memo.insert(b.mask, total);
        Ok(total)
    }
}

/// Dimension of the irreducible representation `[λ]` by the hook-length formula.
pub fn dimension(lam: &Partition) -> BigUint {
    let n = lam.size();
    let conj = lam.transpose();
    let mut num = BigUint::one();
    for k in 2..=n {
        num *= k;
    }
    let mut den = BigUint::one();
    for (i, &row) in lam.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j as usize) - i as u64 - 1;
            den *= arm + leg + 1;
        }
    }
    num / den
}

fn check_sizes(lam: &Partition, rho: &Partition) -> Result<()> {
    if lam.size() != rho.size() {
        return Err(Error::SizeMismatch(format!(
            "character of {lam} evaluated on class {rho} of a different size"
        )));
    }
    Ok(())
}

/// χ_λ(ρ) by plain border-strip recursion: no memo, no shortcuts.
/// Exponential; intended as the reference path for small inputs.
pub fn character_uncached(lam: &Partition, rho: &Partition) -> Result<i128> {
    check_sizes(lam, rho)?;
    fn go(b: BetaSet, parts: &[u64]) -> Result<i128> {
        let Some((&r, rest)) = parts.split_first() else {
            return Ok(if b.is_empty_diagram() { 1 } else { 0 });
        };
        let mut kids = Vec::new();
        b.for_each_strip(r as u32, |n, s| kids.push((n, s)));
        let mut total: i128 = 0;
        for (n, s) in kids {
            let v = go(n, rest)?;
            total = total.checked_add(s as i128 * v).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }
    go(BetaSet::from_partition(lam)?, rho.parts())
}

/// Memo of character values keyed by (remaining diagram, remaining class parts).
///
/// Concurrent readers, serialized writers. Eviction is whole-cache only.
#[derive(Default)]
pub struct CharacterCache {
    table: RwLock<HashMap<(Partition, Partition), i128>>,
}

const CACHE_MAGIC: &[u8; 5] = b"KFCH1";

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.table.write().expect("cache lock").clear();
    }

    /// χ_λ(ρ): class parts removed in decreasing order; a trailing run of
    /// ones is finished with the hook-length formula.
    pub fn character(&self, lam: &Partition, rho: &Partition) -> Result<i128> {
        check_sizes(lam, rho)?;
        self.eval(lam, rho.parts())
    }

    fn eval(&self, lam: &Partition, parts: &[u64]) -> Result<i128> {
        if parts.iter().all(|&p| p == 1) {
            return dimension(lam).to_i128().ok_or(Error::Overflow);
        }
        let key = (lam.clone(), Partition::from_sorted(parts.to_vec()));
        if let Some(&v) = self.table.read().expect("cache lock").get(&key) {
            return Ok(v);
        }
        let b = BetaSet::from_partition(lam)?;
        let mut kids = Vec::new();
        b.for_each_strip(parts[0] as u32, |n, s| kids.push((n, s)));
        let mut total: i128 = 0;
        for (n, s) in kids {
            let v = self.eval(&n.to_partition(), &parts[1..])?;
            total = total.checked_add(s as i128 * v).ok_or(Error::Overflow)?;
        }
        self.table.write().expect("cache lock").insert(key, total);
        Ok(total)
    }

    /// Binary dump: magic `KFCH1`, then a little-endian `u64` entry count, then
    /// per entry the diagram and class as (`u32` length, `u32` parts…) followed
    /// by the value as a little-endian `i128`. Entries are sorted, so dumps of
    /// equal caches are byte-identical.
    pub fn write_to(&self, mut w: impl Write) -> Result<()> {
        let table = self.table.read().expect("cache lock");
        let mut entries: Vec<_> = table.iter().collect();
        entries.sort();
        w.write_all(CACHE_MAGIC)?;
        w.write_all(&(entries.len() as u64).to_le_bytes())?;
        for ((lam, rho), v) in entries {
            for p in [lam, rho] {
                w.write_all(&(p.len() as u32).to_le_bytes())?;
                for &x in p.parts() {
                    w.write_all(&(x as u32).to_le_bytes())?;
                }
            }
            w.write_all(&v.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_from(mut r: impl Read) -> Result<Self> {
        let mut magic = [0u8; 5];
        r.read_exact(&mut magic)?;
        if &magic != CACHE_MAGIC {
            return Err(Error::Malformed("character cache has the wrong magic bytes".into()));
        }
        let mut u64buf = [0u8; 8];
        r.read_exact(&mut u64buf)?;
        let count = u64::from_le_bytes(u64buf);
        let mut table = HashMap::with_capacity(count.min(1 << 20) as usize);
        let read_partition = |r: &mut dyn Read| -> Result<Partition> {
            let mut b4 = [0u8; 4];
            r.read_exact(&mut b4)?;
            let len = u32::from_le_bytes(b4) as usize;
            let mut parts = Vec::with_capacity(len);
            for _ in 0..len {
                r.read_exact(&mut b4)?;
                parts.push(u32::from_le_bytes(b4) as u64);
            }
            Partition::new(parts)
        };
        for _ in 0..count {
            let lam = read_partition(&mut r)?;
            let rho = read_partition(&mut r)?;
            let mut vbuf = [0u8; 16];
            r.read_exact(&mut vbuf)?;
            table.insert((lam, rho), i128::from_le_bytes(vbuf));
        }
        Ok(CharacterCache { table: RwLock::new(table) })
    }

    /// Copies every entry of `other` into this cache.
    pub fn absorb(&self, other: CharacterCache) {
        let other = other.table.into_inner().expect("cache lock");
        self.table.write().expect("cache lock").extend(other);
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let f = std::fs::File::create(path)?;
        self.write_to(std::io::BufWriter::new(f))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Self::read_from(std::io::BufReader::new(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn beta_roundtrip() {
        for lam in [p(&[]), p(&[1]), p(&[3, 1]), p(&[6, 6, 3, 2, 1, 1])] {
            let b = BetaSet::from_partition(&lam).unwrap();
            assert_eq!(b.to_partition(), lam);
            assert_eq!(b.size(), lam.size());
        }
    }

    #[test]
    fn small_characters() {
        let cache = CharacterCache::new();
        assert_eq!(cache.character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(cache.character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(cache.character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        for rho in [p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])] {
            assert_eq!(cache.character(&p(&[4]), &rho).unwrap(), 1);
            let sign = if (4 - rho.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(cache.character(&p(&[1, 1, 1, 1]), &rho).unwrap(), sign);
        }
    }

    #[test]
    fn dimension_by_hooks() {
        assert_eq!(dimension(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(dimension(&p(&[3, 3])), BigUint::from(5u32));
        let mut t = TableauxCounter::default();
        let b = BetaSet::from_partition(&p(&[4, 3, 1])).unwrap();
        assert_eq!(BigUint::from(t.count(b).unwrap() as u64), dimension(&p(&[4, 3, 1])));
    }

    #[test]
    fn size_mismatch() {
        assert!(CharacterCache::new().character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn dump_roundtrip() {
        let cache = CharacterCache::new();
        cache.character(&p(&[4, 2, 1]), &p(&[3, 2, 2])).unwrap();
        let mut buf = Vec::new();
        cache.write_to(&mut buf).unwrap();
        assert_eq!(&buf[..5], b"KFCH1");
        let back = CharacterCache::read_from(&buf[..]).unwrap();
        assert_eq!(back.len(), cache.len());
        let mut buf2 = Vec::new();
        back.write_to(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
        assert!(CharacterCache::read_from(&b"KFCH0\0"[..]).is_err());
    }
}
