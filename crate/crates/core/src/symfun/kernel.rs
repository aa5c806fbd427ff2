//! Class sums over all cycle types of `N` with simultaneous character
//! evaluation for a handful of fixed shapes.
//!
//! Cycle types are walked as a trie of their parts of size at least two, in
//! decreasing order. Every trie node carries, per shape, the signed multiset
//! of diagrams left after removing the border strips named by its prefix;
//! a node is also a class (pad with ones), whose character values come from
//! counting standard tableaux of those leftover diagrams. Subtrees where some
//! shape has no leftover diagram are pruned, since every class below has a
//! vanishing character there.

use rayon::prelude::*;

use super::character::{BetaSet, TableauxCounter};
use crate::error::{Error, Result};
use crate::partition::Partition;

type State = Vec<(u128, i128)>;

/// A conjugacy class seen by the kernel: `prefix` (parts ≥ 2, decreasing)
/// followed by `ones` fixed points.
#[derive(Debug)]
pub struct ClassView<'a> {
    pub prefix: &'a [u64],
    pub ones: u64,
}

impl ClassView<'_> {
    pub fn to_partition(&self) -> Partition {
        let mut parts = self.prefix.to_vec();
        parts.extend(std::iter::repeat_n(1, self.ones as usize));
        Partition::from_sorted(parts)
    }

    /// Multiplicities `(part, count)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &p in self.prefix {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        if self.ones > 0 {
            out.push((1, self.ones));
        }
        out
    }
}

/// Folds `visit` over every class of `N = |shapes[0]|` at which no shape's
/// character vanishes, passing the character values in shape order.
/// Returns the reduced accumulator and the number of classes visited.
pub fn class_fold<T, I, V, R>(shapes: &[Partition], identity: I, visit: V, reduce: R) -> Result<(T, u64)>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, &ClassView, &[i128]) -> Result<()> + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let n = shapes.first().map(|s| s.size()).unwrap_or(0);
    if let Some(bad) = shapes.iter().find(|s| s.size() != n) {
        return Err(Error::SizeMismatch(format!("class sum over shapes of sizes {n} and {}", bad.size())));
    }
    let mut root = Vec::with_capacity(shapes.len());
    for s in shapes {
        let b = BetaSet::from_partition(s)?;
        root.push(vec![(b.mask, 1i128)]);
    }
    let walker = Walker { visit: &visit };

    // Root class 1^N and the first-level leaves run serially; second-level
    // subtrees are the parallel work items.
    let mut acc = identity();
    let mut visited = 0u64;
    let mut counter = TableauxCounter::default();
    let mut tasks: Vec<(Vec<u64>, Vec<State>)> = Vec::new();
    walker.leaf(&[], n, &root, &mut acc, &mut counter, &mut visited)?;
    for r1 in (2..=n).rev() {
        let Some(s1) = step(&root, r1) else { continue };
        let rem1 = n - r1;
        walker.leaf(&[r1], rem1, &s1, &mut acc, &mut counter, &mut visited)?;
        for r2 in (2..=r1.min(rem1)).rev() {
            if let Some(s2) = step(&s1, r2) {
                tasks.push((vec![r1, r2], s2));
            }
        }
    }

    let (par_acc, par_visited) = tasks
        .into_par_iter()
        .map(|(mut prefix, states)| -> Result<(T, u64)> {
            let mut acc = identity();
            let mut visited = 0u64;
            let mut counter = TableauxCounter::default();
            let rem = n - prefix.iter().sum::<u64>();
            let max = *prefix.last().expect("depth two");
            walker.subtree(&mut prefix, rem, max, &states, &mut acc, &mut counter, &mut visited)?;
            Ok((acc, visited))
        })
        .try_reduce(|| (identity(), 0), |a, b| Ok((reduce(a.0, b.0), a.1 + b.1)))?;
    Ok((reduce(acc, par_acc), visited + par_visited))
}

struct Walker<'v, V> {
    visit: &'v V,
}

impl<V> Walker<'_, V> {
    fn leaf<T>(
        &self,
        prefix: &[u64],
        ones: u64,
        states: &[State],
        acc: &mut T,
        counter: &mut TableauxCounter,
        visited: &mut u64,
    ) -> Result<()>
    where
        V: Fn(&mut T, &ClassView, &[i128]) -> Result<()>,
    {
        let mut values = Vec::with_capacity(states.len());
        for st in states {
            let mut v: i128 = 0;
            for &(mask, c) in st {
                let beads = mask.count_ones();
                let f = counter.count(BetaSet { mask, beads })?;
                v = v.checked_add(c.checked_mul(f).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
            }
            if v == 0 {
                return Ok(());
            }
            values.push(v);
        }
        *visited += 1;
        (self.visit)(acc, &ClassView { prefix, ones }, &values)
    }

    #[allow(clippy::too_many_arguments)]
    fn subtree<T>(
        &self,
        prefix: &mut Vec<u64>,
        rem: u64,
        max: u64,
        states: &[State],
        acc: &mut T,
        counter: &mut TableauxCounter,
        visited: &mut u64,
    ) -> Result<()>
    where
        V: Fn(&mut T, &ClassView, &[i128]) -> Result<()>,
    {
        self.leaf(prefix, rem, states, acc, counter, visited)?;
        for r in (2..=max.min(rem)).rev() {
            if let Some(next) = step(states, r) {
                prefix.push(r);
                self.subtree(prefix, rem - r, r, &next, acc, counter, visited)?;
                prefix.pop();
            }
        }
        Ok(())
    }
}

/// Removes a border strip of size `r` from every diagram of every shape.
/// `None` when some shape is left with nothing.
fn step(states: &[State], r: u64) -> Option<Vec<State>> {
    let mut out = Vec::with_capacity(states.len());
    for st in states {
        let mut next: State = Vec::new();
        for &(mask, c) in st {
            let beads = mask.count_ones();
            BetaSet { mask, beads }.for_each_strip(r as u32, |b, sign| next.push((b.mask, c * sign as i128)));
        }
        next.sort_unstable_by_key(|e| e.0);
        let mut merged: State = Vec::with_capacity(next.len());
        for (m, c) in next {
            match merged.last_mut() {
                Some((pm, pc)) if *pm == m => *pc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|e| e.1 != 0);
        if merged.is_empty() {
            return None;
        }
        out.push(merged);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::super::character::character_uncached;
    use super::super::enumerate::partitions_of;
    use super::*;
    use std::collections::BTreeMap;
    use std::sync::Mutex;

    #[test]
    fn kernel_matches_direct_recursion() {
        for n in 0..=9u64 {
            for lam in partitions_of(n, None, None) {
                let seen = Mutex::new(BTreeMap::new());
                class_fold(
                    std::slice::from_ref(&lam),
                    || (),
                    |_, c, v| {
                        seen.lock().unwrap().insert(c.to_partition(), v[0]);
                        Ok(())
                    },
                    |_, _| (),
                )
                .unwrap();
                let seen = seen.into_inner().unwrap();
                for rho in partitions_of(n, None, None) {
                    let direct = character_uncached(&lam, &rho).unwrap();
                    assert_eq!(seen.get(&rho).copied().unwrap_or(0), direct, "{lam} at {rho}");
                }
            }
        }
    }
}
