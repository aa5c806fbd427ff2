use crate::partition::Partition;

/// Partitions of `n`, optionally bounded in largest part and length, in
/// reverse lexicographic order: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
///
/// The order is part of the public contract; outputs streamed from it are
/// reproducible.
pub fn partitions_of(n: u64, max_part: Option<u64>, max_length: Option<usize>) -> Partitions {
    let max_part = max_part.unwrap_or(n).min(n);
    let max_length = max_length.unwrap_or(usize::MAX);
    let first = greedy(n, max_part).filter(|p| p.len() <= max_length);
    Partitions { current: first, max_length, started: false }
}

/// Number of partitions of `n` (Euler's pentagonal recurrence).
pub fn partition_count(n: u64) -> u128 {
    let n = n as usize;
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut total: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[i - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                total += sign * p[i - g2] as i128;
            }
        }
        p[i] = total as u128;
    }
    p[n]
}

fn greedy(n: u64, max_part: u64) -> Option<Vec<u64>> {
    if n == 0 {
        return Some(Vec::new());
    }
    if max_part == 0 {
        return None;
    }
    let mut parts = vec![max_part; (n / max_part) as usize];
    if !n.is_multiple_of(max_part) {
        parts.push(n % max_part);
    }
    Some(parts)
}

pub struct Partitions {
    current: Option<Vec<u64>>,
    max_length: usize,
    started: bool,
}

impl Partitions {
    fn advance(&mut self) {
        let Some(cur) = self.current.take() else { return };
        let mut suffix: u64 = 0;
        for i in (0..cur.len()).rev() {
            suffix += cur[i];
            if cur[i] <= 1 {
                continue;
            }
            let v = cur[i] - 1;
            let rest = suffix - v;
            let needed = rest.div_ceil(v) as usize;
            if i + 1 + needed > self.max_length {
                continue;
            }
            let mut next = cur[..i].to_vec();
            next.push(v);
            next.extend(greedy(rest, v).unwrap_or_default());
            self.current = Some(next);
            return;
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.started {
            self.advance();
        }
        self.started = true;
        self.current.as_ref().map(|p| Partition::from_sorted(p.clone()))
    }
}
