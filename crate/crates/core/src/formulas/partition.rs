//! Integer partitions and compositions as streams.

use alloc::vec;
use alloc::vec::Vec;

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `m[i - 1]` is the number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0)];
        for &p in &self.parts {
            m[p - 1] += 1;
        }
        m
    }
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Partitions {
    Partitions {
        current: if n == 0 { Some(Vec::new()) } else { Some(vec![n]) },
    }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if let Some(i) = next.iter().rposition(|&p| p > 1) {
            // everything after i is a 1
            let mut rest = next.len() - i;
            next.truncate(i + 1);
            next[i] -= 1;
            let cap = next[i];
            while rest > 0 {
                let part = cap.min(rest);
                next.push(part);
                rest -= part;
            }
            self.current = Some(next);
        }
        Some(Partition { parts: out })
    }
}

/// Compositions of `n` into exactly `parts` positive parts, lexicographic.
pub fn compositions(n: usize, parts: usize) -> Compositions {
    let current = match (n, parts) {
        (0, 0) => Some(Vec::new()),
        (_, 0) => None,
        _ if parts > n => None,
        _ => {
            let mut first = vec![1; parts];
            first[parts - 1] = n - parts + 1;
            Some(first)
        }
    };
    Compositions { current }
}

#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let p = out.len();
        // rightmost j whose tail can spare one unit
        let mut tail = 0;
        for j in (0..p.saturating_sub(1)).rev() {
            tail += out[j + 1];
            if tail > p - 1 - j {
                let mut next = out.clone();
                next[j] += 1;
                for x in &mut next[j + 1..p - 1] {
                    *x = 1;
                }
                next[p - 1] = tail - 1 - (p - 2 - j);
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}
