use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition, stored as its weakly decreasing list of positive parts.
///
/// The ordering sorts by size first and then reverse-lexicographically, so that
/// for a fixed `n` the canonical order starts at `(n)` and ends at `(1^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain { op: "partition", detail: format!("{parts:?} has a zero part") });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain {
                op: "partition",
                detail: format!("{parts:?} is not weakly decreasing"),
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary positive parts, sorting them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn single_row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    pub fn single_column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook shape `(a, 1^b)`; `a` may be zero, in which case the result is `(1^b)`.
    pub fn hook(a: usize, b: usize) -> Self {
        let mut parts = vec![a];
        parts.extend(std::iter::repeat(1).take(b));
        Self::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `w(λ) = |λ| − λ₁`.
    pub fn weight(&self) -> usize {
        self.size() - self.first()
    }

    /// The partition with the first row removed.
    pub fn tail(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }

    /// `λ[k] = (k − |λ|, λ)`, defined when `k ≥ λ₁ + |λ|`.
    pub fn padded(&self, k: usize) -> Option<Partition> {
        let n = self.size();
        if k < self.first() + n {
            return None;
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(k - n);
        parts.extend_from_slice(&self.parts);
        parts.retain(|&p| p > 0);
        Some(Partition { parts })
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Dominance order: `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicity of each part size: `m[i]` = number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated positive integers, optionally wrapped in parentheses.
    /// The empty string (or `()`) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::Domain {
                    op: "partition",
                    detail: format!("'{t}' is not a positive integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in canonical (reverse-lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![p(&[1])]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn canonical_order_is_sorted_order() {
        for n in 0..8 {
            let ps = partitions_of(n);
            let mut sorted = ps.clone();
            sorted.sort();
            assert_eq!(ps, sorted);
        }
    }

    #[test]
    fn padding_and_weight() {
        let lam = p(&[2, 1]);
        assert_eq!(lam.padded(5), Some(p(&[2, 2, 1])));
        assert_eq!(lam.padded(4), None);
        assert_eq!(lam.padded(7).unwrap().weight(), 3);
        assert_eq!(Partition::empty().padded(3), Some(p(&[3])));
        assert_eq!(p(&[3, 1]).weight(), 1);
        assert_eq!(p(&[3, 1]).tail(), p(&[1]));
    }

    #[test]
    fn parsing() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("(3, 1, 1)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 1]).to_string(), "(2,1)");
    }

    #[test]
    fn conjugate_and_dominance() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(!p(&[3, 3]).dominates(&p(&[4, 1, 1])));
    }
}
