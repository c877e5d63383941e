//! Finite combinatorics of FI: injections between initial segments, standard cubes
//! and the posets of partial bijections.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::symrep::Partition;

/// An injection `{0..source_size-1} → {0..target_size-1}`, stored as its value sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Injection {
    target_size: usize,
    values: Vec<usize>,
}

impl Injection {
    pub fn new(values: Vec<usize>, target_size: usize) -> Result<Self> {
        let mut seen = vec![false; target_size];
        for &v in &values {
            if v >= target_size || seen[v] {
                return Err(Error::Domain {
                    op: "injection",
                    detail: format!("{values:?} is not an injection into {target_size}"),
                });
            }
            seen[v] = true;
        }
        Ok(Injection { target_size, values })
    }

    pub(crate) fn new_unchecked(values: Vec<usize>, target_size: usize) -> Self {
        debug_assert!(Injection::new(values.clone(), target_size).is_ok());
        Injection { target_size, values }
    }

    pub fn identity(n: usize) -> Self {
        Injection { target_size: n, values: (0..n).collect() }
    }

    /// The order-preserving inclusion `n → k` onto `{0..n-1}`.
    pub fn standard(n: usize, k: usize) -> Result<Self> {
        if n > k {
            return Err(Error::SizeMismatch { op: "standard_inclusion", detail: format!("{n} > {k}") });
        }
        Ok(Injection { target_size: k, values: (0..n).collect() })
    }

    pub fn source_size(&self) -> usize {
        self.values.len()
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_permutation(&self) -> bool {
        self.source_size() == self.target_size
    }

    pub fn is_standard(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Inverse of a permutation.
    pub fn inverse(&self) -> Option<Injection> {
        if !self.is_permutation() {
            return None;
        }
        let mut inv = vec![0; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v] = i;
        }
        Some(Injection { target_size: self.target_size, values: inv })
    }

    /// Sign of a permutation (by inversion count).
    pub fn sign(&self) -> i32 {
        let v = &self.values;
        let mut inversions = 0usize;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle type of a permutation.
    pub fn cycle_type(&self) -> Partition {
        let n = self.values.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.values[i];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    /// Evaluates a word `[i₁, …, i_l]` in the adjacent transpositions `s_i = (i-1 i)` of
    /// `S_n` as the product `s_{i₁} ∘ ⋯ ∘ s_{i_l}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut values: Vec<usize> = (0..n).collect();
        // values = s_{i1} ∘ … ∘ s_{il}; postcompose one letter at a time from the left end.
        for &i in word.iter().rev() {
            if i == 0 || i >= n {
                return Err(Error::Domain { op: "from_word", detail: format!("generator s_{i} not in S_{n}") });
            }
            for v in values.iter_mut() {
                if *v == i - 1 {
                    *v = i;
                } else if *v == i {
                    *v = i - 1;
                }
            }
        }
        Ok(Injection { target_size: n, values })
    }

    /// A reduced word for a permutation, inverse to [`Injection::from_word`].
    pub fn word(&self) -> Vec<usize> {
        assert!(self.is_permutation(), "word of a non-permutation");
        let mut p = self.values.clone();
        let mut letters = Vec::new();
        loop {
            match (0..p.len().saturating_sub(1)).find(|&j| p[j] > p[j + 1]) {
                Some(j) => {
                    p.swap(j, j + 1);
                    letters.push(j + 1);
                }
                None => break,
            }
        }
        letters.reverse();
        letters
    }

    /// `self ⊔ id_m`: extends by the identity on `m` further points.
    pub fn extend_identity(&self, m: usize) -> Injection {
        let mut values = self.values.clone();
        let t = self.target_size;
        values.extend((0..m).map(|j| t + j));
        Injection { target_size: t + m, values }
    }
}

/// All injections `n → k` in lexicographic order of value sequences.
pub fn enumerate_injections(n: usize, k: usize) -> Vec<Injection> {
    fn go(n: usize, k: usize, used: &mut Vec<bool>, prefix: &mut Vec<usize>, out: &mut Vec<Injection>) {
        if prefix.len() == n {
            out.push(Injection { target_size: k, values: prefix.clone() });
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(n, k, used, prefix, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    if n <= k {
        go(n, k, &mut vec![false; k], &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// `k!/(k-n)!`, the size of `FI(n, k)`.
pub fn falling_factorial(k: usize, n: usize) -> u128 {
    if n > k {
        return 0;
    }
    ((k - n + 1)..=k).map(|x| x as u128).product()
}

pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `g ∘ f`.
pub fn compose(g: &Injection, f: &Injection) -> Result<Injection> {
    if f.target_size != g.source_size() {
        return Err(Error::SizeMismatch {
            op: "compose",
            detail: format!("f targets {} but g has source {}", f.target_size, g.source_size()),
        });
    }
    Ok(Injection { target_size: g.target_size, values: f.values.iter().map(|&i| g.values[i]).collect() })
}

/// Factors `f : n → k` as `σ ∘ ι` with `ι` the standard inclusion and `σ` the permutation
/// of `k` that agrees with `f` on `{0..n-1}` and sends `{n..k-1}` increasingly onto the
/// complement of the image. Returns `(σ, k − n)`.
pub fn factor_injection(f: &Injection) -> (Injection, usize) {
    let k = f.target_size;
    let mut in_image = vec![false; k];
    for &v in &f.values {
        in_image[v] = true;
    }
    let mut values = f.values.clone();
    values.extend((0..k).filter(|&v| !in_image[v]));
    (Injection { target_size: k, values }, k - f.source_size())
}

/// A standard cube `base ⊆ T ⊆ base ∪ extension`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetCube {
    pub base: Vec<usize>,
    pub extension: Vec<usize>,
}

impl SubsetCube {
    pub fn dimension(&self) -> usize {
        self.extension.len()
    }

    /// The vertex selected by a bitmask over `extension`, as a sorted set.
    pub fn vertex(&self, mask: usize) -> Vec<usize> {
        let mut v = self.base.clone();
        v.extend(self.extension.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, &x)| x));
        v.sort_unstable();
        v
    }
}

/// One representative standard cube of dimension `cube_dim` per base size that fits in
/// `{0..window-1}`: base `{0..b-1}`, extension `{b..b+cube_dim-1}`.
pub fn standard_cubes(window: usize, cube_dim: usize) -> Vec<SubsetCube> {
    assert!(cube_dim >= 1, "standard_cubes: cube_dim must be positive");
    if window < cube_dim {
        return Vec::new();
    }
    (0..=window - cube_dim)
        .map(|b| SubsetCube { base: (0..b).collect(), extension: (b..b + cube_dim).collect() })
        .collect()
}

/// Order-preserving injection from the sorted set `sub` into the sorted superset `sup`,
/// as positions.
pub fn subset_inclusion(sub: &[usize], sup: &[usize]) -> Injection {
    let pos: HashMap<usize, usize> = sup.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    Injection::new_unchecked(sub.iter().map(|x| pos[x]).collect(), sup.len())
}

/// A nonempty partial bijection `φ : S → T` with `S ⊆ n`, `T ⊆ k`; `phi[p]` is the image of
/// the `p`-th smallest element of `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialBijection {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub phi: Vec<usize>,
}

impl PartialBijection {
    pub fn rank(&self) -> usize {
        self.source.len()
    }

    /// The inverse bijection `T → S`.
    pub fn swap(&self) -> PartialBijection {
        let mut pairs: Vec<(usize, usize)> = self.source.iter().zip(&self.phi).map(|(&s, &t)| (t, s)).collect();
        pairs.sort_unstable();
        PartialBijection {
            source: self.target.clone(),
            target: self.source.clone(),
            phi: pairs.into_iter().map(|(_, s)| s).collect(),
        }
    }

    /// `self ≤ other` in the restriction order.
    pub fn le(&self, other: &PartialBijection) -> bool {
        self.source.iter().zip(&self.phi).all(|(s, t)| {
            other.source.iter().position(|x| x == s).map(|p| other.phi[p] == *t).unwrap_or(false)
        })
    }

    fn key(&self) -> (usize, &[usize], &[usize], &[usize]) {
        (self.source.len(), &self.source, &self.target, &self.phi)
    }
}

/// The poset `P(n, k)` of nonempty partial bijections, with its cover relations.
///
/// Elements are sorted by rank and then lexicographically on `(S, T, φ)`, so every chain
/// is increasing in element index.
#[derive(Clone, Debug)]
pub struct PartialBijectionPoset {
    pub n: usize,
    pub k: usize,
    pub elements: Vec<PartialBijection>,
    /// `(lower, upper)` index pairs.
    pub cover_relations: Vec<(usize, usize)>,
}

impl PartialBijectionPoset {
    pub fn index_of(&self, e: &PartialBijection) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }

    /// Indices strictly above each element (transitive closure of the covers).
    pub fn upsets(&self) -> Vec<Vec<usize>> {
        let mut up_covers = vec![Vec::new(); self.elements.len()];
        for &(a, b) in &self.cover_relations {
            up_covers[a].push(b);
        }
        // covers go from rank r to r+1 and elements are rank-sorted: fill from the top
        let mut ups: Vec<Vec<usize>> = vec![Vec::new(); self.elements.len()];
        for i in (0..self.elements.len()).rev() {
            let mut acc: Vec<usize> = Vec::new();
            for &j in &up_covers[i] {
                acc.push(j);
                acc.extend_from_slice(&ups[j]);
            }
            acc.sort_unstable();
            acc.dedup();
            ups[i] = acc;
        }
        ups
    }
}

fn subsets_of_size(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < r - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// All `r`-element subsets of `{0..n-1}` in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    subsets_of_size(n, r)
}

pub fn build_poset(n: usize, k: usize) -> PartialBijectionPoset {
    let mut elements = Vec::new();
    for j in 1..=n.min(k) {
        let sources = subsets_of_size(n, j);
        let targets = subsets_of_size(k, j);
        let perms = enumerate_injections(j, j);
        for s in &sources {
            for t in &targets {
                for p in &perms {
                    elements.push(PartialBijection {
                        source: s.clone(),
                        target: t.clone(),
                        phi: p.values.iter().map(|&i| t[i]).collect(),
                    });
                }
            }
        }
    }
    elements.sort_by(|a, b| a.key().cmp(&b.key()));
    let index: HashMap<PartialBijection, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut cover_relations = Vec::new();
    for (upper, e) in elements.iter().enumerate() {
        if e.rank() < 2 {
            continue;
        }
        for drop in 0..e.rank() {
            let mut lower = e.clone();
            let t = lower.phi.remove(drop);
            lower.source.remove(drop);
            lower.target.retain(|&x| x != t);
            cover_relations.push((index[&lower], upper));
        }
    }
    cover_relations.sort_unstable();
    PartialBijectionPoset { n, k, elements, cover_relations }
}

/// A word in `s₁ … s_{n-1}` whose product has the given cycle type: consecutive blocks of
/// lengths `ℓ` become the cycles `s_{p+1} s_{p+2} ⋯ s_{p+ℓ-1}`.
pub fn conjugacy_class_word(cycle_type: &Partition) -> Vec<usize> {
    let mut word = Vec::new();
    let mut start = 0;
    for &len in cycle_type.parts() {
        word.extend(start + 1..start + len);
        start += len;
    }
    word
}
