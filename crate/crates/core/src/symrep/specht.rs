use std::collections::{BTreeMap, HashMap};

use super::partition::Partition;
use super::tableau::{standard_tableaux, Tableau};
use crate::exactla::{rat, RationalMatrix};

/// Young's natural representation: the matrices of `s_1, …, s_{n−1}` on the standard
/// polytabloid basis of `V(λ)`. Entries are integers.
///
/// `s_i` swaps the entries `i − 1` and `i`; the basis is ordered as in
/// [`standard_tableaux`].
pub fn specht_matrices(lambda: &Partition) -> Vec<RationalMatrix> {
    let n = lambda.size();
    let mut s = Straightener::new(lambda);
    let f = s.basis.len();
    (1..n)
        .map(|i| {
            let mut m = RationalMatrix::zeros(f, f);
            for j in 0..f {
                let t = swap_entries(&s.basis[j], i - 1, i);
                for (k, c) in s.straighten(&t) {
                    m.set(k, j, rat(c));
                }
            }
            m
        })
        .collect()
}

fn swap_entries(t: &Tableau, a: usize, b: usize) -> Tableau {
    t.iter()
        .map(|row| row.iter().map(|&x| if x == a { b } else if x == b { a } else { x }).collect())
        .collect()
}

fn column(t: &Tableau, c: usize) -> Vec<usize> {
    t.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
}

fn permutation_sign(before: &[usize], after: &[usize]) -> i64 {
    let pos: HashMap<usize, usize> = before.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let idx: Vec<usize> = after.iter().map(|v| pos[v]).collect();
    let mut inversions = 0;
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            if idx[i] > idx[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 { 1 } else { -1 }
}

struct Straightener {
    basis: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    memo: HashMap<Tableau, BTreeMap<usize, i64>>,
}

impl Straightener {
    fn new(lambda: &Partition) -> Self {
        let basis = standard_tableaux(lambda);
        let index = basis.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Straightener { basis, index, memo: HashMap::new() }
    }

    /// Coordinates of the polytabloid `e_T` in the standard basis.
    fn straighten(&mut self, t: &Tableau) -> BTreeMap<usize, i64> {
        if let Some(v) = self.memo.get(t) {
            return v.clone();
        }
        let (sorted, sign) = sort_columns(t);
        let result = if let Some(&i) = self.index.get(&sorted) {
            BTreeMap::from([(i, sign)])
        } else {
            let mut acc = BTreeMap::new();
            for (term, s) in garnir_terms(&sorted) {
                for (k, c) in self.straighten(&term) {
                    *acc.entry(k).or_insert(0) -= sign * s * c;
                }
            }
            acc.retain(|_, c| *c != 0);
            acc
        };
        self.memo.insert(t.clone(), result.clone());
        result
    }
}

/// Sorts every column increasingly; `e_T` changes by the sign of the column permutation.
fn sort_columns(t: &Tableau) -> (Tableau, i64) {
    let mut out = t.clone();
    let mut sign = 1;
    let width = t.first().map_or(0, Vec::len);
    for c in 0..width {
        let col = column(t, c);
        let mut sorted = col.clone();
        sorted.sort_unstable();
        sign *= permutation_sign(&col, &sorted);
        for (r, v) in sorted.into_iter().enumerate() {
            out[r][c] = v;
        }
    }
    (out, sign)
}

/// For a column-strict `T` with a row descent `T[r][c] > T[r][c+1]`, the non-identity terms
/// `(π T, sgn π)` of the Garnir relation `Σ_π sgn(π) e_{πT} = 0`.
fn garnir_terms(t: &Tableau) -> Vec<(Tableau, i64)> {
    let (r, c) = t
        .iter()
        .enumerate()
        .find_map(|(r, row)| row.windows(2).position(|w| w[0] > w[1]).map(|c| (r, c)))
        .expect("column-strict but not standard tableau has a row descent");
    let a_pos: Vec<(usize, usize)> = (r..t.len()).take_while(|&i| t[i].len() > c).map(|i| (i, c)).collect();
    let b_pos: Vec<(usize, usize)> = (0..=r).map(|i| (i, c + 1)).collect();
    let before: Vec<usize> = a_pos.iter().chain(&b_pos).map(|&(i, j)| t[i][j]).collect();
    let mut values = before.clone();
    values.sort_unstable();
    let mut out = Vec::new();
    for chosen in crate::combinat::combinations(values.len(), b_pos.len()) {
        let b_vals: Vec<usize> = chosen.iter().map(|&i| values[i]).collect();
        let a_vals: Vec<usize> = values.iter().copied().filter(|v| !b_vals.contains(v)).collect();
        let after: Vec<usize> = a_vals.iter().chain(&b_vals).copied().collect();
        if after == before {
            continue;
        }
        let mut u = t.clone();
        for (&(i, j), &v) in a_pos.iter().chain(&b_pos).zip(&after) {
            u[i][j] = v;
        }
        out.push((u, permutation_sign(&before, &after)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::conjugacy_class_word;
    use crate::symrep::{irreducible_character, partitions_of, specht_dimension};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    type Tabloid = Vec<Vec<usize>>;

    fn tabloid_of(t: &Tableau) -> Tabloid {
        t.iter()
            .map(|r| {
                let mut r = r.clone();
                r.sort_unstable();
                r
            })
            .collect()
    }

    fn column_permutations(t: &Tableau) -> Vec<(Tableau, i64)> {
        let width = t.first().map_or(0, Vec::len);
        let mut acc = vec![(t.clone(), 1i64)];
        for c in 0..width {
            let col = column(t, c);
            let mut next = Vec::new();
            for (u, s) in &acc {
                for perm in permutations(&col) {
                    let mut v = u.clone();
                    for (r, &x) in perm.iter().enumerate() {
                        v[r][c] = x;
                    }
                    next.push((v, s * permutation_sign(&col, &perm)));
                }
            }
            acc = next;
        }
        acc
    }

    fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
        if xs.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 0..xs.len() {
            let mut rest = xs.to_vec();
            let x = rest.remove(i);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }

    fn polytabloid(t: &Tableau) -> BTreeMap<Tabloid, i64> {
        let mut v = BTreeMap::new();
        for (u, s) in column_permutations(t) {
            *v.entry(tabloid_of(&u)).or_insert(0) += s;
        }
        v.retain(|_, c| *c != 0);
        v
    }

    #[test]
    fn matches_tabloid_expansion() {
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                let basis = standard_tableaux(&lambda);
                let expanded: Vec<_> = basis.iter().map(polytabloid).collect();
                for (i, m) in specht_matrices(&lambda).iter().enumerate() {
                    for (j, t) in basis.iter().enumerate() {
                        let lhs = polytabloid(&swap_entries(t, i, i + 1));
                        let mut rhs: BTreeMap<Tabloid, i64> = BTreeMap::new();
                        for (k, e) in expanded.iter().enumerate() {
                            let c = m.get(k, j).to_integer();
                            let c: i64 = c.try_into().unwrap();
                            for (tab, x) in e {
                                *rhs.entry(tab.clone()).or_insert(0) += c * x;
                            }
                        }
                        rhs.retain(|_, c| *c != 0);
                        assert_eq!(lhs, rhs, "λ = {lambda}, s_{}, basis {j}", i + 1);
                    }
                }
            }
        }
    }

    fn word_matrix(ms: &[RationalMatrix], f: usize, word: &[usize]) -> RationalMatrix {
        word.iter().fold(RationalMatrix::identity(f), |acc, &i| &acc * &ms[i - 1])
    }

    #[test]
    fn coxeter_relations_and_characters() {
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                let f = specht_dimension(&lambda) as usize;
                let ms = specht_matrices(&lambda);
                let id = RationalMatrix::identity(f);
                for i in 0..ms.len() {
                    assert_eq!(&ms[i] * &ms[i], id);
                    if i + 1 < ms.len() {
                        let l = &(&ms[i] * &ms[i + 1]) * &ms[i];
                        let r = &(&ms[i + 1] * &ms[i]) * &ms[i + 1];
                        assert_eq!(l, r);
                    }
                    for j in i + 2..ms.len() {
                        assert_eq!(&ms[i] * &ms[j], &ms[j] * &ms[i]);
                    }
                }
                for rho in partitions_of(n) {
                    let m = word_matrix(&ms, f, &conjugacy_class_word(&rho));
                    assert_eq!(m.trace(), rat(irreducible_character(&lambda, &rho).unwrap()), "{lambda} at {rho}");
                }
            }
        }
    }

    #[test]
    fn one_dimensional_cases() {
        for m in specht_matrices(&p(&[4])) {
            assert_eq!(m, RationalMatrix::identity(1));
        }
        for m in specht_matrices(&p(&[1, 1, 1, 1])) {
            assert_eq!(m, RationalMatrix::from_i64_rows(&[&[-1]]));
        }
        assert_eq!(specht_matrices(&p(&[2, 1]))[0].trace(), rat(0));
        assert!(specht_matrices(&p(&[1])).is_empty());
    }
}
