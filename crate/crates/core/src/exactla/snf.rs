use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | ⋯`, `dᵢ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).filter(|x| !x.is_zero()).collect()
    }
}

fn swap_rows(m: &mut IntegerMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let x = m.get(a, j).clone();
        let y = m.get(b, j).clone();
        m.set(a, j, y);
        m.set(b, j, x);
    }
}

fn swap_cols(m: &mut IntegerMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let x = m.get(i, a).clone();
        let y = m.get(i, b).clone();
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

/// row[target] += q · row[source]
fn add_row(m: &mut IntegerMatrix, target: usize, source: usize, q: &BigInt) {
    for j in 0..m.cols() {
        let s = m.get(source, j);
        if !s.is_zero() {
            let x = m.get(target, j) + q * s;
            m.set(target, j, x);
        }
    }
}

/// col[target] += q · col[source]
fn add_col(m: &mut IntegerMatrix, target: usize, source: usize, q: &BigInt) {
    for i in 0..m.rows() {
        let s = m.get(i, source);
        if !s.is_zero() {
            let x = m.get(i, target) + q * s;
            m.set(i, target, x);
        }
    }
}

/// Classical elementary-operation Smith normal form with minimal-absolute-value pivoting.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = d.get(i, j);
                    if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v);
            };
            swap_rows(&mut d, t, pi);
            swap_rows(&mut u, t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                add_row(&mut d, i, t, &q);
                add_row(&mut u, i, t, &q);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                add_col(&mut d, j, t, &q);
                add_col(&mut v, j, t, &q);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = d.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    add_row(&mut d, t, i, &one);
                    add_row(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            let m1 = -BigInt::one();
            for j in 0..cols {
                let x = d.get(t, j) * &m1;
                d.set(t, j, x);
            }
            for j in 0..rows {
                let x = u.get(t, j) * &m1;
                u.set(t, j, x);
            }
        }
    }
    finish(u, d, v)
}

fn finish(u: IntegerMatrix, d: IntegerMatrix, v: IntegerMatrix) -> SmithForm {
    SmithForm { u, d, v }
}

/// Nonzero invariant factors of an integral sparse matrix, in divisibility order.
///
/// Unit pivots are eliminated sparsely first (each removes one row and one column and
/// contributes a factor 1); whatever remains is handed to [`smith_normal_form`].
pub fn invariant_factors(m: &SparseMatrix) -> Result<Vec<BigInt>> {
    if !m.is_integral() {
        return Err(Error::NotIntegral { op: "invariant_factors" });
    }
    let mut cols: Vec<BTreeMap<usize, BigInt>> =
        m.columns().iter().map(|c| c.iter().map(|(&i, x)| (i, x.to_integer())).collect()).collect();
    let mut row_index: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.rows()];
    for (j, c) in cols.iter().enumerate() {
        for &i in c.keys() {
            row_index[i].insert(j);
        }
    }
    let mut units = 0usize;
    loop {
        let mut pivot: Option<(usize, usize)> = None;
        for (j, c) in cols.iter().enumerate() {
            let best = c.iter().filter(|(_, x)| x.abs().is_one()).map(|(&i, _)| i).min_by_key(|&i| row_index[i].len());
            if let Some(i) = best {
                pivot = Some((i, j));
                break;
            }
        }
        let Some((r, c)) = pivot else { break };
        let u = cols[c][&r].clone();
        let pivot_col = std::mem::take(&mut cols[c]);
        for &i in pivot_col.keys() {
            row_index[i].remove(&c);
        }
        let others: Vec<usize> = row_index[r].iter().copied().collect();
        for j in others {
            let factor = &cols[j][&r] * &u;
            for (&i, x) in &pivot_col {
                let updated = cols[j].get(&i).cloned().unwrap_or_else(BigInt::zero) - &factor * x;
                if updated.is_zero() {
                    cols[j].remove(&i);
                    row_index[i].remove(&j);
                } else {
                    if !cols[j].contains_key(&i) {
                        row_index[i].insert(j);
                    }
                    cols[j].insert(i, updated);
                }
            }
            debug_assert!(!cols[j].contains_key(&r));
        }
        units += 1;
    }
    let live_cols: Vec<usize> = (0..cols.len()).filter(|&j| !cols[j].is_empty()).collect();
    let live_rows: Vec<usize> = (0..m.rows()).filter(|&i| !row_index[i].is_empty()).collect();
    let mut factors = vec![BigInt::one(); units];
    if !live_cols.is_empty() {
        let mut dense = IntegerMatrix::zeros(live_rows.len(), live_cols.len());
        for (jj, &j) in live_cols.iter().enumerate() {
            for (&i, x) in &cols[j] {
                let ii = live_rows.binary_search(&i).expect("row index");
                dense.set(ii, jj, x.clone());
            }
        }
        factors.extend(smith_normal_form(&dense).invariant_factors());
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::dense::is_unimodular;
    use crate::exactla::int;
    use proptest::prelude::*;

    fn check(a: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        s
    }

    #[test]
    fn snf_examples() {
        let s = check(&IntegerMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.d, IntegerMatrix::from_i64_rows(&[&[1, 0], &[0, 6]]));
        let s = check(&IntegerMatrix::identity(3));
        assert_eq!(s.d, IntegerMatrix::identity(3));
        let s = check(&IntegerMatrix::zeros(2, 3));
        assert!(s.d.is_zero());
    }

    #[test]
    fn sparse_factors_agree_with_dense() {
        let a = IntegerMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let dense = check(&a).invariant_factors();
        assert_eq!(dense, vec![int(2), int(6), int(12)]);
        let sparse = invariant_factors(&SparseMatrix::from_dense(&a.to_rational())).unwrap();
        assert_eq!(sparse, dense);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn snf_is_unimodular_diagonalisation(
            (r, c, e) in (0usize..=8, 0usize..=8).prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-5i64..=5, r * c)))
        ) {
            let a = IntegerMatrix::from_entries(r, c, e.into_iter().map(int).collect()).unwrap();
            let s = check(&a);
            let sparse = invariant_factors(&SparseMatrix::from_dense(&a.to_rational())).unwrap();
            prop_assert_eq!(sparse, s.invariant_factors());
        }
    }
}
