use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::{IntegerMatrix, Rational, RationalMatrix};
use super::sparse::{Echelon, SparseMatrix};

/// Scales each row by the lcm of its denominators, giving an integer matrix with the same
/// row space.
fn clear_denominators(a: &RationalMatrix) -> Vec<Vec<BigInt>> {
    (0..a.rows())
        .map(|i| {
            let row = a.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) forward elimination; returns the rank and, for square input,
/// the determinant.
fn bareiss(mut m: Vec<Vec<BigInt>>, cols: usize) -> (usize, BigInt) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&m[rank][c] * &m[r][j] - &m[r][c] * &m[rank][j]) / &prev;
                m[r][j] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    let det = if rows == cols && rank == rows { sign * prev } else { BigInt::zero() };
    (rank, det)
}

pub fn rank(a: &RationalMatrix) -> usize {
    bareiss(clear_denominators(a), a.cols()).0
}

pub fn determinant(a: &IntegerMatrix) -> BigInt {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    if a.rows() == 0 {
        return BigInt::one();
    }
    let m = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    bareiss(m, a.cols()).1
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(a: &mut RationalMatrix) -> Vec<usize> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let x = a.get(p, j).clone();
                let y = a.get(r, j).clone();
                a.set(p, j, y);
                a.set(r, j, x);
            }
        }
        let inv = a.get(r, c).recip();
        for j in c..cols {
            let x = a.get(r, j) * &inv;
            a.set(r, j, x);
        }
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..cols {
                let x = a.get(i, j) - &f * a.get(r, j);
                a.set(i, j, x);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Columns form a basis of `ker A`, one per free column of the reduced echelon form.
pub fn kernel_basis(a: &RationalMatrix) -> RationalMatrix {
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    let mut k = RationalMatrix::zeros(a.cols(), free.len());
    for (col, &f) in free.iter().enumerate() {
        k.set(f, col, Rational::one());
        for (r, &p) in pivots.iter().enumerate() {
            k.set(p, col, -m.get(r, f).clone());
        }
    }
    k
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    pub dimension: usize,
    /// `dimension × rows(A)`, with `projection · A = 0`.
    pub projection: RationalMatrix,
    /// Indices of the standard basis vectors that represent the cokernel basis.
    pub representatives: Vec<usize>,
}

/// Cokernel of `A`, with representatives the lexicographically first standard basis
/// vectors that are independent modulo the image.
pub fn cokernel(a: &RationalMatrix) -> Cokernel {
    let s = SparseMatrix::from_dense(a);
    let mut e = Echelon::new(a.rows());
    for c in s.columns() {
        e.insert(c.clone());
    }
    let q = e.quotient();
    Cokernel { dimension: q.dim(), projection: q.projection(), representatives: q.representatives().to_vec() }
}

/// A solution of `A x = b`, if any.
pub fn solve(a: &RationalMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "solve: right-hand side length");
    let bcol = RationalMatrix::from_columns(a.rows(), &[b.to_vec()]);
    let mut aug = a.hstack(&bcol);
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = vec![Rational::zero(); a.cols()];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug.get(r, a.cols()).clone();
    }
    Some(x)
}

/// Trace of a linear map restricted to an invariant subspace: `basis` has independent
/// columns spanning the subspace and `image` holds the images of those columns.
pub fn restricted_trace(basis: &RationalMatrix, image: &RationalMatrix) -> Option<Rational> {
    let mut acc = Rational::zero();
    for j in 0..basis.cols() {
        let x = solve(basis, &image.column(j))?;
        acc += &x[j];
    }
    Some(acc)
}

#[cfg(test)]
pub(crate) fn is_unimodular(m: &IntegerMatrix) -> bool {
    use num_traits::Signed;
    m.rows() == m.cols() && determinant(m).abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::identity(3)), 3);
        assert_eq!(rank(&RationalMatrix::zeros(2, 5)), 0);
        assert_eq!(rank(&RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]])), 1);
        let half = RationalMatrix::from_rows(vec![vec![rat(1) / rat(2), rat(1) / rat(3)], vec![rat(3), rat(2)]]);
        assert_eq!(rank(&half), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&RationalMatrix::identity(3)).cols(), 0);
        let k = kernel_basis(&RationalMatrix::zeros(2, 3));
        assert_eq!(k.cols(), 3);
        assert_eq!(rank(&k), 3);
        let k = kernel_basis(&RationalMatrix::from_i64_rows(&[&[1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.get(0, 0), &-k.get(1, 0).clone());
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&RationalMatrix::identity(3)).dimension, 0);
        let c = cokernel(&RationalMatrix::zeros(2, 0));
        assert_eq!(c.dimension, 2);
        assert_eq!(c.projection, RationalMatrix::identity(2));
        let c = cokernel(&RationalMatrix::from_i64_rows(&[&[1], &[0]]));
        assert_eq!(c.dimension, 1);
        assert_eq!(c.projection, RationalMatrix::from_i64_rows(&[&[0, 1]]));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&IntegerMatrix::from_i64_rows(&[&[2, 1], &[1, 1]])), BigInt::from(1));
        assert_eq!(determinant(&IntegerMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&IntegerMatrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), BigInt::from(-3));
    }

    #[test]
    fn solve_and_trace() {
        let a = RationalMatrix::from_i64_rows(&[&[1, 0], &[0, 2], &[1, 1]]);
        let x = solve(&a, &[rat(1), rat(4), rat(3)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
        assert!(solve(&a, &[rat(1), rat(0), rat(0)]).is_none());
        // swap on span{(1,1,0),(1,-1,0)}: trace 0
        let basis = RationalMatrix::from_i64_rows(&[&[1, 1], &[1, -1], &[0, 0]]);
        let image = RationalMatrix::from_i64_rows(&[&[1, -1], &[1, 1], &[0, 0]]);
        assert_eq!(restricted_trace(&basis, &image), Some(rat(0)));
    }

    fn arb_matrix() -> impl Strategy<Value = RationalMatrix> {
        (0usize..=8, 0usize..=8).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-5i64..=5, r * c).prop_map(move |e| {
                RationalMatrix::from_entries(r, c, e.into_iter().map(rat).collect()).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn rank_nullity(a in arb_matrix()) {
            let k = kernel_basis(&a);
            prop_assert_eq!(rank(&a) + k.cols(), a.cols());
            prop_assert!((&a * &k).is_zero());
            prop_assert_eq!(rank(&k), k.cols());
            let c = cokernel(&a);
            prop_assert_eq!(c.dimension, a.rows() - rank(&a));
            prop_assert!((&c.projection * &a).is_zero());
            prop_assert_eq!(rank(&c.projection), c.dimension);
        }
    }
}
