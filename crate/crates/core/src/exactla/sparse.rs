use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::matrix::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Sparse vector: index → nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Rational>;

/// `v += c·w`, dropping cancelled entries.
pub fn add_scaled(v: &mut SparseVec, c: &Rational, w: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&i, x) in w {
        let updated = match v.get(&i) {
            Some(y) => y + c * x,
            None => c * x,
        };
        if updated.is_zero() {
            v.remove(&i);
        } else {
            v.insert(i, updated);
        }
    }
}

pub fn unit(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Rational::one());
    v
}

/// Column-compressed sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, columns: (0..n).map(unit).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| c.keys().all(|&i| i < rows)));
        SparseMatrix { rows, columns }
    }

    pub fn from_dense(m: &RationalMatrix) -> Self {
        let mut columns = vec![SparseVec::new(); m.cols()];
        for i in 0..m.rows() {
            for (j, col) in columns.iter_mut().enumerate() {
                let x = m.get(i, j);
                if !x.is_zero() {
                    col.insert(i, x.clone());
                }
            }
        }
        SparseMatrix { rows: m.rows(), columns }
    }

    pub fn to_dense(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for (&i, x) in col {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.columns[j].get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    pub fn is_integral(&self) -> bool {
        self.columns.iter().all(|c| c.values().all(|x| x.is_integer()))
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, c) in v {
            add_scaled(&mut out, c, &self.columns[j]);
        }
        out
    }

    pub fn checked_mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != rhs.rows {
            return Err(Error::ShapeMismatch {
                op: "sparse product",
                detail: format!("{}x{} times {}x{}", self.rows, self.cols(), rhs.rows, rhs.cols()),
            });
        }
        Ok(SparseMatrix { rows: self.rows, columns: rhs.columns.iter().map(|c| self.apply(c)).collect() })
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        let columns = self
            .columns
            .iter()
            .map(|col| if c.is_zero() { SparseVec::new() } else { col.iter().map(|(&i, x)| (i, x * c)).collect() })
            .collect();
        SparseMatrix { rows: self.rows, columns }
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols()), (rhs.rows, rhs.cols()), "sparse difference shapes");
        let minus = -Rational::one();
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| {
                let mut c = a.clone();
                add_scaled(&mut c, &minus, b);
                c
            })
            .collect();
        SparseMatrix { rows: self.rows, columns }
    }

    pub fn trace(&self) -> Rational {
        let mut acc = Rational::zero();
        for (j, col) in self.columns.iter().enumerate() {
            if let Some(x) = col.get(&j) {
                acc += x;
            }
        }
        acc
    }

    pub fn negate(&self) -> SparseMatrix {
        self.scale(&(-Rational::one()))
    }
}

/// A subspace of `ℚ^dim` held in echelon form: each stored row has a distinct pivot equal
/// to its largest index, normalised to coefficient 1.
///
/// The pivots are exactly the indices that are *not* chosen by the greedy
/// smallest-index-first basis of the quotient, so [`Echelon::quotient_basis`] is the
/// lexicographically first set of standard basis vectors spanning `ℚ^dim / W`.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    dim: usize,
    rows: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: HashMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    /// Remainder of `v` modulo the subspace; contains no pivot indices.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut bound = usize::MAX;
        loop {
            let next = v.range(..bound).rev().find(|(i, _)| self.rows.contains_key(i)).map(|(&i, c)| (i, c.clone()));
            match next {
                Some((i, c)) => {
                    add_scaled(&mut v, &(-c), &self.rows[&i]);
                    bound = i;
                }
                None => return v,
            }
        }
    }

    /// Adds `v` to the subspace; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next_back() else {
            return false;
        };
        debug_assert!(pivot < self.dim);
        let inv = lead.recip();
        let row: SparseVec = r.iter().map(|(&i, x)| (i, x * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Non-pivot indices in increasing order.
    pub fn quotient_basis(&self) -> Vec<usize> {
        (0..self.dim).filter(|i| !self.rows.contains_key(i)).collect()
    }

    pub fn quotient(&self) -> Quotient {
        Quotient::new(self.clone())
    }
}

/// `ℚ^dim / W` with a fixed basis of representatives (the non-pivot unit vectors).
#[derive(Clone, Debug)]
pub struct Quotient {
    echelon: Echelon,
    basis: Vec<usize>,
    position: HashMap<usize, usize>,
}

impl Quotient {
    pub fn new(echelon: Echelon) -> Self {
        let basis = echelon.quotient_basis();
        let position = basis.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        Quotient { echelon, basis, position }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.dim()
    }

    /// Ambient indices of the representative basis vectors.
    pub fn representatives(&self) -> &[usize] {
        &self.basis
    }

    pub fn relations(&self) -> &Echelon {
        &self.echelon
    }

    /// Coordinates of the class of `v`, as a sparse vector over quotient positions.
    pub fn coordinates(&self, v: SparseVec) -> SparseVec {
        self.echelon.reduce(v).into_iter().map(|(i, x)| (self.position[&i], x)).collect()
    }

    /// Dense projection matrix `dim × ambient_dim`.
    pub fn projection(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim(), self.ambient_dim());
        for j in 0..self.ambient_dim() {
            for (i, x) in self.coordinates(unit(j)) {
                m.set(i, j, x);
            }
        }
        m
    }
}

/// Rank of the span of the given vectors.
pub fn sparse_rank(dim: usize, vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new(dim);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// A basis of the kernel of the matrix whose columns are `columns`, as sparse vectors over
/// column indices.
pub fn sparse_kernel(rows: usize, columns: &[SparseVec]) -> Vec<SparseVec> {
    let mut pivots: HashMap<usize, (SparseVec, SparseVec)> = HashMap::new();
    let mut kernel = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut combo = unit(j);
        let mut bound = usize::MAX;
        loop {
            let next = v.range(..bound).rev().find(|(i, _)| pivots.contains_key(i)).map(|(&i, c)| (i, c.clone()));
            match next {
                Some((i, c)) => {
                    let (row, row_combo) = &pivots[&i];
                    add_scaled(&mut v, &(-c.clone()), row);
                    add_scaled(&mut combo, &(-c), row_combo);
                    bound = i;
                }
                None => break,
            }
        }
        match v.iter().next_back().map(|(&i, x)| (i, x.clone())) {
            None => kernel.push(combo),
            Some((pivot, lead)) => {
                debug_assert!(pivot < rows);
                let inv = lead.recip();
                let row = v.iter().map(|(&i, x)| (i, x * &inv)).collect();
                let combo = combo.iter().map(|(&i, x)| (i, x * &inv)).collect();
                pivots.insert(pivot, (row, combo));
            }
        }
    }
    kernel
}
