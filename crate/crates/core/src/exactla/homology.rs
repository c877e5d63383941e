use num_bigint::BigInt;
use num_traits::One;

use super::snf::invariant_factors;
use super::sparse::{sparse_kernel, unit, Echelon, SparseMatrix, SparseVec};
use crate::error::{Error, Result};

/// A bounded chain complex `C_N → ⋯ → C_1 → C_0` of finite-dimensional ℚ-vector spaces.
///
/// `differentials[i]` maps degree `i + 1` to degree `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    differentials: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// Checks shapes and `d ∘ d = 0`. A nonzero composite `C_{i+2} → C_i` is reported at the
    /// middle degree `i + 1`.
    pub fn new(dims: Vec<usize>, differentials: Vec<SparseMatrix>) -> Result<Self> {
        if differentials.len() + 1 != dims.len().max(1) {
            return Err(Error::ShapeMismatch {
                op: "chain complex",
                detail: format!("{} degrees but {} differentials", dims.len(), differentials.len()),
            });
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.rows() != dims[i] || d.cols() != dims[i + 1] {
                return Err(Error::ShapeMismatch {
                    op: "chain complex",
                    detail: format!(
                        "differential {i} is {}x{}, expected {}x{}",
                        d.rows(),
                        d.cols(),
                        dims[i],
                        dims[i + 1]
                    ),
                });
            }
        }
        for i in 0..differentials.len().saturating_sub(1) {
            if !differentials[i].checked_mul(&differentials[i + 1])?.is_zero() {
                return Err(Error::ComplexInvalid { degree: i + 1 });
            }
        }
        Ok(ChainComplex { dims, differentials })
    }

    /// A single space in degree 0.
    pub fn concentrated(dim: usize) -> Self {
        ChainComplex { dims: vec![dim], differentials: Vec::new() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differentials(&self) -> &[SparseMatrix] {
        &self.differentials
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    /// `Σ (−1)^i dim C_i`.
    pub fn euler_characteristic(&self) -> i64 {
        alternating(self.dims.iter().copied())
    }
}

fn alternating(xs: impl Iterator<Item = usize>) -> i64 {
    xs.enumerate().map(|(i, d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub betti: usize,
    /// Invariant factors greater than one (integral mode only).
    pub torsion: Vec<BigInt>,
    /// Cycles whose classes form a basis of rational homology, when requested.
    pub representative_cycles: Option<Vec<SparseVec>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub degrees: Vec<DegreeHomology>,
    pub integral: bool,
}

impl HomologyResult {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating(self.degrees.iter().map(|d| d.betti))
    }

    pub fn is_acyclic(&self) -> bool {
        self.degrees.iter().all(|d| d.betti == 0 && d.torsion.is_empty())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.degrees.iter().all(|d| d.torsion.is_empty())
    }
}

fn ranks(c: &ChainComplex) -> Vec<usize> {
    c.differentials
        .iter()
        .map(|d| {
            let mut e = Echelon::new(d.rows());
            for col in d.columns() {
                e.insert(col.clone());
            }
            e.rank()
        })
        .collect()
}

/// Homology of `c`. In integral mode every entry must be an integer; torsion is read off
/// the invariant factors of each differential.
pub fn homology(c: &ChainComplex, integral: bool) -> Result<HomologyResult> {
    compute(c, integral, false)
}

/// Rational homology with representative cycles in every degree.
pub fn homology_with_cycles(c: &ChainComplex) -> Result<HomologyResult> {
    compute(c, false, true)
}

fn compute(c: &ChainComplex, integral: bool, cycles: bool) -> Result<HomologyResult> {
    if integral && !c.differentials.iter().all(|d| d.is_integral()) {
        return Err(Error::NotIntegral { op: "homology" });
    }
    let (ranks, torsions): (Vec<usize>, Vec<Vec<BigInt>>) = if integral {
        let mut rs = Vec::new();
        let mut ts = Vec::new();
        for d in &c.differentials {
            let f = invariant_factors(d)?;
            rs.push(f.len());
            ts.push(f.into_iter().filter(|x| !x.is_one()).collect());
        }
        (rs, ts)
    } else {
        (ranks(c), vec![Vec::new(); c.differentials.len()])
    };
    let mut degrees = Vec::with_capacity(c.dims.len());
    for (i, &dim) in c.dims.iter().enumerate() {
        let out_rank = if i > 0 { ranks[i - 1] } else { 0 };
        let in_rank = ranks.get(i).copied().unwrap_or(0);
        let betti = dim - out_rank - in_rank;
        let representative_cycles = if cycles { Some(representatives(c, i, betti)) } else { None };
        degrees.push(DegreeHomology { betti, torsion: torsions.get(i).cloned().unwrap_or_default(), representative_cycles });
    }
    let result = HomologyResult { degrees, integral };
    if result.euler_characteristic() != c.euler_characteristic() {
        return Err(Error::InternalInconsistency {
            op: "homology",
            detail: format!("Euler characteristic {} vs {}", result.euler_characteristic(), c.euler_characteristic()),
        });
    }
    Ok(result)
}

fn representatives(c: &ChainComplex, i: usize, betti: usize) -> Vec<SparseVec> {
    let dim = c.dims[i];
    let cycles: Vec<SparseVec> = if i == 0 {
        (0..dim).map(unit).collect()
    } else {
        sparse_kernel(c.dims[i - 1], c.differentials[i - 1].columns())
    };
    let mut span = Echelon::new(dim);
    if let Some(d) = c.differentials.get(i) {
        for col in d.columns() {
            span.insert(col.clone());
        }
    }
    let mut reps = Vec::with_capacity(betti);
    for z in cycles {
        if span.insert(z.clone()) {
            reps.push(z);
        }
    }
    debug_assert_eq!(reps.len(), betti);
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, RationalMatrix};

    fn sm(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&RationalMatrix::from_i64_rows(rows))
    }

    #[test]
    fn small_complexes() {
        let c = ChainComplex::concentrated(1);
        assert_eq!(homology(&c, false).unwrap().betti_numbers(), vec![1]);

        let c = ChainComplex::new(vec![1, 1], vec![sm(&[&[1]])]).unwrap();
        assert!(homology(&c, false).unwrap().is_acyclic());

        let c = ChainComplex::new(vec![1, 1], vec![sm(&[&[2]])]).unwrap();
        let h = homology(&c, true).unwrap();
        assert_eq!(h.degrees[0].betti, 0);
        assert_eq!(h.degrees[0].torsion, vec![int(2)]);
        assert_eq!(h.degrees[1].betti, 0);
        assert!(homology(&c, false).unwrap().is_acyclic());
    }

    #[test]
    fn rejects_non_complexes() {
        let d1 = sm(&[&[1]]);
        let d2 = sm(&[&[1]]);
        assert_eq!(ChainComplex::new(vec![1, 1, 1], vec![d1, d2]), Err(Error::ComplexInvalid { degree: 1 }));
        assert!(matches!(ChainComplex::new(vec![1, 2], vec![sm(&[&[1]])]), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn integral_mode_needs_integers() {
        let half = SparseMatrix::from_dense(&RationalMatrix::from_rows(vec![vec![
            crate::exactla::rat(1) / crate::exactla::rat(2),
        ]]));
        let c = ChainComplex::new(vec![1, 1], vec![half]).unwrap();
        assert!(matches!(homology(&c, true), Err(Error::NotIntegral { .. })));
    }

    #[test]
    fn circle_cycles() {
        // boundary of a triangle: 3 edges → 3 vertices
        let d = sm(&[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]]);
        let c = ChainComplex::new(vec![3, 3], vec![d.clone()]).unwrap();
        let h = homology_with_cycles(&c).unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 1]);
        let z = &h.degrees[1].representative_cycles.as_ref().unwrap()[0];
        assert!(d.apply(z).is_empty());
        assert_eq!(h.euler_characteristic(), c.euler_characteristic());
    }
}
