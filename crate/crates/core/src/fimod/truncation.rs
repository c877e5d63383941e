use std::collections::HashMap;

use super::cube::{Cube, SignRule};
use super::module::FiModule;
use crate::combinat::{binomial, combinations, enumerate_injections, standard_cubes, subset_inclusion};
use crate::error::{Error, Result};
use crate::exactla::{
    homology, poset_colimit, poset_limit_dimension, sparse_rank, unit, Colimit, Cover, PosetDiagram, SparseMatrix,
};

/// `Q_nE(k)` and its comparison map to `E(k)`.
#[derive(Clone, Debug)]
pub struct QTruncation {
    pub dimension: usize,
    /// `dim E(k) × dimension`.
    pub comparison: SparseMatrix,
}

impl QTruncation {
    pub fn is_isomorphism(&self) -> bool {
        self.comparison.rows() == self.dimension && sparse_rank(self.dimension, self.comparison.columns().iter().cloned()) == self.dimension
    }
}

/// The diagram `A ↦ E(|A|)` over subsets `A ⊆ k` with `|A| ≤ n`.
fn subset_diagram(e: &FiModule, n: usize, k: usize) -> Result<(Vec<Vec<usize>>, Colimit)> {
    let subsets: Vec<Vec<usize>> = (0..=n.min(k)).flat_map(|r| combinations(k, r)).collect();
    let index: HashMap<&[usize], usize> = subsets.iter().enumerate().map(|(i, a)| (a.as_slice(), i)).collect();
    let mut covers = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        if a.len() == n.min(k) {
            continue;
        }
        for x in (0..k).filter(|x| !a.contains(x)) {
            let mut b = a.clone();
            b.push(x);
            b.sort_unstable();
            let map = e.evaluate(&subset_inclusion(a, &b))?;
            covers.push(Cover { lower: i, upper: index[b.as_slice()], map });
        }
    }
    let dims = subsets.iter().map(|a| e.dim(a.len())).collect();
    let colim = poset_colimit(&PosetDiagram::new(dims, covers)?);
    Ok((subsets, colim))
}

/// `Q_nE(k)`: the colimit of `E` over the subsets of `k` of size at most `n`, with the map
/// to `E(k)` induced by the inclusions `A ⊆ k`.
pub fn q_truncation(e: &FiModule, n: usize, k: usize) -> Result<QTruncation> {
    e.check_degree("q_truncation", k)?;
    let (subsets, colim) = subset_diagram(e, n, k)?;
    let all: Vec<usize> = (0..k).collect();
    let mut columns = Vec::with_capacity(colim.dimension());
    for (p, j) in colim.representative_locations() {
        columns.push(e.apply(&subset_inclusion(&subsets[p], &all), &unit(j))?);
    }
    Ok(QTruncation { dimension: colim.dimension(), comparison: SparseMatrix::from_columns(e.dim(k), columns) })
}

/// Dimensions of `H_0` and `H_1` of the cofiber of `Q_{n−1}E(k) → Q_nE(k)`.
pub fn cohomogeneous_layer(e: &FiModule, n: usize, k: usize) -> Result<(usize, usize)> {
    if n == 0 {
        return Err(Error::Domain { op: "cohomogeneous_layer", detail: "n must be at least 1".into() });
    }
    e.check_degree("cohomogeneous_layer", k)?;
    let (small_sets, small) = subset_diagram(e, n - 1, k)?;
    let (large_sets, large) = subset_diagram(e, n, k)?;
    let position: HashMap<&[usize], usize> = large_sets.iter().enumerate().map(|(i, a)| (a.as_slice(), i)).collect();
    let images = small
        .representative_locations()
        .into_iter()
        .map(|(p, j)| large.project(position[small_sets[p].as_slice()], &unit(j)));
    let r = sparse_rank(large.dimension(), images);
    Ok((large.dimension() - r, small.dimension() - r))
}

/// A standard cube whose total complex is not acyclic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeFailure {
    pub base: Vec<usize>,
    pub extension: Vec<usize>,
    pub betti: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialCertificate {
    pub n: usize,
    pub cubes_tested: usize,
    pub failures: Vec<CubeFailure>,
}

impl PolynomialCertificate {
    pub fn is_polynomial(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Whether every representative standard `(n+1)`-cube in the window has an acyclic total
/// complex.
pub fn is_polynomial(e: &FiModule, n: usize) -> Result<PolynomialCertificate> {
    let cubes = standard_cubes(e.max_degree(), n + 1);
    if cubes.is_empty() {
        return Err(Error::WindowTooSmall {
            op: "is_polynomial",
            detail: format!("no {}-cube fits in degrees ≤ {}", n + 1, e.max_degree()),
        });
    }
    let mut failures = Vec::new();
    for cube in &cubes {
        let total = Cube::new(e, cube.extension.clone(), cube.base.clone(), SignRule::Koszul)?.total_complex()?;
        let h = homology(&total, false)?;
        if !h.is_acyclic() {
            failures.push(CubeFailure {
                base: cube.base.clone(),
                extension: cube.extension.clone(),
                betti: h.betti_numbers(),
            });
        }
    }
    Ok(PolynomialCertificate { n, cubes_tested: cubes.len(), failures })
}

/// `dim P_n(ℚF_m)(k)`, as the limit of `T ↦ ℚF_T(k)` over `T ⊆ m` with `|T| ≤ n`, where the
/// maps restrict along `T ⊆ T'`.
pub fn pn_representable(m: usize, n: usize, k: usize) -> Result<usize> {
    let subsets: Vec<Vec<usize>> = (0..=n.min(m)).flat_map(|r| combinations(m, r)).collect();
    let index: HashMap<&[usize], usize> = subsets.iter().enumerate().map(|(i, a)| (a.as_slice(), i)).collect();
    let bases: Vec<Vec<Vec<usize>>> =
        subsets.iter().map(|t| enumerate_injections(t.len(), k).into_iter().map(|f| f.values().to_vec()).collect()).collect();
    let positions: Vec<HashMap<&[usize], usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect()).collect();
    let mut covers = Vec::new();
    for (i, t) in subsets.iter().enumerate() {
        for (drop, _) in t.iter().enumerate() {
            let mut s = t.clone();
            s.remove(drop);
            let lower = index[s.as_slice()];
            let columns = bases[i]
                .iter()
                .map(|f| {
                    let mut g = f.clone();
                    g.remove(drop);
                    unit(positions[lower][g.as_slice()])
                })
                .collect();
            covers.push(Cover { lower: i, upper: lower, map: SparseMatrix::from_columns(bases[lower].len(), columns) });
        }
    }
    let dims = bases.iter().map(Vec::len).collect();
    Ok(poset_limit_dimension(&PosetDiagram::new(dims, covers)?))
}

/// `dim D_n(ℚF_m)(k) = C(m, n) · dim ℚG_n(k)`, for the bookkeeping identity.
pub fn homogeneous_layer_representable(m: usize, n: usize, k: usize) -> Result<u128> {
    Ok(binomial(m, n) * crate::symrep::gn_dimension(n, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::falling_factorial;
    use crate::fimod::{free_module, representable};
    use crate::symrep::Partition;

    #[test]
    fn q_truncation_examples() {
        let f2 = representable(2, 5);
        for k in 0..=5 {
            assert_eq!(q_truncation(&f2, 1, k).unwrap().dimension, 0);
        }
        let q = q_truncation(&f2, 2, 4).unwrap();
        assert_eq!(q.dimension, 12);
        assert!(q.is_isomorphism());
        let m = free_module(&Partition::new(vec![2, 1]).unwrap(), 5).unwrap();
        for n in 0..=4 {
            for k in 0..=n.min(5) {
                assert!(q_truncation(&m, n, k).unwrap().is_isomorphism(), "n={n} k={k}");
            }
        }
        assert!(q_truncation(&f2, 2, 6).is_err());
    }

    #[test]
    fn layers() {
        let f2 = representable(2, 5);
        for k in 0..=5 {
            assert_eq!(cohomogeneous_layer(&f2, 2, k).unwrap(), (f2.dim(k), 0));
            assert_eq!(cohomogeneous_layer(&f2, 3, k).unwrap(), (0, 0));
        }
        assert_eq!(cohomogeneous_layer(&FiModule::zero(3), 1, 3).unwrap(), (0, 0));
        assert!(cohomogeneous_layer(&f2, 0, 3).is_err());
    }

    #[test]
    fn polynomiality() {
        for n in 0..=2 {
            let e = representable(n, 5);
            for m in n..=3 {
                assert!(is_polynomial(&e, m).unwrap().is_polynomial(), "F{n} at {m}");
            }
        }
        let cert = is_polynomial(&representable(1, 4), 0).unwrap();
        assert!(!cert.is_polynomial());
        assert!(is_polynomial(&representable(2, 4), 1).unwrap().failures.len() > 0);
        assert!(matches!(is_polynomial(&representable(1, 2), 2), Err(Error::WindowTooSmall { .. })));
    }

    #[test]
    fn pn_examples() {
        for k in 0..=5 {
            assert_eq!(pn_representable(2, 2, k).unwrap() as u128, falling_factorial(k, 2));
            assert_eq!(pn_representable(1, 0, k).unwrap(), 1);
        }
        assert_eq!(pn_representable(2, 1, 4).unwrap(), 7);
        let p0 = pn_representable(2, 0, 4).unwrap() as u128;
        assert_eq!(7, p0 + homogeneous_layer_representable(2, 1, 4).unwrap());
    }
}
