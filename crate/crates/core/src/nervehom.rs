//! Nerves of partial-bijection posets and their integral homology.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinat::{build_poset, PartialBijectionPoset};
use crate::error::{Error, Result};
use crate::exactla::{homology, ChainComplex, HomologyResult, Rational, SparseMatrix, SparseVec};
use crate::symrep::gn_dimension;

/// The order complex of a finite poset; `simplices[d]` lists the `d`-simplices as strictly
/// increasing vertex tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderComplex {
    pub vertex_count: usize,
    pub simplices: Vec<Vec<Vec<usize>>>,
}

impl OrderComplex {
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// Alternating simplex count.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// The augmented simplicial chain complex, with the empty simplex in degree 0 and the
    /// `d`-simplices in degree `d + 1`.
    pub fn augmented_chain_complex(&self) -> ChainComplex {
        let mut dims = vec![1];
        dims.extend(self.counts());
        let mut differentials = Vec::with_capacity(self.simplices.len());
        if !self.simplices.is_empty() {
            differentials.push(SparseMatrix::from_columns(
                1,
                (0..self.vertex_count).map(|_| SparseVec::from([(0, Rational::from_integer(1.into()))])).collect(),
            ));
        }
        for d in 1..self.simplices.len() {
            let index: HashMap<&[usize], usize> =
                self.simplices[d - 1].iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
            let columns = self.simplices[d]
                .iter()
                .map(|s| {
                    let mut col = SparseVec::new();
                    for drop in 0..s.len() {
                        let face: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v).collect();
                        let sign = if drop % 2 == 0 { 1 } else { -1 };
                        col.insert(index[face.as_slice()], Rational::from_integer(sign.into()));
                    }
                    col
                })
                .collect();
            differentials.push(SparseMatrix::from_columns(self.simplices[d - 1].len(), columns));
        }
        ChainComplex::new(dims, differentials).expect("simplicial boundary squares to zero")
    }
}

/// All chains of `p`, found by depth-first extension through the strict upper sets.
pub fn order_complex(p: &PartialBijectionPoset) -> OrderComplex {
    let ups = p.upsets();
    let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
    fn extend(chain: &mut Vec<usize>, ups: &[Vec<usize>], out: &mut Vec<Vec<Vec<usize>>>) {
        let d = chain.len() - 1;
        if out.len() <= d {
            out.push(Vec::new());
        }
        out[d].push(chain.clone());
        let last = *chain.last().expect("nonempty chain");
        for &next in &ups[last] {
            chain.push(next);
            extend(chain, ups, out);
            chain.pop();
        }
    }
    for v in 0..p.elements.len() {
        extend(&mut vec![v], &ups, &mut simplices);
    }
    for level in &mut simplices {
        level.sort();
    }
    OrderComplex { vertex_count: p.elements.len(), simplices }
}

/// Reduced integral homology: `degrees[d]` is `H̃_d` for `d ≥ 0`. The class of the empty
/// complex in degree −1 is not reported.
pub fn complex_homology(c: &OrderComplex) -> Result<HomologyResult> {
    let mut h = homology(&c.augmented_chain_complex(), true)?;
    h.degrees.remove(0);
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedgeCertificate {
    pub n: usize,
    pub k: usize,
    pub vertices: usize,
    pub simplex_counts: Vec<usize>,
    /// Reduced Betti numbers of the nerve, from degree 0.
    pub ranks: Vec<usize>,
    /// Invariant factors greater than one, per degree.
    pub torsion: Vec<Vec<String>>,
    pub expected_rank: u128,
}

impl WedgeCertificate {
    /// Degree of the sphere after suspension.
    pub fn suspended_degree(&self) -> usize {
        self.n
    }
}

impl fmt::Display for WedgeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "NP({},{}): {} vertices, reduced ranks {:?}, wedge of {} spheres of dimension {}",
            self.n,
            self.k,
            self.vertices,
            self.ranks,
            self.expected_rank,
            self.n - 1
        )
    }
}

/// Reduced homology of the nerve of `P(n, k)`, without judgment.
pub fn nerve_homology(n: usize, k: usize) -> Result<HomologyResult> {
    complex_homology(&order_complex(&build_poset(n, k)))
}

/// Checks that the nerve of `P(n, k)` has free reduced homology of rank `dim G_n(k)`
/// concentrated in degree `n − 1`. Requires `n ≥ 1` and `k ≥ 2n − 1`.
pub fn wedge_certificate(n: usize, k: usize) -> Result<WedgeCertificate> {
    if n == 0 || k + 1 < 2 * n {
        return Err(Error::Domain { op: "wedge_certificate", detail: format!("need n ≥ 1 and k ≥ 2n − 1, got ({n}, {k})") });
    }
    let expected_rank = gn_dimension(n, k)?;
    let complex = order_complex(&build_poset(n, k));
    let h = complex_homology(&complex)?;
    let ranks = h.betti_numbers();
    let torsion: Vec<Vec<String>> =
        h.degrees.iter().map(|d| d.torsion.iter().map(BigInt::to_string).collect()).collect();
    let violation = |detail: String| Error::TheoremViolation { n, k, detail };
    if !h.is_torsion_free() {
        return Err(violation(format!("torsion {torsion:?}")));
    }
    for (d, &r) in ranks.iter().enumerate() {
        let want = if d == n - 1 { expected_rank } else { 0 };
        if r as u128 != want {
            return Err(violation(format!("rank {r} in degree {d}, expected {want}")));
        }
    }
    if ranks.len() < n && expected_rank > 0 {
        return Err(violation(format!("no simplices in degree {}", n - 1)));
    }
    Ok(WedgeCertificate {
        n,
        k,
        vertices: complex.vertex_count,
        simplex_counts: complex.counts(),
        ranks,
        torsion,
        expected_rank,
    })
}

/// Whether the comparability graph of `P(n, k)` is connected.
pub fn connectivity_check(n: usize, k: usize) -> bool {
    let p = build_poset(n, k);
    let mut parent: Vec<usize> = (0..p.elements.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = p.elements.len();
    for &(a, b) in &p.cover_relations {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components == 1
}
