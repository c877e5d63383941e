use super::sparse::{add_scaled, unit, Echelon, Quotient, SparseMatrix, SparseVec};
use super::matrix::rat;
use crate::error::{Error, Result};

/// A cover `lower < upper` together with the structure map `V_lower → V_upper`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub map: SparseMatrix,
}

/// A functor from a finite poset to finite-dimensional ℚ-vector spaces, given on covers.
///
/// Maps along longer chains are composites of cover maps; the diagram is assumed to commute.
#[derive(Clone, Debug)]
pub struct PosetDiagram {
    pub dims: Vec<usize>,
    pub covers: Vec<Cover>,
}

impl PosetDiagram {
    pub fn new(dims: Vec<usize>, covers: Vec<Cover>) -> Result<Self> {
        for c in &covers {
            let ok = c.lower < dims.len()
                && c.upper < dims.len()
                && c.map.rows() == dims[c.upper]
                && c.map.cols() == dims[c.lower];
            if !ok {
                return Err(Error::ShapeMismatch {
                    op: "poset diagram",
                    detail: format!("cover {} < {} has a {}x{} map", c.lower, c.upper, c.map.rows(), c.map.cols()),
                });
            }
        }
        Ok(PosetDiagram { dims, covers })
    }

    fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|&d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Columns `ι_lower(x) − ι_upper(f x)` for `x` running over the basis of each lower vertex.
    fn relations(&self) -> impl Iterator<Item = SparseVec> + '_ {
        let offsets = self.offsets();
        self.covers.iter().flat_map(move |c| {
            let (lo, up) = (offsets[c.lower], offsets[c.upper]);
            (0..c.map.cols())
                .map(move |j| {
                    let mut v = unit(lo + j);
                    let image: SparseVec = c.map.column(j).iter().map(|(&i, x)| (up + i, x.clone())).collect();
                    add_scaled(&mut v, &rat(-1), &image);
                    v
                })
                .collect::<Vec<_>>()
        })
    }
}

/// The colimit `(⊕_p V_p) / ⟨ι_p x − ι_q f(x)⟩` with its structure maps.
#[derive(Clone, Debug)]
pub struct Colimit {
    offsets: Vec<usize>,
    dims: Vec<usize>,
    quotient: Quotient,
}

impl Colimit {
    pub fn dimension(&self) -> usize {
        self.quotient.dim()
    }

    /// Image of `v ∈ V_p` in the colimit.
    pub fn project(&self, p: usize, v: &SparseVec) -> SparseVec {
        let shifted = v.iter().map(|(&i, x)| (self.offsets[p] + i, x.clone())).collect();
        self.quotient.coordinates(shifted)
    }

    /// The structure map `V_p → colim` as a sparse matrix.
    pub fn structure_map(&self, p: usize) -> SparseMatrix {
        let cols = (0..self.dims[p]).map(|j| self.project(p, &unit(j))).collect();
        SparseMatrix::from_columns(self.dimension(), cols)
    }

    /// `(vertex, local index)` of each basis vector of the colimit.
    pub fn representative_locations(&self) -> Vec<(usize, usize)> {
        self.quotient
            .representatives()
            .iter()
            .map(|&i| {
                // the last vertex starting at or before `i` is never empty
                let p = self.offsets.partition_point(|&o| o <= i) - 1;
                (p, i - self.offsets[p])
            })
            .collect()
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }
}

pub fn poset_colimit(diagram: &PosetDiagram) -> Colimit {
    let mut e = Echelon::new(diagram.total());
    for r in diagram.relations() {
        e.insert(r);
    }
    Colimit { offsets: diagram.offsets(), dims: diagram.dims.clone(), quotient: e.quotient() }
}

/// Dimension of the limit: compatible families `(x_p)` with `f(x_lower) = x_upper` on every cover.
pub fn poset_limit_dimension(diagram: &PosetDiagram) -> usize {
    // transpose of the relation matrix: the limit is the kernel of ⊕V_p → ⊕_covers V_upper
    let offsets = diagram.offsets();
    let total = diagram.total();
    let mut rows: Vec<SparseVec> = Vec::new();
    for c in &diagram.covers {
        let mut block: Vec<SparseVec> = vec![SparseVec::new(); diagram.dims[c.upper]];
        for j in 0..c.map.cols() {
            for (&i, x) in c.map.column(j) {
                block[i].insert(offsets[c.lower] + j, x.clone());
            }
        }
        for (i, mut row) in block.into_iter().enumerate() {
            add_scaled(&mut row, &rat(-1), &unit(offsets[c.upper] + i));
            rows.push(row);
        }
    }
    let mut e = Echelon::new(total);
    for r in rows {
        e.insert(r);
    }
    total - e.rank()
}
