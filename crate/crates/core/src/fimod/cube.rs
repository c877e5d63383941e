//! Totalization of cubes `S ↦ E(S ∪ B)` of FI-module values, with or without passing to
//! coinvariants of the symmetric group on the base `B`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::module::{Action, FiModule};
use crate::combinat::{subset_inclusion, Injection};
use crate::error::{Error, Result};
use crate::exactla::{
    kernel_basis, rat, restricted_trace, unit, ChainComplex, Echelon, Quotient, Rational, RationalMatrix, SparseMatrix,
    SparseVec,
};

/// Sign of the map inserting a coordinate into a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SignRule {
    /// `(−1)^{#{y ∈ S : y < x}}`.
    Koszul,
    /// Total complex of the double cube split after `outer` coordinates: outer insertions
    /// use the Koszul sign within the outer part, inner insertions the Koszul sign within
    /// the inner part twisted by the outer degree.
    Iterated { outer: usize },
}

/// Memoized factorizations of the maps used along edges.
pub(crate) struct Actions<'a> {
    module: &'a FiModule,
    cache: HashMap<Injection, Action<'a>>,
}

impl<'a> Actions<'a> {
    pub(crate) fn new(module: &'a FiModule) -> Self {
        Actions { module, cache: HashMap::new() }
    }

    pub(crate) fn apply(&mut self, f: &Injection, v: &SparseVec) -> SparseVec {
        let module = self.module;
        self.cache
            .entry(f.clone())
            .or_insert_with(|| module.action(f).expect("cube stays inside the window"))
            .apply(v)
    }
}

pub(crate) struct Cube<'a> {
    module: &'a FiModule,
    coords: Vec<usize>,
    base: Vec<usize>,
    rule: SignRule,
}

impl<'a> Cube<'a> {
    /// Coordinates and base are disjoint sets of labels; the vertex `S` carries
    /// `E(sorted(S ∪ base))`.
    pub(crate) fn new(module: &'a FiModule, coords: Vec<usize>, base: Vec<usize>, rule: SignRule) -> Result<Self> {
        module.check_degree("cube", coords.len() + base.len())?;
        if coords.len() >= 31 {
            return Err(Error::Domain { op: "cube", detail: format!("{} coordinates", coords.len()) });
        }
        Ok(Cube { module, coords, base, rule })
    }

    pub(crate) fn dim(&self) -> usize {
        self.coords.len()
    }

    fn full(&self) -> u32 {
        (1u32 << self.dim()) - 1
    }

    fn size(&self, mask: u32) -> usize {
        mask.count_ones() as usize + self.base.len()
    }

    fn labels(&self, mask: u32) -> Vec<usize> {
        let mut l: Vec<usize> =
            self.coords.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
        l.extend_from_slice(&self.base);
        l.sort_unstable();
        l
    }

    fn negative(&self, mask: u32, x: usize) -> bool {
        let below = |lo: usize, hi: usize| (lo..hi.min(x)).filter(|&y| mask >> y & 1 == 1).count();
        match self.rule {
            SignRule::Koszul => below(0, x) % 2 == 1,
            SignRule::Iterated { outer } if x < outer => below(0, outer) % 2 == 1,
            SignRule::Iterated { outer } => {
                let outer_size = (0..outer).filter(|&y| mask >> y & 1 == 1).count();
                (below(outer, x) + outer - outer_size) % 2 == 1
            }
        }
    }

    fn edge(&self, mask: u32, x: usize) -> Injection {
        subset_inclusion(&self.labels(mask), &self.labels(mask | 1 << x))
    }

    /// Vertices in homological degree `j` (those with `dim − j` coordinates), ascending.
    fn layout(&self) -> Vec<Vec<u32>> {
        let c = self.dim();
        let mut layout = vec![Vec::new(); c + 1];
        for mask in 0..=self.full() {
            layout[c - mask.count_ones() as usize].push(mask);
        }
        layout
    }

    fn vertex_spaces(&self, coinvariants: bool) -> HashMap<u32, Space> {
        (0..=self.full())
            .map(|mask| {
                let d = self.module.dim(self.size(mask));
                let space = if coinvariants {
                    Space::Coinvariants(self.coinvariants(mask).quotient())
                } else {
                    Space::Full(d)
                };
                (mask, space)
            })
            .collect()
    }

    /// Relations `v − s v` for the adjacent transpositions of the base positions.
    fn coinvariants(&self, mask: u32) -> Echelon {
        let size = self.size(mask);
        let first = mask.count_ones() as usize;
        let labels = self.labels(mask);
        assert!(
            labels[first..] == self.base[..],
            "coinvariants need the base labels above every coordinate label"
        );
        let mut e = Echelon::new(self.module.dim(size));
        for j in first + 1..size {
            let s = self.module.generator(size, j);
            for b in 0..self.module.dim(size) {
                let mut v = s.column(b).clone();
                crate::exactla::add_scaled(&mut v, &rat(-1), &unit(b));
                e.insert(v);
            }
        }
        e
    }

    /// The total complex, with `E(all coordinates ∪ base)` in degree 0.
    pub(crate) fn total_complex(&self) -> Result<ChainComplex> {
        Ok(self.assemble(self.vertex_spaces(false))?.complex)
    }

    /// The total complex of base-coinvariants.
    pub(crate) fn coinvariant_complex(&self) -> Result<Totalization> {
        self.assemble(self.vertex_spaces(true))
    }

    fn assemble(&self, spaces: HashMap<u32, Space>) -> Result<Totalization> {
        let layout = self.layout();
        let mut offsets = HashMap::new();
        let mut dims = Vec::with_capacity(layout.len());
        for masks in &layout {
            let mut acc = 0;
            for &m in masks {
                offsets.insert(m, acc);
                acc += spaces[&m].dim();
            }
            dims.push(acc);
        }
        let mut actions = Actions::new(self.module);
        let mut differentials = Vec::with_capacity(self.dim());
        for j in 0..self.dim() {
            let mut columns = Vec::with_capacity(dims[j + 1]);
            for &mask in &layout[j + 1] {
                let source = &spaces[&mask];
                for b in 0..source.dim() {
                    let v = source.lift(b);
                    let mut col = SparseVec::new();
                    for x in (0..self.dim()).filter(|&x| mask >> x & 1 == 0) {
                        let target = mask | 1 << x;
                        let image = spaces[&target].project(actions.apply(&self.edge(mask, x), &v));
                        let sign = if self.negative(mask, x) { rat(-1) } else { Rational::one() };
                        let shifted = image.into_iter().map(|(i, c)| (offsets[&target] + i, c)).collect();
                        crate::exactla::add_scaled(&mut col, &sign, &shifted);
                    }
                    columns.push(col);
                }
            }
            differentials.push(SparseMatrix::from_columns(dims[j], columns));
        }
        let complex = ChainComplex::new(dims, differentials)?;
        Ok(Totalization { complex, layout, offsets, spaces })
    }

    /// Matrix of the action of a permutation `σ` of the first `acted` coordinates on degree
    /// `j` of a totalization: `S ↦ σ(S)` through `E(π)`, with sign
    /// `sgn(σ) · sgn(σ|_{S ∩ acted})`, so that degree 0 carries `E(σ ⊔ id)` itself.
    pub(crate) fn action_matrix(&self, tot: &Totalization, sigma: &Injection, j: usize) -> RationalMatrix {
        let acted = sigma.source_size();
        let size = tot.complex.dims()[j];
        let mut m = RationalMatrix::zeros(size, size);
        let mut actions = Actions::new(self.module);
        let relabel: HashMap<usize, usize> = (0..acted).map(|i| (self.coords[i], self.coords[sigma.apply(i)])).collect();
        for &mask in &tot.layout[j] {
            let mut target = mask;
            for i in 0..acted {
                target &= !(1 << i);
            }
            for i in (0..acted).filter(|&i| mask >> i & 1 == 1) {
                target |= 1 << sigma.apply(i);
            }
            let from = self.labels(mask);
            let to = self.labels(target);
            let values: Vec<usize> = from
                .iter()
                .map(|l| {
                    let image = relabel.get(l).copied().unwrap_or(*l);
                    to.binary_search(&image).expect("relabelled vertex")
                })
                .collect();
            let pi = Injection::new(values, to.len()).expect("a permutation");
            let moved: Vec<usize> = (0..acted).filter(|&i| mask >> i & 1 == 1).map(|i| sigma.apply(i)).collect();
            let negative = (sigma.sign() * sequence_sign(&moved)) < 0;
            let source = &tot.spaces[&mask];
            for b in 0..source.dim() {
                let image = tot.spaces[&target].project(actions.apply(&pi, &source.lift(b)));
                for (i, c) in image {
                    let c = if negative { -c } else { c };
                    m.set(tot.offsets[&target] + i, tot.offsets[&mask] + b, c);
                }
            }
        }
        m
    }
}

/// Sign of the permutation sorting a sequence of distinct numbers.
fn sequence_sign(xs: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] > xs[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 { 1 } else { -1 }
}

pub(crate) enum Space {
    Full(usize),
    Coinvariants(Quotient),
}

impl Space {
    pub(crate) fn dim(&self) -> usize {
        match self {
            Space::Full(d) => *d,
            Space::Coinvariants(q) => q.dim(),
        }
    }

    /// An ambient vector representing local basis element `b`.
    pub(crate) fn lift(&self, b: usize) -> SparseVec {
        match self {
            Space::Full(_) => unit(b),
            Space::Coinvariants(q) => unit(q.representatives()[b]),
        }
    }

    pub(crate) fn project(&self, v: SparseVec) -> SparseVec {
        match self {
            Space::Full(_) => v,
            Space::Coinvariants(q) => q.coordinates(v),
        }
    }
}

/// A totalized cube together with the bookkeeping needed to act on it.
pub(crate) struct Totalization {
    pub(crate) complex: ChainComplex,
    layout: Vec<Vec<u32>>,
    offsets: HashMap<u32, usize>,
    spaces: HashMap<u32, Space>,
}

/// Per-degree Betti numbers and traces on homology of a chain map given degreewise.
pub(crate) struct HomologyTraces {
    cycles: Vec<RationalMatrix>,
    boundaries: Vec<RationalMatrix>,
}

impl HomologyTraces {
    pub(crate) fn new(c: &ChainComplex) -> Self {
        let n = c.dims().len();
        let mut cycles = Vec::with_capacity(n);
        let mut boundaries = Vec::with_capacity(n);
        for j in 0..n {
            let z = if j == 0 {
                RationalMatrix::identity(c.dims()[0])
            } else {
                kernel_basis(&c.differentials()[j - 1].to_dense())
            };
            let b = match c.differentials().get(j) {
                Some(d) => {
                    let mut e = Echelon::new(d.rows());
                    let cols: Vec<Vec<Rational>> = d
                        .columns()
                        .iter()
                        .filter(|col| e.insert((*col).clone()))
                        .map(|col| (0..d.rows()).map(|i| col.get(&i).cloned().unwrap_or_else(Rational::zero)).collect())
                        .collect();
                    RationalMatrix::from_columns(d.rows(), &cols)
                }
                None => RationalMatrix::zeros(c.dims()[j], 0),
            };
            cycles.push(z);
            boundaries.push(b);
        }
        HomologyTraces { cycles, boundaries }
    }

    pub(crate) fn betti(&self, j: usize) -> usize {
        self.cycles[j].cols() - self.boundaries[j].cols()
    }

    /// Trace on `H_j` of a map acting on degree `j` by `a`.
    pub(crate) fn trace(&self, j: usize, a: &RationalMatrix) -> Rational {
        let on = |basis: &RationalMatrix| {
            if basis.cols() == 0 {
                return Rational::zero();
            }
            restricted_trace(basis, &(a * basis)).expect("subspace is invariant under a chain map")
        };
        on(&self.cycles[j]) - on(&self.boundaries[j])
    }
}

impl Cube<'_> {
    /// Generators of the relations defining degree-0 homology of the coinvariant complex
    /// inside the ambient space of the top vertex: base-coinvariant relations together with
    /// the images of all edges into the top vertex.
    pub(crate) fn degree_zero_relations(&self) -> Vec<SparseVec> {
        let full = self.full();
        let size = self.size(full);
        let first = full.count_ones() as usize;
        let mut out = Vec::new();
        for j in first + 1..size {
            let s = self.module.generator(size, j);
            for b in 0..self.module.dim(size) {
                let mut v = s.column(b).clone();
                crate::exactla::add_scaled(&mut v, &rat(-1), &unit(b));
                if !v.is_empty() {
                    out.push(v);
                }
            }
        }
        let mut actions = Actions::new(self.module);
        for x in 0..self.dim() {
            let mask = full & !(1 << x);
            let f = self.edge(mask, x);
            for b in 0..self.module.dim(self.size(mask)) {
                let v = actions.apply(&f, &unit(b));
                if !v.is_empty() {
                    out.push(v);
                }
            }
        }
        out
    }

    pub(crate) fn degree_zero_quotient(&self) -> Quotient {
        let mut e = Echelon::new(self.module.dim(self.size(self.full())));
        for r in self.degree_zero_relations() {
            e.insert(r);
        }
        e.quotient()
    }
}
