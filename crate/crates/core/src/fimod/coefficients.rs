use std::fmt;

use super::cube::{Cube, HomologyTraces, SignRule};
use super::module::FiModule;
use crate::combinat::{conjugacy_class_word, enumerate_injections, Injection};
use crate::error::{Error, Result};
use crate::exactla::{homology, rank, unit, Quotient, Rational, RationalMatrix};
use crate::symrep::{decompose_class_function, partitions_of, ClassFunction, Partition, RepDecomposition};

/// The complex `ΔⁿE(k)`: the total complex of `S ↦ E(S ⊔ k)` over `S ⊆ n`, with
/// `E(n ⊔ k)` in degree 0 and the Koszul sign on insertions.
pub fn delta_complex(e: &FiModule, n: usize, k: usize) -> Result<crate::exactla::ChainComplex> {
    delta_cube(e, n, k)?.total_complex()
}

fn delta_cube(e: &FiModule, n: usize, k: usize) -> Result<Cube<'_>> {
    Cube::new(e, (0..n).collect(), (n..n + k).collect(), SignRule::Koszul)
}

fn iterated_cube(e: &FiModule, outer: usize, inner: usize, k: usize) -> Result<Cube<'_>> {
    let c = outer + inner;
    Cube::new(e, (0..c).collect(), (c..c + k).collect(), SignRule::Iterated { outer })
}

/// One homological degree of a Taylor coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientDegree {
    pub dimension: usize,
    pub character: ClassFunction,
}

/// A Taylor coefficient `C_nE` as a graded `S_n`-representation, together with the stage
/// `k` at which the colimit was read off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCoefficient {
    pub n: usize,
    pub degrees: Vec<CoefficientDegree>,
    pub stabilization_witness: usize,
}

impl GradedCoefficient {
    pub fn dimension(&self, degree: usize) -> usize {
        self.degrees.get(degree).map_or(0, |d| d.dimension)
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dimension).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.iter().all(|d| d.dimension == 0)
    }

    /// Whether all homology sits in degree 0.
    pub fn is_concentrated(&self) -> bool {
        self.degrees.iter().skip(1).all(|d| d.dimension == 0)
    }

    pub fn character(&self, degree: usize) -> ClassFunction {
        self.degrees.get(degree).map_or_else(|| ClassFunction::zero(self.n), |d| d.character.clone())
    }

    pub fn decomposition(&self, degree: usize) -> Result<RepDecomposition> {
        decompose_class_function(&self.character(degree))
    }
}

impl fmt::Display for GradedCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{} (stable at k = {}):", self.n, self.stabilization_witness)?;
        for (i, d) in self.degrees.iter().enumerate() {
            if d.dimension > 0 {
                match decompose_class_function(&d.character) {
                    Ok(r) => write!(f, " H_{i} = {r};")?,
                    Err(_) => write!(f, " H_{i} dim {};", d.dimension)?,
                }
            }
        }
        if self.is_zero() {
            write!(f, " 0")?;
        }
        Ok(())
    }
}

/// Everything the coefficient computations need to know about a family of cubes indexed
/// by the base size `k`.
struct Pipeline<'a> {
    module: &'a FiModule,
    /// Number of cube coordinates.
    coords: usize,
    /// `S_acted` permutes the first `acted` coordinates.
    acted: usize,
    make: Box<dyn Fn(usize) -> Result<Cube<'a>> + 'a>,
}

impl<'a> Pipeline<'a> {
    fn delta(e: &'a FiModule, n: usize) -> Self {
        Pipeline { module: e, coords: n, acted: n, make: Box::new(move |k| delta_cube(e, n, k)) }
    }

    fn iterated(e: &'a FiModule, outer: usize, inner: usize) -> Self {
        Pipeline {
            module: e,
            coords: outer + inner,
            acted: outer,
            make: Box::new(move |k| iterated_cube(e, outer, inner, k)),
        }
    }

    fn betti(&self, k: usize) -> Result<Vec<usize>> {
        let tot = (self.make)(k)?.coinvariant_complex()?;
        Ok(homology(&tot.complex, false)?.betti_numbers())
    }

    /// Whether the standard inclusion induces an isomorphism on degree-0 homology of the
    /// coinvariant complexes at `k` and `k + 1`.
    fn degree_zero_transition_is_iso(&self, k: usize) -> Result<bool> {
        let q0 = (self.make)(k)?.degree_zero_quotient();
        let q1 = (self.make)(k + 1)?.degree_zero_quotient();
        if q0.dim() != q1.dim() {
            return Ok(false);
        }
        let phi = transition(&q0, &q1, self.module, self.coords + k);
        Ok(rank(&phi) == q0.dim())
    }

    fn stabilize(&self, n_label: usize) -> Result<GradedCoefficient> {
        let k_start = self.module.generation_bound();
        let max = self.module.max_degree();
        if self.coords + k_start + 1 > max {
            return Err(Error::WindowTooSmall {
                op: "taylor_coefficient",
                detail: format!(
                    "needs degrees up to {} for two stages from k = {k_start}, window ends at {max}",
                    self.coords + k_start + 1
                ),
            });
        }
        let mut trajectory = Vec::new();
        let mut previous = self.betti(k_start)?;
        trajectory.push((k_start, previous.clone()));
        for k in k_start..max - self.coords {
            let next = self.betti(k + 1)?;
            trajectory.push((k + 1, next.clone()));
            if previous == next && self.degree_zero_transition_is_iso(k)? {
                return self.characters(k, &previous);
            }
            previous = next;
        }
        let trajectory = trajectory
            .iter()
            .map(|(k, b)| format!("k={k}: {b:?}"))
            .collect::<Vec<_>>()
            .join(", ");
        Err(Error::NotStabilized { n: n_label, trajectory })
    }

    fn characters(&self, k: usize, betti: &[usize]) -> Result<GradedCoefficient> {
        let cube = (self.make)(k)?;
        let tot = cube.coinvariant_complex()?;
        let traces = HomologyTraces::new(&tot.complex);
        let classes = partitions_of(self.acted);
        let mut degrees = Vec::with_capacity(betti.len());
        for (j, &b) in betti.iter().enumerate() {
            if traces.betti(j) != b {
                return Err(Error::InternalInconsistency {
                    op: "taylor_coefficient",
                    detail: format!("degree {j}: Betti number {} vs {b}", traces.betti(j)),
                });
            }
            let character = if b == 0 {
                ClassFunction::zero(self.acted)
            } else {
                let values = classes
                    .iter()
                    .map(|rho| {
                        let sigma = Injection::from_word(self.acted, &conjugacy_class_word(rho)).expect("class word");
                        traces.trace(j, &cube.action_matrix(&tot, &sigma, j))
                    })
                    .collect();
                ClassFunction::new(self.acted, values)?
            };
            if *character.degree() != Rational::from_integer(b.into()) {
                return Err(Error::InternalInconsistency {
                    op: "taylor_coefficient",
                    detail: format!("degree {j}: character degree {} vs dimension {b}", character.degree()),
                });
            }
            degrees.push(CoefficientDegree { dimension: b, character });
        }
        Ok(GradedCoefficient { n: self.acted, degrees, stabilization_witness: k })
    }
}

/// Matrix of the map between degree-0 quotients induced by the stored inclusion out of
/// degree `top`.
fn transition(q0: &Quotient, q1: &Quotient, e: &FiModule, top: usize) -> RationalMatrix {
    let inc = e.inclusion(top);
    let mut m = RationalMatrix::zeros(q1.dim(), q0.dim());
    for (col, &r) in q0.representatives().iter().enumerate() {
        for (i, x) in q1.coordinates(inc.apply(&unit(r))) {
            m.set(i, col, x);
        }
    }
    m
}

/// `C_nE = colim_k ΔⁿE(k)`, read off from base-coinvariants once two consecutive stages
/// from `k = generation_bound` agree in every degree and the transition is an isomorphism
/// in degree 0. The `S_n`-action in degree 0 is `E(σ ⊔ id_k)`.
pub fn taylor_coefficient(e: &FiModule, n: usize) -> Result<GradedCoefficient> {
    Pipeline::delta(e, n).stabilize(n)
}

/// `C_i(ΔⁿE)` and `C_{i+n}E` restricted to `S_i`, which should agree.
pub fn delta_coefficient_shift_check(
    e: &FiModule,
    n: usize,
    i: usize,
) -> Result<(GradedCoefficient, GradedCoefficient)> {
    let lhs = Pipeline::iterated(e, i, n).stabilize(i)?;
    let full = taylor_coefficient(e, i + n)?;
    let degrees = full
        .degrees
        .iter()
        .map(|d| {
            let character = ClassFunction::from_fn(i, |rho| {
                let mut parts = rho.parts().to_vec();
                parts.extend(std::iter::repeat(1).take(n));
                d.character.value(&Partition::from_unsorted(parts)).expect("class of S_{i+n}").clone()
            });
            CoefficientDegree { dimension: d.dimension, character }
        })
        .collect();
    let rhs = GradedCoefficient { n: i, degrees, stabilization_witness: full.stabilization_witness };
    Ok((lhs, rhs))
}

/// Degree-0 data of `ΔⁿE(k)`: the quotient of `E(n ⊔ k)` and its relation generators.
struct DegreeZero {
    quotient: Quotient,
    relations: Vec<crate::exactla::SparseVec>,
}

fn degree_zero(e: &FiModule, n: usize, k: usize) -> Result<DegreeZero> {
    let cube = delta_cube(e, n, k)?;
    Ok(DegreeZero { quotient: cube.degree_zero_quotient(), relations: cube.degree_zero_relations() })
}

/// `g_{f,k} = Σ_j E(f ⊔ j†)` as a map `E(n ⊔ k) → E(n' ⊔ k)`, where `j` runs over the
/// injections `n' ∖ f(n) → k` and `j†` sends `a ∈ k` to `j^{-1}(a)` if `a` is in the image
/// of `j` and to `n' + a` otherwise.
fn g_maps(f: &Injection, k: usize) -> Vec<Injection> {
    let (n, n2) = (f.source_size(), f.target_size());
    let mut hit = vec![false; n2];
    for &v in f.values() {
        hit[v] = true;
    }
    let complement: Vec<usize> = (0..n2).filter(|&v| !hit[v]).collect();
    enumerate_injections(complement.len(), k)
        .into_iter()
        .map(|j| {
            let mut values: Vec<usize> = f.values().to_vec();
            for a in 0..k {
                let v = match j.values().iter().position(|&x| x == a) {
                    Some(q) => complement[q],
                    None => n2 + a,
                };
                values.push(v);
            }
            debug_assert_eq!(values.len(), n + k);
            Injection::new(values, n2 + k).expect("an injection")
        })
        .collect()
}

fn transition_matrix(e: &FiModule, f: &Injection, k: usize, src: &DegreeZero, tgt: &DegreeZero) -> Result<RationalMatrix> {
    let actions: Vec<_> = g_maps(f, k).iter().map(|h| e.action(h)).collect::<Result<_>>()?;
    let apply = |v: &crate::exactla::SparseVec| {
        let mut acc = crate::exactla::SparseVec::new();
        for a in &actions {
            crate::exactla::add_scaled(&mut acc, &Rational::from_integer(1.into()), &a.apply(v));
        }
        acc
    };
    for r in &src.relations {
        if !tgt.quotient.relations().contains(&apply(r)) {
            return Err(Error::Instability {
                k,
                detail: format!("g_f for f = {:?} does not preserve the relations", f.values()),
            });
        }
    }
    let mut m = RationalMatrix::zeros(tgt.quotient.dim(), src.quotient.dim());
    for (col, &r) in src.quotient.representatives().iter().enumerate() {
        for (i, x) in tgt.quotient.coordinates(apply(&unit(r))) {
            m.set(i, col, x);
        }
    }
    Ok(m)
}

/// The map `C_nE → C_{n'}E` induced by `f : n → n'`, on degree-0 homology at stage `k`.
///
/// Checks that `g_{f,k}` respects the relations, and, when the window allows, that the
/// matrices at `k` and `k + 1` agree under the stage transitions.
pub fn coefficient_transition(e: &FiModule, f: &Injection, k: usize) -> Result<RationalMatrix> {
    let (n, n2) = (f.source_size(), f.target_size());
    e.check_degree("coefficient_transition", n2 + k)?;
    let src = degree_zero(e, n, k)?;
    let tgt = degree_zero(e, n2, k)?;
    let m = transition_matrix(e, f, k, &src, &tgt)?;
    if n2 + k < e.max_degree() {
        let src1 = degree_zero(e, n, k + 1)?;
        let tgt1 = degree_zero(e, n2, k + 1)?;
        let m1 = transition_matrix(e, f, k + 1, &src1, &tgt1)?;
        let phi_src = transition(&src.quotient, &src1.quotient, e, n + k);
        let phi_tgt = transition(&tgt.quotient, &tgt1.quotient, e, n2 + k);
        if &m1 * &phi_src != &phi_tgt * &m {
            return Err(Error::Instability {
                k,
                detail: format!("g_f for f = {:?} changes between stages {k} and {}", f.values(), k + 1),
            });
        }
    }
    Ok(m)
}

/// The Taylor data of a module: `C_0E, …, C_NE` and the degree-0 maps induced by the
/// standard inclusions `n → n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientProfile {
    pub coefficients: Vec<GradedCoefficient>,
    pub transition_data: Vec<RationalMatrix>,
}

impl CoefficientProfile {
    pub fn empty() -> Self {
        CoefficientProfile { coefficients: Vec::new(), transition_data: Vec::new() }
    }

    /// Largest `n` with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.iter().rev().find(|c| !c.is_zero()).map(|c| c.n)
    }
}

/// Coefficients up to `max_n` (by default the generation bound).
pub fn coefficient_profile(e: &FiModule, max_n: Option<usize>) -> Result<CoefficientProfile> {
    let top = max_n.unwrap_or(e.generation_bound());
    let coefficients = (0..=top).map(|n| taylor_coefficient(e, n)).collect::<Result<Vec<_>>>()?;
    let mut transition_data = Vec::with_capacity(top);
    for n in 0..top {
        let k = coefficients[n].stabilization_witness.max(coefficients[n + 1].stabilization_witness);
        let f = Injection::standard(n, n + 1)?;
        let m = coefficient_transition(e, &f, k)?;
        transition_data.push(m);
    }
    Ok(CoefficientProfile { coefficients, transition_data })
}
