use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::{compose, factor_injection, Injection};
use crate::error::{Error, Result};
use crate::exactla::{unit, SparseMatrix, SparseVec};

/// A finitely presented FI-module on the window `[0..K]`.
///
/// Degree `k` carries `ℚ^{d_k}` with the matrices of `s_1, …, s_{k−1}` (where `s_i` swaps
/// `i − 1` and `i`) and the map induced by the standard inclusion `k → k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiModule {
    name: String,
    generation_bound: usize,
    dims: Vec<usize>,
    transpositions: Vec<Vec<SparseMatrix>>,
    inclusions: Vec<SparseMatrix>,
}

impl FiModule {
    /// Checks shapes only; the relations are checked by [`validate`].
    ///
    /// `transpositions[k]` holds the `k − 1` generator matrices of degree `k` (empty for
    /// `k < 2`) and `inclusions[k]` is `d_{k+1} × d_k`.
    pub fn new(
        name: impl Into<String>,
        generation_bound: usize,
        dims: Vec<usize>,
        transpositions: Vec<Vec<SparseMatrix>>,
        inclusions: Vec<SparseMatrix>,
    ) -> Result<Self> {
        let shape = |detail: String| Err(Error::ShapeMismatch { op: "FI-module", detail });
        if dims.is_empty() {
            return shape("at least degree 0 is required".into());
        }
        let max = dims.len() - 1;
        if transpositions.len() != dims.len() || inclusions.len() != max {
            return shape(format!(
                "{} degrees, {} generator lists, {} inclusions",
                dims.len(),
                transpositions.len(),
                inclusions.len()
            ));
        }
        for (k, gens) in transpositions.iter().enumerate() {
            if gens.len() != k.saturating_sub(1) {
                return shape(format!("degree {k} has {} generators, expected {}", gens.len(), k.saturating_sub(1)));
            }
            for (i, m) in gens.iter().enumerate() {
                if m.rows() != dims[k] || m.cols() != dims[k] {
                    return shape(format!("s_{} in degree {k} is {}x{}, expected {}x{}", i + 1, m.rows(), m.cols(), dims[k], dims[k]));
                }
            }
        }
        for (k, m) in inclusions.iter().enumerate() {
            if m.rows() != dims[k + 1] || m.cols() != dims[k] {
                return shape(format!(
                    "inclusion {k} → {} is {}x{}, expected {}x{}",
                    k + 1,
                    m.rows(),
                    m.cols(),
                    dims[k + 1],
                    dims[k]
                ));
            }
        }
        Ok(FiModule { name: name.into(), generation_bound, dims, transpositions, inclusions })
    }

    /// The zero module on `[0..K]`.
    pub fn zero(max_degree: usize) -> Self {
        let dims = vec![0; max_degree + 1];
        let transpositions = (0..=max_degree).map(|k| vec![SparseMatrix::zeros(0, 0); k.saturating_sub(1)]).collect();
        let inclusions = vec![SparseMatrix::zeros(0, 0); max_degree];
        FiModule { name: "0".into(), generation_bound: 0, dims, transpositions, inclusions }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn generation_bound(&self) -> usize {
        self.generation_bound
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims[k]
    }

    /// The matrix of `s_i` (`1 ≤ i < k`) in degree `k`.
    pub fn generator(&self, k: usize, i: usize) -> &SparseMatrix {
        &self.transpositions[k][i - 1]
    }

    pub fn transpositions(&self, k: usize) -> &[SparseMatrix] {
        &self.transpositions[k]
    }

    /// The map `E(k) → E(k + 1)` of the standard inclusion.
    pub fn inclusion(&self, k: usize) -> &SparseMatrix {
        &self.inclusions[k]
    }

    pub(crate) fn check_degree(&self, op: &'static str, degree: usize) -> Result<()> {
        if degree > self.max_degree() {
            return Err(Error::OutOfWindow { op, degree, max_degree: self.max_degree() });
        }
        Ok(())
    }

    /// `E(f)` as a sparse matrix, via `f = σ ∘ ι`.
    pub fn evaluate(&self, f: &Injection) -> Result<SparseMatrix> {
        let action = self.action(f)?;
        let cols = (0..self.dims[f.source_size()]).map(|j| action.apply(&unit(j))).collect();
        Ok(SparseMatrix::from_columns(self.dims[f.target_size()], cols))
    }

    /// `E(f)` applied to a single vector.
    pub fn apply(&self, f: &Injection, v: &SparseVec) -> Result<SparseVec> {
        Ok(self.action(f)?.apply(v))
    }

    pub(crate) fn action(&self, f: &Injection) -> Result<Action<'_>> {
        self.check_degree("evaluate", f.target_size())?;
        let (sigma, steps) = factor_injection(f);
        let mut word = sigma.word();
        word.reverse();
        Ok(Action { module: self, from: f.source_size(), steps, word })
    }
}

/// A factored `E(f)`, reusable across many vectors.
pub(crate) struct Action<'a> {
    module: &'a FiModule,
    from: usize,
    steps: usize,
    /// Letters in application order.
    word: Vec<usize>,
}

impl Action<'_> {
    pub(crate) fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut w = v.clone();
        for d in self.from..self.from + self.steps {
            w = self.module.inclusions[d].apply(&w);
        }
        let top = self.from + self.steps;
        for &i in &self.word {
            w = self.module.transpositions[top][i - 1].apply(&w);
        }
        w
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    Involution,
    Braid,
    Commutation,
    Equivariance,
    Stabilizer,
    Functoriality,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::Involution => "s_i^2 = 1",
            ViolationKind::Braid => "braid relation",
            ViolationKind::Commutation => "commutation relation",
            ViolationKind::Equivariance => "equivariance of the inclusion",
            ViolationKind::Stabilizer => "stabilizer of the image",
            ViolationKind::Functoriality => "functoriality",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub degree: usize,
    pub generator: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails in degree {}", self.kind, self.degree)?;
        if let Some(i) = self.generator {
            write!(f, " at s_{i}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub module: String,
    pub samples: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "{}: valid ({} functoriality samples)", self.module, self.samples);
        }
        writeln!(f, "{}: {} violation(s)", self.module, self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

pub const DEFAULT_SAMPLES: usize = 48;
pub const DEFAULT_SEED: u64 = 0x5eed_f1;

/// Checks the Coxeter relations, equivariance and stabilizer relations of the inclusions,
/// and functoriality on a deterministic sample of composable pairs.
pub fn validate(e: &FiModule) -> ValidationReport {
    validate_with(e, DEFAULT_SEED, DEFAULT_SAMPLES)
}

pub fn validate_with(e: &FiModule, seed: u64, samples: usize) -> ValidationReport {
    let mut violations = Vec::new();
    let mut push = |kind, degree, generator, detail: String| {
        violations.push(Violation { kind, degree, generator, detail });
    };
    let mul = |a: &SparseMatrix, b: &SparseMatrix| a.checked_mul(b).expect("shapes checked at construction");
    for k in 0..=e.max_degree() {
        let gens = e.transpositions(k);
        let id = SparseMatrix::identity(e.dim(k));
        for i in 0..gens.len() {
            if mul(&gens[i], &gens[i]) != id {
                push(ViolationKind::Involution, k, Some(i + 1), String::new());
            }
            if i + 1 < gens.len() {
                let l = mul(&mul(&gens[i], &gens[i + 1]), &gens[i]);
                let r = mul(&mul(&gens[i + 1], &gens[i]), &gens[i + 1]);
                if l != r {
                    push(ViolationKind::Braid, k, Some(i + 1), format!("with s_{}", i + 2));
                }
            }
            for j in i + 2..gens.len() {
                if mul(&gens[i], &gens[j]) != mul(&gens[j], &gens[i]) {
                    push(ViolationKind::Commutation, k, Some(i + 1), format!("with s_{}", j + 1));
                }
            }
        }
        if k < e.max_degree() {
            let inc = e.inclusion(k);
            for (i, g) in gens.iter().enumerate() {
                if mul(inc, g) != mul(e.generator(k + 1, i + 1), inc) {
                    push(ViolationKind::Equivariance, k, Some(i + 1), String::new());
                }
            }
        }
        if k + 2 <= e.max_degree() {
            let two = mul(e.inclusion(k + 1), e.inclusion(k));
            if mul(e.generator(k + 2, k + 1), &two) != two {
                push(ViolationKind::Stabilizer, k + 2, Some(k + 1), format!("image of degree {k}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let c = rng.gen_range(0..=e.max_degree());
        let b = rng.gen_range(0..=c);
        let a = rng.gen_range(0..=b);
        let f = random_injection(&mut rng, a, b);
        let g = random_injection(&mut rng, b, c);
        let gf = compose(&g, &f).expect("composable by construction");
        let lhs = e.evaluate(&gf).expect("inside the window");
        let rhs = mul(&e.evaluate(&g).expect("inside the window"), &e.evaluate(&f).expect("inside the window"));
        if lhs != rhs {
            push(ViolationKind::Functoriality, c, None, format!("g = {:?}, f = {:?}", g.values(), f.values()));
        }
    }
    ValidationReport { module: e.name().to_string(), samples, violations }
}

fn random_injection(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Injection {
    let mut values: Vec<usize> = (0..k).collect();
    values.shuffle(rng);
    values.truncate(n);
    Injection::new(values, k).expect("distinct values")
}
