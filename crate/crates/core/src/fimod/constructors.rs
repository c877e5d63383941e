use std::collections::HashMap;

use super::module::FiModule;
use crate::combinat::{combinations, enumerate_injections, falling_factorial, Injection};
use crate::error::Result;
use crate::exactla::{unit, RationalMatrix, SparseMatrix, SparseVec};
use crate::symrep::{specht_dimension, specht_matrices, Partition};

/// Assembles a module from the action of each injection on basis vectors:
/// `act(f, b)` is `E(f) e_b` for `f` with source `k` and `b < dims[k]`.
fn from_action(
    name: String,
    generation_bound: usize,
    dims: Vec<usize>,
    act: impl Fn(&Injection, usize) -> SparseVec,
) -> FiModule {
    let max = dims.len() - 1;
    let matrix = |f: &Injection| {
        let cols = (0..dims[f.source_size()]).map(|b| act(f, b)).collect();
        SparseMatrix::from_columns(dims[f.target_size()], cols)
    };
    let transpositions = (0..=max)
        .map(|k| (1..k).map(|i| matrix(&Injection::from_word(k, &[i]).expect("valid letter"))).collect())
        .collect();
    let inclusions = (0..max).map(|k| matrix(&Injection::standard(k, k + 1).expect("k ≤ k + 1"))).collect();
    FiModule::new(name, generation_bound, dims, transpositions, inclusions).expect("constructed with consistent shapes")
}

/// `ℚF_n`, with `ℚF_n(k)` spanned by the injections `n → k` in lexicographic order; FI acts
/// by postcomposition.
pub fn representable(n: usize, max_degree: usize) -> FiModule {
    let bases: Vec<Vec<Injection>> = (0..=max_degree).map(|k| enumerate_injections(n, k)).collect();
    let index: Vec<HashMap<Vec<usize>, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, f)| (f.values().to_vec(), i)).collect())
        .collect();
    let dims = (0..=max_degree).map(|k| falling_factorial(k, n) as usize).collect();
    from_action(format!("QF{n}"), n, dims, |g, b| {
        let f = &bases[g.source_size()][b];
        let image: Vec<usize> = f.values().iter().map(|&v| g.apply(v)).collect();
        unit(index[g.target_size()][&image])
    })
}

/// The free module `M(V(λ))`, with `M(V(λ))_k = ℚ[FI(n,k)] ⊗_{S_n} V(λ)`.
///
/// The basis of degree `k` is indexed by pairs (n-subset `A ⊆ k` in lexicographic order,
/// standard tableau of shape `λ`), at position `index(A) · f^λ + t`. An injection `g` sends
/// `(A, v)` to `(g(A), ρ(π) v)`, where `π` records where `g` moves the elements of `A`
/// relative to the sorted image.
pub fn free_module(lambda: &Partition, max_degree: usize) -> Result<FiModule> {
    let n = lambda.size();
    let f = specht_dimension(lambda) as usize;
    let generators = specht_matrices(lambda);
    let mut rho: HashMap<Vec<usize>, RationalMatrix> = HashMap::new();
    for pi in enumerate_injections(n, n) {
        let m = pi.word().iter().fold(RationalMatrix::identity(f), |acc, &i| &acc * &generators[i - 1]);
        rho.insert(pi.values().to_vec(), m);
    }
    let subsets: Vec<Vec<Vec<usize>>> = (0..=max_degree).map(|k| combinations(k, n)).collect();
    let index: Vec<HashMap<Vec<usize>, usize>> = subsets
        .iter()
        .map(|s| s.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect())
        .collect();
    let dims = subsets.iter().map(|s| s.len() * f).collect();
    Ok(from_action(format!("M(V{lambda})"), n, dims, |g, b| {
        let a = &subsets[g.source_size()][b / f];
        let t = b % f;
        let image: Vec<usize> = a.iter().map(|&x| g.apply(x)).collect();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        let pi: Vec<usize> = image.iter().map(|y| sorted.binary_search(y).expect("present")).collect();
        let offset = index[g.target_size()][&sorted] * f;
        let m = &rho[&pi];
        (0..f).filter(|&r| !num_traits::Zero::is_zero(m.get(r, t))).map(|r| (offset + r, m.get(r, t).clone())).collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fimod::module::validate;
    use crate::exactla::rat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn representable_dims_and_validity() {
        let e = representable(2, 4);
        assert_eq!(e.dims(), &[0, 0, 2, 6, 12]);
        assert!(validate(&e).is_valid());
        let c = representable(0, 4);
        assert_eq!(c.dims(), &[1, 1, 1, 1, 1]);
        for k in 0..4 {
            assert_eq!(c.inclusion(k), &SparseMatrix::identity(1));
        }
        assert!(validate(&c).is_valid());
        assert!(validate(&representable(2, 5)).is_valid());
    }

    #[test]
    fn free_module_dims_and_validity() {
        assert_eq!(free_module(&p(&[1, 1]), 4).unwrap().dims(), &[0, 0, 1, 3, 6]);
        assert_eq!(free_module(&p(&[2]), 4).unwrap().dims(), &[0, 0, 1, 3, 6]);
        assert_eq!(free_module(&p(&[1]), 5).unwrap().dims(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(free_module(&Partition::empty(), 3).unwrap().dims(), &[1, 1, 1, 1]);
        for lam in [p(&[2, 1]), p(&[1, 1]), p(&[3]), p(&[2, 2])] {
            let e = free_module(&lam, 6).unwrap();
            let r = validate(&e);
            assert!(r.is_valid(), "{r}");
        }
    }

    #[test]
    fn sign_module_in_degree_two() {
        let e = free_module(&p(&[1, 1]), 3).unwrap();
        assert_eq!(e.generator(2, 1).get(0, 0), rat(-1));
    }
}
