use std::collections::BTreeMap;
use std::fmt;

use super::coefficients::CoefficientProfile;
use super::module::FiModule;
use crate::combinat::{conjugacy_class_word, Injection};
use crate::error::{Error, Result};
use crate::exactla::{unit, Rational};
use crate::symrep::{decompose_class_function, ClassFunction, Partition, RepDecomposition};

/// `E(k)` as an `S_k`-representation, from traces of conjugacy-class words.
pub fn stable_decomposition(e: &FiModule, k: usize) -> Result<RepDecomposition> {
    e.check_degree("stable_decomposition", k)?;
    let d = e.dim(k);
    let chi = ClassFunction::from_fn(k, |rho| {
        let sigma = Injection::from_word(k, &conjugacy_class_word(rho)).expect("class word");
        let a = e.action(&sigma).expect("degree checked");
        (0..d).fold(Rational::from_integer(0.into()), |acc, b| acc + a.apply(&unit(b)).get(&b).cloned().unwrap_or_default())
    });
    decompose_class_function(&chi)
}

/// The decomposition of `E(k)` predicted by the coefficients:
/// `⊕_n ⊕_{μ ⊢ n} mult_μ(C_nE) · V(μ[k])`, valid for `k ≥ 2N`.
pub fn dictionary_prediction(profile: &CoefficientProfile, k: usize) -> Result<RepDecomposition> {
    if let Some(c) = profile.coefficients.iter().find(|c| !c.is_concentrated()) {
        return Err(Error::DictionaryInapplicable { n: c.n });
    }
    let mut out = RepDecomposition::new(k);
    let Some(top) = profile.degree() else {
        return Ok(out);
    };
    if k < 2 * top {
        return Err(Error::OutOfStableRange { op: "dictionary_prediction", k, required: 2 * top });
    }
    for c in &profile.coefficients {
        for (mu, &m) in &c.decomposition(0)?.multiplicities {
            out.add(mu.padded(k).expect("k ≥ 2|μ| ≥ μ₁ + |μ|"), m);
        }
    }
    Ok(out)
}

/// Multiplicities of `V(μ[k])` as `k` varies, keyed by `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub module: String,
    pub k_min: usize,
    pub patterns: Vec<(usize, BTreeMap<Partition, u64>)>,
    /// First `k` from which the pattern no longer changes inside the window.
    pub stable_from: Option<usize>,
}

impl StabilityReport {
    /// Whether the pattern is constant on the whole tested range.
    pub fn is_stable_on_range(&self) -> bool {
        self.patterns.is_empty() || self.stable_from == Some(self.k_min)
    }

    pub fn stable_pattern(&self) -> Option<&BTreeMap<Partition, u64>> {
        self.patterns.last().map(|(_, p)| p)
    }

    pub fn trajectories(&self) -> BTreeMap<Partition, Vec<(usize, u64)>> {
        let mut out: BTreeMap<Partition, Vec<(usize, u64)>> = BTreeMap::new();
        for (_, pattern) in &self.patterns {
            for mu in pattern.keys() {
                out.entry(mu.clone()).or_default();
            }
        }
        for (k, pattern) in &self.patterns {
            for (mu, traj) in out.iter_mut() {
                traj.push((*k, pattern.get(mu).copied().unwrap_or(0)));
            }
        }
        out
    }
}

impl fmt::Display for StabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.stable_from {
            Some(k) => write!(f, "{}: stable from k = {k}", self.module)?,
            None => write!(f, "{}: empty range", self.module)?,
        }
        if let Some(p) = self.stable_pattern() {
            let terms: Vec<String> = p.iter().map(|(mu, m)| if *m == 1 { format!("V{mu}[k]") } else { format!("{m}·V{mu}[k]") }).collect();
            write!(f, ", pattern {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") })?;
        }
        Ok(())
    }
}

/// Tracks `mult(λ[k])` in `E(k)` for `k_min ≤ k ≤ K`, identifying `λ[k]` with `λ`'s tail.
pub fn representation_stability_check(e: &FiModule, k_min: usize) -> Result<StabilityReport> {
    let mut patterns = Vec::new();
    for k in k_min..=e.max_degree() {
        let d = stable_decomposition(e, k)?;
        let pattern: BTreeMap<Partition, u64> = d.multiplicities.iter().map(|(l, &m)| (l.tail(), m)).collect();
        patterns.push((k, pattern));
    }
    let stable_from = patterns.last().map(|(_, last)| {
        let mut from = patterns.last().expect("nonempty").0;
        for (k, p) in patterns.iter().rev() {
            if p != last {
                break;
            }
            from = *k;
        }
        from
    });
    Ok(StabilityReport { module: e.name().to_string(), k_min, patterns, stable_from })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fimod::{coefficient_profile, free_module, representable};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn decompositions() {
        let f1 = representable(1, 6);
        for k in 2..=6 {
            let d = stable_decomposition(&f1, k).unwrap();
            assert_eq!(d.multiplicities, BTreeMap::from([(p(&[k]), 1), (p(&[k - 1, 1]), 1)]));
        }
        let m = free_module(&p(&[1, 1]), 6).unwrap();
        for k in 4..=6 {
            let d = stable_decomposition(&m, k).unwrap();
            assert_eq!(d.multiplicities, BTreeMap::from([(p(&[k - 1, 1]), 1), (p(&[k - 2, 1, 1]), 1)]));
        }
        assert!(stable_decomposition(&FiModule::zero(3), 3).unwrap().is_zero());
    }

    #[test]
    fn predictions() {
        let f1 = representable(1, 6);
        let prof = coefficient_profile(&f1, None).unwrap();
        for k in 2..=6 {
            assert_eq!(dictionary_prediction(&prof, k).unwrap(), stable_decomposition(&f1, k).unwrap());
        }
        assert!(dictionary_prediction(&prof, 1).is_err());
        let m = free_module(&p(&[1, 1]), 7).unwrap();
        let prof = coefficient_profile(&m, None).unwrap();
        assert!(prof.coefficients[0].is_zero());
        assert_eq!(prof.coefficients[1].dimensions(), vec![1, 0]);
        for k in 4..=7 {
            let d = dictionary_prediction(&prof, k).unwrap();
            assert_eq!(d.multiplicities, BTreeMap::from([(p(&[k - 1, 1]), 1), (p(&[k - 2, 1, 1]), 1)]));
        }
        assert!(dictionary_prediction(&CoefficientProfile::empty(), 3).unwrap().is_zero());
    }

    #[test]
    fn stability() {
        let m = free_module(&p(&[2]), 7).unwrap();
        let r = representation_stability_check(&m, 4).unwrap();
        assert!(r.is_stable_on_range());
        assert_eq!(r.stable_from, Some(4));
        assert_eq!(
            r.stable_pattern().unwrap(),
            &BTreeMap::from([(Partition::empty(), 1), (p(&[1]), 1), (p(&[2]), 1)])
        );
        let f2 = representable(2, 7);
        let r = representation_stability_check(&f2, 4).unwrap();
        assert!(r.is_stable_on_range());
        assert!(r.stable_pattern().unwrap().keys().all(|mu| mu.size() <= 2));
        let r = representation_stability_check(&f2, 1).unwrap();
        assert_eq!(r.stable_from, Some(4));
        let z = representation_stability_check(&FiModule::zero(3), 1).unwrap();
        assert!(z.is_stable_on_range());
        assert_eq!(r.trajectories()[&Partition::empty()].len(), 7);
    }
}
