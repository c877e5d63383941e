use super::partition::{partitions_of, Partition};
use super::tableau::{kostka_content, specht_dimension};
use crate::combinat::{binomial, falling_factorial};
use crate::error::{Error, Result};

/// `λ[k] = (k − |λ|, λ)` together with `k`; exists only when `k ≥ λ₁ + |λ|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PaddedPartition {
    lambda: Partition,
    k: usize,
    padded: Partition,
}

impl PaddedPartition {
    pub fn new(lambda: Partition, k: usize) -> Result<Self> {
        let padded = lambda.padded(k).ok_or_else(|| Error::Domain {
            op: "padded partition",
            detail: format!("{lambda}[{k}] needs k ≥ {}", lambda.first() + lambda.size()),
        })?;
        Ok(PaddedPartition { lambda, k, padded })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partition(&self) -> &Partition {
        &self.padded
    }

    /// `w(λ[k]) = |λ|`.
    pub fn weight(&self) -> usize {
        self.padded.weight()
    }
}

/// `dim V(λ[k])`, taken to be zero when `λ[k]` is not a partition.
pub fn padded_dimension(lambda: &Partition, k: usize) -> u128 {
    lambda.padded(k).map_or(0, |p| specht_dimension(&p))
}

fn hook_content(k: usize, i: usize) -> Vec<usize> {
    let mut mu = vec![k - i];
    mu.extend(std::iter::repeat(1).take(i));
    mu
}

/// `χ_λ(ℚG_n(k)) = Σ_i (−1)^{n−i} C(n,i) K_{λ,(k−i,1^i)}` for `λ ⊢ k`, `k ≥ 2n`.
pub fn gn_character(n: usize, k: usize, lambda: &Partition) -> Result<i64> {
    if lambda.size() != k {
        return Err(Error::SizeMismatch { op: "gn_character", detail: format!("{lambda} is not a partition of {k}") });
    }
    if k < 2 * n {
        return Err(Error::OutOfStableRange { op: "gn_character", k, required: 2 * n });
    }
    let mut total: i64 = 0;
    for i in 0..=n {
        let term = binomial(n, i) as i64 * kostka_content(lambda, &hook_content(k, i)) as i64;
        total += if (n - i) % 2 == 0 { term } else { -term };
    }
    Ok(total)
}

/// `dim ℚG_n(k)` for `k ≥ 2n − 1`, computed as `Σ_{λ⊢n} f^λ dim V(λ[k])` and as the
/// alternating sum `Σ_i (−1)^{n−i} C(n,i) k!/(k−i)!`.
pub fn gn_dimension(n: usize, k: usize) -> Result<u128> {
    if k + 1 < 2 * n {
        return Err(Error::OutOfStableRange { op: "gn_dimension", k, required: (2 * n).saturating_sub(1) });
    }
    let by_partitions: u128 = partitions_of(n).iter().map(|l| specht_dimension(l) * padded_dimension(l, k)).sum();
    let mut alternating: i128 = 0;
    for i in 0..=n.min(k) {
        let term = (binomial(n, i) * falling_factorial(k, i)) as i128;
        alternating += if (n - i) % 2 == 0 { term } else { -term };
    }
    if alternating != by_partitions as i128 {
        return Err(Error::InternalInconsistency {
            op: "gn_dimension",
            detail: format!("n = {n}, k = {k}: {by_partitions} vs {alternating}"),
        });
    }
    Ok(by_partitions)
}

/// Both sides of `K_{λ,(k−i,1^i)} = C(i, λ₁−k+i) · K_{λ', 1^{w(λ)}}`, where `λ ⊢ k` and `λ'`
/// is `λ` without its first row. Requires `i ≤ λ₁`.
pub fn kostka_reduction(lambda: &Partition, i: usize) -> Result<(u64, u64)> {
    let k = lambda.size();
    if i > k || i > lambda.first() {
        return Err(Error::Domain {
            op: "kostka_reduction",
            detail: format!("needs i ≤ λ₁, got i = {i} for λ = {lambda}"),
        });
    }
    let lhs = kostka_content(lambda, &hook_content(k, i));
    let rhs = match (lambda.first() + i).checked_sub(k) {
        Some(j) => binomial(i, j) as u64 * kostka_content(&lambda.tail(), &vec![1; lambda.weight()]),
        None => 0,
    };
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrep::kostka;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn gn_character_examples() {
        assert_eq!(gn_character(2, 4, &p(&[3, 1])).unwrap(), 0);
        let expected = kostka(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap() as i64;
        assert_eq!(gn_character(2, 4, &p(&[2, 2])).unwrap(), expected);
        for k in 0..6 {
            assert_eq!(gn_character(0, k, &Partition::single_row(k)).unwrap(), 1);
        }
        assert!(matches!(gn_character(2, 3, &p(&[2, 1])), Err(Error::OutOfStableRange { .. })));
        assert!(gn_character(1, 3, &p(&[2])).is_err());
    }

    #[test]
    fn weight_concentration() {
        for n in 0..=3 {
            for k in 2 * n..=8 {
                for l in partitions_of(k) {
                    let v = gn_character(n, k, &l).unwrap();
                    if l.weight() == n {
                        assert_eq!(v, kostka(&l, &Partition::hook(k - n, n)).unwrap() as i64);
                    } else {
                        assert_eq!(v, 0, "n={n} k={k} λ={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn gn_dimension_examples() {
        assert_eq!(gn_dimension(1, 3).unwrap(), 2);
        assert_eq!(gn_dimension(2, 4).unwrap(), 5);
        assert_eq!(gn_dimension(3, 5).unwrap(), 14);
        assert_eq!(gn_dimension(0, 0).unwrap(), 1);
        assert_eq!(gn_dimension(2, 3).unwrap(), 1);
        assert!(gn_dimension(3, 4).is_err());
        for n in 0..=4 {
            for k in (2 * n as usize).saturating_sub(1)..=9 {
                gn_dimension(n, k).unwrap();
            }
        }
    }

    #[test]
    fn kostka_reduction_examples() {
        assert_eq!(kostka_reduction(&p(&[3, 1]), 2).unwrap(), (2, 2));
        assert_eq!(kostka_reduction(&p(&[2, 2]), 2).unwrap(), (1, 1));
        for i in 0..=5 {
            assert_eq!(kostka_reduction(&p(&[5]), i).unwrap(), (1, 1));
        }
        assert!(kostka_reduction(&p(&[2, 2]), 3).is_err());
    }

    #[test]
    fn padded() {
        let pp = PaddedPartition::new(p(&[2, 1]), 6).unwrap();
        assert_eq!(pp.partition(), &p(&[3, 2, 1]));
        assert_eq!(pp.weight(), 3);
        assert!(PaddedPartition::new(p(&[2, 1]), 4).is_err());
        assert_eq!(padded_dimension(&p(&[2]), 3), 0);
    }
}
