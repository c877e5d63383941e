use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, ToPrimitive, Zero};

use super::partition::{partitions_of, Partition};
use super::tableau::specht_dimension;
use crate::exactla::Rational;
use crate::error::{Error, Result};

/// `χ_λ(ρ)` by the Murnaghan–Nakayama rule, removing rim hooks as bead moves on a beta-set.
pub fn irreducible_character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.size() != cycle_type.size() {
        return Err(Error::SizeMismatch {
            op: "irreducible_character",
            detail: format!("|{lambda}| = {} but |{cycle_type}| = {}", lambda.size(), cycle_type.size()),
        });
    }
    let l = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    Ok(mn(beta, cycle_type.parts(), &mut HashMap::new()))
}

fn mn(beta: Vec<usize>, hooks: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = hooks.split_first() else {
        return 1;
    };
    let key = (beta.clone(), hooks.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = mn(next, rest, memo);
        total += if crossed % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// `|C_ρ| = n! / z_ρ`.
pub fn class_size(cycle_type: &Partition) -> u128 {
    let n = cycle_type.size() as u128;
    let mut z: u128 = 1;
    for (i, &m) in cycle_type.multiplicities().iter().enumerate().skip(1) {
        z *= (i as u128).pow(m as u32) * (1..=m as u128).product::<u128>();
    }
    (1..=n).product::<u128>() / z
}

/// The character table of `S_n`: rows indexed by `λ`, columns by cycle type, both in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn index(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.binary_search(lambda).ok()
    }
}

fn table_cache() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The (memoized) character table of `S_n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    if let Some(t) = table_cache().lock().expect("character cache poisoned").get(&n) {
        return t.clone();
    }
    let partitions = partitions_of(n);
    let values = partitions
        .iter()
        .map(|l| partitions.iter().map(|c| irreducible_character(l, c).expect("sizes agree")).collect())
        .collect();
    let table = Arc::new(CharacterTable { n, partitions, values });
    table_cache().lock().expect("character cache poisoned").entry(n).or_insert(table).clone()
}

/// A class function on `S_n`, one value per cycle type in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<Rational>,
}

impl ClassFunction {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        let expected = partitions_of(n).len();
        if values.len() != expected {
            return Err(Error::SizeMismatch {
                op: "class function",
                detail: format!("{} values for {expected} classes of S_{n}", values.len()),
            });
        }
        Ok(ClassFunction { n, values })
    }

    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> Rational) -> Self {
        ClassFunction { n, values: partitions_of(n).iter().map(f).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::zero())
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        let t = character_table(lambda.size());
        let row = &t.values[t.index(lambda).expect("partition of n")];
        ClassFunction { n: lambda.size(), values: row.iter().map(|&v| Rational::from_integer(v.into())).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, cycle_type: &Partition) -> Option<&Rational> {
        character_table(self.n).index(cycle_type).map(|i| &self.values[i])
    }

    /// Value at the identity class, the dimension of a character.
    pub fn degree(&self) -> &Rational {
        self.values.last().expect("at least one class")
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                op: "class function sum",
                detail: format!("S_{} vs S_{}", self.n, other.n),
            });
        }
        Ok(ClassFunction { n: self.n, values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() })
    }

    pub fn scale(&self, c: &Rational) -> ClassFunction {
        ClassFunction { n: self.n, values: self.values.iter().map(|v| v * c).collect() }
    }

    /// `⟨f, g⟩ = (1/n!) Σ_C |C| f(C) g(C)` (characters are real here).
    pub fn inner_product(&self, other: &ClassFunction) -> Rational {
        let classes = partitions_of(self.n);
        let mut total = Rational::zero();
        for (i, c) in classes.iter().enumerate() {
            total += Rational::from_integer(class_size(c).into()) * &self.values[i] * &other.values[i];
        }
        let order: u128 = (1..=self.n as u128).product();
        total / Rational::from_integer(order.into())
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Multiplicities of Specht modules in a representation of `S_n`. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RepDecomposition {
    pub n: usize,
    pub multiplicities: BTreeMap<Partition, u64>,
}

impl RepDecomposition {
    pub fn new(n: usize) -> Self {
        RepDecomposition { n, multiplicities: BTreeMap::new() }
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    pub fn add(&mut self, lambda: Partition, m: u64) {
        if m > 0 {
            *self.multiplicities.entry(lambda).or_insert(0) += m;
        }
    }

    pub fn dimension(&self) -> u128 {
        self.multiplicities.iter().map(|(l, &m)| m as u128 * specht_dimension(l)).sum()
    }

    pub fn character(&self) -> ClassFunction {
        let mut f = ClassFunction::zero(self.n);
        for (l, &m) in &self.multiplicities {
            f = f.add(&ClassFunction::irreducible(l).scale(&Rational::from_integer(m.into()))).expect("same n");
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.is_empty()
    }
}

impl fmt::Display for RepDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, m)) in self.multiplicities.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m == 1 {
                write!(f, "V{l}")?;
            } else {
                write!(f, "{m}·V{l}")?;
            }
        }
        Ok(())
    }
}

/// Multiplicities `⟨f, χ_λ⟩`; fails unless every one is a non-negative integer.
pub fn decompose_class_function(f: &ClassFunction) -> Result<RepDecomposition> {
    let table = character_table(f.n);
    let mut out = RepDecomposition::new(f.n);
    for (i, lambda) in table.partitions.iter().enumerate() {
        let chi = ClassFunction::irreducible(&table.partitions[i]);
        let m = f.inner_product(&chi);
        if !m.is_integer() || m.is_negative() {
            return Err(Error::NotACharacter { lambda: lambda.to_string(), value: m.to_string() });
        }
        out.add(lambda.clone(), m.to_integer().to_u64().expect("multiplicity fits in u64"));
    }
    debug_assert_eq!(out.character(), *f);
    Ok(out)
}

/// Character of the Young permutation module `M^μ`: at a permutation of cycle type `ρ`, the
/// number of ways to distribute the cycles among blocks of sizes `μ_1, μ_2, …`.
pub fn young_permutation_character(mu: &Partition) -> ClassFunction {
    ClassFunction::from_fn(mu.size(), |rho| {
        Rational::from_integer(assignments(rho.parts(), &mut mu.parts().to_vec()).into())
    })
}

fn assignments(cycles: &[usize], capacity: &mut Vec<usize>) -> u128 {
    let Some((&c, rest)) = cycles.split_first() else {
        return u128::from(capacity.iter().all(|&x| x == 0));
    };
    let mut total = 0;
    for b in 0..capacity.len() {
        if capacity[b] >= c {
            capacity[b] -= c;
            total += assignments(rest, capacity);
            capacity[b] += c;
        }
    }
    total
}
