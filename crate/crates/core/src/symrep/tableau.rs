use std::collections::HashMap;

use super::partition::Partition;
use crate::error::{Error, Result};

/// A filling of a Young diagram, stored row by row.
pub type Tableau = Vec<Vec<usize>>;

/// All standard tableaux of shape `λ` with entries `0..n`, in a fixed deterministic order
/// (entries placed in increasing order, earliest row first).
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn go(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<Tableau>) {
        if next == n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                go(shape, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.len()];
    go(lambda.parts(), &mut rows, 0, lambda.size(), &mut out);
    out
}

/// Number of standard tableaux, by removing the largest entry from each corner.
pub fn count_standard_tableaux(lambda: &Partition) -> u128 {
    fn go(shape: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        if shape.iter().all(|&r| r == 0) {
            return 1;
        }
        if let Some(&v) = memo.get(shape.as_slice()) {
            return v;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let below = shape.get(r + 1).copied().unwrap_or(0);
            if shape[r] > below {
                shape[r] -= 1;
                total += go(shape, memo);
                shape[r] += 1;
            }
        }
        memo.insert(shape.clone(), total);
        total
    }
    go(&mut lambda.parts().to_vec(), &mut HashMap::new())
}

/// `n! / ∏ hook lengths`.
pub fn hook_length_dimension(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let mut num: u128 = (1..=lambda.size() as u128).product();
    let mut hooks: u128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let h = (row - j - 1) + (conj.parts()[j] - i - 1) + 1;
            hooks *= h as u128;
            let g = gcd(num, hooks);
            num /= g;
            hooks /= g;
        }
    }
    num / hooks
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// `f^λ = dim V(λ)`, computed by the hook length formula and by counting standard tableaux.
pub fn specht_dimension(lambda: &Partition) -> u128 {
    let hook = hook_length_dimension(lambda);
    let count = count_standard_tableaux(lambda);
    assert_eq!(hook, count, "hook length formula disagrees with tableau count for {lambda}");
    hook
}

/// Semistandard tableaux of shape `λ` and content `μ` (entries `1..=ℓ(μ)`).
///
/// Entries equal to `i` form a horizontal strip of size `μ_i`, so the tableaux are built
/// strip by strip.
pub fn semistandard_tableaux(lambda: &Partition, mu: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if lambda.size() != mu.iter().sum::<usize>() {
        return out;
    }
    let mut rows = vec![Vec::new(); lambda.len()];
    strips(lambda.parts(), mu, 0, &mut rows, &mut |t| out.push(t.clone()));
    out
}

fn strips(shape: &[usize], mu: &[usize], letter: usize, rows: &mut Vec<Vec<usize>>, emit: &mut dyn FnMut(&Tableau)) {
    if letter == mu.len() {
        if rows.iter().zip(shape).all(|(r, &s)| r.len() == s) {
            emit(rows);
        }
        return;
    }
    let old: Vec<usize> = rows.iter().map(Vec::len).collect();
    place(shape, mu, letter, &old, 0, mu[letter], rows, emit);
}

#[allow(clippy::too_many_arguments)]
fn place(
    shape: &[usize],
    mu: &[usize],
    letter: usize,
    old: &[usize],
    row: usize,
    remaining: usize,
    rows: &mut Vec<Vec<usize>>,
    emit: &mut dyn FnMut(&Tableau),
) {
    if remaining == 0 {
        strips(shape, mu, letter + 1, rows, emit);
        return;
    }
    if row == shape.len() {
        return;
    }
    // a horizontal strip: row `row` may grow up to the old length of the row above
    let cap = if row == 0 { shape[0] } else { shape[row].min(old[row - 1]) };
    let room = cap.saturating_sub(old[row]);
    for add in (0..=room.min(remaining)).rev() {
        rows[row].extend(std::iter::repeat(letter + 1).take(add));
        place(shape, mu, letter, old, row + 1, remaining - add, rows, emit);
        let len = rows[row].len();
        rows[row].truncate(len - add);
    }
}

/// Kostka number `K_{λ,μ}`: the number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            op: "kostka",
            detail: format!("|{lambda}| = {} but |{mu}| = {}", lambda.size(), mu.size()),
        });
    }
    Ok(kostka_content(lambda, mu.parts()))
}

/// Kostka number for an arbitrary composition `μ` of `|λ|`.
pub(crate) fn kostka_content(lambda: &Partition, mu: &[usize]) -> u64 {
    let mut count = 0u64;
    let mut rows = vec![Vec::new(); lambda.len()];
    strips(lambda.parts(), mu, 0, &mut rows, &mut |_| count += 1);
    count
}
