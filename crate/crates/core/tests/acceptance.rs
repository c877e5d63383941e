//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//!
//! Every check compares a library result against a value computed here by a separate route
//! (alternating sums, fixed-point counts, Young permutation characters, brute force).

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use fi_calc_core::combinat::{
    binomial, build_poset, compose, conjugacy_class_word, enumerate_injections, factorial, falling_factorial,
    Injection,
};
use fi_calc_core::exactla::{determinant, rat, smith_normal_form, IntegerMatrix, Rational, SparseMatrix};
use fi_calc_core::fimod::{
    coefficient_profile, delta_coefficient_shift_check, dictionary_prediction, free_module, is_polynomial,
    q_truncation, representable, representation_stability_check, stable_decomposition, taylor_coefficient,
    validate, FiModule, ViolationKind,
};
use fi_calc_core::nervehom::{nerve_homology, wedge_certificate};
use fi_calc_core::symrep::{
    character_table, class_size, gn_character, kostka, kostka_reduction, partitions_of, specht_dimension,
    young_permutation_character, ClassFunction, Partition,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn alternating_gn(n: usize, k: usize) -> i128 {
    (0..=n.min(k))
        .map(|i| {
            let t = (binomial(n, i) * falling_factorial(k, i)) as i128;
            if (n - i) % 2 == 0 { t } else { -t }
        })
        .sum()
}

fn criterion_1() -> Check {
    let mut cells = 0;
    for n in 1..=3usize {
        for k in (2 * n - 1)..=(n + 4).min(7) {
            let cert = wedge_certificate(n, k).map_err(|e| format!("({n},{k}): {e}"))?;
            let want = alternating_gn(n, k);
            ensure(cert.expected_rank as i128 == want, || format!("({n},{k}): rank {} vs {want}", cert.expected_rank))?;
            let mut ranks = vec![0usize; n];
            ranks[n - 1] = want as usize;
            ensure(cert.ranks == ranks, || format!("({n},{k}): ranks {:?}", cert.ranks))?;
            ensure(cert.torsion.iter().all(Vec::is_empty), || format!("({n},{k}): torsion {:?}", cert.torsion))?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells, NP(2,4) → 5, NP(3,5) → 14"))
}

fn criterion_2() -> Check {
    let mut checked = 0;
    for n in 0..=3usize {
        for k in (2 * n).max(1)..=8 {
            let hook = Partition::hook(k - n, n);
            for lambda in partitions_of(k) {
                let got = gn_character(n, k, &lambda).map_err(|e| e.to_string())?;
                let chi = ClassFunction::irreducible(&lambda);
                let oracle: Rational = (0..=n)
                    .map(|i| {
                        let m = young_permutation_character(&Partition::hook(k - i, i)).inner_product(&chi);
                        let c = Rational::from_integer((binomial(n, i) as i64).into());
                        if (n - i) % 2 == 0 { c * m } else { -c * m }
                    })
                    .sum();
                ensure(oracle == rat(got), || format!("n={n} k={k} {lambda}: {got} vs {oracle}"))?;
                if lambda.weight() == n {
                    let kappa = kostka(&lambda, &hook).map_err(|e| e.to_string())?;
                    ensure(got == kappa as i64 && got > 0, || format!("n={n} k={k} {lambda}: {got} vs K = {kappa}"))?;
                } else {
                    ensure(got == 0, || format!("n={n} k={k} {lambda}: weight {} but value {got}", lambda.weight()))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n, k, λ) triples"))
}

fn criterion_3() -> Check {
    let (mut stable, mut outside_accepted, mut outside_rejected) = (0, 0, 0);
    for n in 0..=4usize {
        for k in 0..=10usize {
            for lambda in partitions_of(k).into_iter().filter(|l| l.first() + n >= k) {
                for i in 0..=n {
                    let tail = lambda.tail();
                    let choose = if lambda.first() + i >= k { binomial(i, lambda.first() + i - k) } else { 0 };
                    let oracle_rhs = choose as u64 * kostka(&tail, &Partition::single_column(tail.size())).unwrap();
                    match kostka_reduction(&lambda, i) {
                        Ok((lhs, rhs)) => {
                            let direct = kostka(&lambda, &Partition::hook(k - i, i)).unwrap();
                            ensure(lhs == rhs, || format!("{lambda}, i={i}: {lhs} vs {rhs}"))?;
                            ensure(lhs == direct, || format!("{lambda}, i={i}: lhs {lhs} vs K = {direct}"))?;
                            ensure(rhs == oracle_rhs, || format!("{lambda}, i={i}: rhs {rhs} vs {oracle_rhs}"))?;
                            if k >= 2 * n { stable += 1 } else { outside_accepted += 1 }
                        }
                        Err(e) => {
                            ensure(k < 2 * n, || format!("{lambda}, i={i}, n={n}: rejected inside k ≥ 2n: {e}"))?;
                            outside_rejected += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{stable} cases with k ≥ 2n; below 2n: {outside_accepted} agree, {outside_rejected} outside the identity's domain"
    ))
}

/// Fixed points of `S_n` acting on injections `n → m` by precomposition.
fn injection_character(n: usize, m: usize) -> ClassFunction {
    let injections = enumerate_injections(n, m);
    ClassFunction::from_fn(n, |rho| {
        let sigma = Injection::from_word(n, &conjugacy_class_word(rho)).unwrap();
        let fixed = injections.iter().filter(|f| compose(f, &sigma).unwrap() == **f).count();
        rat(fixed as i64)
    })
}

fn criterion_4() -> Check {
    for m in 0..=4usize {
        let e = representable(m, 9);
        for n in 0..=4usize {
            let c = taylor_coefficient(&e, n).map_err(|err| format!("F_{m}, n={n}: {err}"))?;
            let mut dims = vec![0; n + 1];
            dims[0] = falling_factorial(m, n) as usize;
            ensure(c.dimensions() == dims, || format!("F_{m}, n={n}: dims {:?}", c.dimensions()))?;
            ensure(c.character(0) == injection_character(n, m), || format!("F_{m}, n={n}: character"))?;
        }
    }
    Ok("C_nF_m for 0 ≤ n, m ≤ 4 at K = 9".into())
}

fn dictionary_modules(k: usize) -> Vec<FiModule> {
    let mut v: Vec<FiModule> = (0..=2).map(|m| representable(m, k)).collect();
    for lambda in [p(&[2]), p(&[1, 1]), p(&[2, 1])] {
        v.push(free_module(&lambda, k).unwrap());
    }
    v
}

fn criterion_5() -> Check {
    let mut lines = Vec::new();
    for e in dictionary_modules(8) {
        let profile = coefficient_profile(&e, None).map_err(|err| format!("{}: {err}", e.name()))?;
        let big_n = profile.degree().unwrap_or(0);
        for k in (2 * big_n)..=8 {
            let predicted = dictionary_prediction(&profile, k).map_err(|err| format!("{}: {err}", e.name()))?;
            let actual = stable_decomposition(&e, k).map_err(|err| format!("{}: {err}", e.name()))?;
            ensure(predicted == actual, || format!("{} at k={k}: {predicted} vs {actual}", e.name()))?;
            ensure(actual.dimension() == e.dim(k) as u128, || format!("{} at k={k}: dimension", e.name()))?;
        }
        lines.push(format!("{} (N={big_n})", e.name()));
    }
    Ok(lines.join(", "))
}

fn criterion_6() -> Check {
    let mut pairs = 0;
    for e in dictionary_modules(9) {
        for n in 0..=2 {
            for i in 0..=2 {
                let (lhs, rhs) =
                    delta_coefficient_shift_check(&e, n, i).map_err(|err| format!("{}, n={n}, i={i}: {err}", e.name()))?;
                ensure(lhs.dimensions() == rhs.dimensions(), || {
                    format!("{}, n={n}, i={i}: {:?} vs {:?}", e.name(), lhs.dimensions(), rhs.dimensions())
                })?;
                for d in 0..lhs.degrees.len() {
                    ensure(lhs.character(d) == rhs.character(d), || format!("{}, n={n}, i={i}: character in degree {d}", e.name()))?;
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (E, n, i) triples at K = 9"))
}

fn criterion_7() -> Check {
    let mut lines = Vec::new();
    for e in dictionary_modules(8) {
        let n = e.generation_bound();
        let report = representation_stability_check(&e, 2 * n).map_err(|err| format!("{}: {err}", e.name()))?;
        ensure(report.is_stable_on_range(), || format!("{report}"))?;
        lines.push(format!("{} from {}", e.name(), report.stable_from.unwrap_or(2 * n)));
    }
    Ok(lines.join(", "))
}

fn with_negated_generator(e: &FiModule, k: usize, i: usize) -> FiModule {
    let transpositions = (0..=e.max_degree())
        .map(|d| {
            let mut gens = e.transpositions(d).to_vec();
            if d == k {
                gens[i - 1] = gens[i - 1].negate();
            }
            gens
        })
        .collect();
    let inclusions: Vec<SparseMatrix> = (0..e.max_degree()).map(|d| e.inclusion(d).clone()).collect();
    FiModule::new("faulty", e.generation_bound(), e.dims().to_vec(), transpositions, inclusions).unwrap()
}

fn suite_validity() -> Result<(), String> {
    for e in dictionary_modules(6).into_iter().chain([representable(3, 6), free_module(&p(&[1, 1, 1]), 6).unwrap()]) {
        let r = validate(&e);
        ensure(r.is_valid(), || format!("{r}"))?;
    }
    let faulty = with_negated_generator(&representable(2, 5), 3, 1);
    let r = validate(&faulty);
    ensure(!r.is_valid(), || "negated s_1 in degree 3 went unnoticed".into())?;
    ensure(r.violations.iter().any(|v| v.degree == 3 || v.kind == ViolationKind::Equivariance), || format!("{r}"))
}

fn suite_orthogonality() -> Result<(), String> {
    for n in 0..=6 {
        let t = character_table(n);
        let sizes: Vec<i128> = t.partitions.iter().map(|c| class_size(c) as i128).collect();
        for (a, ra) in t.values.iter().enumerate() {
            for (b, rb) in t.values.iter().enumerate() {
                let s: i128 = (0..sizes.len()).map(|c| sizes[c] * ra[c] as i128 * rb[c] as i128).sum();
                let want = if a == b { factorial(n) as i128 } else { 0 };
                ensure(s == want, || format!("n={n}: ⟨{}, {}⟩ = {s}", t.partitions[a], t.partitions[b]))?;
            }
        }
    }
    Ok(())
}

fn suite_dimensions() -> Result<(), String> {
    for n in 0..=7 {
        let s: u128 = partitions_of(n).iter().map(|l| specht_dimension(l).pow(2)).sum();
        ensure(s == factorial(n), || format!("n={n}: Σ f² = {s}"))?;
    }
    Ok(())
}

fn suite_snf() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let entries: Vec<i64> = (0..r * c).map(|_| rng.gen_range(-6..=6)).collect();
        let rows: Vec<&[i64]> = entries.chunks(c).collect();
        let a = IntegerMatrix::from_i64_rows(&rows);
        let s = smith_normal_form(&a);
        for m in [&s.u, &s.v] {
            let d = determinant(m);
            ensure(d == 1.into() || d == (-1).into(), || format!("det {d} for {a:?}"))?;
        }
        let prod = s.u.checked_mul(&a).and_then(|x| x.checked_mul(&s.v)).map_err(|e| e.to_string())?;
        ensure(prod == s.d, || format!("U·A·V ≠ D for {a:?}"))?;
        let f = s.invariant_factors();
        ensure(f.windows(2).all(|w| (&w[1] % &w[0]) == 0.into()), || format!("divisibility {f:?}"))?;
    }
    Ok(())
}

fn suite_poset_symmetry() -> Result<(), String> {
    for n in 1..=4 {
        for k in n..=4 {
            let (a, b) = (build_poset(n, k), build_poset(k, n));
            ensure(a.elements.len() == b.elements.len() && a.cover_relations.len() == b.cover_relations.len(), || {
                format!("P({n},{k}) and P({k},{n}) differ in size")
            })?;
            for &(lo, hi) in &a.cover_relations {
                let (x, y) = (b.index_of(&a.elements[lo].swap()), b.index_of(&a.elements[hi].swap()));
                let ok = matches!((x, y), (Some(x), Some(y)) if b.cover_relations.binary_search(&(x, y)).is_ok());
                ensure(ok, || format!("P({n},{k}): swap does not preserve a cover"))?;
            }
            let (ha, hb) = (nerve_homology(n, k).map_err(|e| e.to_string())?, nerve_homology(k, n).map_err(|e| e.to_string())?);
            ensure(ha == hb, || format!("NP({n},{k}) vs NP({k},{n})"))?;
        }
    }
    Ok(())
}

fn suite_q_truncation() -> Result<(), String> {
    for e in dictionary_modules(6) {
        let g = e.generation_bound();
        for n in 0..=g + 1 {
            for k in 0..=6 {
                let q = q_truncation(&e, n, k).map_err(|err| err.to_string())?;
                let expected = n >= g || k <= n || e.dim(k) == 0;
                ensure(q.is_isomorphism() == expected, || format!("{}: Q_{n} at k={k}", e.name()))?;
            }
        }
    }
    Ok(())
}

fn suite_polynomial() -> Result<(), String> {
    for e in dictionary_modules(6).into_iter().chain([representable(3, 6)]) {
        let g = e.generation_bound();
        let pos = is_polynomial(&e, g).map_err(|err| err.to_string())?;
        ensure(pos.is_polynomial(), || format!("{} should be {g}-polynomial: {:?}", e.name(), pos.failures))?;
        if g > 0 {
            let neg = is_polynomial(&e, g - 1).map_err(|err| err.to_string())?;
            ensure(!neg.is_polynomial(), || format!("{} should not be {}-polynomial", e.name(), g - 1))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let suites: [(&str, fn() -> Result<(), String>); 8] = [
        ("validity", suite_validity),
        ("orthogonality", suite_orthogonality),
        ("Σf²=n!", suite_dimensions),
        ("SNF", suite_snf),
        ("poset symmetry", suite_poset_symmetry),
        ("Q_n", suite_q_truncation),
        ("polynomiality", suite_polynomial),
        ("Kostka triangularity", suite_kostka_triangular),
    ];
    let mut failures = BTreeMap::new();
    for (name, f) in suites {
        if let Err(msg) = f() {
            failures.insert(name, msg);
        }
    }
    if failures.is_empty() {
        Ok(suites.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", "))
    } else {
        Err(failures.iter().map(|(n, m)| format!("{n}: {m}")).collect::<Vec<_>>().join("; "))
    }
}

fn suite_kostka_triangular() -> Result<(), String> {
    for n in 0..=6 {
        for l in partitions_of(n) {
            for m in partitions_of(n) {
                let k = kostka(&l, &m).map_err(|e| e.to_string())?;
                if l == m {
                    ensure(k == 1, || format!("K_{{{l},{l}}} = {k}"))?;
                } else if !l.dominates(&m) {
                    ensure(k == 0, || format!("K_{{{l},{m}}} = {k}"))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("wedge of spheres", criterion_1),
        ("weight concentration", criterion_2),
        ("Kostka reduction", criterion_3),
        ("representable coefficients", criterion_4),
        ("dictionary roundtrip", criterion_5),
        ("derivative shift", criterion_6),
        ("representation stability", criterion_7),
        ("structural suites", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {detail}", i + 1)
            }
        }
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
