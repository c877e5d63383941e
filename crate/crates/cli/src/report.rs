use rayon::prelude::*;

use fi_calc_core::combinat::{binomial, build_poset, factorial, falling_factorial};
use fi_calc_core::exactla::rat;
use fi_calc_core::fimod::{
    coefficient_profile, delta_coefficient_shift_check, dictionary_prediction, free_module, is_polynomial,
    q_truncation, representable, representation_stability_check, stable_decomposition, taylor_coefficient,
    validate, FiModule,
};
use fi_calc_core::nervehom::{nerve_homology, wedge_certificate};
use fi_calc_core::symrep::{
    character_table, class_size, gn_character, kostka, kostka_reduction, partitions_of, specht_dimension,
    Partition,
};

use crate::commands::{guard, MAX_K, MAX_N};
use crate::document::{Document, Section, Status, Table};
use crate::error::CliResult;

/// One table row plus whether it passed.
type Row = (Vec<String>, bool);

fn mark(ok: bool) -> String {
    if ok { "PASS".into() } else { "FAIL".into() }
}

fn section(heading: &str, headers: &[&str], rows: Vec<Row>, empty_note: &str) -> Section {
    let mut t = Table::new(headers.iter().copied());
    let ok = rows.iter().all(|(_, ok)| *ok);
    let count = rows.len();
    for (r, _) in rows {
        t.push(r);
    }
    let s = Section::new(heading).with_status(Status::from_bool(ok));
    if count == 0 { s.note(empty_note) } else { s.with_table(t) }
}

fn alternating(n: usize, k: usize) -> i128 {
    (0..=n.min(k))
        .map(|i| {
            let t = (binomial(n, i) * falling_factorial(k, i)) as i128;
            if (n - i) % 2 == 0 { t } else { -t }
        })
        .sum()
}

fn wedge_rows(n_max: usize, k_max: usize) -> Vec<Row> {
    let cells: Vec<(usize, usize)> =
        (1..=n_max).flat_map(|n| (2 * n - 1..=k_max.min(n + 4)).map(move |k| (n, k))).collect();
    cells
        .into_par_iter()
        .map(|(n, k)| match wedge_certificate(n, k) {
            Ok(w) => {
                let ok = w.expected_rank as i128 == alternating(n, k);
                let ranks = w.ranks.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                (
                    vec![n.to_string(), k.to_string(), w.vertices.to_string(), ranks, "none".into(), w.expected_rank.to_string(), mark(ok)],
                    ok,
                )
            }
            Err(e) => (vec![n.to_string(), k.to_string(), "-".into(), "-".into(), e.to_string(), "-".into(), mark(false)], false),
        })
        .collect()
}

fn weight_rows(n_max: usize, k_max: usize) -> Vec<Row> {
    let cells: Vec<(usize, usize)> =
        (0..=n_max).flat_map(|n| ((2 * n).max(1)..=k_max).map(move |k| (n, k))).collect();
    cells
        .into_par_iter()
        .map(|(n, k)| {
            let hook = Partition::hook(k - n, n);
            let mut ok = true;
            let mut support = Vec::new();
            for lambda in partitions_of(k) {
                let chi = gn_character(n, k, &lambda);
                let good = match (&chi, lambda.weight() == n) {
                    (Ok(c), true) => kostka(&lambda, &hook).is_ok_and(|kk| kk as i64 == *c),
                    (Ok(c), false) => *c == 0,
                    (Err(_), _) => false,
                };
                ok &= good;
                if let Ok(c) = chi {
                    if c != 0 {
                        support.push(format!("{lambda}:{c}"));
                    }
                }
            }
            (vec![n.to_string(), k.to_string(), partitions_of(k).len().to_string(), support.join(" "), mark(ok)], ok)
        })
        .collect()
}

fn kostka_rows(n_max: usize, k_max: usize) -> Vec<Row> {
    let cells: Vec<(usize, usize)> = (0..=n_max.min(4)).flat_map(|n| (2 * n..=k_max).map(move |k| (n, k))).collect();
    cells
        .into_par_iter()
        .map(|(n, k)| {
            let mut cases = 0;
            let mut ok = true;
            for lambda in partitions_of(k).into_iter().filter(|l| l.first() + n >= k) {
                for i in 0..=n {
                    cases += 1;
                    ok &= kostka_reduction(&lambda, i).is_ok_and(|(l, r)| l == r);
                }
            }
            (vec![n.to_string(), k.to_string(), cases.to_string(), mark(ok)], ok)
        })
        .collect()
}

fn coefficient_rows(n_max: usize) -> Vec<Row> {
    let window = 2 * n_max + 1;
    let cells: Vec<(usize, usize)> = (0..=n_max).flat_map(|m| (0..=n_max).map(move |n| (m, n))).collect();
    cells
        .into_par_iter()
        .map(|(m, n)| {
            let expected = falling_factorial(m, n);
            match taylor_coefficient(&representable(m, window), n) {
                Ok(c) => {
                    let ok = c.dimension(0) as u128 == expected && c.is_concentrated() && {
                        let chi = c.character(0);
                        chi.values()[..chi.values().len().saturating_sub(1)].iter().all(|v| *v == rat(0))
                    };
                    let dims = c.dimensions().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                    (vec![m.to_string(), n.to_string(), dims, expected.to_string(), mark(ok)], ok)
                }
                Err(e) => (vec![m.to_string(), n.to_string(), e.to_string(), expected.to_string(), mark(false)], false),
            }
        })
        .collect()
}

fn test_modules(n_max: usize, window: usize) -> Vec<FiModule> {
    let mut v: Vec<FiModule> = (0..=n_max).map(|m| representable(m, window)).collect();
    for size in 1..=n_max {
        for lambda in partitions_of(size) {
            v.push(free_module(&lambda, window).expect("window fits"));
        }
    }
    v
}

fn dictionary_rows(modules: &[FiModule]) -> Vec<Row> {
    modules
        .par_iter()
        .map(|e| {
            let outcome = coefficient_profile(e, None).and_then(|profile| {
                let top = profile.degree().unwrap_or(0);
                let mut ks = Vec::new();
                let mut ok = true;
                for k in 2 * top..=e.max_degree() {
                    ok &= dictionary_prediction(&profile, k)? == stable_decomposition(e, k)?;
                    ks.push(k);
                }
                let c = profile.coefficients.iter().map(|c| c.decomposition(0).map(|d| d.to_string())).collect::<fi_calc_core::Result<Vec<_>>>()?;
                Ok((top, ks, c, ok))
            });
            match outcome {
                Ok((top, ks, c, ok)) => {
                    let range = format!("{}..={}", ks.first().copied().unwrap_or(2 * top), e.max_degree());
                    (vec![e.name().to_string(), top.to_string(), c.join(" | "), range, mark(ok)], ok)
                }
                Err(err) => (vec![e.name().to_string(), "-".into(), err.to_string(), "-".into(), mark(false)], false),
            }
        })
        .collect()
}

fn shift_rows(modules: &[FiModule], n_max: usize) -> Vec<Row> {
    let top = n_max.min(2);
    let cells: Vec<(usize, usize, usize)> = (0..modules.len())
        .flat_map(|m| (0..=top).flat_map(move |n| (0..=top).map(move |i| (m, n, i))))
        .collect();
    cells
        .into_par_iter()
        .map(|(m, n, i)| {
            let e = &modules[m];
            match delta_coefficient_shift_check(e, n, i) {
                Ok((lhs, rhs)) => {
                    let ok = lhs.dimensions() == rhs.dimensions()
                        && (0..lhs.degrees.len()).all(|d| lhs.character(d) == rhs.character(d));
                    let dims = lhs.dimensions().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                    (vec![e.name().to_string(), n.to_string(), i.to_string(), dims, mark(ok)], ok)
                }
                Err(err) => (vec![e.name().to_string(), n.to_string(), i.to_string(), err.to_string(), mark(false)], false),
            }
        })
        .collect()
}

fn stability_rows(modules: &[FiModule]) -> Vec<Row> {
    modules
        .par_iter()
        .map(|e| {
            let n = e.generation_bound();
            match representation_stability_check(e, 2 * n) {
                Ok(r) => {
                    let ok = r.is_stable_on_range();
                    let from = r.stable_from.map_or_else(|| "-".into(), |k| k.to_string());
                    let pattern = r.stable_pattern().map_or_else(String::new, |p| {
                        p.iter().map(|(mu, m)| format!("{m}·V{mu}[k]")).collect::<Vec<_>>().join(" + ")
                    });
                    (vec![e.name().to_string(), (2 * n).to_string(), from, pattern, mark(ok)], ok)
                }
                Err(err) => (vec![e.name().to_string(), (2 * n).to_string(), "-".into(), err.to_string(), mark(false)], false),
            }
        })
        .collect()
}

fn structural_rows(modules: &[FiModule], k_max: usize) -> Vec<Row> {
    let mut rows = Vec::new();
    let valid = modules.iter().all(|e| validate(e).is_valid());
    rows.push((vec!["module validity".into(), format!("{} modules", modules.len()), mark(valid)], valid));

    let top = k_max.min(6);
    let orth = (0..=top).all(|n| {
        let t = character_table(n);
        let sizes: Vec<i128> = t.partitions.iter().map(|c| class_size(c) as i128).collect();
        t.values.iter().enumerate().all(|(a, ra)| {
            t.values.iter().enumerate().all(|(b, rb)| {
                let s: i128 = (0..sizes.len()).map(|c| sizes[c] * ra[c] as i128 * rb[c] as i128).sum();
                s == if a == b { factorial(n) as i128 } else { 0 }
            })
        })
    });
    rows.push((vec!["character orthogonality".into(), format!("n ≤ {top}"), mark(orth)], orth));

    let top = k_max.min(7);
    let squares = (0..=top).all(|n| partitions_of(n).iter().map(|l| specht_dimension(l).pow(2)).sum::<u128>() == factorial(n));
    rows.push((vec!["Σ (f^λ)² = n!".into(), format!("n ≤ {top}"), mark(squares)], squares));

    let top = k_max.min(4);
    let symmetric = (1..=top).all(|n| {
        (n..=top).all(|k| {
            build_poset(n, k).elements.len() == build_poset(k, n).elements.len()
                && matches!((nerve_homology(n, k), nerve_homology(k, n)), (Ok(a), Ok(b)) if a == b)
        })
    });
    rows.push((vec!["P(n,k) ≅ P(k,n)".into(), format!("n, k ≤ {top}"), mark(symmetric)], symmetric));

    let q_ok = modules.iter().all(|e| {
        let g = e.generation_bound();
        (0..=e.max_degree()).all(|k| q_truncation(e, g, k).is_ok_and(|q| q.is_isomorphism()))
    });
    rows.push((vec!["Q_g E ≅ E".into(), "generation bound g".into(), mark(q_ok)], q_ok));

    let poly_ok = modules.iter().all(|e| {
        let g = e.generation_bound();
        let pos = is_polynomial(e, g).is_ok_and(|c| c.is_polynomial());
        let neg = g == 0 || is_polynomial(e, g - 1).is_ok_and(|c| !c.is_polynomial());
        pos && neg
    });
    rows.push((vec!["g-polynomial, not (g−1)-polynomial".into(), format!("{} modules", modules.len()), mark(poly_ok)], poly_ok));
    rows
}

pub fn full_report(n_max: usize, k_max: usize, allow_large: bool) -> CliResult<Document> {
    guard("report", "--n-max", n_max, MAX_N, allow_large)?;
    guard("report", "--k-max", k_max, MAX_K, allow_large)?;
    let window = k_max.max(2 * n_max + 2);
    let modules = test_modules(n_max, window);
    let shift_modules = test_modules(n_max.min(2), 2 * n_max.min(2) + 5);

    let mut doc = Document::new(format!("fi-calc report (n ≤ {n_max}, k ≤ {k_max})"));
    doc.push(
        Section::new("parameters")
            .note(format!("module window K = {window}"))
            .note(format!("test modules: {}", modules.iter().map(|e| e.name().to_string()).collect::<Vec<_>>().join(", "))),
    );
    doc.push(section(
        "1. Nerve of P(n,k) is a wedge of spheres",
        &["n", "k", "vertices", "reduced ranks", "torsion", "dim G_n(k)", "status"],
        wedge_rows(n_max, k_max),
        "no cells with n ≥ 1 in range",
    ));
    doc.push(section(
        "2. Weight concentration of G_n(k)",
        &["n", "k", "partitions", "nonzero χ_λ", "status"],
        weight_rows(n_max, k_max),
        "no cells in range",
    ));
    doc.push(section(
        "3. Kostka reduction identity",
        &["n", "k", "cases", "status"],
        kostka_rows(n_max, k_max),
        "no cells in range",
    ));
    doc.push(section(
        "4. Coefficients of representables",
        &["m", "n", "homology dims", "m!/(m−n)!", "status"],
        coefficient_rows(n_max),
        "no cells in range",
    ));
    doc.push(section(
        "5. Dictionary roundtrip",
        &["module", "degree N", "C_n decompositions", "k range", "status"],
        dictionary_rows(&modules),
        "no modules",
    ));
    doc.push(section(
        "6. Derivative shift",
        &["module", "n", "i", "dims of C_i(ΔⁿE)", "status"],
        shift_rows(&shift_modules, n_max),
        "no modules",
    ));
    doc.push(section(
        "7. Representation stability",
        &["module", "from k", "stable from", "pattern", "status"],
        stability_rows(&modules),
        "no modules",
    ));
    doc.push(section("8. Structural properties", &["property", "range", "status"], structural_rows(&modules, k_max), ""));
    Ok(doc)
}
