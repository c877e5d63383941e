use std::path::Path;

use fi_calc_core::combinat::falling_factorial;
use fi_calc_core::exactla::rank;
use fi_calc_core::fimod::{
    coefficient_profile, dictionary_prediction, free_module, from_json, representable, stable_decomposition,
    to_json, validate_with, FiModule,
};
use fi_calc_core::nervehom::{nerve_homology, wedge_certificate};
use fi_calc_core::symrep::{
    gn_character, gn_dimension, kostka, padded_dimension, partitions_of, specht_dimension, Partition,
    RepDecomposition,
};

use crate::document::{Document, Section, Status, Table};
use crate::error::{CliError, CliResult, Context};

pub const MAX_N: usize = 5;
pub const MAX_K: usize = 10;

/// Desk-scale guard shared by every command that takes a size parameter.
pub fn guard(op: &str, flag: &str, value: usize, limit: usize, allow_large: bool) -> CliResult<()> {
    if value > limit && !allow_large {
        return Err(CliError::Usage(format!(
            "{op}: {flag} {value} exceeds the default limit {limit}; pass --allow-large to override"
        )));
    }
    Ok(())
}

pub fn load_module(op: &'static str, path: &Path, allow_large: bool) -> CliResult<FiModule> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{op}: cannot read '{}': {e}", path.display())))?;
    let e = from_json(&text).during(op)?;
    guard(op, "max_degree of the input", e.max_degree(), MAX_K, allow_large)?;
    Ok(e)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn validate_cmd(e: &FiModule, seed: u64, samples: usize) -> Document {
    let r = validate_with(e, seed, samples);
    let mut t = Table::new(["relation", "degree", "generator", "detail"]);
    for v in &r.violations {
        t.push(vec![
            v.kind.to_string(),
            v.degree.to_string(),
            v.generator.map_or_else(|| "-".into(), |i| format!("s_{i}")),
            v.detail.clone(),
        ]);
    }
    let mut doc = Document::new(format!("Validation of {}", e.name()));
    doc.push(
        Section::new("module")
            .note(format!("max degree {}, generation bound {}", e.max_degree(), e.generation_bound()))
            .note(format!("dimensions: {}", join(e.dims()))),
    );
    let mut s = Section::new("relations")
        .note(format!("{} violation(s), {} functoriality samples, seed {seed}", r.violations.len(), r.samples))
        .with_status(Status::from_bool(r.is_valid()));
    if !r.is_valid() {
        s = s.with_table(t);
    }
    doc.push(s);
    doc
}

pub fn generate_free(lambda: &Partition, max_degree: usize, allow_large: bool) -> CliResult<String> {
    guard("free", "|λ|", lambda.size(), MAX_N, allow_large)?;
    guard("free", "--max-degree", max_degree, MAX_K, allow_large)?;
    Ok(to_json(&free_module(lambda, max_degree).during("free")?) + "\n")
}

pub fn generate_representable(n: usize, max_degree: usize, allow_large: bool) -> CliResult<String> {
    guard("representable", "--n", n, MAX_N, allow_large)?;
    guard("representable", "--max-degree", max_degree, MAX_K, allow_large)?;
    Ok(to_json(&representable(n, max_degree)) + "\n")
}

pub fn coefficients_cmd(e: &FiModule, max_n: Option<usize>) -> CliResult<Document> {
    let profile = coefficient_profile(e, max_n).during("coefficients")?;
    let mut t = Table::new(["n", "stable at k", "homology dims", "H_0", "higher homology"]);
    for c in &profile.coefficients {
        let h0 = c.decomposition(0).during("coefficients")?;
        let higher: Vec<String> = (1..c.degrees.len())
            .filter(|&d| c.dimension(d) > 0)
            .map(|d| c.decomposition(d).map(|r| format!("H_{d} = {r}")))
            .collect::<fi_calc_core::Result<_>>()
            .during("coefficients")?;
        t.push(vec![
            c.n.to_string(),
            c.stabilization_witness.to_string(),
            join(&c.dimensions()),
            h0.to_string(),
            if higher.is_empty() { "0".into() } else { higher.join("; ") },
        ]);
    }
    let mut maps = Table::new(["map", "rows", "cols", "rank"]);
    for (n, m) in profile.transition_data.iter().enumerate() {
        maps.push(vec![format!("C_{n} → C_{}", n + 1), m.rows().to_string(), m.cols().to_string(), rank(m).to_string()]);
    }
    let mut doc = Document::new(format!("Taylor coefficients of {}", e.name()));
    doc.push(
        Section::new("coefficients")
            .note(format!("degree: {}", profile.degree().map_or_else(|| "none (zero module)".into(), |d| d.to_string())))
            .with_table(t),
    );
    doc.push(Section::new("degree-0 transition maps").with_table(maps));
    Ok(doc)
}

pub fn decompose_cmd(e: &FiModule, k: Option<usize>) -> CliResult<Document> {
    let degrees: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=e.max_degree()).collect(),
    };
    let mut t = Table::new(["k", "dim", "decomposition"]);
    for k in degrees {
        let d = stable_decomposition(e, k).during("decompose")?;
        t.push(vec![k.to_string(), e.dim(k).to_string(), d.to_string()]);
    }
    let mut doc = Document::new(format!("Specht decomposition of {}", e.name()));
    doc.push(Section::new("degrees").with_table(t));
    Ok(doc)
}

fn multiplicity_table(predicted: &RepDecomposition, actual: &RepDecomposition) -> Table {
    let mut t = Table::new(["λ", "predicted", "actual"]);
    let keys: std::collections::BTreeSet<&Partition> =
        predicted.multiplicities.keys().chain(actual.multiplicities.keys()).collect();
    for l in keys {
        t.push(vec![l.to_string(), predicted.multiplicity(l).to_string(), actual.multiplicity(l).to_string()]);
    }
    t
}

pub fn predict_cmd(e: &FiModule, k: usize, max_n: Option<usize>) -> CliResult<Document> {
    let profile = coefficient_profile(e, max_n).during("predict")?;
    let predicted = dictionary_prediction(&profile, k).during("predict")?;
    let mut doc = Document::new(format!("Dictionary prediction for {} at k = {k}", e.name()));
    let mut s = Section::new("prediction").note(format!("predicted: {predicted}"));
    if k <= e.max_degree() {
        let actual = stable_decomposition(e, k).during("predict")?;
        s = s
            .note(format!("actual: {actual}"))
            .with_table(multiplicity_table(&predicted, &actual))
            .with_status(Status::from_bool(predicted == actual));
    } else {
        s = s.note(format!("k = {k} lies outside the module's window; no comparison made"));
    }
    doc.push(s);
    Ok(doc)
}

pub fn homology_cmd(n: usize, k: usize, allow_large: bool) -> CliResult<Document> {
    guard("homology", "--n", n, MAX_N, allow_large)?;
    guard("homology", "--k", k, MAX_K, allow_large)?;
    let h = nerve_homology(n, k).during("homology")?;
    let mut t = Table::new(["degree", "rank", "torsion"]);
    for (d, deg) in h.degrees.iter().enumerate() {
        let tors = if deg.torsion.is_empty() { "none".into() } else { join(&deg.torsion) };
        t.push(vec![d.to_string(), deg.betti.to_string(), tors]);
    }
    let mut doc = Document::new(format!("Reduced integral homology of NP({n},{k})"));
    let mut s = Section::new("homology").with_table(t);
    if n >= 1 && k + 1 >= 2 * n {
        match wedge_certificate(n, k) {
            Ok(w) => {
                s = s
                    .note(format!("{w}"))
                    .note(format!("after suspension: concentrated in degree {}", w.suspended_degree()))
                    .with_status(Status::Pass);
            }
            Err(err) => s = s.note(err.to_string()).with_status(Status::Fail),
        }
    } else {
        s = s.note("k < 2n − 1: no concentration claim, homology reported as computed");
    }
    doc.push(s);
    Ok(doc)
}

pub fn kostka_cmd(lambda: &Partition, mu: &Partition) -> CliResult<Document> {
    let value = kostka(lambda, mu).during("kostka")?;
    let mut t = Table::new(["λ", "μ", "K"]);
    t.push(vec![lambda.to_string(), mu.to_string(), value.to_string()]);
    let mut doc = Document::new("Kostka number");
    doc.push(Section::new(format!("K_{{{lambda},{mu}}} = {value}")).with_table(t));
    Ok(doc)
}

pub fn gn_cmd(n: usize, k: usize, allow_large: bool) -> CliResult<Document> {
    guard("gn", "--n", n, MAX_N, allow_large)?;
    guard("gn", "--k", k, MAX_K, allow_large)?;
    let dim = gn_dimension(n, k).during("gn")?;
    let mut doc = Document::new(format!("G_{n}({k})"));
    let mut by_mu = Table::new(["μ ⊢ n", "f^μ", "dim V(μ[k])"]);
    for mu in partitions_of(n) {
        by_mu.push(vec![mu.to_string(), specht_dimension(&mu).to_string(), padded_dimension(&mu, k).to_string()]);
    }
    let alt: i128 = (0..=n.min(k))
        .map(|i| {
            let t = (fi_calc_core::combinat::binomial(n, i) * falling_factorial(k, i)) as i128;
            if (n - i) % 2 == 0 { t } else { -t }
        })
        .sum();
    doc.push(
        Section::new("dimension")
            .note(format!("dimension {dim}"))
            .note(format!("alternating sum Σ (−1)^(n−i) C(n,i) k!/(k−i)! = {alt}"))
            .with_table(by_mu),
    );
    if k >= 2 * n {
        let hook = Partition::hook(k - n, n);
        let mut t = Table::new(["λ ⊢ k", "weight", "χ_λ", "K_{λ,(k−n,1^n)}"]);
        for lambda in partitions_of(k) {
            let chi = gn_character(n, k, &lambda).during("gn")?;
            let kappa = if lambda.weight() == n { kostka(&lambda, &hook).during("gn")?.to_string() } else { "-".into() };
            t.push(vec![lambda.to_string(), lambda.weight().to_string(), chi.to_string(), kappa]);
        }
        doc.push(Section::new("character").with_table(t));
    } else {
        doc.push(Section::new("character").note("k < 2n: the character formula does not apply"));
    }
    Ok(doc)
}
