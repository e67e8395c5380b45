//! One line per acceptance criterion, each with its pinned bounds and time
//! limit. Lines are written straight to stdout so they show without
//! `--nocapture`.

use std::io::Write;
use std::time::{Duration, Instant};

use cubeset::checks::{self, Bounds, SweepReport};
use cubeset::cube_theory::{enumerate_hom, Theory};
use cubeset::decomposition::Flavor;

struct Outcome {
    ok: bool,
    detail: String,
}

fn sweep(id: &str, max_dim: usize, max_k: usize, theory: Option<Theory>) -> SweepReport {
    let b = Bounds { max_dim, max_k, theory, flavor: Flavor::Meet };
    checks::run(id, &b).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn sweeps(runs: &[(&str, usize, usize, Option<Theory>)]) -> Outcome {
    let mut cases = 0;
    let mut failures = 0;
    let mut first = None;
    for &(id, d, k, t) in runs {
        let r = sweep(id, d, k, t);
        cases += r.cases;
        failures += r.failure_count;
        if first.is_none() {
            first = r.failures.first().map(|f| format!(" first: {id} {}", f.law));
        }
    }
    Outcome {
        ok: failures == 0 && cases > 0,
        detail: format!("{cases} cases, {failures} failures{}", first.unwrap_or_default()),
    }
}

fn criterion(n: usize, name: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = body();
    let took = start.elapsed();
    let ok = out.ok && took <= limit;
    let verdict = if ok { "PASS" } else { "FAIL" };
    let mut stdout = std::io::stdout().lock();
    writeln!(
        stdout,
        "criterion {n} {verdict}: {name}: {} in {:.2}s (limit {}s)",
        out.detail,
        took.as_secs_f64(),
        limit.as_secs()
    )
    .unwrap();
    ok
}

const N_SUITES: [&str; 7] =
    ["n-explicit", "n-identities", "n-faces", "n-active", "n-k-tensor", "n-tail-length", "n-right-tensor"];

#[test]
fn acceptance() {
    let mins = |m: u64| Duration::from_secs(60 * m);
    let mut results = Vec::new();

    results.push(criterion(1, "cubical identities, n ≤ 4", Duration::from_secs(5), || {
        sweeps(&[("cubical-identities", 4, 0, None)])
    }));

    results.push(criterion(2, "factorization round-trip and uniqueness, m,n ≤ 3", mins(2), || {
        let runs: Vec<_> = checks::factorization_theories().into_iter().map(|t| ("factorization", 3, 0, Some(t))).collect();
        sweeps(&runs)
    }));

    results.push(criterion(3, "hom-set counts against oracles", mins(10), || {
        let empty = enumerate_hom(Theory::EMPTY, 1, 1).unwrap().len();
        let poset = enumerate_hom(Theory::POSET, 2, 1).unwrap().len();
        let mut out = sweeps(&[("hom", 3, 0, Some(Theory::FULL)), ("hom", 3, 0, Some(Theory::POSET))]);
        out.ok &= empty == 3 && poset == 6;
        out.detail = format!("|hom_∅(1,1)| = {empty}, |hom_P(2,1)| = {poset}, {}", out.detail);
        out
    }));

    results.push(criterion(4, "decomposition cube lemmas, m,n ≤ 2, k ≤ 2", mins(5), || {
        let mut runs: Vec<_> = checks::n_suite_theories()
            .into_iter()
            .flat_map(|t| N_SUITES.iter().map(move |&id| (id, 2, 2, Some(t))))
            .collect();
        runs.push(("n-crit-edge", 2, 2, None));
        sweeps(&runs)
    }));

    results.push(criterion(5, "boundary as a gluing of faces, n ∈ {2,3}", mins(2), || {
        sweeps(&[("boundary-gluing", 3, 0, None)])
    }));

    results.push(criterion(6, "left Kan extension", mins(2), || sweeps(&[("kan-extension", 3, 0, None)])));

    results.push(criterion(7, "product comparison", mins(5), || sweeps(&[("product-comparison", 3, 0, None)])));

    results.push(criterion(8, "anodyne certificates and mutations", mins(10), || sweeps(&[("anodyne", 3, 0, None)])));

    results.push(criterion(9, "degenerate cubes never have exactly one non-degenerate face", mins(2), || {
        sweeps(&[("degen-one-face", 3, 0, Some(Theory::MEET)), ("degen-one-face", 3, 0, Some(Theory::MEET_JOIN))])
    }));

    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
