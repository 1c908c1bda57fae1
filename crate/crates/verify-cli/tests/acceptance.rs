//! Acceptance suite: one test per acceptance criterion, each printing a
//! single PASS/FAIL line (visible with `--nocapture`). Every test drives the
//! same library code paths as the `verify` binary.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use criticality::{is_id_factor_critical_def, is_id_factor_critical_tutte, structured_graph};
use extremal::{build_factor_extremal, factor_extremal_partition};
use factor_core::{fractional_factor_lp, fractional_factor_oracle, DegreeBoundSpec};
use graph_core::Graph;
use spectra::{quotient_matrix, quotient_spectral_radius, spectral_radius};
use verify_cli::{
    check_claims, check_lemmas, check_theorem4, load_graph6_file, CorpusEntry, ReportBuilder,
    FACTOR_PAIRS,
};

fn verdict(name: &str, ok: bool, detail: &str) {
    println!("{}: {name}{}", if ok { "PASS" } else { "FAIL" }, if detail.is_empty() {
        String::new()
    } else {
        format!(" — {detail}")
    });
    assert!(ok, "{name}: {detail}");
}

fn corpus(order: usize) -> Vec<CorpusEntry> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpora")
        .join(format!("graph{order}.g6"));
    let (entries, errors) = load_graph6_file(&path).unwrap();
    assert!(errors.is_empty(), "corpus {order} has parse errors");
    entries
}

fn corpora(orders: std::ops::RangeInclusive<usize>) -> Vec<CorpusEntry> {
    orders.flat_map(corpus).collect()
}

#[test]
fn criterion_1_exhaustive_factor_theorem_on_full_corpora() {
    let entries = corpora(5..=8);
    let mut failures = Vec::new();
    let mut parity_ok = true;
    for (a, b) in FACTOR_PAIRS {
        let report = check_theorem4(&entries, a, b, 1e-8).unwrap();
        failures.extend(report.failures.iter().map(|f| format!("(a={a},b={b}) {}", f.input)));
        if a == b {
            // Odd-order cells must be skipped for parity, never silently run.
            let odd_graphs: usize = entries
                .iter()
                .filter(|e| (e.graph.n() * a as usize) % 2 == 1)
                .count();
            parity_ok &= report.skipped == odd_graphs;
        }
    }
    verdict(
        "exhaustive factor-theorem corpus check, orders 5-8, five (a,b) pairs \
         with boundary-class exactness",
        failures.is_empty() && parity_ok,
        &format!("failures: {failures:?}, parity accounting ok: {parity_ok}"),
    );
}

#[test]
fn criterion_2_oracle_and_flow_routes_agree() {
    let entries = corpora(1..=7);
    let disagreements: usize = entries
        .par_iter()
        .map(|entry| {
            let mut bad = 0;
            for (a, b) in FACTOR_PAIRS {
                let bounds = DegreeBoundSpec::uniform(entry.graph.n(), a, b).unwrap();
                let oracle = fractional_factor_oracle(&entry.graph, &bounds).unwrap().exists();
                let lp = fractional_factor_lp(&entry.graph, &bounds).unwrap().exists();
                if oracle != lp {
                    bad += 1;
                }
            }
            bad
        })
        .sum();
    verdict(
        "subset-oracle vs flow-route equivalence on all graphs of order <= 7",
        disagreements == 0,
        &format!("{disagreements} disagreements"),
    );
}

#[test]
fn criterion_3_criticality_routes_agree() {
    let entries = corpora(1..=8);
    let disagreements: usize = entries
        .par_iter()
        .map(|entry| {
            let def = is_id_factor_critical_def(&entry.graph).unwrap().holds();
            let tutte = is_id_factor_critical_tutte(&entry.graph).unwrap().holds();
            usize::from(def != tutte)
        })
        .sum();
    verdict(
        "definitional vs odd-component criticality routes on all graphs of order <= 8",
        disagreements == 0,
        &format!("{disagreements} disagreements"),
    );
}

#[test]
fn criterion_4_extremal_radius_three_ways() {
    let mut worst: f64 = 0.0;
    for a in 1..=5usize {
        for n in 5..=200usize {
            if n < a + 2 {
                continue;
            }
            let g = build_factor_extremal(n, a).unwrap();
            let direct = spectral_radius(&g, 1e-10).unwrap().value;
            let quotient = quotient_spectral_radius(
                &quotient_matrix(&g, &factor_extremal_partition(n, a).unwrap()).unwrap(),
            );
            worst = worst.max((direct - quotient).abs());
            if a == 1 {
                worst = worst.max((direct - (n as f64 - 2.0)).abs());
            }
        }
    }
    verdict(
        "extremal-family spectral radius agrees across power iteration, quotient \
         eigensolve, and the closed form, n in 5..=200",
        worst < 1e-8,
        &format!("worst discrepancy {worst:.3e}"),
    );
}

#[test]
fn criterion_5_lemma_property_suites() {
    let report = check_lemmas(&corpora(1..=8), 1e-8).unwrap();
    verdict(
        "Hamilton-path, edge-count sufficiency, spectral bound and bound-monotonicity \
         suites on the full corpora",
        report.failures.is_empty() && report.skipped == 0,
        &format!("{} failures, {} skipped", report.failures.len(), report.skipped),
    );
}

#[test]
fn criterion_6_join_comparison_sweep() {
    let mut builder = ReportBuilder::new();
    verify_cli::sample_join_comparisons(200, &mut builder);
    let report = builder.finish("join", std::time::Instant::now());
    verdict(
        "200 sampled join-comparison inequalities all strict",
        report.cases == 200 && report.failures.is_empty(),
        &format!("{} cases, {} failures", report.cases, report.failures.len()),
    );
}

#[test]
fn criterion_7_structured_witness_sweep() {
    let mut bad = Vec::new();
    for r in 1..=2usize {
        for delta in 4..=7usize {
            if delta < 3 * r + 1 {
                continue;
            }
            for n in (2 * delta + r + 2)..=(2 * delta + r + 100) {
                let rep = criticality::structured_witness(n, delta, r).unwrap();
                let w = &rep.witness;
                if w.s.len() != delta
                    || w.odd_count <= delta
                    || (w.odd_count != delta + 1 && w.odd_count != delta + 2)
                {
                    bad.push((n, delta, r));
                }
            }
        }
    }
    verdict(
        "structured non-criticality witness validates with oddCount > |S| = delta \
         on the full (delta, r, n) grid",
        bad.is_empty(),
        &format!("bad cells: {bad:?}"),
    );
}

#[test]
fn criterion_8_claim_sweeps() {
    let (report, csv) = check_claims(&[4, 5], 1, 50, 0);
    let claim5_failures = report
        .failures
        .iter()
        .filter(|f| f.input.starts_with("below-extremal"))
        .count();
    let poly_failures = report
        .failures
        .iter()
        .filter(|f| f.input.starts_with("clique-tail-bound") && f.observed.contains("rhs = 0.0000"))
        .count();
    let bound_rows: Vec<&String> = csv
        .iter()
        .filter(|row| row.starts_with("clique-tail-bound") && !row.contains(",skipped"))
        .collect();
    let bound_all_refuted =
        !bound_rows.is_empty() && bound_rows.iter().all(|row| row.contains(",fails,"));
    verdict(
        "numeric claim sweeps: below-extremal comparison clean, auxiliary polynomial \
         non-negative, clique-tail spectral bound refuted on every in-regime cell \
         (documented discrepancy)",
        claim5_failures == 0 && poly_failures == 0 && bound_all_refuted,
        &format!(
            "claim5 failures: {claim5_failures}, polynomial failures: {poly_failures}, \
             bound cells: {} all refuted: {bound_all_refuted}",
            bound_rows.len()
        ),
    );
}

#[test]
fn criterion_9_substituted_structural_acceptance() {
    // (ii) small analogues: both routes agree everywhere; the family is not
    // ID-factor-critical exactly when r ≡ n (mod 2) (the case where the
    // structural witness qualifies under the parity quantifier).
    let mut analogue_ok = true;
    for k in 2..=3usize {
        for r in 1..=2usize {
            for n in (2 * k + r + 2)..=12 {
                let g = structured_graph(n, k, r).unwrap();
                let def = is_id_factor_critical_def(&g).unwrap().holds();
                let tutte = is_id_factor_critical_tutte(&g).unwrap().holds();
                let expected_critical = r % 2 != n % 2;
                analogue_ok &= def == tutte && def == expected_critical;
            }
        }
    }

    // (iii) spanning-subgraph chains: adding edges never lowers the radius.
    let mut rng = ChaCha8Rng::seed_from_u64(0x636861696e);
    let mut chain_ok = true;
    for _ in 0..100 {
        let n = rng.gen_range(4..=40usize);
        let p = rng.gen_range(0.2..0.9);
        let mut all: Vec<(usize, usize)> = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    all.push((u, v));
                }
            }
        }
        let cut1 = rng.gen_range(0..=all.len());
        let cut2 = rng.gen_range(0..=cut1);
        let rho = |edges: &[(usize, usize)]| {
            spectral_radius(&Graph::from_edges(n, edges).unwrap(), 1e-10)
                .unwrap()
                .value
        };
        let (r_small, r_mid, r_big) = (rho(&all[..cut2]), rho(&all[..cut1]), rho(&all));
        chain_ok &= r_small <= r_mid + 1e-9 && r_mid <= r_big + 1e-9;
    }

    verdict(
        "substituted structural acceptance: small-analogue criticality pattern and \
         100 spanning-subgraph spectral chains (proof-stage items covered by the \
         lemma, witness and claim criteria)",
        analogue_ok && chain_ok,
        &format!("analogues ok: {analogue_ok}, chains ok: {chain_ok}"),
    );
}
