//! Acceptance gate: one test per shipped criterion. Each test prints exactly
//! one `[PASS]`/`[FAIL]` line (visible with `--nocapture` or on failure) and
//! asserts both correctness and, where a budget is stated, the elapsed time.

use std::time::{Duration, Instant};

use gridtop::cutgen::{cut_complex, total_cut_complex};
use gridtop::graph::{make_family, make_grid, GridFamily};
use gridtop::homology::betti_suite;
use gridtop::morse::family_matching_census;
use gridtop::verify::{self, Claim, VerifyOptions};

/// Run the given claim sweeps at default options, print the gate line, and
/// assert that every case passes within the budget.
fn gate(name: &str, budget: Option<Duration>, claims: &[Claim]) {
    let opts = VerifyOptions::default();
    let start = Instant::now();
    let mut cases = Vec::new();
    for &claim in claims {
        cases.extend(verify::run_claim(claim, &opts).expect("claim sweep completes"));
    }
    let elapsed = start.elapsed();
    let ok = verify::all_pass(&cases);
    println!(
        "[{}] {name} ({} cases, {elapsed:.2?})",
        if ok { "PASS" } else { "FAIL" },
        cases.len(),
    );
    assert!(ok, "failing cases:\n{}", verify::render_table(&cases));
    if let Some(limit) = budget {
        assert!(
            elapsed <= limit,
            "{name} exceeded its {limit:?} budget (took {elapsed:.2?})"
        );
    }
}

#[test]
fn criterion_1_betti_table_2row_total() {
    gate(
        "criterion 1: 2-row total k-cut complexes are wedges of C(n-1,k-1) spheres of dimension 2n-2k, k<=n<=6, fields F_2 and F_3",
        Some(Duration::from_secs(30)),
        &[Claim::Betti2xn],
    );
}

#[test]
fn criterion_2_betti_3row_total_3cut() {
    gate(
        "criterion 2: 3-row total 3-cut complexes (plain and primed families) match their closed-form wedge profiles",
        Some(Duration::from_secs(60)),
        &[Claim::Betti3xn],
    );
}

#[test]
fn criterion_3_matching_census() {
    gate(
        "criterion 3: hanging-vertex matchings are acyclic with 2m-4 equicardinal critical cells, matching Betti numbers, and the frozen first-step censuses",
        Some(Duration::from_secs(10)),
        &[Claim::MorseCensus],
    );
}

#[test]
fn criterion_4_shelling_certificates() {
    gate(
        "criterion 4: constructed 2-row cut-complex shelling orders certify (plus exhaustive search at n=3, k=4) and all four shedding-vertex lemmas hold",
        Some(Duration::from_secs(60)),
        &[Claim::Shelling2xn, Claim::SheddingLemmas],
    );
}

#[test]
fn criterion_5_decomposition_identities() {
    gate(
        "criterion 5: star-cover decompositions, pairwise-intersection containments, pruned-intersection identities, and del = st-union-st, all as exact complex equalities",
        Some(Duration::from_secs(60)),
        &[Claim::Decompositions],
    );
}

#[test]
fn criterion_6_oracle_property_suites() {
    gate(
        "criterion 6: total-2-cut equals 2-cut on 200 random graphs; link identity exhaustive on 20 random graphs; simplicial-vertex deletion and suspension shift on leaf family instances",
        None,
        &[
            Claim::Total2EqCut2,
            Claim::LinkLemma,
            Claim::SimplicialDeletion,
        ],
    );
}

#[test]
fn criterion_7_numerical_self_consistency() {
    let start = Instant::now();
    let mut ok = true;
    let mut runs = 0usize;

    // Homology suites across complex shapes: every run must report
    // boundary-squares-to-zero, two-prime Betti agreement, and an Euler
    // characteristic matching the alternating Betti sum.
    let mut complexes = Vec::new();
    for k in 2..=5 {
        complexes.push(total_cut_complex(&make_grid(2, 5).unwrap(), k).unwrap());
    }
    complexes.push(total_cut_complex(&make_grid(3, 3).unwrap(), 3).unwrap());
    complexes.push(total_cut_complex(&make_family(GridFamily::G3xnPrime, 3).unwrap(), 3).unwrap());
    complexes.push(cut_complex(&make_grid(2, 4).unwrap(), 3).unwrap());
    complexes.push(cut_complex(&make_grid(2, 3).unwrap(), 4).unwrap());
    for kx in &complexes {
        let suite = betti_suite(kx, &[2, 3]).expect("suite computes");
        ok &= suite.checks.all_pass();
        runs += 1;
    }

    // Matching runs: every one must satisfy the Morse-Euler identity and the
    // weak Morse inequalities against its own Betti suite.
    for family in [GridFamily::G3xn1, GridFamily::H1] {
        for m in 3..=4 {
            let census = family_matching_census(family, m, 2, &[2, 3]).expect("census computes");
            ok &= census.report.acyclic
                && census.report.morse_euler_ok
                && census.report.weak_morse_ok
                && census.report.betti.checks.all_pass();
            runs += 1;
        }
    }

    let elapsed = start.elapsed();
    println!(
        "[{}] criterion 7: boundary squares to zero, two-prime agreement, and Euler match on every homology run; Morse-Euler and weak Morse on every matching run ({runs} runs, {elapsed:.2?})",
        if ok { "PASS" } else { "FAIL" },
    );
    assert!(ok, "a self-consistency check failed");
}
