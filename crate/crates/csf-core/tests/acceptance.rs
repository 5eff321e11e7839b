//! Acceptance suite: one test per criterion, each printing a pass line with
//! its scale and wall time. Everything is exact integer equality; the listed
//! scales are the contract.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use csf_core::enumerate::{
    collision_search, connected_graphs, enumerate_unicyclic_all, unicyclic_bruteforce,
    verify_theorems, CollisionReport, VerifyReport,
};
use csf_core::families;
use csf_core::formulas::{
    bicyclic_cn, cycle_coeff, cycle_csf, pan_csf, path_csf, unicyclic_hook_coeff, BicyclicShape,
    HookParams,
};
use csf_core::graph::Graph;
use csf_core::infer::csf_equal;
use csf_core::io::from_graph6;
use csf_core::partition::{partitions_of, Partition};
use csf_core::psum::oracle_star_expansion;
use csf_core::star::{star_expand, StarExpansion};
use csf_core::words::{lambda_word_counts, WordFamily};
use csf_core::{canonical_form, canonical_labeling};
use num_bigint::BigInt;
use num_traits::Signed;
use once_cell::sync::Lazy;
use rayon::prelude::*;
use std::collections::HashSet;
use std::time::Instant;

fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn exp(n: u32, terms: &[(&[u32], i64)]) -> StarExpansion {
    StarExpansion::from_terms(n, terms.iter().map(|&(p, c)| (pt(p), BigInt::from(c))))
}

/// Triangle with the 3-leaf spider tree attached at one cycle vertex.
fn triangle_spider6() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap()
}

/// The published non-isomorphic 12-vertex pair with equal CSF (4-cycle).
fn csf_twins_12() -> (Graph, Graph) {
    let a = Graph::from_edges(
        12,
        &[
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 1),
            (3, 5),
            (1, 9),
            (9, 10),
            (9, 7),
            (7, 8),
            (2, 6),
            (2, 4),
            (4, 11),
        ],
    )
    .unwrap();
    let b = Graph::from_edges(
        12,
        &[
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 1),
            (1, 10),
            (3, 4),
            (4, 11),
            (1, 8),
            (8, 9),
            (8, 6),
            (6, 7),
            (2, 5),
        ],
    )
    .unwrap();
    (a, b)
}

static VERIFY_10: Lazy<VerifyReport> = Lazy::new(|| verify_theorems(10).expect("sweep runs"));

/// Collision reports for the whole criterion-8/10 grid, computed once.
static COLLISIONS: Lazy<Vec<CollisionReport>> = Lazy::new(|| {
    let mut grid: Vec<(usize, usize)> = Vec::new();
    grid.extend((3..=11).map(|n| (n, 3)));
    grid.extend((4..=12).map(|n| (n, 4)));
    grid.extend((5..=12).map(|n| (n, 5)));
    grid.extend((6..=12).map(|n| (n, 6)));
    grid.into_iter().map(|(n, c)| collision_search(n, c, None).expect("in range")).collect()
});

fn report_for(n: u32, c: u32) -> &'static CollisionReport {
    COLLISIONS.iter().find(|r| r.n == n && r.c == c).expect("grid covers (n, c)")
}

#[test]
fn criterion_01_golden_expansions() {
    let t = Instant::now();
    assert_eq!(
        star_expand(&families::paw()),
        exp(4, &[(&[4], 2), (&[3, 1], -2), (&[2, 2], 1)])
    );
    assert_eq!(
        star_expand(&families::cycle(3).unwrap()),
        exp(3, &[(&[3], 2), (&[2, 1], -1)])
    );
    assert_eq!(
        star_expand(&triangle_spider6()),
        exp(
            6,
            &[
                (&[6], 2),
                (&[5, 1], -4),
                (&[4, 2], 1),
                (&[4, 1, 1], 2),
                (&[3, 3], 2),
                (&[3, 2, 1], -2),
            ],
        )
    );
    println!("criterion 1 (golden expansions): PASS ({:.2?})", t.elapsed());
}

#[test]
fn criterion_02_hook_formula_twins() {
    let t = Instant::now();
    let twin_a =
        Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)])
            .unwrap();
    let twin_b =
        Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (4, 6), (4, 7)])
            .unwrap();
    let want: Vec<BigInt> =
        [3, -9, 9, -3, 0, 0, 0].iter().map(|&v| BigInt::from(v)).collect();
    for g in [&twin_a, &twin_b] {
        let x = star_expand(g);
        let hooks: Vec<BigInt> = (0..=6).map(|m1| x.coeff(&Partition::hook(8 - m1, m1))).collect();
        assert_eq!(hooks, want, "engine hook vector of {g:?}");
    }
    for (k, r) in [(4u32, 4u32), (5, 1)] {
        let formula: Vec<BigInt> = (0..=6)
            .map(|m1| unicyclic_hook_coeff(HookParams { n: 8, c: 4, k, r, m1 }))
            .collect();
        assert_eq!(formula, want, "closed form at k={k}, r={r}");
    }
    println!("criterion 2 (hook formula, twin pair): PASS ({:.2?})", t.elapsed());
}

#[test]
fn criterion_03_oracle_equivalence() {
    let t = Instant::now();
    let mut connected_total = 0usize;
    for n in 1..=8 {
        let graphs = connected_graphs(n).unwrap();
        connected_total += graphs.len();
        graphs.par_iter().for_each(|g| {
            assert_eq!(
                oracle_star_expansion(g).unwrap(),
                star_expand(g),
                "oracle mismatch on {g:?}"
            );
        });
    }
    assert_eq!(connected_total, 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117);
    let mut unicyclic_total = 0usize;
    for n in 3..=10 {
        let graphs = enumerate_unicyclic_all(n).unwrap();
        unicyclic_total += graphs.len();
        graphs.par_iter().for_each(|g| {
            assert_eq!(oracle_star_expansion(g).unwrap(), star_expand(g));
        });
    }
    assert_eq!(unicyclic_total, 1 + 2 + 5 + 13 + 33 + 89 + 240 + 657);
    println!(
        "criterion 3 (oracle equivalence, {connected_total} connected ≤ 8 and {unicyclic_total} unicyclic ≤ 10): PASS ({:.2?})",
        t.elapsed()
    );
}

#[test]
fn criterion_04_closed_form_families() {
    let t = Instant::now();
    for n in 4..=10u32 {
        assert_eq!(
            path_csf(n).unwrap(),
            star_expand(&families::path(n as usize).unwrap()),
            "path n = {n}"
        );
        assert_eq!(
            pan_csf(n).unwrap(),
            star_expand(&families::pan(n as usize).unwrap()),
            "pan n = {n}"
        );
    }
    for n in 3..=10u32 {
        assert_eq!(
            cycle_csf(n).unwrap(),
            star_expand(&families::cycle(n as usize).unwrap()),
            "cycle n = {n}"
        );
    }
    // two-part rule on cycles: c_λ = n for λ₁ > λ₂ ≥ 2, n/2 on (n/2, n/2)
    for n in 4..=10u32 {
        let x = cycle_csf(n).unwrap();
        for l2 in 2..=(n - 1) / 2 {
            assert_eq!(x.coeff(&pt(&[n - l2, l2])), BigInt::from(n));
        }
        if n % 2 == 0 {
            assert_eq!(x.coeff(&pt(&[n / 2, n / 2])), BigInt::from(n / 2));
        }
    }
    // |c_(3,3,1^{n−6})| runs 0, 3, 14, 40, 90, 175 for n = 5..10
    let seq: Vec<BigInt> = (5..=10u32)
        .map(|n| {
            if n < 6 {
                BigInt::from(0)
            } else {
                cycle_coeff(n, &pt(&[3, 3]).with_extra_ones(n - 6)).abs()
            }
        })
        .collect();
    let want: Vec<BigInt> = [0, 3, 14, 40, 90, 175].iter().map(|&v| BigInt::from(v)).collect();
    assert_eq!(seq, want);
    println!("criterion 4 (closed-form families, n ≤ 10): PASS ({:.2?})", t.elapsed());
}

#[test]
fn criterion_05_lambda_word_oracle() {
    let t = Instant::now();
    let mut checked = 0usize;
    let cases: [(WordFamily, u32); 3] =
        [(WordFamily::Path, 4), (WordFamily::Cycle, 3), (WordFamily::Pan, 4)];
    for (family, min_n) in cases {
        for n in min_n..=9 {
            let g = match family {
                WordFamily::Path => families::path(n as usize).unwrap(),
                WordFamily::Cycle => families::cycle(n as usize).unwrap(),
                WordFamily::Pan => families::pan(n as usize).unwrap(),
            };
            let x = star_expand(&g);
            let counts = lambda_word_counts(family, n).unwrap();
            for lam in partitions_of(n) {
                let want = x.coeff(&lam).abs();
                let got = counts.get(&lam).cloned().unwrap_or_default();
                assert_eq!(got, want, "{family:?} n = {n}, λ = {lam:?}");
                checked += 1;
            }
        }
    }
    println!("criterion 5 (λ-word oracle, {checked} coefficients ≤ 9): PASS ({:.2?})", t.elapsed());
}

#[test]
fn criterion_06_leading_structure_exhaustive() {
    let t = Instant::now();
    let report = &*VERIFY_10;
    assert_eq!(report.graphs_checked, 1040);
    for name in ["leading-partition", "leading-coefficient", "leaf-count"] {
        let outcome = report.checks.iter().find(|c| c.name == name).unwrap();
        assert_eq!(outcome.fail, 0, "{name}: {:?}", outcome.counterexample);
        assert_eq!(outcome.pass, 1040);
    }
    println!(
        "criterion 6 (leading partition/coefficient/leaves, 1040 unicyclic ≤ 10): PASS ({:.2?})",
        t.elapsed()
    );
}

#[test]
fn criterion_07_inference_soundness_exhaustive() {
    let t = Instant::now();
    let report = &*VERIFY_10;
    let outcome = report.checks.iter().find(|c| c.name == "inference-soundness").unwrap();
    assert_eq!(outcome.fail, 0, "{:?}", outcome.counterexample);
    assert_eq!(outcome.pass, 1040);
    // hook machinery and the CSF-equality group laws must be clean too
    for name in [
        "hook-coefficients",
        "longest-hook",
        "decomposition",
        "equal-csf-same-cycle",
        "equal-k-forces-equal-r",
        "conjecture-degree-r-k",
    ] {
        let outcome = report.checks.iter().find(|c| c.name == name).unwrap();
        assert_eq!(outcome.fail, 0, "{name}: {:?}", outcome.counterexample);
    }
    assert!(report.all_passed());
    println!(
        "criterion 7 (inference soundness, 1040 unicyclic ≤ 10): PASS ({:.2?})",
        t.elapsed()
    );
}

#[test]
fn criterion_08_collision_data() {
    let t = Instant::now();
    // the fast generator is validated against brute force once at scale
    let fast: HashSet<Vec<u8>> =
        enumerate_unicyclic_all(9).unwrap().iter().map(canonical_form).collect();
    let brute: HashSet<Vec<u8>> =
        unicyclic_bruteforce(9).unwrap().iter().map(canonical_form).collect();
    assert_eq!(fast, brute);
    assert_eq!(fast.len(), 240);

    for n in [3u32, 4, 5, 7, 9, 11] {
        assert_eq!(report_for(n, 3).pair_count, 0, "c = 3, n = {n}");
    }
    for n in [6u32, 8, 10] {
        assert!(report_for(n, 3).pair_count >= 1, "c = 3, n = {n}");
    }
    for n in 4..=11u32 {
        assert_eq!(report_for(n, 4).pair_count, 0, "c = 4, n = {n}");
    }
    let at12 = report_for(12, 4);
    assert_eq!(at12.pair_count, 1, "exactly one pair at n = 12, c = 4");
    assert_eq!(at12.classes.len(), 1);
    assert_eq!(at12.classes[0].graphs.len(), 2);

    // the pair is exactly the published drawing
    let (a, b) = csf_twins_12();
    assert!(csf_equal(&star_expand(&a), &star_expand(&b)));
    let mut want: Vec<Vec<u8>> = vec![canonical_form(&a), canonical_form(&b)];
    want.sort();
    let mut got: Vec<Vec<u8>> = at12.classes[0]
        .graphs
        .iter()
        .map(|g6| canonical_form(&from_graph6(g6).unwrap()))
        .collect();
    got.sort();
    assert_eq!(got, want, "the n = 12 class must be the published pair");

    for n in 5..=12u32 {
        assert_eq!(report_for(n, 5).pair_count, 0, "c = 5, n = {n}");
    }
    for n in 6..=12u32 {
        assert_eq!(report_for(n, 6).pair_count, 0, "c = 6, n = {n}");
    }
    println!(
        "criterion 8 (collision data, c ∈ 3..6, n ≤ 12, generator checked at n = 9): PASS ({:.2?})",
        t.elapsed()
    );
}

#[test]
fn criterion_09_bicyclic_formulas() {
    let t = Instant::now();
    let mut checked = 0;
    for s in 3..=5u32 {
        for tt in 3..=5u32 {
            for ell in 1..=3u32 {
                let g = families::bicyclic_type1(s as usize, tt as usize, ell as usize).unwrap();
                assert!(g.vertex_count() <= 12);
                let x = star_expand(&g);
                assert_eq!(
                    x.coeff(&Partition::single(g.vertex_count() as u32)),
                    bicyclic_cn(BicyclicShape::TypeI, s, tt, ell),
                    "type-I s={s} t={tt} ℓ={ell}"
                );
                checked += 1;

                let valid_type2 = ell < s.min(tt) && !(s - ell == 1 && tt - ell == 1);
                if valid_type2 {
                    let g =
                        families::bicyclic_type2(s as usize, tt as usize, ell as usize).unwrap();
                    assert!(g.vertex_count() <= 12);
                    let x = star_expand(&g);
                    assert_eq!(
                        x.coeff(&Partition::single(g.vertex_count() as u32)),
                        bicyclic_cn(BicyclicShape::TypeII, s, tt, ell),
                        "type-II s={s} t={tt} ℓ={ell}"
                    );
                    checked += 1;
                }
            }
        }
    }
    println!("criterion 9 (bicyclic c_(n), {checked} graphs): PASS ({:.2?})", t.elapsed());
}

#[test]
fn criterion_10_conjecture_reverification() {
    let t = Instant::now();
    // scope: CSF-equal unicyclic pairs with c ≥ 4, or c = 3 with odd n
    let mut classes_in_scope = 0;
    for report in COLLISIONS.iter() {
        let in_scope = report.c >= 4 || report.n % 2 == 1;
        if !in_scope {
            continue;
        }
        for class in &report.classes {
            classes_in_scope += 1;
            let members: Vec<Graph> =
                class.graphs.iter().map(|g6| from_graph6(g6).unwrap()).collect();
            let signature = |g: &Graph| {
                let d = g.unicyclic_decompose().unwrap();
                (g.degree_sequence(), d.r, g.internal_edges().len())
            };
            let first = signature(&members[0]);
            for g in &members[1..] {
                assert_eq!(
                    signature(g),
                    first,
                    "conjecture violated at n = {}, c = {}: {:?}",
                    report.n,
                    report.c,
                    class.graphs
                );
            }
        }
    }
    // the published 12-vertex pair is in scope, so the sweep saw something
    assert!(classes_in_scope >= 1);
    println!(
        "criterion 10 (conjecture re-verification, {classes_in_scope} class(es) in scope ≤ 12): PASS ({:.2?})",
        t.elapsed()
    );
}

/// The published 13-vertex pair with equal CSF (4-cycle).
fn csf_twins_13() -> (Graph, Graph) {
    let a = Graph::from_edges(
        13,
        &[
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 1),
            (3, 5),
            (1, 10),
            (10, 11),
            (7, 8),
            (8, 9),
            (1, 6),
            (2, 4),
            (4, 7),
            (7, 12),
        ],
    )
    .unwrap();
    // the pendant vertex sits on the tail's cycle vertex: the published
    // drawing renders that edge collinearly through it, and the exhaustive
    // search pins this reading as the one with equal CSF
    let b = Graph::from_edges(
        13,
        &[
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 1),
            (2, 5),
            (0, 10),
            (10, 11),
            (7, 8),
            (8, 9),
            (3, 6),
            (2, 4),
            (4, 7),
            (7, 12),
        ],
    )
    .unwrap();
    (a, b)
}

/// Optional extended run: exactly one 4-cycle pair appears at n = 13 and it
/// is the published one. `cargo test --test acceptance -- --ignored`.
#[test]
#[ignore = "extended run beyond the desk-scale gate"]
fn criterion_08_extended_n13_pair() {
    let t = Instant::now();
    let report = collision_search(13, 4, None).unwrap();
    assert_eq!(report.pair_count, 1);
    assert_eq!(report.classes.len(), 1);
    let (a, b) = csf_twins_13();
    assert!(csf_equal(&star_expand(&a), &star_expand(&b)));
    let mut want = vec![canonical_form(&a), canonical_form(&b)];
    want.sort();
    let mut got: Vec<Vec<u8>> = report.classes[0]
        .graphs
        .iter()
        .map(|g6| canonical_form(&from_graph6(g6).unwrap()))
        .collect();
    got.sort();
    assert_eq!(got, want);
    println!("criterion 8 extended (n = 13, c = 4 pair): PASS ({:.2?})", t.elapsed());
}

#[test]
fn engine_and_oracle_stay_independent_spot_check() {
    // belt-and-braces: the canonical labeling feeding the memo keys never
    // leaks into the oracle path, so a relabeled graph must oracle-check too
    let (g, perm) = {
        let g = triangle_spider6();
        let (_, perm) = canonical_labeling(&g);
        (g, perm)
    };
    let h = g.relabel(&perm);
    assert_eq!(oracle_star_expansion(&h).unwrap(), star_expand(&g));
}
