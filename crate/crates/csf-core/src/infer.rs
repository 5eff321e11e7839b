//! Structural inference: recover cycle size, internal-edge count, rooted-tree
//! count, leaf count, and the cuttlefish property of an unknown connected
//! unicyclic graph from its star-basis expansion alone.

use crate::formulas::{cuttlefish_leading, num_leaves_from_leading, unicyclic_hook_coeff, HookParams, RCase};
use crate::partition::Partition;
use crate::star::StarExpansion;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InferError {
    #[error("expansion is not the CSF of a connected unicyclic graph: {0}")]
    Inconsistent(String),
}

/// Everything the hook coefficients and leading partition reveal. When the
/// expansion cannot tell r = 1 from r = c, `kr_candidates` carries both and
/// the leaf count follows suit; no tie-break is invented.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub n: u32,
    /// Cycle size c, read off c_(n) = c − 1.
    pub cycle_size: u32,
    /// True iff the graph is C_n itself (c_(n) = n − 1).
    pub is_pure_cycle: bool,
    /// Largest m₁ with a nonzero hook coefficient.
    pub longest_hook_m: u32,
    /// (k, r) pairs consistent with every hook coefficient; a singleton
    /// whenever 1 < r < c, else exactly the {r=1, r=c} pair.
    pub kr_candidates: BTreeSet<(u32, u32)>,
    /// Leaf counts implied by the leading partition under each surviving r.
    pub leaf_count_candidates: BTreeSet<u64>,
    /// True iff the leading partition is (t+1, 2, 1^{c−3}) for t = n − c ≥ 1.
    pub is_cuttlefish: bool,
}

fn small(x: &BigInt, what: &str) -> Result<i64, InferError> {
    x.to_i64().ok_or_else(|| InferError::Inconsistent(format!("{what} out of range: {x}")))
}

/// Reads the structure of a connected unicyclic graph off its expansion.
/// The caller asserts the expansion really is such a CSF; violations show
/// up as `Inconsistent`.
pub fn infer(x: &StarExpansion) -> Result<StructuralReport, InferError> {
    let n = x.degree();
    if n < 3 {
        return Err(InferError::Inconsistent(format!("degree {n} < 3")));
    }
    let cn = x.coeff(&Partition::single(n));
    let c = small(&cn, "c_(n)")? + 1;
    if !(3..=n as i64).contains(&c) {
        return Err(InferError::Inconsistent(format!("c_(n) = {cn} gives cycle size {c}")));
    }
    let c = c as u32;

    let hooks: Vec<BigInt> =
        (0..=n - 2).map(|m1| x.coeff(&Partition::hook(n - m1, m1))).collect();
    let m = hooks
        .iter()
        .rposition(|h| !h.is_zero())
        .ok_or_else(|| InferError::Inconsistent("no nonzero hook coefficient".into()))?
        as u32;

    let is_pure_cycle = c == n;
    let (lead, _) = x
        .leading_term()
        .map_err(|_| InferError::Inconsistent("empty expansion".into()))?;

    let mut kr_candidates: BTreeSet<(u32, u32)> = BTreeSet::new();
    if is_pure_cycle {
        kr_candidates.insert((n, 0));
    } else {
        // c_(n−1,1) = −[(r−1) + (c−1)(k−2)] pins r once k ∈ {m+1, m+2} is
        // fixed; the two roots differ by c − 1 and structure discards the
        // impossible ones (r < 0, r > c, k < c, or r = 0 off the cycle).
        let c1 = small(&hooks[1], "c_(n−1,1)")?;
        let r_for = |k: i64| 1 - c1 - (c as i64 - 1) * (k - 2);
        for (k, lo, hi) in [(m as i64 + 2, 1, 1), (m as i64 + 1, 2, c as i64)] {
            let r = r_for(k);
            if (lo..=hi).contains(&r) && k >= c as i64 {
                kr_candidates.insert((k as u32, r as u32));
            }
        }
        // a candidate must reproduce the whole hook vector
        kr_candidates.retain(|&(k, r)| {
            hooks.iter().enumerate().all(|(m1, h)| {
                *h == unicyclic_hook_coeff(HookParams { n, c, k, r, m1: m1 as u32 })
            })
        });
        if kr_candidates.is_empty() {
            return Err(InferError::Inconsistent(
                "no (k, r) candidate satisfies all hook equations".into(),
            ));
        }
    }

    let mut leaf_count_candidates = BTreeSet::new();
    for &(_, r) in &kr_candidates {
        let leaves = match r {
            0 => 0,
            1 => num_leaves_from_leading(&lead, RCase::R1),
            _ => num_leaves_from_leading(&lead, RCase::RGe2),
        };
        leaf_count_candidates.insert(leaves);
    }

    let t = n - c;
    let is_cuttlefish = t >= 1 && lead == cuttlefish_leading(c, t);

    Ok(StructuralReport {
        n,
        cycle_size: c,
        is_pure_cycle,
        longest_hook_m: m,
        kr_candidates,
        leaf_count_candidates,
        is_cuttlefish,
    })
}

/// Exact equality of expansions: identical supports and coefficients.
pub fn csf_equal(a: &StarExpansion, b: &StarExpansion) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::fixtures::{csf_twins_12, hook_twin_a, hook_twin_b, unicyclic14};
    use crate::star::star_expand;

    #[test]
    fn pure_cycle() {
        let report = infer(&star_expand(&families::cycle(8).unwrap())).unwrap();
        assert_eq!(report.cycle_size, 8);
        assert!(report.is_pure_cycle);
        assert_eq!(report.kr_candidates.iter().collect::<Vec<_>>(), vec![&(8, 0)]);
        assert_eq!(report.leaf_count_candidates.iter().collect::<Vec<_>>(), vec![&0]);
        assert!(!report.is_cuttlefish);
        // the equivalent pure-cycle test: c_(2,1^{n−2}) ≠ 0
        let x = star_expand(&families::cycle(8).unwrap());
        assert!(!x.coeff(&Partition::hook(2, 6)).is_zero());
    }

    #[test]
    fn ambiguous_twins() {
        for g in [hook_twin_a(), hook_twin_b()] {
            let report = infer(&star_expand(&g)).unwrap();
            assert_eq!(report.cycle_size, 4);
            let kr: Vec<_> = report.kr_candidates.iter().copied().collect();
            assert_eq!(kr, vec![(4, 4), (5, 1)]);
        }
    }

    #[test]
    fn unique_recovery() {
        let report = infer(&star_expand(&unicyclic14())).unwrap();
        assert_eq!(report.cycle_size, 4);
        assert_eq!(report.kr_candidates.iter().collect::<Vec<_>>(), vec![&(7, 3)]);
        assert!(!report.is_pure_cycle);
        assert!(!report.is_cuttlefish);
    }

    #[test]
    fn cuttlefish_flag() {
        let report = infer(&star_expand(&families::paw())).unwrap();
        assert!(report.is_cuttlefish);
        assert_eq!(report.cycle_size, 3);
        let report = infer(&star_expand(&families::cuttlefish(5, 4).unwrap())).unwrap();
        assert!(report.is_cuttlefish);
        // the pan is C_{n−1,1}, a cuttlefish with one tentacle
        let report = infer(&star_expand(&families::pan(6).unwrap())).unwrap();
        assert!(report.is_cuttlefish);
        let report = infer(&star_expand(&crate::fixtures::triangle_spider6())).unwrap();
        assert!(!report.is_cuttlefish);
    }

    #[test]
    fn equality_and_errors() {
        let (a, b) = csf_twins_12();
        assert!(csf_equal(&star_expand(&a), &star_expand(&b)));
        assert!(!csf_equal(
            &star_expand(&families::path(5).unwrap()),
            &star_expand(&families::star(5).unwrap())
        ));
        let x = star_expand(&families::path(5).unwrap());
        assert!(infer(&x).is_err(), "a tree has c_(n) = 1, cycle size 2");
    }

    #[test]
    fn report_serialization() {
        let report = infer(&star_expand(&unicyclic14())).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: StructuralReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
