//! Closed-form star-basis coefficients as standalone functions of structural
//! parameters: hook coefficients, the full path/cycle/pan expansions, leading
//! partitions and leading coefficients for unicyclic graphs, the cuttlefish
//! leading partition, and the bicyclic c_(n) values.
//!
//! Binomials and multinomials with out-of-range arguments evaluate to zero,
//! which keeps every formula total (several formulas rely on this at the
//! boundary, e.g. m₁ = 0).

use crate::graph::{Graph, GraphError, UnicyclicDecomposition};
use crate::partition::{partitions_of, Partition};
use crate::star::StarExpansion;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("formula requires n ≥ {1}, got {0}")]
    DegreeTooSmall(u32, u32),
    #[error("profile violates r ≥ s: r = {0}, s = {1}")]
    BranchViolation(u32, u32),
    #[error("formula requires r ≥ 2, got {0}")]
    NeedsTwoTrees(u32),
}

/// C(n, k), zero outside 0 ≤ k ≤ n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// (Σ counts)! / ∏ countᵢ!.
pub fn multinomial(counts: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    let mut total = 0i64;
    for &c in counts {
        total += c as i64;
        acc *= binomial(total, c as i64);
    }
    acc
}

fn neg_pow(m: u32) -> BigInt {
    if m.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Hook coefficient of a tree: c_(n−m₁,1^{m₁}) = (−1)^{m₁} C(k, m₁) where k
/// counts internal edges.
pub fn tree_hook_coeff(k: u32, m1: u32) -> BigInt {
    neg_pow(m1) * binomial(k as i64, m1 as i64)
}

/// Structural parameters determining every hook coefficient of a connected
/// unicyclic graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookParams {
    pub n: u32,
    /// Cycle size, c ≥ 3.
    pub c: u32,
    /// Internal edge count, k ≥ c.
    pub k: u32,
    /// Non-trivial rooted trees on the cycle, 0 ≤ r ≤ c.
    pub r: u32,
    /// Count of 1-parts in the hook; m₁ ≤ n − 2.
    pub m1: u32,
}

impl HookParams {
    /// Reads n, c, k, r off a connected unicyclic graph.
    pub fn of_graph(g: &Graph, m1: u32) -> Result<Self, GraphError> {
        let d = g.unicyclic_decompose()?;
        Ok(HookParams {
            n: g.vertex_count() as u32,
            c: d.cycle_size() as u32,
            k: g.internal_edges().len() as u32,
            r: d.r as u32,
            m1,
        })
    }
}

/// c_(n−m₁,1^{m₁}) = (−1)^{m₁} [(r−1) C(k−2, m₁−1) + (c−1) C(k−2, m₁)].
pub fn unicyclic_hook_coeff(p: HookParams) -> BigInt {
    let (k, m1) = (p.k as i64, p.m1 as i64);
    let term = (BigInt::from(p.r as i64 - 1)) * binomial(k - 2, m1 - 1)
        + BigInt::from(p.c as i64 - 1) * binomial(k - 2, m1);
    neg_pow(p.m1) * term
}

/// The largest m₁ with a nonzero hook coefficient and that coefficient,
/// from (c, k, r) alone: m₁ = k−2 when r ∈ {0, 1}, k−1 when r ≥ 2.
pub fn longest_hook_data(c: u32, k: u32, r: u32) -> (u32, BigInt) {
    match r {
        0 => (k - 2, neg_pow(k - 2)),
        1 => (k - 2, neg_pow(k - 2) * BigInt::from(c - 1)),
        _ => (k - 1, neg_pow(k - 1) * BigInt::from(r - 1)),
    }
}

/// Full star-expansion of the path P_n for n ≥ 4:
/// c_λ = (−1)^{m₁} (m₂+…+m_n choose m₂,…,m_n) (n−2−ℓ(λ)+m₁ choose m₁).
pub fn path_csf(n: u32) -> Result<StarExpansion, FormulaError> {
    if n < 4 {
        return Err(FormulaError::DegreeTooSmall(n, 4));
    }
    let mut out = StarExpansion::zero(n);
    for lam in partitions_of(n) {
        let m = lam.multiplicities();
        let m1 = m[1];
        let ell = lam.len() as i64;
        let c = neg_pow(m1)
            * multinomial(&m[2..])
            * binomial(n as i64 - 2 - ell + m1 as i64, m1 as i64);
        out.add_term(lam, c);
    }
    Ok(out)
}

/// Full star-expansion of the cycle C_n for n ≥ 3. Hooks (first part ≥ 2)
/// get −C(n−2, m₁−1) + (n−1)C(n−2, m₁); everything else
/// n/(ℓ−m₁) · (m₂+…+m_n choose m₂,…,m_n) · C(n−ℓ+m₁−1, m₁), all times (−1)^{m₁}.
pub fn cycle_csf(n: u32) -> Result<StarExpansion, FormulaError> {
    if n < 3 {
        return Err(FormulaError::DegreeTooSmall(n, 3));
    }
    let mut out = StarExpansion::zero(n);
    for lam in partitions_of(n) {
        out.add_term(lam.clone(), cycle_coeff(n, &lam));
    }
    Ok(out)
}

/// Single cycle coefficient; exposed for the hook/sequence spot checks.
pub fn cycle_coeff(n: u32, lam: &Partition) -> BigInt {
    let m = lam.multiplicities();
    let m1 = m[1] as i64;
    let ell = lam.len() as i64;
    let n_i = n as i64;
    if lam.is_hook() && lam.parts()[0] > 1 {
        neg_pow(m[1])
            * (-binomial(n_i - 2, m1 - 1) + BigInt::from(n_i - 1) * binomial(n_i - 2, m1))
    } else {
        let numer = BigInt::from(n_i) * multinomial(&m[2..]) * binomial(n_i - ell + m1 - 1, m1);
        if numer.is_zero() {
            return BigInt::zero();
        }
        let (q, rem) = numer.div_rem(&BigInt::from(ell - m1));
        debug_assert!(rem.is_zero(), "cycle coefficient must be integral");
        neg_pow(m[1]) * q
    }
}

/// Full star-expansion of the pan on n vertices (C_{n−1} plus one pendant)
/// for n ≥ 4. Hooks get (n−2)C(n−3, m₁); everything else
/// (n−ℓ)/(ℓ−m₁) · (m₂+…+m_n choose m₂,…,m_n) · C(n−ℓ+m₁−1, m₁), times (−1)^{m₁}.
pub fn pan_csf(n: u32) -> Result<StarExpansion, FormulaError> {
    if n < 4 {
        return Err(FormulaError::DegreeTooSmall(n, 4));
    }
    let mut out = StarExpansion::zero(n);
    for lam in partitions_of(n) {
        let m = lam.multiplicities();
        let m1 = m[1] as i64;
        let ell = lam.len() as i64;
        let n_i = n as i64;
        let c = if lam.is_hook() && lam.parts()[0] > 1 {
            neg_pow(m[1]) * BigInt::from(n_i - 2) * binomial(n_i - 3, m1)
        } else {
            let numer =
                BigInt::from(n_i - ell) * multinomial(&m[2..]) * binomial(n_i - ell + m1 - 1, m1);
            if numer.is_zero() {
                continue;
            }
            let (q, rem) = numer.div_rem(&BigInt::from(ell - m1));
            debug_assert!(rem.is_zero(), "pan coefficient must be integral");
            neg_pow(m[1]) * q
        };
        out.add_term(lam, c);
    }
    Ok(out)
}

/// Which of the two leaf-count cases applies: exactly one non-trivial tree,
/// or at least two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RCase {
    R1,
    RGe2,
}

/// Leading partition of a connected unicyclic graph from its decomposition:
/// r = 0 gives (2, 1^{n−2}); r = 1 deletes a cycle edge at the non-trivial
/// root, merging the two λ-parts that flank it; r ≥ 2 gives sort(λ·μ).
pub fn leading_partition_unicyclic(d: &UnicyclicDecomposition) -> Partition {
    let c = d.cycle_size();
    let n = d.n() as u32;
    match d.r {
        0 => Partition::hook(2, n - 2),
        1 => {
            let j = d.nontrivial_tree_index().expect("r = 1");
            let mut parts = vec![d.lambda[j], 2];
            parts.extend(std::iter::repeat_n(1, c - 3));
            let base = Partition::new(parts).expect("positive parts");
            base.sort_concat(&d.mu_concat())
        }
        _ => d.lambda_mu_sorted(),
    }
}

/// Number of leaves recoverable from the leading partition alone:
/// |λ_lead| − ℓ(λ_lead) − 1 when r = 1, |λ_lead| − ℓ(λ_lead) when r ≥ 2.
pub fn num_leaves_from_leading(lead: &Partition, case: RCase) -> u64 {
    let base = lead.weight() - lead.len() as u64;
    match case {
        RCase::R1 => base - 1,
        RCase::RGe2 => base,
    }
}

/// Leading coefficient of a tree from its deep-vertex degrees:
/// (−1)^p ∏ (dᵢ − 1).
pub fn lead_coeff_tree(deep_degrees: &[u32]) -> BigInt {
    let prod: BigInt = deep_degrees.iter().map(|&d| BigInt::from(d - 1)).product();
    neg_pow(deep_degrees.len() as u32) * prod
}

/// Leading coefficient when exactly one non-trivial tree hangs from the
/// cycle. `deep_degrees_of_tprime` are the deep-vertex degrees of the tree
/// T′ = G ∖ ε₁ (ε₁ a cycle edge at the root); when the root is a sprout its
/// degree must be listed first.
pub fn lead_coeff_unicyclic_r1(c: u32, deep_degrees_of_tprime: &[u32], root_is_sprout: bool) -> BigInt {
    let p = deep_degrees_of_tprime.len() as u32;
    let full: BigInt = deep_degrees_of_tprime.iter().map(|&d| BigInt::from(d - 1)).product();
    let base = BigInt::from(c - 2) * &full;
    let value = if root_is_sprout {
        let rest: BigInt =
            deep_degrees_of_tprime[1..].iter().map(|&d| BigInt::from(d - 1)).product();
        base + rest
    } else {
        base
    };
    neg_pow(p) * value
}

/// Sprout and non-sprout deep-vertex degree data of a connected unicyclic
/// graph, the inputs to the r ≥ 2 leading-coefficient formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeepVertexProfile {
    /// Degrees b₁..b_s of the sprouts (deep cycle vertices of degree ≥ 3).
    pub sprout_degrees: Vec<u32>,
    /// Degrees d₁..d_p of all other deep vertices.
    pub nonsprout_deep_degrees: Vec<u32>,
}

impl DeepVertexProfile {
    pub fn s(&self) -> u32 {
        self.sprout_degrees.len() as u32
    }

    pub fn p(&self) -> u32 {
        self.nonsprout_deep_degrees.len() as u32
    }

    pub fn of_graph(g: &Graph) -> Result<Self, GraphError> {
        let cls = g.classify_vertices();
        let sprouts = cls
            .sprouts
            .ok_or_else(|| GraphError::NotUnicyclic("profile needs a unicyclic graph".into()))?;
        let mut sprout_degrees: Vec<u32> =
            sprouts.iter().map(|&v| g.degree(v) as u32).collect();
        let mut nonsprout_deep_degrees: Vec<u32> = cls
            .deep
            .iter()
            .filter(|v| !sprouts.contains(v))
            .map(|&v| g.degree(v) as u32)
            .collect();
        sprout_degrees.sort_unstable_by(|a, b| b.cmp(a));
        nonsprout_deep_degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DeepVertexProfile { sprout_degrees, nonsprout_deep_degrees })
    }
}

/// Leading coefficient for r ≥ 2, sign (−1)^{p+s}, branched on r against the
/// sprout count s. With no sprouts this collapses to (−1)^p ∏ (dᵢ − 1).
pub fn lead_coeff_unicyclic_rge2(profile: &DeepVertexProfile, r: u32) -> Result<BigInt, FormulaError> {
    if r < 2 {
        return Err(FormulaError::NeedsTwoTrees(r));
    }
    let s = profile.s();
    if r < s {
        return Err(FormulaError::BranchViolation(r, s));
    }
    let dprod: BigInt =
        profile.nonsprout_deep_degrees.iter().map(|&d| BigInt::from(d - 1)).product();
    let bprod: BigInt = profile.sprout_degrees.iter().map(|&b| BigInt::from(b - 1)).product();
    let bsum: BigInt = profile.sprout_degrees.iter().map(|&b| BigInt::from(b)).sum();
    let sprout_factor = if r == s {
        bprod - bsum + BigInt::from(2 * s) - BigInt::one()
    } else if r == s + 1 {
        bprod - BigInt::one()
    } else {
        bprod
    };
    Ok(neg_pow(profile.p() + s) * dprod * sprout_factor)
}

/// Leading partition of the cuttlefish C_{c,t}: (t+1, 2, 1^{c−3}).
pub fn cuttlefish_leading(c: u32, t: u32) -> Partition {
    assert!(c >= 3 && t >= 1);
    let mut parts = vec![t + 1, 2];
    parts.extend(std::iter::repeat_n(1, c as usize - 3));
    Partition::new(parts).expect("positive parts")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BicyclicShape {
    TypeI,
    TypeII,
}

/// c_(n) of a bicyclic graph: (s−1)(t−1) for type I, minus 2·C(ℓ,2) when the
/// two cycles share a path with ℓ edges (type II).
pub fn bicyclic_cn(shape: BicyclicShape, s: u32, t: u32, ell: u32) -> BigInt {
    assert!(s >= 3 && t >= 3);
    let base = BigInt::from(s - 1) * BigInt::from(t - 1);
    match shape {
        BicyclicShape::TypeI => base,
        BicyclicShape::TypeII => {
            assert!(ell >= 1);
            base - BigInt::from(2) * binomial(ell as i64, 2)
        }
    }
}

/// Predicted leading partition of a connected unicyclic graph.
pub fn predicted_leading_partition(g: &Graph) -> Result<Partition, GraphError> {
    Ok(leading_partition_unicyclic(&g.unicyclic_decompose()?))
}

/// Predicted leading coefficient of a connected unicyclic graph, dispatching
/// on r: the cycle case, the r = 1 tree T′ construction, or the sprout
/// profile branches.
pub fn predicted_leading_coefficient(g: &Graph) -> Result<BigInt, GraphError> {
    let d = g.unicyclic_decompose()?;
    match d.r {
        0 => Ok(neg_pow(g.vertex_count() as u32 - 2)),
        1 => {
            let j = d.nontrivial_tree_index().expect("r = 1");
            let root = d.cycle[j];
            let neighbor = d.cycle[(j + 1) % d.cycle_size()];
            let e = crate::graph::EdgeRef::new(root, neighbor).expect("cycle edge");
            let tprime = g.delete_edge(e)?;
            let root_is_sprout = g.neighbors(root).all(|w| !g.is_leaf(w));
            let deep = tprime.classify_vertices().deep;
            let mut degrees: Vec<u32> = Vec::with_capacity(deep.len());
            if root_is_sprout {
                debug_assert!(deep.contains(&root), "a sprout root stays deep in T'");
                degrees.push(tprime.degree(root) as u32);
                degrees.extend(
                    deep.iter().filter(|&&v| v != root).map(|&v| tprime.degree(v) as u32),
                );
            } else {
                debug_assert!(!deep.contains(&root));
                degrees.extend(deep.iter().map(|&v| tprime.degree(v) as u32));
            }
            Ok(lead_coeff_unicyclic_r1(d.cycle_size() as u32, &degrees, root_is_sprout))
        }
        r => {
            let profile = DeepVertexProfile::of_graph(g)?;
            lead_coeff_unicyclic_rge2(&profile, r as u32)
                .map_err(|e| GraphError::NotUnicyclic(e.to_string()))
        }
    }
}

/// Hook-vector agreement between the closed form and an expansion, over all
/// m₁ = 0..=n−2. Returns the first disagreeing m₁.
pub fn hook_vector_mismatch(x: &StarExpansion, p: HookParams) -> Option<u32> {
    let n = x.degree();
    (0..=n.saturating_sub(2)).find(|&m1| {
        let lam = Partition::hook(n - m1, m1);
        x.coeff(&lam) != unicyclic_hook_coeff(HookParams { m1, ..p })
    })
}

/// |λ| − ℓ(λ) − 1 must be checked against the sign too; helper for tests that
/// need the sign of a coefficient as ±1.
pub fn sign_of(x: &BigInt) -> i8 {
    if x.is_negative() {
        -1
    } else if x.is_zero() {
        0
    } else {
        1
    }
}
