//! Star-basis expansion of the chromatic symmetric function by recursive
//! deletion-near-contraction on internal edges, memoized on canonical forms.
//!
//! The recursion bottoms out at star forests, where X_G = st_{λ(G)} exactly.
//! Every DNC child of an internal edge has strictly fewer internal edges, so
//! the explicit work-stack below is bounded by the internal-edge count.

use crate::canon::{canonical_labeling, CanonicalCode};
use crate::graph::{EdgeRef, Graph};
use crate::partition::Partition;
use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StarError {
    #[error("expansion has empty support")]
    EmptyExpansion,
    #[error("graph has {0} internal edges; the unmemoized walk is capped at {1}")]
    LeafWalkTooLarge(usize, usize),
}

/// Sparse exact expansion X_G = Σ c_λ st_λ; zero coefficients are absent and
/// iteration order is the lexicographic order on partitions of n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarExpansion {
    n: u32,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl StarExpansion {
    pub fn zero(n: u32) -> Self {
        StarExpansion { n, coeffs: BTreeMap::new() }
    }

    /// The empty product: degree 0, coefficient 1 on the empty partition.
    pub fn one() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Partition::empty(), BigInt::one());
        StarExpansion { n: 0, coeffs }
    }

    /// A single basis element st_λ with coefficient 1.
    pub fn star_basis_element(lam: Partition) -> Self {
        let n = lam.weight() as u32;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lam, BigInt::one());
        StarExpansion { n, coeffs }
    }

    pub fn from_terms<I>(n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut out = StarExpansion::zero(n);
        for (p, c) in terms {
            debug_assert_eq!(p.weight(), n as u64);
            out.add_term(p, c);
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn coeff(&self, lam: &Partition) -> BigInt {
        self.coeffs.get(lam).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, lam: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lam);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &StarExpansion, sign: i8) {
        debug_assert_eq!(self.n, other.n);
        for (p, c) in &other.coeffs {
            let c = if sign < 0 { -c } else { c.clone() };
            self.add_term(p.clone(), c);
        }
    }

    /// Lexicographically minimal support element and its coefficient.
    pub fn leading_term(&self) -> Result<(Partition, BigInt), StarError> {
        self.coeffs
            .iter()
            .next()
            .map(|(p, c)| (p.clone(), c.clone()))
            .ok_or(StarError::EmptyExpansion)
    }

    /// Bilinear product; on the star basis st_μ · st_ν = st_{sort(μ·ν)}.
    pub fn product(&self, other: &StarExpansion) -> StarExpansion {
        let mut out = StarExpansion::zero(self.n + other.n);
        for (p, a) in &self.coeffs {
            for (q, b) in &other.coeffs {
                out.add_term(p.sort_concat(q), a * b);
            }
        }
        out
    }

    /// Multiplies by st₁^k: appends k 1-parts to every support partition.
    pub fn with_extra_ones(&self, k: u32) -> StarExpansion {
        if k == 0 {
            return self.clone();
        }
        StarExpansion {
            n: self.n + k,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.with_extra_ones(k), c.clone()))
                .collect(),
        }
    }
}

impl Serialize for StarExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a [u32],
            c: serde_json::Number,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            n: u32,
            coeffs: Vec<Term<'a>>,
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(p, c)| {
                let num = serde_json::Number::from_str(&c.to_string())
                    .map_err(serde::ser::Error::custom)?;
                Ok(Term { partition: p.parts(), c: num })
            })
            .collect::<Result<Vec<_>, S::Error>>()?;
        Doc { n: self.n, coeffs }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StarExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            partition: Partition,
            c: serde_json::Number,
        }
        #[derive(Deserialize)]
        struct Doc {
            n: u32,
            coeffs: Vec<Term>,
        }
        let doc = Doc::deserialize(deserializer)?;
        let mut out = StarExpansion::zero(doc.n);
        for term in doc.coeffs {
            if term.partition.weight() != doc.n as u64 {
                return Err(D::Error::custom(format!(
                    "partition {:?} does not partition {}",
                    term.partition, doc.n
                )));
            }
            let c = BigInt::from_str(&term.c.to_string()).map_err(D::Error::custom)?;
            out.add_term(term.partition, c);
        }
        Ok(out)
    }
}

/// Which internal edge the expansion acts on at each node. All policies give
/// the same expansion; the canonical policy is the default because the memo
/// key already pays for the canonical labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EdgePolicy {
    #[default]
    CanonicalMin,
    LowestIndex,
    HighestIndex,
}

/// Memoizing expansion engine, safe for concurrent use. Entries are keyed by
/// the canonical form of the isolated-vertex-stripped graph; cached values
/// are re-shifted by 1-parts on read. Races on identical keys are benign
/// because values are deterministic.
pub struct StarEngine {
    cache: DashMap<CanonicalCode, Arc<StarExpansion>>,
    policy: EdgePolicy,
}

impl Default for StarEngine {
    fn default() -> Self {
        Self::new()
    }
}

struct ChildPart {
    key: CanonicalCode,
    graph: Graph,
    perm: Vec<usize>,
}

struct ChildSum {
    sign: i8,
    ones: u32,
    parts: Vec<ChildPart>,
}

struct Frame {
    key: CanonicalCode,
    n: u32,
    children: Vec<ChildSum>,
}

enum Node {
    Leaf(StarExpansion),
    Branch(Frame),
}

impl StarEngine {
    pub fn new() -> Self {
        StarEngine { cache: DashMap::new(), policy: EdgePolicy::CanonicalMin }
    }

    pub fn with_policy(policy: EdgePolicy) -> Self {
        StarEngine { cache: DashMap::new(), policy }
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    /// Exact star-basis expansion of X_G.
    pub fn expand(&self, g: &Graph) -> StarExpansion {
        let (stripped, dropped) = g.strip_isolated();
        let exp = self.expand_stripped(&stripped);
        exp.with_extra_ones(dropped as u32)
    }

    /// Expansion of a graph with no isolated vertices.
    fn expand_stripped(&self, g: &Graph) -> Arc<StarExpansion> {
        let (key, perm) = canonical_labeling(g);
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let comps = g.connected_components();
        let result = if comps.len() <= 1 {
            self.expand_connected(g, key.clone(), perm)
        } else {
            let mut prod = StarExpansion::one();
            for comp in &comps {
                let sub = g.induced(comp);
                let (ckey, cperm) = canonical_labeling(&sub);
                let part = match self.cache.get(&ckey) {
                    Some(hit) => hit.clone(),
                    None => self.expand_connected(&sub, ckey, cperm),
                };
                prod = prod.product(&part);
            }
            let arc = Arc::new(prod);
            self.cache.insert(key, arc.clone());
            arc
        };
        result
    }

    /// Iterative DNC over a connected graph; the stack depth is bounded by
    /// the internal-edge count, which drops by at least one per level.
    fn expand_connected(
        &self,
        g: &Graph,
        key: CanonicalCode,
        perm: Vec<usize>,
    ) -> Arc<StarExpansion> {
        let root_key = key.clone();
        let mut stack: Vec<Frame> = Vec::new();
        match self.make_node(g, key, &perm) {
            Node::Leaf(exp) => {
                let arc = Arc::new(exp);
                self.cache.insert(root_key, arc.clone());
                return arc;
            }
            Node::Branch(frame) => stack.push(frame),
        }
        while let Some(top) = stack.last() {
            let pending = top.children.iter().flat_map(|c| c.parts.iter()).find(|part| {
                !self.cache.contains_key(&part.key)
            });
            match pending {
                Some(part) => {
                    let (graph, key, perm) =
                        (part.graph.clone(), part.key.clone(), part.perm.clone());
                    match self.make_node(&graph, key.clone(), &perm) {
                        Node::Leaf(exp) => {
                            self.cache.insert(key, Arc::new(exp));
                        }
                        Node::Branch(frame) => stack.push(frame),
                    }
                }
                None => {
                    let frame = stack.pop().expect("stack top exists");
                    let mut total = StarExpansion::zero(frame.n);
                    for child in &frame.children {
                        let mut prod = StarExpansion::one();
                        for part in &child.parts {
                            let cached =
                                self.cache.get(&part.key).expect("children resolved before combine");
                            prod = prod.product(&cached);
                        }
                        let prod = prod.with_extra_ones(child.ones);
                        total.add_scaled(&prod, child.sign);
                    }
                    self.cache.insert(frame.key.clone(), Arc::new(total));
                }
            }
        }
        self.cache.get(&root_key).expect("root resolved").clone()
    }

    /// Builds the DNC node for a connected graph: a star forest closes the
    /// recursion, otherwise one internal edge fans out into three children.
    fn make_node(&self, g: &Graph, key: CanonicalCode, perm: &[usize]) -> Node {
        let n = g.vertex_count() as u32;
        if n == 0 {
            return Node::Leaf(StarExpansion::one());
        }
        let internal = g.internal_edges();
        if internal.is_empty() {
            // connected with no internal edges: a single star
            return Node::Leaf(StarExpansion::star_basis_element(Partition::single(n)));
        }
        let e = self.select_edge(&internal, perm);
        let children_graphs = [
            (1i8, g.delete_edge(e).expect("edge present")),
            (-1i8, g.dot_contract(e).expect("edge present")),
            (1i8, g.leaf_contract(e).expect("edge present").0),
        ];
        let mut children = Vec::with_capacity(3);
        for (sign, child) in children_graphs {
            let (stripped, dropped) = child.strip_isolated();
            let parts = stripped
                .connected_components()
                .iter()
                .map(|comp| {
                    let sub = stripped.induced(comp);
                    let (ckey, cperm) = canonical_labeling(&sub);
                    ChildPart { key: ckey, graph: sub, perm: cperm }
                })
                .collect();
            children.push(ChildSum { sign, ones: dropped as u32, parts });
        }
        Node::Branch(Frame { key, n: g.vertex_count() as u32, children })
    }

    fn select_edge(&self, internal: &[EdgeRef], perm: &[usize]) -> EdgeRef {
        match self.policy {
            EdgePolicy::LowestIndex => internal[0],
            EdgePolicy::HighestIndex => *internal.last().expect("nonempty"),
            EdgePolicy::CanonicalMin => *internal
                .iter()
                .min_by_key(|e| {
                    let (a, b) = (perm[e.u], perm[e.v]);
                    (a.min(b), a.max(b))
                })
                .expect("nonempty"),
        }
    }
}

static GLOBAL_ENGINE: Lazy<StarEngine> = Lazy::new(StarEngine::new);

/// Expansion through the shared process-wide engine.
pub fn star_expand(g: &Graph) -> StarExpansion {
    GLOBAL_ENGINE.expand(g)
}

/// One leaf of the DNC-tree: the star forest's partition and the sign
/// (−1)^{ι(H) − ι(G)} it contributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DncNodeResult {
    pub partition: Partition,
    pub sign: i8,
}

const LEAF_WALK_CAP: usize = 14;

/// Walks the whole DNC-tree without memoization and returns the leaf
/// multiset. Exponential in the internal-edge count, hence the cap; used as
/// the memoization-transparency reference.
pub fn dnc_leaves(g: &Graph) -> Result<Vec<DncNodeResult>, StarError> {
    let k = g.internal_edges().len();
    if k > LEAF_WALK_CAP {
        return Err(StarError::LeafWalkTooLarge(k, LEAF_WALK_CAP));
    }
    let iota_root = g.isolated_count();
    let mut out = Vec::new();
    let mut stack = vec![g.clone()];
    while let Some(h) = stack.pop() {
        let internal = h.internal_edges();
        match internal.first() {
            None => {
                let sign = if (h.isolated_count() + iota_root).is_multiple_of(2) { 1 } else { -1 };
                out.push(DncNodeResult { partition: h.component_partition(), sign });
            }
            Some(&e) => {
                stack.push(h.delete_edge(e).expect("edge present"));
                stack.push(h.dot_contract(e).expect("edge present"));
                stack.push(h.leaf_contract(e).expect("edge present").0);
            }
        }
    }
    Ok(out)
}

/// Expansion summed directly from the DNC-tree leaves (no cache at all).
pub fn star_expand_leaves(g: &Graph) -> Result<StarExpansion, StarError> {
    let mut out = StarExpansion::zero(g.vertex_count() as u32);
    for leaf in dnc_leaves(g)? {
        out.add_term(leaf.partition, BigInt::from(leaf.sign));
    }
    Ok(out)
}
