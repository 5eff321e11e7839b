//! Exhaustive generation of connected unicyclic graphs up to isomorphism,
//! CSF-collision search, and the theorem-verification harness that sweeps
//! every structural result over the enumeration.
//!
//! The fast generator builds c rooted trees around a cycle and dedups the
//! necklace of rooted-tree codes under the dihedral symmetry; a separate
//! brute-force oracle filters all n-edge graphs so the generator never has
//! to be trusted on its own.

use crate::canon::{canonical_form, canonical_labeling};
use crate::formulas::{
    hook_vector_mismatch, longest_hook_data, num_leaves_from_leading,
    predicted_leading_coefficient, predicted_leading_partition, HookParams, RCase,
};
use crate::graph::{Graph, UnicyclicDecomposition};
use crate::infer::infer;
use crate::io::to_graph6;
use crate::star::{star_expand, StarExpansion};
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path;
use thiserror::Error;

pub const MAX_ENUMERATION_N: usize = 14;
pub const MAX_BRUTEFORCE_N: usize = 9;

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("enumeration needs 3 ≤ c ≤ n ≤ {MAX_ENUMERATION_N}, got n = {n}, c = {c}")]
    OutOfRange { n: usize, c: usize },
    #[error("brute force over all graphs is capped at n ≤ {MAX_BRUTEFORCE_N}, got {0}")]
    BruteForceTooLarge(usize),
    #[error("theorem sweep is capped at n_max ≤ {MAX_VERIFY_N}, got {0}")]
    VerifyTooLarge(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// Rooted trees up to a size bound, interned so equal ids mean rooted-isomorphic.
pub struct RootedTrees {
    children: Vec<Vec<usize>>,
    size: Vec<usize>,
    by_size: Vec<Vec<usize>>,
}

impl RootedTrees {
    pub fn up_to(max_size: usize) -> Self {
        let mut trees = RootedTrees {
            children: vec![Vec::new()],
            size: vec![1],
            by_size: vec![Vec::new(), vec![0]],
        };
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(Vec::new(), 0);
        for k in 2..=max_size {
            let mut ids = Vec::new();
            // children multisets: a partition of k−1 into subtree sizes, then
            // a non-increasing id choice within each size block
            for size_parts in crate::partition::partitions_of((k - 1) as u32) {
                let mut assignments: Vec<Vec<usize>> = vec![Vec::new()];
                let mut at = 0;
                let parts = size_parts.parts();
                while at < parts.len() {
                    let sz = parts[at] as usize;
                    let block = parts[at..].iter().take_while(|&&p| p as usize == sz).count();
                    let pool = &trees.by_size[sz];
                    let mut extended = Vec::new();
                    for prefix in &assignments {
                        let mut combo = vec![0usize; block];
                        multichoose(pool, block, 0, &mut combo, &mut |ids_in_block| {
                            let mut next = prefix.clone();
                            next.extend_from_slice(ids_in_block);
                            extended.push(next);
                        });
                    }
                    assignments = extended;
                    at += block;
                }
                for mut kids in assignments {
                    kids.sort_unstable_by(|a, b| b.cmp(a));
                    let id = trees.children.len();
                    let prev = index.insert(kids.clone(), id);
                    debug_assert!(prev.is_none(), "children multisets are generated once");
                    trees.children.push(kids);
                    trees.size.push(k);
                    ids.push(id);
                }
            }
            trees.by_size.push(ids);
        }
        trees
    }

    pub fn count_of_size(&self, k: usize) -> usize {
        self.by_size.get(k).map_or(0, Vec::len)
    }

    fn attach(&self, g: &mut Graph, id: usize, root_vertex: usize, next: &mut usize) {
        for &child in &self.children[id] {
            let v = *next;
            *next += 1;
            g.insert_edge(root_vertex, v).expect("vertex budget");
            self.attach(g, child, v, next);
        }
    }
}

/// Non-increasing `count`-subsets with repetition from `pool` (pool ids ascending).
fn multichoose(
    pool: &[usize],
    count: usize,
    max_pos: usize,
    combo: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if count == 0 {
        emit(combo);
        return;
    }
    let slot = combo.len() - count;
    for pos in max_pos..pool.len() {
        combo[slot] = pool[pos];
        multichoose(pool, count - 1, pos, combo, emit);
    }
}

fn tuple_is_dihedral_minimal(tuple: &[usize]) -> bool {
    let c = tuple.len();
    for rev in [false, true] {
        for shift in 0..c {
            if !rev && shift == 0 {
                continue;
            }
            for j in 0..c {
                let i = if rev { (shift + c - j) % c } else { (shift + j) % c };
                let image = tuple[i];
                match image.cmp(&tuple[j]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    true
}

/// All connected unicyclic graphs on n vertices with cycle size c, one per
/// isomorphism class, in a deterministic order.
pub fn enumerate_unicyclic(n: usize, c: usize) -> Result<Vec<Graph>, EnumerateError> {
    if !(3..=n).contains(&c) || n > MAX_ENUMERATION_N {
        return Err(EnumerateError::OutOfRange { n, c });
    }
    let trees = RootedTrees::up_to(n - c + 1);
    let mut out = Vec::new();
    let mut tuple = vec![0usize; c];
    place_trees(&trees, n - c, 0, &mut tuple, &mut |t| {
        if tuple_is_dihedral_minimal(t) {
            let mut g = Graph::with_vertices(n).expect("n ≤ 14");
            for i in 0..c {
                g.insert_edge(i, (i + 1) % c).expect("cycle edges");
            }
            let mut next = c;
            for (i, &tid) in t.iter().enumerate() {
                trees.attach(&mut g, tid, i, &mut next);
            }
            debug_assert_eq!(next, n);
            out.push(g);
        }
    });
    debug_assert_eq!(
        out.iter().map(canonical_form).collect::<HashSet<_>>().len(),
        out.len(),
        "necklace dedup must already be isomorphism-exact"
    );
    Ok(out)
}

/// Fills cycle positions with tree ids; `extra` is the off-cycle vertex budget.
fn place_trees(
    trees: &RootedTrees,
    extra: usize,
    pos: usize,
    tuple: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let c = tuple.len();
    if pos == c {
        if extra == 0 {
            emit(tuple);
        }
        return;
    }
    let remaining_slots = c - pos - 1;
    for extra_here in 0..=extra {
        let sz = extra_here + 1;
        if extra - extra_here > remaining_slots * (trees.by_size.len() - 2) {
            continue;
        }
        for &tid in trees.by_size.get(sz).map_or(&[][..], |v| &v[..]) {
            tuple[pos] = tid;
            place_trees(trees, extra - extra_here, pos + 1, tuple, emit);
        }
    }
}

/// All connected unicyclic graphs on n vertices across every cycle size.
pub fn enumerate_unicyclic_all(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    let mut out = Vec::new();
    for c in 3..=n {
        out.extend(enumerate_unicyclic(n, c)?);
    }
    Ok(out)
}

/// Independent oracle: filter all n-vertex graphs with exactly n edges for
/// connectivity and dedup by canonical form. Exponential; run before
/// trusting the fast generator.
pub fn unicyclic_bruteforce(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_BRUTEFORCE_N {
        return Err(EnumerateError::BruteForceTooLarge(n));
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let all_pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let m = all_pairs.len();

    // split on the first chosen edge so rayon has coarse tasks
    let reps: Vec<HashMap<Vec<u8>, Graph>> = (0..m)
        .into_par_iter()
        .map(|first| {
            let mut local: HashMap<Vec<u8>, Graph> = HashMap::new();
            let mut chosen = Vec::with_capacity(n);
            chosen.push(first);
            let mut masks = [0u64; MAX_BRUTEFORCE_N];
            combinations(m, n, &mut chosen, &mut |combo| {
                masks[..n].fill(0);
                for &ix in combo {
                    let (a, b) = all_pairs[ix];
                    masks[a] |= 1 << b;
                    masks[b] |= 1 << a;
                }
                if !mask_connected(&masks[..n]) {
                    return;
                }
                let g = Graph::from_edges(n, &combo.iter().map(|&ix| all_pairs[ix]).collect::<Vec<_>>())
                    .expect("valid pairs");
                local.entry(canonical_form(&g)).or_insert(g);
            });
            local
        })
        .collect();

    let mut merged: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for local in reps {
        merged.extend(local);
    }
    Ok(merged.into_values().collect())
}

fn combinations(m: usize, want: usize, chosen: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if chosen.len() == want {
        emit(chosen);
        return;
    }
    let start = chosen.last().map_or(0, |&x| x + 1);
    let still_needed = want - chosen.len();
    for next in start..=m.saturating_sub(still_needed) {
        chosen.push(next);
        combinations(m, want, chosen, emit);
        chosen.pop();
    }
}

fn mask_connected(masks: &[u64]) -> bool {
    let n = masks.len();
    let mut reach = 1u64;
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= masks[v];
        }
        if next == reach {
            break;
        }
        reach = next;
    }
    reach.count_ones() as usize == n
}

pub const MAX_EXHAUSTIVE_N: usize = 10;

/// One representative per isomorphism class of graphs on exactly n vertices,
/// grown by adding one vertex at a time with every possible neighborhood.
/// `connected_only` restricts both the output and the intermediate levels.
fn graphs_by_augmentation(n: usize, connected_only: bool) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(EnumerateError::BruteForceTooLarge(n));
    }
    if n == 0 {
        return Ok(vec![Graph::with_vertices(0)?]);
    }
    let mut level = vec![Graph::with_vertices(1)?];
    for k in 2..=n {
        let lo = if connected_only { 1u64 } else { 0u64 };
        let candidates: Vec<(Vec<u8>, Graph)> = level
            .par_iter()
            .flat_map_iter(|g| {
                (lo..1 << (k - 1)).map(move |nbrs| {
                    let mut h = Graph::with_vertices(k).expect("capped size");
                    for e in g.edges() {
                        h.insert_edge(e.u, e.v).expect("in range");
                    }
                    for v in 0..k - 1 {
                        if nbrs >> v & 1 == 1 {
                            h.insert_edge(v, k - 1).expect("in range");
                        }
                    }
                    (canonical_form(&h), h)
                })
            })
            .collect();
        let mut seen: HashSet<Vec<u8>> = HashSet::with_capacity(candidates.len());
        let mut next = Vec::new();
        for (code, h) in candidates {
            if seen.insert(code) {
                next.push(h);
            }
        }
        level = next;
    }
    Ok(level)
}

/// All connected graphs on exactly n vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    graphs_by_augmentation(n, true)
}

/// All graphs on exactly n vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    graphs_by_augmentation(n, false)
}

/// All free trees on n vertices, from rooted trees deduped as graphs.
pub fn free_trees(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(EnumerateError::OutOfRange { n, c: 3 });
    }
    let trees = RootedTrees::up_to(n);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    for &tid in &trees.by_size[n] {
        let mut g = Graph::with_vertices(n)?;
        let mut next = 1;
        trees.attach(&mut g, tid, 0, &mut next);
        if seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    }
    Ok(out)
}

/// One equivalence class of CSF-equal, pairwise non-isomorphic graphs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CollisionClass {
    /// Hex SHA-256 of the canonical JSON emission of the shared expansion.
    pub expansion_ref: String,
    /// Canonically relabeled members in graph6 form.
    pub graphs: Vec<String>,
    /// The shared expansion itself.
    pub expansion: StarExpansion,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CollisionReport {
    pub n: u32,
    pub c: u32,
    /// Unordered non-isomorphic CSF-equal pairs: Σ C(|class|, 2).
    pub pair_count: u64,
    pub classes: Vec<CollisionClass>,
}

fn fingerprint(x: &StarExpansion) -> String {
    let json = serde_json::to_vec(x).expect("expansion serializes");
    hex::encode(Sha256::digest(&json))
}

fn cache_path(dir: &Path, n: usize, c: usize) -> std::path::PathBuf {
    dir.join(format!("fingerprints_n{n}_c{c}.json"))
}

/// Groups the (n, c) enumeration by exact CSF equality. Fingerprints are a
/// collision-resistant pre-filter; full map equality is confirmed before
/// any class is reported. With `cache_dir` set, fingerprints persist on disk
/// keyed by canonical code so repeated searches reuse work.
pub fn collision_search(
    n: usize,
    c: usize,
    cache_dir: Option<&Path>,
) -> Result<CollisionReport, EnumerateError> {
    let graphs = enumerate_unicyclic(n, c)?;

    let mut cached: HashMap<String, String> = HashMap::new();
    if let Some(dir) = cache_dir {
        let path = cache_path(dir, n, c);
        if path.exists() {
            let text = std::fs::read_to_string(&path)?;
            let entries: Vec<(String, String)> = serde_json::from_str(&text)?;
            cached.extend(entries);
        }
    }

    // (code_hex, fingerprint, graph) per enumerated graph
    let keyed: Vec<(String, String, Graph)> = graphs
        .into_par_iter()
        .map(|g| {
            let (code, perm) = canonical_labeling(&g);
            let canon_graph = g.relabel(&perm);
            let code_hex = hex::encode(code);
            let fp = match cached.get(&code_hex) {
                Some(fp) => fp.clone(),
                None => fingerprint(&star_expand(&canon_graph)),
            };
            (code_hex, fp, canon_graph)
        })
        .collect();

    if let Some(dir) = cache_dir {
        std::fs::create_dir_all(dir)?;
        let mut entries: Vec<(String, String)> =
            keyed.iter().map(|(code, fp, _)| (code.clone(), fp.clone())).collect();
        entries.sort();
        std::fs::write(cache_path(dir, n, c), serde_json::to_vec(&entries)?)?;
    }

    let mut by_fp: BTreeMap<&str, Vec<&(String, String, Graph)>> = BTreeMap::new();
    for item in &keyed {
        by_fp.entry(&item.1).or_default().push(item);
    }

    let mut classes = Vec::new();
    let mut pair_count = 0u64;
    for (_, members) in by_fp {
        if members.len() < 2 {
            continue;
        }
        // confirm with full expansions; fingerprint equality is not trusted
        let mut by_expansion: Vec<(StarExpansion, Vec<String>)> = Vec::new();
        for (_, _, g) in members {
            let x = star_expand(g);
            let g6 = to_graph6(g)?;
            match by_expansion.iter_mut().find(|(e, _)| *e == x) {
                Some((_, list)) => list.push(g6),
                None => by_expansion.push((x, vec![g6])),
            }
        }
        for (expansion, mut graphs) in by_expansion {
            if graphs.len() < 2 {
                continue;
            }
            graphs.sort();
            pair_count += graphs.len() as u64 * (graphs.len() as u64 - 1) / 2;
            let expansion_ref = fingerprint(&expansion);
            classes.push(CollisionClass { expansion_ref, graphs, expansion });
        }
    }
    classes.sort_by(|a, b| a.graphs.cmp(&b.graphs));

    Ok(CollisionReport { n: n as u32, c: c as u32, pair_count, classes })
}

/// Everything a per-graph theorem check may inspect.
pub struct VerifyCtx<'a> {
    pub graph: &'a Graph,
    pub expansion: &'a StarExpansion,
    pub decomp: &'a UnicyclicDecomposition,
}

/// A named check over one connected unicyclic graph.
pub struct GraphCheck {
    pub name: &'static str,
    pub run: fn(&VerifyCtx) -> Result<(), String>,
}

/// A named check over one class of CSF-equal graphs (size ≥ 2).
pub struct GroupCheck {
    pub name: &'static str,
    pub run: fn(&[&VerifyCtx]) -> Result<(), String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: u64,
    pub fail: u64,
    /// graph6 of the first failing graph (or `g6|g6` for group checks).
    pub counterexample: Option<String>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n_max: u32,
    pub graphs_checked: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.fail == 0)
    }
}

fn check_hooks(ctx: &VerifyCtx) -> Result<(), String> {
    let params = HookParams {
        n: ctx.graph.vertex_count() as u32,
        c: ctx.decomp.cycle_size() as u32,
        k: ctx.graph.internal_edges().len() as u32,
        r: ctx.decomp.r as u32,
        m1: 0,
    };
    match hook_vector_mismatch(ctx.expansion, params) {
        None => Ok(()),
        Some(m1) => Err(format!("hook coefficient differs at m1 = {m1}")),
    }
}

fn check_longest_hook(ctx: &VerifyCtx) -> Result<(), String> {
    let n = ctx.graph.vertex_count() as u32;
    let c = ctx.decomp.cycle_size() as u32;
    let k = ctx.graph.internal_edges().len() as u32;
    let r = ctx.decomp.r as u32;
    let (want_m, want_coeff) = longest_hook_data(c, k, r);
    let got_m = (0..=n - 2)
        .rev()
        .find(|&m1| !ctx.expansion.coeff(&crate::partition::Partition::hook(n - m1, m1)).is_zero());
    if got_m != Some(want_m) {
        return Err(format!("longest hook m = {got_m:?}, expected {want_m}"));
    }
    let got = ctx.expansion.coeff(&crate::partition::Partition::hook(n - want_m, want_m));
    if got != want_coeff {
        return Err(format!("longest hook coefficient {got}, expected {want_coeff}"));
    }
    Ok(())
}

fn check_leading_partition(ctx: &VerifyCtx) -> Result<(), String> {
    let (lead, _) = ctx.expansion.leading_term().map_err(|e| e.to_string())?;
    let predicted = predicted_leading_partition(ctx.graph).map_err(|e| e.to_string())?;
    if lead != predicted {
        return Err(format!("leading partition {lead:?}, predicted {predicted:?}"));
    }
    Ok(())
}

fn check_leading_coefficient(ctx: &VerifyCtx) -> Result<(), String> {
    let (_, coeff) = ctx.expansion.leading_term().map_err(|e| e.to_string())?;
    let predicted = predicted_leading_coefficient(ctx.graph).map_err(|e| e.to_string())?;
    if coeff != predicted {
        return Err(format!("leading coefficient {coeff}, predicted {predicted}"));
    }
    Ok(())
}

fn check_leaf_count(ctx: &VerifyCtx) -> Result<(), String> {
    let true_leaves =
        (0..ctx.graph.vertex_count()).filter(|&v| ctx.graph.is_leaf(v)).count() as u64;
    let (lead, _) = ctx.expansion.leading_term().map_err(|e| e.to_string())?;
    let predicted = match ctx.decomp.r {
        0 => 0,
        1 => num_leaves_from_leading(&lead, RCase::R1),
        _ => num_leaves_from_leading(&lead, RCase::RGe2),
    };
    if true_leaves != predicted {
        return Err(format!("{true_leaves} leaves, leading partition predicts {predicted}"));
    }
    Ok(())
}

fn check_decomposition(ctx: &VerifyCtx) -> Result<(), String> {
    if ctx.decomp.lambda_mu_sorted() != ctx.graph.leaf_component_partition() {
        return Err("sort(λ·μ) differs from the leaf-component partition".into());
    }
    Ok(())
}

/// True iff the graph is C_{c,t}: one non-trivial tree, all of it leaves on
/// the root.
fn is_cuttlefish_graph(d: &UnicyclicDecomposition) -> bool {
    match d.nontrivial_tree_index() {
        Some(j) => d.lambda[j] as usize == d.trees[j].len(),
        None => false,
    }
}

fn check_inference(ctx: &VerifyCtx) -> Result<(), String> {
    let report = infer(ctx.expansion).map_err(|e| e.to_string())?;
    let c = ctx.decomp.cycle_size() as u32;
    let k = ctx.graph.internal_edges().len() as u32;
    let r = ctx.decomp.r as u32;
    if report.cycle_size != c {
        return Err(format!("inferred cycle {}, true {c}", report.cycle_size));
    }
    if report.is_pure_cycle != (r == 0) {
        return Err("pure-cycle flag wrong".into());
    }
    if !report.kr_candidates.contains(&(k, r)) {
        return Err(format!("true (k, r) = ({k}, {r}) missing from {:?}", report.kr_candidates));
    }
    if r > 1 && r < c && report.kr_candidates.len() != 1 {
        return Err(format!("1 < r < c must be unambiguous, got {:?}", report.kr_candidates));
    }
    if report.kr_candidates.len() == 2 {
        let rs: Vec<u32> = report.kr_candidates.iter().map(|&(_, r)| r).collect();
        let ks: Vec<u32> = report.kr_candidates.iter().map(|&(k, _)| k).collect();
        if !(rs.contains(&1) && rs.contains(&c) && ks[0].abs_diff(ks[1]) == 1) {
            return Err(format!("ambiguity must be the {{1, c}} shape, got {:?}", report.kr_candidates));
        }
    }
    let true_leaves =
        (0..ctx.graph.vertex_count()).filter(|&v| ctx.graph.is_leaf(v)).count() as u64;
    if !report.leaf_count_candidates.contains(&true_leaves) {
        return Err(format!(
            "true leaf count {true_leaves} missing from {:?}",
            report.leaf_count_candidates
        ));
    }
    if report.is_cuttlefish != is_cuttlefish_graph(ctx.decomp) {
        return Err(format!(
            "cuttlefish flag {} disagrees with the graph",
            report.is_cuttlefish
        ));
    }
    Ok(())
}

pub fn standard_checks() -> Vec<GraphCheck> {
    vec![
        GraphCheck { name: "hook-coefficients", run: check_hooks },
        GraphCheck { name: "longest-hook", run: check_longest_hook },
        GraphCheck { name: "leading-partition", run: check_leading_partition },
        GraphCheck { name: "leading-coefficient", run: check_leading_coefficient },
        GraphCheck { name: "leaf-count", run: check_leaf_count },
        GraphCheck { name: "decomposition", run: check_decomposition },
        GraphCheck { name: "inference-soundness", run: check_inference },
    ]
}

fn group_same_cycle(group: &[&VerifyCtx]) -> Result<(), String> {
    let c0 = group[0].decomp.cycle_size();
    if group.iter().any(|ctx| ctx.decomp.cycle_size() != c0) {
        return Err("CSF-equal graphs with different cycle sizes".into());
    }
    Ok(())
}

fn group_k_determines_r(group: &[&VerifyCtx]) -> Result<(), String> {
    for a in group {
        for b in group {
            let (ka, kb) =
                (a.graph.internal_edges().len(), b.graph.internal_edges().len());
            if ka == kb && a.decomp.r != b.decomp.r {
                return Err(format!("equal k = {ka} but r {} vs {}", a.decomp.r, b.decomp.r));
            }
        }
    }
    Ok(())
}

/// Conjectured invariance of degree sequence, r, and k for CSF-equal pairs
/// with c ≥ 4 or (c = 3, odd n).
fn group_conjecture(group: &[&VerifyCtx]) -> Result<(), String> {
    let c = group[0].decomp.cycle_size();
    let n = group[0].graph.vertex_count();
    if c < 4 && n.is_multiple_of(2) {
        return Ok(()); // out of the conjecture's scope
    }
    let sig = |ctx: &VerifyCtx| {
        (ctx.graph.degree_sequence(), ctx.decomp.r, ctx.graph.internal_edges().len())
    };
    let first = sig(group[0]);
    for ctx in &group[1..] {
        if sig(ctx) != first {
            return Err(format!("degree/r/k signature differs: {:?} vs {:?}", first, sig(ctx)));
        }
    }
    Ok(())
}

pub fn standard_group_checks() -> Vec<GroupCheck> {
    vec![
        GroupCheck { name: "equal-csf-same-cycle", run: group_same_cycle },
        GroupCheck { name: "equal-k-forces-equal-r", run: group_k_determines_r },
        GroupCheck { name: "conjecture-degree-r-k", run: group_conjecture },
    ]
}

pub const MAX_VERIFY_N: usize = 12;

/// Sweeps every check over all connected unicyclic graphs with 3 ≤ n ≤ n_max.
pub fn verify_theorems(n_max: usize) -> Result<VerifyReport, EnumerateError> {
    run_verification(n_max, &standard_checks(), &standard_group_checks())
}

pub fn run_verification(
    n_max: usize,
    checks: &[GraphCheck],
    group_checks: &[GroupCheck],
) -> Result<VerifyReport, EnumerateError> {
    if n_max > MAX_VERIFY_N {
        return Err(EnumerateError::VerifyTooLarge(n_max));
    }
    let mut outcomes: Vec<CheckOutcome> = checks
        .iter()
        .map(|c| CheckOutcome {
            name: c.name.into(),
            pass: 0,
            fail: 0,
            counterexample: None,
            detail: None,
        })
        .collect();
    outcomes.extend(group_checks.iter().map(|c| CheckOutcome {
        name: c.name.into(),
        pass: 0,
        fail: 0,
        counterexample: None,
        detail: None,
    }));
    let mut graphs_checked = 0u64;

    for n in 3..=n_max {
        let graphs = enumerate_unicyclic_all(n)?;
        graphs_checked += graphs.len() as u64;
        let prepared: Vec<(Graph, StarExpansion, UnicyclicDecomposition)> = graphs
            .into_par_iter()
            .map(|g| {
                let x = star_expand(&g);
                let d = g.unicyclic_decompose().expect("enumeration emits unicyclic graphs");
                (g, x, d)
            })
            .collect();
        let ctxs: Vec<VerifyCtx> = prepared
            .iter()
            .map(|(g, x, d)| VerifyCtx { graph: g, expansion: x, decomp: d })
            .collect();

        for ctx in &ctxs {
            for (check, outcome) in checks.iter().zip(outcomes.iter_mut()) {
                match (check.run)(ctx) {
                    Ok(()) => outcome.pass += 1,
                    Err(msg) => {
                        outcome.fail += 1;
                        if outcome.counterexample.is_none() {
                            outcome.counterexample = Some(to_graph6(ctx.graph)?);
                            outcome.detail = Some(msg);
                        }
                    }
                }
            }
        }

        // group CSF-equal graphs across every cycle size at this n
        let mut groups: HashMap<Vec<u8>, Vec<&VerifyCtx>> = HashMap::new();
        for ctx in &ctxs {
            groups.entry(serde_json::to_vec(ctx.expansion)?).or_default().push(ctx);
        }
        for group in groups.values().filter(|g| g.len() >= 2) {
            for (check, outcome) in
                group_checks.iter().zip(outcomes.iter_mut().skip(checks.len()))
            {
                match (check.run)(group) {
                    Ok(()) => outcome.pass += 1,
                    Err(msg) => {
                        outcome.fail += 1;
                        if outcome.counterexample.is_none() {
                            let g6: Vec<String> = group
                                .iter()
                                .map(|ctx| to_graph6(ctx.graph))
                                .collect::<Result<_, _>>()?;
                            outcome.counterexample = Some(g6.join("|"));
                            outcome.detail = Some(msg);
                        }
                    }
                }
            }
        }
    }

    Ok(VerifyReport { n_max: n_max as u32, graphs_checked, checks: outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_tree_counts() {
        let trees = RootedTrees::up_to(9);
        let expected = [0, 1, 1, 2, 4, 9, 20, 48, 115, 286];
        for (k, &want) in expected.iter().enumerate() {
            assert_eq!(trees.count_of_size(k), want, "rooted trees on {k} vertices");
        }
    }

    #[test]
    fn enumeration_counts() {
        // frozen counts for connected unicyclic graphs on 3..=9 vertices
        let expected = [1usize, 2, 5, 13, 33, 89, 240];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 3;
            assert_eq!(enumerate_unicyclic_all(n).unwrap().len(), want, "n = {n}");
        }
        assert_eq!(enumerate_unicyclic(3, 3).unwrap().len(), 1);
        assert_eq!(enumerate_unicyclic(4, 3).unwrap().len(), 1);
        assert_eq!(enumerate_unicyclic(4, 4).unwrap().len(), 1);
        assert!(enumerate_unicyclic(2, 3).is_err());
        assert!(enumerate_unicyclic(15, 3).is_err());
    }

    #[test]
    fn generator_matches_bruteforce_small() {
        for n in 3..=7 {
            let fast: HashSet<Vec<u8>> =
                enumerate_unicyclic_all(n).unwrap().iter().map(canonical_form).collect();
            let brute: HashSet<Vec<u8>> =
                unicyclic_bruteforce(n).unwrap().iter().map(canonical_form).collect();
            assert_eq!(fast, brute, "n = {n}");
        }
    }

    #[test]
    fn emitted_graphs_are_unicyclic() {
        for g in enumerate_unicyclic_all(8).unwrap() {
            assert!(g.is_unicyclic());
            assert_eq!(g.edge_count(), g.vertex_count());
        }
    }

    #[test]
    fn exhaustive_graph_counts() {
        let connected = [1usize, 1, 2, 6, 21, 112];
        for (i, &want) in connected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).unwrap().len(), want, "connected n = {}", i + 1);
        }
        let all = [1usize, 2, 4, 11, 34, 156];
        for (i, &want) in all.iter().enumerate() {
            assert_eq!(all_graphs(i + 1).unwrap().len(), want, "all n = {}", i + 1);
        }
        let trees = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &want) in trees.iter().enumerate() {
            assert_eq!(free_trees(i + 1).unwrap().len(), want, "trees n = {}", i + 1);
        }
    }

    #[test]
    fn collision_search_small() {
        // no collisions among 3-unicyclic graphs on 5 vertices
        let report = collision_search(5, 3, None).unwrap();
        assert_eq!(report.pair_count, 0);
        // the first 3-cycle collisions appear at n = 6
        let report = collision_search(6, 3, None).unwrap();
        assert!(report.pair_count >= 1);
        for class in &report.classes {
            assert!(class.graphs.len() >= 2);
            let members: Vec<Graph> =
                class.graphs.iter().map(|s| crate::io::from_graph6(s).unwrap()).collect();
            let codes: HashSet<Vec<u8>> = members.iter().map(canonical_form).collect();
            assert_eq!(codes.len(), members.len(), "members must be non-isomorphic");
            for g in &members {
                assert_eq!(star_expand(g), class.expansion);
            }
        }
    }

    #[test]
    fn collision_cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("csf-cache-test-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let first = collision_search(6, 3, Some(&dir)).unwrap();
        assert!(cache_path(&dir, 6, 3).exists());
        let second = collision_search(6, 3, Some(&dir)).unwrap();
        assert_eq!(first.pair_count, second.pair_count);
        assert_eq!(
            serde_json::to_string(&first.classes).unwrap(),
            serde_json::to_string(&second.classes).unwrap()
        );
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn verification_passes_small() {
        let report = verify_theorems(7).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.graphs_checked, 1 + 2 + 5 + 13 + 33);
    }

    #[test]
    fn injected_bug_is_reported() {
        fn broken(ctx: &VerifyCtx) -> Result<(), String> {
            // deliberately off by one against c_(n) = c − 1
            let n = ctx.graph.vertex_count() as u32;
            let cn = ctx.expansion.coeff(&crate::partition::Partition::single(n));
            if cn == num_bigint::BigInt::from(ctx.decomp.cycle_size() as i64) {
                Ok(())
            } else {
                Err("c_(n) != c".into())
            }
        }
        let checks = vec![GraphCheck { name: "deliberately-broken", run: broken }];
        let report = run_verification(5, &checks, &[]).unwrap();
        let outcome = &report.checks[0];
        assert!(outcome.fail > 0);
        assert!(outcome.counterexample.is_some());
    }
}
