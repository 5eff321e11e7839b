//! Simple undirected graphs with the three deletion-near-contraction edge
//! operations, vertex/edge classification, and the unicyclic decomposition.
//!
//! Vertices are `0..n`; adjacency is kept as one bitmask row per vertex, so
//! graphs are capped at 64 vertices (far above every sweep in this crate).
//! All operations are pure: they return new graphs and never mutate `self`.

use crate::partition::Partition;
use thiserror::Error;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0:?} is not present in the graph")]
    MissingEdge(EdgeRef),
    #[error("vertex {0} is out of range for a graph on {1} vertices")]
    InvalidVertex(usize, usize),
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("self-loops are not allowed")]
    SelfLoop,
    #[error("graph is not connected unicyclic: {0}")]
    NotUnicyclic(String),
    #[error("cannot parse graph input: {0}")]
    Parse(String),
}

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
}

impl EdgeRef {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop);
        }
        Ok(EdgeRef { u: a.min(b), v: a.max(b) })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn with_vertices(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::with_vertices(n)?;
        for &(a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    /// Inserts an edge while building a graph; duplicate inserts are no-ops.
    pub fn insert_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop);
        }
        for x in [a, b] {
            if x >= self.n {
                return Err(GraphError::InvalidVertex(x, self.n));
            }
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, e: EdgeRef) -> bool {
        e.v < self.n && self.adj[e.u] >> e.v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    /// Edges in increasing `(u, v)` order.
    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] >> u >> 1) {
                out.push(EdgeRef { u, v: u + 1 + v });
            }
        }
        out
    }

    fn check_edge(&self, e: EdgeRef) -> Result<(), GraphError> {
        if e.v >= self.n {
            return Err(GraphError::InvalidVertex(e.v, self.n));
        }
        if !self.has_edge(e) {
            return Err(GraphError::MissingEdge(e));
        }
        Ok(())
    }

    /// G ∖ e: same vertex set, edge removed.
    pub fn delete_edge(&self, e: EdgeRef) -> Result<Graph, GraphError> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.adj[e.u] &= !(1 << e.v);
        g.adj[e.v] &= !(1 << e.u);
        Ok(g)
    }

    /// Merges the endpoints of `e` into the smaller index and clears the
    /// larger one, which becomes a fresh vertex; duplicate edges produced by
    /// the merge collapse in the bitmask rows. Returns the freed index.
    fn contract_core(&self, e: EdgeRef) -> (Graph, usize) {
        let (keep, free) = (e.u, e.v);
        let mut g = self.clone();
        let merged = (g.adj[keep] | g.adj[free]) & !(1 << keep) & !(1 << free);
        for v in BitIter(g.adj[free]) {
            g.adj[v] &= !(1 << free);
        }
        g.adj[keep] = merged;
        g.adj[free] = 0;
        for v in BitIter(merged) {
            g.adj[v] |= 1 << keep;
        }
        (g, free)
    }

    /// G ⊙ e: contract `e` and attach a new leaf to the merged vertex.
    /// Vertex count is unchanged; the freed index is reused for the leaf.
    pub fn leaf_contract(&self, e: EdgeRef) -> Result<(Graph, EdgeRef), GraphError> {
        self.check_edge(e)?;
        let (mut g, leaf) = self.contract_core(e);
        let center = e.u;
        g.adj[center] |= 1 << leaf;
        g.adj[leaf] = 1 << center;
        Ok((g, EdgeRef { u: center.min(leaf), v: center.max(leaf) }))
    }

    /// (G ⊙ e) ∖ ℓ_e: contract `e` and add an isolated vertex instead.
    pub fn dot_contract(&self, e: EdgeRef) -> Result<Graph, GraphError> {
        self.check_edge(e)?;
        Ok(self.contract_core(e).0)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn is_internal_edge(&self, e: EdgeRef) -> bool {
        self.degree(e.u) >= 2 && self.degree(e.v) >= 2
    }

    /// Edges whose endpoints both have degree ≥ 2, in increasing order.
    pub fn internal_edges(&self) -> Vec<EdgeRef> {
        self.edges().into_iter().filter(|&e| self.is_internal_edge(e)).collect()
    }

    /// True iff the graph is a star forest (no internal edges).
    pub fn is_star_forest(&self) -> bool {
        self.edges().iter().all(|&e| !self.is_internal_edge(e))
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            loop {
                let mut next = comp;
                for v in BitIter(comp) {
                    next |= self.adj[v];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            out.push(BitIter(comp).collect());
        }
        out
    }

    /// Component orders as a partition of |V|.
    pub fn component_partition(&self) -> Partition {
        let parts: Vec<u32> =
            self.connected_components().iter().map(|c| c.len() as u32).collect();
        Partition::new(parts).expect("component sizes are positive")
    }

    /// ι(G), the number of isolated vertices.
    pub fn isolated_count(&self) -> usize {
        (0..self.n).filter(|&v| self.adj[v] == 0).count()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Component partition of G ∖ I(G); the residual graph is a star forest.
    pub fn leaf_component_partition(&self) -> Partition {
        let mut g = self.clone();
        for e in self.internal_edges() {
            g.adj[e.u] &= !(1 << e.v);
            g.adj[e.v] &= !(1 << e.u);
        }
        g.component_partition()
    }

    pub fn classify_vertices(&self) -> VertexClassification {
        let mut leaves = Vec::new();
        let mut internal = Vec::new();
        let mut deep = Vec::new();
        for v in 0..self.n {
            match self.degree(v) {
                0 => {}
                1 => leaves.push(v),
                _ => {
                    internal.push(v);
                    if self.neighbors(v).all(|w| self.degree(w) >= 2) {
                        deep.push(v);
                    }
                }
            }
        }
        let sprouts = self.unicyclic_cycle_vertices().map(|cycle| {
            deep.iter()
                .copied()
                .filter(|&v| cycle >> v & 1 == 1 && self.degree(v) >= 3)
                .collect()
        });
        VertexClassification { leaves, internal, deep, sprouts }
    }

    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.edge_count() == self.n && self.is_connected()
    }

    /// Cycle vertex mask when the graph is connected unicyclic, found by
    /// stripping degree-1 vertices until only the cycle remains.
    fn unicyclic_cycle_vertices(&self) -> Option<u64> {
        if !self.is_unicyclic() {
            return None;
        }
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut alive = (0..self.n).fold(0u64, |m, v| m | 1 << v);
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = queue.pop() {
            alive &= !(1 << v);
            for w in self.neighbors(v) {
                if alive >> w & 1 == 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        queue.push(w);
                    }
                }
            }
        }
        Some(alive)
    }

    /// Decomposes a connected unicyclic graph into its cycle and the rooted
    /// trees hanging from it, with the λ/μ leaf-component data.
    pub fn unicyclic_decompose(&self) -> Result<UnicyclicDecomposition, GraphError> {
        if self.n < 3 || self.edge_count() != self.n {
            return Err(GraphError::NotUnicyclic(format!(
                "|V| = {}, |E| = {}",
                self.n,
                self.edge_count()
            )));
        }
        if !self.is_connected() {
            return Err(GraphError::NotUnicyclic("graph is disconnected".into()));
        }
        let cycle_mask = self.unicyclic_cycle_vertices().expect("checked above");

        // Walk the cycle starting from its least vertex.
        let start = BitIter(cycle_mask).next().expect("cycle is nonempty");
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = (self.adj[start] & cycle_mask).trailing_zeros() as usize;
        while cur != start {
            cycle.push(cur);
            let next_mask = self.adj[cur] & cycle_mask & !(1 << prev);
            prev = cur;
            cur = next_mask.trailing_zeros() as usize;
        }
        let c = cycle.len();

        // Trees = components after removing the cycle edges; each contains
        // exactly one cycle vertex.
        let mut cut = self.clone();
        for i in 0..c {
            let (a, b) = (cycle[i], cycle[(i + 1) % c]);
            cut.adj[a] &= !(1 << b);
            cut.adj[b] &= !(1 << a);
        }
        let comps = cut.connected_components();
        let mut tree_of = vec![usize::MAX; self.n];
        let mut trees: Vec<Vec<usize>> = vec![Vec::new(); c];
        for comp in comps {
            let root_ix = cycle
                .iter()
                .position(|&v| comp.contains(&v))
                .expect("every off-cycle vertex hangs from the cycle");
            for &v in &comp {
                tree_of[v] = root_ix;
            }
            trees[root_ix] = comp;
        }

        let lambda: Vec<u32> = cycle
            .iter()
            .map(|&v| 1 + self.neighbors(v).filter(|&w| self.is_leaf(w)).count() as u32)
            .collect();

        // μ⁽ⁱ⁾: leaf components of G that live inside Tᵢ but avoid the root.
        let mut star = self.clone();
        for e in self.internal_edges() {
            star.adj[e.u] &= !(1 << e.v);
            star.adj[e.v] &= !(1 << e.u);
        }
        let mut mu: Vec<Vec<u32>> = vec![Vec::new(); c];
        for comp in star.connected_components() {
            if comp.iter().any(|v| cycle_mask >> v & 1 == 1) {
                continue; // the root component, counted by λᵢ
            }
            mu[tree_of[comp[0]]].push(comp.len() as u32);
        }
        let mu: Vec<Partition> =
            mu.into_iter().map(|parts| Partition::new(parts).unwrap()).collect();

        let r = trees.iter().filter(|t| t.len() > 1).count();

        let mut decomp = UnicyclicDecomposition { cycle, trees, lambda, mu, r };
        decomp.orient_minimal(self);
        Ok(decomp)
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut d: Vec<u32> = (0..self.n).map(|v| self.degree(v) as u32).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Drops isolated vertices, renumbering the rest; returns the count dropped.
    pub fn strip_isolated(&self) -> (Graph, usize) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.adj[v] != 0).collect();
        let dropped = self.n - keep.len();
        (self.induced(&keep), dropped)
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph { n: vertices.len(), adj: vec![0; vertices.len()] };
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                if pos[w] != usize::MAX {
                    g.adj[i] |= 1 << pos[w];
                }
            }
        }
        g
    }

    /// Relabels vertices: vertex v goes to position `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for v in 0..self.n {
            for w in self.neighbors(v) {
                g.adj[perm[v]] |= 1 << perm[w];
            }
        }
        g
    }

    /// Disjoint union, `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }
}

/// Leaf / internal / deep vertex sets; sprouts only for connected unicyclic
/// graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClassification {
    pub leaves: Vec<usize>,
    pub internal: Vec<usize>,
    pub deep: Vec<usize>,
    pub sprouts: Option<Vec<usize>>,
}

/// A connected unicyclic graph split into its cycle v₁..v_c and the rooted
/// trees T₁..T_c hanging from it, together with the λᵢ and μ⁽ⁱ⁾ leaf data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnicyclicDecomposition {
    /// Cycle vertices in cyclic order, oriented so the rooted-tree code
    /// sequence is lexicographically minimal over the dihedral symmetries.
    pub cycle: Vec<usize>,
    /// `trees[i]` is the vertex set of Tᵢ and contains its root `cycle[i]`.
    pub trees: Vec<Vec<usize>>,
    /// λᵢ = 1 + the number of leaves adjacent to vᵢ.
    pub lambda: Vec<u32>,
    /// μ⁽ⁱ⁾ = leaf components of Tᵢ avoiding the root's own leaf component.
    pub mu: Vec<Partition>,
    /// Number of non-trivial rooted trees.
    pub r: usize,
}

impl UnicyclicDecomposition {
    pub fn cycle_size(&self) -> usize {
        self.cycle.len()
    }

    pub fn n(&self) -> usize {
        self.trees.iter().map(|t| t.len()).sum()
    }

    /// μ = μ⁽¹⁾ · … · μ⁽ᶜ⁾ sorted into one partition.
    pub fn mu_concat(&self) -> Partition {
        self.mu.iter().fold(Partition::empty(), |acc, m| acc.sort_concat(m))
    }

    /// sort(λ · μ), which equals λ_LC of the underlying graph.
    pub fn lambda_mu_sorted(&self) -> Partition {
        Partition::new(self.lambda.clone()).unwrap().sort_concat(&self.mu_concat())
    }

    /// Index of the unique non-trivial tree; only meaningful when r = 1.
    pub fn nontrivial_tree_index(&self) -> Option<usize> {
        if self.r == 1 {
            self.trees.iter().position(|t| t.len() > 1)
        } else {
            None
        }
    }

    /// Rotates/reflects the cycle so the sequence of rooted-tree canonical
    /// codes is lexicographically minimal; makes decompositions reproducible.
    fn orient_minimal(&mut self, g: &Graph) {
        let c = self.cycle.len();
        let codes: Vec<Vec<u8>> = (0..c)
            .map(|i| rooted_tree_code(g, self.cycle[i], &self.trees[i]))
            .collect();
        let mut best: Option<(Vec<&Vec<u8>>, Vec<usize>)> = None;
        for rev in [false, true] {
            for shift in 0..c {
                let order: Vec<usize> = (0..c)
                    .map(|j| if rev { (shift + c - j) % c } else { (shift + j) % c })
                    .collect();
                let key: Vec<&Vec<u8>> = order.iter().map(|&i| &codes[i]).collect();
                if best.as_ref().is_none_or(|(bk, _)| key < *bk) {
                    best = Some((key, order));
                }
            }
        }
        let order = best.expect("cycle is nonempty").1;
        self.cycle = order.iter().map(|&i| self.cycle[i]).collect();
        self.trees = order.iter().map(|&i| self.trees[i].clone()).collect();
        self.lambda = order.iter().map(|&i| self.lambda[i]).collect();
        self.mu = order.iter().map(|&i| self.mu[i].clone()).collect();
    }
}

/// AHU-style code of the tree induced on `vertices` rooted at `root`:
/// nested sorted parenthesizations, so equal codes mean rooted-isomorphic.
fn rooted_tree_code(g: &Graph, root: usize, vertices: &[usize]) -> Vec<u8> {
    let mut inside = 0u64;
    for &v in vertices {
        inside |= 1 << v;
    }
    fn rec(g: &Graph, v: usize, parent: usize, inside: u64) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = g
            .neighbors(v)
            .filter(|&w| w != parent && inside >> w & 1 == 1)
            .map(|w| rec(g, w, v, inside))
            .collect();
        kids.sort();
        let mut code = vec![b'('];
        for k in kids {
            code.extend(k);
        }
        code.push(b')');
        code
    }
    rec(g, root, usize::MAX, inside)
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn e(a: usize, b: usize) -> EdgeRef {
        EdgeRef::new(a, b).unwrap()
    }

    fn parts(g: &Graph) -> Vec<u32> {
        g.component_partition().parts().to_vec()
    }

    /// Triangle 0-1-2 plus pendant 3 on vertex 2.
    fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    use crate::fixtures::{unicyclic14, unicyclic19};

    #[test]
    fn delete_edge_cases() {
        let c3 = families::cycle(3).unwrap();
        let g = c3.delete_edge(e(0, 1)).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_connected());
        // paw minus a cycle edge touching the pendant vertex's root is P4
        let g = paw().delete_edge(e(0, 2)).unwrap();
        assert_eq!(g.degree_sequence(), vec![2, 2, 1, 1]);
        assert!(g.is_connected());
        let p2 = families::path(2).unwrap();
        assert_eq!(parts(&p2.delete_edge(e(0, 1)).unwrap()), vec![1, 1]);
        assert_eq!(p2.delete_edge(e(0, 1)).unwrap().isolated_count(), 2);
        assert_eq!(paw().delete_edge(e(0, 3)), Err(GraphError::MissingEdge(e(0, 3))));
    }

    #[test]
    fn leaf_contract_cases() {
        // paw ⊙ cycle-edge = St4
        let (g, leaf_edge) = paw().leaf_contract(e(0, 2)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.degree_sequence(), vec![3, 1, 1, 1]);
        assert!(g.has_edge(leaf_edge));
        // C3 ⊙ e = P3: merged vertex adjacent to the remaining vertex and the new leaf
        let (g, _) = families::cycle(3).unwrap().leaf_contract(e(0, 1)).unwrap();
        assert_eq!(g.degree_sequence(), vec![2, 1, 1]);
        assert!(g.is_connected());
        // a leaf-edge is a fixed point: P2 ⊙ e ≅ P2
        let (g, _) = families::path(2).unwrap().leaf_contract(e(0, 1)).unwrap();
        assert_eq!(g.edges(), vec![e(0, 1)]);
    }

    #[test]
    fn dot_contract_cases() {
        let g = paw().dot_contract(e(0, 2)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(parts(&g), vec![3, 1]);
        assert_eq!(g.isolated_count(), 1);
        let g = families::cycle(3).unwrap().dot_contract(e(0, 1)).unwrap();
        assert_eq!(parts(&g), vec![2, 1]);
        let g = families::path(2).unwrap().dot_contract(e(0, 1)).unwrap();
        assert_eq!(parts(&g), vec![1, 1]);
    }

    #[test]
    fn internal_edges_cases() {
        assert!(families::star(4).unwrap().internal_edges().is_empty());
        assert_eq!(
            families::path(5).unwrap().internal_edges(),
            vec![e(1, 2), e(2, 3)]
        );
        let g = unicyclic14();
        let expected: Vec<EdgeRef> = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 10), (10, 11)]
            .iter()
            .map(|&(a, b)| e(a, b))
            .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(g.internal_edges(), expected);
    }

    #[test]
    fn leaf_component_partition_cases() {
        // forest: star {t1,t2,t3} with t1 also joined to a path of two more
        let f = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(f.leaf_component_partition().parts(), &[3, 2, 1]);
        let c6 = families::cycle(6).unwrap();
        assert_eq!(c6.leaf_component_partition().parts(), &[1, 1, 1, 1, 1, 1]);
        let g = unicyclic19();
        assert_eq!(g.leaf_component_partition().parts(), &[3, 3, 3, 2, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn classify_vertices_cases() {
        let g = unicyclic14();
        let cls = g.classify_vertices();
        assert_eq!(cls.deep, vec![2, 3, 10]);
        assert_eq!(cls.sprouts, Some(vec![2]));
        let st5 = families::star(5).unwrap();
        let cls = st5.classify_vertices();
        assert!(cls.deep.is_empty());
        assert_eq!(cls.leaves.len(), 4);
        let c6 = families::cycle(6).unwrap();
        let cls = c6.classify_vertices();
        assert_eq!(cls.deep.len(), 6);
        assert_eq!(cls.sprouts, Some(vec![]));
        // sprouts are undefined off the unicyclic family
        assert_eq!(families::path(4).unwrap().classify_vertices().sprouts, None);
    }

    #[test]
    fn component_ops() {
        let g = paw().dot_contract(e(0, 2)).unwrap();
        assert_eq!(parts(&g), vec![3, 1]);
        assert_eq!(g.isolated_count(), 1);
        let empty5 = Graph::with_vertices(5).unwrap();
        assert_eq!(parts(&empty5), vec![1; 5]);
        assert_eq!(empty5.isolated_count(), 5);
        assert_eq!(parts(&paw()), vec![4]);
        assert_eq!(paw().isolated_count(), 0);
    }

    #[test]
    fn decompose_unicyclic19() {
        let g = unicyclic19();
        let d = g.unicyclic_decompose().unwrap();
        assert_eq!(d.cycle_size(), 4);
        assert_eq!(d.n(), 19);
        let mut lam = d.lambda.clone();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(lam, vec![3, 2, 2, 1]);
        assert_eq!(d.mu_concat().parts(), &[3, 3, 2, 2, 1]);
        assert_eq!(d.r, 4);
        assert_eq!(d.lambda_mu_sorted(), g.leaf_component_partition());
    }

    #[test]
    fn decompose_small() {
        let c5 = families::cycle(5).unwrap();
        let d = c5.unicyclic_decompose().unwrap();
        assert_eq!((d.cycle_size(), d.r), (5, 0));
        assert!(d.lambda.iter().all(|&l| l == 1));
        assert!(d.mu_concat().is_empty());

        let d = paw().unicyclic_decompose().unwrap();
        assert_eq!((d.cycle_size(), d.r), (3, 1));
        let mut lam = d.lambda.clone();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(lam, vec![2, 1, 1]);
        assert!(d.mu_concat().is_empty());

        assert!(families::path(4).unwrap().unicyclic_decompose().is_err());
        assert!(families::star(4).unwrap().unicyclic_decompose().is_err());
    }

    #[test]
    fn decompose_orientation_is_stable() {
        // relabelling must not change the λ sequence after orientation
        let g = unicyclic14();
        let d = g.unicyclic_decompose().unwrap();
        let perm: Vec<usize> = (0..14).map(|v| (v * 5 + 3) % 14).collect();
        let h = g.relabel(&perm);
        let dh = h.unicyclic_decompose().unwrap();
        assert_eq!(d.lambda, dh.lambda);
        assert_eq!(d.mu, dh.mu);
        assert_eq!(d.r, dh.r);
    }

    #[test]
    fn dnc_preserves_vertex_count_and_shrinks_internal_edges() {
        for g in [paw(), unicyclic14(), families::cycle(6).unwrap()] {
            let k = g.internal_edges().len();
            for edge in g.internal_edges() {
                let children = [
                    g.delete_edge(edge).unwrap(),
                    g.dot_contract(edge).unwrap(),
                    g.leaf_contract(edge).unwrap().0,
                ];
                for child in children {
                    assert_eq!(child.vertex_count(), g.vertex_count());
                    assert!(child.internal_edges().len() < k);
                }
            }
        }
    }
}
