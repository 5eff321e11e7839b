//! Builtin graph families: paths, cycles, stars, pans, cuttlefish, and the
//! two bicyclic shapes. Every worked example is reachable from these without
//! hand-writing edge lists.

use crate::graph::{Graph, GraphError};

/// P_n, vertices 0..n in a line.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::with_vertices(n)?;
    for i in 1..n {
        g.insert_edge(i - 1, i)?;
    }
    Ok(g)
}

/// C_n for n ≥ 3.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Parse(format!("cycle needs n ≥ 3, got {n}")));
    }
    let mut g = path(n)?;
    g.insert_edge(n - 1, 0)?;
    Ok(g)
}

/// St_k: center 0 with k−1 leaves. St_1 is a single vertex.
pub fn star(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::Parse("star needs k ≥ 1".into()));
    }
    let mut g = Graph::with_vertices(k)?;
    for v in 1..k {
        g.insert_edge(0, v)?;
    }
    Ok(g)
}

/// The pan on n vertices: C_{n−1} plus one pendant on cycle vertex 0.
pub fn pan(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::Parse(format!("pan needs n ≥ 4, got {n}")));
    }
    let mut g = cycle(n - 1)?.disjoint_union(&Graph::with_vertices(1)?)?;
    g.insert_edge(0, n - 1)?;
    Ok(g)
}

/// The paw: the 4-vertex pan (triangle plus a pendant).
pub fn paw() -> Graph {
    pan(4).expect("pan(4) is valid")
}

/// Cuttlefish C_{c,t}: a c-cycle with t leaves attached at one vertex.
pub fn cuttlefish(c: usize, t: usize) -> Result<Graph, GraphError> {
    if c < 3 || t < 1 {
        return Err(GraphError::Parse(format!("cuttlefish needs c ≥ 3, t ≥ 1, got ({c}, {t})")));
    }
    let mut g = cycle(c)?.disjoint_union(&Graph::with_vertices(t)?)?;
    for leaf in c..c + t {
        g.insert_edge(0, leaf)?;
    }
    Ok(g)
}

/// Type-I bicyclic: cycles C_s and C_t joined by a path with ℓ vertices
/// (ℓ = 1 means the cycles share a vertex). n = s + t + ℓ − 2.
pub fn bicyclic_type1(s: usize, t: usize, ell: usize) -> Result<Graph, GraphError> {
    if s < 3 || t < 3 || ell < 1 {
        return Err(GraphError::Parse(format!(
            "type-I bicyclic needs s,t ≥ 3 and ℓ ≥ 1, got ({s}, {t}, {ell})"
        )));
    }
    let n = s + t + ell - 2;
    let mut g = Graph::with_vertices(n)?;
    for i in 0..s {
        g.insert_edge(i, (i + 1) % s)?;
    }
    // path from cycle vertex 0 through ℓ−1 fresh vertices
    let mut anchor = 0;
    for j in 0..ell - 1 {
        g.insert_edge(anchor, s + j)?;
        anchor = s + j;
    }
    // second cycle through the far path endpoint
    let base = s + ell - 1;
    let second: Vec<usize> = std::iter::once(anchor).chain(base..base + t - 1).collect();
    for i in 0..t {
        g.insert_edge(second[i], second[(i + 1) % t])?;
    }
    Ok(g)
}

/// Type-II bicyclic: cycles C_s and C_t sharing a path with ℓ edges.
/// Needs 1 ≤ ℓ ≤ min(s,t) − 1 and not both side arcs a single edge
/// (that would be a multigraph). n = s + t − ℓ − 1.
pub fn bicyclic_type2(s: usize, t: usize, ell: usize) -> Result<Graph, GraphError> {
    if s < 3 || t < 3 {
        return Err(GraphError::Parse(format!("type-II bicyclic needs s,t ≥ 3, got ({s}, {t})")));
    }
    if ell < 1 || ell > s.min(t) - 1 {
        return Err(GraphError::Parse(format!(
            "type-II shared path needs 1 ≤ ℓ ≤ min(s,t)−1, got ℓ = {ell}"
        )));
    }
    if s - ell == 1 && t - ell == 1 {
        return Err(GraphError::Parse(
            "type-II with both side arcs of length 1 is a multigraph".into(),
        ));
    }
    let n = s + t - ell - 1;
    let mut g = Graph::with_vertices(n)?;
    // shared path 0..=ℓ between the two branch vertices 0 and ℓ
    for i in 0..ell {
        g.insert_edge(i, i + 1)?;
    }
    let mut next = ell + 1;
    for arc in [s - ell, t - ell] {
        // arc of `arc` edges from vertex 0 to vertex ℓ
        let mut prev = 0;
        for _ in 0..arc - 1 {
            g.insert_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        g.insert_edge(prev, ell)?;
    }
    Ok(g)
}
