//! Canonical labeling by iterative partition refinement with backtracking
//! over cells: a full canonical form, not a hash, so equal codes mean
//! isomorphic and distinct codes certify non-isomorphism.

use crate::graph::Graph;

/// Deterministic byte code; equal iff the graphs are isomorphic.
pub type CanonicalCode = Vec<u8>;

/// Canonical code of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).0
}

/// Canonical code plus one relabeling that realizes it: `perm[v]` is the
/// canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalCode, Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (vec![0], Vec::new());
    }
    let mut best: Option<(CanonicalCode, Vec<usize>)> = None;
    let cells = vec![(0..n).collect::<Vec<usize>>()];
    search(g, cells, &mut best);
    best.expect("search always produces a labeling")
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<(CanonicalCode, Vec<usize>)>) {
    refine(g, &mut cells);
    let target = match cells.iter().position(|c| c.len() > 1) {
        None => {
            // discrete partition: read off the labeling
            let n = g.vertex_count();
            let mut perm = vec![0usize; n];
            for (pos, cell) in cells.iter().enumerate() {
                perm[cell[0]] = pos;
            }
            let code = encode(g, &perm);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, perm));
            }
            return;
        }
        Some(ix) => cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(_, c)| c.len())
            .map(|(i, _)| i)
            .unwrap_or(ix),
    };

    // Vertices of a twin cell are interchangeable by an automorphism, so
    // individualizing one representative explores every leaf code.
    let candidates: Vec<usize> = if is_twin_cell(g, &cells[target]) {
        vec![cells[target][0]]
    } else {
        cells[target].clone()
    };
    for v in candidates {
        let mut child = Vec::with_capacity(cells.len() + 1);
        for (i, cell) in cells.iter().enumerate() {
            if i == target {
                child.push(vec![v]);
                child.push(cell.iter().copied().filter(|&w| w != v).collect());
            } else {
                child.push(cell.clone());
            }
        }
        search(g, child, best);
    }
}

/// Equitable refinement: split every cell by neighbor counts into every
/// other cell until stable. Sub-cells are ordered by descending count so the
/// outcome is independent of vertex numbering.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut split_at = None;
        'outer: for (ci, cell) in cells.iter().enumerate() {
            if cell.len() < 2 {
                continue;
            }
            for mask in &masks {
                let d0 = (g.adjacency_mask(cell[0]) & mask).count_ones();
                if cell.iter().any(|&v| (g.adjacency_mask(v) & mask).count_ones() != d0) {
                    split_at = Some((ci, *mask));
                    break 'outer;
                }
            }
        }
        let Some((ci, mask)) = split_at else { return };
        let cell = cells.remove(ci);
        let mut groups: Vec<(u32, Vec<usize>)> = Vec::new();
        for v in cell {
            let d = (g.adjacency_mask(v) & mask).count_ones();
            match groups.iter_mut().find(|(k, _)| *k == d) {
                Some((_, grp)) => grp.push(v),
                None => groups.push((d, vec![v])),
            }
        }
        groups.sort_by_key(|g| std::cmp::Reverse(g.0));
        for (offset, (_, grp)) in groups.into_iter().enumerate() {
            cells.insert(ci + offset, grp);
        }
    }
}

/// True when all cell members are pairwise twins: identical neighborhoods
/// once the two vertices are blotted out of each other's rows.
fn is_twin_cell(g: &Graph, cell: &[usize]) -> bool {
    let v0 = cell[0];
    cell[1..].iter().all(|&v| {
        let wipe = !(1u64 << v0) & !(1u64 << v);
        g.adjacency_mask(v0) & wipe == g.adjacency_mask(v) & wipe
    })
}

/// Packs n and the upper triangle of the permuted adjacency matrix.
fn encode(g: &Graph, perm: &[usize]) -> CanonicalCode {
    let n = g.vertex_count();
    let mut inv = vec![0usize; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let bits = n * (n - 1) / 2;
    let mut code = vec![0u8; 1 + bits.div_ceil(8)];
    code[0] = n as u8;
    let mut k = 0;
    for i in 0..n {
        let row = g.adjacency_mask(inv[i]);
        for &w in &inv[i + 1..] {
            if row >> w & 1 == 1 {
                code[1 + k / 8] |= 1 << (k % 8);
            }
            k += 1;
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::fixtures::csf_twins_12;
    use crate::graph::Graph;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let samples = [
            families::cycle(4).unwrap(),
            families::path(6).unwrap(),
            families::star(7).unwrap(),
            families::cuttlefish(5, 3).unwrap(),
            crate::fixtures::unicyclic14(),
            Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (3, 4), (2, 5)]).unwrap(),
        ];
        for g in &samples {
            let code = canonical_form(g);
            let n = g.vertex_count();
            for _ in 0..50 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.relabel(&perm)), code);
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert_ne!(
            canonical_form(&families::path(4).unwrap()),
            canonical_form(&families::star(4).unwrap())
        );
        let (a, b) = csf_twins_12();
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn labeling_realizes_code() {
        for g in [families::cuttlefish(4, 2).unwrap(), crate::fixtures::unicyclic19()] {
            let (code, perm) = canonical_labeling(&g);
            assert_eq!(canonical_form(&g.relabel(&perm)), code);
            // and the relabeled graph encodes to its own code with identity
            let h = g.relabel(&perm);
            let id: Vec<usize> = (0..h.vertex_count()).collect();
            assert_eq!(encode(&h, &id), code);
        }
    }

    #[test]
    fn handles_symmetric_graphs() {
        // complete graphs funnel through the twin-cell shortcut
        let k8 = {
            let mut g = Graph::with_vertices(8).unwrap();
            for i in 0..8 {
                for j in i + 1..8 {
                    g.insert_edge(i, j).unwrap();
                }
            }
            g
        };
        let code = canonical_form(&k8);
        let perm: Vec<usize> = (0..8).rev().collect();
        assert_eq!(canonical_form(&k8.relabel(&perm)), code);
        let c8 = families::cycle(8).unwrap();
        let rot: Vec<usize> = (0..8).map(|v| (v + 3) % 8).collect();
        assert_eq!(canonical_form(&c8.relabel(&rot)), canonical_form(&c8));
    }
}
