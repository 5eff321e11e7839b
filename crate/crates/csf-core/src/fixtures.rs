//! Fixed sample graphs shared by unit tests.

use crate::graph::Graph;

/// 14-vertex 4-unicyclic graph with trees at three of the four cycle
/// vertices; one sprout, two non-sprout deep vertices, k = 7, r = 3.
pub fn unicyclic14() -> Graph {
    Graph::from_edges(
        14,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (6, 0),
            (0, 4),
            (4, 5),
            (9, 4),
            (8, 1),
            (1, 7),
            (11, 10),
            (10, 2),
            (13, 11),
            (11, 12),
        ],
    )
    .unwrap()
}

/// 19-vertex 4-unicyclic graph with a non-trivial tree on every cycle
/// vertex; λ sorts to (3,2,2,1) and μ to (3,3,2,2,1).
pub fn unicyclic19() -> Graph {
    Graph::from_edges(
        19,
        &[
            (15, 0),
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (12, 3),
            (3, 4),
            (4, 5),
            (16, 0),
            (0, 6),
            (6, 7),
            (8, 6),
            (11, 10),
            (10, 1),
            (1, 9),
            (17, 14),
            (14, 13),
            (13, 2),
            (18, 14),
        ],
    )
    .unwrap()
}

/// Triangle 0-1-2 with the tree 0–3, 3–4, 3–5 attached; the 6-vertex
/// running example for the r = 1 leading coefficient.
pub fn triangle_spider6() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap()
}

/// 4-cycle with one pendant at every cycle vertex: n = 8, k = 4, r = 4.
pub fn hook_twin_a() -> Graph {
    Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)])
        .unwrap()
}

/// 4-cycle with St_4 hanging from one vertex: n = 8, k = 5, r = 1.
/// Shares all hook coefficients with [`hook_twin_a`].
pub fn hook_twin_b() -> Graph {
    Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (4, 6), (4, 7)])
        .unwrap()
}

/// The non-isomorphic pair of 12-vertex 4-unicyclic graphs with equal CSF.
pub fn csf_twins_12() -> (Graph, Graph) {
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
