//! Standard graph families used as fixtures and by the CLI.

use crate::graph::Graph;

fn build(name: &str, vertex_count: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(vertex_count, edges).expect("family edges are valid").with_name(name)
}

/// Path on `k` vertices `0 - 1 - ... - (k-1)`.
pub fn path(k: usize) -> Graph {
    build(&format!("P{k}"), k, (1..k).map(|i| (i - 1, i)).collect())
}

/// Cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Graph {
    build(&format!("C{k}"), k, (0..k).map(|i| (i, (i + 1) % k)).collect())
}

/// Complete graph on `k` vertices.
pub fn complete(k: usize) -> Graph {
    let edges = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    build(&format!("K{k}"), k, edges)
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    build(&format!("K{a},{b}"), a + b, edges)
}

/// Star with hub `0` and leaves `1..=arms`.
pub fn star(arms: usize) -> Graph {
    build(&format!("S{arms}"), arms + 1, (1..=arms).map(|i| (0, i)).collect())
}

/// Wheel with hub `0` and rim cycle `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
    edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
    build(&format!("W{rim}"), rim + 1, edges)
}

/// Octahedron: `K6` minus the perfect matching `{0,1}, {2,3}, {4,5}`.
pub fn octahedron() -> Graph {
    let edges =
        (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).filter(|&(i, j)| !(i % 2 == 0 && j == i + 1)).collect();
    build("octahedron", 6, edges)
}

/// Triangular prism: triangles `0,1,2` and `3,4,5` joined by `i - i+3`.
pub fn prism() -> Graph {
    let edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
    build("prism", 6, edges)
}

/// Y-graph: center `0` and leaves `1, 2, 3`.
pub fn y_graph() -> Graph {
    star(3).with_name("Y")
}

/// Lasso: tail end `0`, junction `1`, and the triangle `1, 2, 3`.
pub fn lasso() -> Graph {
    build("lasso", 4, vec![(0, 1), (1, 2), (2, 3), (1, 3)])
}

/// Two branch vertices `0` and `1` joined by `branches` internally disjoint
/// paths, each with `inner` interior vertices.
pub fn theta(branches: usize, inner: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 2;
    for _ in 0..branches {
        let mut prev = 0;
        for _ in 0..inner {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    build(&format!("theta{branches}"), next, edges)
}

/// Two triangles with a tail each, hung between `x = 0` and `y = 1`, plus a
/// third branch `x - w - y`. Removing `{x, y}` leaves three components.
pub fn two_cut_example() -> Graph {
    // x=0 y=1 v1..v6 = 2..7, w = 8
    let edges = vec![(0, 3), (3, 2), (2, 7), (3, 7), (7, 1), (0, 4), (4, 5), (5, 6), (4, 6), (6, 1), (0, 8), (8, 1)];
    build("two-cut-example", 9, edges)
}

/// The 13-vertex graph of the spanning-tree example, ids `label - 1`:
/// the tree path `1..8`, the branch `3 - 9 - 10 - 11 - 12`, the leaf `13` on
/// `10`, plus the non-tree edges `1 - 13` and `8 - 12`.
pub fn spanning_example() -> Graph {
    let labeled = [
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (3, 9),
        (9, 10),
        (10, 11),
        (11, 12),
        (10, 13),
        (1, 13),
        (8, 12),
    ];
    build("spanning-example", 13, labeled.iter().map(|&(a, b)| (a - 1, b - 1)).collect())
}
