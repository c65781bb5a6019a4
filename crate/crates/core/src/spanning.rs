//! Spanning sets of `H1` from a rooted, ordered spanning tree.
//!
//! Vertices are labeled by walking around the tree from a root of tree
//! degree one. The flow moves the smallest-labeled unblocked particle one
//! step toward the root, so every configuration drains into a stack at the
//! root. A 1-cell is critical when all its spectators are blocked and its
//! edge is either deleted from the tree (an AB-cycle) or enters a branch
//! vertex out of turn (a Y-cycle). Closing each critical cell with flow
//! paths gives a cycle, and these cycles generate `H1`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::configspace::{build_complex, CellComplex, Chain, ComplexError};
use crate::graph::{is_sufficiently_subdivided, Graph, GraphError};
use crate::homology::{smith_normal_form, HomologyBasis, HomologyError, IntegerMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpanningError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("root {0} does not have degree 1 in the spanning tree")]
    RootNotLeaf(usize),
    #[error("vertex {0} is out of range")]
    UnknownVertex(usize),
    #[error("cyclic order at vertex {0} is not a permutation of its neighbors")]
    InvalidEmbedding(usize),
    #[error("deleting the given edges does not leave a spanning tree")]
    InvalidTree,
    #[error("graph is not sufficiently subdivided for {0} particles")]
    InsufficientSubdivision(usize),
    #[error("generator {0} is not a cycle")]
    NotACycle(usize),
}

/// How the spanning tree is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum TreeShape {
    /// Depth-first search, taking neighbors in cyclic order.
    #[default]
    DepthFirst,
    /// The root edge, then breadth-first search from the root's neighbor.
    /// Branch vertices keep as many tree arms as possible.
    BreadthFirst,
    /// The graph minus exactly these edges.
    Deleted(Vec<(usize, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootedOrderedTree {
    pub root: usize,
    /// Tree parent of every vertex; `None` only at the root.
    pub parent: Vec<Option<usize>>,
    /// 1-based walk label of every vertex.
    pub label: Vec<usize>,
    /// Vertices in label order.
    pub order: Vec<usize>,
    pub deleted: Vec<(usize, usize)>,
}

/// Cyclic neighbor orders by ascending id.
pub fn default_embedding(g: &Graph) -> Vec<Vec<usize>> {
    g.sorted_neighbors()
}

fn check_embedding(g: &Graph, embedding: &[Vec<usize>]) -> Result<(), SpanningError> {
    let sorted = g.sorted_neighbors();
    if embedding.len() != g.vertex_count() {
        return Err(SpanningError::InvalidEmbedding(embedding.len().min(g.vertex_count())));
    }
    for (v, order) in embedding.iter().enumerate() {
        let mut o = order.clone();
        o.sort_unstable();
        if o != sorted[v] {
            return Err(SpanningError::InvalidEmbedding(v));
        }
    }
    Ok(())
}

/// `order` rotated to start just after `after` (unchanged if absent).
fn rotate_after(order: &[usize], after: Option<usize>) -> Vec<usize> {
    match after.and_then(|p| order.iter().position(|&x| x == p)) {
        Some(i) => order[i + 1..].iter().chain(&order[..=i]).copied().collect(),
        None => order.to_vec(),
    }
}

fn search_tree(g: &Graph, root: usize, embedding: &[Vec<usize>], breadth: bool) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let Some(&first) = embedding[root].first() else { return parent };
    parent[first] = Some(root);
    seen[first] = true;
    if breadth {
        let mut queue = VecDeque::from([first]);
        while let Some(u) = queue.pop_front() {
            for w in rotate_after(&embedding[u], parent[u]) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
    } else {
        let mut stack = vec![(first, rotate_after(&embedding[first], Some(root)), 0)];
        while let Some((u, order, next)) = stack.last_mut() {
            let Some(&w) = order.get(*next) else {
                stack.pop();
                continue;
            };
            *next += 1;
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(*u);
                let u = *u;
                stack.push((w, rotate_after(&embedding[w], Some(u)), 0));
            }
        }
    }
    parent
}

fn tree_from_deleted(g: &Graph, root: usize, deleted: &[(usize, usize)]) -> Result<Vec<Option<usize>>, SpanningError> {
    let removed: BTreeSet<(usize, usize)> = deleted.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let kept: Vec<(usize, usize)> =
        g.edges().iter().copied().filter(|&(u, v)| !removed.contains(&(u.min(v), u.max(v)))).collect();
    if removed.len() != deleted.len()
        || kept.len() + 1 != g.vertex_count()
        || g.edge_count() != kept.len() + removed.len()
    {
        return Err(SpanningError::InvalidTree);
    }
    let tree = Graph::new(g.vertex_count(), kept)?;
    if !tree.is_connected() {
        return Err(SpanningError::InvalidTree);
    }
    let adj = tree.sorted_neighbors();
    let mut parent = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    Ok(parent)
}

/// Spanning tree rooted at `root` with vertices labeled by the walk that
/// visits the children of each vertex in cyclic order after its parent.
pub fn rooted_ordered_tree(
    g: &Graph,
    root: usize,
    embedding: &[Vec<usize>],
    shape: &TreeShape,
) -> Result<RootedOrderedTree, SpanningError> {
    g.require_simple()?;
    g.require_connected()?;
    if root >= g.vertex_count() {
        return Err(SpanningError::UnknownVertex(root));
    }
    check_embedding(g, embedding)?;
    let parent = match shape {
        TreeShape::DepthFirst => search_tree(g, root, embedding, false),
        TreeShape::BreadthFirst => search_tree(g, root, embedding, true),
        TreeShape::Deleted(edges) => tree_from_deleted(g, root, edges)?,
    };
    let n = g.vertex_count();
    let mut children = vec![Vec::new(); n];
    for (v, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            children[p].push(v);
        }
    }
    if n > 1 && (children[root].len() != 1 || parent.iter().enumerate().any(|(v, p)| v != root && p.is_none())) {
        return Err(SpanningError::RootNotLeaf(root));
    }

    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        order.push(u);
        let next: Vec<usize> =
            rotate_after(&embedding[u], parent[u]).into_iter().filter(|w| children[u].contains(w)).collect();
        stack.extend(next.into_iter().rev());
    }
    let mut label = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        label[v] = i + 1;
    }
    let is_tree_edge = |u: usize, v: usize| parent[u] == Some(v) || parent[v] == Some(u);
    let deleted =
        g.edges().iter().copied().filter(|&(u, v)| !is_tree_edge(u, v)).map(|(u, v)| (u.min(v), u.max(v))).collect();
    Ok(RootedOrderedTree { root, parent, label, order, deleted })
}

/// The smallest non-cut vertex, which can always be a tree leaf.
pub fn default_root(g: &Graph) -> usize {
    let adj = g.adjacency();
    (0..g.vertex_count()).find(|&v| crate::graph::components_avoiding(&adj, &[v]).0 <= 1).unwrap_or(0)
}

/// One particle moving `from -> to` while the spectators stay put.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Move {
    pub spectators: Vec<usize>,
    pub from: usize,
    pub to: usize,
}

impl RootedOrderedTree {
    /// Vertices carrying labels `1..=n`.
    pub fn root_configuration(&self, n: usize) -> Vec<usize> {
        let mut x: Vec<usize> = self.order[..n.min(self.order.len())].to_vec();
        x.sort_unstable();
        x
    }

    fn blocked(&self, v: usize, occupied: impl Fn(usize) -> bool) -> bool {
        self.parent[v].is_none_or(occupied)
    }

    /// The next move of the flow, or `None` once every particle is blocked.
    /// When the first branch vertex of the tree sits at least `n - 1` edges
    /// from the root, that only happens at the root configuration.
    pub fn flow_step(&self, config: &[usize]) -> Option<Move> {
        let v = config
            .iter()
            .copied()
            .filter(|&v| !self.blocked(v, |p| config.contains(&p)))
            .min_by_key(|&v| self.label[v])?;
        let mut spectators: Vec<usize> = config.iter().copied().filter(|&x| x != v).collect();
        spectators.sort_unstable();
        Some(Move { spectators, from: v, to: self.parent[v].unwrap() })
    }

    /// Follows the flow from `config`; returns the chain walked and where it stopped.
    pub fn flow_path(&self, c: &CellComplex, config: &[usize]) -> Result<(Chain, Vec<usize>), SpanningError> {
        let mut x = config.to_vec();
        x.sort_unstable();
        let mut chain = Chain::new();
        while let Some(m) = self.flow_step(&x) {
            let (k, sign) = c.directed_cell(&m.spectators, m.from, m.to)?;
            chain.add_term(k, sign);
            let pos = x.iter().position(|&y| y == m.from).unwrap();
            x[pos] = m.to;
            x.sort_unstable();
        }
        Ok((chain, x))
    }

    fn is_tree_edge(&self, u: usize, v: usize) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }

    /// Classifies a 1-cell; `None` unless it is critical.
    fn critical(&self, spectators: &[usize], edge: (usize, usize)) -> Option<Provenance> {
        let (a, b) = edge;
        let occupied = |p: usize| p == a || p == b || spectators.contains(&p);
        if !spectators.iter().all(|&v| self.blocked(v, occupied)) {
            return None;
        }
        if !self.is_tree_edge(a, b) {
            return Some(Provenance::DeletedEdge { u: a, v: b });
        }
        let (child, center) = if self.parent[a] == Some(b) { (a, b) } else { (b, a) };
        let (lo, hi) = (self.label[center], self.label[child]);
        let blocker = spectators
            .iter()
            .copied()
            .filter(|&w| self.parent[w] == Some(center) && lo < self.label[w] && self.label[w] < hi)
            .min_by_key(|&w| self.label[w])?;
        let toward_root = self.parent[center].expect("a branch vertex is not the root");
        Some(Provenance::Exchange { center, arms: [toward_root, blocker, child] })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleKind {
    #[serde(rename = "AB")]
    Ab,
    #[serde(rename = "Y")]
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Provenance {
    /// A particle crosses the deleted edge `u -- v`.
    DeletedEdge { u: usize, v: usize },
    /// A particle enters `center` from `arms[2]` ahead of the one waiting on
    /// `arms[1]`; `arms[0]` points toward the root.
    Exchange { center: usize, arms: [usize; 3] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorCycle {
    pub kind: CycleKind,
    pub provenance: Provenance,
    /// The critical move the cycle is built around.
    pub critical: Move,
    pub chain: Chain,
}

/// Critical 1-cells of `c` with respect to `tree`, each closed into a cycle
/// through the root configuration.
pub fn spanning_set_with(c: &CellComplex, tree: &RootedOrderedTree) -> Result<Vec<GeneratorCycle>, SpanningError> {
    let n = c.particles();
    let x0 = tree.root_configuration(n);
    let critical: Vec<(usize, Provenance)> = c
        .cells1()
        .iter()
        .enumerate()
        .filter_map(|(k, cell)| tree.critical(&cell.spectators, cell.edge).map(|p| (k, p)))
        .collect();

    let links = SinkLinks::new(c, &x0);
    let transport = |config: &[usize]| -> Result<Chain, SpanningError> {
        let (chain, sink) = tree.flow_path(c, config)?;
        Ok(links.path_from_root(c, &sink)?.minus(&chain))
    };

    let mut cycles: Vec<GeneratorCycle> = critical
        .into_par_iter()
        .map(|(k, provenance)| {
            let cell = &c.cells1()[k];
            let (from, to) = match provenance {
                Provenance::DeletedEdge { u, v } => (u, v),
                Provenance::Exchange { center, arms } => (arms[2], center),
            };
            let (idx, sign) = c.directed_cell(&cell.spectators, from, to)?;
            let start: Vec<usize> = cell.spectators.iter().copied().chain([from]).collect();
            let end: Vec<usize> = cell.spectators.iter().copied().chain([to]).collect();
            let chain = transport(&start)?.plus(&Chain::unit(idx, sign)).minus(&transport(&end)?);
            assert!(c.is_cycle(&chain), "generator chain is not closed");
            let kind = match provenance {
                Provenance::DeletedEdge { .. } => CycleKind::Ab,
                Provenance::Exchange { .. } => CycleKind::Y,
            };
            Ok(GeneratorCycle {
                kind,
                provenance,
                critical: Move { spectators: cell.spectators.clone(), from, to },
                chain,
            })
        })
        .collect::<Result<_, SpanningError>>()?;
    cycles.retain(|z| !z.chain.is_zero());
    Ok(cycles)
}

/// Paths in the 1-skeleton from the root configuration to any other
/// configuration where the flow stops, found by breadth-first search.
struct SinkLinks {
    x0: usize,
    prev: std::sync::OnceLock<HashMap<usize, (usize, usize, i64)>>,
}

impl SinkLinks {
    fn new(c: &CellComplex, x0: &[usize]) -> Self {
        SinkLinks { x0: c.index_of_cell0(x0).expect("root configuration is a 0-cell"), prev: Default::default() }
    }

    /// Chain of a path from the root configuration to `sink`.
    fn path_from_root(&self, c: &CellComplex, sink: &[usize]) -> Result<Chain, SpanningError> {
        let target = c.index_of_cell0(sink).ok_or_else(|| ComplexError::UnknownConfiguration(sink.to_vec()))?;
        if target == self.x0 {
            return Ok(Chain::new());
        }
        let prev = self.prev.get_or_init(|| {
            let mut incident = vec![Vec::new(); c.cell_counts().0];
            for k in 0..c.cell_counts().1 {
                let [t, h] = c.endpoints(k);
                incident[t].push((k, h, 1));
                incident[h].push((k, t, -1));
            }
            let mut prev = HashMap::new();
            let mut queue = VecDeque::from([self.x0]);
            while let Some(u) = queue.pop_front() {
                for &(k, w, sign) in &incident[u] {
                    if w != self.x0 && !prev.contains_key(&w) {
                        prev.insert(w, (u, k, sign));
                        queue.push_back(w);
                    }
                }
            }
            prev
        });
        let mut chain = Chain::new();
        let mut at = target;
        while at != self.x0 {
            let &(u, k, sign) = prev.get(&at).expect("complex is connected");
            chain.add_term(k, sign);
            at = u;
        }
        Ok(chain)
    }
}

/// The spanning set of `D^n(g)` for the default root, ascending cyclic
/// orders and a breadth-first tree.
pub fn spanning_set(g: &Graph, n: usize) -> Result<Vec<GeneratorCycle>, SpanningError> {
    let c = build_complex(g, n)?;
    Ok(spanning_set_for(&c)?.1)
}

/// The default tree for the complex's graph and the spanning set it yields.
pub fn spanning_set_for(c: &CellComplex) -> Result<(RootedOrderedTree, Vec<GeneratorCycle>), SpanningError> {
    let g = c.graph();
    if !is_sufficiently_subdivided(g, c.particles()) {
        return Err(SpanningError::InsufficientSubdivision(c.particles()));
    }
    let tree = rooted_ordered_tree(g, default_root(g), &default_embedding(g), &TreeShape::BreadthFirst)?;
    let cycles = spanning_set_with(c, &tree)?;
    Ok((tree, cycles))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub spans: bool,
    pub generators: usize,
    /// Rank of the free parts of the generators' classes.
    pub rank: usize,
    pub expected_rank: usize,
    /// Orders of the torsion summands, each `true` if the generators reach it.
    pub torsion_hit: Vec<bool>,
    /// Generators beyond the minimal number `rank + torsion summands`.
    pub redundancy: usize,
}

/// Whether the classes of `cycles` generate `H1(c)`.
pub fn verify_spanning(cycles: &[GeneratorCycle], c: &CellComplex) -> Result<SpanReport, SpanningError> {
    let basis = HomologyBasis::new(c);
    let group = basis.group();
    let (r, t) = (group.rank, basis.torsion_orders().len());
    if let Some(i) = cycles.iter().position(|z| !c.is_cycle(&z.chain)) {
        return Err(SpanningError::NotACycle(i));
    }
    let coords = cycles
        .iter()
        .map(|z| basis.coordinates(c, &z.chain).map(|h| [h.free, h.torsion].concat()))
        .collect::<Result<Vec<_>, _>>()?;

    let relation = |i: usize| {
        let mut row = vec![BigInt::from(0); r + t];
        row[r + i] = basis.torsion_orders()[i].clone();
        row
    };
    let generated = |columns: &[usize], rows: &[Vec<BigInt>]| -> Vec<BigInt> {
        let m: Vec<Vec<BigInt>> = rows.iter().map(|row| columns.iter().map(|&j| row[j].clone()).collect()).collect();
        if m.is_empty() || columns.is_empty() {
            return Vec::new();
        }
        smith_normal_form(&IntegerMatrix::from_dense(&m, columns.len()), false).factors
    };

    let free_cols: Vec<usize> = (0..r).collect();
    let rank = generated(&free_cols, &coords).len();
    let all_cols: Vec<usize> = (0..r + t).collect();
    let mut rows = coords.clone();
    rows.extend((0..t).map(relation));
    let factors = generated(&all_cols, &rows);
    let spans = factors.len() == r + t && factors.iter().all(One::is_one);
    let torsion_hit = (0..t)
        .map(|i| {
            let mut rows: Vec<Vec<BigInt>> = coords.iter().map(|row| row[r + i..=r + i].to_vec()).collect();
            rows.push(vec![basis.torsion_orders()[i].clone()]);
            generated(&[0], &rows).iter().all(One::is_one)
        })
        .collect();
    Ok(SpanReport {
        spans,
        generators: cycles.len(),
        rank,
        expected_rank: r,
        torsion_hit,
        redundancy: cycles.len().saturating_sub(r + t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::homology::h1;

    fn count(cycles: &[GeneratorCycle], kind: CycleKind) -> usize {
        cycles.iter().filter(|z| z.kind == kind).count()
    }

    #[test]
    fn path_labels_follow_the_path() {
        let g = families::path(5);
        let t = rooted_ordered_tree(&g, 0, &default_embedding(&g), &TreeShape::DepthFirst).unwrap();
        assert_eq!(t.label, vec![1, 2, 3, 4, 5]);
        assert!(t.deleted.is_empty());
    }

    #[test]
    fn star_hub_gets_label_two() {
        let g = families::star(3);
        let t = rooted_ordered_tree(&g, 1, &default_embedding(&g), &TreeShape::DepthFirst).unwrap();
        assert_eq!(t.label[0], 2);
        assert_eq!(t.label, vec![2, 1, 3, 4]);
    }

    #[test]
    fn root_must_be_a_tree_leaf() {
        let g = families::star(3);
        assert_eq!(
            rooted_ordered_tree(&g, 0, &default_embedding(&g), &TreeShape::DepthFirst),
            Err(SpanningError::RootNotLeaf(0))
        );
        let lasso = families::lasso();
        assert_eq!(
            rooted_ordered_tree(&lasso, 1, &default_embedding(&lasso), &TreeShape::BreadthFirst),
            Err(SpanningError::RootNotLeaf(1))
        );
    }

    fn fig_tree() -> RootedOrderedTree {
        let g = families::spanning_example();
        rooted_ordered_tree(&g, 0, &default_embedding(&g), &TreeShape::Deleted(vec![(0, 12), (7, 11)])).unwrap()
    }

    #[test]
    fn thirteen_vertex_labels() {
        let t = fig_tree();
        assert_eq!(t.label, (1..=13).collect::<Vec<_>>());
        assert_eq!(t.deleted, vec![(0, 12), (7, 11)]);
    }

    #[test]
    fn flow_moves() {
        let t = fig_tree();
        let ids = |labels: &[usize]| labels.iter().map(|l| l - 1).collect::<Vec<_>>();
        let step = |labels: &[usize]| t.flow_step(&ids(labels)).map(|m| (m.from + 1, m.to + 1));
        assert_eq!(step(&[1, 2, 3]), None);
        assert_eq!(step(&[4, 5, 9]), Some((4, 3)));
        assert_eq!(step(&[1, 2, 9]), Some((9, 3)));
        assert_eq!(step(&[1, 4, 9]), Some((4, 3)));
        assert_eq!(step(&[1, 2, 11]), Some((11, 10)));
    }

    #[test]
    fn inner_particle_on_an_arm_moves_first() {
        let g = crate::graph::sufficiently_subdivide(&families::y_graph(), 3).graph;
        let t = rooted_ordered_tree(&g, default_root(&g), &default_embedding(&g), &TreeShape::DepthFirst).unwrap();
        // Two particles on the last arm: the one nearer the branch vertex has the smaller label.
        let arm: Vec<usize> = t.order.iter().rev().take(2).copied().collect();
        let m = t.flow_step(&arm).unwrap();
        assert_eq!(m.from, arm[1]);
        assert!(t.label[arm[1]] < t.label[arm[0]]);
    }

    #[test]
    fn small_examples() {
        let tri = spanning_set(&families::cycle(3), 2).unwrap();
        assert_eq!((count(&tri, CycleKind::Ab), count(&tri, CycleKind::Y)), (1, 0));
        let y = spanning_set(&families::y_graph(), 2).unwrap();
        assert_eq!((count(&y, CycleKind::Ab), count(&y, CycleKind::Y)), (0, 1));
        let lasso = spanning_set(&families::lasso(), 2).unwrap();
        assert_eq!((count(&lasso, CycleKind::Ab), count(&lasso, CycleKind::Y)), (1, 1));
    }

    #[test]
    fn emitted_chains_are_cycles_and_span() {
        for (g, n) in
            [(families::cycle(3), 2), (families::y_graph(), 2), (families::lasso(), 2), (families::complete(4), 2)]
        {
            let c = build_complex(&g, n).unwrap();
            let (_, cycles) = spanning_set_for(&c).unwrap();
            assert!(cycles.iter().all(|z| c.is_cycle(&z.chain)));
            let report = verify_spanning(&cycles, &c).unwrap();
            assert!(report.spans, "{report:?}");
            assert_eq!(report.expected_rank, h1(&c).rank);
        }
    }

    #[test]
    fn k5_spans_with_torsion() {
        let c = build_complex(&families::complete(5), 2).unwrap();
        let (_, cycles) = spanning_set_for(&c).unwrap();
        let report = verify_spanning(&cycles, &c).unwrap();
        assert!(report.spans);
        assert_eq!((report.rank, report.torsion_hit.clone()), (6, vec![true]));
    }

    #[test]
    fn empty_list_does_not_span() {
        let c = build_complex(&families::cycle(3), 2).unwrap();
        let report = verify_spanning(&[], &c).unwrap();
        assert!(!report.spans);
        assert_eq!(report.rank, 0);
    }

    #[test]
    fn flow_halting_away_from_the_root_still_closes() {
        // Hexagon with two pendant paths: three particles stop short of the
        // root stack, so generators route through the sink link.
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 6), (6, 7), (7, 8), (3, 9), (9, 10), (10, 11)]);
        let g = Graph::new(12, edges).unwrap();
        let c = build_complex(&g, 3).unwrap();
        let (tree, cycles) = spanning_set_for(&c).unwrap();
        let x0 = tree.root_configuration(3);
        assert!(c.cells0().iter().any(|x| tree.flow_step(x).is_none() && *x != x0));
        assert!(cycles.iter().all(|z| c.is_cycle(&z.chain)));
        assert!(verify_spanning(&cycles, &c).unwrap().spans);
    }

    #[test]
    fn open_chains_are_rejected() {
        let c = build_complex(&families::cycle(3), 2).unwrap();
        let (_, mut cycles) = spanning_set_for(&c).unwrap();
        cycles[0].chain = Chain::unit(0, 1);
        assert_eq!(verify_spanning(&cycles, &c), Err(SpanningError::NotACycle(0)));
    }

    #[test]
    fn insufficient_subdivision_is_rejected() {
        assert_eq!(spanning_set(&families::cycle(3), 3), Err(SpanningError::InsufficientSubdivision(3)));
    }
}
