//! Splitting a graph at cut vertices and two-vertex cuts until every piece is
//! a topological cycle or 3-connected.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::planarity::is_planar;
use super::{CutRecord, SplitOrder};
use crate::graph::{components_avoiding, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentKind {
    TopologicalCycle,
    #[serde(rename = "planar-3-connected")]
    Planar3Connected,
    #[serde(rename = "nonplanar-3-connected")]
    Nonplanar3Connected,
}

/// A terminal piece of the decomposition, in original vertex ids. Degree-2
/// vertices of 3-connected pieces are suppressed, so `edges` may contain
/// parallel pairs only for cycles on two vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MarkedComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub virtual_edges: Vec<(usize, usize)>,
}

impl MarkedComponent {
    /// The component as a multigraph on `0..vertices.len()`.
    pub fn graph(&self) -> Graph {
        let local = |x: usize| self.vertices.binary_search(&x).unwrap();
        Graph::new(self.vertices.len(), self.edges.iter().map(|&(u, v)| (local(u), local(v))))
            .expect("component edges are valid")
    }

    pub fn betti1(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }
}

#[derive(Debug, Clone, Copy)]
struct PieceEdge {
    u: usize,
    v: usize,
    is_virtual: bool,
}

/// Vertex-set pieces split at cut vertices, then each 2-connected block
/// split at two-vertex cuts.
pub(super) fn split(g: &Graph, order: SplitOrder) -> (Vec<MarkedComponent>, Vec<CutRecord>) {
    let mut vertex_cuts = Vec::new();
    let mut pair_cuts = Vec::new();
    let mut components = Vec::new();
    let mut pending: Vec<Vec<usize>> =
        if g.vertex_count() > 0 { vec![(0..g.vertex_count()).collect()] } else { vec![] };
    while let Some(piece) = pending.pop() {
        let sub = g.induced(&piece);
        let adj = sub.adjacency();
        let mut candidates: Vec<usize> = (0..piece.len()).collect();
        if order == SplitOrder::Reverse {
            candidates.reverse();
        }
        let cut = candidates.into_iter().find_map(|v| {
            let (count, labels) = components_avoiding(&adj, &[v]);
            (count >= 2).then_some((v, count, labels))
        });
        if let Some((v, count, labels)) = cut {
            vertex_cuts.push(CutRecord::Vertex { vertex: piece[v], mu: count, nu: adj[v].len() });
            for c in (0..count).rev() {
                let part: Vec<usize> =
                    (0..piece.len()).filter(|&i| i == v || labels[i] == c).map(|i| piece[i]).collect();
                pending.push(part);
            }
            continue;
        }
        if sub.edge_count() < piece.len() {
            continue; // a tree piece (single edge or vertex)
        }
        let edges =
            sub.edges().iter().map(|&(a, b)| PieceEdge { u: piece[a], v: piece[b], is_virtual: false }).collect();
        split_two_connected(edges, order, &mut pair_cuts, &mut components);
    }
    components.sort();
    vertex_cuts.extend(pair_cuts);
    (components, vertex_cuts)
}

fn degrees(edges: &[PieceEdge]) -> BTreeMap<usize, usize> {
    let mut deg = BTreeMap::new();
    for e in edges {
        *deg.entry(e.u).or_insert(0) += 1;
        *deg.entry(e.v).or_insert(0) += 1;
    }
    deg
}

fn component(kind: ComponentKind, edges: &[PieceEdge]) -> MarkedComponent {
    let vertices: Vec<usize> = degrees(edges).into_keys().collect();
    let key = |e: &PieceEdge| (e.u.min(e.v), e.u.max(e.v));
    let mut all: Vec<_> = edges.iter().map(key).collect();
    let mut virt: Vec<_> = edges.iter().filter(|e| e.is_virtual).map(key).collect();
    all.sort_unstable();
    virt.sort_unstable();
    MarkedComponent { kind, vertices, edges: all, virtual_edges: virt }
}

/// Replaces every maximal chain through degree-2 vertices by one edge. A
/// chain is virtual when it contains a virtual edge.
fn suppress(edges: &[PieceEdge]) -> Vec<PieceEdge> {
    let deg = degrees(edges);
    let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, e) in edges.iter().enumerate() {
        incident.entry(e.u).or_default().push(k);
        incident.entry(e.v).or_default().push(k);
    }
    let mut used = vec![false; edges.len()];
    let mut out = Vec::new();
    for (&start, &d) in &deg {
        if d == 2 {
            continue;
        }
        for &k0 in &incident[&start] {
            if used[k0] {
                continue;
            }
            let (mut k, mut at) = (k0, start);
            let mut is_virtual = false;
            loop {
                used[k] = true;
                is_virtual |= edges[k].is_virtual;
                at = if edges[k].u == at { edges[k].v } else { edges[k].u };
                if deg[&at] != 2 {
                    break;
                }
                k = *incident[&at].iter().find(|&&j| j != k).unwrap();
            }
            out.push(PieceEdge { u: start, v: at, is_virtual });
        }
    }
    out
}

/// Separation classes of `{x, y}`: one per component of the piece minus the
/// pair (with its edges to x and y), and one per direct x-y edge.
fn separation_classes(edges: &[PieceEdge], x: usize, y: usize) -> Vec<Vec<PieceEdge>> {
    let vertices: Vec<usize> = degrees(edges).into_keys().filter(|&w| w != x && w != y).collect();
    let index: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let mut adj = vec![Vec::new(); vertices.len()];
    for e in edges {
        if let (Some(&a), Some(&b)) = (index.get(&e.u), index.get(&e.v)) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let (count, labels) = components_avoiding(&adj, &[]);
    let mut classes = vec![Vec::new(); count];
    for e in edges {
        match index.get(&e.u).or_else(|| index.get(&e.v)) {
            Some(&a) => classes[labels[a]].push(*e),
            None => classes.push(vec![*e]),
        }
    }
    classes
}

fn split_two_connected(
    edges: Vec<PieceEdge>,
    order: SplitOrder,
    cuts: &mut Vec<CutRecord>,
    out: &mut Vec<MarkedComponent>,
) {
    let mut pending = vec![edges];
    while let Some(piece) = pending.pop() {
        if degrees(&piece).values().all(|&d| d == 2) {
            out.push(component(ComponentKind::TopologicalCycle, &piece));
            continue;
        }
        let reduced = suppress(&piece);
        let vertices: Vec<usize> = degrees(&reduced).into_keys().collect();
        let mut pairs: Vec<(usize, usize)> =
            vertices.iter().enumerate().flat_map(|(i, &x)| vertices[i + 1..].iter().map(move |&y| (x, y))).collect();
        if order == SplitOrder::Reverse {
            pairs.reverse();
        }
        // Cuts with three or more classes go first; a two-class cut taken
        // earlier can strand a series piece that would otherwise be absorbed
        // as a subdivided edge, making the component list order-dependent.
        let classified: Vec<_> = pairs.into_iter().map(|(x, y)| (x, y, separation_classes(&reduced, x, y))).collect();
        let found = classified
            .iter()
            .position(|(_, _, classes)| classes.len() >= 3)
            .or_else(|| {
                classified.iter().position(|(_, _, classes)| classes.len() == 2 && classes.iter().all(|c| c.len() > 1))
            })
            .map(|i| classified.into_iter().nth(i).unwrap());
        match found {
            Some((x, y, classes)) => {
                cuts.push(CutRecord::Pair { x, y, mu: classes.len() });
                for mut class in classes.into_iter().rev() {
                    class.push(PieceEdge { u: x, v: y, is_virtual: true });
                    pending.push(class);
                }
            }
            None => {
                let c = component(ComponentKind::Planar3Connected, &reduced);
                let planar = is_planar(&c.graph());
                let kind = if planar { ComponentKind::Planar3Connected } else { ComponentKind::Nonplanar3Connected };
                debug_assert!(c.graph().is_simple() && c.vertices.len() >= 4);
                debug_assert_eq!(c.edges.iter().collect::<BTreeSet<_>>().len(), c.edges.len());
                out.push(MarkedComponent { kind, ..c });
            }
        }
    }
}
