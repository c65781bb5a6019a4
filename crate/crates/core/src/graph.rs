//! Finite graphs, basic invariants and sufficient subdivision.
//!
//! Vertices are `0..vertex_count`. Edges are unordered pairs stored as
//! `(min, max)`; parallel edges are allowed in the type so that marked
//! components can carry virtual edges, but most entry points require a
//! simple graph.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("graph not connected")]
    NotConnected,
    #[error("simple graph required")]
    NotSimple,
    #[error("invalid graph json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    name: Option<String>,
}

/// Serialized form: `{"vertices": 4, "edges": [[0,1], ...], "name": "..."}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange(u, v, vertex_count));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Graph { vertex_count, edges: normalized, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order, each as `(min, max)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbor lists in edge order; a parallel edge contributes a repeated neighbor.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Neighbor lists sorted ascending, without duplicates.
    pub fn sorted_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = self.adjacency();
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.contains(&key)
    }

    pub fn is_simple(&self) -> bool {
        let set: BTreeSet<_> = self.edges.iter().collect();
        set.len() == self.edges.len()
    }

    /// Component id per vertex (ids are assigned in order of smallest vertex).
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        components_avoiding(&self.adjacency(), &[])
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().0
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.component_count() == 1
    }

    pub fn require_simple(&self) -> Result<(), GraphError> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(GraphError::NotSimple)
        }
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::NotConnected)
        }
    }

    /// The subgraph induced on `vertices`, relabeled by position in the slice.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    pub fn from_json_str(text: &str) -> Result<Self, GraphError> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Graph::from_file(&file)
    }

    /// Builds a graph from its file form and enforces the input contract:
    /// simple and connected.
    pub fn from_file(file: &GraphFile) -> Result<Self, GraphError> {
        let mut g = Graph::new(file.vertices, file.edges.iter().map(|e| (e[0], e[1])))?;
        g.name = file.name.clone();
        g.require_simple()?;
        g.require_connected()?;
        Ok(g)
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertices: self.vertex_count,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            name: self.name.clone(),
        }
    }
}

/// Connected components of the graph with `removed` vertices deleted.
/// Removed vertices get label `usize::MAX`.
pub(crate) fn components_avoiding(adj: &[Vec<usize>], removed: &[usize]) -> (usize, Vec<usize>) {
    let n = adj.len();
    let mut label = vec![usize::MAX; n];
    let mut blocked = vec![false; n];
    for &r in removed {
        blocked[r] = true;
    }
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if blocked[s] || label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !blocked[w] && label[w] == usize::MAX {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

/// First Betti number `E - V + 1` of a connected graph.
pub fn betti1(g: &Graph) -> Result<usize, GraphError> {
    g.require_connected()?;
    if g.vertex_count == 0 {
        return Ok(0);
    }
    Ok(g.edge_count() + 1 - g.vertex_count)
}

/// Vertices whose degree is not two.
pub fn essential_vertices(g: &Graph) -> BTreeSet<usize> {
    g.degrees().into_iter().enumerate().filter(|&(_, d)| d != 2).map(|(v, _)| v).collect()
}

/// Edge indices incident to each vertex, in edge order.
pub(crate) fn incidence(g: &Graph) -> Vec<Vec<usize>> {
    let mut incident = vec![Vec::new(); g.vertex_count];
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        incident[u].push(k);
        incident[v].push(k);
    }
    incident
}

/// Length of the shortest cycle through each edge, `None` for bridges.
pub fn shortest_cycle_through_edges(g: &Graph) -> Vec<Option<usize>> {
    let incident = incidence(g);
    g.edges
        .iter()
        .enumerate()
        .map(|(skip, &(u, v))| {
            // BFS from u to v without using edge `skip`.
            let mut dist = vec![usize::MAX; g.vertex_count];
            let mut queue = VecDeque::new();
            dist[u] = 0;
            queue.push_back(u);
            while let Some(x) = queue.pop_front() {
                for &k in &incident[x] {
                    if k == skip {
                        continue;
                    }
                    let (a, b) = g.edges[k];
                    let y = if a == x { b } else { a };
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            (dist[v] != usize::MAX).then(|| dist[v] + 1)
        })
        .collect()
}

/// Maximal chains of degree-two vertices, as `(start, end, edge count)`
/// between essential endpoints. A chain closing up on a single essential
/// vertex has `start == end`. Components without essential vertices are
/// skipped.
pub fn essential_chains(g: &Graph) -> Vec<(usize, usize, usize)> {
    let deg = g.degrees();
    let incident = incidence(g);
    let mut used = vec![false; g.edge_count()];
    let mut chains = Vec::new();
    for start in 0..g.vertex_count {
        if deg[start] == 2 {
            continue;
        }
        for &k in &incident[start] {
            if used[k] {
                continue;
            }
            used[k] = true;
            let (a, b) = g.edges[k];
            let mut prev_edge = k;
            let mut cur = if a == start { b } else { a };
            let mut len = 1;
            while deg[cur] == 2 {
                let next_edge = incident[cur].iter().copied().find(|&e| e != prev_edge).unwrap_or(prev_edge);
                used[next_edge] = true;
                let (x, y) = g.edges[next_edge];
                cur = if x == cur { y } else { x };
                prev_edge = next_edge;
                len += 1;
            }
            chains.push((start, cur, len));
        }
    }
    chains
}

/// Whether `g` satisfies both length conditions for `n` particles: chains
/// between distinct essential vertices have at least `n - 1` edges and every
/// cycle has at least `n + 1` edges.
pub fn is_sufficiently_subdivided(g: &Graph, n: usize) -> bool {
    let chains_ok = essential_chains(g).into_iter().filter(|&(a, b, _)| a != b).all(|(_, _, len)| len + 1 >= n);
    if !chains_ok {
        return false;
    }
    shortest_cycle_through_edges(g).into_iter().flatten().all(|len| len > n)
}

/// A subdivided graph together with, for each of its edges, the index of the
/// original edge it lies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Graph,
    pub provenance: Vec<usize>,
}

/// Replaces edge `index` by a path through `extra` new vertices appended at
/// the end of the vertex range. Returns the new graph and provenance.
fn subdivide_edges(g: &Graph, extra: &[usize], provenance: &[usize]) -> Subdivision {
    let mut next = g.vertex_count;
    let mut edges = Vec::new();
    let mut prov = Vec::new();
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        let mut prev = u;
        for _ in 0..extra[k] {
            edges.push((prev, next));
            prov.push(provenance[k]);
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
        prov.push(provenance[k]);
    }
    let mut graph = Graph::new(next, edges).expect("subdivision keeps endpoints valid");
    graph.name = g.name.clone();
    Subdivision { graph, provenance: prov }
}

/// Inserts `n - 2` vertices into every edge, then lengthens any cycle that is
/// still shorter than `n + 1` by subdividing its first short edge further.
pub fn sufficiently_subdivide(g: &Graph, n: usize) -> Subdivision {
    let identity: Vec<usize> = (0..g.edge_count()).collect();
    let per_edge = n.saturating_sub(2);
    let mut sub = subdivide_edges(g, &vec![per_edge; g.edge_count()], &identity);
    loop {
        let short = shortest_cycle_through_edges(&sub.graph)
            .into_iter()
            .enumerate()
            .find_map(|(k, len)| len.filter(|&l| l < n + 1).map(|l| (k, l)));
        let Some((k, len)) = short else { break };
        let mut extra = vec![0; sub.graph.edge_count()];
        extra[k] = n + 1 - len;
        sub = subdivide_edges(&sub.graph, &extra, &sub.provenance);
    }
    sub
}
