//! The discrete configuration space `D^n(G)` as a cell complex truncated at
//! dimension two.
//!
//! A 0-cell is a set of `n` occupied vertices. A 1-cell is a set of `n - 1`
//! spectators plus one edge whose endpoints avoid them; it is oriented from
//! the smaller endpoint to the larger. A 2-cell is `n - 2` spectators plus
//! two vertex-disjoint edges. Cells are indexed lexicographically.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphFile};
use crate::homology::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("too many particles")]
    TooManyParticles,
    #[error("at least one particle required")]
    NoParticles,
    #[error("simple graph required")]
    NotSimple,
    #[error("no 1-cell moves {from} -> {to} with spectators {spectators:?}")]
    UnknownMove { spectators: Vec<usize>, from: usize, to: usize },
    #[error("configuration {0:?} is not a 0-cell")]
    UnknownConfiguration(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cell1 {
    pub spectators: Vec<usize>,
    pub edge: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cell2 {
    pub spectators: Vec<usize>,
    pub edges: [(usize, usize); 2],
}

/// An integer 1-chain, keyed by 1-cell index. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Chain(BTreeMap<usize, i64>);

impl Chain {
    pub fn new() -> Self {
        Chain(BTreeMap::new())
    }

    pub fn unit(index: usize, coefficient: i64) -> Self {
        let mut c = Chain::new();
        c.add_term(index, coefficient);
        c
    }

    pub fn add_term(&mut self, index: usize, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let entry = self.0.entry(index).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.0.remove(&index);
        }
    }

    pub fn add_scaled(&mut self, other: &Chain, factor: i64) {
        for (&k, &v) in &other.0 {
            self.add_term(k, v * factor);
        }
    }

    pub fn plus(&self, other: &Chain) -> Chain {
        let mut c = self.clone();
        c.add_scaled(other, 1);
        c
    }

    pub fn minus(&self, other: &Chain) -> Chain {
        let mut c = self.clone();
        c.add_scaled(other, -1);
        c
    }

    pub fn negated(&self) -> Chain {
        Chain(self.0.iter().map(|(&k, &v)| (k, -v)).collect())
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn coefficient(&self, index: usize) -> i64 {
        self.0.get(&index).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Serialized as a list of `[index, coefficient]` pairs.
impl Serialize for Chain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl FromIterator<(usize, i64)> for Chain {
    fn from_iter<T: IntoIterator<Item = (usize, i64)>>(iter: T) -> Self {
        let mut c = Chain::new();
        for (k, v) in iter {
            c.add_term(k, v);
        }
        c
    }
}

#[derive(Debug, Clone)]
pub struct CellComplex {
    graph: Graph,
    n: usize,
    cells0: Vec<Vec<usize>>,
    cells1: Vec<Cell1>,
    cells2: Vec<Cell2>,
    index0: HashMap<Vec<usize>, usize>,
    index1: HashMap<Cell1, usize>,
    /// `(tail, head)` 0-cells of each 1-cell; its boundary is `head - tail`.
    bd1: Vec<[usize; 2]>,
    bd2: Vec<[(usize, i64); 4]>,
}

fn insert_sorted(set: &[usize], extra: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = set.iter().chain(extra).copied().collect();
    v.sort_unstable();
    v
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// Builds `D^n(g)` up to dimension two.
pub fn build_complex(g: &Graph, n: usize) -> Result<CellComplex, ComplexError> {
    if n == 0 {
        return Err(ComplexError::NoParticles);
    }
    if n > g.vertex_count() {
        return Err(ComplexError::TooManyParticles);
    }
    if !g.is_simple() {
        return Err(ComplexError::NotSimple);
    }
    let v = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.sort_unstable();

    let cells0: Vec<Vec<usize>> = (0..v).combinations(n).collect();
    let index0: HashMap<Vec<usize>, usize> = cells0.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();

    let mut cells1 = Vec::new();
    for spectators in (0..v).combinations(n - 1) {
        for &(a, b) in &edges {
            if disjoint(&[a, b], &spectators) {
                cells1.push(Cell1 { spectators: spectators.clone(), edge: (a, b) });
            }
        }
    }
    let index1: HashMap<Cell1, usize> = cells1.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let bd1 = cells1
        .iter()
        .map(|c| {
            let tail = index0[&insert_sorted(&c.spectators, &[c.edge.0])];
            let head = index0[&insert_sorted(&c.spectators, &[c.edge.1])];
            [tail, head]
        })
        .collect();

    let mut cells2 = Vec::new();
    if n >= 2 {
        let pairs: Vec<[(usize, usize); 2]> = edges
            .iter()
            .enumerate()
            .flat_map(|(i, &e1)| edges[i + 1..].iter().map(move |&e2| [e1, e2]))
            .filter(|[e1, e2]| disjoint(&[e1.0, e1.1], &[e2.0, e2.1]))
            .collect();
        for spectators in (0..v).combinations(n - 2) {
            for pair in &pairs {
                let [(a, b), (c, d)] = *pair;
                if disjoint(&[a, b, c, d], &spectators) {
                    cells2.push(Cell2 { spectators: spectators.clone(), edges: *pair });
                }
            }
        }
    }
    let bd2 = cells2
        .iter()
        .map(|cell| {
            let [(a, b), (c, d)] = cell.edges;
            let s = &cell.spectators;
            let at =
                |extra: usize, edge: (usize, usize)| index1[&Cell1 { spectators: insert_sorted(s, &[extra]), edge }];
            // (a,c) -> (a,d) -> (b,d) -> (b,c) -> (a,c)
            [(at(a, (c, d)), 1), (at(d, (a, b)), 1), (at(b, (c, d)), -1), (at(c, (a, b)), -1)]
        })
        .collect();

    Ok(CellComplex { graph: g.clone(), n, cells0, cells1, cells2, index0, index1, bd1, bd2 })
}

impl CellComplex {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn particles(&self) -> usize {
        self.n
    }

    pub fn cell_counts(&self) -> (usize, usize, usize) {
        (self.cells0.len(), self.cells1.len(), self.cells2.len())
    }

    pub fn cells0(&self) -> &[Vec<usize>] {
        &self.cells0
    }

    pub fn cells1(&self) -> &[Cell1] {
        &self.cells1
    }

    pub fn cells2(&self) -> &[Cell2] {
        &self.cells2
    }

    pub fn index_of_cell0(&self, config: &[usize]) -> Option<usize> {
        let mut key = config.to_vec();
        key.sort_unstable();
        self.index0.get(&key).copied()
    }

    pub fn index_of_cell1(&self, cell: &Cell1) -> Option<usize> {
        self.index1.get(cell).copied()
    }

    /// `(tail, head)` 0-cell indices of 1-cell `k`.
    pub fn endpoints(&self, k: usize) -> [usize; 2] {
        self.bd1[k]
    }

    /// Signed 1-cells on the boundary of 2-cell `k`.
    pub fn cell2_boundary_terms(&self, k: usize) -> [(usize, i64); 4] {
        self.bd2[k]
    }

    pub fn cell2_boundary(&self, k: usize) -> Chain {
        self.bd2[k].iter().copied().collect()
    }

    /// The 1-cell index and sign for one particle moving `from -> to` while
    /// the `spectators` stay put.
    pub fn directed_cell(&self, spectators: &[usize], from: usize, to: usize) -> Result<(usize, i64), ComplexError> {
        let mut spec = spectators.to_vec();
        spec.sort_unstable();
        let cell = Cell1 { spectators: spec, edge: (from.min(to), from.max(to)) };
        match self.index1.get(&cell) {
            Some(&k) => Ok((k, if from < to { 1 } else { -1 })),
            None => Err(ComplexError::UnknownMove { spectators: spectators.to_vec(), from, to }),
        }
    }

    /// Chain of the path that starts at `start` and applies the single-particle
    /// moves in order. Each move needs `from` occupied and `to` free.
    pub fn path_chain(&self, start: &[usize], moves: &[(usize, usize)]) -> Result<Chain, ComplexError> {
        let mut config = start.to_vec();
        config.sort_unstable();
        if !self.index0.contains_key(&config) {
            return Err(ComplexError::UnknownConfiguration(config));
        }
        let mut chain = Chain::new();
        for &(from, to) in moves {
            let pos = config.iter().position(|&x| x == from);
            let Some(pos) = pos.filter(|_| !config.contains(&to)) else {
                let spectators = config.iter().copied().filter(|&x| x != from).collect();
                return Err(ComplexError::UnknownMove { spectators, from, to });
            };
            config.remove(pos);
            let (k, sign) = self.directed_cell(&config, from, to)?;
            chain.add_term(k, sign);
            config.push(to);
            config.sort_unstable();
        }
        Ok(chain)
    }

    /// `d1` applied to a chain, as a sparse 0-chain.
    pub fn boundary_of(&self, chain: &Chain) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (k, c) in chain.terms() {
            let [tail, head] = self.bd1[k];
            *out.entry(head).or_insert(0) += c;
            *out.entry(tail).or_insert(0) -= c;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    pub fn is_cycle(&self, chain: &Chain) -> bool {
        chain.terms().all(|(k, _)| k < self.cells1.len()) && self.boundary_of(chain).is_empty()
    }

    pub fn boundary1(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.cells0.len(), self.cells1.len());
        for (k, &[tail, head]) in self.bd1.iter().enumerate() {
            m.set(head, k, 1);
            m.set(tail, k, -1);
        }
        m
    }

    pub fn boundary2(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.cells1.len(), self.cells2.len());
        for (k, terms) in self.bd2.iter().enumerate() {
            for &(row, v) in terms {
                m.set(row, k, v);
            }
        }
        m
    }

    pub fn dump(&self) -> ComplexDump {
        let triplets = |m: IntegerMatrix| {
            m.entries()
                .map(|(r, c, v)| (r, c, crate::homology::bigint_to_i64(v).expect("boundary entries are small")))
                .collect()
        };
        ComplexDump {
            particles: self.n,
            graph: self.graph.to_file(),
            cells0: self.cells0.clone(),
            cells1: self.cells1.clone(),
            cells2: self.cells2.clone(),
            boundary1: triplets(self.boundary1()),
            boundary2: triplets(self.boundary2()),
        }
    }
}

/// JSON-friendly snapshot of a complex with triplet boundary matrices.
#[derive(Debug, Clone, Serialize)]
pub struct ComplexDump {
    pub particles: usize,
    pub graph: GraphFile,
    pub cells0: Vec<Vec<usize>>,
    pub cells1: Vec<Cell1>,
    pub cells2: Vec<Cell2>,
    pub boundary1: Vec<(usize, usize, i64)>,
    pub boundary2: Vec<(usize, usize, i64)>,
}
