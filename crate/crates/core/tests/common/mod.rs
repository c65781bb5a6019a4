//! Shared fixtures for integration tests: exhaustive and random graph corpora.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub mod gauge;

use confspace::graph::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Adjacency bitmask rows of a graph on at most 16 vertices.
fn rows(n: usize, edges: &[(usize, usize)]) -> Vec<u16> {
    let mut r = vec![0u16; n];
    for &(u, v) in edges {
        r[u] |= 1 << v;
        r[v] |= 1 << u;
    }
    r
}

/// Lexicographically smallest relabeled adjacency, permuting only within
/// classes of equal degree (vertices are pre-sorted by degree).
fn canonical(n: usize, edges: &[(usize, usize)]) -> Vec<u16> {
    let r = rows(n, edges);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| r[v].count_ones());
    let degree: Vec<u32> = order.iter().map(|&v| r[v].count_ones()).collect();
    let mut best: Option<Vec<u16>> = None;
    let mut perm = order.clone();
    permute_classes(&r, &degree, &mut perm, 0, &mut best);
    best.unwrap()
}

fn permute_classes(r: &[u16], degree: &[u32], perm: &mut Vec<usize>, k: usize, best: &mut Option<Vec<u16>>) {
    let n = perm.len();
    if k == n {
        let mut pos = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let mut out = vec![0u16; n];
        for (i, &v) in perm.iter().enumerate() {
            let mut row = 0u16;
            for (w, &pw) in pos.iter().enumerate().take(n) {
                if r[v] >> w & 1 == 1 {
                    row |= 1 << pw;
                }
            }
            out[i] = row;
        }
        if best.as_ref().is_none_or(|b| out < *b) {
            *best = Some(out);
        }
        return;
    }
    for j in k..n {
        if degree[j] != degree[k] {
            break;
        }
        perm.swap(k, j);
        permute_classes(r, degree, perm, k + 1, best);
        perm.swap(k, j);
    }
}

/// All connected simple graphs on `1..=max_vertices` vertices, one per
/// isomorphism class, built by attaching a new vertex to connected graphs
/// one size smaller.
pub fn connected_graphs_up_to(max_vertices: usize) -> Vec<Graph> {
    let mut all = Vec::new();
    let mut level: Vec<Vec<(usize, usize)>> = vec![vec![]];
    all.push(Graph::new(1, vec![]).unwrap());
    for n in 2..=max_vertices {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for mask in 1u32..(1 << (n - 1)) {
                let mut e = edges.clone();
                e.extend((0..n - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n - 1)));
                if seen.insert(canonical(n, &e)) {
                    next.push(e);
                }
            }
        }
        all.extend(next.iter().map(|e| Graph::new(n, e.clone()).unwrap()));
        level = next;
    }
    all
}

/// Random connected graphs on `lo..=hi` vertices with varied density.
pub fn random_connected_graphs(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(lo..=hi);
        let p: f64 = rng.gen_range(0.15..0.75);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}
