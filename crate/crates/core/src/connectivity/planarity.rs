//! Planarity by incremental path embedding (Demoucron, Malgrange and
//! Pertuiset) on each biconnected block.

use std::collections::{BTreeSet, HashSet};

use crate::graph::Graph;

/// True iff the graph embeds in the plane. Parallel edges are ignored.
pub fn is_planar(g: &Graph) -> bool {
    let edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    blocks(g.vertex_count(), &edges).iter().all(|b| block_is_planar(b))
}

/// Biconnected blocks as edge lists (bridges are single-edge blocks).
fn blocks(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for i in 0..s.adj[u].len() {
            let w = s.adj[u][i];
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                dfs(s, w, Some(u));
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if Some(w) != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let mut s = State { adj: &adj, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

/// Path embedding on a 2-connected simple graph given by its edges.
fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    let mut ids: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let n = ids.len();
    let m = edges.len();
    if m < 9 || n < 5 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let local = |x: usize| ids.binary_search(&x).unwrap();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        let (a, b) = (local(u), local(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
    }

    let cycle = find_cycle(&adj);
    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        h_edges.insert((v.min(w), v.max(w)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    loop {
        let fragments = fragments(&adj, &in_h, &h_edges);
        if fragments.is_empty() {
            return true;
        }
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> =
                (0..faces.len()).filter(|&k| frag.attachments.iter().all(|a| faces[k].contains(a))).collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_index) = chosen.unwrap();
        let path = fragment_path(&adj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_index);
        let (a, b) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let inner = &path[1..path.len() - 1];
        let walk = |from: usize, to: usize| {
            let mut out = vec![face[from]];
            let mut k = from;
            while k != to {
                k = (k + 1) % face.len();
                out.push(face[k]);
            }
            out
        };
        let mut first = walk(i, j);
        first.extend(inner.iter().rev());
        let mut second = walk(j, i);
        second.extend(inner.iter());
        faces.push(first);
        faces.push(second);
    }
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    // DFS from 0 until a back edge closes a cycle.
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        if *next >= adj[u].len() {
            stack.pop();
            continue;
        }
        let w = adj[u][*next];
        *next += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            stack.push((w, 0));
        } else if w != parent[u] && depth[w] < depth[u] {
            let mut cycle = vec![u];
            let mut x = u;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            return cycle;
        }
    }
    unreachable!("2-connected block has a cycle")
}

struct Fragment {
    attachments: BTreeSet<usize>,
    /// Interior vertices; empty for a chord.
    interior: Vec<usize>,
    chord: Option<(usize, usize)>,
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        for &v in &adj[u] {
            if u < v && in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment { attachments: [u, v].into(), interior: Vec::new(), chord: Some((u, v)) });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut interior = vec![s];
        let mut attachments = BTreeSet::new();
        seen[s] = true;
        let mut k = 0;
        while k < interior.len() {
            let u = interior[k];
            k += 1;
            for &w in &adj[u] {
                if in_h[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                }
            }
        }
        out.push(Fragment { attachments, interior, chord: None });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let start = *frag.attachments.iter().next().unwrap();
    let inside: HashSet<usize> = frag.interior.iter().copied().collect();
    // BFS from `start` through interior vertices to a different attachment.
    let mut prev = std::collections::HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &w in &adj[start] {
        if inside.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, start);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if in_h[w] && w != start {
                let mut path = vec![w, u];
                let mut x = u;
                while let Some(&p) = prev.get(&x) {
                    path.push(p);
                    if p == start {
                        break;
                    }
                    x = p;
                }
                path.reverse();
                return path;
            }
            if inside.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a 2-connected graph has two attachments")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&families::complete(5)));
        assert!(!is_planar(&families::complete_bipartite(3, 3)));
        assert!(is_planar(&families::complete(4)));
    }

    #[test]
    fn planar_families() {
        assert!(is_planar(&families::octahedron()));
        assert!(is_planar(&families::prism()));
        for k in 3..9 {
            assert!(is_planar(&families::wheel(k)));
        }
        assert!(is_planar(&families::theta(5, 1)));
    }

    #[test]
    fn petersen_is_nonplanar() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner).collect::<Vec<_>>()).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn subdivided_k5_is_nonplanar() {
        let g = crate::graph::sufficiently_subdivide(&families::complete(5), 3).graph;
        assert!(!is_planar(&g));
    }

    #[test]
    fn blocks_of_two_joined_triangles() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(blocks(5, g.edges()).len(), 2);
    }
}
