//! Random topological potentials and explicit cycles in configuration complexes.

use confspace::configspace::{build_complex, CellComplex, Chain};
use confspace::gauge::{ab_statistics_split, phase, solve_from_fluxes, GaugePotential, Phase};
use confspace::graph::Graph;
use confspace::spanning::spanning_set_for;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A path in the complex: starting configuration and single-particle moves.
pub type Path = (Vec<usize>, Vec<(usize, usize)>);

pub fn random_phase(rng: &mut ChaCha8Rng) -> Phase {
    let den = rng.gen_range(2..=12);
    phase(rng.gen_range(-24..=24), den)
}

/// A topological potential with random phases on independent spanning generators,
/// shifted by a random coboundary so no cell is left at a canonical value.
pub fn random_potential(c: &CellComplex, rng: &mut ChaCha8Rng) -> GaugePotential {
    let (_, cycles) = spanning_set_for(c).expect("spanning set");
    // Generators can be dependent; a target that contradicts earlier ones is dropped.
    let mut targets: Vec<(Chain, Phase)> = Vec::new();
    let mut p = GaugePotential::zero(c.particles());
    for z in &cycles {
        targets.push((z.chain.clone(), random_phase(rng)));
        match solve_from_fluxes(c, &targets) {
            Ok(q) => p = q,
            Err(_) => {
                targets.pop();
            }
        }
    }
    let g: Vec<Phase> = (0..c.cell_counts().0).map(|_| random_phase(rng)).collect();
    for (k, cell) in c.cells1().iter().enumerate() {
        let [s, t] = c.endpoints(k);
        let shift = &g[t] - &g[s] + Phase::from_integer(BigInt::from(rng.gen_range(-2..=2)));
        p.set(cell.clone(), p.get(cell) + shift);
    }
    p
}

/// A random pure-statistics two-particle potential on `g`.
pub fn random_statistics(g: &Graph, rng: &mut ChaCha8Rng) -> GaugePotential {
    let c = build_complex(g, 2).expect("complex builds");
    let p = random_potential(&c, rng);
    ab_statistics_split(&p, g).expect("split").1
}

pub fn labeled(v: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(v, edges.iter().map(|&(a, b)| (a - 1, b - 1))).expect("valid graph")
}

/// `k` particles on `c[0..k]` rotate once around the loop `c` toward lower
/// indices, with `fixed` particles held still. The particle on `c[0]` walks
/// through the gap to `c[k]`, the others each step down by one, and the
/// walker closes onto `c[k - 1]`.
pub fn exchange_on_cycle(c: &[usize], k: usize, fixed: &[usize]) -> Path {
    let m = c.len();
    let mut start: Vec<usize> = c[..k].to_vec();
    start.extend_from_slice(fixed);
    let mut moves = Vec::new();
    let mut at = 0;
    while at != k {
        let next = (at + m - 1) % m;
        moves.push((c[at], c[next]));
        at = next;
    }
    for i in 1..k {
        moves.push((c[i], c[i - 1]));
    }
    moves.push((c[k], c[k - 1]));
    (start, moves)
}

/// Two particles exchanging on the Y with center `center`, arm tips
/// `tail`, `left`, `right`, starting at `{tail, center}`.
pub fn y_exchange(tail: usize, center: usize, left: usize, right: usize, fixed: &[usize]) -> Path {
    let mut start = vec![tail, center];
    start.extend_from_slice(fixed);
    let moves = vec![(center, left), (tail, center), (center, right), (left, center), (center, tail), (right, center)];
    (start, moves)
}

pub fn chain(c: &CellComplex, path: &Path) -> Chain {
    let z = c.path_chain(&path.0, &path.1).expect("path is valid");
    assert!(c.is_cycle(&z), "path {path:?} is not closed");
    z
}
