//! Connectivity analysis and the closed-form prediction of `H1`.
//!
//! The prediction splits the graph at cut vertices, then splits every
//! 2-connected block at two-vertex cuts until each marked component is a
//! topological cycle or 3-connected, and adds up the phases lost at every
//! cut together with one anyon phase per planar 3-connected component and a
//! `Z_2` per nonplanar one.

mod decompose;
pub mod formulas;
mod planarity;

use serde::Serialize;
use thiserror::Error;

pub use decompose::{ComponentKind, MarkedComponent};
pub use formulas::{
    alpha_star, alpha_star_recursive, beta_star, beta_star_from_alpha, beta_star_inclusion_exclusion, binomial,
    gamma_star, n1_of_cut, n1_two_particle, n2_of_cut,
};
pub use planarity::is_planar;

use crate::graph::{betti1, components_avoiding, Graph, GraphError};
use crate::homology::AbelianGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("at least one particle required")]
    NoParticles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CutRecord {
    /// `mu` components remain after deleting `vertex`, which has degree `nu`.
    Vertex { vertex: usize, mu: usize, nu: usize },
    /// Splitting at `{x, y}` produced `mu` pieces.
    Pair { x: usize, y: usize, mu: usize },
}

/// Which cut is split first when several are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitOrder {
    #[default]
    Ascending,
    Reverse,
}

/// Articulation vertices, found by deleting each vertex in turn.
pub fn cut_vertices(g: &Graph) -> Vec<CutRecord> {
    let adj = g.adjacency();
    (0..g.vertex_count())
        .filter_map(|v| {
            let (mu, _) = components_avoiding(&adj, &[v]);
            (mu >= 2).then_some(CutRecord::Vertex { vertex: v, mu, nu: adj[v].len() })
        })
        .collect()
}

fn is_two_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && g.is_connected() && cut_vertices(g).is_empty()
}

/// Vertex pairs whose deletion disconnects a 2-connected graph.
pub fn two_separations(g: &Graph) -> Result<Vec<CutRecord>, ConnectivityError> {
    if !is_two_connected(g) {
        return Err(ConnectivityError::NotTwoConnected);
    }
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let (mu, _) = components_avoiding(&adj, &[x, y]);
            if mu >= 2 {
                out.push(CutRecord::Pair { x, y, mu });
            }
        }
    }
    Ok(out)
}

/// Vertex connectivity capped at 3. A graph on `k <= 3` vertices is at most
/// `(k-1)`-connected, so the triangle reports 2.
pub fn connectivity_level(g: &Graph) -> usize {
    if !cut_vertices(g).is_empty() || g.vertex_count() <= 2 {
        return 1;
    }
    if g.vertex_count() == 3 || !two_separations(g).map(|s| s.is_empty()).unwrap_or(false) {
        return 2;
    }
    3
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub components: Vec<MarkedComponent>,
    /// Cut vertices in the order used, then two-vertex cuts in the order used.
    pub cuts: Vec<CutRecord>,
}

impl Decomposition {
    pub fn vertex_cuts(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.cuts.iter().filter_map(|c| match *c {
            CutRecord::Vertex { vertex, mu, nu } => Some((vertex, mu, nu)),
            CutRecord::Pair { .. } => None,
        })
    }

    pub fn pair_cuts(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.cuts.iter().filter_map(|c| match *c {
            CutRecord::Pair { x, y, mu } => Some((x, y, mu)),
            CutRecord::Vertex { .. } => None,
        })
    }

    pub fn count(&self, kind: ComponentKind) -> usize {
        self.components.iter().filter(|c| c.kind == kind).count()
    }
}

pub fn decompose(g: &Graph) -> Result<Decomposition, ConnectivityError> {
    decompose_with_order(g, SplitOrder::Ascending)
}

pub fn decompose_with_order(g: &Graph, order: SplitOrder) -> Result<Decomposition, ConnectivityError> {
    g.require_simple()?;
    let beta = betti1(g)?;
    let (components, cuts) = decompose::split(g, order);
    let d = Decomposition { components, cuts };
    let total: usize = d.components.iter().map(MarkedComponent::betti1).sum();
    assert_eq!(total, beta + d.pair_cuts().count(), "cycle bookkeeping of the decomposition");
    Ok(d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub n_particles: usize,
    pub beta1: usize,
    pub n1: i64,
    pub n2: i64,
    pub n3: usize,
    pub n3_prime: usize,
    pub n3_double_prime: usize,
    pub group: AbelianGroup,
}

/// Closed-form `H1` of the `n`-particle configuration space of a
/// sufficiently subdivided copy of `g`.
pub fn predict_h1(g: &Graph, n: usize) -> Result<Prediction, ConnectivityError> {
    if n == 0 {
        return Err(ConnectivityError::NoParticles);
    }
    let d = decompose(g)?;
    let beta1 = betti1(g)?;
    let n3 = d.count(ComponentKind::Planar3Connected);
    let n3_prime = d.count(ComponentKind::Nonplanar3Connected);
    let n3_double_prime = d.count(ComponentKind::TopologicalCycle);
    if n == 1 {
        return Ok(Prediction {
            n_particles: 1,
            beta1,
            n1: 0,
            n2: 0,
            n3,
            n3_prime,
            n3_double_prime,
            group: AbelianGroup::free(beta1),
        });
    }
    let n1: i64 = d.vertex_cuts().map(|(_, mu, nu)| n1_of_cut(mu as i64, nu as i64, n as i64)).sum();
    let n2: i64 = d.pair_cuts().map(|(_, _, mu)| n2_of_cut(mu as i64)).sum();
    let rank = beta1 as i64 + n1 + n2 + n3 as i64;
    let group = AbelianGroup::new(usize::try_from(rank).expect("predicted rank is nonnegative"), &vec![2; n3_prime]);
    Ok(Prediction { n_particles: n, beta1, n1, n2, n3, n3_prime, n3_double_prime, group })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn cut_vertex_examples() {
        assert!(cut_vertices(&families::cycle(5)).is_empty());
        assert_eq!(cut_vertices(&families::lasso()), vec![CutRecord::Vertex { vertex: 1, mu: 2, nu: 3 }]);
        assert_eq!(cut_vertices(&families::star(4)), vec![CutRecord::Vertex { vertex: 0, mu: 4, nu: 4 }]);
    }

    #[test]
    fn two_separation_examples() {
        assert_eq!(two_separations(&families::theta(3, 1)).unwrap(), vec![CutRecord::Pair { x: 0, y: 1, mu: 3 }]);
        assert!(two_separations(&families::complete(4)).unwrap().is_empty());
        let c6 = two_separations(&families::cycle(6)).unwrap();
        assert_eq!(c6.len(), 9);
        assert!(c6.iter().all(|c| matches!(c, CutRecord::Pair { x, y, mu: 2 } if (y - x) % 6 != 1 && (y - x) != 5)));
        assert_eq!(two_separations(&families::lasso()), Err(ConnectivityError::NotTwoConnected));
    }

    #[test]
    fn levels() {
        assert_eq!(connectivity_level(&families::lasso()), 1);
        assert_eq!(connectivity_level(&families::cycle(5)), 2);
        assert_eq!(connectivity_level(&families::complete(5)), 3);
        assert_eq!(connectivity_level(&families::cycle(3)), 2);
    }

    #[test]
    fn theta_decomposes_into_three_cycles() {
        let d = decompose(&families::theta(3, 1)).unwrap();
        assert_eq!(d.cuts, vec![CutRecord::Pair { x: 0, y: 1, mu: 3 }]);
        assert_eq!(d.count(ComponentKind::TopologicalCycle), 3);
        assert_eq!(d.components.len(), 3);
    }

    #[test]
    fn k4_is_one_planar_component() {
        let d = decompose(&families::complete(4)).unwrap();
        assert!(d.cuts.is_empty());
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].kind, ComponentKind::Planar3Connected);
    }

    #[test]
    fn lasso_keeps_only_the_cycle() {
        let d = decompose(&families::lasso()).unwrap();
        assert_eq!(d.cuts, vec![CutRecord::Vertex { vertex: 1, mu: 2, nu: 3 }]);
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].kind, ComponentKind::TopologicalCycle);
        assert_eq!(d.components[0].vertices, vec![1, 2, 3]);
    }

    #[test]
    fn predictions() {
        assert_eq!(predict_h1(&families::complete(5), 2).unwrap().group.to_string(), "Z^6 + Z_2");
        for n in 2..6 {
            assert_eq!(predict_h1(&families::cycle(3), n).unwrap().group.to_string(), "Z");
        }
        for (e, n) in [(3, 2), (4, 3), (5, 4)] {
            let p = predict_h1(&families::star(e), n).unwrap();
            assert_eq!(p.group, AbelianGroup::free(beta_star(n as i64, e as i64) as usize));
        }
        assert_eq!(predict_h1(&families::cycle(6), 2).unwrap().group.to_string(), "Z");
        assert_eq!(predict_h1(&families::lasso(), 1).unwrap().group, AbelianGroup::free(1));
        assert_eq!(predict_h1(&families::lasso(), 2).unwrap().group, AbelianGroup::free(2));
    }

    #[test]
    fn two_cut_example_breakdown() {
        let p = predict_h1(&families::two_cut_example(), 2).unwrap();
        assert_eq!((p.beta1, p.n1, p.n2, p.n3, p.n3_double_prime), (4, 0, 3, 0, 7));
        assert_eq!(p.group, AbelianGroup::free(7));
    }
}
