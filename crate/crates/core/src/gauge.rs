//! Gauge potentials on configuration complexes.
//!
//! Phases are exact rationals measured in full turns and are kept as
//! real-valued representatives; reduction mod 1 only happens when fluxes are
//! compared. A potential is topological when every 2-cell boundary carries an
//! integer flux.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::configspace::{build_complex, Cell1, CellComplex, Chain, ComplexError};
use crate::graph::Graph;
use crate::homology::{smith_normal_form, HomologyBasis, IntegerMatrix};

pub type Phase = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaugeError {
    #[error("potential is not topological")]
    NotTopological,
    #[error("potential is not pure statistics")]
    NotPureStatistics,
    #[error("no spectators")]
    NoSpectators,
    #[error("lift inconsistency")]
    LiftInconsistency,
    #[error("unrealizable phase")]
    UnrealizablePhase,
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("unknown cell {0}")]
    UnknownCell(usize),
    #[error("potential has {found} particles, expected {expected}")]
    ParticleMismatch { expected: usize, found: usize },
    #[error("({0}, {1}) is not an edge")]
    UnknownEdge(usize, usize),
    #[error("invalid phase value {0:?}")]
    InvalidValue(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

pub fn phase(num: i64, den: i64) -> Phase {
    BigRational::new(num.into(), den.into())
}

pub fn is_integer(x: &Phase) -> bool {
    x.is_integer()
}

/// Equality of phases as fluxes, i.e. modulo whole turns.
pub fn equal_mod_one(a: &Phase, b: &Phase) -> bool {
    (a - b).is_integer()
}

/// Representative in `[0, 1)`.
pub fn reduce_mod_one(x: &Phase) -> Phase {
    x - x.floor()
}

/// Antisymmetric phase assignment on the directed 1-cells of `D^n`. Each
/// canonical cell (moving from its smaller to its larger endpoint) stores one
/// value; unlisted cells are zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GaugePotential {
    n: usize,
    values: BTreeMap<Cell1, Phase>,
}

/// One entry of the potential file format; `value` is a rational string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialEntry {
    pub spectators: Vec<usize>,
    pub from: usize,
    pub to: usize,
    pub value: String,
}

impl GaugePotential {
    pub fn zero(n: usize) -> Self {
        GaugePotential { n, values: BTreeMap::new() }
    }

    pub fn particles(&self) -> usize {
        self.n
    }

    pub fn get(&self, cell: &Cell1) -> Phase {
        self.values.get(cell).cloned().unwrap_or_else(Phase::zero)
    }

    pub fn set(&mut self, cell: Cell1, value: Phase) {
        if value.is_zero() {
            self.values.remove(&cell);
        } else {
            self.values.insert(cell, value);
        }
    }

    /// Value on the move `from -> to` with the given spectators.
    pub fn directed(&self, spectators: &[usize], from: usize, to: usize) -> Phase {
        let (cell, sign) = directed_key(spectators, from, to);
        if sign > 0 {
            self.get(&cell)
        } else {
            -self.get(&cell)
        }
    }

    pub fn set_directed(&mut self, spectators: &[usize], from: usize, to: usize, value: Phase) {
        let (cell, sign) = directed_key(spectators, from, to);
        self.set(cell, if sign > 0 { value } else { -value });
    }

    /// Nonzero canonical values.
    pub fn values(&self) -> impl Iterator<Item = (&Cell1, &Phase)> {
        self.values.iter()
    }

    pub fn plus(&self, other: &GaugePotential) -> GaugePotential {
        let mut out = self.clone();
        for (cell, v) in &other.values {
            let sum = out.get(cell) + v;
            out.set(cell.clone(), sum);
        }
        out
    }

    pub fn minus(&self, other: &GaugePotential) -> GaugePotential {
        let mut negated = other.clone();
        for v in negated.values.values_mut() {
            *v = -v.clone();
        }
        self.plus(&negated)
    }

    pub fn to_entries(&self) -> Vec<PotentialEntry> {
        self.values
            .iter()
            .map(|(cell, v)| PotentialEntry {
                spectators: cell.spectators.clone(),
                from: cell.edge.0,
                to: cell.edge.1,
                value: v.to_string(),
            })
            .collect()
    }

    /// Reads entries for `n` particles. Repeated cells accumulate.
    pub fn from_entries(n: usize, entries: &[PotentialEntry]) -> Result<Self, GaugeError> {
        let mut p = GaugePotential::zero(n);
        for e in entries {
            if e.spectators.len() + 1 != n {
                return Err(GaugeError::ParticleMismatch { expected: n, found: e.spectators.len() + 1 });
            }
            let value: Phase = e.value.trim().parse().map_err(|_| GaugeError::InvalidValue(e.value.clone()))?;
            let total = p.directed(&e.spectators, e.from, e.to) + value;
            p.set_directed(&e.spectators, e.from, e.to, total);
        }
        Ok(p)
    }
}

fn directed_key(spectators: &[usize], from: usize, to: usize) -> (Cell1, i64) {
    let mut spectators = spectators.to_vec();
    spectators.sort_unstable();
    (Cell1 { spectators, edge: (from.min(to), from.max(to)) }, if from < to { 1 } else { -1 })
}

fn check_particles(p: &GaugePotential, c: &CellComplex) -> Result<(), GaugeError> {
    if p.n != c.particles() {
        return Err(GaugeError::ParticleMismatch { expected: c.particles(), found: p.n });
    }
    Ok(())
}

/// Sum of the potential along an integer 1-chain.
pub fn flux(p: &GaugePotential, c: &CellComplex, z: &Chain) -> Result<Phase, GaugeError> {
    check_particles(p, c)?;
    let cells = c.cells1();
    let mut total = Phase::zero();
    for (k, coefficient) in z.terms() {
        let cell = cells.get(k).ok_or(GaugeError::UnknownCell(k))?;
        total += p.get(cell) * BigInt::from(coefficient);
    }
    Ok(total)
}

/// Flux through the boundary of every 2-cell, in 2-cell order.
pub fn cell2_fluxes(p: &GaugePotential, c: &CellComplex) -> Result<Vec<Phase>, GaugeError> {
    (0..c.cell_counts().2).map(|k| flux(p, c, &c.cell2_boundary(k))).collect()
}

pub fn is_topological(p: &GaugePotential, c: &CellComplex) -> bool {
    cell2_fluxes(p, c).is_ok_and(|f| f.iter().all(is_integer))
}

/// Spectator average of a two-particle potential on each edge, as a
/// one-particle potential keyed by `(min, max)` with the `min -> max` value.
pub fn edge_average(p: &GaugePotential, g: &Graph) -> Result<BTreeMap<(usize, usize), Phase>, GaugeError> {
    if p.n != 2 {
        return Err(GaugeError::ParticleMismatch { expected: 2, found: p.n });
    }
    let v = g.vertex_count();
    if v < 3 {
        return Err(GaugeError::NoSpectators);
    }
    let count = BigInt::from(v - 2);
    Ok(g.edges()
        .iter()
        .map(|&(j, k)| {
            let sum: Phase = (0..v).filter(|&i| i != j && i != k).map(|i| p.directed(&[i], j, k)).sum();
            ((j, k), sum / count.clone())
        })
        .collect())
}

/// Splits a two-particle potential into its spectator-independent part and
/// the remainder, whose spectator average vanishes on every edge.
pub fn ab_statistics_split(p: &GaugePotential, g: &Graph) -> Result<(GaugePotential, GaugePotential), GaugeError> {
    let omega = edge_average(p, g)?;
    let ab = ab_potential(&omega, g, 2);
    let stat = p.minus(&ab);
    Ok((ab, stat))
}

/// The potential on `D^n(g)` that charges `omega(edge)` regardless of where
/// the other particles are.
pub fn ab_potential(omega: &BTreeMap<(usize, usize), Phase>, g: &Graph, n: usize) -> GaugePotential {
    let mut p = GaugePotential::zero(n);
    let v = g.vertex_count();
    for (&(j, k), value) in omega {
        if value.is_zero() {
            continue;
        }
        let others: Vec<usize> = (0..v).filter(|&i| i != j && i != k).collect();
        for spectators in itertools::Itertools::combinations(others.into_iter(), n - 1) {
            p.set(Cell1 { spectators, edge: (j, k) }, value.clone());
        }
    }
    p
}

pub fn is_pure_statistics(p: &GaugePotential, g: &Graph) -> Result<bool, GaugeError> {
    Ok(edge_average(p, g)?.values().all(Zero::is_zero))
}

/// Result of subdividing one edge: the new graph, the id of the inserted
/// vertex and the transported potential.
#[derive(Debug, Clone)]
pub struct Lift {
    pub graph: Graph,
    pub new_vertex: usize,
    pub potential: GaugePotential,
}

/// The graph with edge `{p, q}` replaced by the path `p - a - q`, where the
/// new vertex `a` takes the next free id.
pub fn subdivide_edge(g: &Graph, p: usize, q: usize) -> Result<(Graph, usize), GaugeError> {
    let key = (p.min(q), p.max(q));
    if p == q || !g.edges().contains(&key) {
        return Err(GaugeError::UnknownEdge(p, q));
    }
    let a = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&e| e != key).collect();
    edges.push((p, a));
    edges.push((a, q));
    let graph = Graph::new(a + 1, edges).expect("subdivision of a valid graph");
    Ok((graph, a))
}

/// Chain on the subdivided complex obtained by routing every traversal of
/// `{p, q}` through the new vertex.
pub fn map_chain_to_subdivision(
    z: &Chain,
    old: &CellComplex,
    new: &CellComplex,
    p: usize,
    q: usize,
    a: usize,
) -> Result<Chain, GaugeError> {
    let key = (p.min(q), p.max(q));
    let mut out = Chain::new();
    for (k, coefficient) in z.terms() {
        let cell = old.cells1().get(k).ok_or(GaugeError::UnknownCell(k))?;
        if cell.edge == key {
            let (x, y) = key;
            let (k1, s1) = new.directed_cell(&cell.spectators, x, a)?;
            let (k2, s2) = new.directed_cell(&cell.spectators, a, y)?;
            out.add_term(k1, coefficient * s1);
            out.add_term(k2, coefficient * s2);
        } else {
            let k_new = new.index_of_cell1(cell).ok_or(GaugeError::UnknownCell(k))?;
            out.add_term(k_new, coefficient);
        }
    }
    Ok(out)
}

/// Transports a topological two-particle potential across the subdivision
/// of edge `{p, q}`.
///
/// The old potential is first shifted by an integer cochain so that every
/// 2-cell flux is exactly zero, when such a cochain exists; this keeps the
/// halving below from producing half-integer fluxes. A spectator at `p` or
/// `q` sees half of the spectator-averaged phase of `p -> q` on each half
/// edge, and the moves of the new vertex along edges at `p` or `q` absorb
/// that choice, so a pure AB potential lifts to a pure AB potential.
pub fn lift_subdivision(pbar: &GaugePotential, cbar: &CellComplex, p: usize, q: usize) -> Result<Lift, GaugeError> {
    check_particles(pbar, cbar)?;
    if pbar.n != 2 {
        return Err(GaugeError::ParticleMismatch { expected: 2, found: pbar.n });
    }
    if !is_topological(pbar, cbar) {
        return Err(GaugeError::NotTopological);
    }
    let (graph, a) = subdivide_edge(cbar.graph(), p, q)?;
    let flat = flatten(pbar, cbar, (p, q))?;
    let c = build_complex(&graph, 2)?;
    let half = phase(1, 2);
    let ob = |i: usize, from: usize, to: usize| flat.directed(&[i], from, to);
    let v = cbar.graph().vertex_count();
    if v < 3 {
        return Err(GaugeError::NoSpectators);
    }
    let spectators = (0..v).filter(|&i| i != p && i != q);
    let ab_pq: Phase = spectators.map(|i| ob(i, p, q)).sum::<Phase>() / BigInt::from(v - 2);

    let mut lifted = GaugePotential::zero(2);
    for cell in c.cells1() {
        let i = cell.spectators[0];
        let (x, y) = cell.edge;
        let value = if y == a {
            // The mover crosses a half of the subdivided edge: x -> a.
            let along = if i == p || i == q { &half * &ab_pq } else { &half * ob(i, p, q) };
            if x == p {
                along
            } else {
                -along
            }
        } else if i == a {
            let touches = |v: usize| x == v || y == v;
            let toward = |end: usize, other_end: usize| {
                // {a, end -> j} = old{other_end, end -> j} + (old{j, other_end -> end} - ab(other_end -> end)) / 2
                let j = if x == end { y } else { x };
                let ab = if end == q { ab_pq.clone() } else { -ab_pq.clone() };
                let forward = ob(other_end, end, j) + &half * (ob(j, other_end, end) - ab);
                if x == end {
                    forward
                } else {
                    -forward
                }
            };
            if touches(q) {
                toward(q, p)
            } else if touches(p) {
                toward(p, q)
            } else {
                &half * (ob(p, x, y) + ob(q, x, y))
            }
        } else {
            ob(i, x, y)
        };
        lifted.set(cell.clone(), value);
    }
    if !is_topological(&lifted, &c) {
        return Err(GaugeError::LiftInconsistency);
    }
    Ok(Lift { graph, new_vertex: a, potential: lifted })
}

/// Shifts a topological potential by an integer cochain so that every
/// 2-cell flux becomes exactly zero. When the integer fluxes are not an
/// integral coboundary (a nonzero phase on a torsion class), settles for
/// even fluxes on the 2-cells that use the edge `{p, q}`, which is all the
/// halving needs. Returns the input unchanged if neither shift exists.
fn flatten(p: &GaugePotential, c: &CellComplex, edge: (usize, usize)) -> Result<GaugePotential, GaugeError> {
    let fluxes = cell2_fluxes(p, c)?;
    if fluxes.iter().all(Zero::is_zero) {
        return Ok(p.clone());
    }
    let target: Vec<BigInt> = fluxes.iter().map(|f| f.to_integer()).collect();
    let delta = c.boundary2().transpose();
    let m = solve_integer(&delta, &target).or_else(|| {
        let key = (edge.0.min(edge.1), edge.0.max(edge.1));
        let rows: Vec<usize> = (0..c.cell_counts().2).filter(|&s| c.cells2()[s].edges.contains(&key)).collect();
        let cols = c.cell_counts().1;
        let mut system = IntegerMatrix::zeros(rows.len(), cols + rows.len());
        for (r, &s) in rows.iter().enumerate() {
            for (k, sign) in c.cell2_boundary_terms(s) {
                system.set(r, k, system.get(r, k) + sign);
            }
            system.set(r, cols + r, 2);
        }
        let rhs: Vec<BigInt> = rows.iter().map(|&s| target[s].clone()).collect();
        solve_integer(&system, &rhs).map(|mut x| {
            x.truncate(cols);
            x
        })
    });
    let Some(m) = m else { return Ok(p.clone()) };
    let mut out = p.clone();
    for (k, mk) in m.iter().enumerate() {
        if !mk.is_zero() {
            let cell = &c.cells1()[k];
            out.set(cell.clone(), out.get(cell) - BigRational::from_integer(mk.clone()));
        }
    }
    Ok(out)
}

fn mat_vec<T>(m: &[Vec<BigInt>], x: &[T]) -> Vec<T>
where
    T: Clone + Zero + std::ops::Mul<BigInt, Output = T>,
{
    m.iter()
        .map(|row| {
            row.iter().zip(x).filter(|(a, _)| !a.is_zero()).fold(T::zero(), |acc, (a, b)| acc + b.clone() * a.clone())
        })
        .collect()
}

/// Integer solution of `a x = b`, if one exists.
pub fn solve_integer(a: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = smith_normal_form(a, true);
    let u = s.left.as_ref().unwrap().to_dense();
    let v = s.right.as_ref().unwrap().to_dense();
    let ub = mat_vec(&u, b);
    let mut z = vec![BigInt::zero(); a.cols()];
    for (i, ubi) in ub.iter().enumerate() {
        if i < s.factors.len() {
            let (quotient, remainder) = ubi.div_rem(&s.factors[i]);
            if !remainder.is_zero() {
                return None;
            }
            z[i] = quotient;
        } else if !ubi.is_zero() {
            return None;
        }
    }
    Some(mat_vec(&v, &z))
}

/// Rational solution of `a y = b (mod 1)` in `cols` unknowns, if one exists.
pub fn solve_mod_one(a: &IntegerMatrix, b: &[Phase], cols: usize) -> Option<Vec<Phase>> {
    solve_rational(a, b, cols, true)
}

/// Rational solution of `a y = b`, exactly or modulo integers.
fn solve_rational(a: &IntegerMatrix, b: &[Phase], cols: usize, modulo_one: bool) -> Option<Vec<Phase>> {
    if a.rows() == 0 {
        return Some(vec![Phase::zero(); cols]);
    }
    let s = smith_normal_form(a, true);
    let u = s.left.as_ref().unwrap().to_dense();
    let v = s.right.as_ref().unwrap().to_dense();
    let ub = mat_vec(&u, b);
    let mut z = vec![Phase::zero(); cols];
    for (i, ubi) in ub.iter().enumerate() {
        if i < s.factors.len() {
            z[i] = ubi / BigRational::from_integer(s.factors[i].clone());
        } else if !(ubi.is_integer() && (modulo_one || ubi.is_zero())) {
            return None;
        }
    }
    Some(mat_vec(&v, &z))
}

/// The `n`-particle potential charging `omega1(i -> j)` plus the two-particle
/// statistics phase of every other particle for each move `i -> j`.
pub fn build_n_particle(
    stat2: &GaugePotential,
    omega1: &BTreeMap<(usize, usize), Phase>,
    g: &Graph,
    n: usize,
) -> Result<GaugePotential, GaugeError> {
    if stat2.n != 2 {
        return Err(GaugeError::ParticleMismatch { expected: 2, found: stat2.n });
    }
    if !is_pure_statistics(stat2, g)? {
        return Err(GaugeError::NotPureStatistics);
    }
    if !is_topological(stat2, &build_complex(g, 2)?) {
        return Err(GaugeError::NotTopological);
    }
    let c = build_complex(g, n)?;
    let mut out = GaugePotential::zero(n);
    for cell in c.cells1() {
        let (i, j) = cell.edge;
        let mut value = omega1.get(&cell.edge).cloned().unwrap_or_else(Phase::zero);
        for &v in &cell.spectators {
            value += stat2.directed(&[v], i, j);
        }
        out.set(cell.clone(), value);
    }
    Ok(out)
}

/// A topological potential whose flux through each target cycle equals the
/// target phase mod 1.
///
/// The potential is a combination of the homology coordinate functionals:
/// free classes carry arbitrary rational phases and a torsion class of order
/// `d` carries a multiple of `1/d`. Its 2-cell fluxes are integers but not
/// necessarily zero.
pub fn solve_from_fluxes(c: &CellComplex, targets: &[(Chain, Phase)]) -> Result<GaugePotential, GaugeError> {
    let basis = HomologyBasis::new(c);
    for (z, _) in targets {
        if !c.is_cycle(z) {
            return Err(GaugeError::NotACycle);
        }
    }
    let orders = basis.torsion_orders().to_vec();
    let cell_coordinates: Vec<Vec<BigInt>> =
        (0..c.cell_counts().1).map(|k| basis.raw_coordinates(&Chain::unit(k, 1))).collect();
    let width = cell_coordinates.first().map_or(basis.group().rank + orders.len(), Vec::len);
    let rank = width - orders.len();
    let target_coordinates: Vec<Vec<BigInt>> = targets.iter().map(|(z, _)| basis.raw_coordinates(z)).collect();
    let phases: Vec<Phase> = targets.iter().map(|(_, t)| t.clone()).collect();

    // Free part: U F V = D. Rows past the rank of F constrain the torsion
    // multipliers k through  sum_j (U T)_ij k_j / d_j = (U phi)_i  (mod 1).
    let free = IntegerMatrix::from_rows(&target_coordinates.iter().map(|r| r[..rank].to_vec()).collect::<Vec<_>>());
    let free = if targets.is_empty() { IntegerMatrix::zeros(0, rank) } else { free };
    let s = smith_normal_form(&free, true);
    let u = s.left.as_ref().unwrap().to_dense();
    let v = s.right.as_ref().unwrap().to_dense();
    let u_phi = mat_vec(&u, &phases);
    let torsion_cols: Vec<Vec<BigInt>> = target_coordinates.iter().map(|r| r[rank..].to_vec()).collect();
    let u_torsion: Vec<Vec<BigInt>> = u
        .iter()
        .map(|urow| {
            (0..orders.len()).map(|j| urow.iter().zip(&torsion_cols).map(|(a, row)| a * &row[j]).sum()).collect()
        })
        .collect();
    let rho = s.factors.len();
    let lcm = orders.iter().fold(BigInt::one(), |acc, d| acc.lcm(d));
    let mut k = vec![BigInt::zero(); orders.len()];
    let constrained: Vec<usize> = (rho..targets.len()).collect();
    if !constrained.is_empty() {
        // Scale by the lcm L:  sum_j (U T)_ij (L / d_j) k_j + L w_i = L (U phi)_i.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (r, &i) in constrained.iter().enumerate() {
            let scaled = &u_phi[i] * BigRational::from_integer(lcm.clone());
            if !scaled.is_integer() {
                return Err(GaugeError::UnrealizablePhase);
            }
            let mut row: Vec<BigInt> = (0..orders.len()).map(|j| &u_torsion[i][j] * (&lcm / &orders[j])).collect();
            row.extend((0..constrained.len()).map(|w| if w == r { lcm.clone() } else { BigInt::zero() }));
            rows.push(row);
            rhs.push(scaled.to_integer());
        }
        let system = IntegerMatrix::from_rows(&rows);
        let x = solve_integer(&system, &rhs).ok_or(GaugeError::UnrealizablePhase)?;
        k = x[..orders.len()].to_vec();
    }
    let mut z = vec![Phase::zero(); rank];
    for i in 0..rho {
        let correction: Phase =
            (0..orders.len()).map(|j| BigRational::new(&u_torsion[i][j] * &k[j], orders[j].clone())).sum();
        z[i] = (&u_phi[i] - correction) / BigRational::from_integer(s.factors[i].clone());
    }
    let free_phases = mat_vec(&v, &z);
    let mut chi: Vec<Phase> = free_phases;
    chi.extend(k.iter().zip(&orders).map(|(kj, d)| BigRational::new(kj.mod_floor(d), d.clone())));

    let mut p = GaugePotential::zero(c.particles());
    for (cell, coords) in c.cells1().iter().zip(&cell_coordinates) {
        let value: Phase = coords
            .iter()
            .zip(&chi)
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, x)| x * BigRational::from_integer(a.clone()))
            .sum();
        p.set(cell.clone(), value);
    }
    debug_assert!(is_topological(&p, c));
    Ok(p)
}

/// `true` iff the potential's flux equals each target mod 1.
pub fn fluxes_match(p: &GaugePotential, c: &CellComplex, targets: &[(Chain, Phase)]) -> Result<bool, GaugeError> {
    for (z, t) in targets {
        if !equal_mod_one(&flux(p, c, z)?, t) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest denominator among the values, useful for reporting.
pub fn max_denominator(p: &GaugePotential) -> BigInt {
    p.values.values().map(|v| v.denom().abs()).max().unwrap_or_else(BigInt::one)
}
