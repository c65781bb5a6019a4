//! Integer homology of configuration complexes.
//!
//! `H1 = ker d1 / im d2` is computed as a presentation: a spanning forest of
//! the 1-skeleton identifies `ker d1` with the free module on the non-tree
//! 1-cells, and every 2-cell boundary becomes a relation among them. Relations
//! with a unit entry are eliminated sparsely; whatever is left goes through a
//! dense Smith normal form over arbitrary-precision integers.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::configspace::{CellComplex, Chain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("chain is not a cycle")]
    NotACycle,
}

/// Sparse integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntegerMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, value: impl Into<BigInt>) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        let value = value.into();
        if value.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), value);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            d[r][c] = v.clone();
        }
        d
    }

    pub fn from_dense(d: &[Vec<BigInt>], cols: usize) -> Self {
        let mut m = IntegerMatrix::zeros(d.len(), cols);
        for (i, row) in d.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for (&(r, c), v) in &self.entries {
            t.entries.insert((c, r), v.clone());
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut by_row: HashMap<usize, Vec<(usize, &BigInt)>> = HashMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    *acc.entry((i, j)).or_default() += a * b;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        IntegerMatrix { rows: self.rows, cols: other.cols, entries: acc }
    }
}

/// Finitely generated abelian group `Z^rank + Z_{t1} + ... + Z_{tk}` with
/// `t1 | t2 | ... | tk` and every `ti >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    pub rank: usize,
    #[serde(serialize_with = "serialize_big")]
    pub torsion: Vec<BigUint>,
}

impl AbelianGroup {
    pub fn new(rank: usize, torsion: &[u64]) -> Self {
        let torsion: Vec<BigUint> = torsion.iter().map(|&t| BigUint::from(t)).collect();
        let g = AbelianGroup { rank, torsion };
        debug_assert!(g.is_canonical());
        g
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn trivial() -> Self {
        AbelianGroup::free(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Divisibility chain holds and no factor is below two.
    pub fn is_canonical(&self) -> bool {
        self.torsion.iter().all(|t| *t >= BigUint::from(2u32))
            && self.torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Invariant factors `d1 | d2 | ...` (all positive) and, on request, unimodular
/// `left` and `right` with `left * m * right` equal to the diagonal form.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub left: Option<IntegerMatrix>,
    pub right: Option<IntegerMatrix>,
}

pub fn smith_normal_form(m: &IntegerMatrix, with_transforms: bool) -> SmithForm {
    let mut a = m.to_dense();
    let mut u = with_transforms.then(|| identity_dense(m.rows));
    let mut v = with_transforms.then(|| identity_dense(m.cols));
    let rank = snf_dense(&mut a, m.cols, u.as_mut(), v.as_mut());
    SmithForm {
        factors: (0..rank).map(|i| a[i][i].clone()).collect(),
        left: u.map(|u| IntegerMatrix::from_dense(&u, m.rows)),
        right: v.map(|v| IntegerMatrix::from_dense(&v, m.cols)),
    }
}

fn identity_dense(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

/// `row[dst] -= q * row[src]`
fn row_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let (d, s) = if dst < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// `col[dst] -= q * col[src]`
fn col_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let delta = q * &row[src];
            row[dst] -= delta;
        }
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// In-place Smith normal form with minimal-absolute-value pivoting. Row
/// operations are mirrored into `u`, column operations into `v`. Returns the
/// rank; the leading diagonal holds the invariant factors.
fn snf_dense(
    a: &mut [Vec<BigInt>],
    cols: usize,
    mut u: Option<&mut Vec<Vec<BigInt>>>,
    mut v: Option<&mut Vec<Vec<BigInt>>>,
) -> usize {
    let rows = a.len();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(a, t, t..rows, t..cols) else { break };
        a.swap(t, pi);
        if let Some(u) = u.as_deref_mut() {
            u.swap(t, pi);
        }
        swap_cols(a, t, pj);
        if let Some(v) = v.as_deref_mut() {
            swap_cols(v, t, pj);
        }
        loop {
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_axpy(a, i, t, &q);
                    if let Some(u) = u.as_deref_mut() {
                        row_axpy(u, i, t, &q);
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    col_axpy(a, j, t, &q);
                    if let Some(v) = v.as_deref_mut() {
                        col_axpy(v, j, t, &q);
                    }
                }
            }
            // Remainders left in the pivot row or column become the new pivot.
            let col_rest = min_abs_entry(a, t, t + 1..rows, t..t + 1);
            let row_rest = min_abs_entry(a, t, t..t + 1, t + 1..cols);
            let next = match (col_rest, row_rest) {
                (Some(x), Some(y)) => Some(if a[x.0][x.1].abs() <= a[y.0][y.1].abs() { x } else { y }),
                (x, y) => x.or(y),
            };
            if let Some((i, j)) = next {
                a.swap(t, i);
                if let Some(u) = u.as_deref_mut() {
                    u.swap(t, i);
                }
                swap_cols(a, t, j);
                if let Some(v) = v.as_deref_mut() {
                    swap_cols(v, t, j);
                }
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(a, t, i, &minus_one);
                    if let Some(u) = u.as_deref_mut() {
                        row_axpy(u, t, i, &minus_one);
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            if let Some(u) = u.as_deref_mut() {
                for x in u[t].iter_mut() {
                    *x = -&*x;
                }
            }
        }
        t += 1;
    }
    t
}

fn min_abs_entry(
    a: &[Vec<BigInt>],
    _t: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = &a[i][j];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|b| ax < b.2) {
                let unit = ax.is_one();
                best = Some((i, j, ax));
                if unit {
                    return best.map(|b| (b.0, b.1));
                }
            }
        }
    }
    best.map(|b| (b.0, b.1))
}

/// A generator eliminated by a unit relation: `e_row = -pivot * sum(column)`.
#[derive(Debug, Clone)]
struct Substitution {
    row: usize,
    pivot: i64,
    column: Vec<(usize, i64)>,
}

/// Reduced presentation `Z^gens / <relations>`.
#[derive(Debug, Clone)]
struct Reduction {
    eliminated: usize,
    free_rows: Vec<usize>,
    block_rows: Vec<usize>,
    block_factors: Vec<BigInt>,
    block_left: Option<Vec<Vec<BigInt>>>,
    substitutions: Option<Vec<Substitution>>,
}

impl Reduction {
    fn relation_rank(&self) -> usize {
        self.eliminated + self.block_factors.len()
    }

    fn group(&self) -> AbelianGroup {
        let rank = self.free_rows.len() + self.block_rows.len() - self.block_factors.len();
        let torsion = self
            .block_factors
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| d.to_biguint().expect("invariant factors are positive"))
            .collect();
        AbelianGroup { rank, torsion }
    }
}

/// `a - f * b` over sorted sparse vectors; `None` on overflow.
fn sparse_axpy(a: &[(usize, i64)], b: &[(usize, i64)], f: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, b[j].1.checked_mul(f)?.checked_neg()?));
            j += 1;
        } else {
            let v = a[i].1.checked_sub(b[j].1.checked_mul(f)?)?;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn reduce(gens: usize, relations: Vec<Vec<(usize, i64)>>, track: bool) -> Reduction {
    let mut cols: Vec<Option<Vec<(usize, i64)>>> = relations
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c.retain(|e| e.1 != 0);
            Some(c)
        })
        .collect();
    let mut row_cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); gens];
    for (j, c) in cols.iter().enumerate() {
        for &(r, _) in c.as_ref().unwrap() {
            row_cols[r].insert(j);
        }
    }
    let mut row_alive = vec![true; gens];
    let mut size: Vec<usize> = cols.iter().map(|c| c.as_ref().unwrap().len()).collect();
    let mut queue: BTreeSet<(usize, usize)> = size.iter().copied().zip(0..).collect();
    let mut stuck: BTreeSet<usize> = BTreeSet::new();
    let mut substitutions = track.then(Vec::new);
    let mut eliminated = 0;

    'outer: while let Some((nnz, c)) = queue.pop_first() {
        if nnz == 0 {
            cols[c] = None;
            continue;
        }
        let col = cols[c].as_ref().unwrap();
        let pivot = col.iter().filter(|e| e.1.abs() == 1).min_by_key(|e| (row_cols[e.0].len(), e.0)).copied();
        let Some((r, p)) = pivot else {
            stuck.insert(c);
            continue;
        };
        let pivot_col = cols[c].take().unwrap();
        let others: Vec<usize> = row_cols[r].iter().copied().filter(|&j| j != c).collect();
        for j in others {
            let old = cols[j].as_ref().unwrap();
            let b = old.binary_search_by_key(&r, |e| e.0).map(|k| old[k].1).unwrap();
            let Some(updated) = b.checked_mul(p).and_then(|f| sparse_axpy(old, &pivot_col, f)) else {
                // Out of i64 range: hand the current state to the dense stage.
                cols[c] = Some(pivot_col);
                stuck.insert(c);
                stuck.extend(queue.iter().map(|&(_, k)| k));
                queue.clear();
                break 'outer;
            };
            for &(row, _) in old {
                row_cols[row].remove(&j);
            }
            for &(row, _) in &updated {
                row_cols[row].insert(j);
            }
            if !stuck.remove(&j) {
                queue.remove(&(size[j], j));
            }
            size[j] = updated.len();
            queue.insert((size[j], j));
            cols[j] = Some(updated);
        }
        for &(row, _) in &pivot_col {
            row_cols[row].remove(&c);
        }
        row_alive[r] = false;
        eliminated += 1;
        if let Some(subs) = substitutions.as_mut() {
            let column = pivot_col.into_iter().filter(|e| e.0 != r).collect();
            subs.push(Substitution { row: r, pivot: p, column });
        }
    }

    let live_cols: Vec<usize> = (0..cols.len()).filter(|&j| cols[j].as_ref().is_some_and(|c| !c.is_empty())).collect();
    let block_rows: Vec<usize> = (0..gens).filter(|&r| row_alive[r] && !row_cols[r].is_empty()).collect();
    let free_rows: Vec<usize> = (0..gens).filter(|&r| row_alive[r] && row_cols[r].is_empty()).collect();
    let position: HashMap<usize, usize> = block_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; block_rows.len()];
    for (jj, &j) in live_cols.iter().enumerate() {
        for &(r, v) in cols[j].as_ref().unwrap() {
            dense[position[&r]][jj] = BigInt::from(v);
        }
    }
    let mut left = track.then(|| identity_dense(block_rows.len()));
    let rank = snf_dense(&mut dense, live_cols.len(), left.as_mut(), None);
    let block_factors = (0..rank).map(|i| dense[i][i].clone()).collect();
    Reduction { eliminated, free_rows, block_rows, block_factors, block_left: left, substitutions }
}

/// Spanning forest of the 1-skeleton: which 1-cells are tree edges, and the
/// generator index of every non-tree 1-cell.
struct Forest {
    components: usize,
    generator_of: Vec<Option<usize>>,
    generators: usize,
}

fn spanning_forest(c: &CellComplex) -> Forest {
    let (c0, c1, _) = c.cell_counts();
    let mut parent: Vec<usize> = (0..c0).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut generator_of = vec![None; c1];
    let mut generators = 0;
    let mut tree_edges = 0;
    for (k, slot) in generator_of.iter_mut().enumerate() {
        let [a, b] = c.endpoints(k);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            *slot = Some(generators);
            generators += 1;
        } else {
            parent[ra] = rb;
            tree_edges += 1;
        }
    }
    Forest { components: c0 - tree_edges, generator_of, generators }
}

fn relations(c: &CellComplex, forest: &Forest) -> Vec<Vec<(usize, i64)>> {
    (0..c.cell_counts().2)
        .map(|k| {
            c.cell2_boundary_terms(k)
                .iter()
                .filter_map(|&(cell, v)| forest.generator_of[cell].map(|g| (g, v)))
                .collect()
        })
        .collect()
}

/// `H0` of the complex: free on the components of its 1-skeleton.
pub fn h0(c: &CellComplex) -> AbelianGroup {
    AbelianGroup::free(spanning_forest(c).components)
}

/// Ranks of the boundary maps, `(rank d1, rank d2)`.
pub fn boundary_ranks(c: &CellComplex) -> (usize, usize) {
    let forest = spanning_forest(c);
    let reduction = reduce(forest.generators, relations(c, &forest), false);
    (c.cell_counts().0 - forest.components, reduction.relation_rank())
}

/// First homology group over the integers.
pub fn h1(c: &CellComplex) -> AbelianGroup {
    let forest = spanning_forest(c);
    let reduction = reduce(forest.generators, relations(c, &forest), false);
    let group = reduction.group();
    let (c0, c1, _) = c.cell_counts();
    debug_assert_eq!(group.rank, c1 - (c0 - forest.components) - reduction.relation_rank());
    group
}

/// Coordinates of a homology class: integer free part and residues modulo
/// each torsion order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HomologyCoordinates {
    #[serde(serialize_with = "serialize_big")]
    pub free: Vec<BigInt>,
    #[serde(serialize_with = "serialize_big")]
    pub torsion: Vec<BigInt>,
}

impl HomologyCoordinates {
    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }
}

/// A fixed basis of `H1` with the transforms needed to express any cycle in it.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    c1: usize,
    generator_of: Vec<Option<usize>>,
    reduction: Reduction,
    torsion_orders: Vec<BigInt>,
}

impl HomologyBasis {
    pub fn new(c: &CellComplex) -> Self {
        let forest = spanning_forest(c);
        let reduction = reduce(forest.generators, relations(c, &forest), true);
        let torsion_orders = reduction.block_factors.iter().filter(|d| !d.is_one()).cloned().collect();
        HomologyBasis { c1: c.cell_counts().1, generator_of: forest.generator_of, reduction, torsion_orders }
    }

    pub fn group(&self) -> AbelianGroup {
        self.reduction.group()
    }

    pub fn torsion_orders(&self) -> &[BigInt] {
        &self.torsion_orders
    }

    /// Linear coordinates of any 1-chain: free part, then torsion part left
    /// unreduced. On cycles this agrees with `coordinates` up to reduction.
    pub fn raw_coordinates(&self, z: &Chain) -> Vec<BigInt> {
        let mut x: HashMap<usize, BigInt> = HashMap::new();
        for (k, v) in z.terms() {
            if let Some(g) = self.generator_of.get(k).copied().flatten() {
                *x.entry(g).or_default() += v;
            }
        }
        for s in self.reduction.substitutions.as_ref().expect("basis tracks substitutions") {
            let Some(xr) = x.remove(&s.row) else { continue };
            if xr.is_zero() {
                continue;
            }
            let scale = &xr * s.pivot;
            for &(r, a) in &s.column {
                *x.entry(r).or_default() -= &scale * a;
            }
        }
        let get = |r: usize| x.get(&r).cloned().unwrap_or_default();
        let mut free: Vec<BigInt> = self.reduction.free_rows.iter().map(|&r| get(r)).collect();
        let block: Vec<BigInt> = self.reduction.block_rows.iter().map(|&r| get(r)).collect();
        let left = self.reduction.block_left.as_ref().expect("basis tracks transforms");
        let y: Vec<BigInt> = left.iter().map(|row| row.iter().zip(&block).map(|(a, b)| a * b).sum()).collect();
        let rank = self.reduction.block_factors.len();
        let mut torsion = Vec::new();
        for (i, yi) in y.into_iter().enumerate() {
            if i >= rank {
                free.push(yi);
            } else if !self.reduction.block_factors[i].is_one() {
                torsion.push(yi);
            }
        }
        free.extend(torsion);
        free
    }

    pub fn coordinates(&self, c: &CellComplex, z: &Chain) -> Result<HomologyCoordinates, HomologyError> {
        if z.terms().any(|(k, _)| k >= self.c1) || !c.is_cycle(z) {
            return Err(HomologyError::NotACycle);
        }
        let raw = self.raw_coordinates(z);
        let rank = raw.len() - self.torsion_orders.len();
        let free = raw[..rank].to_vec();
        let torsion = raw[rank..].iter().zip(&self.torsion_orders).map(|(x, d)| x.mod_floor(d)).collect();
        Ok(HomologyCoordinates { free, torsion })
    }
}

/// Coordinates of the class of `z` in the basis produced by `HomologyBasis::new(c)`.
pub fn homology_coordinates(c: &CellComplex, z: &Chain) -> Result<HomologyCoordinates, HomologyError> {
    HomologyBasis::new(c).coordinates(c, z)
}

/// Big integers as JSON numbers when they fit in an `i64`, strings otherwise.
fn serialize_big<T, S>(values: &[T], s: S) -> Result<S::Ok, S::Error>
where
    T: Clone + Into<BigInt>,
    S: serde::Serializer,
{
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        let v: BigInt = v.clone().into();
        match v.to_i64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&v.to_string())?,
        }
    }
    seq.end()
}

pub(crate) fn bigint_to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}
