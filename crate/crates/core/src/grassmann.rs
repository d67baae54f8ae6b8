//! Exhaustive enumeration of Grassmannian layers and of the full subspace
//! lattice for small `(q, n)`.
//!
//! A k-subspace is produced directly in canonical form: choose the pivot
//! columns, then fill every free cell (to the right of its row's pivot and
//! outside the pivot columns) with an arbitrary field element. Pivot sets are
//! visited in lexicographic order and fillings as a base-q counter with the
//! last cell least significant, so the stream is sorted by the canonical
//! [`Subspace`] order and contains no duplicates.

use std::collections::HashMap;
use std::io::Write;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::gfq::Field;
use crate::qcount::{gauss_binom, BigCount};
use crate::subspace::Subspace;

/// Size limits for enumeration and materialized tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of subspaces to enumerate.
    pub max_items: u64,
    /// Maximum bytes for a pairwise distance table.
    pub max_table_bytes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_items: 10_000_000, max_table_bytes: 2 << 30 }
    }
}

impl Budget {
    pub fn items(max_items: u64) -> Self {
        Budget { max_items, ..Budget::default() }
    }

    pub(crate) fn check(&self, what: impl FnOnce() -> String, required: &BigCount) -> Result<()> {
        if required.to_u64().is_some_and(|r| r <= self.max_items) {
            Ok(())
        } else {
            Err(Error::BudgetExceeded { what: what(), required: required.to_string(), budget: self.max_items })
        }
    }
}

/// Number of subspaces of F_q^n.
pub fn lattice_size(q: u64, n: usize) -> BigCount {
    BigCount((0..=n as i64).map(|k| gauss_binom(n as i64, k, q).0).sum())
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn free_cells(n: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| (p + 1..n).filter(|&c| !is_pivot[c]).map(move |c| (r, c)).collect::<Vec<_>>())
        .collect()
}

/// Streaming enumeration of one Grassmannian layer in canonical order.
pub struct LayerIter {
    field: Field,
    n: usize,
    pivots: Vec<usize>,
    cells: Vec<(usize, usize)>,
    digits: Vec<u8>,
    /// Only one pivot pattern is visited when set.
    single_pattern: bool,
    done: bool,
}

impl LayerIter {
    fn new(field: Field, n: usize, pivots: Vec<usize>, single_pattern: bool) -> Self {
        let cells = free_cells(n, &pivots);
        let digits = vec![0; cells.len()];
        LayerIter { field, n, pivots, cells, digits, single_pattern, done: false }
    }

    fn current(&self) -> Subspace {
        let n = self.n;
        let k = self.pivots.len();
        if self.field.is_binary() && n <= 64 {
            let mut rows: Vec<u64> = self.pivots.iter().map(|&p| 1u64 << (n - 1 - p)).collect();
            for (&(r, c), &d) in self.cells.iter().zip(&self.digits) {
                if d != 0 {
                    rows[r] |= 1u64 << (n - 1 - c);
                }
            }
            Subspace::from_canonical_bits(self.field, n, rows)
        } else {
            let mut m = vec![0u8; k * n];
            for (r, &p) in self.pivots.iter().enumerate() {
                m[r * n + p] = 1;
            }
            for (&(r, c), &d) in self.cells.iter().zip(&self.digits) {
                m[r * n + c] = d;
            }
            Subspace::from_canonical_dense(self.field, n, k, m)
        }
    }

    fn advance(&mut self) {
        let q = self.field.q();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < q {
                return;
            }
            *d = 0;
        }
        if self.single_pattern || !next_combination(&mut self.pivots, self.n) {
            self.done = true;
            return;
        }
        self.cells = free_cells(self.n, &self.pivots);
        self.digits = vec![0; self.cells.len()];
    }
}

impl Iterator for LayerIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let s = self.current();
        self.advance();
        Some(s)
    }
}

/// All k-subspaces of F_q^n, each exactly once, in canonical order.
pub fn enumerate_layer(field: Field, n: usize, k: usize, budget: &Budget) -> Result<LayerIter> {
    if k > n {
        return Err(Error::ParameterOutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    let size = gauss_binom(n as i64, k as i64, field.q() as u64);
    budget.check(|| format!("layer V({k}) of GF({})^{n}", field.q()), &size)?;
    Ok(LayerIter::new(field, n, (0..k).collect(), false))
}

/// Materializes a layer using up to `threads` workers, one pivot pattern per
/// task; the output order is identical to [`enumerate_layer`].
pub fn enumerate_layer_par(field: Field, n: usize, k: usize, threads: usize, budget: &Budget) -> Result<Vec<Subspace>> {
    let serial = enumerate_layer(field, n, k, budget)?;
    if threads <= 1 || k == 0 {
        return Ok(serial.collect());
    }
    let mut patterns = Vec::new();
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        patterns.push(c.clone());
        if !next_combination(&mut c, n) {
            break;
        }
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut chunks: Vec<(usize, Vec<Subspace>)> = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|_| {
                scope.spawn(|| {
                    let mut out = Vec::new();
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        let Some(p) = patterns.get(i) else { break };
                        out.push((i, LayerIter::new(field, n, p.clone(), true).collect()));
                    }
                    out
                })
            })
            .collect();
        workers.into_iter().flat_map(|w| w.join().expect("enumeration worker panicked")).collect()
    });
    chunks.sort_by_key(|(i, _)| *i);
    Ok(chunks.into_iter().flat_map(|(_, v)| v).collect())
}

/// The whole lattice of subspaces, ordered canonically, with layer offsets.
#[derive(Debug, Clone)]
pub struct LatticeIndex {
    field: Field,
    n: usize,
    subspaces: Vec<Subspace>,
    offsets: Vec<usize>,
    positions: HashMap<Subspace, usize>,
    distances: Option<Vec<u8>>,
}

impl LatticeIndex {
    pub fn build(field: Field, n: usize, budget: &Budget) -> Result<LatticeIndex> {
        let total = lattice_size(field.q() as u64, n);
        budget.check(|| format!("lattice of GF({})^{n}", field.q()), &total)?;
        let mut subspaces = Vec::with_capacity(total.to_u64().unwrap_or(0) as usize);
        let mut offsets = vec![0];
        for k in 0..=n {
            subspaces.extend(enumerate_layer(field, n, k, budget)?);
            offsets.push(subspaces.len());
        }
        let positions = subspaces.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Ok(LatticeIndex { field, n, subspaces, offsets, positions, distances: None })
    }

    /// Adds the full pairwise distance table if it fits in the memory budget.
    pub fn with_distance_table(mut self, budget: &Budget) -> Result<LatticeIndex> {
        let m = self.subspaces.len();
        let bytes = (m as u64) * (m as u64);
        if bytes > budget.max_table_bytes {
            return Err(Error::BudgetExceeded {
                what: "pairwise distance table".into(),
                required: bytes.to_string(),
                budget: budget.max_table_bytes,
            });
        }
        let mut table = vec![0u8; m * m];
        for i in 0..m {
            for j in i + 1..m {
                let d = self.subspaces[i].distance(&self.subspaces[j]) as u8;
                table[i * m + j] = d;
                table[j * m + i] = d;
            }
        }
        self.distances = Some(table);
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn get(&self, i: usize) -> &Subspace {
        &self.subspaces[i]
    }

    pub fn layer_range(&self, k: usize) -> Range<usize> {
        self.offsets[k]..self.offsets[k + 1]
    }

    pub fn layer(&self, k: usize) -> &[Subspace] {
        &self.subspaces[self.layer_range(k)]
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.positions.get(s).copied()
    }

    pub fn distance(&self, i: usize, j: usize) -> usize {
        match &self.distances {
            Some(t) => t[i * self.subspaces.len() + j] as usize,
            None => self.subspaces[i].distance(&self.subspaces[j]),
        }
    }

    pub fn has_distance_table(&self) -> bool {
        self.distances.is_some()
    }
}

/// Writes one subspace per line in the `q:n:d:rows` format.
pub fn dump<'a, W: Write + ?Sized>(out: &mut W, subspaces: impl IntoIterator<Item = &'a Subspace>) -> Result<()> {
    for s in subspaces {
        writeln!(out, "{s}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn layer_examples() {
        let f2 = Field::new(2).unwrap();
        let b = Budget::default();
        assert_eq!(enumerate_layer(f2, 3, 1, &b).unwrap().count(), 7);
        let zero: Vec<_> = enumerate_layer(f2, 5, 0, &b).unwrap().collect();
        assert_eq!(zero, vec![Subspace::zero(f2, 5)]);
        let planes: Vec<_> = enumerate_layer(f2, 4, 2, &b).unwrap().collect();
        assert_eq!(planes.len(), 35);
        assert_eq!(planes.iter().collect::<HashSet<_>>().len(), 35);
        assert!(enumerate_layer(f2, 3, 4, &b).is_err());
    }

    #[test]
    fn layers_are_sorted_complete_and_canonical() {
        let b = Budget::default();
        for q in [2u64, 3, 4] {
            let f = Field::new(q).unwrap();
            let nmax = if q == 2 { 6 } else if q == 3 { 5 } else { 4 };
            for n in 0..=nmax {
                for k in 0..=n {
                    let layer: Vec<_> = enumerate_layer(f, n, k, &b).unwrap().collect();
                    assert_eq!(BigCount::from(layer.len()), gauss_binom(n as i64, k as i64, q));
                    assert!(layer.windows(2).all(|w| w[0] < w[1]), "order q={q} n={n} k={k}");
                    for s in &layer {
                        assert_eq!(s.dim(), k);
                        let again = Subspace::from_generators(f, n, &s.rows()).unwrap();
                        assert_eq!(&again, s);
                    }
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced_with_exact_count() {
        let f = Field::new(2).unwrap();
        let err = enumerate_layer(f, 6, 3, &Budget::items(100)).err().unwrap();
        assert_eq!(
            err,
            Error::BudgetExceeded { what: "layer V(3) of GF(2)^6".into(), required: "1395".into(), budget: 100 }
        );
        assert!(LatticeIndex::build(f, 9, &Budget::items(400)).is_err());
    }

    #[test]
    fn index_sizes() {
        let b = Budget::default();
        let f2 = Field::new(2).unwrap();
        assert_eq!(LatticeIndex::build(f2, 3, &b).unwrap().len(), 16);
        assert_eq!(LatticeIndex::build(f2, 5, &b).unwrap().len(), 374);
        let f3 = Field::new(3).unwrap();
        let idx = LatticeIndex::build(f3, 4, &b).unwrap();
        assert_eq!(idx.len(), 212);
        assert_eq!(idx.layer(2).len(), 130);
        for (i, s) in idx.subspaces().iter().enumerate() {
            assert_eq!(idx.index_of(s), Some(i));
        }
        assert_eq!(lattice_size(3, 4), 212u64);
    }

    #[test]
    fn distance_table_matches_direct() {
        let f = Field::new(2).unwrap();
        let b = Budget::default();
        let idx = LatticeIndex::build(f, 4, &b).unwrap().with_distance_table(&b).unwrap();
        assert!(idx.has_distance_table());
        for i in 0..idx.len() {
            for j in 0..idx.len() {
                assert_eq!(idx.distance(i, j), idx.get(i).delta(idx.get(j)).unwrap());
            }
        }
        let tiny = Budget { max_table_bytes: 10, ..b };
        assert!(LatticeIndex::build(f, 4, &b).unwrap().with_distance_table(&tiny).is_err());
    }

    #[test]
    fn parallel_enumeration_preserves_order() {
        let f = Field::new(3).unwrap();
        let b = Budget::default();
        for k in 0..=5 {
            let serial: Vec<_> = enumerate_layer(f, 5, k, &b).unwrap().collect();
            assert_eq!(enumerate_layer_par(f, 5, k, 3, &b).unwrap(), serial);
        }
    }

    #[test]
    fn perp_maps_layers_bijectively() {
        let b = Budget::default();
        for (q, n) in [(2u64, 5usize), (3, 4)] {
            let idx = LatticeIndex::build(Field::new(q).unwrap(), n, &b).unwrap();
            for k in 0..=n {
                let image: HashSet<_> = idx.layer(k).iter().map(|s| s.perp()).collect();
                let target: HashSet<_> = idx.layer(n - k).iter().cloned().collect();
                assert_eq!(image, target);
            }
        }
    }

    #[test]
    fn dump_writes_one_line_per_subspace() {
        let f = Field::new(2).unwrap();
        let layer: Vec<_> = enumerate_layer(f, 3, 1, &Budget::default()).unwrap().collect();
        let mut out = Vec::new();
        dump(&mut out, &layer).unwrap();
        let text = String::from_utf8(out).unwrap();
        let parsed: Vec<Subspace> = text.lines().map(|l| l.parse().unwrap()).collect();
        assert_eq!(parsed, layer);
    }
}
