//! Subspaces of F_q^n in canonical reduced row echelon form.
//!
//! Every [`Subspace`] stores the unique RREF basis of the space it denotes,
//! so structural equality and hashing coincide with equality of subspaces.
//! Over GF(2) with `n <= 64` rows are packed into machine words: column `j`
//! lives at bit `n - 1 - j`, which makes numeric comparison of two rows agree
//! with lexicographic comparison of their entries. Other fields store one
//! byte per entry and use the field tables.
//!
//! The orthogonal complement is taken with respect to the standard dot
//! product `sum u_i v_i`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gfq::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Rows {
    /// GF(2), `n <= 64`: one word per row.
    Bits(Box<[u64]>),
    /// Row-major `dim * n` entries.
    Dense(Box<[u8]>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    n: u16,
    dim: u16,
    rows: Rows,
}

fn uses_bits(field: Field, n: usize) -> bool {
    field.is_binary() && n <= 64
}

#[inline]
fn col_bit(n: usize, col: usize) -> u64 {
    1u64 << (n - 1 - col)
}

#[inline]
fn lead_col(n: usize, row: u64) -> usize {
    n - 1 - (63 - row.leading_zeros() as usize)
}

/// Reduces packed GF(2) rows; result rows are sorted by pivot column.
fn rref_bits(n: usize, mut rows: Vec<u64>) -> Vec<u64> {
    rows.retain(|&r| r != 0);
    let mut rank = 0;
    for col in 0..n {
        let bit = col_bit(n, col);
        let Some(pos) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pos);
        let pivot = rows[rank];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && *row & bit != 0 {
                *row ^= pivot;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// Rank of a set of packed rows (xor basis keyed by leading bit).
#[inline]
fn rank_bits<'a>(rows: impl IntoIterator<Item = &'a u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for &r in rows {
        let mut v = r;
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = v;
                rank += 1;
                break;
            }
            v ^= basis[h];
        }
    }
    rank
}

/// Gauss-Jordan elimination over GF(q) on a row-major matrix.
/// Returns the number of nonzero rows left at the top of `m`.
fn rref_dense_in_place(field: Field, n: usize, m: &mut Vec<u8>) -> usize {
    let nrows = m.len().checked_div(n).unwrap_or(0);
    let mut rank = 0;
    for col in 0..n {
        if rank == nrows {
            break;
        }
        let Some(pos) = (rank..nrows).find(|&i| m[i * n + col] != 0) else {
            continue;
        };
        if pos != rank {
            for c in 0..n {
                m.swap(rank * n + c, pos * n + c);
            }
        }
        let scale = field.inv_nonzero(m[rank * n + col]);
        if scale != 1 {
            for c in col..n {
                m[rank * n + c] = field.mul(m[rank * n + c], scale);
            }
        }
        for i in 0..nrows {
            if i == rank {
                continue;
            }
            let factor = m[i * n + col];
            if factor == 0 {
                continue;
            }
            for c in col..n {
                let sub = field.mul(factor, m[rank * n + c]);
                m[i * n + c] = field.sub(m[i * n + c], sub);
            }
        }
        rank += 1;
    }
    m.truncate(rank * n);
    rank
}

fn check_compatible(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.field != b.field || a.n != b.n {
        return Err(Error::AmbientMismatch {
            q1: a.field.q(),
            n1: a.n as usize,
            q2: b.field.q(),
            n2: b.n as usize,
        });
    }
    Ok(())
}

impl Subspace {
    /// The zero subspace of F_q^n.
    pub fn zero(field: Field, n: usize) -> Subspace {
        let rows = if uses_bits(field, n) {
            Rows::Bits(Box::new([]))
        } else {
            Rows::Dense(Box::new([]))
        };
        Subspace { field, n: n as u16, dim: 0, rows }
    }

    /// The whole space F_q^n.
    pub fn full(field: Field, n: usize) -> Subspace {
        let rows = if uses_bits(field, n) {
            Rows::Bits((0..n).map(|c| col_bit(n, c)).collect())
        } else {
            let mut m = vec![0u8; n * n];
            for i in 0..n {
                m[i * n + i] = 1;
            }
            Rows::Dense(m.into_boxed_slice())
        };
        Subspace { field, n: n as u16, dim: n as u16, rows }
    }

    /// Canonical form of the span of `gens`.
    pub fn from_generators<V: AsRef<[u8]>>(field: Field, n: usize, gens: &[V]) -> Result<Subspace> {
        for g in gens {
            let g = g.as_ref();
            if g.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.len() });
            }
            if let Some(&bad) = g.iter().find(|&&x| !field.contains(x)) {
                return Err(Error::InvalidElement { element: bad, q: field.q() });
            }
        }
        if uses_bits(field, n) {
            let packed = gens.iter().map(|g| pack_bits(g.as_ref())).collect();
            let rows = rref_bits(n, packed);
            Ok(Subspace { field, n: n as u16, dim: rows.len() as u16, rows: Rows::Bits(rows.into()) })
        } else {
            let mut m: Vec<u8> = gens.iter().flat_map(|g| g.as_ref().iter().copied()).collect();
            let rank = rref_dense_in_place(field, n, &mut m);
            Ok(Subspace { field, n: n as u16, dim: rank as u16, rows: Rows::Dense(m.into()) })
        }
    }

    /// Accepts `rows` only if they already form a reduced row echelon basis.
    pub fn from_rref_rows<V: AsRef<[u8]>>(field: Field, n: usize, rows: &[V]) -> Result<Subspace> {
        let s = Subspace::from_generators(field, n, rows)?;
        let same = s.dim() == rows.len()
            && rows.iter().enumerate().all(|(i, r)| s.row(i) == r.as_ref());
        if !same {
            return Err(Error::InvalidConfiguration("rows are not in reduced row echelon form".into()));
        }
        Ok(s)
    }

    /// Builds from packed GF(2) rows already in canonical order.
    pub(crate) fn from_canonical_bits(field: Field, n: usize, rows: Vec<u64>) -> Subspace {
        debug_assert!(uses_bits(field, n));
        debug_assert_eq!(rref_bits(n, rows.clone()), rows);
        Subspace { field, n: n as u16, dim: rows.len() as u16, rows: Rows::Bits(rows.into()) }
    }

    /// Builds from row-major entries already in canonical form.
    pub(crate) fn from_canonical_dense(field: Field, n: usize, dim: usize, entries: Vec<u8>) -> Subspace {
        debug_assert!(!uses_bits(field, n));
        debug_assert_eq!(entries.len(), dim * n);
        Subspace { field, n: n as u16, dim: dim as u16, rows: Rows::Dense(entries.into()) }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n as usize
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim == self.n
    }

    /// Entries of basis row `i`.
    pub fn row(&self, i: usize) -> Vec<u8> {
        let n = self.n as usize;
        match &self.rows {
            Rows::Bits(r) => (0..n).map(|c| ((r[i] & col_bit(n, c)) != 0) as u8).collect(),
            Rows::Dense(m) => m[i * n..(i + 1) * n].to_vec(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.dim()).map(|i| self.row(i)).collect()
    }

    /// Pivot columns, strictly increasing.
    pub fn pivots(&self) -> Vec<usize> {
        let n = self.n as usize;
        match &self.rows {
            Rows::Bits(r) => r.iter().map(|&row| lead_col(n, row)).collect(),
            Rows::Dense(m) => (0..self.dim())
                .map(|i| m[i * n..(i + 1) * n].iter().position(|&x| x != 0).unwrap())
                .collect(),
        }
    }

    /// Dimension of `self + other`; the ambient spaces must agree.
    #[inline]
    pub fn join_dim(&self, other: &Subspace) -> usize {
        debug_assert!(self.field == other.field && self.n == other.n);
        match (&self.rows, &other.rows) {
            (Rows::Bits(a), Rows::Bits(b)) => {
                if a.len() < b.len() {
                    rank_bits(b.iter().chain(a.iter()))
                } else {
                    rank_bits(a.iter().chain(b.iter()))
                }
            }
            (Rows::Dense(a), Rows::Dense(b)) => {
                let mut m = Vec::with_capacity(a.len() + b.len());
                m.extend_from_slice(a);
                m.extend_from_slice(b);
                rref_dense_in_place(self.field, self.n as usize, &mut m)
            }
            _ => unreachable!("representation is determined by (q, n)"),
        }
    }

    /// `dim(self ∩ other)` via the modular law.
    #[inline]
    pub fn meet_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.join_dim(other)
    }

    /// Unchecked subspace distance `dim(U+W) - dim(U∩W)`.
    #[inline]
    pub fn distance(&self, other: &Subspace) -> usize {
        2 * self.join_dim(other) - self.dim() - other.dim()
    }

    /// Unchecked containment test `other <= self`.
    #[inline]
    pub fn contains_unchecked(&self, other: &Subspace) -> bool {
        other.dim <= self.dim && self.join_dim(other) == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_compatible(self, other)?;
        let n = self.n as usize;
        match (&self.rows, &other.rows) {
            (Rows::Bits(a), Rows::Bits(b)) => {
                let rows = rref_bits(n, a.iter().chain(b.iter()).copied().collect());
                Ok(Subspace::from_canonical_bits(self.field, n, rows))
            }
            _ => {
                let mut gens = self.rows();
                gens.extend(other.rows());
                Subspace::from_generators(self.field, n, &gens)
            }
        }
    }

    /// `self ∩ other`, computed as `(self^⊥ + other^⊥)^⊥`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_compatible(self, other)?;
        let meet = self.perp().sum(&other.perp())?.perp();
        debug_assert_eq!(meet.dim(), self.meet_dim(other));
        Ok(meet)
    }

    /// Whether `other <= self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        check_compatible(self, other)?;
        Ok(self.contains_unchecked(other))
    }

    pub fn contains_vector(&self, v: &[u8]) -> Result<bool> {
        let line = Subspace::from_generators(self.field, self.n as usize, &[v])?;
        Ok(self.contains_unchecked(&line))
    }

    /// The subspace distance; both closed forms are evaluated and agree.
    pub fn delta(&self, other: &Subspace) -> Result<usize> {
        check_compatible(self, other)?;
        let join = self.join_dim(other);
        let meet = self.dim() + other.dim() - join;
        let via_join = join - meet;
        let via_dims = self.dim() + other.dim() - 2 * meet;
        assert_eq!(via_join, via_dims);
        Ok(via_join)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn perp(&self) -> Subspace {
        let n = self.n as usize;
        let pivots = self.pivots();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        match &self.rows {
            Rows::Bits(rows) => {
                // kernel basis: e_f + sum_i row_i[f] e_{p_i}
                let gens: Vec<u64> = free
                    .iter()
                    .map(|&f| {
                        let mut v = col_bit(n, f);
                        for (row, &p) in rows.iter().zip(&pivots) {
                            if row & col_bit(n, f) != 0 {
                                v |= col_bit(n, p);
                            }
                        }
                        v
                    })
                    .collect();
                Subspace::from_canonical_bits(self.field, n, rref_bits(n, gens))
            }
            Rows::Dense(m) => {
                let field = self.field;
                let mut gens = vec![0u8; free.len() * n];
                for (gi, &f) in free.iter().enumerate() {
                    gens[gi * n + f] = 1;
                    for (ri, &p) in pivots.iter().enumerate() {
                        gens[gi * n + p] = field.neg(m[ri * n + f]);
                    }
                }
                let rank = rref_dense_in_place(field, n, &mut gens);
                Subspace::from_canonical_dense(field, n, rank, gens)
            }
        }
    }

    /// All `q^dim` vectors of the subspace. Intended for small dimensions.
    pub fn vectors(&self) -> Vec<Vec<u8>> {
        let n = self.n as usize;
        let q = self.field.q();
        let basis = self.rows();
        let total = (q as usize).pow(self.dim() as u32);
        let mut out = Vec::with_capacity(total);
        let mut coeffs = vec![0u8; basis.len()];
        for _ in 0..total {
            let mut v = vec![0u8; n];
            for (c, row) in coeffs.iter().zip(&basis) {
                if *c == 0 {
                    continue;
                }
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = self.field.add(*x, self.field.mul(*c, r));
                }
            }
            out.push(v);
            for c in coeffs.iter_mut() {
                *c += 1;
                if *c < q {
                    break;
                }
                *c = 0;
            }
        }
        out
    }

    /// A uniformly random element of the span of `gens` random vectors.
    pub fn random<R: Rng + ?Sized>(field: Field, n: usize, gens: usize, rng: &mut R) -> Subspace {
        let q = field.q();
        let vs: Vec<Vec<u8>> = (0..gens).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
        Subspace::from_generators(field, n, &vs).expect("generated vectors are well formed")
    }
}

fn pack_bits(v: &[u8]) -> u64 {
    let n = v.len();
    v.iter().enumerate().fold(0u64, |acc, (c, &x)| if x != 0 { acc | col_bit(n, c) } else { acc })
}

impl Ord for Subspace {
    /// Lexicographic on (field, ambient dim, dim, pivot set, row entries).
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .q()
            .cmp(&other.field.q())
            .then(self.n.cmp(&other.n))
            .then(self.dim.cmp(&other.dim))
            .then_with(|| self.pivots().cmp(&other.pivots()))
            .then_with(|| match (&self.rows, &other.rows) {
                (Rows::Bits(a), Rows::Bits(b)) => a.cmp(b),
                (Rows::Dense(a), Rows::Dense(b)) => a.cmp(b),
                _ => unreachable!(),
            })
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

const DIGITS: &[u8; 16] = b"0123456789abcdef";

impl fmt::Display for Subspace {
    /// `q:n:d:` followed by the comma separated RREF rows as base-q digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}:", self.field.q(), self.n, self.dim)?;
        for i in 0..self.dim() {
            if i > 0 {
                f.write_str(",")?;
            }
            let s: String = self.row(i).iter().map(|&x| DIGITS[x as usize] as char).collect();
            f.write_str(&s)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace({self})")
    }
}

impl FromStr for Subspace {
    type Err = Error;

    /// Parses the `q:n:d:rows` form and rejects anything not already in RREF.
    fn from_str(s: &str) -> Result<Subspace> {
        let bad = |msg: String| Error::parse(1, msg);
        let mut parts = s.trim().splitn(4, ':');
        let mut header = |name: &str| -> Result<usize> {
            let tok = parts.next().ok_or_else(|| bad(format!("missing {name}")))?;
            tok.parse::<usize>().map_err(|_| bad(format!("invalid {name} '{tok}'")))
        };
        let q = header("q")?;
        let n = header("n")?;
        let d = header("d")?;
        let body = parts.next().ok_or_else(|| bad("missing row list".into()))?;
        let field = Field::new(q as u64).map_err(|e| bad(e.to_string()))?;
        if d > n {
            return Err(bad(format!("dimension {d} exceeds ambient dimension {n}")));
        }
        let rows: Vec<Vec<u8>> = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|r| {
                    r.chars()
                        .map(|c| match c.to_digit(16) {
                            Some(x) if (x as usize) < q => Ok(x as u8),
                            _ => Err(bad(format!("invalid digit '{c}' for q = {q}"))),
                        })
                        .collect::<Result<Vec<u8>>>()
                })
                .collect::<Result<_>>()?
        };
        if rows.len() != d {
            return Err(bad(format!("header says {d} rows, found {}", rows.len())));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(bad(format!("row of length {} in ambient dimension {n}", r.len())));
        }
        Subspace::from_rref_rows(field, n, &rows).map_err(|e| bad(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(q: u64) -> Field {
        Field::new(q).unwrap()
    }

    fn sp(q: u64, n: usize, gens: &[&[u8]]) -> Subspace {
        Subspace::from_generators(gf(q), n, gens).unwrap()
    }

    #[test]
    fn generators_examples() {
        let z = sp(2, 3, &[]);
        assert_eq!(z.dim(), 0);
        assert_eq!(z, Subspace::zero(gf(2), 3));
        let s = sp(2, 3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(s.dim(), 2);
        let t = sp(3, 2, &[&[1, 2], &[2, 1]]);
        // det = 1 - 4 = -3 = 0 mod 3
        assert_eq!(t.dim(), 1);
        let u = sp(3, 2, &[&[1, 2], &[2, 2]]);
        assert_eq!(u, Subspace::full(gf(3), 2));
    }

    #[test]
    fn ragged_input_is_rejected() {
        let err = Subspace::from_generators(gf(2), 3, &[vec![1, 0]]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 3, found: 2 });
    }

    #[test]
    fn lattice_operations() {
        let f = gf(2);
        let l1 = sp(2, 3, &[&[1, 0, 0]]);
        let l2 = sp(2, 3, &[&[0, 1, 0]]);
        let zero = Subspace::zero(f, 3);
        let full = Subspace::full(f, 3);
        assert_eq!(l1.sum(&zero).unwrap(), l1);
        assert_eq!(l1.sum(&l1).unwrap(), l1);
        let plane = l1.sum(&l2).unwrap();
        assert_eq!(plane.dim(), 2);
        assert_eq!(l1.intersect(&full).unwrap(), l1);
        assert_eq!(l1.intersect(&l2).unwrap(), zero);
        let other_plane = sp(2, 3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(plane.intersect(&other_plane).unwrap(), l2);
        assert!(l1.contains(&zero).unwrap());
        assert!(!zero.contains(&l1).unwrap());
        assert!(plane.contains(&l1).unwrap());
        assert_eq!(l1.delta(&l1).unwrap(), 0);
        assert_eq!(zero.delta(&full).unwrap(), 3);
        assert_eq!(l1.delta(&l2).unwrap(), 2);
    }

    #[test]
    fn mismatched_ambients_are_errors() {
        let a = Subspace::zero(gf(2), 3);
        let b = Subspace::zero(gf(2), 4);
        let c = Subspace::zero(gf(3), 3);
        assert!(matches!(a.delta(&b), Err(Error::AmbientMismatch { .. })));
        assert!(matches!(a.sum(&c), Err(Error::AmbientMismatch { .. })));
        assert!(matches!(a.intersect(&b), Err(Error::AmbientMismatch { .. })));
        assert!(matches!(a.contains(&c), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn perp_examples() {
        let f = gf(2);
        assert_eq!(Subspace::zero(f, 3).perp(), Subspace::full(f, 3));
        assert_eq!(Subspace::full(f, 3).perp(), Subspace::zero(f, 3));
        let line = sp(2, 3, &[&[1, 0, 0]]);
        assert_eq!(line.perp(), sp(2, 3, &[&[0, 1, 0], &[0, 0, 1]]));
        // over GF(3): (1,1,1)^perp contains (1,2,0) and (1,0,2)
        let l3 = sp(3, 3, &[&[1, 1, 1]]);
        assert_eq!(l3.perp(), sp(3, 3, &[&[1, 2, 0], &[1, 0, 2]]));
    }

    #[test]
    fn packed_and_dense_paths_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = gf(2);
        for _ in 0..300 {
            let k1 = rng.gen_range(0..6);
            let k2 = rng.gen_range(0..6);
            let a = Subspace::random(f, 5, k1, &mut rng);
            let b = Subspace::random(f, 5, k2, &mut rng);
            // rebuild through the dense elimination with GF(2) tables
            let mut m: Vec<u8> = a.rows().into_iter().chain(b.rows()).flatten().collect();
            let rank = rref_dense_in_place(f, 5, &mut m);
            assert_eq!(rank, a.join_dim(&b));
            let s = a.sum(&b).unwrap();
            assert_eq!(s.rows().concat(), m);
        }
    }

    #[test]
    fn intersection_matches_direct_filter() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for q in [2u64, 3, 4, 5] {
            let f = gf(q);
            for _ in 0..60 {
                let a = Subspace::random(f, 4, rng.gen_range(0..5), &mut rng);
                let b = Subspace::random(f, 4, rng.gen_range(0..5), &mut rng);
                let common: Vec<Vec<u8>> =
                    a.vectors().into_iter().filter(|v| b.contains_vector(v).unwrap()).collect();
                let direct = Subspace::from_generators(f, 4, &common).unwrap();
                assert_eq!(a.intersect(&b).unwrap(), direct);
            }
        }
    }

    #[test]
    fn serialization_format() {
        let s = sp(2, 4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(s.to_string(), "2:4:2:1100,0011");
        assert_eq!("2:4:2:1100,0011".parse::<Subspace>().unwrap(), s);
        assert_eq!(Subspace::zero(gf(2), 4).to_string(), "2:4:0:");
        assert_eq!("2:4:0:".parse::<Subspace>().unwrap(), Subspace::zero(gf(2), 4));
        let g16 = sp(16, 2, &[&[1, 15]]);
        assert_eq!(g16.to_string(), "16:2:1:1f");
        assert_eq!(g16.to_string().parse::<Subspace>().unwrap(), g16);
    }

    #[test]
    fn parser_rejects_non_canonical_rows() {
        for bad in ["2:4:2:1100,0111", "2:4:2:0011,1100", "2:4:1:1200", "2:4:2:1100", "6:2:0:", "2:3:1:10"] {
            assert!(bad.parse::<Subspace>().is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn order_is_dim_then_pivots_then_entries() {
        let a = sp(2, 3, &[&[1, 1, 0]]);
        let b = sp(2, 3, &[&[0, 1, 0]]);
        let c = sp(2, 3, &[&[1, 0, 0]]);
        let plane = sp(2, 3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(c < a);
        assert!(a < b);
        assert!(b < plane);
    }
}
