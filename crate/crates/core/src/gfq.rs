//! Table-driven arithmetic in the finite fields GF(q), q <= 16.
//!
//! Elements are the integers `0..q`. For a prime power `q = p^e` with `e > 1`
//! the integer encodes the coefficient vector of a polynomial in `F_p[x]`
//! written base `p`, constant term in the least significant digit, reduced
//! modulo a fixed irreducible polynomial:
//!
//! | q  | reduction polynomial |
//! |----|----------------------|
//! | 4  | x^2 + x + 1          |
//! | 8  | x^3 + x + 1          |
//! | 9  | x^2 + 2x + 2         |
//! | 16 | x^4 + x + 1          |
//!
//! The polynomial only fixes element labels; no count depends on it.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Orders accepted by [`Field::new`].
pub const SUPPORTED_ORDERS: [u8; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

/// Immutable description of GF(q) with dense operation tables.
#[derive(Debug)]
pub struct FieldSpec {
    q: u8,
    p: u8,
    e: u8,
    /// Coefficients over F_p, constant term first. Empty for prime fields.
    reduction_poly: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FieldSpec {
    fn build(q: u8) -> Result<FieldSpec> {
        let (p, e) = prime_power(q).ok_or(Error::NonPrimePower(q as u64))?;
        let reduction_poly: Vec<u8> = match q {
            4 => vec![1, 1, 1],
            8 => vec![1, 1, 0, 1],
            9 => vec![2, 2, 1],
            16 => vec![1, 1, 0, 0, 1],
            _ if e == 1 => Vec::new(),
            _ => return Err(Error::NonPrimePower(q as u64)),
        };
        let size = q as usize;
        let mut add = vec![0u8; size * size];
        let mut mul = vec![0u8; size * size];
        for x in 0..q {
            for y in 0..q {
                let (s, m) = if e == 1 {
                    ((x + y) % q, ((x as u16 * y as u16) % q as u16) as u8)
                } else {
                    let xs = digits(x, p, e);
                    let ys = digits(y, p, e);
                    let s: Vec<u8> = xs.iter().zip(&ys).map(|(a, b)| (a + b) % p).collect();
                    (undigits(&s, p), undigits(&poly_mul_mod(&xs, &ys, &reduction_poly, p), p))
                };
                add[x as usize * size + y as usize] = s;
                mul[x as usize * size + y as usize] = m;
            }
        }
        let mut neg = vec![0u8; size];
        let mut inv = vec![0u8; size];
        for x in 0..size {
            neg[x] = (0..size).find(|&y| add[x * size + y] == 0).unwrap() as u8;
            if x != 0 {
                inv[x] = (1..size)
                    .find(|&y| mul[x * size + y] == 1)
                    .ok_or(Error::NonPrimePower(q as u64))? as u8;
            }
        }
        Ok(FieldSpec { q, p, e, reduction_poly, add, mul, neg, inv })
    }

    pub fn order(&self) -> u8 {
        self.q
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.e
    }

    pub fn reduction_poly(&self) -> &[u8] {
        &self.reduction_poly
    }

    #[inline]
    pub fn add(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize * self.q as usize + y as usize]
    }

    #[inline]
    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize * self.q as usize + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: u8) -> u8 {
        self.neg[x as usize]
    }

    #[inline]
    pub fn sub(&self, x: u8, y: u8) -> u8 {
        self.add(x, self.neg(y))
    }

    pub fn inv(&self, x: u8) -> Result<u8> {
        if x == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.inv[x as usize])
    }

    /// Inverse of a nonzero element; the caller guarantees `x != 0`.
    #[inline]
    pub(crate) fn inv_nonzero(&self, x: u8) -> u8 {
        debug_assert!(x != 0);
        self.inv[x as usize]
    }

    pub fn contains(&self, x: u8) -> bool {
        x < self.q
    }
}

/// Cheap shareable handle to one of the statically built fields.
#[derive(Clone, Copy)]
pub struct Field(&'static FieldSpec);

static FIELDS: [OnceLock<Option<FieldSpec>>; 17] = [const { OnceLock::new() }; 17];

impl Field {
    /// Builds (once per process) and returns GF(q).
    pub fn new(q: u64) -> Result<Field> {
        if q > 16 || !SUPPORTED_ORDERS.contains(&(q as u8)) {
            return Err(Error::NonPrimePower(q));
        }
        let slot = FIELDS[q as usize].get_or_init(|| FieldSpec::build(q as u8).ok());
        slot.as_ref().map(Field).ok_or(Error::NonPrimePower(q))
    }

    pub fn spec(&self) -> &'static FieldSpec {
        self.0
    }

    pub fn q(&self) -> u8 {
        self.0.q
    }

    pub fn is_binary(&self) -> bool {
        self.0.q == 2
    }
}

impl std::ops::Deref for Field {
    type Target = FieldSpec;

    fn deref(&self) -> &FieldSpec {
        self.0
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.q == other.0.q
    }
}

impl Eq for Field {}

impl PartialOrd for Field {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Field {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.q.cmp(&other.0.q)
    }
}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.q.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

/// Short name for [`Field::new`].
pub fn field_new(q: u64) -> Result<Field> {
    Field::new(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Neg,
    Inv,
}

/// Checked single operation; `y` is ignored by the unary operations.
pub fn field_arith(field: Field, op: FieldOp, x: u8, y: u8) -> Result<u8> {
    for v in [x, y] {
        if !field.contains(v) {
            return Err(Error::InvalidElement { element: v, q: field.q() });
        }
    }
    match op {
        FieldOp::Add => Ok(field.add(x, y)),
        FieldOp::Mul => Ok(field.mul(x, y)),
        FieldOp::Neg => Ok(field.neg(x)),
        FieldOp::Inv => field.inv(x),
    }
}

fn prime_power(q: u8) -> Option<(u8, u8)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn digits(x: u8, p: u8, e: u8) -> Vec<u8> {
    let mut x = x;
    (0..e)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u8], p: u8) -> u8 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn poly_mul_mod(a: &[u8], b: &[u8], modulus: &[u8], p: u8) -> Vec<u8> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u16; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u16 * y as u16) % p as u16;
        }
    }
    // modulus is monic; fold the high coefficients down
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &m) in modulus[..e].iter().enumerate() {
            let idx = deg - e + i;
            prod[idx] = (prod[idx] + (p as u16 - c) * m as u16) % p as u16;
        }
    }
    prod[..e].iter().map(|&c| c as u8).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &FieldSpec) {
        let q = f.order();
        for x in 0..q {
            assert_eq!(f.add(x, 0), x);
            assert_eq!(f.mul(x, 1), x);
            assert_eq!(f.add(x, f.neg(x)), 0);
            if x != 0 {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
            }
            for y in 0..q {
                assert_eq!(f.add(x, y), f.add(y, x));
                assert_eq!(f.mul(x, y), f.mul(y, x));
                for z in 0..q {
                    assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                    assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
    }

    #[test]
    fn every_supported_order_is_a_field() {
        for q in SUPPORTED_ORDERS {
            check_axioms(&Field::new(q as u64).unwrap());
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for q in SUPPORTED_ORDERS {
            let f = Field::new(q as u64).unwrap();
            let generator = (1..q).find(|&g| {
                let mut x = 1u8;
                let mut seen = std::collections::HashSet::new();
                for _ in 0..q - 1 {
                    x = f.mul(x, g);
                    seen.insert(x);
                }
                seen.len() == q as usize - 1
            });
            assert!(generator.is_some(), "no generator for GF({q})");
        }
    }

    #[test]
    fn gf4_generator_satisfies_reduction() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.characteristic(), 2);
        // a = x is encoded as 2, a + 1 as 3
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.inv(2).unwrap(), 3);
    }

    #[test]
    fn small_prime_examples() {
        let f2 = Field::new(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        assert!(f2.reduction_poly().is_empty());
        let f3 = Field::new(3).unwrap();
        assert_eq!(f3.mul(2, 2), 1);
    }

    #[test]
    fn rejects_unsupported_orders() {
        for q in [0, 1, 6, 10, 12, 15, 17, 25, 32] {
            assert_eq!(Field::new(q).unwrap_err(), Error::NonPrimePower(q));
        }
    }

    #[test]
    fn checked_arith_validates_elements() {
        let f = Field::new(3).unwrap();
        assert_eq!(field_arith(f, FieldOp::Mul, 2, 2), Ok(1));
        assert_eq!(field_arith(f, FieldOp::Neg, 1, 0), Ok(2));
        assert!(matches!(field_arith(f, FieldOp::Add, 3, 0), Err(Error::InvalidElement { .. })));
        assert_eq!(field_arith(f, FieldOp::Inv, 0, 0), Err(Error::ZeroInverse));
    }

    #[test]
    fn zero_inverse_is_an_error() {
        assert_eq!(Field::new(5).unwrap().inv(0), Err(Error::ZeroInverse));
    }
}
