//! Exact evaluation of Gaussian binomials and the closed-form counts and
//! bounds built from them.
//!
//! Every value is an arbitrary precision integer. Formulas are evaluated on
//! any parameter tuple where their terms are defined; whether the tuple also
//! satisfies the hypotheses of the corresponding extremal theorem is reported
//! separately through [`Evaluation`].

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Nonnegative exact count.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }

    fn from_signed(value: BigInt, what: &str) -> Result<Self> {
        match value.sign() {
            Sign::Minus => Err(Error::NegativeCount(format!("{what} = {value}"))),
            _ => Ok(BigCount(value.magnitude().clone())),
        }
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl PartialEq<usize> for BigCount {
    fn eq(&self, other: &usize) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

thread_local! {
    // rows[n][k] = [n choose k]_q, grown on demand
    static PASCAL: RefCell<HashMap<u64, Vec<Vec<BigUint>>>> = RefCell::new(HashMap::new());
}

fn pow(q: u64, e: i64) -> BigUint {
    debug_assert!(e >= 0);
    BigUint::from(q).pow(e as u32)
}

fn ipow(q: u64, e: i64) -> BigInt {
    BigInt::from(pow(q, e))
}

fn gb(n: i64, k: i64, q: u64) -> BigUint {
    assert!(q >= 2, "Gaussian binomials need q >= 2");
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let (n, k) = (n as usize, k as usize);
    PASCAL.with(|cell| {
        let mut memo = cell.borrow_mut();
        let rows = memo.entry(q).or_default();
        while rows.len() <= n {
            let m = rows.len();
            let row: Vec<BigUint> = (0..=m)
                .map(|j| {
                    if j == 0 || j == m {
                        BigUint::one()
                    } else {
                        // [m j] = [m-1 j-1] + q^j [m-1 j]
                        &rows[m - 1][j - 1] + pow(q, j as i64) * &rows[m - 1][j]
                    }
                })
                .collect();
            rows.push(row);
        }
        rows[n][k].clone()
    })
}

fn gbi(n: i64, k: i64, q: u64) -> BigInt {
    BigInt::from(gb(n, k, q))
}

fn layer_sum(n: i64, upto: i64, q: u64) -> BigInt {
    (0..=upto).map(|i| gbi(n, i, q)).sum()
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(msg()))
    }
}

fn require_q(q: u64) -> Result<()> {
    require(q >= 2, || format!("q = {q} must be at least 2"))
}

/// Number of k-dimensional subspaces of F_q^n; zero outside `0 <= k <= n`.
///
/// Panics if `q < 2`.
pub fn gauss_binom(n: i64, k: i64, q: u64) -> BigCount {
    BigCount(gb(n, k, q))
}

/// Number of l-subspaces meeting a fixed k-subspace of F_q^n in exactly j
/// dimensions: `q^{(k-j)(l-j)} [n-k, l-j] [k, j]`. Out-of-range arguments give 0.
pub fn count_profile(n: i64, k: i64, l: i64, j: i64, q: u64) -> BigCount {
    if j < 0 || j > k.min(l) || k > n || l > n || k < 0 || l < 0 {
        return BigCount::zero();
    }
    BigCount(pow(q, (k - j) * (l - j)) * gb(n - k, l - j, q) * gb(k, j, q))
}

/// Largest family of diameter at most `d`: `sum_{i<=t}[n i]`, plus `[n-1 t]` when `d = 2t+1`.
pub fn kleitman_bound(n: i64, d: i64, q: u64) -> Result<BigCount> {
    require_q(q)?;
    require(d >= 2, || format!("d = {d} must be at least 2"))?;
    require(n > d, || format!("n = {n} must be at least d + 1 = {}", d + 1))?;
    let t = d / 2;
    let mut v = layer_sum(n, t, q);
    if d % 2 == 1 {
        v += gbi(n - 1, t, q);
    }
    BigCount::from_signed(v, "kleitman bound")
}

/// `g(n,t) = sum_{i<t}[n i] + [n-1 t-1] + [n-1 t]`, the size of a radius-t ball
/// around a line.
pub fn type_a_even_bound(n: i64, t: i64, q: u64) -> Result<BigCount> {
    require_q(q)?;
    require(t >= 1, || format!("t = {t} must be positive"))?;
    require(n > t, || format!("n = {n} must exceed t = {t}"))?;
    let v = layer_sum(n, t - 1, q) + gbi(n - 1, t - 1, q) + gbi(n - 1, t, q);
    BigCount::from_signed(v, "g(n,t)")
}

/// `H(n,t) = [n-1 t] - q^{t(t+1)} [n-t-2 t] + q^{t+1}`.
pub fn h_value(n: i64, t: i64, q: u64) -> Result<BigCount> {
    require_q(q)?;
    require(t >= 1, || format!("t = {t} must be positive"))?;
    require(n >= t + 3, || format!("n = {n} must be at least t + 3 = {}", t + 3))?;
    BigCount::from_signed(h_value_signed(n, t, q), "H(n,t)")
}

/// `H(n,t)` without the sign check, for positivity sweeps.
pub fn h_value_signed(n: i64, t: i64, q: u64) -> BigInt {
    gbi(n - 1, t, q) - ipow(q, t * (t + 1)) * gbi(n - t - 2, t, q) + ipow(q, t + 1)
}

/// `sum_{i<=t}[n i] + H(n,t)`.
pub fn odd_stability_bound(n: i64, t: i64, q: u64) -> Result<BigCount> {
    let h = h_value(n, t, q)?;
    BigCount::from_signed(layer_sum(n, t, q) + h.to_bigint(), "odd stability bound")
}

/// The strict upper bound `sum_{i<t}[n i] + (2t+1) q^2 [3t t] [n t-1]`.
pub fn type_b_even_bound(n: i64, t: i64, q: u64) -> Result<BigCount> {
    require_q(q)?;
    require(t >= 1, || format!("t = {t} must be positive"))?;
    require(n >= t, || format!("n = {n} must be at least t = {t}"))?;
    let v = layer_sum(n, t - 1, q) + BigInt::from(2 * t + 1) * ipow(q, 2) * gbi(3 * t, t, q) * gbi(n, t - 1, q);
    BigCount::from_signed(v, "type B even bound")
}

/// Largest s-intersecting family of k-spaces: `max{[n-s k-s], [2k-s k-s]}`.
pub fn ekr_bound(n: i64, k: i64, s: i64, q: u64) -> Result<BigCount> {
    require_q(q)?;
    require(0 <= s && s <= k, || format!("need 0 <= s <= k, got s = {s}, k = {k}"))?;
    require(n >= 2 * k - s, || format!("n = {n} must be at least 2k - s = {}", 2 * k - s))?;
    Ok(BigCount(gb(n - s, k - s, q).max(gb(2 * k - s, k - s, q))))
}

/// Largest nontrivial s-intersecting family of k-spaces.
///
/// For `s = 1` this is `[n-1 k-1] - q^{k(k-1)} [n-k-1 k-1] + q^k`, attained by the
/// Hilton-Milner type configurations. For `s >= 2` the two regimes are
/// `s <= k/2 - 1` and `k/2 - 1 < s <= k - 2`. The statement needs
/// `n >= 2k + 2`; the expression is evaluated for any `n > k`.
pub fn nontrivial_intersecting_bound(n: i64, k: i64, s: i64, q: u64) -> Result<BigCount> {
    require_q(q)?;
    require(s >= 1, || format!("s = {s} must be positive"))?;
    require(k >= s + 2, || format!("k = {k} must be at least s + 2 = {}", s + 2))?;
    require(n > k, || format!("n = {n} must exceed k = {k}"))?;
    let v = if s == 1 {
        gbi(n - 1, k - 1, q) - ipow(q, k * (k - 1)) * gbi(n - k - 1, k - 1, q) + ipow(q, k)
    } else if 2 * s <= k - 2 {
        nontrivial_small_s(n, k, s, q)
    } else {
        gbi(s + 2, 1, q) * gbi(n - s - 1, k - s - 1, q) - BigInt::from(q) * gbi(s + 1, 1, q) * gbi(n - s - 2, k - s - 2, q)
    };
    BigCount::from_signed(v, "nontrivial intersecting bound")
}

fn nontrivial_small_s(n: i64, k: i64, s: i64, q: u64) -> BigInt {
    gbi(n - s, k - s, q) - ipow(q, (k + 1 - s) * (k - s)) * gbi(n - k - 1, k - s, q) + ipow(q, k + 1 - s) * gbi(s, 1, q)
}

/// Both sides of the comparison
/// `[n-s k-s] - q^{(k+1-s)(k-s)}[n-k-1 k-s] + q^{k+1-s}[s 1] <= [k-s+1 1][n-s-1 k-s-1]`.
pub fn small_s_comparison(n: i64, k: i64, s: i64, q: u64) -> (BigInt, BigInt) {
    let lhs = nontrivial_small_s(n, k, s, q);
    let rhs = gbi(k - s + 1, 1, q) * gbi(n - s - 1, k - s - 1, q);
    (lhs, rhs)
}

/// Cap on `|F(k)| + |F(n-k)|` when both layers are nonempty: `[n k] - q^{k(n-k)} + 1`.
pub fn complementary_pair_bound(n: i64, k: i64, q: u64) -> Result<BigCount> {
    require_q(q)?;
    require(1 <= k && k < n - k, || format!("need 1 <= k < n - k, got k = {k}, n = {n}"))?;
    BigCount::from_signed(gbi(n, k, q) - ipow(q, k * (n - k)) + 1, "complementary pair bound")
}

/// Sum bound for proper cross-t-intersecting families of a- and b-spaces:
/// `[n b] - sum_{i<t} q^{(a-i)(b-i)} [a i] [n-a b-i] + 1`.
pub fn cross_intersecting_sum_bound(n: i64, a: i64, b: i64, t: i64, q: u64) -> Result<BigCount> {
    require_q(q)?;
    require(a >= 1 && b >= 1 && t >= 1 && t <= a.min(b) && a <= n && b <= n, || {
        format!("invalid (n, a, b, t) = ({n}, {a}, {b}, {t})")
    })?;
    let mut v = gbi(n, b, q) + 1;
    for i in 0..t {
        v -= ipow(q, (a - i) * (b - i)) * gbi(a, i, q) * gbi(n - a, b - i, q);
    }
    BigCount::from_signed(v, "cross intersecting sum bound")
}

/// The closed forms exposed through the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Kleitman,
    TypeAEven,
    OddStability,
    H,
    TypeBEven,
    Ekr,
    Nontrivial,
    ComplementaryPair,
}

/// A formula value together with the hypothesis range of the statement it
/// belongs to.
#[derive(Debug, Clone, Serialize)]
pub struct Evaluation {
    pub kind: BoundKind,
    pub value: BigCount,
    pub in_hypothesis_range: bool,
    pub hypothesis: String,
}

/// Parameters of a bound evaluation; unused fields are ignored.
#[derive(Debug, Clone, Copy, Default)]
pub struct BoundParams {
    pub q: u64,
    pub n: i64,
    pub d: Option<i64>,
    pub t: Option<i64>,
    pub k: Option<i64>,
    pub s: Option<i64>,
}

fn need(v: Option<i64>, name: &str) -> Result<i64> {
    v.ok_or_else(|| Error::ParameterOutOfRange(format!("missing parameter {name}")))
}

pub fn evaluate(kind: BoundKind, p: BoundParams) -> Result<Evaluation> {
    let (q, n) = (p.q, p.n);
    let (value, in_range, hypothesis) = match kind {
        BoundKind::Kleitman => {
            let d = need(p.d, "d")?;
            (kleitman_bound(n, d, q)?, true, "n >= d + 1 >= 3".to_string())
        }
        BoundKind::TypeAEven => {
            let t = need(p.t, "t")?;
            (type_a_even_bound(n, t, q)?, t >= 2 && n >= 7 * t + 5, format!("t >= 2, n >= 7t + 5 = {}", 7 * t + 5))
        }
        BoundKind::OddStability => {
            let t = need(p.t, "t")?;
            (odd_stability_bound(n, t, q)?, t >= 2 && n >= 5 * t + 3, format!("t >= 2, n >= 5t + 3 = {}", 5 * t + 3))
        }
        BoundKind::H => {
            let t = need(p.t, "t")?;
            (h_value(n, t, q)?, t >= 2 && n >= 5 * t + 3, format!("t >= 2, n >= 5t + 3 = {}", 5 * t + 3))
        }
        BoundKind::TypeBEven => {
            let t = need(p.t, "t")?;
            (type_b_even_bound(n, t, q)?, t >= 2 && n >= 6 * t, format!("t >= 2, n >= 6t = {}", 6 * t))
        }
        BoundKind::Ekr => {
            let (k, s) = (need(p.k, "k")?, need(p.s, "s")?);
            (ekr_bound(n, k, s, q)?, true, "n >= 2k - s".to_string())
        }
        BoundKind::Nontrivial => {
            let (k, s) = (need(p.k, "k")?, need(p.s, "s")?);
            (nontrivial_intersecting_bound(n, k, s, q)?, n >= 2 * k + 2, format!("s >= 1, k >= s + 2, n >= 2k + 2 = {}", 2 * k + 2))
        }
        BoundKind::ComplementaryPair => {
            let k = need(p.k, "k")?;
            (complementary_pair_bound(n, k, q)?, true, "1 <= k < n - k".to_string())
        }
    };
    Ok(Evaluation { kind, value, in_hypothesis_range: in_range, hypothesis })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gauss_binom(9, 0, 5), big(1));
        assert_eq!(gauss_binom(4, 2, 2), big(35));
        assert_eq!(gauss_binom(3, 1, 3), big(13));
        assert_eq!(gauss_binom(3, 4, 2), big(0));
        assert_eq!(gauss_binom(3, -1, 2), big(0));
        for n in 0..20 {
            for k in 0..=n {
                assert_eq!(gauss_binom(n, k, 3), gauss_binom(n, n - k, 3));
            }
        }
    }

    #[test]
    fn gaussian_binomial_matches_product_formula() {
        for q in [2u64, 3, 4, 7] {
            for n in 0..15i64 {
                for k in 0..=n {
                    let mut num = BigUint::one();
                    let mut den = BigUint::one();
                    for i in 0..k {
                        num *= pow(q, n - i) - 1u32;
                        den *= pow(q, k - i) - 1u32;
                    }
                    assert_eq!(gauss_binom(n, k, q).0, num / den);
                }
            }
        }
    }

    #[test]
    fn count_profile_examples() {
        assert_eq!(count_profile(2, 1, 1, 0, 2), big(2));
        assert_eq!(count_profile(6, 3, 3, 3, 5), big(1));
        assert_eq!(count_profile(4, 2, 2, 0, 2), big(16));
        assert_eq!(count_profile(4, 2, 2, 3, 2), big(0));
    }

    #[test]
    fn count_profile_sums_to_layer_size() {
        for q in [2u64, 3, 4] {
            for n in 0..=10i64 {
                for k in 0..=n {
                    for l in 0..=n {
                        let total: BigUint = (0..=k.min(l)).map(|j| count_profile(n, k, l, j, q).0).sum();
                        assert_eq!(total, gb(n, l, q), "q={q} n={n} k={k} l={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn kleitman_examples() {
        assert_eq!(kleitman_bound(4, 2, 2).unwrap(), big(16));
        assert_eq!(kleitman_bound(4, 3, 2).unwrap(), big(23));
        assert_eq!(kleitman_bound(5, 4, 2).unwrap(), big(187));
        assert_eq!(kleitman_bound(3, 2, 3).unwrap(), big(14));
        assert!(matches!(kleitman_bound(3, 3, 2), Err(Error::ParameterOutOfRange(_))));
        assert!(kleitman_bound(5, 1, 2).is_err());
    }

    #[test]
    fn stability_examples() {
        assert_eq!(type_a_even_bound(7, 2, 2).unwrap(), big(842));
        assert_eq!(h_value(7, 2, 2).unwrap(), big(211));
        assert_eq!(odd_stability_bound(7, 2, 2).unwrap(), big(3006));
        assert!(h_value(4, 2, 2).is_err());
        let b = type_b_even_bound(12, 2, 2).unwrap();
        assert_eq!(b, big(1 + 4095 + 20 * 651 * 4095));
    }

    #[test]
    fn intersecting_examples() {
        assert_eq!(ekr_bound(7, 3, 1, 2).unwrap(), big(651));
        for k in 1..6 {
            // at the boundary n = 2k - s the second branch is the maximum
            for s in 0..=k {
                let n = 2 * k - s;
                assert_eq!(ekr_bound(n, k, s, 3).unwrap().0, gb(2 * k - s, k - s, 3));
            }
            assert_eq!(ekr_bound(2 * k + 3, k, k, 2).unwrap(), big(1));
        }
        assert!(ekr_bound(4, 3, 1, 2).is_err());
        assert_eq!(nontrivial_intersecting_bound(7, 3, 1, 2).unwrap(), big(211));
        // [4 1][7 1] - 2 [3 1][6 0]
        assert_eq!(nontrivial_intersecting_bound(10, 4, 2, 2).unwrap(), big(15 * 127 - 2 * 7));
        assert!(nontrivial_intersecting_bound(7, 3, 2, 2).is_err());
        assert!(nontrivial_intersecting_bound(3, 3, 1, 2).is_err());
    }

    #[test]
    fn k3_regimes_agree() {
        // at k = 3, s = 1 the large-s expression gives the same value
        for q in [2u64, 3, 4] {
            for n in 8..30 {
                let alt = gbi(3, 1, q) * gbi(n - 2, 1, q) - BigInt::from(q) * gbi(2, 1, q);
                assert_eq!(nontrivial_intersecting_bound(n, 3, 1, q).unwrap().to_bigint(), alt);
            }
        }
    }

    #[test]
    fn nontrivial_below_ekr() {
        for q in [2u64, 3] {
            for k in 3..9i64 {
                for s in 1..=k - 2 {
                    for n in 2 * k + 2..=30 {
                        let nt = nontrivial_intersecting_bound(n, k, s, q).unwrap();
                        let ekr = ekr_bound(n, k, s, q).unwrap();
                        assert!(nt < ekr, "q={q} n={n} k={k} s={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn complementary_pair_examples() {
        assert_eq!(complementary_pair_bound(4, 1, 2).unwrap(), big(8));
        assert_eq!(complementary_pair_bound(5, 2, 2).unwrap(), big(92));
        assert!(complementary_pair_bound(4, 2, 2).is_err());
        for n in 3..14 {
            for k in 1..n {
                if k < n - k {
                    assert_eq!(
                        complementary_pair_bound(n, k, 3).unwrap(),
                        cross_intersecting_sum_bound(n, k, n - k, 1, 3).unwrap()
                    );
                    assert!(complementary_pair_bound(n, k, 3).unwrap() < gauss_binom(n, k, 3));
                }
            }
        }
    }

    #[test]
    fn bounds_are_monotone_in_n() {
        for q in [2u64, 3] {
            for t in 2..5i64 {
                for n in 2 * t + 1..30 {
                    assert!(type_a_even_bound(n, t, q).unwrap() <= type_a_even_bound(n + 1, t, q).unwrap());
                    assert!(odd_stability_bound(n, t, q).unwrap() <= odd_stability_bound(n + 1, t, q).unwrap());
                    assert!(type_b_even_bound(n, t, q).unwrap() <= type_b_even_bound(n + 1, t, q).unwrap());
                    assert!(kleitman_bound(n, 2 * t, q).unwrap() <= kleitman_bound(n + 1, 2 * t, q).unwrap());
                }
            }
        }
    }

    #[test]
    fn stability_bounds_sit_below_kleitman() {
        for q in [2u64, 3, 4] {
            for t in 2..5i64 {
                for n in 2 * t + 2..40 {
                    assert!(type_a_even_bound(n, t, q).unwrap() < kleitman_bound(n, 2 * t, q).unwrap());
                }
                for n in 5 * t + 3..40 {
                    assert!(odd_stability_bound(n, t, q).unwrap() < kleitman_bound(n, 2 * t + 1, q).unwrap());
                }
            }
        }
    }

    #[test]
    fn type_b_falls_below_type_a_from_a_crossover() {
        // first n from which the even type B expression is below g(n,t),
        // located by an independent exact evaluation
        for (q, t, first) in [(2u64, 2i64, 19i64), (2, 3, 33), (3, 2, 17), (3, 3, 31)] {
            for n in 6 * t..=12 * t {
                let below = type_b_even_bound(n, t, q).unwrap() < type_a_even_bound(n, t, q).unwrap();
                assert_eq!(below, n >= first, "q={q} t={t} n={n}");
            }
        }
    }

    #[test]
    fn evaluation_reports_hypothesis_range() {
        let e = evaluate(BoundKind::TypeAEven, BoundParams { q: 2, n: 7, t: Some(2), ..Default::default() }).unwrap();
        assert_eq!(e.value, big(842));
        assert!(!e.in_hypothesis_range);
        let e = evaluate(BoundKind::TypeAEven, BoundParams { q: 2, n: 19, t: Some(2), ..Default::default() }).unwrap();
        assert!(e.in_hypothesis_range);
        assert!(evaluate(BoundKind::Kleitman, BoundParams { q: 2, n: 4, ..Default::default() }).is_err());
    }

    #[test]
    fn serializes_as_decimal_string() {
        let v = gauss_binom(40, 20, 2);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, format!("\"{}\"", v.0));
    }
}
