//! Exact comparisons of closed forms over finite parameter grids.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qcount;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    /// `[n-s k-s] - q^{(k+1-s)(k-s)}[n-k-1 k-s] + q^{k+1-s}[s 1] <= [k-s+1 1][n-s-1 k-s-1]`
    /// over `1 <= s <= k-3`, `2k <= n`.
    Lemma26,
    /// `H(n,t) > 0` over `n >= 5t+3`.
    HPositive,
    /// `type_b_even_bound < type_a_even_bound` over `6t <= n <= 12t`.
    TypebBelowTypea,
    /// `nontrivial_intersecting_bound < ekr_bound` over `1 <= s <= k-2`, `n >= 2k+2`.
    NontrivialBelowEkr,
}

impl SweepKind {
    pub fn name(self) -> &'static str {
        match self {
            SweepKind::Lemma26 => "lemma26",
            SweepKind::HPositive => "h-positive",
            SweepKind::TypebBelowTypea => "typeb-below-typea",
            SweepKind::NontrivialBelowEkr => "nontrivial-below-ekr",
        }
    }

    fn params(self) -> &'static [&'static str] {
        match self {
            SweepKind::Lemma26 | SweepKind::NontrivialBelowEkr => &["q", "n", "k", "s"],
            SweepKind::HPositive | SweepKind::TypebBelowTypea => &["q", "n", "t"],
        }
    }
}

impl std::str::FromStr for SweepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "lemma26" => Ok(SweepKind::Lemma26),
            "h-positive" => Ok(SweepKind::HPositive),
            "typeb-below-typea" => Ok(SweepKind::TypebBelowTypea),
            "nontrivial-below-ekr" => Ok(SweepKind::NontrivialBelowEkr),
            other => Err(Error::InvalidConfiguration(format!("unknown sweep '{other}'"))),
        }
    }
}

/// A parameter grid. `n_max = None` means the natural end of the range:
/// 40 for most sweeps, `12t` for the type B comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub kind: SweepKind,
    pub qs: Vec<u64>,
    pub ts: Vec<i64>,
    pub k_max: i64,
    pub n_max: Option<i64>,
}

impl SweepSpec {
    /// The default grid of each sweep.
    pub fn standard(kind: SweepKind) -> SweepSpec {
        match kind {
            SweepKind::Lemma26 => SweepSpec { kind, qs: vec![2, 3, 4], ts: vec![], k_max: 12, n_max: Some(40) },
            SweepKind::HPositive => SweepSpec { kind, qs: vec![2, 3], ts: vec![2, 3, 4], k_max: 0, n_max: Some(40) },
            SweepKind::TypebBelowTypea => SweepSpec { kind, qs: vec![2, 3], ts: vec![2, 3], k_max: 0, n_max: None },
            SweepKind::NontrivialBelowEkr => SweepSpec { kind, qs: vec![2, 3], ts: vec![], k_max: 6, n_max: Some(30) },
        }
    }
}

fn as_decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub params: Vec<i64>,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_decimal")]
    pub rhs: BigInt,
    /// `rhs - lhs`.
    #[serde(serialize_with = "as_decimal")]
    pub margin: BigInt,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub kind: SweepKind,
    pub param_names: Vec<&'static str>,
    pub tuples: usize,
    pub failures: usize,
    pub passed: bool,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn failing(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.param_names.join(",");
        out.push_str(",lhs,rhs,margin,pass\n");
        for r in &self.rows {
            for p in &r.params {
                out.push_str(&format!("{p},"));
            }
            out.push_str(&format!("{},{},{},{}\n", r.lhs, r.rhs, r.margin, r.pass));
        }
        out
    }
}

fn row(params: Vec<i64>, lhs: BigInt, rhs: BigInt, strict: bool) -> SweepRow {
    let margin = &rhs - &lhs;
    let pass = if strict { margin > BigInt::zero() } else { margin >= BigInt::zero() };
    SweepRow { params, lhs, rhs, margin, pass }
}

/// Evaluates every tuple of the grid exactly; passes iff no tuple fails.
pub fn inequality_sweep(spec: &SweepSpec) -> Result<SweepReport> {
    for &q in &spec.qs {
        if q < 2 {
            return Err(Error::NonPrimePower(q));
        }
    }
    let n_max = spec.n_max.unwrap_or(40);
    let mut rows = Vec::new();
    for &q in &spec.qs {
        match spec.kind {
            SweepKind::Lemma26 => {
                for k in 4..=spec.k_max {
                    for s in 1..=k - 3 {
                        for n in 2 * k..=n_max {
                            let (lhs, rhs) = qcount::small_s_comparison(n, k, s, q);
                            rows.push(row(vec![q as i64, n, k, s], lhs, rhs, false));
                        }
                    }
                }
            }
            SweepKind::HPositive => {
                for &t in &spec.ts {
                    for n in 5 * t + 3..=n_max {
                        rows.push(row(vec![q as i64, n, t], BigInt::zero(), qcount::h_value_signed(n, t, q), true));
                    }
                }
            }
            SweepKind::TypebBelowTypea => {
                for &t in &spec.ts {
                    for n in 6 * t..=spec.n_max.unwrap_or(12 * t) {
                        let b = qcount::type_b_even_bound(n, t, q)?.to_bigint();
                        let a = qcount::type_a_even_bound(n, t, q)?.to_bigint();
                        rows.push(row(vec![q as i64, n, t], b, a, true));
                    }
                }
            }
            SweepKind::NontrivialBelowEkr => {
                for k in 3..=spec.k_max {
                    for s in 1..=k - 2 {
                        for n in 2 * k + 2..=n_max {
                            let lhs = qcount::nontrivial_intersecting_bound(n, k, s, q)?.to_bigint();
                            let rhs = qcount::ekr_bound(n, k, s, q)?.to_bigint();
                            rows.push(row(vec![q as i64, n, k, s], lhs, rhs, true));
                        }
                    }
                }
            }
        }
    }
    let failures = rows.iter().filter(|r| !r.pass).count();
    Ok(SweepReport {
        kind: spec.kind,
        param_names: spec.kind.params().to_vec(),
        tuples: rows.len(),
        failures,
        passed: failures == 0,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_grids() {
        let r = inequality_sweep(&SweepSpec::standard(SweepKind::Lemma26)).unwrap();
        assert!(r.passed);
        assert_eq!(r.tuples, 3015);
        let h = inequality_sweep(&SweepSpec::standard(SweepKind::HPositive)).unwrap();
        assert!(h.passed);
        let nt = inequality_sweep(&SweepSpec::standard(SweepKind::NontrivialBelowEkr)).unwrap();
        assert!(nt.passed, "{:?}", nt.failing().next());
    }

    #[test]
    fn type_b_comparison_fails_below_the_crossover() {
        let r = inequality_sweep(&SweepSpec::standard(SweepKind::TypebBelowTypea)).unwrap();
        assert!(!r.passed);
        let first_pass = |q: i64, t: i64| r.rows.iter().find(|row| row.params[0] == q && row.params[2] == t && row.pass).map(|row| row.params[1]);
        assert_eq!(first_pass(2, 2), Some(19));
        assert_eq!(first_pass(3, 2), Some(17));
        assert_eq!(first_pass(2, 3), Some(33));
        assert_eq!(first_pass(3, 3), Some(31));
    }

    #[test]
    fn empty_grid_passes_vacuously() {
        let spec = SweepSpec { n_max: Some(5), ..SweepSpec::standard(SweepKind::Lemma26) };
        let r = inequality_sweep(&spec).unwrap();
        assert_eq!(r.tuples, 0);
        assert!(r.passed);
    }

    #[test]
    fn csv_header_and_rows() {
        let spec = SweepSpec { qs: vec![2], ts: vec![2], ..SweepSpec::standard(SweepKind::HPositive) };
        let csv = inequality_sweep(&spec).unwrap().to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("q,n,t,lhs,rhs,margin,pass"));
        assert!(lines.next().unwrap().starts_with("2,13,2,0,"));
    }
}
