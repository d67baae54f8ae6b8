//! Matching exhaustive witness sets against the extremal families.

use num_bigint::BigUint;
use serde::Serialize;

use super::SearchReport;
use crate::error::{Error, Result};
use crate::families::{self, SubspaceFamily};
use crate::grassmann::Budget;
use crate::qcount::{gauss_binom, BigCount};

/// Which description of the maximum families applies at (n, d).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremalCase {
    /// n = d + 1, d = 2t: each complementary layer pair is split, one full, one empty.
    SplitEven,
    /// n = d + 1, d = 2t + 1: the same splits plus a maximum 1-intersecting middle layer.
    SplitOdd,
    /// n >= d + 2, d = 2t: L_t or U_t.
    Lower,
    /// n >= d + 2, d = 2t + 1: D_t(X) or its perp.
    CanonicalDouble,
    /// d >= n: the whole lattice.
    Complete,
}

impl ExtremalCase {
    pub fn at(n: usize, d: usize) -> ExtremalCase {
        match (n.cmp(&(d + 1)), d % 2) {
            (std::cmp::Ordering::Less, _) => ExtremalCase::Complete,
            (std::cmp::Ordering::Equal, 0) => ExtremalCase::SplitEven,
            (std::cmp::Ordering::Equal, _) => ExtremalCase::SplitOdd,
            (_, 0) => ExtremalCase::Lower,
            _ => ExtremalCase::CanonicalDouble,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Characterization {
    pub case: ExtremalCase,
    pub matches: bool,
    pub expected_count: BigCount,
    pub found_count: usize,
    pub diagnostics: Vec<String>,
}

/// Number of maximum families of diameter at most `d` in GF(q)^n.
pub fn expected_extremal_count(q: u64, n: usize, d: usize) -> BigCount {
    let t = d / 2;
    let lines = gauss_binom(n as i64, 1, q).0;
    let splits = BigUint::from(1u8) << (t + 1);
    BigCount(match ExtremalCase::at(n, d) {
        ExtremalCase::Complete => BigUint::from(1u8),
        ExtremalCase::Lower => BigUint::from(2u8),
        ExtremalCase::CanonicalDouble => lines * 2u8,
        ExtremalCase::SplitEven => splits,
        // middle layer: a star or the (t+1)-spaces of a hyperplane
        ExtremalCase::SplitOdd => splits * lines * 2u8,
    })
}

fn split_layers(w: &SubspaceFamily, q: u64, n: usize, t: usize) -> std::result::Result<(), String> {
    let sizes = w.layer_sizes();
    for k in 0..=t {
        let full = gauss_binom(n as i64, k as i64, q);
        let (lo, hi) = (sizes[k], sizes[n - k]);
        let ok = (full == lo && hi == 0) || (lo == 0 && full == hi);
        if !ok {
            return Err(format!("layers {k} and {} have sizes {lo} and {hi}, not a split of {full}", n - k));
        }
    }
    Ok(())
}

fn check_witness(w: &SubspaceFamily, case: ExtremalCase, q: u64, n: usize, d: usize) -> std::result::Result<(), String> {
    let t = d / 2;
    let budget = Budget::default();
    let field = w.field();
    match case {
        ExtremalCase::Complete => {
            let total: usize = (0..=n).map(|k| gauss_binom(n as i64, k as i64, q).to_u64().unwrap_or(0) as usize).sum();
            (w.len() == total).then_some(()).ok_or_else(|| "complete case: witness is not the whole lattice".to_string())
        }
        ExtremalCase::Lower => {
            let l = families::lower_ball(field, n, t, &budget).map_err(|e| e.to_string())?;
            (*w == l || w.perp() == l).then_some(()).ok_or_else(|| format!("case L_t: witness is neither L_{t} nor U_{t}"))
        }
        ExtremalCase::CanonicalDouble => {
            for g in [w.clone(), w.perp()] {
                let top = g.layer(t + 1);
                let Some(first) = top.first() else { continue };
                let mut x = first.clone();
                for a in &top[1..] {
                    x = x.intersect(a).map_err(|e| e.to_string())?;
                }
                if x.dim() == 1 && families::canonical_double_ball(&x, t, &budget).map_err(|e| e.to_string())? == g {
                    return Ok(());
                }
            }
            Err(format!("case D_t(X): witness is not D_{t}(X) or its perp for any line X"))
        }
        ExtremalCase::SplitEven => split_layers(w, q, n, t).map_err(|e| format!("split case: {e}")),
        ExtremalCase::SplitOdd => {
            split_layers(w, q, n, t).map_err(|e| format!("split case: {e}"))?;
            let middle = w.layer(t + 1);
            let want = gauss_binom(n as i64 - 1, t as i64, q);
            if want != middle.len() {
                return Err(format!("split case: middle layer has {} members, expected {want}", middle.len()));
            }
            match families::is_s_intersecting(middle, 1) {
                Ok(true) => Ok(()),
                _ => Err("split case: middle layer is not 1-intersecting".to_string()),
            }
        }
    }
}

/// Checks every witness of an exhaustive maximum-diameter report against the
/// equality cases and compares the number of witnesses with the census.
pub fn verify_characterization(report: &SearchReport) -> Result<Characterization> {
    let p = &report.parameters;
    if p.class.is_some() {
        return Err(Error::InvalidConfiguration("characterization applies to diameter searches only".into()));
    }
    if !report.is_exhaustive() {
        return Err(Error::NotExhaustive);
    }
    let case = ExtremalCase::at(p.n, p.d);
    let expected_count = expected_extremal_count(p.q, p.n, p.d);
    let mut diagnostics = Vec::new();
    if !report.bound_match {
        diagnostics.push(format!("optimum {} differs from the formula", report.optimum));
    }
    for (i, w) in report.witnesses.iter().enumerate() {
        if let Err(msg) = check_witness(w, case, p.q, p.n, p.d) {
            diagnostics.push(format!("witness {i}: {msg}"));
        }
    }
    let found_count = report.witnesses.len();
    if expected_count != found_count {
        diagnostics.push(format!("census: {found_count} maximum families, expected {expected_count}"));
    }
    let mut sorted = report.witnesses.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != found_count {
        diagnostics.push("census: duplicate witnesses".into());
    }
    Ok(Characterization { case, matches: diagnostics.is_empty(), expected_count, found_count, diagnostics })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_selection() {
        assert_eq!(ExtremalCase::at(3, 2), ExtremalCase::SplitEven);
        assert_eq!(ExtremalCase::at(4, 3), ExtremalCase::SplitOdd);
        assert_eq!(ExtremalCase::at(4, 2), ExtremalCase::Lower);
        assert_eq!(ExtremalCase::at(5, 3), ExtremalCase::CanonicalDouble);
        assert_eq!(ExtremalCase::at(4, 4), ExtremalCase::Complete);
    }

    #[test]
    fn census_counts() {
        assert_eq!(expected_extremal_count(2, 3, 2), 4u64);
        assert_eq!(expected_extremal_count(2, 4, 2), 2u64);
        assert_eq!(expected_extremal_count(2, 4, 3), 120u64);
        assert_eq!(expected_extremal_count(2, 5, 3), 62u64);
        assert_eq!(expected_extremal_count(3, 3, 2), 4u64);
        assert_eq!(expected_extremal_count(2, 5, 4), 8u64);
    }
}
