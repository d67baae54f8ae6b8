//! A quick run of the library's invariants, used by `qdiam selftest`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::families::{self, ForbiddenClass};
use crate::gfq::{Field, SUPPORTED_ORDERS};
use crate::grassmann::{enumerate_layer, Budget, LatticeIndex};
use crate::oracle::{self, OracleConfig, SweepKind, SweepSpec};
use crate::qcount::{count_profile, gauss_binom, kleitman_bound, nontrivial_intersecting_bound, type_a_even_bound};
use crate::subspace::Subspace;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, f: impl FnOnce() -> crate::Result<Option<String>>) -> Check {
    match f() {
        Ok(None) => Check { name, passed: true, detail: String::new() },
        Ok(Some(problem)) => Check { name, passed: false, detail: problem },
        Err(e) => Check { name, passed: false, detail: e.to_string() },
    }
}

fn field_axioms() -> crate::Result<Option<String>> {
    for q in SUPPORTED_ORDERS {
        let f = Field::new(q as u64)?;
        for x in 0..q {
            for y in 0..q {
                for z in 0..q {
                    if f.mul(x, f.add(y, z)) != f.add(f.mul(x, y), f.mul(x, z)) {
                        return Ok(Some(format!("GF({q}): distributivity fails at ({x},{y},{z})")));
                    }
                }
            }
            if x != 0 && f.mul(x, f.inv(x)?) != 1 {
                return Ok(Some(format!("GF({q}): bad inverse of {x}")));
            }
        }
    }
    Ok(None)
}

fn metric_exhaustive() -> crate::Result<Option<String>> {
    let f2 = Field::new(2)?;
    for n in 1..=4 {
        let lat = LatticeIndex::build(f2, n, &Budget::default())?;
        let all = lat.subspaces();
        for a in all {
            if a.perp().perp() != *a {
                return Ok(Some(format!("perp is not an involution at {a}")));
            }
            for b in all {
                let d = a.distance(b);
                if d != b.distance(a) || (d == 0) != (a == b) || d != a.perp().distance(&b.perp()) {
                    return Ok(Some(format!("metric or isometry fails at {a}, {b}")));
                }
                if a.contains_unchecked(b) && d != a.dim() - b.dim() {
                    return Ok(Some(format!("nested pair {a} >= {b} has distance {d}")));
                }
                if n <= 3 {
                    if let Some(c) = all.iter().find(|c| d > a.distance(c) + c.distance(b)) {
                        return Ok(Some(format!("triangle inequality fails at {a}, {c}, {b}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn metric_random(seed: u64) -> crate::Result<Option<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..2000 {
        let q = if rng.gen_bool(0.5) { 2 } else { 3 };
        let field = Field::new(q)?;
        let n = rng.gen_range(1..=8);
        let pick = |rng: &mut ChaCha8Rng| {
            let gens = rng.gen_range(0..=n);
            Subspace::random(field, n, gens, rng)
        };
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        if a.distance(&b) > a.distance(&c) + c.distance(&b) {
            return Ok(Some(format!("triangle inequality fails at {a}, {c}, {b}")));
        }
        if a.perp().distance(&b.perp()) != a.distance(&b) {
            return Ok(Some(format!("perp is not an isometry at {a}, {b}")));
        }
        if a.join_dim(&b) + a.meet_dim(&b) != a.dim() + b.dim() {
            return Ok(Some(format!("dimension formula fails at {a}, {b}")));
        }
    }
    Ok(None)
}

fn profiles() -> crate::Result<Option<String>> {
    for q in [2u64, 3] {
        let field = Field::new(q)?;
        let n = 4;
        for k in 0..=n {
            let a = enumerate_layer(field, n, k, &Budget::default())?.last().expect("layer is nonempty");
            for l in 0..=n {
                let mut hist = vec![0u64; n + 1];
                for b in enumerate_layer(field, n, l, &Budget::default())? {
                    hist[a.meet_dim(&b)] += 1;
                }
                for (j, &h) in hist.iter().enumerate() {
                    if count_profile(n as i64, k as i64, l as i64, j as i64, q) != h {
                        return Ok(Some(format!("profile q={q} n={n} k={k} l={l} j={j}: counted {h}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn constructions() -> crate::Result<Option<String>> {
    let b = Budget::default();
    let f2 = Field::new(2)?;
    let n = 6;
    let x = enumerate_layer(f2, n, 1, &b)?.next().expect("a line");
    let pairs = [
        ("L_2", families::lower_ball(f2, n, 2, &b)?.len(), kleitman_bound(6, 4, 2)?),
        ("D_1(X)", families::canonical_double_ball(&x, 1, &b)?.len(), kleitman_bound(6, 3, 2)?),
        ("B(X,2)", families::ball(&x, 2, &b)?.len(), type_a_even_bound(6, 2, 2)?),
    ];
    for (name, size, formula) in pairs {
        if formula != size {
            return Ok(Some(format!("|{name}| = {size}, formula gives {formula}")));
        }
    }
    let n = 7;
    let x = Subspace::from_generators(f2, n, &[[1u8, 0, 0, 0, 0, 0, 0]])?;
    let y = Subspace::from_generators(f2, n, &[[0u8, 1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0]])?;
    let hm = families::hm_family(&x, &y, &b)?;
    let want = nontrivial_intersecting_bound(7, 3, 1, 2)?;
    if want != hm.len() {
        return Ok(Some(format!("|HM(7,3)| = {}, formula gives {want}", hm.len())));
    }
    let bx = families::ball(&Subspace::from_generators(f2, 6, &[[1u8, 0, 0, 0, 0, 0]])?, 2, &b)?;
    if !families::is_admissible(&bx, ForbiddenClass::AEven, 2, &b)?.is_admissible() {
        return Ok(Some("B(X,2) is not A-even admissible".into()));
    }
    Ok(None)
}

fn oracle_small() -> crate::Result<Option<String>> {
    for (q, n, d) in [(2, 3, 2), (2, 4, 2), (2, 4, 3)] {
        let r = oracle::max_diameter_family(q, n, d, true, &OracleConfig::default())?;
        if !r.bound_match || r.characterization_match != Some(true) {
            return Ok(Some(format!("oracle (q={q}, n={n}, d={d}): {:?}", r.diagnostics)));
        }
    }
    Ok(None)
}

fn sweeps() -> crate::Result<Option<String>> {
    for kind in [SweepKind::Lemma26, SweepKind::HPositive, SweepKind::NontrivialBelowEkr] {
        let r = oracle::inequality_sweep(&SweepSpec::standard(kind))?;
        let first = r.failing().next().map(|row| format!("{} fails at {:?}", kind.name(), row.params));
        if first.is_some() {
            return Ok(first);
        }
    }
    Ok(None)
}

fn gaussian_sums() -> crate::Result<Option<String>> {
    for q in [2u64, 3, 4] {
        for n in 0..=10i64 {
            for k in 0..=n {
                for l in 0..=n {
                    let total: num_bigint::BigUint = (0..=k.min(l)).map(|j| count_profile(n, k, l, j, q).0).sum();
                    if total != gauss_binom(n, l, q).0 {
                        return Ok(Some(format!("profile sum q={q} n={n} k={k} l={l}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Runs every check; `seed` drives the randomized ones.
pub fn run(seed: u64) -> Vec<Check> {
    vec![
        check("field axioms", field_axioms),
        check("metric and perp, exhaustive n <= 4", metric_exhaustive),
        check("metric and perp, random n <= 8", || metric_random(seed)),
        check("intersection profiles", profiles),
        check("profile sums", gaussian_sums),
        check("construction sizes", constructions),
        check("oracle at n <= 4", oracle_small),
        check("inequality sweeps", sweeps),
    ]
}
