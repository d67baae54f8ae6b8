//! Exhaustive verification at small parameters: maximum bounded-diameter and
//! admissible families by clique search, checking of the equality cases, and
//! exact inequality sweeps over parameter grids.

mod characterize;
mod clique;
mod sweep;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{self, ForbiddenClass, SubspaceFamily};
use crate::gfq::Field;
use crate::grassmann::{lattice_size, Budget, LatticeIndex};
use crate::qcount::{self, gauss_binom, BigCount};

pub use characterize::{expected_extremal_count, verify_characterization, Characterization, ExtremalCase};
pub use sweep::{inequality_sweep, SweepKind, SweepReport, SweepRow, SweepSpec};

/// Largest lattice the oracle accepts by default.
pub const DEFAULT_MAX_LATTICE: u64 = 400;
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(600);

#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub max_lattice: u64,
    pub timeout: Option<Duration>,
    pub threads: usize,
    /// Maximum number of witness families kept in a report.
    pub witness_cap: usize,
    /// Prune with the complementary-layer cap `|F(k)| + |F(n-k)| <= [n k]`.
    pub layer_cap: bool,
    /// Start from the canonical family of the expected optimum size.
    pub seed: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_lattice: DEFAULT_MAX_LATTICE,
            timeout: Some(DEFAULT_TIMEOUT),
            threads: 1,
            witness_cap: 10_000,
            layer_cap: true,
            seed: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchParameters {
    pub q: u64,
    pub n: usize,
    pub d: usize,
    pub class: Option<ForbiddenClass>,
    pub enumerate_all: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub parameters: SearchParameters,
    pub optimum: BigCount,
    /// False when the search stopped at the time limit; `optimum` is then a lower bound.
    pub proven_optimal: bool,
    /// False when no family meets the constraints.
    pub feasible: bool,
    pub witness_count: usize,
    pub perp_class_count: usize,
    pub witnesses: Vec<SubspaceFamily>,
    pub witnesses_truncated: bool,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
    pub threads: usize,
    /// The closed form the optimum is compared against, if it is defined here.
    pub reference_formula: Option<String>,
    pub reference_bound: Option<BigCount>,
    pub bound_match: bool,
    pub within_bound: Option<bool>,
    pub characterization_match: Option<bool>,
    pub diagnostics: Vec<String>,
}

impl SearchReport {
    /// Witnesses hold every maximum family.
    pub fn is_exhaustive(&self) -> bool {
        self.parameters.enumerate_all && self.proven_optimal && !self.witnesses_truncated
    }

    /// 0 verified, 1 mismatch, 2 resource cap hit.
    pub fn exit_code(&self) -> i32 {
        if !self.proven_optimal {
            2
        } else if self.parameters.class.is_none() && (!self.bound_match || self.characterization_match == Some(false)) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Lattice {
    field: Field,
    index: LatticeIndex,
}

fn load_lattice(q: u64, n: usize, config: &OracleConfig) -> Result<Lattice> {
    let field = Field::new(q)?;
    let size = lattice_size(q, n);
    if size.to_u64().is_none_or(|s| s > config.max_lattice) {
        return Err(Error::BudgetExceeded {
            what: format!("lattice of GF({q})^{n}"),
            required: size.to_string(),
            budget: config.max_lattice,
        });
    }
    let index = LatticeIndex::build(field, n, &Budget::items(config.max_lattice))?.with_distance_table(&Budget::default())?;
    Ok(Lattice { field, index })
}

fn diameter_graph(lat: &Lattice, d: usize, layer_cap: bool) -> clique::Problem {
    let (idx, n) = (&lat.index, lat.index.ambient_dim());
    let m = idx.len();
    let adj = (0..m).map(|i| clique::bits_from(m, (0..m).filter(|&j| j != i && idx.distance(i, j) <= d))).collect();
    let capped = layer_cap && n > d;
    let (group_of, caps) = if capped {
        let q = lat.field.q() as i64;
        let group_of = idx.subspaces().iter().map(|s| s.dim().min(n - s.dim())).collect();
        let caps = (0..=n / 2)
            .map(|k| gauss_binom(n as i64, k as i64, q as u64).to_u64().map_or(usize::MAX, |c| c as usize))
            .collect();
        (group_of, caps)
    } else {
        (vec![0; m], vec![usize::MAX])
    };
    clique::Problem { n: m, adj, group_of, caps }
}

fn indices(lat: &Lattice, f: &SubspaceFamily) -> Vec<usize> {
    f.iter().map(|s| lat.index.index_of(s).expect("member of the lattice")).collect()
}

fn family_of(lat: &Lattice, ids: &[usize]) -> SubspaceFamily {
    SubspaceFamily::new(lat.field, lat.index.ambient_dim(), ids.iter().map(|&i| lat.index.get(i).clone()))
        .expect("members share the ambient space")
}

/// L_t for even d, D_t(X) for odd d, the whole lattice once d >= n.
fn canonical_seed(lat: &Lattice, d: usize) -> Result<SubspaceFamily> {
    let (field, n) = (lat.field, lat.index.ambient_dim());
    let budget = Budget::items(lat.index.len() as u64);
    if d >= n {
        return SubspaceFamily::new(field, n, lat.index.subspaces().iter().cloned());
    }
    let t = d / 2;
    if d.is_multiple_of(2) {
        families::lower_ball(field, n, t, &budget)
    } else {
        families::canonical_double_ball(&lat.index.layer(1)[0], t, &budget)
    }
}

fn perp_classes(witnesses: &[SubspaceFamily]) -> usize {
    let mut reps: Vec<SubspaceFamily> = witnesses.iter().map(|f| f.clone().min(f.perp())).collect();
    reps.sort();
    reps.dedup();
    reps.len()
}

fn deadline(config: &OracleConfig) -> Option<Instant> {
    config.timeout.map(|t| Instant::now() + t)
}

/// Maximum families of diameter at most `d` in the subspace lattice of GF(q)^n.
pub fn max_diameter_family(q: u64, n: usize, d: usize, enumerate_all: bool, config: &OracleConfig) -> Result<SearchReport> {
    if d < 2 {
        return Err(Error::ParameterOutOfRange(format!("d = {d} must be at least 2")));
    }
    let start = Instant::now();
    let lat = load_lattice(q, n, config)?;
    let problem = diameter_graph(&lat, d, config.layer_cap);
    let seed = if config.seed { Some(indices(&lat, &canonical_seed(&lat, d)?)) } else { None };
    let opts = clique::Options {
        enumerate_all,
        threads: config.threads.max(1),
        deadline: deadline(config),
        witness_cap: config.witness_cap,
        seed,
        filter: None,
    };
    let out = clique::solve(&problem, &opts);

    let (reference_formula, reference_bound) = if n > d {
        (format!("kleitman_bound({n}, {d}, {q})"), qcount::kleitman_bound(n as i64, d as i64, q)?)
    } else {
        (format!("lattice_size({q}, {n})"), lattice_size(q, n))
    };
    let mut report = build_report(
        &lat,
        SearchParameters { q, n, d, class: None, enumerate_all },
        out,
        config,
        start,
    );
    report.bound_match = report.proven_optimal && report.optimum == reference_bound;
    report.within_bound = Some(report.optimum <= reference_bound);
    report.reference_formula = Some(reference_formula);
    report.reference_bound = Some(reference_bound);
    if recheck_witnesses(&mut report, None) && report.is_exhaustive() {
        let c = verify_characterization(&report)?;
        report.characterization_match = Some(c.matches);
        report.diagnostics.extend(c.diagnostics);
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn build_report(lat: &Lattice, parameters: SearchParameters, out: clique::Outcome, config: &OracleConfig, start: Instant) -> SearchReport {
    let witnesses: Vec<SubspaceFamily> = out.cliques.iter().map(|c| family_of(lat, c)).collect();
    let feasible = !witnesses.is_empty();
    SearchReport {
        parameters,
        optimum: if feasible { BigCount::from(out.best) } else { BigCount::zero() },
        proven_optimal: !out.timed_out,
        feasible,
        witness_count: if feasible { out.clique_count } else { 0 },
        perp_class_count: perp_classes(&witnesses),
        witnesses,
        witnesses_truncated: out.truncated,
        nodes_explored: out.nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
        threads: config.threads.max(1),
        reference_formula: None,
        reference_bound: None,
        bound_match: false,
        within_bound: None,
        characterization_match: None,
        diagnostics: Vec::new(),
    }
}

/// Re-verifies witnesses through the family predicates rather than the
/// search graph; any problem clears `bound_match`.
fn recheck_witnesses(report: &mut SearchReport, class: Option<(ForbiddenClass, usize)>) -> bool {
    let d = report.parameters.d;
    let size = report.optimum.to_u64().unwrap_or(u64::MAX) as usize;
    let budget = Budget::default();
    let mut problems = Vec::new();
    for (i, w) in report.witnesses.iter().enumerate() {
        if w.len() != size {
            problems.push(format!("witness {i} has {} members, optimum is {size}", w.len()));
        }
        if let Some((a, b)) = families::first_far_pair(w, d) {
            problems.push(format!("witness {i} has {a} and {b} at distance {}", a.distance(&b)));
        }
        if let Some((class, t)) = class {
            match families::is_admissible(w, class, t, &budget) {
                Ok(v) if v.is_admissible() => {}
                Ok(v) => problems.push(format!("witness {i} is not admissible: {v:?}")),
                Err(e) => problems.push(format!("witness {i}: {e}")),
            }
        }
    }
    let clean = problems.is_empty();
    if !clean {
        report.bound_match = false;
    }
    report.diagnostics.extend(problems);
    clean
}

struct AdmissibilityFilter<'a> {
    lat: &'a Lattice,
    class: ForbiddenClass,
    t: usize,
}

impl clique::LeafFilter for AdmissibilityFilter<'_> {
    fn reject(&self, clique: &[usize]) -> Option<clique::Bits> {
        let f = family_of(self.lat, clique);
        let budget = Budget::items(self.lat.index.len() as u64);
        let witness = families::containing_configuration(&f, self.class, self.t, &budget).expect("within budget")?;
        let h = witness.family(self.lat.field, self.lat.index.ambient_dim(), &budget).expect("within budget");
        Some(clique::bits_from(self.lat.index.len(), indices(self.lat, &h)))
    }
}

fn class_parameter(class: ForbiddenClass, d: usize) -> Result<usize> {
    let even = matches!(class, ForbiddenClass::AEven | ForbiddenClass::BEven);
    if d.is_multiple_of(2) != even {
        return Err(Error::ParameterOutOfRange(format!(
            "class {} needs {} d, got d = {d}",
            class.name(),
            if even { "even" } else { "odd" }
        )));
    }
    Ok(d / 2)
}

/// The closed form bounding admissible families of the class, and its value here.
pub fn admissible_reference(class: ForbiddenClass, q: u64, n: usize, t: usize) -> (String, Result<BigCount>) {
    let (n, ti) = (n as i64, t as i64);
    match class {
        ForbiddenClass::AEven => (format!("type_a_even_bound({n}, {t}, {q})"), qcount::type_a_even_bound(n, ti, q)),
        ForbiddenClass::BEven => (format!("type_b_even_bound({n}, {t}, {q})"), qcount::type_b_even_bound(n, ti, q)),
        ForbiddenClass::AOdd | ForbiddenClass::BOdd => {
            (format!("odd_stability_bound({n}, {t}, {q})"), qcount::odd_stability_bound(n, ti, q))
        }
    }
}

/// Maximum `(class, d)`-admissible families. At parameters this small the
/// result is an observation, compared against the closed form for reference.
pub fn max_admissible_family(
    q: u64,
    n: usize,
    d: usize,
    class: ForbiddenClass,
    enumerate_all: bool,
    config: &OracleConfig,
) -> Result<SearchReport> {
    let t = class_parameter(class, d)?;
    let start = Instant::now();
    let lat = load_lattice(q, n, config)?;
    let problem = diameter_graph(&lat, d, config.layer_cap);
    let filter = AdmissibilityFilter { lat: &lat, class, t };
    let opts = clique::Options {
        enumerate_all,
        threads: config.threads.max(1),
        deadline: deadline(config),
        witness_cap: config.witness_cap,
        seed: None,
        filter: Some(&filter),
    };
    let out = clique::solve(&problem, &opts);
    let clauses = out.clauses;
    let mut report = build_report(&lat, SearchParameters { q, n, d, class: Some(class), enumerate_all }, out, config, start);
    let (formula, value) = admissible_reference(class, q, n, t);
    match value {
        Ok(v) => {
            report.bound_match = report.proven_optimal && report.optimum == v;
            report.within_bound = Some(report.optimum <= v);
            report.reference_bound = Some(v);
        }
        Err(e) => report.diagnostics.push(format!("{formula} undefined: {e}")),
    }
    report.reference_formula = Some(formula);
    if !report.feasible {
        report.diagnostics.push("infeasible: every family of this diameter lies in a forbidden configuration".into());
    }
    report.diagnostics.push(format!("forbidden configurations used as clauses: {clauses}"));
    recheck_witnesses(&mut report, Some((class, t)));
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
