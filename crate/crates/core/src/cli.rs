//! The `qdiam` command line.
//!
//! Exit status: 0 when everything checked out, 1 when a check found a
//! mismatch, 2 when a budget or time limit was hit, 3 for invalid input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::families::{self, Admissibility, ForbiddenClass, SubspaceFamily};
use crate::gfq::{Field, SUPPORTED_ORDERS};
use crate::grassmann::{enumerate_layer, Budget};
use crate::oracle::{self, OracleConfig, SearchReport, SweepKind, SweepSpec};
use crate::qcount::{evaluate, BoundKind, BoundParams};
use crate::subspace::Subspace;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qdiam", version, about = "Bounded-diameter families in the subspace lattice of F_q^n")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for enumeration and search.
    #[arg(long, default_value_t = 1, global = true)]
    pub threads: usize,
    /// Largest lattice the oracle will search.
    #[arg(long, env = "QDIAM_MAX_LATTICE", global = true)]
    pub max_lattice: Option<u64>,
    /// Largest number of subspaces any enumeration may produce.
    #[arg(long, global = true)]
    pub max_items: Option<u64>,
    /// Wall-clock limit for a search, in seconds.
    #[arg(long, env = "QDIAM_TIMEOUT_SECS", global = true)]
    pub timeout_secs: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a closed-form bound exactly.
    Bound(BoundArgs),
    /// Build a named family and write it as a family file.
    Construct(ConstructArgs),
    /// Report diameter, layers, intersection and admissibility of a family file.
    Check(CheckArgs),
    /// List the subspaces of one dimension.
    Enumerate(EnumerateArgs),
    /// Exhaustive search for maximum families.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Exact comparison of two closed forms over a parameter grid.
    Sweep(SweepArgs),
    /// Run the built-in invariant checks.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BoundName {
    Kleitman,
    #[value(name = "typeA-even", alias = "type-a-even")]
    TypeAEven,
    #[value(name = "odd-stability")]
    OddStability,
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "typeB-even", alias = "type-b-even")]
    TypeBEven,
    Ekr,
    Nontrivial,
    #[value(name = "complementary-pair")]
    ComplementaryPair,
}

impl From<BoundName> for BoundKind {
    fn from(b: BoundName) -> BoundKind {
        match b {
            BoundName::Kleitman => BoundKind::Kleitman,
            BoundName::TypeAEven => BoundKind::TypeAEven,
            BoundName::OddStability => BoundKind::OddStability,
            BoundName::H => BoundKind::H,
            BoundName::TypeBEven => BoundKind::TypeBEven,
            BoundName::Ekr => BoundKind::Ekr,
            BoundName::Nontrivial => BoundKind::Nontrivial,
            BoundName::ComplementaryPair => BoundKind::ComplementaryPair,
        }
    }
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    pub kind: BoundName,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: i64,
    #[arg(long)]
    pub d: Option<i64>,
    #[arg(long)]
    pub t: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    #[arg(long)]
    pub s: Option<i64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyName {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "D", alias = "d")]
    D,
    Ball,
    #[value(name = "double-ball")]
    DoubleBall,
    Star,
    #[value(name = "HM", alias = "hm")]
    Hm,
    #[value(name = "HM-star", alias = "hm-star")]
    HmStar,
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "K-star", alias = "k-star")]
    KStar,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub kind: FamilyName,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// A line, as `q:n:1:row`.
    #[arg(long)]
    pub x: Option<Subspace>,
    #[arg(long)]
    pub y: Option<Subspace>,
    #[arg(long)]
    pub center: Option<Subspace>,
    #[arg(long)]
    pub center2: Option<Subspace>,
    /// Write the family file here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ClassName {
    #[value(name = "A-even", alias = "a-even")]
    AEven,
    #[value(name = "B-even", alias = "b-even")]
    BEven,
    #[value(name = "A-odd", alias = "a-odd")]
    AOdd,
    #[value(name = "B-odd", alias = "b-odd")]
    BOdd,
}

impl From<ClassName> for ForbiddenClass {
    fn from(c: ClassName) -> ForbiddenClass {
        match c {
            ClassName::AEven => ForbiddenClass::AEven,
            ClassName::BEven => ForbiddenClass::BEven,
            ClassName::AOdd => ForbiddenClass::AOdd,
            ClassName::BOdd => ForbiddenClass::BOdd,
        }
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub file: PathBuf,
    #[arg(long, value_enum)]
    pub class: Option<ClassName>,
    /// Radius parameter: d = 2t for the even classes, 2t+1 for the odd ones.
    #[arg(long)]
    pub t: Option<usize>,
    /// Diameter used for the intersection checks; defaults to the class's d,
    /// then to the family's own diameter.
    #[arg(long)]
    pub d: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Only print the number of subspaces.
    #[arg(long)]
    pub count: bool,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Largest families of diameter at most d.
    Max(OracleArgs),
    /// Largest admissible families for a forbidden class.
    Admissible(AdmissibleArgs),
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// Collect every maximum family.
    #[arg(long)]
    pub all: bool,
    /// Keep at most this many witnesses in the report.
    #[arg(long, default_value_t = 10_000)]
    pub witness_cap: usize,
    /// Search without the complementary-layer cap.
    #[arg(long)]
    pub no_layer_cap: bool,
}

#[derive(Debug, Args)]
pub struct AdmissibleArgs {
    #[command(flatten)]
    pub search: OracleArgs,
    #[arg(long, value_enum)]
    pub class: ClassName,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    pub kind: SweepName,
    /// Include every supported q up to this value.
    #[arg(long)]
    pub qmax: Option<u64>,
    #[arg(long)]
    pub nmax: Option<i64>,
    #[arg(long)]
    pub kmax: Option<i64>,
    /// Comma separated t values.
    #[arg(long, value_delimiter = ',')]
    pub t: Vec<i64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SweepName {
    Lemma26,
    HPositive,
    TypebBelowTypea,
    NontrivialBelowEkr,
}

impl From<SweepName> for SweepKind {
    fn from(s: SweepName) -> SweepKind {
        match s {
            SweepName::Lemma26 => SweepKind::Lemma26,
            SweepName::HPositive => SweepKind::HPositive,
            SweepName::TypebBelowTypea => SweepKind::TypebBelowTypea,
            SweepName::NontrivialBelowEkr => SweepKind::NontrivialBelowEkr,
        }
    }
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Bound(a) => cmd_bound(cli, a, out),
        Command::Construct(a) => cmd_construct(cli, a, out),
        Command::Check(a) => cmd_check(cli, a, out),
        Command::Enumerate(a) => cmd_enumerate(cli, a, out),
        Command::Oracle(OracleCommand::Max(a)) => cmd_oracle(cli, a, None, out),
        Command::Oracle(OracleCommand::Admissible(a)) => cmd_oracle(cli, &a.search, Some(a.class.into()), out),
        Command::Sweep(a) => cmd_sweep(cli, a, out),
        Command::Selftest(a) => cmd_selftest(cli, a, out),
    }
}

fn budget(cli: &Cli) -> Budget {
    cli.max_items.map_or_else(Budget::default, Budget::items)
}

fn print_json(out: &mut dyn Write, v: &impl serde::Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"))?;
    Ok(())
}

pub fn cmd_bound(cli: &Cli, a: &BoundArgs, out: &mut dyn Write) -> Result<i32> {
    let params = BoundParams { q: a.q, n: a.n, d: a.d, t: a.t, k: a.k, s: a.s };
    Field::new(a.q)?;
    let e = evaluate(a.kind.into(), params)?;
    match cli.format {
        Format::Json => print_json(out, &e)?,
        Format::Csv => {
            writeln!(out, "kind,value,in_hypothesis_range,hypothesis")?;
            writeln!(out, "{},{},{},\"{}\"", serde_json::to_value(e.kind).unwrap().as_str().unwrap(), e.value, e.in_hypothesis_range, e.hypothesis)?;
        }
        Format::Text => {
            writeln!(out, "{}", e.value)?;
            writeln!(out, "hypothesis range ({}): {}", e.hypothesis, if e.in_hypothesis_range { "satisfied" } else { "not satisfied" })?;
        }
    }
    Ok(EXIT_OK)
}

fn ambient(a: &ConstructArgs) -> Result<(Field, usize)> {
    let given = [&a.x, &a.y, &a.center].into_iter().flatten().next();
    let q = a.q.or(given.map(|s| s.field().q() as u64));
    let n = a.n.or(given.map(Subspace::ambient_dim));
    match (q, n) {
        (Some(q), Some(n)) => Ok((Field::new(q)?, n)),
        _ => Err(Error::ParameterOutOfRange("--q and --n are required".into())),
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::ParameterOutOfRange(format!("--{flag} is required")))
}

fn in_ambient(s: Subspace, field: Field, n: usize, flag: &str) -> Result<Subspace> {
    if s.field() != field || s.ambient_dim() != n {
        return Err(Error::InvalidConfiguration(format!("--{flag} {s} is not a subspace of GF({})^{n}", field.q())));
    }
    Ok(s)
}

pub fn build_family(a: &ConstructArgs, budget: &Budget) -> Result<SubspaceFamily> {
    let (field, n) = ambient(a)?;
    let sub = |v: &Option<Subspace>, flag: &str| need(v, flag).and_then(|s| in_ambient(s, field, n, flag));
    let first_line = || -> Result<Subspace> {
        match &a.x {
            Some(x) => in_ambient(x.clone(), field, n, "x"),
            None => enumerate_layer(field, n, 1, budget)?.next().ok_or_else(|| Error::ParameterOutOfRange("n must be positive".into())),
        }
    };
    match a.kind {
        FamilyName::L => families::lower_ball(field, n, need(&a.t, "t")?, budget),
        FamilyName::U => families::upper_ball(field, n, need(&a.t, "t")?, budget),
        FamilyName::D => families::canonical_double_ball(&first_line()?, need(&a.t, "t")?, budget),
        FamilyName::Ball => families::ball(&sub(&a.center, "center")?, need(&a.r, "r")?, budget),
        FamilyName::DoubleBall => {
            families::double_ball(&sub(&a.center, "center")?, &sub(&a.center2, "center2")?, need(&a.r, "r")?, budget)
        }
        FamilyName::Star => families::star(need(&a.k, "k")?, &first_line()?, budget),
        FamilyName::Hm | FamilyName::K => {
            let y = sub(&a.y, "y")?;
            if let Some(t) = a.t {
                if y.dim() != t + 1 {
                    return Err(Error::InvalidConfiguration(format!("--y must have dimension t + 1 = {}, got {}", t + 1, y.dim())));
                }
            }
            let x = sub(&a.x, "x")?;
            if matches!(a.kind, FamilyName::Hm) {
                families::hm_family(&x, &y, budget)
            } else {
                families::k_family(&x, &y, budget)
            }
        }
        FamilyName::HmStar => families::hm_star3(&sub(&a.y, "y")?, budget),
        FamilyName::KStar => families::k_star3(&sub(&a.y, "y")?, budget),
    }
}

fn summary_json(f: &SubspaceFamily) -> serde_json::Value {
    json!({
        "q": f.field().q(),
        "n": f.ambient_dim(),
        "size": f.len().to_string(),
        "diameter": families::diameter(f).ok(),
        "support": f.support(),
        "layer_sizes": f.layer_sizes(),
    })
}

pub fn cmd_construct(cli: &Cli, a: &ConstructArgs, out: &mut dyn Write) -> Result<i32> {
    let f = build_family(a, &budget(cli))?;
    let text = f.to_file_string();
    if let Some(path) = &a.output {
        fs::write(path, &text)?;
    }
    let diameter = families::diameter(&f).map_or("-".to_string(), |d| d.to_string());
    match cli.format {
        Format::Json => {
            let mut v = summary_json(&f);
            if a.output.is_none() {
                v["family"] = json!(text);
            }
            print_json(out, &v)?;
        }
        Format::Csv => {
            writeln!(out, "size,diameter,support")?;
            writeln!(out, "{},{},{}", f.len(), diameter, join(&f.support(), " "))?;
        }
        Format::Text => {
            if a.output.is_none() {
                out.write_all(text.as_bytes())?;
            }
            writeln!(out, "# size {} diameter {} support {}", f.len(), diameter, join(&f.support(), " "))?;
        }
    }
    Ok(EXIT_OK)
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn read_family(path: &PathBuf) -> Result<SubspaceFamily> {
    let file = fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    SubspaceFamily::read_from(std::io::BufReader::new(file))
}

/// For every pair of occupied layers, whether the intersection dimension
/// forced by diameter `d` holds.
fn layer_intersections(f: &SubspaceFamily, d: usize) -> Vec<(usize, usize, usize, bool)> {
    let supp = f.support();
    let mut rows = Vec::new();
    for (a, &i) in supp.iter().enumerate() {
        for &j in &supp[a..] {
            let s = families::forced_cross_intersection(i, j, d);
            let holds = if i == j {
                families::is_s_intersecting(f.layer(i), s).unwrap_or(true)
            } else {
                families::is_cross_intersecting(f.layer(i), f.layer(j), s).unwrap_or(true)
            };
            rows.push((i, j, s, holds));
        }
    }
    rows
}

pub fn cmd_check(cli: &Cli, a: &CheckArgs, out: &mut dyn Write) -> Result<i32> {
    let f = read_family(&a.file)?;
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let class: Option<ForbiddenClass> = a.class.map(Into::into);
    let diameter = families::diameter(&f)?;
    let admissibility = match class {
        Some(c) => {
            let t = need(&a.t, "t")?;
            Some((c, t, families::is_admissible(&f, c, t, &budget(cli))?))
        }
        None => None,
    };
    let d = a.d.or(admissibility.as_ref().map(|(c, t, _)| c.diameter(*t))).unwrap_or(diameter);
    let inter = layer_intersections(&f, d);
    let inter_ok = inter.iter().all(|r| r.3);
    let mut code = if inter_ok || diameter > d { EXIT_OK } else { EXIT_MISMATCH };
    if let Some((_, _, v)) = &admissibility {
        if !v.is_admissible() {
            code = EXIT_MISMATCH;
        }
    }
    match cli.format {
        Format::Json => {
            let mut v = summary_json(&f);
            v["dim_spread"] = json!(families::dim_spread(&f)?);
            v["min_supp_norm"] = json!(families::min_supp_norm(&f)?);
            v["intersection_d"] = json!(d);
            v["intersections"] = json!(inter
                .iter()
                .map(|(i, j, s, ok)| json!({"layers": [i, j], "required": s, "holds": ok}))
                .collect::<Vec<_>>());
            if let Some((c, t, verdict)) = &admissibility {
                v["class"] = json!(c);
                v["t"] = json!(t);
                v["admissibility"] = serde_json::to_value(verdict).expect("serializable");
            }
            print_json(out, &v)?;
        }
        Format::Csv => {
            writeln!(out, "layer_i,layer_j,required,holds")?;
            for (i, j, s, ok) in &inter {
                writeln!(out, "{i},{j},{s},{ok}")?;
            }
        }
        Format::Text => {
            writeln!(out, "family in GF({})^{}: {} members", f.field().q(), f.ambient_dim(), f.len())?;
            writeln!(out, "layer sizes: {}", join(&f.layer_sizes(), " "))?;
            writeln!(out, "support: {}", join(&f.support(), " "))?;
            writeln!(out, "diameter: {diameter}")?;
            writeln!(out, "dim spread: {}", families::dim_spread(&f)?)?;
            writeln!(out, "min supp norm: {}", families::min_supp_norm(&f)?)?;
            let bad: Vec<String> = inter.iter().filter(|r| !r.3).map(|(i, j, s, _)| format!("({i},{j}) needs {s}")).collect();
            if bad.is_empty() {
                writeln!(out, "layer intersections forced by d = {d}: all hold")?;
            } else {
                writeln!(out, "layer intersections forced by d = {d}: violated at {}", bad.join(", "))?;
            }
            if let Some((c, t, verdict)) = &admissibility {
                let what = match verdict {
                    Admissibility::Admissible => "admissible".to_string(),
                    Admissibility::DiameterExceeds { diameter, limit } => format!("inadmissible: diameter {diameter} > {limit}"),
                    Admissibility::Contained { witness } => format!("inadmissible: contained in {witness}"),
                };
                writeln!(out, "{} (t = {t}): {what}", c.name())?;
            }
        }
    }
    Ok(code)
}

pub fn cmd_enumerate(cli: &Cli, a: &EnumerateArgs, out: &mut dyn Write) -> Result<i32> {
    let field = Field::new(a.q)?;
    let b = budget(cli);
    if a.count {
        let c = crate::qcount::gauss_binom(a.n as i64, a.k as i64, a.q);
        match cli.format {
            Format::Json => print_json(out, &json!({"q": a.q, "n": a.n, "k": a.k, "count": c}))?,
            _ => writeln!(out, "{c}")?,
        }
        return Ok(EXIT_OK);
    }
    let layer = if cli.threads > 1 {
        crate::grassmann::enumerate_layer_par(field, a.n, a.k, cli.threads, &b)?
    } else {
        enumerate_layer(field, a.n, a.k, &b)?.collect()
    };
    match cli.format {
        Format::Json => print_json(out, &layer.iter().map(ToString::to_string).collect::<Vec<_>>())?,
        _ => crate::grassmann::dump(out, &layer)?,
    }
    Ok(EXIT_OK)
}

pub fn oracle_config(cli: &Cli, a: &OracleArgs) -> OracleConfig {
    let mut c = OracleConfig { threads: cli.threads.max(1), witness_cap: a.witness_cap, layer_cap: !a.no_layer_cap, ..OracleConfig::default() };
    if let Some(m) = cli.max_lattice {
        c.max_lattice = m;
    }
    if let Some(s) = cli.timeout_secs {
        c.timeout = Some(Duration::from_secs(s));
    }
    c
}

fn print_report(cli: &Cli, r: &SearchReport, out: &mut dyn Write) -> Result<()> {
    match cli.format {
        Format::Json => writeln!(out, "{}", r.to_json())?,
        Format::Csv => {
            writeln!(out, "q,n,d,class,optimum,proven_optimal,witness_count,perp_class_count,bound_match,characterization_match,nodes,elapsed_ms")?;
            let p = &r.parameters;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                p.q,
                p.n,
                p.d,
                p.class.map_or("", |c| c.name()),
                r.optimum,
                r.proven_optimal,
                r.witness_count,
                r.perp_class_count,
                r.bound_match,
                r.characterization_match.map_or(String::new(), |b| b.to_string()),
                r.nodes_explored,
                r.elapsed_ms
            )?;
        }
        Format::Text => {
            let p = &r.parameters;
            let class = p.class.map_or(String::new(), |c| format!(", class {}", c.name()));
            writeln!(out, "GF({})^{}, d = {}{class}", p.q, p.n, p.d)?;
            let status = if r.proven_optimal { "optimal" } else { "best found before the time limit" };
            writeln!(out, "optimum: {} ({status})", r.optimum)?;
            if !r.feasible {
                writeln!(out, "infeasible")?;
            }
            if let (Some(f), Some(v)) = (&r.reference_formula, &r.reference_bound) {
                writeln!(out, "reference: {f} = {v}, match {}", r.bound_match)?;
            }
            writeln!(out, "maximum families: {} ({} up to perp)", r.witness_count, r.perp_class_count)?;
            if let Some(c) = r.characterization_match {
                writeln!(out, "characterization match: {c}")?;
            }
            writeln!(out, "nodes: {}, elapsed: {} ms, threads: {}", r.nodes_explored, r.elapsed_ms, r.threads)?;
            for d in &r.diagnostics {
                writeln!(out, "note: {d}")?;
            }
        }
    }
    Ok(())
}

pub fn cmd_oracle(cli: &Cli, a: &OracleArgs, class: Option<ForbiddenClass>, out: &mut dyn Write) -> Result<i32> {
    let config = oracle_config(cli, a);
    let report = match class {
        None => oracle::max_diameter_family(a.q, a.n, a.d, a.all, &config)?,
        Some(c) => oracle::max_admissible_family(a.q, a.n, a.d, c, a.all, &config)?,
    };
    print_report(cli, &report, out)?;
    Ok(report.exit_code())
}

pub fn cmd_sweep(cli: &Cli, a: &SweepArgs, out: &mut dyn Write) -> Result<i32> {
    let kind: SweepKind = a.kind.into();
    let mut spec = SweepSpec::standard(kind);
    if let Some(qmax) = a.qmax {
        spec.qs = SUPPORTED_ORDERS.iter().map(|&q| q as u64).filter(|&q| q <= qmax).collect();
    }
    if a.nmax.is_some() {
        spec.n_max = a.nmax;
    }
    if let Some(k) = a.kmax {
        spec.k_max = k;
    }
    if !a.t.is_empty() {
        spec.ts = a.t.clone();
    }
    let r = oracle::inequality_sweep(&spec)?;
    match cli.format {
        Format::Json => print_json(out, &r)?,
        Format::Csv => out.write_all(r.to_csv().as_bytes())?,
        Format::Text => {
            writeln!(out, "{}: {} tuples, {} failures", kind.name(), r.tuples, r.failures)?;
            for row in r.failing().take(20) {
                let params: Vec<String> = r.param_names.iter().zip(&row.params).map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(out, "fail {}: lhs {} rhs {} margin {}", params.join(" "), row.lhs, row.rhs, row.margin)?;
            }
            writeln!(out, "{}", if r.passed { "pass" } else { "FAIL" })?;
        }
    }
    Ok(if r.passed { EXIT_OK } else { EXIT_MISMATCH })
}

pub fn cmd_selftest(cli: &Cli, a: &SelftestArgs, out: &mut dyn Write) -> Result<i32> {
    let checks = crate::selftest::run(a.seed);
    match cli.format {
        Format::Json => print_json(out, &checks)?,
        _ => {
            for c in &checks {
                if c.passed {
                    writeln!(out, "ok   {}", c.name)?;
                } else {
                    writeln!(out, "FAIL {}: {}", c.name, c.detail)?;
                }
            }
        }
    }
    Ok(if checks.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_MISMATCH })
}
