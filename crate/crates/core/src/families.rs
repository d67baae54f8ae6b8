//! Families of subspaces: the named constructions, their metric and
//! intersection predicates, and admissibility against forbidden classes.

use std::fmt;
use std::io::{BufRead, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gfq::Field;
use crate::grassmann::{enumerate_layer, Budget};
use crate::subspace::Subspace;

/// A deduplicated set of subspaces of one ambient space, kept sorted in the
/// canonical order so that each layer is a contiguous slice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceFamily {
    field: Field,
    n: usize,
    members: Vec<Subspace>,
    /// `members[offsets[k]..offsets[k + 1]]` is the layer of dimension k.
    offsets: Vec<usize>,
}

impl SubspaceFamily {
    pub fn new(field: Field, n: usize, members: impl IntoIterator<Item = Subspace>) -> Result<Self> {
        let mut members: Vec<Subspace> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|s| s.field() != field || s.ambient_dim() != n) {
            return Err(Error::AmbientMismatch {
                q1: field.q(),
                n1: n,
                q2: bad.field().q(),
                n2: bad.ambient_dim(),
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self::from_sorted(field, n, members))
    }

    fn from_sorted(field: Field, n: usize, members: Vec<Subspace>) -> Self {
        let mut offsets = vec![0usize; n + 2];
        for s in &members {
            offsets[s.dim() + 1] += 1;
        }
        for k in 0..=n {
            offsets[k + 1] += offsets[k];
        }
        SubspaceFamily { field, n, members, offsets }
    }

    pub fn empty(field: Field, n: usize) -> Self {
        Self::from_sorted(field, n, Vec::new())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subspace> {
        self.members.iter()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.members.binary_search(s).is_ok()
    }

    /// The layer F(k).
    pub fn layer(&self, k: usize) -> &[Subspace] {
        if k > self.n {
            return &[];
        }
        &self.members[self.offsets[k]..self.offsets[k + 1]]
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        (0..=self.n).map(|k| self.offsets[k + 1] - self.offsets[k]).collect()
    }

    /// Dimensions with a nonempty layer, increasing.
    pub fn support(&self) -> Vec<usize> {
        (0..=self.n).filter(|&k| self.offsets[k + 1] > self.offsets[k]).collect()
    }

    pub fn is_subset_of(&self, other: &SubspaceFamily) -> bool {
        self.members.iter().all(|s| other.contains(s))
    }

    pub fn union(&self, other: &SubspaceFamily) -> Result<SubspaceFamily> {
        SubspaceFamily::new(self.field, self.n, self.members.iter().chain(other.members.iter()).cloned())
    }

    /// Member-wise orthogonal complement.
    pub fn perp(&self) -> SubspaceFamily {
        let mut members: Vec<Subspace> = self.members.iter().map(Subspace::perp).collect();
        members.sort_unstable();
        Self::from_sorted(self.field, self.n, members)
    }

    /// Writes the family file: a `family q n count` header, then one subspace per line.
    pub fn write_to<W: Write>(&self, out: &mut W) -> Result<()> {
        writeln!(out, "family {} {} {}", self.field.q(), self.n, self.len())?;
        for s in &self.members {
            writeln!(out, "{s}")?;
        }
        Ok(())
    }

    pub fn to_file_string(&self) -> String {
        let mut out = Vec::new();
        self.write_to(&mut out).expect("writing to memory");
        String::from_utf8(out).expect("ascii output")
    }

    /// Parses a family file; errors carry 1-based line numbers.
    pub fn read_from<R: BufRead>(input: R) -> Result<SubspaceFamily> {
        let mut lines = input.lines().enumerate().filter_map(|(i, l)| match l {
            Ok(l) if l.trim().is_empty() || l.trim_start().starts_with('#') => None,
            other => Some((i + 1, other)),
        });
        let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let header = header?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 4 || toks[0] != "family" {
            return Err(Error::parse(hline, "expected header 'family q n count'"));
        }
        let num = |s: &str, what: &str| {
            s.parse::<usize>().map_err(|_| Error::parse(hline, format!("invalid {what} '{s}'")))
        };
        let (q, n, count) = (num(toks[1], "q")?, num(toks[2], "n")?, num(toks[3], "count")?);
        let field = Field::new(q as u64).map_err(|e| Error::parse(hline, e.to_string()))?;
        let mut members = Vec::with_capacity(count);
        for (line, text) in lines {
            let text = text?;
            let s: Subspace = text.parse().map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(line, message),
                other => Error::parse(line, other.to_string()),
            })?;
            if s.field() != field || s.ambient_dim() != n {
                return Err(Error::parse(line, format!("subspace {s} is not in GF({q})^{n}")));
            }
            members.push((line, s));
        }
        if members.len() != count {
            return Err(Error::parse(hline, format!("header announces {count} members, found {}", members.len())));
        }
        let mut sorted: Vec<_> = members.iter().map(|(l, s)| (s.clone(), *l)).collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::parse(w[1].1.max(w[0].1), format!("duplicate member {}", w[0].0)));
        }
        Ok(Self::from_sorted(field, n, sorted.into_iter().map(|(s, _)| s).collect()))
    }

    pub fn parse_str(text: &str) -> Result<SubspaceFamily> {
        Self::read_from(text.as_bytes())
    }
}

/// Serialized as the text of a family file.
impl Serialize for SubspaceFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_file_string())
    }
}

impl fmt::Debug for SubspaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubspaceFamily(GF({})^{}, {} members, layers {:?})", self.field.q(), self.n, self.len(), self.layer_sizes())
    }
}

fn ensure_same_ambient(a: &Subspace, b: &Subspace) -> Result<()> {
    a.delta(b).map(|_| ())
}

fn layers_within(field: Field, n: usize, dims: impl IntoIterator<Item = usize>, budget: &Budget, keep: impl Fn(&Subspace) -> bool) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for k in dims {
        out.extend(enumerate_layer(field, n, k, budget)?.filter(|s| keep(s)));
    }
    Ok(out)
}

/// B(C, r) = all subspaces within distance r of C.
pub fn ball(center: &Subspace, r: usize, budget: &Budget) -> Result<SubspaceFamily> {
    let (field, n, c) = (center.field(), center.ambient_dim(), center.dim());
    let dims = c.saturating_sub(r)..=(c + r).min(n);
    let members = layers_within(field, n, dims, budget, |a| a.distance(center) <= r)?;
    Ok(SubspaceFamily::from_sorted(field, n, members))
}

/// B(C1, C2, r) = B(C1, r) ∪ B(C2, r).
pub fn double_ball(c1: &Subspace, c2: &Subspace, r: usize, budget: &Budget) -> Result<SubspaceFamily> {
    ensure_same_ambient(c1, c2)?;
    ball(c1, r, budget)?.union(&ball(c2, r, budget)?)
}

/// The canonical extremal configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Canonical {
    /// L_t = B(0, t): every subspace of dimension at most t.
    Lower,
    /// U_t = B(V, t): every subspace of dimension at least n - t.
    Upper,
    /// D_t(X) = B(0, X, t) for a line X.
    Double(Subspace),
}

pub fn canonical_family(field: Field, n: usize, t: usize, which: &Canonical, budget: &Budget) -> Result<SubspaceFamily> {
    if t > n {
        return Err(Error::ParameterOutOfRange(format!("t = {t} exceeds n = {n}")));
    }
    match which {
        Canonical::Lower => Ok(SubspaceFamily::from_sorted(field, n, layers_within(field, n, 0..=t, budget, |_| true)?)),
        Canonical::Upper => Ok(SubspaceFamily::from_sorted(field, n, layers_within(field, n, n - t..=n, budget, |_| true)?)),
        Canonical::Double(x) => {
            if x.field() != field || x.ambient_dim() != n || x.dim() != 1 {
                return Err(Error::InvalidConfiguration(format!("D_t(X) needs a line of GF({})^{n}, got {x}", field.q())));
            }
            let mut members = layers_within(field, n, 0..=t, budget, |_| true)?;
            if t < n {
                members.extend(enumerate_layer(field, n, t + 1, budget)?.filter(|a| a.contains_unchecked(x)));
            }
            Ok(SubspaceFamily::from_sorted(field, n, members))
        }
    }
}

pub fn lower_ball(field: Field, n: usize, t: usize, budget: &Budget) -> Result<SubspaceFamily> {
    canonical_family(field, n, t, &Canonical::Lower, budget)
}

pub fn upper_ball(field: Field, n: usize, t: usize, budget: &Budget) -> Result<SubspaceFamily> {
    canonical_family(field, n, t, &Canonical::Upper, budget)
}

pub fn canonical_double_ball(x: &Subspace, t: usize, budget: &Budget) -> Result<SubspaceFamily> {
    canonical_family(x.field(), x.ambient_dim(), t, &Canonical::Double(x.clone()), budget)
}

fn require_line(x: &Subspace) -> Result<()> {
    if x.dim() != 1 {
        return Err(Error::InvalidConfiguration(format!("{x} is not 1-dimensional")));
    }
    Ok(())
}

/// The star of k-spaces through the line X.
pub fn star(k: usize, x: &Subspace, budget: &Budget) -> Result<SubspaceFamily> {
    require_line(x)?;
    let (field, n) = (x.field(), x.ambient_dim());
    if k == 0 || k > n {
        return Err(Error::ParameterOutOfRange(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let members = enumerate_layer(field, n, k, budget)?.filter(|a| a.contains_unchecked(x)).collect();
    Ok(SubspaceFamily::from_sorted(field, n, members))
}

/// HM(n,k,X,Y): k-spaces through X meeting Y, together with the k-spaces of X + Y.
/// Here k = dim Y and X must be a line outside Y.
pub fn hm_family(x: &Subspace, y: &Subspace, budget: &Budget) -> Result<SubspaceFamily> {
    require_line(x)?;
    ensure_same_ambient(x, y)?;
    if y.contains_unchecked(x) {
        return Err(Error::InvalidConfiguration(format!("X = {x} lies in Y = {y}")));
    }
    let k = y.dim();
    let xy = x.sum(y)?;
    let members = enumerate_layer(x.field(), x.ambient_dim(), k, budget)?
        .filter(|a| (a.contains_unchecked(x) && a.meet_dim(y) >= 1) || xy.contains_unchecked(a))
        .collect();
    Ok(SubspaceFamily::from_sorted(x.field(), x.ambient_dim(), members))
}

/// HM*(n,3,Y): 3-spaces meeting the 3-space Y in at least a plane.
pub fn hm_star3(y: &Subspace, budget: &Budget) -> Result<SubspaceFamily> {
    if y.dim() != 3 {
        return Err(Error::InvalidConfiguration(format!("{y} is not 3-dimensional")));
    }
    let members = enumerate_layer(y.field(), y.ambient_dim(), 3, budget)?.filter(|a| a.meet_dim(y) >= 2).collect();
    Ok(SubspaceFamily::from_sorted(y.field(), y.ambient_dim(), members))
}

fn with_lower_layers(top: SubspaceFamily, below: usize, budget: &Budget) -> Result<SubspaceFamily> {
    let (field, n) = (top.field, top.n);
    let mut members = layers_within(field, n, 0..below, budget, |_| true)?;
    members.extend(top.members);
    Ok(SubspaceFamily::from_sorted(field, n, members))
}

/// K(n,k,X,Y): all subspaces of dimension below k plus HM(n,k,X,Y).
pub fn k_family(x: &Subspace, y: &Subspace, budget: &Budget) -> Result<SubspaceFamily> {
    let top = hm_family(x, y, budget)?;
    with_lower_layers(top, y.dim(), budget)
}

/// K*(n,3,Y): all subspaces of dimension at most 2 plus HM*(n,3,Y).
pub fn k_star3(y: &Subspace, budget: &Budget) -> Result<SubspaceFamily> {
    let top = hm_star3(y, budget)?;
    with_lower_layers(top, 3, budget)
}

/// Largest pairwise distance.
pub fn diameter(f: &SubspaceFamily) -> Result<usize> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let m = f.members();
    let mut best = 0;
    for (i, a) in m.iter().enumerate() {
        for b in &m[i + 1..] {
            // distance is at least the dimension gap, at most dim a + dim b
            if a.dim() + b.dim() <= best {
                continue;
            }
            best = best.max(a.distance(b));
        }
    }
    Ok(best)
}

/// Whether every pair is within distance `d`; stops at the first violation.
pub fn diameter_at_most(f: &SubspaceFamily, d: usize) -> bool {
    first_far_pair(f, d).is_none()
}

/// A pair at distance greater than `d`, if any.
pub fn first_far_pair(f: &SubspaceFamily, d: usize) -> Option<(Subspace, Subspace)> {
    let m = f.members();
    for (i, a) in m.iter().enumerate() {
        for b in &m[i + 1..] {
            if a.dim() + b.dim() > d && a.distance(b) > d {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// D(F): the largest gap between member dimensions.
pub fn dim_spread(f: &SubspaceFamily) -> Result<usize> {
    let supp = f.support();
    match (supp.first(), supp.last()) {
        (Some(lo), Some(hi)) => Ok(hi - lo),
        _ => Err(Error::EmptyFamily),
    }
}

/// min(supp F ∪ supp F^⊥).
pub fn min_supp_norm(f: &SubspaceFamily) -> Result<usize> {
    let supp = f.support();
    match (supp.first(), supp.last()) {
        (Some(lo), Some(hi)) => Ok((*lo).min(f.n - hi)),
        _ => Err(Error::EmptyFamily),
    }
}

/// Whether every pair of members meets in dimension at least `s`.
pub fn is_s_intersecting(members: &[Subspace], s: usize) -> Result<bool> {
    if members.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(members.iter().enumerate().all(|(i, a)| members[i..].iter().all(|b| a.meet_dim(b) >= s)))
}

/// Whether every `A` in `a` and `B` in `b` meet in dimension at least `s`.
pub fn is_cross_intersecting(a: &[Subspace], b: &[Subspace], s: usize) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(a.iter().all(|x| b.iter().all(|y| x.meet_dim(y) >= s)))
}

/// Lowest intersection dimension forced between layers i and j of a family
/// with diameter at most d: `ceil((i + j - d) / 2)`, floored at zero.
pub fn forced_cross_intersection(i: usize, j: usize, d: usize) -> usize {
    (i + j).saturating_sub(d).div_ceil(2)
}

/// The four forbidden-configuration classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForbiddenClass {
    /// d = 2t; forbids L_t and U_t.
    AEven,
    /// d = 2t; forbids every radius-t ball.
    BEven,
    /// d = 2t+1; forbids D_t(X) and D_t(X)^⊥ for every line X.
    AOdd,
    /// d = 2t+1; forbids every union of two radius-t balls with adjacent centers.
    BOdd,
}

impl ForbiddenClass {
    pub fn diameter(self, t: usize) -> usize {
        match self {
            ForbiddenClass::AEven | ForbiddenClass::BEven => 2 * t,
            ForbiddenClass::AOdd | ForbiddenClass::BOdd => 2 * t + 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ForbiddenClass::AEven => "A-even",
            ForbiddenClass::BEven => "B-even",
            ForbiddenClass::AOdd => "A-odd",
            ForbiddenClass::BOdd => "B-odd",
        }
    }
}

impl std::str::FromStr for ForbiddenClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "a-even" => Ok(ForbiddenClass::AEven),
            "b-even" => Ok(ForbiddenClass::BEven),
            "a-odd" => Ok(ForbiddenClass::AOdd),
            "b-odd" => Ok(ForbiddenClass::BOdd),
            other => Err(Error::InvalidConfiguration(format!("unknown class '{other}'"))),
        }
    }
}

/// A forbidden configuration that contains a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Configuration {
    Lower { t: usize },
    Upper { t: usize },
    CanonicalDouble { x: String, t: usize },
    CanonicalDoublePerp { x: String, t: usize },
    Ball { center: String, r: usize },
    DoubleBall { first: String, second: String, r: usize },
}

impl Configuration {
    /// Materializes the configuration as a family of GF(q)^n.
    pub fn family(&self, field: Field, n: usize, budget: &Budget) -> Result<SubspaceFamily> {
        let parse = |s: &str| s.parse::<Subspace>();
        match self {
            Configuration::Lower { t } => lower_ball(field, n, *t, budget),
            Configuration::Upper { t } => upper_ball(field, n, *t, budget),
            Configuration::CanonicalDouble { x, t } => canonical_double_ball(&parse(x)?, *t, budget),
            Configuration::CanonicalDoublePerp { x, t } => Ok(canonical_double_ball(&parse(x)?, *t, budget)?.perp()),
            Configuration::Ball { center, r } => ball(&parse(center)?, *r, budget),
            Configuration::DoubleBall { first, second, r } => double_ball(&parse(first)?, &parse(second)?, *r, budget),
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Configuration::Lower { t } => write!(f, "L_{t}"),
            Configuration::Upper { t } => write!(f, "U_{t}"),
            Configuration::CanonicalDouble { x, t } => write!(f, "D_{t}({x})"),
            Configuration::CanonicalDoublePerp { x, t } => write!(f, "D_{t}({x})^perp"),
            Configuration::Ball { center, r } => write!(f, "B({center}, {r})"),
            Configuration::DoubleBall { first, second, r } => write!(f, "B({first}, {second}, {r})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Admissibility {
    Admissible,
    DiameterExceeds { diameter: usize, limit: usize },
    Contained { witness: Configuration },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }
}

fn within(f: &SubspaceFamily, center: &Subspace, r: usize) -> bool {
    f.iter().all(|a| a.distance(center) <= r)
}

fn within_pair(f: &SubspaceFamily, p: &Subspace, q: &Subspace, r: usize) -> bool {
    f.iter().all(|a| a.distance(p) <= r || a.distance(q) <= r)
}

/// Centers C with F ⊆ B(C, r), restricted by the dimension gap bound.
fn covering_centers(f: &SubspaceFamily, r: usize, budget: &Budget) -> Result<Vec<Subspace>> {
    let supp = f.support();
    let (lo, hi) = (supp[0], *supp.last().unwrap());
    let dims = hi.saturating_sub(r)..=(lo + r).min(f.n);
    layers_within(f.field, f.n, dims, budget, |c| within(f, c, r))
}

/// The forbidden configuration containing `f`, if any (diameter not checked).
pub fn containing_configuration(f: &SubspaceFamily, class: ForbiddenClass, t: usize, budget: &Budget) -> Result<Option<Configuration>> {
    let (field, n) = (f.field, f.n);
    if f.is_empty() {
        // the empty family lies in every configuration
        return Ok(Some(match class {
            ForbiddenClass::AEven => Configuration::Lower { t },
            ForbiddenClass::BEven => Configuration::Ball { center: Subspace::zero(field, n).to_string(), r: t },
            _ => Configuration::CanonicalDouble {
                x: enumerate_layer(field, n, 1, budget)?.next().map(|x| x.to_string()).unwrap_or_default(),
                t,
            },
        }));
    }
    let supp = f.support();
    let (lo, hi) = (supp[0], *supp.last().unwrap());
    match class {
        ForbiddenClass::AEven => {
            if hi <= t {
                return Ok(Some(Configuration::Lower { t }));
            }
            if lo + t >= n {
                return Ok(Some(Configuration::Upper { t }));
            }
            Ok(None)
        }
        ForbiddenClass::AOdd => {
            let zero = Subspace::zero(field, n);
            let full = Subspace::full(field, n);
            for x in enumerate_layer(field, n, 1, budget)? {
                if within_pair(f, &zero, &x, t) {
                    return Ok(Some(Configuration::CanonicalDouble { x: x.to_string(), t }));
                }
                let xp = x.perp();
                if within_pair(f, &full, &xp, t) {
                    return Ok(Some(Configuration::CanonicalDoublePerp { x: x.to_string(), t }));
                }
            }
            Ok(None)
        }
        ForbiddenClass::BEven => {
            let dims = hi.saturating_sub(t)..=(lo + t).min(n);
            for k in dims {
                if let Some(c) = enumerate_layer(field, n, k, budget)?.find(|c| within(f, c, t)) {
                    return Ok(Some(Configuration::Ball { center: c.to_string(), r: t }));
                }
            }
            Ok(None)
        }
        ForbiddenClass::BOdd => {
            // both adjacent centers lie within t + 1 of every member
            let candidates = covering_centers(f, t + 1, budget)?;
            for (i, p) in candidates.iter().enumerate() {
                for q in &candidates[i + 1..] {
                    if q.dim() == p.dim() + 1 && q.contains_unchecked(p) && within_pair(f, p, q, t) {
                        return Ok(Some(Configuration::DoubleBall { first: p.to_string(), second: q.to_string(), r: t }));
                    }
                }
            }
            Ok(None)
        }
    }
}

/// `(class, d)`-admissibility with d = 2t or 2t+1 according to the class.
pub fn is_admissible(f: &SubspaceFamily, class: ForbiddenClass, t: usize, budget: &Budget) -> Result<Admissibility> {
    let limit = class.diameter(t);
    if let Some((a, b)) = first_far_pair(f, limit) {
        return Ok(Admissibility::DiameterExceeds { diameter: a.distance(&b).max(diameter(f)?), limit });
    }
    Ok(match containing_configuration(f, class, t, budget)? {
        Some(witness) => Admissibility::Contained { witness },
        None => Admissibility::Admissible,
    })
}
