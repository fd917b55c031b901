//! Cross-checks every representation of every path of a type against the
//! others.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::counting::rational_catalan;
use crate::error::{Error, Result};
use crate::lediagram::{cell_dimension, is_rational_dyck_le, le_from_path, path_from_le, perm_from_le, validate_le};
use crate::matrix::{column_profile, path_to_matrix, phi, ColumnProfile};
use crate::necklace::{explicit_entries, necklace_explicit, necklace_from_bases, Completion, GrassmannNecklace};
use crate::path::{enumerate_paths, DyckPath};
use crate::permutation::{geometric_bound_holds, path_from_perm, southwest_perm};
use crate::plabic::{build_plabic, graph_type, is_tree, local_moves, positroid_from_plabic, trip_permutation};
use crate::polytope::{
    hrep_general, hrep_refined, hrep_refined_with, polytope_contains, vertices_adjacent, vertices_from_bases,
    zero_one_points, HPolytope, RefinedFamily,
};
use crate::positroid::{is_connected, positroid_of_path, Positroid};
use crate::registry::{Named, Registry};
use crate::routes::permutation_routes;
use crate::subset::{k_subsets, Subset};

pub const MAX_N_VAR: &str = "POSITROID_LAB_MAX_N";

/// Largest `d+m` at which each expensive family of checks runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub counting: usize,
    pub bases: usize,
    pub lp: usize,
    pub adjacency: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { counting: 12, bases: 9, lp: 8, adjacency: 7 }
    }
}

impl Caps {
    pub fn uniform(n: usize) -> Self {
        Caps { counting: n, bases: n, lp: n, adjacency: n }
    }

    /// Defaults, or [`Caps::uniform`] of the value of `POSITROID_LAB_MAX_N`.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_VAR) {
            Ok(s) => s
                .trim()
                .parse()
                .map(Caps::uniform)
                .map_err(|_| Error::invalid(format!("{MAX_N_VAR}={s:?} is not a count"))),
            Err(_) => Ok(Caps::default()),
        }
    }
}

/// Everything the checks share about one path, computed on first use.
pub struct Context<'a> {
    pub path: &'a DyckPath,
    pub caps: Caps,
    profile: ColumnProfile,
    positroid: OnceLock<Result<Positroid>>,
    necklace: OnceLock<Result<GrassmannNecklace>>,
}

impl<'a> Context<'a> {
    pub fn new(path: &'a DyckPath, caps: Caps) -> Self {
        Context { path, caps, profile: ColumnProfile::from_path(path), positroid: OnceLock::new(), necklace: OnceLock::new() }
    }

    pub fn n(&self) -> usize {
        self.path.n()
    }

    pub fn profile(&self) -> &ColumnProfile {
        &self.profile
    }

    pub fn positroid(&self) -> Result<&Positroid> {
        self.positroid.get_or_init(|| positroid_of_path(self.path)).as_ref().map_err(Clone::clone)
    }

    pub fn necklace(&self) -> Result<&GrassmannNecklace> {
        self.necklace
            .get_or_init(|| necklace_from_bases(self.positroid()?))
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// Discrepancies between literal formulas and their corrected forms that are
/// reported without failing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Note {
    LiteralCompletion,
    VerbatimRefined,
}

impl Note {
    pub fn key(self) -> &'static str {
        match self {
            Note::LiteralCompletion => "necklace-completion",
            Note::VerbatimRefined => "refined-verbatim",
        }
    }

    pub fn message(self) -> &'static str {
        match self {
            Note::LiteralCompletion => {
                "completing necklace entries from the complement set alone gives the wrong entry"
            }
            Note::VerbatimRefined => {
                "the refined system without the completed window rows admits non-basis 0/1 points"
            }
        }
    }
}

#[derive(Debug, Default)]
pub struct Verdict {
    pub failure: Option<String>,
    pub notes: Vec<Note>,
}

impl Verdict {
    fn pass() -> Self {
        Verdict::default()
    }

    fn fail(msg: impl Into<String>) -> Self {
        Verdict { failure: Some(msg.into()), notes: Vec::new() }
    }

    fn require(ok: bool, msg: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::pass()
        } else {
            Verdict::fail(msg())
        }
    }
}

pub trait Check: Named + Send + Sync {
    /// Largest `d+m` to run at, if bounded.
    fn limit(&self, caps: &Caps) -> Option<usize>;

    fn run(&self, ctx: &Context) -> Result<Verdict>;
}

macro_rules! check {
    ($ty:ident, $name:literal, $desc:literal, |$caps:ident| $limit:expr, |$ctx:ident| $body:expr) => {
        pub struct $ty;

        impl Named for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn description(&self) -> &'static str {
                $desc
            }
        }

        impl Check for $ty {
            #[allow(unused_variables)]
            fn limit(&self, $caps: &Caps) -> Option<usize> {
                $limit
            }

            fn run(&self, $ctx: &Context) -> Result<Verdict> {
                $body
            }
        }
    };
}

check!(MinorsCheck, "minors", "maximal minors of the extended matrix are nonnegative; basis exchange",
    |caps| Some(caps.bases),
    |ctx| {
        let a = phi(&path_to_matrix(ctx.path));
        let (d, n) = (a.d(), a.n());
        for s in k_subsets(n, d) {
            let minor = a.entries().maximal_minor(s)?;
            if minor < 0 {
                return Ok(Verdict::fail(format!("minor {s:?} = {minor}")));
            }
        }
        let pos = ctx.positroid()?;
        if !pos.is_basis(Subset::initial(d)) {
            return Ok(Verdict::fail("[d] is not a basis"));
        }
        let profile = column_profile(&a)?;
        for j in d + 1..=n {
            let b = Subset::initial(d).without(profile.weight(j)).with(j);
            if !pos.is_basis(b) {
                return Ok(Verdict::fail(format!("{b:?} is not a basis")));
            }
        }
        Ok(Verdict::require(pos.satisfies_exchange_axiom(), || "basis exchange fails".into()))
    });

check!(NecklaceCheck, "necklace-explicit", "explicit necklace formula equals lex-minimal bases",
    |caps| Some(caps.bases),
    |ctx| {
        let generic = ctx.necklace()?;
        let explicit = necklace_explicit(ctx.profile())?;
        let mut v = Verdict::require(&explicit == generic, || {
            format!("explicit {:?} vs generic {:?}", explicit.ordered_entries(), generic.ordered_entries())
        });
        if explicit_entries(ctx.profile(), Completion::ComplementOnly)? != generic.ordered_entries() {
            v.notes.push(Note::LiteralCompletion);
        }
        Ok(v)
    });

pub struct PermutationCheck;

impl Named for PermutationCheck {
    fn name(&self) -> &'static str {
        "permutation"
    }

    fn description(&self) -> &'static str {
        "all permutation routes agree on a fixed-point-free cycle with excedances [d]"
    }
}

impl Check for PermutationCheck {
    fn limit(&self, _: &Caps) -> Option<usize> {
        None
    }

    fn run(&self, ctx: &Context) -> Result<Verdict> {
        let (d, n) = (ctx.path.d(), ctx.n());
        let pi = southwest_perm(ctx.path);
        for route in permutation_routes().iter() {
            if route.needs_bases() && n > ctx.caps.bases {
                continue;
            }
            let other = route.permutation(ctx.path)?;
            if other != pi {
                return Ok(Verdict::fail(format!("{} gives {other}, southwest gives {pi}", route.name())));
            }
        }
        if pi.cycle_of(1).len() != n || !pi.fixed_points().is_empty() {
            return Ok(Verdict::fail(format!("{pi} is not an {n}-cycle")));
        }
        if pi.weak_excedances() != (1..=d).collect::<Vec<_>>() {
            return Ok(Verdict::fail(format!("weak excedances of {pi} are not [{d}]")));
        }
        let cycle = pi.inverse().cycle_of(d + 1);
        let low: Vec<usize> = cycle.iter().copied().filter(|&x| (2..=d).contains(&x)).collect();
        let high: Vec<usize> = cycle.iter().copied().filter(|&x| x >= d + 2).collect();
        Ok(Verdict::require(
            low.windows(2).all(|w| w[0] > w[1]) && high.windows(2).all(|w| w[0] < w[1]),
            || format!("inverse cycle {cycle:?} is not monotone on 2..d and d+2..n"),
        ))
    }
}

check!(BetaCheck, "beta", "the path is recovered from its permutation",
    |caps| None,
    |ctx| {
        let back = path_from_perm(&southwest_perm(ctx.path))?;
        Ok(Verdict::require(&back == ctx.path, || format!("recovered {back}")))
    });

check!(LeCheck, "le", "Le-diagram is valid, rational Dyck, of dimension d+m-1, with the right pipes",
    |caps| None,
    |ctx| {
        let l = le_from_path(ctx.path);
        if !validate_le(&l) || !is_rational_dyck_le(&l) {
            return Ok(Verdict::fail("Le-diagram fails its shape conditions"));
        }
        if cell_dimension(&l) != ctx.n() - 1 {
            return Ok(Verdict::fail(format!("{} pluses", cell_dimension(&l))));
        }
        let pi = perm_from_le(&l)?;
        if pi != southwest_perm(ctx.path) {
            return Ok(Verdict::fail(format!("pipes give {pi}")));
        }
        Ok(Verdict::require(path_from_le(&l).as_ref() == Some(ctx.path), || "path not recovered".into()))
    });

pub struct PlabicCheck;

impl Named for PlabicCheck {
    fn name(&self) -> &'static str {
        "plabic"
    }

    fn description(&self) -> &'static str {
        "tree plabic graph has the right type, trips and source sets, and no reducing site"
    }
}

impl Check for PlabicCheck {
    fn limit(&self, _: &Caps) -> Option<usize> {
        None
    }

    fn run(&self, ctx: &Context) -> Result<Verdict> {
        let g = build_plabic(ctx.path);
        if !is_tree(&g) {
            return Ok(Verdict::fail("not a tree"));
        }
        let ty = graph_type(&g)?;
        if ty != (ctx.path.d(), ctx.n()) {
            return Ok(Verdict::fail(format!("type {ty:?}")));
        }
        let trip = trip_permutation(&g);
        if trip != southwest_perm(ctx.path) {
            return Ok(Verdict::fail(format!("trip permutation {trip}")));
        }
        let moves = local_moves();
        for name in ["M1", "R1"] {
            if !moves.get(name)?.sites(&g).is_empty() {
                return Ok(Verdict::fail(format!("{name} applies")));
            }
        }
        if ctx.n() <= ctx.caps.bases {
            let from_graph = positroid_from_plabic(&g)?;
            if &from_graph != ctx.positroid()? {
                return Ok(Verdict::fail("perfect-orientation sources differ from the bases"));
            }
        }
        Ok(Verdict::pass())
    }
}

check!(ZeroOneCheck, "polytope-01", "0/1 points of both inequality systems are the basis indicators",
    |caps| Some(caps.bases),
    |ctx| {
        let d = ctx.path.d();
        let verts = vertices_from_bases(ctx.positroid()?);
        let general = zero_one_points(&hrep_general(ctx.necklace()?), d);
        let refined = zero_one_points(&hrep_refined(ctx.profile())?, d);
        let mut v = if general != verts {
            Verdict::fail("general system has the wrong 0/1 points")
        } else if refined != verts {
            Verdict::fail("refined system has the wrong 0/1 points")
        } else {
            Verdict::pass()
        };
        let verbatim = hrep_refined_with(ctx.profile(), RefinedFamily::Verbatim)?;
        if zero_one_points(&verbatim, d) != verts {
            v.notes.push(Note::VerbatimRefined);
        }
        Ok(v)
    });

check!(LpCheck, "polytope-lp", "exact LP shows the general and refined systems are equal",
    |caps| Some(caps.lp),
    |ctx| {
        let general: HPolytope = hrep_general(ctx.necklace()?);
        let refined = hrep_refined(ctx.profile())?;
        if !polytope_contains(&general, &refined)? {
            return Ok(Verdict::fail("refined polytope is not inside the general one"));
        }
        Ok(Verdict::require(polytope_contains(&refined, &general)?, || {
            "general polytope is not inside the refined one".into()
        }))
    });

check!(EdgesCheck, "polytope-edges", "every edge of the basis polytope is parallel to some e_i - e_j",
    |caps| Some(caps.adjacency),
    |ctx| {
        let verts = vertices_from_bases(ctx.positroid()?);
        for (i, u) in verts.iter().enumerate() {
            for v in &verts[i + 1..] {
                if !u.differs_by_transposition(v) && vertices_adjacent(&verts, u, v)? {
                    return Ok(Verdict::fail(format!(
                        "edge {:?} - {:?}",
                        u.support(),
                        v.support()
                    )));
                }
            }
        }
        Ok(Verdict::pass())
    });

check!(GeometricCheck, "geometric", "m w(j) >= d (d+m-j+1) on every column",
    |caps| None,
    |ctx| Ok(Verdict::require(geometric_bound_holds(ctx.profile()), || "bound fails".into())));

check!(ConnectedCheck, "connected", "the positroid is connected",
    |caps| Some(caps.bases),
    |ctx| Ok(Verdict::require(is_connected(ctx.positroid()?), || "disconnected".into())));

pub fn checks() -> Registry<dyn Check> {
    Registry::<dyn Check>::new("check")
        .with(Box::new(MinorsCheck))
        .with(Box::new(NecklaceCheck))
        .with(Box::new(PermutationCheck))
        .with(Box::new(BetaCheck))
        .with(Box::new(LeCheck))
        .with(Box::new(PlabicCheck))
        .with(Box::new(ZeroOneCheck))
        .with(Box::new(LpCheck))
        .with(Box::new(EdgesCheck))
        .with(Box::new(GeometricCheck))
        .with(Box::new(ConnectedCheck))
}

/// Name of the per-type check comparing the enumeration with the closed form.
pub const COUNT_CHECK: &str = "count";

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub caps: Caps,
    pub skip: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// Paths above the check's size cap.
    pub capped: usize,
    pub skipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: &'static str,
    pub path: Option<DyckPath>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub key: &'static str,
    pub message: &'static str,
    pub paths: usize,
    /// First path, in enumeration order, showing the discrepancy.
    pub example: DyckPath,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub m: usize,
    pub d: usize,
    pub paths: usize,
    pub caps: Caps,
    pub checks: Vec<CheckSummary>,
    pub failures: Vec<Failure>,
    pub warnings: Vec<Warning>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Earliest failure of each check; paths come in enumeration order, so
    /// these are the shortest-lex counterexamples.
    pub fn first_failures(&self) -> Vec<&Failure> {
        let mut seen = Vec::new();
        self.failures
            .iter()
            .filter(|f| {
                let new = !seen.contains(&f.check);
                seen.push(f.check);
                new
            })
            .collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "type ({},{}): {} path{}", self.m, self.d, self.paths, if self.paths == 1 { "" } else { "s" })?;
        for c in &self.checks {
            if c.skipped {
                writeln!(f, "  {:<18} skipped", c.name)?;
                continue;
            }
            let status = if c.failed > 0 { "FAIL" } else { "ok" };
            write!(f, "  {:<18} {status:<4} {} passed", c.name, c.passed)?;
            if c.failed > 0 {
                write!(f, ", {} failed", c.failed)?;
            }
            if c.capped > 0 {
                write!(f, ", {} above cap", c.capped)?;
            }
            writeln!(f)?;
        }
        for w in &self.warnings {
            writeln!(f, "warning[{}]: {} on {} of {} paths (first: {})", w.key, w.message, w.paths, self.paths, w.example)?;
        }
        for fail in self.first_failures() {
            match &fail.path {
                Some(p) => writeln!(f, "counterexample[{}]: {p}: {}", fail.check, fail.detail)?,
                None => writeln!(f, "counterexample[{}]: {}", fail.check, fail.detail)?,
            }
        }
        write!(f, "{}", if self.ok() { "PASS" } else { "FAIL" })
    }
}

struct PathOutcome {
    // per check, in registry order: None when skipped or capped
    results: Vec<Option<std::result::Result<(), String>>>,
    notes: Vec<Note>,
}

/// Runs every check not in `opts.skip` on every path of type `(m, d)`.
pub fn verify_type(m: usize, d: usize, opts: &VerifyOptions) -> Result<Report> {
    let registry = checks();
    let mut known = registry.names();
    known.push(COUNT_CHECK);
    if let Some(bad) = opts.skip.iter().find(|s| !known.contains(&s.as_str())) {
        return Err(Error::UnknownStrategy { kind: "check", name: bad.clone() });
    }
    let paths = enumerate_paths(m, d)?;
    let n = m + d;
    let active: Vec<&dyn Check> =
        registry.iter().filter(|c| !opts.skip.iter().any(|s| s == c.name())).collect();

    let outcomes: Vec<PathOutcome> = paths
        .par_iter()
        .map(|p| {
            let ctx = Context::new(p, opts.caps);
            let mut notes = Vec::new();
            let results = active
                .iter()
                .map(|c| {
                    if c.limit(&opts.caps).is_some_and(|cap| n > cap) {
                        return None;
                    }
                    Some(match c.run(&ctx) {
                        Ok(v) => {
                            notes.extend(v.notes);
                            v.failure.map_or(Ok(()), Err)
                        }
                        Err(e) => Err(format!("error: {e}")),
                    })
                })
                .collect();
            PathOutcome { results, notes }
        })
        .collect();

    let mut summaries = Vec::new();
    let mut failures = Vec::new();

    if opts.skip.iter().any(|s| s == COUNT_CHECK) {
        summaries.push(CheckSummary { name: COUNT_CHECK, passed: 0, failed: 0, capped: 0, skipped: true });
    } else if n > opts.caps.counting {
        summaries.push(CheckSummary { name: COUNT_CHECK, passed: 0, failed: 0, capped: 1, skipped: false });
    } else {
        let expected = rational_catalan(m as u64, d as u64)?;
        let ok = expected == paths.len().into();
        if !ok {
            failures.push(Failure {
                check: COUNT_CHECK,
                path: None,
                detail: format!("enumerated {} paths, closed form gives {expected}", paths.len()),
            });
        }
        summaries.push(CheckSummary {
            name: COUNT_CHECK,
            passed: usize::from(ok),
            failed: usize::from(!ok),
            capped: 0,
            skipped: false,
        });
    }

    for c in registry.iter() {
        let Some(k) = active.iter().position(|a| a.name() == c.name()) else {
            summaries.push(CheckSummary { name: c.name(), passed: 0, failed: 0, capped: 0, skipped: true });
            continue;
        };
        let mut s = CheckSummary { name: c.name(), passed: 0, failed: 0, capped: 0, skipped: false };
        for (p, out) in paths.iter().zip(&outcomes) {
            match &out.results[k] {
                None => s.capped += 1,
                Some(Ok(())) => s.passed += 1,
                Some(Err(detail)) => {
                    s.failed += 1;
                    failures.push(Failure { check: c.name(), path: Some(p.clone()), detail: detail.clone() });
                }
            }
        }
        summaries.push(s);
    }

    let mut tally: BTreeMap<Note, (usize, &DyckPath)> = BTreeMap::new();
    for (p, out) in paths.iter().zip(&outcomes) {
        for &note in &out.notes {
            tally.entry(note).or_insert((0, p)).0 += 1;
        }
    }
    let warnings = tally
        .into_iter()
        .map(|(note, (count, p))| Warning {
            key: note.key(),
            message: note.message(),
            paths: count,
            example: p.clone(),
        })
        .collect();

    Ok(Report { m, d, paths: paths.len(), caps: opts.caps, checks: summaries, failures, warnings })
}
