//! Corpus scans: theorem and lemma checks that must hold, and conjecture
//! checks that only report.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use copwin::enumerate::canonical_graph6;
use copwin::game::{cop_number_with, preceq, CopNumber, GameConfig, TeleportCapture};
use copwin::strategy::{build_theorem1_plan, simulate, RobberPolicy};
use copwin::traps::{
    chvatal_bound, check_lemma4, min_transversal, Hypergraph, TrapReport,
};
use copwin::{isqrt, Error, Graph};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{Record, Value};
use crate::source::Item;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    /// `c(G) <= isqrt(2n)` on diameter-two and bipartite diameter-three
    /// graphs, together with the plan's cop count and a simulated capture.
    Theorem1,
    /// Some vertex is a `floor(sqrt n)`-trap.
    Lemma4,
    /// More than `alpha - sqrt(n - alpha) - 1` alpha-traps for every integer
    /// alpha in `[ceil(sqrt n), n]`.
    Lemma5,
    /// Report-only: `c(G)` against `floor(sqrt n)` on diameter-two graphs.
    ConjSqrtN,
    /// `c_T <= floor(sqrt n)` and `c_T <= c` are asserted; `c == c_T` on
    /// diameter-two graphs is report-only.
    ConjTeleport,
    /// A `floor(sqrt n)`-trap exists iff the first stage of the cop-advantage
    /// relation grows, with `floor(sqrt n)` cops and a robber who must move.
    PreceqEquiv,
    /// Seeded random uniform hypergraphs: exact transversal number against
    /// the fractional bound.
    Chvatal,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Theorem1,
        Check::Lemma4,
        Check::Lemma5,
        Check::ConjSqrtN,
        Check::ConjTeleport,
        Check::PreceqEquiv,
        Check::Chvatal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Lemma4 => "lemma4",
            Check::Lemma5 => "lemma5",
            Check::ConjSqrtN => "conj_sqrt_n",
            Check::ConjTeleport => "conj_teleport",
            Check::PreceqEquiv => "preceq_equiv",
            Check::Chvatal => "chvatal",
        }
    }

    /// Largest enumeration order accepted for this check.
    pub fn max_nmax(self) -> usize {
        match self {
            Check::Lemma4 | Check::Lemma5 => 8,
            _ => 7,
        }
    }

    /// Whether the graph is in the class this check talks about.
    pub fn applies(self, g: &Graph) -> bool {
        if !g.is_connected() {
            return false;
        }
        match self {
            Check::Theorem1 => match g.diameter() {
                Some(2) => true,
                Some(3) => g.is_bipartite(),
                _ => false,
            },
            Check::ConjSqrtN => g.diameter() == Some(2),
            Check::PreceqEquiv => g.n() >= 2,
            _ => true,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check {s:?} (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// A state budget or search cap stopped the computation.
    Unresolved,
    ReportOnly,
    Error,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Unresolved => "unresolved",
            Verdict::ReportOnly => "report-only",
            Verdict::Error => "error",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub budget: u64,
    pub seed: u64,
    /// Capture rule for teleport solves.
    pub teleport_capture: TeleportCapture,
    /// Adds wall-clock milliseconds to each record (makes reports
    /// non-reproducible byte for byte).
    pub timing: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            budget: copwin::game::DEFAULT_STATE_BUDGET,
            seed: 0,
            teleport_capture: TeleportCapture::Closed,
            timing: false,
        }
    }
}

/// The outcome of one check on one graph.
#[derive(Clone, Debug)]
pub struct ScanRecord {
    pub check: Check,
    pub graph6: String,
    pub n: usize,
    pub diameter: Option<usize>,
    pub bipartite: bool,
    pub c: Option<CopNumber>,
    pub c_t: Option<CopNumber>,
    pub bound: Option<usize>,
    pub detail: Vec<(&'static str, Value)>,
    pub verdict: Verdict,
    /// Conjecture checks: whether this graph is a counterexample candidate.
    pub candidate: Option<bool>,
    pub elapsed: Duration,
}

pub fn cop_value(c: &CopNumber) -> Value {
    match c {
        CopNumber::Exact(k) => Value::from(*k),
        CopNumber::Unresolved { lower_bound, .. } => Value::Str(format!("unresolved>={lower_bound}")),
    }
}

impl ScanRecord {
    fn new(check: Check, g: &Graph) -> Self {
        ScanRecord {
            check,
            graph6: canonical_graph6(g),
            n: g.n(),
            diameter: g.diameter(),
            bipartite: g.is_bipartite(),
            c: None,
            c_t: None,
            bound: None,
            detail: Vec::new(),
            verdict: Verdict::Pass,
            candidate: None,
            elapsed: Duration::ZERO,
        }
    }

    fn note(&mut self, key: &'static str, value: impl Into<Value>) {
        self.detail.push((key, value.into()));
    }

    pub fn to_record(&self, timing: bool) -> Record {
        let mut r = Record::new()
            .with("check", self.check.name())
            .with("graph6", self.graph6.as_str())
            .with("n", self.n)
            .with("diameter", self.diameter)
            .with("bipartite", self.bipartite);
        if let Some(c) = &self.c {
            r.push("c", cop_value(c));
        }
        if let Some(c) = &self.c_t {
            r.push("c_t", cop_value(c));
        }
        if let Some(b) = self.bound {
            r.push("bound", b);
        }
        for (k, v) in &self.detail {
            r.push(k, v.clone());
        }
        if let Some(c) = self.candidate {
            r.push("candidate", c);
        }
        r.push("verdict", self.verdict.name());
        if timing {
            r.push("ms", self.elapsed.as_millis() as u64);
        }
        r
    }
}

fn ceil_sqrt(n: usize) -> usize {
    let r = isqrt(n as u64) as usize;
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// Runs `check` on one graph; `None` if the graph is outside its class.
pub fn run_check(check: Check, g: &Graph, opts: &ScanOptions) -> Option<ScanRecord> {
    if check == Check::Chvatal || !check.applies(g) {
        return None;
    }
    let start = Instant::now();
    let mut rec = ScanRecord::new(check, g);
    if let Err(e) = fill(check, g, opts, &mut rec) {
        rec.verdict = match e {
            Error::BudgetExceeded { .. } | Error::CopLimit { .. } => Verdict::Unresolved,
            _ => Verdict::Error,
        };
        rec.note("error", e.to_string());
    }
    rec.elapsed = start.elapsed();
    Some(rec)
}

fn solve(g: &Graph, cfg: GameConfig, opts: &ScanOptions) -> Result<CopNumber, Error> {
    cop_number_with(g, &cfg.with_budget(opts.budget))
}

fn fill(check: Check, g: &Graph, opts: &ScanOptions, rec: &mut ScanRecord) -> Result<(), Error> {
    let n = g.n();
    let root = isqrt(n as u64) as usize;
    match check {
        Check::Theorem1 => {
            let bound = isqrt(2 * n as u64) as usize;
            rec.bound = Some(bound);
            let c = solve(g, GameConfig::standard(1), opts)?;
            rec.c = Some(c.clone());
            let plan = build_theorem1_plan(g)?;
            rec.note("plan_guards", plan.stationary.len());
            rec.note("plan_cops", plan.total_cops);
            let (robber, trace) = match simulate(g, &plan, RobberPolicy::Optimal, None) {
                Err(Error::BudgetExceeded { .. }) => {
                    ("greedy", simulate(g, &plan, RobberPolicy::GreedyDistance, None)?)
                }
                other => ("optimal", other?),
            };
            rec.note("robber", robber);
            rec.note("captured", trace.captured());
            rec.note("rounds", trace.rounds.len() - 1);
            rec.verdict = match c.exact() {
                None => Verdict::Unresolved,
                Some(k) if k <= bound && plan.total_cops <= bound && trace.captured() => Verdict::Pass,
                Some(_) => Verdict::Fail,
            };
        }
        Check::Lemma4 => {
            rec.bound = Some(root);
            let report = TrapReport::new(g)?;
            let traps = report.thresholds.iter().filter(|&&t| t <= root).count();
            rec.note("min_threshold", report.min_threshold());
            rec.note("traps", traps);
            rec.verdict = if traps > 0 { Verdict::Pass } else { Verdict::Fail };
        }
        Check::Lemma5 => {
            let report = TrapReport::new(g)?;
            let (lo, hi) = (ceil_sqrt(n), n);
            let mut violations = Vec::new();
            let mut min_margin = f64::INFINITY;
            for alpha in lo..=hi {
                if !report.lemma5(alpha)? {
                    violations.push(alpha);
                }
                let margin = report.alpha_trap_count(alpha as f64) as f64 - report.lemma5_bound(alpha as f64);
                min_margin = min_margin.min(margin);
            }
            rec.note("alpha_min", lo);
            rec.note("alpha_max", hi);
            rec.note("min_margin", min_margin);
            rec.note("violations", &violations[..]);
            rec.verdict = if violations.is_empty() { Verdict::Pass } else { Verdict::Fail };
        }
        Check::ConjSqrtN => {
            rec.bound = Some(root);
            let c = solve(g, GameConfig::standard(1), opts)?;
            rec.c = Some(c.clone());
            rec.verdict = Verdict::ReportOnly;
            match c.exact() {
                Some(k) => {
                    rec.note("margin", root as i64 - k as i64);
                    rec.candidate = Some(k > root);
                }
                None => rec.verdict = Verdict::Unresolved,
            }
        }
        Check::ConjTeleport => {
            rec.bound = Some(root);
            let c = solve(g, GameConfig::standard(1), opts)?;
            let mut teleport = GameConfig::teleport(1);
            teleport.teleport_capture = opts.teleport_capture;
            let c_t = solve(g, teleport, opts)?;
            rec.c = Some(c.clone());
            rec.c_t = Some(c_t.clone());
            match (c.exact(), c_t.exact()) {
                (Some(c), Some(t)) => {
                    rec.verdict = if t <= root && t <= c { Verdict::Pass } else { Verdict::Fail };
                    if g.diameter() == Some(2) {
                        rec.candidate = Some(c != t);
                    }
                }
                _ => rec.verdict = Verdict::Unresolved,
            }
        }
        Check::PreceqEquiv => {
            rec.note("k", root);
            let relation = preceq(g, root, opts.budget)?;
            let grows = relation.count(1) > relation.count(0);
            let trap = check_lemma4(g)?;
            rec.note("stage0", relation.count(0));
            rec.note("stage1", relation.count(1));
            rec.note("grows", grows);
            rec.note("trap", trap);
            rec.verdict = if grows == trap { Verdict::Pass } else { Verdict::Fail };
        }
        Check::Chvatal => unreachable!("hypergraph check has no graph input"),
    }
    Ok(())
}

/// Tallies over one scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub items: usize,
    pub filtered: usize,
    pub pass: usize,
    pub fail: usize,
    pub unresolved: usize,
    pub report_only: usize,
    pub errors: usize,
    pub candidates: usize,
}

impl Summary {
    pub fn add(&mut self, verdict: Verdict, candidate: bool) {
        match verdict {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Unresolved => self.unresolved += 1,
            Verdict::ReportOnly => self.report_only += 1,
            Verdict::Error => self.errors += 1,
        }
        self.candidates += usize::from(candidate);
    }

    pub fn to_record(&self, check: Check) -> Record {
        Record::new()
            .with("summary", check.name())
            .with("items", self.items)
            .with("filtered", self.filtered)
            .with("pass", self.pass)
            .with("fail", self.fail)
            .with("unresolved", self.unresolved)
            .with("report_only", self.report_only)
            .with("errors", self.errors)
            .with("candidates", self.candidates)
    }
}

/// Records in input order, plus the tallies.
pub struct ScanOutput {
    pub records: Vec<Record>,
    pub summary: Summary,
}

pub fn scan_graphs(check: Check, items: &[Item], opts: &ScanOptions) -> ScanOutput {
    let mut records = Vec::new();
    let mut summary = Summary::default();
    for item in items {
        summary.items += 1;
        match &item.graph {
            Err(e) => {
                summary.add(Verdict::Error, false);
                records.push(
                    Record::new()
                        .with("check", check.name())
                        .with("item", item.index)
                        .with("error", e.to_string())
                        .with("verdict", Verdict::Error.name()),
                );
            }
            Ok(g) => match run_check(check, g, opts) {
                None => summary.filtered += 1,
                Some(rec) => {
                    summary.add(rec.verdict, rec.candidate == Some(true));
                    records.push(rec.to_record(opts.timing));
                }
            },
        }
    }
    ScanOutput { records, summary }
}

/// A k-uniform hypergraph with `2 <= k <= 5`, `k <= n <= 15`, `1 <= m <= 12`.
pub fn random_uniform_hypergraph(rng: &mut impl Rng) -> Hypergraph {
    let k = rng.gen_range(2..=5);
    let n = rng.gen_range(k..=15);
    let m = rng.gen_range(1..=12);
    let edges: Vec<Vec<usize>> = (0..m).map(|_| sample(rng, n, k).into_vec()).collect();
    Hypergraph::new(n, edges).expect("sampled edges are in range")
}

pub fn scan_chvatal(samples: usize, opts: &ScanOptions) -> ScanOutput {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut records = Vec::new();
    let mut summary = Summary::default();
    for i in 0..samples {
        let h = random_uniform_hypergraph(&mut rng);
        summary.items += 1;
        let start = Instant::now();
        let tau = min_transversal(&h).map(|t| t.size);
        let bound = chvatal_bound(&h);
        let mut r = Record::new()
            .with("check", Check::Chvatal.name())
            .with("sample", i)
            .with("k", h.uniformity())
            .with("n", h.n())
            .with("m", h.m());
        let verdict = match (tau, bound) {
            (Ok(tau), Ok(b)) => {
                r.push("tau", tau);
                r.push("bound", format!("{}/{}", b.numer(), b.denom()));
                if num_ok(tau as u64, *b.numer(), *b.denom()) {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                r.push("error", e.to_string());
                Verdict::Error
            }
        };
        r.push("verdict", verdict.name());
        if opts.timing {
            r.push("ms", start.elapsed().as_millis() as u64);
        }
        summary.add(verdict, false);
        records.push(r);
    }
    ScanOutput { records, summary }
}

/// `tau <= numer / denom`.
fn num_ok(tau: u64, numer: u64, denom: u64) -> bool {
    tau * denom <= numer
}
