//! The `mvk` command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
//! 3 budget exceeded.

use crate::acceptance;
use crate::bindings::parse_bindings;
use crate::catalog::{self, Source};
use crate::cocycle_file::{parse_cocycle, write_cocycle};
use crate::diagram_file::{parse_diagram, write_diagram, DiagramFileError};
use crate::qtab::{parse_quandle_table, write_quandle_table};
use crate::report::{align, align_with, Format, Record};
use clap::{Parser, Subcommand, ValueEnum};
use mvk_core::algebra::{automorphism_group, classify_magma, commuting_automorphism_tuples, MultiplicationTable};
use mvk_core::bracket::{state_sum, to_port_diagram, BracketError, VirtualRole, DEFAULT_STATE_BUDGET};
use mvk_core::diagram::{builtin_diagram, scheme_pairs, Diagram};
use mvk_core::invariants::{
    cocycle_invariant, coloring_oracle, count_colorings, distinguish, is_operator_cocycle, CocycleTable, InvariantError, OperatorQuandle,
    ORACLE_BUDGET,
};
use mvk_core::LaurentPolynomial;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::io::Write;

#[derive(Parser, Debug)]
#[command(name = "mvk", version, about = "Quandle colorings, cocycle invariants and brackets of multi-virtual links")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a table, validate a diagram, or test a cocycle.
    Check(CheckArgs),
    /// Coloring count and cocycle invariant of one diagram.
    Invariants(InvariantArgs),
    /// Counts over all typing schemes, or a comparison of two diagrams.
    Classify(ClassifyArgs),
    /// The chromatic bracket.
    Bracket(BracketArgs),
    /// List or print builtin diagrams, quandles and cocycles.
    Catalog(CatalogArgs),
    /// Run the acceptance criteria.
    Acceptance(AcceptanceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Require {
    RightQuasigroup,
    Rack,
    Quandle,
}

#[derive(clap::Args, Debug)]
struct CheckArgs {
    /// Table file or builtin quandle name.
    #[arg(long)]
    quandle: Option<String>,
    /// Diagram file or builtin name.
    #[arg(long)]
    diagram: Option<String>,
    /// Cocycle file or builtin name; needs --quandle.
    #[arg(long)]
    cocycle: Option<String>,
    /// Operator binding `label=spec` for the cocycle check.
    #[arg(long = "op")]
    ops: Vec<String>,
    /// What the table must be for the check to pass.
    #[arg(long, value_enum, default_value_t = Require::Quandle)]
    require: Require,
}

#[derive(clap::Args, Debug)]
struct InvariantArgs {
    /// Diagram file or builtin name.
    #[arg(long)]
    diagram: String,
    /// Table file or builtin quandle name.
    #[arg(long)]
    quandle: String,
    /// Operator binding `label=spec`, one per virtual type.
    #[arg(long = "op")]
    ops: Vec<String>,
    /// Cocycle file or builtin name.
    #[arg(long)]
    cocycle: Option<String>,
    /// Also count by brute force.
    #[arg(long)]
    oracle: bool,
    /// Brute-force budget on |Q|^semiarcs.
    #[arg(long, default_value_t = ORACLE_BUDGET)]
    budget: u128,
}

#[derive(clap::Args, Debug)]
struct ClassifyArgs {
    /// Diagram file or builtin name.
    #[arg(long)]
    diagram: String,
    /// Second diagram; compares the two instead of profiling typings.
    #[arg(long)]
    against: Option<String>,
    /// Table file or builtin quandle name.
    #[arg(long)]
    quandle: String,
    /// Number of types in the schemes; defaults to the declared types.
    #[arg(long)]
    types: Option<usize>,
    /// Cocycle used when comparing.
    #[arg(long)]
    cocycle: Option<String>,
}

#[derive(clap::Args, Debug)]
struct BracketArgs {
    /// Diagram file or builtin name.
    #[arg(long)]
    diagram: String,
    /// Role `label=box|circle|node`; labels named after a role need none.
    #[arg(long = "role")]
    roles: Vec<String>,
    /// State budget.
    #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
    budget: u64,
}

#[derive(clap::Args, Debug)]
struct CatalogArgs {
    /// Print one entry in its file format.
    #[arg(long)]
    show: Option<String>,
}

#[derive(clap::Args, Debug)]
struct AcceptanceArgs {
    /// Run only this criterion (1-12).
    #[arg(long)]
    criterion: Option<usize>,
}

/// Command failure with its exit code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    /// Bad arguments or input files.
    #[error("{0}")]
    Usage(String),
    /// A search exceeded its budget.
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    /// Process exit code.
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn invariant_error(e: InvariantError) -> CliError {
    match e {
        InvariantError::Budget { .. } => CliError::Budget(e.to_string()),
        e => usage(e),
    }
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
}

/// A quandle from a file path or builtin name.
pub fn load_quandle(arg: &str) -> Result<MultiplicationTable, CliError> {
    match catalog::resolve(arg) {
        Source::File(p) => parse_quandle_table(&read(&p)?).map_err(|e| usage(format!("{p}:{e}"))),
        Source::Builtin(n) => catalog::builtin_quandle(&n).ok_or_else(|| usage(format!("no such file or builtin quandle: {n}"))),
    }
}

/// A diagram from a file path or builtin name.
pub fn load_diagram(arg: &str) -> Result<Diagram, CliError> {
    match catalog::resolve(arg) {
        Source::File(p) => parse_diagram(&read(&p)?).map_err(|e| match e {
            DiagramFileError::Parse(e) => usage(format!("{p}:{e}")),
            e => usage(format!("{p}: {e}")),
        }),
        Source::Builtin(n) => builtin_diagram(&n).map_err(|_| usage(format!("no such file or builtin diagram: {n}"))),
    }
}

/// A cocycle from a file path or builtin name.
pub fn load_cocycle(arg: &str) -> Result<CocycleTable, CliError> {
    match catalog::resolve(arg) {
        Source::File(p) => parse_cocycle(&read(&p)?).map_err(|e| usage(format!("{p}: {e}"))),
        Source::Builtin(n) => catalog::builtin_cocycle(&n).ok_or_else(|| usage(format!("no such file or builtin cocycle: {n}"))),
    }
}

fn operator_quandle(q: &MultiplicationTable, d: &Diagram, ops: &[String]) -> Result<OperatorQuandle, CliError> {
    let bindings = parse_bindings(q, ops).map_err(usage)?;
    let used = d.labels_in_use();
    if let Some(l) = bindings.keys().find(|l| !d.types().contains(l)) {
        return Err(usage(format!("type {l} is not declared by the diagram")));
    }
    if let Some(l) = used.iter().find(|l| !bindings.contains_key(*l)) {
        return Err(usage(format!("missing operator binding for type {l}; pass --op {l}=<spec>")));
    }
    OperatorQuandle::new(q.clone(), bindings).map_err(usage)
}

/// Renders a scheme as its digits, comma-separated past 9.
pub fn scheme_text(u: &[usize]) -> String {
    if u.iter().all(|&x| x < 10) {
        u.iter().map(usize::to_string).collect()
    } else {
        u.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Coloring counts for every scheme and commuting tuple, computed in
/// parallel; same layout as [`mvk_core::invariants::invariant_profile`].
pub fn parallel_profile(d: &Diagram, q: &MultiplicationTable, k: usize) -> Result<mvk_core::invariants::InvariantProfile, CliError> {
    let labels = d.types().to_vec();
    if labels.len() > k {
        return Err(usage(format!("diagram declares {} types, more than --types {k}", labels.len())));
    }
    let auts = automorphism_group(q);
    let tuples = commuting_automorphism_tuples(&auts, 2 * k, true);
    if tuples.is_empty() {
        return Err(usage(format!("no {} distinct pairwise commuting automorphisms", 2 * k)));
    }
    let schemes = scheme_pairs(k);
    let cells: Vec<(usize, usize)> = (0..schemes.len()).flat_map(|s| (0..tuples.len()).map(move |t| (s, t))).collect();
    let counts: Vec<u64> = cells
        .par_iter()
        .map(|&(s, t)| {
            let ops = labels.iter().zip(&schemes[s]).map(|(l, &slot)| (l.clone(), auts[tuples[t][slot - 1]].clone())).collect();
            let oq = OperatorQuandle::new(q.clone(), ops).map_err(usage)?;
            count_colorings(d, &oq).map_err(invariant_error)
        })
        .collect::<Result<_, _>>()?;
    let values = counts.chunks(tuples.len()).map(<[u64]>::to_vec).collect();
    Ok(mvk_core::invariants::InvariantProfile { labels, schemes, tuples, automorphisms: auts, values })
}

/// Bracket with the state sum split across threads.
pub fn parallel_bracket(d: &Diagram, roles: &BTreeMap<String, VirtualRole>, budget: u64) -> Result<LaurentPolynomial, BracketError> {
    let pd = to_port_diagram(d, roles)?;
    let states = pd.state_count();
    if states > budget {
        return Err(BracketError::StateBudget { states, budget });
    }
    let chunk = (states / 256).max(1 << 12);
    let ranges: Vec<std::ops::Range<u64>> = (0..states).step_by(chunk as usize).map(|a| a..(a + chunk).min(states)).collect();
    Ok(ranges.into_par_iter().map(|r| state_sum(&pd, r)).reduce(LaurentPolynomial::zero, |a, b| a + b))
}

struct Output {
    format: Format,
    lines: Vec<String>,
}

impl Output {
    fn record(&mut self, r: Record) {
        self.lines.push(r.render(self.format));
    }

    fn text(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn is_text(&self) -> bool {
        self.format == Format::Text
    }
}

fn check(a: &CheckArgs, o: &mut Output) -> Result<bool, CliError> {
    if a.quandle.is_none() && a.diagram.is_none() {
        return Err(usage("check needs --quandle and/or --diagram"));
    }
    let mut ok = true;
    let mut table = None;
    if let Some(qa) = &a.quandle {
        let t = load_quandle(qa)?;
        let p = classify_magma(&t);
        let pass = match a.require {
            Require::RightQuasigroup => p.right_quasigroup,
            Require::Rack => p.rack,
            Require::Quandle => p.quandle,
        };
        ok &= pass;
        let mut r = Record::new().field("table", qa.as_str()).field("order", t.order());
        for (k, v) in p.flags() {
            r = r.field(k, v);
        }
        if o.is_text() {
            o.text(format!("quandle {qa} (order {})", t.order()));
            for (k, v) in p.flags() {
                o.text(format!("  {k}={v}"));
            }
        } else {
            o.record(r);
        }
        table = Some(t);
    }
    if let Some(da) = &a.diagram {
        let d = match load_diagram(da) {
            Ok(d) => Some(d),
            Err(CliError::Usage(m)) if m.contains("invalid diagram") => {
                ok = false;
                o.record(Record::new().field("diagram", da.as_str()).field("valid", false).field("reason", m));
                None
            }
            Err(e) => return Err(e),
        };
        if let Some(d) = d {
            o.record(
                Record::new()
                    .field("diagram", da.as_str())
                    .field("valid", true)
                    .field("components", d.components().len())
                    .field("classical", d.classical_count())
                    .field("virtual", d.virtual_count())
                    .field("types", d.types().join(",")),
            );
            if let (Some(ca), Some(t)) = (&a.cocycle, &table) {
                let phi = load_cocycle(ca)?;
                let oq = operator_quandle(t, &d, &a.ops)?;
                let pass = is_operator_cocycle(&oq, &phi);
                ok &= pass;
                o.record(Record::new().field("cocycle", ca.as_str()).field("operator_cocycle", pass));
            }
            return Ok(ok);
        }
    }
    if let Some(ca) = &a.cocycle {
        let t = table.as_ref().ok_or_else(|| usage("--cocycle needs --quandle"))?;
        let phi = load_cocycle(ca)?;
        let bindings = parse_bindings(t, &a.ops).map_err(usage)?;
        let oq = OperatorQuandle::new(t.clone(), bindings).map_err(usage)?;
        let pass = is_operator_cocycle(&oq, &phi);
        ok &= pass;
        o.record(Record::new().field("cocycle", ca.as_str()).field("operator_cocycle", pass));
    }
    Ok(ok)
}

fn invariants(a: &InvariantArgs, o: &mut Output) -> Result<bool, CliError> {
    let d = load_diagram(&a.diagram)?;
    let q = load_quandle(&a.quandle)?;
    let oq = operator_quandle(&q, &d, &a.ops)?;
    let col = count_colorings(&d, &oq).map_err(invariant_error)?;
    let mut r = Record::new().field("col", col);
    let mut ok = true;
    if let Some(ca) = &a.cocycle {
        let phi = load_cocycle(ca)?;
        if is_operator_cocycle(&oq, &phi) {
            let v = cocycle_invariant(&d, &oq, &phi).map_err(invariant_error)?;
            r = r.field("coc", v.display(&phi).to_string());
        } else {
            ok = false;
            r = r.field("coc", "incompatible");
        }
    }
    if a.oracle {
        let n = coloring_oracle(&d, &oq, a.budget).map_err(invariant_error)?;
        ok &= n == col;
        r = r.field("oracle", n);
    }
    if o.is_text() {
        for (k, v) in &r.0 {
            o.text(format!("{k}={v}"));
        }
    } else {
        o.record(r);
    }
    Ok(ok)
}

fn classify(a: &ClassifyArgs, o: &mut Output) -> Result<bool, CliError> {
    let d = load_diagram(&a.diagram)?;
    let q = load_quandle(&a.quandle)?;
    if let Some(other) = &a.against {
        let d2 = load_diagram(other)?;
        let phi = a.cocycle.as_deref().map(load_cocycle).transpose()?;
        let rep = distinguish(&d, &d2, &q, phi.as_ref()).map_err(invariant_error)?;
        let rows: Vec<Record> = rep
            .differences
            .iter()
            .map(|x| {
                let asg = x.assignment.iter().map(|(l, i)| format!("{l}:{i}")).collect::<Vec<_>>().join(",");
                Record::new()
                    .field("assignment", asg)
                    .field("invariant", x.invariant)
                    .field("left", x.left.clone())
                    .field("right", x.right.clone())
            })
            .collect();
        let summary = Record::new()
            .field("distinguished", rep.distinguished())
            .field("assignments", rep.assignments)
            .field("differences", rep.differences.len());
        if o.is_text() {
            let mut t = vec![["assignment", "invariant", "left", "right"].map(String::from).to_vec()];
            t.extend(rows.iter().map(|r| r.0.iter().map(|(_, v)| v.to_string()).collect()));
            if !rows.is_empty() {
                o.text(align(&t).trim_end());
            }
            o.text(if rep.distinguished() {
                format!("distinguished by {} of {} assignments", rep.differences.len(), rep.assignments)
            } else {
                format!("not distinguished by any of {} assignments", rep.assignments)
            });
        } else {
            rows.into_iter().for_each(|r| o.record(r));
            o.record(summary);
        }
        return Ok(true);
    }
    let k = a.types.unwrap_or(d.types().len().max(1));
    let p = parallel_profile(&d, &q, k)?;
    let pairs = p.undistinguished_pairs();
    let pair_text: Vec<String> =
        pairs.iter().map(|&(i, j)| format!("{}~{}", scheme_text(&p.schemes[i]), scheme_text(&p.schemes[j]))).collect();
    if o.is_text() {
        o.text(format!("{} automorphisms, {} commuting tuples of {} distinct", p.automorphisms.len(), p.tuples.len(), 2 * k));
        let mut t = vec![std::iter::once("scheme".to_string()).chain((0..p.tuples.len()).map(|i| format!("t{i}"))).collect::<Vec<_>>()];
        for (s, u) in p.schemes.iter().enumerate() {
            t.push(std::iter::once(scheme_text(u)).chain(p.values[s].iter().map(u64::to_string)).collect());
        }
        o.text(align(&t).trim_end());
        o.text(if pairs.is_empty() {
            format!("all {} schemes pairwise distinguished", p.schemes.len())
        } else {
            format!("undistinguished: {}", pair_text.join(" "))
        });
    } else {
        for (s, u) in p.schemes.iter().enumerate() {
            for (t, tuple) in p.tuples.iter().enumerate() {
                o.record(Record::new().field("scheme", scheme_text(u)).field("tuple", tuple.clone()).field("col", p.values[s][t]));
            }
        }
        let undist = if pairs.is_empty() { "none".to_string() } else { pair_text.join(",") };
        o.record(Record::new().field("schemes", p.schemes.len()).field("tuples", p.tuples.len()).field("undistinguished", undist));
    }
    Ok(true)
}

fn bracket(a: &BracketArgs, o: &mut Output) -> Result<bool, CliError> {
    let d = load_diagram(&a.diagram)?;
    let mut roles = BTreeMap::new();
    for item in &a.roles {
        let (l, r) = item.split_once('=').ok_or_else(|| usage(format!("role {item:?} is not of the form label=role")))?;
        let l = match l {
            "alpha" => "α",
            "beta" => "β",
            l => l,
        };
        let role = VirtualRole::from_label(r).ok_or_else(|| usage(format!("unknown role {r:?}; use box, circle or node")))?;
        roles.insert(l.to_string(), role);
    }
    let v = parallel_bracket(&d, &roles, a.budget).map_err(|e| match e {
        BracketError::StateBudget { .. } => CliError::Budget(e.to_string()),
        BracketError::TooManyTypes(t) => {
            usage(format!("the bracket is defined for at most two virtual types besides nodes; found {}", t.join(", ")))
        }
        BracketError::UnknownRole(l) => usage(format!("no bracket role for type {l}; pass --role {l}=box|circle|node")),
        e => usage(e),
    })?;
    if o.is_text() {
        o.text(v.to_string());
    } else {
        o.record(Record::new().field("bracket", v.to_string()));
    }
    Ok(true)
}

fn catalog_cmd(a: &CatalogArgs, o: &mut Output) -> Result<bool, CliError> {
    if let Some(name) = &a.show {
        let text = if let Some(doc) = catalog::table_document(name) {
            doc.to_string()
        } else if let Some(t) = catalog::builtin_quandle(name) {
            write_quandle_table(&t)
        } else if let Some(c) = catalog::builtin_cocycle(name) {
            write_cocycle(&c)
        } else if let Ok(d) = builtin_diagram(name) {
            write_diagram(&d)
        } else {
            return Err(usage(format!("no catalog entry {name}")));
        };
        o.text(text.trim_end());
        return Ok(true);
    }
    let mut recs = Vec::new();
    for (name, d) in catalog::diagram_samples() {
        recs.push(
            Record::new()
                .field("kind", "diagram")
                .field("name", name)
                .field("classical", d.classical_count())
                .field("virtual", d.virtual_count())
                .field("types", d.types().join(",")),
        );
    }
    for name in catalog::quandle_names() {
        let sample = match name.as_str() {
            "dihedral(n)" => "dihedral(3)".to_string(),
            "projection(n)" => "projection(2)".to_string(),
            "qme(e1,..,em)" => "qme(0)".to_string(),
            n => n.to_string(),
        };
        let t = catalog::builtin_quandle(&sample).expect("listed quandles build");
        let p = classify_magma(&t);
        recs.push(Record::new().field("kind", "quandle").field("name", sample).field("order", t.order()).field("connected", p.connected));
    }
    recs.push(Record::new().field("kind", "cocycle").field("name", "q4_phi").field("quandle", "q4"));
    if o.is_text() {
        let rows: Vec<Vec<String>> = recs.iter().map(|r| r.0.iter().map(|(k, v)| format!("{k}={v}")).collect()).collect();
        let rows: Vec<Vec<String>> = rows.into_iter().map(|r| r.into_iter().skip(1).collect()).collect();
        let (kinds, mut start) = (["diagram", "quandle", "cocycle"], 0);
        for kind in kinds {
            let n = recs[start..].iter().take_while(|r| r.get("kind").map(|v| v.to_string()) == Some(kind.into())).count();
            o.text(format!("{kind}s:"));
            o.text(align_with(&rows[start..start + n], false).trim_end().lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n"));
            start += n;
        }
    } else {
        recs.into_iter().for_each(|r| o.record(r));
    }
    Ok(true)
}

fn acceptance_cmd(a: &AcceptanceArgs, o: &mut Output) -> Result<bool, CliError> {
    let ids: Vec<usize> = match a.criterion {
        Some(n) if (1..=acceptance::CRITERIA).contains(&n) => vec![n],
        Some(n) => return Err(usage(format!("no criterion {n}; use 1-{}", acceptance::CRITERIA))),
        None => (1..=acceptance::CRITERIA).collect(),
    };
    let mut ok = true;
    for id in ids {
        let r = acceptance::run(id).expect("criterion in range");
        ok &= r.pass();
        let status = if r.pass() { "PASS" } else { "FAIL" };
        if o.is_text() {
            o.text(format!("{status} {id:>2} {}", r.title));
            for p in &r.parts {
                let mark = if p.pass { "ok  " } else { "FAIL" };
                let detail = if p.detail.is_empty() { String::new() } else { format!(": {}", p.detail) };
                o.text(format!("     {mark} {}{detail}", p.name));
            }
        } else {
            for p in &r.parts {
                o.record(
                    Record::new()
                        .field("criterion", id)
                        .field("part", p.name.clone())
                        .field("pass", p.pass)
                        .field("detail", p.detail.clone()),
                );
            }
            o.record(Record::new().field("criterion", id).field("status", status));
        }
    }
    Ok(ok)
}

/// Runs the command line, writing the report to `out` and diagnostics to
/// `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut o = Output { format: cli.format, lines: Vec::new() };
    let exec = |o: &mut Output| match &cli.command {
        Command::Check(a) => check(a, o),
        Command::Invariants(a) => invariants(a, o),
        Command::Classify(a) => classify(a, o),
        Command::Bracket(a) => bracket(a, o),
        Command::Catalog(a) => catalog_cmd(a, o),
        Command::Acceptance(a) => acceptance_cmd(a, o),
    };
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| exec(&mut o)),
            Err(e) => Err(usage(e)),
        },
        None => exec(&mut o),
    };
    for l in &o.lines {
        let _ = writeln!(out, "{l}");
    }
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

/// Runs and captures `(code, stdout, stderr)`.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 output"), String::from_utf8(err).expect("utf-8 diagnostics"))
}
