//! Command-line entry points.
//!
//! Exit codes: 0 when every check passes, 1 when a counterexample or failed
//! claim was found, 2 for usage, parse and budget errors.

pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bival::{compare_vacuous, extract, BivalKind};
use crate::classify::{classify_with, Class};
use crate::error::Error;
use crate::format::{parse_subset_arg, ArrowFile, StructureFile};
use crate::gallery::{run_claims, GalleryId};
use crate::par::Execution;
use crate::propcheck::{
    corpus, run_registry_with, select_from, Entry, GeneratorSpec, RegistryReport, Strategy,
    Subject, REGISTRY,
};
use crate::properties::{
    check_set, check_structure, enumerate_sets_with, SetProperty, StructureProperty,
};
use crate::structure::{ArrowTable, LogicalStructure};

pub use report::{ReportDocument, SCHEMA};

#[derive(Debug, Parser)]
#[command(
    name = "lsx",
    version,
    about = "Decide, enumerate and test properties of finite logical structures"
)]
pub struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Run every scan on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one set or structure property.
    Check {
        file: PathBuf,
        #[arg(long)]
        property: String,
        /// Comma-separated elements, or `empty`.
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        alpha: Option<usize>,
        #[command(flatten)]
        arrow: ArrowArg,
    },
    /// Every class verdict with witnesses.
    Classify { file: PathBuf },
    /// All subsets with a set property.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        alpha: Option<usize>,
        #[command(flatten)]
        arrow: ArrowArg,
    },
    /// Run registry entries on one structure.
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        theorems: String,
        #[command(flatten)]
        arrow: ArrowArg,
    },
    /// Run registry entries over a generated corpus.
    Corpus {
        /// One or more of arbitrary, monotone, bivaluation, arrowed; comma-separated.
        #[arg(long)]
        generator: String,
        /// Samples per generator.
        #[arg(long)]
        count: usize,
        #[arg(long)]
        size_min: usize,
        #[arg(long)]
        size_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "all")]
        theorems: String,
    },
    /// The gallery of infinite examples.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Build a named valuation set, optionally comparing it with the structure.
    Bival {
        file: PathBuf,
        #[arg(long)]
        emit: String,
        #[arg(long)]
        compare: bool,
    },
}

#[derive(Debug, Args)]
pub struct ArrowArg {
    /// Arrow table file; defaults to the second projection.
    #[arg(long)]
    pub arrow: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GalleryAction {
    List,
    /// Run one item's claims, or `all`.
    Run {
        id: String,
    },
}

/// The result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Everything that terminates a command early.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Lib(e) => e.fmt(f),
        }
    }
}

type Step<T> = std::result::Result<T, Failure>;

struct Ctx<'r> {
    exec: Execution,
    registry: &'r [Entry],
    doc: ReportDocument,
    notes: String,
}

pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_registry(args, &REGISTRY)
}

/// As [`run`], with `verify` and `corpus` drawing entries from `registry`.
pub fn run_with_registry<I, T>(args: I, registry: &[Entry]) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Invocation {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Invocation {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let echo = report::CommandEcho {
        name: command_name(&cli.command).to_string(),
        args: args
            .iter()
            .skip(1)
            .map(|a| a.to_string_lossy().into_owned())
            .collect(),
    };
    let mut ctx = Ctx {
        exec: if cli.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
        registry,
        doc: ReportDocument::new(echo),
        notes: String::new(),
    };
    let start = Instant::now();
    let outcome = dispatch(&mut ctx, &cli.command);
    ctx.doc.timing.elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    let mut stderr = String::new();
    ctx.doc.exit_code = match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {f}");
            ctx.doc.error = Some(f.to_string());
            2
        }
    };
    let stdout = if cli.json {
        ctx.doc.to_json()
    } else if ctx.doc.error.is_some() {
        String::new()
    } else {
        ctx.doc.to_text(&ctx.notes)
    };
    Invocation {
        code: ctx.doc.exit_code,
        stdout,
        stderr,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Classify { .. } => "classify",
        Command::Enumerate { .. } => "enumerate",
        Command::Verify { .. } => "verify",
        Command::Corpus { .. } => "corpus",
        Command::Gallery { .. } => "gallery",
        Command::Bival { .. } => "bival",
    }
}

fn read(path: &Path) -> Step<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(ctx: &mut Ctx, path: &Path) -> Step<LogicalStructure> {
    let text = read(path)?;
    let file = StructureFile::parse(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let s = file
        .to_structure()
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    ctx.doc.structure = Some(report::StructureInfo::new(&file.name, &s));
    Ok(s)
}

fn load_arrow(arg: &ArrowArg, s: &LogicalStructure) -> Step<ArrowTable> {
    let Some(path) = &arg.arrow else {
        return Ok(ArrowTable::second_projection(s.n()));
    };
    let text = read(path)?;
    let a =
        ArrowFile::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if a.table.n() != s.n() {
        return Err(Error::SizeMismatch(s.n(), a.table.n()).into());
    }
    Ok(a.table)
}

fn dispatch(ctx: &mut Ctx, command: &Command) -> Step<i32> {
    match command {
        Command::Check {
            file,
            property,
            gamma,
            alpha,
            arrow,
        } => check(ctx, file, property, gamma.as_deref(), *alpha, arrow),
        Command::Classify { file } => classify_cmd(ctx, file),
        Command::Enumerate {
            file,
            kind,
            alpha,
            arrow,
        } => enumerate(ctx, file, kind, *alpha, arrow),
        Command::Verify {
            file,
            theorems,
            arrow,
        } => verify(ctx, file, theorems, arrow),
        Command::Corpus {
            generator,
            count,
            size_min,
            size_max,
            seed,
            theorems,
        } => corpus_cmd(
            ctx, generator, *count, *size_min, *size_max, *seed, theorems,
        ),
        Command::Gallery { action } => gallery(ctx, action),
        Command::Bival {
            file,
            emit,
            compare,
        } => bival(ctx, file, emit, *compare),
    }
}

fn check(
    ctx: &mut Ctx,
    file: &Path,
    property: &str,
    gamma: Option<&str>,
    alpha: Option<usize>,
    arrow: &ArrowArg,
) -> Step<i32> {
    let s = load(ctx, file)?;
    let arrow = load_arrow(arrow, &s)?;
    if SetProperty::TAGS.contains(&property) {
        let prop = SetProperty::from_tag(property, alpha, Some(arrow))
            .ok_or_else(|| Failure::Usage(format!("property `{property}` needs --alpha")))?;
        let gamma =
            gamma.ok_or_else(|| Failure::Usage(format!("property `{property}` needs --gamma")))?;
        let g = parse_subset_arg(gamma, s.n())?;
        let v = check_set(&s, &prop, g)?;
        let name = prop.to_string();
        ctx.doc.verdict(&name, v.holds());
        ctx.doc.details = json!({ "gamma": g, "property": name });
        if let Some(w) = v.witness() {
            ctx.doc.witness(&name, w.to_string(), w);
        }
        Ok(if v.holds() { 0 } else { 1 })
    } else if StructureProperty::TAGS.contains(&property) || property == "tarski" {
        let prop = StructureProperty::from_tag(property, Some(arrow)).expect("known tag");
        let v = check_structure(&s, &prop)?;
        ctx.doc.verdict(prop.tag(), v.holds());
        if let Some(w) = v.witness() {
            ctx.doc.witness(prop.tag(), w.to_string(), w);
        }
        Ok(if v.holds() { 0 } else { 1 })
    } else {
        Err(Failure::Usage(format!(
            "unknown property `{property}`; set properties: {}; structure properties: {}",
            SetProperty::TAGS.join(", "),
            StructureProperty::TAGS.join(", ")
        )))
    }
}

fn classify_cmd(ctx: &mut Ctx, file: &Path) -> Step<i32> {
    let s = load(ctx, file)?;
    let r = classify_with(&s, ctx.exec)?;
    for c in Class::ALL {
        ctx.doc.verdict(c.name(), r.get(c));
    }
    for (c, w) in &r.witnesses {
        ctx.doc.witness(c.name(), w.to_string(), w);
    }
    let violations = r.invariant_violations();
    ctx.doc.details = json!({ "invariant_violations": violations });
    for v in &violations {
        let _ = writeln!(ctx.notes, "invariant violated: {v}");
    }
    Ok(if violations.is_empty() { 0 } else { 1 })
}

fn enumerate(
    ctx: &mut Ctx,
    file: &Path,
    kind: &str,
    alpha: Option<usize>,
    arrow: &ArrowArg,
) -> Step<i32> {
    let s = load(ctx, file)?;
    let arrow = load_arrow(arrow, &s)?;
    let prop = SetProperty::from_tag(kind, alpha, Some(arrow)).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown kind `{kind}` or missing --alpha; kinds: {}",
            SetProperty::TAGS.join(", ")
        ))
    })?;
    let members = enumerate_sets_with(&s, &prop, ctx.exec)?;
    for m in &members {
        let _ = writeln!(ctx.notes, "{m}");
    }
    let _ = writeln!(ctx.notes, "{} sets are {prop}", members.len());
    ctx.doc.details =
        json!({ "kind": prop.to_string(), "count": members.len(), "members": members });
    Ok(0)
}

fn registry_report(ctx: &mut Ctx, r: &RegistryReport) -> i32 {
    for e in &r.entries {
        ctx.doc.verdict(e.id, e.failures == 0);
        let _ = writeln!(
            ctx.notes,
            "{} fired {} checked {} failures {}{}  {}",
            e.id,
            e.fired,
            e.checked,
            e.failures,
            if e.uncovered { " uncovered" } else { "" },
            e.anchor
        );
        for w in &e.witnesses {
            ctx.doc.witness(e.id, &w.detail, w);
        }
    }
    let uncovered = r.uncovered();
    ctx.doc.details = json!({
        "samples": r.samples,
        "failures": r.failures(),
        "uncovered": uncovered,
        "entries": r.entries.iter().map(|e| json!({
            "id": e.id,
            "anchor": e.anchor,
            "fired": e.fired,
            "checked": e.checked,
            "failures": e.failures,
            "uncovered": e.uncovered,
        })).collect::<Vec<_>>(),
    });
    let _ = writeln!(
        ctx.notes,
        "{} structures, {} failures",
        r.samples,
        r.failures()
    );
    if r.passed() {
        0
    } else {
        1
    }
}

fn verify(ctx: &mut Ctx, file: &Path, theorems: &str, arrow: &ArrowArg) -> Step<i32> {
    let s = load(ctx, file)?;
    let arrow = load_arrow(arrow, &s)?;
    let entries = select_from(ctx.registry, theorems)?;
    let subject = Subject {
        index: 0,
        strategy: None,
        structure: &s,
        arrow: &arrow,
    };
    let r = run_registry_with(&[subject], &entries, ctx.exec)?;
    Ok(registry_report(ctx, &r))
}

fn corpus_cmd(
    ctx: &mut Ctx,
    generator: &str,
    count: usize,
    size_min: usize,
    size_max: usize,
    seed: u64,
    theorems: &str,
) -> Step<i32> {
    let entries = select_from(ctx.registry, theorems)?;
    let mut samples = Vec::new();
    for g in generator.split(',') {
        let strategy = Strategy::from_name(g.trim())
            .ok_or_else(|| Failure::Usage(format!("unknown generator `{g}`")))?;
        let spec = GeneratorSpec::new(strategy, size_min..=size_max, seed, count);
        samples.extend(corpus(&spec)?);
    }
    let subjects: Vec<Subject> = samples.iter().map(Subject::from).collect();
    let r = run_registry_with(&subjects, &entries, ctx.exec)?;
    Ok(registry_report(ctx, &r))
}

fn gallery(ctx: &mut Ctx, action: &GalleryAction) -> Step<i32> {
    match action {
        GalleryAction::List => {
            let items: Vec<_> = GalleryId::ALL
                .iter()
                .map(|id| {
                    let _ = writeln!(
                        ctx.notes,
                        "{:<18} {:<8} {}",
                        id.name(),
                        id.carrier().name(),
                        id.rule()
                    );
                    json!({ "id": id.name(), "carrier": id.carrier().name(), "rule": id.rule() })
                })
                .collect();
            ctx.doc.details = json!({ "items": items });
            Ok(0)
        }
        GalleryAction::Run { id } => {
            let ids: Vec<GalleryId> = if id.eq_ignore_ascii_case("all") {
                GalleryId::ALL.to_vec()
            } else {
                vec![GalleryId::from_name(id)?]
            };
            let reports: Vec<_> = ids.iter().map(|&id| run_claims(id)).collect();
            let mut ok = true;
            for r in &reports {
                let _ = writeln!(
                    ctx.notes,
                    "{} on {}: {}",
                    r.gallery.name(),
                    r.carrier,
                    r.rule
                );
                for c in &r.claims {
                    let name = format!("{}:{}", r.gallery.name(), c.id);
                    ctx.doc.verdict(&name, c.passed());
                    let _ = writeln!(
                        ctx.notes,
                        "  {:<8} {:<32} expected {} actual {}  {}",
                        if c.passed() { "pass" } else { "FAIL" },
                        c.id,
                        c.expected,
                        c.actual,
                        c.statement
                    );
                    if !c.passed() {
                        ok = false;
                        let text = c.error.clone().unwrap_or_else(|| c.statement.to_string());
                        ctx.doc.witness(&name, text, c);
                    }
                }
            }
            ctx.doc.details = json!({ "reports": reports });
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn bival(ctx: &mut Ctx, file: &Path, emit: &str, compare: bool) -> Step<i32> {
    let s = load(ctx, file)?;
    let kind = BivalKind::from_name(emit).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown valuation set `{emit}`; use scs, scs-star, relmax or suszko"
        ))
    })?;
    let v = extract(&s, kind);
    for m in v.base.iter() {
        let _ = writeln!(ctx.notes, "χ {m}");
    }
    let _ = writeln!(ctx.notes, "{} has {} members", kind.name(), v.base.len());
    let mut details = json!({ "kind": kind.name(), "size": v.base.len(), "set": v });
    let mut code = 0;
    if compare {
        let cmp = compare_vacuous(&s, &v.base)?;
        ctx.doc.verdict("sound", cmp.sound);
        ctx.doc.verdict("complete", cmp.complete);
        ctx.doc.verdict("adequate", cmp.adequate());
        for (g, a) in &cmp.unsound {
            ctx.doc.witness(
                "sound",
                format!("{g} ⊢ {a} but not semantically"),
                json!([g, a]),
            );
        }
        for (g, a) in &cmp.incomplete {
            ctx.doc.witness(
                "complete",
                format!("{g} ⊨ {a} but {g} ⊬ {a}"),
                json!([g, a]),
            );
        }
        details["comparison"] = serde_json::to_value(&cmp).expect("serializes");
        if !cmp.adequate() {
            code = 1;
        }
    }
    ctx.doc.details = details;
    Ok(code)
}
