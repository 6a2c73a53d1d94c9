//! The `satblow` command line.
//!
//! Every subcommand builds a single JSON document. `--format text` renders
//! the same document as `key: value` lines, or as an aligned table for
//! commands that produce rows.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use satblow::constructions::{ConstructionSpec, Family};
use satblow::io::{parse_pbg, write_pbg};
use satblow::solve::{kr_sat_bounds, m_value, solve_exact, MSearchOptions, MWitness, Objective, SolveOptions};
use satblow::verify::{check_k4_lemmas, CheckOutcome, K4LemmaReport};
use satblow::{
    count_partite_copies, is_extra_saturated, is_partite_free, is_partite_saturated, Edge, PartiteGraph, PatternGraph,
    Verdict, Witness,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "satblow", version, about = "Partite saturation in blow-up graphs")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads for parallel scans.
    #[arg(long, env = "SATBLOW_THREADS", default_value_t = 1, global = true)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    Sat,
    Exsat,
    Free,
    K4lemmas,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SolveMode {
    Sat,
    Exsat,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one of the known constructions and write it as a .pbg file.
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Size parameter for the star, path and clique families.
        #[arg(long)]
        r: Option<usize>,
        /// Named pattern (k4, p3, c5, star-2, ...) or a .pat file.
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; the graph goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a graph for partite-freeness, saturation or the K4 structure.
    Verify {
        #[arg(long, value_enum)]
        mode: VerifyMode,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Count partite copies of the pattern.
    Count {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Exact minimum number of edges.
    Solve {
        #[arg(long, value_enum)]
        mode: SolveMode,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long)]
        no_symmetry: bool,
        /// Where to write the best graph found.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Smallest witness size m(r, s).
    Mvalue {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Bounds on the saturation number of K_r in K_r[n].
    Bounds {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Formula, construction and optional solver value for a range of n.
    Table {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Also run the exact solver where the host is small enough.
        #[arg(long)]
        solver: bool,
        /// Per-row solver budget in seconds.
        #[arg(long, default_value_t = 10.0)]
        budget: f64,
    },
}

/// A failure that ends the command with a non-zero exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn malformed(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_MALFORMED,
            message: message.into(),
        }
    }
}

impl From<satblow::Error> for Failure {
    fn from(e: satblow::Error) -> Self {
        Failure::malformed(e.to_string())
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

enum Output {
    Doc(Value),
    /// Written verbatim regardless of `--format`.
    Raw(String),
}

struct Outcome {
    output: Output,
    code: i32,
}

impl Outcome {
    fn doc(doc: Value, code: i32) -> Self {
        Outcome {
            output: Output::Doc(doc),
            code,
        }
    }
}

impl From<Value> for Outcome {
    fn from(doc: Value) -> Self {
        Outcome::doc(doc, EXIT_OK)
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return EXIT_MALFORMED;
            }
            let _ = write!(out, "{rendered}");
            return EXIT_OK;
        }
    };
    if cli.threads == 0 {
        let _ = writeln!(err, "error: --threads must be at least 1");
        return EXIT_MALFORMED;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_MALFORMED;
        }
    };
    let format = cli.format;
    match pool.install(|| dispatch(cli.command)) {
        Ok(Outcome { output, code }) => {
            let _ = match (format, output) {
                (_, Output::Raw(text)) => write!(out, "{text}"),
                (Format::Json, Output::Doc(doc)) => writeln!(out, "{doc}"),
                (Format::Text, Output::Doc(doc)) => write!(out, "{}", render_text(&doc)),
            };
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Construct {
            family,
            n,
            r,
            pattern,
            seed,
            output,
        } => construct(family, n, r, pattern, seed, output),
        Command::Verify { mode, graph } => verify(mode, &graph),
        Command::Count { graph } => {
            let g = load_graph(&graph)?;
            Ok(json!({ "count": count_partite_copies(&g).to_string() }).into())
        }
        Command::Solve {
            mode,
            pattern,
            n,
            budget,
            no_symmetry,
            output,
        } => solve(mode, &pattern, n, budget, no_symmetry, output),
        Command::Mvalue {
            r,
            s,
            max_vertices,
            budget,
        } => {
            let options = MSearchOptions {
                max_vertices,
                budget: parse_budget(budget)?,
                symmetry: true,
            };
            let result = m_value(r, s, &options)?;
            let mut doc = Map::new();
            doc.insert("r".into(), json!(r));
            doc.insert("s".into(), json!(s));
            doc.insert("value".into(), value_or_unknown(result.value));
            doc.insert("lower_bound".into(), json!(result.lower_bound));
            doc.insert(
                "witness".into(),
                result.witness.as_ref().map_or(Value::Null, m_witness_json),
            );
            doc.insert("nodes".into(), json!(result.nodes_explored));
            doc.insert("elapsed_ms".into(), json!(result.elapsed.as_millis() as u64));
            let code = if result.value.is_some() { EXIT_OK } else { EXIT_BUDGET };
            Ok(Outcome::doc(Value::Object(doc), code))
        }
        Command::Bounds {
            r,
            n,
            max_vertices,
            budget,
        } => {
            let options = MSearchOptions {
                max_vertices,
                budget: parse_budget(budget)?,
                symmetry: true,
            };
            let bounds = kr_sat_bounds(r, n, &options)?;
            let unknown = bounds.unknown();
            let doc = json!({
                "r": r,
                "n": n,
                "lower": value_or_unknown(bounds.lower),
                "upper": value_or_unknown(bounds.upper),
                "m_lower": { "r": r - 1, "s": r - 1, "value": value_or_unknown(bounds.lower_m.value) },
                "m_upper": { "r": r, "s": r - 1, "value": value_or_unknown(bounds.upper_m.value) },
                "unknown": unknown,
            });
            let code = if unknown.is_empty() { EXIT_OK } else { EXIT_BUDGET };
            Ok(Outcome::doc(doc, code))
        }
        Command::Table {
            family,
            n_from,
            n_to,
            r,
            pattern,
            seed,
            solver,
            budget,
        } => table(family, n_from..=n_to, r, pattern, seed, solver, budget),
    }
}

fn construct(
    family: Family,
    n: usize,
    r: Option<usize>,
    pattern: Option<String>,
    seed: Option<u64>,
    output: Option<PathBuf>,
) -> CmdResult {
    let spec = construction_spec(family, n, r, pattern.as_deref(), seed)?;
    let built = spec.build()?;
    let mut comments = vec![format!("family={} n={} edges={}", family, n, built.graph.edge_count())];
    comments.extend(built.flags.iter().map(|f| format!("warning: {f}")));
    let text = write_pbg(&built.graph, &comments);
    match output {
        None => Ok(Outcome {
            output: Output::Raw(text),
            code: EXIT_OK,
        }),
        Some(path) => {
            write_file(&path, &text)?;
            Ok(json!({
                "family": family.name(),
                "n": n,
                "edges": built.graph.edge_count(),
                "formula": built.formula,
                "flags": built.flags,
                "output": path.display().to_string(),
            })
            .into())
        }
    }
}

fn construction_spec(
    family: Family,
    n: usize,
    r: Option<usize>,
    pattern: Option<&str>,
    seed: Option<u64>,
) -> Result<ConstructionSpec, Failure> {
    if family == Family::TwoConnected && seed.is_none() {
        return Err(Failure::malformed(
            "family two-connected is randomized and needs --seed",
        ));
    }
    let pattern = pattern.map(load_pattern).transpose()?;
    Ok(ConstructionSpec {
        family,
        n,
        r,
        pattern,
        seed: seed.unwrap_or(0),
    })
}

fn verify(mode: VerifyMode, path: &Path) -> CmdResult {
    let g = load_graph(path)?;
    let doc = match mode {
        VerifyMode::Sat => verdict_json(&is_partite_saturated(&g), Vec::new()),
        VerifyMode::Exsat => verdict_json(&is_extra_saturated(&g), Vec::new()),
        VerifyMode::Free => verdict_json(&is_partite_free(&g), Vec::new()),
        VerifyMode::K4lemmas => {
            let pattern = g.pattern();
            if pattern.vertex_count() != 4 || !pattern.is_complete() {
                return Err(satblow::Error::NotK4.into());
            }
            let verdict = is_partite_saturated(&g);
            if !verdict.is_ok() {
                verdict_json(&verdict, Vec::new())
            } else {
                let report = check_k4_lemmas(&g)?;
                let mut doc = verdict_json(&verdict, checks_json(&report));
                if !report.all_pass() {
                    doc["status"] = json!("lemma_failed");
                }
                doc
            }
        }
    };
    Ok(doc.into())
}

fn solve(
    mode: SolveMode,
    pattern: &str,
    n: usize,
    budget: Option<f64>,
    no_symmetry: bool,
    output: Option<PathBuf>,
) -> CmdResult {
    let pattern = load_pattern(pattern)?;
    let objective = match mode {
        SolveMode::Sat => Objective::Saturated,
        SolveMode::Exsat => Objective::ExtraSaturated,
    };
    let options = SolveOptions {
        budget: parse_budget(budget)?,
        symmetry: !no_symmetry,
        ..SolveOptions::default()
    };
    let result = solve_exact(&pattern, n, objective, &options)?;
    let best = result.witness.as_ref().or(result.best_upper.as_ref());
    let witness_path = match (output, best) {
        (Some(path), Some(g)) => {
            let note = if result.value.is_some() {
                "optimal"
            } else {
                "best known"
            };
            let comments = vec![format!("{} n={n} edges={} ({note})", objective.name(), g.edge_count())];
            write_file(&path, &write_pbg(g, &comments))?;
            Value::String(path.display().to_string())
        }
        _ => Value::Null,
    };
    let doc = json!({
        "mode": objective.name(),
        "n": n,
        "value": value_or_unknown(result.value),
        "lower_bound": result.lower_bound,
        "upper_bound": best.map(|g| g.edge_count()),
        "witness": witness_path,
        "nodes": result.nodes_explored,
        "elapsed_ms": result.elapsed.as_millis() as u64,
        "group_size": result.group_size,
    });
    let code = if result.exhausted_budget { EXIT_BUDGET } else { EXIT_OK };
    Ok(Outcome::doc(doc, code))
}

fn table(
    family: Family,
    ns: std::ops::RangeInclusive<usize>,
    r: Option<usize>,
    pattern: Option<String>,
    seed: Option<u64>,
    with_solver: bool,
    budget: f64,
) -> CmdResult {
    let budget = parse_budget(Some(budget))?;
    let mut rows = Vec::new();
    for n in ns {
        let spec = construction_spec(family, n, r, pattern.as_deref(), seed)?;
        let built = spec.build()?;
        let target = solver_pattern(&spec)?;
        let objective = if family.is_exsat() {
            Objective::ExtraSaturated
        } else {
            Objective::Saturated
        };
        let verified = objective.holds(&built.graph);
        let solver_value = if with_solver {
            let options = SolveOptions {
                budget,
                ..SolveOptions::default()
            };
            match solve_exact(&target, n, objective, &options) {
                Ok(result) => result.value,
                Err(satblow::Error::TooLarge(_)) => None,
                Err(e) => return Err(e.into()),
            }
        } else {
            None
        };
        rows.push(json!({
            "family": family.name(),
            "r": spec.r.unwrap_or(target.vertex_count()),
            "n": n,
            "formula_value": built.formula,
            "construction_edges": built.graph.edge_count(),
            "verified": verified,
            "solver_value": solver_value,
        }));
    }
    Ok(json!({ "rows": rows }).into())
}

/// The pattern whose blow-up a family lives in.
fn solver_pattern(spec: &ConstructionSpec) -> Result<PatternGraph, Failure> {
    let need_r = || {
        spec.r
            .ok_or_else(|| Failure::malformed(format!("family {} needs --r", spec.family)))
    };
    let need_pattern = || {
        spec.pattern
            .clone()
            .ok_or_else(|| Failure::malformed(format!("family {} needs --pattern", spec.family)))
    };
    Ok(match spec.family {
        Family::K4 => PatternGraph::complete(4)?,
        Family::Star => PatternGraph::star(need_r()?)?,
        Family::Path => PatternGraph::path(need_r()?)?,
        Family::CliqueExsat => PatternGraph::complete(need_r()?)?,
        Family::TwoConnected | Family::GenericExsat | Family::TreeExsat => need_pattern()?,
    })
}

fn parse_budget(seconds: Option<f64>) -> Result<Option<Duration>, Failure> {
    seconds
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| Failure::malformed(format!("invalid budget `{s}`"))))
        .transpose()
}

fn load_pattern(spec: &str) -> Result<PatternGraph, Failure> {
    if let Some(p) = PatternGraph::named(spec) {
        return Ok(p);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Failure::malformed(format!(
            "`{spec}` is neither a built-in pattern nor an existing file"
        )));
    }
    let text = read_file(path)?;
    PatternGraph::parse(&text).map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<PartiteGraph, Failure> {
    let text = read_file(path)?;
    parse_pbg(&text).map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::malformed(format!("reading {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::malformed(format!("writing {}: {e}", path.display())))
}

fn value_or_unknown(value: Option<usize>) -> Value {
    value.map_or_else(|| json!("UNKNOWN"), |v| json!(v))
}

fn edge_json(e: Edge) -> Value {
    json!([e.u.to_string(), e.v.to_string()])
}

fn verdict_json(verdict: &Verdict, checks: Vec<Value>) -> Value {
    let witness = match &verdict.witness {
        None => Value::Null,
        Some(Witness::Copy(selection)) => {
            json!({ "copy": selection.vertices().map(|v| v.to_string()).collect::<Vec<_>>() })
        }
        Some(Witness::NonEdge(e)) => json!({ "non_edge": edge_json(*e) }),
    };
    json!({
        "status": verdict.status.as_str(),
        "witness": witness,
        "count": verdict.baseline_count.as_ref().map(|c| c.to_string()),
        "checks": checks,
    })
}

fn checks_json(report: &K4LemmaReport) -> Vec<Value> {
    report
        .checks
        .iter()
        .map(|c| match &c.outcome {
            CheckOutcome::Pass => json!({ "name": c.name, "outcome": "pass" }),
            CheckOutcome::Fail { vertex, reason } => json!({
                "name": c.name,
                "outcome": "fail",
                "vertex": vertex.to_string(),
                "reason": reason,
            }),
            CheckOutcome::NotApplicable { reason } => {
                json!({ "name": c.name, "outcome": "not_applicable", "reason": reason })
            }
        })
        .collect()
}

fn m_witness_json(w: &MWitness) -> Value {
    json!({
        "part_sizes": w.part_sizes,
        "edges": w.edges.iter().map(|&e| edge_json(e)).collect::<Vec<_>>(),
    })
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Renders a document for humans: an aligned table for `{"rows": [...]}`,
/// otherwise one `key: value` line per field.
fn render_text(doc: &Value) -> String {
    if let Some(rows) = doc.get("rows").and_then(Value::as_array) {
        return render_table(rows);
    }
    let mut out = String::new();
    if let Some(fields) = doc.as_object() {
        for (key, value) in fields {
            out.push_str(&format!("{key}: {}\n", scalar_text(value)));
        }
    }
    out
}

fn render_table(rows: &[Value]) -> String {
    let Some(first) = rows.first().and_then(Value::as_object) else {
        return String::new();
    };
    let headers: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| headers.iter().map(|h| scalar_text(&row[h.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, h)| cells.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let line = |fields: Vec<&str>| {
        let padded: Vec<String> = fields.iter().zip(&widths).map(|(f, &w)| format!("{f:>w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.iter().map(|h| h.as_str()).collect());
    for row in &cells {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
