//! The `alliance` command line.
//!
//! Exit codes: 0 success, 1 I/O error, 2 parse error, 3 size or time limit,
//! 4 a check or verification mismatch.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use strong_alliance::analysis::check_empty_characterization;
use strong_alliance::enumerate::{compute_polynomial_oracle, EnumerationError, ORACLE_MAX_VERTICES};
use strong_alliance::families::{double_star_printed_form, family_polynomial, FamilyError, FamilySpec};
use strong_alliance::graph::MAX_VERTICES;
use strong_alliance::polynomial::SignedPolynomial;
use strong_alliance::{family_graph, AlliancePolynomial, AllianceReport, Graph, GraphError};

use crate::json::{PolynomialJson, ReportJson};
use crate::parallel::{self, EngineChoice, Limits, Options};
use crate::search::{self, CorpusKind, SearchResult};
use crate::verify::{self, Summary, Sweep, SweepConfig};
use crate::{edge_list, graph6};

#[derive(Debug, Parser)]
#[command(name = "alliance", version, about = "Strong alliance polynomials of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the polynomial of a graph.
    Compute(GraphArgs),
    /// Print the closed-form polynomial of a named family.
    Family(FamilyArgs),
    /// Compute the full report of a graph and check it for consistency.
    Check(GraphArgs),
    /// Run a formula or theorem sweep against enumeration.
    Verify(VerifyArgs),
    /// Look for graphs with non-unimodal polynomials.
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    EdgeList,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Oracle,
    Connected,
}

impl From<EngineArg> for EngineChoice {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Auto => EngineChoice::Auto,
            EngineArg::Oracle => EngineChoice::Oracle,
            EngineArg::Connected => EngineChoice::Connected,
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file, or `-` for standard input.
    #[arg(long, conflicts_with = "family")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edge-list")]
    pub format: Format,
    /// Drop duplicate edges with a warning instead of rejecting the file.
    #[arg(long)]
    pub lenient: bool,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Use a family graph such as `cycle:5` or `double_star:3,4` as input.
    #[arg(long, required_unless_present = "input")]
    pub family: Option<FamilySpec>,
    #[arg(long, value_enum, default_value = "auto")]
    pub engine: EngineArg,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Accept graphs up to this order (default 20 unless --budget is given).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Wall-clock limit in seconds; also lifts the default order limit.
    #[arg(long)]
    pub budget: Option<f64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: FamilySpec,
    /// Double stars only: use the uncorrected exponent in the one-center terms.
    #[arg(long)]
    pub printed_form: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// families, knm, double_star, kn_minus_edges or theorem26.
    pub sweep: Sweep,
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    #[arg(long)]
    pub printed_form: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random graphs per order for theorem26.
    #[arg(long, default_value_t = 50)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Largest order searched (at most 10).
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    /// Smallest order searched; defaults to --max-n.
    #[arg(long)]
    pub min_n: Option<usize>,
    /// Random graphs per order.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// random or paths-cycles. Without --input the random corpus is used.
    #[arg(long)]
    pub corpus: Option<CorpusKind>,
    /// Also examine the graphs of this file (one graph6 string per line, or
    /// a single edge list).
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edge-list")]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Limit(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::TooLarge { .. } => CliError::Limit(format!(
                "{e}; pass --max-n or --budget to allow larger graphs"
            )),
            EnumerationError::Interrupted { .. } => CliError::Limit(format!("time budget exceeded ({e})")),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::TooManyVertices(_) => CliError::Limit(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Graph(g) => g.into(),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<edge_list::EdgeListError> for CliError {
    fn from(e: edge_list::EdgeListError) -> Self {
        match e {
            edge_list::EdgeListError::Graph(g) => g.into(),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<graph6::Graph6Error> for CliError {
    fn from(e: graph6::Graph6Error) -> Self {
        match e {
            graph6::Graph6Error::Graph(g) => g.into(),
            graph6::Graph6Error::TooLarge => CliError::Limit(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

/// `check` output: the report plus the consistency results that are not
/// part of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub report: ReportJson,
    /// Oracle and connected engine agree; absent above the oracle cap.
    pub engines_agree: Option<bool>,
    pub empty_characterization: bool,
}

/// `family` output. `report` is absent for the literal double-star form,
/// which can have negative coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub family: String,
    pub printed_form: bool,
    pub polynomial: PolynomialJson,
    pub report: Option<ReportJson>,
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, stdin, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Compute(a) => compute(a, stdin, out, err),
        Command::Family(a) => family(a, out),
        Command::Check(a) => check(a, stdin, out, err),
        Command::Verify(a) => verify(a, out),
        Command::Search(a) => search(a, stdin, out, err),
    }
}

fn io_err(e: io::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn read_text(path: &PathBuf, stdin: &mut dyn Read) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }
}

fn parse_graphs(text: &str, format: Format, lenient: bool, err: &mut dyn Write) -> Result<Vec<Graph>, CliError> {
    match format {
        Format::EdgeList => {
            let parsed = edge_list::parse(text, !lenient)?;
            for w in &parsed.warnings {
                writeln!(err, "warning: {w}").map_err(io_err)?;
            }
            Ok(vec![parsed.graph])
        }
        Format::Graph6 => Ok(graph6::decode_all(text)?),
    }
}

fn load_graph(a: &GraphArgs, stdin: &mut dyn Read, err: &mut dyn Write) -> Result<Graph, CliError> {
    if let Some(spec) = a.family {
        return Ok(family_graph(spec)?);
    }
    let path = a.input.input.as_ref().expect("clap requires --input or --family");
    let text = read_text(path, stdin)?;
    let mut graphs = parse_graphs(&text, a.input.format, a.input.lenient, err)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(CliError::Parse("input contains no graph".into())),
        k => Err(CliError::Parse(format!("input contains {k} graphs, expected one"))),
    }
}

fn options(a: &GraphArgs) -> Result<Options, CliError> {
    let budget = a
        .budget
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| CliError::Parse(format!("invalid budget {s}"))))
        .transpose()?;
    Ok(Options {
        engine: a.engine.into(),
        workers: a.workers,
        limits: Limits::from_flags(a.max_n.map(|n| n.min(MAX_VERTICES)), budget),
    })
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out).map_err(io_err)
}

fn compute(a: GraphArgs, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let g = load_graph(&a, stdin, err)?;
    let (p, _) = parallel::compute(&g, &options(&a)?)?;
    if a.json {
        emit_json(out, &ReportJson::from(&AllianceReport::from_polynomial(&g, p)))
    } else {
        writeln!(out, "{p}").map_err(io_err)
    }
}

fn family(a: FamilyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = a.family;
    let printed = match (a.printed_form, spec) {
        (false, _) => None,
        (true, FamilySpec::DoubleStar { r, t }) => Some(double_star_printed_form(r, t)?),
        (true, _) => {
            return Err(CliError::Parse("--printed-form applies to double_star only".into()));
        }
    };
    let (polynomial, report) = match printed {
        Some(p) => (p, None),
        None => {
            let p = family_polynomial(spec)?;
            let report = a
                .json
                .then(|| AllianceReport::from_polynomial(&family_graph(spec).expect("validated"), p.clone()));
            (SignedPolynomial::from(&p), report)
        }
    };
    if a.json {
        emit_json(
            out,
            &FamilyJson {
                family: spec.to_string(),
                printed_form: a.printed_form,
                polynomial: PolynomialJson::from_signed(&polynomial),
                report: report.as_ref().map(ReportJson::from),
            },
        )
    } else {
        writeln!(out, "{polynomial}").map_err(io_err)
    }
}

fn check(a: GraphArgs, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let g = load_graph(&a, stdin, err)?;
    let (p, _) = parallel::compute(&g, &options(&a)?)?;
    let engines_agree = (g.order() <= ORACLE_MAX_VERTICES && a.engine != EngineArg::Oracle)
        .then(|| compute_polynomial_oracle(&g).map(|o| o == p))
        .transpose()?;
    let empty_characterization = check_empty_characterization(&p, &g);
    let report = AllianceReport::from_polynomial(&g, p);
    let ok = report.checks.all_hold() && engines_agree != Some(false) && empty_characterization;
    if a.json {
        emit_json(
            out,
            &CheckJson {
                report: (&report).into(),
                engines_agree,
                empty_characterization,
            },
        )?;
    } else {
        write_report(out, &report, engines_agree, empty_characterization).map_err(io_err)?;
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::Mismatch("consistency check failed".into()))
    }
}

fn pass(ok: bool) -> &'static str {
    if ok { "PASS" } else { "FAIL" }
}

fn write_report(
    out: &mut dyn Write,
    r: &AllianceReport,
    engines_agree: Option<bool>,
    empty_characterization: bool,
) -> io::Result<()> {
    writeln!(out, "polynomial: {}", r.polynomial)?;
    writeln!(out, "alliance_number: {}", r.alliance_number)?;
    writeln!(out, "count: {}", r.total_alliances)?;
    match r.verdict.mode_index {
        Some(mode) => {
            let unique = if r.verdict.mode_unique { "unique" } else { "not unique" };
            writeln!(out, "unimodal: true (mode {mode}, {unique})")?;
        }
        None => writeln!(out, "unimodal: false")?,
    }
    writeln!(out, "log_concave: {}", r.verdict.log_concave)?;
    for (name, ok) in r.checks.entries() {
        writeln!(out, "{name}: {}", pass(ok))?;
    }
    if let Some(ok) = engines_agree {
        writeln!(out, "engines_agree: {}", pass(ok))?;
    }
    writeln!(out, "empty_characterization: {}", pass(empty_characterization))
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = SweepConfig {
        max_n: a.max_n,
        printed_form: a.printed_form,
        seed: a.seed,
        count: a.count,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.workers)
        .build()
        .map_err(|e| CliError::Io(e.to_string()))?;
    let summary = pool.install(|| verify::run(a.sweep, &cfg))?;
    if a.json {
        emit_json(out, &summary)?;
    } else {
        write_summary(out, &summary).map_err(io_err)?;
    }
    match summary.first_failure() {
        None => Ok(()),
        Some(o) => Err(CliError::Mismatch(format!(
            "{} of {} instances failed; first counterexample {}: expected {}, enumeration gives {}",
            summary.failed,
            summary.instances.len(),
            o.instance,
            o.expected,
            o.actual
        ))),
    }
}

fn write_summary(out: &mut dyn Write, s: &Summary) -> io::Result<()> {
    for o in &s.instances {
        writeln!(out, "{} {}", pass(o.pass), o.instance)?;
        if !o.pass {
            writeln!(out, "    formula:     {}", o.expected)?;
            writeln!(out, "    enumeration: {}", o.actual)?;
        }
    }
    let form = if s.printed_form { " (printed form)" } else { "" };
    writeln!(out, "{}{form}: {} passed, {} failed", s.sweep, s.passed, s.failed)?;
    if let Some(o) = s.first_failure() {
        writeln!(out, "first counterexample: {}", o.instance)?;
        writeln!(out, "    formula:     {}", o.expected)?;
        writeln!(out, "    enumeration: {}", o.actual)?;
    }
    Ok(())
}

fn search(a: SearchArgs, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    if a.max_n > search::MAX_ORDER {
        return Err(CliError::Limit(format!(
            "search is limited to {} vertices, got --max-n {}",
            search::MAX_ORDER,
            a.max_n
        )));
    }
    let mut graphs = Vec::new();
    if let Some(path) = &a.input {
        let text = read_text(path, stdin)?;
        graphs.extend(parse_graphs(&text, a.format, false, err)?);
        if let Some(g) = graphs.iter().find(|g| g.order() > search::MAX_ORDER) {
            return Err(CliError::Limit(format!(
                "search is limited to {} vertices, input has a graph on {}",
                search::MAX_ORDER,
                g.order()
            )));
        }
    }
    if a.input.is_none() || a.corpus.is_some() {
        let kind = a.corpus.unwrap_or_default();
        graphs.extend(search::build_corpus(kind, a.min_n.unwrap_or(a.max_n), a.max_n, a.count, a.seed));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.workers)
        .build()
        .map_err(|e| CliError::Io(e.to_string()))?;
    let result = pool.install(|| search::search(&graphs));
    if a.json {
        emit_json(out, &result)
    } else {
        write_findings(out, &result).map_err(io_err)
    }
}

fn write_findings(out: &mut dyn Write, r: &SearchResult) -> io::Result<()> {
    for f in &r.findings {
        let p: AlliancePolynomial = f.polynomial.to_polynomial().expect("own output");
        writeln!(out, "# {} {}", f.graph6, p)?;
        writeln!(out, "{} {}", f.n, f.edges.len())?;
        for [u, v] in &f.edges {
            writeln!(out, "{u} {v}")?;
        }
    }
    writeln!(out, "# examined {} graphs, {} not unimodal", r.examined, r.findings.len())
}
