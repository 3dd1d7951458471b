//! Command-line front end.
//!
//! Every command buffers its report and prints it only on success, so an
//! error never leaves partial output behind. Exit codes: 0 success, 1 self-test
//! failure, 2 usage or parse error, 3 mathematical domain error.

mod selftest;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::AlgebraElem;
use crate::dimension::{
    annihilator_basis, dim_bound_charpoly, dim_ideal, dim_mulmuley_random, idempotent_generator,
    mulmuley_exact_detail, symmetrize, IdealSpec, Shortcut,
};
use crate::error::Error;
use crate::field::FieldCtx;
use crate::gcode::{GroupCode, DEFAULT_BUDGET};
use crate::group::{Group, ValidationLevel};
use crate::linalg::FMatrix;
use crate::representation::{side_matrix, Side};

pub use selftest::{default_fixture_dir, run_selftest, FixtureResult};

pub const DEFAULT_SEED: u64 = 0x5EED;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "gadim", version, about = "Dimensions of ideals in finite group algebras, and group codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension of the ideal generated by the given elements.
    Dim(DimArgs),
    /// Bounds on the dimension read off the characteristic polynomial.
    Bound(IdealArgs),
    /// Idempotent generator of a principal ideal, if one exists.
    Idempotent(IdealArgs),
    /// Basis of the annihilator of an element (`--side right`: f a = 0).
    Annihilator(IdealArgs),
    /// Characteristic polynomial of the representation matrix.
    Charpoly(CharpolyArgs),
    /// The group code of an ideal: generator and parity-check matrices.
    Code(CodeArgs),
    /// Element labels, Cayley table and validation report of a group.
    GroupShow(GroupShowArgs),
    /// Runs the shipped example fixtures.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// cyclic:n, dihedral:n, symmetric:n, product:<spec>,<spec>, cayley:<path> or perm:<path>
    #[arg(long)]
    pub group: String,
    /// Cayley file fixing the element order; labels must match the group's.
    #[arg(long)]
    pub order: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Single-line JSON record instead of text.
    #[arg(long)]
    pub json: bool,
    /// Also print the stacked representation matrix.
    #[arg(long)]
    pub dump_matrix: bool,
    /// Include the elapsed time in JSON output.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug, Clone)]
pub struct IdealArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// gf:p, gf:p^m or gf:p^m:c0,...,cm
    #[arg(long)]
    pub field: String,
    #[arg(long, default_value = "left")]
    pub side: Side,
    /// Generator as `index:coeff` terms (1-based); repeat for several generators.
    #[arg(long)]
    pub elem: Vec<String>,
    /// File with generators in element text format, separated by blank lines.
    #[arg(long)]
    pub elem_file: Vec<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    #[default]
    Rank,
    CharpolyBound,
    MulmuleyExact,
    MulmuleyRandom,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Rank => "rank",
            Method::CharpolyBound => "charpoly-bound",
            Method::MulmuleyExact => "mulmuley-exact",
            Method::MulmuleyRandom => "mulmuley-random",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct DimArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(long, value_enum, default_value_t = Method::Rank)]
    pub method: Method,
    /// Matrix used by mulmuley-exact: auto, symmetrize or commutative.
    #[arg(long, default_value = "auto")]
    pub shortcut: Shortcut,
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct CharpolyArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    /// Print the characteristic polynomial of X M with symbolic x.
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long, default_value = "auto")]
    pub shortcut: Shortcut,
}

#[derive(Args, Debug, Clone)]
pub struct CodeArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    /// Largest number of codewords the distance search may enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Skip the minimum-distance search.
    #[arg(long)]
    pub no_distance: bool,
    /// Write the code in export format to this file.
    #[arg(long)]
    pub export: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct GroupShowArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Print the modified Cayley table (g_i^-1 g_j) instead of the ordinary one.
    #[arg(long)]
    pub modified: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SelftestArgs {
    /// Run only fixtures whose name contains this string.
    #[arg(long)]
    pub filter: Option<String>,
    /// Directory holding the fixture files.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

/// Result of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct CliError {
    code: i32,
    msg: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, msg: msg.into() }
    }

    fn domain(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_DOMAIN, msg: msg.into() }
    }
}

/// Attaches the offending flag or file to a library error and picks the exit
/// code from its kind.
fn at(context: impl std::fmt::Display) -> impl Fn(Error) -> CliError {
    move |e| {
        let code = if e.is_input_error() { EXIT_USAGE } else { EXIT_DOMAIN };
        CliError { code, msg: format!("{context}: {e}") }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e.msg) },
    }
}

fn dispatch(cmd: &Command) -> CliResult<(i32, String)> {
    let ok = |s: String| Ok((EXIT_OK, s));
    match cmd {
        Command::Dim(a) => ok(cmd_dim(a)?),
        Command::Bound(a) => ok(cmd_bound(a)?),
        Command::Idempotent(a) => ok(cmd_idempotent(a)?),
        Command::Annihilator(a) => ok(cmd_annihilator(a)?),
        Command::Charpoly(a) => ok(cmd_charpoly(a)?),
        Command::Code(a) => ok(cmd_code(a)?),
        Command::GroupShow(a) => ok(cmd_group_show(a)?),
        Command::Selftest(a) => cmd_selftest(a),
    }
}

fn load_group(args: &GroupArgs) -> CliResult<Arc<Group>> {
    let g = Group::from_spec(&args.group).map_err(at("--group"))?;
    let Some(path) = &args.order else { return Ok(g) };
    let order = Group::read_cayley(path).map_err(at(format!("--order {}", path.display())))?;
    let g = g.reindexed(&order).map_err(at(format!("--order {}", path.display())))?;
    Ok(Arc::new(g))
}

/// Splits a generator file into blocks separated by blank lines.
fn file_blocks(text: &str) -> Vec<String> {
    let mut blocks = vec![String::new()];
    for line in text.lines() {
        if line.trim().is_empty() {
            if !blocks.last().expect("nonempty").is_empty() {
                blocks.push(String::new());
            }
        } else {
            let b = blocks.last_mut().expect("nonempty");
            b.push_str(line);
            b.push('\n');
        }
    }
    if blocks.len() > 1 && blocks.last().expect("nonempty").is_empty() {
        blocks.pop();
    }
    blocks
}

struct Setup {
    field: Arc<FieldCtx>,
    group: Arc<Group>,
    side: Side,
    generators: Vec<AlgebraElem>,
    started: Instant,
}

impl Setup {
    fn load(a: &IdealArgs) -> CliResult<Setup> {
        let started = Instant::now();
        let field = FieldCtx::from_spec(&a.field).map_err(at("--field"))?;
        let group = load_group(&a.group)?;
        let mut generators = Vec::new();
        for e in &a.elem {
            generators.push(AlgebraElem::parse(&field, &group, e).map_err(at("--elem"))?);
        }
        for path in &a.elem_file {
            let ctx = format!("--elem-file {}", path.display());
            let text = std::fs::read_to_string(path).map_err(|e| at(&ctx)(Error::Io(e)))?;
            for block in file_blocks(&text) {
                generators.push(AlgebraElem::parse(&field, &group, &block).map_err(at(&ctx))?);
            }
        }
        if generators.is_empty() {
            return Err(CliError::usage("--elem: no generator given (use --elem or --elem-file)"));
        }
        Ok(Setup { field, group, side: a.side, generators, started })
    }

    fn spec(&self) -> IdealSpec {
        IdealSpec { side: self.side, generators: self.generators.clone() }
    }

    fn require_nonzero(&self) -> CliResult<()> {
        if self.generators.iter().all(AlgebraElem::is_zero) {
            return Err(CliError::domain("--elem: the ideal is zero (every generator is 0)"));
        }
        Ok(())
    }

    fn single(&self, what: &str) -> CliResult<&AlgebraElem> {
        match self.generators.as_slice() {
            [f] => Ok(f),
            _ => Err(CliError::usage(format!(
                "--elem: {what} takes exactly one generator, got {}",
                self.generators.len()
            ))),
        }
    }

    fn report(&self, command: &str, output: &OutputArgs) -> Report {
        let mut r = Report::new(command, output);
        r.field("group", self.group.name());
        r.field("n", self.group.order());
        r.field("field", self.field.to_string());
        r.field("side", self.side.to_string());
        r.field("generators", self.generators.len());
        r
    }
}

/// Buffered command output: `key: value` lines in text mode, one JSON object
/// in structured mode.
struct Report {
    json: bool,
    timing: bool,
    dump_matrix: bool,
    text: String,
    record: Map<String, Value>,
}

impl Report {
    fn new(command: &str, output: &OutputArgs) -> Report {
        let mut record = Map::new();
        record.insert("command".into(), json!(command));
        Report {
            json: output.json,
            timing: output.timing,
            dump_matrix: output.dump_matrix,
            text: String::new(),
            record,
        }
    }

    fn field(&mut self, key: &str, value: impl Into<Value> + std::fmt::Display) {
        let _ = writeln!(self.text, "{key}: {value}");
        self.record.insert(key.into(), value.into());
    }

    /// Text-only line.
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    /// JSON-only field.
    fn data(&mut self, key: &str, value: Value) {
        self.record.insert(key.into(), value);
    }

    fn matrix(&mut self, key: &str, m: &FMatrix) {
        if self.dump_matrix {
            let _ = write!(self.text, "{key}:\n{}", m.to_text());
            self.record.insert(key.into(), matrix_json(m));
        }
    }

    fn finish(mut self, started: Option<Instant>) -> String {
        let elapsed_ms = started.map(|t| t.elapsed().as_secs_f64() * 1e3);
        if self.json {
            if let (true, Some(ms)) = (self.timing, elapsed_ms) {
                self.record.insert("elapsed_ms".into(), json!(ms));
            }
            format!("{}\n", Value::Object(self.record))
        } else {
            if let Some(ms) = elapsed_ms {
                let _ = writeln!(self.text, "elapsed: {ms:.3} ms");
            }
            self.text
        }
    }
}

fn matrix_json(m: &FMatrix) -> Value {
    let f = m.field();
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(|&c| json!(f.format_elem(c))).collect()))
            .collect(),
    )
}

fn stacked(setup: &Setup) -> CliResult<FMatrix> {
    setup.spec().matrix().map_err(at("--elem"))
}

fn cmd_dim(a: &DimArgs) -> CliResult<String> {
    let s = Setup::load(&a.ideal)?;
    s.require_nonzero()?;
    let mut r = s.report("dim", &a.ideal.output);
    r.field("method", a.method.name());
    match a.method {
        Method::Rank => {
            let dim = dim_ideal(&s.spec()).map_err(at("--elem"))?;
            r.field("dim", dim);
        }
        Method::CharpolyBound => {
            let f = s.single("--method charpoly-bound")?;
            let b = dim_bound_charpoly(f, s.side).map_err(at("--elem"))?;
            bound_fields(&mut r, &b);
        }
        Method::MulmuleyExact => {
            let f = s.single("--method mulmuley-exact")?;
            let (dim, xcp) = mulmuley_exact_detail(f, s.side, a.shortcut).map_err(at("--shortcut"))?;
            r.field("dim", dim);
            r.field("k", xcp.k);
        }
        Method::MulmuleyRandom => {
            let f = s.single("--method mulmuley-random")?;
            let dim = dim_mulmuley_random(f, s.side, a.trials, a.seed).map_err(at("--trials"))?;
            r.field("dim", dim);
            r.field("trials", a.trials);
            r.field("seed", a.seed);
        }
    }
    r.matrix("matrix", &stacked(&s)?);
    Ok(r.finish(Some(s.started)))
}

fn bound_fields(r: &mut Report, b: &crate::dimension::DimBound) {
    r.field("lower", b.lower);
    r.field("upper", b.upper);
    r.field("proper", b.proper);
    r.field("exact", b.exact);
    if b.exact {
        r.field("dim", b.lower);
    }
    r.field("k", b.k);
    r.line(format!("charpoly: {}", b.charpoly.pretty("z")));
    r.data("charpoly", json!(b.charpoly.to_text()));
}

fn cmd_bound(a: &IdealArgs) -> CliResult<String> {
    let s = Setup::load(a)?;
    s.require_nonzero()?;
    let f = s.single("bound")?;
    let b = dim_bound_charpoly(f, s.side).map_err(at("--elem"))?;
    let mut r = s.report("bound", &a.output);
    bound_fields(&mut r, &b);
    r.field("rank_dim", b.dim);
    r.matrix("matrix", &side_matrix(f, s.side));
    Ok(r.finish(Some(s.started)))
}

fn cmd_idempotent(a: &IdealArgs) -> CliResult<String> {
    let s = Setup::load(a)?;
    s.require_nonzero()?;
    let f = s.single("idempotent")?;
    let e = idempotent_generator(f, s.side).map_err(at("--elem"))?;
    let mut r = s.report("idempotent", &a.output);
    match e {
        None => {
            r.line("e: none");
            r.data("idempotent", Value::Null);
        }
        Some(e) => {
            let keeps = match s.side {
                Side::Left => ("f*e = f", f.mul(&e)),
                Side::Right => ("e*f = f", e.mul(f)),
            };
            let keeps_f = keeps.1.map_err(at("--elem"))? == *f;
            r.line(format!("e: {e}"));
            r.field("idempotent", e.to_inline());
            r.line(format!("e^2 = e: {}", e.is_idempotent()));
            r.line(format!("{}: {keeps_f}", keeps.0));
            r.data("e_squared_is_e", json!(e.is_idempotent()));
            r.data("generates_f", json!(keeps_f));
        }
    }
    r.matrix("matrix", &side_matrix(f, s.side));
    Ok(r.finish(Some(s.started)))
}

fn cmd_annihilator(a: &IdealArgs) -> CliResult<String> {
    let s = Setup::load(a)?;
    let f = s.single("annihilator")?;
    let basis = annihilator_basis(f, s.side);
    let mut r = s.report("annihilator", &a.output);
    r.field("dim", basis.len());
    for b in &basis {
        r.line(format!("  {}", b.to_inline()));
    }
    r.data("basis", Value::Array(basis.iter().map(|b| json!(b.to_inline())).collect()));
    r.matrix("matrix", &side_matrix(f, s.side));
    Ok(r.finish(Some(s.started)))
}

fn cmd_charpoly(a: &CharpolyArgs) -> CliResult<String> {
    let s = Setup::load(&a.ideal)?;
    let f = s.single("charpoly")?;
    let m = side_matrix(f, s.side);
    let cp = m.charpoly().map_err(at("--elem"))?;
    let mut r = s.report("charpoly", &a.ideal.output);
    r.line(format!("charpoly: {}", cp.pretty("z")));
    r.data("charpoly", json!(cp.to_text()));
    r.field("k", cp.valuation().expect("monic"));
    if a.symbolic {
        let (dim, xcp) = mulmuley_exact_detail(f, s.side, a.shortcut).map_err(at("--shortcut"))?;
        r.field("size", xcp.size());
        r.field("xk", xcp.k);
        r.field("dim", dim);
        for (j, c) in xcp.zcoeffs.iter().enumerate() {
            if !c.is_zero() {
                r.line(format!("  z^{j}: {}", c.pretty("x")));
            }
        }
        r.data("xcharpoly", json!(xcp.to_text()));
    }
    let dumped = if a.symbolic && a.shortcut != Shortcut::Commutative { symmetrize(&m) } else { m };
    r.matrix("matrix", &dumped);
    Ok(r.finish(Some(s.started)))
}

fn cmd_code(a: &CodeArgs) -> CliResult<String> {
    let s = Setup::load(&a.ideal)?;
    s.require_nonzero()?;
    let code = GroupCode::build(&s.spec()).map_err(at("--elem"))?;
    let distance = if a.no_distance {
        None
    } else {
        Some(code.min_distance(a.budget).map_err(at("--budget"))?)
    };
    if let Some(path) = &a.export {
        std::fs::write(path, code.to_text()).map_err(|e| at(format!("--export {}", path.display()))(Error::Io(e)))?;
    }
    let mut r = s.report("code", &a.ideal.output);
    let head = match distance {
        Some(d) => format!("[{},{}] d={d}", code.n, code.k),
        None => format!("[{},{}]", code.n, code.k),
    };
    r.line(head);
    r.data("n", json!(code.n));
    r.data("k", json!(code.k));
    r.data("q", json!(code.field.order()));
    r.data("d", distance.map_or(Value::Null, |d| json!(d)));
    r.line("generator matrix:");
    r.line(code.genmat.to_text().trim_end());
    r.line("parity-check matrix:");
    r.line(code.paritymat.to_text().trim_end());
    r.data("genmat", matrix_json(&code.genmat));
    r.data("paritymat", matrix_json(&code.paritymat));
    r.matrix("matrix", &stacked(&s)?);
    Ok(r.finish(Some(s.started)))
}

fn cmd_group_show(a: &GroupShowArgs) -> CliResult<String> {
    let g = load_group(&a.group)?;
    let n = g.order();
    let report = g.validate(ValidationLevel::Full);
    let table: Vec<u32> = if a.modified { g.modified_cayley() } else { g.table().to_vec() };
    let output = OutputArgs { json: a.json, dump_matrix: false, timing: false };
    let mut r = Report::new("group-show", &output);
    r.field("group", g.name());
    r.field("n", n);
    r.field("commutative", g.is_commutative());
    r.field("valid", report.is_ok());
    if !report.is_ok() {
        r.line(report.to_string());
    }
    r.line(format!("labels: {}", g.labels().join(" ")));
    r.data("labels", json!(g.labels()));
    r.line(if a.modified { "modified table:" } else { "table:" });
    let rows: Vec<Vec<u32>> = table.chunks(n).map(|row| row.iter().map(|&x| x + 1).collect()).collect();
    for row in &rows {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        r.line(cells.join(" "));
    }
    r.data("table", json!(rows));
    Ok(r.finish(None))
}

fn cmd_selftest(a: &SelftestArgs) -> CliResult<(i32, String)> {
    let dir = a.fixtures.clone().unwrap_or_else(default_fixture_dir);
    let results = run_selftest(&dir, a.filter.as_deref());
    if results.is_empty() {
        return Err(CliError::usage(format!(
            "--filter {}: matches no fixture",
            a.filter.as_deref().unwrap_or("")
        )));
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    let code = if failed == 0 { EXIT_OK } else { EXIT_SELFTEST };
    let out = if a.json {
        let items: Vec<Value> = results
            .iter()
            .map(|r| json!({"name": r.name, "passed": r.passed(), "error": r.error}))
            .collect();
        format!(
            "{}\n",
            json!({"command": "selftest", "fixtures": items, "failed": failed, "passed": results.len() - failed})
        )
    } else {
        let mut s = String::new();
        for r in &results {
            match &r.error {
                None => {
                    let _ = writeln!(s, "PASS {}", r.name);
                }
                Some(e) => {
                    let _ = writeln!(s, "FAIL {}: {e}", r.name);
                }
            }
        }
        let _ = writeln!(s, "{}/{} fixtures passed", results.len() - failed, results.len());
        s
    };
    Ok((code, out))
}
