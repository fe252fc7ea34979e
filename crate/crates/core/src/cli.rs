//! Command-line front end.
//!
//! Output comes in two formats. `text` is meant for reading. `structured`
//! prints one `key=value` pair per line; a command that emits several
//! records starts each one with a `record=` line and ends it with a blank
//! line. Keys may repeat within a record (`partition=` in `nc-enum`), in
//! which case their order is meaningful. Polynomials are printed in the
//! same form in both formats and parse back with the library parsers.
//!
//! Exit status is 0 on success, 1 when a verified identity fails and 2 on
//! malformed input or usage.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cut::random::random_cut;
use crate::cut::{glue, parse_cut, surgery, write_cut, CutPresentation, Side};
use crate::diagram::{bracket_state_sum, jones, parse_diagram, writhe, PlanarDiagram};
use crate::error::{Error, Result};
use crate::partitions::enumerate_nc;
use crate::polyring::{render, LaurentPolynomial, Variable};
use crate::splitting::{
    build_matrix_with, delta_determinant, invert_matrix, verify_corollary_two, verify_identity_one,
    verify_splitting, Level, MatrixKind, Report,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the default output format.
pub const FORMAT_ENV: &str = "KNOT_SPLIT_FORMAT";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "M")]
    M,
    #[value(name = "d")]
    D,
    #[value(name = "lindstrom")]
    Lindstrom,
}

impl From<KindArg> for MatrixKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::M => MatrixKind::M,
            KindArg::D => MatrixKind::D,
            KindArg::Lindstrom => MatrixKind::Lindstrom,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Bracket,
    Jones,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Bracket => Level::Bracket,
            LevelArg::Jones => Level::Jones,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "knot-split",
    version,
    about = "Kauffman brackets, Jones polynomials and splitting formulas"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jones polynomial of a diagram or of a glued cut presentation.
    Jones {
        /// Diagram or cut file, `-` for standard input.
        input: PathBuf,
    },
    /// Kauffman bracket of a diagram or of a glued cut presentation.
    Bracket { input: PathBuf },
    /// Writhe of a diagram or of a glued cut presentation.
    Writhe { input: PathBuf },
    /// Noncrossing partitions of {1..n} in index order.
    NcEnum {
        #[arg(long)]
        n: usize,
    },
    /// Entries of a splitting matrix.
    Matrix(MatrixArgs),
    /// Determinant of a splitting matrix.
    Det(MatrixArgs),
    /// Determinant, adjugate and inverse of a splitting matrix.
    Invert(MatrixArgs),
    /// Bracket, writhe and Jones polynomial of every noncrossing surgery of
    /// one side of a cut.
    Surgeries {
        input: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        side: u8,
    },
    /// Check the splitting identities on a cut file or on random cuts.
    Verify(VerifyArgs),
}

#[derive(Debug, clap::Args)]
pub struct MatrixArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long)]
    pub n: usize,
    /// Build matrices beyond the default size limit.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Cut file, `-` for standard input.
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "jones")]
    pub level: LevelArg,
    /// Number of random cut presentations to check.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "random")]
    pub seed: u64,
    /// Pairs of cut points; random cuts alternate between 2 and 3 if unset.
    #[arg(long, requires = "random")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 5, requires = "random")]
    pub max_crossings: usize,
    /// Include elapsed times in reports.
    #[arg(long)]
    pub timing: bool,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => Outcome {
            code: if e.use_stderr() { EXIT_USAGE } else { EXIT_OK },
            stdout: if e.use_stderr() {
                String::new()
            } else {
                e.to_string()
            },
            stderr: if e.use_stderr() {
                e.render().to_string()
            } else {
                String::new()
            },
        },
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let mut out = Output::new(cli.format);
    match execute(&cli.command, &mut out) {
        Ok(holds) => Outcome {
            code: if holds { EXIT_OK } else { EXIT_VIOLATED },
            stdout: out.buf,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: EXIT_USAGE,
            stdout: out.buf,
            stderr: format!("error: {e}\n"),
        },
    }
}

struct Output {
    format: Format,
    buf: String,
}

impl Output {
    fn new(format: Format) -> Self {
        Output {
            format,
            buf: String::new(),
        }
    }

    fn structured(&self) -> bool {
        self.format == Format::Structured
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }

    fn pair(&mut self, key: &str, value: impl std::fmt::Display) {
        writeln!(self.buf, "{key}={value}").unwrap();
    }
}

enum Input {
    Diagram(PlanarDiagram),
    Cut(Box<CutPresentation>),
}

impl Input {
    fn diagram(&self) -> Result<PlanarDiagram> {
        match self {
            Input::Diagram(d) => Ok(d.clone()),
            Input::Cut(c) => glue(c),
        }
    }

    fn cut(self) -> Result<CutPresentation> {
        match self {
            Input::Cut(c) => Ok(*c),
            Input::Diagram(_) => Err(Error::parse(1, "expected a cut file starting with `cut <n>`")),
        }
    }
}

fn read_source(path: &PathBuf) -> Result<String> {
    let mut src = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut src).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| src = s)
    };
    res.map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(src)
}

fn load(path: &PathBuf) -> Result<Input> {
    let src = read_source(path)?;
    let first = src
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    if first.and_then(|l| l.split_whitespace().next()) == Some("cut") {
        Ok(Input::Cut(Box::new(parse_cut(&src)?)))
    } else {
        Ok(Input::Diagram(parse_diagram(&src)?))
    }
}

/// Runs a command; `Ok(false)` means an identity failed.
fn execute(cmd: &Command, out: &mut Output) -> Result<bool> {
    match cmd {
        Command::Jones { input } => {
            let p = jones(&load(input)?.diagram()?);
            polynomial(out, "jones", &p, Variable::T);
        }
        Command::Bracket { input } => {
            let p = bracket_state_sum(&load(input)?.diagram()?);
            polynomial(out, "bracket", &p, Variable::A);
        }
        Command::Writhe { input } => {
            let w = writhe(&load(input)?.diagram()?);
            if out.structured() {
                out.pair("writhe", w);
            } else {
                out.line(w.to_string());
            }
        }
        Command::NcEnum { n } => nc_enum(out, *n)?,
        Command::Matrix(args) => matrix(out, args)?,
        Command::Det(args) => det(out, args)?,
        Command::Invert(args) => invert(out, args)?,
        Command::Surgeries { input, side } => {
            let side = Side::from_number(*side as usize).expect("clap restricts the side");
            surgeries(out, &load(input)?.cut()?, side)?;
        }
        Command::Verify(args) => return verify(out, args),
    }
    Ok(true)
}

fn polynomial(out: &mut Output, key: &str, p: &LaurentPolynomial, var: Variable) {
    let s = render(p, var);
    if out.structured() {
        out.pair(key, s);
    } else {
        out.line(s);
    }
}

fn nc_enum(out: &mut Output, n: usize) -> Result<()> {
    let all = enumerate_nc(n)?;
    if out.structured() {
        out.pair("n", n);
        out.pair("count", all.len());
        for p in &all {
            out.pair("partition", p);
        }
    } else {
        for p in &all {
            out.line(p.to_string());
        }
    }
    Ok(())
}

fn header(out: &mut Output, kind: MatrixKind, n: usize, size: usize) {
    if out.structured() {
        out.pair("kind", kind);
        out.pair("n", n);
        out.pair("variable", kind.variable().symbol());
        out.pair("size", size);
    } else {
        out.line(format!(
            "{kind}, n = {n}, {size}x{size}, variable {}",
            kind.variable().symbol()
        ));
    }
}

fn matrix(out: &mut Output, args: &MatrixArgs) -> Result<()> {
    let kind = MatrixKind::from(args.kind);
    let m = build_matrix_with(args.n, kind, args.allow_large)?;
    let var = kind.variable();
    header(out, kind, args.n, m.len());
    for (i, p) in m.order().iter().enumerate() {
        if out.structured() {
            out.pair("index", p);
        } else {
            out.line(format!("index {}: {p}", i + 1));
        }
    }
    let entries = m.entries();
    for (i, row) in entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if out.structured() {
                out.pair(&format!("entry[{},{}]", i + 1, j + 1), render(e, var));
            } else {
                out.line(format!("[{},{}] {}", i + 1, j + 1, render(e, var)));
            }
        }
    }
    Ok(())
}

fn det(out: &mut Output, args: &MatrixArgs) -> Result<()> {
    let kind = MatrixKind::from(args.kind);
    let m = build_matrix_with(args.n, kind, args.allow_large)?;
    let in_delta = delta_determinant(&m);
    let value = in_delta
        .substitute(&LaurentPolynomial::delta())
        .expect("polynomials in delta have no negative powers");
    let var = kind.variable();
    if out.structured() {
        header(out, kind, args.n, m.len());
        out.pair("determinant", render(&value, var));
        out.pair("delta_degree", in_delta.max_exponent().unwrap_or(0));
    } else {
        out.line(render(&value, var));
    }
    Ok(())
}

fn invert(out: &mut Output, args: &MatrixArgs) -> Result<()> {
    let kind = MatrixKind::from(args.kind);
    let m = build_matrix_with(args.n, kind, args.allow_large)?;
    let inv = invert_matrix(&m)?;
    let var = kind.variable();
    header(out, kind, args.n, m.len());
    if out.structured() {
        out.pair("determinant", render(&inv.determinant, var));
    } else {
        out.line(format!("determinant: {}", render(&inv.determinant, var)));
    }
    for (i, row) in inv.adjugate.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if out.structured() {
                out.pair(&format!("adjugate[{},{}]", i + 1, j + 1), render(e, var));
            } else {
                out.line(format!("adjugate [{},{}] {}", i + 1, j + 1, render(e, var)));
            }
        }
    }
    for (i, row) in inv.inverse.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if out.structured() {
                out.pair(&format!("inverse[{},{}]", i + 1, j + 1), e.render(var));
            } else {
                out.line(format!("inverse [{},{}] {}", i + 1, j + 1, e.render(var)));
            }
        }
    }
    Ok(())
}

fn surgeries(out: &mut Output, c: &CutPresentation, side: Side) -> Result<()> {
    for p in enumerate_nc(c.n())? {
        let d = surgery(c, side, &p)?;
        let bracket = render(&bracket_state_sum(&d), Variable::A);
        let j = render(&jones(&d), Variable::T);
        let w = writhe(&d);
        if out.structured() {
            out.pair("record", "surgery");
            out.pair("side", side.number());
            out.pair("partition", &p);
            out.pair("crossings", d.crossing_count());
            out.pair("writhe", w);
            out.pair("bracket", bracket);
            out.pair("jones", j);
            out.line("");
        } else {
            out.line(format!("{p}: {} crossings, writhe {w}", d.crossing_count()));
            out.line(format!("  bracket: {bracket}"));
            out.line(format!("  jones: {j}"));
        }
    }
    Ok(())
}

fn print_report(out: &mut Output, r: &Report, timing: bool) {
    let var = r.variable();
    let verdict = if r.holds { "OK" } else { "VIOLATED" };
    if out.structured() {
        out.pair("record", "report");
        out.pair("identity", &r.identity);
        out.pair("n", r.n);
        out.pair("kind", r.kind);
        out.pair("variable", var.symbol());
        out.pair("lhs", render(&r.lhs, var));
        out.pair("rhs", render(&r.rhs, var));
        out.pair("holds", r.holds);
        if timing {
            out.pair("elapsed_us", r.elapsed.as_micros());
        }
        out.line("");
    } else {
        let time = if timing {
            format!(" ({} us)", r.elapsed.as_micros())
        } else {
            String::new()
        };
        out.line(format!(
            "{} n={} kind={}: {verdict}{time}",
            r.identity, r.n, r.kind
        ));
        out.line(format!("  lhs: {}", render(&r.lhs, var)));
        out.line(format!("  rhs: {}", render(&r.rhs, var)));
    }
}

/// Reports for one cut presentation at one level.
pub fn reports(c: &CutPresentation, level: Level) -> Result<Vec<Report>> {
    let mut all = Vec::new();
    if level == Level::Bracket {
        all.push(verify_identity_one(c)?);
        for side in [Side::One, Side::Two] {
            for p in enumerate_nc(c.n())? {
                all.push(verify_corollary_two(c, side, &p)?);
            }
        }
    }
    all.push(verify_splitting(c, level)?);
    Ok(all)
}

fn verify(out: &mut Output, args: &VerifyArgs) -> Result<bool> {
    let level = Level::from(args.level);
    let timing = args.timing;
    if let Some(count) = args.random {
        let mut passed = 0;
        for k in 0..count {
            // one stream per cut, so a shorter run is a prefix of a longer one
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            rng.set_stream(k as u64);
            let n = args.n.unwrap_or(2 + k % 2);
            let c = random_cut(&mut rng, n, args.max_crossings);
            let rs = reports(&c, level)?;
            let holds = rs.iter().all(|r| r.holds);
            passed += holds as usize;
            if out.structured() {
                out.pair("record", "cut");
                out.pair("index", k + 1);
                out.pair("n", n);
                out.pair("holds", holds);
                out.line("");
            } else {
                out.line(format!(
                    "cut {} (n={n}): {}",
                    k + 1,
                    if holds { "OK" } else { "VIOLATED" }
                ));
            }
            for r in rs.iter().filter(|r| !r.holds) {
                print_report(out, r, timing);
            }
            if !holds && !out.structured() {
                out.buf.push_str(&write_cut(&c));
            }
        }
        if out.structured() {
            out.pair("record", "summary");
            out.pair("checked", count);
            out.pair("passed", passed);
            out.line("");
        } else {
            out.line(format!("{passed} of {count} cuts passed"));
        }
        return Ok(passed == count);
    }
    let path = args
        .input
        .as_ref()
        .expect("clap requires an input without --random");
    let c = load(path)?.cut()?;
    let rs = reports(&c, level)?;
    for r in &rs {
        print_report(out, r, timing);
    }
    Ok(rs.iter().all(|r| r.holds))
}
