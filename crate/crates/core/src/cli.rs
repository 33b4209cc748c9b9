//! Command-line front end. [`run`] never panics on bad input and never
//! writes to the process streams itself, so it can be driven from tests.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chromatic::generalized_chromatic;
use crate::closed_forms::{family_chromatic, peo_polynomial, read_cycle_polynomial};
use crate::exponent::ExponentVector;
use crate::graph::{find_peo, GraphFamily, Label};
use crate::guard::Guard;
use crate::horn::{coefficient_table, horn_verdict, DiagonalScope, FitCaps, HornConfig};
use crate::qpoly::QPolynomial;
use crate::rational::{int, sign_pow, Rational};
use crate::verify;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_LIMIT: i32 = 2;

/// Exit code plus everything destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "chorn", version, about = "Independence polynomials, generalized chromatic polynomials and a bounded Horn test")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients of I(G, x) up to a total degree.
    Series(TableArgs),
    /// Coefficients of I(G, x)^q for an integer q.
    Power(PowerArgs),
    /// The generalized chromatic polynomial pi^m_G(q).
    Chromatic(ChromaticArgs),
    /// A perfect elimination ordering, if the graph is chordal.
    Peo(GraphArgs),
    /// pi^m_G(q) from a closed formula (families, cycles, chordal graphs).
    ClosedForm(ChromaticArgs),
    /// Bounded Horn test of I(G, x)^{-q}.
    Horn(HornArgs),
    /// Cross-module invariant suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// P:n, C:n, S:n, K:n, Pinf, Sinf or file:<path>.
    #[arg(long)]
    graph: String,
    /// Vertex window, comma separated; required for Pinf and Sinf.
    #[arg(long)]
    window: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, default_value_t = 4)]
    maxdeg: u32,
    /// Single exponent vector over the window; omitted trailing entries are 0.
    #[arg(long)]
    coeff: Option<String>,
}

#[derive(Args, Debug)]
struct PowerArgs {
    #[command(flatten)]
    table: TableArgs,
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
}

#[derive(Args, Debug)]
struct ChromaticArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    coeff: String,
    /// Also evaluate at this q.
    #[arg(long, allow_negative_numbers = true)]
    q: Option<i64>,
}

#[derive(Args, Debug)]
struct HornArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    q: i64,
    #[arg(long, default_value_t = 8)]
    maxdeg: u32,
    /// Numerator and denominator degree caps.
    #[arg(long, default_value = "2,2")]
    caps: String,
    /// Samples per ray; defaults to the number the caps require.
    #[arg(long)]
    rays: Option<u32>,
    #[arg(long, value_enum, default_value_t = Diagonal::InducedCycles)]
    diagonal: Diagonal,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Diagonal {
    InducedCycles,
    Window,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Bridge,
    ThreeRoutes,
    PeoClosedForm,
    PeoOrder,
    Families,
    ReadCycle,
    CycleDiagonal,
    OneVariable,
    Chordality,
    HornConsistency,
    HornRefutation,
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type Cmd = std::result::Result<(String, bool), Failure>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let guard = Guard::from_env();
    match dispatch(cli.command, guard) {
        Ok((stdout, true)) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Ok((stdout, false)) => Outcome { code: EXIT_USAGE, stdout, stderr: "verification failed\n".into() },
        Err(Failure::Usage(msg)) => error_outcome(EXIT_USAGE, "usage", &msg),
        Err(Failure::Compute(e)) => {
            let code = if e.is_resource_limit() { EXIT_LIMIT } else { EXIT_USAGE };
            error_outcome(code, if code == EXIT_LIMIT { "limit" } else { "input" }, &e.to_string())
        }
    }
}

fn error_outcome(code: i32, kind: &str, message: &str) -> Outcome {
    let body = json!({ "error": { "kind": kind, "message": message } });
    Outcome { code, stdout: String::new(), stderr: format!("{body}\n") }
}

fn dispatch(command: Command, guard: Guard) -> Cmd {
    match command {
        Command::Series(a) => table_command(&a, 1, guard),
        Command::Power(a) => table_command(&a.table, a.q, guard),
        Command::Chromatic(a) => chromatic_command(&a, guard),
        Command::Peo(a) => peo_command(&a),
        Command::ClosedForm(a) => closed_form_command(&a),
        Command::Horn(a) => horn_command(&a, guard),
        Command::Verify(a) => verify_command(&a, guard),
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> std::result::Result<Vec<T>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure::Usage(format!("bad {what} entry {s:?}"))))
        .collect()
}

/// The family and its window: the explicit `--window`, or every vertex of a finite graph.
fn resolve(args: &GraphArgs) -> std::result::Result<(GraphFamily, Vec<Label>), Failure> {
    let family = GraphFamily::parse(&args.graph)?;
    let window = match (&args.window, family.finite_graph()?) {
        (Some(text), finite) => {
            let mut w: Vec<Label> = parse_list(text, "--window")?;
            w.sort_unstable();
            w.dedup();
            if w.contains(&0) {
                return Err(Failure::Usage("vertex labels start at 1".into()));
            }
            if let Some(g) = finite {
                if let Some(&bad) = w.iter().find(|&&v| !g.contains(v)) {
                    return Err(Failure::Compute(Error::UnknownVertex(bad)));
                }
            }
            w
        }
        (None, Some(g)) => g.labels().to_vec(),
        (None, None) => return Err(Failure::Usage(format!("{} is infinite; pass --window", family.spec_name()))),
    };
    Ok((family, window))
}

fn parse_coeff(text: &str, window: &[Label]) -> std::result::Result<ExponentVector, Failure> {
    let exps: Vec<u32> = parse_list(text, "--coeff")?;
    if exps.len() > window.len() {
        return Err(Failure::Usage(format!("--coeff has {} entries but the window has {} vertices", exps.len(), window.len())));
    }
    let mut dense = exps;
    dense.resize(window.len(), 0);
    Ok(ExponentVector::from_dense(window, &dense))
}

fn render(value: &Value) -> String {
    format!("{value}\n")
}

fn csv_only_json(format: Format, verb: &str) -> std::result::Result<(), Failure> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(Failure::Usage(format!("{verb} has no CSV form; use --format json"))),
    }
}

fn table_command(args: &TableArgs, power: i64, guard: Guard) -> Cmd {
    let (family, window) = resolve(&args.graph)?;
    if let Some(text) = &args.coeff {
        let m = parse_coeff(text, &window)?;
        let degree = m.total_degree();
        let table = coefficient_table(&family, power, &window, degree, guard)?;
        let value = table.get(&m).cloned().unwrap_or_else(|| int(0));
        return Ok(match args.graph.format {
            Format::Json => (render(&json!({ "value": value.to_string() })), true),
            Format::Csv => (csv_rows(&window, [(m.to_dense(&window), value)]), true),
        });
    }
    let table = coefficient_table(&family, power, &window, args.maxdeg, guard)?;
    let out = match args.graph.format {
        Format::Json => {
            let entries: Vec<Value> = table
                .iter()
                .map(|(m, c)| json!({ "m": m.to_dense(&window), "value": c.to_string() }))
                .collect();
            render(&json!({
                "graph": table.graph,
                "power": power,
                "degree_bound": table.degree_bound,
                "window": window,
                "entries": entries,
            }))
        }
        Format::Csv => csv_rows(&window, table.iter().map(|(m, c)| (m.to_dense(&window), c.clone()))),
    };
    Ok((out, true))
}

fn csv_rows(window: &[Label], rows: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> String {
    let mut out: String = window.iter().map(|v| format!("x{v},")).collect();
    out.push_str("value\n");
    for (dense, value) in rows {
        for e in dense {
            out.push_str(&format!("{e},"));
        }
        out.push_str(&format!("{value}\n"));
    }
    out
}

fn polynomial_json(p: &QPolynomial) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "text": p.to_string(),
    })
}

fn chromatic_command(args: &ChromaticArgs, guard: Guard) -> Cmd {
    csv_only_json(args.graph.format, "chromatic")?;
    let (family, window) = resolve(&args.graph)?;
    let m = parse_coeff(&args.coeff, &window)?;
    let g = family.materialize(&window)?;
    let p = generalized_chromatic(&g, &m, guard)?;
    let mut body = json!({ "graph": family.spec_name(), "m": m, "polynomial": polynomial_json(&p) });
    if let Some(q) = args.q {
        body["value"] = json!(p.eval_int(q).to_string());
    }
    Ok((render(&body), true))
}

fn peo_command(args: &GraphArgs) -> Cmd {
    csv_only_json(args.format, "peo")?;
    let (family, window) = resolve(args)?;
    let g = family.materialize(&window)?;
    let peo = find_peo(&g).ok_or(Error::NotChordal)?;
    Ok((render(&json!({ "peo": peo.order() })), true))
}

/// `pi^m(q)` by the formula that applies, with `I(G, x)^{-q}[x^m] = pi^m(-q)`
/// reported alongside when `--q` is given.
fn closed_form_command(args: &ChromaticArgs) -> Cmd {
    csv_only_json(args.graph.format, "closed-form")?;
    let (family, window) = resolve(&args.graph)?;
    let m = parse_coeff(&args.coeff, &window)?;
    let (method, p) = match &family {
        GraphFamily::Cycle(n) => ("read", read_cycle_polynomial(*n, &m)?),
        GraphFamily::Explicit(_) => {
            let g = family.materialize(&window)?;
            let peo = find_peo(&g).ok_or(Error::NotChordal)?;
            // product(q) = (-1)^{|m|} pi^m(-q)
            let product = peo_polynomial(&g, &peo, &m)?;
            ("peo", product.negate_variable().scale(&sign_pow(m.total_degree())))
        }
        _ => ("family", family_chromatic(&family, &m)?),
    };
    let mut body = json!({ "graph": family.spec_name(), "m": m, "method": method, "polynomial": polynomial_json(&p) });
    if let Some(q) = args.q {
        body["value"] = json!(p.eval_int(q).to_string());
        body["inverse_power_coefficient"] = json!(p.eval_int(-q).to_string());
    }
    Ok((render(&body), true))
}

fn horn_command(args: &HornArgs, guard: Guard) -> Cmd {
    csv_only_json(args.graph.format, "horn")?;
    let (family, window) = resolve(&args.graph)?;
    let caps: Vec<u32> = parse_list(&args.caps, "--caps")?;
    let [numerator, denominator] = caps[..] else {
        return Err(Failure::Usage(format!("--caps expects two entries a,b, got {:?}", args.caps)));
    };
    let config = HornConfig {
        degree_bound: args.maxdeg,
        caps: FitCaps { numerator, denominator },
        ray_length: args.rays,
        diagonal: match args.diagonal {
            Diagonal::InducedCycles => DiagonalScope::InducedCycles,
            Diagonal::Window => DiagonalScope::Window,
            Diagonal::None => DiagonalScope::None,
        },
        guard,
    };
    let verdict = horn_verdict(&family, args.q, &window, &config)?;
    let value = serde_json::to_value(&verdict).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok((render(&value), true))
}

fn verify_command(args: &VerifyArgs, guard: Guard) -> Cmd {
    let reports = match args.suite {
        Suite::All => verify::run_all(args.max_n, args.seed, guard),
        one => vec![verify::run_suite(suite_name(one), args.max_n, args.seed, guard).expect("known suite")],
    };
    let ok = reports.iter().all(verify::SuiteReport::ok);
    let out = match args.format {
        Format::Json => render(&json!({ "ok": ok, "suites": reports })),
        Format::Csv => {
            let mut s = String::from("suite,passed,failed\n");
            for r in &reports {
                s.push_str(&format!("{},{},{}\n", r.suite, r.passed, r.failed));
            }
            s
        }
    };
    Ok((out, ok))
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::All => "all",
        Suite::Bridge => "bridge",
        Suite::ThreeRoutes => "three_routes",
        Suite::PeoClosedForm => "peo_closed_form",
        Suite::PeoOrder => "peo_order_independence",
        Suite::Families => "family_formulas",
        Suite::ReadCycle => "read_cycle",
        Suite::CycleDiagonal => "cycle_diagonal",
        Suite::OneVariable => "one_variable",
        Suite::Chordality => "chordality",
        Suite::HornConsistency => "horn_consistency",
        Suite::HornRefutation => "horn_refutation",
    }
}
