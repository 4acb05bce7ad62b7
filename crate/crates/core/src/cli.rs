//! Command-line front end. [`dispatch`] parses an argument vector, runs one
//! subcommand, and renders the result as text, JSON, or CSV; the `cbid`
//! binary only prints what it returns.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 domain or resource error,
//! 4 property failure (an identity that must hold did not).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::traits::{One, Signed};
use serde_json::{json, Map, Value};

use crate::dice;
use crate::error::Error;
use crate::exact::{as_natural, format_f64, parse_exact, parse_rational, to_decimal, Rational};
use crate::hypergeom;
use crate::identity;
use crate::krawtchouk::{self, FilterSpec};
use crate::points::{self, GamePosition, MultiPosition};
use crate::poly::Polynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_PROPERTY: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "cbid", version, about = "Exact checks of the truncated binomial identity and its relatives")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The two-series identity.
    #[command(subcommand)]
    Cb(CbCommand),
    /// Partial sums of figurate series.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Terminating hypergeometric sums.
    #[command(subcommand)]
    Hyp(HypCommand),
    /// The problem of points.
    #[command(subcommand)]
    Points(PointsCommand),
    /// Fair-dice tail probabilities.
    #[command(subcommand)]
    Dice(DiceCommand),
    /// Krawtchouk-kernel smoothing filter.
    #[command(subcommand)]
    Filter(FilterCommand),
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum CbCommand {
    /// Evaluate both series at a rational point.
    Verify {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: Rational,
    },
    /// Expand symbolically for every (n, m) in [0, max]^2.
    Sweep {
        #[arg(long, default_value_t = 12)]
        max: u64,
    },
    /// Hering's truncated-power form at a point, with its index translation.
    Hering {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: Rational,
    },
}

const CANON_HELP: &str = "\
Checks the canon for sum_{k<n} C(p+k-1, k) x^k:

  (1-x^n)/(1-x)^p - n x^n/(1-x)^{p-1} - n(n+1) x^n/(1*2 (1-x)^{p-2}) - ...

continued until there are p terms. In the original printing the numerator of
the last displayed term lacks its factor x^n; the corrected form is checked.";

#[derive(Debug, Subcommand)]
enum SeriesCommand {
    /// De Moivre's canon, and r(x) re-derived from the recurrence.
    #[command(long_about = CANON_HELP)]
    Demoivre {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
enum HypCommand {
    /// Both sides of Pfaff's transformation for terminating a.
    Pfaff {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        z: Rational,
    },
    /// Hering's chain for non-integer m, or its integer-m limit with a
    /// certified tail bound for positive integer m.
    Hering {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        m: Rational,
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: Rational,
        /// Tail terms summed in the integer-m case.
        #[arg(long, default_value_t = 60)]
        terms: u64,
    },
}

#[derive(Debug, Subcommand)]
enum PointsCommand {
    /// Two players: chances by every route and the fair division.
    Share {
        /// Rounds still needed by Pierre and Paul, e.g. 5,3.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        needs: Vec<u64>,
        #[arg(long, value_parser = rational_arg)]
        p: Rational,
        #[arg(long, value_parser = rational_arg, default_value = "1")]
        stake: Rational,
    },
    /// Any number of players.
    Multi {
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        needs: Vec<u64>,
        #[arg(long, value_delimiter = ',', num_args = 1.., value_parser = rational_arg)]
        probs: Vec<Rational>,
        #[arg(long, value_parser = rational_arg, default_value = "1")]
        stake: Rational,
    },
}

#[derive(Debug, Subcommand)]
enum DiceCommand {
    /// P(at least k sixes in 6k dice) for k = 1..k-max.
    Pepys {
        #[arg(long = "k-max")]
        k_max: u64,
    },
    /// g(sn, n) for n = 1..n-max, with the monotonicity verdict.
    G {
        #[arg(long)]
        faces: u64,
        #[arg(long = "n-max")]
        n_max: u64,
    },
}

#[derive(Debug, Args)]
struct FilterArgs {
    /// Half-width of the window.
    #[arg(long = "N")]
    half_width: u64,
    /// Order; polynomials of degree up to 2n pass unchanged.
    #[arg(long = "n")]
    order: u64,
}

#[derive(Debug, Subcommand)]
enum FilterCommand {
    /// Exact filter taps.
    Design {
        #[command(flatten)]
        spec: FilterArgs,
    },
    /// Filter a single-column CSV signal (valid region only).
    Apply {
        #[command(flatten)]
        spec: FilterArgs,
        #[arg(long)]
        input: PathBuf,
    },
    /// Sampled frequency response and its exact polynomial form.
    Response {
        #[command(flatten)]
        spec: FilterArgs,
        #[arg(long, default_value_t = 64)]
        samples: u64,
        /// Write the exact polynomials as JSON to this path.
        #[arg(long)]
        sidecar: Option<PathBuf>,
        /// Also report the response of the kernel without the binomial
        /// weight, for comparison.
        #[arg(long)]
        unweighted: bool,
    },
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What every command produces before rendering.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub results: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub verified: bool,
    pub diagnostics: Vec<String>,
}

impl Report {
    fn new(command: &str, inputs: Vec<(&str, String)>) -> Self {
        Report {
            command: command.to_string(),
            inputs: inputs.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            results: Value::Null,
            headers: Vec::new(),
            rows: Vec::new(),
            verified: true,
            diagnostics: Vec::new(),
        }
    }

    fn table(mut self, headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.headers = headers.iter().map(|h| h.to_string()).collect();
        self.rows = rows;
        self
    }

    fn results(mut self, results: Value) -> Self {
        self.results = results;
        self
    }

    /// Records a check; a failed one flips `verified` and leaves a diagnostic.
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.verified = false;
            self.diagnostics.push(what.into());
        }
    }

    pub fn envelope(&self) -> Value {
        let inputs: Map<String, Value> = self
            .inputs
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        json!({
            "command": self.command,
            "inputs": inputs,
            "results": self.results,
            "verified": self.verified,
            "diagnostics": self.diagnostics,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = serde_json::to_string_pretty(&self.envelope()).expect("json values serialize");
                out.push('\n');
                out
            }
            Format::Csv => {
                let mut out = self.headers.join(",");
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = self.command.clone();
        for (k, v) in &self.inputs {
            out.push_str(&format!("  {k}={v}"));
        }
        out.push('\n');
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|i| {
                self.rows
                    .iter()
                    .map(|r| r.get(i).map_or(0, String::len))
                    .chain([self.headers[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        out.push_str(&line(&self.headers));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out.push_str(&format!("verified: {}\n", self.verified));
        out
    }
}

fn q(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn coeff_strings(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(q).collect())
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => EXIT_USAGE,
        Error::Domain(_) | Error::Resource(_) => EXIT_DOMAIN,
        Error::Property(_) => EXIT_PROPERTY,
    }
}

/// Parses `argv` (program name first), runs the command, and renders it.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: rendered, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: rendered },
            };
        }
    };
    match run(&cli.command) {
        Ok(report) => {
            let stdout = report.render(cli.format);
            if report.verified {
                Outcome { code: EXIT_OK, stdout, stderr: String::new() }
            } else {
                let stderr = report.diagnostics.iter().map(|d| format!("check failed: {d}\n")).collect();
                Outcome { code: EXIT_PROPERTY, stdout, stderr }
            }
        }
        Err(err) => Outcome {
            code: exit_code(&err),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}

fn run(command: &Command) -> Result<Report, Error> {
    match command {
        Command::Cb(cmd) => run_cb(cmd),
        Command::Series(SeriesCommand::Demoivre { p, n }) => run_demoivre(*p, *n),
        Command::Hyp(cmd) => run_hyp(cmd),
        Command::Points(cmd) => run_points(cmd),
        Command::Dice(cmd) => run_dice(cmd),
        Command::Filter(cmd) => run_filter(cmd),
    }
}

fn run_cb(cmd: &CbCommand) -> Result<Report, Error> {
    match cmd {
        CbCommand::Verify { n, m, x } => {
            let split = identity::cb_split(&identity::CbParams::new(*n, *m, x.clone()));
            let sum = split.sum();
            let mut report = Report::new("cb verify", vec![("n", n.to_string()), ("m", m.to_string()), ("x", x.to_string())])
                .results(json!({ "first": q(&split.first), "second": q(&split.second), "sum": q(&sum) }))
                .table(
                    &["first", "second", "sum"],
                    vec![vec![split.first.to_string(), split.second.to_string(), sum.to_string()]],
                );
            report.check(sum.is_one(), format!("first + second = {sum}, expected 1"));
            Ok(report)
        }
        CbCommand::Sweep { max } => {
            let mut rows = Vec::new();
            let mut failures = Vec::new();
            for n in 0..=*max {
                for m in 0..=*max {
                    let holds = identity::cb_polynomial_identity(n, m);
                    if !holds {
                        failures.push(json!([n, m]));
                    }
                    rows.push(vec![n.to_string(), m.to_string(), holds.to_string()]);
                }
            }
            let count = rows.len();
            let mut report = Report::new("cb sweep", vec![("max", max.to_string())])
                .results(json!({ "pairs": count, "failures": failures.clone() }))
                .table(&["n", "m", "holds"], rows);
            report.check(failures.is_empty(), format!("identity fails at {} pairs", failures.len()));
            Ok(report)
        }
        CbCommand::Hering { m, n, x } => {
            let (lhs, rhs) = identity::hering_sides(*m, *n, x)?;
            let translation = identity::hering_to_cb(*m, *n)?;
            let mut report = Report::new("cb hering", vec![("m", m.to_string()), ("n", n.to_string()), ("x", x.to_string())])
                .results(json!({
                    "lhs": q(&lhs),
                    "rhs": q(&rhs),
                    "cb_n": translation.cb_n,
                    "cb_m": translation.cb_m,
                    "translation_verified": translation.verified,
                }))
                .table(
                    &["lhs", "rhs", "cb_n", "cb_m"],
                    vec![vec![
                        lhs.to_string(),
                        rhs.to_string(),
                        translation.cb_n.to_string(),
                        translation.cb_m.to_string(),
                    ]],
                );
            report.check(lhs == rhs, format!("lhs {lhs} differs from rhs {rhs}"));
            report.check(translation.verified, "index translation did not expand to the identity");
            Ok(report)
        }
    }
}

fn run_demoivre(p: u64, n: u64) -> Result<Report, Error> {
    let canon = identity::demoivre_canon(p, n)?;
    let terms = identity::demoivre_canon_terms(p, n);
    let rows = vec![
        vec!["partial_sum".to_string(), canon.partial_sum.to_string()],
        vec!["canon".to_string(), terms.join(" ")],
        vec!["correction".to_string(), canon.correction.display_in("(1-x)")],
        vec!["derived_r".to_string(), canon.derived_r.display_in("(1-x)")],
    ];
    let mut report = Report::new("series demoivre", vec![("p", p.to_string()), ("n", n.to_string())])
        .results(json!({
            "partial_sum": coeff_strings(&canon.partial_sum),
            "canon_terms": terms,
            "correction": coeff_strings(&canon.correction),
            "derived_r": coeff_strings(&canon.derived_r),
            "check": canon.check,
        }))
        .table(&["part", "expression"], rows);
    report.check(canon.check, "canon does not match the partial sum");
    Ok(report)
}

fn run_hyp(cmd: &HypCommand) -> Result<Report, Error> {
    match cmd {
        HypCommand::Pfaff { a, b, c, z } => {
            let (left, right) = hypergeom::pfaff_sides(a, b, c, z)?;
            let inputs = vec![("a", a.to_string()), ("b", b.to_string()), ("c", c.to_string()), ("z", z.to_string())];
            let mut report = Report::new("hyp pfaff", inputs)
                .results(json!({ "left": q(&left), "right": q(&right), "equal": left == right }))
                .table(&["left", "right"], vec![vec![left.to_string(), right.to_string()]]);
            report.check(left == right, "the two sides differ");
            Ok(report)
        }
        HypCommand::Hering { m, n, x, terms } => {
            let inputs = vec![("m", m.to_string()), ("n", n.to_string()), ("x", x.to_string())];
            if !m.is_integer() {
                let chain = hypergeom::hering_chain_check(m, *n, x)?;
                let members = [
                    ("left", &chain.left),
                    ("middle", &chain.middle),
                    ("right", &chain.right),
                    ("right_series", &chain.right_series),
                ];
                let mut report = Report::new("hyp hering", inputs)
                    .results(json!({
                        "left": q(&chain.left),
                        "middle": q(&chain.middle),
                        "right": q(&chain.right),
                        "right_series": q(&chain.right_series),
                        "pfaff_holds": chain.pfaff_holds,
                    }))
                    .table(
                        &["member", "exact", "decimal"],
                        members
                            .iter()
                            .map(|(name, v)| vec![name.to_string(), v.to_string(), to_decimal(v)])
                            .collect(),
                    );
                report.check(chain.holds(), "chain members disagree");
                return Ok(report);
            }
            let m_int = as_natural(m)
                .filter(|&k| k >= 1)
                .ok_or_else(|| Error::Domain(format!("integer m = {m} must be positive")))?;
            let tail = hypergeom::hering_limit_tail_check(m_int, *n, x, *terms)?;
            let mut inputs = inputs;
            inputs.push(("terms", terms.to_string()));
            let members = [
                ("head", &tail.head),
                ("head_target", &tail.head_target),
                ("tail_partial", &tail.tail_partial),
                ("tail_target", &tail.tail_target),
                ("residual", &tail.residual),
                ("bound", &tail.bound),
            ];
            let mut results = Map::new();
            for (name, v) in &members {
                results.insert(name.to_string(), q(v));
            }
            let mut report = Report::new("hyp hering", inputs).results(Value::Object(results)).table(
                &["member", "exact", "decimal"],
                members
                    .iter()
                    .map(|(name, v)| vec![name.to_string(), v.to_string(), to_decimal(v)])
                    .collect(),
            );
            report.check(tail.head == tail.head_target, "finite part differs from its target");
            report.check(tail.residual <= tail.bound, "tail residual exceeds its bound");
            Ok(report)
        }
    }
}

fn run_points(cmd: &PointsCommand) -> Result<Report, Error> {
    match cmd {
        PointsCommand::Share { needs, p, stake } => {
            let [n, m] = needs[..] else {
                return Err(Error::Parse(format!("--needs takes exactly two values, got {}", needs.len())));
            };
            let pos = GamePosition::new(n, m, p.clone())?;
            let shares = points::fair_division(&pos, stake)?;
            let montmort = points::chance_montmort(&pos);
            let bernoulli = points::chance_bernoulli(&pos);
            let oracle = (n + m <= points::ENUMERATION_LIMIT)
                .then(|| points::enumeration_oracle(&pos))
                .transpose()?;
            let sum = montmort.sum();
            let players = [("pierre", n, &montmort.pierre, &shares.pierre), ("paul", m, &montmort.paul, &shares.paul)];
            let mut report = Report::new(
                "points share",
                vec![("needs", format!("{n},{m}")), ("p", p.to_string()), ("stake", stake.to_string())],
            )
            .results(json!({
                "players": players.iter().map(|(name, k, c, s)| json!({
                    "name": name, "needs": k, "chance": q(c), "share": q(s),
                })).collect::<Vec<_>>(),
                "sum": q(&sum),
                "enumerated": oracle.is_some(),
            }))
            .table(
                &["player", "needs", "chance", "decimal", "share"],
                players
                    .iter()
                    .map(|(name, k, c, s)| vec![name.to_string(), k.to_string(), c.to_string(), to_decimal(c), s.to_string()])
                    .collect(),
            );
            report.check(sum.is_one(), format!("chances sum to {sum}"));
            report.check(bernoulli == montmort, "fixed-length and decisive-round chances differ");
            if let Some(oracle) = oracle {
                report.check(oracle == montmort, "enumeration differs from the closed forms");
            }
            report.check(&shares.pierre + &shares.paul == *stake, "shares do not add up to the stake");
            Ok(report)
        }
        PointsCommand::Multi { needs, probs, stake } => {
            if !stake.is_positive() {
                return Err(Error::Domain(format!("stake {stake} must be positive")));
            }
            let pos = MultiPosition::new(needs.clone(), probs.clone())?;
            let chances = points::multi_player_chances(&pos);
            let sum: Rational = chances.iter().sum();
            let oracle = points::multi_enumeration_oracle(&pos).ok();
            let joined = |v: Vec<String>| v.join(",");
            let mut report = Report::new(
                "points multi",
                vec![
                    ("needs", joined(needs.iter().map(u64::to_string).collect())),
                    ("probs", joined(probs.iter().map(Rational::to_string).collect())),
                    ("stake", stake.to_string()),
                ],
            );
            let rows: Vec<Vec<String>> = chances
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    vec![i.to_string(), needs[i].to_string(), c.to_string(), to_decimal(c), (c * stake).to_string()]
                })
                .collect();
            report = report
                .results(json!({
                    "players": chances.iter().enumerate().map(|(i, c)| json!({
                        "index": i, "needs": needs[i], "prob": q(&probs[i]), "chance": q(c), "share": q(&(c * stake)),
                    })).collect::<Vec<_>>(),
                    "sum": q(&sum),
                    "enumerated": oracle.is_some(),
                }))
                .table(&["player", "needs", "chance", "decimal", "share"], rows);
            report.check(sum.is_one(), format!("chances sum to {sum}"));
            if let Some(oracle) = oracle {
                report.check(oracle == chances, "enumeration differs from dynamic programming");
            }
            Ok(report)
        }
    }
}

fn run_dice(cmd: &DiceCommand) -> Result<Report, Error> {
    match cmd {
        DiceCommand::Pepys { k_max } => {
            if *k_max == 0 {
                return Err(Error::Domain("k-max must be at least 1".into()));
            }
            let values = (1..=*k_max).map(dice::pepys_probability).collect::<Result<Vec<_>, _>>()?;
            let decreasing = values.windows(2).all(|w| w[1] < w[0]);
            let rows = values
                .iter()
                .zip(1..)
                .map(|(v, k)| vec![k.to_string(), v.to_string(), to_decimal(v)])
                .collect();
            let mut report = Report::new("dice pepys", vec![("k-max", k_max.to_string())])
                .results(json!({
                    "values": values.iter().map(q).collect::<Vec<_>>(),
                    "strictly_decreasing": decreasing,
                }))
                .table(&["index", "exact", "decimal"], rows);
            report.check(decreasing, "probabilities do not decrease strictly in k");
            Ok(report)
        }
        DiceCommand::G { faces, n_max } => {
            let increasing = dice::g_monotone_check(*faces, *n_max)?;
            let table = dice::g_table(*faces, *n_max)?;
            let rows = table
                .iter()
                .map(|r| vec![r.n.to_string(), r.value.to_string(), to_decimal(&r.value)])
                .collect();
            let mut report = Report::new("dice g", vec![("faces", faces.to_string()), ("n-max", n_max.to_string())])
                .results(json!({
                    "values": table.iter().map(|r| q(&r.value)).collect::<Vec<_>>(),
                    "strictly_increasing": increasing,
                }))
                .table(&["index", "exact", "decimal"], rows);
            report.check(increasing, "g(sn, n) does not increase strictly in n");
            Ok(report)
        }
    }
}

fn read_signal(path: &PathBuf) -> Result<Vec<Rational>, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let cell = line.split(',').next().unwrap_or("").trim();
        if cell.is_empty() {
            continue;
        }
        match parse_exact(cell) {
            Ok(v) => out.push(v),
            // a header row
            Err(_) if i == 0 => continue,
            Err(e) => return Err(Error::Parse(format!("{} line {}: {e}", path.display(), i + 1))),
        }
    }
    Ok(out)
}

fn run_filter(cmd: &FilterCommand) -> Result<Report, Error> {
    match cmd {
        FilterCommand::Design { spec } => {
            let fs = FilterSpec::new(spec.half_width, spec.order)?;
            let taps = krawtchouk::kernel_coefficients(&fs)?;
            let sum: Rational = taps.iter().sum();
            let big = spec.half_width as i64;
            let rows = taps
                .iter()
                .zip(-big..)
                .map(|(c, x)| vec![x.to_string(), c.to_string(), to_decimal(c)])
                .collect();
            let symmetric = taps.iter().eq(taps.iter().rev());
            let mut report = Report::new(
                "filter design",
                vec![("N", spec.half_width.to_string()), ("n", spec.order.to_string())],
            )
            .results(json!({ "coefficients": taps.iter().map(q).collect::<Vec<_>>(), "sum": q(&sum) }))
            .table(&["x", "coefficient", "decimal"], rows);
            report.check(sum.is_one(), format!("taps sum to {sum}"));
            report.check(symmetric, "taps are not symmetric");
            Ok(report)
        }
        FilterCommand::Apply { spec, input } => {
            let fs = FilterSpec::new(spec.half_width, spec.order)?;
            let signal = read_signal(input)?;
            let out = krawtchouk::apply_filter(&fs, &signal)?;
            let mut report = Report::new(
                "filter apply",
                vec![
                    ("N", spec.half_width.to_string()),
                    ("n", spec.order.to_string()),
                    ("input", input.display().to_string()),
                ],
            )
            .results(json!({ "output": out.iter().map(q).collect::<Vec<_>>() }))
            .table(&["g"], out.iter().map(|v| vec![v.to_string()]).collect());
            let expected = signal.len() - 2 * spec.half_width as usize;
            report.check(out.len() == expected, "output length is not len(signal) - 2N");
            Ok(report)
        }
        FilterCommand::Response { spec, samples, sidecar, unweighted } => {
            let fs = FilterSpec::new(spec.half_width, spec.order)?;
            let tf = krawtchouk::transfer_function(&fs)?;
            let flat = krawtchouk::flatness_report(&fs, *samples)?;
            let alternate = unweighted.then(|| krawtchouk::unweighted_response(&fs)).transpose()?;
            let sampled = tf.sample(*samples as usize);
            let mut headers = vec!["omega", "phi"];
            if alternate.is_some() {
                headers.push("phi_unweighted");
            }
            let rows = sampled
                .iter()
                .map(|&(omega, phi)| {
                    let mut row = vec![format_f64(omega), format_f64(phi)];
                    if let Some(alt) = &alternate {
                        row.push(format_f64(alt.eval_f64((omega / 2.0).sin().powi(2))));
                    }
                    row
                })
                .collect();
            let exact = json!({
                "N": spec.half_width,
                "n": spec.order,
                "s_poly": coeff_strings(&tf.s_poly),
                "P": coeff_strings(&tf.p),
                "Q": coeff_strings(&tf.q),
                "order_at_zero": flat.order_at_zero,
                "order_at_one": flat.order_at_one,
                "unweighted_s_poly": alternate.as_ref().map(coeff_strings),
            });
            if let Some(path) = sidecar {
                let text = serde_json::to_string_pretty(&exact).expect("json values serialize");
                std::fs::write(path, text + "\n")
                    .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
            }
            let mut inputs = vec![
                ("N", spec.half_width.to_string()),
                ("n", spec.order.to_string()),
                ("samples", samples.to_string()),
            ];
            if let Some(path) = sidecar {
                inputs.push(("sidecar", path.display().to_string()));
            }
            let mut report = Report::new("filter response", inputs).results(exact).table(&headers, rows);
            // flatness_report has already rejected any non-monotone grid
            report.check(flat.grid.len() == *samples as usize + 1, "grid has the wrong length");
            Ok(report)
        }
    }
}
