//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on a verification mismatch or when `check`
//! finds a failing condition, 2 on malformed arguments. Errors go to the
//! diagnostic stream prefixed with `ERROR:`.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::classify_index;
use crate::conditions::{
    detect_class, detect_types, quasismooth_divisibility, quasismooth_monomial, PAIRS, TRIPLES,
};
use crate::error::Error;
use crate::obstructions::obstruction_report;
use crate::oracle::brute_force;
use crate::tables;
use crate::types::{Classification, Quintuple, Series};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const TWO_PARAMETER_NOTE: &str = "parameters non-negative, tuple ordered";

#[derive(Debug, Parser)]
#[command(
    name = "delpezzo",
    version,
    about = "Classify quasi-smooth well-formed del Pezzo hypersurfaces in weighted P^3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the classification for one index.
    Classify {
        #[arg(long)]
        index: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also list every member with a3 at most this bound.
        #[arg(long)]
        expand_bound: Option<u64>,
    },
    /// Report every condition for one weight system.
    Check {
        #[arg(num_args = 4, value_names = ["A0", "A1", "A2", "A3"])]
        weights: Vec<u64>,
        #[arg(long, conflicts_with = "degree", required_unless_present = "degree")]
        index: Option<u64>,
        #[arg(long)]
        degree: Option<u64>,
    },
    /// List the members of a serialized series.
    Expand {
        /// JSON object {"base":[..],"steps":[[..]],"class":tag}.
        #[arg(long)]
        series: String,
        #[arg(long)]
        bound: u64,
    },
    /// Compare the classification against the brute-force oracle.
    Verify {
        #[arg(long)]
        index: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Obstruction report for every member up to a bound.
    Obstructions {
        #[arg(long)]
        index: u64,
        #[arg(long)]
        bound: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

/// Failure of a subcommand, mapped to an exit status.
enum Failure {
    Usage(String),
    Check(String),
    BrokenPipe,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::BrokenPipe;
        }
        Failure::Check(format!("write failed: {e}"))
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit status.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args.iter().map(|a| a.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            let _ = writeln!(err, "ERROR: {first}");
            for line in rendered.lines().skip(1) {
                let _ = writeln!(err, "{line}");
            }
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Classify {
            index,
            format,
            expand_bound,
        } => cmd_classify(out, index, format, expand_bound),
        Command::Check {
            weights,
            index,
            degree,
        } => cmd_check(out, &weights, index, degree),
        Command::Expand { series, bound } => cmd_expand(out, &series, bound),
        Command::Verify { index, bound } => cmd_verify(out, index, bound),
        Command::Obstructions { index, bound } => cmd_obstructions(out, index, bound),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "ERROR: {msg}");
            EXIT_USAGE
        }
        Err(Failure::BrokenPipe) => EXIT_OK,
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "ERROR: {msg}");
            EXIT_FAILURE
        }
    }
}

fn checked_index(index: u64) -> Result<u64, Failure> {
    if index == 0 {
        return Err(Error::InvalidIndex(0).into());
    }
    Ok(index)
}

// ---------------------------------------------------------------- rendering

/// `base + s·x + t·y` in the compact form used by the reference tables,
/// e.g. `2x+3`, `x+y+2`, `7`.
fn affine(base: u64, coeffs: &[(u64, &str)]) -> String {
    let mut terms: Vec<String> = coeffs
        .iter()
        .filter(|(c, _)| *c > 0)
        .map(|&(c, v)| {
            if c == 1 {
                v.to_string()
            } else {
                format!("{c}{v}")
            }
        })
        .collect();
    if base > 0 || terms.is_empty() {
        terms.push(base.to_string());
    }
    terms.join("+")
}

/// Weight and degree expressions of a series, as `("(a0,a1,a2,a3)", "d")`.
pub fn series_expressions(s: &Series) -> (String, String) {
    const PARAMS: [&str; 2] = ["x", "y"];
    let base = s.base().to_array();
    let coord = |i: usize| {
        let coeffs: Vec<(u64, &str)> = s
            .steps()
            .iter()
            .zip(PARAMS)
            .map(|(st, p)| (st[i], p))
            .collect();
        affine(base[i], &coeffs)
    };
    let weights = format!("({},{},{},{})", coord(0), coord(1), coord(2), coord(3));
    (weights, coord(4))
}

fn weights_str(q: &Quintuple) -> String {
    let [a0, a1, a2, a3] = q.weights();
    format!("({a0},{a1},{a2},{a3})")
}

fn step_field(s: &Series, i: usize) -> String {
    s.steps()
        .get(i)
        .map(|st| st.iter().map(u64::to_string).collect::<Vec<_>>().join(";"))
        .unwrap_or_default()
}

#[derive(serde::Serialize)]
struct WithMembers<'a> {
    #[serde(flatten)]
    classification: &'a Classification,
    members: &'a BTreeSet<Quintuple>,
}

/// Stable JSON rendering of a classification.
pub fn classification_json(c: &Classification) -> String {
    serde_json::to_string_pretty(c).expect("classification serializes")
}

fn render_text(out: &mut dyn Write, c: &Classification) -> std::io::Result<()> {
    writeln!(out, "Index {}", c.index)?;
    writeln!(
        out,
        "Two-parameter series ({}; {TWO_PARAMETER_NOTE}):",
        c.two_param.len()
    )?;
    for s in &c.two_param {
        let (w, d) = series_expressions(s);
        writeln!(out, "  {w}  d={d}  [{}]", s.origin())?;
    }
    writeln!(
        out,
        "One-parameter series ({}; parameter non-negative):",
        c.one_param.len()
    )?;
    for s in &c.one_param {
        let (w, d) = series_expressions(s);
        writeln!(out, "  {w}  d={d}  [{}]", s.origin())?;
    }
    writeln!(out, "Sporadic cases ({}):", c.sporadic.len())?;
    for q in &c.sporadic {
        writeln!(out, "  {}  d={}", weights_str(q), q.degree())?;
    }
    Ok(())
}

fn render_csv(out: &mut dyn Write, c: &Classification) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Failure::Check(format!("csv: {e}"));
    w.write_record(["kind", "a0", "a1", "a2", "a3", "d", "step1", "step2"])
        .map_err(csv_err)?;
    let mut series_row = |kind: &str, s: &Series| -> Result<(), Failure> {
        let b = s.base().to_array().map(|v| v.to_string());
        w.write_record([
            kind,
            &b[0],
            &b[1],
            &b[2],
            &b[3],
            &b[4],
            &step_field(s, 0),
            &step_field(s, 1),
        ])
        .map_err(csv_err)
    };
    for s in &c.two_param {
        series_row("two_parameter", s)?;
    }
    for s in &c.one_param {
        series_row("one_parameter", s)?;
    }
    for q in &c.sporadic {
        let b = q.to_array().map(|v| v.to_string());
        w.write_record(["sporadic", &b[0], &b[1], &b[2], &b[3], &b[4], "", ""])
            .map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::Check(format!("csv: {e}")))?;
    out.write_all(&bytes)?;
    Ok(())
}

fn latex_table(
    out: &mut dyn Write,
    caption: &str,
    rows: &[(String, String)],
) -> std::io::Result<()> {
    writeln!(out, "\\begin{{longtable}}{{|c|c|}}")?;
    writeln!(out, "\\caption{{{caption}}}\\\\")?;
    writeln!(out, "\\hline")?;
    writeln!(out, "$(a_0,a_1,a_2,a_3)$ & $d$\\\\")?;
    writeln!(out, "\\hline")?;
    writeln!(out, "\\endhead")?;
    for (w, d) in rows {
        writeln!(out, "${w}$ & ${d}$\\\\ \\hline")?;
    }
    writeln!(out, "\\end{{longtable}}")
}

fn render_latex(out: &mut dyn Write, c: &Classification) -> std::io::Result<()> {
    let i = c.index;
    let two: Vec<_> = c.two_param.iter().map(series_expressions).collect();
    let one: Vec<_> = c.one_param.iter().map(series_expressions).collect();
    let spor: Vec<_> = c
        .sporadic
        .iter()
        .map(|q| (weights_str(q), q.degree().to_string()))
        .collect();
    writeln!(out, "% two-parameter series: {TWO_PARAMETER_NOTE}")?;
    latex_table(out, &format!("Index {i}, Two-Parameter Series"), &two)?;
    latex_table(out, &format!("Index {i}, Infinite Series"), &one)?;
    latex_table(out, &format!("Index {i}, Sporadic Cases"), &spor)
}

// ---------------------------------------------------------------- commands

fn cmd_classify(
    out: &mut dyn Write,
    index: u64,
    format: Format,
    expand_bound: Option<u64>,
) -> Result<(), Failure> {
    let c = classify_index(checked_index(index)?)?;
    let members = expand_bound.map(|b| c.members(b));
    match format {
        Format::Json => {
            let text = match &members {
                None => classification_json(&c),
                Some(members) => serde_json::to_string_pretty(&WithMembers {
                    classification: &c,
                    members,
                })
                .map_err(|e| Failure::Check(e.to_string()))?,
            };
            writeln!(out, "{text}")?;
            return Ok(());
        }
        Format::Text => render_text(out, &c)?,
        Format::Csv => render_csv(out, &c)?,
        Format::Latex => render_latex(out, &c)?,
    }
    if let (Some(bound), Some(members)) = (expand_bound, members) {
        writeln!(out, "Members with a3 <= {bound} ({}):", members.len())?;
        for q in members {
            writeln!(out, "  {q}")?;
        }
    }
    Ok(())
}

fn cmd_check(
    out: &mut dyn Write,
    weights: &[u64],
    index: Option<u64>,
    degree: Option<u64>,
) -> Result<(), Failure> {
    let mut w: [u64; 4] = weights
        .try_into()
        .map_err(|_| Failure::Usage("expected four weights".into()))?;
    w.sort_unstable();
    let q = match (index, degree) {
        (Some(i), None) => Quintuple::with_index(w, checked_index(i)?)?,
        (None, Some(d)) => Quintuple::new(w, d)?,
        _ => {
            return Err(Failure::Usage(
                "exactly one of --index and --degree is required".into(),
            ))
        }
    };
    let report = quasismooth_divisibility(&q);
    let yes_no = |b: bool| if b { "pass" } else { "FAIL" };
    writeln!(out, "quintuple {q}  index {}", q.index())?;
    for ((i, j), ok) in PAIRS.iter().zip(report.wf_pairs) {
        writeln!(out, "  (i)   gcd(a{i},a{j}) | d: {}", yes_no(ok))?;
    }
    for (t, ok) in TRIPLES.iter().zip(report.wf_triples) {
        writeln!(
            out,
            "  (ii)  gcd(a{},a{},a{}) = 1: {}",
            t[0],
            t[1],
            t[2],
            yes_no(ok)
        )?;
    }
    writeln!(out, "  (iii) d > a3: {}", yes_no(report.nondegenerate))?;
    for (i, ok) in report.cond_iv.iter().enumerate() {
        writeln!(out, "  (iv)  weight a{i}: {}", yes_no(*ok))?;
    }
    for ((i, j), ok) in &report.cond_v {
        writeln!(out, "  (v)   pair (a{i},a{j}): {}", yes_no(*ok))?;
    }
    for ((i, j), ok) in PAIRS.iter().zip(report.cond_vi) {
        writeln!(out, "  (vi)  pair (a{i},a{j}): {}", yes_no(ok))?;
    }
    let types = detect_types(&q);
    let class = detect_class(&q).map_or_else(|| "none".to_string(), |c| c.to_string());
    writeln!(
        out,
        "conditions={} monomial_form={}",
        if report.accepted() {
            "accepted"
        } else {
            "rejected"
        },
        quasismooth_monomial(&q)
    )?;
    writeln!(
        out,
        "solid={} valid={} class={class} types={types}",
        report.solid(),
        report.valid()
    )?;
    writeln!(out, "table_covered={}", tables::covers(&q)?)?;
    writeln!(out, "obstructions: {}", obstruction_report(&q)?)?;
    if report.accepted() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{q} fails condition(s) {}",
            report.failures().join(",")
        )))
    }
}

fn cmd_expand(out: &mut dyn Write, series: &str, bound: u64) -> Result<(), Failure> {
    let s: Series =
        serde_json::from_str(series).map_err(|e| Failure::Usage(format!("bad series: {e}")))?;
    for q in s.expand(bound) {
        writeln!(out, "{q}")?;
    }
    Ok(())
}

fn cmd_verify(out: &mut dyn Write, index: u64, bound: u64) -> Result<(), Failure> {
    let c = classify_index(checked_index(index)?)?;
    let classified = c.members(bound);
    let oracle: BTreeSet<Quintuple> = brute_force(index, bound).into_iter().collect();
    if classified == oracle {
        writeln!(
            out,
            "OK: index {index}, bound {bound}, {} quintuples",
            oracle.len()
        )?;
        return Ok(());
    }
    writeln!(out, "MISMATCH: index {index}, bound {bound}")?;
    for q in classified.difference(&oracle) {
        writeln!(out, "- classifier only: {q}")?;
    }
    for q in oracle.difference(&classified) {
        writeln!(out, "+ oracle only: {q}")?;
    }
    Err(Failure::Check(format!(
        "classification and oracle differ for index {index}"
    )))
}

fn cmd_obstructions(out: &mut dyn Write, index: u64, bound: u64) -> Result<(), Failure> {
    let c = classify_index(checked_index(index)?)?;
    for q in c.members(bound) {
        writeln!(out, "{q} {}", obstruction_report(&q)?)?;
    }
    Ok(())
}
