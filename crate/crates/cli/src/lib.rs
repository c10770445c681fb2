//! `dyckposet` command-line driver.
//!
//! [`run`] takes an argv and returns the exit code with the stdout payload,
//! so the binary and the tests share one code path.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dyck_poset::bijection::{
    dyck_to_motzkin, motzkin_to_dyck, square_to_triple, triple_to_square, MotzkinWord, Triple,
};
use dyck_poset::conjecture::{self, ScanReport};
use dyck_poset::export::{to_dot, to_json};
use dyck_poset::formulas as f;
use dyck_poset::verify::{self, SuiteReport, SUITES};
use dyck_poset::word::{WordRecord, DEFAULT_GENERATION_CEILING};
use dyck_poset::{contains, DyckWord, Error, Interval, Limits};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_LIMIT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    /// Text for stdout (success) or stderr (failure).
    pub payload: String,
}

impl CommandResult {
    fn ok(payload: String) -> Self {
        CommandResult {
            exit_code: EXIT_OK,
            payload,
        }
    }

    fn fail(exit_code: i32, message: impl Into<String>) -> Self {
        CommandResult {
            exit_code,
            payload: message.into(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "dyckposet",
    version,
    about = "Intervals of the Dyck pattern poset"
)]
struct Cli {
    /// Generation ceiling (largest semilength materialized).
    #[arg(long, global = true, default_value_t = DEFAULT_GENERATION_CEILING)]
    limit: usize,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Is PATTERN a subsequence of WORD?
    Contains { pattern: String, word: String },
    /// Semilength, peaks, ascents, height and factors of a word.
    Stats { word: String },
    /// Materialize [BOTTOM, TOP].
    Interval {
        bottom: String,
        top: String,
        #[command(flatten)]
        view: IntervalView,
    },
    /// μ(BOTTOM, TOP).
    Mobius { bottom: String, top: String },
    /// Evaluate a closed formula; `formula list` names them.
    Formula { name: String, args: Vec<String> },
    /// Recompute closed forms against brute force (`all` or a suite name).
    Verify { suite: String },
    /// Exhaustive scan over small comparable pairs.
    Conjecture {
        #[arg(value_enum)]
        id: ScanId,
        #[arg(long)]
        max: Option<usize>,
    },
    #[command(subcommand)]
    Bijection(BijectionCommand),
    #[command(subcommand)]
    Export(ExportCommand),
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct IntervalView {
    #[arg(long)]
    ranks: bool,
    #[arg(long)]
    elements: bool,
    #[arg(long)]
    edges: bool,
    #[arg(long)]
    dot: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScanId {
    Alternating,
    Rank2max,
    Rank3max,
    Covercount,
}

#[derive(Debug, Subcommand)]
enum BijectionCommand {
    /// Dyck word (U/D) to peak-less Motzkin word, or Motzkin word (with L) to Dyck word.
    Motzkin { word: String },
    /// Triple (i,j;k) to grid square and two-peak path.
    Square {
        i: usize,
        j: usize,
        k: usize,
        #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
        grid: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum ExportCommand {
    /// Hasse diagram of [BOTTOM, TOP] as a DOT file.
    Dot {
        bottom: String,
        top: String,
        file: PathBuf,
    },
    /// Interval document as JSON.
    Json {
        bottom: String,
        top: String,
        file: PathBuf,
    },
}

enum Failure {
    Domain(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Domain(msg.into())
}

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_DOMAIN } else { EXIT_OK };
            return CommandResult::fail(code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(payload) => CommandResult::ok(payload),
        Err(Failure::Domain(msg)) => CommandResult::fail(EXIT_DOMAIN, format!("error: {msg}\n")),
        Err(Failure::Limit(msg)) => CommandResult::fail(EXIT_LIMIT, format!("error: {msg}\n")),
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let limits = Limits::new(cli.limit);
    let json = cli.json;
    match &cli.command {
        Command::Contains { pattern, word } => {
            let p = word_arg("pattern", pattern)?;
            let w = word_arg("word", word)?;
            let c = contains(&p, &w);
            if json {
                Ok(doc(json!({
                    "schema": "dyck-poset/contains/v1",
                    "pattern": p,
                    "word": w,
                    "contains": c,
                })))
            } else {
                Ok(format!("{c}\n"))
            }
        }
        Command::Stats { word } => stats(word_arg("word", word)?, json),
        Command::Interval { bottom, top, view } => {
            let iv = interval(bottom, top, &limits)?;
            interval_view(&iv, view, json)
        }
        Command::Mobius { bottom, top } => {
            let iv = interval(bottom, top, &limits)?;
            let mu = iv.mobius()?;
            if json {
                Ok(doc(json!({
                    "schema": "dyck-poset/mobius/v1",
                    "bottom": iv.bottom(),
                    "top": iv.top(),
                    "mobius": mu,
                })))
            } else {
                Ok(format!("{mu}\n"))
            }
        }
        Command::Formula { name, args } => formula(name, args, json),
        Command::Verify { suite } => run_verify(suite, json),
        Command::Conjecture { id, max } => run_conjecture(*id, *max, &limits, json),
        Command::Bijection(BijectionCommand::Motzkin { word }) => motzkin(word, json),
        Command::Bijection(BijectionCommand::Square { i, j, k, grid }) => {
            square(*i, *j, *k, grid[0], grid[1], json)
        }
        Command::Export(ExportCommand::Dot { bottom, top, file }) => {
            let iv = interval(bottom, top, &limits)?;
            write_file(file, &to_dot(&iv))?;
            Ok(format!(
                "wrote {} ({} elements, {} edges)\n",
                file.display(),
                iv.s0(),
                iv.edges().len()
            ))
        }
        Command::Export(ExportCommand::Json { bottom, top, file }) => {
            let iv = interval(bottom, top, &limits)?;
            let mut text = to_json(&iv)?;
            text.push('\n');
            write_file(file, &text)?;
            Ok(format!("wrote {} ({} elements)\n", file.display(), iv.s0()))
        }
    }
}

fn doc(value: Value) -> String {
    let mut out = serde_json::to_string_pretty(&value).expect("json values serialize");
    out.push('\n');
    out
}

fn word_arg(name: &str, text: &str) -> std::result::Result<DyckWord, Failure> {
    DyckWord::parse(text).map_err(|e| {
        if e.is_limit() {
            Failure::Limit(format!("<{name}> {text:?}: {e}"))
        } else {
            usage(format!("<{name}> {text:?}: {e}"))
        }
    })
}

fn int_arg(name: &str, text: &str) -> std::result::Result<u64, Failure> {
    text.parse()
        .map_err(|_| usage(format!("<{name}> {text:?}: expected a nonnegative integer")))
}

fn interval(bottom: &str, top: &str, limits: &Limits) -> std::result::Result<Interval, Failure> {
    let b = word_arg("bottom", bottom)?;
    let t = word_arg("top", top)?;
    Ok(Interval::build(b, t, limits)?)
}

fn write_file(path: &PathBuf, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("<file> {}: {e}", path.display())))
}

fn stats(w: DyckWord, json: bool) -> Outcome {
    let s = w.statistics();
    let factors = w.factors();
    let runs = w.runs();
    if json {
        let record = WordRecord::from(w);
        return Ok(doc(json!({
            "schema": "dyck-poset/word/v1",
            "word": record.word,
            "semilength": record.semilength,
            "peaks": s.peaks,
            "ascents": s.ascents,
            "height": s.height,
            "factors": factors,
            "runs": runs.runs(),
        })));
    }
    let factors: Vec<String> = factors.iter().map(usize::to_string).collect();
    let runs: Vec<String> = runs
        .runs()
        .iter()
        .map(|(u, d)| format!("{u},{d}"))
        .collect();
    Ok(format!(
        "word {w}\nsemilength {}\npeaks {}\nascents {}\nheight {}\nfactors {}\nruns {}\n",
        s.semilength,
        s.peaks,
        s.ascents,
        s.height,
        factors.join(" "),
        runs.join(" ")
    ))
}

fn interval_view(iv: &Interval, view: &IntervalView, json: bool) -> Outcome {
    if json {
        let mut text = to_json(iv)?;
        text.push('\n');
        return Ok(text);
    }
    let mut out = String::new();
    if view.dot {
        return Ok(to_dot(iv));
    }
    if view.ranks {
        for (r, n) in iv.rank_sizes() {
            let _ = writeln!(out, "{r} {n}");
        }
    } else if view.elements {
        for x in iv.elements() {
            let _ = writeln!(out, "{} {x}", x.semilength());
        }
    } else if view.edges {
        for (lower, upper) in iv.edges() {
            let _ = writeln!(out, "{lower} {upper}");
        }
    } else {
        let profile: Vec<String> = iv.rank_sizes().iter().map(|(_, n)| n.to_string()).collect();
        let _ = writeln!(out, "interval [{}, {}]", iv.bottom(), iv.top());
        let _ = writeln!(out, "elements {}", iv.s0());
        let _ = writeln!(
            out,
            "ranks {}..{}: {}",
            iv.min_rank(),
            iv.max_rank(),
            profile.join(" ")
        );
        let _ = writeln!(out, "edges {}", iv.edges().len());
        let _ = writeln!(out, "mobius {}", iv.mobius()?);
    }
    Ok(out)
}

const FORMULAS: &[(&str, &str)] = &[
    ("narayana", "n k"),
    ("staircase_rank_count", "n k"),
    ("staircase_size", "n"),
    ("staircase_interval_size", "n"),
    ("embeddable", "word n"),
    ("phi0", "a b"),
    ("phih", "a b h"),
    ("two_peak_size", "a b h"),
    ("two_peak_rank_count", "a b h r"),
    ("two_peak_rank_count_h0", "a b r"),
    ("delta_class", "i j k"),
    ("delta_histogram", "a b"),
    ("s1_two_peak_h0", "a b"),
    ("mobius_pyramid", "n"),
    ("mobius_two_peak", "a b h"),
    ("mobius_staircase_rank2", "n"),
    ("mobius_elevated_staircase_rank2", "n"),
    ("cover_count", "word"),
];

fn formula(name: &str, args: &[String], json: bool) -> Outcome {
    if name == "list" {
        let mut out = String::new();
        for (n, a) in FORMULAS {
            let _ = writeln!(out, "{n} {a}");
        }
        return Ok(out);
    }
    let Some((_, signature)) = FORMULAS.iter().find(|(n, _)| *n == name) else {
        return Err(usage(format!(
            "<name> {name:?}: unknown formula (try `formula list`)"
        )));
    };
    let params: Vec<&str> = signature.split(' ').collect();
    if args.len() != params.len() {
        return Err(usage(format!(
            "{name} expects {} argument(s) <{}>, got {}",
            params.len(),
            params.join("> <"),
            args.len()
        )));
    }
    let nums = |count: usize| -> std::result::Result<Vec<u64>, Failure> {
        params[..count]
            .iter()
            .zip(args)
            .map(|(p, a)| int_arg(p, a))
            .collect()
    };
    let mut notes = Vec::new();
    let value: Value = match name {
        "narayana" => {
            let v = nums(2)?;
            json!(f::narayana(v[0], v[1])?)
        }
        "staircase_rank_count" => {
            let v = nums(2)?;
            json!(f::staircase_rank_count(v[0], v[1])?)
        }
        "staircase_size" | "staircase_interval_size" => {
            json!(f::staircase_interval_size(nums(1)?[0])?)
        }
        "embeddable" => {
            let w = word_arg("word", &args[0])?;
            let n = int_arg("n", &args[1])?;
            json!(f::embeddable_in_staircase(&w.runs(), n))
        }
        "phi0" => {
            let v = nums(2)?;
            json!(f::phi0(v[0], v[1])?)
        }
        "phih" => {
            let v = nums(3)?;
            json!(f::phih(v[0], v[1], v[2])?)
        }
        "two_peak_size" => {
            let v = nums(3)?;
            json!(f::two_peak_interval_size(v[0], v[1], v[2])?)
        }
        "two_peak_rank_count" => {
            let v = nums(4)?;
            json!(f::two_peak_rank_count(v[0], v[1], v[2], v[3])?)
        }
        "two_peak_rank_count_h0" => {
            let v = nums(3)?;
            json!(f::two_peak_rank_count_h0(v[0], v[1], v[2])?)
        }
        "delta_class" => {
            let v = nums(3)?;
            json!(f::delta_class(v[0], v[1], v[2])?)
        }
        "delta_histogram" => {
            let v = nums(2)?;
            let counts = f::delta_histogram_closed(v[0], v[1])?.as_map();
            let map: serde_json::Map<String, Value> = counts
                .into_iter()
                .map(|(t, n)| (t.to_string(), json!(n)))
                .collect();
            Value::Object(map)
        }
        "s1_two_peak_h0" => {
            let v = nums(2)?;
            json!(f::s1_two_peak_h0(v[0], v[1])?)
        }
        "mobius_pyramid" => json!(f::mobius_pyramid(nums(1)?[0])?),
        "mobius_two_peak" => {
            let v = nums(3)?;
            let (mu, swapped) = f::mobius_two_peak_normalized(v[0], v[1], v[2])?;
            if swapped {
                notes.push(format!(
                    "a > b: evaluated as ({}, {}, {}) by path reversal",
                    v[1], v[0], v[2]
                ));
            }
            json!(mu)
        }
        "mobius_staircase_rank2" => json!(f::mobius_staircase_rank2(nums(1)?[0])?),
        "mobius_elevated_staircase_rank2" => {
            json!(f::mobius_elevated_staircase_rank2(nums(1)?[0])?)
        }
        "cover_count" => json!(f::cover_count_formula(&word_arg("word", &args[0])?)?),
        _ => unreachable!("every listed formula is dispatched"),
    };
    if json {
        let mut record = json!({
            "schema": "dyck-poset/formula/v1",
            "formula": name,
            "args": args,
            "value": value,
        });
        if !notes.is_empty() {
            record["notes"] = json!(notes);
        }
        return Ok(doc(record));
    }
    let mut out = match &value {
        Value::Object(map) => map
            .iter()
            .map(|(t, n)| format!("{t} {n}\n"))
            .collect::<String>(),
        other => format!("{other}\n"),
    };
    for note in notes {
        let _ = writeln!(out, "note: {note}");
    }
    Ok(out)
}

fn run_verify(suite: &str, json: bool) -> Outcome {
    let reports: Vec<SuiteReport> = if suite == "all" {
        verify::run_all()?
    } else {
        match verify::run_suite(suite) {
            Some(report) => vec![report?],
            None => {
                return Err(usage(format!(
                    "<suite> {suite:?}: expected all or one of {}",
                    SUITES.join(", ")
                )))
            }
        }
    };
    let passed = reports.iter().all(SuiteReport::passed);
    let out = if json {
        doc(json!({
            "schema": "dyck-poset/verify/v1",
            "passed": passed,
            "suites": reports,
        }))
    } else {
        let mut out = String::new();
        for r in &reports {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {} ({} checks)", r.suite, r.checks);
            for m in &r.mismatches {
                let _ = writeln!(out, "  mismatch: {m}");
            }
        }
        out
    };
    if passed {
        Ok(out)
    } else {
        Err(Failure::Domain(format!("verification failed\n{out}")))
    }
}

fn run_conjecture(id: ScanId, max: Option<usize>, limits: &Limits, json: bool) -> Outcome {
    let reports: Vec<ScanReport> = match id {
        ScanId::Alternating => vec![conjecture::scan_alternating(
            max.unwrap_or(conjecture::DEFAULT_ALTERNATING_MAX),
            limits,
        )?],
        ScanId::Covercount => vec![conjecture::sweep_cover_count(
            max.unwrap_or(conjecture::DEFAULT_COVER_COUNT_MAX),
            limits,
        )?],
        ScanId::Rank2max => (1..=max.unwrap_or(conjecture::DEFAULT_RANK2_MAX))
            .map(|n| conjecture::scan_rank2_max(n, limits))
            .collect::<dyck_poset::Result<_>>()?,
        ScanId::Rank3max => (1..=max.unwrap_or(conjecture::DEFAULT_RANK3_MAX))
            .map(|n| conjecture::scan_rank3_max(n, limits))
            .collect::<dyck_poset::Result<_>>()?,
    };
    if json {
        return Ok(match reports.as_slice() {
            [single] => doc(json!(single)),
            many => doc(json!({
                "schema": "dyck-poset/scan-batch/v1",
                "reports": many,
            })),
        });
    }
    let mut out = String::new();
    for r in &reports {
        let _ = writeln!(
            out,
            "{} {}={}: {} ({} checked)",
            r.scan,
            r.scope.parameter,
            r.scope.value,
            verdict_text(r),
            r.pairs_checked
        );
        if let (Some(observed), Some(expected)) = (r.observed, r.expected) {
            let _ = writeln!(out, "  observed {observed}, expected {expected}");
        }
        for w in &r.anchors {
            let _ = writeln!(out, "  anchor {}", witness_text(w));
        }
        for w in &r.witnesses {
            let _ = writeln!(out, "  witness {}", witness_text(w));
        }
    }
    Ok(out)
}

fn verdict_text(r: &ScanReport) -> &'static str {
    match r.verdict {
        conjecture::Verdict::Consistent => "consistent",
        conjecture::Verdict::Violated => "violated",
    }
}

fn witness_text(w: &conjecture::Witness) -> String {
    let mut s = match w.top {
        Some(top) => format!("[{}, {top}] {}", w.bottom, w.value),
        None => format!("{} {}", w.bottom, w.value),
    };
    if let Some(e) = w.expected {
        let _ = write!(s, " (expected {e})");
    }
    s
}

fn motzkin(text: &str, json: bool) -> Outcome {
    let (dyck, m) = if text.trim().contains(['L', 'l']) {
        let m = MotzkinWord::parse(text).map_err(|e| usage(format!("<word> {text:?}: {e}")))?;
        (motzkin_to_dyck(&m)?, m)
    } else {
        let d = word_arg("word", text)?;
        (d, dyck_to_motzkin(&d))
    };
    if json {
        return Ok(doc(json!({
            "schema": "dyck-poset/bijection/motzkin/v1",
            "dyck": WordRecord::from(dyck),
            "motzkin": m,
            "peakless": m.is_peakless(),
        })));
    }
    Ok(format!(
        "dyck {dyck}\nmotzkin {}\npeakless {}\n",
        if m.is_empty() {
            "(empty)".to_string()
        } else {
            m.to_string()
        },
        m.is_peakless()
    ))
}

fn square(i: usize, j: usize, k: usize, a: usize, b: usize, json: bool) -> Outcome {
    let t = Triple::new(i, j, k)?;
    let sq = triple_to_square(t, a, b)?;
    debug_assert_eq!(square_to_triple(sq, a, b).ok(), Some(t));
    let path = t.to_path()?;
    if json {
        return Ok(doc(json!({
            "schema": "dyck-poset/bijection/square/v1",
            "grid": { "rows": a, "cols": b },
            "triple": t,
            "path": WordRecord::from(path),
            "square": sq,
        })));
    }
    Ok(format!(
        "triple {t}\npath {path}\nsquare row {} col {} side {}\n",
        sq.row, sq.col, sq.side
    ))
}
