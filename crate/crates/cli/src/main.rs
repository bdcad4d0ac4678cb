use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use veer_core::intersect::intersection_table;
use veer_core::reconstruct::general_veering;
use veer_core::report::{batch_lines, classify_batch, BatchSummary};
use veer_core::{
    burau_reduced, burau_unreduced, classify_text, BraidWord, ClassificationReport, ClassifyOptions, Error,
    MethodChoice,
};

const WORD_HELP: &str = "Braid word: letters 1, -1, 2, -2, s1, s2^3, Delta, Delta2^-1, \
separated by spaces, '.' or ','. Words starting with '-' must follow '--', as in `veer classify -- '-1 -2'`.";

#[derive(Parser, Debug)]
#[command(name = "veer", version, about = "Burau matrices, Nielsen-Thurston type and veering of 3-strand braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Engine selection for `classify` and `batch`.
    #[arg(long, value_enum, default_value_t = MethodArg::Auto, global = true)]
    method: MethodArg,
    /// Include matrices and the intersection table (or Q/R/S for `intersect`).
    #[arg(long, global = true)]
    verbose: bool,
    /// Include the per-generator sidedness comparisons.
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    ReducedOnly,
    General,
    Both,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::ReducedOnly => MethodChoice::ReducedOnly,
            MethodArg::General => MethodChoice::General,
            MethodArg::Both => MethodChoice::Both,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Thurston type and veering verdict of a word.
    Classify {
        #[arg(help = WORD_HELP)]
        word: String,
    },
    /// Burau matrix of a word.
    Burau {
        #[arg(help = WORD_HELP)]
        word: String,
        /// The 2x2 reduced representation.
        #[arg(long)]
        reduced: bool,
    },
    /// Geometric intersection numbers of the generator images with the arcs.
    Intersect {
        #[arg(help = WORD_HELP)]
        word: String,
    },
    /// Minimal-twist representatives and twist counts of the generator images.
    Reconstruct {
        #[arg(help = WORD_HELP)]
        word: String,
    },
    /// Classify one word per line. Blank lines and lines starting with '#' are skipped.
    Batch {
        /// Input file, or '-' for stdin.
        input: PathBuf,
        /// Output file for the JSON lines; stdout if omitted.
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Engine(Error),
    Io(String),
    /// Some batch lines failed; they are already reported.
    Batch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("report types serialize")
}

fn options(g: &Global) -> ClassifyOptions {
    ClassifyOptions { method: g.method.into(), verbose: g.verbose, oracle: g.oracle }
}

fn parse(word: &str) -> Result<BraidWord, Failure> {
    BraidWord::parse(word).map_err(|e| Failure::Engine(e.into()))
}

fn render_report(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let word = if r.word.is_empty() { "(identity)" } else { r.word.as_str() };
    let _ = writeln!(s, "word:         {word}");
    let _ = writeln!(s, "exponent sum: {}", r.exponent_sum);
    let _ = writeln!(s, "trace:        {}", r.trace);
    let _ = writeln!(s, "type:         {}", r.thurston_type);
    let _ = writeln!(s, "verdict:      {}", r.verdict);
    let _ = writeln!(s, "method:       {}", r.method);
    let inv = &r.invariants;
    if let Some(k) = inv.k {
        let _ = writeln!(s, "k:            {k}");
    }
    if let Some(m) = inv.m {
        let _ = writeln!(s, "m:            {m}");
    }
    if let Some(l) = inv.lambda {
        let _ = writeln!(s, "lambda:       {l}");
    }
    if let Some([k1, k2, k3]) = inv.k_i {
        let _ = writeln!(s, "k_i:          {k1} {k2} {k3}");
    }
    if let Some(t) = &inv.translation_number {
        let _ = writeln!(s, "twist coeff:  {t}");
    }
    for n in &r.notes {
        let _ = writeln!(s, "note:         {n}");
    }
    if let Some(m) = &r.unreduced {
        let _ = writeln!(s, "burau:\n{m}");
    }
    if let Some(m) = &r.reduced {
        let _ = writeln!(s, "reduced burau:\n{m}");
    }
    if let Some(rows) = &r.intersection {
        let _ = writeln!(s, "intersection:");
        for (i, row) in rows.iter().enumerate() {
            let _ = writeln!(s, "  y{}: {}", i + 1, row.join(" "));
        }
    }
    if let Some(entries) = &r.oracle {
        let _ = writeln!(s, "generators:");
        for e in entries {
            let y = e.y_prime.as_deref().unwrap_or("-");
            let _ = writeln!(s, "  {}: {} (k = {}, y' = {y})", e.generator, e.side, e.k);
        }
    }
    s
}

fn classify(word: &str, g: &Global) -> Result<String, Failure> {
    let r = classify_text(word, &options(g))?;
    Ok(match g.format {
        Format::Json => to_json(&r),
        Format::Text => render_report(&r),
    })
}

fn burau(word: &str, reduced: bool, g: &Global) -> Result<String, Failure> {
    let w = parse(word)?;
    let m = if reduced { burau_reduced(&w) } else { burau_unreduced(&w) };
    Ok(match g.format {
        Format::Json => to_json(&m),
        Format::Text => format!("{m}\n"),
    })
}

fn intersect(word: &str, g: &Global) -> Result<String, Failure> {
    let w = parse(word)?;
    let table = intersection_table(&w)?;
    if g.format == Format::Json {
        return Ok(if g.verbose {
            to_json(&table)
        } else {
            let nums: Vec<Vec<String>> =
                table.numbers().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            to_json(&nums)
        });
    }
    let mut s = String::new();
    for (i, row) in table.rows.iter().enumerate() {
        let _ = write!(s, "y{}: {} {} {}", i + 1, row.a, row.b, row.c);
        if g.verbose {
            let _ = write!(s, "  Q = {}  R = {}  S = {}", row.q, row.r, row.s);
        }
        s.push('\n');
    }
    Ok(s)
}

fn reconstruct(word: &str, g: &Global) -> Result<String, Failure> {
    let w = parse(word)?;
    let v = general_veering(&w)?;
    if g.format == Format::Json {
        return Ok(to_json(&v));
    }
    let mut s = String::new();
    for r in &v.generators {
        let y = r.y_prime.as_ref().map_or_else(|| "-".to_string(), |u| u.to_string());
        let _ = writeln!(s, "{}: y' = {y}, k = {}, image is {}", r.generator, r.k, r.side);
    }
    let _ = writeln!(s, "twist coeff: {}", v.translation_number);
    let _ = writeln!(s, "verdict: {}", v.verdict);
    if v.corrected {
        let _ = writeln!(s, "note: generator test gave {}, overridden by the twist coefficient", v.generator_verdict);
    }
    Ok(s)
}

fn batch(input: &PathBuf, output: Option<&PathBuf>, g: &Global) -> Result<String, Failure> {
    let text = if input.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(input).map_err(|e| Failure::Io(format!("{}: {e}", input.display())))?
    };
    let lines = batch_lines(&text);
    let inputs: Vec<&str> = lines.iter().map(|l| l.1).collect();
    let results = classify_batch(&inputs, &options(g));

    let mut out = String::new();
    for ((line, input), result) in lines.iter().zip(&results) {
        let record = match result {
            Ok(r) => {
                let mut record = serde_json::Map::new();
                record.insert("line".into(), json!(line));
                match serde_json::to_value(r).expect("report types serialize") {
                    Value::Object(fields) => record.extend(fields),
                    _ => unreachable!("report is a struct"),
                }
                Value::Object(record)
            }
            Err(e) => json!({ "line": line, "input": input, "error": e.to_string() }),
        };
        out.push_str(&Value::to_string(&record));
        out.push('\n');
    }
    match output {
        Some(p) => fs::write(p, &out).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
        None => io::stdout().write_all(out.as_bytes())?,
    }

    let summary = BatchSummary::tally(&results);
    let line = match g.format {
        Format::Json => serde_json::to_string(&summary).expect("summary serializes"),
        Format::Text => format!(
            "total {} right {} left {} both {} neither {} errors {}",
            summary.total, summary.right, summary.left, summary.both, summary.neither, summary.errors
        ),
    };
    eprintln!("{line}");
    if summary.errors > 0 {
        Err(Failure::Batch)
    } else {
        Ok(String::new())
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Classify { word } => classify(word, g),
        Command::Burau { word, reduced } => burau(word, *reduced, g),
        Command::Intersect { word } => intersect(word, g),
        Command::Reconstruct { word } => reconstruct(word, g),
        Command::Batch { input, output } => batch(input, output.as_ref(), g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(s) => {
            print!("{s}");
            if cli.global.format == Format::Json && !s.is_empty() && !s.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Batch) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Engine(e)) => {
            if e.is_input_error() {
                eprintln!("error: {e}");
                ExitCode::from(1)
            } else {
                eprintln!("internal error: {e}");
                ExitCode::from(2)
            }
        }
    }
}
