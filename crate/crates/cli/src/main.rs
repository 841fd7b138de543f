mod commands;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};
use serde_json::{json, Map, Value};

use commands::{find, CliError};
use elliptic_higgs::sweep::{sweep, SweepConfig, SweepRow, SWEEP_HEADER};

/// Exact computations for Higgs bundles on non-Kähler elliptic surfaces.
///
/// Every command reads one JSON document (stdin or `--in`) and writes one
/// JSON document; `sweep` writes CSV.
#[derive(Parser)]
#[command(name = "ehiggs", version)]
struct Cli {
    /// Read input from a file instead of stdin.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Print the input and output JSON schemas of a command, e.g. "higgs smooth".
    #[arg(long, value_name = "COMMAND", exclusive = true)]
    schema: Option<String>,
    #[command(subcommand)]
    group: Option<Group>,
}

#[derive(Subcommand)]
enum Group {
    /// Surfaces and line bundles.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Discriminant ranges, h⁰ on curves, twist gates.
    #[command(subcommand)]
    Range(RangeCmd),
    /// Co-Higgs bundles on Hopf surfaces.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Jumps and elementary modifications.
    #[command(subcommand)]
    Jumps(JumpsCmd),
    /// Higgs fields for base genus at least 2.
    #[command(subcommand)]
    Higgs(HiggsCmd),
    /// Evaluate a parameter grid and emit CSV.
    Sweep,
}

#[derive(Subcommand)]
enum SurfaceCmd {
    Validate,
    Degree,
    Canon,
}

#[derive(Subcommand)]
enum RangeCmd {
    Classify,
    H0,
    Gate,
}

#[derive(Subcommand)]
enum HopfCmd {
    NfEven,
    NfOdd,
    Integrable,
    Moduli,
    H0,
    Classify,
    Example,
}

#[derive(Subcommand)]
enum JumpsCmd {
    Stats,
    Modify,
    Reduce,
    Pushforward,
}

#[derive(Subcommand)]
enum HiggsCmd {
    Filtrable,
    Nonfiltrable,
    Class,
    Genus2,
    Smooth,
}

/// Rebuilds every object with its keys in sorted order.
fn sorted(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in entries {
                out.insert(k, sorted(v));
            }
            Value::Object(out)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(sorted).collect()),
        other => other,
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    let io_err = |e: io::Error| CliError::Domain {
        error: "Io".into(),
        detail: e.to_string(),
    };
    match path {
        Some(p) => fs::read_to_string(p).map_err(io_err),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(io_err)?;
            Ok(s)
        }
    }
}

fn write_output(path: &Option<PathBuf>, bytes: &[u8]) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, bytes),
        None => io::stdout().write_all(bytes),
    }
}

fn json_line(v: Value) -> Vec<u8> {
    let mut s = serde_json::to_string(&sorted(v)).expect("json serializes");
    s.push('\n');
    s.into_bytes()
}

fn schema_for(name: &str) -> Option<Value> {
    let name = name.trim().replace('.', " ");
    let name = match name.split_once(' ') {
        Some(_) => name,
        None => match name.split_once('-') {
            Some((g, c)) => format!("{g} {c}"),
            None => name,
        },
    };
    if name == "sweep" {
        return Some(json!({
            "input": schemars::schema_for!(SweepConfig),
            "output": schemars::schema_for!(Vec<SweepRow>),
        }));
    }
    find(&name).map(|c| (c.schema)())
}

fn run_sweep(text: &str) -> Result<Vec<u8>, CliError> {
    let cfg: SweepConfig =
        serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
    if cfg.grid().is_empty() {
        return Err(CliError::Schema("empty grid".into()));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Domain {
        error: "Csv".into(),
        detail: e.to_string(),
    };
    w.write_record(SWEEP_HEADER).map_err(csv_err)?;
    for row in sweep(&cfg) {
        w.write_record(row.record()).map_err(csv_err)?;
    }
    w.into_inner().map_err(|e| CliError::Domain {
        error: "Csv".into(),
        detail: e.to_string(),
    })
}

fn fail(code: u8, error: &str, detail: &str) -> ExitCode {
    let msg = json_line(json!({ "error": error, "detail": detail }));
    let _ = io::stderr().write_all(&msg);
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };

    if let Some(name) = &cli.schema {
        return match schema_for(name) {
            Some(s) => match write_output(&cli.out, &json_line(s)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(3, "Io", &e.to_string()),
            },
            None => fail(2, "UnknownCommand", name),
        };
    }

    let Some((group, sub)) = matches.subcommand() else {
        let _ = Cli::command().print_help();
        return ExitCode::from(2);
    };
    let name = match sub.subcommand_name() {
        Some(s) => format!("{group} {s}"),
        None => group.to_string(),
    };

    let result = read_input(&cli.input).and_then(|text| {
        if name == "sweep" {
            run_sweep(&text)
        } else {
            let cmd = find(&name).expect("every subcommand is registered");
            (cmd.run)(&text).map(json_line)
        }
    });
    match result {
        Ok(bytes) => match write_output(&cli.out, &bytes) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(3, "Io", &e.to_string()),
        },
        Err(CliError::Schema(detail)) => fail(2, "SchemaViolation", &detail),
        Err(CliError::Domain { error, detail }) => fail(3, &error, &detail),
    }
}
