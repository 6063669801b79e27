use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use partition_bijections::bijections::trace_inverse;
use partition_bijections::diagram::{
    render_shifted, render_sylvester_centered, render_two_modular, render_young,
};
use partition_bijections::enumeration::{counting_table_for, ClassCountRow};
use partition_bijections::verify::{verify, Target};
use partition_bijections::{
    trace, Bijection, Partition, PartitionClass, PartitionStats, Rule, TraceStep,
};
use partition_bijections_cli::{parse, print};
use serde_json::{json, Value};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "pbij",
    version,
    about = "Bijections between odd and distinct partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a bijection (or its inverse) to a partition.
    Map {
        #[arg(long, short)]
        bijection: Bijection,
        #[arg(long)]
        inverse: bool,
        /// Partition in multiset notation, or "-" for stdin.
        #[arg(long, short, allow_hyphen_values = true)]
        input: String,
        /// Print the statistics of input and output.
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the rewrite steps of a bijection, one paired composition per line.
    Trace {
        #[arg(long, short)]
        bijection: Bijection,
        /// Trace the inverse (Bressoud's map only).
        #[arg(long)]
        inverse: bool,
        #[arg(long, short, allow_hyphen_values = true)]
        input: String,
        /// Append the rule and position to each line.
        #[arg(long)]
        rules: bool,
    },
    /// Draw a partition.
    Diagram {
        #[arg(long, short, value_enum)]
        style: Style,
        #[arg(long, short, allow_hyphen_values = true)]
        input: String,
    },
    /// Count partitions by class for n = 0..=max-n.
    Count {
        #[arg(long)]
        max_n: u64,
        /// Comma-separated class tags (O, D, OD, S, SR, Dle2, ODS); default all.
        #[arg(long, value_delimiter = ',')]
        classes: Vec<PartitionClass>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustively check the bijections up to a weight bound.
    Verify {
        #[arg(long, default_value_t = 30)]
        max_n: u64,
        /// Comma-separated targets; default all.
        #[arg(long, value_delimiter = ',')]
        bijection: Vec<Target>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Young,
    #[value(name = "2modular")]
    TwoModular,
    Sylvester,
    Shifted,
    Shifted2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

/// A failure with its exit code.
struct Failure(u8, String);

impl From<partition_bijections::Error> for Failure {
    fn from(e: partition_bijections::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, message)) => {
            let _ = out.flush();
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn read_input(input: &str) -> Result<Partition, Failure> {
    let text = if input == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure(EXIT_USAGE, format!("reading stdin: {e}")))?;
        buf
    } else {
        input.to_string()
    };
    parse(text.trim()).map_err(|e| {
        Failure(
            EXIT_USAGE,
            format!("invalid partition {:?}: {e}", text.trim()),
        )
    })
}

fn io_error(e: io::Error) -> Failure {
    Failure(EXIT_FAILURE, format!("writing output: {e}"))
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Map {
            bijection,
            inverse,
            input,
            stats,
            json,
        } => {
            let lambda = read_input(&input)?;
            let image = if inverse {
                bijection.inverse(&lambda)?
            } else {
                bijection.forward(&lambda)?
            };
            if json {
                let value = json!({
                    "input": lambda.parts(),
                    "output": image.parts(),
                    "stats_in": stats_json(&lambda.stats()),
                    "stats_out": stats_json(&image.stats()),
                });
                writeln!(out, "{value}").map_err(io_error)?;
            } else {
                writeln!(out, "{}", print(&image)).map_err(io_error)?;
                if stats {
                    writeln!(out, "input:  {}", stats_text(&lambda.stats())).map_err(io_error)?;
                    writeln!(out, "output: {}", stats_text(&image.stats())).map_err(io_error)?;
                }
            }
        }
        Command::Trace {
            bijection,
            inverse,
            input,
            rules,
        } => {
            let lambda = read_input(&input)?;
            let steps = if inverse {
                trace_inverse(bijection, &lambda)?
            } else {
                trace(bijection, &lambda)?
            };
            write_trace(out, &steps, rules).map_err(io_error)?;
        }
        Command::Diagram { style, input } => {
            let lambda = read_input(&input)?;
            let diagram = match style {
                Style::Young => render_young(&lambda),
                Style::TwoModular => render_two_modular(&lambda),
                Style::Sylvester => render_sylvester_centered(&lambda)?,
                Style::Shifted => render_shifted(&lambda, false)?,
                Style::Shifted2 => render_shifted(&lambda, true)?,
            };
            write!(out, "{}", diagram.to_text()).map_err(io_error)?;
        }
        Command::Count {
            max_n,
            classes,
            format,
        } => {
            let classes = if classes.is_empty() {
                PartitionClass::ALL.to_vec()
            } else {
                classes
            };
            let table = counting_table_for(max_n, &classes);
            write_table(out, &table, &classes, format)?;
            let violations: Vec<String> =
                table.iter().flat_map(ClassCountRow::violations).collect();
            if !violations.is_empty() {
                return Err(Failure(
                    EXIT_FAILURE,
                    format!("count identities fail: {}", violations.join("; ")),
                ));
            }
        }
        Command::Verify { max_n, bijection } => {
            let targets = if bijection.is_empty() {
                Target::ALL.to_vec()
            } else {
                bijection
            };
            let mut first = None;
            for target in targets {
                let report = verify(target, max_n);
                let status = if report.passed() { "ok" } else { "FAILED" };
                writeln!(out, "{status} {report}").map_err(io_error)?;
                if first.is_none() {
                    first = report
                        .failures
                        .first()
                        .map(|f| format!("{}: {f}", report.label));
                }
            }
            if let Some(counterexample) = first {
                return Err(Failure(
                    EXIT_FAILURE,
                    format!("first counterexample, {counterexample}"),
                ));
            }
        }
    }
    Ok(())
}

fn stats_json(s: &PartitionStats) -> Value {
    json!({
        "length": s.length,
        "odd_parts": s.odd_parts,
        "alternating_sum": s.alt_sum,
        "odd_multiplicity_values": s.odd_mult_parts,
        "odd_runs": s.odd_runs,
    })
}

fn stats_text(s: &PartitionStats) -> String {
    format!(
        "length={} odd_parts={} alternating_sum={} odd_multiplicity_values={} odd_runs={}",
        s.length, s.odd_parts, s.alt_sum, s.odd_mult_parts, s.odd_runs
    )
}

/// One line per step; a blank line separates stanzas, each of which starts
/// where a new pair or a new block of parts enters.
fn write_trace(out: &mut impl Write, steps: &[TraceStep], rules: bool) -> io::Result<()> {
    for (i, step) in steps.iter().enumerate() {
        let starts_stanza = matches!(step.rule, Rule::Prepend | Rule::Double | Rule::AddTwoPrefix);
        if i > 0 && starts_stanza {
            writeln!(out)?;
        }
        if rules {
            writeln!(out, "{}    [{} @{}]", step.after, step.rule, step.position)?;
        } else {
            writeln!(out, "{}", step.after)?;
        }
    }
    Ok(())
}

fn write_table(
    out: &mut impl Write,
    table: &[ClassCountRow],
    classes: &[PartitionClass],
    format: Format,
) -> Result<(), Failure> {
    let header: Vec<String> = std::iter::once("n".to_string())
        .chain(classes.iter().map(|c| c.tag().to_string()))
        .collect();
    let record = |row: &ClassCountRow| -> Vec<String> {
        std::iter::once(row.n.to_string())
            .chain(
                classes
                    .iter()
                    .map(|&c| row.count(c).unwrap_or(0).to_string()),
            )
            .collect()
    };
    match format {
        Format::Text => {
            let rows: Vec<Vec<String>> = table.iter().map(record).collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|i| {
                    rows.iter()
                        .map(|r| r[i].len())
                        .chain([header[i].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for line in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> = line
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                writeln!(out, "{}", cells.join(" ")).map_err(io_error)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let csv_error = |e: csv::Error| Failure(EXIT_FAILURE, format!("writing csv: {e}"));
            w.write_record(&header).map_err(csv_error)?;
            for row in table {
                w.write_record(record(row)).map_err(csv_error)?;
            }
            w.flush().map_err(io_error)?;
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("n".into(), json!(row.n));
                    for &c in classes {
                        obj.insert(c.tag().into(), json!(row.count(c).unwrap_or(0)));
                    }
                    Value::Object(obj)
                })
                .collect();
            writeln!(out, "{}", Value::Array(rows)).map_err(io_error)?;
        }
    }
    Ok(())
}
