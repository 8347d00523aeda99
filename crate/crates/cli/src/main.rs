use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use blockparity::{
    build_family_dfao, kernel_table, kernel_table_with_prefix_len, seq, FamilyParam,
};
use blockparity_cli::bfile::{self, BfileError, SeqChoice};
use blockparity_cli::suites::{run_verification, SuiteChoice};

#[derive(Parser)]
#[command(
    name = "blockparity",
    version,
    about = "Ones-block parity sequences: generation, automata, kernel tables, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first terms of the block-parity sequence
    Gen {
        /// Block length (at least 1)
        #[arg(long, value_parser = parse_m)]
        m: u32,
        /// How many terms, starting at n = 0
        #[arg(long, value_parser = parse_count)]
        count: u64,
        #[arg(long, value_enum, default_value_t = GenFormat::Text)]
        format: GenFormat,
    },
    /// Build (and optionally minimize) the 2m-state automaton and export it
    Dfa {
        #[arg(long, value_parser = parse_m)]
        m: u32,
        #[arg(long, value_enum, default_value_t = DfaAction::Build)]
        action: DfaAction,
        #[arg(long, value_enum, default_value_t = DfaFormat::Walnut)]
        format: DfaFormat,
    },
    /// Print the table of kernel-class prefixes
    Kernel {
        #[arg(long, value_parser = parse_m)]
        m: u32,
        /// Sample rows from the sequence at this length instead of using
        /// the closed form at the default length 2^(m-1)
        #[arg(long)]
        prefix_len: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Run verification suites over a range of block lengths
    Verify {
        /// Single value "4" or inclusive range "1..6"
        #[arg(long, value_parser = parse_range)]
        m: MRange,
        #[arg(long, value_enum, default_value_t = SuiteChoice::All)]
        suite: SuiteChoice,
        /// Sweep bound for automaton/sequence agreement checks
        #[arg(long, default_value_t = 1 << 16)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Compare a local OEIS b-file against the built-in sequences
    OeisCompare {
        #[arg(long, value_enum)]
        seq: SeqChoice,
        #[arg(long)]
        bfile: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Text,
    Csv,
    Bfile,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DfaAction {
    Build,
    Minimize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DfaFormat {
    Dot,
    Walnut,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy)]
struct MRange {
    lo: u32,
    hi: u32,
}

fn parse_m(s: &str) -> Result<u32, String> {
    let m: u32 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    FamilyParam::new(m).map_err(|e| e.to_string())?;
    Ok(m)
}

fn parse_count(s: &str) -> Result<u64, String> {
    let count: u64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if count == 0 {
        return Err("count must be at least 1".into());
    }
    Ok(count)
}

fn parse_range(s: &str) -> Result<MRange, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let lo = parse_m(lo)?;
    let hi = parse_m(hi)?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(MRange { lo, hi })
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Gen { m, count, format } => {
            let m = FamilyParam::new(m).expect("validated by the parser");
            let terms = seq::s_prefix(m, count as usize);
            match format {
                GenFormat::Text => {
                    let line: Vec<String> = terms.iter().map(u8::to_string).collect();
                    println!("{}", line.join(" "));
                }
                GenFormat::Csv => {
                    println!("n,value");
                    for (n, t) in terms.iter().enumerate() {
                        println!("{n},{t}");
                    }
                }
                GenFormat::Bfile => {
                    for (n, t) in terms.iter().enumerate() {
                        println!("{n} {t}");
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Dfa { m, action, format } => {
            let m = FamilyParam::new(m).expect("validated by the parser");
            let d = build_family_dfao(m);
            let d = match action {
                DfaAction::Build => d,
                DfaAction::Minimize => d.minimize(),
            };
            match format {
                DfaFormat::Dot => print!("{}", d.export_dot()),
                DfaFormat::Walnut => print!("{}", d.export_walnut()),
                DfaFormat::Json => println!("{}", d.export_json()),
            }
            ExitCode::SUCCESS
        }
        Command::Kernel { m, prefix_len, format } => {
            let m = FamilyParam::new(m).expect("validated by the parser");
            let table = match prefix_len {
                None => kernel_table(m),
                Some(len) => kernel_table_with_prefix_len(m, len),
            };
            match table {
                Ok(table) => {
                    match format {
                        TableFormat::Text => print!("{}", table.to_text()),
                        TableFormat::Json => {
                            let rows: Vec<String> =
                                (0..table.rows().len()).map(|i| table.row_string(i)).collect();
                            let value = serde_json::json!({
                                "m": table.m().get(),
                                "prefix_len": table.rows()[0].len(),
                                "rows": rows,
                            });
                            println!("{value}");
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("kernel table: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Verify { m, suite, n_max, format } => {
            let report = run_verification(suite, m.lo, m.hi, n_max);
            match format {
                ReportFormat::Text => print!("{}", report.to_text()),
                ReportFormat::Json => println!("{}", report.to_json()),
            }
            if report.failures() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::OeisCompare { seq, bfile } => match bfile::read_bfile(&bfile) {
            Err(BfileError::Io(e)) => {
                eprintln!("cannot read {}: {e}", bfile.display());
                ExitCode::from(2)
            }
            Err(e @ BfileError::Parse { .. }) => {
                eprintln!("{}: {e}", bfile.display());
                ExitCode::from(1)
            }
            Ok(entries) => match bfile::compare(seq, &entries) {
                Ok(count) => {
                    println!("{count} entries match");
                    ExitCode::SUCCESS
                }
                Err(mismatch) => {
                    println!(
                        "mismatch at index {}: ours {}, b-file {}",
                        mismatch.index, mismatch.ours, mismatch.theirs
                    );
                    ExitCode::from(1)
                }
            },
        },
    }
}
