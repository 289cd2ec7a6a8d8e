use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use stern_core::poly::{phi_matrix, SymQuotient};
use stern_core::recurrence::{default_terms, mine_all_monomials};
use stern_core::report::{self, params, ReportDocument};
use stern_core::spectra::verify_range;
use stern_core::stern::{power_sum_direct_with_cap, power_sum_sequence, stern_row_with_cap, DEFAULT_ROW_CAP};
use stern_core::Error;

const VERIFY_CAP: u64 = 60;
const VERIFY_EXTENDED_CAP: u64 = 100;
const ROW_CAP_MAX: u32 = 28;

/// Stern array rows, power sums, the transfer matrix and its spectrum.
#[derive(Parser)]
#[command(name = "stern", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long)]
    json: bool,
}

impl Output {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print row n of the Stern array.
    Row {
        n: u32,
        /// Largest row index allowed (memory grows as 2^n).
        #[arg(long, default_value_t = DEFAULT_ROW_CAP)]
        cap: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Print S_1(f), ..., S_nmax(f).
    ///
    /// FORM is a monomial such as x^3, x^2y, x^2*y^3, or coeffs=[c0,...,cr]
    /// where c_a multiplies x^a y^(r-a).
    Sums {
        form: String,
        n_max: u32,
        /// Sum over the rows directly.
        #[arg(long, conflicts_with_all = ["fast", "both"])]
        direct: bool,
        /// Iterate the transfer matrix (default).
        #[arg(long, conflicts_with = "both")]
        fast: bool,
        /// Compute both ways and compare.
        #[arg(long)]
        both: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Print the transfer matrix for degree r.
    Phi {
        r: usize,
        /// The matrix on the quotient by f(x,y) ~ f(y,x).
        #[arg(long)]
        sym: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Check predicted multiplicities and eigenspace dimensions for each r.
    Verify {
        r_min: u64,
        r_max: u64,
        /// Allow r_max up to 100 (slow).
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Mine minimal recurrences for every monomial class of degree r.
    Mine {
        r: u64,
        /// Number of terms to fit (default 2·bound + 8).
        #[arg(long)]
        terms: Option<u32>,
        /// Also show the affine-alternating recurrences.
        #[arg(long)]
        affine: bool,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RowOutOfRange { n, .. } if n > 0 => Failure::Resource(e.to_string()),
            Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Rendered output and whether every check passed.
type Outcome = std::result::Result<(String, bool), Failure>;

fn emit(fmt: Format, doc: ReportDocument, text: String, csv: Option<String>) -> String {
    match fmt {
        Format::Json => doc.render() + "\n",
        Format::Csv => csv.unwrap_or(text),
        Format::Text => text,
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Row { n, cap, out } => {
            if cap > ROW_CAP_MAX {
                return Err(Failure::Resource(format!("--cap may be at most {ROW_CAP_MAX}")));
            }
            let row = stern_row_with_cap(n, cap)?;
            let entries: Vec<String> = row.to_vec().iter().map(ToString::to_string).collect();
            let doc = ReportDocument::new("row", params([("n", json!(n))]), report::row_results(&row));
            let csv = report::csv_column("s", 1, &entries);
            Ok((emit(out.format(), doc, entries.join(" ") + "\n", Some(csv)), true))
        }
        Command::Sums {
            form,
            n_max,
            direct,
            fast: _,
            both,
            out,
        } => {
            if n_max == 0 {
                return Err(Failure::Usage("n_max must be at least 1".into()));
            }
            let f = report::parse_form(&form)?;
            let direct_values = || {
                (1..=n_max)
                    .map(|n| power_sum_direct_with_cap(n, &f, DEFAULT_ROW_CAP))
                    .collect::<stern_core::Result<Vec<_>>>()
            };
            let (values, agree) = if direct {
                (direct_values()?, None)
            } else if both {
                let d = direct_values()?;
                let s = power_sum_sequence(&f, n_max)?;
                let agree = d == s;
                (s, Some(agree))
            } else {
                (power_sum_sequence(&f, n_max)?, None)
            };
            let strs: Vec<String> = values.iter().map(ToString::to_string).collect();
            let mut text = strs.join(" ");
            match agree {
                Some(true) => text.push_str(" (paths agree)"),
                Some(false) => text.push_str(" (paths DISAGREE)"),
                None => {}
            }
            text.push('\n');
            let method = if direct { "direct" } else if both { "both" } else { "fast" };
            let doc = ReportDocument::new(
                "sums",
                params([
                    ("form", json!(f.to_string())),
                    ("n_max", json!(n_max)),
                    ("method", json!(method)),
                ]),
                report::sequence_results(&values, agree),
            );
            let csv = report::csv_column("S", 1, &strs);
            Ok((emit(out.format(), doc, text, Some(csv)), agree != Some(false)))
        }
        Command::Phi { r, sym, out } => {
            if r > VERIFY_EXTENDED_CAP as usize {
                return Err(Failure::Resource(format!("r may be at most {VERIFY_EXTENDED_CAP}")));
            }
            let m = if sym { SymQuotient::new(r).phi_sym } else { phi_matrix(r) };
            let doc = ReportDocument::new(
                "phi",
                params([("r", json!(r)), ("sym", json!(sym))]),
                report::matrix_results(&m),
            );
            Ok((emit(out.format(), doc, format!("{m}\n"), Some(report::matrix_csv(&m))), true))
        }
        Command::Verify {
            r_min,
            r_max,
            extended,
            out,
        } => {
            if r_min < 1 || r_min > r_max {
                return Err(Failure::Usage(format!(
                    "invalid range: need 1 <= r_min <= r_max, got {r_min} {r_max}"
                )));
            }
            let cap = if extended { VERIFY_EXTENDED_CAP } else { VERIFY_CAP };
            if r_max > cap {
                return Err(Failure::Resource(format!(
                    "r_max = {r_max} exceeds the limit {cap}{}",
                    if extended { "" } else { " (use --extended for up to 100)" }
                )));
            }
            let reports = verify_range(r_min, r_max)?;
            let ok = reports.iter().all(|r| r.passed());
            let doc = ReportDocument::new(
                "verify",
                params([("r_min", json!(r_min)), ("r_max", json!(r_max))]),
                report::verify_results(&reports),
            );
            Ok((emit(out.format(), doc, report::verify_text(&reports), None), ok))
        }
        Command::Mine { r, terms, affine, out } => {
            if r > VERIFY_EXTENDED_CAP {
                return Err(Failure::Resource(format!("r may be at most {VERIFY_EXTENDED_CAP}")));
            }
            let n_terms = match terms {
                Some(t) => t,
                None => default_terms(r)?,
            };
            let table = mine_all_monomials(r, n_terms)?;
            let doc = ReportDocument::new(
                "mine",
                params([("r", json!(r)), ("terms", json!(n_terms)), ("affine", json!(affine))]),
                report::mine_results(&table),
            );
            let ok = table.passed();
            Ok((emit(out.format(), doc, report::mine_text(&table, affine), None), ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
