mod report;

use std::collections::HashSet;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use twoknot::coset::DEFAULT_MAX_COSETS;
use twoknot::error::{AlgebraError, CosetError, FoxError, ModelError};
use twoknot::fox::solve_orientation_weights;
use twoknot::twoknot::{apply_moves, gluck_moves, gluck_quotient, DeltaClass, RibbonTwoKnot};
use twoknot::{
    alexander_polynomial, certify_trivial, enumerate, family_record, Error, FamilyRecord, GluckVariant,
    LaurentPolynomial, Presentation, Triviality, Word,
};

use report::{Format, SEED, TOOL_VERSION};

#[derive(Parser)]
#[command(name = "twoknot", version, about = "Invariants of ribbon 2-knots and their Gluck twists")]
struct Cli {
    /// Emit JSON (one object per line for grid sweeps).
    #[arg(long, global = true, conflicts_with = "tsv")]
    json: bool,
    /// Emit tab-separated values (family records only).
    #[arg(long, global = true)]
    tsv: bool,
    /// Bound on the number of cosets defined during enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial, first homology and orientation weights.
    Alex { presentation: String },
    /// Invariants of K(p,q), or of every (p,q) in a grid.
    #[command(allow_negative_numbers = true)]
    Family {
        p: Option<i64>,
        q: Option<i64>,
        /// Inclusive ranges, e.g. `--grid -2..2 -2..2`.
        #[arg(long, num_args = 2, value_names = ["PMIN..PMAX", "QMIN..QMAX"], allow_hyphen_values = true, conflicts_with_all = ["p", "q"])]
        grid: Option<Vec<String>>,
    },
    /// Gluck twist: kill a meridian and track handle counts.
    Gluck {
        presentation: String,
        /// Generator whose dotted circle is blown down.
        #[arg(long)]
        kill: String,
        #[arg(long, value_enum, default_value_t = Variant::Single)]
        variant: Variant,
        /// Lower and upper band counts; defaults to (generators - 1, relators - that).
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        bands: Option<Vec<usize>>,
        /// Framing of the (first) blow-down, +1 or -1.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true, value_parser = parse_framing)]
        framing: i8,
    },
    /// Todd-Coxeter coset enumeration.
    Enum {
        presentation: String,
        /// Subgroup generators, comma separated or repeated.
        #[arg(long, value_delimiter = ',')]
        subgroup: Vec<String>,
        /// Overrides --max-cosets.
        #[arg(long)]
        max: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Single,
    Double,
}

fn parse_framing(s: &str) -> Result<i8, String> {
    match s {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("framing must be +1 or -1, got {s}")),
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Precondition(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Precondition(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        if e.is_internal() {
            return CliError::Internal(msg);
        }
        match e {
            Error::Parse(_) | Error::Coset(CosetError::ZeroBound) | Error::Algebra(AlgebraError::EvaluationPoint(_)) => {
                CliError::Usage(msg)
            }
            _ => CliError::Precondition(msg),
        }
    }
}

macro_rules! lift {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                Error::from(e).into()
            }
        }
    )*};
}
lift!(twoknot::error::ParseError, AlgebraError, FoxError, CosetError, ModelError);

fn parse_presentation(text: &str) -> Result<Presentation, CliError> {
    text.parse::<Presentation>().map_err(|e| CliError::Usage(format!("cannot parse presentation: {e}")))
}

fn cmd_alex(text: &str, format: Format) -> Result<String, CliError> {
    let p = parse_presentation(text)?;
    let weights = solve_orientation_weights(&p)?;
    let (delta, principal, e1_zero) = match alexander_polynomial(&p) {
        Ok(a) => (Some(a.polynomial.to_string()), Some(a.principality == twoknot::Principality::CertifiedPrincipal), false),
        Err(FoxError::ElementaryIdealZero) => (None, None, true),
        Err(e) => return Err(e.into()),
    };
    let r = report::AlexReport {
        tool_version: TOOL_VERSION,
        seed: SEED,
        input: text.to_string(),
        presentation: p.to_string(),
        weights: weights.as_slice().to_vec(),
        h1: p.abelianization().to_string(),
        e1_zero,
        delta,
        delta_principal: principal,
    };
    Ok(match format {
        Format::Json => report::json_line(&r),
        _ => r.text(),
    })
}

fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("malformed range '{s}', expected MIN..MAX"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn cmd_family(
    p: Option<i64>,
    q: Option<i64>,
    grid: Option<Vec<String>>,
    format: Format,
    max_cosets: usize,
) -> Result<String, CliError> {
    let points: Vec<(i64, i64)> = match (p, q, &grid) {
        (Some(p), Some(q), None) => vec![(p, q)],
        (None, None, Some(g)) => {
            let (pr, qr) = (parse_range(&g[0])?, parse_range(&g[1])?);
            (pr.0..=pr.1).flat_map(|p| (qr.0..=qr.1).map(move |q| (p, q))).collect()
        }
        _ => return Err(CliError::Usage("family needs P Q or --grid PMIN..PMAX QMIN..QMAX".into())),
    };
    let records: Vec<FamilyRecord> = points
        .par_iter()
        .map(|&(p, q)| family_record(p, q, max_cosets))
        .collect::<Result<_, _>>()?;

    let mut out = String::new();
    match format {
        Format::Json => {
            for r in &records {
                out.push_str(&report::json_line(&report::FamilyReport {
                    tool_version: TOOL_VERSION,
                    seed: SEED,
                    record: r,
                }));
            }
        }
        Format::Tsv => {
            out.push_str(report::TSV_HEADER);
            records.iter().for_each(|r| out.push_str(&report::family_tsv_row(r)));
        }
        Format::Text if grid.is_none() => out.push_str(&report::family_text(&records[0])),
        Format::Text => {
            out.push_str(&report::family_table(&records));
            let classes: HashSet<DeltaClass> = records
                .iter()
                .map(|r| DeltaClass::of(&r.delta.parse::<LaurentPolynomial>().expect("printed polynomial")))
                .collect::<Result<_, _>>()?;
            out.push_str(&format!("records: {}, distinct delta classes: {}\n", records.len(), classes.len()));
        }
    }
    Ok(out)
}

fn cmd_gluck(
    text: &str,
    kill: &str,
    variant: Variant,
    bands: Option<Vec<usize>>,
    framing: i8,
    format: Format,
    max_cosets: usize,
) -> Result<String, CliError> {
    let p = parse_presentation(text)?;
    let meridian = p.generator(kill).ok_or_else(|| CliError::Usage(format!("unknown generator '{kill}'")))?;
    let n_gens = p.generator_count();
    let (m, n) = match bands.as_deref() {
        Some([m, n]) => (*m, *n),
        _ => {
            let m = n_gens.saturating_sub(1);
            (m, p.relators().len().saturating_sub(m).max(1))
        }
    };
    if p.relators().len() > m + n {
        return Err(CliError::Precondition(format!(
            "{} relators but only {} bands",
            p.relators().len(),
            m + n
        )));
    }
    let mut relators: Vec<Word> = p.relators().to_vec();
    relators.resize(m + n, Word::identity());
    let all: Vec<_> = (0..n_gens).map(twoknot::Generator).collect();
    let knot = RibbonTwoKnot::new("input", m, n, p.names().to_vec(), relators, all)?;
    let quotient = gluck_quotient(&knot, meridian)?;
    let triviality = certify_trivial(&quotient, max_cosets)?;
    let variant = match variant {
        Variant::Single => GluckVariant::SingleBlowDown,
        Variant::Double => GluckVariant::DoubleBlowDown,
    };
    let before = knot.handle_counts();
    let moves = gluck_moves(variant, framing);
    let after = apply_moves(before, &moves).ok_or_else(|| {
        CliError::Precondition(format!("not enough handles in {before} for the {variant} blow-down"))
    })?;
    let (pi1, order) = match triviality {
        Triviality::Trivial => ("trivial", Some(1)),
        Triviality::Inconclusive { order } => ("inconclusive", order),
    };
    let r = report::GluckReport {
        tool_version: TOOL_VERSION,
        seed: SEED,
        input: p.to_string(),
        kill: kill.to_string(),
        variant: variant.to_string(),
        framing,
        bands: [m, n],
        quotient: quotient.to_string(),
        pi1: pi1.to_string(),
        order,
        counts_before: before.0,
        counts_after: after.0,
        chi_before: before.euler_characteristic(),
        chi_after: after.euler_characteristic(),
        moves: moves.iter().map(ToString::to_string).collect(),
    };
    Ok(match format {
        Format::Json => report::json_line(&r),
        _ => r.text(),
    })
}

fn cmd_enum(text: &str, subgroup: &[String], max: usize, format: Format) -> Result<String, CliError> {
    let p = parse_presentation(text)?;
    let words: Vec<Word> = subgroup
        .iter()
        .map(|s| p.parse_word(s).map_err(|e| CliError::Usage(format!("cannot parse subgroup word '{s}': {e}"))))
        .collect::<Result<_, _>>()?;
    let out = enumerate(&p, &words, max)?;
    let r = report::EnumReport {
        tool_version: TOOL_VERSION,
        seed: SEED,
        input: p.to_string(),
        subgroup: words.iter().map(|w| p.word_to_string(w)).collect(),
        max_cosets: max,
        status: if out.order().is_some() { "finite" } else { "exceeded" },
        order: out.order(),
        cosets_defined: out.cosets_defined,
    };
    Ok(match format {
        Format::Json => report::json_line(&r),
        _ => r.text(),
    })
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = if cli.json {
        Format::Json
    } else if cli.tsv {
        Format::Tsv
    } else {
        Format::Text
    };
    if format == Format::Tsv && !matches!(cli.command, Command::Family { .. }) {
        return Err(CliError::Usage("--tsv is only supported by the family command".into()));
    }
    match cli.command {
        Command::Alex { presentation } => cmd_alex(&presentation, format),
        Command::Family { p, q, grid } => cmd_family(p, q, grid, format, cli.max_cosets),
        Command::Gluck { presentation, kill, variant, bands, framing } => {
            cmd_gluck(&presentation, &kill, variant, bands, framing, format, cli.max_cosets)
        }
        Command::Enum { presentation, subgroup, max } => {
            cmd_enum(&presentation, &subgroup, max.unwrap_or(cli.max_cosets), format)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
