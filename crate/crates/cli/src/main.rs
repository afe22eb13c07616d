//! Command-line interface for the singularity toolkit.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 non-isolated
//! singularity, 3 non-convenient input without `--stabilize`, 4 smooth
//! input (no jump defined).

mod figure;
mod records;
mod text;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_rational::BigRational;

use milnor_jump::conjectures::{classify, verify_family};
use milnor_jump::jump::{decompose_slopes, family_jump, nondegenerate_jump, stabilize};
use milnor_jump::nondegen::{branch_count, is_irreducible_nd, is_nondegenerate};
use milnor_jump::oracle::{milnor, MilnorStatus};
use milnor_jump::poly::{parse, GermPolynomial};
use milnor_jump::{Error, NewtonPolygon};

use figure::Figure;
use records::{
    AnalysisJson, ConjectureJson, DeformJson, DegeneracyJson, Field, JumpJson, MilnorJson,
    SlopesJson,
};

#[derive(Parser)]
#[command(
    name = "milnor-jump",
    version,
    about = "Newton-polygon invariants of plane curve singularities",
    long_about = "Computes Newton polygons, the lattice bound nu, Newton non-degeneracy, \
                  exact Milnor numbers, the non-degenerate jump lambda' with its witness \
                  deformation, and realized jumps of explicit families."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one germ: polygon, nu, degeneracy, mu, branches, jump, bounds
    Analyze {
        /// Germ expression, e.g. "x^4 - y^3"
        expr: String,
        /// Emit a machine-readable JSON record
        #[arg(long)]
        json: bool,
        /// Write an SVG figure of the Newton polygon to FILE
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Make a non-convenient germ convenient by appending axis powers of
        /// order mu + 2 (changes the representative, not the invariants)
        #[arg(long)]
        stabilize: bool,
        /// Truncation cap for the Milnor computation
        #[arg(long, value_name = "N")]
        cap: Option<u32>,
        /// Substitute this value for the parameter s before analyzing
        #[arg(long, value_name = "VALUE")]
        s: Option<String>,
    },
    /// Non-degenerate jump lambda' with witness monomial and candidate drops
    Jump {
        expr: String,
        #[arg(long)]
        json: bool,
        /// Make a non-convenient germ convenient before the jump search
        #[arg(long)]
        stabilize: bool,
        /// Substitute this value for the parameter s first
        #[arg(long, value_name = "VALUE")]
        s: Option<String>,
    },
    /// Exact Milnor number at the origin
    Milnor {
        expr: String,
        #[arg(long)]
        json: bool,
        /// Truncation cap override
        #[arg(long, value_name = "N")]
        cap: Option<u32>,
        /// Substitute this value for the parameter s first
        #[arg(long, value_name = "VALUE")]
        s: Option<String>,
    },
    /// Realized jump of an explicit family against its base germ
    Deform {
        /// Base germ, e.g. "x^4 - y^4"
        f0: String,
        /// One-parameter family in s, e.g. "x^4 - (y^2 + s*x)^2"
        family: String,
        /// Comma-separated nonzero sample values for s
        #[arg(long, value_name = "VALUES", default_value = "1,1/2")]
        s: String,
        #[arg(long)]
        json: bool,
    },
    /// Case analysis of x^p - y^q with conjectured jump and witness family
    Conjecture {
        p: u32,
        q: u32,
        /// Run the witness family through the Milnor oracle
        #[arg(long)]
        verify: bool,
        /// Comma-separated sample values used by --verify
        #[arg(long, value_name = "VALUES", default_value = "1,1/2")]
        s: String,
        #[arg(long)]
        json: bool,
    },
    /// Case table for all pairs 2 <= q <= p <= MAX
    ConjectureGrid {
        #[arg(long, value_name = "MAX")]
        max: u32,
        /// Verify every row with the Milnor oracle
        #[arg(long)]
        verify: bool,
        #[arg(long, value_name = "VALUES", default_value = "1,1/2")]
        s: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::NonIsolated => 2,
            Error::NotConvenient => 3,
            Error::Smooth => 4,
            _ => 1,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: err.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze {
            expr,
            json,
            svg,
            stabilize,
            cap,
            s,
        } => cmd_analyze(&expr, json, svg, stabilize, cap, s.as_deref()),
        Command::Jump {
            expr,
            json,
            stabilize,
            s,
        } => cmd_jump(&expr, json, stabilize, s.as_deref()),
        Command::Milnor { expr, json, cap, s } => cmd_milnor(&expr, json, cap, s.as_deref()),
        Command::Deform { f0, family, s, json } => cmd_deform(&f0, &family, &s, json),
        Command::Conjecture {
            p,
            q,
            verify,
            s,
            json,
        } => cmd_conjecture(p, q, verify, &s, json),
        Command::ConjectureGrid {
            max,
            verify,
            s,
            json,
        } => cmd_conjecture_grid(max, verify, &s, json),
    }
}

/// Parses a germ expression, optionally substituting a value for `s`.
fn parse_germ(expr: &str, s: Option<&str>) -> Result<GermPolynomial, Failure> {
    let family = parse(expr)?;
    match s {
        Some(raw) => {
            let value = parse_rational(raw)?;
            Ok(family.substitute(&value))
        }
        None => Ok(family.to_germ()?),
    }
}

fn parse_rational(raw: &str) -> Result<BigRational, Failure> {
    BigRational::from_str(raw.trim())
        .map_err(|e| usage(format!("invalid rational '{}': {e}", raw.trim())))
}

fn parse_samples(raw: &str) -> Result<Vec<BigRational>, Failure> {
    raw.split(',')
        .filter(|piece| !piece.trim().is_empty())
        .map(parse_rational)
        .collect()
}

/// Stabilizes a non-convenient germ when asked to, and reports what changed.
fn make_convenient(
    f: GermPolynomial,
    allow_stabilize: bool,
) -> Result<(GermPolynomial, Option<String>), Failure> {
    let polygon = NewtonPolygon::of_germ(&f)?;
    if polygon.is_convenient() {
        return Ok((f, None));
    }
    if !allow_stabilize {
        return Err(Error::NotConvenient.into());
    }
    let stabilized = stabilize(&f)?;
    let added: Vec<String> = stabilized
        .support()
        .difference(&f.support())
        .map(records::monomial_text)
        .collect();
    Ok((stabilized, Some(format!("appended {}", added.join(" + ")))))
}

fn emit_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let rendered = serde_json::to_string_pretty(value)
        .map_err(|e| usage(format!("serialization failed: {e}")))?;
    println!("{rendered}");
    Ok(())
}

fn cmd_analyze(
    expr: &str,
    json: bool,
    svg: Option<PathBuf>,
    allow_stabilize: bool,
    cap: Option<u32>,
    s: Option<&str>,
) -> Result<(), Failure> {
    let parsed = parse_germ(expr, s)?;
    parsed.ensure_germ()?;

    // The oracle sees every germ first: a non-isolated singularity is fatal
    // whether or not the polygon is convenient.
    let mu = milnor(&parsed, cap)?;
    if mu.status == MilnorStatus::NonIsolated {
        return Err(Error::NonIsolated.into());
    }
    if mu.mu == 0 {
        return Err(Error::Smooth.into());
    }

    let (f, stabilized) = make_convenient(parsed, allow_stabilize)?;
    let polygon = NewtonPolygon::of_germ(&f)?;
    let degeneracy = is_nondegenerate(&f)?;
    let jump = nondegenerate_jump(&f)?;
    let slopes = decompose_slopes(&polygon)?;

    let (branches, irreducible) = if degeneracy.overall {
        (
            Field::Value(branch_count(&f)?),
            Field::Value(is_irreducible_nd(&f)?),
        )
    } else {
        let reason = "germ is degenerate; the lattice branch count does not apply";
        (Field::unavailable(reason), Field::unavailable(reason))
    };

    let candidate_points: Vec<_> = jump.candidates.keys().copied().collect();
    let support: Vec<_> = f.support().into_iter().collect();
    let fig = Figure {
        support: &support,
        polygon: &polygon,
        candidates: &candidate_points,
        witness: jump.witness,
    };
    let svg_file = match &svg {
        Some(path) => {
            std::fs::write(path, fig.svg())?;
            Some(path.display().to_string())
        }
        None => None,
    };

    let record = AnalysisJson {
        input: expr.to_string(),
        germ: f.to_string(),
        stabilized,
        support: support.iter().map(records::point).collect(),
        vertices: polygon.vertices().iter().map(records::point).collect(),
        convenient: true,
        x_intercept: polygon.x_intercept().expect("convenient"),
        y_intercept: polygon.y_intercept().expect("convenient"),
        doubled_area: polygon.doubled_area(),
        nu: polygon.nu()?,
        nondegenerate: DegeneracyJson::from_report(&degeneracy),
        mu: MilnorJson::from_result(&mu),
        branches,
        irreducible,
        jump: JumpJson::from_report(&jump),
        slopes: SlopesJson::from_decomposition(&slopes),
        svg_file,
    };

    if json {
        emit_json(&record)
    } else {
        print!("{}", text::analysis_text(&record, &fig.ascii()));
        Ok(())
    }
}

fn cmd_jump(
    expr: &str,
    json: bool,
    allow_stabilize: bool,
    s: Option<&str>,
) -> Result<(), Failure> {
    let parsed = parse_germ(expr, s)?;
    parsed.ensure_germ()?;
    let (f, stabilized) = make_convenient(parsed, allow_stabilize)?;
    let report = nondegenerate_jump(&f)?;
    let record = JumpJson::from_report(&report);
    if json {
        emit_json(&record)
    } else {
        if let Some(note) = stabilized {
            println!("stabilized: {note}");
        }
        print!("{}", text::jump_block(&record));
        Ok(())
    }
}

fn cmd_milnor(expr: &str, json: bool, cap: Option<u32>, s: Option<&str>) -> Result<(), Failure> {
    let f = parse_germ(expr, s)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial.into());
    }
    let result = milnor(&f, cap)?;
    if result.status == MilnorStatus::NonIsolated {
        return Err(Error::NonIsolated.into());
    }
    let record = MilnorJson::from_result(&result);
    if json {
        emit_json(&record)
    } else {
        println!("{}", text::milnor_line(&record));
        Ok(())
    }
}

fn cmd_deform(f0_expr: &str, family_expr: &str, s: &str, json: bool) -> Result<(), Failure> {
    let f0 = parse(f0_expr)?.to_germ()?;
    let family = parse(family_expr)?;
    let samples = parse_samples(s)?;
    let result = family_jump(&f0, &family, &samples)?;
    let record = DeformJson::new(f0.to_string(), family.to_string(), &result);
    if json {
        emit_json(&record)
    } else {
        print!("{}", text::deform_text(&record));
        Ok(())
    }
}

fn cmd_conjecture(p: u32, q: u32, verify: bool, s: &str, json: bool) -> Result<(), Failure> {
    let mut record = classify(p, q)?;
    if verify {
        let samples = parse_samples(s)?;
        record = verify_family(record, &samples)?;
    }
    let rendered = ConjectureJson::from_record(&record);
    if json {
        emit_json(&rendered)
    } else {
        print!("{}", text::conjecture_text(&rendered));
        Ok(())
    }
}

fn cmd_conjecture_grid(max: u32, verify: bool, s: &str, json: bool) -> Result<(), Failure> {
    if max < 2 {
        return Err(usage("--max must be at least 2"));
    }
    let samples = parse_samples(s)?;
    let mut rows = Vec::new();
    for p in 2..=max {
        for q in 2..=p {
            let mut record = classify(p, q)?;
            if verify {
                record = verify_family(record, &samples)?;
            }
            rows.push(ConjectureJson::from_record(&record));
        }
    }
    if json {
        emit_json(&rows)
    } else {
        for row in &rows {
            println!("{}", text::conjecture_grid_row(row));
        }
        Ok(())
    }
}
