//! `orbikit`: orbifold fundamental groups, characteristic varieties and
//! Betti numbers of abelian covers from the command line.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 a refused
//! precondition, 3 an internal consistency failure.

mod input;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orbikit::abelian::{abelian_invariants, h1, QuotientMap};
use orbikit::alexander::{charvar, depth_table, fox_jacobian, restriction_report};
use orbikit::covers::{
    analyze_cover, analyze_fiber_data, reidemeister_schreier, saturation_check, FiberData,
    DEFAULT_COSET_LIMIT,
};
use orbikit::fixtures::{fixture, fixture_names};
use orbikit::fpgroup::{OrbicurveSpec, Presentation};
use orbikit::sakuma::{abelian_cover_genus, sakuma_b1, AbelianCoverSpec};
use orbikit::{Error, Result};

use input::load;
use render::Report;

#[derive(Parser, Debug)]
#[command(name = "orbikit", version, about = "Orbifold groups, characteristic varieties and abelian covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(short, long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Worker threads for character sweeps.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    jobs: u64,
    /// Maximum number of cosets in Reidemeister–Schreier rewriting.
    #[arg(long, default_value_t = DEFAULT_COSET_LIMIT, global = true)]
    coset_limit: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the presentation of a group or orbicurve.
    Group(GroupArgs),
    /// Abelianization.
    H1(GroupArgs),
    /// Depth of every nontrivial character of a finite abelian quotient.
    Depth(QuotientArgs),
    /// Characters of depth at least k.
    Charvar {
        #[command(flatten)]
        q: QuotientArgs,
        #[arg(short, long, default_value_t = 1)]
        k: usize,
    },
    /// Unbranched covers given by permutation representations.
    #[command(subcommand)]
    Cover(CoverCommand),
    /// First Betti number of an abelian cover.
    Sakuma {
        /// Base group or orbicurve.
        #[arg(long)]
        base: String,
        /// Quotient document; the abelianization when omitted.
        #[arg(long)]
        quotient: Option<String>,
        /// Also compute b1 by rewriting the kernel.
        #[arg(long)]
        oracle: bool,
    },
    /// Genus of the abelianization cover of a sphere orbifold.
    AbelianCover {
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<u64>,
    },
    /// Compare characteristic varieties of an orbifold group and its open part.
    Restriction {
        #[command(flatten)]
        q: QuotientArgs,
        /// Open group; derived from the orbicurve when omitted.
        #[arg(long)]
        open: Option<String>,
        #[arg(short, long, default_value_t = 1)]
        k: usize,
    },
    /// Orders of meridians in H1 and in a permutation representation.
    Saturation {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        rep: Option<String>,
    },
    /// Print a fixture, or list fixtures when no name is given.
    Fixture { name: Option<String> },
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Group document, orbicurve document or fixture name.
    #[arg(short, long)]
    input: String,
}

#[derive(Args, Debug)]
struct QuotientArgs {
    #[command(flatten)]
    g: GroupArgs,
    /// Quotient document; the abelianization when omitted.
    #[arg(long)]
    quotient: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CoverCommand {
    /// Analyze the cover of an orbicurve given by a representation.
    Analyze {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        rep: String,
    },
    /// Presentation of a point stabilizer by Reidemeister–Schreier.
    Rs {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        rep: String,
        /// Base point, 1-based.
        #[arg(long, default_value_t = 1)]
        basepoint: usize,
    },
    /// Source orbicurve of a map from its fiber data.
    Fibers {
        #[command(flatten)]
        g: GroupArgs,
    },
}

fn quotient_for(p: &Presentation, arg: Option<&str>) -> Result<QuotientMap> {
    match arg {
        Some(a) => load(a)?.quotient(p),
        None => QuotientMap::abelianization(&h1(p)?),
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let limit = cli.global.coset_limit;
    match &cli.command {
        Command::Group(a) => Ok(Report::presentation(&load(&a.input)?.presentation()?)),
        Command::H1(a) => Ok(Report::h1(&abelian_invariants(&load(&a.input)?.presentation()?)?)),
        Command::Depth(a) => {
            let p = load(&a.g.input)?.presentation()?;
            let q = quotient_for(&p, a.quotient.as_deref())?;
            Ok(Report::depths(&q, &depth_table(&p, &fox_jacobian(&p)?, &q)?))
        }
        Command::Charvar { q: a, k } => {
            let p = load(&a.g.input)?.presentation()?;
            let q = quotient_for(&p, a.quotient.as_deref())?;
            Ok(Report::charvar(&q, *k, &charvar(&p, &q, *k)?))
        }
        Command::Cover(CoverCommand::Analyze { spec, rep }) => {
            let spec = load(spec)?.orbicurve()?;
            let p = orbikit::fpgroup::orbicurve_group(&spec);
            let rep = load(rep)?.rep(&p)?;
            Ok(Report::covers(&analyze_cover(&spec, &rep)?))
        }
        Command::Cover(CoverCommand::Rs { g, rep, basepoint }) => {
            let p = load(&g.input)?.presentation()?;
            let rep = load(rep)?.rep(&p)?;
            if *basepoint == 0 || *basepoint > rep.degree() {
                return Err(Error::InvalidInput(format!(
                    "base point {basepoint} is not in 1..={}",
                    rep.degree()
                )));
            }
            let sub = reidemeister_schreier(&p, &rep, basepoint - 1, limit)?;
            let inv = abelian_invariants(&sub)?;
            Ok(Report::subgroup(&sub, &inv))
        }
        Command::Cover(CoverCommand::Fibers { g }) => {
            let data: FiberData = load(&g.input)?.parse()?;
            Ok(Report::fibers(&analyze_fiber_data(&data)?))
        }
        Command::Sakuma { base, quotient, oracle } => {
            let p = load(base)?.presentation()?;
            let q = quotient_for(&p, quotient.as_deref())?;
            let report = sakuma_b1(&AbelianCoverSpec::new(p, q)?, *oracle, limit)?;
            Ok(Report::sakuma(&report))
        }
        Command::AbelianCover { indices } => {
            let spec = OrbicurveSpec::sphere(indices.clone())?;
            Ok(Report::genus(&spec, &abelian_cover_genus(&spec)?))
        }
        Command::Restriction { q: a, open, k } => {
            let doc = load(&a.g.input)?;
            let p = doc.presentation()?;
            let p_open = match open {
                Some(o) => load(o)?.presentation()?,
                None => doc
                    .orbicurve()
                    .map_err(|_| {
                        Error::InvalidInput(
                            "--open is required unless the input is an orbicurve".into(),
                        )
                    })?
                    .open_presentation(),
            };
            let q = quotient_for(&p, a.quotient.as_deref())?;
            Ok(Report::restriction(&restriction_report(&p, &p_open, &q, *k)?))
        }
        Command::Saturation { g, rep } => {
            let p = load(&g.input)?.presentation()?;
            let rep = rep.as_deref().map(|r| load(r)?.rep(&p)).transpose()?;
            Ok(Report::saturation(&saturation_check(&p, rep.as_ref())?))
        }
        Command::Fixture { name: Some(name) } => Ok(Report::fixture(&fixture(name)?)),
        Command::Fixture { name: None } => Ok(Report::fixture_list(fixture_names())),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconsistent(_) => 3,
        e if e.is_precondition() => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.jobs as usize)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(1);
        }
    };
    let report = match pool.install(|| run(&cli)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = match cli.global.format {
        Format::Text => report.text.clone(),
        Format::Json => orbikit::io::to_json(&report.json),
    };
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(1);
    }
    if let Some(msg) = &report.failure {
        eprintln!("error: {msg}");
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}
