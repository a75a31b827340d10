//! Command-line front end for the good-semigroup library.
//!
//! Exit codes are scriptable: 0 for success (and mathematically true
//! answers), 1 for mathematically false answers, 2 for usage and I/O
//! problems, 3 for validation and input-consistency failures, 4 for an
//! exceeded search budget.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use goodsemi::catalog::{hunt_asymmetric, HuntParams};
use goodsemi::duality::{dual, normalized_canonical};
use goodsemi::format::{parse, print, Document};
use goodsemi::lattice::{Point, Window};
use goodsemi::limits::Budget;
use goodsemi::metric::ideal_distance;
use goodsemi::poincare::{check_symmetry_theorem, poincare_polynomial};
use goodsemi::render::{render_staircase, RenderFormat};
use goodsemi::semigroup::{GoodSemigroup, Ideal, SmallElements};
use goodsemi::Error;

#[derive(Parser)]
#[command(
    name = "goodsemi",
    version,
    about = "Exact computation with good semigroups of Z^s and their ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and check every axiom; exits 3 with the violations when
    /// the object is not good.
    Validate { file: PathBuf },
    /// Print a short human summary of any interchange file.
    Info { file: PathBuf },
    /// Print the normalized canonical ideal of a semigroup file.
    Canonical { file: PathBuf },
    /// Print the dual of an ideal against its parent's canonical ideal.
    Dual { semigroup: PathBuf, ideal: PathBuf },
    /// Print the distance between nested ideals (inner must sit inside outer).
    Distance {
        semigroup: PathBuf,
        outer: PathBuf,
        inner: PathBuf,
    },
    /// Print the Poincaré polynomial of an ideal, or of the semigroup itself.
    Poincare {
        semigroup: PathBuf,
        ideal: Option<PathBuf>,
        /// Emit the polynomial as an interchange document instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the four symmetry conditions and the mirror identity;
    /// exits 1 when the ideal is not symmetric.
    Symmetry { semigroup: PathBuf, ideal: PathBuf },
    /// Hunt the enumerated universe for ideals violating the symmetry
    /// conditions; exits 1 when any are found.
    Search {
        /// Ambient dimension of the universe.
        #[arg(long)]
        s: usize,
        /// Largest semigroup conductor, as s comma-separated integers.
        #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
        gamma_max: String,
        /// Ideal minimum box, as 2s comma-separated integers (lo then hi).
        /// Defaults to the origin alone: symmetry is translation-invariant.
        #[arg(long, value_name = "LO..,HI..", allow_hyphen_values = true)]
        mu_box: Option<String>,
        /// Ideal conductor box, as 2s comma-separated integers (lo then hi).
        /// Defaults to [0, gamma-max].
        #[arg(long, value_name = "LO..,HI..", allow_hyphen_values = true)]
        gamma_box: Option<String>,
        /// Worker threads for the symmetry checks.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the membership staircase of a plane semigroup or ideal file.
    Render {
        file: PathBuf,
        /// Window corners as four integers: lo_x,lo_y,hi_x,hi_y.
        #[arg(long, value_name = "X,Y,X,Y", allow_hyphen_values = true)]
        window: String,
        #[arg(long, value_enum, default_value_t = RenderArg::Ascii)]
        format: RenderArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderArg {
    Ascii,
    Svg,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(err)) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::BudgetExceeded { .. } => 4,
                Error::Io(_) => 2,
                _ => 3,
            };
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Validate { file } => {
            let doc = load(&file)?;
            println!("ok: {}", describe(&doc));
            Ok(0)
        }
        Command::Info { file } => {
            let doc = load(&file)?;
            print!("{}", info(&doc));
            Ok(0)
        }
        Command::Canonical { file } => {
            let s = load_semigroup(&file)?;
            print!("{}", print(&Document::Ideal(normalized_canonical(&s))));
            Ok(0)
        }
        Command::Dual { semigroup, ideal } => {
            let s = load_semigroup(&semigroup)?;
            let e = load_ideal_of(&ideal, &s)?;
            print!("{}", print(&Document::Ideal(dual(&e)?)));
            Ok(0)
        }
        Command::Distance {
            semigroup,
            outer,
            inner,
        } => {
            let s = load_semigroup(&semigroup)?;
            let outer = load_ideal_of(&outer, &s)?;
            let inner = load_ideal_of(&inner, &s)?;
            println!("{}", ideal_distance(&outer, &inner)?);
            Ok(0)
        }
        Command::Poincare {
            semigroup,
            ideal,
            json,
        } => {
            let s = load_semigroup(&semigroup)?;
            let e = match ideal {
                Some(path) => load_ideal_of(&path, &s)?,
                None => GoodSemigroup::as_ideal(&s),
            };
            let p = poincare_polynomial(&e)?;
            if json {
                print!("{}", print(&Document::Polynomial(p)));
            } else {
                println!("{p}");
            }
            Ok(0)
        }
        Command::Symmetry { semigroup, ideal } => {
            let s = load_semigroup(&semigroup)?;
            let e = load_ideal_of(&ideal, &s)?;
            let (identity, report) = check_symmetry_theorem(&e)?;
            println!("condition i: {}", report.cond_i);
            println!("condition ii: {}", report.cond_ii);
            println!("condition iii: {}", report.cond_iii);
            println!("condition iv: {}", report.cond_iv);
            println!("mirror identity: {identity}");
            Ok(if report.all_true() && identity { 0 } else { 1 })
        }
        Command::Search {
            s,
            gamma_max,
            mu_box,
            gamma_box,
            jobs,
            out,
        } => {
            let gamma_max = parse_point(&gamma_max, s, "--gamma-max")?;
            let mu_box = match mu_box {
                Some(raw) => parse_window(&raw, s, "--mu-box")?,
                None => Window::new(Point::zero(s), Point::zero(s)).expect("degenerate box"),
            };
            let gamma_box = match gamma_box {
                Some(raw) => parse_window(&raw, s, "--gamma-box")?,
                None => Window::new(Point::zero(s), gamma_max.clone())
                    .map_err(|_| usage("--gamma-max must be componentwise nonnegative"))?,
            };
            let params = HuntParams {
                dim: s,
                gamma_max,
                mu_box,
                gamma_box,
            };
            let budget = Budget::from_env();
            let report = match jobs {
                None => hunt_asymmetric(&params, &budget)?,
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| usage(format!("cannot build a {n}-thread pool: {e}")))?
                    .install(|| hunt_asymmetric(&params, &budget))?,
            };
            eprintln!(
                "tested {} ideals, {} failures",
                report.tested,
                report.failures.len()
            );
            let clean = report.failures.is_empty();
            let text = print(&Document::Report(report));
            match out {
                Some(path) => std::fs::write(&path, text).map_err(Error::from)?,
                None => print!("{text}"),
            }
            Ok(if clean { 0 } else { 1 })
        }
        Command::Render {
            file,
            window,
            format,
        } => {
            let coords = parse_coords(&window, 4, "--window")?;
            let w = Window::new(
                Point::new(coords[..2].to_vec()),
                Point::new(coords[2..].to_vec()),
            )
            .map_err(|_| usage("--window corners must satisfy lo <= hi"))?;
            let style = match format {
                RenderArg::Ascii => RenderFormat::Ascii,
                RenderArg::Svg => RenderFormat::Svg,
            };
            let text = match load(&file)? {
                Document::Semigroup(s) => render_staircase(&s, &w, style)?,
                Document::Ideal(e) => render_staircase(&e, &w, style)?,
                other => {
                    return Err(Failure::Lib(Error::Document(format!(
                        "cannot render a {}",
                        kind_name(&other)
                    ))))
                }
            };
            print!("{text}");
            Ok(0)
        }
    }
}

fn load(path: &Path) -> Result<Document, Error> {
    let text = std::fs::read_to_string(path)?;
    parse(&text, path.parent())
}

fn load_semigroup(path: &Path) -> Result<Arc<GoodSemigroup>, Error> {
    match load(path)? {
        Document::Semigroup(s) => Ok(Arc::new(s)),
        other => Err(Error::Document(format!(
            "{} is a {}, expected a semigroup",
            path.display(),
            kind_name(&other)
        ))),
    }
}

/// Loads an ideal file and checks it lives over the semigroup the command
/// named; a different parent is an input inconsistency.
fn load_ideal_of(path: &Path, parent: &Arc<GoodSemigroup>) -> Result<Ideal, Error> {
    match load(path)? {
        Document::Ideal(e) => {
            if e.parent() != parent {
                return Err(Error::ParentMismatch);
            }
            Ok(e)
        }
        other => Err(Error::Document(format!(
            "{} is a {}, expected an ideal",
            path.display(),
            kind_name(&other)
        ))),
    }
}

fn kind_name(doc: &Document) -> &'static str {
    match doc {
        Document::Semigroup(_) => "semigroup",
        Document::Ideal(_) => "ideal",
        Document::Polynomial(_) => "polynomial",
        Document::Report(_) => "report",
    }
}

fn describe(doc: &Document) -> String {
    match doc {
        Document::Semigroup(s) => format!(
            "semigroup, s={}, gamma={}, {} small elements",
            s.dim(),
            s.conductor(),
            s.small().len()
        ),
        Document::Ideal(e) => format!(
            "ideal, s={}, mu={}, gamma={}, {} small elements",
            e.dim(),
            e.minimum(),
            e.conductor(),
            e.small().len()
        ),
        Document::Polynomial(p) => format!("polynomial, s={}, {} terms", p.dim(), p.terms().len()),
        Document::Report(r) => format!(
            "report, tested {} ideals, {} failures",
            r.tested,
            r.failures.len()
        ),
    }
}

fn info(doc: &Document) -> String {
    let mut out = format!("{}\n", describe(doc));
    match doc {
        Document::Semigroup(s) => {
            for p in s.small() {
                out.push_str(&format!("  small {p}\n"));
            }
        }
        Document::Ideal(e) => {
            out.push_str(&format!(
                "  parent: s={}, gamma={}\n",
                e.parent().dim(),
                e.parent().conductor()
            ));
            for p in e.small() {
                out.push_str(&format!("  small {p}\n"));
            }
        }
        Document::Polynomial(p) => {
            out.push_str(&format!("  {p}\n"));
        }
        Document::Report(r) => {
            for f in &r.failures {
                out.push_str(&format!(
                    "  failing ideal mu={}, gamma={} over semigroup gamma={}\n",
                    f.ideal.minimum(),
                    f.ideal.conductor(),
                    f.semigroup.conductor()
                ));
            }
        }
    }
    out
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

fn parse_coords(raw: &str, expected: usize, flag: &str) -> Result<Vec<i64>, Failure> {
    let parts: Result<Vec<i64>, _> = raw.split(',').map(|p| p.trim().parse::<i64>()).collect();
    match parts {
        Ok(values) if values.len() == expected => Ok(values),
        Ok(values) => Err(usage(format!(
            "{flag} expects {expected} comma-separated integers, got {}",
            values.len()
        ))),
        Err(_) => Err(usage(format!(
            "{flag} expects comma-separated integers, got {raw:?}"
        ))),
    }
}

fn parse_point(raw: &str, dim: usize, flag: &str) -> Result<Point, Failure> {
    Ok(Point::new(parse_coords(raw, dim, flag)?))
}

fn parse_window(raw: &str, dim: usize, flag: &str) -> Result<Window, Failure> {
    let coords = parse_coords(raw, 2 * dim, flag)?;
    Window::new(
        Point::new(coords[..dim].to_vec()),
        Point::new(coords[dim..].to_vec()),
    )
    .map_err(|_| usage(format!("{flag} corners must satisfy lo <= hi")))
}
