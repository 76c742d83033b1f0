//! Command-line front end. Reports go to stdout as JSON; diagnostics go to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::classify::{search_lattice_multiplicity, SearchBudget};
use crate::error::{Result, TilingError};
use crate::geometry::{format_rational, parse_rational, Location};
use crate::io::{
    lattice_json, parse_polytope, parse_translations, point_json, translates_json, vector_json,
    Translations,
};
use crate::multiplicity::{
    belt_local_geometry, boundary_sets, disjoint_partner, local_multiplicities, multiplicity_at,
    refined_boundary_sets, verify_lattice_tiling_with, Lattice, Side, TranslateSet, VerifyOptions,
};
use crate::render::{polytope_svg, tiling_svg};
use crate::report::{
    self, boundary_json, envelope, local_geometry_json, multiplicity_json, refined_json, search_json,
};
use crate::{Point, Polytope, Vector};

#[derive(Parser, Debug)]
#[command(name = "tilescope", version, about = "Translative tiling analysis for convex polygons and polyhedra")]
struct Cli {
    /// Seed for sampled 3D verification.
    #[arg(long, global = true, env = "TILESCOPE_SEED", default_value_t = 0)]
    seed: u64,
    /// Add wall-clock timing to the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct TranslationArgs {
    /// Lattice file: {"lattice": [[...], ...]}.
    #[arg(long)]
    lattice: Option<PathBuf>,
    /// Finite translate multiset: {"translates": [{"v": [...], "m": 1}, ...]}.
    #[arg(long)]
    translates: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Symmetry, belts and the onefold/twofold tile decisions.
    Analyze { poly: PathBuf },
    /// Multiplicity of P + Λ everywhere, or of P + X at given points.
    Verify {
        poly: PathBuf,
        #[command(flatten)]
        with: TranslationArgs,
        /// Point "x,y[,z]" at which to count (translate sets only; repeatable).
        #[arg(long = "point")]
        points: Vec<String>,
        /// Sample count for 3D lattices.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Boundary sets, belt geometry and partner search at a boundary point.
    Probe {
        poly: PathBuf,
        #[arg(long)]
        point: String,
        /// Window radius for lattice translates around the point.
        #[arg(long, default_value = "1")]
        window: String,
        /// Subfacet generating the belt; defaults to the first belt through the point.
        #[arg(long)]
        subfacet: Option<usize>,
        /// Translate whose boundary carries the point (default: origin).
        #[arg(long)]
        designated: Option<String>,
        #[command(flatten)]
        with: TranslationArgs,
    },
    /// Lattices Λ on a rational grid making P + Λ a k-fold tiling, k ≤ max-k.
    Search {
        poly: PathBuf,
        #[arg(long)]
        max_k: u64,
        #[arg(long)]
        max_index: Option<u64>,
        #[arg(long)]
        grid_denominator: Option<String>,
    },
    /// SVG of the polytope and its belts, or of a tiling patch with a lattice.
    Render {
        poly: PathBuf,
        #[arg(long)]
        lattice: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Tiling(TilingError),
    Io(String),
}

impl From<TilingError> for Failure {
    fn from(e: TilingError) -> Self {
        Failure::Tiling(e)
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_polytope(path: &Path) -> std::result::Result<Polytope, Failure> {
    Ok(parse_polytope(&read(path)?)?)
}

fn load_translations(args: &TranslationArgs) -> std::result::Result<Option<Translations>, Failure> {
    let path = match (&args.lattice, &args.translates) {
        (Some(p), _) | (None, Some(p)) => p,
        (None, None) => return Ok(None),
    };
    let t = parse_translations(&read(path)?)?;
    let expected = if args.lattice.is_some() { "lattice" } else { "translates" };
    let matches = matches!(
        (&t, expected),
        (Translations::Lattice(_), "lattice") | (Translations::Translates(_), "translates")
    );
    if !matches {
        return Err(TilingError::Parse(format!("{} does not hold a {expected} object", path.display())).into());
    }
    Ok(Some(t))
}

fn translation_dim(t: &Translations) -> usize {
    match t {
        Translations::Lattice(l) => l.dim(),
        Translations::Translates(x) => x.entries()[0].0.dim(),
    }
}

fn check_dim(p: &Polytope, found: usize) -> Result<()> {
    if p.dim() == found {
        Ok(())
    } else {
        Err(TilingError::DimensionMismatch {
            expected: p.dim(),
            found,
        })
    }
}

fn error_json(e: &TilingError) -> Value {
    json!({"error": e.kind(), "message": e.to_string()})
}

/// Runs the CLI and returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(Some(mut report)) => {
            if cli.timing {
                report.insert("timing_ms".into(), json!(start.elapsed().as_millis() as u64));
            }
            let text = serde_json::to_string_pretty(&Value::Object(report)).expect("report serializes");
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(None) => 0,
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Tiling(e)) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> std::result::Result<Option<Map<String, Value>>, Failure> {
    match &cli.command {
        Command::Analyze { poly } => Ok(Some(report::analyze(&load_polytope(poly)?)?)),
        Command::Verify {
            poly,
            with,
            points,
            samples,
        } => {
            let p = load_polytope(poly)?;
            let t = load_translations(with)?
                .ok_or_else(|| TilingError::Parse("one of --lattice or --translates is required".into()))?;
            check_dim(&p, translation_dim(&t))?;
            let mut r = envelope("verify", &p);
            match t {
                Translations::Lattice(l) => {
                    if !points.is_empty() {
                        return Err(TilingError::Parse("--point applies to --translates only".into()).into());
                    }
                    let opts = VerifyOptions {
                        samples: *samples,
                        seed: cli.seed,
                    };
                    r.insert("lattice".into(), lattice_json(&l)["lattice"].clone());
                    r.insert("seed".into(), json!(cli.seed));
                    r.insert("multiplicity".into(), multiplicity_json(&verify_lattice_tiling_with(&p, &l, &opts)?));
                }
                Translations::Translates(x) => {
                    if points.is_empty() {
                        return Err(TilingError::Parse("--translates needs at least one --point".into()).into());
                    }
                    let mut counts = Vec::new();
                    for s in points {
                        let q = Point::parse(s)?;
                        check_dim(&p, q.dim())?;
                        let k = multiplicity_at(&p, &x, &q)?;
                        counts.push(json!({"point": point_json(&q), "multiplicity": k}));
                    }
                    r.insert("translates".into(), translates_json(&x)["translates"].clone());
                    r.insert("multiplicities".into(), Value::Array(counts));
                }
            }
            Ok(Some(r))
        }
        Command::Probe {
            poly,
            point,
            window,
            subfacet,
            designated,
            with,
        } => {
            let p = load_polytope(poly)?;
            let q = Point::parse(point)?;
            check_dim(&p, q.dim())?;
            let radius = parse_rational(window)?;
            let x = match load_translations(with)? {
                Some(t) => {
                    check_dim(&p, translation_dim(&t))?;
                    match t {
                        Translations::Lattice(l) => TranslateSet::lattice_near(&l, &p, &q, &radius),
                        Translations::Translates(x) => x,
                    }
                }
                None => TranslateSet::lattice_near(&Lattice::integer(p.dim()), &p, &q, &radius),
            };
            let d = match designated {
                Some(s) => Vector::parse(s)?,
                None => Vector::zero(p.dim()),
            };
            check_dim(&p, d.dim())?;
            let local_q = &q - &d;
            if !matches!(p.locate(&local_q), Location::Boundary(_)) {
                return Err(TilingError::PointNotOnBoundary(q.to_string()).into());
            }
            // Belt geometry is read off the designated translate, in its own frame.
            let geometry = match subfacet {
                Some(g) => {
                    if *g >= p.subfacets().len() {
                        return Err(TilingError::NoSuchSubfacet(*g).into());
                    }
                    belt_local_geometry(&p, *g, &local_q)
                }
                None => (0..p.subfacets().len())
                    .map(|g| belt_local_geometry(&p, g, &local_q))
                    .find(|r| r.is_ok())
                    .unwrap_or_else(|| belt_local_geometry(&p, 0, &local_q)),
            }?;
            let shifted = TranslateSet::new(x.entries().iter().map(|(v, m)| (v - &d, *m)).collect::<Vec<_>>());

            let mut r = envelope("probe", &p);
            r.insert("point".into(), point_json(&q));
            r.insert("designated".into(), vector_json(&d));
            r.insert("window".into(), json!(format_rational(&radius)));
            r.insert("translate_count".into(), json!(x.len()));
            r.insert("boundary_sets".into(), boundary_json(&boundary_sets(&p, &x, &q)?));
            r.insert("belt_geometry".into(), local_geometry_json(&geometry));
            let g = geometry.generator;
            r.insert(
                "refined_plus".into(),
                refined_json(&refined_boundary_sets(&p, &shifted, g, &local_q, Side::Plus)?),
            );
            r.insert(
                "refined_minus".into(),
                refined_json(&refined_boundary_sets(&p, &shifted, g, &local_q, Side::Minus)?),
            );
            r.insert("local_multiplicities".into(), json!(local_multiplicities(&p, &x, &q)?));
            let partner = if x.contains(&d) {
                match disjoint_partner(&p, &x, &q, &d) {
                    Ok(Some(v)) => json!({"partner": vector_json(&v)}),
                    Ok(None) => json!({"partner": null}),
                    Err(e) => error_json(&e),
                }
            } else {
                json!({"error": "DesignatedNotInSet", "message": "designated translate is not in the translate set"})
            };
            r.insert("partner_search".into(), partner);
            Ok(Some(r))
        }
        Command::Search {
            poly,
            max_k,
            max_index,
            grid_denominator,
        } => {
            let p = load_polytope(poly)?;
            let grid_denominator = grid_denominator
                .as_deref()
                .map(|s| {
                    s.parse::<BigInt>()
                        .ok()
                        .filter(|d| d > &BigInt::from(0))
                        .ok_or_else(|| TilingError::Parse(format!("bad grid denominator {s:?}")))
                })
                .transpose()?;
            let budget = SearchBudget {
                grid_denominator,
                max_index: *max_index,
            };
            let mut r = envelope("search", &p);
            r.insert("search".into(), search_json(&search_lattice_multiplicity(&p, *max_k, &budget)?));
            Ok(Some(r))
        }
        Command::Render { poly, lattice, out } => {
            let p = load_polytope(poly)?;
            let svg = match lattice {
                Some(path) => {
                    let l = crate::io::parse_lattice(&read(path)?)?;
                    check_dim(&p, l.dim())?;
                    tiling_svg(&p, &l)?
                }
                None => polytope_svg(&p),
            };
            std::fs::write(out, svg).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            Ok(None)
        }
    }
}
