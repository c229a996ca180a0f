//! Thin command-line front end over the library: every major capability is
//! exposed as a subcommand that reads/writes the documented JSON formats.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::Zero;
use serde_json::{json, Value};

use sympflv::chart::Chart;
use sympflv::cone::{Position, Rel, Row};
use sympflv::degree::{degree_cone, degree_from_json, degree_to_json, facet_rows};
use sympflv::fflv::{lattice_points, parse_mults, point_to_json, weyl_dim};
use sympflv::groebner::{groebner_basis, initial_forms, standard_monomials, Caps, WeightOrder};
use sympflv::lie::positive_roots;
use sympflv::plucker::{IndexTuple, PlueckerRing};
use sympflv::poly::Poly;
use sympflv::rat::format_rat;
use sympflv::tableaux::{enumerate, Tableau};
use sympflv::trop::{trop_from_json, trop_to_json, tropical_point, SignConvention};
use sympflv::verify::{report_json, verify, Level, Report, Status};
use sympflv::{Error, Result};

#[derive(Parser)]
#[command(
    name = "sympflv",
    version,
    about = "Exact computations for symplectic flag degenerations: lattice \
             polytopes, degree cones, defining ideals, charts, tableaux, and \
             tropical cones"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Lattice points of the marked-path polytope of a dominant weight
    Fflv {
        #[command(subcommand)]
        cmd: FflvCmd,
    },
    /// The simplicial degree cone and its tropical image
    Cone {
        #[command(subcommand)]
        cmd: ConeCmd,
    },
    /// The defining ideal, weighted initial ideals, and graded counts
    Ideal {
        #[command(subcommand)]
        cmd: IdealCmd,
    },
    /// Birational-chart coordinate polynomials and their degenerations
    Chart {
        #[command(subcommand)]
        cmd: ChartCmd,
    },
    /// Semistandard fillings and their lattice-point bijection
    Tab {
        #[command(subcommand)]
        cmd: TabCmd,
    },
    /// Run the orchestrated verification suites
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum FflvCmd {
    /// Enumerate the lattice points of the polytope of a weight
    Points {
        #[arg(long)]
        n: usize,
        /// Comma-separated fundamental-weight multiplicities m1,...,mn
        #[arg(long)]
        lambda: String,
        /// Emit one JSON document instead of one line per point
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ConeCmd {
    /// Print the facet rows of the degree cone
    Facets {
        #[arg(long)]
        n: usize,
    },
    /// Classify a degree point against the cone
    Check {
        #[arg(long)]
        n: usize,
        /// JSON file with keys "i,j" / "i,-j" and rational values "p/q"
        #[arg(long)]
        point: PathBuf,
    },
    /// Emit a strictly interior degree point
    Interior {
        #[arg(long)]
        n: usize,
    },
    /// Push a degree point to its tropical image point
    Trop {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        point: PathBuf,
        #[arg(long, value_enum, default_value_t = SignArg::Min)]
        sign: SignArg,
    },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Enumerate the defining generators
    Generators {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Initial forms of a weighted Groebner basis
    Initial {
        #[arg(long)]
        n: usize,
        /// JSON file keyed by comma-joined signed letters, values "p/q"
        #[arg(long)]
        weight: PathBuf,
    },
    /// Count standard monomials of one multidegree under a weight order
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weight: PathBuf,
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Subcommand)]
enum ChartCmd {
    /// The chart polynomial of one index tuple
    Pj {
        #[arg(long)]
        n: usize,
        /// Index tuple as comma-joined signed letters, e.g. 2,-1
        #[arg(long = "J")]
        j: String,
    },
    /// Apply the coordinate map to a polynomial read from a JSON file
    Phi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Degenerate images of all coordinates at a degree point
    Degenerate {
        #[arg(long)]
        n: usize,
        #[arg(long = "d")]
        point: PathBuf,
    },
}

#[derive(Subcommand)]
enum TabCmd {
    /// Enumerate the semistandard fillings of a shape
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        json: bool,
    },
    /// The lattice point of a filling read from a JSON file
    Rho {
        #[arg(long)]
        n: usize,
        /// JSON file of the form {"columns": [[signed letters], ...]}
        #[arg(long)]
        tableau: PathBuf,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
    level: LevelArg,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Also write the full report as JSON to this file
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    /// Minimum-convention weights (the library default)
    Min,
    /// The globally negated functional
    Paper,
}

impl From<SignArg> for SignConvention {
    fn from(s: SignArg) -> SignConvention {
        match s {
            SignArg::Min => SignConvention::Min,
            SignArg::Paper => SignConvention::Negated,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::Quick => Level::Quick,
            LevelArg::Full => Level::Full,
        }
    }
}

fn main() -> ExitCode {
    // behave like a standard pipeline tool when stdout closes early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("bad JSON in {}: {e}", path.display())))
}

/// Human-readable linear form of a cone row over the root coordinates.
fn format_row(row: &Row, n: usize) -> String {
    let roots = positive_roots(n);
    let mut parts = String::new();
    for (c, b) in row.coeffs.iter().zip(&roots) {
        if c.is_zero() {
            continue;
        }
        let coeff = format_rat(c);
        let (sign, magnitude) = match coeff.strip_prefix('-') {
            Some(rest) => ("-", rest),
            None => ("+", coeff.as_str()),
        };
        if parts.is_empty() && sign == "+" {
            // leading plus is dropped
        } else {
            parts.push_str(sign);
            parts.push(' ');
        }
        if magnitude != "1" {
            parts.push_str(magnitude);
            parts.push(' ');
        }
        parts.push_str(&format!("d[{}] ", b.key()));
    }
    if parts.is_empty() {
        parts.push_str("0 ");
    }
    let rel = match row.rel {
        Rel::Geq => ">=",
        Rel::Eq => "=",
    };
    format!("{parts}{rel} {}", format_rat(&row.rhs))
}

fn sparse_point_line(point: &[u32], n: usize) -> String {
    let mut parts = Vec::new();
    for (b, &v) in positive_roots(n).iter().zip(point) {
        if v > 0 {
            parts.push(format!("{}:{v}", b.key()));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Fflv { cmd } => fflv_cmd(cmd)?,
        Cmd::Cone { cmd } => cone_cmd(cmd)?,
        Cmd::Ideal { cmd } => ideal_cmd(cmd)?,
        Cmd::Chart { cmd } => chart_cmd(cmd)?,
        Cmd::Tab { cmd } => tab_cmd(cmd)?,
        Cmd::Verify(args) => return verify_cmd(args),
    }
    Ok(ExitCode::SUCCESS)
}

fn fflv_cmd(cmd: FflvCmd) -> Result<()> {
    match cmd {
        FflvCmd::Points { n, lambda, json } => {
            let mults = parse_mults(&lambda, n)?;
            let points = lattice_points(n, &mults)?;
            if json {
                let items: Vec<Value> = points.iter().map(|p| point_to_json(p, n)).collect();
                let doc = json!({
                    "n": n,
                    "lambda": mults,
                    "count": points.len(),
                    "weyl_dim": weyl_dim(n, &mults)?.to_string(),
                    "points": items,
                });
                println!("{doc}");
            } else {
                for p in &points {
                    println!("{}", sparse_point_line(p, n));
                }
                eprintln!("{} lattice points", points.len());
            }
        }
    }
    Ok(())
}

fn cone_cmd(cmd: ConeCmd) -> Result<()> {
    match cmd {
        ConeCmd::Facets { n } => {
            for (id, row) in facet_rows(n) {
                println!("{id}: {}", format_row(&row, n));
            }
        }
        ConeCmd::Check { n, point } => {
            let d = degree_from_json(&read_json(&point)?, n)?;
            let position = degree_cone(n).membership(&d);
            let label = match position {
                Position::Interior => "interior",
                Position::Boundary => "boundary",
                Position::Outside => "outside",
            };
            println!("{label}");
        }
        ConeCmd::Interior { n } => {
            let cone = degree_cone(n);
            let point = cone.strict_point()?;
            println!("{}", degree_to_json(&point, n));
        }
        ConeCmd::Trop { n, point, sign } => {
            let d = degree_from_json(&read_json(&point)?, n)?;
            let ring = PlueckerRing::new(n);
            let v = tropical_point(&d, &ring, sign.into())?;
            println!("{}", trop_to_json(&v, &ring));
        }
    }
    Ok(())
}

fn weight_order_from(path: &PathBuf, ring: &PlueckerRing) -> Result<(Vec<sympflv::rat::Rat>, WeightOrder)> {
    let weights = trop_from_json(&read_json(path)?, ring)?;
    let order = WeightOrder::new(weights.clone());
    Ok((weights, order))
}

fn ideal_cmd(cmd: IdealCmd) -> Result<()> {
    match cmd {
        IdealCmd::Generators { n, json } => {
            let ring = PlueckerRing::new(n);
            let gens = ring.ideal_generators()?;
            if json {
                let items: Vec<Value> = gens.iter().map(Poly::to_json).collect();
                println!("{}", json!({ "n": n, "count": gens.len(), "generators": items }));
            } else {
                for g in &gens {
                    println!("{g}");
                }
                eprintln!("{} generators", gens.len());
            }
        }
        IdealCmd::Initial { n, weight } => {
            let ring = PlueckerRing::new(n);
            let (weights, order) = weight_order_from(&weight, &ring)?;
            let gens = ring.ideal_generators()?;
            let basis = groebner_basis(&gens, &order, Caps::default())?;
            for form in initial_forms(&basis, &weights)? {
                println!("{form}");
            }
        }
        IdealCmd::Hilbert { n, weight, lambda } => {
            let ring = PlueckerRing::new(n);
            let mults = parse_mults(&lambda, n)?;
            let (_, order) = weight_order_from(&weight, &ring)?;
            let gens = ring.ideal_generators()?;
            let basis = groebner_basis(&gens, &order, Caps::default())?;
            let groups: Vec<usize> = ring.tuples().iter().map(IndexTuple::len).collect();
            let count = standard_monomials(&basis, &order, &groups, &mults).len();
            println!("{count}");
            eprintln!("weyl_dim = {}", weyl_dim(n, &mults)?);
        }
    }
    Ok(())
}

fn chart_cmd(cmd: ChartCmd) -> Result<()> {
    match cmd {
        ChartCmd::Pj { n, j } => {
            let chart = Chart::new(n)?;
            let tuple = IndexTuple::from_name(&j, n)?;
            println!("{}", chart.coordinate(&tuple));
        }
        ChartCmd::Phi { n, poly } => {
            let chart = Chart::new(n)?;
            let p = Poly::from_json(&read_json(&poly)?, chart.ring().universe())?;
            println!("{}", chart.coordinate_map(&p)?);
        }
        ChartCmd::Degenerate { n, point } => {
            let chart = Chart::new(n)?;
            let d = degree_from_json(&read_json(&point)?, n)?;
            let images = chart.degenerate_images(&d)?;
            for (j, img) in chart.ring().tuples().iter().zip(images) {
                println!("{}: {img}", j.name(n));
            }
        }
    }
    Ok(())
}

fn tab_cmd(cmd: TabCmd) -> Result<()> {
    match cmd {
        TabCmd::Enumerate { n, lambda, json } => {
            let mults = parse_mults(&lambda, n)?;
            let fillings = enumerate(n, &mults)?;
            if json {
                let items: Vec<Value> = fillings.iter().map(Tableau::to_json).collect();
                println!(
                    "{}",
                    json!({ "n": n, "lambda": mults, "count": fillings.len(), "tableaux": items })
                );
            } else {
                for t in &fillings {
                    println!("{t}");
                    println!();
                }
                eprintln!("{} fillings", fillings.len());
            }
        }
        TabCmd::Rho { n, tableau } => {
            let t = Tableau::from_json(&read_json(&tableau)?, n)?;
            let point = t.lattice_point()?;
            println!("{}", point_to_json(&point, n));
        }
    }
    Ok(())
}

fn verify_cmd(args: VerifyArgs) -> Result<ExitCode> {
    let level: Level = args.level.into();
    let reports = verify(level, args.n, args.seed)?;
    print_reports(&reports);
    if let Some(path) = &args.json {
        let doc = report_json(level, args.n, args.seed, &reports);
        fs::write(path, format!("{doc}\n"))
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
        eprintln!("report written to {}", path.display());
    }
    let ok = sympflv::verify::all_passed(&reports);
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn print_reports(reports: &[Report]) {
    let mut pass = 0;
    let mut fail = 0;
    let mut skipped = 0;
    for r in reports {
        match r.status {
            Status::Pass => pass += 1,
            Status::Fail => fail += 1,
            Status::Skipped => skipped += 1,
        }
        println!(
            "{:<7} {:<22} {:>6} ms  {}",
            r.status.label(),
            r.suite,
            r.elapsed.as_millis(),
            r.claim
        );
        if r.status != Status::Pass {
            println!("        {}", r.witness);
        }
    }
    println!("verify: {} ({pass} pass, {fail} fail, {skipped} skipped)", if fail == 0 { "pass" } else { "fail" });
}
