//! Command-line front end: generate triangulations, validate and
//! analyze them, evaluate bounds and certificates, and tabulate the
//! hyperbolic-volume bounds.
//!
//! Exit codes: 0 success, 1 invalid input file, 2 bad arguments.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;
use serde::Serialize;

use simpvol::bounds::{self, ManifoldDescriptor};
use simpvol::generators;
use simpvol::hypervol;
use simpvol::pseudomanifold::Pseudomanifold;
use simpvol::surfaces;

type Q = Ratio<i64>;

#[derive(Parser)]
#[command(name = "simpvol", version, about = "Triangulations and simplicial-volume bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a triangulation and write it as JSON.
    Gen(GenArgs),
    /// Validate a triangulation file and report its invariants.
    Check(CheckArgs),
    /// Evaluate the applicable lower bounds for a manifold.
    Bounds(BoundsArgs),
    /// Evaluate the counting certificate on a triangulation.
    Certify(CertifyArgs),
    /// Hyperbolic volume functions and bounds.
    #[command(subcommand)]
    Hyp(HypCommand),
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
}

#[derive(Subcommand)]
enum GenKind {
    /// Cone over the boundary of an n-simplex.
    Cone {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(short, long)]
        output: String,
    },
    /// The one-tetrahedron solid torus.
    SolidTorus {
        #[arg(short, long)]
        output: String,
    },
    /// Genus-g handlebody in 3g - 2 tetrahedra.
    Handlebody {
        #[arg(long)]
        genus: usize,
        #[arg(short, long)]
        output: String,
    },
    /// Genus-g surface times interval in 10g - 4 tetrahedra.
    Product {
        #[arg(long)]
        genus: usize,
        #[arg(short, long)]
        output: String,
    },
}

#[derive(Args)]
struct CheckArgs {
    file: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundsArgs {
    /// Triangulation file; dimension and boundary norm are derived
    /// from it when given.
    file: Option<String>,
    #[arg(long)]
    dim: Option<usize>,
    /// Boundary norm as an integer or a/b rational.
    #[arg(long)]
    boundary_norm: Option<String>,
    #[arg(long)]
    aspherical: bool,
    #[arg(long)]
    boundary_irreducible: bool,
    /// Hyperbolic with geodesic boundary; requires --vol.
    #[arg(long)]
    hyperbolic: bool,
    #[arg(long)]
    vol: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CertifyArgs {
    file: String,
    #[arg(long)]
    degree: i64,
    #[arg(long)]
    boundary_norm: String,
    #[arg(long)]
    components: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum HypCommand {
    /// Bound table for genus 2 through N.
    Table {
        #[arg(long)]
        max_genus: usize,
        #[arg(long)]
        json: bool,
    },
    /// Lobachevsky function at theta (radians).
    Lob {
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        json: bool,
    },
    /// Ideal tetrahedron volume from dihedral angles a,b,c.
    Tet {
        #[arg(long, value_delimiter = ',')]
        angles: Vec<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Regular truncated tetrahedron volume for genus g.
    Truncated {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        json: bool,
    },
    /// Hyperbolic lower bound from volume and boundary norm.
    Bound {
        #[arg(long)]
        vol: f64,
        #[arg(long)]
        boundary_norm: f64,
        #[arg(long)]
        json: bool,
    },
}

/// Failure with the exit code to report.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type RunResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> RunResult {
    match cli.command {
        Command::Gen(args) => run_gen(args),
        Command::Check(args) => run_check(args),
        Command::Bounds(args) => run_bounds(args),
        Command::Certify(args) => run_certify(args),
        Command::Hyp(cmd) => run_hyp(cmd),
    }
}

/// Format with six significant digits.
fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = (5 - x.abs().log10().floor() as i64).max(0) as usize;
    format!("{x:.digits$}")
}

fn parse_ratio(s: &str) -> Result<Q, Failure> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| fail(2, format!("invalid rational: {s}")))
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let den = parse_int(b)?;
            if den == 0 {
                return Err(fail(2, "rational denominator is zero"));
            }
            Ok(Ratio::new(parse_int(a)?, den))
        }
        None => Ok(Ratio::from_integer(parse_int(s)?)),
    }
}

fn load(path: &str) -> Result<Pseudomanifold, Failure> {
    let text = fs::read_to_string(path).map_err(|e| fail(1, format!("{path}: {e}")))?;
    Pseudomanifold::from_json(&text).map_err(|e| fail(1, format!("{path}: {e}")))
}

fn arg_err(e: simpvol::Error) -> Failure {
    fail(2, e.to_string())
}

fn run_gen(args: GenArgs) -> RunResult {
    let (p, output) = match args.kind {
        GenKind::Cone { dim, output } => (
            generators::cone_over_simplex_boundary(dim).map_err(arg_err)?,
            output,
        ),
        GenKind::SolidTorus { output } => (generators::solid_torus(), output),
        GenKind::Handlebody { genus, output } => {
            (generators::handlebody(genus).map_err(arg_err)?, output)
        }
        GenKind::Product { genus, output } => (
            generators::product_surface_interval(genus).map_err(arg_err)?,
            output,
        ),
    };
    fs::write(&output, p.to_json()).map_err(|e| fail(1, format!("{output}: {e}")))?;
    println!(
        "wrote {} ({} simplices, dimension {})",
        output,
        p.simplex_count(),
        p.dimension()
    );
    Ok(())
}

#[derive(Serialize)]
struct BoundarySurfaceReport {
    chi: i64,
    orientable: bool,
    genus: i64,
    triangles: usize,
}

#[derive(Serialize)]
struct HomologyReport {
    betti: usize,
    torsion: Vec<String>,
}

#[derive(Serialize)]
struct CheckReport {
    dimension: usize,
    simplices: usize,
    gluings: usize,
    euler: i64,
    connected: bool,
    orientable: bool,
    boundary_faces: usize,
    t_profile: Vec<usize>,
    dual_graph: simpvol::DualGraph,
    #[serde(skip_serializing_if = "Option::is_none")]
    manifold: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    boundary_components: Option<Vec<BoundarySurfaceReport>>,
    homology: Vec<HomologyReport>,
}

fn run_check(args: CheckArgs) -> RunResult {
    let p = load(&args.file)?;
    let profile = p.boundary_profile();
    let boundary_components = if p.dimension() == 3 && !p.boundary_faces().is_empty() {
        let b = p.boundary().map_err(|e| fail(1, e.to_string()))?;
        let s = surfaces::analyze_surface(&b).map_err(|e| fail(1, e.to_string()))?;
        Some(
            s.components
                .iter()
                .map(|c| BoundarySurfaceReport {
                    chi: c.chi,
                    orientable: c.orientable,
                    genus: c.genus,
                    triangles: c.triangle_count,
                })
                .collect(),
        )
    } else {
        None
    };
    let manifold = if p.dimension() == 3 {
        Some(p.is_manifold().map_err(|e| fail(1, e.to_string()))?)
    } else {
        None
    };
    let homology = p
        .homology_all()
        .iter()
        .map(|h| HomologyReport {
            betti: h.betti,
            torsion: h.torsion.iter().map(|t| t.to_string()).collect(),
        })
        .collect();
    let report = CheckReport {
        dimension: p.dimension(),
        simplices: p.simplex_count(),
        gluings: p.gluings().len(),
        euler: p.euler_characteristic(),
        connected: p.is_connected(),
        orientable: p.orientability().is_orientable(),
        boundary_faces: profile.boundary_face_count(),
        t_profile: profile.t.clone(),
        dual_graph: p.dual_graph(),
        manifold,
        boundary_components,
        homology,
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        return Ok(());
    }
    println!("dimension:      {}", report.dimension);
    println!("simplices:      {}", report.simplices);
    println!("gluings:        {}", report.gluings);
    println!("euler:          {}", report.euler);
    println!("connected:      {}", report.connected);
    println!("orientable:     {}", report.orientable);
    println!("boundary faces: {}", report.boundary_faces);
    println!("t profile:      {:?}", report.t_profile);
    println!(
        "dual graph:     {} vertices, {} edges, euler {}, components {}",
        report.dual_graph.vertex_count,
        report.dual_graph.edge_count,
        report.dual_graph.euler,
        report.dual_graph.components
    );
    if let Some(m) = report.manifold {
        println!("manifold:       {m}");
    }
    if let Some(comps) = &report.boundary_components {
        for (i, c) in comps.iter().enumerate() {
            println!(
                "boundary {}:     chi {}, orientable {}, genus {}, {} triangles",
                i, c.chi, c.orientable, c.genus, c.triangles
            );
        }
    }
    for (d, h) in report.homology.iter().enumerate() {
        let torsion = if h.torsion.is_empty() {
            String::new()
        } else {
            format!(" + torsion {:?}", h.torsion)
        };
        println!("H_{d}:            Z^{}{}", h.betti, torsion);
    }
    Ok(())
}

fn run_bounds(args: BoundsArgs) -> RunResult {
    let (dimension, boundary_norm) = match (&args.file, args.dim, &args.boundary_norm) {
        (Some(path), None, None) => {
            let p = load(path)?;
            if p.dimension() != 3 {
                return Err(fail(
                    2,
                    "boundary norm can only be derived for 3-dimensional files",
                ));
            }
            let bnorm = if p.boundary_faces().is_empty() {
                Ratio::from_integer(0)
            } else {
                let b = p.boundary().map_err(|e| fail(1, e.to_string()))?;
                let s = surfaces::analyze_surface(&b).map_err(|e| fail(1, e.to_string()))?;
                surfaces::surface_simplicial_volume(&s)
            };
            (3, bnorm)
        }
        (None, Some(dim), Some(b)) => (dim, parse_ratio(b)?),
        _ => {
            return Err(fail(
                2,
                "provide either a triangulation file or both --dim and --boundary-norm",
            ))
        }
    };
    let descriptor = ManifoldDescriptor {
        aspherical: args.aspherical,
        boundary_irreducible: args.boundary_irreducible,
        hyperbolic_geodesic_boundary: args.hyperbolic,
        vol: args.vol,
        ..ManifoldDescriptor::new(dimension, boundary_norm)
    };
    let report = bounds::best_lower_bound(&descriptor).map_err(arg_err)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        return Ok(());
    }
    let value = match report.value.exact() {
        Some(r) => r.to_string(),
        None => sig6(report.value.as_f64()),
    };
    println!("value:      {value}");
    println!("source:     {}", report.source);
    println!("hypotheses: {}", report.hypotheses.join(", "));
    Ok(())
}

fn run_certify(args: CertifyArgs) -> RunResult {
    let p = load(&args.file)?;
    let bnorm = parse_ratio(&args.boundary_norm)?;
    let cert = bounds::counting_certificate(&p, args.degree, bnorm, args.components)
        .map_err(arg_err)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&cert).expect("serializable"));
        return Ok(());
    }
    println!("t profile:          {:?}", cert.t);
    println!("nice / bad edges:   {} / {}", cert.e_nice, cert.e_bad);
    println!("boundary triangles: {}", cert.boundary_triangles);
    println!("dual graph euler:   {}", cert.dual_euler);
    println!("handlebody genus:   {}", cert.genus);
    for i in &cert.inequalities {
        let status = if i.pass { "pass" } else { "FAIL" };
        println!("[{status}] {}   ({} >= {})", i.name, i.lhs, i.rhs);
    }
    println!("all pass:           {}", cert.all_pass);
    Ok(())
}

fn run_hyp(cmd: HypCommand) -> RunResult {
    match cmd {
        HypCommand::Table { max_genus, json } => {
            let rows = hypervol::small_manifold_table(max_genus).map_err(arg_err)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
                return Ok(());
            }
            println!(
                "{:>3} {:>13} {:>10} {:>10} {:>10} {:>10} {:>10}  {:<10} {:>5} {:>5}",
                "g", "boundary_norm", "min_vol", "jungreis", "aspherical", "refined", "best",
                "source", "cmp1", "cmp2"
            );
            for r in rows {
                println!(
                    "{:>3} {:>13} {:>10} {:>10} {:>10} {:>10} {:>10}  {:<10} {:>5} {:>5}",
                    r.g,
                    sig6(r.boundary_norm),
                    sig6(r.min_vol),
                    sig6(r.jungreis),
                    sig6(r.aspherical),
                    sig6(r.refined),
                    sig6(r.best),
                    r.best_source,
                    r.cmp1,
                    r.cmp2
                );
            }
            Ok(())
        }
        HypCommand::Lob { theta, json } => {
            print_value("lobachevsky", hypervol::lobachevsky(theta), json);
            Ok(())
        }
        HypCommand::Tet { angles, json } => {
            if angles.len() != 3 {
                return Err(fail(2, "--angles requires exactly three values a,b,c"));
            }
            let v = hypervol::ideal_tetrahedron_volume(angles[0], angles[1], angles[2])
                .map_err(arg_err)?;
            print_value("volume", v, json);
            Ok(())
        }
        HypCommand::Truncated { genus, json } => {
            let v = hypervol::regular_truncated_volume(genus).map_err(arg_err)?;
            print_value("volume", v, json);
            Ok(())
        }
        HypCommand::Bound {
            vol,
            boundary_norm,
            json,
        } => {
            let v = hypervol::refined_hyperbolic_bound(vol, boundary_norm).map_err(arg_err)?;
            print_value("bound", v, json);
            Ok(())
        }
    }
}

fn print_value(name: &str, value: f64, json: bool) {
    if json {
        println!("{{\"{name}\": {value}}}");
    } else {
        println!("{name}: {}", sig6(value));
    }
}
