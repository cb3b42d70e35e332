//! Command-line front end: family generators, spectrum reports, exact
//! multiplicities, sign partitions, bipartiteness certificates, map
//! analysis, cosine-equation checks, classification sweeps, and a census
//! over directories of map files.
//!
//! Exit codes: 0 on success (including sweeps that print DISAGREE marker
//! lines; CI greps for the marker), 1 on a domain error (the error name is
//! printed), 2 on usage errors.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use eigensign::classify::{self, Family};
use eigensign::cosine::{predicted_solutions, roots1_solutions, SOLUTION_TOL};
use eigensign::families;
use eigensign::graph::Multigraph;
use eigensign::linalg::eigen_multiplicity;
use eigensign::maps::Map;
use eigensign::spectra::{spectrum_report_with, MATCH_TOL};
use eigensign::structure::{both_simple_certificate, contracted_multigraph, sign_partition};

#[derive(Parser)]
#[command(
    name = "eigensign",
    version,
    about = "Exact spectral analysis of cubic graph families and rotation-system maps"
)]
struct Cli {
    /// Tolerance for numeric comparisons; falls back to the EIGENSIGN_TOL
    /// environment variable, then to the per-command default.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family graph as an edge list: f2n N | prism N | gp N K | tm M
    Gen { family: String, params: Vec<usize> },
    /// Spectrum report: exact integer multiplicities plus numeric eigenvalues
    Spectrum { graphfile: String },
    /// Exact multiplicity of an integer eigenvalue
    Mult { graphfile: String, lambda: i64 },
    /// Sign partition for eigenvalue 1: cycle type, matching, contracted multigraph
    Partition { graphfile: String },
    /// Certificate tying simultaneous simplicity of 1 and -1 to bipartiteness
    CertifyBipartite { graphfile: String },
    /// Vertex truncation of a cubic graph
    Truncate { graphfile: String },
    /// Face walks and genus of a rotation-system map
    MapFaces { mapfile: String },
    /// Vertex truncation of a map
    MapTruncate { mapfile: String },
    /// Enumerated vs predicted solutions of the cosine equation for modulus M
    Cosine { m: usize },
    /// Sweep a family predicate against the exact oracle over an inclusive range A..B
    Verify { family: String, range: String },
    /// Census over a directory of map files: one row per map plus its truncation
    Census { dir: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = cli.tol.or_else(|| {
        std::env::var("EIGENSIGN_TOL").ok().and_then(|s| s.parse().ok())
    });
    match run(cli.command, tol) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

enum Outcome {
    Success,
    Usage(String),
}

fn run(command: Command, tol: Option<f64>) -> anyhow::Result<Outcome> {
    match command {
        Command::Gen { family, params } => gen(&family, &params),
        Command::Spectrum { graphfile } => {
            let g = read_graph(&graphfile)?;
            let report = spectrum_report_with(&g, tol.unwrap_or(MATCH_TOL))?;
            print!("{report}");
            Ok(Outcome::Success)
        }
        Command::Mult { graphfile, lambda } => {
            let g = read_graph(&graphfile)?;
            println!("{}", eigen_multiplicity(&g, lambda));
            Ok(Outcome::Success)
        }
        Command::Partition { graphfile } => {
            let g = read_graph(&graphfile)?;
            let p = sign_partition(&g)?;
            print!("{p}");
            println!("contracted:");
            print!("{}", contracted_multigraph(&g, &p).to_edge_list());
            println!("signs:");
            for v in 0..g.vertex_count() {
                println!("{v} {}", if p.vplus.contains(&v) { "+" } else { "-" });
            }
            Ok(Outcome::Success)
        }
        Command::CertifyBipartite { graphfile } => {
            let g = read_graph(&graphfile)?;
            print!("{}", both_simple_certificate(&g)?);
            Ok(Outcome::Success)
        }
        Command::Truncate { graphfile } => {
            let g = read_graph(&graphfile)?;
            print!("{}", families::truncate_cubic(&g)?.to_edge_list());
            Ok(Outcome::Success)
        }
        Command::MapFaces { mapfile } => {
            let m = read_map(&mapfile)?;
            let faces = m.facial_walks();
            println!("vertices: {}", m.vertex_count());
            println!("edges: {}", m.edge_count());
            println!("faces: {}", faces.len());
            println!("genus: {}", m.euler_genus()?);
            let degrees =
                faces.iter().map(|f| f.len().to_string()).collect::<Vec<_>>().join(" ");
            println!("face_degrees: {degrees}");
            for (i, face) in faces.iter().enumerate() {
                let darts =
                    face.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
                println!("face {i}: {darts}");
            }
            Ok(Outcome::Success)
        }
        Command::MapTruncate { mapfile } => {
            let m = read_map(&mapfile)?;
            print!("{}", m.vertex_truncation()?.to_edge_list());
            Ok(Outcome::Success)
        }
        Command::Cosine { m } => {
            let enumerated = roots1_solutions(m, tol.unwrap_or(SOLUTION_TOL));
            let predicted = predicted_solutions(m);
            println!("enumerated: {enumerated}");
            println!("predicted:  {predicted}");
            println!(
                "verdict: {}",
                if enumerated == predicted { "match" } else { "MISMATCH" }
            );
            Ok(Outcome::Success)
        }
        Command::Verify { family, range } => {
            let Ok(family) = Family::parse(&family) else {
                return Ok(Outcome::Usage(format!(
                    "unknown family `{family}` (expected f2n, prism, gp, tm)"
                )));
            };
            let Some((lo, hi)) = parse_range(&range) else {
                return Ok(Outcome::Usage(format!("range `{range}` is not of the form A..B")));
            };
            print!("{}", classify::verify_family(family, lo, hi));
            Ok(Outcome::Success)
        }
        Command::Census { dir } => {
            print!("{}", census(&dir)?);
            Ok(Outcome::Success)
        }
    }
}

fn gen(family: &str, params: &[usize]) -> anyhow::Result<Outcome> {
    let graph = match (family, params) {
        ("f2n", [n]) => families::f2n(*n)?,
        ("prism", [n]) => families::prism(*n)?,
        ("gp", [n, k]) => families::gen_petersen(*n, *k)?,
        ("tm", [m]) => families::t_m(*m)?,
        ("f2n" | "prism" | "tm", _) => {
            return Ok(Outcome::Usage(format!("`gen {family}` takes one parameter")))
        }
        ("gp", _) => return Ok(Outcome::Usage("`gen gp` takes two parameters".into())),
        _ => {
            return Ok(Outcome::Usage(format!(
                "unknown family `{family}` (expected f2n, prism, gp, tm)"
            )))
        }
    };
    print!("{}", graph.to_edge_list());
    Ok(Outcome::Success)
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn read_graph(path: &str) -> anyhow::Result<Multigraph> {
    Ok(Multigraph::parse_edge_list(&read_input(path)?)?)
}

fn read_map(path: &str) -> anyhow::Result<Map> {
    Ok(Map::parse(&read_input(path)?)?)
}

fn parse_range(range: &str) -> Option<(usize, usize)> {
    let (lo, hi) = range.split_once("..")?;
    Some((lo.parse().ok()?, hi.parse().ok()?))
}

/// Constant value of an iterator, `min-max` otherwise.
fn degree_summary(mut it: impl Iterator<Item = usize>) -> String {
    let first = it.next().expect("maps have at least one vertex and face");
    let (mut lo, mut hi) = (first, first);
    for d in it {
        lo = lo.min(d);
        hi = hi.max(d);
    }
    if lo == hi {
        lo.to_string()
    } else {
        format!("{lo}-{hi}")
    }
}

fn census(dir: &Path) -> anyhow::Result<String> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "map"))
        .collect();
    files.sort();
    if files.is_empty() {
        anyhow::bail!("ParseError: no .map files in {}", dir.display());
    }
    let mut out = String::new();
    writeln!(
        out,
        "map |E| |V| |F| orientability genus d(v) d(f) trunc_order mult(1) trunc_bipartite"
    )?;
    for path in &files {
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        match census_row(path) {
            Ok(row) => writeln!(out, "{name} {row}")?,
            Err(err) => writeln!(out, "{name} ERROR {err}")?,
        }
    }
    Ok(out)
}

fn census_row(path: &Path) -> anyhow::Result<String> {
    let map = Map::parse(&std::fs::read_to_string(path)?)?;
    let faces = map.facial_walks();
    let genus = map.euler_genus()?;
    let dv = degree_summary((0..map.vertex_count()).map(|v| map.degree(v)));
    let df = degree_summary(faces.iter().map(Vec::len));
    let trunc = map.vertex_truncation()?;
    let mult = eigen_multiplicity(&trunc, 1);
    let bipartite = if trunc.bipartition().is_some() { "bipartite" } else { "-" };
    Ok(format!(
        "{} {} {} orientable {} {} {} {} {} {}",
        map.edge_count(),
        map.vertex_count(),
        faces.len(),
        genus,
        dv,
        df,
        trunc.vertex_count(),
        mult,
        bipartite
    ))
}
