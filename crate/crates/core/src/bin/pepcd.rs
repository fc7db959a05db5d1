//! Command-line interface for the PE-PCD library.

use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pepcd::asymptotics;
use pepcd::geometry::{self, equilateral, Point2, Triangle};
use pepcd::graphs::{
    arc_density, edge_density, reflexivity_graph, underlying_graph, EdgeKind, Kind,
    OutsidePolicy, PcdInstance,
};
use pepcd::io;
use pepcd::montecarlo::{self, Geometry, SimConfig};
use pepcd::mtdensity::multi_density;
use pepcd::proximity::{proximity_polygon, Expansion};
use pepcd::spatial::{csr_test, CsrTestOptions};
use pepcd::Error;

#[derive(Parser)]
#[command(name = "pepcd", version, about = "Proportional-edge proximity catch digraphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// RNG seed; falls back to the config file, then PCD_SEED, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker thread cap (identical results at any setting).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// key=value config file supplying defaults for seed and threads.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Use exact geometric predicates (fallback big-rational arithmetic).
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set)]
    exact_predicates: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed-form curves over an r-grid as CSV.
    Curves {
        /// Grid start.
        #[arg(long, default_value_t = 1.0)]
        r_min: f64,
        /// Grid end (inclusive).
        #[arg(long, default_value_t = 5.0)]
        r_max: f64,
        /// Number of grid points.
        #[arg(long, default_value_t = 401)]
        count: usize,
        /// Evaluate exactly these r values instead of a grid.
        #[arg(long, value_delimiter = ',')]
        at: Option<Vec<f64>>,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replicate density statistics under uniform sampling.
    Simulate {
        /// Sample size per replicate.
        #[arg(long)]
        n: usize,
        /// Expansion parameter ("inf" allowed).
        #[arg(long)]
        r: Expansion,
        /// Number of replicates.
        #[arg(long, default_value_t = 1000)]
        reps: usize,
        /// Statistics to compute.
        #[arg(long, value_delimiter = ',', default_values = ["arc", "and", "or"])]
        kind: Vec<Kind>,
        /// "te" or a CSV of anchor points.
        #[arg(long, default_value = "te")]
        geometry: String,
        /// Histogram bin override.
        #[arg(long)]
        bins: Option<usize>,
        /// Write histograms as CSV next to the JSON report.
        #[arg(long)]
        hist_out: Option<PathBuf>,
        /// Dump the sample of replicate 0 as CSV.
        #[arg(long)]
        dump_sample: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Densities of a PCD built from point files.
    Analyze {
        /// Sample points CSV.
        #[arg(long)]
        x: PathBuf,
        /// Anchor points CSV (3 for one triangle, more for Delaunay).
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        r: Expansion,
        /// Drop points outside the hull instead of failing.
        #[arg(long, default_value_t = false)]
        drop_outside: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSR test of the sample against the anchors.
    Test {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        r: Expansion,
        #[arg(long, default_value = "and")]
        kind: EdgeKind,
        /// Attempt the degenerate AND test at r = 1.
        #[arg(long, default_value_t = false)]
        allow_r1_and: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Proximity-region polygon of a point.
    Region {
        #[arg(long)]
        r: f64,
        /// The point, as "x,y".
        #[arg(long)]
        x: String,
        /// Anchor CSV with exactly 3 points; the standard triangle when absent.
        #[arg(long)]
        y: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Delaunay triangulation of a point file as JSON.
    Delaunay {
        /// Site CSV.
        y: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pepcd: {e}");
            match e {
                Error::DegenerateLimit(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read_config(path: Option<&Path>) -> Result<HashMap<String, String>, Error> {
    let mut map = HashMap::new();
    let Some(path) = path else { return Ok(map) };
    for line in std::fs::read_to_string(path)?.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let Some((k, v)) = t.split_once('=') else {
            return Err(Error::Parse(format!("config line {t:?}: expected key=value")));
        };
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn resolve_seed(global: &GlobalArgs, config: &HashMap<String, String>) -> Result<u64, Error> {
    if let Some(s) = global.seed {
        return Ok(s);
    }
    if let Some(v) = config.get("seed") {
        return v.parse().map_err(|_| Error::Parse(format!("config seed {v:?}")));
    }
    if let Ok(v) = std::env::var("PCD_SEED") {
        return v.parse().map_err(|_| Error::Parse(format!("PCD_SEED {v:?}")));
    }
    Ok(0)
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, content)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn parse_point(s: &str) -> Result<Point2, Error> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected \"x,y\", got {s:?}")))?;
    let x: f64 = a.trim().parse().map_err(|_| Error::Parse(format!("bad x {a:?}")))?;
    let y: f64 = b.trim().parse().map_err(|_| Error::Parse(format!("bad y {b:?}")))?;
    Ok(Point2::new(x, y))
}

fn load_geometry(spec: &str) -> Result<Geometry, Error> {
    if spec.eq_ignore_ascii_case("te") {
        return Ok(Geometry::Equilateral);
    }
    let pts = io::read_points_csv(Path::new(spec))?;
    Ok(Geometry::Anchors(pts))
}

fn anchors_triangle(pts: &[Point2]) -> Result<Triangle, Error> {
    if pts.len() != 3 {
        return Err(Error::DegenerateInput(format!("expected 3 anchors, got {}", pts.len())));
    }
    Triangle::new(pts[0], pts[1], pts[2])
}

fn run(cli: Cli) -> Result<(), Error> {
    let config = read_config(cli.global.config.as_deref())?;
    let seed = resolve_seed(&cli.global, &config)?;
    let threads = cli.global.threads.or_else(|| {
        config.get("threads").and_then(|v| v.parse().ok())
    });
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    }
    geometry::set_exact_predicates(cli.global.exact_predicates);

    match cli.command {
        Command::Curves { r_min, r_max, count, at, out } => {
            let grid: Vec<f64> = match at {
                Some(v) => v,
                None => {
                    if !(1.0 <= r_min && r_min <= r_max) || count == 0 {
                        return Err(Error::DomainError(format!(
                            "bad grid [{r_min}, {r_max}] x {count}"
                        )));
                    }
                    (0..count)
                        .map(|k| {
                            if count == 1 {
                                r_min
                            } else {
                                r_min + (r_max - r_min) * k as f64 / (count - 1) as f64
                            }
                        })
                        .collect()
                }
            };
            let mut csv = String::from("r,p_and,p_or,var_and,var_or,nu_and,nu_or\n");
            for r in grid {
                csv.push_str(&format!(
                    "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
                    r,
                    asymptotics::mean_and(r)?,
                    asymptotics::mean_or(r)?,
                    asymptotics::var_kernel_and(r)?,
                    asymptotics::var_kernel_or(r)?,
                    asymptotics::cov_kernel_and(r)?,
                    asymptotics::cov_kernel_or(r)?,
                ));
            }
            emit(out.as_deref(), &csv)
        }
        Command::Simulate { n, r, reps, kind, geometry, bins, hist_out, dump_sample, out } => {
            let cfg = SimConfig {
                geometry: load_geometry(&geometry)?,
                r,
                n,
                replicates: reps,
                seed,
                kinds: kind,
                bins,
            };
            let stats = montecarlo::run_replicates(&cfg)?;
            if let Some(path) = dump_sample {
                let sample = montecarlo::replicate_sample(&cfg, 0)?;
                let mut buf = Vec::new();
                io::write_points_csv(&mut buf, &sample)?;
                std::fs::write(path, buf)?;
            }
            if let Some(path) = hist_out {
                // one file per statistic: bin_left, bin_right, count
                for s in &stats {
                    let target = if stats.len() == 1 {
                        path.clone()
                    } else {
                        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("hist");
                        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("csv");
                        path.with_file_name(format!("{stem}.{}.{ext}", s.kind))
                    };
                    let mut csv = String::from("bin_left,bin_right,count\n");
                    for (k, &c) in s.histogram.counts.iter().enumerate() {
                        csv.push_str(&format!(
                            "{:.16e},{:.16e},{}\n",
                            s.histogram.edges[k],
                            s.histogram.edges[k + 1],
                            c
                        ));
                    }
                    std::fs::write(target, csv)?;
                }
            }
            #[derive(serde::Serialize)]
            struct SimOut<'a> {
                n: usize,
                r: String,
                replicates: usize,
                seed: u64,
                stats: &'a [montecarlo::ReplicateStats],
            }
            let doc = SimOut { n, r: r.to_string(), replicates: reps, seed, stats: &stats };
            emit(out.as_deref(), &format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
        }
        Command::Analyze { x, y, r, drop_outside, out } => {
            let xs = io::read_points_csv(&x)?;
            let ys = io::read_points_csv(&y)?;
            let policy = if drop_outside { OutsidePolicy::Drop } else { OutsidePolicy::Reject };
            let (instance, dropped) = PcdInstance::build(&ys, &xs, r, policy)?;
            let d = instance.adjacency();
            #[derive(serde::Serialize)]
            struct Analysis {
                n: usize,
                r: String,
                m: usize,
                excluded: usize,
                rho_a: f64,
                rho_and: f64,
                rho_or: f64,
                #[serde(skip_serializing_if = "Option::is_none")]
                multi_and: Option<pepcd::mtdensity::MultiDensityReport>,
                #[serde(skip_serializing_if = "Option::is_none")]
                multi_or: Option<pepcd::mtdensity::MultiDensityReport>,
            }
            let multi = instance.triangle_count() > 1;
            let doc = Analysis {
                n: instance.n(),
                r: r.to_string(),
                m: ys.len(),
                excluded: dropped.len(),
                rho_a: arc_density(&d)?,
                rho_and: edge_density(&reflexivity_graph(&d))?,
                rho_or: edge_density(&underlying_graph(&d))?,
                multi_and: multi.then(|| multi_density(&instance, EdgeKind::And)).transpose()?,
                multi_or: multi.then(|| multi_density(&instance, EdgeKind::Or)).transpose()?,
            };
            emit(out.as_deref(), &format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
        }
        Command::Test { x, y, r, kind, allow_r1_and, out } => {
            let xs = io::read_points_csv(&x)?;
            let ys = io::read_points_csv(&y)?;
            let res = csr_test(&xs, &ys, r, kind, CsrTestOptions { allow_and_r1: allow_r1_and })?;
            emit(out.as_deref(), &format!("{}\n", serde_json::to_string_pretty(&res).unwrap()))
        }
        Command::Region { r, x, y, out } => {
            let tri = match y {
                Some(path) => anchors_triangle(&io::read_points_csv(&path)?)?,
                None => equilateral(),
            };
            let p = parse_point(&x)?;
            let poly = proximity_polygon(&tri, r, p)?;
            #[derive(serde::Serialize)]
            struct RegionOut {
                r: f64,
                x: [f64; 2],
                vertices: Vec<[f64; 2]>,
                area: f64,
            }
            let doc = RegionOut {
                r,
                x: [p.x, p.y],
                vertices: poly.vertices.iter().map(|v| [v.x, v.y]).collect(),
                area: poly.area(),
            };
            emit(out.as_deref(), &format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
        }
        Command::Delaunay { y, out } => {
            let sites = io::read_points_csv(&y)?;
            let t = geometry::delaunay(&sites)?;
            emit(out.as_deref(), &format!("{}\n", io::triangulation_to_json(&t)))
        }
    }
}
