use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use flatcurve::reduction::{
    bounds_report_curve, bounds_report_graph, reduce_curve, reduce_graph, site_label, Family, Strategy,
};
use flatcurve::{
    apply_move, connected_sum, cylindrical_grid, defect_polyak, defect_report, enumerate_moves,
    expected_c2_exhaustive, expected_c2_monte_carlo, predict_delta, random_curve, rectangular_grid, torus_knot,
    CurveMap, MoveKind, PlaneGraph,
};

mod check;
mod render;
mod table;

#[derive(Parser)]
#[command(name = "flatcurve", version, about = "Generic plane curves: defect, homotopy moves, electrical reduction")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a curve or plane graph as CMAP text.
    Gen {
        #[command(subcommand)]
        what: Gen,
        #[arg(short, long, default_value = "-")]
        out: String,
    },
    /// Defect of a curve as JSON.
    Defect {
        file: String,
        /// Include the winding formula and per-crossing diagnostics.
        #[arg(long)]
        report: bool,
    },
    /// List applicable moves with their defect change.
    Moves {
        file: String,
        /// Comma-separated kinds such as `1->0,2->0`; all kinds by default.
        #[arg(long, value_delimiter = ',')]
        kinds: Vec<MoveKind>,
    },
    /// Reduce a curve to the circle.
    Reduce {
        file: String,
        #[arg(long, default_value = "homotopy")]
        family: Family,
        #[arg(long, default_value = "greedy")]
        strategy: Strategy,
        /// Write the move trace as JSON.
        #[arg(long)]
        trace: Option<String>,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Reduce a plane graph to a single vertex by electrical transformations.
    Ereduce {
        file: String,
        #[arg(long, default_value = "greedy")]
        strategy: Strategy,
        #[arg(long)]
        trace: Option<String>,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Defect lower bound against an achieved reduction, for a curve or graph.
    Bounds {
        file: String,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Medial curve of a plane graph.
    Medial {
        file: String,
        #[arg(short, long, default_value = "-")]
        out: String,
    },
    /// Dual of a plane graph.
    Dual {
        file: String,
        #[arg(short, long, default_value = "-")]
        out: String,
    },
    /// Expected Casson invariant of a random diagram over a curve.
    Casson {
        file: String,
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run invariant checks over the built-in corpus.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        suite: check::Suite,
    },
    /// Draw a curve as SVG.
    Render {
        file: String,
        #[arg(short, long, default_value = "-")]
        out: String,
        /// Omit winding-number labels.
        #[arg(long)]
        no_labels: bool,
    },
    /// Print a verification table as TSV.
    Table { which: TableKind },
}

#[derive(Subcommand)]
enum Gen {
    Torus { p: usize, q: usize },
    Cylgrid { p: usize, q: usize },
    Grid { p: usize, q: usize },
    Random {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Sum { a: String, b: String },
}

#[derive(Copy, Clone, ValueEnum)]
enum TableKind {
    Torus,
    Grids,
}

/// Arguments that parse but make no sense; reported with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn write_output(path: &str, text: &str) -> anyhow::Result<()> {
    if path == "-" {
        io::stdout().write_all(text.as_bytes())?;
        Ok(())
    } else {
        fs::write(path, text).with_context(|| format!("writing {path}"))
    }
}

fn load_curve(path: &str) -> anyhow::Result<CurveMap> {
    let text = read_input(path)?;
    CurveMap::parse_cmap(&text).with_context(|| format!("{path}: not a curve map"))
}

fn load_graph(path: &str) -> anyhow::Result<PlaneGraph> {
    let text = read_input(path)?;
    PlaneGraph::parse_cmap(&text).with_context(|| format!("{path}: not a plane graph"))
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn default_budget(n: usize) -> usize {
    5 * n * n + 16
}

fn usage_or<T>(r: flatcurve::Result<T>) -> anyhow::Result<T> {
    r.map_err(|e| match e {
        flatcurve::Error::InvalidArguments(msg) => anyhow::Error::new(Usage(msg)),
        e => e.into(),
    })
}

#[derive(Serialize)]
struct MoveRow {
    kind: MoveKind,
    face: String,
    delta: Option<i64>,
}

#[derive(Serialize)]
struct ReduceSummary {
    family: Family,
    n: usize,
    moves: usize,
    complete: bool,
    final_n: usize,
}

#[derive(Serialize)]
struct EreduceSummary {
    edges: usize,
    moves: usize,
    complete: bool,
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Gen { what, out } => {
            let text = match what {
                Gen::Torus { p, q } => {
                    if p == 0 || q == 0 {
                        bail!(Usage("torus knot needs p, q >= 1".into()));
                    }
                    torus_knot(p, q).to_cmap()
                }
                Gen::Cylgrid { p, q } => usage_or(cylindrical_grid(p, q))?.to_cmap(),
                Gen::Grid { p, q } => usage_or(rectangular_grid(p, q))?.to_cmap(),
                Gen::Random { n, seed } => random_curve(n, seed).to_cmap(),
                Gen::Sum { a, b } => {
                    if a == "-" && b == "-" {
                        bail!(Usage("only one input may be stdin".into()));
                    }
                    connected_sum(&load_curve(&a)?, &load_curve(&b)?)?.to_cmap()
                }
            };
            write_output(&out, &text)?;
        }
        Cmd::Defect { file, report } => {
            let curve = load_curve(&file)?;
            if report {
                print!("{}", json(&defect_report(&curve)?)?);
            } else {
                let polyak = defect_polyak(&curve)?;
                print!("{}", json(&serde_json::json!({ "n": curve.vertex_count(), "polyak": polyak }))?);
            }
        }
        Cmd::Moves { file, kinds } => {
            let curve = load_curve(&file)?;
            let kinds = if kinds.is_empty() { MoveKind::ALL.to_vec() } else { kinds };
            let single = curve.is_unicursal();
            let before = if single { Some(defect_polyak(&curve)?) } else { None };
            let mut rows = Vec::new();
            for site in enumerate_moves(&curve, &kinds) {
                let delta = match predict_delta(&curve, &site) {
                    Ok(d) if single => Some(d),
                    _ => match before {
                        Some(b) => Some(defect_polyak(&apply_move(&curve, &site)?)? - b),
                        None => None,
                    },
                };
                rows.push(MoveRow {
                    kind: site.kind(),
                    face: site_label(&curve, &site),
                    delta,
                });
            }
            print!("{}", json(&rows)?);
        }
        Cmd::Reduce {
            file,
            family,
            strategy,
            trace,
            max_steps,
        } => {
            let curve = load_curve(&file)?;
            let budget = max_steps.unwrap_or_else(|| default_budget(curve.vertex_count()));
            let t = reduce_curve(&curve, family, strategy, budget)?;
            t.replay().context("trace replay")?;
            if let Some(path) = trace {
                write_output(&path, &json(&t.records())?)?;
            }
            print!(
                "{}",
                json(&ReduceSummary {
                    family,
                    n: curve.vertex_count(),
                    moves: t.len(),
                    complete: t.complete,
                    final_n: t.final_map.vertex_count(),
                })?
            );
            if !t.complete {
                eprintln!("step budget of {budget} exhausted");
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Ereduce {
            file,
            strategy,
            trace,
            max_steps,
        } => {
            let g = load_graph(&file)?;
            let budget = max_steps.unwrap_or_else(|| default_budget(g.edge_count()));
            let t = reduce_graph(&g, strategy, budget)?;
            t.replay().context("trace replay")?;
            if let Some(path) = trace {
                write_output(&path, &json(&t.steps)?)?;
            }
            print!(
                "{}",
                json(&EreduceSummary {
                    edges: g.edge_count(),
                    moves: t.len(),
                    complete: t.complete,
                })?
            );
            if !t.complete {
                eprintln!("step budget of {budget} exhausted");
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Bounds { file, max_steps } => {
            let text = read_input(&file)?;
            let report = match CurveMap::parse_cmap(&text) {
                Ok(c) => bounds_report_curve(&c, max_steps.unwrap_or_else(|| default_budget(c.vertex_count())))?,
                Err(curve_err) => {
                    let g = PlaneGraph::parse_cmap(&text)
                        .map_err(|_| curve_err)
                        .with_context(|| format!("{file}: neither a curve map nor a plane graph"))?;
                    bounds_report_graph(&g, max_steps.unwrap_or_else(|| default_budget(g.edge_count())))?
                }
            };
            print!("{}", json(&report)?);
        }
        Cmd::Medial { file, out } => write_output(&out, &load_graph(&file)?.medial().to_cmap())?,
        Cmd::Dual { file, out } => write_output(&out, &load_graph(&file)?.dual().to_cmap())?,
        Cmd::Casson {
            file,
            exhaustive: _,
            samples,
            seed,
        } => {
            let curve = load_curve(&file)?;
            match samples {
                Some(k) => {
                    let mc = usage_or(expected_c2_monte_carlo(&curve, k, seed))?;
                    print!("{}", json(&mc)?);
                }
                None => print!("{}", json(&expected_c2_exhaustive(&curve)?)?),
            }
        }
        Cmd::Check { suite } => {
            let failures = check::run(suite);
            if failures > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Render { file, out, no_labels } => {
            let curve = load_curve(&file)?;
            write_output(&out, &render::svg(&curve, !no_labels)?)?;
        }
        Cmd::Table { which } => match which {
            TableKind::Torus => print!("{}", table::torus()),
            TableKind::Grids => print!("{}", table::grids()?),
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
