//! Command-line driver: builds point sets, runs the exact solver,
//! applies the lifting and augmentation constructions, checks tilings,
//! and renders SVG drawings. All results go to stdout as JSON.
//!
//! Exit codes: 0 affirmative, 1 verified negative verdict, 2 input
//! error, 3 resource or budget exhaustion.

mod manifest;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chromalift::chroma::{self, SolveOptions, DEFAULT_NODE_BUDGET};
use chromalift::geometry::{self, NormSpec};
use chromalift::geomfam::{
    self, builtin_points, BuiltinPointSet, CongruenceMode, GonSet, WitnessOptions,
    WitnessStrategy,
};
use chromalift::hypergraph::{Coloring, Hypergraph};
use chromalift::io;
use chromalift::lift::{self, LiftOptions};
use chromalift::tiling::{self, PeriodicColoring};
use chromalift::{Error, Result};

use manifest::Recorder;

const NODE_BUDGET_ENV: &str = "CHROMALIFT_NODE_BUDGET";

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "chromalift", version, about = "Geometric hypergraph workbench")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Worker threads for sampling verifiers (solver is single-threaded).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Solver node budget; overrides CHROMALIFT_NODE_BUDGET and the
    /// built-in default.
    #[arg(long, global = true)]
    node_budget: Option<u64>,

    /// Absolute tolerance for distance comparisons.
    #[arg(long, global = true, default_value_t = chromalift::DEFAULT_TOL)]
    tol: f64,

    /// Write a run manifest (digests, seed, solver stats) to this path.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dimacs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Euclidean,
    Translation,
}

impl From<Mode> for CongruenceMode {
    fn from(m: Mode) -> CongruenceMode {
        match m {
            Mode::Euclidean => CongruenceMode::Euclidean,
            Mode::Translation => CongruenceMode::Translation,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named point set and its unit-distance hypergraph.
    Build {
        /// moser-spindle, golomb, unit-simplex(d), triangular-lattice(r),
        /// or integer-grid(w,h).
        #[arg(long)]
        set: String,
        #[arg(long, default_value = "l2")]
        norm: String,
        /// Write the hypergraph here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the bare point set here.
        #[arg(long)]
        points_out: Option<PathBuf>,
        /// Hypergraph output format; dimacs drops coordinates.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exact chromatic number with a witness coloring.
    Chi {
        #[arg(long)]
        input: PathBuf,
    },
    /// Decide k-colorability; exit 1 if infeasible.
    Kcolor {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Check a coloring file for properness; exit 1 on a
    /// monochromatic edge.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Raise uniformity to target-m via chromatic-number-preserving
    /// lifts; write the chain as numbered files.
    Lift {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        target_m: usize,
        /// Directory for the numbered stage files.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Re-solve chi at every stage and record the verdicts.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = lift::DEFAULT_EDGE_CAP)]
        edge_cap: u64,
    },
    /// Instantiate a gon family over a finite point window.
    Instantiate {
        #[arg(long)]
        gons: PathBuf,
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value = "l2")]
        norm: String,
        #[arg(long, value_enum, default_value_t = Mode::Euclidean)]
        mode: Mode,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The m-subsets-containing-a-unit-pair hypergraph on a point set.
    Gm {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "l2")]
        norm: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Widen every edge by all t-subsets of the remaining vertices and
    /// report the chromatic numbers of both hypergraphs.
    AugmentT {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One gon-augmentation step: add X ∪ {z} for gons X and window
    /// points z.
    AugmentGons {
        /// Existing (m+1)-gon set S_j; omitted means empty.
        #[arg(long)]
        sj: Option<PathBuf>,
        #[arg(long)]
        gons: PathBuf,
        /// The window F_j.
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a finite window forcing chi >= k; exit 1 when the
    /// budget runs out without one.
    Witness {
        #[arg(long)]
        gons: PathBuf,
        #[arg(long)]
        k: usize,
        /// library, lattice, or random-augment.
        #[arg(long, default_value = "library")]
        strategy: String,
        #[arg(long)]
        seed: u64,
        /// Total solver node budget across candidates.
        #[arg(long)]
        budget: Option<u64>,
        /// Write the found point set here.
        #[arg(long)]
        points_out: Option<PathBuf>,
        /// Write the certified hypergraph here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Derive (or override) periodic tiling parameters; optionally
    /// render one period as SVG.
    Tile {
        #[arg(long, default_value = "l2")]
        norm: String,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0.99)]
        safety: f64,
        /// Explicit cell size; requires --m and skips derivation.
        #[arg(long, requires = "m")]
        eps: Option<f64>,
        /// Explicit modulus; requires --eps.
        #[arg(long, requires = "eps")]
        m: Option<u32>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Sample unit-distance pairs against a tiling coloring; exit 1 on
    /// any violation.
    VerifyTiling {
        #[arg(long, default_value = "l2")]
        norm: String,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0.99)]
        safety: f64,
        #[arg(long, requires = "m")]
        eps: Option<f64>,
        #[arg(long, requires = "eps")]
        m: Option<u32>,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Test two point-set files for congruence; exit 1 if incongruent.
    Congruent {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Euclidean)]
        mode: Mode,
    },
    /// Draw an embedded planar hypergraph or a tiling period as SVG.
    Render {
        /// Hypergraph file or tiling-parameter file.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().collect();
    let mut rec = Recorder::new(cli.threads.max(1));
    match run(&cli, &mut rec) {
        Ok((value, affirmative)) => {
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
            if let Some(path) = &cli.manifest {
                if let Err(e) = rec.write(path, &argv) {
                    eprintln!("error: cannot write manifest: {e}");
                    return ExitCode::from(EXIT_INPUT);
                }
            }
            if affirmative {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_NEGATIVE)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Resource(_) | Error::BudgetExhausted { .. } => {
                    ExitCode::from(EXIT_RESOURCE)
                }
                _ => ExitCode::from(EXIT_INPUT),
            }
        }
    }
}

fn solve_options(cli: &Cli) -> SolveOptions {
    let from_env = std::env::var(NODE_BUDGET_ENV)
        .ok()
        .and_then(|s| s.parse().ok());
    SolveOptions {
        node_budget: cli.node_budget.or(from_env).unwrap_or(DEFAULT_NODE_BUDGET),
        symmetry_breaking: true,
    }
}

fn parse_norm(s: &str) -> Result<NormSpec> {
    let lower = s.to_ascii_lowercase();
    match lower.as_str() {
        "linf" | "lmax" | "max" => return Ok(NormSpec::Linf),
        "l1" => return Ok(NormSpec::L1),
        "l2" => return Ok(NormSpec::L2),
        _ => {}
    }
    if let Some(p) = lower.strip_prefix('l').and_then(|p| p.parse::<f64>().ok()) {
        let norm = NormSpec::Lp(p);
        norm.validate()?;
        return Ok(norm);
    }
    Err(Error::invalid(format!(
        "unknown norm {s:?}; expected l1, l2, l<p>, or linf"
    )))
}

fn coloring_json(phi: &Coloring) -> Value {
    json!({ "m": phi.m, "colors": phi.colors })
}

fn write_hypergraph_as(path: &Path, h: &Hypergraph, format: Format) -> Result<()> {
    match format {
        Format::Json => io::write_hypergraph(path, h),
        Format::Dimacs => {
            let file = std::fs::File::create(path)?;
            io::write_dimacs(std::io::BufWriter::new(file), h)
        }
    }
}

fn tiling_from_flags(
    norm: &str,
    d: usize,
    safety: f64,
    eps: Option<f64>,
    m: Option<u32>,
) -> Result<PeriodicColoring> {
    let norm = parse_norm(norm)?;
    match (eps, m) {
        (Some(eps), Some(m)) => PeriodicColoring::new_unchecked(norm, d, eps, m),
        _ => tiling::tiling_params(norm, d, safety),
    }
}

fn run(cli: &Cli, rec: &mut Recorder) -> Result<(Value, bool)> {
    let solve = solve_options(cli);
    match &cli.cmd {
        Cmd::Build {
            set,
            norm,
            out,
            points_out,
            format,
        } => {
            let set: BuiltinPointSet = set.parse()?;
            let norm = parse_norm(norm)?;
            let points = builtin_points(&set)?;
            let h = Hypergraph::unit_distance(points.clone(), norm, cli.tol)?;
            if let Some(path) = points_out {
                io::write_points(path, &points)?;
                rec.output(path)?;
            }
            if let Some(path) = out {
                write_hypergraph_as(path, &h, *format)?;
                rec.output(path)?;
            }
            let value = json!({
                "n": h.n(),
                "d": h.dim(),
                "edges": h.edges().len(),
            });
            rec.verdict("built", value.clone());
            Ok((value, true))
        }

        Cmd::Chi { input } => {
            rec.input(input)?;
            let h = io::read_hypergraph(input)?;
            let out = chroma::chromatic_number(&h, &solve)?;
            rec.solver_nodes += out.nodes;
            rec.verdict("chi", json!(out.chi));
            let value = json!({
                "chi": out.chi,
                "witness": coloring_json(&out.witness),
                "nodes": out.nodes,
            });
            Ok((value, true))
        }

        Cmd::Kcolor { input, k } => {
            rec.input(input)?;
            let h = io::read_hypergraph(input)?;
            let out = chroma::k_colorable(&h, *k, &solve)?;
            rec.solver_nodes += out.nodes;
            let feasible = out.witness.is_some();
            rec.verdict("feasible", json!(feasible));
            let value = json!({
                "k": k,
                "feasible": feasible,
                "witness": out.witness.as_ref().map(coloring_json),
                "nodes": out.nodes,
            });
            Ok((value, feasible))
        }

        Cmd::Check { input, coloring } => {
            rec.input(input)?;
            rec.input(coloring)?;
            let h = io::read_hypergraph(input)?;
            let phi: Coloring = io::read_json(coloring)?;
            let bad = chroma::first_monochromatic_edge(&h, &phi)?;
            let proper = bad.is_none();
            rec.verdict("proper", json!(proper));
            let value = json!({
                "proper": proper,
                "monochromatic_edge": bad,
            });
            Ok((value, proper))
        }

        Cmd::Lift {
            input,
            target_m,
            out,
            verify,
            edge_cap,
        } => {
            rec.input(input)?;
            let h = io::read_hypergraph(input)?;
            let opts = LiftOptions {
                verify_k: false,
                edge_cap: *edge_cap,
                solve,
                tol: cli.tol,
                ..LiftOptions::default()
            };
            let chain = lift::iterated_lift(&h, *target_m, &opts)?;
            let mut stages = Vec::new();
            for (idx, stage) in chain.stages.iter().enumerate() {
                rec.solver_nodes += stage.solver_nodes;
                let mut entry = json!({
                    "k": stage.k,
                    "n": stage.lifted.n(),
                    "edges": stage.lifted.edges().len(),
                    "uniformity": stage.lifted.uniformity(),
                });
                if *verify {
                    let chi = chroma::chromatic_number(&stage.lifted, &solve)?;
                    rec.solver_nodes += chi.nodes;
                    entry["chi"] = json!(chi.chi);
                }
                if let Some(dir) = out {
                    std::fs::create_dir_all(dir)?;
                    let path = dir.join(format!("lift-{}.json", idx + 1));
                    io::write_hypergraph(&path, &stage.lifted)?;
                    rec.output(&path)?;
                }
                stages.push(entry);
            }
            if let Some(err) = chain.truncated {
                return Err(err);
            }
            let value = json!({ "stages": stages, "verified": verify });
            rec.verdict("lift", value.clone());
            Ok((value, true))
        }

        Cmd::Instantiate {
            gons,
            points,
            norm,
            mode,
            out,
            format,
        } => {
            rec.input(gons)?;
            rec.input(points)?;
            let m_set = io::read_gonset(gons)?;
            let f = io::read_points(points)?;
            let norm = parse_norm(norm)?;
            let h = geomfam::instantiate(&m_set, &f, norm, (*mode).into(), cli.tol)?;
            if let Some(path) = out {
                write_hypergraph_as(path, &h, *format)?;
                rec.output(path)?;
            }
            let value = json!({ "n": h.n(), "edges": h.edges().len(), "m": m_set.m() });
            rec.verdict("instantiated", value.clone());
            Ok((value, true))
        }

        Cmd::Gm {
            points,
            m,
            norm,
            out,
        } => {
            rec.input(points)?;
            let pts = io::read_points(points)?;
            let norm = parse_norm(norm)?;
            let h = geomfam::gm_hypergraph(&pts, norm, *m, cli.tol)?;
            if let Some(path) = out {
                io::write_hypergraph(path, &h)?;
                rec.output(path)?;
            }
            let value = json!({ "n": h.n(), "m": m, "edges": h.edges().len() });
            rec.verdict("gm", value.clone());
            Ok((value, true))
        }

        Cmd::AugmentT { input, t, out } => {
            rec.input(input)?;
            let h0 = io::read_hypergraph(input)?;
            let ht = geomfam::augment_t(&h0, *t)?;
            let chi0 = chroma::chromatic_number(&h0, &solve)?;
            let chi_t = chroma::chromatic_number(&ht, &solve)?;
            rec.solver_nodes += chi0.nodes + chi_t.nodes;
            if let Some(path) = out {
                io::write_hypergraph(path, &ht)?;
                rec.output(path)?;
            }
            let value = json!({
                "t": t,
                "edges": ht.edges().len(),
                "chi_original": chi0.chi,
                "chi_augmented": chi_t.chi,
            });
            rec.verdict("augment-t", value.clone());
            Ok((value, true))
        }

        Cmd::AugmentGons {
            sj,
            gons,
            points,
            out,
        } => {
            rec.input(gons)?;
            rec.input(points)?;
            let m_set = io::read_gonset(gons)?;
            let f = io::read_points(points)?;
            let sj = match sj {
                Some(path) => {
                    rec.input(path)?;
                    io::read_gonset(path)?
                }
                None => GonSet::new(m_set.d(), m_set.m() + 1, vec![])?,
            };
            let next = geomfam::augment_gons(&sj, &m_set, &f, cli.tol)?;
            if let Some(path) = out {
                io::write_gonset(path, &next)?;
                rec.output(path)?;
            }
            let value = json!({
                "gons_before": sj.gons().len(),
                "gons_after": next.gons().len(),
                "cardinality": next.m(),
            });
            rec.verdict("augment-gons", value.clone());
            Ok((value, true))
        }

        Cmd::Witness {
            gons,
            k,
            strategy,
            seed,
            budget,
            points_out,
            out,
        } => {
            rec.input(gons)?;
            rec.seed = Some(*seed);
            let m_set = io::read_gonset(gons)?;
            let strategy: WitnessStrategy = strategy.parse()?;
            let opts = WitnessOptions {
                budget: budget.unwrap_or(WitnessOptions::default().budget),
                seed: *seed,
                tol: cli.tol,
            };
            let found = geomfam::witness_search(&m_set, *k, strategy, &opts)?;
            match found {
                Some(w) => {
                    rec.solver_nodes += w.solver_nodes;
                    if let Some(path) = points_out {
                        io::write_points(path, &w.points)?;
                        rec.output(path)?;
                    }
                    if let Some(path) = out {
                        io::write_hypergraph(path, &w.hypergraph)?;
                        rec.output(path)?;
                    }
                    let value = json!({
                        "found": true,
                        "target_k": w.target_k,
                        "n": w.points.len(),
                        "edges": w.hypergraph.edges().len(),
                        "nodes": w.solver_nodes,
                    });
                    rec.verdict("witness", value.clone());
                    Ok((value, true))
                }
                None => {
                    let value = json!({ "found": false, "target_k": k });
                    rec.verdict("witness", value.clone());
                    Ok((value, false))
                }
            }
        }

        Cmd::Tile {
            norm,
            d,
            safety,
            eps,
            m,
            svg,
        } => {
            let pc = tiling_from_flags(norm, *d, *safety, *eps, *m)?;
            if let Some(path) = svg {
                std::fs::write(path, render::tiling_svg(&pc)?)?;
                rec.output(path)?;
            }
            let value = json!({
                "norm": pc.norm,
                "d": pc.d,
                "eps": pc.eps,
                "m": pc.m,
                "colors": pc.color_count(),
                "valid": pc.is_valid(),
            });
            rec.verdict("tile", value.clone());
            Ok((value, pc.is_valid()))
        }

        Cmd::VerifyTiling {
            norm,
            d,
            safety,
            eps,
            m,
            samples,
            seed,
        } => {
            rec.seed = Some(*seed);
            let pc = tiling_from_flags(norm, *d, *safety, *eps, *m)?;
            let report = tiling::verify_forbids(&pc, *samples, *seed, cli.threads.max(1))?;
            let clean = report.violations == 0;
            rec.verdict("violations", json!(report.violations));
            let value = serde_json::to_value(&report)?;
            Ok((value, clean))
        }

        Cmd::Congruent { a, b, mode } => {
            rec.input(a)?;
            rec.input(b)?;
            let xs = io::read_points(a)?;
            let ys = io::read_points(b)?;
            let (congruent, mapping) = match mode {
                Mode::Euclidean => {
                    let mapping = geometry::congruent_euclidean(&xs, &ys, cli.tol)?;
                    (mapping.is_some(), mapping)
                }
                Mode::Translation => {
                    (geomfam::translation_congruent(&xs, &ys, cli.tol)?, None)
                }
            };
            rec.verdict("congruent", json!(congruent));
            let value = json!({ "congruent": congruent, "mapping": mapping });
            Ok((value, congruent))
        }

        Cmd::Render { input, out } => {
            rec.input(input)?;
            let raw: Value = io::read_json(input)?;
            let svg = if raw.get("edges").is_some() {
                render::hypergraph_svg(&io::read_hypergraph(input)?)?
            } else if raw.get("eps").is_some() {
                render::tiling_svg(&serde_json::from_value::<PeriodicColoring>(raw)?)?
            } else {
                return Err(Error::invalid(
                    "input is neither a hypergraph nor a tiling-parameter file",
                ));
            };
            std::fs::write(out, svg)?;
            rec.output(out)?;
            let value = json!({ "out": out });
            rec.verdict("rendered", json!(true));
            Ok((value, true))
        }
    }
}
