use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_2;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperfibre::dynamics::{
    extract_sync_clusters, integrate, sweep_frustration, CouplingParams, KuramotoParams,
};
use hyperfibre::freqtune::{assign_frequencies, delta_max, stability_margin};
use hyperfibre::hypergraph::{
    degrees, largest_component, parse_hypergraph, project, write_hyperedge_list, Format,
    ProjectionMode,
};
use hyperfibre::io::{
    edit_report_json, frequencies_csv, order_parameter_csv, parse_partition_json,
    parse_trajectory_csv, partition_json, round_num, stats_csv, sweep_csv, trajectory_csv,
};
use hyperfibre::topoedit::{inject_redundancy, retarget, sparsify, EditConfig, EditReport};
use hyperfibre::{hypergraph_fibres, Error, Hypergraph};
use rand::Rng;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "hyperfibre",
    version,
    about = "Fibres, dynamics and topology edits for hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Node fibres as a partition JSON
    Fibres {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write class statistics as JSON
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Pairwise projection as a hyperedge list
    Project {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Mode::Simple)]
        mode: Mode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integrate the higher-order Kuramoto model
    Simulate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        coupling: CouplingArgs,
        #[command(flatten)]
        initial: InitialArgs,
        #[arg(long, default_value_t = 100.0)]
        tmax: f64,
        /// Phase trajectory CSV
        #[arg(long)]
        trajectory: Option<PathBuf>,
        /// Global and per-fibre order parameters CSV (stdout when no output is given)
        #[arg(long)]
        order: Option<PathBuf>,
    },
    /// Synchrony clusters of a recorded trajectory as a partition JSON
    SyncClusters {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        trajectory: PathBuf,
        #[arg(long, default_value_t = 1e-6)]
        epsilon: f64,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time-averaged global order parameter over a frustration grid
    Sweep {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 0.2)]
        sigma2: f64,
        #[arg(long, default_value_t = 0.6)]
        sigma3: f64,
        #[command(flatten)]
        initial: InitialArgs,
        /// Points per axis, evenly spaced over [0, π/2)
        #[arg(long, default_value_t = 5)]
        grid: usize,
        /// Explicit α₂ values (overrides --grid for that axis)
        #[arg(long, value_delimiter = ',')]
        alpha2: Vec<f64>,
        /// Explicit α₃ values (overrides --grid for that axis)
        #[arg(long, value_delimiter = ',')]
        alpha3: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Remove hyperedge colour groups while keeping fibres and connectivity
    Sparsify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        edit: EditArgs,
        /// Hyperedge indices (0-based, input order) that must stay
        #[arg(long, value_delimiter = ',')]
        protect: Vec<usize>,
    },
    /// Add hyperedges until the fibres match a target partition
    Retarget {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        edit: EditArgs,
        /// Target partition JSON
        #[arg(long)]
        target: PathBuf,
        #[arg(long, default_value_t = 50)]
        max_iter: usize,
    },
    /// Add fibre-preserving redundant hyperedges
    Inject {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        edit: EditArgs,
        /// Number of hyperedges wanted
        #[arg(short = 'k', long)]
        k: usize,
        /// Trial cap
        #[arg(short = 't', long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        retry_limit: usize,
    },
    /// Natural frequencies for global frequency synchronization
    TuneFreq {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        coupling: CouplingArgs,
        #[arg(long, default_value_t = 2.0)]
        omega_target: f64,
        #[arg(long, default_value_t = 0.5)]
        tau: f64,
        /// label,omega CSV (stdout when omitted)
        #[arg(long)]
        omega_out: Option<PathBuf>,
        /// Initial-spread bound JSON (stdout when omitted)
        #[arg(long)]
        bound_out: Option<PathBuf>,
    },
    /// Node count, hyperedge count, nodes per fibre, nontrivial fibres
    Stats {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Simple,
    Multi,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    List,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Hyperedge list (one hyperedge per line) or JSON file
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    /// Drop repeated hyperedges
    #[arg(long)]
    dedup: bool,
    /// Drop order-1 hyperedges
    #[arg(long)]
    drop_singletons: bool,
    /// Keep only the largest connected component
    #[arg(long)]
    largest_component: bool,
}

#[derive(Args)]
struct CouplingArgs {
    #[arg(long, default_value_t = 0.2)]
    sigma2: f64,
    #[arg(long, default_value_t = 0.6)]
    sigma3: f64,
    /// radians
    #[arg(long, default_value_t = 0.0)]
    alpha2: f64,
    /// radians
    #[arg(long, default_value_t = 0.0)]
    alpha3: f64,
}

#[derive(Args)]
struct InitialArgs {
    #[arg(long, default_value_t = 0.1)]
    dt: f64,
    /// Common initial phase
    #[arg(long, default_value_t = 1.0)]
    theta0: f64,
    /// Add a uniform random offset in [0, spread] to every initial phase
    #[arg(long, default_value_t = 0.0)]
    spread: f64,
    /// Common natural frequency
    #[arg(long, default_value_t = 0.0)]
    omega: f64,
    /// Per-node natural frequencies (label,omega CSV as written by tune-freq)
    #[arg(long)]
    omega_file: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct EditArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    n_orders: usize,
    /// Edit report JSON (stdout when omitted)
    #[arg(long)]
    report: Option<PathBuf>,
    /// Resulting hyperedge list
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Input(String),
    Numeric(String),
    NotConverged,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonFiniteState { .. } => Failure::Numeric(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report(Failure::Input(e.to_string().trim().to_string())),
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    let (kind, message, code) = match f {
        Failure::Input(m) => ("input", m, 2),
        Failure::Numeric(m) => ("numeric", m, 4),
        Failure::NotConverged => (
            "not_converged",
            "target partition not reached".to_string(),
            3,
        ),
    };
    eprintln!(
        "{}",
        json!({ "error": { "kind": kind, "message": message } })
    );
    ExitCode::from(code)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Writes via a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Outcome {
    let fail = |e: std::io::Error| Failure::Input(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(fail)?;
    tmp.write_all(contents.as_bytes()).map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}

fn emit(path: Option<&Path>, contents: &str) -> Outcome {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn load(args: &InputArgs) -> Result<Hypergraph, Failure> {
    let text = read(&args.input)?;
    let format = match args.format {
        InputFormat::Auto => Format::detect(&text),
        InputFormat::List => Format::HyperedgeList,
        InputFormat::Json => Format::Json,
    };
    let mut h = parse_hypergraph(&text, format)?;
    if args.dedup {
        h = h.deduplicated();
    }
    if args.drop_singletons {
        h = h.without_singletons();
    }
    if args.largest_component {
        h = largest_component(&h).hypergraph;
    }
    Ok(h)
}

impl CouplingArgs {
    fn params(&self) -> CouplingParams {
        CouplingParams::new(self.sigma2, self.sigma3, self.alpha2, self.alpha3)
    }
}

fn kuramoto(
    h: &Hypergraph,
    coupling: CouplingParams,
    init: &InitialArgs,
    t_max: f64,
) -> Result<KuramotoParams, Failure> {
    let n = h.node_count();
    let mut p =
        KuramotoParams::identical(n, coupling, init.omega, init.theta0, t_max).with_dt(init.dt);
    if init.spread > 0.0 {
        let mut rng = hyperfibre::rng::seeded(init.seed);
        for th in &mut p.theta0 {
            *th += rng.random_range(0.0..=init.spread);
        }
    }
    if let Some(path) = &init.omega_file {
        p.omega = read_frequencies(&read(path)?, h)?;
    }
    Ok(p)
}

fn read_frequencies(text: &str, h: &Hypergraph) -> Result<Vec<f64>, Failure> {
    let index = h.label_index();
    let mut omega = vec![None; h.node_count()];
    for (i, line) in text.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let bad = |reason: &str| Failure::Input(format!("frequency file line {}: {reason}", i + 1));
        let (label, value) = line
            .rsplit_once(',')
            .ok_or_else(|| bad("expected label,omega"))?;
        let node = *index
            .get(label.trim())
            .ok_or_else(|| bad("unknown label"))?;
        omega[node] = Some(
            value
                .trim()
                .parse::<f64>()
                .map_err(|_| bad("not a number"))?,
        );
    }
    omega
        .into_iter()
        .enumerate()
        .map(|(i, w)| {
            w.ok_or_else(|| Failure::Input(format!("no frequency for node {}", h.label(i))))
        })
        .collect()
}

fn edit_outputs(r: &EditReport, args: &EditArgs) -> Outcome {
    emit(args.report.as_deref(), &edit_report_json(r))?;
    if let Some(out) = &args.out {
        write_atomic(out, &write_hyperedge_list(&r.hypergraph))?;
    }
    Ok(())
}

fn edit_config(args: &EditArgs) -> EditConfig {
    EditConfig {
        seed: args.seed,
        n_orders: args.n_orders,
        ..EditConfig::default()
    }
}

fn grid(values: &[f64], points: usize) -> Vec<f64> {
    if values.is_empty() {
        (0..points)
            .map(|k| k as f64 * FRAC_PI_2 / points as f64)
            .collect()
    } else {
        values.to_vec()
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Fibres { input, out, stats } => {
            let h = load(&input)?;
            let r = hypergraph_fibres(&h);
            emit(out.as_deref(), &partition_json(&h, &r.node_partition))?;
            if let Some(path) = stats {
                let s = r.node_partition.stats();
                let body = json!({
                    "nodes": h.node_count(),
                    "hyperedges": h.edge_count(),
                    "fibres": s.class_count,
                    "nodes_per_fibre": round_num(s.avg_class_size),
                    "nontrivial_fibres": s.nontrivial_count,
                    "hyperedge_classes": r.hyperedge_partition.class_count(),
                    "rounds": r.round_count,
                });
                write_atomic(
                    &path,
                    &format!("{}\n", serde_json::to_string_pretty(&body).unwrap()),
                )?;
            }
            Ok(())
        }
        Command::Project { input, mode, out } => {
            let h = load(&input)?;
            let mode = match mode {
                Mode::Simple => ProjectionMode::Simple,
                Mode::Multi => ProjectionMode::Multi,
            };
            emit(out.as_deref(), &write_hyperedge_list(&project(&h, mode)))
        }
        Command::Simulate {
            input,
            coupling,
            initial,
            tmax,
            trajectory,
            order,
        } => {
            let h = load(&input)?;
            let p = kuramoto(&h, coupling.params(), &initial, tmax)?;
            let t = integrate(&h, &p)?;
            let fibres = hypergraph_fibres(&h).node_partition;
            if let Some(path) = &trajectory {
                write_atomic(path, &trajectory_csv(&h, &t))?;
            }
            let order_text = order_parameter_csv(&t, Some(&fibres));
            match (&order, &trajectory) {
                (Some(path), _) => write_atomic(path, &order_text),
                (None, Some(_)) => Ok(()),
                (None, None) => emit(None, &order_text),
            }
        }
        Command::SyncClusters {
            input,
            trajectory,
            epsilon,
            samples,
            seed,
            out,
        } => {
            let h = load(&input)?;
            let t = parse_trajectory_csv(&read(&trajectory)?, &h)?;
            let p = extract_sync_clusters(&t, &degrees(&h), epsilon, samples, seed)?;
            emit(out.as_deref(), &partition_json(&h, &p))
        }
        Command::Sweep {
            input,
            sigma2,
            sigma3,
            initial,
            grid: points,
            alpha2,
            alpha3,
            out,
        } => {
            let h = load(&input)?;
            if points == 0 && (alpha2.is_empty() || alpha3.is_empty()) {
                return Err(Failure::Input("grid needs at least one point".into()));
            }
            let base = kuramoto(
                &h,
                CouplingParams::new(sigma2, sigma3, 0.0, 0.0),
                &initial,
                initial.dt,
            )?;
            let m = sweep_frustration(&h, &grid(&alpha2, points), &grid(&alpha3, points), &base)?;
            emit(out.as_deref(), &sweep_csv(&m))
        }
        Command::Sparsify {
            input,
            edit,
            protect,
        } => {
            let h = load(&input)?;
            if let Some(&bad) = protect.iter().find(|&&e| e >= h.edge_count()) {
                return Err(Failure::Input(format!(
                    "protected index {bad} out of range ({} hyperedges)",
                    h.edge_count()
                )));
            }
            let cfg = EditConfig {
                protected: protect.into_iter().collect::<BTreeSet<_>>(),
                ..edit_config(&edit)
            };
            edit_outputs(&sparsify(&h, &cfg)?, &edit)
        }
        Command::Retarget {
            input,
            edit,
            target,
            max_iter,
        } => {
            let h = load(&input)?;
            let target = parse_partition_json(&read(&target)?, &h)?;
            let cfg = EditConfig {
                max_iter,
                ..edit_config(&edit)
            };
            let r = retarget(&h, &target, &cfg)?;
            edit_outputs(&r, &edit)?;
            if r.converged {
                Ok(())
            } else {
                Err(Failure::NotConverged)
            }
        }
        Command::Inject {
            input,
            edit,
            k,
            trials,
            retry_limit,
        } => {
            let h = load(&input)?;
            let cfg = EditConfig {
                trials,
                retry_limit,
                ..edit_config(&edit)
            };
            edit_outputs(&inject_redundancy(&h, k, &cfg)?, &edit)
        }
        Command::TuneFreq {
            input,
            coupling,
            omega_target,
            tau,
            omega_out,
            bound_out,
        } => {
            let h = load(&input)?;
            let d = degrees(&h);
            let c = coupling.params();
            let a = assign_frequencies(&d, omega_target, &c);
            let b = delta_max(&d, tau, &c)?;
            let s = stability_margin(c.alpha2, c.alpha3);
            let kappa: serde_json::Map<String, serde_json::Value> = (0..h.node_count())
                .map(|i| (h.label(i), json!(round_num(b.kappa[i]))))
                .collect();
            let body = json!({
                "tau": round_num(b.tau),
                "delta_max": round_num(b.delta_max),
                "kappa": kappa,
                "cos_alpha2": round_num(s.cos2),
                "cos_alpha3": round_num(s.cos3),
                "stable": s.stable,
            });
            emit(omega_out.as_deref(), &frequencies_csv(&h, &a.omega))?;
            emit(
                bound_out.as_deref(),
                &format!("{}\n", serde_json::to_string_pretty(&body).unwrap()),
            )
        }
        Command::Stats { input, out } => {
            let h = load(&input)?;
            let s = hypergraph_fibres(&h).node_partition.stats();
            emit(out.as_deref(), &stats_csv(&h, &s))
        }
    }
}
