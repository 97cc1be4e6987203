//! `fdvrp` — command-line surface of the FoodDeliveryVRP benchmark toolkit.
//!
//! Subcommands cover the whole pipeline: `validate` a street model,
//! `generate` benchmark instances from a spec list, `solve` them with the
//! baseline heuristics, `evaluate` solution files, `render` SVG pictures
//! and export the `distances` matrix.
//!
//! Exit codes: 0 success, 1 validation/feasibility failure (bad checksum,
//! disconnected sites, infeasible solution), 2 I/O or parse failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use fdvrp::heuristics::{cluster_nearest_depot, improve, SolverConfig};
use fdvrp::instgen::{generate, parse_instance, parse_instances, write_instance, Instance};
use fdvrp::render::{render_instance, render_map, render_solution};
use fdvrp::routing::{build_oracle, write_matrix, DistanceOracle};
use fdvrp::solution::{objectives, parse_solution, validate, write_solution, Solution, Token};
use fdvrp::streetmap::{build_graph, parse_model, px_to_hours, street_weight, MapModel};
use fdvrp::Error;

#[derive(Parser)]
#[command(name = "fdvrp", version, about = "FoodDeliveryVRP benchmark toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a street model and report its structure.
    Validate {
        /// Street model file (model.txt format).
        #[arg(long)]
        model: PathBuf,
    },
    /// Generate instance files from an instance spec list.
    Generate {
        #[arg(long)]
        model: PathBuf,
        /// Instance list: `name deliveries depots max_vehicles seed [r_max]`.
        #[arg(long)]
        instances: PathBuf,
        /// Output directory for the generated `<name>.instance.txt` files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Replace every spec's seed (for sensitivity experiments).
        #[arg(long)]
        seed_override: Option<u64>,
    },
    /// Solve an instance with a baseline heuristic and report timing.
    Solve {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        instance: PathBuf,
        /// Baseline: cluster, cluster+2opt or cluster+3opt.
        #[arg(long, value_enum, default_value_t = Algo::Cluster2Opt)]
        algo: Algo,
        /// Timing repetitions (the solution itself is deterministic).
        #[arg(long, default_value_t = 5)]
        runs: usize,
        /// Solution file path (default: derived from the instance path).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a solution file: objectives and feasibility.
    Evaluate {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        solution: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Render the map (optionally with sites and routes) to SVG.
    Render {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        instance: Option<PathBuf>,
        /// Requires --instance.
        #[arg(long, requires = "instance")]
        solution: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Export the site-to-site travel distance matrix.
    Distances {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    #[value(name = "cluster")]
    Cluster,
    #[value(name = "cluster+2opt")]
    Cluster2Opt,
    #[value(name = "cluster+3opt")]
    Cluster3Opt,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Cluster => "cluster",
            Algo::Cluster2Opt => "cluster+2opt",
            Algo::Cluster3Opt => "cluster+3opt",
        }
    }

    fn config(self) -> Option<SolverConfig> {
        match self {
            Algo::Cluster => None,
            Algo::Cluster2Opt => Some(SolverConfig::two_opt()),
            Algo::Cluster3Opt => Some(SolverConfig::three_opt()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

/// A failed command: message plus process exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn infeasible(msg: String) -> Failure {
        Failure { code: 1, msg }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::ModelParse { .. }
            | Error::InstanceListParse { .. }
            | Error::InstanceParse { .. }
            | Error::SolutionParse { .. }
            | Error::MatrixParse { .. } => 2,
            Error::ChecksumMismatch { .. }
            | Error::AllWeightsZero
            | Error::DisconnectedSites(_)
            | Error::SampleRetriesExhausted { .. }
            | Error::UnreachablePair => 1,
        };
        Failure { code, msg: err.to_string() }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        msg: format!("{}: {e}", path.display()),
    })
}

fn write(path: &Path, content: &str) -> Result<(), Failure> {
    std::fs::write(path, content).map_err(|e| Failure {
        code: 2,
        msg: format!("{}: {e}", path.display()),
    })
}

fn load_model(path: &Path) -> Result<MapModel, Failure> {
    Ok(parse_model(&read(path)?)?)
}

fn load_instance(path: &Path, model: &MapModel) -> Result<Instance, Failure> {
    Ok(parse_instance(&read(path)?, model)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate { model } => cmd_validate(&model),
        Command::Generate { model, instances, out, seed_override } => {
            cmd_generate(&model, &instances, &out, seed_override)
        }
        Command::Solve { model, instance, algo, runs, out, format } => {
            cmd_solve(&model, &instance, algo, runs, out, format)
        }
        Command::Evaluate { model, instance, solution, format } => {
            cmd_evaluate(&model, &instance, &solution, format)
        }
        Command::Render { model, instance, solution, out } => {
            cmd_render(&model, instance.as_deref(), solution.as_deref(), &out)
        }
        Command::Distances { model, instance, out } => cmd_distances(&model, &instance, &out),
    }
}

fn cmd_validate(model_path: &Path) -> Result<(), Failure> {
    let model = load_model(model_path)?;
    let graph = build_graph(&model);
    let components = graph.num_components();
    println!(
        "{} streets, {} component{}",
        model.streets.len(),
        components,
        if components == 1 { "" } else { "s" }
    );
    let total: f64 = model.streets.iter().map(fdvrp::streetmap::chain_length).sum();
    println!("total length {total:.1} px");
    let zero: Vec<&str> = model
        .streets
        .iter()
        .filter(|s| street_weight(s, &model.penalties) == 0.0)
        .map(|s| s.name.as_str())
        .collect();
    println!(
        "{} zero-weight street{}",
        zero.len(),
        if zero.len() == 1 { "" } else { "s" }
    );
    for name in zero.iter().take(10) {
        println!("  {name}");
    }
    if components > 1 {
        println!("warning: multiple components; sites are placed on the dominant one only");
    }
    Ok(())
}

fn cmd_generate(
    model_path: &Path,
    instances_path: &Path,
    out_dir: &Path,
    seed_override: Option<u64>,
) -> Result<(), Failure> {
    let model = load_model(model_path)?;
    let graph = build_graph(&model);
    let mut specs = parse_instances(&read(instances_path)?)?;
    if let Some(seed) = seed_override {
        for spec in &mut specs {
            spec.seed = seed;
        }
    }
    std::fs::create_dir_all(out_dir).map_err(|e| Failure {
        code: 2,
        msg: format!("{}: {e}", out_dir.display()),
    })?;
    for spec in &specs {
        let inst = generate(&model, &graph, spec)?;
        let path = out_dir.join(format!("{}.instance.txt", inst.name));
        write(&path, &write_instance(&inst))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn default_solution_path(instance_path: &Path) -> PathBuf {
    let s = instance_path.to_string_lossy();
    match s.strip_suffix(".instance.txt") {
        Some(stem) => PathBuf::from(format!("{stem}.solution.txt")),
        None => PathBuf::from(format!("{s}.solution.txt")),
    }
}

fn cmd_solve(
    model_path: &Path,
    instance_path: &Path,
    algo: Algo,
    runs: usize,
    out: Option<PathBuf>,
    format: Format,
) -> Result<(), Failure> {
    if runs == 0 {
        return Err(Failure { code: 2, msg: "--runs must be at least 1".into() });
    }
    let model = load_model(model_path)?;
    let graph = build_graph(&model);
    let inst = load_instance(instance_path, &model)?;
    let oracle = inst.build_oracle(&model, &graph)?;

    // The pipeline is deterministic: repetitions only feed the timing
    // statistics. The oracle is built once, outside the timed region.
    let mut times_ms = Vec::with_capacity(runs);
    let mut tokens: Option<Vec<Token>> = None;
    for _ in 0..runs {
        let started = Instant::now();
        let mut seq = cluster_nearest_depot(&inst, &oracle);
        if let Some(config) = algo.config() {
            seq = improve(&seq, &oracle, &config);
        }
        times_ms.push(started.elapsed().as_secs_f64() * 1e3);
        tokens.get_or_insert(seq);
    }
    let tokens = tokens.unwrap();

    let mean = times_ms.iter().sum::<f64>() / runs as f64;
    let var = times_ms.iter().map(|t| (t - mean) * (t - mean)).sum::<f64>() / runs as f64;
    let obj = objectives(&tokens, &oracle);
    let row = BenchRow {
        algorithm: algo.name(),
        f1_hours: px_to_hours(obj.f1_px, &model),
        mean_time_ms: mean,
        stddev_time_ms: var.sqrt(),
        f2: obj.f2,
        f3: obj.f3,
    };

    let out_path = out.unwrap_or_else(|| default_solution_path(instance_path));
    let solution = Solution { instance: inst.name.clone(), tokens };
    write(&out_path, &write_solution(&solution))?;

    print!("{}", row.format(format));
    eprintln!("wrote {}", out_path.display());
    Ok(())
}

/// One benchmark result line (mirrors the result-table layout:
/// objective value, mean time and standard deviation over the runs).
struct BenchRow {
    algorithm: &'static str,
    f1_hours: f64,
    mean_time_ms: f64,
    stddev_time_ms: f64,
    f2: usize,
    f3: f64,
}

impl BenchRow {
    fn format(&self, format: Format) -> String {
        let mut s = String::new();
        match format {
            Format::Text => {
                let _ = writeln!(
                    s,
                    "{:<14} {:>10} {:>12} {:>12} {:>5} {:>10}",
                    "algorithm", "f1_hours", "mean_ms", "stddev_ms", "f2", "f3"
                );
                let _ = writeln!(
                    s,
                    "{:<14} {:>10.2} {:>12.3} {:>12.3} {:>5} {:>10.4}",
                    self.algorithm,
                    self.f1_hours,
                    self.mean_time_ms,
                    self.stddev_time_ms,
                    self.f2,
                    self.f3
                );
            }
            Format::Csv => {
                let _ = writeln!(s, "algorithm,f1_hours,mean_time_ms,stddev_time_ms,f2,f3");
                let _ = writeln!(
                    s,
                    "{},{:.2},{:.3},{:.3},{},{:.4}",
                    self.algorithm, self.f1_hours, self.mean_time_ms, self.stddev_time_ms,
                    self.f2, self.f3
                );
            }
        }
        s
    }
}

fn cmd_evaluate(
    model_path: &Path,
    instance_path: &Path,
    solution_path: &Path,
    format: Format,
) -> Result<(), Failure> {
    let model = load_model(model_path)?;
    let graph = build_graph(&model);
    let inst = load_instance(instance_path, &model)?;
    let sol = parse_solution(&read(solution_path)?)?;
    if sol.instance != inst.name {
        return Err(Failure::infeasible(format!(
            "solution is for instance '{}', expected '{}'",
            sol.instance, inst.name
        )));
    }
    let oracle = inst.build_oracle(&model, &graph)?;
    let report = validate(
        &sol.tokens,
        inst.deliveries,
        inst.depots,
        inst.max_vehicles,
        inst.r_max,
        &oracle,
    );
    let obj = objectives(&sol.tokens, &oracle);

    match format {
        Format::Text => {
            println!("instance {}", inst.name);
            println!("f1 {} px ({:.2} h)", obj.f1_px, px_to_hours(obj.f1_px, &model));
            println!("f2 {} route{}", obj.f2, if obj.f2 == 1 { "" } else { "s" });
            println!("f3 {:.4}", obj.f3);
            println!("feasible {}", report.feasible);
            for err in &report.multiset_errors {
                println!("  multiset: {err}");
            }
            for v in &report.over_length {
                println!(
                    "  over-length: route {} (depot {}) {} px > {} px",
                    v.route + 1,
                    v.depot + 1,
                    v.cost_px,
                    v.r_max
                );
            }
        }
        Format::Csv => {
            println!("instance,f1_px,f1_hours,f2,f3,feasible,violations");
            println!(
                "{},{},{:.2},{},{:.4},{},{}",
                inst.name,
                obj.f1_px,
                px_to_hours(obj.f1_px, &model),
                obj.f2,
                obj.f3,
                report.feasible,
                report.multiset_errors.len() + report.over_length.len()
            );
        }
    }

    if report.feasible {
        Ok(())
    } else {
        Err(Failure::infeasible("solution is infeasible".into()))
    }
}

fn cmd_render(
    model_path: &Path,
    instance_path: Option<&Path>,
    solution_path: Option<&Path>,
    out: &Path,
) -> Result<(), Failure> {
    let model = load_model(model_path)?;
    let svg = match instance_path {
        None => render_map(&model),
        Some(inst_path) => {
            let inst = load_instance(inst_path, &model)?;
            match solution_path {
                None => render_instance(&model, &inst),
                Some(sol_path) => {
                    let sol = parse_solution(&read(sol_path)?)?;
                    if sol.instance != inst.name {
                        return Err(Failure::infeasible(format!(
                            "solution is for instance '{}', expected '{}'",
                            sol.instance, inst.name
                        )));
                    }
                    render_solution(&model, &inst, &sol.tokens)
                }
            }
        }
    };
    write(out, &svg)?;
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_distances(model_path: &Path, instance_path: &Path, out: &Path) -> Result<(), Failure> {
    let model = load_model(model_path)?;
    let graph = build_graph(&model);
    let inst = load_instance(instance_path, &model)?;
    let oracle: DistanceOracle = build_oracle(&graph, &inst.sites, inst.depots, model.delivery_cost)?;
    write(out, &write_matrix(&oracle))?;
    println!("wrote {} ({} sites)", out.display(), oracle.num_sites());
    Ok(())
}
