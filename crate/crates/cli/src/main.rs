//! `cascadia`: validate scenarios, run simulations, analyze traces and
//! describe the composed model.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use cascadia_core::analysis::analyze_default;
use cascadia_core::composition::{CompositionNetwork, Node};
use cascadia_core::hybrid::Port;
use cascadia_core::scenario::trace::TraceError;
use cascadia_core::scenario::{load_scenario, run_with, RunError, RunOptions, Scenario, ScenarioError, Trace};
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cascadia", version, about = "Cascading-failure simulation of interdependent infrastructure models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load and validate a scenario file.
    Validate {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Run a scenario and write trace.csv, events.json and meta.json.
    Simulate {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Overrides the scenario seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Analyze a trace directory and write cascade.json and metrics.json.
    Analyze {
        #[arg(long)]
        trace: PathBuf,
        /// Also write plotdata/<node>.<port>.dat for every recorded port.
        #[arg(long)]
        plot_data: bool,
    },
    /// Print the composed model: nodes, ports, connections and free inputs.
    Describe {
        #[arg(long)]
        json: bool,
        /// Build the model from this scenario's parameters instead of the defaults.
        #[arg(long)]
        scenario: Option<PathBuf>,
    },
}

/// Failure classes and their exit codes.
#[derive(Debug)]
enum Failure {
    Validation(anyhow::Error),
    Runtime(anyhow::Error),
    Io(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Runtime(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn error(&self) -> &anyhow::Error {
        match self {
            Failure::Validation(e) | Failure::Runtime(e) | Failure::Io(e) => e,
        }
    }
}

fn io(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Io(e.into())
}

fn read_scenario(path: &Path) -> Result<Scenario, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())).map_err(io)?;
    load_scenario(&text).map_err(|e| {
        let msg = match &e {
            ScenarioError::Parse { line, column, .. } => format!("{}:{line}:{column}: {e}", path.display()),
            ScenarioError::Invalid(_) => format!("{}: {e}", path.display()),
        };
        Failure::Validation(anyhow!(msg))
    })
}

fn trace_failure(e: TraceError) -> Failure {
    if e.is_io() {
        Failure::Io(e.into())
    } else {
        Failure::Validation(e.into())
    }
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display())).map_err(io)
}

fn simulate(scenario: &Path, out: &Path, seed: Option<u64>) -> Result<(), Failure> {
    let s = read_scenario(scenario)?;
    let trace = run_with::<f64>(&s, &RunOptions { seed, ..Default::default() }).map_err(|e| match e {
        RunError::Invalid(p) => Failure::Validation(p.into()),
        RunError::Simulation(c) => Failure::Runtime(c.into()),
    })?;
    trace.write_dir(out).map_err(trace_failure)?;
    log::info!("{} rows, {} events written to {}", trace.rows.len(), trace.events.len(), out.display());
    Ok(())
}

fn analyze(dir: &Path, plot_data: bool) -> Result<(), Failure> {
    if !dir.is_dir() {
        return Err(io(anyhow!("trace directory {} does not exist", dir.display())));
    }
    let trace = Trace::read_dir(dir).map_err(trace_failure)?;
    let analysis = analyze_default(&trace);
    write(&dir.join("cascade.json"), &analysis.cascade_json())?;
    write(&dir.join("metrics.json"), &analysis.metrics_json())?;
    if plot_data {
        write_plot_data(&trace, &dir.join("plotdata"))?;
    }
    log::info!("{} status events, {} chains", analysis.report.events.len(), analysis.report.chains.len());
    Ok(())
}

/// One whitespace-separated `t value` file per input and output port.
fn write_plot_data(trace: &Trace, dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display())).map_err(io)?;
    for node in &trace.meta.nodes {
        for port in node.inputs.iter().chain(&node.outputs) {
            let column = format!("{}.{port}", node.name);
            let values =
                trace.series(&column).ok_or_else(|| Failure::Validation(anyhow!("missing column {column}")))?;
            let mut text = format!("# t {column}\n");
            for (row, v) in trace.rows.iter().zip(values) {
                let _ = writeln!(text, "{} {v}", row.t);
            }
            write(&dir.join(format!("{column}.dat")), &text)?;
        }
    }
    Ok(())
}

fn port_names(ports: &[Port]) -> Vec<String> {
    ports.iter().map(|p| p.name.clone()).collect()
}

fn describe_json(net: &CompositionNetwork<f64>) -> serde_json::Value {
    let nodes: Vec<_> = net
        .nodes()
        .iter()
        .map(|n| match n {
            Node::Automaton(a) => json!({
                "name": a.name(),
                "kind": "automaton",
                "modes": a.modes().iter().map(|m| m.name.clone()).collect::<Vec<_>>(),
                "continuous": a.continuous_vars(),
                "inputs": a.input_ports(),
                "outputs": a.output_ports(),
                "guards": a.guard_labels(),
            }),
            Node::Junction(j) => json!({
                "name": j.name(),
                "kind": "junction",
                "inputs": j.input_ports(),
                "outputs": [j.output_port()],
            }),
        })
        .collect();
    let connections: Vec<_> = net
        .connections()
        .iter()
        .map(|c| {
            json!({
                "source": c.source.to_string(),
                "destination": c.destination.to_string(),
                "dependency": c.dependency,
                "latency_steps": c.latency(),
            })
        })
        .collect();
    let free: Vec<String> = net.free_inputs().iter().map(|p| format!("{}.{}", p.node, p.port)).collect();
    json!({ "nodes": nodes, "connections": connections, "free_inputs": free })
}

fn describe_text(net: &CompositionNetwork<f64>) -> String {
    let mut out = String::from("nodes:\n");
    for n in net.nodes() {
        match n {
            Node::Automaton(a) => {
                let modes: Vec<&str> = a.modes().iter().map(|m| m.name.as_str()).collect();
                let vars: Vec<&str> = a.continuous_vars().iter().map(|v| v.name.as_str()).collect();
                let _ = writeln!(out, "  {} (automaton)", a.name());
                let _ = writeln!(out, "    modes:   {}", modes.join(", "));
                let _ = writeln!(out, "    state:   {}", vars.join(", "));
                let _ = writeln!(out, "    inputs:  {}", port_names(a.input_ports()).join(", "));
                let _ = writeln!(out, "    outputs: {}", port_names(a.output_ports()).join(", "));
            }
            Node::Junction(j) => {
                let _ = writeln!(out, "  {} (junction)", j.name());
                let _ = writeln!(out, "    inputs:  {}", port_names(j.input_ports()).join(", "));
                let _ = writeln!(out, "    outputs: {}", j.output_port().name);
            }
        }
    }
    out.push_str("connections:\n");
    for c in net.connections() {
        let (src, dst) = (c.source.to_string(), c.destination.to_string());
        let _ = writeln!(out, "  {src:<20} -> {dst:<20} {:<9} latency {}", c.dependency.as_str(), c.latency());
    }
    out.push_str("free inputs:\n");
    for p in net.free_inputs() {
        let _ = writeln!(out, "  {}.{}", p.node, p.port);
    }
    out
}

fn describe(json: bool, scenario: Option<&Path>) -> Result<(), Failure> {
    let s = match scenario {
        Some(p) => read_scenario(p)?,
        None => Scenario::default(),
    };
    let net = cascadia_core::scenario::build_network::<f64>(&s).map_err(|e| Failure::Validation(e.into()))?;
    let text = if json {
        serde_json::to_string_pretty(&describe_json(&net)).expect("description serializes") + "\n"
    } else {
        describe_text(&net)
    };
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(io(e)),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("CASCADIA_LOG", "warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { scenario } => read_scenario(scenario).map(|_| ()),
        Command::Simulate { scenario, out, seed } => simulate(scenario, out, *seed),
        Command::Analyze { trace, plot_data } => analyze(trace, *plot_data),
        Command::Describe { json, scenario } => describe(*json, scenario.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            log::debug!("exit code {}", f.code());
            eprintln!("error: {:#}", f.error());
            ExitCode::from(f.code())
        }
    }
}
