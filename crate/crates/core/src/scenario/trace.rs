//! Simulation traces: per-step rows, mode-change events and run metadata,
//! with their on-disk form (`trace.csv`, `events.json`, `meta.json`).

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const TRACE_FILE: &str = "trace.csv";
pub const EVENTS_FILE: &str = "events.json";
pub const META_FILE: &str = "meta.json";

/// Rounds to 9 significant digits, the precision written to `trace.csv`.
/// Recording at that precision keeps in-memory and re-loaded traces equal.
pub fn sig9(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.8e}").parse().expect("formatted float parses")
}

fn fmt_value(v: f64) -> String {
    sig9(v).to_string()
}

/// A discrete jump. `t` is the first clock value at which the new mode holds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Event {
    pub t: f64,
    pub node: String,
    pub from: String,
    pub to: String,
    /// Label of the fired transition, e.g. `network.fault`.
    pub guard: String,
    /// The satisfied part of the guard, e.g. `phi_n == 1`.
    pub trigger: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeInfo {
    pub name: String,
    /// Empty for junction blocks.
    pub modes: Vec<String>,
    pub continuous: Vec<String>,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceMeta {
    pub scenario_hash: String,
    pub seed: u64,
    pub dt: f64,
    pub t_end: f64,
    pub rows: usize,
    /// Column names after `t`, in file order.
    pub columns: Vec<String>,
    pub nodes: Vec<NodeInfo>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Mode(String),
    Value(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceRow {
    pub t: f64,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Trace {
    pub meta: TraceMeta,
    pub rows: Vec<TraceRow>,
    pub events: Vec<Event>,
}

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
}

impl TraceError {
    pub fn is_io(&self) -> bool {
        match self {
            TraceError::Io { .. } => true,
            TraceError::Csv { source, .. } => source.is_io_error(),
            _ => false,
        }
    }
}

pub(crate) fn is_mode_column(name: &str) -> bool {
    name.ends_with(".mode")
}

impl Trace {
    pub fn dt(&self) -> f64 {
        self.meta.dt
    }

    pub fn columns(&self) -> &[String] {
        &self.meta.columns
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.meta.columns.iter().position(|c| c == name)
    }

    /// Names of nodes that have modes, in column order.
    pub fn automata(&self) -> impl Iterator<Item = &str> {
        self.meta.nodes.iter().filter(|n| !n.modes.is_empty()).map(|n| n.name.as_str())
    }

    pub fn mode_at(&self, row: usize, node: &str) -> Option<&str> {
        let c = self.column(&format!("{node}.mode"))?;
        match &self.rows.get(row)?.cells[c] {
            Cell::Mode(m) => Some(m),
            Cell::Value(_) => None,
        }
    }

    pub fn value_at(&self, row: usize, column: &str) -> Option<f64> {
        let c = self.column(column)?;
        match self.rows.get(row)?.cells[c] {
            Cell::Value(v) => Some(v),
            Cell::Mode(_) => None,
        }
    }

    pub fn series(&self, column: &str) -> Option<Vec<f64>> {
        let c = self.column(column)?;
        self.rows
            .iter()
            .map(|r| match r.cells[c] {
                Cell::Value(v) => Some(v),
                Cell::Mode(_) => None,
            })
            .collect()
    }

    pub fn modes(&self, node: &str) -> Option<Vec<&str>> {
        let c = self.column(&format!("{node}.mode"))?;
        self.rows
            .iter()
            .map(|r| match &r.cells[c] {
                Cell::Mode(m) => Some(m.as_str()),
                Cell::Value(_) => None,
            })
            .collect()
    }

    /// Row whose clock is closest to `t`.
    pub fn row_at(&self, t: f64) -> Option<usize> {
        let k = (t / self.meta.dt).round();
        (k >= 0.0 && (k as usize) < self.rows.len()).then_some(k as usize)
    }

    pub fn write_csv<W: io::Write>(&self, w: W) -> Result<(), csv::Error> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(std::iter::once("t").chain(self.meta.columns.iter().map(String::as_str)))?;
        for r in &self.rows {
            let mut rec = Vec::with_capacity(r.cells.len() + 1);
            rec.push(fmt_value(r.t));
            rec.extend(r.cells.iter().map(|c| match c {
                Cell::Mode(m) => m.clone(),
                Cell::Value(v) => fmt_value(*v),
            }));
            out.write_record(&rec)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn events_json(&self) -> String {
        serde_json::to_string_pretty(&self.events).expect("events serialize") + "\n"
    }

    /// Writes `trace.csv`, `events.json` and `meta.json` into `dir`,
    /// creating it if needed.
    pub fn write_dir(&self, dir: &Path) -> Result<(), TraceError> {
        let io_err = |path: &Path| {
            let path = path.to_owned();
            move |source| TraceError::Io { path, source }
        };
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        let path = dir.join(TRACE_FILE);
        let file = fs::File::create(&path).map_err(io_err(&path))?;
        self.write_csv(io::BufWriter::new(file)).map_err(|source| TraceError::Csv { path: path.clone(), source })?;
        let path = dir.join(EVENTS_FILE);
        fs::write(&path, self.events_json()).map_err(io_err(&path))?;
        let path = dir.join(META_FILE);
        let meta = serde_json::to_string_pretty(&self.meta).expect("meta serializes") + "\n";
        fs::write(&path, meta).map_err(io_err(&path))?;
        Ok(())
    }

    pub fn read_dir(dir: &Path) -> Result<Self, TraceError> {
        let read_json = |name: &str| -> Result<String, TraceError> {
            let path = dir.join(name);
            fs::read_to_string(&path).map_err(|source| TraceError::Io { path, source })
        };
        let meta_path = dir.join(META_FILE);
        let meta: TraceMeta = serde_json::from_str(&read_json(META_FILE)?)
            .map_err(|source| TraceError::Json { path: meta_path, source })?;
        let events_path = dir.join(EVENTS_FILE);
        let events: Vec<Event> = serde_json::from_str(&read_json(EVENTS_FILE)?)
            .map_err(|source| TraceError::Json { path: events_path, source })?;

        let path = dir.join(TRACE_FILE);
        let file = fs::File::open(&path).map_err(|source| TraceError::Io { path: path.clone(), source })?;
        let mut rdr = csv::Reader::from_reader(io::BufReader::new(file));
        let csv_err = |source| TraceError::Csv { path: path.clone(), source };
        let format_err = |message: String| TraceError::Format { path: path.clone(), message };
        let header = rdr.headers().map_err(csv_err)?.clone();
        let expected = std::iter::once("t").chain(meta.columns.iter().map(String::as_str));
        if !header.iter().eq(expected) {
            return Err(format_err("header does not match meta.json columns".into()));
        }
        let mut rows = Vec::with_capacity(meta.rows);
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(csv_err)?;
            let parse = |s: &str| s.parse::<f64>().map_err(|e| format_err(format!("row {}: `{s}`: {e}", i + 1)));
            let t = parse(&rec[0])?;
            let cells = meta
                .columns
                .iter()
                .zip(rec.iter().skip(1))
                .map(
                    |(name, s)| {
                        if is_mode_column(name) {
                            Ok(Cell::Mode(s.to_owned()))
                        } else {
                            parse(s).map(Cell::Value)
                        }
                    },
                )
                .collect::<Result<_, _>>()?;
            rows.push(TraceRow { t, cells });
        }
        if rows.len() != meta.rows {
            return Err(format_err(format!("expected {} rows, found {}", meta.rows, rows.len())));
        }
        Ok(Self { meta, rows, events })
    }
}
