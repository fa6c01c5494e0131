use std::io::Write;

use nccc_core::FamilySpec;
use rayon::prelude::*;
use serde::Serialize;

use crate::record::{analyze, AnalysisRecord};

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "NCCC_THREADS";

/// The verification sweep: every family over its standard range, with
/// D8 and Q8 as the `p = 2` witnesses.
pub fn default_sweep() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    specs.extend((3..=40).map(|m| FamilySpec::Dihedral { m }));
    specs.extend((2..=30).map(|m| FamilySpec::Dicyclic { m }));
    specs.extend((2..=20).map(|m| FamilySpec::Semidihedral { m }));
    specs.extend((2..=25).map(|m| FamilySpec::U6m { m }));
    for n in 2..=6 {
        specs.extend((3..=15).map(|m| FamilySpec::Umn { n, m }));
    }
    specs.extend((2..=15).map(|m| FamilySpec::V8m { m }));
    specs.extend([3, 5].map(|p| FamilySpec::Heisenberg { p }));
    specs.extend([FamilySpec::Dihedral { m: 4 }, FamilySpec::Dicyclic { m: 2 }]);
    dedup_sorted(specs)
}

fn family_rank(spec: &FamilySpec) -> u8 {
    match spec {
        FamilySpec::Dihedral { .. } => 0,
        FamilySpec::Dicyclic { .. } => 1,
        FamilySpec::Semidihedral { .. } => 2,
        FamilySpec::Umn { .. } => 3,
        FamilySpec::U6m { .. } => 4,
        FamilySpec::V8m { .. } => 5,
        FamilySpec::Heisenberg { .. } => 6,
        FamilySpec::ExplicitTable(_) => 7,
    }
}

/// Merge key: family, then parameters in declaration order.
pub fn sort_key(spec: &FamilySpec) -> (u8, Vec<u32>) {
    (
        family_rank(spec),
        spec.params().into_iter().map(|(_, v)| v).collect(),
    )
}

fn dedup_sorted(mut specs: Vec<FamilySpec>) -> Vec<FamilySpec> {
    specs.sort_by_key(sort_key);
    specs.dedup();
    specs
}

/// One line of the deviation CSV.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub group: String,
    pub params: String,
    pub n_vertices: usize,
    pub shape: String,
    pub dev_a: Option<f64>,
    pub dev_l: Option<f64>,
    pub dev_q: Option<f64>,
    pub dev_e: Option<f64>,
    pub dev_le: Option<f64>,
    pub dev_se: Option<f64>,
    pub agree: bool,
    pub error: Option<String>,
}

impl SweepRow {
    fn from_record(r: &AnalysisRecord) -> Self {
        let d = r.deviations;
        SweepRow {
            family: r.family.clone(),
            group: r.group.clone(),
            params: fmt_params(r.parameters.iter().map(|(k, v)| (k.as_str(), *v))),
            n_vertices: r.n_vertices,
            shape: r.shape.as_ref().map(|s| s.to_string()).unwrap_or_default(),
            dev_a: d.and_then(|d| d.adjacency),
            dev_l: d.and_then(|d| d.laplacian),
            dev_q: d.and_then(|d| d.signless),
            dev_e: d.map(|d| d.energy),
            dev_le: d.map(|d| d.laplacian_energy),
            dev_se: d.map(|d| d.signless_energy),
            agree: r.agrees(),
            error: None,
        }
    }

    fn from_error(spec: &FamilySpec, e: impl ToString) -> Self {
        SweepRow {
            family: spec.family_tag().to_string(),
            group: spec.to_string(),
            params: fmt_params(spec.params()),
            n_vertices: 0,
            shape: String::new(),
            dev_a: None,
            dev_l: None,
            dev_q: None,
            dev_e: None,
            dev_le: None,
            dev_se: None,
            agree: false,
            error: Some(e.to_string()),
        }
    }
}

fn fmt_params<'a>(params: impl IntoIterator<Item = (&'a str, u32)>) -> String {
    params
        .into_iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub rows: Vec<SweepRow>,
    pub tolerance: f64,
}

impl SweepSummary {
    pub fn disagreements(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.agree)
    }

    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }

    pub fn write_csv<W: Write>(&self, w: W) -> csv::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        for row in &self.rows {
            out.serialize(row)?;
        }
        out.flush()?;
        Ok(())
    }
}

/// Worker count from `NCCC_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    let raw = std::env::var(THREADS_ENV).ok()?;
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => Some(n),
        _ => {
            log::warn!("ignoring {THREADS_ENV}={raw:?}");
            None
        }
    }
}

/// Analyzes every spec on a worker pool and returns the full records in key order.
pub fn run_records(
    specs: &[FamilySpec],
    tol: f64,
    perturb: bool,
    threads: Option<usize>,
) -> Vec<(FamilySpec, Result<AnalysisRecord, String>)> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let job = || {
        specs
            .par_iter()
            .map(|s| {
                (
                    s.clone(),
                    analyze(s, tol, perturb).map_err(|e| e.to_string()),
                )
            })
            .collect::<Vec<_>>()
    };
    let mut out = match builder.build() {
        Ok(pool) => pool.install(job),
        Err(e) => {
            log::warn!("thread pool unavailable ({e}), running on the global pool");
            job()
        }
    };
    out.sort_by_key(|(s, _)| sort_key(s));
    out
}

pub fn run_sweep(
    specs: &[FamilySpec],
    tol: f64,
    perturb: bool,
    threads: Option<usize>,
) -> SweepSummary {
    let rows = run_records(specs, tol, perturb, threads)
        .into_iter()
        .map(|(spec, r)| match r {
            Ok(rec) => SweepRow::from_record(&rec),
            Err(e) => SweepRow::from_error(&spec, e),
        })
        .collect();
    SweepSummary {
        rows,
        tolerance: tol,
    }
}
