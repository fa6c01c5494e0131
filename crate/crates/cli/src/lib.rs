//! Analysis records, verification sweeps and figure data for NCCC-graph spectra.

pub mod figures;
pub mod record;
pub mod report;
pub mod sweep;

pub use figures::{figure, figure_rows, write_figure_csv, Figure, FigureRow};
pub use record::{analyze, AnalysisError, AnalysisRecord};
pub use report::SquareScanReport;
pub use sweep::{default_sweep, run_sweep, SweepSummary};
