use std::io::Write;

use nccc_core::closed_form::{
    energy_ordering, family_closed_form, ordering_from_values, EnergyOrdering,
};
use nccc_core::FamilySpec;
use serde::Serialize;

/// Significant digits in figure CSVs.
pub const SIG_DIGITS: usize = 12;

#[derive(Debug, thiserror::Error)]
pub enum FigureError {
    #[error("unknown figure {0}, expected 1..=10")]
    UnknownFigure(u32),
    #[error(transparent)]
    Core(#[from] nccc_core::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureFamily {
    Dihedral,
    Dicyclic,
    Semidihedral,
    U6m,
    V8m,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Figure {
    pub id: u32,
    pub caption: &'static str,
    pub family: FigureFamily,
    pub ms: Vec<u32>,
}

impl Figure {
    pub fn spec(&self, m: u32) -> FamilySpec {
        match self.family {
            FigureFamily::Dihedral => FamilySpec::Dihedral { m },
            FigureFamily::Dicyclic => FamilySpec::Dicyclic { m },
            FigureFamily::Semidihedral => FamilySpec::Semidihedral { m },
            FigureFamily::U6m => FamilySpec::U6m { m },
            FigureFamily::V8m => FamilySpec::V8m { m },
        }
    }
}

fn stepped(from: u32, to: u32, step: usize) -> Vec<u32> {
    (from..=to).step_by(step).collect()
}

pub fn figure(id: u32) -> Result<Figure, FigureError> {
    use FigureFamily::*;
    let (caption, family, ms) = match id {
        1 => ("D2m, m even, m/2 odd", Dihedral, stepped(6, 46, 4)),
        2 => ("D2m, m and m/2 even", Dihedral, stepped(4, 48, 4)),
        3 => ("D2m, m odd", Dihedral, stepped(3, 29, 2)),
        4 => ("T4m, m even", Dicyclic, stepped(2, 30, 2)),
        5 => ("T4m, m odd", Dicyclic, stepped(3, 31, 2)),
        6 => ("SD8m, m even", Semidihedral, stepped(2, 30, 2)),
        7 => ("SD8m, m odd", Semidihedral, stepped(3, 31, 2)),
        8 => ("U6m", U6m, stepped(2, 30, 1)),
        9 => ("V8m, m even", V8m, stepped(2, 30, 2)),
        10 => ("V8m, m odd", V8m, stepped(3, 31, 2)),
        _ => return Err(FigureError::UnknownFigure(id)),
    };
    Ok(Figure {
        id,
        caption,
        family,
        ms,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FigureRow {
    pub m: u32,
    pub e: f64,
    pub le: f64,
    pub se: f64,
    /// Ordering predicted for this member of the family.
    pub ordering: EnergyOrdering,
}

impl FigureRow {
    /// Whether the plotted values respect the predicted ordering.
    pub fn consistent(&self, tol: f64) -> bool {
        ordering_from_values(self.e, self.le, self.se, tol) == self.ordering
    }
}

pub fn figure_rows(fig: &Figure) -> Result<Vec<FigureRow>, FigureError> {
    fig.ms
        .iter()
        .map(|&m| {
            let spec = fig.spec(m);
            let (e, le, se) = family_closed_form(&spec)?.energies_f64();
            let ordering = match energy_ordering(&spec) {
                Ok(o) => o,
                Err(_) => ordering_from_values(e, le, se, 1e-9),
            };
            Ok(FigureRow {
                m,
                e,
                le,
                se,
                ordering,
            })
        })
        .collect()
}

/// Decimal rendering with `digits` significant digits, trailing zeros dropped.
pub fn fmt_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

pub fn write_figure_csv<W: Write>(rows: &[FigureRow], w: W) -> Result<(), FigureError> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["m", "E", "LE", "SE"])?;
    for r in rows {
        out.write_record([
            r.m.to_string(),
            fmt_significant(r.e, SIG_DIGITS),
            fmt_significant(r.le, SIG_DIGITS),
            fmt_significant(r.se, SIG_DIGITS),
        ])?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}
