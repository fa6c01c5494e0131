use std::fmt;

use nccc_core::closed_form::diophantine_scan;
use serde::Serialize;

use crate::sweep::SweepSummary;

/// Solution sets of the three perfect-square conditions up to `max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareScanReport {
    pub schema: u32,
    pub max: u64,
    /// Solutions of `m² + 6m − 7`, `m² + 12m − 28` and `4m² + 12m − 7` being squares.
    pub sets: [Vec<u64>; 3],
}

impl SquareScanReport {
    pub fn scan(max: u64) -> Self {
        SquareScanReport {
            schema: crate::record::SCHEMA_VERSION,
            max,
            sets: diophantine_scan(max),
        }
    }
}

fn fmt_set(v: &[u64]) -> String {
    let items: Vec<_> = v.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for SquareScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<_> = self.sets.iter().map(|s| fmt_set(s)).collect();
        write!(f, "m <= {}: {}", self.max, sets.join(" "))
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bad: Vec<_> = self.disagreements().collect();
        writeln!(
            f,
            "{} instances, {} agree, {} disagree (tol {:e})",
            self.rows.len(),
            self.rows.len() - bad.len(),
            bad.len(),
            self.tolerance
        )?;
        for row in bad {
            let detail = match &row.error {
                Some(e) => e.clone(),
                None => {
                    let devs = [
                        row.dev_a, row.dev_l, row.dev_q, row.dev_e, row.dev_le, row.dev_se,
                    ];
                    let worst = devs
                        .iter()
                        .map(|d| d.unwrap_or(f64::INFINITY))
                        .fold(0.0, f64::max);
                    format!("max deviation {worst:e}")
                }
            };
            writeln!(f, "  DISAGREE {} ({}): {detail}", row.group, row.params)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_scan_sets() {
        let r = SquareScanReport::scan(1000);
        assert_eq!(r.to_string(), "m <= 1000: {1,2} {2,4,11} {1}");
    }
}
