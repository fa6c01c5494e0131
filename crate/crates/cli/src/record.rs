use std::collections::BTreeMap;
use std::fmt;

use nccc_core::closed_form::{family_closed_form, ClassificationReport, ClosedFormResult};
use nccc_core::{
    build_group, build_nccc, conjugacy_classes, detect_multipartite, FamilySpec, GraphSpectra,
    MultipartiteShape,
};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Largest NCCC-graph the oracle pipeline will diagonalize.
pub const MAX_VERTICES: usize = 512;

/// Largest group order accepted for Cayley-table construction.
pub const MAX_ORDER: usize = 8192;

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Core(#[from] nccc_core::Error),
    #[error("{group}: {what} {value} exceeds the limit {limit}")]
    TooLarge {
        group: String,
        what: &'static str,
        value: usize,
        limit: usize,
    },
}

/// Per-matrix maximum deviation between closed form and oracle.
/// `None` when the multiplicities differ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Deviations {
    pub adjacency: Option<f64>,
    pub laplacian: Option<f64>,
    pub signless: Option<f64>,
    pub energy: f64,
    pub laplacian_energy: f64,
    pub signless_energy: f64,
}

impl Deviations {
    fn between(cf: &ClosedFormResult, oracle: &GraphSpectra) -> Self {
        let (e, le, se) = cf.energies_f64();
        let o = &oracle.energies;
        Deviations {
            adjacency: cf.spec_a.to_spectrum().max_deviation(&oracle.adjacency),
            laplacian: cf.spec_l.to_spectrum().max_deviation(&oracle.laplacian),
            signless: cf.spec_q.to_spectrum().max_deviation(&oracle.signless),
            energy: (e - o.energy).abs(),
            laplacian_energy: (le - o.laplacian_energy).abs(),
            signless_energy: (se - o.signless_energy).abs(),
        }
    }

    /// Largest deviation overall; infinite on a multiplicity mismatch.
    pub fn max(&self) -> f64 {
        [self.adjacency, self.laplacian, self.signless]
            .into_iter()
            .map(|d| d.unwrap_or(f64::INFINITY))
            .chain([self.energy, self.laplacian_energy, self.signless_energy])
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub shape: bool,
    pub adjacency: bool,
    pub laplacian: bool,
    pub signless: bool,
    pub energies: bool,
}

impl Agreement {
    fn judge(shape: bool, d: &Deviations, tol: f64) -> Self {
        let ok = |x: Option<f64>| x.is_some_and(|x| x < tol);
        Agreement {
            shape,
            adjacency: ok(d.adjacency),
            laplacian: ok(d.laplacian),
            signless: ok(d.signless),
            energies: d.energy < tol && d.laplacian_energy < tol && d.signless_energy < tol,
        }
    }

    pub fn all(&self) -> bool {
        self.shape && self.adjacency && self.laplacian && self.signless && self.energies
    }
}

/// Closed-form side of an analysis.
#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormView {
    #[serde(flatten)]
    pub result: ClosedFormResult,
    pub classification: Option<ClassificationReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisRecord {
    pub schema: u32,
    pub family: String,
    pub group: String,
    pub parameters: BTreeMap<String, u32>,
    pub order: usize,
    pub n_vertices: usize,
    pub n_edges: usize,
    /// Shape detected on the constructed graph.
    pub shape: Option<MultipartiteShape>,
    pub oracle: GraphSpectra,
    pub closed_form: Option<ClosedFormView>,
    pub deviations: Option<Deviations>,
    pub agreement: Option<Agreement>,
    pub tolerance: f64,
    pub perturbed: bool,
}

impl AnalysisRecord {
    /// True when a closed form exists and every comparison is within tolerance.
    pub fn agrees(&self) -> bool {
        self.agreement.is_some_and(|a| a.all())
    }

    pub fn max_deviation(&self) -> Option<f64> {
        self.deviations.map(|d| d.max())
    }
}

/// Runs both pipelines on one group and compares them.
pub fn analyze(
    spec: &FamilySpec,
    tol: f64,
    perturb: bool,
) -> Result<AnalysisRecord, AnalysisError> {
    spec.validate()?;
    let order = spec.expected_order();
    if order > MAX_ORDER {
        return Err(AnalysisError::TooLarge {
            group: spec.to_string(),
            what: "group order",
            value: order,
            limit: MAX_ORDER,
        });
    }
    let group = build_group(spec)?;
    let classes = conjugacy_classes(&group);
    let n_vertices = classes.non_central().count();
    if n_vertices > MAX_VERTICES {
        return Err(AnalysisError::TooLarge {
            group: spec.to_string(),
            what: "vertex count",
            value: n_vertices,
            limit: MAX_VERTICES,
        });
    }
    let graph = build_nccc(&group, &classes)?;
    let oracle = GraphSpectra::compute(&graph)?;
    let shape = detect_multipartite(&graph);

    let closed_form = match family_closed_form(spec) {
        Ok(cf) => Some(ClosedFormView {
            result: if perturb { cf.perturbed() } else { cf },
            classification: ClassificationReport::for_family(spec).ok(),
        }),
        Err(e) => {
            log::info!("{spec}: no closed form ({e})");
            None
        }
    };
    let deviations = closed_form
        .as_ref()
        .map(|cf| Deviations::between(&cf.result, &oracle));
    let agreement = closed_form
        .as_ref()
        .zip(deviations.as_ref())
        .map(|(cf, d)| Agreement::judge(shape.as_ref() == Some(&cf.result.shape), d, tol));

    Ok(AnalysisRecord {
        schema: SCHEMA_VERSION,
        family: spec.family_tag().to_string(),
        group: spec.to_string(),
        parameters: spec
            .params()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        order,
        n_vertices: graph.n_vertices(),
        n_edges: graph.n_edges(),
        shape,
        oracle,
        closed_form,
        deviations,
        agreement,
        tolerance: tol,
        perturbed: perturb,
    })
}

impl fmt::Display for AnalysisRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.oracle.energies;
        writeln!(f, "group        {} (order {})", self.group, self.order)?;
        writeln!(f, "vertices     {}", self.n_vertices)?;
        writeln!(f, "edges        {}", self.n_edges)?;
        match &self.shape {
            Some(s) => writeln!(f, "shape        {s}")?,
            None => writeln!(f, "shape        not complete multipartite")?,
        }
        writeln!(
            f,
            "oracle       E = {:.10}  LE = {:.10}  SE = {:.10}",
            o.energy, o.laplacian_energy, o.signless_energy
        )?;
        let Some(cf) = &self.closed_form else {
            return writeln!(f, "closed form  not available");
        };
        let r = &cf.result;
        writeln!(f, "case         {}", r.case_tag)?;
        writeln!(f, "spec A       {}", fmt_exact(&r.spec_a))?;
        writeln!(f, "spec L       {}", fmt_exact(&r.spec_l))?;
        writeln!(f, "spec Q       {}", fmt_exact(&r.spec_q))?;
        writeln!(
            f,
            "closed form  E = {}  LE = {}  SE = {}",
            r.energy, r.laplacian_energy, r.signless_energy
        )?;
        if let Some(c) = &cf.classification {
            writeln!(
                f,
                "integral     A {}  L {}  Q {}",
                c.integral, c.l_integral, c.q_integral
            )?;
            writeln!(f, "classes      {}", c.energy_class)?;
            writeln!(f, "ordering     {}", c.ordering)?;
        }
        if let Some(d) = &self.deviations {
            writeln!(f, "max dev      {:e}", d.max())?;
        }
        let verdict = if self.agrees() { "agree" } else { "DISAGREE" };
        write!(f, "verdict      {verdict} (tol {:e})", self.tolerance)
    }
}

fn fmt_exact(s: &nccc_core::surd::ExactSpectrum) -> String {
    s.entries
        .iter()
        .map(|(v, k)| format!("{v}^{k}"))
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d10_record() {
        let r = analyze(&FamilySpec::Dihedral { m: 5 }, 1e-8, false).unwrap();
        assert!(r.agrees());
        assert_eq!(r.schema, 1);
        let cf = &r.closed_form.as_ref().unwrap().result;
        assert_eq!(cf.energy.to_string(), "2√2");
        assert_eq!(cf.laplacian_energy.to_string(), "10/3");
        assert_eq!(cf.signless_energy.to_string(), "10/3");
    }

    #[test]
    fn perturbation_breaks_agreement() {
        let r = analyze(&FamilySpec::Dihedral { m: 5 }, 1e-8, true).unwrap();
        assert!(!r.agrees());
        assert!(r.max_deviation().unwrap() > 1e-8);
    }

    #[test]
    fn rejects_oversized_groups() {
        assert!(matches!(
            analyze(&FamilySpec::Dihedral { m: 5000 }, 1e-8, false),
            Err(AnalysisError::TooLarge { .. })
        ));
    }

    #[test]
    fn json_has_schema_tag() {
        let r = analyze(&FamilySpec::V8m { m: 2 }, 1e-8, false).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["parameters"]["m"], 2);
    }
}
