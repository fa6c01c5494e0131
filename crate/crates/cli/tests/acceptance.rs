//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use nccc_cli::figures::{figure, figure_rows, fmt_significant, SIG_DIGITS};
use nccc_cli::record::AnalysisRecord;
use nccc_cli::sweep::{default_sweep, run_records};
use nccc_core::closed_form::{
    diophantine_scan, energy_ordering, family_closed_form, family_quotient, integrality_predicates,
    ordering_from_values, spectra_pp_quotient, EnergyClass, EnergyOrdering, Quotient,
};
use nccc_core::spectra::ExactPolys;
use nccc_core::surd::Surd;
use nccc_core::{
    build_ccc, build_group, build_nccc, complement, conjugacy_classes, detect_multipartite,
    FamilySpec, Graph, MultipartiteShape,
};
use num_rational::Ratio;

const TOL: f64 = 1e-8;
const GOLDEN_TOL: f64 = 1e-10;
const SWEEP_BUDGET: Duration = Duration::from_secs(60);
const SCAN_BUDGET: Duration = Duration::from_secs(5);

type Outcome = Result<String, String>;

struct Sweep {
    specs: Vec<FamilySpec>,
    records: Vec<AnalysisRecord>,
    errors: Vec<String>,
    elapsed: Duration,
}

impl Sweep {
    fn run() -> Self {
        let specs = default_sweep();
        let start = Instant::now();
        let mut records = Vec::new();
        let mut errors = Vec::new();
        for (spec, r) in run_records(&specs, TOL, false, Some(1)) {
            match r {
                Ok(r) => records.push(r),
                Err(e) => errors.push(format!("{spec}: {e}")),
            }
        }
        Sweep {
            specs,
            records,
            errors,
            elapsed: start.elapsed(),
        }
    }

    fn pairs(&self) -> impl Iterator<Item = (&FamilySpec, &AnalysisRecord)> {
        self.specs.iter().zip(&self.records)
    }
}

fn nccc(spec: &FamilySpec) -> Graph {
    let g = build_group(spec).unwrap();
    build_nccc(&g, &conjugacy_classes(&g)).unwrap()
}

fn names<'a>(it: impl IntoIterator<Item = &'a str>) -> BTreeSet<String> {
    it.into_iter().map(str::to_string).collect()
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

fn verdict(summary: String, failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        let shown: Vec<_> = failures.iter().take(5).cloned().collect();
        Err(format!(
            "{} failure(s): {}",
            failures.len(),
            shown.join("; ")
        ))
    }
}

fn formula_oracle_sweep(sweep: &Sweep) -> Outcome {
    let mut failures = sweep.errors.clone();
    for r in &sweep.records {
        check(&mut failures, r.agrees(), || {
            format!("{} max deviation {:?}", r.group, r.max_deviation())
        });
    }
    check(&mut failures, sweep.elapsed < SWEEP_BUDGET, || {
        format!("sweep took {:.1?}", sweep.elapsed)
    });
    let worst = sweep
        .records
        .iter()
        .filter_map(AnalysisRecord::max_deviation)
        .fold(0.0, f64::max);
    verdict(
        format!(
            "{} instances, max deviation {worst:.2e}, {:.2?} single-threaded",
            sweep.records.len(),
            sweep.elapsed
        ),
        failures,
    )
}

fn golden_values() -> Outcome {
    let q = |a: i64, b: i64| Surd::rational(Ratio::new(a, b));
    let mut failures = Vec::new();
    let mut golden = |label: &str, spec: FamilySpec, which: usize, expected: Surd| {
        let cf = family_closed_form(&spec).unwrap();
        let exact = [cf.energy, cf.laplacian_energy, cf.signless_energy][which];
        let oracle = nccc_core::GraphSpectra::compute(&nccc(&spec))
            .unwrap()
            .energies;
        let numeric = [
            oracle.energy,
            oracle.laplacian_energy,
            oracle.signless_energy,
        ][which];
        check(&mut failures, exact == expected, || {
            format!("{label}: exact {exact}")
        });
        check(
            &mut failures,
            (numeric - expected.to_f64()).abs() < GOLDEN_TOL,
            || format!("{label}: oracle {numeric}"),
        );
    };
    golden("E(D6)", FamilySpec::Dihedral { m: 3 }, 0, Surd::int(2));
    golden("E(T8)", FamilySpec::Dicyclic { m: 2 }, 0, Surd::int(4));
    golden(
        "E(SD16)",
        FamilySpec::Semidihedral { m: 2 },
        0,
        Surd::int(6),
    );
    for k in 0..3 {
        golden("E/LE/SE(V16)", FamilySpec::V8m { m: 2 }, k, Surd::int(8));
        golden(
            "E/LE/SE(Heis(3))",
            FamilySpec::Heisenberg { p: 3 },
            k,
            Surd::int(12),
        );
    }
    golden("LE(D10)", FamilySpec::Dihedral { m: 5 }, 1, q(10, 3));

    let pp = spectra_pp_quotient(3, 3).unwrap();
    for e in [pp.energy, pp.laplacian_energy, pp.signless_energy] {
        check(&mut failures, e == Surd::int(12), || {
            format!("(p,z)=(3,3): {e}")
        });
    }
    verdict(
        "D6=2, T8=4, SD16=6, V16=8/8/8, 2np=12, LE(D10)=10/3".into(),
        failures,
    )
}

fn border_detection(sweep: &Sweep) -> Outcome {
    let expected = names(["D6", "D8", "T8"]);
    let mut failures = Vec::new();
    for (k, label) in ["E", "LE", "SE"].into_iter().enumerate() {
        let found: BTreeSet<String> = sweep
            .records
            .iter()
            .filter(|r| {
                let o = &r.oracle.energies;
                let v = [o.energy, o.laplacian_energy, o.signless_energy][k];
                EnergyClass::from_comparison(v, r.n_vertices, TOL) == EnergyClass::Border
            })
            .map(|r| r.group.clone())
            .collect();
        check(&mut failures, found == expected, || {
            format!("{label}-border set {found:?}")
        });
    }
    verdict(format!("{expected:?} for E, LE and SE"), failures)
}

fn integrality(sweep: &Sweep) -> Outcome {
    let mut failures = Vec::new();
    let mut dihedral_integral = Vec::new();
    let mut l_integral = 0;
    for spec in &sweep.specs {
        let exact = ExactPolys::compute(&nccc(spec)).unwrap().integrality();
        let predicted = integrality_predicates(spec).unwrap();
        check(&mut failures, exact == predicted, || {
            format!("{spec}: polynomials {exact:?}, predicates {predicted:?}")
        });
        if exact.1 {
            l_integral += 1;
        }
        if let FamilySpec::Dihedral { m } = spec {
            if exact.0 {
                dihedral_integral.push(*m);
            }
        }
    }
    let odd: Vec<u32> = dihedral_integral
        .iter()
        .copied()
        .filter(|m| m % 2 == 1)
        .collect();
    check(&mut failures, odd == [3, 9, 19, 33], || {
        format!("odd integral D2m at {odd:?}")
    });
    check(
        &mut failures,
        dihedral_integral == [3, 4, 6, 8, 9, 18, 19, 32, 33, 38],
        || format!("integral D2m at {dihedral_integral:?}"),
    );
    check(&mut failures, l_integral == sweep.specs.len(), || {
        format!("{l_integral}/{} L-integral", sweep.specs.len())
    });
    verdict(
        format!(
            "{} instances; odd D2m integral at {odd:?}, all D2m integral at {dihedral_integral:?}; all L-integral",
            sweep.specs.len()
        ),
        failures,
    )
}

fn diophantine() -> Outcome {
    let start = Instant::now();
    let sets = diophantine_scan(1_000_000);
    let elapsed = start.elapsed();
    let expected: [Vec<u64>; 3] = [vec![1, 2], vec![2, 4, 11], vec![1]];
    let mut failures = Vec::new();
    check(&mut failures, sets == expected, || format!("sets {sets:?}"));
    check(&mut failures, elapsed < SCAN_BUDGET, || {
        format!("scan took {elapsed:.2?}")
    });
    verdict(
        format!("{{1,2}} {{2,4,11}} {{1}} in {elapsed:.2?}"),
        failures,
    )
}

fn ordering(sweep: &Sweep) -> Outcome {
    let mut failures = Vec::new();
    let mut equal = BTreeSet::new();
    let mut checked = 0;
    for (spec, r) in sweep.pairs() {
        let Ok(predicted) = energy_ordering(spec) else {
            continue;
        };
        checked += 1;
        let o = &r.oracle.energies;
        let observed = ordering_from_values(o.energy, o.laplacian_energy, o.signless_energy, TOL);
        check(&mut failures, observed == predicted, || {
            format!("{spec}: predicted {predicted}, observed {observed}")
        });
        if observed == EnergyOrdering::AllEqual {
            equal.insert(r.group.clone());
        }
    }
    let expected = names(["D6", "D8", "D12", "T8", "T12", "SD24", "V16"]);
    check(&mut failures, equal == expected, || {
        format!("equality set {equal:?}")
    });
    verdict(
        format!("{checked} instances; equality set {equal:?}"),
        failures,
    )
}

fn duality(sweep: &Sweep) -> Outcome {
    let mut failures = Vec::new();
    for spec in &sweep.specs {
        let g = build_group(spec).unwrap();
        let classes = conjugacy_classes(&g);
        let nccc = build_nccc(&g, &classes).unwrap();
        let ccc = build_ccc(&g, &classes).unwrap();
        check(&mut failures, nccc == complement(&ccc), || {
            format!("{spec}: duality")
        });
        let detected = detect_multipartite(&nccc);
        let predicted = family_closed_form(spec).unwrap().shape;
        check(&mut failures, detected.as_ref() == Some(&predicted), || {
            format!("{spec}: detected {detected:?}, predicted {predicted}")
        });
        if let Ok(Quotient::ZpxZp { p, z }) = family_quotient(spec) {
            let n = ((p - 1) * z / p) as usize;
            let shape = MultipartiteShape::new([(p as usize + 1, n)]);
            check(&mut failures, predicted == shape, || {
                format!("{spec}: not (p+1)K_n")
            });
        }
    }
    verdict(format!("{} groups", sweep.specs.len()), failures)
}

fn figures() -> Outcome {
    let mut failures = Vec::new();
    let mut rows_total = 0;
    for id in 1..=10 {
        let fig = figure(id).unwrap();
        let rows = figure_rows(&fig).unwrap();
        rows_total += rows.len();
        for row in &rows {
            check(&mut failures, row.consistent(TOL), || {
                format!("figure {id} m={}: ordering {}", row.m, row.ordering)
            });
            let o = nccc_core::GraphSpectra::compute(&nccc(&fig.spec(row.m)))
                .unwrap()
                .energies;
            let dev = [
                row.e - o.energy,
                row.le - o.laplacian_energy,
                row.se - o.signless_energy,
            ]
            .into_iter()
            .fold(0.0, |a: f64, d| a.max(d.abs()));
            check(&mut failures, dev < TOL, || {
                format!("figure {id} m={}: oracle {dev:e}", row.m)
            });
            if id == 2 && row.m >= 8 {
                check(&mut failures, row.se <= row.le && row.e <= row.se, || {
                    format!("figure 2 m={}: SE ≤ LE, E ≤ SE violated", row.m)
                });
            }
        }
    }
    let anchors = [
        (3, 3, [2.0, 2.0, 2.0]),
        (5, 5, [4.0 * 2f64.sqrt(), 28.0 / 3.0, 28.0 / 3.0]),
        (9, 2, [8.0, 8.0, 8.0]),
    ];
    for (id, m, values) in anchors {
        let rows = figure_rows(&figure(id).unwrap()).unwrap();
        let row = rows.iter().find(|r| r.m == m);
        let ok = row.is_some_and(|r| {
            [r.e, r.le, r.se]
                .iter()
                .zip(values)
                .all(|(a, b)| (a - b).abs() < GOLDEN_TOL)
        });
        check(&mut failures, ok, || {
            format!("figure {id} anchor m={m}: {row:?}")
        });
    }
    let rendered = fmt_significant(28.0 / 3.0, SIG_DIGITS);
    check(&mut failures, rendered == "9.33333333333", || {
        format!("rendering {rendered}")
    });
    verdict(
        format!("10 figures, {rows_total} rows, anchors reproduced"),
        failures,
    )
}

fn main() {
    let sweep = Sweep::run();
    let criteria: [(&str, &dyn Fn() -> Outcome); 8] = [
        ("formula-oracle sweep", &|| formula_oracle_sweep(&sweep)),
        ("golden values", &golden_values),
        ("borderenergetic detection", &|| border_detection(&sweep)),
        ("integrality", &|| integrality(&sweep)),
        ("diophantine scan", &diophantine),
        ("energy ordering", &|| ordering(&sweep)),
        ("structural duality", &|| duality(&sweep)),
        ("figure data", &figures),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
