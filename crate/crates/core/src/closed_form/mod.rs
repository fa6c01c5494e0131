//! Exact closed forms for NCCC-graphs whose central quotient is `Z_p × Z_p`
//! or dihedral, and the per-family specializations.

mod classify;
mod polys;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MultipartiteShape;
use crate::group::{
    build_group, center, central_quotient_kind, is_prime, FamilySpec, QuotientKind,
};
use crate::surd::{ExactSpectrum, Surd, Q};

pub use classify::{
    diophantine_scan, energy_classification, energy_classification_quotient, energy_ordering,
    integrality_predicates, integrality_quotient, ordering_from_values, perfect_square_predicates,
    ClassificationReport, EnergyClass, EnergyClasses, EnergyOrdering,
};
pub use polys::cm_polys;

/// Central quotient together with the center order `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Quotient {
    /// `G/Z(G) ≅ Z_p × Z_p`.
    ZpxZp { p: u32, z: u32 },
    /// `G/Z(G) ≅ D_{2m}`.
    Dihedral { m: u32, z: u32 },
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Quotient::ZpxZp { p, z } => write!(f, "Z{p}xZ{p} (z = {z})"),
            Quotient::Dihedral { m, z } => write!(f, "D{} (z = {z})", 2 * m),
        }
    }
}

/// Exact spectra and energies of one NCCC-graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormResult {
    pub shape: MultipartiteShape,
    pub spec_a: ExactSpectrum,
    pub spec_l: ExactSpectrum,
    pub spec_q: ExactSpectrum,
    pub energy: Surd,
    pub laplacian_energy: Surd,
    pub signless_energy: Surd,
    pub case_tag: String,
}

impl ClosedFormResult {
    pub fn n_vertices(&self) -> usize {
        self.shape.n_vertices()
    }

    pub fn n_edges(&self) -> usize {
        self.shape.n_edges()
    }

    /// Average degree `2e/n`.
    pub fn delta(&self) -> Q {
        Q::new(2 * self.n_edges() as i64, self.n_vertices() as i64)
    }

    /// `(E, LE, SE)` summed directly from the spectra.
    pub fn energies_from_spectra(&self) -> Option<(Surd, Surd, Surd)> {
        let delta = self.delta();
        Some((
            self.spec_a.absolute_deviation(Q::from_integer(0))?,
            self.spec_l.absolute_deviation(delta)?,
            self.spec_q.absolute_deviation(delta)?,
        ))
    }

    pub fn energies_f64(&self) -> (f64, f64, f64) {
        (
            self.energy.to_f64(),
            self.laplacian_energy.to_f64(),
            self.signless_energy.to_f64(),
        )
    }

    /// Copy with the sign of the largest adjacency eigenvalue flipped.
    pub fn perturbed(&self) -> Self {
        let mut out = self.clone();
        let mut entries = out.spec_a.entries.clone();
        if let Some(last) = entries.last_mut() {
            last.0 = -last.0;
        }
        out.spec_a = ExactSpectrum::new(entries);
        out.case_tag.push_str(" [perturbed]");
        out
    }
}

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

fn int(v: i64) -> Surd {
    Surd::int(v)
}

fn rat(n: i64, d: i64) -> Surd {
    Surd::rational(q(n, d))
}

/// `√(n/d)`.
fn root(n: i64, d: i64) -> Surd {
    Surd::sqrt_rational(q(n, d))
}

fn mult(v: i64) -> usize {
    usize::try_from(v).expect("multiplicity must be non-negative")
}

/// Closed form for `G/Z(G) ≅ Z_p × Z_p` with `|Z(G)| = z`; requires `p | z`.
pub fn spectra_pp_quotient(p: u32, z: u32) -> Result<ClosedFormResult> {
    if !is_prime(u64::from(p)) {
        return Err(Error::ClosedForm(format!("p = {p} is not prime")));
    }
    if z == 0 || !z.is_multiple_of(p) {
        return Err(Error::ClosedForm(format!("p = {p} must divide z = {z}")));
    }
    let (p, z) = (i64::from(p), i64::from(z));
    let n = (p - 1) * z / p;
    let spec_a = ExactSpectrum::new(vec![
        (int(0), mult((p + 1) * (n - 1))),
        (int(-n), mult(p)),
        (int(n * p), 1),
    ]);
    let spec_l = ExactSpectrum::new(vec![
        (int(0), 1),
        (int(n * p), mult((p + 1) * (n - 1))),
        (int((p + 1) * n), mult(p)),
    ]);
    let spec_q = ExactSpectrum::new(vec![
        (int(n * p), mult((p + 1) * (n - 1))),
        (int(n * (p - 1)), mult(p)),
        (int(2 * n * p), 1),
    ]);
    let e = int(2 * n * p);
    Ok(ClosedFormResult {
        shape: MultipartiteShape::new([(mult(p + 1), mult(n))]),
        spec_a,
        spec_l,
        spec_q,
        energy: e,
        laplacian_energy: e,
        signless_energy: e,
        case_tag: "Zp x Zp quotient".into(),
    })
}

/// Closed form for a group of order `p^k` with center of order `p^{k-2}`.
pub fn spectra_p_group(p: u32, k: u32) -> Result<ClosedFormResult> {
    if k < 3 {
        return Err(Error::ClosedForm(format!(
            "order p^{k} has no non-abelian group"
        )));
    }
    let z = p
        .checked_pow(k - 2)
        .ok_or_else(|| Error::ClosedForm("center order overflows".into()))?;
    spectra_pp_quotient(p, z)
}

/// Closed form for `G/Z(G) ≅ D_{2m}` with `|Z(G)| = z`; even `m` needs even `z`.
pub fn spectra_d2m_quotient(m: u32, z: u32) -> Result<ClosedFormResult> {
    if m < 2 || z == 0 {
        return Err(Error::ClosedForm(format!(
            "need m >= 2 and z >= 1, got m = {m}, z = {z}"
        )));
    }
    if m.is_multiple_of(2) && !z.is_multiple_of(2) {
        return Err(Error::ClosedForm(format!(
            "even m = {m} requires even z, got {z}"
        )));
    }
    let (m, z) = (i64::from(m), i64::from(z));
    let n_vertices = z * (m + 1) / 2;
    let k = (m - 1) * z / 2;
    if m % 2 == 0 {
        let d_a = 8 * m - 7;
        let d_q = (m - 1) * (m + 7);
        let half = |s: i64| Surd::new(q(z, 4), q(s * z, 4), d_a as u64);
        let spec_a = ExactSpectrum::new(vec![
            (int(0), mult(n_vertices - 3)),
            (rat(-z, 2), 1),
            (half(1), 1),
            (half(-1), 1),
        ]);
        let spec_l = ExactSpectrum::new(vec![
            (int(0), 1),
            (int(z), mult(k - 1)),
            (rat(z * m, 2), mult(z - 2)),
            (rat(z * (m + 1), 2), 2),
        ]);
        let quad = |s: i64| Surd::new(q(z * (m + 3), 4), q(s * z, 4), d_q as u64);
        let spec_q = ExactSpectrum::new(vec![
            (int(z), mult(k - 1)),
            (rat(z * m, 2), mult(z - 2)),
            (rat(z * (m - 1), 2), 1),
            (quad(1), 1),
            (quad(-1), 1),
        ]);
        let energy = Surd::new(q(z, 2), q(z, 2), d_a as u64);
        let le = rat(z * z * (m - 1) * (m - 2), m + 1) + int(2 * z);
        let se = if m == 2 {
            int(2 * z)
        } else {
            rat(z * z * (m - 1) * (m - 2), m + 1)
                + (root(m + 7, m - 1) - int(1)).scale(q(z * (m - 1), 2))
        };
        Ok(ClosedFormResult {
            shape: MultipartiteShape::new([(2, mult(z / 2)), (1, mult(k))]),
            spec_a,
            spec_l,
            spec_q,
            energy,
            laplacian_energy: le,
            signless_energy: se,
            case_tag: "D2m quotient, m even".into(),
        })
    } else {
        let r = root(m - 1, 2).scale(Q::from_integer(z));
        let spec_a = ExactSpectrum::new(vec![(int(0), mult(n_vertices - 2)), (r, 1), (-r, 1)]);
        let spec_l = ExactSpectrum::new(vec![
            (int(0), 1),
            (int(z), mult(k - 1)),
            (int(k), mult(z - 1)),
            (rat(z * (m + 1), 2), 1),
        ]);
        let le = rat(z * z * (m - 1) * (m - 3), m + 1) + int(2 * z);
        Ok(ClosedFormResult {
            shape: MultipartiteShape::new([(1, mult(z)), (1, mult(k))]),
            spec_a,
            spec_q: spec_l.clone(),
            spec_l,
            energy: r.scale(q(2, 1)),
            laplacian_energy: le,
            signless_energy: le,
            case_tag: "D2m quotient, m odd".into(),
        })
    }
}

/// Closed form for a recognized central quotient.
pub fn spectra_for_quotient(quotient: Quotient) -> Result<ClosedFormResult> {
    match quotient {
        Quotient::ZpxZp { p, z } => spectra_pp_quotient(p, z),
        Quotient::Dihedral { m, z } => spectra_d2m_quotient(m, z),
    }
}

/// The central quotient and center order of a family member.
///
/// Explicit tables are built and recognized; named families are mapped directly.
pub fn family_quotient(spec: &FamilySpec) -> Result<Quotient> {
    spec.validate()?;
    let zp = |z| Quotient::ZpxZp { p: 2, z };
    let dih = |m, z| Quotient::Dihedral { m, z };
    Ok(match *spec {
        FamilySpec::Dihedral { m } if m % 2 == 1 => dih(m, 1),
        FamilySpec::Dihedral { m: 4 } => zp(2),
        FamilySpec::Dihedral { m } => dih(m / 2, 2),
        FamilySpec::Dicyclic { m: 2 } => zp(2),
        FamilySpec::Dicyclic { m } => dih(m, 2),
        FamilySpec::Semidihedral { m } if m % 2 == 0 => dih(2 * m, 2),
        FamilySpec::Semidihedral { m } => dih(m, 4),
        FamilySpec::Umn { n, m } if m % 2 == 1 => dih(m, n),
        FamilySpec::Umn { n, m: 4 } => zp(2 * n),
        FamilySpec::Umn { n, m } => dih(m / 2, 2 * n),
        FamilySpec::U6m { m } => dih(3, m),
        FamilySpec::V8m { m: 2 } => zp(4),
        FamilySpec::V8m { m } if m % 2 == 0 => dih(m, 4),
        FamilySpec::V8m { m } => dih(2 * m, 2),
        FamilySpec::Heisenberg { p } => Quotient::ZpxZp { p, z: p },
        FamilySpec::ExplicitTable(_) => {
            let g = build_group(spec)?;
            let z = center(&g).len() as u32;
            match central_quotient_kind(&g)? {
                QuotientKind::ZpxZp { p } => Quotient::ZpxZp { p, z },
                QuotientKind::Dihedral { m } => Quotient::Dihedral { m, z },
                QuotientKind::Other => {
                    return Err(Error::ClosedForm(
                        "central quotient is neither Zp x Zp nor dihedral".into(),
                    ))
                }
            }
        }
    })
}

/// Branch label of the per-family formulas.
pub fn family_case_tag(spec: &FamilySpec) -> String {
    let parity = |m: u32| {
        if m % 2 == 1 {
            "m odd"
        } else if (m / 2) % 2 == 1 {
            "m even, m/2 odd"
        } else {
            "m even, m/2 even"
        }
    };
    let odd_even = |m: u32| if m % 2 == 1 { "m odd" } else { "m even" };
    match *spec {
        FamilySpec::Dihedral { m } => format!("D2m, {}", parity(m)),
        FamilySpec::Dicyclic { m } => format!("T4m, {}", odd_even(m)),
        FamilySpec::Semidihedral { m } => format!("SD8m, {}", odd_even(m)),
        FamilySpec::Umn { m, .. } => format!("U(n,m), {}", parity(m)),
        FamilySpec::U6m { .. } => "U6m".into(),
        FamilySpec::V8m { m } => format!("V8m, {}", odd_even(m)),
        FamilySpec::Heisenberg { .. } => "Heisenberg, Zp x Zp quotient".into(),
        FamilySpec::ExplicitTable(_) => "explicit table".into(),
    }
}

/// `(E, LE, SE)` from the per-family energy formulas, where the family has them.
pub fn family_energies(spec: &FamilySpec) -> Option<(Surd, Surd, Surd)> {
    let sq = |v: i64| Surd::sqrt_int(v as u64);
    let one = int(1);
    Some(match *spec {
        FamilySpec::Dihedral { m } => {
            let m = i64::from(m);
            if m % 2 == 1 {
                let le = rat((m - 1) * (m - 3), m + 1) + int(2);
                (root(m - 1, 2).scale(q(2, 1)), le, le)
            } else if (m / 2) % 2 == 1 {
                let le = rat(2 * (m - 2) * (m - 6), m + 2) + int(4);
                (sq(m - 2).scale(q(2, 1)), le, le)
            } else {
                let le = rat(2 * (m - 2) * (m - 4), m + 2) + int(4);
                let se = if m == 4 {
                    int(4)
                } else {
                    rat(2 * (m - 2) * (m - 4), m + 2)
                        + (root(m + 14, m - 2) - one).scale(q(m - 2, 2))
                };
                (one + sq(4 * m - 7), le, se)
            }
        }
        FamilySpec::Dicyclic { m } => {
            let m = i64::from(m);
            if m % 2 == 0 {
                let le = rat(4 * (m - 1) * (m - 2), m + 1) + int(4);
                let se = if m == 2 {
                    int(4)
                } else {
                    rat(4 * (m - 1) * (m - 2), m + 1)
                        + (root(m + 7, m - 1) - one).scale(q(m - 1, 1))
                };
                (one + sq(8 * m - 7), le, se)
            } else {
                let le = rat(4 * (m - 1) * (m - 3), m + 1) + int(4);
                (root(m - 1, 2).scale(q(4, 1)), le, le)
            }
        }
        FamilySpec::U6m { m } => {
            let e = int(2 * i64::from(m));
            (e, e, e)
        }
        FamilySpec::Umn { n, m } => {
            let (n, m) = (i64::from(n), i64::from(m));
            if m % 2 == 1 {
                let le = rat(n * n * (m - 1) * (m - 3), m + 1) + int(2 * n);
                (root(m - 1, 2).scale(q(2 * n, 1)), le, le)
            } else if (m / 2) % 2 == 1 {
                let le = rat(2 * n * n * (m - 2) * (m - 6), m + 2) + int(4 * n);
                (sq(m - 2).scale(q(2 * n, 1)), le, le)
            } else {
                let le = rat(2 * n * n * (m - 2) * (m - 4), m + 2) + int(4 * n);
                let se = if m == 4 {
                    int(4 * n)
                } else {
                    rat(2 * n * n * (m - 2) * (m - 4), m + 2)
                        + (root(m + 14, m - 2) - one).scale(q(n * (m - 2), 2))
                };
                ((one + sq(4 * m - 7)).scale(q(n, 1)), le, se)
            }
        }
        FamilySpec::Semidihedral { m } => {
            let m = i64::from(m);
            if m % 2 == 0 {
                let base = rat(4 * (2 * m - 1) * (2 * m - 2), 2 * m + 1);
                let se = base + (root(2 * m + 7, 2 * m - 1) - one).scale(q(2 * m - 1, 1));
                (one + sq(16 * m - 7), base + int(4), se)
            } else {
                let le = rat(16 * (m - 1) * (m - 3), m + 1) + int(8);
                (root(m - 1, 2).scale(q(8, 1)), le, le)
            }
        }
        FamilySpec::V8m { m } => {
            let m = i64::from(m);
            if m % 2 == 0 {
                let le = rat(16 * (m - 1) * (m - 2), m + 1) + int(8);
                let se = if m == 2 {
                    int(8)
                } else {
                    rat(16 * (m - 1) * (m - 2), m + 1)
                        + (root(m + 7, m - 1) - one).scale(q(2 * (m - 1), 1))
                };
                ((one + sq(8 * m - 7)).scale(q(2, 1)), le, se)
            } else {
                let le = rat((4 * m - 2) * (4 * m - 2) + 8, 2 * m + 1);
                let se = rat(3 * (2 * m - 1) * (2 * m - 3), 2 * m + 1)
                    + root(2 * m + 7, 2 * m - 1).scale(q(2 * m - 1, 1));
                (one + sq(16 * m - 7), le, se)
            }
        }
        FamilySpec::Heisenberg { p } => {
            let p = i64::from(p);
            let e = int(2 * p * (p - 1));
            (e, e, e)
        }
        FamilySpec::ExplicitTable(_) => return None,
    })
}

/// Exact spectra and energies of the NCCC-graph of a family member.
///
/// Spectra come from the quotient closed form; energies from the per-family
/// formulas where those exist.
pub fn family_closed_form(spec: &FamilySpec) -> Result<ClosedFormResult> {
    let quotient = family_quotient(spec)?;
    let mut result = spectra_for_quotient(quotient)?;
    if let Some((e, le, se)) = family_energies(spec) {
        result.energy = e;
        result.laplacian_energy = le;
        result.signless_energy = se;
    }
    result.case_tag = format!("{} ({})", family_case_tag(spec), result.case_tag);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_self_consistent(r: &ClosedFormResult) {
        let n = r.n_vertices();
        assert_eq!(r.spec_a.len(), n, "{}", r.case_tag);
        assert_eq!(r.spec_l.len(), n, "{}", r.case_tag);
        assert_eq!(r.spec_q.len(), n, "{}", r.case_tag);
        assert_eq!(r.spec_a.trace().unwrap(), int(0));
        let two_e = int(2 * r.n_edges() as i64);
        assert_eq!(r.spec_l.trace().unwrap(), two_e);
        assert_eq!(r.spec_q.trace().unwrap(), two_e);
        let (e, le, se) = r.energies_from_spectra().unwrap();
        assert_eq!(e, r.energy, "E {}", r.case_tag);
        assert_eq!(le, r.laplacian_energy, "LE {}", r.case_tag);
        assert_eq!(se, r.signless_energy, "SE {}", r.case_tag);
    }

    #[test]
    fn pp_quotient_examples() {
        let r = spectra_pp_quotient(2, 2).unwrap();
        assert_eq!(r.spec_a.entries, vec![(int(-1), 2), (int(2), 1)]);
        assert_eq!(r.energy, int(4));
        let r = spectra_pp_quotient(3, 3).unwrap();
        assert_eq!(
            r.spec_a.entries,
            vec![(int(-2), 3), (int(0), 4), (int(6), 1)]
        );
        assert_eq!(
            r.spec_l.entries,
            vec![(int(0), 1), (int(6), 4), (int(8), 3)]
        );
        assert_eq!(
            (r.energy, r.laplacian_energy, r.signless_energy),
            (int(12), int(12), int(12))
        );
        assert_eq!(r.shape, MultipartiteShape::new([(4, 2)]));
        assert!(spectra_pp_quotient(3, 2).is_err());
        assert!(spectra_pp_quotient(4, 4).is_err());
        assert_eq!(spectra_p_group(3, 3).unwrap(), r);
    }

    #[test]
    fn d2m_quotient_examples() {
        let r = spectra_d2m_quotient(3, 1).unwrap();
        assert_eq!(r.spec_a.entries, vec![(int(-1), 1), (int(1), 1)]);
        assert_eq!(
            (r.energy, r.laplacian_energy, r.signless_energy),
            (int(2), int(2), int(2))
        );

        let r = spectra_d2m_quotient(2, 2).unwrap();
        assert_eq!(r.spec_a.entries, vec![(int(-1), 2), (int(2), 1)]);
        assert_eq!(r.energy, int(4));

        let r = spectra_d2m_quotient(5, 2).unwrap();
        assert_eq!(r.energy, Surd::new(q(0, 1), q(4, 1), 2));
        assert_eq!(r.laplacian_energy, rat(28, 3));
        assert_eq!(r.signless_energy, rat(28, 3));

        assert!(spectra_d2m_quotient(4, 3).is_err());
        assert!(spectra_d2m_quotient(1, 1).is_err());
    }

    #[test]
    fn d2m_quotient_with_m_two_agrees_with_pp_quotient() {
        for z in (2..=20).step_by(2) {
            let a = spectra_d2m_quotient(2, z).unwrap();
            let b = spectra_pp_quotient(2, z).unwrap();
            assert_eq!(a.shape, b.shape);
            assert_eq!(a.spec_a, b.spec_a);
            assert_eq!(a.spec_l, b.spec_l);
            assert_eq!(a.spec_q, b.spec_q);
            assert_eq!(
                (a.energy, a.laplacian_energy, a.signless_energy),
                (b.energy, b.laplacian_energy, b.signless_energy)
            );
        }
    }

    #[test]
    fn quotient_energies_match_their_spectra() {
        for m in 2..=40 {
            for z in 1..=12 {
                if let Ok(r) = spectra_d2m_quotient(m, z) {
                    check_self_consistent(&r);
                }
            }
        }
        for p in [2, 3, 5, 7] {
            for k in 1..=4 {
                check_self_consistent(&spectra_pp_quotient(p, p * k).unwrap());
            }
        }
    }

    fn sample_specs() -> Vec<FamilySpec> {
        let mut v = Vec::new();
        for m in 3..=40 {
            v.push(FamilySpec::Dihedral { m });
        }
        for m in 2..=30 {
            v.push(FamilySpec::Dicyclic { m });
            v.push(FamilySpec::Semidihedral { m });
            v.push(FamilySpec::U6m { m });
            v.push(FamilySpec::V8m { m });
        }
        for n in 2..=6 {
            for m in 3..=16 {
                v.push(FamilySpec::Umn { n, m });
            }
        }
        for p in [2, 3, 5, 7] {
            v.push(FamilySpec::Heisenberg { p });
        }
        v
    }

    #[test]
    fn family_formulas_match_quotient_forms() {
        for spec in sample_specs() {
            let quotient_form = spectra_for_quotient(family_quotient(&spec).unwrap()).unwrap();
            let (e, le, se) = family_energies(&spec).unwrap();
            assert_eq!(e, quotient_form.energy, "E of {spec}");
            assert_eq!(le, quotient_form.laplacian_energy, "LE of {spec}");
            assert_eq!(se, quotient_form.signless_energy, "SE of {spec}");
            check_self_consistent(&family_closed_form(&spec).unwrap());
        }
    }

    #[test]
    fn family_examples() {
        let d24 = family_closed_form(&FamilySpec::Dihedral { m: 12 }).unwrap();
        assert_eq!(d24.energy, Surd::new(q(1, 1), q(1, 1), 41));
        assert_eq!(d24.laplacian_energy, rat(108, 7));

        let sd16 = family_closed_form(&FamilySpec::Semidihedral { m: 2 }).unwrap();
        assert_eq!(
            sd16.spec_a.entries,
            vec![(int(-2), 1), (int(-1), 1), (int(0), 2), (int(3), 1)]
        );
        assert_eq!(sd16.energy, int(6));

        let v16 = family_closed_form(&FamilySpec::V8m { m: 2 }).unwrap();
        assert_eq!(
            (v16.energy, v16.laplacian_energy, v16.signless_energy),
            (int(8), int(8), int(8))
        );
        assert_eq!(v16.shape, MultipartiteShape::new([(3, 2)]));

        let v24 = family_closed_form(&FamilySpec::V8m { m: 3 }).unwrap();
        assert_eq!(v24.shape, MultipartiteShape::new([(2, 1), (1, 5)]));

        let d10 = family_closed_form(&FamilySpec::Dihedral { m: 5 }).unwrap();
        assert_eq!(d10.energy, Surd::new(q(0, 1), q(2, 1), 2));
        assert_eq!(d10.laplacian_energy, rat(10, 3));

        let u12 = family_closed_form(&FamilySpec::U6m { m: 2 }).unwrap();
        assert_eq!(u12.energy, int(4));
        assert!(u12.case_tag.starts_with("U6m"));
    }

    #[test]
    fn quotient_mapping_matches_constructed_groups() {
        for spec in sample_specs()
            .into_iter()
            .filter(|s| s.expected_order() <= 120)
        {
            let g = build_group(&spec).unwrap();
            let expected = match family_quotient(&spec).unwrap() {
                Quotient::ZpxZp { p, z } => (QuotientKind::ZpxZp { p }, z),
                Quotient::Dihedral { m, z } => (QuotientKind::Dihedral { m }, z),
            };
            let got = (central_quotient_kind(&g).unwrap(), center(&g).len() as u32);
            assert_eq!(got, expected, "{spec}");
        }
    }

    #[test]
    fn explicit_tables_use_recognition() {
        let g = build_group(&FamilySpec::Dicyclic { m: 3 }).unwrap();
        let spec = FamilySpec::ExplicitTable(crate::group::TableSpec::from_group(&g));
        assert_eq!(
            family_quotient(&spec).unwrap(),
            Quotient::Dihedral { m: 3, z: 2 }
        );
        let r = family_closed_form(&spec).unwrap();
        assert_eq!(
            r.energy,
            family_closed_form(&FamilySpec::Dicyclic { m: 3 })
                .unwrap()
                .energy
        );
    }

    #[test]
    fn perturbation_changes_adjacency_only() {
        let r = family_closed_form(&FamilySpec::Dihedral { m: 5 }).unwrap();
        let p = r.perturbed();
        assert_ne!(p.spec_a, r.spec_a);
        assert_eq!(p.spec_l, r.spec_l);
        assert_eq!(p.spec_a.len(), r.spec_a.len());
    }
}
