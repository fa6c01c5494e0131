use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FamilySpec;
use crate::surd::is_perfect_square;

use super::{family_closed_form, family_quotient, Quotient};

/// Energy of a graph relative to the complete graph on the same vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnergyClass {
    Border,
    Hyper,
    Neither,
}

impl EnergyClass {
    /// Compares `value` with `2(n - 1)`, treating differences within `tol` as equal.
    pub fn from_comparison(value: f64, n_vertices: usize, tol: f64) -> Self {
        let complete = 2.0 * (n_vertices as f64 - 1.0);
        if (value - complete).abs() <= tol {
            EnergyClass::Border
        } else if value > complete {
            EnergyClass::Hyper
        } else {
            EnergyClass::Neither
        }
    }
}

impl fmt::Display for EnergyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergyClass::Border => "border",
            EnergyClass::Hyper => "hyper",
            EnergyClass::Neither => "neither",
        })
    }
}

/// One [`EnergyClass`] per matrix type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnergyClasses {
    pub energy: EnergyClass,
    pub laplacian: EnergyClass,
    pub signless: EnergyClass,
}

impl EnergyClasses {
    fn all(c: EnergyClass) -> Self {
        EnergyClasses {
            energy: c,
            laplacian: c,
            signless: c,
        }
    }

    pub fn from_energies(e: f64, le: f64, se: f64, n_vertices: usize, tol: f64) -> Self {
        EnergyClasses {
            energy: EnergyClass::from_comparison(e, n_vertices, tol),
            laplacian: EnergyClass::from_comparison(le, n_vertices, tol),
            signless: EnergyClass::from_comparison(se, n_vertices, tol),
        }
    }
}

impl fmt::Display for EnergyClasses {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.energy, self.laplacian, self.signless)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnergyOrdering {
    /// `E = LE = SE`.
    AllEqual,
    /// `E < LE = SE`.
    ELessLeEqSe,
    /// `E < SE < LE`.
    ELessSeLessLe,
    Other,
}

impl fmt::Display for EnergyOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergyOrdering::AllEqual => "E=LE=SE",
            EnergyOrdering::ELessLeEqSe => "E<LE=SE",
            EnergyOrdering::ELessSeLessLe => "E<SE<LE",
            EnergyOrdering::Other => "other",
        })
    }
}

/// Three-way comparison of energies with equality tolerance `tol`.
pub fn ordering_from_values(e: f64, le: f64, se: f64, tol: f64) -> EnergyOrdering {
    let eq = |a: f64, b: f64| (a - b).abs() <= tol;
    if eq(e, le) && eq(le, se) && eq(e, se) {
        EnergyOrdering::AllEqual
    } else if e < le - tol && eq(le, se) {
        EnergyOrdering::ELessLeEqSe
    } else if e < se - tol && se < le - tol {
        EnergyOrdering::ELessSeLessLe
    } else {
        EnergyOrdering::Other
    }
}

/// Whether `m² + 6m − 7`, `m² + 12m − 28` and `4m² + 12m − 7` are perfect squares.
pub fn perfect_square_predicates(m: u64) -> (bool, bool, bool) {
    let m = m as i64;
    (
        is_perfect_square(m * m + 6 * m - 7),
        is_perfect_square(m * m + 12 * m - 28),
        is_perfect_square(4 * m * m + 12 * m - 7),
    )
}

/// Solution sets of the three predicates over `1..=max`.
pub fn diophantine_scan(max: u64) -> [Vec<u64>; 3] {
    let mut out: [Vec<u64>; 3] = Default::default();
    for m in 1..=max {
        let (a, b, c) = perfect_square_predicates(m);
        for (hit, set) in [a, b, c].into_iter().zip(out.iter_mut()) {
            if hit {
                set.push(m);
            }
        }
    }
    out
}

fn sq(v: i64) -> bool {
    is_perfect_square(v)
}

/// `m` is `2a² + 1` with `a ≥ 1`.
fn odd_integral(m: i64) -> bool {
    m >= 3 && (m - 1) % 2 == 0 && sq((m - 1) / 2)
}

/// Integral, L-integral and Q-integral for a central quotient.
pub fn integrality_quotient(quotient: Quotient) -> (bool, bool, bool) {
    match quotient {
        Quotient::ZpxZp { .. } | Quotient::Dihedral { m: 2, .. } => (true, true, true),
        Quotient::Dihedral { m, z } => {
            let (m, z) = (i64::from(m), i64::from(z));
            if m % 2 == 1 {
                (sq(z * z * (m - 1) / 2), true, true)
            } else {
                (sq(8 * m - 7), true, false)
            }
        }
    }
}

/// Integral, L-integral and Q-integral, per family and parity branch.
pub fn integrality_predicates(spec: &FamilySpec) -> Result<(bool, bool, bool)> {
    spec.validate()?;
    let dihedral_like = |m: i64| {
        if m % 2 == 1 {
            (odd_integral(m), true, true)
        } else if (m / 2) % 2 == 1 {
            (m >= 6 && sq(m - 2), true, true)
        } else {
            (sq(4 * m - 7), true, m == 4)
        }
    };
    Ok(match *spec {
        FamilySpec::Dihedral { m } | FamilySpec::Umn { m, .. } => dihedral_like(i64::from(m)),
        FamilySpec::Dicyclic { m } => {
            let m = i64::from(m);
            if m % 2 == 1 {
                (odd_integral(m), true, true)
            } else {
                (sq(8 * m - 7), true, m == 2)
            }
        }
        FamilySpec::Semidihedral { m } => {
            let m = i64::from(m);
            if m % 2 == 1 {
                (odd_integral(m), true, true)
            } else {
                (sq(16 * m - 7), true, false)
            }
        }
        FamilySpec::V8m { m } => {
            let m = i64::from(m);
            if m % 2 == 0 {
                (sq(8 * m - 7), true, m == 2)
            } else {
                (sq(16 * m - 7), true, false)
            }
        }
        FamilySpec::U6m { .. } | FamilySpec::Heisenberg { .. } => (true, true, true),
        FamilySpec::ExplicitTable(_) => integrality_quotient(family_quotient(spec)?),
    })
}

/// Border/hyper classification for a central quotient.
pub fn energy_classification_quotient(quotient: Quotient) -> EnergyClasses {
    use EnergyClass::*;
    let (m, z) = match quotient {
        Quotient::ZpxZp { p, z } => {
            let n = (p - 1) * z / p;
            return EnergyClasses::all(if n == 1 { Border } else { Neither });
        }
        Quotient::Dihedral { m: 2, z } => {
            return EnergyClasses::all(if z == 2 { Border } else { Neither });
        }
        Quotient::Dihedral { m, z } => (m, z),
    };
    if m == 3 && z == 1 {
        return EnergyClasses::all(Border);
    }
    let l_exception =
        (m >= 5 && z == 1) || (m == 3 && z >= 2) || (m == 5 && z <= 2) || (m == 7 && z == 1);
    let q_exception = l_exception || (m == 4 && z == 2);
    EnergyClasses {
        energy: Neither,
        laplacian: if l_exception { Neither } else { Hyper },
        signless: if q_exception { Neither } else { Hyper },
    }
}

/// Border/hyper classification of a family member.
pub fn energy_classification(spec: &FamilySpec) -> Result<EnergyClasses> {
    use EnergyClass::*;
    Ok(match *spec {
        FamilySpec::V8m { m } => {
            spec.validate()?;
            if m == 2 {
                EnergyClasses::all(Neither)
            } else {
                EnergyClasses {
                    energy: Neither,
                    laplacian: Hyper,
                    signless: Hyper,
                }
            }
        }
        _ => energy_classification_quotient(family_quotient(spec)?),
    })
}

/// Ordering of `E`, `LE`, `SE` for `D_{2m}`, `T_{4m}`, `SD_{8m}` and `V_{8m}`.
pub fn energy_ordering(spec: &FamilySpec) -> Result<EnergyOrdering> {
    use EnergyOrdering::*;
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::Dihedral { m } => match m {
            3 | 4 | 6 => AllEqual,
            m if m % 2 == 1 || (m / 2) % 2 == 1 => ELessLeEqSe,
            _ => ELessSeLessLe,
        },
        FamilySpec::Dicyclic { m } => match m {
            2 | 3 => AllEqual,
            m if m % 2 == 1 => ELessLeEqSe,
            _ => ELessSeLessLe,
        },
        FamilySpec::Semidihedral { m } => match m {
            3 => AllEqual,
            m if m % 2 == 1 => ELessLeEqSe,
            _ => ELessSeLessLe,
        },
        FamilySpec::V8m { m } => match m {
            2 => AllEqual,
            _ => ELessSeLessLe,
        },
        _ => {
            return Err(Error::ClosedForm(format!(
                "no ordering statement covers {spec}"
            )))
        }
    })
}

/// Integrality, energy classes and energy ordering of one family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub integral: bool,
    pub l_integral: bool,
    pub q_integral: bool,
    pub energy_class: EnergyClasses,
    pub ordering: EnergyOrdering,
}

impl ClassificationReport {
    /// Families outside the ordering statement get the ordering of their closed-form energies.
    pub fn for_family(spec: &FamilySpec) -> Result<Self> {
        let (integral, l_integral, q_integral) = integrality_predicates(spec)?;
        let ordering = match energy_ordering(spec) {
            Ok(o) => o,
            Err(_) => {
                let (e, le, se) = family_closed_form(spec)?.energies_f64();
                ordering_from_values(e, le, se, 1e-9)
            }
        };
        Ok(ClassificationReport {
            integral,
            l_integral,
            q_integral,
            energy_class: energy_classification(spec)?,
            ordering,
        })
    }
}
