//! Concrete finite groups given by Cayley tables.
//!
//! The families used throughout the crate are realized through normal forms
//! `x^i y^j` with explicit multiplication rules on exponent pairs. Nothing
//! about a rule is trusted: every table goes through [`FiniteGroup::from_table`],
//! which checks closure, identity, inverses, the Latin-square property and
//! associativity before a group is handed out.

use std::fmt;
use std::path::Path;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Orders up to this bound get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 512;
/// Number of random triples sampled above [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`].
pub const SAMPLED_ASSOCIATIVITY_TRIPLES: usize = 1_000_000;

/// A Cayley table as read from JSON: `{"order": n, "table": [[...]], "labels": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSpec {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Vec<String>,
}

impl TableSpec {
    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }

    pub fn from_group(group: &FiniteGroup) -> Self {
        let n = group.order();
        TableSpec {
            order: n,
            table: (0..n)
                .map(|a| (0..n).map(|b| group.mul(a, b)).collect())
                .collect(),
            labels: group.labels().to_vec(),
        }
    }
}

/// One of the group families, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `D_{2m} = <x, y | x^m = y^2 = 1, y x y^-1 = x^-1>`, m >= 3.
    Dihedral {
        m: u32,
    },
    /// `T_{4m} = <x, y | x^{2m} = 1, x^m = y^2, y^-1 x y = x^-1>`, m >= 2.
    Dicyclic {
        m: u32,
    },
    /// `SD_{8m} = <x, y | x^{4m} = y^2 = 1, y x y = x^{2m-1}>`, m >= 2.
    Semidihedral {
        m: u32,
    },
    /// `U_(n,m) = <x, y | x^{2n} = y^m = 1, x^-1 y x = y^-1>`, n >= 2, m >= 3.
    Umn {
        n: u32,
        m: u32,
    },
    /// `U_{6m} = <x, y | x^{2m} = y^3 = 1, x^-1 y x = y^-1>`, m >= 2.
    U6m {
        m: u32,
    },
    /// `V_{8m} = <x, y | x^{2m} = y^4 = 1, y x = x^-1 y^-1, y^-1 x = x^-1 y>`, m >= 2.
    V8m {
        m: u32,
    },
    /// Upper unitriangular 3x3 matrices over Z/p, order p^3.
    Heisenberg {
        p: u32,
    },
    ExplicitTable(TableSpec),
}

fn out_of_bounds(
    family: &'static str,
    param: &'static str,
    value: u32,
    requirement: &'static str,
) -> Error {
    Error::ParameterOutOfBounds {
        family,
        param,
        value: u64::from(value),
        requirement,
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FamilySpec {
    pub fn dihedral(m: u32) -> Result<Self> {
        let spec = FamilySpec::Dihedral { m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn dicyclic(m: u32) -> Result<Self> {
        let spec = FamilySpec::Dicyclic { m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn semidihedral(m: u32) -> Result<Self> {
        let spec = FamilySpec::Semidihedral { m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn umn(n: u32, m: u32) -> Result<Self> {
        let spec = FamilySpec::Umn { n, m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn u6m(m: u32) -> Result<Self> {
        let spec = FamilySpec::U6m { m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn v8m(m: u32) -> Result<Self> {
        let spec = FamilySpec::V8m { m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn heisenberg(p: u32) -> Result<Self> {
        let spec = FamilySpec::Heisenberg { p };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks the parameter bounds of the family.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Dihedral { m } if m < 3 => Err(out_of_bounds("D2m", "m", m, "m >= 3")),
            FamilySpec::Dicyclic { m } if m < 2 => Err(out_of_bounds("T4m", "m", m, "m >= 2")),
            FamilySpec::Semidihedral { m } if m < 2 => Err(out_of_bounds("SD8m", "m", m, "m >= 2")),
            FamilySpec::Umn { n, .. } if n < 2 => Err(out_of_bounds("U(n,m)", "n", n, "n >= 2")),
            FamilySpec::Umn { m, .. } if m < 3 => Err(out_of_bounds("U(n,m)", "m", m, "m >= 3")),
            FamilySpec::U6m { m } if m < 2 => Err(out_of_bounds("U6m", "m", m, "m >= 2")),
            FamilySpec::V8m { m } if m < 2 => Err(out_of_bounds("V8m", "m", m, "m >= 2")),
            FamilySpec::Heisenberg { p } if !is_prime(u64::from(p)) => {
                Err(out_of_bounds("Heisenberg", "p", p, "p prime"))
            }
            FamilySpec::ExplicitTable(ref t) if t.order == 0 => {
                Err(Error::Table("order must be positive".into()))
            }
            _ => Ok(()),
        }
    }

    /// The order of the group this spec describes.
    pub fn expected_order(&self) -> usize {
        match *self {
            FamilySpec::Dihedral { m } => 2 * m as usize,
            FamilySpec::Dicyclic { m } => 4 * m as usize,
            FamilySpec::Semidihedral { m } => 8 * m as usize,
            FamilySpec::Umn { n, m } => 2 * (n as usize) * (m as usize),
            FamilySpec::U6m { m } => 6 * m as usize,
            FamilySpec::V8m { m } => 8 * m as usize,
            FamilySpec::Heisenberg { p } => (p as usize).pow(3),
            FamilySpec::ExplicitTable(ref t) => t.order,
        }
    }

    /// Short family tag as used on the command line.
    pub fn family_tag(&self) -> &'static str {
        match self {
            FamilySpec::Dihedral { .. } => "d2m",
            FamilySpec::Dicyclic { .. } => "t4m",
            FamilySpec::Semidihedral { .. } => "sd8m",
            FamilySpec::Umn { .. } => "umn",
            FamilySpec::U6m { .. } => "u6m",
            FamilySpec::V8m { .. } => "v8m",
            FamilySpec::Heisenberg { .. } => "heis",
            FamilySpec::ExplicitTable(_) => "table",
        }
    }

    /// Family parameters in a fixed order (`n` before `m` for `U(n,m)`).
    pub fn params(&self) -> Vec<(&'static str, u32)> {
        match *self {
            FamilySpec::Dihedral { m }
            | FamilySpec::Dicyclic { m }
            | FamilySpec::Semidihedral { m }
            | FamilySpec::U6m { m }
            | FamilySpec::V8m { m } => vec![("m", m)],
            FamilySpec::Umn { n, m } => vec![("n", n), ("m", m)],
            FamilySpec::Heisenberg { p } => vec![("p", p)],
            FamilySpec::ExplicitTable(ref t) => vec![("order", t.order as u32)],
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Dihedral { m } => write!(f, "D{}", 2 * m),
            FamilySpec::Dicyclic { m } => write!(f, "T{}", 4 * m),
            FamilySpec::Semidihedral { m } => write!(f, "SD{}", 8 * m),
            FamilySpec::Umn { n, m } => write!(f, "U({n},{m})"),
            FamilySpec::U6m { m } => write!(f, "U{}", 6 * m),
            FamilySpec::V8m { m } => write!(f, "V{}", 8 * m),
            FamilySpec::Heisenberg { p } => write!(f, "Heis({p})"),
            FamilySpec::ExplicitTable(ref t) => write!(f, "Table({})", t.order),
        }
    }
}

/// A finite group stored as a full Cayley table. Element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates a Cayley table and wraps it as a group.
    ///
    /// Element 0 must be the identity. Missing labels default to `g<i>`.
    pub fn from_table(rows: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidGroup(format!(
                    "row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= order {
                    return Err(Error::InvalidGroup(format!(
                        "product {a}*{b} = {c} is outside 0..{order}"
                    )));
                }
            }
            table.extend_from_slice(row);
        }
        let labels = if labels.is_empty() {
            (0..order).map(|i| format!("g{i}")).collect()
        } else if labels.len() == order {
            labels
        } else {
            return Err(Error::InvalidGroup(format!(
                "{} labels for {order} elements",
                labels.len()
            )));
        };
        Self::validated(order, table, labels)
    }

    pub fn from_table_spec(spec: &TableSpec) -> Result<Self> {
        if spec.table.len() != spec.order {
            return Err(Error::Table(format!(
                "declared order {} but table has {} rows",
                spec.order,
                spec.table.len()
            )));
        }
        Self::from_table(spec.table.clone(), spec.labels.clone())
    }

    fn validated(order: usize, table: Vec<usize>, labels: Vec<String>) -> Result<Self> {
        let at = |a: usize, b: usize| table[a * order + b];

        for g in 0..order {
            if at(0, g) != g || at(g, 0) != g {
                return Err(Error::InvalidGroup(format!(
                    "element 0 is not a two-sided identity (fails at {g})"
                )));
            }
        }

        // Latin square: every row and column is a permutation.
        let mut seen = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let c = at(a, b);
                if seen[c] == a {
                    return Err(Error::InvalidGroup(format!("row {a} repeats {c}")));
                }
                seen[c] = a;
            }
        }
        seen.iter_mut().for_each(|s| *s = usize::MAX);
        for b in 0..order {
            for a in 0..order {
                let c = at(a, b);
                if seen[c] == b {
                    return Err(Error::InvalidGroup(format!("column {b} repeats {c}")));
                }
                seen[c] = b;
            }
        }

        let mut inverses = vec![0; order];
        for (g, inv) in inverses.iter_mut().enumerate() {
            match (0..order).find(|&h| at(g, h) == 0) {
                Some(h) if at(h, g) == 0 => *inv = h,
                _ => {
                    return Err(Error::InvalidGroup(format!(
                        "element {g} has no two-sided inverse"
                    )))
                }
            }
        }

        let assoc = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
        if order <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x6e63_6363);
            for _ in 0..SAMPLED_ASSOCIATIVITY_TRIPLES {
                let (a, b, c) = (
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                );
                if !assoc(a, b, c) {
                    return Err(Error::InvalidGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }

        Ok(FiniteGroup {
            order,
            table,
            inverses,
            labels,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `h g h^-1`.
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut cur = g;
        while cur != 0 {
            cur = self.mul(cur, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }
}

/// Commutation test as a free function.
pub fn commutes(group: &FiniteGroup, a: usize, b: usize) -> bool {
    group.commutes(a, b)
}

fn monomial(i: u32, j: u32) -> String {
    let part = |sym: &str, e: u32| match e {
        0 => None,
        1 => Some(sym.to_string()),
        _ => Some(format!("{sym}^{e}")),
    };
    let parts: Vec<String> = [part("x", i), part("y", j)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

/// Builds the table on normal forms `x^i y^j` (0 <= i < x_order, 0 <= j < y_order),
/// indexed lexicographically in `(i, j)`.
fn from_normal_forms(
    x_order: u32,
    y_order: u32,
    rule: impl Fn((u32, u32), (u32, u32)) -> (u32, u32),
) -> Result<FiniteGroup> {
    let index = |(i, j): (u32, u32)| (i * y_order + j) as usize;
    let forms: Vec<(u32, u32)> = (0..x_order)
        .flat_map(|i| (0..y_order).map(move |j| (i, j)))
        .collect();
    let rows = forms
        .iter()
        .map(|&a| forms.iter().map(|&b| index(rule(a, b))).collect())
        .collect();
    let labels = forms.iter().map(|&(i, j)| monomial(i, j)).collect();
    FiniteGroup::from_table(rows, labels)
}

/// Reduces `value` modulo `modulus` into `0..modulus`.
fn md(value: i64, modulus: u32) -> u32 {
    value.rem_euclid(i64::from(modulus)) as u32
}

fn sign(j: u32) -> i64 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn dihedral(m: u32) -> Result<FiniteGroup> {
    // y x = x^-1 y
    from_normal_forms(m, 2, |(i, j), (k, l)| {
        (md(i64::from(i) + sign(j) * i64::from(k), m), (j + l) % 2)
    })
}

fn dicyclic(m: u32) -> Result<FiniteGroup> {
    // y x = x^-1 y, y^2 = x^m
    let xo = 2 * m;
    from_normal_forms(xo, 2, move |(i, j), (k, l)| {
        let carry = if j == 1 && l == 1 { i64::from(m) } else { 0 };
        (
            md(i64::from(i) + sign(j) * i64::from(k) + carry, xo),
            (j + l) % 2,
        )
    })
}

fn semidihedral(m: u32) -> Result<FiniteGroup> {
    // y x = x^{2m-1} y
    let xo = 4 * m;
    let s = i64::from(2 * m - 1);
    from_normal_forms(xo, 2, move |(i, j), (k, l)| {
        let twist = if j == 1 { s } else { 1 };
        (md(i64::from(i) + twist * i64::from(k), xo), (j + l) % 2)
    })
}

fn metacyclic_u(x_order: u32, y_order: u32) -> Result<FiniteGroup> {
    // y x = x y^-1, so y^j x^k = x^k y^{(-1)^k j}
    from_normal_forms(x_order, y_order, move |(i, j), (k, l)| {
        (
            (i + k) % x_order,
            md(sign(k) * i64::from(j) + i64::from(l), y_order),
        )
    })
}

fn v8m(m: u32) -> Result<FiniteGroup> {
    // y^2 is central and y x y^-1 = y^2 x^-1, hence
    // y^j x^k = x^{(-1)^j k} y^{j + 2k [j odd]}.
    let xo = 2 * m;
    from_normal_forms(xo, 4, move |(i, j), (k, l)| {
        let extra = if j % 2 == 1 { 2 * (k % 2) } else { 0 };
        (
            md(i64::from(i) + sign(j) * i64::from(k), xo),
            (j + l + extra) % 4,
        )
    })
}

fn heisenberg(p: u32) -> Result<FiniteGroup> {
    // (a, b, c) <-> [[1, a, c], [0, 1, b], [0, 0, 1]]
    let elems: Vec<(u32, u32, u32)> = (0..p)
        .flat_map(|a| (0..p).flat_map(move |b| (0..p).map(move |c| (a, b, c))))
        .collect();
    let index = |(a, b, c): (u32, u32, u32)| ((a * p + b) * p + c) as usize;
    let rows = elems
        .iter()
        .map(|&(a, b, c)| {
            elems
                .iter()
                .map(|&(a2, b2, c2)| index(((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)))
                .collect()
        })
        .collect();
    let labels = elems
        .iter()
        .map(|&(a, b, c)| format!("[1 {a} {c}; 0 1 {b}; 0 0 1]"))
        .collect();
    FiniteGroup::from_table(rows, labels)
}

/// Builds and validates the group described by `spec`.
pub fn build_group(spec: &FamilySpec) -> Result<FiniteGroup> {
    spec.validate()?;
    let group = match *spec {
        FamilySpec::Dihedral { m } => dihedral(m)?,
        FamilySpec::Dicyclic { m } => dicyclic(m)?,
        FamilySpec::Semidihedral { m } => semidihedral(m)?,
        FamilySpec::Umn { n, m } => metacyclic_u(2 * n, m)?,
        FamilySpec::U6m { m } => metacyclic_u(2 * m, 3)?,
        FamilySpec::V8m { m } => v8m(m)?,
        FamilySpec::Heisenberg { p } => heisenberg(p)?,
        FamilySpec::ExplicitTable(ref t) => FiniteGroup::from_table_spec(t)?,
    };
    let expected = spec.expected_order();
    if group.order() != expected {
        return Err(Error::InvalidGroup(format!(
            "{spec}: constructed order {} but expected {expected}",
            group.order()
        )));
    }
    Ok(group)
}

/// The center `Z(G)`, in increasing element order.
pub fn center(group: &FiniteGroup) -> Vec<usize> {
    (0..group.order())
        .filter(|&g| (0..group.order()).all(|h| group.commutes(g, h)))
        .collect()
}

/// The conjugacy classes of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyPartition {
    /// Each class sorted increasingly; classes ordered by their minimal element.
    pub classes: Vec<Vec<usize>>,
    /// Indices into `classes` of the singleton classes, i.e. the central elements.
    pub central_classes: Vec<usize>,
}

impl ConjugacyPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn is_central(&self, class: usize) -> bool {
        self.classes[class].len() == 1
    }

    /// Indices of the non-central classes, in partition order.
    pub fn non_central(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.classes.len()).filter(move |&c| !self.is_central(c))
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

pub fn conjugacy_classes(group: &FiniteGroup) -> ConjugacyPartition {
    let n = group.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for g in 0..n {
        if assigned[g] {
            continue;
        }
        let mut class: Vec<usize> = (0..n).map(|h| group.conjugate(g, h)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            assigned[c] = true;
        }
        classes.push(class);
    }
    let central_classes = classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() == 1)
        .map(|(i, _)| i)
        .collect();
    ConjugacyPartition {
        classes,
        central_classes,
    }
}

/// Recognized isomorphism type of `G/Z(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuotientKind {
    /// `Z_p x Z_p`.
    ZpxZp {
        p: u32,
    },
    /// The dihedral group of order `2m`.
    Dihedral {
        m: u32,
    },
    Other,
}

impl fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientKind::ZpxZp { p } => write!(f, "Z{p}xZ{p}"),
            QuotientKind::Dihedral { m } => write!(f, "D{}", 2 * m),
            QuotientKind::Other => write!(f, "other"),
        }
    }
}

/// `G/Z(G)` as a group on coset representatives (the minimal index in each coset).
pub fn central_quotient(group: &FiniteGroup) -> Result<FiniteGroup> {
    let z = center(group);
    let n = group.order();
    let mut coset_rep = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset_rep[g] != usize::MAX {
            continue;
        }
        for &c in &z {
            coset_rep[group.mul(g, c)] = g;
        }
        reps.push(g);
    }
    let position = |g: usize| reps.binary_search(&coset_rep[g]).expect("coset rep");
    let rows = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| position(group.mul(a, b))).collect())
        .collect();
    let labels = reps.iter().map(|&r| group.label(r).to_string()).collect();
    FiniteGroup::from_table(rows, labels)
}

/// Recognizes `G/Z(G)` as `Z_p x Z_p` or `D_{2m}` by order, exponent and a
/// cyclic index-2 subgroup inverted by an involution.
pub fn central_quotient_kind(group: &FiniteGroup) -> Result<QuotientKind> {
    let q = central_quotient(group)?;
    Ok(classify_quotient(&q))
}

fn classify_quotient(q: &FiniteGroup) -> QuotientKind {
    let k = q.order();
    let p = (k as f64).sqrt().round() as usize;
    if p * p == k && is_prime(p as u64) && q.is_abelian() && (1..k).all(|g| q.element_order(g) == p)
    {
        return QuotientKind::ZpxZp { p: p as u32 };
    }
    if k.is_multiple_of(2) && k >= 4 {
        let m = k / 2;
        for r in 1..k {
            if q.element_order(r) != m {
                continue;
            }
            let r_inv = q.inv(r);
            let mut rotations = vec![false; k];
            let mut cur = 0;
            for _ in 0..m {
                rotations[cur] = true;
                cur = q.mul(cur, r);
            }
            let found =
                (1..k).any(|s| !rotations[s] && q.mul(s, s) == 0 && q.conjugate(r, s) == r_inv);
            if found {
                return QuotientKind::Dihedral { m: m as u32 };
            }
        }
    }
    QuotientKind::Other
}
