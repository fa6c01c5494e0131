//! Numeric and exact spectral pipeline for graphs.
//!
//! Everything here works from the graph alone and never consults a closed
//! form, so it doubles as the oracle the closed forms are checked against.
//! Integrality is decided only through exact characteristic polynomials.

mod charpoly;
mod jacobi;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use charpoly::{char_poly_exact, integer_root_split, CharPoly, RootSplit};
pub use jacobi::{eigen_symmetric, MAX_SWEEPS};

/// Default clustering tolerance for [`group_eigenvalues`].
pub const CLUSTER_TOL: f64 = 1e-6;
/// Clusters closer than this (but at least the clustering tolerance apart) trigger a warning.
pub const NEAR_GAP_WARN: f64 = 1e-3;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    n_rows: usize,
    n_cols: usize,
    data: Vec<T>,
}

impl<T: Copy> Matrix<T> {
    pub fn from_fn(n_rows: usize, n_cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let data = (0..n_rows)
            .flat_map(|i| (0..n_cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Matrix {
            n_rows,
            n_cols,
            data,
        }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::NotSquare {
                rows: n_rows,
                cols: n_cols,
            });
        }
        Ok(Matrix {
            n_rows,
            n_cols,
            data: rows.concat(),
        })
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n_cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n_cols + j] = v;
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn map<U: Copy>(&self, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }
}

impl Matrix<i64> {
    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(|x| x as f64)
    }
}

impl Matrix<f64> {
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

pub fn adjacency_matrix(g: &Graph) -> Matrix<i64> {
    Matrix::from_fn(g.n_vertices(), g.n_vertices(), |u, v| {
        i64::from(g.has_edge(u, v))
    })
}

/// `L = D - A`.
pub fn laplacian_matrix(g: &Graph) -> Matrix<i64> {
    let deg = g.degrees();
    Matrix::from_fn(g.n_vertices(), g.n_vertices(), |u, v| {
        if u == v {
            deg[u] as i64
        } else {
            -i64::from(g.has_edge(u, v))
        }
    })
}

/// `Q = D + A`.
pub fn signless_laplacian_matrix(g: &Graph) -> Matrix<i64> {
    let deg = g.degrees();
    Matrix::from_fn(g.n_vertices(), g.n_vertices(), |u, v| {
        if u == v {
            deg[u] as i64
        } else {
            i64::from(g.has_edge(u, v))
        }
    })
}

/// Multiset of eigenvalues as sorted `(value, multiplicity)` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub pairs: Vec<(f64, usize)>,
    /// Values are certified (integers or evaluated quadratic surds).
    pub exact: bool,
}

impl Spectrum {
    /// Total multiplicity.
    pub fn len(&self) -> usize {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Every eigenvalue repeated by multiplicity, increasing.
    pub fn values(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    /// Sum of eigenvalues with multiplicity (the trace).
    pub fn trace(&self) -> f64 {
        self.pairs.iter().map(|&(v, m)| v * m as f64).sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.pairs.iter().map(|&(v, m)| v * v * m as f64).sum()
    }

    /// `sum |v - shift| * mult`.
    pub fn absolute_deviation(&self, shift: f64) -> f64 {
        self.pairs
            .iter()
            .map(|&(v, m)| (v - shift).abs() * m as f64)
            .sum()
    }

    /// Whether every value lies within `tol` of an integer.
    pub fn is_near_integral(&self, tol: f64) -> bool {
        self.pairs
            .iter()
            .all(|&(v, _)| (v - v.round()).abs() <= tol)
    }

    /// Largest value-wise deviation from `other`, or `None` when the two
    /// spectra differ in the number of distinct values or in multiplicities.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        if self.pairs.len() != other.pairs.len() {
            return None;
        }
        let mut worst = 0.0_f64;
        for (&(a, ma), &(b, mb)) in self.pairs.iter().zip(&other.pairs) {
            if ma != mb {
                return None;
            }
            worst = worst.max((a - b).abs());
        }
        Some(worst)
    }

    /// Adjacent distinct values closer than `hi` (cluster gaps are always at least the clustering tolerance).
    pub fn near_gaps(&self, hi: f64) -> Vec<(f64, f64)> {
        self.pairs
            .windows(2)
            .filter(|w| w[1].0 - w[0].0 < hi)
            .map(|w| (w[0].0, w[1].0))
            .collect()
    }
}

/// Clusters sorted values whose consecutive gaps are below `tol` into
/// `(mean, count)` pairs.
pub fn group_eigenvalues(values: &[f64], tol: f64) -> Spectrum {
    assert!(tol > 0.0, "clustering tolerance must be positive");
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut pairs: Vec<(f64, usize)> = Vec::new();
    let mut cluster: Vec<f64> = Vec::new();
    let flush = |cluster: &mut Vec<f64>, pairs: &mut Vec<(f64, usize)>| {
        if !cluster.is_empty() {
            let mean = cluster.iter().sum::<f64>() / cluster.len() as f64;
            pairs.push((mean, cluster.len()));
            cluster.clear();
        }
    };
    for v in sorted {
        if let Some(&last) = cluster.last() {
            if v - last >= tol {
                flush(&mut cluster, &mut pairs);
            }
        }
        cluster.push(v);
    }
    flush(&mut cluster, &mut pairs);
    let spectrum = Spectrum {
        pairs,
        exact: false,
    };
    for (a, b) in spectrum.near_gaps(NEAR_GAP_WARN) {
        log::warn!("near-degenerate eigenvalue clusters {a} and {b} kept apart");
    }
    spectrum
}

/// Energies of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub energy: f64,
    pub laplacian_energy: f64,
    pub signless_energy: f64,
    /// Average degree `2e/n`.
    pub delta: f64,
    pub n_vertices: usize,
    pub n_edges: usize,
}

impl EnergyReport {
    /// Energy of the complete graph on the same vertex count, `2(n - 1)`.
    pub fn complete_graph_energy(&self) -> f64 {
        2.0 * (self.n_vertices as f64 - 1.0)
    }
}

/// `E = sum |a|`, `LE = sum |b - Δ|` over the Laplacian spectrum and
/// `SE = sum |c - Δ|` over the signless Laplacian spectrum, `Δ = 2e/n`.
pub fn energies(
    spec_a: &Spectrum,
    spec_l: &Spectrum,
    spec_q: &Spectrum,
    n_vertices: usize,
    n_edges: usize,
) -> Result<EnergyReport> {
    for s in [spec_a, spec_l, spec_q] {
        if s.len() != n_vertices {
            return Err(Error::MultiplicityMismatch {
                expected: n_vertices,
                got: s.len(),
            });
        }
    }
    let delta = if n_vertices == 0 {
        0.0
    } else {
        2.0 * n_edges as f64 / n_vertices as f64
    };
    Ok(EnergyReport {
        energy: spec_a.absolute_deviation(0.0),
        laplacian_energy: spec_l.absolute_deviation(delta),
        signless_energy: spec_q.absolute_deviation(delta),
        delta,
        n_vertices,
        n_edges,
    })
}

/// Numeric spectra and energies of a graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSpectra {
    pub adjacency: Spectrum,
    pub laplacian: Spectrum,
    pub signless: Spectrum,
    pub energies: EnergyReport,
}

impl GraphSpectra {
    pub fn compute(g: &Graph) -> Result<Self> {
        Self::compute_with_tol(g, CLUSTER_TOL)
    }

    pub fn compute_with_tol(g: &Graph, tol: f64) -> Result<Self> {
        let spectrum = |m: Matrix<i64>| -> Result<Spectrum> {
            Ok(group_eigenvalues(&eigen_symmetric(&m.to_f64())?, tol))
        };
        let adjacency = spectrum(adjacency_matrix(g))?;
        let laplacian = spectrum(laplacian_matrix(g))?;
        let signless = spectrum(signless_laplacian_matrix(g))?;
        let energies = energies(
            &adjacency,
            &laplacian,
            &signless,
            g.n_vertices(),
            g.n_edges(),
        )?;
        Ok(GraphSpectra {
            adjacency,
            laplacian,
            signless,
            energies,
        })
    }
}

/// Exact characteristic polynomials of `A`, `L` and `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPolys {
    pub adjacency: CharPoly,
    pub laplacian: CharPoly,
    pub signless: CharPoly,
}

impl ExactPolys {
    pub fn compute(g: &Graph) -> Result<Self> {
        Ok(ExactPolys {
            adjacency: char_poly_exact(&adjacency_matrix(g))?,
            laplacian: char_poly_exact(&laplacian_matrix(g))?,
            signless: char_poly_exact(&signless_laplacian_matrix(g))?,
        })
    }

    /// `(integral, L-integral, Q-integral)` decided by integer root deflation.
    pub fn integrality(&self) -> (bool, bool, bool) {
        (
            integer_root_split(&self.adjacency).fully_split,
            integer_root_split(&self.laplacian).fully_split,
            integer_root_split(&self.signless).fully_split,
        )
    }
}
