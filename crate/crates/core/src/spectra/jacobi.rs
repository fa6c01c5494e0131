use crate::error::{Error, Result};

use super::Matrix;

/// Upper bound on cyclic sweeps before giving up on further reduction.
pub const MAX_SWEEPS: usize = 100;

const CONVERGENCE: f64 = 1e-12;

/// Eigenvalues of a real symmetric matrix, increasing, by cyclic Jacobi rotations.
///
/// Iterates until the off-diagonal Frobenius norm drops below `1e-12 * ‖M‖_F`.
#[allow(clippy::needless_range_loop)]
pub fn eigen_symmetric(m: &Matrix<f64>) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.n_rows(),
            cols: m.n_cols(),
        });
    }
    let n = m.n_rows();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (m.get(i, j), m.get(j, i));
            if (a - b).abs() > 1e-12 * (1.0 + a.abs().max(b.abs())) {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }

    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let threshold = CONVERGENCE * m.frobenius_norm();
    let off_norm = |a: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };

    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    if off_norm(&a) > threshold {
        log::warn!("Jacobi iteration stopped after {MAX_SWEEPS} sweeps before full convergence");
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn diagonal_and_two_by_two() {
        let d = Matrix::from_rows(&[vec![3.0, 0.0], vec![0.0, -1.0]]).unwrap();
        assert_eq!(eigen_symmetric(&d).unwrap(), vec![-1.0, 3.0]);
        let m = Matrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!(close(&eigen_symmetric(&m).unwrap(), &[1.0, 3.0], 1e-13));
    }

    #[test]
    fn complete_graph_k4() {
        let m = Matrix::from_fn(4, 4, |i, j| if i == j { 0.0 } else { 1.0 });
        assert!(close(
            &eigen_symmetric(&m).unwrap(),
            &[-1.0, -1.0, -1.0, 3.0],
            1e-12
        ));
    }

    #[test]
    fn path_p5_against_cosines() {
        let n = 5;
        let m = Matrix::from_fn(n, n, |i, j| if i.abs_diff(j) == 1 { 1.0 } else { 0.0 });
        let mut expected: Vec<f64> = (1..=n)
            .map(|k| 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos())
            .collect();
        expected.sort_by(f64::total_cmp);
        assert!(close(&eigen_symmetric(&m).unwrap(), &expected, 1e-12));
    }

    #[test]
    fn rejects_bad_input() {
        let ns = Matrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(
            eigen_symmetric(&ns),
            Err(Error::NotSymmetric { .. })
        ));
        let rect = Matrix::from_fn(2, 3, |_, _| 0.0);
        assert!(matches!(
            eigen_symmetric(&rect),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn empty_matrix() {
        let m = Matrix::from_fn(0, 0, |_, _| 0.0);
        assert!(eigen_symmetric(&m).unwrap().is_empty());
    }
}
