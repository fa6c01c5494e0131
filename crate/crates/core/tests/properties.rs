use nalgebra::DMatrix;
use num_rational::Ratio;
use proptest::prelude::*;

use nccc_core::closed_form::cm_polys;
use nccc_core::spectra::{
    adjacency_matrix, char_poly_exact, eigen_symmetric, group_eigenvalues, integer_root_split,
    laplacian_matrix, signless_laplacian_matrix, CharPoly, Matrix, CLUSTER_TOL,
};
use nccc_core::surd::Surd;
use nccc_core::{complement, detect_multipartite, Graph, GraphSpectra, MultipartiteShape};

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges)
        })
    })
}

fn shape_strategy() -> impl Strategy<Value = (u32, u32, u32, u32)> {
    (1u32..8, 1u32..8, 0u32..6, 0u32..8)
        .prop_map(|(a1, p1, a2, p2)| {
            if a2 == 0 || p2 == 0 {
                (a1, p1, 0, 0)
            } else {
                (a1, p1, a2, p2)
            }
        })
        .prop_filter("at most 40 vertices", |&(a1, p1, a2, p2)| {
            a1 * p1 + a2 * p2 <= 40
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectra_satisfy_trace_identities(g in random_graph()) {
        let s = GraphSpectra::compute(&g).unwrap();
        let two_e = 2.0 * g.n_edges() as f64;
        prop_assert_eq!(s.adjacency.len(), g.n_vertices());
        prop_assert!(s.adjacency.trace().abs() < 1e-8);
        prop_assert!((s.adjacency.sum_of_squares() - two_e).abs() < 1e-8);
        prop_assert!((s.laplacian.trace() - two_e).abs() < 1e-8);
        prop_assert!((s.signless.trace() - two_e).abs() < 1e-8);
        prop_assert!(s.energies.energy >= 0.0);
        prop_assert!((s.energies.delta * g.n_vertices() as f64 - two_e).abs() < 1e-9);
    }

    #[test]
    fn regular_graphs_reflect_l_and_q(n in 2usize..10, k in 1usize..5) {
        // circulant graph C_n(1..k) is regular
        let k = k.min((n - 1) / 2).max(1);
        let mut edges = Vec::new();
        for u in 0..n {
            for d in 1..=k {
                let v = (u + d) % n;
                if u != v { edges.push((u.min(v), u.max(v))); }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let g = Graph::from_edges(n, &edges);
        prop_assume!(g.is_regular());
        let s = GraphSpectra::compute(&g).unwrap();
        let delta = s.energies.delta;
        let mut from_l: Vec<f64> = s.laplacian.values().iter().map(|b| b - delta).collect();
        let mut from_q: Vec<f64> = s.signless.values().iter().map(|c| delta - c).collect();
        from_l.sort_by(f64::total_cmp);
        from_q.sort_by(f64::total_cmp);
        for (a, b) in from_l.iter().zip(&from_q) {
            prop_assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn jacobi_matches_nalgebra(g in random_graph()) {
        let a = adjacency_matrix(&g);
        let ours = eigen_symmetric(&a.to_f64()).unwrap();
        let n = g.n_vertices();
        let m = DMatrix::from_fn(n, n, |i, j| a.get(i, j) as f64);
        let mut theirs: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        theirs.sort_by(f64::total_cmp);
        for (x, y) in ours.iter().zip(&theirs) {
            prop_assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn char_poly_vanishes_at_eigenvalues(g in random_graph()) {
        for m in [adjacency_matrix(&g), laplacian_matrix(&g), signless_laplacian_matrix(&g)] {
            let p = char_poly_exact(&m).unwrap();
            prop_assert!(p.is_monic());
            prop_assert_eq!(p.degree(), g.n_vertices());
            let trace: i64 = (0..g.n_vertices()).map(|i| m.get(i, i)).sum();
            prop_assert_eq!(p.coeff(g.n_vertices() - 1), (-trace).into());
            let mf = m.to_f64();
            let scale = (1.0 + mf.frobenius_norm()).powi(g.n_vertices() as i32);
            for lambda in eigen_symmetric(&mf).unwrap() {
                prop_assert!(p.eval_f64(lambda).abs() < 1e-6 * scale);
            }
        }
    }

    #[test]
    fn root_split_agrees_with_numeric_integrality(g in random_graph()) {
        for m in [adjacency_matrix(&g), laplacian_matrix(&g), signless_laplacian_matrix(&g)] {
            let split = integer_root_split(&char_poly_exact(&m).unwrap());
            let spectrum = group_eigenvalues(&eigen_symmetric(&m.to_f64()).unwrap(), CLUSTER_TOL);
            prop_assert_eq!(split.fully_split, spectrum.is_near_integral(1e-6));
        }
    }

    #[test]
    fn root_split_recovers_products(roots in proptest::collection::vec((-30i64..30, 1usize..4), 0..6)) {
        let p = CharPoly::from_roots(&roots);
        let split = integer_root_split(&p);
        prop_assert!(split.fully_split);
        prop_assert_eq!(CharPoly::from_roots(&split.roots), p);
    }

    #[test]
    fn cm_polys_match_explicit_shapes((a1, p1, a2, p2) in shape_strategy()) {
        let shape = MultipartiteShape::new([(a1 as usize, p1 as usize), (a2 as usize, p2 as usize)]);
        let g = Graph::complete_multipartite(&shape);
        let (a, l, q) = cm_polys(a1, p1, a2, p2).unwrap();
        prop_assert_eq!(a, char_poly_exact(&adjacency_matrix(&g)).unwrap());
        prop_assert_eq!(l, char_poly_exact(&laplacian_matrix(&g)).unwrap());
        prop_assert_eq!(q, char_poly_exact(&signless_laplacian_matrix(&g)).unwrap());
        prop_assert_eq!(detect_multipartite(&g), Some(shape));
    }

    #[test]
    fn complement_is_an_involution(g in random_graph()) {
        prop_assert_eq!(complement(&complement(&g)), g);
    }

    #[test]
    fn surd_arithmetic_tracks_floats(
        a in -50i64..50, b in -50i64..50, c in -50i64..50, d in 1u64..60, den in 1i64..9,
    ) {
        let x = Surd::new(Ratio::new(a, den), Ratio::new(b, den), d);
        let y = Surd::new(Ratio::from_integer(c), Ratio::from_integer(1), d);
        let (xf, yf) = (x.to_f64(), y.to_f64());
        prop_assert!(((x + y).to_f64() - (xf + yf)).abs() < 1e-9);
        prop_assert!(((x * y).to_f64() - xf * yf).abs() < 1e-7);
        prop_assert!((x.abs().to_f64() - xf.abs()).abs() < 1e-9);
        if xf.abs() > 1e-9 {
            prop_assert_eq!(x.signum(), xf.signum() as i32);
        }
    }
}

const MERSENNE61: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MERSENNE61 as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn to_mod(v: i64) -> u64 {
    v.rem_euclid(MERSENNE61 as i64) as u64
}

/// `det(x I - M) mod 2^61 - 1` by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
fn char_det_mod(m: &Matrix<i64>, x: u64) -> u64 {
    let n = m.n_rows();
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = (MERSENNE61 - to_mod(m.get(i, j))) % MERSENNE61;
                    if i == j {
                        (v + x) % MERSENNE61
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = (MERSENNE61 - det) % MERSENNE61;
        }
        det = mul_mod(det, a[col][col]);
        let inv = pow_mod(a[col][col], MERSENNE61 - 2);
        for r in (col + 1)..n {
            let f = mul_mod(a[r][col], inv);
            if f == 0 {
                continue;
            }
            for c in col..n {
                let sub = mul_mod(f, a[col][c]);
                a[r][c] = (a[r][c] + MERSENNE61 - sub) % MERSENNE61;
            }
        }
    }
    det
}

fn poly_mod(p: &CharPoly, x: u64) -> u64 {
    let m = num_bigint::BigInt::from(MERSENNE61);
    let r = p.eval(&num_bigint::BigInt::from(x)) % &m;
    let r = if r < num_bigint::BigInt::from(0) {
        r + &m
    } else {
        r
    };
    u64::try_from(r).unwrap()
}

/// Every shape on at most 40 vertices: exact Faddeev–LeVerrier comparison up to
/// 16 vertices, modular identity testing at random points beyond.
#[test]
fn exhaustive_cm_polys_up_to_forty_vertices() {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut shapes = 0;
    for a1 in 1..=40u32 {
        for p1 in 1..=40 / a1 {
            let rest = 40 - a1 * p1;
            let mut cases = vec![(0, 0)];
            for a2 in 1..=rest {
                for p2 in 1..=rest / a2 {
                    cases.push((a2, p2));
                }
            }
            for (a2, p2) in cases {
                shapes += 1;
                let shape = MultipartiteShape::new([
                    (a1 as usize, p1 as usize),
                    (a2 as usize, p2 as usize),
                ]);
                let g = Graph::complete_multipartite(&shape);
                let polys = cm_polys(a1, p1, a2, p2).unwrap();
                let mats = [
                    adjacency_matrix(&g),
                    laplacian_matrix(&g),
                    signless_laplacian_matrix(&g),
                ];
                for (poly, mat) in [&polys.0, &polys.1, &polys.2].into_iter().zip(&mats) {
                    assert_eq!(poly.degree(), g.n_vertices());
                    if g.n_vertices() <= 16 {
                        assert_eq!(poly, &char_poly_exact(mat).unwrap(), "{shape}");
                    } else {
                        for _ in 0..2 {
                            let x = rng.random_range(0..MERSENNE61);
                            assert_eq!(poly_mod(poly, x), char_det_mod(mat, x), "{shape}");
                        }
                    }
                }
            }
        }
    }
    assert_eq!(shapes, 9176);
}

#[test]
fn matrix_from_rows_rejects_ragged() {
    assert!(Matrix::from_rows(&[vec![1, 2], vec![3]]).is_err());
}
