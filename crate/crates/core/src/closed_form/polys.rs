use crate::error::{Error, Result};
use crate::spectra::CharPoly;

fn lin_pow(root: i64, exp: i64) -> CharPoly {
    CharPoly::linear(root).pow(usize::try_from(exp).expect("non-negative exponent"))
}

fn quadratic(b: i64, c: i64) -> CharPoly {
    CharPoly::from_i64(&[c, b, 1])
}

/// Characteristic polynomials `(A, L, Q)` of `K_{a1·p1, a2·p2}`.
///
/// `a2 = p2 = 0` gives the single-size case `K_{a1·p1}`.
pub fn cm_polys(a1: u32, p1: u32, a2: u32, p2: u32) -> Result<(CharPoly, CharPoly, CharPoly)> {
    if a1 == 0 || p1 == 0 || (a2 == 0) != (p2 == 0) {
        return Err(Error::ClosedForm(format!(
            "invalid multipartite counts ({a1}, {p1}, {a2}, {p2})"
        )));
    }
    let (a1, p1, a2, p2) = (i64::from(a1), i64::from(p1), i64::from(a2), i64::from(p2));
    if a2 == 0 {
        let (a, b) = (a1, p1);
        let adj = lin_pow(0, a * (b - 1))
            .mul(&lin_pow(-b, a - 1))
            .mul(&CharPoly::linear(b * (a - 1)));
        let lap = CharPoly::linear(0)
            .mul(&lin_pow(b * (a - 1), a * (b - 1)))
            .mul(&lin_pow(a * b, a - 1));
        let sig = lin_pow(b * (a - 1), a * (b - 1))
            .mul(&lin_pow(b * (a - 2), a - 1))
            .mul(&CharPoly::linear(2 * b * (a - 1)));
        return Ok((adj, lap, sig));
    }

    let n = a1 * p1 + a2 * p2;
    let r = a1 + a2;
    let adj = lin_pow(0, n - r)
        .mul(&lin_pow(-p1, a1 - 1))
        .mul(&lin_pow(-p2, a2 - 1))
        .mul(&quadratic(
            p1 * (1 - a1) + p2 * (1 - a2),
            p1 * p2 * (1 - a1 - a2),
        ));
    let lap = CharPoly::linear(0)
        .mul(&lin_pow(a1 * p1 + p2 * (a2 - 1), a2 * (p2 - 1)))
        .mul(&lin_pow(a2 * p2 + p1 * (a1 - 1), a1 * (p1 - 1)))
        .mul(&lin_pow(n, a1 + a2 - 1));
    let sig = lin_pow(n - p1, a1 * (p1 - 1))
        .mul(&lin_pow(n - p2, a2 * (p2 - 1)))
        .mul(&lin_pow(n - 2 * p1, a1 - 1))
        .mul(&lin_pow(n - 2 * p2, a2 - 1))
        .mul(&quadratic(
            -(2 * n + p1 * (a1 - 2) + p2 * (a2 - 2)),
            n * n - 2 * n * (p1 + p2) + n * (a1 * p1 + a2 * p2) + 2 * p1 * p2 * (2 - a1 - a2),
        ));
    Ok((adj, lap, sig))
}
