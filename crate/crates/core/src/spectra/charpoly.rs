use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Matrix;

/// Integer polynomial with coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPoly {
    pub coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Strips trailing zero coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        CharPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        CharPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `x - r`.
    pub fn linear(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    /// `prod (x - r)^m`.
    pub fn from_roots(roots: &[(i64, usize)]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, &(r, m)| acc.mul(&Self::linear(r).pow(m)))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Divides by `x - r`, returning the quotient when the remainder vanishes.
    pub fn deflate(&self, r: &BigInt) -> Option<Self> {
        let d = self.degree();
        if d == 0 {
            return None;
        }
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (0..=d).rev() {
            let cur = &self.coeffs[k] + &carry * r;
            if k == 0 {
                return cur.is_zero().then(|| Self::new(q));
            }
            q[k - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `det(xI - M)` by Faddeev–LeVerrier in exact integer arithmetic.
pub fn char_poly_exact(m: &Matrix<i64>) -> Result<CharPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.n_rows(),
            cols: m.n_cols(),
        });
    }
    let n = m.n_rows();
    // sparse rows of M: (column, value)
    let rows: Vec<Vec<(usize, i64)>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v != 0)
                .map(|(j, &v)| (j, v))
                .collect()
        })
        .collect();

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_k, row-major
    let mut mk = vec![BigInt::zero(); n * n];
    let mut prod = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        if k > 1 {
            for (i, row) in rows.iter().enumerate() {
                for col in 0..n {
                    let mut acc = BigInt::zero();
                    for &(j, v) in row {
                        let x = &mk[j * n + col];
                        match v {
                            1 => acc += x,
                            -1 => acc -= x,
                            _ => acc += x * v,
                        }
                    }
                    prod[i * n + col] = acc;
                }
            }
            std::mem::swap(&mut mk, &mut prod);
        }
        for i in 0..n {
            mk[i * n + i] += &coeffs[n - k + 1];
        }
        // c_{n-k} = -tr(A M_k) / k
        let mut tr = BigInt::zero();
        for (i, row) in rows.iter().enumerate() {
            for &(j, v) in row {
                tr += &mk[j * n + i] * v;
            }
        }
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = -q;
    }
    Ok(CharPoly::new(coeffs))
}

/// Outcome of peeling integer roots off a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSplit {
    /// The polynomial is a product of integer linear factors.
    pub fully_split: bool,
    /// Integer roots with multiplicity, increasing.
    pub roots: Vec<(i64, usize)>,
    /// Cofactor left after removing every integer root.
    pub remainder: CharPoly,
}

/// Fujiwara bound `2 max |a_{d-k}/a_d|^{1/k}` (last term halved) on root moduli, rounded up.
fn fujiwara_bound(p: &CharPoly) -> BigInt {
    let d = p.degree();
    let lead = p.coeffs[d].abs();
    let mut best = BigInt::zero();
    for k in 1..=d {
        let mut a = p.coeffs[d - k].abs();
        if a.is_zero() {
            continue;
        }
        if k == d {
            a = (a + 1u32) / 2u32 + 1u32;
        }
        let ratio = a.div_ceil(&lead);
        let mut r = ratio.nth_root(k as u32);
        if r.pow(k as u32) < ratio {
            r += 1u32;
        }
        best = best.max(r);
    }
    best * 2u32
}

/// Repeatedly deflates integer roots; candidates are divisors of the constant
/// term bounded by the Fujiwara bound.
pub fn integer_root_split(p: &CharPoly) -> RootSplit {
    let mut roots = Vec::new();
    let mut cur = p.clone();
    if cur.is_zero() {
        return RootSplit {
            fully_split: false,
            roots,
            remainder: cur,
        };
    }
    let zeros = cur.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        cur = CharPoly::new(cur.coeffs[zeros..].to_vec());
        roots.push((0, zeros));
    }
    if cur.degree() > 0 {
        let bound = fujiwara_bound(&cur).to_i64().unwrap_or(i64::MAX);
        let mut r = 1i64;
        while r <= bound && cur.degree() > 0 {
            for cand in [-r, r] {
                let c = BigInt::from(cand);
                let mut mult = 0;
                while cur.degree() > 0 && cur.coeffs[0].is_multiple_of(&c) {
                    match cur.deflate(&c) {
                        Some(q) => {
                            cur = q;
                            mult += 1;
                        }
                        None => break,
                    }
                }
                if mult > 0 {
                    roots.push((cand, mult));
                }
            }
            r += 1;
        }
    }
    roots.sort_unstable();
    RootSplit {
        fully_split: cur.degree() == 0,
        roots,
        remainder: cur,
    }
}
