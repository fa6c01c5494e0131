//! Exact quadratic surds `a + b√d` with rational `a`, `b` and square-free `d`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::spectra::Spectrum;

pub type Q = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Surd {
    a: Q,
    b: Q,
    d: u64,
}

/// Splits `n` into `(s, f)` with `n = s² f` and `f` square-free.
fn square_free_split(n: u64) -> (u64, u64) {
    let (mut s, mut f) = (1u64, 1u64);
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            f *= p;
        }
        p += 1;
    }
    (s, f * rest)
}

impl Surd {
    pub fn rational(a: Q) -> Self {
        Surd {
            a,
            b: Q::zero(),
            d: 1,
        }
    }

    pub fn int(a: i64) -> Self {
        Self::rational(Q::from_integer(a))
    }

    /// `a + b√n`, normalizing `n` to its square-free part.
    pub fn new(a: Q, b: Q, n: u64) -> Self {
        if b.is_zero() || n == 0 {
            return Self::rational(a);
        }
        let (s, f) = square_free_split(n);
        let b = b * Q::from_integer(s as i64);
        if f == 1 {
            Self::rational(a + b)
        } else {
            Surd { a, b, d: f }
        }
    }

    /// `√n`.
    pub fn sqrt_int(n: u64) -> Self {
        Self::new(Q::zero(), Q::from_integer(1), n)
    }

    /// `√q` for rational `q ≥ 0`, as `√(pq)/q` with the denominator cleared.
    pub fn sqrt_rational(q: Q) -> Self {
        assert!(!q.is_negative(), "square root of a negative rational");
        let (num, den) = (*q.numer() as u64, *q.denom());
        Self::new(Q::zero(), Q::new(1, den), num * den as u64)
    }

    pub fn rational_part(&self) -> Q {
        self.a
    }

    pub fn surd_coeff(&self) -> Q {
        self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The integer value, when the surd is one.
    pub fn as_integer(&self) -> Option<i64> {
        (self.is_rational() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    pub fn to_f64(&self) -> f64 {
        let f = |q: Q| *q.numer() as f64 / *q.denom() as f64;
        f(self.a) + f(self.b) * (self.d as f64).sqrt()
    }

    /// Exact sign, decided by comparing `a²` with `b² d`.
    pub fn signum(&self) -> i32 {
        let sa = sign(self.a);
        let sb = sign(self.b);
        if sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        if sa == 0 {
            return sb;
        }
        match (self.a * self.a).cmp(&(self.b * self.b * Q::from_integer(self.d as i64))) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -*self
        } else {
            *self
        }
    }

    /// Sum, or `None` when both radicands are irrational and differ.
    pub fn checked_add(&self, o: &Self) -> Option<Self> {
        match (self.is_rational(), o.is_rational()) {
            (true, _) => Some(Surd::new(self.a + o.a, o.b, o.d)),
            (_, true) => Some(Surd::new(self.a + o.a, self.b, self.d)),
            _ if self.d == o.d => Some(Surd::new(self.a + o.a, self.b + o.b, self.d)),
            _ => None,
        }
    }

    pub fn checked_mul(&self, o: &Self) -> Option<Self> {
        if self.is_rational() {
            return Some(Surd::new(self.a * o.a, self.a * o.b, o.d));
        }
        if o.is_rational() {
            return Some(Surd::new(self.a * o.a, self.b * o.a, self.d));
        }
        (self.d == o.d).then(|| {
            let d = Q::from_integer(self.d as i64);
            Surd::new(
                self.a * o.a + self.b * o.b * d,
                self.a * o.b + self.b * o.a,
                self.d,
            )
        })
    }

    pub fn scale(&self, k: Q) -> Self {
        Surd::new(self.a * k, self.b * k, self.d)
    }
}

fn sign(q: Q) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

impl From<i64> for Surd {
    fn from(v: i64) -> Self {
        Surd::int(v)
    }
}

impl From<Q> for Surd {
    fn from(v: Q) -> Self {
        Surd::rational(v)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Add for Surd {
    type Output = Surd;
    /// Panics on two different irrational radicands; see [`Surd::checked_add`].
    fn add(self, o: Surd) -> Surd {
        self.checked_add(&o)
            .unwrap_or_else(|| panic!("cannot add surds with radicands {} and {}", self.d, o.d))
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        self + (-o)
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        self.checked_mul(&o).unwrap_or_else(|| {
            panic!(
                "cannot multiply surds with radicands {} and {}",
                self.d, o.d
            )
        })
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        let diff = self.checked_add(&-*o)?;
        Some(diff.signum().cmp(&0))
    }
}

fn fmt_q(q: Q) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", fmt_q(self.a));
        }
        let b_abs = self.b.abs();
        let coeff = if b_abs == Q::from_integer(1) {
            String::new()
        } else {
            fmt_q(b_abs)
        };
        let root = format!("{coeff}√{}", self.d);
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{root}"),
            (true, true) => write!(f, "-{root}"),
            (false, neg) => write!(
                f,
                "{} {} {root}",
                fmt_q(self.a),
                if neg { '-' } else { '+' }
            ),
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            exact: String,
            value: f64,
        }
        Repr {
            exact: self.to_string(),
            value: self.to_f64(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Surd {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            exact: String,
        }
        let r = Repr::deserialize(d)?;
        parse_surd(&r.exact)
            .ok_or_else(|| serde::de::Error::custom(format!("bad surd {:?}", r.exact)))
    }
}

fn parse_q(s: &str) -> Option<Q> {
    match s.split_once('/') {
        Some((n, d)) => Some(Q::new(n.trim().parse().ok()?, d.trim().parse().ok()?)),
        None => Some(Q::from_integer(s.trim().parse().ok()?)),
    }
}

/// Parses the [`Display`](fmt::Display) form back.
pub fn parse_surd(s: &str) -> Option<Surd> {
    let s = s.trim();
    let Some(idx) = s.find('√') else {
        return parse_q(s).map(Surd::rational);
    };
    let d: u64 = s[idx + '√'.len_utf8()..].trim().parse().ok()?;
    let head = &s[..idx];
    let (a, sgn, coeff) = if let Some(p) = head.rfind(" + ") {
        (parse_q(&head[..p])?, 1, &head[p + 3..])
    } else if let Some(p) = head.rfind(" - ") {
        (parse_q(&head[..p])?, -1, &head[p + 3..])
    } else if let Some(rest) = head.strip_prefix('-') {
        (Q::zero(), -1, rest)
    } else {
        (Q::zero(), 1, head)
    };
    let coeff = coeff.trim();
    let c = if coeff.is_empty() {
        Q::from_integer(1)
    } else {
        parse_q(coeff)?
    };
    Some(Surd::new(a, c * Q::from_integer(sgn), d))
}

/// Multiset of exact eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactSpectrum {
    pub entries: Vec<(Surd, usize)>,
}

impl ExactSpectrum {
    /// Drops zero multiplicities and merges equal values, sorted increasing.
    pub fn new(entries: Vec<(Surd, usize)>) -> Self {
        let mut out: Vec<(Surd, usize)> = Vec::new();
        for (v, m) in entries.into_iter().filter(|&(_, m)| m > 0) {
            match out.iter_mut().find(|(w, _)| *w == v) {
                Some(slot) => slot.1 += m,
                None => out.push((v, m)),
            }
        }
        out.sort_by(|x, y| x.0.to_f64().total_cmp(&y.0.to_f64()));
        ExactSpectrum { entries: out }
    }

    pub fn len(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.as_integer().is_some())
    }

    /// `sum |v - shift| * mult`, exact when every radicand agrees.
    pub fn absolute_deviation(&self, shift: Q) -> Option<Surd> {
        let shift = Surd::rational(shift);
        self.entries.iter().try_fold(Surd::int(0), |acc, &(v, m)| {
            acc.checked_add(&(v - shift).abs().scale(Q::from_integer(m as i64)))
        })
    }

    pub fn to_spectrum(&self) -> Spectrum {
        Spectrum {
            pairs: self.entries.iter().map(|&(v, m)| (v.to_f64(), m)).collect(),
            exact: true,
        }
    }

    pub fn trace(&self) -> Option<Surd> {
        self.entries.iter().try_fold(Surd::int(0), |acc, &(v, m)| {
            acc.checked_add(&v.scale(Q::from_integer(m as i64)))
        })
    }
}

/// Integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

pub fn is_perfect_square(n: i64) -> bool {
    n >= 0 && exact_sqrt(n as u64).is_some()
}
