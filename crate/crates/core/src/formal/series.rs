//! Exact elements of Q[S][x^(-1/2), e^(-x)].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::numerics::rational::{format_rational, Rational};

/// Exponent triple of the monomial `S^k x^(-j/2) e^(-m x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TermKey {
    pub k: u32,
    pub j: i32,
    pub m: i32,
}

impl TermKey {
    pub const fn new(k: u32, j: i32, m: i32) -> Self {
        TermKey { k, j, m }
    }
}

impl fmt::Display for TermKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^{} x^(-{}/2) e^(-{}x)", self.k, self.j, self.m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

/// Finite sum of monomials with rational coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSeries {
    terms: BTreeMap<TermKey, Rational>,
}

impl FormalSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0, 0)
    }

    pub fn monomial(c: Rational, k: u32, j: i32, m: i32) -> Self {
        let mut s = Self::zero();
        s.add_term(TermKey::new(k, j, m), c);
        s
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0, 0)
    }

    /// `S`.
    pub fn s() -> Self {
        Self::monomial(Rational::one(), 1, 0, 0)
    }

    /// `x^(-half/2)`.
    pub fn x_pow_half(half: i32) -> Self {
        Self::monomial(Rational::one(), 0, half, 0)
    }

    /// `e^(-m x)`.
    pub fn exp_neg(m: i32) -> Self {
        Self::monomial(Rational::one(), 0, 0, m)
    }

    pub fn from_terms(items: impl IntoIterator<Item = (TermKey, Rational)>) -> Self {
        let mut s = Self::zero();
        for (key, c) in items {
            s.add_term(key, c);
        }
        s
    }

    pub fn add_term(&mut self, key: TermKey, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, k: u32, j: i32, m: i32) -> Rational {
        self.terms.get(&TermKey::new(k, j, m)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (key, c) in &o.terms {
            r.add_term(*key, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (key, c) in &o.terms {
            r.add_term(*key, -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                r.add_term(TermKey::new(a.k + b.k, a.j + b.j, a.m + b.m), ca * cb);
            }
        }
        r
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(key, v)| (*key, v * c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        r
    }

    /// d/dx, termwise.
    pub fn differentiate(&self) -> Self {
        let mut r = Self::zero();
        for (key, c) in &self.terms {
            if key.j != 0 {
                r.add_term(TermKey::new(key.k, key.j + 2, key.m), -c * Rational::new(key.j.into(), 2.into()));
            }
            if key.m != 0 {
                r.add_term(*key, -c * Rational::from_integer(key.m.into()));
            }
        }
        r
    }

    pub fn apply(&self, o: &Self, op: SeriesOp) -> Self {
        match op {
            SeriesOp::Add => self.add(o),
            SeriesOp::Sub => self.sub(o),
            SeriesOp::Mul => self.mul(o),
        }
    }

    pub fn filter(&self, keep: impl Fn(&TermKey) -> bool) -> Self {
        Self::from_terms(self.terms.iter().filter(|(key, _)| keep(key)).map(|(key, c)| (*key, c.clone())))
    }

    /// Terms with the given half-power of `x^(-1/2)`.
    pub fn part_j(&self, j: i32) -> Self {
        self.filter(|key| key.j == j)
    }

    /// Distinct half-powers present, ascending.
    pub fn j_values(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.terms.keys().map(|key| key.j).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn min_m(&self) -> Option<i32> {
        self.terms.keys().map(|key| key.m).min()
    }

    /// Exponent pairs `(j, m)` present.
    pub fn support(&self) -> Vec<(i32, i32)> {
        let mut v: Vec<(i32, i32)> = self.terms.keys().map(|key| (key.j, key.m)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Numerical value at complex `x` with complex `S`, as f64 pairs; for
    /// quick diagnostics only.
    pub fn eval_f64(&self, x: (f64, f64), s: (f64, f64)) -> (f64, f64) {
        let cm = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
        let cexp = |a: (f64, f64)| {
            let r = a.0.exp();
            (r * a.1.cos(), r * a.1.sin())
        };
        let cpow = |a: (f64, f64), p: f64| {
            let r = (a.0 * a.0 + a.1 * a.1).sqrt().powf(p);
            let th = a.1.atan2(a.0) * p;
            (r * th.cos(), r * th.sin())
        };
        let mut acc = (0.0, 0.0);
        for (key, c) in &self.terms {
            let mut v = (crate::numerics::rational::to_f64(c), 0.0);
            for _ in 0..key.k {
                v = cm(v, s);
            }
            v = cm(v, cpow(x, -(key.j as f64) / 2.0));
            v = cm(v, cexp((-(key.m as f64) * x.0, -(key.m as f64) * x.1)));
            acc = (acc.0 + v.0, acc.1 + v.1);
        }
        acc
    }
}

impl fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(key, c)| format!("({}) {}", format_rational(c), key)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
