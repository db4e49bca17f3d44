//! Closed intervals with exact rational endpoints.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{ceil_dyadic, floor_dyadic, format_rational, max_r, min_r, to_f64, Rational};
use super::NumericsError;

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, NumericsError> {
        if lo > hi {
            return Err(NumericsError::Inverted);
        }
        Ok(Interval { lo, hi })
    }

    /// Builds `[min(a,b), max(a,b)]`.
    pub fn span(a: Rational, b: Rational) -> Self {
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: i64) -> Self {
        Self::point(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::point(super::rational::rat(n, d))
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn one() -> Self {
        Self::point(Rational::one())
    }

    /// `center ± radius`.
    pub fn ball(center: &Rational, radius: &Rational) -> Self {
        let r = radius.abs();
        Interval { lo: center - &r, hi: center + &r }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Largest absolute value over the interval.
    pub fn mag(&self) -> Rational {
        max_r(&self.lo.abs(), &self.hi.abs())
    }

    /// Smallest absolute value over the interval.
    pub fn mig(&self) -> Rational {
        if self.contains_zero() {
            Rational::zero()
        } else {
            min_r(&self.lo.abs(), &self.hi.abs())
        }
    }

    pub fn abs(&self) -> Interval {
        Interval { lo: self.mig(), hi: self.mag() }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval { lo: min_r(&self.lo, &other.lo), hi: max_r(&self.hi, &other.hi) }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = max_r(&self.lo, &other.lo);
        let hi = min_r(&self.hi, &other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        if self.is_point() && o.is_point() {
            return Interval::point(&self.lo * &o.lo);
        }
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Interval { lo, hi }
    }

    pub fn div(&self, o: &Interval) -> Result<Interval, NumericsError> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn recip(&self) -> Result<Interval, NumericsError> {
        if self.contains_zero() {
            return Err(NumericsError::DivisionByZero);
        }
        Ok(Interval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        Interval::span(&self.lo * c, &self.hi * c)
    }

    pub fn add_rat(&self, c: &Rational) -> Interval {
        Interval { lo: &self.lo + c, hi: &self.hi + c }
    }

    /// Tight enclosure of `{x^n : x in self}`.
    pub fn powi(&self, n: u32) -> Interval {
        if n == 0 {
            return Interval::one();
        }
        let p = |x: &Rational| num_traits::pow::pow(x.clone(), n as usize);
        if n % 2 == 1 || self.lo >= Rational::zero() {
            Interval::span(p(&self.lo), p(&self.hi))
        } else if self.hi <= Rational::zero() {
            Interval::span(p(&self.hi), p(&self.lo))
        } else {
            Interval { lo: Rational::zero(), hi: p(&self.mag()) }
        }
    }

    pub fn sqr(&self) -> Interval {
        self.powi(2)
    }

    pub fn apply(&self, o: &Interval, op: ArithOp) -> Result<Interval, NumericsError> {
        Ok(match op {
            ArithOp::Add => self.add(o),
            ArithOp::Sub => self.sub(o),
            ArithOp::Mul => self.mul(o),
            ArithOp::Div => self.div(o)?,
        })
    }

    /// Widens the endpoints outward to multiples of `2^-bits`.
    pub fn round_outward(&self, bits: u32) -> Interval {
        Interval { lo: floor_dyadic(&self.lo, bits), hi: ceil_dyadic(&self.hi, bits) }
    }

    pub fn lo_f64(&self) -> f64 {
        to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        to_f64(&self.hi)
    }

    pub fn mid_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    /// True iff every element is strictly below every element of `o`.
    pub fn certainly_lt(&self, o: &Interval) -> bool {
        self.hi < o.lo
    }

    pub fn certainly_le(&self, o: &Interval) -> bool {
        self.hi <= o.lo
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Interval>) -> Interval {
        items.into_iter().fold(Interval::zero(), |acc, x| acc.add(x))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{}", format_rational(&self.lo))
        } else {
            write!(f, "[{:.12e}, {:.12e}]", self.lo_f64(), self.hi_f64())
        }
    }
}
