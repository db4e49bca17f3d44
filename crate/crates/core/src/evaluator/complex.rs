//! Complex arithmetic on `astro-float` values.

use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::EvalError;
use crate::numerics::rational::to_decimal;
use crate::numerics::Rational;

pub const MIN_BITS: usize = 100;
pub const DEFAULT_BITS: usize = 128;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision plus the constant cache the transcendental functions need.
pub struct Work {
    bits: usize,
    cc: Consts,
}

impl Work {
    pub fn new(bits: usize) -> Result<Self, EvalError> {
        if bits < MIN_BITS {
            return Err(EvalError::Precision(bits));
        }
        let cc = Consts::new().map_err(|e| EvalError::Arithmetic(format!("{e:?}")))?;
        Ok(Work { bits, cc })
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.bits, RM)
    }

    /// `pi * num / den`.
    pub fn pi_frac(&mut self, num: i64, den: i64) -> BigFloat {
        let p = self.bits;
        self.pi().mul(&BigFloat::from_i64(num, p), p, RM).div(&BigFloat::from_i64(den, p), p, RM)
    }

    pub fn real(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.bits)
    }

    pub fn int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.bits)
    }

    pub fn ratio(&self, n: i64, d: i64) -> BigFloat {
        self.int(n).div(&self.int(d), self.bits, RM)
    }

    pub fn rational(&self, r: &Rational) -> BigFloat {
        let n = bigint_to_float(r.numer(), self.bits);
        let d = bigint_to_float(r.denom(), self.bits);
        n.div(&d, self.bits, RM)
    }

    pub fn sqrt(&self, v: &BigFloat) -> BigFloat {
        v.sqrt(self.bits, RM)
    }

    pub fn exp(&mut self, v: &BigFloat) -> BigFloat {
        v.exp(self.bits, RM, &mut self.cc)
    }

    pub fn ln(&mut self, v: &BigFloat) -> BigFloat {
        v.ln(self.bits, RM, &mut self.cc)
    }

    pub fn sin(&mut self, v: &BigFloat) -> BigFloat {
        v.sin(self.bits, RM, &mut self.cc)
    }

    pub fn cos(&mut self, v: &BigFloat) -> BigFloat {
        v.cos(self.bits, RM, &mut self.cc)
    }

    /// Angle of `(x, y)` in `(-pi, pi]`.
    pub fn atan2(&mut self, y: &BigFloat, x: &BigFloat) -> BigFloat {
        let p = self.bits;
        if x.is_zero() {
            if y.is_zero() {
                return BigFloat::from_i64(0, p);
            }
            let half = self.pi_frac(1, 2);
            return if y.is_negative() { half.neg() } else { half };
        }
        let base = y.div(x, p, RM).atan(p, RM, &mut self.cc);
        if x.is_positive() {
            base
        } else if y.is_negative() {
            base.sub(&self.pi(), p, RM)
        } else {
            base.add(&self.pi(), p, RM)
        }
    }
}

fn bigint_to_float(n: &BigInt, p: usize) -> BigFloat {
    if let Ok(v) = i64::try_from(n) {
        return BigFloat::from_i64(v, p);
    }
    let (sign, mag) = n.to_u64_digits();
    let bits = mag.len() * 64;
    let f = BigFloat::from_words(&mag, Sign::Pos, bits as i32);
    if sign == num_bigint::Sign::Minus {
        f.neg()
    } else {
        f
    }
}

/// Nearest `f64` (exact up to the last bit of the leading word).
pub fn float_to_f64(v: &BigFloat) -> f64 {
    if v.is_nan() {
        return f64::NAN;
    }
    if v.is_inf_pos() {
        return f64::INFINITY;
    }
    if v.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    match v.as_raw_parts() {
        Some((words, _, sign, e, _)) if !words.is_empty() => {
            let top = *words.last().unwrap() as f64;
            let next = if words.len() > 1 { words[words.len() - 2] as f64 } else { 0.0 };
            let mant = (top + next / 18446744073709551616.0) / 18446744073709551616.0;
            let mag = mant * 2f64.powi(e);
            if sign == Sign::Neg {
                -mag
            } else {
                mag
            }
        }
        _ => 0.0,
    }
}

/// Exact rational value of a finite float.
pub fn float_to_rational(v: &BigFloat) -> Option<Rational> {
    let (words, _, sign, e, _) = v.as_raw_parts()?;
    if words.is_empty() {
        return Some(Rational::zero());
    }
    let mut digits = Vec::with_capacity(words.len() * 2);
    for w in words {
        digits.push(*w as u32);
        digits.push((*w >> 32) as u32);
    }
    let m = BigInt::from(BigUint::new(digits));
    let shift = e as i64 - 64 * words.len() as i64;
    let two = BigInt::from(2);
    let r = if shift >= 0 {
        Rational::from_integer(m * num_traits::pow(two, shift as usize))
    } else {
        Rational::new(m, num_traits::pow(two, (-shift) as usize))
    };
    Some(if sign == Sign::Neg { -r } else { r })
}

#[derive(Clone, Debug)]
pub struct ComplexValue {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl ComplexValue {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        ComplexValue { re, im }
    }

    pub fn zero(w: &Work) -> Self {
        ComplexValue::new(w.int(0), w.int(0))
    }

    pub fn one(w: &Work) -> Self {
        ComplexValue::new(w.int(1), w.int(0))
    }

    pub fn i(w: &Work) -> Self {
        ComplexValue::new(w.int(0), w.int(1))
    }

    pub fn from_f64(w: &Work, re: f64, im: f64) -> Self {
        ComplexValue::new(w.real(re), w.real(im))
    }

    pub fn from_real(re: BigFloat, w: &Work) -> Self {
        ComplexValue::new(re, w.int(0))
    }

    pub fn from_rational(w: &Work, re: &Rational, im: &Rational) -> Self {
        ComplexValue::new(w.rational(re), w.rational(im))
    }

    /// `e^{i theta}`.
    pub fn cis(theta: &BigFloat, w: &mut Work) -> Self {
        ComplexValue::new(w.cos(theta), w.sin(theta))
    }

    /// `e^{i pi num/den}`.
    pub fn root_of_unity(num: i64, den: i64, w: &mut Work) -> Self {
        let theta = w.pi_frac(num, den);
        Self::cis(&theta, w)
    }

    /// `r e^{i theta}`.
    pub fn polar(r: &BigFloat, theta: &BigFloat, w: &mut Work) -> Self {
        Self::cis(theta, w).scale(r, w)
    }

    pub fn is_finite(&self) -> bool {
        !(self.re.is_nan() || self.im.is_nan() || self.re.is_inf() || self.im.is_inf())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self, w: &Work) -> Self {
        let p = w.bits;
        ComplexValue::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM))
    }

    pub fn sub(&self, o: &Self, w: &Work) -> Self {
        let p = w.bits;
        ComplexValue::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM))
    }

    pub fn neg(&self) -> Self {
        ComplexValue::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Self {
        ComplexValue::new(self.re.clone(), self.im.neg())
    }

    pub fn mul(&self, o: &Self, w: &Work) -> Self {
        let p = w.bits;
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        ComplexValue::new(re, im)
    }

    pub fn sqr(&self, w: &Work) -> Self {
        self.mul(self, w)
    }

    pub fn scale(&self, s: &BigFloat, w: &Work) -> Self {
        let p = w.bits;
        ComplexValue::new(self.re.mul(s, p, RM), self.im.mul(s, p, RM))
    }

    pub fn scale_int(&self, s: i64, w: &Work) -> Self {
        self.scale(&w.int(s), w)
    }

    pub fn div_real(&self, s: &BigFloat, w: &Work) -> Self {
        let p = w.bits;
        ComplexValue::new(self.re.div(s, p, RM), self.im.div(s, p, RM))
    }

    pub fn norm_sqr(&self, w: &Work) -> BigFloat {
        let p = w.bits;
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self, w: &Work) -> BigFloat {
        w.sqrt(&self.norm_sqr(w))
    }

    pub fn recip(&self, w: &Work) -> Result<Self, EvalError> {
        if self.is_zero() {
            return Err(EvalError::Domain("division by zero".into()));
        }
        let n = self.norm_sqr(w);
        Ok(self.conj().div_real(&n, w))
    }

    pub fn div(&self, o: &Self, w: &Work) -> Result<Self, EvalError> {
        Ok(self.mul(&o.recip(w)?, w))
    }

    pub fn arg(&self, w: &mut Work) -> BigFloat {
        w.atan2(&self.im, &self.re)
    }

    pub fn exp(&self, w: &mut Work) -> Self {
        let m = w.exp(&self.re);
        Self::cis(&self.im, w).scale(&m, w)
    }

    /// Principal logarithm, imaginary part in `(-pi, pi]`.
    pub fn ln(&self, w: &mut Work) -> Result<Self, EvalError> {
        if self.is_zero() {
            return Err(EvalError::Domain("logarithm of zero".into()));
        }
        let m = self.abs(w);
        let re = w.ln(&m);
        Ok(ComplexValue::new(re, self.arg(w)))
    }

    /// Principal square root.
    pub fn sqrt(&self, w: &Work) -> Self {
        if self.is_zero() {
            return Self::zero(w);
        }
        let p = w.bits;
        let two = w.int(2);
        let m = self.abs(w);
        if !self.re.is_negative() {
            let a = w.sqrt(&m.add(&self.re, p, RM).div(&two, p, RM));
            let b = self.im.div(&a.mul(&two, p, RM), p, RM);
            ComplexValue::new(a, b)
        } else {
            let mut b = w.sqrt(&m.sub(&self.re, p, RM).div(&two, p, RM));
            if self.im.is_negative() {
                b = b.neg();
            }
            let a = self.im.div(&b.mul(&two, p, RM), p, RM);
            ComplexValue::new(a, b)
        }
    }

    /// Principal power `exp(e * Log z)` for a real exponent.
    pub fn powr(&self, e: &BigFloat, w: &mut Work) -> Result<Self, EvalError> {
        let l = self.ln(w)?;
        Ok(l.scale(e, w).exp(w))
    }

    pub fn powi(&self, n: u32, w: &Work) -> Self {
        let mut acc = Self::one(w);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, w);
            }
            base = base.sqr(w);
            k >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (float_to_f64(&self.re), float_to_f64(&self.im))
    }

    pub fn abs_f64(&self) -> f64 {
        let (a, b) = self.to_f64();
        a.hypot(b)
    }

    pub fn re_rational(&self) -> Option<Rational> {
        float_to_rational(&self.re)
    }

    pub fn im_rational(&self) -> Option<Rational> {
        float_to_rational(&self.im)
    }

    /// Decimal rendering with `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        let f = |v: &BigFloat| match float_to_rational(v) {
            Some(r) => to_decimal(&r, digits),
            None => format!("{}", float_to_f64(v)),
        };
        (f(&self.re), f(&self.im))
    }

    /// Distance to `o`, as an `f64`.
    pub fn dist_f64(&self, o: &Self, w: &Work) -> f64 {
        float_to_f64(&self.sub(o, w).abs(w))
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_decimal(25);
        if im.starts_with('-') {
            write!(f, "{re} - {}i", &im[1..])
        } else {
            write!(f, "{re} + {im}i")
        }
    }
}
