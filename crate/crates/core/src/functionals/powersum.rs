//! Constants as exact polynomials in `rho^(-1/2)`, `|S|` and `sqrt 2`, plus
//! a small expression tree for the few constants that need a geometric
//! factor `1/(1 - f)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::numerics::rational::format_rational;
use crate::numerics::{int, rat, sqrt_enclosure, Constants, Interval, NumericsError, Rational};

/// Monomial key: `(power of rho^(-1/2), power of |S|, factor sqrt 2)`.
pub type PowerKey = (u32, u32, bool);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSum {
    terms: BTreeMap<PowerKey, Rational>,
}

/// One exported term: `coeff |S|^s_power (sqrt 2)^[sqrt2] rho^(-exponent)`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PowerTerm {
    pub coeff: String,
    pub exponent: String,
    pub s_power: u32,
    pub sqrt2: bool,
}

impl PowerSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, false, c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn monomial(c: Rational, r_power: u32, s_power: u32, sqrt2: bool) -> Self {
        let mut p = Self::zero();
        p.add_term(r_power, s_power, sqrt2, c);
        p
    }

    /// `rho^(-1/2)`.
    pub fn r() -> Self {
        Self::monomial(Rational::one(), 1, 0, false)
    }

    /// `|S|`.
    pub fn s() -> Self {
        Self::monomial(Rational::one(), 0, 1, false)
    }

    pub fn sqrt2() -> Self {
        Self::monomial(Rational::one(), 0, 0, true)
    }

    pub fn add_term(&mut self, r_power: u32, s_power: u32, sqrt2: bool, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (r_power, s_power, sqrt2);
        let e = self.terms.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, r_power: u32, s_power: u32, sqrt2: bool) -> Rational {
        self.terms.get(&(r_power, s_power, sqrt2)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0, false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PowerKey, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for ((a, b, q), c) in &o.terms {
            p.add_term(*a, *b, *q, c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = Self::zero();
        for ((a, b, q), v) in &self.terms {
            p.add_term(*a, *b, *q, v * c);
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for ((a1, b1, q1), c1) in &self.terms {
            for ((a2, b2, q2), c2) in &o.terms {
                let c = c1 * c2;
                match (q1, q2) {
                    (true, true) => p.add_term(a1 + a2, b1 + b2, false, c * int(2)),
                    _ => p.add_term(a1 + a2, b1 + b2, *q1 || *q2, c),
                }
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplies by `rho^(-n/2)`.
    pub fn shift_r(&self, n: u32) -> Self {
        let mut p = Self::zero();
        for ((a, b, q), c) in &self.terms {
            p.add_term(a + n, *b, *q, c.clone());
        }
        p
    }

    /// Every coefficient nonnegative, so each term decreases in `rho`.
    pub fn monotone(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn eval_parts(&self, r: &Interval, abs_s: &Interval, sqrt2: &Interval) -> Interval {
        let mut acc = Interval::zero();
        for ((a, b, q), c) in &self.terms {
            let mut t = r.powi(*a).mul(&abs_s.powi(*b)).scale(c);
            if *q {
                t = t.mul(sqrt2);
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn eval(&self, ctx: &EvalContext) -> Interval {
        self.eval_parts(&ctx.r, &ctx.abs_s, &ctx.sqrt2)
    }

    pub fn export(&self) -> Vec<PowerTerm> {
        self.terms
            .iter()
            .map(|((a, b, q), c)| PowerTerm {
                coeff: format_rational(c),
                exponent: format_rational(&rat(*a as i64, 2)),
                s_power: *b,
                sqrt2: *q,
            })
            .collect()
    }
}

impl fmt::Display for PowerSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b, q), c)| {
                let mut s = format_rational(c);
                if *q {
                    s.push_str(" sqrt2");
                }
                if *b > 0 {
                    s.push_str(&format!(" |S|^{b}"));
                }
                if *a > 0 {
                    s.push_str(&format!(" rho^(-{a}/2)"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Enclosures shared by all constant evaluations at one `rho`.
#[derive(Clone, Debug)]
pub struct EvalContext {
    pub rho: Rational,
    pub r: Interval,
    pub abs_s: Interval,
    pub sqrt2: Interval,
}

/// Bits kept in the `|S|` enclosure; `2^-40` is below `1e-12`.
pub const ABS_S_BITS: u32 = 40;

impl EvalContext {
    pub fn new(rho: &Rational) -> Result<Self, NumericsError> {
        if *rho < Rational::one() {
            return Err(NumericsError::Domain(format!("rho = {} must be at least 1", format_rational(rho))));
        }
        let c = Constants::get();
        let tol = crate::numerics::constants::default_tol();
        let r = sqrt_enclosure(&Interval::point(rho.clone()), &tol)?.recip()?;
        Ok(EvalContext { rho: rho.clone(), r, abs_s: c.abs_s.round_outward(ABS_S_BITS), sqrt2: c.sqrt2.clone() })
    }
}

/// Expression over power sums. Every node is nonnegative and nonincreasing
/// in `rho` when its leaves are monotone power sums.
#[derive(Clone, Debug, PartialEq)]
pub enum ConstantExpr {
    Poly(PowerSum),
    Sum(Vec<ConstantExpr>),
    Product(Vec<ConstantExpr>),
    /// `1 / (1 - f)^power`.
    Geometric { ratio: Box<ConstantExpr>, power: u32 },
}

impl From<PowerSum> for ConstantExpr {
    fn from(p: PowerSum) -> Self {
        ConstantExpr::Poly(p)
    }
}

impl ConstantExpr {
    pub fn eval(&self, ctx: &EvalContext) -> Result<Interval, NumericsError> {
        Ok(match self {
            ConstantExpr::Poly(p) => p.eval(ctx),
            ConstantExpr::Sum(v) => {
                let mut acc = Interval::zero();
                for e in v {
                    acc = acc.add(&e.eval(ctx)?);
                }
                acc
            }
            ConstantExpr::Product(v) => {
                let mut acc = Interval::one();
                for e in v {
                    acc = acc.mul(&e.eval(ctx)?);
                }
                acc
            }
            ConstantExpr::Geometric { ratio, power } => {
                let f = ratio.eval(ctx)?;
                if !f.certainly_lt(&Interval::one()) {
                    return Err(NumericsError::Domain("geometric ratio not below 1".into()));
                }
                Interval::one().sub(&f).powi(*power).recip()?
            }
        })
    }

    pub fn monotone(&self) -> bool {
        match self {
            ConstantExpr::Poly(p) => p.monotone(),
            ConstantExpr::Sum(v) | ConstantExpr::Product(v) => v.iter().all(ConstantExpr::monotone),
            ConstantExpr::Geometric { ratio, .. } => ratio.monotone(),
        }
    }

    /// Expanded polynomial, when no geometric factor occurs.
    pub fn as_power_sum(&self) -> Option<PowerSum> {
        match self {
            ConstantExpr::Poly(p) => Some(p.clone()),
            ConstantExpr::Sum(v) => v.iter().try_fold(PowerSum::zero(), |acc, e| Some(acc.add(&e.as_power_sum()?))),
            ConstantExpr::Product(v) => v.iter().try_fold(PowerSum::one(), |acc, e| Some(acc.mul(&e.as_power_sum()?))),
            ConstantExpr::Geometric { .. } => None,
        }
    }

    pub fn render(&self) -> String {
        match self {
            ConstantExpr::Poly(p) => format!("[{p}]"),
            ConstantExpr::Sum(v) => v.iter().map(ConstantExpr::render).collect::<Vec<_>>().join(" + "),
            ConstantExpr::Product(v) => {
                v.iter().map(|e| format!("({})", e.render())).collect::<Vec<_>>().join(" * ")
            }
            ConstantExpr::Geometric { ratio, power } => format!("1/(1 - {})^{power}", ratio.render()),
        }
    }
}

/// Whether a constant's bound at one `rho` covers every larger `rho`.
pub fn monotone_check(e: &ConstantExpr) -> bool {
    e.monotone()
}
