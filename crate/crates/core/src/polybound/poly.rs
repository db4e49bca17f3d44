//! Univariate polynomials with exact rational coefficients.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::numerics::rational::{format_rational, int, max_r, Rational};
use crate::numerics::Interval;

/// `sum c_k (t - basepoint)^k`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
    basepoint: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Differentiate,
    Multiply,
    Add,
    ComposeAffine,
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>, basepoint: Rational) -> Self {
        let mut p = Poly { coeffs, basepoint };
        p.trim();
        p
    }

    /// Polynomial in `t` itself (basepoint zero).
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs, Rational::zero())
    }

    pub fn zero_at(basepoint: Rational) -> Self {
        Self::new(Vec::new(), basepoint)
    }

    pub fn constant(c: Rational, basepoint: Rational) -> Self {
        Self::new(vec![c], basepoint)
    }

    /// The variable `s = t - basepoint` itself.
    pub fn variable(basepoint: Rational) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], basepoint)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn basepoint(&self) -> &Rational {
        &self.basepoint
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `t` (not at `s`).
    pub fn eval(&self, t: &Rational) -> Rational {
        self.eval_local(&(t - &self.basepoint))
    }

    /// Value at local coordinate `s = t - basepoint`.
    pub fn eval_local(&self, s: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * s + c;
        }
        acc
    }

    /// Horner evaluation over an interval of local coordinates.
    pub fn eval_local_interval(&self, s: &Interval) -> Interval {
        let mut acc = Interval::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(s).add_rat(c);
        }
        acc
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        let s = t - crate::numerics::rational::to_f64(&self.basepoint);
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * s + crate::numerics::rational::to_f64(c))
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * int(k as i64))
            .collect();
        Poly::new(coeffs, self.basepoint.clone())
    }

    /// Re-expresses `other` around this polynomial's basepoint if needed.
    fn aligned(&self, other: &Poly) -> Poly {
        if other.basepoint == self.basepoint {
            other.clone()
        } else {
            let mut q = other.taylor_shift(&(&self.basepoint - &other.basepoint));
            q.basepoint = self.basepoint.clone();
            q
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let o = self.aligned(other);
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + o.coeff(k)).collect();
        Poly::new(coeffs, self.basepoint.clone())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect(), self.basepoint.clone())
    }

    pub fn add_constant(&self, c: &Rational) -> Poly {
        self.add(&Poly::constant(c.clone(), self.basepoint.clone()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let o = self.aligned(other);
        if self.is_zero() || o.is_zero() {
            return Poly::zero_at(self.basepoint.clone());
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out, self.basepoint.clone())
    }

    pub fn powi(&self, n: u32) -> Poly {
        let mut r = Poly::constant(Rational::one(), self.basepoint.clone());
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Coefficients of `u -> p(c + u)` in local coordinates; the result has
    /// basepoint `basepoint + c`.
    pub fn taylor_shift(&self, c: &Rational) -> Poly {
        let mut out = self.coeffs.clone();
        let n = out.len();
        if !c.is_zero() {
            for i in 0..n {
                for j in (i..n.saturating_sub(1)).rev() {
                    let add = c * &out[j + 1];
                    out[j] += add;
                }
            }
        }
        Poly::new(out, &self.basepoint + c)
    }

    /// Local-coordinate substitution `s -> a + b u`, keeping the same
    /// basepoint label for the new variable.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Poly {
        let shifted = self.taylor_shift(a);
        let mut pw = Rational::one();
        let coeffs = shifted
            .coeffs
            .iter()
            .map(|c| {
                let v = c * &pw;
                pw *= b;
                v
            })
            .collect();
        Poly::new(coeffs, self.basepoint.clone())
    }

    pub fn apply(&self, other: Option<&Poly>, op: PolyOp, affine: Option<(&Rational, &Rational)>) -> Poly {
        match op {
            PolyOp::Differentiate => self.derivative(),
            PolyOp::Multiply => self.mul(other.expect("second operand")),
            PolyOp::Add => self.add(other.expect("second operand")),
            PolyOp::ComposeAffine => {
                let (a, b) = affine.expect("affine map");
                self.compose_affine(a, b)
            }
        }
    }
}

/// `sum |c_k| m^k` with `m` the largest modulus of the local coordinate over
/// `[lo, hi]` (given in the polynomial's own variable `s`).
pub fn l1_norm(p: &Poly, lo: &Rational, hi: &Rational) -> Rational {
    let m = max_r(&lo.abs(), &hi.abs());
    l1_with_radius(p.coeffs(), &m, 0)
}

/// `sum_{k >= from} |c_k| m^k`.
pub fn l1_with_radius(coeffs: &[Rational], m: &Rational, from: usize) -> Rational {
    let mut pw = num_traits::pow::pow(m.clone(), from);
    let mut acc = Rational::zero();
    for c in coeffs.iter().skip(from) {
        acc += c.abs() * &pw;
        pw *= m;
    }
    acc
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let s = if self.basepoint.is_zero() {
            "t".to_string()
        } else {
            format!("(t - {})", format_rational(&self.basepoint))
        };
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format_rational(c),
                1 => format!("{}*{s}", format_rational(c)),
                _ => format!("{}*{s}^{k}", format_rational(c)),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::rat;

    fn p(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn l1_examples() {
        assert_eq!(l1_norm(&p(&[(1, 1), (1, 1)]), &rat(0, 1), &rat(1, 1)), rat(2, 1));
        assert_eq!(l1_norm(&p(&[(0, 1), (1, 1), (-1, 2)]), &rat(0, 1), &rat(1, 2)), rat(5, 8));
        assert_eq!(l1_norm(&p(&[(0, 1), (1, 2), (-1, 2)]), &rat(0, 1), &rat(1, 2)), rat(3, 8));
    }

    #[test]
    fn shift_binomial_and_inverse() {
        let sq = p(&[(0, 1), (0, 1), (1, 1)]);
        let q = sq.taylor_shift(&rat(1, 1));
        assert_eq!(q.coeffs(), p(&[(1, 1), (2, 1), (1, 1)]).coeffs());
        let back = q.taylor_shift(&rat(-1, 1));
        assert_eq!(back.coeffs(), sq.coeffs());
        assert_eq!(back.basepoint(), sq.basepoint());
    }

    #[test]
    fn derivative_of_cube() {
        let c = p(&[(0, 1), (0, 1), (0, 1), (1, 1)]);
        assert_eq!(c.derivative(), p(&[(0, 1), (0, 1), (3, 1)]));
    }

    #[test]
    fn arithmetic_respects_basepoints() {
        let a = Poly::new(vec![rat(0, 1), rat(1, 1)], rat(1, 1));
        let b = Poly::variable(rat(0, 1));
        let d = b.sub(&a);
        assert_eq!(d.coeffs(), &[rat(1, 1)]);
        let prod = a.mul(&a);
        assert_eq!(prod.eval(&rat(3, 1)), rat(4, 1));
    }

    #[test]
    fn affine_composition() {
        let sq = p(&[(0, 1), (0, 1), (1, 1)]);
        let q = sq.compose_affine(&rat(1, 1), &rat(2, 1));
        assert_eq!(q.eval_local(&rat(1, 1)), rat(9, 1));
    }
}
