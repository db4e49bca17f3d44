//! Polynomials in `1/zeta` with `S`-monomial coefficients, and the weighted
//! l1 functionals on them.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::powersum::PowerSum;
use crate::formal::FormalSeries;
use crate::numerics::{int, Interval, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FKind {
    F1,
    F2,
    F3,
    F4,
}

impl FKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "F1" => Some(FKind::F1),
            "F2" => Some(FKind::F2),
            "F3" => Some(FKind::F3),
            "F4" => Some(FKind::F4),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FunctionalError {
    #[error("{kind:?} needs weight index above {min}, got {j}")]
    Weight { kind: FKind, min: i64, j: Rational },
    #[error("{0:?} needs a polynomial without constant term")]
    ConstantTerm(FKind),
}

/// `sum_m p_m zeta^(-m)` where each `p_m` is a polynomial in `S`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpPoly {
    terms: BTreeMap<(i32, u32), Rational>,
}

impl ExpPoly {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c S^k zeta^(-m)`.
    pub fn push(&mut self, m: i32, k: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((m, k)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(m, k));
        }
    }

    /// The coefficient polynomial of `x^(-j/2)` in a formal series.
    pub fn from_series(s: &FormalSeries, j: i32) -> Self {
        let mut p = Self::new();
        for (key, c) in s.terms().filter(|(key, _)| key.j == j) {
            p.push(key.m, key.k, c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = Self::new();
        for ((m, k), v) in &self.terms {
            p.push(*m, *k, v * c);
        }
        p
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for ((m, k), v) in &o.terms {
            p.push(*m, *k, v.clone());
        }
        p
    }

    pub fn min_m(&self) -> Option<i32> {
        self.terms.keys().map(|(m, _)| *m).min()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, u32, &Rational)> {
        self.terms.iter().map(|((m, k), c)| (*m, *k, c))
    }

    /// The same polynomial with every coefficient replaced by its absolute
    /// value and evaluated at `zeta = 1`, as a polynomial in `|S|`.
    pub fn abs_sum(&self) -> PowerSum {
        self.weighted(|_| Some(int(1)))
    }

    fn weighted(&self, w: impl Fn(i32) -> Option<Rational>) -> PowerSum {
        let mut out = PowerSum::zero();
        for ((m, k), c) in &self.terms {
            if let Some(f) = w(*m) {
                out.add_term(0, *k, false, f * c.abs());
            }
        }
        out
    }
}

fn check_weight(kind: FKind, j: &Rational, min: i64) -> Result<(), FunctionalError> {
    if *j > int(min) {
        Ok(())
    } else {
        Err(FunctionalError::Weight { kind, min, j: j.clone() })
    }
}

/// Weighted l1 functional as an exact polynomial in `|S|`.
pub fn f_functional(kind: FKind, p: &ExpPoly, j: &Rational) -> Result<PowerSum, FunctionalError> {
    match kind {
        FKind::F1 => {
            check_weight(kind, j, 2)?;
            Ok(p.abs_sum().scale(&(int(2) / (j - int(2)))))
        }
        FKind::F3 => {
            check_weight(kind, j, 3)?;
            Ok(p.abs_sum().scale(&(int(2) / (j - int(3)))))
        }
        FKind::F2 => {
            if p.min_m().is_some_and(|m| m <= 0) {
                return Err(FunctionalError::ConstantTerm(kind));
            }
            Ok(p.weighted(|m| Some(Rational::new(2.into(), m.into()))))
        }
        FKind::F4 => {
            check_weight(kind, j, 1)?;
            if p.min_m().is_some_and(|m| m <= 0) {
                return Err(FunctionalError::ConstantTerm(kind));
            }
            let a = j * j + j * int(2) - int(2);
            let b = j * (j - int(1));
            Ok(p.weighted(|m| Some(&a / (&b * int(m.into())))))
        }
    }
}

/// Interval value of a functional with `|S|` replaced by an enclosure.
pub fn f_functional_value(kind: FKind, p: &ExpPoly, j: &Rational, abs_s: &Interval) -> Result<Interval, FunctionalError> {
    Ok(f_functional(kind, p, j)?.eval_parts(&Interval::zero(), abs_s, &Interval::zero()))
}
