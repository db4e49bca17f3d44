//! Named partitions of an interval.

use serde::{Deserialize, Serialize};

use crate::numerics::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("partition {0:?} needs at least two points")]
    TooShort(String),
    #[error("partition {0:?} is not strictly increasing")]
    NotIncreasing(String),
    #[error("partition {name:?} does not span [{lo}, {hi}]")]
    WrongSpan { name: String, lo: String, hi: String },
    #[error("bad rational in partition {0:?}: {1}")]
    Parse(String, String),
}

/// Strictly increasing points `x_0 < x_1 < ... < x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionPlan {
    name: String,
    points: Vec<Rational>,
}

impl PartitionPlan {
    pub fn new(name: impl Into<String>, points: Vec<Rational>) -> Result<Self, PartitionError> {
        let name = name.into();
        if points.len() < 2 {
            return Err(PartitionError::TooShort(name));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotIncreasing(name));
        }
        Ok(PartitionPlan { name, points })
    }

    /// Builds `-<m_0, m_1, ..., m_n>`, i.e. the points `-m_i` in increasing order
    /// when the magnitudes are listed in decreasing order.
    pub fn negated(name: impl Into<String>, magnitudes: &[Rational]) -> Result<Self, PartitionError> {
        Self::new(name, magnitudes.iter().map(|m| -m).collect())
    }

    /// Single subinterval `[lo, hi]`.
    pub fn trivial(lo: Rational, hi: Rational) -> Self {
        Self::new("trivial", vec![lo, hi]).expect("lo < hi")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn start(&self) -> &Rational {
        &self.points[0]
    }

    pub fn end(&self) -> &Rational {
        self.points.last().expect("nonempty")
    }

    pub fn subintervals(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.points.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn check_span(&self, lo: &Rational, hi: &Rational) -> Result<(), PartitionError> {
        if self.start() != lo || self.end() != hi {
            return Err(PartitionError::WrongSpan {
                name: self.name.clone(),
                lo: format_rational(lo),
                hi: format_rational(hi),
            });
        }
        Ok(())
    }

    /// Splits every subinterval in half.
    pub fn refined(&self) -> Self {
        let two = Rational::from_integer(2.into());
        let mut pts = Vec::with_capacity(self.points.len() * 2);
        for (a, b) in self.subintervals() {
            pts.push(a.clone());
            pts.push((a + b) / &two);
        }
        pts.push(self.end().clone());
        PartitionPlan { name: format!("{}/refined", self.name), points: pts }
    }
}

/// Serialized form: exact rationals as `"num/den"` strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PartitionRecord {
    pub name: String,
    pub points: Vec<String>,
}

impl TryFrom<&PartitionRecord> for PartitionPlan {
    type Error = PartitionError;

    fn try_from(r: &PartitionRecord) -> Result<Self, Self::Error> {
        let pts = r
            .points
            .iter()
            .map(|s| parse_rational(s).map_err(|e| PartitionError::Parse(r.name.clone(), e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        PartitionPlan::new(r.name.clone(), pts)
    }
}

impl From<&PartitionPlan> for PartitionRecord {
    fn from(p: &PartitionPlan) -> Self {
        PartitionRecord { name: p.name.clone(), points: p.points.iter().map(format_rational).collect() }
    }
}
