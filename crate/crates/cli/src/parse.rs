//! Flag value parsing.

use p1cert::evaluator::{ComplexValue, Work};
use p1cert::numerics::rational::from_decimal;
use p1cert::numerics::{parse_rational, Rational};

/// `p/q`, an integer or a plain decimal.
pub fn number(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let r = if s.contains('/') { parse_rational(s) } else { from_decimal(s) };
    r.map_err(|_| format!("not a number: '{s}'"))
}

/// Point given as `re,im`, `r<theta` (radians) or a bare real part.
pub fn complex(s: &str, w: &mut Work) -> Result<ComplexValue, String> {
    if let Some((r, theta)) = s.split_once('<') {
        let r = number(r)?;
        let theta = number(theta)?;
        let (r, theta) = (w.rational(&r), w.rational(&theta));
        return Ok(ComplexValue::polar(&r, &theta, w));
    }
    let (re, im) = match s.split_once(',') {
        Some((a, b)) => (number(a)?, number(b)?),
        None => (number(s)?, Rational::from_integer(0.into())),
    };
    Ok(ComplexValue::from_rational(w, &re, &im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use p1cert::numerics::rat;

    #[test]
    fn numbers() {
        assert_eq!(number("7/2").unwrap(), rat(7, 2));
        assert_eq!(number("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(number("3").unwrap(), rat(3, 1));
        assert!(number("x").is_err());
    }

    #[test]
    fn complex_forms() {
        let mut w = Work::new(128).unwrap();
        assert_eq!(complex("0.5,-1", &mut w).unwrap().to_f64(), (0.5, -1.0));
        assert_eq!(complex("0", &mut w).unwrap().to_f64(), (0.0, 0.0));
        let p = complex("2<1.5707963267948966", &mut w).unwrap().to_f64();
        assert!(p.0.abs() < 1e-15 && (p.1 - 2.0).abs() < 1e-15);
        assert!(complex("1,,2", &mut w).is_err());
    }
}
