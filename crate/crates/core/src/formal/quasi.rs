//! Named quasi-solution pieces built in the formal ring.

use super::series::FormalSeries;
use crate::numerics::{rat, Rational};

fn sum(items: &[(Rational, u32, i32, i32)]) -> FormalSeries {
    items.iter().fold(FormalSeries::zero(), |acc, (c, k, j, m)| acc.add(&FormalSeries::monomial(c.clone(), *k, *j, *m)))
}

/// `S e^(-x) x^(-1/2)`.
pub fn xi() -> FormalSeries {
    FormalSeries::monomial(rat(1, 1), 1, 1, 1)
}

/// `1/x`.
pub fn inv_x() -> FormalSeries {
    FormalSeries::x_pow_half(2)
}

/// Truncated transseries correction `h0`.
pub fn h0() -> FormalSeries {
    let xi = xi();
    let lead = [(rat(1, 1), 1), (rat(1, 6), 2), (rat(1, 48), 3), (rat(1, 432), 4), (rat(5, 20736), 5)];
    let first = [(rat(-1, 8), 1), (rat(-11, 72), 2), (rat(-43, 1152), 3)];
    let mut h = FormalSeries::zero();
    for (c, n) in lead {
        h = h.add(&xi.pow(n).scale(&c));
    }
    for (c, n) in first {
        h = h.add(&inv_x().mul(&xi.pow(n)).scale(&c));
    }
    h.add(&inv_x().pow(2).mul(&xi).scale(&rat(9, 128)))
}

/// Constant carried by the residual of `h0`, as the coefficient of `x^(-4)`.
pub fn residual_constant() -> Rational {
    rat(-392, 625)
}

/// `sqrt(x) (h0'' + h0'/x - h0 - h0^2/2 - c/x^4)` with `c = 392/625`.
pub fn residual() -> FormalSeries {
    let h = h0();
    let d1 = h.differentiate();
    let inner = d1
        .differentiate()
        .add(&inv_x().mul(&d1))
        .sub(&h)
        .sub(&h.mul(&h).scale(&rat(1, 2)))
        .add(&FormalSeries::monomial(residual_constant(), 0, 8, 0));
    FormalSeries::x_pow_half(-1).mul(&inner)
}

/// The amplitude correction `J` in `y1 = e^(-x)(1 + J/sqrt x)`.
pub fn big_j() -> FormalSeries {
    sum(&[
        (rat(1, 3), 1, 0, 1),
        (rat(1, 16), 2, 1, 2),
        (rat(-19, 72), 1, 2, 1),
        (rat(1, 108), 3, 2, 3),
        (rat(-5, 48), 2, 3, 2),
        (rat(25, 20736), 4, 3, 4),
    ])
}

/// The reduced amplitude `j` with `J = S e^(-x)/3 (1 + j/sqrt x)`.
pub fn small_j() -> FormalSeries {
    sum(&[
        (rat(3, 16), 1, 0, 1),
        (rat(-19, 24), 0, 1, 0),
        (rat(1, 36), 2, 1, 2),
        (rat(-5, 16), 1, 2, 1),
        (rat(25, 6912), 3, 2, 3),
    ])
}

/// `J` rebuilt from `j`.
pub fn big_j_from_small() -> FormalSeries {
    let lead = FormalSeries::monomial(rat(1, 3), 1, 0, 1);
    lead.mul(&FormalSeries::one().add(&FormalSeries::x_pow_half(1).mul(&small_j())))
}

pub fn y1() -> FormalSeries {
    FormalSeries::exp_neg(1).mul(&FormalSeries::one().add(&FormalSeries::x_pow_half(1).mul(&big_j())))
}

/// `y1'' - (1 + h0) y1`.
pub fn q_times_y1() -> FormalSeries {
    let y = y1();
    y.differentiate().differentiate().sub(&FormalSeries::one().add(&h0()).mul(&y))
}

/// Two leading terms of `y1`: `e^(-x) + S e^(-2x)/(3 sqrt x)`.
pub fn y1_head() -> FormalSeries {
    sum(&[(rat(1, 1), 0, 0, 1), (rat(1, 3), 1, 1, 2)])
}

/// Two leading terms of the second solution: `e^(2x)/2 - 2 S e^x/(3 sqrt x)`.
pub fn z2_head() -> FormalSeries {
    sum(&[(rat(1, 2), 0, 0, -2), (rat(-2, 3), 1, 1, -1)])
}

/// Explicit part of the remainder of the second solution.
pub fn z2_remainder_head() -> FormalSeries {
    sum(&[
        (rat(23, 72), 2, 2, 0),
        (rat(-361, 3456), 2, 4, 0),
        (rat(-23, 216), 3, 3, 1),
        (rat(-577, 41472), 4, 4, 2),
    ])
}

/// The source term `E` left after removing the explicit remainder head.
pub fn source_e() -> FormalSeries {
    let j = big_j();
    let bracket = FormalSeries::one()
        .sub(&FormalSeries::x_pow_half(1).mul(&j).scale(&rat(2, 1)))
        .add(&inv_x().mul(&j.pow(2)).scale(&rat(3, 1)));
    let e2 = FormalSeries::exp_neg(-2);
    e2.mul(&bracket)
        .sub(&e2)
        .add(&sum(&[
            (rat(2, 3), 1, 1, -1),
            (rat(-1, 3), 1, 3, -1),
            (rat(-5, 24), 2, 2, 0),
            (rat(-7, 36), 1, 3, -1),
        ]))
        .sub(&z2_remainder_head().differentiate())
}

/// Leading half of the residual: the `x^(-5/2)` and `x^(-3)` parts.
pub fn residual_head() -> FormalSeries {
    residual().filter(|t| t.j == 5 || t.j == 6)
}

/// `(y1 head)(residual head)`.
pub fn product_t() -> FormalSeries {
    y1_head().mul(&residual_head())
}

/// `(y1 head)(z2 head)(residual head)`.
pub fn product_u() -> FormalSeries {
    product_t().mul(&z2_head())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_leading_coefficient() {
        assert_eq!(residual().coeff(2, 5, 2), rat(-53, 64));
    }

    #[test]
    fn residual_constant_sits_in_r7() {
        assert_eq!(residual().coeff(0, 7, 0), rat(-392, 625));
    }

    #[test]
    fn residual_half_powers() {
        assert_eq!(residual().j_values(), vec![5, 6, 7, 8, 9]);
    }

    #[test]
    fn q_leading_coefficient() {
        let q = q_times_y1();
        assert_eq!(q.coeff(1, 5, 2), rat(-539, 384));
        assert_eq!(q.part_j(5).min_m(), Some(2));
    }

    #[test]
    fn source_leading_coefficient() {
        assert_eq!(source_e().coeff(3, 5, 1), rat(-269, 576));
        assert!(source_e().terms().all(|(t, _)| t.m != 0));
    }

    #[test]
    fn product_t_coefficient() {
        assert_eq!(product_t().coeff(4, 5, 5), rat(161, 1728));
    }

    #[test]
    fn two_forms_of_amplitude_agree() {
        assert_eq!(big_j(), big_j_from_small());
        assert_eq!(big_j().coeff(2, 1, 2), rat(1, 16));
    }
}
