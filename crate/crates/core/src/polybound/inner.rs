//! The inner-interval polynomials: the quasi-solution `g0`, the approximate
//! fundamental pair `J1`, `J2`, and the derived residual, Wronskian and
//! coefficient numerators.

use crate::numerics::rational::{int, rat, Rational};

use super::poly::Poly;

/// Left end of the inner interval, where initial data are matched.
pub fn t0() -> Rational {
    rat(-17, 10)
}

fn from_pairs(pairs: &[(i64, i64)]) -> Poly {
    Poly::new(pairs.iter().map(|&(n, d)| rat(n, d)).collect(), t0())
}

/// Approximate solution of `g'' = 6 g^2 + t` on `[t0, 0]`.
pub fn g0() -> Poly {
    from_pairs(&[
        (-280, 519),
        (150, 1013),
        (239, 10331),
        (110, 14779),
        (-32, 9853),
        (9, 4397),
        (-16, 39505),
        (8, 49105),
    ])
}

pub fn j1() -> Poly {
    from_pairs(&[
        (1, 1),
        (0, 1),
        (-9489, 2932),
        (1350, 4721),
        (359, 199),
        (-1526, 3719),
        (-708, 1633),
        (503, 2201),
        (-211, 6486),
    ])
}

pub fn j2() -> Poly {
    from_pairs(&[
        (0, 1),
        (1, 1),
        (-48, 659797),
        (-2941, 2730),
        (675, 4873),
        (1832, 4745),
        (-2305, 19401),
        (-677, 14054),
        (1573, 53783),
        (-531, 128216),
    ])
}

/// The independent variable `t` as a polynomial around `t0`.
fn t_poly() -> Poly {
    Poly::variable(t0()).add_constant(&t0())
}

/// Polynomial family derived from a quasi-solution and a fundamental pair.
#[derive(Clone, Debug)]
pub struct InnerPolys {
    pub g0: Poly,
    pub j1: Poly,
    pub j2: Poly,
    pub j1p: Poly,
    pub j2p: Poly,
    /// `-(g0'' - 6 g0^2 - t)`.
    pub residual: Poly,
    /// `J1 J2' - J2 J1'`.
    pub wronskian: Poly,
    pub wronskian_minus_one: Poly,
    /// Numerator of `A`: `J2 J1'' - J1 J2''`.
    pub a_num: Poly,
    /// Numerator of `B`: `J2'' J1' - J1'' J2'`.
    pub b_num: Poly,
    /// Numerator of `B1 = 12 g0 + B`: `12 g0 W + B_num`.
    pub b1_num: Poly,
}

impl InnerPolys {
    pub fn build(g0: Poly, j1: Poly, j2: Poly) -> Self {
        let g0pp = g0.derivative().derivative();
        let residual = g0pp.sub(&g0.mul(&g0).scale(&int(6))).sub(&t_poly()).scale(&int(-1));
        let j1p = j1.derivative();
        let j2p = j2.derivative();
        let j1pp = j1p.derivative();
        let j2pp = j2p.derivative();
        let wronskian = j1.mul(&j2p).sub(&j2.mul(&j1p));
        let wronskian_minus_one = wronskian.add_constant(&int(-1));
        let a_num = j2.mul(&j1pp).sub(&j1.mul(&j2pp));
        let b_num = j2pp.mul(&j1p).sub(&j1pp.mul(&j2p));
        let b1_num = g0.mul(&wronskian).scale(&int(12)).add(&b_num);
        InnerPolys { g0, j1, j2, j1p, j2p, residual, wronskian, wronskian_minus_one, a_num, b_num, b1_num }
    }

    pub fn standard() -> Self {
        Self::build(g0(), j1(), j2())
    }

    /// `a1 J1 + a2 J2`.
    pub fn combo(&self, a1: &Rational, a2: &Rational) -> Poly {
        self.j1.scale(a1).add(&self.j2.scale(a2))
    }

    /// `a1 J1' + a2 J2'`.
    pub fn combo_prime(&self, a1: &Rational, a2: &Rational) -> Poly {
        self.j1p.scale(a1).add(&self.j2p.scale(a2))
    }

    /// Named members, for suites that iterate over all of them.
    pub fn named(&self) -> Vec<(&'static str, &Poly)> {
        vec![
            ("g0", &self.g0),
            ("J1", &self.j1),
            ("J2", &self.j2),
            ("J1'", &self.j1p),
            ("J2'", &self.j2p),
            ("R", &self.residual),
            ("W", &self.wronskian),
            ("W-1", &self.wronskian_minus_one),
            ("A_num", &self.a_num),
            ("B_num", &self.b_num),
            ("B1_num", &self.b1_num),
        ]
    }
}
