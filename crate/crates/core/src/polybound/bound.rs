//! Rigorous bounds of polynomials on partitioned intervals.
//!
//! On each subinterval the polynomial is re-expanded around the midpoint;
//! the cubic head is bounded through its critical points and endpoints, the
//! remaining terms through their l1 norm.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::partition::PartitionPlan;
use super::poly::{l1_with_radius, Poly};
use crate::numerics::rational::{int, max_r, min_r, rat, Rational};
use crate::numerics::{sqrt_enclosure, Interval};

/// Bounds for one subinterval.
#[derive(Clone, Debug)]
pub struct PieceBound {
    pub lo: Rational,
    pub hi: Rational,
    /// Enclosure of the cubic head's range.
    pub head: Interval,
    /// l1 bound of the terms of degree four and higher.
    pub tail: Rational,
}

impl PieceBound {
    pub fn sup_abs(&self) -> Rational {
        self.head.mag() + &self.tail
    }

    pub fn inf(&self) -> Rational {
        self.head.lo() - &self.tail
    }

    pub fn sup(&self) -> Rational {
        self.head.hi() + &self.tail
    }
}

fn head_coeffs(q: &Poly) -> [Rational; 4] {
    [q.coeff(0), q.coeff(1), q.coeff(2), q.coeff(3)]
}

fn cubic(c: &[Rational; 4], u: &Rational) -> Rational {
    ((&c[3] * u + &c[2]) * u + &c[1]) * u + &c[0]
}

fn cubic_prime_iv(c: &[Rational; 4], u: &Interval) -> Interval {
    let a = Interval::point(&c[3] * int(3));
    let b = Interval::point(&c[2] * int(2));
    a.mul(u).add(&b).mul(u).add_rat(&c[1])
}

/// Mean-value enclosure of the cubic over `u`.
fn cubic_centered(c: &[Rational; 4], u: &Interval) -> Interval {
    let m = u.midpoint();
    let dev = u.sub(&Interval::point(m.clone()));
    cubic_prime_iv(c, u).mul(&dev).add_rat(&cubic(c, &m))
}

/// Enclosures of the real critical points of the cubic lying in `[-h, h]`.
fn critical_points(c: &[Rational; 4], h: &Rational) -> Vec<Interval> {
    let dom = Interval::new(-h, h.clone()).expect("h >= 0");
    let mut out = Vec::new();
    if !c[3].is_zero() {
        let a = &c[3] * int(3);
        let b = &c[2] * int(2);
        let cc = c[1].clone();
        let disc = &b * &b - int(4) * &a * &cc;
        if disc.is_negative() {
            return out;
        }
        let two_a = &a * int(2);
        let tol = rat(1, 1_000_000) * two_a.abs();
        let sq = sqrt_enclosure(&Interval::point(disc), &tol).expect("nonnegative");
        let minus_b = Interval::point(-b);
        for root in [minus_b.add(&sq), minus_b.sub(&sq)] {
            let r = root.scale(&two_a.recip());
            if let Some(x) = r.intersect(&dom) {
                out.push(x);
            }
        }
    } else if !c[2].is_zero() {
        let r = -&c[1] / (&c[2] * int(2));
        if dom.contains(&r) {
            out.push(Interval::point(r));
        }
    }
    out
}

/// Range enclosure of the cubic head on `[-h, h]`.
pub fn cubic_range(c: &[Rational; 4], h: &Rational) -> Interval {
    let mut range = Interval::point(cubic(c, &-h.clone())).hull(&Interval::point(cubic(c, h)));
    for x in critical_points(c, h) {
        range = range.hull(&cubic_centered(c, &x));
    }
    range
}

/// Bounds `p` on `[lo, hi]` (in the variable `t`).
pub fn piece_bound(p: &Poly, lo: &Rational, hi: &Rational) -> PieceBound {
    let two = int(2);
    let mid = (lo + hi) / &two;
    let h = (hi - lo) / &two;
    let q = p.taylor_shift(&(&mid - p.basepoint()));
    let head = cubic_range(&head_coeffs(&q), &h);
    let tail = l1_with_radius(q.coeffs(), &h, 4);
    PieceBound { lo: lo.clone(), hi: hi.clone(), head, tail }
}

pub fn piece_bounds(p: &Poly, plan: &PartitionPlan) -> Vec<PieceBound> {
    let pieces: Vec<(Rational, Rational)> = plan.subintervals().map(|(a, b)| (a.clone(), b.clone())).collect();
    pieces.par_iter().map(|(a, b)| piece_bound(p, a, b)).collect()
}

/// Upper bound of `max |p|` over the partitioned interval.
pub fn sup_bound(p: &Poly, plan: &PartitionPlan) -> Rational {
    piece_bounds(p, plan).iter().fold(Rational::zero(), |m, b| max_r(&m, &b.sup_abs()))
}

/// Lower bound of `min p` over the partitioned interval.
pub fn inf_bound(p: &Poly, plan: &PartitionPlan) -> Rational {
    let bounds = piece_bounds(p, plan);
    let mut it = bounds.iter().map(PieceBound::inf);
    let first = it.next().expect("nonempty plan");
    it.fold(first, |m, b| min_r(&m, &b))
}

/// Outcome of a refinement run aimed at a target bound.
#[derive(Clone, Debug)]
pub struct Certification {
    pub certified: bool,
    pub bound: Rational,
    /// Number of subintervals in the final partition.
    pub pieces: usize,
    pub depth_used: u32,
}

/// Tries to show `max |p| < target`, bisecting offending subintervals up to
/// `max_depth` times.
pub fn certify_below(p: &Poly, plan: &PartitionPlan, target: &Rational, max_depth: u32) -> Certification {
    let mut work: Vec<(Rational, Rational, u32)> = plan.subintervals().map(|(a, b)| (a.clone(), b.clone(), 0)).collect();
    let mut done_bound = Rational::zero();
    let mut pieces = 0usize;
    let mut depth_used = 0;
    let mut certified = true;
    while let Some((a, b, d)) = work.pop() {
        let pb = piece_bound(p, &a, &b).sup_abs();
        if pb < *target || d >= max_depth {
            if pb >= *target {
                certified = false;
            }
            done_bound = max_r(&done_bound, &pb);
            pieces += 1;
            depth_used = depth_used.max(d);
        } else {
            let m = (&a + &b) / int(2);
            work.push((a, m.clone(), d + 1));
            work.push((m, b, d + 1));
        }
    }
    Certification { certified, bound: done_bound, pieces, depth_used }
}

/// Result of bounding `|num / den|`.
#[derive(Clone, Debug, PartialEq)]
pub enum RatioOutcome {
    /// `den` is certified positive and `sup|num| < eps * inf den`.
    Certified { num_sup: Rational, den_inf: Rational },
    /// `den` is certified positive but the inequality was not established.
    NotCertified { num_sup: Rational, den_inf: Rational },
    /// Positivity of `den` could not be established.
    Indeterminate { den_inf: Rational },
}

impl RatioOutcome {
    pub fn holds(&self) -> Option<bool> {
        match self {
            RatioOutcome::Certified { .. } => Some(true),
            RatioOutcome::NotCertified { .. } => Some(false),
            RatioOutcome::Indeterminate { .. } => None,
        }
    }

    /// Upper bound of `|num/den|` when `den` was certified positive.
    pub fn ratio_bound(&self) -> Option<Rational> {
        match self {
            RatioOutcome::Certified { num_sup, den_inf } | RatioOutcome::NotCertified { num_sup, den_inf } => {
                Some(num_sup / den_inf)
            }
            RatioOutcome::Indeterminate { .. } => None,
        }
    }
}

/// Uses an already established lower bound of the denominator.
pub fn ratio_with_den_lower(num: &Poly, plan: &PartitionPlan, den_inf: &Rational, eps: &Rational) -> RatioOutcome {
    if !den_inf.is_positive() {
        return RatioOutcome::Indeterminate { den_inf: den_inf.clone() };
    }
    let num_sup = sup_bound(num, plan);
    if num_sup < eps * den_inf {
        RatioOutcome::Certified { num_sup, den_inf: den_inf.clone() }
    } else {
        RatioOutcome::NotCertified { num_sup, den_inf: den_inf.clone() }
    }
}

/// Certifies `|num/den| < eps` on the plan via `sup|num| < eps * inf den`.
pub fn rational_sup_bound(num: &Poly, den: &Poly, plan: &PartitionPlan, eps: &Rational) -> RatioOutcome {
    let den_inf = inf_bound(den, plan);
    if num.is_zero() && den_inf.is_positive() {
        return RatioOutcome::Certified { num_sup: Rational::zero(), den_inf };
    }
    ratio_with_den_lower(num, plan, &den_inf, eps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn square_on_unit_interval() {
        let p = poly(&[(0, 1), (0, 1), (1, 1)]);
        let b = sup_bound(&p, &PartitionPlan::trivial(rat(0, 1), rat(1, 1)));
        assert!(b >= rat(1, 1));
        assert!(b <= rat(1, 1) + rat(1, 1000));
    }

    #[test]
    fn interior_extremum_found() {
        // t^3 - 3t reaches +-2 at the endpoints and at the critical points
        let p = poly(&[(0, 1), (-3, 1), (0, 1), (1, 1)]);
        let plan = PartitionPlan::trivial(rat(-2, 1), rat(2, 1));
        let b = sup_bound(&p, &plan);
        assert!(b >= rat(2, 1));
        assert!(b < rat(2, 1) + rat(1, 1000));
        let lo = inf_bound(&p, &plan);
        assert!(lo <= rat(-2, 1) && lo > rat(-2, 1) - rat(1, 1000));
    }

    #[test]
    fn higher_degree_sound() {
        let p = poly(&[(1, 3), (-2, 1), (0, 1), (5, 7), (-1, 2), (1, 9), (3, 11)]);
        let plan = PartitionPlan::new("p", vec![rat(-1, 1), rat(-1, 3), rat(1, 5), rat(1, 1)]).unwrap();
        let b = sup_bound(&p, &plan);
        for i in 0..=1000 {
            let t = rat(-1, 1) + rat(2 * i, 1000);
            assert!(p.eval(&t).abs() <= b);
        }
    }

    #[test]
    fn zero_numerator_certifies() {
        let den = poly(&[(1, 1)]);
        let out = rational_sup_bound(&Poly::from_coeffs(vec![]), &den, &PartitionPlan::trivial(rat(0, 1), rat(1, 1)), &rat(1, 1000));
        assert_eq!(out.holds(), Some(true));
    }

    #[test]
    fn nonpositive_denominator_indeterminate() {
        let den = poly(&[(0, 1), (1, 1)]);
        let out = rational_sup_bound(&poly(&[(1, 1)]), &den, &PartitionPlan::trivial(rat(-1, 1), rat(1, 1)), &rat(1, 1));
        assert_eq!(out.holds(), None);
    }

    #[test]
    fn refinement_reaches_target() {
        let p = poly(&[(1, 1), (0, 1), (0, 1), (0, 1), (-1, 1)]);
        let plan = PartitionPlan::trivial(rat(-1, 1), rat(1, 1));
        assert!(sup_bound(&p, &plan) >= rat(2, 1));
        let c = certify_below(&p, &plan, &rat(11, 10), 12);
        assert!(c.certified);
        assert!(c.pieces > 1);
    }
}
