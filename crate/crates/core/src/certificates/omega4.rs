//! Bounds of the outer sector near the anti-Stokes line.

use super::report::{CertificateReport, Relation};
use crate::data::AppendixData;
use crate::functionals::{build_constant, matches_printed, EvalContext, REFERENCE_VALUES};
use crate::numerics::rational::{format_rational, to_decimal};
use crate::numerics::{int, rat, Interval, Rational};

pub const MIN_RHO: i64 = 3;

pub fn check_omega_4(data: &AppendixData, rho: &Rational) -> CertificateReport {
    let mut rep = CertificateReport::new("omega_4 contraction");
    rep.input("rho", format_rational(rho));
    if *rho < int(MIN_RHO) {
        rep.violate(format!("rho = {} is below {MIN_RHO}", format_rational(rho)));
        return rep;
    }
    let ctx = match EvalContext::new(rho) {
        Ok(c) => c,
        Err(e) => {
            rep.violate(e.to_string());
            return rep;
        }
    };
    let value = |name: &str, rep: &mut CertificateReport| -> Option<Interval> {
        let built = build_constant(data, name).and_then(|e| {
            let monotone = e.monotone();
            e.eval(&ctx).map(|v| (v, monotone)).map_err(|source| crate::functionals::CatalogError::Eval {
                name: name.to_string(),
                source,
            })
        });
        match built {
            Ok((v, monotone)) => {
                if !monotone {
                    rep.check(
                        format!("{name} is nonincreasing in rho"),
                        Interval::one(),
                        Relation::Le,
                        Interval::zero(),
                    );
                }
                Some(v)
            }
            Err(e) => {
                rep.violate(e.to_string());
                None
            }
        }
    };
    let (Some(vm), Some(tm), Some(sum)) = (value("V_M", &mut rep), value("T_M", &mut rep), value("M_sum", &mut rep))
    else {
        return rep;
    };
    rep.below("V_M <= 9/40", vm.clone(), false, &rat(9, 40));
    rep.below("T_M <= 18/467", tm.clone(), false, &rat(18, 467));
    rep.below("||G0|| <= M1 + ... + M7 <= 2", sum.clone(), false, &int(2));
    let map = sum.add(&vm.scale(&int(4))).add(&tm.scale(&int(16)));
    rep.below("M1+..+M7 + 4 V_M + 16 T_M < 4", map, true, &int(4));
    rep.below("2 + 4 (1/4) + 16/25 < 4", Interval::point(int(2) + int(1) + rat(16, 25)), true, &int(4));
    rep.below("V_M + 8 T_M <= 3/4", vm.add(&tm.scale(&int(8))), false, &rat(3, 4));
    rep.below("1/4 + 8/25 <= 3/4", Interval::point(rat(1, 4) + rat(8, 25)), false, &rat(3, 4));
    if *rho == int(3) {
        for (name, printed) in REFERENCE_VALUES.iter().filter(|(n, _)| n.starts_with('M') && n.len() == 2) {
            if let Some(v) = value(name, &mut rep) {
                let ok = matches_printed(&v, printed);
                rep.check(
                    format!("{name} agrees with tabulated {printed}"),
                    Interval::from_int(if ok { 0 } else { 1 }),
                    Relation::Le,
                    Interval::zero(),
                );
            }
        }
    }
    rep.note(format!(
        "V_M in [{}, {}], T_M in [{}, {}], sum M in [{}, {}]",
        to_decimal(vm.lo(), 8),
        to_decimal(vm.hi(), 8),
        to_decimal(tm.lo(), 8),
        to_decimal(tm.hi(), 8),
        to_decimal(sum.lo(), 8),
        to_decimal(sum.hi(), 8)
    ));
    rep.note("all constants are sums and products of nonnegative nonincreasing terms, so the bounds hold for every larger rho");
    rep.note("assumption (not machine-checked): the Stokes constant S selects the tritronquee solution");
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_at_three() {
        let r = check_omega_4(&AppendixData::embedded(), &int(3));
        assert!(r.verdict, "{}", r.render());
    }

    #[test]
    fn rho_two_is_a_precondition_violation() {
        let r = check_omega_4(&AppendixData::embedded(), &int(2));
        assert!(!r.verdict);
        assert!(r.precondition.is_some());
    }

    #[test]
    fn larger_rho_still_passes() {
        assert!(check_omega_4(&AppendixData::embedded(), &int(5)).verdict);
    }
}
