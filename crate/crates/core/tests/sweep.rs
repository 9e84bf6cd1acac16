use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use simplest_cubic::arith;
use simplest_cubic::cubic_field::trace_form_disc;
use simplest_cubic::gaussian;
use simplest_cubic::integral_basis;
use simplest_cubic::invariants::{self, Ramification};
use simplest_cubic::nib;
use simplest_cubic::FieldElement;

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn rat(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

#[test]
fn generators_bases_and_periods() {
    for n in -400..=400 {
        let n = int(n);
        let inv = invariants::conductor(&n).unwrap();
        if !inv.tame {
            assert!(nib::all_generators(&n).is_err());
            continue;
        }
        let d = rat(&inv.discriminant);
        let gens = nib::all_generators(&n).unwrap();
        assert_eq!(gens.len(), 6);
        assert_eq!(gens.iter().filter(|g| g.epsilon == 1).count(), 3);
        for g in &gens {
            let [a, b, c] = g.element.conjugates();
            assert_eq!(trace_form_disc(&a, &b, &c).unwrap(), d, "n = {n}");
        }
        let basis = integral_basis::build(&n).unwrap();
        let [one, phi, psi] = basis.elements();
        assert_eq!(trace_form_disc(&one, &phi, &psi).unwrap(), d);

        let report = gaussian::period_identity(&n).unwrap();
        let mu = arith::mobius_of(&inv.conductor_factorization);
        assert_eq!(report.period_element.trace(), rat(&int(mu as i64)));
        assert_eq!(report.period_element.min_poly(), report.min_poly);
    }
}

#[test]
fn simple_generator_iff_square_free_delta() {
    for n in -2000i64..=2000 {
        let n = int(n);
        if invariants::ramification(&n) != Ramification::Unramified3 {
            continue;
        }
        let dd = invariants::decompose(&n).unwrap();
        let gens = nib::all_generators(&n).unwrap();
        let linear: Vec<&FieldElement> = gens
            .iter()
            .map(|g| &g.element)
            .filter(|e| e.coeffs()[2].is_zero() && e.coeffs().iter().all(|c| c.is_integer()))
            .collect();
        assert_eq!(!linear.is_empty(), dd.factorization.is_square_free(), "n = {n}");
        for e in linear {
            let w = e.coeffs()[1].to_integer();
            assert!(w == int(1) || w == int(-1));
            let leg = int(arith::legendre3(&n) as i64);
            assert_eq!(e.coeffs()[0].to_integer(), &w * (leg - &n) / 3);
        }
    }
}

#[test]
fn special_forms_agree_with_general_pipeline() {
    for n in -2000i64..=2000 {
        let n = int(n);
        let Some(sf) = nib::special_forms(&n).unwrap() else {
            continue;
        };
        let gens = nib::all_generators(&n).unwrap();
        let g = gens
            .iter()
            .find(|g| g.element == sf.element)
            .unwrap_or_else(|| panic!("special generator missing at n = {n}"));
        assert_eq!(g.epsilon, 1);
        assert_eq!(g.min_poly, sf.plus);
        assert_eq!(sf.element.min_poly(), sf.plus);
        assert_eq!(sf.minus, sf.plus.reflect());

        let cf = gaussian::corollary_forms(&n).unwrap().unwrap();
        let report = gaussian::period_identity(&n).unwrap();
        assert_eq!(cf.min_poly, report.min_poly, "n = {n}");
        assert_eq!(cf.element, report.period_element, "n = {n}");
    }
}

#[test]
fn numeric_oracle_on_small_fields() {
    for n in [1i64, 2, 4, 5, 12, 39, 66, -15] {
        let m = gaussian::numeric_verify(&int(n), 192).unwrap();
        assert!(m.matched, "n = {n}: {m:?}");
    }
}

#[test]
fn residual_shrinks_with_precision() {
    let lo = gaussian::numeric_verify(&int(235), 128).unwrap();
    let hi = gaussian::numeric_verify(&int(235), 256).unwrap();
    assert!(lo.matched && hi.matched);
    assert!(hi.residual_log2() < lo.residual_log2() - 64.0);
}
