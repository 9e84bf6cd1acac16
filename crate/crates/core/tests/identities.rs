use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use simplest_cubic::arith;
use simplest_cubic::cubic_field::{trace_form_disc, FieldElement};
use simplest_cubic::invariants::{conductor, decompose, delta};

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn rat(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn roots(n: &BigInt) -> [FieldElement; 3] {
    FieldElement::rho(n).conjugates()
}

#[test]
fn mixed_root_sums() {
    for n in -60..=60 {
        let n = int(n);
        let [r, r1, r2] = roots(&n);
        let s1 = &(&(&(&r * &r) * &r1) + &(&(&r1 * &r1) * &r2)) + &(&(&r2 * &r2) * &r);
        let s2 = &(&(&(&r * &r) * &r2) + &(&(&r1 * &r1) * &r)) + &(&(&r2 * &r2) * &r1);
        assert_eq!(s1, FieldElement::rational(&n, rat(int(3))));
        assert_eq!(s2, FieldElement::rational(&n, rat(-(&n * &n) - 3 * &n - 6)));
        assert_eq!(&s1 - &s2, FieldElement::rational(&n, rat(delta(&n))));
    }
}

#[test]
fn conjugates_as_polynomials_in_rho() {
    for n in [-100, -3, 0, 7, 286, 12345] {
        let n = int(n);
        let [_, r1, r2] = roots(&n);
        let one = BigInt::one();
        assert_eq!(r1, FieldElement::from_ints(&n, int(-2), -(&n + &one), one.clone()));
        assert_eq!(r2, FieldElement::from_ints(&n, &n + 2, n.clone(), -one.clone()));
        // ρ' = −1/(1+ρ)
        let shifted = &FieldElement::one(&n) + &FieldElement::rho(&n);
        assert_eq!(&r1 * &shifted, FieldElement::rational(&n, rat(int(-1))));
    }
}

#[test]
fn delta_and_cube_congruences() {
    for n in -500..=500 {
        let n = int(n);
        let dd = decompose(&n).unwrap();
        let modulus = &dd.c * &dd.c * &dd.c * &dd.e * &dd.e;
        assert!(dd.delta.is_multiple_of(&modulus));
        assert_eq!((&n * &n * &n - 27i32).mod_floor(&modulus), int(0), "n = {n}");
        assert_eq!(&n * &n * &n, (&n - 3) * &dd.delta + 27);
    }
}

#[test]
fn every_prime_of_delta_is_0_or_1_mod_3() {
    for n in -2000..=2000 {
        let fac = arith::factor(&delta(&int(n))).unwrap();
        for p in fac.primes() {
            let r = p.mod_floor(&int(3));
            assert!(r == int(0) || r == int(1), "n = {n}, p = {p}");
        }
    }
}

#[test]
fn mirror_symmetry() {
    for n in -700..=700 {
        let m = -n - 3;
        assert_eq!(delta(&int(n)), delta(&int(m)));
        let a = conductor(&int(n)).unwrap();
        let b = conductor(&int(m)).unwrap();
        assert_eq!(a.conductor, b.conductor, "n = {n}");
        assert_eq!(a.tame, b.tame);
    }
}

#[test]
fn power_basis_discriminant() {
    for n in -50..=50 {
        let n = int(n);
        let rho = FieldElement::rho(&n);
        let d = trace_form_disc(&FieldElement::one(&n), &rho, &(&rho * &rho)).unwrap();
        assert_eq!(d, rat(delta(&n).pow(2)));
    }
}
