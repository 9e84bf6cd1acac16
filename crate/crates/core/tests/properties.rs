use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use simplest_cubic::arith;
use simplest_cubic::cubic_field::{lemma42, FieldElement, MonicCubic};
use simplest_cubic::eisenstein::{self, EisensteinInt, Pair};
use simplest_cubic::invariants;
use simplest_cubic::nib;

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(int(num), int(den))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-10_000i64..10_000, 1i64..500).prop_map(|(a, b)| q(a, b))
}

fn element(n: i64) -> impl Strategy<Value = FieldElement> {
    (rational(), rational(), rational()).prop_map(move |(a, b, c)| FieldElement::new(&int(n), [a, b, c]))
}

fn eis() -> impl Strategy<Value = EisensteinInt> {
    (-1000i64..1000, -1000i64..1000).prop_map(|(x, y)| EisensteinInt::new(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn lemma42_matches_conjugates(n in -3000i64..3000, r1 in rational(), r2 in rational(), r3 in rational()) {
        let n = int(n);
        let eta = FieldElement::shanks_combination(&n, &r1, &r2, &r3);
        let (e1, e2, e3) = lemma42(&r1, &r2, &r3, &n);
        prop_assert_eq!(eta.min_poly(), MonicCubic::from_symmetric(e1, e2, e3));
    }

    #[test]
    fn norm_is_multiplicative(a in eis(), b in eis()) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.conj().norm(), a.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gcd_divides_and_is_maximal(a in eis(), b in eis(), c in eis()) {
        prop_assume!(!c.is_zero());
        let ac = &a * &c;
        let bc = &b * &c;
        prop_assume!(!(ac.is_zero() && bc.is_zero()));
        let g = eisenstein::gcd(&ac, &bc).unwrap();
        prop_assert!(g.divides(&ac) && g.divides(&bc));
        prop_assert!(c.divides(&g));
    }

    #[test]
    fn sigma_has_order_three(x in element(17)) {
        prop_assert_eq!(x.apply_sigma().apply_sigma().apply_sigma(), x.clone());
        prop_assert_eq!(x.apply_sigma().trace(), x.trace());
        prop_assert_eq!(x.apply_sigma().norm(), x.norm());
    }

    #[test]
    fn min_poly_annihilates(n in -500i64..500, x in element(0)) {
        let x = FieldElement::new(&int(n), x.coeffs().clone());
        prop_assert!(x.min_poly().eval_element(&x) == FieldElement::zero(&int(n)));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in element(-5), b in element(-5), c in element(-5)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn factor_reassembles(v in 1u64..1_000_000_000_000) {
        let n = BigInt::from(v);
        let f = arith::factor(&n).unwrap();
        prop_assert_eq!(f.reassemble(), n);
        for p in f.primes() {
            prop_assert!(arith::is_probable_prime(&p.magnitude().clone()));
        }
    }

    #[test]
    fn split_round_trip(n in -100_000i64..100_000) {
        let dd = invariants::decompose(&int(n)).unwrap();
        prop_assert_eq!(&dd.d * &dd.e * &dd.e * &dd.c * &dd.c * &dd.c, dd.delta.clone());
        prop_assert_eq!(dd.d.gcd(&dd.e), int(1));
        let (d, e) = arith::square_free_split(&dd.b).unwrap();
        prop_assert_eq!((d, e), (dd.d.clone(), dd.e.clone()));
    }

    #[test]
    fn closed_form_matches_conjugates(n in -5000i64..5000, k in 0usize..6) {
        let n = int(n);
        prop_assume!(invariants::has_nib(&n));
        let dd = invariants::decompose(&n).unwrap();
        let pairs = eisenstein::find_pair(&n, &dd.ec()).unwrap();
        let p: &Pair = &pairs.all_six[k];
        let g = nib::generator(&n, &p.a0, &p.a1).unwrap();
        for sign in [1i8, -1] {
            let closed = nib::min_poly_closed(&n, &p.a0, &p.a1, &g.m, g.epsilon, sign).unwrap();
            let el = g.element.scale(&BigRational::from_integer(BigInt::from(sign)));
            prop_assert_eq!(closed, el.min_poly());
        }
    }

    #[test]
    fn mod_inverse_is_inverse(a in -10_000i64..10_000, m in 1i64..100_000) {
        let (a, m) = (int(a), int(m));
        match arith::mod_inverse(&a, &m) {
            Ok(u) => {
                prop_assert!(!u.is_negative() && u < m);
                prop_assert!((&a * &u - 1i32).mod_floor(&m).is_zero());
            }
            Err(_) => prop_assert!(a.gcd(&m) != int(1)),
        }
    }
}

#[test]
fn mobius_matches_divisor_sums() {
    // Σ_{d|n} μ(d) = [n = 1]
    let limit = 10_000usize;
    let mu: Vec<i64> = (0..=limit)
        .map(|k| if k == 0 { 0 } else { arith::mobius(&int(k as i64)).unwrap() as i64 })
        .collect();
    let mut sums = vec![0i64; limit + 1];
    for d in 1..=limit {
        for k in (d..=limit).step_by(d) {
            sums[k] += mu[d];
        }
    }
    for n in 1..=limit {
        assert_eq!(sums[n], i64::from(n == 1), "n = {n}");
    }
}
