//! The integral basis `{1, φ, ψ}` with `φ = (ρ − t)/c` and
//! `ψ = (ρ² + (t−n)ρ + t² − nt − n − 3)/(c²e)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith;
use crate::cubic_field::{trace_form_disc, FieldElement};
use crate::error::{Error, Result};
use crate::invariants::{self, Ramification};
use crate::{int, rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralBasis {
    pub n: BigInt,
    pub shift: BigInt,
    /// `3⁻¹ mod e²c³`, present only when `3 ∤ n`.
    pub u: Option<BigInt>,
    pub phi: FieldElement,
    pub psi: FieldElement,
}

impl IntegralBasis {
    pub fn elements(&self) -> [FieldElement; 3] {
        [FieldElement::one(&self.n), self.phi.clone(), self.psi.clone()]
    }
}

/// The three congruences that make `t` a valid shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceReport {
    /// `f''(t)/2 = 3t − n ≡ 0 (mod c)`.
    pub second_derivative: bool,
    /// `f'(t) ≡ 0 (mod c²e)`.
    pub derivative: bool,
    /// `f(t) ≡ 0 (mod c³e²)`.
    pub value: bool,
}

impl CongruenceReport {
    pub fn all(&self) -> bool {
        self.second_derivative && self.derivative && self.value
    }
}

/// The shift `t` and, when `3 ∤ n`, the inverse `u` of 3 modulo `e²c³`.
pub fn shift(n: &BigInt) -> Result<(BigInt, Option<BigInt>)> {
    match invariants::ramification(n) {
        Ramification::Wild => Err(Error::Wild(n.clone())),
        Ramification::Tame3 => Ok((n / 3, None)),
        Ramification::Unramified3 => {
            let dd = invariants::decompose(n)?;
            let modulus = &dd.e * &dd.e * &dd.c * &dd.c * &dd.c;
            let u = arith::mod_inverse(&int(3), &modulus)?;
            Ok((&u * n, Some(u)))
        }
    }
}

pub fn check_congruences(n: &BigInt, t: &BigInt) -> Result<CongruenceReport> {
    let dd = invariants::decompose(n)?;
    let (c, e) = (&dd.c, &dd.e);
    let f2: BigInt = 3 * t - n;
    let f1: BigInt = 3 * t * t - 2 * n * t - (n + 3);
    let f0: BigInt = t * t * t - n * t * t - (n + 3) * t - 1;
    Ok(CongruenceReport {
        second_derivative: f2.is_multiple_of(c),
        derivative: f1.is_multiple_of(&(c * c * e)),
        value: f0.is_multiple_of(&(c * c * c * e * e)),
    })
}

/// Build `{1, φ, ψ}` and check it against the trace-form discriminant.
pub fn build(n: &BigInt) -> Result<IntegralBasis> {
    let (t, u) = shift(n)?;
    let report = check_congruences(n, &t)?;
    if !report.all() {
        return Err(Error::Internal(format!(
            "shift t = {t} fails the congruences for n = {n}: {report:?}"
        )));
    }
    let inv = invariants::conductor(n)?;
    let dd = &inv.decomposition;
    let c = rat(&dd.c);
    let c2e = rat(&(&dd.c * &dd.c * &dd.e));
    let phi = FieldElement::new(
        n,
        [rat(&-&t) / &c, BigRational::from_integer(int(1)) / &c, BigRational::zero()],
    );
    let psi = FieldElement::new(
        n,
        [
            rat(&(&t * &t - n * &t - n - 3)) / &c2e,
            rat(&(&t - n)) / &c2e,
            BigRational::from_integer(int(1)) / &c2e,
        ],
    );
    let basis = IntegralBasis {
        n: n.clone(),
        shift: t,
        u,
        phi,
        psi,
    };
    let [one, phi, psi] = basis.elements();
    let disc = trace_form_disc(&one, &phi, &psi)?;
    if disc != rat(&inv.discriminant) {
        return Err(Error::Internal(format!(
            "d(1, φ, ψ) = {disc} but D = {} for n = {n}",
            inv.discriminant
        )));
    }
    if !phi.min_poly().is_integral() || !psi.min_poly().is_integral() {
        return Err(Error::Internal(format!("non-integral basis element for n = {n}")));
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifts() {
        assert_eq!(shift(&int(12)).unwrap(), (int(4), None));
        assert_eq!(shift(&int(286)).unwrap(), (int(229 * 286), Some(int(229))));
        assert_eq!(shift(&int(1)).unwrap(), (int(0), Some(int(0))));
        assert!(matches!(shift(&int(3)), Err(Error::Wild(_))));
    }

    #[test]
    fn congruences() {
        assert!(check_congruences(&int(12), &int(4)).unwrap().all());
        assert!(check_congruences(&int(286), &int(229 * 286)).unwrap().all());
        assert!(check_congruences(&int(1), &int(0)).unwrap().all());
        assert!(!check_congruences(&int(286), &int(1)).unwrap().all());
    }

    #[test]
    fn basis_at_twelve() {
        let b = build(&int(12)).unwrap();
        let n = int(12);
        assert_eq!(
            b.phi,
            FieldElement::new(
                &n,
                [rat(&int(-4)) / rat(&int(3)), BigRational::new(int(1), int(3)), BigRational::zero()]
            )
        );
        assert_eq!(b.psi.to_string(), "(1/9)(ρ^2 - 8ρ - 47)");
    }

    #[test]
    fn basis_at_one_is_power_basis() {
        let b = build(&int(1)).unwrap();
        assert_eq!(b.phi, FieldElement::rho(&int(1)));
        assert_eq!(b.psi.to_string(), "ρ^2 - ρ - 4");
    }

    #[test]
    fn basis_at_286() {
        let b = build(&int(286)).unwrap();
        assert!(b.psi.to_string().starts_with("(1/49)("));
    }
}
