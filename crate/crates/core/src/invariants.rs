//! Δ_n, its canonical decomposition, conductor, discriminant and tameness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, Factorization};
use crate::error::{Error, Result};
use crate::int;

/// `Δ_n = n² + 3n + 9 = b·c³ = d·e²·c³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaDecomposition {
    pub n: BigInt,
    pub delta: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub e: BigInt,
    pub factorization: Factorization,
}

impl DeltaDecomposition {
    /// `e·c`, the norm of the Eisenstein pairs.
    pub fn ec(&self) -> BigInt {
        &self.e * &self.c
    }

    /// `e·c²`, the common denominator of the generators.
    pub fn ec2(&self) -> BigInt {
        &self.e * &self.c * &self.c
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldInvariants {
    pub decomposition: DeltaDecomposition,
    /// 1 when tame, 9 otherwise.
    pub gamma: BigInt,
    pub conductor: BigInt,
    pub conductor_factorization: Factorization,
    pub discriminant: BigInt,
    pub tame: bool,
    /// Number of distinct primes dividing the conductor.
    pub prime_count: usize,
}

/// Which branch of the tame case `n` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ramification {
    /// `3 ∤ n`.
    Unramified3,
    /// `n ≡ 12 (mod 27)`.
    Tame3,
    Wild,
}

pub fn ramification(n: &BigInt) -> Ramification {
    if !n.is_multiple_of(&int(3)) {
        Ramification::Unramified3
    } else if n.mod_floor(&int(27)) == int(12) {
        Ramification::Tame3
    } else {
        Ramification::Wild
    }
}

pub fn delta(n: &BigInt) -> BigInt {
    n * n + 3 * n + 9
}

pub fn decompose(n: &BigInt) -> Result<DeltaDecomposition> {
    let delta = delta(n);
    let factorization = arith::factor(&delta)?;
    let (b, c) = factorization.cube_free_split();
    let mut d = BigInt::one();
    let mut e = BigInt::one();
    for (p, k) in factorization.factors() {
        let r = p.mod_floor(&int(3));
        if !(r.is_zero() || r.is_one()) {
            return Err(Error::Internal(format!(
                "prime {p} ≡ 2 (mod 3) divides Δ_{n} = {delta}"
            )));
        }
        match k % 3 {
            1 => d *= p,
            2 => e *= p,
            _ => {}
        }
    }
    debug_assert_eq!(&d * &e * &e, b);
    Ok(DeltaDecomposition {
        n: n.clone(),
        delta,
        b,
        c,
        d,
        e,
        factorization,
    })
}

/// Conductor, discriminant and tameness of `L_n`.
pub fn conductor(n: &BigInt) -> Result<FieldInvariants> {
    let decomposition = decompose(n)?;
    let tame = ramification(n) != Ramification::Wild;
    let gamma = if tame { int(1) } else { int(9) };
    let mut conductor = gamma.clone();
    for (p, k) in decomposition.factorization.factors() {
        if k % 3 != 0 && *p != int(3) {
            conductor *= p;
        }
    }
    let conductor_factorization = arith::factor(&conductor)?;
    let prime_count = conductor_factorization.factors().len();
    let discriminant = &conductor * &conductor;
    Ok(FieldInvariants {
        decomposition,
        gamma,
        conductor,
        conductor_factorization,
        discriminant,
        tame,
        prime_count,
    })
}

/// Whether `L_n` has a normal integral basis, i.e. `L_n/Q` is tame.
pub fn has_nib(n: &BigInt) -> bool {
    ramification(n) != Ramification::Wild
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_values() {
        assert_eq!(delta(&int(0)), int(9));
        assert_eq!(delta(&int(286)), int(82663));
        assert_eq!(delta(&int(66)), int(4563));
    }

    #[test]
    fn decompose_examples() {
        let dd = decompose(&int(286)).unwrap();
        assert_eq!((dd.d, dd.e, dd.c), (int(241), int(1), int(7)));
        let dd = decompose(&int(66)).unwrap();
        assert_eq!((dd.d, dd.e, dd.c), (int(1), int(13), int(3)));
        let dd = decompose(&int(5)).unwrap();
        assert_eq!(dd.delta, int(49));
        assert_eq!((dd.d, dd.e, dd.c), (int(1), int(7), int(1)));
    }

    #[test]
    fn conductor_examples() {
        let inv = conductor(&int(286)).unwrap();
        assert_eq!(inv.conductor, int(241));
        assert_eq!(inv.discriminant, int(241 * 241));
        let inv = conductor(&int(66)).unwrap();
        assert_eq!(inv.conductor, int(13));
        assert_eq!(inv.discriminant, int(169));
        let inv = conductor(&int(235)).unwrap();
        assert_eq!(inv.conductor, int(4303));
        assert_eq!(inv.prime_count, 2);
    }

    #[test]
    fn wild_conductor_carries_nine() {
        let inv = conductor(&int(3)).unwrap();
        assert!(!inv.tame);
        assert_eq!(inv.gamma, int(9));
        // Δ_3 = 27, b = 1
        assert_eq!(inv.conductor, int(9));
        assert!(!inv.conductor_factorization.is_square_free());
    }

    #[test]
    fn nib_existence() {
        assert!(has_nib(&int(286)));
        assert!(!has_nib(&int(3)));
        assert!(has_nib(&int(12)));
        assert!(has_nib(&int(-15)));
        assert!(!has_nib(&int(0)));
    }

    #[test]
    fn tame_iff_square_free_conductor() {
        for n in -300..=300 {
            let inv = conductor(&int(n)).unwrap();
            assert_eq!(
                inv.tame,
                inv.conductor_factorization.is_square_free(),
                "n = {n}"
            );
            assert_eq!(inv.discriminant, &inv.conductor * &inv.conductor);
        }
    }

    #[test]
    fn twelve_mod_27_has_exact_cube_of_three() {
        for k in -20..20 {
            let n = int(12 + 27 * k);
            let dd = decompose(&n).unwrap();
            assert_eq!(dd.factorization.exponent_of(&int(3)), 3, "n = {n}");
            assert!(dd.c.is_multiple_of(&int(3)));
            assert!(!dd.c.is_multiple_of(&int(9)));
        }
    }
}
