//! Integer utilities on arbitrary-precision integers: factorization,
//! cube-free / square-free splitting, Möbius, the Legendre symbol mod 3 and
//! modular inverses.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u32 = 1_000_000;

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: BigInt,
    factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, k)| *k)
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|(_, k)| *k == 1)
    }

    /// Product of `p^k` over all factors.
    pub fn reassemble(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (p, k)| acc * p.pow(*k))
    }

    /// `(b, c)` with `value = b·c³` and `b` cube-free.
    pub fn cube_free_split(&self) -> (BigInt, BigInt) {
        let mut b = BigInt::one();
        let mut c = BigInt::one();
        for (p, k) in &self.factors {
            b *= p.pow(k % 3);
            c *= p.pow(k / 3);
        }
        (b, c)
    }

    fn from_parts(value: BigInt, mut factors: Vec<(BigInt, u32)>) -> Self {
        factors.sort();
        let mut merged: Vec<(BigInt, u32)> = Vec::with_capacity(factors.len());
        for (p, k) in factors {
            match merged.last_mut() {
                Some((q, j)) if *q == p => *j += k,
                _ => merged.push((p, k)),
            }
        }
        Factorization {
            value,
            factors: merged,
        }
    }
}

impl fmt::Display for Factorization {
    /// `7^3*241`; `1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, k)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *k == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{k}")?;
            }
        }
        Ok(())
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; limit + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= limit {
            if sieve[i] {
                let mut j = i * i;
                while j <= limit {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..=limit).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

/// Factor `n ≥ 1`: trial division up to 10^6, then Pollard–Brent rho with a
/// fixed seed sequence, so the output is deterministic.
pub fn factor(n: &BigInt) -> Result<Factorization> {
    if n.sign() != Sign::Plus {
        return Err(Error::NotPositive(n.clone()));
    }
    let mut rest = n.magnitude().clone();
    let mut factors = Vec::new();

    if let Some(mut small) = rest.to_u64() {
        for &p in small_primes() {
            let p = u64::from(p);
            if p * p > small {
                break;
            }
            if small % p == 0 {
                let mut k = 0;
                while small % p == 0 {
                    small /= p;
                    k += 1;
                }
                factors.push((BigInt::from(p), k));
            }
        }
        rest = BigUint::from(small);
    } else {
        for &p in small_primes() {
            let pb = BigUint::from(p);
            if &pb * &pb > rest {
                break;
            }
            if (&rest % p).is_zero() {
                let mut k = 0;
                while (&rest % p).is_zero() {
                    rest /= p;
                    k += 1;
                }
                factors.push((BigInt::from(p), k));
            }
        }
    }

    if !rest.is_one() {
        let bound = BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT);
        if rest < bound {
            factors.push((BigInt::from(rest), 1));
        } else {
            let mut big = Vec::new();
            split_large(rest, &mut big);
            factors.extend(big.into_iter().map(|p| (BigInt::from(p), 1)));
        }
    }
    Ok(Factorization::from_parts(n.clone(), factors))
}

fn split_large(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let q = &n / &d;
    split_large(d, out);
    split_large(q, out);
}

/// Miller–Rabin with the first 20 prime bases. Deterministic; proven correct
/// below 3.3·10^24 and a strong pseudoprime test beyond.
pub fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in &BASES {
        if *n == BigUint::from(p) {
            return true;
        }
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &a in &BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A non-trivial divisor of the odd composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    for c in 1u32.. {
        let c = BigUint::from(c);
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            // Batched product collapsed; replay one step at a time.
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
    }
    unreachable!("the seed sequence is unbounded")
}

/// `(b, c)` with `Δ = b·c³`, `b` cube-free and `c` maximal.
pub fn cube_free_split(delta: &BigInt) -> Result<(BigInt, BigInt)> {
    Ok(factor(delta)?.cube_free_split())
}

/// `(d, e)` with `b = d·e²`, `d, e` square-free and coprime.
pub fn square_free_split(b: &BigInt) -> Result<(BigInt, BigInt)> {
    let fac = factor(b)?;
    if fac.factors().iter().any(|(_, k)| *k >= 3) {
        return Err(Error::NotCubeFree(b.clone()));
    }
    let mut d = BigInt::one();
    let mut e = BigInt::one();
    for (p, k) in fac.factors() {
        if *k == 1 {
            d *= p;
        } else {
            e *= p;
        }
    }
    Ok((d, e))
}

pub fn mobius(n: &BigInt) -> Result<i8> {
    let fac = factor(n)?;
    Ok(mobius_of(&fac))
}

pub fn mobius_of(fac: &Factorization) -> i8 {
    if !fac.is_square_free() {
        0
    } else if fac.factors().len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Legendre symbol `(n/3)`.
pub fn legendre3(n: &BigInt) -> i8 {
    match n.mod_floor(&BigInt::from(3)).to_u8() {
        Some(0) => 0,
        Some(1) => 1,
        _ => -1,
    }
}

/// The inverse of `a` modulo `modulus`, in `[0, modulus)`.
pub fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Result<BigInt> {
    if !modulus.is_positive() {
        return Err(Error::NotPositive(modulus.clone()));
    }
    let ext = a.mod_floor(modulus).extended_gcd(modulus);
    if !ext.gcd.is_one() {
        return Err(Error::NotInvertible {
            a: a.clone(),
            modulus: modulus.clone(),
        });
    }
    Ok(ext.x.mod_floor(modulus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn factors_of(n: i64) -> Vec<(i64, u32)> {
        factor(&int(n))
            .unwrap()
            .factors()
            .iter()
            .map(|(p, k)| (p.to_i64().unwrap(), *k))
            .collect()
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factors_of(1), vec![]);
        assert_eq!(factors_of(82663), vec![(7, 3), (241, 1)]);
        assert_eq!(factors_of(55939), vec![(13, 2), (331, 1)]);
        assert!(factor(&int(0)).is_err());
        assert!(factor(&int(-5)).is_err());
    }

    #[test]
    fn factor_beyond_trial_division() {
        // Two primes above the trial-division bound force the rho path.
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(1_000_033u64);
        let r = BigInt::from(2_147_483_647u64);
        let n = &p * &q * &r * &r;
        let fac = factor(&n).unwrap();
        assert_eq!(fac.reassemble(), n);
        assert_eq!(
            fac.factors(),
            &[(p, 1), (q, 1), (r, 2)][..],
            "factors sorted and merged"
        );
        let big = "340282366920938463463374607431768211507".parse::<BigInt>().unwrap();
        let fac = factor(&big).unwrap();
        assert_eq!(fac.factors().len(), 1, "2^128 + 51 is prime");
    }

    #[test]
    fn display_factorization() {
        assert_eq!(factor(&int(82663)).unwrap().to_string(), "7^3*241");
        assert_eq!(factor(&int(1)).unwrap().to_string(), "1");
    }

    #[test]
    fn cube_and_square_splits() {
        assert_eq!(cube_free_split(&int(82663)).unwrap(), (int(241), int(7)));
        assert_eq!(cube_free_split(&int(189)).unwrap(), (int(7), int(3)));
        assert_eq!(cube_free_split(&int(1)).unwrap(), (int(1), int(1)));

        assert_eq!(
            square_free_split(&int(4563)),
            Err(Error::NotCubeFree(int(4563)))
        );
        assert!(square_free_split(&int(8)).is_err());
        assert_eq!(square_free_split(&int(507)).unwrap(), (int(3), int(13)));
        assert_eq!(square_free_split(&int(169)).unwrap(), (int(1), int(13)));
    }

    fn brute_mobius(n: u64) -> i8 {
        // μ via the defining recurrence Σ_{d|n} μ(d) = [n = 1].
        let mut mu = vec![0i8; n as usize + 1];
        mu[1] = 1;
        for k in 2..=n as usize {
            let s: i32 = (1..k).filter(|d| k % d == 0).map(|d| mu[d] as i32).sum();
            mu[k] = (-s) as i8;
        }
        mu[n as usize]
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(&int(1)).unwrap(), 1);
        assert_eq!(mobius(&int(241)).unwrap(), brute_mobius(241));
        assert_eq!(mobius(&int(241)).unwrap(), -1);
        assert_eq!(mobius(&int(4303)).unwrap(), 1);
        assert!(mobius(&int(0)).is_err());
    }

    #[test]
    fn mobius_matches_divisor_sum_recurrence() {
        let n_max = 10_000usize;
        let mut mu = vec![0i32; n_max + 1];
        mu[1] = 1;
        // Σ_{d|k} μ(d) = 0 for k > 1, accumulated by sieving over multiples.
        let mut acc = vec![0i32; n_max + 1];
        for k in 1..=n_max {
            if k > 1 {
                mu[k] = -acc[k];
            }
            let mut j = k;
            while j <= n_max {
                acc[j] += mu[k];
                j += k;
            }
        }
        for (k, &expected) in mu.iter().enumerate().skip(1) {
            assert_eq!(mobius(&int(k as i64)).unwrap() as i32, expected, "n = {k}");
        }
    }

    #[test]
    fn legendre_mod_three() {
        assert_eq!(legendre3(&int(1)), 1);
        assert_eq!(legendre3(&int(286)), 1);
        assert_eq!(legendre3(&int(235)), 1);
        assert_eq!(legendre3(&int(2)), -1);
        assert_eq!(legendre3(&int(-1)), -1);
        assert_eq!(legendre3(&int(-3)), 0);
    }

    #[test]
    fn modular_inverse() {
        assert_eq!(mod_inverse(&int(3), &int(1)).unwrap(), int(0));
        // brute-force scan for the inverse of 3 mod 343
        let scan = (0..343).find(|u| (3 * u) % 343 == 1).unwrap();
        assert_eq!(scan, 229);
        assert_eq!(mod_inverse(&int(3), &int(343)).unwrap(), int(229));
        assert!(matches!(
            mod_inverse(&int(3), &int(3)),
            Err(Error::NotInvertible { .. })
        ));
        assert_eq!(mod_inverse(&int(-2), &int(7)).unwrap(), int(3));
    }
}
