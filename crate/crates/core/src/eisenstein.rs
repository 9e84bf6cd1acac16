//! Arithmetic in the Eisenstein integers `Z[ζ]`, `ζ² + ζ + 1 = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::int;
use crate::invariants;

/// `x + yζ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub x: BigInt,
    pub y: BigInt,
}

impl EisensteinInt {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        EisensteinInt {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `1 - ζ`, the prime above 3.
    pub fn one_minus_zeta() -> Self {
        Self::new(1, -1)
    }

    /// Image under `ζ ↦ ζ²`.
    pub fn conj(&self) -> Self {
        EisensteinInt {
            x: &self.x - &self.y,
            y: -&self.y,
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.x * &self.x - &self.x * &self.y + &self.y * &self.y
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division with nearest-integer rounding of the exact quotient;
    /// the remainder has norm at most 3/4 of `norm(divisor)`.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let num = self * &divisor.conj();
        let den = divisor.norm();
        let round = |v: &BigInt| (2i32 * v + &den).div_floor(&(2 * &den));
        let q = EisensteinInt {
            x: round(&num.x),
            y: round(&num.y),
        };
        let r = self - &(&q * divisor);
        (q, r)
    }

    /// `self / divisor` if it lies in `Z[ζ]`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let num = self * &divisor.conj();
        let den = divisor.norm();
        if num.x.is_multiple_of(&den) && num.y.is_multiple_of(&den) {
            Some(EisensteinInt {
                x: num.x / &den,
                y: num.y / &den,
            })
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.exact_div(self).is_some()
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ζ", self.x, self.y)
    }
}

impl<'a> Add<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, o: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            x: &self.x + &o.x,
            y: &self.y + &o.y,
        }
    }
}

impl<'a> Sub<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, o: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            x: &self.x - &o.x,
            y: &self.y - &o.y,
        }
    }
}

impl<'a> Mul<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, o: &EisensteinInt) -> EisensteinInt {
        let bd = &self.y * &o.y;
        EisensteinInt {
            x: &self.x * &o.x - &bd,
            y: &self.x * &o.y + &self.y * &o.x - bd,
        }
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

/// A greatest common divisor, unique up to the six units.
pub fn gcd(a: &EisensteinInt, b: &EisensteinInt) -> Result<EisensteinInt> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    Ok(a)
}

/// `A_n = n + 3(1 + ζ)`, of norm `Δ_n`.
pub fn a_n(n: &BigInt) -> EisensteinInt {
    EisensteinInt {
        x: n + 3,
        y: int(3),
    }
}

/// Coefficients `(a₀, a₁)` of `a₀ + a₁ζ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    pub a0: BigInt,
    pub a1: BigInt,
}

impl Pair {
    pub fn new(a0: impl Into<BigInt>, a1: impl Into<BigInt>) -> Self {
        Pair {
            a0: a0.into(),
            a1: a1.into(),
        }
    }

    pub fn to_eisenstein(&self) -> EisensteinInt {
        EisensteinInt::new(self.a0.clone(), self.a1.clone())
    }

    pub fn norm(&self) -> BigInt {
        self.to_eisenstein().norm()
    }

    fn rank_key(&self) -> (BigInt, BigInt, bool, bool) {
        (
            self.a1.abs(),
            self.a0.abs(),
            !self.a0.is_positive(),
            !self.a1.is_positive(),
        )
    }
}

impl From<EisensteinInt> for Pair {
    fn from(z: EisensteinInt) -> Self {
        Pair { a0: z.x, a1: z.y }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a0, self.a1)
    }
}

/// The six unit associates of `a₀ + a₁ζ`, in the order
/// `{±a₀, ±a₁}, {±a₁, ∓(a₀−a₁)}, {±(a₀−a₁), ±a₀}`.
///
/// Entries 0, 3, 5 are `p, ζp, ζ²p`; entries 1, 2, 4 their negatives.
pub fn unit_orbit(p: &Pair) -> [Pair; 6] {
    let (a0, a1) = (&p.a0, &p.a1);
    let diff = a0 - a1;
    [
        Pair::new(a0.clone(), a1.clone()),
        Pair::new(-a0, -a1),
        Pair::new(a1.clone(), -&diff),
        Pair::new(-a1, diff.clone()),
        Pair::new(diff.clone(), a0.clone()),
        Pair::new(-&diff, -a0),
    ]
}

/// The representative of a unit orbit used throughout: smallest `|a₁|`, then
/// smallest `|a₀|`, then `a₀ > 0` (or `a₁ > 0` when `a₀ = 0`).
pub fn canonical(p: &Pair) -> Pair {
    unit_orbit(p)
        .into_iter()
        .min_by_key(Pair::rank_key)
        .expect("orbit is non-empty")
}

/// The pairs `(a₀, a₁)` of norm `s` whose element divides `A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSet {
    pub canonical: Pair,
    pub all_six: [Pair; 6],
}

/// Build `(1−ζ)^j ∏ π_i^{v_i}` with `π_i = gcd(p_i, A_n)` and return its unit
/// orbit. `s` must divide `Δ_n`, be positive and have 3-adic valuation ≤ 1.
pub fn find_pair(n: &BigInt, s: &BigInt) -> Result<PairSet> {
    let invalid = |reason: &str| Error::InvalidNorm {
        n: n.clone(),
        s: s.clone(),
        reason: reason.to_string(),
    };
    if !s.is_positive() {
        return Err(invalid("s must be positive"));
    }
    if !invariants::delta(n).is_multiple_of(s) {
        return Err(invalid("s does not divide Δ_n"));
    }
    let fac = arith::factor(s)?;
    let a = a_n(n);
    let mut prod = EisensteinInt::one();
    for (p, v) in fac.factors() {
        if *p == int(3) {
            if *v > 1 {
                return Err(invalid("9 divides s"));
            }
            prod = &prod * &EisensteinInt::one_minus_zeta();
            continue;
        }
        if p.mod_floor(&int(3)) != int(1) {
            return Err(invalid("s has a prime factor ≡ 2 (mod 3)"));
        }
        let pi = gcd(&EisensteinInt::new(p.clone(), 0), &a)?;
        if pi.norm() != *p {
            return Err(Error::Internal(format!(
                "gcd({p}, A_{n}) has norm {} instead of {p}",
                pi.norm()
            )));
        }
        prod = &prod * &pi.pow(*v);
    }
    if !prod.divides(&a) {
        return Err(Error::PairDoesNotDivide {
            n: n.clone(),
            x: prod.x,
            y: prod.y,
        });
    }
    debug_assert_eq!(prod.norm(), *s);
    let canonical = canonical(&Pair::from(prod));
    let all_six = unit_orbit(&canonical);
    Ok(PairSet { canonical, all_six })
}
