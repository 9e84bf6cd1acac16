//! Fixed-point real arithmetic on big integers.
//!
//! A [`Fixed`] holds `m · 2^(−prec)`. Only the few operations the period
//! oracle and root isolation need are provided; everything stays exact up to
//! a truncation of one unit in the last place per multiplication.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::int;

/// Extra working bits carried beyond the requested precision.
pub const GUARD_BITS: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixed {
    m: BigInt,
    prec: u32,
}

impl Fixed {
    pub fn from_raw(m: BigInt, prec: u32) -> Self {
        Fixed { m, prec }
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_raw(BigInt::zero(), prec)
    }

    pub fn from_int(v: &BigInt, prec: u32) -> Self {
        Self::from_raw(v << prec, prec)
    }

    pub fn from_rational(v: &BigRational, prec: u32) -> Self {
        Self::from_raw((v.numer() << prec).div_floor(v.denom()), prec)
    }

    pub fn raw(&self) -> &BigInt {
        &self.m
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn abs(&self) -> Self {
        Self::from_raw(self.m.abs(), self.prec)
    }

    pub fn div(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        Self::from_raw((&self.m << self.prec).div_floor(&o.m), self.prec)
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        Self::from_raw(self.m.div_floor(k), self.prec)
    }

    /// Nearest integer and the distance to it.
    pub fn round(&self) -> (BigInt, Fixed) {
        let half = BigInt::one() << (self.prec - 1);
        let r = (&self.m + half) >> self.prec;
        let dist = (&self.m - (&r << self.prec)).abs();
        (r, Self::from_raw(dist, self.prec))
    }

    /// `log₂ |self|`, or `-∞` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.m.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.m.bits() as i64;
        let shift = (bits - 60).max(0);
        let top = (self.m.abs() >> shift as usize).to_f64().unwrap_or(f64::MAX);
        top.log2() + shift as f64 - self.prec as f64
    }

    pub fn to_f64(&self) -> f64 {
        if self.m.is_zero() {
            return 0.0;
        }
        let sign = if self.m.is_negative() { -1.0 } else { 1.0 };
        sign * self.log2_abs().exp2()
    }

    /// `|self| < 2^(−bits)`.
    pub fn below_pow2(&self, bits: u32) -> bool {
        bits <= self.prec && self.m.abs() < (BigInt::one() << (self.prec - bits))
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Fixed {
    fn cmp(&self, o: &Self) -> Ordering {
        debug_assert_eq!(self.prec, o.prec);
        self.m.cmp(&o.m)
    }
}

impl Add for &Fixed {
    type Output = Fixed;
    fn add(self, o: &Fixed) -> Fixed {
        debug_assert_eq!(self.prec, o.prec);
        Fixed::from_raw(&self.m + &o.m, self.prec)
    }
}

impl Sub for &Fixed {
    type Output = Fixed;
    fn sub(self, o: &Fixed) -> Fixed {
        debug_assert_eq!(self.prec, o.prec);
        Fixed::from_raw(&self.m - &o.m, self.prec)
    }
}

impl Mul for &Fixed {
    type Output = Fixed;
    fn mul(self, o: &Fixed) -> Fixed {
        debug_assert_eq!(self.prec, o.prec);
        Fixed::from_raw((&self.m * &o.m) >> self.prec, self.prec)
    }
}

impl Neg for &Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed::from_raw(-&self.m, self.prec)
    }
}

/// `atan(1/k)` by its alternating series.
fn atan_inv(k: u32, prec: u32) -> BigInt {
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut power = (BigInt::one() << prec) / &k;
    let mut sum = BigInt::zero();
    let mut i = 0u32;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * i + 1);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        i += 1;
    }
    sum
}

/// `π` by Machin's formula.
pub fn pi(prec: u32) -> Fixed {
    let wp = prec + 16;
    let v = 16 * atan_inv(5, wp) - 4 * atan_inv(239, wp);
    Fixed::from_raw(v >> 16, prec)
}

/// `(cos x, sin x)` by Taylor series; intended for `|x| ≤ 4`.
pub fn cos_sin(x: &Fixed) -> (Fixed, Fixed) {
    let prec = x.prec;
    let wp = prec + 16;
    let xw = Fixed::from_raw(&x.m << 16, wp);
    let x2 = &xw * &xw;
    let mut cos = Fixed::from_int(&int(1), wp);
    let mut sin = xw.clone();
    let mut ct = cos.clone();
    let mut st = xw.clone();
    let mut k = 1u64;
    loop {
        ct = (&ct * &x2).div_int(&BigInt::from((2 * k - 1) * (2 * k)));
        st = (&st * &x2).div_int(&BigInt::from((2 * k) * (2 * k + 1)));
        if ct.m.is_zero() && st.m.is_zero() {
            break;
        }
        if k % 2 == 1 {
            cos = &cos - &ct;
            sin = &sin - &st;
        } else {
            cos = &cos + &ct;
            sin = &sin + &st;
        }
        k += 1;
    }
    (
        Fixed::from_raw(cos.m >> 16, prec),
        Fixed::from_raw(sin.m >> 16, prec),
    )
}

/// `2^(3p)·f_n(k/2^p)`, whose sign is the sign of `f_n` at the dyadic point.
fn scaled_value(n: &BigInt, k: &BigInt, p: u32) -> BigInt {
    let s = BigInt::one() << p;
    let k2 = k * k;
    k * &k2 - n * &k2 * &s - (n + 3) * k * &s * &s - &s * &s * &s
}

/// Bisect the unique root of `f_n` in `(lo, hi)`, given the sign at `lo`.
fn bisect(n: &BigInt, lo: BigInt, hi: BigInt, p: u32, lo_sign_positive: bool) -> BigInt {
    let (mut lo, mut hi) = (lo, hi);
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        let v = scaled_value(n, &mid, p);
        if v.is_zero() {
            return mid;
        }
        if v.is_positive() == lo_sign_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The three real roots of `f_n` to within `2^(−precision_bits)`, in the
/// cyclic order `r, −1/(1+r), …` starting from the positive root.
///
/// Sign changes at `−B, −1, 0, B` isolate one root per interval, so the
/// result is certified without floating point.
pub fn numeric_roots(n: &BigInt, precision_bits: u32) -> Result<[Fixed; 3]> {
    if precision_bits < 64 {
        return Err(Error::PrecisionInsufficient(precision_bits));
    }
    let p = precision_bits;
    let bound: BigInt = 1 + n.abs().max((n + 3i32).abs()).max(int(1));
    let one = BigInt::one() << p;
    let b = &bound << p;
    // f(−B) < 0, f(−1) = 1, f(0) = −1, f(B) > 0
    if !scaled_value(n, &b, p).is_positive() || !scaled_value(n, &-&b, p).is_negative() {
        return Err(Error::NoConvergence(format!("bad root bound for n = {n}")));
    }
    let pos = bisect(n, BigInt::zero(), b.clone(), p, false);
    let mid = bisect(n, -&one, BigInt::zero(), p, true);
    let neg = bisect(n, -b, -one, p, false);
    let roots = [pos, mid, neg].map(|m| Fixed::from_raw(m, p));

    let tol = p.saturating_sub(8 + bound.bits() as u32 * 2);
    let unit = Fixed::from_int(&int(1), p);
    for i in 0..3 {
        let next = (-&unit).div(&(&unit + &roots[i]));
        if !(&next - &roots[(i + 1) % 3]).below_pow2(tol) {
            return Err(Error::NoConvergence(format!(
                "roots of f_{n} are not in σ-cycle order"
            )));
        }
    }
    Ok(roots)
}
