//! Exact arithmetic in `L_n = Q(ρ)`, `ρ³ = nρ² + (n+3)ρ + 1`.
//!
//! Elements are stored over the power basis `{1, ρ, ρ²}`. The Galois group is
//! generated by `σ: ρ ↦ ρ² − (n+1)ρ − 2`, so conjugates, traces, norms and
//! minimal polynomials are all computed without leaving `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{int, rat, render};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    n: BigInt,
    coeffs: [BigRational; 3],
}

impl FieldElement {
    pub fn new(n: &BigInt, coeffs: [BigRational; 3]) -> Self {
        FieldElement {
            n: n.clone(),
            coeffs,
        }
    }

    pub fn from_ints(n: &BigInt, c0: BigInt, c1: BigInt, c2: BigInt) -> Self {
        Self::new(n, [rat(&c0), rat(&c1), rat(&c2)])
    }

    pub fn rational(n: &BigInt, r: BigRational) -> Self {
        Self::new(n, [r, BigRational::zero(), BigRational::zero()])
    }

    pub fn zero(n: &BigInt) -> Self {
        Self::rational(n, BigRational::zero())
    }

    pub fn one(n: &BigInt) -> Self {
        Self::rational(n, BigRational::one())
    }

    /// The generator `ρ`.
    pub fn rho(n: &BigInt) -> Self {
        Self::new(
            n,
            [BigRational::zero(), BigRational::one(), BigRational::zero()],
        )
    }

    /// `r₁ρ + r₂ρ' + r₃`, rewritten over `{1, ρ, ρ²}` with
    /// `ρ' = ρ² − (n+1)ρ − 2`.
    pub fn shanks_combination(
        n: &BigInt,
        r1: &BigRational,
        r2: &BigRational,
        r3: &BigRational,
    ) -> Self {
        let two = rat(&int(2));
        let np1 = rat(&(n + 1));
        Self::new(n, [r3 - &two * r2, r1 - &np1 * r2, r2.clone()])
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// Coordinates `(r₀, r₁, r₂)` of `r₀ + r₁ρ + r₂ρ²`.
    pub fn coeffs(&self) -> &[BigRational; 3] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1].is_zero() && self.coeffs[2].is_zero()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.n, self.coeffs.clone().map(|c| c * k))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self * other)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.n.clone(), other.n.clone()))
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let a = &self.coeffs;
        let b = &other.coeffs;
        let mut c: [BigRational; 5] = Default::default();
        for i in 0..3 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                c[i + j] += &a[i] * &b[j];
            }
        }
        let n = rat(&self.n);
        let one = BigRational::one();
        let three = rat(&int(3));
        // ρ³ = nρ² + (n+3)ρ + 1
        // ρ⁴ = (n²+n+3)ρ² + (n²+3n+1)ρ + n
        let r3 = [one.clone(), &n + &three, n.clone()];
        let r4 = [
            n.clone(),
            &n * &n + &three * &n + &one,
            &n * &n + &n + &three,
        ];
        let [c0, c1, c2, c3, c4] = c;
        let out = [
            c0 + &c3 * &r3[0] + &c4 * &r4[0],
            c1 + &c3 * &r3[1] + &c4 * &r4[1],
            c2 + &c3 * &r3[2] + &c4 * &r4[2],
        ];
        Self::new(&self.n, out)
    }

    /// `σ(self)`, substituting `ρ ↦ ρ² − (n+1)ρ − 2`.
    pub fn apply_sigma(&self) -> Self {
        let n = &self.n;
        let s = Self::from_ints(n, int(-2), -(n + 1i32), int(1));
        let s2 = &s * &s;
        let [a0, a1, a2] = &self.coeffs;
        &(&Self::rational(n, a0.clone()) + &s.scale(a1)) + &s2.scale(a2)
    }

    /// `[self, σ(self), σ²(self)]`.
    pub fn conjugates(&self) -> [Self; 3] {
        let s1 = self.apply_sigma();
        let s2 = s1.apply_sigma();
        [self.clone(), s1, s2]
    }

    pub fn trace(&self) -> BigRational {
        let [a, b, c] = self.conjugates();
        let t = &(&a + &b) + &c;
        debug_assert!(t.is_rational());
        t.coeffs[0].clone()
    }

    pub fn norm(&self) -> BigRational {
        let [a, b, c] = self.conjugates();
        let p = &(&a * &b) * &c;
        debug_assert!(p.is_rational());
        p.coeffs[0].clone()
    }

    /// Characteristic polynomial `X³ − e₁X² + e₂X − e₃` over the conjugates;
    /// the minimal polynomial whenever `self ∉ Q`.
    pub fn min_poly(&self) -> MonicCubic {
        let [a, b, c] = self.conjugates();
        let e1 = &(&a + &b) + &c;
        let e2 = &(&(&a * &b) + &(&b * &c)) + &(&c * &a);
        let e3 = &(&a * &b) * &c;
        debug_assert!(e1.is_rational() && e2.is_rational() && e3.is_rational());
        MonicCubic::from_symmetric(
            e1.coeffs[0].clone(),
            e2.coeffs[0].clone(),
            e3.coeffs[0].clone(),
        )
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, o: &FieldElement) -> FieldElement {
        assert_eq!(self.n, o.n, "elements of different fields");
        let [a0, a1, a2] = &self.coeffs;
        let [b0, b1, b2] = &o.coeffs;
        FieldElement::new(&self.n, [a0 + b0, a1 + b1, a2 + b2])
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, o: &FieldElement) -> FieldElement {
        self + &(-o)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, o: &FieldElement) -> FieldElement {
        assert_eq!(self.n, o.n, "elements of different fields");
        self.mul_unchecked(o)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(&self.n, self.coeffs.clone().map(|c| -c))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::element(self))
    }
}

/// `X³ + p₂X² + p₁X + p₀` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonicCubic {
    pub p2: BigRational,
    pub p1: BigRational,
    pub p0: BigRational,
}

impl MonicCubic {
    pub fn new(p2: BigRational, p1: BigRational, p0: BigRational) -> Self {
        MonicCubic { p2, p1, p0 }
    }

    pub fn from_ints(p2: i64, p1: i64, p0: i64) -> Self {
        Self::new(rat(&int(p2)), rat(&int(p1)), rat(&int(p0)))
    }

    /// The polynomial with roots of elementary symmetric functions `e₁, e₂, e₃`.
    pub fn from_symmetric(e1: BigRational, e2: BigRational, e3: BigRational) -> Self {
        Self::new(-e1, e2, -e3)
    }

    /// Shanks' polynomial `X³ − nX² − (n+3)X − 1`.
    pub fn shanks(n: &BigInt) -> Self {
        Self::new(rat(&-n), rat(&-(n + 3i32)), rat(&int(-1)))
    }

    pub fn is_integral(&self) -> bool {
        self.p2.is_integer() && self.p1.is_integer() && self.p0.is_integer()
    }

    /// `−F(−X)`: the minimal polynomial of `−α` when `F` is that of `α`.
    pub fn reflect(&self) -> Self {
        Self::new(-&self.p2, self.p1.clone(), -&self.p0)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        ((x + &self.p2) * x + &self.p1) * x + &self.p0
    }

    pub fn eval_element(&self, x: &FieldElement) -> FieldElement {
        let n = x.n();
        let mut acc = &FieldElement::one(n) * x;
        acc = &acc + &FieldElement::rational(n, self.p2.clone());
        acc = &acc * x;
        acc = &acc + &FieldElement::rational(n, self.p1.clone());
        acc = &acc * x;
        &acc + &FieldElement::rational(n, self.p0.clone())
    }

    /// `[1, p₂, p₁, p₀]`.
    pub fn coefficients(&self) -> [BigRational; 4] {
        [
            BigRational::one(),
            self.p2.clone(),
            self.p1.clone(),
            self.p0.clone(),
        ]
    }
}

impl fmt::Display for MonicCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::polynomial(self))
    }
}

/// The closed forms for `e₁, e₂, e₃` of `η = r₁ρ + r₂ρ' + r₃`.
pub fn lemma42(
    r1: &BigRational,
    r2: &BigRational,
    r3: &BigRational,
    n: &BigInt,
) -> (BigRational, BigRational, BigRational) {
    let n = rat(n);
    let three = rat(&int(3));
    let two = rat(&int(2));
    let n3 = &n + &three;
    let q = r1 * r1 - r1 * r2 + r2 * r2;
    let s = r1 + r2;

    let e1 = &n * &s + &three * r3;
    let e2 = r1 * r2 * &n * &n + &two * &s * r3 * &n - &q * &n3 + &three * r3 * r3;
    let e3 = r1 * r2 * r3 * &n * &n - r1 * r1 * r2 * &n * &n3 + &s * r3 * r3 * &n
        - &q * r3 * &n3
        + r1 * r2 * (r1 - r2) * (&n * &n + &three * &n + rat(&int(6)))
        + r1 * r1 * r1
        + r2 * r2 * r2
        + r3 * r3 * r3
        - &three * r1 * r1 * r2;
    (e1, e2, e3)
}

/// `det[Tr(bᵢ·bⱼ)]`, which equals the discriminant `d(b₁, b₂, b₃)`.
pub fn trace_form_disc(b1: &FieldElement, b2: &FieldElement, b3: &FieldElement) -> Result<BigRational> {
    b1.same_field(b2)?;
    b1.same_field(b3)?;
    let b = [b1, b2, b3];
    let mut m: [[BigRational; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in i..3 {
            let t = (b[i] * b[j]).trace();
            m[j][i] = t.clone();
            m[i][j] = t;
        }
    }
    Ok(det3(&m))
}

fn det3(m: &[[BigRational; 3]; 3]) -> BigRational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::delta;

    fn r(v: i64) -> BigRational {
        rat(&int(v))
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(int(a), int(b))
    }

    #[test]
    fn product_of_conjugates_is_one() {
        for n in [-7, 0, 2, 286] {
            let n = int(n);
            let [a, b, c] = FieldElement::rho(&n).conjugates();
            assert_eq!(&(&a * &b) * &c, FieldElement::one(&n));
        }
    }

    #[test]
    fn multiplication_reduces() {
        let n = int(2);
        let rho = FieldElement::rho(&n);
        let rho2 = &rho * &rho;
        assert_eq!(&rho2 * &rho, FieldElement::from_ints(&n, int(1), int(5), int(2)));
        let a = FieldElement::new(&n, [q(1, 3), r(-2), q(5, 7)]);
        assert_eq!(&FieldElement::one(&n) * &a, a);
        assert!(a.try_mul(&FieldElement::one(&int(3))).is_err());
    }

    #[test]
    fn sigma_action() {
        let n = int(286);
        let five = FieldElement::rational(&n, r(5));
        assert_eq!(five.apply_sigma(), five);
        let rho = FieldElement::rho(&n);
        assert_eq!(
            rho.apply_sigma(),
            FieldElement::from_ints(&n, int(-2), int(-287), int(1))
        );
        assert_eq!(
            rho.apply_sigma().apply_sigma(),
            FieldElement::from_ints(&n, int(288), int(286), int(-1))
        );
        assert_eq!(rho.apply_sigma().apply_sigma().apply_sigma(), rho);
    }

    #[test]
    fn trace_norm_min_poly() {
        let n = int(17);
        let rho = FieldElement::rho(&n);
        assert_eq!(rho.trace(), r(17));
        assert_eq!(rho.norm(), r(1));
        assert_eq!(rho.min_poly(), MonicCubic::shanks(&n));
        let v = r(4);
        let shifted = &FieldElement::rational(&n, v.clone()) + &rho;
        assert_eq!(shifted.trace(), r(3) * v + r(17));
    }

    #[test]
    fn lemma42_trivial_case() {
        let n = int(9);
        let (e1, e2, e3) = lemma42(&r(1), &r(0), &r(0), &n);
        assert_eq!((e1, e2, e3), (r(9), r(-12), r(1)));
    }

    #[test]
    fn lemma42_matches_conjugates_at_twelve() {
        let n = int(12);
        let (r1, r2, r3) = (r(1), r(-1), r(3));
        let eta = FieldElement::shanks_combination(&n, &r1, &r2, &r3);
        let (e1, e2, e3) = lemma42(&r1, &r2, &r3, &n);
        assert_eq!(eta.min_poly(), MonicCubic::from_symmetric(e1, e2, e3));
    }

    #[test]
    fn lemma42_on_a_generator_of_286() {
        // (2ρ + 3ρ' − 493)/49 has minimal polynomial X³ + X² − 80X + 125
        let n = int(286);
        let (e1, e2, e3) = lemma42(&q(2, 49), &q(3, 49), &q(-493, 49), &n);
        assert_eq!(
            MonicCubic::from_symmetric(e1, e2, e3),
            MonicCubic::from_ints(1, -80, 125)
        );
    }

    #[test]
    fn trace_form_discriminants() {
        for n in [-4, 1, 2, 286] {
            let n = int(n);
            let one = FieldElement::one(&n);
            let rho = FieldElement::rho(&n);
            let rho2 = &rho * &rho;
            let d = delta(&n);
            assert_eq!(trace_form_disc(&one, &rho, &rho2).unwrap(), rat(&(&d * &d)));
            let [a, b, c] = rho.conjugates();
            assert_eq!(
                trace_form_disc(&a, &b, &c).unwrap(),
                rat(&(&n * &n * &d * &d))
            );
            assert!(trace_form_disc(&one, &one, &rho).unwrap().is_zero());
        }
    }

    #[test]
    fn min_poly_annihilates() {
        let n = int(-31);
        let a = FieldElement::new(&n, [q(2, 5), r(-3), q(1, 4)]);
        assert_eq!(a.min_poly().eval_element(&a), FieldElement::zero(&n));
    }
}
