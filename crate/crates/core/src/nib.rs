//! Generators of normal integral bases and their minimal polynomials.
//!
//! For a tame `n` and a pair `(a₀, a₁)` with `a₀² − a₀a₁ + a₁² = ec` and
//! `a₀ + a₁ζ | A_n`, the element `α = (a₀ρ + a₁ρ' + m)/(ec²)` generates a
//! normal integral basis. The six unit associates of the pair give all of
//! them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cubic_field::{trace_form_disc, FieldElement, MonicCubic};
use crate::eisenstein::{self, Pair};
use crate::error::{Error, Result};
use crate::invariants::{self, DeltaDecomposition, Ramification};
use crate::{int, rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NibGenerator {
    pub n: BigInt,
    pub a0: BigInt,
    pub a1: BigInt,
    pub epsilon: i8,
    pub m: BigInt,
    pub element: FieldElement,
    pub min_poly: MonicCubic,
}

impl NibGenerator {
    pub fn pair(&self) -> Pair {
        Pair::new(self.a0.clone(), self.a1.clone())
    }

    /// Assemble a generator from raw data without validating it. The element
    /// and the closed-form polynomial are rebuilt from `(a₀, a₁, m, ε)`, so
    /// inconsistent data shows up in [`verify_nib`].
    pub fn from_parts(n: &BigInt, a0: BigInt, a1: BigInt, m: BigInt, epsilon: i8) -> Result<Self> {
        let dd = invariants::decompose(n)?;
        let element = element(&dd, &a0, &a1, &m);
        let min_poly = closed_form(&dd, &a0, &a1, &m, epsilon, 1);
        Ok(NibGenerator {
            n: n.clone(),
            a0,
            a1,
            epsilon,
            m,
            element,
            min_poly,
        })
    }
}

fn require_tame(n: &BigInt) -> Result<Ramification> {
    match invariants::ramification(n) {
        Ramification::Wild => Err(Error::Wild(n.clone())),
        r => Ok(r),
    }
}

fn invalid_pair(n: &BigInt, a0: &BigInt, a1: &BigInt, reason: &str) -> Error {
    Error::InvalidPair {
        n: n.clone(),
        a0: a0.clone(),
        a1: a1.clone(),
        reason: reason.to_string(),
    }
}

fn sign_mod3(v: &BigInt) -> Option<i8> {
    match v.mod_floor(&int(3)) {
        r if r.is_one() => Some(1),
        r if r == int(2) => Some(-1),
        _ => None,
    }
}

/// `ε ≡ n(a₀+a₁)` (mod 3) when `3 ∤ n`, `ε ≡ a₀` (mod 3) when `n ≡ 12 (mod 27)`.
pub fn epsilon(n: &BigInt, a0: &BigInt, a1: &BigInt) -> Result<i8> {
    let v = match require_tame(n)? {
        Ramification::Unramified3 => n * (a0 + a1),
        _ => a0.clone(),
    };
    sign_mod3(&v).ok_or_else(|| invalid_pair(n, a0, a1, "ε is undefined (residue 0 mod 3)"))
}

/// `m = (ε·e·c² − n(a₀+a₁))/3`.
pub fn m_value(n: &BigInt, a0: &BigInt, a1: &BigInt, epsilon: i8) -> Result<BigInt> {
    let dd = invariants::decompose(n)?;
    m_from(&dd, a0, a1, epsilon)
}

fn m_from(dd: &DeltaDecomposition, a0: &BigInt, a1: &BigInt, epsilon: i8) -> Result<BigInt> {
    let num = BigInt::from(epsilon) * dd.ec2() - &dd.n * (a0 + a1);
    let (q, r) = num.div_rem(&int(3));
    if !r.is_zero() {
        return Err(invalid_pair(&dd.n, a0, a1, "3 does not divide εec² − n(a₀+a₁)"));
    }
    Ok(q)
}

fn element(dd: &DeltaDecomposition, a0: &BigInt, a1: &BigInt, m: &BigInt) -> FieldElement {
    let den = rat(&dd.ec2());
    FieldElement::shanks_combination(&dd.n, &(rat(a0) / &den), &(rat(a1) / &den), &(rat(m) / &den))
}

/// The generator attached to the pair `(a₀, a₁)`, verified before return.
pub fn generator(n: &BigInt, a0: &BigInt, a1: &BigInt) -> Result<NibGenerator> {
    require_tame(n)?;
    let dd = invariants::decompose(n)?;
    let pair = Pair::new(a0.clone(), a1.clone());
    if pair.norm() != dd.ec() {
        return Err(invalid_pair(n, a0, a1, "a₀² − a₀a₁ + a₁² ≠ ec"));
    }
    if !pair.to_eisenstein().divides(&eisenstein::a_n(n)) {
        return Err(invalid_pair(n, a0, a1, "a₀ + a₁ζ does not divide A_n"));
    }
    let eps = epsilon(n, a0, a1)?;
    let m = m_from(&dd, a0, a1, eps)?;
    let g = NibGenerator {
        n: n.clone(),
        a0: a0.clone(),
        a1: a1.clone(),
        epsilon: eps,
        element: element(&dd, a0, a1, &m),
        min_poly: closed_form(&dd, a0, a1, &m, eps, 1),
        m,
    };
    let report = verify_nib(&g)?;
    if !report.all_pass() {
        return Err(Error::Internal(format!(
            "generator for ({a0}, {a1}) at n = {n} failed verification: {report:?}"
        )));
    }
    Ok(g)
}

/// All six generators, in unit-orbit order from the canonical pair.
pub fn all_generators(n: &BigInt) -> Result<Vec<NibGenerator>> {
    require_tame(n)?;
    let dd = invariants::decompose(n)?;
    let pairs = eisenstein::find_pair(n, &dd.ec())?;
    pairs
        .all_six
        .iter()
        .map(|p| generator(n, &p.a0, &p.a1))
        .collect()
}

/// `F_±`, the minimal polynomial of `±α` in closed form.
pub fn min_poly_closed(
    n: &BigInt,
    a0: &BigInt,
    a1: &BigInt,
    m: &BigInt,
    epsilon: i8,
    sign: i8,
) -> Result<MonicCubic> {
    let dd = invariants::decompose(n)?;
    Ok(closed_form(&dd, a0, a1, m, epsilon, sign))
}

fn closed_form(
    dd: &DeltaDecomposition,
    a0: &BigInt,
    a1: &BigInt,
    m: &BigInt,
    epsilon: i8,
    sign: i8,
) -> MonicCubic {
    let n = &dd.n;
    let ec = dd.ec();
    let ec2 = dd.ec2();
    let n3 = n + 3;
    let lin_num = a0 * a1 * n * n + 2 * (a0 + a1) * m * n - &ec * &n3 + 3 * m * m;
    let const_num = a0 * a1 * m * n * n - a0 * a0 * a1 * n * &n3 + (a0 + a1) * m * m * n
        - &ec * m * &n3
        + a0 * a1 * (a0 - a1) * (n * n + 3 * n + 6)
        + a0 * a0 * a0
        + a1 * a1 * a1
        + m * m * m
        - 3 * a0 * a0 * a1;
    let lin = BigRational::new(lin_num, &ec2 * &ec2);
    let cst = BigRational::new(const_num, &ec2 * &ec2 * &ec2);
    let s = rat(&BigInt::from(sign));
    let eps = rat(&BigInt::from(epsilon));
    MonicCubic::new(-(&s * eps), lin, -(s * cst))
}

/// Outcome of the four independent checks on a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NibReport {
    /// `Tr(α) = ε` and `ε = ±1`.
    pub trace: bool,
    /// The stored minimal polynomial has integer coefficients.
    pub integral: bool,
    /// `d(α, σα, σ²α) = D`.
    pub discriminant: bool,
    /// The closed form agrees with the polynomial from the conjugates.
    pub closed_form: bool,
}

impl NibReport {
    pub fn all_pass(&self) -> bool {
        self.trace && self.integral && self.discriminant && self.closed_form
    }
}

pub fn verify_nib(g: &NibGenerator) -> Result<NibReport> {
    let inv = invariants::conductor(&g.n)?;
    let dd = &inv.decomposition;
    let trace = (g.epsilon == 1 || g.epsilon == -1)
        && g.element.trace() == rat(&BigInt::from(g.epsilon));
    let [a, b, c] = g.element.conjugates();
    let discriminant = trace_form_disc(&a, &b, &c)? == rat(&inv.discriminant);
    let direct = g.element.min_poly();
    let closed = closed_form(dd, &g.a0, &g.a1, &g.m, g.epsilon, 1);
    Ok(NibReport {
        trace,
        integral: g.min_poly.is_integral(),
        discriminant,
        closed_form: closed == direct && g.min_poly == direct,
    })
}

/// Which of the three special families applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    /// `n ≡ 1 (mod 3)`, `Δ_n` square-free.
    F,
    /// `n ≡ 2 (mod 3)`, `Δ_n` square-free.
    G,
    /// `n ≡ 12 (mod 27)`, `Δ_n/27` square-free.
    H,
}

/// A generator with trace 1 and the polynomials of `±` it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialForm {
    pub kind: SpecialKind,
    pub element: FieldElement,
    pub plus: MonicCubic,
    pub minus: MonicCubic,
}

pub fn special_forms(n: &BigInt) -> Result<Option<SpecialForm>> {
    let dd = invariants::decompose(n)?;
    let square_free = dd.factorization.is_square_free();
    let q = |a: BigInt, b: i64| BigRational::new(a, int(b));
    let n2 = n * n;
    let n3 = &n2 * n;
    let fg_lin = -q(&n2 + 3 * n + 8, 3);
    let (kind, element, plus) = match invariants::ramification(n) {
        Ramification::Unramified3 if square_free && n.mod_floor(&int(3)).is_one() => {
            let el = &FieldElement::rational(n, q(1 - n, 3)) + &FieldElement::rho(n);
            let c = q(2 * &n3 + 6 * &n2 + 18 * n + 1, 27);
            (SpecialKind::F, el, MonicCubic::new(rat(&int(-1)), fg_lin, -c))
        }
        Ramification::Unramified3 if square_free => {
            let el = &FieldElement::rational(n, q(1 + n, 3)) - &FieldElement::rho(n);
            let c = q(2 * &n3 + 12 * &n2 + 36 * n + 53, 27);
            (SpecialKind::G, el, MonicCubic::new(rat(&int(-1)), fg_lin, c))
        }
        Ramification::Tame3 if dd.factorization.exponent_of(&int(3)) == 3 && {
            let rest = &dd.delta / 27;
            crate::arith::factor(&rest)?.is_square_free()
        } =>
        {
            let one = BigRational::one();
            let el = FieldElement::shanks_combination(n, &one, &-&one, &rat(&int(3)))
                .scale(&q(int(1), 9));
            let lin = -q(&n2 + 3 * n - 18, 81);
            let c = q(4 * &n2 + 12 * n + 9, 729);
            (SpecialKind::H, el, MonicCubic::new(rat(&int(-1)), lin, c))
        }
        _ => return Ok(None),
    };
    Ok(Some(SpecialForm {
        kind,
        element,
        minus: plus.reflect(),
        plus,
    }))
}
