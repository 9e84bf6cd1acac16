//! Gaussian periods of `L_n` as signed generators, and a numeric oracle that
//! sums roots of unity over the cosets of each index-3 subgroup of
//! `(Z/fZ)^×`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::arith;
use crate::cubic_field::{FieldElement, MonicCubic};
use crate::eisenstein;
use crate::error::{Error, Result};
use crate::invariants::{self, Ramification};
use crate::nib::{self, NibGenerator, SpecialKind};
use crate::numeric::{self, Fixed, GUARD_BITS};
use crate::{int, par, rat};

pub const DEFAULT_PRECISION: u32 = 256;
pub const MAX_PRECISION: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianReport {
    pub n: BigInt,
    pub prime_count: usize,
    pub epsilon: i8,
    /// `(−1)^t·ε`.
    pub sign: i8,
    pub generator: NibGenerator,
    pub period_element: FieldElement,
    pub min_poly: MonicCubic,
}

fn parity_sign(t: usize) -> i8 {
    if t % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `η = (−1)^t ε α` for the canonical pair, with its minimal polynomial.
pub fn period_identity(n: &BigInt) -> Result<GaussianReport> {
    let inv = invariants::conductor(n)?;
    if !inv.tame {
        return Err(Error::Wild(n.clone()));
    }
    let dd = &inv.decomposition;
    let pairs = eisenstein::find_pair(n, &dd.ec())?;
    let p = &pairs.canonical;
    let g = nib::generator(n, &p.a0, &p.a1)?;
    let t = inv.prime_count;
    let sign = parity_sign(t) * g.epsilon;
    let period_element = g.element.scale(&rat(&BigInt::from(sign)));
    let min_poly = if sign == 1 {
        g.min_poly.clone()
    } else {
        g.min_poly.reflect()
    };
    let mu = arith::mobius_of(&inv.conductor_factorization);
    if period_element.trace() != rat(&BigInt::from(mu)) {
        return Err(Error::Internal(format!(
            "trace of the period at n = {n} is not μ(f) = {mu}"
        )));
    }
    Ok(GaussianReport {
        n: n.clone(),
        prime_count: t,
        epsilon: g.epsilon,
        sign,
        generator: g,
        period_element,
        min_poly,
    })
}

/// The period in one of the simplified shapes, when one applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryForm {
    pub kind: SpecialKind,
    pub element: FieldElement,
    pub min_poly: MonicCubic,
}

pub fn corollary_forms(n: &BigInt) -> Result<Option<CorollaryForm>> {
    let Some(sf) = nib::special_forms(n)? else {
        return Ok(None);
    };
    let inv = invariants::conductor(n)?;
    let s = parity_sign(inv.prime_count);
    let (element, min_poly) = match sf.kind {
        SpecialKind::F | SpecialKind::G => {
            // (−1)^t (n/3) (v_n + ρ), v_n = ((n/3) − n)/3
            let leg = BigInt::from(arith::legendre3(n));
            let v = (&leg - n) / 3;
            let base = &FieldElement::rational(n, rat(&v)) + &FieldElement::rho(n);
            let el = base.scale(&rat(&(BigInt::from(s) * leg)));
            (el, if s == 1 { sf.plus } else { sf.minus })
        }
        SpecialKind::H => (
            sf.element.scale(&rat(&BigInt::from(s))),
            if s == 1 { sf.plus } else { sf.minus },
        ),
    };
    Ok(Some(CorollaryForm {
        kind: sf.kind,
        element,
        min_poly,
    }))
}

/// One index-3 subgroup `ker χ`, `χ(h) = Σ e_p·ind_p(h) mod 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub modulus: BigInt,
    /// `(p, e_p)` with `e_p ∈ {1, 2}`.
    pub exponents: Vec<(u64, u8)>,
}

impl std::fmt::Display for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(p, e)| format!("{p}:{e}"))
            .collect();
        write!(f, "ker[{}] mod {}", parts.join(","), self.modulus)
    }
}

#[derive(Debug, Clone)]
pub struct PeriodSet {
    pub subgroup: Subgroup,
    pub periods: [Fixed; 3],
    /// Largest imaginary part seen; should vanish.
    pub imaginary: Fixed,
}

fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    let (mut b, mut e, mut r) = (b as u128 % m as u128, e, 1u128);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    r as u64
}

/// Index of `h` modulo `p` in `Z/3`, relative to a fixed cube root of unity.
struct CubicIndex {
    p: u64,
    omega: u64,
}

impl CubicIndex {
    fn new(p: u64) -> Self {
        let k = (p - 1) / 3;
        let omega = (2..p)
            .map(|x| pow_mod(x, k, p))
            .find(|&w| w != 1)
            .expect("p ≡ 1 (mod 3) has a non-trivial cube root of unity");
        CubicIndex { p, omega }
    }

    fn index(&self, h: u64) -> u8 {
        match pow_mod(h, (self.p - 1) / 3, self.p) {
            1 => 0,
            w if w == self.omega => 1,
            _ => 2,
        }
    }
}

/// The conductor-exact index-3 subgroups of `(Z/fZ)^×` and their periods
/// `η_j = Σ_{χ(h)=j} exp(2πih/f)`, computed with `precision_bits` plus guard bits.
pub fn numeric_periods(f: &BigInt, precision_bits: u32) -> Result<Vec<PeriodSet>> {
    let fac = arith::factor(f)?;
    if !fac.is_square_free() || *f <= BigInt::one() {
        return Err(Error::NotSquareFree(f.clone()));
    }
    let phi: BigInt = fac.factors().iter().map(|(p, _)| p - 1).product();
    if !phi.is_multiple_of(&int(3)) {
        return Err(Error::NoCubicSubfield(f.clone()));
    }
    if fac.factors().iter().any(|(p, _)| !(p - 1i32).is_multiple_of(&int(3))) {
        // a prime without cubic characters cannot be ramified in a cyclic cubic field
        return Ok(Vec::new());
    }
    let fu = f
        .to_u64()
        .ok_or_else(|| Error::Internal(format!("modulus {f} too large for the period oracle")))?;
    let primes: Vec<u64> = fac.primes().map(|p| p.to_u64().expect("p ≤ f")).collect();
    let indices: Vec<CubicIndex> = primes.iter().map(|&p| CubicIndex::new(p)).collect();

    let k = primes.len();
    let mut characters = Vec::new();
    for mask in 0..(1u32 << (k - 1)) {
        let mut e = vec![1u8];
        for i in 1..k {
            e.push(if mask >> (i - 1) & 1 == 1 { 2 } else { 1 });
        }
        characters.push(e);
    }

    let wp = precision_bits + GUARD_BITS;
    let powers = unit_roots(fu, wp);
    let residues: Vec<(u64, Vec<u8>)> = (1..fu)
        .filter(|h| h.gcd(&fu) == 1)
        .map(|h| (h, indices.iter().map(|ix| ix.index(h % ix.p)).collect()))
        .collect();

    let sets = par::map(characters, |e| {
        let mut re = [Fixed::zero(wp), Fixed::zero(wp), Fixed::zero(wp)];
        let mut im = [Fixed::zero(wp), Fixed::zero(wp), Fixed::zero(wp)];
        for (h, ind) in &residues {
            let j = ind
                .iter()
                .zip(&e)
                .map(|(a, b)| (*a as u32) * (*b as u32))
                .sum::<u32>()
                % 3;
            let (c, s) = &powers[*h as usize];
            re[j as usize] = &re[j as usize] + c;
            im[j as usize] = &im[j as usize] + s;
        }
        let imaginary = im.iter().map(Fixed::abs).max().expect("three cosets");
        PeriodSet {
            subgroup: Subgroup {
                modulus: f.clone(),
                exponents: primes.iter().copied().zip(e).collect(),
            },
            periods: re,
            imaginary,
        }
    });
    Ok(sets)
}

/// `(cos 2πh/f, sin 2πh/f)` for `0 ≤ h < f`, by repeated multiplication.
fn unit_roots(f: u64, wp: u32) -> Vec<(Fixed, Fixed)> {
    // extra bits absorb the rounding drift of f successive products
    let extra = 64 - f.leading_zeros() + 2;
    let p = wp + extra;
    let theta = (&pi2(p)).div_int(&BigInt::from(f));
    let (c1, s1) = numeric::cos_sin(&theta);
    let mut out = Vec::with_capacity(f as usize);
    let (mut c, mut s) = (Fixed::from_int(&int(1), p), Fixed::zero(p));
    for _ in 0..f {
        out.push((
            Fixed::from_raw(c.raw() >> extra, wp),
            Fixed::from_raw(s.raw() >> extra, wp),
        ));
        let nc = &(&c * &c1) - &(&s * &s1);
        let ns = &(&s * &c1) + &(&c * &s1);
        c = nc;
        s = ns;
    }
    out
}

fn pi2(p: u32) -> Fixed {
    let pi = numeric::pi(p);
    &pi + &pi
}

/// Result of matching numeric periods against the algebraic prediction.
#[derive(Debug, Clone)]
pub struct NumericMatch {
    pub matched: bool,
    pub precision_bits: u32,
    /// Largest distance of a symmetric function from its nearest integer.
    pub residual: Fixed,
    pub subgroup: Option<Subgroup>,
    /// Whether each period equals some `sign·(a₀r_i + a₁r_{i+1} + m)/(ec²)`.
    pub roots_matched: bool,
}

impl NumericMatch {
    pub fn residual_log2(&self) -> f64 {
        self.residual.log2_abs()
    }
}

pub fn numeric_verify(n: &BigInt, precision_bits: u32) -> Result<NumericMatch> {
    let report = period_identity(n)?;
    let inv = invariants::conductor(n)?;
    let sets = numeric_periods(&inv.conductor, precision_bits)?;
    let wp = precision_bits + GUARD_BITS;
    let threshold = precision_bits / 2;

    let expected = predicted_values(&report, n, wp)?;
    let mut best: Option<NumericMatch> = None;
    for set in sets {
        let [a, b, c] = &set.periods;
        let e1 = &(a + b) + c;
        let e2 = &(&(a * b) + &(b * c)) + &(c * a);
        let e3 = &(a * b) * c;
        let (r1, d1) = e1.round();
        let (r2, d2) = e2.round();
        let (r3, d3) = e3.round();
        let residual = [d1, d2, d3, set.imaginary.clone()]
            .into_iter()
            .max()
            .expect("four entries");
        let poly = MonicCubic::from_symmetric(rat(&r1), rat(&r2), rat(&r3));
        let poly_ok = poly == report.min_poly && residual.below_pow2(threshold);
        let roots_matched = poly_ok && matches_multiset(&set.periods, &expected, threshold);
        let candidate = NumericMatch {
            matched: poly_ok && roots_matched,
            precision_bits,
            residual,
            subgroup: Some(set.subgroup),
            roots_matched,
        };
        let better = match &best {
            None => true,
            Some(b) => (candidate.matched && !b.matched) || (candidate.matched == b.matched && candidate.residual < b.residual),
        };
        if better {
            best = Some(candidate);
        }
    }
    best.ok_or_else(|| Error::NoCubicSubfield(inv.conductor.clone()))
}

/// Retry at doubled precision until the residual clears, up to [`MAX_PRECISION`].
pub fn numeric_verify_auto(n: &BigInt, start_bits: u32) -> Result<NumericMatch> {
    let mut bits = start_bits.max(64);
    loop {
        let m = numeric_verify(n, bits)?;
        if m.matched || m.residual.below_pow2(bits / 2) {
            return Ok(m);
        }
        if bits >= MAX_PRECISION {
            return Err(Error::PrecisionInsufficient(bits));
        }
        bits = (bits * 2).min(MAX_PRECISION);
    }
}

/// `sign·(a₀r_i + a₁r_{i+1} + m)/(ec²)` over the σ-ordered numeric roots.
fn predicted_values(report: &GaussianReport, n: &BigInt, wp: u32) -> Result<[Fixed; 3]> {
    let roots = numeric::numeric_roots(n, wp)?;
    let g = &report.generator;
    let dd = invariants::decompose(n)?;
    let den = BigInt::from(report.sign) * dd.ec2();
    let a0 = Fixed::from_int(&g.a0, wp);
    let a1 = Fixed::from_int(&g.a1, wp);
    let m = Fixed::from_int(&g.m, wp);
    let vals = [0, 1, 2].map(|i| {
        let v = &(&(&a0 * &roots[i]) + &(&a1 * &roots[(i + 1) % 3])) + &m;
        let q = v.div_int(&den.abs());
        if den.is_negative() {
            -&q
        } else {
            q
        }
    });
    Ok(vals)
}

fn matches_multiset(got: &[Fixed; 3], want: &[Fixed; 3], bits: u32) -> bool {
    let mut used = [false; 3];
    for g in got {
        let hit = (0..3).find(|&j| !used[j] && (g - &want[j]).below_pow2(bits));
        match hit {
            Some(j) => used[j] = true,
            None => return false,
        }
    }
    true
}

/// Whether `n` is in the range where the period identity applies.
pub fn applies(n: &BigInt) -> bool {
    invariants::ramification(n) != Ramification::Wild
}
