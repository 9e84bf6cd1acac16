//! Plain-text rendering of field elements and polynomials.
//!
//! Elements print over `{1, ρ, ρ²}` with one common denominator pulled out,
//! e.g. `(1/49)(3ρ^2 - 859ρ - 499)`, with a leading `-` when the top
//! coefficient is negative. Polynomials print sparsely, `X^3 + X^2 - 80X + 125`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cubic_field::{FieldElement, MonicCubic};

/// Common denominator and integer numerators `(N₀, N₁, N₂)`.
pub fn common_denominator(coeffs: &[BigRational; 3]) -> (BigInt, [BigInt; 3]) {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .clone()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer());
    (den, nums)
}

fn push_term(out: &mut String, coeff: &BigInt, var: &str, first: bool) {
    if coeff.is_zero() {
        return;
    }
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if var.is_empty() || !mag.is_one() {
        out.push_str(&mag.to_string());
    }
    out.push_str(var);
}

fn integer_poly(nums: &[BigInt; 3]) -> String {
    let mut out = String::new();
    let terms = [(&nums[2], "ρ^2"), (&nums[1], "ρ"), (&nums[0], "")];
    for (c, var) in terms {
        let first = out.is_empty();
        push_term(&mut out, c, var, first);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn element(x: &FieldElement) -> String {
    if x.is_rational() {
        return x.coeffs()[0].to_string();
    }
    let (den, mut nums) = common_denominator(x.coeffs());
    if den.is_one() {
        return integer_poly(&nums);
    }
    let lead = nums.iter().rev().find(|c| !c.is_zero()).expect("non-zero");
    let neg = lead.is_negative();
    if neg {
        nums = nums.map(|c| -c);
    }
    format!(
        "{}(1/{den})({})",
        if neg { "-" } else { "" },
        integer_poly(&nums)
    )
}

fn rational_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

pub fn polynomial(p: &MonicCubic) -> String {
    let mut out = String::from("X^3");
    for (c, var) in [(&p.p2, "X^2"), (&p.p1, "X"), (&p.p0, "")] {
        if c.is_zero() {
            continue;
        }
        out.push_str(if c.is_negative() { " - " } else { " + " });
        let mag = c.abs();
        if !(mag.is_one() && !var.is_empty()) {
            if var.is_empty() && !mag.is_integer() {
                out.push_str(&format!("{}/{}", mag.numer(), mag.denom()));
            } else {
                out.push_str(&rational_coeff(&mag));
            }
        }
        out.push_str(var);
    }
    out
}

/// Exact coefficient strings `[1, p₂, p₁, p₀]`, each `"p"` or `"p/q"`.
pub fn coefficient_strings(p: &MonicCubic) -> [String; 4] {
    p.coefficients().map(|c| c.to_string())
}
