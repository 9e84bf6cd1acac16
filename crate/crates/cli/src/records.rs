//! Serializable output records. Integers and rationals are strings so that
//! nothing is lost to JSON number precision.

use serde::{Deserialize, Serialize};

use simplest_cubic::gaussian::{GaussianReport, NumericMatch};
use simplest_cubic::invariants::FieldInvariants;
use simplest_cubic::render;
use simplest_cubic::table::TableRow;
use simplest_cubic::{MonicCubic, NibGenerator};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    pub text: String,
    /// `[1, p2, p1, p0]`.
    pub coefficients: [String; 4],
}

impl From<&MonicCubic> for Polynomial {
    fn from(p: &MonicCubic) -> Self {
        Polynomial {
            text: p.to_string(),
            coefficients: render::coefficient_strings(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub pair: [String; 2],
    pub epsilon: i8,
    pub m: String,
    pub element: String,
    /// Coordinates over `1, ρ, ρ^2`.
    pub coordinates: [String; 3],
    pub min_poly: Polynomial,
}

impl From<&NibGenerator> for GeneratorRecord {
    fn from(g: &NibGenerator) -> Self {
        GeneratorRecord {
            pair: [g.a0.to_string(), g.a1.to_string()],
            epsilon: g.epsilon,
            m: g.m.to_string(),
            element: g.element.to_string(),
            coordinates: g.element.coeffs().clone().map(|c| c.to_string()),
            min_poly: Polynomial::from(&g.min_poly),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericRecord {
    pub matched: bool,
    pub precision_bits: u32,
    pub residual_log2: f64,
    pub subgroup: Option<String>,
}

impl From<&NumericMatch> for NumericRecord {
    fn from(m: &NumericMatch) -> Self {
        let r = m.residual_log2();
        NumericRecord {
            matched: m.matched,
            precision_bits: m.precision_bits,
            residual_log2: if r.is_finite() { r } else { -f64::from(m.precision_bits) },
            subgroup: m.subgroup.as_ref().map(ToString::to_string),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianRecord {
    pub prime_count: usize,
    pub epsilon: i8,
    pub sign: i8,
    pub pair: [String; 2],
    pub element: String,
    pub min_poly: Polynomial,
    pub numeric_match: Option<NumericRecord>,
}

impl GaussianRecord {
    pub fn new(r: &GaussianReport, numeric: Option<&NumericMatch>) -> Self {
        GaussianRecord {
            prime_count: r.prime_count,
            epsilon: r.epsilon,
            sign: r.sign,
            pair: [r.generator.a0.to_string(), r.generator.a1.to_string()],
            element: r.period_element.to_string(),
            min_poly: Polynomial::from(&r.min_poly),
            numeric_match: numeric.map(NumericRecord::from),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: String,
    pub delta: String,
    pub delta_factored: String,
    pub d: String,
    pub e: String,
    pub c: String,
    pub gamma: String,
    pub conductor: String,
    pub discriminant: String,
    pub tame: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gaussian: Option<GaussianRecord>,
}

impl From<&FieldInvariants> for OutputRecord {
    fn from(inv: &FieldInvariants) -> Self {
        let dd = &inv.decomposition;
        OutputRecord {
            n: dd.n.to_string(),
            delta: dd.delta.to_string(),
            delta_factored: dd.factorization.to_string(),
            d: dd.d.to_string(),
            e: dd.e.to_string(),
            c: dd.c.to_string(),
            gamma: inv.gamma.to_string(),
            conductor: inv.conductor.to_string(),
            discriminant: inv.discriminant.to_string(),
            tame: inv.tame,
            generators: None,
            gaussian: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRecord {
    pub n: String,
    pub delta: String,
    pub conductor: String,
    pub tame: bool,
    pub period: Option<String>,
    pub min_poly: Option<Polynomial>,
}

impl From<&TableRow> for TableRecord {
    fn from(r: &TableRow) -> Self {
        TableRecord {
            n: r.n.to_string(),
            delta: r.delta_string(),
            conductor: r.conductor_string(),
            tame: r.invariants.tame,
            period: r.gaussian.as_ref().map(|g| g.period_element.to_string()),
            min_poly: r.gaussian.as_ref().map(|g| Polynomial::from(&g.min_poly)),
        }
    }
}
