//! Range tabulation of invariants and Gaussian periods.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gaussian::{self, GaussianReport};
use crate::invariants::{self, FieldInvariants};
use crate::{int, par};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    All,
    Tame,
    /// `n ≡ 12 (mod 27)`.
    Mod27,
    /// `3 ∤ n` and `Δ_n ≠ f`.
    DeltaNeF,
}

impl FromStr for Filter {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Filter::All),
            "tame" => Ok(Filter::Tame),
            "mod27" => Ok(Filter::Mod27),
            "delta-ne-f" => Ok(Filter::DeltaNeF),
            _ => Err(format!("unknown filter {s:?}")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub n: BigInt,
    pub invariants: FieldInvariants,
    /// Absent for wild `n`.
    pub gaussian: Option<GaussianReport>,
}

impl TableRow {
    pub fn delta_string(&self) -> String {
        self.invariants.decomposition.factorization.to_string()
    }

    pub fn conductor_string(&self) -> String {
        self.invariants.conductor_factorization.to_string()
    }

    pub fn period_string(&self) -> String {
        self.gaussian
            .as_ref()
            .map_or_else(|| "none".into(), |g| g.period_element.to_string())
    }

    pub fn min_poly_string(&self) -> String {
        self.gaussian
            .as_ref()
            .map_or_else(|| "none".into(), |g| g.min_poly.to_string())
    }
}

fn keep(filter: Filter, n: &BigInt, inv: &FieldInvariants) -> bool {
    match filter {
        Filter::All => true,
        Filter::Tame => inv.tame,
        Filter::Mod27 => n.mod_floor(&int(27)) == int(12),
        Filter::DeltaNeF => {
            !n.is_multiple_of(&int(3)) && inv.decomposition.delta != inv.conductor
        }
    }
}

pub fn row(n: &BigInt, filter: Filter) -> Result<Option<TableRow>> {
    let inv = invariants::conductor(n)?;
    if !keep(filter, n, &inv) {
        return Ok(None);
    }
    let gaussian = if inv.tame {
        Some(gaussian::period_identity(n)?)
    } else {
        None
    };
    Ok(Some(TableRow {
        n: n.clone(),
        invariants: inv,
        gaussian,
    }))
}

fn collect(results: Vec<Result<Option<TableRow>>>) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for r in results {
        if let Some(row) = r? {
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Rows for `from ≤ n ≤ to`, in ascending `n`.
pub fn tabulate(from: i64, to: i64, filter: Filter) -> Result<Vec<TableRow>> {
    let ns: Vec<i64> = (from..=to).collect();
    collect(par::map(ns, |n| row(&int(n), filter)))
}

pub fn tabulate_sequential(from: i64, to: i64, filter: Filter) -> Result<Vec<TableRow>> {
    let ns: Vec<i64> = (from..=to).collect();
    collect(par::map_sequential(ns, |n| row(&int(n), filter)))
}

pub const MARKDOWN_HEADER: &str = "| n | Δ_n | f | Gaussian period | minimal polynomial |\n|---|---|---|---|---|\n";

pub fn markdown_row(r: &TableRow) -> String {
    format!(
        "| {} | {} | {} | {} | {} |",
        r.n,
        r.delta_string(),
        r.conductor_string(),
        r.period_string(),
        r.min_poly_string()
    )
}

pub fn markdown(rows: &[TableRow]) -> String {
    let mut out = String::from(MARKDOWN_HEADER);
    for r in rows {
        writeln!(out, "{}", markdown_row(r)).expect("writing to a String");
    }
    out
}
