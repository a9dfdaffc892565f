//! The `bseries` subcommand: check the divergence identity on a seeded
//! polynomial field, or compute the volume obstruction of a coefficient
//! table loaded from JSON.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use aromalab_core::bseries::{
    check_divergence_identity, volume_obstruction, BSeriesCoefficients, PolyVectorField,
};
use aromalab_core::rational::{format_q, parse_q};
use aromalab_core::species::{enumerate_unlabelled, UnlabelledKey, UnlabelledKind};
use serde::{Deserialize, Serialize};

#[derive(Deserialize)]
struct CoefficientEntry {
    tree: String,
    value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DivergenceRow {
    pub tree: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionRow {
    pub order: usize,
    pub terms: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BseriesReport {
    pub schema: u32,
    pub divergence: Option<Vec<DivergenceRow>>,
    pub obstruction: Option<Vec<ObstructionRow>>,
    pub all_pass: bool,
}

pub fn check_divergence(max_order: usize, dim: usize, seed: u64) -> Result<Vec<DivergenceRow>> {
    if max_order > 5 {
        bail!("divergence checks are limited to trees with at most 5 vertices");
    }
    let f = PolyVectorField::random_cubic(dim, seed).map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut rows = Vec::new();
    for m in 1..=max_order {
        for key in enumerate_unlabelled(UnlabelledKind::Tree, m)? {
            let holds = check_divergence_identity(&key, &f)?;
            rows.push(DivergenceRow {
                tree: key.to_string(),
                holds,
            });
        }
    }
    Ok(rows)
}

/// Loads a coefficient table from JSON of the form
/// `{"1": [{"tree": "()", "value": "1"}], "2": [...]}`.
pub fn load_coefficients(path: &Path, max_order: usize) -> Result<BSeriesCoefficients> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading coefficients from {}", path.display()))?;
    let parsed: BTreeMap<String, Vec<CoefficientEntry>> =
        serde_json::from_str(&text).context("parsing coefficient JSON")?;
    let mut support = BTreeMap::new();
    for (order, entries) in parsed {
        let order: usize = order
            .parse()
            .with_context(|| format!("bad order key {order:?}"))?;
        if order > max_order {
            bail!("coefficient order {order} exceeds the requested maximum {max_order}");
        }
        for entry in entries {
            let value = parse_q(&entry.value).map_err(|e| anyhow::anyhow!("{e}"))?;
            support.insert(UnlabelledKey::new(entry.tree), value);
        }
    }
    BSeriesCoefficients::from_support(max_order, support).map_err(|e| anyhow::anyhow!("{e}"))
}

pub fn obstruction(b: &BSeriesCoefficients) -> Result<Vec<ObstructionRow>> {
    let table = volume_obstruction(b)?;
    Ok(table
        .into_iter()
        .map(|(order, comb)| ObstructionRow {
            order,
            terms: comb
                .iter()
                .map(|(key, c)| (key.to_string(), format_q(c)))
                .collect(),
        })
        .collect())
}

pub fn print_report(report: &BseriesReport) {
    if let Some(rows) = &report.divergence {
        println!("divergence identity:");
        for row in rows {
            println!("  {:30}  {}", row.tree, if row.holds { "ok" } else { "FAIL" });
        }
    }
    if let Some(rows) = &report.obstruction {
        if rows.is_empty() {
            println!("volume obstruction: none (volume preserving up to the truncation order)");
        } else {
            println!("volume obstruction:");
            for row in rows {
                println!("  order {}:", row.order);
                for (key, c) in &row.terms {
                    println!("    {c} * {key}");
                }
            }
        }
    }
    println!("{}", if report.all_pass { "all checks passed" } else { "FAILURES present" });
}
