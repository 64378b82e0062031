//! Rank reports and generator closures.

use std::path::Path;

use difun::generators::{rank_formula, RankReport, MAX_CLOSURE_N};
use difun::semigroup::{closure, ElementSet, DEFAULT_BUDGET};
use difun::DifunRelation;
use serde::Serialize;

use crate::{CliError, CliResult};

/// `RankReport` for `I_r`, checked by closure when `n ≤ 4` and also by
/// exhaustive search when `n = 2`.
pub fn cmd_rank(n: usize, r: usize) -> CliResult<RankReport> {
    if r > n {
        return Err(CliError::Usage(format!("need r ≤ n, got n = {n}, r = {r}")));
    }
    let mut report = rank_formula(n, r)?;
    if (2..=MAX_CLOSURE_N).contains(&n) {
        let ok = if n == 2 {
            report.verify_exhaustively(DEFAULT_BUDGET)?
        } else {
            report.verify_by_closure()?
        };
        if !ok {
            report
                .warnings
                .push("verification against the enumerated ideal failed".into());
        }
    }
    Ok(report)
}

#[derive(Debug, Serialize)]
pub struct ClosureSummary {
    pub n: usize,
    pub generator_count: usize,
    pub size: usize,
    /// `size_by_rank[r]` elements of rank `r`.
    pub size_by_rank: Vec<usize>,
    pub elements: ElementSet,
}

/// Reads generators from a JSON array or from JSON Lines as written by
/// `enumerate`, whose `{"count":N}` trailer is skipped.
fn parse_generators(text: &str) -> CliResult<ElementSet> {
    if text.trim_start().starts_with('[') {
        return Ok(ElementSet::from_json(text)?);
    }
    let mut elems = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let value: serde_json::Value = serde_json::from_str(line)
            .map_err(|e| CliError::Library(difun::Error::Json(e.to_string())))?;
        if value.get("count").is_some() {
            continue;
        }
        let e: DifunRelation = serde_json::from_value(value)
            .map_err(|e| CliError::Library(difun::Error::Json(e.to_string())))?;
        elems.push(e);
    }
    let n = elems
        .first()
        .map(|e| e.n())
        .ok_or_else(|| CliError::Usage("empty generator list".into()))?;
    Ok(ElementSet::from_elements(n, elems)?)
}

pub fn closure_of_json(json: &str) -> CliResult<ClosureSummary> {
    let gens = parse_generators(json)?;
    let result = closure(&gens)?;
    let n = gens.n();
    let mut size_by_rank = vec![0; n + 1];
    for e in result.elements() {
        size_by_rank[e.rank()] += 1;
    }
    Ok(ClosureSummary {
        n,
        generator_count: gens.len(),
        size: result.len(),
        size_by_rank,
        elements: result.elements().sorted(),
    })
}

pub fn cmd_closure(path: &Path) -> CliResult<ClosureSummary> {
    closure_of_json(&std::fs::read_to_string(path)?)
}
