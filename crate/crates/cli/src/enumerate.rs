//! JSON Lines export of J-classes and ideals.

use std::io::Write;

use difun::semigroup::{enumerate_ideal, enumerate_j_class, ElementSet};

use crate::{CliError, CliResult};

pub const MAX_ENUMERATE_N: usize = 5;

/// What to export: `J_r`, `I_r`, or all of `D_n` when `r` is absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Selection {
    pub n: usize,
    pub r: Option<usize>,
    pub ideal: bool,
}

pub fn select(sel: Selection) -> CliResult<ElementSet> {
    if sel.n > MAX_ENUMERATE_N {
        return Err(CliError::Budget(format!(
            "enumeration is limited to n ≤ {MAX_ENUMERATE_N}, got n = {}",
            sel.n
        )));
    }
    let set = match sel.r {
        None => enumerate_ideal(sel.n, sel.n)?,
        Some(r) if r > sel.n => {
            return Err(CliError::Usage(format!(
                "need r ≤ n, got n = {}, r = {r}",
                sel.n
            )))
        }
        Some(r) if sel.ideal => enumerate_ideal(sel.n, r)?,
        Some(r) => enumerate_j_class(sel.n, r)?,
    };
    Ok(set)
}

/// One JSON element per line, then `{"count":N}`. Returns the count.
pub fn write_jsonl(set: &ElementSet, out: &mut impl Write) -> CliResult<usize> {
    for e in set {
        serde_json::to_writer(&mut *out, e).map_err(|e| CliError::Io(e.into()))?;
        writeln!(out)?;
    }
    writeln!(out, "{{\"count\":{}}}", set.len())?;
    out.flush()?;
    Ok(set.len())
}

pub fn cmd_enumerate(sel: Selection, out: &mut impl Write) -> CliResult<usize> {
    write_jsonl(&select(sel)?, out)
}
