//! Tables of `rank(I_r)` and `rank(D_n)`.
//!
//! Rows with `n ≥ 2` come from the closed formula. For `n < 2` the formula
//! does not give the true rank, so those rows are found by exhaustive
//! subset search.

use std::fmt::Write as _;

use clap::ValueEnum;
use difun::generators::rank_formula;
use difun::semigroup::{enumerate_ideal, RankSearch};
use difun::BigCount;
use serde::Serialize;

use crate::{CliError, CliResult};

pub const MIN_TABLE_N: usize = 2;
pub const MAX_TABLE_N: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Formula,
    ExhaustiveSearch,
}

impl Source {
    fn label(self) -> &'static str {
        match self {
            Source::Formula => "formula",
            Source::ExhaustiveSearch => "exhaustive-search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    /// `ranks[r] = rank(I_r)` for `0 ≤ r ≤ n`.
    pub ranks: Vec<BigCount>,
    pub source: Source,
}

impl TableRow {
    /// `rank(D_n) = rank(I_n)`.
    pub fn full_rank(&self) -> &BigCount {
        self.ranks.last().expect("r = n is present")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTables {
    pub rows: Vec<TableRow>,
}

fn searched_rank(n: usize, r: usize) -> CliResult<BigCount> {
    let ideal = enumerate_ideal(n, r)?;
    let found = RankSearch::new(ideal.len())
        .rank(&ideal, &ideal)?
        .ok_or_else(|| CliError::Usage(format!("no generating set for I_{r} at n = {n}")))?;
    Ok(BigCount::from(found.len()))
}

pub fn compute_tables(max_n: usize) -> CliResult<RankTables> {
    let mut rows = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let row = if n < 2 {
            TableRow {
                n,
                ranks: (0..=n)
                    .map(|r| searched_rank(n, r))
                    .collect::<CliResult<_>>()?,
                source: Source::ExhaustiveSearch,
            }
        } else {
            TableRow {
                n,
                ranks: (0..=n)
                    .map(|r| rank_formula(n, r).map(|rep| rep.rank_formula))
                    .collect::<Result<_, _>>()?,
                source: Source::Formula,
            }
        };
        rows.push(row);
    }
    Ok(RankTables { rows })
}

#[derive(Serialize)]
struct JsonRow<'a> {
    n: usize,
    ranks: Vec<String>,
    full_rank: String,
    source: &'a Source,
}

pub fn render(tables: &RankTables, format: Format) -> String {
    match format {
        Format::Text => render_text(tables),
        Format::Csv => render_csv(tables),
        Format::Json => {
            let rows: Vec<JsonRow> = tables
                .rows
                .iter()
                .map(|row| JsonRow {
                    n: row.n,
                    ranks: row.ranks.iter().map(|v| v.to_string()).collect(),
                    full_rank: row.full_rank().to_string(),
                    source: &row.source,
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&rows).expect("plain data serializes");
            out.push('\n');
            out
        }
    }
}

fn render_text(tables: &RankTables) -> String {
    let max_n = tables.rows.len().saturating_sub(1);
    let n_width = max_n.to_string().len().max(1);
    let mut widths: Vec<usize> = (0..=max_n).map(|r| format!("r={r}").len()).collect();
    for row in &tables.rows {
        for (r, v) in row.ranks.iter().enumerate() {
            widths[r] = widths[r].max(v.to_string().len());
        }
    }
    let mut out = String::new();
    writeln!(out, "rank(I_r)").unwrap();
    write!(out, "{:>n_width$}", "n").unwrap();
    for (r, w) in widths.iter().enumerate() {
        write!(out, "  {:>w$}", format!("r={r}")).unwrap();
    }
    writeln!(out).unwrap();
    for row in &tables.rows {
        write!(out, "{:>n_width$}", row.n).unwrap();
        for (v, w) in row.ranks.iter().zip(&widths) {
            write!(out, "  {:>w$}", v.to_string()).unwrap();
        }
        writeln!(out).unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "rank(D_n)").unwrap();
    let rank_width = tables
        .rows
        .iter()
        .map(|row| row.full_rank().to_string().len())
        .max()
        .unwrap_or(0)
        .max(4);
    writeln!(out, "{:>n_width$}  {:>rank_width$}  source", "n", "rank").unwrap();
    for row in &tables.rows {
        writeln!(
            out,
            "{:>n_width$}  {:>rank_width$}  {}",
            row.n,
            row.full_rank().to_string(),
            row.source.label()
        )
        .unwrap();
    }
    out
}

fn render_csv(tables: &RankTables) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["table", "n", "r", "rank", "source"])
        .unwrap();
    for row in &tables.rows {
        for (r, v) in row.ranks.iter().enumerate() {
            w.write_record([
                "ideal",
                &row.n.to_string(),
                &r.to_string(),
                &v.to_string(),
                row.source.label(),
            ])
            .unwrap();
        }
    }
    for row in &tables.rows {
        w.write_record([
            "full",
            &row.n.to_string(),
            "",
            &row.full_rank().to_string(),
            row.source.label(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("ascii output")
}

pub fn cmd_tables(max_n: usize, format: Format) -> CliResult<String> {
    if !(MIN_TABLE_N..=MAX_TABLE_N).contains(&max_n) {
        return Err(CliError::Usage(format!(
            "--max-n must lie in {MIN_TABLE_N}..={MAX_TABLE_N}, got {max_n}"
        )));
    }
    Ok(render(&compute_tables(max_n)?, format))
}

/// Bundled reference values: `ideal[n][r] = rank(I_r)` for `n ≤ 10` and
/// `full[n] = rank(D_n)` for `n ≤ 13`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixtures {
    pub ideal: Vec<Vec<BigCount>>,
    pub full: Vec<BigCount>,
}

const TABLE1: &str = include_str!("../fixtures/table1.csv");
const TABLE2: &str = include_str!("../fixtures/table2.csv");

fn parse_big(field: &str) -> CliResult<BigCount> {
    field
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad fixture entry {field:?}")))
}

fn read_rows(text: &str) -> CliResult<Vec<Vec<BigCount>>> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Usage(e.to_string()))?;
        rows.push(
            record
                .iter()
                .filter(|f| !f.is_empty())
                .map(parse_big)
                .collect::<CliResult<Vec<_>>>()?,
        );
    }
    Ok(rows)
}

pub fn fixtures() -> CliResult<Fixtures> {
    let strip = |rows: Vec<Vec<BigCount>>| -> CliResult<Vec<Vec<BigCount>>> {
        rows.into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                if row.first() != Some(&BigCount::from(i)) {
                    return Err(CliError::Usage(format!("fixture row {i} out of order")));
                }
                row.remove(0);
                Ok(row)
            })
            .collect()
    };
    let ideal = strip(read_rows(TABLE1)?)?;
    let full = strip(read_rows(TABLE2)?)?
        .into_iter()
        .map(|mut row| row.pop().expect("one value per row"))
        .collect();
    Ok(Fixtures { ideal, full })
}

/// Parses the CSV rendering back into `(ideal rows, full ranks)`.
pub fn parse_csv(text: &str) -> CliResult<(Vec<Vec<BigCount>>, Vec<BigCount>)> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut ideal: Vec<Vec<BigCount>> = Vec::new();
    let mut full = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Usage(e.to_string()))?;
        let n: usize = record[1]
            .parse()
            .map_err(|_| CliError::Usage(format!("bad n {:?}", &record[1])))?;
        let value = parse_big(&record[3])?;
        match &record[0] {
            "ideal" => {
                if ideal.len() <= n {
                    ideal.resize(n + 1, Vec::new());
                }
                ideal[n].push(value);
            }
            "full" => full.push(value),
            other => return Err(CliError::Usage(format!("unknown table {other:?}"))),
        }
    }
    Ok((ideal, full))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        let f = fixtures().unwrap();
        assert_eq!(f.ideal.len(), 11);
        assert_eq!(f.full.len(), 14);
        for (n, row) in f.ideal.iter().enumerate() {
            assert_eq!(row.len(), n + 1);
        }
        assert_eq!(f.full[13], BigCount::from(27644450u32));
    }

    #[test]
    fn small_rows_come_from_search() {
        let t = compute_tables(2).unwrap();
        assert_eq!(t.rows[0].ranks, vec![BigCount::from(1u32)]);
        assert_eq!(
            t.rows[1].ranks,
            vec![BigCount::from(1u32), BigCount::from(2u32)]
        );
        assert_eq!(t.rows[1].source, Source::ExhaustiveSearch);
        assert_eq!(t.rows[2].full_rank(), &BigCount::from(3u32));
    }

    #[test]
    fn csv_round_trip() {
        let t = compute_tables(6).unwrap();
        let (ideal, full) = parse_csv(&render(&t, Format::Csv)).unwrap();
        for row in &t.rows {
            assert_eq!(ideal[row.n], row.ranks);
            assert_eq!(&full[row.n], row.full_rank());
        }
    }

    #[test]
    fn max_n_is_checked() {
        assert!(matches!(
            cmd_tables(1, Format::Text),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            cmd_tables(31, Format::Csv),
            Err(CliError::Usage(_))
        ));
        let text = cmd_tables(5, Format::Text).unwrap();
        assert!(text.contains("rank(D_n)"));
    }
}
