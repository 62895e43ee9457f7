use anyhow::{bail, Result};
use binvert_core::combinat::{figurate, forward_difference, BellTable, StirlingTables};
use binvert_core::{Field, FieldSpec, QuadExt, Rat};

use crate::commands::{parse_list, strings};
use crate::report::Output;
use crate::Table;

pub fn run(table: &Table) -> Result<Output> {
    let (rows, json) = match table {
        Table::Stirling { n, first, output } => {
            let st = StirlingTables::new(*n);
            let rows = (0..=*n)
                .map(|s| {
                    (0..=s)
                        .map(|k| {
                            let v = if *first {
                                st.first_unsigned(s, k)
                            } else {
                                st.second(s, k)
                            };
                            v.map(ToString::to_string)
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            (rows, output.json)
        }
        Table::Bell { values, n, common } => {
            let rows = match common.field {
                FieldSpec::Rational => bell_rows::<Rat>(values, *n, common.field)?,
                FieldSpec::Quadratic(_) => bell_rows::<QuadExt>(values, *n, common.field)?,
            };
            (rows, common.json)
        }
        Table::Figurate { k, count, output } => {
            let rows = (1..=*k)
                .map(|k| {
                    (0..*count as u64)
                        .map(|h| figurate(k, h).map(|v| v.to_string()))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            (rows, output.json)
        }
        Table::Differences { values, common } => {
            let rows = match common.field {
                FieldSpec::Rational => difference_rows::<Rat>(values, common.field)?,
                FieldSpec::Quadratic(_) => difference_rows::<QuadExt>(values, common.field)?,
            };
            (rows, common.json)
        }
    };
    let text = if json {
        serde_json::to_string(&rows)? + "\n"
    } else {
        aligned(&rows)
    };
    Ok(Output { text, ok: true })
}

/// Row `n` holds `B_{n,0}, …, B_{n,n}`.
fn bell_rows<F: Field>(
    values: &str,
    n: Option<usize>,
    field: FieldSpec,
) -> Result<Vec<Vec<String>>> {
    let t: Vec<F> = parse_list(values, field)?;
    let n = n.unwrap_or(t.len());
    if n > t.len() {
        bail!("B_(n,k) up to n = {n} needs {n} values, got {}", t.len());
    }
    let table = BellTable::new(&t, n)?;
    Ok((0..=n)
        .map(|row| {
            (0..=row)
                .map(|k| table.partial(row, k).to_string())
                .collect()
        })
        .collect())
}

/// Row `k` is the `k`-th forward difference.
fn difference_rows<F: Field>(values: &str, field: FieldSpec) -> Result<Vec<Vec<String>>> {
    let v: Vec<F> = parse_list(values, field)?;
    (0..v.len())
        .map(|k| Ok(strings(&forward_difference(&v, k)?)))
        .collect()
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}
