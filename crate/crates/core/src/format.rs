//! Text encodings of [`Triangle`]: aligned table, CSV, JSON and OEIS b-file.

use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numeric::Integer;
use crate::triangles::{Family, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleFormat {
    Table,
    Csv,
    Json,
    BFile,
}

impl FromStr for TriangleFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Self::Table),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "bfile" => Ok(Self::BFile),
            _ => Err(Error::Usage(format!("unknown format {s:?}"))),
        }
    }
}

pub fn render(t: &Triangle, format: TriangleFormat) -> String {
    match format {
        TriangleFormat::Table => to_table(t),
        TriangleFormat::Csv => to_csv(t),
        TriangleFormat::Json => to_json(t),
        TriangleFormat::BFile => to_bfile(t),
    }
}

/// Header `k,m,value`, then one line per entry in reading order.
pub fn to_csv(t: &Triangle) -> String {
    let mut out = String::from("k,m,value\n");
    for (k, m, v) in t.entries() {
        writeln!(out, "{k},{m},{v}").unwrap();
    }
    out
}

/// Array of row arrays, integers written as exact JSON numbers.
pub fn to_json(t: &Triangle) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|row| {
            let items: Vec<String> = row.iter().map(Integer::to_string).collect();
            format!("[{}]", items.join(","))
        })
        .collect();
    format!("[{}]\n", rows.join(","))
}

/// `index value` lines, triangle read by rows, index starting at 1.
pub fn to_bfile(t: &Triangle) -> String {
    let mut out = String::new();
    for (i, (_, _, v)) in t.entries().enumerate() {
        writeln!(out, "{} {v}", i + 1).unwrap();
    }
    out
}

/// Square table with zeros above the diagonal, laid out like the usual
/// printed triangles.
pub fn to_table(t: &Triangle) -> String {
    let base = t.first_row();
    let last = base + t.rows().len();
    let (row_sym, col_sym) = match t.family() {
        Family::Ps => ("m", "r"),
        Family::Salie => ("k", "r"),
        _ => ("k", "m"),
    };
    let cells: Vec<Vec<String>> = t
        .rows()
        .iter()
        .map(|row| {
            (0..last - base)
                .map(|j| {
                    row.get(j)
                        .map_or_else(|| "0".to_string(), Integer::to_string)
                })
                .collect()
        })
        .collect();
    let header: Vec<String> = (base..last).map(|c| format!("{col_sym}={c}")).collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|j| {
            cells
                .iter()
                .map(|r| r[j].len())
                .chain([header[j].len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let label_width = format!("{row_sym}={}", last.saturating_sub(1)).len().max(3);
    let mut out = String::new();
    write!(out, "{:<label_width$}", format!("{row_sym}\\{col_sym}")).unwrap();
    for (h, w) in header.iter().zip(&widths) {
        write!(out, "  {h:>w$}").unwrap();
    }
    out.push('\n');
    for (i, row) in cells.iter().enumerate() {
        write!(out, "{:<label_width$}", format!("{row_sym}={}", base + i)).unwrap();
        for (c, w) in row.iter().zip(&widths) {
            write!(out, "  {c:>w$}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses b-file text back into a triangle of `family`. Blank lines and `#`
/// comments are skipped; indices must run 1, 2, 3, ... and fill whole rows.
pub fn parse_bfile(family: Family, text: &str) -> Result<Triangle> {
    let mut values = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::Usage(format!("malformed b-file line {line:?}"));
        let (idx, val) = line.split_once(' ').ok_or_else(bad)?;
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx != values.len() + 1 {
            return Err(Error::Usage(format!(
                "b-file index {idx} out of sequence, expected {}",
                values.len() + 1
            )));
        }
        values.push(val.trim().parse::<Integer>().map_err(|_| bad())?);
    }
    let mut rows = Vec::new();
    let mut rest = values.as_slice();
    while !rest.is_empty() {
        let len = rows.len() + 1;
        if rest.len() < len {
            return Err(Error::Usage(format!(
                "b-file ends inside row {}",
                family.first_index() + rows.len()
            )));
        }
        let (row, tail) = rest.split_at(len);
        rows.push(row.to_vec());
        rest = tail;
    }
    Triangle::from_rows(family, rows)
}
