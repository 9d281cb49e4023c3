//! Output rendering. All formats iterate sorted structures, so identical
//! inputs produce byte-identical output regardless of thread count.

use edgebetti::betti::{lower_bound, upper_bound, BettiTable, StrandReport};
use edgebetti::census::CensusReport;
use edgebetti::graph::Graph;
use edgebetti::Count;

use crate::{CliError, Format};

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))
}

fn csv_cell(v: Option<Count>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Betti table as a Macaulay-style triangle: columns are homological indices,
/// rows are degree slopes `j - i`, zeros print as dots.
fn betti_triangle(t: &BettiTable) -> String {
    if t.is_empty() {
        return "edge ideal is zero: all Betti numbers vanish\n".to_string();
    }
    let max_i = t.max_i().expect("nonempty table") as usize;
    let slopes: Vec<u32> = {
        let mut ds: Vec<u32> = t.iter().map(|((i, j), _)| j - i).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    };
    let cell = |i: usize, d: u32| -> String {
        let v = t.get(i as u32, i as u32 + d);
        if v == 0 {
            ".".to_string()
        } else {
            v.to_string()
        }
    };
    let totals: Vec<Count> = (0..=max_i).map(|i| t.total(i as u32)).collect();
    let mut widths = vec![0usize; max_i + 1];
    for (i, w) in widths.iter_mut().enumerate() {
        *w = i.to_string().len().max(totals[i].to_string().len());
        for &d in &slopes {
            *w = (*w).max(cell(i, d).len());
        }
    }
    let label_width = "total:".len().max(
        slopes
            .iter()
            .map(|d| format!("{d}:").len())
            .max()
            .unwrap_or(0),
    );
    let mut out = String::new();
    let mut row = |label: String, cells: Vec<String>| {
        out.push_str(&format!("{label:>label_width$}"));
        for (i, c) in cells.iter().enumerate() {
            out.push_str(&format!(" {c:>w$}", w = widths[i]));
        }
        out.push('\n');
    };
    row(String::new(), (0..=max_i).map(|i| i.to_string()).collect());
    row(
        "total:".to_string(),
        totals.iter().map(|v| v.to_string()).collect(),
    );
    for &d in &slopes {
        row(format!("{d}:"), (0..=max_i).map(|i| cell(i, d)).collect());
    }
    out
}

pub fn betti(t: &BettiTable, format: Format) -> Result<String, CliError> {
    match format {
        Format::Table => Ok(betti_triangle(t)),
        Format::Json => to_json(t),
        Format::Csv => {
            let mut out = String::from("i,j,beta\n");
            for ((i, j), beta) in t.iter() {
                out.push_str(&format!("{i},{j},{beta}\n"));
            }
            Ok(out)
        }
    }
}

pub fn strand(r: &StrandReport, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(r),
        Format::Csv => {
            let mut out = String::from("i,oracle,formula_no_c4,beta24,beta35,lower,upper\n");
            for row in &r.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    row.i,
                    csv_cell(row.oracle),
                    csv_cell(row.formula_no_c4),
                    csv_cell(row.beta24),
                    csv_cell(row.beta35),
                    row.lower,
                    row.upper
                ));
            }
            Ok(out)
        }
        Format::Table => {
            let headers = ["i", "oracle", "formula_no_c4", "beta24", "beta35", "lower", "upper", "tight"];
            let mut rows: Vec<Vec<String>> = Vec::new();
            for row in &r.rows {
                let dash = |v: Option<Count>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".to_string());
                rows.push(vec![
                    row.i.to_string(),
                    dash(row.oracle),
                    dash(row.formula_no_c4),
                    dash(row.beta24),
                    dash(row.beta35),
                    row.lower.to_string(),
                    row.upper.to_string(),
                    match row.lower_tight {
                        Some(true) => "yes".to_string(),
                        Some(false) => "no".to_string(),
                        None => "-".to_string(),
                    },
                ]);
            }
            let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
            for row in &rows {
                for (c, cell) in row.iter().enumerate() {
                    widths[c] = widths[c].max(cell.len());
                }
            }
            let mut out = String::new();
            let emit = |out: &mut String, cells: &[String]| {
                let line: Vec<String> = cells
                    .iter()
                    .enumerate()
                    .map(|(c, cell)| format!("{cell:>w$}", w = widths[c]))
                    .collect();
                out.push_str(&line.join("  "));
                out.push('\n');
            };
            emit(&mut out, &headers.iter().map(|s| s.to_string()).collect::<Vec<_>>());
            for row in &rows {
                emit(&mut out, row);
            }
            Ok(out)
        }
    }
}

pub fn census(r: &CensusReport, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(r),
        Format::Table => {
            let mut out = String::new();
            for (k, v) in &r.k {
                out.push_str(&format!("k_{k} = {v}\n"));
            }
            for (k, v) in &r.k_bipartite {
                out.push_str(&format!("k_{{{k}}} = {v}\n"));
            }
            out.push_str(&format!("c4 = {}\n", r.c4));
            out.push_str(&format!("w4 = {}\n", r.w4));
            out.push_str(&format!("d = {}\n", r.d));
            Ok(out)
        }
        Format::Csv => Err(CliError::Input(
            "csv output is not defined for the census; use table or json".to_string(),
        )),
    }
}

pub fn bounds(g: &Graph, max_i: Option<u32>, format: Format) -> Result<String, CliError> {
    let top = match max_i {
        Some(m) => m.min(g.n().saturating_sub(2) as u32),
        None => g.n().saturating_sub(2) as u32,
    };
    let rows: Vec<(u32, Count, Count)> = if g.n() < 2 {
        Vec::new()
    } else {
        (0..=top).map(|i| (i, lower_bound(g, i), upper_bound(g, i))).collect()
    };
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|&(i, lo, hi)| serde_json::json!({"i": i, "lower": lo, "upper": hi}))
                .collect();
            to_json(&items)
        }
        Format::Csv => {
            let mut out = String::from("i,lower,upper\n");
            for (i, lo, hi) in rows {
                out.push_str(&format!("{i},{lo},{hi}\n"));
            }
            Ok(out)
        }
        Format::Table => {
            let mut out = String::from("  i  lower  upper\n");
            for (i, lo, hi) in rows {
                out.push_str(&format!("{i:>3}  {lo:>5}  {hi:>5}\n"));
            }
            Ok(out)
        }
    }
}

pub fn triangles(bound: Count, triangles: Count, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(&serde_json::json!({
            "triangle_lower_bound": bound,
            "triangles": triangles,
        })),
        Format::Table => Ok(format!(
            "triangle lower bound: {bound}\ntriangles (k_3): {triangles}\n"
        )),
        Format::Csv => Err(CliError::Input(
            "csv output is not defined for triangles; use table or json".to_string(),
        )),
    }
}
