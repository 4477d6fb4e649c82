//! Text, CSV and JSON-lines rendering of command results.

use coauthor_credit::decimal::format_decimal;
use coauthor_credit::indicators::{IndicatorReport, NrcStats};
use num_rational::BigRational;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Jsonl,
}

const NA: &str = "n/a";

fn dec(value: &BigRational, places: usize) -> String {
    format_decimal(value, places)
}

fn opt_dec(value: Option<&BigRational>, places: usize) -> String {
    value.map_or_else(|| NA.to_string(), |v| dec(v, places))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Left-aligns the first column and pads the rest to a common width.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{cell:<width$}", width = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn indicator_report(report: &IndicatorReport, format: Format, places: usize) -> String {
    let (plain, weighted, _) = report.mode.labels();
    match format {
        Format::Table => {
            let mut rows = vec![vec!["label".to_string(), plain.into(), weighted.into(), "ratio".into()]];
            for row in &report.rows {
                rows.push(vec![
                    row.label.clone(),
                    dec(row.unweighted.value(), places),
                    dec(row.weighted.value(), places),
                    opt_dec(row.ratio.as_ref(), places),
                ]);
            }
            aligned(&rows)
        }
        Format::Csv => {
            let mut out = format!("label,{plain},{weighted},ratio,{plain}_exact,{weighted}_exact,ratio_exact\n");
            for row in &report.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    csv_field(&row.label),
                    dec(row.unweighted.value(), places),
                    dec(row.weighted.value(), places),
                    opt_dec(row.ratio.as_ref(), places),
                    row.unweighted,
                    row.weighted,
                    row.ratio.as_ref().map_or_else(|| NA.to_string(), ToString::to_string),
                ));
            }
            out
        }
        Format::Jsonl => {
            let mut out = String::new();
            for row in &report.rows {
                let record = json!({
                    "label": row.label,
                    "mode": report.mode,
                    "method": report.method.name(),
                    "unweighted": dec(row.unweighted.value(), places),
                    "weighted": dec(row.weighted.value(), places),
                    "ratio": row.ratio.as_ref().map(|r| dec(r, places)),
                    "unweighted_exact": row.unweighted.to_string(),
                    "weighted_exact": row.weighted.to_string(),
                    "ratio_exact": row.ratio.as_ref().map(ToString::to_string),
                });
                out.push_str(&record.to_string());
                out.push('\n');
            }
            out
        }
    }
}

/// Named indicator values, e.g. `AP`, `WAP`, `GWAP` for one group.
pub fn named_values(
    heading: &[(&str, String)],
    values: &[(&str, BigRational)],
    format: Format,
    places: usize,
) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            for (k, v) in heading {
                out.push_str(&format!("{k}: {v}\n"));
            }
            let rows: Vec<Vec<String>> = values
                .iter()
                .map(|(name, v)| vec![name.to_lowercase(), dec(v, places)])
                .collect();
            out.push_str(&aligned(&rows));
            out
        }
        Format::Csv => {
            let mut out = String::from("indicator,value,exact\n");
            for (name, v) in values {
                out.push_str(&format!("{},{},{}\n", name.to_lowercase(), dec(v, places), v));
            }
            out
        }
        Format::Jsonl => {
            let mut out = String::new();
            for (name, v) in values {
                let mut record = serde_json::Map::new();
                for (k, val) in heading {
                    record.insert((*k).to_string(), json!(val));
                }
                record.insert("indicator".into(), json!(name.to_lowercase()));
                record.insert("value".into(), json!(dec(v, places)));
                record.insert("exact".into(), json!(v.to_string()));
                out.push_str(&serde_json::Value::Object(record).to_string());
                out.push('\n');
            }
            out
        }
    }
}

/// Per-department totals; `per_faculty` is set when faculty and year counts
/// were supplied.
pub struct DepartmentLine<'a> {
    pub name: &'a str,
    pub stats: NrcStats,
    pub per_faculty: Option<BigRational>,
}

pub fn departments(lines: &[DepartmentLine<'_>], format: Format, places: usize) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            for line in lines {
                out.push_str(&format!(
                    "{}: pubs {}, cites {}, cites/pub {}",
                    line.name,
                    line.stats.allocated_publications,
                    line.stats.allocated_citations,
                    opt_dec(line.stats.cites_per_publication.as_ref(), places),
                ));
                if let Some(p) = &line.per_faculty {
                    out.push_str(&format!(", pubs/faculty/year {}", dec(p, places)));
                }
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from(
                "department,allocated_publications,allocated_citations,cites_per_publication,\
                 publications_per_faculty_year,cites_per_publication_exact,publications_per_faculty_year_exact\n",
            );
            for line in lines {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    csv_field(line.name),
                    line.stats.allocated_publications,
                    line.stats.allocated_citations,
                    opt_dec(line.stats.cites_per_publication.as_ref(), places),
                    opt_dec(line.per_faculty.as_ref(), places),
                    line.stats
                        .cites_per_publication
                        .as_ref()
                        .map_or_else(|| NA.to_string(), ToString::to_string),
                    line.per_faculty
                        .as_ref()
                        .map_or_else(|| NA.to_string(), ToString::to_string),
                ));
            }
            out
        }
        Format::Jsonl => {
            let mut out = String::new();
            for line in lines {
                let record = json!({
                    "department": line.name,
                    "allocated_publications": line.stats.allocated_publications.to_string(),
                    "allocated_citations": line.stats.allocated_citations.to_string(),
                    "cites_per_publication": line.stats.cites_per_publication.as_ref().map(|v| dec(v, places)),
                    "cites_per_publication_exact": line.stats.cites_per_publication.as_ref().map(ToString::to_string),
                    "publications_per_faculty_year": line.per_faculty.as_ref().map(|v| dec(v, places)),
                    "publications_per_faculty_year_exact": line.per_faculty.as_ref().map(ToString::to_string),
                });
                out.push_str(&record.to_string());
                out.push('\n');
            }
            out
        }
    }
}
