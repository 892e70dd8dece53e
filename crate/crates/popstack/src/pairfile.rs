//! Text formats: pair files and CSV count reports.
//!
//! A pair file lists the two pattern sets under `[F]` (forbidden) and `[G]`
//! (saving) section headers, one permutation per line in one-line notation.
//! `#` starts a comment, blank lines are skipped, and a missing section is
//! an empty set. Files are written with members sorted by length then
//! lexicographically, so equal pairs render to identical bytes.

use std::fmt::Write as _;
use std::path::Path;

use crate::avoidance::AvoidancePair;
use crate::characterize::VerifyReport;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Parses the pair-file format from a string.
pub fn parse_pair(text: &str) -> Result<AvoidancePair> {
    #[derive(PartialEq)]
    enum Section {
        None,
        Forbidden,
        Saving,
    }
    let mut section = Section::None;
    let mut forbidden = Vec::new();
    let mut saving = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line {
            "[F]" => section = Section::Forbidden,
            "[G]" => section = Section::Saving,
            _ if line.starts_with('[') => {
                return Err(Error::PairFile {
                    line: i + 1,
                    reason: format!("unknown section {line:?}; expected [F] or [G]"),
                });
            }
            _ => {
                let perm: Permutation = line.parse().map_err(|e| Error::PairFile {
                    line: i + 1,
                    reason: format!("{e}"),
                })?;
                match section {
                    Section::Forbidden => forbidden.push(perm),
                    Section::Saving => saving.push(perm),
                    Section::None => {
                        return Err(Error::PairFile {
                            line: i + 1,
                            reason: "permutation before any [F]/[G] section header".into(),
                        });
                    }
                }
            }
        }
    }
    AvoidancePair::new(forbidden, saving)
}

pub fn read_pair_file(path: &Path) -> Result<AvoidancePair> {
    parse_pair(&std::fs::read_to_string(path)?)
}

/// Renders a pair in the file format, preceded by the given comment lines.
pub fn render_pair(pair: &AvoidancePair, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "[F]");
    for p in pair.forbidden() {
        let _ = writeln!(out, "{p}");
    }
    let _ = writeln!(out, "[G]");
    for p in pair.saving() {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn write_pair_file(path: &Path, pair: &AvoidancePair, comments: &[String]) -> Result<()> {
    Ok(std::fs::write(path, render_pair(pair, comments))?)
}

pub const COUNT_CSV_HEADER: &str = "n,av2_count,sortable_count,mismatches";

/// One CSV row of counts; absent columns render empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    pub av2_count: Option<u64>,
    pub sortable_count: Option<u64>,
    pub mismatches: Option<u64>,
}

fn cell(v: Option<u64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Renders count rows under the fixed header.
pub fn render_counts(rows: &[CountRow]) -> String {
    let mut out = String::from(COUNT_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.n,
            cell(r.av2_count),
            cell(r.sortable_count),
            cell(r.mismatches)
        );
    }
    out
}

/// Renders a verification report as count rows.
pub fn render_verify_csv(report: &VerifyReport) -> String {
    let rows: Vec<CountRow> = report
        .rows
        .iter()
        .map(|r| CountRow {
            n: r.n,
            av2_count: Some(r.two_avoiding),
            sortable_count: Some(r.sortable),
            mismatches: Some(r.mismatches.len() as u64),
        })
        .collect();
    render_counts(&rows)
}
