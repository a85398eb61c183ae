//! OEIS b-file parsing and comparison of triangle rows against published
//! sequence data.

use std::path::Path;

use num_bigint::BigInt;

use crate::error::{Result, SwrError};
use crate::ring::{Rational, Scalar};
use crate::triangle::{build_triangle, SpecializationId};
use crate::Verdict;

/// A parsed b-file: `(index, value)` records with strictly increasing
/// indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    pub records: Vec<(i64, BigInt)>,
}

impl BFile {
    /// Parses "index value" lines; blank lines and lines starting with
    /// `#` are skipped.
    pub fn parse(id: &str, text: &str) -> Result<BFile> {
        let mut records: Vec<(i64, BigInt)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let bad = || SwrError::Parse(format!("b-file line {}: `{line}`", lineno + 1));
            let index: i64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let value: BigInt = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if parts.next().is_some() {
                return Err(bad());
            }
            if let Some((last, _)) = records.last() {
                if index <= *last {
                    return Err(SwrError::Parse(format!(
                        "b-file line {}: index {index} does not increase",
                        lineno + 1
                    )));
                }
            }
            records.push((index, value));
        }
        Ok(BFile { id: id.to_string(), records })
    }

    pub fn read(id: &str, path: &Path) -> Result<BFile> {
        BFile::parse(id, &std::fs::read_to_string(path)?)
    }

    pub fn value_at(&self, index: i64) -> Option<&BigInt> {
        self.records
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.records[pos].1)
    }
}

/// How a triangle is read by rows into an OEIS sequence: rows start at
/// `first_row`, each row `n` lists columns `first_col..=n`, and the first
/// term carries index `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisConvention {
    pub id: &'static str,
    pub specialization: SpecializationId,
    pub first_row: usize,
    pub first_col: usize,
    pub offset: i64,
}

impl OeisConvention {
    /// Linear sequence index of cell `(n, k)`.
    pub fn linear_index(&self, n: usize, k: usize) -> i64 {
        let before: usize = (self.first_row..n).map(|m| m + 1 - self.first_col).sum();
        self.offset + (before + k - self.first_col) as i64
    }
}

/// Sequences with a known reading convention.
pub fn oeis_conventions() -> Vec<OeisConvention> {
    let c = |id, specialization, first_row, first_col| OeisConvention { id, specialization, first_row, first_col, offset: 0 };
    vec![
        c("A048993", SpecializationId::Stirling2, 0, 0),
        OeisConvention { offset: 1, ..c("A008277", SpecializationId::Stirling2, 1, 1) },
        c("A049020", SpecializationId::RiordanA049020, 0, 0),
        c("A008279", SpecializationId::FallingFactorialA008279, 0, 0),
        c("A154602", SpecializationId::A154602, 0, 0),
    ]
}

pub fn oeis_convention(id: &str) -> Result<OeisConvention> {
    oeis_conventions()
        .into_iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| SwrError::Parse(format!("no reading convention registered for `{id}`")))
}

/// A triangle cell that disagrees with the published value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisMismatch {
    pub n: usize,
    pub k: usize,
    pub expected: BigInt,
    pub got: Scalar,
}

/// Compares rows `first_row..first_row + rows` of the registered
/// specialization against the b-file, exactly.
pub fn compare_with_bfile(conv: &OeisConvention, bfile: &BFile, rows: usize) -> Result<Verdict<OeisMismatch>> {
    if rows == 0 {
        return Ok(Verdict::Pass);
    }
    let last_row = conv.first_row + rows - 1;
    let need = conv.linear_index(last_row, last_row);
    if bfile.value_at(need).is_none() {
        return Err(SwrError::InsufficientTerms(format!(
            "{} has no term at index {need}, needed for {rows} rows",
            bfile.id
        )));
    }
    let tri = build_triangle(&conv.specialization.params(), last_row);
    for n in conv.first_row..=last_row {
        for k in conv.first_col..=n {
            let idx = conv.linear_index(n, k);
            let expected = bfile
                .value_at(idx)
                .ok_or_else(|| SwrError::InsufficientTerms(format!("{} has no term at index {idx}", bfile.id)))?;
            let got = tri.entry(n, k);
            if got != Scalar::Rat(Rational::from_integer(expected.clone())) {
                return Ok(Verdict::Fail(OeisMismatch { n, k, expected: expected.clone(), got }));
            }
        }
    }
    Ok(Verdict::Pass)
}
