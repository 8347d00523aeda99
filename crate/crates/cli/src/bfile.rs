//! OEIS b-file reading and the sequence comparisons behind `oeis-compare`.
//!
//! A b-file is a plain-text table of `index value` lines; `#` starts a
//! comment and blank lines are ignored. Values are signed so that ±1-valued
//! sequences parse as published.

use std::fmt;
use std::path::Path;

use blockparity::{seq, FamilyParam};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BfileEntry {
    pub index: u64,
    pub value: i64,
}

#[derive(Debug)]
pub enum BfileError {
    Io(std::io::Error),
    Parse { line: usize, text: String },
}

impl fmt::Display for BfileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BfileError::Io(e) => write!(f, "cannot read b-file: {e}"),
            BfileError::Parse { line, text } => {
                write!(f, "b-file line {line} is not \"index value\": {text:?}")
            }
        }
    }
}

impl std::error::Error for BfileError {}

pub fn parse_bfile(text: &str) -> Result<Vec<BfileEntry>, BfileError> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let entry = (|| {
            let index = tokens.next()?.parse().ok()?;
            let value = tokens.next()?.parse().ok()?;
            if tokens.next().is_some() {
                return None;
            }
            Some(BfileEntry { index, value })
        })();
        match entry {
            Some(e) => entries.push(e),
            None => {
                return Err(BfileError::Parse { line: lineno + 1, text: line.to_string() })
            }
        }
    }
    Ok(entries)
}

pub fn read_bfile(path: &Path) -> Result<Vec<BfileEntry>, BfileError> {
    let text = std::fs::read_to_string(path).map_err(BfileError::Io)?;
    parse_bfile(&text)
}

/// Which reference sequence a b-file is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SeqChoice {
    /// s(1, n): ones-count parity (Thue–Morse, A010060)
    S1,
    /// s(2, n) against the ±1-valued A020985, mapped 1 -> 0, -1 -> 1
    S2,
    /// The n-th number whose binary expansion ends in an even number of
    /// zeros (A003159, 1-indexed)
    Vile,
    /// Jacobsthal numbers (A001045)
    Jacobsthal,
}

/// First disagreement between our sequence and a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: u64,
    pub ours: i64,
    pub theirs: i64,
}

/// Compares every b-file entry against the chosen sequence. `Ok(count)` is
/// the number of terms checked; a mismatch reports the first offending
/// index.
pub fn compare(choice: SeqChoice, entries: &[BfileEntry]) -> Result<usize, Mismatch> {
    for e in entries {
        let ours = match choice {
            SeqChoice::S1 => i64::from(seq::s(FamilyParam::new(1).unwrap(), e.index)),
            SeqChoice::S2 => {
                // A020985 stores (-1)^count; fold its sign into a bit.
                let theirs_bit = match e.value {
                    1 => 0,
                    -1 => 1,
                    other => {
                        return Err(Mismatch {
                            index: e.index,
                            ours: i64::from(seq::s(FamilyParam::new(2).unwrap(), e.index)),
                            theirs: other,
                        })
                    }
                };
                let ours_bit = i64::from(seq::s(FamilyParam::new(2).unwrap(), e.index));
                if ours_bit != theirs_bit {
                    return Err(Mismatch { index: e.index, ours: ours_bit, theirs: theirs_bit });
                }
                continue;
            }
            SeqChoice::Vile => seq::vile(e.index) as i64,
            SeqChoice::Jacobsthal => seq::jacobsthal(e.index as u32) as i64,
        };
        if ours != e.value {
            return Err(Mismatch { index: e.index, ours, theirs: e.value });
        }
    }
    Ok(entries.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blanks() {
        let entries = parse_bfile("# header\n\n0 0\n1 1\n  2   -1 \n").unwrap();
        assert_eq!(
            entries,
            vec![
                BfileEntry { index: 0, value: 0 },
                BfileEntry { index: 1, value: 1 },
                BfileEntry { index: 2, value: -1 },
            ]
        );
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            parse_bfile("0 0\nnot a line\n"),
            Err(BfileError::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_bfile("0 0 0\n"), Err(BfileError::Parse { .. })));
    }

    #[test]
    fn comparison_finds_first_mismatch() {
        let entries = parse_bfile("0 0\n1 1\n2 0\n").unwrap();
        let err = compare(SeqChoice::S1, &entries).unwrap_err();
        assert_eq!(err, Mismatch { index: 2, ours: 1, theirs: 0 });
    }

    #[test]
    fn sign_mapping_for_the_pm1_sequence() {
        let entries = parse_bfile("0 1\n1 1\n2 1\n3 -1\n").unwrap();
        assert_eq!(compare(SeqChoice::S2, &entries), Ok(4));
    }
}
