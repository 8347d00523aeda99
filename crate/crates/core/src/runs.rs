//! Zero runs in `s_m`.
//!
//! A maximal zero run is a block of consecutive zero terms bounded by ones
//! (or by position 0 on the left). For `m >= 2` three explicit families of
//! `(length, start)` pairs are maximal runs ([`claims`]); the longest run
//! anywhere in `s_m` is `2^m`, checked empirically over finite horizons by
//! [`longest_run_in_prefix`]. [`binary_shape_check`] verifies the binary
//! shape identities around `2^{2m+1} - 2^m` that drive the
//! `(2^{m-1}+1, 2^{2m+1}-2^m-1)` family.

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::seq::{self, FamilyParam};

/// Assertion that `s_m` has a maximal zero run of `length` starting at
/// `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunClaim {
    pub m: FamilyParam,
    pub length: u64,
    pub start: u64,
}

/// True iff `s(m, b..b+l)` is all zeros, `s(m, b+l) = 1`, and the run is
/// maximal on the left: `b = 0` or `s(m, b-1) = 1`.
pub fn is_run(m: FamilyParam, l: u64, b: u64) -> bool {
    assert!(l >= 1, "runs have positive length");
    (0..l).all(|j| seq::s(m, b + j) == 0)
        && seq::s(m, b + l) == 1
        && (b == 0 || seq::s(m, b - 1) == 1)
}

/// The explicit families of maximal-run pairs `(length, start)`, defined for
/// `m >= 2`:
///
/// - `(2^m, 2^{m+3}-1)`, `(2^{m-1}, 2^{2m-1}-2^m)`, and
///   `(2^i, 2^{m+2+i}-2^{i+1})` for `0 <= i <= m-2`;
/// - `(2^{m-1}+1, 2^{2m+1}-2^m-1)`;
/// - `(2^m-1, 2^{m+2})` and
///   `(sum_{j=m-2-i}^{m-1} 2^j, sum_{j=0}^{m-3-i} 2^{m+j})` for
///   `0 <= i <= m-2`, an empty sum being 0.
pub fn claims(m: FamilyParam) -> Result<Vec<RunClaim>> {
    let mv = m.get();
    if mv < 2 {
        return Err(Error::TheoremRequiresMAtLeastTwo);
    }
    let p = |e: u32| 1u64 << e;
    let claim = |length: u64, start: u64| RunClaim { m, length, start };

    let mut out = vec![
        claim(p(mv), p(mv + 3) - 1),
        claim(p(mv - 1), p(2 * mv - 1) - p(mv)),
    ];
    for i in 0..=mv - 2 {
        out.push(claim(p(i), p(mv + 2 + i) - p(i + 1)));
    }
    out.push(claim(p(mv - 1) + 1, p(2 * mv + 1) - p(mv) - 1));
    out.push(claim(p(mv) - 1, p(mv + 2)));
    for i in 0..=mv - 2 {
        let length: u64 = (mv - 2 - i..=mv - 1).map(p).sum();
        let start: u64 = if i + 3 > mv {
            0
        } else {
            (0..=mv - 3 - i).map(|j| p(mv + j)).sum()
        };
        out.push(claim(length, start));
    }
    Ok(out)
}

/// Longest zero run among the first `horizon` terms of `s_m`, with the
/// earliest start attaining it. A run still open at the horizon counts with
/// its observed length.
pub fn longest_run_in_prefix(m: FamilyParam, horizon: u64) -> (u64, u64) {
    assert!(horizon >= 1, "empty horizon has no runs");
    let mut best = (0u64, 0u64);
    let mut open: Option<u64> = None;
    for n in 0..horizon {
        if seq::s(m, n) == 0 {
            open.get_or_insert(n);
        } else if let Some(start) = open.take() {
            if n - start > best.0 {
                best = (n - start, start);
            }
        }
    }
    if let Some(start) = open {
        if horizon - start > best.0 {
            best = (horizon - start, start);
        }
    }
    best
}

/// Verifies the four binary-shape identities around `2^{2m+1} - 2^m`
/// (`m >= 2`):
///
/// - `(2^{2m+1}-2^m-2)_2 = 1^m 0 1^{m-1} 0`
/// - `(2^{2m+1}-2^m-1)_2 = 1^m 0 1^m`
/// - `(2^{2m+1}-2^m+j)_2 = 1^{m+1} 0 j'` for `0 <= j < 2^{m-1}`, where `j'`
///   is `j` in binary, left-padded to `m-1` digits
/// - `(2^{2m+1}-2^{m-1})_2 = 1^{m+2} 0^{m-1}`
pub fn binary_shape_check(m: FamilyParam) -> bool {
    let mv = m.get();
    assert!(mv >= 2, "shape identities need m >= 2");
    let ones = |k: u32| BitString::ones(k as usize);
    let zero = BitString::zeros(1);
    let p = |e: u32| 1u64 << e;
    let top = p(2 * mv + 1) - p(mv);

    BitString::from_value(top - 2)
        == ones(mv).concat(&zero).concat(&ones(mv - 1)).concat(&zero)
        && BitString::from_value(top - 1) == ones(mv).concat(&zero).concat(&ones(mv))
        && (0..p(mv - 1)).all(|j| {
            BitString::from_value(top + j)
                == ones(mv + 1)
                    .concat(&zero)
                    .concat(&BitString::from_value_padded(j, mv as usize - 1))
        })
        && BitString::from_value(p(2 * mv + 1) - p(mv - 1))
            == ones(mv + 2).concat(&BitString::zeros(mv as usize - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(m: u32) -> FamilyParam {
        FamilyParam::new(m).unwrap()
    }

    #[test]
    fn is_run_examples() {
        assert!(is_run(fp(2), 4, 31));
        assert!(is_run(fp(2), 3, 0));
        assert!(!is_run(fp(2), 5, 31));
    }

    #[test]
    fn run_length_is_unique() {
        for l in 1..=8u64 {
            if l != 4 {
                assert!(!is_run(fp(2), l, 31), "l={l}");
            }
        }
    }

    #[test]
    fn claims_for_m2() {
        let got = claims(fp(2)).unwrap();
        let pairs: Vec<(u64, u64)> = got.iter().map(|c| (c.length, c.start)).collect();
        assert_eq!(pairs, vec![(4, 31), (2, 4), (1, 14), (3, 27), (3, 16), (3, 0)]);
    }

    #[test]
    fn claims_requires_m_at_least_two() {
        assert!(matches!(claims(fp(1)), Err(Error::TheoremRequiresMAtLeastTwo)));
    }

    #[test]
    fn claims_include_known_pairs() {
        let got = claims(fp(4)).unwrap();
        assert!(got.iter().any(|c| (c.length, c.start) == (16, 127)));
        let got = claims(fp(3)).unwrap();
        assert!(got.iter().any(|c| (c.length, c.start) == (5, 119)));
    }

    #[test]
    fn every_claim_is_a_run() {
        for m in 2..=6u32 {
            for c in claims(fp(m)).unwrap() {
                assert!(
                    is_run(c.m, c.length, c.start),
                    "m={m} length={} start={}",
                    c.length,
                    c.start
                );
            }
        }
    }

    #[test]
    fn longest_run_examples() {
        assert_eq!(longest_run_in_prefix(fp(2), 256), (4, 7));
        assert_eq!(longest_run_in_prefix(fp(3), 1), (1, 0));
        let (len, start) = longest_run_in_prefix(fp(4), 1 << 10);
        assert_eq!(len, 16);
        assert!(is_run(fp(4), len, start));
    }

    #[test]
    fn scan_runs_satisfy_the_predicate() {
        // Recover every maximal run closed before the horizon and check each
        // against is_run; consecutive runs must be separated by a one.
        let m = fp(3);
        let horizon = 2048u64;
        let mut runs: Vec<(u64, u64)> = Vec::new();
        let mut open: Option<u64> = None;
        for n in 0..horizon {
            if seq::s(m, n) == 0 {
                open.get_or_insert(n);
            } else if let Some(start) = open.take() {
                runs.push((n - start, start));
            }
        }
        assert!(runs.len() > 10);
        for &(l, b) in &runs {
            assert!(is_run(m, l, b), "l={l} b={b}");
        }
        for w in runs.windows(2) {
            let (l0, b0) = w[0];
            let (_, b1) = w[1];
            assert!(b0 + l0 < b1, "runs must be separated by a one");
        }
    }

    #[test]
    fn shape_identities_hold() {
        for m in 2..=8u32 {
            assert!(binary_shape_check(fp(m)), "m={m}");
        }
        // Spot values behind the identities.
        assert_eq!(BitString::from_value(26).to_string(), "11010");
        assert_eq!(BitString::from_value(119).to_string(), "1110111");
        assert_eq!(BitString::from_value((1 << 5) - (1 << 1)).to_string(), "11110");
    }

    #[test]
    fn run_family_b_pointwise() {
        // The run (2^{m-1}+1, 2^{2m+1}-2^m-1) read off term by term: a one
        // just before the start, zeros through the run, a one after it.
        for m in 2..=6u32 {
            let n = (1u64 << (2 * m + 1)) - (1 << m) - 2;
            assert_eq!(seq::s(fp(m), n), 1, "m={m}");
            for j in 1..=(1u64 << (m - 1)) + 1 {
                assert_eq!(seq::s(fp(m), n + j), 0, "m={m} j={j}");
            }
            assert_eq!(seq::s(fp(m), n + (1 << (m - 1)) + 2), 1, "m={m}");
        }
    }
}
