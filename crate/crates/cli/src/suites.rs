//! The `verify` suites: every structural claim the library makes, checked
//! against the brute-force oracle over caller-chosen ranges. Each check
//! reports its first counterexample rather than just failing.

use std::time::Instant;

use blockparity::{
    binary_shape_check, build_family_dfao, char_fn_prefix, check_correspondence, claims,
    dict_form, has_vile_suffix, is_run, kernel_dfao, kernel_prefix, kernel_table,
    longest_run_in_prefix, seq, BitString, Dfao, DictCase, Error, FamilyParam,
};

use crate::report::{CheckOutcome, SuiteReport, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteChoice {
    All,
    Dfa,
    Kernel,
    Charfn,
    Runs,
    Lemmas,
}

/// Runs the chosen suites for every `m` in `[m_lo, m_hi]`. Checks that only
/// make sense from some block length up (the run theorem needs `m >= 2`)
/// silently restrict themselves to the valid part of the range.
pub fn run_verification(
    choice: SuiteChoice,
    m_lo: u32,
    m_hi: u32,
    n_max: u64,
) -> VerificationReport {
    let ms: Vec<FamilyParam> = (m_lo..=m_hi)
        .map(|m| FamilyParam::new(m).expect("range is validated by the parser"))
        .collect();
    let want = |s: SuiteChoice| choice == SuiteChoice::All || choice == s;
    let mut suites = Vec::new();
    if want(SuiteChoice::Dfa) {
        suites.push(suite_dfa(&ms, n_max));
    }
    if want(SuiteChoice::Kernel) {
        suites.push(suite_kernel(&ms, n_max));
    }
    if want(SuiteChoice::Charfn) {
        suites.push(suite_charfn(&ms));
    }
    if want(SuiteChoice::Runs) {
        suites.push(suite_runs(&ms));
    }
    if want(SuiteChoice::Lemmas) {
        suites.push(suite_lemmas());
    }
    VerificationReport { suites }
}

fn outcome(name: &str, params: String, failure: Option<String>) -> CheckOutcome {
    CheckOutcome {
        name: name.into(),
        params,
        passed: failure.is_none(),
        counterexample: failure,
    }
}

/// First `n`, `j` at which the terminal state on `n_2 . 0 . 1^j` departs
/// from the trailing-ones case table (`m >= 2`): `q_j` / `q_{m+1+j}` for
/// `j <= m-2` depending on the parity of the count in `n`, then alternation
/// between `q_{m-1}` and `q_m`.
pub fn terminal_case_failure(m: FamilyParam, n_bound: u64, j_max: usize) -> Option<String> {
    let mv = m.get() as usize;
    debug_assert!(mv >= 2);
    let d = build_family_dfao(m);
    for n in 0..n_bound {
        let parity = seq::s(m, n);
        for j in 0..=j_max {
            let expected = if j <= mv - 2 {
                if parity == 0 {
                    j
                } else {
                    mv + 1 + j
                }
            } else if (parity == 0) == (j - (mv - 1)).is_multiple_of(2) {
                mv - 1
            } else {
                mv
            };
            let word = BitString::from_value(n)
                .concat(&BitString::zeros(1))
                .concat(&BitString::ones(j));
            let got = d.terminal_state(&word);
            if got != expected {
                return Some(format!("n={n} j={j}: reached q{got}, expected q{expected}"));
            }
        }
    }
    None
}

fn separability_failure(d: &Dfao, max_len: usize) -> Option<String> {
    for i in 0..d.state_count() {
        for j in 0..i {
            match d.separating_word(i, j) {
                None => return Some(format!("states {j} and {i} are equivalent")),
                Some(w) if w.len() > max_len => {
                    return Some(format!(
                        "states {j} and {i} need {} letters to separate",
                        w.len()
                    ))
                }
                Some(_) => {}
            }
        }
    }
    None
}

fn suite_dfa(ms: &[FamilyParam], n_max: u64) -> SuiteReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    for &m in ms {
        let d = build_family_dfao(m);
        let failure = (0..n_max)
            .find(|&n| d.eval(n) != seq::s(m, n))
            .map(|n| format!("n={n}: machine {}, direct count {}", d.eval(n), seq::s(m, n)));
        checks.push(outcome(
            "automaton matches direct count",
            format!("m={m}, n<{n_max}"),
            failure,
        ));

        let min = d.minimize();
        let failure = (min.state_count() != 2 * m.get() as usize)
            .then(|| format!("{} states after minimization", min.state_count()));
        checks.push(outcome("minimization keeps 2m states", format!("m={m}"), failure));

        if m.get() >= 2 {
            let j_max = 2 * m.get() as usize + 2;
            checks.push(outcome(
                "terminal states follow trailing-ones cases",
                format!("m={m}, n<1024, j<={j_max}"),
                terminal_case_failure(m, 1024, j_max),
            ));
        }

        checks.push(outcome(
            "state pairs separable within 2m letters",
            format!("m={m}"),
            separability_failure(&d, 2 * m.get() as usize),
        ));
    }
    SuiteReport { suite: "dfa".into(), checks, wall_ms: start.elapsed().as_millis() }
}

fn suite_kernel(ms: &[FamilyParam], n_max: u64) -> SuiteReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    for &m in ms {
        let failure = kernel_table(m).err().map(|e| e.to_string());
        checks.push(outcome("kernel rows pairwise distinct", format!("m={m}"), failure));

        let bound = n_max.min(1 << 18);
        let failure = match kernel_dfao(m) {
            Ok(d) => (0..bound)
                .find(|&n| d.eval(n) != seq::s(m, n))
                .map(|n| format!("n={n}: class machine {}, direct count {}", d.eval(n), seq::s(m, n))),
            Err(e) => Some(e.to_string()),
        };
        checks.push(outcome(
            "class machine matches direct count",
            format!("m={m}, n<{bound}"),
            failure,
        ));

        let report = check_correspondence(m);
        checks.push(outcome(
            "identity correspondence and kernel closure",
            format!("m={m}"),
            (!report.holds).then_some(report.detail),
        ));
    }
    SuiteReport { suite: "kernel".into(), checks, wall_ms: start.elapsed().as_millis() }
}

fn suite_charfn(ms: &[FamilyParam]) -> SuiteReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    for &m in ms {
        let mv = m.get();
        let len = 1usize << (mv - 1);

        let failure = (0..2 * mv)
            .find(|&i| char_fn_prefix(m, i).unwrap() != kernel_prefix(m, i, len).unwrap())
            .map(|i| format!("row {i} differs from the sampled prefix"));
        checks.push(outcome(
            "closed form equals sampled prefixes",
            format!("m={m}, rows 0..{}", 2 * mv),
            failure,
        ));

        if mv >= 2 {
            let failure = (mv + 1..2 * mv)
                .find(|&i| {
                    let lower = char_fn_prefix(m, i - (mv + 1)).unwrap();
                    let upper = char_fn_prefix(m, i).unwrap();
                    upper.iter().zip(&lower).any(|(&u, &l)| u == l)
                })
                .map(|i| format!("row {i} is not the complement of row {}", i - (mv + 1)));
            checks.push(outcome(
                "upper rows complement lower rows",
                format!("m={m}"),
                failure,
            ));

            let failure = (1..=mv)
                .find(|&i| {
                    char_fn_prefix(m, i).unwrap().iter().position(|&b| b == 1)
                        != Some((1usize << (mv - i)) - 1)
                })
                .map(|i| format!("row {i}: first one not at position 2^({mv}-{i})-1"));
            checks.push(outcome(
                "first one in row i sits at 2^(m-i)-1",
                format!("m={m}"),
                failure,
            ));
        }

        let ones = char_fn_prefix(m, mv).unwrap().iter().filter(|&&b| b == 1).count() as u64;
        let failure = (ones != seq::jacobsthal(mv))
            .then(|| format!("row {mv} has {ones} ones, jacobsthal({mv}) = {}", seq::jacobsthal(mv)));
        checks.push(outcome("middle row popcount is jacobsthal(m)", format!("m={m}"), failure));
    }
    SuiteReport { suite: "charfn".into(), checks, wall_ms: start.elapsed().as_millis() }
}

fn suite_runs(ms: &[FamilyParam]) -> SuiteReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    for &m in ms.iter().filter(|m| m.get() >= 2) {
        let failure = claims(m)
            .expect("m >= 2 here")
            .into_iter()
            .find(|c| !is_run(c.m, c.length, c.start))
            .map(|c| format!("(length {}, start {}) is not a maximal run", c.length, c.start));
        checks.push(outcome("claimed pairs are maximal runs", format!("m={m}"), failure));

        let failure = (!binary_shape_check(m)).then(|| "a shape identity failed".to_string());
        checks.push(outcome("binary shape identities", format!("m={m}"), failure));

        // Horizon 2^(2m+2) doubles per m; keep the scan tractable.
        if m.get() <= 9 {
            let exp = 2 * m.get() + 2;
            let (len, run_start) = longest_run_in_prefix(m, 1u64 << exp);
            let failure = (len != 1u64 << m.get())
                .then(|| format!("longest run has length {len} (starts at {run_start})"));
            checks.push(outcome(
                "longest run in horizon is 2^m",
                format!("m={m}, horizon=2^{exp}"),
                failure,
            ));
        }
    }
    SuiteReport { suite: "runs".into(), checks, wall_ms: start.elapsed().as_millis() }
}

fn suite_lemmas() -> SuiteReport {
    let start = Instant::now();
    let mut checks = Vec::new();

    let mut failure = None;
    'suffix: for i in 0..=6u32 {
        let bound = 1u64 << 14;
        let by_suffix: Vec<u64> = (0..bound).filter(|&n| has_vile_suffix(n, i)).collect();
        let by_formula: Vec<u64> = seq::vile_numbers()
            .map(|v| (1u64 << i) * v - 1)
            .take_while(|&n| n < bound)
            .collect();
        if by_suffix != by_formula {
            failure = Some(format!("index sets disagree at i={i}"));
            break 'suffix;
        }
    }
    checks.push(outcome(
        "suffix test selects the scaled vile indices",
        "i<=6, n<16384".into(),
        failure,
    ));

    let failure = (0..=20u32)
        .find(|&i| seq::vile_count_upto(1 << i) != seq::jacobsthal(i + 1))
        .map(|i| {
            format!(
                "i={i}: {} vile numbers <= 2^{i}, jacobsthal({}) = {}",
                seq::vile_count_upto(1 << i),
                i + 1,
                seq::jacobsthal(i + 1)
            )
        });
    checks.push(outcome(
        "vile count at powers of two is jacobsthal",
        "i<=20".into(),
        failure,
    ));

    let failure = (1..=30u32)
        .find(|&m| seq::jacobsthal(m - 1) + seq::jacobsthal(m) != 1u64 << (m - 1))
        .map(|m| format!("m={m}"));
    checks.push(outcome(
        "adjacent jacobsthal numbers sum to 2^(m-1)",
        "m<=30".into(),
        failure,
    ));

    let (tuples, failure) = dictionary_sweep();
    checks.push(outcome(
        "dictionary identities hold",
        format!("{tuples} sampled tuples"),
        failure,
    ));

    let mut failure = None;
    'concat: for a in 0..200u64 {
        let x = sample_n(a);
        let y = sample_n(a.wrapping_add(9000));
        let xw = BitString::from_value(x);
        let yw = BitString::from_value(y);
        let value = xw.concat(&yw).to_value().unwrap();
        if value != x * (1u64 << yw.len()) + y {
            failure = Some(format!("x={x} y={y}: concatenation value {value}"));
            break 'concat;
        }
    }
    checks.push(outcome(
        "concatenation multiplies by 2^|y|",
        "200 sampled pairs".into(),
        failure,
    ));

    SuiteReport { suite: "lemmas".into(), checks, wall_ms: start.elapsed().as_millis() }
}

fn sample_n(k: u64) -> u64 {
    match k {
        0 => 0,
        1 => 1,
        _ => k.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 44,
    }
}

/// Deterministic sweep of the four shift/concatenation identities:
/// 4 cases x 10 block lengths x 10 suffix lengths x 25 values = 10000
/// tuples. Returns the tuple count and the first failure, if any.
/// Tuples outside a case's domain must return the documented error.
pub fn dictionary_sweep() -> (usize, Option<String>) {
    let cases = [DictCase::Ii, DictCase::Iii, DictCase::Iv, DictCase::V];
    let mut checked = 0;
    let mut failure: Option<String> = None;
    for &case in &cases {
        for m in 1..=10u32 {
            for i in 0..10u32 {
                for k in 0..25u64 {
                    let n = sample_n(k);
                    checked += 1;
                    if failure.is_some() {
                        continue;
                    }
                    match dict_form(case, n, m, i) {
                        Ok((value, word)) => {
                            let got = word.to_value().unwrap();
                            if got != value {
                                failure = Some(format!(
                                    "case {case:?}, n={n}, m={m}, i={i}: word reads {got}, formula gives {value}"
                                ));
                            }
                        }
                        Err(Error::DictionaryCaseUndefined)
                            if n == 0 && matches!(case, DictCase::Iii | DictCase::V) => {}
                        Err(e) => {
                            failure =
                                Some(format!("case {case:?}, n={n}, m={m}, i={i}: {e}"));
                        }
                    }
                }
            }
        }
    }
    (checked, failure)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_run_over_small_range_passes() {
        let report = run_verification(SuiteChoice::All, 1, 3, 1 << 12);
        assert_eq!(report.failures(), 0, "{}", report.to_text());
        assert_eq!(report.suites.len(), 5);
    }

    #[test]
    fn single_suite_selection() {
        let report = run_verification(SuiteChoice::Runs, 2, 4, 1 << 10);
        assert_eq!(report.suites.len(), 1);
        assert_eq!(report.suites[0].suite, "runs");
        assert_eq!(report.failures(), 0);
    }

    #[test]
    fn runs_suite_skips_m1() {
        let report = run_verification(SuiteChoice::Runs, 1, 1, 1 << 10);
        assert_eq!(report.suites[0].checks.len(), 0);
        assert_eq!(report.failures(), 0);
    }

    #[test]
    fn dictionary_sweep_covers_ten_thousand_tuples() {
        let (tuples, failure) = dictionary_sweep();
        assert_eq!(tuples, 10_000);
        assert_eq!(failure, None);
    }
}
