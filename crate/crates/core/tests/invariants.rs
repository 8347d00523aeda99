//! Cross-module sweeps: the automaton, the kernel machinery, and the
//! suffix/counting lemmas checked against the brute-force oracle over
//! moderate ranges. (The release gate in the CLI crate re-runs these at the
//! full advertised ranges.)

use blockparity::{
    build_family_dfao, explore_kernel, has_vile_suffix, kernel_dfao, kernel_table, seq,
    BitString, FamilyParam,
};

fn fp(m: u32) -> FamilyParam {
    FamilyParam::new(m).unwrap()
}

#[test]
fn family_machine_agrees_with_oracle() {
    for m in 1..=6u32 {
        let d = build_family_dfao(fp(m));
        for n in 0..1u64 << 14 {
            assert_eq!(d.eval(n), seq::s(fp(m), n), "m={m} n={n}");
        }
    }
}

#[test]
fn kernel_machine_agrees_with_oracle() {
    for m in 1..=6u32 {
        let d = kernel_dfao(fp(m)).unwrap();
        for n in 0..1u64 << 18 {
            assert_eq!(d.eval(n), seq::s(fp(m), n), "m={m} n={n}");
        }
    }
}

/// Expected terminal state on input `n_2 . 0 . 1^j` for `m >= 2`: the
/// machine lands in `q_j` (count so far even) or `q_{m+1+j}` (odd) while
/// `j <= m-2`, then alternates between `q_{m-1}` and `q_m` as each further
/// 1 completes another overlapping block.
fn expected_terminal(m: usize, parity: u8, j: usize) -> usize {
    if j <= m - 2 {
        if parity == 0 {
            j
        } else {
            m + 1 + j
        }
    } else {
        let even = (j - (m - 1)).is_multiple_of(2);
        if (parity == 0) == even {
            m - 1
        } else {
            m
        }
    }
}

#[test]
fn terminal_states_follow_the_case_analysis() {
    for m in 2..=6u32 {
        let d = build_family_dfao(fp(m));
        for n in 0..1u64 << 10 {
            let parity = seq::s(fp(m), n);
            for j in 0..=(2 * m as usize + 2) {
                let word = BitString::from_value(n)
                    .concat(&BitString::zeros(1))
                    .concat(&BitString::ones(j));
                assert_eq!(
                    d.terminal_state(&word),
                    expected_terminal(m as usize, parity, j),
                    "m={m} n={n} j={j}"
                );
            }
        }
    }
}

#[test]
fn suffix_test_selects_exactly_the_scaled_vile_indices() {
    for i in 0..=6u32 {
        let bound = 1u64 << 14;
        let by_suffix: Vec<u64> = (0..bound).filter(|&n| has_vile_suffix(n, i)).collect();
        let by_formula: Vec<u64> = seq::vile_numbers()
            .map(|v| (1u64 << i) * v - 1)
            .take_while(|&n| n < bound)
            .collect();
        assert_eq!(by_suffix, by_formula, "i={i}");
    }
}

#[test]
fn kernel_rows_distinct_through_m10() {
    for m in 1..=10u32 {
        let table = kernel_table(fp(m)).expect("rows must stay distinct");
        assert_eq!(table.rows().len(), 2 * m as usize);
    }
}

#[test]
fn exploration_closes_at_2m_classes() {
    for m in 1..=8u32 {
        let len = 1usize << (m - 1);
        let (d, _) = explore_kernel(|n| seq::s(fp(m), n), len, 4 * m as usize).unwrap();
        assert_eq!(d.state_count(), 2 * m as usize, "m={m}");
    }
}

#[test]
fn zero_padding_never_changes_terminal_state() {
    for m in 1..=6u32 {
        let d = build_family_dfao(fp(m));
        for n in (0..1u64 << 10).step_by(7) {
            let bare = d.terminal_state(&BitString::from_value(n));
            for pad in 1..=8usize {
                let padded = BitString::zeros(pad).concat(&BitString::from_value(n));
                assert_eq!(d.terminal_state(&padded), bare, "m={m} n={n} pad={pad}");
            }
        }
    }
}
