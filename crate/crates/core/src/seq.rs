//! Brute-force sequence oracles.
//!
//! Everything here is computed directly from definitions — no automata — so
//! the automaton and kernel modules can be checked against these functions
//! without circularity. [`thue_morse`] and [`rudin_shapiro`] are implemented
//! by bit tricks that never touch [`BitString`], giving an independent
//! cross-check for `s(1, ·)` and `s(2, ·)`.

use std::fmt;

use crate::bits::BitString;
use crate::error::{Error, Result};

/// Block length `m >= 1` selecting the sequence `s_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyParam(u32);

impl FamilyParam {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidFamilyParam);
        }
        Ok(Self(m))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for FamilyParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u32> for FamilyParam {
    type Error = Error;

    fn try_from(m: u32) -> Result<Self> {
        Self::new(m)
    }
}

/// `s_m(n)`: parity of the possibly-overlapping occurrences of `1^m` in the
/// binary expansion of `n`.
pub fn s(m: FamilyParam, n: u64) -> u8 {
    let count = BitString::from_value(n).count_overlapping_ones_block(m.get() as usize);
    (count % 2) as u8
}

/// The first `count` terms `s(m, 0), ..., s(m, count-1)`.
pub fn s_prefix(m: FamilyParam, count: usize) -> Vec<u8> {
    (0..count as u64).map(|n| s(m, n)).collect()
}

/// Thue–Morse: parity of the number of ones in `n`'s binary expansion.
pub fn thue_morse(n: u64) -> u8 {
    (n.count_ones() & 1) as u8
}

/// Rudin–Shapiro in 0/1 form: parity of the number of (overlapping)
/// occurrences of `11` in `n`'s binary expansion. The classical ±1 sequence
/// is `(-1)^rudin_shapiro(n)`.
pub fn rudin_shapiro(n: u64) -> u8 {
    // n & (n >> 1) has a one exactly where an adjacent pair of ones starts.
    ((n & (n >> 1)).count_ones() & 1) as u8
}

/// True iff `n >= 1` and `n`'s binary expansion ends in an even number of
/// zeros (OEIS A003159).
pub fn is_vile(n: u64) -> bool {
    n >= 1 && n.trailing_zeros().is_multiple_of(2)
}

/// Increasing stream of all vile numbers.
pub fn vile_numbers() -> impl Iterator<Item = u64> {
    (1u64..).filter(|&n| is_vile(n))
}

/// The `k`-th vile number, 1-indexed: `vile(1) = 1, vile(2) = 3, ...`.
pub fn vile(k: u64) -> u64 {
    assert!(k >= 1, "vile numbers are 1-indexed");
    vile_numbers().nth(k as usize - 1).expect("unbounded stream")
}

/// Jacobsthal numbers: `J_0 = 0`, `J_1 = 1`, `J_k = J_{k-1} + 2 J_{k-2}`
/// (OEIS A001045).
pub fn jacobsthal(k: u32) -> u64 {
    let (mut prev, mut cur) = (0u64, 1u64);
    if k == 0 {
        return 0;
    }
    for _ in 1..k {
        let next = cur + 2 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Number of vile numbers `<= x`.
pub fn vile_count_upto(x: u64) -> u64 {
    (1..=x).filter(|&n| is_vile(n)).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(m: u32) -> FamilyParam {
        FamilyParam::new(m).unwrap()
    }

    #[test]
    fn family_param_rejects_zero() {
        assert!(matches!(FamilyParam::new(0), Err(Error::InvalidFamilyParam)));
        assert_eq!(FamilyParam::new(3).unwrap().get(), 3);
    }

    #[test]
    fn s_examples() {
        assert_eq!(s(fp(4), 15), 1);
        assert_eq!(s(fp(7), 0), 0);
        // "111" contains two overlapping "11".
        assert_eq!(s(fp(2), 7), 0);
    }

    #[test]
    fn s_prefix_examples() {
        assert_eq!(s_prefix(fp(1), 8), vec![0, 1, 1, 0, 1, 0, 0, 1]);
        assert_eq!(s_prefix(fp(2), 8), vec![0, 0, 0, 1, 0, 0, 1, 0]);
        assert_eq!(s_prefix(fp(5), 1), vec![0]);
    }

    #[test]
    fn s_vanishes_below_block_value() {
        // 1^m has value 2^m - 1, so no occurrence fits into smaller n.
        for m in 1..=10u32 {
            for n in 0..(1u64 << m) - 1 {
                assert_eq!(s(fp(m), n), 0, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn classical_oracle_examples() {
        assert_eq!(thue_morse(0), 0);
        assert_eq!(thue_morse(3), 0);
        assert_eq!(rudin_shapiro(3), 1);
    }

    #[test]
    fn s1_is_thue_morse_s2_is_rudin_shapiro() {
        for n in 0..1u64 << 12 {
            assert_eq!(s(fp(1), n), thue_morse(n), "n={n}");
            assert_eq!(s(fp(2), n), rudin_shapiro(n), "n={n}");
        }
    }

    /// Count adjacent one-pairs by walking the digit string.
    fn pair_scan_oracle(n: u64) -> u8 {
        let digits = BitString::from_value(n);
        let d = digits.digits();
        let mut count = 0;
        for i in 1..d.len() {
            if d[i - 1] == 1 && d[i] == 1 {
                count += 1;
            }
        }
        count % 2
    }

    #[test]
    fn rudin_shapiro_matches_pair_scan() {
        for n in 0..4096 {
            assert_eq!(rudin_shapiro(n), pair_scan_oracle(n), "n={n}");
        }
    }

    #[test]
    fn vile_examples() {
        assert!(!is_vile(2));
        assert!(is_vile(4));
        assert!(!is_vile(0));
        let first: Vec<u64> = vile_numbers().take(5).collect();
        assert_eq!(first, vec![1, 3, 4, 5, 7]);
        assert_eq!(vile(1), 1);
        assert_eq!(vile(5), 7);
    }

    #[test]
    fn vile_stream_is_increasing_and_vile() {
        let mut prev = 0;
        for v in vile_numbers().take(10_000) {
            assert!(v > prev);
            assert!(is_vile(v));
            prev = v;
        }
    }

    #[test]
    fn jacobsthal_examples() {
        let expected = [0u64, 1, 1, 3, 5, 11, 21, 43, 85];
        for (k, &want) in expected.iter().enumerate() {
            assert_eq!(jacobsthal(k as u32), want, "k={k}");
        }
    }

    #[test]
    fn jacobsthal_pair_sums_to_power_of_two() {
        for m in 1..=30u32 {
            assert_eq!(
                jacobsthal(m - 1) + jacobsthal(m),
                1u64 << (m - 1),
                "m={m}"
            );
        }
    }

    #[test]
    fn vile_count_examples() {
        assert_eq!(vile_count_upto(1), 1);
        assert_eq!(vile_count_upto(4), 3);
        assert_eq!(vile_count_upto(8), 5);
    }

    #[test]
    fn vile_count_at_powers_of_two_is_jacobsthal() {
        for i in 0..=14u32 {
            assert_eq!(vile_count_upto(1 << i), jacobsthal(i + 1), "i={i}");
        }
    }
}
