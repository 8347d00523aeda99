//! Parity-of-ones-block sequences and their automata.
//!
//! For a block length `m >= 1`, the sequence `s_m(n)` is the parity of the
//! number of (possibly overlapping) occurrences of `1^m` in the binary
//! expansion of `n`. The first member is the Thue–Morse sequence; the second
//! is the 0/1 form of Rudin–Shapiro. This crate provides:
//!
//! - direct evaluation and the classical special cases ([`seq`]),
//! - a `2m`-state automaton over base-2 digits computing `s_m`, plus
//!   minimization, isomorphism checking, and exporters ([`dfa`]),
//! - the 2-kernel of `s_m`: index formulas, prefix tables, a closed form for
//!   the kernel characteristic functions, and the correspondence between
//!   kernel classes and automaton states ([`kernel`]),
//! - the structure of zero runs in `s_m`, including the maximal run length
//!   `2^m` ([`runs`]),
//! - binary words and the value/concatenation dictionary ([`bits`]).

pub mod bits;
pub mod dfa;
pub mod error;
pub mod kernel;
pub mod runs;
pub mod seq;

pub use bits::{dict_form, has_vile_suffix, BitString, DictCase};
pub use dfa::{build_family_dfao, Dfao};
pub use error::{Error, Result};
pub use kernel::{
    char_fn_prefix, check_correspondence, explore_kernel, kernel_dfao, kernel_index,
    kernel_prefix, kernel_table, kernel_table_with_prefix_len, CorrespondenceReport, KernelClass,
    KernelTable,
};
pub use runs::{binary_shape_check, claims, is_run, longest_run_in_prefix, RunClaim};
pub use seq::FamilyParam;
