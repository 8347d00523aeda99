//! The 2-kernel of `s_m`.
//!
//! The 2-kernel of a sequence `t` is the set of decimations
//! `n -> t(2^e n + r)` with `0 <= r < 2^e`. For `s_m` it has exactly `2m`
//! distinct classes, with explicit index sequences: class `i` is
//! `n -> s_m(2^i n + 2^i - 1)` for `i <= m` and
//! `n -> s_m(2^i n + 2^i - 1 - 2^m)` for `m+1 <= i <= 2m-1`. Classes are
//! told apart by their length-`2^{m-1}` prefixes, whose characteristic
//! functions have a closed form in terms of Vile and Jacobsthal numbers
//! ([`char_fn_prefix`]). The classes form a DFAO ([`kernel_dfao`]) that is
//! isomorphic, under the identity correspondence `q_i <-> K_i`, to the
//! machine from [`build_family_dfao`] ([`check_correspondence`]); a generic
//! kernel exploration ([`explore_kernel`]) reaches the same machine from the
//! oracle alone.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::dfa::{build_family_dfao, Dfao};
use crate::error::{Error, Result};
use crate::seq::{self, FamilyParam};

/// One 2-kernel element: the decimation `n -> oracle(2^exponent n + residue)`
/// together with the stored prefix that identifies it during exploration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelClass {
    exponent: u32,
    residue: u64,
    prefix: Vec<u8>,
}

impl KernelClass {
    fn sample<F: Fn(u64) -> u8>(
        oracle: &F,
        exponent: u32,
        residue: u64,
        len: usize,
    ) -> Result<Self> {
        let step = 1u64
            .checked_shl(exponent)
            .filter(|_| exponent < 64)
            .ok_or(Error::Overflow("kernel class exponent"))?;
        debug_assert!(residue < step || (exponent == 0 && residue == 0));
        let mut prefix = Vec::with_capacity(len);
        for n in 0..len as u64 {
            let index = step
                .checked_mul(n)
                .and_then(|v| v.checked_add(residue))
                .ok_or(Error::Overflow("kernel class index"))?;
            prefix.push(oracle(index));
        }
        Ok(Self { exponent, residue, prefix })
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn prefix(&self) -> &[u8] {
        &self.prefix
    }
}

/// The `n`-th index of kernel class `i` of `s_m`:
/// `2^i n + 2^i - 1` for `i <= m`, `2^i n + 2^i - 1 - 2^m` above.
pub fn kernel_index(m: FamilyParam, i: u32, n: u64) -> Result<u64> {
    let mv = m.get();
    let max = 2 * mv - 1;
    if i > max {
        return Err(Error::KernelIndexOutOfRange { index: i, max });
    }
    let step = 1u64
        .checked_shl(i)
        .filter(|_| i < 64)
        .ok_or(Error::Overflow("kernel_index"))?;
    let residue = if i <= mv {
        step - 1
    } else {
        step - 1 - (1u64 << mv)
    };
    step.checked_mul(n)
        .and_then(|v| v.checked_add(residue))
        .ok_or(Error::Overflow("kernel_index"))
}

/// First `len` terms of kernel class `i`, computed by the brute-force
/// sequence oracle.
pub fn kernel_prefix(m: FamilyParam, i: u32, len: usize) -> Result<Vec<u8>> {
    (0..len as u64)
        .map(|n| kernel_index(m, i, n).map(|index| seq::s(m, index)))
        .collect()
}

/// Closed form for the length-`2^{m-1}` prefix of kernel class `i`:
///
/// - `i = 0`: all zeros;
/// - `1 <= i <= m`: ones exactly at positions `2^{m-i} vile(k) - 1` for
///   `1 <= k <= jacobsthal(i)` (those that fall inside the prefix);
/// - `m+1 <= i <= 2m-1`: the bitwise complement of class `i - (m+1)`.
pub fn char_fn_prefix(m: FamilyParam, i: u32) -> Result<Vec<u8>> {
    let mv = m.get();
    let max = 2 * mv - 1;
    if i > max {
        return Err(Error::KernelIndexOutOfRange { index: i, max });
    }
    let len = 1usize << (mv - 1);
    if i == 0 {
        return Ok(vec![0; len]);
    }
    if i <= mv {
        let mut row = vec![0u8; len];
        let scale = 1u64 << (mv - i);
        for v in seq::vile_numbers().take(seq::jacobsthal(i) as usize) {
            let pos = scale * v - 1;
            if (pos as usize) < len {
                row[pos as usize] = 1;
            }
        }
        Ok(row)
    } else {
        let base = char_fn_prefix(m, i - (mv + 1))?;
        Ok(base.iter().map(|&b| 1 - b).collect())
    }
}

/// The `2m` kernel-class prefixes of `s_m`, pairwise distinct by
/// construction (building one fails otherwise).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelTable {
    m: FamilyParam,
    rows: Vec<Vec<u8>>,
}

impl KernelTable {
    fn validated(m: FamilyParam, rows: Vec<Vec<u8>>) -> Result<Self> {
        let mut seen: HashMap<&[u8], usize> = HashMap::new();
        for (i, row) in rows.iter().enumerate() {
            if let Some(&first) = seen.get(row.as_slice()) {
                return Err(Error::KernelClassesNotDistinct { first, second: i });
            }
            seen.insert(row, i);
        }
        Ok(Self { m, rows })
    }

    pub fn m(&self) -> FamilyParam {
        self.m
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.rows[i]
    }

    /// Row `i` as a digit string, e.g. `"01000101"`.
    pub fn row_string(&self, i: usize) -> String {
        self.rows[i].iter().map(|&b| char::from(b'0' + b)).collect()
    }

    /// Aligned text rendering, one `K_i  <digits>` line per class.
    pub fn to_text(&self) -> String {
        let width = format!("K_{}", self.rows.len() - 1).len();
        let mut out = String::new();
        for i in 0..self.rows.len() {
            let label = format!("K_{i}");
            let _ = writeln!(out, "{label:<width$}  {}", self.row_string(i));
        }
        out
    }
}

/// Kernel table at the canonical prefix length `2^{m-1}`, rows from the
/// closed form.
pub fn kernel_table(m: FamilyParam) -> Result<KernelTable> {
    let rows = (0..2 * m.get())
        .map(|i| char_fn_prefix(m, i))
        .collect::<Result<Vec<_>>>()?;
    KernelTable::validated(m, rows)
}

/// Kernel table with an explicit prefix length, rows from the sequence
/// oracle. Longer prefixes keep the rows distinct; shorter ones may not,
/// in which case construction fails.
pub fn kernel_table_with_prefix_len(m: FamilyParam, len: usize) -> Result<KernelTable> {
    let rows = (0..2 * m.get())
        .map(|i| kernel_prefix(m, i, len))
        .collect::<Result<Vec<_>>>()?;
    KernelTable::validated(m, rows)
}

/// The DFAO formed by the `2m` kernel classes: state `i` is class `K_i`,
/// and the child of class `(2^i n + r)` on input bit `a` is the class whose
/// prefix equals that of `(2^{i+1} n + r + a 2^i)`. Output of a state is
/// the first prefix term; the initial state is `K_0` (the sequence itself).
pub fn kernel_dfao(m: FamilyParam) -> Result<Dfao> {
    let mv = m.get();
    let count = (2 * mv) as usize;
    let len = 1usize << (mv - 1);
    let rows: Vec<Vec<u8>> = (0..2 * mv)
        .map(|i| kernel_prefix(m, i, len))
        .collect::<Result<_>>()?;
    let mut index: HashMap<&[u8], usize> = HashMap::new();
    for (i, row) in rows.iter().enumerate() {
        if let Some(&first) = index.get(row.as_slice()) {
            return Err(Error::KernelClassesNotDistinct { first, second: i });
        }
        index.insert(row, i);
    }

    let mut transitions = vec![[0usize; 2]; count];
    let mut outputs = vec![0u8; count];
    for i in 0..count {
        let step = 1u64 << i;
        let residue = kernel_index(m, i as u32, 0)?;
        for a in 0..2u64 {
            let child: Vec<u8> = (0..len as u64)
                .map(|n| seq::s(m, 2 * step * n + residue + a * step))
                .collect();
            let target = *index
                .get(child.as_slice())
                .ok_or(Error::KernelNotClosed { class: i, bit: a as u8 })?;
            transitions[i][a as usize] = target;
        }
        outputs[i] = rows[i][0];
    }
    Dfao::new(0, transitions, outputs)
}

/// Generic kernel exploration: breadth-first closure of the decimation map
/// starting from the whole sequence, classes identified by length-`prefix_len`
/// prefixes. Returns the resulting DFAO together with one representative
/// `(exponent, residue, prefix)` per class, in state order.
///
/// Fails with a budget error if more than `max_classes` distinct prefixes
/// appear — either the sequence is not 2-automatic at this scale or the
/// prefix length is too short to close the map.
pub fn explore_kernel<F: Fn(u64) -> u8>(
    oracle: F,
    prefix_len: usize,
    max_classes: usize,
) -> Result<(Dfao, Vec<KernelClass>)> {
    assert!(prefix_len >= 1, "prefix length must be positive");
    let mut classes: Vec<KernelClass> = Vec::new();
    let mut by_prefix: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut transitions: Vec<[usize; 2]> = Vec::new();

    let root = KernelClass::sample(&oracle, 0, 0, prefix_len)?;
    by_prefix.insert(root.prefix.clone(), 0);
    classes.push(root);
    transitions.push([usize::MAX; 2]);

    let mut cursor = 0;
    while cursor < classes.len() {
        let (e, r) = (classes[cursor].exponent, classes[cursor].residue);
        let step = 1u64
            .checked_shl(e)
            .filter(|_| e < 64)
            .ok_or(Error::Overflow("explore_kernel"))?;
        for a in 0..2u64 {
            let child_residue = r
                .checked_add(a * step)
                .ok_or(Error::Overflow("explore_kernel"))?;
            let child = KernelClass::sample(&oracle, e + 1, child_residue, prefix_len)?;
            let id = match by_prefix.get(&child.prefix) {
                Some(&id) => id,
                None => {
                    if classes.len() >= max_classes {
                        return Err(Error::KernelBudgetExceeded { max_classes });
                    }
                    let id = classes.len();
                    by_prefix.insert(child.prefix.clone(), id);
                    classes.push(child);
                    transitions.push([usize::MAX; 2]);
                    id
                }
            };
            transitions[cursor][a as usize] = id;
        }
        cursor += 1;
    }

    let outputs: Vec<u8> = classes.iter().map(|c| c.prefix[0]).collect();
    let dfao = Dfao::new(0, transitions, outputs)?;
    Ok((dfao, classes))
}

/// Outcome of [`check_correspondence`]: `holds` plus a diagnostic naming the
/// first mismatch when it fails.
#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    pub holds: bool,
    pub detail: String,
}

/// Checks that the explicit machine and the kernel agree three ways: the
/// family machine and [`kernel_dfao`] are isomorphic under the identity
/// correspondence `q_i <-> K_i`, and a from-scratch [`explore_kernel`] run
/// (prefix length `2^{m-1}`, budget `4m`) reproduces the same machine.
pub fn check_correspondence(m: FamilyParam) -> CorrespondenceReport {
    let fail = |detail: String| CorrespondenceReport { holds: false, detail };

    let family = build_family_dfao(m);
    let kernel = match kernel_dfao(m) {
        Ok(d) => d,
        Err(e) => return fail(e.to_string()),
    };
    let identity: Vec<usize> = (0..family.state_count()).collect();
    match family.isomorphic_under(&kernel, &identity) {
        Ok(true) => {}
        Ok(false) => return fail(first_identity_mismatch(&family, &kernel)),
        Err(e) => return fail(e.to_string()),
    }

    let len = 1usize << (m.get() - 1);
    let explored = match explore_kernel(|n| seq::s(m, n), len, 4 * m.get() as usize) {
        Ok((d, _)) => d,
        Err(e) => return fail(e.to_string()),
    };
    if explored.state_count() != family.state_count() {
        return fail(format!(
            "exploration closed with {} classes, machine has {} states",
            explored.state_count(),
            family.state_count()
        ));
    }
    if !explored.isomorphic(&family) {
        return fail("explored kernel machine is not isomorphic to the family machine".into());
    }
    CorrespondenceReport { holds: true, detail: String::new() }
}

fn first_identity_mismatch(family: &Dfao, kernel: &Dfao) -> String {
    for s in 0..family.state_count() {
        if family.output(s) != kernel.output(s) {
            return format!(
                "q_{s} outputs {} but K_{s} starts with {}",
                family.output(s),
                kernel.output(s)
            );
        }
        for bit in 0..2u8 {
            if family.next(s, bit) != kernel.next(s, bit) {
                return format!(
                    "on input {bit}: q_{s} -> q_{} but K_{s} -> K_{}",
                    family.next(s, bit),
                    kernel.next(s, bit)
                );
            }
        }
    }
    "no mismatch found".into()
}
