//! Deterministic finite automata with output (DFAO) over the alphabet {0,1}.
//!
//! A DFAO computes a sequence by reading the binary digits of `n`
//! most-significant first and emitting the output bit of the terminal state.
//! [`build_family_dfao`] constructs the `2m`-state machine for `s_m`; the
//! rest of the module is generic: evaluation, Moore minimization, canonical
//! renumbering, isomorphism checks, and DOT/Walnut/JSON exchange formats.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::seq::FamilyParam;

/// A complete DFAO: per-state transitions on inputs 0 and 1, a per-state
/// output bit, and an initial state. Every state is reachable from the
/// initial state; the constructor discards unreachable ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfao {
    initial: usize,
    transitions: Vec<[usize; 2]>,
    outputs: Vec<u8>,
}

impl Dfao {
    /// Validates and builds a DFAO. `transitions[s][b]` is the successor of
    /// state `s` on input bit `b`; `outputs[s]` is its output bit. States
    /// unreachable from `initial` are dropped (surviving states keep their
    /// relative order).
    pub fn new(initial: usize, transitions: Vec<[usize; 2]>, outputs: Vec<u8>) -> Result<Self> {
        let n = transitions.len();
        if n == 0 {
            return Err(Error::InvalidDfao("no states".into()));
        }
        if outputs.len() != n {
            return Err(Error::InvalidDfao(format!(
                "{} states but {} outputs",
                n,
                outputs.len()
            )));
        }
        if initial >= n {
            return Err(Error::InvalidDfao(format!(
                "initial state {initial} out of range"
            )));
        }
        if let Some(&o) = outputs.iter().find(|&&o| o > 1) {
            return Err(Error::InvalidDfao(format!("output {o} is not a bit")));
        }
        if let Some(t) = transitions.iter().flatten().find(|&&t| t >= n) {
            return Err(Error::InvalidDfao(format!("transition target {t} out of range")));
        }

        // Reachability pass: keep only states reachable from `initial`.
        let mut seen = vec![false; n];
        let mut stack = vec![initial];
        seen[initial] = true;
        while let Some(s) = stack.pop() {
            for &t in &transitions[s] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        if seen.iter().all(|&r| r) {
            return Ok(Self { initial, transitions, outputs });
        }
        let mut remap = vec![usize::MAX; n];
        let mut kept = 0;
        for (s, &r) in seen.iter().enumerate() {
            if r {
                remap[s] = kept;
                kept += 1;
            }
        }
        let transitions = transitions
            .iter()
            .enumerate()
            .filter(|&(s, _)| seen[s])
            .map(|(_, t)| [remap[t[0]], remap[t[1]]])
            .collect();
        let outputs = outputs
            .iter()
            .enumerate()
            .filter(|&(s, _)| seen[s])
            .map(|(_, &o)| o)
            .collect();
        Ok(Self { initial: remap[initial], transitions, outputs })
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn output(&self, state: usize) -> u8 {
        self.outputs[state]
    }

    pub fn next(&self, state: usize, bit: u8) -> usize {
        assert!(bit <= 1, "input must be a bit");
        self.transitions[state][bit as usize]
    }

    /// Runs the machine from `state` over `digits`, returning the state
    /// reached.
    pub fn run(&self, state: usize, digits: &[u8]) -> usize {
        digits.iter().fold(state, |s, &d| self.next(s, d))
    }

    /// State reached after consuming `w` from the initial state; the empty
    /// word returns the initial state itself.
    pub fn terminal_state(&self, w: &BitString) -> usize {
        self.run(self.initial, w.digits())
    }

    /// Output after reading the binary expansion of `n`, most-significant
    /// digit first. Leading zeros do not affect the result whenever
    /// `next(initial, 0) == initial`.
    pub fn eval(&self, n: u64) -> u8 {
        self.outputs[self.terminal_state(&BitString::from_value(n))]
    }

    /// Renumbers states in breadth-first discovery order from the initial
    /// state, following the 0-edge before the 1-edge. Two machines are
    /// literally equal after this exactly when they are isomorphic.
    pub fn canonicalized(&self) -> Self {
        let n = self.state_count();
        let mut order = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        order[self.initial] = 0;
        queue.push_back(self.initial);
        let mut next_id = 1;
        while let Some(s) = queue.pop_front() {
            for &t in &self.transitions[s] {
                if order[t] == usize::MAX {
                    order[t] = next_id;
                    next_id += 1;
                    queue.push_back(t);
                }
            }
        }
        let mut transitions = vec![[0usize; 2]; n];
        let mut outputs = vec![0u8; n];
        for s in 0..n {
            transitions[order[s]] = [order[self.transitions[s][0]], order[self.transitions[s][1]]];
            outputs[order[s]] = self.outputs[s];
        }
        Self { initial: 0, transitions, outputs }
    }

    /// Minimal DFAO computing the same function, in canonical numbering.
    ///
    /// Moore partition refinement: start from the output partition and split
    /// blocks until the (block, successor blocks) signature is constant on
    /// every block.
    pub fn minimize(&self) -> Self {
        let n = self.state_count();
        let mut block: Vec<usize> = self.outputs.iter().map(|&o| o as usize).collect();
        let mut block_count = block.iter().max().unwrap() + 1;
        loop {
            let mut ids: HashMap<(usize, usize, usize), usize> = HashMap::new();
            let mut refined = vec![0usize; n];
            for s in 0..n {
                let sig = (
                    block[s],
                    block[self.transitions[s][0]],
                    block[self.transitions[s][1]],
                );
                let fresh = ids.len();
                refined[s] = *ids.entry(sig).or_insert(fresh);
            }
            if ids.len() == block_count {
                break;
            }
            block_count = ids.len();
            block = refined;
        }
        let mut transitions = vec![[0usize; 2]; block_count];
        let mut outputs = vec![0u8; block_count];
        for s in 0..n {
            transitions[block[s]] = [block[self.transitions[s][0]], block[self.transitions[s][1]]];
            outputs[block[s]] = self.outputs[s];
        }
        Self { initial: block[self.initial], transitions, outputs }.canonicalized()
    }

    /// True iff some relabeling of states maps one machine onto the other,
    /// preserving initial state, transitions, and outputs.
    pub fn isomorphic(&self, other: &Self) -> bool {
        self.state_count() == other.state_count()
            && self.canonicalized() == other.canonicalized()
    }

    /// Checks a specific correspondence: `map[s]` is the claimed counterpart
    /// in `other` of state `s`. Errors unless `map` is a bijection between
    /// the two state sets; otherwise reports whether it commutes with the
    /// transitions and preserves outputs and the initial state.
    pub fn isomorphic_under(&self, other: &Self, map: &[usize]) -> Result<bool> {
        let n = self.state_count();
        if map.len() != n || other.state_count() != n {
            return Err(Error::InvalidCorrespondence);
        }
        let mut hit = vec![false; n];
        for &t in map {
            if t >= n || hit[t] {
                return Err(Error::InvalidCorrespondence);
            }
            hit[t] = true;
        }
        if map[self.initial] != other.initial {
            return Ok(false);
        }
        for s in 0..n {
            if self.outputs[s] != other.outputs[map[s]] {
                return Ok(false);
            }
            for b in 0..2 {
                if map[self.transitions[s][b]] != other.transitions[map[s]][b] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Shortest word on which states `i` and `j` produce different outputs,
    /// found by breadth-first search over state pairs. The empty word is
    /// returned when the outputs already differ; `None` means the states are
    /// equivalent.
    pub fn separating_word(&self, i: usize, j: usize) -> Option<BitString> {
        let n = self.state_count();
        let key = |a: usize, b: usize| a * n + b;
        let mut parent: HashMap<usize, (usize, u8)> = HashMap::new();
        let mut queue = VecDeque::new();
        queue.push_back(key(i, j));
        parent.insert(key(i, j), (usize::MAX, 2));
        while let Some(k) = queue.pop_front() {
            let (a, b) = (k / n, k % n);
            if self.outputs[a] != self.outputs[b] {
                let mut word = Vec::new();
                let mut cur = k;
                loop {
                    let &(prev, bit) = parent.get(&cur).unwrap();
                    if prev == usize::MAX {
                        break;
                    }
                    word.push(bit);
                    cur = prev;
                }
                word.reverse();
                return Some(BitString::from_digits(word).unwrap());
            }
            for bit in 0..2u8 {
                let next = key(self.next(a, bit), self.next(b, bit));
                parent.entry(next).or_insert_with(|| {
                    queue.push_back(next);
                    (k, bit)
                });
            }
        }
        None
    }

    /// DOT digraph, states in canonical order. The initial state is drawn
    /// with a heavier border; there is exactly one edge line per
    /// (state, input) pair.
    pub fn export_dot(&self) -> String {
        let d = self.canonicalized();
        let mut out = String::new();
        out.push_str("digraph dfao {\n");
        out.push_str("  rankdir=LR;\n");
        out.push_str("  node [shape=circle];\n");
        for s in 0..d.state_count() {
            let init = if s == d.initial { " penwidth=2" } else { "" };
            let _ = writeln!(out, "  {s} [label=\"q{s}/{}\"{init}];", d.outputs[s]);
        }
        for s in 0..d.state_count() {
            for b in 0..2 {
                let _ = writeln!(out, "  {s} -> {} [label=\"{b}\"];", d.transitions[s][b]);
            }
        }
        out.push_str("}\n");
        out
    }

    /// Walnut-style automaton text: header `msd_2`, then for each state in
    /// canonical order a line `<id> <output>` followed by its two transition
    /// lines `<bit> -> <dest>`. State 0 is the initial state.
    pub fn export_walnut(&self) -> String {
        let d = self.canonicalized();
        let mut out = String::from("msd_2\n");
        for s in 0..d.state_count() {
            let _ = writeln!(out, "{s} {}", d.outputs[s]);
            for b in 0..2 {
                let _ = writeln!(out, "{b} -> {}", d.transitions[s][b]);
            }
        }
        out
    }

    /// JSON rendering of the schema
    /// `{states, initial, transitions, outputs}`, states in canonical order.
    pub fn export_json(&self) -> String {
        let d = self.canonicalized();
        let doc = DfaoJson {
            states: d.state_count(),
            initial: d.initial,
            transitions: d.transitions.clone(),
            outputs: d.outputs.clone(),
        };
        serde_json::to_string(&doc).expect("plain data serializes")
    }

    /// Parses the [`export_json`](Self::export_json) schema.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DfaoJson = serde_json::from_str(text)?;
        if doc.states != doc.transitions.len() {
            return Err(Error::InvalidDfao(format!(
                "states field says {} but {} transition rows given",
                doc.states,
                doc.transitions.len()
            )));
        }
        Self::new(doc.initial, doc.transitions, doc.outputs)
    }

    /// Parses the [`export_walnut`](Self::export_walnut) format. Blank lines
    /// between state blocks are tolerated; the initial state is state 0.
    pub fn from_walnut(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        match lines.next() {
            Some("msd_2") => {}
            other => {
                return Err(Error::WalnutParse(format!(
                    "expected msd_2 header, found {other:?}"
                )))
            }
        }
        // state id -> (output, [dest on 0, dest on 1])
        let mut states: HashMap<usize, (u8, [Option<usize>; 2])> = HashMap::new();
        let mut current: Option<usize> = None;
        for line in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [id, output] => {
                    let id: usize = id
                        .parse()
                        .map_err(|_| Error::WalnutParse(format!("bad state id in {line:?}")))?;
                    let output: u8 = output
                        .parse()
                        .map_err(|_| Error::WalnutParse(format!("bad output in {line:?}")))?;
                    if states.insert(id, (output, [None, None])).is_some() {
                        return Err(Error::WalnutParse(format!("duplicate state {id}")));
                    }
                    current = Some(id);
                }
                [bit, "->", dest] => {
                    let s = current
                        .ok_or_else(|| Error::WalnutParse("transition before any state".into()))?;
                    let bit: usize = match *bit {
                        "0" => 0,
                        "1" => 1,
                        other => {
                            return Err(Error::WalnutParse(format!("bad input bit {other:?}")))
                        }
                    };
                    let dest: usize = dest
                        .parse()
                        .map_err(|_| Error::WalnutParse(format!("bad destination in {line:?}")))?;
                    let slot = &mut states.get_mut(&s).unwrap().1[bit];
                    if slot.replace(dest).is_some() {
                        return Err(Error::WalnutParse(format!(
                            "duplicate transition {bit} from state {s}"
                        )));
                    }
                }
                _ => return Err(Error::WalnutParse(format!("unrecognized line {line:?}"))),
            }
        }
        let n = states.len();
        let mut transitions = vec![[0usize; 2]; n];
        let mut outputs = vec![0u8; n];
        for s in 0..n {
            let &(output, dests) = states
                .get(&s)
                .ok_or_else(|| Error::WalnutParse(format!("missing state {s}")))?;
            outputs[s] = output;
            for b in 0..2 {
                transitions[s][b] = dests[b].ok_or_else(|| {
                    Error::WalnutParse(format!("state {s} lacks a transition on {b}"))
                })?;
            }
        }
        Self::new(0, transitions, outputs)
    }
}

#[derive(Serialize, Deserialize)]
struct DfaoJson {
    states: usize,
    initial: usize,
    transitions: Vec<[usize; 2]>,
    outputs: Vec<u8>,
}

/// The `2m`-state machine computing `s_m`.
///
/// States: `q_i` with output 0 for `i < m` and 1 otherwise. For `m >= 2`,
/// `q_i` with `i <= m-2` means "even occurrence count so far, `i` trailing
/// ones"; `q_{m+1+i}` the same with odd count; `q_{m-1}` and `q_m` absorb
/// all longer trailing-one runs, alternating as each additional 1 completes
/// another overlapping block. Transitions:
///
/// - on 0: `q_i -> q_0` for `i <= m-1`, `q_i -> q_{m+1}` for `i >= m`;
/// - on 1: `q_i -> q_{i+1}`, except `q_m -> q_{m-1}` and `q_{2m-1} -> q_m`.
///
/// `m = 1` degenerates (both exceptions name the same state), so it is
/// built directly as the two-state machine toggling on input 1.
pub fn build_family_dfao(m: FamilyParam) -> Dfao {
    let m = m.get() as usize;
    if m == 1 {
        return Dfao::new(0, vec![[0, 1], [1, 0]], vec![0, 1]).expect("valid by construction");
    }
    let count = 2 * m;
    let mut transitions = vec![[0usize; 2]; count];
    let mut outputs = vec![0u8; count];
    for i in 0..count {
        transitions[i][0] = if i < m { 0 } else { m + 1 };
        transitions[i][1] = if i == 2 * m - 1 {
            m
        } else if i == m {
            m - 1
        } else {
            i + 1
        };
        outputs[i] = u8::from(i >= m);
    }
    Dfao::new(0, transitions, outputs).expect("valid by construction")
}
