// SPDX-License-Identifier: Apache-2.0

//! Circuit synthesis from a permutation.
//!
//! Two backends: a transformation-based pass that fixes basis states in
//! ascending order using multi-control Toffoli gates, and an exact
//! iterative-deepening search for registers of at most three lines. Every
//! result is checked against the input permutation before it is returned.

use std::fmt;

use thiserror::Error;

use crate::forms::Pprm;
use crate::gates::{lower_mct_to_cnts, Circuit, Gate, GateError, GateKind};
use crate::perm::PermutationMap;

/// Widest register the exact search accepts.
pub const MAX_OPTIMAL_WIDTH: u32 = 3;

pub const DEFAULT_MAX_DEPTH: u32 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("no circuit with at most {max_depth} gates realizes the permutation")]
    DepthExhausted { max_depth: u32 },
    #[error("exact search supports up to {max} lines, got {width}")]
    UnsupportedWidth { width: u32, max: u32 },
    #[error("circuit has {circuit} lines but the permutation has {permutation}")]
    WidthMismatch { circuit: u32, permutation: u32 },
    #[error("max depth must be at least 1")]
    ZeroDepth,
    #[error(transparent)]
    Gate(#[from] GateError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Transform,
    Optimal,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Transform => f.write_str("transform"),
            Backend::Optimal => f.write_str("optimal"),
        }
    }
}

/// Gates a caller is willing to accept in the final circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum GateSet {
    /// NOT, CNOT, Toffoli and SWAP.
    Cnts,
    /// NOT and CNOT/Toffoli with any number of controls.
    #[default]
    Mct,
    /// CNOT only.
    Cnot,
}

impl GateSet {
    pub fn admits(&self, gate: &Gate) -> bool {
        match self {
            GateSet::Mct => gate.kind() != GateKind::Swap,
            GateSet::Cnts => gate.is_cnts(),
            GateSet::Cnot => gate.kind() == GateKind::Cnot,
        }
    }
}

impl fmt::Display for GateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateSet::Cnts => f.write_str("cnts"),
            GateSet::Mct => f.write_str("mct"),
            GateSet::Cnot => f.write_str("cnot"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_depth: u32,
    pub gate_set: GateSet,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_depth: DEFAULT_MAX_DEPTH,
            gate_set: GateSet::Cnts,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisResult {
    pub circuit: Circuit,
    pub backend: Backend,
    pub gate_count: usize,
    pub verified: bool,
    /// `(position, gate)` for every gate outside the requested gate set.
    pub lowering_report: Vec<(usize, Gate)>,
}

/// True iff the circuit realizes exactly `p`.
pub fn verify_circuit(circuit: &Circuit, p: &PermutationMap) -> Result<bool, SynthError> {
    if circuit.width() != p.width() {
        return Err(SynthError::WidthMismatch {
            circuit: circuit.width(),
            permutation: p.width(),
        });
    }
    Ok(p.images()
        .iter()
        .enumerate()
        .all(|(i, &out)| circuit.apply_index(i as u32) == out))
}

/// Total monomial count over all outputs.
pub fn pprm_cost(pprms: &[Pprm]) -> usize {
    pprms.iter().map(Pprm::len).sum()
}

fn finish(
    circuit: Circuit,
    p: &PermutationMap,
    backend: Backend,
    gate_set: GateSet,
) -> SynthesisResult {
    let lowered = lower_mct_to_cnts(&circuit).circuit;
    let verified = verify_circuit(&lowered, p).unwrap_or(false);
    assert!(
        verified,
        "{backend} synthesis produced a circuit that does not realize {p}"
    );
    let lowering_report = lowered
        .gates()
        .iter()
        .enumerate()
        .filter(|(_, g)| !gate_set.admits(g))
        .map(|(i, g)| (i, g.clone()))
        .collect();
    SynthesisResult {
        gate_count: lowered.len(),
        circuit: lowered,
        backend,
        verified,
        lowering_report,
    }
}

fn lines_of(mask: u32, width: u32) -> Vec<u32> {
    (0..width)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| width - b)
        .collect()
}

/// Residual permutation being driven to the identity, with its inverse kept
/// alongside so a gate only touches the states it actually moves.
struct Residual {
    width: u32,
    image: Vec<u32>,
    preimage: Vec<u32>,
}

impl Residual {
    fn new(p: &PermutationMap) -> Self {
        let image = p.images().to_vec();
        let mut preimage = vec![0; image.len()];
        for (i, &v) in image.iter().enumerate() {
            preimage[v as usize] = i as u32;
        }
        Self {
            width: p.width(),
            image,
            preimage,
        }
    }

    /// Applies a controlled NOT to the output side: every output value `v`
    /// with all `controls` bits set has `target` flipped.
    fn apply(&mut self, controls: u32, target: u32) {
        let full = (1u32 << self.width) - 1;
        let free = full & !controls & !target;
        let mut sub = free;
        loop {
            let v = controls | sub;
            let w = v | target;
            let (iv, iw) = (self.preimage[v as usize], self.preimage[w as usize]);
            self.image[iv as usize] = w;
            self.image[iw as usize] = v;
            self.preimage[v as usize] = iw;
            self.preimage[w as usize] = iv;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
}

/// Transformation-based synthesis.
///
/// For each input `i` in ascending order, gates are applied on the output
/// side until `i` maps to itself. Bits missing from the current image are
/// set first (controlled on the image's ones), then surplus bits are cleared
/// (controlled on the ones of `i`). Neither kind of gate can move an already
/// fixed smaller state. The circuit is the discovered gates in reverse.
pub fn synth_transform(p: &PermutationMap, gate_set: GateSet) -> SynthesisResult {
    let n = p.width();
    let mut residual = Residual::new(p);
    let mut found: Vec<Gate> = Vec::new();
    let mut emit = |residual: &mut Residual, controls: u32, target: u32| {
        residual.apply(controls, target);
        let t = n - target.trailing_zeros();
        found.push(Gate::mct(lines_of(controls, n), t).expect("distinct lines"));
    };

    for i in 0..1u32 << n {
        let v = residual.image[i as usize];
        if v != i {
            let mut missing = i & !v;
            let mut current = v;
            while missing != 0 {
                let bit = missing & missing.wrapping_neg();
                missing &= missing - 1;
                emit(&mut residual, current, bit);
                current |= bit;
            }
            let mut surplus = current & !i;
            while surplus != 0 {
                let bit = surplus & surplus.wrapping_neg();
                surplus &= surplus - 1;
                emit(&mut residual, i, bit);
            }
        }
        debug_assert!(
            (0..=i).all(|k| residual.image[k as usize] == k),
            "state below {i} disturbed"
        );
    }

    found.reverse();
    let circuit = Circuit::from_gates(n, found).expect("gates fit the register");
    finish(circuit, p, Backend::Transform, gate_set)
}

/// Candidate gates for the exact search, in canonical order: NOT by target,
/// CNOT by (control, target), Toffoli by (controls, target), SWAP by lines.
pub fn search_gates(width: u32, gate_set: GateSet) -> Vec<Gate> {
    let lines: Vec<u32> = (1..=width).collect();
    let mut gates = Vec::new();
    let with_not = gate_set != GateSet::Cnot;
    if with_not {
        gates.extend(lines.iter().map(|&t| Gate::Not { target: t }));
    }
    for &c in &lines {
        for &t in &lines {
            if c != t {
                gates.push(Gate::Cnot {
                    control: c,
                    target: t,
                });
            }
        }
    }
    if with_not {
        for &c1 in &lines {
            for &c2 in &lines[c1 as usize..] {
                for &t in &lines {
                    if t != c1 && t != c2 {
                        gates.push(Gate::Toffoli {
                            controls: [c1, c2],
                            target: t,
                        });
                    }
                }
            }
        }
    }
    if gate_set == GateSet::Cnts {
        for &a in &lines {
            for &b in &lines[a as usize..] {
                gates.push(Gate::Swap { a, b });
            }
        }
    }
    gates
}

type Table = [u8; 8];

struct Searcher {
    size: usize,
    gates: Vec<Table>,
    /// `skip[prev][next]`: `next` commutes with `prev` and sorts before it,
    /// so the pair is visited in the other order instead.
    skip: Vec<Vec<bool>>,
    target: Table,
    path: Vec<usize>,
}

impl Searcher {
    fn compose(&self, g: &Table, state: &Table) -> Table {
        let mut out = [0u8; 8];
        for i in 0..self.size {
            out[i] = g[state[i] as usize];
        }
        out
    }

    fn dfs(&mut self, state: &Table, remaining: u32) -> bool {
        if remaining == 0 {
            return state[..self.size] == self.target[..self.size];
        }
        for g in 0..self.gates.len() {
            if let Some(&prev) = self.path.last() {
                if prev == g || self.skip[prev][g] {
                    continue;
                }
            }
            let next = self.compose(&self.gates[g], state);
            self.path.push(g);
            if self.dfs(&next, remaining - 1) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Minimum-length circuit over the chosen gate set, by iterative deepening.
///
/// Among all minimum-length circuits the one first in canonical gate order is
/// returned, so results are deterministic.
pub fn synth_optimal(
    p: &PermutationMap,
    cfg: &SearchConfig,
) -> Result<SynthesisResult, SynthError> {
    let n = p.width();
    if n > MAX_OPTIMAL_WIDTH {
        return Err(SynthError::UnsupportedWidth {
            width: n,
            max: MAX_OPTIMAL_WIDTH,
        });
    }
    if cfg.max_depth == 0 {
        return Err(SynthError::ZeroDepth);
    }
    let size = p.len();
    let gate_list = search_gates(n, cfg.gate_set);
    let tables: Vec<Table> = gate_list
        .iter()
        .map(|g| {
            let mut t = [0u8; 8];
            for (i, slot) in t.iter_mut().enumerate().take(size) {
                *slot = g.apply_index(i as u32, n) as u8;
            }
            t
        })
        .collect();
    let mut target = [0u8; 8];
    for (slot, &v) in target.iter_mut().zip(p.images()) {
        *slot = v as u8;
    }
    let mut identity = [0u8; 8];
    for (i, slot) in identity.iter_mut().enumerate() {
        *slot = i as u8;
    }

    let mut searcher = Searcher {
        size,
        skip: Vec::new(),
        gates: tables,
        target,
        path: Vec::new(),
    };
    searcher.skip = (0..gate_list.len())
        .map(|a| {
            (0..gate_list.len())
                .map(|b| {
                    b < a && {
                        let ab = searcher.compose(&searcher.gates[a], &searcher.gates[b]);
                        let ba = searcher.compose(&searcher.gates[b], &searcher.gates[a]);
                        ab[..size] == ba[..size]
                    }
                })
                .collect()
        })
        .collect();

    for depth in 0..=cfg.max_depth {
        searcher.path.clear();
        if searcher.dfs(&identity, depth) {
            let gates = searcher
                .path
                .iter()
                .map(|&g| gate_list[g].clone())
                .collect();
            let circuit = Circuit::from_gates(n, gates)?;
            return Ok(finish(circuit, p, Backend::Optimal, cfg.gate_set));
        }
    }
    Err(SynthError::DepthExhausted {
        max_depth: cfg.max_depth,
    })
}
