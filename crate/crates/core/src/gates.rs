// SPDX-License-Identifier: Apache-2.0

//! NOT / CNOT / Toffoli / SWAP gates plus multi-control Toffoli, and circuits
//! built from them. Lines are 1-based; line 1 is the most significant bit of
//! a basis index.

use std::fmt;

use thiserror::Error;

use crate::perm::PermutationMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GateError {
    #[error("gate lines must be distinct, got {0:?}")]
    LinesNotDistinct(Vec<u32>),
    #[error("line {line} is outside a {width}-line circuit")]
    LineOutOfRange { line: u32, width: u32 },
    #[error("circuit width must be between 1 and 31, got {0}")]
    BadWidth(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Not,
    Cnot,
    Toffoli,
    Swap,
    Mct,
}

/// A single reversible gate. Control lists are kept sorted ascending and
/// swap lines are stored as `(low, high)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    Not { target: u32 },
    Cnot { control: u32, target: u32 },
    Toffoli { controls: [u32; 2], target: u32 },
    Swap { a: u32, b: u32 },
    Mct { controls: Vec<u32>, target: u32 },
}

impl Gate {
    pub fn not(target: u32) -> Result<Self, GateError> {
        check_lines(&[target])?;
        Ok(Gate::Not { target })
    }

    pub fn cnot(control: u32, target: u32) -> Result<Self, GateError> {
        check_lines(&[control, target])?;
        Ok(Gate::Cnot { control, target })
    }

    pub fn toffoli(c1: u32, c2: u32, target: u32) -> Result<Self, GateError> {
        check_lines(&[c1, c2, target])?;
        Ok(Gate::Toffoli {
            controls: [c1.min(c2), c1.max(c2)],
            target,
        })
    }

    pub fn swap(a: u32, b: u32) -> Result<Self, GateError> {
        check_lines(&[a, b])?;
        Ok(Gate::Swap {
            a: a.min(b),
            b: a.max(b),
        })
    }

    /// Multi-control Toffoli with any number of controls (including none).
    pub fn mct(controls: impl IntoIterator<Item = u32>, target: u32) -> Result<Self, GateError> {
        let mut controls: Vec<u32> = controls.into_iter().collect();
        let mut all = controls.clone();
        all.push(target);
        check_lines(&all)?;
        controls.sort_unstable();
        Ok(Gate::Mct { controls, target })
    }

    /// Picks the narrowest CNTS form for `controls.len() <= 2`, `Mct` otherwise.
    pub fn controlled_not(controls: &[u32], target: u32) -> Result<Self, GateError> {
        match *controls {
            [] => Gate::not(target),
            [c] => Gate::cnot(c, target),
            [c1, c2] => Gate::toffoli(c1, c2, target),
            _ => Gate::mct(controls.iter().copied(), target),
        }
    }

    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Not { .. } => GateKind::Not,
            Gate::Cnot { .. } => GateKind::Cnot,
            Gate::Toffoli { .. } => GateKind::Toffoli,
            Gate::Swap { .. } => GateKind::Swap,
            Gate::Mct { .. } => GateKind::Mct,
        }
    }

    /// Control lines, sorted. Empty for `Not` and `Swap`.
    pub fn controls(&self) -> &[u32] {
        match self {
            Gate::Not { .. } | Gate::Swap { .. } => &[],
            Gate::Cnot { control, .. } => std::slice::from_ref(control),
            Gate::Toffoli { controls, .. } => controls,
            Gate::Mct { controls, .. } => controls,
        }
    }

    /// Target line; `None` for `Swap`.
    pub fn target(&self) -> Option<u32> {
        match self {
            Gate::Not { target }
            | Gate::Cnot { target, .. }
            | Gate::Toffoli { target, .. }
            | Gate::Mct { target, .. } => Some(*target),
            Gate::Swap { .. } => None,
        }
    }

    /// Every line the gate touches.
    pub fn lines(&self) -> Vec<u32> {
        match self {
            Gate::Swap { a, b } => vec![*a, *b],
            _ => {
                let mut v = self.controls().to_vec();
                v.extend(self.target());
                v
            }
        }
    }

    pub fn max_line(&self) -> u32 {
        self.lines().into_iter().max().unwrap_or(0)
    }

    /// True for gates in the NOT/CNOT/Toffoli/SWAP library. An `Mct` with at
    /// most two controls counts, since it lowers trivially.
    pub fn is_cnts(&self) -> bool {
        match self {
            Gate::Mct { controls, .. } => controls.len() <= 2,
            _ => true,
        }
    }

    /// Applies the gate to one basis index of a `width`-line register.
    #[inline]
    pub fn apply_index(&self, index: u32, width: u32) -> u32 {
        let bit = |line: u32| 1u32 << (width - line);
        match self {
            Gate::Swap { a, b } => {
                let (ba, bb) = (bit(*a), bit(*b));
                let va = index & ba != 0;
                let vb = index & bb != 0;
                if va != vb {
                    index ^ ba ^ bb
                } else {
                    index
                }
            }
            _ => {
                let mask = self.controls().iter().fold(0, |m, &c| m | bit(c));
                if index & mask == mask {
                    index ^ bit(self.target().expect("non-swap gate has a target"))
                } else {
                    index
                }
            }
        }
    }

    pub fn check_width(&self, width: u32) -> Result<(), GateError> {
        check_width(width)?;
        let max = self.max_line();
        if max > width {
            return Err(GateError::LineOutOfRange { line: max, width });
        }
        Ok(())
    }

    /// Permutation of a `width`-line circuit holding only this gate.
    pub fn permutation(&self, width: u32) -> Result<PermutationMap, GateError> {
        self.check_width(width)?;
        let image = (0..1u32 << width)
            .map(|i| self.apply_index(i, width))
            .collect();
        Ok(PermutationMap::from_zero_based(image).expect("gate maps are bijections"))
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            Gate::Not { target } => write!(f, "Not({target})"),
            Gate::Cnot { control, target } => write!(f, "Cnot({control};{target})"),
            Gate::Toffoli { controls, target } => {
                write!(f, "Toffoli({};{target})", join(controls))
            }
            Gate::Swap { a, b } => write!(f, "Swap({a},{b})"),
            Gate::Mct { controls, target } => write!(f, "Mct({{{}}};{target})", join(controls)),
        }
    }
}

fn check_lines(lines: &[u32]) -> Result<(), GateError> {
    if let Some(&zero) = lines.iter().find(|&&l| l == 0) {
        return Err(GateError::LineOutOfRange {
            line: zero,
            width: 0,
        });
    }
    let mut sorted = lines.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(GateError::LinesNotDistinct(lines.to_vec()));
    }
    Ok(())
}

fn check_width(width: u32) -> Result<(), GateError> {
    if !(1..=31).contains(&width) {
        return Err(GateError::BadWidth(width));
    }
    Ok(())
}

/// Ordered gate list; index 0 executes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    width: u32,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(width: u32) -> Result<Self, GateError> {
        check_width(width)?;
        Ok(Self {
            width,
            gates: Vec::new(),
        })
    }

    pub fn from_gates(width: u32, gates: Vec<Gate>) -> Result<Self, GateError> {
        check_width(width)?;
        for g in &gates {
            g.check_width(width)?;
        }
        Ok(Self { width, gates })
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), GateError> {
        gate.check_width(self.width)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Appends `other`'s gates after this circuit's gates.
    pub fn append(&mut self, other: &Circuit) -> Result<(), GateError> {
        for g in &other.gates {
            self.push(g.clone())?;
        }
        Ok(())
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn into_gates(self) -> Vec<Gate> {
        self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Runs every gate in order on one basis index.
    pub fn apply_index(&self, index: u32) -> u32 {
        self.gates
            .iter()
            .fold(index, |i, g| g.apply_index(i, self.width))
    }

    /// Permutation of the whole cascade: `last ∘ ... ∘ first`.
    pub fn permutation(&self) -> PermutationMap {
        let image = (0..1u32 << self.width)
            .map(|i| self.apply_index(i))
            .collect();
        PermutationMap::from_zero_based(image).expect("gate cascades are bijections")
    }

    /// Same gates in reverse order. Every gate here is an involution, so this
    /// realizes the inverse permutation.
    pub fn reversed(&self) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates.iter().rev().cloned().collect(),
        }
    }
}

/// Rewrites a Toffoli on arbitrary distinct lines into adjacent-line SWAPs
/// around a single Toffoli acting on three consecutive lines.
///
/// `c1`, `c2` are the controls and `target` the target. The outermost of the
/// three lines are walked next to the middle one, the Toffoli is applied,
/// and the swaps are undone in mirror order.
pub fn decompose_nonadjacent_toffoli(
    c1: u32,
    c2: u32,
    target: u32,
    width: u32,
) -> Result<Circuit, GateError> {
    let original = Gate::toffoli(c1, c2, target)?;
    original.check_width(width)?;

    let mut sorted = [c1, c2, target];
    sorted.sort_unstable();
    let [lo, mid, hi] = sorted;

    let mut ladder = Vec::new();
    // lo climbs to mid - 1
    for t in lo..mid - 1 {
        ladder.push(Gate::swap(t, t + 1)?);
    }
    // hi descends to mid + 1
    for t in (mid + 2..=hi).rev() {
        ladder.push(Gate::swap(t - 1, t)?);
    }

    let moved = |line: u32| match line {
        l if l == lo => mid - 1,
        l if l == hi => mid + 1,
        l => l,
    };
    let core = Gate::toffoli(moved(c1), moved(c2), moved(target))?;

    let mut gates = ladder.clone();
    gates.push(core);
    gates.extend(ladder.into_iter().rev());
    Circuit::from_gates(width, gates)
}

/// Three CNOTs exchanging lines `a` and `b`.
pub fn swap_to_cnots(a: u32, b: u32, width: u32) -> Result<Circuit, GateError> {
    Circuit::from_gates(
        width,
        vec![Gate::cnot(a, b)?, Gate::cnot(b, a)?, Gate::cnot(a, b)?],
    )
}

/// Result of [`lower_mct_to_cnts`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lowering {
    pub circuit: Circuit,
    /// `(position, gate)` for each gate with three or more controls, left as is.
    pub unlowered: Vec<(usize, Gate)>,
}

impl Lowering {
    pub fn is_complete(&self) -> bool {
        self.unlowered.is_empty()
    }
}

/// Replaces `Mct` gates with at most two controls by NOT / CNOT / Toffoli.
pub fn lower_mct_to_cnts(circuit: &Circuit) -> Lowering {
    let mut unlowered = Vec::new();
    let gates = circuit
        .gates()
        .iter()
        .enumerate()
        .map(|(pos, g)| match g {
            Gate::Mct { controls, target } if controls.len() <= 2 => {
                Gate::controlled_not(controls, *target).expect("lines already validated")
            }
            Gate::Mct { .. } => {
                unlowered.push((pos, g.clone()));
                g.clone()
            }
            _ => g.clone(),
        })
        .collect();
    Lowering {
        circuit: Circuit {
            width: circuit.width(),
            gates,
        },
        unlowered,
    }
}
