// SPDX-License-Identifier: Apache-2.0

//! Reversible circuit toolkit built on the permutation view of 0/1 quantum
//! matrices.
//!
//! * [`perm`]: permutations, dense validation, tensor and matrix products.
//! * [`gates`]: NOT/CNOT/Toffoli/SWAP/multi-control gates and circuits.
//! * [`forms`]: truth tables, SOP minimization, ESOP, PPRM, Karnaugh view.
//! * [`synth`]: transformation-based and exact synthesis with verification.
//! * [`io`]: text file formats.
//! * [`cli`]: the `revsynth` command line.

pub mod cli;
pub mod forms;
pub mod gates;
pub mod io;
pub mod perm;
pub mod synth;

pub use forms::{Cube, EsopForm, Monomial, Pprm, SopForm, TruthTable};
pub use gates::{Circuit, Gate, GateError, GateKind};
pub use perm::{DenseBinaryMatrix, Parity, PermError, PermutationMap, PureState};
pub use synth::{Backend, GateSet, SearchConfig, SynthError, SynthesisResult};
