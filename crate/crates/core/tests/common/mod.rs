// SPDX-License-Identifier: Apache-2.0

//! Reference implementations used only by tests. None of these go through
//! the index arithmetic of the library paths they check.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use revsynth::{DenseBinaryMatrix, Gate, PermutationMap};

pub fn perm(list: &[usize]) -> PermutationMap {
    PermutationMap::from_image_list(list).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_perm(rng: &mut impl Rng, width: u32) -> PermutationMap {
    let mut image: Vec<u32> = (0..1u32 << width).collect();
    image.shuffle(rng);
    PermutationMap::from_zero_based(image).unwrap()
}

pub fn dense(p: &PermutationMap) -> DenseBinaryMatrix {
    DenseBinaryMatrix::from_permutation(p)
}

/// Kronecker product straight from the block definition.
pub fn kron(a: &DenseBinaryMatrix, b: &DenseBinaryMatrix) -> DenseBinaryMatrix {
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mut rows = vec![vec![0u64; d]; d];
    for p in 0..da {
        for q in 0..da {
            let apq = a.get(p, q);
            for r in 0..db {
                for s in 0..db {
                    rows[p * db + r][q * db + s] = apq * b.get(r, s);
                }
            }
        }
    }
    DenseBinaryMatrix::from_rows(&rows).unwrap()
}

pub fn matmul(a: &DenseBinaryMatrix, b: &DenseBinaryMatrix) -> DenseBinaryMatrix {
    let d = a.dim();
    let mut rows = vec![vec![0u64; d]; d];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..d).map(|k| a.get(i, k) * b.get(k, j)).sum();
        }
    }
    DenseBinaryMatrix::from_rows(&rows).unwrap()
}

/// Dense matrix times the unit column vector `e_s`.
pub fn dense_apply(m: &DenseBinaryMatrix, s: usize) -> Vec<u64> {
    (0..m.dim()).map(|r| m.get(r, s)).collect()
}

/// The 2x2 NOT matrix and the 4x4 SWAP matrix.
fn not_matrix() -> DenseBinaryMatrix {
    DenseBinaryMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
}

fn swap_matrix() -> DenseBinaryMatrix {
    DenseBinaryMatrix::from_rows(&[
        vec![1, 0, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 0, 1],
    ])
    .unwrap()
}

/// `C^k NOT` on `k + 1` consecutive lines, target last: identity except the
/// last two rows are exchanged.
fn controlled_not_matrix(controls: usize) -> DenseBinaryMatrix {
    let d = 1usize << (controls + 1);
    let mut rows = vec![vec![0u64; d]; d];
    for (i, row) in rows.iter_mut().enumerate() {
        let j = if i >= d - 2 { (2 * d - 3) - i } else { i };
        row[j] = 1;
    }
    DenseBinaryMatrix::from_rows(&rows).unwrap()
}

fn identity_matrix(lines: u32) -> Option<DenseBinaryMatrix> {
    if lines == 0 {
        return None;
    }
    let d = 1usize << lines;
    let rows: Vec<Vec<u64>> = (0..d)
        .map(|i| (0..d).map(|j| (i == j) as u64).collect())
        .collect();
    Some(DenseBinaryMatrix::from_rows(&rows).unwrap())
}

/// `I^(before) ⊗ m ⊗ I^(after)`.
fn embed(m: &DenseBinaryMatrix, before: u32, after: u32) -> DenseBinaryMatrix {
    let mut out = m.clone();
    if let Some(i) = identity_matrix(before) {
        out = kron(&i, &out);
    }
    if let Some(i) = identity_matrix(after) {
        out = kron(&out, &i);
    }
    out
}

/// SWAP of adjacent lines `(line, line + 1)` on a `width`-line register.
fn adjacent_swap(line: u32, width: u32) -> DenseBinaryMatrix {
    embed(&swap_matrix(), line - 1, width - line - 1)
}

/// Gate matrix built only from tensor products of base matrices and
/// products with adjacent SWAPs: the operand lines are bubbled into a
/// contiguous block starting at line 1 (controls in order, target last),
/// the base matrix is embedded there, and the swaps are undone.
pub fn gate_matrix_by_tensor(gate: &Gate, width: u32) -> DenseBinaryMatrix {
    let (operands, base): (Vec<u32>, DenseBinaryMatrix) = match gate {
        Gate::Swap { a, b } => (vec![*a, *b], swap_matrix()),
        Gate::Not { target } => (vec![*target], not_matrix()),
        _ => {
            let mut ops = gate.controls().to_vec();
            ops.push(gate.target().unwrap());
            let base = controlled_not_matrix(ops.len() - 1);
            (ops, base)
        }
    };
    // position[line] = where that wire currently sits
    let mut at: Vec<u32> = (0..=width).collect();
    let mut swaps: Vec<u32> = Vec::new();
    for (slot, &line) in operands.iter().enumerate() {
        let goal = slot as u32 + 1;
        while at[line as usize] > goal {
            let pos = at[line as usize];
            swaps.push(pos - 1);
            // the wire at pos - 1 moves to pos
            for w in at.iter_mut() {
                if *w == pos - 1 {
                    *w = pos;
                } else if *w == pos {
                    *w = pos - 1;
                }
            }
        }
    }
    let k = operands.len() as u32;
    let core = embed(&base, 0, width - k);
    // time order: swaps, core, reversed swaps -> matrix S^-1 * core * S
    let mut m = identity_matrix(width).unwrap();
    for &s in &swaps {
        m = matmul(&adjacent_swap(s, width), &m);
    }
    m = matmul(&core, &m);
    for &s in swaps.iter().rev() {
        m = matmul(&adjacent_swap(s, width), &m);
    }
    m
}

/// Every gate of every kind on `width` lines.
pub fn all_gates(width: u32) -> Vec<Gate> {
    let lines: Vec<u32> = (1..=width).collect();
    let mut gates = Vec::new();
    for &t in &lines {
        gates.push(Gate::not(t).unwrap());
        for &c in &lines {
            if c != t {
                gates.push(Gate::cnot(c, t).unwrap());
                gates.push(Gate::swap(c, t).unwrap());
                for &c2 in &lines {
                    if c2 > c && c2 != t {
                        gates.push(Gate::toffoli(c, c2, t).unwrap());
                    }
                }
            }
        }
        let others: Vec<u32> = lines.iter().copied().filter(|&l| l != t).collect();
        if others.len() >= 3 {
            gates.push(Gate::mct(others, t).unwrap());
        }
    }
    gates
}

/// A gate described independently of the library: kind tag and 1-based lines.
#[derive(Debug, Clone, Copy)]
pub enum RefGate {
    Not(usize),
    Cnot(usize, usize),
    Toffoli(usize, usize, usize),
    Swap(usize, usize),
}

fn decode(index: usize, width: usize) -> Vec<bool> {
    (0..width)
        .map(|k| index >> (width - 1 - k) & 1 == 1)
        .collect()
}

fn encode(bits: &[bool]) -> usize {
    bits.iter().fold(0, |acc, &b| acc << 1 | b as usize)
}

fn ref_apply(g: RefGate, bits: &mut [bool]) {
    match g {
        RefGate::Not(t) => bits[t - 1] = !bits[t - 1],
        RefGate::Cnot(c, t) => {
            if bits[c - 1] {
                bits[t - 1] = !bits[t - 1];
            }
        }
        RefGate::Toffoli(c1, c2, t) => {
            if bits[c1 - 1] && bits[c2 - 1] {
                bits[t - 1] = !bits[t - 1];
            }
        }
        RefGate::Swap(a, b) => bits.swap(a - 1, b - 1),
    }
}

/// NOT, CNOT, Toffoli and SWAP gates on `width` lines; CNOT only if
/// `cnot_only`.
pub fn ref_gate_set(width: usize, cnot_only: bool) -> Vec<RefGate> {
    let mut out = Vec::new();
    for t in 1..=width {
        if !cnot_only {
            out.push(RefGate::Not(t));
        }
        for c in 1..=width {
            if c == t {
                continue;
            }
            out.push(RefGate::Cnot(c, t));
            if !cnot_only && c < t {
                out.push(RefGate::Swap(c, t));
            }
            if !cnot_only {
                for c2 in c + 1..=width {
                    if c2 != t {
                        out.push(RefGate::Toffoli(c, c2, t));
                    }
                }
            }
        }
    }
    out
}

/// Breadth-first minimum gate count for every reachable permutation,
/// keyed by 0-based image vector.
pub fn bfs_minimum(width: usize, gates: &[RefGate]) -> HashMap<Vec<usize>, usize> {
    let size = 1 << width;
    let tables: Vec<Vec<usize>> = gates
        .iter()
        .map(|&g| {
            (0..size)
                .map(|i| {
                    let mut b = decode(i, width);
                    ref_apply(g, &mut b);
                    encode(&b)
                })
                .collect()
        })
        .collect();
    let start: Vec<usize> = (0..size).collect();
    let mut dist = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        for t in &tables {
            let next: Vec<usize> = p.iter().map(|&x| t[x]).collect();
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}

/// Evaluates a cover given as strings like "a'b'", "ab" over letters a.. .
pub fn eval_letter_sop(terms: &[&str], bits: &[bool]) -> bool {
    terms.iter().any(|term| {
        let chars: Vec<char> = term.chars().collect();
        let mut ok = true;
        let mut i = 0;
        while i < chars.len() {
            let var = (chars[i] as u8 - b'a') as usize;
            let neg = chars.get(i + 1) == Some(&'\'');
            if bits[var] == neg {
                ok = false;
            }
            i += if neg { 2 } else { 1 };
        }
        ok
    })
}

/// Input bits of basis index `i` for a `width`-line register, line 1 first.
pub fn index_bits(i: usize, width: usize) -> Vec<bool> {
    decode(i, width)
}
