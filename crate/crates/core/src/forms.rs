// SPDX-License-Identifier: Apache-2.0

//! Two-level Boolean forms extracted from a permutation.
//!
//! The pipeline is truth table -> minimized SOP -> disjoint ESOP -> PPRM.
//! [`pprm_from_bits`] computes the PPRM directly with the binary Möbius
//! transform and is the reference for the other route.
//!
//! Variables follow register lines: variable `k` (1-based) is line `k`, which
//! is bit `n - k` of a basis index. Cubes and monomials are stored as masks
//! over those index bits.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::perm::PermutationMap;

/// Largest input count accepted by the minimizer.
pub const MAX_FORM_INPUTS: u32 = 20;

/// Widest register [`render_qkmap`] will draw.
pub const MAX_QKMAP_WIDTH: u32 = 6;

/// Up to this many inputs the SOP cover is chosen exactly.
const EXACT_COVER_INPUTS: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("column has {actual} entries, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("{width} lines is too wide (limit {max})")]
    WidthTooLarge { width: u32, max: u32 },
    #[error("{given} variable names supplied for {expected} variables")]
    NameCount { given: usize, expected: usize },
}

/// Display names for the variables of an `n`-input function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableNames(Vec<String>);

impl VariableNames {
    /// `v1 ... vn`.
    pub fn positional(n: u32) -> Self {
        Self((1..=n).map(|i| format!("v{i}")).collect())
    }

    pub fn custom(names: Vec<String>, n: u32) -> Result<Self, FormError> {
        if names.len() != n as usize {
            return Err(FormError::NameCount {
                given: names.len(),
                expected: n as usize,
            });
        }
        Ok(Self(names))
    }

    /// Name of 1-based variable `k`.
    pub fn name(&self, k: u32) -> &str {
        &self.0[k as usize - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[String] {
        &self.0
    }
}

/// Bit of a basis index carrying 1-based variable `k` of `n`.
#[inline]
fn var_bit(k: u32, n: u32) -> u32 {
    1 << (n - k)
}

/// Per-output truth table of a reversible function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    inputs: u32,
    columns: Vec<Vec<bool>>,
}

impl TruthTable {
    /// `columns[o][i]` is output line `o + 1` for input index `i`.
    pub fn from_permutation(p: &PermutationMap) -> Self {
        let n = p.width();
        let columns = (1..=n)
            .map(|o| {
                let bit = var_bit(o, n);
                p.images().iter().map(|&v| v & bit != 0).collect()
            })
            .collect();
        Self { inputs: n, columns }
    }

    pub fn inputs(&self) -> u32 {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, output: usize) -> &[bool] {
        &self.columns[output]
    }

    pub fn columns(&self) -> &[Vec<bool>] {
        &self.columns
    }

    /// Output word for input `i`, output line 1 as the most significant bit.
    pub fn output_word(&self, i: usize) -> u32 {
        self.columns
            .iter()
            .fold(0, |acc, col| (acc << 1) | col[i] as u32)
    }
}

pub fn extract_truth_table(p: &PermutationMap) -> TruthTable {
    TruthTable::from_permutation(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Literal {
    Positive,
    Negative,
    Absent,
}

/// A product term. `care` marks the variables present; `polarity` holds the
/// required value for each of them (and is zero outside `care`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cube {
    care: u32,
    polarity: u32,
}

impl Cube {
    /// The empty product, true everywhere.
    pub const ONE: Cube = Cube {
        care: 0,
        polarity: 0,
    };

    pub fn new(care: u32, polarity: u32) -> Self {
        Self {
            care,
            polarity: polarity & care,
        }
    }

    /// The single-minterm cube for `index` over `n` variables.
    pub fn minterm(index: u32, n: u32) -> Self {
        Self::new(full_mask(n), index)
    }

    /// Builds a cube from per-variable literals, variable 1 first.
    pub fn from_literals(lits: &[Literal]) -> Self {
        let n = lits.len() as u32;
        let mut cube = Cube::ONE;
        for (k, lit) in (1..=n).zip(lits) {
            let bit = var_bit(k, n);
            match lit {
                Literal::Positive => {
                    cube.care |= bit;
                    cube.polarity |= bit;
                }
                Literal::Negative => cube.care |= bit,
                Literal::Absent => {}
            }
        }
        cube
    }

    pub fn care(&self) -> u32 {
        self.care
    }

    pub fn polarity(&self) -> u32 {
        self.polarity
    }

    pub fn literal(&self, k: u32, n: u32) -> Literal {
        let bit = var_bit(k, n);
        if self.care & bit == 0 {
            Literal::Absent
        } else if self.polarity & bit != 0 {
            Literal::Positive
        } else {
            Literal::Negative
        }
    }

    pub fn literal_count(&self) -> u32 {
        self.care.count_ones()
    }

    #[inline]
    pub fn contains(&self, index: u32) -> bool {
        index & self.care == self.polarity
    }

    pub fn intersects(&self, other: &Cube) -> bool {
        let common = self.care & other.care;
        self.polarity & common == other.polarity & common
    }

    /// Does `self` contain every point of `other`?
    pub fn covers(&self, other: &Cube) -> bool {
        self.care & other.care == self.care && other.polarity & self.care == self.polarity
    }

    /// `self` minus `other`, as pairwise disjoint cubes.
    pub fn sharp(&self, other: &Cube) -> Vec<Cube> {
        if !self.intersects(other) {
            return vec![*self];
        }
        let mut pieces = Vec::new();
        let mut rest = *self;
        let mut free = other.care & !self.care;
        while free != 0 {
            // highest bit first, i.e. lowest-numbered variable first
            let bit = 1 << (31 - free.leading_zeros());
            free &= !bit;
            let want = other.polarity & bit;
            pieces.push(Cube::new(rest.care | bit, rest.polarity | (bit ^ want)));
            rest = Cube::new(rest.care | bit, rest.polarity | want);
        }
        pieces
    }

    /// Per-variable literal ordering used for printing: negative, positive,
    /// absent, variable 1 first.
    fn display_cmp(&self, other: &Cube, n: u32) -> Ordering {
        let rank = |l: Literal| match l {
            Literal::Negative => 0,
            Literal::Positive => 1,
            Literal::Absent => 2,
        };
        (1..=n)
            .map(|k| rank(self.literal(k, n)).cmp(&rank(other.literal(k, n))))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// `a'b` style rendering; the constant-1 cube renders as `1`.
    pub fn render(&self, names: &VariableNames) -> String {
        let n = names.len() as u32;
        if self.care == 0 {
            return "1".to_string();
        }
        let mut s = String::new();
        for k in 1..=n {
            match self.literal(k, n) {
                Literal::Positive => s.push_str(names.name(k)),
                Literal::Negative => {
                    s.push_str(names.name(k));
                    s.push('\'');
                }
                Literal::Absent => {}
            }
        }
        s
    }

    /// PLA input part: `1`, `0` or `-` per variable.
    pub fn pla_inputs(&self, n: u32) -> String {
        (1..=n)
            .map(|k| match self.literal(k, n) {
                Literal::Positive => '1',
                Literal::Negative => '0',
                Literal::Absent => '-',
            })
            .collect()
    }
}

fn full_mask(n: u32) -> u32 {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

fn sort_cubes(cubes: &mut [Cube], n: u32) {
    cubes.sort_by(|a, b| a.display_cmp(b, n));
}

fn check_column(column: &[bool], n: u32) -> Result<(), FormError> {
    if n > MAX_FORM_INPUTS {
        return Err(FormError::WidthTooLarge {
            width: n,
            max: MAX_FORM_INPUTS,
        });
    }
    let expected = 1usize << n;
    if column.len() != expected {
        return Err(FormError::LengthMismatch {
            expected,
            actual: column.len(),
        });
    }
    Ok(())
}

/// All prime implicants of the on-set, by iterated merging of adjacent cubes.
fn prime_implicants(minterms: &[u32], n: u32) -> Vec<Cube> {
    let mut current: HashSet<Cube> = minterms.iter().map(|&m| Cube::minterm(m, n)).collect();
    let mut primes = Vec::new();
    while !current.is_empty() {
        let mut merged: HashSet<Cube> = HashSet::new();
        let mut used: HashSet<Cube> = HashSet::new();
        for cube in &current {
            let mut bits = cube.care;
            while bits != 0 {
                let bit = bits & bits.wrapping_neg();
                bits &= bits - 1;
                let partner = Cube::new(cube.care, cube.polarity ^ bit);
                if current.contains(&partner) {
                    used.insert(*cube);
                    merged.insert(Cube::new(cube.care & !bit, cube.polarity & !bit));
                }
            }
        }
        primes.extend(current.iter().filter(|c| !used.contains(c)).copied());
        current = merged;
    }
    primes.sort_by_key(|c| (c.literal_count(), Reverse(c.care), c.polarity));
    primes
}

/// Prime-irredundant SOP cover of a single output column.
///
/// Primes come from Quine–McCluskey merging. Essential primes are taken
/// first; the remainder is covered exactly (minimum cubes, then literals)
/// for up to four inputs and greedily above that.
pub fn minimize_sop(column: &[bool], n: u32) -> Result<Vec<Cube>, FormError> {
    check_column(column, n)?;
    let minterms: Vec<u32> = (0..column.len() as u32)
        .filter(|&i| column[i as usize])
        .collect();
    if minterms.is_empty() {
        return Ok(Vec::new());
    }
    let primes = prime_implicants(&minterms, n);
    let covering: Vec<Vec<usize>> = minterms
        .iter()
        .map(|&m| {
            (0..primes.len())
                .filter(|&p| primes[p].contains(m))
                .collect()
        })
        .collect();

    let mut chosen: BTreeSet<usize> = covering
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect();
    let uncovered: Vec<usize> = (0..minterms.len())
        .filter(|&m| !covering[m].iter().any(|p| chosen.contains(p)))
        .collect();

    if !uncovered.is_empty() {
        let extra = if n <= EXACT_COVER_INPUTS {
            exact_cover(&primes, &covering, &uncovered)
        } else {
            greedy_cover(&primes, &minterms, &covering, &uncovered)
        };
        chosen.extend(extra);
    }

    let mut cover: Vec<Cube> = chosen.into_iter().map(|p| primes[p]).collect();
    remove_redundant(&mut cover, &minterms);
    sort_cubes(&mut cover, n);
    Ok(cover)
}

fn exact_cover(primes: &[Cube], covering: &[Vec<usize>], uncovered: &[usize]) -> Vec<usize> {
    struct Search<'a> {
        primes: &'a [Cube],
        covering: &'a [Vec<usize>],
        best: Option<(usize, u32, Vec<usize>)>,
    }

    impl Search<'_> {
        fn run(&mut self, pending: &[usize], picked: &mut Vec<usize>, literals: u32) {
            if let Some((count, lits, _)) = &self.best {
                if picked.len() > *count || (picked.len() == *count && literals >= *lits) {
                    return;
                }
            }
            let Some(&pivot) = pending.iter().min_by_key(|&&m| self.covering[m].len()) else {
                self.best = Some((picked.len(), literals, picked.clone()));
                return;
            };
            for &p in &self.covering[pivot] {
                let prime = self.primes[p];
                let rest: Vec<usize> = pending
                    .iter()
                    .copied()
                    .filter(|&m| !self.covering[m].contains(&p))
                    .collect();
                picked.push(p);
                self.run(&rest, picked, literals + prime.literal_count());
                picked.pop();
            }
        }
    }

    let mut search = Search {
        primes,
        covering,
        best: None,
    };
    search.run(uncovered, &mut Vec::new(), 0);
    search.best.map(|(_, _, v)| v).unwrap_or_default()
}

fn greedy_cover(
    primes: &[Cube],
    minterms: &[u32],
    covering: &[Vec<usize>],
    uncovered: &[usize],
) -> Vec<usize> {
    let mut pending: BTreeSet<usize> = uncovered.iter().copied().collect();
    let mut picked = Vec::new();
    while !pending.is_empty() {
        let candidates: BTreeSet<usize> = pending
            .iter()
            .flat_map(|&m| covering[m].iter().copied())
            .collect();
        let best = candidates
            .into_iter()
            .max_by_key(|&p| {
                let gain = pending
                    .iter()
                    .filter(|&&m| primes[p].contains(minterms[m]))
                    .count();
                (gain, Reverse(primes[p].literal_count()), Reverse(p))
            })
            .expect("every minterm has a covering prime");
        pending.retain(|&m| !primes[best].contains(minterms[m]));
        picked.push(best);
    }
    picked
}

/// Drops cubes whose minterms are all covered by the other cubes.
fn remove_redundant(cover: &mut Vec<Cube>, minterms: &[u32]) {
    // try the widest-literal cubes first
    let mut order: Vec<usize> = (0..cover.len()).collect();
    order.sort_by_key(|&i| Reverse(cover[i].literal_count()));
    let mut keep = vec![true; cover.len()];
    for i in order {
        keep[i] = false;
        let needed = minterms.iter().any(|&m| {
            cover[i].contains(m)
                && !cover
                    .iter()
                    .enumerate()
                    .any(|(j, c)| keep[j] && c.contains(m))
        });
        keep[i] = needed;
    }
    let mut idx = 0;
    cover.retain(|_| {
        idx += 1;
        keep[idx - 1]
    });
}

/// Rewrites an OR cover as an XOR cover by making the cubes pairwise disjoint.
/// A cover that is already disjoint comes back unchanged.
pub fn sop_to_esop(cover: &[Cube]) -> Vec<Cube> {
    let mut out: Vec<Cube> = Vec::with_capacity(cover.len());
    for cube in cover {
        let mut fragments = vec![*cube];
        for placed in &out {
            fragments = fragments.iter().flat_map(|f| f.sharp(placed)).collect();
            if fragments.is_empty() {
                break;
            }
        }
        out.extend(fragments);
    }
    out
}

/// A product of uncomplemented variables; the empty mask is the constant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub u32);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.count_ones()
    }

    /// Builds a monomial from 1-based variable numbers.
    pub fn from_vars(vars: &[u32], n: u32) -> Self {
        Monomial(vars.iter().fold(0, |m, &k| m | var_bit(k, n)))
    }
}

impl Ord for Monomial {
    /// Lower degree first; within a degree, variable 1 first.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), Reverse(self.0)).cmp(&(other.degree(), Reverse(other.0)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Positive-polarity Reed–Muller form of one output.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pprm {
    inputs: u32,
    terms: BTreeSet<Monomial>,
}

impl Pprm {
    pub fn new(inputs: u32, terms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut set = BTreeSet::new();
        for t in terms {
            // x ⊕ x = 0
            if !set.insert(t) {
                set.remove(&t);
            }
        }
        Self { inputs, terms: set }
    }

    pub fn inputs(&self) -> u32 {
        self.inputs
    }

    pub fn terms(&self) -> &BTreeSet<Monomial> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn eval(&self, index: u32) -> bool {
        self.terms
            .iter()
            .fold(false, |acc, m| acc ^ (index & m.0 == m.0))
    }

    /// `1⊕a⊕b` style rendering; the zero function renders as `0`.
    pub fn render(&self, names: &VariableNames) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let n = self.inputs;
        self.terms
            .iter()
            .map(|m| {
                if m.0 == 0 {
                    "1".to_string()
                } else {
                    (1..=n)
                        .filter(|&k| m.0 & var_bit(k, n) != 0)
                        .map(|k| names.name(k))
                        .collect()
                }
            })
            .collect::<Vec<_>>()
            .join("⊕")
    }
}

/// Expands every complemented literal as `x ⊕ 1` and cancels repeated
/// monomials.
pub fn esop_to_pprm(cubes: &[Cube], n: u32) -> Pprm {
    let mut terms: BTreeSet<Monomial> = BTreeSet::new();
    for cube in cubes {
        let positive = cube.care & cube.polarity;
        let negative = cube.care & !cube.polarity;
        // every subset of the complemented variables
        let mut sub = negative;
        loop {
            let m = Monomial(positive | sub);
            if !terms.insert(m) {
                terms.remove(&m);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & negative;
        }
    }
    Pprm { inputs: n, terms }
}

/// PPRM coefficients by the GF(2) Möbius transform of the column.
pub fn pprm_from_bits(column: &[bool], n: u32) -> Result<Pprm, FormError> {
    check_column(column, n)?;
    let mut coeffs = column.to_vec();
    for k in 0..n {
        let bit = 1usize << k;
        for i in 0..coeffs.len() {
            if i & bit != 0 {
                coeffs[i] ^= coeffs[i ^ bit];
            }
        }
    }
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(i, _)| Monomial(i as u32))
        .collect();
    Ok(Pprm { inputs: n, terms })
}

/// Minimized SOP cover per output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SopForm {
    pub inputs: u32,
    pub outputs: Vec<Vec<Cube>>,
}

/// XOR-combined cover per output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsopForm {
    pub inputs: u32,
    pub outputs: Vec<Vec<Cube>>,
}

impl SopForm {
    pub fn from_table(table: &TruthTable) -> Result<Self, FormError> {
        let outputs = table
            .columns()
            .iter()
            .map(|col| minimize_sop(col, table.inputs()))
            .collect::<Result<_, _>>()?;
        Ok(Self {
            inputs: table.inputs(),
            outputs,
        })
    }

    pub fn eval(&self, output: usize, index: u32) -> bool {
        self.outputs[output].iter().any(|c| c.contains(index))
    }

    /// Same covers with every output's cubes in printing order.
    pub fn normalized(mut self) -> Self {
        for cubes in &mut self.outputs {
            sort_cubes(cubes, self.inputs);
        }
        self
    }

    pub fn to_esop(&self) -> EsopForm {
        EsopForm {
            inputs: self.inputs,
            outputs: self.outputs.iter().map(|c| sop_to_esop(c)).collect(),
        }
    }

    pub fn render(&self, names: &VariableNames) -> String {
        render_tuple(&self.outputs, "+", names)
    }
}

impl EsopForm {
    pub fn eval(&self, output: usize, index: u32) -> bool {
        self.outputs[output]
            .iter()
            .fold(false, |acc, c| acc ^ c.contains(index))
    }

    pub fn normalized(mut self) -> Self {
        for cubes in &mut self.outputs {
            sort_cubes(cubes, self.inputs);
        }
        self
    }

    pub fn to_pprm(&self) -> Vec<Pprm> {
        self.outputs
            .iter()
            .map(|c| esop_to_pprm(c, self.inputs))
            .collect()
    }

    pub fn render(&self, names: &VariableNames) -> String {
        render_tuple(&self.outputs, "⊕", names)
    }
}

fn render_tuple(outputs: &[Vec<Cube>], op: &str, names: &VariableNames) -> String {
    let parts: Vec<String> = outputs
        .iter()
        .map(|cubes| {
            if cubes.is_empty() {
                "0".to_string()
            } else {
                cubes
                    .iter()
                    .map(|c| c.render(names))
                    .collect::<Vec<_>>()
                    .join(op)
            }
        })
        .collect();
    format!("({})", parts.join(", "))
}

/// Canonical PPRM of every output of a table.
pub fn pprm_of_table(table: &TruthTable) -> Result<Vec<Pprm>, FormError> {
    table
        .columns()
        .iter()
        .map(|col| pprm_from_bits(col, table.inputs()))
        .collect()
}

pub fn render_pprm_tuple(pprms: &[Pprm], names: &VariableNames) -> String {
    let parts: Vec<String> = pprms.iter().map(|p| p.render(names)).collect();
    format!("({})", parts.join(", "))
}

/// Karnaugh-style grid of a permutation: rows are Gray-ordered values of the
/// first `ceil(n/2)` lines, columns of the remaining lines, and each cell is
/// the output register value for that input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QkMapView {
    pub width: u32,
    pub row_lines: u32,
    pub col_lines: u32,
    pub row_labels: Vec<u32>,
    pub col_labels: Vec<u32>,
    pub cells: Vec<Vec<u32>>,
}

fn gray(k: u32) -> u32 {
    k ^ (k >> 1)
}

fn bits(value: u32, count: u32) -> String {
    (0..count)
        .rev()
        .map(|b| if value >> b & 1 == 1 { '1' } else { '0' })
        .collect()
}

impl QkMapView {
    /// Input index of cell `(row, col)`.
    pub fn input_at(&self, row: usize, col: usize) -> u32 {
        (self.row_labels[row] << self.col_lines) | self.col_labels[col]
    }

    pub fn render(&self, names: &VariableNames) -> String {
        let row_names: String = (1..=self.row_lines).map(|k| names.name(k)).collect();
        let col_names: String = (self.row_lines + 1..=self.width)
            .map(|k| names.name(k))
            .collect();
        let corner = format!("{row_names}\\{col_names}");
        let cell_w = (self.width as usize).max(self.col_lines as usize).max(1);
        let first_w = corner.len().max(self.row_lines as usize);

        let mut out = String::new();
        out.push_str(&format!("{corner:<first_w$}"));
        for &c in &self.col_labels {
            let label = if self.col_lines == 0 {
                "-".to_string()
            } else {
                bits(c, self.col_lines)
            };
            out.push_str(&format!(" | {label:<cell_w$}"));
        }
        out.push('\n');
        for (r, &label) in self.row_labels.iter().enumerate() {
            out.push_str(&format!("{:<first_w$}", bits(label, self.row_lines)));
            for cell in &self.cells[r] {
                out.push_str(&format!(" | {:<cell_w$}", bits(*cell, self.width)));
            }
            out.push('\n');
        }
        out
    }
}

pub fn render_qkmap(p: &PermutationMap) -> Result<QkMapView, FormError> {
    let n = p.width();
    if n > MAX_QKMAP_WIDTH {
        return Err(FormError::WidthTooLarge {
            width: n,
            max: MAX_QKMAP_WIDTH,
        });
    }
    let row_lines = n.div_ceil(2);
    let col_lines = n - row_lines;
    let row_labels: Vec<u32> = (0..1 << row_lines).map(gray).collect();
    let col_labels: Vec<u32> = (0..1 << col_lines).map(gray).collect();
    let cells = row_labels
        .iter()
        .map(|&r| {
            col_labels
                .iter()
                .map(|&c| p.images()[((r << col_lines) | c) as usize])
                .collect()
        })
        .collect();
    Ok(QkMapView {
        width: n,
        row_lines,
        col_lines,
        row_labels,
        col_labels,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(list: &[usize]) -> PermutationMap {
        PermutationMap::from_image_list(list).unwrap()
    }

    fn letters(n: u32) -> VariableNames {
        VariableNames::custom(
            (0..n)
                .map(|i| ((b'a' + i as u8) as char).to_string())
                .collect(),
            n,
        )
        .unwrap()
    }

    fn column(bits: &[u8]) -> Vec<bool> {
        bits.iter().map(|&b| b == 1).collect()
    }

    fn lits(s: &str) -> Cube {
        Cube::from_literals(
            &s.chars()
                .map(|c| match c {
                    '1' => Literal::Positive,
                    '0' => Literal::Negative,
                    _ => Literal::Absent,
                })
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn truth_table_examples() {
        let t = extract_truth_table(&perm(&[3, 2, 1, 4]));
        assert_eq!(t.column(0), column(&[1, 0, 0, 1]).as_slice());
        assert_eq!(t.column(1), column(&[0, 1, 0, 1]).as_slice());

        let id = extract_truth_table(&PermutationMap::identity(3));
        for o in 0..3 {
            for i in 0..8 {
                assert_eq!(id.column(o)[i], (i >> (2 - o)) & 1 == 1);
            }
        }

        let ciw = extract_truth_table(&perm(&[1, 2, 3, 4, 7, 8, 5, 6]));
        for i in 0..8usize {
            let (a, b) = (i >> 2 & 1, i >> 1 & 1);
            assert_eq!(ciw.column(1)[i], a ^ b == 1);
        }
        assert_eq!(ciw.output_word(4), 6);
    }

    #[test]
    fn minimize_examples() {
        let names = letters(2);
        let xnor = minimize_sop(&column(&[1, 0, 0, 1]), 2).unwrap();
        assert_eq!(xnor, vec![lits("00"), lits("11")]);
        let rendered: Vec<String> = xnor.iter().map(|c| c.render(&names)).collect();
        assert_eq!(rendered, ["a'b'", "ab"]);

        let maj = extract_truth_table(&perm(&[1, 2, 3, 5, 4, 6, 7, 8]));
        let cover = minimize_sop(maj.column(0), 3).unwrap();
        assert_eq!(cover, vec![lits("11-"), lits("1-1"), lits("-11")]);

        assert!(minimize_sop(&[false; 8], 3).unwrap().is_empty());
        assert_eq!(minimize_sop(&[true; 4], 2).unwrap(), vec![Cube::ONE]);
        assert_eq!(
            minimize_sop(&[true; 3], 2),
            Err(FormError::LengthMismatch {
                expected: 4,
                actual: 3
            })
        );
    }

    #[test]
    fn minimize_uses_exact_cover_on_cyclic_functions() {
        // cyclic core: six primes, minimum cover has three
        let col = column(&[0, 1, 1, 1, 1, 1, 1, 0]);
        let cover = minimize_sop(&col, 3).unwrap();
        assert_eq!(cover.len(), 3);
        for i in 0..8 {
            assert_eq!(cover.iter().any(|c| c.contains(i)), col[i as usize]);
        }
    }

    #[test]
    fn greedy_cover_above_four_inputs_is_exact() {
        let col: Vec<bool> = (0..32u32).map(|i| i.count_ones() % 3 == 1).collect();
        let cover = minimize_sop(&col, 5).unwrap();
        for i in 0..32 {
            assert_eq!(cover.iter().any(|c| c.contains(i)), col[i as usize]);
        }
    }

    #[test]
    fn sharp_produces_disjoint_difference() {
        let a = lits("1--");
        let b = lits("-1-");
        let pieces = b.sharp(&a);
        assert_eq!(pieces, vec![lits("01-")]);
        assert_eq!(a.sharp(&lits("0--")), vec![a]);
        assert!(a.sharp(&Cube::ONE).is_empty());
    }

    #[test]
    fn esop_examples() {
        let disjoint = vec![lits("00"), lits("11")];
        assert_eq!(sop_to_esop(&disjoint), disjoint);

        let overlapping = vec![lits("1-"), lits("-1")];
        let esop = sop_to_esop(&overlapping);
        for i in 0..4 {
            let or = overlapping.iter().any(|c| c.contains(i));
            let xor = esop.iter().fold(false, |acc, c| acc ^ c.contains(i));
            assert_eq!(or, xor);
        }
        assert!(sop_to_esop(&[]).is_empty());
    }

    #[test]
    fn pprm_expansion_examples() {
        let names = letters(2);
        let p = esop_to_pprm(&[lits("00"), lits("11")], 2);
        assert_eq!(p.render(&names), "1⊕a⊕b");
        let q = esop_to_pprm(&[lits("00")], 2);
        assert_eq!(q.render(&names), "1⊕a⊕b⊕ab");
        let r = esop_to_pprm(&[lits("11")], 2);
        assert_eq!(r.render(&names), "ab");
    }

    #[test]
    fn mobius_examples() {
        let names = letters(2);
        let xnor = pprm_from_bits(&column(&[1, 0, 0, 1]), 2).unwrap();
        assert_eq!(xnor.render(&names), "1⊕a⊕b");
        let or = pprm_from_bits(&column(&[0, 1, 1, 1]), 2).unwrap();
        assert_eq!(or.render(&names), "a⊕b⊕ab");
        assert!(pprm_from_bits(&[true; 3], 2).is_err());

        let adder = extract_truth_table(&perm(&[1, 8, 6, 7, 2, 3, 5, 4]));
        let sum = pprm_from_bits(adder.column(2), 3).unwrap();
        assert_eq!(sum.degree(), 1);
        assert_eq!(
            sum.terms().iter().copied().collect::<Vec<_>>(),
            vec![
                Monomial::from_vars(&[1], 3),
                Monomial::from_vars(&[2], 3),
                Monomial::from_vars(&[3], 3)
            ]
        );
    }

    #[test]
    fn pprm_new_cancels_pairs() {
        let m = Monomial::from_vars(&[1], 2);
        let p = Pprm::new(2, [m, m, Monomial(0)]);
        assert_eq!(p.terms().len(), 1);
        assert!(p.eval(0));
    }

    #[test]
    fn qkmap_cnot() {
        let view = render_qkmap(&perm(&[1, 2, 4, 3])).unwrap();
        assert_eq!(view.row_labels, vec![0, 1]);
        assert_eq!(view.col_labels, vec![0, 1]);
        assert_eq!(view.cells, vec![vec![0, 1], vec![3, 2]]);
        let text = view.render(&letters(2));
        assert_eq!(text, "a\\b | 0  | 1 \n0   | 00 | 01\n1   | 11 | 10\n");
    }

    #[test]
    fn qkmap_identity_and_comparator() {
        let id = render_qkmap(&PermutationMap::identity(2)).unwrap();
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(id.cells[r][c], id.input_at(r, c));
            }
        }
        let cmp = render_qkmap(&perm(&[3, 2, 1, 4])).unwrap();
        for r in 0..2 {
            for c in 0..2 {
                let first = cmp.cells[r][c] >> 1 & 1 == 1;
                assert_eq!(first, cmp.row_labels[r] == cmp.col_labels[c]);
            }
        }
        let four = render_qkmap(&PermutationMap::identity(4)).unwrap();
        assert_eq!(four.row_labels, vec![0, 1, 3, 2]);
        assert!(matches!(
            render_qkmap(&PermutationMap::identity(7)),
            Err(FormError::WidthTooLarge { width: 7, max: 6 })
        ));
    }
}
