// SPDX-License-Identifier: Apache-2.0

//! Permutation encoding of 0/1 quantum matrices.
//!
//! A matrix with exactly one 1 in every row and column is stored as the map
//! from input basis index to output basis index. Dense matrices only appear at
//! the validation boundary ([`DenseBinaryMatrix`]).
//!
//! Bit order: for a register `|q1 q2 ... qn>` the basis index is
//! `sum q_i * 2^(n-i)`, so line 1 is the most significant bit.

use std::fmt;

use thiserror::Error;

/// Default upper bound on register width accepted by size-growing operations.
pub const DEFAULT_MAX_WIDTH: u32 = 20;

/// Hard limit imposed by the `u32` index representation.
const INDEX_BITS: u32 = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Column => f.write_str("column"),
        }
    }
}

/// Errors raised while building or combining permutations.
///
/// Positions and indices carried by the variants are 1-based, matching the
/// external file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("length {0} is not a power of two")]
    LengthNotPowerOfTwo(usize),
    #[error("a register needs at least one line")]
    ZeroWidth,
    #[error("image {value} appears at positions {first} and {second}")]
    DuplicateImage {
        value: usize,
        first: usize,
        second: usize,
    },
    #[error("index {value} at position {position} is outside [1, {len}]")]
    IndexOutOfRange {
        value: usize,
        position: usize,
        len: usize,
    },
    #[error("condition 1 violated: entry ({row}, {column}) is {value}, expected 0 or 1")]
    NonBinaryEntry {
        row: usize,
        column: usize,
        value: u64,
    },
    #[error("condition 2 violated: {axis} {index} contains {weight} ones, expected exactly one")]
    RowOrColumnWeightNotOne {
        axis: Axis,
        index: usize,
        weight: usize,
    },
    #[error("matrix has {entries} entries, expected {dim}x{dim}")]
    NotSquare { dim: usize, entries: usize },
    #[error("width {width} exceeds the size cap of {cap} lines")]
    WidthOverflow { width: u32, cap: u32 },
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: u32, right: u32 },
    #[error("basis index {index} does not fit a {width}-line register")]
    StateOutOfRange { index: usize, width: u32 },
}

/// Sign of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of the product of two permutations with these parities.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// Basis state of an `n`-line register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PureState {
    width: u32,
    index: u32,
}

impl PureState {
    pub fn new(width: u32, index: usize) -> Result<Self, PermError> {
        if width == 0 {
            return Err(PermError::ZeroWidth);
        }
        if width > INDEX_BITS || index >= (1usize << width) {
            return Err(PermError::StateOutOfRange { index, width });
        }
        Ok(Self {
            width,
            index: index as u32,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    /// Value of line `line` (1-based).
    pub fn line_value(&self, line: u32) -> bool {
        debug_assert!(line >= 1 && line <= self.width);
        (self.index >> (self.width - line)) & 1 == 1
    }
}

/// A square matrix of naturals, not yet checked for well-formedness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseBinaryMatrix {
    dim: usize,
    entries: Vec<u64>,
}

impl DenseBinaryMatrix {
    /// Row-major construction. Only the shape is checked here.
    pub fn new(dim: usize, entries: Vec<u64>) -> Result<Self, PermError> {
        if entries.len() != dim * dim {
            return Err(PermError::NotSquare {
                dim,
                entries: entries.len(),
            });
        }
        if !dim.is_power_of_two() {
            return Err(PermError::LengthNotPowerOfTwo(dim));
        }
        if dim < 2 {
            return Err(PermError::ZeroWidth);
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self, PermError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(PermError::NotSquare {
                    dim,
                    entries: rows.iter().map(Vec::len).sum(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(dim, entries)
    }

    /// The matrix of `p` under column-vector action: entry `(p(c), c)` is 1.
    pub fn from_permutation(p: &PermutationMap) -> Self {
        let dim = p.len();
        let mut entries = vec![0; dim * dim];
        for (c, &r) in p.image.iter().enumerate() {
            entries[r as usize * dim + c] = 1;
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 0-based `(row, column)`.
    pub fn get(&self, row: usize, column: usize) -> u64 {
        self.entries[row * self.dim + column]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.entries.chunks(self.dim)
    }
}

/// A bijection on the `2^width` basis indices of a register.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationMap {
    width: u32,
    image: Vec<u32>,
}

impl PermutationMap {
    pub fn identity(width: u32) -> Self {
        assert!(
            (1..=INDEX_BITS).contains(&width),
            "identity width {width} out of range"
        );
        Self {
            width,
            image: (0..1u32 << width).collect(),
        }
    }

    /// Builds a permutation from 1-based images: input `i` maps to `list[i-1]`.
    pub fn from_image_list(list: &[usize]) -> Result<Self, PermError> {
        let len = list.len();
        let width = width_for_len(len)?;
        let mut seen = vec![0usize; len];
        let mut image = Vec::with_capacity(len);
        for (pos, &value) in list.iter().enumerate() {
            if value == 0 || value > len {
                return Err(PermError::IndexOutOfRange {
                    value,
                    position: pos + 1,
                    len,
                });
            }
            let slot = &mut seen[value - 1];
            if *slot != 0 {
                return Err(PermError::DuplicateImage {
                    value,
                    first: *slot,
                    second: pos + 1,
                });
            }
            *slot = pos + 1;
            image.push((value - 1) as u32);
        }
        Ok(Self { width, image })
    }

    /// Builds a permutation from 0-based images.
    pub fn from_zero_based(image: Vec<u32>) -> Result<Self, PermError> {
        let one_based: Vec<usize> = image.iter().map(|&v| v as usize + 1).collect();
        Self::from_image_list(&one_based)
    }

    /// Checks both well-formedness conditions and reads off the permutation.
    pub fn validate_dense(m: &DenseBinaryMatrix) -> Result<Self, PermError> {
        let dim = m.dim;
        let width = width_for_len(dim)?;
        for (r, row) in m.rows().enumerate() {
            if let Some((c, &value)) = row.iter().enumerate().find(|(_, &v)| v > 1) {
                return Err(PermError::NonBinaryEntry {
                    row: r + 1,
                    column: c + 1,
                    value,
                });
            }
        }
        for (r, row) in m.rows().enumerate() {
            let weight = row.iter().filter(|&&v| v == 1).count();
            if weight != 1 {
                return Err(PermError::RowOrColumnWeightNotOne {
                    axis: Axis::Row,
                    index: r + 1,
                    weight,
                });
            }
        }
        let mut image = vec![0u32; dim];
        for (c, slot) in image.iter_mut().enumerate() {
            let mut weight = 0;
            for r in 0..dim {
                if m.get(r, c) == 1 {
                    weight += 1;
                    *slot = r as u32;
                }
            }
            if weight != 1 {
                return Err(PermError::RowOrColumnWeightNotOne {
                    axis: Axis::Column,
                    index: c + 1,
                    weight,
                });
            }
        }
        Ok(Self { width, image })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// Number of basis states, `2^width`.
    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Output index for 0-based input index `i`.
    pub fn image_of(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.image
    }

    /// The 1-based image list, as printed in permutation files.
    pub fn to_image_list(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Kronecker product `a ⊗ b`; `a` acts on the leading lines.
    pub fn tensor(&self, other: &PermutationMap) -> Result<Self, PermError> {
        self.tensor_capped(other, DEFAULT_MAX_WIDTH)
    }

    pub fn tensor_capped(&self, other: &PermutationMap, cap: u32) -> Result<Self, PermError> {
        let width = self.width + other.width;
        if width > cap.min(INDEX_BITS) {
            return Err(PermError::WidthOverflow {
                width,
                cap: cap.min(INDEX_BITS),
            });
        }
        let shift = other.width;
        let mut image = Vec::with_capacity(1 << width);
        for &hi in &self.image {
            image.extend(other.image.iter().map(|&lo| (hi << shift) | lo));
        }
        Ok(Self { width, image })
    }

    /// Matrix product `self * other`: `other` acts first.
    pub fn compose(&self, other: &PermutationMap) -> Result<Self, PermError> {
        self.check_width(other.width)?;
        let image = other
            .image
            .iter()
            .map(|&mid| self.image[mid as usize])
            .collect();
        Ok(Self {
            width: self.width,
            image,
        })
    }

    pub fn apply(&self, state: PureState) -> Result<PureState, PermError> {
        self.check_width(state.width)?;
        Ok(PureState {
            width: self.width,
            index: self.image[state.index as usize],
        })
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0u32; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize] = i as u32;
        }
        Self {
            width: self.width,
            image,
        }
    }

    /// Cycle lengths, one entry per cycle (fixed points included), in order
    /// of each cycle's smallest element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut visited = vec![false; self.image.len()];
        let mut lengths = Vec::new();
        for start in 0..self.image.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut at = start;
            while !visited[at] {
                visited[at] = true;
                at = self.image[at] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn parity(&self) -> Parity {
        // A k-cycle is a product of k-1 transpositions.
        let transpositions: usize = self.cycle_lengths().iter().map(|l| l - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn check_width(&self, other: u32) -> Result<(), PermError> {
        if self.width != other {
            return Err(PermError::WidthMismatch {
                left: self.width,
                right: other,
            });
        }
        Ok(())
    }
}

impl fmt::Display for PermutationMap {
    /// Prints the 1-based image list, e.g. `(1,2,4,3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str(")")
    }
}

fn width_for_len(len: usize) -> Result<u32, PermError> {
    if !len.is_power_of_two() {
        return Err(PermError::LengthNotPowerOfTwo(len));
    }
    let width = len.trailing_zeros();
    if width == 0 {
        return Err(PermError::ZeroWidth);
    }
    if width > INDEX_BITS {
        return Err(PermError::WidthOverflow {
            width,
            cap: INDEX_BITS,
        });
    }
    Ok(width)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(list: &[usize]) -> PermutationMap {
        PermutationMap::from_image_list(list).unwrap()
    }

    /// Dense Kronecker product, independent of the index arithmetic in `tensor`.
    fn kron(a: &DenseBinaryMatrix, b: &DenseBinaryMatrix) -> DenseBinaryMatrix {
        let (da, db) = (a.dim(), b.dim());
        let d = da * db;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                entries[i * d + j] = a.get(i / db, j / db) * b.get(i % db, j % db);
            }
        }
        DenseBinaryMatrix::new(d, entries).unwrap()
    }

    fn matmul(a: &DenseBinaryMatrix, b: &DenseBinaryMatrix) -> DenseBinaryMatrix {
        let d = a.dim();
        let mut entries = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                entries[i * d + j] = (0..d).map(|k| a.get(i, k) * b.get(k, j)).sum();
            }
        }
        DenseBinaryMatrix::new(d, entries).unwrap()
    }

    #[test]
    fn image_list_examples() {
        let cnot = perm(&[1, 2, 4, 3]);
        assert_eq!(cnot.width(), 2);
        assert_eq!(cnot.images(), &[0, 1, 3, 2]);
        assert!(perm(&[1, 2]).is_identity());
        assert_eq!(
            PermutationMap::from_image_list(&[1, 1, 3, 4]),
            Err(PermError::DuplicateImage {
                value: 1,
                first: 1,
                second: 2
            })
        );
        assert_eq!(
            PermutationMap::from_image_list(&[1, 2, 3]),
            Err(PermError::LengthNotPowerOfTwo(3))
        );
        assert!(matches!(
            PermutationMap::from_image_list(&[1, 5, 3, 4]),
            Err(PermError::IndexOutOfRange { value: 5, .. })
        ));
        assert!(matches!(
            PermutationMap::from_image_list(&[0, 2]),
            Err(PermError::IndexOutOfRange { value: 0, .. })
        ));
        assert_eq!(
            PermutationMap::from_image_list(&[1]),
            Err(PermError::ZeroWidth)
        );
    }

    #[test]
    fn validate_dense_swap_matrix() {
        let m = DenseBinaryMatrix::from_rows(&[
            vec![1, 0, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(
            PermutationMap::validate_dense(&m).unwrap(),
            perm(&[1, 3, 2, 4])
        );
    }

    #[test]
    fn validate_dense_errors() {
        let id = DenseBinaryMatrix::from_permutation(&PermutationMap::identity(2));
        assert!(PermutationMap::validate_dense(&id).unwrap().is_identity());

        let two = DenseBinaryMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).unwrap();
        assert!(matches!(
            PermutationMap::validate_dense(&two),
            Err(PermError::NonBinaryEntry {
                row: 1,
                column: 1,
                value: 2
            })
        ));

        let heavy_row = DenseBinaryMatrix::from_rows(&[vec![1, 1], vec![0, 0]]).unwrap();
        assert!(matches!(
            PermutationMap::validate_dense(&heavy_row),
            Err(PermError::RowOrColumnWeightNotOne {
                axis: Axis::Row,
                index: 1,
                weight: 2
            })
        ));

        let heavy_col = DenseBinaryMatrix::from_rows(&[vec![1, 0], vec![1, 0]]).unwrap();
        assert!(matches!(
            PermutationMap::validate_dense(&heavy_col),
            Err(PermError::RowOrColumnWeightNotOne {
                axis: Axis::Column,
                index: 1,
                weight: 2
            })
        ));

        assert!(matches!(
            DenseBinaryMatrix::new(3, vec![0; 9]),
            Err(PermError::LengthNotPowerOfTwo(3))
        ));
    }

    #[test]
    fn tensor_examples_match_kronecker() {
        let not = perm(&[2, 1]);
        let id1 = PermutationMap::identity(1);
        let left = id1.tensor(&not).unwrap();
        assert_eq!(left, perm(&[2, 1, 4, 3]));
        let right = not.tensor(&id1).unwrap();
        assert_eq!(right, perm(&[3, 4, 1, 2]));
        for (a, b, t) in [(&id1, &not, &left), (&not, &id1, &right)] {
            let dense = kron(
                &DenseBinaryMatrix::from_permutation(a),
                &DenseBinaryMatrix::from_permutation(b),
            );
            assert_eq!(&PermutationMap::validate_dense(&dense).unwrap(), t);
        }

        let x = perm(&[3, 1, 4, 2]);
        let block = PermutationMap::identity(2).tensor(&x).unwrap();
        for blk in 0..4 {
            for r in 0..4 {
                assert_eq!(block.image_of(blk * 4 + r), blk * 4 + x.image_of(r));
            }
        }
    }

    #[test]
    fn tensor_width_cap() {
        let a = PermutationMap::identity(3);
        assert_eq!(
            a.tensor_capped(&a, 5),
            Err(PermError::WidthOverflow { width: 6, cap: 5 })
        );
        assert!(a.tensor_capped(&a, 6).is_ok());
    }

    #[test]
    fn compose_examples() {
        let cnot12 = perm(&[1, 2, 4, 3]);
        let cnot21 = perm(&[1, 4, 3, 2]);
        assert!(cnot12.compose(&cnot12).unwrap().is_identity());
        let swap = cnot12.compose(&cnot21).unwrap().compose(&cnot12).unwrap();
        assert_eq!(swap, perm(&[1, 3, 2, 4]));
        let dense = matmul(
            &matmul(
                &DenseBinaryMatrix::from_permutation(&cnot12),
                &DenseBinaryMatrix::from_permutation(&cnot21),
            ),
            &DenseBinaryMatrix::from_permutation(&cnot12),
        );
        assert_eq!(PermutationMap::validate_dense(&dense).unwrap(), swap);
        let p = perm(&[3, 2, 1, 4]);
        assert_eq!(PermutationMap::identity(2).compose(&p).unwrap(), p);
        assert!(matches!(
            p.compose(&PermutationMap::identity(3)),
            Err(PermError::WidthMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn compose_is_b_first() {
        // not1 then cnot: |00> -> |10> -> |11>
        let not1 = perm(&[3, 4, 1, 2]);
        let cnot = perm(&[1, 2, 4, 3]);
        let both = cnot.compose(&not1).unwrap();
        assert_eq!(both.image_of(0), 3);
        assert_ne!(both, not1.compose(&cnot).unwrap());
    }

    #[test]
    fn apply_examples() {
        let comparator = perm(&[3, 2, 1, 4]);
        let s0 = PureState::new(2, 0).unwrap();
        assert_eq!(comparator.apply(s0).unwrap().index(), 2);
        let out = comparator.apply(s0).unwrap();
        assert!(out.line_value(1));
        assert!(!out.line_value(2));
        let cnot = perm(&[1, 2, 4, 3]);
        assert_eq!(
            cnot.apply(PureState::new(2, 2).unwrap()).unwrap().index(),
            3
        );
        let id = PermutationMap::identity(3);
        for i in 0..8 {
            assert_eq!(id.apply(PureState::new(3, i).unwrap()).unwrap().index(), i);
        }
        assert!(cnot.apply(PureState::new(3, 0).unwrap()).is_err());
        assert!(PureState::new(2, 4).is_err());
    }

    #[test]
    fn inverse_examples() {
        let c = perm(&[3, 2, 1, 4]);
        assert_eq!(c.inverse(), c);
        let adder = perm(&[1, 8, 6, 7, 2, 3, 5, 4]);
        assert_eq!(adder.inverse(), perm(&[1, 5, 6, 8, 7, 3, 4, 2]));
        assert!(adder.compose(&adder.inverse()).unwrap().is_identity());
        assert!(PermutationMap::identity(2).inverse().is_identity());
    }

    #[test]
    fn parity_examples() {
        assert_eq!(PermutationMap::identity(3).parity(), Parity::Even);
        assert_eq!(perm(&[1, 2, 3, 4, 5, 6, 8, 7]).parity(), Parity::Odd);
        let ex6 = perm(&[12, 4, 10, 3, 8, 14, 16, 15, 9, 2, 5, 11, 1, 13, 7, 6]);
        let mut cycles = ex6.cycle_lengths();
        cycles.sort_unstable();
        assert_eq!(cycles, vec![1, 4, 11]);
        assert_eq!(ex6.parity(), Parity::Odd);
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(perm(&[1, 2, 4, 3]).to_string(), "(1,2,4,3)");
    }
}
