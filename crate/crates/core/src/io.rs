// SPDX-License-Identifier: Apache-2.0

//! Text formats: permutation lists, dense matrices, circuits and PLA covers.
//!
//! All formats are line oriented ASCII. Blank lines and lines starting with
//! `#` are ignored on input. Indices and line numbers are 1-based on disk.

use std::collections::HashMap;

use thiserror::Error;

use crate::forms::{Cube, EsopForm, Literal, Monomial, Pprm, SopForm};
use crate::gates::{Circuit, Gate, GateError};
use crate::perm::{Axis, DenseBinaryMatrix, PermError, PermutationMap};

/// Marker comment opening a PLA file whose rows are PPRM monomials.
pub const PPRM_PLA_MARKER: &str = "# pprm: input 1 = variable present, 0 = absent";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected {0}")]
    Expected(String),
    #[error("invalid number {0:?}")]
    BadNumber(String),
    #[error("header declares {declared} lines ({expected} entries) but {found} were given")]
    EntryCount {
        declared: u32,
        expected: usize,
        found: usize,
    },
    #[error("unexpected content after the end of the file body")]
    TrailingContent,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("unknown gate mnemonic {0:?}")]
    UnknownMnemonic(String),
    #[error("undeclared line name {0:?}")]
    UndeclaredName(String),
    #[error("line name {0:?} declared twice")]
    DuplicateName(String),
    #[error("{mnemonic} takes {expected} lines, got {found}")]
    Arity {
        mnemonic: String,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Gate(#[from] GateError),
    #[error("cube {0:?} appears twice for one output")]
    DuplicateCube(String),
}

/// A parse failure with its 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(line: usize, column: usize, kind: impl Into<ParseErrorKind>) -> Self {
        Self {
            line,
            column,
            kind: kind.into(),
        }
    }
}

/// A non-comment source line with its number.
struct SourceLine<'a> {
    number: usize,
    /// Byte offset of `text` inside the raw line.
    indent: usize,
    text: &'a str,
}

fn content_lines(text: &str) -> impl Iterator<Item = SourceLine<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim_start();
        let text = trimmed.trim_end();
        if text.is_empty() || text.starts_with('#') {
            None
        } else {
            Some(SourceLine {
                number: i + 1,
                indent: raw.len() - trimmed.len(),
                text,
            })
        }
    })
}

/// Splits on `sep`, returning each trimmed token with its 1-based column.
fn tokens<'a>(line: &SourceLine<'a>, from: usize, sep: char) -> Vec<(usize, &'a str)> {
    let mut out = Vec::new();
    let mut offset = from;
    for piece in line.text[from..].split(sep) {
        let lead = piece.len() - piece.trim_start().len();
        out.push((line.indent + offset + lead + 1, piece.trim()));
        offset += piece.len() + sep.len_utf8();
    }
    out
}

fn parse_number<T: std::str::FromStr>(
    tok: &str,
    line: usize,
    column: usize,
) -> Result<T, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::at(line, column, ParseErrorKind::BadNumber(tok.to_string())))
}

/// Which of the two permutation sources a text holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Perm,
    Matrix,
}

/// Files starting with `perm` are permutation files; anything else is read
/// as a matrix.
pub fn detect_input(text: &str) -> InputKind {
    match content_lines(text).next() {
        Some(l) if l.text.split_whitespace().next() == Some("perm") => InputKind::Perm,
        _ => InputKind::Matrix,
    }
}

/// Parses either input format.
pub fn parse_permutation_input(text: &str) -> Result<PermutationMap, ParseError> {
    match detect_input(text) {
        InputKind::Perm => parse_perm(text),
        InputKind::Matrix => parse_matrix(text),
    }
}

/// `perm <n>` followed by one line of `2^n` comma-separated 1-based images.
pub fn parse_perm(text: &str) -> Result<PermutationMap, ParseError> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| {
        ParseError::at(1, 1, ParseErrorKind::Expected("\"perm <n>\" header".into()))
    })?;
    let mut words = header.text.split_whitespace();
    if words.next() != Some("perm") {
        return Err(ParseError::at(
            header.number,
            header.indent + 1,
            ParseErrorKind::Expected("\"perm <n>\" header".into()),
        ));
    }
    let width_tok = words.next().ok_or_else(|| {
        ParseError::at(
            header.number,
            header.indent + header.text.len() + 1,
            ParseErrorKind::Expected("line count after \"perm\"".into()),
        )
    })?;
    let width_col = header.indent + header.text.find(width_tok).unwrap_or(0) + 1;
    let width: u32 = parse_number(width_tok, header.number, width_col)?;
    if words.next().is_some() {
        return Err(ParseError::at(
            header.number,
            width_col,
            ParseErrorKind::TrailingContent,
        ));
    }
    if width == 0 || width > 31 {
        return Err(ParseError::at(
            header.number,
            width_col,
            ParseErrorKind::Expected("a line count between 1 and 31".into()),
        ));
    }

    let body = lines.next().ok_or_else(|| {
        ParseError::at(
            header.number + 1,
            1,
            ParseErrorKind::Expected("comma-separated image list".into()),
        )
    })?;
    let toks = tokens(&body, 0, ',');
    let mut values = Vec::with_capacity(toks.len());
    for &(col, tok) in &toks {
        values.push(parse_number::<usize>(tok, body.number, col)?);
    }
    let expected = 1usize << width;
    if values.len() != expected {
        return Err(ParseError::at(
            body.number,
            1,
            ParseErrorKind::EntryCount {
                declared: width,
                expected,
                found: values.len(),
            },
        ));
    }
    if let Some(extra) = lines.next() {
        return Err(ParseError::at(
            extra.number,
            extra.indent + 1,
            ParseErrorKind::TrailingContent,
        ));
    }
    PermutationMap::from_image_list(&values).map_err(|e| {
        let position = match &e {
            PermError::DuplicateImage { second, .. } => *second,
            PermError::IndexOutOfRange { position, .. } => *position,
            _ => 1,
        };
        ParseError::at(body.number, toks[position - 1].0, e)
    })
}

pub fn emit_perm(p: &PermutationMap) -> String {
    let list: Vec<String> = p.to_image_list().iter().map(usize::to_string).collect();
    format!("perm {}\n{}\n", p.width(), list.join(","))
}

/// Rows of whitespace-separated naturals forming a square, power-of-two
/// sized 0/1 matrix.
pub fn parse_matrix(text: &str) -> Result<PermutationMap, ParseError> {
    let mut rows = Vec::new();
    let mut row_lines = Vec::new();
    for line in content_lines(text) {
        let mut row = Vec::new();
        let mut offset = 0;
        for tok in line.text.split_whitespace() {
            let at = line.text[offset..].find(tok).unwrap_or(0) + offset;
            offset = at + tok.len();
            row.push(parse_number::<u64>(tok, line.number, line.indent + at + 1)?);
        }
        rows.push(row);
        row_lines.push(line.number);
    }
    if rows.is_empty() {
        return Err(ParseError::at(
            1,
            1,
            ParseErrorKind::Expected("matrix rows".into()),
        ));
    }
    let dim = rows.len();
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(ParseError::at(
                row_lines[r],
                1,
                ParseErrorKind::Expected(format!(
                    "{dim} entries in row {}, found {}",
                    r + 1,
                    row.len()
                )),
            ));
        }
    }
    let m = DenseBinaryMatrix::from_rows(&rows).map_err(|e| ParseError::at(row_lines[0], 1, e))?;
    PermutationMap::validate_dense(&m).map_err(|e| {
        let (line, column) = match &e {
            PermError::NonBinaryEntry { row, column, .. } => (row_lines[row - 1], *column),
            PermError::RowOrColumnWeightNotOne {
                axis: Axis::Row,
                index,
                ..
            } => (row_lines[index - 1], 1),
            PermError::RowOrColumnWeightNotOne {
                axis: Axis::Column,
                index,
                ..
            } => (row_lines[0], *index),
            _ => (row_lines[0], 1),
        };
        ParseError::at(line, column, e)
    })
}

pub fn emit_matrix(p: &PermutationMap) -> String {
    let m = DenseBinaryMatrix::from_permutation(p);
    let mut out = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// `v1,...,vn`.
pub fn default_line_names(width: u32) -> Vec<String> {
    (1..=width).map(|i| format!("v{i}")).collect()
}

fn mnemonic(gate: &Gate) -> String {
    match gate {
        Gate::Swap { .. } => "s2".to_string(),
        _ => format!("t{}", gate.controls().len() + 1),
    }
}

/// Writes a circuit with the given line names.
///
/// Gates are written by arity, so an `Mct` with at most two controls is read
/// back as NOT / CNOT / Toffoli.
pub fn emit_circuit(c: &Circuit, names: &[String]) -> String {
    assert_eq!(
        names.len(),
        c.width() as usize,
        "one name per circuit line is required"
    );
    let mut out = format!(".v {}\n", names.join(","));
    for g in c.gates() {
        let operands: Vec<&str> = g
            .lines()
            .iter()
            .map(|&l| names[l as usize - 1].as_str())
            .collect();
        out.push_str(&format!("{} {}\n", mnemonic(g), operands.join(",")));
    }
    out
}

/// A parsed circuit file: the circuit plus its declared line names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitFile {
    pub names: Vec<String>,
    pub circuit: Circuit,
}

pub fn parse_circuit(text: &str) -> Result<CircuitFile, ParseError> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| {
        ParseError::at(
            1,
            1,
            ParseErrorKind::Expected("\".v\" line declaration".into()),
        )
    })?;
    if !header.text.starts_with(".v ") && header.text != ".v" {
        return Err(ParseError::at(
            header.number,
            header.indent + 1,
            ParseErrorKind::Expected("\".v\" line declaration".into()),
        ));
    }
    let mut names = Vec::new();
    let mut index: HashMap<&str, u32> = HashMap::new();
    for (col, tok) in tokens(&header, 2, ',') {
        if tok.is_empty() || tok.chars().any(char::is_whitespace) {
            return Err(ParseError::at(
                header.number,
                col,
                ParseErrorKind::Expected("a line name".into()),
            ));
        }
        if index.insert(tok, names.len() as u32 + 1).is_some() {
            return Err(ParseError::at(
                header.number,
                col,
                ParseErrorKind::DuplicateName(tok.into()),
            ));
        }
        names.push(tok.to_string());
    }
    let mut circuit =
        Circuit::new(names.len() as u32).map_err(|e| ParseError::at(header.number, 1, e))?;

    for line in lines {
        let (head, rest_at) = match line.text.find(char::is_whitespace) {
            Some(at) => (&line.text[..at], at),
            None => (line.text, line.text.len()),
        };
        let head_col = line.indent + 1;
        let arity = match head.strip_prefix('t') {
            Some(k) if head != "s2" => {
                k.parse::<usize>().ok().filter(|&k| k >= 1).ok_or_else(|| {
                    ParseError::at(
                        line.number,
                        head_col,
                        ParseErrorKind::UnknownMnemonic(head.into()),
                    )
                })?
            }
            _ if head == "s2" => 2,
            _ => {
                return Err(ParseError::at(
                    line.number,
                    head_col,
                    ParseErrorKind::UnknownMnemonic(head.into()),
                ))
            }
        };
        let operands = if rest_at < line.text.len() {
            tokens(&line, rest_at, ',')
        } else {
            Vec::new()
        };
        if operands.len() != arity || operands.iter().any(|(_, t)| t.is_empty()) {
            return Err(ParseError::at(
                line.number,
                head_col,
                ParseErrorKind::Arity {
                    mnemonic: head.into(),
                    expected: arity,
                    found: operands.iter().filter(|(_, t)| !t.is_empty()).count(),
                },
            ));
        }
        let mut ids = Vec::with_capacity(arity);
        for &(col, tok) in &operands {
            let id = index.get(tok).ok_or_else(|| {
                ParseError::at(line.number, col, ParseErrorKind::UndeclaredName(tok.into()))
            })?;
            ids.push(*id);
        }
        let gate = if head == "s2" {
            Gate::swap(ids[0], ids[1])
        } else {
            let (target, controls) = ids.split_last().expect("arity >= 1");
            Gate::controlled_not(controls, *target)
        }
        .map_err(|e| ParseError::at(line.number, head_col, e))?;
        circuit
            .push(gate)
            .map_err(|e| ParseError::at(line.number, head_col, e))?;
    }
    Ok(CircuitFile { names, circuit })
}

/// The two-level forms a PLA file can carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaForm {
    Sop(SopForm),
    Esop(EsopForm),
    Pprm(Vec<Pprm>),
}

/// Groups identical input parts across outputs, in first-seen order.
fn pla_rows<K: Copy + PartialEq>(per_output: &[Vec<K>]) -> Vec<(K, Vec<bool>)> {
    let mut rows: Vec<(K, Vec<bool>)> = Vec::new();
    for (o, items) in per_output.iter().enumerate() {
        for &k in items {
            match rows.iter_mut().find(|(r, _)| *r == k) {
                Some((_, outs)) => outs[o] = true,
                None => {
                    let mut outs = vec![false; per_output.len()];
                    outs[o] = true;
                    rows.push((k, outs));
                }
            }
        }
    }
    rows
}

fn pla_text(
    inputs: u32,
    kind: &str,
    rows: Vec<(String, Vec<bool>)>,
    marker: Option<&str>,
) -> String {
    let outputs = rows.first().map_or(0, |(_, o)| o.len());
    let mut out = String::new();
    if let Some(m) = marker {
        out.push_str(m);
        out.push('\n');
    }
    out.push_str(&format!(".i {inputs}\n.o {outputs}\n.type {kind}\n"));
    for (input, outs) in rows {
        let o: String = outs.iter().map(|&b| if b { '1' } else { '0' }).collect();
        out.push_str(&format!("{input} {o}\n"));
    }
    out.push_str(".e\n");
    out
}

fn cube_pla(inputs: u32, outputs: &[Vec<Cube>], kind: &str) -> String {
    let rows = pla_rows(outputs)
        .into_iter()
        .map(|(c, o)| (c.pla_inputs(inputs), o))
        .collect();
    with_output_count(pla_text(inputs, kind, rows, None), outputs.len())
}

/// Fixes the `.o` line when there are no rows to infer it from.
fn with_output_count(text: String, outputs: usize) -> String {
    if text.contains(".o 0\n") && outputs != 0 {
        text.replacen(".o 0\n", &format!(".o {outputs}\n"), 1)
    } else {
        text
    }
}

pub fn emit_pla_sop(form: &SopForm) -> String {
    cube_pla(form.inputs, &form.outputs, "fr")
}

pub fn emit_pla_esop(form: &EsopForm) -> String {
    cube_pla(form.inputs, &form.outputs, "esop")
}

/// PPRM rows use `1` for a variable in the monomial and `0` for one that is
/// not; there are no complemented literals.
pub fn emit_pla_pprm(pprms: &[Pprm]) -> String {
    let inputs = pprms.first().map_or(0, Pprm::inputs);
    let per_output: Vec<Vec<Monomial>> = pprms
        .iter()
        .map(|p| p.terms().iter().copied().collect())
        .collect();
    let rows = pla_rows(&per_output)
        .into_iter()
        .map(|(m, o)| {
            let bits: String = (1..=inputs)
                .map(|k| {
                    if m.0 >> (inputs - k) & 1 == 1 {
                        '1'
                    } else {
                        '0'
                    }
                })
                .collect();
            (bits, o)
        })
        .collect();
    with_output_count(
        pla_text(inputs, "esop", rows, Some(PPRM_PLA_MARKER)),
        pprms.len(),
    )
}

/// Reads a PLA file. Cube covers come back normalized (see
/// [`SopForm::normalized`]), since rows shared between outputs lose their
/// per-output order on disk.
pub fn parse_pla(text: &str) -> Result<PlaForm, ParseError> {
    let is_pprm = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l == PPRM_PLA_MARKER);

    let mut inputs: Option<u32> = None;
    let mut outputs: Option<usize> = None;
    let mut kind: Option<String> = None;
    let mut per_output: Vec<Vec<Cube>> = Vec::new();
    let mut ended = false;

    for line in content_lines(text) {
        if ended {
            return Err(ParseError::at(
                line.number,
                line.indent + 1,
                ParseErrorKind::TrailingContent,
            ));
        }
        let col = line.indent + 1;
        let mut words = line.text.split_whitespace();
        let first = words.next().unwrap_or_default();
        match first {
            ".i" | ".o" => {
                let tok = words.next().ok_or_else(|| {
                    ParseError::at(
                        line.number,
                        col,
                        ParseErrorKind::Expected(format!("a count after {first}")),
                    )
                })?;
                let value: usize = parse_number(tok, line.number, col + 3)?;
                if first == ".i" {
                    if value > crate::forms::MAX_FORM_INPUTS as usize {
                        return Err(ParseError::at(
                            line.number,
                            col + 3,
                            ParseErrorKind::Expected("at most 20 inputs".into()),
                        ));
                    }
                    inputs = Some(value as u32);
                } else {
                    outputs = Some(value);
                    per_output = vec![Vec::new(); value];
                }
            }
            ".type" => {
                let t = words.next().unwrap_or_default();
                if t != "fr" && t != "esop" {
                    return Err(ParseError::at(
                        line.number,
                        col,
                        ParseErrorKind::Expected("\".type fr\" or \".type esop\"".into()),
                    ));
                }
                kind = Some(t.to_string());
            }
            ".e" => ended = true,
            _ => {
                let (Some(n), Some(m)) = (inputs, outputs) else {
                    return Err(ParseError::at(
                        line.number,
                        col,
                        ParseErrorKind::Expected(".i and .o before cube rows".into()),
                    ));
                };
                let out_part = words.next().unwrap_or_default();
                if first.len() != n as usize || out_part.len() != m || words.next().is_some() {
                    return Err(ParseError::at(
                        line.number,
                        col,
                        ParseErrorKind::Expected(format!(
                            "{n} input symbols and {m} output symbols"
                        )),
                    ));
                }
                let mut lits = Vec::with_capacity(n as usize);
                for (i, ch) in first.chars().enumerate() {
                    lits.push(match ch {
                        '1' => Literal::Positive,
                        '0' if is_pprm => Literal::Absent,
                        '0' => Literal::Negative,
                        '-' if !is_pprm => Literal::Absent,
                        _ => {
                            return Err(ParseError::at(
                                line.number,
                                col + i,
                                ParseErrorKind::Expected("input symbol 0, 1 or -".into()),
                            ))
                        }
                    });
                }
                let cube = Cube::from_literals(&lits);
                let out_col = col + first.len() + 1;
                for (o, ch) in out_part.chars().enumerate() {
                    match ch {
                        '1' => {
                            if per_output[o].contains(&cube) {
                                return Err(ParseError::at(
                                    line.number,
                                    col,
                                    ParseErrorKind::DuplicateCube(first.into()),
                                ));
                            }
                            per_output[o].push(cube);
                        }
                        '0' => {}
                        _ => {
                            return Err(ParseError::at(
                                line.number,
                                out_col + o,
                                ParseErrorKind::Expected("output symbol 0 or 1".into()),
                            ))
                        }
                    }
                }
            }
        }
    }
    let last = text.lines().count().max(1);
    let missing = |what: &str| ParseError::at(last, 1, ParseErrorKind::Expected(what.into()));
    let inputs = inputs.ok_or_else(|| missing(".i line"))?;
    outputs.ok_or_else(|| missing(".o line"))?;
    let kind = kind.ok_or_else(|| missing(".type line"))?;
    if !ended {
        return Err(missing(".e line"));
    }
    Ok(if is_pprm {
        PlaForm::Pprm(
            per_output
                .into_iter()
                .map(|cubes| Pprm::new(inputs, cubes.into_iter().map(|c| Monomial(c.care()))))
                .collect(),
        )
    } else if kind == "esop" {
        PlaForm::Esop(
            EsopForm {
                inputs,
                outputs: per_output,
            }
            .normalized(),
        )
    } else {
        PlaForm::Sop(
            SopForm {
                inputs,
                outputs: per_output,
            }
            .normalized(),
        )
    })
}
