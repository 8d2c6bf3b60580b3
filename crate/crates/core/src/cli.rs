// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. [`run_command`] does all the work and returns the
//! exit status with the text for stdout and stderr, so it can be driven from
//! tests without spawning a process.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::forms::{
    extract_truth_table, pprm_of_table, render_pprm_tuple, render_qkmap, FormError, SopForm,
    VariableNames,
};
use crate::io::{
    default_line_names, emit_circuit, emit_perm, emit_pla_esop, emit_pla_pprm, emit_pla_sop,
    parse_circuit, parse_permutation_input, ParseError,
};
use crate::perm::{PermError, PermutationMap, PureState};
use crate::synth::{
    pprm_cost, synth_optimal, synth_transform, verify_circuit, Backend, GateSet, SearchConfig,
    SynthError, DEFAULT_MAX_DEPTH,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_EXHAUSTED: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "revsynth",
    version,
    about = "Check, analyse and synthesize reversible circuits from permutation matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Permutation file (`perm <n>` header) or 0/1 matrix file; `-` reads stdin.
    input: PathBuf,
}

#[derive(Debug, Args)]
struct Naming {
    /// Comma-separated variable names, one per line (default v1..vn).
    #[arg(long, value_delimiter = ',')]
    names: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BackendArg {
    Transform,
    Optimal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GatesArg {
    Cnts,
    Mct,
    Cnot,
}

impl From<GatesArg> for GateSet {
    fn from(g: GatesArg) -> Self {
        match g {
            GatesArg::Cnts => GateSet::Cnts,
            GatesArg::Mct => GateSet::Mct,
            GatesArg::Cnot => GateSet::Cnot,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report whether the input is a well-formed (permutation) matrix.
    Check(Input),
    /// Print the input/output pure-state table.
    Truthtable {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        naming: Naming,
    },
    /// Print the Gray-ordered Karnaugh-style map.
    Qkmap {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        naming: Naming,
    },
    /// Minimized sum-of-products, as PLA.
    Sop {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        naming: Naming,
    },
    /// Exclusive-or sum-of-products, as PLA.
    Esop {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        naming: Naming,
    },
    /// Positive-polarity Reed–Muller expansion, as PLA.
    Pprm {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        naming: Naming,
    },
    /// Synthesize a circuit.
    Synth {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        naming: Naming,
        /// Transformation-based (any width) or minimum-gate search (up to 3 lines).
        #[arg(long, value_enum, default_value = "transform")]
        backend: BackendArg,
        /// Gate library the result is checked against.
        #[arg(long, value_enum, default_value = "mct")]
        gates: GatesArg,
        /// Gate-count bound for the optimal backend.
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: u32,
    },
    /// Apply the permutation to a basis state.
    Simulate {
        #[command(flatten)]
        input: Input,
        /// 1-based basis index of the input state.
        #[arg(long)]
        state: usize,
    },
    /// Check a circuit file against a permutation.
    Verify {
        /// Permutation or matrix file.
        perm: PathBuf,
        /// Circuit file.
        circuit: PathBuf,
    },
    /// Tensor product of two permutations (first acts on the leading lines).
    Tensor { left: PathBuf, right: PathBuf },
    /// Matrix product LEFT * RIGHT (RIGHT is applied first).
    Compose { left: PathBuf, right: PathBuf },
    /// Print the permutation parity.
    Parity(Input),
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    category: &'static str,
    message: String,
    stdout: String,
}

impl Failure {
    fn new(code: i32, category: &'static str, message: impl ToString) -> Self {
        Self {
            code,
            category,
            message: message.to_string(),
            stdout: String::new(),
        }
    }

    fn usage(message: impl ToString) -> Self {
        Self::new(EXIT_USAGE, "usage", message)
    }

    fn validation(message: impl ToString) -> Self {
        Self::new(EXIT_VALIDATION, "validation", message)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::validation(e)
    }
}

impl From<PermError> for Failure {
    fn from(e: PermError) -> Self {
        Failure::validation(e)
    }
}

impl From<FormError> for Failure {
    fn from(e: FormError) -> Self {
        match e {
            FormError::NameCount { .. } => Failure::usage(e),
            _ => Failure::validation(e),
        }
    }
}

impl From<SynthError> for Failure {
    fn from(e: SynthError) -> Self {
        match e {
            SynthError::DepthExhausted { .. } => Failure::new(EXIT_EXHAUSTED, "exhausted", e),
            SynthError::WidthMismatch { .. } => Failure::new(EXIT_MISMATCH, "mismatch", e),
            _ => Failure::usage(e),
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let result = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(path)
    };
    result.map_err(|e| Failure::new(EXIT_USAGE, "io", format!("{}: {e}", path.display())))
}

fn load_perm(path: &Path) -> Result<PermutationMap, Failure> {
    let text = read_text(path)?;
    parse_permutation_input(&text)
        .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))
}

fn names_for(naming: &Naming, width: u32) -> Result<VariableNames, Failure> {
    match &naming.names {
        Some(list) => Ok(VariableNames::custom(list.clone(), width)?),
        None => Ok(VariableNames::positional(width)),
    }
}

fn bits(value: usize, width: u32) -> String {
    (0..width)
        .rev()
        .map(|b| if value >> b & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn execute(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Check(input) => {
            let text = read_text(&input.input)?;
            match parse_permutation_input(&text) {
                Ok(p) => Ok(format!(
                    "WELL-FORMED\nwidth: {}\npermutation: {p}\n",
                    p.width()
                )),
                Err(e) => Err(Failure {
                    stdout: format!("NOT WELL-FORMED\n{}\n", e.kind),
                    ..Failure::validation(e)
                }),
            }
        }
        Command::Truthtable { input, naming } => {
            let p = load_perm(&input.input)?;
            let n = p.width();
            let names = names_for(&naming, n)?;
            let header: String = names.as_slice().join("");
            let mut out = format!("# inputs {header} | outputs {header}\n");
            let table = extract_truth_table(&p);
            for i in 0..p.len() {
                out.push_str(&format!(
                    "{} | {}\n",
                    bits(i, n),
                    bits(table.output_word(i) as usize, n)
                ));
            }
            Ok(out)
        }
        Command::Qkmap { input, naming } => {
            let p = load_perm(&input.input)?;
            let names = names_for(&naming, p.width())?;
            Ok(render_qkmap(&p)?.render(&names))
        }
        Command::Sop { input, naming } => {
            let p = load_perm(&input.input)?;
            let names = names_for(&naming, p.width())?;
            let sop = SopForm::from_table(&extract_truth_table(&p))?;
            Ok(format!(
                "# sop {}\n{}",
                sop.render(&names),
                emit_pla_sop(&sop)
            ))
        }
        Command::Esop { input, naming } => {
            let p = load_perm(&input.input)?;
            let names = names_for(&naming, p.width())?;
            let esop = SopForm::from_table(&extract_truth_table(&p))?.to_esop();
            Ok(format!(
                "# esop {}\n{}",
                esop.render(&names),
                emit_pla_esop(&esop)
            ))
        }
        Command::Pprm { input, naming } => {
            let p = load_perm(&input.input)?;
            let names = names_for(&naming, p.width())?;
            let pprm = SopForm::from_table(&extract_truth_table(&p))?
                .to_esop()
                .to_pprm();
            debug_assert_eq!(Ok(&pprm), pprm_of_table(&extract_truth_table(&p)).as_ref());
            Ok(format!(
                "{}# pprm {}\n",
                emit_pla_pprm(&pprm),
                render_pprm_tuple(&pprm, &names)
            ))
        }
        Command::Synth {
            input,
            naming,
            backend,
            gates,
            max_depth,
        } => {
            let p = load_perm(&input.input)?;
            let line_names = match naming.names {
                Some(list) => VariableNames::custom(list, p.width())?.as_slice().to_vec(),
                None => default_line_names(p.width()),
            };
            let gate_set = GateSet::from(gates);
            let result = match backend {
                BackendArg::Transform => synth_transform(&p, gate_set),
                BackendArg::Optimal => synth_optimal(
                    &p,
                    &SearchConfig {
                        max_depth,
                        gate_set,
                    },
                )?,
            };
            let cost = pprm_cost(&pprm_of_table(&extract_truth_table(&p))?);
            let mut out = emit_circuit(&result.circuit, &line_names);
            out.push_str(&format!("# backend: {}\n", result.backend));
            out.push_str(&format!("# gates: {gate_set}\n"));
            out.push_str(&format!("# gate_count: {}\n", result.gate_count));
            out.push_str(&format!("# verified: {}\n", result.verified));
            out.push_str(&format!("# pprm_cost: {cost}\n"));
            out.push_str(&format!("# parity: {}\n", p.parity()));
            if result.lowering_report.is_empty() {
                out.push_str("# lowering: complete\n");
            } else {
                out.push_str(&format!(
                    "# lowering: {} gate(s) outside {gate_set}\n",
                    result.lowering_report.len()
                ));
                for (pos, gate) in &result.lowering_report {
                    out.push_str(&format!("#   gate {}: {gate}\n", pos + 1));
                }
            }
            debug_assert!(result.backend != Backend::Optimal || p.width() <= 3);
            Ok(out)
        }
        Command::Simulate { input, state } => {
            let p = load_perm(&input.input)?;
            if state == 0 {
                return Err(Failure::usage("--state is 1-based"));
            }
            let s = PureState::new(p.width(), state - 1).map_err(Failure::usage)?;
            let out = p.apply(s)?;
            Ok(format!("{}\n", out.index() + 1))
        }
        Command::Verify { perm, circuit } => {
            let p = load_perm(&perm)?;
            let text = read_text(&circuit)?;
            let file = parse_circuit(&text)
                .map_err(|e| Failure::validation(format!("{}: {e}", circuit.display())))?;
            if verify_circuit(&file.circuit, &p)? {
                Ok("EQUIVALENT\n".to_string())
            } else {
                Err(Failure {
                    stdout: "NOT EQUIVALENT\n".to_string(),
                    ..Failure::new(
                        EXIT_MISMATCH,
                        "mismatch",
                        format!(
                            "circuit realizes {}, expected {p}",
                            file.circuit.permutation()
                        ),
                    )
                })
            }
        }
        Command::Tensor { left, right } => {
            let t = load_perm(&left)?.tensor(&load_perm(&right)?)?;
            Ok(emit_perm(&t))
        }
        Command::Compose { left, right } => {
            let c = load_perm(&left)?.compose(&load_perm(&right)?)?;
            Ok(emit_perm(&c))
        }
        Command::Parity(input) => Ok(format!("{}\n", load_perm(&input.input)?.parity())),
    }
}

/// Runs one command. `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandOutput {
                        code: EXIT_OK,
                        stdout: rendered,
                        stderr: String::new(),
                    }
                }
                _ => CommandOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("error[usage]: {rendered}"),
                },
            };
        }
    };
    match execute(cli) {
        Ok(stdout) => CommandOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(f) => CommandOutput {
            code: f.code,
            stdout: f.stdout,
            stderr: format!("error[{}]: {}\n", f.category, f.message),
        },
    }
}
