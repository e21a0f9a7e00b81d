//! The `godel` command line.
//!
//! Exit status 0 on success, 1 on a domain error (one diagnostic line that
//! starts with the error case), 2 on a usage error.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use godel_core::diagonal::{
    diagonalize, eval_sub_term, goedel_sentence, literal_pipeline, numeral_equations,
    self_numeral_certificate, successor_equations, FixedPointResult, Reading,
};
use godel_core::numbering::{
    decode, encode, encode_formula, encode_size, numeral_of, sub, CodecScheme, GoedelNumber,
};
use godel_core::proofsys::{check_proof, enumerate_provable};
use godel_core::syntax::{
    lex_symbols, parse, render_symbols, Formula, Var, DEFAULT_DISPLAY_THRESHOLD,
};
use num_bigint::BigUint;

use crate::parallel::{enumerate_provable_par, gamma_divergence_par};
use crate::proof_file::{read_proof, ProofFileError};

#[derive(Debug, Parser)]
#[command(
    name = "godel",
    version,
    about = "Goedel numbering, proofs and diagonal fixed points"
)]
struct Cli {
    /// Numbering scheme.
    #[arg(long, global = true, value_enum, default_value_t = SchemeArg::Positional)]
    scheme: SchemeArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SchemeArg {
    /// Base-32 digit concatenation.
    Positional,
    /// Products of prime powers.
    Prime,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReadingArg {
    Z,
    Y,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GeneratorArg {
    /// `z = N[i]`
    Numerals,
    /// `s^i z = 0`
    Successors,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical form of a formula.
    Parse {
        formula: String,
        /// Numerals longer than this print as `N[k]`.
        #[arg(long, default_value_t = DEFAULT_DISPLAY_THRESHOLD)]
        threshold: u64,
    },
    /// Code of a formula, or of a raw symbol sequence.
    Encode { text: String },
    /// Symbol sequence named by a code.
    Decode {
        code: GoedelNumber,
        #[arg(long, default_value_t = DEFAULT_DISPLAY_THRESHOLD)]
        threshold: u64,
    },
    /// `sub(y, var, j)`: substitute the numeral for `j` for `var`.
    Sub {
        y: GoedelNumber,
        #[arg(value_parser = parse_var)]
        var: Var,
        j: BigUint,
    },
    /// The numeral for `n` and its symbol count.
    Numeral {
        n: GoedelNumber,
        /// Print every successor symbol.
        #[arg(long)]
        expand: bool,
    },
    /// Exact size of a formula's code.
    Size { formula: String },
    /// Check a proof file (one formula per line).
    CheckProof { file: PathBuf },
    /// All pairs `r s` with `r <= max` and `r` a proof of `s`.
    ProvePairs {
        max: BigUint,
        /// Scan on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Diagonal fixed point of a formula in its free variable.
    Diagonalize {
        formula: String,
        #[arg(value_parser = parse_var)]
        var: Var,
    },
    /// The Goedel sentence `Ar~P(r,x)` diagonalized in `x`.
    Goedel {
        /// Also print the code of the sentence (fails past the size cap).
        #[arg(long)]
        materialize: bool,
    },
    /// The literal self-referential construction under each reading.
    Literal {
        #[arg(long, value_enum, default_value_t = ReadingArg::Both)]
        reading: ReadingArg,
        #[arg(long)]
        materialize: bool,
    },
    /// Compare a formula's length with the numeral of its code.
    Certificate { formula: String },
    /// Symbol counts of the first `k` conjunction prefixes.
    Gamma {
        k: usize,
        /// The formula `Z` whose code is compared.
        #[arg(long, default_value = "z=0")]
        z: String,
        /// Explicit formulas `s_i`; repeat the flag. Overrides the generator.
        #[arg(long = "s")]
        s: Vec<String>,
        #[arg(long, value_enum, default_value_t = GeneratorArg::Numerals)]
        generator: GeneratorArg,
    },
}

fn parse_var(s: &str) -> Result<Var, String> {
    s.parse()
        .map_err(|_| format!("`{s}` is not one of x y z r w u v"))
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Domain(#[from] godel_core::Error),
    #[error("{0}")]
    ProofFile(#[from] ProofFileError),
    #[error("IoError: {0}")]
    Io(#[from] io::Error),
}

impl From<godel_core::syntax::SyntaxError> for CliError {
    fn from(e: godel_core::syntax::SyntaxError) -> Self {
        CliError::Domain(e.into())
    }
}

type CliResult = Result<(), CliError>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let scheme = match cli.scheme {
        SchemeArg::Positional => CodecScheme::positional(),
        SchemeArg::Prime => CodecScheme::prime_power(),
    };
    match dispatch(cli.command, &scheme, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            1
        }
    }
}

fn dispatch(command: Command, scheme: &CodecScheme, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Parse { formula, threshold } => {
            writeln!(out, "{}", parse(&formula)?.render_with(threshold))?;
        }
        Command::Encode { text } => {
            let code = match parse(&text) {
                Ok(f) => encode_formula(&f, scheme)?,
                Err(e) => encode(&lex_symbols(&text).map_err(|_| e)?, scheme)?,
            };
            writeln!(out, "{code}")?;
        }
        Command::Decode { code, threshold } => {
            let seq = decode(&code, scheme)?;
            match Formula::from_symbols(&seq) {
                Ok(f) => writeln!(out, "{}", f.render_with(threshold))?,
                Err(_) => writeln!(out, "{}", render_symbols(&seq, threshold))?,
            }
        }
        Command::Sub { y, var, j } => {
            writeln!(out, "{}", sub(&y, var, &j, scheme)?)?;
        }
        Command::Numeral { n, expand } => {
            let t = numeral_of(&n);
            let text = if expand {
                t.render_with(u64::MAX)
            } else {
                t.render()
            };
            writeln!(out, "{text}")?;
            writeln!(out, "symbols={}", t.symbol_count())?;
        }
        Command::Size { formula } => {
            writeln!(out, "{}", encode_size(&parse(&formula)?, scheme)?)?;
        }
        Command::CheckProof { file } => {
            let proof = read_proof(&file)?;
            writeln!(out, "{}", check_proof(&proof, scheme))?;
        }
        Command::ProvePairs { max, sequential } => {
            let pairs = if sequential {
                enumerate_provable(&max, scheme)?
            } else {
                enumerate_provable_par(&max, scheme)?
            };
            for p in pairs {
                writeln!(out, "{} {}", p.r, p.s)?;
            }
        }
        Command::Diagonalize { formula, var } => {
            let r = diagonalize(&parse(&formula)?, var, scheme)?;
            fixed_point_report(&r, scheme, out)?;
        }
        Command::Goedel { materialize } => {
            let r = goedel_sentence(scheme)?;
            fixed_point_report(&r, scheme, out)?;
            if materialize {
                writeln!(out, "code={}", eval_sub_term(&r.term(), scheme)?)?;
            }
        }
        Command::Literal {
            reading,
            materialize,
        } => {
            let readings: &[Reading] = match reading {
                ReadingArg::Z => &[Reading::ZFree],
                ReadingArg::Y => &[Reading::YFree],
                ReadingArg::Both => &[Reading::ZFree, Reading::YFree],
            };
            for (i, reading) in readings.iter().enumerate() {
                let r = literal_pipeline(*reading, scheme)?;
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "reading={}", reading.var())?;
                writeln!(out, "n={}", r.n)?;
                writeln!(out, "instance={}", r.instance)?;
                writeln!(out, "alpha_symbols={}", r.instance_report.symbol_count)?;
                writeln!(out, "alpha_digits={}", r.instance_report.digit_length)?;
                writeln!(out, "materializable={}", r.instance_report.materializable)?;
                writeln!(out, "fixed_point={}", pass(r.fixed_point))?;
                writeln!(out, "numeral_symbols={}", r.certificate.numeral_symbols)?;
                writeln!(out, "certificate={}", r.certificate.conclusion)?;
                if materialize {
                    let code = r.instance_code.exact().cloned().ok_or_else(|| {
                        godel_core::Error::CapExceeded(Some(r.instance_report.clone()))
                    })?;
                    writeln!(out, "code={code}")?;
                }
            }
        }
        Command::Certificate { formula } => {
            let c = self_numeral_certificate(&parse(&formula)?, scheme)?;
            writeln!(out, "formula_symbols={}", c.formula_symbols)?;
            writeln!(out, "numeral_symbols={}", c.numeral_symbols)?;
            writeln!(out, "certificate={}", c.conclusion)?;
        }
        Command::Gamma { k, z, s, generator } => {
            let z = parse(&z)?;
            let s: Vec<Formula> = if s.is_empty() {
                match generator {
                    GeneratorArg::Numerals => numeral_equations().take(k).collect(),
                    GeneratorArg::Successors => successor_equations().take(k).collect(),
                }
            } else {
                s.iter().map(|t| parse(t)).collect::<Result<_, _>>()?
            };
            if k == 0 || k > s.len() {
                return Err(godel_core::Error::Bounds {
                    k,
                    available: s.len(),
                }
                .into());
            }
            for (k, count) in gamma_divergence_par(&s, k, &z, scheme)? {
                writeln!(out, "{k} {count}")?;
            }
        }
    }
    Ok(())
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn fixed_point_report(
    r: &FixedPointResult,
    scheme: &CodecScheme,
    out: &mut dyn Write,
) -> CliResult {
    let certificate = self_numeral_certificate(&r.alpha, scheme)?;
    writeln!(out, "n={}", r.n)?;
    writeln!(out, "alpha={}", r.alpha)?;
    writeln!(out, "alpha_symbols={}", r.alpha_code_report.symbol_count)?;
    writeln!(out, "alpha_digits={}", r.alpha_code_report.digit_length)?;
    writeln!(out, "materializable={}", r.alpha_code_report.materializable)?;
    writeln!(out, "fixed_point={}", pass(r.verified))?;
    writeln!(out, "certificate={}", certificate.conclusion)?;
    Ok(())
}
