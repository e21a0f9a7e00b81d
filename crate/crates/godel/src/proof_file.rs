//! Proof files: one formula per line. Blank lines and lines starting with `#`
//! are skipped.

use std::fs;
use std::io;
use std::path::Path;

use godel_core::proofsys::Proof;
use godel_core::syntax::{parse, SyntaxError};

#[derive(Debug, thiserror::Error)]
pub enum ProofFileError {
    #[error("IoError: {0}")]
    Io(#[from] io::Error),
    #[error("SyntaxError: line {line} {source}")]
    Syntax { line: usize, source: SyntaxError },
    #[error("EmptySequence: the proof has no lines")]
    Empty,
}

pub fn parse_proof(text: &str) -> Result<Proof, ProofFileError> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f = parse(line).map_err(|source| ProofFileError::Syntax {
            line: i + 1,
            source,
        })?;
        lines.push(f);
    }
    Proof::new(lines).map_err(|_| ProofFileError::Empty)
}

pub fn read_proof(path: &Path) -> Result<Proof, ProofFileError> {
    parse_proof(&fs::read_to_string(path)?)
}
