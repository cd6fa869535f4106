//! Resolving command-line inputs: `zoo:<entry>` or a definition file path,
//! and field names.

use std::fs;

use hopf_trace::linalg::Field;
use hopf_trace::suite::Subject;
use hopf_trace::zoo::ZooEntry;

use crate::definition::{self, DefinitionError, DefinitionFile, Loaded, Registry};

/// Environment variable giving the default field for zoo inputs.
pub const FIELD_ENV: &str = "HOPFTRACE_FIELD";

/// Accepts `rational`, `Q`, `prime:p`, `GF(p)` or a bare prime.
pub fn parse_field(text: &str) -> Result<Field, String> {
    let t = text.trim();
    let prime = |p: &str| -> Result<Field, String> {
        let p: u64 = p.trim().parse().map_err(|_| format!("bad prime {p:?}"))?;
        Field::prime(p).map_err(|e| e.to_string())
    };
    match t {
        "rational" | "Q" | "q" => Ok(Field::Rational),
        _ => {
            if let Some(p) = t.strip_prefix("prime:") {
                prime(p)
            } else if let Some(p) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
                prime(p)
            } else if t.chars().all(|c| c.is_ascii_digit()) && !t.is_empty() {
                prime(t)
            } else {
                Err(format!("unknown field {text:?}; expected rational, prime:p or GF(p)"))
            }
        }
    }
}

/// Reads and parses a definition file, prefixing diagnostics with the path.
pub fn read_file(path: &str) -> Result<DefinitionFile, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    definition::parse(&text).map_err(|e| format!("{path}: {e}"))
}

/// A loaded input together with the file it came from, if any.
pub struct Input {
    pub loaded: Loaded,
    pub file: Option<DefinitionFile>,
}

pub fn resolve(input: &str, field: Field) -> Result<Input, String> {
    if let Some(name) = input.strip_prefix("zoo:") {
        let entry = ZooEntry::parse(name).map_err(|e| e.to_string())?;
        let subject = Subject::zoo(&entry, field).map_err(|e| e.to_string())?;
        let h = subject.hopf.clone().expect("zoo entries are Hopf algebras");
        let registry = Registry::builtin(&h).map_err(|e| e.to_string())?;
        let loaded = Loaded { subject, registry: Some(registry), basis: Some(entry.basis_labels()) };
        return Ok(Input { loaded, file: None });
    }
    let file = read_file(input)?;
    let loaded = definition::load(&file).map_err(|e: DefinitionError| format!("{input}: {e}"))?;
    Ok(Input { loaded, file: Some(file) })
}
