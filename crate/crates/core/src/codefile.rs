//! Plain-text code files.
//!
//! ```text
//! p=2 n=5 format=pauli
//! # five-qubit code
//! ZXXZI
//! IZXXZ
//! ```
//!
//! The first non-comment line is the header. `format=pauli` lines use the
//! Pauli text grammar; `format=symplectic` lines are `a_1 … a_n | b_1 … b_n`.
//! Lines starting with `#` and blank lines are ignored.

use std::fmt;
use std::str::FromStr;

use crate::code::SubsystemCode;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::symplectic::{parse_pauli, PauliVector};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Format {
    Pauli,
    Symplectic,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Pauli => "pauli",
            Format::Symplectic => "symplectic",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pauli" => Ok(Format::Pauli),
            "symplectic" => Ok(Format::Symplectic),
            other => Err(Error::InvalidParameter(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CodeFile {
    pub p: u32,
    pub n: usize,
    pub format: Format,
    pub generators: Vec<PauliVector>,
}

impl CodeFile {
    pub fn from_code(code: &SubsystemCode, format: Format) -> Self {
        CodeFile {
            p: code.field().modulus(),
            n: code.n(),
            format,
            generators: code.generators().to_vec(),
        }
    }

    pub fn to_code(&self) -> Result<SubsystemCode> {
        SubsystemCode::from_generators(self.p, self.n, &self.generators)
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(line: usize, text: &str) -> Result<(u32, usize, Format)> {
    let (mut p, mut n, mut format) = (None, None, None);
    for field in text.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| parse_error(line, format!("expected key=value, found `{field}`")))?;
        let bad = |what: &str| parse_error(line, format!("invalid {what} `{value}`"));
        match key {
            "p" => p = Some(value.parse::<u32>().map_err(|_| bad("modulus"))?),
            "n" => n = Some(value.parse::<usize>().map_err(|_| bad("qudit count"))?),
            "format" => format = Some(value.parse::<Format>().map_err(|_| bad("format"))?),
            other => return Err(parse_error(line, format!("unknown header key `{other}`"))),
        }
    }
    let p = p.ok_or_else(|| parse_error(line, "header is missing p="))?;
    let n = n.ok_or_else(|| parse_error(line, "header is missing n="))?;
    let format = format.ok_or_else(|| parse_error(line, "header is missing format="))?;
    Field::new(p).map_err(|e| parse_error(line, e.to_string()))?;
    Ok((p, n, format))
}

fn parse_symplectic(text: &str, p: u32, n: usize) -> Result<PauliVector> {
    let (a, b) = text
        .split_once('|')
        .ok_or_else(|| Error::InvalidParameter("expected `|` between the two blocks".into()))?;
    let block = |s: &str| -> Result<Vec<u32>> {
        let v = s
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|_| Error::InvalidToken(t.to_string())))
            .collect::<Result<Vec<u32>>>()?;
        if v.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: v.len(),
            });
        }
        Ok(v)
    };
    PauliVector::new(Field::new(p)?, block(a)?, block(b)?)
}

pub fn parse_code_file(text: &str) -> Result<CodeFile> {
    let mut header = None;
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let Some((p, n, format)) = header else {
            header = Some(parse_header(line, content)?);
            continue;
        };
        let g = match format {
            Format::Pauli => parse_pauli(content, p),
            Format::Symplectic => parse_symplectic(content, p, n),
        }
        .map_err(|e| parse_error(line, e.to_string()))?;
        if g.n() != n {
            return Err(parse_error(
                line,
                format!("generator has {} qudits, header says {n}", g.n()),
            ));
        }
        generators.push(g);
    }
    let (p, n, format) = header.ok_or_else(|| parse_error(1, "missing header line"))?;
    Ok(CodeFile {
        p,
        n,
        format,
        generators,
    })
}

impl fmt::Display for CodeFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p={} n={} format={}", self.p, self.n, self.format)?;
        for g in &self.generators {
            match self.format {
                Format::Pauli => writeln!(f, "{g}")?,
                Format::Symplectic => {
                    let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                    writeln!(f, "{} | {}", join(g.x()), join(g.z()))?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for CodeFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_code_file(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use proptest::prelude::*;

    #[test]
    fn five_qubit_text() {
        let text = "# five-qubit code\np=2 n=5 format=pauli\nZXXZI\nIZXXZ\n\n# more\nZIZXX\nXZIZX\n";
        let file: CodeFile = text.parse().unwrap();
        assert_eq!(file.to_code().unwrap(), builtin::five_qubit());
        assert_eq!(file.generators.len(), 4);
    }

    #[test]
    fn symplectic_text() {
        let text = "p=3 n=2 format=symplectic\n1 2 | 0 1\n0 0 | 2 2\n";
        let file = parse_code_file(text).unwrap();
        assert_eq!(file.generators[0].x(), &[1, 2]);
        assert_eq!(file.generators[1].z(), &[2, 2]);
        assert_eq!(file.to_string(), text);
    }

    #[test]
    fn empty_generator_list() {
        let file = parse_code_file("p=5 n=3 format=pauli\n").unwrap();
        assert!(file.to_code().unwrap().gauge().is_zero());
    }

    fn line_of(text: &str) -> usize {
        match parse_code_file(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_files_report_lines() {
        assert_eq!(line_of(""), 1);
        assert_eq!(line_of("# only a comment\n"), 1);
        assert_eq!(line_of("p=4 n=2 format=pauli\n"), 1);
        assert_eq!(line_of("p=2 n=2\n"), 1);
        assert_eq!(line_of("p=2 n=x format=pauli\n"), 1);
        assert_eq!(line_of("p=2 n=2 format=json\n"), 1);
        assert_eq!(line_of("p=2 n=2 format=pauli q=1\n"), 1);
        assert_eq!(line_of("p=2 n=2 format=pauli\nXX\nXQ\n"), 3);
        assert_eq!(line_of("p=2 n=2 format=pauli\n# c\nXXX\n"), 3);
        assert_eq!(line_of("p=3 n=2 format=pauli\nX1Z0 X3Z0\n"), 2);
        assert_eq!(line_of("p=3 n=2 format=symplectic\n1 2 0 1\n"), 2);
        assert_eq!(line_of("p=3 n=2 format=symplectic\n1 2 | 0\n"), 2);
        assert_eq!(line_of("p=3 n=2 format=symplectic\n1 3 | 0 0\n"), 2);
        assert_eq!(line_of("p=3 n=2 format=symplectic\n1 a | 0 0\n"), 2);
    }

    fn random_file(seed: u64, p: u32, n: usize, format: Format) -> CodeFile {
        let code = builtin::random(p, n, (seed % (2 * n as u64 + 1)) as usize, seed).unwrap();
        CodeFile::from_code(&code, format)
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(
            seed in any::<u64>(),
            p in prop_oneof![Just(2u32), Just(3u32), Just(5u32)],
            n in 1usize..=5,
            symplectic in any::<bool>(),
        ) {
            let format = if symplectic { Format::Symplectic } else { Format::Pauli };
            let file = random_file(seed, p, n, format);
            let back = parse_code_file(&file.to_string()).unwrap();
            prop_assert_eq!(&back, &file);
            prop_assert_eq!(back.to_code().unwrap(), file.to_code().unwrap());
        }
    }
}
