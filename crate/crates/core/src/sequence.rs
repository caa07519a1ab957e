//! Sequence data model, coverage parameters, and the plain-text file format.

use crate::error::{Error, Result};

/// A finite sequence of symbol indices over the alphabet {0, …, n-1}.
///
/// Symbols are dense integer indices; mapping richer alphabets onto
/// indices is the caller's job. The empty sequence is representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    symbols: Vec<u32>,
    n: u32,
}

impl Sequence {
    /// Builds a sequence, checking every entry against the alphabet size.
    pub fn new(n: u32, symbols: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s >= n) {
            return Err(Error::SymbolOutOfRange {
                symbol: bad as u64,
                n: n as u64,
            });
        }
        Ok(Self { symbols, n })
    }

    /// Infers the alphabet size as max(symbol)+1.
    pub fn from_symbols(symbols: Vec<u32>) -> Self {
        let n = symbols.iter().max().map_or(0, |&m| m + 1);
        Self { symbols, n }
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// Coverage parameters: alphabet size n, radius k, subset size t.
///
/// t defaults to 2 (pairs). Requesting t-subset coverage with t > k+1 is
/// rejected whenever n ≥ t, because a window of k+1 positions cannot
/// contain t distinct symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct RadiusSpec {
    pub n: u32,
    pub k: u32,
    pub t: u32,
}

impl RadiusSpec {
    pub fn new(n: u32, k: u32, t: u32) -> Result<Self> {
        if n < 1 || k < 1 {
            return Err(Error::InvalidParameters(format!(
                "need n >= 1 and k >= 1, got n={n} k={k}"
            )));
        }
        if t < 2 {
            return Err(Error::InvalidParameters(format!(
                "subset size must be at least 2, got t={t}"
            )));
        }
        if t > k + 1 && n >= t {
            return Err(Error::InvalidParameters(format!(
                "t={t} exceeds window size k+1={} with n={n} >= t; coverage is impossible",
                k + 1
            )));
        }
        Ok(Self { n, k, t })
    }

    /// Classic pair coverage (t = 2).
    pub fn pairs(n: u32, k: u32) -> Result<Self> {
        Self::new(n, k, 2)
    }
}

/// A sequence file plus any parameters carried in its header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    pub sequence: Sequence,
    pub k: Option<u32>,
    pub t: Option<u32>,
}

/// Parses the sequence text format: an optional header line
/// `n=<int> k=<int> t=<int>` followed by whitespace-separated decimal
/// symbol indices. Without a header the alphabet size is max(symbol)+1.
pub fn parse_sequence_file(text: &str) -> Result<SequenceFile> {
    let mut n: Option<u32> = None;
    let mut k: Option<u32> = None;
    let mut t: Option<u32> = None;
    let mut body_start = 0usize;

    let lines: Vec<&str> = text.lines().collect();
    if let Some(pos) = lines.iter().position(|l| !l.trim().is_empty()) {
        if lines[pos].contains('=') {
            for tok in lines[pos].split_whitespace() {
                let (key, val) = tok
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("bad header token {tok:?}")))?;
                let val: u32 = val
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad header value {tok:?}")))?;
                match key {
                    "n" => n = Some(val),
                    "k" => k = Some(val),
                    "t" => t = Some(val),
                    _ => return Err(Error::Parse(format!("unknown header key {key:?}"))),
                }
            }
            body_start = pos + 1;
        }
    }

    let mut symbols = Vec::new();
    for line in &lines[body_start.min(lines.len())..] {
        for tok in line.split_whitespace() {
            let s: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad symbol {tok:?}")))?;
            symbols.push(s);
        }
    }

    let sequence = match n {
        Some(n) => Sequence::new(n, symbols)?,
        None => Sequence::from_symbols(symbols),
    };
    Ok(SequenceFile { sequence, k, t })
}

/// Renders a sequence in the text format, always emitting the header.
pub fn write_sequence_file(seq: &Sequence, k: u32, t: u32) -> String {
    let mut out = format!("n={} k={} t={}\n", seq.alphabet_size(), k, t);
    let body: Vec<String> = seq.symbols().iter().map(|s| s.to_string()).collect();
    out.push_str(&body.join(" "));
    out.push('\n');
    out
}

/// The 8-ary 3-radius example sequence; handy in tests and docs.
pub fn example_8ary_3radius() -> Sequence {
    Sequence::new(8, vec![0, 1, 2, 3, 4, 5, 6, 7, 0, 1, 2, 4, 5, 6, 3, 7]).unwrap()
}
