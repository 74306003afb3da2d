//! Text format for specs: one `key=value` per line, `#` starts a comment.
//!
//! ```text
//! r=7
//! s=7
//! t=7
//! b=x^4+x^2+x+1
//! l=x^2+1
//! a=x^4+x^3+x^2+1
//! g1=x+1
//! g2=x^2+x
//! g3=x^4+x^2+x+1
//! ```
//!
//! `r`, `s` and `t` are required; missing polynomial keys default to 0.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::triplecode::{BlockLengths, TripleSpec};

pub const POLY_KEYS: [&str; 6] = ["b", "l", "a", "g1", "g2", "g3"];

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: Some(line),
        message: message.into(),
    }
}

/// Splits `key=value` tokens of one line, reporting problems against `line`.
pub fn parse_pairs<'a>(line: usize, tokens: impl Iterator<Item = &'a str>) -> Result<Vec<(&'a str, &'a str)>> {
    tokens
        .map(|tok| {
            tok.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| parse_err(line, format!("expected key=value, found '{tok}'")))
        })
        .collect()
}

/// Key/value table with the line each key came from.
#[derive(Debug, Default)]
pub struct Fields<'a> {
    map: BTreeMap<&'a str, (usize, &'a str)>,
}

impl<'a> Fields<'a> {
    pub fn insert(&mut self, line: usize, key: &'a str, value: &'a str) -> Result<()> {
        if let Some((first, _)) = self.map.insert(key, (line, value)) {
            return Err(parse_err(
                line,
                format!("duplicate key '{key}' (first on line {first})"),
            ));
        }
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<(usize, &'a str)> {
        self.map.get(key).copied()
    }

    pub fn keys(&self) -> impl Iterator<Item = (&'a str, usize)> + '_ {
        self.map.iter().map(|(k, (line, _))| (*k, *line))
    }

    pub fn usize(&self, key: &str, fallback_line: usize) -> Result<usize> {
        let (line, v) = self
            .get(key)
            .ok_or_else(|| parse_err(fallback_line, format!("missing required key '{key}'")))?;
        v.parse()
            .map_err(|_| parse_err(line, format!("'{key}' must be a non-negative integer, found '{v}'")))
    }

    pub fn poly(&self, key: &str) -> Result<Gf2Poly> {
        match self.get(key) {
            None => Ok(Gf2Poly::zero()),
            Some((line, v)) => Gf2Poly::parse(v).map_err(|e| match e {
                Error::Parse { message, .. } => parse_err(line, format!("key '{key}': {message}")),
                other => other,
            }),
        }
    }

    /// Builds a spec from `r, s, t` and the six polynomial keys.
    pub fn spec(&self, fallback_line: usize) -> Result<TripleSpec> {
        let (r, s, t) = (
            self.usize("r", fallback_line)?,
            self.usize("s", fallback_line)?,
            self.usize("t", fallback_line)?,
        );
        let lengths = BlockLengths::new(r, s, t)
            .map_err(|e| parse_err(self.get("r").map_or(fallback_line, |(l, _)| l), e.to_string()))?;
        Ok(TripleSpec::new(
            lengths,
            self.poly("b")?,
            self.poly("l")?,
            self.poly("a")?,
            self.poly("g1")?,
            self.poly("g2")?,
            self.poly("g3")?,
        ))
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(before, _)| before).trim()
}

/// Reads every `key=value` line; line numbers are 1-based.
pub fn parse_fields(text: &str) -> Result<Fields<'_>> {
    let mut fields = Fields::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        for (k, v) in parse_pairs(idx + 1, std::iter::once(line))? {
            fields.insert(idx + 1, k, v)?;
        }
    }
    Ok(fields)
}

pub fn parse_spec(text: &str) -> Result<TripleSpec> {
    let fields = parse_fields(text)?;
    for (key, line) in fields.keys() {
        if !["r", "s", "t"].contains(&key) && !POLY_KEYS.contains(&key) {
            return Err(parse_err(line, format!("unknown key '{key}'")));
        }
    }
    fields.spec(text.lines().count().max(1))
}

pub fn format_spec(spec: &TripleSpec) -> String {
    let l = spec.lengths;
    format!(
        "r={}\ns={}\nt={}\nb={}\nl={}\na={}\ng1={}\ng2={}\ng3={}\n",
        l.r, l.s, l.t, spec.b, spec.l, spec.a, spec.g1, spec.g2, spec.g3
    )
}
