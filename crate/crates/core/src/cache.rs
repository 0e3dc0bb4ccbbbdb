//! Line-oriented text cache for a [`JackTable`].
//!
//! ```text
//! NSJACK 1
//! N=2
//! alpha=2/1
//! E 0,0 := 1 * 0,0
//! E 1,0 := 1 * 1,0 ; 1/3 * 0,1
//! ```
//!
//! Records are ordered by weight, then lexicographically decreasing; terms
//! within a record are lexicographically decreasing. Parsing accepts only the
//! canonical spelling, so `serialize(parse(s)) == s` for every accepted `s`.

use std::fmt::Write as _;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::jack::JackTable;
use crate::poly::Poly;
use crate::scalar::{format_scalar, format_scalar_full, parse_scalar, Scalar};

pub const FORMAT_TAG: &str = "NSJACK";
pub const FORMAT_VERSION: u32 = 1;

fn exponents(c: &Composition) -> String {
    c.parts()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn serialize(table: &JackTable) -> String {
    let mut out = String::new();
    writeln!(out, "{FORMAT_TAG} {FORMAT_VERSION}").unwrap();
    writeln!(out, "N={}", table.nvars()).unwrap();
    writeln!(out, "alpha={}", format_scalar_full(table.alpha())).unwrap();
    for (eta, poly) in table.sorted_entries() {
        let terms: Vec<String> = poly
            .terms()
            .rev()
            .map(|(m, c)| format!("{} * {}", format_scalar(c), exponents(m)))
            .collect();
        writeln!(out, "E {} := {}", exponents(eta), terms.join(" ; ")).unwrap();
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse(format!("line {line}: {}", msg.into()))
}

fn parse_composition(s: &str, n: usize, line: usize) -> Result<Composition> {
    let parts = s
        .split(',')
        .map(|x| x.parse::<u32>().map_err(|_| parse_err(line, format!("bad exponent `{x}`"))))
        .collect::<Result<Vec<_>>>()?;
    if parts.len() != n {
        return Err(parse_err(line, format!("expected {n} entries in `{s}`")));
    }
    let c = Composition::new(parts);
    if exponents(&c) != s {
        return Err(parse_err(line, format!("non-canonical exponents `{s}`")));
    }
    Ok(c)
}

fn parse_canonical_scalar(s: &str, line: usize) -> Result<Scalar> {
    let x = parse_scalar(s).map_err(|e| parse_err(line, e.to_string()))?;
    if format_scalar(&x) != s {
        return Err(parse_err(line, format!("non-canonical rational `{s}`")));
    }
    Ok(x)
}

fn header_value<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, key: &str) -> Result<(usize, &'a str)> {
    let (no, line) = lines.next().ok_or_else(|| Error::Parse(format!("missing `{key}` header")))?;
    line.strip_prefix(key)
        .map(|v| (no, v))
        .ok_or_else(|| parse_err(no, format!("expected `{key}...`")))
}

/// Parses a cache produced by [`serialize`].
pub fn parse(text: &str) -> Result<JackTable> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, tag) = header_value(&mut lines, &format!("{FORMAT_TAG} "))?;
    if tag != FORMAT_VERSION.to_string() {
        return Err(Error::Parse(format!("unsupported version `{tag}`")));
    }
    let (no, n) = header_value(&mut lines, "N=")?;
    let n: usize = n.parse().map_err(|_| parse_err(no, "bad N"))?;
    let (no, alpha_text) = header_value(&mut lines, "alpha=")?;
    let alpha = parse_scalar(alpha_text).map_err(|e| parse_err(no, e.to_string()))?;
    if format_scalar_full(&alpha) != alpha_text {
        return Err(parse_err(no, "alpha must be written num/den in lowest terms"));
    }
    let mut table = JackTable::new(n, alpha)?;
    let mut previous: Option<Composition> = None;
    for (no, line) in lines {
        let body = line
            .strip_prefix("E ")
            .ok_or_else(|| parse_err(no, "record must start with `E `"))?;
        let (head, rest) = body
            .split_once(" := ")
            .ok_or_else(|| parse_err(no, "missing ` := `"))?;
        let eta = parse_composition(head, n, no)?;
        if let Some(prev) = &previous {
            let ordered = (prev.weight(), std::cmp::Reverse(prev)) < (eta.weight(), std::cmp::Reverse(&eta));
            if !ordered {
                return Err(parse_err(no, "records out of order"));
            }
        }
        let mut poly = Poly::zero(n);
        let mut last: Option<Composition> = None;
        for term in rest.split(" ; ") {
            let (c, m) = term
                .split_once(" * ")
                .ok_or_else(|| parse_err(no, format!("bad term `{term}`")))?;
            let c = parse_canonical_scalar(c, no)?;
            let m = parse_composition(m, n, no)?;
            if num_traits::Zero::is_zero(&c) || last.as_ref().is_some_and(|l| *l <= m) {
                return Err(parse_err(no, "terms must be nonzero and strictly decreasing"));
            }
            last = Some(m.clone());
            poly.add_term(m, c);
        }
        table.insert(eta.clone(), poly)?;
        previous = Some(eta);
    }
    Ok(table)
}

/// True when both tables hold the same `(N, α)` and identical entries.
pub fn tables_equal(a: &JackTable, b: &JackTable) -> bool {
    a.nvars() == b.nvars() && a.alpha() == b.alpha() && a.sorted_entries() == b.sorted_entries()
}
