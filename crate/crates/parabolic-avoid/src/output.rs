//! Output formats shared by the command line and the examples: JSON with
//! big integers as decimal strings, CSV with a header row, and OEIS-style
//! b-files ("n a(n)" per line).

use std::fmt::Display;

use num::BigInt;

use crate::{Error, Result};

/// One "index value" pair per line, space separated, newline terminated.
pub fn format_bfile<T: Display>(start: usize, values: &[T]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        out.push_str(&format!("{} {v}\n", start + i));
    }
    out
}

/// Parses a b-file back into (index, value) pairs. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<(usize, BigInt)>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::OutOfRange(format!("malformed b-file line {line:?}")));
        };
        let n = n
            .parse()
            .map_err(|_| Error::OutOfRange(format!("bad index in b-file line {line:?}")))?;
        let v = v
            .parse()
            .map_err(|_| Error::OutOfRange(format!("bad value in b-file line {line:?}")))?;
        out.push((n, v));
    }
    Ok(out)
}

/// CSV with a header row; fields are rendered with `Display` and joined
/// by commas.
pub fn format_csv<T: Display>(header: &[&str], rows: &[Vec<T>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let fields: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}
