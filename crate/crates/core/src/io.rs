//! Strict text formats.
//!
//! Grid format: the order `n` on the first line, then `n` lines of exactly `n`
//! characters `0`/`1`. Tuple format (`n <= 64`): the order on the first line,
//! then one line with the `n` row values in decimal separated by single
//! spaces. Every line, including the last, ends with a single `\n`, and
//! numbers have no sign and no leading zeros. Parsers accept exactly what the
//! emitters produce; errors carry the 1-based line number.

use std::fmt::Write as _;

use crate::bitrow::BitMatrix;
use crate::error::{Error, Result};
use crate::MAX_DIM;

/// Widest order the tuple format supports.
pub const MAX_TUPLE_DIM: usize = 64;

/// Splits `text` into newline-terminated lines. A final fragment with no
/// terminator is returned as `Err(line_number)`.
struct Lines<'a> {
    rest: &'a str,
    line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            rest: text,
            line: 0,
        }
    }

    fn next_line(&mut self, what: &str) -> Result<&'a str> {
        self.line += 1;
        match self.rest.find('\n') {
            Some(pos) => {
                let l = &self.rest[..pos];
                self.rest = &self.rest[pos + 1..];
                Ok(l)
            }
            None if self.rest.is_empty() => Err(Error::parse(self.line, format!("missing {what}"))),
            None => Err(Error::parse(
                self.line,
                "line is not terminated by a newline",
            )),
        }
    }

    fn expect_end(&self) -> Result<()> {
        if self.rest.is_empty() {
            Ok(())
        } else {
            Err(Error::parse(self.line + 1, "unexpected trailing content"))
        }
    }
}

fn parse_decimal(s: &str, line: usize, what: &str) -> Result<u64> {
    let canonical =
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'));
    if !canonical {
        return Err(Error::parse(
            line,
            format!("{what} {s:?} is not a canonical decimal"),
        ));
    }
    s.parse()
        .map_err(|_| Error::parse(line, format!("{what} {s} is too large")))
}

fn parse_order(lines: &mut Lines<'_>, max: usize) -> Result<usize> {
    let l = lines.next_line("dimension line")?;
    let n = parse_decimal(l, lines.line, "dimension")?;
    if n == 0 || n > max as u64 {
        return Err(Error::parse(
            lines.line,
            format!("dimension {n} outside 1..={max}"),
        ));
    }
    Ok(n as usize)
}

fn parse_grid_body(lines: &mut Lines<'_>) -> Result<BitMatrix> {
    let n = parse_order(lines, MAX_DIM)?;
    let mut m = BitMatrix::new_zero(n)?;
    for i in 0..n {
        let l = lines.next_line(&format!("row {i}"))?;
        if l.len() != n {
            return Err(Error::parse(
                lines.line,
                format!("row {i} has {} characters, expected {n}", l.len()),
            ));
        }
        for (j, c) in l.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => m.set(i, j, true)?,
                _ => {
                    return Err(Error::parse(
                        lines.line,
                        format!("illegal character {:?} in column {j}", c as char),
                    ))
                }
            }
        }
    }
    Ok(m)
}

pub fn parse_grid(text: &str) -> Result<BitMatrix> {
    let mut lines = Lines::new(text);
    let m = parse_grid_body(&mut lines)?;
    lines.expect_end()?;
    Ok(m)
}

/// Parses zero or more grid documents written back to back.
pub fn parse_grids(text: &str) -> Result<Vec<BitMatrix>> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while !lines.rest.is_empty() {
        out.push(parse_grid_body(&mut lines)?);
    }
    Ok(out)
}

pub fn emit_grid(m: &BitMatrix) -> String {
    let n = m.n();
    let mut s = String::with_capacity((n + 1) * n + 8);
    writeln!(s, "{n}").unwrap();
    write!(s, "{m}").unwrap();
    s
}

pub fn parse_tuple(text: &str) -> Result<BitMatrix> {
    let mut lines = Lines::new(text);
    let n = parse_order(&mut lines, MAX_TUPLE_DIM)?;
    let l = lines.next_line("row values line")?;
    let line = lines.line;
    let fields: Vec<&str> = l.split(' ').collect();
    if fields.len() != n {
        return Err(Error::parse(
            line,
            format!("expected {n} row values, found {}", fields.len()),
        ));
    }
    let limit = u64::MAX >> (64 - n);
    let mut rows = Vec::with_capacity(n);
    for (i, f) in fields.into_iter().enumerate() {
        let v = parse_decimal(f, line, "row value")?;
        if v > limit {
            return Err(Error::parse(
                line,
                format!("row {i} value {v} exceeds 2^{n} - 1 = {limit}"),
            ));
        }
        rows.push(v);
    }
    lines.expect_end()?;
    BitMatrix::from_row_values(&rows)
}

pub fn emit_tuple(m: &BitMatrix) -> Result<String> {
    let rows = m.row_values()?;
    let mut s = format!("{}\n", m.n());
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        write!(s, "{r}").unwrap();
    }
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(r: Result<BitMatrix>) -> usize {
        match r {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn grid_basics() {
        assert_eq!(
            parse_grid("2\n10\n01\n").unwrap(),
            BitMatrix::identity(2).unwrap()
        );
        let t = "3\n101\n000\n111\n";
        assert_eq!(emit_grid(&parse_grid(t).unwrap()), t);
    }

    #[test]
    fn grid_errors_name_the_line() {
        assert_eq!(line_of(parse_grid("2\n10\n0\n")), 3);
        assert_eq!(line_of(parse_grid("")), 1);
        assert_eq!(line_of(parse_grid("x\n")), 1);
        assert_eq!(line_of(parse_grid("0\n")), 1);
        assert_eq!(line_of(parse_grid("02\n10\n01\n")), 1);
        assert_eq!(line_of(parse_grid("+2\n10\n01\n")), 1);
        assert_eq!(line_of(parse_grid("2\n10\n")), 3);
        assert_eq!(line_of(parse_grid("2\n10\n01")), 3);
        assert_eq!(line_of(parse_grid("2\n1a\n01\n")), 2);
        assert_eq!(line_of(parse_grid("2\n10 \n01\n")), 2);
        assert_eq!(line_of(parse_grid("2\n10\r\n01\n")), 2);
        assert_eq!(line_of(parse_grid("2\n10\n01\n\n")), 4);
        assert_eq!(line_of(parse_grid("2\n10\n01\n11\n")), 4);
    }

    #[test]
    fn grid_stream() {
        let a = BitMatrix::identity(2).unwrap();
        let b = BitMatrix::new_zero(3).unwrap();
        let text = emit_grid(&a) + &emit_grid(&b);
        assert_eq!(parse_grids(&text).unwrap(), vec![a, b]);
        assert!(parse_grids("").unwrap().is_empty());
        assert!(parse_grids("1\n1\n2\n1").is_err());
    }

    #[test]
    fn tuple_basics() {
        assert_eq!(
            parse_tuple("2\n2 1\n").unwrap(),
            BitMatrix::identity(2).unwrap()
        );
        // 101 -> 4+1, 000 -> 0, 111 -> 4+2+1
        let m = parse_grid("3\n101\n000\n111\n").unwrap();
        assert_eq!(emit_tuple(&m).unwrap(), "3\n5 0 7\n");
        let full = parse_tuple("1\n1\n").unwrap();
        assert_eq!(full, BitMatrix::identity(1).unwrap());
        let big = format!("64\n{}\n", vec![u64::MAX.to_string(); 64].join(" "));
        assert_eq!(emit_tuple(&parse_tuple(&big).unwrap()).unwrap(), big);
    }

    #[test]
    fn tuple_errors() {
        assert_eq!(line_of(parse_tuple("3\n8 0 0\n")), 2);
        assert_eq!(line_of(parse_tuple("3\n1 0\n")), 2);
        assert_eq!(line_of(parse_tuple("3\n1  0 0\n")), 2);
        assert_eq!(line_of(parse_tuple("3\n01 0 0\n")), 2);
        assert_eq!(line_of(parse_tuple("3\n1 0 0 \n")), 2);
        assert_eq!(line_of(parse_tuple("65\n0\n")), 1);
        assert_eq!(line_of(parse_tuple("3\n1 0 0\nextra")), 3);
        assert_eq!(line_of(parse_tuple("2\n")), 2);
        assert_eq!(
            emit_tuple(&BitMatrix::new_zero(65).unwrap()),
            Err(Error::UnsupportedForDimension { n: 65 })
        );
    }
}
