//! Line-oriented text formats and parsing primitives.
//!
//! The matrix format is the foundation every other file format builds on:
//!
//! ```text
//! field 2^<k> modulus=<hex>
//! <rows> <cols>
//! <hex entry> <hex entry> ...        (one line per row)
//! ```
//!
//! Writing then reading any matrix reproduces it bit-exactly, and digests
//! are computed over exactly these canonical strings.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::mat::Mat;
use sha2::{Digest, Sha256};

/// Sequential line reader that tracks 1-based line numbers for error
/// reporting.
pub struct LineScanner<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> LineScanner<'a> {
    pub fn new(text: &'a str) -> Self {
        LineScanner {
            lines: text.lines().collect(),
            pos: 0,
        }
    }

    /// 1-based number of the line about to be read.
    pub fn line_number(&self) -> usize {
        self.pos + 1
    }

    pub fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.pos,
            msg: msg.into(),
        }
    }

    pub fn is_exhausted(&mut self) -> bool {
        self.peek_line().is_none()
    }

    /// Next non-empty line, trimmed; `None` at end of input.
    pub fn peek_line(&mut self) -> Option<&'a str> {
        while self.pos < self.lines.len() && self.lines[self.pos].trim().is_empty() {
            self.pos += 1;
        }
        self.lines.get(self.pos).map(|l| l.trim())
    }

    pub fn next_line(&mut self) -> Result<&'a str> {
        match self.peek_line() {
            Some(l) => {
                self.pos += 1;
                Ok(l)
            }
            None => Err(Error::Parse {
                line: self.lines.len(),
                msg: "unexpected end of input".into(),
            }),
        }
    }

    /// Consume a line that must start with `keyword` followed by
    /// whitespace-separated tokens; returns the remaining tokens.
    pub fn expect_keyword(&mut self, keyword: &str) -> Result<Vec<&'a str>> {
        let line = self.next_line()?;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some(t) if t == keyword => Ok(tokens.collect()),
            Some(t) => Err(self.err(format!("expected '{keyword}', found '{t}'"))),
            None => Err(self.err(format!("expected '{keyword}', found empty line"))),
        }
    }
}

/// Extract the value of a `key=value` token from a token list.
pub fn kv<'a>(tokens: &[&'a str], key: &str) -> Result<&'a str> {
    for t in tokens {
        if let Some(rest) = t.strip_prefix(key) {
            if let Some(v) = rest.strip_prefix('=') {
                return Ok(v);
            }
        }
    }
    Err(Error::Parse {
        line: 0,
        msg: format!("missing {key}=<value>"),
    })
}

pub fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        line: 0,
        msg: format!("invalid {what}: '{s}'"),
    })
}

pub fn parse_hex_u32(s: &str, what: &str) -> Result<u32> {
    let body = s.strip_prefix("0x").unwrap_or(s);
    u32::from_str_radix(body, 16).map_err(|_| Error::Parse {
        line: 0,
        msg: format!("invalid {what}: '{s}'"),
    })
}

/// Serialize a field header line: `field 2^<k> modulus=<hex>`.
pub fn write_field(f: FieldSpec) -> String {
    format!("field 2^{} modulus={:#x}", f.degree(), f.modulus())
}

pub fn read_field(sc: &mut LineScanner) -> Result<FieldSpec> {
    let tokens = sc.expect_keyword("field")?;
    let deg_tok = tokens
        .first()
        .ok_or_else(|| sc.err("missing field degree"))?;
    let k = deg_tok
        .strip_prefix("2^")
        .and_then(|d| d.parse::<usize>().ok())
        .ok_or_else(|| sc.err(format!("invalid field degree '{deg_tok}'")))?;
    let modulus = parse_hex_u32(kv(&tokens, "modulus")?, "modulus")?;
    FieldSpec::new(k, modulus)
}

/// Serialize a matrix in the canonical format.
pub fn write_matrix(m: &Mat) -> String {
    let mut out = String::new();
    out.push_str(&write_field(m.field()));
    out.push('\n');
    out.push_str(&format!("{} {}\n", m.rows(), m.cols()));
    // rows with no columns would be blank lines; the dimension header
    // already carries all the information, so they are omitted
    if m.cols() > 0 {
        for i in 0..m.rows() {
            let cells: Vec<String> =
                (0..m.cols()).map(|j| format!("{:x}", m.at(i, j))).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn read_matrix(sc: &mut LineScanner) -> Result<Mat> {
    let field = read_field(sc)?;
    let dims_line = sc.next_line()?;
    let dims: Vec<&str> = dims_line.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(sc.err(format!("expected '<rows> <cols>', found '{dims_line}'")));
    }
    let rows = parse_usize(dims[0], "row count")?;
    let cols = parse_usize(dims[1], "column count")?;
    let mut m = Mat::zero(field, rows, cols);
    if cols == 0 {
        return Ok(m);
    }
    for i in 0..rows {
        let line = sc.next_line()?;
        let cells: Vec<&str> = line.split_whitespace().collect();
        if cells.len() != cols {
            return Err(sc.err(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                cells.len(),
                cols
            )));
        }
        for (j, cell) in cells.iter().enumerate() {
            let v = parse_hex_u32(cell, "matrix entry")?;
            if !field.contains(v) {
                return Err(sc.err(format!("entry {cell} out of range for {field}")));
            }
            m.set(i, j, v);
        }
    }
    Ok(m)
}

pub fn matrix_from_str(text: &str) -> Result<Mat> {
    let mut sc = LineScanner::new(text);
    let m = read_matrix(&mut sc)?;
    if !sc.is_exhausted() {
        return Err(sc.err("trailing content after matrix"));
    }
    Ok(m)
}

/// Hex SHA-256 of a canonical serialization; used to tie maps to their
/// endpoint modules in files.
pub fn digest_hex(text: &str) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    let out = h.finalize();
    let mut s = String::with_capacity(64);
    for b in out {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matrix_round_trip_bit_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for field in [
            FieldSpec::gf2(),
            FieldSpec::f4(),
            FieldSpec::with_default_modulus(4).unwrap(),
            FieldSpec::with_default_modulus(16).unwrap(),
        ] {
            for (r, c) in [(0, 0), (0, 3), (3, 0), (1, 1), (4, 7)] {
                let m = Mat::random(field, r, c, &mut rng);
                let text = write_matrix(&m);
                let back = matrix_from_str(&text).unwrap();
                assert_eq!(back, m);
                assert_eq!(write_matrix(&back), text, "serialization is canonical");
            }
        }
    }

    #[test]
    fn matrix_format_example() {
        let f = FieldSpec::f4();
        let m = Mat::from_rows(f, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(write_matrix(&m), "field 2^2 modulus=0x7\n2 2\n0 1\n2 3\n");
    }

    #[test]
    fn parse_errors_carry_context() {
        assert!(matrix_from_str("").is_err());
        assert!(matrix_from_str("field 2^2 modulus=0x7\n2 2\n0 1\n").is_err());
        assert!(matrix_from_str("field 2^2 modulus=0x7\n1 1\n7\n").is_err(), "entry 7 not in F4");
        assert!(matrix_from_str("field 2^2 modulus=0x6\n1 1\n1\n").is_err(), "reducible modulus");
        assert!(matrix_from_str("field 2^2 modulus=0x7\n1 1\n1\nextra\n").is_err());
        // wrong entry count in a row
        assert!(matrix_from_str("field 2^2 modulus=0x7\n1 2\n1\n").is_err());
    }

    #[test]
    fn blank_lines_are_tolerated_between_sections() {
        let text = "\nfield 2^1 modulus=0x3\n\n2 1\n1\n\n0\n";
        let m = matrix_from_str(text).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 1));
        assert_eq!(m.at(0, 0), 1);
        assert_eq!(m.at(1, 0), 0);
    }

    #[test]
    fn digest_is_stable_and_content_sensitive() {
        let a = digest_hex("hello\n");
        let b = digest_hex("hello\n");
        let c = digest_hex("hello!\n");
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 64);
    }

    #[test]
    fn kv_extraction() {
        let tokens = vec!["n=3", "dimL=4"];
        assert_eq!(kv(&tokens, "n").unwrap(), "3");
        assert_eq!(kv(&tokens, "dimL").unwrap(), "4");
        assert!(kv(&tokens, "missing").is_err());
    }
}
