//! Plain-text matrix files: the dimension `n` on the first line, then `n`
//! rows of `n` whitespace-separated entries. A real entry is a decimal
//! literal, a complex entry is `(re,im)` with no interior spaces.

use std::path::Path;

use crate::error::{Error, Result};

use super::matrix::{CMatrix, C64};

fn parse_real(tok: &str, line: usize) -> Result<f64> {
    match tok.parse::<f64>() {
        Ok(v) if v.is_finite() && tok.bytes().all(|b| b.is_ascii_digit() || b"+-.eE".contains(&b)) => Ok(v),
        _ => Err(Error::MatrixFormat { line, message: format!("bad number '{tok}'") }),
    }
}

fn parse_entry(tok: &str, line: usize) -> Result<C64> {
    match tok.strip_prefix('(') {
        Some(rest) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::MatrixFormat { line, message: format!("unclosed complex entry '{tok}'") })?;
            let (re, im) = inner
                .split_once(',')
                .ok_or_else(|| Error::MatrixFormat { line, message: format!("complex entry '{tok}' needs re,im") })?;
            Ok(C64::new(parse_real(re, line)?, parse_real(im, line)?))
        }
        None => Ok(C64::new(parse_real(tok, line)?, 0.0)),
    }
}

pub fn parse_matrix(text: &str) -> Result<CMatrix> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(Error::MatrixFormat { line: 1, message: "empty file".into() })?;
    let n: usize = header
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| Error::MatrixFormat { line: first, message: format!("bad dimension '{header}'") })?;
    let mut rows = Vec::with_capacity(n);
    for (line, text) in lines {
        if rows.len() == n {
            return Err(Error::MatrixFormat { line, message: format!("more than {n} rows") });
        }
        let row = text.split_whitespace().map(|t| parse_entry(t, line)).collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::MatrixFormat { line, message: format!("expected {n} entries, found {}", row.len()) });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::MatrixFormat { line: first, message: format!("expected {n} rows, found {}", rows.len()) });
    }
    CMatrix::from_rows(rows)
}

pub fn read_matrix_file(path: &Path) -> Result<CMatrix> {
    parse_matrix(&std::fs::read_to_string(path)?)
}

fn format_real(v: f64) -> String {
    format!("{v:?}")
}

/// Inverse of [`parse_matrix`]; real entries are written without an imaginary part.
pub fn format_matrix(m: &CMatrix) -> String {
    let n = m.dim();
    let mut out = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| {
                let z = m[(i, j)];
                if z.im == 0.0 {
                    format_real(z.re)
                } else {
                    format!("({},{})", format_real(z.re), format_real(z.im))
                }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_real_and_complex() {
        let m = parse_matrix("2\n1 (0.5,-2)\n(0.5,2) 3e-1\n").unwrap();
        assert_eq!(m[(0, 1)], C64::new(0.5, -2.0));
        assert_eq!(m[(1, 1)], C64::new(0.3, 0.0));
    }

    #[test]
    fn rejects_bad_files() {
        for text in ["", "0\n", "2\n1 2\n3\n", "2\n1 2\n3 4\n5 6\n", "2\n1 2\n", "2\n1 ( 1,2)\n3 4\n", "1\ninf\n", "1\n(1;2)\n"] {
            assert!(matches!(parse_matrix(text), Err(Error::MatrixFormat { .. })), "{text:?}");
        }
        match parse_matrix("2\n1 2\n3\n") {
            Err(Error::MatrixFormat { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(
            entries in prop::collection::vec((-1e6f64..1e6, prop_oneof![Just(0.0), -1e6f64..1e6]), 9)
        ) {
            let rows: Vec<Vec<C64>> = entries.chunks(3).map(|r| r.iter().map(|&(a, b)| C64::new(a, b)).collect()).collect();
            let m = CMatrix::from_rows(rows).unwrap();
            prop_assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
        }
    }
}
