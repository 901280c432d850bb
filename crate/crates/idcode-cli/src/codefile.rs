//! Text formats for codes and matrices.
//!
//! Code files look like:
//!
//! ```text
//! idcode v1
//! radices: 2 2 2
//! code:
//! 0 0 0
//! 0 1 1
//! ```
//!
//! `#` starts a comment anywhere on a line. The writer emits codewords in
//! index order, so writing and re-parsing a canonical file is the identity
//! on bytes. Matrix files carry `p rows cols` on the first line followed by
//! `rows` lines of `cols` entries.

use idcode::algebra::FpMatrix;
use idcode::codesets::Code;
use idcode::hamming::Radices;

/// A parsed code plus any non-fatal complaints (duplicates, emptiness).
#[derive(Debug)]
pub struct ParsedCode {
    pub code: Code,
    pub warnings: Vec<String>,
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_numbers<T: std::str::FromStr>(line_no: usize, text: &str) -> Result<Vec<T>, String> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| format!("line {line_no}: `{tok}` is not a valid number"))
        })
        .collect()
}

pub fn parse_code_file(text: &str) -> Result<ParsedCode, String> {
    let mut lines = significant_lines(text);

    match lines.next() {
        Some((_, "idcode v1")) => {}
        Some((n, other)) => {
            return Err(format!("line {n}: expected header `idcode v1`, found `{other}`"))
        }
        None => return Err("empty file: expected header `idcode v1`".into()),
    }

    let dims = match lines.next() {
        Some((n, line)) => match line.strip_prefix("radices:") {
            Some(rest) => {
                let dims: Vec<u32> = parse_numbers(n, rest)?;
                if dims.is_empty() {
                    return Err(format!("line {n}: `radices:` lists no dimensions"));
                }
                dims
            }
            None => return Err(format!("line {n}: expected `radices: m1 m2 ...`, found `{line}`")),
        },
        None => return Err("missing `radices:` line".into()),
    };
    let radices = Radices::new(dims).map_err(|e| format!("bad radices: {e}"))?;

    match lines.next() {
        Some((_, "code:")) => {}
        Some((n, other)) => return Err(format!("line {n}: expected `code:`, found `{other}`")),
        None => return Err("missing `code:` line".into()),
    }

    let mut code = Code::new(radices.clone());
    let mut warnings = Vec::new();
    for (n, line) in lines {
        let coords: Vec<u32> = parse_numbers(n, line)?;
        let vertex = radices
            .vertex(coords)
            .map_err(|e| format!("line {n}: {e}"))?;
        let fresh = code
            .insert(&vertex)
            .map_err(|e| format!("line {n}: {e}"))?;
        if !fresh {
            warnings.push(format!("line {n}: duplicate codeword {vertex} ignored"));
        }
    }
    if code.is_empty() {
        warnings.push("the code section is empty".into());
    }
    Ok(ParsedCode { code, warnings })
}

pub fn write_code_file(code: &Code) -> String {
    let mut out = String::from("idcode v1\nradices:");
    for m in code.radices().dims() {
        out.push_str(&format!(" {m}"));
    }
    out.push_str("\ncode:\n");
    for v in code.iter() {
        let coords: Vec<String> = v.coords().iter().map(u32::to_string).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix_file(text: &str) -> Result<FpMatrix, String> {
    let mut lines = significant_lines(text);
    let (p, rows, cols) = match lines.next() {
        Some((n, line)) => {
            let header: Vec<u64> = parse_numbers(n, line)?;
            match header[..] {
                [p, rows, cols] => (p as u32, rows as usize, cols as usize),
                _ => return Err(format!("line {n}: expected header `p rows cols`")),
            }
        }
        None => return Err("empty file: expected header `p rows cols`".into()),
    };
    let mut data = Vec::with_capacity(rows * cols);
    let mut seen = 0usize;
    for (n, line) in lines {
        let entries: Vec<u32> = parse_numbers(n, line)?;
        if entries.len() != cols {
            return Err(format!("line {n}: expected {cols} entries, found {}", entries.len()));
        }
        data.extend(entries);
        seen += 1;
    }
    if seen != rows {
        return Err(format!("expected {rows} matrix rows, found {seen}"));
    }
    FpMatrix::new(p, rows, cols, data).map_err(|e| format!("bad matrix: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const HALF_CUBE: &str = "idcode v1\nradices: 2 2 2\ncode:\n0 0 0\n0 0 1\n0 1 0\n0 1 1\n";

    #[test]
    fn canonical_files_round_trip_byte_for_byte() {
        let parsed = parse_code_file(HALF_CUBE).unwrap();
        assert_eq!(parsed.code.len(), 4);
        assert!(parsed.warnings.is_empty());
        assert_eq!(write_code_file(&parsed.code), HALF_CUBE);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# fixture\nidcode v1\n\nradices: 2 2   # three coordinates? no, two\ncode:\n1 1\n0 0 # origin\n";
        let parsed = parse_code_file(text).unwrap();
        assert_eq!(parsed.code.indices().collect::<Vec<usize>>(), vec![0, 3]);
    }

    #[test]
    fn duplicates_warn_and_collapse() {
        let text = "idcode v1\nradices: 2 2\ncode:\n0 1\n0 1\n";
        let parsed = parse_code_file(text).unwrap();
        assert_eq!(parsed.code.len(), 1);
        assert_eq!(parsed.warnings, vec!["line 5: duplicate codeword (0,1) ignored"]);
    }

    #[test]
    fn empty_code_parses_with_a_warning() {
        let parsed = parse_code_file("idcode v1\nradices: 3 3\ncode:\n").unwrap();
        assert!(parsed.code.is_empty());
        assert_eq!(parsed.warnings, vec!["the code section is empty"]);
    }

    #[test]
    fn malformed_files_are_rejected_with_line_numbers() {
        assert!(parse_code_file("").unwrap_err().contains("idcode v1"));
        assert!(parse_code_file("idcode v2\n").unwrap_err().contains("line 1"));
        assert!(parse_code_file("idcode v1\ncode:\n").unwrap_err().contains("radices"));
        let out_of_range = "idcode v1\nradices: 2 2\ncode:\n0 5\n";
        assert!(parse_code_file(out_of_range).unwrap_err().contains("line 4"));
        let bad_arity = "idcode v1\nradices: 2 2\ncode:\n0 1 1\n";
        assert!(parse_code_file(bad_arity).unwrap_err().contains("line 4"));
    }

    #[test]
    fn matrix_files_parse_and_reject_shape_mismatches() {
        let h = parse_matrix_file("3 1 3\n2 2 1\n").unwrap();
        assert_eq!((h.p(), h.rows(), h.cols()), (3, 1, 3));
        assert_eq!(h.row(0), &[2, 2, 1]);
        assert!(parse_matrix_file("3 2 3\n2 2 1\n").unwrap_err().contains("expected 2"));
        assert!(parse_matrix_file("3 1 3\n2 2\n").unwrap_err().contains("expected 3"));
        assert!(parse_matrix_file("4 1 1\n1\n").unwrap_err().contains("bad matrix"));
    }
}
