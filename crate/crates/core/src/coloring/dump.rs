//! Coloring dump format: one `edge-id color` line per edge, color 0 meaning
//! uncolored. Lines starting with `#` are comments.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Color, UNCOLORED};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DumpError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: edge id {edge} out of range for {m} edges")]
    EdgeOutOfRange { line: usize, edge: usize, m: usize },
    #[error("line {line}: edge {edge} listed twice")]
    DuplicateEdge { line: usize, edge: usize },
}

pub fn write_dump(colors: &[Color]) -> String {
    let mut out = String::with_capacity(colors.len() * 10);
    for (e, c) in colors.iter().enumerate() {
        writeln!(out, "{e} {c}").unwrap();
    }
    out
}

/// Parses a dump for a graph with `m` edges. Edges not listed stay uncolored.
pub fn read_dump(text: &str, m: usize) -> Result<Vec<Color>, DumpError> {
    let mut colors = vec![UNCOLORED; m];
    let mut listed = vec![false; m];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(DumpError::Parse {
                line,
                message: "expected `edge-id color`".into(),
            });
        }
        let edge: usize = parts[0].parse().map_err(|_| DumpError::Parse {
            line,
            message: format!("invalid edge id {:?}", parts[0]),
        })?;
        let color: Color = parts[1].parse().map_err(|_| DumpError::Parse {
            line,
            message: format!("invalid color {:?}", parts[1]),
        })?;
        if edge >= m {
            return Err(DumpError::EdgeOutOfRange { line, edge, m });
        }
        if std::mem::replace(&mut listed[edge], true) {
            return Err(DumpError::DuplicateEdge { line, edge });
        }
        colors[edge] = color;
    }
    Ok(colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let colors = vec![3, 0, 1, 2];
        assert_eq!(write_dump(&colors), "0 3\n1 0\n2 1\n3 2\n");
        assert_eq!(read_dump(&write_dump(&colors), 4).unwrap(), colors);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            read_dump("0 1\n5 2\n", 3),
            Err(DumpError::EdgeOutOfRange { line: 2, edge: 5, m: 3 })
        );
        assert_eq!(
            read_dump("0 1\n0 2\n", 3),
            Err(DumpError::DuplicateEdge { line: 2, edge: 0 })
        );
        assert!(matches!(read_dump("0 x\n", 3), Err(DumpError::Parse { line: 1, .. })));
    }
}
