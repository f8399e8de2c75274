//! The on-disk tournament format.
//!
//! A file holds optional `#` comment lines, then a line with the vertex
//! count `n`, then `n` rows of `n` characters over `{0,1}`; row `i`,
//! column `j` is `1` iff the edge `i -> j` is present. The row order is
//! the file's implicit vertex ordering.

use heroix::tournament::{build, Ordering, Tournament};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FormatError {}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

/// Parses the text format; the returned ordering is the file's row order.
pub fn parse(text: &str) -> Result<(Tournament, Ordering), FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.starts_with('#'));
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| err(0, "empty input, expected a vertex count"))?;
    let n: usize = header.trim().parse().map_err(|_| {
        err(
            header_no,
            format!("expected a vertex count, got {header:?}"),
        )
    })?;
    let mut rows: Vec<(usize, Vec<bool>)> = Vec::with_capacity(n);
    for _ in 0..n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| err(header_no, format!("expected {n} rows, file ended early")))?;
        if line.len() != n {
            return Err(err(
                no,
                format!("row has {} columns, expected {n}", line.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '0' => row.push(false),
                '1' => row.push(true),
                other => {
                    return Err(err(
                        no,
                        format!("bad character {other:?} at column {}", col + 1),
                    ))
                }
            }
        }
        rows.push((no, row));
    }
    if let Some((no, extra)) = lines.next() {
        if !extra.trim().is_empty() {
            return Err(err(no, format!("unexpected trailing content {extra:?}")));
        }
    }
    // Validate the relation before handing it to the core builder so the
    // diagnostics carry line/column positions.
    for (i, &(no, ref row)) in rows.iter().enumerate() {
        if row[i] {
            return Err(err(
                no,
                format!("diagonal entry at column {} must be 0", i + 1),
            ));
        }
        for j in (i + 1)..n {
            let forward = row[j];
            let backward = rows[j].1[i];
            if forward && backward {
                return Err(err(rows[j].0, format!("pair ({i},{j}) assigned twice")));
            }
            if !forward && !backward {
                return Err(err(rows[j].0, format!("pair ({i},{j}) unassigned")));
            }
        }
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for (i, (_, row)) in rows.iter().enumerate() {
        for (j, &present) in row.iter().enumerate() {
            if present {
                edges.push((i, j));
            }
        }
    }
    let t = build(n, &edges).expect("validated above");
    Ok((t, Ordering::identity(n)))
}

/// Serializes `t` with rows in the given vertex order; inverse of `parse`
/// on its own output.
pub fn serialize(t: &Tournament, order: &Ordering) -> String {
    let n = t.n();
    assert_eq!(order.len(), n, "ordering must cover the tournament");
    let seq = order.seq();
    let mut out = String::with_capacity(n * (n + 1) + 8);
    out.push_str(&n.to_string());
    out.push('\n');
    for i in 0..n {
        for j in 0..n {
            let bit = i != j && t.has_edge(seq[i], seq[j]);
            out.push(if bit { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}
