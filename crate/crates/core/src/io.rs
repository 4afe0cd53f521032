//! Text formats.
//!
//! Tournament: line 1 is `n`, then `n` rows of `n` characters from `{0,1}`;
//! character `j` of row `i` is `1` iff `i -> j`.
//!
//! Undirected multigraph: line 1 is `n m`, then `m` lines `u v`.
//!
//! Mixed multigraph: line 1 is `mixed d`, then one `part v...` line per
//! part, then `arc u v [multiplicity]` and `edge u v` lines in any order.
//! Repeated `edge` lines add parallel edges.
//!
//! Blank lines are ignored after the header in every format.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{MixedMultigraph, Tournament, UndirectedMultigraph};

pub fn read_file(path: impl AsRef<Path>) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

/// Non-blank lines with their 1-based line numbers.
fn numbered(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty())
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn number(line: usize, (column, tok): (usize, &str)) -> Result<usize> {
    tok.parse().map_err(|_| {
        Error::parse(
            line,
            column,
            format!("expected a non-negative integer, found `{tok}`"),
        )
    })
}

pub fn parse_tournament(text: &str) -> Result<Tournament> {
    let mut lines = numbered(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let head = tokens(header);
    if head.len() != 1 {
        return Err(Error::parse(ln, 1, "header must be the single integer n"));
    }
    let n = number(ln, head[0])?;
    let mut rows: Vec<Vec<bool>> = Vec::with_capacity(n);
    let mut row_lines = Vec::with_capacity(n);
    for (ln, line) in lines {
        if rows.len() == n {
            return Err(Error::parse(ln, 1, format!("more than {n} rows")));
        }
        let line = line.trim_start();
        let mut row = Vec::with_capacity(n);
        for (col, c) in line.chars().enumerate() {
            match c {
                '0' => row.push(false),
                '1' => row.push(true),
                _ => {
                    return Err(Error::parse(
                        ln,
                        col + 1,
                        format!("expected 0 or 1, found `{c}`"),
                    ))
                }
            }
        }
        if row.len() != n {
            return Err(Error::parse(
                ln,
                row.len().min(n) + 1,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        let i = rows.len();
        if row[i] {
            return Err(Error::parse(ln, i + 1, "diagonal entry must be 0"));
        }
        for (j, earlier) in rows.iter().enumerate() {
            if earlier[i] == row[j] {
                return Err(Error::parse(
                    ln,
                    j + 1,
                    format!(
                        "entries ({i},{j}) and ({j},{i}) must differ (row {j} is on line {})",
                        row_lines[j]
                    ),
                ));
            }
        }
        rows.push(row);
        row_lines.push(ln);
    }
    if rows.len() != n {
        let last = text.lines().count().max(1);
        return Err(Error::parse(
            last,
            1,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    Ok(Tournament::from_fn(n, |i, j| rows[i][j]))
}

pub fn write_tournament(t: &Tournament) -> String {
    let mut out = format!("{}\n", t.len());
    for row in t.matrix() {
        out.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn parse_undirected(text: &str) -> Result<UndirectedMultigraph> {
    let mut lines = numbered(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let head = tokens(header);
    if head.len() != 2 {
        return Err(Error::parse(ln, 1, "header must be `n m`"));
    }
    let (n, m) = (number(ln, head[0])?, number(ln, head[1])?);
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        if edges.len() == m {
            return Err(Error::parse(ln, 1, format!("more than {m} edges")));
        }
        let toks = tokens(line);
        if toks.len() != 2 {
            return Err(Error::parse(ln, 1, "edge line must be `u v`"));
        }
        let (u, v) = (number(ln, toks[0])?, number(ln, toks[1])?);
        for (tok, w) in [(toks[0], u), (toks[1], v)] {
            if w >= n {
                return Err(Error::parse(
                    ln,
                    tok.0,
                    format!("vertex {w} out of range 0..{n}"),
                ));
            }
        }
        if u == v {
            return Err(Error::parse(ln, toks[1].0, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        let last = text.lines().count().max(1);
        return Err(Error::parse(
            last,
            1,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    UndirectedMultigraph::new(n, edges)
}

pub fn write_undirected(g: &UndirectedMultigraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_mixed(text: &str) -> Result<MixedMultigraph> {
    let mut lines = numbered(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let head = tokens(header);
    if head.len() != 2 || head[0].1 != "mixed" {
        return Err(Error::parse(ln, 1, "header must be `mixed d`"));
    }
    let d = number(ln, head[1])?;
    let mut parts = Vec::new();
    let mut rest = Vec::new();
    for (ln, line) in lines {
        let toks = tokens(line);
        match toks[0].1 {
            "part" => {
                if !rest.is_empty() {
                    return Err(Error::parse(
                        ln,
                        1,
                        "part lines must come before arcs and edges",
                    ));
                }
                let part = toks[1..]
                    .iter()
                    .map(|&t| number(ln, t))
                    .collect::<Result<Vec<_>>>()?;
                parts.push(part);
            }
            "arc" | "edge" => rest.push((ln, toks)),
            other => {
                return Err(Error::parse(ln, 1, format!("unknown keyword `{other}`")));
            }
        }
    }
    let mut g = MixedMultigraph::new(parts, d).map_err(|e| Error::parse(1, 1, e.to_string()))?;
    for (ln, toks) in rest {
        let at = |e: Error| Error::parse(ln, 1, e.to_string());
        match (toks[0].1, toks.len()) {
            ("arc", 3 | 4) => {
                let (u, v) = (number(ln, toks[1])?, number(ln, toks[2])?);
                let mult = match toks.get(3) {
                    Some(&t) => number(ln, t)? as u64,
                    None => 1,
                };
                g.add_arc(u, v, mult).map_err(at)?;
            }
            ("edge", 3) => {
                let (u, v) = (number(ln, toks[1])?, number(ln, toks[2])?);
                g.add_edge(u, v).map_err(at)?;
            }
            (kw, _) => {
                return Err(Error::parse(ln, 1, format!("malformed `{kw}` line")));
            }
        }
    }
    Ok(g)
}

pub fn write_mixed(g: &MixedMultigraph) -> String {
    let mut out = format!("mixed {}\n", g.d());
    for part in g.parts() {
        out.push_str("part");
        for v in part {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for (u, v, m) in g.arcs() {
        if m == 1 {
            let _ = writeln!(out, "arc {u} {v}");
        } else {
            let _ = writeln!(out, "arc {u} {v} {m}");
        }
    }
    for (u, v, m) in g.edges() {
        for _ in 0..m {
            let _ = writeln!(out, "edge {u} {v}");
        }
    }
    out
}
