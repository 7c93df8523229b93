//! Text formats: arc lists (`n m` header then `u v` lines), 0/1 matrices and DOT export.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, found {tok:?}"),
    })
}

/// Parses the arc-list format.
pub fn parse_arc_list(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            msg: "header must be `n m`".into(),
        });
    }
    let n = parse_usize(toks[0], hline)?;
    let m = parse_usize(toks[1], hline)?;
    let mut arcs = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: "arc line must be `u v`".into(),
            });
        }
        let u = parse_usize(toks[0], line)?;
        let v = parse_usize(toks[1], line)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("arc ({u}, {v}) references a vertex outside 0..{n}"),
            });
        }
        arcs.push((u, v));
    }
    if arcs.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header announces {m} arcs but {} were given", arcs.len()),
        });
    }
    Digraph::build(n, &arcs)
}

/// Parses the matrix format: `n` lines of `n` characters from `{0,1}`.
pub fn parse_matrix(text: &str) -> Result<Digraph> {
    let mut rows = Vec::new();
    for (line, l) in content_lines(text) {
        let row = l
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    line,
                    msg: format!("unexpected character {c:?} in matrix row"),
                }),
            })
            .collect::<Result<Vec<bool>>>()?;
        rows.push((line, row));
    }
    let n = rows.len();
    for (line, r) in &rows {
        if r.len() != n {
            return Err(Error::Parse {
                line: *line,
                msg: format!("row has {} entries, expected {n}", r.len()),
            });
        }
    }
    let rows: Vec<Vec<bool>> = rows.into_iter().map(|(_, r)| r).collect();
    Digraph::from_matrix(&rows)
}

/// Picks the format from the first content line: whitespace means an arc list.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    match content_lines(text).next() {
        Some((_, l)) if !l.contains(char::is_whitespace) => parse_matrix(text),
        _ => parse_arc_list(text),
    }
}

pub fn write_arc_list(d: &Digraph) -> String {
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    let mut s = format!("{} {}\n", d.order(), arcs.len());
    for (u, v) in arcs {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_matrix(d: &Digraph) -> String {
    let mut s = String::new();
    for row in d.to_matrix_rows() {
        s.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
        s.push('\n');
    }
    s
}

/// DOT rendering. Symmetric digraphs become undirected graphs; loops are self-edges.
/// Vertices in `highlight` are filled.
pub fn to_dot(d: &Digraph, highlight: &[usize]) -> String {
    let sym = d.is_symmetric();
    let (kind, edge) = if sym { ("graph", "--") } else { ("digraph", "->") };
    let mut s = format!("{kind} G {{\n");
    for v in 0..d.order() {
        if highlight.contains(&v) {
            let _ = writeln!(s, "  {v} [style=filled, fillcolor=lightblue];");
        } else {
            let _ = writeln!(s, "  {v};");
        }
    }
    for (u, v) in d.arcs() {
        if sym && v < u {
            continue;
        }
        let _ = writeln!(s, "  {u} {edge} {v};");
    }
    s.push_str("}\n");
    s
}
