//! PACE 2017 `.td` files.
//!
//! ```text
//! c optional comments
//! s td <bags> <max bag size> <vertices>
//! b <bag id> <vertex> <vertex> ...
//! <bag id> <bag id>
//! ```
//!
//! Bag and vertex ids are 1-based on disk and 0-based in memory. Files are
//! unrooted; the decoder roots the tree at bag 1.

use std::fmt::Write;

use super::{RootedTree, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{VertexSet, MAX_VERTICES};

/// Canonical serialization: bags ascending, tree edges sorted lexicographically.
pub fn encode(td: &TreeDecomposition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s td {} {} {}", td.bags().len(), td.bag_width(), td.vertex_count());
    for (t, bag) in td.bags().iter().enumerate() {
        out.push_str(&format!("b {}", t + 1));
        for v in bag.iter() {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for (a, b) in td.tree().edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

pub fn decode(text: &str) -> Result<TreeDecomposition> {
    let malformed = |line: usize, reason: String| Error::MalformedTd { line, reason };
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut edges = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| malformed(line_no, format!("`{s}` is not a number")))
        };
        let Some((bag_count, _, n)) = header else {
            if fields.len() != 5 || fields[0] != "s" || fields[1] != "td" {
                return Err(malformed(line_no, "expected `s td <bags> <max-bag> <n>`".into()));
            }
            let (b, w, n) = (parse(fields[2])?, parse(fields[3])?, parse(fields[4])?);
            if b == 0 {
                return Err(malformed(line_no, "a decomposition needs at least one bag".into()));
            }
            if n > MAX_VERTICES {
                return Err(malformed(line_no, format!("{n} vertices exceeds {MAX_VERTICES}")));
            }
            header = Some((b, w, n));
            bags = vec![None; b];
            continue;
        };
        if fields[0] == "b" {
            let id = parse(fields.get(1).copied().unwrap_or(""))?;
            if id == 0 || id > bag_count {
                return Err(malformed(line_no, format!("bag id {id} outside 1..={bag_count}")));
            }
            if bags[id - 1].is_some() {
                return Err(malformed(line_no, format!("bag {id} declared twice")));
            }
            let mut bag = VertexSet::empty();
            for f in &fields[2..] {
                let v = parse(f)?;
                if v == 0 || v > n {
                    return Err(malformed(line_no, format!("vertex {v} outside 1..={n}")));
                }
                bag.insert(v - 1);
            }
            bags[id - 1] = Some(bag);
        } else {
            if fields.len() != 2 {
                return Err(malformed(line_no, "expected a tree edge `<bag> <bag>`".into()));
            }
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            if a == 0 || b == 0 || a > bag_count || b > bag_count || a == b {
                return Err(malformed(line_no, format!("bad tree edge {a} {b}")));
            }
            edges.push((a - 1, b - 1));
        }
    }

    let (bag_count, max_bag, n) = header.ok_or_else(|| malformed(last_line.max(1), "missing `s td` header".into()))?;
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| malformed(last_line, format!("bag {} never declared", i + 1))))
        .collect::<Result<_>>()?;
    let widest = bags.iter().map(|b| b.len()).max().unwrap_or(0);
    if widest != max_bag {
        return Err(malformed(
            1,
            format!("header claims max bag {max_bag}, bags reach {widest}"),
        ));
    }
    let tree = RootedTree::from_undirected(bag_count, &edges, 0).map_err(|e| malformed(last_line, e.to_string()))?;
    TreeDecomposition::new(tree, bags, n)
}
