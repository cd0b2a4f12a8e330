//! graph6 text encoding, restricted to the single-byte size field (n <= 62).
//!
//! Bit order: for `j` in `1..n`, for `i` in `0..j`, one bit for the pair
//! `(i, j)`, packed six bits per byte (most significant first) and offset by 63.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_GRAPH6_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + data_len(n));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn decode(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::MalformedGraph6("empty line".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::MalformedGraph6(format!("bad size byte {head:#04x}")));
    }
    let n = (head - 63) as usize;
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::MalformedGraph6(format!(
            "order {n} needs a multi-byte size field"
        )));
    }
    if body.len() != data_len(n) {
        return Err(Error::MalformedGraph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            data_len(n),
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::MalformedGraph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}
