use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families used as fixtures and accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Complete,
    Cycle,
    Path,
    Empty,
    Petersen,
}

impl Generator {
    /// Builds the family member of size `k`. Petersen ignores `k`.
    ///
    /// Petersen numbering: outer cycle `0..5`, inner pentagram `5..10` with
    /// `5+i ~ 5+(i+2)%5`, and spokes `i ~ i+5`.
    pub fn build(self, k: usize) -> Result<Graph> {
        if k == 0 && self != Generator::Petersen {
            return Err(Error::BadParameter(format!("{self} needs k >= 1")));
        }
        match self {
            Generator::Complete => {
                let edges: Vec<_> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
                Graph::from_edge_list(k, &edges)
            }
            Generator::Cycle => {
                if k < 3 {
                    return Err(Error::BadParameter(format!("a simple cycle needs k >= 3, got {k}")));
                }
                let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                Graph::from_edge_list(k, &edges)
            }
            Generator::Path => {
                let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
                Graph::from_edge_list(k, &edges)
            }
            Generator::Empty => Graph::empty(k),
            Generator::Petersen => {
                let mut edges = Vec::with_capacity(15);
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                    edges.push((i, i + 5));
                }
                Graph::from_edge_list(10, &edges)
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Complete => "complete",
            Generator::Cycle => "cycle",
            Generator::Path => "path",
            Generator::Empty => "empty",
            Generator::Petersen => "petersen",
        })
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "complete" => Generator::Complete,
            "cycle" => Generator::Cycle,
            "path" => Generator::Path,
            "empty" => Generator::Empty,
            "petersen" => Generator::Petersen,
            other => return Err(Error::BadParameter(format!("unknown generator `{other}`"))),
        })
    }
}
