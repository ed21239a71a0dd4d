//! Named graph families with documented vertex labelings.
//!
//! Paths and cycles are laid out consecutively (`i ~ i+1`, and `n-1 ~ 0` for
//! cycles). Stars and spiders put the center at vertex 0. Spider legs are
//! numbered consecutively in the order given, each leg starting next to the
//! center.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// A graph family together with its parameters, parsed from `name:params`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Star of the given order, i.e. K_{1,n-1}.
    Star(usize),
    CompleteBipartite(usize, usize),
    K4MinusE,
    /// Triangle with a pendant vertex.
    HGraph,
    C5PlusE,
    Spider(Vec<usize>),
}

fn invalid(family: &str, message: impl Into<String>) -> Error {
    Error::InvalidFamily { family: family.to_string(), message: message.into() }
}

fn need(family: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(invalid(family, format!("order must be at least {min}, got {n}")))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    need("path", n, 1)?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?.with_name(format!("P{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    need("cycle", n, 3)?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_name(format!("C{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    need("complete", n, 1)?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?.with_name(format!("K{n}")))
}

/// Star of order `n` (center 0, leaves 1..n).
pub fn star(n: usize) -> Result<Graph> {
    need("star", n, 2)?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (0, i)))?.with_name(format!("K1,{}", n - 1)))
}

/// K_{a,b} with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(invalid("complete_bipartite", "both sides need at least one vertex"));
    }
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Ok(Graph::from_edges(a + b, edges)?.with_name(format!("K{a},{b}")))
}

/// K_4 with the edge {2,3} removed.
pub fn k4_minus_e() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        .expect("static edges")
        .with_name("K4-e")
}

/// Triangle {0,1,2} with pendant vertex 3 attached to 2.
pub fn h_graph() -> Graph {
    Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        .expect("static edges")
        .with_name("H")
}

/// C_5 plus the chord {0,2}.
pub fn c5_plus_e() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
        .expect("static edges")
        .with_name("C5+e")
}

/// Subdivided star: center 0 with one pendant path per entry of `legs`.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() {
        return Err(invalid("spider", "at least one leg is required"));
    }
    if let Some(&l) = legs.iter().find(|&&l| l < 1) {
        return Err(invalid("spider", format!("leg length must be at least 1, got {l}")));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut b = GraphBuilder::new(n)?;
    let mut next = 1;
    for &len in legs {
        b.add_edge(0, next)?;
        for i in next + 1..next + len {
            b.add_edge(i - 1, i)?;
        }
        next += len;
    }
    let label = legs.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",");
    Ok(b.build().with_name(format!("S({label})")))
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match self {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Complete(n) => complete(*n),
            Family::Star(n) => star(*n),
            Family::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            Family::K4MinusE => Ok(k4_minus_e()),
            Family::HGraph => Ok(h_graph()),
            Family::C5PlusE => Ok(c5_plus_e()),
            Family::Spider(legs) => spider(legs),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n.trim(), p.trim()),
            None => (s.trim(), ""),
        };
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| invalid(name, format!("bad parameter `{p}`")))
                })
                .collect::<Result<_>>()?
        };
        let one = |nums: &[usize]| -> Result<usize> {
            match nums {
                [n] => Ok(*n),
                _ => Err(invalid(name, "expected exactly one parameter")),
            }
        };
        let none = |nums: &[usize]| -> Result<()> {
            if nums.is_empty() {
                Ok(())
            } else {
                Err(invalid(name, "takes no parameters"))
            }
        };
        let fam = match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "path" | "p" => Family::Path(one(&nums)?),
            "cycle" | "c" => Family::Cycle(one(&nums)?),
            "complete" | "k" => Family::Complete(one(&nums)?),
            "star" => Family::Star(one(&nums)?),
            "complete_bipartite" | "bipartite" => match nums[..] {
                [a, b] => Family::CompleteBipartite(a, b),
                _ => return Err(invalid(name, "expected two parameters a,b")),
            },
            "k4_minus_e" | "k4_e" => {
                none(&nums)?;
                Family::K4MinusE
            }
            "h_graph" | "h" => {
                none(&nums)?;
                Family::HGraph
            }
            "c5_plus_e" | "c5_e" => {
                none(&nums)?;
                Family::C5PlusE
            }
            "spider" => Family::Spider(nums),
            _ => return Err(invalid(name, "unknown family")),
        };
        // validate parameters eagerly
        fam.generate()?;
        Ok(fam)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::K4MinusE => f.write_str("k4_minus_e"),
            Family::HGraph => f.write_str("h_graph"),
            Family::C5PlusE => f.write_str("c5_plus_e"),
            Family::Spider(legs) => {
                let l = legs.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",");
                write!(f, "spider:{l}")
            }
        }
    }
}
