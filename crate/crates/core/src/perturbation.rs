//! Dom-stability and dom-bondage by exhaustive removal sweeps.
//!
//! Subsets are tried by increasing size and, within a size, in lexicographic
//! order; the first subset that changes χ_dom is the witness. Each size is
//! evaluated in parallel chunks, keeping the lexicographically first hit.

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::dom::dom_chromatic_number;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub const STABILITY_VERTEX_CAP: usize = 14;
pub const BONDAGE_EDGE_CAP: usize = 24;

const CHUNK: usize = 2048;

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub budget: Budget,
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            budget: Budget::unlimited(),
            max_vertices: STABILITY_VERTEX_CAP,
            max_edges: BONDAGE_EDGE_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepStatus {
    Changed,
    /// No subset of any size changes χ_dom (for instance the bondage of K_2).
    NoWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerturbationResult<T> {
    pub status: SweepStatus,
    /// Minimum number of removed elements, when a witness exists.
    pub size: Option<usize>,
    /// Lexicographically first minimum removal set, in original labels.
    pub witness: Option<Vec<T>>,
    pub before: usize,
    pub after: Option<usize>,
    /// Number of removal sets whose χ_dom was computed.
    pub checked: u64,
}

/// Lexicographic k-subsets of `0..n`, produced in chunks.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }

    fn next_chunk(&mut self, max: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        while !self.done && out.len() < max {
            out.push(self.idx.clone());
            let k = self.idx.len();
            let mut i = k;
            loop {
                if i == 0 {
                    self.done = true;
                    break;
                }
                i -= 1;
                if self.idx[i] < self.n - k + i {
                    self.idx[i] += 1;
                    for j in i + 1..k {
                        self.idx[j] = self.idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
        out
    }
}

fn sweep<T: Clone + Send + Sync>(
    items: &[T],
    before: usize,
    budget: &Budget,
    after: impl Fn(&[T]) -> Result<usize> + Sync,
) -> Result<PerturbationResult<T>> {
    let mut checked = 0u64;
    for size in 1..=items.len() {
        let mut combos = Combinations::new(items.len(), size);
        loop {
            let chunk = combos.next_chunk(CHUNK);
            if chunk.is_empty() {
                break;
            }
            budget.check()?;
            let hit = chunk
                .par_iter()
                .enumerate()
                .map(|(pos, idx)| {
                    let removed: Vec<T> = idx.iter().map(|&i| items[i].clone()).collect();
                    let value = after(&removed);
                    (pos, removed, value)
                })
                .find_first(|(_, _, value)| !matches!(value, Ok(v) if *v == before));
            match hit {
                None => checked += chunk.len() as u64,
                Some((pos, removed, value)) => {
                    let value = value?;
                    checked += pos as u64 + 1;
                    return Ok(PerturbationResult {
                        status: SweepStatus::Changed,
                        size: Some(size),
                        witness: Some(removed),
                        before,
                        after: Some(value),
                        checked,
                    });
                }
            }
        }
    }
    Ok(PerturbationResult {
        status: SweepStatus::NoWitness,
        size: None,
        witness: None,
        before,
        after: None,
        checked,
    })
}

/// Minimum number of vertex deletions that change χ_dom.
///
/// Deleting every vertex leaves the empty graph (value 0), so a nonempty
/// graph always has a witness.
pub fn dom_stability(g: &Graph, opts: &SweepOptions) -> Result<PerturbationResult<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::UndefinedParameter(
            "dom-stability of the empty graph",
        ));
    }
    if n > opts.max_vertices {
        return Err(Error::TooLarge {
            what: "the stability sweep",
            n,
            cap: opts.max_vertices,
        });
    }
    let before = dom_chromatic_number(g, &opts.budget)?;
    let vertices: Vec<usize> = (0..n).collect();
    sweep(&vertices, before, &opts.budget, |removed| {
        let (h, _) = g.delete_vertices(removed)?;
        dom_chromatic_number(&h, &opts.budget)
    })
}

/// Minimum number of edge deletions that change χ_dom.
pub fn dom_bondage(g: &Graph, opts: &SweepOptions) -> Result<PerturbationResult<Edge>> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::UndefinedParameter(
            "dom-bondage of an edgeless graph",
        ));
    }
    if edges.len() > opts.max_edges {
        return Err(Error::TooLarge {
            what: "the bondage sweep",
            n: edges.len(),
            cap: opts.max_edges,
        });
    }
    let before = dom_chromatic_number(g, &opts.budget)?;
    sweep(&edges, before, &opts.budget, |removed| {
        dom_chromatic_number(&g.delete_edges(removed)?, &opts.budget)
    })
}
