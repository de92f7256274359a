//! Chromatic number, domination number and total domination number, each
//! with a witness that can be checked independently of the search.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    /// `colors[v]` in `0..value`.
    Coloring(Vec<usize>),
    Set(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub value: usize,
    pub witness: Witness,
}

fn masks(g: &Graph, what: &'static str) -> Result<Vec<u64>> {
    g.neighbor_masks().ok_or(Error::TooLarge {
        what,
        n: g.vertex_count(),
        cap: 64,
    })
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.vertex_count() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    (0..g.vertex_count()).all(|v| set.contains(&v) || set.iter().any(|&s| g.has_edge(s, v)))
}

pub fn is_total_dominating(g: &Graph, set: &[usize]) -> bool {
    (0..g.vertex_count()).all(|v| set.iter().any(|&s| g.has_edge(s, v)))
}

/// Minimum number of colors in a proper coloring.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<InvariantResult> {
    let nbr = masks(g, "the chromatic number solver")?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(InvariantResult {
            value: 0,
            witness: Witness::Coloring(Vec::new()),
        });
    }
    let order = g.degeneracy_order();
    let greedy = greedy_coloring(&nbr, &order);
    let upper = greedy.iter().max().map_or(0, |c| c + 1);
    let lower = g.greedy_clique().len().max(1);
    for k in lower..upper {
        budget.check()?;
        let mut colors = vec![usize::MAX; n];
        let mut nodes = 0u64;
        if color_within(&nbr, &order, 0, k, 0, &mut colors, budget, &mut nodes)? {
            return Ok(InvariantResult {
                value: k,
                witness: Witness::Coloring(colors),
            });
        }
    }
    Ok(InvariantResult {
        value: upper,
        witness: Witness::Coloring(greedy),
    })
}

fn greedy_coloring(nbr: &[u64], order: &[usize]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; nbr.len()];
    for &v in order {
        let used: Vec<usize> = (0..nbr.len())
            .filter(|&u| nbr[v] >> u & 1 == 1 && colors[u] != usize::MAX)
            .map(|u| colors[u])
            .collect();
        colors[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    colors
}

#[allow(clippy::too_many_arguments)]
fn color_within(
    nbr: &[u64],
    order: &[usize],
    depth: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
    budget: &Budget,
    nodes: &mut u64,
) -> Result<bool> {
    if depth == order.len() {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes & 0xfff == 0 {
        budget.check()?;
    }
    let v = order[depth];
    // a fresh color is only tried once: colors beyond `used` are interchangeable
    for c in 0..(used + 1).min(k) {
        let clash = (0..nbr.len()).any(|u| nbr[v] >> u & 1 == 1 && colors[u] == c);
        if clash {
            continue;
        }
        colors[v] = c;
        if color_within(
            nbr,
            order,
            depth + 1,
            k,
            used.max(c + 1),
            colors,
            budget,
            nodes,
        )? {
            return Ok(true);
        }
    }
    colors[v] = usize::MAX;
    Ok(false)
}

/// Minimum dominating set (closed neighborhoods). Undefined on the empty graph.
pub fn domination_number(g: &Graph, budget: &Budget) -> Result<InvariantResult> {
    if g.is_empty() {
        return Err(Error::UndefinedParameter(
            "domination number of the empty graph",
        ));
    }
    let nbr = masks(g, "the domination solver")?;
    let closed: Vec<u64> = nbr.iter().enumerate().map(|(v, &m)| m | 1 << v).collect();
    min_cover(&closed, budget)
}

/// Minimum total dominating set (open neighborhoods). Undefined when the
/// graph is empty or has an isolated vertex.
pub fn total_domination_number(g: &Graph, budget: &Budget) -> Result<InvariantResult> {
    if g.is_empty() {
        return Err(Error::UndefinedParameter(
            "total domination number of the empty graph",
        ));
    }
    if g.has_isolated_vertex() {
        return Err(Error::UndefinedParameter(
            "total domination number of a graph with an isolated vertex",
        ));
    }
    let nbr = masks(g, "the total domination solver")?;
    min_cover(&nbr, budget)
}

/// Smallest set S with the union of `reach[s]`, s in S, covering every vertex.
fn min_cover(reach: &[u64], budget: &Budget) -> Result<InvariantResult> {
    let n = reach.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // greedy bound
    let mut covered = 0u64;
    let mut greedy = Vec::new();
    while covered != all {
        let best = (0..n)
            .max_by_key(|&v| ((reach[v] & !covered).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        greedy.push(best);
        covered |= reach[best];
    }
    // which vertices can cover u
    let coverers: Vec<u64> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| reach[v] >> u & 1 == 1)
                .fold(0, |m, v| m | 1 << v)
        })
        .collect();
    let widest = reach
        .iter()
        .map(|m| m.count_ones())
        .max()
        .unwrap_or(1)
        .max(1) as usize;
    for size in 1..greedy.len() {
        budget.check()?;
        let mut chosen = Vec::with_capacity(size);
        let mut nodes = 0u64;
        if cover_within(
            reach,
            &coverers,
            all,
            0,
            size,
            widest,
            &mut chosen,
            budget,
            &mut nodes,
        )? {
            chosen.sort_unstable();
            return Ok(InvariantResult {
                value: size,
                witness: Witness::Set(chosen),
            });
        }
    }
    greedy.sort_unstable();
    Ok(InvariantResult {
        value: greedy.len(),
        witness: Witness::Set(greedy),
    })
}

#[allow(clippy::too_many_arguments)]
fn cover_within(
    reach: &[u64],
    coverers: &[u64],
    all: u64,
    covered: u64,
    left: usize,
    widest: usize,
    chosen: &mut Vec<usize>,
    budget: &Budget,
    nodes: &mut u64,
) -> Result<bool> {
    if covered == all {
        return Ok(true);
    }
    let missing = (all & !covered).count_ones() as usize;
    if left == 0 || left * widest < missing {
        return Ok(false);
    }
    *nodes += 1;
    if *nodes & 0xfff == 0 {
        budget.check()?;
    }
    // branch on the lowest uncovered vertex: one of its coverers must be chosen
    let u = (all & !covered).trailing_zeros() as usize;
    let mut options = coverers[u];
    while options != 0 {
        let v = options.trailing_zeros() as usize;
        options &= options - 1;
        chosen.push(v);
        if cover_within(
            reach,
            coverers,
            all,
            covered | reach[v],
            left - 1,
            widest,
            chosen,
            budget,
            nodes,
        )? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}
