//! Dominated colorings: certificates, verification, and the exact solver.
//!
//! A dominated coloring is a proper coloring in which every color class lies
//! inside the open neighborhood of some vertex (its dominator). An isolated
//! vertex has an empty neighborhood, so it forms an exempt singleton class
//! without a dominator and still costs one color.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for [`dom_chromatic_oracle`].
pub const ORACLE_CAP: usize = 10;

/// A proper coloring together with one certifying dominator per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomColoring {
    colors: Vec<usize>,
    dominators: Vec<Option<usize>>,
}

impl DomColoring {
    /// `colors[v]` is the color of `v` in `1..=k`; `dominators[c - 1]` certifies color `c`.
    pub fn new(colors: Vec<usize>, dominators: Vec<Option<usize>>) -> Self {
        DomColoring { colors, dominators }
    }

    /// Builds a coloring from explicit classes, in order (class `i` gets color `i + 1`).
    pub fn from_classes(n: usize, classes: &[(Vec<usize>, Option<usize>)]) -> Self {
        let mut colors = vec![0; n];
        for (i, (members, _)) in classes.iter().enumerate() {
            for &v in members {
                colors[v] = i + 1;
            }
        }
        let dominators = classes.iter().map(|(_, d)| *d).collect();
        DomColoring { colors, dominators }
    }

    pub fn k(&self) -> usize {
        self.dominators.len()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn dominator(&self, color: usize) -> Option<usize> {
        self.dominators[color - 1]
    }

    pub fn dominators(&self) -> &[Option<usize>] {
        &self.dominators
    }

    /// Color classes in color order; each class is sorted.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k()];
        for (v, &c) in self.colors.iter().enumerate() {
            if (1..=self.k()).contains(&c) {
                classes[c - 1].push(v);
            }
        }
        classes
    }

    /// Serializable certificate `{"k":..,"classes":[[..]],"dominators":{"1":v,..}}`.
    /// Exempt classes map to `null`.
    pub fn certificate(&self) -> Certificate<'_> {
        Certificate {
            k: self.k(),
            classes: self.classes(),
            dominators: Dominators(&self.dominators),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Certificate<'a> {
    pub k: usize,
    pub classes: Vec<Vec<usize>>,
    pub dominators: Dominators<'a>,
}

/// Serializes as a map from 1-based color (as a string) to dominator, in color order.
#[derive(Debug)]
pub struct Dominators<'a>(&'a [Option<usize>]);

impl Serialize for Dominators<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (i, d) in self.0.iter().enumerate() {
            map.serialize_entry(&(i + 1).to_string(), d)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// Both endpoints of an edge share a color.
    ImproperEdge(usize, usize),
    /// The class of `color` is not contained in the neighborhood of its dominator.
    Undominated { color: usize, dominator: usize },
    /// A class without a dominator that is not a single isolated vertex.
    BadExemption { color: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected(Violation),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }
}

/// Checks properness, domination of every class, and that exempt classes are
/// isolated singletons. Reports the first violation found.
pub fn verify(g: &Graph, coloring: &DomColoring) -> Result<Verdict> {
    let n = g.vertex_count();
    let k = coloring.k();
    if coloring.colors.len() != n {
        return Err(Error::ColorIndices(format!(
            "assignment covers {} vertices, graph has {n}",
            coloring.colors.len()
        )));
    }
    let classes = coloring.classes();
    if let Some(&bad) = coloring.colors.iter().find(|&&c| c == 0 || c > k) {
        return Err(Error::ColorIndices(format!("color {bad} outside 1..={k}")));
    }
    if let Some(i) = classes.iter().position(Vec::is_empty) {
        return Err(Error::ColorIndices(format!("color {} is unused", i + 1)));
    }
    for d in coloring.dominators.iter().flatten() {
        if *d >= n {
            return Err(Error::VertexOutOfRange { vertex: *d, n });
        }
    }

    for (u, v) in g.edges() {
        if coloring.colors[u] == coloring.colors[v] {
            return Ok(Verdict::Rejected(Violation::ImproperEdge(u, v)));
        }
    }
    for (i, class) in classes.iter().enumerate() {
        let color = i + 1;
        match coloring.dominators[i] {
            Some(d) => {
                if !class.iter().all(|&v| g.has_edge(d, v)) {
                    return Ok(Verdict::Rejected(Violation::Undominated {
                        color,
                        dominator: d,
                    }));
                }
            }
            None => {
                if class.len() != 1 || !g.is_isolated(class[0]) {
                    return Ok(Verdict::Rejected(Violation::BadExemption { color }));
                }
            }
        }
    }
    Ok(Verdict::Accepted)
}

/// A minimum dominated coloring and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomSolution {
    pub k: usize,
    pub coloring: DomColoring,
}

/// Vertex cap for the exact solver (bitmask width).
pub const SOLVER_CAP: usize = 64;

/// Decides whether `g` has a dominated coloring with at most `k` colors and
/// returns one with exactly the number of classes it uses.
pub fn exists_k(g: &Graph, k: usize, budget: &Budget) -> Result<Option<DomColoring>> {
    let comps = components_for_solver(g)?;
    let iso = comps.iter().filter(|c| c.graph.vertex_count() == 1).count();
    if iso > k {
        return Ok(None);
    }
    // Each component needs at least its own lower bound; the remainder is
    // distributed by solving components one at a time at their minimum.
    let mut spare = k - iso;
    let mut parts = Vec::with_capacity(comps.len());
    for comp in &comps {
        if comp.graph.vertex_count() == 1 {
            parts.push(None);
            continue;
        }
        match comp.minimum_within(spare, budget)? {
            Some(sol) => {
                spare -= sol.0;
                parts.push(Some(sol));
            }
            None => return Ok(None),
        }
    }
    Ok(Some(assemble(g, &comps, parts)))
}

/// The dominated chromatic number of `g` with an optimal certificate.
///
/// Components are solved independently and their counts summed; the empty
/// graph has value 0.
pub fn dom_chromatic(g: &Graph, budget: &Budget) -> Result<DomSolution> {
    let comps = components_for_solver(g)?;
    let mut parts = Vec::with_capacity(comps.len());
    for comp in &comps {
        if comp.graph.vertex_count() == 1 {
            parts.push(None);
        } else {
            let n = comp.graph.vertex_count();
            parts.push(Some(
                comp.minimum_within(n, budget)?
                    .expect("singletons always work"),
            ));
        }
    }
    let coloring = assemble(g, &comps, parts);
    Ok(DomSolution {
        k: coloring.k(),
        coloring,
    })
}

/// Just the number; see [`dom_chromatic`].
pub fn dom_chromatic_number(g: &Graph, budget: &Budget) -> Result<usize> {
    dom_chromatic(g, budget).map(|s| s.k)
}

struct Component {
    graph: Graph,
    new_to_old: Vec<usize>,
}

fn components_for_solver(g: &Graph) -> Result<Vec<Component>> {
    g.components()
        .into_iter()
        .map(|(graph, map)| {
            if graph.vertex_count() > SOLVER_CAP {
                Err(Error::TooLarge {
                    what: "the dominated coloring solver",
                    n: graph.vertex_count(),
                    cap: SOLVER_CAP,
                })
            } else {
                Ok(Component {
                    graph,
                    new_to_old: map.new_to_old,
                })
            }
        })
        .collect()
}

/// Lower bound for a connected graph with at least one edge: a greedy
/// clique, and the fact that every class fits in a neighborhood of size at
/// most Δ.
pub fn root_lower_bound(g: &Graph) -> usize {
    let n = g.vertex_count() - g.isolated_vertices().len();
    let delta = g.max_degree();
    let counting = if delta == 0 { 0 } else { n.div_ceil(delta) };
    counting.max(g.greedy_clique().len()) + g.isolated_vertices().len()
}

/// `(k, colors, dominators)` for one component, in component labels.
type Part = (usize, Vec<usize>, Vec<usize>);

impl Component {
    /// Smallest k ≤ `limit` admitting a dominated k-coloring, with the
    /// per-vertex colors (0-based) and dominators in component labels.
    fn minimum_within(&self, limit: usize, budget: &Budget) -> Result<Option<Part>> {
        let nbr = self
            .graph
            .neighbor_masks()
            .expect("component within solver cap");
        let order = self.graph.degeneracy_order();
        let lb = root_lower_bound(&self.graph);
        for k in lb..=limit {
            budget.check()?;
            let mut search = Search::new(&nbr, &order, k, budget);
            if search.run()? {
                return Ok(Some(search.certificate()));
            }
        }
        Ok(None)
    }
}

fn assemble(g: &Graph, comps: &[Component], parts: Vec<Option<Part>>) -> DomColoring {
    let mut colors = vec![0; g.vertex_count()];
    let mut dominators = Vec::new();
    for (comp, part) in comps.iter().zip(parts) {
        let base = dominators.len();
        match part {
            None => {
                colors[comp.new_to_old[0]] = base + 1;
                dominators.push(None);
            }
            Some((k, local_colors, local_doms)) => {
                for (v, c) in local_colors.into_iter().enumerate() {
                    colors[comp.new_to_old[v]] = base + c + 1;
                }
                debug_assert_eq!(local_doms.len(), k);
                dominators.extend(local_doms.into_iter().map(|d| Some(comp.new_to_old[d])));
            }
        }
    }
    normalize(DomColoring::new(colors, dominators))
}

/// Renumbers classes by their smallest vertex so certificates are canonical.
fn normalize(c: DomColoring) -> DomColoring {
    let mut first_seen = Vec::new();
    for &col in &c.colors {
        if !first_seen.contains(&col) {
            first_seen.push(col);
        }
    }
    let mut remap = vec![0; c.k() + 1];
    for (i, &col) in first_seen.iter().enumerate() {
        remap[col] = i + 1;
    }
    let colors = c.colors.iter().map(|&col| remap[col]).collect();
    let dominators = first_seen
        .iter()
        .map(|&col| c.dominators[col - 1])
        .collect();
    DomColoring::new(colors, dominators)
}

/// Backtracking over vertices; each open class tracks its members, the
/// vertices adjacent to a member, and the surviving candidate dominators.
struct Search<'a> {
    nbr: &'a [u64],
    order: &'a [usize],
    k: usize,
    members: Vec<u64>,
    blocked: Vec<u64>,
    cands: Vec<u64>,
    color: Vec<usize>,
    budget: &'a Budget,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(nbr: &'a [u64], order: &'a [usize], k: usize, budget: &'a Budget) -> Self {
        Search {
            nbr,
            order,
            k,
            members: Vec::with_capacity(k),
            blocked: Vec::with_capacity(k),
            cands: Vec::with_capacity(k),
            color: vec![usize::MAX; nbr.len()],
            budget,
            nodes: 0,
        }
    }

    fn run(&mut self) -> Result<bool> {
        self.descend(0)
    }

    fn certificate(&self) -> (usize, Vec<usize>, Vec<usize>) {
        let doms = self
            .cands
            .iter()
            .map(|c| c.trailing_zeros() as usize)
            .collect();
        (self.cands.len(), self.color.clone(), doms)
    }

    fn descend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes & 0xfff == 0 {
            self.budget.check()?;
        }
        let v = self.order[depth];
        let bit = 1u64 << v;
        let nv = self.nbr[v];
        for c in 0..self.members.len() {
            if self.blocked[c] & bit != 0 || self.cands[c] & nv == 0 {
                continue;
            }
            let saved = (self.members[c], self.blocked[c], self.cands[c]);
            self.members[c] |= bit;
            self.blocked[c] |= nv;
            self.cands[c] &= nv;
            self.color[v] = c;
            if self.feasible(depth + 1) && self.descend(depth + 1)? {
                return Ok(true);
            }
            (self.members[c], self.blocked[c], self.cands[c]) = saved;
        }
        if self.members.len() < self.k {
            self.members.push(bit);
            self.blocked.push(nv);
            self.cands.push(nv);
            self.color[v] = self.members.len() - 1;
            if self.feasible(depth + 1) && self.descend(depth + 1)? {
                return Ok(true);
            }
            self.members.pop();
            self.blocked.pop();
            self.cands.pop();
        }
        self.color[v] = usize::MAX;
        Ok(false)
    }

    /// Forward check on the unassigned suffix: every vertex needs somewhere
    /// to go, and the remaining room must cover all of them.
    fn feasible(&self, depth: usize) -> bool {
        let rest = &self.order[depth..];
        if rest.is_empty() {
            return true;
        }
        let unassigned: u64 = rest.iter().fold(0, |m, &u| m | 1 << u);
        let open = self.members.len();
        let free = self.k - open;
        if free == 0 {
            for &u in rest {
                let nu = self.nbr[u];
                let fits =
                    (0..open).any(|c| self.blocked[c] >> u & 1 == 0 && self.cands[c] & nu != 0);
                if !fits {
                    return false;
                }
            }
        }
        let mut room = 0usize;
        for c in 0..open {
            let allowed = unassigned & !self.blocked[c];
            let mut cands = self.cands[c];
            let mut best = 0;
            while cands != 0 {
                let d = cands.trailing_zeros() as usize;
                cands &= cands - 1;
                best = best.max((self.nbr[d] & allowed).count_ones() as usize);
            }
            room += best;
        }
        if free > 0 {
            let widest = self
                .nbr
                .iter()
                .map(|&nd| (nd & unassigned).count_ones() as usize)
                .max()
                .unwrap_or(0);
            room += free * widest;
        }
        room >= rest.len()
    }
}

/// Ground truth by direct enumeration of set partitions into independent
/// classes, each inside some open neighborhood (isolated singletons exempt).
pub fn dom_chromatic_oracle(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::TooLarge {
            what: "the partition oracle",
            n,
            cap,
        });
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut best = n;
    enumerate_partitions(g, 0, &mut blocks, &mut best);
    Ok(best)
}

fn enumerate_partitions(g: &Graph, v: usize, blocks: &mut Vec<Vec<usize>>, best: &mut usize) {
    if blocks.len() >= *best && v < g.vertex_count() {
        return;
    }
    if v == g.vertex_count() {
        if blocks.iter().all(|b| block_is_dominated(g, b)) {
            *best = (*best).min(blocks.len());
        }
        return;
    }
    for i in 0..blocks.len() {
        if blocks[i].iter().all(|&u| !g.has_edge(u, v)) {
            blocks[i].push(v);
            enumerate_partitions(g, v + 1, blocks, best);
            blocks[i].pop();
        }
    }
    blocks.push(vec![v]);
    enumerate_partitions(g, v + 1, blocks, best);
    blocks.pop();
}

fn block_is_dominated(g: &Graph, block: &[usize]) -> bool {
    if block.len() == 1 && g.is_isolated(block[0]) {
        return true;
    }
    (0..g.vertex_count()).any(|d| block.iter().all(|&u| g.has_edge(d, u)))
}
