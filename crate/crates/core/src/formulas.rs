//! Closed-form values and bounds for the dominated chromatic number and its
//! perturbation parameters, as checkable predictions.
//!
//! Every [`Prediction`] carries a [`Status`]. `Proved` marks a published
//! closed form that the audit expects the solver to reproduce; `Suspect`
//! marks values that already contradict an independent bound, contradict
//! their own derivation, or depend on such a value. Instances where a proved
//! value is known to be wrong are listed in [`KNOWN_ERRATA`].

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::generators::{circulant_reduce, FamilySpec};
use crate::graph::Graph;
use crate::invariants::{chromatic_number, domination_number, total_domination_number};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Proved,
    Suspect,
}

impl Status {
    fn weakest(self, other: Status) -> Status {
        self.max(other)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Estimate {
    Exact {
        value: usize,
    },
    Interval {
        lo: Bound,
        hi: Bound,
    },
    /// Value of a recurrence unrolled from `base`.
    Recursive {
        value: usize,
        base: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    #[serde(flatten)]
    pub estimate: Estimate,
    pub status: Status,
    pub claim: &'static str,
}

impl Prediction {
    fn exact(value: usize, status: Status, claim: &'static str) -> Self {
        Prediction {
            estimate: Estimate::Exact { value },
            status,
            claim,
        }
    }

    fn interval(lo: Bound, hi: Bound, claim: &'static str) -> Result<Self> {
        if hi.value < lo.value {
            return Err(Error::EmptyInterval {
                lo: lo.value,
                hi: hi.value,
            });
        }
        Ok(Prediction {
            estimate: Estimate::Interval { lo, hi },
            status: lo.status.weakest(hi.status),
            claim,
        })
    }

    /// The single predicted value, for exact and recursive predictions.
    pub fn value(&self) -> Option<usize> {
        match self.estimate {
            Estimate::Exact { value } | Estimate::Recursive { value, .. } => Some(value),
            Estimate::Interval { .. } => None,
        }
    }

    /// Whether an observed value is consistent with the prediction.
    pub fn admits(&self, observed: usize) -> bool {
        match self.estimate {
            Estimate::Exact { value } | Estimate::Recursive { value, .. } => value == observed,
            Estimate::Interval { lo, hi } => (lo.value..=hi.value).contains(&observed),
        }
    }

    fn demote(mut self) -> Self {
        self.status = Status::Suspect;
        self
    }
}

/// `n/2` if `n ≡ 0 (mod 4)`, else `⌊n/2⌋ + 1`; stated for paths and cycles with `n ≥ 3`.
pub fn path_cycle_value(n: usize) -> usize {
    if n.is_multiple_of(4) {
        n / 2
    } else {
        n / 2 + 1
    }
}

/// `2⌈(n-1)/3⌉`, stated for ladders with `n ≥ 2` and prisms with `n ≥ 4`.
pub fn ladder_value(n: usize) -> usize {
    2 * (n - 1).div_ceil(3)
}

/// Stated table for `C_n(1,3)`: 3 at `n = 6`, 4 at `n = 7`, and for `n ≥ 8`
/// `2⌊n/8⌋` (n ≡ 0), `2⌊n/8⌋ + 1` (n ≡ 1), `2⌊n/8⌋ + 2` otherwise, mod 8.
pub fn circulant13_value(n: usize) -> Option<usize> {
    match n {
        6 => Some(3),
        7 => Some(4),
        n if n >= 8 => Some(
            2 * (n / 8)
                + match n % 8 {
                    0 => 0,
                    1 => 1,
                    _ => 2,
                },
        ),
        _ => None,
    }
}

/// Class-size lower bound `⌈(non-isolated vertices) / Δ⌉` plus one color per
/// isolated vertex.
pub fn counting_bound(g: &Graph) -> usize {
    let iso = g.isolated_vertices().len();
    let delta = g.max_degree();
    let rest = g.vertex_count() - iso;
    iso + if delta == 0 { 0 } else { rest.div_ceil(delta) }
}

fn unsupported(spec: &FamilySpec) -> Error {
    Error::Unsupported(spec.to_string())
}

/// Predicted dominated chromatic number of a family instance.
///
/// Exact predictions that fall below [`counting_bound`] are demoted to
/// `Suspect`, since no dominated coloring can beat that bound.
pub fn predict_dom_chromatic(spec: &FamilySpec) -> Result<Prediction> {
    spec.validate()?;
    let p = raw_dom_chromatic(spec)?;
    if let Estimate::Exact { value } = p.estimate {
        if value < counting_bound(&spec.generate()?) {
            return Ok(p.demote());
        }
    }
    Ok(p)
}

fn raw_dom_chromatic(spec: &FamilySpec) -> Result<Prediction> {
    use FamilySpec::*;
    use Status::*;
    Ok(match *spec {
        Path(2) => Prediction::exact(2, Proved, "full-degree vertex: equals chromatic number"),
        Path(n) | Cycle(n) if n >= 3 => Prediction::exact(
            path_cycle_value(n),
            Proved,
            "paths and cycles: n/2 if n ≡ 0 (mod 4), else ⌊n/2⌋+1",
        ),
        Complete(n) => Prediction::exact(n, Proved, "full-degree vertex: equals chromatic number"),
        Star(_) => Prediction::exact(2, Proved, "full-degree vertex: equals chromatic number"),
        Wheel(n) => Prediction::exact(
            if n % 2 == 0 { 3 } else { 4 },
            Proved,
            "full-degree vertex: equals chromatic number",
        ),
        CompleteBipartite(..) | DoubleStar(..) => Prediction::exact(
            2,
            Proved,
            "bipartite with a vertex on each side seeing the whole other side: 2",
        ),
        Ladder(n) if n >= 2 => Prediction::exact(ladder_value(n), Proved, "ladders: 2⌈(n-1)/3⌉"),
        Prism(n) if n >= 4 => {
            Prediction::exact(ladder_value(n), Proved, "prisms: same as the ladder L_n")
        }
        Grid(m, n) if m >= 2 && n >= 2 => grid(m, n)?,
        Qmn(m, n) if m >= 3 && n >= 3 => Prediction::exact(m * (n - 1), Proved, "Q(m,n): m(n-1)"),
        QmH { m, ref base, .. } => {
            let inner = predict_dom_chromatic(base)?;
            let chi = inner.value().ok_or_else(|| unsupported(spec))?;
            let mut p = bound_qmh(m, chi)?;
            if inner.status == Suspect {
                p = p.demote();
            }
            p
        }
        Friendship(_) => Prediction::exact(3, Proved, "friendship graphs: 3"),
        GenFriendship { m, n } => flower(m, n),
        Circulant(n, ref s) => circulant(n, s).ok_or_else(|| unsupported(spec))?,
        TriangularChain(n) if n >= 2 => Prediction::exact(n + 1, Proved, "triangular chains: n+1"),
        ParaSquareChain(n) | OrthoSquareChain(n) => {
            Prediction::exact(n + 1, Proved, "para/ortho square chains: n+1")
        }
        ParaHexChain(2) | MetaChain(2) => {
            Prediction::exact(6, Proved, "hexagonal chains of length 2: 6")
        }
        // the closed form n+4 disagrees with its own recurrence H_n = H_{n-1} + 2 from n = 3 on
        ParaHexChain(n) | MetaChain(n) if n >= 3 => {
            Prediction::exact(n + 4, Suspect, "para/meta hexagonal chains: n+4")
        }
        _ => return Err(unsupported(spec)),
    })
}

fn circulant(n: usize, s: &[usize]) -> Option<Prediction> {
    const CLAIM: &str = "C_n(1,3): 2⌊n/8⌋ (+1 if n ≡ 1, +2 otherwise, mod 8; n ≥ 8)";
    if s == [1, 3] {
        return Some(Prediction::exact(
            circulant13_value(n)?,
            circulant13_status(n),
            CLAIM,
        ));
    }
    if let ([a, b], true) = (s, n >= 8) {
        for (x, y) in [(*a, *b), (*b, *a)] {
            if let Ok(r) = circulant_reduce(n, x, y) {
                if r.c == 3 {
                    return Some(Prediction::exact(
                        circulant13_value(n)?,
                        circulant13_status(n),
                        "C_n(a,b) ≅ C_n(1,3) when a⁻¹b ≡ ±3 (mod n)",
                    ));
                }
            }
        }
    }
    None
}

/// The n = 6 value conflicts with C_6(1,3) ≅ K_{3,3}, which has value 2.
/// For n ≡ 3 (mod 8) the only lower bound on offer is γ_t = 2⌊n/8⌋+1, one
/// short of the stated 2⌊n/8⌋+2, so that branch is unsupported.
fn circulant13_status(n: usize) -> Status {
    if n == 6 || (n >= 8 && n % 8 == 3) {
        Status::Suspect
    } else {
        Status::Proved
    }
}

/// Grid recursion on `n`: `tm` for `n = 3t`, plus `χ_dom(P_m)` for `n = 3t+1`,
/// plus `χ_dom(L_m)` for `n = 3t+2`. Inherits doubt from its inputs.
///
/// The grid is symmetric in `m` and `n` but the recursion is not; when the
/// two orientations give different values the prediction is suspect.
fn grid(m: usize, n: usize) -> Result<Prediction> {
    let p = grid_oriented(m, n)?;
    if m != n && grid_oriented(n, m)?.value() != p.value() {
        return Ok(p.demote());
    }
    Ok(p)
}

fn grid_oriented(m: usize, n: usize) -> Result<Prediction> {
    const CLAIM: &str = "grids P_m □ P_n: tm, +χ_dom(P_m), +χ_dom(L_m) for n = 3t, 3t+1, 3t+2";
    let t = n / 3;
    let base = t * m;
    let extra = match n % 3 {
        0 => None,
        1 => Some(predict_dom_chromatic(&FamilySpec::Path(m))?),
        _ => Some(predict_dom_chromatic(&FamilySpec::Ladder(m))?),
    };
    Ok(match extra {
        None => Prediction::exact(base, Status::Proved, CLAIM),
        Some(p) => {
            let v = p.value().expect("path and ladder predictions are exact");
            Prediction::exact(base + v, p.status, CLAIM)
        }
    })
}

/// The flower recurrence: `D_m^n = D_m^{n-1} + ⌊m/2⌋` when `n ≡ 1 (mod 4)`,
/// else `+ ⌊m/2⌋ - 1`, unrolled from `D_m^1 = C_m`. Always suspect: for
/// `m = 3` it cannot reproduce the constant friendship value 3.
fn flower(m: usize, n: usize) -> Prediction {
    let base = path_cycle_value(m);
    let mut value = base;
    for j in 2..=n {
        value += m / 2;
        if j % 4 != 1 {
            value -= 1;
        }
    }
    Prediction {
        estimate: Estimate::Recursive { value, base },
        status: Status::Suspect,
        claim: "flowers D_m^n: D_m^{n-1} + ⌊m/2⌋ (n ≡ 1 mod 4), else + ⌊m/2⌋ - 1",
    }
}

/// `⌈n/4⌉ + 1` when `n ≡ 2, 4 (mod 8)`, else `⌈n/4⌉`, for `n ≥ 4`.
pub fn predict_gamma_t_circulant13(n: usize) -> Result<Prediction> {
    if n < 4 {
        return Err(Error::InvalidParameters {
            family: "circulant",
            reason: format!("n = {n}, need n >= 4"),
        });
    }
    let bump = usize::from(matches!(n % 8, 2 | 4));
    Ok(Prediction::exact(
        n.div_ceil(4) + bump,
        Status::Proved,
        "γ_t(C_n(1,3)): ⌈n/4⌉, +1 if n ≡ 2, 4 (mod 8)",
    ))
}

/// Point-attaching: the sum of the parts bounds from above. The lower end
/// (the largest part) is a heuristic, hence suspect.
pub fn bound_point_attach(parts: &[usize]) -> Result<Prediction> {
    let hi = parts.iter().sum();
    let lo = *parts
        .iter()
        .max()
        .ok_or(Error::UndefinedParameter("point-attach bound of no parts"))?;
    Prediction::interval(
        Bound {
            value: lo,
            status: Status::Suspect,
        },
        Bound {
            value: hi,
            status: Status::Proved,
        },
        "point-attaching: at most the sum of the parts",
    )
}

/// `[n(χ_H - 1), n·χ_H]` for `K_n` with a copy of `H` at each clique vertex.
pub fn bound_qmh(n: usize, chi_h: usize) -> Result<Prediction> {
    if chi_h == 0 {
        return Err(Error::UndefinedParameter("Q(m,H) bound with an empty H"));
    }
    let proved = |value| Bound {
        value,
        status: Status::Proved,
    };
    Prediction::interval(
        proved(n * (chi_h - 1)),
        proved(n * chi_h),
        "Q(m,H): between n(χ_H-1) and n·χ_H",
    )
}

/// `[max(χ1, χ2), χ1 + χ2 - r]` for an r-gluing of two connected graphs.
///
/// The upper end fails on small instances (see the r-gluing tests), so it is
/// reported as suspect.
pub fn bound_r_glue(chi1: usize, chi2: usize, r: usize) -> Result<Prediction> {
    let hi = (chi1 + chi2).checked_sub(r).ok_or(Error::EmptyInterval {
        lo: chi1.max(chi2),
        hi: 0,
    })?;
    Prediction::interval(
        Bound {
            value: chi1.max(chi2),
            status: Status::Proved,
        },
        Bound {
            value: hi,
            status: Status::Suspect,
        },
        "r-gluing: between max(χ1, χ2) and χ1 + χ2 - r",
    )
}

/// `[max(χ, γ_t), χ·γ]` computed exactly for an isolate-free graph.
pub fn sandwich(g: &Graph, budget: &Budget) -> Result<Prediction> {
    if g.is_empty() || g.has_isolated_vertex() {
        return Err(Error::UndefinedParameter(
            "sandwich bound for a graph with an isolated vertex",
        ));
    }
    let chi = chromatic_number(g, budget)?.value;
    let gamma = domination_number(g, budget)?.value;
    let gamma_t = total_domination_number(g, budget)?.value;
    let proved = |value| Bound {
        value,
        status: Status::Proved,
    };
    Prediction::interval(
        proved(chi.max(gamma_t)),
        proved(chi * gamma),
        "max(χ, γ_t) ≤ χ_dom ≤ χ·γ",
    )
}

/// Predicted dom-stability (minimum vertex removals changing the value).
pub fn predict_stability(spec: &FamilySpec) -> Result<Prediction> {
    spec.validate()?;
    use FamilySpec::*;
    use Status::*;
    Ok(match *spec {
        Path(n) if n >= 4 => Prediction::exact(
            if n % 4 == 3 { 2 } else { 1 },
            Proved,
            "paths: 2 if n ≡ 3 (mod 4), else 1",
        ),
        Cycle(n) if n >= 4 => Prediction::exact(
            match n % 4 {
                0 => 3,
                3 => 2,
                _ => 1,
            },
            Proved,
            "cycles: 3 if n ≡ 0, 2 if n ≡ 3 (mod 4), else 1",
        ),
        Friendship(n) | Book(n) if n >= 2 => {
            Prediction::exact(1, Proved, "friendship, wheel, flower, book: 1")
        }
        Wheel(_) => Prediction::exact(1, Proved, "friendship, wheel, flower, book: 1"),
        GenFriendship { n, .. } if n >= 2 => {
            Prediction::exact(1, Proved, "friendship, wheel, flower, book: 1")
        }
        CompleteBipartite(a, b) if a == b => Prediction::exact(a, Proved, "K_{n,n}: n"),
        DoubleStar(..) => Prediction::exact(1, Proved, "double stars: 1"),
        _ => return Err(unsupported(spec)),
    })
}

/// Predicted dom-bondage (minimum edge removals changing the value).
pub fn predict_bondage(spec: &FamilySpec) -> Result<Prediction> {
    spec.validate()?;
    use FamilySpec::*;
    use Status::*;
    Ok(match *spec {
        Path(n) if n >= 4 => Prediction::exact(
            if n % 4 == 2 { 2 } else { 1 },
            Proved,
            "paths: 2 if n ≡ 2 (mod 4), else 1",
        ),
        Cycle(n) if n >= 4 => Prediction::exact(
            if n % 4 == 2 { 3 } else { 2 },
            Proved,
            "cycles: 3 if n ≡ 2 (mod 4), else 2",
        ),
        Friendship(n) | Book(n) if n >= 2 => {
            Prediction::exact(1, Proved, "friendship and book graphs: 1")
        }
        CompleteBipartite(a, b) if a.min(b) >= 2 => {
            Prediction::exact(a.min(b), Proved, "K_{m,n}, m ≥ n: n")
        }
        _ => return Err(unsupported(spec)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    #[serde(rename = "domchrom")]
    DomChromatic,
    Stability,
    Bondage,
}

impl Param {
    pub fn predict(self, spec: &FamilySpec) -> Result<Prediction> {
        match self {
            Param::DomChromatic => predict_dom_chromatic(spec),
            Param::Stability => predict_stability(spec),
            Param::Bondage => predict_bondage(spec),
        }
    }
}

/// A stated value that the exact solver refutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub id: &'static str,
    #[serde(skip)]
    pub param: Param,
    #[serde(skip)]
    pub instance: &'static str,
    pub stated: usize,
    pub verified: usize,
    pub note: &'static str,
}

/// Instances where a published value disagrees with the exact solver and an
/// independent check. The audit reports these but does not fail on them.
pub const KNOWN_ERRATA: &[Erratum] = &[
    Erratum {
        id: "circulant13-n6",
        param: Param::DomChromatic,
        instance: "circulant:6:1,3",
        stated: 3,
        verified: 2,
        note: "C_6(1,3) is K_{3,3}; the accompanying derivation itself gives 2",
    },
    Erratum {
        id: "ladder-4",
        param: Param::DomChromatic,
        instance: "ladder:4",
        stated: 2,
        verified: 4,
        note: "2 is below the class-size bound ⌈8/3⌉ = 3",
    },
    Erratum {
        id: "cycle-3",
        param: Param::DomChromatic,
        instance: "cycle:3",
        stated: 2,
        verified: 3,
        note: "C_3 = K_3 needs 3 colors in any proper coloring",
    },
    Erratum {
        id: "circulant13-n11",
        param: Param::DomChromatic,
        instance: "circulant:11:1,3",
        stated: 4,
        verified: 3,
        note: "classes {0,2,4,9}, {1,3,5,7}, {6,8,10} dominated by 1, 4, 7",
    },
    Erratum {
        id: "grid-3x4",
        param: Param::DomChromatic,
        instance: "grid:3x4",
        stated: 5,
        verified: 4,
        note: "recursion tm + χ_dom(P_m) overshoots at m = 3, n = 4",
    },
    Erratum {
        id: "hchain-3",
        param: Param::DomChromatic,
        instance: "hchain:3",
        stated: 7,
        verified: 8,
        note: "closed form n+4; the chain recurrence +2 per hexagon gives 8",
    },
    Erratum {
        id: "mchain-3",
        param: Param::DomChromatic,
        instance: "mchain:3",
        stated: 7,
        verified: 8,
        note: "closed form n+4; the chain recurrence +2 per hexagon gives 8",
    },
    Erratum {
        id: "stability-k22",
        param: Param::Stability,
        instance: "bipartite:2x2",
        stated: 2,
        verified: 3,
        note:
            "K_{2,2} is C_4, whose stated stability is 3; removing a side leaves 2K_1 with value 2",
    },
    Erratum {
        id: "bondage-friendship-2",
        param: Param::Bondage,
        instance: "friendship:2",
        stated: 1,
        verified: 2,
        note: "every single edge removal leaves a triangle and a 3-coloring with dominators",
    },
    Erratum {
        id: "bondage-friendship-3",
        param: Param::Bondage,
        instance: "friendship:3",
        stated: 1,
        verified: 2,
        note: "every single edge removal leaves a triangle and a 3-coloring with dominators",
    },
];

pub fn known_erratum(param: Param, spec: &FamilySpec) -> Option<&'static Erratum> {
    let s = spec.to_string();
    KNOWN_ERRATA
        .iter()
        .find(|e| e.param == param && e.instance == s)
}
