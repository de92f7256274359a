//! Sweep a family range, compare each prediction with the exact solver, and
//! classify the outcome.

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::dom::{dom_chromatic_number, dom_chromatic_oracle};
use crate::error::{Error, Result};
use crate::formulas::{known_erratum, Erratum, Param, Prediction, Status};
use crate::generators::FamilySpec;
use crate::perturbation::{dom_bondage, dom_stability, SweepOptions};

/// Largest instance the audit hands to the dominated-coloring solver.
pub const AUDIT_VERTEX_CAP: usize = 48;

#[derive(Debug, Clone)]
pub struct AuditOptions {
    pub param: Param,
    /// Per-instance wall-clock budget.
    pub budget_ms: Option<u64>,
    pub vertex_cap: usize,
    /// Instances up to this size are also solved by the partition oracle.
    pub oracle_cap: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            param: Param::DomChromatic,
            budget_ms: None,
            vertex_cap: AUDIT_VERTEX_CAP,
            oracle_cap: 9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Agree,
    /// A suspect prediction that the solver refutes.
    SuspectConfirmed,
    /// A proved prediction refuted on a whitelisted instance.
    KnownErratum,
    Disagree,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditRow {
    pub spec: String,
    pub vertices: usize,
    pub predicted: Option<Prediction>,
    pub status: Option<Status>,
    pub solver: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
    pub agree: Option<bool>,
    pub outcome: Outcome,
    pub errata: Option<&'static Erratum>,
    pub skip_reason: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub agree: usize,
    pub disagree: usize,
    pub suspect_confirmed: usize,
    pub known_errata: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub version: &'static str,
    pub param: Param,
    pub family: String,
    pub budget_ms: Option<u64>,
    pub instances: Vec<AuditRow>,
    pub summary: Summary,
}

impl AuditReport {
    /// True when some row disagrees outside the errata whitelist.
    pub fn has_disagreement(&self) -> bool {
        self.summary.disagree > 0
    }
}

/// Audit every instance in `family` (a spec range such as `cycle:4..12`).
pub fn audit(family: &str, opts: &AuditOptions) -> Result<AuditReport> {
    let specs = crate::generators::parse_range(family)?;
    Ok(audit_specs(family, &specs, opts))
}

pub fn audit_specs(family: &str, specs: &[FamilySpec], opts: &AuditOptions) -> AuditReport {
    let instances: Vec<AuditRow> = specs.par_iter().map(|s| audit_one(s, opts)).collect();
    let mut summary = Summary {
        total: instances.len(),
        ..Summary::default()
    };
    for row in &instances {
        match row.outcome {
            Outcome::Agree => summary.agree += 1,
            Outcome::SuspectConfirmed => summary.suspect_confirmed += 1,
            Outcome::KnownErratum => summary.known_errata += 1,
            Outcome::Disagree => summary.disagree += 1,
            Outcome::Skipped => summary.skipped += 1,
        }
    }
    AuditReport {
        version: crate::VERSION,
        param: opts.param,
        family: family.to_string(),
        budget_ms: opts.budget_ms,
        instances,
        summary,
    }
}

fn audit_one(spec: &FamilySpec, opts: &AuditOptions) -> AuditRow {
    let mut row = AuditRow {
        spec: spec.to_string(),
        vertices: spec.vertex_count(),
        predicted: None,
        status: None,
        solver: None,
        oracle: None,
        agree: None,
        outcome: Outcome::Skipped,
        errata: known_erratum(opts.param, spec),
        skip_reason: None,
    };
    match opts.param.predict(spec) {
        Ok(p) => {
            row.status = Some(p.status);
            row.predicted = Some(p);
        }
        Err(e) => {
            row.skip_reason = Some(format!("no prediction: {e}"));
            return row;
        }
    }
    let solved = spec.generate().and_then(|g| {
        if g.vertex_count() > opts.vertex_cap {
            return Err(Error::TooLarge {
                what: "the audit",
                n: g.vertex_count(),
                cap: opts.vertex_cap,
            });
        }
        let budget = Budget::from_option(opts.budget_ms);
        let value = match opts.param {
            Param::DomChromatic => dom_chromatic_number(&g, &budget)?,
            Param::Stability | Param::Bondage => {
                let sweep = SweepOptions {
                    budget,
                    ..SweepOptions::default()
                };
                let r = if opts.param == Param::Stability {
                    dom_stability(&g, &sweep)?.size
                } else {
                    dom_bondage(&g, &sweep)?.size
                };
                r.ok_or(Error::UndefinedParameter(
                    "no removal set changes the value",
                ))?
            }
        };
        let oracle = if opts.param == Param::DomChromatic && g.vertex_count() <= opts.oracle_cap {
            Some(dom_chromatic_oracle(&g, opts.oracle_cap)?)
        } else {
            None
        };
        Ok((value, oracle))
    });
    let (value, oracle) = match solved {
        Ok(v) => v,
        Err(e) => {
            row.skip_reason = Some(e.to_string());
            return row;
        }
    };
    row.solver = Some(value);
    row.oracle = oracle;
    let p = row.predicted.as_ref().expect("set above");
    let agree = p.admits(value);
    row.agree = Some(agree);
    row.outcome = if oracle.is_some_and(|o| o != value) {
        Outcome::Disagree
    } else if agree {
        Outcome::Agree
    } else if p.status == Status::Suspect {
        Outcome::SuspectConfirmed
    } else if row.errata.is_some_and(|e| e.verified == value) {
        Outcome::KnownErratum
    } else {
        Outcome::Disagree
    };
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_all_agree() {
        let r = audit("cycle:4..12", &AuditOptions::default()).unwrap();
        assert_eq!(r.instances.len(), 9);
        assert_eq!(r.summary.agree, 9);
        assert!(!r.has_disagreement());
        let specs: Vec<_> = r.instances.iter().map(|row| row.spec.as_str()).collect();
        assert_eq!(specs[0], "cycle:4");
        assert_eq!(specs[8], "cycle:12");
    }

    #[test]
    fn circulant_six_is_flagged() {
        let r = audit("circulant:6:1,3", &AuditOptions::default()).unwrap();
        let row = &r.instances[0];
        assert_eq!(row.solver, Some(2));
        assert_eq!(row.outcome, Outcome::SuspectConfirmed);
        assert_eq!(row.errata.unwrap().id, "circulant13-n6");
        assert!(!r.has_disagreement());
    }

    #[test]
    fn ladder_four_is_suspect_not_failing() {
        let r = audit("ladder:2..4", &AuditOptions::default()).unwrap();
        let outcomes: Vec<_> = r.instances.iter().map(|row| row.outcome).collect();
        assert_eq!(
            outcomes,
            [Outcome::Agree, Outcome::Agree, Outcome::SuspectConfirmed]
        );
        assert!(r.instances[2].solver.unwrap() >= 3);
    }

    #[test]
    fn unsupported_and_oversized_rows_are_skipped() {
        let r = audit("book:3", &AuditOptions::default()).unwrap();
        assert_eq!(r.instances[0].outcome, Outcome::Skipped);
        assert!(r.instances[0].skip_reason.is_some());
        let small = AuditOptions {
            vertex_cap: 5,
            ..AuditOptions::default()
        };
        let r = audit("path:6", &small).unwrap();
        assert_eq!(r.summary.skipped, 1);
    }

    #[test]
    fn stability_param() {
        let opts = AuditOptions {
            param: Param::Stability,
            ..AuditOptions::default()
        };
        let r = audit("path:4..8", &opts).unwrap();
        assert_eq!(r.summary.agree, 5);
    }
}
