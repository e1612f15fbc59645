//! The verification harness: one operation per checkable claim, producing
//! `CheckResult`s with reproducible witnesses.

pub mod catalog;
pub mod corpus;
pub mod diagonal;
pub mod durbin;
pub mod extensions;
pub mod solvability;
pub mod sylow_facts;
pub mod theorem_ab;
pub mod wreath;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::structure::fingerprint::{fingerprint, fingerprint_name};
use crate::structure::lattice::{
    maximal_classes_full, maximal_classes_twogen, GroupContext, SubgroupClass, FULL_LATTICE_BOUND,
    TWO_GEN_BOUND,
};
use crate::structure::series::{index_class, is_supersolvable, IndexClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One classified maximal-subgroup class of some ambient group.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub description: String,
    pub order: u64,
    pub index: u64,
    pub index_class: IndexClass,
    pub supersolvable: bool,
    pub generators: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: CheckStatus,
    pub elapsed_ms: u64,
    pub notes: Vec<String>,
    pub witnesses: Vec<WitnessReport>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Runs a check body, timing it and mapping resource errors to `Skipped`
/// and other errors to `Fail`.
pub fn run_check(id: &str, body: impl FnOnce(&mut CheckBuilder) -> Result<()>) -> CheckResult {
    let start = std::time::Instant::now();
    let mut b = CheckBuilder {
        notes: Vec::new(),
        witnesses: Vec::new(),
        failures: Vec::new(),
    };
    let status = match body(&mut b) {
        Ok(()) => {
            if b.failures.is_empty() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            }
        }
        Err(Error::Resource(msg)) => {
            b.notes.push(format!("skipped: resource bound: {}", msg));
            CheckStatus::Skipped
        }
        Err(e) => {
            b.failures.push(format!("error: {}", e));
            CheckStatus::Fail
        }
    };
    let mut notes = b.notes;
    notes.extend(b.failures.iter().map(|f| format!("FAIL: {}", f)));
    CheckResult {
        id: id.to_string(),
        status,
        elapsed_ms: start.elapsed().as_millis() as u64,
        notes,
        witnesses: b.witnesses,
    }
}

pub struct CheckBuilder {
    pub notes: Vec<String>,
    pub witnesses: Vec<WitnessReport>,
    failures: Vec<String>,
}

impl CheckBuilder {
    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }

    pub fn check(&mut self, ok: bool, msg: impl Into<String>) {
        if !ok {
            self.failures.push(msg.into());
        }
    }

    pub fn witness(&mut self, w: WitnessReport) {
        self.witnesses.push(w);
    }

    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty()
    }
}

/// Per-maximal-class data backing both verdicts and report rows.
#[derive(Clone, Debug)]
pub struct MaximalReport {
    pub order: u128,
    pub index: u128,
    pub index_class: IndexClass,
    pub supersolvable: bool,
    pub name: Option<String>,
    pub rep: PermGroup,
}

impl MaximalReport {
    pub fn violates_hypothesis(&self) -> bool {
        !self.supersolvable && self.index_class == IndexClass::Other
    }

    pub fn to_witness(&self, group_id: &str) -> WitnessReport {
        let desc = match &self.name {
            Some(n) => format!(
                "{}: maximal subgroup {} of order {}",
                group_id, n, self.order
            ),
            None => format!("{}: maximal subgroup of order {}", group_id, self.order),
        };
        WitnessReport {
            description: desc,
            order: self.order as u64,
            index: self.index as u64,
            index_class: self.index_class,
            supersolvable: self.supersolvable,
            generators: self
                .rep
                .generators()
                .iter()
                .map(|p| p.images().to_vec())
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HypothesisVerdict {
    pub group_id: String,
    pub satisfied: bool,
    pub reports: Vec<MaximalReport>,
}

impl HypothesisVerdict {
    pub fn violating(&self) -> Vec<&MaximalReport> {
        self.reports
            .iter()
            .filter(|r| r.violates_hypothesis())
            .collect()
    }

    /// True when a violating class with this (order, index) was found.
    pub fn has_violating(&self, order: u128, index: u128) -> bool {
        self.violating()
            .iter()
            .any(|r| r.order == order && r.index == index)
    }
}

fn classes_to_reports(g: &PermGroup, classes: Vec<SubgroupClass>) -> Result<Vec<MaximalReport>> {
    let mut out = Vec::new();
    for c in classes {
        let idx = g.order() / c.order;
        let ss = is_supersolvable(&c.rep)?;
        let name = fingerprint(&c.rep)
            .ok()
            .and_then(|fp| fingerprint_name(&fp));
        out.push(MaximalReport {
            order: c.order,
            index: idx,
            index_class: index_class(idx),
            supersolvable: ss,
            name,
            rep: c.rep,
        });
    }
    out.sort_by_key(|a| (a.index, a.order));
    Ok(out)
}

/// Classifies every maximal subgroup class of `g`: full-lattice mode up to
/// order 2000, two-generated mode up to 12000, resource error above.
pub fn hypothesis_check(g: &PermGroup, group_id: &str) -> Result<HypothesisVerdict> {
    let ctx = GroupContext::new(g, TWO_GEN_BOUND)?;
    let classes = if g.order() <= FULL_LATTICE_BOUND {
        maximal_classes_full(&ctx)?
    } else {
        maximal_classes_twogen(&ctx)?
    };
    let reports = classes_to_reports(g, classes)?;
    let satisfied = reports.iter().all(|r| !r.violates_hypothesis());
    Ok(HypothesisVerdict {
        group_id: group_id.to_string(),
        satisfied,
        reports,
    })
}

/// Witness mode: classifies only the supplied candidate subgroups (no
/// completeness claim; used where enumeration is out of reach).
pub fn hypothesis_witness_reports(
    g: &PermGroup,
    candidates: &[(String, PermGroup)],
) -> Result<Vec<MaximalReport>> {
    let mut out = Vec::new();
    for (name, h) in candidates {
        let order = h.order();
        let index = g.order() / order;
        let ss = is_supersolvable(h)?;
        out.push(MaximalReport {
            order,
            index,
            index_class: index_class(index),
            supersolvable: ss,
            name: Some(name.clone()),
            rep: h.clone(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;

    #[test]
    fn psl2_11_satisfies_hypothesis() {
        let g = atlas::psl2(11).unwrap();
        let v = hypothesis_check(&g, "psl2(11)").unwrap();
        assert!(v.satisfied);
        // the Alt(5) classes have prime index 11
        assert!(v
            .reports
            .iter()
            .any(|r| r.order == 60 && r.index == 11 && !r.supersolvable));
    }

    #[test]
    fn pgl2_11_fails_with_sym4_witness() {
        let g = atlas::pgl2(11).unwrap();
        let v = hypothesis_check(&g, "pgl2(11)").unwrap();
        assert!(!v.satisfied);
        assert!(v.has_violating(24, 55));
        let w = v
            .reports
            .iter()
            .find(|r| r.order == 24 && r.index == 55 && r.violates_hypothesis())
            .unwrap();
        assert_eq!(w.name.as_deref(), Some("Sym(4)"));
        // the other index-55 class of order 24 is the supersolvable D24
        assert!(v
            .reports
            .iter()
            .any(|r| r.order == 24 && r.index == 55 && r.supersolvable));
    }

    #[test]
    fn alt6_fails_with_alt5_witness() {
        let g = atlas::alt(6).unwrap();
        let v = hypothesis_check(&g, "alt(6)").unwrap();
        assert!(!v.satisfied);
        assert!(v.has_violating(60, 6));
    }
}
