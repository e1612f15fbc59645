//! Canonical report emission. JSON is the canonical format; the text
//! rendering carries the same data. Key order is fixed by struct order,
//! so identical runs serialize byte-identically apart from elapsed_ms.

use serde::Serialize;

use crate::verify::{CheckResult, CheckStatus};

#[derive(Serialize)]
pub struct Report {
    pub tool_version: String,
    pub seed: u64,
    pub field_modulus_policy: &'static str,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(seed: u64, mut checks: Vec<CheckResult>) -> Report {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            field_modulus_policy: "lex-min",
            checks,
        }
    }

    pub fn all_executed_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "tool version {}  seed {}  field modulus policy {}\n\n",
            self.tool_version, self.seed, self.field_modulus_policy
        ));
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            out.push_str(&format!("[{}] {} ({} ms)\n", status, c.id, c.elapsed_ms));
            for n in &c.notes {
                out.push_str(&format!("    {}\n", n));
            }
            if !c.witnesses.is_empty() {
                out.push_str("    witnesses:\n");
                for w in &c.witnesses {
                    out.push_str(&format!(
                        "      {} | order {} index {} ({:?}) supersolvable={} generators={}\n",
                        w.description,
                        w.order,
                        w.index,
                        w.index_class,
                        w.supersolvable,
                        serde_json::to_string(&w.generators).unwrap()
                    ));
                }
            }
            out.push('\n');
        }
        out
    }
}
