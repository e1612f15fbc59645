//! Hypothesis verdicts for the almost-simple extensions of the four
//! distinguished simple groups, with the expected witnesses for the
//! excluded ones, plus the 2-residual and radical facts used alongside.

use crate::atlas;
use crate::error::Result;
use crate::group::PermGroup;
use crate::structure::fingerprint::{fingerprint, fingerprint_name};
use crate::structure::sylow::{o_p_residual, solvable_radical};
use crate::verify::{hypothesis_check, CheckBuilder, CheckResult};

struct ExtensionCase {
    name: &'static str,
    group: PermGroup,
    expect_satisfied: bool,
    /// (order, index) of an expected violating witness when violated.
    witness: Option<(u128, u128)>,
}

fn cases() -> Result<Vec<ExtensionCase>> {
    Ok(vec![
        ExtensionCase {
            name: "Sym(5)",
            group: atlas::sym(5)?,
            expect_satisfied: true,
            witness: None,
        },
        ExtensionCase {
            name: "PGL2(7)",
            group: atlas::pgl2(7)?,
            expect_satisfied: true,
            witness: None,
        },
        ExtensionCase {
            name: "PGammaL2(8)",
            group: atlas::pgammal2(8)?,
            expect_satisfied: true,
            witness: None,
        },
        ExtensionCase {
            name: "PGL2(11)",
            group: atlas::pgl2(11)?,
            expect_satisfied: false,
            witness: Some((24, 55)),
        },
        ExtensionCase {
            name: "aut_psl3_3",
            group: atlas::aut_psl3_3()?,
            expect_satisfied: false,
            witness: Some((48, 234)),
        },
        ExtensionCase {
            name: "PSL3(3)",
            group: atlas::psl3_3()?,
            expect_satisfied: false,
            witness: Some((24, 234)),
        },
    ])
}

fn check_case(case: &ExtensionCase, seed: u64, b: &mut CheckBuilder) -> Result<()> {
    let v = hypothesis_check(&case.group, case.name)?;
    let profile: Vec<String> = v
        .reports
        .iter()
        .map(|r| {
            format!(
                "(order {}, index {}, {})",
                r.order,
                r.index,
                if r.supersolvable { "ss" } else { "non-ss" }
            )
        })
        .collect();
    b.note(format!(
        "{}: {}; maximal classes: {}",
        case.name,
        if v.satisfied { "satisfied" } else { "violated" },
        profile.join(", ")
    ));
    b.check(
        v.satisfied == case.expect_satisfied,
        format!(
            "{}: hypothesis verdict {} but expected {}",
            case.name, v.satisfied, case.expect_satisfied
        ),
    );
    if let Some((worder, windex)) = case.witness {
        if v.has_violating(worder, windex) {
            let report = v
                .reports
                .iter()
                .find(|r| r.order == worder && r.index == windex && r.violates_hypothesis())
                .unwrap();
            b.witness(report.to_witness(case.name));
        } else {
            b.fail(format!(
                "{}: expected violating witness (order {}, index {}) missing",
                case.name, worder, windex
            ));
        }
    }
    let rad = solvable_radical(&case.group, seed)?;
    b.check(
        rad.order() == 1,
        format!(
            "{}: solvable radical has order {}, expected 1",
            case.name,
            rad.order()
        ),
    );
    Ok(())
}

pub fn extension_consistency_checks(seed: u64) -> CheckResult {
    crate::verify::run_check("extensions", |b| {
        for case in cases()? {
            check_case(&case, seed, b)?;
        }
        // O^2(Sym(5)) = Alt(5)
        let s5 = atlas::sym(5)?;
        let o2 = o_p_residual(&s5, 2, seed)?;
        b.check(
            o2.order() == 60,
            format!("O^2(Sym(5)) has order {}, expected 60", o2.order()),
        );
        b.note("O^2(Sym(5)) = Alt(5) of order 60".to_string());
        // the order-48 witness in aut_psl3_3: record its advisory type and
        // flag which of the two textual descriptions matches. A complete
        // Sym(4) forces a direct factor, so the split description is the
        // consistent one.
        {
            let aut = atlas::aut_psl3_3()?;
            let v = hypothesis_check(&aut, "aut_psl3_3")?;
            if let Some(w) = v.reports.iter().find(|r| r.order == 48 && r.index == 234) {
                let name = fingerprint_name(&fingerprint(&w.rep)?);
                match name.as_deref() {
                    Some("Sym(4)xC2") => b.note(
                        "aut_psl3_3 order-48 witness fingerprints as Sym(4)xC2, i.e. the \
                         split direct product; the alternative 'Sym(4) : C2' description \
                         in circulation disagrees with the structure found"
                            .to_string(),
                    ),
                    other => b.note(format!(
                        "aut_psl3_3 order-48 witness fingerprint name: {:?}",
                        other
                    )),
                }
            } else {
                b.fail("aut_psl3_3: order-48 index-234 witness not found".to_string());
            }
        }
        Ok(())
    })
}
