//! Property suites over the desk corpus: the two classical solvability
//! criteria (all maximal indices prime or squared prime; minimal
//! non-supersolvable), the equivalence of the chief-series and
//! maximal-index characterizations of supersolvability, and the agreement
//! of the two maximal-subgroup enumeration modes.

use crate::error::Result;
use crate::structure::lattice::{maximal_classes_full, maximal_classes_twogen, GroupContext};
use crate::structure::series::{index_class, is_solvable, is_supersolvable, IndexClass};
use crate::verify::corpus::property_corpus;
use crate::verify::CheckResult;

pub fn solvability_property_checks() -> CheckResult {
    crate::verify::run_check("solvability", |b| {
        let corpus = property_corpus()?;
        let mut hall_instances = 0usize;
        let mut doerk_instances = 0usize;
        let mut huppert_agreements = 0usize;
        let mut mode_agreements = 0usize;
        for (name, g) in &corpus {
            let ctx = GroupContext::new(g, 100_000)?;
            let maximal = maximal_classes_full(&ctx)?;
            let solvable = is_solvable(g)?;
            let ss = is_supersolvable(g)?;

            // implication chain: nilpotent => supersolvable => solvable
            if ss {
                b.check(
                    solvable,
                    format!("{}: supersolvable but not solvable", name),
                );
            }
            if crate::structure::sylow::is_nilpotent(g, 0)? {
                b.check(ss, format!("{}: nilpotent but not supersolvable", name));
            }

            // Hall: all maximal indices prime or squared prime => solvable
            let hall_premise = maximal
                .iter()
                .all(|c| index_class(c.index_in(g)) != IndexClass::Other);
            if hall_premise && g.order() > 1 {
                hall_instances += 1;
                b.check(
                    solvable,
                    format!("{}: satisfies the index premise but is not solvable", name),
                );
            }

            // Doerk: minimal non-supersolvable => solvable
            let all_maximals_ss = maximal
                .iter()
                .map(|c| is_supersolvable(&c.rep))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|x| x);
            if !ss && all_maximals_ss {
                doerk_instances += 1;
                b.check(
                    solvable,
                    format!("{}: minimal non-supersolvable but not solvable", name),
                );
            }

            // Huppert: supersolvable <=> every maximal subgroup has prime index
            let huppert = maximal
                .iter()
                .all(|c| index_class(c.index_in(g)) == IndexClass::Prime);
            b.check(
                huppert == ss,
                format!(
                    "{}: Huppert criterion ({}) disagrees with the chief-series test ({})",
                    name, huppert, ss
                ),
            );
            if huppert == ss {
                huppert_agreements += 1;
            }

            // two-generated mode finds exactly the full-lattice classes
            let twogen = maximal_classes_twogen(&ctx)?;
            let mut a: Vec<&Vec<u32>> = maximal.iter().map(|c| &c.canonical).collect();
            let mut t: Vec<&Vec<u32>> = twogen.iter().map(|c| &c.canonical).collect();
            a.sort();
            t.sort();
            b.check(
                a == t,
                format!(
                    "{}: two-generated mode found {} maximal classes, full lattice {}",
                    name,
                    twogen.len(),
                    maximal.len()
                ),
            );
            if a == t {
                mode_agreements += 1;
            }
        }
        b.note(format!(
            "corpus groups: {}; Hall premise instances: {}; Doerk premise instances: {}",
            corpus.len(),
            hall_instances,
            doerk_instances
        ));
        b.note(format!(
            "Huppert/chief-series agreement on {} of {} groups; enumeration modes agree on {} of {}",
            huppert_agreements,
            corpus.len(),
            mode_agreements,
            corpus.len()
        ));
        b.check(
            hall_instances >= 1,
            "corpus must instantiate the Hall premise".to_string(),
        );
        b.check(
            doerk_instances >= 1,
            "corpus must instantiate the Doerk premise".to_string(),
        );
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::structure::lattice::maximal_classes_full;

    #[test]
    fn sym4_instantiates_hall() {
        let g = atlas::sym(4).unwrap();
        let ctx = GroupContext::new(&g, 100_000).unwrap();
        let maximal = maximal_classes_full(&ctx).unwrap();
        let mut indices: Vec<u128> = maximal.iter().map(|c| c.index_in(&g)).collect();
        indices.sort_unstable();
        assert_eq!(indices, vec![2, 3, 4]);
        assert!(maximal
            .iter()
            .all(|c| index_class(c.index_in(&g)) != IndexClass::Other));
    }

    #[test]
    fn alt4_instantiates_doerk() {
        let g = atlas::alt(4).unwrap();
        let ctx = GroupContext::new(&g, 100_000).unwrap();
        let maximal = maximal_classes_full(&ctx).unwrap();
        assert!(!is_supersolvable(&g).unwrap());
        for c in &maximal {
            assert!(is_supersolvable(&c.rep).unwrap());
        }
    }

    #[test]
    fn alt5_premises_vacuous() {
        let g = atlas::alt(5).unwrap();
        let ctx = GroupContext::new(&g, 100_000).unwrap();
        let maximal = maximal_classes_full(&ctx).unwrap();
        // index 6 breaks the Hall premise, a non-ss maximal breaks Doerk's
        assert!(maximal
            .iter()
            .any(|c| index_class(c.index_in(&g)) == IndexClass::Other));
        assert!(maximal.iter().any(|c| !is_supersolvable(&c.rep).unwrap()));
    }
}
