//! The wreath-product supersolvability criterion, evaluated with both
//! congruence signs and adjudicated against the direct chief-series oracle
//! over a generated corpus. The criterion circulates with the congruence
//! written as -1;
//! the corpus contains pairs (C3 wr C4 among them) separating the signs,
//! and the harness selects whichever sign matches the oracle everywhere.

use crate::atlas;
use crate::coset::quotient_group;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::structure::series::{derived_subgroup, is_supersolvable, prime_divisors};
use crate::structure::sylow::{is_nilpotent, sylow_subgroup};
use crate::verify::CheckResult;

fn is_p_group(g: &PermGroup, p: u64) -> bool {
    let mut n = g.order();
    while n.is_multiple_of(p as u128) {
        n /= p as u128;
    }
    n == 1
}

fn is_abelian(g: &PermGroup) -> bool {
    let gens = g.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens.iter().skip(i + 1).all(|b| a.commutes_with(b)))
}

fn exponent(g: &PermGroup) -> Result<u128> {
    let mut e = 1u128;
    for x in g.elements(1_000_000)? {
        let o = x.order()?;
        e = e / crate::perm::gcd_u128(e, o) * o;
    }
    Ok(e)
}

/// The supersolvability criterion for A wr B with the congruence read as
/// q = sign (mod m), sign in {+1, -1}.
pub fn durbin_criterion(a: &PermGroup, bgrp: &PermGroup, sign: i32, seed: u64) -> Result<bool> {
    // (i) A nilpotent
    if !is_nilpotent(a, seed)? {
        return Ok(false);
    }
    // (ii) B abelian, or B' a nontrivial p-group with A a p-group for the
    // same prime
    let b_abelian = is_abelian(bgrp);
    if !b_abelian {
        let bd = derived_subgroup(bgrp)?;
        let primes = prime_divisors(bd.order());
        if primes.len() != 1 {
            return Ok(false);
        }
        let p = primes[0];
        if !is_p_group(a, p) {
            return Ok(false);
        }
    }
    // (iii) for each prime q dividing |A|: q = sign (mod m), with m the
    // exponent of B/Q, Q the Sylow q-subgroup of B (normal under (ii))
    for q in prime_divisors(a.order()) {
        let m = if bgrp.order().is_multiple_of(q as u128) {
            let syl = sylow_subgroup(bgrp, q, seed)?;
            if !syl.is_normal()? {
                return Err(Error::internal(
                    "criterion precondition broken: Sylow subgroup of B not normal".to_string(),
                ));
            }
            if syl.order() == bgrp.order() {
                1
            } else {
                let quot = quotient_group(bgrp, &syl, 100_000)?.quotient;
                exponent(&quot)?
            }
        } else {
            exponent(bgrp)?
        };
        let target = if sign >= 0 { 1 % m } else { (m - 1) % m };
        if (q as u128) % m != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Corpus factors: nontrivial small groups as the criterion presumes a
/// genuine wreath product.
fn corpus_factors() -> Result<Vec<(String, PermGroup)>> {
    let mut v: Vec<(String, PermGroup)> = Vec::new();
    for k in 2..=8u64 {
        v.push((format!("C{}", k), atlas::cyclic(k)?));
    }
    v.push(("Sym(3)".to_string(), atlas::sym(3)?));
    for n in [4u64, 5, 6] {
        v.push((format!("D{}", 2 * n), atlas::dihedral(n)?));
    }
    v.push(("Alt(4)".to_string(), atlas::alt(4)?));
    Ok(v)
}

pub fn durbin_crosscheck(max_order: u128, seed: u64) -> CheckResult {
    crate::verify::run_check("durbin", |b| {
        let factors = corpus_factors()?;
        let mut pairs = 0usize;
        let mut disagree_plus: Vec<String> = Vec::new();
        let mut disagree_minus: Vec<String> = Vec::new();
        for (an, a) in &factors {
            for (bn, bg) in &factors {
                let degb = bg.degree();
                let mut worder: u128 = bg.order();
                let mut too_big = false;
                for _ in 0..degb {
                    worder = match worder.checked_mul(a.order()) {
                        Some(w) => w,
                        None => {
                            too_big = true;
                            break;
                        }
                    };
                    if worder > max_order {
                        too_big = true;
                        break;
                    }
                }
                if too_big || worder > max_order || (a.degree() as u64) * (bg.degree() as u64) > 64
                {
                    continue;
                }
                pairs += 1;
                let name = format!("{} wr {}", an, bn);
                let w = atlas::wreath_product(a, bg)?;
                let direct = is_supersolvable(&w)?;
                let plus = durbin_criterion(a, bg, 1, seed)?;
                let minus = durbin_criterion(a, bg, -1, seed)?;
                if plus != direct {
                    disagree_plus.push(format!("{} (criterion {}, oracle {})", name, plus, direct));
                }
                if minus != direct {
                    disagree_minus
                        .push(format!("{} (criterion {}, oracle {})", name, minus, direct));
                }
            }
        }
        b.note(format!("corpus pairs evaluated: {}", pairs));
        b.check(pairs >= 10, "corpus too small to adjudicate".to_string());
        let plus_clean = disagree_plus.is_empty();
        let minus_clean = disagree_minus.is_empty();
        b.check(
            plus_clean != minus_clean,
            format!(
                "adjudication needs exactly one clean sign: +1 has {} disagreements, -1 has {}",
                disagree_plus.len(),
                disagree_minus.len()
            ),
        );
        if plus_clean && !minus_clean {
            b.note(
                "adjudicated sign: +1 (q = 1 mod m); agrees with the oracle on every pair"
                    .to_string(),
            );
            b.note(format!(
                "counterexamples to the literal -1 reading: {}",
                disagree_minus.join("; ")
            ));
            b.check(
                disagree_minus.iter().any(|s| s.starts_with("C3 wr C4")),
                "expected C3 wr C4 among the -1 counterexamples".to_string(),
            );
        } else if minus_clean && !plus_clean {
            b.note("adjudicated sign: -1 (q = -1 mod m)".to_string());
            b.note(format!(
                "counterexamples to the +1 reading: {}",
                disagree_plus.join("; ")
            ));
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_wr_c2_supersolvable_both_signs() {
        // D8: a 2-group, trivially supersolvable; m = 1 makes both signs agree
        let a = atlas::cyclic(2).unwrap();
        let b = atlas::cyclic(2).unwrap();
        assert!(durbin_criterion(&a, &b, 1, 0).unwrap());
        assert!(durbin_criterion(&a, &b, -1, 0).unwrap());
        let w = atlas::wreath_product(&a, &b).unwrap();
        assert!(is_supersolvable(&w).unwrap());
    }

    #[test]
    fn c3_wr_c2_supersolvable() {
        let a = atlas::cyclic(3).unwrap();
        let b = atlas::cyclic(2).unwrap();
        assert!(durbin_criterion(&a, &b, 1, 0).unwrap());
        let w = atlas::wreath_product(&a, &b).unwrap();
        assert!(is_supersolvable(&w).unwrap());
    }

    #[test]
    fn c3_wr_c4_separates_the_signs() {
        let a = atlas::cyclic(3).unwrap();
        let b = atlas::cyclic(4).unwrap();
        // direct oracle: the order-324 wreath has a chief factor of order 9
        let w = atlas::wreath_product(&a, &b).unwrap();
        assert_eq!(w.order(), 324);
        assert!(!is_supersolvable(&w).unwrap());
        // sign -1 wrongly predicts supersolvable (3 = -1 mod 4)
        assert!(durbin_criterion(&a, &b, -1, 0).unwrap());
        // sign +1 correctly predicts non-supersolvable
        assert!(!durbin_criterion(&a, &b, 1, 0).unwrap());
    }

    #[test]
    fn crosscheck_adjudicates_plus_one() {
        let r = durbin_crosscheck(5000, 0);
        assert!(r.passed(), "{:?}", r.notes);
        assert!(r.notes.iter().any(|n| n.contains("adjudicated sign: +1")));
        assert!(r.notes.iter().any(|n| n.contains("C3 wr C4")));
    }
}
