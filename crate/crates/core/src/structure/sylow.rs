//! Sylow subgroups, p-cores, p-residuals and the solvable radical.

use crate::classes::CLASS_ENUMERATION_BOUND;
use crate::coset::quotient_group;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::rng::SplitMix64;
use crate::structure::series::prime_divisors;
use crate::subgrp::{intersection, normal_closure, normalizer, SubgroupRef};

/// Index bound for the quotient steps of the radical climb.
const RADICAL_INDEX_BOUND: u128 = 20_000;

fn p_part(mut n: u128, p: u64) -> u128 {
    let mut part = 1u128;
    while n.is_multiple_of(p as u128) {
        n /= p as u128;
        part *= p as u128;
    }
    part
}

fn is_p_power(mut n: u128, p: u64) -> bool {
    while n.is_multiple_of(p as u128) {
        n /= p as u128;
    }
    n == 1
}

/// A Sylow p-subgroup: seed with a p-element found by powering random
/// elements, then grow inside successive normalizers until the full p-part
/// is reached. Deterministic given the seed.
pub fn sylow_subgroup(g: &PermGroup, p: u64, seed: u64) -> Result<SubgroupRef> {
    if !g.order().is_multiple_of(p as u128) {
        return Err(Error::rejected(format!(
            "{} does not divide the group order {}",
            p,
            g.order()
        )));
    }
    let target = p_part(g.order(), p);
    let mut rng = SplitMix64::new(seed ^ 0x5f3c_9a1d);
    let mut current = loop {
        let x = g.random_element(&mut rng);
        let ord = x.order()?;
        if ord % p as u128 != 0 {
            continue;
        }
        let cofactor = ord / p_part(ord, p);
        let y = perm_pow(&x, cofactor);
        debug_assert!(is_p_power(y.order()?, p));
        break PermGroup::from_generators(g.degree(), vec![y])?;
    };
    while current.order() < target {
        let norm = normalizer(g, &current)?;
        let mut extended = false;
        for e in norm.group().elements(CLASS_ENUMERATION_BOUND)? {
            if e.is_identity() || current.is_member(&e)? {
                continue;
            }
            if !is_p_power(e.order()?, p) {
                continue;
            }
            let mut gens = current.generators().to_vec();
            gens.push(e);
            let bigger = PermGroup::from_generators(g.degree(), gens)?;
            debug_assert!(is_p_power(bigger.order(), p));
            current = bigger;
            extended = true;
            break;
        }
        if !extended {
            return Err(Error::internal(format!(
                "sylow growth stalled at order {} (target {})",
                current.order(),
                target
            )));
        }
    }
    SubgroupRef::new(g.clone(), current)
}

fn perm_pow(x: &Perm, mut e: u128) -> Perm {
    let mut base = x.clone();
    let mut acc = Perm::identity(x.degree());
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.compose(&base);
        }
        base = base.compose(&base);
        e >>= 1;
    }
    acc
}

/// Largest normal p-subgroup: the core of a Sylow p-subgroup, computed by
/// intersecting generator conjugates to a fixpoint.
pub fn p_core(g: &PermGroup, p: u64, seed: u64) -> Result<SubgroupRef> {
    if !g.order().is_multiple_of(p as u128) {
        return SubgroupRef::new(g.clone(), PermGroup::trivial(g.degree()));
    }
    let syl = sylow_subgroup(g, p, seed)?;
    let mut core = syl;
    loop {
        let mut changed = false;
        for x in g.generators() {
            let conj = core.conjugate(x)?;
            if !core.same_subgroup(conj.group()) {
                core = intersection(g, core.group(), conj.group())?;
                changed = true;
            }
        }
        if !changed {
            debug_assert!(core.is_normal().unwrap_or(false));
            return Ok(core);
        }
    }
}

/// O^p(G): normal closure of the subgroup generated by one Sylow q-subgroup
/// for each prime q != p. The quotient is a p-group.
pub fn o_p_residual(g: &PermGroup, p: u64, seed: u64) -> Result<SubgroupRef> {
    let mut gens: Vec<Perm> = Vec::new();
    for q in prime_divisors(g.order()) {
        if q == p {
            continue;
        }
        let syl = sylow_subgroup(g, q, seed)?;
        gens.extend(syl.group().generators().iter().cloned());
    }
    let res = normal_closure(g, &gens)?;
    if !is_p_power(g.order() / res.order(), p) {
        return Err(Error::internal(
            "p-residual quotient is not a p-group".to_string(),
        ));
    }
    Ok(res)
}

/// Nilpotent iff every Sylow subgroup is normal.
pub fn is_nilpotent(g: &PermGroup, seed: u64) -> Result<bool> {
    for p in prime_divisors(g.order()) {
        if !sylow_subgroup(g, p, seed)?.is_normal()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solvable radical via the iterated Fitting climb: join the p-cores, pass
/// to the quotient, repeat until the Fitting subgroup up there is trivial.
pub fn solvable_radical(g: &PermGroup, seed: u64) -> Result<SubgroupRef> {
    let mut radical = PermGroup::trivial(g.degree());
    loop {
        // Fitting generators above the current radical, computed in the
        // quotient (or directly while the radical is trivial).
        let mut new_gens: Vec<Perm> = Vec::new();
        if radical.is_trivial() {
            for p in prime_divisors(g.order()) {
                let core = p_core(g, p, seed)?;
                if !core.group().is_trivial() {
                    new_gens.extend(core.group().generators().iter().cloned());
                }
            }
        } else {
            let sref = SubgroupRef::new(g.clone(), radical.clone())?;
            let q = quotient_group(g, &sref, RADICAL_INDEX_BOUND)?;
            for p in prime_divisors(q.quotient.order()) {
                let core = p_core(&q.quotient, p, seed)?;
                if !core.group().is_trivial() {
                    let pre = q.preimage(core.group())?;
                    new_gens.extend(pre.group().generators().iter().cloned());
                }
            }
        }
        if new_gens.is_empty() {
            let r = SubgroupRef::new(g.clone(), radical)?;
            debug_assert!(r.is_normal().unwrap_or(false));
            return Ok(r);
        }
        let mut gens = radical.generators().to_vec();
        gens.extend(new_gens);
        let next = PermGroup::from_generators(g.degree(), gens)?;
        if next.order() == radical.order() {
            let r = SubgroupRef::new(g.clone(), radical)?;
            return Ok(r);
        }
        radical = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::structure::series::{is_solvable, is_supersolvable};

    #[test]
    fn sylow_orders_match_p_parts() {
        let cases: Vec<(PermGroup, u64, u128)> = vec![
            (atlas::psl2(8).unwrap(), 2, 8),
            (atlas::psl2(11).unwrap(), 11, 11),
            (atlas::sym(5).unwrap(), 2, 8),
            (atlas::sym(4).unwrap(), 3, 3),
        ];
        for (g, p, want) in cases {
            let s = sylow_subgroup(&g, p, 0).unwrap();
            assert_eq!(s.order(), want);
        }
    }

    #[test]
    fn sylow_order_independent_of_seed() {
        let g = atlas::psl2(13).unwrap();
        for seed in [0u64, 1, 42] {
            assert_eq!(sylow_subgroup(&g, 2, seed).unwrap().order(), 4);
            assert_eq!(sylow_subgroup(&g, 7, seed).unwrap().order(), 7);
        }
    }

    #[test]
    fn sylow_of_wreath() {
        // |Sym(5) wr C2| = 28800 = 2^7 * 3^2 * 5^2
        let w = atlas::wreath_product(&atlas::sym(5).unwrap(), &atlas::cyclic(2).unwrap()).unwrap();
        let s = sylow_subgroup(&w, 2, 0).unwrap();
        assert_eq!(s.order(), 128);
    }

    #[test]
    fn nondivisor_rejected() {
        assert!(sylow_subgroup(&atlas::sym(4).unwrap(), 5, 0).is_err());
    }

    #[test]
    fn p_core_of_sym4_is_v4() {
        let g = atlas::sym(4).unwrap();
        let c2 = p_core(&g, 2, 0).unwrap();
        assert_eq!(c2.order(), 4);
        assert!(c2.is_normal().unwrap());
        let c3 = p_core(&g, 3, 0).unwrap();
        assert_eq!(c3.order(), 1);
    }

    #[test]
    fn o2_of_sym5_is_alt5() {
        let g = atlas::sym(5).unwrap();
        let r = o_p_residual(&g, 2, 0).unwrap();
        assert_eq!(r.order(), 60);
        // idempotent
        let again = o_p_residual(r.group(), 2, 0).unwrap();
        assert_eq!(again.order(), 60);
    }

    #[test]
    fn o2_and_o3_of_pgammal2_8() {
        let g = atlas::pgammal2(8).unwrap();
        // the outer part has order 3, so no proper normal subgroup of
        // 2-power index exists
        let o2 = o_p_residual(&g, 2, 0).unwrap();
        assert_eq!(o2.order(), 1512);
        let o3 = o_p_residual(&g, 3, 0).unwrap();
        assert_eq!(o3.order(), 504);
    }

    #[test]
    fn radicals() {
        let s4 = atlas::sym(4).unwrap();
        assert_eq!(solvable_radical(&s4, 0).unwrap().order(), 24);
        let s5 = atlas::sym(5).unwrap();
        assert_eq!(solvable_radical(&s5, 0).unwrap().order(), 1);
        let prod = atlas::direct_product(&atlas::sym(4).unwrap(), &atlas::alt(5).unwrap()).unwrap();
        let rad = solvable_radical(&prod, 0).unwrap();
        assert_eq!(rad.order(), 24);
        assert!(is_solvable(rad.group()).unwrap());
        assert!(rad.is_normal().unwrap());
    }

    #[test]
    fn radical_of_s3_x_a5_is_supersolvable_s3() {
        let prod = atlas::direct_product(&atlas::sym(3).unwrap(), &atlas::alt(5).unwrap()).unwrap();
        let rad = solvable_radical(&prod, 0).unwrap();
        assert_eq!(rad.order(), 6);
        assert!(is_supersolvable(rad.group()).unwrap());
    }
}
