//! Derived series, chief series, solvability and supersolvability.

use crate::classes::{conjugacy_classes, ConjugacyClasses, CLASS_ENUMERATION_BOUND};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::subgrp::{normal_closure, SubgroupRef};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiefFactorKind {
    PrimeCyclic,
    ElementaryAbelian { p: u64, k: u32 },
    NonAbelian,
}

#[derive(Clone, Debug)]
pub struct ChiefFactor {
    pub order: u128,
    pub kind: ChiefFactorKind,
}

/// Ascending chief series 1 = N_0 < N_1 < ... < N_k = G, each term normal
/// in G with no G-normal subgroup strictly between consecutive terms.
pub struct ChiefSeries {
    pub terms: Vec<PermGroup>,
    pub factors: Vec<ChiefFactor>,
}

pub fn derived_subgroup(g: &PermGroup) -> Result<SubgroupRef> {
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in gens.iter().skip(i + 1) {
            let c = a.commutator(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

/// Strictly descending derived series, ending at a perfect subgroup.
pub fn derived_series(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let d = derived_subgroup(last)?;
        if d.order() == last.order() {
            return Ok(series);
        }
        let next = d.group().clone();
        series.push(next);
    }
}

pub fn is_solvable(g: &PermGroup) -> Result<bool> {
    Ok(derived_series(g)?.last().unwrap().is_trivial())
}

pub fn is_perfect(g: &PermGroup) -> Result<bool> {
    Ok(derived_subgroup(g)?.order() == g.order())
}

/// Derived length for solvable groups, None otherwise.
pub fn derived_length(g: &PermGroup) -> Result<Option<u32>> {
    let series = derived_series(g)?;
    if series.last().unwrap().is_trivial() {
        Ok(Some(series.len() as u32 - 1))
    } else {
        Ok(None)
    }
}

fn factorize(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d as u64, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

pub fn prime_divisors(n: u128) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime_u128(n: u128) -> bool {
    let f = factorize(n);
    f.len() == 1 && f[0].1 == 1
}

/// index classification used throughout the harness
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexClass {
    Prime,
    PrimeSquared,
    Other,
}

pub fn index_class(index: u128) -> IndexClass {
    let f = factorize(index);
    if f.len() == 1 {
        if f[0].1 == 1 {
            return IndexClass::Prime;
        }
        if f[0].1 == 2 {
            return IndexClass::PrimeSquared;
        }
    }
    IndexClass::Other
}

/// The smallest subgroup of the form <current, x^G> with x outside
/// `current`; its quotient by `current` is a chief factor of `g`.
fn minimal_normal_over(
    g: &PermGroup,
    class_reps: &[Perm],
    closures: &[PermGroup],
    current: &PermGroup,
) -> Result<PermGroup> {
    let mut best: Option<PermGroup> = None;
    for (i, rep) in class_reps.iter().enumerate() {
        if current.is_member(rep)? {
            continue;
        }
        let mut gens = current.generators().to_vec();
        gens.extend(closures[i].generators().iter().cloned());
        let cand = PermGroup::from_generators(g.degree(), gens)?;
        let better = match &best {
            None => true,
            Some(b) => cand.order() < b.order(),
        };
        if better {
            best = Some(cand);
        }
    }
    best.ok_or_else(|| Error::internal("no element outside current term".to_string()))
}

pub struct ChiefContext {
    pub classes: ConjugacyClasses,
    class_reps: Vec<Perm>,
    closures: Vec<PermGroup>,
}

pub fn chief_context(g: &PermGroup, bound: u128) -> Result<ChiefContext> {
    let classes = conjugacy_classes(g, bound)?;
    let class_reps = classes.nonidentity_reps();
    let closures = class_reps
        .iter()
        .map(|r| normal_closure(g, std::slice::from_ref(r)).map(|s| s.group().clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(ChiefContext {
        classes,
        class_reps,
        closures,
    })
}

pub fn chief_series_with(g: &PermGroup, ctx: &ChiefContext) -> Result<ChiefSeries> {
    let mut terms = vec![PermGroup::trivial(g.degree())];
    let mut factors = Vec::new();
    while terms.last().unwrap().order() < g.order() {
        let current = terms.last().unwrap();
        let next = minimal_normal_over(g, &ctx.class_reps, &ctx.closures, current)?;
        let order = next.order() / current.order();
        let f = factorize(order);
        let kind = if f.len() == 1 {
            let (p, k) = f[0];
            if k == 1 {
                ChiefFactorKind::PrimeCyclic
            } else {
                ChiefFactorKind::ElementaryAbelian { p, k }
            }
        } else {
            ChiefFactorKind::NonAbelian
        };
        factors.push(ChiefFactor { order, kind });
        terms.push(next);
    }
    Ok(ChiefSeries { terms, factors })
}

pub fn chief_series(g: &PermGroup) -> Result<ChiefSeries> {
    let ctx = chief_context(g, CLASS_ENUMERATION_BOUND)?;
    chief_series_with(g, &ctx)
}

/// Minimal normal subgroups: normal closures of class representatives that
/// contain no smaller closure.
pub fn minimal_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let ctx = chief_context(g, CLASS_ENUMERATION_BOUND)?;
    let mut out: Vec<PermGroup> = Vec::new();
    'cand: for cand in ctx.closures.iter() {
        // minimal iff every class rep inside it has the same closure
        for (j, rep) in ctx.class_reps.iter().enumerate() {
            if cand.is_member(rep)? && ctx.closures[j].order() < cand.order() {
                continue 'cand;
            }
        }
        if !out
            .iter()
            .any(|m| m.order() == cand.order() && same_subgroup(m, cand))
        {
            out.push(cand.clone());
        }
    }
    Ok(out)
}

fn same_subgroup(a: &PermGroup, b: &PermGroup) -> bool {
    a.order() == b.order()
        && b.generators()
            .iter()
            .all(|g| a.is_member(g).unwrap_or(false))
}

/// Supersolvable iff every chief factor has prime order.
pub fn is_supersolvable(g: &PermGroup) -> Result<bool> {
    if g.order() == 1 {
        return Ok(true);
    }
    if is_prime_u128(g.order()) {
        return Ok(true);
    }
    let series = chief_series(g)?;
    Ok(series
        .factors
        .iter()
        .all(|f| f.kind == ChiefFactorKind::PrimeCyclic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;

    #[test]
    fn sym4_solvable_with_derived_length_3() {
        let g = atlas::sym(4).unwrap();
        let series = derived_series(&g).unwrap();
        // S4 > A4 > V4 > 1
        let orders: Vec<u128> = series.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(is_solvable(&g).unwrap());
        assert_eq!(derived_length(&g).unwrap(), Some(3));
    }

    #[test]
    fn alt5_is_perfect() {
        let g = atlas::alt(5).unwrap();
        assert!(is_perfect(&g).unwrap());
        assert!(!is_solvable(&g).unwrap());
        assert_eq!(derived_length(&g).unwrap(), None);
    }

    #[test]
    fn pgl27_neither_solvable_nor_perfect() {
        let g = atlas::pgl2(7).unwrap();
        assert!(!is_solvable(&g).unwrap());
        assert!(!is_perfect(&g).unwrap());
        // derived subgroup is psl2(7)
        assert_eq!(derived_subgroup(&g).unwrap().order(), 168);
    }

    #[test]
    fn chief_series_of_alt4() {
        let s = chief_series(&atlas::alt(4).unwrap()).unwrap();
        let shape: Vec<(u128, bool)> = s
            .factors
            .iter()
            .map(|f| (f.order, f.kind == ChiefFactorKind::PrimeCyclic))
            .collect();
        assert_eq!(shape, vec![(4, false), (3, true)]);
    }

    #[test]
    fn chief_series_of_sym5() {
        let s = chief_series(&atlas::sym(5).unwrap()).unwrap();
        let orders: Vec<u128> = s.factors.iter().map(|f| f.order).collect();
        assert_eq!(orders, vec![60, 2]);
        assert_eq!(s.factors[0].kind, ChiefFactorKind::NonAbelian);
    }

    #[test]
    fn chief_factor_orders_multiply_to_group_order() {
        for g in [
            atlas::sym(4).unwrap(),
            atlas::sym(5).unwrap(),
            atlas::dihedral(6).unwrap(),
            atlas::quaternion8(),
            atlas::agl1(8).unwrap(),
        ] {
            let s = chief_series(&g).unwrap();
            let prod: u128 = s.factors.iter().map(|f| f.order).product();
            assert_eq!(prod, g.order());
            for t in &s.terms {
                let r = SubgroupRef::new(g.clone(), t.clone()).unwrap();
                assert!(r.is_normal().unwrap());
            }
        }
    }

    #[test]
    fn minimal_normals_of_a5xa5() {
        let a5 = atlas::alt(5).unwrap();
        let g = atlas::direct_product(&a5, &a5).unwrap();
        let minimals = minimal_normal_subgroups(&g).unwrap();
        assert_eq!(minimals.len(), 2);
        assert!(minimals.iter().all(|m| m.order() == 60));
    }

    #[test]
    fn supersolvability_basics() {
        assert!(is_supersolvable(&atlas::sym(3).unwrap()).unwrap());
        assert!(!is_supersolvable(&atlas::alt(4).unwrap()).unwrap());
        // Frobenius of order 42 has chief factors 7, 2, 3
        assert!(is_supersolvable(&atlas::agl1(7).unwrap()).unwrap());
        assert!(is_supersolvable(&atlas::dihedral(12).unwrap()).unwrap());
        assert!(!is_supersolvable(&atlas::sym(4).unwrap()).unwrap());
        assert!(!is_supersolvable(&atlas::alt(5).unwrap()).unwrap());
    }

    #[test]
    fn index_classification() {
        assert_eq!(index_class(7), IndexClass::Prime);
        assert_eq!(index_class(9), IndexClass::PrimeSquared);
        assert_eq!(index_class(64), IndexClass::Other);
        assert_eq!(index_class(55), IndexClass::Other);
        assert_eq!(index_class(100), IndexClass::Other);
    }
}
