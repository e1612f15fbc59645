//! Subgroups tied to an ambient group: closures, joins, intersections,
//! centralizers and normalizers.
//!
//! Centralizer, normalizer and intersection run by element scans with
//! early-exit sifting and are guarded by `ELEMENT_SCAN_BOUND`; the desk-scale
//! groups this crate targets stay far below it.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// Largest ambient order for which element-scan algorithms are attempted.
pub const ELEMENT_SCAN_BOUND: u128 = 1_000_000;

/// A subgroup together with its ambient group. Construction verifies the
/// containment, so Lagrange holds for every value of this type.
#[derive(Clone, Debug)]
pub struct SubgroupRef {
    ambient: PermGroup,
    sub: PermGroup,
}

impl SubgroupRef {
    pub fn new(ambient: PermGroup, sub: PermGroup) -> Result<SubgroupRef> {
        if ambient.degree() != sub.degree() {
            return Err(Error::rejected(format!(
                "subgroup degree {} does not match ambient degree {}",
                sub.degree(),
                ambient.degree()
            )));
        }
        for g in sub.generators() {
            if !ambient.is_member(g)? {
                return Err(Error::rejected(
                    "subgroup generator lies outside the ambient group".to_string(),
                ));
            }
        }
        Ok(SubgroupRef { ambient, sub })
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn group(&self) -> &PermGroup {
        &self.sub
    }

    pub fn order(&self) -> u128 {
        self.sub.order()
    }

    pub fn index(&self) -> u128 {
        debug_assert_eq!(self.ambient.order() % self.sub.order(), 0);
        self.ambient.order() / self.sub.order()
    }

    pub fn is_proper(&self) -> bool {
        self.sub.order() < self.ambient.order()
    }

    /// Subgroup equality inside one ambient: same order plus mutual
    /// generator membership.
    pub fn same_subgroup(&self, other: &PermGroup) -> bool {
        self.sub.order() == other.order()
            && other
                .generators()
                .iter()
                .all(|g| self.sub.is_member(g).unwrap_or(false))
    }

    pub fn is_normal(&self) -> Result<bool> {
        for g in self.ambient.generators() {
            for h in self.sub.generators() {
                if !self.sub.is_member(&h.conjugate_by(g))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn conjugate(&self, g: &Perm) -> Result<SubgroupRef> {
        let gens = self
            .sub
            .generators()
            .iter()
            .map(|h| h.conjugate_by(g))
            .collect();
        SubgroupRef::new(
            self.ambient.clone(),
            PermGroup::from_generators(self.sub.degree(), gens)?,
        )
    }
}

/// Smallest normal subgroup of `g` containing `seed`.
pub fn normal_closure(g: &PermGroup, seed: &[Perm]) -> Result<SubgroupRef> {
    for s in seed {
        if !g.is_member(s)? {
            return Err(Error::rejected(
                "normal closure seed lies outside the group".to_string(),
            ));
        }
    }
    let mut gens: Vec<Perm> = seed.iter().filter(|s| !s.is_identity()).cloned().collect();
    let mut closure = PermGroup::from_generators(g.degree(), gens.clone())?;
    loop {
        let mut grew = false;
        let mut new_gens = Vec::new();
        for h in &gens {
            for x in g.generators() {
                let c = h.conjugate_by(x);
                if !closure.is_member(&c)? {
                    new_gens.push(c);
                }
            }
        }
        for c in new_gens {
            if !closure.is_member(&c)? {
                gens.push(c.clone());
                closure = PermGroup::from_generators(g.degree(), gens.clone())?;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    SubgroupRef::new(g.clone(), closure)
}

/// Subgroup generated by two subgroups of a common ambient group.
pub fn subgroup_join(ambient: &PermGroup, h: &PermGroup, k: &PermGroup) -> Result<SubgroupRef> {
    let mut gens: Vec<Perm> = h.generators().to_vec();
    gens.extend(k.generators().iter().cloned());
    let join = PermGroup::from_generators(ambient.degree(), gens)?;
    SubgroupRef::new(ambient.clone(), join)
}

/// Exact intersection by scanning the smaller group's elements.
pub fn intersection(ambient: &PermGroup, h: &PermGroup, k: &PermGroup) -> Result<SubgroupRef> {
    let (small, big) = if h.order() <= k.order() {
        (h, k)
    } else {
        (k, h)
    };
    if small.order() > ELEMENT_SCAN_BOUND {
        return Err(Error::resource(format!(
            "intersection scan over order-{} group exceeds bound {}",
            small.order(),
            ELEMENT_SCAN_BOUND
        )));
    }
    let mut meet = PermGroup::trivial(ambient.degree());
    for e in small.elements(ELEMENT_SCAN_BOUND)? {
        if big.is_member(&e)? && !meet.is_member(&e)? {
            let mut gens = meet.generators().to_vec();
            gens.push(e);
            meet = PermGroup::from_generators(ambient.degree(), gens)?;
        }
    }
    SubgroupRef::new(ambient.clone(), meet)
}

/// Elements of `g` commuting with every generator of `h`.
pub fn centralizer(g: &PermGroup, h: &PermGroup) -> Result<SubgroupRef> {
    if g.order() > ELEMENT_SCAN_BOUND {
        return Err(Error::resource(format!(
            "centralizer scan over order-{} group exceeds bound {}",
            g.order(),
            ELEMENT_SCAN_BOUND
        )));
    }
    let mut cent = PermGroup::trivial(g.degree());
    for e in g.elements(ELEMENT_SCAN_BOUND)? {
        if h.generators().iter().all(|x| e.commutes_with(x)) && !cent.is_member(&e)? {
            let mut gens = cent.generators().to_vec();
            gens.push(e);
            cent = PermGroup::from_generators(g.degree(), gens)?;
        }
    }
    SubgroupRef::new(g.clone(), cent)
}

/// Elements of `g` normalizing `h`, by scan with early-exit sifting.
pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<SubgroupRef> {
    if g.order() > ELEMENT_SCAN_BOUND {
        return Err(Error::resource(format!(
            "normalizer scan over order-{} group exceeds bound {}",
            g.order(),
            ELEMENT_SCAN_BOUND
        )));
    }
    let mut norm = PermGroup::trivial(g.degree());
    'outer: for e in g.elements(ELEMENT_SCAN_BOUND)? {
        if norm.is_member(&e)? {
            continue;
        }
        for x in h.generators() {
            if !h.is_member(&x.conjugate_by(&e))? {
                continue 'outer;
            }
        }
        let mut gens = norm.generators().to_vec();
        gens.push(e);
        norm = PermGroup::from_generators(g.degree(), gens)?;
    }
    SubgroupRef::new(g.clone(), norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm_from_cycles;

    fn sym5() -> PermGroup {
        PermGroup::from_generators(
            5,
            vec![
                perm_from_cycles(5, &[&[0, 1]]),
                perm_from_cycles(5, &[&[0, 1, 2, 3, 4]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn normal_closure_of_three_cycle_in_sym5_is_alt5() {
        let g = sym5();
        let n = normal_closure(&g, &[perm_from_cycles(5, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(n.order(), 60);
        assert!(n.is_normal().unwrap());
    }

    #[test]
    fn outside_seed_rejected() {
        let a5 = PermGroup::from_generators(
            5,
            vec![
                perm_from_cycles(5, &[&[0, 1, 2]]),
                perm_from_cycles(5, &[&[0, 1, 2, 3, 4]]),
            ],
        )
        .unwrap();
        assert!(normal_closure(&a5, &[perm_from_cycles(5, &[&[0, 1]])]).is_err());
    }

    #[test]
    fn centralizer_commutes_elementwise() {
        let g = sym5();
        let h =
            PermGroup::from_generators(5, vec![perm_from_cycles(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        let c = centralizer(&g, &h).unwrap();
        // A 5-cycle is self-centralizing in Sym(5).
        assert_eq!(c.order(), 5);
        for e in c.group().elements(100).unwrap() {
            for x in h.generators() {
                assert!(e.commutes_with(x));
            }
        }
    }

    #[test]
    fn normalizer_of_five_cycle_in_sym5_is_frobenius20() {
        let g = sym5();
        let h =
            PermGroup::from_generators(5, vec![perm_from_cycles(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        let n = normalizer(&g, &h).unwrap();
        assert_eq!(n.order(), 20);
        for e in n.group().generators() {
            for x in h.generators() {
                assert!(h.is_member(&x.conjugate_by(e)).unwrap());
            }
        }
    }

    #[test]
    fn intersection_of_stabilizers() {
        let g = sym5();
        let s0 = g.point_stabilizer(0).unwrap();
        let s1 = g.point_stabilizer(1).unwrap();
        let meet = intersection(&g, &s0, &s1).unwrap();
        assert_eq!(meet.order(), 6); // Sym({2,3,4})
    }

    #[test]
    fn join_of_two_point_stabilizers_is_whole_group() {
        let g = sym5();
        let s0 = g.point_stabilizer(0).unwrap();
        let s1 = g.point_stabilizer(1).unwrap();
        let join = subgroup_join(&g, &s0, &s1).unwrap();
        assert_eq!(join.order(), 120);
    }

    #[test]
    fn subgroup_ref_rejects_outsiders() {
        let a5 = PermGroup::from_generators(
            5,
            vec![
                perm_from_cycles(5, &[&[0, 1, 2]]),
                perm_from_cycles(5, &[&[0, 1, 2, 3, 4]]),
            ],
        )
        .unwrap();
        let s2 = PermGroup::from_generators(5, vec![perm_from_cycles(5, &[&[0, 1]])]).unwrap();
        assert!(SubgroupRef::new(a5, s2).is_err());
    }
}
