//! Coset actions via canonical coset representatives.
//!
//! A coset Hg is identified by a canonical element computed with a walk down
//! H's stabilizer chain: at each level pick the transversal element
//! minimizing the image of that level's base point. The result depends only
//! on the coset, so cosets can be hashed and the action on them built by
//! plain BFS.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::subgrp::SubgroupRef;

/// Default cap on the degree of a constructed coset action.
pub const COSET_DEGREE_BOUND: u128 = 200_000;

/// Canonical representative of the coset H*g.
pub fn canonical_coset_rep(h: &PermGroup, g: &Perm) -> Perm {
    let mut cur = g.clone();
    for lvl in h.levels() {
        let mut best_point = lvl.orbit()[0];
        let mut best_image = cur.apply(best_point);
        for &p in lvl.orbit() {
            let im = cur.apply(p);
            if im < best_image {
                best_image = im;
                best_point = p;
            }
        }
        let u = lvl.transversal_element(best_point);
        cur = u.compose(&cur);
    }
    cur
}

/// The action of `ambient` on the right cosets of `point_stabilizer`.
#[derive(Clone)]
pub struct CosetActionMap {
    pub ambient: PermGroup,
    pub point_stabilizer: PermGroup,
    pub action_degree: u32,
    /// One image permutation of degree `action_degree` per ambient generator.
    pub generator_images: Vec<Perm>,
    /// Canonical representative of each coset, indexed by coset point.
    reps: Vec<Perm>,
}

pub fn coset_action(g: &PermGroup, h: &SubgroupRef) -> Result<CosetActionMap> {
    coset_action_bounded(g, h, COSET_DEGREE_BOUND)
}

pub fn coset_action_bounded(
    g: &PermGroup,
    h: &SubgroupRef,
    degree_bound: u128,
) -> Result<CosetActionMap> {
    if h.ambient().degree() != g.degree() || h.ambient().order() != g.order() {
        return Err(Error::rejected(
            "subgroup is not tied to the given ambient group".to_string(),
        ));
    }
    let index = g.order() / h.order();
    if index > degree_bound {
        return Err(Error::resource(format!(
            "coset action degree {} exceeds bound {}",
            index, degree_bound
        )));
    }
    let hs = h.group();
    let start = canonical_coset_rep(hs, &Perm::identity(g.degree()));
    let mut index_of: HashMap<Perm, u32> = HashMap::new();
    index_of.insert(start.clone(), 0);
    let mut reps = vec![start];
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); g.generators().len()];
    let mut head = 0;
    while head < reps.len() {
        let rep = reps[head].clone();
        for (gi, gen) in g.generators().iter().enumerate() {
            let moved = canonical_coset_rep(hs, &rep.compose(gen));
            let next = match index_of.get(&moved) {
                Some(&i) => i,
                None => {
                    let i = reps.len() as u32;
                    index_of.insert(moved.clone(), i);
                    reps.push(moved);
                    i
                }
            };
            images[gi].push(next);
        }
        head += 1;
    }
    if reps.len() as u128 != index {
        return Err(Error::internal(format!(
            "coset enumeration found {} cosets, expected index {}",
            reps.len(),
            index
        )));
    }
    let action_degree = reps.len() as u32;
    let generator_images = images
        .into_iter()
        .map(Perm::from_images)
        .collect::<Result<Vec<_>>>()?;
    Ok(CosetActionMap {
        ambient: g.clone(),
        point_stabilizer: hs.clone(),
        action_degree,
        generator_images,
        reps,
    })
}

impl CosetActionMap {
    /// Image of an arbitrary ambient element.
    pub fn image_of(&self, g: &Perm) -> Result<Perm> {
        if g.degree() != self.ambient.degree() {
            return Err(Error::rejected("degree mismatch".to_string()));
        }
        let mut img = Vec::with_capacity(self.action_degree as usize);
        let mut lookup: HashMap<&Perm, u32> = HashMap::new();
        for (i, r) in self.reps.iter().enumerate() {
            lookup.insert(r, i as u32);
        }
        for r in &self.reps {
            let moved = canonical_coset_rep(&self.point_stabilizer, &r.compose(g));
            let &i = lookup
                .get(&moved)
                .ok_or_else(|| Error::internal("coset image outside enumeration".to_string()))?;
            img.push(i);
        }
        Perm::from_images(img)
    }

    /// The image as a permutation group (builds a chain; callers keep the
    /// degree small).
    pub fn image_group(&self) -> Result<PermGroup> {
        PermGroup::from_generators(self.action_degree, self.generator_images.clone())
    }

    pub fn is_transitive_by_construction(&self) -> bool {
        true
    }

    /// Kernel of the action = core of the point stabilizer, computed by
    /// intersecting conjugates until the result is normal. Element-scan
    /// based, so only for small ambients.
    pub fn kernel(&self) -> Result<SubgroupRef> {
        let g = &self.ambient;
        let mut core = SubgroupRef::new(g.clone(), self.point_stabilizer.clone())?;
        loop {
            let mut changed = false;
            for gen in g.generators() {
                let conj = core.conjugate(gen)?;
                if !core.same_subgroup(conj.group()) {
                    core = crate::subgrp::intersection(g, core.group(), conj.group())?;
                    changed = true;
                }
            }
            if !changed {
                return Ok(core);
            }
        }
    }

    /// Representative of coset `i` (an ambient element mapping coset 0 to i).
    pub fn coset_rep(&self, i: u32) -> &Perm {
        &self.reps[i as usize]
    }
}

/// Quotient of `g` by a normal subgroup, realized as the (regular) image of
/// the coset action, plus the data needed for preimages.
pub struct QuotientMap {
    pub action: CosetActionMap,
    pub quotient: PermGroup,
}

pub fn quotient_group(g: &PermGroup, n: &SubgroupRef, degree_bound: u128) -> Result<QuotientMap> {
    if !n.is_normal()? {
        return Err(Error::rejected(
            "quotient requires a normal subgroup".to_string(),
        ));
    }
    let action = coset_action_bounded(g, n, degree_bound)?;
    let quotient = action.image_group()?;
    debug_assert_eq!(quotient.order(), g.order() / n.order());
    Ok(QuotientMap { action, quotient })
}

impl QuotientMap {
    /// Full inverse image of a subgroup of the quotient.
    pub fn preimage(&self, s: &PermGroup) -> Result<SubgroupRef> {
        let mut gens: Vec<Perm> = self.action.point_stabilizer.generators().to_vec();
        for q in s.generators() {
            // The quotient acts regularly, so an element is determined by
            // the image of coset 0; its rep pulls back exactly.
            let rep = self.action.coset_rep(q.apply(0));
            gens.push(rep.clone());
        }
        let pre = PermGroup::from_generators(self.action.ambient.degree(), gens)?;
        SubgroupRef::new(self.action.ambient.clone(), pre)
    }
}
