//! Conjugacy classes by element enumeration, plus the normal-closure
//! simplicity test built on them.

use std::collections::HashMap;

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::subgrp::normal_closure;

/// Default enumeration guard for class computations.
pub const CLASS_ENUMERATION_BOUND: u128 = 1_000_000;

pub struct ConjugacyClasses {
    /// All elements in deterministic enumeration order.
    pub elements: Vec<Perm>,
    /// Index of each element.
    pub index: HashMap<Perm, u32>,
    /// Class id per element index.
    pub class_of: Vec<u32>,
    /// Representative element index per class (smallest index in class).
    pub reps: Vec<u32>,
    /// Class sizes.
    pub sizes: Vec<u32>,
}

pub fn conjugacy_classes(g: &PermGroup, bound: u128) -> Result<ConjugacyClasses> {
    let elements = g.elements(bound)?;
    let mut index = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        index.insert(e.clone(), i as u32);
    }
    let mut class_of = vec![u32::MAX; elements.len()];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for start in 0..elements.len() {
        if class_of[start] != u32::MAX {
            continue;
        }
        let cid = reps.len() as u32;
        reps.push(start as u32);
        let mut queue = vec![start as u32];
        class_of[start] = cid;
        let mut head = 0;
        while head < queue.len() {
            let e = elements[queue[head] as usize].clone();
            head += 1;
            for gen in g.generators() {
                let c = e.conjugate_by(gen);
                let ci = index[&c] as usize;
                if class_of[ci] == u32::MAX {
                    class_of[ci] = cid;
                    queue.push(ci as u32);
                }
            }
        }
        sizes.push(queue.len() as u32);
    }
    Ok(ConjugacyClasses {
        elements,
        index,
        class_of,
        reps,
        sizes,
    })
}

impl ConjugacyClasses {
    pub fn rep_perms(&self) -> Vec<Perm> {
        self.reps
            .iter()
            .map(|&i| self.elements[i as usize].clone())
            .collect()
    }

    /// Nonidentity class representatives.
    pub fn nonidentity_reps(&self) -> Vec<Perm> {
        self.rep_perms()
            .into_iter()
            .filter(|p| !p.is_identity())
            .collect()
    }
}

/// Simplicity via normal closures: nontrivial, and the normal closure of
/// every nonidentity class representative is the whole group.
pub fn is_simple_by_normal_closure(g: &PermGroup, bound: u128) -> Result<bool> {
    if g.order() == 1 {
        return Ok(false);
    }
    let classes = conjugacy_classes(g, bound)?;
    for rep in classes.nonidentity_reps() {
        let n = normal_closure(g, &[rep])?;
        if n.order() != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}
