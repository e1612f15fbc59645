//! Block systems of transitive groups and the primitivity test.
//!
//! `minimal_block_system` implements the classic union-find closure: seed a
//! partition with {0, x}, then merge classes until the partition is
//! invariant under every generator.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub degree: u32,
    /// point -> block id; ids are dense, ordered by first occurrence.
    pub block_of: Vec<u32>,
    pub block_count: u32,
}

impl BlockSystem {
    pub fn block_size(&self) -> u32 {
        self.degree / self.block_count
    }

    pub fn is_trivial(&self) -> bool {
        self.block_count == 1 || self.block_count == self.degree
    }

    /// Every block must have equal size and the partition must be invariant
    /// under the given generators.
    pub fn validate(&self, gens: &[Perm]) -> bool {
        let mut sizes = vec![0u32; self.block_count as usize];
        for &b in &self.block_of {
            sizes[b as usize] += 1;
        }
        if !sizes.iter().all(|&s| s == sizes[0]) {
            return false;
        }
        for g in gens {
            // image of a block must be a block: check via representatives
            let mut image_block = vec![u32::MAX; self.block_count as usize];
            for p in 0..self.degree {
                let b = self.block_of[p as usize] as usize;
                let ib = self.block_of[g.apply(p) as usize];
                if image_block[b] == u32::MAX {
                    image_block[b] = ib;
                } else if image_block[b] != ib {
                    return false;
                }
            }
        }
        true
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: u32) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = x;
        while self.parent[c as usize] != r {
            let nxt = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = nxt;
        }
        r
    }
    /// Merges and returns the surviving root, or None if already joined.
    fn union(&mut self, a: u32, b: u32) -> Option<(u32, u32)> {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return None;
        }
        let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop as usize] = keep;
        Some((keep, drop))
    }
}

/// The finest block system in which `a` and `b` share a block.
pub fn minimal_block_system(degree: u32, gens: &[Perm], a: u32, b: u32) -> BlockSystem {
    let mut uf = UnionFind::new(degree);
    let mut queue: Vec<(u32, u32)> = Vec::new();
    if let Some((keep, drop)) = uf.union(a, b) {
        queue.push((keep, drop));
    }
    let mut head = 0;
    while head < queue.len() {
        let (x, y) = queue[head];
        head += 1;
        for g in gens {
            if let Some(pair) = uf.union(g.apply(x), g.apply(y)) {
                queue.push(pair);
            }
        }
    }
    let mut block_of = vec![u32::MAX; degree as usize];
    let mut next = 0u32;
    for p in 0..degree {
        let r = uf.find(p);
        if block_of[r as usize] == u32::MAX {
            block_of[r as usize] = next;
            next += 1;
        }
        block_of[p as usize] = block_of[r as usize];
    }
    BlockSystem {
        degree,
        block_of,
        block_count: next,
    }
}

/// Deduplicated list of the systems generated by each pair {0, x}.
pub fn minimal_block_systems(g: &PermGroup) -> Result<Vec<BlockSystem>> {
    if !g.is_transitive() {
        return Err(Error::rejected(
            "block systems are defined for transitive groups only".to_string(),
        ));
    }
    let mut out: Vec<BlockSystem> = Vec::new();
    for x in 1..g.degree() {
        let sys = minimal_block_system(g.degree(), g.generators(), 0, x);
        if !out.contains(&sys) {
            out.push(sys);
        }
    }
    Ok(out)
}

pub fn is_primitive(g: &PermGroup) -> Result<bool> {
    is_primitive_action(g.degree(), g.generators())
}

/// Primitivity of a transitive action given by raw generators, without
/// building a group (used on large coset actions).
pub fn is_primitive_action(degree: u32, gens: &[Perm]) -> Result<bool> {
    if degree == 0 {
        return Err(Error::rejected("empty domain".to_string()));
    }
    if crate::group::orbit_of(degree, gens, 0).len() as u32 != degree {
        return Err(Error::rejected(
            "primitivity is defined for transitive actions only".to_string(),
        ));
    }
    if degree == 1 {
        return Ok(true);
    }
    for x in 1..degree {
        let sys = minimal_block_system(degree, gens, 0, x);
        if !sys.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm_from_cycles;

    #[test]
    fn sym4_natural_action_is_primitive() {
        let g = PermGroup::from_generators(
            4,
            vec![
                perm_from_cycles(4, &[&[0, 1]]),
                perm_from_cycles(4, &[&[0, 1, 2, 3]]),
            ],
        )
        .unwrap();
        assert!(is_primitive(&g).unwrap());
    }

    #[test]
    fn cyclic6_block_sizes_are_2_and_3() {
        // Nontrivial subgroups of C6 have orders 2 and 3, so the nontrivial
        // systems have block sizes 2 and 3.
        let g = PermGroup::from_generators(6, vec![perm_from_cycles(6, &[&[0, 1, 2, 3, 4, 5]])])
            .unwrap();
        let systems = minimal_block_systems(&g).unwrap();
        let mut nontrivial_sizes: Vec<u32> = systems
            .iter()
            .filter(|s| !s.is_trivial())
            .map(|s| s.block_size())
            .collect();
        nontrivial_sizes.sort_unstable();
        assert_eq!(nontrivial_sizes, vec![2, 3]);
        for s in &systems {
            assert!(s.validate(g.generators()));
        }
    }

    #[test]
    fn imprimitive_wreath_type_action() {
        // Two blocks of size 5: Sym(5) x Sym(5) with a swap, on 10 points.
        let mut gens = vec![
            perm_from_cycles(10, &[&[0, 1]]),
            perm_from_cycles(10, &[&[0, 1, 2, 3, 4]]),
            perm_from_cycles(10, &[&[5, 6]]),
            perm_from_cycles(10, &[&[5, 6, 7, 8, 9]]),
        ];
        gens.push(perm_from_cycles(
            10,
            &[&[0, 5], &[1, 6], &[2, 7], &[3, 8], &[4, 9]],
        ));
        let g = PermGroup::from_generators(10, gens).unwrap();
        assert!(g.is_transitive());
        // A same-block pair closes to the two natural blocks of size 5.
        let sys = minimal_block_system(10, g.generators(), 0, 1);
        assert_eq!(sys.block_count, 2);
        assert_eq!(sys.block_size(), 5);
        assert!(sys.validate(g.generators()));
        // A cross-block pair collapses everything.
        let full = minimal_block_system(10, g.generators(), 0, 5);
        assert_eq!(full.block_count, 1);
        assert!(!is_primitive(&g).unwrap());
        let systems = minimal_block_systems(&g).unwrap();
        assert!(systems
            .iter()
            .any(|s| s.block_count == 2 && s.block_size() == 5));
    }

    #[test]
    fn intransitive_input_rejected() {
        let g = PermGroup::from_generators(4, vec![perm_from_cycles(4, &[&[0, 1]])]).unwrap();
        assert!(minimal_block_systems(&g).is_err());
    }

    #[test]
    fn blocks_partition_points() {
        let g =
            PermGroup::from_generators(8, vec![perm_from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]])])
                .unwrap();
        for sys in minimal_block_systems(&g).unwrap() {
            assert_eq!(sys.block_size() * sys.block_count, 8);
        }
    }
}
