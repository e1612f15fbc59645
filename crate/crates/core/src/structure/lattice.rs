//! Subgroup enumeration and maximal subgroups.
//!
//! Two modes, cross-validated on every corpus group of order <= 2000:
//!
//! * full-lattice: join-closure from prime-power cyclic atoms with
//!   conjugacy dedup; maximality read off the inclusion poset.
//! * two-generated: candidates <x, y> with x over class representatives and
//!   y over centralizer-orbit representatives; each surviving candidate is
//!   certified or refuted by `is_maximal` (primitivity of the coset action).

use std::collections::{HashMap, HashSet};

use crate::blocks::is_primitive_action;
use crate::classes::{conjugacy_classes, ConjugacyClasses};
use crate::coset::coset_action_bounded;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::subgrp::SubgroupRef;

pub const FULL_LATTICE_BOUND: u128 = 2_000;
pub const TWO_GEN_BOUND: u128 = 12_000;
pub const MAX_INDEX_BOUND: u128 = 200_000;

/// Shared element-indexed view of a group for lattice work.
pub struct GroupContext {
    pub group: PermGroup,
    pub classes: ConjugacyClasses,
    /// Per generator: element index -> index of g^-1 e g.
    conj_maps: Vec<Vec<u32>>,
}

impl GroupContext {
    pub fn new(g: &PermGroup, bound: u128) -> Result<GroupContext> {
        let classes = conjugacy_classes(g, bound)?;
        let mut conj_maps = Vec::with_capacity(g.generators().len());
        for gen in g.generators() {
            let map = classes
                .elements
                .iter()
                .map(|e| classes.index[&e.conjugate_by(gen)])
                .collect();
            conj_maps.push(map);
        }
        Ok(GroupContext {
            group: g.clone(),
            classes,
            conj_maps,
        })
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    /// Sorted element indices of a subgroup.
    pub fn set_of(&self, h: &PermGroup) -> Result<Vec<u32>> {
        let elems = h.elements(self.group.order())?;
        let mut set: Vec<u32> =
            elems
                .iter()
                .map(|e| {
                    self.classes.index.get(e).copied().ok_or_else(|| {
                        Error::rejected("subgroup element outside group".to_string())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
        set.sort_unstable();
        Ok(set)
    }

    fn conj_set(&self, set: &[u32], gi: usize) -> Vec<u32> {
        let map = &self.conj_maps[gi];
        let mut out: Vec<u32> = set.iter().map(|&i| map[i as usize]).collect();
        out.sort_unstable();
        out
    }

    /// Conjugation orbit of a subgroup (as element-index sets), BFS order,
    /// and the lexicographically smallest member as canonical form.
    pub fn orbit_and_canonical(&self, set: Vec<u32>) -> (Vec<Vec<u32>>, Vec<u32>) {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut orbit = vec![set.clone()];
        seen.insert(set);
        let mut head = 0;
        while head < orbit.len() {
            let cur = orbit[head].clone();
            head += 1;
            for gi in 0..self.conj_maps.len() {
                let moved = self.conj_set(&cur, gi);
                if !seen.contains(&moved) {
                    seen.insert(moved.clone());
                    orbit.push(moved);
                }
            }
        }
        let canonical = orbit.iter().min().unwrap().clone();
        (orbit, canonical)
    }
}

/// One conjugacy class of subgroups.
pub struct SubgroupClass {
    /// A representative subgroup (position may differ from `canonical`).
    pub rep: PermGroup,
    /// Canonical (lex-min conjugate) element-index set.
    pub canonical: Vec<u32>,
    /// All conjugate element-index sets.
    pub orbit: Vec<Vec<u32>>,
    pub order: u128,
}

impl SubgroupClass {
    pub fn index_in(&self, g: &PermGroup) -> u128 {
        g.order() / self.order
    }
}

fn bitset_of(set: &[u32], words: usize) -> Vec<u64> {
    let mut b = vec![0u64; words];
    for &i in set {
        b[(i / 64) as usize] |= 1 << (i % 64);
    }
    b
}

fn bitset_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x & !y == 0)
}

/// All subgroup conjugacy classes by join-closure from prime-power cyclic
/// atoms. Requires |G| <= FULL_LATTICE_BOUND.
pub fn all_subgroup_classes(ctx: &GroupContext) -> Result<Vec<SubgroupClass>> {
    if ctx.order() > FULL_LATTICE_BOUND {
        return Err(Error::resource(format!(
            "full lattice enumeration requires order <= {}, got {}",
            FULL_LATTICE_BOUND,
            ctx.order()
        )));
    }
    let degree = ctx.group.degree();
    let n = ctx.classes.elements.len();

    // Atom instances: every cyclic subgroup of prime-power order, carried
    // with one generating element index.
    let mut atom_instances: Vec<(Vec<u32>, u32)> = Vec::new();
    let mut seen_atom_sets: HashSet<Vec<u32>> = HashSet::new();
    for idx in 1..n as u32 {
        let e = &ctx.classes.elements[idx as usize];
        let ord = e.order()?;
        if !is_prime_power_u128(ord) {
            continue;
        }
        let set = cyclic_set(ctx, idx)?;
        if seen_atom_sets.insert(set.clone()) {
            atom_instances.push((set, idx));
        }
    }

    let mut classes: Vec<SubgroupClass> = Vec::new();
    let mut by_canonical: HashMap<Vec<u32>, usize> = HashMap::new();

    let push_class = |classes: &mut Vec<SubgroupClass>,
                      by_canonical: &mut HashMap<Vec<u32>, usize>,
                      rep: PermGroup,
                      set: Vec<u32>|
     -> usize {
        let (orbit, canonical) = ctx.orbit_and_canonical(set);
        if let Some(&i) = by_canonical.get(&canonical) {
            return i;
        }
        let id = classes.len();
        by_canonical.insert(canonical.clone(), id);
        classes.push(SubgroupClass {
            order: rep.order(),
            rep,
            canonical,
            orbit,
        });
        id
    };

    // trivial subgroup
    push_class(
        &mut classes,
        &mut by_canonical,
        PermGroup::trivial(degree),
        vec![0],
    );
    // atoms
    for (set, gen_idx) in &atom_instances {
        let rep = PermGroup::from_generators(
            degree,
            vec![ctx.classes.elements[*gen_idx as usize].clone()],
        )?;
        push_class(&mut classes, &mut by_canonical, rep, set.clone());
    }

    // join closure
    let mut join_memo: HashSet<Vec<u32>> = HashSet::new();
    let mut head = 0;
    while head < classes.len() {
        let base_set = classes[head].canonical.clone();
        // Join the subgroup at its canonical position with every atom
        // instance: that covers all relative positions of the pair up to
        // conjugacy. The canonical-position subgroup is rebuilt from its
        // element set.
        let base_group = {
            let gens: Vec<Perm> = base_set
                .iter()
                .map(|&i| ctx.classes.elements[i as usize].clone())
                .collect();
            PermGroup::from_generators(degree, gens)?
        };
        head += 1;
        for (aset, agen) in &atom_instances {
            if subset_sorted(aset, &base_set) {
                continue;
            }
            let union = union_sorted(&base_set, aset);
            if !join_memo.insert(union) {
                continue;
            }
            let mut gens = base_group.generators().to_vec();
            gens.push(ctx.classes.elements[*agen as usize].clone());
            let joined = PermGroup::from_generators(degree, gens)?;
            let set = ctx.set_of(&joined)?;
            push_class(&mut classes, &mut by_canonical, joined, set);
        }
    }
    classes.sort_by(|a, b| (a.order, &a.canonical).cmp(&(b.order, &b.canonical)));
    Ok(classes)
}

fn is_prime_power_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut d = 2u128;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            return m == 1;
        }
        d += 1;
    }
    true // prime
}

fn cyclic_set(ctx: &GroupContext, idx: u32) -> Result<Vec<u32>> {
    let e = &ctx.classes.elements[idx as usize];
    let mut set = vec![0u32];
    let mut cur = e.clone();
    while !cur.is_identity() {
        set.push(ctx.classes.index[&cur]);
        cur = cur.compose(e);
    }
    set.sort_unstable();
    Ok(set)
}

fn subset_sorted(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn union_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}

/// Indices (into `classes`) of the maximal subgroup classes, by inclusion
/// poset over conjugate positions.
pub fn maximal_class_ids(ctx: &GroupContext, classes: &[SubgroupClass]) -> Vec<usize> {
    let n = ctx.classes.elements.len();
    let words = n.div_ceil(64);
    let full_order = ctx.order();
    let rep_bits: Vec<Vec<u64>> = classes
        .iter()
        .map(|c| bitset_of(&c.canonical, words))
        .collect();
    let mut out = Vec::new();
    'cand: for (i, c) in classes.iter().enumerate() {
        if c.order == full_order {
            continue;
        }
        for (k, k_class) in classes.iter().enumerate() {
            if k == i || k_class.order == full_order || k_class.order <= c.order {
                continue;
            }
            if k_class.order % c.order != 0 {
                continue;
            }
            // c maximal fails if some conjugate of c sits inside k's rep
            for inst in &c.orbit {
                let b = bitset_of(inst, words);
                if bitset_subset(&b, &rep_bits[k]) {
                    continue 'cand;
                }
            }
        }
        out.push(i);
    }
    out
}

/// Maximality via primitivity of the coset action.
pub fn is_maximal(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    if h.order() >= g.order() {
        return Err(Error::rejected(
            "maximality test requires a proper subgroup".to_string(),
        ));
    }
    let index = g.order() / h.order();
    if index > MAX_INDEX_BOUND {
        return Err(Error::resource(format!(
            "coset action degree {} exceeds bound {}",
            index, MAX_INDEX_BOUND
        )));
    }
    let href = SubgroupRef::new(g.clone(), h.clone())?;
    let act = coset_action_bounded(g, &href, MAX_INDEX_BOUND)?;
    is_primitive_action(act.action_degree, &act.generator_images)
}

/// Two-generated candidate sweep with two completions that cover the
/// maximal subgroups a bare <x, y> sweep provably cannot reach:
///
/// * nilpotent groups take the prime-index route (every maximal subgroup
///   of a nilpotent group is the kernel of a map onto C_p, enumerated via
///   hyperplanes of G / G'G^p), and the trivial subgroup is the unique
///   maximal subgroup exactly when |G| is prime;
/// * otherwise the candidate pool is closed under taking normalizers,
///   which reaches classes such as the elementary-abelian kernel of a
///   Frobenius group or the three-generator subset stabilizers of
///   alternating groups.
///
/// Every surviving candidate is still certified or refuted by
/// `is_maximal`. Requires |G| <= TWO_GEN_BOUND.
pub fn maximal_classes_twogen(ctx: &GroupContext) -> Result<Vec<SubgroupClass>> {
    if ctx.order() > TWO_GEN_BOUND {
        return Err(Error::resource(format!(
            "two-generated mode requires order <= {}, got {}",
            TWO_GEN_BOUND,
            ctx.order()
        )));
    }
    let g = &ctx.group;
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    if crate::structure::series::is_prime_u128(g.order()) {
        // the trivial subgroup is maximal precisely here
        let rep = PermGroup::trivial(g.degree());
        return Ok(vec![SubgroupClass {
            order: 1,
            rep,
            canonical: vec![0],
            orbit: vec![vec![0]],
        }]);
    }
    if crate::structure::sylow::is_nilpotent(g, 0)? {
        return nilpotent_maximal_classes(ctx);
    }

    let degree = g.degree();
    let elements = &ctx.classes.elements;
    let n = elements.len();

    let mut seen_sets: HashSet<Vec<u32>> = HashSet::new();
    let mut candidates: Vec<(Vec<u32>, PermGroup)> = Vec::new();

    for &rep_idx in &ctx.classes.reps {
        if rep_idx == 0 {
            continue;
        }
        let x = elements[rep_idx as usize].clone();
        // centralizer of x, built incrementally over the element scan
        let mut cent = PermGroup::trivial(degree);
        for e in elements.iter() {
            if e.commutes_with(&x) && !cent.is_member(e)? {
                let mut gens = cent.generators().to_vec();
                gens.push(e.clone());
                cent = PermGroup::from_generators(degree, gens)?;
            }
        }
        // orbit representatives of the conjugation action of the
        // centralizer on all elements: <x, y> and <x, y^c> are conjugate
        // for c centralizing x, so one y per orbit suffices.
        let cent_maps: Vec<Vec<u32>> = cent
            .generators()
            .iter()
            .map(|c| {
                elements
                    .iter()
                    .map(|e| ctx.classes.index[&e.conjugate_by(c)])
                    .collect()
            })
            .collect();
        let mut orbit_seen = vec![false; n];
        for y0 in 0..n as u32 {
            if orbit_seen[y0 as usize] {
                continue;
            }
            let mut queue = vec![y0];
            orbit_seen[y0 as usize] = true;
            let mut qh = 0;
            while qh < queue.len() {
                let e = queue[qh];
                qh += 1;
                for map in &cent_maps {
                    let m = map[e as usize];
                    if !orbit_seen[m as usize] {
                        orbit_seen[m as usize] = true;
                        queue.push(m);
                    }
                }
            }
            let y = elements[y0 as usize].clone();
            let h = PermGroup::from_generators(degree, vec![x.clone(), y])?;
            if h.order() == g.order() {
                continue;
            }
            let set = ctx.set_of(&h)?;
            if seen_sets.insert(set.clone()) {
                candidates.push((set, h));
            }
        }
    }

    // conjugacy dedup
    let mut classes: Vec<SubgroupClass> = Vec::new();
    let mut classified: HashSet<Vec<u32>> = HashSet::new();
    candidates.sort_by(|a, b| (b.1.order(), &a.0).cmp(&(a.1.order(), &b.0)));
    for (set, h) in candidates {
        if classified.contains(&set) {
            continue;
        }
        let (orbit, canonical) = ctx.orbit_and_canonical(set);
        for inst in &orbit {
            classified.insert(inst.clone());
        }
        classes.push(SubgroupClass {
            order: h.order(),
            rep: h,
            canonical,
            orbit,
        });
    }

    // normalizer closure: pool every proper normalizer of a candidate as a
    // candidate of its own, then certify. The normalizer also refutes its
    // argument whenever it grows strictly but stays proper.
    let mut maximal = Vec::new();
    let mut head = 0;
    while head < classes.len() {
        let class_order = classes[head].order;
        let rep = classes[head].rep.clone();
        head += 1;
        let norm = crate::subgrp::normalizer(g, &rep)?;
        let refuted = norm.order() > class_order && norm.order() < g.order();
        if norm.order() < g.order() && norm.order() > class_order {
            let set = ctx.set_of(norm.group())?;
            if !classified.contains(&set) {
                let (orbit, canonical) = ctx.orbit_and_canonical(set);
                for inst in &orbit {
                    classified.insert(inst.clone());
                }
                classes.push(SubgroupClass {
                    order: norm.order(),
                    rep: norm.group().clone(),
                    canonical,
                    orbit,
                });
            }
        }
        if !refuted && is_maximal(g, &rep)? {
            let c = &classes[head - 1];
            maximal.push(SubgroupClass {
                order: c.order,
                rep: c.rep.clone(),
                canonical: c.canonical.clone(),
                orbit: c.orbit.clone(),
            });
        }
    }
    maximal.sort_by(|a, b| (b.order, &a.canonical).cmp(&(a.order, &b.canonical)));
    Ok(maximal)
}

/// Maximal subgroups of a nilpotent group: for each prime p, the kernels
/// of the epimorphisms onto C_p, i.e. the pullbacks of the hyperplanes of
/// the elementary abelian quotient G / G'G^p.
fn nilpotent_maximal_classes(ctx: &GroupContext) -> Result<Vec<SubgroupClass>> {
    let g = &ctx.group;
    let mut out: Vec<SubgroupClass> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for p in crate::structure::series::prime_divisors(g.order()) {
        // K_p = G' G^p as the closure of generator commutators and p-th powers
        let mut seeds: Vec<Perm> = Vec::new();
        for (i, a) in g.generators().iter().enumerate() {
            for bgen in g.generators().iter().skip(i + 1) {
                seeds.push(a.commutator(bgen));
            }
            let mut pw = Perm::identity(g.degree());
            for _ in 0..p {
                pw = pw.compose(a);
            }
            seeds.push(pw);
        }
        let kp = crate::subgrp::normal_closure(g, &seeds)?;
        let quot = crate::coset::quotient_group(g, &kp, TWO_GEN_BOUND)?;
        let w = &quot.quotient;
        if w.order() == 1 {
            continue;
        }
        if w.order() > 4096 {
            return Err(Error::resource(format!(
                "elementary abelian quotient of order {} has too many hyperplanes",
                w.order()
            )));
        }
        // coordinates of W = C_p^r relative to a greedy basis
        let w_elems = w.elements(TWO_GEN_BOUND)?;
        let mut basis: Vec<Perm> = Vec::new();
        let mut span: HashSet<Perm> = HashSet::new();
        span.insert(Perm::identity(w.degree()));
        for e in &w_elems {
            if !span.contains(e) {
                basis.push(e.clone());
                let snapshot: Vec<Perm> = span.iter().cloned().collect();
                for s in snapshot {
                    let mut cur = s.clone();
                    for _ in 1..p {
                        cur = cur.compose(e);
                        span.insert(cur.clone());
                    }
                }
            }
        }
        let r = basis.len();
        debug_assert_eq!(w.order(), (p as u128).pow(r as u32));
        // hyperplanes: kernels of covectors with first nonzero entry 1
        let mut covectors: Vec<Vec<u64>> = Vec::new();
        let mut stack = vec![vec![]];
        while let Some(v) = stack.pop() {
            if v.len() == r {
                if v.iter().any(|&c| c != 0) {
                    covectors.push(v);
                }
                continue;
            }
            let first_nonzero = v.iter().position(|&c| c != 0);
            let range: Vec<u64> = match first_nonzero {
                None => (0..=1).collect(),
                Some(_) => (0..p).collect(),
            };
            for c in range {
                let mut nv = v.clone();
                nv.push(c);
                stack.push(nv);
            }
        }
        for phi in covectors {
            // kernel generators in W: basis differences killing phi
            let mut kgens: Vec<Perm> = Vec::new();
            let pivot = phi.iter().position(|&c| c != 0).unwrap();
            for (j, &cj) in phi.iter().enumerate() {
                if j == pivot {
                    continue;
                }
                // e_j - c_j * e_pivot (additively): e_j * e_pivot^(p - c_j)
                let mut el = basis[j].clone();
                let times = (p - cj % p) % p;
                for _ in 0..times {
                    el = el.compose(&basis[pivot]);
                }
                kgens.push(el);
            }
            // also p * e_pivot = identity, nothing to add
            let kernel = PermGroup::from_generators(w.degree(), kgens)?;
            debug_assert_eq!(kernel.order() * p as u128, w.order());
            let m = quot.preimage(&kernel)?;
            let set = ctx.set_of(m.group())?;
            if seen.contains(&set) {
                continue;
            }
            let (orbit, canonical) = ctx.orbit_and_canonical(set);
            for inst in &orbit {
                seen.insert(inst.clone());
            }
            if is_maximal(g, m.group())? {
                out.push(SubgroupClass {
                    order: m.order(),
                    rep: m.group().clone(),
                    canonical,
                    orbit,
                });
            }
        }
    }
    out.sort_by(|a, b| (b.order, &a.canonical).cmp(&(a.order, &b.canonical)));
    Ok(out)
}

/// Full-lattice maximal classes (requires |G| <= FULL_LATTICE_BOUND).
pub fn maximal_classes_full(ctx: &GroupContext) -> Result<Vec<SubgroupClass>> {
    let all = all_subgroup_classes(ctx)?;
    let ids = maximal_class_ids(ctx, &all);
    let mut out: Vec<SubgroupClass> = Vec::new();
    for i in ids {
        let c = &all[i];
        out.push(SubgroupClass {
            rep: c.rep.clone(),
            canonical: c.canonical.clone(),
            orbit: c.orbit.clone(),
            order: c.order,
        });
    }
    out.sort_by(|a, b| (b.order, &a.canonical).cmp(&(a.order, &b.canonical)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;

    fn maximal_order_index_pairs(classes: &[SubgroupClass], g: &PermGroup) -> Vec<(u128, u128)> {
        let mut v: Vec<(u128, u128)> = classes
            .iter()
            .map(|c| (c.order, g.order() / c.order))
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn alt5_maximal_classes() {
        let g = atlas::alt(5).unwrap();
        let ctx = GroupContext::new(&g, 10_000).unwrap();
        let full = maximal_classes_full(&ctx).unwrap();
        assert_eq!(
            maximal_order_index_pairs(&full, &g),
            vec![(6, 10), (10, 6), (12, 5)]
        );
        let twogen = maximal_classes_twogen(&ctx).unwrap();
        assert_eq!(
            maximal_order_index_pairs(&twogen, &g),
            vec![(6, 10), (10, 6), (12, 5)]
        );
        // the two modes agree class-by-class, not just on order profiles
        let mut a: Vec<&Vec<u32>> = full.iter().map(|c| &c.canonical).collect();
        let mut b: Vec<&Vec<u32>> = twogen.iter().map(|c| &c.canonical).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn sym4_subgroup_census() {
        // S4 has 30 subgroups in 11 conjugacy classes.
        let g = atlas::sym(4).unwrap();
        let ctx = GroupContext::new(&g, 10_000).unwrap();
        let all = all_subgroup_classes(&ctx).unwrap();
        assert_eq!(all.len(), 11);
        let total: usize = all.iter().map(|c| c.orbit.len()).sum();
        assert_eq!(total, 30);
        let maxi = maximal_classes_full(&ctx).unwrap();
        assert_eq!(
            maximal_order_index_pairs(&maxi, &g),
            vec![(6, 4), (8, 3), (12, 2)]
        );
    }

    #[test]
    fn cyclic_group_lattice() {
        let g = atlas::cyclic(12).unwrap();
        let ctx = GroupContext::new(&g, 10_000).unwrap();
        let all = all_subgroup_classes(&ctx).unwrap();
        // subgroups of C12: one per divisor of 12
        assert_eq!(all.len(), 6);
        let maxi = maximal_classes_full(&ctx).unwrap();
        assert_eq!(maximal_order_index_pairs(&maxi, &g), vec![(4, 3), (6, 2)]);
    }

    #[test]
    fn is_maximal_basics() {
        let a5 = atlas::alt(5).unwrap();
        let a4 = a5.point_stabilizer(0).unwrap();
        assert!(is_maximal(&a5, &a4).unwrap());
        let c5 = PermGroup::from_generators(
            5,
            vec![crate::perm::perm_from_cycles(5, &[&[0, 1, 2, 3, 4]])],
        )
        .unwrap();
        assert!(!is_maximal(&a5, &c5).unwrap());
        assert!(is_maximal(&a5, &a5).is_err());
    }

    #[test]
    fn alt7_profile_includes_the_three_generator_class() {
        // the 3-subset stabilizer of Alt(7), order 72, needs 3 generators;
        // the normalizer closure reaches it as N(<3-cycle>)
        let g = atlas::alt(7).unwrap();
        let ctx = GroupContext::new(&g, 1_000_000).unwrap();
        let maxi = maximal_classes_twogen(&ctx).unwrap();
        assert_eq!(
            maximal_order_index_pairs(&maxi, &g),
            vec![(72, 35), (120, 21), (168, 15), (168, 15), (360, 7)]
        );
    }

    #[test]
    fn nilpotent_and_prime_paths() {
        // C2 wr C4 is a 2-group whose three index-2 maximals include a
        // three-generator one
        let w =
            atlas::wreath_product(&atlas::cyclic(2).unwrap(), &atlas::cyclic(4).unwrap()).unwrap();
        let ctx = GroupContext::new(&w, 1_000_000).unwrap();
        let maxi = maximal_classes_twogen(&ctx).unwrap();
        assert_eq!(maxi.len(), 3);
        assert!(maxi.iter().all(|c| c.index_in(&w) == 2));
        // prime order: the trivial subgroup is the unique maximal class
        let c7 = atlas::cyclic(7).unwrap();
        let ctx7 = GroupContext::new(&c7, 1_000).unwrap();
        let m7 = maximal_classes_twogen(&ctx7).unwrap();
        assert_eq!(m7.len(), 1);
        assert_eq!(m7[0].order, 1);
        // Frobenius kernel of AGL(1,8): elementary abelian of rank 3
        let f = atlas::agl1(8).unwrap();
        let ctxf = GroupContext::new(&f, 1_000).unwrap();
        let mf = maximal_classes_twogen(&ctxf).unwrap();
        assert_eq!(maximal_order_index_pairs(&mf, &f), vec![(7, 8), (8, 7)]);
    }

    #[test]
    fn psl28_maximal_indices() {
        let g = atlas::psl2(8).unwrap();
        let ctx = GroupContext::new(&g, 10_000).unwrap();
        let maxi = maximal_classes_full(&ctx).unwrap();
        let mut indices: Vec<u128> = maxi.iter().map(|c| g.order() / c.order).collect();
        indices.sort_unstable();
        assert_eq!(indices, vec![9, 28, 36]);
    }
}
