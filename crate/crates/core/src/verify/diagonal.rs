//! The correspondence K -> {(x,y) : x^-1 y in K} between normal subgroups
//! of G and subgroups of G x G containing the diagonal, verified by
//! exhaustive counting, plus the maximality criterion: G is simple exactly
//! when the diagonal is maximal in G x G.

use std::collections::HashSet;

use crate::atlas;
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::structure::lattice::is_maximal;
use crate::subgrp::normal_closure;
use crate::verify::{CheckBuilder, CheckResult};

/// All normal subgroups of g, as join-closure of class-representative
/// normal closures. Returns deduplicated groups including 1 and G.
fn all_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let classes = crate::classes::conjugacy_classes(g, 100_000)?;
    let mut subs: Vec<PermGroup> = vec![PermGroup::trivial(g.degree())];
    let push_new = |subs: &mut Vec<PermGroup>, cand: PermGroup| {
        let dup = subs.iter().any(|s| {
            s.order() == cand.order()
                && cand
                    .generators()
                    .iter()
                    .all(|x| s.is_member(x).unwrap_or(false))
        });
        if !dup {
            subs.push(cand);
        }
    };
    for rep in classes.nonidentity_reps() {
        let nc = normal_closure(g, &[rep])?.group().clone();
        push_new(&mut subs, nc);
    }
    // close under joins
    let mut head = 0;
    while head < subs.len() {
        for j in 0..head {
            let mut gens = subs[head].generators().to_vec();
            gens.extend(subs[j].generators().iter().cloned());
            let join = PermGroup::from_generators(g.degree(), gens)?;
            push_new(&mut subs, join);
        }
        head += 1;
    }
    subs.sort_by_key(|s| s.order());
    Ok(subs)
}

/// Element-set of a subgroup of the product, for dedup.
fn subgroup_key(h: &PermGroup, cap: u128) -> Result<Vec<Perm>> {
    let mut v = h.elements(cap)?;
    v.sort_unstable();
    Ok(v)
}

/// All subgroups of G x G containing the diagonal, by join closure upward
/// from the diagonal.
fn subgroups_above_diagonal(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let dref = atlas::diagonal_subgroup(g)?;
    let ambient = dref.ambient().clone();
    let elements = ambient.elements(1_000_000)?;
    let mut found: Vec<PermGroup> = vec![dref.group().clone()];
    let mut keys: HashSet<Vec<Perm>> = HashSet::new();
    keys.insert(subgroup_key(dref.group(), ambient.order())?);
    let mut head = 0;
    while head < found.len() {
        let base = found[head].clone();
        head += 1;
        if base.order() == ambient.order() {
            continue;
        }
        for e in &elements {
            if base.is_member(e)? {
                continue;
            }
            let mut gens = base.generators().to_vec();
            gens.push(e.clone());
            let join = PermGroup::from_generators(ambient.degree(), gens)?;
            let key = subgroup_key(&join, ambient.order())?;
            if keys.insert(key) {
                found.push(join);
            }
        }
    }
    found.sort_by_key(|s| s.order());
    Ok(found)
}

/// The subgroup {(x, y) : x^-1 y in K} of G x G.
fn correspondent(g: &PermGroup, k: &PermGroup) -> Result<PermGroup> {
    let d = g.degree();
    let dref = atlas::diagonal_subgroup(g)?;
    let mut gens = dref.group().generators().to_vec();
    for x in k.generators() {
        let mut img: Vec<u32> = (0..2 * d).collect();
        for i in 0..d {
            img[(d + i) as usize] = d + x.apply(i);
        }
        gens.push(Perm::from_images(img)?);
    }
    PermGroup::from_generators(2 * d, gens)
}

fn check_group(g: &PermGroup, name: &str, b: &mut CheckBuilder) -> Result<()> {
    let normals = all_normal_subgroups(g)?;
    let above = subgroups_above_diagonal(g)?;
    b.note(format!(
        "{}: {} normal subgroups, {} subgroups above the diagonal",
        name,
        normals.len(),
        above.len()
    ));
    b.check(
        normals.len() == above.len(),
        format!(
            "{}: correspondence count mismatch ({} normals vs {} overgroups)",
            name,
            normals.len(),
            above.len()
        ),
    );
    // the explicit map lands on distinct overgroups of the right orders
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    for k in &normals {
        let h = correspondent(g, k)?;
        b.check(
            h.order() == g.order() * k.order(),
            format!(
                "{}: correspondent of a normal subgroup of order {} has order {}",
                name,
                k.order(),
                h.order()
            ),
        );
        let key = subgroup_key(&h, h.order())?;
        b.check(
            seen.insert(key.clone()),
            format!("{}: correspondence is not injective", name),
        );
        let hit = above
            .iter()
            .map(|s| subgroup_key(s, s.order()))
            .collect::<Result<Vec<_>>>()?
            .contains(&key);
        b.check(
            hit,
            format!("{}: correspondent missing from the overgroup census", name),
        );
    }
    Ok(())
}

pub fn diagonal_correspondence_check() -> CheckResult {
    crate::verify::run_check("diagonal", |b| {
        let cases: Vec<(&str, PermGroup)> = vec![
            ("C6", atlas::cyclic(6)?),
            ("Sym(3)", atlas::sym(3)?),
            ("D8", atlas::dihedral(4)?),
            ("Q8", atlas::quaternion8()),
            ("Alt(4)", atlas::alt(4)?),
            ("Sym(4)", atlas::sym(4)?),
        ];
        for (name, g) in &cases {
            check_group(g, name, b)?;
            // none of these are simple, so the diagonal is never maximal
            let dref = atlas::diagonal_subgroup(g)?;
            let maximal = is_maximal(dref.ambient(), dref.group())?;
            b.check(
                !maximal,
                format!(
                    "{}: diagonal maximal although the group is not simple",
                    name
                ),
            );
        }
        // Sym(4): the correspondent of Alt(4) lies strictly between
        {
            let s4 = atlas::sym(4)?;
            let a4 = atlas::alt(4)?;
            // alt(4) inside sym(4) on the same 4 points
            let h = correspondent(&s4, &a4)?;
            let dref = atlas::diagonal_subgroup(&s4)?;
            b.check(
                h.order() == 288 && h.order() < dref.ambient().order(),
                "Sym(4): Alt(4)-correspondent must lie strictly between".to_string(),
            );
            b.note(
                "Sym(4): diagonal non-maximal; Alt(4) correspondent of order 288 sits between"
                    .to_string(),
            );
        }
        // Alt(5) is simple: the diagonal is maximal in the order-3600 product
        {
            let a5 = atlas::alt(5)?;
            let dref = atlas::diagonal_subgroup(&a5)?;
            let maximal = is_maximal(dref.ambient(), dref.group())?;
            b.check(
                maximal,
                "Alt(5): diagonal must be maximal in Alt(5) x Alt(5)".to_string(),
            );
            b.note("Alt(5): diagonal maximal in the order-3600 product".to_string());
        }
        Ok(())
    })
}
