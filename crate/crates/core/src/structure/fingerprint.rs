//! Cheap isomorphism invariants used for advisory identification of
//! witness subgroups. Fingerprints never prove isomorphism; lookups
//! return None rather than guess.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::atlas;
use crate::classes::conjugacy_classes;
use crate::coset::quotient_group;
use crate::error::Result;
use crate::group::PermGroup;
use crate::structure::series::{derived_length, derived_subgroup, is_supersolvable};
use crate::subgrp::SubgroupRef;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: u128,
    /// element order -> count
    pub histogram: BTreeMap<u128, u128>,
    pub center_order: u128,
    /// None means non-solvable.
    pub derived_length: Option<u32>,
    pub is_supersolvable: bool,
    /// Invariant factors of the abelianization, largest first.
    pub abelianization: Vec<u128>,
}

pub fn fingerprint(g: &PermGroup) -> Result<Fingerprint> {
    let classes = conjugacy_classes(g, 1_000_000)?;
    let mut histogram: BTreeMap<u128, u128> = BTreeMap::new();
    let mut center_order = 0u128;
    for (cid, &rep) in classes.reps.iter().enumerate() {
        let ord = classes.elements[rep as usize].order()?;
        *histogram.entry(ord).or_insert(0) += classes.sizes[cid] as u128;
        if classes.sizes[cid] == 1 {
            center_order += 1;
        }
    }
    let dl = derived_length(g)?;
    let ss = is_supersolvable(g)?;
    let abelianization = abelian_invariants(g)?;
    Ok(Fingerprint {
        order: g.order(),
        histogram,
        center_order,
        derived_length: dl,
        is_supersolvable: ss,
        abelianization,
    })
}

/// Invariant factors of G/G' from element-order counts.
fn abelian_invariants(g: &PermGroup) -> Result<Vec<u128>> {
    let d = derived_subgroup(g)?;
    let index = g.order() / d.order();
    if index == 1 {
        return Ok(Vec::new());
    }
    let dref = SubgroupRef::new(g.clone(), d.group().clone())?;
    let q = quotient_group(g, &dref, 100_000)?.quotient;
    // per prime: lambda partition from counts of elements killed by p^i
    let elems = q.elements(1_000_000)?;
    let orders: Vec<u128> = elems
        .iter()
        .map(|e| e.order())
        .collect::<Result<Vec<_>>>()?;
    let mut per_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for p in crate::structure::series::prime_divisors(index) {
        // exponents e_j: count of invariant factors with p-part >= p^j
        let mut exps: Vec<u32> = Vec::new();
        let mut prev_count = 1u128; // elements of order dividing p^0
        let mut j = 1u32;
        loop {
            let pj = (p as u128).pow(j);
            let count = orders.iter().filter(|&&o| pj.is_multiple_of(o)).count() as u128;
            if count == prev_count {
                break;
            }
            // number of cyclic factors with p-exponent >= j
            let ratio = count / prev_count;
            let k = (ratio as f64).log(p as f64).round() as u32;
            exps.push(k);
            prev_count = count;
            j += 1;
        }
        per_prime.insert(p, exps);
    }
    // merge: invariant factor i multiplies p^(number of layers >= i+1)
    let max_factors = per_prime
        .values()
        .map(|v| v.first().copied().unwrap_or(0))
        .max()
        .unwrap_or(0);
    let mut factors = vec![1u128; max_factors as usize];
    for (p, exps) in per_prime {
        for (fi, f) in factors.iter_mut().enumerate() {
            let e: u32 = exps.iter().filter(|&&layer| layer > fi as u32).count() as u32;
            *f *= (p as u128).pow(e);
        }
    }
    factors.sort_unstable_by(|a, b| b.cmp(a));
    Ok(factors)
}

struct NamedFingerprint {
    name: String,
    fp: Fingerprint,
}

static NAME_TABLE: OnceLock<Vec<NamedFingerprint>> = OnceLock::new();

fn name_table() -> &'static [NamedFingerprint] {
    NAME_TABLE.get_or_init(|| {
        let mut raw: Vec<(String, PermGroup)> = Vec::new();
        raw.push(("Sym(4)".to_string(), atlas::sym(4).unwrap()));
        raw.push((
            "Sym(4)xC2".to_string(),
            atlas::direct_product(&atlas::sym(4).unwrap(), &atlas::cyclic(2).unwrap()).unwrap(),
        ));
        raw.push(("Alt(4)".to_string(), atlas::alt(4).unwrap()));
        for n in 3..=18u64 {
            raw.push((format!("D{}", 2 * n), atlas::dihedral(n).unwrap()));
        }
        raw.push(("C7:C6".to_string(), atlas::agl1(7).unwrap()));
        raw.push(("F20".to_string(), atlas::agl1(5).unwrap()));
        raw.push(("F56".to_string(), atlas::agl1(8).unwrap()));
        raw.push((
            "Sym(3)xSym(2)".to_string(),
            atlas::direct_product(&atlas::sym(3).unwrap(), &atlas::sym(2).unwrap()).unwrap(),
        ));
        // merge entries whose fingerprints coincide (isomorphic table
        // members such as D12 and Sym(3)xSym(2)) into one honest label
        let mut table: Vec<NamedFingerprint> = Vec::new();
        for (name, g) in raw {
            let fp = fingerprint(&g).expect("reference fingerprint");
            if let Some(existing) = table.iter_mut().find(|e| e.fp == fp) {
                existing.name = format!("{} = {}", existing.name, name);
            } else {
                table.push(NamedFingerprint { name, fp });
            }
        }
        table
    })
}

/// Advisory name lookup; None when nothing matches (the table is
/// fingerprint-deduplicated, so a hit is unique).
pub fn fingerprint_name(fp: &Fingerprint) -> Option<String> {
    let hits: Vec<&NamedFingerprint> = name_table().iter().filter(|e| &e.fp == fp).collect();
    match hits.len() {
        1 => Some(hits[0].name.clone()),
        _ => None,
    }
}
