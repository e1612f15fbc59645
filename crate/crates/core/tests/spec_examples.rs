//! End-to-end checks of the documented behaviors of the kernel operations,
//! with independent oracles (breadth-first closures, exhaustive scans)
//! where a computed value is asserted.

use std::collections::HashSet;

use stabkit::atlas;
use stabkit::coset::{coset_action, quotient_group};
use stabkit::group::PermGroup;
use stabkit::perm::{perm_from_cycles, Perm};
use stabkit::structure::fingerprint::fingerprint;
use stabkit::structure::lattice::{is_maximal, maximal_classes_full, GroupContext};
use stabkit::structure::series::chief_series;
use stabkit::structure::sylow::sylow_subgroup;
use stabkit::subgrp::{intersection, normalizer, SubgroupRef};

/// Independent oracle: breadth-first closure over generators.
fn bfs_count(degree: u32, gens: &[Perm], cap: usize) -> usize {
    let mut set: HashSet<Perm> = HashSet::new();
    let mut queue = vec![Perm::identity(degree)];
    set.insert(queue[0].clone());
    let mut head = 0;
    while head < queue.len() {
        let e = queue[head].clone();
        head += 1;
        for g in gens {
            let n = e.compose(g);
            if set.insert(n.clone()) {
                queue.push(n);
                assert!(set.len() <= cap);
            }
        }
    }
    set.len()
}

#[test]
fn psl2_8_order_matches_bfs_closure() {
    let g = atlas::psl2(8).unwrap();
    assert_eq!(g.order(), bfs_count(9, g.generators(), 600) as u128);
    assert_eq!(g.order(), 504);
}

#[test]
fn pgammal2_8_order_matches_bfs_closure() {
    let g = atlas::pgammal2(8).unwrap();
    assert_eq!(g.order(), bfs_count(9, g.generators(), 1600) as u128);
    assert_eq!(g.order(), 1512);
}

#[test]
fn psl2_simplicity_sweep() {
    // order formula and simplicity for every q in the working range
    for q in [4u64, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27] {
        let g = atlas::psl2(q).unwrap();
        let d = if q % 2 == 0 { 1 } else { 2 };
        assert_eq!(
            g.order(),
            (q as u128) * ((q * q - 1) as u128) / d,
            "q={}",
            q
        );
        assert!(
            stabkit::classes::is_simple_by_normal_closure(&g, 1_000_000).unwrap(),
            "psl2({}) must be simple",
            q
        );
    }
}

#[test]
fn coset_action_degrees_from_the_text() {
    // Alt(5) on the cosets of Alt(4): degree 5
    let a5 = atlas::alt(5).unwrap();
    let a4 = a5.point_stabilizer(0).unwrap();
    let act = coset_action(&a5, &SubgroupRef::new(a5.clone(), a4).unwrap()).unwrap();
    assert_eq!(act.action_degree, 5);

    // PSL2(8) on the cosets of its order-56 Frobenius subgroup: degree 9
    let g = atlas::psl2(8).unwrap();
    let f56 = normalizer(&g, sylow_subgroup(&g, 2, 0).unwrap().group()).unwrap();
    assert_eq!(f56.order(), 56);
    let act = coset_action(
        &g,
        &SubgroupRef::new(g.clone(), f56.group().clone()).unwrap(),
    )
    .unwrap();
    assert_eq!(act.action_degree, 9);

    // Sym(5) wr C2 on the cosets of (Sym(3) x Sym(2)) wr C2: degree 100
    let s5 = atlas::sym(5).unwrap();
    let w = atlas::wreath_product(&s5, &atlas::cyclic(2).unwrap()).unwrap();
    let h = PermGroup::from_generators(
        5,
        vec![
            perm_from_cycles(5, &[&[0, 1]]),
            perm_from_cycles(5, &[&[0, 1, 2]]),
            perm_from_cycles(5, &[&[3, 4]]),
        ],
    )
    .unwrap();
    let mut hw_gens: Vec<Perm> = Vec::new();
    for g0 in h.generators() {
        for copy in 0..2u32 {
            let mut img: Vec<u32> = (0..10).collect();
            for i in 0..5 {
                img[(copy * 5 + i) as usize] = copy * 5 + g0.apply(i);
            }
            hw_gens.push(Perm::from_images(img).unwrap());
        }
    }
    hw_gens.push(atlas::wreath_swap(5));
    let hw = PermGroup::from_generators(10, hw_gens).unwrap();
    let act = coset_action(&w, &SubgroupRef::new(w.clone(), hw).unwrap()).unwrap();
    assert_eq!(act.action_degree, 100);
}

#[test]
fn normalizer_of_sylow11_in_psl2_11_has_order_55() {
    let g = atlas::psl2(11).unwrap();
    let syl = sylow_subgroup(&g, 11, 0).unwrap();
    let n = normalizer(&g, syl.group()).unwrap();
    assert_eq!(n.order(), 55);
}

#[test]
fn diagonal_meets_factors_trivially() {
    let a5 = atlas::alt(5).unwrap();
    let d = atlas::diagonal_subgroup(&a5).unwrap();
    // Alt(5) x 1 inside the product
    let mut gens = Vec::new();
    for p in a5.generators() {
        let mut img: Vec<u32> = (0..10).collect();
        for i in 0..5 {
            img[i as usize] = p.apply(i);
        }
        gens.push(Perm::from_images(img).unwrap());
    }
    let left = PermGroup::from_generators(10, gens).unwrap();
    let meet = intersection(d.ambient(), d.group(), &left).unwrap();
    assert_eq!(meet.order(), 1);
}

#[test]
fn nla_quotient_by_base_has_order_4() {
    let g = atlas::nla_group().unwrap();
    let a5 = atlas::alt(5).unwrap();
    let mut n_gens = Vec::new();
    for p in a5.generators() {
        let mut img: Vec<u32> = (0..10).collect();
        for i in 0..5 {
            img[i as usize] = p.apply(i);
        }
        n_gens.push(Perm::from_images(img).unwrap());
        let mut img2: Vec<u32> = (0..10).collect();
        for i in 0..5 {
            img2[(5 + i) as usize] = 5 + p.apply(i);
        }
        n_gens.push(Perm::from_images(img2).unwrap());
    }
    let n = PermGroup::from_generators(10, n_gens).unwrap();
    assert_eq!(n.order(), 3600);
    let q = quotient_group(&g, &SubgroupRef::new(g.clone(), n).unwrap(), 100).unwrap();
    assert_eq!(q.quotient.order(), 4);
}

#[test]
fn wreath_base_is_normal_with_top_quotient_fingerprint() {
    let a = atlas::sym(3).unwrap();
    let b = atlas::cyclic(2).unwrap();
    let w = atlas::wreath_product(&a, &b).unwrap();
    // base subgroup: copies of A in both coordinates
    let mut gens = Vec::new();
    for p in a.generators() {
        for copy in 0..2u32 {
            let mut img: Vec<u32> = (0..6).collect();
            for i in 0..3 {
                img[(copy * 3 + i) as usize] = copy * 3 + p.apply(i);
            }
            gens.push(Perm::from_images(img).unwrap());
        }
    }
    let base = PermGroup::from_generators(6, gens).unwrap();
    assert_eq!(base.order(), 36);
    let bref = SubgroupRef::new(w.clone(), base).unwrap();
    assert!(bref.is_normal().unwrap());
    let q = quotient_group(&w, &bref, 100).unwrap();
    assert_eq!(fingerprint(&q.quotient).unwrap(), fingerprint(&b).unwrap());
}

#[test]
fn primitivity_iff_point_stabilizer_maximal_on_small_transitive_groups() {
    // cross-check over the transitive corpus members of degree <= 8
    let corpus = stabkit::verify::corpus::property_corpus().unwrap();
    let mut exercised = 0;
    for (name, g) in corpus {
        if g.degree() > 8 || !g.is_transitive() || g.order() < 2 {
            continue;
        }
        let stab = g.point_stabilizer(0).unwrap();
        let prim = stabkit::blocks::is_primitive(&g).unwrap();
        let stab_maximal = if stab.order() == g.order() {
            // degree 1 never happens here
            unreachable!()
        } else {
            is_maximal(&g, &stab).unwrap()
        };
        assert_eq!(prim, stab_maximal, "{}", name);
        exercised += 1;
    }
    assert!(exercised >= 15);
}

#[test]
fn chief_factors_are_characteristically_simple_orders() {
    let simple_orders: [u128; 5] = [60, 168, 360, 504, 660];
    let is_prime_power = |mut n: u128| {
        let mut d = 2u128;
        while d * d <= n {
            if n % d == 0 {
                while n % d == 0 {
                    n /= d;
                }
                return n == 1;
            }
            d += 1;
        }
        true
    };
    let groups = vec![
        atlas::sym(5).unwrap(),
        atlas::wreath_product(&atlas::sym(5).unwrap(), &atlas::cyclic(2).unwrap()).unwrap(),
        atlas::nla_group().unwrap(),
        atlas::pgammal2(8).unwrap(),
        atlas::sym(4).unwrap(),
    ];
    for g in groups {
        for f in chief_series(&g).unwrap().factors {
            let ok = is_prime_power(f.order)
                || simple_orders.iter().any(|&s| {
                    let mut m = f.order;
                    while m % s == 0 {
                        m /= s;
                    }
                    m == 1
                });
            assert!(ok, "chief factor order {} has the wrong shape", f.order);
        }
    }
}

#[test]
fn fingerprint_histogram_sums_to_order() {
    for g in [
        atlas::sym(4).unwrap(),
        atlas::psl2(7).unwrap(),
        atlas::quaternion8(),
    ] {
        let fp = fingerprint(&g).unwrap();
        let total: u128 = fp.histogram.values().sum();
        assert_eq!(total, g.order());
    }
}

#[test]
fn theorem_b_scan_is_seed_independent() {
    let a = stabkit::verify::theorem_ab::theorem_b_scan(700, 0);
    let b = stabkit::verify::theorem_ab::theorem_b_scan(700, 99);
    assert!(a.passed() && b.passed());
    assert_eq!(a.notes, b.notes);
}

#[test]
fn m11_has_index_11_and_psl33_index_13_maximals() {
    let m11 = atlas::m11().unwrap();
    let ctx = GroupContext::new(&m11, 1_000_000).unwrap();
    let maxi = stabkit::structure::lattice::maximal_classes_twogen(&ctx).unwrap();
    assert!(maxi
        .iter()
        .any(|c| c.index_in(&m11) == 11 && c.order == 720));

    let psl33 = atlas::psl3_3().unwrap();
    let ctx = GroupContext::new(&psl33, 1_000_000).unwrap();
    let maxi = stabkit::structure::lattice::maximal_classes_twogen(&ctx).unwrap();
    assert!(maxi.iter().any(|c| c.index_in(&psl33) == 13));
}

#[test]
fn alt5_maximal_profile_from_the_text() {
    let g = atlas::alt(5).unwrap();
    let ctx = GroupContext::new(&g, 1_000_000).unwrap();
    let maxi = maximal_classes_full(&ctx).unwrap();
    let mut orders: Vec<u128> = maxi.iter().map(|c| c.order).collect();
    orders.sort_unstable();
    assert_eq!(orders, vec![6, 10, 12]);
    let mut indices: Vec<u128> = maxi.iter().map(|c| c.index_in(&g)).collect();
    indices.sort_unstable();
    assert_eq!(indices, vec![5, 6, 10]);
}
