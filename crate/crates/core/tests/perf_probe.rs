use stabkit::atlas;
use stabkit::structure::lattice::{maximal_classes_twogen, GroupContext};

#[test]
#[ignore]
fn probe_twogen_psl227() {
    let t0 = std::time::Instant::now();
    let g = atlas::psl2(27).unwrap();
    let ctx = GroupContext::new(&g, 1_000_000).unwrap();
    println!("ctx built in {:?}", t0.elapsed());
    let t1 = std::time::Instant::now();
    let maxi = maximal_classes_twogen(&ctx).unwrap();
    println!("twogen in {:?}", t1.elapsed());
    for c in &maxi {
        println!(
            "maximal class order {} index {}",
            c.order,
            g.order() / c.order
        );
    }
}

#[test]
#[ignore]
fn probe_twogen_m11() {
    let g = atlas::m11().unwrap();
    let t0 = std::time::Instant::now();
    let ctx = GroupContext::new(&g, 1_000_000).unwrap();
    let maxi = maximal_classes_twogen(&ctx).unwrap();
    println!("m11 twogen total {:?}", t0.elapsed());
    for c in &maxi {
        println!(
            "maximal class order {} index {}",
            c.order,
            g.order() / c.order
        );
    }
}
