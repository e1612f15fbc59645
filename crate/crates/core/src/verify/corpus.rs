//! The fixed desk-scale corpus behind the property suites. Every member
//! has order at most 2000 so that full-lattice enumeration applies.

use crate::atlas;
use crate::error::Result;
use crate::group::PermGroup;

pub fn property_corpus() -> Result<Vec<(String, PermGroup)>> {
    let mut out: Vec<(String, PermGroup)> = Vec::new();
    for n in 1..=12u64 {
        out.push((format!("cyclic({})", n), atlas::cyclic(n)?));
    }
    for n in 3..=10u64 {
        out.push((format!("dihedral({})", n), atlas::dihedral(n)?));
    }
    out.push(("q8".to_string(), atlas::quaternion8()));
    out.push(("agl1(5)".to_string(), atlas::agl1(5)?));
    out.push(("agl1(7)".to_string(), atlas::agl1(7)?));
    out.push(("agl1(8)".to_string(), atlas::agl1(8)?));
    for n in 3..=6u64 {
        out.push((format!("sym({})", n), atlas::sym(n)?));
    }
    for n in 4..=6u64 {
        out.push((format!("alt({})", n), atlas::alt(n)?));
    }
    out.push(("psl2(7)".to_string(), atlas::psl2(7)?));
    out.push(("psl2(8)".to_string(), atlas::psl2(8)?));
    out.push(("psl2(11)".to_string(), atlas::psl2(11)?));
    out.push(("psl2(13)".to_string(), atlas::psl2(13)?));
    out.push(("pgl2(7)".to_string(), atlas::pgl2(7)?));
    out.push(("pgl2(9)".to_string(), atlas::pgl2(9)?));
    out.push(("pgammal2(8)".to_string(), atlas::pgammal2(8)?));
    out.push((
        "dp(sym(3),sym(3))".to_string(),
        atlas::direct_product(&atlas::sym(3)?, &atlas::sym(3)?)?,
    ));
    out.push((
        "dp(alt(4),cyclic(2))".to_string(),
        atlas::direct_product(&atlas::alt(4)?, &atlas::cyclic(2)?)?,
    ));
    out.push((
        "wr(cyclic(3),cyclic(2))".to_string(),
        atlas::wreath_product(&atlas::cyclic(3)?, &atlas::cyclic(2)?)?,
    ));
    out.push((
        "wr(cyclic(2),cyclic(3))".to_string(),
        atlas::wreath_product(&atlas::cyclic(2)?, &atlas::cyclic(3)?)?,
    ));
    out.push((
        "wr(cyclic(2),cyclic(4))".to_string(),
        atlas::wreath_product(&atlas::cyclic(2)?, &atlas::cyclic(4)?)?,
    ));
    out.push((
        "wr(sym(3),cyclic(2))".to_string(),
        atlas::wreath_product(&atlas::sym(3)?, &atlas::cyclic(2)?)?,
    ));
    debug_assert!(out.iter().all(|(_, g)| g.order() <= 2000));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_desk_scale() {
        let corpus = property_corpus().unwrap();
        assert!(corpus.len() >= 35);
        for (name, g) in &corpus {
            assert!(g.order() <= 2000, "{} too large", name);
        }
        // the named Hall and Doerk instances are present
        assert!(corpus.iter().any(|(n, _)| n == "sym(4)"));
        assert!(corpus.iter().any(|(n, _)| n == "alt(4)"));
    }
}
