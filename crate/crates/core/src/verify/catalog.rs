//! Embedded catalog of the sixteen non-abelian simple groups of order at
//! most 10,000, with the expected hypothesis verdict and, for failing
//! groups, one expected violating witness (order, index). The scan treats
//! any disagreement with this table as failure; the table is never updated
//! silently.

use crate::atlas;
use crate::error::Result;
use crate::group::PermGroup;

pub struct SimpleCatalogEntry {
    pub name: &'static str,
    pub expr: &'static str,
    pub order: u128,
    pub expected_pass: bool,
    /// (order, index) of one hypothesis-violating maximal subgroup.
    pub expected_witness: Option<(u128, u128)>,
}

pub const SIMPLE_CATALOG: [SimpleCatalogEntry; 16] = [
    SimpleCatalogEntry {
        name: "Alt(5) = PSL2(4) = PSL2(5)",
        expr: "alt(5)",
        order: 60,
        expected_pass: true,
        expected_witness: None,
    },
    SimpleCatalogEntry {
        name: "PSL2(7) = PSL3(2)",
        expr: "psl2(7)",
        order: 168,
        expected_pass: true,
        expected_witness: None,
    },
    SimpleCatalogEntry {
        name: "Alt(6) = PSL2(9)",
        expr: "alt(6)",
        order: 360,
        expected_pass: false,
        expected_witness: Some((60, 6)),
    },
    SimpleCatalogEntry {
        name: "PSL2(8)",
        expr: "psl2(8)",
        order: 504,
        expected_pass: true,
        expected_witness: None,
    },
    SimpleCatalogEntry {
        name: "PSL2(11)",
        expr: "psl2(11)",
        order: 660,
        expected_pass: true,
        expected_witness: None,
    },
    SimpleCatalogEntry {
        name: "PSL2(13)",
        expr: "psl2(13)",
        order: 1092,
        expected_pass: false,
        expected_witness: Some((12, 91)),
    },
    SimpleCatalogEntry {
        name: "PSL2(17)",
        expr: "psl2(17)",
        order: 2448,
        expected_pass: false,
        expected_witness: Some((24, 102)),
    },
    SimpleCatalogEntry {
        name: "Alt(7)",
        expr: "alt(7)",
        order: 2520,
        expected_pass: false,
        expected_witness: Some((120, 21)),
    },
    SimpleCatalogEntry {
        name: "PSL2(19)",
        expr: "psl2(19)",
        order: 3420,
        expected_pass: false,
        expected_witness: Some((60, 57)),
    },
    SimpleCatalogEntry {
        name: "PSL2(16)",
        expr: "psl2(16)",
        order: 4080,
        expected_pass: false,
        expected_witness: Some((60, 68)),
    },
    SimpleCatalogEntry {
        name: "PSL3(3)",
        expr: "psl3_3",
        order: 5616,
        expected_pass: false,
        expected_witness: Some((24, 234)),
    },
    SimpleCatalogEntry {
        name: "PSU3(3)",
        expr: "psu3_3",
        order: 6048,
        expected_pass: false,
        expected_witness: Some((168, 36)),
    },
    SimpleCatalogEntry {
        name: "PSL2(23)",
        expr: "psl2(23)",
        order: 6072,
        expected_pass: false,
        expected_witness: Some((24, 253)),
    },
    SimpleCatalogEntry {
        name: "PSL2(25)",
        expr: "psl2(25)",
        order: 7800,
        expected_pass: false,
        expected_witness: Some((120, 65)),
    },
    SimpleCatalogEntry {
        name: "M11",
        expr: "m11",
        order: 7920,
        expected_pass: false,
        expected_witness: Some((660, 12)),
    },
    SimpleCatalogEntry {
        name: "PSL2(27)",
        expr: "psl2(27)",
        order: 9828,
        expected_pass: false,
        expected_witness: Some((351, 28)),
    },
];

impl SimpleCatalogEntry {
    pub fn construct(&self) -> Result<PermGroup> {
        match self.expr {
            "alt(5)" => atlas::alt(5),
            "alt(6)" => atlas::alt(6),
            "alt(7)" => atlas::alt(7),
            "psl3_3" => atlas::psl3_3(),
            "psu3_3" => atlas::psu3_3(),
            "m11" => atlas::m11(),
            expr => {
                let q: u64 = expr
                    .trim_start_matches("psl2(")
                    .trim_end_matches(')')
                    .parse()
                    .expect("catalog expr");
                atlas::psl2(q)
            }
        }
    }
}
