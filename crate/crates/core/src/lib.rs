//! Permutation group kernel and verification harness for maximal-subgroup
//! index properties of finite groups.

pub mod atlas;
pub mod blocks;
pub mod classes;
pub mod coset;
pub mod error;
pub mod field;
pub mod group;
pub mod parse;
pub mod perm;
pub mod report;
pub mod rng;
pub mod structure;
pub mod subgrp;
pub mod verify;

pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Perm;
pub use subgrp::SubgroupRef;
