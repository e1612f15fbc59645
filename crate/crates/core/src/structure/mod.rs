//! Structural algorithms: series, solvability, supersolvability, Sylow
//! machinery, subgroup lattices, maximal subgroups and fingerprints.

pub mod fingerprint;
pub mod lattice;
pub mod series;
pub mod sylow;
