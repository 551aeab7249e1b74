//! Shared fixtures for the benchmarks.

use mvcrystal::graph::{generate_crystal, CrystalGraph};
use mvcrystal::{Coweight, RootDatum};

pub fn datum(name: &str) -> RootDatum {
    RootDatum::parse(name).expect("supported type")
}

/// The coroot of greatest height, whose crystal is the adjoint one.
pub fn highest_coroot(d: &RootDatum) -> Coweight {
    d.positive_coroots()
        .iter()
        .max_by_key(|c| c.0.iter().sum::<i64>())
        .expect("non-empty root system")
        .clone()
}

pub fn adjoint_crystal(name: &str) -> CrystalGraph {
    let d = datum(name);
    let l = highest_coroot(&d);
    generate_crystal(&d, &l).expect("adjoint crystal is small")
}
