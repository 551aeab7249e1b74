//! Oracle-equivalence suites run by `mvc selftest`.

use std::fmt;

use mvcrystal::demazure::{in_demazure, in_opposite_demazure, in_opposite_demazure_fmax, in_opposite_demazure_polytopal};
use mvcrystal::graph::generate_crystal;
use mvcrystal::oracle::{oracle_demazure_set, oracle_opposite_set, StrataOracle};
use mvcrystal::strata::{iota, iota_shortcut, kappa};
use mvcrystal::{Result, RootDatum};

pub struct Suite {
    pub name: String,
    pub checked: usize,
    pub discrepancies: usize,
    pub ok: bool,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} checks, {} discrepancies",
            if self.ok { "ok  " } else { "FAIL" },
            self.name,
            self.checked,
            self.discrepancies
        )
    }
}

fn suite(name: String, checked: usize, discrepancies: usize) -> Suite {
    Suite {
        name,
        checked,
        discrepancies,
        ok: discrepancies == 0,
    }
}

/// Demazure, opposite Demazure and strata deciders against their oracles for
/// every dominant coweight with coordinates up to `max_coord`.
pub fn run(d: &RootDatum, max_coord: i64) -> Result<Vec<Suite>> {
    let group = d.weyl_group()?;
    let mut out = Vec::new();
    for lambda in d.dominant_coweights_in_box(max_coord) {
        let g = generate_crystal(d, &lambda)?;
        let (mut dem, mut opp, mut strata) = ((0, 0), (0, 0), (0, 0));
        for x in group.elements() {
            let dset = oracle_demazure_set(d, x, &lambda)?;
            let oset = oracle_opposite_set(d, x, &lambda)?;
            for p in g.elements() {
                dem.0 += 1;
                if in_demazure(p, x).member != dset.contains(p) {
                    dem.1 += 1;
                }
                let want = oset.contains(p);
                let got = [
                    in_opposite_demazure(p, x)?.member,
                    in_opposite_demazure_fmax(p, x)?.member,
                    in_opposite_demazure_polytopal(p, x)?.member,
                ];
                opp.0 += 1;
                if got.iter().any(|&m| m != want) {
                    opp.1 += 1;
                }
            }
        }
        let oracle = StrataOracle::new(d, &lambda)?;
        for p in g.elements() {
            strata.0 += 1;
            let i = iota(p)?;
            if iota_shortcut(p) != i || oracle.oracle_iota(p)? != i || oracle.oracle_kappa(p)? != kappa(p)? {
                strata.1 += 1;
            }
        }
        let tag = format!("{} lambda=({lambda})", d.name());
        out.push(suite(format!("{tag} demazure"), dem.0, dem.1));
        out.push(suite(format!("{tag} opposite"), opp.0, opp.1));
        out.push(suite(format!("{tag} strata"), strata.0, strata.1));
    }
    Ok(out)
}
