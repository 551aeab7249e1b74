//! Brute-force counterparts of the decision procedures: inductive Demazure
//! and opposite Demazure sets, exhaustive subsequence search, and strata
//! computed from their subtraction definitions.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::lusztig::{Base, LusztigDatum};
use crate::root::{Coweight, RootDatum};
use crate::weyl::WeylElement;
use crate::words::{self, ReducedWord};

/// A set of crystal elements, identified by their vectors on the reference word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    datum: RootDatum,
    base: Base,
    keys: BTreeSet<Vec<i64>>,
}

impl ElementSet {
    pub fn new(datum: &RootDatum, base: Base) -> Self {
        ElementSet {
            datum: datum.clone(),
            base,
            keys: BTreeSet::new(),
        }
    }

    pub fn singleton(p: &LusztigDatum) -> Self {
        let mut s = Self::new(p.datum(), p.base().clone());
        s.insert(p);
        s
    }

    pub fn insert(&mut self, p: &LusztigDatum) -> bool {
        self.keys.insert(p.canonical_n())
    }

    pub fn contains(&self, p: &LusztigDatum) -> bool {
        *p.base() == self.base && self.keys.contains(&p.canonical_n())
    }

    pub fn contains_key(&self, key: &[i64]) -> bool {
        self.keys.contains(key)
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.keys.iter()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.keys.is_subset(&other.keys)
    }

    /// Elements expressed on the reference word.
    pub fn elements(&self) -> impl Iterator<Item = LusztigDatum> + '_ {
        let word = ReducedWord(self.datum.reference_word().to_vec());
        self.keys
            .iter()
            .map(move |k| LusztigDatum::from_parts(&self.datum, word.clone(), k.clone(), self.base.clone()))
    }

    fn check_gate(&self) -> Result<()> {
        let limit = self.datum.limits().max_nodes;
        if self.keys.len() > limit {
            return Err(Error::SizeGate {
                what: "crystal elements",
                size: self.keys.len() as u128,
                limit: limit as u128,
            });
        }
        Ok(())
    }

    /// `union_{N >= 0} f_j^N S`.
    pub fn close_f(&self, j: usize) -> Result<ElementSet> {
        let mut out = self.clone();
        for p in self.elements() {
            let mut cur = p;
            while let Some(next) = cur.f(j) {
                out.insert(&next);
                out.check_gate()?;
                cur = next;
            }
        }
        Ok(out)
    }

    /// `union_{N >= 0} e_j^N S`.
    pub fn close_e(&self, j: usize) -> Result<ElementSet> {
        let mut out = self.clone();
        for p in self.elements() {
            let mut cur = p;
            while let Some(next) = cur.e(j) {
                out.insert(&next);
                cur = next;
            }
        }
        Ok(out)
    }
}

/// `B_x(lambda)` built from `B_e = {P_lambda}` along the given reduced word
/// `(j_1, ..., j_k)` of `x`, closing under `f_{j_k}` first.
pub fn oracle_demazure_set_along(d: &RootDatum, x_word: &ReducedWord, lambda: &Coweight) -> Result<ElementSet> {
    let mut set = ElementSet::singleton(&LusztigDatum::highest(d, lambda)?);
    for &j in x_word.letters().iter().rev() {
        set = set.close_f(j as usize)?;
    }
    Ok(set)
}

pub fn oracle_demazure_set(d: &RootDatum, x: &WeylElement, lambda: &Coweight) -> Result<ElementSet> {
    oracle_demazure_set_along(d, &ReducedWord(d.lexmin_word(x)), lambda)
}

/// `B^x(lambda)` by descending induction from `B^{w0} = {P_{w0 lambda}}`
/// through `B^x = union_N e_j^N B^{s_j x}` with `s_j x > x`.
pub fn oracle_opposite_set(d: &RootDatum, x: &WeylElement, lambda: &Coweight) -> Result<ElementSet> {
    let mut ascents = Vec::new();
    let mut y = x.clone();
    while y != *d.longest() {
        let j = (0..d.rank())
            .find(|&j| !d.is_left_descent(j, &y))
            .expect("non-longest element has a left ascent");
        ascents.push(j);
        y = d.mul_simple_left(j, &y);
    }
    let mut set = ElementSet::singleton(&LusztigDatum::lowest(d, lambda)?);
    for &j in ascents.iter().rev() {
        set = set.close_e(j)?;
    }
    Ok(set)
}

/// Condition (Dem.) by exhaustive search over `S(x w0, i)`.
pub fn demazure_by_subsequences(p: &LusztigDatum, x: &WeylElement) -> Result<bool> {
    let seqs = words::enumerate_s(p.datum(), x, p.word())?;
    Ok(seqs.iter().any(|a| a.positions().iter().all(|&q| p.n()[q] == 0)))
}

/// The same search over `S^(x w0, i)` (sequences of any length, not necessarily reduced).
pub fn demazure_by_s_hat(p: &LusztigDatum, x: &WeylElement) -> Result<bool> {
    let seqs = words::enumerate_s_hat(p.datum(), x, p.word())?;
    Ok(seqs.iter().any(|a| a.positions().iter().all(|&q| p.n()[q] == 0)))
}

/// Demazure and opposite Demazure sets for every minimal (resp. maximal)
/// coset representative, used to evaluate the strata by definition.
pub struct StrataOracle {
    datum: RootDatum,
    mins: Vec<(WeylElement, ElementSet)>,
    maxs: Vec<(WeylElement, ElementSet)>,
}

impl StrataOracle {
    pub fn new(d: &RootDatum, lambda: &Coweight) -> Result<Self> {
        let group = d.weyl_group()?;
        let j = d.stabilizer_indices(lambda);
        let mut mins = Vec::new();
        let mut maxs = Vec::new();
        let mut seen_min = HashMap::new();
        for w in group.elements() {
            let lo = d.coset_min(w, &j);
            if seen_min.insert(lo.clone(), ()).is_none() {
                let hi = d.coset_max(w, &j);
                mins.push((lo.clone(), oracle_demazure_set(d, &lo, lambda)?));
                maxs.push((hi.clone(), oracle_opposite_set(d, &hi, lambda)?));
            }
        }
        Ok(StrataOracle {
            datum: d.clone(),
            mins,
            maxs,
        })
    }

    pub fn demazure_sets(&self) -> &[(WeylElement, ElementSet)] {
        &self.mins
    }

    pub fn opposite_sets(&self) -> &[(WeylElement, ElementSet)] {
        &self.maxs
    }

    /// The unique `z` in `W^lambda_min` with `P in MV_z` minus `MV_{z'}` for all
    /// smaller `z'` in `W^lambda_min`.
    pub fn oracle_iota(&self, p: &LusztigDatum) -> Result<WeylElement> {
        let d = &self.datum;
        let member: Vec<&WeylElement> = self.mins.iter().filter(|(_, s)| s.contains(p)).map(|(z, _)| z).collect();
        let strata: Vec<&WeylElement> = member
            .iter()
            .copied()
            .filter(|z| !member.iter().any(|z2| z2 != z && d.bruhat_le(z2, z)))
            .collect();
        match strata.as_slice() {
            [z] => Ok((*z).clone()),
            _ => Err(Error::Invariant(format!("{} Demazure strata contain the element", strata.len()))),
        }
    }

    /// The unique `z` in `W^lambda_max` with `P in MV^z` minus `MV^{z'}` for all
    /// larger `z'` in `W^lambda_max`.
    pub fn oracle_kappa(&self, p: &LusztigDatum) -> Result<WeylElement> {
        let d = &self.datum;
        let member: Vec<&WeylElement> = self.maxs.iter().filter(|(_, s)| s.contains(p)).map(|(z, _)| z).collect();
        let strata: Vec<&WeylElement> = member
            .iter()
            .copied()
            .filter(|z| !member.iter().any(|z2| z2 != z && d.bruhat_le(z, z2)))
            .collect();
        match strata.as_slice() {
            [z] => Ok((*z).clone()),
            _ => Err(Error::Invariant(format!(
                "{} opposite Demazure strata contain the element",
                strata.len()
            ))),
        }
    }
}
