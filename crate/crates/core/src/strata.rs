//! Finest strata of the Demazure (`iota`) and opposite Demazure (`kappa`)
//! filtrations.

use crate::demazure::{in_opposite_demazure_fmax, min_opposite_split};
use crate::error::{Error, Result};
use crate::lusztig::LusztigDatum;
use crate::root::RootDatum;
use crate::weyl::WeylElement;
use crate::words::{self, hecke_product, subword_products};

fn zero_letters(p: &LusztigDatum) -> Vec<u8> {
    p.word()
        .letters()
        .iter()
        .zip(p.n())
        .filter(|(_, &v)| v == 0)
        .map(|(&a, _)| a)
        .collect()
}

/// The Bruhat minimum of a finite set, verified to be a minimum.
pub fn bruhat_min<'a>(d: &RootDatum, set: impl IntoIterator<Item = &'a WeylElement>) -> Result<WeylElement> {
    let all: Vec<&WeylElement> = set.into_iter().collect();
    let cand = all
        .iter()
        .min_by_key(|w| w.length())
        .ok_or_else(|| Error::Invariant("empty set has no minimum".into()))?;
    if all.iter().all(|z| d.bruhat_le(cand, z)) {
        Ok((*cand).clone())
    } else {
        Err(Error::Invariant("set has no Bruhat minimum".into()))
    }
}

/// The Bruhat maximum of a finite set, verified to be a maximum.
pub fn bruhat_max<'a>(d: &RootDatum, set: impl IntoIterator<Item = &'a WeylElement>) -> Result<WeylElement> {
    let all: Vec<&WeylElement> = set.into_iter().collect();
    let cand = all
        .iter()
        .max_by_key(|w| w.length())
        .ok_or_else(|| Error::Invariant("empty set has no maximum".into()))?;
    if all.iter().all(|z| d.bruhat_le(z, cand)) {
        Ok((*cand).clone())
    } else {
        Err(Error::Invariant("set has no Bruhat maximum".into()))
    }
}

/// `W(P, i) = { s_{i_{a_1}} ... s_{i_{a_l}} w0 }` over zero-supported position sequences.
pub fn w_set(p: &LusztigDatum) -> Vec<WeylElement> {
    let d = p.datum();
    let allowed: Vec<bool> = p.n().iter().map(|&v| v == 0).collect();
    subword_products(d, p.word().letters(), &allowed)
        .into_iter()
        .map(|u| d.mul(&u, d.longest()))
        .collect()
}

/// `min W(P, i)` on the datum's own word, before any coset reduction.
pub fn min_w_set(p: &LusztigDatum) -> Result<WeylElement> {
    bruhat_min(p.datum(), w_set(p).iter())
}

/// `iota(P) = min W(P, i)`, reduced to `W^lambda_min` for a highest-weight base.
pub fn iota(p: &LusztigDatum) -> Result<WeylElement> {
    let d = p.datum();
    let z = min_w_set(p)?;
    Ok(match p.lambda() {
        Some(l) => d.coset_min(&z, &d.stabilizer_indices(l)),
        None => z,
    })
}

/// `iota(P) = D w0` with `D` the 0-Hecke product of the zero-position letters.
pub fn iota_shortcut(p: &LusztigDatum) -> WeylElement {
    let d = p.datum();
    let z = d.mul(&hecke_product(d, &zero_letters(p)), d.longest());
    match p.lambda() {
        Some(l) => d.coset_min(&z, &d.stabilizer_indices(l)),
        None => z,
    }
}

/// `kappa(P) = max Y(P)` over every reduced word of `w0`; gated.
pub fn kappa_via_words(p: &LusztigDatum) -> Result<WeylElement> {
    let lambda = p.lambda().cloned().ok_or(Error::RequiresHighestWeight)?;
    let d = p.datum();
    let all = words::reduced_words_of_w0(d)?;
    let mut cands = Vec::with_capacity(all.len());
    for word in all.iter() {
        let split = min_opposite_split(p, &lambda, word)?;
        let prefix = d.element_from_word(&word.letters()[..split])?;
        cands.push(d.mul(&prefix, d.longest()));
    }
    cands.sort();
    cands.dedup();
    bruhat_max(d, cands.iter())
}

/// `kappa(P) = max { z in W^lambda_max : P in MV^z }`. The members form a
/// Bruhat lower set with a unique maximum, so the longest member among the
/// maximal coset representatives (one per orbit point) is `kappa`.
pub fn kappa_by_predicate(p: &LusztigDatum) -> Result<WeylElement> {
    let lambda = p.lambda().cloned().ok_or(Error::RequiresHighestWeight)?;
    let d = p.datum();
    let j = d.stabilizer_indices(&lambda);
    let mut reps: Vec<WeylElement> = d
        .orbit_min_reps(&lambda)?
        .into_iter()
        .map(|(_, u)| d.coset_max(&u, &j))
        .collect();
    reps.sort_by(|a, b| b.length().cmp(&a.length()).then(a.cmp(b)));
    for z in &reps {
        if in_opposite_demazure_fmax(p, z)?.member {
            return Ok(z.clone());
        }
    }
    Err(Error::Invariant("no opposite Demazure crystal contains the element".into()))
}

/// `kappa(P)`: through all reduced words when they are enumerable, otherwise
/// through the membership predicate.
pub fn kappa(p: &LusztigDatum) -> Result<WeylElement> {
    match kappa_via_words(p) {
        Err(Error::SizeGate { .. }) => kappa_by_predicate(p),
        other => other,
    }
}

/// `iota(P*) = iota(P)^{-1}` on `B(inf)`.
pub fn check_iota_star(p: &LusztigDatum) -> Result<bool> {
    if !p.base().is_infinity() {
        return Err(Error::RequiresInfinity);
    }
    let d = p.datum();
    let s = p.star()?;
    Ok(iota(&s)? == d.inverse(&iota(p)?))
}
