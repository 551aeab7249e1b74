//! Membership in Demazure and opposite Demazure crystals, and extremal MV
//! polytopes.

use std::collections::HashMap;

use serde::Serialize;

use crate::bz;
use crate::error::{Error, Result};
use crate::lusztig::{element_key, Base, GgmsDatum, LusztigDatum};
use crate::root::{Coweight, RootDatum};
use crate::weyl::WeylElement;
use crate::words::{self, format_letters, min_subword, PositionSequence, ReducedWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ZeroSubword,
    OpVertex,
    FmaxChain,
    Polytopal,
    OracleInductive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// One-based positions on `word` holding zero entries and spelling `x w0`.
    Positions { word: String, positions: Vec<usize> },
    /// Vertices `mu_{w_l}` checked against `w_l w0 lambda`, keyed by element.
    Vertices { word: String, checked: Vec<(String, Vec<i64>)> },
    /// One-based colours of the `f^max` chain, in order of application.
    Chain { colours: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub member: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

fn zero_mask(p: &LusztigDatum) -> Vec<bool> {
    p.n().iter().map(|&v| v == 0).collect()
}

/// Demazure membership `P in MV_x`: `x w0` is spelled by a reduced subword
/// of the datum's word supported on zero entries. Works for both bases.
pub fn in_demazure(p: &LusztigDatum, x: &WeylElement) -> MembershipReport {
    let d = p.datum();
    let v = d.mul(x, d.longest());
    let allowed = zero_mask(p);
    let witness = min_subword(d, &v, p.word(), Some(&allowed));
    debug_assert_eq!(witness.is_some(), {
        let zeros: Vec<u8> = p
            .word()
            .letters()
            .iter()
            .zip(&allowed)
            .filter(|(_, &z)| z)
            .map(|(&a, _)| a)
            .collect();
        d.bruhat_le(&v, &words::hecke_product(d, &zeros))
    });
    MembershipReport {
        member: witness.is_some(),
        method: Method::ZeroSubword,
        witness: witness.map(|a| Witness::Positions {
            word: p.word().to_string(),
            positions: a.0.iter().map(|q| q + 1).collect(),
        }),
    }
}

/// The minimal zero-supported position sequence in `S(x w0, i)`, if any.
pub fn demazure_witness(p: &LusztigDatum, x: &WeylElement) -> Option<PositionSequence> {
    let d = p.datum();
    let v = d.mul(x, d.longest());
    min_subword(d, &v, p.word(), Some(&zero_mask(p)))
}

fn require_lambda(p: &LusztigDatum) -> Result<Coweight> {
    p.lambda().cloned().ok_or(Error::RequiresHighestWeight)
}

/// Opposite Demazure membership `P in MV^x`, via the vertex equalities
/// `mu_{w_l} = w_l w0 lambda` for `l >= l(x w0)` on a word through `x w0`.
pub fn in_opposite_demazure(p: &LusztigDatum, x: &WeylElement) -> Result<MembershipReport> {
    let lambda = require_lambda(p)?;
    let d = p.datum();
    let v = d.mul(x, d.longest());
    let (word, split) = words::word_through(d, &v);
    let member = opposite_on_word(p, &lambda, &word, split)?;
    let prefixes = word.prefixes(d);
    let checked = if member {
        (split..=word.len())
            .map(|l| {
                let t = d.act_coweight(&d.mul(&prefixes[l], d.longest()), &lambda);
                (element_key(d, &prefixes[l]), t.0)
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(MembershipReport {
        member,
        method: Method::OpVertex,
        witness: member.then(|| Witness::Vertices {
            word: word.to_string(),
            checked,
        }),
    })
}

/// The opposite Demazure condition on a chosen word `word` of `w0` whose
/// prefix of length `l(x w0)` spells `x w0`.
pub fn in_opposite_demazure_on(p: &LusztigDatum, x: &WeylElement, word: &ReducedWord) -> Result<bool> {
    let lambda = require_lambda(p)?;
    let d = p.datum();
    let v = d.mul(x, d.longest());
    let split = v.length();
    if d.element_from_word(&word.letters()[..split])? != v {
        return Err(Error::DifferentElements(
            format_letters(&word.letters()[..split]),
            element_key(d, &v),
        ));
    }
    opposite_on_word(p, &lambda, word, split)
}

/// Whether `mu_{w_l} = w_l w0 lambda` holds on `word` for every `l >= from`.
pub(crate) fn opposite_on_word(p: &LusztigDatum, lambda: &Coweight, word: &ReducedWord, from: usize) -> Result<bool> {
    let d = p.datum();
    let path = p.change_word(word)?.path_vertices();
    let prefixes = word.prefixes(d);
    Ok((from..=word.len())
        .all(|l| path[l] == d.act_coweight(&d.mul(&prefixes[l], d.longest()), lambda)))
}

/// Smallest `p` with `mu_{w_l} = w_l w0 lambda` for all `l >= p` on `word`.
pub(crate) fn min_opposite_split(p: &LusztigDatum, lambda: &Coweight, word: &ReducedWord) -> Result<usize> {
    let d = p.datum();
    let path = p.change_word(word)?.path_vertices();
    let prefixes = word.prefixes(d);
    let mut split = word.len();
    while split > 0 {
        let l = split - 1;
        if path[l] != d.act_coweight(&d.mul(&prefixes[l], d.longest()), lambda) {
            break;
        }
        split = l;
    }
    Ok(split)
}

/// Opposite Demazure membership through the chain
/// `f^max_{i_p} ... f^max_{i_1} P = P_{w0 lambda}` with `s_{i_p} ... s_{i_1} x = w0`.
pub fn in_opposite_demazure_fmax(p: &LusztigDatum, x: &WeylElement) -> Result<MembershipReport> {
    let lambda = require_lambda(p)?;
    let d = p.datum();
    let mut y = x.clone();
    let mut cur = p.clone();
    let mut colours = Vec::new();
    while y != *d.longest() {
        let j = (0..d.rank())
            .find(|&j| !d.is_left_descent(j, &y))
            .expect("non-longest element has a left ascent");
        let next = d.mul_simple_left(j, &y);
        if next.length() != y.length() + 1 {
            return Err(Error::Invariant("f^max chain did not increase the length".into()));
        }
        cur = cur.f_max(j)?;
        colours.push(j + 1);
        y = next;
    }
    let lowest = LusztigDatum::lowest(d, &lambda)?;
    let member = cur.canonical_n() == lowest.canonical_n();
    Ok(MembershipReport {
        member,
        method: Method::FmaxChain,
        witness: Some(Witness::Chain { colours }),
    })
}

/// Opposite Demazure membership as containment of the extremal polytope.
pub fn in_opposite_demazure_polytopal(p: &LusztigDatum, x: &WeylElement) -> Result<MembershipReport> {
    let lambda = require_lambda(p)?;
    let ext = extremal(p.datum(), x, &lambda)?;
    Ok(MembershipReport {
        member: bz::contains(p, &ext)?,
        method: Method::Polytopal,
        witness: None,
    })
}

/// The path `xi_0, ..., xi_m` of the extremal polytope `P_{x lambda}` along `word`.
pub fn extremal_path(d: &RootDatum, x: &WeylElement, lambda: &Coweight, word: &ReducedWord) -> Result<(Vec<Coweight>, Vec<i64>)> {
    d.check_dominant(lambda)?;
    let word = ReducedWord::longest(d, word.0.clone())?;
    let keep = words::min_s(d, x, &word);
    let in_min: Vec<bool> = {
        let mut f = vec![false; word.len()];
        for &a in keep.positions() {
            f[a] = true;
        }
        f
    };
    let prefixes = word.prefixes(d);
    let m = word.len();
    let mut xi = vec![Coweight::zero(d.rank()); m + 1];
    let mut n = vec![0i64; m];
    xi[m] = lambda.clone();
    for l in (1..=m).rev() {
        if in_min[l - 1] {
            xi[l - 1] = xi[l].clone();
            continue;
        }
        // s_beta xi = xi - <beta, xi> beta^vee with beta^vee = w_{l-1} h_{i_l}.
        let w = &prefixes[l - 1];
        let coroot = d.act_coweight(w, &d.simple_coroot(word.0[l - 1] as usize));
        let pulled = d.act_coweight(&d.inverse(w), &xi[l]);
        let c = d.alpha_pair(word.0[l - 1] as usize, &pulled);
        if c < 0 {
            return Err(Error::Invariant(format!(
                "negative extremal edge at position {l} of {word}"
            )));
        }
        n[l - 1] = c;
        xi[l - 1] = &xi[l] - &(c * &coroot);
    }
    Ok((xi, n))
}

/// The extremal MV polytope `P_{x lambda}` expressed on `word`.
pub fn extremal_on(d: &RootDatum, x: &WeylElement, lambda: &Coweight, word: &ReducedWord) -> Result<LusztigDatum> {
    let (_, n) = extremal_path(d, x, lambda, word)?;
    LusztigDatum::new(d, word.clone(), n, Base::Highest(lambda.clone()))
}

/// The extremal MV polytope `P_{x lambda}` on the reference word.
pub fn extremal(d: &RootDatum, x: &WeylElement, lambda: &Coweight) -> Result<LusztigDatum> {
    extremal_on(d, x, lambda, &ReducedWord(d.reference_word().to_vec()))
}

/// GGMS datum of `P_{x lambda}` built from the extremal paths along words
/// through every group element; fails if two words disagree on a vertex.
pub fn extremal_vertices(d: &RootDatum, x: &WeylElement, lambda: &Coweight) -> Result<GgmsDatum> {
    let group = d.weyl_group()?;
    let mut map: HashMap<WeylElement, Coweight> = HashMap::with_capacity(group.len());
    for w in group.elements() {
        if map.contains_key(w) {
            continue;
        }
        let (word, _) = words::word_through(d, w);
        let (xi, _) = extremal_path(d, x, lambda, &word)?;
        for (u, mu) in word.prefixes(d).into_iter().zip(xi) {
            match map.get(&u) {
                Some(prev) if *prev != mu => {
                    return Err(Error::Invariant(format!(
                        "extremal vertex at {} depends on the word",
                        format_letters(&d.lexmin_word(&u))
                    )))
                }
                Some(_) => {}
                None => {
                    map.insert(u, mu);
                }
            }
        }
    }
    Ok(GgmsDatum::from_map(map))
}
