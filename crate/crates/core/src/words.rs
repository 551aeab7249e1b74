//! Reduced words, braid moves between reduced words of `w0`, and subword
//! machinery (position sequences, minimal subwords, 0-Hecke products).
//!
//! Letters and positions are zero-based internally; `Display` impls and the
//! parsers use the one-based convention.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root::RootDatum;
use crate::weyl::WeylElement;

/// A sequence of zero-based simple-reflection indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord(pub Vec<u8>);

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

/// One-based, comma-separated.
pub fn format_letters(letters: &[u8]) -> String {
    letters
        .iter()
        .map(|a| (a + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses one-based comma-separated letters; `""` and `"e"` give the empty word.
pub fn parse_letters(d: &RootDatum, s: &str) -> Result<Vec<u8>> {
    let t = s.trim();
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|p| {
            let v: usize = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("`{p}` is not a letter in `{s}`")))?;
            if v == 0 || v > d.rank() {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    rank: d.rank(),
                });
            }
            Ok((v - 1) as u8)
        })
        .collect()
}

impl ReducedWord {
    pub fn new(d: &RootDatum, letters: Vec<u8>) -> Result<Self> {
        if !d.is_reduced_word(&letters) {
            return Err(Error::NotReduced(format_letters(&letters)));
        }
        Ok(ReducedWord(letters))
    }

    /// A reduced word of `w0`.
    pub fn longest(d: &RootDatum, letters: Vec<u8>) -> Result<Self> {
        let w = Self::new(d, letters)?;
        if w.len() != d.longest_length() {
            return Err(Error::NotLongestWord(w.to_string()));
        }
        Ok(w)
    }

    pub fn parse(d: &RootDatum, s: &str) -> Result<Self> {
        Self::new(d, parse_letters(d, s)?)
    }

    pub fn parse_longest(d: &RootDatum, s: &str) -> Result<Self> {
        Self::longest(d, parse_letters(d, s)?)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn target(&self, d: &RootDatum) -> WeylElement {
        d.element_from_word(&self.0).expect("letters in range")
    }

    /// `w_l = s_{i_1} ... s_{i_l}` for `l = 0..=len`.
    pub fn prefixes(&self, d: &RootDatum) -> Vec<WeylElement> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut w = d.identity();
        out.push(w.clone());
        for &a in &self.0 {
            w = d.mul_simple_right(&w, a as usize);
            out.push(w.clone());
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    Two,
    Three,
}

impl MoveKind {
    pub fn width(self) -> usize {
        match self {
            MoveKind::Two => 2,
            MoveKind::Three => 3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MoveKind::Two => "2-",
            MoveKind::Three => "3-",
        }
    }
}

/// A braid move acting on the block starting at the zero-based `offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub offset: usize,
}

impl Move {
    pub fn two(offset: usize) -> Self {
        Move {
            kind: MoveKind::Two,
            offset,
        }
    }

    pub fn three(offset: usize) -> Self {
        Move {
            kind: MoveKind::Three,
            offset,
        }
    }

    fn shifted(self, by: usize) -> Self {
        Move {
            kind: self.kind,
            offset: self.offset + by,
        }
    }
}

pub fn move_applicable(d: &RootDatum, letters: &[u8], mv: Move) -> bool {
    let k = mv.offset;
    match mv.kind {
        MoveKind::Two => {
            k + 2 <= letters.len() && {
                let (i, j) = (letters[k] as usize, letters[k + 1] as usize);
                i != j && d.cartan(i, j) == 0
            }
        }
        MoveKind::Three => {
            k + 3 <= letters.len() && {
                let (i, j) = (letters[k] as usize, letters[k + 1] as usize);
                letters[k + 2] as usize == i && d.cartan(i, j) == -1
            }
        }
    }
}

/// Applies a move in place; the caller guarantees applicability.
pub(crate) fn apply_move_in_place(letters: &mut [u8], mv: Move) {
    let k = mv.offset;
    match mv.kind {
        MoveKind::Two => letters.swap(k, k + 1),
        MoveKind::Three => {
            let (i, j) = (letters[k], letters[k + 1]);
            letters[k] = j;
            letters[k + 1] = i;
            letters[k + 2] = j;
        }
    }
}

pub fn apply_move(d: &RootDatum, word: &ReducedWord, mv: Move) -> Result<ReducedWord> {
    if !move_applicable(d, &word.0, mv) {
        return Err(Error::MoveNotApplicable {
            kind: mv.kind.name(),
            offset: mv.offset,
            word: word.to_string(),
        });
    }
    let mut out = word.clone();
    apply_move_in_place(&mut out.0, mv);
    Ok(out)
}

/// Replays moves, checking each one.
pub fn apply_moves(d: &RootDatum, word: &ReducedWord, moves: &[Move]) -> Result<ReducedWord> {
    let mut cur = word.clone();
    for &mv in moves {
        cur = apply_move(d, &cur, mv)?;
    }
    Ok(cur)
}

/// A sequence of braid moves transforming `src` into `dst`, which must be
/// reduced words of the same element. Paths are cached on the datum.
pub fn move_path(d: &RootDatum, src: &ReducedWord, dst: &ReducedWord) -> Result<Arc<[Move]>> {
    if src.len() != dst.len() || src.target(d) != dst.target(d) {
        return Err(Error::DifferentElements(src.to_string(), dst.to_string()));
    }
    let key = (src.0.clone(), dst.0.clone());
    if let Some(p) = d.inner().move_cache.lock().expect("cache lock").get(&key) {
        return Ok(p.clone());
    }
    let mut memo = HashMap::new();
    let path: Arc<[Move]> = transport(d, &src.0, &dst.0, &mut memo).as_slice().into();
    d.inner()
        .move_cache
        .lock()
        .expect("cache lock")
        .insert(key, path.clone());
    Ok(path)
}

type Memo = HashMap<(Vec<u8>, Vec<u8>), Arc<Vec<Move>>>;

/// Inductive transport: bring the first letter of `dst` to the front of
/// `src` through a braid block, then recurse on the tails.
fn transport(d: &RootDatum, src: &[u8], dst: &[u8], memo: &mut Memo) -> Arc<Vec<Move>> {
    if src == dst {
        return Arc::new(Vec::new());
    }
    let key = (src.to_vec(), dst.to_vec());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let mut out = Vec::new();
    if src[0] == dst[0] {
        out.extend(transport(d, &src[1..], &dst[1..], memo).iter().map(|m| m.shifted(1)));
    } else {
        let (i, j) = (src[0], dst[0]);
        let (block_i, block_j, mv): (Vec<u8>, Vec<u8>, Move) = if d.cartan(i as usize, j as usize) == 0 {
            (vec![i, j], vec![j, i], Move::two(0))
        } else {
            (vec![i, j, i], vec![j, i, j], Move::three(0))
        };
        let v = d.element_from_word(src).expect("letters in range");
        let delta = d.element_from_word(&block_i).expect("letters in range");
        let rest = d.lexmin_word(&d.mul(&delta, &v));
        let mut mid_i = block_i;
        mid_i.extend_from_slice(&rest);
        let mut mid_j = block_j;
        mid_j.extend_from_slice(&rest);
        out.extend(transport(d, &src[1..], &mid_i[1..], memo).iter().map(|m| m.shifted(1)));
        out.push(mv);
        out.extend(transport(d, &mid_j[1..], &dst[1..], memo).iter().map(|m| m.shifted(1)));
    }
    let p = Arc::new(out);
    memo.insert(key, p.clone());
    p
}

/// A reduced word of `w0` passing through `w`, with split index `l(w)`:
/// `lexmin(w) ++ lexmin(w^{-1} w0)`.
pub fn word_through(d: &RootDatum, w: &WeylElement) -> (ReducedWord, usize) {
    let mut letters = d.lexmin_word(w);
    let split = letters.len();
    let rest = d.mul(&d.inverse(w), d.longest());
    letters.extend(d.lexmin_word(&rest));
    (ReducedWord(letters), split)
}

/// The reduced word `(j) ++ lexmin(s_j w0)` of `w0`, cached per letter.
pub fn word_starting_with(d: &RootDatum, j: usize) -> &ReducedWord {
    let words = d.inner().words_from.get_or_init(|| {
        (0..d.rank())
            .map(|j| {
                let mut letters = vec![j as u8];
                letters.extend(d.lexmin_word(&d.mul_simple_left(j, d.longest())));
                ReducedWord(letters)
            })
            .collect()
    });
    &words[j]
}

/// Number of reduced words of `w`, by recursion over right descents.
pub fn count_reduced_words(d: &RootDatum, w: &WeylElement) -> u128 {
    fn go(d: &RootDatum, w: &WeylElement, memo: &mut HashMap<WeylElement, u128>) -> u128 {
        if w.is_identity() {
            return 1;
        }
        if let Some(&c) = memo.get(w) {
            return c;
        }
        let c = d
            .right_descents(w)
            .into_iter()
            .map(|j| go(d, &d.mul_simple_right(w, j), memo))
            .sum();
        memo.insert(w.clone(), c);
        c
    }
    go(d, w, &mut HashMap::new())
}

/// All reduced words of `w`, in lexicographic order.
pub fn reduced_words_of(d: &RootDatum, w: &WeylElement) -> Vec<ReducedWord> {
    fn go(d: &RootDatum, w: &WeylElement, suffix: &mut Vec<u8>, out: &mut Vec<ReducedWord>) {
        if w.is_identity() {
            out.push(ReducedWord(suffix.iter().rev().copied().collect()));
            return;
        }
        for j in d.right_descents(w) {
            suffix.push(j as u8);
            go(d, &d.mul_simple_right(w, j), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, w, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `R(w0)`, cached; gated by group order and by the exact word count.
pub fn reduced_words_of_w0(d: &RootDatum) -> Result<Arc<Vec<ReducedWord>>> {
    if let Some(words) = d.inner().all_words.get() {
        return Ok(words.clone());
    }
    let limits = d.limits();
    let order = d.group_order();
    if order > limits.max_rw0_group_order {
        return Err(Error::SizeGate {
            what: "reduced words of w0 (group order)",
            size: order,
            limit: limits.max_rw0_group_order,
        });
    }
    let count = count_reduced_words(d, d.longest());
    if count > limits.max_reduced_words {
        return Err(Error::SizeGate {
            what: "reduced words of w0",
            size: count,
            limit: limits.max_reduced_words,
        });
    }
    Ok(d.inner()
        .all_words
        .get_or_init(|| Arc::new(reduced_words_of(d, d.longest())))
        .clone())
}

/// The 0-Hecke (Demazure) product, folding `w * s_j = w s_j` if longer, else `w`.
pub fn hecke_product(d: &RootDatum, letters: &[u8]) -> WeylElement {
    let mut w = d.identity();
    for &a in letters {
        if !d.is_right_descent(&w, a as usize) {
            w = d.mul_simple_right(&w, a as usize);
        }
    }
    w
}

/// A strictly increasing sequence of zero-based positions in a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PositionSequence(pub Vec<usize>);

impl fmt::Display for PositionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| (a + 1).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl PositionSequence {
    /// From one-based positions.
    pub fn one_based(positions: &[usize]) -> Self {
        PositionSequence(positions.iter().map(|p| p - 1).collect())
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self, word: &ReducedWord) -> Vec<u8> {
        self.0.iter().map(|&p| word.0[p]).collect()
    }

    /// Strictly increasing, in range, and the letters form a reduced word of `target`.
    pub fn is_reduced_subword_for(&self, d: &RootDatum, word: &ReducedWord, target: &WeylElement) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
            && self.0.iter().all(|&p| p < word.len())
            && self.0.len() == target.length()
            && d.element_from_word(&self.letters(word)).ok().as_ref() == Some(target)
    }
}

/// Greedy lexicographically least reduced subword for `v` among the positions
/// flagged in `allowed` (all positions when `None`).
pub(crate) fn min_subword(
    d: &RootDatum,
    v: &WeylElement,
    word: &ReducedWord,
    allowed: Option<&[bool]>,
) -> Option<PositionSequence> {
    let m = word.len();
    let ok = |a: usize| allowed.is_none_or(|f| f[a]);
    // suffix[a] = 0-Hecke product of the allowed letters at positions >= a.
    let mut suffix = vec![d.identity(); m + 1];
    for a in (0..m).rev() {
        let j = word.0[a] as usize;
        suffix[a] = if ok(a) && !d.is_left_descent(j, &suffix[a + 1]) {
            d.mul_simple_left(j, &suffix[a + 1])
        } else {
            suffix[a + 1].clone()
        };
    }
    if !d.bruhat_le(v, &suffix[0]) {
        return None;
    }
    let mut rem = v.clone();
    let mut out = Vec::with_capacity(v.length());
    for a in 0..m {
        if rem.is_identity() {
            break;
        }
        let j = word.0[a] as usize;
        if ok(a) && d.is_left_descent(j, &rem) {
            let next = d.mul_simple_left(j, &rem);
            if d.bruhat_le(&next, &suffix[a + 1]) {
                out.push(a);
                rem = next;
            }
        }
    }
    debug_assert!(rem.is_identity());
    Some(PositionSequence(out))
}

/// `min S(x w0, i)`.
pub fn min_s(d: &RootDatum, x: &WeylElement, word: &ReducedWord) -> PositionSequence {
    let v = d.mul(x, d.longest());
    min_subword(d, &v, word, None).expect("x w0 <= w0 always has a reduced subword")
}

fn check_subword_gate(d: &RootDatum, word: &ReducedWord) -> Result<()> {
    let limit = d.limits().max_subword_len;
    if word.len() > limit {
        return Err(Error::SizeGate {
            what: "subsequence enumeration word length",
            size: word.len() as u128,
            limit: limit as u128,
        });
    }
    Ok(())
}

fn mask_positions(mask: u32, m: usize) -> Vec<usize> {
    (0..m).filter(|&k| mask >> k & 1 == 1).collect()
}

/// `S(x w0, i)`: position sequences whose letters are a reduced word of `x w0`.
pub fn enumerate_s(d: &RootDatum, x: &WeylElement, word: &ReducedWord) -> Result<Vec<PositionSequence>> {
    check_subword_gate(d, word)?;
    let v = d.mul(x, d.longest());
    let m = word.len();
    let mut out: Vec<PositionSequence> = (0u32..1 << m)
        .filter(|mask| mask.count_ones() as usize == v.length())
        .map(|mask| PositionSequence(mask_positions(mask, m)))
        .filter(|a| a.is_reduced_subword_for(d, word, &v))
        .collect();
    out.sort();
    Ok(out)
}

/// `S^(x w0, i)`: position sequences of any length whose letters multiply to `x w0`.
pub fn enumerate_s_hat(d: &RootDatum, x: &WeylElement, word: &ReducedWord) -> Result<Vec<PositionSequence>> {
    check_subword_gate(d, word)?;
    let v = d.mul(x, d.longest());
    let m = word.len();
    let mut out: Vec<PositionSequence> = (0u32..1 << m)
        .map(|mask| PositionSequence(mask_positions(mask, m)))
        .filter(|a| d.element_from_word(&a.letters(word)).expect("letters in range") == v)
        .collect();
    out.sort();
    Ok(out)
}

/// The bijection `S(x w0, src) -> S(x w0, apply_move(src, mv))` defined blockwise.
pub fn sigma_map(
    d: &RootDatum,
    a: &PositionSequence,
    src: &ReducedWord,
    mv: Move,
) -> Result<PositionSequence> {
    if !move_applicable(d, &src.0, mv) {
        return Err(Error::MoveNotApplicable {
            kind: mv.kind.name(),
            offset: mv.offset,
            word: src.to_string(),
        });
    }
    let target = d.element_from_word(&a.letters_checked(src)?).expect("letters in range");
    if !a.is_reduced_subword_for(d, src, &target) {
        return Err(Error::InvalidPositions(a.to_string()));
    }
    let k = mv.offset;
    let w = mv.kind.width();
    let inside: Vec<usize> = a.0.iter().filter(|&&p| p >= k && p < k + w).map(|&p| p - k).collect();
    let mapped: Vec<usize> = match (mv.kind, inside.as_slice()) {
        (_, []) => vec![],
        (MoveKind::Two, [0]) => vec![1],
        (MoveKind::Two, [1]) => vec![0],
        (MoveKind::Two, [0, 1]) => vec![0, 1],
        (MoveKind::Three, [0] | [2]) => vec![1],
        (MoveKind::Three, [1]) => vec![0],
        (MoveKind::Three, [0, 1]) => vec![1, 2],
        (MoveKind::Three, [1, 2]) => vec![0, 1],
        (MoveKind::Three, [0, 1, 2]) => vec![0, 1, 2],
        _ => return Err(Error::InvalidPositions(a.to_string())),
    };
    let mut out: Vec<usize> = a.0.iter().copied().filter(|&p| p < k).collect();
    out.extend(mapped.into_iter().map(|p| p + k));
    out.extend(a.0.iter().copied().filter(|&p| p >= k + w));
    Ok(PositionSequence(out))
}

impl PositionSequence {
    fn letters_checked(&self, word: &ReducedWord) -> Result<Vec<u8>> {
        self.0
            .iter()
            .map(|&p| word.0.get(p).copied().ok_or_else(|| Error::InvalidPositions(self.to_string())))
            .collect()
    }
}

/// The set of all elements `s_{i_{a_1}} ... s_{i_{a_l}}` over subsequences
/// of `letters` restricted to `allowed`, built incrementally.
pub fn subword_products(d: &RootDatum, letters: &[u8], allowed: &[bool]) -> HashSet<WeylElement> {
    let mut set = HashSet::new();
    set.insert(d.identity());
    for (a, &j) in letters.iter().enumerate() {
        if !allowed[a] {
            continue;
        }
        let new: Vec<WeylElement> = set.iter().map(|w| d.mul_simple_right(w, j as usize)).collect();
        set.extend(new);
    }
    set
}

/// Lower Bruhat interval `{z : z <= x}`.
pub fn elements_leq(d: &RootDatum, x: &WeylElement) -> Vec<WeylElement> {
    let word = d.lexmin_word(x);
    let all = vec![true; word.len()];
    let mut out: Vec<WeylElement> = subword_products(d, &word, &all).into_iter().collect();
    out.sort_by(|a, b| a.length().cmp(&b.length()).then(a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(name: &str) -> RootDatum {
        RootDatum::parse(name).unwrap()
    }

    fn w(dd: &RootDatum, s: &str) -> ReducedWord {
        ReducedWord::parse(dd, s).unwrap()
    }

    fn el(dd: &RootDatum, s: &str) -> WeylElement {
        dd.parse_element(s).unwrap()
    }

    #[test]
    fn three_move_in_a2() {
        let a2 = d("A2");
        let i = w(&a2, "1,2,1");
        let j = apply_move(&a2, &i, Move::three(0)).unwrap();
        assert_eq!(j, w(&a2, "2,1,2"));
        assert_eq!(apply_move(&a2, &j, Move::three(0)).unwrap(), i);
        assert!(apply_move(&a2, &i, Move::two(0)).is_err());
    }

    #[test]
    fn two_move_in_a3() {
        let a3 = d("A3");
        let i = w(&a3, "1,3,2,1,3,2");
        assert_eq!(i.target(&a3), *a3.longest());
        let j = apply_move(&a3, &i, Move::two(0)).unwrap();
        assert_eq!(j.to_string(), "3,1,2,1,3,2");
    }

    #[test]
    fn move_paths_in_a2_and_a3() {
        let a2 = d("A2");
        let i = w(&a2, "1,2,1");
        let j = w(&a2, "2,1,2");
        assert!(move_path(&a2, &i, &i).unwrap().is_empty());
        assert_eq!(&*move_path(&a2, &i, &j).unwrap(), &[Move::three(0)]);
        let a3 = d("A3");
        let words = reduced_words_of_w0(&a3).unwrap();
        assert_eq!(words.len(), 16);
        for s in words.iter() {
            for t in words.iter() {
                let p = move_path(&a3, s, t).unwrap();
                assert_eq!(&apply_moves(&a3, s, &p).unwrap(), t);
            }
        }
    }

    #[test]
    fn move_path_rejects_different_elements() {
        let a2 = d("A2");
        assert!(matches!(
            move_path(&a2, &w(&a2, "1,2"), &w(&a2, "2,1")),
            Err(Error::DifferentElements(..))
        ));
    }

    #[test]
    fn word_through_examples() {
        let a2 = d("A2");
        let (word, l) = word_through(&a2, &el(&a2, "2"));
        assert_eq!((word.to_string(), l), ("2,1,2".to_string(), 1));
        let (_, l) = word_through(&a2, &a2.identity());
        assert_eq!(l, 0);
        let (_, l) = word_through(&a2, a2.longest());
        assert_eq!(l, 3);
    }

    #[test]
    fn reduced_word_counts() {
        assert_eq!(count_reduced_words(&d("A2"), d("A2").longest()), 2);
        assert_eq!(count_reduced_words(&d("A4"), d("A4").longest()), 768);
        let d4 = d("D4");
        assert_eq!(count_reduced_words(&d4, d4.longest()), 2316);
        assert_eq!(reduced_words_of_w0(&d4).unwrap().len(), 2316);
        assert!(matches!(reduced_words_of_w0(&d("A5")), Err(Error::SizeGate { .. })));
        assert!(matches!(reduced_words_of_w0(&d("D5")), Err(Error::SizeGate { .. })));
    }

    #[test]
    fn hecke_examples() {
        let a2 = d("A2");
        assert_eq!(hecke_product(&a2, &[0, 0]), a2.simple_reflection(0));
        assert_eq!(&hecke_product(&a2, &[0, 1, 0]), a2.longest());
        assert_eq!(&hecke_product(&a2, &[0, 1, 1, 0]), a2.longest());
    }

    #[test]
    fn min_s_examples() {
        let a2 = d("A2");
        let x = el(&a2, "1,2");
        let i = w(&a2, "1,2,1");
        let j = w(&a2, "2,1,2");
        assert_eq!(min_s(&a2, &x, &i), PositionSequence::one_based(&[2]));
        assert_eq!(min_s(&a2, &x, &j), PositionSequence::one_based(&[1]));
        assert_eq!(min_s(&a2, &a2.identity(), &i), PositionSequence::one_based(&[1, 2, 3]));
        assert_eq!(enumerate_s(&a2, &x, &i).unwrap(), vec![PositionSequence::one_based(&[2])]);
        assert_eq!(
            enumerate_s(&a2, &x, &j).unwrap(),
            vec![PositionSequence::one_based(&[1]), PositionSequence::one_based(&[3])]
        );
    }

    #[test]
    fn sigma_examples() {
        let a2 = d("A2");
        let i = w(&a2, "1,2,1");
        let b = sigma_map(&a2, &PositionSequence::one_based(&[2]), &i, Move::three(0)).unwrap();
        assert_eq!(b, PositionSequence::one_based(&[1]));
        let a3 = d("A3");
        let i3 = w(&a3, "1,2,3,1,2,1");
        let far = PositionSequence::one_based(&[1]);
        assert_eq!(sigma_map(&a3, &far, &i3, Move::three(3)).unwrap(), far);
        assert!(sigma_map(&a2, &PositionSequence::one_based(&[1, 3]), &i, Move::three(0)).is_err());
    }

    #[test]
    fn elements_leq_examples() {
        let a2 = d("A2");
        assert_eq!(elements_leq(&a2, &a2.identity()), vec![a2.identity()]);
        let got: HashSet<_> = elements_leq(&a2, &el(&a2, "1,2")).into_iter().collect();
        let want: HashSet<_> = ["", "1", "2", "1,2"].iter().map(|s| el(&a2, s)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn display_is_one_based() {
        let a2 = d("A2");
        assert_eq!(w(&a2, "1,2").to_string(), "1,2");
        assert_eq!(PositionSequence(vec![0, 2]).to_string(), "(1,3)");
        assert!(ReducedWord::parse(&a2, "1,1").is_err());
        assert!(ReducedWord::parse_longest(&a2, "1,2").is_err());
        assert!(parse_letters(&a2, "3").is_err());
    }
}
