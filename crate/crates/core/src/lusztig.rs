//! MV polytopes as Lusztig data: a reduced word of `w0` with a vector of
//! edge lengths along the corresponding path of prefixes.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::root::{Coweight, RootDatum};
use crate::weyl::WeylElement;
use crate::words::{self, MoveKind, ReducedWord};

/// Where the top vertex `mu_{w0}` sits: at 0 for `B(inf)`, at `lambda` for `B(lambda)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Infinity,
    Highest(Coweight),
}

impl Base {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Base::Infinity)
    }

    pub fn lambda(&self) -> Option<&Coweight> {
        match self {
            Base::Infinity => None,
            Base::Highest(l) => Some(l),
        }
    }

    /// `mu_{w0}`.
    pub fn top(&self, rank: usize) -> Coweight {
        match self {
            Base::Infinity => Coweight::zero(rank),
            Base::Highest(l) => l.clone(),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Infinity => f.write_str("inf"),
            Base::Highest(l) => write!(f, "{l}"),
        }
    }
}

/// `"inf"` or a comma-separated coweight.
impl std::str::FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" => Ok(Base::Infinity),
            other => Ok(Base::Highest(other.parse()?)),
        }
    }
}

/// The tropical transition for a 3-move `(i,j,i) -> (j,i,j)`.
pub fn tropical_three(a: i64, b: i64, c: i64) -> (i64, i64, i64) {
    let m = a.min(c);
    (b + c - m, m, a + b - m)
}

#[derive(Clone)]
pub struct LusztigDatum {
    datum: RootDatum,
    word: ReducedWord,
    n: Vec<i64>,
    base: Base,
}

impl PartialEq for LusztigDatum {
    fn eq(&self, other: &Self) -> bool {
        self.datum == other.datum && self.word == other.word && self.n == other.n && self.base == other.base
    }
}

impl Eq for LusztigDatum {}

impl fmt::Debug for LusztigDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LusztigDatum({}, word={}, n={:?}, base={})",
            self.datum, self.word, self.n, self.base
        )
    }
}

impl LusztigDatum {
    /// Checks the word spells `w0`, lengths agree, entries are non-negative
    /// and a highest-weight base is dominant.
    pub fn new(datum: &RootDatum, word: ReducedWord, n: Vec<i64>, base: Base) -> Result<Self> {
        let word = ReducedWord::longest(datum, word.0)?;
        if n.len() != word.len() {
            return Err(Error::LengthMismatch {
                expected: word.len(),
                got: n.len(),
            });
        }
        if let Some((position, &value)) = n.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NegativeEntry { position: position + 1, value });
        }
        if let Base::Highest(l) = &base {
            datum.check_dominant(l)?;
        }
        Ok(Self::from_parts(datum, word, n, base))
    }

    /// Parses one-based word and comma-separated entries.
    pub fn parse(datum: &RootDatum, word: &str, n: &str, base: Base) -> Result<Self> {
        let word = ReducedWord::parse_longest(datum, word)?;
        let n = crate::root::parse_int_list(n)?;
        Self::new(datum, word, n, base)
    }

    /// Skips every check; for feeding hand-made data to validation. The word
    /// must still spell `w0` for word changes to succeed.
    pub fn new_unchecked(datum: &RootDatum, word: ReducedWord, n: Vec<i64>, base: Base) -> Self {
        Self::from_parts(datum, word, n, base)
    }

    pub(crate) fn from_parts(datum: &RootDatum, word: ReducedWord, n: Vec<i64>, base: Base) -> Self {
        LusztigDatum {
            datum: datum.clone(),
            word,
            n,
            base,
        }
    }

    /// `P_lambda`, all entries zero.
    pub fn highest(datum: &RootDatum, lambda: &Coweight) -> Result<Self> {
        datum.check_dominant(lambda)?;
        let word = ReducedWord(datum.reference_word().to_vec());
        let m = word.len();
        Ok(Self::from_parts(datum, word, vec![0; m], Base::Highest(lambda.clone())))
    }

    /// `P_0` in `B(inf)`.
    pub fn zero(datum: &RootDatum) -> Self {
        let word = ReducedWord(datum.reference_word().to_vec());
        let m = word.len();
        Self::from_parts(datum, word, vec![0; m], Base::Infinity)
    }

    /// `P_{w0 lambda} = Conv(W lambda)` on the given word: `N_l = -<alpha_{i_l}, w0 lambda>`.
    pub fn lowest_on(datum: &RootDatum, lambda: &Coweight, word: &ReducedWord) -> Result<Self> {
        datum.check_dominant(lambda)?;
        let low = datum.act_coweight(datum.longest(), lambda);
        let n = word
            .0
            .iter()
            .map(|&a| -datum.alpha_pair(a as usize, &low))
            .collect();
        Self::new(datum, word.clone(), n, Base::Highest(lambda.clone()))
    }

    pub fn lowest(datum: &RootDatum, lambda: &Coweight) -> Result<Self> {
        Self::lowest_on(datum, lambda, &ReducedWord(datum.reference_word().to_vec()))
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn n(&self) -> &[i64] {
        &self.n
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn lambda(&self) -> Option<&Coweight> {
        self.base.lambda()
    }

    pub(crate) fn n_mut(&mut self) -> &mut Vec<i64> {
        &mut self.n
    }

    pub fn is_zero_vector(&self) -> bool {
        self.n.iter().all(|&v| v == 0)
    }

    /// Re-expresses the same polytope on another reduced word of `w0`.
    pub fn change_word(&self, target: &ReducedWord) -> Result<Self> {
        if *target == self.word {
            return Ok(self.clone());
        }
        let target = ReducedWord::longest(&self.datum, target.0.clone())?;
        let path = words::move_path(&self.datum, &self.word, &target)?;
        let mut letters = self.word.0.clone();
        let mut n = self.n.clone();
        for &mv in path.iter() {
            let k = mv.offset;
            match mv.kind {
                MoveKind::Two => n.swap(k, k + 1),
                MoveKind::Three => {
                    let (a, b, c) = tropical_three(n[k], n[k + 1], n[k + 2]);
                    n[k] = a;
                    n[k + 1] = b;
                    n[k + 2] = c;
                }
            }
            words::apply_move_in_place(&mut letters, mv);
        }
        debug_assert_eq!(letters, target.0);
        Ok(Self::from_parts(&self.datum, target, n, self.base.clone()))
    }

    pub fn on_reference(&self) -> Self {
        self.change_word(&ReducedWord(self.datum.reference_word().to_vec()))
            .expect("reference word spells w0")
    }

    /// Vector on the reference word; identifies the polytope given its base.
    pub fn canonical_n(&self) -> Vec<i64> {
        self.on_reference().n
    }

    /// `mu_{w_l}` for `l = 0..=m` along this datum's word.
    pub fn path_vertices(&self) -> Vec<Coweight> {
        let d = &self.datum;
        let prefixes = self.word.prefixes(d);
        let m = self.word.len();
        let mut out = vec![Coweight::zero(d.rank()); m + 1];
        out[m] = self.base.top(d.rank());
        for l in (1..=m).rev() {
            let edge = d.act_coweight(&prefixes[l - 1], &d.simple_coroot(self.word.0[l - 1] as usize));
            out[l - 1] = &out[l] - &(self.n[l - 1] * &edge);
        }
        out
    }

    /// `mu_e`.
    pub fn weight(&self) -> Coweight {
        self.path_vertices().swap_remove(0)
    }

    /// The full GGMS datum, assembled from words through every group element.
    pub fn vertices(&self) -> Result<GgmsDatum> {
        let d = &self.datum;
        let group = d.weyl_group()?;
        let mut map: HashMap<WeylElement, Coweight> = HashMap::with_capacity(group.len());
        let record = |word: &ReducedWord, verts: Vec<Coweight>, map: &mut HashMap<WeylElement, Coweight>| -> Result<()> {
            for (w, mu) in word.prefixes(d).into_iter().zip(verts) {
                if let Some(prev) = map.get(&w) {
                    if *prev != mu {
                        return Err(Error::Invariant(format!(
                            "vertex at {} differs between words: {prev} vs {mu}",
                            words::format_letters(&d.lexmin_word(&w))
                        )));
                    }
                } else {
                    map.insert(w, mu);
                }
            }
            Ok(())
        };
        record(&self.word, self.path_vertices(), &mut map)?;
        for w in group.elements() {
            if map.contains_key(w) {
                continue;
            }
            let (word, _) = words::word_through(d, w);
            let conv = self.change_word(&word)?;
            record(&word, conv.path_vertices(), &mut map)?;
        }
        Ok(GgmsDatum { vertices: map })
    }
}

/// Vertices `mu_w` of an MV polytope, indexed by Weyl group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GgmsDatum {
    vertices: HashMap<WeylElement, Coweight>,
}

impl GgmsDatum {
    pub(crate) fn from_map(vertices: HashMap<WeylElement, Coweight>) -> Self {
        GgmsDatum { vertices }
    }

    pub fn get(&self, w: &WeylElement) -> &Coweight {
        &self.vertices[w]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElement, &Coweight)> {
        self.vertices.iter()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Distinct vertex coweights, sorted.
    pub fn vertex_set(&self) -> Vec<Coweight> {
        let mut v: Vec<Coweight> = self.vertices.values().cloned().collect();
        v.sort();
        v.dedup();
        v
    }

    /// Keyed by the one-based lexicographically least reduced word of `w`
    /// (`"e"` for the identity).
    pub fn by_word(&self, d: &RootDatum) -> Vec<(String, Coweight)> {
        let mut out: Vec<(String, Coweight)> = self
            .vertices
            .iter()
            .map(|(w, mu)| (element_key(d, w), mu.clone()))
            .collect();
        out.sort();
        out
    }
}

/// One-based lexicographically least word, `"e"` for the identity.
pub fn element_key(d: &RootDatum, w: &WeylElement) -> String {
    if w.is_identity() {
        "e".to_string()
    } else {
        words::format_letters(&d.lexmin_word(w))
    }
}
