//! Simply-laced root data, weights and coweights.
//!
//! Weights are stored in the fundamental-weight basis (`n_i = <nu, h_i>`),
//! coweights in the simple-coroot basis (`mu = sum c_j h_j`), so the canonical
//! pairing is a plain dot product and every pairing used anywhere in the crate
//! is an exact integer.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::weyl::{WeylElement, WeylGroup};
use crate::words::{Move, ReducedWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(s)
    }
}

macro_rules! lattice_vector {
    ($name:ident) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            pub fn unit(rank: usize, index: usize) -> Self {
                let mut v = vec![0; rank];
                v[index] = 1;
                $name(v)
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
                f.write_str(&parts.join(","))
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                parse_int_list(s).map($name)
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                &self - &rhs
            }
        }

        impl AddAssign<&$name> for $name {
            fn add_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a += b;
                }
            }
        }

        impl SubAssign<&$name> for $name {
            fn sub_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a -= b;
                }
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Mul<&$name> for i64 {
            type Output = $name;
            fn mul(self, rhs: &$name) -> $name {
                $name(rhs.0.iter().map(|a| self * a).collect())
            }
        }
    };
}

lattice_vector!(Weight);
lattice_vector!(Coweight);

impl Weight {
    /// The canonical pairing `<nu, mu>`.
    pub fn pair(&self, mu: &Coweight) -> Result<i64> {
        if self.rank() != mu.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: mu.rank(),
            });
        }
        Ok(dot(&self.0, &mu.0))
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Parses a comma-separated list of integers; the empty string is the empty list.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("`{p}` is not an integer in `{s}`")))
        })
        .collect()
}

/// A simply-laced Cartan datum together with lazily built, thread-safe caches
/// (the enumerated Weyl group, reduced words of `w0`, move paths).
///
/// Cloning is cheap: all clones share the same caches.
#[derive(Clone)]
pub struct RootDatum(Arc<Inner>);

/// Move paths keyed by `(source letters, target letters)`.
type MoveCache = HashMap<(Vec<u8>, Vec<u8>), Arc<[Move]>>;

pub(crate) struct Inner {
    family: Family,
    rank: usize,
    cartan: Vec<i64>,
    positive_coroots: Vec<Coweight>,
    two_rho: Coweight,
    limits: Limits,
    pub(crate) longest: OnceLock<(WeylElement, ReducedWord)>,
    pub(crate) omega: OnceLock<Vec<usize>>,
    pub(crate) words_from: OnceLock<Vec<ReducedWord>>,
    pub(crate) group: OnceLock<Arc<WeylGroup>>,
    pub(crate) all_words: OnceLock<Arc<Vec<ReducedWord>>>,
    pub(crate) gamma: OnceLock<Arc<crate::bz::GammaTable>>,
    pub(crate) move_cache: Mutex<MoveCache>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.family == other.0.family && self.0.rank == other.0.rank)
    }
}

impl Eq for RootDatum {}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({})", self.name())
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for RootDatum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RootDatum::parse(s)
    }
}

impl RootDatum {
    /// Parses `"A2"`, `"D4"`, `"E6"`, ... (case-insensitive). Ranks up to 8.
    pub fn parse(s: &str) -> Result<Self> {
        Self::parse_with_limits(s, Limits::from_env())
    }

    pub fn parse_with_limits(s: &str, limits: Limits) -> Result<Self> {
        let t = s.trim();
        let unknown = || Error::UnknownType(s.to_string());
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(unknown()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
        Self::new(family, rank, limits)
    }

    pub fn new(family: Family, rank: usize, limits: Limits) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=8).contains(&rank),
            Family::D => (4..=8).contains(&rank),
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::UnknownType(format!("{family}{rank}")));
        }
        let cartan = cartan_matrix(family, rank);
        debug_assert!(is_positive_definite(&cartan, rank));
        let positive_coroots = positive_roots(&cartan, rank);
        let mut two_rho = Coweight::zero(rank);
        for b in &positive_coroots {
            two_rho += b;
        }
        Ok(RootDatum(Arc::new(Inner {
            family,
            rank,
            cartan,
            positive_coroots,
            two_rho,
            limits,
            longest: OnceLock::new(),
            omega: OnceLock::new(),
            words_from: OnceLock::new(),
            group: OnceLock::new(),
            all_words: OnceLock::new(),
            gamma: OnceLock::new(),
            move_cache: Mutex::new(HashMap::new()),
        })))
    }

    pub(crate) fn inner(&self) -> &Inner {
        &self.0
    }

    pub fn family(&self) -> Family {
        self.0.family
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.0.family, self.0.rank)
    }

    pub fn limits(&self) -> Limits {
        self.0.limits
    }

    /// `a_ij = <alpha_j, h_i>`, zero-based.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.0.cartan[i * self.0.rank + j]
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| self.cartan(i, j)).collect())
            .collect()
    }

    /// Positive coroots in simple-coroot coordinates (which coincide with the
    /// positive roots in simple-root coordinates for simply-laced types).
    pub fn positive_coroots(&self) -> &[Coweight] {
        &self.0.positive_coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.0.positive_coroots.len()
    }

    /// Sum of the positive coroots, a regular dominant element of the coroot lattice.
    pub fn two_rho(&self) -> &Coweight {
        &self.0.two_rho
    }

    /// `|W|` from the classification, without enumerating anything.
    pub fn group_order(&self) -> u128 {
        let n = self.rank() as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match (self.family(), self.rank()) {
            (Family::A, _) => fact(n + 1),
            (Family::D, _) => (1u128 << (n - 1)) * fact(n),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
        }
    }

    pub(crate) fn check_index(&self, j: usize) -> Result<()> {
        if j < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: j,
                rank: self.rank(),
            })
        }
    }

    pub(crate) fn check_coweight(&self, mu: &Coweight) -> Result<()> {
        if mu.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: mu.rank(),
            });
        }
        Ok(())
    }

    /// `alpha_j` in the fundamental-weight basis: the j-th column of the Cartan matrix.
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight((0..self.rank()).map(|i| self.cartan(i, j)).collect())
    }

    pub fn simple_coroot(&self, j: usize) -> Coweight {
        Coweight::unit(self.rank(), j)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::unit(self.rank(), i)
    }

    /// `<alpha_j, mu>` for a coweight in coroot coordinates.
    pub fn alpha_pair(&self, j: usize, mu: &Coweight) -> i64 {
        (0..self.rank()).map(|i| mu.0[i] * self.cartan(i, j)).sum()
    }

    /// Fundamental-weight coordinates `(<alpha_j, mu>)_j` of a coweight.
    pub fn alpha_values(&self, mu: &Coweight) -> Vec<i64> {
        (0..self.rank()).map(|j| self.alpha_pair(j, mu)).collect()
    }

    pub fn is_dominant(&self, mu: &Coweight) -> bool {
        mu.rank() == self.rank() && (0..self.rank()).all(|j| self.alpha_pair(j, mu) >= 0)
    }

    pub fn check_dominant(&self, mu: &Coweight) -> Result<()> {
        self.check_coweight(mu)?;
        if self.is_dominant(mu) {
            Ok(())
        } else {
            Err(Error::NotDominant(mu.to_string()))
        }
    }

    /// Dominant coweights with every coroot coordinate in `0..=max_coord`.
    pub fn dominant_coweights_in_box(&self, max_coord: i64) -> Vec<Coweight> {
        let r = self.rank();
        let mut out = Vec::new();
        let mut cur = vec![0i64; r];
        loop {
            let mu = Coweight(cur.clone());
            if self.is_dominant(&mu) {
                out.push(mu);
            }
            let mut k = 0;
            loop {
                if k == r {
                    return out;
                }
                cur[k] += 1;
                if cur[k] <= max_coord {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }

    /// `s_j mu = mu - <alpha_j, mu> h_j`.
    pub fn reflect_coweight(&self, j: usize, mu: &Coweight) -> Coweight {
        let mut out = mu.clone();
        out.0[j] -= self.alpha_pair(j, mu);
        out
    }

    /// `s_j nu = nu - <nu, h_j> alpha_j`.
    pub fn reflect_weight(&self, j: usize, nu: &Weight) -> Weight {
        let c = nu.0[j];
        let mut out = nu.clone();
        for i in 0..self.rank() {
            out.0[i] -= c * self.cartan(i, j);
        }
        out
    }

    /// Whether a coweight is a non-negative (resp. non-positive) combination of
    /// simple coroots; `None` when it is mixed or zero.
    pub(crate) fn coroot_sign(mu: &Coweight) -> Option<i8> {
        let pos = mu.0.iter().any(|&c| c > 0);
        let neg = mu.0.iter().any(|&c| c < 0);
        match (pos, neg) {
            (true, false) => Some(1),
            (false, true) => Some(-1),
            _ => None,
        }
    }

    /// Weyl dimension formula `prod <alpha, lambda + rho> / <alpha, rho>` over
    /// positive roots, for a dominant coweight.
    pub fn weyl_dimension(&self, lambda: &Coweight) -> Result<u128> {
        self.check_dominant(lambda)?;
        let fw = self.alpha_values(lambda);
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for beta in self.positive_coroots() {
            // `<beta, lambda + rho>` with beta in simple-root coordinates.
            let height: i64 = beta.0.iter().sum();
            let pair: i64 = beta.0.iter().zip(&fw).map(|(b, f)| b * f).sum();
            let (mut a, mut b) = ((pair + height) as u128, height as u128);
            // Keep num/den in lowest terms so only the true value can overflow.
            let g = a.gcd(&b);
            a /= g;
            b /= g;
            let g = a.gcd(&den);
            a /= g;
            den /= g;
            let g = num.gcd(&b);
            num /= g;
            b /= g;
            num = num.checked_mul(a).ok_or(Error::SizeGate {
                what: "Weyl dimension",
                size: u128::MAX,
                limit: u128::MAX,
            })?;
            den *= b;
        }
        debug_assert_eq!(den, 1);
        Ok(num / den)
    }
}

fn cartan_matrix(family: Family, rank: usize) -> Vec<i64> {
    let mut a = vec![0i64; rank * rank];
    let mut link = |i: usize, j: usize| {
        a[i * rank + j] = -1;
        a[j * rank + i] = -1;
    };
    match family {
        Family::A => {
            for i in 0..rank.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..rank - 2 {
                link(i, i + 1);
            }
            link(rank - 3, rank - 1);
        }
        // Bourbaki labelling: 1-3-4-5-..., with 2 attached to 4.
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..rank - 1 {
                link(i, i + 1);
            }
        }
    }
    for i in 0..rank {
        a[i * rank + i] = 2;
    }
    a
}

fn positive_roots(cartan: &[i64], rank: usize) -> Vec<Coweight> {
    let pair = |beta: &[i64], j: usize| -> i64 { (0..rank).map(|i| beta[i] * cartan[i * rank + j]).sum() };
    let mut roots: Vec<Coweight> = (0..rank).map(|i| Coweight::unit(rank, i)).collect();
    let mut k = 0;
    while k < roots.len() {
        let beta = roots[k].clone();
        for j in 0..rank {
            if pair(&beta.0, j) == -1 {
                let mut next = beta.clone();
                next.0[j] += 1;
                if !roots.contains(&next) {
                    roots.push(next);
                }
            }
        }
        k += 1;
    }
    roots
}

/// Sylvester's criterion with fraction-free elimination.
fn is_positive_definite(a: &[i64], n: usize) -> bool {
    (1..=n).all(|k| {
        let mut m: Vec<Vec<i128>> = (0..k)
            .map(|i| (0..k).map(|j| a[i * n + j] as i128).collect())
            .collect();
        let mut prev = 1i128;
        for p in 0..k {
            if m[p][p] == 0 {
                return false;
            }
            for i in p + 1..k {
                for j in p + 1..k {
                    m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
                }
            }
            prev = m[p][p];
        }
        prev > 0
    })
}
