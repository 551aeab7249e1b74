//! Weyl group elements as integer matrices acting on the coroot lattice.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::root::{Coweight, RootDatum, Weight};

/// An element of the Weyl group. Column `j` of the stored matrix is `w h_j`
/// in simple-coroot coordinates; the matrix determines the element uniquely.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: u8,
    length: u16,
    m: Box<[i8]>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(len={}, {:?})", self.length, self.m)
    }
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    fn at(&self, row: usize, col: usize) -> i64 {
        self.m[col * self.rank() + row] as i64
    }

    /// `w h_j`.
    pub fn column(&self, j: usize) -> Coweight {
        let r = self.rank();
        Coweight(self.m[j * r..(j + 1) * r].iter().map(|&c| c as i64).collect())
    }
}

impl RootDatum {
    pub fn identity(&self) -> WeylElement {
        let r = self.rank();
        let mut m = vec![0i8; r * r];
        for i in 0..r {
            m[i * r + i] = 1;
        }
        WeylElement {
            rank: r as u8,
            length: 0,
            m: m.into_boxed_slice(),
        }
    }

    pub fn simple_reflection(&self, j: usize) -> WeylElement {
        self.mul_simple_right(&self.identity(), j)
    }

    /// `w s_j = w` with column `i` replaced by `col_i - a_ij col_j`.
    pub fn mul_simple_right(&self, w: &WeylElement, j: usize) -> WeylElement {
        let r = self.rank();
        let descent = self.is_right_descent(w, j);
        let mut m = w.m.clone();
        for i in 0..r {
            let a = self.cartan(i, j);
            if a != 0 {
                for k in 0..r {
                    m[i * r + k] -= (a as i8) * w.m[j * r + k];
                }
            }
        }
        WeylElement {
            rank: w.rank,
            length: if descent { w.length - 1 } else { w.length + 1 },
            m,
        }
    }

    /// `s_j w`: only row `j` changes.
    pub fn mul_simple_left(&self, j: usize, w: &WeylElement) -> WeylElement {
        let r = self.rank();
        let descent = self.is_left_descent(j, w);
        let mut m = w.m.clone();
        for col in 0..r {
            let pair: i64 = (0..r).map(|i| self.cartan(i, j) * w.at(i, col)).sum();
            m[col * r + j] -= pair as i8;
        }
        WeylElement {
            rank: w.rank,
            length: if descent { w.length - 1 } else { w.length + 1 },
            m,
        }
    }

    /// `l(w s_j) < l(w)`, i.e. `w alpha_j` is negative.
    pub fn is_right_descent(&self, w: &WeylElement, j: usize) -> bool {
        let r = self.rank();
        w.m[j * r..(j + 1) * r].iter().any(|&c| c < 0)
    }

    /// `l(s_j w) < l(w)`, i.e. `<alpha_j, w 2rho> < 0`.
    pub fn is_left_descent(&self, j: usize, w: &WeylElement) -> bool {
        let r = self.rank();
        let two_rho = self.two_rho();
        let mut pair = 0i64;
        for i in 0..r {
            let a = self.cartan(i, j);
            if a != 0 {
                let row: i64 = (0..r).map(|c| w.at(i, c) * two_rho.0[c]).sum();
                pair += a * row;
            }
        }
        pair < 0
    }

    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.is_right_descent(w, j)).collect()
    }

    pub fn left_descents(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.is_left_descent(j, w)).collect()
    }

    /// Product of an arbitrary (not necessarily reduced) word of zero-based letters.
    pub fn element_from_word(&self, word: &[u8]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &a in word {
            self.check_index(a as usize)?;
            w = self.mul_simple_right(&w, a as usize);
        }
        Ok(w)
    }

    pub fn is_reduced_word(&self, word: &[u8]) -> bool {
        let mut w = self.identity();
        for &a in word {
            if a as usize >= self.rank() || self.is_right_descent(&w, a as usize) {
                return false;
            }
            w = self.mul_simple_right(&w, a as usize);
        }
        true
    }

    /// Lexicographically smallest reduced word of `w`.
    pub fn lexmin_word(&self, w: &WeylElement) -> Vec<u8> {
        let mut out = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while !cur.is_identity() {
            let j = (0..self.rank())
                .find(|&j| self.is_left_descent(j, &cur))
                .expect("non-identity element has a left descent");
            out.push(j as u8);
            cur = self.mul_simple_left(j, &cur);
        }
        out
    }

    pub fn mul(&self, x: &WeylElement, y: &WeylElement) -> WeylElement {
        let r = self.rank();
        let mut m = vec![0i8; r * r];
        for col in 0..r {
            for row in 0..r {
                let s: i64 = (0..r).map(|k| x.at(row, k) * y.at(k, col)).sum();
                m[col * r + row] = s as i8;
            }
        }
        let mut w = WeylElement {
            rank: x.rank,
            length: 0,
            m: m.into_boxed_slice(),
        };
        w.length = self.length_from_matrix(&w) as u16;
        w
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.lexmin_word(w);
        word.reverse();
        self.element_from_word(&word).expect("valid letters")
    }

    /// Number of positive coroots sent to negative ones.
    pub fn length_from_matrix(&self, w: &WeylElement) -> usize {
        self.positive_coroots()
            .iter()
            .filter(|b| {
                let img = self.act_coweight(w, b);
                RootDatum::coroot_sign(&img) == Some(-1)
            })
            .count()
    }

    pub fn act_coweight(&self, w: &WeylElement, mu: &Coweight) -> Coweight {
        let r = self.rank();
        Coweight(
            (0..r)
                .map(|row| (0..r).map(|c| w.at(row, c) * mu.0[c]).sum())
                .collect(),
        )
    }

    /// `w nu` in fundamental-weight coordinates.
    pub fn act_weight(&self, w: &WeylElement, nu: &Weight) -> Weight {
        let mut out = nu.clone();
        for &a in self.lexmin_word(w).iter().rev() {
            out = self.reflect_weight(a as usize, &out);
        }
        out
    }

    /// Bruhat order `z <= x`.
    pub fn bruhat_le(&self, z: &WeylElement, x: &WeylElement) -> bool {
        if z.length() > x.length() {
            return false;
        }
        if z.length() == x.length() {
            return z == x;
        }
        let mut z = z.clone();
        for a in self.lexmin_word(x) {
            let a = a as usize;
            if self.is_left_descent(a, &z) {
                z = self.mul_simple_left(a, &z);
            }
        }
        z.is_identity()
    }

    /// The longest element `w0`.
    pub fn longest(&self) -> &WeylElement {
        &self.longest_pair().0
    }

    /// Lexicographically minimal reduced word of `w0`; used as the fixed
    /// reference word for identifying crystal elements.
    pub fn reference_word(&self) -> &[u8] {
        &self.longest_pair().1 .0
    }

    pub(crate) fn longest_pair(&self) -> &(WeylElement, crate::words::ReducedWord) {
        self.inner().longest.get_or_init(|| {
            let mut w = self.identity();
            'outer: loop {
                for j in 0..self.rank() {
                    if !self.is_right_descent(&w, j) {
                        w = self.mul_simple_right(&w, j);
                        continue 'outer;
                    }
                }
                break;
            }
            let word = crate::words::ReducedWord(self.lexmin_word(&w));
            (w, word)
        })
    }

    /// `l(w0)`.
    pub fn longest_length(&self) -> usize {
        self.num_positive_roots()
    }

    /// The diagram involution with `alpha_{omega(j)} = -w0 alpha_j`.
    pub fn omega(&self, j: usize) -> usize {
        self.omega_table()[j]
    }

    pub fn omega_table(&self) -> &[usize] {
        self.inner().omega.get_or_init(|| {
            let w0 = self.longest();
            (0..self.rank())
                .map(|j| {
                    let col = -&w0.column(j);
                    col.0
                        .iter()
                        .position(|&c| c == 1)
                        .filter(|_| col.0.iter().filter(|&&c| c != 0).count() == 1)
                        .expect("-w0 permutes simple coroots")
                })
                .collect()
        })
    }

    /// Minimal representative of `w W_J`.
    pub fn coset_min(&self, w: &WeylElement, parabolic: &[usize]) -> WeylElement {
        let mut cur = w.clone();
        'outer: loop {
            for &j in parabolic {
                if self.is_right_descent(&cur, j) {
                    cur = self.mul_simple_right(&cur, j);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Maximal representative of `w W_J`.
    pub fn coset_max(&self, w: &WeylElement, parabolic: &[usize]) -> WeylElement {
        let mut cur = w.clone();
        'outer: loop {
            for &j in parabolic {
                if !self.is_right_descent(&cur, j) {
                    cur = self.mul_simple_right(&cur, j);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// `J = { j : <alpha_j, lambda> = 0 }`, the stabiliser type of a dominant coweight.
    pub fn stabilizer_indices(&self, lambda: &Coweight) -> Vec<usize> {
        (0..self.rank())
            .filter(|&j| self.alpha_pair(j, lambda) == 0)
            .collect()
    }

    /// Parses a 1-based comma-separated word and returns its product, which
    /// need not be reduced.
    pub fn parse_element(&self, s: &str) -> Result<WeylElement> {
        let letters = crate::words::parse_letters(self, s)?;
        self.element_from_word(&letters)
    }

    /// The orbit `W lambda` of a dominant coweight, each point paired with the
    /// minimal `u` such that `u lambda` is that point, in order of length.
    /// Gated by `max_nodes` on the orbit size.
    pub fn orbit_min_reps(&self, lambda: &Coweight) -> Result<Vec<(Coweight, WeylElement)>> {
        self.check_dominant(lambda)?;
        let limit = self.limits().max_nodes;
        let mut out = vec![(lambda.clone(), self.identity())];
        let mut seen = HashSet::from([lambda.clone()]);
        let mut k = 0;
        while k < out.len() {
            let (mu, u) = out[k].clone();
            for j in 0..self.rank() {
                if self.alpha_pair(j, &mu) > 0 {
                    let next = self.reflect_coweight(j, &mu);
                    if seen.insert(next.clone()) {
                        out.push((next, self.mul_simple_left(j, &u)));
                        if out.len() > limit {
                            return Err(Error::SizeGate {
                                what: "Weyl orbit",
                                size: out.len() as u128,
                                limit: limit as u128,
                            });
                        }
                    }
                }
            }
            k += 1;
        }
        Ok(out)
    }

    /// The full group, enumerated once and cached; fails beyond the size gate.
    pub fn weyl_group(&self) -> Result<Arc<WeylGroup>> {
        let order = self.group_order();
        let limit = self.limits().max_group_order;
        if order > limit {
            return Err(Error::SizeGate {
                what: "Weyl group enumeration",
                size: order,
                limit,
            });
        }
        Ok(self
            .inner()
            .group
            .get_or_init(|| Arc::new(WeylGroup::enumerate(self)))
            .clone())
    }
}

/// All elements of a Weyl group, sorted by length.
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
}

impl WeylGroup {
    fn enumerate(d: &RootDatum) -> Self {
        let mut elements = vec![d.identity()];
        let mut index = HashMap::new();
        index.insert(d.identity(), 0);
        let mut k = 0;
        while k < elements.len() {
            let w = elements[k].clone();
            for j in 0..d.rank() {
                if !d.is_right_descent(&w, j) {
                    let ws = d.mul_simple_right(&w, j);
                    if !index.contains_key(&ws) {
                        index.insert(ws.clone(), elements.len());
                        elements.push(ws);
                    }
                }
            }
            k += 1;
        }
        WeylGroup { elements, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbits_and_representatives() {
        let a2 = RootDatum::parse("A2").unwrap();
        assert_eq!(a2.orbit_min_reps(&Coweight(vec![1, 1])).unwrap().len(), 6);
        let orbit = a2.orbit_min_reps(&Coweight(vec![2, 1])).unwrap();
        assert_eq!(orbit.len(), 3);
        for (mu, u) in &orbit {
            assert_eq!(&a2.act_coweight(u, &Coweight(vec![2, 1])), mu);
            assert_eq!(u, &a2.coset_min(u, &[1]));
        }
        let e8 = RootDatum::parse("E8").unwrap();
        let top = e8.positive_coroots().iter().max_by_key(|c| c.0.iter().sum::<i64>()).unwrap().clone();
        assert_eq!(e8.orbit_min_reps(&top).unwrap().len(), 240);
    }

    fn d(name: &str) -> RootDatum {
        RootDatum::parse(name).unwrap()
    }

    #[test]
    fn longest_lengths() {
        assert_eq!(d("A1").longest().length(), 1);
        assert_eq!(d("A2").longest().length(), 3);
        assert_eq!(d("A3").longest().length(), 6);
        assert_eq!(d("E8").longest().length(), 120);
    }

    #[test]
    fn a2_group_order_and_longest_word() {
        let a2 = d("A2");
        assert_eq!(a2.weyl_group().unwrap().len(), 6);
        assert_eq!(a2.reference_word(), &[0, 1, 0]);
    }

    #[test]
    fn w0_on_simple_root() {
        let a2 = d("A2");
        let img = a2.act_weight(a2.longest(), &a2.simple_root(0));
        assert_eq!(img, -&a2.simple_root(1));
    }

    #[test]
    fn omega_tables() {
        assert_eq!(d("A2").omega_table(), &[1, 0]);
        assert_eq!(d("A4").omega_table(), &[3, 2, 1, 0]);
        assert_eq!(d("D4").omega_table(), &[0, 1, 2, 3]);
        assert_eq!(d("D5").omega_table(), &[0, 1, 2, 4, 3]);
        assert_eq!(d("E6").omega_table(), &[5, 1, 4, 3, 2, 0]);
        assert_eq!(d("E7").omega_table(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn group_orders_match_enumeration() {
        for name in ["A1", "A2", "A3", "A4", "D4", "D5"] {
            let dd = d(name);
            assert_eq!(dd.weyl_group().unwrap().len() as u128, dd.group_order(), "{name}");
        }
    }

    #[test]
    fn size_gate() {
        assert!(matches!(d("E7").weyl_group(), Err(Error::SizeGate { .. })));
    }

    #[test]
    fn length_bookkeeping_matches_root_count() {
        let dd = d("D4");
        for w in dd.weyl_group().unwrap().elements() {
            assert_eq!(w.length(), dd.length_from_matrix(w));
            let inv = dd.inverse(w);
            assert!(dd.mul(w, &inv).is_identity());
        }
    }

    #[test]
    fn left_and_right_descents_agree_via_inverse() {
        let dd = d("A3");
        for w in dd.weyl_group().unwrap().elements() {
            let inv = dd.inverse(w);
            assert_eq!(dd.left_descents(w), dd.right_descents(&inv));
        }
    }

    fn bruhat_by_subwords(dd: &RootDatum, z: &WeylElement, x: &WeylElement) -> bool {
        let word = dd.lexmin_word(x);
        let m = word.len();
        (0u32..1 << m).any(|mask| {
            let sub: Vec<u8> = (0..m).filter(|&k| mask >> k & 1 == 1).map(|k| word[k]).collect();
            dd.element_from_word(&sub).unwrap() == *z
        })
    }

    #[test]
    fn bruhat_matches_subword_property() {
        for name in ["A2", "A3"] {
            let dd = d(name);
            let g = dd.weyl_group().unwrap();
            for z in g.elements() {
                for x in g.elements() {
                    assert_eq!(dd.bruhat_le(z, x), bruhat_by_subwords(&dd, z, x));
                }
            }
        }
    }

    #[test]
    fn coset_representatives() {
        let a2 = d("A2");
        let w0 = a2.longest().clone();
        let min = a2.coset_min(&w0, &[1]);
        assert_eq!(min.length(), 2);
        assert_eq!(a2.coset_max(&a2.identity(), &[0]), a2.simple_reflection(0));
    }
}
