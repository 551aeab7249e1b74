//! Kashiwara operators, string lengths and the `*`-involution on Lusztig data.

use crate::error::{Error, Result};
use crate::lusztig::{Base, LusztigDatum};
use crate::words::{self, ReducedWord};

impl LusztigDatum {
    fn on_word_from(&self, j: usize) -> LusztigDatum {
        self.change_word(words::word_starting_with(self.datum(), j))
            .expect("word spells w0")
    }

    fn back_to(&self, word: &ReducedWord) -> LusztigDatum {
        self.change_word(word).expect("word spells w0")
    }

    /// `epsilon_j`: the first entry on a word starting with `j`.
    pub fn epsilon(&self, j: usize) -> Result<i64> {
        self.datum().check_index(j)?;
        Ok(self.on_word_from(j).n()[0])
    }

    /// `phi_j = <alpha_j, wt> + epsilon_j`.
    pub fn phi(&self, j: usize) -> Result<i64> {
        let eps = self.epsilon(j)?;
        Ok(self.datum().alpha_pair(j, &self.weight()) + eps)
    }

    /// `phi_j` through the vertex formula `(1/2) <alpha_j, mu_e + mu_{s_j}>`.
    pub fn phi_from_vertices(&self, j: usize) -> Result<i64> {
        self.datum().check_index(j)?;
        let path = self.on_word_from(j).path_vertices();
        let sum = &path[0] + &path[1];
        let twice = self.datum().alpha_pair(j, &sum);
        debug_assert_eq!(twice % 2, 0);
        Ok(twice / 2)
    }

    /// `f_j`, or `None` when it leaves `B(lambda)`.
    pub fn f(&self, j: usize) -> Option<LusztigDatum> {
        self.datum().check_index(j).ok()?;
        if !self.base().is_infinity() && self.phi(j).ok()? == 0 {
            return None;
        }
        let mut p = self.on_word_from(j);
        p.n_mut()[0] += 1;
        Some(p.back_to(self.word()))
    }

    /// `e_j`, or `None` when `epsilon_j = 0`.
    pub fn e(&self, j: usize) -> Option<LusztigDatum> {
        self.datum().check_index(j).ok()?;
        let mut p = self.on_word_from(j);
        if p.n()[0] == 0 {
            return None;
        }
        p.n_mut()[0] -= 1;
        Some(p.back_to(self.word()))
    }

    /// `f_j^max = f_j^{phi_j}`; highest-weight base only.
    pub fn f_max(&self, j: usize) -> Result<LusztigDatum> {
        if self.base().is_infinity() {
            return Err(Error::RequiresHighestWeight);
        }
        let k = self.phi(j)?;
        let mut p = self.on_word_from(j);
        p.n_mut()[0] += k;
        Ok(p.back_to(self.word()))
    }

    /// `e_j^max = e_j^{epsilon_j}`.
    pub fn e_max(&self, j: usize) -> Result<LusztigDatum> {
        self.datum().check_index(j)?;
        let mut p = self.on_word_from(j);
        p.n_mut()[0] = 0;
        Ok(p.back_to(self.word()))
    }

    /// Applies `f` for each letter in order; `None` as soon as one is null.
    pub fn lower_by(&self, letters: &[usize]) -> Option<LusztigDatum> {
        letters.iter().try_fold(self.clone(), |p, &j| p.f(j))
    }

    /// Applies `e` for each letter in order.
    pub fn raise_by(&self, letters: &[usize]) -> Option<LusztigDatum> {
        letters.iter().try_fold(self.clone(), |p, &j| p.e(j))
    }

    /// The `*`-involution on `B(inf)`: reverse the vector and relabel the
    /// reversed word through `omega`. The result is expressed on that word.
    pub fn star(&self) -> Result<LusztigDatum> {
        if !self.base().is_infinity() {
            return Err(Error::RequiresInfinity);
        }
        let d = self.datum();
        let letters: Vec<u8> = self
            .word()
            .letters()
            .iter()
            .rev()
            .map(|&a| d.omega(a as usize) as u8)
            .collect();
        let n: Vec<i64> = self.n().iter().rev().copied().collect();
        LusztigDatum::new(d, ReducedWord(letters), n, Base::Infinity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::{Coweight, RootDatum};

    fn a2() -> RootDatum {
        RootDatum::parse("A2").unwrap()
    }

    fn hi(d: &RootDatum) -> LusztigDatum {
        LusztigDatum::highest(d, &Coweight(vec![1, 1])).unwrap()
    }

    #[test]
    fn lowering_examples() {
        let d = a2();
        let p = hi(&d);
        let f1 = p.f(0).unwrap();
        assert_eq!(f1.n(), &[1, 0, 0]);
        assert_eq!(f1.epsilon(0).unwrap(), 1);
        let f2f1 = f1.f(1).unwrap();
        assert_eq!(f2f1.n(), &[0, 1, 0]);
        assert!(p.e(0).is_none());
        assert!(f1.f(0).is_none());
    }

    #[test]
    fn phi_of_highest() {
        let d = a2();
        let p = hi(&d);
        for j in 0..2 {
            assert_eq!(p.phi(j).unwrap(), 1);
            assert_eq!(p.phi_from_vertices(j).unwrap(), 1);
            assert_eq!(p.epsilon(j).unwrap(), 0);
        }
    }

    #[test]
    fn crystal_axioms_small() {
        let d = a2();
        let p = hi(&d).lower_by(&[1, 0, 0]).unwrap();
        for j in 0..2 {
            if let Some(q) = p.f(j) {
                assert_eq!(q.e(j).unwrap(), p);
                assert_eq!(q.epsilon(j).unwrap(), p.epsilon(j).unwrap() + 1);
                assert_eq!(q.weight(), &p.weight() - &d.simple_coroot(j));
            }
            if let Some(q) = p.e(j) {
                assert_eq!(q.f(j).unwrap(), p);
            }
        }
    }

    #[test]
    fn star_examples() {
        let d = a2();
        let p0 = LusztigDatum::zero(&d);
        assert_eq!(p0.star().unwrap().on_reference(), p0);
        let p = LusztigDatum::parse(&d, "1,2,1", "1,0,0", Base::Infinity).unwrap();
        let s = p.star().unwrap();
        assert_eq!(s.word().to_string(), "2,1,2");
        assert_eq!(s.n(), &[0, 0, 1]);
        assert_eq!(s.on_reference(), p);
        let q = LusztigDatum::parse(&d, "1,2,1", "0,1,0", Base::Infinity).unwrap();
        let s = q.star().unwrap();
        assert_eq!((s.word().to_string(), s.n().to_vec()), ("2,1,2".to_string(), vec![0, 1, 0]));
        assert!(hi(&d).star().is_err());
    }
}
