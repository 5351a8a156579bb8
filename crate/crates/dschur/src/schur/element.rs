//! Formal linear combinations of rung words with rational-function
//! coefficients: the morphisms Hom(1_source, 1_target).

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{qint, RationalFn, ShiftedInt};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::schur::weight::{Weight, WeightEntry};
use crate::schur::word::{Rung, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    source: Weight,
    target: Weight,
    terms: BTreeMap<Word, RationalFn>,
}

impl Element {
    pub fn zero(source: Weight, target: Weight) -> Element {
        Element {
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(weight: Weight) -> Element {
        Element::from_word(Word::empty(weight), RationalFn::one())
    }

    pub fn from_word(word: Word, coeff: RationalFn) -> Element {
        let source = word.source().clone();
        let target = word.target();
        let mut out = Element::zero(source, target);
        out.add_term(word, coeff);
        out
    }

    pub fn source(&self) -> &Weight {
        &self.source
    }

    pub fn target(&self) -> &Weight {
        &self.target
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RationalFn)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> RationalFn {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(RationalFn::zero)
    }

    pub(crate) fn add_term(&mut self, word: Word, coeff: RationalFn) {
        debug_assert_eq!(word.source(), &self.source);
        debug_assert_eq!(word.target(), self.target);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&coeff);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Element) -> Result<Element> {
        if self.source != rhs.source || self.target != rhs.target {
            return Err(Error::EndpointMismatch(format!(
                "{} -> {} vs {} -> {}",
                self.source, self.target, rhs.source, rhs.target
            )));
        }
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Element) -> Result<Element> {
        self.add(&rhs.scale(&RationalFn::from_int(-1)))
    }

    pub fn scale(&self, c: &RationalFn) -> Element {
        if c.is_zero() {
            return Element::zero(self.source.clone(), self.target.clone());
        }
        Element {
            source: self.source.clone(),
            target: self.target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// Composition self after rhs (operator order), requiring
    /// target(rhs) = source(self).
    pub fn compose(&self, rhs: &Element) -> Result<Element> {
        if rhs.target != self.source {
            return Err(Error::ComposeMismatch {
                left_source: self.source.to_string(),
                right_target: rhs.target.to_string(),
            });
        }
        let mut out = Element::zero(rhs.source.clone(), self.target.clone());
        for (w2, c2) in &rhs.terms {
            for (w1, c1) in &self.terms {
                let mut rungs = w2.rungs().to_vec();
                rungs.extend_from_slice(w1.rungs());
                let word = Word::new_unchecked(w2.source().clone(), rungs);
                out.add_term(word, c1.mul(c2));
            }
        }
        Ok(out)
    }

    /// Algebra multiplication: relation (1) makes mismatched identities
    /// compose to zero instead of erroring.
    pub fn compose_or_zero(&self, rhs: &Element) -> Element {
        if rhs.target != self.source {
            return Element::zero(rhs.source.clone(), self.target.clone());
        }
        self.compose(rhs).expect("endpoints checked")
    }

    /// Apply the 180-degree anti-isomorphism to every word; contravariant on
    /// composition and an involution (with k and l exchanged).
    pub fn rotate180(&self) -> Element {
        let mut out = Element::zero(self.target.rotate180(), self.source.rotate180());
        for (w, c) in &self.terms {
            out.add_term(w.rotate180(), c.clone());
        }
        out
    }

    /// Embed into the padded algebra with r extra leading and s extra
    /// trailing zero columns.
    pub fn pad(&self, r: usize, s: usize) -> Element {
        let mut out = Element::zero(self.source.pad(r, s), self.target.pad(r, s));
        for (w, c) in &self.terms {
            out.add_term(w.pad(r, s), c.clone());
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0: {} -> {}", self.source, self.target);
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})[{w}]")?;
        }
        Ok(())
    }
}

/// The central idempotents of End(1_(1,1,...)): e1 = (1/[2]) E_1 F_1 and
/// e2 = 1 - e1.
pub fn idempotents_e1_e2(ambient: &Weight, params: &Params) -> Result<(Element, Element)> {
    if ambient.len() < 2
        || ambient.entry(1) != WeightEntry::Nat(1)
        || ambient.entry(2) != WeightEntry::Nat(1)
    {
        return Err(Error::WrongIdempotentAmbient);
    }
    let word = Word::new(ambient.clone(), vec![Rung::f(1), Rung::e(1)], params)
        .expect("F1 E1 admissible from (1,1,...)");
    let half = qint(ShiftedInt::int(2), params.beta)
        .inv()
        .expect("[2] nonzero");
    let e1 = Element::from_word(word, half);
    let e2 = Element::identity(ambient.clone()).sub(&e1)?;
    Ok((e1, e2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Beta;

    fn w(nat: &[i64], beta: &[i64]) -> Weight {
        let mut e: Vec<WeightEntry> = nat.iter().map(|&n| WeightEntry::Nat(n)).collect();
        e.extend(beta.iter().map(|&n| WeightEntry::BetaMinus(n)));
        Weight::new(e)
    }

    #[test]
    fn relation_one_delta_composition() {
        let lam = w(&[1, 0], &[0]);
        let mu = w(&[0, 1], &[0]);
        let id_lam = Element::identity(lam.clone());
        let id_mu = Element::identity(mu);
        assert_eq!(id_lam.compose_or_zero(&id_lam), id_lam);
        assert!(id_lam.compose_or_zero(&id_mu).is_zero());
        assert!(id_lam.compose(&id_mu).is_err());
    }

    #[test]
    fn scale_by_zero_gives_zero_element() {
        let x = Element::identity(w(&[1], &[1]));
        assert!(x.scale(&RationalFn::zero()).is_zero());
    }

    #[test]
    fn compose_bookkeeping() {
        let p = Params::default();
        // compose(F1 1_(1,b-1), E1 1_(0,b-0)) = the single word [E1, F1]
        let e1 = Element::from_word(
            Word::new(w(&[0], &[0]), vec![Rung::e(1)], &p).unwrap(),
            RationalFn::one(),
        );
        let f1 = Element::from_word(
            Word::new(w(&[1], &[1]), vec![Rung::f(1)], &p).unwrap(),
            RationalFn::one(),
        );
        let got = f1.compose(&e1).unwrap();
        assert_eq!(got.nterms(), 1);
        let (word, c) = got.terms().next().unwrap();
        assert_eq!(word.rungs(), &[Rung::e(1), Rung::f(1)]);
        assert!(c.is_one());
        assert_eq!(got.source(), &w(&[0], &[0]));
        assert_eq!(got.target(), &w(&[0], &[0]));
    }

    #[test]
    fn rotate_contravariant_and_involutive() {
        let p = Params::default();
        let e1 = Element::from_word(
            Word::new(w(&[0], &[0]), vec![Rung::e(1)], &p).unwrap(),
            RationalFn::one(),
        );
        let f1 = Element::from_word(
            Word::new(w(&[1], &[1]), vec![Rung::f(1)], &p).unwrap(),
            RationalFn::one(),
        );
        let lhs = f1.compose(&e1).unwrap().rotate180();
        let rhs = e1.rotate180().compose(&f1.rotate180()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.rotate180(), f1.compose(&e1).unwrap());
        // rotate(E1 1_(0|b-0)) = F1 1_(0|b-0) with roles reversed
        let r = e1.rotate180();
        assert_eq!(r.source(), &w(&[1], &[1]));
        let (word, _) = r.terms().next().unwrap();
        assert_eq!(word.rungs()[0], Rung::f(1));
    }

    #[test]
    fn idempotent_construction() {
        let p = Params::default();
        let amb = w(&[1, 1], &[0, 0]);
        let (e1, e2) = idempotents_e1_e2(&amb, &p).unwrap();
        // e1 + e2 = 1 syntactically
        let sum = e1.add(&e2).unwrap();
        assert_eq!(sum, Element::identity(amb.clone()));
        assert!(idempotents_e1_e2(&w(&[1, 0], &[0]), &p).is_err());
        // coefficient of the EF word in e1 is 1/[2]
        let (_, c) = e1.terms().next().unwrap();
        assert_eq!(
            c.clone(),
            qint(ShiftedInt::int(2), Beta::Generic).inv().unwrap()
        );
    }

    #[test]
    fn pad_preserves_composition() {
        let p = Params::default();
        let e1 = Element::from_word(
            Word::new(w(&[0], &[0]), vec![Rung::e(1)], &p).unwrap(),
            RationalFn::one(),
        );
        let f1 = Element::from_word(
            Word::new(w(&[1], &[1]), vec![Rung::f(1)], &p).unwrap(),
            RationalFn::one(),
        );
        let lhs = f1.compose(&e1).unwrap().pad(1, 2);
        let rhs = f1.pad(1, 2).compose(&e1.pad(1, 2)).unwrap();
        assert_eq!(lhs, rhs);
    }
}
