//! Braid words, their compilation into elements of the algebra, and the
//! closure / cut-closure constructions. A braid is read bottom to top; the
//! corresponding algebra expression composes right to left.

use std::fmt;

use rand::Rng;

use crate::coeff::RationalFn;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::schur::{Element, Rung, Weight, WeightEntry, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BraidLetter {
    pub index: usize,
    pub positive: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::DegeneratePresentation(
                "braid needs at least one strand".into(),
            ));
        }
        if let Some(l) = letters.iter().find(|l| l.index < 1 || l.index >= strands) {
            return Err(Error::DegeneratePresentation(format!(
                "generator s{} out of range for {} strands",
                l.index, strands
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn writhe(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| if l.positive { 1 } else { -1 })
            .sum()
    }

    /// Final position of the strand that starts at each bottom position.
    pub fn permutation(&self) -> Vec<usize> {
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            occupant.swap(l.index - 1, l.index);
        }
        let mut finals = vec![0; self.strands];
        for (pos, &strand) in occupant.iter().enumerate() {
            finals[strand] = pos;
        }
        finals
    }

    /// Number of link components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = perm[cur];
            }
        }
        cycles
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BraidLetter {
                    index: l.index,
                    positive: !l.positive,
                })
                .collect(),
        }
    }

    /// g b g^{-1} for a single generator g.
    pub fn conjugate(&self, index: usize, positive: bool) -> BraidWord {
        let mut letters = vec![BraidLetter { index, positive }];
        letters.extend(self.letters.iter().copied());
        letters.push(BraidLetter {
            index,
            positive: !positive,
        });
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Concatenation (same strand count).
    pub fn concat(&self, rhs: &BraidWord) -> BraidWord {
        debug_assert_eq!(self.strands, rhs.strands);
        let mut letters = self.letters.clone();
        letters.extend(rhs.letters.iter().copied());
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Markov stabilization: one extra strand, one extra crossing s_k^{+-1}.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(BraidLetter {
            index: self.strands,
            positive,
        });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    pub fn random(strands: usize, len: usize, rng: &mut impl Rng) -> BraidWord {
        let letters = if strands < 2 {
            Vec::new()
        } else {
            (0..len)
                .map(|_| BraidLetter {
                    index: rng.gen_range(1..strands),
                    positive: rng.gen_bool(0.5),
                })
                .collect()
        };
        BraidWord { strands, letters }
    }

    pub fn presentation(&self) -> LinkPresentation {
        LinkPresentation {
            writhe: self.writhe(),
            permutation: self.permutation(),
            components: self.components(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", l.index)?;
            if !l.positive {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkPresentation {
    pub writhe: i64,
    pub permutation: Vec<usize>,
    pub components: usize,
}

/// Parse the grammar `word := token* ; token := 's' INT ('^-1')?`; strand
/// count defaults to 1 + max index.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut letters = Vec::new();
    let mut max_index = 0usize;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let token = &text[start..i];
        let rest = token.strip_prefix('s').ok_or_else(|| Error::BraidParse {
            pos: start,
            msg: format!("expected 's<index>', found {token:?}"),
        })?;
        let (digits, positive) = match rest.strip_suffix("^-1") {
            Some(d) => (d, false),
            None => (rest, true),
        };
        let index: usize = digits.parse().map_err(|_| Error::BraidParse {
            pos: start,
            msg: format!("bad generator index in {token:?}"),
        })?;
        if index == 0 {
            return Err(Error::BraidParse {
                pos: start,
                msg: "generator index must be positive".into(),
            });
        }
        max_index = max_index.max(index);
        letters.push(BraidLetter { index, positive });
    }
    BraidWord::new(max_index + 1, letters)
}

/// Reinterpret with an explicit strand count (for presentations with unused
/// trailing strands).
pub fn with_strands(b: &BraidWord, strands: usize) -> Result<BraidWord> {
    BraidWord::new(strands, b.letters().to_vec())
}

/// A positive crossing maps to q^{-1} 1 - E_i F_i 1, a negative one to
/// q 1 - E_i F_i 1, on an ambient weight with entries i, i+1 equal to 1.
pub fn crossing_element(
    index: usize,
    positive: bool,
    ambient: &Weight,
    params: &Params,
) -> Result<Element> {
    if ambient.entry(index) != WeightEntry::Nat(1)
        || ambient.entry(index + 1) != WeightEntry::Nat(1)
    {
        return Err(Error::WrongAmbient {
            index,
            next: index + 1,
        });
    }
    let ef = Word::new(
        ambient.clone(),
        vec![Rung::f(index), Rung::e(index)],
        params,
    )
    .expect("E_i F_i admissible on (..,1,1,..)");
    let unit = RationalFn::monomial(if positive { -1 } else { 1 }, 0);
    let mut out = Element::identity(ambient.clone()).scale(&unit);
    out = out.sub(&Element::from_word(ef, RationalFn::one()))?;
    Ok(out)
}

/// Compile a braid word into the algebra on the given ambient weight,
/// composing crossing elements bottom to top.
pub fn compile(b: &BraidWord, ambient: &Weight, params: &Params) -> Result<Element> {
    let mut acc = Element::identity(ambient.clone());
    for l in b.letters() {
        let cr = crossing_element(l.index, l.positive, ambient, params)?;
        acc = cr.compose(&acc)?;
    }
    Ok(acc)
}

/// The nested cup pattern closing k strands in gl_{k+k}: all power-1 E rungs
/// from the zero weight to (1^k | (b-1)^k).
pub fn cups_word(k: usize, params: &Params) -> Word {
    let mut rungs = Vec::new();
    for c in 1..=k {
        rungs.push(Rung::e(k));
        if c < k {
            for d in (1..=c).rev() {
                rungs.push(Rung::e(k - d));
                rungs.push(Rung::e(k + d));
            }
        }
    }
    Word::new(Weight::zero(k, k), rungs, params).expect("closure pattern is admissible")
}

/// Caps are the vertical mirror of the cups: reversed rungs with E -> F.
pub fn caps_word(k: usize, params: &Params) -> Word {
    let cups = cups_word(k, params);
    let rungs = cups
        .rungs()
        .iter()
        .rev()
        .map(|r| Rung::new(r.dir.flip(), r.index, r.power))
        .collect();
    Word::new(cups.target(), rungs, params).expect("closure pattern is admissible")
}

pub fn closure_words(k: usize, params: &Params) -> (Word, Word) {
    (cups_word(k, params), caps_word(k, params))
}

/// The cut weight nu = (0^{k-1}, 1 | (b-0)^{k-1}) in gl_{k+(k-1)}.
pub fn cut_weight(k: usize) -> Weight {
    let mut entries = vec![WeightEntry::Nat(0); k];
    entries[k - 1] = WeightEntry::Nat(1);
    entries.extend((0..k - 1).map(|_| WeightEntry::BetaMinus(0)));
    Weight::new(entries)
}

/// Cups closing all but one strand: nu to (1^k | (b-1)^{k-1}). The open
/// unit first walks from the interface column to column 1, then the k-1
/// closed strands get the nested cup pattern shifted one column right.
pub fn cut_cups_word(k: usize, params: &Params) -> Word {
    let mut rungs = Vec::new();
    for i in (1..k).rev() {
        rungs.push(Rung::e(i));
    }
    for c in 1..k {
        rungs.push(Rung::e(k));
        if c < k - 1 {
            for d in (1..=c).rev() {
                rungs.push(Rung::e(k - d));
                rungs.push(Rung::e(k + d));
            }
        }
    }
    Word::new(cut_weight(k), rungs, params).expect("cut closure pattern is admissible")
}

pub fn cut_caps_word(k: usize, params: &Params) -> Word {
    let cups = cut_cups_word(k, params);
    let rungs = cups
        .rungs()
        .iter()
        .rev()
        .map(|r| Rung::new(r.dir.flip(), r.index, r.power))
        .collect();
    Word::new(cups.target(), rungs, params).expect("cut closure pattern is admissible")
}

/// caps . compile(b) . cups in End(1_0) of gl_{k+k}.
pub fn close(b: &BraidWord, params: &Params) -> Result<Element> {
    let k = b.strands();
    let cups = Element::from_word(cups_word(k, params), RationalFn::one());
    let caps = Element::from_word(caps_word(k, params), RationalFn::one());
    let body = compile(b, &cups.target().clone(), params)?;
    caps.compose(&body.compose(&cups)?)
}

/// cut-caps . compile(b) . cut-cups in End(1_nu): the closure of all strands
/// but the last.
pub fn cut_close(b: &BraidWord, params: &Params) -> Result<Element> {
    let k = b.strands();
    let cups = Element::from_word(cut_cups_word(k, params), RationalFn::one());
    let caps = Element::from_word(cut_caps_word(k, params), RationalFn::one());
    let body = compile(b, &cups.target().clone(), params)?;
    caps.compose(&body.compose(&cups)?)
}

/// The (cut-)closure as a chain of elements, cups first, caps last; composing
/// the chain right-to-left gives close(b) / cut_close(b).
pub fn closure_chain(b: &BraidWord, cut: bool, params: &Params) -> Result<Vec<Element>> {
    let k = b.strands();
    let (cup, cap) = if cut {
        (cut_cups_word(k, params), cut_caps_word(k, params))
    } else {
        closure_words(k, params)
    };
    let ambient = cup.target();
    let mut chain = vec![Element::from_word(cup, RationalFn::one())];
    for l in b.letters() {
        chain.push(crossing_element(l.index, l.positive, &ambient, params)?);
    }
    chain.push(Element::from_word(cap, RationalFn::one()));
    Ok(chain)
}

/// Scalar of the (cut-)closure, straightening after every crossing so the
/// working element stays compressed on the pure-E basis.
pub fn evaluate_closure(engine: &Engine, b: &BraidWord, cut: bool) -> Result<RationalFn> {
    engine.evaluate_chain(&closure_chain(b, cut, engine.params())?)
}


#[cfg(test)]
mod cut_semantics {
    use super::*;
    use crate::coeff::{qint, Beta, ShiftedInt};

    #[test]
    fn cut_identity_braids_are_circles_plus_strand() {
        // closing all but one strand of the k-strand identity braid leaves
        // k-1 circles and an open strand: value [beta]^(k-1)
        let p = Params::default();
        let eng = Engine::new(p.clone());
        let u = qint(ShiftedInt::beta(), Beta::Generic);
        for k in 1..=4usize {
            let v = evaluate_closure(&eng, &BraidWord::empty(k), true).unwrap();
            assert_eq!(v, u.pow(k as u32 - 1), "k = {k}");
        }
    }
}
