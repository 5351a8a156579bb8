//! Rung words: sequences of divided-power generators applied to a source
//! weight, stored in application order (first-applied first). A word whose
//! intermediate weights ever leave the admissible set is the zero object and
//! is never constructed.

use std::fmt;

use crate::params::Params;
use crate::schur::weight::Weight;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Dir {
    E,
    F,
}

impl Dir {
    pub fn sign(self) -> i64 {
        match self {
            Dir::E => 1,
            Dir::F => -1,
        }
    }

    pub fn flip(self) -> Dir {
        match self {
            Dir::E => Dir::F,
            Dir::F => Dir::E,
        }
    }
}

/// A divided-power generator E_i^(a) or F_i^(a).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Rung {
    pub dir: Dir,
    pub index: usize,
    pub power: u32,
}

impl Rung {
    pub fn new(dir: Dir, index: usize, power: u32) -> Self {
        debug_assert!(power >= 1);
        Rung { dir, index, power }
    }

    pub fn e(index: usize) -> Self {
        Rung::new(Dir::E, index, 1)
    }

    pub fn f(index: usize) -> Self {
        Rung::new(Dir::F, index, 1)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    source: Weight,
    rungs: Vec<Rung>,
}

impl Word {
    /// Validating constructor: None exactly when some intermediate weight is
    /// non-admissible (the word is the zero object).
    pub fn new(source: Weight, rungs: Vec<Rung>, params: &Params) -> Option<Word> {
        let mut cur = source.clone();
        for r in &rungs {
            debug_assert!(r.power >= 1 && r.index >= 1 && r.index < source.len());
            cur = cur.apply(r.index, r.dir.sign(), r.power as i64, params)?;
        }
        Some(Word { source, rungs })
    }

    /// Constructor for words already known admissible (e.g. produced from an
    /// admissible word by an endpoint-preserving transformation).
    pub(crate) fn new_unchecked(source: Weight, rungs: Vec<Rung>) -> Word {
        let w = Word { source, rungs };
        debug_assert!(
            w.weights()
                .all(|v| v.entries().iter().all(|e| e.offset() >= 0)),
            "unchecked word has inadmissible intermediate: {w}"
        );
        w
    }

    pub fn empty(source: Weight) -> Word {
        Word {
            source,
            rungs: Vec::new(),
        }
    }

    pub fn source(&self) -> &Weight {
        &self.source
    }

    pub fn rungs(&self) -> &[Rung] {
        &self.rungs
    }

    pub fn len(&self) -> usize {
        self.rungs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rungs.is_empty()
    }

    /// Weight entering position pos (weight_before(0) = source).
    pub fn weight_before(&self, pos: usize) -> Weight {
        let mut cur = self.source.clone();
        for r in &self.rungs[..pos] {
            cur = cur.apply_arith(r.index, r.dir.sign(), r.power as i64);
        }
        cur
    }

    pub fn target(&self) -> Weight {
        self.weight_before(self.rungs.len())
    }

    /// All weights along the word, source first, target last.
    pub fn weights(&self) -> impl Iterator<Item = Weight> + '_ {
        let mut cur = Some(self.source.clone());
        let mut it = self.rungs.iter();
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            cur = it
                .next()
                .map(|r| out.apply_arith(r.index, r.dir.sign(), r.power as i64));
            Some(out)
        })
    }

    /// Normal shape: no F rung later (in application order) than any E rung.
    pub fn is_normal(&self) -> bool {
        let first_e = self.rungs.iter().position(|r| r.dir == Dir::E);
        match first_e {
            None => true,
            Some(p) => self.rungs[p..].iter().all(|r| r.dir == Dir::E),
        }
    }

    /// Termination measure: (total power, sum of F positions, length); every
    /// rewrite step decreases it lexicographically.
    pub fn measure(&self) -> (u64, u64, u64) {
        let total: u64 = self.rungs.iter().map(|r| r.power as u64).sum();
        let fpos: u64 = self
            .rungs
            .iter()
            .enumerate()
            .filter(|(_, r)| r.dir == Dir::F)
            .map(|(i, _)| i as u64)
            .sum();
        (total, fpos, self.rungs.len() as u64)
    }

    /// The anti-isomorphism: reverse the rungs, exchange E and F, reflect the
    /// indices, and rotate the endpoint weights.
    pub fn rotate180(&self) -> Word {
        let n = self.source.len();
        let rungs = self
            .rungs
            .iter()
            .rev()
            .map(|r| Rung::new(r.dir.flip(), n - r.index, r.power))
            .collect();
        Word::new_unchecked(self.target().rotate180(), rungs)
    }

    /// Shift into a padded ambient weight: r zero columns on the left, s on
    /// the right.
    pub fn pad(&self, r: usize, s: usize) -> Word {
        let rungs = self
            .rungs
            .iter()
            .map(|g| Rung::new(g.dir, g.index + r, g.power))
            .collect();
        Word::new_unchecked(self.source.pad(r, s), rungs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rungs.is_empty() {
            write!(f, "1")?;
        }
        for (i, r) in self.rungs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let d = match r.dir {
                Dir::E => "E",
                Dir::F => "F",
            };
            write!(f, "{d}{}", r.index)?;
            if r.power > 1 {
                write!(f, "^({})", r.power)?;
            }
        }
        write!(f, " @ {}", self.source)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::weight::WeightEntry;

    fn w(nat: &[i64], beta: &[i64]) -> Weight {
        let mut e: Vec<WeightEntry> = nat.iter().map(|&n| WeightEntry::Nat(n)).collect();
        e.extend(beta.iter().map(|&n| WeightEntry::BetaMinus(n)));
        Weight::new(e)
    }

    #[test]
    fn zero_object_never_stored() {
        let p = Params::default();
        // F1 from (0 | b-0) dies immediately
        assert!(Word::new(w(&[0], &[0]), vec![Rung::f(1)], &p).is_none());
        // E1 F1 from (0 | b-0) is fine
        let word = Word::new(w(&[0], &[0]), vec![Rung::e(1), Rung::f(1)], &p).unwrap();
        assert_eq!(word.target(), w(&[0], &[0]));
    }

    #[test]
    fn display_matches_fixture_format() {
        let p = Params::default();
        // F2^(3) from (0,1|b-1,b) drops entry 2 to -2: zero object
        let dead = Word::new(
            w(&[0, 1], &[1, 0]),
            vec![Rung::new(Dir::F, 2, 3), Rung::e(1)],
            &p,
        );
        assert!(dead.is_none());
        let word = Word::new(
            w(&[2, 0], &[1]),
            vec![Rung::new(Dir::F, 1, 2), Rung::e(2)],
            &p,
        )
        .unwrap();
        assert_eq!(word.to_string(), "F1^(2) E2 @ (2,0|b-1)");
        assert_eq!(Word::empty(w(&[0], &[0])).to_string(), "1 @ (0|b)");
    }

    #[test]
    fn normal_shape_detection() {
        let p = Params::default();
        let src = w(&[1, 1], &[]);
        let fe = Word::new(src.clone(), vec![Rung::f(1), Rung::e(1)], &p).unwrap();
        assert!(fe.is_normal());
        let ef = Word::new(src, vec![Rung::e(1), Rung::f(1)], &p).unwrap();
        assert!(!ef.is_normal());
        assert!(Word::empty(w(&[0], &[0])).is_normal());
    }

    #[test]
    fn rotate_involution_on_words() {
        let p = Params::default();
        let src = w(&[1, 0], &[0]);
        let word = Word::new(src, vec![Rung::e(2), Rung::f(2), Rung::f(1)], &p).unwrap();
        let back = word.rotate180().rotate180();
        assert_eq!(back, word);
    }

    #[test]
    fn pad_shifts_indices() {
        let p = Params::default();
        let word = Word::new(w(&[0], &[0]), vec![Rung::e(1), Rung::f(1)], &p).unwrap();
        let padded = word.pad(1, 1);
        assert_eq!(padded.source(), &w(&[0, 0], &[0, 0]));
        assert_eq!(padded.rungs()[0], Rung::e(2));
        assert_eq!(padded.target(), w(&[0, 0], &[0, 0]));
    }
}
