//! The Demazure recursion for relative coefficients, and the composite
//! operator shortcut for repetition-free words.

use std::collections::HashMap;

use crate::coxeter::{QuasiCartanMatrix, Word};
use crate::error::{LrcError, Result};
use crate::exactring::MultiPoly;

/// A word whose entries carry distinct tags: heads are compared by tag,
/// while α, s and x act through the letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedWord {
    entries: Vec<(usize, usize)>,
}

impl DecoratedWord {
    /// Tags equal to letters: ordinary word semantics.
    pub fn plain(w: &Word) -> Self {
        DecoratedWord { entries: w.letters().iter().map(|&l| (l, l)).collect() }
    }

    /// (i_k, k) for k ∈ K, so that positions act as distinct letters.
    pub fn positions(w: &Word, k: &[usize]) -> Self {
        DecoratedWord { entries: k.iter().map(|&p| (w.at(p), p)).collect() }
    }

    /// (i_k, k) for every position.
    pub fn all_positions(w: &Word) -> Self {
        Self::positions(w, &(1..=w.len()).collect::<Vec<_>>())
    }

    pub fn from_pairs(entries: Vec<(usize, usize)>) -> Self {
        DecoratedWord { entries }
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn letters(&self) -> Word {
        Word::new(self.entries.iter().map(|e| e.0).collect())
    }

    fn tag(&self, k: usize) -> Option<usize> {
        self.entries.get(k).map(|e| e.1)
    }
}

struct Rec<'a> {
    a: &'a QuasiCartanMatrix,
    iota: &'a DecoratedWord,
    i1: &'a DecoratedWord,
    i2: &'a DecoratedWord,
    memo: Option<HashMap<(usize, usize, usize), MultiPoly>>,
}

impl Rec<'_> {
    fn p(&mut self, x: usize, y: usize, z: usize) -> MultiPoly {
        let ring = self.a.ring();
        let rest = self.iota.len() - x;
        if self.i1.len() - y > rest || self.i2.len() - z > rest {
            return MultiPoly::zero(ring);
        }
        if rest == 0 {
            return MultiPoly::one(ring);
        }
        if let Some(v) = self.memo.as_ref().and_then(|m| m.get(&(x, y, z))) {
            return v.clone();
        }
        let (letter, tag) = self.iota.entries[x];
        let head1 = self.i1.tag(y) == Some(tag);
        let head2 = self.i2.tag(z) == Some(tag);
        let mut out = self.a.demazure(letter, &self.p(x + 1, y, z));
        if head1 {
            out.add_assign_ref(&self.a.reflect_poly(letter, &self.p(x + 1, y + 1, z)));
        }
        if head2 {
            out.add_assign_ref(&self.a.reflect_poly(letter, &self.p(x + 1, y, z + 1)));
        }
        if head1 && head2 {
            let s = self.a.reflect_poly(letter, &self.p(x + 1, y + 1, z + 1));
            out.add_assign_ref(&(&MultiPoly::alpha(ring, letter) * &s));
        }
        if let Some(m) = self.memo.as_mut() {
            m.insert((x, y, z), out.clone());
        }
        out
    }
}

/// p^ι_{ι',ι''} by head-first recursion, memoized on the suffix triple.
pub fn rel_coeff_rec(a: &QuasiCartanMatrix, iota: &DecoratedWord, i1: &DecoratedWord, i2: &DecoratedWord) -> MultiPoly {
    Rec { a, iota, i1, i2, memo: Some(HashMap::new()) }.p(0, 0, 0)
}

/// Same recursion without the memo table.
pub fn rel_coeff_rec_uncached(a: &QuasiCartanMatrix, iota: &DecoratedWord, i1: &DecoratedWord, i2: &DecoratedWord) -> MultiPoly {
    Rec { a, iota, i1, i2, memo: None }.p(0, 0, 0)
}

/// Plain-word convenience wrapper.
pub fn rel_coeff_rec_words(a: &QuasiCartanMatrix, iota: &Word, i1: &Word, i2: &Word) -> MultiPoly {
    rel_coeff_rec(a, &DecoratedWord::plain(iota), &DecoratedWord::plain(i1), &DecoratedWord::plain(i2))
}

fn is_ordered_sub(iota: &DecoratedWord, sub: &DecoratedWord) -> bool {
    let mut it = iota.entries.iter();
    sub.entries.iter().all(|s| it.any(|e| e == s))
}

/// f_{i_1} ∘ ⋯ ∘ f_{i_m}(1) with f = α s, s or x according to membership
/// of each tag in ι' and ι''.
pub fn rel_coeff_free_path(a: &QuasiCartanMatrix, iota: &DecoratedWord, i1: &DecoratedWord, i2: &DecoratedWord) -> Result<MultiPoly> {
    let mut tags: Vec<usize> = iota.entries.iter().map(|e| e.1).collect();
    tags.sort_unstable();
    if tags.windows(2).any(|w| w[0] == w[1]) {
        return Err(LrcError::NotRepetitionFree(iota.letters().to_string()));
    }
    let ring = a.ring();
    if !is_ordered_sub(iota, i1) || !is_ordered_sub(iota, i2) {
        return Ok(MultiPoly::zero(ring));
    }
    let mut f = MultiPoly::one(ring);
    for &(letter, tag) in iota.entries.iter().rev() {
        let in1 = i1.entries.iter().any(|e| e.1 == tag);
        let in2 = i2.entries.iter().any(|e| e.1 == tag);
        f = match (in1, in2) {
            (true, true) => &MultiPoly::alpha(ring, letter) * &a.reflect_poly(letter, &f),
            (false, false) => a.demazure(letter, &f),
            _ => a.reflect_poly(letter, &f),
        };
    }
    Ok(f)
}
