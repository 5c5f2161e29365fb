use std::cmp::Ordering;
use std::fmt;

use crate::error::{LrcError, Result};

/// A finite sequence of 1-based generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses `3,2,1`; the empty string, `e` and `()` denote the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "()" {
            return Ok(Word::empty());
        }
        let t = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
        t.split(',')
            .map(|part| {
                let part = part.trim();
                match part.parse::<usize>() {
                    Ok(0) | Err(_) => Err(LrcError::Parse(format!("bad letter `{part}` in word `{text}`"))),
                    Ok(n) => Ok(n),
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter at 1-based position `k`.
    pub fn at(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l == 0 || l > rank) {
            Some(&letter) => Err(LrcError::LetterOutOfRange { letter, rank }),
            None => Ok(()),
        }
    }

    /// ι_K for a sorted 1-based position set K.
    pub fn subword(&self, positions: &[usize]) -> Word {
        Word(positions.iter().map(|&k| self.0[k - 1]).collect())
    }

    pub fn pushed(&self, letter: usize) -> Word {
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// No two adjacent letters are equal.
    pub fn is_admissible(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_repetition_free(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.0.iter().all(|l| seen.insert(*l))
    }

    /// Digits run together, as in `σ_1212`; falls back to the comma form
    /// when some letter exceeds 9.
    pub fn compact(&self) -> String {
        if self.0.is_empty() {
            "e".into()
        } else if self.0.iter().all(|&l| l < 10) {
            self.0.iter().map(|l| l.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

/// ShortLex: shorter words first, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// True iff no two adjacent entries coincide.
pub fn is_admissible_seq(word: &Word) -> bool {
    word.is_admissible()
}

/// All strictly increasing 1-based position sets K with ι_K = ι',
/// in lexicographic order.
pub fn subword_occurrences(iota: &Word, sub: &Word) -> Vec<Vec<usize>> {
    fn go(iota: &[usize], sub: &[usize], start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == sub.len() {
            out.push(acc.clone());
            return;
        }
        let need = sub.len() - acc.len();
        let letter = sub[acc.len()];
        for k in start..=iota.len() - need {
            if iota[k] == letter {
                acc.push(k + 1);
                go(iota, sub, k + 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if sub.len() <= iota.len() {
        go(iota.letters(), sub.letters(), 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Sorted 1-based subsets of `[m]` with exactly `k` elements, lexicographic.
pub fn subsets_of_size(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for x in start..=m {
            if m + 1 - x < k - acc.len() {
                break;
            }
            acc.push(x);
            go(m, k, x + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k <= m {
        go(m, k, 1, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("3,2,1").letters(), &[3, 2, 1]);
        assert_eq!(w(" 1, 2 ").to_string(), "1,2");
        assert!(w("").is_empty());
        assert!(w("e").is_empty());
        assert!(Word::parse("1,0").is_err());
        assert!(Word::parse("1,x").is_err());
        assert_eq!(w("1,2,1,2").compact(), "1212");
    }

    #[test]
    fn admissible_examples() {
        assert!(is_admissible_seq(&w("1,2,1,2")));
        assert!(!is_admissible_seq(&w("1,1")));
        assert!(is_admissible_seq(&Word::empty()));
    }

    #[test]
    fn occurrences_examples() {
        let occ = subword_occurrences(&w("1,2,1,2,1"), &w("1,2,1"));
        assert_eq!(occ, vec![vec![1, 2, 3], vec![1, 2, 5], vec![1, 4, 5], vec![3, 4, 5]]);
        assert_eq!(subword_occurrences(&w("1,2"), &Word::empty()), vec![Vec::<usize>::new()]);
        let occ = subword_occurrences(&w("5,2,3,4,3,1,2,1"), &w("2,3,4,3,1,2"));
        assert_eq!(occ, vec![vec![2, 3, 4, 5, 6, 7]]);
        assert!(subword_occurrences(&w("1"), &w("1,1")).is_empty());
    }

    #[test]
    fn shortlex_order() {
        assert!(w("2") < w("1,1"));
        assert!(w("1,2,1") < w("2,1,2"));
    }

    #[test]
    fn subsets() {
        assert_eq!(subsets_of_size(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets_of_size(2, 0), vec![Vec::<usize>::new()]);
        assert!(subsets_of_size(2, 3).is_empty());
    }
}
