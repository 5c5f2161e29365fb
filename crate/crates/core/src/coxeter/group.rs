use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Mutex;

use super::word::Word;
use crate::error::{LrcError, Result};

/// A group element, represented by its ShortLex-least reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    canonical: Word,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { canonical: Word::empty() }
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    pub fn length(&self) -> usize {
        self.canonical.len()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// The Coxeter group given by an order matrix (0 = ∞). Solves the word
/// problem by Tits' braid-closure search and caches results.
pub struct CoxeterSystem {
    rank: usize,
    orders: Vec<Vec<u32>>,
    reduced_cache: Mutex<HashMap<Word, GroupElement>>,
    closure_cache: Mutex<HashMap<Word, BTreeSet<Word>>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem").field("rank", &self.rank).field("orders", &self.orders).finish()
    }
}

impl CoxeterSystem {
    pub fn new(orders: Vec<Vec<u32>>) -> Self {
        CoxeterSystem {
            rank: orders.len(),
            orders,
            reduced_cache: Mutex::new(HashMap::new()),
            closure_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// n_ij, 1-based; 0 means ∞.
    pub fn order(&self, i: usize, j: usize) -> u32 {
        self.orders[i - 1][j - 1]
    }

    pub fn orders(&self) -> &[Vec<u32>] {
        &self.orders
    }

    /// Replaces the alternating factor of length n_ij starting at 0-based
    /// `pos` by its mirror. `Ok(None)` when no alternating factor starts there.
    pub fn braid_move(&self, word: &Word, pos: usize) -> Result<Option<Word>> {
        let w = word.letters();
        if pos + 1 >= w.len() || w[pos] == w[pos + 1] {
            return Ok(None);
        }
        let (i, j) = (w[pos], w[pos + 1]);
        let n = self.order(i, j) as usize;
        if n == 0 {
            return Err(LrcError::InfiniteOrderMisuse(i, j));
        }
        if pos + n > w.len() {
            return Ok(None);
        }
        let alternating = (0..n).all(|k| w[pos + k] == if k % 2 == 0 { i } else { j });
        if !alternating {
            return Ok(None);
        }
        let mut out = w.to_vec();
        for k in 0..n {
            out[pos + k] = if k % 2 == 0 { j } else { i };
        }
        Ok(Some(Word::new(out)))
    }

    fn neighbors(&self, word: &Word) -> Vec<Word> {
        (0..word.len().saturating_sub(1)).filter_map(|p| self.braid_move(word, p).ok().flatten()).collect()
    }

    /// Breadth-first braid closure. Stops early and returns the first word
    /// with an adjacent equal pair, if `stop_on_pair` is set.
    fn closure(&self, word: &Word, stop_on_pair: bool) -> (BTreeSet<Word>, Option<(Word, usize)>) {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.clone());
        queue.push_back(word.clone());
        while let Some(cur) = queue.pop_front() {
            if stop_on_pair {
                if let Some(p) = cur.letters().windows(2).position(|x| x[0] == x[1]) {
                    return (BTreeSet::new(), Some((cur, p)));
                }
            }
            for nb in self.neighbors(&cur) {
                if seen.insert(nb.clone()) {
                    queue.push_back(nb);
                }
            }
        }
        (seen.into_iter().collect(), None)
    }

    /// Canonical reduced representative of the element spelled by `word`.
    pub fn normal_form(&self, word: &Word) -> GroupElement {
        if let Some(e) = self.reduced_cache.lock().unwrap().get(word) {
            return e.clone();
        }
        let mut cur = word.clone();
        let closure = loop {
            let (set, pair) = self.closure(&cur, true);
            match pair {
                Some((w, p)) => {
                    let mut letters = w.letters().to_vec();
                    letters.drain(p..p + 2);
                    cur = Word::new(letters);
                }
                None => break set,
            }
        };
        let canonical = closure.iter().next().cloned().unwrap_or_default();
        let elem = GroupElement { canonical: canonical.clone() };
        {
            let mut cache = self.reduced_cache.lock().unwrap();
            for w in &closure {
                cache.insert(w.clone(), elem.clone());
            }
            cache.insert(word.clone(), elem.clone());
        }
        self.closure_cache.lock().unwrap().entry(canonical).or_insert(closure);
        elem
    }

    pub fn element(&self, word: &Word) -> GroupElement {
        self.normal_form(word)
    }

    pub fn is_reduced(&self, word: &Word) -> bool {
        self.normal_form(word).length() == word.len()
    }

    /// R(w), sorted.
    pub fn reduced_words(&self, w: &GroupElement) -> BTreeSet<Word> {
        if let Some(set) = self.closure_cache.lock().unwrap().get(&w.canonical) {
            return set.clone();
        }
        let (set, _) = self.closure(&w.canonical, false);
        self.closure_cache.lock().unwrap().insert(w.canonical.clone(), set.clone());
        set
    }

    /// Checks ι ∈ R(w).
    pub fn check_reduced_for(&self, iota: &Word, w: &GroupElement) -> Result<()> {
        if iota.len() == w.length() && &self.normal_form(iota) == w {
            Ok(())
        } else {
            Err(LrcError::NotReducedFor { word: iota.to_string(), element: w.to_string() })
        }
    }

    /// True iff ℓ(ws) > ℓ(w).
    pub fn is_right_ascent(&self, w: &GroupElement, s: usize) -> bool {
        !self.reduced_words(w).iter().any(|x| x.letters().last() == Some(&s))
    }

    /// Elements of length ≤ `max_len`, ordered by length then canonical word.
    /// Errors with `TooLarge` once more than `cap` elements are found.
    pub fn elements_up_to(&self, max_len: usize, cap: usize) -> Result<Vec<GroupElement>> {
        let mut all = vec![GroupElement::identity()];
        let mut level = vec![GroupElement::identity()];
        for _ in 0..max_len {
            let mut next: BTreeSet<GroupElement> = BTreeSet::new();
            for w in &level {
                for s in 1..=self.rank {
                    if self.is_right_ascent(w, s) {
                        next.insert(self.normal_form(&w.canonical.pushed(s)));
                    }
                }
            }
            if all.len() + next.len() > cap {
                return Err(LrcError::TooLarge { len: all.len() + next.len(), cap });
            }
            level = next.into_iter().collect();
            all.extend(level.iter().cloned());
            if level.is_empty() {
                break;
            }
        }
        Ok(all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn type_a(n: usize) -> CoxeterSystem {
        let orders = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 1,
                        1 => 3,
                        _ => 2,
                    })
                    .collect()
            })
            .collect();
        CoxeterSystem::new(orders)
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn a2_normal_forms() {
        let g = type_a(2);
        assert_eq!(g.normal_form(&w("1,1")), GroupElement::identity());
        assert_eq!(g.normal_form(&w("2,1,2")).canonical(), &w("1,2,1"));
        let longest = g.normal_form(&w("1,2,1"));
        let rw: Vec<Word> = g.reduced_words(&longest).into_iter().collect();
        assert_eq!(rw, vec![w("1,2,1"), w("2,1,2")]);
    }

    #[test]
    fn a3_reduced_word_is_kept() {
        let g = type_a(3);
        assert_eq!(g.normal_form(&w("3,2,1,3,2")).length(), 5);
        assert_eq!(g.reduced_words(&GroupElement::identity()).len(), 1);
    }

    #[test]
    fn a3_longest_has_sixteen_reduced_words() {
        let g = type_a(3);
        let longest = g.normal_form(&w("1,2,1,3,2,1"));
        assert_eq!(longest.length(), 6);
        assert_eq!(g.reduced_words(&longest).len(), 16);
        // brute force: every word of length 6 that normalizes to the longest element
        let mut count = 0;
        for code in 0..729usize {
            let mut c = code;
            let letters: Vec<usize> = (0..6)
                .map(|_| {
                    let l = c % 3 + 1;
                    c /= 3;
                    l
                })
                .collect();
            if g.normal_form(&Word::new(letters)) == longest {
                count += 1;
            }
        }
        assert_eq!(count, 16);
    }

    #[test]
    fn a5_reduced_word_count() {
        let g = type_a(5);
        let e = g.normal_form(&w("5,2,3,4,3,1,2,1"));
        assert_eq!(g.reduced_words(&e).len(), 64);
    }

    #[test]
    fn group_sizes() {
        assert_eq!(type_a(3).elements_up_to(10, 1000).unwrap().len(), 24);
        assert_eq!(type_a(4).elements_up_to(20, 1000).unwrap().len(), 120);
        let inf = CoxeterSystem::new(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(inf.elements_up_to(6, 100).unwrap().len(), 13);
        assert!(matches!(inf.elements_up_to(60, 20), Err(LrcError::TooLarge { .. })));
    }

    #[test]
    fn braid_move_across_infinity_is_an_error() {
        let inf = CoxeterSystem::new(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(inf.braid_move(&w("1,2,1"), 0), Err(LrcError::InfiniteOrderMisuse(1, 2)));
        assert_eq!(inf.normal_form(&w("1,2,1,2")).length(), 4);
        assert_eq!(inf.normal_form(&w("1,2,2,1")).length(), 0);
    }
}
