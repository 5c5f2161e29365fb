//! Bounded maps and the depth-first summand walker shared by every
//! closed-form coefficient.

use std::fmt;

use crate::coxeter::{QuasiCartanMatrix, RootVector, Word};
use crate::error::{LrcError, Result};
use crate::exactring::MultiPoly;

/// φ: L → {0} ∪ [m]∖M with φ(ℓ) < ℓ, hitting every k ∈ [m]∖M exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundedMap {
    m: usize,
    l: Vec<usize>,
    mset: Vec<usize>,
    targets: Vec<usize>,
}

impl BoundedMap {
    pub fn new(m: usize, l: Vec<usize>, mset: Vec<usize>, targets: Vec<usize>) -> Result<Self> {
        let map = BoundedMap { m, l, mset, targets };
        map.check()?;
        Ok(map)
    }

    fn check(&self) -> Result<()> {
        let bad = |s: &str| Err(LrcError::HypothesisNotMet(format!("not a bounded map: {s}")));
        if self.l.len() != self.targets.len() {
            return bad("one target per element of L");
        }
        if !is_sorted_subset(&self.l, self.m) || !is_sorted_subset(&self.mset, self.m) {
            return bad("L and M must be sorted subsets of [m]");
        }
        if self.l.iter().any(|x| !self.mset.contains(x)) {
            return bad("L must lie in M");
        }
        for (&l, &t) in self.l.iter().zip(&self.targets) {
            if t >= l || (t != 0 && self.mset.contains(&t)) {
                return bad("targets must lie below their source, outside M");
            }
        }
        for k in (1..=self.m).filter(|k| !self.mset.contains(k)) {
            if self.targets.iter().filter(|&&t| t == k).count() != 1 {
                return bad("every position outside M needs exactly one preimage");
            }
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn l(&self) -> &[usize] {
        &self.l
    }

    pub fn m_set(&self) -> &[usize] {
        &self.mset
    }

    /// Targets listed in the order of L; 0 is the sink.
    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn target(&self, l: usize) -> Option<usize> {
        self.l.iter().position(|&x| x == l).map(|k| self.targets[k])
    }

    /// No element is sent to 0.
    pub fn is_bijection(&self) -> bool {
        self.targets.iter().all(|&t| t != 0)
    }

    /// M ∪ (φ(L_{<ℓ}) ∖ {0}) as a bitmask over positions.
    fn visible_before(&self, idx: usize) -> u64 {
        let mut mask = to_mask(&self.mset);
        for &t in &self.targets[..idx] {
            if t != 0 {
                mask |= 1 << t;
            }
        }
        mask
    }
}

impl fmt::Display for BoundedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.l.iter().zip(&self.targets).map(|(l, t)| format!("{l}->{t}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn is_sorted_subset(s: &[usize], m: usize) -> bool {
    s.windows(2).all(|w| w[0] < w[1]) && s.iter().all(|&x| x >= 1 && x <= m)
}

pub(crate) fn to_mask(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |acc, &x| acc | (1 << x))
}

/// Letters of ι at the positions of `mask`, in order, contain no equal
/// adjacent pair.
fn mask_admissible(iota: &[usize], mask: u64) -> bool {
    let mut prev = 0;
    for (k, &letter) in iota.iter().enumerate() {
        if mask & (1 << (k + 1)) != 0 {
            if letter == prev {
                return false;
            }
            prev = letter;
        }
    }
    true
}

/// All bounded maps L → {0} ∪ [m]∖M, targets in lexicographic order
/// (0 first).
pub fn enumerate_bounded_maps(l: &[usize], mset: &[usize], m: usize) -> Result<Vec<BoundedMap>> {
    if l.len() + mset.len() < m {
        return Err(LrcError::SizeMismatch { have: l.len() + mset.len(), m });
    }
    if !is_sorted_subset(l, m) || !is_sorted_subset(mset, m) || l.iter().any(|x| !mset.contains(x)) {
        return Err(LrcError::HypothesisNotMet("need sorted L ⊆ M ⊆ [m]".into()));
    }
    let mut out = Vec::new();
    let iota = vec![0; m];
    walk_targets(&iota, l, mset, m, false, &mut |targets, _| {
        out.push(BoundedMap { m, l: l.to_vec(), mset: mset.to_vec(), targets: targets.to_vec() });
        true
    });
    Ok(out)
}

/// Depth-first enumeration of target vectors. `iota` is only used for the
/// admissibility flag; with `prune` set, inadmissible branches are cut.
/// The callback receives the targets and the admissibility flag.
fn walk_targets(iota: &[usize], l: &[usize], mset: &[usize], m: usize, prune: bool, emit: &mut dyn FnMut(&[usize], bool) -> bool) {
    let complement: Vec<usize> = (1..=m).filter(|k| !mset.contains(k)).collect();
    let zeros = l.len() - complement.len();
    let mut targets = Vec::with_capacity(l.len());
    let mut used = 0u64;
    fn go(
        iota: &[usize],
        l: &[usize],
        complement: &[usize],
        base: u64,
        zeros_left: usize,
        used: &mut u64,
        targets: &mut Vec<usize>,
        adm: bool,
        prune: bool,
        emit: &mut dyn FnMut(&[usize], bool) -> bool,
    ) {
        let idx = targets.len();
        if idx == l.len() {
            emit(targets, adm);
            return;
        }
        let visible = base | *used;
        let adm = adm && mask_admissible(iota, visible);
        if prune && !adm {
            return;
        }
        let ell = l[idx];
        if zeros_left > 0 {
            targets.push(0);
            go(iota, l, complement, base, zeros_left - 1, used, targets, adm, prune, emit);
            targets.pop();
        }
        for &c in complement.iter().take_while(|&&c| c < ell) {
            if *used & (1 << c) != 0 {
                continue;
            }
            *used |= 1 << c;
            targets.push(c);
            go(iota, l, complement, base, zeros_left, used, targets, adm, prune, emit);
            targets.pop();
            *used &= !(1 << c);
        }
    }
    go(iota, l, &complement, to_mask(mset), zeros, &mut used, &mut targets, true, prune, emit);
}

/// True iff ι restricted to M ∪ (φ(L_{<ℓ}) ∖ {0}) is admissible for all ℓ ∈ L.
pub fn is_iota_admissible(iota: &Word, map: &BoundedMap) -> bool {
    (0..map.l.len()).all(|idx| mask_admissible(iota.letters(), map.visible_before(idx)))
}

/// One factor p_ℓ^{(φ)}: a constant for a nonzero target, a linear form
/// w_ℓ(α_{i_ℓ}) for a 0-target.
pub(crate) fn factor(a: &QuasiCartanMatrix, iota: &[usize], visible: u64, ell: usize, target: usize) -> MultiPoly {
    let letters: Vec<usize> = (target + 1..ell).filter(|r| visible & (1 << r) != 0).map(|r| iota[r - 1]).collect();
    let v = a.act_letters(&letters, &RootVector::simple(a.ring(), iota[ell - 1]));
    if target == 0 {
        v.to_poly()
    } else {
        -&a.pair(&v, iota[target - 1])
    }
}

/// The pair (p_φ, α-product): scalar factors and 0-target factors multiplied
/// separately.
pub fn p_phi(a: &QuasiCartanMatrix, iota: &Word, map: &BoundedMap) -> (MultiPoly, MultiPoly) {
    let (p, alpha, _) = p_phi_factors(a, iota.letters(), map.l(), map.m_set(), map.targets());
    (p, alpha)
}

pub(crate) fn p_phi_factors(
    a: &QuasiCartanMatrix,
    iota: &[usize],
    l: &[usize],
    mset: &[usize],
    targets: &[usize],
) -> (MultiPoly, MultiPoly, Vec<MultiPoly>) {
    let ring = a.ring();
    let mut p = MultiPoly::one(ring);
    let mut alpha = MultiPoly::one(ring);
    let mut scalars = Vec::new();
    let mut visible = to_mask(mset);
    for (&ell, &t) in l.iter().zip(targets) {
        let f = factor(a, iota, visible, ell, t);
        if t == 0 {
            alpha = &alpha * &f;
        } else {
            p = &p * &f;
            scalars.push(f);
            visible |= 1 << t;
        }
    }
    (p, alpha, scalars)
}

/// Calls `emit(targets, admissible)` for every bounded map on
/// L = K'∩K'', M = K'∪K''. `prune` skips inadmissible branches.
pub(crate) fn walk_pair(iota: &[usize], kp: &[usize], kpp: &[usize], prune: bool, emit: &mut dyn FnMut(&[usize], &[usize], &[usize], bool)) {
    let m = iota.len();
    let l: Vec<usize> = kp.iter().copied().filter(|x| kpp.contains(x)).collect();
    let mut mset: Vec<usize> = kp.iter().chain(kpp).copied().collect();
    mset.sort_unstable();
    mset.dedup();
    if l.len() + mset.len() < m {
        return;
    }
    walk_targets(iota, &l, &mset, m, prune, &mut |t, adm| {
        emit(&l, &mset, t, adm);
        true
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijections_of_the_example() {
        let maps = enumerate_bounded_maps(&[3, 4], &[3, 4], 4).unwrap();
        let t: Vec<&[usize]> = maps.iter().map(|m| m.targets()).collect();
        assert_eq!(t, vec![&[1, 2][..], &[2, 1][..]]);
        let iota = Word::new(vec![1, 2, 1, 2]);
        assert!(is_iota_admissible(&iota, &maps[1]));
        assert!(!is_iota_admissible(&iota, &maps[0]));
    }

    #[test]
    fn empty_map() {
        let maps = enumerate_bounded_maps(&[], &[1, 2, 3], 3).unwrap();
        assert_eq!(maps.len(), 1);
        assert!(maps[0].l().is_empty());
        assert!(is_iota_admissible(&Word::new(vec![1, 1, 2]), &maps[0]));
    }

    #[test]
    fn single_position_needs_a_preimage_for_the_gap() {
        // [2] ∖ M = {1} must be hit, so 2 ↦ 0 is not bounded.
        let maps = enumerate_bounded_maps(&[2], &[2], 2).unwrap();
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].targets(), &[1]);
        assert!(BoundedMap::new(2, vec![2], vec![2], vec![0]).is_err());
        assert!(BoundedMap::new(2, vec![2], vec![1, 2], vec![0]).is_ok());
    }

    #[test]
    fn zero_targets_when_m_is_full() {
        let maps = enumerate_bounded_maps(&[2], &[1, 2], 2).unwrap();
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].targets(), &[0]);
        let maps = enumerate_bounded_maps(&[2, 3], &[2, 3], 3).unwrap();
        let t: Vec<&[usize]> = maps.iter().map(|m| m.targets()).collect();
        assert_eq!(t, vec![&[0, 1][..], &[1, 0][..]]);
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(enumerate_bounded_maps(&[], &[1], 3), Err(LrcError::SizeMismatch { have: 1, m: 3 }));
    }
}
