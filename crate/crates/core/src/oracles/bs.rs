//! The Bott-Samelson algebra on the square-free basis σ_K.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::recursion::{rel_coeff_rec, DecoratedWord};
use crate::coxeter::{QuasiCartanMatrix, Word};
use crate::exactring::{MultiPoly, PolyRing};

/// Σ_K c_K σ_K over subsets K ⊆ [m]; zero coefficients are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSClassVector {
    m: usize,
    ring: Arc<PolyRing>,
    coeffs: BTreeMap<Vec<usize>, MultiPoly>,
}

impl BSClassVector {
    pub fn zero(ring: &Arc<PolyRing>, m: usize) -> Self {
        BSClassVector { m, ring: ring.clone(), coeffs: BTreeMap::new() }
    }

    /// The basis element σ_K.
    pub fn basis(ring: &Arc<PolyRing>, m: usize, k: &[usize]) -> Self {
        let mut v = Self::zero(ring, m);
        v.add_term(k.to_vec(), &MultiPoly::one(ring));
        v
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, MultiPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, k: &[usize]) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| MultiPoly::zero(&self.ring))
    }

    pub fn add_term(&mut self, k: Vec<usize>, c: &MultiPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(|| MultiPoly::zero(&self.ring));
        entry.add_assign_ref(c);
        if entry.is_zero() {
            let key: Vec<Vec<usize>> = self.coeffs.iter().filter(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).collect();
            for k in key {
                self.coeffs.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &BSClassVector) -> BSClassVector {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &MultiPoly) -> BSClassVector {
        let mut out = BSClassVector::zero(&self.ring, self.m);
        for (k, x) in &self.coeffs {
            out.add_term(k.clone(), &(x * c));
        }
        out
    }
}

/// p^{ι,K}_{K',K''} from the recursion on the position-decorated word.
pub fn bs_structure_constant(a: &QuasiCartanMatrix, iota: &Word, k: &[usize], kp: &[usize], kpp: &[usize]) -> MultiPoly {
    if kp.iter().chain(kpp).any(|x| !k.contains(x)) || k.len() > kp.len() + kpp.len() {
        return MultiPoly::zero(a.ring());
    }
    rel_coeff_rec(a, &DecoratedWord::positions(iota, k), &DecoratedWord::positions(iota, kp), &DecoratedWord::positions(iota, kpp))
}

fn supersets_within(m: usize, base: &[usize], max_len: usize) -> Vec<Vec<usize>> {
    let free: Vec<usize> = (1..=m).filter(|x| !base.contains(x)).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << free.len()) {
        if base.len() + mask.count_ones() as usize > max_len {
            continue;
        }
        let mut k: Vec<usize> = base.to_vec();
        k.extend(free.iter().enumerate().filter(|(j, _)| mask & (1 << j) != 0).map(|(_, &x)| x));
        k.sort_unstable();
        out.push(k);
    }
    out
}

/// Product in the Bott-Samelson algebra of ι: σ_{K'}σ_{K''} = Σ_K p^{ι,K}_{K',K''} σ_K.
pub fn bs_multiply(a: &QuasiCartanMatrix, iota: &Word, x: &BSClassVector, y: &BSClassVector) -> BSClassVector {
    let m = iota.len();
    assert_eq!(x.m, m);
    assert_eq!(y.m, m);
    let mut cache: HashMap<(Vec<usize>, Vec<usize>, Vec<usize>), MultiPoly> = HashMap::new();
    let mut out = BSClassVector::zero(a.ring(), m);
    for (kp, cx) in &x.coeffs {
        for (kpp, cy) in &y.coeffs {
            let mut union: Vec<usize> = kp.iter().chain(kpp).copied().collect();
            union.sort_unstable();
            union.dedup();
            let coef = cx * cy;
            for k in supersets_within(m, &union, kp.len() + kpp.len()) {
                let key = (k.clone(), kp.clone(), kpp.clone());
                let c = cache.entry(key).or_insert_with(|| bs_structure_constant(a, iota, &k, kp, kpp)).clone();
                if !c.is_zero() {
                    out.add_term(k, &(&coef * &c));
                }
            }
        }
    }
    out
}
