use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::maps::{p_phi_factors, walk_pair, BoundedMap};
use crate::coxeter::{subword_occurrences, GroupElement, QuasiCartanMatrix, Word};
use crate::error::{LrcError, Result};
use crate::exactring::{MultiPoly, Sign};

/// Which bounded maps enter a sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    /// Only ι-admissible maps (requires an admissible ι).
    Admissible,
    All,
}

impl std::str::FromStr for Filter {
    type Err = LrcError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "admissible" => Ok(Filter::Admissible),
            "all" => Ok(Filter::All),
            _ => Err(LrcError::Parse(format!("unknown filter `{s}`"))),
        }
    }
}

/// One summand of a closed-form coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandTrace {
    pub kprime: Vec<usize>,
    pub kdoubleprime: Vec<usize>,
    pub phi: BoundedMap,
    pub p: MultiPoly,
    pub alpha_product: MultiPoly,
    pub admissible: bool,
    /// The constant factors of p, in the order of L (0-targets omitted).
    pub factors: Vec<MultiPoly>,
}

impl SummandTrace {
    pub fn value(&self) -> MultiPoly {
        &self.p * &self.alpha_product
    }

    pub fn to_json(&self) -> Value {
        let phi: serde_json::Map<String, Value> =
            self.phi.l().iter().zip(self.phi.targets()).map(|(l, t)| (l.to_string(), json!(t.to_string()))).collect();
        json!({
            "kprime": self.kprime,
            "kdoubleprime": self.kdoubleprime,
            "L": self.phi.l(),
            "phi": phi,
            "p": self.p.render(),
            "alpha_product": self.alpha_product.render(),
            "admissible": self.admissible,
        })
    }
}

/// Summand counts of one enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SummandCount {
    pub admissible: usize,
    pub all: usize,
}

fn check_base(iota: &Word, filter: Filter) -> Result<()> {
    if filter == Filter::Admissible && !iota.is_admissible() {
        return Err(LrcError::NonAdmissibleBase(iota.to_string()));
    }
    Ok(())
}

/// Σ over bounded maps for one pair (K', K'').
fn pair_sum(a: &QuasiCartanMatrix, iota: &[usize], kp: &[usize], kpp: &[usize], filter: Filter) -> MultiPoly {
    let mut acc = MultiPoly::zero(a.ring());
    walk_pair(iota, kp, kpp, filter == Filter::Admissible, &mut |l, mset, t, _| {
        let (p, alpha, _) = p_phi_factors(a, iota, l, mset, t);
        if !p.is_zero() {
            acc.add_assign_ref(&(&p * &alpha));
        }
    });
    acc
}

fn pair_traces(a: &QuasiCartanMatrix, iota: &[usize], kp: &[usize], kpp: &[usize], filter: Filter) -> Vec<SummandTrace> {
    let mut out = Vec::new();
    let m = iota.len();
    walk_pair(iota, kp, kpp, filter == Filter::Admissible, &mut |l, mset, t, adm| {
        let (p, alpha_product, factors) = p_phi_factors(a, iota, l, mset, t);
        out.push(SummandTrace {
            kprime: kp.to_vec(),
            kdoubleprime: kpp.to_vec(),
            phi: BoundedMap::new(m, l.to_vec(), mset.to_vec(), t.to_vec()).expect("walker yields bounded maps"),
            p,
            alpha_product,
            admissible: adm,
            factors,
        });
    });
    out
}

fn pairs<'a>(kps: &'a [Vec<usize>], kpps: &'a [Vec<usize>], m: usize) -> Vec<(&'a [usize], &'a [usize])> {
    kps.iter()
        .flat_map(|kp| kpps.iter().map(move |kpp| (kp.as_slice(), kpp.as_slice())))
        .filter(|(kp, kpp)| kp.len() + kpp.len() >= m)
        .collect()
}

/// Σ over all (K', K'') ∈ `kps` × `kpps` and bounded maps on K'∩K''.
pub fn sum_over_embeddings(
    a: &QuasiCartanMatrix,
    iota: &Word,
    kps: &[Vec<usize>],
    kpps: &[Vec<usize>],
    filter: Filter,
) -> Result<MultiPoly> {
    check_base(iota, filter)?;
    iota.check_rank(a.rank())?;
    let letters = iota.letters();
    let parts: Vec<MultiPoly> =
        pairs(kps, kpps, iota.len()).into_par_iter().map(|(kp, kpp)| pair_sum(a, letters, kp, kpp, filter)).collect();
    let mut acc = MultiPoly::zero(a.ring());
    for p in &parts {
        acc.add_assign_ref(p);
    }
    Ok(acc)
}

/// Every summand, in the order K' lex, K'' lex, targets lex.
pub fn trace_over_embeddings(
    a: &QuasiCartanMatrix,
    iota: &Word,
    kps: &[Vec<usize>],
    kpps: &[Vec<usize>],
    filter: Filter,
) -> Result<Vec<SummandTrace>> {
    check_base(iota, filter)?;
    iota.check_rank(a.rank())?;
    let letters = iota.letters();
    let chunks: Vec<Vec<SummandTrace>> =
        pairs(kps, kpps, iota.len()).into_par_iter().map(|(kp, kpp)| pair_traces(a, letters, kp, kpp, filter)).collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Position sets K with ι_K ∈ R(u), lexicographic.
pub fn embeddings(a: &QuasiCartanMatrix, iota: &Word, u: &GroupElement) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> =
        a.system().reduced_words(u).iter().flat_map(|rw| subword_occurrences(iota, rw)).collect();
    out.sort();
    out
}

/// p^ι_{ι',ι''} by the bounded-map formula.
pub fn relative_coefficient(a: &QuasiCartanMatrix, iota: &Word, i1: &Word, i2: &Word, filter: Filter) -> Result<MultiPoly> {
    sum_over_embeddings(a, iota, &subword_occurrences(iota, i1), &subword_occurrences(iota, i2), filter)
}

pub fn relative_trace(a: &QuasiCartanMatrix, iota: &Word, i1: &Word, i2: &Word, filter: Filter) -> Result<Vec<SummandTrace>> {
    trace_over_embeddings(a, iota, &subword_occurrences(iota, i1), &subword_occurrences(iota, i2), filter)
}

fn reduced_base(a: &QuasiCartanMatrix, iota: &Word, w: &GroupElement) -> Result<()> {
    iota.check_rank(a.rank())?;
    a.system().check_reduced_for(iota, w)
}

/// p^w_{u,v} computed along ι ∈ R(w).
pub fn equivariant_lr(a: &QuasiCartanMatrix, u: &GroupElement, v: &GroupElement, w: &GroupElement, iota: &Word) -> Result<MultiPoly> {
    reduced_base(a, iota, w)?;
    equivariant_on_word(a, u, v, iota, Filter::Admissible)
}

/// p^ι_{u,v} for any admissible word ι (not necessarily reduced).
pub fn equivariant_on_word(a: &QuasiCartanMatrix, u: &GroupElement, v: &GroupElement, iota: &Word, filter: Filter) -> Result<MultiPoly> {
    if u.length() + v.length() < iota.len() {
        return Ok(MultiPoly::zero(a.ring()));
    }
    sum_over_embeddings(a, iota, &embeddings(a, iota, u), &embeddings(a, iota, v), filter)
}

/// c^w_{u,v}; zero unless ℓ(u) + ℓ(v) = ℓ(w).
pub fn lr_coefficient(
    a: &QuasiCartanMatrix,
    u: &GroupElement,
    v: &GroupElement,
    w: &GroupElement,
    iota: &Word,
    filter: Filter,
) -> Result<MultiPoly> {
    reduced_base(a, iota, w)?;
    if u.length() + v.length() != w.length() {
        return Ok(MultiPoly::zero(a.ring()));
    }
    equivariant_on_word(a, u, v, iota, filter)
}

/// Summands of c^w_{u,v} (or p^w_{u,v}) along ι.
pub fn lr_trace(
    a: &QuasiCartanMatrix,
    u: &GroupElement,
    v: &GroupElement,
    w: &GroupElement,
    iota: &Word,
    filter: Filter,
) -> Result<Vec<SummandTrace>> {
    reduced_base(a, iota, w)?;
    if u.length() + v.length() < w.length() {
        return Ok(Vec::new());
    }
    trace_over_embeddings(a, iota, &embeddings(a, iota, u), &embeddings(a, iota, v), filter)
}

pub fn count_summands(a: &QuasiCartanMatrix, u: &GroupElement, v: &GroupElement, w: &GroupElement, iota: &Word) -> Result<SummandCount> {
    let all = lr_trace(a, u, v, w, iota, Filter::All)?;
    Ok(SummandCount { admissible: all.iter().filter(|s| s.admissible).count(), all: all.len() })
}

/// p^{ι,K}_{K',K''}: the Bott-Samelson coefficient, never filtered.
pub fn bs_coefficient(a: &QuasiCartanMatrix, iota: &Word, k: &[usize], kp: &[usize], kpp: &[usize]) -> Result<MultiPoly> {
    for set in [k, kp, kpp] {
        if set.windows(2).any(|w| w[0] >= w[1]) || set.iter().any(|&x| x == 0 || x > iota.len()) {
            return Err(LrcError::NotNested(format!("{set:?} is not a sorted subset of [{}]", iota.len())));
        }
    }
    if let Some(x) = kp.iter().chain(kpp).find(|x| !k.contains(x)) {
        return Err(LrcError::NotNested(format!("position {x} of K' ∪ K'' is not in K = {k:?}")));
    }
    if k.len() > kp.len() + kpp.len() {
        return Ok(MultiPoly::zero(a.ring()));
    }
    let relabel = |s: &[usize]| -> Vec<usize> { s.iter().map(|x| k.iter().position(|y| y == x).unwrap() + 1).collect() };
    let sub = iota.subword(k);
    sub.check_rank(a.rank())?;
    Ok(pair_sum(a, sub.letters(), &relabel(kp), &relabel(kpp), Filter::All))
}

fn nonneg_part(a: &QuasiCartanMatrix, f: &MultiPoly) -> Result<MultiPoly> {
    let c = f
        .constant_value()
        .ok_or_else(|| LrcError::HypothesisNotMet(format!("factor {f} has no numeric sign")))?;
    Ok(match a.ring().field().sign(&c) {
        Sign::Negative => MultiPoly::zero(a.ring()),
        _ => f.clone(),
    })
}

/// c^{ι,+}_{u,v}: every factor p_ℓ replaced by max(p_ℓ, 0).
pub fn plus_truncation(a: &QuasiCartanMatrix, u: &GroupElement, v: &GroupElement, w: &GroupElement, iota: &Word) -> Result<MultiPoly> {
    if u.length() + v.length() != w.length() {
        return Err(LrcError::HypothesisNotMet("plus truncation needs l(u) + l(v) = l(w)".into()));
    }
    let mut acc = MultiPoly::zero(a.ring());
    for s in lr_trace(a, u, v, w, iota, Filter::Admissible)? {
        let mut term = MultiPoly::one(a.ring());
        for f in &s.factors {
            term = &term * &nonneg_part(a, f)?;
        }
        acc.add_assign_ref(&term);
    }
    Ok(acc)
}

/// c^{w,+}_{u,v} = min over ι ∈ R(w) of c^{ι,+}, with the minimizing word.
pub fn plus_truncation_min(a: &QuasiCartanMatrix, u: &GroupElement, v: &GroupElement, w: &GroupElement) -> Result<(MultiPoly, Word)> {
    let field = a.ring().field();
    let mut best: Option<(MultiPoly, Word)> = None;
    for iota in a.system().reduced_words(w) {
        let c = plus_truncation(a, u, v, w, &iota)?;
        let better = match &best {
            None => true,
            Some((b, _)) => {
                let d = (&c - b).constant_value().expect("numeric truncations");
                field.sign(&d) == Sign::Negative
            }
        };
        if better {
            best = Some((c, iota));
        }
    }
    Ok(best.expect("R(w) is never empty"))
}

/// p^ι_{u,v}(t) for the deformation (1+t)A − 2t·Id.
pub fn deformed_p(a: &QuasiCartanMatrix, u: &GroupElement, v: &GroupElement, iota: &Word) -> Result<MultiPoly> {
    iota.check_rank(a.rank())?;
    let w = a.system().normal_form(iota);
    reduced_base(a, iota, &w)?;
    let deformed = a.deformed();
    equivariant_on_word(&deformed, u, v, iota, Filter::Admissible)
}

/// All nonzero p^ι_{u,v} along one word ι, keyed by (u, v). Subwords that
/// are not reduced are skipped, since they are not in any R(u).
pub fn equivariant_table(a: &QuasiCartanMatrix, iota: &Word, filter: Filter) -> Result<BTreeMap<(GroupElement, GroupElement), MultiPoly>> {
    check_base(iota, filter)?;
    iota.check_rank(a.rank())?;
    let m = iota.len();
    assert!(m < 63, "word too long for position masks");
    let mut reduced: Vec<(Vec<usize>, GroupElement)> = Vec::new();
    for mask in 0u64..(1 << m) {
        let k: Vec<usize> = (1..=m).filter(|x| mask & (1 << (x - 1)) != 0).collect();
        let sub = iota.subword(&k);
        let e = a.system().normal_form(&sub);
        if e.length() == sub.len() {
            reduced.push((k, e));
        }
    }
    let letters = iota.letters();
    let parts: Vec<((GroupElement, GroupElement), MultiPoly)> = reduced
        .par_iter()
        .flat_map_iter(|(kp, u)| {
            reduced
                .iter()
                .filter(move |(kpp, _)| kp.len() + kpp.len() >= m)
                .map(move |(kpp, v)| ((u.clone(), v.clone()), pair_sum(a, letters, kp, kpp, filter)))
        })
        .collect();
    let mut out: BTreeMap<(GroupElement, GroupElement), MultiPoly> = BTreeMap::new();
    for (key, p) in parts {
        if p.is_zero() {
            continue;
        }
        out.entry(key).or_insert_with(|| MultiPoly::zero(a.ring())).add_assign_ref(&p);
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}
