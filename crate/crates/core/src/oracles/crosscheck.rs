//! Agreement report between the closed form and the oracles.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::bs::{bs_multiply, BSClassVector};
use super::duan::duan_coefficient;
use super::recursion::rel_coeff_rec_words;
use crate::closedform::{equivariant_table, Filter};
use crate::coxeter::{GroupElement, QuasiCartanMatrix, Word};
use crate::error::Result;
use crate::exactring::MultiPoly;
use crate::rank2::{kitchloo_coefficient, DihedralElement, Rank2Params};

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckCase {
    pub w: String,
    pub iota: String,
    pub u: String,
    pub v: String,
    pub closed_form: String,
    pub closed_form_all: String,
    pub recursion: String,
    pub duan: Option<String>,
    pub rank2: Option<String>,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub matrix: String,
    pub max_len: usize,
    pub duan_cap: usize,
    pub cases: Vec<CrosscheckCase>,
    pub disagreements: usize,
    /// Which form of the σ_k² relation the recursion reproduces.
    pub bs_square_rule: String,
    pub all_agree: bool,
}

/// p^ι_{u,v} for every (u, v) by the recursion, summed over reduced
/// subwords.
fn recursion_table(a: &QuasiCartanMatrix, iota: &Word) -> BTreeMap<(GroupElement, GroupElement), MultiPoly> {
    let m = iota.len();
    let mut subwords: BTreeMap<GroupElement, BTreeSet<Word>> = BTreeMap::new();
    for mask in 0u64..(1 << m) {
        let k: Vec<usize> = (1..=m).filter(|x| mask & (1 << (x - 1)) != 0).collect();
        let sub = iota.subword(&k);
        let e = a.system().normal_form(&sub);
        if e.length() == sub.len() {
            subwords.entry(e).or_default().insert(sub);
        }
    }
    let mut out = BTreeMap::new();
    for (u, su) in &subwords {
        for (v, sv) in &subwords {
            if u.length() + v.length() < m {
                continue;
            }
            let mut acc = MultiPoly::zero(a.ring());
            for i1 in su {
                for i2 in sv {
                    acc.add_assign_ref(&rel_coeff_rec_words(a, iota, i1, i2));
                }
            }
            if !acc.is_zero() {
                out.insert((u.clone(), v.clone()), acc);
            }
        }
    }
    out
}

fn dihedral_of(e: &GroupElement) -> DihedralElement {
    match e.canonical().letters().last() {
        Some(2) => DihedralElement::v(e.length()),
        _ => DihedralElement::u(e.length()),
    }
}

/// Checks σ_k² = α_{i_k}σ_k + Σ_{ℓ<k} x_{i_ℓ}(α_{i_k}) σ_ℓσ_k on ι.
fn square_rule_holds(a: &QuasiCartanMatrix, iota: &Word) -> bool {
    let ring = a.ring();
    let m = iota.len();
    (1..=m).all(|k| {
        let sk = BSClassVector::basis(ring, m, &[k]);
        let lhs = bs_multiply(a, iota, &sk, &sk);
        let ik = iota.at(k);
        let mut rhs = sk.scale(&MultiPoly::alpha(ring, ik));
        for l in 1..k {
            let c = a.demazure(iota.at(l), &MultiPoly::alpha(ring, ik));
            rhs = rhs.add(&BSClassVector::basis(ring, m, &[l, k]).scale(&c));
        }
        lhs == rhs
    })
}

pub fn crosscheck(a: &QuasiCartanMatrix, max_len: usize, duan_cap: usize, group_cap: usize) -> Result<CrosscheckReport> {
    let elements = a.system().elements_up_to(max_len, group_cap)?;
    let rank2 = if a.rank() == 2 { Some(Rank2Params::from_matrix(a)?) } else { None };
    let n12 = if a.rank() == 2 { a.order(1, 2) as usize } else { 0 };
    let render = |p: Option<&MultiPoly>| p.map(MultiPoly::render).unwrap_or_else(|| "0".into());
    let mut cases = Vec::new();
    for w in &elements {
        let iota = w.canonical().clone();
        let closed = equivariant_table(a, &iota, Filter::Admissible)?;
        let closed_all = equivariant_table(a, &iota, Filter::All)?;
        let rec = recursion_table(a, &iota);
        let keys: BTreeSet<&(GroupElement, GroupElement)> = closed.keys().chain(closed_all.keys()).chain(rec.keys()).collect();
        for key in keys {
            let (u, v) = key;
            let cf = render(closed.get(key));
            let cfa = render(closed_all.get(key));
            let rc = render(rec.get(key));
            let additive = u.length() + v.length() == w.length();
            let duan = if additive && iota.len() <= duan_cap {
                Some(duan_coefficient(a, &iota, u, v, duan_cap)?.render())
            } else {
                None
            };
            let r2 = match &rank2 {
                Some(p) if additive && (n12 == 0 || w.length() < n12) => {
                    Some(kitchloo_coefficient(p, dihedral_of(u), dihedral_of(v), dihedral_of(w))?.render())
                }
                _ => None,
            };
            let agree = cf == rc && cfa == rc && duan.as_ref().is_none_or(|d| d == &rc) && r2.as_ref().is_none_or(|d| d == &rc);
            cases.push(CrosscheckCase {
                w: w.to_string(),
                iota: iota.to_string(),
                u: u.to_string(),
                v: v.to_string(),
                closed_form: cf,
                closed_form_all: cfa,
                recursion: rc,
                duan,
                rank2: r2,
                agree,
            });
        }
    }
    let probe: Word = match a.rank() {
        1 => Word::new(vec![1, 1, 1]),
        _ => Word::new(vec![1, 2, 1, 2]),
    };
    let rule = if square_rule_holds(a, &probe) {
        "sigma_k^2 = alpha_{i_k} sigma_k + sum_{l<k} x_{i_l}(alpha_{i_k}) sigma_l sigma_k (verified)"
    } else {
        "sigma_k^2 relation with l<k and x_{i_l}(alpha_{i_k}) does NOT hold"
    };
    let disagreements = cases.iter().filter(|c| !c.agree).count();
    Ok(CrosscheckReport {
        matrix: a.name().to_string(),
        max_len,
        duan_cap,
        cases,
        disagreements,
        bs_square_rule: rule.to_string(),
        all_agree: disagreements == 0,
    })
}

