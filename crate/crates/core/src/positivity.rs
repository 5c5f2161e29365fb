//! Positivity checks. Proven statements are checked as properties; the
//! conjectural ones are audited and reported, never assumed.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::closedform::{equivariant_table, Filter};
use crate::coxeter::{GroupElement, QuasiCartanMatrix, RootVector, Word};
use crate::error::{LrcError, Result};
use crate::exactring::{MultiPoly, Scalar, Sign};

/// Which positivity regime a matrix falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HypothesisClass {
    /// a_ij < 0 and a_ij a_ji ≥ 4 for all i ≠ j: positivity is a theorem.
    #[serde(rename = "aa>=4")]
    AaAtLeastFour,
    /// a_ij ≤ 0 and either a_ij a_ji ≥ 4 or a_ij a_ji = 4cos²(π/n_ij).
    #[serde(rename = "discrete-table")]
    DiscreteTable,
    #[serde(rename = "other")]
    Other,
}

impl std::fmt::Display for HypothesisClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HypothesisClass::AaAtLeastFour => "aa>=4",
            HypothesisClass::DiscreteTable => "discrete-table",
            HypothesisClass::Other => "other",
        })
    }
}

fn constant(a: &QuasiCartanMatrix, i: usize, j: usize) -> Option<Scalar> {
    a.entry(i, j).constant_value()
}

pub fn hypothesis_class(a: &QuasiCartanMatrix) -> HypothesisClass {
    let field = a.ring().field();
    let n = a.rank();
    let mut strict = true;
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let (Some(aij), Some(aji)) = (constant(a, i, j), constant(a, j, i)) else {
                return HypothesisClass::Other;
            };
            let product = field.mul(&aij, &aji);
            let big = field.sign(&field.sub(&product, &field.from_int(4))).is_nonneg();
            let sij = field.sign(&aij);
            if sij == Sign::Positive {
                return HypothesisClass::Other;
            }
            strict &= sij == Sign::Negative && big;
            let n_ij = a.order(i, j);
            let table = n_ij != 0 && crate::coxeter::order_product_ok(n_ij, &product, a.ring()) == Some(true);
            if !big && !table {
                return HypothesisClass::Other;
            }
        }
    }
    if strict {
        HypothesisClass::AaAtLeastFour
    } else {
        HypothesisClass::DiscreteTable
    }
}

/// Outcome of the root positivity check on one word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootPositivity {
    pub holds: bool,
    pub witness: Option<String>,
}

/// With w = s_{i_2}⋯s_{i_{m−1}}: w(α_{i_m}) has nonnegative coordinates and
/// ⟨w(α_{i_m}), α_{i_1}^∨⟩ ≤ 0. Words shorter than 2 hold vacuously.
pub fn root_positivity_check(a: &QuasiCartanMatrix, iota: &Word) -> Result<RootPositivity> {
    if hypothesis_class(a) != HypothesisClass::AaAtLeastFour {
        return Err(LrcError::HypothesisNotMet("root positivity needs a_ij < 0 and a_ij a_ji >= 4 for all i != j".into()));
    }
    iota.check_rank(a.rank())?;
    if !iota.is_admissible() {
        return Err(LrcError::NonAdmissibleBase(iota.to_string()));
    }
    let l = iota.letters();
    let m = l.len();
    if m < 2 {
        return Ok(RootPositivity { holds: true, witness: None });
    }
    let root = a.act_letters(&l[1..m - 1], &RootVector::simple(a.ring(), l[m - 1]));
    if !root.is_nonneg() {
        return Ok(RootPositivity { holds: false, witness: Some(format!("w(a{}) = {}", l[m - 1], root.to_poly())) });
    }
    let pairing = a.pair(&root, l[0]);
    let field = a.ring().field();
    let sign = pairing.constant_value().map(|c| field.sign(&c));
    if sign == Some(Sign::Positive) || sign.is_none() {
        return Ok(RootPositivity { holds: false, witness: Some(format!("<w(a{}), a{}^v> = {}", l[m - 1], l[0], pairing)) });
    }
    Ok(RootPositivity { holds: true, witness: None })
}

/// All admissible words of length ≤ `max_len` over the rank of `a`.
pub fn admissible_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut level = vec![Vec::<usize>::new()];
    for _ in 0..max_len {
        level = level
            .iter()
            .flat_map(|w| (1..=rank).filter(move |&i| w.last() != Some(&i)).map(move |i| [w.as_slice(), &[i]].concat()))
            .collect();
        out.extend(level.iter().cloned().map(Word::new));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: String,
    pub v: String,
    pub w: String,
    pub iota: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub matrix: String,
    pub audit: String,
    pub hypothesis: HypothesisClass,
    pub max_len: usize,
    pub cases: usize,
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
    pub pass: bool,
}

impl AuditReport {
    fn new(a: &QuasiCartanMatrix, audit: &str, max_len: usize, cases: usize, violations: Vec<Violation>) -> Self {
        let hypothesis = hypothesis_class(a);
        let mut warnings = Vec::new();
        if hypothesis == HypothesisClass::Other {
            warnings.push("matrix is outside both positivity regimes; findings are informational".into());
        }
        AuditReport {
            matrix: a.name().to_string(),
            audit: audit.into(),
            hypothesis,
            max_len,
            cases,
            pass: violations.is_empty(),
            violations,
            warnings,
        }
    }
}

fn violation(u: &GroupElement, v: &GroupElement, w: &GroupElement, iota: &Word, value: &MultiPoly) -> Violation {
    Violation { u: u.to_string(), v: v.to_string(), w: w.to_string(), iota: iota.to_string(), value: value.render() }
}

/// Per-w results merged in the order of `elements`.
fn per_element<F>(elements: &[GroupElement], f: F) -> Result<(usize, Vec<Violation>)>
where
    F: Fn(&GroupElement) -> Result<(usize, Vec<Violation>)> + Sync + Send,
{
    let parts: Vec<Result<(usize, Vec<Violation>)>> = elements.par_iter().map(f).collect();
    let mut cases = 0;
    let mut out = Vec::new();
    for part in parts {
        let (c, v) = part?;
        cases += c;
        out.extend(v);
    }
    Ok((cases, out))
}

/// Every nonzero p^w_{u,v} with ℓ(w) ≤ max_len is coefficientwise ≥ 0
/// (which covers c^w_{u,v} as the degree-0 case).
pub fn nonneg_audit(a: &QuasiCartanMatrix, max_len: usize, group_cap: usize) -> Result<AuditReport> {
    let elements = a.system().elements_up_to(max_len, group_cap)?;
    let (cases, violations) = per_element(&elements, |w| {
        let iota = w.canonical().clone();
        let table = equivariant_table(a, &iota, Filter::Admissible)?;
        let bad = table
            .iter()
            .filter(|(_, p)| !p.is_coefficientwise_nonneg())
            .map(|((u, v), p)| violation(u, v, w, &iota, p))
            .collect();
        Ok((table.len(), bad))
    })?;
    Ok(AuditReport::new(a, "nonneg", max_len, cases, violations))
}

fn deformed_tables(
    a: &QuasiCartanMatrix,
    w: &GroupElement,
) -> Result<Vec<(Word, BTreeMap<(GroupElement, GroupElement), MultiPoly>)>> {
    let deformed = a.deformed();
    a.system()
        .reduced_words(w)
        .into_iter()
        .map(|iota| {
            let t = equivariant_table(&deformed, &iota, Filter::Admissible)?;
            Ok((iota, t))
        })
        .collect()
}

/// Every p^ι_{u,v}(t), ι ∈ R(w), ℓ(w) ≤ max_len, has nonnegative coefficients.
pub fn t_positivity_audit(a: &QuasiCartanMatrix, max_len: usize, group_cap: usize) -> Result<AuditReport> {
    let elements = a.system().elements_up_to(max_len, group_cap)?;
    let (cases, violations) = per_element(&elements, |w| {
        let mut cases = 0;
        let mut bad = Vec::new();
        for (iota, table) in deformed_tables(a, w)? {
            cases += table.len();
            bad.extend(
                table.iter().filter(|(_, p)| !p.is_coefficientwise_nonneg()).map(|((u, v), p)| violation(u, v, w, &iota, p)),
            );
        }
        Ok((cases, bad))
    })?;
    Ok(AuditReport::new(a, "t-positivity", max_len, cases, violations))
}

/// p^ι_{u,v}(t) is constant on each commutativity class of R(w).
pub fn commutativity_invariance_audit(a: &QuasiCartanMatrix, max_len: usize, group_cap: usize) -> Result<AuditReport> {
    let elements = a.system().elements_up_to(max_len, group_cap)?;
    let (cases, violations) = per_element(&elements, |w| {
        let tables: BTreeMap<Word, _> = deformed_tables(a, w)?.into_iter().collect();
        let words: Vec<Word> = tables.keys().cloned().collect();
        let mut cases = 0;
        let mut bad = Vec::new();
        for class in a.commutativity_classes(&words) {
            let base = &tables[&class[0]];
            for iota in &class[1..] {
                let other = &tables[iota];
                cases += 1;
                for key in base.keys().chain(other.keys()) {
                    let (x, y) = (base.get(key), other.get(key));
                    if x != y {
                        let value = format!("{} vs {} on {}", render(y), render(x), class[0]);
                        bad.push(Violation {
                            u: key.0.to_string(),
                            v: key.1.to_string(),
                            w: w.to_string(),
                            iota: iota.to_string(),
                            value,
                        });
                        break;
                    }
                }
            }
        }
        Ok((cases, bad))
    })?;
    Ok(AuditReport::new(a, "commutativity", max_len, cases, violations))
}

fn render(p: Option<&MultiPoly>) -> String {
    p.map(MultiPoly::render).unwrap_or_else(|| "0".into())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::closedform::deformed_p;
    use crate::coxeter::{dihedral, preset};
    use crate::exactring::{MultiPoly, NumberField, PolyRing};

    fn hyperbolic3() -> QuasiCartanMatrix {
        let ring = PolyRing::new(NumberField::rational(), 3);
        let e = |i: i64| MultiPoly::from_int(&ring, i);
        let entries = vec![vec![e(2), e(-2), e(-3)], vec![e(-2), e(2), e(-2)], vec![e(-2), e(-5), e(2)]];
        QuasiCartanMatrix::new("hyp3", &ring, entries, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], true).unwrap()
    }

    #[test]
    fn classes() {
        assert_eq!(hypothesis_class(&preset("affine-SL2").unwrap()), HypothesisClass::AaAtLeastFour);
        assert_eq!(hypothesis_class(&hyperbolic3()), HypothesisClass::AaAtLeastFour);
        for name in ["A3", "B2", "G2", "H3", "H3-rank2"] {
            assert_eq!(hypothesis_class(&preset(name).unwrap()), HypothesisClass::DiscreteTable, "{name}");
        }
        let odd = dihedral("1", "3", 0, true).unwrap();
        assert_eq!(hypothesis_class(&odd), HypothesisClass::Other);
    }

    #[test]
    fn root_positivity_examples() {
        let aff = preset("affine-SL2").unwrap();
        let ok = RootPositivity { holds: true, witness: None };
        assert_eq!(root_positivity_check(&aff, &Word::new(vec![1, 2])).unwrap(), ok);
        assert_eq!(root_positivity_check(&aff, &Word::new(vec![1, 2, 1, 2])).unwrap(), ok);
        assert!(matches!(root_positivity_check(&preset("A2").unwrap(), &Word::new(vec![1, 2])), Err(LrcError::HypothesisNotMet(_))));
        assert!(matches!(root_positivity_check(&aff, &Word::new(vec![1, 1])), Err(LrcError::NonAdmissibleBase(_))));
    }

    #[test]
    fn root_positivity_sweep() {
        let mats = [
            preset("affine-SL2").unwrap(),
            dihedral("1", "4", 0, true).unwrap(),
            dihedral("2", "3", 0, true).unwrap(),
            dihedral("3", "3", 0, true).unwrap(),
            hyperbolic3(),
        ];
        for a in &mats {
            for iota in admissible_words(a.rank(), 8) {
                let r = root_positivity_check(a, &iota).unwrap();
                assert!(r.holds, "{} {iota}: {:?}", a.name(), r.witness);
            }
        }
    }

    #[test]
    fn admissible_word_count() {
        // 1 + 3 + 3·2 + 3·2² for rank 3 up to length 3
        assert_eq!(admissible_words(3, 3).len(), 1 + 3 + 6 + 12);
        assert!(admissible_words(2, 5).iter().all(Word::is_admissible));
    }

    #[test]
    fn audits_pass_in_known_regimes() {
        let aff = preset("affine-SL2").unwrap();
        let r = nonneg_audit(&aff, 6, 10_000).unwrap();
        assert!(r.pass && r.cases > 0);
        assert!(t_positivity_audit(&aff, 5, 10_000).unwrap().pass);
        let a3 = preset("A3").unwrap();
        assert!(nonneg_audit(&a3, 6, 10_000).unwrap().pass);
        assert!(t_positivity_audit(&a3, 5, 10_000).unwrap().pass);
        assert!(commutativity_invariance_audit(&a3, 6, 10_000).unwrap().pass);
    }

    #[test]
    fn a3_longest_element_has_negative_t_coefficients() {
        let a3 = preset("A3").unwrap();
        let r = t_positivity_audit(&a3, 6, 10_000).unwrap();
        assert!(!r.pass);
        assert_eq!(r.violations.len(), 20);
        assert!(r.violations.iter().all(|v| v.w == "1,2,1,3,2,1"));
        let words: BTreeSet<&str> = r.violations.iter().map(|v| v.iota.as_str()).collect();
        assert_eq!(words.len(), 6);
        let first = &r.violations[0];
        assert_eq!((first.u.as_str(), first.v.as_str(), first.iota.as_str()), ("3,2,1", "3,2,1", "1,2,1,3,2,1"));
        assert_eq!(first.value, "3*t^6 + 18*t^5 + 38*t^4 + 32*t^3 + 7*t^2 - 2*t");
    }

    #[test]
    fn other_class_is_reported_with_a_warning() {
        // a_12 a_21 = 3 is neither >= 4 nor on the table for an infinite group
        let odd = dihedral("1", "3", 0, true).unwrap();
        let r = nonneg_audit(&odd, 6, 10_000).unwrap();
        assert_eq!(r.hypothesis, HypothesisClass::Other);
        assert_eq!(r.warnings.len(), 1);
        assert_eq!(r.pass, r.violations.is_empty());
    }

    #[test]
    fn a5_classes_give_distinct_polynomials() {
        let a = preset("A5").unwrap();
        let u = a.element(&Word::parse("4,2").unwrap()).unwrap();
        let v = a.element(&Word::parse("3,4,3,1,2,1").unwrap()).unwrap();
        let w = a.element(&Word::parse("5,2,3,4,3,1,2,1").unwrap()).unwrap();
        let words: Vec<Word> = a.system().reduced_words(&w).into_iter().collect();
        let mut distinct = Vec::new();
        for class in a.commutativity_classes(&words) {
            let polys: Vec<MultiPoly> = class.iter().map(|i| deformed_p(&a, &u, &v, i).unwrap()).collect();
            assert!(polys.iter().all(|p| p == &polys[0]));
            assert!(polys[0].is_coefficientwise_nonneg());
            if !distinct.contains(&polys[0]) {
                distinct.push(polys[0].clone());
            }
        }
        assert_eq!(distinct.len(), 5);
    }
}
