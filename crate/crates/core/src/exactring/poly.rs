//! Sparse multivariate polynomials over ℚ(g) in the root variables
//! `a1 … an`, the deformation variable `t` and the auxiliary symbols `a`, `b`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;

use super::field::{NumberField, Scalar, Sign};
use crate::error::{LrcError, Result};

/// Variable layout shared by every polynomial of one computation.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: NumberField,
    rank: usize,
    names: Vec<String>,
}

impl PolyRing {
    pub fn new(field: NumberField, rank: usize) -> Arc<PolyRing> {
        let mut names: Vec<String> = (1..=rank).map(|i| format!("a{i}")).collect();
        names.extend(["t", "a", "b"].map(String::from));
        Arc::new(PolyRing { field, rank, names })
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Number of root variables.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn t_index(&self) -> usize {
        self.rank
    }

    pub fn aux_a_index(&self) -> usize {
        self.rank + 1
    }

    pub fn aux_b_index(&self) -> usize {
        self.rank + 2
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[idx] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Total degree in the first `rank` variables.
    pub fn alpha_degree(&self, rank: usize) -> u32 {
        self.0[..rank].iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl std::hash::Hash for MultiPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MultiPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_int(ring: &Arc<PolyRing>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_int(n))
    }

    pub fn from_rational(ring: &Arc<PolyRing>, q: BigRational) -> Self {
        Self::constant(ring, ring.field().from_rational(q))
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    /// The generator `g` of the coefficient field as a constant polynomial.
    pub fn generator(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().generator())
    }

    pub fn var(ring: &Arc<PolyRing>, idx: usize) -> Self {
        let mut p = Self::zero(ring);
        p.terms.insert(Monomial::var(ring.nvars(), idx), ring.field().one());
        p
    }

    /// The simple root α_i, 1-based.
    pub fn alpha(ring: &Arc<PolyRing>, i: usize) -> Self {
        assert!(i >= 1 && i <= ring.rank(), "root index {i} out of range");
        Self::var(ring, i - 1)
    }

    pub fn t(ring: &Arc<PolyRing>) -> Self {
        Self::var(ring, ring.t_index())
    }

    pub fn aux_a(ring: &Arc<PolyRing>) -> Self {
        Self::var(ring, ring.aux_a_index())
    }

    pub fn aux_b(ring: &Arc<PolyRing>) -> Self {
        Self::var(ring, ring.aux_b_index())
    }

    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> &NumberField {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(|| self.field().zero()))
    }

    /// True if no root variable occurs (t, a, b may).
    pub fn is_alpha_free(&self) -> bool {
        let r = self.ring.rank();
        self.terms.keys().all(|m| m.alpha_degree(r) == 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Homogeneous of degree `d` in the root variables, treating t, a, b as
    /// constants. The zero polynomial is homogeneous of every degree.
    pub fn is_alpha_homogeneous(&self, d: u32) -> bool {
        let r = self.ring.rank();
        self.terms.keys().all(|m| m.alpha_degree(r) == d)
    }

    /// Part of degree `d` in the root variables.
    pub fn alpha_degree_part(&self, d: u32) -> MultiPoly {
        let r = self.ring.rank();
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.alpha_degree(r) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let field = self.ring.field();
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                field.add_assign(o.get_mut(), c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(LrcError::MixedRing)
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &field.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut out = MultiPoly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn add_assign_ref(&mut self, other: &MultiPoly) {
        debug_assert!(same_ring(&self.ring, &other.ring));
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let field = self.ring.field();
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), field.mul(x, c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the simple root α_i (1-based); fails unless every term
    /// contains α_i.
    pub fn exact_div_linear(&self, i: usize) -> Result<MultiPoly> {
        let idx = i - 1;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[idx] == 0 {
                return Err(LrcError::NotDivisible(i));
            }
            let mut q = m.clone();
            q.0[idx] -= 1;
            terms.insert(q, c.clone());
        }
        Ok(MultiPoly { ring: self.ring.clone(), terms })
    }

    /// Exact multivariate division; errors when `divisor` does not divide.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(divisor)?;
        let field = self.ring.field();
        let Some((lead_m, lead_c)) = divisor.terms.iter().next_back() else {
            return Err(LrcError::DivisionByZero);
        };
        let lead_inv = field.inv(lead_c)?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.ring);
        while let Some((m, c)) = rem.terms.iter().next_back() {
            if !lead_m.divides(m) {
                return Err(LrcError::InexactDivision(format!("{divisor} does not divide {self}")));
            }
            let qm = m.div(lead_m);
            let qc = field.mul(c, &lead_inv);
            let step = MultiPoly::from_terms(&self.ring, [(qm.clone(), qc.clone())]);
            rem = &rem - &(&step * divisor);
            quot.add_term(qm, &qc);
        }
        Ok(quot)
    }

    /// Substitutes the variable `idx` by `value`.
    pub fn substitute(&self, idx: usize, value: &MultiPoly) -> MultiPoly {
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one(&self.ring)];
        let mut out = MultiPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[idx] as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * value;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[idx] = 0;
            let term = MultiPoly::from_terms(&self.ring, [(rest, c.clone())]);
            out.add_assign_ref(&(&term * &powers[e]));
        }
        out
    }

    pub fn substitute_t(&self, value: &Scalar) -> MultiPoly {
        self.substitute(self.ring.t_index(), &MultiPoly::constant(&self.ring, value.clone()))
    }

    /// Applies the ring endomorphism sending α_j to `images[j]` (0-based)
    /// and fixing t, a, b.
    pub fn map_alphas(&self, images: &[MultiPoly]) -> MultiPoly {
        let rank = self.ring.rank();
        debug_assert_eq!(images.len(), rank);
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|_| vec![MultiPoly::one(&self.ring)]).collect();
        let mut out = MultiPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let mut acc = MultiPoly::one(&self.ring);
            for j in 0..rank {
                let e = m.0[j] as usize;
                if e == 0 {
                    continue;
                }
                rest.0[j] = 0;
                while powers[j].len() <= e {
                    let next = &powers[j][powers[j].len() - 1] * &images[j];
                    powers[j].push(next);
                }
                acc = &acc * &powers[j][e];
            }
            let term = MultiPoly::from_terms(&self.ring, [(rest, c.clone())]);
            out.add_assign_ref(&(&term * &acc));
        }
        out
    }

    /// Coefficient of α_j in a polynomial of α-degree at most one.
    pub fn linear_coeff(&self, j: usize) -> MultiPoly {
        let idx = j - 1;
        let r = self.ring.rank();
        let mut out = MultiPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            if m.0[idx] == 1 && m.alpha_degree(r) == 1 {
                let mut rest = m.clone();
                rest.0[idx] = 0;
                out.add_term(rest, c);
            }
        }
        out
    }

    /// True iff every stored coefficient is nonnegative in the real
    /// embedding of the field.
    pub fn is_coefficientwise_nonneg(&self) -> bool {
        let field = self.ring.field();
        self.terms.values().all(|c| field.sign(c).is_nonneg())
    }

    /// First coefficient with a negative sign, if any.
    pub fn negative_coefficient(&self) -> Option<(&Monomial, &Scalar)> {
        let field = self.ring.field();
        self.terms.iter().find(|(_, c)| field.sign(c) == Sign::Negative)
    }

    /// Canonical text: descending graded-lex order, e.g. `a1^2 - a2^2`.
    pub fn render(&self) -> String {
        let field = self.ring.field();
        let names = self.ring.var_names();
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| if e == 1 { names[k].clone() } else { format!("{}^{}", names[k], e) })
                .collect();
            let mono = mono.join("*");
            if mono.is_empty() {
                parts.extend(field.signed_parts(c));
                continue;
            }
            let single = field.is_monomial(c);
            let (neg, coef) = if single {
                let negative = c.coords().iter().any(num_traits::Signed::is_negative);
                let mag = if negative { field.neg(c) } else { c.clone() };
                (negative, field.render(&mag))
            } else {
                (false, format!("({})", field.render(c)))
            };
            let body = if coef == "1" {
                mono
            } else {
                format!("{coef}*{mono}")
            };
            parts.push((neg, body));
        }
        super::field::join_signed(&parts)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.render())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("mixed polynomial rings")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("mixed polynomial rings")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("mixed polynomial rings")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        let field = self.ring.field();
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(mut iter: I) -> MultiPoly {
        let mut acc = iter.next().expect("sum of an empty iterator has no ring");
        for p in iter {
            acc.add_assign_ref(&p);
        }
        acc
    }
}
