//! Rank-2 closed forms: the sequences A_k, B_k, the generalized binomials
//! C(k, m), D(k, m) and the resulting structure constants of dihedral
//! groups.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coxeter::{QuasiCartanMatrix, Word};
use crate::error::{LrcError, Result};
use crate::exactring::{MultiPoly, NumberField, PolyRing};

/// Off-diagonal magnitudes of [[2, −a], [−b, 2]], numeric or symbolic.
/// `order` is the order of s_1s_2, 0 for infinite; lengths beyond it give 0.
#[derive(Clone, Debug)]
pub struct Rank2Params {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub order: u32,
}

impl Rank2Params {
    /// a and b as the auxiliary polynomial variables.
    pub fn symbolic(ring: &Arc<PolyRing>) -> Self {
        Rank2Params { a: MultiPoly::aux_a(ring), b: MultiPoly::aux_b(ring), order: 0 }
    }

    pub fn numeric(ring: &Arc<PolyRing>, a: i64, b: i64) -> Self {
        Rank2Params { a: MultiPoly::from_int(ring, a), b: MultiPoly::from_int(ring, b), order: 0 }
    }

    /// Parameters of a rank-2 matrix. With s_i(α_j) = α_j − a_ij α_i the
    /// closed forms need a = −a_21 and b = −a_12.
    pub fn from_matrix(m: &QuasiCartanMatrix) -> Result<Self> {
        if m.rank() != 2 {
            return Err(LrcError::HypothesisNotMet("rank-2 matrix required".into()));
        }
        Ok(Rank2Params { a: -m.entry(2, 1), b: -m.entry(1, 2), order: m.order(1, 2) })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.a.ring()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqKind {
    A,
    B,
}

/// (A_0..=A_k, B_0..=B_k) with A_j = a B_{j−1} − A_{j−2}, B_j = b A_{j−1} − B_{j−2}.
pub fn chebyshev_table(p: &Rank2Params, k: usize) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
    let ring = p.ring();
    let mut a = vec![MultiPoly::zero(ring), MultiPoly::one(ring)];
    let mut b = vec![MultiPoly::zero(ring), MultiPoly::one(ring)];
    for j in 2..=k {
        a.push(&(&p.a * &b[j - 1]) - &a[j - 2]);
        b.push(&(&p.b * &a[j - 1]) - &b[j - 2]);
    }
    a.truncate(k + 1);
    b.truncate(k + 1);
    (a, b)
}

pub fn chebyshev_seq(p: &Rank2Params, kind: SeqKind, k: usize) -> MultiPoly {
    let (a, b) = chebyshev_table(p, k);
    match kind {
        SeqKind::A => a[k].clone(),
        SeqKind::B => b[k].clone(),
    }
}

fn binomial(p: &Rank2Params, kind: SeqKind, k: usize, m: usize) -> Result<MultiPoly> {
    if k > m {
        return Err(LrcError::HypothesisNotMet(format!("binomial needs k <= m, got k = {k}, m = {m}")));
    }
    let (a, b) = chebyshev_table(p, m.max(1));
    let seq = if kind == SeqKind::A { a } else { b };
    let ring = p.ring();
    let prod = |lo: usize, hi: usize| (lo..=hi).fold(MultiPoly::one(ring), |acc, j| &acc * &seq[j]);
    // C(k, m) = A_m⋯A_{m−k+1} / A_k⋯A_1
    let num = prod(m - k + 1, m);
    let den = prod(1, k);
    num.exact_div(&den).map_err(|e| match e {
        LrcError::DivisionByZero => LrcError::InexactDivision(format!("vanishing denominator in binomial({k}, {m})")),
        other => other,
    })
}

pub fn binomial_c(p: &Rank2Params, k: usize, m: usize) -> Result<MultiPoly> {
    binomial(p, SeqKind::A, k, m)
}

pub fn binomial_d(p: &Rank2Params, k: usize, m: usize) -> Result<MultiPoly> {
    binomial(p, SeqKind::B, k, m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// ⋯s_1s_2s_1, ending in s_1.
    U,
    /// ⋯s_2s_1s_2, ending in s_2.
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    pub kind: Flavor,
    pub length: usize,
}

impl DihedralElement {
    pub fn u(length: usize) -> Self {
        DihedralElement { kind: Flavor::U, length }
    }

    pub fn v(length: usize) -> Self {
        DihedralElement { kind: Flavor::V, length }
    }

    pub fn word(&self) -> Word {
        let last = if self.kind == Flavor::U { 1 } else { 2 };
        let other = 3 - last;
        Word::new((0..self.length).rev().map(|j| if j % 2 == 0 { last } else { other }).collect())
    }

    /// Last letter of the word; identity for length 0.
    fn last(&self) -> Option<usize> {
        self.word().letters().last().copied()
    }
}

/// c^z_{x,y} by the rank-2 case table.
pub fn kitchloo_coefficient(p: &Rank2Params, x: DihedralElement, y: DihedralElement, z: DihedralElement) -> Result<MultiPoly> {
    let ring = p.ring();
    let (px, py, mz) = (x.length, y.length, z.length);
    if px + py != mz || (p.order != 0 && mz > p.order as usize) {
        return Ok(MultiPoly::zero(ring));
    }
    let same = |e: DihedralElement| e.length == z.length && (e.length == 0 || e.kind == z.kind);
    if px == 0 {
        return Ok(if same(y) { MultiPoly::one(ring) } else { MultiPoly::zero(ring) });
    }
    if py == 0 {
        return Ok(if same(x) { MultiPoly::one(ring) } else { MultiPoly::zero(ring) });
    }
    let zl = z.last();
    match (x.last() == zl, y.last() == zl) {
        (true, true) => match z.kind {
            Flavor::U => binomial_c(p, px, mz),
            Flavor::V => binomial_d(p, px, mz),
        },
        (false, false) => Ok(MultiPoly::zero(ring)),
        (true, false) => match z.kind {
            Flavor::V => binomial_c(p, px - 1, mz - 1),
            Flavor::U => binomial_d(p, px - 1, mz - 1),
        },
        (false, true) => match z.kind {
            Flavor::V => binomial_c(p, px, mz - 1),
            Flavor::U => binomial_d(p, px, mz - 1),
        },
    }
}

/// Independent value of the symmetric q-binomial [m choose k] at rational
/// q: q^{−k(m−k)} ∏_{i=1}^k (1 − q^{2(m−k+i)}) / (1 − q^{2i}).
pub fn q_binomial(q: &BigRational, k: usize, m: usize) -> BigRational {
    let q2 = q * q;
    let pow = |x: &BigRational, e: usize| (0..e).fold(BigRational::one(), |acc, _| acc * x);
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for i in 1..=k {
        num *= BigRational::one() - pow(&q2, m - k + i);
        den *= BigRational::one() - pow(&q2, i);
    }
    let shift = pow(q, k * (m - k));
    if den.is_zero() {
        return BigRational::zero();
    }
    num / den / shift
}

/// A ring for numeric rank-2 work over ℚ.
pub fn rational_ring() -> Arc<PolyRing> {
    PolyRing::new(NumberField::rational(), 2)
}

pub fn rational_param(ring: &Arc<PolyRing>, q: &BigRational) -> MultiPoly {
    MultiPoly::from_rational(ring, q.clone())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
