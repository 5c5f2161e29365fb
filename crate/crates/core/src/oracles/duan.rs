//! Triangular-array formula for non-equivariant coefficients.

use crate::closedform::embeddings;
use crate::coxeter::{GroupElement, QuasiCartanMatrix, RootVector, Word};
use crate::error::{LrcError, Result};
use crate::exactring::MultiPoly;

/// b_{k,ℓ} = ⟨−α_{i_ℓ}, α_{i_k}^∨⟩ = x_{i_k}(α_{i_ℓ}), 1-based, k < ℓ.
///
/// Inserting the reflections s_{i_{k+1}} ⋯ s_{i_{ℓ−1}} in front of −α_{i_ℓ}
/// gives wrong values already in A3 (ι = 1,2,3, u = s3, v = s2s3 yields 2),
/// so the plain Cartan integers are used: with them every generator obeys
/// x_ℓ² = Σ_{k<ℓ} b_{k,ℓ} x_k x_ℓ in the top-degree part.
fn b_table(a: &QuasiCartanMatrix, iota: &Word) -> Vec<Vec<MultiPoly>> {
    let m = iota.len();
    let l = iota.letters();
    let mut b = vec![vec![MultiPoly::zero(a.ring()); m + 1]; m + 1];
    for ell in 1..=m {
        for k in 1..ell {
            b[k][ell] = a.pair(&RootVector::simple(a.ring(), l[ell - 1]).neg(), l[k - 1]);
        }
    }
    b
}

struct Search<'a> {
    m: usize,
    b: &'a [Vec<MultiPoly>],
    demand: Vec<i64>,
    budget: Vec<u64>,
    acc: MultiPoly,
}

impl Search<'_> {
    /// Fills column `ell` row by row; `row` is the next row to choose.
    fn column(&mut self, ell: usize, row: usize, col_sum: u64, weight: MultiPoly, denom: u64) {
        if row == ell {
            // column fixed: its sum opens the row budget of `ell`
            let need = col_sum as i64 - self.demand[ell];
            if need < 0 {
                return;
            }
            let mult = factorial(col_sum) / denom;
            let weight = weight.scale(&weight.field().from_int(mult as i64));
            self.budget[ell] = need as u64;
            if ell == self.m {
                if self.budget.iter().all(|&x| x == 0) {
                    self.acc.add_assign_ref(&weight);
                }
            } else {
                self.column(ell + 1, 1, 0, weight, 1);
            }
            self.budget[ell] = 0;
            return;
        }
        let cap = self.budget[row];
        let bkl = &self.b[row][ell];
        let top = if bkl.is_zero() { 0 } else { cap };
        let mut w = weight;
        for c in 0..=top {
            self.budget[row] = cap - c;
            self.column(ell, row + 1, col_sum + c, w.clone(), denom * factorial(c));
            w = &w * bkl;
        }
        self.budget[row] = cap;
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn demand(m: usize, kp: &[usize], kpp: &[usize]) -> Vec<i64> {
    let mut d = vec![0i64; m + 1];
    for (k, slot) in d.iter_mut().enumerate().skip(1) {
        *slot = match (kp.contains(&k), kpp.contains(&k)) {
            (true, true) => 1,
            (false, false) => -1,
            _ => 0,
        };
    }
    d
}

/// Sum over (u-embedding, v-embedding, array c) of
/// ∏_ℓ multinomial(c_{*,ℓ}; c_{k,ℓ}) · ∏ b_{k,ℓ}^{c_{k,ℓ}}.
pub fn duan_coefficient(a: &QuasiCartanMatrix, iota: &Word, u: &GroupElement, v: &GroupElement, cap: usize) -> Result<MultiPoly> {
    let m = iota.len();
    if m > cap {
        return Err(LrcError::TooLarge { len: m, cap });
    }
    iota.check_rank(a.rank())?;
    if u.length() + v.length() != m {
        return Ok(MultiPoly::zero(a.ring()));
    }
    let b = b_table(a, iota);
    let mut total = MultiPoly::zero(a.ring());
    for kp in embeddings(a, iota, u) {
        for kpp in embeddings(a, iota, v) {
            let mut s = Search { m, b: &b, demand: demand(m, &kp, &kpp), budget: vec![0; m + 1], acc: MultiPoly::zero(a.ring()) };
            if m == 0 {
                s.acc = MultiPoly::one(a.ring());
            } else {
                s.column(1, 1, 0, MultiPoly::one(a.ring()), 1);
            }
            total.add_assign_ref(&s.acc);
        }
    }
    Ok(total)
}
