//! Localization of Schubert classes at a fixed point, by the subword
//! product formula (an external formula, used here only as a consistency
//! harness).

use crate::closedform::embeddings;
use crate::coxeter::{GroupElement, QuasiCartanMatrix, RootVector, Word};
use crate::error::Result;
use crate::exactring::MultiPoly;

/// Σ over J with ι_J ∈ R(v) of ∏_{j∈J} s_{i_1}⋯s_{i_{j−1}}(α_{i_j}).
pub fn billey_localization(a: &QuasiCartanMatrix, iota: &Word, w: &GroupElement, v: &GroupElement) -> Result<MultiPoly> {
    iota.check_rank(a.rank())?;
    a.system().check_reduced_for(iota, w)?;
    let l = iota.letters();
    let beta: Vec<MultiPoly> =
        (0..l.len()).map(|j| a.act_letters(&l[..j], &RootVector::simple(a.ring(), l[j])).to_poly()).collect();
    let mut total = MultiPoly::zero(a.ring());
    for set in embeddings(a, iota, v) {
        let term = set.iter().fold(MultiPoly::one(a.ring()), |acc, &j| &acc * &beta[j - 1]);
        total.add_assign_ref(&term);
    }
    Ok(total)
}
