//! Relative coefficients as structure constants of the free Coxeter group,
//! solved from localization. In the free group a word is reduced exactly when
//! it is admissible, so every admissible subword of ι is its own element and
//! ξ^u(x)ξ^v(x) = Σ_z p^z_{u,v} ξ^z(x) can be solved bottom-up over subwords.

use std::collections::{BTreeMap, BTreeSet};

use crate::coxeter::{GroupElement, QuasiCartanMatrix, RootVector, Word};
use crate::error::{LrcError, Result};
use crate::exactring::MultiPoly;

const MAX_LEN: usize = 16;

fn admissible_subwords(iota: &[usize]) -> Vec<Vec<usize>> {
    let m = iota.len();
    let set: BTreeSet<Vec<usize>> = (0u32..(1 << m))
        .map(|mask| (0..m).filter(|j| mask & (1 << j) != 0).map(|j| iota[j]).collect::<Vec<_>>())
        .filter(|w| w.windows(2).all(|p| p[0] != p[1]))
        .collect();
    let mut out: Vec<Vec<usize>> = set.into_iter().collect();
    out.sort_by_key(Vec::len);
    out
}

/// ξ^z(x) in the free group: the subword sum over positions spelling z.
fn xi(a: &QuasiCartanMatrix, z: &[usize], x: &[usize], beta: &[MultiPoly]) -> MultiPoly {
    let mut total = MultiPoly::zero(a.ring());
    let mut stack = vec![(0usize, 0usize, MultiPoly::one(a.ring()))];
    while let Some((pos, matched, acc)) = stack.pop() {
        if matched == z.len() {
            total.add_assign_ref(&acc);
            continue;
        }
        for p in pos..x.len() {
            if x.len() - p < z.len() - matched {
                break;
            }
            if x[p] == z[matched] {
                stack.push((p + 1, matched + 1, &acc * &beta[p]));
            }
        }
    }
    total
}

fn check(iota: &Word) -> Result<()> {
    if iota.is_admissible() {
        Ok(())
    } else {
        Err(LrcError::NonAdmissibleBase(iota.to_string()))
    }
}

/// Σ over (ι', ι'') ∈ `pairs` of the free-group coefficient p^ι_{ι',ι''}.
/// The identity is linear in the left side, so the pairs are solved at once.
fn solve(a: &QuasiCartanMatrix, iota: &Word, pairs: &[(Word, Word)]) -> Result<MultiPoly> {
    check(iota)?;
    iota.check_rank(a.rank())?;
    if iota.len() > MAX_LEN {
        return Err(LrcError::TooLarge { len: iota.len(), cap: MAX_LEN });
    }
    for (i1, i2) in pairs {
        check(i1)?;
        check(i2)?;
    }
    let mut p: BTreeMap<Vec<usize>, MultiPoly> = BTreeMap::new();
    for x in admissible_subwords(iota.letters()) {
        let beta: Vec<MultiPoly> =
            (0..x.len()).map(|j| a.act_letters(&x[..j], &RootVector::simple(a.ring(), x[j])).to_poly()).collect();
        let mut rhs = MultiPoly::zero(a.ring());
        for (i1, i2) in pairs {
            rhs.add_assign_ref(&(&xi(a, i1.letters(), &x, &beta) * &xi(a, i2.letters(), &x, &beta)));
        }
        for (z, pz) in p.iter().filter(|(_, pz)| !pz.is_zero()) {
            rhs = &rhs - &(pz * &xi(a, z, &x, &beta));
        }
        let top = beta.iter().fold(MultiPoly::one(a.ring()), |acc, b| &acc * b);
        let value = rhs.exact_div(&top)?;
        p.insert(x, value);
    }
    Ok(p.remove(iota.letters()).unwrap_or_else(|| MultiPoly::zero(a.ring())))
}

/// p^ι_{ι',ι''} for admissible ι, ι', ι''.
pub fn free_group_coefficient(a: &QuasiCartanMatrix, iota: &Word, i1: &Word, i2: &Word) -> Result<MultiPoly> {
    solve(a, iota, &[(i1.clone(), i2.clone())])
}

/// p^ι_{u,v}: the free-group coefficients summed over ι' ∈ R(u), ι'' ∈ R(v).
/// `a` supplies the action (it may be deformed), `group` the reduced words.
pub fn free_group_p(
    a: &QuasiCartanMatrix,
    group: &QuasiCartanMatrix,
    iota: &Word,
    u: &GroupElement,
    v: &GroupElement,
) -> Result<MultiPoly> {
    let ru = group.system().reduced_words(u);
    let rv = group.system().reduced_words(v);
    let pairs: Vec<(Word, Word)> = ru.iter().flat_map(|x| rv.iter().map(move |y| (x.clone(), y.clone()))).collect();
    solve(a, iota, &pairs)
}
