use std::collections::BTreeMap;
use std::sync::Arc;

use super::group::{CoxeterSystem, GroupElement};
use super::word::Word;
use crate::error::{LrcError, Result};
use crate::exactring::{MultiPoly, PolyRing, Scalar, Sign};

/// A vector of V in the basis of simple roots. Coordinates may involve
/// t, a, b but never the root variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootVector {
    coords: Vec<MultiPoly>,
}

impl RootVector {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        RootVector { coords: vec![MultiPoly::zero(ring); ring.rank()] }
    }

    /// The simple root α_i, 1-based.
    pub fn simple(ring: &Arc<PolyRing>, i: usize) -> Self {
        let mut v = Self::zero(ring);
        v.coords[i - 1] = MultiPoly::one(ring);
        v
    }

    pub fn from_coords(coords: Vec<MultiPoly>) -> Self {
        RootVector { coords }
    }

    /// Reads off the coordinates of a polynomial of α-degree one.
    pub fn from_linear(f: &MultiPoly) -> Result<Self> {
        if !f.is_alpha_homogeneous(1) {
            return Err(LrcError::HypothesisNotMet(format!("{f} is not linear in the roots")));
        }
        let r = f.ring().rank();
        Ok(RootVector { coords: (1..=r).map(|j| f.linear_coeff(j)).collect() })
    }

    pub fn coords(&self) -> &[MultiPoly] {
        &self.coords
    }

    /// Coordinate of α_i, 1-based.
    pub fn coord(&self, i: usize) -> &MultiPoly {
        &self.coords[i - 1]
    }

    pub fn to_poly(&self) -> MultiPoly {
        let ring = self.coords[0].ring();
        let mut out = MultiPoly::zero(ring);
        for (j, c) in self.coords.iter().enumerate() {
            out.add_assign_ref(&(c * &MultiPoly::alpha(ring, j + 1)));
        }
        out
    }

    pub fn neg(&self) -> Self {
        RootVector { coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// Every coordinate has nonnegative coefficients.
    pub fn is_nonneg(&self) -> bool {
        self.coords.iter().all(MultiPoly::is_coefficientwise_nonneg)
    }
}

/// Off-diagonal a_ij·a_ji demanded by a finite order n_ij.
pub(crate) fn order_product_ok(n: u32, product: &Scalar, ring: &PolyRing) -> Option<bool> {
    let k = ring.field();
    let want = |v: i64| Some(product == &k.from_int(v));
    match n {
        2 => want(0),
        3 => want(1),
        4 => want(2),
        6 => want(3),
        5 => {
            // 4cos²(π/5) = ρ + 1 is the root of x² − 3x + 1 above 2.
            let x = product;
            let q = k.add(&k.sub(&k.mul(x, x), &k.mul(&k.from_int(3), x)), &k.one());
            Some(q.is_zero() && k.sign(&k.sub(x, &k.from_int(2))) == Sign::Positive)
        }
        _ => None,
    }
}

/// The matrix A = (a_ij) together with the Coxeter orders n_ij.
#[derive(Debug)]
pub struct QuasiCartanMatrix {
    name: String,
    ring: Arc<PolyRing>,
    entries: Vec<Vec<MultiPoly>>,
    system: Arc<CoxeterSystem>,
    /// images[i][j] = s_{i+1}(α_{j+1}) as a linear polynomial.
    images: Vec<Vec<MultiPoly>>,
}

impl QuasiCartanMatrix {
    pub fn new(
        name: impl Into<String>,
        ring: &Arc<PolyRing>,
        entries: Vec<Vec<MultiPoly>>,
        orders: Vec<Vec<u32>>,
        validate: bool,
    ) -> Result<Self> {
        let n = ring.rank();
        let bad = |msg: String| Err(LrcError::InvalidMatrix(msg));
        if n == 0 {
            return bad("rank must be positive".into());
        }
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return bad(format!("matrix must be {n}x{n}"));
        }
        if orders.len() != n || orders.iter().any(|r| r.len() != n) {
            return bad(format!("orders must be {n}x{n}"));
        }
        for i in 0..n {
            if orders[i][i] != 1 {
                return bad(format!("n_{0}{0} must be 1", i + 1));
            }
            for j in 0..n {
                if !entries[i][j].is_alpha_free() {
                    return bad(format!("entry a_{}{} involves root variables", i + 1, j + 1));
                }
                if i != j && (orders[i][j] != orders[j][i] || orders[i][j] == 1) {
                    return bad(format!("n_{}{} must equal n_{}{} and be 0 or at least 2", i + 1, j + 1, j + 1, i + 1));
                }
            }
        }
        let m = QuasiCartanMatrix::build(name.into(), ring, entries, orders);
        if validate {
            m.validate()?;
        }
        Ok(m)
    }

    fn build(name: String, ring: &Arc<PolyRing>, entries: Vec<Vec<MultiPoly>>, orders: Vec<Vec<u32>>) -> Self {
        let n = ring.rank();
        let images = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| &MultiPoly::alpha(ring, j) - &(&entries[i - 1][j - 1] * &MultiPoly::alpha(ring, i)))
                    .collect()
            })
            .collect();
        QuasiCartanMatrix { name, ring: ring.clone(), entries, system: Arc::new(CoxeterSystem::new(orders)), images }
    }

    /// Diagonal 2, symmetric zero pattern and compatibility with the orders.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank();
        let two = MultiPoly::from_int(&self.ring, 2);
        for i in 1..=n {
            if self.entry(i, i) != &two {
                return Err(LrcError::InvalidMatrix(format!("a_{i}{i} must be 2")));
            }
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let (aij, aji) = (self.entry(i, j), self.entry(j, i));
                if aij.is_zero() != aji.is_zero() {
                    return Err(LrcError::InvalidMatrix(format!("a_{i}{j} = 0 but a_{j}{i} != 0 or vice versa")));
                }
                let nij = self.order(i, j);
                if nij == 0 {
                    continue;
                }
                if nij % 2 == 1 && aij != aji {
                    return Err(LrcError::InvalidMatrix(format!("n_{i}{j} = {nij} is odd but a_{i}{j} != a_{j}{i}")));
                }
                let product = (aij * aji).constant_value().ok_or_else(|| {
                    LrcError::InvalidMatrix(format!("cannot check compatibility of symbolic a_{i}{j} with n_{i}{j} = {nij}"))
                })?;
                match order_product_ok(nij, &product, &self.ring) {
                    Some(true) => {}
                    Some(false) => {
                        return Err(LrcError::InvalidMatrix(format!(
                            "a_{i}{j}*a_{j}{i} = {} is incompatible with n_{i}{j} = {nij}",
                            self.ring.field().render(&product)
                        )))
                    }
                    None => {
                        return Err(LrcError::InvalidMatrix(format!(
                            "order n_{i}{j} = {nij} is outside the supported table {{2,3,4,5,6,inf}}"
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    /// The deformation (1+t)A − 2t·Id: off-diagonal entries scaled by 1+t.
    pub fn deformed(&self) -> QuasiCartanMatrix {
        let one_t = &MultiPoly::one(&self.ring) + &MultiPoly::t(&self.ring);
        let n = self.rank();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.entries[i][j].clone() } else { &self.entries[i][j] * &one_t }).collect())
            .collect();
        let mut m = QuasiCartanMatrix::build(format!("{}(t)", self.name), &self.ring, entries, self.system.orders().to_vec());
        m.system = self.system.clone();
        m
    }

    pub(crate) fn set_name(&mut self, name: &str) {
        self.name = name.into();
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// a_ij, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i - 1][j - 1]
    }

    pub fn order(&self, i: usize, j: usize) -> u32 {
        self.system.order(i, j)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn element(&self, word: &Word) -> Result<GroupElement> {
        word.check_rank(self.rank())?;
        Ok(self.system.normal_form(word))
    }

    /// ⟨v, α_j^∨⟩, normalized so that s_j(v) = v − ⟨v, α_j^∨⟩ α_j
    /// reproduces s_j(α_i) = α_i − a_ji α_j.
    pub fn pair(&self, v: &RootVector, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.ring);
        for (i, c) in v.coords().iter().enumerate() {
            if !c.is_zero() {
                out.add_assign_ref(&(c * &self.entries[j - 1][i]));
            }
        }
        out
    }

    pub fn simple_reflect(&self, i: usize, v: &RootVector) -> RootVector {
        let p = self.pair(v, i);
        let mut coords = v.coords().to_vec();
        coords[i - 1] = &coords[i - 1] - &p;
        RootVector::from_coords(coords)
    }

    /// s_{i_1}(s_{i_2}(…s_{i_m}(v)…)).
    pub fn act(&self, word: &Word, v: &RootVector) -> RootVector {
        word.letters().iter().rev().fold(v.clone(), |acc, &i| self.simple_reflect(i, &acc))
    }

    /// Same as `act` for a slice of letters.
    pub fn act_letters(&self, letters: &[usize], v: &RootVector) -> RootVector {
        letters.iter().rev().fold(v.clone(), |acc, &i| self.simple_reflect(i, &acc))
    }

    pub fn reflect_poly(&self, i: usize, f: &MultiPoly) -> MultiPoly {
        f.map_alphas(&self.images[i - 1])
    }

    /// The ring automorphism of S(V) induced by the word (fixes t, a, b).
    pub fn weyl_on_poly(&self, word: &Word, f: &MultiPoly) -> MultiPoly {
        word.letters().iter().rev().fold(f.clone(), |acc, &i| self.reflect_poly(i, &acc))
    }

    /// x_i(f) = (s_i f − f) / α_i.
    pub fn demazure(&self, i: usize, f: &MultiPoly) -> MultiPoly {
        let diff = &self.reflect_poly(i, f) - f;
        diff.exact_div_linear(i).expect("s_i(f) - f is always divisible by a_i")
    }

    /// Partition of `words` under swaps of adjacent letters with a_ij = 0.
    /// Classes are sorted, and listed by their least member.
    pub fn commutativity_classes(&self, words: &[Word]) -> Vec<Vec<Word>> {
        let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut parent: Vec<usize> = (0..words.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (k, w) in words.iter().enumerate() {
            let l = w.letters();
            for p in 0..l.len().saturating_sub(1) {
                if l[p] != l[p + 1] && self.entry(l[p], l[p + 1]).is_zero() {
                    let mut s = l.to_vec();
                    s.swap(p, p + 1);
                    if let Some(&o) = index.get(&Word::new(s)) {
                        let (a, b) = (find(&mut parent, k), find(&mut parent, o));
                        parent[a] = b;
                    }
                }
            }
        }
        let mut classes: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
        for k in 0..words.len() {
            let r = find(&mut parent, k);
            classes.entry(r).or_default().push(words[k].clone());
        }
        let mut out: Vec<Vec<Word>> = classes
            .into_values()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        out.sort();
        out
    }
}
