//! Exact character arithmetic.
//!
//! A [`Character`] keeps only its dominant multiplicities; the full weight
//! multiplicity at `w` is the entry at the dominant representative of `w`.
//! Orbits are expanded on the fly where products or Klimyk sums need them.
//! [`SignedCharacter`] carries full support and arbitrary signs and is used
//! for intermediate (virtual) characters.

use std::collections::BTreeMap;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::rootsys::{LieType, RootSystem, Weight};

/// Irreducible multiplicities, keyed by highest weight.
pub type Decomposition = BTreeMap<Weight, u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    lie: LieType,
    mults: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn empty(lie: LieType) -> Character {
        Character {
            lie,
            mults: BTreeMap::new(),
        }
    }

    pub fn trivial(lie: LieType) -> Character {
        let mut c = Character::empty(lie);
        c.mults.insert(Weight::zero(lie.rank()), 1);
        c
    }

    /// Builds a character from dominant multiplicities. Zero entries are dropped.
    pub fn from_dominant(
        lie: LieType,
        entries: impl IntoIterator<Item = (Weight, u64)>,
    ) -> Result<Character> {
        let mut c = Character::empty(lie);
        for (w, m) in entries {
            if w.rank() != lie.rank() {
                return Err(Error::RankMismatch {
                    weight: w.to_string(),
                    expected: lie.rank(),
                    found: w.rank(),
                });
            }
            if !w.is_dominant() {
                return Err(Error::NotDominant(w));
            }
            if m > 0 {
                *c.mults.entry(w).or_insert(0) += m;
            }
        }
        Ok(c)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie
    }

    /// Multiplicity of the dominant weight `w`.
    pub fn get(&self, w: &Weight) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    /// Multiplicity of an arbitrary weight, using Weyl symmetry.
    pub fn multiplicity(&self, rs: &RootSystem, w: &Weight) -> u64 {
        self.get(&rs.dominant_representative(w).weight)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.mults.iter()
    }

    /// Number of distinct dominant weights.
    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn dim(&self, rs: &RootSystem) -> u64 {
        self.mults.iter().map(|(w, m)| m * rs.orbit_size(w)).sum()
    }

    /// Number of weights in the full (orbit-expanded) support.
    pub fn support_size(&self, rs: &RootSystem) -> u64 {
        self.mults.keys().map(|w| rs.orbit_size(w)).sum()
    }

    /// Visits every weight of the full support with its multiplicity.
    pub fn for_each_weight(&self, rs: &RootSystem, mut f: impl FnMut(&Weight, u64)) {
        for (w, &m) in &self.mults {
            rs.for_each_in_orbit(w, |x| f(x, m));
        }
    }

    pub fn to_signed(&self, rs: &RootSystem) -> SignedCharacter {
        let mut s = SignedCharacter::empty(self.lie);
        s.mults.reserve(self.support_size(rs) as usize);
        self.for_each_weight(rs, |w, m| {
            s.mults.insert(*w, m as i64);
        });
        s
    }

    pub fn add_scaled(&mut self, other: &Character, k: u64) {
        for (w, m) in &other.mults {
            *self.mults.entry(*w).or_insert(0) += k * m;
        }
    }

    /// Character of a direct sum of irreducibles.
    pub fn from_decomposition(
        rs: &RootSystem,
        dec: &Decomposition,
        irreducible: impl Fn(&Weight) -> Result<Character>,
    ) -> Result<Character> {
        let mut c = Character::empty(rs.lie_type());
        for (w, &m) in dec {
            c.add_scaled(&irreducible(w)?, m);
        }
        Ok(c)
    }
}

/// A virtual character with full support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCharacter {
    lie: LieType,
    mults: FxHashMap<Weight, i64>,
}

impl SignedCharacter {
    pub fn empty(lie: LieType) -> SignedCharacter {
        SignedCharacter {
            lie,
            mults: FxHashMap::default(),
        }
    }

    pub fn trivial(lie: LieType) -> SignedCharacter {
        let mut s = SignedCharacter::empty(lie);
        s.mults.insert(Weight::zero(lie.rank()), 1);
        s
    }

    pub fn from_entries(lie: LieType, entries: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut s = SignedCharacter::empty(lie);
        for (w, m) in entries {
            s.add_at(w, m);
        }
        s
    }

    pub fn lie_type(&self) -> LieType {
        self.lie
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.mults.iter()
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Signed dimension, the sum of all multiplicities.
    pub fn dim(&self) -> i64 {
        self.mults.values().sum()
    }

    pub fn add_at(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.mults.entry(w).or_insert(0);
        *e += m;
        if *e == 0 {
            self.mults.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &SignedCharacter, k: i64) {
        for (w, m) in &other.mults {
            self.add_at(*w, k * m);
        }
    }

    pub fn scale(&mut self, k: i64) {
        if k == 0 {
            self.mults.clear();
        } else {
            self.mults.values_mut().for_each(|m| *m *= k);
        }
    }

    /// Exact division of every multiplicity; `None` if some entry is not divisible.
    pub fn div_exact(&self, k: i64) -> Option<SignedCharacter> {
        let mut out = SignedCharacter::empty(self.lie);
        out.mults.reserve(self.mults.len());
        for (w, &m) in &self.mults {
            if m % k != 0 {
                return None;
            }
            out.mults.insert(*w, m / k);
        }
        Some(out)
    }

    /// Product of characters (convolution of weight multisets).
    pub fn product(&self, other: &SignedCharacter) -> SignedCharacter {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = SignedCharacter::empty(self.lie);
        out.mults.reserve(large.len());
        for (a, &ma) in &small.mults {
            for (b, &mb) in &large.mults {
                *out.mults.entry(*a + *b).or_insert(0) += ma * mb;
            }
        }
        out.mults.retain(|_, m| *m != 0);
        out
    }

    /// Orbit-compresses a W-invariant, non-negative virtual character.
    pub fn compress(&self, rs: &RootSystem, context: &'static str) -> Result<Character> {
        let mut c = Character::empty(self.lie);
        for (w, &m) in &self.mults {
            if m < 0 {
                return Err(Error::NegativeMultiplicity {
                    weight: *w,
                    value: m,
                    context,
                });
            }
            if w.is_dominant() {
                c.mults.insert(*w, m as u64);
            }
        }
        debug_assert!(
            self.mults
                .iter()
                .all(|(w, &m)| c.get(&rs.dominant_representative(w).weight) as i64 == m),
            "{context}: character is not W-invariant"
        );
        Ok(c)
    }
}

/// Weyl's dimension formula, `∏_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    rs.check_dominant(lambda)?;
    Ok(weyl_dim_unchecked(rs, lambda))
}

pub(crate) fn weyl_dim_unchecked(rs: &RootSystem, lambda: &Weight) -> u128 {
    let shifted = *lambda + rs.rho();
    let rho = rs.rho();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for k in 0..rs.positive_roots().len() {
        let a = rs.root_pairing6(k, &shifted) as u128;
        let b = rs.root_pairing6(k, &rho) as u128;
        num = num.checked_mul(a).expect("dimension overflow");
        den = den.checked_mul(b).expect("dimension overflow");
        let g = num_integer::gcd(num, den);
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1, "Weyl dimension is not an integer");
    num
}

/// Dominant weights `μ ≤ λ` (same root-lattice coset), with the height of `λ − μ`.
///
/// Any two comparable dominant weights are joined by a chain of dominant
/// weights differing by positive roots, so a search that only keeps dominant
/// weights finds all of them.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Vec<(Weight, i32)> {
    let mut depth: FxHashMap<Weight, i32> = FxHashMap::default();
    depth.insert(*lambda, 0);
    let mut frontier = vec![*lambda];
    while let Some(mu) = frontier.pop() {
        let d = depth[&mu];
        for (a, r) in rs.positive_root_weights().iter().zip(rs.positive_roots()) {
            let nu = mu - *a;
            if nu.is_dominant() && !depth.contains_key(&nu) {
                depth.insert(nu, d + r.height());
                frontier.push(nu);
            }
        }
    }
    let mut out: Vec<(Weight, i32)> = depth.into_iter().collect();
    out.sort_by_key(|(w, d)| (*d, std::cmp::Reverse(*w)));
    out
}

/// Character of V(λ) by Freudenthal's recursion over dominant weights.
pub fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    rs.check_dominant(lambda)?;
    let below = dominant_weights_below(rs, lambda);
    let rho = rs.rho();
    let top = rs.inner_scaled(&(*lambda + rho), &(*lambda + rho));
    let den = rs.form_den() as i128;
    let mut mults: FxHashMap<Weight, u64> = FxHashMap::default();
    mults.insert(*lambda, 1);
    for &(mu, d) in below.iter().skip(1) {
        debug_assert!(d > 0);
        let mut sum: i128 = 0;
        for (k, alpha) in rs.positive_root_weights().iter().enumerate() {
            let mut nu = mu;
            loop {
                nu += *alpha;
                let dom = rs.dominant_representative(&nu).weight;
                match mults.get(&dom) {
                    Some(&m) => sum += m as i128 * rs.root_pairing6(k, &nu) as i128,
                    None => break,
                }
            }
        }
        let gap = (top - rs.inner_scaled(&(mu + rho), &(mu + rho))) as i128;
        let num = 2 * sum * den;
        let q = 6 * gap;
        assert!(
            q > 0 && num % q == 0,
            "Freudenthal step not integral at {mu}"
        );
        mults.insert(mu, (num / q) as u64);
    }
    Character::from_dominant(rs.lie_type(), mults)
}

/// The adjoint representation, V(θ).
pub fn adjoint_character(rs: &RootSystem) -> Character {
    irreducible_character(rs, &rs.theta()).expect("θ is dominant")
}

fn check_same_type(rs: &RootSystem, x: &Character) -> Result<()> {
    if x.lie_type() != rs.lie_type() {
        return Err(Error::TypeMismatch {
            left: x.lie_type(),
            right: rs.lie_type(),
        });
    }
    Ok(())
}

/// Decomposes `X ⊗ V(λ)` with Klimyk's formula, summing over the weights of `X`.
///
/// Every call checks `Σ m_ν dim V(ν) = dim X · dim V(λ)`.
pub fn tensor_decompose(rs: &RootSystem, x: &Character, lambda: &Weight) -> Result<Decomposition> {
    check_same_type(rs, x)?;
    rs.check_dominant(lambda)?;
    let shift = *lambda + rs.rho();
    let rho = rs.rho();
    let entries: Vec<(&Weight, &u64)> = x.iter().collect();
    let acc = entries
        .par_iter()
        .fold(FxHashMap::<Weight, i64>::default, |mut acc, &(xi, &m)| {
            rs.for_each_in_orbit(xi, |w| {
                let mut v = *w + shift;
                let (sign, _) = rs.fold(&mut v);
                if v.labels().iter().all(|&l| l > 0) {
                    *acc.entry(v - rho).or_insert(0) += sign as i64 * m as i64;
                }
            });
            acc
        })
        .reduce(FxHashMap::default, |mut a, b| {
            for (w, m) in b {
                *a.entry(w).or_insert(0) += m;
            }
            a
        });
    let mut out = Decomposition::new();
    for (w, m) in acc {
        match m {
            0 => {}
            m if m < 0 => {
                return Err(Error::NegativeMultiplicity {
                    weight: w,
                    value: m,
                    context: "tensor_decompose",
                })
            }
            m => {
                out.insert(w, m as u64);
            }
        }
    }
    let lhs: u128 = out
        .iter()
        .map(|(w, &m)| m as u128 * weyl_dim_unchecked(rs, w))
        .sum();
    let rhs = x.dim(rs) as u128 * weyl_dim_unchecked(rs, lambda);
    assert_eq!(lhs, rhs, "dimension not conserved in X ⊗ V({lambda})");
    Ok(out)
}

/// Irreducible decomposition of a character (Klimyk with λ = 0).
pub fn decompose(rs: &RootSystem, x: &Character) -> Result<Decomposition> {
    tensor_decompose(rs, x, &rs.zero())
}

/// `dim Hom_g(V(μ), X ⊗ V(λ))`.
pub fn hom_dim(rs: &RootSystem, mu: &Weight, x: &Character, lambda: &Weight) -> Result<u64> {
    rs.check_dominant(mu)?;
    Ok(tensor_decompose(rs, x, lambda)?
        .get(mu)
        .copied()
        .unwrap_or(0))
}

/// `X` with every dominant key replaced by its dual, i.e. the character of `X*`.
pub fn dual_character(rs: &RootSystem, x: &Character) -> Character {
    Character::from_dominant(x.lie_type(), x.iter().map(|(w, &m)| (rs.dual_weight(w), m)))
        .expect("duals of dominant weights are dominant")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(l: &[i32]) -> Weight {
        Weight::new(l)
    }

    #[test]
    fn weyl_dims() {
        assert_eq!(weyl_dim(&rs("A2"), &w(&[0, 0])).unwrap(), 1);
        for m in 0..6 {
            assert_eq!(weyl_dim(&rs("A1"), &w(&[m])).unwrap(), m as u128 + 1);
        }
        let d6 = rs("D6");
        assert_eq!(weyl_dim(&d6, &d6.theta()).unwrap(), 66);
        assert_eq!(weyl_dim(&d6, &Weight::fundamental(6, 1)).unwrap(), 12);
        assert_eq!(weyl_dim(&d6, &Weight::fundamental(6, 6)).unwrap(), 32);
        assert_eq!(weyl_dim(&rs("E8"), &rs("E8").theta()).unwrap(), 248);
        assert_eq!(weyl_dim(&rs("E7"), &Weight::fundamental(7, 7)).unwrap(), 56);
        assert_eq!(weyl_dim(&rs("G2"), &w(&[1, 0])).unwrap(), 7);
        assert_eq!(weyl_dim(&rs("F4"), &w(&[0, 0, 0, 1])).unwrap(), 26);
        assert!(weyl_dim(&rs("A2"), &w(&[-1, 0])).is_err());
    }

    #[test]
    fn small_irreducibles() {
        let a2 = rs("A2");
        let c = irreducible_character(&a2, &w(&[1, 1])).unwrap();
        let got: Vec<_> = c.iter().map(|(w, m)| (*w, *m)).collect();
        assert_eq!(got, vec![(w(&[0, 0]), 2), (w(&[1, 1]), 1)]);
        let a1 = rs("A1");
        let c = irreducible_character(&a1, &w(&[4])).unwrap();
        let got: Vec<_> = c.iter().map(|(w, m)| (*w, *m)).collect();
        assert_eq!(got, vec![(w(&[0]), 1), (w(&[2]), 1), (w(&[4]), 1)]);
        let t = irreducible_character(&a2, &w(&[0, 0])).unwrap();
        assert_eq!(t, Character::trivial(a2.lie_type()));
    }

    #[test]
    fn freudenthal_dims_match_weyl() {
        for t in ["A3", "B3", "C3", "G2", "D4", "F4"] {
            let r = rs(t);
            for lam in [r.theta(), r.rho(), Weight::fundamental(r.rank(), 1)] {
                let c = irreducible_character(&r, &lam).unwrap();
                assert_eq!(c.dim(&r) as u128, weyl_dim(&r, &lam).unwrap(), "{t} {lam}");
            }
        }
    }

    #[test]
    fn adjoint_characters() {
        let d6 = rs("D6");
        let g = adjoint_character(&d6);
        assert_eq!(g.dim(&d6), 66);
        assert_eq!(g.get(&d6.zero()), 6);
        assert_eq!(g.len(), 2);
        let a1 = rs("A1");
        let g = adjoint_character(&a1);
        assert_eq!(g.get(&w(&[2])), 1);
        assert_eq!(g.get(&w(&[0])), 1);
        let g2 = rs("G2");
        let g = adjoint_character(&g2);
        assert_eq!(g.dim(&g2), 14);
        // the highest short root ω_1 appears once
        assert_eq!(g.get(&w(&[1, 0])), 1);
        assert_eq!(g.get(&g2.zero()), 2);
    }

    #[test]
    fn klimyk_examples() {
        let a1 = rs("A1");
        let triv = Character::trivial(a1.lie_type());
        let d = tensor_decompose(&a1, &triv, &w(&[3])).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(w(&[3]), 1)]);
        let x = irreducible_character(&a1, &w(&[2])).unwrap();
        let d = tensor_decompose(&a1, &x, &w(&[2])).unwrap();
        assert_eq!(
            d.into_iter().collect::<Vec<_>>(),
            vec![(w(&[0]), 1), (w(&[2]), 1), (w(&[4]), 1)]
        );
        let a2 = rs("A2");
        let g = adjoint_character(&a2);
        let d = tensor_decompose(&a2, &g, &w(&[1, 1])).unwrap();
        assert_eq!(d[&w(&[1, 1])], 2);
        let b2 = rs("B2");
        assert!(tensor_decompose(&b2, &g, &w(&[1, 1])).is_err());
    }

    #[test]
    fn hom_dims() {
        let a2 = rs("A2");
        let g = adjoint_character(&a2);
        let triv = Character::trivial(a2.lie_type());
        assert_eq!(hom_dim(&a2, &w(&[2, 1]), &triv, &w(&[2, 1])).unwrap(), 1);
        assert_eq!(hom_dim(&a2, &a2.zero(), &g, &a2.theta()).unwrap(), 1);
        let d6 = rs("D6");
        let g = adjoint_character(&d6);
        let om2 = Weight::fundamental(6, 2);
        assert_eq!(hom_dim(&d6, &om2, &g, &om2).unwrap(), 1);
    }

    #[test]
    fn hom_dim_duality() {
        // Hom(V(μ), X⊗V(λ)) = Hom(V(λ), X*⊗V(μ)) = Hom(V(μ*), X*⊗V(λ*))
        let a3 = rs("A3");
        let x = irreducible_character(&a3, &w(&[2, 0, 1])).unwrap();
        let xd = dual_character(&a3, &x);
        for mu in [w(&[1, 1, 0]), w(&[0, 1, 2]), w(&[3, 0, 1])] {
            for lam in [w(&[1, 0, 0]), w(&[0, 2, 1])] {
                let a = hom_dim(&a3, &mu, &x, &lam).unwrap();
                let b = hom_dim(&a3, &lam, &xd, &mu).unwrap();
                let c = hom_dim(&a3, &a3.dual_weight(&mu), &xd, &a3.dual_weight(&lam)).unwrap();
                assert_eq!((a, a), (b, c), "μ={mu} λ={lam}");
            }
        }
    }

    #[test]
    fn signed_product_and_division() {
        let a1 = rs("A1");
        let v1 = irreducible_character(&a1, &w(&[1])).unwrap().to_signed(&a1);
        let sq = v1.product(&v1);
        assert_eq!(sq.get(&w(&[2])), 1);
        assert_eq!(sq.get(&w(&[0])), 2);
        assert_eq!(sq.dim(), 4);
        assert!(sq.div_exact(2).is_none());
        let c = sq.compress(&a1, "test").unwrap();
        assert_eq!(decompose(&a1, &c).unwrap().len(), 2);
        let mut neg = sq.clone();
        neg.scale(-1);
        assert!(neg.compress(&a1, "test").is_err());
    }
}
