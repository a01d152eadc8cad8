//! Slow independent oracles for cross-checking the fast kernels.
//!
//! Weight multiplicities come from Kostant's alternating sum over W of the
//! partition function, tensor products from full pointwise convolution
//! followed by greedy highest-weight peeling. Nothing here calls Freudenthal
//! or Klimyk.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use num_rational::Ratio;
use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use crate::characters::Decomposition;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Rank limit for the brute-force oracles.
pub const ORACLE_MAX_RANK: usize = 3;

type Q = Ratio<i64>;

struct Kit<'a> {
    rs: &'a RootSystem,
    inv: Vec<Vec<Q>>,
    /// Simple roots in label coordinates.
    alpha: Vec<Vec<i32>>,
}

impl<'a> Kit<'a> {
    fn new(rs: &'a RootSystem) -> Result<Kit<'a>> {
        let n = rs.rank();
        if n > ORACLE_MAX_RANK {
            return Err(Error::RankTooLarge {
                rank: n,
                max: ORACLE_MAX_RANK,
            });
        }
        let a = rs.cartan();
        let alpha = (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect();
        Ok(Kit {
            rs,
            inv: invert(a),
            alpha,
        })
    }

    fn n(&self) -> usize {
        self.rs.rank()
    }

    fn root_coords(&self, w: &[i32]) -> Vec<Q> {
        (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.inv[i][j] * w[j] as i64).sum())
            .collect()
    }

    fn reflect(&self, i: usize, w: &mut [i32]) {
        let c = w[i];
        for (x, a) in w.iter_mut().zip(&self.alpha[i]) {
            *x -= c * a;
        }
    }

    /// Orbit of `w` by breadth-first search, with the parity of the BFS
    /// depth. For a regular `w` the parity is det of the unique group element.
    fn orbit_with_sign(&self, w: &[i32]) -> Vec<(Vec<i32>, i64)> {
        let mut seen: FxHashMap<Vec<i32>, i64> = FxHashMap::default();
        let mut queue = VecDeque::new();
        seen.insert(w.to_vec(), 1);
        queue.push_back(w.to_vec());
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            let s = seen[&v];
            out.push((v.clone(), s));
            for i in 0..self.n() {
                let mut u = v.clone();
                self.reflect(i, &mut u);
                if !seen.contains_key(&u) {
                    seen.insert(u.clone(), -s);
                    queue.push_back(u);
                }
            }
        }
        out
    }
}

fn invert(a: &[Vec<i32>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        Q::from_integer(a[i][j] as i64)
                    } else {
                        Q::from_integer((j - n == i) as i64)
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| m[r][col] != Q::from_integer(0))
            .expect("Cartan matrix is invertible");
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let f = m[r][col];
                if f != Q::from_integer(0) {
                    let pivot = m[col].clone();
                    for (x, &v) in m[r].iter_mut().zip(&pivot) {
                        *x -= f * v;
                    }
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Kostant partition function tabulated on the box `0 ≤ c ≤ bound`.
struct Partitions {
    bound: Vec<i64>,
    table: Vec<u64>,
}

impl Partitions {
    fn new(rs: &RootSystem, bound: Vec<i64>) -> Partitions {
        let size: usize = bound.iter().map(|&b| (b + 1) as usize).product();
        let mut table = vec![0u64; size];
        table[0] = 1;
        let stride = |bound: &[i64]| {
            let mut s = vec![1usize; bound.len()];
            for i in 1..bound.len() {
                s[i] = s[i - 1] * (bound[i - 1] + 1) as usize;
            }
            s
        };
        let strides = stride(&bound);
        for beta in rs.positive_roots() {
            let b = beta.coeffs();
            if b.iter().zip(&bound).any(|(&x, &y)| x as i64 > y) {
                continue;
            }
            let offset: usize = b.iter().zip(&strides).map(|(&x, &s)| x as usize * s).sum();
            for idx in 0..size {
                let fits = (0..bound.len())
                    .all(|i| (idx / strides[i]) % (bound[i] + 1) as usize >= b[i] as usize);
                if fits {
                    table[idx] += table[idx - offset];
                }
            }
        }
        Partitions { bound, table }
    }

    fn get(&self, c: &[Q]) -> u64 {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (x, &b) in c.iter().zip(&self.bound) {
            if !x.is_integer() {
                return 0;
            }
            let v = x.to_integer();
            if v < 0 || v > b {
                return 0;
            }
            idx += v as usize * stride;
            stride *= (b + 1) as usize;
        }
        self.table[idx]
    }
}

fn floor_bound(c: &[Q]) -> Vec<i64> {
    c.iter().map(|x| x.floor().to_integer().max(0)).collect()
}

fn dominant_mults(kit: &Kit, lambda: &Weight) -> BTreeMap<Weight, u64> {
    let n = kit.n();
    let lam = lambda.labels();
    let bound = floor_bound(&kit.root_coords(lam));
    let parts = Partitions::new(kit.rs, bound.clone());
    let lr: Vec<i32> = lam.iter().map(|x| x + 1).collect();
    let orbit = kit.orbit_with_sign(&lr);
    let mut out = BTreeMap::new();
    let mut c = vec![0i64; n];
    loop {
        let mut mu = lam.to_vec();
        for (j, &cj) in c.iter().enumerate() {
            for (m, a) in mu.iter_mut().zip(&kit.alpha[j]) {
                *m -= cj as i32 * a;
            }
        }
        if mu.iter().all(|&x| x >= 0) {
            let mut m: i64 = 0;
            for (v, s) in &orbit {
                let diff: Vec<i32> = v.iter().zip(&mu).map(|(a, b)| a - b - 1).collect();
                m += s * parts.get(&kit.root_coords(&diff)) as i64;
            }
            assert!(m >= 0, "alternating sum went negative");
            if m > 0 {
                out.insert(Weight::new(&mu), m as u64);
            }
        }
        let mut i = 0;
        while i < n {
            c[i] += 1;
            if c[i] <= bound[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    out
}

/// Dominant weight multiplicities of V(λ) from Kostant's formula.
pub fn kostant_character(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    rs.check_dominant(lambda)?;
    let kit = Kit::new(rs)?;
    Ok(dominant_mults(&kit, lambda))
}

fn full_character(kit: &Kit, lambda: &Weight) -> FxHashMap<Weight, i64> {
    let mut out = FxHashMap::default();
    for (mu, m) in dominant_mults(kit, lambda) {
        for (v, _) in kit.orbit_with_sign(mu.labels()) {
            out.insert(Weight::new(&v), m as i64);
        }
    }
    out
}

/// Brute-force tensor products with a cache of full-support characters.
pub struct TensorOracle<'a> {
    kit: Kit<'a>,
    chars: RwLock<FxHashMap<Weight, Arc<FxHashMap<Weight, i64>>>>,
}

impl<'a> TensorOracle<'a> {
    pub fn new(rs: &'a RootSystem) -> Result<TensorOracle<'a>> {
        Ok(TensorOracle {
            kit: Kit::new(rs)?,
            chars: RwLock::new(FxHashMap::default()),
        })
    }

    fn character(&self, lambda: &Weight) -> Arc<FxHashMap<Weight, i64>> {
        if let Some(c) = self.chars.read().get(lambda) {
            return c.clone();
        }
        let c = Arc::new(full_character(&self.kit, lambda));
        self.chars.write().entry(*lambda).or_insert(c).clone()
    }

    /// V(λ) ⊗ V(μ) by pointwise convolution and greedy peeling.
    pub fn tensor(&self, lambda: &Weight, mu: &Weight) -> Result<Decomposition> {
        let rs = self.kit.rs;
        rs.check_dominant(lambda)?;
        rs.check_dominant(mu)?;
        let a = self.character(lambda);
        let b = self.character(mu);
        let mut prod: FxHashMap<Weight, i64> = FxHashMap::default();
        for (x, m) in a.iter() {
            for (y, k) in b.iter() {
                *prod.entry(*x + *y).or_insert(0) += m * k;
            }
        }
        let mut out = Decomposition::new();
        loop {
            prod.retain(|_, m| *m != 0);
            let Some(top) = prod
                .keys()
                .map(|w| (self.kit.root_coords(w.labels()).into_iter().sum::<Q>(), *w))
                .max_by(|x, y| x.0.cmp(&y.0).then_with(|| y.1.cmp(&x.1)))
                .map(|(_, w)| w)
            else {
                break;
            };
            let m = prod[&top];
            assert!(
                m > 0 && top.is_dominant(),
                "peeling reached a non-character"
            );
            out.insert(top, m as u64);
            for (w, k) in self.character(&top).iter() {
                *prod.entry(*w).or_insert(0) -= m * k;
            }
        }
        Ok(out)
    }
}

/// V(λ) ⊗ V(μ) by pointwise convolution and greedy peeling.
pub fn brute_force_tensor_oracle(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Decomposition> {
    TensorOracle::new(rs)?.tensor(lambda, mu)
}

/// Coefficient of q^k in ∏_{j≥1} (1 − q^j)^{−d}.
pub fn pbw_dimension(d: u64, k: usize) -> u128 {
    let mut poly = vec![0u128; k + 1];
    poly[0] = 1;
    for j in 1..=k {
        // (1 − q^j)^{−d} = Σ_m C(d+m−1, m) q^{jm}
        let mut factor = vec![0u128; k / j + 1];
        factor[0] = 1;
        for m in 1..factor.len() {
            factor[m] = factor[m - 1] * (d as u128 + m as u128 - 1) / m as u128;
        }
        let mut next = vec![0u128; k + 1];
        for (e, &p) in poly.iter().enumerate() {
            if p == 0 {
                continue;
            }
            for (m, &f) in factor.iter().enumerate() {
                if e + j * m > k {
                    break;
                }
                next[e + j * m] += p * f;
            }
        }
        poly = next;
    }
    poly[k]
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
    fn clebsch_gordan() {
        let a1 = rs("A1");
        let d = brute_force_tensor_oracle(&a1, &w(&[1]), &w(&[1])).unwrap();
        assert_eq!(
            d.into_iter().collect::<Vec<_>>(),
            vec![(w(&[0]), 1), (w(&[2]), 1)]
        );
    }

    #[test]
    fn a2_examples() {
        let a2 = rs("A2");
        let d = brute_force_tensor_oracle(&a2, &w(&[1, 0]), &w(&[0, 1])).unwrap();
        assert_eq!(
            d.into_iter().collect::<Vec<_>>(),
            vec![(w(&[0, 0]), 1), (w(&[1, 1]), 1)]
        );
        let d = brute_force_tensor_oracle(&a2, &w(&[1, 1]), &w(&[1, 1])).unwrap();
        assert_eq!(d.len(), 5);
        assert_eq!(d.values().sum::<u64>(), 6);
        assert_eq!(d[&w(&[1, 1])], 2);
        assert_eq!(
            kostant_character(&a2, &w(&[1, 1])).unwrap(),
            BTreeMap::from([(w(&[0, 0]), 2), (w(&[1, 1]), 1)])
        );
    }

    #[test]
    fn g2_adjoint() {
        let g2 = rs("G2");
        let c = kostant_character(&g2, &g2.theta()).unwrap();
        assert_eq!(c[&w(&[0, 0])], 2);
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn rank_limit() {
        let a4 = rs("A4");
        assert!(matches!(
            brute_force_tensor_oracle(&a4, &a4.zero(), &a4.zero()),
            Err(Error::RankTooLarge { rank: 4, max: 3 })
        ));
    }

    #[test]
    fn pbw_small() {
        // sl₂: (1−q)^{−3}(1−q²)^{−3}: 1, 3, 6+3 = 9
        assert_eq!(pbw_dimension(3, 0), 1);
        assert_eq!(pbw_dimension(3, 1), 3);
        assert_eq!(pbw_dimension(3, 2), 9);
        assert_eq!(pbw_dimension(1, 5), 7);
    }
}
