//! Symmetric powers through Adams operations, the graded pieces S^(k)(g) of
//! the symmetric algebra of g[t]₊, and tensor powers of g.

use crate::characters::{adjoint_character, decompose, Character, Decomposition, SignedCharacter};
use crate::error::{Error, Result};
use crate::rootsys::{LieType, RootSystem};

/// Default upper bound on the degrees held by a [`GradedAdjointTable`].
pub const DEFAULT_MAX_DEGREE: usize = 6;

/// ψ^k: scales every weight by `k`.
pub fn adams(k: u32, x: &SignedCharacter) -> SignedCharacter {
    assert!(k >= 1, "Adams operations start at k = 1");
    SignedCharacter::from_entries(x.lie_type(), x.iter().map(|(w, &m)| (k as i32 * *w, m)))
}

/// Full-support characters of S^0(X), …, S^p(X) via Newton's identity
/// `p·S^p = Σ_{k=1}^{p} ψ^k(X)·S^{p−k}`.
fn sym_powers_full(x: &SignedCharacter, p: usize) -> Vec<SignedCharacter> {
    let lie = x.lie_type();
    let adams_terms: Vec<SignedCharacter> = (1..=p as u32).map(|k| adams(k, x)).collect();
    let mut powers = vec![SignedCharacter::trivial(lie)];
    for q in 1..=p {
        let mut acc = SignedCharacter::empty(lie);
        for k in 1..=q {
            acc.add_scaled(&adams_terms[k - 1].product(&powers[q - k]), 1);
        }
        let next = acc
            .div_exact(q as i64)
            .expect("Newton recursion produced a non-integral symmetric power");
        powers.push(next);
    }
    powers
}

/// Character of the `p`-th symmetric power of `x`.
pub fn sym_power(rs: &RootSystem, p: usize, x: &Character) -> Result<Character> {
    if x.lie_type() != rs.lie_type() {
        return Err(Error::TypeMismatch {
            left: x.lie_type(),
            right: rs.lie_type(),
        });
    }
    let full = sym_powers_full(&x.to_signed(rs), p);
    full[p].compress(rs, "sym_power")
}

/// S^(k)(g) and g^⊗k for every `k ≤ max_degree`.
#[derive(Clone, Debug)]
pub struct GradedAdjointTable {
    lie: LieType,
    max_degree: usize,
    s_graded: Vec<Character>,
    s_graded_irr: Vec<Decomposition>,
    tensor_powers: Vec<Character>,
}

impl GradedAdjointTable {
    pub fn build(rs: &RootSystem, max_degree: usize) -> Result<GradedAdjointTable> {
        let lie = rs.lie_type();
        let g = adjoint_character(rs).to_signed(rs);
        let sym = sym_powers_full(&g, max_degree);

        // cur[d] holds the degree-d part of S(g t) ⊗ S(g t²) ⊗ … ⊗ S(g t^{j}).
        let mut cur: Vec<SignedCharacter> = (0..=max_degree)
            .map(|d| {
                if d == 0 {
                    SignedCharacter::trivial(lie)
                } else {
                    SignedCharacter::empty(lie)
                }
            })
            .collect();
        for j in 1..=max_degree {
            let mut next: Vec<SignedCharacter> = (0..=max_degree)
                .map(|_| SignedCharacter::empty(lie))
                .collect();
            for (d, slot) in next.iter_mut().enumerate() {
                for m in 0..=d / j {
                    let lower = &cur[d - j * m];
                    if lower.is_empty() {
                        continue;
                    }
                    if m == 0 {
                        slot.add_scaled(lower, 1);
                    } else {
                        slot.add_scaled(&lower.product(&sym[m]), 1);
                    }
                }
            }
            cur = next;
        }
        let s_graded = cur
            .iter()
            .map(|c| c.compress(rs, "s_graded"))
            .collect::<Result<Vec<_>>>()?;
        let s_graded_irr = s_graded
            .iter()
            .map(|c| decompose(rs, c))
            .collect::<Result<Vec<_>>>()?;

        let mut tensor_powers = Vec::with_capacity(max_degree + 1);
        let mut power = SignedCharacter::trivial(lie);
        tensor_powers.push(power.compress(rs, "tensor_power")?);
        for _ in 1..=max_degree {
            power = power.product(&g);
            tensor_powers.push(power.compress(rs, "tensor_power")?);
        }

        Ok(GradedAdjointTable {
            lie,
            max_degree,
            s_graded,
            s_graded_irr,
            tensor_powers,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn check(&self, k: usize) -> Result<()> {
        if k > self.max_degree {
            return Err(Error::DegreeTooLarge {
                degree: k,
                max: self.max_degree,
            });
        }
        Ok(())
    }

    /// Character of S^(k)(g).
    pub fn s_graded(&self, k: usize) -> Result<&Character> {
        self.check(k)?;
        Ok(&self.s_graded[k])
    }

    /// Irreducible multiplicities of S^(k)(g).
    pub fn s_graded_decomposition(&self, k: usize) -> Result<&Decomposition> {
        self.check(k)?;
        Ok(&self.s_graded_irr[k])
    }

    /// Character of g^⊗k.
    pub fn tensor_power(&self, k: usize) -> Result<&Character> {
        self.check(k)?;
        Ok(&self.tensor_powers[k])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{irreducible_character, tensor_decompose};
    use crate::rootsys::Weight;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(l: &[i32]) -> Weight {
        Weight::new(l)
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn adams_scales_support() {
        let a1 = rs("A1");
        let x = irreducible_character(&a1, &w(&[2])).unwrap().to_signed(&a1);
        assert_eq!(adams(1, &x), x);
        let y = adams(2, &x);
        let mut support: Vec<_> = y.iter().map(|(w, &m)| (*w, m)).collect();
        support.sort();
        assert_eq!(support, vec![(w(&[-4]), 1), (w(&[0]), 1), (w(&[4]), 1)]);
        let t = SignedCharacter::trivial(a1.lie_type());
        assert_eq!(adams(2, &t), t);
    }

    #[test]
    fn sym_power_examples() {
        let a1 = rs("A1");
        let g = adjoint_character(&a1);
        assert_eq!(
            sym_power(&a1, 0, &g).unwrap(),
            Character::trivial(a1.lie_type())
        );
        let s2 = sym_power(&a1, 2, &g).unwrap();
        let dec = decompose(&a1, &s2).unwrap();
        assert_eq!(
            dec.into_iter().collect::<Vec<_>>(),
            vec![(w(&[0]), 1), (w(&[4]), 1)]
        );
        let a2 = rs("A2");
        let g = adjoint_character(&a2);
        assert_eq!(sym_power(&a2, 2, &g).unwrap().dim(&a2), 36);
    }

    #[test]
    fn sym_power_dims_are_binomial() {
        for t in ["A1", "A2", "B2", "G2", "A3"] {
            let r = rs(t);
            for x in [
                adjoint_character(&r),
                irreducible_character(&r, &Weight::fundamental(r.rank(), 1)).unwrap(),
            ] {
                let n = x.dim(&r);
                for p in 0..=4 {
                    let s = sym_power(&r, p, &x).unwrap();
                    assert_eq!(s.dim(&r), binomial(n + p as u64 - 1, p as u64), "{t} p={p}");
                }
            }
        }
    }

    #[test]
    fn graded_table_small_cases() {
        let a1 = rs("A1");
        let t = GradedAdjointTable::build(&a1, 3).unwrap();
        assert_eq!(*t.s_graded(0).unwrap(), Character::trivial(a1.lie_type()));
        assert_eq!(*t.s_graded(1).unwrap(), adjoint_character(&a1));
        let dec: Vec<_> = t
            .s_graded_decomposition(2)
            .unwrap()
            .clone()
            .into_iter()
            .collect();
        assert_eq!(dec, vec![(w(&[0]), 1), (w(&[2]), 1), (w(&[4]), 1)]);
        assert_eq!(t.s_graded(2).unwrap().dim(&a1), 9);
        // Λ²g ≅ g for sl₂, so S^(2)(g) and g⊗g agree.
        assert_eq!(t.s_graded(2).unwrap(), t.tensor_power(2).unwrap());
        assert!(t.s_graded(4).is_err());
        assert_eq!(
            *t.tensor_power(0).unwrap(),
            Character::trivial(a1.lie_type())
        );
    }

    #[test]
    fn tensor_powers() {
        let d6 = rs("D6");
        let t = GradedAdjointTable::build(&d6, 2).unwrap();
        assert_eq!(t.tensor_power(2).unwrap().dim(&d6), 66 * 66);
        let a1 = rs("A1");
        let t = GradedAdjointTable::build(&a1, 2).unwrap();
        let dec = decompose(&a1, t.tensor_power(2).unwrap()).unwrap();
        assert_eq!(
            dec.into_iter().collect::<Vec<_>>(),
            vec![(w(&[0]), 1), (w(&[2]), 1), (w(&[4]), 1)]
        );
    }

    #[test]
    fn s_graded_is_a_quotient_of_the_tensor_power() {
        let a2 = rs("A2");
        let t = GradedAdjointTable::build(&a2, 4).unwrap();
        for k in 0..=4 {
            let s = t.s_graded_decomposition(k).unwrap();
            let tp = decompose(&a2, t.tensor_power(k).unwrap()).unwrap();
            for (mu, m) in s {
                assert!(*m <= tp.get(mu).copied().unwrap_or(0));
            }
        }
        // direct Klimyk over S^(3)(g) against constituent-by-constituent Klimyk
        let lam = w(&[1, 0]);
        let direct = tensor_decompose(&a2, t.s_graded(3).unwrap(), &lam).unwrap();
        let mut summed = Decomposition::new();
        for (nu, m) in t.s_graded_decomposition(3).unwrap() {
            let v = irreducible_character(&a2, nu).unwrap();
            for (mu, k) in tensor_decompose(&a2, &v, &lam).unwrap() {
                *summed.entry(mu).or_insert(0) += m * k;
            }
        }
        assert_eq!(direct, summed);
    }
}
