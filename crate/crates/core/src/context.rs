//! Per-type computation context: the root system plus memoized characters,
//! the graded adjoint table and tensor decompositions.
//!
//! Caches are guarded by reader/writer locks. Values are computed outside the
//! lock and inserted afterwards, so two threads may race to compute the same
//! entry; both produce the same value.

use std::sync::Arc;

use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use crate::characters::{self, Character, Decomposition};
use crate::error::{Error, Result};
use crate::plethysm::{GradedAdjointTable, DEFAULT_MAX_DEGREE};
use crate::rootsys::{LieType, RootSystem, Weight};

/// The g-modules the kernel tensors with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKey {
    Irreducible(Weight),
    /// S^(k)(g), the degree-k part of U(g[t]₊).
    SGraded(usize),
    /// g^⊗k.
    TensorPower(usize),
}

pub struct LieContext {
    rs: RootSystem,
    max_degree: usize,
    adjoint: Arc<Character>,
    trivial: Arc<Character>,
    graded: RwLock<Option<Arc<GradedAdjointTable>>>,
    irreducibles: RwLock<FxHashMap<Weight, Arc<Character>>>,
    decompositions: RwLock<FxHashMap<(ModuleKey, Weight), Arc<Decomposition>>>,
}

impl LieContext {
    pub fn new(lie: LieType) -> LieContext {
        LieContext::with_max_degree(lie, DEFAULT_MAX_DEGREE)
    }

    pub fn with_max_degree(lie: LieType, max_degree: usize) -> LieContext {
        let rs = RootSystem::new(lie);
        let adjoint = Arc::new(characters::adjoint_character(&rs));
        LieContext {
            trivial: Arc::new(Character::trivial(lie)),
            rs,
            max_degree,
            adjoint,
            graded: RwLock::new(None),
            irreducibles: RwLock::new(FxHashMap::default()),
            decompositions: RwLock::new(FxHashMap::default()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn lie_type(&self) -> LieType {
        self.rs.lie_type()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn adjoint(&self) -> &Character {
        &self.adjoint
    }

    pub fn irreducible(&self, lambda: &Weight) -> Result<Arc<Character>> {
        if let Some(c) = self.irreducibles.read().get(lambda) {
            return Ok(c.clone());
        }
        let c = Arc::new(characters::irreducible_character(&self.rs, lambda)?);
        Ok(self
            .irreducibles
            .write()
            .entry(*lambda)
            .or_insert(c)
            .clone())
    }

    /// The graded table, extended to at least degree `k`.
    pub fn graded_table(&self, k: usize) -> Result<Arc<GradedAdjointTable>> {
        if k > self.max_degree {
            return Err(Error::DegreeTooLarge {
                degree: k,
                max: self.max_degree,
            });
        }
        if let Some(t) = self.graded.read().as_ref() {
            if t.max_degree() >= k {
                return Ok(t.clone());
            }
        }
        let mut slot = self.graded.write();
        if let Some(t) = slot.as_ref() {
            if t.max_degree() >= k {
                return Ok(t.clone());
            }
        }
        let t = Arc::new(GradedAdjointTable::build(&self.rs, k)?);
        *slot = Some(t.clone());
        Ok(t)
    }

    /// Character of the module named by `key`.
    pub fn character(&self, key: ModuleKey) -> Result<Arc<Character>> {
        Ok(match key {
            ModuleKey::Irreducible(w) => self.irreducible(&w)?,
            ModuleKey::SGraded(0) | ModuleKey::TensorPower(0) => self.trivial.clone(),
            ModuleKey::SGraded(1) | ModuleKey::TensorPower(1) => self.adjoint.clone(),
            ModuleKey::SGraded(k) => Arc::new(self.graded_table(k)?.s_graded(k)?.clone()),
            ModuleKey::TensorPower(k) => Arc::new(self.graded_table(k)?.tensor_power(k)?.clone()),
        })
    }

    /// Memoized decomposition of `M ⊗ V(λ)`.
    pub fn tensor_decompose(&self, key: ModuleKey, lambda: &Weight) -> Result<Arc<Decomposition>> {
        self.rs.check_dominant(lambda)?;
        if let Some(d) = self.decompositions.read().get(&(key, *lambda)) {
            return Ok(d.clone());
        }
        let d = match key {
            ModuleKey::SGraded(0) | ModuleKey::TensorPower(0) => {
                Decomposition::from([(*lambda, 1)])
            }
            ModuleKey::SGraded(k) if k >= 2 => {
                let t = self.graded_table(k)?;
                characters::tensor_decompose(&self.rs, t.s_graded(k)?, lambda)?
            }
            ModuleKey::TensorPower(k) if k >= 2 => {
                let t = self.graded_table(k)?;
                characters::tensor_decompose(&self.rs, t.tensor_power(k)?, lambda)?
            }
            _ => characters::tensor_decompose(&self.rs, &*self.character(key)?, lambda)?,
        };
        let d = Arc::new(d);
        Ok(self
            .decompositions
            .write()
            .entry((key, *lambda))
            .or_insert(d)
            .clone())
    }

    /// `dim Hom_g(V(μ), M ⊗ V(λ))`.
    pub fn hom_dim(&self, mu: &Weight, key: ModuleKey, lambda: &Weight) -> Result<u64> {
        self.rs.check_dominant(mu)?;
        Ok(self
            .tensor_decompose(key, lambda)?
            .get(mu)
            .copied()
            .unwrap_or(0))
    }
}

impl std::fmt::Debug for LieContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LieContext")
            .field("lie", &self.lie_type())
            .field("max_degree", &self.max_degree)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn memoized_values_are_stable() {
        let ctx = LieContext::new("A2".parse().unwrap());
        let lam = Weight::new(&[1, 1]);
        let a = ctx.hom_dim(&lam, ModuleKey::TensorPower(1), &lam).unwrap();
        let b = ctx.hom_dim(&lam, ModuleKey::TensorPower(1), &lam).unwrap();
        assert_eq!((a, b), (2, 2));
        assert_eq!(ctx.hom_dim(&lam, ModuleKey::SGraded(0), &lam).unwrap(), 1);
        assert_eq!(
            ctx.hom_dim(&lam, ModuleKey::TensorPower(0), &Weight::new(&[1, 0]))
                .unwrap(),
            0
        );
    }

    #[test]
    fn degree_limit_is_enforced() {
        let ctx = LieContext::with_max_degree("A1".parse().unwrap(), 2);
        assert!(ctx.graded_table(3).is_err());
        assert!(ctx
            .hom_dim(
                &Weight::new(&[0]),
                ModuleKey::SGraded(3),
                &Weight::new(&[0])
            )
            .is_err());
        assert!(ctx.graded_table(2).is_ok());
    }

    #[test]
    fn table_grows_on_demand() {
        let ctx = LieContext::new("A1".parse().unwrap());
        assert_eq!(ctx.graded_table(1).unwrap().max_degree(), 1);
        assert_eq!(ctx.graded_table(3).unwrap().max_degree(), 3);
        assert_eq!(ctx.graded_table(2).unwrap().max_degree(), 3);
    }
}
