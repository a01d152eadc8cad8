//! Exact character arithmetic for simple Lie algebras, the poset
//! Λ = P⁺ × Z₊ and the Ext quivers of the finite-dimensional algebras A(Γ)
//! attached to interval-closed Γ ⊂ Λ.
//!
//! Everything reduces to one primitive, `dim Hom_g(V(μ), X ⊗ V(λ))`, with X
//! the adjoint representation, a tensor power of it, or a graded piece
//! S^(k)(g) of the symmetric algebra of g[t]₊.

pub mod characters;
pub mod context;
pub mod error;
pub mod families;
pub mod oracle;
pub mod plethysm;
pub mod poset;
pub mod quiver;
pub mod rootsys;

pub use characters::{Character, Decomposition, SignedCharacter};
pub use context::{LieContext, ModuleKey};
pub use error::{Error, Result};
pub use plethysm::GradedAdjointTable;
pub use poset::{GammaSet, LambdaPoint, Violation};
pub use quiver::{InjectiveCharacterTable, QuiverData, QuiverShape, RelationEntry, RelationTable};
pub use rootsys::{Family, LieType, RootSystem, RootVec, Weight};
