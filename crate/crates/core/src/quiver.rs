//! Ext quivers Q(Γ) and the dimension data of the algebra A(Γ).
//!
//! Arrows run from `(λ, r)` to `(μ, r−1)`, with multiplicity
//! `dim Hom_g(V(μ), g ⊗ V(λ))`. Paths are counted with multiplicity; the
//! relation ideal in each idempotent slot has dimension
//! `#paths − dim Hom_g(V(μ), S^(r−s)(g) ⊗ V(λ))`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::context::{LieContext, ModuleKey};
use crate::error::{Error, Result};
use crate::poset::{self, GammaSet, LambdaPoint};
use crate::rootsys::LieType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverData {
    lie: LieType,
    vertices: Vec<LambdaPoint>,
    arrows: BTreeMap<(LambdaPoint, LambdaPoint), u64>,
    interval_closed: bool,
}

impl QuiverData {
    pub fn lie_type(&self) -> LieType {
        self.lie
    }

    /// Vertices in point order (grade descending).
    pub fn vertices(&self) -> &[LambdaPoint] {
        &self.vertices
    }

    /// Arrow multiplicities keyed by `(src, dst)`; only nonzero entries.
    pub fn arrows(&self) -> &BTreeMap<(LambdaPoint, LambdaPoint), u64> {
        &self.arrows
    }

    pub fn arrow(&self, src: &LambdaPoint, dst: &LambdaPoint) -> u64 {
        self.arrows.get(&(*src, *dst)).copied().unwrap_or(0)
    }

    /// Total number of arrows, counted with multiplicity.
    pub fn arrow_total(&self) -> u64 {
        self.arrows.values().sum()
    }

    pub fn is_interval_closed(&self) -> bool {
        self.interval_closed
    }

    pub fn contains(&self, p: &LambdaPoint) -> bool {
        self.vertices.binary_search(p).is_ok()
    }

    /// Paths from `src` to every vertex, counted with arrow multiplicities.
    pub fn paths_from(&self, src: &LambdaPoint) -> Result<BTreeMap<LambdaPoint, u64>> {
        if !self.contains(src) {
            return Err(Error::NotInGamma { point: *src });
        }
        let mut count: BTreeMap<LambdaPoint, u64> = BTreeMap::new();
        count.insert(*src, 1);
        // Vertex order is grade-descending and every arrow drops the grade,
        // so one pass in order is a topological sweep.
        for v in &self.vertices {
            let Some(&c) = count.get(v) else { continue };
            for ((_, dst), &m) in self.arrows.iter().filter(|((s, _), _)| s == v) {
                *count.entry(*dst).or_insert(0) += c * m;
            }
        }
        Ok(count)
    }
}

/// Number of arrows `src → dst` in the Ext quiver of any interval-closed Γ
/// containing both points.
pub fn arrow_count(ctx: &LieContext, src: &LambdaPoint, dst: &LambdaPoint) -> Result<u64> {
    if src.grade != dst.grade + 1 {
        return Ok(0);
    }
    ctx.hom_dim(&dst.weight, ModuleKey::TensorPower(1), &src.weight)
}

fn require_closed(ctx: &LieContext, gamma: &GammaSet) -> Result<()> {
    match poset::closure_violation(ctx.root_system(), gamma) {
        Some(v) => Err(v.into()),
        None => Ok(()),
    }
}

fn check_type(ctx: &LieContext, gamma: &GammaSet) -> Result<()> {
    if gamma.lie_type() != ctx.lie_type() {
        return Err(Error::TypeMismatch {
            left: gamma.lie_type(),
            right: ctx.lie_type(),
        });
    }
    Ok(())
}

/// The Ext quiver Q(Γ). Non-interval-closed Γ is rejected unless
/// `allow_non_closed` is set.
pub fn build_quiver(
    ctx: &LieContext,
    gamma: &GammaSet,
    allow_non_closed: bool,
) -> Result<QuiverData> {
    check_type(ctx, gamma)?;
    let violation = poset::closure_violation(ctx.root_system(), gamma);
    if let Some(v) = violation {
        if !allow_non_closed {
            return Err(v.into());
        }
    }
    let vertices: Vec<LambdaPoint> = gamma.iter().copied().collect();
    let pairs: Vec<(LambdaPoint, LambdaPoint)> = vertices
        .iter()
        .flat_map(|s| {
            vertices
                .iter()
                .filter(move |d| s.grade == d.grade + 1)
                .map(move |d| (*s, *d))
        })
        .collect();
    let counts = pairs
        .par_iter()
        .map(|(s, d)| arrow_count(ctx, s, d).map(|m| ((*s, *d), m)))
        .collect::<Result<Vec<_>>>()?;
    let arrows = counts.into_iter().filter(|(_, m)| *m > 0).collect();
    Ok(QuiverData {
        lie: gamma.lie_type(),
        vertices,
        arrows,
        interval_closed: violation.is_none(),
    })
}

/// Paths `src → dst` in `q` by dynamic programming over the DAG.
pub fn path_count_dp(q: &QuiverData, src: &LambdaPoint, dst: &LambdaPoint) -> Result<u64> {
    if !q.contains(dst) {
        return Err(Error::NotInGamma { point: *dst });
    }
    Ok(q.paths_from(src)?.get(dst).copied().unwrap_or(0))
}

/// Paths `(λ,r) → (μ,s)` as `dim Hom_g(V(μ), g^⊗(r−s) ⊗ V(λ))`.
pub fn path_count_formula(ctx: &LieContext, src: &LambdaPoint, dst: &LambdaPoint) -> Result<u64> {
    if src.grade < dst.grade {
        return Ok(0);
    }
    let k = (src.grade - dst.grade) as usize;
    ctx.hom_dim(&dst.weight, ModuleKey::TensorPower(k), &src.weight)
}

/// `dim Hom(P(λ,r), P(μ,s)) = dim Hom_g(V(λ), S^(r−s)(g) ⊗ V(μ))`.
pub fn hom_proj_dim(ctx: &LieContext, a: &LambdaPoint, b: &LambdaPoint) -> Result<u64> {
    if a.grade < b.grade {
        return Ok(0);
    }
    let k = (a.grade - b.grade) as usize;
    ctx.hom_dim(&a.weight, ModuleKey::SGraded(k), &b.weight)
}

/// Graded composition factors of the injective envelope of a simple,
/// restricted to Γ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectiveCharacterTable {
    pub socle: LambdaPoint,
    /// Nonzero multiplicities `[I(socle)_Γ : V(μ,s)]`.
    pub entries: BTreeMap<LambdaPoint, u64>,
}

impl InjectiveCharacterTable {
    pub fn get(&self, p: &LambdaPoint) -> u64 {
        self.entries.get(p).copied().unwrap_or(0)
    }
}

/// `[I(λ,r)_Γ : V(μ,s)] = dim Hom_g(V(μ), S^(r−s)(g) ⊗ V(λ))` for `(μ,s) ∈ Γ`.
pub fn injective_character(
    ctx: &LieContext,
    socle: &LambdaPoint,
    gamma: &GammaSet,
) -> Result<InjectiveCharacterTable> {
    check_type(ctx, gamma)?;
    if !gamma.contains(socle) {
        return Err(Error::NotInGamma { point: *socle });
    }
    let targets: Vec<&LambdaPoint> = gamma.iter().filter(|p| p.grade <= socle.grade).collect();
    let values = targets
        .par_iter()
        .map(|p| {
            let k = (socle.grade - p.grade) as usize;
            ctx.hom_dim(&p.weight, ModuleKey::SGraded(k), &socle.weight)
                .map(|m| (**p, m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InjectiveCharacterTable {
        socle: *socle,
        entries: values.into_iter().filter(|(_, m)| *m > 0).collect(),
    })
}

/// `dim 1_{μ,s} R(Γ) 1_{λ,r}` for `src = (λ,r)`, `dst = (μ,s)`.
pub fn relation_dim(ctx: &LieContext, src: &LambdaPoint, dst: &LambdaPoint) -> Result<u64> {
    Ok(relation_entry(ctx, src, dst)?.relations)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelationEntry {
    pub paths: u64,
    pub hom: u64,
    pub relations: u64,
}

pub fn relation_entry(
    ctx: &LieContext,
    src: &LambdaPoint,
    dst: &LambdaPoint,
) -> Result<RelationEntry> {
    if src.grade < dst.grade {
        return Ok(RelationEntry {
            paths: 0,
            hom: 0,
            relations: 0,
        });
    }
    let k = (src.grade - dst.grade) as usize;
    let paths = path_count_formula(ctx, src, dst)?;
    let hom = ctx.hom_dim(&dst.weight, ModuleKey::SGraded(k), &src.weight)?;
    if hom > paths {
        return Err(Error::NegativeMultiplicity {
            weight: dst.weight,
            value: paths as i64 - hom as i64,
            context: "relation_dim",
        });
    }
    Ok(RelationEntry {
        paths,
        hom,
        relations: paths - hom,
    })
}

/// Relation dimensions for every ordered pair `(src, dst)` of Γ with
/// `src.grade ≥ dst.grade`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTable {
    pub entries: BTreeMap<(LambdaPoint, LambdaPoint), RelationEntry>,
}

impl RelationTable {
    pub fn get(&self, src: &LambdaPoint, dst: &LambdaPoint) -> u64 {
        self.entries.get(&(*src, *dst)).map_or(0, |e| e.relations)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&(LambdaPoint, LambdaPoint), &RelationEntry)> {
        self.entries.iter().filter(|(_, e)| e.relations > 0)
    }

    pub fn is_hereditary(&self) -> bool {
        self.nonzero().next().is_none()
    }
}

pub fn relation_table(ctx: &LieContext, gamma: &GammaSet) -> Result<RelationTable> {
    check_type(ctx, gamma)?;
    require_closed(ctx, gamma)?;
    let pairs: Vec<(LambdaPoint, LambdaPoint)> = gamma
        .iter()
        .flat_map(|s| {
            gamma
                .iter()
                .filter(move |d| s.grade >= d.grade)
                .map(move |d| (*s, *d))
        })
        .collect();
    let entries = pairs
        .par_iter()
        .map(|(s, d)| relation_entry(ctx, s, d).map(|e| ((*s, *d), e)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(RelationTable { entries })
}

/// `Ok(None)` when A(Γ) is hereditary, otherwise the first pair (in point
/// order) with a nonzero relation space.
pub fn hereditary_witness(
    ctx: &LieContext,
    gamma: &GammaSet,
) -> Result<Option<(LambdaPoint, LambdaPoint, u64)>> {
    let table = relation_table(ctx, gamma)?;
    let witness = table
        .nonzero()
        .next()
        .map(|(&(s, d), e)| (s, d, e.relations));
    Ok(witness)
}

pub fn is_hereditary(ctx: &LieContext, gamma: &GammaSet) -> Result<bool> {
    Ok(hereditary_witness(ctx, gamma)?.is_none())
}

/// Whether Q(Γ^{#r}) is the opposite quiver of Q(Γ) under `(μ,s) ↦ (−w₀μ, r−s)`.
pub fn opposite_check(ctx: &LieContext, gamma: &GammaSet, r: u32) -> Result<bool> {
    check_type(ctx, gamma)?;
    require_closed(ctx, gamma)?;
    let rs = ctx.root_system();
    let dual = poset::sharp_dual(rs, gamma, r)?;
    let q = build_quiver(ctx, gamma, false)?;
    let qd = build_quiver(ctx, &dual, false)?;
    if q.arrows().len() != qd.arrows().len() {
        return Ok(false);
    }
    let sharp = |p: &LambdaPoint| poset::sharp_point(rs, p, r);
    Ok(q.arrows()
        .iter()
        .all(|((s, d), &m)| qd.arrow(&sharp(d), &sharp(s)) == m))
}

/// Path counts for every ordered pair, together with the character formula.
pub fn path_table(
    ctx: &LieContext,
    q: &QuiverData,
) -> Result<BTreeMap<(LambdaPoint, LambdaPoint), (u64, u64)>> {
    let mut out = BTreeMap::new();
    for s in q.vertices() {
        let dp = q.paths_from(s)?;
        for d in q.vertices().iter().filter(|d| s.grade >= d.grade) {
            let formula = path_count_formula(ctx, s, d)?;
            out.insert((*s, *d), (dp.get(d).copied().unwrap_or(0), formula));
        }
    }
    Ok(out)
}

/// Underlying-graph shape of a quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuiverShape {
    /// Vertices without arrows.
    Discrete(usize),
    /// Two vertices joined by `m` parallel arrows.
    Kronecker(u64),
    /// A path with `n` vertices, type A_n.
    Linear(usize),
    /// Affine D̃_n (n + 1 vertices).
    DTilde(usize),
    /// A tree with one branch vertex; arm lengths exclude the centre, sorted.
    Star(Vec<usize>),
    Other,
}

pub fn classify(q: &QuiverData) -> QuiverShape {
    let n = q.vertices().len();
    if q.arrows().is_empty() {
        return QuiverShape::Discrete(n);
    }
    if q.arrows().values().any(|&m| m > 1) {
        if n == 2 && q.arrows().len() == 1 {
            return QuiverShape::Kronecker(*q.arrows().values().next().unwrap());
        }
        return QuiverShape::Other;
    }
    let idx = |p: &LambdaPoint| q.vertices().binary_search(p).unwrap();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (s, d) in q.arrows().keys() {
        let (a, b) = (idx(s), idx(d));
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let edges: usize = adj.iter().map(BTreeSet::len).sum::<usize>() / 2;
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    if seen.iter().any(|s| !s) || edges + 1 != n {
        return QuiverShape::Other;
    }
    let deg: Vec<usize> = adj.iter().map(BTreeSet::len).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.as_slice() {
        [] => QuiverShape::Linear(n),
        [c] if deg[*c] == 4 && n == 5 => QuiverShape::DTilde(4),
        [c] if deg[*c] == 3 => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while deg[cur] == 2 {
                        let next = *adj[cur].iter().find(|&&u| u != prev).unwrap();
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            QuiverShape::Star(arms)
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 => {
            let leaves = |c: usize| adj[c].iter().filter(|&&u| deg[u] == 1).count();
            if leaves(*a) == 2 && leaves(*b) == 2 {
                QuiverShape::DTilde(n - 1)
            } else {
                QuiverShape::Other
            }
        }
        _ => QuiverShape::Other,
    }
}
