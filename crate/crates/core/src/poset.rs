//! The poset Λ = P⁺ × Z₊: (μ, r+1) covers (λ, r) when μ − λ ∈ R ∪ {0}.
//!
//! Every cover raises the grade by exactly one, so `p ≼ q` is a reachability
//! question with a known number of steps and is answered by layered sweeps
//! over dominant weights.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::rootsys::{LieType, RootSystem, Weight};

/// A point `(λ, r)` of Λ, indexing the simple module V(λ, r).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LambdaPoint {
    pub weight: Weight,
    pub grade: u32,
}

impl LambdaPoint {
    pub fn new(weight: Weight, grade: u32) -> LambdaPoint {
        LambdaPoint { weight, grade }
    }
}

/// Grade descending, then labels ascending.
impl Ord for LambdaPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .grade
            .cmp(&self.grade)
            .then_with(|| self.weight.cmp(&other.weight))
    }
}

impl PartialOrd for LambdaPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LambdaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.weight, self.grade)
    }
}

impl fmt::Debug for LambdaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite subset Γ ⊂ Λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSet {
    lie: LieType,
    points: BTreeSet<LambdaPoint>,
}

impl GammaSet {
    pub fn new(lie: LieType, points: impl IntoIterator<Item = LambdaPoint>) -> Result<GammaSet> {
        let points: BTreeSet<LambdaPoint> = points.into_iter().collect();
        for p in &points {
            if p.weight.rank() != lie.rank() {
                return Err(Error::RankMismatch {
                    weight: p.weight.to_string(),
                    expected: lie.rank(),
                    found: p.weight.rank(),
                });
            }
            if !p.weight.is_dominant() {
                return Err(Error::NotDominant(p.weight));
            }
        }
        Ok(GammaSet { lie, points })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie
    }

    pub fn points(&self) -> &BTreeSet<LambdaPoint> {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = &LambdaPoint> {
        self.points.iter()
    }

    pub fn contains(&self, p: &LambdaPoint) -> bool {
        self.points.contains(p)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max_grade(&self) -> Option<u32> {
        self.points.iter().map(|p| p.grade).max()
    }
}

fn check_point(rs: &RootSystem, p: &LambdaPoint) -> Result<()> {
    rs.check_dominant(&p.weight)
}

fn neighbours(rs: &RootSystem, w: Weight) -> impl Iterator<Item = Weight> + '_ {
    rs.roots_and_zero()
        .iter()
        .map(move |b| w + *b)
        .filter(Weight::is_dominant)
}

/// Points covering `p`: `(λ+β, r+1)` with β ∈ R ∪ {0} and λ+β dominant.
pub fn covers(rs: &RootSystem, p: &LambdaPoint) -> Vec<LambdaPoint> {
    let out: BTreeSet<LambdaPoint> = neighbours(rs, p.weight)
        .map(|w| LambdaPoint::new(w, p.grade + 1))
        .collect();
    out.into_iter().collect()
}

/// Points covered by `p`; empty at grade 0.
pub fn cocovers(rs: &RootSystem, p: &LambdaPoint) -> Vec<LambdaPoint> {
    if p.grade == 0 {
        return Vec::new();
    }
    // R ∪ {0} is symmetric, so λ − β ranges over the same set as λ + β.
    let out: BTreeSet<LambdaPoint> = neighbours(rs, p.weight)
        .map(|w| LambdaPoint::new(w, p.grade - 1))
        .collect();
    out.into_iter().collect()
}

/// `layers[t]` = dominant weights reachable from `start` in exactly `t` steps.
fn layers(rs: &RootSystem, start: &Weight, steps: u32) -> Vec<FxHashSet<Weight>> {
    let mut out = Vec::with_capacity(steps as usize + 1);
    let mut cur: FxHashSet<Weight> = FxHashSet::default();
    cur.insert(*start);
    for _ in 0..steps {
        let next: FxHashSet<Weight> = cur.iter().flat_map(|w| neighbours(rs, *w)).collect();
        out.push(std::mem::replace(&mut cur, next));
    }
    out.push(cur);
    out
}

/// `p ≼ q`.
pub fn leq(rs: &RootSystem, p: &LambdaPoint, q: &LambdaPoint) -> bool {
    if q.grade < p.grade || p.weight.rank() != q.weight.rank() {
        return false;
    }
    let t = q.grade - p.grade;
    let up = t / 2;
    let forward = layers(rs, &p.weight, up);
    let backward = layers(rs, &q.weight, t - up);
    let (a, b) = (&forward[up as usize], &backward[(t - up) as usize]);
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small.iter().any(|w| large.contains(w))
}

/// The interval `[p, q] = {x : p ≼ x ≼ q}`; empty unless `p ≼ q`.
pub fn interval(
    rs: &RootSystem,
    p: &LambdaPoint,
    q: &LambdaPoint,
) -> Result<BTreeSet<LambdaPoint>> {
    check_point(rs, p)?;
    check_point(rs, q)?;
    let mut out = BTreeSet::new();
    if q.grade < p.grade {
        return Ok(out);
    }
    let t = q.grade - p.grade;
    let forward = layers(rs, &p.weight, t);
    let backward = layers(rs, &q.weight, t);
    let mut grades = Vec::with_capacity(t as usize + 1);
    for i in 0..=t as usize {
        let level: Vec<Weight> = forward[i]
            .iter()
            .filter(|w| backward[t as usize - i].contains(w))
            .copied()
            .collect();
        if level.is_empty() {
            return Ok(BTreeSet::new());
        }
        grades.push(level);
    }
    for (i, level) in grades.into_iter().enumerate() {
        out.extend(
            level
                .into_iter()
                .map(|w| LambdaPoint::new(w, p.grade + i as u32)),
        );
    }
    Ok(out)
}

/// A comparable pair of Γ whose interval leaves Γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub low: LambdaPoint,
    pub high: LambdaPoint,
    pub missing: LambdaPoint,
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Error {
        Error::NotIntervalClosed {
            low: v.low,
            high: v.high,
            missing: v.missing,
        }
    }
}

/// First witness that Γ is not interval closed, scanning pairs in point order.
pub fn closure_violation(rs: &RootSystem, gamma: &GammaSet) -> Option<Violation> {
    let pts: Vec<&LambdaPoint> = gamma.iter().collect();
    for &high in &pts {
        for &low in &pts {
            if low.grade + 1 >= high.grade || !leq(rs, low, high) {
                continue;
            }
            let iv = interval(rs, low, high).expect("points of Γ are dominant");
            if let Some(missing) = iv.iter().find(|x| !gamma.contains(x)) {
                return Some(Violation {
                    low: *low,
                    high: *high,
                    missing: *missing,
                });
            }
        }
    }
    None
}

pub fn is_interval_closed(rs: &RootSystem, gamma: &GammaSet) -> bool {
    closure_violation(rs, gamma).is_none()
}

/// The smallest interval-closed set containing `points`: the union of
/// `[a, b]` over comparable pairs.
pub fn interval_closure(rs: &RootSystem, points: &[LambdaPoint]) -> Result<GammaSet> {
    let mut out: BTreeSet<LambdaPoint> = points.iter().copied().collect();
    for a in points {
        for b in points {
            if a != b && leq(rs, a, b) {
                out.extend(interval(rs, a, b)?);
            }
        }
    }
    GammaSet::new(rs.lie_type(), out)
}

/// Γ^{#r} = {(−w₀μ, r − s) : (μ, s) ∈ Γ}.
pub fn sharp_dual(rs: &RootSystem, gamma: &GammaSet, r: u32) -> Result<GammaSet> {
    let mut out = Vec::with_capacity(gamma.len());
    for p in gamma.iter() {
        if p.grade > r {
            return Err(Error::GradeExceeds {
                point: *p,
                bound: r,
            });
        }
        out.push(sharp_point(rs, p, r));
    }
    GammaSet::new(gamma.lie_type(), out)
}

pub fn sharp_point(rs: &RootSystem, p: &LambdaPoint, r: u32) -> LambdaPoint {
    LambdaPoint::new(rs.dual_weight(&p.weight), r - p.grade)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn pt(l: &[i32], g: u32) -> LambdaPoint {
        LambdaPoint::new(Weight::new(l), g)
    }

    #[test]
    fn point_order() {
        let mut v = vec![
            pt(&[1, 0], 0),
            pt(&[0, 0], 1),
            pt(&[0, 1], 0),
            pt(&[2, 0], 1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                pt(&[0, 0], 1),
                pt(&[2, 0], 1),
                pt(&[0, 1], 0),
                pt(&[1, 0], 0)
            ]
        );
    }

    #[test]
    fn covers_examples() {
        let d6 = rs("D6");
        let zero = LambdaPoint::new(d6.zero(), 3);
        assert_eq!(
            covers(&d6, &zero),
            vec![
                LambdaPoint::new(d6.zero(), 4),
                LambdaPoint::new(d6.theta(), 4)
            ]
        );
        let a1 = rs("A1");
        assert_eq!(
            covers(&a1, &pt(&[2], 0)),
            vec![pt(&[0], 1), pt(&[2], 1), pt(&[4], 1)]
        );
        assert_eq!(
            cocovers(&d6, &LambdaPoint::new(d6.zero(), 4)),
            vec![
                LambdaPoint::new(d6.zero(), 3),
                LambdaPoint::new(d6.theta(), 3)
            ]
        );
        assert!(cocovers(&a1, &pt(&[2], 0)).is_empty());
        assert!(cocovers(&a1, &pt(&[2], 3)).contains(&pt(&[2], 2)));
    }

    #[test]
    fn leq_basics() {
        let a2 = rs("A2");
        let p = pt(&[1, 1], 2);
        assert!(leq(&a2, &p, &p));
        assert!(!leq(&a2, &pt(&[1, 1], 1), &pt(&[0, 0], 0)));
        assert!(leq(&a2, &pt(&[0, 0], 0), &pt(&[1, 1], 1)));
        // ω₁ is not in the root lattice, so never comparable with 0
        assert!(!leq(&a2, &pt(&[0, 0], 0), &pt(&[1, 0], 5)));
        assert!(!leq(&a2, &pt(&[0, 0], 0), &pt(&[3, 3], 1)));
    }

    #[test]
    fn sl2_interval() {
        let a1 = rs("A1");
        let iv: Vec<_> = interval(&a1, &pt(&[0], 0), &pt(&[0], 2))
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(iv, vec![pt(&[0], 2), pt(&[0], 1), pt(&[2], 1), pt(&[0], 0)]);
        let p = pt(&[2], 1);
        assert_eq!(
            interval(&a1, &p, &p)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![p]
        );
        assert!(interval(&a1, &pt(&[2], 1), &pt(&[0], 0))
            .unwrap()
            .is_empty());
        assert!(interval(&a1, &pt(&[-2], 0), &pt(&[0], 0)).is_err());
    }

    #[test]
    fn closure_witness() {
        let a1 = rs("A1");
        let lie = a1.lie_type();
        let g = GammaSet::new(lie, [pt(&[0], 0), pt(&[0], 2), pt(&[0], 1)]).unwrap();
        let v = closure_violation(&a1, &g).unwrap();
        assert_eq!(
            (v.low, v.high, v.missing),
            (pt(&[0], 0), pt(&[0], 2), pt(&[2], 1))
        );
        let closed = interval_closure(&a1, &[pt(&[0], 0), pt(&[0], 2)]).unwrap();
        assert_eq!(closed.len(), 4);
        assert!(is_interval_closed(&a1, &closed));
        assert!(is_interval_closed(
            &a1,
            &GammaSet::new(lie, [pt(&[4], 7)]).unwrap()
        ));
    }

    #[test]
    fn sharp_examples() {
        let a1 = rs("A1");
        let lie = a1.lie_type();
        let g = GammaSet::new(lie, [pt(&[2], 0), pt(&[0], 1)]).unwrap();
        let d = sharp_dual(&a1, &g, 1).unwrap();
        assert_eq!(d, GammaSet::new(lie, [pt(&[2], 1), pt(&[0], 0)]).unwrap());
        assert_eq!(sharp_dual(&a1, &d, 1).unwrap(), g);
        assert!(sharp_dual(&a1, &g, 0).is_err());
        let a2 = rs("A2");
        let g = GammaSet::new(a2.lie_type(), [pt(&[1, 0], 0)]).unwrap();
        assert_eq!(
            sharp_dual(&a2, &g, 2).unwrap(),
            GammaSet::new(a2.lie_type(), [pt(&[0, 1], 2)]).unwrap()
        );
    }

    #[test]
    fn gamma_rejects_bad_points() {
        let lie = "A2".parse().unwrap();
        assert!(GammaSet::new(lie, [pt(&[1, -1], 0)]).is_err());
        assert!(GammaSet::new(lie, [pt(&[1], 0)]).is_err());
    }
}
