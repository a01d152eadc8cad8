//! Named Γ configurations whose quivers have a known shape: generalized
//! Kronecker pairs, A-type lines, D̃ quivers, three-armed stars, and the
//! D_n interval `[(2ω₄,0),(0,4)]`.

use crate::error::{Error, Result};
use crate::poset::{self, GammaSet, LambdaPoint};
use crate::rootsys::{Family, RootSystem, Weight};

fn config(msg: impl Into<String>) -> Error {
    Error::InvalidConfiguration(msg.into())
}

fn check_steps(grades: &[u32], what: &str) -> Result<()> {
    if grades.windows(2).any(|w| w[0].abs_diff(w[1]) != 1) {
        return Err(config(format!(
            "consecutive {what} grades must differ by one: {grades:?}"
        )));
    }
    Ok(())
}

/// The index `i_•` (from 1) with θ − α_i a positive root; for type A_n
/// with n > 1 the two choices are 1 and n and this returns 1.
pub fn i_bullet(rs: &RootSystem) -> Result<usize> {
    rs.theta_neighbours()
        .first()
        .copied()
        .ok_or_else(|| config("sl₂ has no θ-neighbour"))
}

/// `k_λ`, the number of strictly positive labels.
pub fn k_lambda(lambda: &Weight) -> usize {
    lambda.support_size()
}

/// `{(λ, r), (λ, r+1)}`.
pub fn kronecker(rs: &RootSystem, lambda: &Weight, r: u32) -> Result<GammaSet> {
    rs.check_dominant(lambda)?;
    GammaSet::new(
        rs.lie_type(),
        [
            LambdaPoint::new(*lambda, r),
            LambdaPoint::new(*lambda, r + 1),
        ],
    )
}

/// `{(λ + jα, r_j) : 0 ≤ j ≤ ℓ}` with `grades = [r_0, …, r_ℓ]`.
pub fn a_line(
    rs: &RootSystem,
    lambda: &Weight,
    alpha: &Weight,
    grades: &[u32],
) -> Result<GammaSet> {
    rs.check_dominant(lambda)?;
    rs.check_weight(alpha)?;
    check_steps(grades, "line")?;
    let pts = grades
        .iter()
        .enumerate()
        .map(|(j, &r)| LambdaPoint::new(*lambda + j as i32 * *alpha, r));
    GammaSet::new(rs.lie_type(), pts)
}

/// `θ − α_{i_•}`.
pub fn theta_minus_bullet(rs: &RootSystem) -> Result<Weight> {
    Ok(rs.theta() - rs.simple_root(i_bullet(rs)?))
}

/// The five-point set with centre `(θ, r)` whose quiver is D̃₄.
pub fn dtilde4(rs: &RootSystem, r: u32) -> Result<GammaSet> {
    let lie = rs.lie_type();
    let th = rs.theta();
    let pt = LambdaPoint::new;
    let mut pts = vec![pt(th, r), pt(rs.zero(), r + 1), pt(2 * th, r + 1)];
    if lie.family() == Family::A {
        let n = lie.rank();
        if n < 2 {
            return Err(config("D̃₄ configuration needs a type other than sl₂"));
        }
        pts.push(pt(2 * th - rs.simple_root(1), r + 1));
        pts.push(pt(2 * th - rs.simple_root(n), r + 1));
    } else {
        pts.push(pt(2 * th - rs.simple_root(i_bullet(rs)?), r + 1));
        pts.push(pt(th, r + 1));
    }
    GammaSet::new(lie, pts)
}

/// The D̃_{ℓ+1} configuration: `grades = [r_2, …, r_{ℓ−1}]`, `ℓ ≥ 4`.
pub fn dtilde(rs: &RootSystem, lambda: &Weight, ell: usize, grades: &[u32]) -> Result<GammaSet> {
    rs.check_dominant(lambda)?;
    if ell < 4 || grades.len() != ell - 2 {
        return Err(config(format!(
            "need ℓ ≥ 4 and ℓ − 2 grades, got ℓ = {ell} with {}",
            grades.len()
        )));
    }
    check_steps(grades, "spine")?;
    let th = rs.theta();
    let alpha = theta_minus_bullet(rs)?;
    let (r_first, r_last) = (grades[0], grades[ell - 3]);
    if r_last == 0 {
        return Err(config("r_{ℓ−1} must be positive"));
    }
    let lam = *lambda;
    let mut pts: Vec<LambdaPoint> = grades
        .iter()
        .enumerate()
        .map(|(k, &r)| LambdaPoint::new(lam + (k as i32 + 2) * th, r))
        .collect();
    pts.push(LambdaPoint::new(lam + th, r_first + 1));
    pts.push(LambdaPoint::new(lam + th + alpha, r_first + 1));
    pts.push(LambdaPoint::new(lam + ell as i32 * th, r_last - 1));
    pts.push(LambdaPoint::new(
        lam + (ell as i32 - 1) * th + alpha,
        r_last - 1,
    ));
    GammaSet::new(rs.lie_type(), pts)
}

/// Grades of the three arms of a star: `arm1 = [r_{1,0}, …, r_{1,ℓ₁}]`,
/// `arm2 = [r_{2,0}, …, r_{2,ℓ₂}]`, `arm3 = [r_{3,0}, …, r_{3,ℓ₃−1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarGrades {
    pub arm1: Vec<u32>,
    pub arm2: Vec<u32>,
    pub arm3: Vec<u32>,
}

impl StarGrades {
    /// `r_{p,j} = base + j` on every arm.
    pub fn rising(ell: [usize; 3], base: u32) -> StarGrades {
        let arm = |len: usize| (0..len as u32).map(|j| base + j).collect();
        StarGrades {
            arm1: arm(ell[0] + 1),
            arm2: arm(ell[1] + 1),
            arm3: arm(ell[2]),
        }
    }
}

/// The three-armed star configuration centred at `(λ + ℓ₁θ, r_{1,0})`.
pub fn star(
    rs: &RootSystem,
    lambda: &Weight,
    ell: [usize; 3],
    grades: &StarGrades,
) -> Result<GammaSet> {
    rs.check_dominant(lambda)?;
    if rs.lie_type().family() == Family::C {
        return Err(config("star configurations exclude type C"));
    }
    if ell.contains(&0)
        || grades.arm1.len() != ell[0] + 1
        || grades.arm2.len() != ell[1] + 1
        || grades.arm3.len() != ell[2]
    {
        return Err(config(format!("arm grades do not match ℓ = {ell:?}")));
    }
    for arm in [&grades.arm1, &grades.arm2, &grades.arm3] {
        check_steps(arm, "arm")?;
    }
    if grades.arm2[0] != grades.arm1[0] || grades.arm3[0] != grades.arm1[0] {
        return Err(config("arms must share the centre grade"));
    }
    for (j3, &r3) in grades.arm3.iter().enumerate() {
        for (arm, limit) in [(&grades.arm1, ell[0]), (&grades.arm2, ell[1])] {
            for (j, &r) in arm.iter().enumerate().take(limit) {
                if r3.abs_diff(r) as usize > j3.abs_diff(j) {
                    return Err(config("arm grades violate |r_{3,j₃} − r_{p,j}| ≤ |j₃ − j|"));
                }
            }
        }
    }
    let th = rs.theta();
    let ai = rs.simple_root(i_bullet(rs)?);
    let l1 = ell[0] as i32;
    let lam = *lambda;
    let mut pts = Vec::new();
    for (j, &r) in grades.arm1.iter().enumerate() {
        pts.push(LambdaPoint::new(lam + (l1 - j as i32) * th, r));
    }
    for (j, &r) in grades.arm2.iter().enumerate() {
        pts.push(LambdaPoint::new(lam + (l1 + j as i32) * th, r));
    }
    for (j, &r) in grades.arm3.iter().enumerate() {
        let j = j as i32;
        pts.push(LambdaPoint::new(lam + (l1 + j) * th - j * ai, r));
    }
    GammaSet::new(rs.lie_type(), pts)
}

/// Endpoints `(2ω₄, 0)` and `(0, 4)` of the interval in type D_n, n ≥ 6.
pub fn kr_d6_endpoints(rs: &RootSystem) -> Result<(LambdaPoint, LambdaPoint)> {
    let lie = rs.lie_type();
    if lie.family() != Family::D || lie.rank() < 6 {
        return Err(config(format!(
            "the KR interval needs D_n with n ≥ 6, got {lie}"
        )));
    }
    let n = lie.rank();
    Ok((
        LambdaPoint::new(2 * Weight::fundamental(n, 4), 0),
        LambdaPoint::new(rs.zero(), 4),
    ))
}

pub fn kr_d6(rs: &RootSystem) -> Result<GammaSet> {
    let (low, high) = kr_d6_endpoints(rs)?;
    let pts = poset::interval(rs, &low, &high)?;
    GammaSet::new(rs.lie_type(), pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn bullet_indices() {
        assert_eq!(i_bullet(&rs("D4")).unwrap(), 2);
        assert_eq!(i_bullet(&rs("A3")).unwrap(), 1);
        assert!(i_bullet(&rs("A1")).is_err());
        assert_eq!(
            theta_minus_bullet(&rs("D4")).unwrap(),
            Weight::new(&[1, -1, 1, 1])
        );
    }

    #[test]
    fn dtilde4_points() {
        let d4 = rs("D4");
        let g = dtilde4(&d4, 0).unwrap();
        let th = d4.theta();
        let expect = [
            LambdaPoint::new(th, 0),
            LambdaPoint::new(d4.zero(), 1),
            LambdaPoint::new(2 * th, 1),
            LambdaPoint::new(Weight::new(&[1, 0, 1, 1]), 1),
            LambdaPoint::new(th, 1),
        ];
        assert_eq!(g.len(), 5);
        assert!(expect.iter().all(|p| g.contains(p)));
        let a3 = dtilde4(&rs("A3"), 2).unwrap();
        assert!(a3.contains(&LambdaPoint::new(Weight::new(&[0, 1, 2]), 3)));
    }

    #[test]
    fn rejected_configurations() {
        let d4 = rs("D4");
        let w2 = Weight::fundamental(4, 2);
        let alpha = theta_minus_bullet(&d4).unwrap();
        assert!(a_line(&d4, &w2, &alpha, &[0, 2]).is_err());
        // ω₂ + 2(θ − α₂) has a negative label
        assert!(matches!(
            a_line(&d4, &w2, &alpha, &[0, 1, 2, 3]),
            Err(Error::NotDominant(_))
        ));
        assert!(dtilde(&d4, &d4.zero(), 3, &[1]).is_err());
        assert!(star(
            &rs("C3"),
            &Weight::zero(3),
            [1, 1, 1],
            &StarGrades::rising([1, 1, 1], 0)
        )
        .is_err());
        assert!(kr_d6(&rs("D5")).is_err());
    }

    #[test]
    fn kr_interval_has_seven_points() {
        assert_eq!(kr_d6(&rs("D6")).unwrap().len(), 7);
    }
}
