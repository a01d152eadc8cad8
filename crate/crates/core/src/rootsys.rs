//! Cartan data for the simple types A–G.
//!
//! Weights are always written in Dynkin labels (the fundamental-weight basis,
//! Bourbaki numbering). Roots are generated in simple-root coordinates by
//! closing the simple roots under the simple reflections and converted to
//! weights through the Cartan matrix, `A[i][j] = α_j(h_i)`.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use rustc_hash::FxHashSet;

use crate::error::{Error, Result};

/// Largest supported rank (E8).
pub const MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple Lie algebra type such as `D6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok && rank <= MAX_RANK {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<LieType> {
        let s = s.trim();
        let bad = || Error::Parse {
            what: "Lie type",
            input: s.to_string(),
        };
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        LieType::new(family, rank)
    }
}

/// An integral weight in Dynkin labels. Also used for roots once converted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    len: u8,
    labels: [i32; MAX_RANK],
}

impl Weight {
    /// # Panics
    /// If `labels` is longer than [`MAX_RANK`].
    pub fn new(labels: &[i32]) -> Weight {
        assert!(labels.len() <= MAX_RANK, "rank {} too large", labels.len());
        let mut w = Weight {
            len: labels.len() as u8,
            labels: [0; MAX_RANK],
        };
        w.labels[..labels.len()].copy_from_slice(labels);
        w
    }

    pub fn zero(rank: usize) -> Weight {
        Weight::new(&vec![0; rank])
    }

    /// The fundamental weight ω_i, with `i` counted from 1.
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        assert!((1..=rank).contains(&i));
        let mut w = Weight::zero(rank);
        w.labels[i - 1] = 1;
        w
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels[..self.len as usize]
    }

    pub fn rank(&self) -> usize {
        self.len as usize
    }

    pub fn is_dominant(&self) -> bool {
        self.labels().iter().all(|&l| l >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.labels().iter().all(|&l| l == 0)
    }

    /// Number of strictly positive labels.
    pub fn support_size(&self) -> usize {
        self.labels().iter().filter(|&&l| l > 0).count()
    }

    /// Parses a label vector and checks its length against `rank`.
    pub fn parse_with_rank(s: &str, rank: usize) -> Result<Weight> {
        let w: Weight = s.parse()?;
        if w.rank() != rank {
            return Err(Error::RankMismatch {
                weight: s.to_string(),
                expected: rank,
                found: w.rank(),
            });
        }
        Ok(w)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.labels().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated Dynkin labels, e.g. `"0,0,0,2,0,0"`.
    fn from_str(s: &str) -> Result<Weight> {
        let bad = || Error::Parse {
            what: "weight",
            input: s.to_string(),
        };
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        if body.trim().is_empty() {
            return Err(bad());
        }
        let labels = body
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if labels.len() > MAX_RANK {
            return Err(bad());
        }
        Ok(Weight::new(&labels))
    }
}

impl Index<usize> for Weight {
    type Output = i32;

    fn index(&self, i: usize) -> &i32 {
        &self.labels()[i]
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(mut self, rhs: Weight) -> Weight {
        self += rhs;
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        debug_assert_eq!(self.len, rhs.len);
        for i in 0..self.len as usize {
            self.labels[i] += rhs.labels[i];
        }
    }
}

impl Sub for Weight {
    type Output = Weight;

    fn sub(mut self, rhs: Weight) -> Weight {
        self -= rhs;
        self
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        debug_assert_eq!(self.len, rhs.len);
        for i in 0..self.len as usize {
            self.labels[i] -= rhs.labels[i];
        }
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(mut self) -> Weight {
        for l in &mut self.labels {
            *l = -*l;
        }
        self
    }
}

impl Mul<Weight> for i32 {
    type Output = Weight;

    fn mul(self, mut rhs: Weight) -> Weight {
        for l in &mut rhs.labels {
            *l *= self;
        }
        rhs
    }
}

/// A root-lattice element in simple-root coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec {
    len: u8,
    coeffs: [i32; MAX_RANK],
}

impl RootVec {
    pub fn new(coeffs: &[i32]) -> RootVec {
        assert!(coeffs.len() <= MAX_RANK);
        let mut r = RootVec {
            len: coeffs.len() as u8,
            coeffs: [0; MAX_RANK],
        };
        r.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        r
    }

    /// The simple root α_i, `i` counted from 1.
    pub fn simple(rank: usize, i: usize) -> RootVec {
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        RootVec::new(&c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs[..self.len as usize]
    }

    pub fn height(&self) -> i32 {
        self.coeffs().iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs().iter().all(|&c| c >= 0) && self.coeffs().iter().any(|&c| c > 0)
    }
}

impl fmt::Debug for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α{:?}", self.coeffs())
    }
}

/// Result of folding a weight into the dominant chamber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominantRep {
    pub weight: Weight,
    /// Determinant of the reflecting word, `(-1)^steps`.
    pub sign: i32,
    pub steps: usize,
}

/// All Cartan data of one simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lie: LieType,
    cartan: Vec<Vec<i32>>,
    /// `(α_i, α_i) / 2`, with long roots normalized to 1.
    half_norms: Vec<Ratio<i64>>,
    /// α_i in weight coordinates (the columns of the Cartan matrix).
    simple_weights: Vec<Weight>,
    positive_roots: Vec<RootVec>,
    positive_weights: Vec<Weight>,
    /// For each positive root, `6 (ω_j, α)` for every j.
    root_pairings: Vec<[i64; MAX_RANK]>,
    highest_root: RootVec,
    theta: Weight,
    rho: Weight,
    form: Vec<Vec<Ratio<i64>>>,
    form_scaled: Vec<Vec<i64>>,
    form_den: i64,
    inverse_cartan: Vec<Vec<Ratio<i64>>>,
    /// |W_J| for every subset J of simple reflections, indexed by bitmask.
    parabolic_orders: Vec<u64>,
    /// R ∪ {0} in weight coordinates, zero first.
    steps: Vec<Weight>,
}

fn dynkin_data(t: LieType) -> (Vec<(usize, usize)>, Vec<Ratio<i64>>) {
    let n = t.rank();
    let one = Ratio::from_integer(1);
    let half = Ratio::new(1, 2);
    let chain: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    match t.family() {
        Family::A => (chain, vec![one; n]),
        Family::B => {
            let mut d = vec![one; n];
            d[n - 1] = half;
            (chain, d)
        }
        Family::C => {
            let mut d = vec![half; n];
            d[n - 1] = one;
            (chain, d)
        }
        Family::D => {
            let mut edges: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            edges.pop();
            edges.push((n - 3, n - 2));
            edges.push((n - 3, n - 1));
            (edges, vec![one; n])
        }
        Family::E => {
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..n - 1).map(|i| (i, i + 1)));
            (edges, vec![one; n])
        }
        Family::F => (chain, vec![one, one, half, half]),
        Family::G => (chain, vec![Ratio::new(1, 3), one]),
    }
}

fn invert(m: &[Vec<i32>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> =
                row.iter().map(|&x| Ratio::from_integer(x as i64)).collect();
            r.extend((0..n).map(|j| Ratio::from_integer((i == j) as i64)));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Ratio::from_integer(0))
            .expect("Cartan matrix is nonsingular");
        a.swap(col, pivot);
        let p = a[col][col];
        for x in &mut a[col] {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Ratio::from_integer(0) {
                    let pivot = a[col].clone();
                    for (x, &v) in a[r].iter_mut().zip(&pivot) {
                        *x -= f * v;
                    }
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl RootSystem {
    pub fn new(lie: LieType) -> RootSystem {
        let n = lie.rank();
        let (edges, half_norms) = dynkin_data(lie);

        // (α_i, α_j): 2 d_i on the diagonal, -max(d_i, d_j) on edges.
        let mut sym = vec![vec![Ratio::from_integer(0i64); n]; n];
        for i in 0..n {
            sym[i][i] = half_norms[i] * 2;
        }
        for &(i, j) in &edges {
            let v = -std::cmp::max(half_norms[i], half_norms[j]);
            sym[i][j] = v;
            sym[j][i] = v;
        }
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = sym[i][j] * 2 / sym[i][i];
                        assert!(a.is_integer());
                        *a.numer() as i32
                    })
                    .collect()
            })
            .collect();
        let simple_weights: Vec<Weight> = (0..n)
            .map(|j| Weight::new(&(0..n).map(|i| cartan[i][j]).collect::<Vec<_>>()))
            .collect();

        let to_weight = |r: &RootVec| -> Weight {
            let mut w = Weight::zero(n);
            for (j, &c) in r.coeffs().iter().enumerate() {
                w += c * simple_weights[j];
            }
            w
        };

        let mut seen: FxHashSet<RootVec> = FxHashSet::default();
        let mut queue: VecDeque<RootVec> = VecDeque::new();
        for i in 1..=n {
            let r = RootVec::simple(n, i);
            seen.insert(r);
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            let w = to_weight(&r);
            for i in 0..n {
                let mut c = r.coeffs().to_vec();
                c[i] -= w[i];
                let s = RootVec::new(&c);
                if s.is_positive() && seen.insert(s) {
                    queue.push_back(s);
                }
            }
        }
        let mut positive_roots: Vec<RootVec> = seen.into_iter().collect();
        positive_roots.sort_by_key(|r| (r.height(), r.coeffs().to_vec()));
        let positive_weights: Vec<Weight> = positive_roots.iter().map(to_weight).collect();

        let six = |d: Ratio<i64>| -> i64 {
            let x = d * 6;
            assert!(x.is_integer());
            *x.numer()
        };
        let root_pairings: Vec<[i64; MAX_RANK]> = positive_roots
            .iter()
            .map(|r| {
                let mut p = [0i64; MAX_RANK];
                for j in 0..n {
                    p[j] = r.coeffs()[j] as i64 * six(half_norms[j]);
                }
                p
            })
            .collect();

        let highest_root = *positive_roots.last().expect("nonempty root system");
        let theta = to_weight(&highest_root);
        let rho = Weight::new(&vec![1; n]);

        let inverse_cartan = invert(&cartan);
        let form: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| half_norms[i] * inverse_cartan[i][j])
                    .collect()
            })
            .collect();
        let form_den = form
            .iter()
            .flatten()
            .fold(1i64, |acc, x| acc.lcm(x.denom()));
        let form_scaled = form
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| *(x * form_den).numer())
                    .collect::<Vec<_>>()
            })
            .collect();

        let parabolic_orders = (0..1usize << n)
            .map(|mask| {
                let mut order = Ratio::from_integer(1i128);
                for r in &positive_roots {
                    let inside = r
                        .coeffs()
                        .iter()
                        .enumerate()
                        .all(|(j, &c)| c == 0 || mask & (1 << j) != 0);
                    if inside {
                        let h = r.height() as i128;
                        order *= Ratio::new(h + 1, h);
                    }
                }
                assert!(order.is_integer());
                *order.numer() as u64
            })
            .collect();

        let mut steps = vec![Weight::zero(n)];
        steps.extend(positive_weights.iter().copied());
        steps.extend(positive_weights.iter().map(|&w| -w));

        RootSystem {
            lie,
            cartan,
            half_norms,
            simple_weights,
            positive_roots,
            positive_weights,
            root_pairings,
            highest_root,
            theta,
            rho,
            form,
            form_scaled,
            form_den,
            inverse_cartan,
            parabolic_orders,
            steps,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie
    }

    pub fn rank(&self) -> usize {
        self.lie.rank()
    }

    /// `A[i][j] = α_j(h_i)`.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Positive roots, ordered by height and then lexicographically.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive_roots
    }

    /// Positive roots in weight coordinates, same order as [`Self::positive_roots`].
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_weights
    }

    /// The simple root α_i (from 1) in weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        self.simple_weights[i - 1]
    }

    pub fn highest_root(&self) -> RootVec {
        self.highest_root
    }

    /// θ in weight coordinates.
    pub fn theta(&self) -> Weight {
        self.theta
    }

    pub fn rho(&self) -> Weight {
        self.rho
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank())
    }

    /// R ∪ {0} in weight coordinates.
    pub fn roots_and_zero(&self) -> &[Weight] {
        &self.steps
    }

    pub fn weyl_order(&self) -> u64 {
        *self.parabolic_orders.last().unwrap()
    }

    /// `(α_i, α_i)/2` with long roots at 1.
    pub fn half_norm(&self, i: usize) -> Ratio<i64> {
        self.half_norms[i - 1]
    }

    /// The invariant form on weights in the fundamental-weight basis,
    /// normalized so that `(θ, θ) = 2`.
    pub fn form_matrix(&self) -> &[Vec<Ratio<i64>>] {
        &self.form
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Ratio<i64> {
        Ratio::new(self.inner_scaled(a, b), self.form_den)
    }

    /// `form_den · (a, b)`, always an integer.
    pub(crate) fn inner_scaled(&self, a: &Weight, b: &Weight) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            let row = &self.form_scaled[i];
            let mut t = 0i64;
            for j in 0..n {
                t += row[j] * b[j] as i64;
            }
            s += a[i] as i64 * t;
        }
        s
    }

    pub(crate) fn form_den(&self) -> i64 {
        self.form_den
    }

    /// `6 (λ, α)` for the `k`-th positive root.
    pub(crate) fn root_pairing6(&self, k: usize, w: &Weight) -> i64 {
        let p = &self.root_pairings[k];
        (0..self.rank()).map(|j| p[j] * w[j] as i64).sum()
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                weight: w.to_string(),
                expected: self.rank(),
                found: w.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(*w));
        }
        Ok(())
    }

    pub fn root_to_weight(&self, r: &RootVec) -> Weight {
        let mut w = self.zero();
        for (j, &c) in r.coeffs().iter().enumerate() {
            w += c * self.simple_weights[j];
        }
        w
    }

    /// Simple-root coordinates of `w`, if `w` lies in the root lattice.
    pub fn weight_to_root(&self, w: &Weight) -> Option<RootVec> {
        let n = self.rank();
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let x: Ratio<i64> = (0..n)
                .map(|j| self.inverse_cartan[i][j] * w[j] as i64)
                .sum();
            if !x.is_integer() {
                return None;
            }
            c.push(*x.numer() as i32);
        }
        Some(RootVec::new(&c))
    }

    /// Applies the simple reflection s_i (`i` from 0) in place.
    #[inline]
    pub fn reflect(&self, i: usize, w: &mut Weight) {
        let c = w.labels[i];
        if c != 0 {
            let a = &self.simple_weights[i];
            for j in 0..w.len as usize {
                w.labels[j] -= c * a.labels[j];
            }
        }
    }

    /// Folds `w` into the dominant chamber in place; returns `(sign, steps)`.
    #[inline]
    pub(crate) fn fold(&self, w: &mut Weight) -> (i32, usize) {
        let n = w.len as usize;
        let mut steps = 0;
        while let Some(i) = (0..n).find(|&i| w.labels[i] < 0) {
            self.reflect(i, w);
            steps += 1;
        }
        (if steps % 2 == 0 { 1 } else { -1 }, steps)
    }

    /// The unique dominant weight in the W-orbit of `w`, the sign of the
    /// reflecting word and its length.
    pub fn dominant_representative(&self, w: &Weight) -> DominantRep {
        let mut d = *w;
        let (sign, steps) = self.fold(&mut d);
        DominantRep {
            weight: d,
            sign,
            steps,
        }
    }

    /// Size of the W-orbit of a dominant weight.
    pub fn orbit_size(&self, w: &Weight) -> u64 {
        debug_assert!(w.is_dominant());
        let mask = (0..self.rank())
            .filter(|&i| w[i] == 0)
            .fold(0usize, |m, i| m | (1 << i));
        self.weyl_order() / self.parabolic_orders[mask]
    }

    /// Calls `f` once on every element of the W-orbit of the dominant `w`.
    ///
    /// Each non-dominant orbit element is reached from its unique parent
    /// `s_j μ`, where `j` is the first negative label of `μ`, so no
    /// duplicate bookkeeping is needed.
    pub fn for_each_in_orbit(&self, w: &Weight, mut f: impl FnMut(&Weight)) {
        debug_assert!(w.is_dominant());
        let n = self.rank();
        let mut stack = vec![*w];
        while let Some(mu) = stack.pop() {
            f(&mu);
            for i in 0..n {
                if mu[i] > 0 {
                    let mut nu = mu;
                    self.reflect(i, &mut nu);
                    if (0..i).all(|j| nu[j] >= 0) {
                        stack.push(nu);
                    }
                }
            }
        }
    }

    pub fn weyl_orbit(&self, w: &Weight) -> Result<Vec<Weight>> {
        self.check_dominant(w)?;
        let mut out = Vec::with_capacity(self.orbit_size(w) as usize);
        self.for_each_in_orbit(w, |x| out.push(*x));
        Ok(out)
    }

    /// `-w₀λ`, the highest weight of the dual of V(λ).
    pub fn dual_weight(&self, w: &Weight) -> Weight {
        self.dominant_representative(&-*w).weight
    }

    /// Indices `i` (from 1) with θ − α_i a positive root.
    pub fn theta_neighbours(&self) -> Vec<usize> {
        let theta = self.highest_root.coeffs().to_vec();
        (0..self.rank())
            .filter(|&i| {
                let mut c = theta.clone();
                c[i] -= 1;
                self.positive_roots
                    .binary_search_by_key(&(c.iter().sum::<i32>(), c.clone()), |r| {
                        (r.height(), r.coeffs().to_vec())
                    })
                    .is_ok()
            })
            .map(|i| i + 1)
            .collect()
    }
}
