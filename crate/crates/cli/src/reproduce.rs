//! Fixed configurations checked against embedded expected values.

use std::collections::BTreeMap;
use std::fmt::{Display, Write};

use clap::ValueEnum;
use lieq_core::families::{self, k_lambda, StarGrades};
use lieq_core::poset::{self, GammaSet, LambdaPoint};
use lieq_core::quiver::{self, QuiverShape};
use lieq_core::{LieContext, RootSystem, Weight};
use serde::Deserialize;

use crate::commands::Output;
use crate::emit::shape_name;
use crate::error::{CliError, CliResult};
use crate::problem::{parse_point, PointSpec};

const KR_D6: &str = include_str!("../fixtures/kr_d6.json");
const APPENDIX_A1: &str = include_str!("../fixtures/appendix_a1.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Kronecker,
    Aline,
    Dtilde4,
    Dtilde,
    Star,
    KrD6,
    AppendixA1,
}

#[derive(Default)]
struct Report {
    lines: String,
    checks: usize,
    failures: usize,
}

impl Report {
    fn check(&mut self, what: impl Display, expected: impl Display, got: impl Display) {
        let (e, g) = (expected.to_string(), got.to_string());
        self.checks += 1;
        if e == g {
            writeln!(self.lines, "PASS {what}: {g}").unwrap();
        } else {
            self.failures += 1;
            writeln!(self.lines, "FAIL {what}: expected {e}, got {g}").unwrap();
        }
    }

    fn finish(mut self, target: &str) -> Output {
        writeln!(
            self.lines,
            "{target}: {} checks, {} mismatches",
            self.checks, self.failures
        )
        .unwrap();
        Output {
            stdout: self.lines,
            stderr: String::new(),
            mismatches: self.failures,
        }
    }
}

fn ctx(t: &str, max_degree: usize) -> LieContext {
    LieContext::with_max_degree(t.parse().expect("built-in type names parse"), max_degree)
}

/// Shape, largest arrow multiplicity and hereditary verdict of Q(Γ).
fn profile(c: &LieContext, g: &GammaSet) -> CliResult<(QuiverShape, u64, bool)> {
    let q = quiver::build_quiver(c, g, false)?;
    let top = q.arrows().values().copied().max().unwrap_or(0);
    Ok((quiver::classify(&q), top, quiver::is_hereditary(c, g)?))
}

fn check_family(
    r: &mut Report,
    label: &str,
    c: &LieContext,
    g: &GammaSet,
    shape: QuiverShape,
) -> CliResult<()> {
    let (got, top, hereditary) = profile(c, g)?;
    r.check(
        format_args!("{label} shape"),
        shape_name(&shape),
        shape_name(&got),
    );
    r.check(format_args!("{label} arrow multiplicities"), 1, top);
    r.check(format_args!("{label} hereditary"), true, hereditary);
    Ok(())
}

fn kronecker() -> CliResult<Output> {
    let mut r = Report::default();
    for t in ["A2", "A3", "D4"] {
        let c = ctx(t, 2);
        let rs = c.root_system();
        for bits in 1u32..(1 << rs.rank()) {
            let labels: Vec<i32> = (0..rs.rank()).map(|i| ((bits >> i) & 1) as i32).collect();
            let lam = Weight::new(&labels);
            for level in 0..2 {
                let g = families::kronecker(rs, &lam, level)?;
                let q = quiver::build_quiver(&c, &g, false)?;
                let arrows: Vec<u64> = q.arrows().values().copied().collect();
                r.check(
                    format_args!("{t} λ={lam} r={level} arrows"),
                    format!("{:?}", [k_lambda(&lam)]),
                    format!("{arrows:?}"),
                );
                let hereditary = quiver::is_hereditary(&c, &g)?;
                r.check(
                    format_args!("{t} λ={lam} r={level} hereditary"),
                    true,
                    hereditary,
                );
            }
        }
    }
    Ok(r.finish("kronecker"))
}

fn aline() -> CliResult<Output> {
    let mut r = Report::default();
    let c = ctx("D4", 3);
    let rs = c.root_system();
    let alpha = families::theta_minus_bullet(rs)?;
    let g = families::a_line(rs, &(3 * rs.theta()), &alpha, &[0, 1, 2, 3])?;
    check_family(
        &mut r,
        "D4 λ=3θ α=θ−α2 r=(0,1,2,3)",
        &c,
        &g,
        QuiverShape::Linear(4),
    )?;
    let c = ctx("B3", 3);
    let rs = c.root_system();
    for grades in [[0, 1, 2, 3], [1, 0, 1, 0]] {
        let g = families::a_line(rs, &Weight::fundamental(3, 2), &rs.theta(), &grades)?;
        check_family(
            &mut r,
            format!("B3 λ=ω2 α=θ r={grades:?}").as_str(),
            &c,
            &g,
            QuiverShape::Linear(4),
        )?;
    }
    Ok(r.finish("aline"))
}

fn dtilde4() -> CliResult<Output> {
    let mut r = Report::default();
    for t in ["A3", "D4", "B3", "E6"] {
        let c = ctx(t, 2);
        let rs = c.root_system();
        for level in 0..2 {
            let g = families::dtilde4(rs, level)?;
            check_family(
                &mut r,
                &format!("{t} r={level}"),
                &c,
                &g,
                QuiverShape::DTilde(4),
            )?;
            let q = quiver::build_quiver(&c, &g, false)?;
            let centre = LambdaPoint::new(rs.theta(), level);
            let into_centre = q.arrows().keys().filter(|(_, d)| *d == centre).count();
            r.check(
                format_args!("{t} r={level} arrows into (θ; {level})"),
                4,
                into_centre,
            );
        }
    }
    Ok(r.finish("dtilde4"))
}

fn dtilde() -> CliResult<Output> {
    let mut r = Report::default();
    let c = ctx("D4", 4);
    let rs = c.root_system();
    let zero = rs.zero();
    for (ell, grades) in [(4, vec![1, 2]), (4, vec![2, 3]), (5, vec![1, 2, 3])] {
        let g = families::dtilde(rs, &zero, ell, &grades)?;
        check_family(
            &mut r,
            &format!("D4 ℓ={ell} r={grades:?}"),
            &c,
            &g,
            QuiverShape::DTilde(ell + 1),
        )?;
    }
    Ok(r.finish("dtilde"))
}

fn star() -> CliResult<Output> {
    let mut r = Report::default();
    let c = ctx("D4", 4);
    let rs = c.root_system();
    for ell in [[2, 2, 3], [3, 2, 3], [2, 2, 2]] {
        let g = families::star(rs, &rs.zero(), ell, &StarGrades::rising(ell, 0))?;
        // the third arm carries one point fewer
        let mut arms = vec![ell[0], ell[1], ell[2] - 1];
        arms.sort();
        check_family(
            &mut r,
            &format!("D4 ℓ={ell:?}"),
            &c,
            &g,
            QuiverShape::Star(arms),
        )?;
    }
    Ok(r.finish("star"))
}

#[derive(Deserialize)]
struct KrFixture {
    lie: String,
    interval: (PointSpec, PointSpec),
    vertices: Vec<PointSpec>,
    arrows: Vec<(PointSpec, PointSpec, u64)>,
    relations: Vec<(PointSpec, PointSpec, u64)>,
}

#[derive(Deserialize)]
struct InjectiveFixture {
    socle: PointSpec,
    factors: Vec<(String, u32, u64)>,
}

#[derive(Deserialize)]
struct AppendixFixture {
    lie: String,
    interval: (PointSpec, PointSpec),
    injectives: Vec<InjectiveFixture>,
}

fn fixture<T: for<'a> Deserialize<'a>>(text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::Spec(format!("embedded fixture: {e}")))
}

fn fixture_gamma(
    lie: &str,
    interval: &(PointSpec, PointSpec),
) -> CliResult<(LieContext, GammaSet)> {
    let rs = RootSystem::new(lie.parse()?);
    let (low, high) = (
        parse_point(&rs, &interval.0)?,
        parse_point(&rs, &interval.1)?,
    );
    let c = LieContext::with_max_degree(rs.lie_type(), (high.grade - low.grade) as usize);
    let g = GammaSet::new(rs.lie_type(), poset::interval(&rs, &low, &high)?)?;
    Ok((c, g))
}

type PairMap = BTreeMap<(LambdaPoint, LambdaPoint), u64>;

fn pair_map(rs: &RootSystem, items: &[(PointSpec, PointSpec, u64)]) -> CliResult<PairMap> {
    items
        .iter()
        .map(|(a, b, m)| Ok(((parse_point(rs, a)?, parse_point(rs, b)?), *m)))
        .collect()
}

fn compare_maps(r: &mut Report, what: &str, want: &PairMap, got: &PairMap) {
    let keys: std::collections::BTreeSet<_> = want.keys().chain(got.keys()).collect();
    for (a, b) in keys {
        let e = want.get(&(*a, *b)).copied().unwrap_or(0);
        let g = got.get(&(*a, *b)).copied().unwrap_or(0);
        r.check(format_args!("{what} {a} -> {b}"), e, g);
    }
}

fn kr_d6() -> CliResult<Output> {
    let f: KrFixture = fixture(KR_D6)?;
    let (c, g) = fixture_gamma(&f.lie, &f.interval)?;
    let rs = c.root_system();
    let mut r = Report::default();
    let want_vertices = f
        .vertices
        .iter()
        .map(|p| parse_point(rs, p))
        .collect::<CliResult<std::collections::BTreeSet<_>>>()?;
    r.check("vertex count", want_vertices.len(), g.len());
    r.check(
        "vertex set",
        format!("{want_vertices:?}"),
        format!("{:?}", g.points()),
    );
    let q = quiver::build_quiver(&c, &g, false)?;
    let want_arrows = pair_map(rs, &f.arrows)?;
    r.check(
        "arrow count",
        want_arrows.values().sum::<u64>(),
        q.arrow_total(),
    );
    compare_maps(&mut r, "arrow", &want_arrows, q.arrows());
    let table = quiver::relation_table(&c, &g)?;
    let got: PairMap = table.nonzero().map(|(k, e)| (*k, e.relations)).collect();
    let want = pair_map(rs, &f.relations)?;
    r.check("nonzero relation entries", want.len(), got.len());
    compare_maps(&mut r, "relations", &want, &got);
    Ok(r.finish("kr-d6"))
}

fn appendix_a1() -> CliResult<Output> {
    let f: AppendixFixture = fixture(APPENDIX_A1)?;
    let (c, g) = fixture_gamma(&f.lie, &f.interval)?;
    let rs = c.root_system();
    let mut r = Report::default();
    r.check("socles", g.len(), f.injectives.len());
    for inj in &f.injectives {
        let socle = parse_point(rs, &inj.socle)?;
        let want: BTreeMap<LambdaPoint, u64> = inj
            .factors
            .iter()
            .map(|(w, s, m)| Ok((parse_point(rs, &(w.clone(), *s))?, *m)))
            .collect::<CliResult<_>>()?;
        let got = quiver::injective_character(&c, &socle, &g)?;
        let show = |m: &BTreeMap<LambdaPoint, u64>| {
            let parts: Vec<String> = m.iter().map(|(p, k)| format!("{k}·{p}")).collect();
            parts.join(" + ")
        };
        r.check(format_args!("I{socle}"), show(&want), show(&got.entries));
    }
    Ok(r.finish("appendix-a1"))
}

pub fn run(target: Target) -> CliResult<Output> {
    match target {
        Target::Kronecker => kronecker(),
        Target::Aline => aline(),
        Target::Dtilde4 => dtilde4(),
        Target::Dtilde => dtilde(),
        Target::Star => star(),
        Target::KrD6 => kr_d6(),
        Target::AppendixA1 => appendix_a1(),
    }
}
