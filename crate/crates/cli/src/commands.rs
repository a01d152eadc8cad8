use clap::{Subcommand, ValueEnum};
use lieq_core::characters::{self, weyl_dim};
use lieq_core::oracle::pbw_dimension;
use lieq_core::plethysm::sym_power;
use lieq_core::poset::{self, GammaSet, LambdaPoint};
use lieq_core::{quiver, Decomposition, LieContext, LieType, ModuleKey, RootSystem, Weight};
use serde_json::json;

use crate::emit::{self, point, Tsv};
use crate::error::{CliError, CliResult};
use crate::problem::{Format, GammaSpec, ProblemSpec};

/// What a command prints. `mismatches > 0` maps to the mismatch exit code.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub mismatches: usize,
}

impl From<String> for Output {
    fn from(stdout: String) -> Output {
        Output {
            stdout,
            ..Output::default()
        }
    }
}

/// Flags that override the spec's own options.
#[derive(Debug, Default, Clone, Copy)]
pub struct Overrides {
    pub format: Option<Format>,
    pub max_degree: Option<usize>,
    pub allow_non_closed: bool,
}

struct Prepared {
    ctx: LieContext,
    gamma: GammaSet,
    format: Option<Format>,
    allow_non_closed: bool,
}

fn prepare(spec: &ProblemSpec, ov: Overrides) -> CliResult<Prepared> {
    let lie = spec.lie.lie_type()?;
    let rs = RootSystem::new(lie);
    let gamma = spec.gamma(&rs)?;
    let span = match (gamma.iter().map(|p| p.grade).min(), gamma.max_grade()) {
        (Some(lo), Some(hi)) => (hi - lo) as usize,
        _ => 0,
    };
    let max_degree = ov
        .max_degree
        .or(spec.options.max_degree)
        .unwrap_or(span.max(1));
    Ok(Prepared {
        ctx: LieContext::with_max_degree(lie, max_degree),
        gamma,
        format: ov.format.or(spec.options.format),
        allow_non_closed: ov.allow_non_closed || spec.options.override_interval_closed,
    })
}

fn no_dot(format: Format, what: &str) -> CliResult<()> {
    if format == Format::Dot {
        return Err(CliError::Spec(format!("{what} has no DOT rendering")));
    }
    Ok(())
}

pub fn interval(spec: &ProblemSpec, ov: Overrides) -> CliResult<Output> {
    let p = prepare(spec, ov)?;
    let rs = p.ctx.root_system();
    // a point list is closed up to its interval closure
    let gamma = match spec.gamma {
        GammaSpec::Points(_) => {
            let pts: Vec<LambdaPoint> = p.gamma.iter().copied().collect();
            poset::interval_closure(rs, &pts)?
        }
        GammaSpec::Interval(..) => p.gamma,
    };
    let format = p.format.unwrap_or(Format::Tsv);
    no_dot(format, "an interval listing")?;
    Ok(match format {
        Format::Json => emit::pretty(&json!({
            "lie": rs.lie_type().to_string(),
            "points": gamma.iter().map(point).collect::<Vec<_>>(),
        })),
        _ => {
            let mut t = Tsv::new(&["weight", "grade"]);
            for x in gamma.iter() {
                t.row(&emit::cells(x));
            }
            t.finish()
        }
    }
    .into())
}

pub fn quiver(spec: &ProblemSpec, ov: Overrides) -> CliResult<Output> {
    let p = prepare(spec, ov)?;
    let q = quiver::build_quiver(&p.ctx, &p.gamma, p.allow_non_closed)?;
    let summary = emit::quiver_summary(&q);
    Ok(match p.format.unwrap_or(Format::Dot) {
        Format::Dot => Output {
            stdout: emit::dot(&q),
            stderr: serde_json::to_string(&summary).expect("JSON values serialize") + "\n",
            mismatches: 0,
        },
        Format::Json => emit::pretty(&summary).into(),
        Format::Tsv => {
            let mut t = Tsv::new(&[
                "src_weight",
                "src_grade",
                "dst_weight",
                "dst_grade",
                "multiplicity",
            ]);
            for ((s, d), &m) in q.arrows() {
                t.row(&emit::pair_cells(s, d, &[m]));
            }
            t.finish().into()
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Paths,
    Relations,
    InjChar,
    HomProj,
}

pub fn tables(spec: &ProblemSpec, which: Table, ov: Overrides) -> CliResult<Output> {
    let p = prepare(spec, ov)?;
    let format = p.format.unwrap_or(Format::Tsv);
    no_dot(format, "a table")?;
    let (ctx, gamma) = (&p.ctx, &p.gamma);
    let mut rows: emit::PairTable = Default::default();
    let mut verdict = None;
    let header: &[&str] =
        match which {
            Table::Paths => {
                let q = quiver::build_quiver(ctx, gamma, p.allow_non_closed)?;
                let known = quiver::path_table(ctx, &q)?;
                for a in gamma.iter() {
                    for b in gamma.iter() {
                        let (dp, formula) = known.get(&(*a, *b)).copied().unwrap_or((0, 0));
                        rows.insert((*a, *b), vec![dp, formula]);
                    }
                }
                &["dp", "formula"]
            }
            Table::Relations => {
                let table = quiver::relation_table(ctx, gamma)?;
                for a in gamma.iter() {
                    for b in gamma.iter() {
                        let e = table.entries.get(&(*a, *b)).copied().unwrap_or(
                            lieq_core::RelationEntry {
                                paths: 0,
                                hom: 0,
                                relations: 0,
                            },
                        );
                        rows.insert((*a, *b), vec![e.paths, e.hom, e.relations]);
                    }
                }
                verdict = Some(match table.nonzero().next() {
                    None => "hereditary: yes".to_string(),
                    Some(((s, d), e)) => format!(
                        "hereditary: no, first relation {s} -> {d} of dimension {}",
                        e.relations
                    ),
                });
                &["paths", "hom", "relations"]
            }
            Table::InjChar => {
                for socle in gamma.iter() {
                    let inj = quiver::injective_character(ctx, socle, gamma)?;
                    for (f, &m) in &inj.entries {
                        rows.insert((*socle, *f), vec![m]);
                    }
                }
                &["multiplicity"]
            }
            Table::HomProj => {
                for a in gamma.iter() {
                    for b in gamma.iter() {
                        rows.insert((*a, *b), vec![quiver::hom_proj_dim(ctx, a, b)?]);
                    }
                }
                &["dim"]
            }
        };
    let (left, right) = match which {
        Table::InjChar => ("socle", "factor"),
        Table::HomProj => ("a", "b"),
        _ => ("src", "dst"),
    };
    Ok(match format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = rows
                .iter()
                .map(|((a, b), vals)| {
                    let mut o = serde_json::Map::new();
                    o.insert(left.into(), point(a));
                    o.insert(right.into(), point(b));
                    for (h, v) in header.iter().zip(vals) {
                        o.insert((*h).into(), json!(v));
                    }
                    serde_json::Value::Object(o)
                })
                .collect();
            let mut doc = json!({"lie": gamma.lie_type().to_string(), "entries": entries});
            if let Some(v) = &verdict {
                doc["hereditary"] = json!(v == "hereditary: yes");
            }
            emit::pretty(&doc)
        }
        _ => {
            let names = [
                format!("{left}_weight"),
                format!("{left}_grade"),
                format!("{right}_weight"),
                format!("{right}_grade"),
            ];
            let mut cols: Vec<&str> = names.iter().map(String::as_str).collect();
            cols.extend_from_slice(header);
            let mut t = Tsv::new(&cols);
            for ((a, b), vals) in &rows {
                t.row(&emit::pair_cells(a, b, vals));
            }
            if let Some(v) = &verdict {
                t.comment(v);
            }
            t.finish()
        }
    }
    .into())
}

#[derive(Clone, Debug, Subcommand)]
pub enum Module {
    /// V(λ) ⊗ V(μ)
    Tensor { lambda: String, mu: String },
    /// S^k(V(λ))
    SymPower { k: usize, lambda: String },
    /// S^(k)(g), the degree-k part of the symmetric algebra of g[t]₊
    SymGraded { k: usize },
    /// g^⊗k
    TensorPower { k: usize },
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn decompose(lie: LieType, module: &Module, ov: Overrides) -> CliResult<Output> {
    let rs = RootSystem::new(lie);
    let weight = |s: &str| -> CliResult<Weight> {
        let w = Weight::parse_with_rank(s, rs.rank())?;
        rs.check_dominant(&w)?;
        Ok(w)
    };
    let degree = match module {
        Module::SymGraded { k } | Module::TensorPower { k } => *k,
        _ => 1,
    };
    let ctx = LieContext::with_max_degree(lie, ov.max_degree.unwrap_or(degree).max(degree));
    let d = ctx.adjoint().dim(&rs) as u128;
    let (name, dec, expected): (String, Decomposition, u128) = match module {
        Module::Tensor { lambda, mu } => {
            let (l, m) = (weight(lambda)?, weight(mu)?);
            let dec = (*ctx.tensor_decompose(ModuleKey::Irreducible(m), &l)?).clone();
            (
                format!("V({l}) x V({m})"),
                dec,
                weyl_dim(&rs, &l)? * weyl_dim(&rs, &m)?,
            )
        }
        Module::SymPower { k, lambda } => {
            let l = weight(lambda)?;
            let v = ctx.irreducible(&l)?;
            let dec = characters::decompose(&rs, &sym_power(&rs, *k, &v)?)?;
            let n = weyl_dim(&rs, &l)?;
            (
                format!("S^{k}(V({l}))"),
                dec,
                binomial(n + *k as u128 - 1, *k as u128),
            )
        }
        Module::SymGraded { k } => {
            let dec = ctx.graded_table(*k)?.s_graded_decomposition(*k)?.clone();
            (format!("S^({k})(g)"), dec, pbw_dimension(d as u64, *k))
        }
        Module::TensorPower { k } => {
            let t = ctx.graded_table(*k)?;
            let dec = characters::decompose(&rs, t.tensor_power(*k)?)?;
            (format!("g^{k}"), dec, d.pow(*k as u32))
        }
    };
    let mut total = 0u128;
    let mut rows = vec![];
    for (w, &m) in &dec {
        let dim = weyl_dim(&rs, w)?;
        total += m as u128 * dim;
        rows.push((w, m, dim));
    }
    let ok = total == expected;
    let stdout = match ov.format.unwrap_or(Format::Tsv) {
        Format::Dot => {
            return Err(CliError::Spec(
                "a decomposition has no DOT rendering".into(),
            ))
        }
        Format::Json => emit::pretty(&json!({
            "lie": lie.to_string(),
            "module": name,
            "summands": rows
                .iter()
                .map(|(w, m, dim)| json!({"weight": w.to_string(), "multiplicity": m, "dim": dim.to_string()}))
                .collect::<Vec<_>>(),
            "dim_sum": total.to_string(),
            "expected_dim": expected.to_string(),
            "dim_check": ok,
        })),
        Format::Tsv => {
            let mut t = Tsv::new(&["weight", "multiplicity", "dim"]);
            for (w, m, dim) in &rows {
                t.row(&[w.to_string(), m.to_string(), dim.to_string()]);
            }
            t.comment(&format!(
                "{name}: dim-sum {total}, expected {expected}, {}",
                if ok { "ok" } else { "MISMATCH" }
            ));
            t.finish()
        }
    };
    Ok(Output {
        stdout,
        stderr: String::new(),
        mismatches: usize::from(!ok),
    })
}
