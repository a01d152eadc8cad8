//! JSON problem specifications.

use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use lieq_core::poset::{self, GammaSet, LambdaPoint};
use lieq_core::{Family, LieType, RootSystem, Weight};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Dot,
    Tsv,
    Json,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub lie: LieSpec,
    pub gamma: GammaSpec,
    #[serde(default)]
    pub options: Options,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSpec {
    pub family: String,
    pub rank: usize,
}

/// A point as `["l1,...,ln", grade]`.
pub type PointSpec = (String, u32);

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaSpec {
    Points(Vec<PointSpec>),
    Interval(PointSpec, PointSpec),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub max_degree: Option<usize>,
    #[serde(default)]
    pub override_interval_closed: bool,
    pub format: Option<Format>,
}

impl LieSpec {
    pub fn lie_type(&self) -> CliResult<LieType> {
        let mut chars = self.family.trim().chars();
        let family = match (chars.next().and_then(Family::from_letter), chars.next()) {
            (Some(f), None) => f,
            _ => return Err(CliError::Spec(format!("unknown family {:?}", self.family))),
        };
        Ok(LieType::new(family, self.rank)?)
    }
}

pub fn parse_point(rs: &RootSystem, (w, g): &PointSpec) -> CliResult<LambdaPoint> {
    let weight = Weight::parse_with_rank(w, rs.rank())?;
    rs.check_dominant(&weight)?;
    Ok(LambdaPoint::new(weight, *g))
}

/// Reads a spec from `path`, or standard input when `path` is `None` or `-`.
pub fn load(path: Option<&Path>) -> CliResult<ProblemSpec> {
    let text = match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            s
        }
    };
    Ok(serde_json::from_str(&text)?)
}

impl ProblemSpec {
    /// Γ as written: the listed points, or the interval between the endpoints.
    pub fn gamma(&self, rs: &RootSystem) -> CliResult<GammaSet> {
        let points = match &self.gamma {
            GammaSpec::Points(list) => {
                if list.is_empty() {
                    return Err(CliError::Spec("gamma has no points".into()));
                }
                list.iter()
                    .map(|p| parse_point(rs, p))
                    .collect::<CliResult<Vec<_>>>()?
            }
            GammaSpec::Interval(low, high) => {
                let (low, high) = (parse_point(rs, low)?, parse_point(rs, high)?);
                let iv = poset::interval(rs, &low, &high)?;
                if iv.is_empty() {
                    return Err(lieq_core::Error::EmptyInterval { low, high }.into());
                }
                iv.into_iter().collect()
            }
        };
        Ok(GammaSet::new(rs.lie_type(), points)?)
    }
}
