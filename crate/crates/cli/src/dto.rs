//! Serialized forms of core types. Rationals are `"num/den"` strings; dyadic values also carry the
//! numerator `m` and exponent `k` of `m/2^k`.

use certiroot::rational::{as_dyadic, parse, pow2, to_fraction_string, Rational};
use certiroot::rootenum::GridInfo;
use certiroot::RootCandidateList;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyadicDto {
    pub value: String,
    pub m: String,
    pub k: u64,
}

impl DyadicDto {
    pub fn from_rational(q: &Rational) -> Option<Self> {
        let (m, k) = as_dyadic(q)?;
        Some(DyadicDto { value: to_fraction_string(q), m: m.to_string(), k })
    }

    pub fn to_rational(&self) -> Result<Rational, CliError> {
        let q = parse(&self.value).ok_or_else(|| CliError::Parse(format!("bad rational {:?}", self.value)))?;
        let m: BigInt = self.m.parse().map_err(|_| CliError::Parse(format!("bad numerator {:?}", self.m)))?;
        let k = i64::try_from(self.k).map_err(|_| CliError::Parse("exponent too large".into()))?;
        if Rational::from_integer(m) * pow2(-k) != q {
            return Err(CliError::Parse(format!("{} is not {}/2^{}", self.value, self.m, self.k)));
        }
        Ok(q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridDto {
    pub cauchy_bound: String,
    pub grid_bound: DyadicDto,
    pub refined_precision: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateListDto {
    pub candidates: Vec<DyadicDto>,
    pub interval_width: DyadicDto,
    pub degree: usize,
    pub length_bound: usize,
    pub cells_fired: usize,
    pub grid: Option<GridDto>,
}

fn dyadic(q: &Rational) -> DyadicDto {
    DyadicDto::from_rational(q).expect("grid values are dyadic")
}

impl From<&RootCandidateList> for CandidateListDto {
    fn from(list: &RootCandidateList) -> Self {
        CandidateListDto {
            candidates: list.candidates.iter().map(dyadic).collect(),
            interval_width: dyadic(&list.interval_width),
            degree: list.degree,
            length_bound: list.length_bound,
            cells_fired: list.len(),
            grid: list.grid.as_ref().map(|g| GridDto {
                cauchy_bound: to_fraction_string(&g.cauchy_bound),
                grid_bound: dyadic(&g.grid_bound),
                refined_precision: g.refined_precision,
            }),
        }
    }
}

impl TryFrom<&CandidateListDto> for RootCandidateList {
    type Error = CliError;

    fn try_from(dto: &CandidateListDto) -> Result<Self, CliError> {
        let grid = match &dto.grid {
            None => None,
            Some(g) => Some(GridInfo {
                cauchy_bound: parse(&g.cauchy_bound)
                    .ok_or_else(|| CliError::Parse(format!("bad rational {:?}", g.cauchy_bound)))?,
                grid_bound: g.grid_bound.to_rational()?,
                refined_precision: g.refined_precision,
            }),
        };
        if dto.cells_fired != dto.candidates.len() {
            return Err(CliError::Parse("cells_fired disagrees with the candidate count".into()));
        }
        Ok(RootCandidateList {
            candidates: dto.candidates.iter().map(DyadicDto::to_rational).collect::<Result<_, _>>()?,
            interval_width: dto.interval_width.to_rational()?,
            length_bound: dto.length_bound,
            degree: dto.degree,
            grid,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use certiroot::rational::{int, ratio};

    #[test]
    fn dyadic_fields() {
        let d = DyadicDto::from_rational(&ratio(-3, 8)).unwrap();
        assert_eq!(d, DyadicDto { value: "-3/8".into(), m: "-3".into(), k: 3 });
        assert_eq!(d.to_rational().unwrap(), ratio(-3, 8));
        assert_eq!(DyadicDto::from_rational(&int(4)).unwrap().k, 0);
        assert!(DyadicDto::from_rational(&ratio(1, 3)).is_none());
        let bad = DyadicDto { value: "1/2".into(), m: "1".into(), k: 2 };
        assert!(bad.to_rational().is_err());
    }
}
