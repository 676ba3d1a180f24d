//! Text names for defining-set families, as used on the command line:
//! `paley`, `qf-image:EXPR`, `maschietti:CASE`, `hkm:H`, `bool:EXPR`,
//! `custom:I,J,...`.

use std::fmt;
use std::str::FromStr;

use crate::boolfn::{quadratic_rank, walsh_transform};
use crate::code::PredictionParams;
use crate::designs::{
    boolean_support, eto1_check, hkm_set_in, image_set, maschietti_set, paley_set, DefiningSet, Family,
    MaschiettiCase,
};
use crate::error::{Error, Result};
use crate::func::{parse_element, FuncSpec, Target};
use crate::gf::{Elem, Field, FieldConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Paley,
    QfImage(String),
    Maschietti(MaschiettiCase),
    Hkm(u32),
    Bool(String),
    Custom(Vec<u32>),
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h.trim(), Some(a.trim())),
            None => (s.trim(), None),
        };
        let need_arg = || arg.ok_or_else(|| Error::Parse(format!("family {head:?} needs an argument")));
        match head {
            "paley" => Ok(FamilySpec::Paley),
            "qf-image" => Ok(FamilySpec::QfImage(need_arg()?.to_string())),
            "maschietti" => Ok(FamilySpec::Maschietti(need_arg()?.parse()?)),
            "hkm" => {
                let h = need_arg()?
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad h in {s:?}")))?;
                Ok(FamilySpec::Hkm(h))
            }
            "bool" => Ok(FamilySpec::Bool(need_arg()?.to_string())),
            "custom" => {
                let idx = need_arg()?
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad index {t:?}"))))
                    .collect::<Result<Vec<u32>>>()?;
                Ok(FamilySpec::Custom(idx))
            }
            other => Err(Error::UnknownKind(format!("family {other:?}"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Paley => write!(f, "paley"),
            FamilySpec::QfImage(e) => write!(f, "qf-image:{e}"),
            FamilySpec::Maschietti(c) => write!(f, "maschietti:{c}"),
            FamilySpec::Hkm(h) => write!(f, "hkm:{h}"),
            FamilySpec::Bool(e) => write!(f, "bool:{e}"),
            FamilySpec::Custom(idx) => {
                let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                write!(f, "custom:{}", parts.join(","))
            }
        }
    }
}

/// Field parameters as supplied by the caller; unset values fall back to the
/// family's natural choice.
#[derive(Clone, Debug, Default)]
pub struct FieldRequest {
    pub p: Option<u32>,
    pub m: Option<u32>,
    /// Coefficient expression for the `u` parameter of `qf-image`.
    pub u: Option<String>,
    pub config: FieldConfig,
}

impl FamilySpec {
    /// `(p, m)` implied by the family and the request.
    pub fn field_params(&self, req: &FieldRequest) -> Result<(u32, u32)> {
        let missing = |what: &str| Error::PreconditionFailed(format!("family {self} needs --{what}"));
        match self {
            FamilySpec::Hkm(h) => {
                let m = 3 * h;
                if req.p.is_some_and(|p| p != 3) || req.m.is_some_and(|x| x != m) {
                    return Err(Error::PreconditionFailed(format!(
                        "hkm:{h} lives in GF(3^{m})"
                    )));
                }
                Ok((3, m))
            }
            FamilySpec::Maschietti(_) | FamilySpec::Bool(_) => {
                let p = req.p.unwrap_or(2);
                Ok((p, req.m.ok_or_else(|| missing("m"))?))
            }
            _ => Ok((req.p.ok_or_else(|| missing("p"))?, req.m.unwrap_or(1))),
        }
    }

    pub fn field(&self, req: &FieldRequest) -> Result<Field> {
        let (p, m) = self.field_params(req)?;
        Field::with_config(p, m, None, &req.config)
    }

    pub fn build(&self, req: &FieldRequest) -> Result<DefiningSet> {
        let field = self.field(req)?;
        self.build_in(&field, req.u.as_deref())
    }

    /// Builds the set inside a given field (any primitive modulus).
    pub fn build_in(&self, field: &Field, u: Option<&str>) -> Result<DefiningSet> {
        match self {
            FamilySpec::Paley => paley_set(field),
            FamilySpec::QfImage(expr) => {
                let u = u.map(|s| parse_element(s, field)).transpose()?;
                let f = FuncSpec::parse(expr, field, u, Target::Field)?;
                image_set(field, &f)
            }
            FamilySpec::Maschietti(case) => maschietti_set(field, *case),
            FamilySpec::Hkm(h) => hkm_set_in(field, *h),
            FamilySpec::Bool(expr) => {
                let f = FuncSpec::parse(expr, field, None, Target::Trace)?;
                boolean_support(field, &f)
            }
            FamilySpec::Custom(idx) => {
                DefiningSet::new(field, idx.iter().map(|&i| Elem(i)).collect(), Family::Custom)
            }
        }
    }
}

impl FamilySpec {
    /// Inputs for a closed-form prediction, computed from the family in `field`.
    /// Fields that do not apply to the family stay `None`.
    pub fn prediction_params(&self, field: &Field, u: Option<&str>) -> Result<PredictionParams> {
        let mut params = PredictionParams {
            p: field.p(),
            m: field.m(),
            ..Default::default()
        };
        match self {
            FamilySpec::Hkm(h) => params.h = Some(*h),
            FamilySpec::QfImage(expr) => {
                let u = u.map(|s| parse_element(s, field)).transpose()?;
                let f = FuncSpec::parse(expr, field, u, Target::Field)?;
                params.e = eto1_check(field, &f);
                params.rank = quadratic_rank(field, &f).ok().map(|r| r.r);
            }
            FamilySpec::Bool(expr) => {
                let f = FuncSpec::parse(expr, field, None, Target::Trace)?;
                let spectrum = walsh_transform(field, &f)?;
                params.n_f = Some(spectrum.support_size());
                params.walsh_zero = Some(spectrum.values()[0]);
                params.rank = quadratic_rank(field, &f).ok().map(|r| r.r);
                params.spectrum = Some(spectrum);
            }
            _ => {}
        }
        Ok(params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("paley".parse::<FamilySpec>().unwrap(), FamilySpec::Paley);
        assert_eq!("hkm:3".parse::<FamilySpec>().unwrap(), FamilySpec::Hkm(3));
        assert_eq!(
            "maschietti:glynn2".parse::<FamilySpec>().unwrap(),
            FamilySpec::Maschietti(MaschiettiCase::GlynnII)
        );
        assert_eq!(
            "bool:1@3".parse::<FamilySpec>().unwrap(),
            FamilySpec::Bool("1@3".into())
        );
        assert_eq!(
            "custom:1,2,4".parse::<FamilySpec>().unwrap(),
            FamilySpec::Custom(vec![1, 2, 4])
        );
        assert!(matches!("singer".parse::<FamilySpec>(), Err(Error::UnknownKind(_))));
        assert!("maschietti:other".parse::<FamilySpec>().is_err());
        assert!("hkm".parse::<FamilySpec>().is_err());
        for s in ["paley", "hkm:1", "qf-image:1@10,-1*u@6", "maschietti:segre", "custom:3,5"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn builds() {
        let req = FieldRequest { p: Some(7), ..Default::default() };
        assert_eq!(FamilySpec::Paley.build(&req).unwrap().indices(), vec![1, 2, 4]);
        let hkm = FamilySpec::Hkm(1).build(&FieldRequest::default()).unwrap();
        assert_eq!(hkm.len(), 4);
        let req = FieldRequest { m: Some(5), ..Default::default() };
        let d = FamilySpec::Maschietti(MaschiettiCase::Segre).build(&req).unwrap();
        assert_eq!(d.len(), 15);
        let req = FieldRequest {
            p: Some(3),
            m: Some(3),
            u: Some("a".into()),
            ..Default::default()
        };
        let spec: FamilySpec = "qf-image:1@10,-1*u@6,-1*u^2@2".parse().unwrap();
        assert_eq!(spec.build(&req).unwrap().len(), 13);
        assert!(FamilySpec::Paley.build(&FieldRequest::default()).is_err());
        let bad = FieldRequest { p: Some(2), ..Default::default() };
        assert!(FamilySpec::Hkm(1).build(&bad).is_err());
    }

    #[test]
    fn prediction_inputs() {
        let field = Field::new(2, 6).unwrap();
        let p = FamilySpec::Bool("1@3".into()).prediction_params(&field, None).unwrap();
        // The radical of Tr(x^3) on GF(64) is GF(4).
        assert_eq!(p.rank, Some(4));
        let direct = field.elements().filter(|&x| field.trace(field.pow(x, 3)) == 1).count() as u64;
        assert_eq!(p.n_f, Some(direct));
        assert_eq!(p.walsh_zero, Some(64 - 2 * direct as i64));
        let field = Field::new(3, 3).unwrap();
        let spec: FamilySpec = "qf-image:1@10,-1*u@6,-1*u^2@2".parse().unwrap();
        let p = spec.prediction_params(&field, Some("a")).unwrap();
        assert_eq!((p.e, p.rank), (Some(2), Some(3)));
    }
}
