//! Sparse polynomial functions `x -> sum c_i x^{e_i}` on GF(q), optionally
//! followed by the absolute trace, plus the `c@e` text syntax used on the
//! command line.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Where the function lands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// GF(q) -> GF(q).
    Field,
    /// GF(q) -> GF(p) through the absolute trace.
    Trace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuncSpec {
    terms: Vec<(Elem, u64)>,
    target: Target,
}

impl FuncSpec {
    pub fn new(terms: Vec<(Elem, u64)>, target: Target) -> Result<FuncSpec> {
        if terms.is_empty() {
            return Err(Error::Parse("a function needs at least one term".into()));
        }
        let mut seen = BTreeSet::new();
        for &(_, e) in &terms {
            if e == 0 {
                return Err(Error::Parse("exponents must be positive".into()));
            }
            if !seen.insert(e) {
                return Err(Error::Parse(format!("repeated exponent {e}")));
            }
        }
        Ok(FuncSpec { terms, target })
    }

    /// `x -> c x^e`.
    pub fn monomial(coeff: Elem, exponent: u64, target: Target) -> FuncSpec {
        FuncSpec::new(vec![(coeff, exponent)], target).expect("valid monomial")
    }

    pub fn terms(&self) -> &[(Elem, u64)] {
        &self.terms
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn with_target(&self, target: Target) -> FuncSpec {
        FuncSpec {
            terms: self.terms.clone(),
            target,
        }
    }

    /// Same function scaled by a field element (`x -> a f(x)`).
    pub fn scaled(&self, field: &Field, a: Elem) -> FuncSpec {
        FuncSpec {
            terms: self
                .terms
                .iter()
                .map(|&(c, e)| (field.mul(a, c), e))
                .collect(),
            target: self.target,
        }
    }

    /// The inner polynomial value `sum c_i x^{e_i}`, ignoring the target.
    #[inline]
    pub fn eval_poly(&self, field: &Field, x: Elem) -> Elem {
        self.terms.iter().fold(Elem::ZERO, |acc, &(c, e)| {
            field.add(acc, field.mul(c, field.pow(x, e)))
        })
    }

    /// Value in GF(q) for `Target::Field`, or the trace embedded in the prime
    /// subfield for `Target::Trace`.
    #[inline]
    pub fn eval(&self, field: &Field, x: Elem) -> Elem {
        let y = self.eval_poly(field, x);
        match self.target {
            Target::Field => y,
            Target::Trace => Elem(field.trace(y)),
        }
    }

    /// `Tr(sum c_i x^{e_i})` regardless of target.
    #[inline]
    pub fn eval_trace(&self, field: &Field, x: Elem) -> u32 {
        field.trace(self.eval_poly(field, x))
    }

    /// Parse `c@e[,c@e...]`. Coefficients are products of `*`-separated
    /// factors: an integer (taken mod p), `a` or `a^k` (powers of the
    /// primitive element), or `u` / `u^k` when a parameter `u` is supplied.
    pub fn parse(expr: &str, field: &Field, u: Option<Elem>, target: Target) -> Result<FuncSpec> {
        let mut terms = Vec::new();
        for raw in expr.split(',') {
            let raw = raw.trim();
            let (coef, exp) = raw
                .rsplit_once('@')
                .ok_or_else(|| Error::Parse(format!("term {raw:?} is missing '@'")))?;
            let exp: u64 = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {raw:?}")))?;
            let c = parse_coefficient(coef.trim(), field, u)?;
            terms.push((c, exp));
        }
        FuncSpec::new(terms, target)
    }
}

/// A single field element in coefficient syntax (`3`, `a^5`, `-a*2`).
pub fn parse_element(s: &str, field: &Field) -> Result<Elem> {
    parse_coefficient(s.trim(), field, None)
}

impl fmt::Display for FuncSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .terms
            .iter()
            .map(|(c, e)| format!("[{}]x^{e}", c.0))
            .collect();
        match self.target {
            Target::Field => write!(f, "{}", body.join(" + ")),
            Target::Trace => write!(f, "Tr({})", body.join(" + ")),
        }
    }
}

fn parse_power(s: &str) -> Result<(&str, i64)> {
    match s.split_once('^') {
        Some((base, k)) => {
            let k: i64 = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad power in {s:?}")))?;
            Ok((base.trim(), k))
        }
        None => Ok((s.trim(), 1)),
    }
}

fn parse_coefficient(s: &str, field: &Field, u: Option<Elem>) -> Result<Elem> {
    let (negate, body) = match s.strip_prefix('-') {
        Some(rest) if !rest.starts_with(|c: char| c.is_ascii_digit()) => (true, rest),
        _ => (false, s),
    };
    let mut acc = Elem::ONE;
    for factor in body.split('*') {
        let factor = factor.trim();
        let value = if let Ok(n) = factor.parse::<i64>() {
            field.from_int(n)
        } else {
            let (base, k) = parse_power(factor)?;
            match base {
                "a" | "alpha" => field.exp(k),
                "u" => {
                    let u = u.ok_or_else(|| {
                        Error::Parse("coefficient uses u but no u was given".into())
                    })?;
                    if k >= 0 {
                        field.pow(u, k as u64)
                    } else {
                        field.pow(field.inv(u)?, k.unsigned_abs())
                    }
                }
                _ => return Err(Error::Parse(format!("unknown coefficient factor {factor:?}"))),
            }
        };
        acc = field.mul(acc, value);
    }
    Ok(if negate { field.neg(acc) } else { acc })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_eval() {
        let f = Field::new(3, 3).unwrap();
        let u = f.alpha();
        let spec = FuncSpec::parse("1@10,-1*u@6,-1*u^2@2", &f, Some(u), Target::Field).unwrap();
        for x in f.elements() {
            let want = f.sub(
                f.sub(f.pow(x, 10), f.mul(u, f.pow(x, 6))),
                f.mul(f.mul(u, u), f.pow(x, 2)),
            );
            assert_eq!(spec.eval(&f, x), want);
        }
        let neg_u = FuncSpec::parse("-u@6", &f, Some(u), Target::Field).unwrap();
        assert_eq!(neg_u.terms()[0].0, f.neg(u));
    }

    #[test]
    fn alpha_powers_and_trace_target() {
        let f = Field::new(2, 5).unwrap();
        let spec = FuncSpec::parse("a^3@3", &f, None, Target::Trace).unwrap();
        let x = f.exp(7);
        assert_eq!(spec.eval(&f, x), Elem(f.trace(f.mul(f.exp(3), f.pow(x, 3)))));
        assert_eq!(spec.eval(&f, Elem::ZERO), Elem::ZERO);
    }

    #[test]
    fn rejects_bad_input() {
        let f = Field::new(2, 3).unwrap();
        assert!(FuncSpec::parse("1@3,1@3", &f, None, Target::Trace).is_err());
        assert!(FuncSpec::parse("1@0", &f, None, Target::Trace).is_err());
        assert!(FuncSpec::parse("u@3", &f, None, Target::Trace).is_err());
        assert!(FuncSpec::parse("q@3", &f, None, Target::Trace).is_err());
        assert!(FuncSpec::parse("13", &f, None, Target::Trace).is_err());
    }

    #[test]
    fn exponent_reduction_keeps_zero_literal() {
        let f = Field::new(2, 3).unwrap();
        // x^7 = 1 on GF(8)* but 0^7 = 0
        let spec = FuncSpec::monomial(Elem::ONE, 7, Target::Field);
        assert_eq!(spec.eval(&f, Elem::ZERO), Elem::ZERO);
        for x in f.nonzero_elements() {
            assert_eq!(spec.eval(&f, x), Elem::ONE);
        }
    }
}
