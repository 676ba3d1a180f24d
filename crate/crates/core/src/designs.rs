//! Difference sets, almost difference sets and the defining-set families.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
pub use crate::func::{FuncSpec, Target};
use crate::gf::{Elem, Field};

/// A finite abelian group whose elements are `u32` labels.
#[derive(Clone, Debug)]
pub enum AbelianGroup {
    /// `(GF(q), +)`, elements are field indices.
    Additive(Field),
    /// `Z_v`, elements are residues.
    Cyclic(u32),
}

impl AbelianGroup {
    pub fn order(&self) -> u32 {
        match self {
            AbelianGroup::Additive(f) => f.q(),
            AbelianGroup::Cyclic(v) => *v,
        }
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.order()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn op(&self, a: u32, b: u32) -> u32 {
        match self {
            AbelianGroup::Additive(f) => f.add(Elem(a), Elem(b)).0,
            AbelianGroup::Cyclic(v) => ((a as u64 + b as u64) % *v as u64) as u32,
        }
    }

    pub fn inverse(&self, a: u32) -> u32 {
        match self {
            AbelianGroup::Additive(f) => f.neg(Elem(a)).0,
            AbelianGroup::Cyclic(v) => (*v - a % *v) % *v,
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.op(a, self.inverse(b))
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order()
    }
}

/// Outcome of the difference-function analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DesignClass {
    DifferenceSet { v: u32, k: u32, lambda: u64 },
    AlmostDifferenceSet { v: u32, k: u32, lambda: u64, t: u64 },
    /// Spectrum of the difference function over nonzero shifts: value -> count.
    Irregular { spectrum: BTreeMap<u64, u64> },
}

impl fmt::Display for DesignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignClass::DifferenceSet { v, k, lambda } => {
                write!(f, "({v},{k},{lambda}) difference set")
            }
            DesignClass::AlmostDifferenceSet { v, k, lambda, t } => {
                write!(f, "({v},{k},{lambda},{t}) almost difference set")
            }
            DesignClass::Irregular { spectrum } => {
                let parts: Vec<String> =
                    spectrum.iter().map(|(v, c)| format!("{v}:{c}")).collect();
                write!(f, "irregular {{{}}}", parts.join(", "))
            }
        }
    }
}

fn membership(group: &AbelianGroup, set: &[u32]) -> Result<Vec<bool>> {
    let mut member = vec![false; group.order() as usize];
    for &d in set {
        if !group.contains(d) {
            return Err(Error::ElementNotInGroup(d));
        }
        member[d as usize] = true;
    }
    Ok(member)
}

/// `|D ∩ (D + x)|`.
pub fn difference_function(group: &AbelianGroup, set: &[u32], x: u32) -> Result<u64> {
    if !group.contains(x) {
        return Err(Error::ElementNotInGroup(x));
    }
    let member = membership(group, set)?;
    let mut distinct = set.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(distinct
        .iter()
        .filter(|&&d| member[group.sub(d, x) as usize])
        .count() as u64)
}

/// The difference function at every group element, indexed by element.
pub fn difference_spectrum(group: &AbelianGroup, set: &[u32]) -> Result<Vec<u64>> {
    membership(group, set)?;
    let mut distinct = set.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut spectrum = vec![0u64; group.order() as usize];
    for &a in &distinct {
        for &b in &distinct {
            spectrum[group.sub(a, b) as usize] += 1;
        }
    }
    Ok(spectrum)
}

pub fn classify_design(group: &AbelianGroup, set: &[u32]) -> Result<DesignClass> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let spectrum = difference_spectrum(group, set)?;
    let v = group.order();
    let k = spectrum[group.identity() as usize] as u32;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for x in group.elements().filter(|&x| x != group.identity()) {
        *counts.entry(spectrum[x as usize]).or_default() += 1;
    }
    let values: Vec<(u64, u64)> = counts.iter().map(|(&a, &b)| (a, b)).collect();
    Ok(match values.as_slice() {
        [] => DesignClass::DifferenceSet { v, k, lambda: 0 },
        [(lambda, _)] => DesignClass::DifferenceSet {
            v,
            k,
            lambda: *lambda,
        },
        [(lambda, t), (upper, _)] if *upper == lambda + 1 => DesignClass::AlmostDifferenceSet {
            v,
            k,
            lambda: *lambda,
            t: *t,
        },
        _ => DesignClass::Irregular { spectrum: counts },
    })
}

/// Where a defining set came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Paley,
    Skew,
    QfImage,
    Maschietti(MaschiettiCase),
    Hkm { h: u32 },
    BoolSupport,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Paley => write!(f, "paley"),
            Family::Skew => write!(f, "skew"),
            Family::QfImage => write!(f, "qf-image"),
            Family::Maschietti(c) => write!(f, "maschietti-{c}"),
            Family::Hkm { .. } => write!(f, "hkm"),
            Family::BoolSupport => write!(f, "bool-support"),
            Family::Custom => write!(f, "custom"),
        }
    }
}

/// An ordered set of distinct field elements labelling the code coordinates.
#[derive(Clone, Debug)]
pub struct DefiningSet {
    field: Field,
    elems: Vec<Elem>,
    family: Family,
}

impl DefiningSet {
    /// Sorts ascending and drops duplicates.
    pub fn new(field: &Field, elems: Vec<Elem>, family: Family) -> Result<DefiningSet> {
        let mut elems = elems;
        if let Some(bad) = elems.iter().find(|x| !field.contains(**x)) {
            return Err(Error::ElementOutOfRange(bad.0));
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(DefiningSet {
            field: field.clone(),
            elems,
            family,
        })
    }

    /// Keeps the given order; rejects duplicates.
    pub fn with_order(field: &Field, elems: Vec<Elem>, family: Family) -> Result<DefiningSet> {
        let mut sorted = elems.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != elems.len() {
            return Err(Error::PreconditionFailed("defining set has duplicates".into()));
        }
        if let Some(bad) = elems.iter().find(|x| !field.contains(**x)) {
            return Err(Error::ElementOutOfRange(bad.0));
        }
        Ok(DefiningSet {
            field: field.clone(),
            elems,
            family,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// A zero element yields an identically-zero coordinate.
    pub fn contains_zero(&self) -> bool {
        self.elems.first() == Some(&Elem::ZERO) || self.elems.contains(&Elem::ZERO)
    }

    pub fn indices(&self) -> Vec<u32> {
        self.elems.iter().map(|e| e.0).collect()
    }

    /// Discrete logs of the (nonzero) elements, as residues of `Z_{q-1}`.
    pub fn dlogs(&self) -> Result<Vec<u32>> {
        self.elems.iter().map(|&e| self.field.dlog(e)).collect()
    }

    /// Image in `GF(q)* / <alpha^n>` seen as `Z_n`, with `n | q - 1`.
    pub fn quotient_image(&self, n: u32) -> Result<Vec<u32>> {
        let mut out: Vec<u32> = self.dlogs()?.into_iter().map(|t| t % n).collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// `a D`.
    pub fn scaled(&self, a: Elem) -> DefiningSet {
        let elems = self.elems.iter().map(|&d| self.field.mul(a, d)).collect();
        DefiningSet::new(&self.field, elems, self.family).expect("scaling stays in the field")
    }

    /// `-D`.
    pub fn negated(&self) -> DefiningSet {
        let elems = self.elems.iter().map(|&d| self.field.neg(d)).collect();
        DefiningSet::new(&self.field, elems, self.family).expect("negation stays in the field")
    }
}

/// All nonzero squares of an odd-characteristic field.
pub fn paley_set(field: &Field) -> Result<DefiningSet> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let elems = field
        .nonzero_elements()
        .filter(|&x| field.is_square(x).unwrap_or(false))
        .collect();
    DefiningSet::new(field, elems, Family::Paley)
}

/// Whether `D`, `-D` and `{0}` partition the field.
pub fn is_skew_set(field: &Field, set: &[Elem]) -> bool {
    let mut seen = vec![false; field.q() as usize];
    seen[0] = true;
    for &d in set {
        if !field.contains(d) {
            return false;
        }
        let nd = field.neg(d);
        if seen[d.0 as usize] || seen[nd.0 as usize] || d == nd {
            return false;
        }
        seen[d.0 as usize] = true;
        seen[nd.0 as usize] = true;
    }
    seen.iter().all(|&s| s)
}

/// `{f(x) : x in GF(q)} \ {0}`.
pub fn image_set(field: &Field, f: &FuncSpec) -> Result<DefiningSet> {
    if f.target() != Target::Field {
        return Err(Error::PreconditionFailed(
            "image sets need a field-valued function".into(),
        ));
    }
    let mut hit = vec![false; field.q() as usize];
    for x in field.elements() {
        hit[f.eval(field, x).0 as usize] = true;
    }
    let elems = (1..field.q()).filter(|&y| hit[y as usize]).map(Elem).collect();
    DefiningSet::new(field, elems, Family::QfImage)
}

/// `Some(e)` when `f(0) = 0`, `f` has no other zero, and every nonzero value
/// has exactly `e` preimages in `GF(q)*`.
pub fn eto1_check(field: &Field, f: &FuncSpec) -> Option<u64> {
    if f.target() != Target::Field || !f.eval(field, Elem::ZERO).is_zero() {
        return None;
    }
    let mut counts = vec![0u64; field.q() as usize];
    for x in field.nonzero_elements() {
        let y = f.eval(field, x);
        if y.is_zero() {
            return None;
        }
        counts[y.0 as usize] += 1;
    }
    let mut e = None;
    for &c in counts.iter().filter(|&&c| c > 0) {
        match e {
            None => e = Some(c),
            Some(prev) if prev != c => return None,
            _ => {}
        }
    }
    e
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MaschiettiCase {
    Singer,
    Segre,
    GlynnI,
    GlynnII,
}

impl MaschiettiCase {
    pub const ALL: [MaschiettiCase; 4] = [
        MaschiettiCase::Singer,
        MaschiettiCase::Segre,
        MaschiettiCase::GlynnI,
        MaschiettiCase::GlynnII,
    ];
}

impl fmt::Display for MaschiettiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MaschiettiCase::Singer => "singer",
            MaschiettiCase::Segre => "segre",
            MaschiettiCase::GlynnI => "glynn1",
            MaschiettiCase::GlynnII => "glynn2",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for MaschiettiCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "singer" => Ok(MaschiettiCase::Singer),
            "segre" => Ok(MaschiettiCase::Segre),
            "glynn1" => Ok(MaschiettiCase::GlynnI),
            "glynn2" => Ok(MaschiettiCase::GlynnII),
            other => Err(Error::UnknownKind(format!("maschietti case {other:?}"))),
        }
    }
}

/// `(sigma, pi)` for the Glynn I exponent: `sigma = (m+1)/2`, `4 pi = 1 mod m`.
pub fn glynn_parameters(m: u32) -> Result<(u32, u32)> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenDegree(m));
    }
    let sigma = m.div_ceil(2);
    let pi = (0..m)
        .find(|&pi| (4 * pi as u64) % m as u64 == 1 % m as u64)
        .ok_or_else(|| Error::PreconditionFailed(format!("4*pi = 1 mod {m} has no solution")))?;
    Ok((sigma, pi))
}

/// The exponent `rho` of `Gamma_rho(x) = x^rho + x` for each case.
pub fn maschietti_rho(m: u32, case: MaschiettiCase) -> Result<u64> {
    let (sigma, pi) = glynn_parameters(m)?;
    Ok(match case {
        MaschiettiCase::Singer => 2,
        MaschiettiCase::Segre => 6,
        MaschiettiCase::GlynnI => (1u64 << sigma) + (1u64 << pi),
        MaschiettiCase::GlynnII => 3 * (1u64 << sigma) + 4,
    })
}

/// `{x^rho + x : x in GF(2^m)} \ {0}`, after checking that the map is two-to-one.
pub fn maschietti_set(field: &Field, case: MaschiettiCase) -> Result<DefiningSet> {
    if field.p() != 2 {
        return Err(Error::PreconditionFailed("maschietti sets live in GF(2^m)".into()));
    }
    let m = field.m();
    let rho = maschietti_rho(m, case)?;
    let gamma = FuncSpec::new(vec![(Elem::ONE, rho), (Elem::ONE, 1)], Target::Field)?;
    let mut counts = vec![0u32; field.q() as usize];
    for x in field.elements() {
        counts[gamma.eval(field, x).0 as usize] += 1;
    }
    if counts.iter().any(|&c| c != 0 && c != 2) {
        return Err(Error::NotTwoToOne { rho, m });
    }
    let elems = (1..field.q())
        .filter(|&y| counts[y as usize] > 0)
        .map(Elem)
        .collect();
    DefiningSet::new(field, elems, Family::Maschietti(case))
}

/// `ell = 3^{2h} - 3^h + 1`.
pub fn hkm_ell(h: u32) -> u64 {
    let e = 3u64.pow(h);
    e * e - e + 1
}

/// `Tr(x + x^ell)` on GF(3^{3h}).
pub fn hkm_function(h: u32) -> FuncSpec {
    FuncSpec::new(
        vec![(Elem::ONE, 1), (Elem::ONE, hkm_ell(h))],
        Target::Trace,
    )
    .expect("distinct exponents")
}

/// The cyclic difference set `{alpha^t : Tr(alpha^t + alpha^{t ell}) = 0, 0 <= t < n}`
/// in GF(3^{3h}) under the default modulus.
pub fn hkm_set(h: u32) -> Result<DefiningSet> {
    if h == 0 {
        return Err(Error::PreconditionFailed("h must be positive".into()));
    }
    let field = Field::new(3, 3 * h)?;
    hkm_set_in(&field, h)
}

/// As [`hkm_set`], in a caller-supplied GF(3^{3h}).
pub fn hkm_set_in(field: &Field, h: u32) -> Result<DefiningSet> {
    if field.p() != 3 || field.m() != 3 * h {
        return Err(Error::PreconditionFailed(format!(
            "hkm set needs GF(3^{}), got GF({}^{})",
            3 * h,
            field.p(),
            field.m()
        )));
    }
    let f = hkm_function(h);
    let n = (field.q() - 1) / 2;
    let elems = (0..n as i64)
        .map(|t| field.exp(t))
        .filter(|&x| f.eval_trace(field, x) == 0)
        .collect();
    DefiningSet::new(field, elems, Family::Hkm { h })
}

/// Support `{x : Tr(f(x)) = 1}` of a Boolean function on GF(2^m).
pub fn boolean_support(field: &Field, f: &FuncSpec) -> Result<DefiningSet> {
    if field.p() != 2 {
        return Err(Error::PreconditionFailed("boolean supports live in GF(2^m)".into()));
    }
    let elems = field
        .elements()
        .filter(|&x| f.eval_trace(field, x) == 1)
        .collect();
    DefiningSet::new(field, elems, Family::BoolSupport)
}

/// `N_(b,a) = |{x : f(x) = 0, Tr(b x) = a}|` for every `a` in GF(p).
pub fn joint_counts(field: &Field, f: &FuncSpec, b: Elem) -> Vec<u64> {
    let mut counts = vec![0u64; field.p() as usize];
    for x in field.elements() {
        if f.eval_trace(field, x) == 0 {
            counts[field.trace(field.mul(b, x)) as usize] += 1;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(set: &DefiningSet) -> Vec<u32> {
        set.indices()
    }

    #[test]
    fn difference_function_examples() {
        let z7 = AbelianGroup::Cyclic(7);
        assert_eq!(difference_function(&z7, &[1, 2, 4], 0).unwrap(), 3);
        assert_eq!(difference_function(&z7, &[1, 2, 4], 1).unwrap(), 1);
        let f5 = Field::new(5, 1).unwrap();
        let g5 = AbelianGroup::Additive(f5);
        assert_eq!(difference_function(&g5, &[1, 4], 2).unwrap(), 1);
        assert_eq!(
            difference_function(&z7, &[1, 9], 1),
            Err(Error::ElementNotInGroup(9))
        );
        assert_eq!(classify_design(&z7, &[]), Err(Error::EmptySet));
    }

    #[test]
    fn paley_sets() {
        assert_eq!(idx(&paley_set(&Field::new(7, 1).unwrap()).unwrap()), vec![1, 2, 4]);
        assert_eq!(idx(&paley_set(&Field::new(5, 1).unwrap()).unwrap()), vec![1, 4]);
        let f9 = Field::new(3, 2).unwrap();
        let d = paley_set(&f9).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.dlogs().unwrap().iter().all(|t| t % 2 == 0));
        assert_eq!(
            paley_set(&Field::new(2, 3).unwrap()).unwrap_err(),
            Error::EvenCharacteristic
        );
    }

    #[test]
    fn paley_classification() {
        let f7 = Field::new(7, 1).unwrap();
        let d = paley_set(&f7).unwrap();
        assert_eq!(
            classify_design(&AbelianGroup::Additive(f7), &d.indices()).unwrap(),
            DesignClass::DifferenceSet { v: 7, k: 3, lambda: 1 }
        );
        let f13 = Field::new(13, 1).unwrap();
        let d = paley_set(&f13).unwrap();
        assert_eq!(
            classify_design(&AbelianGroup::Additive(f13), &d.indices()).unwrap(),
            DesignClass::AlmostDifferenceSet { v: 13, k: 6, lambda: 2, t: 6 }
        );
    }

    #[test]
    fn skew_sets() {
        let f7 = Field::new(7, 1).unwrap();
        assert!(is_skew_set(&f7, &[Elem(1), Elem(2), Elem(4)]));
        // -{1,2,5} = {6,5,2} overlaps
        assert!(!is_skew_set(&f7, &[Elem(1), Elem(2), Elem(5)]));
        assert!(!is_skew_set(&f7, &[Elem(1), Elem(2)]));
        let f13 = Field::new(13, 1).unwrap();
        let sq: Vec<Elem> = [1, 3, 4, 9, 10, 12].iter().map(|&x| Elem(x)).collect();
        assert!(!is_skew_set(&f13, &sq));
    }

    #[test]
    fn image_sets() {
        let f7 = Field::new(7, 1).unwrap();
        let id = FuncSpec::monomial(Elem::ONE, 1, Target::Field);
        assert_eq!(image_set(&f7, &id).unwrap().len(), 6);
        let sq = FuncSpec::monomial(Elem::ONE, 2, Target::Field);
        assert_eq!(idx(&image_set(&f7, &sq).unwrap()), vec![1, 2, 4]);
        let f27 = Field::new(3, 3).unwrap();
        let gold = FuncSpec::monomial(Elem::ONE, 4, Target::Field);
        assert_eq!(image_set(&f27, &gold).unwrap().len(), 13);
        assert!(image_set(&f27, &gold.with_target(Target::Trace)).is_err());
    }

    #[test]
    fn eto1_examples() {
        let f7 = Field::new(7, 1).unwrap();
        let sq = FuncSpec::monomial(Elem::ONE, 2, Target::Field);
        assert_eq!(eto1_check(&f7, &sq), Some(2));
        let f8 = Field::new(2, 3).unwrap();
        let id = FuncSpec::monomial(Elem::ONE, 1, Target::Field);
        assert_eq!(eto1_check(&f8, &id), Some(1));
        let f27 = Field::new(3, 3).unwrap();
        let u = f27.alpha();
        let f = FuncSpec::parse("1@10,-1*u@6,-1*u^2@2", &f27, Some(u), Target::Field).unwrap();
        assert_eq!(eto1_check(&f27, &f), Some(2));
        // x^3 + x vanishes at nonzero points of GF(9)? x^2 = -1 has roots there
        let f9 = Field::new(3, 2).unwrap();
        let g = FuncSpec::new(vec![(Elem::ONE, 3), (Elem::ONE, 1)], Target::Field).unwrap();
        assert_eq!(eto1_check(&f9, &g), None);
    }

    #[test]
    fn maschietti_examples() {
        let f = Field::new(2, 5).unwrap();
        for case in MaschiettiCase::ALL {
            let d = maschietti_set(&f, case).unwrap();
            assert_eq!(d.len(), 15, "{case}");
        }
        assert_eq!(maschietti_rho(5, MaschiettiCase::GlynnII).unwrap(), 28);
        assert_eq!(maschietti_rho(5, MaschiettiCase::GlynnI).unwrap(), 8 + 16);
        assert_eq!(maschietti_rho(7, MaschiettiCase::GlynnI).unwrap(), 16 + 4);
        let segre = maschietti_set(&f, MaschiettiCase::Segre).unwrap();
        let class =
            classify_design(&AbelianGroup::Cyclic(31), &segre.dlogs().unwrap()).unwrap();
        assert_eq!(class, DesignClass::DifferenceSet { v: 31, k: 15, lambda: 7 });
        assert_eq!(
            maschietti_set(&Field::new(2, 4).unwrap(), MaschiettiCase::Singer).unwrap_err(),
            Error::EvenDegree(4)
        );
        // x^3 + x is not two-to-one on GF(2^5): x^3 + x = x(x+1)^2
        let g = FuncSpec::new(vec![(Elem::ONE, 3), (Elem::ONE, 1)], Target::Field).unwrap();
        let mut counts = [0; 32];
        for x in f.elements() {
            counts[g.eval(&f, x).0 as usize] += 1;
        }
        assert!(counts.contains(&1));
    }

    #[test]
    fn hkm_h1() {
        let d = hkm_set(1).unwrap();
        assert_eq!(d.len(), 4);
        let class =
            classify_design(&AbelianGroup::Cyclic(13), &d.quotient_image(13).unwrap()).unwrap();
        assert_eq!(class, DesignClass::DifferenceSet { v: 13, k: 4, lambda: 1 });
        // membership by direct trace evaluation of alpha^t + alpha^{7t}
        let f = d.field().clone();
        let mut expected = Vec::new();
        for t in 0..13i64 {
            let x = f.exp(t);
            let y = f.add(x, f.exp(7 * t));
            let tr = f.add(f.add(y, f.pow(y, 3)), f.pow(y, 9));
            if tr.is_zero() {
                expected.push(x);
            }
        }
        expected.sort();
        assert_eq!(d.elems(), expected.as_slice());
    }

    #[test]
    fn boolean_supports() {
        let f8 = Field::new(2, 3).unwrap();
        let tr = FuncSpec::monomial(Elem::ONE, 1, Target::Trace);
        let d = boolean_support(&f8, &tr).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.elems().iter().all(|&x| f8.trace(x) == 1));
        let zero = FuncSpec::monomial(Elem::ZERO, 1, Target::Trace);
        assert!(boolean_support(&f8, &zero).unwrap().is_empty());
        let f32 = Field::new(2, 5).unwrap();
        let cube = FuncSpec::monomial(Elem::ONE, 3, Target::Trace);
        let n = boolean_support(&f32, &cube).unwrap().len();
        assert!([12, 16, 20].contains(&n));
    }

    #[test]
    fn joint_counts_hkm_h1() {
        let f = Field::new(3, 3).unwrap();
        let g = hkm_function(1);
        let total: u64 = joint_counts(&f, &g, Elem::ZERO).iter().sum();
        assert_eq!(joint_counts(&f, &g, Elem::ZERO), vec![total, 0, 0]);
        assert_eq!(total, 9);
        let c = joint_counts(&f, &g, Elem::ONE);
        assert_eq!(c.iter().sum::<u64>(), 9);
        for b in f.nonzero_elements() {
            let n0 = joint_counts(&f, &g, b)[0];
            assert!([1, 3, 5].contains(&n0), "{n0}");
        }
    }

    #[test]
    fn complement_and_negation_rules() {
        let f = Field::new(2, 5).unwrap();
        let d = maschietti_set(&f, MaschiettiCase::Singer).unwrap();
        let z31 = AbelianGroup::Cyclic(31);
        let logs = d.dlogs().unwrap();
        let comp: Vec<u32> = (0..31).filter(|t| !logs.contains(t)).collect();
        assert_eq!(
            classify_design(&z31, &comp).unwrap(),
            DesignClass::DifferenceSet { v: 31, k: 16, lambda: 8 }
        );
        let neg: Vec<u32> = logs.iter().map(|&t| z31.inverse(t)).collect();
        for x in 1..31 {
            assert_eq!(
                difference_function(&z31, &logs, x).unwrap(),
                difference_function(&z31, &neg, z31.inverse(x)).unwrap()
            );
        }
    }
}
