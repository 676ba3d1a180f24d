//! Named reproduction cases: each builds a family, enumerates its code and
//! compares the result with the closed form claimed for it.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::boolfn::{
    classify_spectrum, hyperoval_spectrum_check, is_almost_bent, lambda_spectrum,
    quadratic_boolean_walk, quadratic_rank, quadratic_walsh_counts, walsh_transform,
};
use crate::code::{
    dual_distance_witness, griesmer_check, minimum_distance, pless_moment_check,
    predicted_enumerator, weight_enumerator, weight_via_charsum, CodeConfig, DefiningSetCode,
    Predicted, Prediction, PredictionParams, WeightEnumerator,
};
use crate::cyclotomic::{char_sum, value_sum};
use crate::designs::{
    boolean_support, classify_design, eto1_check, hkm_function, hkm_set, image_set, is_skew_set,
    joint_counts, maschietti_set, paley_set, AbelianGroup, DefiningSet, DesignClass,
    MaschiettiCase,
};
use crate::error::{Error, Result};
use crate::func::{FuncSpec, Target};
use crate::gf::{Elem, Field};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::Skipped(r) => write!(f, "skipped ({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub case_id: String,
    pub expected: String,
    pub actual: String,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub elapsed_ms: u128,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        !matches!(self.verdict, Verdict::Fail)
    }
}

/// Result of one case before timing is attached.
struct Outcome {
    expected: String,
    actual: String,
    pass: bool,
}

fn outcome(expected: impl Into<String>, actual: impl Into<String>) -> Outcome {
    let expected = expected.into();
    let actual = actual.into();
    Outcome {
        pass: expected == actual,
        expected,
        actual,
    }
}

fn enumerate(set: DefiningSet) -> Result<(DefiningSetCode, WeightEnumerator)> {
    let code = DefiningSetCode::new(set)?;
    let e = weight_enumerator(&code, &CodeConfig::default())?;
    Ok((code, e))
}

fn describe(e: &WeightEnumerator) -> String {
    match minimum_distance(e) {
        Ok(d) => format!("[{},{},{}] {}", e.n, e.k, d, e),
        Err(_) => format!("[{},{}] {}", e.n, e.k, e),
    }
}

fn describe_prediction(p: &Predicted) -> String {
    match p {
        Predicted::Enumerator(e) => describe(e),
        other => other.to_string(),
    }
}

/// Compares an enumerator with a prediction and, when authorized, the moment identities.
fn code_vs_prediction(code: &DefiningSetCode, e: &WeightEnumerator, pred: &Predicted) -> Outcome {
    let w = dual_distance_witness(code);
    let pless = pless_moment_check(e, &w);
    let expected = format!("{} | moments ok", describe_prediction(pred));
    let actual = format!(
        "{} | moments {}",
        if pred.matches(e) { describe_prediction(pred) } else { describe(e) },
        if pless.all_pass() { "ok" } else { "broken" }
    );
    outcome(expected, actual)
}

fn params(p: u32, m: u32) -> PredictionParams {
    PredictionParams {
        p,
        m,
        ..Default::default()
    }
}

fn skew_case(p: u32, m: u32) -> Result<Outcome> {
    let field = Field::new(p, m)?;
    let set = paley_set(&field)?;
    let skew = is_skew_set(&field, set.elems());
    let (code, e) = enumerate(set)?;
    let pred = predicted_enumerator(Prediction::Skew, &params(p, m))?;
    let g = griesmer_check(e.n, e.k, minimum_distance(&e)?, p);
    let base = code_vs_prediction(&code, &e, &pred);
    Ok(outcome(
        format!("skew | {} | griesmer meets", base.expected),
        format!(
            "{} | {} | griesmer {g}",
            if skew { "skew" } else { "not skew" },
            base.actual
        ),
    ))
}

fn qr_case(p: u32, m: u32) -> Result<Outcome> {
    let field = Field::new(p, m)?;
    let (code, e) = enumerate(paley_set(&field)?)?;
    let pred = predicted_enumerator(Prediction::QuadraticResidue, &params(p, m))?;
    Ok(code_vs_prediction(&code, &e, &pred))
}

fn qf_case(p: u32, m: u32, expr: &str, u: Option<Elem>) -> Result<Outcome> {
    let field = Field::new(p, m)?;
    let f = FuncSpec::parse(expr, &field, u, Target::Field)?;
    let e_fib = eto1_check(&field, &f)
        .ok_or_else(|| Error::PreconditionFailed(format!("{f} is not e-to-1")))?;
    let rank = quadratic_rank(&field, &f)?.r;
    let trace_rank = quadratic_rank(&field, &f.with_target(Target::Trace))?.r;
    let (code, e) = enumerate(image_set(&field, &f)?)?;
    let pred = predicted_enumerator(
        Prediction::QuadraticForm,
        &PredictionParams {
            e: Some(e_fib),
            rank: Some(rank),
            ..params(p, m)
        },
    )?;
    let base = code_vs_prediction(&code, &e, &pred);
    Ok(Outcome {
        expected: format!("e={e_fib} r={rank} | {}", base.expected),
        actual: format!("e={e_fib} r={rank} (trace rank {trace_rank}) | {}", base.actual),
        pass: base.pass,
    })
}

fn singer_parameters(m: u32) -> DesignClass {
    DesignClass::DifferenceSet {
        v: (1 << m) - 1,
        k: (1 << (m - 1)) - 1,
        lambda: (1 << (m - 2)) - 1,
    }
}

fn maschietti_ds_case(m: u32) -> Result<Outcome> {
    let field = Field::new(2, m)?;
    let group = AbelianGroup::Cyclic((1 << m) - 1);
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for case in MaschiettiCase::ALL {
        let set = maschietti_set(&field, case)?;
        let class = classify_design(&group, &set.dlogs()?)?;
        expected.push(format!("{case}: {}", singer_parameters(m)));
        actual.push(format!("{case}: {class}"));
    }
    Ok(outcome(expected.join("; "), actual.join("; ")))
}

/// Exponent pair `(i, j)` with `rho = 2^i + 2^j`.
fn hyperoval_pair(m: u32, case: MaschiettiCase) -> Result<(u32, u32)> {
    match case {
        MaschiettiCase::Segre => Ok((1, 2)),
        MaschiettiCase::GlynnI if m % 4 == 3 => Ok(((m + 1) / 4, m.div_ceil(2))),
        MaschiettiCase::GlynnI => Ok((m.div_ceil(2), (3 * m + 1) / 4)),
        other => Err(Error::PreconditionFailed(format!("{other} is not of the form 2^i + 2^j"))),
    }
}

fn hyperoval_case(m: u32, case: MaschiettiCase) -> Result<Outcome> {
    let field = Field::new(2, m)?;
    let (i, j) = hyperoval_pair(m, case)?;
    let report = hyperoval_spectrum_check(&field, i, j)?;
    let (code, e) = enumerate(maschietti_set(&field, case)?)?;
    let pred = predicted_enumerator(Prediction::Hyperoval, &params(2, m))?;
    let base = code_vs_prediction(&code, &e, &pred);
    Ok(outcome(
        format!("spectrum ok | {}", base.expected),
        format!(
            "spectrum {} | {}",
            if report.holds() { "ok" } else { "violated" },
            base.actual
        ),
    ))
}

fn glynn2_case(m: u32) -> Result<Outcome> {
    let reference_table: BTreeMap<u32, &[(u64, u64)]> = BTreeMap::from([
        (5, &[(0, 1), (6, 10), (8, 15), (10, 6)][..]),
        (7, &[(0, 1), (28, 36), (32, 63), (36, 28)][..]),
        (9, &[(0, 1), (112, 9), (120, 108), (128, 285), (136, 108), (144, 1)][..]),
        (11, &[(0, 1), (480, 22), (496, 440), (512, 1155), (528, 408), (544, 22)][..]),
    ]);
    let weights = reference_table
        .get(&m)
        .ok_or_else(|| Error::PreconditionFailed(format!("no reference enumerator for m = {m}")))?;
    let field = Field::new(2, m)?;
    let (_, e) = enumerate(maschietti_set(&field, MaschiettiCase::GlynnII)?)?;
    let reference = WeightEnumerator::from_weights(2, m, (1 << (m - 1)) - 1, m, weights);
    let mut expected = describe(&reference);
    let mut actual = describe(&e);
    if m >= 9 {
        let pred = predicted_enumerator(Prediction::GlynnII, &params(2, m))?;
        expected.push_str(" | five weights");
        actual.push_str(if pred.matches(&e) { " | five weights" } else { " | other weights" });
    }
    Ok(outcome(expected, actual))
}

/// First quadratic Boolean function on GF(2^m) in the deterministic walk with
/// rank `r` and `f^(0) = walsh_zero`.
pub fn find_quadratic(field: &Field, r: u32, walsh_zero: i64) -> Result<FuncSpec> {
    quadratic_boolean_walk(field)
        .take(1 << 16)
        .find(|f| {
            quadratic_rank(field, f).map(|q| q.r) == Ok(r)
                && walsh_transform(field, f).map(|s| s.values()[0]) == Ok(walsh_zero)
        })
        .ok_or_else(|| {
            Error::PreconditionFailed(format!(
                "no quadratic function of rank {r} with f^(0) = {walsh_zero} found"
            ))
        })
}

fn bent_case(m: u32) -> Result<Outcome> {
    let field = Field::new(2, m)?;
    let f = find_quadratic(&field, m, 1 << (m / 2))?;
    let spectrum = walsh_transform(&field, &f)?;
    let class = classify_spectrum(&spectrum);
    let set = boolean_support(&field, &f)?;
    let design = classify_design(&AbelianGroup::Additive(field.clone()), &set.indices())?;
    let n_f = set.len() as u64;
    let (code, e) = enumerate(set)?;
    let pred = predicted_enumerator(
        Prediction::Bent,
        &PredictionParams {
            n_f: Some(n_f),
            ..params(2, m)
        },
    )?;
    let base = code_vs_prediction(&code, &e, &pred);
    let menon = DesignClass::DifferenceSet {
        v: 1 << m,
        k: ((1 << (m - 1)) - (1 << ((m - 2) / 2))) as u32,
        lambda: (1 << (m - 2)) - (1 << ((m - 2) / 2)),
    };
    Ok(outcome(
        format!("{f}: bent, {menon} | {}", base.expected),
        format!("{f}: {}, {design} | {}", class.kind, base.actual),
    ))
}

fn semibent_case(m: u32) -> Result<Outcome> {
    let field = Field::new(2, m)?;
    let f = find_quadratic(&field, m - 1, 1 << m.div_ceil(2))?;
    let class = classify_spectrum(&walsh_transform(&field, &f)?);
    let set = boolean_support(&field, &f)?;
    let n_f = set.len() as u64;
    let (code, e) = enumerate(set)?;
    let pred = predicted_enumerator(
        Prediction::Semibent,
        &PredictionParams {
            n_f: Some(n_f),
            ..params(2, m)
        },
    )?;
    let base = code_vs_prediction(&code, &e, &pred);
    Ok(outcome(
        format!("{f}: semibent | {}", base.expected),
        format!("{f}: {} | {}", class.kind, base.actual),
    ))
}

fn ab_case(m: u32) -> Result<Outcome> {
    let field = Field::new(2, m)?;
    let g = FuncSpec::monomial(Elem::ONE, 3, Target::Field);
    let ab = is_almost_bent(&field, &g)?;
    let lambda = lambda_spectrum(&field, &g, Elem::ONE, Elem::ZERO)?;
    let set = boolean_support(&field, &g.with_target(Target::Trace))?;
    let n_f = set.len() as u64;
    let predicted_n_f = ((1i64 << (m - 1)) - lambda / 2) as u64;
    let (code, e) = enumerate(set)?;
    let pred = predicted_enumerator(
        Prediction::AlmostBent,
        &PredictionParams {
            walsh_zero: Some(lambda),
            ..params(2, m)
        },
    )?;
    let base = code_vs_prediction(&code, &e, &pred);
    Ok(outcome(
        format!("almost bent, n_f={predicted_n_f} | {}", base.expected),
        format!(
            "{}, n_f={n_f} | {}",
            if ab { "almost bent" } else { "not almost bent" },
            base.actual
        ),
    ))
}

/// Quadratic Boolean functions from the walk, grouped by rank.
pub fn quadratic_samples(field: &Field, per_rank: usize) -> BTreeMap<u32, Vec<FuncSpec>> {
    let m = field.m();
    let ranks: Vec<u32> = (1..=m / 2).map(|i| 2 * i).collect();
    let mut out: BTreeMap<u32, Vec<FuncSpec>> = BTreeMap::new();
    for f in quadratic_boolean_walk(field).take(1 << 16) {
        let Ok(r) = quadratic_rank(field, &f) else { continue };
        let bucket = out.entry(r.r).or_default();
        if r.r > 0 && bucket.len() < per_rank {
            bucket.push(f);
        }
        if ranks.iter().all(|r| out.get(r).is_some_and(|b| b.len() >= per_rank)) {
            break;
        }
    }
    out.remove(&0);
    out
}

fn qbf_case(m: u32, r: u32) -> Result<Outcome> {
    let field = Field::new(2, m)?;
    let samples = quadratic_samples(&field, 8);
    let funcs = samples
        .get(&r)
        .ok_or_else(|| Error::PreconditionFailed(format!("no rank-{r} sample found")))?;
    let mut failures = Vec::new();
    for f in funcs {
        let s = walsh_transform(&field, f)?;
        let table = quadratic_walsh_counts(m, r)?;
        let (code, e) = enumerate(boolean_support(&field, f)?)?;
        let pred = predicted_enumerator(
            Prediction::QuadraticBoolean,
            &PredictionParams {
                rank: Some(r),
                walsh_zero: Some(s.values()[0]),
                ..params(2, m)
            },
        )?;
        let o = code_vs_prediction(&code, &e, &pred);
        if s.value_counts() != table || !o.pass {
            failures.push(format!("{f}: {}", o.actual));
        }
    }
    let expected = format!("{} rank-{r} samples match", funcs.len());
    let actual = if failures.is_empty() {
        expected.clone()
    } else {
        format!("mismatches: {}", failures.join("; "))
    };
    Ok(outcome(expected, actual))
}

fn hkm_case(h: u32) -> Result<Outcome> {
    let (code, e) = enumerate(hkm_set(h)?)?;
    let pred = predicted_enumerator(
        Prediction::Hkm,
        &PredictionParams {
            h: Some(h),
            ..Default::default()
        },
    )?;
    Ok(code_vs_prediction(&code, &e, &pred))
}

/// Every `stride`-th power of alpha, at least `count` of them, plus zero when asked.
fn strided(field: &Field, count: usize) -> Vec<Elem> {
    let order = field.q() as usize - 1;
    let stride = (order / count).max(1);
    (0..order).step_by(stride).map(|t| field.exp(t as i64)).collect()
}

/// The supporting facts used for the HKM weight distribution, checked on all
/// `b`, `u` when `exhaustive`, else on a strided sample of at least 100.
pub fn hkm_auxiliary_checks(h: u32, exhaustive: bool) -> Result<Vec<(&'static str, bool)>> {
    let m = 3 * h;
    let field = Field::new(3, m)?;
    let e = 3u64.pow(h);
    let sample: Vec<Elem> = if exhaustive {
        field.nonzero_elements().collect()
    } else {
        strided(&field, 120)
    };
    let q_u = |u: Elem| -> Result<u32> {
        let f = FuncSpec::new(vec![(u, e + 1), (Elem::ONE, 2)], Target::Trace)?;
        Ok(quadratic_rank(&field, &f)?.r)
    };
    let mut us = sample.clone();
    us.push(Elem::ZERO);

    let rank_q1 = q_u(Elem::ONE)? == m;
    let mut rank_set = true;
    let mut ding_cs = true;
    for &u in &us {
        let r = q_u(u)?;
        rank_set &= [m, m - h, m - 2 * h].contains(&r);
        let other = field.sub(field.neg(Elem::ONE), u);
        ding_cs &= r == m || q_u(other)? == m;
    }
    let mut rank_b = true;
    for &b in &sample {
        let f = FuncSpec::monomial(b, e + 1, Target::Trace);
        rank_b &= quadratic_rank(&field, &f)?.r == m;
    }

    let g = hkm_function(h);
    let zeros: Vec<Elem> = field.elements().filter(|&x| g.eval_trace(&field, x) == 0).collect();
    let d0: Vec<Elem> = zeros.iter().copied().filter(|x| !x.is_zero()).collect();
    let base = 3u64.pow(m - 2);
    let s = 3u64.pow(2 * (h - 1));
    let ddd = [
        vec![base, base, base],
        vec![base + 2 * s, base - s, base - s],
        vec![base - 2 * s, base + s, base + s],
    ];
    let chi_values = [-1i64, 3i64.pow(2 * h - 1) - 1, -(3i64.pow(2 * h - 1)) - 1];
    let mut n_b0 = true;
    let mut triples = true;
    let mut chi = true;
    for &b in &sample {
        let n = joint_counts(&field, &g, b);
        n_b0 &= [base, base + 2 * s, base - 2 * s].contains(&n[0]);
        triples &= ddd.contains(&n);
        chi &= char_sum(&field, &d0, b)
            .as_i64()
            .is_some_and(|v| chi_values.contains(&v));
    }
    let partition = {
        let set = hkm_set(h)?;
        let mut union: Vec<Elem> = set.elems().to_vec();
        union.extend(set.negated().elems());
        union.push(Elem::ZERO);
        union.sort();
        let disjoint = union.windows(2).all(|w| w[0] != w[1]);
        disjoint && union == zeros
    };
    Ok(vec![
        ("rank of Q_1 is m", rank_q1),
        ("rank of Q_u in {m, m-h, m-2h}", rank_set),
        ("rank of Tr(b x^(e+1)) is m", rank_b),
        ("Q_u or Q_(-1-u) has rank m", ding_cs),
        ("N_(b,0) takes three values", n_b0),
        ("(N_(b,0), N_(b,1), N_(b,2)) in the three triples", triples),
        ("chi_1(b D_0) takes three values", chi),
        ("D, -D, {0} partition the zeros", partition),
    ])
}

fn hkm_auxiliary_case(h: u32, exhaustive: bool) -> Result<Outcome> {
    let checks = hkm_auxiliary_checks(h, exhaustive)?;
    let expected: Vec<String> = checks.iter().map(|(n, _)| format!("{n}: yes")).collect();
    let actual: Vec<String> = checks
        .iter()
        .map(|(n, ok)| format!("{n}: {}", if *ok { "yes" } else { "no" }))
        .collect();
    Ok(outcome(expected.join("; "), actual.join("; ")))
}

/// Quadratic forms `Tr(c x^{p^i + p^j})` and two-term sums over GF(p^m).
pub fn sample_quadratic_forms(field: &Field) -> Vec<FuncSpec> {
    let p = field.p() as u64;
    let m = field.m();
    let mut exps = Vec::new();
    for i in 0..m {
        for j in i..m {
            exps.push(p.pow(i) + p.pow(j));
        }
    }
    let coeffs = [Elem::ONE, field.alpha(), field.exp(2), field.exp(5)];
    let mut out = Vec::new();
    for (k, &e1) in exps.iter().enumerate() {
        for &c in &coeffs {
            out.push(FuncSpec::monomial(c, e1, Target::Trace));
        }
        for &e2 in &exps[k + 1..] {
            out.push(
                FuncSpec::new(vec![(Elem::ONE, e1), (field.alpha(), e2)], Target::Trace)
                    .expect("distinct exponents"),
            );
        }
    }
    out
}

/// `sum_{y in GF(p)*} sum_x zeta^{y f(x)}` as an exact integer.
pub fn quadratic_galois_sum(field: &Field, f: &FuncSpec) -> Result<i64> {
    value_sum(field, |x| f.eval_trace(field, x))
        .galois_trace()
        .as_i64()
        .ok_or(Error::NonRationalSum)
}

fn charsum_case(p: u32, m: u32) -> Result<Outcome> {
    let field = Field::new(p, m)?;
    let mut bad = Vec::new();
    let forms = sample_quadratic_forms(&field);
    for f in &forms {
        let r = quadratic_rank(&field, f)?.r;
        let total = quadratic_galois_sum(&field, f)?;
        let ok = if r % 2 == 0 {
            total.unsigned_abs() == (p as u64 - 1) * (p as u64).pow(m - r / 2)
        } else {
            total == 0
        };
        if !ok {
            bad.push(format!("{f}: r={r} sum={total}"));
        }
    }
    let code = DefiningSetCode::new(paley_set(&field)?)?;
    let weights_ok = field
        .elements()
        .all(|x| weight_via_charsum(&code, x).ok() == Some(code.weight(x)));
    let expected = format!("{} forms match | character-sum weights agree", forms.len());
    let actual = format!(
        "{} | character-sum weights {}",
        if bad.is_empty() {
            format!("{} forms match", forms.len())
        } else {
            bad.join("; ")
        },
        if weights_ok { "agree" } else { "disagree" }
    );
    Ok(outcome(expected, actual))
}

type CaseFn = fn() -> Result<Outcome>;

fn registry() -> Vec<(&'static str, CaseFn)> {
    vec![
        ("ab-m5", || ab_case(5)),
        ("ab-m7", || ab_case(7)),
        ("bent-m4", || bent_case(4)),
        ("bent-m6", || bent_case(6)),
        ("bent-m8", || bent_case(8)),
        ("glynn1-m5", || hyperoval_case(5, MaschiettiCase::GlynnI)),
        ("glynn1-m7", || hyperoval_case(7, MaschiettiCase::GlynnI)),
        ("glynn2-m11", || glynn2_case(11)),
        ("glynn2-m5", || glynn2_case(5)),
        ("glynn2-m7", || glynn2_case(7)),
        ("glynn2-m9", || glynn2_case(9)),
        ("hkm-h1", || hkm_case(1)),
        ("hkm-h3", || hkm_case(3)),
        ("hkm-aux-h1", || hkm_auxiliary_case(1, true)),
        ("hkm-aux-h3", || hkm_auxiliary_case(3, false)),
        ("maschietti-ds-m5", || maschietti_ds_case(5)),
        ("maschietti-ds-m7", || maschietti_ds_case(7)),
        ("qbf-m6-r2", || qbf_case(6, 2)),
        ("qbf-m6-r4", || qbf_case(6, 4)),
        ("qbf-m6-r6", || qbf_case(6, 6)),
        ("qf-charsum-p3m2", || charsum_case(3, 2)),
        ("qf-charsum-p3m3", || charsum_case(3, 3)),
        ("qf-charsum-p3m4", || charsum_case(3, 4)),
        ("qf-charsum-p5m2", || charsum_case(5, 2)),
        ("qf-charsum-p5m3", || charsum_case(5, 3)),
        ("qf-gold-q27", || qf_case(3, 3, "1@4", None)),
        ("qf-p3m3", || qf_case(3, 3, "1@10,-1*u@6,-1*u^2@2", Some(Field::new(3, 3)?.alpha()))),
        ("qf-p3m5", || qf_case(3, 5, "1@10,-1*u@6,-1*u^2@2", Some(Field::new(3, 5)?.alpha()))),
        ("qr-p3m2", || qr_case(3, 2)),
        ("qr-p3m3", || qr_case(3, 3)),
        ("qr-p3m4", || qr_case(3, 4)),
        ("qr-p5m2", || qr_case(5, 2)),
        ("qr-p5m3", || qr_case(5, 3)),
        ("qr-p7m2", || qr_case(7, 2)),
        ("segre-m5", || hyperoval_case(5, MaschiettiCase::Segre)),
        ("segre-m7", || hyperoval_case(7, MaschiettiCase::Segre)),
        ("segre-m9", || hyperoval_case(9, MaschiettiCase::Segre)),
        ("semibent-m5", || semibent_case(5)),
        ("semibent-m7", || semibent_case(7)),
        ("skew-q11", || skew_case(11, 1)),
        ("skew-q19", || skew_case(19, 1)),
        ("skew-q23", || skew_case(23, 1)),
        ("skew-q27", || skew_case(3, 3)),
        ("skew-q7", || skew_case(7, 1)),
    ]
}

/// All case ids, sorted.
pub fn case_ids() -> Vec<&'static str> {
    let mut ids: Vec<&str> = registry().into_iter().map(|(id, _)| id).collect();
    ids.sort_unstable();
    ids
}

fn run(id: &str, case: CaseFn) -> CaseReport {
    let start = Instant::now();
    let (expected, actual, verdict) = match case() {
        Ok(o) => (
            o.expected,
            o.actual,
            if o.pass { Verdict::Pass } else { Verdict::Fail },
        ),
        Err(Error::SizeLimit(why)) => (String::new(), String::new(), Verdict::Skipped(why)),
        Err(e) => (String::new(), format!("error: {e}"), Verdict::Fail),
    };
    CaseReport {
        case_id: id.to_string(),
        expected,
        actual,
        verdict,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Runs one case by exact id.
pub fn run_case(id: &str) -> Result<CaseReport> {
    registry()
        .into_iter()
        .find(|(name, _)| *name == id)
        .map(|(name, case)| run(name, case))
        .ok_or_else(|| Error::UnknownKind(format!("case {id:?}")))
}

/// Runs every case whose id equals `filter` or starts with `filter-`
/// (all cases when `None`), in parallel, reported in id order.
pub fn run_cases(filter: Option<&str>) -> Result<Vec<CaseReport>> {
    let selected: Vec<(&'static str, CaseFn)> = registry()
        .into_iter()
        .filter(|(id, _)| match filter {
            None => true,
            Some(f) => *id == f || id.starts_with(&format!("{f}-")),
        })
        .collect();
    if selected.is_empty() {
        return Err(Error::UnknownKind(format!(
            "no case matches {:?}",
            filter.unwrap_or_default()
        )));
    }
    let mut reports: Vec<CaseReport> = selected.into_par_iter().map(|(id, c)| run(id, c)).collect();
    reports.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids = case_ids();
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup);
        assert!(ids.contains(&"hkm-h3"));
        assert!(run_case("nope").is_err());
        assert!(run_cases(Some("nope")).is_err());
    }

    #[test]
    fn small_cases_pass() {
        for id in ["skew-q7", "qr-p3m2", "hkm-h1", "glynn2-m5", "maschietti-ds-m5", "qf-charsum-p3m2"] {
            let r = run_case(id).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        }
    }

    #[test]
    fn prefix_filter() {
        let reports = run_cases(Some("skew")).unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(|r| r.passed()));
    }
}
