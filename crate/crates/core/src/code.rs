//! The linear code `C_D = {(Tr(x d_1), ..., Tr(x d_n)) : x in GF(q)}`, its
//! exact weight enumerator, and the bounds and identities checked against it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolfn::WalshSpectrum;
use crate::cyclotomic::char_sum;
use crate::designs::DefiningSet;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::rank_mod_p;

/// Default cap on `p^m * n` trace evaluations.
pub const DEFAULT_MAX_WORK: u64 = 1 << 34;

#[derive(Clone, Debug)]
pub struct DefiningSetCode {
    set: DefiningSet,
}

impl DefiningSetCode {
    pub fn new(set: DefiningSet) -> Result<DefiningSetCode> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(DefiningSetCode { set })
    }

    pub fn field(&self) -> &Field {
        self.set.field()
    }

    pub fn set(&self) -> &DefiningSet {
        &self.set
    }

    pub fn n(&self) -> usize {
        self.set.len()
    }

    /// `c_x`, coordinate `i` being `Tr(x d_i)`.
    pub fn codeword(&self, x: Elem) -> Vec<u32> {
        let f = self.field();
        self.set.elems().iter().map(|&d| f.trace(f.mul(x, d))).collect()
    }

    pub fn weight(&self, x: Elem) -> u64 {
        self.codeword(x).iter().filter(|&&c| c != 0).count() as u64
    }

    /// Rows `c_{beta_i}` for the coordinate basis `beta_i = alpha^i`.
    pub fn generator_matrix(&self) -> Vec<Vec<u32>> {
        let f = self.field();
        (0..f.m() as i64).map(|i| self.codeword(f.exp(i))).collect()
    }

    /// Header `p m n`, then one line of digits per generator row.
    pub fn export_generator(&self) -> String {
        let f = self.field();
        let mut out = format!("{} {} {}\n", f.p(), f.m(), self.n());
        for row in self.generator_matrix() {
            let line: Vec<String> = row.iter().map(|d| d.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// GF(p)-rank of the `m x n` generator matrix.
    pub fn rank(&self) -> u32 {
        rank_mod_p(&self.generator_matrix(), self.field().p()) as u32
    }
}

/// Parses the generator-matrix format back into `(p, m, n, rows)`.
pub fn parse_generator(text: &str) -> Result<(u32, u32, usize, Vec<Vec<u32>>)> {
    let mut lines = text.lines();
    let header: Vec<u64> = lines
        .next()
        .ok_or_else(|| Error::Parse("empty generator matrix".into()))?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header field {t:?}"))))
        .collect::<Result<_>>()?;
    let [p, m, n] = header[..] else {
        return Err(Error::Parse("header must be `p m n`".into()));
    };
    let rows: Vec<Vec<u32>> = lines
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad digit {t:?}"))))
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<_>>()?;
    if rows.len() != m as usize || rows.iter().any(|r| r.len() != n as usize) {
        return Err(Error::Parse("generator matrix shape does not match header".into()));
    }
    if rows.iter().flatten().any(|&d| d as u64 >= p) {
        return Err(Error::Parse("digit out of range".into()));
    }
    Ok((p as u32, m as u32, n as usize, rows))
}

/// Weight distribution of a code, `A_0 = 1` included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub p: u32,
    pub m: u32,
    pub n: u64,
    pub k: u32,
    pub counts: BTreeMap<u64, u64>,
}

#[derive(Serialize, Deserialize)]
struct WeightEntry {
    w: u64,
    #[serde(rename = "A")]
    a: u64,
}

#[derive(Serialize, Deserialize)]
struct EnumeratorWire {
    p: u32,
    m: u32,
    n: u64,
    k: u32,
    weights: Vec<WeightEntry>,
}

impl WeightEnumerator {
    pub fn from_weights(p: u32, m: u32, n: u64, k: u32, weights: &[(u64, u64)]) -> WeightEnumerator {
        let mut counts = BTreeMap::new();
        for &(w, a) in weights {
            if a > 0 {
                *counts.entry(w).or_default() += a;
            }
        }
        WeightEnumerator { p, m, n, k, counts }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn count(&self, w: u64) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn nonzero_weights(&self) -> BTreeSet<u64> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    pub fn to_json(&self) -> String {
        let wire = EnumeratorWire {
            p: self.p,
            m: self.m,
            n: self.n,
            k: self.k,
            weights: self.counts.iter().map(|(&w, &a)| WeightEntry { w, a }).collect(),
        };
        serde_json::to_string(&wire).expect("enumerator serializes")
    }

    pub fn from_json(s: &str) -> Result<WeightEnumerator> {
        let wire: EnumeratorWire =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut counts = BTreeMap::new();
        for e in wire.weights {
            if counts.insert(e.w, e.a).is_some() {
                return Err(Error::Parse(format!("weight {} listed twice", e.w)));
            }
        }
        Ok(WeightEnumerator {
            p: wire.p,
            m: wire.m,
            n: wire.n,
            k: wire.k,
            counts,
        })
    }
}

impl fmt::Display for WeightEnumerator {
    /// `1 + 12z^2 + 8z^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .counts
            .iter()
            .map(|(&w, &a)| if w == 0 { a.to_string() } else { format!("{a}z^{w}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeConfig {
    pub max_work: u64,
}

impl Default for CodeConfig {
    fn default() -> Self {
        CodeConfig {
            max_work: DEFAULT_MAX_WORK,
        }
    }
}

/// Exact enumerator by running over every `x` in GF(q).
///
/// `Tr(alpha^s d_i)` is read from a table of `Tr(alpha^t)` at offset
/// `s + log d_i`. The dimension is `m - log_p |kernel|` and is cross-checked
/// against the rank of the generator matrix.
pub fn weight_enumerator(code: &DefiningSetCode, config: &CodeConfig) -> Result<WeightEnumerator> {
    let f = code.field();
    let q = f.q() as u64;
    let n = code.n() as u64;
    if q.saturating_mul(n) > config.max_work {
        return Err(Error::SizeLimit(format!(
            "enumeration needs {q} x {n} trace evaluations, budget is {}",
            config.max_work
        )));
    }
    let order = (q - 1) as usize;
    let mut traces = Vec::with_capacity(2 * order);
    let mut power = Elem::ONE;
    for _ in 0..order {
        traces.push(f.trace(power) as u8);
        power = f.mul(power, f.alpha());
    }
    traces.extend_from_within(..);
    let logs: Vec<usize> = code
        .set()
        .elems()
        .iter()
        .filter(|d| !d.is_zero())
        .map(|&d| f.dlog(d).map(|l| l as usize))
        .collect::<Result<_>>()?;

    let merge = |mut a: BTreeMap<u64, u64>, b: BTreeMap<u64, u64>| {
        for (w, c) in b {
            *a.entry(w).or_default() += c;
        }
        a
    };
    let raw: BTreeMap<u64, u64> = (0..order)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, s| {
            let row = &traces[s..s + order];
            let wt = logs.iter().filter(|&&l| row[l] != 0).count() as u64;
            *acc.entry(wt).or_default() += 1;
            acc
        })
        .reduce(BTreeMap::new, merge);
    let mut raw = raw;
    *raw.entry(0).or_default() += 1;

    let kernel = raw[&0];
    let p = f.p() as u64;
    let mut log_kernel = 0u32;
    let mut size = 1u64;
    while size < kernel {
        size *= p;
        log_kernel += 1;
    }
    let rank = code.rank();
    if size != kernel {
        return Err(Error::DimensionMismatch {
            count: u32::MAX,
            rank,
        });
    }
    let k = f.m() - log_kernel;
    if k != rank {
        return Err(Error::DimensionMismatch { count: k, rank });
    }
    let counts = raw.into_iter().map(|(w, c)| (w, c / kernel)).collect();
    Ok(WeightEnumerator {
        p: f.p(),
        m: f.m(),
        n,
        k,
        counts,
    })
}

/// `((p-1) n - sum_{y in GF(p)*} chi_1(y x D)) / p`, with the inner sum taken
/// as the Galois trace of the cyclotomic integer `chi_1(x D)`.
pub fn weight_via_charsum(code: &DefiningSetCode, x: Elem) -> Result<u64> {
    let f = code.field();
    let p = f.p() as i64;
    let total = char_sum(f, code.set().elems(), x)
        .galois_trace()
        .is_rational()
        .ok_or(Error::NonRationalSum)?;
    let numerator = BigInt::from((p - 1) * code.n() as i64) - total;
    let p_big = BigInt::from(p);
    if !(&numerator % &p_big).is_zero() {
        return Err(Error::NonIntegralWeight);
    }
    (numerator / p_big).to_u64().ok_or(Error::NonIntegralWeight)
}

pub fn minimum_distance(e: &WeightEnumerator) -> Result<u64> {
    if e.k == 0 {
        return Err(Error::ZeroDimensional);
    }
    e.nonzero_weights()
        .first()
        .copied()
        .ok_or(Error::ZeroDimensional)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GriesmerStatus {
    Meets,
    Satisfies,
    Violates,
}

impl fmt::Display for GriesmerStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GriesmerStatus::Meets => "meets",
            GriesmerStatus::Satisfies => "satisfies",
            GriesmerStatus::Violates => "violates",
        })
    }
}

/// `sum_{i<k} ceil(d / p^i)`.
pub fn griesmer_bound(k: u32, d: u64, p: u32) -> u64 {
    let mut pi = 1u64;
    let mut g = 0;
    for _ in 0..k {
        g += d.div_ceil(pi);
        pi = pi.saturating_mul(p as u64);
    }
    g
}

pub fn griesmer_check(n: u64, k: u32, d: u64, p: u32) -> GriesmerStatus {
    let g = griesmer_bound(k, d, p);
    match n.cmp(&g) {
        std::cmp::Ordering::Equal => GriesmerStatus::Meets,
        std::cmp::Ordering::Greater => GriesmerStatus::Satisfies,
        std::cmp::Ordering::Less => GriesmerStatus::Violates,
    }
}

/// Structural lower bounds on the dual distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualDistanceWitness {
    /// No identically-zero coordinate.
    pub at_least_2: bool,
    /// Additionally no two coordinates are GF(p)-multiples of each other.
    pub at_least_3: bool,
}

/// `d_i` and `d_j` are proportional over GF(p) exactly when their logs agree
/// modulo `(q-1)/(p-1)`.
pub fn dual_distance_witness(code: &DefiningSetCode) -> DualDistanceWitness {
    let set = code.set();
    let at_least_2 = !set.contains_zero();
    if !at_least_2 {
        return DualDistanceWitness {
            at_least_2,
            at_least_3: false,
        };
    }
    let f = code.field();
    let classes = (f.q() - 1) / (f.p() - 1);
    let mut seen = BTreeSet::new();
    let at_least_3 = set
        .elems()
        .iter()
        .all(|&d| seen.insert(f.dlog(d).expect("nonzero") % classes));
    DualDistanceWitness {
        at_least_2,
        at_least_3,
    }
}

/// Outcome of the first three power-moment identities. `None` means the
/// witness does not authorize that identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PlessReport {
    pub count: bool,
    pub first: Option<bool>,
    pub second: Option<bool>,
}

impl PlessReport {
    pub fn all_pass(&self) -> bool {
        self.count && self.first != Some(false) && self.second != Some(false)
    }
}

pub fn pless_moment_check(e: &WeightEnumerator, w: &DualDistanceWitness) -> PlessReport {
    let p = e.p as u128;
    let n = e.n as u128;
    let k = e.k;
    let pk = p.pow(k);
    let count = e.counts.values().map(|&a| a as u128).sum::<u128>() == pk;
    let first_sum: u128 = e.counts.iter().map(|(&w, &a)| w as u128 * a as u128).sum();
    let second_sum: u128 = e
        .counts
        .iter()
        .map(|(&w, &a)| w as u128 * w as u128 * a as u128)
        .sum();
    let first = (w.at_least_2 && k >= 1).then(|| first_sum * p == n * (p - 1) * pk);
    let second = (w.at_least_3 && k >= 1)
        .then(|| second_sum * p * p == n * (p - 1) * pk * (n * (p - 1) + 1));
    PlessReport {
        count,
        first,
        second,
    }
}

/// Closed forms the enumeration is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prediction {
    /// One-weight codes from skew sets.
    Skew,
    /// Codes from the nonzero squares.
    QuadraticResidue,
    /// Codes from the image of an e-to-1 quadratic form.
    QuadraticForm,
    /// Three-weight codes from hyperoval difference sets.
    Hyperoval,
    /// Two-weight codes from bent supports.
    Bent,
    /// Three-weight codes from semibent supports.
    Semibent,
    /// Supports of `Tr(g)` for almost-bent `g`.
    AlmostBent,
    /// Supports of quadratic Boolean functions.
    QuadraticBoolean,
    /// The ternary cyclic difference-set family.
    Hkm,
    /// The weight multiset read off any Walsh spectrum.
    BooleanSupport,
    /// The five admissible weights of the Glynn II family for `m >= 9`.
    GlynnII,
}

impl Prediction {
    pub const ALL: [Prediction; 11] = [
        Prediction::Skew,
        Prediction::QuadraticResidue,
        Prediction::QuadraticForm,
        Prediction::Hyperoval,
        Prediction::Bent,
        Prediction::Semibent,
        Prediction::AlmostBent,
        Prediction::QuadraticBoolean,
        Prediction::Hkm,
        Prediction::BooleanSupport,
        Prediction::GlynnII,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Prediction::Skew => "skew",
            Prediction::QuadraticResidue => "qr",
            Prediction::QuadraticForm => "qf",
            Prediction::Hyperoval => "hyperoval",
            Prediction::Bent => "bent",
            Prediction::Semibent => "semibent",
            Prediction::AlmostBent => "ab",
            Prediction::QuadraticBoolean => "qbf",
            Prediction::Hkm => "hkm",
            Prediction::BooleanSupport => "boolean",
            Prediction::GlynnII => "glynn2",
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Prediction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Prediction::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::UnknownKind(format!("prediction {s:?}")))
    }
}

/// Inputs for [`predicted_enumerator`]; each prediction reads the fields it needs.
#[derive(Clone, Debug, Default)]
pub struct PredictionParams {
    pub p: u32,
    pub m: u32,
    /// Fibre size of an e-to-1 function.
    pub e: Option<u64>,
    /// Quadratic-form rank.
    pub rank: Option<u32>,
    /// Support size of a Boolean function.
    pub n_f: Option<u64>,
    /// `f^(0)` for Boolean functions, `lambda_g(1, 0)` for almost-bent `g`.
    pub walsh_zero: Option<i64>,
    pub h: Option<u32>,
    pub spectrum: Option<WalshSpectrum>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicted {
    Enumerator(WeightEnumerator),
    /// Only the length, dimension and set of nonzero weights are claimed.
    WeightSet { n: u64, k: u32, weights: BTreeSet<u64> },
}

impl Predicted {
    pub fn matches(&self, actual: &WeightEnumerator) -> bool {
        match self {
            Predicted::Enumerator(e) => e == actual,
            Predicted::WeightSet { n, k, weights } => {
                *n == actual.n && *k == actual.k && *weights == actual.nonzero_weights()
            }
        }
    }
}

impl fmt::Display for Predicted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicted::Enumerator(e) => write!(f, "[{},{}] {}", e.n, e.k, e),
            Predicted::WeightSet { n, k, weights } => {
                write!(f, "[{n},{k}] weights {weights:?}")
            }
        }
    }
}

fn need<T: Copy>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::PreconditionFailed(format!("missing parameter: {what}")))
}

fn exact_div(num: i128, den: i128, what: &str) -> Result<u64> {
    if den == 0 || num % den != 0 || num / den < 0 {
        return Err(Error::PreconditionFailed(format!("{what} is not a non-negative integer")));
    }
    Ok((num / den) as u64)
}

fn odd_m(m: u32) -> Result<()> {
    if m.is_multiple_of(2) {
        Err(Error::EvenDegree(m))
    } else {
        Ok(())
    }
}

/// Three-weight table shared by semibent and almost-bent supports.
fn semibent_table(m: u32, n_f: u64) -> Result<WeightEnumerator> {
    odd_m(m)?;
    let q = 1i128 << m;
    let nf = n_f as i128;
    let s = 1i128 << ((m - 1) / 2);
    let prod = nf * (q - nf);
    let a1 = exact_div(prod - nf * s, q, "A_w1")?;
    let a3 = exact_div(prod + nf * s, q, "A_w3")?;
    let a2 = exact_div((q - 1) * q / 2 - prod, q / 2, "A_w2")?;
    let w1 = exact_div(nf - s, 2, "w1")?;
    let w2 = exact_div(nf, 2, "w2")?;
    let w3 = exact_div(nf + s, 2, "w3")?;
    Ok(WeightEnumerator::from_weights(
        2,
        m,
        n_f,
        m,
        &[(0, 1), (w1, a1), (w2, a2), (w3, a3)],
    ))
}

/// The enumerator (or admissible weight set) claimed for a family.
pub fn predicted_enumerator(which: Prediction, params: &PredictionParams) -> Result<Predicted> {
    let p = params.p;
    let m = params.m;
    let q = (p as u64).pow(m);
    let enumerator = |n: u64, k: u32, weights: &[(u64, u64)]| {
        Predicted::Enumerator(WeightEnumerator::from_weights(p, m, n, k, weights))
    };
    match which {
        Prediction::Skew => {
            if p == 2 {
                return Err(Error::EvenCharacteristic);
            }
            let w = exact_div(((p - 1) as u64 * q) as i128, 2 * p as i128, "weight")?;
            Ok(enumerator((q - 1) / 2, m, &[(0, 1), (w, q - 1)]))
        }
        Prediction::QuadraticResidue => {
            if p == 2 {
                return Err(Error::EvenCharacteristic);
            }
            let params = PredictionParams {
                e: Some(2),
                rank: Some(m),
                ..params.clone()
            };
            predicted_enumerator(Prediction::QuadraticForm, &params)
        }
        Prediction::QuadraticForm => {
            if p == 2 {
                return Err(Error::EvenCharacteristic);
            }
            let e = need(params.e, "e")?;
            let r = need(params.rank, "rank")?;
            if e == 0 || !(q - 1).is_multiple_of(e) {
                return Err(Error::PreconditionFailed(format!("e = {e} does not divide q - 1")));
            }
            let n = (q - 1) / e;
            let den = (e * p as u64) as i128;
            let pm1 = (p - 1) as i128;
            if r % 2 == 1 {
                let w = exact_div(pm1 * q as i128, den, "weight")?;
                Ok(enumerator(n, m, &[(0, 1), (w, q - 1)]))
            } else {
                let s = (p as i128).pow(m - r / 2);
                let w1 = exact_div(pm1 * (q as i128 - s), den, "weight")?;
                let w2 = exact_div(pm1 * (q as i128 + s), den, "weight")?;
                Ok(enumerator(n, m, &[(0, 1), (w1, (q - 1) / 2), (w2, (q - 1) / 2)]))
            }
        }
        Prediction::Hyperoval => {
            if p != 2 {
                return Err(Error::PreconditionFailed("binary family".into()));
            }
            odd_m(m)?;
            if m < 3 {
                return Err(Error::PreconditionFailed("m must be at least 3".into()));
            }
            let c = 1u64 << (m - 2);
            let s = 1u64 << ((m - 3) / 2);
            Ok(enumerator(
                (1 << (m - 1)) - 1,
                m,
                &[(0, 1), (c - s, c + s), (c, (1 << (m - 1)) - 1), (c + s, c - s)],
            ))
        }
        Prediction::Bent => {
            if p != 2 || m % 2 == 1 || m < 4 {
                return Err(Error::PreconditionFailed(format!(
                    "bent prediction needs p = 2 and even m >= 4, got p = {p}, m = {m}"
                )));
            }
            let n_f = need(params.n_f, "n_f")?;
            let half = 1u64 << (m - 1);
            let s = 1u64 << ((m - 2) / 2);
            if n_f != half - s && n_f != half + s {
                return Err(Error::PreconditionFailed(format!(
                    "n_f = {n_f} is not a bent support size"
                )));
            }
            let t = 1u64 << ((m - 4) / 2);
            let q1 = (1i128 << m) - 1;
            let ratio = exact_div(n_f as i128, s as i128, "n_f / 2^{(m-2)/2}")? as i128;
            let a1 = exact_div(q1 - ratio, 2, "A_w1")?;
            let a2 = exact_div(q1 + ratio, 2, "A_w2")?;
            Ok(enumerator(
                n_f,
                m,
                &[(0, 1), (n_f / 2 - t, a1), (n_f / 2 + t, a2)],
            ))
        }
        Prediction::Semibent => {
            if p != 2 {
                return Err(Error::PreconditionFailed("binary family".into()));
            }
            odd_m(m)?;
            let n_f = need(params.n_f, "n_f")?;
            let half = 1u64 << (m - 1);
            let s = 1u64 << ((m - 1) / 2);
            if ![half - s, half, half + s].contains(&n_f) {
                return Err(Error::PreconditionFailed(format!(
                    "n_f = {n_f} is not a semibent support size"
                )));
            }
            Ok(Predicted::Enumerator(semibent_table(m, n_f)?))
        }
        Prediction::AlmostBent => {
            if p != 2 {
                return Err(Error::PreconditionFailed("binary family".into()));
            }
            odd_m(m)?;
            let lambda = need(params.walsh_zero, "lambda_g(1, 0)")?;
            let amp = 1i64 << m.div_ceil(2);
            if lambda != 0 && lambda.abs() != amp {
                return Err(Error::PreconditionFailed(format!(
                    "lambda_g(1, 0) = {lambda} is not in {{0, ±{amp}}}"
                )));
            }
            let n_f = ((1i64 << (m - 1)) - lambda / 2) as u64;
            Ok(Predicted::Enumerator(semibent_table(m, n_f)?))
        }
        Prediction::QuadraticBoolean => {
            if p != 2 {
                return Err(Error::PreconditionFailed("binary family".into()));
            }
            let r = need(params.rank, "rank")?;
            let f0 = need(params.walsh_zero, "f^(0)")?;
            if r % 2 == 1 || r == 0 || r > m {
                return Err(Error::PreconditionFailed(format!(
                    "rank {r} must be even in [2, {m}]"
                )));
            }
            let amp = 1i64 << (m - r / 2);
            let (e1, e2, e3) = match f0 {
                0 => (1, 0, 0),
                v if v == amp => (0, 1, 0),
                v if v == -amp => (0, 0, 1),
                v => {
                    return Err(Error::PreconditionFailed(format!(
                        "f^(0) = {v} is not in {{0, ±{amp}}}"
                    )))
                }
            };
            let n_f = ((1i64 << (m - 1)) - f0 / 2) as i128;
            let s = 1i128 << (m - 1 - r / 2);
            let half = 1i128 << (r - 1);
            let skew = 1i128 << ((r - 2) / 2);
            let a1 = (1i128 << m) - (1i128 << r) - e1;
            let a2 = half + skew - e2;
            let a3 = half - skew - e3;
            let mut weights = vec![(0u64, 1u64)];
            for (w2x, a) in [(n_f, a1), (n_f + s, a2), (n_f - s, a3)] {
                if a > 0 {
                    weights.push((exact_div(w2x, 2, "weight")?, a as u64));
                }
            }
            Ok(enumerator(n_f as u64, m, &weights))
        }
        Prediction::Hkm => {
            let h = need(params.h, "h")?;
            if h % 2 == 0 {
                return Err(Error::PreconditionFailed(format!("h must be odd, got {h}")));
            }
            let p = 3u32;
            let m = 3 * h;
            let c = 3u64.pow(3 * h - 2);
            let s = 3u64.pow(2 * h - 2);
            let weights = [
                (0, 1),
                (c - s, 3u64.pow(2 * h) + 3u64.pow(h)),
                (c, 3u64.pow(3 * h) - 2 * 3u64.pow(2 * h) - 1),
                (c + s, 3u64.pow(2 * h) - 3u64.pow(h)),
            ];
            Ok(Predicted::Enumerator(WeightEnumerator::from_weights(
                p,
                m,
                (3u64.pow(3 * h - 1) - 1) / 2,
                m,
                &weights,
            )))
        }
        Prediction::BooleanSupport => {
            let s = params
                .spectrum
                .as_ref()
                .ok_or_else(|| Error::PreconditionFailed("missing parameter: spectrum".into()))?;
            let m = s.m();
            let full = 1i64 << m;
            if s.values().iter().any(|v| v.abs() == full) {
                return Err(Error::PreconditionFailed("function is affine".into()));
            }
            let n_f = s.support_size();
            let mut weights = vec![(0u64, 1u64)];
            for &v in &s.values()[1..] {
                weights.push((exact_div(2 * n_f as i128 + v as i128, 4, "weight")?, 1));
            }
            Ok(Predicted::Enumerator(WeightEnumerator::from_weights(
                2, m, n_f, m, &weights,
            )))
        }
        Prediction::GlynnII => {
            if p != 2 {
                return Err(Error::PreconditionFailed("binary family".into()));
            }
            odd_m(m)?;
            if m < 9 {
                return Err(Error::PreconditionFailed(format!(
                    "the five-weight claim is for m >= 9, got {m}"
                )));
            }
            let c = 1u64 << (m - 2);
            let a = 1u64 << ((m - 1) / 2);
            let b = 1u64 << ((m - 3) / 2);
            Ok(Predicted::WeightSet {
                n: (1 << (m - 1)) - 1,
                k: m,
                weights: BTreeSet::from([c - a, c - b, c, c + b, c + a]),
            })
        }
    }
}
