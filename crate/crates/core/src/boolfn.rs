//! Walsh spectra of Boolean functions on GF(2^m), quadratic-form ranks over
//! GF(p^m), and the almost-bent test.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::func::{FuncSpec, Target};
use crate::gf::{Elem, Field};
use crate::linalg::rank_mod_p;

/// Largest m accepted by the Walsh routines.
pub const MAX_WALSH_DEGREE: u32 = 22;

/// Largest m for the exhaustive almost-bent test.
pub const MAX_AB_DEGREE: u32 = 9;

/// `values[w] = sum_x (-1)^{f(x) + Tr(w x)}`, indexed by field element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    m: u32,
    values: Vec<i64>,
}

impl WalshSpectrum {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn at(&self, w: Elem) -> i64 {
        self.values[w.0 as usize]
    }

    /// Support size of the underlying function, `(2^m - f^(0)) / 2`.
    pub fn support_size(&self) -> u64 {
        (((1i64 << self.m) - self.values[0]) / 2) as u64
    }

    /// Distinct values with their multiplicities.
    pub fn value_counts(&self) -> BTreeMap<i64, u64> {
        let mut counts = BTreeMap::new();
        for &v in &self.values {
            *counts.entry(v).or_default() += 1;
        }
        counts
    }

    pub fn parseval_sum(&self) -> i128 {
        self.values.iter().map(|&v| v as i128 * v as i128).sum()
    }

    /// Recovers `(-1)^{f(x)}` for every `x`.
    pub fn inverse(&self, field: &Field) -> Result<Vec<i64>> {
        check_binary(field)?;
        if field.m() != self.m {
            return Err(Error::PreconditionFailed(format!(
                "spectrum has m = {} but the field has m = {}",
                self.m,
                field.m()
            )));
        }
        let tau = trace_dual_map(field);
        let mut a = vec![0i64; self.values.len()];
        for (w, &v) in self.values.iter().enumerate() {
            a[tau[w] as usize] = v;
        }
        fwht(&mut a);
        Ok(a.into_iter().map(|v| v >> self.m).collect())
    }
}

fn check_binary(field: &Field) -> Result<()> {
    if field.p() != 2 {
        return Err(Error::PreconditionFailed(format!(
            "Walsh transforms need characteristic 2, got {}",
            field.p()
        )));
    }
    if field.m() > MAX_WALSH_DEGREE {
        return Err(Error::SizeLimit(format!(
            "Walsh transform on GF(2^{}) exceeds 2^{}",
            field.m(),
            MAX_WALSH_DEGREE
        )));
    }
    Ok(())
}

fn fwht(a: &mut [i64]) {
    let mut h = 1;
    while h < a.len() {
        for block in a.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, t) = (*x + *y, *x - *y);
                *x = s;
                *y = t;
            }
        }
        h *= 2;
    }
}

/// `tau[w]` has bit `k` equal to `Tr(w beta_k)` for the coordinate basis
/// `beta_k`, so `Tr(w x) = popcount(tau[w] & x)`.
fn trace_dual_map(field: &Field) -> Vec<u32> {
    let m = field.m();
    let basis_image: Vec<u32> = (0..m)
        .map(|j| {
            let w = Elem(1 << j);
            (0..m).fold(0u32, |acc, k| acc | field.trace(field.mul(w, Elem(1 << k))) << k)
        })
        .collect();
    let mut tau = vec![0u32; field.q() as usize];
    for w in 1..field.q() as usize {
        tau[w] = tau[w & (w - 1)] ^ basis_image[w.trailing_zeros() as usize];
    }
    tau
}

/// Spectrum of the Boolean function given by its truth table (`table[x]` in {0,1}).
pub fn walsh_from_table(field: &Field, table: &[u8]) -> Result<WalshSpectrum> {
    check_binary(field)?;
    if table.len() != field.q() as usize {
        return Err(Error::PreconditionFailed(format!(
            "truth table has {} entries, expected {}",
            table.len(),
            field.q()
        )));
    }
    let mut a: Vec<i64> = table.iter().map(|&b| if b & 1 == 0 { 1 } else { -1 }).collect();
    fwht(&mut a);
    let tau = trace_dual_map(field);
    let values = tau.iter().map(|&t| a[t as usize]).collect();
    Ok(WalshSpectrum { m: field.m(), values })
}

/// Spectrum of `x -> Tr(sum c_i x^{e_i})`.
pub fn walsh_transform(field: &Field, f: &FuncSpec) -> Result<WalshSpectrum> {
    check_binary(field)?;
    let table: Vec<u8> = field.elements().map(|x| f.eval_trace(field, x) as u8).collect();
    walsh_from_table(field, &table)
}

/// Spectrum of the indicator function of a set.
pub fn walsh_of_indicator(field: &Field, set: &[Elem]) -> Result<WalshSpectrum> {
    check_binary(field)?;
    let mut table = vec![0u8; field.q() as usize];
    for &x in set {
        if !field.contains(x) {
            return Err(Error::ElementOutOfRange(x.0));
        }
        table[x.0 as usize] = 1;
    }
    walsh_from_table(field, &table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "values", rename_all = "kebab-case")]
pub enum SpectralKind {
    Bent,
    Semibent,
    Plateaued(u64),
    FiveValued(Vec<i64>),
    Other(Vec<i64>),
}

impl fmt::Display for SpectralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralKind::Bent => write!(f, "bent"),
            SpectralKind::Semibent => write!(f, "semibent"),
            SpectralKind::Plateaued(a) => write!(f, "plateaued (amplitude {a})"),
            SpectralKind::FiveValued(v) => write!(f, "five-valued {v:?}"),
            SpectralKind::Other(v) => write!(f, "other {v:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralClass {
    pub kind: SpectralKind,
    pub n_f: u64,
}

pub fn classify_spectrum(s: &WalshSpectrum) -> SpectralClass {
    let m = s.m;
    let n_f = s.support_size();
    let distinct: BTreeSet<i64> = s.values.iter().copied().collect();
    let amplitudes: BTreeSet<u64> = distinct
        .iter()
        .filter(|&&v| v != 0)
        .map(|v| v.unsigned_abs())
        .collect();
    let values: Vec<i64> = distinct.iter().copied().collect();
    let kind = if m.is_multiple_of(2) && !distinct.contains(&0) && amplitudes == BTreeSet::from([1u64 << (m / 2)])
    {
        SpectralKind::Bent
    } else if m % 2 == 1 && amplitudes == BTreeSet::from([1u64 << m.div_ceil(2)]) {
        SpectralKind::Semibent
    } else if m % 2 == 1 && m >= 3 && {
        let lo = 1i64 << ((m - 1) / 2);
        let hi = 1i64 << m.div_ceil(2);
        distinct == BTreeSet::from([-hi, -lo, 0, lo, hi])
    } {
        SpectralKind::FiveValued(values)
    } else if amplitudes.len() == 1 && *amplitudes.first().unwrap() < 1u64 << m {
        SpectralKind::Plateaued(*amplitudes.first().unwrap())
    } else {
        SpectralKind::Other(values)
    };
    SpectralClass { kind, n_f }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticRank {
    pub r: u32,
    pub radical_dim: u32,
}

fn digits(mut e: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while e > 0 {
        out.push(e % p);
        e /= p;
    }
    out
}

/// Rejects exponents that are not of the form `p^i + p^j` with `i, j < m`.
/// In characteristic 2 a single power `2^k` counts as well (`2^{k-1} + 2^{k-1}`
/// or, for `k = 0`, `2^{m-1} + 2^{m-1}` after reduction).
fn check_quadratic_exponents(field: &Field, f: &FuncSpec) -> Result<()> {
    let p = field.p() as u64;
    let q = field.q() as u64;
    for &(_, e) in f.terms() {
        let digit_sum: u64 = digits(e, p).iter().sum();
        let ok = e < q && (digit_sum == 2 || (p == 2 && digit_sum == 1));
        if !ok {
            return Err(Error::NotQuadraticForm(format!(
                "exponent {e} is not a sum of two powers of {p} below {q}"
            )));
        }
    }
    Ok(())
}

/// `r = m - dim V_f` with `V_f = {x : f(x+z) - f(x) - f(z) = 0 for all z}`.
///
/// For a field-valued `f` the bilinear form is vector valued and each entry
/// contributes its `m` coordinates; for a trace target it is GF(p)-valued.
pub fn quadratic_rank(field: &Field, f: &FuncSpec) -> Result<QuadraticRank> {
    check_quadratic_exponents(field, f)?;
    let m = field.m();
    let p = field.p();
    let basis: Vec<Elem> = (0..m).map(|i| Elem(p.pow(i))).collect();
    let polar = |x: Elem, z: Elem| -> Elem {
        let s = f.eval_poly(field, field.add(x, z));
        field.sub(field.sub(s, f.eval_poly(field, x)), f.eval_poly(field, z))
    };
    let rows: Vec<Vec<u32>> = basis
        .iter()
        .map(|&x| {
            let mut row = Vec::new();
            for &z in &basis {
                let b = polar(x, z);
                match f.target() {
                    Target::Field => row.extend(field.coords(b)),
                    Target::Trace => row.push(field.trace(b)),
                }
            }
            row
        })
        .collect();
    let r = rank_mod_p(&rows, p) as u32;
    Ok(QuadraticRank { r, radical_dim: m - r })
}

/// `Tr(sum_i f_i x^{2^i + 1})` for `i = 0..=m/2`, skipping zero coefficients.
pub fn quadratic_boolean(field: &Field, coeffs: &[Elem]) -> Result<FuncSpec> {
    if field.p() != 2 {
        return Err(Error::PreconditionFailed("quadratic Boolean functions need p = 2".into()));
    }
    if coeffs.len() > field.m() as usize / 2 + 1 {
        return Err(Error::PreconditionFailed(format!(
            "at most {} coefficients for m = {}",
            field.m() / 2 + 1,
            field.m()
        )));
    }
    let terms: Vec<(Elem, u64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| (c, (1u64 << i) + 1))
        .collect();
    if terms.is_empty() {
        return Err(Error::ZeroInput);
    }
    FuncSpec::new(terms, Target::Trace)
}

/// Deterministic walk over all nonzero coefficient tuples of
/// [`quadratic_boolean`], visited in a scattered order so that early items
/// cover many ranks.
pub fn quadratic_boolean_walk(field: &Field) -> impl Iterator<Item = FuncSpec> + '_ {
    let t = field.m() / 2 + 1;
    let q = field.q() as u64;
    let total = q.checked_pow(t).expect("tuple space fits in u64");
    let step = (0x9E37_79B9_7F4A_7C15u64 % total) | 1;
    (1..total).map(move |n| {
        let mut idx = ((n as u128 * step as u128) % total as u128) as u64;
        let coeffs: Vec<Elem> = (0..t)
            .map(|_| {
                let c = Elem((idx % q) as u32);
                idx /= q;
                c
            })
            .collect();
        quadratic_boolean(field, &coeffs).expect("nonzero tuple")
    })
}

/// Value distribution of the Walsh spectrum of a quadratic Boolean function of
/// rank `r` on GF(2^m): zero `2^m - 2^r` times and `±2^{m - r/2}` with counts
/// `2^{r-1} ± 2^{(r-2)/2}`.
pub fn quadratic_walsh_counts(m: u32, r: u32) -> Result<BTreeMap<i64, u64>> {
    if r % 2 == 1 || r > m {
        return Err(Error::PreconditionFailed(format!(
            "rank {r} is not an even number in [0, {m}]"
        )));
    }
    let mut counts = BTreeMap::new();
    let zeros = (1u64 << m) - (1u64 << r);
    if zeros > 0 {
        counts.insert(0, zeros);
    }
    let amp = 1i64 << (m - r / 2);
    if r == 0 {
        counts.insert(amp, 1);
    } else {
        let half = 1u64 << (r - 1);
        let skew = 1u64 << ((r - 2) / 2);
        counts.insert(amp, half + skew);
        if half > skew {
            counts.insert(-amp, half - skew);
        }
    }
    Ok(counts)
}

/// `lambda_g(a, b) = sum_x (-1)^{Tr(a g(x) + b x)}`.
pub fn lambda_spectrum(field: &Field, g: &FuncSpec, a: Elem, b: Elem) -> Result<i64> {
    check_binary(field)?;
    if g.target() != Target::Field {
        return Err(Error::PreconditionFailed("lambda sums need a field-valued g".into()));
    }
    Ok(field
        .elements()
        .map(|x| {
            let y = field.add(field.mul(a, g.eval_poly(field, x)), field.mul(b, x));
            if field.trace(y) == 0 {
                1
            } else {
                -1
            }
        })
        .sum())
}

/// Exhaustive almost-bent test: every `lambda_g(a, b)` with `a != 0` lies in
/// `{0, ±2^{(m+1)/2}}`. Runs one Walsh transform of `Tr(a g)` per `a`.
pub fn is_almost_bent(field: &Field, g: &FuncSpec) -> Result<bool> {
    check_binary(field)?;
    let m = field.m();
    if m.is_multiple_of(2) {
        return Err(Error::EvenDegree(m));
    }
    if m > MAX_AB_DEGREE {
        return Err(Error::SizeLimit(format!(
            "almost-bent test limited to m <= {MAX_AB_DEGREE}, got {m}"
        )));
    }
    let values: Vec<Elem> = field.elements().map(|x| g.eval_poly(field, x)).collect();
    let amp = 1i64 << m.div_ceil(2);
    let a_values: Vec<Elem> = field.nonzero_elements().collect();
    a_values.par_iter().try_fold(
        || true,
        |acc, &a| -> Result<bool> {
            if !acc {
                return Ok(false);
            }
            let table: Vec<u8> = values
                .iter()
                .map(|&y| field.trace(field.mul(a, y)) as u8)
                .collect();
            let s = walsh_from_table(field, &table)?;
            Ok(s.values.iter().all(|&v| v == 0 || v.abs() == amp))
        },
    )
    .try_reduce(|| true, |x, y| Ok(x && y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportKind {
    Bent,
    Semibent,
    AbTrace,
    Quadratic,
}

impl FromStr for SupportKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bent" => Ok(SupportKind::Bent),
            "semibent" => Ok(SupportKind::Semibent),
            "ab-trace" => Ok(SupportKind::AbTrace),
            "quadratic" => Ok(SupportKind::Quadratic),
            other => Err(Error::UnknownKind(format!("support kind {other:?}"))),
        }
    }
}

/// Side data for [`support_size_prediction`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SupportInputs {
    /// `f^(0)`, or `lambda_g(1, 0)` for the almost-bent case. `None` returns
    /// every admissible branch.
    pub walsh_zero: Option<i64>,
    /// Rank, required for the quadratic case.
    pub rank: Option<u32>,
}

/// Admissible support sizes `n_f = 2^{m-1} - f^(0)/2` for the given class.
pub fn support_size_prediction(kind: SupportKind, m: u32, side: SupportInputs) -> Result<BTreeSet<u64>> {
    let allowed_zero: Vec<i64> = match kind {
        SupportKind::Bent => {
            if m % 2 == 1 || m < 2 {
                return Err(Error::PreconditionFailed(format!("bent needs even m, got {m}")));
            }
            let a = 1i64 << (m / 2);
            vec![a, -a]
        }
        SupportKind::Semibent | SupportKind::AbTrace => {
            if m.is_multiple_of(2) {
                return Err(Error::EvenDegree(m));
            }
            let a = 1i64 << m.div_ceil(2);
            vec![a, -a, 0]
        }
        SupportKind::Quadratic => {
            let r = side.rank.ok_or_else(|| {
                Error::PreconditionFailed("quadratic prediction needs the rank".into())
            })?;
            if r % 2 == 1 || r > m || r == 0 {
                return Err(Error::PreconditionFailed(format!(
                    "quadratic Boolean rank must be even in [2, {m}], got {r}"
                )));
            }
            let a = 1i64 << (m - r / 2);
            vec![a, -a, 0]
        }
    };
    let chosen: Vec<i64> = match side.walsh_zero {
        Some(v) if allowed_zero.contains(&v) => vec![v],
        Some(v) => {
            return Err(Error::PreconditionFailed(format!(
                "value {v} at zero is not admissible, expected one of {allowed_zero:?}"
            )))
        }
        None => allowed_zero,
    };
    let half = 1i64 << (m - 1);
    Ok(chosen.into_iter().map(|v| (half - v / 2) as u64).collect())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, (a % n) as i128);
    while new_r != 0 {
        let quotient = r / new_r;
        (t, new_t) = (new_t, t - quotient * new_t);
        (r, new_r) = (new_r, r - quotient * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i128) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperovalReport {
    pub m: u32,
    pub rho: u64,
    pub kappa: u32,
    /// `(2^i + 2^j - 1) / (2^kappa + 1)` taken modulo `2^m - 1`.
    pub ell: u64,
    /// Elements `b` whose spectrum value breaks the predicted clause.
    pub violations: Vec<(u32, i64)>,
    /// Nonzero `b` where `f^(b) != -2 (chi_b(D) + 1)`.
    pub identity_failures: Vec<u32>,
}

impl HyperovalReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.identity_failures.is_empty()
    }
}

/// Checks the spectrum of the indicator of `Im(x^rho + x)` for
/// `rho = 2^i + 2^j`: zero at `b = 0` and where `Tr(b^ell) = 0`, and
/// `±2^{(m+1)/2}` where `Tr(b^ell) = 1`.
pub fn hyperoval_spectrum_check(field: &Field, i: u32, j: u32) -> Result<HyperovalReport> {
    check_binary(field)?;
    let m = field.m();
    if m.is_multiple_of(2) {
        return Err(Error::PreconditionFailed(format!("m must be odd, got {m}")));
    }
    if !(i < j && j < m) {
        return Err(Error::PreconditionFailed(format!(
            "need 0 <= i < j < m, got i = {i}, j = {j}, m = {m}"
        )));
    }
    let kappa = j - i;
    let order = (1u64 << m) - 1;
    let denom = (1u64 << kappa) + 1;
    if gcd(denom, order) != 1 {
        return Err(Error::PreconditionFailed(format!(
            "gcd(2^{kappa} + 1, 2^{m} - 1) != 1"
        )));
    }
    let rho = (1u64 << i) + (1u64 << j);
    let gamma = FuncSpec::new(vec![(Elem::ONE, rho), (Elem::ONE, 1)], Target::Field)?;
    let mut counts = vec![0u32; field.q() as usize];
    for x in field.elements() {
        counts[gamma.eval(field, x).0 as usize] += 1;
    }
    if counts.iter().any(|&c| c != 0 && c != 2) {
        return Err(Error::PreconditionFailed(format!(
            "x^{rho} + x is not two-to-one on GF(2^{m})"
        )));
    }
    let ell = (rho - 1) % order * mod_inverse(denom, order).expect("coprime") % order;
    let image: Vec<Elem> = (0..field.q()).filter(|&y| counts[y as usize] > 0).map(Elem).collect();
    let spectrum = walsh_of_indicator(field, &image)?;
    let amp = 1i64 << m.div_ceil(2);
    let mut violations = Vec::new();
    let mut identity_failures = Vec::new();
    for b in field.elements() {
        let v = spectrum.at(b);
        let ok = if b.is_zero() || field.trace(field.pow(b, ell)) == 0 {
            v == 0
        } else {
            v.abs() == amp
        };
        if !ok {
            violations.push((b.0, v));
        }
        let chi: i64 = image
            .iter()
            .filter(|y| !y.is_zero())
            .map(|&y| if field.trace(field.mul(b, y)) == 0 { 1 } else { -1 })
            .sum();
        if !b.is_zero() && v != -2 * (chi + 1) {
            identity_failures.push(b.0);
        }
    }
    Ok(HyperovalReport {
        m,
        rho,
        kappa,
        ell,
        violations,
        identity_failures,
    })
}
