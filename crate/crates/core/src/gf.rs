//! Exact arithmetic in GF(p^m).
//!
//! Elements are stored as a single index: the polynomial-basis coordinates
//! `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` read as base-p digits, so index 0
//! is zero and index 1 is one. The modulus is always primitive, which makes
//! the class of `x` a generator `alpha` of the multiplicative group. Fields
//! up to `2^dlog_table_bits` elements keep exp/log tables; larger fields fall
//! back to schoolbook polynomial arithmetic and baby-step/giant-step logs.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field element, identified by its polynomial-basis index.
#[derive(
    Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Size budgets for field construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldConfig {
    /// Largest allowed `log2(q)`.
    pub max_field_bits: u32,
    /// Fields with `q <= 2^dlog_table_bits` get exp/log tables.
    pub dlog_table_bits: u32,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig {
            max_field_bits: 26,
            dlog_table_bits: 22,
        }
    }
}

/// GF(p^m) with a fixed primitive modulus. Cheap to clone.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

struct Inner {
    poly: PolyRing,
    q: u32,
    alpha: Elem,
    tables: Option<Tables>,
    trace_basis: Vec<u32>,
    order_factors: Vec<u64>,
    bsgs: OnceLock<Bsgs>,
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Bsgs {
    step: u64,
    baby: HashMap<u32, u32>,
    giant: Elem,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}) mod [{}]",
            self.p(),
            self.m(),
            format_modulus(self.modulus())
        )
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.p() == other.p() && self.modulus() == other.modulus())
    }
}

impl Eq for Field {}

/// Polynomial arithmetic modulo a monic degree-m polynomial over GF(p),
/// operating directly on element indices.
#[derive(Clone)]
struct PolyRing {
    p: u32,
    m: u32,
    modulus: Vec<u32>,
    pow_p: Vec<u32>,
}

impl PolyRing {
    fn new(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        let mut pow_p = Vec::with_capacity(m as usize + 1);
        let mut acc = 1u32;
        for _ in 0..=m {
            pow_p.push(acc);
            acc = acc.wrapping_mul(p);
        }
        PolyRing {
            p,
            m,
            modulus,
            pow_p,
        }
    }

    fn q(&self) -> u32 {
        self.pow_p[self.m as usize]
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut out = vec![0; self.m as usize];
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn from_digits(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0u32, |acc, &d| acc * self.p + d)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for i in 0..self.m as usize {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * self.pow_p[i];
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for i in 0..self.m as usize {
            let d = a % self.p;
            out += ((self.p - d) % self.p) * self.pow_p[i];
            a /= self.p;
        }
        out
    }

    fn scale(&self, c: u32, a: u32) -> u32 {
        let c = c % self.p;
        if c == 0 {
            return 0;
        }
        if c == 1 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for i in 0..self.m as usize {
            out += ((a % self.p) * c % self.p) * self.pow_p[i];
            a /= self.p;
        }
        out
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let p = self.p as u64;
        let m = self.m as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for deg in (m..2 * m - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for i in 0..m {
                let sub = c * self.modulus[i] as u64 % p;
                let idx = deg - m + i;
                prod[idx] = (prod[idx] + p - sub) % p;
            }
        }
        let low: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.from_digits(&low)
    }

    /// Multiply by the class of `x`.
    fn mul_by_x(&self, a: u32) -> u32 {
        let m = self.m as usize;
        let p = self.p;
        let d = self.digits(a);
        let top = d[m - 1];
        let mut out = vec![0u32; m];
        for i in 0..m {
            let shifted = if i == 0 { 0 } else { d[i - 1] };
            let sub = top * self.modulus[i] % p;
            out[i] = (shifted + p - sub) % p;
        }
        self.from_digits(&out)
    }

    fn x_class(&self) -> u32 {
        if self.m == 1 {
            (self.p - self.modulus[0] % self.p) % self.p
        } else {
            self.p
        }
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn is_primitive(&self, order_factors: &[u64]) -> bool {
        if self.modulus[0] == 0 {
            return false;
        }
        let x = self.x_class();
        let order = self.q() as u64 - 1;
        if self.pow(x, order) != 1 {
            return false;
        }
        order_factors.iter().all(|&r| self.pow(x, order / r) != 1)
    }
}

/// Deterministic primality test by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Parse `"1,1,0,1"` (constant term first) into coefficients.
pub fn parse_modulus(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad modulus coefficient {t:?}")))
        })
        .collect()
}

pub fn format_modulus(coeffs: &[u32]) -> String {
    coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn check_size(p: u32, m: u32, config: &FieldConfig) -> Result<u32> {
    if m == 0 {
        return Err(Error::InvalidModulus("extension degree must be >= 1".into()));
    }
    let bits = (p as f64).log2() * m as f64;
    let q = (p as u64).checked_pow(m);
    match q {
        Some(q) if bits <= config.max_field_bits as f64 + 1e-9 && q <= u32::MAX as u64 => {
            Ok(q as u32)
        }
        _ => Err(Error::SizeLimit(format!(
            "GF({p}^{m}) exceeds 2^{} elements",
            config.max_field_bits
        ))),
    }
}

/// All monic primitive polynomials of degree `m` over GF(p), in the default
/// scan order (integer encoding of the coefficients), up to `limit` of them.
pub fn primitive_moduli(p: u32, m: u32, limit: usize) -> Result<Vec<Vec<u32>>> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let q = check_size(p, m, &FieldConfig::default())?;
    let factors = prime_factors(q as u64 - 1);
    let mut out = Vec::new();
    for low in 0..q {
        let scratch = PolyRing::new(p, m, vec![0; m as usize + 1]);
        let mut coeffs = scratch.digits(low);
        coeffs.push(1);
        let ring = PolyRing::new(p, m, coeffs);
        if ring.is_primitive(&factors) {
            out.push(ring.modulus);
            if out.len() >= limit {
                break;
            }
        }
    }
    Ok(out)
}

fn least_primitive_root(p: u32, factors: &[u64]) -> u32 {
    if p == 2 {
        return 1;
    }
    let order = p as u64 - 1;
    (2..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&r| mod_pow(g as u64, order / r, p as u64) != 1)
        })
        .expect("every prime field has a primitive root")
}

fn mod_pow(mut b: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    acc
}

impl Field {
    /// GF(p^m) with the default modulus and default budgets.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        Field::with_config(p, m, None, &FieldConfig::default())
    }

    /// GF(p^m) with an explicit (monic, primitive) modulus, constant term first.
    pub fn with_modulus(p: u32, m: u32, modulus: &[u32]) -> Result<Field> {
        Field::with_config(p, m, Some(modulus), &FieldConfig::default())
    }

    pub fn with_config(
        p: u32,
        m: u32,
        modulus: Option<&[u32]>,
        config: &FieldConfig,
    ) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let q = check_size(p, m, config)?;
        let order_factors = prime_factors(q as u64 - 1);

        let modulus = match modulus {
            Some(given) => {
                if given.len() != m as usize + 1 || given[m as usize] != 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected a monic polynomial of degree {m}, got [{}]",
                        format_modulus(given)
                    )));
                }
                if given.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficients must lie in [0, {p})"
                    )));
                }
                let ring = PolyRing::new(p, m, given.to_vec());
                if !ring.is_primitive(&order_factors) {
                    return Err(Error::NotPrimitivePolynomial(format_modulus(given)));
                }
                given.to_vec()
            }
            None if m == 1 => {
                let g = least_primitive_root(p, &order_factors);
                vec![(p - g) % p, 1]
            }
            None => primitive_moduli(p, m, 1)?
                .pop()
                .expect("a primitive polynomial exists for every degree"),
        };

        let poly = PolyRing::new(p, m, modulus);
        let alpha = Elem(poly.x_class());

        let tables = if q as u64 <= 1u64 << config.dlog_table_bits {
            let n = q as usize - 1;
            let mut exp = Vec::with_capacity(n);
            let mut log = vec![u32::MAX; q as usize];
            let mut cur = 1u32;
            for t in 0..n {
                exp.push(cur);
                log[cur as usize] = t as u32;
                cur = poly.mul_by_x(cur);
            }
            Some(Tables { exp, log })
        } else {
            None
        };

        let trace_basis = (0..m)
            .map(|i| {
                let xi = poly.pow(poly.x_class(), i as u64);
                let mut acc = 0u32;
                let mut y = xi;
                for _ in 0..m {
                    acc = poly.add(acc, y);
                    y = poly.pow(y, p as u64);
                }
                debug_assert!(acc < p, "trace must land in the prime field");
                acc
            })
            .collect();

        Ok(Field {
            inner: Arc::new(Inner {
                poly,
                q,
                alpha,
                tables,
                trace_basis,
                order_factors,
                bsgs: OnceLock::new(),
            }),
        })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.inner.poly.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.inner.poly.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.poly.modulus
    }

    #[inline]
    pub fn alpha(&self) -> Elem {
        self.inner.alpha
    }

    /// Prime divisors of `q - 1`.
    pub fn order_factors(&self) -> &[u64] {
        &self.inner.order_factors
    }

    pub fn has_tables(&self) -> bool {
        self.inner.tables.is_some()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q()).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q()).map(Elem)
    }

    pub fn elem(&self, index: u32) -> Result<Elem> {
        if index < self.q() {
            Ok(Elem(index))
        } else {
            Err(Error::ElementOutOfRange(index))
        }
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        x.0 < self.q()
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> Elem {
        Elem(c.rem_euclid(self.p() as i64) as u32)
    }

    /// Polynomial-basis coordinates, constant first.
    pub fn coords(&self, x: Elem) -> Vec<u32> {
        self.inner.poly.digits(x.0)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Elem {
        Elem(self.inner.poly.from_digits(coords))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.inner.poly.add(a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.inner.poly.neg(a.0))
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Multiply by a prime-subfield scalar.
    #[inline]
    pub fn scale(&self, c: u32, a: Elem) -> Elem {
        Elem(self.inner.poly.scale(c, a.0))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        match &self.inner.tables {
            Some(t) => {
                let n = self.q() as u64 - 1;
                let s = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % n;
                Elem(t.exp[s as usize])
            }
            None => Elem(self.inner.poly.mul(a.0, b.0)),
        }
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        match &self.inner.tables {
            Some(t) => {
                let n = self.q() as u64 - 1;
                let s = (t.log[a.0 as usize] as u128 * e as u128 % n as u128) as usize;
                Elem(t.exp[s])
            }
            None => Elem(self.inner.poly.pow(a.0, e)),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(self.pow(a, self.q() as u64 - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `alpha^t` for any integer exponent.
    pub fn exp(&self, t: i64) -> Elem {
        let n = self.q() as i64 - 1;
        let t = t.rem_euclid(n) as u64;
        match &self.inner.tables {
            Some(tab) => Elem(tab.exp[t as usize]),
            None => self.pow(self.alpha(), t),
        }
    }

    /// `x^{p^k}`.
    pub fn frobenius(&self, x: Elem, k: u32) -> Elem {
        let k = k % self.m();
        self.pow(x, (self.p() as u64).pow(k))
    }

    /// Absolute trace onto GF(p), returned as an integer in `[0, p)`.
    #[inline]
    pub fn trace(&self, x: Elem) -> u32 {
        let p = self.p();
        let basis = &self.inner.trace_basis;
        if p == 2 {
            let mut acc = 0u32;
            for (i, &b) in basis.iter().enumerate() {
                acc ^= (x.0 >> i) & b;
            }
            return acc;
        }
        let mut a = x.0;
        let mut acc = 0u32;
        for &b in basis {
            acc += (a % p) * b;
            a /= p;
        }
        acc % p
    }

    /// Trace from GF(p^m) onto the subfield GF(p^d).
    pub fn relative_trace(&self, d: u32, x: Elem) -> Result<Elem> {
        let m = self.m();
        if d == 0 || !m.is_multiple_of(d) {
            return Err(Error::NotDivisor { d, m });
        }
        let step = (self.p() as u64).pow(d);
        let mut acc = Elem::ZERO;
        let mut y = x;
        for _ in 0..m / d {
            acc = self.add(acc, y);
            y = self.pow(y, step);
        }
        Ok(acc)
    }

    /// The `t` in `[0, q-1)` with `alpha^t = x`.
    pub fn dlog(&self, x: Elem) -> Result<u32> {
        if x.is_zero() {
            return Err(Error::LogOfZero);
        }
        if let Some(t) = &self.inner.tables {
            return Ok(t.log[x.0 as usize]);
        }
        let bsgs = self.inner.bsgs.get_or_init(|| self.build_bsgs());
        let mut gamma = x;
        for i in 0..bsgs.step {
            if let Some(&j) = bsgs.baby.get(&gamma.0) {
                let t = (i * bsgs.step + j as u64) % (self.q() as u64 - 1);
                return Ok(t as u32);
            }
            gamma = self.mul(gamma, bsgs.giant);
        }
        unreachable!("alpha generates the multiplicative group")
    }

    fn build_bsgs(&self) -> Bsgs {
        let n = self.q() as u64 - 1;
        let step = (n as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(step as usize);
        let mut cur = Elem::ONE;
        for j in 0..step {
            baby.entry(cur.0).or_insert(j as u32);
            cur = Elem(self.inner.poly.mul_by_x(cur.0));
        }
        // alpha^{-step}
        let giant = self.pow(self.alpha(), n - step % n);
        Bsgs { step, baby, giant }
    }

    /// Whether a nonzero `x` is a square (Euler's criterion for odd p).
    pub fn is_square(&self, x: Elem) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.p() == 2 {
            return Ok(true);
        }
        Ok(self.pow(x, (self.q() as u64 - 1) / 2) == Elem::ONE)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: Elem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut n = self.q() as u64 - 1;
        for &r in self.order_factors() {
            while n.is_multiple_of(r) && self.pow(x, n / r) == Elem::ONE {
                n /= r;
            }
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trace_by_frobenius(f: &Field, x: Elem) -> Elem {
        let mut acc = Elem::ZERO;
        let mut y = x;
        for _ in 0..f.m() {
            acc = f.add(acc, y);
            y = f.pow(y, f.p() as u64);
        }
        acc
    }

    #[test]
    fn default_modulus_gf8() {
        // Exhaustive scan of monic cubics over GF(2): x^3+x+1 is the first
        // primitive one in integer-encoding order.
        let mut primitive = Vec::new();
        for low in 0..8u32 {
            let c = vec![low & 1, (low >> 1) & 1, (low >> 2) & 1, 1];
            if Field::with_modulus(2, 3, &c).is_ok() {
                primitive.push(c);
            }
        }
        assert_eq!(primitive, vec![vec![1, 1, 0, 1], vec![1, 0, 1, 1]]);
        let f = Field::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn gf7_alpha_is_least_primitive_root() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.alpha(), Elem(3));
        // 2 has order 3 mod 7, 3 has order 6
        assert_eq!(f.order(Elem(2)).unwrap(), 3);
        assert_eq!(f.order(Elem(3)).unwrap(), 6);
    }

    #[test]
    fn errors() {
        assert_eq!(Field::new(4, 2).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            Field::with_modulus(2, 3, &[1, 0, 0, 1]),
            Err(Error::NotPrimitivePolynomial(_))
        ));
        // x^4+x^3+x^2+x+1 is irreducible over GF(2) but x has order 5
        assert!(matches!(
            Field::with_modulus(2, 4, &[1, 1, 1, 1, 1]),
            Err(Error::NotPrimitivePolynomial(_))
        ));
        assert!(matches!(Field::new(2, 27), Err(Error::SizeLimit(_))));
        assert!(matches!(
            Field::with_modulus(2, 3, &[1, 1, 1]),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn trace_examples_gf8() {
        let f = Field::new(2, 3).unwrap();
        assert_eq!(f.trace(Elem::ZERO), 0);
        assert_eq!(f.trace(Elem::ONE), 1);
        // alpha + alpha^2 + alpha^4 with alpha^3 = alpha + 1
        assert_eq!(f.trace(f.alpha()), 0);
        let a = f.alpha();
        let s = f.add(f.add(a, f.pow(a, 2)), f.pow(a, 4));
        assert_eq!(s, Elem::ZERO);
    }

    #[test]
    fn relative_trace_examples() {
        let f = Field::new(3, 3).unwrap();
        for x in f.elements() {
            assert_eq!(f.relative_trace(3, x).unwrap(), x);
            assert_eq!(f.relative_trace(1, x).unwrap(), Elem(f.trace(x)));
        }
        let a = f.alpha();
        let direct = f.add(f.add(a, f.pow(a, 3)), f.pow(a, 9));
        assert!(direct.0 < 3);
        assert_eq!(f.relative_trace(1, a).unwrap(), direct);
        assert_eq!(
            f.relative_trace(2, a),
            Err(Error::NotDivisor { d: 2, m: 3 })
        );
        // GF(3^6) -> GF(9) lands in the subfield fixed by x -> x^9
        let g = Field::new(3, 6).unwrap();
        for x in g.elements().step_by(37) {
            let t = g.relative_trace(2, x).unwrap();
            assert_eq!(g.pow(t, 9), t);
        }
    }

    #[test]
    fn dlog_examples() {
        let f = Field::new(2, 3).unwrap();
        assert_eq!(f.dlog(Elem::ONE).unwrap(), 0);
        assert_eq!(f.dlog(f.alpha()).unwrap(), 1);
        // alpha + 1 = alpha^3 under x^3 + x + 1
        assert_eq!(f.dlog(f.add(f.alpha(), Elem::ONE)).unwrap(), 3);
        assert_eq!(f.dlog(Elem::ZERO), Err(Error::LogOfZero));
    }

    #[test]
    fn is_square_examples() {
        let f7 = Field::new(7, 1).unwrap();
        assert!(f7.is_square(Elem::ONE).unwrap());
        assert!(!f7.is_square(Elem(3)).unwrap());
        let squares: Vec<u32> = (1..7)
            .filter(|&x| f7.is_square(Elem(x)).unwrap())
            .collect();
        assert_eq!(squares, vec![1, 2, 4]);
        let f9 = Field::new(3, 2).unwrap();
        assert!(!f9.is_square(f9.alpha()).unwrap());
        assert_eq!(f9.is_square(Elem::ZERO), Err(Error::ZeroInput));
        for x in f9.nonzero_elements() {
            assert_eq!(f9.is_square(x).unwrap(), f9.dlog(x).unwrap().is_multiple_of(2));
        }
    }

    #[test]
    fn trace_laws_exhaustive() {
        for (p, m) in [(2, 1), (2, 4), (2, 7), (3, 1), (3, 4), (5, 3), (7, 2), (2, 12)] {
            let f = Field::new(p, m).unwrap();
            let mut counts = vec![0u32; p as usize];
            for x in f.elements() {
                let t = f.trace(x);
                counts[t as usize] += 1;
                assert_eq!(f.trace(f.pow(x, p as u64)), t);
                if f.q() <= 2048 {
                    assert_eq!(Elem(t), trace_by_frobenius(&f, x));
                }
            }
            assert!(counts.iter().all(|&c| c == f.q() / p));
            let step = (f.q() / 97).max(1) as usize;
            for x in f.elements().step_by(step) {
                for y in f.elements().step_by(step) {
                    assert_eq!(f.trace(f.add(x, y)), (f.trace(x) + f.trace(y)) % p);
                }
            }
        }
    }

    #[test]
    fn alpha_is_primitive() {
        for (p, m) in [(2, 5), (2, 11), (3, 5), (3, 9), (5, 3), (13, 1), (7, 3)] {
            let f = Field::new(p, m).unwrap();
            let n = f.q() as u64 - 1;
            assert_eq!(f.pow(f.alpha(), n), Elem::ONE);
            for &r in f.order_factors() {
                assert_ne!(f.pow(f.alpha(), n / r), Elem::ONE);
            }
            for t in (0..n).step_by((n / 200).max(1) as usize) {
                assert_eq!(f.dlog(f.exp(t as i64)).unwrap() as u64, t);
            }
        }
    }

    #[test]
    fn polynomial_mode_matches_tables() {
        let cfg = FieldConfig {
            max_field_bits: 26,
            dlog_table_bits: 4,
        };
        for (p, m) in [(2, 6), (3, 4), (5, 2)] {
            let slow = Field::with_config(p, m, None, &cfg).unwrap();
            let fast = Field::new(p, m).unwrap();
            assert!(!slow.has_tables());
            assert_eq!(slow.modulus(), fast.modulus());
            for a in fast.elements() {
                assert_eq!(slow.dlog(a).ok(), fast.dlog(a).ok());
                for b in fast.elements().step_by(7) {
                    assert_eq!(slow.mul(a, b), fast.mul(a, b));
                }
            }
        }
    }

    #[test]
    fn field_axioms_small() {
        for (p, m) in [(3, 2), (2, 4), (5, 2)] {
            let f = Field::new(p, m).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                for b in f.elements() {
                    for c in f.elements().step_by(3) {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn modulus_io() {
        assert_eq!(parse_modulus("1,1,0,1").unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(format_modulus(&[1, 1, 0, 1]), "1,1,0,1");
        assert!(parse_modulus("1,x").is_err());
    }

    #[test]
    fn primitive_moduli_order() {
        let list = primitive_moduli(3, 3, 10).unwrap();
        assert_eq!(list[0], vec![1, 2, 0, 1]);
        assert!(list.len() >= 2);
        for c in &list {
            assert!(Field::with_modulus(3, 3, c).is_ok());
        }
    }
}
