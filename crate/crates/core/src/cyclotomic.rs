//! Exact arithmetic in Z[zeta_p] and additive character sums.
//!
//! A `CycInt` is stored on the basis `zeta, zeta^2, ..., zeta^{p-1}`; the
//! constant 1 is `-(zeta + ... + zeta^{p-1})`. This basis is a Z-basis of
//! Z[zeta_p], so equality of values is equality of coefficient vectors, and
//! the Galois automorphism `zeta -> zeta^y` is a coordinate permutation.
//! For p = 2 the single coordinate is the coefficient of `zeta_2 = -1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u32,
    /// `coeffs[k - 1]` is the coefficient of `zeta^k`.
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(p: u32) -> CycInt {
        CycInt {
            p,
            coeffs: vec![BigInt::zero(); p as usize - 1],
        }
    }

    /// The rational integer `n`.
    pub fn from_int(p: u32, n: i64) -> CycInt {
        CycInt {
            p,
            coeffs: vec![BigInt::from(-n); p as usize - 1],
        }
    }

    /// `zeta_p^k`.
    pub fn root_power(p: u32, k: i64) -> CycInt {
        let k = k.rem_euclid(p as i64) as usize;
        if k == 0 {
            return CycInt::from_int(p, 1);
        }
        let mut out = CycInt::zero(p);
        out.coeffs[k - 1] = BigInt::from(1);
        out
    }

    /// `sum_a counts[a] * zeta^a` for `a` in `[0, p)`.
    pub fn from_value_counts(p: u32, counts: &[u64]) -> CycInt {
        assert_eq!(counts.len(), p as usize, "one count per residue");
        let base = BigInt::from(counts[0]);
        CycInt {
            p,
            coeffs: counts[1..]
                .iter()
                .map(|&c| BigInt::from(c) - &base)
                .collect(),
        }
    }

    /// Build from explicit basis coordinates (coefficients of zeta^1..zeta^{p-1}).
    pub fn from_coeffs(p: u32, coeffs: Vec<BigInt>) -> CycInt {
        assert_eq!(coeffs.len(), p as usize - 1);
        CycInt { p, coeffs }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as `i64`, if they fit.
    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    fn check(&self, other: &CycInt) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::MixedPrimes(self.p, other.p))
        }
    }

    pub fn add(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        Ok(CycInt {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &CycInt) -> Result<CycInt> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let p = self.p as usize;
        // full[e] collects the coefficient of zeta^e, e in [0, p)
        let mut full = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                full[(i + 1 + j + 1) % p] += a * b;
            }
        }
        let c0 = full[0].clone();
        Ok(CycInt {
            p: self.p,
            coeffs: full[1..].iter().map(|c| c - &c0).collect(),
        })
    }

    /// Apply the automorphism `zeta -> zeta^y`, `y` a unit mod p.
    pub fn galois(&self, y: u32) -> CycInt {
        let p = self.p as usize;
        let y = y as usize % p;
        assert!(y != 0, "automorphism index must be a unit");
        let mut coeffs = vec![BigInt::zero(); p - 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(k + 1) * y % p - 1] = c.clone();
        }
        CycInt { p: self.p, coeffs }
    }

    /// `sum_{y in GF(p)*} sigma_y(self)`; always rational.
    pub fn galois_trace(&self) -> CycInt {
        (1..self.p)
            .map(|y| self.galois(y))
            .fold(CycInt::zero(self.p), |acc, t| {
                acc.add(&t).expect("same prime")
            })
    }

    /// The integer this value equals, if it is rational.
    pub fn is_rational(&self) -> Option<BigInt> {
        let first = &self.coeffs[0];
        if self.coeffs.iter().all(|c| c == first) {
            Some(-first)
        } else {
            None
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.is_rational().and_then(|n| n.to_i64())
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{c}*z^{}", k + 1))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `zeta_p^k`.
pub fn cyc_root_power(p: u32, k: i64) -> CycInt {
    CycInt::root_power(p, k)
}

pub fn cyc_add(a: &CycInt, b: &CycInt) -> Result<CycInt> {
    a.add(b)
}

pub fn cyc_mul(a: &CycInt, b: &CycInt) -> Result<CycInt> {
    a.mul(b)
}

pub fn is_rational(a: &CycInt) -> Option<BigInt> {
    a.is_rational()
}

/// `chi_b(S) = sum_{x in S} zeta_p^{Tr(b x)}`.
pub fn char_sum(field: &Field, set: &[Elem], b: Elem) -> CycInt {
    let mut counts = vec![0u64; field.p() as usize];
    for &x in set {
        counts[field.trace(field.mul(b, x)) as usize] += 1;
    }
    CycInt::from_value_counts(field.p(), &counts)
}

/// `sum_{x in GF(q)} zeta_p^{g(x)}` for a GF(p)-valued function `g`.
pub fn value_sum<F: Fn(Elem) -> u32>(field: &Field, g: F) -> CycInt {
    let mut counts = vec![0u64; field.p() as usize];
    for x in field.elements() {
        counts[g(x) as usize % field.p() as usize] += 1;
    }
    CycInt::from_value_counts(field.p(), &counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(p: u32, v: &[i64]) -> CycInt {
        CycInt::from_coeffs(p, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn root_power_examples() {
        assert_eq!(cyc_root_power(5, 0), c(5, &[-1, -1, -1, -1]));
        assert_eq!(cyc_root_power(5, 2), c(5, &[0, 1, 0, 0]));
        assert_eq!(cyc_root_power(2, 1).as_i64(), Some(-1));
        assert_eq!(cyc_root_power(2, 0).as_i64(), Some(1));
    }

    #[test]
    fn ring_examples() {
        let s = cyc_add(&cyc_root_power(5, 1), &cyc_root_power(5, 4)).unwrap();
        assert_eq!(s, c(5, &[1, 0, 0, 1]));
        let prod = cyc_mul(&cyc_root_power(5, 1), &cyc_root_power(5, 4)).unwrap();
        assert_eq!(prod.as_i64(), Some(1));
        let one = CycInt::from_int(3, 1);
        let a = one.add(&cyc_root_power(3, 1)).unwrap();
        let b = one.add(&cyc_root_power(3, 2)).unwrap();
        assert_eq!(cyc_mul(&a, &b).unwrap().as_i64(), Some(1));
        assert_eq!(
            cyc_add(&one, &CycInt::from_int(5, 1)),
            Err(Error::MixedPrimes(3, 5))
        );
    }

    #[test]
    fn rationality() {
        assert_eq!(is_rational(&CycInt::from_int(7, 1)), Some(BigInt::from(1)));
        assert_eq!(is_rational(&cyc_root_power(5, 1)), None);
        assert_eq!(CycInt::from_int(5, -12).as_i64(), Some(-12));
        assert_eq!(
            format!("{}", cyc_root_power(3, 2)),
            "0*z^1 + 1*z^2"
        );
    }

    #[test]
    fn char_sum_examples() {
        let f = Field::new(5, 1).unwrap();
        let all: Vec<Elem> = f.elements().collect();
        assert_eq!(char_sum(&f, &all, Elem(1)).as_i64(), Some(0));
        assert_eq!(char_sum(&f, &[Elem::ZERO], Elem(3)).as_i64(), Some(1));
        assert_eq!(char_sum(&f, &[Elem(1), Elem(4)], Elem(1)), c(5, &[1, 0, 0, 1]));
        let g = Field::new(3, 3).unwrap();
        let all: Vec<Elem> = g.elements().collect();
        for b in g.nonzero_elements() {
            assert_eq!(char_sum(&g, &all, b).as_i64(), Some(0));
        }
        let some: Vec<Elem> = g.elements().step_by(4).collect();
        assert_eq!(char_sum(&g, &some, Elem::ZERO).as_i64(), Some(some.len() as i64));
    }

    #[test]
    fn rank_two_form_on_gf9() {
        // Tr(x^2) on GF(9): sum over y in {1,2} of sum_x zeta^{y Tr(x^2)}
        let f = Field::new(3, 2).unwrap();
        let s = value_sum(&f, |x| f.trace(f.mul(x, x)));
        let total = s.galois_trace().as_i64().unwrap();
        assert_eq!(total.abs(), 6);
    }

    #[test]
    fn galois_orbit_sums_are_rational() {
        for (p, m) in [(3, 2), (5, 2), (7, 1), (3, 3)] {
            let f = Field::new(p, m).unwrap();
            let set: Vec<Elem> = f.elements().filter(|x| x.0 % 3 == 1).collect();
            let mut acc = CycInt::zero(p);
            for y in 1..p {
                let scaled: Vec<Elem> = set.iter().map(|&x| f.scale(y, x)).collect();
                acc = acc.add(&char_sum(&f, &scaled, Elem::ONE)).unwrap();
            }
            assert!(acc.is_rational().is_some());
            assert_eq!(acc, char_sum(&f, &set, Elem::ONE).galois_trace());
        }
    }

    #[test]
    fn disjoint_union_additivity() {
        let f = Field::new(3, 3).unwrap();
        let (a, b): (Vec<Elem>, Vec<Elem>) = f.elements().partition(|x| x.0 % 2 == 0);
        let all: Vec<Elem> = f.elements().collect();
        for beta in f.elements().step_by(5) {
            let lhs = char_sum(&f, &all, beta);
            let rhs = char_sum(&f, &a, beta).add(&char_sum(&f, &b, beta)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    fn arb_cyc() -> impl Strategy<Value = (u32, Vec<i64>, Vec<i64>, Vec<i64>)> {
        prop::sample::select(vec![2u32, 3, 5, 7, 11, 13]).prop_flat_map(|p| {
            let v = || prop::collection::vec(-10i64..=10, p as usize - 1);
            (Just(p), v(), v(), v())
        })
    }

    proptest! {
        #[test]
        fn mul_distributes((p, a, b, cc) in arb_cyc()) {
            let (a, b, cc) = (c(p, &a), c(p, &b), c(p, &cc));
            let lhs = a.mul(&b.add(&cc).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&cc).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_commutes_and_one_is_identity((p, a, b, _c) in arb_cyc()) {
            let (a, b) = (c(p, &a), c(p, &b));
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&CycInt::from_int(p, 1)).unwrap(), a);
        }
    }
}
