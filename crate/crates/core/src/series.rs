//! Truncated bivariate power series with exact integer coefficients.
//!
//! Two coordinate systems appear: `(q, t)` with exponents `(n, β)` for stable
//! pairs, and `(q0, q1)` with exponents `(v0, v1)` for quiver dimension
//! vectors. They are related by `(v0, v1) = (n, n - β)`.

use alloc::collections::BTreeMap;
use core::ops::{Add, Mul, Neg};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::windows::sod_count;
use crate::{Error, Result};

/// A power series truncated to exponents `e0 <= trunc.0`, `e1 <= trunc.1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series2 {
    terms: BTreeMap<(u32, u32), BigInt>,
    trunc: (u32, u32),
}

impl Series2 {
    pub fn zero(trunc: (u32, u32)) -> Self {
        Series2 {
            terms: BTreeMap::new(),
            trunc,
        }
    }

    pub fn one(trunc: (u32, u32)) -> Self {
        Self::monomial((0, 0), BigInt::one(), trunc)
    }

    pub fn monomial(e: (u32, u32), c: BigInt, trunc: (u32, u32)) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(e, c);
        s
    }

    /// Builds a series from terms, dropping those outside the box.
    pub fn from_terms<I>(terms: I, trunc: (u32, u32)) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), BigInt)>,
    {
        let mut s = Self::zero(trunc);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, e: (u32, u32), c: BigInt) {
        if e.0 > self.trunc.0 || e.1 > self.trunc.1 || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn trunc(&self) -> (u32, u32) {
        self.trunc
    }

    pub fn coeff(&self, e0: u32, e1: u32) -> BigInt {
        self.terms.get(&(e0, e1)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Reads `(q, t)`-exponents `(n, β)` as `(q0, q1)`-exponents `(n, n - β)`.
    /// The result is truncated to `(N, N)` where `N` bounds `n`.
    pub fn pt_to_quiver(&self) -> Result<Series2> {
        let n_max = self.trunc.0;
        let mut out = Series2::zero((n_max, n_max));
        for (&(n, beta), c) in &self.terms {
            if beta > n {
                return Err(Error::NegativeExponent { e0: n, e1: beta });
            }
            out.add_term((n, n - beta), c.clone());
        }
        Ok(out)
    }

    /// Inverse of [`Series2::pt_to_quiver`]: `(v0, v1) -> (v0, v0 - v1)`.
    pub fn quiver_to_pt(&self) -> Result<Series2> {
        let n_max = self.trunc.0;
        let mut out = Series2::zero((n_max, n_max));
        for (&(v0, v1), c) in &self.terms {
            if v1 > v0 {
                return Err(Error::NegativeExponent { e0: v0, e1: v1 });
            }
            out.add_term((v0, v0 - v1), c.clone());
        }
        Ok(out)
    }
}

fn meet(a: (u32, u32), b: (u32, u32)) -> (u32, u32) {
    (a.0.min(b.0), a.1.min(b.1))
}

impl Add for &Series2 {
    type Output = Series2;
    fn add(self, other: &Series2) -> Series2 {
        let mut out = Series2::zero(meet(self.trunc, other.trunc));
        for (&e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Mul for &Series2 {
    type Output = Series2;
    fn mul(self, other: &Series2) -> Series2 {
        let trunc = meet(self.trunc, other.trunc);
        let mut out = Series2::zero(trunc);
        for (&(a0, a1), x) in &self.terms {
            if a0 > trunc.0 || a1 > trunc.1 {
                continue;
            }
            for (&(b0, b1), y) in &other.terms {
                if a0 + b0 > trunc.0 {
                    break;
                }
                out.add_term((a0 + b0, a1 + b1), x * y);
            }
        }
        out
    }
}

impl Neg for &Series2 {
    type Output = Series2;
    fn neg(self) -> Series2 {
        Series2 {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
            trunc: self.trunc,
        }
    }
}

pub fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn sign(odd: bool) -> BigInt {
    if odd {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

/// `(1 + q0^m (-q1)^{m-1})^m` in `(q0, q1)`.
pub fn wall_factor(m: u32, trunc: (u32, u32)) -> Series2 {
    let mut s = Series2::zero(trunc);
    for l in 0..=m {
        let c = BigInt::from(big_binomial(m.into(), l.into())) * sign(l * (m - 1) % 2 == 1);
        s.add_term((l * m, l * (m - 1)), c);
    }
    s
}

/// `∏_{m=1}^{walls} (1 + q0^m (-q1)^{m-1})^m`.
pub fn dt_series(walls: u32, trunc: (u32, u32)) -> Series2 {
    (1..=walls).fold(Series2::one(trunc), |acc, m| &acc * &wall_factor(m, trunc))
}

/// `∏_{m>=1} (1 - (-q)^m t)^m` in `(q, t)`; factors with `m > trunc.0` are 1.
pub fn pt_product(trunc: (u32, u32)) -> Series2 {
    (1..=trunc.0).fold(Series2::one(trunc), |acc, m| {
        let mut factor = Series2::zero(trunc);
        for l in 0..=m {
            // (-(-q)^m t)^l has sign (-1)^{l + ml}
            let c = BigInt::from(big_binomial(m.into(), l.into())) * sign((l + m * l) % 2 == 1);
            factor.add_term((m * l, l), c);
        }
        &acc * &factor
    })
}

/// `Σ ∏_m C(m, l(m))` over `l: Z_{>=1} -> Z_{>=0}` with `Σ m·l(m) = n`, `Σ l(m) = β`.
pub fn a_coeff(n: u32, beta: u32) -> BigUint {
    let mut memo = BTreeMap::new();
    a_rec(n, beta, n, &mut memo)
}

/// Same sum restricted to parts `m <= top`.
fn a_rec(n: u32, beta: u32, top: u32, memo: &mut BTreeMap<(u32, u32, u32), BigUint>) -> BigUint {
    if top == 0 {
        return if n == 0 && beta == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if let Some(v) = memo.get(&(n, beta, top)) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    let mut l = 0;
    while l <= top && l * top <= n && l <= beta {
        let rest = a_rec(n - l * top, beta - l, top - 1, memo);
        if !rest.is_zero() {
            total += big_binomial(top.into(), l.into()) * rest;
        }
        l += 1;
    }
    memo.insert((n, beta, top), total.clone());
    total
}

/// One row of the stable pair table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtRow {
    pub n: u32,
    pub beta: u32,
    pub p: BigInt,
    pub a: BigUint,
}

/// `P_{n,β}` and `a_{n,β}` for `n <= n_max`, `β <= min(n, b_max)`.
pub fn pt_table(n_max: u32, b_max: u32) -> alloc::vec::Vec<PtRow> {
    let product = pt_product((n_max, b_max));
    let mut rows = alloc::vec::Vec::new();
    for n in 0..=n_max {
        for beta in 0..=n.min(b_max) {
            rows.push(PtRow {
                n,
                beta,
                p: product.coeff(n, beta),
                a: a_coeff(n, beta),
            });
        }
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    /// Product coefficient against the signed binomial sum.
    ProductFormula,
    /// Wall-crossing product coefficient against the product coefficient.
    WallCrossing,
    /// Iterated summand count against the binomial sum.
    SummandCount,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u32,
    pub beta: u32,
    pub pipeline: Pipeline,
    pub expected: BigInt,
    pub found: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub trunc: (u32, u32),
    pub checked: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the three computations of `a_{n,β}` on `n <= trunc.0`, `β <= trunc.1`.
pub fn crosscheck(trunc: (u32, u32)) -> Result<CrosscheckReport> {
    let (n_max, b_max) = trunc;
    let pt = pt_product(trunc);
    let dt = dt_series(n_max.max(1), (n_max, n_max));
    let mut checked = 0;
    let mut report = |n, beta, pipeline, expected: BigInt, found: BigInt| -> Option<Mismatch> {
        checked += 1;
        (expected != found).then_some(Mismatch {
            n,
            beta,
            pipeline,
            expected,
            found,
        })
    };
    for n in 0..=n_max {
        for beta in 0..=b_max {
            let a = BigInt::from(a_coeff(n, beta));
            let p = pt.coeff(n, beta);
            let signed = &a * sign((n + beta) % 2 == 1);
            let mut first = report(n, beta, Pipeline::ProductFormula, signed, p.clone());
            if beta <= n {
                first = first.or_else(|| {
                    report(
                        n,
                        beta,
                        Pipeline::WallCrossing,
                        p.clone(),
                        dt.coeff(n, n - beta),
                    )
                });
                if first.is_none() {
                    let count = sod_count(n.into(), (n - beta).into(), n.max(1).into())?;
                    first = report(n, beta, Pipeline::SummandCount, a.clone(), count.into());
                }
            }
            if let Some(m) = first {
                return Ok(CrosscheckReport {
                    trunc,
                    checked,
                    first_mismatch: Some(m),
                });
            }
        }
    }
    Ok(CrosscheckReport {
        trunc,
        checked,
        first_mismatch: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn wall_factor_expansions() {
        let t = (10, 10);
        let f1 = wall_factor(1, t);
        assert_eq!(
            f1,
            Series2::from_terms([((0, 0), big(1)), ((1, 0), big(1))], t)
        );
        let f2 = wall_factor(2, t);
        assert_eq!(f2.coeff(2, 1), big(-2));
        assert_eq!(f2.coeff(4, 2), big(1));
        assert_eq!(f2.len(), 3);
        assert_eq!(wall_factor(3, (0, 0)), Series2::one((0, 0)));
    }

    #[test]
    fn dt_examples() {
        let s = dt_series(4, (6, 6));
        assert_eq!(s.coeff(1, 0), big(1));
        assert_eq!(s.coeff(2, 1), big(-2));
        assert_eq!(s.coeff(0, 0), big(1));
    }

    #[test]
    fn dt_stabilises() {
        let t = (9, 9);
        let full = dt_series(12, t);
        for v0 in 0..=9u32 {
            let partial = dt_series(v0.max(1), t);
            for v1 in 0..=9 {
                assert_eq!(partial.coeff(v0, v1), full.coeff(v0, v1));
            }
        }
    }

    #[test]
    fn a_coeff_examples() {
        assert_eq!(a_coeff(1, 1), BigUint::one());
        assert_eq!(a_coeff(0, 0), BigUint::one());
        assert_eq!(a_coeff(2, 1), BigUint::from(2u32));
        for n in 1..=15 {
            assert!(a_coeff(n, 0).is_zero());
            for beta in n + 1..n + 4 {
                assert!(a_coeff(n, beta).is_zero());
            }
        }
    }

    /// Oracle: enumerate every `l` directly as a vector of exponents.
    fn a_brute(n: u32, beta: u32) -> u64 {
        fn rec(m: u32, n_left: u32, b_left: u32, n: u32) -> u64 {
            if m > n {
                return u64::from(n_left == 0 && b_left == 0);
            }
            (0..=m)
                .take_while(|l| l * m <= n_left && *l <= b_left)
                .map(|l| {
                    crate::binomial(m.into(), l.into()) * rec(m + 1, n_left - l * m, b_left - l, n)
                })
                .sum()
        }
        rec(1, n, beta, n)
    }

    #[test]
    fn a_coeff_matches_enumeration() {
        for n in 0..=14 {
            for beta in 0..=10 {
                assert_eq!(
                    a_coeff(n, beta),
                    BigUint::from(a_brute(n, beta)),
                    "({n},{beta})"
                );
            }
        }
    }

    #[test]
    fn pt_product_examples() {
        let s = pt_product((4, 3));
        assert_eq!(s.coeff(1, 1), big(1));
        assert_eq!(s.coeff(2, 1), big(-2));
        assert_eq!(s.coeff(2, 2), big(0));
        assert_eq!(s.coeff(3, 1), big(3));
        assert_eq!(s.coeff(3, 2), big(-2));
        for n in 0..=4 {
            assert_eq!(s.coeff(n, 0), big(i64::from(n == 0)));
        }
    }

    #[test]
    fn pt_sign_pattern() {
        let s = pt_product((12, 8));
        for ((n, beta), c) in s.terms() {
            assert!(!(c * sign((n + beta) % 2 == 1)).is_negative());
        }
    }

    #[test]
    fn remap_round_trip() {
        let s = pt_product((6, 6));
        let q = s.pt_to_quiver().unwrap();
        assert_eq!(q.quiver_to_pt().unwrap(), s);
        let bad = Series2::monomial((1, 2), big(1), (3, 3));
        assert_eq!(
            bad.pt_to_quiver(),
            Err(Error::NegativeExponent { e0: 1, e1: 2 })
        );
    }

    #[test]
    fn crosscheck_box() {
        let r = crosscheck((12, 8)).unwrap();
        assert!(r.passed(), "{:?}", r.first_mismatch);
        assert!(r.checked > 13 * 9);
        let origin = crosscheck((0, 0)).unwrap();
        assert!(origin.passed());
        assert_eq!(
            pt_table(0, 0),
            vec![PtRow {
                n: 0,
                beta: 0,
                p: big(1),
                a: BigUint::one()
            }]
        );
    }

    #[test]
    fn table_rows() {
        let rows = pt_table(3, 2);
        let get = |n, b| {
            rows.iter()
                .find(|r| r.n == n && r.beta == b)
                .unwrap()
                .p
                .clone()
        };
        assert_eq!(get(1, 1), big(1));
        assert_eq!(get(2, 1), big(-2));
        assert_eq!(get(2, 2), big(0));
        assert_eq!(get(3, 1), big(3));
        assert!(rows.iter().all(|r| r.beta <= r.n));
    }

    #[test]
    fn truncation_is_applied() {
        let t = (3, 2);
        let x = Series2::monomial((2, 1), big(5), t);
        let sq = &x * &x;
        assert!(sq.is_empty());
        assert_eq!(Series2::monomial((4, 0), big(1), t), Series2::zero(t));
        assert!((&x + &(-&x)).is_empty());
    }

    fn arb_series() -> impl Strategy<Value = Series2> {
        proptest::collection::vec(((0u32..6, 0u32..6), -20i64..20), 0..10).prop_map(|ts| {
            Series2::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c))), (5, 4))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &Series2::one((5, 4)), a.clone());
            let stored: Vec<_> = a.terms().map(|(e, _)| e).collect();
            prop_assert!(stored.iter().all(|e| e.0 <= 5 && e.1 <= 4));
        }
    }
}
