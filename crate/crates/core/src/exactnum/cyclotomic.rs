//! Exact elements of cyclotomic fields `Q(zeta_N)`.
//!
//! A value is stored as rational coefficients on the power basis
//! `1, zeta, ..., zeta^(phi(N)-1)`, i.e. reduced modulo the `N`-th
//! cyclotomic polynomial. Rational values are always stored with order 1
//! so that mixing them with any field is cheap.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Integer coefficients (low degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &den);
        }
    }
    let p = Arc::new(num);
    phi_cache().write().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        q[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (cyclotomic_polynomial(n).len() - 1) as u32
}

/// An exact element of `Q(zeta_order)`. Equality lifts across orders.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    // Sorted by exponent, every exponent < phi(order), no zero coefficients.
    terms: Vec<(u32, BigRational)>,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { order: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            Cyclotomic { order: 1, terms: vec![(0, q)] }
        }
    }

    /// `num / den`; fails on a zero denominator.
    pub fn from_fraction(num: i64, den: i64) -> Result<Self, ExactError> {
        if den == 0 {
            return Err(ExactError::MalformedRational);
        }
        Ok(Self::from_rational(rat(num, den)))
    }

    /// `zeta_order^k` (negative `k` allowed).
    pub fn zeta(order: u32, k: i64) -> Self {
        assert!(order >= 1);
        let e = k.rem_euclid(order as i64) as usize;
        let mut dense = vec![BigRational::zero(); order as usize];
        dense[e] = BigRational::one();
        Self::from_dense(order, dense)
    }

    /// Normalizes a raw list of `(exponent, numerator, denominator)` terms in
    /// `Q(zeta_order)`. Exponents may be any integer; repeated exponents add.
    pub fn normalize(order: u32, raw: &[(i64, BigInt, BigInt)]) -> Result<Self, ExactError> {
        if order == 0 {
            return Err(ExactError::ZeroOrder);
        }
        let mut dense = vec![BigRational::zero(); order as usize];
        for (e, n, d) in raw {
            if d.is_zero() {
                return Err(ExactError::MalformedRational);
            }
            let slot = e.rem_euclid(order as i64) as usize;
            dense[slot] += BigRational::new(n.clone(), d.clone());
        }
        Ok(Self::from_dense(order, dense))
    }

    /// Convenience wrapper over [`Cyclotomic::normalize`] with small integers.
    pub fn from_terms(order: u32, raw: &[(i64, i64, i64)]) -> Result<Self, ExactError> {
        let big: Vec<_> = raw
            .iter()
            .map(|&(e, n, d)| (e, BigInt::from(n), BigInt::from(d)))
            .collect();
        Self::normalize(order, &big)
    }

    /// Reduces an arbitrary-degree coefficient vector in `zeta_order`.
    fn from_dense(order: u32, mut dense: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        if dense.len() > deg {
            for k in (deg..dense.len()).rev() {
                if dense[k].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut dense[k], BigRational::zero());
                for (j, &pj) in phi.iter().enumerate().take(deg) {
                    if pj != 0 {
                        let t = &c * BigRational::from_integer(BigInt::from(pj));
                        dense[k - deg + j] -= t;
                    }
                }
            }
            dense.truncate(deg);
        }
        let terms: Vec<(u32, BigRational)> = dense
            .into_iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(k, q)| (k as u32, q))
            .collect();
        let order = if terms.iter().all(|(e, _)| *e == 0) { 1 } else { order };
        Cyclotomic { order, terms }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> &[(u32, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    /// The rational value if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.order != 1 {
            return None;
        }
        Some(self.terms.first().map(|t| t.1.clone()).unwrap_or_else(BigRational::zero))
    }

    fn to_dense(&self, order: u32) -> Vec<BigRational> {
        debug_assert_eq!(order % self.order, 0);
        let step = (order / self.order) as usize;
        let mut dense = vec![BigRational::zero(); order as usize];
        for (e, q) in &self.terms {
            dense[*e as usize * step] = q.clone();
        }
        dense
    }

    /// Re-expresses the value in `Q(zeta_order)`; `order` must be a multiple
    /// of the current order.
    pub fn lift(&self, order: u32) -> Self {
        if order == self.order || self.order == 1 {
            return self.clone();
        }
        assert_eq!(order % self.order, 0, "lift to a non-multiple order");
        Self::from_dense(order, self.to_dense(order))
    }

    fn common_order(&self, other: &Self) -> u32 {
        if self.order == other.order {
            self.order
        } else if self.order == 1 {
            other.order
        } else if other.order == 1 {
            self.order
        } else {
            self.order.lcm(&other.order)
        }
    }

    fn scale_rational(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other.clone() } else { other.clone() };
        }
        let n = self.common_order(other);
        let a = self.lift(n);
        let b = other.lift(n);
        let mut out: Vec<(u32, BigRational)> = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < b.terms.len() {
            let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0);
            let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].0 < a.terms[i].0);
            if take_a {
                out.push(a.terms[i].clone());
                i += 1;
            } else if take_b {
                let (e, c) = &b.terms[j];
                out.push((*e, if negate { -c.clone() } else { c.clone() }));
                j += 1;
            } else {
                let c = if negate {
                    &a.terms[i].1 - &b.terms[j].1
                } else {
                    &a.terms[i].1 + &b.terms[j].1
                };
                if !c.is_zero() {
                    out.push((a.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        let order = if out.iter().all(|(e, _)| *e == 0) { 1 } else { n };
        Cyclotomic { order, terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.order == 1 {
            return other.scale_rational(&self.terms[0].1);
        }
        if other.order == 1 {
            return self.scale_rational(&other.terms[0].1);
        }
        let n = self.common_order(other);
        let a = self.lift(n);
        let b = other.lift(n);
        let len = a.terms.last().unwrap().0 as usize + b.terms.last().unwrap().0 as usize + 1;
        let mut dense = vec![BigRational::zero(); len];
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                dense[(*ea + *eb) as usize] += ca * cb;
            }
        }
        Self::from_dense(n, dense)
    }

    /// Galois automorphism `zeta -> zeta^k` (k coprime to the order).
    pub fn galois(&self, k: i64) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let n = self.order as i64;
        let mut dense = vec![BigRational::zero(); self.order as usize];
        for (e, c) in &self.terms {
            let slot = (*e as i64 * k).rem_euclid(n) as usize;
            dense[slot] += c.clone();
        }
        Self::from_dense(self.order, dense)
    }

    /// Complex conjugation, the automorphism `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Self::from_rational(self.terms[0].1.recip()));
        }
        // Solve (multiplication-by-self matrix) * x = e_0 over Q.
        let n = self.order;
        let deg = totient(n) as usize;
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(deg);
        let mut basis = Self::one();
        let z = Self::zeta(n, 1);
        for _ in 0..deg {
            let prod = self * &basis;
            let mut col = vec![BigRational::zero(); deg];
            for (e, c) in &prod.lift(n).terms {
                col[*e as usize] = c.clone();
            }
            cols.push(col);
            basis = &basis * &z;
        }
        // Augmented rows: m[r][c] = cols[c][r].
        let mut m: Vec<Vec<BigRational>> = (0..deg)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..deg).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..deg {
            let piv = (col..deg)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(ExactError::DivisionByZero)?;
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for v in m[col].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (v, p) in row.iter_mut().zip(pivot_row.iter()) {
                        if !p.is_zero() {
                            *v -= &f * p;
                        }
                    }
                }
            }
        }
        let dense: Vec<BigRational> = m.into_iter().map(|row| row[deg].clone()).collect();
        Ok(Self::from_dense(n, dense))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Floating-point image under `zeta_N -> exp(2 pi i / N)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.terms
            .iter()
            .map(|(e, c)| {
                let angle = 2.0 * std::f64::consts::PI * (*e as f64) / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    /// The largest numerator/denominator bit length, a cheap growth gauge.
    pub fn height_bits(&self) -> u64 {
        self.terms
            .iter()
            .map(|(_, c)| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    /// `(exponent, numerator, denominator)` triples of the canonical form.
    pub fn to_triples(&self) -> Vec<(u32, BigInt, BigInt)> {
        self.terms
            .iter()
            .map(|(e, c)| (*e, c.numer().clone(), c.denom().clone()))
            .collect()
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{}^{}", self.order, e)?,
                (_, false) => write!(f, "{mag}*z{}^{}", self.order, e)?,
            }
        }
        Ok(())
    }
}

impl PartialEq<i64> for Cyclotomic {
    fn eq(&self, other: &i64) -> bool {
        *self == Cyclotomic::from_int(*other)
    }
}

/// Equality across different orders: lift both sides to the lcm.
pub fn cyc_eq(a: &Cyclotomic, b: &Cyclotomic) -> bool {
    if a.order == b.order {
        return a.terms == b.terms;
    }
    let n = a.common_order(b);
    a.lift(n).terms == b.lift(n).terms
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        cyc_eq(self, other)
    }
}

impl Eq for Cyclotomic {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl Div<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    /// Panics on division by zero; use [`Cyclotomic::checked_div`] to recover.
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_div(rhs).expect("cyclotomic division by zero")
    }
}

impl Div<Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: Cyclotomic) -> Cyclotomic {
        &self / &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for (_, c) in self.terms.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -self.clone()
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.mul_impl(rhs);
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}
