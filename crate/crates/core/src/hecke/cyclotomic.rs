//! Exact arithmetic in the cyclotomic field ℚ(ζ_e), elements stored as
//! rational polynomials in ζ reduced modulo Φ_e.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Largest supported root-of-unity order.
pub const MAX_ORDER: usize = 32;

const fn cyclotomic_table() -> [[i64; MAX_ORDER + 1]; MAX_ORDER + 1] {
    let mut table = [[0i64; MAX_ORDER + 1]; MAX_ORDER + 1];
    let mut e = 1;
    while e <= MAX_ORDER {
        // x^e - 1, lowest degree first
        let mut num = [0i64; MAX_ORDER + 1];
        num[0] = -1;
        num[e] = 1;
        let mut deg = e;
        let mut d = 1;
        while d < e {
            if e % d == 0 {
                let phi = table[d];
                let mut dd = 0;
                let mut k = 0;
                while k <= MAX_ORDER {
                    if phi[k] != 0 {
                        dd = k;
                    }
                    k += 1;
                }
                // exact division by the monic Φ_d
                let mut quot = [0i64; MAX_ORDER + 1];
                let mut top = deg;
                while top >= dd {
                    let c = num[top];
                    quot[top - dd] = c;
                    let mut j = 0;
                    while j <= dd {
                        num[top - dd + j] -= c * phi[j];
                        j += 1;
                    }
                    if top == 0 {
                        break;
                    }
                    top -= 1;
                }
                num = quot;
                deg -= dd;
            }
            d += 1;
        }
        table[e] = num;
        e += 1;
    }
    table
}

static PHI: [[i64; MAX_ORDER + 1]; MAX_ORDER + 1] = cyclotomic_table();

/// Coefficients of the `e`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(e: usize) -> Result<Vec<i64>> {
    if e == 0 || e > MAX_ORDER {
        return Err(Error::InvalidParameter(alloc::format!("root of unity order {e} unsupported")));
    }
    let row = &PHI[e];
    let deg = (0..=MAX_ORDER).rev().find(|&k| row[k] != 0).unwrap_or(0);
    Ok(row[..=deg].to_vec())
}

/// Euler's totient as the degree of Φ_e.
pub fn degree(e: usize) -> usize {
    (0..=MAX_ORDER).rev().find(|&k| PHI[e][k] != 0).unwrap_or(0)
}

/// An element of ℚ(ζ_e). Coefficients are trimmed of trailing zeros, so zero
/// is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    e: u16,
    c: Vec<Q>,
}

impl Cyclotomic {
    pub fn zero(e: usize) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&e));
        Cyclotomic { e: e as u16, c: Vec::new() }
    }

    pub fn one(e: usize) -> Self {
        Self::from_int(e, 1)
    }

    pub fn from_int(e: usize, k: i64) -> Self {
        Self::from_rational(e, Q::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(e: usize, r: Q) -> Self {
        let mut x = Cyclotomic { e: e as u16, c: vec![r] };
        x.trim();
        x
    }

    /// The primitive root ζ_e.
    pub fn zeta(e: usize) -> Self {
        Self::zeta_pow(e, 1)
    }

    /// `ζ_e^k` for any integer `k`.
    pub fn zeta_pow(e: usize, k: i64) -> Self {
        let k = k.rem_euclid(e as i64) as usize;
        let mut c = vec![Q::zero(); k + 1];
        c[k] = Q::one();
        let mut x = Cyclotomic { e: e as u16, c };
        x.reduce();
        x
    }

    /// Builds from coefficients of `1, ζ, ζ², …` (any length).
    pub fn from_coeffs(e: usize, c: Vec<Q>) -> Self {
        let mut x = Cyclotomic { e: e as u16, c };
        x.reduce();
        x
    }

    pub fn order(&self) -> usize {
        self.e as usize
    }

    /// Coefficients padded to the field degree.
    pub fn coeffs(&self) -> Vec<Q> {
        let mut c = self.c.clone();
        c.resize(degree(self.order()), Q::zero());
        c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Rational value if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Q> {
        match self.c.len() {
            0 => Some(Q::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(Zero::is_zero) {
            self.c.pop();
        }
    }

    fn reduce(&mut self) {
        let e = self.order();
        let phi = &PHI[e];
        let d = degree(e);
        while self.c.len() > d {
            let top = self.c.len() - 1;
            let lead = self.c.pop().unwrap();
            if !lead.is_zero() {
                for (j, &p) in phi.iter().enumerate().take(d) {
                    if p != 0 {
                        self.c[top - d + j] -= &lead * BigInt::from(p);
                    }
                }
            }
        }
        self.trim();
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse through the extended Euclidean algorithm in ℚ[x].
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = self.order();
        let phi: Vec<Q> =
            cyclotomic_polynomial(e)?.into_iter().map(|k| Q::from_integer(BigInt::from(k))).collect();
        // invariants: r0 = s0·a (mod Φ), r1 = s1·a (mod Φ)
        let (mut r0, mut s0) = (phi, Vec::<Q>::new());
        let (mut r1, mut s1) = (self.c.clone(), vec![Q::one()]);
        while r1.len() != 1 {
            let (quot, rem) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = core::mem::replace(&mut r1, rem);
            s0 = core::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                return Err(Error::DivisionByZero);
            }
        }
        let inv_c = r1[0].recip();
        let c = s1.into_iter().map(|x| x * &inv_c).collect();
        Ok(Cyclotomic::from_coeffs(e, c))
    }

    fn check_same_field(&self, other: &Self) {
        debug_assert_eq!(self.e, other.e, "mixing cyclotomic fields");
    }
}

fn poly_trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(out)
}

fn poly_divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].recip();
    if rem.len() < b.len() {
        return (Vec::new(), poly_trim(rem));
    }
    let mut quot = vec![Q::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead;
        if !c.is_zero() {
            for j in 0..=db {
                rem[k + j] -= &c * &b[j];
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (poly_trim(quot), poly_trim(rem))
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => write!(f, "z^{k}")?,
                _ => write!(f, "{a}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        self.check_same_field(rhs);
        if self.c.len() < rhs.c.len() {
            self.c.resize(rhs.c.len(), Q::zero());
        }
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        self.check_same_field(rhs);
        if self.c.len() < rhs.c.len() {
            self.c.resize(rhs.c.len(), Q::zero());
        }
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a -= b;
        }
        self.trim();
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero(self.order());
        }
        if let Some(r) = rhs.as_rational() {
            let mut out = self.clone();
            if !r.is_one() {
                out.c.iter_mut().for_each(|x| *x *= &r);
            }
            return out;
        }
        if let Some(r) = self.as_rational() {
            let mut out = rhs.clone();
            if !r.is_one() {
                out.c.iter_mut().for_each(|x| *x *= &r);
            }
            return out;
        }
        let mut out = Cyclotomic { e: self.e, c: poly_mul(&self.c, &rhs.c) };
        out.reduce();
        out
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { e: self.e, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        self.c.iter_mut().for_each(|x| *x = -core::mem::take(x));
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2).unwrap(), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3).unwrap(), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4).unwrap(), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6).unwrap(), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12).unwrap(), vec![1, 0, -1, 0, 1]);
        assert_eq!(degree(30), 8);
    }

    #[test]
    fn zeta_relations() {
        let one = Cyclotomic::one(2);
        assert!((&Cyclotomic::zeta(2) + &one).is_zero());
        let z = Cyclotomic::zeta(3);
        let s = &(&(&z * &z) + &z) + &Cyclotomic::one(3);
        assert!(s.is_zero());
        for e in 2..=12 {
            let z = Cyclotomic::zeta(e);
            assert!((&z * &Cyclotomic::zeta_pow(e, e as i64 - 1)).is_one());
            assert!(z.pow(e as u32).is_one());
            for k in 1..e {
                assert!(!z.pow(k as u32).is_one(), "e = {e}, k = {k}");
            }
        }
    }

    #[test]
    fn inverses() {
        for e in [2usize, 3, 4, 5, 6, 7, 12] {
            let z = Cyclotomic::zeta(e);
            let x = &(&z + &Cyclotomic::from_int(e, 3)) * &z.pow(2);
            let y = x.inverse().unwrap();
            assert!((&x * &y).is_one());
        }
        assert_eq!(Cyclotomic::zero(3).inverse(), Err(Error::DivisionByZero));
        // 1 + ζ_2 = 0 is not invertible; 1 - ζ_3 is
        assert!((&Cyclotomic::one(3) - &Cyclotomic::zeta(3)).inverse().is_ok());
    }
}
