//! Exact arithmetic in the cyclotomic field `Q(zeta_p)` for a prime `p`.
//!
//! Elements are stored in the basis `1, zeta, ..., zeta^{p-2}`, reduced modulo
//! `1 + x + ... + x^{p-1}`. The representation is unique, so equality is a
//! plain coefficient comparison. For `p = 2` the field is just `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qarith::is_prime;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    p: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    fn check_prime(p: u32) -> Result<()> {
        if is_prime(p as u64) {
            Ok(())
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    pub fn zero(p: u32) -> Self {
        debug_assert!(is_prime(p as u64));
        Cyclotomic { p, coeffs: vec![BigRational::zero(); (p - 1) as usize] }
    }

    pub fn one(p: u32) -> Self {
        Self::from_rational(p, BigRational::one())
    }

    pub fn from_rational(p: u32, r: BigRational) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(p: u32, n: impl Into<BigInt>) -> Self {
        Self::from_rational(p, BigRational::from_integer(n.into()))
    }

    /// `zeta_p^e` in canonical form.
    pub fn root(p: u32, e: i64) -> Result<Self> {
        Self::check_prime(p)?;
        let e = e.rem_euclid(p as i64) as usize;
        let mut full = vec![BigRational::zero(); p as usize];
        full[e] = BigRational::one();
        Ok(Self::from_full(p, full))
    }

    /// Reduces a coefficient vector over `1, zeta, ..., zeta^{p-1}`.
    fn from_full(p: u32, mut full: Vec<BigRational>) -> Self {
        debug_assert_eq!(full.len(), p as usize);
        let top = full.pop().unwrap();
        if !top.is_zero() {
            for c in full.iter_mut() {
                *c -= &top;
            }
        }
        Cyclotomic { p, coeffs: full }
    }

    pub fn conductor(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.p, other.p))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cyclotomic { p: self.p, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Cyclotomic { p: self.p, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let p = self.p as usize;
        if p == 2 {
            return Ok(Self::from_rational(2, &self.coeffs[0] * &other.coeffs[0]));
        }
        let mut full = vec![BigRational::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[(i + j) % p] += a * b;
                }
            }
        }
        Ok(Self::from_full(self.p, full))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic { p: self.p, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Image under the automorphism `zeta -> zeta^j`, `j` coprime to `p`.
    pub fn galois(&self, j: u32) -> Self {
        let p = self.p as usize;
        let mut full = vec![BigRational::zero(); p];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                full[(i * j as usize) % p] += c;
            }
        }
        Self::from_full(self.p, full)
    }

    /// Complex conjugation, `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        if self.p == 2 {
            return self.clone();
        }
        self.galois(self.p - 1)
    }

    /// `|a|^2 = a * conj(a)`.
    pub fn abs_sq(&self) -> Self {
        self * &self.conj()
    }

    /// Field norm down to `Q`: the product of all Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let mut acc = self.clone();
        for j in 2..self.p {
            acc = &acc * &self.galois(j);
        }
        acc.as_rational().cloned().expect("field norm is rational")
    }

    /// Multiplicative inverse via `a^{-1} = (prod_{j != 1} sigma_j(a)) / N(a)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut cofactor = Self::one(self.p);
        for j in 2..self.p {
            cofactor = &cofactor * &self.galois(j);
        }
        let n = (self * &cofactor).as_rational().cloned().expect("field norm is rational");
        Ok(cofactor.scale(&n.recip()))
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    /// Panics on mismatched conductors; use [`Cyclotomic::checked_add`] to handle that case.
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_add(rhs).unwrap()
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_sub(rhs).unwrap()
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_mul(rhs).unwrap()
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Renders a rational as `"num/den"`.
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("p", &self.p)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(rational_string).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "z{}", self.p)?
                    } else {
                        write!(f, "z{}^{i}", self.p)?
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({})", self)
    }
}
