use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::GroupError;

pub fn is_odd_prime(q: u32) -> bool {
    q > 2
        && q % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Residue class modulo an odd prime `q < 256`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FFScalar {
    value: u8,
    q: u8,
}

impl FFScalar {
    pub fn new(value: i64, q: u32) -> Result<Self, GroupError> {
        if !is_odd_prime(q) || q >= 256 {
            return Err(GroupError::UnsupportedModulus(q));
        }
        Ok(Self::reduce(value, q))
    }

    pub(crate) fn reduce(value: i64, q: u32) -> Self {
        FFScalar {
            value: value.rem_euclid(q as i64) as u8,
            q: q as u8,
        }
    }

    pub fn value(&self) -> u32 {
        self.value as u32
    }

    pub fn modulus(&self) -> u32 {
        self.q as u32
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u32) -> Self {
        let q = self.q as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q;
            }
            base = base * base % q;
            e >>= 1;
        }
        FFScalar {
            value: acc as u8,
            q: self.q,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.q as u32 - 2))
        }
    }
}

impl fmt::Debug for FFScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.q)
    }
}

impl Add for FFScalar {
    type Output = FFScalar;
    fn add(self, rhs: FFScalar) -> FFScalar {
        FFScalar::reduce(self.value as i64 + rhs.value as i64, self.q as u32)
    }
}

impl Sub for FFScalar {
    type Output = FFScalar;
    fn sub(self, rhs: FFScalar) -> FFScalar {
        FFScalar::reduce(self.value as i64 - rhs.value as i64, self.q as u32)
    }
}

impl Mul for FFScalar {
    type Output = FFScalar;
    fn mul(self, rhs: FFScalar) -> FFScalar {
        FFScalar::reduce(self.value as i64 * rhs.value as i64, self.q as u32)
    }
}

impl Neg for FFScalar {
    type Output = FFScalar;
    fn neg(self) -> FFScalar {
        FFScalar::reduce(-(self.value as i64), self.q as u32)
    }
}
