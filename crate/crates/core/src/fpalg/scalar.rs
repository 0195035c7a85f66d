use std::fmt;

use crate::error::{invalid, Result};

/// A validated prime modulus `p`, the characteristic of `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    /// Binary field, the common case for qubit codes.
    pub const TWO: Modulus = Modulus(2);

    /// Rejects anything that is not a prime.
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Modulus(p))
        } else {
            Err(invalid(format!("modulus {p} is not prime")))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_binary(self) -> bool {
        self.0 == 2
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element (Fermat).
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.0), "inverse of zero");
        self.pow(a, self.0 as u64 - 2)
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    /// Number of field elements, `p`, as a usize.
    pub fn order(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_p` carrying its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    modulus: Modulus,
}

impl FpScalar {
    pub fn new(value: u32, modulus: Modulus) -> Self {
        FpScalar {
            value: value % modulus.get(),
            modulus,
        }
    }

    pub fn zero(modulus: Modulus) -> Self {
        FpScalar { value: 0, modulus }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        for p in [2, 3, 5, 7, 11, 13, 65_521] {
            assert!(Modulus::new(p).is_ok(), "{p}");
        }
        for c in [0, 1, 4, 6, 9, 15, 65_519 * 3] {
            assert!(Modulus::new(c).is_err(), "{c}");
        }
    }

    #[test]
    fn field_arithmetic_mod_five() {
        let m = Modulus::new(5).unwrap();
        assert_eq!(m.add(3, 4), 2);
        assert_eq!(m.sub(1, 3), 3);
        assert_eq!(m.neg(2), 3);
        assert_eq!(m.neg(0), 0);
        assert_eq!(m.mul(3, 4), 2);
        for a in 1..5 {
            assert_eq!(m.mul(a, m.inv(a)), 1);
        }
        assert_eq!(m.reduce(-7), 3);
    }

    #[test]
    fn scalar_reduces() {
        let s = FpScalar::new(7, Modulus::new(3).unwrap());
        assert_eq!(s.value(), 1);
        assert!(FpScalar::zero(Modulus::TWO).is_zero());
    }
}
