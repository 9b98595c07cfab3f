use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("field modulus {0} is not prime")]
    NotPrime(u32),
    #[error("field modulus {0} is too large (must be below 2^31)")]
    TooLarge(u32),
}

/// The prime field `F_q`. Elements are plain `u32` residues in `[0, q)`.
///
/// The field is a small `Copy` value passed alongside the data it acts on, so
/// columns and matrices do not carry their own modulus around.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u32,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.modulus)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.modulus)
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::F2
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let n = u64::from(n);
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub const F2: PrimeField = PrimeField { modulus: 2 };

    pub fn new(modulus: u32) -> Result<Self, FieldError> {
        if modulus >= 1 << 31 {
            return Err(FieldError::TooLarge(modulus));
        }
        if !is_prime(modulus) {
            return Err(FieldError::NotPrime(modulus));
        }
        Ok(Self { modulus })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.modulus
    }

    /// Reduce an arbitrary signed integer into `[0, q)`.
    #[inline]
    pub fn element(self, value: i64) -> u32 {
        value.rem_euclid(i64::from(self.modulus)) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(b)) % u64::from(self.modulus)) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.modulus)) as u32
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        let a = a % self.modulus;
        if a == 0 {
            return None;
        }
        // Extended Euclid on (a, q).
        let (mut r0, mut r1) = (i64::from(self.modulus), i64::from(a));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.element(t0))
    }

    /// `a / b`; panics when `b == 0`.
    #[inline]
    pub fn div(self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b).expect("division by zero in prime field"))
    }
}
